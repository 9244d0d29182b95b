//! The cubed decomposition of an alternating link exterior: one cube above
//! and one below each crossing, glued along the regions of the diagram.
//!
//! Local cube vertices: `0..4` are the equatorial vertices `eq_s` (one per
//! slot of the crossing), `4..8` the outer vertices `out_s` on the top
//! (upper cube) or bottom (lower cube) face.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::diagram::{self, AlternatingDiagram, Color, Corner, Dart, DiagramError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubingError {
    #[error("diagram is not prime")]
    NotPrime,
    #[error("diagram is not reduced")]
    NotReduced,
    #[error("gluing construction failed: {0}")]
    Gluing(String),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("vertex {0} is not an inner vertex")]
    NotInner(usize),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("link is not simplicial: {0}")]
    NotSimplicial(LinkDefect),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Upper,
    Lower,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cube {
    pub crossing: usize,
    pub level: Level,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Face {
    /// The square in the projection plane shared by the two cubes of a crossing.
    Equator,
    /// Top face of an upper cube, bottom face of a lower one.
    Outer,
    /// Vertical face at corner `k`.
    Side(usize),
}

impl Face {
    fn index(self) -> usize {
        match self {
            Face::Equator => 0,
            Face::Outer => 1,
            Face::Side(k) => 2 + k,
        }
    }

    const ALL: [Face; 6] = [Face::Equator, Face::Outer, Face::Side(0), Face::Side(1), Face::Side(2), Face::Side(3)];

    /// Vertices in cyclic order.
    pub fn vertices(self) -> [usize; 4] {
        match self {
            Face::Equator => [0, 1, 2, 3],
            Face::Outer => [4, 5, 6, 7],
            Face::Side(k) => [k, (k + 1) % 4, 4 + (k + 1) % 4, 4 + k],
        }
    }
}

/// Local edges: `s` joins eq_s and eq_{s+1}, `4+s` joins out_s and out_{s+1},
/// `8+s` joins eq_s and out_s.
fn edge_ends(e: usize) -> [usize; 2] {
    let s = e % 4;
    match e / 4 {
        0 => [s, (s + 1) % 4],
        1 => [4 + s, 4 + (s + 1) % 4],
        _ => [s, 4 + s],
    }
}

fn edge_between(a: usize, b: usize) -> usize {
    (0..12).find(|&e| {
        let [p, q] = edge_ends(e);
        (p == a && q == b) || (p == b && q == a)
    })
    .expect("vertices of a face are joined by a cube edge")
}

fn incident_edges(v: usize) -> [usize; 3] {
    let s = v % 4;
    if v < 4 {
        [s, (s + 3) % 4, 8 + s]
    } else {
        [4 + s, 4 + (s + 3) % 4, 8 + s]
    }
}

fn face_edges_at(f: Face, v: usize) -> [usize; 2] {
    let vs = f.vertices();
    let i = vs.iter().position(|&w| w == v).expect("vertex on face");
    [edge_between(v, vs[(i + 1) % 4]), edge_between(v, vs[(i + 3) % 4])]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FaceRef {
    pub cube: usize,
    pub face: Face,
}

/// Identification of two cube faces; `pairs` maps each local vertex of the
/// first face to a local vertex of the second.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gluing {
    pub first: FaceRef,
    pub second: FaceRef,
    pub pairs: [(usize, usize); 4],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MidsquareKind {
    Black,
    White,
    /// Parallel to the boundary face of the cube.
    Peripheral,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    pub kind: MidsquareKind,
    /// Cubes whose midsquare of this kind belongs to the hyperplane.
    pub cubes: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CubedComplex {
    pub cubes: Vec<Cube>,
    pub gluings: Vec<Gluing>,
    corner_colors: Vec<[Color; 4]>,
    region_count: usize,
    component_count: usize,
    vertex_of: Vec<[usize; 8]>,
    vertex_count: usize,
    edge_of: Vec<[usize; 12]>,
    edge_count: usize,
    end_of: Vec<[usize; 24]>,
    corner_of: Vec<[usize; 24]>,
    boundary_faces: Vec<FaceRef>,
    /// Inner edge class of each region, from the equatorial edge at one of its corners.
    region_edge: Vec<usize>,
}

fn classes(uf: &UnionFind<usize>, n: usize) -> (Vec<usize>, usize) {
    let mut dense = HashMap::new();
    let ids = (0..n)
        .map(|i| {
            let root = uf.find(i);
            let next = dense.len();
            *dense.entry(root).or_insert(next)
        })
        .collect();
    (ids, dense.len())
}

impl CubedComplex {
    fn assemble(
        cubes: Vec<Cube>,
        gluings: Vec<Gluing>,
        corner_colors: Vec<[Color; 4]>,
        region_count: usize,
        component_count: usize,
        region_corner: Vec<Corner>,
    ) -> Self {
        let n = cubes.len();
        let mut verts = UnionFind::new(n * 8);
        let mut edges = UnionFind::new(n * 12);
        let mut ends = UnionFind::new(n * 24);
        let mut corners = UnionFind::new(n * 24);
        let mut glued = BTreeSet::new();
        for g in &gluings {
            let (a, b) = (g.first.cube, g.second.cube);
            glued.insert(g.first);
            glued.insert(g.second);
            let image = |v: usize| g.pairs.iter().find(|p| p.0 == v).map(|p| p.1).expect("face vertex");
            for &(p, q) in &g.pairs {
                verts.union(a * 8 + p, b * 8 + q);
                let pos_a = g.first.face.vertices().iter().position(|&w| w == p).unwrap();
                let pos_b = g.second.face.vertices().iter().position(|&w| w == q).unwrap();
                corners.union(a * 24 + g.first.face.index() * 4 + pos_a, b * 24 + g.second.face.index() * 4 + pos_b);
                for e in face_edges_at(g.first.face, p) {
                    let [s, t] = edge_ends(e);
                    let other = if s == p { t } else { s };
                    let f = edge_between(q, image(other));
                    edges.union(a * 12 + e, b * 12 + f);
                    let end_a = if s == p { 0 } else { 1 };
                    let end_b = if edge_ends(f)[0] == q { 0 } else { 1 };
                    ends.union(a * 24 + e * 2 + end_a, b * 24 + f * 2 + end_b);
                }
            }
        }
        let (vertex_ids, vertex_count) = classes(&verts, n * 8);
        let (edge_ids, edge_count) = classes(&edges, n * 12);
        let (end_ids, _) = classes(&ends, n * 24);
        let (corner_ids, _) = classes(&corners, n * 24);
        let chunk = |ids: &[usize], size: usize| -> Vec<Vec<usize>> { ids.chunks(size).map(|c| c.to_vec()).collect() };
        let vertex_of = chunk(&vertex_ids, 8).into_iter().map(|c| c.try_into().unwrap()).collect();
        let edge_of: Vec<[usize; 12]> = chunk(&edge_ids, 12).into_iter().map(|c| c.try_into().unwrap()).collect();
        let end_of = chunk(&end_ids, 24).into_iter().map(|c| c.try_into().unwrap()).collect();
        let corner_of = chunk(&corner_ids, 24).into_iter().map(|c| c.try_into().unwrap()).collect();
        let boundary_faces = (0..n)
            .flat_map(|c| Face::ALL.iter().map(move |&face| FaceRef { cube: c, face }))
            .filter(|f| !glued.contains(f))
            .collect();
        let region_edge = region_corner.iter().map(|c| edge_of[2 * c.crossing][c.index]).collect();
        CubedComplex {
            cubes,
            gluings,
            corner_colors,
            region_count,
            component_count,
            vertex_of,
            vertex_count,
            edge_of,
            edge_count,
            end_of,
            corner_of,
            boundary_faces,
            region_edge,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.corner_colors.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertex(&self, cube: usize, local: usize) -> usize {
        self.vertex_of[cube][local]
    }

    pub fn boundary_faces(&self) -> &[FaceRef] {
        &self.boundary_faces
    }

    fn boundary_vertex_set(&self) -> BTreeSet<usize> {
        self.boundary_faces
            .iter()
            .flat_map(|f| f.face.vertices().map(|v| self.vertex_of[f.cube][v]))
            .collect()
    }

    /// Vertices not on the boundary.
    pub fn inner_vertices(&self) -> Vec<usize> {
        let outer = self.boundary_vertex_set();
        (0..self.vertex_count).filter(|v| !outer.contains(v)).collect()
    }

    /// Edges whose two endpoints are inner vertices.
    pub fn inner_edges(&self) -> Vec<usize> {
        let inner: BTreeSet<usize> = self.inner_vertices().into_iter().collect();
        let mut out = BTreeSet::new();
        for (c, row) in self.edge_of.iter().enumerate() {
            for (e, &class) in row.iter().enumerate() {
                let [p, q] = edge_ends(e);
                if inner.contains(&self.vertex_of[c][p]) && inner.contains(&self.vertex_of[c][q]) {
                    out.insert(class);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn boundary_squares(&self) -> usize {
        self.boundary_faces.iter().filter(|f| f.face == Face::Outer).count()
    }

    /// Inner edge of region `r`.
    pub fn region_edge(&self, r: usize) -> usize {
        self.region_edge[r]
    }

    fn midsquare_kind(&self, cube: usize, e: usize) -> MidsquareKind {
        if e >= 8 {
            return MidsquareKind::Peripheral;
        }
        match self.corner_colors[self.cubes[cube].crossing][e % 4] {
            Color::Black => MidsquareKind::Black,
            Color::White => MidsquareKind::White,
        }
    }

    fn kind_index(k: MidsquareKind) -> usize {
        match k {
            MidsquareKind::Black => 0,
            MidsquareKind::White => 1,
            MidsquareKind::Peripheral => 2,
        }
    }

    /// All hyperplanes; colored ones first.
    pub fn hyperplanes(&self) -> Result<Vec<Hyperplane>, CubingError> {
        let n = self.cubes.len();
        let mut uf = UnionFind::new(n * 3);
        for g in &self.gluings {
            for &(p, q) in &g.pairs {
                for e in face_edges_at(g.first.face, p) {
                    let [s, t] = edge_ends(e);
                    let other = if s == p { t } else { s };
                    let mapped = g.pairs.iter().find(|x| x.0 == other).unwrap().1;
                    let f = edge_between(q, mapped);
                    let ka = Self::kind_index(self.midsquare_kind(g.first.cube, e));
                    let kb = Self::kind_index(self.midsquare_kind(g.second.cube, f));
                    uf.union(g.first.cube * 3 + ka, g.second.cube * 3 + kb);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for c in 0..n {
            for k in 0..3 {
                groups.entry(uf.find(c * 3 + k)).or_default().push((c, k));
            }
        }
        let kinds = [MidsquareKind::Black, MidsquareKind::White, MidsquareKind::Peripheral];
        let mut out = Vec::new();
        for members in groups.values() {
            let ks: BTreeSet<usize> = members.iter().map(|m| m.1).collect();
            if ks.len() != 1 {
                return Err(CubingError::Gluing(format!(
                    "a hyperplane mixes midsquare kinds {:?}",
                    ks.iter().map(|&k| kinds[k]).collect::<Vec<_>>()
                )));
            }
            let cubes: Vec<usize> = members.iter().map(|m| m.0).collect();
            if cubes.len() != cubes.iter().collect::<BTreeSet<_>>().len() {
                return Err(CubingError::Gluing("a hyperplane meets a cube twice".into()));
            }
            out.push(Hyperplane { kind: kinds[*ks.iter().next().unwrap()], cubes });
        }
        out.sort_by_key(|h| (h.kind, h.cubes.clone()));
        Ok(out)
    }

    /// Components of the intersection of the two colored hyperplanes: the
    /// vertical axes of the cubes, joined across faces met by both.
    pub fn crossing_lines(&self) -> Vec<Vec<usize>> {
        let n = self.cubes.len();
        let mut uf = UnionFind::new(n);
        for g in &self.gluings {
            let kinds: BTreeSet<MidsquareKind> = g
                .first
                .face
                .vertices()
                .iter()
                .flat_map(|&v| face_edges_at(g.first.face, v))
                .map(|e| self.midsquare_kind(g.first.cube, e))
                .collect();
            if kinds.contains(&MidsquareKind::Black) && kinds.contains(&MidsquareKind::White) {
                uf.union(g.first.cube, g.second.cube);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            groups.entry(uf.find(c)).or_default().push(c);
        }
        groups.into_values().collect()
    }

    /// Gluing map applied twice is the identity and no face is glued twice.
    pub fn check_involution(&self) -> Result<(), CubingError> {
        let mut seen = BTreeSet::new();
        for g in &self.gluings {
            for f in [g.first, g.second] {
                if !seen.insert(f) {
                    return Err(CubingError::Gluing(format!("face {f:?} glued twice")));
                }
            }
            let fwd: BTreeMap<usize, usize> = g.pairs.iter().copied().collect();
            let back: BTreeMap<usize, usize> = g.pairs.iter().map(|&(a, b)| (b, a)).collect();
            let a_ok = g.first.face.vertices().iter().all(|v| back.get(&fwd[v]) == Some(v));
            let b_ok = g.second.face.vertices().iter().all(|v| fwd.get(&back[v]) == Some(v));
            if !a_ok || !b_ok || fwd.len() != 4 || back.len() != 4 {
                return Err(CubingError::Gluing(format!("gluing {:?} -> {:?} is not a bijection", g.first, g.second)));
            }
        }
        for c in 0..self.cubes.len() {
            let outer = [Face::Equator, Face::Outer]
                .iter()
                .filter(|&&face| self.boundary_faces.contains(&FaceRef { cube: c, face }))
                .count();
            if outer == 0 {
                return Err(CubingError::Gluing(format!("cube {c} has neither top nor bottom on the boundary")));
            }
        }
        Ok(())
    }

    pub fn summary(&self) -> CubingSummary {
        let hyper = self.hyperplanes();
        let tori = boundary_cubings(self);
        let npc = verify_npc(self);
        let colored = hyper.as_ref().map(|h| h.iter().filter(|x| x.kind != MidsquareKind::Peripheral).count()).ok();
        CubingSummary {
            crossings: self.crossing_count(),
            cubes: self.cubes.len(),
            inner_vertices: self.inner_vertices().len(),
            inner_edges: self.inner_edges().len(),
            boundary_squares: self.boundary_squares(),
            colored_hyperplanes: colored,
            crossing_lines: self.crossing_lines().len(),
            tori: tori.len(),
            euler: tori.iter().map(|t| t.euler).collect(),
            npc: npc.npc,
            failures: npc.vertices.into_iter().filter(|v| !v.passed).collect(),
        }
    }

    pub fn dump(&self) -> ComplexDump {
        ComplexDump {
            cubes: self.cubes.clone(),
            gluings: self.gluings.clone(),
            hyperplanes: self.hyperplanes().unwrap_or_default(),
        }
    }

    pub fn regions(&self) -> usize {
        self.region_count
    }

    pub fn link_components(&self) -> usize {
        self.component_count
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CubingSummary {
    pub crossings: usize,
    pub cubes: usize,
    pub inner_vertices: usize,
    pub inner_edges: usize,
    pub boundary_squares: usize,
    pub colored_hyperplanes: Option<usize>,
    pub crossing_lines: usize,
    pub tori: usize,
    pub euler: Vec<i64>,
    pub npc: bool,
    pub failures: Vec<VertexCheck>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComplexDump {
    pub cubes: Vec<Cube>,
    pub gluings: Vec<Gluing>,
    pub hyperplanes: Vec<Hyperplane>,
}

/// Builds the cubed complex of a prime, reduced alternating diagram.
pub fn build_cubing(d: &AlternatingDiagram) -> Result<CubedComplex, CubingError> {
    if !diagram::is_prime(d) {
        return Err(CubingError::NotPrime);
    }
    if !diagram::is_reduced(d) {
        return Err(CubingError::NotReduced);
    }
    let c = d.crossing_count();
    let upper = |x: usize| 2 * x;
    let lower = |x: usize| 2 * x + 1;
    let mut cubes = Vec::with_capacity(2 * c);
    for x in 0..c {
        cubes.push(Cube { crossing: x, level: Level::Upper });
        cubes.push(Cube { crossing: x, level: Level::Lower });
    }
    let mut gluings = Vec::new();
    for x in 0..c {
        gluings.push(Gluing {
            first: FaceRef { cube: upper(x), face: Face::Equator },
            second: FaceRef { cube: lower(x), face: Face::Equator },
            pairs: [(0, 0), (1, 1), (2, 2), (3, 3)],
        });
    }
    for x in 0..c {
        for k in 0..4 {
            let region = d.corner_region(Corner { crossing: x, index: k });
            let (o, u) = if d.is_over(Dart { crossing: x, slot: k }) { (k, (k + 1) % 4) } else { ((k + 1) % 4, k) };
            let Dart { crossing: y, slot: j } = d.partner(Dart { crossing: x, slot: o });
            if d.is_over(Dart { crossing: y, slot: j }) {
                return Err(CubingError::Gluing(format!("edge from ({x},{o}) is over at both ends")));
            }
            let candidates: Vec<usize> = [j, (j + 3) % 4]
                .into_iter()
                .filter(|&kk| d.corner_region(Corner { crossing: y, index: kk }) == region)
                .collect();
            if candidates.len() != 1 {
                return Err(CubingError::NotReduced);
            }
            let ky = candidates[0];
            let w = if ky == j { (j + 1) % 4 } else { (j + 3) % 4 };
            gluings.push(Gluing {
                first: FaceRef { cube: upper(x), face: Face::Side(k) },
                second: FaceRef { cube: lower(y), face: Face::Side(ky) },
                pairs: [(o, w), (u, j), (4 + o, 4 + w), (4 + u, 4 + j)],
            });
        }
    }
    let corner_colors = (0..c).map(|x| d.regions_at(x).map(|r| d.regions()[r].color)).collect();
    let region_corner = d.regions().iter().map(|r| r.corners[0]).collect();
    let cx = CubedComplex::assemble(cubes, gluings, corner_colors, d.regions().len(), d.component_count(), region_corner);
    cx.check_involution()?;
    Ok(cx)
}

// ---------------------------------------------------------------------------
// Vertex links

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum LinkDefect {
    DegenerateTriangle([usize; 3]),
    DegenerateEdge(usize),
    RepeatedEdge([usize; 2]),
    RepeatedTriangle([usize; 3]),
}

impl fmt::Display for LinkDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkDefect::DegenerateTriangle(t) => write!(f, "triangle {t:?} has a repeated vertex"),
            LinkDefect::DegenerateEdge(v) => write!(f, "edge is a loop at {v}"),
            LinkDefect::RepeatedEdge(e) => write!(f, "edge {e:?} appears twice"),
            LinkDefect::RepeatedTriangle(t) => write!(f, "triangle {t:?} appears twice"),
        }
    }
}

/// Simplicial complex of cube corners at a vertex. Link vertices are edge
/// ends, link edges are square corners, triangles are cube corners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexLink {
    pub vertex: Option<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub triangles: Vec<[usize; 3]>,
}

impl VertexLink {
    /// A link given by its maximal simplices: triangles plus extra edges.
    pub fn from_simplices(triangles: Vec<[usize; 3]>, extra_edges: Vec<[usize; 2]>) -> Self {
        let mut edges: BTreeSet<[usize; 2]> = extra_edges.into_iter().map(|[a, b]| [a.min(b), a.max(b)]).collect();
        for t in &triangles {
            for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                edges.insert([a.min(b), a.max(b)]);
            }
        }
        let vertices: BTreeSet<usize> = edges.iter().flatten().copied().collect();
        VertexLink { vertex: None, vertices: vertices.into_iter().collect(), edges: edges.into_iter().collect(), triangles }
    }

    pub fn check_simplicial(&self) -> Result<(), LinkDefect> {
        let mut tris = BTreeSet::new();
        for t in &self.triangles {
            let mut s = *t;
            s.sort();
            if s[0] == s[1] || s[1] == s[2] {
                return Err(LinkDefect::DegenerateTriangle(*t));
            }
            if !tris.insert(s) {
                return Err(LinkDefect::RepeatedTriangle(s));
            }
        }
        let mut pairs = BTreeSet::new();
        for &[a, b] in &self.edges {
            if a == b {
                return Err(LinkDefect::DegenerateEdge(a));
            }
            if !pairs.insert([a.min(b), a.max(b)]) {
                return Err(LinkDefect::RepeatedEdge([a.min(b), a.max(b)]));
            }
        }
        Ok(())
    }

    /// A clique of the 1-skeleton that spans no simplex, if any.
    pub fn flag_violation(&self) -> Result<Option<Vec<usize>>, LinkDefect> {
        self.check_simplicial()?;
        let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for &[a, b] in &self.edges {
            adj.entry(a).or_default().insert(b);
            adj.entry(b).or_default().insert(a);
        }
        let tris: BTreeSet<[usize; 3]> = self
            .triangles
            .iter()
            .map(|t| {
                let mut s = *t;
                s.sort();
                s
            })
            .collect();
        let empty = BTreeSet::new();
        let nb = |v: usize| adj.get(&v).unwrap_or(&empty);
        for (&a, na) in &adj {
            for &b in na.range(a + 1..) {
                for &c in nb(b).range(b + 1..) {
                    if !na.contains(&c) {
                        continue;
                    }
                    if !tris.contains(&[a, b, c]) {
                        return Ok(Some(vec![a, b, c]));
                    }
                    // links here are 2-dimensional: any 4-clique is unfilled
                    if let Some(&d) = nb(c).range(c + 1..).find(|&&d| na.contains(&d) && nb(b).contains(&d)) {
                        return Ok(Some(vec![a, b, c, d]));
                    }
                }
            }
        }
        Ok(None)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.triangles.len() as i64
    }
}

/// Whether every clique of the 1-skeleton spans a simplex.
pub fn is_flag(lk: &VertexLink) -> Result<bool, CubingError> {
    lk.flag_violation().map(|v| v.is_none()).map_err(CubingError::NotSimplicial)
}

pub fn vertex_link(cx: &CubedComplex, v: usize) -> Result<VertexLink, CubingError> {
    if v >= cx.vertex_count {
        return Err(CubingError::NoSuchVertex(v));
    }
    let mut triangles = Vec::new();
    let mut edges: BTreeMap<usize, [usize; 2]> = BTreeMap::new();
    let mut vertices = BTreeSet::new();
    for (c, row) in cx.vertex_of.iter().enumerate() {
        for lv in (0..8).filter(|&lv| row[lv] == v) {
            let end = |e: usize| cx.end_of[c][e * 2 + if edge_ends(e)[0] == lv { 0 } else { 1 }];
            let t = incident_edges(lv).map(end);
            vertices.extend(t);
            triangles.push(t);
            for face in Face::ALL {
                let vs = face.vertices();
                if let Some(pos) = vs.iter().position(|&w| w == lv) {
                    let [e1, e2] = face_edges_at(face, lv);
                    edges.entry(cx.corner_of[c][face.index() * 4 + pos]).or_insert([end(e1), end(e2)]);
                }
            }
        }
    }
    Ok(VertexLink {
        vertex: Some(v),
        vertices: vertices.into_iter().collect(),
        edges: edges.into_values().collect(),
        triangles,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexCheck {
    pub vertex: usize,
    pub inner: bool,
    pub passed: bool,
    pub problem: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NpcReport {
    pub npc: bool,
    pub vertices: Vec<VertexCheck>,
}

/// Gromov's link condition at every vertex.
pub fn verify_npc(cx: &CubedComplex) -> NpcReport {
    let inner: BTreeSet<usize> = cx.inner_vertices().into_iter().collect();
    let vertices: Vec<VertexCheck> = (0..cx.vertex_count)
        .into_par_iter()
        .map(|v| {
            let problem = match vertex_link(cx, v).map(|lk| lk.flag_violation()) {
                Ok(Ok(None)) => None,
                Ok(Ok(Some(clique))) => Some(format!("clique {clique:?} spans no simplex")),
                Ok(Err(defect)) => Some(format!("not simplicial: {defect}")),
                Err(e) => Some(e.to_string()),
            };
            VertexCheck { vertex: v, inner: inner.contains(&v), passed: problem.is_none(), problem }
        })
        .collect();
    NpcReport { npc: vertices.iter().all(|v| v.passed), vertices }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum AngleClass {
    Orthogonal,
    Far,
}

/// Angle between the inner edges of two regions at an inner vertex.
pub fn link_angle_class(cx: &CubedComplex, v: usize, r1: usize, r2: usize) -> Result<AngleClass, CubingError> {
    if r1 == r2 {
        return Err(CubingError::Diagram(DiagramError::SameRegion(r1)));
    }
    for r in [r1, r2] {
        if r >= cx.region_count {
            return Err(CubingError::Diagram(DiagramError::NoSuchRegion(r)));
        }
    }
    if !cx.inner_vertices().contains(&v) {
        return Err(CubingError::NotInner(v));
    }
    let end_at = |r: usize| -> Option<usize> {
        let class = cx.region_edge[r];
        cx.edge_of.iter().enumerate().find_map(|(c, row)| {
            (0..12).filter(|&e| row[e] == class).find_map(|e| {
                let [p, q] = edge_ends(e);
                if cx.vertex_of[c][p] == v {
                    Some(cx.end_of[c][e * 2])
                } else if cx.vertex_of[c][q] == v {
                    Some(cx.end_of[c][e * 2 + 1])
                } else {
                    None
                }
            })
        })
    };
    let (a, b) = match (end_at(r1), end_at(r2)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(CubingError::Gluing(format!("region edge does not reach vertex {v}"))),
    };
    let lk = vertex_link(cx, v)?;
    let adjacent = lk.edges.iter().any(|&[p, q]| (p == a && q == b) || (p == b && q == a));
    Ok(if adjacent { AngleClass::Orthogonal } else { AngleClass::Far })
}

// ---------------------------------------------------------------------------
// Boundary tori

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryTorus {
    /// Cubes whose outer face lies on this torus.
    pub squares: Vec<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub euler: i64,
    /// The meridian of each square: the diagonal whose ends are one vertex.
    pub meridians: Vec<Meridian>,
    /// Number of closed curves formed by black and by white boundary edges.
    pub longitude_loops: [usize; 2],
}

#[derive(Clone, Debug, Serialize)]
pub struct Meridian {
    pub square: usize,
    /// Local outer vertices of the marked diagonal, `None` unless exactly one diagonal closes up.
    pub diagonal: Option<[usize; 2]>,
    pub vertex: Option<usize>,
}

impl BoundaryTorus {
    /// Every square carries exactly one closed diagonal.
    pub fn meridians_consistent(&self) -> bool {
        self.meridians.iter().all(|m| m.diagonal.is_some())
    }
}

fn meridian(cx: &CubedComplex, cube: usize) -> Meridian {
    let closing: Vec<[usize; 2]> =
        [[4, 6], [5, 7]].into_iter().filter(|&[a, b]| cx.vertex_of[cube][a] == cx.vertex_of[cube][b]).collect();
    match closing.as_slice() {
        [d] => Meridian { square: cube, diagonal: Some(*d), vertex: Some(cx.vertex_of[cube][d[0]]) },
        _ => Meridian { square: cube, diagonal: None, vertex: None },
    }
}

pub fn boundary_cubings(cx: &CubedComplex) -> Vec<BoundaryTorus> {
    let outer: Vec<usize> =
        cx.boundary_faces.iter().filter(|f| f.face == Face::Outer).map(|f| f.cube).collect();
    let index: HashMap<usize, usize> = outer.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut uf = UnionFind::new(outer.len());
    let mut by_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &c in &outer {
        for e in 4..8 {
            by_edge.entry(cx.edge_of[c][e]).or_default().push(c);
        }
    }
    for cs in by_edge.values() {
        for w in cs.windows(2) {
            uf.union(index[&w[0]], index[&w[1]]);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &c in &outer {
        groups.entry(uf.find(index[&c])).or_default().push(c);
    }
    groups
        .into_values()
        .map(|squares| {
            let verts: BTreeSet<usize> = squares.iter().flat_map(|&c| (4..8).map(move |v| cx.vertex_of[c][v])).collect();
            let edges: BTreeSet<usize> = squares.iter().flat_map(|&c| (4..8).map(move |e| cx.edge_of[c][e])).collect();
            let euler = verts.len() as i64 - edges.len() as i64 + squares.len() as i64;
            let meridians = squares.iter().map(|&c| meridian(cx, c)).collect();
            let longitude_loops = [Color::Black, Color::White].map(|color| {
                let mut uf = UnionFind::new(cx.vertex_count);
                for &c in &squares {
                    for s in 0..4 {
                        if cx.corner_colors[cx.cubes[c].crossing][s] == color {
                            uf.union(cx.vertex_of[c][4 + s], cx.vertex_of[c][4 + (s + 1) % 4]);
                        }
                    }
                }
                verts.iter().map(|&v| uf.find(v)).collect::<BTreeSet<_>>().len()
            });
            BoundaryTorus { squares, vertices: verts.len(), edges: edges.len(), euler, meridians, longitude_loops }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Negative controls

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "gluing")]
pub enum Corruption {
    /// Drop the k-th gluing.
    Unglue(usize),
    /// Re-glue the k-th gluing with its vertex map turned by a quarter.
    Twist(usize),
}

impl CubedComplex {
    pub fn corrupted(&self, corruption: Corruption) -> CubedComplex {
        let mut gluings = self.gluings.clone();
        match corruption {
            Corruption::Unglue(k) => {
                gluings.remove(k % gluings.len());
            }
            Corruption::Twist(k) => {
                let k = k % gluings.len();
                let g = &mut gluings[k];
                let second = g.second.face.vertices();
                for pair in g.pairs.iter_mut() {
                    let pos = second.iter().position(|&w| w == pair.1).unwrap();
                    pair.1 = second[(pos + 1) % 4];
                }
            }
        }
        let region_corner = self
            .region_edge
            .iter()
            .map(|&class| {
                let (c, e) = (0..self.cubes.len())
                    .flat_map(|c| (0..4).map(move |e| (c, e)))
                    .find(|&(c, e)| self.edge_of[c][e] == class)
                    .unwrap();
                Corner { crossing: self.cubes[c].crossing, index: e }
            })
            .collect();
        CubedComplex::assemble(
            self.cubes.clone(),
            gluings,
            self.corner_colors.clone(),
            self.region_count,
            self.component_count,
            region_corner,
        )
    }
}

/// `count` corrupted copies, alternately unglued and twisted, spread over the gluings.
pub fn corruptions(cx: &CubedComplex, count: usize) -> Vec<(Corruption, CubedComplex)> {
    let n = cx.gluings.len();
    (0..count)
        .map(|i| {
            let k = (i * n / count.max(1)) % n;
            let c = if i % 2 == 0 { Corruption::Unglue(k) } else { Corruption::Twist(k) };
            (c, cx.corrupted(c))
        })
        .collect()
}
