//! The two checkerboard ideal polyhedra of an alternating diagram and their
//! gear-rule gluing.
//!
//! In `P+` the over-strands are collapsed to ideal vertices, so a point on
//! an edge of the diagram goes to the crossing where that edge passes over;
//! in `P-` it goes to the crossing where it passes under. Each crossing
//! contributes two polyhedron edges to each copy.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{self, AlternatingDiagram, Color, Dart, DiagramError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyhedraError {
    #[error("diagram is not prime")]
    NotPrime,
    #[error("gear rule is inconsistent at region R{region}: {detail}")]
    Gear { region: usize, detail: String },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error("crossing {0} does not exist")]
    NoSuchCrossing(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// Edge of one polyhedron: a copy of the crossing arc at `crossing`, drawn
/// along the diagram edge leaving it at `slot`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PolyEdge {
    pub side: Side,
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyFace {
    pub region: usize,
    pub color: Color,
    /// One polygon edge per diagram edge of the region, clockwise.
    pub edges: Vec<PolyEdge>,
    /// Crossing whose collapsed strand sits between edge `i` and edge `i + 1`.
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealPolyhedron {
    pub side: Side,
    pub faces: Vec<PolyFace>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FaceGluing {
    pub region: usize,
    pub color: Color,
    /// Position shift along the clockwise edge order, from the first copy to the second.
    pub shift: i64,
    pub pairs: Vec<(PolyEdge, PolyEdge)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EdgeClass {
    pub crossing: usize,
    pub plus: Vec<PolyEdge>,
    pub minus: Vec<PolyEdge>,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealPolyhedronPair {
    pub plus: IdealPolyhedron,
    pub minus: IdealPolyhedron,
    pub gluings: Vec<FaceGluing>,
    pub classes: Vec<EdgeClass>,
    /// Shift used on black faces; white faces use the opposite one.
    pub black_shift: i64,
    pub mirror: bool,
    #[serde(skip)]
    diagram: AlternatingDiagram,
}

/// The polyhedron edge of `side` lying along diagram edge `e`. In `P+` it is
/// the crossing arc at the end where `e` runs under, in `P-` at the end where
/// it runs over.
fn along_edge(d: &AlternatingDiagram, side: Side, e: usize) -> PolyEdge {
    let want_over = side == Side::Minus;
    let dart = d.edges()[e].darts.into_iter().find(|&x| d.is_over(x) == want_over).expect("alternating edge");
    PolyEdge { side, crossing: dart.crossing, slot: dart.slot }
}

fn polyhedron(d: &AlternatingDiagram, side: Side) -> IdealPolyhedron {
    let faces = d
        .regions()
        .iter()
        .map(|r| {
            let edges: Vec<PolyEdge> = r.edges.iter().map(|&e| along_edge(d, side, e)).collect();
            // collapsed strands sit at the corners, between consecutive edges
            let n = r.corners.len();
            let vertices = (0..n).map(|i| r.corners[(i + 1) % n].crossing).collect();
            PolyFace { region: r.id, color: r.color, edges, vertices }
        })
        .collect();
    IdealPolyhedron { side, faces }
}

fn edge_index(e: PolyEdge, c: usize) -> usize {
    let base = if e.side == Side::Plus { 0 } else { 4 * c };
    base + 4 * e.crossing + e.slot
}

fn glue(d: &AlternatingDiagram, plus: &IdealPolyhedron, minus: &IdealPolyhedron, black_shift: i64) -> Vec<FaceGluing> {
    plus.faces
        .iter()
        .zip(&minus.faces)
        .map(|(fp, fm)| {
            let n = fp.edges.len() as i64;
            let shift = if fp.color == Color::Black { black_shift } else { -black_shift };
            let pairs = (0..n).map(|i| (fp.edges[i as usize], fm.edges[(i + shift).rem_euclid(n) as usize])).collect();
            let _ = d;
            FaceGluing { region: fp.region, color: fp.color, shift, pairs }
        })
        .collect()
}

fn edge_classes(c: usize, gluings: &[FaceGluing]) -> Vec<Vec<PolyEdge>> {
    let mut uf = UnionFind::new(8 * c);
    let mut all = BTreeMap::new();
    for g in gluings {
        for &(a, b) in &g.pairs {
            uf.union(edge_index(a, c), edge_index(b, c));
            all.insert(edge_index(a, c), a);
            all.insert(edge_index(b, c), b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<PolyEdge>> = BTreeMap::new();
    for (i, e) in all {
        groups.entry(uf.find(i)).or_default().push(e);
    }
    groups.into_values().collect()
}

/// Every class has two edges from each copy, all from one crossing.
fn classes_ok(c: usize, classes: &[Vec<PolyEdge>]) -> bool {
    classes.len() == c
        && classes.iter().all(|cl| {
            let plus = cl.iter().filter(|e| e.side == Side::Plus).count();
            plus == 2 && cl.len() == 4 && cl.iter().all(|e| e.crossing == cl[0].crossing)
        })
}

/// Builds `P+` and `P-` with the gear gluing. The rotation direction is the
/// one for which crossing arcs close up; `mirror` exchanges the two copies,
/// which reverses it.
pub fn build_polyhedra(d: &AlternatingDiagram, mirror: bool) -> Result<IdealPolyhedronPair, PolyhedraError> {
    if !diagram::is_prime(d) {
        return Err(PolyhedraError::NotPrime);
    }
    let c = d.crossing_count();
    let (first, second) = if mirror { (Side::Minus, Side::Plus) } else { (Side::Plus, Side::Minus) };
    let p1 = polyhedron(d, first);
    let p2 = polyhedron(d, second);
    for shift in [1, -1] {
        let gluings = glue(d, &p1, &p2, shift);
        let groups = edge_classes(c, &gluings);
        if classes_ok(c, &groups) {
            let classes = groups
                .into_iter()
                .map(|cl| EdgeClass {
                    crossing: cl[0].crossing,
                    plus: cl.iter().copied().filter(|e| e.side == Side::Plus).collect(),
                    minus: cl.iter().copied().filter(|e| e.side == Side::Minus).collect(),
                })
                .collect();
            let (plus, minus) = if mirror { (p2, p1) } else { (p1, p2) };
            return Ok(IdealPolyhedronPair {
                plus,
                minus,
                gluings,
                classes,
                black_shift: shift,
                mirror,
                diagram: d.clone(),
            });
        }
    }
    let worst = d.regions().iter().map(|r| r.id).next().unwrap_or(0);
    Err(PolyhedraError::Gear { region: worst, detail: "no rotation direction closes the crossing arcs".into() })
}

impl IdealPolyhedronPair {
    pub fn polyhedron(&self, side: Side) -> &IdealPolyhedron {
        match side {
            Side::Plus => &self.plus,
            Side::Minus => &self.minus,
        }
    }

    pub fn diagram(&self) -> &AlternatingDiagram {
        &self.diagram
    }

    /// Ideal vertex of `side` reached by sliding a point of diagram edge `e` along the link.
    pub fn vertex_of_edge(&self, side: Side, e: usize) -> usize {
        let edge = &self.diagram.edges()[e];
        match side {
            Side::Plus => edge.over_end,
            Side::Minus => edge.under_end,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph edge_classes {\n");
        for (i, cl) in self.classes.iter().enumerate() {
            let _ = writeln!(s, "  k{i} [label=\"crossing {}\"];", cl.crossing);
            for e in cl.plus.iter().chain(&cl.minus) {
                let side = if e.side == Side::Plus { "p" } else { "m" };
                let _ = writeln!(s, "  k{i} -- {side}{}_{};", e.crossing, e.slot);
            }
        }
        s.push_str("}\n");
        s
    }
}

/// The checkerboard half-spaces of two distinct faces are disjoint exactly
/// when the regions share no edge.
pub fn halfspace_disjoint(pp: &IdealPolyhedronPair, _side: Side, r1: usize, r2: usize) -> Result<bool, PolyhedraError> {
    Ok(!diagram::region_adjacent(&pp.diagram, r1, r2)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceTransfer {
    pub region: usize,
    pub color: Color,
    /// Regions across the edges of the face, anticlockwise.
    pub neighbors: Vec<usize>,
    /// `permutation[i] = j`: the plane of neighbor `i` in `P+` is the plane of neighbor `j` in `P-`.
    pub permutation: Vec<usize>,
    pub shift: i64,
}

impl FaceTransfer {
    pub fn apply(&self, i: usize) -> usize {
        self.permutation[i]
    }

    /// `k`-fold composition of the permutation.
    pub fn power(&self, k: usize) -> Vec<usize> {
        (0..self.permutation.len())
            .map(|i| (0..k).fold(i, |j, _| self.permutation[j]))
            .collect()
    }
}

/// Neighbor relabelling induced by the gluing of the two copies along `region`.
pub fn face_transfer(pp: &IdealPolyhedronPair, region: usize) -> Result<FaceTransfer, PolyhedraError> {
    let d = &pp.diagram;
    let r = d.region(region)?;
    let g = &pp.gluings[region];
    let n = r.edges.len();
    // anticlockwise order of the edges of the region
    let acw: Vec<usize> = (0..n).map(|i| r.edges[(n - i) % n]).collect();
    let neighbors: Vec<usize> = acw
        .iter()
        .map(|&e| {
            let [a, b] = d.edge_sides(e);
            if a == region {
                b
            } else {
                a
            }
        })
        .collect();
    let position = |pe: PolyEdge| -> usize {
        let e = d.edge_at(Dart { crossing: pe.crossing, slot: pe.slot });
        acw.iter().position(|&x| x == e).expect("polygon edge lies over a boundary edge")
    };
    let mut permutation = vec![usize::MAX; n];
    for &(a, b) in &g.pairs {
        let (p, m) = if a.side == Side::Plus { (a, b) } else { (b, a) };
        permutation[position(p)] = position(m);
    }
    let shifts: Vec<i64> = (0..n).map(|i| (permutation[i] as i64 - i as i64).rem_euclid(n as i64)).collect();
    let shift = shifts[0];
    if permutation.contains(&usize::MAX) || shifts.iter().any(|&s| s != shift) || (shift != 1 && shift as usize != n - 1) {
        return Err(PolyhedraError::Gear { region, detail: format!("transfer {permutation:?} is not a rotation by one") });
    }
    // on a bigon both directions agree; report the one the gluing turns
    let shift = if n == 2 { -g.shift } else if shift == 1 { 1 } else { -1 };
    Ok(FaceTransfer { region, color: r.color, neighbors, permutation, shift })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ButterflyRegions {
    pub minus: usize,
    pub plus: usize,
}

impl ButterflyRegions {
    pub fn reversed(self) -> Self {
        ButterflyRegions { minus: self.plus, plus: self.minus }
    }

    pub fn as_array(self) -> [usize; 2] {
        [self.minus, self.plus]
    }
}

/// The two regions of `color` at crossing `c`. `minus` is the one to the
/// right of the oriented under-strand; the mirror flag reverses the order.
pub fn butterfly_regions(
    pp: &IdealPolyhedronPair,
    _side: Side,
    c: usize,
    color: Color,
) -> Result<ButterflyRegions, PolyhedraError> {
    let d = &pp.diagram;
    if c >= d.crossing_count() {
        return Err(PolyhedraError::NoSuchCrossing(c));
    }
    let rs = d.regions_at(c);
    let start = d.incoming_under(c);
    // corners start and start+1 lie to the right of the under-strand
    let right = (0..2).map(|k| (start + k) % 4).find(|&k| d.regions()[rs[k]].color == color).unwrap();
    let pair = ButterflyRegions { minus: rs[right], plus: rs[(right + 2) % 4] };
    Ok(if pp.mirror { pair.reversed() } else { pair })
}

// ---------------------------------------------------------------------------
// Circle pattern drawing

/// Tutte embedding of the crossings with the largest region as outer face.
fn tutte_layout(d: &AlternatingDiagram) -> (Vec<(f64, f64)>, usize) {
    let n = d.crossing_count();
    let outer = d.regions().iter().max_by_key(|r| (r.degree(), std::cmp::Reverse(r.id))).map(|r| r.id).unwrap();
    let ring: Vec<usize> = {
        let mut seen = Vec::new();
        for c in &d.regions()[outer].corners {
            if !seen.contains(&c.crossing) {
                seen.push(c.crossing);
            }
        }
        seen
    };
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    for (i, &x) in ring.iter().enumerate() {
        let t = 2.0 * std::f64::consts::PI * i as f64 / ring.len() as f64;
        pos[x] = (t.cos(), t.sin());
        fixed[x] = true;
    }
    for _ in 0..2000 {
        for x in 0..n {
            if fixed[x] {
                continue;
            }
            let (mut sx, mut sy) = (0.0, 0.0);
            for s in 0..4 {
                let y = d.partner(Dart { crossing: x, slot: s }).crossing;
                sx += pos[y].0;
                sy += pos[y].1;
            }
            pos[x] = (sx / 4.0, sy / 4.0);
        }
    }
    (pos, outer)
}

/// Circle of each region through (near) its crossings, black and white
/// layers and their overlay.
pub fn circle_pattern_svg(d: &AlternatingDiagram) -> Result<String, PolyhedraError> {
    if d.crossing_count() == 0 {
        return Err(PolyhedraError::NotPrime);
    }
    let (pos, outer) = tutte_layout(d);
    let size = 640.0;
    let scale = size * 0.3;
    let to_px = |(x, y): (f64, f64)| (size / 2.0 + x * scale, size / 2.0 - y * scale);
    let mut circles: BTreeMap<Color, Vec<String>> = BTreeMap::new();
    for r in d.regions() {
        let (cx, cy, rad) = if r.id == outer {
            (0.0, 0.0, 1.25)
        } else {
            let k = r.corners.len() as f64;
            let cx = r.corners.iter().map(|c| pos[c.crossing].0).sum::<f64>() / k;
            let cy = r.corners.iter().map(|c| pos[c.crossing].1).sum::<f64>() / k;
            let rad = r
                .corners
                .iter()
                .map(|c| ((pos[c.crossing].0 - cx).powi(2) + (pos[c.crossing].1 - cy).powi(2)).sqrt())
                .fold(0.0, f64::max)
                .max(0.08);
            (cx, cy, rad)
        };
        let (px, py) = to_px((cx, cy));
        let fill = if r.color == Color::Black { "#222222" } else { "#bbbbbb" };
        circles.entry(r.color).or_default().push(format!(
            "    <circle data-region=\"{}\" cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"{:.2}\" fill=\"none\" stroke=\"{fill}\" stroke-width=\"2\"/>",
            r.id,
            rad * scale
        ));
    }
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    );
    svg.push_str("  <g id=\"diagram\" stroke=\"#3366cc\" stroke-width=\"1\" opacity=\"0.6\">\n");
    for e in d.edges() {
        let (a, b) = (to_px(pos[e.darts[0].crossing]), to_px(pos[e.darts[1].crossing]));
        let _ = writeln!(svg, "    <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\"/>", a.0, a.1, b.0, b.1);
    }
    svg.push_str("  </g>\n");
    for (color, items) in &circles {
        let _ = writeln!(svg, "  <g id=\"{color}\">");
        for c in items {
            svg.push_str(c);
            svg.push('\n');
        }
        svg.push_str("  </g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
