//! Alternating link diagrams on the 2-sphere: PD parsing, faces, checkerboard
//! coloring, primeness, dual graphs, standard 2-bridge diagrams and flypes.
//!
//! A crossing has four slots numbered counterclockwise. A *corner* `(x, k)`
//! is the angle between slots `k` and `k+1` of crossing `x`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::decide::ArcSpec;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed code: {0}")]
    Malformed(String),
    #[error("diagram is disconnected: crossing {0} is unreachable from crossing 0")]
    Disconnected(usize),
    #[error("diagram is not planar: {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },
    #[error("diagram is not alternating at edge {0}")]
    NonAlternating(i64),
    #[error("crossing {0} does not exist")]
    NoSuchCrossing(usize),
    #[error("region {0} does not exist")]
    NoSuchRegion(usize),
    #[error("a region compared with itself: R{0}")]
    SameRegion(usize),
    #[error("invalid twist sequence {0:?}: need n >= 2, a1 >= 2, an >= 2 and all terms positive")]
    InvalidTwistSequence(Vec<u32>),
    #[error("twist region {index} of {count} is a tunnel, no flype is needed")]
    TunnelRegion { index: usize, count: usize },
    #[error("crossing {crossing} is not in twist region {index}")]
    NotInTwistRegion { crossing: usize, index: usize },
    #[error("diagram has no twist-region labels")]
    Unlabeled,
    #[error("dual graph check failed: {0}")]
    DualGraph(String),
    #[error("diagram has {count} {color} regions, at least 3 are needed")]
    TooFewRegions { color: Color, count: usize },
    #[error("no small {color} region found although the diagram has {count} regions of the other color")]
    LemmaViolation { color: Color, count: usize },
    #[error("flype bookkeeping failed: {0}")]
    Flype(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub crossing: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub label: i64,
    pub darts: [Dart; 2],
    /// Crossing where the edge passes over.
    pub over_end: usize,
    /// Crossing where the edge passes under.
    pub under_end: usize,
}

/// A face of the diagram. `corners[i]` and `edges[i]` alternate clockwise:
/// the walk leaves `corners[i]` along `edges[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub id: usize,
    pub color: Color,
    pub corners: Vec<Corner>,
    pub edges: Vec<usize>,
}

impl Region {
    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    pub fn crossings(&self) -> Vec<usize> {
        self.corners.iter().map(|c| c.crossing).collect()
    }

    pub fn contains_crossing(&self, x: usize) -> bool {
        self.corners.iter().any(|c| c.crossing == x)
    }
}

/// Crossing label inside a standard 2-bridge diagram: twist region `region`
/// (1-based) and position within it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistLabel {
    pub region: usize,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSequence(Vec<u32>);

impl TwistSequence {
    pub fn new(terms: Vec<u32>) -> Result<Self, DiagramError> {
        let ok = terms.len() >= 2 && terms[0] >= 2 && *terms.last().unwrap() >= 2 && terms.iter().all(|&a| a >= 1);
        if ok {
            Ok(TwistSequence(terms))
        } else {
            Err(DiagramError::InvalidTwistSequence(terms))
        }
    }

    pub fn terms(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// Every valid sequence with crossing count at most `max_sum`.
    pub fn enumerate(max_sum: u32, max_len: usize) -> Vec<TwistSequence> {
        fn rec(prefix: &mut Vec<u32>, left: u32, max_len: usize, out: &mut Vec<TwistSequence>) {
            if let Ok(t) = TwistSequence::new(prefix.clone()) {
                out.push(t);
            }
            if prefix.len() == max_len {
                return;
            }
            for a in 1..=left {
                if prefix.is_empty() && a < 2 {
                    continue;
                }
                prefix.push(a);
                rec(prefix, left - a, max_len, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), max_sum, max_len, &mut out);
        out
    }
}

impl fmt::Display for TwistSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for TwistSequence {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let terms: Result<Vec<u32>, _> =
            s.trim_matches(|c| c == '(' || c == ')').split(',').map(|t| t.trim().parse::<u32>()).collect();
        let terms = terms.map_err(|_| DiagramError::Malformed(format!("twist sequence {s:?}")))?;
        TwistSequence::new(terms)
    }
}

/// Input forms accepted by [`AlternatingDiagram::from_json`].
#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
pub enum DiagramInput {
    Pd {
        pd: Vec<Vec<i64>>,
    },
    Rotation {
        /// For each crossing, its four neighbours `[crossing, slot]` counterclockwise.
        rotation: Vec<[[usize; 2]; 4]>,
        /// For each crossing, the slot parity (0 or 1) of the over-strand.
        over_under: Vec<usize>,
        #[serde(default)]
        outer: Option<serde_json::Value>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlternatingDiagram {
    partner: Vec<[Dart; 4]>,
    over_parity: Vec<usize>,
    edge_at: Vec<[usize; 4]>,
    edges: Vec<Edge>,
    regions: Vec<Region>,
    corner_region: Vec<[usize; 4]>,
    twist: Option<Vec<TwistLabel>>,
    mirror: bool,
    /// Slot of the incoming under-strand at each crossing.
    incoming: Vec<usize>,
}

impl AlternatingDiagram {
    /// Parses a PD code: each crossing lists four edge labels counterclockwise
    /// starting at the incoming under-strand.
    pub fn from_pd(code: &[Vec<i64>]) -> Result<Self, DiagramError> {
        let mut seen: BTreeMap<i64, Vec<Dart>> = BTreeMap::new();
        for (x, row) in code.iter().enumerate() {
            if row.len() != 4 {
                return Err(DiagramError::Malformed(format!("crossing {x} has {} labels", row.len())));
            }
            for (slot, &label) in row.iter().enumerate() {
                seen.entry(label).or_default().push(Dart { crossing: x, slot });
            }
        }
        let mut partner = vec![[Dart { crossing: 0, slot: 0 }; 4]; code.len()];
        let mut labels = Vec::new();
        for (&label, darts) in &seen {
            if darts.len() != 2 {
                return Err(DiagramError::Malformed(format!("edge label {label} appears {} times", darts.len())));
            }
            partner[darts[0].crossing][darts[0].slot] = darts[1];
            partner[darts[1].crossing][darts[1].slot] = darts[0];
            labels.push((label, darts[0]));
        }
        Self::assemble(partner, Some(vec![1; code.len()]), Some(labels))
    }

    pub fn from_rotation(rotation: &[[[usize; 2]; 4]], over_under: &[usize]) -> Result<Self, DiagramError> {
        let n = rotation.len();
        if over_under.len() != n || over_under.iter().any(|&o| o > 1) {
            return Err(DiagramError::Malformed("over_under needs one parity (0 or 1) per crossing".into()));
        }
        let mut partner = vec![[Dart { crossing: 0, slot: 0 }; 4]; n];
        for (x, row) in rotation.iter().enumerate() {
            for (slot, &[y, j]) in row.iter().enumerate() {
                if y >= n || j >= 4 {
                    return Err(DiagramError::Malformed(format!("dart ({x},{slot}) points to ({y},{j})")));
                }
                partner[x][slot] = Dart { crossing: y, slot: j };
            }
        }
        for x in 0..n {
            for slot in 0..4 {
                let d = partner[x][slot];
                let back = partner[d.crossing][d.slot];
                if back != (Dart { crossing: x, slot }) || d == back {
                    return Err(DiagramError::Malformed(format!("dart ({x},{slot}) is not matched")));
                }
            }
        }
        Self::assemble(partner, Some(over_under.to_vec()), None)
    }

    pub fn from_json(text: &str) -> Result<Self, DiagramError> {
        let input: DiagramInput =
            serde_json::from_str(text).map_err(|e| DiagramError::Malformed(format!("json: {e}")))?;
        match input {
            DiagramInput::Pd { pd } => Self::from_pd(&pd),
            DiagramInput::Rotation { rotation, over_under, .. } => Self::from_rotation(&rotation, &over_under),
        }
    }

    /// Without `over_parity` only the shadow is checked and the over/under
    /// data is a placeholder.
    fn assemble(
        partner: Vec<[Dart; 4]>,
        over_parity: Option<Vec<usize>>,
        labels: Option<Vec<(i64, Dart)>>,
    ) -> Result<Self, DiagramError> {
        let n = partner.len();
        let pd_oriented = labels.is_some();
        let checked = over_parity.is_some();
        let over_parity = over_parity.unwrap_or_else(|| vec![0; n]);
        // connectivity
        if n > 0 {
            let mut reached = vec![false; n];
            let mut stack = vec![0];
            reached[0] = true;
            while let Some(x) = stack.pop() {
                for d in partner[x] {
                    if !reached[d.crossing] {
                        reached[d.crossing] = true;
                        stack.push(d.crossing);
                    }
                }
            }
            if let Some(x) = reached.iter().position(|r| !r) {
                return Err(DiagramError::Disconnected(x));
            }
        }
        // edges
        let mut edge_at = vec![[usize::MAX; 4]; n];
        let mut edges = Vec::new();
        let mut darts: Vec<(i64, Dart)> = match labels {
            Some(l) => l,
            None => {
                let mut v = Vec::new();
                for (x, row) in partner.iter().enumerate() {
                    for (slot, &other) in row.iter().enumerate() {
                        let d = Dart { crossing: x, slot };
                        if d < other {
                            v.push((v.len() as i64 + 1, d));
                        }
                    }
                }
                v
            }
        };
        darts.sort();
        for (label, d) in darts {
            let e = partner[d.crossing][d.slot];
            let over_a = d.slot % 2 == over_parity[d.crossing];
            let over_b = e.slot % 2 == over_parity[e.crossing];
            if checked && over_a == over_b {
                return Err(DiagramError::NonAlternating(label));
            }
            let (over_end, under_end) = if over_a { (d.crossing, e.crossing) } else { (e.crossing, d.crossing) };
            edge_at[d.crossing][d.slot] = edges.len();
            edge_at[e.crossing][e.slot] = edges.len();
            edges.push(Edge { label, darts: [d, e], over_end, under_end });
        }
        // faces
        let mut corner_region = vec![[usize::MAX; 4]; n];
        let mut walks: Vec<(Vec<Corner>, Vec<usize>)> = Vec::new();
        for x in 0..n {
            for k in 0..4 {
                if corner_region[x][k] != usize::MAX {
                    continue;
                }
                let id = walks.len();
                let (mut corners, mut path) = (Vec::new(), Vec::new());
                let mut c = Corner { crossing: x, index: k };
                while corner_region[c.crossing][c.index] == usize::MAX {
                    corner_region[c.crossing][c.index] = id;
                    corners.push(c);
                    let out = (c.index + 1) % 4;
                    path.push(edge_at[c.crossing][out]);
                    let d = partner[c.crossing][out];
                    c = Corner { crossing: d.crossing, index: d.slot };
                }
                walks.push((corners, path));
            }
        }
        let expected = if n == 0 { 2 } else { n + 2 };
        if n > 0 && walks.len() != expected {
            return Err(DiagramError::NonPlanar { faces: walks.len(), expected });
        }
        let mut regions: Vec<Region> = walks
            .into_iter()
            .enumerate()
            .map(|(id, (corners, edges))| Region { id, color: Color::White, corners, edges })
            .collect();
        if n == 0 {
            regions = vec![
                Region { id: 0, color: Color::Black, corners: vec![], edges: vec![] },
                Region { id: 1, color: Color::White, corners: vec![], edges: vec![] },
            ];
        }
        let mut d = AlternatingDiagram {
            partner,
            over_parity,
            edge_at,
            edges,
            regions,
            corner_region,
            twist: None,
            mirror: false,
            incoming: Vec::new(),
        };
        if n > 0 {
            d.color_regions()?;
        }
        d.incoming = if pd_oriented {
            vec![0; n]
        } else {
            let mut incoming = vec![0; n];
            for comp in d.strands() {
                for dart in comp {
                    let a = d.partner(dart);
                    if !d.is_over(a) {
                        incoming[a.crossing] = a.slot;
                    }
                }
            }
            incoming
        };
        Ok(d)
    }

    fn color_regions(&mut self) -> Result<(), DiagramError> {
        let mut color: Vec<Option<Color>> = vec![None; self.regions.len()];
        let seed = self.corner_region[0][3];
        let first = if self.mirror { Color::White } else { Color::Black };
        color[seed] = Some(first);
        let mut stack = vec![seed];
        while let Some(r) = stack.pop() {
            let here = color[r].unwrap();
            for &e in &self.regions[r].edges.clone() {
                let [a, b] = self.edge_sides(e);
                let other = if a == r { b } else { a };
                match color[other] {
                    None => {
                        color[other] = Some(here.other());
                        stack.push(other);
                    }
                    Some(c) if c == here => {
                        return Err(DiagramError::NonPlanar { faces: self.regions.len(), expected: self.crossing_count() + 2 })
                    }
                    _ => {}
                }
            }
        }
        for (r, c) in self.regions.iter_mut().zip(color) {
            r.color = c.expect("faces of a connected diagram are all reached");
        }
        Ok(())
    }

    /// Same diagram with the two colors exchanged.
    pub fn with_color_mirror(&self, mirror: bool) -> Self {
        let mut d = self.clone();
        if d.mirror != mirror {
            d.mirror = mirror;
            for r in &mut d.regions {
                r.color = r.color.other();
            }
        }
        d
    }

    pub fn color_mirror(&self) -> bool {
        self.mirror
    }

    pub fn crossing_count(&self) -> usize {
        self.partner.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn region(&self, id: usize) -> Result<&Region, DiagramError> {
        self.regions.get(id).ok_or(DiagramError::NoSuchRegion(id))
    }

    pub fn partner(&self, d: Dart) -> Dart {
        self.partner[d.crossing][d.slot]
    }

    pub fn edge_at(&self, d: Dart) -> usize {
        self.edge_at[d.crossing][d.slot]
    }

    pub fn is_over(&self, d: Dart) -> bool {
        d.slot % 2 == self.over_parity[d.crossing]
    }

    pub fn corner_region(&self, c: Corner) -> usize {
        self.corner_region[c.crossing][c.index]
    }

    /// Regions at corners 0..3 of crossing `x`.
    pub fn regions_at(&self, x: usize) -> [usize; 4] {
        self.corner_region[x]
    }

    /// The two regions on either side of an edge.
    pub fn edge_sides(&self, e: usize) -> [usize; 2] {
        let d = self.edges[e].darts[0];
        [self.corner_region[d.crossing][(d.slot + 3) % 4], self.corner_region[d.crossing][d.slot]]
    }

    pub fn twist_labels(&self) -> Option<&[TwistLabel]> {
        self.twist.as_deref()
    }

    pub fn count_color(&self, color: Color) -> usize {
        self.regions.iter().filter(|r| r.color == color).count()
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        self.strands().len()
    }

    /// Each component as its cyclic list of darts by which it leaves crossings.
    /// Once the orientation is known every component starts along an
    /// outgoing under-strand, so the darts follow the orientation.
    fn strands(&self) -> Vec<Vec<Dart>> {
        let oriented = self.incoming.len() == self.crossing_count();
        let mut used = vec![[false; 4]; self.crossing_count()];
        let mut out = Vec::new();
        for x in 0..self.crossing_count() {
            for s in 0..4 {
                if oriented && s != (self.incoming[x] + 2) % 4 {
                    continue;
                }
                if used[x][s] {
                    continue;
                }
                let mut comp = Vec::new();
                let mut d = Dart { crossing: x, slot: s };
                while !used[d.crossing][d.slot] {
                    let opp = Dart { crossing: d.crossing, slot: (d.slot + 2) % 4 };
                    used[d.crossing][d.slot] = true;
                    used[opp.crossing][opp.slot] = true;
                    comp.push(d);
                    let arrive = self.partner(d);
                    d = Dart { crossing: arrive.crossing, slot: (arrive.slot + 2) % 4 };
                }
                out.push(comp);
            }
        }
        out
    }

    /// PD code with edges numbered along each oriented component.
    pub fn to_pd(&self) -> Vec<[i64; 4]> {
        let n = self.crossing_count();
        let mut label = vec![[0i64; 4]; n];
        let mut next = 1;
        for comp in self.strands() {
            for d in comp {
                let a = self.partner(d);
                label[d.crossing][d.slot] = next;
                label[a.crossing][a.slot] = next;
                next += 1;
            }
        }
        (0..n).map(|x| [0, 1, 2, 3].map(|k| label[x][(self.incoming[x] + k) % 4])).collect()
    }

    /// Slot of the incoming under-strand at crossing `x`.
    pub fn incoming_under(&self, x: usize) -> usize {
        self.incoming[x]
    }

    pub fn twist_crossing(&self, region: usize, position: usize) -> Result<usize, DiagramError> {
        let labels = self.twist.as_ref().ok_or(DiagramError::Unlabeled)?;
        labels
            .iter()
            .position(|l| l.region == region && l.position == position)
            .ok_or(DiagramError::NotInTwistRegion { crossing: position, index: region })
    }

    pub fn report(&self) -> DiagramReport {
        DiagramReport {
            crossings: self.crossing_count(),
            components: self.component_count(),
            prime: is_prime(self),
            reduced: is_reduced(self),
            color_mirror: self.mirror,
            regions: self
                .regions
                .iter()
                .map(|r| RegionReport {
                    id: r.id,
                    color: r.color,
                    degree: r.degree(),
                    crossings: r.crossings(),
                    edges: r.edges.iter().map(|&e| self.edges[e].label).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub crossings: usize,
    pub components: usize,
    pub prime: bool,
    pub reduced: bool,
    pub color_mirror: bool,
    pub regions: Vec<RegionReport>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegionReport {
    pub id: usize,
    pub color: Color,
    pub degree: usize,
    pub crossings: Vec<usize>,
    pub edges: Vec<i64>,
}

pub fn parse_pd(code: &[Vec<i64>]) -> Result<AlternatingDiagram, DiagramError> {
    AlternatingDiagram::from_pd(code)
}

/// Prime: at least one crossing and no two distinct edges separate the same pair of regions.
pub fn is_prime(d: &AlternatingDiagram) -> bool {
    if d.crossing_count() == 0 {
        return false;
    }
    let mut pairs = BTreeSet::new();
    (0..d.edges.len()).all(|e| {
        let [a, b] = d.edge_sides(e);
        pairs.insert((a.min(b), a.max(b)))
    })
}

/// Reduced: no crossing meets a single region in two corners.
pub fn is_reduced(d: &AlternatingDiagram) -> bool {
    d.regions.iter().all(|r| {
        let xs: BTreeSet<usize> = r.corners.iter().map(|c| c.crossing).collect();
        xs.len() == r.corners.len()
    })
}

pub fn region_adjacent(d: &AlternatingDiagram, r1: usize, r2: usize) -> Result<bool, DiagramError> {
    if r1 == r2 {
        return Err(DiagramError::SameRegion(r1));
    }
    d.region(r1)?;
    d.region(r2)?;
    Ok(d.regions[r1].edges.iter().any(|&e| d.edge_sides(e).contains(&r2)))
}

/// Multigraph on the regions of one color, one edge per crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualGraph {
    pub color: Color,
    pub vertices: Vec<usize>,
    /// `(region, region, crossing)`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl DualGraph {
    pub fn to_dot(&self) -> String {
        let mut s = format!("graph {} {{\n", self.color);
        for v in &self.vertices {
            let _ = writeln!(s, "  R{v};");
        }
        for (a, b, x) in &self.edges {
            let _ = writeln!(s, "  R{a} -- R{b} [label=\"c{x}\"];");
        }
        s.push_str("}\n");
        s
    }

    fn components_without(&self, skip: Option<usize>) -> usize {
        let index: HashMap<usize, usize> = self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(p: &mut [usize], i: usize) -> usize {
            if p[i] != i {
                let root = find(p, p[i]);
                p[i] = root;
            }
            p[i]
        }
        let mut comps = self.vertices.len();
        for (k, &(a, b, _)) in self.edges.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
            if ra != rb {
                parent[ra] = rb;
                comps -= 1;
            }
        }
        comps
    }

    /// Connected, loopless and without cut edges.
    pub fn check(&self) -> Result<(), DiagramError> {
        if self.components_without(None) != 1 {
            return Err(DiagramError::DualGraph(format!("{} dual graph is disconnected", self.color)));
        }
        if let Some((a, _, x)) = self.edges.iter().find(|(a, b, _)| a == b) {
            return Err(DiagramError::DualGraph(format!("loop at R{a} through crossing {x}")));
        }
        for (k, (a, b, x)) in self.edges.iter().enumerate() {
            if self.components_without(Some(k)) != 1 {
                return Err(DiagramError::DualGraph(format!("cut edge R{a}--R{b} at crossing {x}")));
            }
        }
        Ok(())
    }
}

pub fn dual_graph(d: &AlternatingDiagram, color: Color) -> DualGraph {
    let vertices = d.regions.iter().filter(|r| r.color == color).map(|r| r.id).collect();
    let edges = (0..d.crossing_count())
        .map(|x| {
            let rs = d.regions_at(x);
            let pick: Vec<usize> = rs.iter().copied().filter(|&r| d.regions[r].color == color).collect();
            (pick[0], pick[1], x)
        })
        .collect();
    DualGraph { color, vertices, edges }
}

pub fn black_dual_graph(d: &AlternatingDiagram) -> Result<DualGraph, DiagramError> {
    let g = dual_graph(d, Color::Black);
    g.check()?;
    Ok(g)
}

/// At least three regions of each color.
pub fn hyperbolic_candidate(d: &AlternatingDiagram) -> bool {
    d.count_color(Color::Black) >= 3 && d.count_color(Color::White) >= 3
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SmallKind {
    Bigon,
    Trigon,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum SmallRegion {
    NoneNeeded { count: usize },
    Found { region: usize, kind: SmallKind, neighbors: Vec<usize> },
}

/// Regions of color `color` across the edges of region `r`, in boundary order.
pub fn neighbors_across(d: &AlternatingDiagram, r: usize) -> Vec<usize> {
    d.regions[r]
        .edges
        .iter()
        .map(|&e| {
            let [a, b] = d.edge_sides(e);
            if a == r {
                b
            } else {
                a
            }
        })
        .collect()
}

/// Looks for a small region of the color opposite to `color` whose
/// `color`-neighbours are distinct: a bigon when there are three regions of
/// `color`, a bigon or trigon when there are four.
pub fn find_small_region(d: &AlternatingDiagram, color: Color) -> Result<SmallRegion, DiagramError> {
    let count = d.count_color(color);
    if count < 3 {
        return Err(DiagramError::TooFewRegions { color, count });
    }
    if count >= 5 {
        return Ok(SmallRegion::NoneNeeded { count });
    }
    let max_degree = if count == 3 { 2 } else { 3 };
    for r in d.regions.iter().filter(|r| r.color == color.other()) {
        if r.degree() < 2 || r.degree() > max_degree {
            continue;
        }
        let nb = neighbors_across(d, r.id);
        let distinct: BTreeSet<usize> = nb.iter().copied().collect();
        if distinct.len() == nb.len() {
            let kind = if r.degree() == 2 { SmallKind::Bigon } else { SmallKind::Trigon };
            return Ok(SmallRegion::Found { region: r.id, kind, neighbors: nb });
        }
    }
    Err(DiagramError::LemmaViolation { color: color.other(), count })
}

pub fn find_small_white_region(d: &AlternatingDiagram) -> Result<SmallRegion, DiagramError> {
    find_small_region(d, Color::Black)
}

// ---------------------------------------------------------------------------
// Rational tangle builder

const NE: usize = 0;
const NW: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Twist {
    Right,
    Left,
    Bottom,
    Top,
}

impl Twist {
    fn horizontal(self) -> bool {
        matches!(self, Twist::Right | Twist::Left)
    }
}

/// Plane 4-valent graph with geometric slots (NE, NW, SW, SE) under construction.
struct Shadow {
    partner: Vec<[Option<Dart>; 4]>,
    labels: Vec<TwistLabel>,
    ends: [Dart; 4],
}

impl Shadow {
    fn start(label: TwistLabel) -> Self {
        let d = |slot| Dart { crossing: 0, slot };
        Shadow { partner: vec![[None; 4]], labels: vec![label], ends: [d(NE), d(NW), d(SW), d(SE)] }
    }

    fn join(&mut self, a: Dart, b: Dart) {
        self.partner[a.crossing][a.slot] = Some(b);
        self.partner[b.crossing][b.slot] = Some(a);
    }

    fn add(&mut self, twist: Twist, label: TwistLabel) {
        let x = self.partner.len();
        self.partner.push([None; 4]);
        self.labels.push(label);
        let d = |slot| Dart { crossing: x, slot };
        let [ne, nw, sw, se] = self.ends;
        match twist {
            Twist::Right => {
                self.join(d(NW), ne);
                self.join(d(SW), se);
                self.ends = [d(NE), nw, sw, d(SE)];
            }
            Twist::Left => {
                self.join(d(NE), nw);
                self.join(d(SE), sw);
                self.ends = [ne, d(NW), d(SW), se];
            }
            Twist::Bottom => {
                self.join(d(NW), sw);
                self.join(d(NE), se);
                self.ends = [ne, nw, d(SW), d(SE)];
            }
            Twist::Top => {
                self.join(d(SW), nw);
                self.join(d(SE), ne);
                self.ends = [d(NE), d(NW), sw, se];
            }
        }
    }

    /// Numerator closure after a horizontal twist, denominator closure after a vertical one.
    fn close(mut self, last_horizontal: bool) -> (Vec<[Dart; 4]>, Vec<TwistLabel>) {
        let [ne, nw, sw, se] = self.ends;
        if last_horizontal {
            self.join(nw, ne);
            self.join(sw, se);
        } else {
            self.join(nw, sw);
            self.join(ne, se);
        }
        let partner = self.partner.into_iter().map(|row| row.map(|d| d.expect("all slots joined"))).collect();
        (partner, self.labels)
    }
}

/// Over/under from the checkerboard coloring of the shadow, making it alternating.
fn alternate(partner: Vec<[Dart; 4]>) -> Result<AlternatingDiagram, DiagramError> {
    let probe = AlternatingDiagram::assemble(partner.clone(), None, None)?;
    let over_parity = (0..partner.len())
        .map(|x| {
            let black = (0..4).find(|&k| probe.regions[probe.corner_region[x][k]].color == Color::Black).unwrap();
            black % 2
        })
        .collect();
    AlternatingDiagram::assemble(partner, Some(over_parity), None)
}

fn build_program(program: &[(Twist, TwistLabel)]) -> Shadow {
    let mut sh = Shadow::start(program[0].1);
    for &(t, label) in &program[1..] {
        sh.add(t, label);
    }
    sh
}

fn standard_program(a: &[u32]) -> Vec<(Twist, TwistLabel)> {
    let mut prog = Vec::new();
    for (i, &ai) in a.iter().enumerate() {
        let t = if i % 2 == 0 { Twist::Right } else { Twist::Bottom };
        for k in 0..ai as usize {
            prog.push((t, TwistLabel { region: i + 1, position: k }));
        }
    }
    prog
}

/// The standard alternating diagram of the 2-bridge link with twist regions `a`.
pub fn two_bridge_diagram(a: &TwistSequence) -> Result<AlternatingDiagram, DiagramError> {
    let prog = standard_program(a.terms());
    let last = prog.last().unwrap().0;
    let (partner, labels) = build_program(&prog).close(last.horizontal());
    let mut d = alternate(partner)?;
    d.twist = Some(labels);
    Ok(d)
}

/// Standard diagram of the (2, n) torus link, a single twist region.
pub fn torus_diagram(n: u32) -> Result<AlternatingDiagram, DiagramError> {
    if n < 2 {
        return Err(DiagramError::InvalidTwistSequence(vec![n]));
    }
    let prog = standard_program(&[n]);
    let (partner, labels) = build_program(&prog).close(true);
    let mut d = alternate(partner)?;
    d.twist = Some(labels);
    Ok(d)
}

/// Pretzel diagram P(t1, ..., tk): vertical twist columns side by side, numerator closure.
pub fn pretzel_diagram(columns: &[u32]) -> Result<AlternatingDiagram, DiagramError> {
    if columns.len() < 2 || columns.contains(&0) {
        return Err(DiagramError::InvalidTwistSequence(columns.to_vec()));
    }
    // column i: vertical chain of t crossings, joined to the previous column on the right
    let mut partner: Vec<[Option<Dart>; 4]> = Vec::new();
    let mut labels = Vec::new();
    let mut tops = Vec::new();
    let join = |p: &mut Vec<[Option<Dart>; 4]>, a: Dart, b: Dart| {
        p[a.crossing][a.slot] = Some(b);
        p[b.crossing][b.slot] = Some(a);
    };
    for (i, &t) in columns.iter().enumerate() {
        let first = partner.len();
        for k in 0..t as usize {
            partner.push([None; 4]);
            labels.push(TwistLabel { region: i + 1, position: k });
            if k > 0 {
                let (up, down) = (first + k - 1, first + k);
                join(&mut partner, Dart { crossing: up, slot: SW }, Dart { crossing: down, slot: NW });
                join(&mut partner, Dart { crossing: up, slot: SE }, Dart { crossing: down, slot: NE });
            }
        }
        tops.push((first, first + t as usize - 1));
    }
    let k = tops.len();
    for i in 0..k {
        let (top, bottom) = tops[i];
        let (ntop, nbottom) = tops[(i + 1) % k];
        join(&mut partner, Dart { crossing: top, slot: NE }, Dart { crossing: ntop, slot: NW });
        join(&mut partner, Dart { crossing: bottom, slot: SE }, Dart { crossing: nbottom, slot: SW });
    }
    let partner = partner.into_iter().map(|row| row.map(|d| d.unwrap())).collect();
    let mut d = alternate(partner)?;
    d.twist = Some(labels);
    Ok(d)
}

/// Record of a flype on a standard 2-bridge diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlypeTrace {
    pub twist_region: usize,
    /// Even twist regions are vertical; the flype then passes over the top,
    /// which on the sphere is the isotopy that precedes it.
    pub sphere_isotopy: bool,
    /// Crossing of the flyped diagram that carries the crossing of the arc.
    pub moved_crossing: usize,
    /// All crossings of the twist region, carried across in turn.
    pub moved_crossings: Vec<usize>,
    pub arc_edges: [i64; 2],
    /// Which checkerboard polyhedron the arc endpoints are read in.
    pub polyhedron: crate::polyhedra::Side,
}

/// Flypes the crossing whose crossing arc is `arc` across the rational
/// tangle formed by the twist regions before it. Returns the new diagram
/// and the image of the arc, an arc inside one region.
pub fn flype(
    d: &AlternatingDiagram,
    a: &TwistSequence,
    i: usize,
    arc: &ArcSpec,
) -> Result<(AlternatingDiagram, ArcSpec, FlypeTrace), DiagramError> {
    let n = a.len();
    if i == 1 || i == n {
        return Err(DiagramError::TunnelRegion { index: i, count: n });
    }
    if i == 0 || i > n {
        return Err(DiagramError::NotInTwistRegion { crossing: 0, index: i });
    }
    let labels = d.twist.as_ref().ok_or(DiagramError::Unlabeled)?;
    let crossing = match arc {
        ArcSpec::CrossingArc { crossing } => *crossing,
        _ => return Err(DiagramError::Flype("only crossing arcs are flyped".into())),
    };
    let label = *labels.get(crossing).ok_or(DiagramError::NoSuchCrossing(crossing))?;
    if label.region != i {
        return Err(DiagramError::NotInTwistRegion { crossing, index: i });
    }
    let prog = standard_program(a.terms());
    // crossing arcs of one twist region are isotopic across its bigons; each
    // crossing of A_i is flyped across T in turn, the arc riding inside the
    // rotated ball, so T ends up rotated a_i times
    let horizontal = i % 2 == 1;
    let turns = a.terms()[i - 1] % 2 == 1;
    let flipped: Vec<(Twist, TwistLabel)> = prog
        .iter()
        .filter(|(_, l)| l.region < i)
        .map(|&(t, l)| {
            let t = match (turns, horizontal, t) {
                (true, true, Twist::Bottom) => Twist::Top,
                (true, true, Twist::Top) => Twist::Bottom,
                (true, false, Twist::Right) => Twist::Left,
                (true, false, Twist::Left) => Twist::Right,
                (_, _, t) => t,
            };
            (t, l)
        })
        .collect();
    let mut sh = build_program(&flipped);
    let gap = sh.ends;
    let first_moved = sh.partner.len();
    for &(_, l) in prog.iter().filter(|(_, l)| l.region == i) {
        sh.add(if horizontal { Twist::Left } else { Twist::Top }, l);
    }
    let moved = first_moved + label.position;
    let mut last = Twist::Right;
    for &(t, l) in prog.iter().filter(|(_, l)| l.region > i) {
        sh.add(t, l);
        last = t;
    }
    let (partner, labels) = sh.close(last.horizontal());
    let mut nd = alternate(partner)?;
    nd.twist = Some(labels);

    // the arc sits in the gap the moved crossing left behind
    let [ne, _, sw, se] = gap;
    let (da, db, corner) = if horizontal { (ne, se, 3) } else { (sw, se, 2) };
    let region = nd.corner_region(Corner { crossing: da.crossing, index: corner });
    let other = nd.corner_region(Corner { crossing: db.crossing, index: if horizontal { 3 } else { 2 } });
    if region != other {
        return Err(DiagramError::Flype(format!("gap corners lie in R{region} and R{other}")));
    }
    let (ea, eb) = (nd.edge_at(da), nd.edge_at(db));
    let mut chosen = None;
    for side in [crate::polyhedra::Side::Plus, crate::polyhedra::Side::Minus] {
        let end = |e: usize| match side {
            crate::polyhedra::Side::Plus => nd.edges[e].over_end,
            crate::polyhedra::Side::Minus => nd.edges[e].under_end,
        };
        let (c1, c2) = (end(ea), end(eb));
        if c1 != c2 && !crossings_adjacent_in(&nd, region, c1, c2) {
            chosen = Some((side, c1, c2));
            break;
        }
    }
    let (side, c1, c2) =
        chosen.ok_or_else(|| DiagramError::Flype(format!("image arc in R{region} joins adjacent crossings")))?;
    let trace = FlypeTrace {
        twist_region: i,
        sphere_isotopy: !horizontal,
        moved_crossing: moved,
        moved_crossings: (first_moved..first_moved + a.terms()[i - 1] as usize).collect(),
        arc_edges: [nd.edges[ea].label, nd.edges[eb].label],
        polyhedron: side,
    };
    Ok((nd, ArcSpec::InRegion { region, c1, c2 }, trace))
}

/// Whether `c1` and `c2` are consecutive on the boundary of region `r`.
pub fn crossings_adjacent_in(d: &AlternatingDiagram, r: usize, c1: usize, c2: usize) -> bool {
    let xs = d.regions[r].crossings();
    let k = xs.len();
    (0..k).any(|i| {
        let (a, b) = (xs[i], xs[(i + 1) % k]);
        (a == c1 && b == c2) || (a == c2 && b == c1)
    })
}
