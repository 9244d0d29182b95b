//! Classification of meridian pairs given as arcs between two crossings.
//!
//! A pair of meridians at crossings `c1`, `c2` is represented by the arc
//! joining them in the projection plane, recorded as the sequence of diagram
//! edges it crosses. The outcomes are: inessential, one of the two tunnels of
//! a 2-bridge link (the pair generates the link group), or a free
//! geometrically finite pair with a butterfly-region witness.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{
    self, crossings_adjacent_in, find_small_region, two_bridge_diagram, AlternatingDiagram, Color, DiagramError,
    FlypeTrace, SmallKind, SmallRegion, TwistSequence,
};
use crate::polyhedra::{
    build_polyhedra, butterfly_regions, face_transfer, halfspace_disjoint, FaceTransfer, IdealPolyhedronPair,
    PolyhedraError, Side,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecideError {
    #[error("malformed arc: {0}")]
    MalformedArc(String),
    #[error("diagram is not prime")]
    NotPrime,
    #[error("diagram is not hyperbolic: {color} has {count} regions, at least 3 needed")]
    NotHyperbolic { color: Color, count: usize },
    #[error("cannot parse arc {0:?}")]
    Parse(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArcSpec {
    CrossingArc { crossing: usize },
    InRegion { region: usize, c1: usize, c2: usize },
    TransverseArc { c1: usize, c2: usize, word: Vec<usize> },
}

impl ArcSpec {
    /// Same arc traversed backwards.
    pub fn reversed(&self) -> ArcSpec {
        match self {
            ArcSpec::CrossingArc { crossing } => ArcSpec::CrossingArc { crossing: *crossing },
            ArcSpec::InRegion { region, c1, c2 } => ArcSpec::InRegion { region: *region, c1: *c2, c2: *c1 },
            ArcSpec::TransverseArc { c1, c2, word } => {
                ArcSpec::TransverseArc { c1: *c2, c2: *c1, word: word.iter().rev().copied().collect() }
            }
        }
    }
}

/// Command-line arc syntax: `A2:0` (crossing arc of the first crossing of
/// twist region 2), `X5` (crossing arc at crossing 5), `R3:c0:c2` (arc in
/// region 3), `T:c0:c4:e1,e7` (arc crossing edges 1 and 7).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcInput {
    Twist { region: usize, position: usize },
    Spec(ArcSpec),
}

fn num(s: &str, prefix: char) -> Option<usize> {
    s.strip_prefix(prefix)?.parse().ok()
}

impl FromStr for ArcInput {
    type Err = DecideError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || DecideError::Parse(s.to_string());
        let parts: Vec<&str> = s.trim().split(':').collect();
        match parts.as_slice() {
            [a, p] if a.starts_with('A') => {
                Ok(ArcInput::Twist { region: num(a, 'A').ok_or_else(err)?, position: p.parse().map_err(|_| err())? })
            }
            [x] if x.starts_with('X') => Ok(ArcInput::Spec(ArcSpec::CrossingArc { crossing: num(x, 'X').ok_or_else(err)? })),
            [r, c1, c2] if r.starts_with('R') => Ok(ArcInput::Spec(ArcSpec::InRegion {
                region: num(r, 'R').ok_or_else(err)?,
                c1: num(c1, 'c').ok_or_else(err)?,
                c2: num(c2, 'c').ok_or_else(err)?,
            })),
            ["T", c1, c2, w] => Ok(ArcInput::Spec(ArcSpec::TransverseArc {
                c1: num(c1, 'c').ok_or_else(err)?,
                c2: num(c2, 'c').ok_or_else(err)?,
                word: w.split(',').map(|e| num(e, 'e').ok_or_else(err)).collect::<Result<_, _>>()?,
            })),
            _ => Err(err()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Tunnel {
    Upper,
    Lower,
}

impl fmt::Display for Tunnel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Tunnel::Upper => "upper",
            Tunnel::Lower => "lower",
        })
    }
}

/// Certificate that the complement of the two butterflies is non-empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", rename_all = "snake_case")]
pub enum SpareRegion {
    /// A fifth region of the witness colour; its disk misses both butterflies.
    Direct { region: usize, disjoint_from: Vec<usize> },
    /// Exactly four (or three) regions: pass to the neighbouring polyhedron
    /// across a small region of the other colour, where the region not
    /// adjacent to it gives the open disk. That disk lives in the other
    /// polyhedron, so `region` may repeat a witness label.
    Transfer { across: usize, kind: SmallKind, region: usize, transfer: FaceTransfer },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub color: Color,
    /// `[R1-, R1+, R2-, R2+]`
    pub regions: [usize; 4],
    pub spare: SpareRegion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcCase {
    /// The arc stays in one region, endpoints not adjacent on it.
    InRegion,
    /// The arc crosses the diagram `omega` times.
    Transverse { omega: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Inessential { reason: String },
    GeneratesLinkGroup { which: Tunnel },
    FreeGeometricallyFinite {
        case: ArcCase,
        witness: Option<Box<Witness>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        flype: Option<FlypeTrace>,
        notes: Vec<String>,
    },
    /// Crossing arcs of general diagrams are outside the classifier.
    NotCovered { reason: String },
    CrossingArcEquivalent { region: usize, c1: usize, c2: usize },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Inessential { .. } => "inessential",
            Verdict::GeneratesLinkGroup { .. } => "generates_link_group",
            Verdict::FreeGeometricallyFinite { .. } => "free_geometrically_finite",
            Verdict::NotCovered { .. } => "not_covered",
            Verdict::CrossingArcEquivalent { .. } => "crossing_arc_equivalent",
        }
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::FreeGeometricallyFinite { witness, .. } => witness.as_deref(),
            _ => None,
        }
    }

    /// Keys of the results each verdict rests on.
    pub fn citations(&self) -> Vec<&'static str> {
        match self {
            Verdict::Inessential { .. } => vec!["inessential_arc_commuting_meridians"],
            Verdict::GeneratesLinkGroup { .. } => vec!["two_bridge_tunnels_generate"],
            Verdict::FreeGeometricallyFinite { case, flype, .. } => {
                let mut v = vec!["butterfly_regions_at_crossing", "pingpong_for_parabolic_butterflies"];
                v.push(match case {
                    ArcCase::InRegion => "distinct_regions_by_primeness",
                    ArcCase::Transverse { .. } => "distinct_regions_by_minimal_crossing",
                });
                v.push("spare_region_nonempty_complement");
                if flype.is_some() {
                    v.push("flype_reduction_to_inner_twist_regions");
                }
                v
            }
            Verdict::NotCovered { .. } => vec!["crossing_arcs_excluded"],
            Verdict::CrossingArcEquivalent { .. } => vec!["region_edge_is_crossing_arc"],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Decision {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub citations: Vec<&'static str>,
}

impl From<Verdict> for Decision {
    fn from(verdict: Verdict) -> Self {
        let citations = verdict.citations();
        Decision { verdict, citations }
    }
}

const UNIVERSAL_COVER_NOTE: &str =
    "intersections with checkerboard planes in the universal cover are not encoded; the witness is the one for arcs that miss them";

/// Classifies a meridian pair of the standard diagram of a 2-bridge link.
/// Crossing arcs of the first and last twist regions are the tunnels; inner
/// crossing arcs are flyped into an arc inside a region first.
pub fn classify_2bridge_pair(a: &TwistSequence, arc: &ArcSpec, mirror: bool) -> Result<Verdict, DecideError> {
    let d = two_bridge_diagram(a)?;
    match arc {
        ArcSpec::CrossingArc { crossing } => {
            let label = *d
                .twist_labels()
                .and_then(|l| l.get(*crossing))
                .ok_or(DiagramError::NoSuchCrossing(*crossing))?;
            let n = a.len();
            if label.region == 1 {
                return Ok(Verdict::GeneratesLinkGroup { which: Tunnel::Upper });
            }
            if label.region == n {
                return Ok(Verdict::GeneratesLinkGroup { which: Tunnel::Lower });
            }
            let (flyped, image, trace) = diagram::flype(&d, a, label.region, arc)?;
            let mut verdict = classify_alternating_pair(&flyped, &image, mirror)?;
            if let Verdict::FreeGeometricallyFinite { flype, .. } = &mut verdict {
                *flype = Some(trace);
            }
            Ok(verdict)
        }
        _ => classify_alternating_pair(&d, arc, mirror),
    }
}

/// Twist-region address to crossing, then [`classify_2bridge_pair`].
pub fn classify_2bridge_input(a: &TwistSequence, arc: &ArcInput, mirror: bool) -> Result<Verdict, DecideError> {
    let spec = match arc {
        ArcInput::Twist { region, position } => {
            let d = two_bridge_diagram(a)?;
            ArcSpec::CrossingArc { crossing: d.twist_crossing(*region, *position)? }
        }
        ArcInput::Spec(s) => s.clone(),
    };
    classify_2bridge_pair(a, &spec, mirror)
}

fn check_hyperbolic(d: &AlternatingDiagram) -> Result<(), DecideError> {
    if !diagram::is_prime(d) {
        return Err(DecideError::NotPrime);
    }
    for color in [Color::Black, Color::White] {
        let count = d.count_color(color);
        if count < 3 {
            return Err(DecideError::NotHyperbolic { color, count });
        }
    }
    Ok(())
}

/// Classifies a meridian pair of a prime alternating diagram.
pub fn classify_alternating_pair(d: &AlternatingDiagram, arc: &ArcSpec, mirror: bool) -> Result<Verdict, DecideError> {
    check_hyperbolic(d)?;
    let c = d.crossing_count();
    let check = |x: usize| if x < c { Ok(()) } else { Err(DecideError::Diagram(DiagramError::NoSuchCrossing(x))) };
    match arc {
        ArcSpec::CrossingArc { crossing } => {
            check(*crossing)?;
            Ok(Verdict::NotCovered {
                reason: format!(
                    "the crossing arc at {crossing} is excluded for general diagrams; use the 2-bridge classifier for standard diagrams"
                ),
            })
        }
        ArcSpec::InRegion { region, c1, c2 } => {
            check(*c1)?;
            check(*c2)?;
            let r = d.region(*region)?;
            if c1 == c2 {
                return Err(DecideError::MalformedArc("arc in a region needs two distinct crossings".into()));
            }
            if !r.contains_crossing(*c1) || !r.contains_crossing(*c2) {
                return Err(DecideError::MalformedArc(format!("crossings {c1}, {c2} are not both on region R{region}")));
            }
            if crossings_adjacent_in(d, *region, *c1, *c2) {
                return Ok(Verdict::CrossingArcEquivalent { region: *region, c1: *c1, c2: *c2 });
            }
            let pp = build_polyhedra(d, mirror)?;
            let color = r.color.other();
            let witness = build_witness(d, &pp, color, *c1, *c2)?;
            let mut notes = vec![UNIVERSAL_COVER_NOTE.to_string()];
            if witness.is_none() {
                notes.push("butterfly regions coincide; witness withheld".into());
            }
            Ok(Verdict::FreeGeometricallyFinite { case: ArcCase::InRegion, witness, flype: None, notes })
        }
        ArcSpec::TransverseArc { c1, c2, word } => {
            check(*c1)?;
            check(*c2)?;
            let path = ArcPath::new(d, *c1, *c2, word)?.reduced(d);
            if path.edges.is_empty() {
                let region = path.regions[0];
                if c1 == c2 {
                    return Ok(Verdict::Inessential {
                        reason: format!("the arc reduces to a loop at crossing {c1} inside region R{region}"),
                    });
                }
                return classify_alternating_pair(d, &ArcSpec::InRegion { region, c1: *c1, c2: *c2 }, mirror);
            }
            let pp = build_polyhedra(d, mirror)?;
            let witness = if c1 == c2 { None } else { build_witness(d, &pp, Color::Black, *c1, *c2)? };
            let mut notes = vec![UNIVERSAL_COVER_NOTE.to_string()];
            if word.len() != path.edges.len() {
                notes.push(format!("crossing word reduced from {} to {} edges", word.len(), path.edges.len()));
            }
            if witness.is_none() {
                notes.push(
                    "the endpoint crossings share a black region, so the crossing word may not be minimal; witness withheld".into(),
                );
            }
            Ok(Verdict::FreeGeometricallyFinite {
                case: ArcCase::Transverse { omega: path.edges.len() },
                witness,
                flype: None,
                notes,
            })
        }
    }
}

/// Arc from `c1` to `c2` through `regions[0]`, crossing `edges[k]` from
/// `regions[k]` into `regions[k + 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ArcPath {
    pub c1: usize,
    pub c2: usize,
    pub regions: Vec<usize>,
    pub edges: Vec<usize>,
}

fn other_side(d: &AlternatingDiagram, e: usize, r: usize) -> Option<usize> {
    let [a, b] = d.edge_sides(e);
    if a == r {
        Some(b)
    } else if b == r {
        Some(a)
    } else {
        None
    }
}

fn edge_touches(d: &AlternatingDiagram, e: usize, x: usize) -> bool {
    d.edges()[e].darts.iter().any(|t| t.crossing == x)
}

impl ArcPath {
    pub fn new(d: &AlternatingDiagram, c1: usize, c2: usize, word: &[usize]) -> Result<ArcPath, DecideError> {
        if word.is_empty() {
            return Err(DecideError::MalformedArc("a transverse arc crosses at least one edge".into()));
        }
        if let Some(&e) = word.iter().find(|&&e| e >= d.edges().len()) {
            return Err(DecideError::MalformedArc(format!("no edge {e}")));
        }
        let starts: Vec<usize> = d
            .regions_at(c1)
            .into_iter()
            .filter(|&r| other_side(d, word[0], r).is_some())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for start in starts {
            let mut regions = vec![start];
            let ok = word.iter().all(|&e| match other_side(d, e, *regions.last().unwrap()) {
                Some(next) => {
                    regions.push(next);
                    true
                }
                None => false,
            });
            if ok && d.regions()[*regions.last().unwrap()].contains_crossing(c2) {
                return Ok(ArcPath { c1, c2, regions, edges: word.to_vec() });
            }
        }
        Err(DecideError::MalformedArc(format!("no region path from {c1} to {c2} crosses edges {word:?} in order")))
    }

    /// Greedy bigon reduction: cancel an edge crossed twice in a row, and
    /// drop a first or last crossing of an edge at the endpoint crossing
    /// (slide the endpoint around the crossing instead). Never lengthens the
    /// word.
    pub fn reduced(mut self, d: &AlternatingDiagram) -> ArcPath {
        loop {
            if let Some(k) = (1..self.edges.len()).find(|&k| self.edges[k] == self.edges[k - 1]) {
                self.edges.drain(k - 1..=k);
                self.regions.drain(k..=k + 1);
                continue;
            }
            if let Some(&e) = self.edges.first() {
                if edge_touches(d, e, self.c1) {
                    self.edges.remove(0);
                    self.regions.remove(0);
                    continue;
                }
            }
            if let Some(&e) = self.edges.last() {
                if edge_touches(d, e, self.c2) {
                    self.edges.pop();
                    self.regions.pop();
                    continue;
                }
            }
            return self;
        }
    }
}

/// Butterfly regions of `color` at both endpoints plus the spare-region
/// certificate, or `None` when the four regions are not distinct.
fn build_witness(
    d: &AlternatingDiagram,
    pp: &IdealPolyhedronPair,
    color: Color,
    c1: usize,
    c2: usize,
) -> Result<Option<Box<Witness>>, DecideError> {
    let b1 = butterfly_regions(pp, Side::Plus, c1, color)?;
    let b2 = butterfly_regions(pp, Side::Plus, c2, color)?;
    let regions = [b1.minus, b1.plus, b2.minus, b2.plus];
    if regions.iter().collect::<BTreeSet<_>>().len() < 4 {
        return Ok(None);
    }
    let spare = witness_spare_region(d, pp, color, &regions)?;
    Ok(Some(Box::new(Witness { color, regions, spare })))
}

/// A region certifying that the complement of the two butterflies is
/// non-empty.
pub fn witness_spare_region(
    d: &AlternatingDiagram,
    pp: &IdealPolyhedronPair,
    color: Color,
    regions: &[usize],
) -> Result<SpareRegion, DecideError> {
    let count = d.count_color(color);
    if count > regions.len() {
        let spare = d
            .regions()
            .iter()
            .find(|r| r.color == color && !regions.contains(&r.id))
            .map(|r| r.id)
            .expect("more regions of the colour than witnesses");
        return Ok(SpareRegion::Direct { region: spare, disjoint_from: regions.to_vec() });
    }
    match find_small_region(d, color)? {
        SmallRegion::Found { region: across, kind, neighbors } => {
            let spare = d
                .regions()
                .iter()
                .find(|r| r.color == color && !neighbors.contains(&r.id))
                .map(|r| r.id)
                .ok_or(DiagramError::LemmaViolation { color: color.other(), count })?;
            let transfer = face_transfer(pp, across)?;
            Ok(SpareRegion::Transfer { across, kind, region: spare, transfer })
        }
        SmallRegion::NoneNeeded { count } => Err(DecideError::Diagram(DiagramError::LemmaViolation { color, count })),
    }
}

impl Witness {
    /// Re-checks the witness: four distinct regions of one colour, each pair
    /// at a crossing really meeting it, and a spare region whose half-space
    /// misses the butterflies.
    pub fn verify(&self, d: &AlternatingDiagram, pp: &IdealPolyhedronPair, c1: usize, c2: usize) -> bool {
        let distinct = self.regions.iter().collect::<BTreeSet<_>>().len() == 4;
        let colored = self.regions.iter().all(|&r| d.regions()[r].color == self.color);
        let at = |r: usize, x: usize| d.regions()[r].contains_crossing(x);
        let incident = at(self.regions[0], c1) && at(self.regions[1], c1) && at(self.regions[2], c2) && at(self.regions[3], c2);
        let spare_ok = match &self.spare {
            SpareRegion::Direct { region, disjoint_from } => {
                d.regions()[*region].color == self.color
                    && disjoint_from
                        .iter()
                        .all(|&r| r != *region && halfspace_disjoint(pp, Side::Plus, *region, r).unwrap_or(false))
            }
            SpareRegion::Transfer { across, region, transfer, .. } => {
                let n = transfer.neighbors.len();
                d.regions()[*across].color == self.color.other()
                    && n <= 3
                    && halfspace_disjoint(pp, Side::Plus, *across, *region).unwrap_or(false)
                    && transfer.power(n) == (0..n).collect::<Vec<_>>()
            }
        };
        distinct && colored && incident && spare_ok
    }
}
