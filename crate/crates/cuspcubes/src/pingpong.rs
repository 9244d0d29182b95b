//! Parabolic Möbius maps, isometric-circle butterflies and the round-disk
//! ping-pong certificate.
//!
//! Everything on the certified path is exact over the Gaussian rationals.
//! Radii are kept squared so that disk comparisons stay rational.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

pub type Gauss = Complex<BigRational>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PingPongError {
    #[error("determinant must be exactly 1, got {0}")]
    Determinant(String),
    #[error("map is not parabolic (trace {0})")]
    NotParabolic(String),
    #[error("identity has no distinguished fixed point")]
    Identity,
    #[error("map fixes infinity; conjugate first (see normalize_pair)")]
    FixesInfinity,
    #[error("generators share the fixed point {0}")]
    SameFixedPoint(String),
    #[error("cannot parse {0:?} as a Gaussian rational")]
    ParseEntry(String),
    #[error("cannot parse {0:?} as a 2x2 matrix")]
    ParseMatrix(String),
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn gauss(re: i64, im: i64) -> Gauss {
    Complex::new(rat(re), rat(im))
}

fn real(q: BigRational) -> Gauss {
    Complex::new(q, BigRational::zero())
}

fn norm_sq(z: &Gauss) -> BigRational {
    &z.re * &z.re + &z.im * &z.im
}

pub fn format_gauss(z: &Gauss) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => z.re.to_string(),
        (true, false) => format!("{}i", z.im),
        (false, false) if z.im.is_negative() => format!("{}-{}i", z.re, -&z.im),
        _ => format!("{}+{}i", z.re, z.im),
    }
}

fn parse_rat(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s {
        "" | "+" => Some(BigRational::one()),
        "-" => Some(-BigRational::one()),
        _ => s.trim_start_matches('+').parse().ok(),
    }
}

/// Parses `3`, `-1/2`, `2i`, `-i`, `1/2-3/4i`.
pub fn parse_gauss(s: &str) -> Result<Gauss, PingPongError> {
    let err = || PingPongError::ParseEntry(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(body) = t.strip_suffix('i') {
        // split at the last sign that is not the leading one
        let cut = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
        let (re, im) = match cut {
            Some(i) => (parse_rat(&body[..i]).ok_or_else(err)?, parse_rat(&body[i..]).ok_or_else(err)?),
            None => (BigRational::zero(), parse_rat(body).ok_or_else(err)?),
        };
        Ok(Complex::new(re, im))
    } else {
        Ok(real(parse_rat(&t).filter(|_| !t.is_empty()).ok_or_else(err)?))
    }
}

/// Point of the Riemann sphere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Point {
    Finite(Gauss),
    Infinity,
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => write!(f, "{}", format_gauss(z)),
            Point::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Element of PSL(2, Q(i)), stored with determinant 1.
#[derive(Clone, Debug)]
pub struct MobiusMap {
    pub a: Gauss,
    pub b: Gauss,
    pub c: Gauss,
    pub d: Gauss,
}

impl PartialEq for MobiusMap {
    fn eq(&self, o: &Self) -> bool {
        let same = self.a == o.a && self.b == o.b && self.c == o.c && self.d == o.d;
        same || (self.a == -&o.a && self.b == -&o.b && self.c == -&o.c && self.d == -&o.d)
    }
}

impl Eq for MobiusMap {}

impl MobiusMap {
    pub fn new(a: Gauss, b: Gauss, c: Gauss, d: Gauss) -> Result<Self, PingPongError> {
        let det = &a * &d - &b * &c;
        if !det.is_one() {
            return Err(PingPongError::Determinant(format_gauss(&det)));
        }
        Ok(MobiusMap { a, b, c, d })
    }

    pub fn from_ints(m: [[i64; 2]; 2]) -> Result<Self, PingPongError> {
        Self::new(gauss(m[0][0], 0), gauss(m[0][1], 0), gauss(m[1][0], 0), gauss(m[1][1], 0))
    }

    pub fn identity() -> Self {
        MobiusMap { a: gauss(1, 0), b: gauss(0, 0), c: gauss(0, 0), d: gauss(1, 0) }
    }

    pub fn compose(&self, o: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: &self.a * &o.a + &self.b * &o.c,
            b: &self.a * &o.b + &self.b * &o.d,
            c: &self.c * &o.a + &self.d * &o.c,
            d: &self.c * &o.b + &self.d * &o.d,
        }
    }

    pub fn inverse(&self) -> MobiusMap {
        MobiusMap { a: self.d.clone(), b: -&self.b, c: -&self.c, d: self.a.clone() }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn trace(&self) -> Gauss {
        &self.a + &self.d
    }

    pub fn apply(&self, z: &Point) -> Point {
        match z {
            Point::Infinity if self.c.is_zero() => Point::Infinity,
            Point::Infinity => Point::Finite(&self.a / &self.c),
            Point::Finite(z) => {
                let den = &self.c * z + &self.d;
                if den.is_zero() {
                    Point::Infinity
                } else {
                    Point::Finite((&self.a * z + &self.b) / den)
                }
            }
        }
    }

    pub fn is_parabolic(&self) -> bool {
        let t = self.trace();
        (t == gauss(2, 0) || t == gauss(-2, 0)) && !self.is_identity()
    }

    /// The unique fixed point of a parabolic map.
    pub fn fixed_point(&self) -> Result<Point, PingPongError> {
        if self.is_identity() {
            return Err(PingPongError::Identity);
        }
        if !self.is_parabolic() {
            return Err(PingPongError::NotParabolic(format_gauss(&self.trace())));
        }
        if self.c.is_zero() {
            return Ok(Point::Infinity);
        }
        Ok(Point::Finite((&self.a - &self.d) / (real(rat(2)) * &self.c)))
    }

    /// `g m g^-1`
    pub fn conjugate_by(&self, g: &MobiusMap) -> MobiusMap {
        g.compose(self).compose(&g.inverse())
    }

    pub fn to_f64(&self) -> FloatMap {
        let f = |z: &Gauss| Complex64::new(z.re.to_f64().unwrap_or(f64::NAN), z.im.to_f64().unwrap_or(f64::NAN));
        FloatMap { a: f(&self.a), b: f(&self.b), c: f(&self.c), d: f(&self.d) }
    }
}

impl fmt::Display for MobiusMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            format_gauss(&self.a),
            format_gauss(&self.b),
            format_gauss(&self.c),
            format_gauss(&self.d)
        )
    }
}

/// Accepts `[[a,b],[c,d]]` or `a,b,c,d` with Gaussian rational entries.
impl FromStr for MobiusMap {
    type Err = PingPongError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let flat: String = s.chars().filter(|c| !"[] ".contains(*c)).collect();
        let parts: Vec<&str> = flat.split(',').collect();
        if parts.len() != 4 {
            return Err(PingPongError::ParseMatrix(s.to_string()));
        }
        let e: Vec<Gauss> = parts.iter().map(|p| parse_gauss(p)).collect::<Result<_, _>>()?;
        MobiusMap::new(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone())
    }
}

fn pair(z: &Gauss) -> [String; 2] {
    [z.re.to_string(), z.im.to_string()]
}

impl Serialize for MobiusMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [pair(&self.a), pair(&self.b), pair(&self.c), pair(&self.d)].serialize(s)
    }
}

/// Closed round disk in C, radius stored squared.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundDisk {
    pub center: Gauss,
    pub radius_sq: BigRational,
}

impl RoundDisk {
    pub fn radius(&self) -> f64 {
        self.radius_sq.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    pub fn on_boundary(&self, z: &Gauss) -> bool {
        norm_sq(&(z - &self.center)) == self.radius_sq
    }

    pub fn contains_interior(&self, z: &Gauss) -> bool {
        norm_sq(&(z - &self.center)) < self.radius_sq
    }
}

impl Serialize for RoundDisk {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            center: [String; 2],
            radius_sq: String,
            radius: f64,
        }
        Repr { center: pair(&self.center), radius_sq: self.radius_sq.to_string(), radius: self.radius() }.serialize(s)
    }
}

/// Interiors of two closed disks are disjoint iff `|z1 - z2| >= r1 + r2`.
/// Squared: with `D = |z1 - z2|^2` and `s = r1^2 + r2^2`, that is
/// `D - s >= 0` and `(D - s)^2 >= 4 r1^2 r2^2`.
pub fn disks_disjoint(p: &RoundDisk, q: &RoundDisk) -> bool {
    let dist = norm_sq(&(&p.center - &q.center));
    let gap = dist - &p.radius_sq - &q.radius_sq;
    !gap.is_negative() && &gap * &gap >= rat(4) * &p.radius_sq * &q.radius_sq
}

/// Are all pairwise interiors disjoint?
pub fn disjoint_interiors(disks: &[RoundDisk]) -> bool {
    first_overlap(disks).is_none()
}

fn first_overlap(disks: &[RoundDisk]) -> Option<(usize, usize)> {
    (0..disks.len())
        .flat_map(|i| (i + 1..disks.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !disks_disjoint(&disks[i], &disks[j]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Butterfly {
    pub map: MobiusMap,
    pub neg: RoundDisk,
    pub pos: RoundDisk,
}

/// The isometric circles of `m` and `m^-1`: `m` sends the outside of `neg`
/// onto `pos`.
pub fn isometric_butterfly(m: &MobiusMap) -> Result<Butterfly, PingPongError> {
    let fix = m.fixed_point()?;
    if m.c.is_zero() {
        return Err(PingPongError::FixesInfinity);
    }
    let radius_sq = BigRational::one() / norm_sq(&m.c);
    let neg = RoundDisk { center: -&m.d / &m.c, radius_sq: radius_sq.clone() };
    let pos = RoundDisk { center: &m.a / &m.c, radius_sq };
    let bf = Butterfly { map: m.clone(), neg, pos };
    debug_assert!(bf.verify());
    let _ = fix;
    Ok(bf)
}

impl Butterfly {
    /// Checks the mapping relation exactly on three boundary points
    /// `(w - d) / c` with `w` in `{1, -1, i}`, one exterior point, and
    /// tangency of the two disks at the fixed point.
    pub fn verify(&self) -> bool {
        let m = &self.map;
        let boundary_ok = [gauss(1, 0), gauss(-1, 0), gauss(0, 1)].iter().all(|w| {
            let z = (w - &m.d) / &m.c;
            self.neg.on_boundary(&z)
                && matches!(m.apply(&Point::Finite(z)), Point::Finite(ref img) if self.pos.on_boundary(img))
        });
        // infinity lies outside neg and lands on the center of pos
        let inside = matches!(m.apply(&Point::Infinity), Point::Finite(ref z) if self.pos.contains_interior(z));
        let tangent = match m.fixed_point() {
            Ok(Point::Finite(p)) => {
                self.neg.on_boundary(&p) && self.pos.on_boundary(&p) && disks_disjoint(&self.neg, &self.pos)
            }
            _ => false,
        };
        boundary_ok && inside && tangent
    }

    /// The butterfly of the inverse map: the two disks trade places.
    pub fn inverted(&self) -> Butterfly {
        Butterfly { map: self.map.inverse(), neg: self.pos.clone(), pos: self.neg.clone() }
    }
}

/// Simultaneous conjugation moving both fixed points into C. Returns the
/// conjugated pair and the conjugator `g` (new map = `g m g^-1`).
pub fn normalize_pair(m1: &MobiusMap, m2: &MobiusMap) -> Result<(MobiusMap, MobiusMap, MobiusMap), PingPongError> {
    let f1 = m1.fixed_point()?;
    let f2 = m2.fixed_point()?;
    if f1 == f2 {
        return Err(PingPongError::SameFixedPoint(f1.to_string()));
    }
    if f1 != Point::Infinity && f2 != Point::Infinity {
        return Ok((m1.clone(), m2.clone(), MobiusMap::identity()));
    }
    // z -> -1/(z - t) with t not a fixed point
    let t = (0..)
        .map(|k| Point::Finite(gauss(k, 0)))
        .find(|p| *p != f1 && *p != f2)
        .and_then(|p| match p {
            Point::Finite(z) => Some(z),
            Point::Infinity => None,
        })
        .expect("some integer avoids two points");
    let g = MobiusMap { a: gauss(0, 0), b: gauss(1, 0), c: gauss(-1, 0), d: t };
    Ok((m1.conjugate_by(&g), m2.conjugate_by(&g), g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PingPongVerdict {
    FreeCertified { butterflies: Box<[Butterfly; 2]> },
    Commuting { fixed_point: Point },
    Inconclusive { diagnostic: String, overlap: (usize, usize) },
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    #[serde(flatten)]
    pub verdict: PingPongVerdict,
    pub conjugator: MobiusMap,
    pub checked_words: u64,
    /// No checked word was the identity.
    pub words_ok: bool,
    pub numeric: bool,
    pub remarks: Vec<String>,
}

const DISK_NAMES: [&str; 4] = ["neg(m1)", "pos(m1)", "neg(m2)", "pos(m2)"];

/// Exact round-disk ping-pong test for two parabolic maps.
pub fn pingpong_certificate(m1: &MobiusMap, m2: &MobiusMap) -> Result<PingPongVerdict, PingPongError> {
    let f1 = m1.fixed_point()?;
    let f2 = m2.fixed_point()?;
    if f1 == f2 {
        return Ok(PingPongVerdict::Commuting { fixed_point: f1 });
    }
    let (n1, n2, _) = normalize_pair(m1, m2)?;
    let b1 = isometric_butterfly(&n1)?;
    let b2 = isometric_butterfly(&n2)?;
    let disks = [b1.neg.clone(), b1.pos.clone(), b2.neg.clone(), b2.pos.clone()];
    Ok(match first_overlap(&disks) {
        None => PingPongVerdict::FreeCertified { butterflies: Box::new([b1, b2]) },
        Some((i, j)) => PingPongVerdict::Inconclusive {
            diagnostic: format!("isometric disks {} and {} overlap", DISK_NAMES[i], DISK_NAMES[j]),
            overlap: (i, j),
        },
    })
}

/// Certificate with the sanity word count and remarks attached.
pub fn certify(m1: &MobiusMap, m2: &MobiusMap, words: usize) -> Result<Certificate, PingPongError> {
    let verdict = pingpong_certificate(m1, m2)?;
    let conjugator = match &verdict {
        PingPongVerdict::Commuting { .. } => MobiusMap::identity(),
        _ => normalize_pair(m1, m2)?.2,
    };
    let mut remarks = Vec::new();
    let mut checked_words = 0;
    let mut words_ok = true;
    if let PingPongVerdict::FreeCertified { .. } = verdict {
        remarks.push(
            "four closed round disks with disjoint interiors cannot cover the sphere, so the complement of their union is non-empty".into(),
        );
        remarks.push(
            "a group generated by two parabolics with butterflies is free of rank 2 and geometrically finite (ping-pong, with Maskit's combination theorem); only the disk combinatorics is verified here".into(),
        );
        checked_words = count_reduced_words(words);
        words_ok = free_word_sanity(m1, m2, words);
        if !words_ok {
            remarks.push("word check found an identity: certificate is inconsistent".into());
        }
    }
    if let PingPongVerdict::Inconclusive { .. } = verdict {
        remarks.push("inconclusive is not a claim that the group is not free".into());
    }
    Ok(Certificate { verdict, conjugator, checked_words, words_ok, numeric: false, remarks })
}

/// Number of non-empty reduced words of length at most `n` in two generators.
pub fn count_reduced_words(n: usize) -> u64 {
    (1..=n as u32).map(|k| 4 * 3u64.pow(k - 1)).sum()
}

/// Matrix over Z[i] standing for `self / scale^len`.
#[derive(Clone)]
struct IntMat([Complex<BigInt>; 4]);

impl IntMat {
    fn mul(&self, o: &IntMat) -> IntMat {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        IntMat([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    fn is_scalar(&self) -> bool {
        self.0[1].is_zero() && self.0[2].is_zero() && self.0[0] == self.0[3]
    }
}

fn scaled(m: &MobiusMap) -> IntMat {
    let entries = [&m.a, &m.b, &m.c, &m.d];
    let den = entries
        .iter()
        .flat_map(|z| [z.re.denom().clone(), z.im.denom().clone()])
        .fold(BigInt::one(), num_integer::lcm);
    let to_int = |z: &Gauss| {
        let s = BigRational::from_integer(den.clone());
        Complex::new((&z.re * &s).to_integer(), (&z.im * &s).to_integer())
    };
    IntMat([to_int(&m.a), to_int(&m.b), to_int(&m.c), to_int(&m.d)])
}

/// Every non-empty reduced word of length at most `max_length` in
/// `m1^{+-1}, m2^{+-1}` is checked to differ from the identity in PSL(2,C).
pub fn free_word_sanity(m1: &MobiusMap, m2: &MobiusMap, max_length: usize) -> bool {
    find_identity_word(m1, m2, max_length).is_none()
}

/// Letters are 0 = m1, 1 = m1^-1, 2 = m2, 3 = m2^-1.
pub fn find_identity_word(m1: &MobiusMap, m2: &MobiusMap, max_length: usize) -> Option<Vec<usize>> {
    if max_length == 0 {
        return None;
    }
    let gens = [scaled(m1), scaled(&m1.inverse()), scaled(m2), scaled(&m2.inverse())];
    fn walk(gens: &[IntMat; 4], acc: &IntMat, word: &mut Vec<usize>, left: usize) -> Option<Vec<usize>> {
        if acc.is_scalar() {
            return Some(word.clone());
        }
        if left == 0 {
            return None;
        }
        let last = *word.last().unwrap();
        for g in 0..4 {
            if g == last ^ 1 {
                continue;
            }
            word.push(g);
            let found = walk(gens, &acc.mul(&gens[g]), word, left - 1);
            word.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    (0..4usize)
        .into_par_iter()
        .filter_map(|g| walk(&gens, &gens[g], &mut vec![g], max_length - 1))
        .min_by_key(|w| w.len())
}

pub fn word_string(word: &[usize]) -> String {
    word.iter().map(|&g| ["m1", "m1^-1", "m2", "m2^-1"][g]).collect::<Vec<_>>().join(" ")
}

// ---------------------------------------------------------------------------
// Floating path for inputs that are not Gaussian rationals

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FloatMap {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FloatDisk {
    pub center: Complex64,
    pub radius: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FloatVerdict {
    NumericallyCertified { disks: [FloatDisk; 4], tolerance: f64 },
    Commuting,
    Inconclusive { diagnostic: String },
}

impl FloatMap {
    fn normalized(self) -> Result<FloatMap, PingPongError> {
        let det = self.a * self.d - self.b * self.c;
        if det.norm() < DEFAULT_TOLERANCE {
            return Err(PingPongError::Determinant(det.to_string()));
        }
        let s = det.sqrt();
        Ok(FloatMap { a: self.a / s, b: self.b / s, c: self.c / s, d: self.d / s })
    }

    fn conj(&self, g: &FloatMap) -> FloatMap {
        let gi = FloatMap { a: g.d, b: -g.b, c: -g.c, d: g.a };
        let mul = |p: &FloatMap, q: &FloatMap| FloatMap {
            a: p.a * q.a + p.b * q.c,
            b: p.a * q.b + p.b * q.d,
            c: p.c * q.a + p.d * q.c,
            d: p.c * q.b + p.d * q.d,
        };
        mul(&mul(g, self), &gi)
    }

    /// `None` for infinity.
    fn fixed_point(&self, tol: f64) -> Option<Complex64> {
        (self.c.norm() > tol).then(|| (self.a - self.d) / (2.0 * self.c))
    }
}

/// Floating-point version of the certificate. Disks must clear each other by
/// `tol`; tangency within `tol` counts as disjoint.
pub fn pingpong_certificate_f64(m1: FloatMap, m2: FloatMap, tol: f64) -> Result<FloatVerdict, PingPongError> {
    let (m1, m2) = (m1.normalized()?, m2.normalized()?);
    for m in [&m1, &m2] {
        let t = m.a + m.d;
        if (t.norm() - 2.0).abs() > tol.sqrt() || t.im.abs() > tol.sqrt() {
            return Err(PingPongError::NotParabolic(t.to_string()));
        }
    }
    let (f1, f2) = (m1.fixed_point(tol), m2.fixed_point(tol));
    let same = match (f1, f2) {
        (None, None) => true,
        (Some(p), Some(q)) => (p - q).norm() <= tol,
        _ => false,
    };
    if same {
        return Ok(FloatVerdict::Commuting);
    }
    let (m1, m2) = if f1.is_none() || f2.is_none() {
        let t = (0..)
            .map(|k| Complex64::new(k as f64, 0.0))
            .find(|z| [f1, f2].iter().all(|f| f.is_none_or(|f| (f - z).norm() > tol)))
            .unwrap();
        let one = Complex64::new(1.0, 0.0);
        let g = FloatMap { a: Complex64::new(0.0, 0.0), b: one, c: -one, d: t };
        (m1.conj(&g), m2.conj(&g))
    } else {
        (m1, m2)
    };
    let disks_of = |m: &FloatMap| {
        let r = 1.0 / m.c.norm();
        [FloatDisk { center: -m.d / m.c, radius: r }, FloatDisk { center: m.a / m.c, radius: r }]
    };
    let [p, q] = disks_of(&m1);
    let [u, v] = disks_of(&m2);
    let disks = [p, q, u, v];
    for i in 0..4 {
        for j in i + 1..4 {
            let gap = (disks[i].center - disks[j].center).norm() - disks[i].radius - disks[j].radius;
            if gap < -tol {
                return Ok(FloatVerdict::Inconclusive {
                    diagnostic: format!("isometric disks {} and {} overlap by {:e}", DISK_NAMES[i], DISK_NAMES[j], -gap),
                });
            }
        }
    }
    Ok(FloatVerdict::NumericallyCertified { disks, tolerance: tol })
}
