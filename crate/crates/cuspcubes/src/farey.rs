//! Slopes on the Farey tessellation: continued fractions, edge-path
//! distance, automorphisms and the classification predicates for 2-bridge
//! links and rational links in projective space.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FareyError {
    #[error("0/0 is not a slope")]
    ZeroOverZero,
    #[error("slope {0} compared with itself")]
    SelfAdjacency(Slope),
    #[error("1/0 has no continued fraction expansion")]
    InfiniteExpansion,
    #[error("slope {0} is trivial, it has no covering slope")]
    TrivialSlope(Slope),
    #[error("continued fraction has no terms")]
    EmptyTerms,
    #[error("continued fraction term {0} is not positive")]
    NonPositiveTerm(i64),
    #[error("integer overflow")]
    Overflow,
    #[error("cannot parse slope from {0:?}")]
    Parse(String),
}

/// Reduced element q/p of the extended rationals, with 1/0 standing for infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Slope {
    q: i64,
    p: i64,
}

pub fn reduce_slope(q: i64, p: i64) -> Result<Slope, FareyError> {
    reduce_wide(q as i128, p as i128)
}

fn reduce_wide(q: i128, p: i128) -> Result<Slope, FareyError> {
    if q == 0 && p == 0 {
        return Err(FareyError::ZeroOverZero);
    }
    if p == 0 {
        return Ok(Slope::INFINITY);
    }
    let g = q.gcd(&p);
    let (mut q, mut p) = (q / g, p / g);
    if p < 0 {
        q = -q;
        p = -p;
    }
    let q = i64::try_from(q).map_err(|_| FareyError::Overflow)?;
    let p = i64::try_from(p).map_err(|_| FareyError::Overflow)?;
    Ok(Slope { q, p })
}

impl Slope {
    pub const INFINITY: Slope = Slope { q: 1, p: 0 };
    pub const ZERO: Slope = Slope { q: 0, p: 1 };

    pub fn new(q: i64, p: i64) -> Result<Self, FareyError> {
        reduce_slope(q, p)
    }

    pub fn integer(n: i64) -> Self {
        Slope { q: n, p: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.q
    }

    pub fn denominator(&self) -> i64 {
        self.p
    }

    pub fn is_infinite(&self) -> bool {
        self.p == 0
    }

    pub fn is_integer(&self) -> bool {
        self.p == 1
    }

    pub fn negate(&self) -> Slope {
        if self.is_infinite() {
            *self
        } else {
            Slope { q: -self.q, p: self.p }
        }
    }

    pub fn reciprocal(&self) -> Slope {
        reduce_slope(self.p, self.q).expect("reduced slopes are never 0/0")
    }

    /// Largest integer not exceeding the slope. Panics on infinity.
    pub fn floor(&self) -> i64 {
        assert!(!self.is_infinite());
        Integer::div_floor(&self.q, &self.p)
    }

    fn shift(&self, k: i64) -> Slope {
        if self.is_infinite() {
            *self
        } else {
            Slope { q: self.q + k * self.p, p: self.p }
        }
    }

    /// Compares finite slopes by value; infinity sorts last.
    pub fn cmp_value(&self, other: &Slope) -> std::cmp::Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => std::cmp::Ordering::Equal,
            (true, false) => std::cmp::Ordering::Greater,
            (false, true) => std::cmp::Ordering::Less,
            _ => (self.q as i128 * other.p as i128).cmp(&(other.q as i128 * self.p as i128)),
        }
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.q, self.p)
    }
}

impl FromStr for Slope {
    type Err = FareyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let bad = || FareyError::Parse(s.to_string());
        if matches!(t, "inf" | "infinity" | "∞") {
            return Ok(Slope::INFINITY);
        }
        match t.split_once('/') {
            Some((a, b)) => {
                let q = a.trim().parse::<i64>().map_err(|_| bad())?;
                let p = b.trim().parse::<i64>().map_err(|_| bad())?;
                reduce_slope(q, p)
            }
            None => Ok(Slope::integer(t.parse::<i64>().map_err(|_| bad())?)),
        }
    }
}

impl Serialize for Slope {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Slope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Pair { q: i64, p: i64 },
        }
        let slope = match Repr::deserialize(deserializer)? {
            Repr::Text(s) => s.parse(),
            Repr::Pair { q, p } => reduce_slope(q, p),
        };
        slope.map_err(serde::de::Error::custom)
    }
}

pub fn farey_adjacent(r: Slope, s: Slope) -> Result<bool, FareyError> {
    if r == s {
        return Err(FareyError::SelfAdjacency(r));
    }
    Ok(adjacent(r, s))
}

fn adjacent(r: Slope, s: Slope) -> bool {
    (r.q as i128 * s.p as i128 - s.q as i128 * r.p as i128).abs() == 1
}

/// Vertices of the triangles crossed by the vertical geodesic from infinity
/// down to `r`: infinity, the two integers around `r` and the Stern–Brocot
/// ancestors of `r`.
fn ladder(r: Slope) -> Vec<Slope> {
    if r.is_infinite() {
        return vec![r];
    }
    let a0 = r.floor();
    let mut out = vec![Slope::INFINITY, Slope::integer(a0), Slope::integer(a0 + 1)];
    if r.is_integer() {
        return out;
    }
    let (mut left, mut right) = ((a0, 1i64), (a0 + 1, 1i64));
    loop {
        let m = (left.0 + right.0, left.1 + right.1);
        let ms = Slope { q: m.0, p: m.1 };
        out.push(ms);
        if ms == r {
            break;
        }
        if (r.q as i128) * (m.1 as i128) < (m.0 as i128) * (r.p as i128) {
            right = m;
        } else {
            left = m;
        }
    }
    out
}

/// Edge-path distance in the 1-skeleton of the Farey tessellation.
///
/// Breadth-first search over the convergents and mediants of both endpoints.
pub fn farey_distance(r: Slope, s: Slope) -> u32 {
    if r == s {
        return 0;
    }
    let mut verts = ladder(r);
    verts.extend(ladder(s));
    if !r.is_infinite() && !s.is_infinite() {
        let (lo, hi) = (r.floor().min(s.floor()), r.floor().max(s.floor()) + 1);
        if hi - lo <= 8 {
            verts.extend((lo..=hi).map(Slope::integer));
        }
    }
    verts.sort();
    verts.dedup();
    let index: HashMap<Slope, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut dist = vec![u32::MAX; verts.len()];
    let start = index[&r];
    let goal = index[&s];
    dist[start] = 0;
    let mut queue = VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        if i == goal {
            return dist[i];
        }
        for j in 0..verts.len() {
            if dist[j] == u32::MAX && adjacent(verts[i], verts[j]) {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    unreachable!("the Farey graph is connected")
}

/// a0 + [a1, ..., an] with every ai >= 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuedFraction {
    pub integer_part: i64,
    pub terms: Vec<i64>,
}

impl ContinuedFraction {
    pub fn new(integer_part: i64, terms: Vec<i64>) -> Result<Self, FareyError> {
        if terms.is_empty() {
            return Err(FareyError::EmptyTerms);
        }
        if let Some(&t) = terms.iter().find(|&&t| t < 1) {
            return Err(FareyError::NonPositiveTerm(t));
        }
        Ok(ContinuedFraction { integer_part, terms })
    }

    /// Absorbs a trailing 1 into the previous term when there are two or more terms.
    pub fn canonical(mut self) -> Self {
        while self.terms.len() >= 2 && *self.terms.last().unwrap() == 1 {
            self.terms.pop();
            *self.terms.last_mut().unwrap() += 1;
        }
        self
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}+[{}]", self.integer_part, terms.join(","))
    }
}

/// Canonical expansion. Integers m expand as (m-1) + [1].
pub fn cf_expand(r: Slope) -> Result<ContinuedFraction, FareyError> {
    if r.is_infinite() {
        return Err(FareyError::InfiniteExpansion);
    }
    if r.is_integer() {
        return Ok(ContinuedFraction { integer_part: r.q - 1, terms: vec![1] });
    }
    let a0 = r.floor();
    let (mut num, mut den) = (r.p, r.q - a0 * r.p);
    let mut terms = Vec::new();
    while den != 0 {
        terms.push(num / den);
        (num, den) = (den, num % den);
    }
    Ok(ContinuedFraction { integer_part: a0, terms }.canonical())
}

pub fn cf_value(cf: &ContinuedFraction) -> Result<Slope, FareyError> {
    let cf = ContinuedFraction::new(cf.integer_part, cf.terms.clone())?;
    let over = |x: Option<i128>| x.ok_or(FareyError::Overflow);
    let (mut h, mut k): (i128, i128) = (*cf.terms.last().unwrap() as i128, 1);
    for &a in cf.terms.iter().rev().skip(1) {
        (h, k) = (over((a as i128).checked_mul(h).and_then(|x| x.checked_add(k)))?, h);
    }
    let num = over((cf.integer_part as i128).checked_mul(h).and_then(|x| x.checked_add(k)))?;
    reduce_wide(num, h)
}

/// Slope of the covering 2-bridge link of the rational link of slope `r` in projective space.
pub fn covering_slope(r: Slope) -> Result<Slope, FareyError> {
    if r.is_infinite() || r.q == 0 {
        return Err(FareyError::TrivialSlope(r));
    }
    if r.q < 0 {
        return Ok(covering_slope(r.negate())?.negate());
    }
    let cf = cf_expand(r)?;
    let a = &cf.terms;
    let n = a.len();
    let mut seq = Vec::with_capacity(2 * n + 1);
    if cf.integer_part != 0 {
        seq.extend(a.iter().rev());
        seq.push(2 * cf.integer_part);
        seq.extend(a.iter());
    } else {
        seq.extend(a[1..].iter().rev());
        seq.push(2 * a[0]);
        seq.extend(a[1..].iter());
    }
    let value = cf_value(&ContinuedFraction::new(0, seq)?)?;
    Ok(if n % 2 == 0 { value.negate() } else { value })
}

/// Element of Aut of the tessellation: an integer matrix of determinant +-1 up to sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FareyAut {
    pub matrix: [[i64; 2]; 2],
}

impl FareyAut {
    pub const IDENTITY: FareyAut = FareyAut { matrix: [[1, 0], [0, 1]] };

    /// Normalizes the global sign. Returns `None` unless the determinant is +-1.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Option<Self> {
        let det = a as i128 * d as i128 - b as i128 * c as i128;
        if det.abs() != 1 {
            return None;
        }
        let flip = c < 0 || (c == 0 && d < 0);
        let m = if flip { [[-a, -b], [-c, -d]] } else { [[a, b], [c, d]] };
        Some(FareyAut { matrix: m })
    }

    pub fn translation(k: i64) -> Self {
        FareyAut::new(1, k, 0, 1).unwrap()
    }

    pub fn determinant(&self) -> i64 {
        let [[a, b], [c, d]] = self.matrix;
        a * d - b * c
    }

    pub fn orientation_preserving(&self) -> bool {
        self.determinant() == 1
    }

    pub fn apply(&self, x: Slope) -> Slope {
        let [[a, b], [c, d]] = self.matrix.map(|row| row.map(|v| v as i128));
        let (q, p) = (x.q as i128, x.p as i128);
        reduce_wide(a * q + b * p, c * q + d * p).expect("unimodular maps are injective")
    }

    pub fn compose(&self, inner: &FareyAut) -> FareyAut {
        let [[a, b], [c, d]] = self.matrix;
        let [[e, f], [g, h]] = inner.matrix;
        FareyAut::new(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)
            .expect("product of unimodular matrices")
    }
}

impl fmt::Display for FareyAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.matrix;
        write!(f, "[[{a},{b}],[{c},{d}]]")
    }
}

/// Searches for an orientation-preserving automorphism with
/// (eta(r), eta(-r)) = (r_tilde, infinity).
pub fn covering_automorphism(r: Slope, r_tilde: Slope) -> Option<FareyAut> {
    if r.is_infinite() || r.q == 0 {
        return None;
    }
    let bound = r.p.max(r.q.abs());
    let minus = r.negate();
    for c in 0..=bound {
        for d in -bound..=bound {
            // eta(-r) = infinity forces c*(-q) + d*p = 0
            if c == 0 || (c as i128) * (minus.q as i128) + (d as i128) * (r.p as i128) != 0 {
                continue;
            }
            if c.gcd(&d) != 1 {
                continue;
            }
            // a*d - b*c = 1, then shift a by multiples of c to hit r_tilde
            let (g, x, y) = ext_gcd(d, c);
            let base = FareyAut::new(x * g, -y * g, c, d)?;
            let img = base.apply(r);
            let diff = reduce_slope(r_tilde.q * img.p - img.q * r_tilde.p, r_tilde.p * img.p).ok()?;
            if diff.is_integer() {
                let eta = FareyAut::translation(diff.q).compose(&base);
                if eta.apply(r) == r_tilde && eta.apply(minus).is_infinite() {
                    return Some(eta);
                }
            }
        }
    }
    None
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    (e.gcd, e.x, e.y)
}

/// Whether K(r) and K(s) are homeomorphic, with a witnessing automorphism
/// mapping {r, infinity} onto {s, infinity}.
///
/// With `orientation_preserving`, only witnesses with
/// (xi(r), xi(inf)) = (s, inf) and det +1, or (inf, s) and det -1, count.
pub fn two_bridge_equivalent(r: Slope, s: Slope, orientation_preserving: bool) -> Option<FareyAut> {
    if r.is_infinite() || s.is_infinite() {
        return (r == s).then_some(FareyAut::IDENTITY);
    }
    // xi fixes infinity: x -> x + k or x -> -x + k
    if r.p == s.p {
        if (s.q - r.q) % r.p == 0 {
            return Some(FareyAut::translation((s.q - r.q) / r.p));
        }
        if !orientation_preserving && (s.q + r.q) % r.p == 0 {
            return FareyAut::new(-1, (s.q + r.q) / r.p, 0, 1);
        }
        // xi swaps r and infinity: rows (s.q, b) and (p, -r.q)
        for det in [-1i64, 1] {
            if orientation_preserving && det == 1 {
                continue;
            }
            let num = -(s.q as i128) * (r.q as i128) - det as i128;
            if num % r.p as i128 == 0 {
                let b = i64::try_from(num / r.p as i128).ok()?;
                let xi = FareyAut::new(s.q, b, r.p, -r.q)?;
                debug_assert!(xi.apply(r).is_infinite() && xi.apply(Slope::INFINITY) == s);
                return Some(xi);
            }
        }
    }
    None
}

pub fn two_bridge_hyperbolic(r: Slope) -> bool {
    farey_distance(Slope::INFINITY, r) >= 3
}

pub fn rational_p3_classify(r: Slope, s: Slope, orientation_preserving: bool) -> bool {
    let inv = r.reciprocal().negate();
    if s == r || s == inv {
        return true;
    }
    !orientation_preserving && (s == r.negate() || s == r.reciprocal())
}

pub fn rational_p3_trivial(r: Slope) -> bool {
    r.is_infinite() || r.q == 0
}

pub fn rational_p3_hyperbolic(r: Slope) -> bool {
    farey_distance(Slope::ZERO, r).min(farey_distance(Slope::INFINITY, r)) >= 2
}

/// Translates `r` by an integer so that it lands in [0, 1). Infinity is fixed.
pub fn fractional_part(r: Slope) -> Slope {
    if r.is_infinite() {
        r
    } else {
        r.shift(-r.floor())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(s: &str) -> Slope {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce_slope(4, 10).unwrap(), sl("2/5"));
        assert_eq!(reduce_slope(-3, 0).unwrap(), Slope::INFINITY);
        assert_eq!(reduce_slope(6, -4).unwrap(), sl("-3/2"));
        assert_eq!(reduce_slope(0, 0), Err(FareyError::ZeroOverZero));
        assert_eq!(reduce_slope(0, -7).unwrap(), Slope::ZERO);
    }

    #[test]
    fn adjacency_examples() {
        assert!(farey_adjacent(Slope::ZERO, Slope::INFINITY).unwrap());
        assert!(farey_adjacent(sl("2/5"), sl("1/2")).unwrap());
        assert!(!farey_adjacent(sl("2/5"), Slope::INFINITY).unwrap());
        assert!(farey_adjacent(sl("1/3"), sl("1/3")).is_err());
    }

    #[test]
    fn distance_examples() {
        assert_eq!(farey_distance(Slope::INFINITY, Slope::ZERO), 1);
        assert_eq!(farey_distance(Slope::INFINITY, sl("2/5")), 3);
        assert_eq!(farey_distance(Slope::INFINITY, sl("1/3")), 2);
        assert_eq!(farey_distance(sl("1/2"), sl("5/2")), 3);
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(cf_expand(sl("2/5")).unwrap(), ContinuedFraction { integer_part: 0, terms: vec![2, 2] });
        assert_eq!(cf_expand(sl("3")).unwrap(), ContinuedFraction { integer_part: 2, terms: vec![1] });
        assert_eq!(
            cf_expand(sl("-9/20")).unwrap(),
            ContinuedFraction { integer_part: -1, terms: vec![1, 1, 4, 2] }
        );
        assert!(cf_expand(Slope::INFINITY).is_err());
    }

    #[test]
    fn value_examples() {
        let v = |a0, t: &[i64]| cf_value(&ContinuedFraction::new(a0, t.to_vec()).unwrap()).unwrap();
        assert_eq!(v(0, &[2, 2]), sl("2/5"));
        assert_eq!(v(0, &[2, 4, 2]), sl("9/20"));
        assert_eq!(v(5, &[1]), sl("6"));
        assert_eq!(ContinuedFraction::new(0, vec![]), Err(FareyError::EmptyTerms));
    }

    #[test]
    fn covering_examples() {
        assert_eq!(covering_slope(sl("2/5")).unwrap(), sl("-9/20"));
        // The formula with n = 1 has sign +1, giving 1/4 rather than -1/4.
        assert_eq!(covering_slope(sl("1/2")).unwrap(), sl("1/4"));
        assert!(covering_automorphism(sl("1/2"), sl("1/4")).is_some());
        assert!(covering_automorphism(sl("1/2"), sl("-1/4")).is_none());
        assert!(covering_slope(Slope::ZERO).is_err());
        assert!(covering_slope(Slope::INFINITY).is_err());
    }

    #[test]
    fn equivalence_examples() {
        assert_eq!(two_bridge_equivalent(sl("1/3"), sl("1/3"), true), Some(FareyAut::IDENTITY));
        assert_eq!(two_bridge_equivalent(sl("1/3"), sl("4/3"), true), Some(FareyAut::translation(1)));
        assert_eq!(two_bridge_equivalent(sl("1/3"), sl("2/5"), false), None);
        assert_eq!(two_bridge_equivalent(sl("1/3"), sl("100/3"), true), Some(FareyAut::translation(33)));
    }

    #[test]
    fn hyperbolicity_examples() {
        assert!(two_bridge_hyperbolic(sl("2/5")));
        assert!(!two_bridge_hyperbolic(sl("1/3")));
        assert!(!two_bridge_hyperbolic(Slope::INFINITY));
        assert!(rational_p3_trivial(Slope::ZERO));
        assert!(rational_p3_hyperbolic(sl("2/5")));
        assert!(!rational_p3_hyperbolic(sl("1/7")));
    }

    #[test]
    fn p3_examples() {
        assert!(rational_p3_classify(sl("2/5"), sl("-5/2"), true));
        assert!(!rational_p3_classify(sl("2/5"), sl("5/2"), true));
        assert!(rational_p3_classify(sl("2/5"), sl("5/2"), false));
    }

    #[test]
    fn serde_forms() {
        let s: Slope = serde_json::from_str("\"-9/20\"").unwrap();
        assert_eq!(s, sl("-9/20"));
        let t: Slope = serde_json::from_str(r#"{"q": 4, "p": 10}"#).unwrap();
        assert_eq!(t, sl("2/5"));
        assert_eq!(serde_json::to_string(&Slope::INFINITY).unwrap(), "\"1/0\"");
    }
}
