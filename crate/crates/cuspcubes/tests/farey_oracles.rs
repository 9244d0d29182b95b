use std::collections::{HashMap, HashSet, VecDeque};

use cuspcubes::farey::*;
use num_integer::Integer;
use proptest::prelude::*;

fn sl(q: i64, p: i64) -> Slope {
    reduce_slope(q, p).unwrap()
}

fn reduced_in_window(max_den: i64, lo: i64, hi: i64) -> Vec<Slope> {
    let mut out = vec![Slope::INFINITY];
    for p in 1..=max_den {
        for q in lo * p..=hi * p {
            if q.gcd(&p) == 1 {
                out.push(sl(q, p));
            }
        }
    }
    out
}

/// Plain BFS on a window of the Farey graph, much larger than the ladder.
fn brute_distance(r: Slope, s: Slope) -> u32 {
    let finite: Vec<Slope> = [r, s].into_iter().filter(|x| !x.is_infinite()).collect();
    let lo = finite.iter().map(|x| x.floor()).min().unwrap_or(0) - 2;
    let hi = finite.iter().map(|x| x.floor()).max().unwrap_or(0) + 3;
    let den = 2 * [r, s].iter().map(|x| x.denominator()).max().unwrap().max(2);
    let verts = reduced_in_window(den, lo, hi);
    let index: HashMap<Slope, usize> = verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let det = |a: Slope, b: Slope| {
        (a.numerator() as i128 * b.denominator() as i128 - b.numerator() as i128 * a.denominator() as i128).abs()
    };
    let mut dist = vec![u32::MAX; verts.len()];
    dist[index[&r]] = 0;
    let mut queue = VecDeque::from([index[&r]]);
    while let Some(i) = queue.pop_front() {
        for j in 0..verts.len() {
            if dist[j] == u32::MAX && det(verts[i], verts[j]) == 1 {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    dist[index[&s]]
}

/// d(inf, x) through the two Farey parents of x: every path from x to
/// infinity passes through one of them.
fn parent_distance(x: Slope, memo: &mut HashMap<Slope, u32>) -> u32 {
    if x.is_infinite() {
        return 0;
    }
    if x.is_integer() {
        return 1;
    }
    if let Some(&d) = memo.get(&x) {
        return d;
    }
    let (q, p) = (x.numerator(), x.denominator());
    let mut parents = Vec::new();
    for pp in 1..p {
        for sign in [-1i64, 1] {
            // q*pp - qq*p = sign
            let t = q * pp - sign;
            if t % p == 0 {
                parents.push(sl(t / p, pp));
            }
        }
    }
    let d = 1 + parents.iter().map(|&u| parent_distance(u, memo)).min().unwrap();
    memo.insert(x, d);
    d
}

/// d(r, s) = d(inf, g(s)) for any g in SL(2,Z) with g(r) = inf.
fn cf_distance(r: Slope, s: Slope) -> u32 {
    if r.is_infinite() {
        return parent_distance(s, &mut HashMap::new());
    }
    let (q, p) = (r.numerator(), r.denominator());
    // g = [[a, b], [p, -q]], with -a*q - b*p = 1
    let e = (-q).extended_gcd(&p);
    let (a, b) = (e.x * e.gcd, -e.y * e.gcd);
    let g = FareyAut::new(a, b, p, -q).unwrap();
    assert!(g.apply(r).is_infinite());
    parent_distance(g.apply(s), &mut HashMap::new())
}

fn schubert_equivalent(r: Slope, s: Slope, oriented: bool) -> bool {
    if r.is_infinite() || s.is_infinite() {
        return r == s;
    }
    let p = r.denominator();
    if p != s.denominator() {
        return false;
    }
    if p == 1 {
        return true;
    }
    let (q, q2) = (r.numerator().rem_euclid(p), s.numerator().rem_euclid(p));
    let inv = (1..p).find(|x| (x * q) % p == 1).unwrap();
    let mut allowed = vec![q, inv];
    if !oriented {
        allowed.extend([(p - q) % p, (p - inv) % p]);
    }
    allowed.contains(&q2)
}

fn all_slopes(max_den: i64, lo: i64, hi: i64) -> Vec<Slope> {
    reduced_in_window(max_den, lo, hi)
}

#[test]
fn distance_matches_brute_force_bfs() {
    let slopes = all_slopes(7, -2, 2);
    for &r in &slopes {
        for &s in &slopes {
            assert_eq!(farey_distance(r, s), brute_distance(r, s), "{r} {s}");
        }
    }
}

#[test]
fn distance_matches_parent_recursion() {
    let slopes = all_slopes(25, -3, 3);
    for &r in slopes.iter().step_by(7) {
        for &s in &slopes {
            assert_eq!(farey_distance(r, s), cf_distance(r, s), "{r} {s}");
        }
    }
}

#[test]
fn distance_far_apart_integers() {
    for (a, b) in [((1, 2), (7, 2)), ((1, 3), (101, 3)), ((-5, 7), (40, 7)), ((1, 2), (19, 2))] {
        let (r, s) = (sl(a.0, a.1), sl(b.0, b.1));
        assert_eq!(farey_distance(r, s), cf_distance(r, s), "{r} {s}");
    }
}

#[test]
fn equivalence_matches_schubert() {
    let slopes = all_slopes(13, -2, 2);
    for &r in &slopes {
        for &s in &slopes {
            for oriented in [false, true] {
                let w = two_bridge_equivalent(r, s, oriented);
                assert_eq!(w.is_some(), schubert_equivalent(r, s, oriented), "{r} {s} {oriented}");
                if let Some(xi) = w {
                    let set = |a: Slope, b: Slope| -> HashSet<Slope> { [a, b].into_iter().collect() };
                    assert_eq!(set(xi.apply(r), xi.apply(Slope::INFINITY)), set(s, Slope::INFINITY));
                    if oriented {
                        let direct = xi.apply(r) == s && xi.apply(Slope::INFINITY).is_infinite();
                        assert!(
                            (xi.orientation_preserving() && direct) || (!xi.orientation_preserving() && !direct),
                            "{r} {s} {xi}"
                        );
                    }
                }
            }
        }
    }
}

/// Breadth-first search over words in x+1, x-1, -1/x, -x on small slopes.
#[test]
fn equivalence_matches_word_search() {
    let gens = [
        FareyAut::translation(1),
        FareyAut::translation(-1),
        FareyAut::new(0, -1, 1, 0).unwrap(),
        FareyAut::new(-1, 0, 0, 1).unwrap(),
    ];
    let mut seen: HashSet<FareyAut> = HashSet::from([FareyAut::IDENTITY]);
    let mut frontier = vec![FareyAut::IDENTITY];
    for _ in 0..9 {
        let mut next = Vec::new();
        for w in &frontier {
            for g in &gens {
                let m = g.compose(w);
                if seen.insert(m) {
                    next.push(m);
                }
            }
        }
        frontier = next;
    }
    let slopes = all_slopes(5, 0, 1);
    for &r in &slopes {
        for &s in &slopes {
            let found = seen.iter().any(|xi| {
                let (a, b) = (xi.apply(r), xi.apply(Slope::INFINITY));
                (a == s && b.is_infinite()) || (a.is_infinite() && b == s)
            });
            if found {
                assert!(two_bridge_equivalent(r, s, false).is_some(), "{r} {s}");
            }
            if two_bridge_equivalent(r, s, false).is_some() {
                assert!(found, "word search missed {r} {s}");
            }
        }
    }
}

fn brute_covering_check(r: Slope, rt: Slope) -> bool {
    let b = 3 * (r.denominator() + r.numerator().abs()) + 4;
    let minus = r.negate();
    for c in -b..=b {
        for d in -b..=b {
            if c == 0 {
                continue;
            }
            for a in -b..=b {
                // a*d - bb*c = 1
                let t = a * d - 1;
                if t % c != 0 {
                    continue;
                }
                if let Some(eta) = FareyAut::new(a, t / c, c, d) {
                    if eta.orientation_preserving() && eta.apply(minus).is_infinite() && eta.apply(r) == rt {
                        return true;
                    }
                }
            }
        }
    }
    false
}

#[test]
fn covering_matches_matrix_search_small() {
    for p in 2..=9 {
        for q in -p + 1..p {
            if q == 0 || q.gcd(&p) != 1 {
                continue;
            }
            let r = sl(q, p);
            let rt = covering_slope(r).unwrap();
            assert!(brute_covering_check(r, rt), "{r} -> {rt}");
        }
    }
}

#[test]
fn covering_integers_and_large_slopes() {
    for r in [sl(3, 1), sl(-2, 1), sl(1, 1), sl(7, 3), sl(-11, 4)] {
        let rt = covering_slope(r).unwrap();
        assert!(covering_automorphism(r, rt).is_some(), "{r} -> {rt}");
        assert!(brute_covering_check(r, rt), "{r} -> {rt}");
    }
}

#[test]
fn p3_hyperbolic_excludes_integers_and_unit_fractions() {
    for n in -10i64..=10 {
        if n != 0 {
            assert!(!rational_p3_hyperbolic(sl(1, n)));
        }
        assert!(!rational_p3_hyperbolic(Slope::integer(n)));
    }
    for r in all_slopes(12, -2, 2) {
        let excluded = r.is_infinite() || r.is_integer() || r.numerator().abs() == 1;
        assert_eq!(rational_p3_hyperbolic(r), !excluded, "{r}");
    }
}

#[test]
fn hyperbolic_exactly_off_torus_slopes() {
    // d(inf, r) <= 2 exactly for integers and slopes n + 1/m.
    for r in all_slopes(15, -2, 2) {
        let torus = r.is_infinite() || r.is_integer() || fractional_part(r).numerator() == 1 || {
            let f = fractional_part(r);
            f.denominator() - f.numerator() == 1
        };
        assert_eq!(two_bridge_hyperbolic(r), !torus, "{r}");
    }
}

fn slope_strategy(max_den: i64) -> impl Strategy<Value = Slope> {
    (1..=max_den, -3 * max_den..=3 * max_den).prop_map(|(p, q)| reduce_slope(q, p).unwrap())
}

proptest! {
    #[test]
    fn distance_is_symmetric(r in slope_strategy(40), s in slope_strategy(40)) {
        prop_assert_eq!(farey_distance(r, s), farey_distance(s, r));
    }

    #[test]
    fn distance_triangle(r in slope_strategy(30), s in slope_strategy(30), t in slope_strategy(30)) {
        prop_assert!(farey_distance(r, t) <= farey_distance(r, s) + farey_distance(s, t));
    }

    #[test]
    fn distance_agrees_with_parents(r in slope_strategy(60), s in slope_strategy(60)) {
        prop_assert_eq!(farey_distance(r, s), cf_distance(r, s));
    }

    #[test]
    fn expand_then_value_roundtrips(r in slope_strategy(500)) {
        let cf = cf_expand(r).unwrap();
        prop_assert!(cf.terms.iter().all(|&t| t >= 1));
        prop_assert!(cf.terms.len() < 2 || *cf.terms.last().unwrap() >= 2);
        prop_assert_eq!(cf_value(&cf).unwrap(), r);
    }

    #[test]
    fn covering_congruence(r in slope_strategy(50)) {
        prop_assume!(r.numerator() != 0);
        let rt = covering_slope(r).unwrap();
        let (q, p) = (rt.numerator() as i128, rt.denominator() as i128);
        prop_assert_eq!((q * q - 1).rem_euclid(2 * p), 0);
    }

    #[test]
    fn covering_distance_law(r in slope_strategy(30)) {
        prop_assume!(r.numerator() != 0);
        let rt = covering_slope(r).unwrap();
        let expect = 2 * farey_distance(Slope::INFINITY, r).min(farey_distance(Slope::ZERO, r));
        prop_assert_eq!(farey_distance(Slope::INFINITY, rt), expect);
    }

    #[test]
    fn p3_classify_is_equivalence(r in slope_strategy(12), s in slope_strategy(12), t in slope_strategy(12), o in any::<bool>()) {
        prop_assert!(rational_p3_classify(r, r, o));
        prop_assert_eq!(rational_p3_classify(r, s, o), rational_p3_classify(s, r, o));
        if rational_p3_classify(r, s, o) && rational_p3_classify(s, t, o) {
            prop_assert!(rational_p3_classify(r, t, o));
        }
        let orbit = [r, r.reciprocal().negate(), r.negate(), r.reciprocal()];
        for &x in &orbit {
            prop_assert!(rational_p3_classify(r, x, false));
        }
    }

    #[test]
    fn equivalence_is_symmetric(r in slope_strategy(15), s in slope_strategy(15), o in any::<bool>()) {
        prop_assert_eq!(two_bridge_equivalent(r, s, o).is_some(), two_bridge_equivalent(s, r, o).is_some());
    }
}
