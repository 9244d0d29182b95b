use cuspcubes::pingpong::*;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn gauss_int() -> impl Strategy<Value = (i64, i64)> {
    (-3i64..=3, -2i64..=2)
}

/// A product of elementary matrices: an element of SL(2, Z[i]).
fn sl2() -> impl Strategy<Value = MobiusMap> {
    proptest::collection::vec((gauss_int(), any::<bool>()), 1..4).prop_map(|steps| {
        steps.into_iter().fold(MobiusMap::identity(), |m, ((re, im), upper)| {
            let (one, zero, x) = (gauss(1, 0), gauss(0, 0), gauss(re, im));
            let e = if upper {
                MobiusMap::new(one.clone(), x, zero, one).unwrap()
            } else {
                MobiusMap::new(one.clone(), zero, x, one).unwrap()
            };
            m.compose(&e)
        })
    })
}

fn translation() -> impl Strategy<Value = MobiusMap> {
    gauss_int().prop_filter("nonzero", |&t| t != (0, 0)).prop_map(|(re, im)| {
        MobiusMap::new(gauss(1, 0), gauss(re, im), gauss(0, 0), gauss(1, 0)).unwrap()
    })
}

fn parabolic() -> impl Strategy<Value = MobiusMap> {
    (sl2(), translation()).prop_map(|(g, t)| t.conjugate_by(&g))
}

fn kind(v: &PingPongVerdict) -> &'static str {
    match v {
        PingPongVerdict::FreeCertified { .. } => "free",
        PingPongVerdict::Commuting { .. } => "commuting",
        PingPongVerdict::Inconclusive { .. } => "inconclusive",
    }
}

fn to_f(q: &BigRational) -> f64 {
    q.to_f64().unwrap()
}

#[test]
fn reduced_word_count_matches_enumeration() {
    // letters 0..4 with k and k^2 inverse
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut total = 0u64;
    for n in 1..=6 {
        words = words
            .iter()
            .flat_map(|w| {
                (0..4).filter(move |&x| w.last().is_none_or(|&l| l ^ 2 != x)).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
        total += words.len() as u64;
        assert_eq!(count_reduced_words(n), total);
    }
}

#[test]
fn gauss_text_round_trip() {
    for s in ["3", "-1/2", "2i", "-i", "1/2-3/4i", "7+i"] {
        let z = parse_gauss(s).unwrap();
        assert_eq!(parse_gauss(&format_gauss(&z)).unwrap(), z, "{s}");
    }
    for bad in ["", "x", "1+", "i2", "1//2"] {
        assert!(parse_gauss(bad).is_err(), "{bad:?}");
    }
    assert!("[[1,0],[4,1]]".parse::<MobiusMap>().is_ok());
    assert!("[[2,0],[0,1]]".parse::<MobiusMap>().is_err());
    assert!("[[1,0],[4]]".parse::<MobiusMap>().is_err());
}

#[test]
fn non_parabolic_and_identity_are_rejected() {
    let hyp = MobiusMap::from_ints([[2, 1], [1, 1]]).unwrap();
    let para = MobiusMap::from_ints([[1, 0], [4, 1]]).unwrap();
    assert!(matches!(pingpong_certificate(&hyp, &para), Err(PingPongError::NotParabolic(_))));
    assert!(pingpong_certificate(&MobiusMap::identity(), &para).is_err());
    let t = MobiusMap::from_ints([[1, 2], [0, 1]]).unwrap();
    assert_eq!(isometric_butterfly(&t), Err(PingPongError::FixesInfinity));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn group_laws(g in sl2(), h in sl2(), k in sl2()) {
        prop_assert_eq!(g.compose(&h).compose(&k), g.compose(&h.compose(&k)));
        prop_assert!(g.compose(&g.inverse()).is_identity());
        let text = g.to_string();
        prop_assert_eq!(text.parse::<MobiusMap>().unwrap(), g);
    }

    #[test]
    fn conjugated_translations_are_parabolic(g in sl2(), t in translation()) {
        let m = t.conjugate_by(&g);
        prop_assert!(m.is_parabolic());
        let fixed = m.fixed_point().unwrap();
        prop_assert_eq!(g.apply(&Point::Infinity), fixed.clone());
        prop_assert_eq!(m.apply(&fixed), fixed.clone());
        if fixed != Point::Infinity {
            let b = isometric_butterfly(&m).unwrap();
            prop_assert!(b.verify());
            prop_assert!(b.inverted().verify());
            prop_assert!(isometric_butterfly(&m.inverse()).unwrap() == b.inverted());
        }
    }

    #[test]
    fn exact_disk_test_agrees_with_floats(
        c1 in (-20i64..20, -20i64..20), c2 in (-20i64..20, -20i64..20), r1 in 1i64..100, r2 in 1i64..100,
    ) {
        let p = RoundDisk { center: gauss(c1.0, c1.1), radius_sq: BigRational::from_integer(r1.into()) };
        let q = RoundDisk { center: gauss(c2.0, c2.1), radius_sq: BigRational::from_integer(r2.into()) };
        let dist = (((c1.0 - c2.0).pow(2) + (c1.1 - c2.1).pow(2)) as f64).sqrt();
        let gap = dist - (r1 as f64).sqrt() - (r2 as f64).sqrt();
        if gap.abs() > 1e-9 {
            prop_assert_eq!(disks_disjoint(&p, &q), gap > 0.0);
        }
        prop_assert_eq!(disks_disjoint(&p, &q), disks_disjoint(&q, &p));
        prop_assert_eq!(disjoint_interiors(&[p.clone(), q.clone()]), disks_disjoint(&p, &q));
        prop_assert!(!disks_disjoint(&p, &p));
    }

    #[test]
    fn verdict_is_symmetric(m1 in parabolic(), m2 in parabolic()) {
        let v = pingpong_certificate(&m1, &m2).unwrap();
        prop_assert_eq!(kind(&pingpong_certificate(&m2, &m1).unwrap()), kind(&v));
        prop_assert_eq!(kind(&pingpong_certificate(&m1.inverse(), &m2).unwrap()), kind(&v));
        prop_assert_eq!(kind(&pingpong_certificate(&m1, &m2.inverse()).unwrap()), kind(&v));
        let same_fix = m1.fixed_point().unwrap() == m2.fixed_point().unwrap();
        prop_assert_eq!(kind(&v) == "commuting", same_fix);
    }

    #[test]
    fn certified_pairs_pass_the_word_check(m1 in parabolic(), m2 in parabolic()) {
        let cert = certify(&m1, &m2, 5).unwrap();
        if let PingPongVerdict::FreeCertified { butterflies } = &cert.verdict {
            prop_assert!(cert.words_ok);
            prop_assert_eq!(cert.checked_words, count_reduced_words(5));
            prop_assert!(find_identity_word(&m1, &m2, 5).is_none());
            prop_assert!(butterflies.iter().all(|b| b.verify()));
            let disks: Vec<RoundDisk> = butterflies.iter().flat_map(|b| [b.neg.clone(), b.pos.clone()]).collect();
            prop_assert!(disjoint_interiors(&disks));
            let (n1, n2, g) = normalize_pair(&m1, &m2).unwrap();
            prop_assert_eq!(&n1, &m1.conjugate_by(&g));
            prop_assert_eq!(&n2, &m2.conjugate_by(&g));
            prop_assert_eq!(&cert.conjugator, &g);
        }
    }

    #[test]
    fn float_path_agrees(m1 in parabolic(), m2 in parabolic()) {
        let exact = pingpong_certificate(&m1, &m2).unwrap();
        let float = pingpong_certificate_f64(m1.to_f64(), m2.to_f64(), DEFAULT_TOLERANCE).unwrap();
        match (&exact, &float) {
            (PingPongVerdict::FreeCertified { butterflies }, FloatVerdict::NumericallyCertified { disks, .. }) => {
                let exact_disks = butterflies.iter().flat_map(|b| [&b.neg, &b.pos]);
                for (e, f) in exact_disks.zip(disks) {
                    let center = Complex64::new(to_f(&e.center.re), to_f(&e.center.im));
                    prop_assert!((center - f.center).norm() < 1e-9);
                    prop_assert!((e.radius() - f.radius).abs() < 1e-9);
                }
            }
            (PingPongVerdict::Commuting { .. }, FloatVerdict::Commuting) => {}
            (PingPongVerdict::Inconclusive { .. }, FloatVerdict::Inconclusive { .. }) => {}
            _ => prop_assert!(false, "exact {} vs float {:?}", kind(&exact), float),
        }
    }
}
