mod common;

use common::*;
use cuspcubes::decide::*;
use cuspcubes::diagram::*;
use cuspcubes::polyhedra::build_polyhedra;
use proptest::prelude::*;

fn walk(d: &AlternatingDiagram, choices: &[usize]) -> ArcSpec {
    let c1 = choices[0] % d.crossing_count();
    let mut region = d.regions_at(c1)[choices[1] % 4];
    let mut word = Vec::new();
    for &k in &choices[2..] {
        let r = &d.regions()[region];
        let e = r.edges[k % r.edges.len()];
        let [a, b] = d.edge_sides(e);
        region = if a == region { b } else { a };
        word.push(e);
    }
    let on = d.regions()[region].crossings();
    let c2 = on[choices[1] % on.len()];
    ArcSpec::TransverseArc { c1, c2, word }
}

fn check_witness(d: &AlternatingDiagram, v: &Verdict, mirror: bool, c1: usize, c2: usize) -> Result<(), TestCaseError> {
    if let Some(w) = v.witness() {
        let pp = build_polyhedra(d, mirror).unwrap();
        prop_assert!(w.verify(d, &pp, c1, c2), "{:?}", w);
        prop_assert!(w.regions.iter().all(|&r| d.regions()[r].color == w.color));
    }
    Ok(())
}

#[test]
fn arc_syntax() {
    assert_eq!("A2:0".parse::<ArcInput>().unwrap(), ArcInput::Twist { region: 2, position: 0 });
    assert_eq!("X5".parse::<ArcInput>().unwrap(), ArcInput::Spec(ArcSpec::CrossingArc { crossing: 5 }));
    assert_eq!(
        "R3:c0:c2".parse::<ArcInput>().unwrap(),
        ArcInput::Spec(ArcSpec::InRegion { region: 3, c1: 0, c2: 2 })
    );
    assert_eq!(
        "T:c0:c4:e1,e7".parse::<ArcInput>().unwrap(),
        ArcInput::Spec(ArcSpec::TransverseArc { c1: 0, c2: 4, word: vec![1, 7] })
    );
    for bad in ["", "A2", "Xq", "R3:0:2", "T:c0:c4", "T:c0:c4:7", "Q1"] {
        assert!(bad.parse::<ArcInput>().is_err(), "{bad:?}");
    }
}

#[test]
fn malformed_arcs_are_rejected() {
    let d = AlternatingDiagram::from_json(FIG8).unwrap();
    let r = d.regions().iter().find(|r| r.degree() == 3).unwrap();
    let on = r.crossings();
    let off = (0..4).find(|x| !on.contains(x)).unwrap();
    let bad = [
        ArcSpec::InRegion { region: r.id, c1: on[0], c2: on[0] },
        ArcSpec::InRegion { region: r.id, c1: on[0], c2: off },
        ArcSpec::InRegion { region: 99, c1: 0, c2: 1 },
        ArcSpec::TransverseArc { c1: 0, c2: 1, word: vec![] },
        ArcSpec::TransverseArc { c1: 0, c2: 1, word: vec![99] },
        ArcSpec::CrossingArc { crossing: 4 },
    ];
    for arc in bad {
        assert!(classify_alternating_pair(&d, &arc, false).is_err(), "{arc:?}");
    }
    let trefoil = AlternatingDiagram::from_json(TREFOIL).unwrap();
    assert!(matches!(
        classify_alternating_pair(&trefoil, &ArcSpec::CrossingArc { crossing: 0 }, false),
        Err(DecideError::NotHyperbolic { .. })
    ));
}

#[test]
fn decisions_carry_their_citations() {
    let a = TwistSequence::new(vec![2, 1, 2]).unwrap();
    for x in 0..5 {
        let v = classify_2bridge_pair(&a, &ArcSpec::CrossingArc { crossing: x }, false).unwrap();
        let dec = Decision::from(v.clone());
        assert!(!dec.citations.is_empty());
        assert_eq!(dec.citations, v.citations());
        let json = serde_json::to_value(&dec).unwrap();
        assert_eq!(json["verdict"], v.name());
        assert!(json["citations"].is_array());
    }
}

#[test]
fn general_crossing_arcs_are_not_covered() {
    for (name, d) in corpus() {
        if d.count_color(Color::Black) < 3 || d.count_color(Color::White) < 3 {
            continue;
        }
        for x in 0..d.crossing_count() {
            let v = classify_alternating_pair(&d, &ArcSpec::CrossingArc { crossing: x }, false).unwrap();
            assert_eq!(v.name(), "not_covered", "{name}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn crossing_arcs_of_two_bridge_links(a in twist_sequence(5, 3), mirror: bool) {
        let d = two_bridge_diagram(&a).unwrap();
        let labels = d.twist_labels().unwrap().to_vec();
        for (x, label) in labels.iter().enumerate() {
            let v = classify_2bridge_pair(&a, &ArcSpec::CrossingArc { crossing: x }, mirror).unwrap();
            let region = label.region;
            match &v {
                Verdict::GeneratesLinkGroup { which } => {
                    prop_assert_eq!(*which, if region == 1 { Tunnel::Upper } else { Tunnel::Lower });
                    prop_assert!(region == 1 || region == a.len());
                }
                Verdict::FreeGeometricallyFinite { flype: Some(trace), case: ArcCase::InRegion, .. } => {
                    prop_assert!(region > 1 && region < a.len());
                    prop_assert_eq!(trace.twist_region, region);
                    let (f, image, _) = flype(&d, &a, region, &ArcSpec::CrossingArc { crossing: x }).unwrap();
                    let ArcSpec::InRegion { c1, c2, .. } = image else { panic!() };
                    check_witness(&f, &v, mirror, c1, c2)?;
                }
                other => prop_assert!(false, "{:?}", other),
            }
            let flipped = classify_2bridge_pair(&a, &ArcSpec::CrossingArc { crossing: x }, !mirror).unwrap();
            prop_assert_eq!(flipped.name(), v.name());
        }
        // the first and last crossings are tunnels
        let input = ArcInput::Twist { region: 1, position: 0 };
        prop_assert_eq!(
            classify_2bridge_input(&a, &input, mirror).unwrap(),
            Verdict::GeneratesLinkGroup { which: Tunnel::Upper }
        );
    }

    #[test]
    fn arcs_inside_regions(a in twist_sequence(5, 3), mirror: bool) {
        let d = two_bridge_diagram(&a).unwrap();
        for r in d.regions() {
            let on = r.crossings();
            for &c1 in &on {
                for &c2 in on.iter().filter(|&&c| c != c1) {
                    let arc = ArcSpec::InRegion { region: r.id, c1, c2 };
                    let v = classify_alternating_pair(&d, &arc, mirror).unwrap();
                    if crossings_adjacent_in(&d, r.id, c1, c2) {
                        prop_assert_eq!(v.name(), "crossing_arc_equivalent");
                    } else {
                        prop_assert_eq!(v.name(), "free_geometrically_finite");
                        if let Some(w) = v.witness() {
                            prop_assert_eq!(w.color, r.color.other());
                        }
                        check_witness(&d, &v, mirror, c1, c2)?;
                    }
                    let back = classify_alternating_pair(&d, &arc.reversed(), mirror).unwrap();
                    prop_assert_eq!(back.name(), v.name());
                    let flipped = classify_alternating_pair(&d, &arc, !mirror).unwrap();
                    prop_assert_eq!(flipped.name(), v.name());
                }
            }
        }
    }

    #[test]
    fn transverse_walks(a in twist_sequence(5, 3), choices in proptest::collection::vec(any::<usize>(), 3..9), mirror: bool) {
        let d = two_bridge_diagram(&a).unwrap();
        let arc = walk(&d, &choices);
        let ArcSpec::TransverseArc { c1, c2, ref word } = arc else { unreachable!() };
        let path = ArcPath::new(&d, c1, c2, word).unwrap();
        let reduced = path.clone().reduced(&d);
        prop_assert!(reduced.edges.len() <= word.len());
        prop_assert_eq!(reduced.regions.len(), reduced.edges.len() + 1);
        prop_assert!(d.regions()[reduced.regions[0]].contains_crossing(c1));
        prop_assert!(d.regions()[*reduced.regions.last().unwrap()].contains_crossing(c2));

        let v = classify_alternating_pair(&d, &arc, mirror).unwrap();
        if let Verdict::FreeGeometricallyFinite { case: ArcCase::Transverse { omega }, .. } = &v {
            prop_assert_eq!(*omega, reduced.edges.len());
            prop_assert!(*omega <= word.len());
        }
        check_witness(&d, &v, mirror, c1, c2)?;
        let back = classify_alternating_pair(&d, &arc.reversed(), mirror).unwrap();
        prop_assert_eq!(back.name(), v.name());
    }
}
