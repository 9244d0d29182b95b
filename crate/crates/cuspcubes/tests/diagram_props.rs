mod common;

use std::collections::BTreeSet;

use common::*;
use cuspcubes::decide::ArcSpec;
use cuspcubes::diagram::*;
use proptest::prelude::*;

#[test]
fn determinant_oracle_on_known_diagrams() {
    let fig8 = AlternatingDiagram::from_json(FIG8).unwrap();
    assert_eq!(tait_determinant(&fig8), 5);
    assert_eq!(tait_determinant(&AlternatingDiagram::from_json(TREFOIL).unwrap()), 3);
    assert_eq!(cf_determinant(&TwistSequence::new(vec![2, 2]).unwrap()), 5);
    assert_eq!(cf_determinant(&TwistSequence::new(vec![2, 1, 2]).unwrap()), 8);
}

#[test]
fn pd_rejections() {
    let kink = AlternatingDiagram::from_json(r#"{"pd": [[1,5,2,4],[3,7,4,6],[5,3,6,2],[7,8,8,1]]}"#).unwrap();
    assert!(!is_reduced(&kink));
    let sum = AlternatingDiagram::from_json(
        r#"{"pd": [[7,5,2,4],[3,1,4,6],[5,3,6,2],[1,11,8,10],[9,7,10,12],[11,9,12,8]]}"#,
    )
    .unwrap();
    assert!(!is_prime(&sum));
    assert!(AlternatingDiagram::from_json(r#"{"pd": [[1,2,3,4]]}"#).is_err());
    assert!(AlternatingDiagram::from_json(r#"{"pd": [[1,5,2,4],[3,1,4,6],[5,3,6]]}"#).is_err());
    assert!(AlternatingDiagram::from_json("not json").is_err());
}

#[test]
fn corpus_is_prime_alternating_and_determinants_match_names() {
    let corpus = corpus();
    assert!(corpus.len() >= 10);
    for (name, d) in &corpus {
        assert!(is_prime(d) && is_reduced(d), "{name}");
        assert_eq!(d.regions().len(), d.crossing_count() + 2, "{name}");
        if let Some(rest) = name.strip_prefix("two_bridge_") {
            let a: TwistSequence = rest.replace('_', ",").parse().unwrap();
            assert_eq!(tait_determinant(d), cf_determinant(&a), "{name}");
        }
        if let Some(n) = name.strip_prefix("torus_2_") {
            assert_eq!(tait_determinant(d), n.parse::<i128>().unwrap(), "{name}");
        }
    }
}

#[test]
fn small_region_lemma_on_sequences() {
    for a in TwistSequence::enumerate(10, 5) {
        let d = two_bridge_diagram(&a).unwrap();
        for color in [Color::Black, Color::White] {
            assert!(find_small_region(&d, color).is_ok(), "{a} {color}");
        }
        assert!(black_dual_graph(&d).is_ok(), "{a}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn two_bridge_structure(a in twist_sequence(5, 4)) {
        let d = two_bridge_diagram(&a).unwrap();
        let c = d.crossing_count();
        prop_assert_eq!(c as u32, a.terms().iter().sum::<u32>());
        prop_assert_eq!(d.regions().len(), c + 2);
        prop_assert_eq!(d.regions().iter().map(|r| r.degree()).sum::<usize>(), 4 * c);
        prop_assert!(is_prime(&d) && is_reduced(&d) && hyperbolic_candidate(&d));
        let det = cf_determinant(&a);
        prop_assert_eq!(tait_determinant(&d), det);
        prop_assert_eq!(d.component_count(), if det % 2 == 0 { 2 } else { 1 });
    }

    #[test]
    fn pd_round_trip(a in twist_sequence(5, 4)) {
        let d = two_bridge_diagram(&a).unwrap();
        let pd: Vec<Vec<i64>> = d.to_pd().iter().map(|x| x.to_vec()).collect();
        let back = parse_pd(&pd).unwrap();
        prop_assert_eq!(back.to_pd(), d.to_pd());
        prop_assert_eq!(back.component_count(), d.component_count());
        prop_assert_eq!(tait_determinant(&back), tait_determinant(&d));
    }

    #[test]
    fn adjacency_is_symmetric_and_colored(a in twist_sequence(4, 3)) {
        let d = two_bridge_diagram(&a).unwrap();
        let n = d.regions().len();
        for r1 in 0..n {
            for r2 in (0..n).filter(|&r| r != r1) {
                let adj = region_adjacent(&d, r1, r2).unwrap();
                prop_assert_eq!(adj, region_adjacent(&d, r2, r1).unwrap());
                if adj {
                    prop_assert_ne!(d.regions()[r1].color, d.regions()[r2].color);
                }
            }
        }
        prop_assert!(region_adjacent(&d, 0, 0).is_err());
    }

    #[test]
    fn mirror_swaps_colors(a in twist_sequence(4, 3)) {
        let d = two_bridge_diagram(&a).unwrap();
        let m = d.with_color_mirror(true);
        prop_assert_eq!(d.count_color(Color::Black), m.count_color(Color::White));
        prop_assert_eq!(d.count_color(Color::White), m.count_color(Color::Black));
    }

    #[test]
    fn flype_preserves_the_link(a in twist_sequence(5, 3)) {
        let d = two_bridge_diagram(&a).unwrap();
        let det = tait_determinant(&d);
        for x in 0..d.crossing_count() {
            let i = d.twist_labels().unwrap()[x].region;
            if i == 1 || i == a.len() {
                continue;
            }
            let (f, image, trace) = flype(&d, &a, i, &ArcSpec::CrossingArc { crossing: x }).unwrap();
            prop_assert_eq!(f.crossing_count(), d.crossing_count());
            prop_assert_eq!(f.component_count(), d.component_count());
            prop_assert_eq!(tait_determinant(&f), det);
            prop_assert!(is_prime(&f) && is_reduced(&f));
            prop_assert_eq!(trace.twist_region, i);
            let ArcSpec::InRegion { region, c1, c2 } = image else { panic!("{image:?}") };
            prop_assert!(c1 != c2 && !crossings_adjacent_in(&f, region, c1, c2));
            let on: BTreeSet<usize> = f.regions()[region].crossings().into_iter().collect();
            prop_assert!(on.contains(&c1) && on.contains(&c2));
        }
    }
}
