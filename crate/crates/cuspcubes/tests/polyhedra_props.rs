mod common;

use std::collections::BTreeMap;

use common::*;
use cuspcubes::diagram::*;
use cuspcubes::polyhedra::*;
use proptest::prelude::*;

fn all_diagrams() -> Vec<(String, AlternatingDiagram)> {
    let mut v = corpus();
    for a in TwistSequence::enumerate(8, 4) {
        v.push((a.to_string(), two_bridge_diagram(&a).unwrap()));
    }
    v
}

fn check_pair(name: &str, d: &AlternatingDiagram, pp: &IdealPolyhedronPair) {
    let c = d.crossing_count();
    for side in [Side::Plus, Side::Minus] {
        let p = pp.polyhedron(side);
        assert_eq!(p.side, side);
        assert_eq!(p.faces.len(), d.regions().len(), "{name}");
        // each polyhedron edge bounds exactly two faces
        let mut uses: BTreeMap<PolyEdge, usize> = BTreeMap::new();
        for f in &p.faces {
            assert_eq!(f.edges.len(), d.regions()[f.region].degree(), "{name}");
            assert_eq!(f.vertices.len(), f.edges.len(), "{name}");
            assert!(f.vertices.iter().all(|&x| x < c));
            for e in &f.edges {
                assert_eq!(e.side, side);
                *uses.entry(*e).or_default() += 1;
            }
        }
        assert_eq!(uses.len(), 2 * c, "{name}");
        assert!(uses.values().all(|&k| k == 2), "{name}");
    }
    assert_eq!(pp.gluings.len(), d.regions().len());
    for g in &pp.gluings {
        let want = if g.color == Color::Black { pp.black_shift } else { -pp.black_shift };
        assert_eq!(g.shift, want, "{name} region {}", g.region);
        assert_eq!(g.pairs.len(), d.regions()[g.region].degree());
    }
    assert_eq!(pp.classes.len(), c, "{name}");
    for cl in &pp.classes {
        assert_eq!((cl.plus.len(), cl.minus.len()), (2, 2), "{name}");
        assert!(cl.plus.iter().chain(&cl.minus).all(|e| e.crossing == cl.crossing));
    }
}

#[test]
fn gluing_structure_on_all_diagrams() {
    for (name, d) in all_diagrams() {
        let pp = build_polyhedra(&d, false).unwrap();
        check_pair(&name, &d, &pp);
        let mirrored = build_polyhedra(&d, true).unwrap();
        check_pair(&name, &d, &mirrored);
        assert_eq!(mirrored.black_shift, -pp.black_shift, "{name}");
        assert_eq!(pp.to_dot().matches("label=").count(), d.crossing_count());
    }
}

#[test]
fn transfers_are_full_rotations() {
    for (name, d) in all_diagrams() {
        let pp = build_polyhedra(&d, false).unwrap();
        for r in d.regions() {
            let t = face_transfer(&pp, r.id).unwrap();
            let n = r.degree();
            assert_eq!(t.neighbors.len(), n);
            // gluing shifts count clockwise, transfers anticlockwise
            assert_eq!(t.shift, -pp.gluings[r.id].shift, "{name} region {}", r.id);
            let id: Vec<usize> = (0..n).collect();
            assert_eq!(t.power(n), id);
            for k in 1..n {
                assert_ne!(t.power(k), id, "{name} region {} order {k}", r.id);
            }
            for i in 0..n {
                assert_eq!(t.apply(i), (i as i64 + t.shift).rem_euclid(n as i64) as usize);
                assert_ne!(t.neighbors[i], r.id);
            }
        }
        assert!(face_transfer(&pp, d.regions().len()).is_err());
    }
}

#[test]
fn butterflies_at_every_crossing() {
    for (name, d) in all_diagrams() {
        let pp = build_polyhedra(&d, false).unwrap();
        let mm = build_polyhedra(&d, true).unwrap();
        for x in 0..d.crossing_count() {
            let at = d.regions_at(x);
            for color in [Color::Black, Color::White] {
                let b = butterfly_regions(&pp, Side::Plus, x, color).unwrap();
                assert_ne!(b.minus, b.plus, "{name}");
                for r in b.as_array() {
                    assert!(at.contains(&r));
                    assert_eq!(d.regions()[r].color, color);
                }
                assert_eq!(butterfly_regions(&mm, Side::Plus, x, color).unwrap(), b.reversed(), "{name}");
            }
        }
        let c = d.crossing_count();
        assert_eq!(butterfly_regions(&pp, Side::Plus, c, Color::Black), Err(PolyhedraError::NoSuchCrossing(c)));
    }
}

#[test]
fn circle_pattern_has_one_circle_per_region() {
    for (name, d) in all_diagrams() {
        let svg = circle_pattern_svg(&d).unwrap();
        assert!(svg.starts_with("<svg") || svg.starts_with("<?xml"), "{name}");
        assert_eq!(svg.matches("<circle").count(), d.regions().len(), "{name}");
        assert!(svg.contains("id=\"black\"") && svg.contains("id=\"white\""));
    }
}

#[test]
fn connected_sum_is_rejected() {
    let sum = AlternatingDiagram::from_json(
        r#"{"pd": [[7,5,2,4],[3,1,4,6],[5,3,6,2],[1,11,8,10],[9,7,10,12],[11,9,12,8]]}"#,
    )
    .unwrap();
    assert!(matches!(build_polyhedra(&sum, false), Err(PolyhedraError::NotPrime)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn halfspaces_disjoint_iff_not_adjacent(a in twist_sequence(5, 4)) {
        let d = two_bridge_diagram(&a).unwrap();
        let pp = build_polyhedra(&d, false).unwrap();
        let n = d.regions().len();
        for r1 in 0..n {
            prop_assert!(halfspace_disjoint(&pp, Side::Plus, r1, r1).is_err());
            for r2 in (0..n).filter(|&r| r != r1) {
                let dis = halfspace_disjoint(&pp, Side::Plus, r1, r2).unwrap();
                prop_assert_eq!(dis, halfspace_disjoint(&pp, Side::Minus, r2, r1).unwrap());
                prop_assert_eq!(dis, !region_adjacent(&d, r1, r2).unwrap());
                // same-colored faces never share an edge
                if d.regions()[r1].color == d.regions()[r2].color {
                    prop_assert!(dis);
                }
            }
        }
    }

    #[test]
    fn vertex_of_edge_lands_on_crossings(a in twist_sequence(5, 4), mirror: bool) {
        let d = two_bridge_diagram(&a).unwrap();
        let pp = build_polyhedra(&d, mirror).unwrap();
        check_pair(&a.to_string(), &d, &pp);
        for e in 0..d.edges().len() {
            for side in [Side::Plus, Side::Minus] {
                prop_assert!(pp.vertex_of_edge(side, e) < d.crossing_count());
            }
        }
    }
}
