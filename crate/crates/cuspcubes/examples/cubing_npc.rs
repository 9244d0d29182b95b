//! Builds the cubed decomposition of a 2-bridge link complement and checks
//! Gromov's link condition at every vertex, then breaks one gluing to show
//! the check catching it.
//!
//!     cargo run --example cubing_npc -- 2,1,2

use cuspcubes::cubing::*;
use cuspcubes::diagram::{two_bridge_diagram, TwistSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "2,1,2".into());
    let a: TwistSequence = arg.parse()?;
    let d = two_bridge_diagram(&a)?;
    let cx = build_cubing(&d)?;
    cx.check_involution()?;

    let s = cx.summary();
    println!("twist sequence {a}: {} crossings, {} components", s.crossings, d.component_count());
    println!("  cubes {}  inner vertices {}  inner edges {}", s.cubes, s.inner_vertices, s.inner_edges);
    println!("  boundary squares {} on {} tori, euler {:?}", s.boundary_squares, s.tori, s.euler);
    println!("  hyperplanes: {:?} colored, {} crossing lines", s.colored_hyperplanes, s.crossing_lines);

    for v in cx.inner_vertices() {
        let lk = vertex_link(&cx, v)?;
        println!(
            "  inner vertex {v}: link has {} vertices, {} edges, {} triangles, chi = {}, flag = {}",
            lk.vertices.len(),
            lk.edges.len(),
            lk.triangles.len(),
            lk.euler_characteristic(),
            is_flag(&lk)?
        );
    }
    println!("  non-positively curved: {}", verify_npc(&cx).npc);

    for (c, broken) in corruptions(&cx, 2) {
        let report = verify_npc(&broken);
        let bad = report.vertices.iter().find(|v| !v.passed).expect("corruption is detected");
        println!("  {c:?}: fails at vertex {}: {}", bad.vertex, bad.problem.as_deref().unwrap_or("?"));
    }
    Ok(())
}
