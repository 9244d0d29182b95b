//! Checkerboard ideal polyhedra of the figure-eight knot: faces, the gear
//! rotation of each face gluing, edge classes, and the circle pattern.
//!
//!     cargo run --example polyhedra_gluing > fig8.svg

use cuspcubes::diagram::{AlternatingDiagram, Color};
use cuspcubes::polyhedra::*;

const FIG8: &str = r#"{"pd": [[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = AlternatingDiagram::from_json(FIG8)?;
    let pp = build_polyhedra(&d, false)?;
    eprintln!("black faces turn by {}, white by {}", pp.black_shift, -pp.black_shift);
    for f in &pp.plus.faces {
        let t = face_transfer(&pp, f.region)?;
        eprintln!(
            "  face R{} ({:?}, {} sides): neighbours {:?}, transfer {:?}",
            f.region,
            f.color,
            f.edges.len(),
            t.neighbors,
            t.permutation
        );
    }
    eprintln!("{} edge classes, each two edges of P+ and two of P-", pp.classes.len());
    for x in 0..d.crossing_count() {
        let black = butterfly_regions(&pp, Side::Plus, x, Color::Black)?;
        let white = butterfly_regions(&pp, Side::Plus, x, Color::White)?;
        eprintln!("  crossing {x}: black butterfly {:?}, white {:?}", black.as_array(), white.as_array());
    }
    print!("{}", circle_pattern_svg(&d)?);
    Ok(())
}
