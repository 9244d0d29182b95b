//! Runs the whole pipeline over a directory of diagram files in parallel:
//! cubing and curvature check, polyhedra, and a witness for one arc per
//! diagram.
//!
//!     cargo run --release --example corpus_check -- crates/cuspcubes/data/pd

use std::path::PathBuf;

use cuspcubes::cubing::{build_cubing, verify_npc};
use cuspcubes::decide::{classify_alternating_pair, ArcSpec};
use cuspcubes::diagram::{crossings_adjacent_in, AlternatingDiagram};
use cuspcubes::polyhedra::build_polyhedra;
use rayon::prelude::*;

fn check(path: &PathBuf) -> Result<String, Box<dyn std::error::Error + Send + Sync>> {
    let d = AlternatingDiagram::from_json(&std::fs::read_to_string(path)?)?;
    let cx = build_cubing(&d)?;
    let npc = verify_npc(&cx).npc;
    let pp = build_polyhedra(&d, false)?;
    // first region with two crossings that are not neighbours on it
    let arc = d.regions().iter().find_map(|r| {
        let on = r.crossings();
        on.iter()
            .flat_map(|&a| on.iter().map(move |&b| (a, b)))
            .find(|&(a, b)| a != b && !crossings_adjacent_in(&d, r.id, a, b))
            .map(|(c1, c2)| ArcSpec::InRegion { region: r.id, c1, c2 })
    });
    let verdict = match arc {
        Some(arc) => classify_alternating_pair(&d, &arc, false).map_or_else(|e| e.to_string(), |v| v.name().to_string()),
        None => "no long region".into(),
    };
    Ok(format!(
        "c={:<2} cubes={:<3} npc={npc:<5} gear={:+} {verdict}",
        d.crossing_count(),
        cx.cubes.len(),
        pp.black_shift
    ))
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/cuspcubes/data/pd".into()));
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let results: Vec<(String, String)> = files
        .par_iter()
        .map(|p| {
            let name = p.file_stem().unwrap().to_string_lossy().into_owned();
            (name, check(p).unwrap_or_else(|e| format!("error: {e}")))
        })
        .collect();
    for (name, line) in results {
        println!("{name:<22} {line}");
    }
}
