//! Every crossing arc of a standard 2-bridge diagram, classified: end
//! twist regions are unknotting tunnels, inner ones are flyped into a
//! region and get a butterfly witness.
//!
//!     cargo run --example decide_two_bridge -- 3,1,2,3

use cuspcubes::decide::*;
use cuspcubes::diagram::{two_bridge_diagram, TwistSequence};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,1,2,3".into());
    let a: TwistSequence = arg.parse()?;
    let d = two_bridge_diagram(&a)?;
    let labels = d.twist_labels().expect("standard diagrams carry twist labels");
    for (x, label) in labels.iter().enumerate() {
        let v = classify_2bridge_pair(&a, &ArcSpec::CrossingArc { crossing: x }, false)?;
        let detail = match &v {
            Verdict::GeneratesLinkGroup { which } => format!("{which} tunnel"),
            Verdict::FreeGeometricallyFinite { witness: Some(w), flype, .. } => format!(
                "{:?} butterflies {:?}, flyped across twist region {}",
                w.color,
                w.regions,
                flype.as_ref().map_or(0, |f| f.twist_region)
            ),
            other => other.name().to_string(),
        };
        println!("crossing {x:>2} (twist region {}): {:<26} {detail}", label.region, v.name());
    }

    // an arc through the largest region between two far-apart crossings
    let r = d.regions().iter().max_by_key(|r| r.degree()).unwrap();
    let on = r.crossings();
    let (c1, c2) = (on[0], on[on.len() / 2]);
    let decision = Decision::from(classify_alternating_pair(&d, &ArcSpec::InRegion { region: r.id, c1, c2 }, false)?);
    println!("\narc in R{} from c{c1} to c{c2}:", r.id);
    println!("{}", serde_json::to_string_pretty(&decision)?);
    Ok(())
}
