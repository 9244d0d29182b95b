//! Slopes with denominator at most 13: continued fractions, Farey distance
//! to 1/0, the covering slope and which 2-bridge links they give.
//!
//!     cargo run --example farey_census

use std::collections::BTreeMap;

use cuspcubes::farey::*;

fn main() -> Result<(), FareyError> {
    let mut classes: BTreeMap<i64, Vec<Slope>> = BTreeMap::new();
    println!("{:>7}  {:>14}  {:>4}  {:>9}  hyperbolic", "r", "cf", "dist", "r~");
    for p in 2..=13 {
        for q in 1..p {
            let Ok(r) = Slope::new(q, p) else { continue };
            if r.denominator() != p {
                continue;
            }
            let cf = cf_expand(r)?;
            let r_tilde = covering_slope(r)?;
            let terms: Vec<String> = cf.terms.iter().map(|t| t.to_string()).collect();
            println!(
                "{:>7}  {:>14}  {:>4}  {:>9}  {}",
                r.to_string(),
                format!("[{}]", terms.join(",")),
                farey_distance(Slope::INFINITY, r),
                r_tilde.to_string(),
                two_bridge_hyperbolic(r)
            );
            classes.entry(p).or_default().push(r);
        }
    }

    // K(q/p) = K(q'/p) iff q' = q^{+-1} mod p
    println!();
    for (p, slopes) in &classes {
        let mut seen: Vec<Vec<Slope>> = Vec::new();
        for &r in slopes {
            match seen.iter_mut().find(|c| two_bridge_equivalent(c[0], r, false).is_some()) {
                Some(c) => c.push(r),
                None => seen.push(vec![r]),
            }
        }
        let text: Vec<String> = seen
            .iter()
            .map(|c| c.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("="))
            .collect();
        println!("p = {p:>2}: {} links  {}", seen.len(), text.join("  "));
    }
    Ok(())
}
