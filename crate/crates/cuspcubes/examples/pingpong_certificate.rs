//! Exact ping-pong certificates for pairs of parabolic maps, next to the
//! floating-point check and a brute-force word search.
//!
//!     cargo run --example pingpong_certificate

use cuspcubes::pingpong::*;

fn show(m1: &str, m2: &str) -> Result<(), PingPongError> {
    let (a, b): (MobiusMap, MobiusMap) = (m1.parse()?, m2.parse()?);
    let cert = certify(&a, &b, 6)?;
    let float = pingpong_certificate_f64(a.to_f64(), b.to_f64(), DEFAULT_TOLERANCE)?;
    println!("{a}  and  {b}");
    match &cert.verdict {
        PingPongVerdict::FreeCertified { butterflies } => {
            for (i, bf) in butterflies.iter().enumerate() {
                println!(
                    "  m{}: disks at {} and {} of radius {}",
                    i + 1,
                    Point::Finite(bf.neg.center.clone()),
                    Point::Finite(bf.pos.center.clone()),
                    bf.neg.radius()
                );
            }
            println!("  free: {} reduced words of length <= 6 checked, none trivial", cert.checked_words);
        }
        PingPongVerdict::Commuting { fixed_point } => println!("  commuting, common fixed point {fixed_point}"),
        PingPongVerdict::Inconclusive { diagnostic, .. } => {
            println!("  inconclusive: {diagnostic}");
            if let Some(w) = find_identity_word(&a, &b, 6) {
                println!("  and indeed {} is the identity", word_string(&w));
            }
        }
    }
    let float = match float {
        FloatVerdict::NumericallyCertified { .. } => "certified".to_string(),
        FloatVerdict::Commuting => "commuting".into(),
        FloatVerdict::Inconclusive { diagnostic } => diagnostic,
    };
    println!("  floating point: {float}");
    Ok(())
}

fn main() -> Result<(), PingPongError> {
    show("[[1,0],[4,1]]", "[[9,-16],[4,-7]]")?;
    show("[[1,0],[2i,1]]", "[[1,2],[0,1]]")?;
    show("[[1,0],[1,1]]", "[[1,1],[0,1]]")?;
    show("[[1,0],[4,1]]", "[[1,0],[-8,1]]")?;
    Ok(())
}
