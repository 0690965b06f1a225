//! Orbits S and w with length(w) = codim S - 1 whose product still has
//! codimension at least two.

use korbits::clans::RealFormSpec;
use korbits::engine::RsEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q) in [(2, 1), (2, 2), (3, 1)] {
        let engine = RsEngine::new(RealFormSpec::new(p, q)?)?;
        let found = engine.find_remark3_counterexamples();
        println!("U({p},{q}): {} witnesses", found.len());
        for c in found.iter().take(5) {
            println!(
                "  {} with word {} gives {} (codim {})",
                c.orbit.clan, c.word, c.result.clan, c.result_codim
            );
        }
    }
    Ok(())
}
