//! Multiplying an orbit closure by Schubert closures, and the minimal
//! subword that realises the product.

use korbits::clans::RealFormSpec;
use korbits::coxeter::{reduced_word, WeylElement};
use korbits::engine::RsEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RealFormSpec::new(2, 2)?;
    let engine = RsEngine::new(spec)?;
    let clan = spec.parse_clan("+-+-")?;
    for one_line in [
        vec![2, 1, 3, 4],
        vec![2, 3, 1, 4],
        vec![3, 4, 1, 2],
        vec![4, 3, 2, 1],
    ] {
        let w = WeylElement::from_one_line(one_line)?;
        let result = engine.demazure_on_orbit(&clan, &w)?;
        let kept = engine.minimal_expression(&clan, &w)?;
        println!(
            "{clan} x {w} (word {}) = {} (dim {}), kept letters {kept}",
            reduced_word(&w),
            result.clan,
            result.dim
        );
    }
    Ok(())
}
