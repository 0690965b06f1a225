//! The dense orbit of S P for every standard parabolic P of GL(4).

use korbits::clans::RealFormSpec;
use korbits::engine::{ParabolicSpec, RsEngine};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = RsEngine::new(RealFormSpec::new(2, 2)?)?;
    let clan = "+-+-".parse()?;
    for indices in [&[][..], &[1], &[2], &[1, 3], &[1, 2], &[2, 3], &[1, 2, 3]] {
        let parabolic = ParabolicSpec::new(indices, 4)?;
        let dense = engine.dense_coset_in_sp(&clan, &parabolic)?;
        println!(
            "{clan} P{indices:?}: dense orbit {} (dim {})",
            dense.clan, dense.dim
        );
    }
    Ok(())
}
