//! Cross-checks the clan model against brute-force orbits over F_3.

use korbits::clans::RealFormSpec;
use korbits::oracle::verify;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (p, q) in [(1, 1), (2, 1), (3, 1), (2, 2)] {
        let report = verify(RealFormSpec::new(p, q)?, 3)?;
        println!(
            "U({p},{q}) over F_3: {} flags, {} orbits, {} matched, {}",
            report.flags,
            report.orbits,
            report.matched,
            if report.passed() { "pass" } else { "FAIL" }
        );
        for c in report.checks.iter().filter(|c| !c.passed()) {
            println!("  {}: {:?}", c.name, c.first_failure);
        }
    }
    Ok(())
}
