//! Codimension-one closures reachable from each orbit, and the containment
//! of small Schubert products in one of them.

use korbits::clans::RealFormSpec;
use korbits::coxeter::all_elements;
use korbits::engine::RsEngine;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let engine = RsEngine::new(RealFormSpec::new(2, 2)?)?;
    for o in engine.graph().nodes() {
        let j = engine.j_set(&o.clan)?;
        let members: Vec<String> = j
            .members
            .iter()
            .map(|m| format!("{} via {}", m.orbit.clan, m.word))
            .collect();
        println!("J({}) = [{}]", o.clan, members.join(", "));
    }

    let clan = "++--".parse()?;
    let codim = engine.record(engine.node(&clan)?).codim;
    println!("\n{clan} has codimension {codim}");
    for w in all_elements(4).into_iter().filter(|w| w.length() < codim) {
        let t = engine.theorem2_check(&clan, &w)?;
        println!("  {clan} x {w} lies in the closure of {}", t.clan);
    }
    println!("\ncomplement of the open orbit:");
    for entry in engine.complement_cover_check().entries {
        let by = entry
            .covered_by
            .map(|c| c.to_string())
            .unwrap_or_else(|| "nothing".into());
        println!("  {} under {by}", entry.orbit.clan);
    }
    Ok(())
}
