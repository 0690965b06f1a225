//! Orbits of GL(2) x GL(2) on full flags of C^4 and the monoid action on them.

use korbits::clans::{RealFormSpec, WeakOrderGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = RealFormSpec::new(2, 2)?;
    let graph = WeakOrderGraph::new(spec);
    println!(
        "{spec}: {} orbits, flag variety of dimension {}",
        graph.len(),
        spec.flag_dim()
    );
    for o in graph.nodes() {
        let kind = if o.is_closed {
            "closed"
        } else if o.is_open {
            "open"
        } else {
            ""
        };
        println!("  {:<6} dim {} {kind}", o.clan.to_string(), o.dim);
    }
    println!("raising edges:");
    for (s, i, t) in graph.raising_edges() {
        println!("  {} --{i}--> {}", graph.node(s).clan, graph.node(t).clan);
    }
    Ok(())
}
