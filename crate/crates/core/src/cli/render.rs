//! Command execution and text/JSON/DOT rendering.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::clans::{Clan, OrbitRecord, RealFormSpec};
use crate::coxeter::{self, Word};
use crate::engine::suite::{run_suite, SuiteOptions};
use crate::engine::RsEngine;
use crate::oracle::{verify_with, FiniteFieldOracle};
use crate::report::CheckResult;

use super::{CliError, Command, Format, Outcome, RunConfig, EXIT_FAILURE, EXIT_OK};

pub(super) fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let graph_command = matches!(cfg.command, Command::WeakOrder | Command::ClosureOrder);
    if cfg.format == Format::Dot && !graph_command {
        return Err(CliError::Usage(
            "--format dot is only available for weak-order and closure-order".into(),
        ));
    }
    let spec = cfg.spec;
    let engine = RsEngine::new(spec)?;
    let (doc, text, dot, ok) = match &cfg.command {
        Command::Orbits => orbits(&engine),
        Command::WeakOrder => weak_order(&engine),
        Command::ClosureOrder => closure_order(&engine),
        Command::Jset { clan } => jset(&engine, &spec.parse_clan(clan)?)?,
        Command::Minexpr { clan, word } => minexpr(
            &engine,
            &spec.parse_clan(clan)?,
            &parse_word(word, spec.n())?,
        )?,
        Command::Demazure { clan, word } => demazure(
            &engine,
            &spec.parse_clan(clan)?,
            &parse_word(word, spec.n())?,
        )?,
        Command::Theorems => theorems(&engine)?,
        Command::Counterexample => counterexample(&engine),
        Command::Verify => verify(&engine, cfg.field)?,
    };
    let output = match cfg.format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&doc).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Dot => dot.expect("graph commands produce dot"),
    };
    Ok(Outcome {
        output,
        exit_code: if ok { EXIT_OK } else { EXIT_FAILURE },
    })
}

type Rendered = (Value, String, Option<String>, bool);

/// Accepts `1,2,1`, the compact `121`, or `e` for the empty word.
fn parse_word(s: &str, rank: usize) -> Result<Word, CliError> {
    let t = s.trim();
    let word: Word = if !t.contains(',') && t.len() > 1 && t.chars().all(|c| c.is_ascii_digit()) {
        let spaced: Vec<String> = t.chars().map(String::from).collect();
        spaced.join(",").parse()?
    } else {
        t.parse()?
    };
    word.check_rank(rank)?;
    Ok(word)
}

fn header(spec: &RealFormSpec, kind: &str) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("kind".into(), json!(kind));
    m.insert("p".into(), json!(spec.p()));
    m.insert("q".into(), json!(spec.q()));
    m
}

fn tags(o: &OrbitRecord) -> &'static str {
    match (o.is_closed, o.is_open) {
        (true, true) => "closed,open",
        (true, false) => "closed",
        (false, true) => "open",
        (false, false) => "",
    }
}

fn orbit_line(o: &OrbitRecord) -> String {
    format!("{} (dim {}, codim {})", o.clan, o.dim, o.codim)
}

fn dot_id(c: &Clan) -> String {
    format!("\"{c}\"")
}

fn dot_nodes(engine: &RsEngine, out: &mut String) {
    for o in engine.graph().nodes() {
        let _ = writeln!(
            out,
            "  {} [label=\"{}\\ndim {}\"];",
            dot_id(&o.clan),
            o.clan,
            o.dim
        );
    }
}

fn orbits(engine: &RsEngine) -> Rendered {
    let spec = engine.spec();
    let nodes = engine.graph().nodes();
    let mut doc = header(spec, "orbits");
    doc.insert("flag_dim".into(), json!(spec.flag_dim()));
    doc.insert("base_dim".into(), json!(spec.base_dim()));
    doc.insert("count".into(), json!(nodes.len()));
    doc.insert("orbits".into(), json!(nodes));

    let mut text = format!(
        "{spec}: {} orbits on the flag variety of dimension {}\n",
        nodes.len(),
        spec.flag_dim()
    );
    let _ = writeln!(text, "{:<10} {:>4} {:>6}  kind", "clan", "dim", "codim");
    for o in nodes {
        let _ = writeln!(
            text,
            "{:<10} {:>4} {:>6}  {}",
            o.clan.to_string(),
            o.dim,
            o.codim,
            tags(o)
        );
    }
    (Value::Object(doc), trim_lines(text), None, true)
}

fn weak_order(engine: &RsEngine) -> Rendered {
    let spec = engine.spec();
    let graph = engine.graph();
    let edges: Vec<Value> = graph
        .edges()
        .map(|(clan, i, outcome)| {
            json!({
                "source": clan,
                "index": i.get(),
                "raised": outcome.is_raised(),
                "target": outcome.target(clan),
            })
        })
        .collect();
    let mut doc = header(spec, "weak-order");
    doc.insert("nodes".into(), json!(graph.nodes()));
    doc.insert("edges".into(), Value::Array(edges));

    let raising = graph.raising_edges();
    let mut text = format!(
        "{spec}: {} orbits, {} raising edges\n",
        graph.len(),
        raising.len()
    );
    for &(s, i, t) in &raising {
        let _ = writeln!(
            text,
            "{} --{}--> {}",
            graph.node(s).clan,
            i,
            graph.node(t).clan
        );
    }

    let mut dot = String::from("digraph weak_order {\n  rankdir=BT;\n  node [shape=box];\n");
    dot_nodes(engine, &mut dot);
    for &(s, i, t) in &raising {
        let _ = writeln!(
            dot,
            "  {} -> {} [label=\"{}\"];",
            dot_id(&graph.node(s).clan),
            dot_id(&graph.node(t).clan),
            i
        );
    }
    dot.push_str("}\n");
    (Value::Object(doc), text, Some(dot), true)
}

fn closure_order(engine: &RsEngine) -> Rendered {
    let spec = engine.spec();
    let graph = engine.graph();
    let poset = engine.closure_order();
    let clan = |k: usize| &graph.node(k).clan;
    let covers = poset.hasse_covers();
    let mut doc = header(spec, "closure-order");
    doc.insert("nodes".into(), json!(graph.nodes()));
    doc.insert("relations".into(), json!(poset.strict_pairs().len()));
    doc.insert(
        "covers".into(),
        Value::Array(
            covers
                .iter()
                .map(|&(x, y)| json!({"lower": clan(x), "upper": clan(y)}))
                .collect(),
        ),
    );

    let mut text = format!(
        "{spec}: closure order with {} strict relations, {} covers\n",
        poset.strict_pairs().len(),
        covers.len()
    );
    for &(x, y) in &covers {
        let _ = writeln!(text, "{} < {}", clan(x), clan(y));
    }

    let mut dot = String::from("digraph closure_order {\n  rankdir=BT;\n  node [shape=box];\n");
    dot_nodes(engine, &mut dot);
    for &(x, y) in &covers {
        let _ = writeln!(dot, "  {} -> {};", dot_id(clan(x)), dot_id(clan(y)));
    }
    dot.push_str("}\n");
    (Value::Object(doc), text, Some(dot), true)
}

fn jset(engine: &RsEngine, clan: &Clan) -> Result<Rendered, CliError> {
    let spec = engine.spec();
    let orbit = engine.record(engine.node(clan)?).clone();
    let j = engine.j_set(clan)?;
    let mut doc = header(spec, "jset");
    doc.insert("orbit".into(), json!(orbit));
    doc.insert("members".into(), json!(j.members));

    let mut text = format!("J({}) in {spec}: {} members\n", orbit_line(&orbit), j.len());
    for m in &j.members {
        let _ = writeln!(text, "{} via {}", m.orbit.clan, m.word);
    }
    Ok((Value::Object(doc), text, None, true))
}

fn minexpr(engine: &RsEngine, clan: &Clan, word: &Word) -> Result<Rendered, CliError> {
    let spec = engine.spec();
    let n = spec.n();
    let orbit = engine.record(engine.node(clan)?).clone();
    let w = word.demazure_product(n);
    // A reduced input is scanned as given; otherwise a reduced word of its
    // Demazure product is used.
    let scanned = if word.is_reduced(n) {
        word.clone()
    } else {
        coxeter::reduced_word(&w)
    };
    let kept = engine.minimal_expression_along(clan, &scanned)?;
    let w_prime = kept.product(n);
    let result = engine.demazure_along(clan, &scanned)?;
    let mut doc = header(spec, "minexpr");
    doc.insert("orbit".into(), json!(orbit));
    doc.insert("input_word".into(), json!(word.to_string()));
    doc.insert("w".into(), json!(w.one_line()));
    doc.insert("scanned_word".into(), json!(scanned.to_string()));
    doc.insert("kept_word".into(), json!(kept.to_string()));
    doc.insert("w_prime".into(), json!(w_prime.one_line()));
    doc.insert("result".into(), json!(result));

    let text = format!(
        "orbit      {}\nw          {w} (word {})\nscanned    {scanned}\nkept       {kept}\nw'         {w_prime}\nresult     {}\n",
        orbit_line(&orbit),
        word,
        orbit_line(&result)
    );
    Ok((Value::Object(doc), text, None, true))
}

fn demazure(engine: &RsEngine, clan: &Clan, word: &Word) -> Result<Rendered, CliError> {
    let spec = engine.spec();
    let n = spec.n();
    let orbit = engine.record(engine.node(clan)?).clone();
    let w = word.demazure_product(n);
    let result = engine.demazure_on_orbit(clan, &w)?;
    let mut doc = header(spec, "demazure");
    doc.insert("orbit".into(), json!(orbit));
    doc.insert("input_word".into(), json!(word.to_string()));
    doc.insert("w".into(), json!(w.one_line()));
    doc.insert(
        "reduced_word".into(),
        json!(coxeter::reduced_word(&w).to_string()),
    );
    doc.insert("result".into(), json!(result));

    let text = format!(
        "orbit      {}\nw          {w} (word {})\nresult     {}\n",
        orbit_line(&orbit),
        word,
        orbit_line(&result)
    );
    Ok((Value::Object(doc), text, None, true))
}

fn check_table(checks: &[CheckResult], text: &mut String) {
    let _ = writeln!(
        text,
        "{:<40} {:>9} {:>8}  status",
        "check", "instances", "failures"
    );
    for c in checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        let _ = writeln!(
            text,
            "{:<40} {:>9} {:>8}  {status}",
            c.name, c.instances, c.failures
        );
        if let Some(f) = &c.first_failure {
            let _ = writeln!(text, "  first failure: {f}");
        }
    }
}

fn theorems(engine: &RsEngine) -> Result<Rendered, CliError> {
    let spec = engine.spec();
    let report = run_suite(engine, SuiteOptions::default())?;
    let ok = report.passed();
    let mut doc = header(spec, "theorems");
    doc.insert("passed".into(), json!(ok));
    doc.insert("checks".into(), json!(report.checks));

    let mut text = format!("theorem suite for {spec}\n");
    check_table(&report.checks, &mut text);
    let _ = writeln!(text, "overall: {}", if ok { "pass" } else { "FAIL" });
    Ok((Value::Object(doc), text, None, ok))
}

fn counterexample(engine: &RsEngine) -> Rendered {
    let spec = engine.spec();
    let witnesses = engine.find_remark3_counterexamples();
    // Witnesses are required to exist for U(2,1); elsewhere the search is informational.
    let ok = !(spec.p() == 2 && spec.q() == 1) || !witnesses.is_empty();
    let mut doc = header(spec, "counterexample");
    doc.insert("count".into(), json!(witnesses.len()));
    doc.insert("witnesses".into(), json!(witnesses));

    let mut text = format!(
        "{spec}: {} pairs (S, w) with length(w) = codim S - 1 and product of codim >= 2\n",
        witnesses.len()
    );
    for c in &witnesses {
        let w = coxeter::WeylElement::from_one_line(c.w.clone()).expect("witness is a permutation");
        let _ = writeln!(
            text,
            "{}  w = {w} (word {})  ->  {}",
            orbit_line(&c.orbit),
            c.word,
            orbit_line(&c.result)
        );
    }
    (Value::Object(doc), text, None, ok)
}

fn verify(engine: &RsEngine, field: u32) -> Result<Rendered, CliError> {
    let spec = engine.spec();
    let oracle = FiniteFieldOracle::build(*spec, field)?;
    let report = verify_with(engine, &oracle);
    let ok = report.passed();
    let mut doc = header(spec, "verify");
    doc.insert("field".into(), json!(report.field));
    doc.insert("flags".into(), json!(report.flags));
    doc.insert("clans".into(), json!(report.clans));
    doc.insert("orbits".into(), json!(report.orbits));
    doc.insert("matched".into(), json!(report.matched));
    doc.insert("mismatch".into(), json!(report.mismatch));
    doc.insert("passed".into(), json!(ok));
    doc.insert("checks".into(), json!(report.checks));

    let mut text = format!(
        "{spec} over F_{}: {} flags, {} oracle orbits, {} clans, {} matched\n",
        report.field, report.flags, report.orbits, report.clans, report.matched
    );
    if let Some(m) = &report.mismatch {
        let _ = writeln!(text, "mismatch: {m}");
    }
    check_table(&report.checks, &mut text);
    let _ = writeln!(text, "overall: {}", if ok { "pass" } else { "FAIL" });
    Ok((Value::Object(doc), text, None, ok))
}

fn trim_lines(text: String) -> String {
    text.lines()
        .map(str::trim_end)
        .fold(String::new(), |mut s, l| {
            s.push_str(l);
            s.push('\n');
            s
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn out(p: usize, q: usize, command: Command, format: Format) -> Outcome {
        run(&RunConfig::new(p, q, command).unwrap().with_format(format)).unwrap()
    }

    #[test]
    fn compact_and_comma_words_agree() {
        assert_eq!(
            parse_word("121", 3).unwrap(),
            parse_word("1,2,1", 3).unwrap()
        );
        assert!(parse_word("3", 3).is_err());
        assert!(parse_word("e", 3).unwrap().is_empty());
    }

    #[test]
    fn demazure_reaches_open_orbit() {
        let o = out(
            2,
            1,
            Command::Demazure {
                clan: "++-".into(),
                word: "1,2,1".into(),
            },
            Format::Json,
        );
        let v: Value = serde_json::from_str(&o.output).unwrap();
        assert_eq!(v["result"]["clan"], "1+1");
        assert_eq!(o.exit_code, EXIT_OK);
    }

    #[test]
    fn dot_only_for_graphs() {
        let cfg = RunConfig::new(1, 1, Command::Orbits)
            .unwrap()
            .with_format(Format::Dot);
        assert!(matches!(run(&cfg), Err(CliError::Usage(_))));
        let o = out(1, 1, Command::ClosureOrder, Format::Dot);
        assert!(o.output.starts_with("digraph closure_order {"));
    }

    #[test]
    fn counterexample_exit_code() {
        assert_eq!(
            out(2, 1, Command::Counterexample, Format::Text).exit_code,
            EXIT_OK
        );
    }
}
