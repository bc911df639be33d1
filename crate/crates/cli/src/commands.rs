use std::fmt::Write as _;
use std::sync::Arc;

use radx_core::congruence::{bourne_quotient, SubsetIdeal};
use radx_core::constructions::{endomorphism_hemiring, matrix_hemiring};
use radx_core::enumerate::enumerate_hemirings;
use radx_core::radicals::{jacobson_oracle, radical_with, JacobsonMethod, RadicalKind, SimplicityReading};
use radx_core::semimodule::{enumerate_irreducible_semimodules, enumerate_simple_semimodules, semimodule_report};
use radx_core::verify::{search_counterexample, verify_all, verify_id, Problem, Status, TheoremId, VerifyInput, VerifyReport};
use radx_core::{classify, FiniteHemiring, FiniteMonoid, FiniteSemimodule, Sidedness};
use serde_json::{json, Value};

use crate::doc::{self, hemiring_document, monoid_document, semimodule_document, Structure};
use crate::render::{self, labels, set};
use crate::{CliError, Command, Outcome, Source, EXIT_FAILURE, EXIT_OK};

type Res = Result<Outcome, CliError>;

fn source_value(s: &Source) -> Value {
    match (&s.file, &s.builtin) {
        (Some(f), _) => json!({ "file": f.display().to_string() }),
        (_, Some(b)) => json!({ "builtin": b }),
        _ => Value::Null,
    }
}

/// Echo of the command's arguments.
pub fn inputs(cmd: &Command) -> Value {
    match cmd {
        Command::Validate(s)
        | Command::Classify(s)
        | Command::Simples(s)
        | Command::Irreducibles(s)
        | Command::Export(s) => json!({ "source": source_value(s) }),
        Command::Radical { kind, method, reading, source } => {
            json!({ "source": source_value(source), "kind": kind, "method": method, "reading": reading })
        }
        Command::Quotient { ideal, source } => json!({ "source": source_value(source), "ideal": ideal }),
        Command::Matrix { n, source } => json!({ "source": source_value(source), "n": n }),
        Command::End { monoid, source } => json!({ "source": source_value(source), "monoid": monoid }),
        Command::Verify { suite, n, idempotent, source } => json!({
            "source": source_value(source),
            "suite": suite,
            "n": n,
            "idempotent": idempotent,
        }),
        Command::Enumerate { order, predicate, count_only } => {
            json!({ "order": order, "predicate": predicate, "count_only": count_only })
        }
        Command::Search { problem, max_order } => json!({ "problem": problem, "max_order": max_order }),
    }
}

pub fn dispatch(cmd: &Command) -> Res {
    let inputs = inputs(cmd);
    let mut out = match cmd {
        Command::Validate(s) => validate(s),
        Command::Classify(s) => classify_cmd(s),
        Command::Radical { kind, method, reading, source } => radical_cmd(source, kind, method, reading),
        Command::Quotient { ideal, source } => quotient(source, ideal),
        Command::Matrix { n, source } => matrix(source, *n),
        Command::End { monoid, source } => end(source, *monoid),
        Command::Simples(s) => modules(s, false),
        Command::Irreducibles(s) => modules(s, true),
        Command::Verify { suite, n, idempotent, source } => verify(source, suite, *n, idempotent.as_deref()),
        Command::Enumerate { order, predicate, count_only } => enumerate(*order, predicate, *count_only),
        Command::Search { problem, max_order } => search(problem, *max_order),
        Command::Export(s) => export(s),
    }?;
    out.inputs = inputs;
    Ok(out)
}

fn load(s: &Source) -> Result<Structure, CliError> {
    match (&s.file, &s.builtin) {
        (Some(f), _) => doc::load_file(f),
        (_, Some(b)) => doc::builtin(b),
        _ => Err(CliError::input("no structure given")),
    }
}

fn load_hemiring(s: &Source) -> Result<FiniteHemiring, CliError> {
    match load(s)? {
        Structure::Hemiring(r) => Ok(r),
        other => Err(CliError::input(format!("{} is a {:?}, not a hemiring", other.name(), other.kind()).to_lowercase())),
    }
}

fn ok(result: Value, text: String) -> Outcome {
    Outcome {
        inputs: Value::Null,
        result,
        witnesses: Vec::new(),
        status: "ok",
        code: EXIT_OK,
        text,
    }
}

fn validate(s: &Source) -> Res {
    let st = load(s)?;
    let kind = format!("{:?}", st.kind()).to_lowercase();
    let text = format!("valid {kind} {} ({} elements)\n", st.name(), st.len());
    Ok(ok(json!({ "kind": kind, "name": st.name(), "order": st.len(), "valid": true }), text))
}

fn classify_cmd(s: &Source) -> Res {
    let mut text = String::new();
    let result = match load(s)? {
        Structure::Hemiring(r) => {
            let f = classify(&r)?;
            let flags = [
                ("is_semiring", f.is_semiring),
                ("commutative", f.commutative),
                ("additively_idempotent", f.additively_idempotent),
                ("additively_cancellative", f.additively_cancellative),
                ("additively_regular", f.additively_regular),
                ("zeroic", f.zeroic),
                ("lattice_ordered", f.lattice_ordered),
                ("subtractive_hemiring", f.subtractive_hemiring),
                ("strongly_subtractive", f.strongly_subtractive),
                ("congruence_simple", f.congruence_simple),
                ("ideal_simple", f.ideal_simple),
                ("simple", f.simple),
            ];
            let identity = f.identity.map(|e| r.label(e).to_string());
            writeln!(text, "{} ({} elements)", r.name(), r.len()).unwrap();
            for (k, v) in flags {
                writeln!(text, "  {k}: {v}").unwrap();
            }
            writeln!(text, "  identity: {}", identity.as_deref().unwrap_or("none")).unwrap();
            writeln!(text, "  zeroid: {}", set(&r, &f.zeroid)).unwrap();
            let mut m = serde_json::Map::new();
            for (k, v) in flags {
                m.insert(k.into(), v.into());
            }
            m.insert("identity".into(), json!(identity));
            m.insert("zeroid".into(), json!(labels(&r, &f.zeroid)));
            Value::Object(m)
        }
        Structure::Semimodule(m) => {
            let rep = semimodule_report(&m);
            let ann = m.ring().subset_labels(&rep.annihilator);
            let zeroid = m.subset_labels(&rep.zeroid);
            writeln!(text, "{} ({} elements over {})", m.name(), m.len(), m.ring().name()).unwrap();
            let flags = [
                ("faithful", rep.faithful),
                ("cancellative", rep.cancellative),
                ("simple", rep.simple),
                ("irreducible", rep.irreducible),
                ("semi_irreducible", rep.semi_irreducible),
                ("w_finitely_generated", rep.w_finitely_generated),
            ];
            for (k, v) in flags {
                writeln!(text, "  {k}: {v}").unwrap();
            }
            writeln!(text, "  annihilator: {{{}}}", ann.join(", ")).unwrap();
            writeln!(text, "  zeroid: {{{}}}", zeroid.join(", ")).unwrap();
            let mut o = serde_json::Map::new();
            for (k, v) in flags {
                o.insert(k.into(), v.into());
            }
            o.insert("annihilator".into(), json!(ann));
            o.insert("zeroid".into(), json!(zeroid));
            Value::Object(o)
        }
        Structure::Monoid(m) => {
            let flags = [
                ("semilattice", m.is_semilattice()),
                ("lattice", m.is_lattice()),
                ("distributive_lattice", m.is_distributive_lattice()),
            ];
            writeln!(text, "{} ({} elements)", m.name(), m.len()).unwrap();
            let mut o = serde_json::Map::new();
            for (k, v) in flags {
                writeln!(text, "  {k}: {v}").unwrap();
                o.insert(k.into(), v.into());
            }
            Value::Object(o)
        }
    };
    Ok(ok(result, text))
}

fn radical_cmd(s: &Source, kind: &str, method: &str, reading: &str) -> Res {
    let kind: RadicalKind = kind.parse()?;
    let reading = match reading {
        "both" => SimplicityReading::Both,
        "congruence" | "congruence-only" | "congruence_only" => SimplicityReading::CongruenceOnly,
        other => return Err(CliError::input(format!("unknown reading `{other}`"))),
    };
    let method = match method {
        "auto" => None,
        "star" => Some(JacobsonMethod::StarDifferences),
        m => Some(m.parse::<JacobsonMethod>()?),
    };
    if method.is_some() && kind != RadicalKind::J {
        return Err(CliError::input("--method applies to --kind J only"));
    }
    let r = load_hemiring(s)?;
    let res = match method {
        Some(m) => jacobson_oracle(&r, m)?,
        None => radical_with(&r, kind, reading)?,
    };
    let mut text = format!("{} = {}\n", kind, set(&r, &res.subset));
    writeln!(text, "method: {}", res.method).unwrap();
    for w in &res.witnesses {
        writeln!(text, "  {}", render::witness_line(&r, w)).unwrap();
    }
    let mut out = ok(
        json!({
            "kind": kind.name(),
            "method": res.method,
            "elements": labels(&r, &res.subset),
            "order": res.subset.count(),
        }),
        text,
    );
    out.witnesses = res.witnesses.iter().map(|w| render::witness(&r, w)).collect();
    Ok(out)
}

fn quotient(s: &Source, ideal: &[String]) -> Res {
    let r = load_hemiring(s)?;
    let subset = r.parse_subset(ideal)?;
    let ideal = SubsetIdeal::new(&r, subset, Sidedness::TwoSided)?;
    let (q, proj) = bourne_quotient(&r, &ideal)?;
    let mut text = format!("{} / {} has {} elements\n", r.name(), set(&r, &ideal.subset), q.len());
    for x in 0..r.len() {
        writeln!(text, "  {} -> {}", r.label(x), q.label(proj[x])).unwrap();
    }
    text.push_str(&render::hemiring_tables(&q));
    let projection: Vec<Value> = (0..r.len()).map(|x| json!([r.label(x), q.label(proj[x])])).collect();
    Ok(ok(json!({ "quotient": hemiring_document(&q), "projection": projection }), text))
}

fn structure_summary(r: &FiniteHemiring) -> String {
    let identity = r.identity().map_or("none".to_string(), |e| r.label(e).to_string());
    format!("{} ({} elements, identity {identity})\n", r.name(), r.len())
}

fn matrix(s: &Source, n: usize) -> Res {
    let r = load_hemiring(s)?;
    let m = matrix_hemiring(&r, n)?;
    let mut text = structure_summary(&m);
    if m.len() <= 16 {
        text.push_str(&render::hemiring_tables(&m));
    }
    Ok(ok(json!({ "structure": hemiring_document(&m) }), text))
}

fn end(s: &Source, reduct: bool) -> Res {
    let m = match load(s)? {
        Structure::Monoid(m) => m,
        Structure::Hemiring(r) if reduct => FiniteMonoid::of_hemiring(&r),
        other => {
            return Err(CliError::input(format!(
                "{} is not a monoid; pass --monoid to use the additive reduct of a hemiring",
                other.name()
            )))
        }
    };
    let e = endomorphism_hemiring(&m)?;
    let mut text = structure_summary(&e.hemiring);
    for (i, f) in e.maps.iter().enumerate() {
        let image: Vec<&str> = f.values.iter().map(|&x| m.label(x)).collect();
        writeln!(text, "  {} = [{}]", e.hemiring.label(i), image.join(" ")).unwrap();
    }
    let maps: Vec<Value> = e
        .maps
        .iter()
        .enumerate()
        .map(|(i, f)| json!([e.hemiring.label(i), f.values.iter().map(|&x| m.label(x)).collect::<Vec<_>>()]))
        .collect();
    Ok(ok(
        json!({ "monoid": monoid_document(&m), "structure": hemiring_document(&e.hemiring), "maps": maps }),
        text,
    ))
}

fn modules(s: &Source, irreducible: bool) -> Res {
    let r = Arc::new(load_hemiring(s)?);
    let found: Vec<FiniteSemimodule> = if irreducible {
        enumerate_irreducible_semimodules(&r)?
    } else {
        enumerate_simple_semimodules(&r)?
    };
    let what = if irreducible { "irreducible" } else { "simple" };
    let mut text = format!("{} {what} semimodule(s) over {}\n", found.len(), r.name());
    for m in &found {
        let rep = semimodule_report(m);
        writeln!(
            text,
            "  {}: {} elements {{{}}}, annihilator {}",
            m.name(),
            m.len(),
            m.labels().join(", "),
            set(&r, &rep.annihilator)
        )
        .unwrap();
    }
    let docs: Vec<Value> = found.iter().map(|m| json!(semimodule_document(m))).collect();
    Ok(ok(json!({ "count": found.len(), "semimodules": docs }), text))
}

fn report_value(rep: &VerifyReport) -> Value {
    let details: Vec<Value> = rep.details.iter().map(|(k, v)| json!([k, v])).collect();
    json!({
        "theorem_id": rep.theorem_id,
        "structure": rep.structure,
        "status": rep.status,
        "reason": rep.reason,
        "details": details,
    })
}

fn verify(s: &Source, suite: &str, n: Option<usize>, idempotent: Option<&str>) -> Res {
    let r = load_hemiring(s)?;
    let e = match idempotent {
        Some(l) => Some(
            r.index_of(l)
                .ok_or_else(|| CliError::input(format!("unknown element label {l:?}")))?,
        ),
        None => None,
    };
    let input = VerifyInput { hemiring: r, n, idempotent: e };
    let reports = if suite.eq_ignore_ascii_case("all") {
        verify_all(&input)?
    } else {
        vec![verify_id(suite.parse::<TheoremId>()?, &input)?]
    };
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    let mut text = String::new();
    for rep in &reports {
        write!(text, "{} {}: {}", rep.theorem_id, rep.structure, rep.status).unwrap();
        if let Some(why) = &rep.reason {
            write!(text, " ({why})").unwrap();
        }
        text.push('\n');
        for (k, v) in &rep.details {
            writeln!(text, "  {k}: {v}").unwrap();
        }
    }
    let (status, code) = if failed > 0 { ("fail", EXIT_FAILURE) } else { ("pass", EXIT_OK) };
    let reports: Vec<Value> = reports.iter().map(report_value).collect();
    Ok(Outcome {
        inputs: Value::Null,
        result: json!({ "reports": reports, "failed": failed }),
        witnesses: Vec::new(),
        status,
        code,
        text,
    })
}

fn enumerate(order: usize, predicates: &[String], count_only: bool) -> Res {
    let stream = enumerate_hemirings(order, predicates)?;
    let classes: Vec<FiniteHemiring> = stream.collect();
    let mut text = format!("{} class(es) of order {order}\n", classes.len());
    let mut result = json!({ "order": order, "count": classes.len() });
    if !count_only {
        for r in &classes {
            text.push('\n');
            text.push_str(&structure_summary(r));
            text.push_str(&render::hemiring_tables(r));
        }
        result["classes"] = classes.iter().map(|r| json!(hemiring_document(r))).collect();
    }
    Ok(ok(result, text))
}

fn search(problem: &str, max_order: usize) -> Res {
    let problem: Problem = problem.parse()?;
    let rep = search_counterexample(problem, max_order)?;
    let finding = |f: &radx_core::verify::Finding| -> Value {
        let details: Vec<Value> = f.details.iter().map(|(k, v)| json!([k, v])).collect();
        json!({ "structure": hemiring_document(&f.hemiring), "details": details })
    };
    let mut text = format!(
        "{problem}: examined {} hemiring(s) up to order {max_order}, {} counterexample(s), {} observation(s)\n",
        rep.examined,
        rep.counterexamples.len(),
        rep.observations.len()
    );
    for (tag, list) in [("counterexample", &rep.counterexamples), ("observation", &rep.observations)] {
        for f in list {
            let d: Vec<String> = f.details.iter().map(|(k, v)| format!("{k} = {v}")).collect();
            writeln!(text, "  {tag}: {}", d.join(", ")).unwrap();
        }
    }
    let (status, code) = if rep.found() { ("found", EXIT_FAILURE) } else { ("exhausted", EXIT_OK) };
    Ok(Outcome {
        inputs: Value::Null,
        result: json!({
            "problem": problem.as_str(),
            "max_order": max_order,
            "examined": rep.examined,
            "observations": rep.observations.iter().map(finding).collect::<Vec<_>>(),
        }),
        witnesses: rep.counterexamples.iter().map(finding).collect(),
        status,
        code,
        text,
    })
}

fn export(s: &Source) -> Res {
    let d = load(s)?.document();
    let text = crate::to_json(&d);
    Ok(ok(json!(d), text))
}
