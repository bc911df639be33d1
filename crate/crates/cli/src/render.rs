use radx_core::radicals::Witness;
use radx_core::{FiniteHemiring, Partition, Subset};
use serde_json::{json, Value};

use crate::doc::{hemiring_document, semimodule_document};

pub fn labels(r: &FiniteHemiring, s: &Subset) -> Vec<String> {
    r.subset_labels(s)
}

pub fn set(r: &FiniteHemiring, s: &Subset) -> String {
    format!("{{{}}}", labels(r, s).join(", "))
}

pub fn blocks(r: &FiniteHemiring, p: &Partition) -> Vec<Vec<String>> {
    p.blocks()
        .iter()
        .map(|b| b.iter().map(|&x| r.label(x).to_string()).collect())
        .collect()
}

pub fn witness(r: &FiniteHemiring, w: &Witness) -> Value {
    match w {
        Witness::SemiregularIdeal(s) => json!({ "type": "semiregular_right_ideal", "elements": labels(r, s) }),
        Witness::Module { module, annihilator } => json!({
            "type": "semimodule",
            "module": semimodule_document(module),
            "annihilator": labels(r, annihilator),
        }),
        Witness::RadicalIdeal(s) => json!({ "type": "radical_ideal", "elements": labels(r, s) }),
        Witness::Congruence { partition, kernel } => json!({
            "type": "congruence",
            "blocks": blocks(r, partition),
            "kernel": labels(r, kernel),
        }),
        Witness::RingRadical { ring, radical } => json!({
            "type": "ring_radical",
            "ring": hemiring_document(ring),
            "radical": labels(ring, radical),
        }),
    }
}

pub fn witness_line(r: &FiniteHemiring, w: &Witness) -> String {
    match w {
        Witness::SemiregularIdeal(s) => format!("semiregular right ideal {}", set(r, s)),
        Witness::Module { module, annihilator } => {
            format!("semimodule {} ({} elements), annihilator {}", module.name(), module.len(), set(r, annihilator))
        }
        Witness::RadicalIdeal(s) => format!("radical ideal {}", set(r, s)),
        Witness::Congruence { partition, kernel } => {
            let b: Vec<String> = blocks(r, partition).iter().map(|b| format!("[{}]", b.join(" "))).collect();
            format!("congruence {} with kernel {}", b.join(" "), set(r, kernel))
        }
        Witness::RingRadical { ring, radical } => {
            format!("difference ring {} ({} elements), radical {}", ring.name(), ring.len(), set(ring, radical))
        }
    }
}

/// Tables as aligned text, for the human-readable reports.
pub fn table(title: &str, labels: &[String], rows: &[String], cell: impl Fn(usize, usize) -> String) -> String {
    let w = labels.iter().chain(rows).map(|l| l.chars().count()).max().unwrap_or(1);
    let mut out = format!("{title:>w$} |");
    for l in labels {
        out.push_str(&format!(" {l:>w$}"));
    }
    out.push('\n');
    out.push_str(&"-".repeat((w + 1) * (labels.len() + 1) + 1));
    out.push('\n');
    for (i, r) in rows.iter().enumerate() {
        out.push_str(&format!("{r:>w$} |"));
        for j in 0..labels.len() {
            out.push_str(&format!(" {:>w$}", cell(i, j)));
        }
        out.push('\n');
    }
    out
}

pub fn hemiring_tables(r: &FiniteHemiring) -> String {
    let l = r.labels();
    let mut s = table("+", l, l, |a, b| r.label(r.add(a, b)).to_string());
    s.push('\n');
    s.push_str(&table("*", l, l, |a, b| r.label(r.mul(a, b)).to_string()));
    s
}
