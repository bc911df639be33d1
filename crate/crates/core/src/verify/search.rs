use std::fmt;
use std::str::FromStr;

use super::render_subset;
use crate::enumerate::enumerate_hemirings;
use crate::error::{AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::radicals::{radical, radical_with, RadicalKind, SimplicityReading};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    /// Is `Js(R) ⊆ J(R)` for every hemiring?
    P1,
    /// Does `R_BM(R) = R_Cs(R)` for every hemiring?
    P3,
}

impl Problem {
    pub fn as_str(self) -> &'static str {
        match self {
            Problem::P1 => "P1_JS_VS_J",
            Problem::P3 => "P3_BM_VS_CS",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Problem {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "P1" | "P1_JS_VS_J" => Ok(Problem::P1),
            "P3" | "P3_BM_VS_CS" => Ok(Problem::P3),
            _ => Err(AlgebraError::InvalidInput(format!("unknown problem `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Finding {
    pub hemiring: FiniteHemiring,
    pub details: Vec<(String, String)>,
}

impl Finding {
    fn new(r: &FiniteHemiring, details: Vec<(String, String)>) -> Self {
        Finding {
            hemiring: r.clone(),
            details,
        }
    }
}

/// `counterexamples` answer the problem negatively. `observations` hold
/// structures that are interesting but consistent with a positive answer:
/// `Js ≠ J` for P1, and disagreement under the congruence-only reading of
/// "simple" for P3.
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub problem: Problem,
    pub max_order: usize,
    pub examined: usize,
    pub counterexamples: Vec<Finding>,
    pub observations: Vec<Finding>,
}

impl SearchReport {
    pub fn found(&self) -> bool {
        !self.counterexamples.is_empty()
    }
}

/// Streams every hemiring class of order `1..=max_order` and tests it.
pub fn search_counterexample(problem: Problem, max_order: usize) -> Result<SearchReport> {
    let mut report = SearchReport {
        problem,
        max_order,
        examined: 0,
        counterexamples: Vec::new(),
        observations: Vec::new(),
    };
    for order in 1..=max_order {
        for r in enumerate_hemirings::<&str>(order, &[])? {
            report.examined += 1;
            match problem {
                Problem::P1 => {
                    let j = radical(&r, RadicalKind::J)?.subset;
                    let js = radical(&r, RadicalKind::Js)?.subset;
                    if js == j {
                        continue;
                    }
                    let f = Finding::new(
                        &r,
                        vec![
                            ("name".into(), r.name().to_string()),
                            ("J".into(), render_subset(&r, &j)),
                            ("Js".into(), render_subset(&r, &js)),
                        ],
                    );
                    if js.is_subset(&j) {
                        report.observations.push(f);
                    } else {
                        report.counterexamples.push(f);
                    }
                }
                Problem::P3 => {
                    let bm = radical(&r, RadicalKind::BM)?.subset;
                    let both = radical_with(&r, RadicalKind::BMCs, SimplicityReading::Both)?.subset;
                    let weak = radical_with(&r, RadicalKind::BMCs, SimplicityReading::CongruenceOnly)?.subset;
                    if bm == both && bm == weak {
                        continue;
                    }
                    let f = Finding::new(
                        &r,
                        vec![
                            ("name".into(), r.name().to_string()),
                            ("BM".into(), render_subset(&r, &bm)),
                            ("Cs".into(), render_subset(&r, &both)),
                            ("Cs_congruence_only".into(), render_subset(&r, &weak)),
                        ],
                    );
                    if bm != both {
                        report.counterexamples.push(f);
                    } else {
                        report.observations.push(f);
                    }
                }
            }
        }
    }
    Ok(report)
}
