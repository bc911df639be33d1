//! Acceptance suite. One line per criterion; the process fails if any
//! blocking criterion fails or overruns its time bound.

use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use radx_core::congruence::ideal_power;
use radx_core::constructions::{corner, corner_image, matrix_hemiring, matrix_subset, matrix_unit};
use radx_core::enumerate::{all_hemirings_up_to, enumerate_hemirings};
use radx_core::iso::are_isomorphic;
use radx_core::radicals::{jacobson_oracle, radical, JacobsonMethod, RadicalKind};
use radx_core::semimodule::{
    are_isomorphic_semimodules, brute_force_semimodules, enumerate_simple_semimodules, is_simple,
};
use radx_core::verify::{search_counterexample, verify, Problem, Status, VerifyInput};
use radx_core::{catalog, classify, Additive, AlgebraError, Axiom, FiniteHemiring, RawHemiring, Sidedness, Subset, SubsetIdeal};

type Check = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    bound: Duration,
    blocking: bool,
    run: fn() -> Check,
}

fn rad(r: &FiniteHemiring, k: RadicalKind) -> Subset {
    radical(r, k).unwrap().subset
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn boolean_radicals() -> Check {
    let b = catalog::boolean();
    let j = b.subset_labels(&rad(&b, RadicalKind::J));
    let js = b.subset_labels(&rad(&b, RadicalKind::Js));
    ensure(j == ["0", "1"], || format!("J(B) = {j:?}"))?;
    ensure(js == ["0"], || format!("Js(B) = {js:?}"))?;
    Ok("J(B) = {0, 1}, Js(B) = {0}".into())
}

fn matrix_case(name: &str, k: RadicalKind) -> Result<(), String> {
    let r = catalog::hemiring(name).unwrap();
    let m = matrix_hemiring(&r, 2).unwrap();
    let lhs = rad(&m, k);
    let rhs = matrix_subset(&r, 2, &rad(&r, k)).unwrap();
    ensure(lhs == rhs, || format!("{k}(M_2({name})) has {} elements, M_2({k}({name})) has {}", lhs.count(), rhs.count()))
}

fn matrix_identities() -> Check {
    for name in ["B", "Z2", "Z4"] {
        for k in [RadicalKind::J, RadicalKind::Js, RadicalKind::BM] {
            matrix_case(name, k)?;
        }
    }
    Ok("9 identities over B, Z2, Z4 at n = 2".into())
}

fn matrix_stretch() -> Check {
    matrix_case("CHAIN4", RadicalKind::J)?;
    Ok("J(M_2(CHAIN4)) = M_2(J(CHAIN4))".into())
}

fn jacobson_agreement() -> Check {
    let mut pool = all_hemirings_up_to(3).unwrap();
    let enumerated = pool.len();
    pool.extend(
        catalog::HEMIRING_NAMES
            .iter()
            .map(|n| catalog::hemiring(n).unwrap())
            .filter(|r| r.len() <= 16),
    );
    for r in &pool {
        let results: Vec<Subset> = JacobsonMethod::ALL
            .iter()
            .map(|&m| jacobson_oracle(r, m).unwrap().subset)
            .collect();
        ensure(results.windows(2).all(|w| w[0] == w[1]), || format!("methods disagree on {}", r.name()))?;
    }
    Ok(format!("{enumerated} enumerated and {} catalog structures", pool.len() - enumerated))
}

fn hopkins() -> Check {
    let mut pool: Vec<FiniteHemiring> = all_hemirings_up_to(3).unwrap().into_iter().filter(|r| r.is_semiring()).collect();
    pool.extend(["Z4", "B", "BXZ2", "T3"].map(|n| catalog::hemiring(n).unwrap()));
    let mut exponents = Vec::new();
    for r in &pool {
        let j = SubsetIdeal::new(r, rad(r, RadicalKind::J), Sidedness::TwoSided).unwrap();
        let z = r.zeroid();
        let n = (1..=r.len()).find(|&k| ideal_power(r, &j, k).unwrap().subset == z);
        let n = n.ok_or_else(|| format!("no power of J({}) equals Z", r.name()))?;
        exponents.push(format!("{}:{n}", r.name()));
    }
    Ok(format!("{} structures, exponents {}", pool.len(), exponents.join(" ")))
}

fn js_in_j() -> Check {
    let mut checked = 0;
    for r in all_hemirings_up_to(3).unwrap() {
        let f = classify(&r).unwrap();
        if !(f.commutative || f.additively_regular) {
            continue;
        }
        checked += 1;
        ensure(rad(&r, RadicalKind::Js).is_subset(&rad(&r, RadicalKind::J)), || format!("Js ⊄ J on {}", r.name()))?;
    }
    Ok(format!("{checked} applicable hemirings"))
}

fn bm_suites() -> Check {
    let mut applicable = [0; 2];
    for r in all_hemirings_up_to(3).unwrap() {
        for (i, id) in ["THM_3_12", "THM_3_15"].into_iter().enumerate() {
            let rep = verify(id, &VerifyInput::new(r.clone())).unwrap();
            ensure(rep.status != Status::Fail, || format!("{id} on {}: {:?}", r.name(), rep.reason))?;
            if rep.status == Status::Pass {
                applicable[i] += 1;
            }
        }
        ensure(rad(&r, RadicalKind::BM).is_subset(&rad(&r, RadicalKind::BMCs)), || {
            format!("R_BM ⊄ R_Cs on {}", r.name())
        })?;
    }
    Ok(format!("regularity on {} and BM = Cs on {} applicable hemirings", applicable[0], applicable[1]))
}

fn pentagon_endomorphisms() -> Check {
    let rep = verify("EX_3_13", &VerifyInput::new(catalog::end_n5())).unwrap();
    ensure(rep.status == Status::Pass, || format!("{:?}", rep.reason))?;
    let order = rep.details.iter().find(|(k, _)| k == "order").map(|(_, v)| v.clone()).unwrap_or_default();
    Ok(format!("END_N5 has {order} elements"))
}

fn corners() -> Check {
    for name in ["B", "Z4"] {
        let r = catalog::hemiring(name).unwrap();
        let m = matrix_hemiring(&r, 2).unwrap();
        let e = matrix_unit(&r, 2, 0, 0).unwrap();
        let c = corner(&m, e).unwrap();
        ensure(c.is_full, || format!("E11 not full in M_2({name})"))?;
        for k in [RadicalKind::J, RadicalKind::Js, RadicalKind::BM] {
            let lhs = c.push(&rad(&c.hemiring, k), m.len());
            let rhs = corner_image(&m, e, &rad(&m, k));
            ensure(lhs == rhs, || format!("{k}(eRe) ≠ e{k}(R)e in M_2({name})"))?;
        }
    }
    Ok("M_2(B) and M_2(Z4) at E11".into())
}

fn semimodule_completeness() -> Check {
    let mut counts = Vec::new();
    for r in [catalog::boolean(), catalog::integers_mod(2)] {
        let r = Arc::new(r);
        let listed = enumerate_simple_semimodules(&r).unwrap();
        let brute: Vec<_> = brute_force_semimodules(&r, 3).unwrap().into_iter().filter(is_simple).collect();
        let covered = |a: &[radx_core::FiniteSemimodule], b: &[radx_core::FiniteSemimodule]| {
            a.iter().all(|m| b.iter().any(|n| are_isomorphic_semimodules(m, n)))
        };
        ensure(covered(&listed, &brute) && covered(&brute, &listed), || format!("mismatch over {}", r.name()))?;
        counts.push(format!("{}: {} simple of {} brute-force hits", r.name(), listed.len(), brute.len()));
    }
    Ok(counts.join(", "))
}

/// Every pair of tables with zero at index 0, deduplicated by isomorphism.
fn brute_force_classes(n: usize) -> Vec<FiniteHemiring> {
    let elements: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let tables = (n as u64).pow(cells.len() as u32);
    let fill = |mut code: u64, base: Vec<Vec<usize>>| {
        let mut t = base;
        for &(a, b) in &cells {
            t[a][b] = (code % n as u64) as usize;
            code /= n as u64;
        }
        t
    };
    let mut add0 = vec![vec![0; n]; n];
    for a in 0..n {
        add0[0][a] = a;
        add0[a][0] = a;
    }
    let mut classes: Vec<FiniteHemiring> = Vec::new();
    for ai in 0..tables {
        let add = fill(ai, add0.clone());
        for mi in 0..tables {
            let raw = RawHemiring {
                name: "x".into(),
                elements: elements.clone(),
                zero: 0,
                add: add.clone(),
                mul: fill(mi, vec![vec![0; n]; n]),
            };
            if let Ok(r) = FiniteHemiring::validate(raw) {
                if !classes.iter().any(|c| are_isomorphic(c, &r)) {
                    classes.push(r);
                }
            }
        }
    }
    classes
}

const ORDER_3_CLASSES: usize = 22;

fn enumeration_counts() -> Check {
    let count = |k: usize, p: &[&str]| enumerate_hemirings(k, p).unwrap().len();
    ensure(count(1, &[]) == 1, || "order 1".into())?;
    ensure(count(2, &[]) == 4, || format!("order 2: {}", count(2, &[])))?;
    ensure(count(2, &["is_semiring"]) == 2, || "order 2 semirings".into())?;
    for k in 1..=3 {
        let brute = brute_force_classes(k);
        let listed: Vec<FiniteHemiring> = enumerate_hemirings::<&str>(k, &[]).unwrap().collect();
        ensure(brute.len() == listed.len(), || format!("order {k}: {} listed, {} brute force", listed.len(), brute.len()))?;
        ensure(brute.iter().all(|b| listed.iter().any(|l| are_isomorphic(b, l))), || format!("order {k}: class missing"))?;
        let semirings = brute.iter().filter(|r| r.is_semiring()).count();
        ensure(semirings == count(k, &["is_semiring"]), || format!("order {k}: semiring count"))?;
    }
    ensure(count(3, &[]) == ORDER_3_CLASSES, || format!("order 3: {}", count(3, &[])))?;
    Ok(format!("1, 4 (2 semirings), {ORDER_3_CLASSES}"))
}

fn searches() -> Check {
    let mut notes = Vec::new();
    for p in [Problem::P1, Problem::P3] {
        let a = search_counterexample(p, 3).unwrap();
        let b = search_counterexample(p, 3).unwrap();
        ensure(format!("{:?}", a.counterexamples) == format!("{:?}", b.counterexamples), || format!("{p} not deterministic"))?;
        ensure(format!("{:?}", a.observations) == format!("{:?}", b.observations), || format!("{p} not deterministic"))?;
        notes.push(format!(
            "{p}: {} examined, {} counterexamples, {} observations",
            a.examined,
            a.counterexamples.len(),
            a.observations.len()
        ));
    }
    Ok(notes.join("; "))
}

fn radx(args: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_radx")).args(args).output().unwrap();
    (out.status.code(), out.stdout)
}

/// Does the named instance really break the axiom?
fn violates(raw: &RawHemiring, axiom: Axiom, w: &[usize]) -> bool {
    let a = |x: usize, y: usize| raw.add[x][y];
    let m = |x: usize, y: usize| raw.mul[x][y];
    let z = raw.zero;
    match (axiom, w) {
        (Axiom::AdditiveIdentity, &[x]) => a(z, x) != x || a(x, z) != x,
        (Axiom::AdditiveCommutativity, &[x, y]) => a(x, y) != a(y, x),
        (Axiom::AdditiveAssociativity, &[x, y, u]) => a(a(x, y), u) != a(x, a(y, u)),
        (Axiom::MultiplicativeAssociativity, &[x, y, u]) => m(m(x, y), u) != m(x, m(y, u)),
        (Axiom::LeftDistributivity, &[x, y, u]) => m(x, a(y, u)) != a(m(x, y), m(x, u)),
        (Axiom::RightDistributivity, &[x, y, u]) => m(a(x, y), u) != a(m(x, u), m(y, u)),
        (Axiom::ZeroAbsorption, &[x]) => m(z, x) != z || m(x, z) != z,
        _ => false,
    }
}

fn satisfies_all(raw: &RawHemiring) -> bool {
    let n = raw.elements.len();
    let idx = 0..n;
    idx.clone().all(|x| !violates(raw, Axiom::AdditiveIdentity, &[x]) && !violates(raw, Axiom::ZeroAbsorption, &[x]))
        && idx.clone().all(|x| idx.clone().all(|y| !violates(raw, Axiom::AdditiveCommutativity, &[x, y])))
        && idx.clone().all(|x| {
            idx.clone().all(|y| {
                idx.clone().all(|u| {
                    [
                        Axiom::AdditiveAssociativity,
                        Axiom::MultiplicativeAssociativity,
                        Axiom::LeftDistributivity,
                        Axiom::RightDistributivity,
                    ]
                    .iter()
                    .all(|&ax| !violates(raw, ax, &[x, y, u]))
                })
            })
        })
}

fn determinism_and_validation() -> Check {
    let commands: &[&[&str]] = &[
        &["radical", "--kind", "J", "--builtin", "B", "--json"],
        &["radical", "--kind", "Js", "--builtin", "B", "--json"],
        &["radical", "--kind", "BMCs", "--builtin", "END_N5", "--json"],
        &["verify", "--suite", "COR_5_11_J", "--builtin", "Z4", "--n", "2", "--json"],
        &["verify", "--suite", "EX_3_13", "--builtin", "END_N5", "--json"],
        &["verify", "--suite", "all", "--builtin", "B"],
        &["simples", "--builtin", "Z2", "--json"],
        &["irreducibles", "--builtin", "BXZ2", "--json"],
        &["enumerate", "--order", "3", "--json"],
        &["search", "--problem", "P1", "--max-order", "3", "--json"],
        &["search", "--problem", "P3", "--max-order", "3", "--json"],
        &["classify", "--builtin", "M2B"],
    ];
    for args in commands {
        let first = radx(args);
        let again = radx(args);
        let jobs = radx(&[*args, &["--jobs", "1"]].concat());
        ensure(first == again && first == jobs, || format!("output of {args:?} varies"))?;
    }
    let mut rejected = 0;
    let mut still_valid = 0;
    for name in catalog::HEMIRING_NAMES {
        let r = catalog::hemiring(name).unwrap();
        if r.len() < 2 || r.len() > 16 {
            continue;
        }
        let base = r.to_raw();
        let n = r.len();
        for table in 0..2 {
            for x in 0..n {
                for y in 0..n {
                    let mut raw = base.clone();
                    let t = if table == 0 { &mut raw.add } else { &mut raw.mul };
                    t[x][y] = (t[x][y] + 1) % n;
                    match FiniteHemiring::validate(raw.clone()) {
                        Err(AlgebraError::AxiomViolation { axiom, witness }) => {
                            let w: Vec<usize> =
                                witness.iter().map(|l| raw.elements.iter().position(|e| e == l).unwrap()).collect();
                            ensure(violates(&raw, axiom, &w), || format!("{name}: bogus witness {axiom} {witness:?}"))?;
                            rejected += 1;
                        }
                        Ok(_) => {
                            ensure(satisfies_all(&raw), || format!("{name}: accepted an invalid mutation"))?;
                            still_valid += 1;
                        }
                        Err(e) => return Err(format!("{name}: {e}")),
                    }
                }
            }
        }
    }
    Ok(format!(
        "{} commands byte-identical; {rejected} mutations rejected with true witnesses, {still_valid} still valid",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: "1", title: "radicals of B", bound: Duration::from_secs(1), blocking: true, run: boolean_radicals },
        Criterion { id: "2", title: "matrix identities", bound: Duration::from_secs(60), blocking: true, run: matrix_identities },
        Criterion { id: "2s", title: "matrix identity over CHAIN4 (stretch)", bound: Duration::from_secs(600), blocking: false, run: matrix_stretch },
        Criterion { id: "3", title: "Jacobson method agreement", bound: Duration::from_secs(300), blocking: true, run: jacobson_agreement },
        Criterion { id: "4", title: "Hopkins exponent", bound: Duration::from_secs(60), blocking: true, run: hopkins },
        Criterion { id: "5", title: "Js inside J", bound: Duration::from_secs(300), blocking: true, run: js_in_j },
        Criterion { id: "6", title: "Brown-McCoy suites", bound: Duration::from_secs(600), blocking: true, run: bm_suites },
        Criterion { id: "7", title: "endomorphisms of N5", bound: Duration::from_secs(120), blocking: true, run: pentagon_endomorphisms },
        Criterion { id: "8", title: "corner identities", bound: Duration::from_secs(120), blocking: true, run: corners },
        Criterion { id: "9", title: "simple semimodule completeness", bound: Duration::from_secs(60), blocking: true, run: semimodule_completeness },
        Criterion { id: "10", title: "enumeration ground truth", bound: Duration::from_secs(300), blocking: true, run: enumeration_counts },
        Criterion { id: "11", title: "open problem searches", bound: Duration::from_secs(600), blocking: true, run: searches },
        Criterion { id: "12", title: "determinism and validation", bound: Duration::from_secs(600), blocking: true, run: determinism_and_validation },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match &outcome {
            Ok(_) if elapsed <= c.bound => "PASS",
            _ => "FAIL",
        };
        let note = match &outcome {
            Ok(s) if elapsed <= c.bound => s.clone(),
            Ok(s) => format!("{s}; over the time bound"),
            Err(e) => e.clone(),
        };
        println!(
            "[{verdict}] {:>3} {} ({:.2}s of {}s): {note}",
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.bound.as_secs()
        );
        if verdict == "FAIL" && c.blocking {
            failed += 1;
        }
    }
    println!("{} of {} blocking criteria passed", criteria.iter().filter(|c| c.blocking).count() - failed, criteria.iter().filter(|c| c.blocking).count());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
