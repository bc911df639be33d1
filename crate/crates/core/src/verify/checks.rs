use std::collections::BTreeSet;
use std::sync::Arc;

use super::{render_subset, Status, VerifyReport};
use crate::catalog;
use crate::classify::{is_additively_regular, is_lattice_ordered, is_strongly_subtractive, is_subtractive_hemiring, is_zeroic};
use crate::congruence::{
    enumerate_ideals, ideal_power, is_congruence_simple, is_ideal, is_ideal_simple, quotient_unchecked, Sidedness,
    SubsetIdeal,
};
use crate::constructions::{
    additive_endomorphisms, corner, corner_image, density_check, endomorphism_hemiring, full_idempotents,
    matrix_hemiring, matrix_subset,
};
use crate::error::Result;
use crate::hemiring::FiniteHemiring;
use crate::iso::are_isomorphic;
use crate::limits::Limits;
use crate::radicals::{
    is_f1_regular, is_g_regular, is_primitive, jacobson_oracle, radical, radical_with, regularity,
    subdirect_by_annihilators, JacobsonMethod, RadicalKind, Regularity, SimplicityReading, Witness,
};
use crate::semimodule::{
    additive_closure, are_isomorphic_semimodules, cyclic_semimodules, enumerate_irreducible_semimodules,
    enumerate_simple_semimodules, FiniteSemimodule,
};
use crate::structure::Additive;
use crate::subset::Subset;

fn show(r: &FiniteHemiring, s: &Subset) -> String {
    if s.count() <= 32 {
        render_subset(r, s)
    } else {
        format!("{} of {} elements", s.count(), r.len())
    }
}

fn rad(r: &FiniteHemiring, k: RadicalKind) -> Result<Subset> {
    Ok(radical(r, k)?.subset)
}

fn yes(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

pub fn example_3_7(id: &str) -> Result<VerifyReport> {
    let b = catalog::boolean();
    let mut rep = VerifyReport::new(id, &b);
    let j = rad(&b, RadicalKind::J)?;
    let js = rad(&b, RadicalKind::Js)?;
    rep.detail("J", render_subset(&b, &j)).detail("Js", render_subset(&b, &js));
    rep.require(j.is_full(), "J(B) = B");
    rep.require(js.is_zero(), "Js(B) = 0");
    let shared = Arc::new(b.clone());
    let simples = enumerate_simple_semimodules(&shared)?;
    let irreducibles = enumerate_irreducible_semimodules(&shared)?;
    rep.detail("simple_modules", simples.len()).detail("irreducible_modules", irreducibles.len());
    let regular = FiniteSemimodule::regular(shared);
    rep.require(
        simples.len() == 1 && are_isomorphic_semimodules(&simples[0], &regular),
        "B is the only simple B-semimodule",
    );
    rep.require(irreducibles.is_empty(), "B has no irreducible semimodules");
    Ok(rep)
}

pub fn subdirect_j(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    let Some(dec) = subdirect_by_annihilators(r, RadicalKind::J)? else {
        return Ok(rep.inapplicable("J(R) is nonzero"));
    };
    let mut rep = rep;
    rep.detail("factors", dec.factors.len())
        .detail("combined_kernel", render_subset(r, &dec.combined_kernel));
    rep.require(dec.passes(), "the factor maps form a semiisomorphism onto a subdirect product");
    for (i, f) in dec.factors.iter().enumerate() {
        let prim = is_primitive(&f.hemiring)?.is_some();
        rep.detail(format!("factor_{i}"), format!("{} elements, primitive = {}", f.hemiring.len(), yes(prim)));
        rep.require(prim, format!("factor {i} is primitive"));
    }
    Ok(rep)
}

fn is_simple_ring(r: &FiniteHemiring) -> bool {
    let n = r.len();
    r.is_group() && is_ideal_simple(r) && (0..n).any(|a| (0..n).any(|b| r.mul(a, b) != 0))
}

pub fn congruence_simple_dichotomy(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if !is_congruence_simple(r) {
        return Ok(rep.inapplicable("R is not congruence-simple"));
    }
    let mut rep = rep;
    let j = rad(r, RadicalKind::J)?;
    let primitive = is_primitive(r)?.is_some();
    rep.detail("J", show(r, &j)).detail("primitive", yes(primitive));
    rep.require(j.is_full() || primitive, "J(R) = R or R is primitive");
    if j.is_zero() {
        let simple_ring = is_simple_ring(r);
        rep.detail("simple_ring", yes(simple_ring));
        rep.require(simple_ring, "a J-semisimple congruence-simple hemiring is a simple ring");
    }
    Ok(rep)
}

pub fn dense_decomposition(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if !r.is_idempotent() {
        return Ok(rep.inapplicable("R is not additively idempotent"));
    }
    let mut rep = rep;
    let js = rad(r, RadicalKind::Js)?;
    rep.detail("Js", show(r, &js));
    if let Some(dec) = subdirect_by_annihilators(r, RadicalKind::Js)? {
        rep.detail("factors", dec.factors.len());
        for (i, f) in dec.factors.iter().enumerate() {
            let m = f.module.as_ref().map_or(0, |m| m.len());
            rep.detail(
                format!("factor_{i}"),
                format!("{} elements acting on {m}, dense = {}", f.hemiring.len(), yes(f.dense == Some(true))),
            );
            rep.require(f.dense == Some(true), format!("factor {i} is dense in End(M)"));
        }
        rep.require(dec.passes(), "the factor maps form a semiisomorphism onto a subdirect product");
    }
    Ok(rep)
}

fn subtractive_commutative_or_lattice(r: &FiniteHemiring) -> Result<Option<&'static str>> {
    Ok(if is_subtractive_hemiring(r)? {
        Some("subtractive")
    } else if r.is_commutative() {
        Some("commutative")
    } else if is_lattice_ordered(r) {
        Some("lattice-ordered")
    } else {
        None
    })
}

pub fn regularity_equivalence(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    let Some(class) = subtractive_commutative_or_lattice(r)? else {
        return Ok(rep.inapplicable("R is not subtractive, commutative or lattice-ordered"));
    };
    let mut rep = rep;
    let bm_whole = rad(r, RadicalKind::BM)?.is_full();
    let g = is_g_regular(r);
    let f1 = is_f1_regular(r);
    rep.detail("class", class)
        .detail("bm_radical", yes(bm_whole))
        .detail("g_regular", yes(g))
        .detail("f1_regular", yes(f1));
    rep.require(bm_whole == g && g == f1, "Brown-McCoy radical <=> G-regular <=> F1-regular");
    Ok(rep)
}

pub fn example_3_13(id: &str) -> Result<VerifyReport> {
    let n5 = catalog::pentagon();
    let end = endomorphism_hemiring(&n5)?;
    let e = end.hemiring.clone().with_name("END_N5");
    let mut rep = VerifyReport::new(id, &e);
    rep.detail("order", e.len());
    rep.require(!n5.is_distributive_lattice(), "N5 is a non-distributive lattice");
    let cs = is_congruence_simple(&e);
    rep.detail("congruence_simple", yes(cs));
    rep.require(cs, "End(N5) is congruence-simple");
    let density = density_check(&end, &Subset::full(e.len()), &n5)?;
    let f = density.f_m;
    let ideal = is_ideal(&e, &f, Sidedness::TwoSided);
    rep.detail("F_M", format!("{} of {} elements", f.count(), e.len()))
        .detail("F_M_ideal", yes(ideal));
    rep.require(ideal && !f.is_zero() && !f.is_full(), "F_M is a proper nonzero ideal");
    let bm = rad(&e, RadicalKind::BM)?;
    rep.detail("BM", show(&e, &bm));
    rep.require(bm.is_full(), "R_BM(End(N5)) = End(N5)");
    let one = end.identity_index();
    let f1 = regularity(&e, one, Regularity::F1);
    rep.detail("identity_f1_regular", yes(f1));
    rep.require(!f1, "the identity map is not F1-regular");
    Ok(rep)
}

pub fn bm_equals_cs(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new(id, r);
    let bm = rad(r, RadicalKind::BM)?;
    let cs = radical_with(r, RadicalKind::BMCs, SimplicityReading::Both)?.subset;
    let cs_weak = radical_with(r, RadicalKind::BMCs, SimplicityReading::CongruenceOnly)?.subset;
    rep.detail("BM", show(r, &bm))
        .detail("Cs", show(r, &cs))
        .detail("Cs_congruence_only", show(r, &cs_weak));
    rep.require(bm.is_subset(&cs), "R_BM is contained in R_Cs");
    let applicable = r.is_commutative() || is_strongly_subtractive(r)? || is_lattice_ordered(r);
    if !applicable && rep.status == Status::Pass {
        return Ok(rep.inapplicable("R is not commutative, strongly subtractive or lattice-ordered"));
    }
    if applicable {
        rep.require(bm == cs, "R_BM = R_Cs");
    }
    Ok(rep)
}

fn is_field(q: &FiniteHemiring) -> bool {
    let n = q.len();
    match q.identity() {
        Some(one) => {
            n >= 2
                && q.is_group()
                && q.is_commutative()
                && (1..n).all(|x| (1..n).any(|y| q.mul(x, y) == one))
        }
        None => false,
    }
}

/// The quotients `R/ρ` for the congruences collected by `R_Cs`.
fn cs_factors(r: &FiniteHemiring) -> Result<Vec<FiniteHemiring>> {
    Ok(radical(r, RadicalKind::BMCs)?
        .witnesses
        .iter()
        .filter_map(|w| match w {
            Witness::Congruence { partition, .. } => Some(quotient_unchecked(r, partition).0),
            _ => None,
        })
        .collect())
}

fn semisimple_factors(
    id: &str,
    r: &FiniteHemiring,
    hypothesis: (bool, &str),
    allowed: impl Fn(&FiniteHemiring) -> bool,
    describe: &str,
) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if !hypothesis.0 {
        return Ok(rep.inapplicable(hypothesis.1));
    }
    let mut rep = rep;
    let bm = rad(r, RadicalKind::BM)?;
    let cs = rad(r, RadicalKind::BMCs)?;
    rep.detail("BM", show(r, &bm)).detail("Cs", show(r, &cs));
    rep.require(bm.is_zero() == cs.is_zero(), "R_BM = 0 <=> R_Cs = 0");
    if cs.is_zero() {
        let factors = cs_factors(r)?;
        rep.detail("factors", factors.len());
        for (i, q) in factors.iter().enumerate() {
            let ok = allowed(q);
            rep.detail(format!("factor_{i}"), format!("{} elements, {describe} = {}", q.len(), yes(ok)));
            rep.require(ok, format!("factor {i} is {describe}"));
        }
    }
    Ok(rep)
}

pub fn commutative_factors(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let b = catalog::boolean();
    semisimple_factors(
        id,
        r,
        (r.is_commutative(), "R is not commutative"),
        |q| is_field(q) || are_isomorphic(q, &b),
        "a field or B",
    )
}

pub fn lattice_ordered_factors(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let b = catalog::boolean();
    semisimple_factors(
        id,
        r,
        (is_lattice_ordered(r), "R is not lattice-ordered"),
        |q| are_isomorphic(q, &b),
        "isomorphic to B",
    )
}

/// `IM`: the additive span of `{ i m }`.
fn ideal_times_module(m: &FiniteSemimodule, ideal: &Subset) -> Subset {
    let mut seed = Subset::zero(m.len());
    for i in ideal.iter() {
        for x in 0..m.len() {
            seed.insert(m.act(i, x));
        }
    }
    additive_closure(m, &seed)
}

pub fn nakayama(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    let Some(one) = r.identity() else {
        return Ok(rep.inapplicable("R has no identity"));
    };
    if r.zeroid().contains(one) {
        return Ok(rep.inapplicable("1 lies in Z(R)"));
    }
    let mut rep = rep;
    let j = rad(r, RadicalKind::J)?;
    let shared = Arc::new(r.clone());
    let mut family: Vec<FiniteSemimodule> = cyclic_semimodules(&shared)?.into_iter().map(|(m, _)| m).collect();
    family.extend(enumerate_irreducible_semimodules(&shared)?);
    let ideals = enumerate_ideals(r, Sidedness::Left, false)?;
    rep.detail("J", show(r, &j))
        .detail("left_ideals", ideals.len())
        .detail("semimodules", format!("{} (cyclic and irreducible)", family.len()));
    for ideal in &ideals {
        let inside = ideal.subset.is_subset(&j);
        let nakayama = family
            .iter()
            .all(|m| !ideal_times_module(m, &ideal.subset).is_full() || m.zeroid().is_full());
        rep.require(
            inside == nakayama,
            format!("I = {}: I ⊆ J(R) is {} but the module condition is {}", show(r, &ideal.subset), yes(inside), yes(nakayama)),
        );
    }
    Ok(rep)
}

pub fn hopkins(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if r.identity().is_none() {
        return Ok(rep.inapplicable("R has no identity"));
    }
    let mut rep = rep;
    let j = rad(r, RadicalKind::J)?;
    let z = r.zeroid();
    rep.detail("J", show(r, &j)).detail("Z", show(r, &z));
    let ideal = SubsetIdeal::new(r, j, Sidedness::TwoSided)?;
    let mut exponent = None;
    for k in 1..=r.len() {
        if ideal_power(r, &ideal, k)?.subset == z {
            exponent = Some(k);
            break;
        }
    }
    match exponent {
        Some(k) => {
            rep.detail("exponent", k);
        }
        None => rep.require(false, "no power J(R)^n with n <= |R| equals Z(R)"),
    }
    Ok(rep)
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    g.iter().map(|&x| f[x]).collect()
}

pub fn double_centralizer(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    let Some(m) = is_primitive(r)? else {
        return Ok(rep.inapplicable("R is not primitive"));
    };
    let mut rep = rep;
    let n = m.len();
    let s: BTreeSet<Vec<usize>> = (0..r.len()).map(|x| (0..n).map(|y| m.act(x, y)).collect()).collect();
    let neg: Vec<usize> = (0..n).map(|x| m.negation(x).expect("irreducible modules are groups")).collect();
    let ds: BTreeSet<Vec<usize>> = s
        .iter()
        .flat_map(|f| s.iter().map(move |g| (f, g)))
        .map(|(f, g)| (0..n).map(|x| m.add(f[x], neg[g[x]])).collect())
        .collect();
    let ends = additive_endomorphisms(&m)?;
    let centralizer: Vec<&Vec<usize>> = ends
        .iter()
        .filter(|c| ds.iter().all(|d| compose(c, d) == compose(d, c)))
        .collect();
    let division = centralizer
        .iter()
        .filter(|c| c.iter().any(|&v| v != 0))
        .all(|c| c.iter().collect::<BTreeSet<_>>().len() == n);
    let bicommutant: BTreeSet<Vec<usize>> = ends
        .iter()
        .filter(|f| centralizer.iter().all(|c| compose(f, c) == compose(c, f)))
        .cloned()
        .collect();
    rep.detail("module_order", n)
        .detail("S", s.len())
        .detail("D(S)", ds.len())
        .detail("centralizer", centralizer.len())
        .detail("End_C(M)", bicommutant.len());
    rep.require(division, "the centralizer of D(S) is a division ring");
    rep.require(ds == bicommutant, "D(S) is the full ring of C-linear maps of M");
    Ok(rep)
}

pub fn js_in_j(id: &str, r: &FiniteHemiring) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    let class = if r.is_commutative() {
        "commutative"
    } else if is_additively_regular(r) {
        "additively regular"
    } else {
        return Ok(rep.inapplicable("R is neither commutative nor additively regular"));
    };
    let mut rep = rep;
    let j = rad(r, RadicalKind::J)?;
    let js = rad(r, RadicalKind::Js)?;
    rep.detail("class", class).detail("Js", show(r, &js)).detail("J", show(r, &j));
    rep.require(js.is_subset(&j), "Js(R) ⊆ J(R)");
    Ok(rep)
}

fn matrix_fits(r: &FiniteHemiring, n: usize) -> bool {
    (r.len() as f64).powi((n * n) as i32) <= Limits::current().max_carrier as f64
}

pub fn zeroic_corners(id: &str, r: &FiniteHemiring, n: usize, _e: Option<usize>) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if r.identity().is_none() {
        return Ok(rep.inapplicable("R has no identity"));
    }
    if !is_zeroic(r) {
        return Ok(rep.inapplicable("R is not zeroic"));
    }
    let mut rep = rep;
    let m = matrix_hemiring(r, n)?;
    let full = full_idempotents(&m);
    rep.detail("matrix_order", m.len()).detail("full_idempotents", full.len());
    for e in full {
        let c = corner(&m, e)?;
        rep.require(is_zeroic(&c.hemiring), format!("the corner at {} is zeroic", m.label(e)));
    }
    Ok(rep)
}

pub fn bm_semisimple_matrices(id: &str, r: &FiniteHemiring, n: usize) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if r.identity().is_none() {
        return Ok(rep.inapplicable("R has no identity"));
    }
    let mut rep = rep;
    let zero = rad(r, RadicalKind::BM)?.is_zero();
    rep.detail("BM(R) = 0", yes(zero));
    for k in 1..=n.max(1) {
        if !matrix_fits(r, k) {
            rep.detail("checked_up_to", k - 1);
            break;
        }
        let m = matrix_hemiring(r, k)?;
        let mz = rad(&m, RadicalKind::BM)?.is_zero();
        rep.detail(format!("BM(M{k}(R)) = 0"), yes(mz));
        rep.require(mz == zero, format!("R_BM(R) = 0 <=> R_BM(M_{k}(R)) = 0"));
    }
    Ok(rep)
}

pub fn matrix_identity(id: &str, r: &FiniteHemiring, n: usize, kind: RadicalKind) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new(id, r);
    let m = matrix_hemiring(r, n)?;
    let lhs = rad(&m, kind)?;
    let base = rad(r, kind)?;
    let rhs = matrix_subset(r, n, &base)?;
    rep.detail("n", n)
        .detail(format!("{kind}(R)"), show(r, &base))
        .detail(format!("{kind}(M_n(R))"), show(&m, &lhs))
        .detail(format!("M_n({kind}(R))"), show(&m, &rhs));
    rep.require(lhs == rhs, format!("{kind}(M_n(R)) = M_n({kind}(R))"));
    if kind == RadicalKind::J && m.len() <= 16 {
        let oracle = jacobson_oracle(&m, JacobsonMethod::Semiregular)?.subset;
        rep.detail("semiregular_oracle", show(&m, &oracle));
        rep.require(oracle == lhs, "semiregular oracle agrees");
    }
    Ok(rep)
}

fn idempotents_to_check(r: &FiniteHemiring, e: Option<usize>) -> Vec<usize> {
    match e {
        Some(e) => vec![e],
        None => r.idempotents().into_iter().filter(|&e| e != 0).collect(),
    }
}

pub fn corner_jacobson(id: &str, r: &FiniteHemiring, e: Option<usize>) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new(id, r);
    let es = idempotents_to_check(r, e);
    if es.is_empty() {
        return Ok(rep.inapplicable("R has no nonzero idempotent"));
    }
    let j = rad(r, RadicalKind::J)?;
    for e in es {
        let c = corner(r, e)?;
        let lhs = c.push(&rad(&c.hemiring, RadicalKind::J)?, r.len());
        let rhs = corner_image(r, e, &j);
        rep.detail(format!("J(eRe) at {}", r.label(e)), show(r, &lhs))
            .detail(format!("eJ(R)e at {}", r.label(e)), show(r, &rhs));
        rep.require(lhs == rhs, format!("J(eRe) = eJ(R)e for e = {}", r.label(e)));
    }
    Ok(rep)
}

pub fn corner_bm_js(id: &str, r: &FiniteHemiring, e: Option<usize>) -> Result<VerifyReport> {
    let mut rep = VerifyReport::new(id, r);
    let semiring = r.identity().is_some();
    let bm = rad(r, RadicalKind::BM)?;
    let mut js: Option<Subset> = None;
    let mut applied = false;
    for e in idempotents_to_check(r, e) {
        let c = corner(r, e)?;
        let label = r.label(e).to_string();
        if semiring && bm.is_zero() {
            applied = true;
            let zero = rad(&c.hemiring, RadicalKind::BM)?.is_zero();
            rep.detail(format!("BM(eRe) = 0 at {label}"), yes(zero));
            rep.require(zero, format!("eRe is BM-semisimple for e = {label}"));
        }
        if c.is_full {
            applied = true;
            let lhs = c.push(&rad(&c.hemiring, RadicalKind::BM)?, r.len());
            let rhs = corner_image(r, e, &bm);
            rep.detail(format!("BM(eRe) at {label}"), show(r, &lhs))
                .detail(format!("eBM(R)e at {label}"), show(r, &rhs));
            rep.require(lhs == rhs, format!("R_BM(eRe) = eR_BM(R)e for e = {label}"));
            if semiring {
                let js = match &js {
                    Some(s) => s.clone(),
                    None => js.insert(rad(r, RadicalKind::Js)?).clone(),
                };
                let lhs = c.push(&rad(&c.hemiring, RadicalKind::Js)?, r.len());
                let rhs = corner_image(r, e, &js);
                rep.detail(format!("Js(eRe) at {label}"), show(r, &lhs))
                    .detail(format!("eJs(R)e at {label}"), show(r, &rhs));
                rep.require(lhs == rhs, format!("Js(eRe) = eJs(R)e for e = {label}"));
            }
        }
    }
    if !applied {
        return Ok(rep.inapplicable("no full idempotent, and R is not a BM-semisimple semiring"));
    }
    Ok(rep)
}

pub fn corner_semisimplicity(id: &str, r: &FiniteHemiring, e: Option<usize>) -> Result<VerifyReport> {
    let rep = VerifyReport::new(id, r);
    if r.identity().is_none() {
        return Ok(rep.inapplicable("R has no identity"));
    }
    let es: Vec<usize> = match e {
        Some(e) => vec![e],
        None => full_idempotents(r),
    };
    let mut rep = rep;
    let kinds = [RadicalKind::J, RadicalKind::BM, RadicalKind::Js];
    let base: Vec<bool> = kinds.iter().map(|&k| rad(r, k).map(|s| s.is_zero())).collect::<Result<_>>()?;
    let mut checked = 0;
    for e in es {
        let c = corner(r, e)?;
        if !c.is_full {
            continue;
        }
        checked += 1;
        for (&k, &z) in kinds.iter().zip(&base) {
            let cz = rad(&c.hemiring, k)?.is_zero();
            rep.require(cz == z, format!("{k}(R) = 0 <=> {k}(eRe) = 0 for e = {}", r.label(e)));
        }
    }
    if checked == 0 {
        return Ok(rep.inapplicable("no full idempotent given"));
    }
    rep.detail("corners", checked);
    for (k, z) in kinds.iter().zip(&base) {
        rep.detail(format!("{k}(R) = 0"), yes(*z));
    }
    Ok(rep)
}
