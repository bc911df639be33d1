//! Isomorph-free generation of small hemirings and commutative monoids.
//!
//! Addition tables are generated first, one per isomorphism class of
//! commutative monoids. Multiplication tables are then filled cell by cell,
//! rejecting a partial table as soon as a fully assigned instance of
//! associativity or distributivity fails. Survivors are deduplicated by
//! canonical form.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::classify::{classify, flag_by_name, PREDICATE_NAMES};
use crate::error::{limit, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::iso::{canonical_form_view, canonical_hemiring, IsoView};
use crate::limits::MAX_ENUMERATION_ORDER;
use crate::monoid::FiniteMonoid;

const LETTERS: [&str; 4] = ["0", "a", "b", "c"];

fn element_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| LETTERS.get(i).map_or_else(|| format!("e{i}"), |s| s.to_string()))
        .collect()
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        return Err(AlgebraError::InvalidInput("order must be positive".into()));
    }
    if order > MAX_ENUMERATION_ORDER {
        return Err(limit("enumeration order", MAX_ENUMERATION_ORDER as u64));
    }
    Ok(())
}

/// Every commutative monoid table on `0..n` with identity 0, row-major.
pub fn monoid_tables(n: usize) -> Vec<Vec<usize>> {
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let mut table = vec![0; n * n];
    for a in 0..n {
        table[a] = a;
        table[a * n] = a;
    }
    let mut out = Vec::new();
    fn rec(n: usize, cells: &[(usize, usize)], i: usize, t: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cells.len() {
            let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]])));
            if assoc {
                out.push(t.clone());
            }
            return;
        }
        let (a, b) = cells[i];
        for v in 0..n {
            t[a * n + b] = v;
            t[b * n + a] = v;
            rec(n, cells, i + 1, t, out);
        }
    }
    rec(n, &cells, 0, &mut table, &mut out);
    out
}

fn monoid_view(n: usize, add: &[usize]) -> IsoView {
    IsoView {
        n,
        binary: vec![add.to_vec()],
        unary: vec![],
    }
}

/// One addition table per isomorphism class, sorted by canonical code.
fn monoid_representatives(n: usize) -> Result<Vec<Vec<usize>>> {
    let mut reps: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for t in monoid_tables(n) {
        let code = canonical_form_view(&monoid_view(n, &t))?;
        reps.entry(code).or_insert(t);
    }
    Ok(reps.into_values().collect())
}

/// Commutative monoids of the given order up to isomorphism; with
/// `semilattices_only`, just the idempotent ones.
pub fn enumerate_monoids(order: usize, semilattices_only: bool) -> Result<Vec<FiniteMonoid>> {
    check_order(order)?;
    let labels = element_labels(order);
    let mut out = Vec::new();
    for t in monoid_representatives(order)? {
        let m = FiniteMonoid::from_fn(format!("C{order}_{}", out.len()), labels.clone(), |a, b| t[a * order + b])?;
        if !semilattices_only || m.is_semilattice() {
            out.push(m);
        }
    }
    for (i, m) in out.iter_mut().enumerate() {
        *m = FiniteMonoid::from_fn(format!("C{order}_{i}"), labels.clone(), |a, b| m.add(a, b))?;
    }
    Ok(out)
}

/// Multiplication tables compatible with `add`, with row and column 0 zero.
fn multiplications(n: usize, add: &[usize]) -> Vec<Vec<usize>> {
    let cells: Vec<usize> = (1..n).flat_map(|a| (1..n).map(move |b| a * n + b)).collect();
    let mut mul = vec![0; n * n];
    let mut known = vec![false; n * n];
    for a in 0..n {
        known[a] = true;
        known[a * n] = true;
    }
    let mut out = Vec::new();
    fn consistent(n: usize, add: &[usize], mul: &[usize], known: &[bool]) -> bool {
        let m = |a: usize, b: usize| (known[a * n + b]).then(|| mul[a * n + b]);
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let bc = add[b * n + c];
                    if let (Some(x), Some(y), Some(z)) = (m(a, bc), m(a, b), m(a, c)) {
                        if x != add[y * n + z] {
                            return false;
                        }
                    }
                    if let (Some(x), Some(y), Some(z)) = (m(bc, a), m(b, a), m(c, a)) {
                        if x != add[y * n + z] {
                            return false;
                        }
                    }
                    if let (Some(ab), Some(bc)) = (m(a, b), m(b, c)) {
                        if let (Some(l), Some(r)) = (m(ab, c), m(a, bc)) {
                            if l != r {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
    fn rec(
        n: usize,
        add: &[usize],
        cells: &[usize],
        i: usize,
        mul: &mut Vec<usize>,
        known: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == cells.len() {
            out.push(mul.clone());
            return;
        }
        let c = cells[i];
        known[c] = true;
        for v in 0..n {
            mul[c] = v;
            if consistent(n, add, mul, known) {
                rec(n, add, cells, i + 1, mul, known, out);
            }
        }
        known[c] = false;
        mul[c] = 0;
    }
    rec(n, add, &cells, 0, &mut mul, &mut known, &mut out);
    out
}

/// The isomorphism classes produced by [`enumerate_hemirings`], in
/// canonical order.
#[derive(Debug)]
pub struct IsoClassStream {
    pub order: usize,
    pub predicates: Vec<String>,
    classes: std::vec::IntoIter<FiniteHemiring>,
}

impl Iterator for IsoClassStream {
    type Item = FiniteHemiring;

    fn next(&mut self) -> Option<FiniteHemiring> {
        self.classes.next()
    }
}

impl ExactSizeIterator for IsoClassStream {}

impl IsoClassStream {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.len() == 0
    }
}

/// All hemirings of the given order up to isomorphism, named `H{order}_{k}`
/// in canonical order, then filtered by classification predicates. The
/// numbering does not depend on the predicates.
pub fn enumerate_hemirings<S: AsRef<str>>(order: usize, predicates: &[S]) -> Result<IsoClassStream> {
    check_order(order)?;
    let predicates: Vec<String> = predicates.iter().map(|p| p.as_ref().to_string()).collect();
    for p in &predicates {
        if !PREDICATE_NAMES.contains(&p.as_str()) {
            return Err(AlgebraError::InvalidInput(format!("unknown predicate `{p}`")));
        }
    }
    let n = order;
    let labels = element_labels(n);
    let found: Vec<(Vec<usize>, FiniteHemiring)> = monoid_representatives(n)?
        .into_par_iter()
        .map(|add| {
            multiplications(n, &add)
                .into_iter()
                .map(|mul| {
                    let h = FiniteHemiring::assemble(String::new(), labels.clone(), add.clone(), mul);
                    canonical_hemiring(&h)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let unique: BTreeMap<Vec<usize>, FiniteHemiring> = found.into_iter().collect();
    let mut classes = Vec::new();
    for (k, h) in unique.into_values().enumerate() {
        let h = FiniteHemiring::assemble(format!("H{order}_{k}"), labels.clone(), flat(&h.add_table()), flat(&h.mul_table()));
        debug_assert!(FiniteHemiring::validate(h.to_raw()).is_ok());
        if !predicates.is_empty() {
            let flags = classify(&h)?;
            if !predicates.iter().all(|p| flag_by_name(&flags, p) == Some(true)) {
                continue;
            }
        }
        classes.push(h);
    }
    Ok(IsoClassStream {
        order,
        predicates,
        classes: classes.into_iter(),
    })
}

fn flat(t: &[Vec<usize>]) -> Vec<usize> {
    t.iter().flatten().copied().collect()
}

/// Every hemiring of order `1..=max_order`, in order.
pub fn all_hemirings_up_to(max_order: usize) -> Result<Vec<FiniteHemiring>> {
    let mut out = Vec::new();
    for order in 1..=max_order {
        out.extend(enumerate_hemirings::<&str>(order, &[])?);
    }
    Ok(out)
}
