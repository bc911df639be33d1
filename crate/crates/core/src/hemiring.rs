use std::collections::HashSet;
use std::fmt;

use crate::error::{AlgebraError, Axiom, Result};
use crate::structure::{Additive, Signature};
use crate::subset::Subset;

/// Operation tables as supplied by a caller, before validation. Indices refer
/// to positions in `elements`; `zero` may be any index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawHemiring {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

/// A validated finite hemiring. The additive identity is always index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteHemiring {
    name: String,
    labels: Vec<String>,
    n: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
}

pub(crate) fn check_square(name: &str, table: &[Vec<usize>], rows: usize, cols: usize) -> Result<()> {
    if table.len() != rows {
        return Err(AlgebraError::MalformedTables(format!(
            "{name} table has {} rows, expected {rows}",
            table.len()
        )));
    }
    for (i, row) in table.iter().enumerate() {
        if row.len() != cols {
            return Err(AlgebraError::MalformedTables(format!(
                "{name} table row {i} has {} entries, expected {cols}",
                row.len()
            )));
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= cols) {
            return Err(AlgebraError::MalformedTables(format!(
                "{name} table row {i} refers to element {bad} outside the carrier"
            )));
        }
    }
    Ok(())
}

pub(crate) fn check_labels(labels: &[String], zero: usize) -> Result<()> {
    if labels.is_empty() {
        return Err(AlgebraError::MalformedTables("carrier is empty".into()));
    }
    let mut seen = HashSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(AlgebraError::MalformedTables(format!("duplicate element label {l:?}")));
        }
    }
    if zero >= labels.len() {
        return Err(AlgebraError::MalformedTables(format!("zero index {zero} outside carrier")));
    }
    Ok(())
}

/// Permutation that swaps `zero` into position 0; an involution.
pub(crate) fn zero_first(n: usize, zero: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.swap(0, zero);
    p
}

impl FiniteHemiring {
    /// Checks shape, then every instance of every hemiring axiom.
    pub fn validate(raw: RawHemiring) -> Result<Self> {
        let n = raw.elements.len();
        check_labels(&raw.elements, raw.zero)?;
        check_square("addition", &raw.add, n, n)?;
        check_square("multiplication", &raw.mul, n, n)?;

        let p = zero_first(n, raw.zero);
        let labels: Vec<String> = p.iter().map(|&i| raw.elements[i].clone()).collect();
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = p[raw.add[p[a]][p[b]]];
                mul[a * n + b] = p[raw.mul[p[a]][p[b]]];
            }
        }
        let r = FiniteHemiring {
            name: raw.name,
            labels,
            n,
            add,
            mul,
        };
        r.check_axioms()?;
        Ok(r)
    }

    /// Builds and validates from index functions; zero is index 0.
    pub fn from_fn(
        name: impl Into<String>,
        labels: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        let table = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
            (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
        };
        FiniteHemiring::validate(RawHemiring {
            name: name.into(),
            elements: labels,
            zero: 0,
            add: table(&add),
            mul: table(&mul),
        })
    }

    /// Assembles tables that are valid by construction. Zero must be index 0.
    pub(crate) fn assemble(name: String, labels: Vec<String>, add: Vec<usize>, mul: Vec<usize>) -> Self {
        let n = labels.len();
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(mul.len(), n * n);
        FiniteHemiring {
            name,
            labels,
            n,
            add,
            mul,
        }
    }

    fn violation(&self, axiom: Axiom, witness: &[usize]) -> AlgebraError {
        AlgebraError::AxiomViolation {
            axiom,
            witness: witness.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(self.violation(Axiom::AdditiveIdentity, &[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(self.violation(Axiom::AdditiveCommutativity, &[a, b]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                for c in 0..n {
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        return Err(self.violation(Axiom::AdditiveAssociativity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(self.violation(Axiom::MultiplicativeAssociativity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(self.violation(Axiom::LeftDistributivity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.add(a, b), c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        return Err(self.violation(Axiom::RightDistributivity, &[a, b, c]));
                    }
                }
            }
        }
        for a in 0..n {
            if self.mul(0, a) != 0 || self.mul(a, 0) != 0 {
                return Err(self.violation(Axiom::ZeroAbsorption, &[a]));
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Never true: a hemiring has at least its zero.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn subset_labels(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.add(a, b)).collect()).collect()
    }

    pub fn mul_table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn to_raw(&self) -> RawHemiring {
        RawHemiring {
            name: self.name.clone(),
            elements: self.labels.clone(),
            zero: 0,
            add: self.add_table(),
            mul: self.mul_table(),
        }
    }

    /// Two-sided multiplicative identity, if any. The one-element hemiring
    /// has identity 0.
    pub fn identity(&self) -> Option<usize> {
        (0..self.n).find(|&e| (0..self.n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    pub fn is_semiring(&self) -> bool {
        self.identity().is_some()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_idempotent_element(&self, e: usize) -> bool {
        self.mul(e, e) == e
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.is_idempotent_element(e)).collect()
    }

    pub fn is_zero_ring(&self) -> bool {
        self.n == 1
    }

    /// Applies a bijection `perm` (old index -> new index) to the carrier.
    /// `perm[0]` must be 0.
    pub fn relabel(&self, perm: &[usize]) -> FiniteHemiring {
        assert_eq!(perm.len(), self.n);
        assert_eq!(perm[0], 0, "relabeling must fix zero");
        let n = self.n;
        let mut inv = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut add = vec![0; n * n];
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = perm[self.add(inv[a], inv[b])];
                mul[a * n + b] = perm[self.mul(inv[a], inv[b])];
            }
        }
        FiniteHemiring {
            name: self.name.clone(),
            labels: (0..n).map(|i| self.labels[inv[i]].clone()).collect(),
            n,
            add,
            mul,
        }
    }

    /// The sub-hemiring carried by `subset`, with the embedding into `self`.
    /// Fails when the subset is not closed under both operations.
    pub fn restrict(&self, subset: &Subset, name: impl Into<String>) -> Result<(FiniteHemiring, Vec<usize>)> {
        if !subset.contains(0) {
            return Err(AlgebraError::InvalidInput("sub-hemiring must contain zero".into()));
        }
        let embed: Vec<usize> = subset.iter().collect();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in embed.iter().enumerate() {
            pos[x] = i;
        }
        let m = embed.len();
        let mut add = vec![0; m * m];
        let mut mul = vec![0; m * m];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                let s = pos[self.add(a, b)];
                let p = pos[self.mul(a, b)];
                if s == usize::MAX || p == usize::MAX {
                    return Err(AlgebraError::InvalidInput(
                        "subset is not closed under the hemiring operations".into(),
                    ));
                }
                add[i * m + j] = s;
                mul[i * m + j] = p;
            }
        }
        let labels = embed.iter().map(|&x| self.labels[x].clone()).collect();
        Ok((FiniteHemiring::assemble(name.into(), labels, add, mul), embed))
    }

    pub fn parse_subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = Subset::empty(self.n);
        for l in labels {
            let l = l.as_ref();
            let i = self
                .index_of(l)
                .ok_or_else(|| AlgebraError::InvalidInput(format!("unknown element label {l:?}")))?;
            s.insert(i);
        }
        Ok(s)
    }
}

impl Additive for FiniteHemiring {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn plus(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

impl Signature for FiniteHemiring {
    fn translation_count(&self) -> usize {
        2 * self.n
    }

    #[inline]
    fn translate(&self, k: usize, x: usize) -> usize {
        if k < self.n {
            self.mul(k, x)
        } else {
            self.mul(x, k - self.n)
        }
    }
}

impl fmt::Debug for FiniteHemiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteHemiring({}, {} elements)", self.name, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t3_raw() -> RawHemiring {
        let f = |a: usize, b: usize| (a + b).min(2);
        let g = |a: usize, b: usize| (a * b).min(2);
        RawHemiring {
            name: "T3".into(),
            elements: vec!["0".into(), "1".into(), "2".into()],
            zero: 0,
            add: (0..3).map(|a| (0..3).map(|b| f(a, b)).collect()).collect(),
            mul: (0..3).map(|a| (0..3).map(|b| g(a, b)).collect()).collect(),
        }
    }

    #[test]
    fn t3_validates_and_corruption_reports_distributivity() {
        assert!(FiniteHemiring::validate(t3_raw()).is_ok());
        let mut raw = t3_raw();
        raw.mul[2][2] = 1;
        let err = FiniteHemiring::validate(raw).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::AxiomViolation {
                axiom: Axiom::LeftDistributivity,
                witness: vec!["2".into(), "1".into(), "1".into()],
            }
        );
    }

    #[test]
    fn zero_is_moved_to_front() {
        let raw = RawHemiring {
            name: "B".into(),
            elements: vec!["1".into(), "0".into()],
            zero: 1,
            add: vec![vec![0, 0], vec![0, 1]],
            mul: vec![vec![0, 1], vec![1, 1]],
        };
        let b = FiniteHemiring::validate(raw).unwrap();
        assert_eq!(b.labels(), &["0".to_string(), "1".to_string()]);
        assert_eq!(b.add(1, 1), 1);
        assert_eq!(b.identity(), Some(1));
    }

    #[test]
    fn malformed_tables() {
        let mut raw = t3_raw();
        raw.add[1].push(0);
        assert!(matches!(FiniteHemiring::validate(raw), Err(AlgebraError::MalformedTables(_))));
        let mut raw = t3_raw();
        raw.mul[1][1] = 7;
        assert!(matches!(FiniteHemiring::validate(raw), Err(AlgebraError::MalformedTables(_))));
        let mut raw = t3_raw();
        raw.elements[2] = "1".into();
        assert!(matches!(FiniteHemiring::validate(raw), Err(AlgebraError::MalformedTables(_))));
    }

    #[test]
    fn one_element_is_valid() {
        let z = FiniteHemiring::from_fn("ZERO", vec!["0".into()], |_, _| 0, |_, _| 0).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(z.identity(), Some(0));
    }
}
