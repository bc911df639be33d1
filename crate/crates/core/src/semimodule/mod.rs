//! Finite left semimodules over finite hemirings.

mod enumerate;
mod report;

use std::fmt;
use std::sync::Arc;

pub use enumerate::{
    brute_force_semimodules, cyclic_semimodules, enumerate_irreducible_semimodules, enumerate_simple_semimodules,
    pull_back,
};
pub use report::{
    annihilator, is_irreducible, is_semi_irreducible, is_simple, is_w_finitely_generated, is_w_finitely_generated_bounded,
    semimodule_report, subsemimodule, SemimoduleReport,
};

use crate::congruence::{is_compatible, Partition};
use crate::constructions::difference_classes;
use crate::error::{AlgebraError, Axiom, Result};
use crate::hemiring::{check_labels, check_square, zero_first, FiniteHemiring};
use crate::iso::{find_isomorphism, IsoView};
use crate::structure::{Additive, Signature};
use crate::subset::Subset;

/// Tables for a semimodule before validation. `action[r][m]` is `r·m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSemimodule {
    pub name: String,
    pub elements: Vec<String>,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteSemimodule {
    ring: Arc<FiniteHemiring>,
    name: String,
    labels: Vec<String>,
    n: usize,
    add: Vec<usize>,
    action: Vec<usize>,
}

impl FiniteSemimodule {
    pub fn validate(ring: Arc<FiniteHemiring>, raw: RawSemimodule) -> Result<Self> {
        let n = raw.elements.len();
        check_labels(&raw.elements, raw.zero)?;
        check_square("addition", &raw.add, n, n)?;
        check_square("action", &raw.action, ring.len(), n)?;
        let p = zero_first(n, raw.zero);
        let labels = p.iter().map(|&i| raw.elements[i].clone()).collect();
        let mut add = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = p[raw.add[p[a]][p[b]]];
            }
        }
        let mut action = vec![0; ring.len() * n];
        for r in 0..ring.len() {
            for m in 0..n {
                action[r * n + m] = p[raw.action[r][p[m]]];
            }
        }
        let m = FiniteSemimodule {
            ring,
            name: raw.name,
            labels,
            n,
            add,
            action,
        };
        m.check_axioms()?;
        Ok(m)
    }

    pub fn from_fn(
        ring: Arc<FiniteHemiring>,
        name: impl Into<String>,
        labels: Vec<String>,
        add: impl Fn(usize, usize) -> usize,
        act: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let n = labels.len();
        let add = (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect();
        let action = (0..ring.len()).map(|r| (0..n).map(|m| act(r, m)).collect()).collect();
        FiniteSemimodule::validate(ring, RawSemimodule {
            name: name.into(),
            elements: labels,
            zero: 0,
            add,
            action,
        })
    }

    pub(crate) fn assemble(
        ring: Arc<FiniteHemiring>,
        name: String,
        labels: Vec<String>,
        add: Vec<usize>,
        action: Vec<usize>,
    ) -> Self {
        let n = labels.len();
        debug_assert_eq!(add.len(), n * n);
        debug_assert_eq!(action.len(), ring.len() * n);
        FiniteSemimodule {
            ring,
            name,
            labels,
            n,
            add,
            action,
        }
    }

    /// `_R R`: the hemiring acting on itself by left multiplication.
    pub fn regular(ring: Arc<FiniteHemiring>) -> Self {
        let n = ring.len();
        let add = (0..n * n).map(|k| ring.add(k / n, k % n)).collect();
        let action = (0..n * n).map(|k| ring.mul(k / n, k % n)).collect();
        let labels = ring.labels().to_vec();
        let name = format!("{} (regular)", ring.name());
        FiniteSemimodule::assemble(ring, name, labels, add, action)
    }

    pub fn zero(ring: Arc<FiniteHemiring>) -> Self {
        let k = ring.len();
        FiniteSemimodule::assemble(ring, "0".into(), vec!["0".into()], vec![0], vec![0; k])
    }

    fn violation(&self, axiom: Axiom, scalars: &[usize], elems: &[usize]) -> AlgebraError {
        let witness = scalars
            .iter()
            .map(|&r| self.ring.label(r).to_string())
            .chain(elems.iter().map(|&m| self.labels[m].clone()))
            .collect();
        AlgebraError::AxiomViolation { axiom, witness }
    }

    fn check_axioms(&self) -> Result<()> {
        let n = self.n;
        let k = self.ring.len();
        let r = &*self.ring;
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(self.violation(Axiom::AdditiveIdentity, &[], &[a]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Err(self.violation(Axiom::AdditiveCommutativity, &[], &[a, b]));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(self.violation(Axiom::AdditiveAssociativity, &[], &[a, b, c]));
                    }
                }
            }
        }
        for s in 0..k {
            for t in 0..k {
                for m in 0..n {
                    if self.act(r.mul(s, t), m) != self.act(s, self.act(t, m)) {
                        return Err(self.violation(Axiom::ActionAssociativity, &[s, t], &[m]));
                    }
                }
            }
        }
        for s in 0..k {
            for a in 0..n {
                for b in 0..n {
                    if self.act(s, self.add(a, b)) != self.add(self.act(s, a), self.act(s, b)) {
                        return Err(self.violation(Axiom::ActionAdditiveInModule, &[s], &[a, b]));
                    }
                }
            }
        }
        for s in 0..k {
            for t in 0..k {
                for m in 0..n {
                    if self.act(r.add(s, t), m) != self.add(self.act(s, m), self.act(t, m)) {
                        return Err(self.violation(Axiom::ActionAdditiveInScalar, &[s, t], &[m]));
                    }
                }
            }
        }
        for s in 0..k {
            if self.act(s, 0) != 0 {
                return Err(self.violation(Axiom::ActionZero, &[s], &[0]));
            }
        }
        for m in 0..n {
            if self.act(0, m) != 0 {
                return Err(self.violation(Axiom::ActionZero, &[0], &[m]));
            }
        }
        Ok(())
    }

    pub fn ring(&self) -> &FiniteHemiring {
        &self.ring
    }

    pub fn ring_arc(&self) -> &Arc<FiniteHemiring> {
        &self.ring
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

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    #[inline]
    pub fn act(&self, r: usize, m: usize) -> usize {
        self.action[r * self.n + m]
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.add(a, b)).collect()).collect()
    }

    pub fn action_table(&self) -> Vec<Vec<usize>> {
        (0..self.ring.len()).map(|r| (0..self.n).map(|m| self.act(r, m)).collect()).collect()
    }

    pub fn to_raw(&self) -> RawSemimodule {
        RawSemimodule {
            name: self.name.clone(),
            elements: self.labels.clone(),
            zero: 0,
            add: self.add_table(),
            action: self.action_table(),
        }
    }

    /// `RM = 0`.
    pub fn has_trivial_action(&self) -> bool {
        self.action.iter().all(|&v| v == 0)
    }

    /// Every `1·m = m`, when `R` has an identity.
    pub fn is_unitary(&self) -> Option<bool> {
        let one = self.ring.identity()?;
        Some((0..self.n).all(|m| self.act(one, m) == m))
    }

    pub fn iso_view(&self) -> IsoView {
        let n = self.n;
        IsoView {
            n,
            binary: vec![self.add.clone()],
            unary: (0..self.ring.len()).map(|r| (0..n).map(|m| self.act(r, m)).collect()).collect(),
        }
    }

    /// Factor semimodule by a compatible partition, with the projection.
    pub fn quotient(&self, p: &Partition) -> Result<(FiniteSemimodule, Vec<usize>)> {
        if !is_compatible(self, p) {
            return Err(AlgebraError::IncompatiblePartition);
        }
        Ok(self.quotient_unchecked(p))
    }

    pub(crate) fn quotient_unchecked(&self, p: &Partition) -> (FiniteSemimodule, Vec<usize>) {
        let proj = p.block_indices();
        let reps: Vec<usize> = p.reps().collect();
        let k = reps.len();
        let mut add = vec![0; k * k];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * k + j] = proj[self.add(a, b)];
            }
        }
        let mut action = vec![0; self.ring.len() * k];
        for r in 0..self.ring.len() {
            for (i, &a) in reps.iter().enumerate() {
                action[r * k + i] = proj[self.act(r, a)];
            }
        }
        let labels = reps.iter().map(|&a| self.labels[a].clone()).collect();
        let name = format!("{}/~", self.name);
        (FiniteSemimodule::assemble(self.ring.clone(), name, labels, add, action), proj)
    }

    /// `M*` with the projection.
    pub fn star_quotient(&self) -> (FiniteSemimodule, Vec<usize>) {
        let (q, proj) = self.quotient_unchecked(&crate::constructions::star_partition(self));
        (q.with_name(format!("{}*", self.name)), proj)
    }

    /// `D(M)` as an `R`-semimodule via `r(m, m') = (rm, rm')`, with `ξ`.
    pub fn differences(&self) -> (FiniteSemimodule, Vec<usize>) {
        let n = self.n;
        let (class_of_pair, reps) = difference_classes(self);
        let k = reps.len();
        let cls = |a: usize, b: usize| class_of_pair[a * n + b];
        let mut add = vec![0; k * k];
        for (i, &(a, b)) in reps.iter().enumerate() {
            for (j, &(c, d)) in reps.iter().enumerate() {
                add[i * k + j] = cls(self.add(a, c), self.add(b, d));
            }
        }
        let mut action = vec![0; self.ring.len() * k];
        for r in 0..self.ring.len() {
            for (i, &(a, b)) in reps.iter().enumerate() {
                action[r * k + i] = cls(self.act(r, a), self.act(r, b));
            }
        }
        let labels = crate::constructions::difference_labels(&self.labels, &class_of_pair, &reps);
        let xi = (0..n).map(|x| cls(x, 0)).collect();
        (
            FiniteSemimodule::assemble(self.ring.clone(), format!("D({})", self.name), labels, add, action),
            xi,
        )
    }

    /// The additive span of `{ r m }`, i.e. `RM`.
    pub fn rm(&self) -> Subset {
        let mut seed = Subset::zero(self.n);
        for r in 0..self.ring.len() {
            for m in 0..self.n {
                seed.insert(self.act(r, m));
            }
        }
        additive_closure(self, &seed)
    }

    pub fn subset_labels(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|i| self.labels[i].clone()).collect()
    }
}

/// Closure of `seed ∪ {0}` under addition.
pub fn additive_closure<A: Additive>(a: &A, seed: &Subset) -> Subset {
    let mut set = seed.clone();
    set.insert(0);
    let mut members: Vec<usize> = set.iter().collect();
    let mut work = members.clone();
    while let Some(x) = work.pop() {
        let mut fresh = Vec::new();
        for &y in &members {
            fresh.push(a.plus(x, y));
        }
        for z in fresh {
            if set.insert(z) {
                members.push(z);
                work.push(z);
            }
        }
    }
    set
}

pub fn are_isomorphic_semimodules(a: &FiniteSemimodule, b: &FiniteSemimodule) -> bool {
    a.ring.len() == b.ring.len() && find_isomorphism(&a.iso_view(), &b.iso_view()).is_some()
}

impl Additive for FiniteSemimodule {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn plus(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

impl Signature for FiniteSemimodule {
    fn translation_count(&self) -> usize {
        self.ring.len()
    }

    #[inline]
    fn translate(&self, k: usize, x: usize) -> usize {
        self.act(k, x)
    }
}

impl fmt::Debug for FiniteSemimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteSemimodule({}, {} elements over {})", self.name, self.n, self.ring.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn constant_action_breaks_scalar_additivity() {
        let z2 = Arc::new(catalog::integers_mod(2));
        let err = FiniteSemimodule::from_fn(z2, "bad", vec!["0".into(), "1".into()], |a, b| a ^ b, |_, m| m)
            .unwrap_err();
        match err {
            AlgebraError::AxiomViolation { axiom, witness } => {
                assert_eq!(axiom, Axiom::ActionAdditiveInScalar);
                assert_eq!(witness, vec!["0", "0", "1"]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn regular_and_zero_validate() {
        let b = Arc::new(catalog::boolean());
        let reg = FiniteSemimodule::regular(b.clone());
        assert!(FiniteSemimodule::validate(b.clone(), reg.to_raw()).is_ok());
        assert!(FiniteSemimodule::validate(b.clone(), FiniteSemimodule::zero(b).to_raw()).is_ok());
    }
}
