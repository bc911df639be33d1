use std::fmt;

use crate::error::{AlgebraError, Axiom, Result};
use crate::hemiring::{check_labels, check_square, zero_first, FiniteHemiring};
use crate::structure::Additive;

/// A finite commutative monoid written additively, identity at index 0.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    name: String,
    labels: Vec<String>,
    n: usize,
    add: Vec<usize>,
}

impl FiniteMonoid {
    pub fn validate(name: impl Into<String>, elements: Vec<String>, zero: usize, add: Vec<Vec<usize>>) -> Result<Self> {
        let n = elements.len();
        check_labels(&elements, zero)?;
        check_square("addition", &add, n, n)?;
        let p = zero_first(n, zero);
        let labels = p.iter().map(|&i| elements[i].clone()).collect();
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = p[add[p[a]][p[b]]];
            }
        }
        let m = FiniteMonoid {
            name: name.into(),
            labels,
            n,
            add: flat,
        };
        m.check_axioms()?;
        Ok(m)
    }

    pub fn from_fn(name: impl Into<String>, labels: Vec<String>, add: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let table = (0..n).map(|a| (0..n).map(|b| add(a, b)).collect()).collect();
        FiniteMonoid::validate(name, labels, 0, table)
    }

    /// Additive reduct of a hemiring.
    pub fn of_hemiring(r: &FiniteHemiring) -> Self {
        let n = r.len();
        FiniteMonoid {
            name: format!("({}, +)", r.name()),
            labels: r.labels().to_vec(),
            n,
            add: (0..n * n).map(|k| r.add(k / n, k % n)).collect(),
        }
    }

    fn violation(&self, axiom: Axiom, w: &[usize]) -> AlgebraError {
        AlgebraError::AxiomViolation {
            axiom,
            witness: w.iter().map(|&i| self.labels[i].clone()).collect(),
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
                for c in 0..n {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(self.violation(Axiom::AdditiveAssociativity, &[a, b, c]));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.n
    }

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

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.n + b]
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        (0..self.n).map(|a| (0..self.n).map(|b| self.add(a, b)).collect()).collect()
    }

    /// Idempotent addition: a join-semilattice with bottom 0.
    pub fn is_semilattice(&self) -> bool {
        self.is_idempotent()
    }

    /// Greatest lower bound in the order `a <= b` iff `a + b = b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n).filter(|&x| self.leq(x, a) && self.leq(x, b)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&x| self.leq(x, m)))
    }

    /// Semilattice with all binary meets, i.e. a lattice (finite, with bottom).
    pub fn is_lattice(&self) -> bool {
        self.is_semilattice() && (0..self.n).all(|a| (0..self.n).all(|b| self.meet(a, b).is_some()))
    }

    /// Distributivity of the lattice `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub fn is_distributive_lattice(&self) -> bool {
        if !self.is_lattice() {
            return false;
        }
        let n = self.n;
        let meet = |a, b| self.meet(a, b).unwrap();
        (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| meet(a, self.add(b, c)) == self.add(meet(a, b), meet(a, c))))
        })
    }
}

impl Additive for FiniteMonoid {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn plus(&self, a: usize, b: usize) -> usize {
        self.add(a, b)
    }
}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMonoid({}, {} elements)", self.name, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FiniteMonoid {
        FiniteMonoid::from_fn("chain", (0..n).map(|i| i.to_string()).collect(), |a, b| a.max(b)).unwrap()
    }

    #[test]
    fn chain_is_distributive() {
        let c = chain(3);
        assert!(c.is_lattice());
        assert!(c.is_distributive_lattice());
        assert_eq!(c.meet(1, 2), Some(1));
    }

    #[test]
    fn rejects_noncommutative() {
        let err = FiniteMonoid::validate("bad", vec!["0".into(), "a".into(), "b".into()], 0, vec![
            vec![0, 1, 2],
            vec![1, 1, 1],
            vec![2, 2, 2],
        ])
        .unwrap_err();
        assert!(matches!(err, AlgebraError::AxiomViolation { axiom: Axiom::AdditiveCommutativity, .. }));
    }
}
