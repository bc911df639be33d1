use std::collections::HashSet;

use crate::congruence::UnionFind;
use crate::hemiring::FiniteHemiring;
use crate::structure::Additive;

/// Ring of differences `D(R) = (R x R)/W` with the canonical map `ξ`.
#[derive(Clone, Debug)]
pub struct Differences {
    pub ring: FiniteHemiring,
    /// `ξ(x)` = class of `(x, 0)`.
    pub xi: Vec<usize>,
    /// Class of the pair `(a, b)` at index `a * n + b`.
    pub class_of_pair: Vec<usize>,
    /// A representative pair per class.
    pub reps: Vec<(usize, usize)>,
}

/// Classes of `X x X` under the Bourne congruence of the diagonal: the
/// equivalence generated by `(a, b) ~ (a + w, b + w)`. Class 0 holds
/// `(0, 0)`; classes are numbered by least pair index.
pub fn difference_classes<A: Additive>(x: &A) -> (Vec<usize>, Vec<(usize, usize)>) {
    let n = x.size();
    let mut uf = UnionFind::new(n * n);
    for a in 0..n {
        for b in 0..n {
            for w in 1..n {
                uf.union(a * n + b, x.plus(a, w) * n + x.plus(b, w));
            }
        }
    }
    let idx = uf.into_partition().block_indices();
    let classes = idx.iter().max().map_or(0, |m| m + 1);
    let mut reps = vec![(usize::MAX, 0); classes];
    for (p, &c) in idx.iter().enumerate() {
        if reps[c].0 == usize::MAX {
            reps[c] = (p / n, p % n);
        }
    }
    (idx, reps)
}

/// Labels for difference classes: `x` for the class of `(x, 0)`, `-x` for
/// the class of `(0, x)`, otherwise the representative pair.
pub fn difference_labels(labels: &[String], class_of_pair: &[usize], reps: &[(usize, usize)]) -> Vec<String> {
    let n = labels.len();
    let k = reps.len();
    let mut out: Vec<Option<String>> = vec![None; k];
    for x in 0..n {
        let c = class_of_pair[x * n];
        if out[c].is_none() {
            out[c] = Some(labels[x].clone());
        }
    }
    for x in 0..n {
        let c = class_of_pair[x];
        if out[c].is_none() {
            out[c] = Some(format!("-{}", labels[x]));
        }
    }
    let mut out: Vec<String> = out
        .into_iter()
        .enumerate()
        .map(|(c, l)| l.unwrap_or_else(|| format!("({},{})", labels[reps[c].0], labels[reps[c].1])))
        .collect();
    let mut seen = HashSet::new();
    if !out.iter().all(|l| seen.insert(l.clone())) {
        for (c, l) in out.iter_mut().enumerate() {
            *l = format!("d{c}");
        }
    }
    out
}

/// `D(R)` with `(a,b) + (c,d) = (a+c, b+d)` and `(a,b)(c,d) = (ac+bd, ad+bc)`.
pub fn differences(r: &FiniteHemiring) -> Differences {
    let n = r.len();
    let (class_of_pair, reps) = difference_classes(r);
    let k = reps.len();
    let cls = |a: usize, b: usize| class_of_pair[a * n + b];
    let mut add = vec![0; k * k];
    let mut mul = vec![0; k * k];
    for (i, &(a, b)) in reps.iter().enumerate() {
        for (j, &(c, d)) in reps.iter().enumerate() {
            add[i * k + j] = cls(r.add(a, c), r.add(b, d));
            mul[i * k + j] = cls(r.add(r.mul(a, c), r.mul(b, d)), r.add(r.mul(a, d), r.mul(b, c)));
        }
    }
    let labels = difference_labels(r.labels(), &class_of_pair, &reps);
    let xi = (0..n).map(|x| cls(x, 0)).collect();
    Differences {
        ring: FiniteHemiring::assemble(format!("D({})", r.name()), labels, add, mul),
        xi,
        class_of_pair,
        reps,
    }
}
