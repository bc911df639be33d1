//! Isomorphism tests and canonical forms for finite structures given by
//! operation tables. Every isomorphism fixes index 0.

use std::collections::BTreeMap;

use crate::error::{limit, Result};
use crate::hemiring::FiniteHemiring;
use crate::monoid::FiniteMonoid;

/// Upper bound on class-respecting permutations tried by `canonical_form`.
pub const MAX_CANONICAL_PERMUTATIONS: u64 = 3_628_800;

/// Tables of a structure: binary operations (row-major `n*n`) and unary
/// operations (length `n`). Unary operation `k` of one view is matched with
/// unary operation `k` of the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoView {
    pub n: usize,
    pub binary: Vec<Vec<usize>>,
    pub unary: Vec<Vec<usize>>,
}

impl IsoView {
    pub fn hemiring(r: &FiniteHemiring) -> Self {
        let n = r.len();
        let add = (0..n * n).map(|k| r.add(k / n, k % n)).collect();
        let mul = (0..n * n).map(|k| r.mul(k / n, k % n)).collect();
        IsoView {
            n,
            binary: vec![add, mul],
            unary: vec![],
        }
    }

    pub fn monoid(m: &FiniteMonoid) -> Self {
        let n = m.len();
        IsoView {
            n,
            binary: vec![(0..n * n).map(|k| m.add(k / n, k % n)).collect()],
            unary: vec![],
        }
    }

    #[inline]
    fn bin(&self, t: usize, a: usize, b: usize) -> usize {
        self.binary[t][a * self.n + b]
    }

    fn compatible_shape(&self, other: &IsoView) -> bool {
        self.n == other.n && self.binary.len() == other.binary.len() && self.unary.len() == other.unary.len()
    }
}

type Sig = Vec<usize>;

fn initial_signature(v: &IsoView, x: usize) -> Sig {
    let n = v.n;
    let mut s = vec![usize::from(x != 0)];
    for t in 0..v.binary.len() {
        let row = |y| v.bin(t, x, y);
        let col = |y| v.bin(t, y, x);
        s.push(usize::from(row(x) == x));
        s.push((0..n).filter(|&y| row(y) == x).count());
        s.push((0..n).filter(|&y| col(y) == x).count());
        s.push((0..n).filter(|&y| row(y) == y).count());
        s.push((0..n).filter(|&y| col(y) == y).count());
        s.push((0..n).filter(|&y| row(y) == 0).count());
        s.push((0..n).filter(|&y| col(y) == 0).count());
        s.push((0..n).filter(|&y| row(y) == col(y)).count());
        s.push(v.binary[t].iter().filter(|&&z| z == x).count());
    }
    for u in &v.unary {
        s.push(usize::from(u[x] == x));
        s.push(usize::from(u[x] == 0));
        s.push(u.iter().filter(|&&z| z == x).count());
    }
    s
}

fn refined_signature(v: &IsoView, ids: &[usize], x: usize) -> Sig {
    let n = v.n;
    let mut s = vec![ids[x]];
    for t in 0..v.binary.len() {
        let mut row: Vec<(usize, usize, usize)> =
            (0..n).map(|y| (ids[y], ids[v.bin(t, x, y)], ids[v.bin(t, y, x)])).collect();
        row.sort_unstable();
        for (a, b, c) in row {
            s.extend([a, b, c]);
        }
    }
    for u in &v.unary {
        s.push(ids[u[x]]);
        let mut pre: Vec<usize> = (0..n).filter(|&y| u[y] == x).map(|y| ids[y]).collect();
        pre.sort_unstable();
        s.push(usize::MAX);
        s.extend(pre);
    }
    s
}

/// Jointly refined invariant classes for several views: equal ids across
/// views mean equal invariants. Ids are ordered by signature, so zero's
/// class is id 0.
pub fn invariant_classes(views: &[&IsoView]) -> Vec<Vec<usize>> {
    let assign = |sigs: Vec<Vec<Sig>>| -> Vec<Vec<usize>> {
        let mut all: BTreeMap<&Sig, usize> = BTreeMap::new();
        for vs in &sigs {
            for s in vs {
                all.insert(s, 0);
            }
        }
        for (i, (_, id)) in all.iter_mut().enumerate() {
            *id = i;
        }
        sigs.iter().map(|vs| vs.iter().map(|s| all[s]).collect()).collect()
    };
    let mut ids = assign(views.iter().map(|v| (0..v.n).map(|x| initial_signature(v, x)).collect()).collect());
    let count = |ids: &Vec<Vec<usize>>| {
        let mut all: Vec<usize> = ids.iter().flatten().copied().collect();
        all.sort_unstable();
        all.dedup();
        all.len()
    };
    let max_rounds = views.iter().map(|v| v.n).max().unwrap_or(0);
    for _ in 0..max_rounds {
        let before = count(&ids);
        let next = assign(
            views
                .iter()
                .zip(&ids)
                .map(|(v, id)| (0..v.n).map(|x| refined_signature(v, id, x)).collect())
                .collect(),
        );
        let after = count(&next);
        ids = next;
        if after == before {
            break;
        }
    }
    ids
}

struct Matcher<'a> {
    a: &'a IsoView,
    b: &'a IsoView,
    fwd: Vec<usize>,
    bwd: Vec<usize>,
    order: Vec<usize>,
    cls_a: Vec<usize>,
    cls_b: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl Matcher<'_> {
    fn consistent(&self, placed: &[usize]) -> bool {
        let x = *placed.last().unwrap();
        let (a, b) = (self.a, self.b);
        let ok = |src: usize, dst: usize| {
            let f = self.fwd[src];
            let g = self.bwd[dst];
            (f == UNSET || f == dst) && (g == UNSET || g == src)
        };
        for t in 0..a.binary.len() {
            for &u in placed {
                let (fx, fu) = (self.fwd[x], self.fwd[u]);
                if !ok(a.bin(t, x, u), b.bin(t, fx, fu)) || !ok(a.bin(t, u, x), b.bin(t, fu, fx)) {
                    return false;
                }
            }
        }
        for k in 0..a.unary.len() {
            if !ok(a.unary[k][x], b.unary[k][self.fwd[x]]) {
                return false;
            }
            // preimages: if u maps into x under op k, then f(u) must map into f(x)
            for &u in placed {
                if (a.unary[k][u] == x) != (b.unary[k][self.fwd[u]] == self.fwd[x]) {
                    return false;
                }
            }
        }
        true
    }

    fn is_isomorphism(&self) -> bool {
        let (a, b, f) = (self.a, self.b, &self.fwd);
        let n = a.n;
        (0..a.binary.len()).all(|t| (0..n).all(|x| (0..n).all(|y| f[a.bin(t, x, y)] == b.bin(t, f[x], f[y]))))
            && (0..a.unary.len()).all(|k| (0..n).all(|x| f[a.unary[k][x]] == b.unary[k][f[x]]))
    }

    fn search(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.is_isomorphism();
        }
        let x = self.order[depth];
        for y in 0..self.b.n {
            if self.bwd[y] != UNSET || self.cls_b[y] != self.cls_a[x] {
                continue;
            }
            self.fwd[x] = y;
            self.bwd[y] = x;
            if self.consistent(&self.order[..=depth]) && self.search(depth + 1) {
                return true;
            }
            self.fwd[x] = UNSET;
            self.bwd[y] = UNSET;
        }
        false
    }
}

/// A bijection `f` (index of `a` -> index of `b`) fixing 0 and preserving
/// every table, if one exists.
pub fn find_isomorphism(a: &IsoView, b: &IsoView) -> Option<Vec<usize>> {
    if !a.compatible_shape(b) {
        return None;
    }
    let cls = invariant_classes(&[a, b]);
    let (cls_a, cls_b) = (cls[0].clone(), cls[1].clone());
    let mut ha = cls_a.clone();
    let mut hb = cls_b.clone();
    ha.sort_unstable();
    hb.sort_unstable();
    if ha != hb || cls_a[0] != cls_b[0] {
        return None;
    }
    let mut size = BTreeMap::new();
    for &c in &cls_a {
        *size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (1..a.n).collect();
    order.sort_by_key(|&x| (size[&cls_a[x]], cls_a[x], x));
    let mut m = Matcher {
        a,
        b,
        fwd: vec![UNSET; a.n],
        bwd: vec![UNSET; b.n],
        order: std::iter::once(0).chain(order).collect(),
        cls_a,
        cls_b,
    };
    m.search(0).then_some(m.fwd)
}

pub fn are_isomorphic_views(a: &IsoView, b: &IsoView) -> bool {
    find_isomorphism(a, b).is_some()
}

pub fn are_isomorphic(a: &FiniteHemiring, b: &FiniteHemiring) -> bool {
    are_isomorphic_views(&IsoView::hemiring(a), &IsoView::hemiring(b))
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = items.to_vec();
    fn rec(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == cur.len() {
            out.push(cur.clone());
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(k + 1, cur, out);
            cur.swap(k, i);
        }
    }
    rec(0, &mut cur, &mut out);
    out
}

fn encode(v: &IsoView, order: &[usize], pos: &[usize]) -> Vec<usize> {
    let n = v.n;
    let mut e = Vec::with_capacity(3 + v.binary.len() * n * n + v.unary.len() * n);
    e.extend([n, v.binary.len(), v.unary.len()]);
    for t in 0..v.binary.len() {
        for &a in order {
            for &b in order {
                e.push(pos[v.bin(t, a, b)]);
            }
        }
    }
    for u in &v.unary {
        for &a in order {
            e.push(pos[u[a]]);
        }
    }
    e
}

/// Canonical encoding and the permutation achieving it (`order[new] = old`).
///
/// Elements are placed in blocks by refined invariant class; within blocks
/// every arrangement is tried and the lexicographically least table
/// encoding wins.
pub fn canonical_form_with_order(v: &IsoView) -> Result<(Vec<usize>, Vec<usize>)> {
    let ids = invariant_classes(&[v]).remove(0);
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..v.n {
        classes.entry(ids[x]).or_default().push(x);
    }
    let mut total: u64 = 1;
    for members in classes.values() {
        for k in 2..=members.len() as u64 {
            total = total.saturating_mul(k);
        }
    }
    if total > MAX_CANONICAL_PERMUTATIONS {
        return Err(limit("canonical-form permutations", MAX_CANONICAL_PERMUTATIONS));
    }
    let choices: Vec<Vec<Vec<usize>>> = classes.values().map(|m| permutations(m)).collect();
    let mut idx = vec![0usize; choices.len()];
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut pos = vec![0; v.n];
    loop {
        let order: Vec<usize> = choices.iter().zip(&idx).flat_map(|(c, &i)| c[i].iter().copied()).collect();
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let code = encode(v, &order, &pos);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            best = Some((code, order));
        }
        // odometer
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Ok(best.unwrap());
            }
            idx[k] += 1;
            if idx[k] < choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

pub fn canonical_form_view(v: &IsoView) -> Result<Vec<usize>> {
    Ok(canonical_form_with_order(v)?.0)
}

pub fn canonical_form(r: &FiniteHemiring) -> Result<Vec<usize>> {
    canonical_form_view(&IsoView::hemiring(r))
}

/// `r` relabelled into its canonical arrangement.
pub fn canonical_hemiring(r: &FiniteHemiring) -> Result<(Vec<usize>, FiniteHemiring)> {
    let (code, order) = canonical_form_with_order(&IsoView::hemiring(r))?;
    let mut perm = vec![0; r.len()];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    Ok((code, r.relabel(&perm)))
}
