use crate::error::{limit, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::limits::Limits;
use crate::subset::Subset;

/// Row-major entries as a base-`q` integer, first entry most significant.
pub fn encode_matrix(q: usize, entries: &[usize]) -> usize {
    entries.iter().fold(0, |acc, &e| acc * q + e)
}

pub fn decode_matrix(q: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut e = vec![0; n * n];
    for slot in e.iter_mut().rev() {
        *slot = index % q;
        index /= q;
    }
    e
}

fn carrier_size(q: usize, n: usize) -> Result<usize> {
    let cap = Limits::current().max_carrier;
    let size = (q as u64).checked_pow((n * n) as u32).filter(|&s| s <= cap);
    size.map(|s| s as usize).ok_or_else(|| limit("carrier size", cap))
}

/// `M_n(R)` with entrywise addition and the usual matrix product.
pub fn matrix_hemiring(r: &FiniteHemiring, n: usize) -> Result<FiniteHemiring> {
    if n == 0 {
        return Err(AlgebraError::InvalidInput("matrix size must be positive".into()));
    }
    let q = r.len();
    let size = carrier_size(q, n)?;
    let mats: Vec<Vec<usize>> = (0..size).map(|i| decode_matrix(q, n, i)).collect();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    let mut buf = vec![0; n * n];
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            for k in 0..n * n {
                buf[k] = r.add(a[k], b[k]);
            }
            add[i * size + j] = encode_matrix(q, &buf);
            for row in 0..n {
                for col in 0..n {
                    let mut acc = 0;
                    for k in 0..n {
                        acc = r.add(acc, r.mul(a[row * n + k], b[k * n + col]));
                    }
                    buf[row * n + col] = acc;
                }
            }
            mul[i * size + j] = encode_matrix(q, &buf);
        }
    }
    let labels = mats
        .iter()
        .map(|m| {
            let rows: Vec<String> = m
                .chunks(n)
                .map(|row| row.iter().map(|&e| r.label(e)).collect::<Vec<_>>().join(","))
                .collect();
            format!("[{}]", rows.join(";"))
        })
        .collect();
    Ok(FiniteHemiring::assemble(format!("M{n}({})", r.name()), labels, add, mul))
}

/// Index of the matrix unit `E_ij` in `M_n(R)`; needs an identity in `R`.
pub fn matrix_unit(r: &FiniteHemiring, n: usize, i: usize, j: usize) -> Result<usize> {
    let one = r.identity().ok_or(AlgebraError::NoIdentity)?;
    if i >= n || j >= n {
        return Err(AlgebraError::InvalidInput(format!("matrix unit E{}{} outside {n}x{n}", i + 1, j + 1)));
    }
    let mut e = vec![0; n * n];
    e[i * n + j] = one;
    Ok(encode_matrix(r.len(), &e))
}

/// `M_n(S)`: matrices with every entry in `S`, as a subset of `M_n(R)`.
pub fn matrix_subset(r: &FiniteHemiring, n: usize, s: &Subset) -> Result<Subset> {
    let q = r.len();
    let size = carrier_size(q, n)?;
    Ok(Subset::from_indices(size, (0..size).filter(|&i| decode_matrix(q, n, i).iter().all(|&e| s.contains(e)))))
}
