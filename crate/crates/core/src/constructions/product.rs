use crate::error::{limit, AlgebraError, Result};
use crate::hemiring::FiniteHemiring;
use crate::limits::Limits;

/// Componentwise product with its projections. Elements are mixed-radix
/// tuples, first factor most significant.
pub fn direct_product(factors: &[&FiniteHemiring]) -> Result<(FiniteHemiring, Vec<Vec<usize>>)> {
    if factors.is_empty() {
        return Err(AlgebraError::InvalidInput("direct product of an empty list".into()));
    }
    let cap = Limits::current().max_carrier;
    let mut size: u64 = 1;
    for f in factors {
        size = size.saturating_mul(f.len() as u64);
    }
    if size > cap {
        return Err(limit("carrier size", cap));
    }
    let size = size as usize;
    let radix: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let decode = |mut x: usize| {
        let mut t = vec![0; radix.len()];
        for k in (0..radix.len()).rev() {
            t[k] = x % radix[k];
            x /= radix[k];
        }
        t
    };
    let encode = |t: &[usize]| t.iter().zip(&radix).fold(0, |acc, (&v, &q)| acc * q + v);
    let tuples: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut add = vec![0; size * size];
    let mut mul = vec![0; size * size];
    let mut buf = vec![0; radix.len()];
    for (i, a) in tuples.iter().enumerate() {
        for (j, b) in tuples.iter().enumerate() {
            for k in 0..radix.len() {
                buf[k] = factors[k].add(a[k], b[k]);
            }
            add[i * size + j] = encode(&buf);
            for k in 0..radix.len() {
                buf[k] = factors[k].mul(a[k], b[k]);
            }
            mul[i * size + j] = encode(&buf);
        }
    }
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().enumerate().map(|(k, &v)| factors[k].label(v)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let name = factors.iter().map(|f| f.name()).collect::<Vec<_>>().join("x");
    let projections = (0..radix.len()).map(|k| tuples.iter().map(|t| t[k]).collect()).collect();
    Ok((FiniteHemiring::assemble(name, labels, add, mul), projections))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::congruence::{hom_check, HemiringMap};
    use crate::iso::are_isomorphic;

    #[test]
    fn boolean_times_z2() {
        let b = catalog::boolean();
        let z2 = catalog::integers_mod(2);
        let (p, projections) = direct_product(&[&b, &z2]).unwrap();
        assert!(are_isomorphic(&p, &catalog::boolean_times_z2()));
        for (f, target) in projections.iter().zip([&b, &z2]) {
            let rep = hom_check(&HemiringMap::new(&p, target, f.clone()));
            assert!(rep.is_hom && rep.surjective);
        }
        assert!(direct_product(&[]).is_err());
    }
}
