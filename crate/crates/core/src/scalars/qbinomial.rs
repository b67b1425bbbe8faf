use super::field::Field;
use crate::error::HopfError;

/// Gaussian binomial coefficient `[n choose k]_q`.
///
/// Uses the Pascal recurrence `[n,k] = [n-1,k-1] + q^k [n-1,k]`, which never
/// divides and so stays valid when `q` is a root of unity.
pub fn qbinomial<F: Field>(n: u64, k: u64, q: &F) -> Result<F, HopfError> {
    if k > n {
        return Err(HopfError::Domain(format!("q-binomial needs k <= n, got n={n}, k={k}")));
    }
    let k = k.min(n - k) as usize;
    // row[j] = [m, j]_q for the current m
    let mut row = vec![F::zero(); k + 1];
    row[0] = F::one();
    let mut qpow = vec![F::one(); k + 1];
    for j in 1..=k {
        qpow[j] = qpow[j - 1].mul_ref(q);
    }
    for m in 1..=n as usize {
        for j in (1..=k.min(m)).rev() {
            row[j] = row[j - 1].add_ref(&qpow[j].mul_ref(&row[j]));
        }
    }
    Ok(row[k].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{Cyclotomic, Scalar};
    use num_traits::{One, Zero};

    #[test]
    fn edges_and_small_values() {
        let q = Scalar::parameter();
        assert_eq!(qbinomial(5, 0, &q).unwrap(), Scalar::one());
        assert_eq!(qbinomial(5, 5, &q).unwrap(), Scalar::one());
        let expect = Scalar::one() + q.clone() + q.mul_ref(&q);
        assert_eq!(qbinomial(3, 1, &q).unwrap(), expect);
        assert!(qbinomial(2, 3, &q).is_err());
    }

    #[test]
    fn vanishes_at_primitive_roots() {
        for d in 2..=7u64 {
            let q = Cyclotomic::zeta(d);
            for j in 1..d {
                assert!(qbinomial(d, j, &q).unwrap().is_zero(), "d={d} j={j}");
            }
        }
    }

    #[test]
    fn ordinary_binomials_at_one() {
        let one = Cyclotomic::one();
        assert_eq!(qbinomial(10, 4, &one).unwrap(), Cyclotomic::from_integer(210));
    }
}
