use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// After step `k` every entry of the trailing block is a `(k+1)`-minor of the
/// input, so each division by the previous pivot is exact. Pivoting takes the
/// first nonzero entry at or below the diagonal and flips the sign per swap.
///
/// Panics if the matrix is not square.
pub fn exact_integer_determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    assert!(matrix.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut t = pivot * &row[j];
                if !factor.is_zero() && !pivot_row[j].is_zero() {
                    t -= &factor * &pivot_row[j];
                }
                if !prev.is_one() {
                    t /= &prev;
                }
                row[j] = t;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    /// Cofactor expansion along the first row over the rationals.
    fn cofactor(m: &[Vec<BigRational>]) -> BigRational {
        let n = m.len();
        if n == 0 {
            return BigRational::one();
        }
        let mut acc = BigRational::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigRational>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * cofactor(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn identity_and_repeated_rows() {
        let id: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| (i == j) as i64).collect()).collect();
        assert_eq!(exact_integer_determinant(&big(&id)), BigInt::one());
        let rep = vec![vec![1, 2, 3], vec![4, 5, 6], vec![1, 2, 3]];
        assert!(exact_integer_determinant(&big(&rep)).is_zero());
        assert_eq!(exact_integer_determinant(&[]), BigInt::one());
    }

    #[test]
    fn needs_row_swap() {
        let m = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(exact_integer_determinant(&big(&m)), BigInt::from(-1));
        let m = vec![vec![0, 0, 2], vec![0, 3, 0], vec![5, 0, 0]];
        assert_eq!(exact_integer_determinant(&big(&m)), BigInt::from(-30));
    }

    #[test]
    fn z12_tridiagonal_reduction() {
        // λ = m_i / φ(d_i) for d = 6, 4, 3, 2 in Z12: (10/2, 8/2, 9/2, 10/1).
        // Scaling row i by φ(d_i) gives the integer matrix diag(m_i) + φ(d_i)·A.
        let m = vec![vec![10, 2, 0, 0], vec![2, 8, 2, 0], vec![0, 2, 9, 2], vec![0, 0, 1, 10]];
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let rational = vec![
            vec![q(5, 1), q(1, 1), q(0, 1), q(0, 1)],
            vec![q(1, 1), q(4, 1), q(1, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(9, 2), q(1, 1)],
            vec![q(0, 1), q(0, 1), q(1, 1), q(10, 1)],
        ];
        let scaled = exact_integer_determinant(&big(&m));
        let expected = cofactor(&rational) * BigRational::from_integer(BigInt::from(2 * 2 * 2));
        assert_eq!(BigRational::from_integer(scaled), expected);
    }

    proptest! {
        #[test]
        fn agrees_with_cofactor_expansion(
            n in 1usize..6,
            entries in proptest::collection::vec(-9i64..10, 36),
        ) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| entries[i * 6..i * 6 + n].to_vec()).collect();
            let r: Vec<Vec<BigRational>> = m
                .iter()
                .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect();
            let d = exact_integer_determinant(&big(&m));
            prop_assert_eq!(BigRational::from_integer(d), cofactor(&r));
        }
    }
}
