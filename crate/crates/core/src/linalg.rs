//! Exact solution of small dense linear systems over the rationals.
//!
//! Elimination is Bareiss-style (fraction-free up to the exact divisions the
//! scheme prescribes); the pivot is the first nonzero entry in the column,
//! which is all exact arithmetic needs. Solutions are verified against the
//! original system before being returned, so a successful return is a proof.

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A square system `matrix * x = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearSystem {
    /// Panics unless `matrix` is square with the same dimension as `rhs`.
    pub fn new(matrix: Vec<Vec<Rational>>, rhs: Vec<Rational>) -> Self {
        let n = rhs.len();
        assert!(n > 0, "empty system");
        assert_eq!(matrix.len(), n, "matrix must be square");
        for row in &matrix {
            assert_eq!(row.len(), n, "matrix must be square");
        }
        LinearSystem { matrix, rhs }
    }

    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[Rational] {
        &self.rhs
    }

    /// Exact solution, or `Error::SingularSystem` when the determinant is
    /// zero. The result is back-substituted into the original system; a
    /// mismatch (impossible unless the implementation is broken) panics
    /// rather than returning a wrong answer.
    pub fn solve(&self) -> Result<Vec<Rational>> {
        let n = self.dim();
        let mut aug: Vec<Vec<Rational>> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                let mut r = row.clone();
                r.push(b.clone());
                r
            })
            .collect();

        eliminate(&mut aug, n)?;

        // back substitution on the upper-triangular augmented matrix
        let mut x = vec![Rational::zero(); n];
        for i in (0..n).rev() {
            let mut acc = aug[i][n].clone();
            for j in i + 1..n {
                acc -= &(&aug[i][j] * &x[j]);
            }
            x[i] = acc / &aug[i][i];
        }

        for (row, b) in self.matrix.iter().zip(&self.rhs) {
            let lhs: Rational = row.iter().zip(&x).map(|(a, xi)| a * xi).sum();
            assert_eq!(&lhs, b, "exact solve failed verification");
        }
        Ok(x)
    }
}

/// Bareiss forward elimination in place over the first `n` columns.
/// Rows may be wider than `n` (augmented columns ride along).
fn eliminate(rows: &mut [Vec<Rational>], n: usize) -> Result<()> {
    let width = rows[0].len();
    let mut prev = Rational::one();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !rows[r][k].is_zero())
            .ok_or(Error::SingularSystem)?;
        rows.swap(k, pivot_row);
        for i in k + 1..n {
            for j in k + 1..width {
                let num = &(&rows[k][k] * &rows[i][j]) - &(&rows[i][k] * &rows[k][j]);
                rows[i][j] = num / &prev;
            }
            rows[i][k] = Rational::zero();
        }
        prev = rows[k][k].clone();
    }
    Ok(())
}

/// Exact determinant via the same fraction-free elimination; the final pivot
/// is the determinant up to the row-swap sign.
pub fn determinant_exact(matrix: &[Vec<Rational>]) -> Rational {
    let n = matrix.len();
    assert!(n > 0, "empty matrix");
    for row in matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    let mut m: Vec<Vec<Rational>> = matrix.to_vec();
    let mut sign = 1i64;
    let mut prev = Rational::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return Rational::zero();
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num / &prev;
            }
            m[i][k] = Rational::zero();
        }
        prev = m[k][k].clone();
    }
    Rational::from(sign) * prev
}

/// The (n+1) x (n+1) Hilbert matrix with entries 1/(i + j + 1): the
/// coefficient matrix of the system prescribing a polynomial's moments.
pub fn hilbert_matrix(dim: usize) -> Vec<Vec<Rational>> {
    (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| Rational::ratio(1, (i + j + 1) as i64))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|row| row.iter().map(|&v| Rational::from(v)).collect())
            .collect()
    }

    /// Independent oracle: determinant by cofactor expansion along row 0.
    fn det_cofactor(m: &[Vec<Rational>]) -> Rational {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = Rational::zero();
        for col in 0..n {
            if m[0][col].is_zero() {
                continue;
            }
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|(j, _)| *j != col)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][col] * &det_cofactor(&minor);
            acc = if col % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    #[test]
    fn identity_solve() {
        let sys = LinearSystem::new(
            ints(&[&[1, 0], &[0, 1]]),
            vec![Rational::from(3), Rational::from(5)],
        );
        assert_eq!(sys.solve().unwrap(), vec![Rational::from(3), Rational::from(5)]);
    }

    #[test]
    fn hilbert_3x3_solve() {
        let sys = LinearSystem::new(
            hilbert_matrix(3),
            vec![Rational::from(1), Rational::from(2), Rational::from(3)],
        );
        let x = sys.solve().unwrap();
        assert_eq!(
            x,
            vec![Rational::from(27), Rational::from(-192), Rational::from(210)]
        );
        // the quadratic coefficient equals 30 * (6*3 - 6*2 + 1)
        assert_eq!(x[2], Rational::from(30) * Rational::from(7));
    }

    #[test]
    fn equal_rows_are_singular() {
        let sys = LinearSystem::new(
            ints(&[&[1, 2], &[1, 2]]),
            vec![Rational::from(1), Rational::from(1)],
        );
        assert_eq!(sys.solve(), Err(Error::SingularSystem));
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(determinant_exact(&hilbert_matrix(3)), r(1, 2160));
        assert_eq!(determinant_exact(&ints(&[&[1, 0], &[0, 1]])), Rational::one());
        assert_eq!(
            determinant_exact(&ints(&[&[1, 2, 3], &[4, 5, 6], &[1, 2, 3]])),
            Rational::zero()
        );
    }

    #[test]
    fn determinant_matches_cofactor_on_hilbert() {
        for dim in 1..=6 {
            let h = hilbert_matrix(dim);
            assert_eq!(determinant_exact(&h), det_cofactor(&h), "dim {dim}");
        }
    }

    #[test]
    fn pivoting_handles_leading_zero() {
        let sys = LinearSystem::new(
            ints(&[&[0, 1], &[1, 0]]),
            vec![Rational::from(4), Rational::from(9)],
        );
        assert_eq!(sys.solve().unwrap(), vec![Rational::from(9), Rational::from(4)]);
    }

    fn arb_matrix(max_dim: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
        (1..=max_dim).prop_flat_map(|n| {
            proptest::collection::vec(
                proptest::collection::vec((-6i64..=6, 1i64..=4).prop_map(|(p, q)| r(p, q)), n),
                n,
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn determinant_agrees_with_cofactor(m in arb_matrix(5)) {
            prop_assert_eq!(determinant_exact(&m), det_cofactor(&m));
        }

        #[test]
        fn solve_consistent_with_determinant(m in arb_matrix(6)) {
            let n = m.len();
            let rhs: Vec<Rational> = (0..n).map(|i| Rational::from(i as i64 + 1)).collect();
            let sys = LinearSystem::new(m.clone(), rhs);
            let det = determinant_exact(&m);
            // solve() itself verifies matrix * x == rhs before returning
            prop_assert_eq!(sys.solve().is_ok(), !det.is_zero());
        }
    }
}
