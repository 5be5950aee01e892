//! Exact dense linear algebra for change-of-basis matrices.

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

pub type Matrix = Vec<Vec<Coefficient>>;

/// Gauss-Jordan inverse over the rationals.
pub fn invert(a: &Matrix) -> Result<Matrix> {
    let n = a.len();
    let mut work: Matrix = a.clone();
    let mut inv: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Coefficient::one() } else { Coefficient::zero() }).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !work[r][col].is_zero()).ok_or(Error::Singular)?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let p = work[col][col].recip();
        for j in 0..n {
            work[col][j] = &work[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..n {
            if r == col || work[r][col].is_zero() {
                continue;
            }
            let f = work[r][col].clone();
            for j in 0..n {
                if !work[col][j].is_zero() {
                    let t = &f * &work[col][j];
                    work[r][j] -= &t;
                }
                if !inv[col][j].is_zero() {
                    let t = &f * &inv[col][j];
                    inv[r][j] -= &t;
                }
            }
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(v: i64) -> Coefficient {
        Coefficient::from_int(v)
    }

    #[test]
    fn inverse_of_small_matrix() {
        let a = vec![vec![c(0), c(2)], vec![c(1), c(1)]];
        let inv = invert(&a).unwrap();
        assert_eq!(inv, vec![vec![Coefficient::ratio(-1, 2), c(1)], vec![Coefficient::ratio(1, 2), c(0)]]);
        assert_eq!(invert(&vec![vec![c(1), c(1)], vec![c(2), c(2)]]), Err(Error::Singular));
    }
}
