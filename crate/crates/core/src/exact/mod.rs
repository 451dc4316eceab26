//! Exact arithmetic: `Q(ζ)`, the symbolic Laurent ring, integer matrices,
//! Smith normal form and linear solvers.

mod cyclotomic;
mod hermite;
mod matrix;
mod snf;
mod solve;
mod symbolic;

pub use cyclotomic::Cyclotomic;
pub use hermite::hermite_basis;
pub use matrix::IntMatrix;
pub use snf::{invariant_factors, smith_normal_form, SmithForm};
pub use solve::{integer_kernel, rank_mod_prime, solve_linear, Ring};
pub(crate) use solve::{reduce_mod, solve_mod_prime};
pub use symbolic::{Exponents, SymbolicScalar};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("symbolic determinant only supported up to 4x4, got {0}x{0}")]
    TooLarge(usize),
}

/// Determinant of a square matrix of symbolic scalars (size at most 4) by
/// cofactor expansion along the first row.
pub fn symbolic_det(m: &[Vec<SymbolicScalar>]) -> Result<SymbolicScalar, AlgebraError> {
    let n = m.len();
    if let Some(row) = m.iter().find(|r| r.len() != n) {
        return Err(AlgebraError::NotSquare { rows: n, cols: row.len() });
    }
    if n > 4 {
        return Err(AlgebraError::TooLarge(n));
    }
    Ok(cofactor_det(m))
}

fn cofactor_det(m: &[Vec<SymbolicScalar>]) -> SymbolicScalar {
    match m.len() {
        0 => SymbolicScalar::one(),
        1 => m[0][0].clone(),
        n => {
            let mut acc = SymbolicScalar::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<SymbolicScalar>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][j] * &cofactor_det(&minor);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ident(n: usize) -> Vec<Vec<SymbolicScalar>> {
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { SymbolicScalar::one() } else { SymbolicScalar::zero() }).collect())
            .collect()
    }

    #[test]
    fn det_identity() {
        assert!(symbolic_det(&ident(4)).unwrap().is_one());
    }

    #[test]
    fn det_repeated_row_vanishes() {
        let mut m = ident(3);
        m[1] = m[0].clone();
        assert!(symbolic_det(&m).unwrap().is_zero());
    }

    #[test]
    fn det_rejects_non_square() {
        let m = vec![vec![SymbolicScalar::one(); 2]; 3];
        assert!(symbolic_det(&m).is_err());
    }
}
