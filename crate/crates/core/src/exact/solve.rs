//! Linear systems over `Z` and `F_p`, and kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{smith_normal_form, AlgebraError, IntMatrix};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ring {
    Integers,
    Mod3,
}

/// Find `x` with `m · x = b` over `ring`, or `None` when the system is inconsistent.
///
/// Over `Mod3` the returned entries lie in `{0, 1, 2}`.
pub fn solve_linear(m: &IntMatrix, b: &[BigInt], ring: Ring) -> Result<Option<Vec<BigInt>>, AlgebraError> {
    if b.len() != m.rows() {
        return Err(AlgebraError::DimensionMismatch {
            expected: m.rows(),
            found: b.len(),
        });
    }
    Ok(match ring {
        Ring::Integers => solve_integers(m, b),
        Ring::Mod3 => {
            let rows = to_mod_rows(m, 3);
            let rhs: Vec<u64> = b.iter().map(|v| reduce_mod(v, 3)).collect();
            solve_mod_prime(&rows, m.cols(), &rhs, 3).map(|x| x.into_iter().map(BigInt::from).collect())
        }
    })
}

fn solve_integers(m: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let f = smith_normal_form(m);
    let c = f.u.mul_vec(b);
    let diag = f.diagonal();
    let mut y = vec![BigInt::zero(); m.cols()];
    for (i, ci) in c.iter().enumerate() {
        let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_zero() {
            if !ci.is_zero() {
                return None;
            }
        } else {
            let (q, r) = ci.div_rem(&d);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(f.v.mul_vec(&y))
}

pub(crate) fn reduce_mod(v: &BigInt, p: u64) -> u64 {
    v.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn to_mod_rows(m: &IntMatrix, p: u64) -> Vec<Vec<u64>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|v| reduce_mod(v, p)).collect()).collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Gauss–Jordan over `F_p`; returns one solution with free variables set to 0.
pub(crate) fn solve_mod_prime(rows: &[Vec<u64>], cols: usize, rhs: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut aug: Vec<Vec<u64>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut v = r.clone();
            v.push(b % p);
            v
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..aug.len()).find(|&i| aug[i][c] != 0) else {
            continue;
        };
        aug.swap(r, pr);
        let inv = inv_mod(aug[r][c], p);
        for v in aug[r].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..aug.len() {
            if i != r && aug[i][c] != 0 {
                let f = aug[i][c];
                for j in c..=cols {
                    let sub = mul_mod(f, aug[r][j], p);
                    aug[i][j] = (aug[i][j] + p - sub) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == aug.len() {
            break;
        }
    }
    if aug[r..].iter().any(|row| row[cols] != 0) {
        return None;
    }
    let mut x = vec![0; cols];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][cols];
    }
    Some(x)
}

/// Rank over `F_p` of a matrix given by sparse rows `(col, value)`.
pub fn rank_mod_prime(rows: &[Vec<(usize, i64)>], cols: usize, p: u64) -> usize {
    // echelon basis keyed by pivot column
    let mut basis: Vec<Option<Vec<u64>>> = vec![None; cols];
    let mut rank = 0;
    let to_res = |v: i64| v.rem_euclid(p as i64) as u64;
    for row in rows {
        let mut dense = vec![0u64; cols];
        for &(c, v) in row {
            dense[c] = (dense[c] + to_res(v)) % p;
        }
        let mut c = 0;
        while c < cols {
            if dense[c] == 0 {
                c += 1;
                continue;
            }
            match &basis[c] {
                Some(b) => {
                    let f = dense[c];
                    for j in c..cols {
                        if b[j] != 0 {
                            dense[j] = (dense[j] + p - mul_mod(f, b[j], p)) % p;
                        }
                    }
                }
                None => {
                    let inv = inv_mod(dense[c], p);
                    for v in dense[c..].iter_mut() {
                        *v = mul_mod(*v, inv, p);
                    }
                    basis[c] = Some(dense);
                    rank += 1;
                    break;
                }
            }
            c += 1;
        }
        if rank == cols {
            break;
        }
    }
    rank
}

/// Basis of the integer kernel `{x : m · x = 0}` as columns of the returned matrix.
///
/// The kernel is saturated (a direct summand of `Z^cols`).
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let f = smith_normal_form(m);
    let r = f.rank();
    f.v.columns(r..m.cols())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn integer_examples() {
        let m = IntMatrix::diagonal(&[3]);
        assert_eq!(solve_linear(&m, &ints(&[3]), Ring::Integers).unwrap(), Some(ints(&[1])));
        assert_eq!(solve_linear(&m, &ints(&[1]), Ring::Integers).unwrap(), None);
    }

    #[test]
    fn mod3_example_satisfies_system() {
        let m = IntMatrix::from_i64(2, 2, &[1, 1, 0, 0]);
        let b = ints(&[1, 0]);
        let x = solve_linear(&m, &b, Ring::Mod3).unwrap().unwrap();
        let mx = m.mul_vec(&x);
        for (l, r) in mx.iter().zip(&b) {
            assert!(((l - r) % BigInt::from(3)).is_zero());
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let m = IntMatrix::identity(2);
        assert!(solve_linear(&m, &ints(&[1]), Ring::Integers).is_err());
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = IntMatrix::from_i64(1, 3, &[1, 2, 3]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 2);
        assert!((&m * &k).is_zero());
    }

    #[test]
    fn modular_rank() {
        let rows = vec![vec![(0, 1), (1, 2)], vec![(0, 2), (1, 4)], vec![(1, 1)]];
        assert_eq!(rank_mod_prime(&rows, 2, 1_000_000_007), 2);
        assert_eq!(rank_mod_prime(&rows[..2], 2, 1_000_000_007), 1);
    }
}
