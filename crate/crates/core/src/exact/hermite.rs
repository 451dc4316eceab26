use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Row-style Hermite normal form of the lattice spanned by `vectors`.
///
/// Returns a basis in echelon form with positive pivots and entries above
/// each pivot reduced into `[0, pivot)`; zero rows are dropped, so two
/// generating sets span the same lattice iff their results are equal.
pub fn hermite_basis(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(width) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<BigInt>> = vectors.to_vec();
    let mut r = 0;
    for c in 0..width {
        loop {
            // bring the smallest nonzero entry of column c to row r
            let Some(p) = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by_key(|&i| rows[i][c].abs())
            else {
                break;
            };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
                done &= rows[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if r >= rows.len() || rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -std::mem::take(x);
            }
        }
        let pivot_row = rows[r].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&pivot_row[c]);
            if !q.is_zero() {
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| a.into()).collect()
    }

    #[test]
    fn same_lattice_same_basis() {
        let a = hermite_basis(&[v(&[2, 0]), v(&[0, 3])]);
        let b = hermite_basis(&[v(&[2, 3]), v(&[4, 3]), v(&[0, 6])]);
        assert_eq!(a, b);
        assert_eq!(a, vec![v(&[2, 0]), v(&[0, 3])]);
    }

    #[test]
    fn drops_dependent_rows() {
        let h = hermite_basis(&[v(&[1, 2, 3]), v(&[2, 4, 6])]);
        assert_eq!(h, vec![v(&[1, 2, 3])]);
    }
}
