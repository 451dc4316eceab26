//! Smith normal form over the integers.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// `u · m · v = s` with `u`, `v` unimodular and `s` diagonal, `d₁ | d₂ | …`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows().min(self.s.cols())).map(|i| self.s[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let mut work = Reduction::new(m.clone(), true);
    work.run();
    SmithForm {
        u: work.u.expect("tracked"),
        s: work.a,
        v: work.v.expect("tracked"),
    }
}

/// Nonzero diagonal entries of the Smith form, skipping the transforms.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut work = Reduction::new(m.clone(), false);
    work.run();
    let n = work.a.rows().min(work.a.cols());
    (0..n).map(|i| work.a[(i, i)].clone()).filter(|d| !d.is_zero()).collect()
}

struct Reduction {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: Option<IntMatrix>,
}

impl Reduction {
    fn new(a: IntMatrix, track: bool) -> Self {
        let (u, v) = if track {
            (Some(IntMatrix::identity(a.rows())), Some(IntMatrix::identity(a.cols())))
        } else {
            (None, None)
        };
        Self { a, u, v }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, f);
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
    }

    /// Smallest nonzero entry of the trailing block starting at `(t, t)`.
    fn smallest_in_block(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| v.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                    if v.abs() == BigInt::from(1) {
                        return best;
                    }
                }
            }
        }
        best
    }

    /// Smallest nonzero entry in row `t` or column `t` (both from index `t`).
    fn smallest_in_cross(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        let candidates = (t..self.a.rows())
            .map(|i| (i, t))
            .chain((t + 1..self.a.cols()).map(|j| (t, j)));
        for (i, j) in candidates {
            let v = &self.a[(i, j)];
            if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < self.a[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
        best
    }

    fn run(&mut self) {
        let n = self.a.rows().min(self.a.cols());
        for t in 0..n {
            let Some((pi, pj)) = self.smallest_in_block(t) else {
                break;
            };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let pivot = self.a[(t, t)].clone();
                let mut residue = false;
                for i in t + 1..self.a.rows() {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(i, t)] / &pivot;
                    self.add_row(i, t, &-q);
                    residue |= !self.a[(i, t)].is_zero();
                }
                for j in t + 1..self.a.cols() {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = &self.a[(t, j)] / &pivot;
                    self.add_col(j, t, &-q);
                    residue |= !self.a[(t, j)].is_zero();
                }
                if residue {
                    let (pi, pj) = self.smallest_in_cross(t).expect("pivot is nonzero");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                // divisibility of the trailing block by the pivot
                let offender = (t + 1..self.a.rows()).find(|&i| {
                    (t + 1..self.a.cols()).any(|j| !(&self.a[(i, j)] % &pivot).is_zero())
                });
                match offender {
                    Some(i) => self.add_row(t, i, &BigInt::from(1)),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(m: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(m);
        assert_eq!(&(&f.u * m) * &f.v, f.s);
        assert!(f.u.is_unimodular());
        assert!(f.v.is_unimodular());
        f
    }

    #[test]
    fn identity_is_its_own_form() {
        let f = check(&IntMatrix::identity(3));
        assert!(f.s.is_identity());
    }

    #[test]
    fn diag_two_three() {
        // hand reduction: gcd(2,3) = 1, lcm = 6
        let f = check(&IntMatrix::diagonal(&[2, 3]));
        assert_eq!(f.s, IntMatrix::diagonal(&[1, 6]));
    }

    #[test]
    fn zero_matrix() {
        let f = check(&IntMatrix::zeros(2, 3));
        assert!(f.s.is_zero());
    }

    #[test]
    fn invariant_factors_match_full_form() {
        let m = IntMatrix::from_i64(3, 3, &[2, 4, 4, -6, 6, 12, 10, -4, -16]);
        let f = check(&m);
        assert_eq!(f.diagonal(), vec![2.into(), 6.into(), 12.into()]);
        assert_eq!(invariant_factors(&m), vec![BigInt::from(2), 6.into(), 12.into()]);
    }
}
