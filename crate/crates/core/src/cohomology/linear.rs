//! Differentials as integer matrices: coboundary witnesses, bar cohomology
//! and Tate cohomology of cyclic groups.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use super::{differential, is_cocycle, Cochain, CohomologyError, FiniteGroup, GLattice, LinearModule};
use crate::exact::{
    integer_kernel, invariant_factors, rank_mod_prime, reduce_mod, smith_normal_form, solve_linear, solve_mod_prime,
    IntMatrix, Ring,
};

/// Upper limit on `|G|ⁿ⁺¹ · rank`, the row count of the largest differential
/// assembled by [`bar_cohomology`].
pub const BAR_ROW_LIMIT: usize = 20_000;

/// Mersenne prime used for the certified modular rank.
const RANK_PRIME: u64 = (1 << 61) - 1;

/// Sparse rows of `dₙ : Cⁿ(G, M) → Cⁿ⁺¹(G, M)`; row `(tuple, i)` is
/// `tuple · rank + i`, column `(tuple, j)` likewise.
pub fn differential_rows(group: &FiniteGroup, lattice: &GLattice, n: usize) -> Vec<Vec<(usize, i64)>> {
    let r = lattice.rank();
    let mut rows = Vec::with_capacity(group.tuple_count(n + 1) * r);
    for idx in 0..group.tuple_count(n + 1) {
        let args = group.decode(idx, n + 1);
        let m = lattice.matrix(group.element(args[0]));
        let tail = group.encode(&args[1..]);
        let mut merged_cols = Vec::with_capacity(n + 1);
        for i in 1..=n {
            let mut merged = args[..i - 1].to_vec();
            merged.push(group.mul(args[i - 1], args[i]));
            merged.extend_from_slice(&args[i + 1..]);
            merged_cols.push((group.encode(&merged), if i % 2 == 0 { 1 } else { -1 }));
        }
        merged_cols.push((group.encode(&args[..n]), if (n + 1) % 2 == 0 { 1 } else { -1 }));
        for i in 0..r {
            let mut row: BTreeMap<usize, i64> = BTreeMap::new();
            for j in 0..r {
                if m[i][j] != 0 {
                    *row.entry(tail * r + j).or_insert(0) += m[i][j];
                }
            }
            for &(t, sign) in &merged_cols {
                *row.entry(t * r + i).or_insert(0) += sign;
            }
            rows.push(row.into_iter().filter(|&(_, v)| v != 0).collect());
        }
    }
    rows
}

/// Dense matrix of `dₙ`.
pub fn differential_matrix(group: &FiniteGroup, lattice: &GLattice, n: usize) -> IntMatrix {
    let rows = differential_rows(group, lattice, n);
    let cols = group.tuple_count(n) * lattice.rank();
    let mut m = IntMatrix::zeros(rows.len(), cols);
    for (i, row) in rows.iter().enumerate() {
        for &(j, v) in row {
            m[(i, j)] = v.into();
        }
    }
    m
}

/// Find `b` with `db = c`, or `None` if `c` is not a coboundary.
///
/// The equation is flattened into a linear system over the module's ring.
pub fn coboundary_witness<M: LinearModule>(
    group: &FiniteGroup,
    module: &M,
    c: &Cochain<M::Value>,
) -> Result<Option<Cochain<M::Value>>, CohomologyError> {
    if !is_cocycle(group, module, c) {
        return Err(CohomologyError::NotACocycle);
    }
    let n = c.degree();
    if n == 0 {
        // only the zero 0-cocycle is a coboundary (of nothing)
        return Ok(c.values().iter().all(|v| module.is_zero(v)).then(|| c.clone()));
    }
    let lattice = module.lattice();
    let r = lattice.rank();
    let mut rhs = Vec::with_capacity(c.values().len() * r);
    for v in c.values() {
        rhs.extend(module.coords(v)?);
    }
    let unknowns = group.tuple_count(n - 1) * r;
    let solution: Option<Vec<i64>> = match module.ring() {
        Ring::Integers => {
            let m = differential_matrix(group, lattice, n - 1);
            let b: Vec<BigInt> = rhs.iter().map(|&x| x.into()).collect();
            solve_linear(&m, &b, Ring::Integers)?
                .map(|x| x.iter().map(|v| v.to_i64().expect("witness entries are small")).collect())
        }
        Ring::Mod3 => {
            let rows: Vec<Vec<u64>> = differential_rows(group, lattice, n - 1)
                .into_iter()
                .map(|row| {
                    let mut dense = vec![0u64; unknowns];
                    for (j, v) in row {
                        dense[j] = (dense[j] + v.rem_euclid(3) as u64) % 3;
                    }
                    dense
                })
                .collect();
            let b: Vec<u64> = rhs.iter().map(|x| x.rem_euclid(3) as u64).collect();
            solve_mod_prime(&rows, unknowns, &b, 3).map(|x| x.into_iter().map(|v| v as i64).collect())
        }
    };
    let Some(x) = solution else {
        return Ok(None);
    };
    let values = x.chunks(r).map(|chunk| module.from_coords(chunk)).collect();
    let witness = Cochain::from_values(group, n - 1, values);
    // never trust the solver blindly
    let check = differential(group, module, &witness);
    if super::first_difference(module, &check, c).is_some() {
        return Err(CohomologyError::Internal("coboundary witness does not reproduce the cocycle".into()));
    }
    Ok(Some(witness))
}

/// Invariant factors of `Hⁿ(G, M)` for `n ∈ {0, 1, 2}`; a `0` entry stands for
/// a free summand `Z`, other entries `d` for `Z/d`.
pub fn bar_cohomology(group: &FiniteGroup, lattice: &GLattice, n: usize) -> Result<Vec<BigInt>, CohomologyError> {
    if n > 2 {
        return Err(CohomologyError::DegreeTooLarge(n));
    }
    let rows_needed = group.tuple_count(n + 1) * lattice.rank();
    if rows_needed > BAR_ROW_LIMIT {
        return Err(CohomologyError::SizeGuard { rows: rows_needed, limit: BAR_ROW_LIMIT });
    }
    let dim = group.tuple_count(n) * lattice.rank();
    // torsion of Hⁿ = torsion of coker dₙ₋₁
    let (torsion, rank_prev) = if n == 0 {
        (Vec::new(), 0)
    } else {
        let prev = differential_matrix(group, lattice, n - 1);
        let factors = invariant_factors(&prev);
        let rank = factors.len();
        (factors.into_iter().filter(|d| !d.is_one()).collect::<Vec<_>>(), rank)
    };
    let rows = differential_rows(group, lattice, n);
    let bound = dim - rank_prev;
    let modular = rank_mod_prime(&rows, dim, RANK_PRIME);
    // rank over F_p never exceeds the rank over Q, and dₙ ∘ dₙ₋₁ = 0 bounds the latter
    let rank_n = if modular == bound {
        modular
    } else {
        invariant_factors(&differential_matrix(group, lattice, n)).len()
    };
    let free = dim - rank_n - rank_prev;
    let mut out = torsion;
    out.extend(std::iter::repeat_n(BigInt::zero(), free));
    Ok(out)
}

/// `Ĥ⁻¹(G, M) = ker N / im(σ − 1)` for a cyclic group generated by `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TateResult {
    /// Invariant factors other than 1 (a `0` would mean a free summand, which cannot occur).
    pub factors: Vec<BigInt>,
    /// One lifted generator in `ker N` per factor.
    pub generators: Vec<Vec<BigInt>>,
    /// `σ − 1`, to test classes for equality.
    pub augmentation: IntMatrix,
}

impl TateResult {
    /// Whether `v − u` lies in `im(σ − 1)`.
    pub fn same_class(&self, u: &[BigInt], v: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = v.iter().zip(u).map(|(a, b)| a - b).collect();
        matches!(solve_linear(&self.augmentation, &diff, Ring::Integers), Ok(Some(_)))
    }
}

pub fn tate_h_minus1(sigma: &IntMatrix, order: u32) -> Result<TateResult, CohomologyError> {
    if !sigma.is_square() || !sigma.pow(order).is_identity() {
        return Err(CohomologyError::InvalidModule(format!("σ^{order} is not the identity")));
    }
    let r = sigma.rows();
    let mut norm = IntMatrix::zeros(r, r);
    for i in 0..order {
        norm = norm.add(&sigma.pow(i));
    }
    let aug = sigma.sub(&IntMatrix::identity(r));
    let kernel = integer_kernel(&norm);
    let k = kernel.cols();
    // express the columns of σ − 1 in the (saturated) kernel basis
    let mut coords = IntMatrix::zeros(k, r);
    for j in 0..r {
        let x = solve_linear(&kernel, &aug.col(j), Ring::Integers)?
            .ok_or_else(|| CohomologyError::Internal("im(σ − 1) ⊄ ker N".into()))?;
        for i in 0..k {
            coords[(i, j)] = x[i].clone();
        }
    }
    let snf = smith_normal_form(&coords);
    let diag = snf.diagonal();
    let mut factors = Vec::new();
    let mut generators = Vec::new();
    for i in 0..k {
        let d = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if d.is_one() {
            continue;
        }
        // generator = kernel · U⁻¹ eᵢ
        let mut e = vec![BigInt::zero(); k];
        e[i] = BigInt::one();
        let y = solve_linear(&snf.u, &e, Ring::Integers)?.expect("U is unimodular");
        generators.push(kernel.mul_vec(&y));
        factors.push(d);
    }
    Ok(TateResult { factors, generators, augmentation: aug })
}

/// Reduce a residue for reporting.
pub fn mod3(v: &BigInt) -> u64 {
    reduce_mod(v, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::Mu3;
    use crate::geometry::FieldAutomorphism;

    fn cyclic() -> FiniteGroup {
        FiniteGroup::generated_by(&[FieldAutomorphism::s()])
    }

    fn regular() -> IntMatrix {
        IntMatrix::from_i64(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0])
    }

    #[test]
    fn tate_of_trivial_and_regular_modules() {
        let t = tate_h_minus1(&IntMatrix::identity(2), 3).unwrap();
        assert!(t.factors.is_empty());
        let t = tate_h_minus1(&regular(), 3).unwrap();
        assert!(t.factors.is_empty());
        assert!(tate_h_minus1(&IntMatrix::from_i64(2, 2, &[0, 1, 1, 0]), 3).is_err());
    }

    #[test]
    fn h1_with_trivial_coefficients_vanishes() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t()]);
        assert!(bar_cohomology(&g, &GLattice::trivial(1), 1).unwrap().is_empty());
        // H² (G, Z) = Hom(G, Q/Z) = (Z/3)²
        assert_eq!(bar_cohomology(&g, &GLattice::trivial(1), 2).unwrap(), vec![BigInt::from(3), BigInt::from(3)]);
        // H⁰ = Z
        assert_eq!(bar_cohomology(&g, &GLattice::trivial(1), 0).unwrap(), vec![BigInt::zero()]);
    }

    #[test]
    fn size_guard() {
        let g = FiniteGroup::full();
        assert!(matches!(
            bar_cohomology(&g, &GLattice::trivial(7), 2),
            Err(CohomologyError::SizeGuard { .. })
        ));
    }

    #[test]
    fn mu3_coboundary_of_a_function() {
        let g = cyclic();
        let m = Mu3::new();
        let b = Cochain::from_fn(&g, 1, |a| a[0].s % 3);
        let c = differential(&g, &m, &b);
        let w = coboundary_witness(&g, &m, &c).unwrap().unwrap();
        assert_eq!(super::super::first_difference(&m, &differential(&g, &m, &w), &c), None);
        // a nonzero homomorphism is a cocycle but not a coboundary (trivial action)
        assert_eq!(coboundary_witness(&g, &m, &b).unwrap(), None);
    }

    #[test]
    fn regular_lattice_has_no_h1() {
        let g = cyclic();
        let lat = GLattice::new(3, &g, |x| regular().pow(x.s as u32)).unwrap();
        assert!(bar_cohomology(&g, &lat, 1).unwrap().is_empty());
    }
}
