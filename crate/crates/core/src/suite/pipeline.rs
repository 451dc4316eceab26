//! The cochain constructions the checks are built from.

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::tables::{Plane, PlaneQuotient, SignedMonomial};
use crate::cohomology::{
    connecting_cocycle, differential, Cochain, CohomologyError, FiniteGroup, GLattice, GModule, Multiplicative,
};
use crate::exact::{solve_linear, IntMatrix, Ring};
use crate::geometry::{
    action_on_divisors, action_on_pic, basic_function, d0_basis, divisor_class, divisor_of_function,
    DivisorVector, FieldAutomorphism, MonomialFunction, PicVector,
};

pub fn s_group() -> FiniteGroup {
    FiniteGroup::generated_by(&[FieldAutomorphism::s()])
}

pub fn st_group() -> FiniteGroup {
    FiniteGroup::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t()])
}

pub fn t_group() -> FiniteGroup {
    FiniteGroup::generated_by(&[FieldAutomorphism::t()])
}

fn internal(e: impl ToString) -> CohomologyError {
    CohomologyError::Internal(e.to_string())
}

/// `Pic V̄ ≅ Z⁷` as a module over `group`.
pub fn pic_lattice(group: &FiniteGroup) -> Result<GLattice, CohomologyError> {
    let mut err = None;
    let lattice = GLattice::new(7, group, |g| {
        action_on_pic(g).unwrap_or_else(|e| {
            err = Some(e);
            IntMatrix::identity(7)
        })
    })?;
    err.map_or(Ok(lattice), |e| Err(internal(e)))
}

/// `𝒟 ≅ Z¹⁰` as a module over `group`.
pub fn divisor_lattice(group: &FiniteGroup) -> Result<GLattice, CohomologyError> {
    let mut err = None;
    let lattice = GLattice::new(10, group, |g| {
        action_on_divisors(g).unwrap_or_else(|e| {
            err = Some(e);
            IntMatrix::identity(10)
        })
    })?;
    err.map_or(Ok(lattice), |e| Err(internal(e)))
}

/// `𝒟₀` in the basis `D₁ … D₅`.
pub fn d0_lattice(group: &FiniteGroup) -> Result<GLattice, CohomologyError> {
    let basis: Vec<Vec<i64>> = d0_basis().iter().map(|d| d.to_vec()).collect();
    divisor_lattice(group)?.restrict(group, &basis)
}

/// Coordinates `n` with `Σ nₖDₖ = d`, if `d ∈ 𝒟₀`.
pub fn d0_coordinates(d: &[i64]) -> Option<[i64; 5]> {
    let basis: Vec<Vec<i64>> = d0_basis().iter().map(|d| d.to_vec()).collect();
    let x = GLattice::coordinates_in(&basis, d)?;
    Some(std::array::from_fn(|k| x[k]))
}

/// `Π fₖ^{nₖ}`.
pub fn d0_function(n: &[i64; 5]) -> MonomialFunction {
    (0..5).fold(MonomialFunction::one(), |acc, k| &acc * &basic_function(k + 1).pow(n[k]))
}

/// A `Pic`-valued 1-cochain through the table of values at `s^a` with `a = i − j`
/// for the element `s^i t^j` (so `φ(s^a (st)^i) = values[a]`).
pub fn phi_cochain(group: &FiniteGroup, values: &[PicVector; 3]) -> Cochain<Vec<i64>> {
    Cochain::from_fn(group, 1, |g| {
        let a = (g[0].s as usize + 3 - g[0].t as usize) % 3;
        values[a].to_vec()
    })
}

/// Value-by-value lift given as pairs `(value, lift)`.
pub fn table_lift(
    pairs: Vec<(Vec<i64>, Vec<i64>)>,
) -> impl Fn(&Vec<i64>) -> Result<Vec<i64>, CohomologyError> + Sync {
    move |v| {
        pairs
            .iter()
            .find(|(x, _)| x == v)
            .map(|(_, l)| l.clone())
            .ok_or_else(|| CohomologyError::InvalidExtension(format!("no lift given for {v:?}")))
    }
}

/// `∂` of a `Pic`-valued cocycle through `0 → 𝒟₀ → 𝒟 → Pic → 0`, with values in `𝒟`.
pub fn connecting_to_d0(
    group: &FiniteGroup,
    c: &Cochain<Vec<i64>>,
    lift: impl Fn(&Vec<i64>) -> Result<Vec<i64>, CohomologyError> + Sync,
) -> Result<Cochain<Vec<i64>>, CohomologyError> {
    let pic = pic_lattice(group)?;
    let div = divisor_lattice(group)?;
    connecting_cocycle(group, &pic, c, &div, lift, |d: &Vec<i64>| {
        let d: DivisorVector = d.as_slice().try_into().ok()?;
        (divisor_class(&d).ok()? == [0; 7]).then(|| d.to_vec())
    })
}

/// The functions `(x+ζⁱαy)/(z+ζʲβt)` and their inverses, keyed by divisor.
fn quotient_lifts() -> &'static HashMap<DivisorVector, MonomialFunction> {
    static LIFTS: OnceLock<HashMap<DivisorVector, MonomialFunction>> = OnceLock::new();
    LIFTS.get_or_init(|| {
        let mut out = HashMap::new();
        for i in 0..3 {
            for j in 0..3 {
                let p = PlaneQuotient { numerator: Plane::Alpha(i), denominator: Plane::Beta(j) };
                let f = p.function();
                let d = divisor_of_function(&f).expect("plane quotients lie in 𝒟");
                let neg: DivisorVector = d.map(|x| -x);
                assert!(out.insert(d, f.clone()).is_none(), "divisors of plane quotients are distinct");
                assert!(out.insert(neg, f.inverse()).is_none(), "divisors of plane quotients are distinct");
            }
        }
        out
    })
}

/// The lift `𝒟₀ → div⁻¹(𝒟₀)`: `0 ↦ 1`, `div(g) ↦ g` for the plane quotients.
pub fn function_lift(d: &Vec<i64>) -> Result<MonomialFunction, CohomologyError> {
    if d.iter().all(|&x| x == 0) {
        return Ok(MonomialFunction::one());
    }
    let key: DivisorVector = d.as_slice().try_into().map_err(internal)?;
    quotient_lifts()
        .get(&key)
        .cloned()
        .ok_or_else(|| CohomologyError::InvalidExtension(format!("{d:?} is not the divisor of a plane quotient")))
}

/// `δ` through `0 → F′* → div⁻¹(𝒟₀) → 𝒟₀ → 0`: constant-valued 3-cochain.
pub fn connecting_to_constants(
    group: &FiniteGroup,
    c: &Cochain<Vec<i64>>,
) -> Result<Cochain<MonomialFunction>, CohomologyError> {
    let div = divisor_lattice(group)?;
    connecting_cocycle(group, &div, c, &Multiplicative::exact(), function_lift, |f: &MonomialFunction| {
        f.constant_value().map(|c| MonomialFunction::scalar(c).expect("constants here are units"))
    })
}

/// `φ`, `∂φ` and `δ∂φ` over `⟨s, t⟩` with the given values and lifts.
pub struct Step1Cocycles {
    pub group: FiniteGroup,
    pub phi: Cochain<Vec<i64>>,
    pub partial: Cochain<Vec<i64>>,
    pub delta: Cochain<MonomialFunction>,
}

pub fn step1_cocycles(phi: &[PicVector; 3], lifts: &[[i64; 10]; 3]) -> Result<Step1Cocycles, CohomologyError> {
    let group = st_group();
    let phi_c = phi_cochain(&group, phi);
    let pairs = (0..3).map(|k| (phi[k].to_vec(), lifts[k].to_vec())).collect();
    let partial = connecting_to_d0(&group, &phi_c, table_lift(pairs))?;
    let delta = connecting_to_constants(&group, &partial)?;
    Ok(Step1Cocycles { group, phi: phi_c, partial, delta })
}

/// Pull a cochain on `⟨s, t⟩` back along `⟨s, t, w⟩ → ⟨s, t⟩`.
pub fn inflate<V: Clone + Send + Sync>(
    from: &FiniteGroup,
    to: &FiniteGroup,
    c: &Cochain<V>,
) -> Cochain<V> {
    Cochain::from_fn(to, c.degree(), |args| {
        let projected: Vec<FieldAutomorphism> =
            args.iter().map(|g| FieldAutomorphism::new(g.s as i64, g.t as i64, 0)).collect();
        c.get(from, &projected).clone()
    })
}

/// The order-27 cochains `(s^{i₁}…, s^{i₂}t^{j₂}w^{k₂}) ↦ table[i₁][i₂ − j₂]`, `1` off the table.
pub fn reduced_2_cochain(group: &FiniteGroup, table: &[[SignedMonomial; 2]; 2]) -> Cochain<MonomialFunction> {
    Cochain::from_fn(group, 2, |g| {
        let a = g[0].s as usize;
        let c = (g[1].s as usize + 3 - g[1].t as usize) % 3;
        if a == 0 || c == 0 {
            MonomialFunction::one()
        } else {
            table[a - 1][c - 1].function()
        }
    })
}

/// `Φ(g₁, g₂, g₃) = ψ̃(g₂, g₃) / w^{k₁}ψ̃(g₂, g₃)` as a `ζ`-exponent.
pub fn big_phi(group: &FiniteGroup, psi_tilde: &Cochain<MonomialFunction>) -> Result<Cochain<u8>, CohomologyError> {
    let c = Cochain::from_fn(group, 3, |g| {
        let v = psi_tilde.get(group, &g[1..]);
        let moved = v.apply(FieldAutomorphism::w().pow(g[0].w as i64));
        (v / &moved).constant_value().and_then(|c| c.root_of_unity_exponent())
    });
    c.try_map(|v| v.ok_or(())).map_err(|(i, _)| internal(format!("Φ is not μ₃-valued at index {i}")))
}

/// `e(g₁, g₂)` with `Φ(w, g₁, g₂) = ζ^e`, for `g₁, g₂ ∈ ⟨s, t⟩`.
pub fn r_bar_phi(full: &FiniteGroup, quotient: &FiniteGroup, phi: &Cochain<u8>) -> Cochain<u8> {
    Cochain::from_fn(quotient, 2, |g| *phi.get(full, &[FieldAutomorphism::w(), g[0], g[1]]))
}

/// `Ψ(s^a t^j, s^i t^k) = ζ^{table[a−1][k]}`, `1` when `a = 0`.
pub fn big_psi(group: &FiniteGroup, table: &[[u8; 3]; 2]) -> Cochain<u8> {
    Cochain::from_fn(group, 2, |g| match g[0].s {
        0 => 0,
        a => table[a as usize - 1][g[1].t as usize],
    })
}

/// `r̄Ψ(t^j)` as the exponent `e` with `r̄Ψ(t^j)(s) = ζ^e`.
pub fn r_bar_psi(st: &FiniteGroup, t: &FiniteGroup, psi: &Cochain<u8>) -> Cochain<u8> {
    Cochain::from_fn(t, 1, |g| *psi.get(st, &[FieldAutomorphism::s(), g[0]]))
}

/// The lift `c(s) = (L(0) − L(2)) + Σ nₖDₖ` with `N·c(s) = D₂ − D₁`, and `c(s²) = c(s) + s·c(s)`.
///
/// With this lift `∂′φ′(sⁱ, sʲ) = a(i, j)·(D₂ − D₁)` on the nose.
pub fn normalized_theorem1_lift(base: &[i64; 10]) -> Result<([i64; 5], [i64; 10], [i64; 10]), CohomologyError> {
    let group = s_group();
    let div = divisor_lattice(&group)?;
    let s = FieldAutomorphism::s();
    let norm = |v: &[i64]| -> Vec<i64> {
        let a = div.apply(s, v);
        let b = div.apply(s, &a);
        (0..10).map(|i| v[i] + a[i] + b[i]).collect()
    };
    let d = d0_basis();
    let columns: Vec<Vec<i64>> = d.iter().map(|dk| norm(dk)).collect();
    let m = IntMatrix::from_rows(&columns).transpose();
    let target_base = norm(base);
    let rhs: Vec<BigInt> = (0..10).map(|i| BigInt::from(d[1][i] - d[0][i] - target_base[i])).collect();
    let n = solve_linear(&m, &rhs, Ring::Integers)?
        .ok_or_else(|| internal("N·c(s) = D₂ − D₁ has no integer solution"))?;
    let n: [i64; 5] = std::array::from_fn(|k| n[k].to_i64().expect("small"));
    let mut cs = *base;
    for (k, dk) in d.iter().enumerate() {
        for i in 0..10 {
            cs[i] += n[k] * dk[i];
        }
    }
    let moved = div.apply(s, &cs);
    let cs2: [i64; 10] = std::array::from_fn(|i| cs[i] + moved[i]);
    Ok((n, cs, cs2))
}

/// `∂′φ′` as a cochain of functions modulo constants, through `Π fₖ^{nₖ}`.
pub fn as_functions(c: &Cochain<Vec<i64>>) -> Result<Cochain<MonomialFunction>, CohomologyError> {
    c.try_map(|d| d0_coordinates(d).map(|n| d0_function(&n)).ok_or(()))
        .map_err(|(i, _)| CohomologyError::OutsideModule(format!("value at index {i} is not in 𝒟₀")))
}

/// Cube a multiplicative cochain value by value.
pub fn cube(c: &Cochain<MonomialFunction>) -> Cochain<MonomialFunction> {
    c.map(|f| f.pow(3))
}

/// `a / b` value by value.
pub fn quotient<M: GModule>(
    group: &FiniteGroup,
    module: &M,
    a: &Cochain<M::Value>,
    b: &Cochain<M::Value>,
) -> Cochain<M::Value> {
    let values = a.values().iter().zip(b.values()).map(|(x, y)| module.normalize(&module.sub(x, y))).collect();
    Cochain::from_values(group, a.degree(), values)
}

/// `dψ` for the multiplicative module over the full group.
pub fn d_multiplicative(group: &FiniteGroup, c: &Cochain<MonomialFunction>) -> Cochain<MonomialFunction> {
    differential(group, &Multiplicative::exact(), c)
}
