//! Coefficient modules: integer lattices, `μ₃`, and multiplicative groups of
//! functions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value as Json};

use super::{CohomologyError, FiniteGroup};
use crate::exact::{solve_linear, IntMatrix, Ring};
use crate::geometry::{surface_relations, FieldAutomorphism, LinearForm, MonomialFunction};

/// A `G`-module for a subgroup `G` of `⟨s, t, w⟩`, written additively.
pub trait GModule: Sync {
    type Value: Clone + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;
    fn act(&self, g: FieldAutomorphism, a: &Self::Value) -> Self::Value;

    /// Canonical representative; equality of values is tested after this.
    fn normalize(&self, a: &Self::Value) -> Self::Value {
        a.clone()
    }

    fn is_zero(&self, a: &Self::Value) -> bool {
        self.normalize(a) == self.zero()
    }

    fn equal(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.is_zero(&self.add(a, &self.neg(b)))
    }

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.neg(b))
    }

    fn encode(&self, a: &Self::Value) -> Json;
}

/// Modules with integer coordinates, so that coboundary questions become
/// linear systems.
pub trait LinearModule: GModule {
    fn lattice(&self) -> &GLattice;
    fn ring(&self) -> Ring;
    fn coords(&self, v: &Self::Value) -> Result<Vec<i64>, CohomologyError>;
    fn from_coords(&self, x: &[i64]) -> Self::Value;
}

/// `Z^rank` with a matrix for every group element (columns are images).
#[derive(Clone, Debug)]
pub struct GLattice {
    rank: usize,
    actions: Vec<Option<Vec<Vec<i64>>>>,
}

fn to_rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().expect("action matrices have small entries")
}

impl GLattice {
    /// Build from a matrix for each element of `group`; checks that the
    /// matrices are unimodular and form a homomorphism.
    pub fn new(
        rank: usize,
        group: &FiniteGroup,
        mut matrix: impl FnMut(FieldAutomorphism) -> IntMatrix,
    ) -> Result<Self, CohomologyError> {
        let mut actions = vec![None; 27];
        let mut big = Vec::with_capacity(group.order());
        for &g in group.elements() {
            let m = matrix(g);
            if m.rows() != rank || m.cols() != rank || !m.is_unimodular() {
                return Err(CohomologyError::InvalidModule(format!("matrix of {g} is not in GL({rank}, Z)")));
            }
            actions[g.index()] = Some(to_rows(&m));
            big.push(m);
        }
        for i in 0..group.order() {
            for j in 0..group.order() {
                if &big[i] * &big[j] != big[group.mul(i, j)] {
                    return Err(CohomologyError::InvalidModule(format!(
                        "action is not a homomorphism at ({}, {})",
                        group.element(i),
                        group.element(j)
                    )));
                }
            }
        }
        Ok(Self { rank, actions })
    }

    /// Trivial action on `Z^rank`.
    pub fn trivial(rank: usize) -> Self {
        let id: Vec<Vec<i64>> = (0..rank).map(|i| (0..rank).map(|j| (i == j) as i64).collect()).collect();
        Self { rank, actions: vec![Some(id); 27] }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self, g: FieldAutomorphism) -> &Vec<Vec<i64>> {
        self.actions[g.index()].as_ref().unwrap_or_else(|| panic!("{g} does not act on this lattice"))
    }

    pub fn int_matrix(&self, g: FieldAutomorphism) -> IntMatrix {
        IntMatrix::from_rows(self.matrix(g))
    }

    pub fn apply(&self, g: FieldAutomorphism, v: &[i64]) -> Vec<i64> {
        self.matrix(g).iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// The action on a `G`-stable sublattice with the given basis vectors.
    pub fn restrict(&self, group: &FiniteGroup, basis: &[Vec<i64>]) -> Result<Self, CohomologyError> {
        let b = IntMatrix::from_rows(basis).transpose();
        let k = basis.len();
        Self::new(k, group, |g| {
            let mut m = IntMatrix::zeros(k, k);
            for (j, v) in basis.iter().enumerate() {
                let image: Vec<BigInt> = self.apply(g, v).into_iter().map(Into::into).collect();
                let x = solve_linear(&b, &image, Ring::Integers)
                    .expect("dimensions")
                    .unwrap_or_else(|| panic!("sublattice is not stable under {g}"));
                for i in 0..k {
                    m[(i, j)] = x[i].clone();
                }
            }
            m
        })
    }

    /// Coordinates of `v` in a basis (columns), if it lies in the span over `Z`.
    pub fn coordinates_in(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
        let b = IntMatrix::from_rows(basis).transpose();
        let target: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
        let x = solve_linear(&b, &target, Ring::Integers).ok()??;
        Some(x.iter().map(|v| v.to_i64().expect("small")).collect())
    }
}

impl GModule for GLattice {
    type Value = Vec<i64>;

    fn zero(&self) -> Vec<i64> {
        vec![0; self.rank]
    }

    fn add(&self, a: &Vec<i64>, b: &Vec<i64>) -> Vec<i64> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn neg(&self, a: &Vec<i64>) -> Vec<i64> {
        a.iter().map(|x| -x).collect()
    }

    fn act(&self, g: FieldAutomorphism, a: &Vec<i64>) -> Vec<i64> {
        self.apply(g, a)
    }

    fn encode(&self, a: &Vec<i64>) -> Json {
        json!(a)
    }
}

impl LinearModule for GLattice {
    fn lattice(&self) -> &GLattice {
        self
    }

    fn ring(&self) -> Ring {
        Ring::Integers
    }

    fn coords(&self, v: &Vec<i64>) -> Result<Vec<i64>, CohomologyError> {
        Ok(v.clone())
    }

    fn from_coords(&self, x: &[i64]) -> Vec<i64> {
        x.to_vec()
    }
}

/// `μ₃ = {1, ζ, ζ²}` with trivial action; values are exponents of `ζ`.
#[derive(Clone, Debug)]
pub struct Mu3 {
    lattice: GLattice,
}

impl Mu3 {
    pub fn new() -> Self {
        Self { lattice: GLattice::trivial(1) }
    }
}

impl Default for Mu3 {
    fn default() -> Self {
        Self::new()
    }
}

impl GModule for Mu3 {
    type Value = u8;

    fn zero(&self) -> u8 {
        0
    }

    fn add(&self, a: &u8, b: &u8) -> u8 {
        (a + b) % 3
    }

    fn neg(&self, a: &u8) -> u8 {
        (3 - a % 3) % 3
    }

    fn act(&self, _g: FieldAutomorphism, a: &u8) -> u8 {
        *a
    }

    fn encode(&self, a: &u8) -> Json {
        json!(a)
    }
}

impl LinearModule for Mu3 {
    fn lattice(&self) -> &GLattice {
        &self.lattice
    }

    fn ring(&self) -> Ring {
        Ring::Mod3
    }

    fn coords(&self, v: &u8) -> Result<Vec<i64>, CohomologyError> {
        Ok(vec![*v as i64])
    }

    fn from_coords(&self, x: &[i64]) -> u8 {
        x[0].rem_euclid(3) as u8
    }
}

/// Nonzero functions on the surface under multiplication, optionally modulo
/// nonzero constants.
#[derive(Clone, Copy, Debug)]
pub struct Multiplicative {
    pub modulo_constants: bool,
}

impl Multiplicative {
    pub fn exact() -> Self {
        Self { modulo_constants: false }
    }

    pub fn modulo_constants() -> Self {
        Self { modulo_constants: true }
    }
}

impl GModule for Multiplicative {
    type Value = MonomialFunction;

    fn zero(&self) -> MonomialFunction {
        MonomialFunction::one()
    }

    fn add(&self, a: &MonomialFunction, b: &MonomialFunction) -> MonomialFunction {
        a * b
    }

    fn neg(&self, a: &MonomialFunction) -> MonomialFunction {
        a.inverse()
    }

    fn act(&self, g: FieldAutomorphism, a: &MonomialFunction) -> MonomialFunction {
        a.apply(g)
    }

    fn normalize(&self, a: &MonomialFunction) -> MonomialFunction {
        let c = a.canonical();
        if self.modulo_constants {
            let scalar = MonomialFunction::scalar(c.scalar_part().clone()).expect("unit");
            &c / &scalar
        } else {
            c
        }
    }

    fn encode(&self, a: &MonomialFunction) -> Json {
        json!(self.normalize(a).atom_list())
    }
}

/// Functions modulo constants generated by a finite, `G`-stable set of linear
/// forms, presented as a lattice on the forms that survive canonicalization.
#[derive(Clone, Debug)]
pub struct ExponentLattice {
    atoms: Vec<LinearForm>,
    lattice: GLattice,
}

impl ExponentLattice {
    /// Close `seeds` under `group` and under the surface relations.
    pub fn new(group: &FiniteGroup, seeds: &[LinearForm]) -> Result<Self, CohomologyError> {
        let pivots: BTreeSet<LinearForm> = surface_relations().iter().map(|r| r.pivot().clone()).collect();
        let mut atoms: BTreeSet<LinearForm> = seeds.iter().cloned().collect();
        loop {
            let mut next = atoms.clone();
            for a in &atoms {
                for &g in group.elements() {
                    let image = MonomialFunction::from_form(a.apply(g).0).canonical();
                    next.extend(image.forms().map(|(f, _)| f.clone()));
                }
                let c = MonomialFunction::from_form(a.clone()).canonical();
                next.extend(c.forms().map(|(f, _)| f.clone()));
            }
            if next.len() == atoms.len() {
                break;
            }
            atoms = next;
        }
        let atoms: Vec<LinearForm> = atoms.into_iter().filter(|a| !pivots.contains(a)).collect();
        let exps = |f: &MonomialFunction| -> Vec<i64> {
            let c = f.canonical();
            let map: BTreeMap<&LinearForm, i64> = c.forms().collect();
            atoms.iter().map(|a| map.get(a).copied().unwrap_or(0)).collect()
        };
        let n = atoms.len();
        let lattice = GLattice::new(n, group, |g| {
            let mut m = IntMatrix::zeros(n, n);
            for (j, a) in atoms.iter().enumerate() {
                let image = exps(&MonomialFunction::from_form(a.clone()).apply(g));
                for (i, v) in image.into_iter().enumerate() {
                    m[(i, j)] = v.into();
                }
            }
            m
        })?;
        Ok(Self { atoms, lattice })
    }

    pub fn atoms(&self) -> &[LinearForm] {
        &self.atoms
    }
}

impl GModule for ExponentLattice {
    type Value = MonomialFunction;

    fn zero(&self) -> MonomialFunction {
        MonomialFunction::one()
    }

    fn add(&self, a: &MonomialFunction, b: &MonomialFunction) -> MonomialFunction {
        a * b
    }

    fn neg(&self, a: &MonomialFunction) -> MonomialFunction {
        a.inverse()
    }

    fn act(&self, g: FieldAutomorphism, a: &MonomialFunction) -> MonomialFunction {
        a.apply(g)
    }

    fn normalize(&self, a: &MonomialFunction) -> MonomialFunction {
        Multiplicative::modulo_constants().normalize(a)
    }

    fn encode(&self, a: &MonomialFunction) -> Json {
        json!(self.normalize(a).atom_list())
    }
}

impl LinearModule for ExponentLattice {
    fn lattice(&self) -> &GLattice {
        &self.lattice
    }

    fn ring(&self) -> Ring {
        Ring::Integers
    }

    fn coords(&self, v: &MonomialFunction) -> Result<Vec<i64>, CohomologyError> {
        let c = v.canonical();
        let mut out = vec![0; self.atoms.len()];
        for (f, e) in c.forms() {
            let i = self
                .atoms
                .iter()
                .position(|a| a == f)
                .ok_or_else(|| CohomologyError::OutsideModule(format!("atom {f} is not in the lattice")))?;
            out[i] = e;
        }
        Ok(out)
    }

    fn from_coords(&self, x: &[i64]) -> MonomialFunction {
        self.atoms
            .iter()
            .zip(x)
            .fold(MonomialFunction::one(), |acc, (a, &e)| &acc * &MonomialFunction::from_form(a.clone()).pow(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{action_on_pic, alpha_plane, beta_plane, LinearForm};

    #[test]
    fn pic_is_a_lattice_for_the_full_group() {
        let g = FiniteGroup::full();
        let pic = GLattice::new(7, &g, |x| action_on_pic(x).unwrap()).unwrap();
        assert_eq!(pic.rank(), 7);
    }

    #[test]
    fn non_homomorphism_is_rejected() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s()]);
        // the swap has order 2, not 3
        let r = GLattice::new(2, &g, |x| {
            if x.is_identity() {
                IntMatrix::identity(2)
            } else {
                IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])
            }
        });
        assert!(r.is_err());
    }

    #[test]
    fn exponent_lattice_of_l_planes() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t()]);
        let mut seeds = vec![LinearForm::coordinate(0)];
        seeds.extend((0..3).flat_map(|i| [alpha_plane(i), beta_plane(i)]));
        let e = ExponentLattice::new(&g, &seeds).unwrap();
        // x, two α-planes (the third is eliminated), three β-planes
        assert_eq!(e.atoms().len(), 6);
        let f = &MonomialFunction::from_form(alpha_plane(2)) / &MonomialFunction::from_form(beta_plane(1));
        let c = e.coords(&f).unwrap();
        assert!(e.from_coords(&c).eq_modulo_constants(&f));
    }
}
