//! The explicit data the checks compare against, transcribed once.
//!
//! Each check owns a separate copy of what it reads, so perturbing a single
//! entry (see [`ReferenceTables::perturb`]) can only affect one check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::exact::SymbolicScalar;
use crate::geometry::{alpha_plane, beta_plane, FieldAutomorphism, LinearForm, MonomialFunction, PicVector};

/// `x + ζⁱαy` or `z + ζʲβt`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Plane {
    Alpha(u8),
    Beta(u8),
}

impl Plane {
    pub fn form(self) -> LinearForm {
        match self {
            Plane::Alpha(i) => alpha_plane(i as i64),
            Plane::Beta(j) => beta_plane(j as i64),
        }
    }
}

/// `div(numerator / denominator)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneQuotient {
    pub numerator: Plane,
    pub denominator: Plane,
}

impl PlaneQuotient {
    pub fn function(self) -> MonomialFunction {
        &MonomialFunction::from_form(self.numerator.form()) / &MonomialFunction::from_form(self.denominator.form())
    }

    fn inverse(self) -> Self {
        Self { numerator: self.denominator, denominator: self.numerator }
    }
}

/// `±α^a γ^b α′^c`, enough for every constant in the tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedMonomial {
    pub negative: bool,
    pub exponents: [i64; 3],
}

impl SignedMonomial {
    pub const ONE: Self = Self { negative: false, exponents: [0, 0, 0] };
    /// `−μ`
    pub const MINUS_MU: Self = Self { negative: true, exponents: [0, 0, 3] };
    /// `−μ⁻¹`
    pub const MINUS_MU_INV: Self = Self { negative: true, exponents: [0, 0, -3] };
    /// `−α′`
    pub const MINUS_ALPHA_PRIME: Self = Self { negative: true, exponents: [0, 0, 1] };
    /// `−α′⁻¹`
    pub const MINUS_ALPHA_PRIME_INV: Self = Self { negative: true, exponents: [0, 0, -1] };

    pub fn scalar(self) -> SymbolicScalar {
        let m = SymbolicScalar::monomial(self.exponents);
        if self.negative {
            -m
        } else {
            m
        }
    }

    pub fn function(self) -> MonomialFunction {
        MonomialFunction::scalar(self.scalar()).expect("monomials are units")
    }

    fn perturbed(self) -> Self {
        if self == Self::ONE {
            Self::MINUS_MU
        } else {
            Self::ONE
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryTables {
    /// `[L′(0)] = 2l − [L(0)] − [L(1)] − [M]`.
    pub class_lp0: PicVector,
    /// `[L″(0)] = l − [L(0)] − [L(2)]`.
    pub class_ldp0: PicVector,
    /// `(l, [L(0)], [L(1)], [L(2)], [M])` with `[M] = [M(0)] + [M(1)] + [M(2)]`.
    pub rank5_basis: [PicVector; 5],
    /// The displayed action of `s` on that basis; row `i` is the image of basis vector `i`.
    pub s_matrix: [[i64; 5]; 5],
    pub degree: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorTables {
    pub rank5_basis: [PicVector; 5],
    /// `φ′(1), φ′(s), φ′(s²)`.
    pub phi_prime: [PicVector; 3],
    /// `φ(s^a (st)^i)` for `a = 0, 1, 2`.
    pub phi: [PicVector; 3],
    pub tate_generator: PicVector,
    pub tate_factors: Vec<u32>,
    pub h1_factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Tables {
    pub phi_prime: [PicVector; 3],
    /// The lifts `0, L(0) − L(2), L(0) − L(1)` of the values of `φ′` in `𝒟`.
    pub lifts: [[i64; 10]; 3],
    /// `(numerator, denominator)` indices of the symbol function `f₂/f₁`.
    pub symbol: (usize, usize),
}

/// Key `(s-exponent, t-exponent)` of the first argument and `s`-exponent of the
/// reduced second argument.
pub type PartialKey = (u8, u8, u8);

/// Key `(s-exponent of the first argument, second argument (s, t), s-exponent
/// of the reduced third argument)`.
pub type DeltaKey = (u8, (u8, u8), u8);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step1Tables {
    pub phi: [PicVector; 3],
    pub lifts: [[i64; 10]; 3],
    /// `∂φ(s^a t^b, s^c)`; `None` is `0`.
    #[serde(with = "keyed")]
    pub partial_phi: BTreeMap<PartialKey, Option<PlaneQuotient>>,
    /// `δ∂φ(s^a t^j, s^i t^k, s^c)` for `a, c ∈ {1, 2}` and second argument `≠ 1`.
    #[serde(with = "keyed")]
    pub delta_partial_phi: BTreeMap<DeltaKey, SignedMonomial>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Steps2to4Tables {
    /// `ψ(s^a …, s^c w^k)` for `a, c ∈ {1, 2}`, indexed `[a − 1][c − 1]`.
    pub psi: [[SignedMonomial; 2]; 2],
    pub psi_tilde: [[SignedMonomial; 2]; 2],
    /// `Ψ(s^a t^j, s^i t^k)` as a `ζ`-exponent, indexed `[a − 1][k]`.
    pub big_psi: [[u8; 3]; 2],
    /// `r̄Ψ(t̄)(s)` as a `ζ`-exponent.
    pub r_psi_t_s: u8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceTables {
    pub geometry: GeometryTables,
    pub generators: GeneratorTables,
    pub theorem1: Theorem1Tables,
    pub step1: Step1Tables,
    pub steps2to4: Steps2to4Tables,
}

// basis order (L0, L1, L2, M0, M1, M2, l)
const L0: PicVector = [1, 0, 0, 0, 0, 0, 0];
const L1: PicVector = [0, 1, 0, 0, 0, 0, 0];
const L2: PicVector = [0, 0, 1, 0, 0, 0, 0];
const M: PicVector = [0, 0, 0, 1, 1, 1, 0];
const LINE: PicVector = [0, 0, 0, 0, 0, 0, 1];
const ZERO: PicVector = [0; 7];

fn diff(a: PicVector, b: PicVector) -> PicVector {
    std::array::from_fn(|i| a[i] - b[i])
}

// 𝒟 order (H, L0, L1, L2, Lp0, Lp1, Lp2, Ldp0, Ldp1, Ldp2)
const D_L0_MINUS_L2: [i64; 10] = [0, 1, 0, -1, 0, 0, 0, 0, 0, 0];
const D_L0_MINUS_L1: [i64; 10] = [0, 1, -1, 0, 0, 0, 0, 0, 0, 0];

/// Reference `φ` and its lifts, kept apart from the perturbable copies so that
/// later steps can rebuild `δ∂φ` independently.
pub(crate) const REFERENCE_PHI: [PicVector; 3] =
    [ZERO, [1, 0, -1, 0, 0, 0, 0], [1, -1, 0, 0, 0, 0, 0]];
/// The `s`-matrix exactly as displayed in the source. Entry `(0, 4)` is printed
/// as `2`; that sign cannot be right, since `s` fixes the hyperplane class
/// `3l − Σ[L(i)] − M` only if the entry is `−2`. The reference tables carry the
/// corrected value.
pub const DISPLAYED_S_MATRIX: [[i64; 5]; 5] = [
    [4, -1, -1, -1, 2],
    [2, -1, -1, 0, -1],
    [2, 0, -1, -1, -1],
    [2, -1, 0, -1, -1],
    [3, 0, 0, 0, -2],
];

pub(crate) const REFERENCE_LIFTS: [[i64; 10]; 3] = [[0; 10], D_L0_MINUS_L2, D_L0_MINUS_L1];

fn q(numerator: Plane, denominator: Plane) -> Option<PlaneQuotient> {
    Some(PlaneQuotient { numerator, denominator })
}

fn partial_phi_table() -> BTreeMap<PartialKey, Option<PlaneQuotient>> {
    use Plane::{Alpha as A, Beta as B};
    let mut t = BTreeMap::new();
    for a in 0..3u8 {
        for b in 0..3u8 {
            for c in 0..3u8 {
                t.insert((a, b, c), None);
            }
        }
    }
    let displayed = [
        ((1, 0, 1), q(B(1), A(2))),
        ((1, 0, 2), q(A(0), B(2))),
        ((2, 0, 1), q(A(0), B(1))),
        ((2, 0, 2), q(B(2), A(1))),
        ((1, 1, 1), q(B(2), A(0))),
        ((1, 1, 2), q(A(1), B(0))),
        ((2, 1, 1), q(A(1), B(2))),
        ((2, 1, 2), q(B(0), A(2))),
        ((1, 2, 1), q(B(0), A(1))),
        ((1, 2, 2), q(A(2), B(1))),
        ((2, 2, 1), q(A(2), B(0))),
        ((2, 2, 2), q(B(1), A(0))),
    ];
    t.extend(displayed);
    t
}

fn delta_partial_phi_table() -> BTreeMap<DeltaKey, SignedMonomial> {
    use SignedMonomial as S;
    let (one, m, mi) = (S::ONE, S::MINUS_MU, S::MINUS_MU_INV);
    // second arguments in display order: s, s², t, st, s²t, t², st², s²t²
    let seconds = [(1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2), (2, 2)];
    let first_s = [(one, m), (one, mi), (one, mi), (mi, m), (m, one), (m, one), (mi, one), (one, one)];
    let first_s2 = [(mi, one), (m, one), (one, m), (one, one), (one, mi), (mi, one), (one, m), (m, mi)];
    let mut t = BTreeMap::new();
    for (a, rows) in [(1u8, first_s), (2u8, first_s2)] {
        for (g2, (v1, v2)) in seconds.iter().zip(rows) {
            t.insert((a, *g2, 1), v1);
            t.insert((a, *g2, 2), v2);
        }
    }
    t
}

impl Default for ReferenceTables {
    fn default() -> Self {
        let rank5_basis = [LINE, L0, L1, L2, M];
        let phi = [ZERO, diff(L0, L2), diff(L0, L1)];
        debug_assert_eq!(phi, REFERENCE_PHI);
        let lifts = REFERENCE_LIFTS;
        use SignedMonomial as S;
        Self {
            geometry: GeometryTables {
                class_lp0: [-1, -1, 0, -1, -1, -1, 2],
                class_ldp0: [-1, 0, -1, 0, 0, 0, 1],
                rank5_basis,
                s_matrix: [
                    [4, -1, -1, -1, -2],
                    [2, -1, -1, 0, -1],
                    [2, 0, -1, -1, -1],
                    [2, -1, 0, -1, -1],
                    [3, 0, 0, 0, -2],
                ],
                degree: 10,
                edges: 135,
            },
            generators: GeneratorTables {
                rank5_basis,
                phi_prime: phi,
                phi,
                tate_generator: diff(L1, L0),
                tate_factors: vec![3],
                h1_factors: vec![3],
            },
            theorem1: Theorem1Tables { phi_prime: phi, lifts, symbol: (2, 1) },
            step1: Step1Tables {
                phi,
                lifts,
                partial_phi: partial_phi_table(),
                delta_partial_phi: delta_partial_phi_table(),
            },
            steps2to4: Steps2to4Tables {
                psi: [[S::MINUS_MU_INV, S::MINUS_MU], [S::MINUS_MU, S::MINUS_MU_INV]],
                psi_tilde: [
                    [S::MINUS_ALPHA_PRIME_INV, S::MINUS_ALPHA_PRIME],
                    [S::MINUS_ALPHA_PRIME, S::MINUS_ALPHA_PRIME_INV],
                ],
                big_psi: [[0, 2, 1], [0, 1, 2]],
                r_psi_t_s: 2,
            },
        }
    }
}

fn spell(s: u8, t: u8) -> String {
    FieldAutomorphism::new(s as i64, t as i64, 0).to_string()
}

impl ReferenceTables {
    /// Names of all single entries that [`perturb`](Self::perturb) accepts,
    /// paired with the check that owns them.
    pub fn entries(&self) -> Vec<(String, &'static str)> {
        let mut out = vec![
            ("geometry.class_lp0".to_string(), "geometry"),
            ("geometry.class_ldp0".to_string(), "geometry"),
            ("geometry.degree".to_string(), "geometry"),
            ("geometry.edges".to_string(), "geometry"),
        ];
        for i in 0..5 {
            out.push((format!("geometry.rank5_basis[{i}]"), "geometry"));
            for j in 0..5 {
                out.push((format!("geometry.s_matrix[{i}][{j}]"), "geometry"));
            }
        }
        for i in 0..5 {
            out.push((format!("generators.rank5_basis[{i}]"), "generators"));
        }
        for i in 0..3 {
            out.push((format!("generators.phi_prime[{i}]"), "generators"));
            out.push((format!("generators.phi[{i}]"), "generators"));
            out.push((format!("theorem1.phi_prime[{i}]"), "theorem1"));
            out.push((format!("theorem1.lifts[{i}]"), "theorem1"));
            out.push((format!("step1.phi[{i}]"), "step1"));
            out.push((format!("step1.lifts[{i}]"), "step1"));
        }
        out.push(("generators.tate_generator".into(), "generators"));
        out.push(("generators.tate_factors".into(), "generators"));
        out.push(("generators.h1_factors".into(), "generators"));
        out.push(("theorem1.symbol".into(), "theorem1"));
        for &(a, b, c) in self.step1.partial_phi.keys() {
            out.push((format!("step1.partial_phi({}, {})", spell(a, b), spell(c, 0)), "step1"));
        }
        for &(a, (i, k), c) in self.step1.delta_partial_phi.keys() {
            out.push((format!("step1.delta_partial_phi({}, {}, {})", spell(a, 0), spell(i, k), spell(c, 0)), "step1"));
        }
        for a in 0..2 {
            for c in 0..2 {
                out.push((format!("steps2to4.psi[{a}][{c}]"), "steps2to4"));
                out.push((format!("steps2to4.psi_tilde[{a}][{c}]"), "steps2to4"));
            }
            for k in 0..3 {
                out.push((format!("steps2to4.big_psi[{a}][{k}]"), "steps2to4"));
            }
        }
        out.push(("steps2to4.r_psi_t_s".into(), "steps2to4"));
        out
    }

    /// Change one named entry to a wrong value; returns `false` for unknown names.
    pub fn perturb(&mut self, name: &str) -> bool {
        let bump_pic = |v: &mut PicVector| v[6] += 1;
        let bump_div = |v: &mut [i64; 10]| v[0] += 1;
        // a unimodular change of basis would be invisible, so halve the span instead
        let double = |v: &mut PicVector| v.iter_mut().for_each(|x| *x *= 2);
        let index = |s: &str| -> Vec<usize> {
            s.split(['[', ']']).filter_map(|p| p.parse().ok()).collect()
        };
        let (prefix, _) = name.split_once(['[', '(']).unwrap_or((name, ""));
        let ix = index(name);
        match prefix {
            "geometry.class_lp0" => bump_pic(&mut self.geometry.class_lp0),
            "geometry.class_ldp0" => bump_pic(&mut self.geometry.class_ldp0),
            "geometry.degree" => self.geometry.degree += 1,
            "geometry.edges" => self.geometry.edges += 1,
            "geometry.rank5_basis" => double(&mut self.geometry.rank5_basis[ix[0]]),
            "geometry.s_matrix" => self.geometry.s_matrix[ix[0]][ix[1]] += 1,
            "generators.rank5_basis" => double(&mut self.generators.rank5_basis[ix[0]]),
            "generators.phi_prime" => bump_pic(&mut self.generators.phi_prime[ix[0]]),
            "generators.phi" => bump_pic(&mut self.generators.phi[ix[0]]),
            "generators.tate_generator" => bump_pic(&mut self.generators.tate_generator),
            "generators.tate_factors" => self.generators.tate_factors = vec![9],
            "generators.h1_factors" => self.generators.h1_factors = vec![3, 3],
            "theorem1.phi_prime" => bump_pic(&mut self.theorem1.phi_prime[ix[0]]),
            "theorem1.lifts" => bump_div(&mut self.theorem1.lifts[ix[0]]),
            "theorem1.symbol" => self.theorem1.symbol = (3, 1),
            "step1.phi" => bump_pic(&mut self.step1.phi[ix[0]]),
            "step1.lifts" => bump_div(&mut self.step1.lifts[ix[0]]),
            "step1.partial_phi" | "step1.delta_partial_phi" => {
                let Some(args) = parse_arguments(name) else { return false };
                if prefix == "step1.partial_phi" {
                    let [g1, g2] = args[..] else { return false };
                    let Some(entry) = self.step1.partial_phi.get_mut(&(g1.s, g1.t, g2.s)) else { return false };
                    *entry = match *entry {
                        Some(p) => Some(p.inverse()),
                        None => q(Plane::Alpha(0), Plane::Beta(0)),
                    };
                } else {
                    let [g1, g2, g3] = args[..] else { return false };
                    let key = (g1.s, (g2.s, g2.t), g3.s);
                    let Some(entry) = self.step1.delta_partial_phi.get_mut(&key) else { return false };
                    *entry = entry.perturbed();
                }
            }
            "steps2to4.psi" => {
                let e = &mut self.steps2to4.psi[ix[0]][ix[1]];
                *e = e.perturbed();
            }
            "steps2to4.psi_tilde" => {
                let e = &mut self.steps2to4.psi_tilde[ix[0]][ix[1]];
                *e = e.perturbed();
            }
            "steps2to4.big_psi" => {
                let e = &mut self.steps2to4.big_psi[ix[0]][ix[1]];
                *e = (*e + 1) % 3;
            }
            "steps2to4.r_psi_t_s" => self.steps2to4.r_psi_t_s = (self.steps2to4.r_psi_t_s + 1) % 3,
            _ => return false,
        }
        true
    }
}

fn parse_arguments(name: &str) -> Option<Vec<FieldAutomorphism>> {
    let inner = name.split_once('(')?.1.strip_suffix(')')?;
    inner.split(", ").map(FieldAutomorphism::parse).collect()
}

/// Serde helper for maps with tuple keys, written as lists of `[key, value]` pairs.
mod keyed {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<K: Serialize, V: Serialize, S: Serializer>(m: &BTreeMap<K, V>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(m.iter())
    }

    pub fn deserialize<'de, K, V, D>(d: D) -> Result<BTreeMap<K, V>, D::Error>
    where
        K: Deserialize<'de> + Ord,
        V: Deserialize<'de>,
        D: Deserializer<'de>,
    {
        Ok(Vec::<(K, V)>::deserialize(d)?.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_table_has_all_displayed_entries() {
        let t = ReferenceTables::default();
        assert_eq!(t.step1.delta_partial_phi.len(), 32);
        assert_eq!(t.step1.delta_partial_phi[&(1, (1, 0), 2)], SignedMonomial::MINUS_MU);
        assert_eq!(t.step1.delta_partial_phi[&(2, (2, 2), 2)], SignedMonomial::MINUS_MU_INV);
        assert_eq!(t.step1.partial_phi.len(), 27);
    }

    #[test]
    fn every_entry_can_be_perturbed() {
        let base = ReferenceTables::default();
        for (name, _) in base.entries() {
            let mut t = base.clone();
            assert!(t.perturb(&name), "{name}");
            assert_ne!(t, base, "{name}");
        }
        assert!(!base.clone().perturb("nonsense"));
    }

    #[test]
    fn tables_round_trip_through_json() {
        let t = ReferenceTables::default();
        let back: ReferenceTables = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }
}
