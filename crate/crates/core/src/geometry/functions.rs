//! Rational functions on the surface that are products of linear forms and
//! scalar units.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use super::{FieldAutomorphism, LinearForm, Polynomial};
use crate::exact::SymbolicScalar;

/// `scalar · Π formᵉ`, forms normalized with leading coefficient 1.
///
/// The scalar is always a unit of the symbolic ring (a single term).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MonomialFunction {
    scalar: SymbolicScalar,
    forms: BTreeMap<LinearForm, i64>,
}

impl MonomialFunction {
    pub fn one() -> Self {
        Self { scalar: SymbolicScalar::one(), forms: BTreeMap::new() }
    }

    /// A scalar unit; `None` if `c` is not a single term.
    pub fn scalar(c: SymbolicScalar) -> Option<Self> {
        c.inverse()?;
        Some(Self { scalar: c, forms: BTreeMap::new() })
    }

    /// A linear form, its leading coefficient moved into the scalar part.
    pub fn form(coeffs: [SymbolicScalar; 4]) -> Option<Self> {
        let (form, lead) = LinearForm::normalized(coeffs)?;
        Some(Self { scalar: lead, forms: BTreeMap::from([(form, 1)]) })
    }

    pub fn from_form(form: LinearForm) -> Self {
        Self { scalar: SymbolicScalar::one(), forms: BTreeMap::from([(form, 1)]) }
    }

    pub fn scalar_part(&self) -> &SymbolicScalar {
        &self.scalar
    }

    pub fn forms(&self) -> impl Iterator<Item = (&LinearForm, i64)> {
        self.forms.iter().map(|(f, &e)| (f, e))
    }

    /// Sum of the exponents of the linear-form atoms.
    pub fn degree(&self) -> i64 {
        self.forms.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.forms.is_empty() && self.scalar.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn pow(&self, e: i64) -> Self {
        let scalar = self.scalar.pow(e).expect("scalar part is a unit");
        let forms = if e == 0 {
            BTreeMap::new()
        } else {
            self.forms.iter().map(|(f, &x)| (f.clone(), x * e)).collect()
        };
        Self { scalar, forms }
    }

    pub fn inverse(&self) -> Self {
        self.pow(-1)
    }

    /// Apply a field automorphism to every coefficient.
    pub fn apply(&self, g: FieldAutomorphism) -> Self {
        let mut out = Self {
            scalar: self.scalar.apply_root_shifts(g.root_shifts()),
            forms: BTreeMap::new(),
        };
        for (f, &e) in &self.forms {
            let (image, lead) = f.apply(g);
            out.scalar = &out.scalar * &lead.pow(e).expect("unit");
            out.add_form(image, e);
        }
        out
    }

    fn add_form(&mut self, f: LinearForm, e: i64) {
        let entry = self.forms.entry(f).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.forms.retain(|_, v| *v != 0);
        }
    }

    /// Canonical representative modulo the norm relations that hold on the surface.
    pub fn canonical(&self) -> Self {
        let mut out = self.clone();
        if out.forms.is_empty() {
            return out;
        }
        for (rel, inverse_function) in cached_relations() {
            let e = out.forms.get(rel.pivot()).copied().unwrap_or(0);
            if e != 0 {
                out = &out * &inverse_function.pow(e);
            }
        }
        out
    }

    /// Equality as functions on the surface.
    pub fn eq_on_surface(&self, other: &Self) -> bool {
        (self / other).canonical().is_one()
    }

    /// Equality as functions on the surface modulo nonzero constants.
    pub fn eq_modulo_constants(&self, other: &Self) -> bool {
        (self / other).canonical().is_constant()
    }

    /// The constant value, provided the canonical form has no form atoms.
    pub fn constant_value(&self) -> Option<SymbolicScalar> {
        let c = self.canonical();
        c.is_constant().then_some(c.scalar)
    }

    /// Atom-exponent list, scalar first when it is not 1.
    pub fn atom_list(&self) -> Vec<(String, i64)> {
        let mut out = Vec::new();
        if !self.scalar.is_one() {
            out.push((self.scalar.to_string(), 1));
        }
        out.extend(self.forms.iter().map(|(f, &e)| (f.to_string(), e)));
        out
    }
}

impl Mul for &MonomialFunction {
    type Output = MonomialFunction;
    fn mul(self, rhs: &MonomialFunction) -> MonomialFunction {
        let mut out = self.clone();
        out.scalar = &out.scalar * &rhs.scalar;
        for (f, &e) in &rhs.forms {
            out.add_form(f.clone(), e);
        }
        out
    }
}

impl Div for &MonomialFunction {
    type Output = MonomialFunction;
    fn div(self, rhs: &MonomialFunction) -> MonomialFunction {
        self * &rhs.inverse()
    }
}

impl fmt::Display for MonomialFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num: Vec<String> = self
            .forms
            .iter()
            .filter(|(_, &e)| e > 0)
            .map(|(l, &e)| if e == 1 { format!("({l})") } else { format!("({l})^{e}") })
            .collect();
        let den: Vec<String> = self
            .forms
            .iter()
            .filter(|(_, &e)| e < 0)
            .map(|(l, &e)| if e == -1 { format!("({l})") } else { format!("({l})^{}", -e) })
            .collect();
        let mut out = String::new();
        if !self.scalar.is_one() || num.is_empty() {
            out.push_str(&self.scalar.to_string());
        }
        out.push_str(&num.join(""));
        if !den.is_empty() {
            write!(f, "{out}/{}", den.join(""))
        } else {
            write!(f, "{out}")
        }
    }
}

/// `Π numerators / Π denominators = ratio` on the surface.
#[derive(Clone, Debug)]
pub struct SurfaceRelation {
    pub numerators: [LinearForm; 3],
    pub denominators: [LinearForm; 3],
    pub ratio: SymbolicScalar,
}

impl SurfaceRelation {
    /// The atom eliminated by canonicalization.
    pub fn pivot(&self) -> &LinearForm {
        &self.numerators[2]
    }

    /// `Π num / (ratio · Π den)`, which is identically 1 on the surface.
    pub fn as_function(&self) -> MonomialFunction {
        let mut out = MonomialFunction::scalar(self.ratio.inverse().expect("unit")).expect("unit");
        for n in &self.numerators {
            out = &out * &MonomialFunction::from_form(n.clone());
        }
        for d in &self.denominators {
            out = &out / &MonomialFunction::from_form(d.clone());
        }
        out
    }

    /// Exact check `Π num − ratio · Π den = x³ + λy³ + μz³ + λμνt³`.
    pub fn holds(&self) -> bool {
        let prod = |forms: &[LinearForm; 3]| {
            forms
                .iter()
                .fold(Polynomial::constant(SymbolicScalar::one()), |acc, f| &acc * &Polynomial::from_form(f))
        };
        let lhs = prod(&self.numerators) - &Polynomial::constant(self.ratio.clone()) * &prod(&self.denominators);
        lhs == Polynomial::surface()
    }
}

fn zeta_mono(e: i64, exp: [i64; 3]) -> SymbolicScalar {
    &SymbolicScalar::zeta_pow(e) * &SymbolicScalar::monomial(exp)
}

fn cached_relations() -> &'static [(SurfaceRelation, MonomialFunction)] {
    static RELATIONS: std::sync::OnceLock<Vec<(SurfaceRelation, MonomialFunction)>> = std::sync::OnceLock::new();
    RELATIONS.get_or_init(|| {
        surface_relations()
            .into_iter()
            .map(|r| {
                let f = r.as_function().inverse();
                (r, f)
            })
            .collect()
    })
}

/// `x + ζ^i α y`.
pub fn alpha_plane(i: i64) -> LinearForm {
    LinearForm::binomial(0, 1, zeta_mono(i, [1, 0, 0]))
}

/// `z + ζ^j β t`.
pub fn beta_plane(j: i64) -> LinearForm {
    LinearForm::binomial(2, 3, zeta_mono(j, [1, 1, 0]))
}

/// The three relations coming from the factorizations of
/// `x³ + λy³`, `x³ + μz³` and `x³ + λμν t³`.
pub fn surface_relations() -> Vec<SurfaceRelation> {
    let forms = |i: usize, j: usize, exp: [i64; 3]| -> [LinearForm; 3] {
        std::array::from_fn(|k| LinearForm::binomial(i, j, zeta_mono(k as i64, exp)))
    };
    let neg = |s: SymbolicScalar| -s;
    vec![
        SurfaceRelation {
            numerators: forms(0, 1, [1, 0, 0]),
            denominators: forms(2, 3, [1, 1, 0]),
            ratio: neg(SymbolicScalar::mu()),
        },
        SurfaceRelation {
            numerators: forms(0, 2, [0, 0, 1]),
            denominators: forms(1, 3, [0, 1, 1]),
            ratio: neg(SymbolicScalar::lambda()),
        },
        SurfaceRelation {
            numerators: forms(0, 3, [1, 1, 1]),
            denominators: forms(1, 2, [-1, 0, 1]),
            ratio: neg(SymbolicScalar::lambda()),
        },
    ]
}

/// The functions `f₁ … f₅` whose divisors span `𝒟₀` (`index` in `1..=5`).
pub fn basic_function(index: usize) -> MonomialFunction {
    let x = MonomialFunction::from_form(LinearForm::coordinate(0));
    let numerator = match index {
        1 => alpha_plane(0),
        2 => alpha_plane(1),
        3 => beta_plane(0),
        4 => beta_plane(1),
        5 => beta_plane(2),
        _ => panic!("basic functions are indexed 1..=5"),
    };
    &MonomialFunction::from_form(numerator) / &x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_hold_exactly() {
        for rel in surface_relations() {
            assert!(rel.holds());
        }
    }

    #[test]
    fn perturbed_relation_fails() {
        let mut rel = surface_relations().remove(0);
        rel.ratio = SymbolicScalar::mu();
        assert!(!rel.holds());
    }

    #[test]
    fn third_alpha_plane_over_x_is_a_product_of_basic_functions() {
        // (x + ζ²αy)/x = −μ f₃f₄f₅ / (f₁f₂)
        let lhs = &MonomialFunction::from_form(alpha_plane(2)) / &MonomialFunction::from_form(LinearForm::coordinate(0));
        let f: Vec<MonomialFunction> = (1..=5).map(basic_function).collect();
        let minus_mu = MonomialFunction::scalar(-SymbolicScalar::mu()).unwrap();
        let rhs = &(&(&(&minus_mu * &f[2]) * &f[3]) * &f[4]) / &(&f[0] * &f[1]);
        assert!(lhs.eq_on_surface(&rhs));
        assert!(!lhs.eq_on_surface(&(&rhs * &minus_mu)));
    }

    #[test]
    fn leading_coefficient_moves_to_scalar() {
        let two = SymbolicScalar::integer(2);
        let f = MonomialFunction::form([two.clone(), two.clone(), SymbolicScalar::zero(), SymbolicScalar::zero()]).unwrap();
        assert_eq!(f.scalar_part(), &two);
        assert_eq!(f.degree(), 1);
    }

    #[test]
    fn action_of_s_shifts_beta_planes() {
        let f = MonomialFunction::from_form(beta_plane(0));
        let g = f.apply(FieldAutomorphism::s());
        assert_eq!(g, MonomialFunction::from_form(beta_plane(1)));
        let h = MonomialFunction::from_form(alpha_plane(0)).apply(FieldAutomorphism::t());
        assert_eq!(h, MonomialFunction::from_form(alpha_plane(1)));
    }
}
