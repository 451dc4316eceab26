//! Homogeneous-agnostic polynomials in `x, y, z, t` over the symbolic ring,
//! used to check the surface equation and the norm relations exactly.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use super::{LinearForm, PlanePair};
use crate::exact::SymbolicScalar;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: BTreeMap<[u32; 4], SymbolicScalar>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: SymbolicScalar) -> Self {
        Self::monomial(c, [0; 4])
    }

    pub fn monomial(c: SymbolicScalar, exps: [u32; 4]) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { terms }
    }

    pub fn variable(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Self::monomial(SymbolicScalar::one(), e)
    }

    pub fn from_form(form: &LinearForm) -> Self {
        form.coeffs()
            .iter()
            .enumerate()
            .fold(Self::zero(), |acc, (i, c)| acc + Self::monomial(c.clone(), unit(i)))
    }

    /// `x³ + λy³ + μz³ + λμν t³`.
    pub fn surface() -> Self {
        let l = SymbolicScalar::lambda();
        let m = SymbolicScalar::mu();
        let n = SymbolicScalar::nu();
        let lmn = &(&l * &m) * &n;
        Self::monomial(SymbolicScalar::one(), [3, 0, 0, 0])
            + Self::monomial(l, [0, 3, 0, 0])
            + Self::monomial(m, [0, 0, 3, 0])
            + Self::monomial(lmn, [0, 0, 0, 3])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(SymbolicScalar::one()), |acc, _| &acc * self)
    }

    /// Substitute the `i`-th variable by `images[i]`.
    pub fn substitute(&self, images: &[Polynomial; 4]) -> Self {
        let mut out = Self::zero();
        for (exps, c) in &self.terms {
            let mut term = Self::constant(c.clone());
            for (img, &e) in images.iter().zip(exps) {
                term = &term * &img.pow(e);
            }
            out = out + term;
        }
        out
    }

    /// Whether the polynomial vanishes identically on the given line.
    pub fn vanishes_on(&self, line: &PlanePair) -> bool {
        let Some(param) = line.parametrization() else {
            return false;
        };
        // the two free parameters live in the `x`, `y` slots of the result
        let images: [Polynomial; 4] = std::array::from_fn(|i| {
            Self::monomial(param[i][0].clone(), unit(0)) + Self::monomial(param[i][1].clone(), unit(1))
        });
        self.substitute(&images).is_zero()
    }
}

fn unit(i: usize) -> [u32; 4] {
    let mut e = [0; 4];
    e[i] = 1;
    e
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        for (e, c) in rhs.terms {
            let sum = match self.terms.remove(&e) {
                Some(prev) => &prev + &c,
                None => c,
            };
            if !sum.is_zero() {
                self.terms.insert(e, sum);
            }
        }
        self
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + (-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = std::array::from_fn(|i| ea[i] + eb[i]);
                out = out + Polynomial::monomial(ca * cb, e);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::build_lines;

    #[test]
    fn every_line_lies_on_the_surface() {
        let f = Polynomial::surface();
        for (label, pair) in build_lines() {
            assert!(f.vanishes_on(&pair), "{label} is not on the surface");
        }
    }

    #[test]
    fn a_wrong_plane_pair_is_rejected() {
        // x + αy = z + αt = 0 misses the factor γ
        let bad = PlanePair::new(
            LinearForm::binomial(0, 1, SymbolicScalar::alpha()),
            LinearForm::binomial(2, 3, SymbolicScalar::alpha()),
        );
        assert!(!Polynomial::surface().vanishes_on(&bad));
    }

    #[test]
    fn cube_of_binomial() {
        // (x + y)³ has 4 terms with coefficients 1, 3, 3, 1
        let p = Polynomial::variable(0) + Polynomial::variable(1);
        let c = p.pow(3);
        assert_eq!(c.terms.len(), 4);
        assert_eq!(c.terms[&[2, 1, 0, 0]], SymbolicScalar::integer(3));
    }
}
