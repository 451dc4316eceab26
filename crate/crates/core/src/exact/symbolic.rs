//! The Laurent ring `Q(ζ)[α^±, γ^±, α′^±]` with `α, γ, α′` formally independent.
//!
//! `λ = α³`, `ν = γ³` and `μ = α′³` are ordinary monomials here, so the
//! ring models the generic surface over `k(λ, μ, ν)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Cyclotomic;

/// Exponents of `(α, γ, α′)`.
pub type Exponents = [i64; 3];

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct SymbolicScalar {
    terms: BTreeMap<Exponents, Cyclotomic>,
}

impl SymbolicScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::one())
    }

    pub fn constant(c: Cyclotomic) -> Self {
        Self::term(c, [0, 0, 0])
    }

    pub fn integer(v: i64) -> Self {
        Self::constant(Cyclotomic::from(v))
    }

    pub fn zeta_pow(e: i64) -> Self {
        Self::constant(Cyclotomic::zeta_pow(e))
    }

    pub fn monomial(exp: Exponents) -> Self {
        Self::term(Cyclotomic::one(), exp)
    }

    pub fn term(c: Cyclotomic, exp: Exponents) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn alpha() -> Self {
        Self::monomial([1, 0, 0])
    }

    pub fn gamma() -> Self {
        Self::monomial([0, 1, 0])
    }

    pub fn alpha_prime() -> Self {
        Self::monomial([0, 0, 1])
    }

    /// `λ = α³`.
    pub fn lambda() -> Self {
        Self::monomial([3, 0, 0])
    }

    /// `ν = γ³`.
    pub fn nu() -> Self {
        Self::monomial([0, 3, 0])
    }

    /// `μ = α′³`.
    pub fn mu() -> Self {
        Self::monomial([0, 0, 3])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self == &Self::one()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Cyclotomic)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The single term, when `self` is a unit of the ring.
    pub fn as_unit(&self) -> Option<(&Cyclotomic, Exponents)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, *e))
    }

    /// Units are exactly the nonzero single-term elements.
    pub fn inverse(&self) -> Option<Self> {
        let (c, e) = self.as_unit()?;
        Some(Self::term(c.inverse()?, [-e[0], -e[1], -e[2]]))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        Some(acc)
    }

    /// Divide by a unit.
    pub fn div_unit(&self, unit: &Self) -> Option<Self> {
        Some(self * &unit.inverse()?)
    }

    /// Apply `α ↦ ζ^a α, γ ↦ ζ^g γ, α′ ↦ ζ^p α′` for `shifts = [a, g, p]`.
    pub fn apply_root_shifts(&self, shifts: [u8; 3]) -> Self {
        let mut terms = BTreeMap::new();
        for (exp, c) in &self.terms {
            let e = exp[0] * shifts[0] as i64 + exp[1] * shifts[1] as i64 + exp[2] * shifts[2] as i64;
            let coeff = c * &Cyclotomic::zeta_pow(e);
            terms.insert(*exp, coeff);
        }
        Self { terms }
    }

    /// If `self = ±ζ^e` returns `(sign, e)`.
    pub fn signed_root_of_unity(&self) -> Option<(bool, u8)> {
        let (c, exp) = self.as_unit()?;
        if exp != [0, 0, 0] {
            return None;
        }
        c.signed_root_of_unity()
    }

    /// If `self = ζ^e` returns `e`.
    pub fn root_of_unity_exponent(&self) -> Option<u8> {
        let (c, exp) = self.as_unit()?;
        if exp != [0, 0, 0] {
            return None;
        }
        c.root_of_unity_exponent()
    }

    fn insert_add(terms: &mut BTreeMap<Exponents, Cyclotomic>, exp: Exponents, c: Cyclotomic) {
        use std::collections::btree_map::Entry;
        match terms.entry(exp) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl From<Cyclotomic> for SymbolicScalar {
    fn from(c: Cyclotomic) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a SymbolicScalar> for &'a SymbolicScalar {
    type Output = SymbolicScalar;
    fn add(self, rhs: &SymbolicScalar) -> SymbolicScalar {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            SymbolicScalar::insert_add(&mut terms, *e, c.clone());
        }
        SymbolicScalar { terms }
    }
}

impl Add for SymbolicScalar {
    type Output = SymbolicScalar;
    fn add(self, rhs: SymbolicScalar) -> SymbolicScalar {
        &self + &rhs
    }
}

impl<'a> Sub<&'a SymbolicScalar> for &'a SymbolicScalar {
    type Output = SymbolicScalar;
    fn sub(self, rhs: &SymbolicScalar) -> SymbolicScalar {
        self + &(-rhs)
    }
}

impl Sub for SymbolicScalar {
    type Output = SymbolicScalar;
    fn sub(self, rhs: SymbolicScalar) -> SymbolicScalar {
        &self - &rhs
    }
}

impl Neg for &SymbolicScalar {
    type Output = SymbolicScalar;
    fn neg(self) -> SymbolicScalar {
        SymbolicScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for SymbolicScalar {
    type Output = SymbolicScalar;
    fn neg(self) -> SymbolicScalar {
        -&self
    }
}

impl<'a> Mul<&'a SymbolicScalar> for &'a SymbolicScalar {
    type Output = SymbolicScalar;
    fn mul(self, rhs: &SymbolicScalar) -> SymbolicScalar {
        let mut terms = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                SymbolicScalar::insert_add(&mut terms, e, c1 * c2);
            }
        }
        SymbolicScalar { terms }
    }
}

impl Mul for SymbolicScalar {
    type Output = SymbolicScalar;
    fn mul(self, rhs: SymbolicScalar) -> SymbolicScalar {
        &self * &rhs
    }
}

/// Writes `α^p` as `λ^{p div 3} α^{p mod 3}` and likewise for `γ`/`ν`, `α′`/`μ`.
fn fmt_monomial(exp: &Exponents) -> String {
    let names = [("λ", "α"), ("ν", "γ"), ("μ", "α′")];
    let mut parts = Vec::new();
    for (i, (cube, root)) in names.iter().enumerate() {
        let q = exp[i].div_euclid(3);
        let r = exp[i].rem_euclid(3);
        // prefer α^{-1} over λ^{-1} α^2
        let (q, r) = if r == 2 && q < 0 { (q + 1, -1) } else { (q, r) };
        if q != 0 {
            parts.push(if q == 1 { cube.to_string() } else { format!("{cube}^{q}") });
        }
        if r != 0 {
            parts.push(if r == 1 { root.to_string() } else { format!("{root}^{r}") });
        }
    }
    parts.join("")
}

impl fmt::Display for SymbolicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = fmt_monomial(exp);
            if mono.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else if (-c).is_one() {
                write!(f, "-{mono}")?;
            } else {
                write!(f, "{c}{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_cube_names() {
        let minus_mu = -SymbolicScalar::mu();
        assert_eq!(minus_mu.to_string(), "-μ");
        assert_eq!(SymbolicScalar::mu().inverse().unwrap().to_string(), "μ^-1");
        assert_eq!(SymbolicScalar::monomial([-1, 0, 1]).to_string(), "α^-1α′");
    }

    #[test]
    fn root_shift_acts_on_coefficients() {
        let beta = SymbolicScalar::monomial([1, 1, 0]);
        let shifted = beta.apply_root_shifts([0, 1, 0]);
        assert_eq!(shifted, &SymbolicScalar::zeta_pow(1) * &beta);
        // λ is fixed by every shift
        assert_eq!(SymbolicScalar::lambda().apply_root_shifts([1, 2, 1]), SymbolicScalar::lambda());
    }

    #[test]
    fn non_units_have_no_inverse() {
        let s = &SymbolicScalar::one() + &SymbolicScalar::alpha();
        assert!(s.inverse().is_none());
    }
}
