//! Elements of `Q(ζ)` for a primitive cube root of unity `ζ`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `a + bζ` with `ζ² + ζ + 1 = 0`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Cyclotomic {
    a: BigRational,
    b: BigRational,
}

impl Cyclotomic {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()))
    }

    pub fn rational(q: BigRational) -> Self {
        Self::new(q, BigRational::zero())
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    /// `ζ^e`, exponent taken mod 3.
    pub fn zeta_pow(e: i64) -> Self {
        match e.rem_euclid(3) {
            0 => Self::from_ints(1, 0),
            1 => Self::from_ints(0, 1),
            _ => Self::from_ints(-1, -1),
        }
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Field norm `N(a + bζ) = a² − ab + b²`.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Complex conjugate `a + bζ² = (a − b) − bζ`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Self::new(c.a / &n, c.b / n))
    }

    /// If `self = ζ^e`, returns `e ∈ {0,1,2}`.
    pub fn root_of_unity_exponent(&self) -> Option<u8> {
        (0..3u8).find(|&e| *self == Self::zeta_pow(e as i64))
    }

    /// If `self = ±ζ^e`, returns the sign (`true` for minus) and `e`.
    pub fn signed_root_of_unity(&self) -> Option<(bool, u8)> {
        if let Some(e) = self.root_of_unity_exponent() {
            return Some((false, e));
        }
        (-self.clone()).root_of_unity_exponent().map(|e| (true, e))
    }

    pub fn pow(&self, e: i64) -> Option<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Some(acc)
    }
}

impl Default for Cyclotomic {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Cyclotomic {
    fn from(v: i64) -> Self {
        Self::from_ints(v, 0)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        // (a + bζ)(c + dζ) = ac − bd + (ad + bc − bd)ζ
        let bd = &self.b * &rhs.b;
        Cyclotomic::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new(-self.a, -self.b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new(-&self.a, -&self.b)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom() == &BigInt::one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((neg, e)) = self.signed_root_of_unity() {
            let body = match e {
                0 => "1",
                1 => "ζ",
                _ => "ζ²",
            };
            return write!(f, "{}{}", if neg { "-" } else { "" }, body);
        }
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", fmt_rational(&self.a)),
            (true, false) => write!(f, "{}ζ", fmt_rational(&self.b)),
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                write!(f, "({} {} {}ζ)", fmt_rational(&self.a), sign, fmt_rational(&self.b.abs()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_relations() {
        let z = Cyclotomic::zeta_pow(1);
        let z2 = &z * &z;
        assert_eq!(z2, Cyclotomic::zeta_pow(2));
        assert!((&z2 * &z).is_one());
        let sum = &(&Cyclotomic::one() + &z) + &z2;
        assert!(sum.is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let x = Cyclotomic::from_ints(3, -7);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert!(Cyclotomic::zero().inverse().is_none());
    }

    #[test]
    fn roots_of_unity_are_recognised() {
        assert_eq!(Cyclotomic::from_ints(-1, -1).root_of_unity_exponent(), Some(2));
        assert_eq!(Cyclotomic::from_ints(1, 1).signed_root_of_unity(), Some((true, 2)));
        assert_eq!(Cyclotomic::from_ints(2, 0).root_of_unity_exponent(), None);
    }
}
