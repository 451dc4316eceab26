use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

/// An element `s^s t^t w^w` of `Gal(k(α, γ, α′)/k) ≅ (Z/3)³`.
///
/// `s: γ ↦ ζγ`, `t: α ↦ ζα`, `w: α′ ↦ ζα′`. `s` and `t` fix `α′`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct FieldAutomorphism {
    pub s: u8,
    pub t: u8,
    pub w: u8,
}

impl FieldAutomorphism {
    pub const IDENTITY: Self = Self { s: 0, t: 0, w: 0 };

    pub fn new(s: i64, t: i64, w: i64) -> Self {
        Self {
            s: s.rem_euclid(3) as u8,
            t: t.rem_euclid(3) as u8,
            w: w.rem_euclid(3) as u8,
        }
    }

    pub fn s() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn t() -> Self {
        Self::new(0, 1, 0)
    }

    pub fn w() -> Self {
        Self::new(0, 0, 1)
    }

    /// All 27 elements in `s`-fastest order.
    pub fn all() -> Vec<Self> {
        let mut v = Vec::with_capacity(27);
        for w in 0..3 {
            for t in 0..3 {
                for s in 0..3 {
                    v.push(Self::new(s, t, w));
                }
            }
        }
        v
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    pub fn inverse(&self) -> Self {
        Self::new(-(self.s as i64), -(self.t as i64), -(self.w as i64))
    }

    pub fn pow(&self, e: i64) -> Self {
        Self::new(self.s as i64 * e, self.t as i64 * e, self.w as i64 * e)
    }

    /// Root-of-unity shifts on `(α, γ, α′)`.
    pub fn root_shifts(&self) -> [u8; 3] {
        [self.t, self.s, self.w]
    }

    /// Dense index `s + 3t + 9w`.
    pub fn index(&self) -> usize {
        self.s as usize + 3 * self.t as usize + 9 * self.w as usize
    }

    /// Parse `"s^1 t^2 w^0"`, `"s t^2"`, `"1"`, `"st"` style spellings.
    pub fn parse(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.is_empty() || text == "1" || text == "e" {
            return Some(Self::IDENTITY);
        }
        let mut exps = [0i64; 3];
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut i = 0;
        while i < chars.len() {
            let slot = match chars[i] {
                's' => 0,
                't' => 1,
                'w' => 2,
                _ => return None,
            };
            i += 1;
            let mut e = 1i64;
            if i < chars.len() && chars[i] == '^' {
                i += 1;
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '-') {
                    i += 1;
                }
                e = chars[start..i].iter().collect::<String>().parse().ok()?;
            }
            exps[slot] += e;
        }
        Some(Self::new(exps[0], exps[1], exps[2]))
    }

    /// Canonical spelling `"s^i t^j w^k"`.
    pub fn spelling(&self) -> String {
        format!("s^{} t^{} w^{}", self.s, self.t, self.w)
    }
}

impl Mul for FieldAutomorphism {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.s as i64 + rhs.s as i64,
            self.t as i64 + rhs.t as i64,
            self.w as i64 + rhs.w as i64,
        )
    }
}

impl fmt::Display for FieldAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut out = String::new();
        for (name, e) in [("s", self.s), ("t", self.t), ("w", self.w)] {
            match e {
                0 => {}
                1 => out.push_str(name),
                _ => out.push_str(&format!("{name}^{e}")),
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spellings_round_trip() {
        for g in FieldAutomorphism::all() {
            assert_eq!(FieldAutomorphism::parse(&g.spelling()), Some(g));
            assert_eq!(FieldAutomorphism::parse(&g.to_string()), Some(g));
        }
        assert_eq!(FieldAutomorphism::parse("st"), Some(FieldAutomorphism::new(1, 1, 0)));
    }

    #[test]
    fn group_law_is_componentwise() {
        let g = FieldAutomorphism::s() * FieldAutomorphism::t();
        assert_eq!(g * g * g, FieldAutomorphism::IDENTITY);
        assert_eq!(g.root_shifts(), [1, 1, 0]);
    }
}
