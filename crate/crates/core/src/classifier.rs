//! Structure of `H¹(k, Pic V̄)` and `Br(V)/Br(k)` for `ax³ + by³ + cz³ + dt³ = 0`
//! from the cube classes of `λ = b/a`, `μ = c/a`, `ν = ad/(bc)`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value as Json};
use thiserror::Error;

use crate::cohomology::{bar_cohomology, CohomologyError, FiniteGroup, GLattice};
use crate::geometry::{action_on_pic, FieldAutomorphism};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifierError {
    #[error("coefficient {0} is zero")]
    ZeroCoefficient(&'static str),
    #[error("cube class component {0} is not in {{0, 1, 2}}")]
    BadComponent(u8),
    #[error("cube class has {len} components but the ambient dimension is {dim}")]
    TooManyComponents { len: usize, dim: usize },
    #[error("could not factor {0}")]
    Factorization(String),
    #[error("unexpected H¹ invariant factors {0:?}")]
    UnexpectedFactors(Vec<String>),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// Declared `dim_{F₃} k*/(k*)³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Ambient {
    Finite(usize),
    Unbounded,
}

impl Ambient {
    fn join(self, other: Self) -> Self {
        match (self, other) {
            (Ambient::Finite(a), Ambient::Finite(b)) => Ambient::Finite(a.max(b)),
            _ => Ambient::Unbounded,
        }
    }
}

/// An element of `k*/(k*)³`, written additively as a vector over `F₃`.
///
/// Missing trailing coordinates are zero, so vectors of different lengths can
/// be compared and added.
#[derive(Clone, Debug, Serialize)]
pub struct CubeClassVector {
    coords: Vec<u8>,
    ambient: Ambient,
}

impl CubeClassVector {
    pub fn new(coords: Vec<u8>, ambient: Ambient) -> Result<Self, ClassifierError> {
        if let Some(&bad) = coords.iter().find(|&&c| c > 2) {
            return Err(ClassifierError::BadComponent(bad));
        }
        if let Ambient::Finite(dim) = ambient {
            if coords.len() > dim {
                return Err(ClassifierError::TooManyComponents { len: coords.len(), dim });
            }
        }
        Ok(Self { coords, ambient })
    }

    pub fn zero(ambient: Ambient) -> Self {
        Self { coords: Vec::new(), ambient }
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    fn component(&self, i: usize) -> u8 {
        self.coords.get(i).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coords.len().max(other.coords.len());
        let coords = (0..n).map(|i| (self.component(i) + other.component(i)) % 3).collect();
        Self { coords, ambient: self.ambient.join(other.ambient) }
    }

    pub fn neg(&self) -> Self {
        Self { coords: self.coords.iter().map(|&c| (3 - c) % 3).collect(), ambient: self.ambient }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: u8) -> Self {
        Self { coords: self.coords.iter().map(|&c| (c * (k % 3)) % 3).collect(), ambient: self.ambient }
    }
}

impl PartialEq for CubeClassVector {
    fn eq(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }
}

impl Eq for CubeClassVector {}

/// Every vector of `F₃^m`, in lexicographic order.
pub fn all_classes(m: usize) -> Vec<CubeClassVector> {
    (0..3usize.pow(m as u32))
        .map(|mut n| {
            let coords = (0..m)
                .map(|_| {
                    let c = (n % 3) as u8;
                    n /= 3;
                    c
                })
                .collect();
            CubeClassVector { coords, ambient: Ambient::Finite(m) }
        })
        .collect()
}

/// A lazily grown list of primes used as coordinates for classes in `Q*/(Q*)³`.
///
/// `−1 = (−1)³` is a cube, so signs never contribute.
#[derive(Clone, Debug, Default)]
pub struct PrimeBasis {
    primes: Vec<BigUint>,
}

impl PrimeBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn primes(&self) -> &[BigUint] {
        &self.primes
    }

    /// Exponents mod 3 of `q` on this basis, appending unseen primes in increasing order.
    pub fn class_of(&mut self, q: &BigRational) -> Result<CubeClassVector, ClassifierError> {
        if q.is_zero() {
            return Err(ClassifierError::ZeroCoefficient("q"));
        }
        let mut exponents: Vec<(BigUint, i64)> = Vec::new();
        for (part, sign) in [(q.numer(), 1), (q.denom(), -1)] {
            for (p, e) in factor(part)? {
                exponents.push((p, sign * e as i64));
            }
        }
        exponents.sort();
        let mut coords = vec![0u8; self.primes.len()];
        for (p, e) in exponents {
            let r = e.rem_euclid(3) as u8;
            let pos = match self.primes.iter().position(|x| *x == p) {
                Some(pos) => pos,
                None if r == 0 => continue,
                None => {
                    self.primes.push(p);
                    coords.push(0);
                    self.primes.len() - 1
                }
            };
            coords[pos] = (coords[pos] + r) % 3;
        }
        Ok(CubeClassVector { coords, ambient: Ambient::Unbounded })
    }
}

fn factor(n: &BigInt) -> Result<Vec<(BigUint, usize)>, ClassifierError> {
    let n = n.abs().to_biguint().expect("absolute value");
    if n.is_one() {
        return Ok(Vec::new());
    }
    let (found, rest) = num_prime::nt_funcs::factors(n.clone(), None);
    if rest.is_some() {
        return Err(ClassifierError::Factorization(n.to_string()));
    }
    Ok(found.into_iter().collect())
}

/// Class of a nonzero rational in `Q*/(Q*)³` on a fresh prime basis.
///
/// This is also its class in `Q(ζ)*/(Q(ζ)*)³`: if `q = c³` with `c ∈ Q(ζ)`,
/// taking norms gives `q² = N(c)³`, so `q = (q/N(c))³` is already a cube in `Q`.
pub fn cube_class_rational(q: &BigRational) -> Result<(Vec<BigUint>, CubeClassVector), ClassifierError> {
    let mut basis = PrimeBasis::new();
    let v = basis.class_of(q)?;
    Ok((basis.primes, v))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficients {
    Rational([BigRational; 4]),
    Classes { lambda: CubeClassVector, mu: CubeClassVector, nu: CubeClassVector },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceInput {
    pub coefficients: Coefficients,
    pub has_rational_point: Option<bool>,
    pub cd_at_most_2: Option<bool>,
}

impl SurfaceInput {
    pub fn rational(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Result<Self, ClassifierError> {
        for (name, v) in [("a", &a), ("b", &b), ("c", &c), ("d", &d)] {
            if v.is_zero() {
                return Err(ClassifierError::ZeroCoefficient(name));
            }
        }
        Ok(Self { coefficients: Coefficients::Rational([a, b, c, d]), has_rational_point: None, cd_at_most_2: None })
    }

    pub fn from_integers(a: i64, b: i64, c: i64, d: i64) -> Result<Self, ClassifierError> {
        let q = |x: i64| BigRational::from_integer(x.into());
        Self::rational(q(a), q(b), q(c), q(d))
    }

    pub fn classes(lambda: CubeClassVector, mu: CubeClassVector, nu: CubeClassVector) -> Self {
        Self { coefficients: Coefficients::Classes { lambda, mu, nu }, has_rational_point: None, cd_at_most_2: None }
    }

    pub fn with_flags(mut self, has_rational_point: Option<bool>, cd_at_most_2: Option<bool>) -> Self {
        self.has_rational_point = has_rational_point;
        self.cd_at_most_2 = cd_at_most_2;
        self
    }
}

/// Cube classes of `λ, μ, ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizedClasses {
    pub lambda: CubeClassVector,
    pub mu: CubeClassVector,
    pub nu: CubeClassVector,
    /// The prime basis in rational mode.
    pub primes: Option<Vec<BigUint>>,
}

pub fn normalize(input: &SurfaceInput) -> Result<NormalizedClasses, ClassifierError> {
    match &input.coefficients {
        Coefficients::Classes { lambda, mu, nu } => {
            Ok(NormalizedClasses { lambda: lambda.clone(), mu: mu.clone(), nu: nu.clone(), primes: None })
        }
        Coefficients::Rational([a, b, c, d]) => {
            for (name, v) in [("a", a), ("b", b), ("c", c), ("d", d)] {
                if v.is_zero() {
                    return Err(ClassifierError::ZeroCoefficient(name));
                }
            }
            let mut basis = PrimeBasis::new();
            let lambda = basis.class_of(&(b / a))?;
            let mu = basis.class_of(&(c / a))?;
            let nu = basis.class_of(&(a * d / (b * c)))?;
            Ok(NormalizedClasses { lambda, mu, nu, primes: Some(basis.primes) })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum StructureKind {
    Trivial,
    Z3,
    Z3Squared,
}

impl StructureKind {
    /// Invariant factors of the group.
    pub fn factors(self) -> Vec<u32> {
        match self {
            StructureKind::Trivial => vec![],
            StructureKind::Z3 => vec![3],
            StructureKind::Z3Squared => vec![3, 3],
        }
    }

    pub fn from_factors(factors: &[BigInt]) -> Result<Self, ClassifierError> {
        let three = BigInt::from(3);
        match factors {
            [] => Ok(StructureKind::Trivial),
            [a] if *a == three => Ok(StructureKind::Z3),
            [a, b] if *a == three && *b == three => Ok(StructureKind::Z3Squared),
            _ => Err(ClassifierError::UnexpectedFactors(factors.iter().map(|f| f.to_string()).collect())),
        }
    }
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::Trivial => "0",
            StructureKind::Z3 => "Z/3",
            StructureKind::Z3Squared => "(Z/3)^2",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    /// Only `H¹(k, Pic V̄)` is determined; `Br(V)/Br(k)` embeds into it.
    H1Only,
    /// `Br(V)/Br(k) ≅ H¹(k, Pic V̄)`, licensed by a rational point or `cd(k) ≤ 2`.
    EqualsBrQuotient,
}

impl Certainty {
    pub fn as_str(self) -> &'static str {
        match self {
            Certainty::H1Only => "h1_only",
            Certainty::EqualsBrQuotient => "equals_br_quotient",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BrauerStructure {
    pub kind: StructureKind,
    pub tag: Certainty,
}

const SIX_NAMES: [&str; 6] = ["λ", "μ", "λ/μ", "λμν", "λν", "μν"];

fn six_combinations(lambda: &CubeClassVector, mu: &CubeClassVector, nu: &CubeClassVector) -> [CubeClassVector; 6] {
    [
        lambda.clone(),
        mu.clone(),
        lambda.sub(mu),
        lambda.add(mu).add(nu),
        lambda.add(nu),
        mu.add(nu),
    ]
}

/// The case split for `H¹(k, Pic V̄)`, with a sentence naming the deciding condition.
pub fn classify_h1_with_condition(
    lambda: &CubeClassVector,
    mu: &CubeClassVector,
    nu: &CubeClassVector,
) -> (BrauerStructure, String) {
    let tag = Certainty::H1Only;
    let trivial = [("ν", nu.clone()), ("ν/λ", nu.sub(lambda)), ("ν/μ", nu.sub(mu))];
    if let Some((name, _)) = trivial.iter().find(|(_, v)| v.is_zero()) {
        return (BrauerStructure { kind: StructureKind::Trivial, tag }, format!("{name} is a cube"));
    }
    let cubes: Vec<&str> = six_combinations(lambda, mu, nu)
        .iter()
        .zip(SIX_NAMES)
        .filter(|(v, _)| v.is_zero())
        .map(|(_, n)| n)
        .collect();
    if cubes.len() == 3 {
        let cond = format!("exactly three of λ, μ, λ/μ, λμν, λν, μν are cubes ({})", cubes.join(", "));
        return (BrauerStructure { kind: StructureKind::Z3Squared, tag }, cond);
    }
    let cond = format!(
        "none of ν, ν/λ, ν/μ is a cube and {} of λ, μ, λ/μ, λμν, λν, μν are cubes",
        cubes.len()
    );
    (BrauerStructure { kind: StructureKind::Z3, tag }, cond)
}

pub fn classify_h1(lambda: &CubeClassVector, mu: &CubeClassVector, nu: &CubeClassVector) -> BrauerStructure {
    classify_h1_with_condition(lambda, mu, nu).0
}

/// Whether two of `a, b, c, d` have the same cube class, giving a point `(u : −1 : 0 : 0)`
/// up to permutation of the coordinates.
///
/// The six ratios `b/a, c/a, c/b, d/a, d/b, d/c` are `λ, μ, μ/λ, λμν, μν, λν`, so
/// the test only needs the normalized classes. Each of the five normal forms
/// `x³+y³+z³+t³`, `x³+y³+z³+vt³`, `x³+y³+z³+v²t³`, `x³+y³+vz³+vt³`,
/// `x³+y³+vz³+v²t³` has two equal coefficients and is caught by this test.
pub fn has_obvious_rational_point(input: &SurfaceInput) -> Result<bool, ClassifierError> {
    let n = normalize(input)?;
    Ok(six_combinations(&n.lambda, &n.mu, &n.nu).iter().any(CubeClassVector::is_zero))
}

/// Condition (3) on the field: `dim_{F₃} k*/(k*)³ ≥ 2`.
pub fn c_of_k_condition(m: Ambient) -> bool {
    match m {
        Ambient::Finite(m) => m >= 2,
        Ambient::Unbounded => true,
    }
}

/// Full answer for one surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub structure: BrauerStructure,
    pub condition: String,
    pub generator: Option<String>,
    pub classes: NormalizedClasses,
}

impl Classification {
    pub fn to_json(&self) -> Json {
        let mut out = json!({
            "structure": format!("{:?}", self.structure.kind),
            "tag": self.structure.tag.as_str(),
            "condition": self.condition,
        });
        if let Some(g) = &self.generator {
            out["generator"] = json!(g);
        }
        out
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "structure: {:?} ({})", self.structure.kind, self.structure.kind)?;
        writeln!(f, "tag: {}", self.structure.tag.as_str())?;
        write!(f, "condition: {}", self.condition)?;
        if let Some(g) = &self.generator {
            write!(f, "\ngenerator: {g}")?;
        }
        Ok(())
    }
}

pub fn brauer_quotient(input: &SurfaceInput) -> Result<BrauerStructure, ClassifierError> {
    Ok(classify(input)?.structure)
}

/// Classify, decide the certainty tag and, where available, name a generator.
pub fn classify(input: &SurfaceInput) -> Result<Classification, ClassifierError> {
    let classes = normalize(input)?;
    let (mut structure, mut condition) = classify_h1_with_condition(&classes.lambda, &classes.mu, &classes.nu);
    let obvious = has_obvious_rational_point(input)?;
    let mut licences = Vec::new();
    if input.has_rational_point == Some(true) {
        licences.push("V(k) ≠ ∅ (given)");
    } else if obvious {
        licences.push("V(k) ≠ ∅ (two coefficients share a cube class)");
    }
    if input.cd_at_most_2 == Some(true) {
        licences.push("cd(k) ≤ 2 (given)");
    }
    if !licences.is_empty() {
        structure.tag = Certainty::EqualsBrQuotient;
        condition = format!("{condition}; Br(V)/Br(k) ≅ H¹ since {}", licences.join(" and "));
    }
    let generator = match (&input.coefficients, structure.kind) {
        (Coefficients::Rational([a, b, c, d]), StructureKind::Z3)
            if a == b && structure.tag == Certainty::EqualsBrQuotient =>
        {
            Some(format!("{{{}, (x+ζy)/(x+y)}}_3", d / c))
        }
        (_, StructureKind::Z3Squared) => Some("see Manin".to_string()),
        _ => None,
    };
    Ok(Classification { structure, condition, generator, classes })
}

/// `Gal(k(α, γ, α′)/k) ⊆ ⟨s, t, w⟩` for the given cube classes.
///
/// By Kummer theory the image is the annihilator of the relations
/// `{(x, y, z) : λˣνʸμᶻ is a cube}` under the pairing with the root shifts of
/// `t` (on `α`), `s` (on `γ`) and `w` (on `α′`).
pub fn galois_image(lambda: &CubeClassVector, mu: &CubeClassVector, nu: &CubeClassVector) -> FiniteGroup {
    let mut relations = Vec::new();
    for x in 0..3u8 {
        for y in 0..3u8 {
            for z in 0..3u8 {
                if lambda.scale(x).add(&nu.scale(y)).add(&mu.scale(z)).is_zero() {
                    relations.push((x, y, z));
                }
            }
        }
    }
    let elements = FieldAutomorphism::all()
        .into_iter()
        .filter(|g| relations.iter().all(|&(x, y, z)| (x * g.t + y * g.s + z * g.w) % 3 == 0))
        .collect();
    FiniteGroup::from_elements(elements).expect("annihilators are subgroups")
}

fn h1_cache() -> &'static Mutex<HashMap<Vec<FieldAutomorphism>, StructureKind>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<FieldAutomorphism>, StructureKind>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `H¹(G, Pic V̄)` for the Galois image of the classes, by bar cohomology.
pub fn h1_by_bar_cohomology(
    lambda: &CubeClassVector,
    mu: &CubeClassVector,
    nu: &CubeClassVector,
) -> Result<StructureKind, ClassifierError> {
    let group = galois_image(lambda, mu, nu);
    let key = group.elements().to_vec();
    if let Some(kind) = h1_cache().lock().expect("cache lock").get(&key) {
        return Ok(*kind);
    }
    let mut failure = None;
    let lattice = GLattice::new(7, &group, |g| {
        action_on_pic(g).unwrap_or_else(|e| {
            failure = Some(e.to_string());
            crate::exact::IntMatrix::identity(7)
        })
    })?;
    if let Some(e) = failure {
        return Err(CohomologyError::Internal(e).into());
    }
    let kind = StructureKind::from_factors(&bar_cohomology(&group, &lattice, 1)?)?;
    h1_cache().lock().expect("cache lock").insert(key, kind);
    Ok(kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn v(c: &[u8]) -> CubeClassVector {
        CubeClassVector::new(c.to_vec(), Ambient::Unbounded).unwrap()
    }

    #[test]
    fn rational_cube_classes() {
        let (_, eight) = cube_class_rational(&q(8, 1)).unwrap();
        assert!(eight.is_zero());
        let (p, six) = cube_class_rational(&q(6, 1)).unwrap();
        assert_eq!(p, vec![BigUint::from(2u8), BigUint::from(3u8)]);
        assert_eq!(six.coords(), &[1, 1]);
        let (p, r) = cube_class_rational(&q(3, 2)).unwrap();
        assert_eq!(p, vec![BigUint::from(2u8), BigUint::from(3u8)]);
        assert_eq!(r.coords(), &[2, 1]);
        let (_, neg) = cube_class_rational(&q(-27, 8)).unwrap();
        assert!(neg.is_zero());
    }

    #[test]
    fn shared_basis_keeps_old_vectors_valid() {
        let mut basis = PrimeBasis::new();
        let a = basis.class_of(&q(5, 1)).unwrap();
        let b = basis.class_of(&q(10, 1)).unwrap();
        assert_eq!(basis.primes().len(), 2);
        assert_eq!(b.sub(&a), v(&[0, 1]));
    }

    #[test]
    fn normalize_examples() {
        let n = normalize(&SurfaceInput::from_integers(1, 1, 2, 3).unwrap()).unwrap();
        assert!(n.lambda.is_zero());
        // primes (2, 3): μ = 2, ν = 3/2
        assert_eq!(n.mu, v(&[1]));
        assert_eq!(n.nu, v(&[2, 1]));
        let n = normalize(&SurfaceInput::from_integers(2, 2, 2, 2).unwrap()).unwrap();
        assert!(n.lambda.is_zero() && n.mu.is_zero() && n.nu.is_zero());
        let n = normalize(&SurfaceInput::from_integers(1, 1, 1, 7).unwrap()).unwrap();
        assert!(n.lambda.is_zero() && n.mu.is_zero());
        assert_eq!(n.nu, cube_class_rational(&q(7, 1)).unwrap().1);
    }

    #[test]
    fn zero_coefficient_is_rejected() {
        assert_eq!(SurfaceInput::from_integers(1, 0, 1, 1), Err(ClassifierError::ZeroCoefficient("b")));
    }

    #[test]
    fn h1_cases() {
        let zero = v(&[]);
        assert_eq!(classify_h1(&zero, &zero, &v(&[1])).kind, StructureKind::Z3Squared);
        assert_eq!(classify_h1(&v(&[1]), &v(&[0, 1]), &zero).kind, StructureKind::Trivial);
        assert_eq!(classify_h1(&zero, &v(&[1]), &v(&[2, 1])).kind, StructureKind::Z3);
    }

    #[test]
    fn obvious_points() {
        let has = |a, b, c, d| has_obvious_rational_point(&SurfaceInput::from_integers(a, b, c, d).unwrap()).unwrap();
        assert!(has(1, 1, 2, 3));
        assert!(!has(1, 2, 4, 3));
        assert!(has(1, 8, 2, 3));
    }

    #[test]
    fn quotient_tags() {
        let r = brauer_quotient(&SurfaceInput::from_integers(1, 1, 2, 3).unwrap()).unwrap();
        assert_eq!(r, BrauerStructure { kind: StructureKind::Z3, tag: Certainty::EqualsBrQuotient });
        let generic = SurfaceInput::classes(v(&[1]), v(&[0, 1]), v(&[0, 0, 1]));
        let r = brauer_quotient(&generic).unwrap();
        assert_eq!(r, BrauerStructure { kind: StructureKind::Z3, tag: Certainty::H1Only });
        let r = brauer_quotient(&generic.with_flags(None, Some(true))).unwrap();
        assert_eq!(r.tag, Certainty::EqualsBrQuotient);
    }

    #[test]
    fn symbol_generator_string() {
        let c = classify(&SurfaceInput::from_integers(1, 1, 2, 3).unwrap()).unwrap();
        assert_eq!(c.generator.as_deref(), Some("{3/2, (x+ζy)/(x+y)}_3"));
        let c = classify(&SurfaceInput::from_integers(1, 1, 1, 2).unwrap()).unwrap();
        assert_eq!(c.structure.kind, StructureKind::Z3Squared);
        assert_eq!(c.generator.as_deref(), Some("see Manin"));
    }

    #[test]
    fn c_of_k() {
        assert!(c_of_k_condition(Ambient::Finite(2)));
        assert!(!c_of_k_condition(Ambient::Finite(1)));
        assert!(!c_of_k_condition(Ambient::Finite(0)));
    }

    #[test]
    fn galois_images() {
        let zero = v(&[]);
        assert_eq!(galois_image(&zero, &zero, &zero).order(), 1);
        let g = galois_image(&zero, &zero, &v(&[1]));
        assert_eq!(g.elements(), &[FieldAutomorphism::IDENTITY, FieldAutomorphism::s(), FieldAutomorphism::s().pow(2)]);
        assert_eq!(galois_image(&v(&[1]), &v(&[0, 1]), &v(&[0, 0, 1])).order(), 27);
    }

    #[test]
    fn bar_cohomology_agrees_on_three_instances() {
        for ((a, b, c, d), want) in [
            ((1, 1, 1, 2), StructureKind::Z3Squared),
            ((1, 1, 2, 3), StructureKind::Z3),
            ((1, 2, 3, 6 * 8), StructureKind::Trivial),
        ] {
            let n = normalize(&SurfaceInput::from_integers(a, b, c, d).unwrap()).unwrap();
            assert_eq!(classify_h1(&n.lambda, &n.mu, &n.nu).kind, want);
            assert_eq!(h1_by_bar_cohomology(&n.lambda, &n.mu, &n.nu).unwrap(), want, "{a} {b} {c} {d}");
        }
    }
}
