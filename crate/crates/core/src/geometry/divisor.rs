//! The rank-10 lattice `𝒟 = ZH ⊕ ⊕ZL(i) ⊕ ⊕ZL′(i) ⊕ ⊕ZL″(i)` and divisors of
//! functions supported on it.

use std::sync::OnceLock;

use num_traits::ToPrimitive;

use super::pic::{apply_matrix, IncidenceGraph, LineTable, PicVector, HYPERPLANE};
use super::{
    action_on_lines, basic_function, FieldAutomorphism, GeometryError, LineFamily, LineLabel, LinearForm,
    MonomialFunction,
};
use crate::exact::IntMatrix;

/// Coordinates in `(H, L(0..3), L′(0..3), L″(0..3))`.
pub type DivisorVector = [i64; 10];

pub const DIVISOR_BASIS_NAMES: [&str; 10] = ["H", "L0", "L1", "L2", "Lp0", "Lp1", "Lp2", "Ldp0", "Ldp1", "Ldp2"];

/// Position of a line in the `𝒟` basis, if it belongs to the `L` families.
pub fn divisor_index(label: LineLabel) -> Option<usize> {
    let base = match label.family {
        LineFamily::L => 1,
        LineFamily::Lp => 4,
        LineFamily::Ldp => 7,
        _ => return None,
    };
    Some(base + label.index as usize)
}

/// The `𝒟` basis element for a line of the `L` families.
pub fn line_divisor(label: LineLabel) -> DivisorVector {
    let mut d = [0; 10];
    d[divisor_index(label).expect("line in 𝒟")] = 1;
    d
}

pub fn add(a: &DivisorVector, b: &DivisorVector) -> DivisorVector {
    std::array::from_fn(|i| a[i] + b[i])
}

pub fn sub(a: &DivisorVector, b: &DivisorVector) -> DivisorVector {
    std::array::from_fn(|i| a[i] - b[i])
}

pub fn scale(a: &DivisorVector, k: i64) -> DivisorVector {
    a.map(|x| x * k)
}

/// Hyperplane sections whose divisors lie in `𝒟`, with their divisors.
fn supported_planes() -> &'static Vec<(LinearForm, DivisorVector)> {
    static PLANES: OnceLock<Vec<(LinearForm, DivisorVector)>> = OnceLock::new();
    PLANES.get_or_init(|| {
        let table = LineTable::get();
        let mut out = vec![(LinearForm::coordinate(0), {
            let mut h = [0; 10];
            h[0] = 1;
            h
        })];
        for i in 0..3 {
            for form in [super::alpha_plane(i), super::beta_plane(i)] {
                let mut d = [0; 10];
                for (label, pair) in table.lines() {
                    if pair.lies_in_plane(&form) {
                        d[divisor_index(*label).expect("plane meets only L-family lines")] += 1;
                    }
                }
                assert_eq!(d.iter().sum::<i64>(), 3, "a plane section is three lines");
                out.push((form, d));
            }
        }
        out
    })
}

/// Lines of the surface contained in the plane `form = 0`.
pub fn lines_in_plane(form: &LinearForm) -> Vec<LineLabel> {
    LineTable::get()
        .lines()
        .iter()
        .filter(|(_, pair)| pair.lies_in_plane(form))
        .map(|(l, _)| *l)
        .collect()
}

/// Divisor of a degree-0 function whose form atoms cut out elements of `𝒟`.
pub fn divisor_of_function(f: &MonomialFunction) -> Result<DivisorVector, GeometryError> {
    if f.degree() != 0 {
        return Err(GeometryError::Inhomogeneous(f.degree()));
    }
    let planes = supported_planes();
    let mut out = [0; 10];
    for (form, e) in f.forms() {
        let (_, d) = planes
            .iter()
            .find(|(p, _)| p == form)
            .ok_or_else(|| GeometryError::DivisorOutsideD(form.to_string()))?;
        for i in 0..10 {
            out[i] += e * d[i];
        }
    }
    Ok(out)
}

/// `D₁ … D₅ = div f₁ … div f₅`, a basis of `𝒟₀`.
pub fn d0_basis() -> [DivisorVector; 5] {
    std::array::from_fn(|i| divisor_of_function(&basic_function(i + 1)).expect("basic functions lie in 𝒟"))
}

/// `Σ nₖ Dₖ`.
pub fn d0_combination(n: &[i64; 5]) -> DivisorVector {
    let basis = d0_basis();
    let mut out = [0; 10];
    for (k, d) in basis.iter().enumerate() {
        for i in 0..10 {
            out[i] += n[k] * d[i];
        }
    }
    out
}

/// Matrix of `g` on `𝒟` (columns are images of basis vectors).
pub fn action_on_divisors(g: FieldAutomorphism) -> Result<IntMatrix, GeometryError> {
    let perm = action_on_lines(g)?;
    let mut m = IntMatrix::zeros(10, 10);
    m[(0, 0)] = 1.into();
    for label in LineLabel::all() {
        let Some(j) = divisor_index(label) else { continue };
        let image = perm[label.ordinal()];
        let i = divisor_index(image)
            .ok_or_else(|| GeometryError::Inconsistent(format!("{g} moves {label} out of 𝒟")))?;
        m[(i, j)] = 1.into();
    }
    Ok(m)
}

pub fn apply_to_divisor(m: &IntMatrix, d: &DivisorVector) -> DivisorVector {
    let big: Vec<_> = d.iter().map(|&x| x.into()).collect();
    let out = m.mul_vec(&big);
    std::array::from_fn(|i| out[i].to_i64().expect("small entries"))
}

/// The class of a divisor in `Pic`.
pub fn divisor_class(d: &DivisorVector) -> Result<PicVector, GeometryError> {
    let graph = IncidenceGraph::get();
    let mut out = HYPERPLANE.map(|x| x * d[0]);
    for label in LineLabel::all() {
        if let Some(i) = divisor_index(label) {
            let c = graph.class_of_line(label)?;
            for k in 0..7 {
                out[k] += d[i] * c[k];
            }
        }
    }
    Ok(out)
}

/// Matrix of the class map `𝒟 → Pic` (7×10).
pub fn class_map() -> Result<IntMatrix, GeometryError> {
    let mut m = IntMatrix::zeros(7, 10);
    for j in 0..10 {
        let mut e = [0; 10];
        e[j] = 1;
        let c = divisor_class(&e)?;
        for i in 0..7 {
            m[(i, j)] = c[i].into();
        }
    }
    Ok(m)
}

/// `Pic` vector images under `g` through the divisor action, for cross-checks.
pub fn class_equivariance_defect(g: FieldAutomorphism) -> Result<Option<usize>, GeometryError> {
    let dm = action_on_divisors(g)?;
    let pm = super::action_on_pic(g)?;
    for j in 0..10 {
        let mut e = [0; 10];
        e[j] = 1;
        let lhs = divisor_class(&apply_to_divisor(&dm, &e))?;
        let rhs = apply_matrix(&pm, &divisor_class(&e)?);
        if lhs != rhs {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::SymbolicScalar;

    #[test]
    fn displayed_divisors() {
        let d = d0_basis();
        // D₁ = L(0)+L′(0)+L″(0) − H,  D₃ = L(0)+L′(2)+L″(1) − H
        assert_eq!(d[0], [-1, 1, 0, 0, 1, 0, 0, 1, 0, 0]);
        assert_eq!(d[2], [-1, 1, 0, 0, 0, 0, 1, 0, 1, 0]);
        // D₄ = L(1)+L′(0)+L″(2) − H,  D₅ = L(2)+L′(1)+L″(0) − H
        assert_eq!(d[3], [-1, 0, 1, 0, 1, 0, 0, 0, 0, 1]);
        assert_eq!(d[4], [-1, 0, 0, 1, 0, 1, 0, 1, 0, 0]);
    }

    #[test]
    fn constants_and_bad_atoms() {
        let c = MonomialFunction::scalar(-SymbolicScalar::mu()).unwrap();
        assert_eq!(divisor_of_function(&c).unwrap(), [0; 10]);
        let y_over_x = &MonomialFunction::from_form(LinearForm::coordinate(1))
            / &MonomialFunction::from_form(LinearForm::coordinate(0));
        assert!(matches!(divisor_of_function(&y_over_x), Err(GeometryError::DivisorOutsideD(_))));
        let x = MonomialFunction::from_form(LinearForm::coordinate(0));
        assert!(matches!(divisor_of_function(&x), Err(GeometryError::Inhomogeneous(1))));
    }

    #[test]
    fn d0_maps_to_zero_in_pic() {
        for d in d0_basis() {
            assert_eq!(divisor_class(&d).unwrap(), [0; 7]);
        }
        for g in FieldAutomorphism::all() {
            assert_eq!(class_equivariance_defect(g).unwrap(), None);
        }
    }
}
