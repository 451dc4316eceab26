//! Incidence graph, line classes in the Picard lattice and the Galois action.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{build_lines, lines_intersect, FieldAutomorphism, GeometryError, LineFamily, LineLabel, LinearForm, PlanePair};
use crate::exact::{hermite_basis, integer_kernel, IntMatrix};

/// Coordinates in the basis `([L(0)], [L(1)], [L(2)], [M(0)], [M(1)], [M(2)], l)`.
pub type PicVector = [i64; 7];

pub const PIC_BASIS_NAMES: [&str; 7] = ["L0", "L1", "L2", "M0", "M1", "M2", "l"];

/// Hyperplane class `h = 3l − Σ eᵢ`.
pub const HYPERPLANE: PicVector = [-1, -1, -1, -1, -1, -1, 3];

/// The six blown-down lines, in basis order.
pub fn exceptional_lines() -> [LineLabel; 6] {
    [
        LineLabel::new(LineFamily::L, 0),
        LineLabel::new(LineFamily::L, 1),
        LineLabel::new(LineFamily::L, 2),
        LineLabel::new(LineFamily::M, 0),
        LineLabel::new(LineFamily::M, 1),
        LineLabel::new(LineFamily::M, 2),
    ]
}

/// Intersection pairing with form `diag(−1, −1, −1, −1, −1, −1, 1)`.
pub fn intersection(a: &PicVector, b: &PicVector) -> i64 {
    a[6] * b[6] - (0..6).map(|i| a[i] * b[i]).sum::<i64>()
}

pub fn intersection_form() -> IntMatrix {
    IntMatrix::diagonal(&[-1, -1, -1, -1, -1, -1, 1])
}

/// The 27 lines with an echelon-form lookup, built once.
pub struct LineTable {
    lines: Vec<(LineLabel, PlanePair)>,
    by_echelon: HashMap<(LinearForm, LinearForm), LineLabel>,
}

impl LineTable {
    pub fn get() -> &'static LineTable {
        static TABLE: OnceLock<LineTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let lines = build_lines();
            let by_echelon = lines
                .iter()
                .map(|(l, p)| (p.echelon().expect("lines have rank 2"), *l))
                .collect();
            LineTable { lines, by_echelon }
        })
    }

    pub fn lines(&self) -> &[(LineLabel, PlanePair)] {
        &self.lines
    }

    pub fn planes(&self, label: LineLabel) -> &PlanePair {
        &self.lines[label.ordinal()].1
    }

    pub fn lookup(&self, pair: &PlanePair) -> Option<LineLabel> {
        self.by_echelon.get(&pair.echelon()?).copied()
    }
}

/// Symmetric 27×27 adjacency of the lines, indexed by [`LineLabel::ordinal`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IncidenceGraph {
    adjacent: Vec<Vec<bool>>,
}

impl IncidenceGraph {
    /// The incidence graph derived from the plane equations (cached).
    pub fn get() -> &'static IncidenceGraph {
        static GRAPH: OnceLock<IncidenceGraph> = OnceLock::new();
        GRAPH.get_or_init(|| Self::compute().expect("line table is consistent"))
    }

    pub fn compute() -> Result<Self, GeometryError> {
        let table = LineTable::get();
        let n = table.lines().len();
        let mut adjacent = vec![vec![false; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let meet = lines_intersect(&table.lines()[i].1, &table.lines()[j].1)?;
                adjacent[i][j] = meet;
                adjacent[j][i] = meet;
            }
        }
        Ok(Self { adjacent })
    }

    pub fn adjacent(&self, a: LineLabel, b: LineLabel) -> bool {
        self.adjacent[a.ordinal()][b.ordinal()]
    }

    /// Overwrite one edge (both directions); used for fault injection.
    pub fn set_edge(&mut self, a: LineLabel, b: LineLabel, value: bool) {
        self.adjacent[a.ordinal()][b.ordinal()] = value;
        self.adjacent[b.ordinal()][a.ordinal()] = value;
    }

    /// Overwrite only the `a → b` entry, breaking symmetry.
    pub fn set_entry(&mut self, a: LineLabel, b: LineLabel, value: bool) {
        self.adjacent[a.ordinal()][b.ordinal()] = value;
    }

    pub fn neighbours(&self, a: LineLabel) -> Vec<LineLabel> {
        LineLabel::all().into_iter().filter(|b| self.adjacent(a, *b)).collect()
    }

    pub fn degree(&self, a: LineLabel) -> usize {
        self.adjacent[a.ordinal()].iter().filter(|&&x| x).count()
    }

    pub fn edge_count(&self) -> usize {
        let n = self.adjacent.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adjacent[i][j]).count()
    }

    /// First asymmetric or reflexive entry, if any.
    pub fn symmetry_defect(&self) -> Option<(LineLabel, LineLabel)> {
        let all = LineLabel::all();
        for a in &all {
            if self.adjacent(*a, *a) {
                return Some((*a, *a));
            }
            for b in &all {
                if self.adjacent(*a, *b) != self.adjacent(*b, *a) {
                    return Some((*a, *b));
                }
            }
        }
        None
    }

    /// Adjacency list keyed by label strings.
    pub fn to_adjacency_list(&self) -> BTreeMap<String, Vec<String>> {
        LineLabel::all()
            .into_iter()
            .map(|a| (a.key(), self.neighbours(a).iter().map(LineLabel::key).collect()))
            .collect()
    }

    /// Class of a line from its incidences with the six exceptional lines.
    pub fn class_of_line(&self, label: LineLabel) -> Result<PicVector, GeometryError> {
        let ex = exceptional_lines();
        if let Some(i) = ex.iter().position(|e| *e == label) {
            let mut v = [0; 7];
            v[i] = 1;
            return Ok(v);
        }
        let mut v = [0; 7];
        let mut total = 1;
        for (i, e) in ex.iter().enumerate() {
            let b = self.adjacent(label, *e) as i64;
            v[i] = -b;
            total += b;
        }
        if total % 3 != 0 {
            return Err(GeometryError::Inconsistent(format!(
                "{label}: 1 + Σb = {total} is not divisible by 3"
            )));
        }
        v[6] = total / 3;
        if intersection(&v, &v) != -1 || intersection(&v, &HYPERPLANE) != 1 {
            return Err(GeometryError::Inconsistent(format!("{label}: class {v:?} is not a line class")));
        }
        Ok(v)
    }

    /// Classes of all 27 lines, in label order.
    pub fn pic_classes(&self) -> Result<Vec<PicVector>, GeometryError> {
        LineLabel::all().into_iter().map(|l| self.class_of_line(l)).collect()
    }
}

/// Class of a line in the Picard lattice, derived from the incidence graph.
pub fn class_of_line(label: LineLabel) -> Result<PicVector, GeometryError> {
    IncidenceGraph::get().class_of_line(label)
}

/// Label → class map with string keys.
pub fn pic_dictionary() -> Result<BTreeMap<String, PicVector>, GeometryError> {
    let g = IncidenceGraph::get();
    LineLabel::all().into_iter().map(|l| Ok((l.key(), g.class_of_line(l)?))).collect()
}

/// The permutation of the 27 lines induced by `g`: entry `i` is the image of
/// the `i`-th label.
pub fn action_on_lines(g: FieldAutomorphism) -> Result<Vec<LineLabel>, GeometryError> {
    let table = LineTable::get();
    table
        .lines()
        .iter()
        .map(|(label, pair)| {
            table
                .lookup(&pair.apply(g))
                .ok_or_else(|| GeometryError::Inconsistent(format!("image of {label} under {g} is not a line")))
        })
        .collect()
}

/// Matrix of `g` on the Picard lattice (column `j` is the image of basis vector `j`).
pub fn action_on_pic(g: FieldAutomorphism) -> Result<IntMatrix, GeometryError> {
    let classes = IncidenceGraph::get().pic_classes()?;
    action_on_pic_from(&classes, g)
}

/// As [`action_on_pic`], but with caller-supplied line classes.
pub fn action_on_pic_from(classes: &[PicVector], g: FieldAutomorphism) -> Result<IntMatrix, GeometryError> {
    let perm = action_on_lines(g)?;
    let mut m = IntMatrix::zeros(7, 7);
    let mut l_image = HYPERPLANE;
    for (j, e) in exceptional_lines().iter().enumerate() {
        let image = classes[perm[e.ordinal()].ordinal()];
        for i in 0..7 {
            m[(i, j)] = image[i].into();
            l_image[i] += image[i];
        }
    }
    // g fixes h = 3l − Σeᵢ, so 3·g(l) = h + Σ g(eᵢ)
    for (i, v) in l_image.iter().enumerate() {
        if v % 3 != 0 {
            return Err(GeometryError::Inconsistent(format!("image of l under {g} is not integral")));
        }
        m[(i, 6)] = (v / 3).into();
    }
    Ok(m)
}

/// Saturated sublattice of `Z⁷` fixed by every generator, in Hermite form.
pub fn invariant_sublattice(generators: &[FieldAutomorphism]) -> Result<Vec<PicVector>, GeometryError> {
    let mut stacked = IntMatrix::zeros(0, 7);
    for g in generators {
        let m = action_on_pic(*g)?;
        stacked = stacked.vstack(&m.sub(&IntMatrix::identity(7)));
    }
    let kernel = integer_kernel(&stacked);
    let vectors: Vec<Vec<BigInt>> = (0..kernel.cols()).map(|j| kernel.col(j)).collect();
    Ok(hermite_basis(&vectors).into_iter().map(to_pic).collect())
}

pub(crate) fn to_pic(v: Vec<BigInt>) -> PicVector {
    std::array::from_fn(|i| v[i].to_i64().expect("small entries"))
}

/// Apply an action matrix to a Pic vector.
pub fn apply_matrix(m: &IntMatrix, v: &PicVector) -> PicVector {
    let big: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
    to_pic(m.mul_vec(&big))
}

#[derive(Serialize)]
pub struct LinesDump {
    pub incidence: BTreeMap<String, Vec<String>>,
    pub pic_classes: BTreeMap<String, PicVector>,
}

pub fn lines_dump() -> Result<LinesDump, GeometryError> {
    Ok(LinesDump {
        incidence: IncidenceGraph::get().to_adjacency_list(),
        pic_classes: pic_dictionary()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lab(f: LineFamily, i: i64) -> LineLabel {
        LineLabel::new(f, i)
    }

    #[test]
    fn schlafli_counts() {
        let g = IncidenceGraph::get();
        for l in LineLabel::all() {
            assert_eq!(g.degree(l), 10, "{l}");
        }
        assert_eq!(g.edge_count(), 135);
        assert!(g.symmetry_defect().is_none());
    }

    #[test]
    fn blown_down_lines_are_skew() {
        let g = IncidenceGraph::get();
        let ex = exceptional_lines();
        for a in ex {
            for b in ex {
                assert!(a == b || !g.adjacent(a, b), "{a} meets {b}");
            }
        }
    }

    #[test]
    fn displayed_class_formulas() {
        // [L′(0)] = 2l − [L(0)] − [L(1)] − [M],  [L″(0)] = l − [L(0)] − [L(2)]
        assert_eq!(class_of_line(lab(LineFamily::Lp, 0)).unwrap(), [-1, -1, 0, -1, -1, -1, 2]);
        assert_eq!(class_of_line(lab(LineFamily::Ldp, 0)).unwrap(), [-1, 0, -1, 0, 0, 0, 1]);
        assert_eq!(class_of_line(lab(LineFamily::L, 1)).unwrap(), [0, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn generators_permute_lines_as_expected() {
        let s = action_on_lines(FieldAutomorphism::s()).unwrap();
        let t = action_on_lines(FieldAutomorphism::t()).unwrap();
        let w = action_on_lines(FieldAutomorphism::w()).unwrap();
        for i in 0..3 {
            let l = lab(LineFamily::L, i);
            assert_eq!(s[l.ordinal()], lab(LineFamily::Lp, i));
            assert_eq!(t[l.ordinal()], lab(LineFamily::L, i + 1));
            assert_eq!(w[l.ordinal()], l);
        }
    }

    #[test]
    fn action_preserves_form_and_hyperplane() {
        let q = intersection_form();
        for g in [FieldAutomorphism::s(), FieldAutomorphism::t(), FieldAutomorphism::w()] {
            let m = action_on_pic(g).unwrap();
            assert_eq!(&(&m.transpose() * &q) * &m, q);
            assert_eq!(apply_matrix(&m, &HYPERPLANE), HYPERPLANE);
            assert!(m.pow(3).is_identity());
        }
        assert!(action_on_pic(FieldAutomorphism::IDENTITY).unwrap().is_identity());
    }

    #[test]
    fn w_invariants_have_rank_five() {
        let inv = invariant_sublattice(&[FieldAutomorphism::w()]).unwrap();
        let expected: Vec<Vec<BigInt>> = [
            [0, 0, 0, 0, 0, 0, 1],
            [1, 0, 0, 0, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0],
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 1, 1, 0],
        ]
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
        let expected: Vec<PicVector> = hermite_basis(&expected).into_iter().map(to_pic).collect();
        assert_eq!(inv, expected);
        assert_eq!(invariant_sublattice(&[]).unwrap().len(), 7);
    }
}
