use std::collections::BTreeSet;

use super::CohomologyError;
use crate::geometry::FieldAutomorphism;

/// A finite subgroup of `(Z/3)³ = ⟨s, t, w⟩` with an explicit multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Vec<FieldAutomorphism>,
    table: Vec<Vec<usize>>,
    inverses: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Build from an element list, verifying the group axioms.
    pub fn from_elements(elements: Vec<FieldAutomorphism>) -> Result<Self, CohomologyError> {
        let n = elements.len();
        let position = |g: FieldAutomorphism| elements.iter().position(|x| *x == g);
        if elements.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(CohomologyError::NotAGroup("repeated element".into()));
        }
        let identity = position(FieldAutomorphism::IDENTITY)
            .ok_or_else(|| CohomologyError::NotAGroup("missing identity".into()))?;
        let mut table = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let p = elements[i] * elements[j];
                table[i][j] = position(p)
                    .ok_or_else(|| CohomologyError::NotAGroup(format!("{} · {} = {p} escapes", elements[i], elements[j])))?;
            }
        }
        // associativity and inverses are inherited from (Z/3)³, but check the
        // table anyway since everything downstream trusts it
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(CohomologyError::NotAGroup("not associative".into()));
                    }
                }
            }
        }
        let inverses = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| table[i][j] == identity)
                    .ok_or_else(|| CohomologyError::NotAGroup(format!("{} has no inverse", elements[i])))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { elements, table, inverses, identity })
    }

    /// Subgroup generated by `gens`, elements in `s`-fastest order.
    pub fn generated_by(gens: &[FieldAutomorphism]) -> Self {
        let mut set = BTreeSet::from([FieldAutomorphism::IDENTITY]);
        loop {
            let next: BTreeSet<_> = set
                .iter()
                .flat_map(|&a| gens.iter().map(move |&g| a * g))
                .chain(set.iter().copied())
                .collect();
            if next.len() == set.len() {
                break;
            }
            set = next;
        }
        let elements = FieldAutomorphism::all().into_iter().filter(|g| set.contains(g)).collect();
        Self::from_elements(elements).expect("generated subgroup")
    }

    /// The whole group `⟨s, t, w⟩` of order 27.
    pub fn full() -> Self {
        Self::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t(), FieldAutomorphism::w()])
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[FieldAutomorphism] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> FieldAutomorphism {
        self.elements[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn index_of(&self, g: FieldAutomorphism) -> Option<usize> {
        self.elements.iter().position(|x| *x == g)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    /// Split a flat tuple index into `n` element indices (first argument most significant).
    pub fn decode(&self, mut index: usize, n: usize) -> Vec<usize> {
        let q = self.order();
        let mut out = vec![0; n];
        for k in (0..n).rev() {
            out[k] = index % q;
            index /= q;
        }
        out
    }

    pub fn encode(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &g| acc * self.order() + g)
    }

    /// `|G|ⁿ`.
    pub fn tuple_count(&self, n: usize) -> usize {
        self.order().pow(n as u32)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subgroup_orders() {
        assert_eq!(FiniteGroup::full().order(), 27);
        let st = FiniteGroup::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t()]);
        assert_eq!(st.order(), 9);
        assert_eq!(FiniteGroup::generated_by(&[]).order(), 1);
        let diag = FiniteGroup::generated_by(&[FieldAutomorphism::new(1, 1, 0)]);
        assert_eq!(diag.order(), 3);
    }

    #[test]
    fn non_closed_set_is_rejected() {
        let r = FiniteGroup::from_elements(vec![FieldAutomorphism::IDENTITY, FieldAutomorphism::s()]);
        assert!(matches!(r, Err(CohomologyError::NotAGroup(_))));
    }

    #[test]
    fn tuple_coding_round_trips() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t()]);
        for i in 0..g.tuple_count(3) {
            assert_eq!(g.encode(&g.decode(i, 3)), i);
        }
    }
}
