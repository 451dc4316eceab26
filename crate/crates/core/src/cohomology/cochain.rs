use serde_json::{json, Value as Json};

use super::{FiniteGroup, GModule};
use crate::geometry::FieldAutomorphism;

/// A total map `Gⁿ → M`, stored densely with the first argument most significant.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<V> {
    degree: usize,
    order: usize,
    values: Vec<V>,
}

impl<V: Clone + Send + Sync> Cochain<V> {
    pub fn from_fn(group: &FiniteGroup, degree: usize, f: impl Fn(&[FieldAutomorphism]) -> V + Sync) -> Self {
        let values = map_indices(group.tuple_count(degree), |i| {
            let args: Vec<FieldAutomorphism> = group.decode(i, degree).into_iter().map(|k| group.element(k)).collect();
            f(&args)
        });
        Self { degree, order: group.order(), values }
    }

    pub fn from_values(group: &FiniteGroup, degree: usize, values: Vec<V>) -> Self {
        assert_eq!(values.len(), group.tuple_count(degree), "cochain must be total");
        Self { degree, order: group.order(), values }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[V] {
        &self.values
    }

    pub fn value_at(&self, index: usize) -> &V {
        &self.values[index]
    }

    pub fn set_value(&mut self, index: usize, v: V) {
        self.values[index] = v;
    }

    /// Value at explicit arguments; panics if an argument is not in the group.
    pub fn get(&self, group: &FiniteGroup, args: &[FieldAutomorphism]) -> &V {
        assert_eq!(args.len(), self.degree);
        let idx: Vec<usize> = args
            .iter()
            .map(|&g| group.index_of(g).unwrap_or_else(|| panic!("{g} is not in the group")))
            .collect();
        &self.values[group.encode(&idx)]
    }

    pub fn map<W: Clone + Send + Sync>(&self, f: impl Fn(&V) -> W + Sync) -> Cochain<W> {
        let values = map_indices(self.values.len(), |i| f(&self.values[i]));
        Cochain { degree: self.degree, order: self.order, values }
    }

    /// Try to map every value, reporting the first failing index.
    pub fn try_map<W: Clone + Send + Sync, E: Send>(
        &self,
        f: impl Fn(&V) -> Result<W, E> + Sync,
    ) -> Result<Cochain<W>, (usize, E)> {
        let results = map_indices(self.values.len(), |i| f(&self.values[i]));
        let mut values = Vec::with_capacity(results.len());
        for (i, r) in results.into_iter().enumerate() {
            values.push(r.map_err(|e| (i, e))?);
        }
        Ok(Cochain { degree: self.degree, order: self.order, values })
    }
}

#[cfg(feature = "parallel")]
fn map_indices<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indices<T: Send>(n: usize, f: impl Fn(usize) -> T + Sync + Send) -> Vec<T> {
    (0..n).map(f).collect()
}

/// Inhomogeneous bar differential
/// `(dc)(g₁,…,gₙ₊₁) = g₁·c(g₂,…) + Σ(−1)ⁱ c(…,gᵢgᵢ₊₁,…) + (−1)ⁿ⁺¹ c(g₁,…,gₙ)`.
pub fn differential<M: GModule>(group: &FiniteGroup, module: &M, c: &Cochain<M::Value>) -> Cochain<M::Value> {
    let n = c.degree;
    let values = map_indices(group.tuple_count(n + 1), |idx| {
        let args = group.decode(idx, n + 1);
        let first = module.act(group.element(args[0]), &c.values[group.encode(&args[1..])]);
        let mut acc = first;
        let mut merged = Vec::with_capacity(n);
        for i in 1..=n {
            merged.clear();
            merged.extend_from_slice(&args[..i - 1]);
            merged.push(group.mul(args[i - 1], args[i]));
            merged.extend_from_slice(&args[i + 1..]);
            let v = &c.values[group.encode(&merged)];
            acc = if i % 2 == 0 { module.add(&acc, v) } else { module.sub(&acc, v) };
        }
        let last = &c.values[group.encode(&args[..n])];
        acc = if (n + 1) % 2 == 0 { module.add(&acc, last) } else { module.sub(&acc, last) };
        module.normalize(&acc)
    });
    Cochain { degree: n + 1, order: group.order(), values }
}

/// Whether `dc` vanishes identically.
pub fn is_cocycle<M: GModule>(group: &FiniteGroup, module: &M, c: &Cochain<M::Value>) -> bool {
    differential(group, module, c).values.iter().all(|v| module.is_zero(v))
}

/// First index where the two cochains differ in `module`, if any.
pub fn first_difference<M: GModule>(module: &M, a: &Cochain<M::Value>, b: &Cochain<M::Value>) -> Option<usize> {
    assert_eq!(a.degree, b.degree);
    let flags = map_indices(a.values.len(), |i| module.equal(&a.values[i], &b.values[i]));
    flags.iter().position(|ok| !ok)
}

/// Arguments of a flat index as group elements.
pub fn arguments(group: &FiniteGroup, degree: usize, index: usize) -> Vec<FieldAutomorphism> {
    group.decode(index, degree).into_iter().map(|k| group.element(k)).collect()
}

/// `[{args: ["s^1 t^0 w^0", …], value: …}, …]`.
pub fn cochain_table_json<M: GModule>(group: &FiniteGroup, module: &M, c: &Cochain<M::Value>) -> Json {
    let rows: Vec<Json> = c
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let args: Vec<String> = arguments(group, c.degree, i).iter().map(|g| g.spelling()).collect();
            json!({ "args": args, "value": module.encode(v) })
        })
        .collect();
    Json::Array(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{GLattice, Mu3};

    #[test]
    fn constant_zero_cochain_with_trivial_action() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s()]);
        let z = GLattice::trivial(2);
        let c = Cochain::from_values(&g, 0, vec![vec![5, -1]]);
        let d = differential(&g, &z, &c);
        assert!(d.values().iter().all(|v| v == &vec![0, 0]));
    }

    #[test]
    fn d_squared_vanishes_on_mu3() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s(), FieldAutomorphism::t()]);
        let m = Mu3::new();
        let c = Cochain::from_fn(&g, 1, |a| (a[0].s * 2 + a[0].t) % 3);
        assert!(is_cocycle(&g, &m, &differential(&g, &m, &c)));
    }

    #[test]
    fn perturbed_cocycle_is_not_closed() {
        // the zero 1-cochain is closed; changing one value breaks the cocycle identity
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s()]);
        let z = GLattice::trivial(1);
        let c = Cochain::from_fn(&g, 1, |_| vec![0]);
        assert!(is_cocycle(&g, &z, &c));
        let mut bad = c.clone();
        bad.set_value(1, vec![1]);
        assert!(!is_cocycle(&g, &z, &bad));
    }
}
