use super::{differential, is_cocycle, Cochain, CohomologyError, FiniteGroup, GModule};
use crate::geometry::FieldAutomorphism;

/// Connecting map of `0 → A → B → C → 0` on cochain level.
///
/// `c` is a cocycle with values in the quotient `C`; `lift` is a set-theoretic
/// section `C → B` applied value by value; `restrict` recognizes elements of the
/// submodule `A` inside `B` (returning `None` for elements outside it).
pub fn connecting_cocycle<Q, B, S>(
    group: &FiniteGroup,
    quotient: &Q,
    c: &Cochain<Q::Value>,
    ambient: &B,
    lift: impl Fn(&Q::Value) -> Result<B::Value, CohomologyError> + Sync,
    restrict: impl Fn(&B::Value) -> Option<S> + Sync,
) -> Result<Cochain<S>, CohomologyError>
where
    Q: GModule,
    B: GModule,
    S: Clone + Send + Sync,
{
    if !is_cocycle(group, quotient, c) {
        return Err(CohomologyError::NotACocycle);
    }
    let lifted = c.try_map(&lift).map_err(|(_, e)| e)?;
    let d = differential(group, ambient, &lifted);
    d.try_map(|v| restrict(v).ok_or(())).map_err(|(i, _)| {
        let args: Vec<String> = super::arguments(group, d.degree(), i).iter().map(|g| g.to_string()).collect();
        CohomologyError::InvalidExtension(format!("value at ({}) escapes the submodule", args.join(", ")))
    })
}

/// `a(i, j) = ⌊(i+j)/n⌋ − ⌊i/n⌋ − ⌊j/n⌋` on canonical representatives `0 … n−1`.
pub fn carry(i: u32, j: u32, n: u32) -> i64 {
    assert!(i < n && j < n, "exponents must be reduced representatives");
    ((i + j) / n) as i64
}

/// Exponent `i` with `generator^i = g`.
pub fn cyclic_exponent(generator: FieldAutomorphism, g: FieldAutomorphism) -> Option<u32> {
    (0..3).find(|&i| generator.pow(i as i64) == g)
}

/// The cyclic symbol cocycle `(gⁱ, gʲ) ↦ f^{a(i,j)}` on `⟨generator⟩` of order 3.
pub fn symbol_cocycle<M: GModule>(
    group: &FiniteGroup,
    module: &M,
    generator: FieldAutomorphism,
    f: &M::Value,
) -> Result<Cochain<M::Value>, CohomologyError> {
    let order = group.order() as u32;
    if order != 3 || group.index_of(generator).is_none() || generator.is_identity() {
        return Err(CohomologyError::InvalidModule("symbol cocycles need a cyclic group of order 3".into()));
    }
    let cochain = Cochain::from_fn(group, 2, |args| {
        let i = cyclic_exponent(generator, args[0]).expect("cyclic");
        let j = cyclic_exponent(generator, args[1]).expect("cyclic");
        match carry(i, j, order) {
            0 => module.zero(),
            _ => f.clone(),
        }
    });
    Ok(cochain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::{GLattice, Mu3};

    #[test]
    fn carries() {
        assert_eq!(carry(1, 2, 3), 1);
        assert_eq!(carry(1, 1, 3), 0);
        assert_eq!(carry(2, 2, 3), 1);
        assert_eq!(carry(0, 2, 3), 0);
    }

    #[test]
    fn symbol_cocycle_is_closed() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s()]);
        let m = Mu3::new();
        let c = symbol_cocycle(&g, &m, FieldAutomorphism::s(), &1).unwrap();
        assert!(is_cocycle(&g, &m, &c));
        assert_eq!(*c.get(&g, &[FieldAutomorphism::s(), FieldAutomorphism::s().pow(2)]), 1);
        assert_eq!(*c.get(&g, &[FieldAutomorphism::s(), FieldAutomorphism::s()]), 0);
    }

    #[test]
    fn zero_cocycle_zero_lift() {
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s()]);
        let z = GLattice::trivial(2);
        let c = Cochain::from_fn(&g, 1, |_| vec![0, 0]);
        let out = connecting_cocycle(&g, &z, &c, &z, |v| Ok(v.clone()), |v| Some(v.clone())).unwrap();
        assert!(out.values().iter().all(|v| v == &vec![0, 0]));
    }

    #[test]
    fn escaping_values_are_reported() {
        // lifting the identity homomorphism Z/3 → Z gives the carry cocycle
        // 3·a(i, j), which does not lie in the zero submodule
        let g = FiniteGroup::generated_by(&[FieldAutomorphism::s()]);
        let z = GLattice::trivial(1);
        let c = Cochain::from_fn(&g, 1, |a| vec![a[0].s as i64]);
        let r = connecting_cocycle(&g, &Mu3::new(), &c.map(|v| v[0] as u8), &z, |v| Ok(vec![*v as i64]), |v| {
            (v[0] == 0).then_some(0)
        });
        assert!(matches!(r, Err(CohomologyError::InvalidExtension(_))));
    }
}
