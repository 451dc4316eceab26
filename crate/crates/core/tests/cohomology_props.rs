//! Structural invariants of the cohomology engine, checked on random inputs.

use cubic_brauer::cohomology::{
    bar_cohomology, coboundary_witness, differential, first_difference, is_cocycle, tate_h_minus1, Cochain,
    FiniteGroup, GModule,
};
use cubic_brauer::exact::{invariant_factors, IntMatrix};
use cubic_brauer::geometry::{d0_combination, FieldAutomorphism};
use cubic_brauer::suite::{connecting_to_d0, d0_coordinates, d0_lattice, phi_cochain, pic_lattice, s_group, st_group, table_lift};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn small_vectors(count: usize, len: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, len), count)
}

#[test]
fn tate_and_bar_cohomology_agree_on_every_cyclic_subgroup() {
    for g in FieldAutomorphism::all().into_iter().filter(|g| !g.is_identity()) {
        let group = FiniteGroup::generated_by(&[g]);
        let pic = pic_lattice(&group).unwrap();
        let tate = tate_h_minus1(&pic.int_matrix(g), 3).unwrap();
        let bar = bar_cohomology(&group, &pic, 1).unwrap();
        assert_eq!(tate.factors, bar, "cyclic group generated by {g}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn d_squared_vanishes_on_pic(values in small_vectors(81, 7)) {
        let group = st_group();
        let pic = pic_lattice(&group).unwrap();
        let c = Cochain::from_values(&group, 2, values);
        let dd = differential(&group, &pic, &differential(&group, &pic, &c));
        prop_assert!(dd.values().iter().all(|v| pic.is_zero(v)));
    }

    #[test]
    fn coboundaries_get_valid_witnesses(values in small_vectors(3, 7)) {
        let group = s_group();
        let pic = pic_lattice(&group).unwrap();
        let b = Cochain::from_values(&group, 1, values);
        let c = differential(&group, &pic, &b);
        let w = coboundary_witness(&group, &pic, &c).unwrap().expect("a coboundary has a witness");
        prop_assert!(first_difference(&pic, &differential(&group, &pic, &w), &c).is_none());
    }

    #[test]
    fn a_coboundary_plus_a_generator_stays_nontrivial(values in small_vectors(1, 7)) {
        // φ + d(b) is a cocycle in the class of φ, which is not zero
        let group = st_group();
        let pic = pic_lattice(&group).unwrap();
        let phi = phi_cochain(&group, &[[0; 7], [1, 0, -1, 0, 0, 0, 0], [1, -1, 0, 0, 0, 0, 0]]);
        let b = Cochain::from_values(&group, 0, values);
        let db = differential(&group, &pic, &b);
        let shifted = Cochain::from_values(
            &group,
            1,
            phi.values().iter().zip(db.values()).map(|(x, y)| pic.add(x, y)).collect(),
        );
        prop_assert!(is_cocycle(&group, &pic, &shifted));
        prop_assert!(coboundary_witness(&group, &pic, &shifted).unwrap().is_none());
    }

    #[test]
    fn invariant_factors_are_a_divisor_chain_with_product_det(entries in prop::collection::vec(-6i64..=6, 16)) {
        let m = IntMatrix::from_i64(4, 4, &entries);
        let factors = invariant_factors(&m);
        for pair in factors.windows(2) {
            prop_assert!(pair[0].is_zero() && pair[1].is_zero() || (&pair[1] % &pair[0]).is_zero());
        }
        let det = m.det();
        if det.is_zero() {
            prop_assert!(factors.len() < 4 || factors.iter().any(Zero::is_zero));
        } else {
            let product: BigInt = factors.iter().product();
            prop_assert_eq!(product, det.abs());
        }
    }

    #[test]
    fn invariant_factors_survive_unimodular_row_operations(
        entries in prop::collection::vec(-6i64..=6, 12),
        k in -4i64..=4,
        i in 0usize..3,
        j in 0usize..3,
    ) {
        prop_assume!(i != j);
        let m = IntMatrix::from_i64(3, 4, &entries);
        let mut e = IntMatrix::identity(3);
        e[(j, i)] = k.into();
        prop_assert_eq!(invariant_factors(&(&e * &m)), invariant_factors(&m));
    }

    #[test]
    fn connecting_cocycle_does_not_depend_on_the_lift(shift in prop::collection::vec(-2i64..=2, 10)) {
        // move the lifts of the two nonzero values by elements of 𝒟₀
        let group = s_group();
        let values = [[0; 7], [1, 0, -1, 0, 0, 0, 0], [1, -1, 0, 0, 0, 0, 0]];
        let phi = phi_cochain(&group, &values);
        let base = [[0i64; 10], [0, 1, 0, -1, 0, 0, 0, 0, 0, 0], [0, 1, -1, 0, 0, 0, 0, 0, 0, 0]];
        let pairs = |extra: [[i64; 5]; 2]| {
            let mut out = vec![(values[0].to_vec(), base[0].to_vec())];
            for k in 1..3 {
                let u = d0_combination(&extra[k - 1]);
                out.push((values[k].to_vec(), base[k].iter().zip(u).map(|(a, b)| a + b).collect()));
            }
            out
        };
        let a = connecting_to_d0(&group, &phi, table_lift(pairs([[0; 5]; 2]))).unwrap();
        let extra = [shift[..5].try_into().unwrap(), shift[5..].try_into().unwrap()];
        let b = connecting_to_d0(&group, &phi, table_lift(pairs(extra))).unwrap();
        let d0 = d0_lattice(&group).unwrap();
        let coords = |c: &Cochain<Vec<i64>>| c.map(|d| d0_coordinates(d).expect("values in 𝒟₀").to_vec());
        let (a, b) = (coords(&a), coords(&b));
        let diff = Cochain::from_values(&group, 2, a.values().iter().zip(b.values()).map(|(x, y)| d0.sub(x, y)).collect());
        prop_assert!(coboundary_witness(&group, &d0, &diff).unwrap().is_some());
    }
}
