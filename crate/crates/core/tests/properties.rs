//! Invariants over random families.

mod common;

use proptest::prelude::*;
use sadk::closed_forms::{
    apery_extended, gluing_data, hilbert_numerator, numerator_from_resolution, qf_extended, resolution,
};
use sadk::ideal::toric::{family_grading, s_degree_of};
use sadk::lattice::LatticeVector;
use sadk::semigroup::{
    apery_closed_form, apery_set, build_family, is_member, quasi_frobenius, quasi_frobenius_closed_form, SemigroupFamily,
};
use sadk::verify::series::{enumerate_semigroup, EnumerationBox};

fn family() -> impl Strategy<Value = SemigroupFamily> {
    (0i64..=5, 0i64..=5, 0i64..=5, 0i64..=5, 2u32..=6).prop_filter_map("valid family", |(ax, ay, dx, dy, k)| {
        build_family(LatticeVector::from_pair(ax, ay), LatticeVector::from_pair(dx, dy), k, None).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn apery_and_qf_match_their_closed_forms(f in family()) {
        prop_assert_eq!(apery_set(&f), apery_closed_form(&f));
        prop_assert_eq!(quasi_frobenius(&f), quasi_frobenius_closed_form(&f));
    }

    #[test]
    fn membership_certificates_evaluate_back(f in family(), x in 0i64..40, y in 0i64..40) {
        let target = LatticeVector::from_pair(x, y);
        let window = EnumerationBox::componentwise(40, 40);
        let members = enumerate_semigroup(&f, window);
        match is_member(&f, target) {
            Some(c) => {
                prop_assert_eq!(c.evaluate(&f.generators()), Some(target));
                prop_assert!(members.contains(&target));
            }
            None => prop_assert!(!members.contains(&target)),
        }
    }

    #[test]
    fn generators_are_homogeneous_binomials(f in family()) {
        let grading = family_grading(&f);
        for g in sadk::closed_forms::generating_set(f.k()).flattened {
            let degrees: Vec<LatticeVector> = g.terms().map(|(m, _)| s_degree_of(&f, m)).collect();
            prop_assert_eq!(degrees.len(), 2);
            prop_assert_eq!(degrees[0], degrees[1]);
            prop_assert!(g.vanishes_under(&grading));
        }
    }

    #[test]
    fn numerator_agrees_with_the_resolution(f in family()) {
        prop_assume!(f.k() <= 4);
        let res = resolution(f.k()).unwrap();
        prop_assert_eq!(numerator_from_resolution(&res, &f).unwrap(), hilbert_numerator(&f).unwrap());
    }
}

#[test]
fn extended_closed_forms_match_enumeration() {
    for k in 2..=4 {
        for f in common::random_extended_families(k, 6, common::SEED ^ 0xe7) {
            assert!(gluing_data(&f).unwrap().is_gluing);
            assert_eq!(apery_extended(&f).unwrap(), apery_set(&f), "{f}");
            assert_eq!(qf_extended(&f).unwrap(), quasi_frobenius(&f), "{f}");
        }
    }
}
