use proptest::prelude::*;

use jonquieres::birational::VerifiedCremona;
use jonquieres::fixtures::{self, random_instance, Profile};
use jonquieres::implicitize::{implicitize, oracle_implicitize};
use jonquieres::poly::{divide_exact, gcd, random_form, Polynomial, VariableSet};
use jonquieres::syzygies::colon_law;

fn ring() -> VariableSet {
    VariableSet::indexed("x", 3)
}

fn form() -> impl Strategy<Value = Polynomial> {
    (0u32..4, any::<u64>()).prop_map(|(deg, seed)| random_form(&ring(), deg, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ring_laws(a in form(), b in form(), c in form()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn display_parses_back(a in form()) {
        let text = a.to_string();
        prop_assert_eq!(Polynomial::parse(&ring(), &text).unwrap(), a);
    }

    #[test]
    fn gcd_divides_and_products_divide(a in form(), b in form()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let g = gcd(&a, &b);
        prop_assert!(divide_exact(&a, &g).is_ok());
        prop_assert!(divide_exact(&b, &g).is_ok());
        prop_assert_eq!(divide_exact(&(&a * &b), &b).unwrap(), a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn identity_monoids_match_elimination(seed in any::<u64>(), df in 1u32..3) {
        let p = random_instance(&VerifiedCremona::identity(2), df, Profile::Generic, seed).unwrap();
        let f = implicitize(&p).unwrap().f;
        let oracle = oracle_implicitize(&p.parametrization(), p.extended_target()).unwrap();
        prop_assert!(oracle.is_scalar_multiple_of(&f));
    }

    #[test]
    fn colon_law_over_the_involution(seed in any::<u64>(), inclusion in any::<bool>()) {
        let profile = if inclusion { Profile::Inclusion } else { Profile::Generic };
        let p = random_instance(&fixtures::standard_involution(), 1, profile, seed).unwrap();
        prop_assert!(colon_law(&p.base_ideal(), p.f(), p.g()).unwrap());
    }
}
