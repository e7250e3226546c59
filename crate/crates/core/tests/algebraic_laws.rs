//! Randomized algebraic laws for the exact arithmetic and the Weyl group.

use proptest::prelude::*;
use qcasimir::exact_arith::{QLaurent, Rational};
use qcasimir::root_data::Weight;
use qcasimir::weyl_charring::SignedPerm;

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..12).prop_map(|(n, d)| Rational::new(n, d).unwrap())
}

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-16i32..16, rational()), 0..5).prop_map(QLaurent::from_terms)
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPerm> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, n))
        .prop_map(|(p, s)| SignedPerm::new(p, s.into_iter().map(|b| if b { -1 } else { 1 }).collect()).unwrap())
}

proptest! {
    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn evaluation_is_multiplicative(a in laurent(), b in laurent(), s in (1i64..6, 1i64..6)) {
        let s = Rational::new(s.0, s.1).unwrap();
        let lhs = a.mul(&b).eval(&s).unwrap();
        let rhs = &a.eval(&s).unwrap() * &b.eval(&s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn signed_permutations_form_a_group(
        (g, h, w) in (2usize..6).prop_flat_map(|n| (
            signed_perm(n),
            signed_perm(n),
            prop::collection::vec(-7i32..7, n).prop_map(Weight::from_doubled),
        ))
    ) {
        prop_assert_eq!(g.compose(&g.inverse()), SignedPerm::identity(g.rank()));
        prop_assert_eq!(g.compose(&h).sgn(), g.sgn() * h.sgn());
        prop_assert_eq!(g.compose(&h).act_weight(&w), g.act_weight(&h.act_weight(&w)));
    }
}
