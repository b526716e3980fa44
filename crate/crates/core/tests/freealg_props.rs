use std::cmp::Ordering;

use proptest::prelude::*;
use qdirac::freealg::{deglex_compare, multiply, NCPoly, Word};
use qdirac::Scalar;

fn word() -> impl Strategy<Value = Word> {
    prop::collection::vec(1u8..=3, 0..5).prop_map(|v| Word::from_slice(&v))
}

fn poly() -> impl Strategy<Value = NCPoly> {
    prop::collection::vec((word(), -3i64..=3, -2i32..=2), 0..4).prop_map(|terms| {
        let mut p = NCPoly::zero();
        for (w, c, e) in terms {
            p.add_term(w, &(&Scalar::from_int(c) * &Scalar::q_pow(e)));
        }
        p
    })
}

proptest! {
    #[test]
    fn deglex_is_compatible_with_concatenation(a in word(), b in word(), u in word(), w in word()) {
        let ord = deglex_compare(&a, &b);
        let left = deglex_compare(&u.concat(&a).concat(&w), &u.concat(&b).concat(&w));
        prop_assert_eq!(ord, left);
    }

    #[test]
    fn deglex_is_total(a in word(), b in word()) {
        let ab = deglex_compare(&a, &b);
        prop_assert_eq!(ab.reverse(), deglex_compare(&b, &a));
        prop_assert_eq!(ab == Ordering::Equal, a == b);
    }

    #[test]
    fn multiply_is_associative(p in poly(), r in poly(), s in poly()) {
        prop_assert_eq!(multiply(&multiply(&p, &r), &s), multiply(&p, &multiply(&r, &s)));
    }

    #[test]
    fn multiply_is_bilinear(p in poly(), r in poly(), s in poly()) {
        prop_assert_eq!(multiply(&p.add(&r), &s), multiply(&p, &s).add(&multiply(&r, &s)));
    }
}
