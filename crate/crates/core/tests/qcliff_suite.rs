use proptest::prelude::*;
use qdirac::qcliff::{exterior, factorization_rank, interior, pairing_checks, relation_checks, CliffOp};
use qdirac::qext::ScalingProfile;
use qdirac::Scalar;

fn assert_all(outcomes: Vec<qdirac::identity::Outcome>) {
    for o in outcomes {
        assert!(o.passed(), "{}: {}", o.id, o.witness.unwrap_or_default());
    }
}

#[test]
fn relations_for_ranks_two_to_four() {
    for n in 2..=4 {
        assert_all(relation_checks(n).unwrap());
    }
}

#[test]
fn the_off_diagonal_sign_is_not_symmetric() {
    // With q^{+1} in place of q^{-1} the relation fails, so the check has teeth.
    let (e1, i2) = (exterior(3, 1).unwrap(), interior(3, 2).unwrap());
    let wrong = e1.mul(&i2).add(&i2.mul(&e1).scale(&Scalar::q_pow(1)));
    assert!(!wrong.is_zero());
}

#[test]
fn factorization_spans_endomorphisms() {
    for n in 1..=3 {
        assert_eq!(factorization_rank(n).unwrap(), 1 << (2 * n));
    }
}

#[test]
fn cross_checks_with_unit_profile() {
    for n in 2..=4 {
        assert_all(pairing_checks(n, &ScalingProfile::ones(n)).unwrap());
    }
}

fn laurent_scalar() -> impl Strategy<Value = Scalar> {
    (1i64..=5, -2i32..=2, 0i64..=3).prop_map(|(a, e, b)| &(&Scalar::from_int(a) * &Scalar::q_pow(e)) + &Scalar::from_int(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn cross_checks_with_random_profiles(
        lambda in prop::collection::vec(laurent_scalar(), 4),
        lambda_prime in prop::collection::vec(laurent_scalar(), 4),
    ) {
        let p = ScalingProfile::new(lambda, lambda_prime).unwrap();
        for o in pairing_checks(3, &p).unwrap() {
            prop_assert!(o.passed(), "{}: {:?}", o.id, o.witness);
        }
    }

    #[test]
    fn degree_diagonal_commutes_with_degree_preserving_products(a in 1u8..=3, b in 1u8..=3) {
        let d = CliffOp::degree_diagonal(3, &[Scalar::from_int(2), Scalar::q_pow(1), Scalar::q_pow(3), Scalar::from_int(5)]);
        let x = exterior(3, a).unwrap().mul(&interior(3, b).unwrap());
        prop_assert_eq!(d.mul(&x), x.mul(&d));
    }
}
