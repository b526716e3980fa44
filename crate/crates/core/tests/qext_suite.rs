use qdirac::qext::{
    braiding_checks, hermitian, levi_action, levi_checks, pairing_checks, rhat, ExtVector,
    ScalingProfile, Sign,
};
use qdirac::{Scalar, Uq};

fn assert_all(outcomes: Vec<qdirac::identity::Outcome>) {
    for o in outcomes {
        assert!(o.passed(), "{}: {}", o.id, o.witness.unwrap_or_default());
    }
}

#[test]
fn braiding_for_ranks_two_to_four() {
    for n in 2..=4 {
        assert_all(braiding_checks(n).unwrap());
    }
}

#[test]
fn a_wrong_braiding_breaks_the_braid_equation() {
    // Oracle: replacing q - q^{-1} by 0 on the i < j rule gives a flip-like
    // matrix with a q on the diagonal, which is not a braiding.
    let r = rhat(3).unwrap();
    let mut m = r.matrix().clone();
    m.set(r.index(1, 2), r.index(1, 2), Scalar::zero());
    let id = qdirac::matrix::Matrix::identity(3);
    let (a, b) = (m.kron(&id), id.kron(&m));
    let lhs = a.mul(&b).unwrap().mul(&a).unwrap();
    let rhs = b.mul(&a).unwrap().mul(&b).unwrap();
    assert_ne!(lhs, rhs);
}

#[test]
fn pairing_values_for_ranks_two_to_four() {
    for n in 2..=4 {
        assert_all(pairing_checks(n).unwrap());
    }
}

#[test]
fn levi_module_for_ranks_two_and_three() {
    for n in 2..=3 {
        let uq = Uq::new(n, Uq::default_bound(n)).unwrap();
        assert_all(levi_checks(&uq).unwrap());
    }
}

#[test]
fn levi_action_is_multiplicative_on_wedges() {
    // E1 ▷ (e1 ∧ e2) through the coproduct: only e2 is lowered, with K1 on
    // e1 contributing q^{(α1, ξ1)} = q.
    let uq = Uq::new(3, Uq::default_bound(3)).unwrap();
    let e12 = ExtVector::basis(Sign::Plus, 3, &[1, 2]).unwrap();
    assert!(levi_action(&uq, &uq.e(1), &e12).unwrap().is_zero());
    let e13 = ExtVector::basis(Sign::Plus, 3, &[1, 3]).unwrap();
    let got = levi_action(&uq, &uq.e(2), &e13).unwrap();
    // e1 ∧ (-v^{-1} e2) scaled by q^{(α2, ξ1)} = q^0.
    let want = ExtVector::basis(Sign::Plus, 3, &[1, 2]).unwrap().scale(&-Scalar::v_pow(-1));
    assert_eq!(got, want);
}

#[test]
fn hermitian_is_diagonal_with_profile() {
    let p = ScalingProfile::from_c(&[Scalar::one(), Scalar::q_pow(1), Scalar::q_pow(-2)]).unwrap();
    let e12 = ExtVector::basis(Sign::Plus, 2, &[1, 2]).unwrap();
    assert_eq!(hermitian(&e12, &e12, &p).unwrap(), Scalar::q_pow(2));
}
