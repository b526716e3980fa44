use proptest::prelude::*;
use qdirac::dirac::{
    casimir_checks, levi_commutant_report, negative_controls, nilpotency_checks, operator_t,
    operator_t_tilde, structure_checks, theorem_checks, CRatios, DiracContext, Family, Ratio,
    TProfile,
};
use qdirac::identity::Outcome;
use qdirac::scalar::Scalar;
use qdirac::uqalg::{Uq, UqElement};

fn algebra(n: usize) -> Uq {
    Uq::new(n, Uq::default_bound(n)).unwrap()
}

fn assert_all(outcomes: &[Outcome]) {
    for o in outcomes {
        assert!(o.passed(), "{} failed: {:?}", o.id, o.witness);
    }
}

fn full_suite(n: usize) {
    let uq = algebra(n);
    let ctx = DiracContext::new(&uq).unwrap();
    assert_all(&nilpotency_checks(&ctx).unwrap());
    let symbolic = TProfile::new(n, Ratio::Symbolic, Family::Recursive);
    let sampled = TProfile::from_c(n, &Scalar::from_int(2), &Scalar::from_int(7), Family::Recursive).unwrap();
    let scaling = sampled.scaling().unwrap();
    assert_all(&structure_checks(&ctx, &sampled.ratios(), Some(&scaling)).unwrap());
    assert_all(&structure_checks(&ctx, &symbolic.ratios(), None).unwrap());
    assert_all(&theorem_checks(&ctx, &symbolic).unwrap());
    assert_all(&theorem_checks(&ctx, &sampled).unwrap());
    assert_all(&casimir_checks(&ctx).unwrap());
    for (id, w) in negative_controls(&ctx).unwrap() {
        assert!(w.is_some(), "{id}: expected a non-Levi witness");
    }
}

#[test]
fn rank_two_suite() {
    full_suite(2);
}

#[test]
fn rank_three_suite() {
    full_suite(3);
}

#[test]
fn rank_four_suite() {
    full_suite(4);
}

#[test]
fn equal_endpoints_on_printed_family() {
    for n in 2..=3 {
        let uq = algebra(n);
        let ctx = DiracContext::new(&uq).unwrap();
        let p = TProfile::new(n, Ratio::Value(Scalar::one()), Family::Printed);
        assert_all(&theorem_checks(&ctx, &p).unwrap());
    }
}

#[test]
fn printed_family_breaks_at_rank_three() {
    let uq = algebra(3);
    let ctx = DiracContext::new(&uq).unwrap();
    let p = TProfile::new(3, Ratio::Symbolic, Family::Printed);
    let residual = ctx.main_theorem_residual(&p).unwrap();
    let w = qdirac::dirac::param_non_levi_witness(&uq, &residual);
    assert!(w.is_some());
    // At rank two the two closed forms agree.
    let uq2 = algebra(2);
    let ctx2 = DiracContext::new(&uq2).unwrap();
    let p2 = TProfile::new(2, Ratio::Symbolic, Family::Printed);
    assert_all(&theorem_checks(&ctx2, &p2).unwrap());
}

#[test]
fn forced_c2_breaks_rank_two() {
    // c_0 = c_1 = c_2 = 1 violates c_2/c_1 = (c_1/c_0) q^{-2}.
    let uq = algebra(2);
    let ctx = DiracContext::new(&uq).unwrap();
    let r = CRatios::all_ones(2);
    let residual = ctx.ratio_residual(&r).unwrap();
    assert!(qdirac::dirac::param_non_levi_witness(&uq, &residual).is_some());
}

#[test]
fn t_values_match_display() {
    let s = Ratio::Symbolic;
    for fam in [Family::Printed, Family::Recursive] {
        assert_eq!(operator_t(0, &s, fam), (Scalar::one(), 1));
        assert_eq!(operator_t_tilde(1, &s, fam), (Scalar::one(), 1));
    }
    assert_eq!(operator_t(3, &s, Family::Printed), (Scalar::q_pow(-6), 0));
    assert_eq!(operator_t_tilde(3, &s, Family::Printed), (Scalar::one(), 0));
}

#[test]
fn commutant_report_examples() {
    let uq = algebra(2);
    let ctx = DiracContext::new(&uq).unwrap();
    let ct = ctx.casimir_tilde().unwrap();
    assert!(levi_commutant_report(&uq, &ct).unwrap().iter().all(|(_, w)| w.is_none()));
    let one = UqElement::one();
    assert!(levi_commutant_report(&uq, &one).unwrap().iter().all(|(_, w)| w.is_none()));
    assert!(levi_commutant_report(&uq, &uq.e(2)).unwrap().iter().any(|(_, w)| w.is_some()));
}

#[test]
fn eth_entries_are_root_vector_multiples() {
    // Independent oracle: ð[I∖{i}][I] = (−q)^{r−1} q^{-i/2} 𝓔_i with r the
    // position of i in I.
    let uq = algebra(3);
    let ctx = DiracContext::new(&uq).unwrap();
    let eth = ctx.eth_unit().unwrap();
    for mask in 0usize..8 {
        for i in 1..=3usize {
            let bit = 1 << (i - 1);
            if mask & bit == 0 {
                continue;
            }
            let r = (mask & (bit - 1)).count_ones() as i32;
            let sign = if r % 2 == 0 { Scalar::one() } else { -Scalar::one() };
            let c = &(&sign * &Scalar::q_pow(r)) * &Scalar::v_pow(-(i as i32));
            assert_eq!(eth.get(mask ^ bit, mask), &ctx.roots.cal_e(i).scale(&c));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn sampled_ratio_main_theorem(a in 1i64..20, b in 1i64..20) {
        let uq = algebra(2);
        let ctx = DiracContext::new(&uq).unwrap();
        let p = TProfile::from_c(2, &Scalar::from_int(a), &Scalar::from_int(b), Family::Recursive).unwrap();
        prop_assert!(ctx.concrete_residual(&p).unwrap().non_levi_witness(&uq).is_none());
    }
}
