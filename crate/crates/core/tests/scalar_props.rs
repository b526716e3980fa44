use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use qdirac::scalar::{q_factorial, q_num, LaurentPoly, Scalar};

fn laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-4i32..=4, -3i64..=3), 0..4).prop_map(|terms| {
        LaurentPoly::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (laurent(), laurent()).prop_map(|(n, d)| {
        if d.is_zero() {
            Scalar::from_laurent(n)
        } else {
            Scalar::ratio(n, d).unwrap()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_associative_and_commutative(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn multiplication_is_associative_and_distributive(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn inverses(a in scalar()) {
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in scalar(), b in scalar()) {
        // a·b/b reconstructs a syntactically.
        if !b.is_zero() {
            prop_assert_eq!(&(&a * &b) / &b, a.clone());
        }
        let den = a.denominator();
        prop_assert!(den.min_exp() == Some(0));
    }

    #[test]
    fn specialization_is_a_ring_map(a in scalar(), b in scalar()) {
        let v0 = BigRational::new(BigInt::from(3), BigInt::from(2));
        if let (Ok(x), Ok(y)) = (a.specialize(&v0), b.specialize(&v0)) {
            prop_assert_eq!((&a * &b).specialize(&v0).unwrap(), &x * &y);
            prop_assert_eq!((&a + &b).specialize(&v0).unwrap(), x + y);
        }
    }
}

#[test]
fn factorial_recursion() {
    for n in 1..=8u32 {
        assert_eq!(q_factorial(n), &q_num(n as i32) * &q_factorial(n - 1));
    }
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out
}

fn inversions(p: &[usize]) -> i32 {
    let mut n = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn inversion_generating_function() {
    for k in 0..=5usize {
        let sum = permutations(k)
            .iter()
            .fold(Scalar::zero(), |acc, p| &acc + &Scalar::q_pow(2 * inversions(p)));
        let k = k as i32;
        let expected = &Scalar::q_pow(k * (k - 1) / 2) * &q_factorial(k as u32);
        assert_eq!(sum, expected, "k = {k}");
    }
}
