//! Self-checks for the scalar field, the rewriting engine, `U_q` and the
//! root vectors, packaged as [`Outcome`]s for batch reporting.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::freealg::Side;
use crate::identity::Outcome;
use crate::rootvec::RootVectorSet;
use crate::scalar::{q_factorial, q_minus_q_inv, q_num, Scalar};
use crate::uqalg::{serre_relations, Uq, UqElement, WeightVec};

/// Field and q-number identities in `Q(v)`.
pub fn scalar_checks() -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    let mut fail = None;
    for k in 1..8 {
        let lhs = &q_num(2) * &q_num(k);
        let rhs = &q_num(k + 1) + &q_num(k - 1);
        if lhs != rhs {
            fail = Some(format!("[2][{k}] - [{}] - [{}] = {}", k + 1, k - 1, &lhs - &rhs));
            break;
        }
    }
    out.push(Outcome::from_witness("scalar.q_number_recursion", fail));

    let one = BigRational::from_integer(BigInt::from(1));
    let mut fail = None;
    for k in 0..7u32 {
        let at_one = q_factorial(k).specialize(&one)?;
        let classical: BigInt = (1..=k.max(1)).map(BigInt::from).product();
        if at_one != BigRational::from_integer(classical) {
            fail = Some(format!("[{k}]! at v = 1 is {at_one}"));
            break;
        }
    }
    out.push(Outcome::from_witness("scalar.classical_limit", fail));

    let x = &(&q_num(3) + &Scalar::v_pow(-5)) * &q_minus_q_inv().inv()?;
    let inverse_ok = &x * &x.inv()? == Scalar::one();
    out.push(Outcome::from_witness(
        "scalar.inverse",
        (!inverse_ok).then(|| format!("x * x^-1 != 1 for x = {x}")),
    ));
    Ok(out)
}

/// The completed rewriting systems reduce every Serre relation to zero and
/// agree between the E- and F-alphabets.
pub fn freealg_checks(uq: &Uq) -> Vec<Outcome> {
    let n = uq.rank();
    let mut fail = None;
    for side in [Side::E, Side::F] {
        for r in serre_relations(n) {
            let nf = uq.system(side).normal_form(&r);
            if !nf.is_zero() {
                fail = Some(format!("{} does not reduce to 0", r.render(side)));
            }
        }
    }
    let mut out = vec![Outcome::from_witness(format!("freealg.serre_reduce[N={n}]"), fail)];
    let e = uq.system(Side::E).rules().len();
    let f = uq.system(Side::F).rules().len();
    out.push(Outcome::from_witness(
        format!("freealg.side_symmetry[N={n}]"),
        (e != f).then(|| format!("{e} E-rules vs {f} F-rules")),
    ));
    out
}

fn first_term(x: &UqElement, n: usize) -> Option<String> {
    x.terms().next_back().map(|(m, c)| crate::uqalg::render_term(m, c, n))
}

/// Defining relations of `U_q(sl_{N+1})` evaluated in normal form.
pub fn relation_checks(uq: &Uq) -> Result<Vec<Outcome>> {
    let n = uq.rank();
    let inv_qmq = q_minus_q_inv().inv()?;
    let mut fail = None;
    for i in 1..=n {
        for j in 1..=n as u8 {
            let aij = uq.alpha(i).pair_letters(&[j]);
            let ke = uq.mul_all(&[&uq.k_alpha(i, 1), &uq.e(j), &uq.k_alpha(i, -1)])?;
            let kf = uq.mul_all(&[&uq.k_alpha(i, 1), &uq.f(j), &uq.k_alpha(i, -1)])?;
            let mut r = ke.sub(&uq.e(j).scale(&Scalar::q_pow(aij)));
            r = r.add(&kf.sub(&uq.f(j).scale(&Scalar::q_pow(-aij))));
            let mut c = uq.commutator(&uq.e(i as u8), &uq.f(j))?;
            if i == j as usize {
                c = c.sub(&uq.k_alpha(i, 1).sub(&uq.k_alpha(i, -1)).scale(&inv_qmq));
            }
            if let Some(w) = first_term(&r.add(&c), n) {
                fail = Some(format!("i = {i}, j = {j}: {w}"));
            }
        }
    }
    for r in serre_relations(n) {
        let mut ee = UqElement::zero();
        let mut ff = UqElement::zero();
        for (word, c) in r.terms() {
            let es: Vec<UqElement> = word.as_slice().iter().map(|&i| uq.e(i)).collect();
            let fs: Vec<UqElement> = word.as_slice().iter().map(|&i| uq.f(i)).collect();
            ee.add_scaled(&uq.mul_all(&es.iter().collect::<Vec<_>>())?, c);
            ff.add_scaled(&uq.mul_all(&fs.iter().collect::<Vec<_>>())?, c);
        }
        if let Some(w) = first_term(&ee.add(&ff), n) {
            fail = Some(format!("{}: {w}", r.render(Side::E)));
        }
    }
    Ok(vec![Outcome::from_witness(format!("uqalg.defining_relations[N={n}]"), fail)])
}

fn spanning_set(uq: &Uq, max_deg: usize) -> Result<Vec<UqElement>> {
    let n = uq.rank() as u8;
    let letters: Vec<UqElement> = (1..=n).flat_map(|i| [uq.e(i), uq.f(i)]).collect();
    let mut layer = vec![UqElement::one()];
    let mut all = layer.clone();
    for _ in 0..max_deg {
        let mut next = Vec::new();
        for x in &layer {
            for l in &letters {
                next.push(uq.mul(x, l)?);
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    let k = uq.k(WeightVec::fundamental(1));
    let with_k = all.iter().map(|x| uq.mul(x, &k)).collect::<Result<Vec<_>>>()?;
    all.extend(with_k);
    Ok(all)
}

fn hopf_failure(uq: &Uq, x: &UqElement) -> Result<Option<&'static str>> {
    let d = uq.coproduct(x)?;
    if uq.coproduct_on_leg(&d, 0)? != uq.coproduct_on_leg(&d, 1)? {
        return Ok(Some("coassociativity"));
    }
    let eps = |y: &UqElement| Ok(UqElement::scalar(uq.counit(y)));
    if uq.multiply_legs(&uq.map_leg(&d, 0, eps)?)? != *x
        || uq.multiply_legs(&uq.map_leg(&d, 1, eps)?)? != *x
    {
        return Ok(Some("counit"));
    }
    let unit = UqElement::scalar(uq.counit(x));
    if uq.multiply_legs(&uq.map_leg(&d, 0, |y| uq.antipode(y))?)? != unit
        || uq.multiply_legs(&uq.map_leg(&d, 1, |y| uq.antipode(y))?)? != unit
    {
        return Ok(Some("antipode"));
    }
    if uq.antipode(&uq.antipode_inv(x)?)? != *x {
        return Ok(Some("antipode inverse"));
    }
    let sx = uq.star(x)?;
    if uq.star(&sx)? != *x {
        return Ok(Some("star involution"));
    }
    let both = uq.map_leg(&uq.map_leg(&d, 0, |y| uq.star(y))?, 1, |y| uq.star(y))?;
    if uq.coproduct(&sx)? != both {
        return Ok(Some("star coproduct"));
    }
    Ok(None)
}

/// Hopf axioms on the monomials of degree at most `max_deg` in the
/// generators, with and without a Cartan factor.
pub fn hopf_checks(uq: &Uq, max_deg: usize) -> Result<Vec<Outcome>> {
    let n = uq.rank();
    let mut fail = None;
    for x in spanning_set(uq, max_deg)? {
        if let Some(axiom) = hopf_failure(uq, &x)? {
            fail = Some(format!("{axiom} fails on {}", uq.render(&x)));
            break;
        }
    }
    Ok(vec![Outcome::from_witness(format!("uqalg.hopf_axioms[N={n},deg<={max_deg}]"), fail)])
}

/// Number of ways to write `mu` as a sum of positive roots.
pub fn kostant_partition(mu: &[i32]) -> usize {
    let n = mu.len();
    let mut roots = Vec::new();
    for i in 0..n {
        for j in i..n {
            roots.push((i, j));
        }
    }
    fn go(mu: &mut [i32], roots: &[(usize, usize)]) -> usize {
        if mu.iter().all(|&m| m == 0) {
            return 1;
        }
        let Some((&(i, j), rest)) = roots.split_first() else {
            return 0;
        };
        let mut total = go(mu, rest);
        let mut taken = 0;
        while mu[i..=j].iter().all(|&m| m > 0) {
            mu[i..=j].iter_mut().for_each(|m| *m -= 1);
            taken += 1;
            total += go(mu, rest);
        }
        mu[i..=j].iter_mut().for_each(|m| *m += taken);
        total
    }
    go(&mut mu.to_vec(), &roots)
}

fn contents(n: usize, height: i32) -> Vec<Vec<i32>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i32>| {
                (0..=height).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .filter(|v| v.iter().sum::<i32>() <= height)
            .collect();
    }
    out
}

/// Irreducible E-words per content against Kostant's partition function.
pub fn pbw_checks(uq: &Uq, height: i32) -> Vec<Outcome> {
    let n = uq.rank();
    let sys = uq.system(Side::E);
    let height = height.min(sys.bound() as i32);
    let fail = contents(n, height).into_iter().find_map(|mu| {
        let count = sys.irreducible_words(&mu).len();
        let want = kostant_partition(&mu);
        (count != want).then(|| format!("content {mu:?}: {count} words, expected {want}"))
    });
    vec![Outcome::from_witness(format!("uqalg.pbw_counts[N={n},height<={height}]"), fail)]
}

/// Exact and mod-Levi root-vector identities and the orthonormal-basis test.
pub fn rootvec_checks(uq: &Uq, roots: &RootVectorSet) -> Result<Vec<Outcome>> {
    let n = uq.rank();
    let mut out: Vec<Outcome> = roots
        .identities(uq)?
        .into_iter()
        .map(|id| {
            let w = id.witness(n);
            Outcome::from_witness(format!("rootvec.{}[N={n}]", id.id), w)
        })
        .collect();
    let failures = roots.orthonormality_failures(uq)?;
    out.push(Outcome::from_witness(
        format!("rootvec.orthonormal_basis[N={n}]"),
        failures.into_iter().next(),
    ));
    Ok(out)
}
