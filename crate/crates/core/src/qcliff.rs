//! Quantum Clifford operators on `Λ_q(u_+)`: interior multiplication
//! `𝔦_a = γ_-(f_a)`, exterior multiplication `𝔢_a = γ_+(e_a)`, and their
//! rescalings `γ_a`, `γ_a*` for a general scaling profile.
//!
//! Operators are dense `2^N × 2^N` matrices over the subset basis; entry
//! `[J][I]` is the coefficient of `e_J` in the image of `e_I`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{AlgebraError, Result};
use crate::identity::Outcome;
use crate::matrix::{rational_rank, Matrix};
use crate::qext::{self, mask_indices, ExtVector, ScalingProfile, Sign};
use crate::scalar::{q_minus_q_inv, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliffOp {
    n: usize,
    matrix: Matrix,
}

fn minus_q_pow(k: usize) -> Scalar {
    let s = Scalar::q_pow(k as i32);
    if k.is_multiple_of(2) {
        s
    } else {
        -s
    }
}

/// Position (1-based) of `a` inside the sorted subset.
fn position(mask: u32, a: u8) -> usize {
    (mask & ((1u32 << (a - 1)) - 1)).count_ones() as usize + 1
}

fn check_index(n: usize, a: u8) -> Result<()> {
    if a == 0 || a as usize > n {
        return Err(AlgebraError::IndexOutOfRange {
            index: a as usize,
            rank: n,
        });
    }
    Ok(())
}

impl CliffOp {
    pub fn from_matrix(n: usize, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != 1 << n || matrix.cols() != 1 << n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} matrix for N = {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { n, matrix })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            matrix: Matrix::zero(1 << n, 1 << n),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            matrix: Matrix::identity(1 << n),
        }
    }

    /// Acts as `values[k]` on degree `k`.
    pub fn degree_diagonal(n: usize, values: &[Scalar]) -> Self {
        let entries: Vec<Scalar> = (0..1u32 << n)
            .map(|m| values[m.count_ones() as usize].clone())
            .collect();
        Self {
            n,
            matrix: Matrix::diagonal(&entries),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn mul(&self, other: &CliffOp) -> CliffOp {
        CliffOp {
            n: self.n,
            matrix: self.matrix.mul(&other.matrix).expect("same dimension"),
        }
    }

    pub fn add(&self, other: &CliffOp) -> CliffOp {
        CliffOp {
            n: self.n,
            matrix: self.matrix.add(&other.matrix).expect("same dimension"),
        }
    }

    pub fn sub(&self, other: &CliffOp) -> CliffOp {
        CliffOp {
            n: self.n,
            matrix: self.matrix.sub(&other.matrix).expect("same dimension"),
        }
    }

    pub fn scale(&self, c: &Scalar) -> CliffOp {
        CliffOp {
            n: self.n,
            matrix: self.matrix.scale(c),
        }
    }

    /// Restriction to inputs of degree `k` (other columns zeroed).
    pub fn restrict_input(&self, k: usize) -> CliffOp {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (r, c, x) in self.matrix.nonzero() {
            if (c as u32).count_ones() as usize == k {
                m.set(r, c, x.clone());
            }
        }
        CliffOp { n: self.n, matrix: m }
    }

    pub fn apply(&self, x: &ExtVector) -> Result<ExtVector> {
        if x.sign() != Sign::Plus || x.n() != self.n {
            return Err(AlgebraError::AlgebraMismatch);
        }
        let v = self.matrix.apply(&x.to_dense())?;
        Ok(ExtVector::from_dense(Sign::Plus, self.n, &v))
    }

    /// Adjoint for `(e_I, e_J) = λ'_{|I|} δ_{IJ}`:
    /// `A*[J][I] = (λ'_{|I|}/λ'_{|J|}) A[I][J]` (real scalars).
    pub fn adjoint(&self, profile: &ScalingProfile) -> CliffOp {
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (i, j, x) in self.matrix.nonzero() {
            let ki = (i as u32).count_ones() as usize;
            let kj = (j as u32).count_ones() as usize;
            let w = profile.lambda_prime(ki) / profile.lambda_prime(kj);
            m.set(j, i, x * &w);
        }
        CliffOp { n: self.n, matrix: m }
    }

    /// Whether every nonzero entry shifts subset size by exactly `shift`.
    pub fn is_graded(&self, shift: i32) -> bool {
        self.matrix.nonzero().all(|(r, c, _)| {
            (r as u32).count_ones() as i32 - (c as u32).count_ones() as i32 == shift
        })
    }

    pub fn specialize(&self, v0: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        self.matrix.specialize(v0)
    }
}

/// `𝔦_a e_I = (−q)^{r−1} e_{I∖a}` with `r` the position of `a` in `I`.
pub fn interior(n: usize, a: u8) -> Result<CliffOp> {
    check_index(n, a)?;
    let mut op = CliffOp::zero(n);
    let bit = 1u32 << (a - 1);
    for mask in 0..1u32 << n {
        if mask & bit != 0 {
            let r = position(mask, a);
            op.matrix
                .set((mask & !bit) as usize, mask as usize, minus_q_pow(r - 1));
        }
    }
    Ok(op)
}

/// `𝔢_a e_I = e_a ∧ e_I = (−q)^{r−1} e_{I∪a}` with `r` the position of `a`
/// in `I∪a`.
pub fn exterior(n: usize, a: u8) -> Result<CliffOp> {
    check_index(n, a)?;
    let mut op = CliffOp::zero(n);
    let bit = 1u32 << (a - 1);
    for mask in 0..1u32 << n {
        if mask & bit == 0 {
            let r = position(mask | bit, a);
            op.matrix
                .set((mask | bit) as usize, mask as usize, minus_q_pow(r - 1));
        }
    }
    Ok(op)
}

fn check_degree(k: usize, lo: usize, hi: usize) -> Result<()> {
    if k < lo || k > hi {
        return Err(AlgebraError::DegreeOutOfRange { degree: k, max: hi });
    }
    Ok(())
}

/// `γ_i = (λ_k/λ_{k−1}) 𝔦_i` on degree-`k` inputs, `1 ≤ k ≤ N`.
pub fn gamma(i: u8, profile: &ScalingProfile, k: usize) -> Result<CliffOp> {
    let n = profile.n();
    check_degree(k, 1, n)?;
    let c = profile.lambda(k) / profile.lambda(k - 1);
    Ok(interior(n, i)?.restrict_input(k).scale(&c))
}

/// `γ_i* = (λ_{k+1}/λ_k)(λ'_k/λ'_{k+1}) 𝔢_i` on degree-`k` inputs,
/// `0 ≤ k ≤ N−1`.
pub fn gamma_star(i: u8, profile: &ScalingProfile, k: usize) -> Result<CliffOp> {
    let n = profile.n();
    check_degree(k, 0, n.saturating_sub(1))?;
    let c = &(profile.lambda(k + 1) / profile.lambda(k))
        * &(profile.lambda_prime(k) / profile.lambda_prime(k + 1));
    Ok(exterior(n, i)?.restrict_input(k).scale(&c))
}

/// `γ_i` on the whole exterior algebra.
pub fn gamma_block(i: u8, profile: &ScalingProfile) -> Result<CliffOp> {
    let n = profile.n();
    let mut op = CliffOp::zero(n);
    for k in 1..=n {
        op = op.add(&gamma(i, profile, k)?);
    }
    Ok(op)
}

/// `γ_i*` on the whole exterior algebra.
pub fn gamma_star_block(i: u8, profile: &ScalingProfile) -> Result<CliffOp> {
    let n = profile.n();
    let mut op = CliffOp::zero(n);
    for k in 0..n {
        op = op.add(&gamma_star(i, profile, k)?);
    }
    Ok(op)
}

fn witness(id: String, op: &CliffOp) -> Outcome {
    Outcome::from_witness(id, op.matrix.witness())
}

/// Exact matrix relations for rank `n`.
pub fn relation_checks(n: usize) -> Result<Vec<Outcome>> {
    let int: Vec<CliffOp> = (1..=n as u8).map(|a| interior(n, a)).collect::<Result<_>>()?;
    let ext: Vec<CliffOp> = (1..=n as u8).map(|a| exterior(n, a)).collect::<Result<_>>()?;
    let mut out = Vec::new();

    let mut offdiag = CliffOp::zero(n);
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let r = ext[i]
                    .mul(&int[j])
                    .add(&int[j].mul(&ext[i]).scale(&Scalar::q_pow(-1)));
                if offdiag.is_zero() {
                    offdiag = r;
                }
            }
        }
    }
    out.push(witness(format!("qcliff.ei_ij_offdiagonal[N={n}]"), &offdiag));

    let qfac = &Scalar::q_pow(1) * &q_minus_q_inv();
    let mut quad = CliffOp::zero(n);
    for i in 0..n {
        let mut s = ext[i].mul(&int[i]).add(&int[i].mul(&ext[i]));
        for j in 0..i {
            s = s.sub(&ext[j].mul(&int[j]).scale(&qfac));
        }
        let r = s.sub(&CliffOp::identity(n));
        if quad.is_zero() {
            quad = r;
        }
    }
    out.push(witness(format!("qcliff.quadratic_constant[N={n}]"), &quad));

    let one = BigRational::from_integer(BigInt::from(1));
    let mut car_fail = None;
    for i in 0..n {
        for j in 0..n {
            let s = ext[i].mul(&int[j]).add(&int[j].mul(&ext[i]));
            let want = if i == j { CliffOp::identity(n) } else { CliffOp::zero(n) };
            if s.specialize(&one)? != want.specialize(&one)? && car_fail.is_none() {
                car_fail = Some(format!("e{}i{} + i{}e{} at q = 1", i + 1, j + 1, j + 1, i + 1));
            }
        }
    }
    out.push(Outcome::from_witness(format!("qcliff.classical_car[N={n}]"), car_fail));

    let graded = int.iter().all(|o| o.is_graded(-1)) && ext.iter().all(|o| o.is_graded(1));
    out.push(Outcome::from_witness(
        format!("qcliff.gradedness[N={n}]"),
        (!graded).then(|| "an operator does not shift degree by one".to_string()),
    ));
    Ok(out)
}

/// Cross-checks against the pairing and Hermitian product: `𝔦_a` is
/// `⟨w, 𝔦_a x⟩ = ⟨w ∧ f_a, x⟩`, `𝔢_a` is its adjoint, and for `profile`
/// `γ_a`, `γ_a*` satisfy their defining relations and the rescaled composite
/// identities.
pub fn pairing_checks(n: usize, profile: &ScalingProfile) -> Result<Vec<Outcome>> {
    let ones = ScalingProfile::ones(n);
    let mut defining = None;
    let mut adjoint = None;
    let mut general = None;
    let mut composite = None;
    for a in 1..=n as u8 {
        let ia = interior(n, a)?;
        let ea = exterior(n, a)?;
        if ia.adjoint(&ones) != ea {
            adjoint = Some(format!("𝔢{a} is not the adjoint of 𝔦{a}"));
        }
        let g = gamma_block(a, profile)?;
        let gs = gamma_star_block(a, profile)?;
        if g.adjoint(profile) != gs && general.is_none() {
            general = Some(format!("γ{a}* is not the λ'-adjoint of γ{a}"));
        }
        let fa = ExtVector::generator(Sign::Minus, n, a)?;
        for xm in 0..1u32 << n {
            let k = xm.count_ones() as usize;
            if k == 0 {
                continue;
            }
            let x = ExtVector::from_mask(Sign::Plus, n, xm);
            let ix = ia.apply(&x)?;
            let gx = g.apply(&x)?;
            for wm in qext::subsets(n, k - 1) {
                let w = ExtVector::from_mask(Sign::Minus, n, wm);
                let wf = qext::wedge(&w, &fa)?;
                let lhs = qext::pairing(&w, &ix, &ones)?;
                let rhs = qext::pairing(&wf, &x, &ones)?;
                if lhs != rhs && defining.is_none() {
                    defining = Some(format!(
                        "<f{:?}, 𝔦{a} e{:?}> = {lhs} vs {rhs}",
                        mask_indices(wm),
                        mask_indices(xm)
                    ));
                }
                let lhs = qext::pairing(&w, &gx, profile)?;
                let rhs = qext::pairing(&wf, &x, profile)?;
                if lhs != rhs && general.is_none() {
                    general = Some(format!("γ{a} fails its defining relation on e{:?}", mask_indices(xm)));
                }
            }
        }
        for b in 1..=n as u8 {
            let gb = gamma_block(b, profile)?;
            let gsb = gamma_star_block(b, profile)?;
            let ib = interior(n, b)?;
            let eb = exterior(n, b)?;
            for k in 0..=n {
                let ratio = |hi: usize| &profile.c(hi) / &profile.c(hi - 1);
                if k >= 1 {
                    let lhs = gs.mul(&gb).restrict_input(k);
                    let rhs = ea.mul(&ib).restrict_input(k).scale(&ratio(k));
                    if lhs != rhs && composite.is_none() {
                        composite = Some(format!("γ{a}*γ{b} on degree {k}"));
                    }
                }
                if k < n {
                    let lhs = g.mul(&gsb).restrict_input(k);
                    let rhs = ia.mul(&eb).restrict_input(k).scale(&ratio(k + 1));
                    if lhs != rhs && composite.is_none() {
                        composite = Some(format!("γ{a}γ{b}* on degree {k}"));
                    }
                }
            }
        }
    }
    Ok(vec![
        Outcome::from_witness(format!("qcliff.interior_defining[N={n}]"), defining),
        Outcome::from_witness(format!("qcliff.exterior_adjoint[N={n}]"), adjoint),
        Outcome::from_witness(format!("qcliff.gamma_rescaling[N={n}]"), general),
        Outcome::from_witness(format!("qcliff.gamma_composites[N={n}]"), composite),
    ])
}

/// Rank of the span of all products (𝔦-monomial)(𝔢-monomial), computed at
/// `v = 2`; a specialized rank can only drop, so full rank there is full
/// rank over `Q(v)`.
pub fn factorization_rank(n: usize) -> Result<usize> {
    let int: Vec<CliffOp> = (1..=n as u8).map(|a| interior(n, a)).collect::<Result<_>>()?;
    let ext: Vec<CliffOp> = (1..=n as u8).map(|a| exterior(n, a)).collect::<Result<_>>()?;
    let monomial = |ops: &[CliffOp], mask: u32| {
        mask_indices(mask)
            .into_iter()
            .fold(CliffOp::identity(n), |acc, i| acc.mul(&ops[i as usize - 1]))
    };
    let v0 = BigRational::from_integer(BigInt::from(2));
    let mut rows = Vec::new();
    for a in 0..1u32 << n {
        let left = monomial(&int, a);
        for b in 0..1u32 << n {
            let prod = left.mul(&monomial(&ext, b));
            rows.push(prod.specialize(&v0)?.into_iter().flatten().collect());
        }
    }
    Ok(rational_rank(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, s: &[u8]) -> ExtVector {
        ExtVector::basis(Sign::Plus, n, s).unwrap()
    }

    #[test]
    fn interior_examples() {
        let q = Scalar::q_pow(1);
        assert_eq!(interior(2, 2).unwrap().apply(&e(2, &[1, 2])).unwrap(), e(2, &[1]).scale(&-&q));
        assert_eq!(interior(2, 1).unwrap().apply(&e(2, &[1, 2])).unwrap(), e(2, &[2]));
        assert!(interior(3, 3).unwrap().apply(&e(3, &[1, 2])).unwrap().is_zero());
        assert!(matches!(interior(2, 3), Err(AlgebraError::IndexOutOfRange { .. })));
    }

    #[test]
    fn exterior_examples() {
        let q = Scalar::q_pow(1);
        assert_eq!(exterior(2, 1).unwrap().apply(&e(2, &[2])).unwrap(), e(2, &[1, 2]));
        assert_eq!(exterior(2, 2).unwrap().apply(&e(2, &[1])).unwrap(), e(2, &[1, 2]).scale(&-&q));
        assert!(exterior(2, 1).unwrap().apply(&e(2, &[1])).unwrap().is_zero());
    }

    #[test]
    fn exterior_is_left_wedge() {
        for a in 1..=3u8 {
            for m in 0..8u32 {
                let x = ExtVector::from_mask(Sign::Plus, 3, m);
                let want = qext::wedge(&ExtVector::generator(Sign::Plus, 3, a).unwrap(), &x).unwrap();
                assert_eq!(exterior(3, a).unwrap().apply(&x).unwrap(), want);
            }
        }
    }

    #[test]
    fn gamma_examples() {
        let ones = ScalingProfile::ones(2);
        assert_eq!(gamma_block(1, &ones).unwrap(), interior(2, 1).unwrap());
        let s = Scalar::from_int(7);
        // c_0 = 1, c_1 = s, c_2 = s^2 q^{-2}.
        let c = [Scalar::one(), s.clone(), &(&s * &s) * &Scalar::q_pow(-2)];
        let p = ScalingProfile::from_c(&c).unwrap();
        let empty = ExtVector::one(Sign::Plus, 2);
        let g = gamma(1, &p, 1).unwrap().mul(&gamma_star(1, &p, 0).unwrap());
        assert_eq!(g.apply(&empty).unwrap(), empty.scale(&s));
        let e2 = e(2, &[2]);
        let g = gamma_star(2, &p, 0).unwrap().mul(&gamma(2, &p, 1).unwrap());
        assert_eq!(g.apply(&e2).unwrap(), e2.scale(&s));
        assert!(matches!(gamma(1, &p, 0), Err(AlgebraError::DegreeOutOfRange { .. })));
        assert!(matches!(gamma_star(1, &p, 2), Err(AlgebraError::DegreeOutOfRange { .. })));
    }
}
