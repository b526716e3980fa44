//! Braided exterior algebras of `u_+` (basis `e_i`) and its dual `u_-`
//! (basis `f_i`), the braiding on `u_+ ⊗ u_+`, antisymmetrizers, pairings,
//! Hermitian products and the action of the Levi subalgebra on `Λ_q(u_+)`.
//!
//! Indices are 1-based. A subset `I ⊆ {1..N}` is stored as a bitmask; `e_I`
//! is the increasing wedge `e_{i_1}∧…∧e_{i_k}` and `f_I` the decreasing wedge
//! `f_{i_k}∧…∧f_{i_1}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::{AlgebraError, Result};
use crate::identity::Outcome;
use crate::matrix::{rational_rank, Matrix};
use crate::scalar::{q_factorial, q_minus_q_inv, Scalar};
use crate::uqalg::{TriMonomial, Uq, UqElement, WeightVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    /// `u_+`, basis `e_i`.
    Plus,
    /// `u_-`, basis `f_i`.
    Minus,
}

impl Sign {
    fn symbol(self) -> char {
        match self {
            Sign::Plus => 'e',
            Sign::Minus => 'f',
        }
    }
}

/// `(-q)^k`.
fn minus_q_pow(k: i32) -> Scalar {
    let s = Scalar::q_pow(k);
    if k % 2 == 0 {
        s
    } else {
        -s
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n < 1 {
        return Err(AlgebraError::InvalidRank(n));
    }
    Ok(())
}

fn check_index(n: usize, i: u8) -> Result<()> {
    if i == 0 || i as usize > n {
        return Err(AlgebraError::IndexOutOfRange {
            index: i as usize,
            rank: n,
        });
    }
    Ok(())
}

pub fn subset_mask(indices: &[u8]) -> u32 {
    indices.iter().fold(0, |m, &i| m | 1 << (i - 1))
}

pub fn mask_indices(mask: u32) -> Vec<u8> {
    (0..32u8).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect()
}

/// All subsets of `{1..n}` of size `k`, as masks in increasing order.
pub fn subsets(n: usize, k: usize) -> Vec<u32> {
    (0..1u32 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// Matrix of an operator on `V ⊗ V`, `V = span{e_1..e_N}`; the basis vector
/// `e_i ⊗ e_j` has index `(i-1)N + (j-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundMatrix {
    n: usize,
    matrix: Matrix,
}

impl FundMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn index(&self, i: u8, j: u8) -> usize {
        (i as usize - 1) * self.n + (j as usize - 1)
    }

    /// `(R̂⊗1)(1⊗R̂)(R̂⊗1) − (1⊗R̂)(R̂⊗1)(1⊗R̂)` on `V^{⊗3}`.
    pub fn braid_residual(&self) -> Matrix {
        let id = Matrix::identity(self.n);
        let a = self.matrix.kron(&id);
        let b = id.kron(&self.matrix);
        let prod = |x: &Matrix, y: &Matrix, z: &Matrix| {
            x.mul(y).and_then(|xy| xy.mul(z)).expect("square matrices")
        };
        prod(&a, &b, &a).sub(&prod(&b, &a, &b)).expect("same shape")
    }

    /// Applies the matrix to a degree-2 tensor.
    pub fn apply(&self, t: &TensorVector) -> Result<TensorVector> {
        if t.degree != 2 || t.n != self.n {
            return Err(AlgebraError::DimensionMismatch(format!(
                "braiding on V^{{⊗2}} (N = {}) applied to degree {} tensor over N = {}",
                self.n, t.degree, t.n
            )));
        }
        let mut out = TensorVector::zero(self.n, 2);
        for (w, c) in t.terms() {
            let col = self.index(w[0], w[1]);
            for r in 0..self.n * self.n {
                let x = self.matrix.get(r, col);
                if !x.is_zero() {
                    let word = [(r / self.n + 1) as u8, (r % self.n + 1) as u8];
                    out.add_term(&word, &(c * x));
                }
            }
        }
        Ok(out)
    }
}

/// The braiding on `u_+ ⊗ u_+`:
/// `R̂(e_i⊗e_i) = q e_i⊗e_i`, `R̂(e_i⊗e_j) = e_j⊗e_i` for `i > j` and
/// `R̂(e_i⊗e_j) = e_j⊗e_i + (q − q^{-1}) e_i⊗e_j` for `i < j`.
pub fn rhat(n: usize) -> Result<FundMatrix> {
    check_rank(n)?;
    let mut r = FundMatrix {
        n,
        matrix: Matrix::zero(n * n, n * n),
    };
    let qq = q_minus_q_inv();
    for i in 1..=n as u8 {
        for j in 1..=n as u8 {
            let col = r.index(i, j);
            if i == j {
                r.matrix.set(col, col, Scalar::q_pow(1));
            } else {
                let swapped = r.index(j, i);
                r.matrix.set(swapped, col, Scalar::one());
                if i < j {
                    r.matrix.set(col, col, qq.clone());
                }
            }
        }
    }
    Ok(r)
}

/// The braiding used on `u_-`: the same rules with the order of indices
/// reversed, so that its `−q^{-1}` eigenvectors are `f_a⊗f_b − q f_b⊗f_a`
/// for `a > b`.
pub fn rhat_dual(n: usize) -> Result<FundMatrix> {
    let r = rhat(n)?;
    let flip = |x: usize| {
        let (i, j) = (x / n, x % n);
        (n - 1 - i) * n + (n - 1 - j)
    };
    let mut m = Matrix::zero(n * n, n * n);
    for (row, col, x) in r.matrix.nonzero() {
        m.set(flip(row), flip(col), x.clone());
    }
    Ok(FundMatrix { n, matrix: m })
}

fn braiding_for(sign: Sign, n: usize) -> Result<FundMatrix> {
    match sign {
        Sign::Plus => rhat(n),
        Sign::Minus => rhat_dual(n),
    }
}

/// Eigenvector bases of `R̂`: eigenvalue `q` (positive) and `−q^{-1}`
/// (negative).
#[derive(Clone, Debug)]
pub struct Eigenspaces {
    pub positive: Vec<TensorVector>,
    pub negative: Vec<TensorVector>,
}

/// The listed eigenvectors of `R̂`, each verified by applying the matrix.
pub fn braiding_eigenspaces(r: &FundMatrix) -> Result<Eigenspaces> {
    let n = r.n;
    let q = Scalar::q_pow(1);
    let q_inv = Scalar::q_pow(-1);
    let mut positive = Vec::new();
    let mut negative = Vec::new();
    for i in 1..=n as u8 {
        positive.push(TensorVector::basis(n, &[i, i]));
    }
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            let mut p = TensorVector::basis(n, &[i, j]);
            p.add_term(&[j, i], &q_inv);
            positive.push(p);
            let mut m = TensorVector::basis(n, &[i, j]);
            m.add_term(&[j, i], &-&q);
            negative.push(m);
        }
    }
    for (vs, eig) in [(&positive, q.clone()), (&negative, -&q_inv)] {
        for v in vs {
            if r.apply(v)?.sub(&v.scale(&eig))?.is_zero() {
                continue;
            }
            return Err(AlgebraError::CheckFailed(format!(
                "{v} is not an eigenvector with eigenvalue {eig}"
            )));
        }
    }
    Ok(Eigenspaces { positive, negative })
}

/// Element of `u_±^{⊗k}`, keyed by index words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    n: usize,
    degree: usize,
    coeffs: BTreeMap<Vec<u8>, Scalar>,
}

impl TensorVector {
    pub fn zero(n: usize, degree: usize) -> Self {
        Self {
            n,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, word: &[u8]) -> Self {
        let mut t = Self::zero(n, word.len());
        t.add_term(word, &Scalar::one());
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u8>, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, word: &[u8]) -> Scalar {
        self.coeffs.get(word).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, word: &[u8], c: &Scalar) {
        debug_assert_eq!(word.len(), self.degree);
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(word.to_vec()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(word);
        }
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.degree != other.degree || self.n != other.n {
            return Err(AlgebraError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) -> Result<()> {
        self.check_shape(other)?;
        for (w, d) in &other.coeffs {
            self.add_term(w, &(c * d));
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n, self.degree);
        for (w, d) in &self.coeffs {
            out.add_term(w, &(c * d));
        }
        out
    }

    /// Applies a braiding to tensor positions `pos, pos+1` (0-based).
    pub fn braid_at(&self, r: &FundMatrix, pos: usize) -> Result<Self> {
        if pos + 1 >= self.degree {
            return Err(AlgebraError::DegreeOutOfRange {
                degree: pos + 1,
                max: self.degree.saturating_sub(1),
            });
        }
        let mut out = Self::zero(self.n, self.degree);
        for (w, c) in &self.coeffs {
            let pair = r.apply(&TensorVector::basis(self.n, &w[pos..pos + 2]))?;
            for (p, d) in pair.terms() {
                let mut w2 = w.clone();
                w2[pos..pos + 2].copy_from_slice(p);
                out.add_term(&w2, &(c * d));
            }
        }
        Ok(out)
    }

    /// Whether the tensor lies in `Λ_q^k u_±`, the intersection over all
    /// adjacent positions of the `−q^{-1}` eigenspace of the braiding.
    pub fn is_antisymmetric(&self, sign: Sign) -> Result<bool> {
        let r = braiding_for(sign, self.n)?;
        let eig = -Scalar::q_pow(-1);
        for pos in 0..self.degree.saturating_sub(1) {
            if !self.braid_at(&r, pos)?.sub(&self.scale(&eig))?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for TensorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(w, c)| {
                let word: Vec<String> = w.iter().map(|i| format!("x{i}")).collect();
                format!("({c})*{}", word.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exponent `m` with `x_A ∧ x_B = (−q)^m x_{A∪B}`, or `None` if the subsets
/// meet.
fn reorder_exponent(sign: Sign, a: u32, b: u32) -> Option<i32> {
    if a & b != 0 {
        return None;
    }
    let mut m = 0;
    for i in mask_indices(a) {
        for j in mask_indices(b) {
            let out_of_order = match sign {
                Sign::Plus => i > j,
                Sign::Minus => i < j,
            };
            if out_of_order {
                m += 1;
            }
        }
    }
    Some(m)
}

/// Element of `Λ_q(u_±)` in the ordered-subset basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtVector {
    sign: Sign,
    n: usize,
    coeffs: BTreeMap<u32, Scalar>,
}

impl ExtVector {
    pub fn zero(sign: Sign, n: usize) -> Self {
        Self {
            sign,
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `e_I` or `f_I` for a strictly increasing index list `I`.
    pub fn basis(sign: Sign, n: usize, subset: &[u8]) -> Result<Self> {
        for &i in subset {
            check_index(n, i)?;
        }
        if subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(AlgebraError::Unsupported(format!(
                "subset {subset:?} is not strictly increasing"
            )));
        }
        Ok(Self::from_mask(sign, n, subset_mask(subset)))
    }

    pub fn from_mask(sign: Sign, n: usize, mask: u32) -> Self {
        let mut x = Self::zero(sign, n);
        x.coeffs.insert(mask, Scalar::one());
        x
    }

    pub fn one(sign: Sign, n: usize) -> Self {
        Self::from_mask(sign, n, 0)
    }

    pub fn generator(sign: Sign, n: usize, i: u8) -> Result<Self> {
        Self::basis(sign, n, &[i])
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u32) -> Scalar {
        self.coeffs.get(&mask).cloned().unwrap_or_default()
    }

    /// The common degree of all terms; `None` for zero or mixed degree.
    pub fn degree(&self) -> Option<usize> {
        let mut ds = self.coeffs.keys().map(|m| m.count_ones() as usize);
        let d = ds.next()?;
        ds.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, mask: u32, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(mask).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.sign != other.sign || self.n != other.n {
            return Err(AlgebraError::AlgebraMismatch);
        }
        Ok(())
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) -> Result<()> {
        self.check_same(other)?;
        for (m, d) in &other.coeffs {
            self.add_term(*m, &(c * d));
        }
        Ok(())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one())?;
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.sign, self.n);
        for (m, d) in &self.coeffs {
            out.add_term(*m, &(c * d));
        }
        out
    }

    /// Coefficients as a dense vector over all `2^N` subsets.
    pub fn to_dense(&self) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); 1 << self.n];
        for (m, c) in &self.coeffs {
            v[*m as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(sign: Sign, n: usize, v: &[Scalar]) -> Self {
        let mut x = Self::zero(sign, n);
        for (m, c) in v.iter().enumerate() {
            x.add_term(m as u32, c);
        }
        x
    }
}

impl fmt::Display for ExtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let sym = self.sign.symbol();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let idx: String = mask_indices(*m).iter().map(|i| i.to_string()).collect();
                format!("({c})*{sym}_{{{idx}}}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Wedge product, reduced with `e_i∧e_j = −q^{-1}e_j∧e_i` and
/// `f_i∧f_j = −q f_j∧f_i` for `i < j`.
pub fn wedge(x: &ExtVector, y: &ExtVector) -> Result<ExtVector> {
    x.check_same(y)?;
    let mut out = ExtVector::zero(x.sign, x.n);
    for (a, c) in &x.coeffs {
        for (b, d) in &y.coeffs {
            if let Some(m) = reorder_exponent(x.sign, *a, *b) {
                out.add_term(a | b, &(&(c * d) * &minus_q_pow(m)));
            }
        }
    }
    Ok(out)
}

/// Image of `x_{w_1} ⊗ … ⊗ x_{w_k}` in the exterior algebra.
pub fn wedge_word(sign: Sign, n: usize, word: &[u8]) -> Result<ExtVector> {
    let mut acc = ExtVector::one(sign, n);
    for &i in word {
        acc = wedge(&acc, &ExtVector::generator(sign, n, i)?)?;
    }
    Ok(acc)
}

/// `π^k_±`: replaces `⊗` by `∧`.
pub fn project_pi(sign: Sign, t: &TensorVector) -> Result<ExtVector> {
    let mut out = ExtVector::zero(sign, t.n);
    for (w, c) in t.terms() {
        out.add_scaled(&wedge_word(sign, t.n, w)?, c)?;
    }
    Ok(out)
}

fn permutations(items: &[u8]) -> Vec<Vec<u8>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn inversions(seq: &[u8]) -> i32 {
    let mut m = 0;
    for s in 0..seq.len() {
        for t in s + 1..seq.len() {
            if seq[s] > seq[t] {
                m += 1;
            }
        }
    }
    m
}

/// The antisymmetrizer `A`: `Σ_p (−q)^{inv p} e_{p(i_1)}⊗…⊗e_{p(i_k)}` for
/// `u_+`, and the same sum over the reversed words `f_{p(i_k)}⊗…⊗f_{p(i_1)}`
/// for `u_-`.
pub fn antisymmetrize(sign: Sign, n: usize, subset: &[u8]) -> Result<TensorVector> {
    let basis = ExtVector::basis(sign, n, subset)?;
    let indices = mask_indices(*basis.coeffs.keys().next().expect("basis vector"));
    let mut out = TensorVector::zero(n, indices.len());
    for p in permutations(&indices) {
        let c = minus_q_pow(inversions(&p));
        let word: Vec<u8> = match sign {
            Sign::Plus => p,
            Sign::Minus => p.into_iter().rev().collect(),
        };
        out.add_term(&word, &c);
    }
    Ok(out)
}

/// `q^{k(k-1)/2}[k]!`, the value of `π ∘ A` on basis elements.
pub fn antisymmetrizer_constant(k: usize) -> Scalar {
    let k = k as i32;
    &Scalar::q_pow(k * (k - 1) / 2) * &q_factorial(k as u32)
}

/// Lift of an exterior element to antisymmetric tensors, `π^{-1}`.
pub fn lift(x: &ExtVector) -> Result<TensorVector> {
    let k = x.degree().unwrap_or(0);
    let inv = antisymmetrizer_constant(k).inv()?;
    let mut out = TensorVector::zero(x.n, k);
    for (m, c) in x.terms() {
        if m.count_ones() as usize != k {
            return Err(AlgebraError::Unsupported("lift of a mixed-degree element".into()));
        }
        out.add_scaled(&antisymmetrize(x.sign, x.n, &mask_indices(m))?, &(c * &inv))?;
    }
    Ok(out)
}

/// `⟨y_1⊗…⊗y_k, x_1⊗…⊗x_k⟩ = Π_t ⟨y_{k+1-t}, x_t⟩` with `⟨f_a, e_b⟩ = δ_{ab}`.
pub fn tensor_pairing(y: &TensorVector, x: &TensorVector) -> Result<Scalar> {
    y.check_shape(x)?;
    let mut s = Scalar::zero();
    for (wy, c) in y.terms() {
        let rev: Vec<u8> = wy.iter().rev().copied().collect();
        let d = x.coeff(&rev);
        if !d.is_zero() {
            s += &(c * &d);
        }
    }
    Ok(s)
}

fn check_pairing_args(a: &ExtVector, b: &ExtVector, sa: Sign, sb: Sign) -> Result<usize> {
    if a.sign != sa || b.sign != sb || a.n != b.n {
        return Err(AlgebraError::AlgebraMismatch);
    }
    let mixed = |x: &ExtVector| !x.is_zero() && x.degree().is_none();
    let (da, db) = (a.degree(), b.degree());
    match (da, db) {
        (Some(x), Some(y)) if x != y => Err(AlgebraError::DegreeMismatch { left: x, right: y }),
        _ if mixed(a) || mixed(b) => Err(AlgebraError::Unsupported(
            "pairing of mixed-degree elements".into(),
        )),
        _ => Ok(da.or(db).unwrap_or(0)),
    }
}

/// Pairing induced from the tensor pairing through `π^{-1}`; equals
/// `q^{-k(k-1)/2}/[k]!` on matching basis elements.
pub fn raw_pairing(y: &ExtVector, x: &ExtVector) -> Result<Scalar> {
    check_pairing_args(y, x, Sign::Minus, Sign::Plus)?;
    tensor_pairing(&lift(y)?, &lift(x)?)
}

/// Per-degree scalings: `⟨f_I, e_I⟩ = λ_k` and `(e_I, e_I) = λ'_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingProfile {
    lambda: Vec<Scalar>,
    lambda_prime: Vec<Scalar>,
}

impl ScalingProfile {
    pub fn new(lambda: Vec<Scalar>, lambda_prime: Vec<Scalar>) -> Result<Self> {
        if lambda.len() != lambda_prime.len() || lambda.is_empty() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} pairing scalings vs {} inner product scalings",
                lambda.len(),
                lambda_prime.len()
            )));
        }
        if lambda.iter().chain(&lambda_prime).any(Scalar::is_zero) {
            return Err(AlgebraError::Unsupported("scalings must be nonzero".into()));
        }
        Ok(Self {
            lambda,
            lambda_prime,
        })
    }

    /// `λ_k = λ'_k = 1`.
    pub fn ones(n: usize) -> Self {
        Self {
            lambda: vec![Scalar::one(); n + 1],
            lambda_prime: vec![Scalar::one(); n + 1],
        }
    }

    /// The profile `λ_k = 1`, `λ'_k = 1/c_k`, which realizes given `c_k`.
    pub fn from_c(c: &[Scalar]) -> Result<Self> {
        let lambda_prime = c.iter().map(Scalar::inv).collect::<Result<Vec<_>, _>>()?;
        Self::new(vec![Scalar::one(); c.len()], lambda_prime)
    }

    pub fn n(&self) -> usize {
        self.lambda.len() - 1
    }

    pub fn lambda(&self, k: usize) -> &Scalar {
        &self.lambda[k]
    }

    pub fn lambda_prime(&self, k: usize) -> &Scalar {
        &self.lambda_prime[k]
    }

    /// `c_k = λ_k²/λ'_k` (λ real).
    pub fn c(&self, k: usize) -> Scalar {
        &(&self.lambda[k] * &self.lambda[k]) / &self.lambda_prime[k]
    }

    /// Whether every `λ'_k` is positive at `v = v0`.
    pub fn positive_at(&self, v0: &BigRational) -> bool {
        self.lambda_prime
            .iter()
            .all(|l| l.specialize(v0).is_ok_and(|x| x.is_positive()))
    }
}

/// `⟨y, x⟩_λ` with `⟨f_I, e_J⟩_{λ,k} = λ_k δ_{IJ}`.
pub fn pairing(y: &ExtVector, x: &ExtVector, profile: &ScalingProfile) -> Result<Scalar> {
    let k = check_pairing_args(y, x, Sign::Minus, Sign::Plus)?;
    diagonal_form(y, x, profile.lambda.get(k), k)
}

/// `(x, z)_{λ'}` with `(e_I, e_J)_{λ',k} = λ'_k δ_{IJ}`; conjugation is
/// trivial because `v` is taken real.
pub fn hermitian(x: &ExtVector, z: &ExtVector, profile: &ScalingProfile) -> Result<Scalar> {
    let k = check_pairing_args(x, z, Sign::Plus, Sign::Plus)?;
    diagonal_form(x, z, profile.lambda_prime.get(k), k)
}

fn diagonal_form(a: &ExtVector, b: &ExtVector, scale: Option<&Scalar>, k: usize) -> Result<Scalar> {
    let scale = scale.ok_or(AlgebraError::DegreeOutOfRange {
        degree: k,
        max: a.n,
    })?;
    let mut s = Scalar::zero();
    for (m, c) in a.terms() {
        let d = b.coeff(m);
        if !d.is_zero() {
            s += &(c * &d);
        }
    }
    Ok(&s * scale)
}

enum Gen {
    E(u8),
    F(u8),
    K(WeightVec),
}

/// Exponent of `q` in `K_λ ▷ e_i`, namely `(λ, ξ_i) = Σ_{l ≥ i} m_l`.
fn k_exponent(lambda: &WeightVec, n: usize, i: u8) -> i32 {
    (i as usize..=n).map(|l| lambda.coord(l)).sum()
}

/// Action of a generator on `x_{w_1} ⊗ … ⊗ x_{w_k}` through the coproduct
/// `Δ(E_j) = E_j⊗1 + K_j⊗E_j`, `Δ(F_j) = F_j⊗K_j^{-1} + 1⊗F_j`.
fn act_word(g: &Gen, n: usize, word: &[u8]) -> Vec<(Scalar, Vec<u8>)> {
    let alpha = |j: u8| WeightVec::simple_root(n, j as usize);
    match g {
        Gen::K(l) => {
            let e: i32 = word.iter().map(|&i| k_exponent(l, n, i)).sum();
            vec![(Scalar::q_pow(e), word.to_vec())]
        }
        Gen::E(j) => {
            let a = alpha(*j);
            let mut out = Vec::new();
            for t in 0..word.len() {
                if word[t] == j + 1 {
                    let e: i32 = word[..t].iter().map(|&i| k_exponent(&a, n, i)).sum();
                    let mut w = word.to_vec();
                    w[t] -= 1;
                    out.push((-Scalar::v_pow(-1).shift_v(2 * e), w));
                }
            }
            out
        }
        Gen::F(j) => {
            let a = alpha(*j);
            let mut out = Vec::new();
            for t in 0..word.len() {
                if word[t] == *j && (*j as usize) < n {
                    let e: i32 = word[t + 1..].iter().map(|&i| -k_exponent(&a, n, i)).sum();
                    let mut w = word.to_vec();
                    w[t] += 1;
                    out.push((-Scalar::v_pow(1).shift_v(2 * e), w));
                }
            }
            out
        }
    }
}

fn monomial_gens(m: &TriMonomial) -> Vec<Gen> {
    let mut gens: Vec<Gen> = m.fword.as_slice().iter().map(|&j| Gen::F(j)).collect();
    gens.push(Gen::K(m.cartan));
    gens.extend(m.eword.as_slice().iter().map(|&j| Gen::E(j)));
    gens
}

fn require_levi(uq: &Uq, a: &UqElement) -> Result<()> {
    if let Some((m, c)) = a.non_levi_witness(uq.rank()) {
        return Err(AlgebraError::NotLevi {
            witness: crate::uqalg::render_term(m, c, uq.rank()),
        });
    }
    Ok(())
}

/// Action of `a ∈ U_q(l)` on `u_+^{⊗k}`, generators acting on degree one by
/// `K_λ▷e_i = q^{(λ,ξ_i)}e_i`, `E_j▷e_i = −δ_{j,i-1}q^{-1/2}e_{i-1}`,
/// `F_j▷e_i = −δ_{j,i}q^{1/2}e_{i+1}`.
pub fn levi_action_tensor(uq: &Uq, a: &UqElement, t: &TensorVector) -> Result<TensorVector> {
    require_levi(uq, a)?;
    let n = uq.rank();
    if t.n != n {
        return Err(AlgebraError::DimensionMismatch(format!(
            "tensor over N = {} acted on by rank {n}",
            t.n
        )));
    }
    let mut out = TensorVector::zero(n, t.degree);
    for (m, c) in a.terms() {
        let mut cur = t.clone();
        for g in monomial_gens(m).iter().rev() {
            let mut next = TensorVector::zero(n, t.degree);
            for (w, d) in cur.terms() {
                for (e, w2) in act_word(g, n, w) {
                    next.add_term(&w2, &(d * &e));
                }
            }
            cur = next;
        }
        out.add_scaled(&cur, c)?;
    }
    Ok(out)
}

/// Action of `a ∈ U_q(l)` on `Λ_q(u_+)`, computed on the increasing-word
/// representative of each basis element and reduced by `π`.
pub fn levi_action(uq: &Uq, a: &UqElement, x: &ExtVector) -> Result<ExtVector> {
    require_levi(uq, a)?;
    if x.sign != Sign::Plus {
        return Err(AlgebraError::Unsupported("Levi action is implemented on u_+".into()));
    }
    let mut out = ExtVector::zero(Sign::Plus, x.n);
    for (mask, c) in x.terms() {
        let t = TensorVector::basis(x.n, &mask_indices(mask));
        let image = project_pi(Sign::Plus, &levi_action_tensor(uq, a, &t)?)?;
        out.add_scaled(&image, c)?;
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Dimension of the tensor-level `Λ_q^k u_±`, computed at `v = 2`.
///
/// The braidings preserve index content, so the kernel is computed content
/// block by content block. Specialization can only enlarge a kernel, and the
/// `C(N,k)` antisymmetrized basis vectors are independent over `Q(v)`, so a
/// specialized value of `C(N,k)` pins the generic dimension.
pub fn antisymmetric_tensor_dimension(sign: Sign, n: usize, k: usize) -> Result<usize> {
    let r = braiding_for(sign, n)?;
    let v0 = BigRational::from_integer(BigInt::from(2));
    let mut total = 0;
    for content in multisets(n, k) {
        let mut words: Vec<Vec<u8>> = permutations(&content);
        words.sort();
        words.dedup();
        let index: BTreeMap<&Vec<u8>, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut rows = Vec::new();
        for pos in 0..k.saturating_sub(1) {
            let mut m = Matrix::zero(words.len(), words.len());
            for (col, w) in words.iter().enumerate() {
                let t = TensorVector::basis(n, w);
                let image = t.braid_at(&r, pos)?;
                for (w2, c) in image.terms() {
                    m.add_at(index[w2], col, c);
                }
                m.add_at(col, col, &Scalar::q_pow(-1));
            }
            rows.extend(m.specialize(&v0)?);
        }
        total += words.len() - rational_rank(rows);
    }
    Ok(total)
}

fn multisets(n: usize, k: usize) -> Vec<Vec<u8>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in multisets(n, k - 1) {
        let start = m.last().copied().unwrap_or(1);
        for i in start..=n as u8 {
            let mut m2 = m.clone();
            m2.push(i);
            out.push(m2);
        }
    }
    out
}

fn outcome_from(id: String, failure: Option<String>) -> Outcome {
    Outcome::from_witness(id, failure)
}

/// Every braiding check for `u_+` of dimension `n`.
pub fn braiding_checks(n: usize) -> Result<Vec<Outcome>> {
    let r = rhat(n)?;
    let mut out = vec![outcome_from(
        format!("qext.braid_equation[N={n}]"),
        r.braid_residual().witness(),
    )];
    let eig = braiding_eigenspaces(&r);
    let counts_ok = eig
        .as_ref()
        .is_ok_and(|e| e.positive.len() == n * (n + 1) / 2 && e.negative.len() == n * (n - 1) / 2);
    out.push(match (&eig, counts_ok) {
        (Ok(_), true) => Outcome::pass(format!("qext.eigenvectors[N={n}]")),
        (Err(e), _) => Outcome::fail(format!("qext.eigenvectors[N={n}]"), e.to_string()),
        (Ok(e), false) => Outcome::fail(
            format!("qext.eigenvectors[N={n}]"),
            format!("dimensions {} + {}", e.positive.len(), e.negative.len()),
        ),
    });
    if let Ok(e) = eig {
        out.push(relation_quotients(n, &e)?);
    }
    Ok(out)
}

/// Quotienting by the positive span gives the wedge relations, and by the
/// negative span the relations `e_i e_j = q e_j e_i` (`i < j`) of `S_q(u_+)`.
fn relation_quotients(n: usize, e: &Eigenspaces) -> Result<Outcome> {
    let id = format!("qext.relation_quotients[N={n}]");
    for p in &e.positive {
        let image = project_pi(Sign::Plus, p)?;
        if !image.is_zero() {
            return Ok(Outcome::fail(id, format!("π({p}) = {image}")));
        }
    }
    for m in &e.negative {
        // Commutative monomials with the rule e_j e_i ↦ q^{-1} e_i e_j, j > i.
        let mut sym: BTreeMap<Vec<u8>, Scalar> = BTreeMap::new();
        for (w, c) in m.terms() {
            let (key, c) = if w[0] > w[1] {
                (vec![w[1], w[0]], c * &Scalar::q_pow(-1))
            } else {
                (w.clone(), c.clone())
            };
            *sym.entry(key).or_default() += &c;
        }
        if let Some((w, c)) = sym.iter().find(|(_, c)| !c.is_zero()) {
            return Ok(Outcome::fail(id, format!("{m} leaves {c} on {w:?}")));
        }
    }
    let rank_at_two = {
        let v0 = BigRational::from_integer(BigInt::from(2));
        let mut rows = Vec::new();
        for t in e.positive.iter().chain(&e.negative) {
            let mut row = vec![BigRational::from_integer(BigInt::from(0)); n * n];
            for (w, c) in t.terms() {
                row[(w[0] as usize - 1) * n + w[1] as usize - 1] = c.specialize(&v0)?;
            }
            rows.push(row);
        }
        rational_rank(rows)
    };
    if rank_at_two != n * n {
        return Ok(Outcome::fail(id, format!("eigenvectors span {rank_at_two} < {}", n * n)));
    }
    Ok(Outcome::pass(id))
}

/// Pairing, antisymmetrizer and dimension checks for `u_+` of dimension `n`.
pub fn pairing_checks(n: usize) -> Result<Vec<Outcome>> {
    let mut out = Vec::new();
    let mut fail: Option<String> = None;
    let mut anti_fail: Option<String> = None;
    let mut dim_fail: Option<String> = None;
    for k in 0..=n {
        let expected = &Scalar::q_pow(-((k * k.saturating_sub(1) / 2) as i32)) / &q_factorial(k as u32);
        let masks = subsets(n, k);
        for sign in [Sign::Plus, Sign::Minus] {
            let dim = antisymmetric_tensor_dimension(sign, n, k)?;
            if dim != binomial(n, k) && dim_fail.is_none() {
                dim_fail = Some(format!("{sign:?} k={k}: dimension {dim}"));
            }
        }
        for &a in &masks {
            let idx = mask_indices(a);
            for sign in [Sign::Plus, Sign::Minus] {
                let t = antisymmetrize(sign, n, &idx)?;
                let pi = project_pi(sign, &t)?;
                let want = ExtVector::from_mask(sign, n, a).scale(&antisymmetrizer_constant(k));
                if anti_fail.is_none() && (!t.is_antisymmetric(sign)? || pi != want) {
                    anti_fail = Some(format!("{sign:?} I={idx:?}: π(A) = {pi}"));
                }
            }
            for &b in &masks {
                let got = raw_pairing(
                    &ExtVector::from_mask(Sign::Minus, n, a),
                    &ExtVector::from_mask(Sign::Plus, n, b),
                )?;
                let want = if a == b { expected.clone() } else { Scalar::zero() };
                if got != want && fail.is_none() {
                    fail = Some(format!(
                        "<f{:?}, e{:?}> = {got}, expected {want}",
                        mask_indices(a),
                        mask_indices(b)
                    ));
                }
            }
        }
    }
    out.push(outcome_from(format!("qext.raw_pairing[N={n}]"), fail));
    out.push(outcome_from(format!("qext.antisymmetrizer[N={n}]"), anti_fail));
    out.push(outcome_from(format!("qext.exterior_dimension[N={n}]"), dim_fail));
    out.push(outcome_from(format!("qext.quadratic_duality[N={n}]"), quadratic_duality_failure(n)?));
    Ok(out)
}

/// `f_a⊗f_a` and `f_i⊗f_j + q f_j⊗f_i` (`i < j`) annihilate `Λ_q² u_+`.
fn quadratic_duality_failure(n: usize) -> Result<Option<String>> {
    let eig = braiding_eigenspaces(&rhat(n)?)?;
    let mut annihilators = Vec::new();
    for a in 1..=n as u8 {
        annihilators.push(TensorVector::basis(n, &[a, a]));
    }
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            let mut t = TensorVector::basis(n, &[i, j]);
            t.add_term(&[j, i], &Scalar::q_pow(1));
            annihilators.push(t);
        }
    }
    for y in &annihilators {
        for x in &eig.negative {
            let p = tensor_pairing(y, x)?;
            if !p.is_zero() {
                return Ok(Some(format!("<{y}, {x}> = {p}")));
            }
        }
    }
    Ok(None)
}

fn levi_generators(uq: &Uq) -> Vec<(String, UqElement)> {
    let n = uq.rank();
    let mut gens = Vec::new();
    for j in 1..n as u8 {
        gens.push((format!("E{j}"), uq.e(j)));
        gens.push((format!("F{j}"), uq.f(j)));
    }
    for l in crate::rootvec::sample_weights(n) {
        gens.push((l.render(n), uq.k(l)));
    }
    gens
}

/// Module checks for the Levi action: the degree-one Hermitian product is
/// invariant, the printed example values hold, and each generator maps the
/// wedge relations (the positive eigenvectors) into their span.
pub fn levi_checks(uq: &Uq) -> Result<Vec<Outcome>> {
    let n = uq.rank();
    let profile = ScalingProfile::ones(n);
    let mut equiv_fail = None;
    let mut rel_fail = None;
    let eig = braiding_eigenspaces(&rhat(n)?)?;
    for (name, g) in levi_generators(uq) {
        let gs = uq.star(&g)?;
        for a in 1..=n as u8 {
            for b in 1..=n as u8 {
                let ea = ExtVector::generator(Sign::Plus, n, a)?;
                let eb = ExtVector::generator(Sign::Plus, n, b)?;
                let lhs = hermitian(&ea, &levi_action(uq, &g, &eb)?, &profile)?;
                let rhs = hermitian(&levi_action(uq, &gs, &ea)?, &eb, &profile)?;
                if lhs != rhs && equiv_fail.is_none() {
                    equiv_fail = Some(format!("{name}: (e{a}, X▷e{b}) = {lhs} but (X*▷e{a}, e{b}) = {rhs}"));
                }
            }
        }
        for p in &eig.positive {
            let image = project_pi(Sign::Plus, &levi_action_tensor(uq, &g, p)?)?;
            if !image.is_zero() && rel_fail.is_none() {
                rel_fail = Some(format!("{name}▷({p}) leaves {image}"));
            }
        }
    }
    let kn = uq.k(WeightVec::fundamental(n));
    let mut example_fail = None;
    for i in 1..=n as u8 {
        let ei = ExtVector::generator(Sign::Plus, n, i)?;
        if levi_action(uq, &kn, &ei)? != ei.scale(&Scalar::q_pow(1)) {
            example_fail = Some(format!("K_ωN ▷ e{i} is not q e{i}"));
        }
    }
    let e1 = ExtVector::generator(Sign::Plus, n, 1)?;
    let e2 = ExtVector::generator(Sign::Plus, n, 2)?;
    if levi_action(uq, &uq.f(1), &e1)? != e2.scale(&-Scalar::v_pow(1)) {
        example_fail = Some("F1 ▷ e1 is not -v e2".into());
    }
    if !levi_action(uq, &uq.e(1), &e1)?.is_zero() {
        example_fail = Some("E1 ▷ e1 is nonzero".into());
    }
    Ok(vec![
        outcome_from(format!("qext.hermitian_equivariance[N={n}]"), equiv_fail),
        outcome_from(format!("qext.levi_preserves_relations[N={n}]"), rel_fail),
        outcome_from(format!("qext.levi_action_examples[N={n}]"), example_fail),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, s: &[u8]) -> ExtVector {
        ExtVector::basis(Sign::Plus, n, s).unwrap()
    }

    fn f(n: usize, s: &[u8]) -> ExtVector {
        ExtVector::basis(Sign::Minus, n, s).unwrap()
    }

    #[test]
    fn rhat_rules() {
        let r = rhat(2).unwrap();
        let t = r.apply(&TensorVector::basis(2, &[1, 2])).unwrap();
        let mut want = TensorVector::basis(2, &[2, 1]);
        want.add_term(&[1, 2], &q_minus_q_inv());
        assert_eq!(t, want);
        assert_eq!(
            r.apply(&TensorVector::basis(2, &[2, 1])).unwrap(),
            TensorVector::basis(2, &[1, 2])
        );
        assert_eq!(
            r.apply(&TensorVector::basis(2, &[2, 2])).unwrap(),
            TensorVector::basis(2, &[2, 2]).scale(&Scalar::q_pow(1))
        );
    }

    #[test]
    fn eigenspace_counts() {
        let e2 = braiding_eigenspaces(&rhat(2).unwrap()).unwrap();
        assert_eq!((e2.positive.len(), e2.negative.len()), (3, 1));
        let e3 = braiding_eigenspaces(&rhat(3).unwrap()).unwrap();
        assert_eq!(e3.negative.len(), 3);
    }

    #[test]
    fn wedge_relations() {
        let q = Scalar::q_pow(1);
        assert_eq!(wedge(&e(2, &[2]), &e(2, &[1])).unwrap(), e(2, &[1, 2]).scale(&-&q));
        assert!(wedge(&e(2, &[1]), &e(2, &[1])).unwrap().is_zero());
        assert_eq!(wedge(&f(2, &[1]), &f(2, &[2])).unwrap(), f(2, &[1, 2]).scale(&-&q));
        assert_eq!(wedge(&f(2, &[2]), &f(2, &[1])).unwrap(), f(2, &[1, 2]));
        assert_eq!(
            wedge(&e(2, &[1]), &f(2, &[2])),
            Err(AlgebraError::AlgebraMismatch)
        );
    }

    #[test]
    fn antisymmetrizer_examples() {
        assert_eq!(
            antisymmetrize(Sign::Plus, 3, &[2]).unwrap(),
            TensorVector::basis(3, &[2])
        );
        let mut want = TensorVector::basis(2, &[1, 2]);
        want.add_term(&[2, 1], &-Scalar::q_pow(1));
        assert_eq!(antisymmetrize(Sign::Plus, 2, &[1, 2]).unwrap(), want);
    }

    #[test]
    fn projection_examples() {
        assert!(project_pi(Sign::Plus, &TensorVector::basis(2, &[1, 1])).unwrap().is_zero());
        assert_eq!(
            project_pi(Sign::Plus, &TensorVector::basis(2, &[2, 1])).unwrap(),
            e(2, &[1, 2]).scale(&-Scalar::q_pow(1))
        );
    }

    #[test]
    fn pairings() {
        let raw = raw_pairing(&f(2, &[1, 2]), &e(2, &[1, 2])).unwrap();
        assert_eq!(raw, &Scalar::q_pow(-1) / &q_factorial(2));
        assert!(raw_pairing(&f(3, &[1, 2]), &e(3, &[1, 3])).unwrap().is_zero());
        let p = ScalingProfile::new(
            vec![Scalar::from_int(5), Scalar::from_int(2), Scalar::from_int(3)],
            vec![Scalar::from_int(7), Scalar::from_int(11), Scalar::from_int(13)],
        )
        .unwrap();
        let empty_f = ExtVector::one(Sign::Minus, 2);
        let empty_e = ExtVector::one(Sign::Plus, 2);
        assert_eq!(pairing(&empty_f, &empty_e, &p).unwrap(), Scalar::from_int(5));
        assert_eq!(hermitian(&empty_e, &empty_e, &p).unwrap(), Scalar::from_int(7));
        assert_eq!(hermitian(&e(2, &[1]), &e(2, &[1]), &p).unwrap(), Scalar::from_int(11));
        assert!(hermitian(&e(2, &[1]), &e(2, &[2]), &p).unwrap().is_zero());
        assert!(matches!(
            pairing(&f(2, &[1]), &e(2, &[1, 2]), &p),
            Err(AlgebraError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn levi_examples() {
        let uq = Uq::new(2, Uq::default_bound(2)).unwrap();
        let e1 = e(2, &[1]);
        let kn = uq.k(WeightVec::fundamental(2));
        assert_eq!(levi_action(&uq, &kn, &e1).unwrap(), e1.scale(&Scalar::q_pow(1)));
        assert_eq!(
            levi_action(&uq, &uq.f(1), &e1).unwrap(),
            e(2, &[2]).scale(&-Scalar::v_pow(1))
        );
        assert!(levi_action(&uq, &uq.e(1), &e1).unwrap().is_zero());
        assert!(matches!(
            levi_action(&uq, &uq.e(2), &e1),
            Err(AlgebraError::NotLevi { .. })
        ));
    }
}
