//! Exact arithmetic in the rational function field `Q(v)`, where `v = q^{1/2}`.
//!
//! Every coefficient in the crate is a [`Scalar`]. Scalars are kept in a
//! canonical form (coprime numerator and denominator, primitive denominator
//! with positive leading coefficient and nonzero constant term), so two
//! scalars are equal exactly when their representations are equal.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ScalarError;

/// Dense polynomial with rational coefficients, lowest degree first, no
/// trailing zeros. The zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
struct Poly(Vec<BigRational>);

impl Poly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    fn add(&self, other: &Poly) -> Poly {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = long.0.clone();
        for (o, c) in out.iter_mut().zip(&short.0) {
            *o += c;
        }
        Poly(out).trim()
    }

    fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::default();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly(out).trim()
    }

    fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.0.len() < divisor.0.len() {
            return (Poly::default(), self.clone());
        }
        let mut rem = self.0.clone();
        let dl = divisor.0.len();
        let inv_lead = divisor.lead().recip();
        let mut quot = vec![BigRational::zero(); rem.len() - dl + 1];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dl - 1] * &inv_lead;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.0.iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dl - 1);
        (Poly(quot).trim(), Poly(rem).trim())
    }

    fn monic(&self) -> Poly {
        let inv = self.lead().recip();
        self.scale(&inv)
    }

    fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Signed content: the rational `c` such that `self / c` has coprime
    /// integer coefficients and a positive leading coefficient.
    fn content(&self) -> BigRational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.0 {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let c = BigRational::new(num_gcd, den_lcm);
        if self.lead().is_negative() {
            -c
        } else {
            c
        }
    }
}

/// A Laurent polynomial in `v` with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    /// Exponent of `coeffs.0[0]`; zero for the zero polynomial.
    low: i32,
    coeffs: Poly,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    /// `c * v^exp`.
    pub fn monomial(c: BigRational, exp: i32) -> Self {
        Self::from_parts(exp, Poly(vec![c]))
    }

    /// Builds a Laurent polynomial from `(exponent, coefficient)` pairs.
    /// Repeated exponents are summed.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let terms: Vec<_> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_parts(low, Poly(coeffs))
    }

    fn from_parts(low: i32, poly: Poly) -> Self {
        let mut poly = poly.trim();
        if poly.is_zero() {
            return Self::zero();
        }
        let lead_zeros = poly.0.iter().take_while(|c| c.is_zero()).count();
        poly.0.drain(..lead_zeros);
        Self {
            low: low + lead_zeros as i32,
            coeffs: poly,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Lowest exponent with a nonzero coefficient (`None` for zero).
    pub fn min_exp(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exp(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.degree() as i32)
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        let idx = exp - self.low;
        if idx < 0 {
            return BigRational::zero();
        }
        self.coeffs
            .0
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> + '_ {
        self.coeffs
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let a = self.padded(low);
        let b = other.padded(low);
        Self::from_parts(low, a.add(&b))
    }

    fn padded(&self, low: i32) -> Poly {
        let pad = (self.low - low) as usize;
        let mut v = vec![BigRational::zero(); pad];
        v.extend(self.coeffs.0.iter().cloned());
        Poly(v)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        Self::from_parts(self.low + other.low, self.coeffs.mul(&other.coeffs))
    }

    fn neg_ref(&self) -> Self {
        Self {
            low: self.low,
            coeffs: self.coeffs.neg(),
        }
    }

    /// Exact evaluation at a nonzero rational point (any point when all
    /// exponents are nonnegative).
    pub fn eval(&self, v0: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.0.iter().rev() {
            acc = acc * v0 + c;
        }
        if self.low >= 0 {
            acc * pow_rat(v0, self.low as u32)
        } else {
            acc / pow_rat(v0, (-self.low) as u32)
        }
    }
}

fn pow_rat(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow(x.clone(), e as usize)
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        let terms: Vec<_> = self.terms().collect();
        for (e, c) in terms.into_iter().rev() {
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (abs.is_one(), e) {
                (_, 0) => write!(f, "{abs}")?,
                (true, 1) => write!(f, "v")?,
                (true, _) => write!(f, "v^{e}")?,
                (false, 1) => write!(f, "{abs}*v")?,
                (false, _) => write!(f, "{abs}*v^{e}")?,
            }
        }
        Ok(())
    }
}

/// An element of `Q(v)` in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    /// Ordinary polynomial (`low == 0`), primitive, positive leading
    /// coefficient, coprime to `num`.
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self {
            num: LaurentPoly::monomial(c, 0),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    /// `v^k`.
    pub fn v_pow(k: i32) -> Self {
        Self::from_laurent(LaurentPoly::monomial(BigRational::one(), k))
    }

    /// `q^k = v^{2k}`.
    pub fn q_pow(k: i32) -> Self {
        Self::v_pow(2 * k)
    }

    /// `numerator / denominator`; fails when the denominator is zero.
    pub fn ratio(numerator: LaurentPoly, denominator: LaurentPoly) -> Result<Self, ScalarError> {
        if denominator.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(numerator, denominator))
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.coeffs.is_one() && self.num.low == 0 && self.num.coeffs.is_one()
    }

    /// True when the denominator is 1, i.e. the scalar is a Laurent polynomial.
    pub fn is_laurent(&self) -> bool {
        self.den.coeffs.is_one()
    }

    fn normalize(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let mut nlow = num.low - den.low;
        let mut np = num.coeffs;
        let mut dp = den.coeffs;
        if dp.degree() > 0 {
            let g = np.gcd(&dp);
            if g.degree() > 0 {
                np = np.div_rem(&g).0;
                dp = dp.div_rem(&g).0;
            }
        }
        let c = dp.content();
        if !c.is_one() {
            let inv = c.recip();
            np = np.scale(&inv);
            dp = dp.scale(&inv);
        }
        // np keeps a nonzero constant term: any common factor v was absorbed in `low`.
        let lead_zeros = np.0.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            np.0.drain(..lead_zeros);
            nlow += lead_zeros as i32;
        }
        Self {
            num: LaurentPoly {
                low: nlow,
                coeffs: np,
            },
            den: LaurentPoly { low: 0, coeffs: dp },
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i32) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// Multiplies by `v^k` without renormalizing.
    pub fn shift_v(&self, k: i32) -> Self {
        Self {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Exact evaluation at `v = v0`.
    pub fn specialize(&self, v0: &BigRational) -> Result<BigRational, ScalarError> {
        if v0.is_zero() {
            return Err(ScalarError::ZeroPoint);
        }
        let d = self.den.eval(v0);
        if d.is_zero() {
            return Err(ScalarError::Pole { point: v0.to_string() });
        }
        Ok(self.num.eval(v0) / d)
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add_ref(&other.num);
            if self.den.coeffs.is_one() {
                return Self::from_laurent(num);
            }
            return Self::normalize(num, self.den.clone());
        }
        let num = self
            .num
            .mul_ref(&other.den)
            .add_ref(&other.num.mul_ref(&self.den));
        Self::normalize(num, self.den.mul_ref(&other.den))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let num = self.num.mul_ref(&other.num);
        if self.den.coeffs.is_one() && other.den.coeffs.is_one() {
            return Self::from_laurent(num);
        }
        Self::normalize(num, self.den.mul_ref(&other.den))
    }

    /// Ordering used only to make renderings deterministic.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

/// The q-number `[x] = (q^x - q^{-x}) / (q - q^{-1})`, a Laurent polynomial in `v`.
pub fn q_num(x: i32) -> Scalar {
    let n = x.unsigned_abs() as i32;
    let sign = if x < 0 { -1 } else { 1 };
    // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
    let terms = (0..n).map(|j| (2 * (n - 1 - 2 * j), BigRational::from_integer(BigInt::from(sign))));
    Scalar::from_laurent(LaurentPoly::from_terms(terms))
}

/// The q-factorial `[n]! = [n][n-1]...[1]`.
pub fn q_factorial(n: u32) -> Scalar {
    (1..=n as i32).fold(Scalar::one(), |acc, k| &acc * &q_num(k))
}

/// `q - q^{-1}`.
pub fn q_minus_q_inv() -> Scalar {
    &Scalar::q_pow(1) - &Scalar::q_pow(-1)
}

/// Exact evaluation; see [`Scalar::specialize`].
pub fn specialize(s: &Scalar, v0: &BigRational) -> Result<BigRational, ScalarError> {
    s.specialize(v0)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den_one = self.den.coeffs.is_one();
        if den_one && self.num.low >= 0 {
            return write!(f, "{}", self.num);
        }
        let shift = (-self.num.low).max(0);
        let num = self.num.shift(shift);
        let den = self.den.shift(shift);
        write!(f, "({num})/({den})")
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.add_ref(rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.add_ref(&-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.mul_ref(rhs)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self.mul_ref(&rhs.inv().expect("division by zero scalar"))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_ref(&-rhs);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_ref(rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn defining_ratio(x: i32) -> Scalar {
        let num = &Scalar::q_pow(x) - &Scalar::q_pow(-x);
        &num / &q_minus_q_inv()
    }

    #[test]
    fn q_numbers_small_cases() {
        assert!(q_num(0).is_zero());
        assert!(q_num(1).is_one());
        assert_eq!(q_num(2), &Scalar::v_pow(2) + &Scalar::v_pow(-2));
    }

    #[test]
    fn q_num_matches_defining_ratio() {
        for x in -6..=6 {
            assert_eq!(q_num(x), defining_ratio(x), "x = {x}");
            assert!(q_num(x).is_laurent());
        }
    }

    #[test]
    fn q_factorials() {
        assert!(q_factorial(0).is_one());
        assert_eq!(q_factorial(2), &Scalar::q_pow(1) + &Scalar::q_pow(-1));
        let three = &(&Scalar::q_pow(2) + &Scalar::one()) + &Scalar::q_pow(-2);
        assert_eq!(q_factorial(3), &three * &q_num(2));
        for n in 1..=8u32 {
            assert_eq!(q_factorial(n), &q_num(n as i32) * &q_factorial(n - 1));
        }
    }

    #[test]
    fn specialization() {
        assert_eq!(q_num(2).specialize(&rat(1, 1)).unwrap(), rat(2, 1));
        assert_eq!(Scalar::v_pow(2).specialize(&rat(2, 1)).unwrap(), rat(4, 1));
        let pole = Scalar::one() / q_minus_q_inv();
        assert!(matches!(pole.specialize(&rat(1, 1)), Err(ScalarError::Pole { .. })));
        assert!(matches!(Scalar::one().specialize(&rat(0, 1)), Err(ScalarError::ZeroPoint)));
    }

    #[test]
    fn rendering() {
        assert_eq!(q_minus_q_inv().to_string(), "(v^4 - 1)/(v^2)");
        assert_eq!(Scalar::zero().to_string(), "0");
        assert_eq!(Scalar::one().to_string(), "1");
        assert_eq!(q_num(2).to_string(), "(v^4 + 1)/(v^2)");
        assert_eq!(Scalar::v_pow(3).to_string(), "v^3");
        let half = Scalar::from_rational(rat(-1, 2));
        assert_eq!((&half * &Scalar::v_pow(1)).to_string(), "-1/2*v");
        let x = Scalar::one() / q_num(2);
        assert_eq!(x.to_string(), "(v^2)/(v^4 + 1)");
    }

    #[test]
    fn canonical_form_is_syntactic() {
        let a = &q_num(3) / &q_num(3);
        assert!(a.is_one());
        let b = (&q_num(4) / &q_num(2)) * q_num(2);
        assert_eq!(b, q_num(4));
        let half = Scalar::from_rational(rat(1, 2));
        let c = &(&Scalar::one() / &(&half * &q_num(2))) * &q_num(2);
        assert_eq!(c, Scalar::from_int(2));
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert!(matches!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero)));
        assert!(Scalar::ratio(LaurentPoly::one(), LaurentPoly::zero()).is_err());
    }
}
