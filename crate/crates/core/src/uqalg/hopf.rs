//! Hopf structure, compact real form and adjoint action, with the
//! coproduct `Δ(E_i) = E_i⊗1 + K_i⊗E_i`, `Δ(F_i) = F_i⊗K_i^{-1} + 1⊗F_i`.

use std::collections::BTreeMap;

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

use super::element::{TriMonomial, UqElement};
use super::weight::WeightVec;
use super::Uq;

/// An element of `U^{⊗n}` with legwise normal-form monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor {
    legs: usize,
    terms: BTreeMap<Vec<TriMonomial>, Scalar>,
}

impl Tensor {
    pub fn zero(legs: usize) -> Self {
        Self {
            legs,
            terms: BTreeMap::new(),
        }
    }

    /// `x_1 ⊗ x_2 ⊗ ... ⊗ x_n`.
    pub fn pure(factors: &[&UqElement]) -> Self {
        let mut acc: Vec<(Vec<TriMonomial>, Scalar)> = vec![(Vec::new(), Scalar::one())];
        for x in factors {
            let mut next = Vec::new();
            for (ms, c) in &acc {
                for (m, d) in x.terms() {
                    let mut ms2 = ms.clone();
                    ms2.push(m.clone());
                    next.push((ms2, c * d));
                }
            }
            acc = next;
        }
        let mut t = Tensor::zero(factors.len());
        for (ms, c) in acc {
            t.add_term(ms, &c);
        }
        t
    }

    pub fn legs(&self) -> usize {
        self.legs
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<TriMonomial>, &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, ms: Vec<TriMonomial>, c: &Scalar) {
        debug_assert_eq!(ms.len(), self.legs);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(ms) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Tensor, c: &Scalar) {
        for (ms, d) in &other.terms {
            self.add_term(ms.clone(), &(c * d));
        }
    }

    pub fn sub(&self, other: &Tensor) -> Tensor {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn render(&self, rank: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(ms, c)| {
                let legs: Vec<_> = ms.iter().map(|m| m.render(rank)).collect();
                format!("({c})*{}", legs.join(" (x) "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl Uq {
    fn mono(&self, m: &TriMonomial) -> UqElement {
        UqElement::monomial(m.clone(), Scalar::one())
    }

    /// Legwise product of two tensors with the same number of legs.
    pub fn tensor_mul(&self, a: &Tensor, b: &Tensor) -> Result<Tensor> {
        if a.legs != b.legs {
            return Err(AlgebraError::DimensionMismatch(format!(
                "tensor legs {} vs {}",
                a.legs, b.legs
            )));
        }
        let mut out = Tensor::zero(a.legs);
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                let mut prod: Vec<UqElement> = Vec::with_capacity(a.legs);
                for (x, y) in ma.iter().zip(mb) {
                    prod.push(self.mul(&self.mono(x), &self.mono(y))?);
                }
                let refs: Vec<&UqElement> = prod.iter().collect();
                out.add_scaled(&Tensor::pure(&refs), &(ca * cb));
            }
        }
        Ok(out)
    }

    fn coproduct_e(&self, i: u8) -> Tensor {
        let one = UqElement::one();
        let mut t = Tensor::pure(&[&self.e(i), &one]);
        t.add_scaled(
            &Tensor::pure(&[&self.k_alpha(i as usize, 1), &self.e(i)]),
            &Scalar::one(),
        );
        t
    }

    fn coproduct_f(&self, i: u8) -> Tensor {
        let one = UqElement::one();
        let mut t = Tensor::pure(&[&self.f(i), &self.k_alpha(i as usize, -1)]);
        t.add_scaled(&Tensor::pure(&[&one, &self.f(i)]), &Scalar::one());
        t
    }

    fn coproduct_mono(&self, m: &TriMonomial) -> Result<Tensor> {
        let k = self.k(m.cartan);
        let mut acc = Tensor::pure(&[&UqElement::one(), &UqElement::one()]);
        for &i in m.fword.as_slice() {
            acc = self.tensor_mul(&acc, &self.coproduct_f(i))?;
        }
        acc = self.tensor_mul(&acc, &Tensor::pure(&[&k, &k]))?;
        for &i in m.eword.as_slice() {
            acc = self.tensor_mul(&acc, &self.coproduct_e(i))?;
        }
        Ok(acc)
    }

    pub fn coproduct(&self, x: &UqElement) -> Result<Tensor> {
        let mut out = Tensor::zero(2);
        for (m, c) in x.terms() {
            out.add_scaled(&self.coproduct_mono(m)?, c);
        }
        Ok(out)
    }

    /// Applies a linear map to one leg of a tensor.
    pub fn map_leg<G>(&self, t: &Tensor, leg: usize, g: G) -> Result<Tensor>
    where
        G: Fn(&UqElement) -> Result<UqElement>,
    {
        let mut out = Tensor::zero(t.legs);
        for (ms, c) in &t.terms {
            let image = g(&self.mono(&ms[leg]))?;
            for (m, d) in image.terms() {
                let mut ms2 = ms.clone();
                ms2[leg] = m.clone();
                out.add_term(ms2, &(c * d));
            }
        }
        Ok(out)
    }

    /// Applies `Δ` to leg `leg`, producing a tensor with one more leg.
    pub fn coproduct_on_leg(&self, t: &Tensor, leg: usize) -> Result<Tensor> {
        let mut out = Tensor::zero(t.legs + 1);
        for (ms, c) in &t.terms {
            let d = self.coproduct_mono(&ms[leg])?;
            for (pair, e) in d.terms() {
                let mut ms2 = ms[..leg].to_vec();
                ms2.extend(pair.iter().cloned());
                ms2.extend(ms[leg + 1..].iter().cloned());
                out.add_term(ms2, &(c * e));
            }
        }
        Ok(out)
    }

    /// Multiplies the legs of a tensor together: `a ⊗ b ↦ ab`.
    pub fn multiply_legs(&self, t: &Tensor) -> Result<UqElement> {
        let mut out = UqElement::zero();
        for (ms, c) in &t.terms {
            let mut acc = UqElement::scalar(c.clone());
            for m in ms {
                acc = self.mul(&acc, &self.mono(m))?;
            }
            out.add_scaled(&acc, &Scalar::one());
        }
        Ok(out)
    }

    pub fn counit(&self, x: &UqElement) -> Scalar {
        let mut s = Scalar::zero();
        for (m, c) in x.terms() {
            if m.fword.is_empty() && m.eword.is_empty() {
                s += c;
            }
        }
        s
    }

    /// Applies an anti-homomorphism given on generators to every monomial.
    fn anti_map<GE, GF, GK>(&self, x: &UqElement, ge: GE, gf: GF, gk: GK) -> Result<UqElement>
    where
        GE: Fn(u8) -> UqElement,
        GF: Fn(u8) -> UqElement,
        GK: Fn(WeightVec) -> UqElement,
    {
        let mut out = UqElement::zero();
        for (m, c) in x.terms() {
            let mut acc = UqElement::scalar(c.clone());
            for &i in m.eword.as_slice().iter().rev() {
                acc = self.mul(&acc, &ge(i))?;
            }
            acc = self.mul(&acc, &gk(m.cartan))?;
            for &i in m.fword.as_slice().iter().rev() {
                acc = self.mul(&acc, &gf(i))?;
            }
            out.add_scaled(&acc, &Scalar::one());
        }
        Ok(out)
    }

    fn neg_prod(&self, a: &UqElement, b: &UqElement) -> UqElement {
        self.mul(a, b).expect("degree-one product").neg()
    }

    /// `S(E_i) = -K_{-α_i}E_i`, `S(F_i) = -F_iK_{α_i}`, `S(K_λ) = K_{-λ}`.
    pub fn antipode(&self, x: &UqElement) -> Result<UqElement> {
        self.anti_map(
            x,
            |i| self.neg_prod(&self.k_alpha(i as usize, -1), &self.e(i)),
            |i| self.neg_prod(&self.f(i), &self.k_alpha(i as usize, 1)),
            |l| self.k(-l),
        )
    }

    /// `S^{-1}(E_i) = -E_iK_{-α_i}`, `S^{-1}(F_i) = -K_{α_i}F_i`.
    pub fn antipode_inv(&self, x: &UqElement) -> Result<UqElement> {
        self.anti_map(
            x,
            |i| self.neg_prod(&self.e(i), &self.k_alpha(i as usize, -1)),
            |i| self.neg_prod(&self.k_alpha(i as usize, 1), &self.f(i)),
            |l| self.k(-l),
        )
    }

    /// Compact real form: `E_i* = K_iF_i`, `F_i* = E_iK_i^{-1}`, `K* = K`.
    pub fn star(&self, x: &UqElement) -> Result<UqElement> {
        self.anti_map(
            x,
            |i| self.mul(&self.k_alpha(i as usize, 1), &self.f(i)).expect("degree one"),
            |i| self.mul(&self.e(i), &self.k_alpha(i as usize, -1)).expect("degree one"),
            |l| self.k(l),
        )
    }

    /// `a ▷ y = a_(1) y S(a_(2))`.
    pub fn adjoint_action(&self, a: &UqElement, y: &UqElement) -> Result<UqElement> {
        let d = self.coproduct(a)?;
        let mut out = UqElement::zero();
        for (ms, c) in d.terms() {
            let s = self.antipode(&self.mono(&ms[1]))?;
            let left = self.mul(&self.mono(&ms[0]), y)?;
            out.add_scaled(&self.mul(&left, &s)?, c);
        }
        Ok(out)
    }

    /// Embeds a raw E-word (normal-formed).
    pub fn e_word(&self, w: &[u8]) -> Result<UqElement> {
        self.triangular(&[], WeightVec::zero(), w)
    }

    /// Embeds a raw F-word (normal-formed).
    pub fn f_word(&self, w: &[u8]) -> Result<UqElement> {
        self.triangular(w, WeightVec::zero(), &[])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uq(n: usize) -> Uq {
        Uq::new(n, Uq::default_bound(n)).unwrap()
    }

    #[test]
    fn generator_coproducts() {
        let u = uq(2);
        let w1 = WeightVec::fundamental(1);
        assert_eq!(
            u.coproduct(&u.k(w1)).unwrap(),
            Tensor::pure(&[&u.k(w1), &u.k(w1)])
        );
        let mut expected = Tensor::pure(&[&u.e(1), &UqElement::one()]);
        expected.add_scaled(&Tensor::pure(&[&u.k_alpha(1, 1), &u.e(1)]), &Scalar::one());
        assert_eq!(u.coproduct(&u.e(1)).unwrap(), expected);
    }

    #[test]
    fn coproduct_of_ef_is_product_of_coproducts() {
        let u = uq(2);
        let ef = u.mul(&u.e(1), &u.f(1)).unwrap();
        let lhs = u.coproduct(&ef).unwrap();
        let rhs = u
            .tensor_mul(&u.coproduct(&u.e(1)).unwrap(), &u.coproduct(&u.f(1)).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
        // Hand expansion: (E⊗1 + K⊗E)(F⊗K^{-1} + 1⊗F)
        let (e, f, k, ki) = (u.e(1), u.f(1), u.k_alpha(1, 1), u.k_alpha(1, -1));
        let mut hand = Tensor::pure(&[&u.mul(&e, &f).unwrap(), &ki]);
        hand.add_scaled(&Tensor::pure(&[&e, &f]), &Scalar::one());
        hand.add_scaled(
            &Tensor::pure(&[&u.mul(&k, &f).unwrap(), &u.mul(&e, &ki).unwrap()]),
            &Scalar::one(),
        );
        hand.add_scaled(&Tensor::pure(&[&k, &u.mul(&e, &f).unwrap()]), &Scalar::one());
        assert_eq!(lhs, hand);
    }

    #[test]
    fn antipode_examples() {
        let u = uq(2);
        let l = WeightVec::from_coords(&[1, -2]);
        assert_eq!(u.antipode(&u.k(l)).unwrap(), u.k(-l));
        let x = u.mul(&u.e(1), &u.f(2)).unwrap();
        assert_eq!(u.antipode_inv(&u.antipode(&x).unwrap()).unwrap(), x);
        let ef = u.mul(&u.e(1), &u.f(1)).unwrap();
        assert!(u.counit(&ef).is_zero());
    }

    #[test]
    fn star_examples() {
        let u = uq(2);
        assert_eq!(
            u.star(&u.e(1)).unwrap(),
            u.mul(&u.k_alpha(1, 1), &u.f(1)).unwrap()
        );
        let x = u
            .mul_all(&[&u.e(1), &u.f(2), &u.k(WeightVec::fundamental(1))])
            .unwrap();
        assert_eq!(u.star(&u.star(&x).unwrap()).unwrap(), x);
        let e12 = u.mul(&u.e(1), &u.e(2)).unwrap();
        let expected = u
            .mul_all(&[&u.k_alpha(2, 1), &u.f(2), &u.k_alpha(1, 1), &u.f(1)])
            .unwrap();
        assert_eq!(u.star(&e12).unwrap(), expected);
    }

    #[test]
    fn adjoint_action_unit() {
        let u = uq(2);
        let y = u.mul(&u.e(1), &u.f(2)).unwrap();
        assert_eq!(u.adjoint_action(&UqElement::one(), &y).unwrap(), y);
    }
}
