//! Triangular monomials `F-word · K_λ · E-word` and their linear combinations.

use std::collections::BTreeMap;

use crate::freealg::{Side, Word};
use crate::scalar::Scalar;

use super::weight::WeightVec;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriMonomial {
    pub fword: Word,
    pub cartan: WeightVec,
    pub eword: Word,
}

impl TriMonomial {
    pub fn new(fword: Word, cartan: WeightVec, eword: Word) -> Self {
        Self {
            fword,
            cartan,
            eword,
        }
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn cartan(lambda: WeightVec) -> Self {
        Self::new(Word::empty(), lambda, Word::empty())
    }

    /// Root-lattice weight: `+α_i` per `E_i`, `-α_i` per `F_i`.
    pub fn weight(&self, rank: usize) -> Vec<i32> {
        let mut w = self.eword.content(rank);
        for (a, b) in w.iter_mut().zip(self.fword.content(rank)) {
            *a -= b;
        }
        w
    }

    pub fn contains_index(&self, i: u8) -> bool {
        self.fword.as_slice().contains(&i) || self.eword.as_slice().contains(&i)
    }

    pub fn render(&self, rank: usize) -> String {
        let mut parts = Vec::new();
        if !self.fword.is_empty() {
            parts.push(self.fword.render(Side::F));
        }
        if !self.cartan.is_zero() {
            parts.push(self.cartan.render(rank));
        }
        if !self.eword.is_empty() {
            parts.push(self.eword.render(Side::E));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A finite linear combination of normal-form triangular monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UqElement {
    terms: BTreeMap<TriMonomial, Scalar>,
}

/// Result of [`UqElement::weight`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    Homogeneous(Vec<i32>),
    Inhomogeneous,
}

impl UqElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(TriMonomial::unit(), Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(TriMonomial::unit(), c)
    }

    /// Wraps a monomial whose words are already in normal form.
    pub fn monomial(m: TriMonomial, c: Scalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, &c);
        x
    }

    pub fn cartan(lambda: WeightVec) -> Self {
        Self::monomial(TriMonomial::cartan(lambda), Scalar::one())
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&TriMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &TriMonomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: TriMonomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
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

    pub fn add_scaled(&mut self, other: &UqElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), &(c * d));
        }
    }

    pub fn add(&self, other: &UqElement) -> UqElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &UqElement) -> UqElement {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> UqElement {
        let mut out = UqElement::zero();
        out.add_scaled(self, c);
        out
    }

    pub fn neg(&self) -> UqElement {
        self.scale(&Scalar::from_int(-1))
    }

    /// Largest E-word and F-word lengths over all monomials.
    pub fn degrees(&self) -> (usize, usize) {
        self.terms.keys().fold((0, 0), |(f, e), m| {
            (f.max(m.fword.len()), e.max(m.eword.len()))
        })
    }

    pub fn weight(&self, rank: usize) -> Grading {
        let mut it = self.terms.keys().map(|m| m.weight(rank));
        let Some(first) = it.next() else {
            return Grading::Homogeneous(vec![0; rank]);
        };
        if it.all(|w| w == first) {
            Grading::Homogeneous(first)
        } else {
            Grading::Inhomogeneous
        }
    }

    /// True when no monomial uses `E_N` or `F_N`.
    pub fn is_levi(&self, rank: usize) -> bool {
        self.non_levi_witness(rank).is_none()
    }

    /// First monomial (in canonical order) that uses `E_N` or `F_N`.
    pub fn non_levi_witness(&self, rank: usize) -> Option<(&TriMonomial, &Scalar)> {
        self.terms
            .iter()
            .find(|(m, _)| m.contains_index(rank as u8))
    }

    /// Splits off the Cartan-free scalar part (coefficient of the unit).
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&TriMonomial::unit())
    }

    pub fn render(&self, rank: usize) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| render_term(m, c, rank))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

pub fn render_term(m: &TriMonomial, c: &Scalar, rank: usize) -> String {
    let mono = m.render(rank);
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else if mono == "1" {
        format!("({c})")
    } else {
        format!("({c})*{mono}")
    }
}

impl FromIterator<(TriMonomial, Scalar)> for UqElement {
    fn from_iter<T: IntoIterator<Item = (TriMonomial, Scalar)>>(iter: T) -> Self {
        let mut x = UqElement::zero();
        for (m, c) in iter {
            x.add_term(m, &c);
        }
        x
    }
}
