//! Noncommutative polynomials over [`Scalar`] in the one-sided alphabets
//! `{E_1..E_N}` and `{F_1..F_N}`, ordered degree-lexicographically.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use crate::scalar::Scalar;

/// Which one-sided alphabet a word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    E,
    F,
}

impl Side {
    pub fn symbol(self) -> char {
        match self {
            Side::E => 'E',
            Side::F => 'F',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub side: Side,
    pub index: u8,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side.symbol(), self.index)
    }
}

/// A word of generator indices (1-based). The side is carried by context.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub SmallVec<[u8; 16]>);

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(i: u8) -> Self {
        Self(SmallVec::from_slice(&[i]))
    }

    pub fn from_slice(s: &[u8]) -> Self {
        Self(SmallVec::from_slice(s))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Root-lattice weight as letter multiplicities `[c_1, .., c_N]`.
    pub fn content(&self, rank: usize) -> Vec<i32> {
        let mut c = vec![0; rank];
        for &i in &self.0 {
            c[i as usize - 1] += 1;
        }
        c
    }

    pub fn render(&self, side: Side) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|i| format!("{}{}", side.symbol(), i))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Degree-lexicographic comparison: length first, then lexicographic with
/// `1 < 2 < ... < N`.
pub fn deglex_compare(a: &Word, b: &Word) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.0.cmp(&b.0))
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        deglex_compare(self, other)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A noncommutative polynomial: words with nonzero scalar coefficients,
/// sorted by deglex (so the last entry is the leading term).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Word::empty(), Scalar::one())
    }

    pub fn term(w: Word, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, &c);
        p
    }

    pub fn word(w: &[u8]) -> Self {
        Self::term(Word::from_slice(w), Scalar::one())
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl DoubleEndedIterator<Item = (Word, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// Deglex-largest word with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn pop_leading(&mut self) -> Option<(Word, Scalar)> {
        self.terms.pop_last()
    }

    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), &(c * d));
        }
    }

    pub fn add(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        let mut out = NCPoly::zero();
        out.add_scaled(self, c);
        out
    }

    /// `left * self * right` for words `left`, `right`.
    pub fn wrap(&self, left: &[u8], right: &[u8]) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            let mut v: SmallVec<[u8; 16]> = SmallVec::from_slice(left);
            v.extend_from_slice(&w.0);
            v.extend_from_slice(right);
            out.add_term(Word(v), c);
        }
        out
    }

    pub fn render(&self, side: Side) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .rev()
            .map(|(w, c)| format!("({c})*{}", w.render(side)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bilinear concatenation product.
pub fn multiply(p: &NCPoly, r: &NCPoly) -> NCPoly {
    let mut out = NCPoly::zero();
    for (a, c) in &p.terms {
        for (b, d) in &r.terms {
            out.add_term(a.concat(b), &(c * d));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_examples() {
        let e1 = NCPoly::word(&[1]);
        let e2 = NCPoly::word(&[2]);
        assert_eq!(multiply(&e1, &e2), NCPoly::word(&[1, 2]));
        assert_eq!(
            multiply(&e1.add(&e2), &e1),
            NCPoly::word(&[1, 1]).add(&NCPoly::word(&[2, 1]))
        );
        let a = e1.scale(&Scalar::from_int(2));
        let b = e1.scale(&Scalar::q_pow(1));
        assert_eq!(
            multiply(&a, &b),
            NCPoly::word(&[1, 1]).scale(&(Scalar::from_int(2) * Scalar::q_pow(1)))
        );
    }

    #[test]
    fn deglex_examples() {
        let w = Word::from_slice;
        assert_eq!(deglex_compare(&w(&[1, 2]), &w(&[2])), Ordering::Greater);
        assert_eq!(deglex_compare(&w(&[1, 2]), &w(&[2, 1])), Ordering::Less);
        assert_eq!(deglex_compare(&Word::empty(), &Word::empty()), Ordering::Equal);
    }

    #[test]
    fn rendering() {
        assert_eq!(Word::from_slice(&[1, 2, 1]).render(Side::E), "E1.E2.E1");
        assert_eq!(Word::empty().render(Side::F), "1");
    }

    #[test]
    fn leading_term_is_deglex_max() {
        let p = NCPoly::word(&[2, 1]).add(&NCPoly::word(&[1, 2])).add(&NCPoly::word(&[3]));
        assert_eq!(p.leading().unwrap().0, &Word::from_slice(&[2, 1]));
    }
}
