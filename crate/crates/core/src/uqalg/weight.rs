//! Weight lattice of `sl_{N+1}` in fundamental-weight coordinates.

use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};

/// Largest rank the fixed-size weight storage supports.
pub const MAX_RANK: usize = 6;

/// `λ = Σ m_i ω_i`, stored as `(m_1, .., m_N)` padded with zeros.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVec([i32; MAX_RANK]);

impl WeightVec {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coords(m: &[i32]) -> Self {
        assert!(m.len() <= MAX_RANK, "rank exceeds MAX_RANK");
        let mut w = [0; MAX_RANK];
        w[..m.len()].copy_from_slice(m);
        Self(w)
    }

    /// The fundamental weight `ω_i` (1-based).
    pub fn fundamental(i: usize) -> Self {
        let mut w = [0; MAX_RANK];
        w[i - 1] = 1;
        Self(w)
    }

    /// The simple root `α_i`, i.e. row `i` of the Cartan matrix.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut w = [0; MAX_RANK];
        w[i - 1] = 2;
        if i > 1 {
            w[i - 2] = -1;
        }
        if i < rank {
            w[i] = -1;
        }
        Self(w)
    }

    /// Converts a root-lattice element `Σ c_i α_i` to fundamental coordinates.
    pub fn from_root(rank: usize, content: &[i32]) -> Self {
        content
            .iter()
            .enumerate()
            .fold(Self::zero(), |acc, (i, &c)| acc + Self::simple_root(rank, i + 1).scale(c))
    }

    pub fn coord(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn coords(&self, rank: usize) -> &[i32] {
        &self.0[..rank]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn scale(&self, k: i32) -> Self {
        Self(self.0.map(|m| m * k))
    }

    /// `(λ, μ)` for `μ = Σ c_j α_j` given by its content vector.
    pub fn pair_root(&self, content: &[i32]) -> i32 {
        content.iter().zip(&self.0).map(|(c, m)| c * m).sum()
    }

    /// `(λ, μ)` for `μ` given by letter indices (each letter contributes `α_i`).
    pub fn pair_letters(&self, letters: &[u8]) -> i32 {
        letters.iter().map(|&i| self.0[i as usize - 1]).sum()
    }

    pub fn render(&self, rank: usize) -> String {
        let mut s = String::from("K[");
        for (k, m) in self.0[..rank].iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            write!(s, "{m}").unwrap();
        }
        s.push(']');
        s
    }
}

impl Add for WeightVec {
    type Output = WeightVec;
    fn add(self, rhs: WeightVec) -> WeightVec {
        let mut w = self.0;
        for (a, b) in w.iter_mut().zip(rhs.0) {
            *a += b;
        }
        WeightVec(w)
    }
}

impl Sub for WeightVec {
    type Output = WeightVec;
    fn sub(self, rhs: WeightVec) -> WeightVec {
        self + (-rhs)
    }
}

impl Neg for WeightVec {
    type Output = WeightVec;
    fn neg(self) -> WeightVec {
        WeightVec(self.0.map(|m| -m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_roots_pair_to_cartan_matrix() {
        let n = 4;
        for i in 1..=n {
            for j in 1..=n {
                let mut c = vec![0; n];
                c[j - 1] = 1;
                let a = WeightVec::simple_root(n, i).pair_root(&c);
                let expected = match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                };
                assert_eq!(a, expected);
            }
        }
    }

    #[test]
    fn fundamental_weights_are_dual() {
        let xi = [0, 1, 1];
        assert_eq!(WeightVec::fundamental(3).pair_root(&xi), 1);
        assert_eq!(WeightVec::fundamental(1).pair_root(&xi), 0);
        assert_eq!(WeightVec::from_coords(&[1, -1, 2]).render(3), "K[1,-1,2]");
    }
}
