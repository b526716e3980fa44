//! Dense matrices over `Q(v)` and a rank routine over `Q` for specialized
//! matrices.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Self::zero(entries.len(), entries.len());
        for (i, c) in entries.iter().enumerate() {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn add_at(&mut self, r: usize, c: usize, x: &Scalar) {
        self.data[r * self.cols + c] += x;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k / self.cols, k % self.cols, x))
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { data, ..*self }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zero(self.rows, other.cols);
        for (r, k, a) in self.nonzero() {
            for c in 0..other.cols {
                let b = other.get(k, c);
                if !b.is_zero() {
                    out.add_at(r, c, &(a * b));
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows);
        for (r, c, x) in self.nonzero() {
            out.set(c, r, x.clone());
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zero(self.rows * other.rows, self.cols * other.cols);
        for (r1, c1, a) in self.nonzero() {
            for (r2, c2, b) in other.nonzero() {
                out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
            }
        }
        out
    }

    pub fn apply(&self, x: &[Scalar]) -> Result<Vec<Scalar>> {
        if x.len() != self.cols {
            return Err(AlgebraError::DimensionMismatch(format!(
                "vector of length {} for {} columns",
                x.len(),
                self.cols
            )));
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (r, c, a) in self.nonzero() {
            if !x[c].is_zero() {
                out[r] += &(a * &x[c]);
            }
        }
        Ok(out)
    }

    /// Entrywise specialization at `v = v0`.
    pub fn specialize(&self, v0: &BigRational) -> Result<Vec<Vec<BigRational>>> {
        let mut out = vec![vec![BigRational::zero(); self.cols]; self.rows];
        for (r, c, x) in self.nonzero() {
            out[r][c] = x.specialize(v0)?;
        }
        Ok(out)
    }

    /// First nonzero entry, rendered, for failure reports.
    pub fn witness(&self) -> Option<String> {
        self.nonzero()
            .next()
            .map(|(r, c, x)| format!("[{r}][{c}] = {x}"))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        let prow: Vec<BigRational> = rows[rank].iter().map(|x| x / &pivot).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&prow).skip(col) {
                    *x -= &f * y;
                }
            }
        }
        rows[rank] = prow;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn kron_of_identities_is_identity() {
        let i2 = Matrix::identity(2);
        assert_eq!(i2.kron(&Matrix::identity(3)), Matrix::identity(6));
    }

    #[test]
    fn product_and_transpose() {
        let mut a = Matrix::zero(2, 2);
        a.set(0, 1, Scalar::q_pow(1));
        a.set(1, 0, Scalar::from_int(2));
        let p = a.mul(&a.transpose()).unwrap();
        assert_eq!(p, Matrix::diagonal(&[Scalar::q_pow(2), Scalar::from_int(4)]));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rational_rank(rows), 2);
    }
}
