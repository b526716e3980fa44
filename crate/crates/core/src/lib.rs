//! Exact symbolic computation in the quantized enveloping algebra
//! `U_q(sl_{N+1})`, its braided exterior algebras, quantum Clifford
//! operators and the Dolbeault-Dirac operator on quantum projective space.
//!
//! All arithmetic is exact over `Q(v)` with `v = q^{1/2}`.

pub mod checks;
pub mod dirac;
pub mod error;
pub mod freealg;
pub mod identity;
pub mod matrix;
pub mod qcliff;
pub mod qext;
pub mod rootvec;
pub mod scalar;
pub mod uqalg;

pub use error::{AlgebraError, ScalarError};
pub use scalar::{q_factorial, q_minus_q_inv, q_num, LaurentPoly, Scalar};
pub use uqalg::{Uq, UqElement, WeightVec};
