//! Exact matrices over rationals or sparse polynomials, and the kernels
//! evaluated on them.

mod kernels;
mod matrix;
mod poly;
mod ring;
mod scalar;

pub use kernels::{
    determinant, immanant, immanant_by_enumeration, permanent_direct, permanent_ryser, permanent_ryser_with_stats,
    RyserStats,
};
pub use matrix::{block_diag, load_matrix, matrix_from_json, matrix_to_json, save_matrix, Matrix};
pub use poly::{Monomial, SparsePoly};
pub use ring::Ring;
pub use scalar::Scalar;

/// Permanent of a rational matrix: the direct sum for `n <= 10` (and within
/// the stream cap), Ryser above it.
pub fn permanent(m: &Matrix<Scalar>, limits: &crate::Limits) -> crate::Result<Scalar> {
    if m.dim() <= limits.stream_n.min(10) {
        permanent_direct(m, limits)
    } else {
        permanent_ryser(m, limits)
    }
}
