//! Scalar gadget matrices and the block-diagonal projection
//! `G = diag(A, H_{lambda_1}, ..., H_{lambda_{i-1}}, E_{pi_1}, ..., E_{pi_{lambda_{i+1}}})`
//! with `im_lambda(G) = per(A)` for any `A` of size `lambda_i - lambda_{i+1}`.
//!
//! All gadgets are `D_q * T` for an integer pattern `T`, where
//! `D_q = diag(1, 1/2, ..., 1/q)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{block_diag, immanant, permanent, Matrix, Ring, Scalar};
use crate::partitions::{Block, BlockKind, Partition};

pub fn matrix_d(q: usize) -> Matrix<Scalar> {
    Matrix::from_fn(q, |i, j| {
        if i == j {
            Scalar::ratio(1, i as i64 + 1)
        } else {
            Scalar::zero()
        }
    })
}

fn scaled_rows(q: usize, pattern: impl Fn(usize, usize) -> i64) -> Matrix<Scalar> {
    // 1-based (row, col) into the pattern, row r scaled by 1/r
    Matrix::from_fn(q, |i, j| Scalar::ratio(pattern(i + 1, j + 1), i as i64 + 1))
}

/// `H_q = D_q J_q`: row `j` is constantly `1/j`. Annihilates every
/// immanant except the permanent, which is 1.
pub fn matrix_h(q: usize) -> Matrix<Scalar> {
    scaled_rows(q, |_, _| 1)
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `E_q = D_q T_q` with `T[j][j+1] = j`, `T[j][m] = (-1)^(j-m)` for `m <= j`
/// and zero above the superdiagonal. Annihilates every immanant except the
/// determinant, which is 1.
pub fn matrix_e(q: usize) -> Matrix<Scalar> {
    scaled_rows(q, |j, m| match m {
        m if m <= j => sign(j - m),
        m if m == j + 1 => j as i64,
        _ => 0,
    })
}

/// Variant of `H_q` shaped like `E_q` with superdiagonal `-1, -2, ..., 1-q`.
pub fn matrix_h_alt(q: usize) -> Matrix<Scalar> {
    scaled_rows(q, |j, m| match m {
        m if m <= j => sign(j - m),
        m if m == j + 1 => -(j as i64),
        _ => 0,
    })
}

/// Permutation matrix of the cycle `1 -> 2 -> ... -> q -> 1`: entry
/// `(i, i+1 mod q)` is 1.
pub fn matrix_p(q: usize) -> Matrix<Scalar> {
    Matrix::from_fn(q, |i, j| {
        if j == (i + 1) % q {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    })
}

pub fn block_matrix(block: Block) -> Matrix<Scalar> {
    match block.kind {
        BlockKind::H => matrix_h(block.size),
        BlockKind::E => matrix_e(block.size),
    }
}

/// Which row of `lambda` is reduced to a permanent, and the gadget blocks
/// that strip everything else away.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectionPlan {
    pub lambda: Partition,
    /// 1-based.
    pub row_index: usize,
    /// `lambda_i - lambda_{i+1}`, the size of the permanent.
    pub k: usize,
    pub blocks: Vec<Block>,
}

impl ProjectionPlan {
    /// With `row_index = None`, the smallest row attaining the separation.
    pub fn new(lambda: &Partition, row_index: Option<usize>) -> Result<Self> {
        let i = match row_index {
            Some(i) => i,
            None => lambda.separation()?.smallest_index(),
        };
        let blocks = lambda.reduction_chain(i)?;
        let k = lambda.gap(i);
        if k == 0 {
            return Err(Error::ZeroGap {
                lambda: lambda.to_string(),
                index: i,
            });
        }
        Ok(ProjectionPlan {
            lambda: lambda.clone(),
            row_index: i,
            k,
            blocks,
        })
    }

    /// `G = diag(A, blocks...)` over any entry ring.
    pub fn build<R: Ring>(&self, a: &Matrix<R>) -> Result<Matrix<R>> {
        if a.dim() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                actual: a.dim(),
            });
        }
        let mut parts = Vec::with_capacity(self.blocks.len() + 1);
        parts.push(a.clone());
        parts.extend(self.blocks.iter().map(|&b| block_matrix(b).lift::<R>()));
        block_diag(&parts)
    }
}

/// `G` for row `i` (1-based) of `lambda`.
pub fn build_projection<R: Ring>(lambda: &Partition, i: usize, a: &Matrix<R>) -> Result<Matrix<R>> {
    ProjectionPlan::new(lambda, Some(i))?.build(a)
}

/// Outcome of evaluating both sides of `per(A) = im_lambda(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProjectionReport {
    #[serde(serialize_with = "as_display")]
    pub lambda: Partition,
    pub i: usize,
    pub k: usize,
    pub per: Scalar,
    pub imm: Scalar,
    pub equal: bool,
}

fn as_display<S: serde::Serializer, T: std::fmt::Display>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl ProjectionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Builds `G` and evaluates both sides; the two sides run concurrently.
pub fn verify_projection(
    lambda: &Partition,
    row_index: Option<usize>,
    a: &Matrix<Scalar>,
    limits: &Limits,
) -> Result<ProjectionReport> {
    let plan = ProjectionPlan::new(lambda, row_index)?;
    let g = plan.build(a)?;
    Limits::check("immanant", g.dim(), limits.immanant_n)?;
    let (per, imm) = rayon::join(|| permanent(a, limits), || immanant(lambda, &g, limits));
    let (per, imm) = (per?, imm?);
    Ok(ProjectionReport {
        lambda: lambda.clone(),
        i: plan.row_index,
        k: plan.k,
        equal: per == imm,
        per,
        imm,
    })
}
