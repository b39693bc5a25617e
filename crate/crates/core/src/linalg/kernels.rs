//! Exponential-time exact kernels: direct permutation sums (permanent,
//! immanant) and the Gray-code Ryser permanent, plus the fraction-free
//! determinant.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::matrix::Matrix;
use super::ring::Ring;
use super::scalar::Scalar;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{partitions_of, Partition};
use crate::symgroup::{character, cycle_type_of, permutations};

pub(crate) enum Weight<R> {
    Zero,
    One,
    Value(R),
}

/// `sum_pi weight(pi) * prod_i M[i, pi(i)]`, enumerating only permutations
/// that avoid zero entries. Branches on the first row run in parallel and
/// are summed in column order, so the result does not depend on scheduling.
pub(crate) fn weighted_permutation_sum<R, W>(m: &Matrix<R>, weight: &W) -> R
where
    R: Ring,
    W: Fn(&[usize]) -> Weight<R> + Sync,
{
    let n = m.dim();
    if n == 0 {
        return apply_weight(weight(&[]), R::one()).unwrap_or_else(R::zero);
    }
    let branches: Vec<usize> = (0..n).filter(|&j| !m.get(0, j).is_zero()).collect();
    let partials: Vec<R> = branches
        .par_iter()
        .map(|&j| {
            let mut state = Search {
                m,
                weight,
                images: vec![0; n],
                used: vec![false; n],
                acc: R::zero(),
            };
            state.images[0] = j;
            state.used[j] = true;
            state.descend(1, m.get(0, j).clone());
            state.acc
        })
        .collect();
    let mut total = R::zero();
    for p in &partials {
        total.add_assign_ref(p);
    }
    total
}

fn apply_weight<R: Ring>(w: Weight<R>, product: R) -> Option<R> {
    match w {
        Weight::Zero => None,
        Weight::One => Some(product),
        Weight::Value(v) => Some(v.mul_ref(&product)),
    }
}

struct Search<'a, R, W> {
    m: &'a Matrix<R>,
    weight: &'a W,
    images: Vec<usize>,
    used: Vec<bool>,
    acc: R,
}

impl<R, W> Search<'_, R, W>
where
    R: Ring,
    W: Fn(&[usize]) -> Weight<R>,
{
    fn descend(&mut self, row: usize, product: R) {
        let n = self.m.dim();
        if row == n {
            if let Some(term) = apply_weight((self.weight)(&self.images), product) {
                self.acc.add_assign_ref(&term);
            }
            return;
        }
        for j in 0..n {
            if self.used[j] {
                continue;
            }
            let e = self.m.get(row, j);
            if e.is_zero() {
                continue;
            }
            self.used[j] = true;
            self.images[row] = j;
            self.descend(row + 1, product.mul_ref(e));
            self.used[j] = false;
        }
    }
}

/// Character values of `lambda` for every cycle type, as ring elements.
fn character_row<R: Ring>(lambda: &Partition) -> Result<HashMap<Partition, R>> {
    partitions_of(lambda.size())
        .into_iter()
        .map(|g| {
            let v = character(lambda, &g)?;
            Ok((g, R::from_integer(&v)))
        })
        .collect()
}

fn check_immanant_args<R: Ring>(lambda: &Partition, m: &Matrix<R>, limits: &Limits) -> Result<()> {
    if lambda.size() != m.dim() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| = {} but the matrix is {}x{}",
            lambda.size(),
            m.dim(),
            m.dim()
        )));
    }
    Limits::check("immanant", m.dim(), limits.immanant_n)
}

/// `im_lambda(M) = sum_pi chi_lambda(pi) prod_i M[i, pi(i)]`.
///
/// Characters are looked up once per cycle type; the diagonal products are
/// formed per permutation.
pub fn immanant<R: Ring>(lambda: &Partition, m: &Matrix<R>, limits: &Limits) -> Result<R> {
    check_immanant_args(lambda, m, limits)?;
    let chars = character_row::<R>(lambda)?;
    Ok(weighted_permutation_sum(m, &|images: &[usize]| {
        let v = &chars[&cycle_type_of(images)];
        if v.is_zero() {
            Weight::Zero
        } else {
            Weight::Value(v.clone())
        }
    }))
}

/// Same sum as [`immanant`], taken literally over the full permutation
/// stream split into chunks of `chunk_size` that are reduced in parallel.
pub fn immanant_by_enumeration<R: Ring>(
    lambda: &Partition,
    m: &Matrix<R>,
    chunk_size: usize,
    limits: &Limits,
) -> Result<R> {
    check_immanant_args(lambda, m, limits)?;
    if m.dim() == 0 {
        return Ok(R::one());
    }
    if chunk_size == 0 {
        return Err(Error::InvalidArgument("chunk size must be positive".into()));
    }
    let chars = character_row::<R>(lambda)?;
    let all: Vec<_> = permutations(m.dim(), limits)?.collect();
    let partials: Vec<R> = all
        .par_chunks(chunk_size)
        .map(|chunk| {
            let mut acc = R::zero();
            for pi in chunk {
                let f = m.diagonal_product(pi).expect("dimensions agree");
                if !f.is_zero() {
                    acc.add_assign_ref(&chars[&pi.cycle_type()].mul_ref(&f));
                }
            }
            acc
        })
        .collect();
    let mut total = R::zero();
    for p in &partials {
        total.add_assign_ref(p);
    }
    Ok(total)
}

/// The `n!`-term permanent sum.
pub fn permanent_direct<R: Ring>(m: &Matrix<R>, limits: &Limits) -> Result<R> {
    Limits::check("direct permanent", m.dim(), limits.stream_n)?;
    Ok(weighted_permutation_sum(m, &|_: &[usize]| Weight::One))
}

/// Arithmetic performed by [`permanent_ryser_with_stats`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RyserStats {
    pub additions: u64,
    pub multiplications: u64,
}

impl RyserStats {
    pub fn total(&self) -> u64 {
        self.additions + self.multiplications
    }
}

pub fn permanent_ryser(m: &Matrix<Scalar>, limits: &Limits) -> Result<Scalar> {
    permanent_ryser_with_stats(m, limits).map(|(v, _)| v)
}

/// Ryser's inclusion-exclusion formula
/// `per(M) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} M[i, j]`, walking the
/// column subsets in Gray-code order so each step updates every row sum by
/// one column.
///
/// Rows are first scaled to integers; the sum runs in `i128` when a bound
/// on every intermediate value allows it and in `BigInt` otherwise.
pub fn permanent_ryser_with_stats(m: &Matrix<Scalar>, limits: &Limits) -> Result<(Scalar, RyserStats)> {
    let n = m.dim();
    Limits::check("Ryser permanent", n, limits.ryser_n)?;
    if n == 0 {
        return Ok((Scalar::one(), RyserStats::default()));
    }
    if n >= 63 {
        return Err(Error::CapExceeded {
            what: "Ryser permanent",
            n,
            cap: 62,
        });
    }
    let (rows, scale) = integer_rows(m);
    let max_abs = rows.iter().flatten().map(|x| x.abs()).max().unwrap_or_default();
    // every intermediate is bounded by 2^n (n * max)^n
    let bound_bits = n as u64 + n as u64 * (BigInt::from(n) * &max_abs).bits();
    let (sum, stats) = if bound_bits < 120 {
        let small: Vec<Vec<i128>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_i128().expect("bounded")).collect())
            .collect();
        let (s, stats) = ryser_gray(&small, 0i128, |a, b| a + b, |a, b| a - b, |a, b| a * b);
        (BigInt::from(s), stats)
    } else {
        ryser_gray(&rows, BigInt::zero(), |a, b| a + b, |a, b| a - b, |a, b| a * b)
    };
    let per = if n.is_multiple_of(2) { sum } else { -sum };
    Ok((Scalar::from_rational(num_rational::BigRational::new(per, scale)), stats))
}

fn ryser_gray<T: Clone>(
    rows: &[Vec<T>],
    zero: T,
    add: impl Fn(&T, &T) -> T,
    sub: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
) -> (T, RyserStats) {
    let n = rows.len();
    let mut stats = RyserStats::default();
    let mut row_sums = vec![zero.clone(); n];
    let mut total = zero;
    let mut popcount = 0u32;
    let mut gray: u64 = 0;
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let adding = gray & (1 << bit) != 0;
        for (sum, row) in row_sums.iter_mut().zip(rows) {
            *sum = if adding {
                add(sum, &row[bit])
            } else {
                sub(sum, &row[bit])
            };
        }
        popcount = if adding { popcount + 1 } else { popcount - 1 };
        stats.additions += n as u64;
        let mut product = row_sums[0].clone();
        for s in &row_sums[1..] {
            product = mul(&product, s);
        }
        stats.multiplications += n as u64 - 1;
        total = if popcount.is_multiple_of(2) {
            add(&total, &product)
        } else {
            sub(&total, &product)
        };
        stats.additions += 1;
    }
    (total, stats)
}

/// Rows multiplied by the lcm of their denominators, and the product of
/// those multipliers.
fn integer_rows(m: &Matrix<Scalar>) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .rows()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &lcm;
            row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
        })
        .collect();
    (rows, scale)
}

/// Determinant by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix. A zero pivot is replaced by a row swap with a sign flip;
/// a column with no usable pivot means the determinant is zero.
pub fn determinant(m: &Matrix<Scalar>) -> Scalar {
    let n = m.dim();
    if n == 0 {
        return Scalar::one();
    }
    let (mut a, scale) = integer_rows(m);
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Scalar::zero();
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = if negate { -prev } else { prev };
    Scalar::from_rational(num_rational::BigRational::new(det, scale))
}
