use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::characters::{character, class_size};
use crate::error::{Error, Result};
use crate::partitions::{factorial, partitions_of, Partition};

/// Littlewood-Richardson coefficient `c^lambda_{alpha,beta}` from the
/// restriction of `chi_lambda` to `S_p x S_q`:
///
/// `(1/(p! q!)) sum_{gA, gB} d_gA d_gB chi_lambda(gA u gB) chi_alpha(gA) chi_beta(gB)`.
pub fn lr_coefficient(lambda: &Partition, alpha: &Partition, beta: &Partition) -> Result<BigUint> {
    let (p, q) = (alpha.size(), beta.size());
    if p + q != lambda.size() {
        return Err(Error::SizeMismatch(format!(
            "|{alpha}| + |{beta}| = {} but |{lambda}| = {}",
            p + q,
            lambda.size()
        )));
    }
    let mut total = BigInt::zero();
    for ga in partitions_of(p) {
        let weight_a = BigInt::from(class_size(&ga)) * character(alpha, &ga)?;
        if weight_a.is_zero() {
            continue;
        }
        for gb in partitions_of(q) {
            let weight_b = BigInt::from(class_size(&gb)) * character(beta, &gb)?;
            if weight_b.is_zero() {
                continue;
            }
            let merged = Partition::from_multiset(ga.parts().iter().chain(gb.parts()).copied().collect());
            total += &weight_a * &weight_b * character(lambda, &merged)?;
        }
    }
    let value = BigRational::new(total, BigInt::from(factorial(p) * factorial(q)));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::Internal(format!(
            "c^{lambda}_({alpha}),({beta}) evaluated to {value}, not a nonnegative integer"
        )));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// Which single-row or single-column factor a Pieri coefficient multiplies by.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StripKind {
    /// `c^lambda_{alpha,(q)}`: horizontal strips.
    Row,
    /// `c^lambda_{alpha,(1^q)}`: vertical strips.
    Column,
}

/// Diagram-only Pieri predicate: 1 iff `lambda / alpha` is a horizontal
/// (row) or vertical (column) strip of size `q`.
pub fn pieri_coefficient(lambda: &Partition, alpha: &Partition, q: usize, kind: StripKind) -> Result<u32> {
    if alpha.size() + q != lambda.size() {
        return Err(Error::SizeMismatch(format!(
            "|{alpha}| + {q} = {} but |{lambda}| = {}",
            alpha.size() + q,
            lambda.size()
        )));
    }
    let removals = match kind {
        StripKind::Row => lambda.horizontal_strip_removals(q)?,
        StripKind::Column => lambda.vertical_strip_removals(q)?,
    };
    Ok(u32::from(removals.contains(alpha)))
}
