use std::fmt::{Debug, Display};

use num_bigint::BigInt;

use super::poly::SparsePoly;
use super::scalar::Scalar;

/// Commutative ring contract shared by matrix entries, so rational and
/// polynomial matrices go through one immanant/permanent implementation.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_scalar(s: &Scalar) -> Self;

    fn from_integer(n: &BigInt) -> Self {
        Self::from_scalar(&Scalar::from_bigint(n.clone()))
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(&other.neg_ref());
        out
    }
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }

    fn one() -> Self {
        Scalar::one()
    }

    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn from_scalar(s: &Scalar) -> Self {
        s.clone()
    }
}

impl Ring for SparsePoly {
    fn zero() -> Self {
        SparsePoly::zero()
    }

    fn one() -> Self {
        SparsePoly::one()
    }

    fn is_zero(&self) -> bool {
        SparsePoly::is_zero(self)
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn neg_ref(&self) -> Self {
        -self
    }

    fn from_scalar(s: &Scalar) -> Self {
        SparsePoly::constant(s.clone())
    }
}
