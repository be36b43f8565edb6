use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact commutative coefficient ring.
///
/// Some rings need a runtime context to build constants (the cyclotomic ring
/// needs its prime); `Ctx` carries it. Series over different contexts refuse
/// to combine.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero_of(ctx: &Self::Ctx) -> Self;
    fn one_of(ctx: &Self::Ctx) -> Self;
    fn from_i64(ctx: &Self::Ctx, n: i64) -> Self;

    /// Context this element lives in.
    fn ctx(&self) -> Self::Ctx;

    fn is_nil(&self) -> bool;
    fn is_unity(&self) -> bool;

    fn add_in(&mut self, rhs: &Self);
    fn sub_in(&mut self, rhs: &Self);
    fn negated(&self) -> Self;
    fn times(&self, rhs: &Self) -> Self;

    /// `self += a * b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        let p = a.times(b);
        self.add_in(&p);
    }

    /// Multiplicative inverse when `self` is a unit of the ring.
    fn unit_inverse(&self) -> Option<Self>;

    /// True when the element carries no crank variable (constant in `z`).
    fn is_scalar(&self) -> bool {
        true
    }

    fn is_neg_unity(&self) -> bool {
        self.negated().is_unity()
    }
}

impl Ring for BigInt {
    type Ctx = ();

    fn zero_of(_: &()) -> Self {
        BigInt::zero()
    }

    fn one_of(_: &()) -> Self {
        BigInt::one()
    }

    fn from_i64(_: &(), n: i64) -> Self {
        BigInt::from(n)
    }

    fn ctx(&self) {}

    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }

    fn is_unity(&self) -> bool {
        One::is_one(self)
    }

    fn add_in(&mut self, rhs: &Self) {
        *self += rhs;
    }

    fn sub_in(&mut self, rhs: &Self) {
        *self -= rhs;
    }

    fn negated(&self) -> Self {
        -self
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        if Zero::is_zero(a) || Zero::is_zero(b) {
            return;
        }
        *self += a * b;
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.abs().is_one() {
            Some(self.clone())
        } else {
            None
        }
    }
}
