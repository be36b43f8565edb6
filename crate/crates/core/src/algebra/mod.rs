//! Exact coefficient rings and truncated Laurent series in `q`.

mod crank_poly;
mod cyclotomic;
mod ring;
mod series;

use thiserror::Error;

pub use crank_poly::CrankPoly;
pub use cyclotomic::{CyclotomicField, CyclotomicInt};
pub use ring::Ring;
pub use series::{eval_at_root_of_unity, LaurentSeries};

pub use num_bigint::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cyclotomic order {0} is not prime")]
    NotPrime(u32),
    #[error("series live over different coefficient rings")]
    RingMismatch,
    #[error("leading coefficient {0} at q^{1} is not a unit")]
    NonUnitLeading(String, i64),
    #[error("series has no nonzero coefficient up to q^{0}; cannot invert")]
    NotInvertible(i64),
    #[error("coefficient of q^{exponent} requested but series is only known to q^{order}")]
    BeyondOrder { exponent: i64, order: i64 },
    #[error("division by 1 - c*q^{0} needs a positive q-exponent")]
    NonFormalDivision(i64),
    #[error("dissection modulus must be positive and the residue in range, got t={t}, r={r}")]
    BadDissection { t: i64, r: i64 },
}
