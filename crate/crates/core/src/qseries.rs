//! q-Pochhammer symbols, Jacobi brackets `<q^a>_{q^b} = (q^a, q^{b-a}; q^b)_inf`
//! and `j(q^a; q^b)`.
//!
//! Every product is built by multiplying or dividing a series in place by
//! factors `1 - c q^m`, stopping at the first factor that cannot touch the
//! guaranteed order. The `mul_*`/`div_*` functions expose that so callers can
//! fold many products into one accumulator without intermediate series.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{AlgebraError, CrankPoly, LaurentSeries, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QSeriesError {
    #[error("<q^{a}>_(q^{b}) vanishes identically")]
    ZeroBracket { a: i64, b: i64 },
    #[error("product with first factor at q^{qexp} does not converge formally")]
    NotConvergent { qexp: i64 },
    #[error("q-base must be positive, got {0}")]
    BadBase(i64),
    #[error("monomial coefficient {0} is not a unit")]
    NonUnit(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `coeff * q^qexp` with `coeff` a unit; over `CrankPoly` the unit is `±z^k`.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial<R: Ring> {
    pub coeff: R,
    pub qexp: i64,
}

impl<R: Ring> Monomial<R> {
    pub fn new(coeff: R, qexp: i64) -> Result<Self, QSeriesError> {
        if coeff.unit_inverse().is_none() {
            return Err(QSeriesError::NonUnit(coeff.to_string()));
        }
        Ok(Monomial { coeff, qexp })
    }
}

impl Monomial<BigInt> {
    /// Plain `q^e`.
    pub fn q(e: i64) -> Self {
        Monomial {
            coeff: BigInt::from(1),
            qexp: e,
        }
    }
}

impl Monomial<CrankPoly> {
    /// `z^k q^e`.
    pub fn zq(k: i64, e: i64) -> Self {
        Monomial {
            coeff: CrankPoly::monomial(1, k),
            qexp: e,
        }
    }

    pub fn zexp(&self) -> i64 {
        self.coeff.min_degree().unwrap_or(0)
    }
}

fn check_base(base: i64) -> Result<(), QSeriesError> {
    if base < 1 {
        Err(QSeriesError::BadBase(base))
    } else {
        Ok(())
    }
}

// Largest q-exponent of a factor 1 - c q^m that can still change `s`.
fn reach<R: Ring>(s: &LaurentSeries<R>) -> i64 {
    s.order() - s.lo()
}

/// `s *= (c q^e; q^base)_n`.
pub fn mul_pochhammer_finite<R: Ring>(s: &mut LaurentSeries<R>, c: &R, e: i64, base: i64, n: u64) {
    for k in 0..n as i64 {
        let m = e + base * k;
        if m > 0 && m > reach(s) {
            break;
        }
        s.mul_binomial(c, m);
    }
}

/// `s /= (c q^e; q^base)_n`; every factor needs a positive q-exponent.
pub fn div_pochhammer_finite<R: Ring>(
    s: &mut LaurentSeries<R>,
    c: &R,
    e: i64,
    base: i64,
    n: u64,
) -> Result<(), QSeriesError> {
    check_base(base)?;
    if n > 0 && e < 1 {
        return Err(AlgebraError::NonFormalDivision(e).into());
    }
    for k in 0..n as i64 {
        let m = e + base * k;
        if m > reach(s) {
            break;
        }
        s.div_binomial(c, m)?;
    }
    Ok(())
}

// Rejects infinite products whose factors do not tend to 1 in the q-adic sense.
fn check_convergent<R: Ring>(c: &R, e: i64, base: i64) -> Result<(), QSeriesError> {
    check_base(base)?;
    if e < 0 || (e == 0 && c.is_scalar()) {
        return Err(QSeriesError::NotConvergent { qexp: e });
    }
    Ok(())
}

/// `s *= (c q^e; q^base)_inf`.
pub fn mul_pochhammer_inf<R: Ring>(s: &mut LaurentSeries<R>, c: &R, e: i64, base: i64) -> Result<(), QSeriesError> {
    check_convergent(c, e, base)?;
    let mut m = e;
    while m <= reach(s) {
        s.mul_binomial(c, m);
        m += base;
    }
    Ok(())
}

/// `s /= (c q^e; q^base)_inf`, for `e >= 1`.
pub fn div_pochhammer_inf<R: Ring>(s: &mut LaurentSeries<R>, c: &R, e: i64, base: i64) -> Result<(), QSeriesError> {
    check_convergent(c, e, base)?;
    if e < 1 {
        return Err(AlgebraError::NonFormalDivision(e).into());
    }
    let mut m = e;
    while m <= reach(s) {
        s.div_binomial(c, m)?;
        m += base;
    }
    Ok(())
}

/// `prod_{k<n} (1 - x q^{base k})` to `order`.
pub fn pochhammer_finite<R: Ring>(x: &Monomial<R>, base: i64, n: u64, order: i64) -> LaurentSeries<R> {
    let mut s = LaurentSeries::one(&x.coeff.ctx(), order);
    mul_pochhammer_finite(&mut s, &x.coeff, x.qexp, base, n);
    s
}

/// `(x; q^base)_inf` to `order`.
pub fn pochhammer_inf<R: Ring>(x: &Monomial<R>, base: i64, order: i64) -> Result<LaurentSeries<R>, QSeriesError> {
    let mut s = LaurentSeries::one(&x.coeff.ctx(), order);
    mul_pochhammer_inf(&mut s, &x.coeff, x.qexp, base)?;
    Ok(s)
}

/// `<q^a>_{q^b} = (-1)^negate q^shift <q^reduced>_{q^b}` with `0 < reduced < b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BracketNorm {
    pub negate: bool,
    pub shift: i64,
    pub reduced: i64,
}

/// Reduces `a` into `(0, b)` with `<z> = -z <qz>` read in either direction.
pub fn bracket_norm(a: i64, b: i64) -> Result<BracketNorm, QSeriesError> {
    check_base(b)?;
    if a.rem_euclid(b) == 0 {
        return Err(QSeriesError::ZeroBracket { a, b });
    }
    let reduced = a.rem_euclid(b);
    // f(x) = -q^x f(x + b) repeated k times, x = a, a+b, ...
    let k = (reduced - a) / b;
    // sum_{i<k} (a + i b) for k >= 0; the downward case is the same sum with
    // k < 0 read as f(x) = -q^{b-x} f(x - b).
    let shift = if k >= 0 {
        k * a + b * k * (k - 1) / 2
    } else {
        let j = -k;
        (0..j).map(|i| b - (a - i * b)).sum()
    };
    Ok(BracketNorm {
        negate: k.rem_euclid(2) == 1,
        shift,
        reduced,
    })
}

/// `s *= <q^a>_{q^b}` with `a` already in `(0, b)`.
fn mul_reduced_bracket<R: Ring>(s: &mut LaurentSeries<R>, a: i64, b: i64) -> Result<(), QSeriesError> {
    let one = R::one_of(s.ctx());
    mul_pochhammer_inf(s, &one, a, b)?;
    mul_pochhammer_inf(s, &one, b - a, b)
}

fn div_reduced_bracket<R: Ring>(s: &mut LaurentSeries<R>, a: i64, b: i64) -> Result<(), QSeriesError> {
    let one = R::one_of(s.ctx());
    div_pochhammer_inf(s, &one, a, b)?;
    div_pochhammer_inf(s, &one, b - a, b)
}

/// `s *= <q^a>_{q^b}` for any `a`; the result's order moves by the
/// normalization shift. A vanishing bracket zeroes `s`.
pub fn mul_bracket<R: Ring>(s: &mut LaurentSeries<R>, a: i64, b: i64) -> Result<(), QSeriesError> {
    match bracket_norm(a, b) {
        Err(QSeriesError::ZeroBracket { .. }) => {
            *s = LaurentSeries::zero(s.ctx(), s.order());
            Ok(())
        }
        Err(e) => Err(e),
        Ok(n) => {
            mul_reduced_bracket(s, n.reduced, b)?;
            *s = s.shift(n.shift);
            if n.negate {
                *s = s.neg();
            }
            Ok(())
        }
    }
}

/// `s /= <q^a>_{q^b}`; a vanishing bracket is `ZeroBracket`.
pub fn div_bracket<R: Ring>(s: &mut LaurentSeries<R>, a: i64, b: i64) -> Result<(), QSeriesError> {
    let n = bracket_norm(a, b)?;
    div_reduced_bracket(s, n.reduced, b)?;
    *s = s.shift(-n.shift);
    if n.negate {
        *s = s.neg();
    }
    Ok(())
}

/// `s *= (q^b; q^b)_inf`.
pub fn mul_eta<R: Ring>(s: &mut LaurentSeries<R>, b: i64) -> Result<(), QSeriesError> {
    let one = R::one_of(s.ctx());
    mul_pochhammer_inf(s, &one, b, b)
}

pub fn div_eta<R: Ring>(s: &mut LaurentSeries<R>, b: i64) -> Result<(), QSeriesError> {
    let one = R::one_of(s.ctx());
    div_pochhammer_inf(s, &one, b, b)
}

/// `<q^a>_{q^b}` known to `order`.
pub fn jacobi_bracket(a: i64, b: i64, order: i64) -> Result<LaurentSeries<BigInt>, QSeriesError> {
    let n = bracket_norm(a, b)?;
    let mut s = LaurentSeries::one(&(), order - n.shift);
    mul_bracket(&mut s, a, b)?;
    Ok(s)
}

/// `j(q^a; q^b) = <q^a>_{q^b} (q^b; q^b)_inf`, zero when `b | a`.
pub fn jtheta(a: i64, b: i64, order: i64) -> Result<LaurentSeries<BigInt>, QSeriesError> {
    match bracket_norm(a, b) {
        Err(QSeriesError::ZeroBracket { .. }) => Ok(LaurentSeries::zero(&(), order)),
        Err(e) => Err(e),
        Ok(n) => {
            let mut s = LaurentSeries::one(&(), order - n.shift);
            mul_eta(&mut s, b)?;
            mul_bracket(&mut s, a, b)?;
            Ok(s)
        }
    }
}

/// `sum_n (-1)^n q^{a n + b n(n-1)/2}` summed directly.
pub fn jtheta_sum_oracle(a: i64, b: i64, order: i64) -> Result<LaurentSeries<BigInt>, QSeriesError> {
    check_base(b)?;
    let exp = |n: i64| a * n + b * n * (n - 1) / 2;
    // The exponent is convex in n with its minimum near 1/2 - a/b.
    let centre = (b - 2 * a).div_euclid(2 * b);
    let mut terms = Vec::new();
    let mut n = centre;
    while exp(n) <= order || n <= centre + 1 {
        terms.push((exp(n), BigInt::from(if n % 2 == 0 { 1 } else { -1 })));
        n += 1;
    }
    let mut n = centre - 1;
    while exp(n) <= order || n >= centre - 1 {
        terms.push((exp(n), BigInt::from(if n % 2 == 0 { 1 } else { -1 })));
        n -= 1;
    }
    let mut s = LaurentSeries::from_terms(&(), terms, order);
    if s.lo() > order {
        s = LaurentSeries::zero(&(), order);
    }
    Ok(s)
}
