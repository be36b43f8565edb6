//! Generalized Lambert series at monomial arguments.
//!
//! `Σ(a,b,c) = sum_n q^{2c n(n+1) + b n} / (1 - q^{a + c n})` and
//! `U_ℓ(b) = sum_n q^{6n² + b n} / (1 - q^{ℓ(3n+1)})` share one shape:
//! numerator exponent `A n² + B n`, denominator exponent `D1 n + D0`. A term
//! with negative denominator exponent `d` is rewritten as
//! `-q^{E-d} / (1 - q^{-d})` so every geometric expansion runs upward.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::{AlgebraError, LaurentSeries};
use crate::qseries::{self, QSeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LambertError {
    #[error("Σ({a},·,{c}) has a pole: {a} is a multiple of {c}")]
    Pole { a: i64, c: i64 },
    #[error("base must be positive, got {0}")]
    BadBase(i64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
}

/// `Σ(q^a, q^b, q^c)` to `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaSpec {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub order: i64,
}

/// `U_ℓ(b)` to `order`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UellSpec {
    pub ell: i64,
    pub b: i64,
    pub order: i64,
}

// E(n) = qa n² + qb n over 1 - q^{d1 n + d0}.
#[derive(Clone, Copy)]
struct Shape {
    qa: i64,
    qb: i64,
    d1: i64,
    d0: i64,
}

impl Shape {
    fn num(&self, n: i64) -> i64 {
        self.qa * n * n + self.qb * n
    }

    fn den(&self, n: i64) -> i64 {
        self.d1 * n + self.d0
    }

    fn min_exponent(&self, n: i64) -> i64 {
        self.num(n) + (-self.den(n)).max(0)
    }

    // Loose lower bound for min_exponent, convex in n.
    fn floor(&self, n: i64) -> i64 {
        self.qa * n * n - self.qb.abs() * n.abs()
    }

    /// Every `n` whose term reaches `order`, scanning `extra` steps past the
    /// point where the loose bound leaves the window for good.
    fn terms(&self, order: i64, extra: i64) -> Vec<i64> {
        let mut ns = Vec::new();
        for dir in [1i64, -1] {
            let mut n = if dir == 1 { 0 } else { -1 };
            let mut past = 0;
            loop {
                if self.min_exponent(n) <= order {
                    ns.push(n);
                }
                let out = self.floor(n) > order && self.floor(n + dir) >= self.floor(n);
                if out {
                    past += 1;
                    if past > extra {
                        break;
                    }
                }
                n += dir;
            }
        }
        ns.sort_unstable();
        ns
    }

    fn expand(&self, order: i64, extra: i64) -> LaurentSeries<BigInt> {
        let ns = self.terms(order, extra);
        let Some(lo) = ns.iter().map(|&n| self.min_exponent(n)).min() else {
            return LaurentSeries::zero(&(), order);
        };
        let mut acc = vec![0i64; (order - lo + 1) as usize];
        for n in ns {
            let d = self.den(n);
            let (start, sign) = if d > 0 { (self.num(n), 1) } else { (self.num(n) - d, -1) };
            let mut e = start;
            while e <= order {
                acc[(e - lo) as usize] += sign;
                e += d.abs();
            }
        }
        LaurentSeries::from_coeffs(&(), lo, acc.into_iter().map(BigInt::from).collect())
    }
}

impl SigmaSpec {
    pub fn new(a: i64, b: i64, c: i64, order: i64) -> Self {
        SigmaSpec { a, b, c, order }
    }

    fn check(&self) -> Result<Shape, LambertError> {
        if self.c < 1 {
            return Err(LambertError::BadBase(self.c));
        }
        if self.a.rem_euclid(self.c) == 0 {
            return Err(LambertError::Pole { a: self.a, c: self.c });
        }
        Ok(Shape {
            qa: 2 * self.c,
            qb: 2 * self.c + self.b,
            d1: self.c,
            d0: self.a,
        })
    }
}

/// Lowest exponent contributed by the `n`-th term of `Σ(a,b,c)`.
pub fn sigma_min_exponent(spec: &SigmaSpec, n: i64) -> Result<i64, LambertError> {
    Ok(spec.check()?.min_exponent(n))
}

pub fn sigma(spec: &SigmaSpec) -> Result<LaurentSeries<BigInt>, LambertError> {
    Ok(spec.check()?.expand(spec.order, 0))
}

/// `sigma` with the `n`-scan run `extra` further steps on each side.
pub fn sigma_widened(spec: &SigmaSpec, extra: i64) -> Result<LaurentSeries<BigInt>, LambertError> {
    Ok(spec.check()?.expand(spec.order, extra))
}

/// `q^k Σ(a,b,c)` known to `order`.
pub fn sigma_shifted(a: i64, b: i64, c: i64, k: i64, order: i64) -> Result<LaurentSeries<BigInt>, LambertError> {
    Ok(sigma(&SigmaSpec::new(a, b, c, order - k))?.shift(k))
}

pub fn u_ell(spec: &UellSpec) -> Result<LaurentSeries<BigInt>, LambertError> {
    if spec.ell < 1 {
        return Err(LambertError::BadBase(spec.ell));
    }
    let shape = Shape {
        qa: 6,
        qb: spec.b,
        d1: 3 * spec.ell,
        d0: spec.ell,
    };
    Ok(shape.expand(spec.order, 0))
}

/// `Σ(a,b,c)` summed term by term over `|n| <= n_max`, each `1/(1 - q^d)`
/// obtained by series inversion. Shares no code with `sigma`.
pub fn sigma_oracle(spec: &SigmaSpec, n_max: i64) -> Result<LaurentSeries<BigInt>, LambertError> {
    let SigmaSpec { a, b, c, order } = *spec;
    if c < 1 {
        return Err(LambertError::BadBase(c));
    }
    if a.rem_euclid(c) == 0 {
        return Err(LambertError::Pole { a, c });
    }
    let mut total: Option<LaurentSeries<BigInt>> = None;
    for n in -n_max..=n_max {
        let e = 2 * c * n * (n + 1) + b * n;
        let d = a + c * n;
        // 1/(1 - q^d) must be known to order - e.
        let need = order - e;
        if need < (-d).max(0) {
            continue;
        }
        let one = BigInt::from(1);
        let denom = LaurentSeries::from_terms(&(), [(0, one.clone()), (d, -one)], need + d.abs());
        let term = denom.inverse()?.truncate(need).shift(e);
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term)?,
        });
    }
    Ok(total.unwrap_or_else(|| LaurentSeries::zero(&(), order)).truncate(order))
}

/// `j(q^a; q^b)` times `q^k`, known to `order`.
pub fn jtheta_shifted(a: i64, b: i64, k: i64, order: i64) -> Result<LaurentSeries<BigInt>, LambertError> {
    Ok(qseries::jtheta(a, b, order - k)?.shift(k))
}
