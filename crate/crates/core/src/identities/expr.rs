//! Small term language for identity sides: an integer times `q^k`, a ratio
//! of brackets and eta factors, and at most one Lambert-type base series.

use std::fmt;

use num_bigint::BigInt;

use super::IdentityError;
use crate::algebra::{CyclotomicField, CyclotomicInt, LaurentSeries, Ring};
use crate::lambert::{self, SigmaSpec, UellSpec};
use crate::par::{self, Exec};
use crate::qseries::{self, QSeriesError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    /// `<q^a>_{q^b}`
    Br(i64, i64),
    /// `(q^b; q^b)_inf`
    Eta(i64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    One,
    Sigma(i64, i64, i64),
    U(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub coeff: i64,
    pub qpow: i64,
    pub num: Vec<Factor>,
    pub den: Vec<Factor>,
    pub base: Base,
}

pub fn br(a: i64, b: i64) -> Factor {
    Factor::Br(a, b)
}

pub fn eta(b: i64) -> Factor {
    Factor::Eta(b)
}

/// The constant term 1.
pub fn one() -> Term {
    Term {
        coeff: 1,
        qpow: 0,
        num: Vec::new(),
        den: Vec::new(),
        base: Base::One,
    }
}

pub fn sigma(a: i64, b: i64, c: i64) -> Term {
    Term {
        base: Base::Sigma(a, b, c),
        ..one()
    }
}

pub fn u(ell: i64, b: i64) -> Term {
    Term {
        base: Base::U(ell, b),
        ..one()
    }
}

impl std::ops::Neg for Term {
    type Output = Term;

    fn neg(self) -> Term {
        self.times(-1)
    }
}

impl Term {
    pub fn times(mut self, c: i64) -> Self {
        self.coeff *= c;
        self
    }

    pub fn q(mut self, k: i64) -> Self {
        self.qpow += k;
        self
    }

    pub fn over(mut self, fs: impl IntoIterator<Item = Factor>) -> Self {
        self.den.extend(fs);
        self
    }

    pub fn with(mut self, fs: impl IntoIterator<Item = Factor>) -> Self {
        self.num.extend(fs);
        self
    }

    /// The series known to `order`. Zero numerator brackets give the zero
    /// series; zero denominator brackets are an error.
    pub fn eval(&self, order: i64) -> Result<LaurentSeries<BigInt>, IdentityError> {
        let mut shift = self.qpow;
        let mut negate = self.coeff < 0;
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (fs, out, sign) in [(&self.num, &mut num, 1), (&self.den, &mut den, -1)] {
            for f in fs {
                match *f {
                    Factor::Eta(b) => out.push(Factor::Eta(b)),
                    Factor::Br(a, b) => match qseries::bracket_norm(a, b) {
                        Ok(n) => {
                            shift += sign * n.shift;
                            negate ^= n.negate;
                            out.push(Factor::Br(n.reduced, b));
                        }
                        Err(QSeriesError::ZeroBracket { .. }) if sign == 1 => {
                            return Ok(LaurentSeries::zero(&(), order));
                        }
                        Err(e) => return Err(e.into()),
                    },
                }
            }
        }
        let inner = order - shift;
        let mut s = match self.base {
            Base::One => LaurentSeries::one(&(), inner),
            Base::Sigma(a, b, c) => lambert::sigma(&SigmaSpec::new(a, b, c, inner))?,
            Base::U(ell, b) => lambert::u_ell(&UellSpec { ell, b, order: inner })?,
        };
        for f in &num {
            match *f {
                Factor::Br(a, b) => qseries::mul_bracket(&mut s, a, b)?,
                Factor::Eta(b) => qseries::mul_eta(&mut s, b)?,
            }
        }
        for f in &den {
            match *f {
                Factor::Br(a, b) => qseries::div_bracket(&mut s, a, b)?,
                Factor::Eta(b) => qseries::div_eta(&mut s, b)?,
            }
        }
        let mut s = s.shift(shift);
        let c = BigInt::from(self.coeff.abs());
        if !c.is_unity() {
            s = s.scale(&c);
        }
        Ok(if negate { s.neg() } else { s })
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Br(a, b) => write!(f, "<q^{a}>_{{q^{b}}}"),
            Factor::Eta(b) => write!(f, "(q^{b};q^{b})"),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*q^{}", self.coeff, self.qpow)?;
        for x in &self.num {
            write!(f, " {x}")?;
        }
        match self.base {
            Base::One => {}
            Base::Sigma(a, b, c) => write!(f, " Σ({a},{b},{c})")?,
            Base::U(l, b) => write!(f, " U{l}({b})")?,
        }
        for x in &self.den {
            write!(f, " / {x}")?;
        }
        Ok(())
    }
}

/// Sum of terms to `order`, terms evaluated independently.
pub fn eval_sum(terms: &[Term], order: i64, exec: Exec) -> Result<LaurentSeries<BigInt>, IdentityError> {
    let parts = par::map(exec, terms, |t| t.eval(order));
    let mut acc = LaurentSeries::zero(&(), order);
    for p in parts {
        acc = acc.add(&p?)?;
    }
    Ok(acc)
}

/// `sum_i c_i T_i` with cyclotomic coefficients.
pub fn eval_cyclo(
    field: &CyclotomicField,
    terms: &[(CyclotomicInt, Term)],
    order: i64,
    exec: Exec,
) -> Result<LaurentSeries<CyclotomicInt>, IdentityError> {
    let parts = par::map(exec, terms, |(c, t)| t.eval(order).map(|s| s.lift_cyclotomic(*field).scale(c)));
    let mut acc = LaurentSeries::zero(field, order);
    for p in parts {
        acc = acc.add(&p?)?;
    }
    Ok(acc)
}
