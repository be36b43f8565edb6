use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;
use super::AlgebraError;

/// The ring Z[ζ_t] for a prime `t`, i.e. Z[x] / (1 + x + ... + x^{t-1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicField {
    t: u32,
}

impl CyclotomicField {
    pub fn new(t: u32) -> Result<Self, AlgebraError> {
        if t < 2 || !(2..t).take_while(|d| d * d <= t).all(|d| !t.is_multiple_of(d)) {
            return Err(AlgebraError::NotPrime(t));
        }
        Ok(CyclotomicField { t })
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// `ζ_t^k` for any integer `k`.
    pub fn zeta_pow(&self, k: i64) -> CyclotomicInt {
        let t = self.t as i64;
        let mut full = vec![BigInt::zero(); self.t as usize];
        full[k.rem_euclid(t) as usize] = BigInt::one();
        CyclotomicInt::reduce_cyclic(*self, full)
    }

    pub fn zeta(&self) -> CyclotomicInt {
        self.zeta_pow(1)
    }

    pub fn from_int(&self, n: impl Into<BigInt>) -> CyclotomicInt {
        let mut c = vec![BigInt::zero(); self.t as usize - 1];
        c[0] = n.into();
        CyclotomicInt { field: *self, c }
    }

    /// Element with the given coefficients on `1, ζ, ζ^2, ...`; any length,
    /// reduced on construction.
    pub fn from_powers<C: Into<BigInt>>(&self, coeffs: impl IntoIterator<Item = C>) -> CyclotomicInt {
        let mut full = vec![BigInt::zero(); self.t as usize];
        for (k, c) in coeffs.into_iter().enumerate() {
            full[k % self.t as usize] += c.into();
        }
        CyclotomicInt::reduce_cyclic(*self, full)
    }
}

/// Element `a_0 + a_1 ζ + ... + a_{t-2} ζ^{t-2}` of Z[ζ_t], always reduced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicInt {
    field: CyclotomicField,
    c: Vec<BigInt>,
}

impl CyclotomicInt {
    pub fn field(&self) -> CyclotomicField {
        self.field
    }

    /// Coefficients on `1, ζ, ..., ζ^{t-2}`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.c
    }

    /// The integer this element equals, if it lies in Z.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.c[1..].iter().all(Zero::is_zero).then(|| &self.c[0])
    }

    // `full` has length t and indexes powers of ζ modulo t.
    fn reduce_cyclic(field: CyclotomicField, mut full: Vec<BigInt>) -> Self {
        let top = full.pop().expect("t >= 2");
        if !top.is_zero() {
            for c in full.iter_mut() {
                *c -= &top;
            }
        }
        CyclotomicInt { field, c: full }
    }

    /// Galois conjugate under `ζ -> ζ^j`.
    pub fn conjugate(&self, j: u32) -> Self {
        let t = self.field.t as usize;
        let mut full = vec![BigInt::zero(); t];
        for (k, c) in self.c.iter().enumerate() {
            full[(k * j as usize) % t] += c;
        }
        Self::reduce_cyclic(self.field, full)
    }

    /// Field norm down to Z.
    pub fn norm(&self) -> BigInt {
        let mut p = self.clone();
        for j in 2..self.field.t {
            p = p.times(&self.conjugate(j));
        }
        p.as_integer().cloned().expect("norm is rational")
    }
}

impl fmt::Debug for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let t = self.field.t;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "zeta{t}")?,
                (1, false) => write!(f, "{mag}*zeta{t}")?,
                (_, true) => write!(f, "zeta{t}^{k}")?,
                (_, false) => write!(f, "{mag}*zeta{t}^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Ring for CyclotomicInt {
    type Ctx = CyclotomicField;

    fn zero_of(ctx: &CyclotomicField) -> Self {
        ctx.from_int(0)
    }

    fn one_of(ctx: &CyclotomicField) -> Self {
        ctx.from_int(1)
    }

    fn from_i64(ctx: &CyclotomicField, n: i64) -> Self {
        ctx.from_int(n)
    }

    fn ctx(&self) -> CyclotomicField {
        self.field
    }

    fn is_nil(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn is_unity(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Zero::is_zero)
    }

    fn add_in(&mut self, rhs: &Self) {
        assert_eq!(self.field, rhs.field, "cyclotomic order mismatch");
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
    }

    fn sub_in(&mut self, rhs: &Self) {
        assert_eq!(self.field, rhs.field, "cyclotomic order mismatch");
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a -= b;
        }
    }

    fn negated(&self) -> Self {
        CyclotomicInt {
            field: self.field,
            c: self.c.iter().map(|x| -x).collect(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        assert_eq!(self.field, rhs.field, "cyclotomic order mismatch");
        let t = self.field.t as usize;
        let mut full = vec![BigInt::zero(); t];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    full[(i + j) % t] += a * b;
                }
            }
        }
        Self::reduce_cyclic(self.field, full)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_nil() {
            return None;
        }
        let mut cofactor = Self::one_of(&self.field);
        for j in 2..self.field.t {
            cofactor = cofactor.times(&self.conjugate(j));
        }
        let n = self.times(&cofactor);
        let n = n.as_integer()?;
        if n.abs().is_one() {
            Some(cofactor.times(&self.field.from_int(n.clone())))
        } else {
            None
        }
    }
}
