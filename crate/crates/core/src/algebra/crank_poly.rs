use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::ring::Ring;

/// Laurent polynomial in the crank variable `z` with integer coefficients.
///
/// Canonical form: `coeffs[0]` is the coefficient of `z^lo` and neither end
/// of `coeffs` is zero. The zero polynomial is `lo = 0` with no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CrankPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl CrankPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * z^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::from_dense(k, vec![c.into()])
    }

    /// The crank variable `z` itself.
    pub fn z() -> Self {
        Self::monomial(1, 1)
    }

    pub fn z_inv() -> Self {
        Self::monomial(1, -1)
    }

    pub fn from_dense(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = CrankPoly { lo, coeffs };
        p.normalize();
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut map: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (k, c) in terms {
            *map.entry(k).or_default() += c.into();
        }
        let Some((&lo, _)) = map.iter().next() else {
            return Self::zero();
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (k, c) in map {
            coeffs[(k - lo) as usize] = c;
        }
        Self::from_dense(lo, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.lo += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.lo = 0;
        }
    }

    /// Lowest z-exponent with a nonzero coefficient (`None` for zero).
    pub fn min_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.lo)
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.lo {
            return BigInt::zero();
        }
        self.coeffs
            .get((k - self.lo) as usize)
            .cloned()
            .unwrap_or_default()
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Value at `z = 1`.
    pub fn sum_coeffs(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `p(z^{-1})`.
    pub fn reflect(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(hi) => {
                let mut c = self.coeffs.clone();
                c.reverse();
                Self::from_dense(-hi, c)
            }
        }
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        CrankPoly {
            lo: self.lo + k,
            coeffs: self.coeffs.clone(),
        }
    }

    fn add_signed(&mut self, rhs: &Self, negate: bool) {
        if rhs.coeffs.is_empty() {
            return;
        }
        if self.coeffs.is_empty() {
            *self = if negate { rhs.negated() } else { rhs.clone() };
            return;
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        if lo < self.lo {
            let pad = (self.lo - lo) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_n(BigInt::zero(), pad));
            self.lo = lo;
        }
        let len = (hi - lo + 1) as usize;
        if self.coeffs.len() < len {
            self.coeffs.resize(len, BigInt::zero());
        }
        let off = (rhs.lo - self.lo) as usize;
        for (i, c) in rhs.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        self.normalize();
    }
}

impl fmt::Debug for CrankPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CrankPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            let (neg, mag) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Ring for CrankPoly {
    type Ctx = ();

    fn zero_of(_: &()) -> Self {
        CrankPoly::zero()
    }

    fn one_of(_: &()) -> Self {
        CrankPoly::constant(1)
    }

    fn from_i64(_: &(), n: i64) -> Self {
        CrankPoly::constant(n)
    }

    fn ctx(&self) {}

    fn is_nil(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn is_unity(&self) -> bool {
        self.lo == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    fn add_in(&mut self, rhs: &Self) {
        self.add_signed(rhs, false);
    }

    fn sub_in(&mut self, rhs: &Self) {
        self.add_signed(rhs, true);
    }

    fn negated(&self) -> Self {
        CrankPoly {
            lo: self.lo,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn times(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return CrankPoly::zero();
        }
        if rhs.coeffs.len() == 1 && rhs.coeffs[0].is_one() {
            return self.shift(rhs.lo);
        }
        if self.coeffs.len() == 1 && self.coeffs[0].is_one() {
            return rhs.shift(self.lo);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        CrankPoly::from_dense(self.lo + rhs.lo, out)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.coeffs.len() == 1 && self.coeffs[0].abs().is_one() {
            Some(CrankPoly {
                lo: -self.lo,
                coeffs: self.coeffs.clone(),
            })
        } else {
            None
        }
    }

    fn is_scalar(&self) -> bool {
        self.coeffs.is_empty() || (self.lo == 0 && self.coeffs.len() == 1)
    }
}
