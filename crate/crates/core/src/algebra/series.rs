use std::fmt;

use super::{AlgebraError, CrankPoly, CyclotomicField, CyclotomicInt, Ring};
use crate::par::{self, Exec};

/// Truncated Laurent series in `q`.
///
/// Coefficients are stored densely for exponents `lo..=order`; everything
/// below `lo` is zero and nothing above `order` is known. Every operation
/// propagates the guaranteed order, and reading a coefficient past it is an
/// error rather than an implicit zero.
#[derive(Clone, PartialEq)]
pub struct LaurentSeries<R: Ring> {
    ctx: R::Ctx,
    lo: i64,
    order: i64,
    coeffs: Vec<R>,
}

// Below this many output coefficients the Cauchy product stays on one thread.
const PAR_MUL_THRESHOLD: usize = 96;

impl<R: Ring> LaurentSeries<R> {
    /// The zero series known to `O(q^{order+1})`.
    pub fn zero(ctx: &R::Ctx, order: i64) -> Self {
        LaurentSeries {
            ctx: ctx.clone(),
            lo: order + 1,
            order,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &R::Ctx, order: i64) -> Self {
        Self::monomial(R::one_of(ctx), 0, order)
    }

    /// `c * q^e` known to `order`.
    pub fn monomial(c: R, e: i64, order: i64) -> Self {
        let ctx = c.ctx();
        if e > order {
            return Self::zero(&ctx, order);
        }
        let mut coeffs = vec![R::zero_of(&ctx); (order - e + 1) as usize];
        coeffs[0] = c;
        LaurentSeries {
            ctx,
            lo: e,
            order,
            coeffs,
        }
    }

    /// Series from `(exponent, coefficient)` pairs; repeated exponents add up
    /// and terms above `order` are dropped.
    pub fn from_terms(ctx: &R::Ctx, terms: impl IntoIterator<Item = (i64, R)>, order: i64) -> Self {
        let terms: Vec<(i64, R)> = terms.into_iter().filter(|(e, _)| *e <= order).collect();
        let lo = terms.iter().map(|(e, _)| *e).min().unwrap_or(order + 1);
        let mut s = Self::dense(ctx, lo, order);
        for (e, c) in terms {
            s.coeffs[(e - lo) as usize].add_in(&c);
        }
        s
    }

    /// Coefficients for exponents `lo, lo+1, ...`; the order is
    /// `lo + coeffs.len() - 1`.
    pub fn from_coeffs(ctx: &R::Ctx, lo: i64, coeffs: Vec<R>) -> Self {
        let order = lo + coeffs.len() as i64 - 1;
        LaurentSeries {
            ctx: ctx.clone(),
            lo,
            order,
            coeffs,
        }
    }

    // All-zero storage for lo..=order.
    fn dense(ctx: &R::Ctx, lo: i64, order: i64) -> Self {
        let len = (order - lo + 1).max(0) as usize;
        LaurentSeries {
            ctx: ctx.clone(),
            lo: lo.min(order + 1),
            order,
            coeffs: vec![R::zero_of(ctx); len],
        }
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    /// Lowest tracked exponent.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent whose coefficient is known exactly.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Exact coefficient of `q^e`.
    pub fn coeff(&self, e: i64) -> Result<R, AlgebraError> {
        if e > self.order {
            return Err(AlgebraError::BeyondOrder {
                exponent: e,
                order: self.order,
            });
        }
        Ok(self.get(e).cloned().unwrap_or_else(|| R::zero_of(&self.ctx)))
    }

    /// Stored coefficient, `None` below `lo` or above `order`.
    pub fn get(&self, e: i64) -> Option<&R> {
        if e < self.lo || e > self.order {
            None
        } else {
            self.coeffs.get((e - self.lo) as usize)
        }
    }

    /// `(exponent, coefficient)` over the stored range, zeros included.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &R)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// First nonzero coefficient within the guaranteed order.
    pub fn first_nonzero(&self) -> Option<(i64, &R)> {
        self.iter().find(|(_, c)| !c.is_nil())
    }

    /// True when every coefficient up to the order vanishes.
    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }

    pub fn valuation(&self) -> Option<i64> {
        self.first_nonzero().map(|(e, _)| e)
    }

    fn check_ctx(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }

    /// Forget coefficients above `order` (no-op when already lower).
    pub fn truncate(&self, order: i64) -> Self {
        if order >= self.order {
            return self.clone();
        }
        let keep = (order - self.lo + 1).max(0) as usize;
        LaurentSeries {
            ctx: self.ctx.clone(),
            lo: self.lo.min(order + 1),
            order,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self, AlgebraError> {
        self.check_ctx(other)?;
        let order = self.order.min(other.order);
        let lo = self.lo.min(other.lo);
        let mut out = Self::dense(&self.ctx, lo, order);
        for (e, c) in self.iter().take_while(|(e, _)| *e <= order) {
            out.coeffs[(e - out.lo) as usize].add_in(c);
        }
        for (e, c) in other.iter().take_while(|(e, _)| *e <= order) {
            let slot = &mut out.coeffs[(e - out.lo) as usize];
            if negate {
                slot.sub_in(c);
            } else {
                slot.add_in(c);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.combine(other, true)
    }

    pub fn neg(&self) -> Self {
        LaurentSeries {
            ctx: self.ctx.clone(),
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(Ring::negated).collect(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        LaurentSeries {
            ctx: self.ctx.clone(),
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x.times(c)).collect(),
        }
    }

    /// Adds `c * q^e` in place; ignored when `e` is past the order.
    pub fn add_term(&mut self, e: i64, c: &R) {
        if e > self.order {
            return;
        }
        if e < self.lo {
            let pad = (self.lo - e) as usize;
            let zero = R::zero_of(&self.ctx);
            self.coeffs.splice(0..0, std::iter::repeat_n(zero, pad));
            self.lo = e;
        }
        self.coeffs[(e - self.lo) as usize].add_in(c);
    }

    /// Cauchy product with the pessimistic order
    /// `min(a.order + b.lo, b.order + a.lo)`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul_with(other, Exec::auto())
    }

    pub fn mul_with(&self, other: &Self, exec: Exec) -> Result<Self, AlgebraError> {
        self.check_ctx(other)?;
        let order = (self.order + other.lo).min(other.order + self.lo);
        let lo = self.lo + other.lo;
        if lo > order {
            return Ok(Self::zero(&self.ctx, order));
        }
        let coeff_at = |e: i64| {
            let mut acc = R::zero_of(&self.ctx);
            let i_lo = self.lo.max(e - other.order);
            let i_hi = self.order.min(e - other.lo);
            for i in i_lo..=i_hi {
                let a = &self.coeffs[(i - self.lo) as usize];
                if a.is_nil() {
                    continue;
                }
                acc.add_mul(a, &other.coeffs[(e - i - other.lo) as usize]);
            }
            acc
        };
        let len = (order - lo + 1) as usize;
        let exec = if len < PAR_MUL_THRESHOLD {
            Exec::Sequential
        } else {
            exec
        };
        let coeffs = par::map_range(exec, lo, order + 1, coeff_at);
        Ok(LaurentSeries {
            ctx: self.ctx.clone(),
            lo,
            order,
            coeffs,
        })
    }

    /// Multiplicative inverse. The first nonzero coefficient must be a unit;
    /// for valuation `v` the result has `lo = -v` and order `order - 2v`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let (v, lead) = self
            .first_nonzero()
            .ok_or(AlgebraError::NotInvertible(self.order))?;
        let lead_inv = lead
            .unit_inverse()
            .ok_or_else(|| AlgebraError::NonUnitLeading(lead.to_string(), v))?;
        let n = (self.order - v) as usize;
        let u = &self.coeffs[(v - self.lo) as usize..];
        let neg_inv = lead_inv.negated();
        let mut b: Vec<R> = Vec::with_capacity(n + 1);
        b.push(lead_inv);
        for k in 1..=n {
            let mut acc = R::zero_of(&self.ctx);
            for i in 1..=k {
                if !u[i].is_nil() {
                    acc.add_mul(&u[i], &b[k - i]);
                }
            }
            b.push(acc.times(&neg_inv));
        }
        Ok(LaurentSeries {
            ctx: self.ctx.clone(),
            lo: -v,
            order: self.order - 2 * v,
            coeffs: b,
        })
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentSeries {
            ctx: self.ctx.clone(),
            lo: self.lo + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Coefficients at exponents `t*m + r`, re-indexed by `m`.
    pub fn dissect(&self, t: i64, r: i64) -> Result<Self, AlgebraError> {
        if t <= 0 || r < 0 || r >= t {
            return Err(AlgebraError::BadDissection { t, r });
        }
        let order = (self.order - r).div_euclid(t);
        let lo = (self.lo - r + t - 1).div_euclid(t);
        let mut out = Self::dense(&self.ctx, lo, order);
        for m in lo..=order {
            if let Some(c) = self.get(t * m + r) {
                out.coeffs[(m - lo) as usize] = c.clone();
            }
        }
        Ok(out)
    }

    /// Substitution `q -> q^t` for `t >= 1`.
    pub fn substitute_power(&self, t: i64) -> Self {
        assert!(t >= 1, "q -> q^t needs t >= 1");
        let lo = self.lo * t;
        let order = self.order * t + t - 1;
        let mut out = Self::dense(&self.ctx, lo, order);
        for (e, c) in self.iter() {
            out.coeffs[(e * t - out.lo) as usize] = c.clone();
        }
        out
    }

    /// In place multiplication by `1 - c q^m` (any integer `m`).
    pub fn mul_binomial(&mut self, c: &R, m: i64) {
        if m < 0 {
            let lo = self.lo + m;
            let order = self.order + m;
            let mut out = Self::dense(&self.ctx, lo, order);
            let negc = c.negated();
            for e in out.lo..=order {
                let slot = &mut out.coeffs[(e - out.lo) as usize];
                if let Some(a) = self.get(e) {
                    slot.add_in(a);
                }
                if let Some(a) = self.get(e - m) {
                    slot.add_mul(&negc, a);
                }
            }
            *self = out;
            return;
        }
        if m == 0 {
            let f = {
                let mut one = R::one_of(&self.ctx);
                one.sub_in(c);
                one
            };
            *self = self.scale(&f);
            return;
        }
        let m = m as usize;
        let fast_one = c.is_unity();
        let negc = c.negated();
        for i in (m..self.coeffs.len()).rev() {
            let (left, right) = self.coeffs.split_at_mut(i);
            let src = &left[i - m];
            if src.is_nil() {
                continue;
            }
            if fast_one {
                right[0].sub_in(src);
            } else {
                right[0].add_mul(&negc, src);
            }
        }
    }

    /// In place division by `1 - c q^m` for `m >= 1`.
    pub fn div_binomial(&mut self, c: &R, m: i64) -> Result<(), AlgebraError> {
        if m < 1 {
            return Err(AlgebraError::NonFormalDivision(m));
        }
        let m = m as usize;
        let fast_one = c.is_unity();
        for i in m..self.coeffs.len() {
            let (left, right) = self.coeffs.split_at_mut(i);
            let src = &left[i - m];
            if src.is_nil() {
                continue;
            }
            if fast_one {
                right[0].add_in(src);
            } else {
                right[0].add_mul(c, src);
            }
        }
        Ok(())
    }

    /// Applies a ring homomorphism coefficientwise.
    pub fn map_coeffs<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> LaurentSeries<S> {
        LaurentSeries {
            ctx: ctx.clone(),
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl LaurentSeries<num_bigint::BigInt> {
    /// Integer series viewed over Z[ζ_t].
    pub fn lift_cyclotomic(&self, field: CyclotomicField) -> LaurentSeries<CyclotomicInt> {
        self.map_coeffs(&field, |c| field.from_int(c.clone()))
    }

    /// Integer series viewed over Z[z, 1/z].
    pub fn lift_crank(&self) -> LaurentSeries<CrankPoly> {
        self.map_coeffs(&(), |c| CrankPoly::constant(c.clone()))
    }
}

impl LaurentSeries<CrankPoly> {
    /// Specialization `z = 1`.
    pub fn at_z_one(&self) -> LaurentSeries<num_bigint::BigInt> {
        self.map_coeffs(&(), CrankPoly::sum_coeffs)
    }
}

/// Substitutes `z = ζ_t` in every coefficient.
pub fn eval_at_root_of_unity(
    a: &LaurentSeries<CrankPoly>,
    t: u32,
) -> Result<LaurentSeries<CyclotomicInt>, AlgebraError> {
    let field = CyclotomicField::new(t)?;
    Ok(a.map_coeffs(&field, |p| {
        let mut powers = vec![num_bigint::BigInt::from(0); t as usize];
        for (k, c) in p.terms() {
            powers[k.rem_euclid(t as i64) as usize] += c;
        }
        field.from_powers(powers)
    }))
}

impl<R: Ring> fmt::Debug for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Ring> fmt::Display for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.iter().filter(|(_, c)| !c.is_nil()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            match e {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "{cs}*q")?,
                _ => write!(f, "{cs}*q^{e}")?,
            }
        }
        if !first {
            write!(f, " + ")?;
        }
        write!(f, "O(q^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int_series(lo: i64, cs: &[i64]) -> LaurentSeries<BigInt> {
        LaurentSeries::from_coeffs(&(), lo, cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn ints(s: &LaurentSeries<BigInt>) -> Vec<i64> {
        s.iter().map(|(_, c)| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn additive_inverse_vanishes() {
        let a = int_series(0, &[1, 1, 0, 0, 0, 0]);
        let s = a.add(&a.neg()).unwrap();
        assert!(s.is_zero());
        assert_eq!(s.order(), 5);
    }

    #[test]
    fn disjoint_support_sum() {
        let a = LaurentSeries::monomial(BigInt::from(-1), -1, 3);
        let b = LaurentSeries::monomial(BigInt::from(1), 1, 3);
        let s = a.add(&b).unwrap();
        assert_eq!(s.lo(), -1);
        assert_eq!(s.coeff(-1).unwrap(), BigInt::from(-1));
        assert_eq!(s.coeff(0).unwrap(), BigInt::from(0));
        assert_eq!(s.coeff(1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn telescoping_product() {
        let n = 7;
        let one_minus_q = int_series(0, &[1, -1, 0, 0, 0, 0, 0, 0]);
        let geo = int_series(0, &[1; 8]);
        let p = one_minus_q.mul(&geo).unwrap();
        assert_eq!(p.order(), n);
        assert_eq!(ints(&p), vec![1, 0, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn monomial_product_and_order() {
        let a = LaurentSeries::monomial(BigInt::from(1), -2, 10);
        let b = LaurentSeries::monomial(BigInt::from(1), 5, 10);
        let p = a.mul(&b).unwrap();
        assert_eq!(p.first_nonzero().map(|(e, _)| e), Some(3));
        assert_eq!(p.order(), 8);
    }

    #[test]
    fn geometric_inverse() {
        let a = int_series(0, &[1, -1, 0, 0, 0]);
        assert_eq!(ints(&a.inverse().unwrap()), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn monomial_inverse() {
        let a = LaurentSeries::monomial(BigInt::from(1), 2, 10);
        let b = a.inverse().unwrap();
        assert_eq!(b.lo(), -2);
        assert_eq!(b.coeff(-2).unwrap(), BigInt::from(1));
        assert!(b.iter().skip(1).all(|(_, c)| c.is_nil()));
    }

    #[test]
    fn non_unit_leading_rejected() {
        let a = int_series(0, &[2, 1, 0]);
        assert!(matches!(a.inverse(), Err(AlgebraError::NonUnitLeading(..))));
        let z = LaurentSeries::<BigInt>::zero(&(), 5);
        assert!(matches!(z.inverse(), Err(AlgebraError::NotInvertible(5))));
    }

    #[test]
    fn coefficient_past_order_is_an_error() {
        let a = int_series(0, &[1, 1]);
        assert_eq!(a.coeff(-1).unwrap(), BigInt::from(0));
        assert!(matches!(a.coeff(2), Err(AlgebraError::BeyondOrder { exponent: 2, order: 1 })));
    }

    #[test]
    fn shift_examples() {
        let one = LaurentSeries::<BigInt>::one(&(), 4);
        let s = one.shift(5);
        assert_eq!(s.coeff(5).unwrap(), BigInt::from(1));
        let a = int_series(-1, &[1, 1, 0]);
        let b = a.shift(1);
        assert_eq!(b.lo(), 0);
        assert_eq!(ints(&b), vec![1, 1, 0]);
        assert_eq!(b.shift(-1), a);
    }

    #[test]
    fn dissect_small() {
        let a = int_series(0, &[1, 1, 1, 1]);
        let d = a.dissect(2, 0).unwrap();
        assert_eq!(ints(&d), vec![1, 1]);
        assert_eq!(d.order(), 1);
        assert!(a.dissect(0, 0).is_err());
        assert!(a.dissect(3, 3).is_err());
    }

    #[test]
    fn binomial_factors_roundtrip() {
        let mut a = int_series(-3, &[2, 0, -1, 5, 7, 1, 0, 3]);
        let orig = a.clone();
        a.mul_binomial(&BigInt::from(1), 2);
        a.div_binomial(&BigInt::from(1), 2).unwrap();
        assert_eq!(a, orig);
        let mut b = orig.clone();
        b.mul_binomial(&BigInt::from(3), -2);
        assert_eq!(b.lo(), -5);
        assert_eq!(b.order(), orig.order() - 2);
        assert!(orig.clone().div_binomial(&BigInt::from(1), 0).is_err());
    }

    #[test]
    fn ring_mismatch_detected() {
        let f3 = CyclotomicField::new(3).unwrap();
        let f5 = CyclotomicField::new(5).unwrap();
        let a = LaurentSeries::<CyclotomicInt>::one(&f3, 3);
        let b = LaurentSeries::<CyclotomicInt>::one(&f5, 3);
        assert_eq!(a.add(&b), Err(AlgebraError::RingMismatch));
        assert_eq!(a.mul(&b), Err(AlgebraError::RingMismatch));
    }

    #[test]
    fn root_of_unity_substitution() {
        let p = CrankPoly::from_terms([(1, 1), (-1, 1)]);
        let s = LaurentSeries::monomial(p, 0, 2);
        let v = eval_at_root_of_unity(&s, 5).unwrap();
        let f = CyclotomicField::new(5).unwrap();
        assert_eq!(v.coeff(0).unwrap(), f.from_powers([0, 1, 0, 0, 1]));

        let p = CrankPoly::from_terms([(0, 1), (1, 1), (2, 1)]);
        let s = LaurentSeries::monomial(p, 0, 2);
        assert!(eval_at_root_of_unity(&s, 3).unwrap().is_zero());
        assert!(eval_at_root_of_unity(&s, 9).is_err());
    }

    #[test]
    fn display_marks_order() {
        let a = int_series(0, &[1, -1, 0, 2]);
        assert_eq!(a.to_string(), "1 + -1*q + 2*q^3 + O(q^4)");
    }
}
