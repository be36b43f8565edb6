//! Partition pairs in ST, the pair crank, and three constructions of the
//! crank generating function `ST(z,q)`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, CrankPoly, CyclotomicField, CyclotomicInt, LaurentSeries, Ring};
use crate::par::{self, Exec};
use crate::qseries::{self, QSeriesError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("{0} is not an ST pair")]
    NotSt(String),
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("n = {n} is outside the table (max {max})")]
    OutOfRange { n: u32, max: u32 },
    #[error("modulus must be positive")]
    BadModulus,
    #[error("coefficient {coeff} of z^{m} q^{n} is not a count")]
    NotACount { m: i64, n: i64, coeff: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
}

/// Parts in non-decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart);
        }
        parts.sort_unstable();
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn count(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` stands for the conventional smallest part ∞ of the empty partition.
    pub fn smallest(&self) -> Option<u32> {
        self.0.first().copied()
    }

    /// 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join("+"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PartitionPair {
    pub pi1: Partition,
    pub pi2: Partition,
}

impl PartitionPair {
    pub fn new(pi1: Partition, pi2: Partition) -> Self {
        PartitionPair { pi1, pi2 }
    }

    pub fn size(&self) -> u32 {
        self.pi1.size() + self.pi2.size()
    }

    /// `π1` nonempty, `s(π1) <= s(π2)`, `ℓ(π2) < 2 s(π1)`.
    pub fn is_st(&self) -> bool {
        let Some(s1) = self.pi1.smallest() else {
            return false;
        };
        self.pi2.smallest().is_none_or(|s2| s1 <= s2) && self.pi2.largest() < 2 * s1
    }

    pub fn paircrank(&self) -> Result<i64, PartitionError> {
        if !self.is_st() {
            return Err(PartitionError::NotSt(self.to_string()));
        }
        let k2 = self.pi2.count() as i64;
        if k2 == 0 {
            return Ok(self.pi1.count() as i64 - 1);
        }
        let bound = self.pi1.smallest().unwrap() as i64 + k2;
        let big = self.pi1.parts().iter().filter(|&&p| p as i64 >= bound).count() as i64;
        Ok(big - k2)
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pi1, self.pi2)
    }
}

/// Partitions of `m` with every part in `lo..=hi`, as non-decreasing lists.
pub fn partitions_bounded(m: u32, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    fn go(m: u32, lo: u32, hi: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if m == 0 {
            out.push(cur.clone());
            return;
        }
        for p in lo..=hi.min(m) {
            cur.push(p);
            go(m - p, p, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo >= 1 {
        go(m, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// All ST pairs of `n`, sorted lexicographically on `(π1, π2)`.
pub fn enumerate_st_pairs(n: u32) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for s in 1..=n {
        for n1 in s..=n {
            // π1 = s + (partition of n1 - s into parts >= s)
            let firsts: Vec<Vec<u32>> = partitions_bounded(n1 - s, s, n1)
                .into_iter()
                .map(|mut rest| {
                    rest.insert(0, s);
                    rest
                })
                .collect();
            let seconds = partitions_bounded(n - n1, s, 2 * s - 1);
            for a in &firsts {
                for b in &seconds {
                    out.push(PartitionPair::new(Partition(a.clone()), Partition(b.clone())));
                }
            }
        }
    }
    out.sort();
    out
}

pub fn st_count(n: u32) -> u64 {
    enumerate_st_pairs(n).len() as u64
}

/// Which upper bound on the parts of `π2` the smallest-parts reading uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UpperBound {
    /// parts of `π2` below `2 s(π1)`
    TwiceFirst,
    /// parts of `π2` below `2 s(π2)`
    TwiceSecond,
}

/// Occurrences of `s(π1)` summed over pairs of `n` whose `π2` has every
/// part strictly above `s(π1)` and below the chosen bound.
pub fn smallest_part_occurrences(n: u32, bound: UpperBound) -> u64 {
    let mut total = 0;
    for n1 in 1..=n {
        for p1 in partitions_bounded(n1, 1, n1) {
            let s = p1[0];
            let weight = p1.iter().take_while(|&&p| p == s).count() as u64;
            let m = n - n1;
            let count = match bound {
                UpperBound::TwiceFirst => partitions_bounded(m, s + 1, 2 * s - 1).len(),
                UpperBound::TwiceSecond => partitions_bounded(m, s + 1, m.max(s + 1))
                    .into_iter()
                    .filter(|p2| p2.last().is_none_or(|&l| l < 2 * p2[0]))
                    .count(),
            };
            total += weight * count as u64;
        }
    }
    total
}

/// `C(m, n)` for `n <= max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankTable {
    max_n: u32,
    counts: BTreeMap<(u32, i64), u64>,
}

impl CrankTable {
    pub fn max_n(&self) -> u32 {
        self.max_n
    }

    pub fn get(&self, m: i64, n: u32) -> u64 {
        self.counts.get(&(n, m)).copied().unwrap_or(0)
    }

    /// Nonzero `(m, C(m,n))` in increasing `m`.
    pub fn column(&self, n: u32) -> Vec<(i64, u64)> {
        self.counts
            .range((n, i64::MIN)..=(n, i64::MAX))
            .map(|(&(_, m), &c)| (m, c))
            .collect()
    }

    pub fn total(&self, n: u32) -> u64 {
        self.column(n).iter().map(|&(_, c)| c).sum()
    }

    /// Reads `C(m,n)` off the coefficients of `ST(z,q)`.
    pub fn from_series(st: &LaurentSeries<CrankPoly>, max_n: u32) -> Result<Self, PartitionError> {
        let mut counts = BTreeMap::new();
        for n in 0..=max_n {
            let p = st.coeff(n as i64)?;
            for (m, c) in p.terms() {
                let c = c.to_u64().ok_or_else(|| PartitionError::NotACount {
                    m,
                    n: n as i64,
                    coeff: c.to_string(),
                })?;
                counts.insert((n, m), c);
            }
        }
        Ok(CrankTable { max_n, counts })
    }
}

pub fn crank_table_enum(max_n: u32, exec: Exec) -> CrankTable {
    let columns = par::map_range(exec, 0, max_n as i64 + 1, |n| {
        let mut col: BTreeMap<i64, u64> = BTreeMap::new();
        for p in enumerate_st_pairs(n as u32) {
            *col.entry(p.paircrank().expect("enumerated pairs are ST")).or_default() += 1;
        }
        col
    });
    let mut counts = BTreeMap::new();
    for (n, col) in columns.into_iter().enumerate() {
        for (m, c) in col {
            counts.insert((n as u32, m), c);
        }
    }
    CrankTable { max_n, counts }
}

/// `C(k, t, n)` for `k = 0..t`.
pub fn crank_mod_counts(table: &CrankTable, t: u32, n: u32) -> Result<Vec<u64>, PartitionError> {
    if t == 0 {
        return Err(PartitionError::BadModulus);
    }
    if n > table.max_n {
        return Err(PartitionError::OutOfRange { n, max: table.max_n });
    }
    let mut out = vec![0; t as usize];
    for (m, c) in table.column(n) {
        out[m.rem_euclid(t as i64) as usize] += c;
    }
    Ok(out)
}

fn sum_series<R: Ring>(ctx: &R::Ctx, order: i64, parts: Vec<LaurentSeries<R>>) -> Result<LaurentSeries<R>, AlgebraError> {
    let mut acc = LaurentSeries::zero(ctx, order);
    for p in parts {
        acc = acc.add(&p)?;
    }
    Ok(acc.truncate(order))
}

/// `ST(q) = sum_{n>=1} q^n / ((q^n;q)_inf (q^n;q)_n)`.
pub fn st_series(order: i64, exec: Exec) -> Result<LaurentSeries<BigInt>, PartitionError> {
    let one = BigInt::from(1);
    let terms = par::map_range(exec, 1, order.max(0) + 1, |n| {
        let mut s = LaurentSeries::monomial(one.clone(), n, order);
        qseries::div_pochhammer_inf(&mut s, &one, n, 1)?;
        qseries::div_pochhammer_finite(&mut s, &one, n, 1, n as u64)?;
        Ok::<_, QSeriesError>(s)
    });
    let terms = terms.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(sum_series(&(), order, terms)?)
}

/// `sum_{n>=1} q^n (q^{2n};q)_inf / ((z q^n;q)_inf (z^{-1} q^n;q)_inf)` with
/// `z` and its inverse given in the coefficient ring.
pub fn st_z_def_in<R: Ring>(z: &R, zinv: &R, order: i64, exec: Exec) -> Result<LaurentSeries<R>, PartitionError> {
    let ctx = z.ctx();
    let one = R::one_of(&ctx);
    let terms = par::map_range(exec, 1, order.max(0) + 1, |n| {
        let mut s = LaurentSeries::monomial(one.clone(), n, order);
        qseries::mul_pochhammer_inf(&mut s, &one, 2 * n, 1)?;
        qseries::div_pochhammer_inf(&mut s, z, n, 1)?;
        qseries::div_pochhammer_inf(&mut s, zinv, n, 1)?;
        Ok::<_, QSeriesError>(s)
    });
    let terms = terms.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(sum_series(&ctx, order, terms)?)
}

/// `(1/(q;q)_inf) sum_n q^{6n²+4n+1} (1 - q^{6n+2}) / ((1 - z q^{3n+1})(1 - z^{-1} q^{3n+1}))`.
pub fn st_z_lambert_in<R: Ring>(z: &R, zinv: &R, order: i64, exec: Exec) -> Result<LaurentSeries<R>, PartitionError> {
    let ctx = z.ctx();
    let one = R::one_of(&ctx);
    let mut ns = Vec::new();
    for dir in [1i64, -1] {
        let mut n = if dir == 1 { 0 } else { -1 };
        while 6 * n * n + 4 * n < order {
            ns.push(n);
            n += dir;
        }
    }
    let terms = par::map(exec, &ns, |&n| {
        let e = 6 * n * n + 4 * n + 1;
        let d = 3 * n + 1;
        // For d < 0 the two denominator factors flip to 1 - z^{±1} q^{-d}
        // at the cost of q^{-2d}.
        let e = if d < 0 { e - 2 * d } else { e };
        let mut s = LaurentSeries::from_terms(&ctx, [(e, one.clone()), (e + 6 * n + 2, one.negated())], order);
        if s.lo() <= order {
            s.div_binomial(z, d.abs())?;
            s.div_binomial(zinv, d.abs())?;
        }
        Ok::<_, AlgebraError>(s)
    });
    let terms = terms.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut s = sum_series(&ctx, order, terms)?;
    qseries::div_pochhammer_inf(&mut s, &one, 1, 1)?;
    Ok(s)
}

/// `sum_{n>=1} q^n/(z q^n;q)_inf + sum_{n,k>=1} q^n z^{-k} q^{kn} [n+k-1, k]_q
/// / ((q^n;q)_k (z q^{n+k};q)_inf)`; the power of `z` in the first sum is
/// one less than the number of parts of `π1`.
pub fn st_z_crankform_in<R: Ring>(
    z: &R,
    zinv: &R,
    order: i64,
    exec: Exec,
) -> Result<LaurentSeries<R>, PartitionError> {
    let ctx = z.ctx();
    let one = R::one_of(&ctx);
    let mut jobs: Vec<(i64, i64)> = Vec::new();
    for n in 1..=order {
        for k in 0.. {
            if n * (k + 1) > order {
                break;
            }
            jobs.push((n, k));
        }
    }
    let terms = par::map(exec, &jobs, |&(n, k)| {
        let mut zk = one.clone();
        for _ in 0..k {
            zk = zk.times(zinv);
        }
        let mut s = LaurentSeries::monomial(zk, n * (k + 1), order);
        if k > 0 {
            // Gaussian binomial [n+k-1, k] as prod_{i=1..k} (1-q^{n-1+i})/(1-q^i).
            qseries::mul_pochhammer_finite(&mut s, &one, n, 1, k as u64);
            qseries::div_pochhammer_finite(&mut s, &one, 1, 1, k as u64)?;
            qseries::div_pochhammer_finite(&mut s, &one, n, 1, k as u64)?;
        }
        qseries::div_pochhammer_inf(&mut s, z, n + k, 1)?;
        Ok::<_, QSeriesError>(s)
    });
    let terms = terms.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(sum_series(&ctx, order, terms)?)
}

pub fn st_series_z_def(order: i64, exec: Exec) -> Result<LaurentSeries<CrankPoly>, PartitionError> {
    st_z_def_in(&CrankPoly::z(), &CrankPoly::z_inv(), order, exec)
}

pub fn st_series_z_lambert(order: i64, exec: Exec) -> Result<LaurentSeries<CrankPoly>, PartitionError> {
    st_z_lambert_in(&CrankPoly::z(), &CrankPoly::z_inv(), order, exec)
}

pub fn st_series_z_crankform(order: i64, exec: Exec) -> Result<LaurentSeries<CrankPoly>, PartitionError> {
    st_z_crankform_in(&CrankPoly::z(), &CrankPoly::z_inv(), order, exec)
}

/// `ST(ζ_t, q)` straight from the defining sum over `Z[ζ_t]`.
pub fn st_series_at_root(field: &CyclotomicField, order: i64, exec: Exec) -> Result<LaurentSeries<CyclotomicInt>, PartitionError> {
    st_z_def_in(&field.zeta(), &field.zeta_pow(-1), order, exec)
}
