//! Named, order-parameterized identity checks.
//!
//! Each check builds the two sides of an identity as truncated series and
//! reports whether their difference vanishes to the requested order. Every
//! check records which two construction routes its sides come from; the
//! routes are always distinct.

pub mod expr;
mod registry;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, CrankPoly, CyclotomicField, CyclotomicInt, LaurentSeries, Ring};
use crate::lambert::LambertError;
use crate::par::{self, Exec};
use crate::partitions::{self, PartitionError};
use crate::qseries::QSeriesError;

pub use expr::{Base, Factor, Term};
pub use registry::{reading_outcomes, Reading};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}")]
    Unknown(String),
    #[error("{name} has nothing to test below order {min} (got {order})")]
    OrderTooSmall { name: String, order: i64, min: i64 },
    #[error("{label}: difference known only to q^{got}, need q^{want}")]
    InsufficientOrder { label: String, got: i64, want: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    QSeries(#[from] QSeriesError),
    #[error(transparent)]
    Lambert(#[from] LambertError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
}

/// How one side of a check is built.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Products of brackets and eta factors.
    Product,
    /// Direct theta or Lambert sums through the slow oracles.
    SumOracle,
    /// Lambert-series closed forms (`Σ`, `U_ℓ`) from the fast expander.
    Lambert,
    /// The defining q-product sum for `ST`.
    Definition,
    /// The Bailey-pair side of a Bailey relation.
    BaileyForm,
    /// `ST(z,q)` in the form whose `z`-power is the pair crank.
    CrankForm,
    /// Brute-force enumeration of pairs.
    Enumeration,
    /// Coefficient extraction from a computed series.
    Dissection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub default_order: i64,
    /// Below this order the check has no coefficient to compare.
    pub min_order: i64,
    pub description: &'static str,
    pub routes: [Route; 2],
    /// Draws random specializations from the seed.
    pub seeded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub order: i64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_bad_exponent: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discrepancy: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// `None` runs each check at its default order.
    pub order: Option<i64>,
    pub seed: u64,
    pub exec: Exec,
    /// Adds `q^k` to the left side of the first series comparison.
    pub perturb: Option<i64>,
}

pub const DEFAULT_SEED: u64 = 1;

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: None,
            seed: DEFAULT_SEED,
            exec: Exec::auto(),
            perturb: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum AnySeries {
    Int(LaurentSeries<BigInt>),
    Crank(LaurentSeries<CrankPoly>),
    Cyclo(LaurentSeries<CyclotomicInt>),
}

impl From<LaurentSeries<BigInt>> for AnySeries {
    fn from(s: LaurentSeries<BigInt>) -> Self {
        AnySeries::Int(s)
    }
}

impl From<LaurentSeries<CrankPoly>> for AnySeries {
    fn from(s: LaurentSeries<CrankPoly>) -> Self {
        AnySeries::Crank(s)
    }
}

impl From<LaurentSeries<CyclotomicInt>> for AnySeries {
    fn from(s: LaurentSeries<CyclotomicInt>) -> Self {
        AnySeries::Cyclo(s)
    }
}

// Lowest nonzero coefficient of a - b at or below `want`, and the order the
// difference is known to.
fn first_difference<R: Ring>(a: &LaurentSeries<R>, b: &LaurentSeries<R>, want: i64) -> Result<(i64, Option<(i64, String)>), AlgebraError> {
    let d = a.sub(b)?;
    let bad = d.first_nonzero().filter(|(e, _)| *e <= want).map(|(e, c)| (e, c.to_string()));
    Ok((d.order(), bad))
}

impl AnySeries {
    fn bump(&mut self, k: i64) {
        match self {
            AnySeries::Int(s) => s.add_term(k, &BigInt::from(1)),
            AnySeries::Crank(s) => s.add_term(k, &CrankPoly::constant(1)),
            AnySeries::Cyclo(s) => {
                let one = CyclotomicInt::one_of(s.ctx());
                s.add_term(k, &one)
            }
        }
    }

    fn difference(&self, other: &AnySeries, want: i64) -> Result<(i64, Option<(i64, String)>), AlgebraError> {
        match (self, other) {
            (AnySeries::Int(a), AnySeries::Int(b)) => first_difference(a, b, want),
            (AnySeries::Crank(a), AnySeries::Crank(b)) => first_difference(a, b, want),
            (AnySeries::Cyclo(a), AnySeries::Cyclo(b)) => first_difference(a, b, want),
            (AnySeries::Cyclo(a), AnySeries::Int(b)) => first_difference(a, &b.lift_cyclotomic(*a.ctx()), want),
            (AnySeries::Int(a), AnySeries::Cyclo(b)) => first_difference(&a.lift_cyclotomic(*b.ctx()), b, want),
            _ => Err(AlgebraError::RingMismatch),
        }
    }
}

/// One equation inside a check, or a list of coefficient-level conditions.
#[derive(Clone, Debug)]
pub enum Comparison {
    Series {
        label: String,
        lhs: AnySeries,
        rhs: AnySeries,
        /// Exponent up to which the two sides must agree.
        want: i64,
    },
    Conditions {
        label: String,
        /// Exponent and a description of each failure.
        violations: Vec<(i64, String)>,
    },
}

impl Comparison {
    pub fn series(label: impl Into<String>, lhs: impl Into<AnySeries>, rhs: impl Into<AnySeries>, want: i64) -> Self {
        Comparison::Series {
            label: label.into(),
            lhs: lhs.into(),
            rhs: rhs.into(),
            want,
        }
    }

    /// First failure as `(exponent, text)`.
    fn outcome(&self) -> Result<Option<(i64, String)>, IdentityError> {
        match self {
            Comparison::Series { label, lhs, rhs, want } => {
                let (got, bad) = lhs.difference(rhs, *want)?;
                match bad {
                    Some((e, c)) => Ok(Some((e, format!("{c} ({label})")))),
                    None if got < *want => Err(IdentityError::InsufficientOrder {
                        label: label.clone(),
                        got,
                        want: *want,
                    }),
                    None => Ok(None),
                }
            }
            Comparison::Conditions { label, violations } => Ok(violations
                .iter()
                .min_by_key(|(e, _)| *e)
                .map(|(e, d)| (*e, format!("{d} ({label})")))),
        }
    }
}

/// What a check body sees.
#[derive(Clone, Copy, Debug)]
pub struct RunCtx {
    pub order: i64,
    pub seed: u64,
    pub exec: Exec,
}

pub fn list_checks() -> Vec<IdentityCheck> {
    registry::CHECKS.iter().map(|c| c.info.clone()).collect()
}

fn find(name: &str) -> Result<&'static registry::Check, IdentityError> {
    registry::CHECKS
        .iter()
        .find(|c| c.info.name == name)
        .ok_or_else(|| IdentityError::Unknown(name.to_string()))
}

pub fn verify(name: &str, order: i64) -> Result<IdentityReport, IdentityError> {
    verify_with(
        name,
        &VerifyOptions {
            order: Some(order),
            ..VerifyOptions::default()
        },
    )
}

pub fn verify_with(name: &str, opts: &VerifyOptions) -> Result<IdentityReport, IdentityError> {
    run_check(find(name)?, opts)
}

/// Every registered check, in registry order.
pub fn verify_all(opts: &VerifyOptions) -> Vec<(&'static str, Result<IdentityReport, IdentityError>)> {
    par::map(opts.exec, registry::CHECKS, |c| (c.info.name, run_check(c, opts)))
}

fn run_check(check: &registry::Check, opts: &VerifyOptions) -> Result<IdentityReport, IdentityError> {
    let info = &check.info;
    let order = opts.order.unwrap_or(info.default_order);
    if order < info.min_order {
        return Err(IdentityError::OrderTooSmall {
            name: info.name.to_string(),
            order,
            min: info.min_order,
        });
    }
    let cx = RunCtx {
        order,
        seed: opts.seed,
        exec: opts.exec,
    };
    let mut comparisons = (check.run)(&cx)?;
    if let Some(k) = opts.perturb {
        if let Some(Comparison::Series { lhs, .. }) = comparisons.iter_mut().find(|c| matches!(c, Comparison::Series { .. })) {
            lhs.bump(k);
        }
    }
    let mut worst: Option<(i64, String)> = None;
    for c in &comparisons {
        if let Some((e, text)) = c.outcome()? {
            if worst.as_ref().is_none_or(|(w, _)| e < *w) {
                worst = Some((e, text));
            }
        }
    }
    Ok(IdentityReport {
        name: info.name.to_string(),
        order,
        passed: worst.is_none(),
        first_bad_exponent: worst.as_ref().map(|w| w.0),
        discrepancy: worst.map(|w| w.1),
        seed: info.seeded.then_some(opts.seed),
    })
}

type StCell = Arc<OnceLock<Result<Arc<LaurentSeries<CyclotomicInt>>, PartitionError>>>;

/// `ST(ζ_t, q)` to `order`, shared between checks.
pub(crate) fn st_at_root(t: u32, order: i64, exec: Exec) -> Result<Arc<LaurentSeries<CyclotomicInt>>, IdentityError> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, i64), StCell>>> = OnceLock::new();
    let cell = {
        let mut map = CACHE.get_or_init(Default::default).lock().unwrap_or_else(|e| e.into_inner());
        map.entry((t, order)).or_default().clone()
    };
    let field = CyclotomicField::new(t)?;
    let got = cell.get_or_init(|| partitions::st_series_at_root(&field, order, exec).map(Arc::new));
    Ok(got.clone()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_shape() {
        let checks = list_checks();
        assert!(checks.len() >= 20);
        for name in ["thm2_dissection", "prop_bailey_pair", "misc_prop_6", "chan_lemma_s10", "thm3_component_B4"] {
            assert!(checks.iter().any(|c| c.name == name), "{name}");
        }
        let mut names: Vec<_> = checks.iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), checks.len());
        for c in &checks {
            assert_ne!(c.routes[0], c.routes[1], "{}", c.name);
            assert!(c.default_order >= c.min_order, "{}", c.name);
        }
    }

    #[test]
    fn bailey_pair_and_a2() {
        assert!(verify("prop_bailey_pair", 40).unwrap().passed);
        let r = verify("thm2_component_A2", 60).unwrap();
        assert!(r.passed);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"name":"thm2_component_A2","order":60,"passed":true}"#
        );
    }

    #[test]
    fn perturbation_is_caught() {
        let opts = VerifyOptions {
            order: Some(30),
            perturb: Some(3),
            ..VerifyOptions::default()
        };
        let r = verify_with("prop_3diss_1", &opts).unwrap();
        assert!(!r.passed);
        assert_eq!(r.first_bad_exponent, Some(3));
        assert!(r.discrepancy.is_some());
    }

    #[test]
    fn errors() {
        assert!(matches!(verify("no_such_check", 10), Err(IdentityError::Unknown(_))));
        assert!(matches!(verify("thm2_component_A1", 0), Err(IdentityError::OrderTooSmall { .. })));
    }

    #[test]
    fn seeded_checks_report_their_seed() {
        let opts = VerifyOptions {
            order: Some(30),
            seed: 5,
            ..VerifyOptions::default()
        };
        let r = verify_with("chan_lemma_s4", &opts).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.seed, Some(5));
        assert_eq!(verify("misc_prop_1", 20).unwrap().seed, None);
    }
}
