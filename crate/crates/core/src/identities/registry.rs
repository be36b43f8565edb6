use std::ops::Neg;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::expr::{br, eta, eval_cyclo, eval_sum, one, sigma, u, Term};
use super::{st_at_root, Comparison, IdentityCheck, IdentityError, Route, RunCtx};
use crate::algebra::{CyclotomicField, CyclotomicInt, LaurentSeries, Ring};
use crate::lambert::{self, SigmaSpec};
use crate::par::{self, Exec};
use crate::partitions::{self, CrankTable};
use crate::qseries;

type Runner = fn(&RunCtx) -> Result<Vec<Comparison>, IdentityError>;

pub(crate) struct Check {
    pub info: IdentityCheck,
    pub run: Runner,
}

const fn check(
    name: &'static str,
    default_order: i64,
    min_order: i64,
    routes: [Route; 2],
    description: &'static str,
    run: Runner,
) -> Check {
    Check {
        info: IdentityCheck {
            name,
            default_order,
            min_order,
            description,
            routes,
            seeded: false,
        },
        run,
    }
}

const fn seeded(mut c: Check) -> Check {
    c.info.seeded = true;
    c
}

use Route::*;

pub(crate) static CHECKS: &[Check] = &[
    check("prop_bailey_pair", 40, 1, [Product, BaileyForm],
        "β_N = 1/(q;q)_{2N-1} against Σ_k α_k/((q;q)_{N-k}(q;q)_{N+k}), α_{3n}=0, α_{3n±1} = q^{6n²±n} - q^{6n²±7n+2}, for N = 1..order",
        bailey_pair),
    check("cor_lambert_rep", 40, 1, [Definition, Lambert],
        "ST(z,q) from its defining sum equals (1/(q;q)∞) Σ q^{6n²+4n+1}(1-q^{6n+2})/((1-zq^{3n+1})(1-z⁻¹q^{3n+1}))",
        lambert_rep),
    check("misc_prop_1", 60, 1, [Product, SumOracle], "<z>_q = <q/z>_q at z = q^a, base q^c", misc_1),
    check("misc_prop_2", 60, 1, [Product, SumOracle], "<z>_q = -z<qz>_q at z = q^a, base q^c", misc_2),
    check("misc_prop_3", 60, 1, [Product, SumOracle], "<z>_q = -z<z⁻¹>_q at z = q^a, base q^c", misc_3),
    check("misc_prop_4", 60, 1, [Lambert, SumOracle], "Σ(z,w,q) = -z⁻¹Σ(z⁻¹,w⁻¹q⁻³,q) at monomial z, w", misc_4),
    check("misc_prop_5", 60, 1, [Lambert, SumOracle], "Σ(z,w,q) = -z⁻¹w⁻¹qΣ(z⁻¹q,w⁻¹q,q) at monomial z, w", misc_5),
    check("misc_prop_6", 60, 1, [Lambert, SumOracle],
        "Σ(z,z⁴/q²) + zΣ(z,z⁴/q) = z⁻¹Σ(z,z⁴/q³) + z²Σ(z,z⁴) - z⁻¹j(q/z²;q) at monomial z",
        misc_6),
    seeded(check("chan_lemma_s4", 120, 1, [Product, Lambert],
        "four-term Σ decomposition of (q;q)²/(<b1,b1⁻¹,b3,b4>) at q->q⁹ with b=(q,q⁷,q⁵) and (q⁴,q⁸,q⁷), plus 5 seeded random monomial specializations",
        chan_s4)),
    check("chan_lemma_s4_sym", 120, 1, [Product, Lambert],
        "the b4 = b3⁻¹ case at q->q⁹ with (b1,b3) = (q⁷,q) and (q,q⁴)",
        chan_s4_sym),
    check("chan_lemma_s6", 150, 1, [Product, Lambert],
        "six-term decomposition at q->q^15 with a = (q⁻⁹,q⁻²¹), b = (q⁷,q^10,q^13) and a = (q⁻¹²,q⁻¹⁸), b = (q,q⁴,q^10)",
        chan_s6),
    check("chan_lemma_s10", 150, 1, [Product, Lambert],
        "ten-term decomposition at q->q^15, b = (q,q⁴,q⁷,q^10,q^13), at the four a-tuples used for the base-15 identities; each b_i term carries Σ(b_i, a1..a6 b_i⁴), the b2 term printed with b3⁴",
        chan_s10),
    check("prop_3diss_1", 120, 1, [Lambert, Product],
        "Σ(1,-11,9) + q^15Σ(7,16,9) = (q⁹;q⁹)²<q³>/<q,q⁴> - <q>/<q⁴> (qΣ(1,-8,9) + q⁵Σ(4,1,9)), brackets base q⁹",
        prop_3diss_1),
    check("prop_3diss_2", 120, 1, [Lambert, Product],
        "q⁶Σ(4,4,9) + q^13Σ(7,13,9) = q(q⁹;q⁹)²<q³>/<q⁴>² - <q²>/<q⁴> (qΣ(1,-8,9) + q⁵Σ(4,1,9))",
        prop_3diss_2),
    check("prop_3diss_3", 120, 1, [Lambert, Product],
        "q^11Σ(7,10,9) + q^18Σ(7,19,9) = (q⁹;q⁹)²<q³,q⁴>/<q,q²,q²> - <q⁴>/<q²> (Σ(1,-14,9) + qΣ(1,-5,9))",
        prop_3diss_3),
    check("prop_3diss_4", 120, 1, [Lambert, Product],
        "q³Σ(4,-2,9) + q⁷Σ(4,7,9) = -(q⁹;q⁹)²<q³>/<q,q⁴> + <q>/<q²> (Σ(1,-14,9) + qΣ(1,-5,9))",
        prop_3diss_4),
    check("prop_3diss_products", 120, 1, [Product, SumOracle],
        "the base-27 product identity and its reduced forms (the first with last term q(q;q)/<q⁶>, printed as q(q;q)/<q³,q⁶>), ending with q<q,q,q²> = <q²,q²,q⁴> - <q,q⁴,q⁴> at base q⁹; every left side is also compared with its theta-sum expansion",
        prop_3diss_products),
    check("eta_3dissection", 120, 1, [SumOracle, Product],
        "(q;q)∞ = (q^27;q^27)∞(<q^12> - q<q⁶> - q²<q³>), brackets base q^27, left side from the pentagonal sum",
        eta_3),
    check("eta_5dissection", 120, 1, [SumOracle, Product],
        "(q;q)∞<q⁵,q^10> = (q^25;q^25)∞(<q^10>² - q<q⁵,q^10> - q²<q⁵>²), brackets base q^25",
        eta_5),
    check("prop_5diss_1", 150, 1, [Lambert, Product],
        "Σ(7,-2) + q⁷Σ(7,13) + q^16Σ(13,22) + q^29Σ(13,37) = <q>_{q⁵}/<q²>_{q⁵}(q⁷Σ(10,10) + q^17Σ(10,25)) - q⁻⁶(q³;q³)³/((q⁵;q⁵)<q²>²_{q⁵}), Σ base 15",
        prop_5diss_1),
    check("prop_5diss_2", 150, 1, [Lambert, Product],
        "Σ(1,-26) + qΣ(1,-11) + q²Σ(4,-14) + q⁶Σ(4,1) = -<q²>_{q⁵}/<q>_{q⁵}(q^13Σ(10,10) + q^23Σ(10,25)) + (q³;q³)³/((q⁵;q⁵)<q>²_{q⁵}); the last bracket is printed with base q^15",
        prop_5diss_2),
    check("prop_5diss_3", 150, 1, [Lambert, Product],
        "Σ(1,-17) + q³Σ(4,-8) + q^10Σ(7,7) + q^27Σ(13,28) = <q>_{q⁵}/<q²>_{q⁵}(Σ(1,-20) + q⁴Σ(4,-5))",
        prop_5diss_3),
    check("prop_5diss_4", 150, 1, [Lambert, Product],
        "Σ(7,4) + q⁸Σ(10,16) + q^10Σ(10,19) + q^21Σ(13,31) = -<q²>_{q⁵}/<q>_{q⁵}(q⁻⁹Σ(1,-20) + q⁻⁵Σ(4,-5)) + q⁻⁹(q³;q³)³/(q;q)",
        prop_5diss_4),
    check("prop_5diss_5", 150, 1, [Lambert, Product],
        "Σ(1,-14) + q²Σ(4,-11) + q⁷Σ(7,1) + q^32Σ(13,34) = -<q²>_{q⁵}/<q>_{q⁵}(q^11Σ(7,10) + q^24Σ(13,25))",
        prop_5diss_5),
    check("prop_5diss_6", 150, 1, [Lambert, Product],
        "Σ(1,-23) + q⁵Σ(4,-2) + q^15Σ(10,13) + q^21Σ(10,22) = <q>_{q⁵}/<q²>_{q⁵}(q^12Σ(7,10) + q^25Σ(13,25)) + (q³;q³)³/(q;q)",
        prop_5diss_6),
    check("u3_sigma_split", 120, 1, [Lambert, SumOracle],
        "U₃(b) = Σ_{k<3} q^{6k²+bk}Σ(9k+3, 36k+3b-54, 27) for b = 4, 7, 10, 13",
        u3_split),
    check("u5_sigma_split", 150, 1, [Lambert, SumOracle],
        "U₅(b) = Σ_{k<5} q^{6k²+bk}Σ(15k+5, 60k+5b-150, 75) for b = 4, 7, ..., 19",
        u5_split),
    check("thm2_eq1", 120, 1, [Definition, Lambert],
        "(q;q)∞ST(ζ₃,q) = qU₃(4) - q²U₃(7) - q³U₃(10) + q⁴U₃(13) over Z[ζ₃]; the last term is printed as q⁴U(13) and read as U₃(13)",
        thm2_eq1),
    check("thm2_eq2", 120, 1, [Lambert, Product],
        "qU₃(4) - q²U₃(7) - q³U₃(10) + q⁴U₃(13) in closed 3-dissected form with base-27 Σ's",
        thm2_eq2),
    check("thm2_dissection", 120, 1, [Definition, Product],
        "ST(ζ₃,q) = A₀(q³) + qA₁(q³) + q²A₂(q³) over Z[ζ₃], and its coefficients are rational integers",
        thm2_dissection),
    check("thm2_component_A0", 120, 1, [Dissection, Product],
        "dissect(ST(ζ₃,q),3,0) = (q⁹;q⁹)<q³>/<q,q,q⁴> - (Σ(1,-14,9)+qΣ(1,-5,9))/((q⁹;q⁹)<q²>) - (qΣ(1,-8,9)+q⁵Σ(4,1,9))/((q⁹;q⁹)<q⁴>), brackets base q⁹",
        thm2_a0),
    check("thm2_component_A1", 120, 4, [Dissection, Product],
        "dissect(ST(ζ₃,q),3,1) = (q³;q³)∞/<q>_{q³}",
        thm2_a1),
    check("thm2_component_A2", 120, 5, [Dissection, Product],
        "dissect(ST(ζ₃,q),3,2) = 0",
        thm2_a2),
    check("thm3_eq1", 150, 1, [Definition, Lambert],
        "(q;q)∞ST(ζ₅,q) = qU₅(4) + (ζ+ζ⁴)q²U₅(7) - (1+ζ+ζ⁴)(q³U₅(10) + q⁴U₅(13)) + (ζ+ζ⁴)q⁵U₅(16) + q⁶U₅(19) over Z[ζ₅]",
        thm3_eq1),
    check("thm3_eq2", 400, 1, [Lambert, Product],
        "qU₅(4) - q³U₅(10) - q⁴U₅(13) + q⁶U₅(19) = (q;q)/(q^25;q^25) (q²Σ(5,-100,75) + q^22Σ(20,-25,75) - q^66Σ(50,50,75) - q^116Σ(50,125,75)) + q(q;q)(q^15;q^15)³/((q⁵;q⁵)(q^25;q^25))",
        thm3_eq2),
    check("thm3_eq3", 400, 1, [Lambert, Product],
        "q²U₅(7) - q³U₅(10) - q⁴U₅(13) + q⁵U₅(16) = (q;q)/(q^25;q^25) (q²Σ(5,-100,75) + q^22Σ(20,-25,75) - q^60Σ(35,50,75) - q^125Σ(65,125,75))",
        thm3_eq3),
    check("thm3_dissection", 150, 1, [Definition, Product],
        "ST(ζ₅,q) = Σ_r q^r B_r(q⁵) over Z[ζ₅]",
        thm3_dissection),
    check("thm3_component_B0", 150, 1, [Dissection, Product],
        "dissect(ST(ζ₅,q),5,0) = -(ζ+ζ⁴)/(q⁵;q⁵) (q^12Σ(7,10,15) + q^25Σ(13,25,15)); the first power is printed as q^15",
        thm3_b0),
    check("thm3_component_B1", 150, 6, [Dissection, Product],
        "dissect(ST(ζ₅,q),5,1) = -1/(q⁵;q⁵) (q^13Σ(10,10,15) + q^23Σ(10,25,15)) + (q³;q³)³/((q;q)(q⁵;q⁵))",
        thm3_b1),
    check("thm3_component_B2", 150, 7, [Dissection, Product],
        "dissect(ST(ζ₅,q),5,2) = (1+ζ+ζ⁴)/(q⁵;q⁵) (Σ(1,-20,15) + q⁴Σ(4,-5,15))",
        thm3_b2),
    check("thm3_component_B3", 150, 8, [Dissection, Product], "dissect(ST(ζ₅,q),5,3) = 0", thm3_b3),
    check("thm3_component_B4", 150, 9, [Dissection, Product], "dissect(ST(ζ₅,q),5,4) = 0", thm3_b4),
    check("thm1_congruences", 100, 2, [Definition, Lambert],
        "ST(q) from its definition equals the z = 1 Lambert form, and sT(3n+2) ≡ 0 mod 3, sT(5n+3) ≡ sT(5n+4) ≡ 0 mod 5",
        thm1),
    check("thm4_crank", 40, 2, [CrankForm, Enumeration],
        "the crank form of ST(z,q) equals the definition; C(k,t,n) is constant in k for t=3, n ≡ 2 and t=5, n ≡ 3,4; C(m,n) = C(-m,n); the table matches enumeration for n <= 22",
        thm4),
];

fn ints(terms: &[Term], order: i64, exec: Exec) -> Result<LaurentSeries<BigInt>, IdentityError> {
    eval_sum(terms, order, exec)
}

fn compare_terms(label: &str, lhs: &[Term], rhs: &[Term], cx: &RunCtx) -> Result<Comparison, IdentityError> {
    Ok(Comparison::series(label, ints(lhs, cx.order, cx.exec)?, ints(rhs, cx.order, cx.exec)?, cx.order))
}

// ---------------------------------------------------------------- Bailey

fn alpha(k: i64, order: i64) -> LaurentSeries<BigInt> {
    let (n, s) = match k.rem_euclid(3) {
        1 => ((k - 1) / 3, 1),
        2 => ((k + 1) / 3, -1),
        _ => return LaurentSeries::zero(&(), order),
    };
    let e1 = 6 * n * n + s * n;
    let e2 = 6 * n * n + s * 7 * n + 2;
    LaurentSeries::from_terms(&(), [(e1, BigInt::from(1)), (e2, BigInt::from(-1))], order)
}

fn bailey_pair(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let order = cx.order;
    let one = BigInt::from(1);
    par::map_range(cx.exec, 1, order + 1, |n| {
        let mut beta = LaurentSeries::one(&(), order);
        qseries::div_pochhammer_finite(&mut beta, &one, 1, 1, (2 * n - 1) as u64)?;
        let mut rhs = LaurentSeries::zero(&(), order);
        for k in 1..=n {
            let mut t = alpha(k, order);
            if t.is_zero() {
                continue;
            }
            qseries::div_pochhammer_finite(&mut t, &one, 1, 1, (n - k) as u64)?;
            qseries::div_pochhammer_finite(&mut t, &one, 1, 1, (n + k) as u64)?;
            rhs = rhs.add(&t)?;
        }
        Ok(Comparison::series(format!("β_{n}"), beta, rhs, order))
    })
    .into_iter()
    .collect()
}

fn lambert_rep(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let def = partitions::st_series_z_def(cx.order, cx.exec)?;
    let lam = partitions::st_series_z_lambert(cx.order, cx.exec)?;
    Ok(vec![Comparison::series("ST(z,q)", def, lam, cx.order)])
}

// ---------------------------------------------------------------- misc laws

const BRACKET_SPECS: [(i64, i64); 8] = [(1, 3), (2, 5), (-1, 3), (4, 9), (-7, 9), (11, 15), (-20, 27), (13, 25)];
const SIGMA_SPECS: [(i64, i64, i64); 8] = [
    (1, -14, 9),
    (4, 1, 9),
    (7, 16, 9),
    (-2, 5, 9),
    (13, 22, 15),
    (-4, -5, 15),
    (10, 25, 15),
    (3, -42, 27),
];

// sign * q^k j(q^a;q^c)/(q^c;q^c) with j summed directly.
fn bracket_by_sum(sign: i64, k: i64, a: i64, c: i64, order: i64) -> Result<LaurentSeries<BigInt>, IdentityError> {
    let mut s = qseries::jtheta_sum_oracle(a, c, order - k)?;
    qseries::div_eta(&mut s, c)?;
    Ok(s.shift(k).scale(&BigInt::from(sign)))
}

fn bracket_law(cx: &RunCtx, rhs: fn(i64, i64) -> (i64, i64, i64)) -> Result<Vec<Comparison>, IdentityError> {
    BRACKET_SPECS
        .iter()
        .map(|&(a, c)| {
            let lhs = qseries::jacobi_bracket(a, c, cx.order)?;
            let (sign, k, a2) = rhs(a, c);
            let r = bracket_by_sum(sign, k, a2, c, cx.order)?;
            Ok(Comparison::series(format!("a={a} c={c}"), lhs, r, cx.order))
        })
        .collect()
}

fn misc_1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    bracket_law(cx, |a, c| (1, 0, c - a))
}

fn misc_2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    bracket_law(cx, |a, c| (-1, a, a + c))
}

fn misc_3(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    bracket_law(cx, |a, _| (-1, a, -a))
}

// Terms beyond |n| = n_max start above `order`.
fn oracle_reach(a: i64, b: i64, c: i64, order: i64) -> i64 {
    let mut n = 1;
    while 2 * c * n * n - (2 * c + b.abs() + c) * n - a.abs() <= order + 1 {
        n += 1;
    }
    n
}

// sign * q^k Σ(a,b,c) summed term by term.
fn sigma_by_sum(sign: i64, k: i64, a: i64, b: i64, c: i64, order: i64) -> Result<LaurentSeries<BigInt>, IdentityError> {
    let inner = order - k;
    let s = lambert::sigma_oracle(&SigmaSpec::new(a, b, c, inner), oracle_reach(a, b, c, inner))?;
    Ok(s.shift(k).scale(&BigInt::from(sign)))
}

fn sigma_fast(a: i64, b: i64, c: i64, order: i64) -> Result<LaurentSeries<BigInt>, IdentityError> {
    Ok(lambert::sigma(&SigmaSpec::new(a, b, c, order))?)
}

fn misc_4(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    SIGMA_SPECS
        .iter()
        .map(|&(a, b, c)| {
            let r = sigma_by_sum(-1, -a, -a, -b - 3 * c, c, cx.order)?;
            Ok(Comparison::series(format!("Σ({a},{b},{c})"), sigma_fast(a, b, c, cx.order)?, r, cx.order))
        })
        .collect()
}

fn misc_5(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    SIGMA_SPECS
        .iter()
        .map(|&(a, b, c)| {
            let r = sigma_by_sum(-1, c - a - b, c - a, c - b, c, cx.order)?;
            Ok(Comparison::series(format!("Σ({a},{b},{c})"), sigma_fast(a, b, c, cx.order)?, r, cx.order))
        })
        .collect()
}

fn misc_6(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let o = cx.order;
    [(1, 9), (4, 9), (-2, 9), (7, 15), (13, 15), (3, 27)]
        .iter()
        .map(|&(a, c)| {
            let lhs = ints(&[sigma(a, 4 * a - 2 * c, c), sigma(a, 4 * a - c, c).q(a)], o, cx.exec)?;
            let theta = qseries::jtheta_sum_oracle(c - 2 * a, c, o + a)?.shift(-a);
            let rhs = sigma_by_sum(1, -a, a, 4 * a - 3 * c, c, o)?
                .add(&sigma_by_sum(1, 2 * a, a, 4 * a, c, o)?)?
                .sub(&theta)?;
            Ok(Comparison::series(format!("a={a} c={c}"), lhs, rhs, o))
        })
        .collect()
}

// ---------------------------------------------------------------- Chan lemmas

fn chan_s4_terms(c: i64, x1: i64, x3: i64, x4: i64) -> (Vec<Term>, Vec<Term>) {
    let b = |a| br(a, c);
    let lhs = vec![one().with([eta(c), eta(c)]).over([b(x1), b(-x1), b(x3), b(x4)])];
    let rhs = vec![
        sigma(x1, 4 * x1 - x3 - x4, c).over([b(-2 * x1), b(x3 - x1), b(x4 - x1)]),
        sigma(x1, 4 * x1 + x3 + x4 - 3 * c, c).q(x1).neg().over([b(2 * x1), b(x3 + x1), b(x4 + x1)]),
        sigma(x3, 3 * x3 - x4, c).over([b(x1 - x3), b(-x1 - x3), b(x4 - x3)]),
        sigma(x4, 3 * x4 - x3, c).over([b(x1 - x4), b(-x1 - x4), b(x3 - x4)]),
    ];
    (lhs, rhs)
}

fn chan_s4_sym_terms(c: i64, x1: i64, x3: i64) -> (Vec<Term>, Vec<Term>) {
    let b = |a| br(a, c);
    let lhs = vec![one().with([eta(c), eta(c)]).over([b(x1), b(-x1), b(x3), b(-x3)])];
    let rhs = vec![
        sigma(x1, 4 * x1, c).over([b(-2 * x1), b(x3 - x1), b(-x1 - x3)]),
        sigma(x1, 4 * x1 - 3 * c, c).q(x1).neg().over([b(2 * x1), b(x3 + x1), b(x1 - x3)]),
        sigma(x3, 4 * x3, c).over([b(x1 - x3), b(-x1 - x3), b(-2 * x3)]),
        sigma(x3, 4 * x3 - 3 * c, c).q(x3).neg().over([b(x1 + x3), b(x3 - x1), b(2 * x3)]),
    ];
    (lhs, rhs)
}

/// Four statements are checked in a form that differs from how they are
/// printed; `AsPrinted` rebuilds the printed form.
///
/// - ten-term lemma: the second positive term carries `Σ(b2, a1..a6 b2⁴)`,
///   printed with `b3⁴`;
/// - second base-15 identity: the squared bracket is `<q>_{q⁵}`, printed
///   with base `q^15`;
/// - first reduced form of the base-27 product identity: the last term is
///   `q/<q⁶>`, printed as `q/(<q³><q⁶>)`;
/// - `B₀`: the first Σ carries `q^12`, printed as `q^15`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    Corrected,
    AsPrinted,
}

fn chan_general_terms(c: i64, a: &[i64], x: &[i64], reading: Reading) -> (Vec<Term>, Vec<Term>) {
    let b = |e| br(e, c);
    let sa: i64 = a.iter().sum();
    let lhs = vec![one()
        .with(a.iter().map(|&e| b(e)))
        .with([eta(c), eta(c)])
        .over(x.iter().flat_map(|&e| [b(e), b(-e)]))];
    let mut rhs = Vec::new();
    for (i, &xi) in x.iter().enumerate() {
        let fourth = if reading == Reading::AsPrinted && i == 1 && x.len() > 2 { x[2] } else { xi };
        let others = || x.iter().enumerate().filter(move |(j, _)| *j != i).map(|(_, &xj)| xj);
        rhs.push(
            sigma(xi, sa + 4 * fourth, c)
                .with(a.iter().map(|&e| b(e - xi)))
                .over(others().flat_map(|xj| [b(xj - xi), b(-xi - xj)]))
                .over([b(-2 * xi)]),
        );
        rhs.push(
            sigma(xi, 4 * xi - sa - 3 * c, c)
                .q(xi)
                .neg()
                .with(a.iter().map(|&e| b(e + xi)))
                .over(others().flat_map(|xj| [b(xi + xj), b(xi - xj)]))
                .over([b(2 * xi)]),
        );
    }
    (lhs, rhs)
}

fn pair_cmp(label: String, (l, r): (Vec<Term>, Vec<Term>), cx: &RunCtx) -> Result<Comparison, IdentityError> {
    compare_terms(&label, &l, &r, cx)
}

// Exponents in (-c, 2c) with every bracket and Σ pole in the lemma nonzero.
fn random_s4(rng: &mut ChaCha8Rng) -> (i64, i64, i64, i64) {
    loop {
        let c = [9, 15][rng.gen_range(0..2)];
        let mut x = [0i64; 3];
        for v in &mut x {
            *v = rng.gen_range(-c + 1..2 * c);
        }
        let [x1, x3, x4] = x;
        let args = [x1, x3, x4, 2 * x1, x3 - x1, x3 + x1, x4 - x1, x4 + x1, x3 - x4, x3 + x4];
        if args.iter().all(|e| e.rem_euclid(c) != 0) {
            return (c, x1, x3, x4);
        }
    }
}

fn chan_s4(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let mut specs = vec![(9, 1, 7, 5), (9, 4, 8, 7)];
    let mut rng = ChaCha8Rng::seed_from_u64(cx.seed);
    specs.extend((0..5).map(|_| random_s4(&mut rng)));
    specs
        .into_iter()
        .map(|(c, x1, x3, x4)| pair_cmp(format!("c={c} b=({x1},{x3},{x4})"), chan_s4_terms(c, x1, x3, x4), cx))
        .collect()
}

fn chan_s4_sym(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    [(7, 1), (1, 4)]
        .into_iter()
        .map(|(x1, x3)| pair_cmp(format!("c=9 b=({x1},{x3})"), chan_s4_sym_terms(9, x1, x3), cx))
        .collect()
}

fn chan_s6(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    [([-9, -21], [7, 10, 13]), ([-12, -18], [1, 4, 10])]
        .into_iter()
        .map(|(a, x)| {
            let terms = chan_general_terms(15, &a, &x, Reading::Corrected);
            pair_cmp(format!("a={a:?} b={x:?}"), terms, cx)
        })
        .collect()
}

const S10_A: [[i64; 6]; 4] = [
    [-15, -13, -10, -8, 10, 12],
    [-12, -11, -7, -6, -2, 14],
    [-15, -14, -10, -9, 10, 11],
    [-13, -11, -8, -6, -3, 14],
];
const S10_B: [i64; 5] = [1, 4, 7, 10, 13];

fn s10_comparisons(reading: Reading, cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    S10_A
        .iter()
        .map(|a| pair_cmp(format!("a={a:?}"), chan_general_terms(15, a, &S10_B, reading), cx))
        .collect()
}

fn chan_s10(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    s10_comparisons(Reading::Corrected, cx)
}

// ---------------------------------------------------------------- base 9 / 27

fn b9(a: i64) -> super::Factor {
    br(a, 9)
}

fn b27(a: i64) -> super::Factor {
    br(a, 27)
}

fn prop_3diss_1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [sigma(1, -11, 9), sigma(7, 16, 9).q(15)];
    let rhs = [
        one().with([eta(9), eta(9), b9(3)]).over([b9(1), b9(4)]),
        sigma(1, -8, 9).q(1).neg().with([b9(1)]).over([b9(4)]),
        sigma(4, 1, 9).q(5).neg().with([b9(1)]).over([b9(4)]),
    ];
    Ok(vec![compare_terms("Eq1", &lhs, &rhs, cx)?])
}

fn prop_3diss_2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [sigma(4, 4, 9).q(6), sigma(7, 13, 9).q(13)];
    let rhs = [
        one().q(1).with([eta(9), eta(9), b9(3)]).over([b9(4), b9(4)]),
        sigma(1, -8, 9).q(1).neg().with([b9(2)]).over([b9(4)]),
        sigma(4, 1, 9).q(5).neg().with([b9(2)]).over([b9(4)]),
    ];
    Ok(vec![compare_terms("Eq2", &lhs, &rhs, cx)?])
}

fn prop_3diss_3(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [sigma(7, 10, 9).q(11), sigma(7, 19, 9).q(18)];
    let rhs = [
        one().with([eta(9), eta(9), b9(3), b9(4)]).over([b9(1), b9(2), b9(2)]),
        sigma(1, -14, 9).neg().with([b9(4)]).over([b9(2)]),
        sigma(1, -5, 9).q(1).neg().with([b9(4)]).over([b9(2)]),
    ];
    Ok(vec![compare_terms("Eq3", &lhs, &rhs, cx)?])
}

fn prop_3diss_4(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [sigma(4, -2, 9).q(3), sigma(4, 7, 9).q(7)];
    let rhs = [
        one().neg().with([eta(9), eta(9), b9(3)]).over([b9(1), b9(4)]),
        sigma(1, -14, 9).with([b9(1)]).over([b9(2)]),
        sigma(1, -5, 9).q(1).with([b9(1)]).over([b9(2)]),
    ];
    Ok(vec![compare_terms("Eq4", &lhs, &rhs, cx)?])
}

// q^k times a product of brackets <q^{a_i}>_{q^c}, each from its theta sum.
fn brackets_by_sum(k: i64, a: &[i64], c: i64, order: i64) -> Result<LaurentSeries<BigInt>, IdentityError> {
    let vals = a
        .iter()
        .map(|&e| qseries::bracket_norm(e, c).map(|n| n.shift))
        .collect::<Result<Vec<_>, _>>()?;
    let low: i64 = vals.iter().sum();
    let inner = order - k;
    let mut acc = LaurentSeries::one(&(), inner - low);
    for (&e, &v) in a.iter().zip(&vals) {
        acc = acc.mul(&bracket_by_sum(1, 0, e, c, inner - low + v)?)?;
    }
    Ok(acc.truncate(inner).shift(k))
}

fn reduced_form_1(reading: Reading, cx: &RunCtx) -> Result<Comparison, IdentityError> {
    let lhs = [
        one().with([eta(27), b27(12), b27(12)]).over([b27(6), b27(6)]),
        one().q(2).times(-2).with([eta(27)]),
        one().q(4).neg().with([eta(27), b27(3)]).over([b27(12)]),
    ];
    let last = match reading {
        Reading::Corrected => one().q(1).with([eta(1)]).over([b27(6)]),
        Reading::AsPrinted => one().q(1).with([eta(1)]).over([b27(3), b27(6)]),
    };
    let rhs = [one().with([eta(1)]).over([b27(3)]), last];
    compare_terms("reduced form 1", &lhs, &rhs, cx)
}

fn prop_3diss_products(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let o = cx.order;
    let x = cx.exec;
    let mut out = Vec::new();
    let main_l = [
        one().with([eta(27), eta(27), b27(9), b27(12)]).over([b27(3), b27(6), b27(6)]),
        one().q(2).times(-2).with([eta(27), eta(27), b27(9)]).over([b27(3), b27(12)]),
        one().q(4).neg().with([eta(27), eta(27), b27(9)]).over([b27(12), b27(12)]),
    ];
    let main_r = [
        one().with([eta(1), eta(27), b27(9)]).over([b27(3), b27(3), b27(12)]),
        one().q(1).with([eta(1), eta(9)]).over([b9(3)]),
    ];
    out.push(compare_terms("base-27 product identity", &main_l, &main_r, cx)?);
    out.push(reduced_form_1(Reading::Corrected, cx)?);
    let e2_l = [one().with([b27(12), b27(12)]).over([b27(6), b27(6)])];
    let e2_r = [one().with([b27(12)]).over([b27(3)]), one().q(3).neg().with([b27(3)]).over([b27(6)])];
    out.push(compare_terms("reduced form 2", &e2_l, &e2_r, cx)?);
    let e3_l = [one().q(4).neg().with([b27(3)]).over([b27(12)])];
    let e3_r = [one().q(1).neg().with([b27(6)]).over([b27(3)]), one().q(1).with([b27(12)]).over([b27(6)])];
    out.push(compare_terms("reduced form 3", &e3_l, &e3_r, cx)?);
    // q<q,q,q²> = <q²,q²,q⁴> - <q,q⁴,q⁴>, base q⁹, left side also by theta sums.
    let j_l = [one().q(1).with([b9(1), b9(1), b9(2)])];
    let j_r = [one().with([b9(2), b9(2), b9(4)]), one().neg().with([b9(1), b9(4), b9(4)])];
    out.push(compare_terms("Jacobi identity", &j_l, &j_r, cx)?);
    let by_sum = brackets_by_sum(1, &[1, 1, 2], 9, o)?;
    out.push(Comparison::series("Jacobi identity, left side by sums", by_sum, ints(&j_l, o, x)?, o));
    Ok(out)
}

fn pentagonal(order: i64) -> Result<LaurentSeries<BigInt>, IdentityError> {
    // sum (-1)^n q^{n(3n-1)/2} = sum (-1)^n q^{n + 3n(n-1)/2}
    Ok(qseries::jtheta_sum_oracle(1, 3, order)?)
}

fn eta_3(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let rhs = [
        one().with([eta(27), b27(12)]),
        one().q(1).neg().with([eta(27), b27(6)]),
        one().q(2).neg().with([eta(27), b27(3)]),
    ];
    Ok(vec![Comparison::series("(q;q)", pentagonal(cx.order)?, ints(&rhs, cx.order, cx.exec)?, cx.order)])
}

fn eta_5(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let b25 = |a| br(a, 25);
    let mut lhs = pentagonal(cx.order)?;
    qseries::mul_bracket(&mut lhs, 5, 25)?;
    qseries::mul_bracket(&mut lhs, 10, 25)?;
    let rhs = [
        one().with([eta(25), b25(10), b25(10)]),
        one().q(1).neg().with([eta(25), b25(5), b25(10)]),
        one().q(2).neg().with([eta(25), b25(5), b25(5)]),
    ];
    Ok(vec![Comparison::series("(q;q)<q⁵,q^10>", lhs, ints(&rhs, cx.order, cx.exec)?, cx.order)])
}

// ---------------------------------------------------------------- base 15

fn b5(a: i64) -> super::Factor {
    br(a, 5)
}

fn s15(a: i64, b: i64) -> Term {
    sigma(a, b, 15)
}

// ratio * (t1 + t2) with ratio = num/den of base-5 brackets.
fn ratio(sign: i64, num: i64, den: i64, ts: [Term; 2]) -> [Term; 2] {
    ts.map(|t| t.times(sign).with([b5(num)]).over([b5(den)]))
}

fn eta3_cubed() -> Term {
    one().with([eta(3), eta(3), eta(3)])
}

fn prop_5diss_2_cmp(reading: Reading, cx: &RunCtx) -> Result<Comparison, IdentityError> {
    let lhs = [s15(1, -26), s15(1, -11).q(1), s15(4, -14).q(2), s15(4, 1).q(6)];
    let c = if reading == Reading::Corrected { 5 } else { 15 };
    let mut rhs = ratio(-1, 2, 1, [s15(10, 10).q(13), s15(10, 25).q(23)]).to_vec();
    rhs.push(eta3_cubed().over([eta(5), br(1, c), br(1, c)]));
    compare_terms("Eq2", &lhs, &rhs, cx)
}

fn prop_5diss_1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [s15(7, -2), s15(7, 13).q(7), s15(13, 22).q(16), s15(13, 37).q(29)];
    let mut rhs = ratio(1, 1, 2, [s15(10, 10).q(7), s15(10, 25).q(17)]).to_vec();
    rhs.push(eta3_cubed().q(-6).neg().over([eta(5), b5(2), b5(2)]));
    Ok(vec![compare_terms("Eq1", &lhs, &rhs, cx)?])
}

fn prop_5diss_2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    Ok(vec![prop_5diss_2_cmp(Reading::Corrected, cx)?])
}

fn prop_5diss_3(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [s15(1, -17), s15(4, -8).q(3), s15(7, 7).q(10), s15(13, 28).q(27)];
    let rhs = ratio(1, 1, 2, [s15(1, -20), s15(4, -5).q(4)]);
    Ok(vec![compare_terms("Eq3", &lhs, &rhs, cx)?])
}

fn prop_5diss_4(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [s15(7, 4), s15(10, 16).q(8), s15(10, 19).q(10), s15(13, 31).q(21)];
    let mut rhs = ratio(-1, 2, 1, [s15(1, -20).q(-9), s15(4, -5).q(-5)]).to_vec();
    rhs.push(eta3_cubed().q(-9).over([eta(1)]));
    Ok(vec![compare_terms("Eq4", &lhs, &rhs, cx)?])
}

fn prop_5diss_5(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [s15(1, -14), s15(4, -11).q(2), s15(7, 1).q(7), s15(13, 34).q(32)];
    let rhs = ratio(-1, 2, 1, [s15(7, 10).q(11), s15(13, 25).q(24)]);
    Ok(vec![compare_terms("Eq5", &lhs, &rhs, cx)?])
}

fn prop_5diss_6(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [s15(1, -23), s15(4, -2).q(5), s15(10, 13).q(15), s15(10, 22).q(21)];
    let mut rhs = ratio(1, 1, 2, [s15(7, 10).q(12), s15(13, 25).q(25)]).to_vec();
    rhs.push(eta3_cubed().over([eta(1)]));
    Ok(vec![compare_terms("Eq6", &lhs, &rhs, cx)?])
}

// ---------------------------------------------------------------- U splits

fn u_split(cx: &RunCtx, ell: i64, bs: &[i64]) -> Result<Vec<Comparison>, IdentityError> {
    let c = if ell == 3 { 27 } else { 75 };
    bs.iter()
        .map(|&b| {
            let mut rhs = LaurentSeries::zero(&(), cx.order);
            for k in 0..ell {
                let (sa, sb) = if ell == 3 {
                    (9 * k + 3, 36 * k + 3 * b - 54)
                } else {
                    (15 * k + 5, 60 * k + 5 * b - 150)
                };
                rhs = rhs.add(&sigma_by_sum(1, 6 * k * k + b * k, sa, sb, c, cx.order)?)?;
            }
            Ok(Comparison::series(format!("U{ell}({b})"), ints(&[u(ell, b)], cx.order, cx.exec)?, rhs, cx.order))
        })
        .collect()
}

fn u3_split(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    u_split(cx, 3, &[4, 7, 10, 13])
}

fn u5_split(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    u_split(cx, 5, &[4, 7, 10, 13, 16, 19])
}

// ---------------------------------------------------------------- Theorem 2

fn u3_combination() -> Vec<Term> {
    vec![u(3, 4).q(1), u(3, 7).q(2).neg(), u(3, 10).q(3).neg(), u(3, 13).q(4)]
}

fn thm2_eq1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let mut lhs = (*st_at_root(3, cx.order, cx.exec)?).clone();
    qseries::mul_eta(&mut lhs, 1)?;
    let rhs = ints(&u3_combination(), cx.order, cx.exec)?;
    Ok(vec![Comparison::series("(q;q)ST(ζ₃,q)", lhs, rhs, cx.order)])
}

fn thm2_eq2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let e = || one().with([eta(1)]);
    let rhs = [
        sigma(3, -42, 27).neg().with([eta(1)]).over([eta(27), b27(6)]),
        sigma(3, -15, 27).q(3).neg().with([eta(1)]).over([eta(27), b27(6)]),
        sigma(3, -24, 27).q(3).neg().with([eta(1)]).over([eta(27), b27(12)]),
        sigma(12, 3, 27).q(15).neg().with([eta(1)]).over([eta(27), b27(12)]),
        e().with([eta(27), b27(9)]).over([b27(3), b27(3), b27(12)]),
        e().q(1).with([eta(9)]).over([b9(3)]),
    ];
    Ok(vec![compare_terms("U₃ combination", &u3_combination(), &rhs, cx)?])
}

fn a_terms(r: i64) -> Vec<Term> {
    match r {
        0 => vec![
            one().with([eta(9), b9(3)]).over([b9(1), b9(1), b9(4)]),
            sigma(1, -14, 9).neg().over([eta(9), b9(2)]),
            sigma(1, -5, 9).q(1).neg().over([eta(9), b9(2)]),
            sigma(1, -8, 9).q(1).neg().over([eta(9), b9(4)]),
            sigma(4, 1, 9).q(5).neg().over([eta(9), b9(4)]),
        ],
        1 => vec![one().with([eta(3)]).over([br(1, 3)])],
        _ => Vec::new(),
    }
}

// Order of dissect(s, t, r) for s known to `order`.
fn component_order(order: i64, t: i64, r: i64) -> i64 {
    (order - r).div_euclid(t)
}

fn integrality(s: &LaurentSeries<CyclotomicInt>) -> Comparison {
    let violations = s
        .iter()
        .filter(|(_, c)| c.as_integer().is_none())
        .map(|(e, c)| (e, format!("{c} is not an integer")))
        .collect();
    Comparison::Conditions {
        label: "integrality".into(),
        violations,
    }
}

fn component(cx: &RunCtx, t: u32, r: i64, rhs: LaurentSeries<CyclotomicInt>) -> Result<Vec<Comparison>, IdentityError> {
    let st = st_at_root(t, cx.order, cx.exec)?;
    let d = st.dissect(t as i64, r)?;
    let want = component_order(cx.order, t as i64, r);
    let mut out = vec![Comparison::series(format!("component {r}"), d.clone(), rhs, want)];
    if t == 3 {
        out.push(integrality(&d));
    }
    Ok(out)
}

fn a_series(field: &CyclotomicField, r: i64, order: i64, exec: Exec) -> Result<LaurentSeries<CyclotomicInt>, IdentityError> {
    Ok(ints(&a_terms(r), order, exec)?.lift_cyclotomic(*field))
}

fn thm2_component(cx: &RunCtx, r: i64) -> Result<Vec<Comparison>, IdentityError> {
    let field = CyclotomicField::new(3)?;
    component(cx, 3, r, a_series(&field, r, component_order(cx.order, 3, r), cx.exec)?)
}

fn thm2_a0(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm2_component(cx, 0)
}

fn thm2_a1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm2_component(cx, 1)
}

fn thm2_a2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm2_component(cx, 2)
}

// sum_r q^r C_r(q^t), each C_r known far enough for the total to reach `order`.
fn reassemble(
    field: &CyclotomicField,
    t: i64,
    order: i64,
    part: impl Fn(i64, i64) -> Result<LaurentSeries<CyclotomicInt>, IdentityError>,
) -> Result<LaurentSeries<CyclotomicInt>, IdentityError> {
    let mut acc = LaurentSeries::zero(field, order);
    for r in 0..t {
        let c = part(r, component_order(order, t, r))?;
        acc = acc.add(&c.substitute_power(t).shift(r).truncate(order))?;
    }
    Ok(acc)
}

fn thm2_dissection(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let field = CyclotomicField::new(3)?;
    let st = (*st_at_root(3, cx.order, cx.exec)?).clone();
    let rhs = reassemble(&field, 3, cx.order, |r, o| a_series(&field, r, o, cx.exec))?;
    let ints = integrality(&st);
    Ok(vec![Comparison::series("ST(ζ₃,q)", st, rhs, cx.order), ints])
}

// ---------------------------------------------------------------- Theorem 3

fn zeta5() -> Result<(CyclotomicField, CyclotomicInt, CyclotomicInt), IdentityError> {
    let f = CyclotomicField::new(5)?;
    let a = f.from_powers([0, 1, 0, 0, 1]);
    let b = f.from_powers([1, 1, 0, 0, 1]);
    Ok((f, a, b))
}

fn thm3_eq1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let (f, a, b) = zeta5()?;
    let mut lhs = (*st_at_root(5, cx.order, cx.exec)?).clone();
    qseries::mul_eta(&mut lhs, 1)?;
    let one_ = f.from_int(1);
    let terms = [
        (one_.clone(), u(5, 4).q(1)),
        (a.clone(), u(5, 7).q(2)),
        (b.negated(), u(5, 10).q(3)),
        (b.negated(), u(5, 13).q(4)),
        (a, u(5, 16).q(5)),
        (one_, u(5, 19).q(6)),
    ];
    let rhs = eval_cyclo(&f, &terms, cx.order, cx.exec)?;
    Ok(vec![Comparison::series("(q;q)ST(ζ₅,q)", lhs, rhs, cx.order)])
}

fn thm3_eq2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [u(5, 4).q(1), u(5, 10).q(3).neg(), u(5, 13).q(4).neg(), u(5, 19).q(6)];
    let p = |t: Term| t.with([eta(1)]).over([eta(25)]);
    let rhs = [
        p(sigma(5, -100, 75).q(2)),
        p(sigma(20, -25, 75).q(22)),
        p(sigma(50, 50, 75).q(66).neg()),
        p(sigma(50, 125, 75).q(116).neg()),
        one().q(1).with([eta(1), eta(15), eta(15), eta(15)]).over([eta(5), eta(25)]),
    ];
    Ok(vec![compare_terms("U₅ combination 1", &lhs, &rhs, cx)?])
}

fn thm3_eq3(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let lhs = [u(5, 7).q(2), u(5, 10).q(3).neg(), u(5, 13).q(4).neg(), u(5, 16).q(5)];
    let p = |t: Term| t.with([eta(1)]).over([eta(25)]);
    let rhs = [
        p(sigma(5, -100, 75).q(2)),
        p(sigma(20, -25, 75).q(22)),
        p(sigma(35, 50, 75).q(60).neg()),
        p(sigma(65, 125, 75).q(125).neg()),
    ];
    Ok(vec![compare_terms("U₅ combination 2", &lhs, &rhs, cx)?])
}

fn b_series(r: i64, reading: Reading, order: i64, exec: Exec) -> Result<LaurentSeries<CyclotomicInt>, IdentityError> {
    let (f, a, b) = zeta5()?;
    let one_ = f.from_int(1);
    let terms = match r {
        0 => vec![
            (a.negated(), s15(7, 10).q(if reading == Reading::Corrected { 12 } else { 15 }).over([eta(5)])),
            (a.negated(), s15(13, 25).q(25).over([eta(5)])),
        ],
        1 => vec![
            (one_.negated(), s15(10, 10).q(13).over([eta(5)])),
            (one_.negated(), s15(10, 25).q(23).over([eta(5)])),
            (one_, eta3_cubed().over([eta(1), eta(5)])),
        ],
        2 => vec![(b.clone(), s15(1, -20).over([eta(5)])), (b, s15(4, -5).q(4).over([eta(5)]))],
        _ => Vec::new(),
    };
    eval_cyclo(&f, &terms, order, exec)
}

fn thm3_component(cx: &RunCtx, r: i64) -> Result<Vec<Comparison>, IdentityError> {
    component(cx, 5, r, b_series(r, Reading::Corrected, component_order(cx.order, 5, r), cx.exec)?)
}

fn thm3_b0(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm3_component(cx, 0)
}

fn thm3_b1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm3_component(cx, 1)
}

fn thm3_b2(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm3_component(cx, 2)
}

fn thm3_b3(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm3_component(cx, 3)
}

fn thm3_b4(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    thm3_component(cx, 4)
}

fn thm3_dissection(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let (f, _, _) = zeta5()?;
    let st = (*st_at_root(5, cx.order, cx.exec)?).clone();
    let rhs = reassemble(&f, 5, cx.order, |r, o| b_series(r, Reading::Corrected, o, cx.exec))?;
    Ok(vec![Comparison::series("ST(ζ₅,q)", st, rhs, cx.order)])
}

// ---------------------------------------------------------------- Theorems 1, 4

fn thm1(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let st = partitions::st_series(cx.order, cx.exec)?;
    let one_ = BigInt::from(1);
    let lam = partitions::st_z_lambert_in(&one_, &one_, cx.order, cx.exec)?;
    let mut violations = Vec::new();
    for (n, c) in st.iter() {
        let bad = match (n % 3, n % 5) {
            (2, _) if (c % 3u32) != BigInt::from(0) => Some(3),
            (_, 3 | 4) if (c % 5u32) != BigInt::from(0) => Some(5),
            _ => None,
        };
        if let Some(m) = bad {
            violations.push((n, format!("sT({n}) = {c} is not divisible by {m}")));
        }
    }
    Ok(vec![
        Comparison::series("ST(q)", st, lam, cx.order),
        Comparison::Conditions {
            label: "congruences".into(),
            violations,
        },
    ])
}

const ENUMERATION_CEILING: i64 = 22;

fn thm4(cx: &RunCtx) -> Result<Vec<Comparison>, IdentityError> {
    let crank = partitions::st_series_z_crankform(cx.order, cx.exec)?;
    let def = partitions::st_series_z_def(cx.order, cx.exec)?;
    let max_n = cx.order as u32;
    let table = CrankTable::from_series(&crank, max_n)?;
    let mut violations = Vec::new();
    for n in 1..=max_n {
        let classes: &[u32] = match (n % 3, n % 5) {
            (2, 3 | 4) => &[3, 5],
            (2, _) => &[3],
            (_, 3 | 4) => &[5],
            _ => &[],
        };
        for &t in classes {
            let counts = partitions::crank_mod_counts(&table, t, n)?;
            if counts.iter().any(|&k| k != counts[0]) {
                violations.push((n as i64, format!("crank classes mod {t} at n={n}: {counts:?}")));
            }
        }
        for (m, c) in table.column(n) {
            if table.get(-m, n) != c {
                violations.push((n as i64, format!("C({m},{n}) != C({},{n})", -m)));
            }
        }
    }
    let enum_max = cx.order.min(ENUMERATION_CEILING) as u32;
    let brute = partitions::crank_table_enum(enum_max, cx.exec);
    for n in 1..=enum_max {
        if brute.column(n) != table.column(n) {
            violations.push((n as i64, format!("crank table at n={n} differs from enumeration")));
        }
    }
    Ok(vec![
        Comparison::series("ST(z,q)", crank, def, cx.order),
        Comparison::Conditions {
            label: "crank".into(),
            violations,
        },
    ])
}

/// Whether each comparison behind a reprinted statement holds to `order`
/// under `reading`. `check` is one of `chan_lemma_s10`, `prop_5diss_2`,
/// `prop_3diss_products` or `thm3_component_B0`.
pub fn reading_outcomes(check: &str, reading: Reading, order: i64, exec: Exec) -> Result<Vec<bool>, IdentityError> {
    let cx = RunCtx { order, seed: 0, exec };
    let cmps = match check {
        "chan_lemma_s10" => s10_comparisons(reading, &cx)?,
        "prop_5diss_2" => vec![prop_5diss_2_cmp(reading, &cx)?],
        "prop_3diss_products" => vec![reduced_form_1(reading, &cx)?],
        "thm3_component_B0" => component(&cx, 5, 0, b_series(0, reading, component_order(order, 5, 0), exec)?)?,
        other => return Err(IdentityError::Unknown(other.to_string())),
    };
    cmps.iter().map(|c| Ok(c.outcome()?.is_none())).collect()
}
