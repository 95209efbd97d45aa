//! Four-folds on a hypersurface `V` of degree `sigma` in Q6: Euler
//! characteristics, the ideal-sheaf polynomial `Q(t)`, the threshold `t_1`
//! and the `d^5` certificate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{binomial_poly, q, qi, MultiPoly, RatFunc, Rational, UniPoly};
use crate::q6::{hilbert_polynomial, pg_surface_bound, InvariantRecord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HypersurfaceError {
    #[error("certificate failure: {0}")]
    CertificateFailure(String),
}

fn var(n: &str) -> MultiPoly {
    MultiPoly::var(n)
}

fn k(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

/// Integer polynomial in `sigma`, coefficients lowest degree first.
fn in_sigma(coeffs: &[i64]) -> MultiPoly {
    UniPoly::from_ints("sigma", coeffs).to_multi()
}

fn sum(parts: &[MultiPoly]) -> MultiPoly {
    parts.iter().fold(MultiPoly::zero(), |a, b| &a + b)
}

fn ratio(num: MultiPoly, den: MultiPoly) -> RatFunc {
    RatFunc::new(num, den).expect("nonzero denominator")
}

fn sigma_value(sigma: i64) -> MultiPoly {
    assert!(sigma >= 1, "sigma must be positive");
    k(sigma)
}

/// `mu = d^2/2 + sigma(sigma-3) d - 2 sigma (g-1)`.
pub fn mu_symbolic() -> MultiPoly {
    let s = var("sigma");
    sum(&[
        var("d").pow(2).scale(&q(1, 2)),
        &(&s * &(&s - &k(3))) * &var("d"),
        &(&s * &k(-2)) * &(&var("g") - &k(1)),
    ])
}

/// The displayed `chi(O_V(t))` in `t` and `sigma`.
pub fn chi_ov_symbolic() -> MultiPoly {
    let s = var("sigma");
    let t = var("t");
    sum(&[
        &s.scale(&q(1, 60)) * &t.pow(5),
        &in_sigma(&[0, 6, -1]).scale(&q(1, 24)) * &t.pow(4),
        &in_sigma(&[0, 26, -9, 1]).scale(&q(1, 18)) * &t.pow(3),
        &in_sigma(&[0, -96, 52, -12, 1]).scale(&q(-1, 24)) * &t.pow(2),
        &in_sigma(&[0, 949, -720, 260, -45, 3]).scale(&q(1, 180)) * &t,
        in_sigma(&[0, -942, 949, -480, 130, -18, 1]).scale(&q(-1, 360)),
    ])
}

/// `chi(O_Q6(t)) - chi(O_Q6(t - sigma))` with
/// `chi(O_Q6(t)) = C(t+7, 7) - C(t+5, 7)`.
pub fn chi_ov_from_sequences() -> MultiPoly {
    let q6 = binomial_poly(7, 7).sub(&binomial_poly(5, 7));
    &q6.to_multi() - &q6.compose(&(&var("t") - &var("sigma")))
}

/// Displayed quintic at a numeric `sigma`.
pub fn chi_ov(sigma: i64) -> UniPoly {
    let p = chi_ov_symbolic().substitute("sigma", &sigma_value(sigma));
    UniPoly::from_multi(&p, "t").expect("polynomial in t")
}

/// The displayed `Q(t)` with `mu` expanded, as a rational function of
/// `t, d, g, s, x, sigma`.
pub fn ideal_chi_q_symbolic() -> RatFunc {
    let (s, d, t) = (var("sigma"), var("d"), var("t"));
    let (chs, chx) = (var("s"), var("x"));
    let mu = mu_symbolic();
    let t5 = RatFunc::from(s.scale(&q(1, 60)));
    let t4 = RatFunc::from((&(&(&k(6) - &s) * &s) - &d).scale(&q(1, 24)));
    let t3 = ratio(
        sum(&[
            &d.pow(2) * &k(3),
            &(&(&d * &s) * &(&s - &k(6))) * &k(6),
            &(&(&mu * &k(3)) - &(&(&s.pow(2) * &k(2)) * &in_sigma(&[26, -9, 1]))) * &k(-2),
        ]),
        &s * &k(72),
    );
    let t2 = ratio(
        -sum(&[
            &(&chs * &s) * &k(12),
            &d.pow(2) * &k(-2),
            &(&d * &s) * &(&k(19) - &(&s * &k(4))),
            &mu * &k(4),
            &s.pow(2) * &in_sigma(&[-96, 52, -12, 1]),
        ]),
        &s * &k(24),
    );
    let t1 = ratio(
        -(&sum(&[
            &(&chs * &s) * &k(180),
            &(&chx * &s) * &k(360),
            &d.pow(2) * &k(-15),
            &(&(&d * &s) * &(&k(4) - &s)) * &k(30),
            &mu * &k(30),
        ]) - &(&s.pow(2) * &in_sigma(&[949, -720, 260, -45, 3])).scale(&qi(2))),
        &s * &k(360),
    );
    let t0 = RatFunc::from(in_sigma(&[0, -942, 949, -480, 130, -18, 1]).scale(&q(-1, 360)));
    let tt = |e: u32| RatFunc::from(t.pow(e));
    let parts = [&t5 * &tt(5), &t4 * &tt(4), &t3 * &tt(3), &t2 * &tt(2), &t1 * &tt(1), t0];
    parts.iter().fold(RatFunc::zero(), |a, b| &a + b)
}

/// `chi(O_V(t)) - chi(O_X(t)) + chi(O_X)` from the sequences and the
/// Hilbert polynomial of X.
pub fn ideal_chi_q_derived() -> MultiPoly {
    let rec = InvariantRecord::symbolic();
    &(&chi_ov_from_sequences() - &hilbert_polynomial(&rec)) + &var("v")
}

/// Displayed `Q(t)` at numeric `sigma`, after applying `rec`.
pub fn ideal_chi_q(sigma: i64, rec: &InvariantRecord) -> MultiPoly {
    let q = ideal_chi_q_symbolic().substitute("sigma", &RatFunc::from(sigma_value(sigma)));
    rec.apply(&q.as_polynomial().expect("polynomial at numeric sigma"))
}

/// Displayed minus derived `Q(t)`, symbolic in everything.
pub fn ideal_chi_q_residual() -> RatFunc {
    &ideal_chi_q_symbolic() - &RatFunc::from(ideal_chi_q_derived())
}

/// Result of the `t_1` scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T1 {
    pub t1: BigInt,
    pub mu: Rational,
    /// `d/(2 sigma) <= t_1 <= d/(2 sigma) + sqrt(2d)/2 + sigma`, exactly
    pub bracket_ok: bool,
    /// `t_1 - 1` fails a defining condition
    pub minimal: bool,
}

/// Both conditions at `t`, with the quadratic one doubled:
/// `delta > 0` and `delta^2 - 2 mu - 2 delta sigma (sigma-3) > 0`.
fn t1_conditions(t: &BigInt, d: &BigInt, two_mu: &BigInt, sigma: &BigInt) -> bool {
    let delta: BigInt = BigInt::from(2) * sigma * t - d;
    let shift: BigInt = sigma - 3;
    let quad: BigInt = &delta * &delta - two_mu - BigInt::from(2) * &delta * sigma * shift;
    delta.is_positive() && quad.is_positive()
}

pub fn compute_t1(d: i64, g: i64, sigma: i64) -> T1 {
    assert!(d >= 1 && g >= 0 && sigma >= 1, "need d >= 1, g >= 0, sigma >= 1");
    let (db, sb) = (BigInt::from(d), BigInt::from(sigma));
    // 2 mu = d^2 + 2 sigma (sigma - 3) d - 4 sigma (g - 1)
    let two_mu = &db * &db + BigInt::from(2) * &sb * (&sb - 3) * &db - BigInt::from(4) * &sb * BigInt::from(g - 1);
    let two_sigma = BigInt::from(2 * sigma);
    let mut t = db.div_ceil(&two_sigma);
    while !t1_conditions(&t, &db, &two_mu, &sb) {
        t += 1;
    }
    // with w = 2 sigma (t_1 - sigma) - d the upper bracket is w <= sigma sqrt(2d)
    let lower = &two_sigma * &t >= db;
    let w = &two_sigma * (&t - &sb) - &db;
    let upper = !w.is_positive() || &w * &w <= BigInt::from(2) * &db * &sb * &sb;
    let prev = &t - 1;
    let minimal = prev < BigInt::zero() || !t1_conditions(&prev, &db, &two_mu, &sb);
    T1 { mu: Rational::new(two_mu.clone(), BigInt::from(2)), t1: t, bracket_ok: lower && upper, minimal }
}

/// Regularity threshold `4d - 7` for the ideal of the threefold section.
pub const REGULARITY_SLOPE: i64 = 4;
pub const REGULARITY_OFFSET: i64 = 7;

pub fn regularity_threshold(d: i64) -> i64 {
    REGULARITY_SLOPE * d - REGULARITY_OFFSET
}

/// Length `(4d - 7) - t_1` of the `h^2` summation.
pub fn summation_length(d: i64, g: i64, sigma: i64) -> BigInt {
    BigInt::from(regularity_threshold(d)) - compute_t1(d, g, sigma).t1
}

/// Polynomial in `d, u, mu` graded by doubled weight: `d` and `mu` weigh
/// 2, the slack `u` weighs 1.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedSeries {
    pub components: BTreeMap<u32, MultiPoly>,
}

impl WeightedSeries {
    pub fn from_poly(p: &MultiPoly) -> Self {
        let mut components: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        let vars = p.vars().to_vec();
        for (m, c) in p.terms() {
            let w: u32 = vars
                .iter()
                .zip(&m.0)
                .filter(|(_, e)| **e > 0)
                .map(|(n, e): (&String, &u32)| match n.as_str() {
                    "u" => *e,
                    "d" | "mu" => 2 * e,
                    other => panic!("unweighted symbol {other}"),
                })
                .sum();
            let exps: Vec<(&str, u32)> = vars.iter().map(|s| s.as_str()).zip(m.0.iter().copied()).collect();
            let term = exps.iter().fold(MultiPoly::constant(c.clone()), |acc, (n, e)| &acc * &var(n).pow(*e));
            let slot = components.entry(w).or_insert_with(MultiPoly::zero);
            *slot = &*slot + &term;
        }
        WeightedSeries { components }
    }

    /// Component of doubled weight `w`.
    pub fn component(&self, w: u32) -> MultiPoly {
        self.components.get(&w).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn top_weight(&self) -> Option<u32> {
        self.components.iter().rev().find(|(_, p)| !p.is_zero()).map(|(w, _)| *w)
    }
}

/// The `d^5` certificate with its inputs exposed.
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingCertificate {
    pub sigma: i64,
    pub coefficient: Rational,
    pub series: WeightedSeries,
    /// coefficients of `chi(O_S)` and `chi(O_X3)` in `Q(t)`
    pub s_coefficient: MultiPoly,
    pub x_coefficient: MultiPoly,
}

/// Lower bound for `Q(t_1)`: `g - 1` eliminated through `mu`,
/// `t = d/(2 sigma) + u`, `chi(O_S)` replaced by its upper bound and
/// `chi(O_X3)` by `-d^4/(192 sigma^3)`; the weight-5 part is `c d^5`.
pub fn leading_certificate_of(sigma: i64, q_poly: &MultiPoly) -> Result<LeadingCertificate, HypersurfaceError> {
    let s = qi(sigma);
    let (d, u, mu) = (var("d"), var("u"), var("mu"));
    let parts = q_poly.coeffs_in("s");
    let s_coefficient = parts.get(&1).cloned().unwrap_or_else(MultiPoly::zero);
    let x_coefficient = q_poly.coeffs_in("x").get(&1).cloned().unwrap_or_else(MultiPoly::zero);
    let t_pos = |p: &MultiPoly| -> bool {
        // negative for every t > 0: all coefficients in t non-positive, one negative
        p.used_vars().iter().all(|n| n == "t") && p.terms().all(|(_, c)| !c.is_positive()) && !p.is_zero()
    };
    if !t_pos(&s_coefficient) || !t_pos(&x_coefficient) {
        return Err(HypersurfaceError::CertificateFailure(
            "chi(O_S) and chi(O_X3) must enter Q(t) with negative coefficients".into(),
        ));
    }
    let gm1 = (&(&d.pow(2).scale(&q(1, 2)) + &d.scale(&(&s * (&s - qi(3))))) - &mu).scale(&(qi(1) / (qi(2) * &s)));
    let g = &gm1 + &k(1);
    let t = &d.scale(&(qi(1) / (qi(2) * &s))) + &u;
    let pg = UniPoly::new(
        "d",
        vec![
            qi(0),
            (qi(2) * &s * &s - qi(12) * &s + qi(23)) / qi(12),
            (&s - qi(4)) / (qi(8) * &s),
            qi(1) / (qi(24) * &s * &s),
        ],
    );
    debug_assert_eq!(pg.eval(&qi(12)), pg_surface_bound(&qi(12), sigma));
    let x_bound = d.pow(4).scale(&(-qi(1) / (qi(192) * &s * &s * &s)));
    let bounded = q_poly
        .substitute("g", &g)
        .substitute("s", &pg.to_multi())
        .substitute("x", &x_bound)
        .substitute("t", &t);
    if bounded.used_vars().iter().any(|n| !["d", "u", "mu"].contains(&n.as_str())) {
        return Err(HypersurfaceError::CertificateFailure("unexpected symbols after substitution".into()));
    }
    let series = WeightedSeries::from_poly(&bounded);
    if series.top_weight() != Some(10) {
        return Err(HypersurfaceError::CertificateFailure(format!("top weight {:?} is not 10", series.top_weight())));
    }
    let top = series.component(10);
    if top.used_vars() != vec!["d".to_string()] || top.num_terms() != 1 {
        return Err(HypersurfaceError::CertificateFailure(format!("weight-5 part {top} depends on the slack")));
    }
    let coefficient = top.coeff(&[("d", 5)]);
    if !coefficient.is_positive() {
        return Err(HypersurfaceError::CertificateFailure(format!("leading coefficient {coefficient} is not positive")));
    }
    Ok(LeadingCertificate { sigma, coefficient, series, s_coefficient, x_coefficient })
}

/// Certificate from the re-derived `Q(t)`.
pub fn leading_certificate(sigma: i64) -> Result<LeadingCertificate, HypersurfaceError> {
    let q = ideal_chi_q_derived().substitute("sigma", &sigma_value(sigma));
    leading_certificate_of(sigma, &q)
}

/// Largest `d` with `d^5/(1920 sigma^4) <= d^4/216`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossover {
    pub degree: BigInt,
    pub leading_terms_only: bool,
}

pub fn crossover_estimate(sigma: i64) -> Crossover {
    assert!(sigma >= 1, "sigma must be positive");
    let n = BigInt::from(1920) * BigInt::from(sigma).pow(4);
    Crossover { degree: n.div_floor(&BigInt::from(216)), leading_terms_only: true }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_ov_display_matches_sequences() {
        assert_eq!(chi_ov_symbolic(), chi_ov_from_sequences());
        assert_eq!(chi_ov(1).eval(&qi(0)), qi(1));
        assert_eq!(chi_ov(3).leading_coeff(), q(3, 60));
    }

    #[test]
    fn hyperplane_section_is_q5() {
        // sigma = 1: V = Q5, chi(O_Q5(1)) = 7
        assert_eq!(chi_ov(1).eval(&qi(1)), qi(7));
    }

    #[test]
    fn q_display_coefficients() {
        let qt = ideal_chi_q(2, &InvariantRecord::symbolic());
        let parts = qt.coeffs_in("t");
        assert_eq!(parts[&5], k(2).scale(&q(1, 60)));
        assert_eq!(parts[&4], (&k(8) - &var("d")).scale(&q(1, 24)));
    }

    #[test]
    fn q_display_residual() {
        // the displayed t^2 and t coefficients are off by (d + 1 - g)/6
        let r = ideal_chi_q_residual();
        let t = var("t");
        let expect = (&(&t.pow(2) + &t) * &(&(&var("d") + &k(1)) - &var("g"))).scale(&q(1, 6));
        assert_eq!(r, RatFunc::from(expect));
    }

    #[test]
    fn t1_examples() {
        let r = compute_t1(10, 6, 2);
        assert_eq!(r.t1, BigInt::from(4));
        assert!(r.bracket_ok && r.minimal);
        assert_eq!(r.mu, qi(10));
        let r = compute_t1(4, 0, 2);
        assert_eq!(r.t1, BigInt::from(2));
    }

    #[test]
    fn certificates() {
        assert_eq!(leading_certificate(1).unwrap().coefficient, q(1, 1920));
        assert_eq!(leading_certificate(2).unwrap().coefficient, q(1, 30720));
        let disp = ideal_chi_q(3, &InvariantRecord::symbolic());
        assert_eq!(leading_certificate_of(3, &disp).unwrap().coefficient, q(1, 1920 * 81));
    }

    #[test]
    fn certificate_rejects_positive_s() {
        let q = &ideal_chi_q_derived().substitute("sigma", &k(1)) + &(&var("s") * &var("t").pow(3));
        assert!(leading_certificate_of(1, &q).is_err());
    }

    #[test]
    fn crossover() {
        assert_eq!(crossover_estimate(1).degree, BigInt::from(8));
        assert_eq!(crossover_estimate(3).degree, BigInt::from(720));
        assert_eq!(crossover_estimate(94).degree, BigInt::from(80i64 * 94i64.pow(4)) / BigInt::from(9));
    }

    #[test]
    fn summation_positive_for_large_d() {
        assert!(summation_length(200, 10, 2).is_positive());
        assert_eq!(regularity_threshold(10), 33);
    }
}
