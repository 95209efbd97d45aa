use crate::algebra::{binomial_poly, qi, MultiPoly, RatFunc, Rational, UniPoly};

/// Closed form `d^3/(24 s^2) + d^2 (s-4)/(8 s) + d (2s^2 - 12s + 23)/12`
/// at `sigma = s`.
pub fn pg_surface_bound(d: &Rational, sigma: i64) -> Rational {
    assert!(sigma >= 1, "sigma must be positive");
    let s = qi(sigma);
    d.pow(3) / (qi(24) * &s * &s) + d * d * (&s - qi(4)) / (qi(8) * &s)
        + d * (qi(2) * &s * &s - qi(12) * &s + qi(23)) / qi(12)
}

/// Closed form as a rational function of `d` and `sigma`.
pub fn pg_surface_bound_symbolic() -> RatFunc {
    let d = RatFunc::var("d");
    let s = RatFunc::var("sigma");
    let k = |n: i64| RatFunc::int(n);
    let t1 = &d.pow(3) / &(&k(24) * &s.pow(2));
    let t2 = &(&d.pow(2) * &(&s - &k(4))) / &(&k(8) * &s);
    let t3 = &(&d * &(&(&(&k(2) * &s.pow(2)) - &(&k(12) * &s)) + &k(23))) / &k(12);
    &(&t1 + &t2) + &t3
}

/// `G(t) = C(t+5, 5) - C(t+3, 5)`, the Hilbert polynomial of `Q_4`.
fn g_poly() -> UniPoly {
    binomial_poly(5, 5).sub(&binomial_poly(3, 5))
}

fn shifted(p: &UniPoly, c: &Rational) -> UniPoly {
    let arg = &MultiPoly::var("t") - &MultiPoly::constant(c.clone());
    UniPoly::from_multi(&p.compose(&arg), "t").expect("univariate")
}

/// Construction behind the closed form.
#[derive(Clone, Debug)]
pub struct PgAudit {
    pub closed_form: Rational,
    /// `F~(t) = G(t) - G(t-s) - G(t-e) + G(t-s-e)`, `e = d/(2s)`
    pub f_tilde: UniPoly,
    pub f_tilde_at_zero: Rational,
    pub divisible: bool,
    /// `F~(0) - 1 == closed form`, decided only when `2s | d`
    pub closed_form_matches: Option<bool>,
    /// `F~(t) - F~(t-1) == dt - d^2/(4s) + (3-s)d/2` identically in `t`
    pub difference_below_zero_ok: bool,
    /// `F(0) - F(-1) == P(0) - 1`
    pub difference_at_zero_ok: bool,
    /// `F(0) - F(1) >= 0`; the step is zero for `t >= 2` by construction
    pub monotone_ok: bool,
}

pub fn pg_surface_audit(d: i64, sigma: i64) -> PgAudit {
    assert!(sigma >= 1 && d > 0, "need sigma >= 1 and d > 0");
    let dq = qi(d);
    let s = qi(sigma);
    let e = &dq / (qi(2) * &s);
    let g = g_poly();
    let f_tilde = g.sub(&shifted(&g, &s)).sub(&shifted(&g, &e)).add(&shifted(&g, &(&s + &e)));
    let f0 = f_tilde.eval(&qi(0));
    let closed_form = pg_surface_bound(&dq, sigma);
    let divisible = d % (2 * sigma) == 0;
    let p = UniPoly::new("t", vec![-(&dq * &dq) / (qi(4) * &s) + (qi(3) - &s) * &dq / qi(2), dq.clone()]);
    let step = f_tilde.sub(&shifted(&f_tilde, &qi(1)));
    let f_m1 = f_tilde.eval(&qi(-1));
    let f_zero = &f0 - qi(1);
    PgAudit {
        closed_form_matches: divisible.then(|| f_zero == closed_form),
        difference_below_zero_ok: step == p,
        difference_at_zero_ok: &f_zero - &f_m1 == p.eval(&qi(0)) - qi(1),
        monotone_ok: f_zero >= qi(0),
        closed_form,
        f_tilde,
        f_tilde_at_zero: f0,
        divisible,
    }
}

/// `F~(0) - 1` minus the closed form.
pub fn pg_gap(d: i64, sigma: i64) -> Rational {
    let a = pg_surface_audit(d, sigma);
    a.f_tilde_at_zero - qi(1) - a.closed_form
}
