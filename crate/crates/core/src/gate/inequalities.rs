use num_traits::{Signed, Zero};

use crate::algebra::{q, MultiPoly, RatFunc, Rational};
use crate::chow::{chern_of_twisted_bundle, q6_context, segre_classes, ChowError, CycleClass};
use crate::q6::{canonical_intersections, InvariantRecord};

pub(crate) fn v(n: &str) -> MultiPoly {
    MultiPoly::var(n)
}

pub(crate) fn k(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

pub(crate) fn sum(parts: &[MultiPoly]) -> MultiPoly {
    parts.iter().fold(MultiPoly::zero(), |a, b| &a + b)
}

/// `g - 1`.
pub(crate) fn gm1() -> MultiPoly {
    &v("g") - &k(1)
}

/// A displayed inequality `displayed >= 0` against its re-derivation
/// `derived >= 0`; `factor > 0` is read off the leading coefficients and
/// `residual = displayed - factor * derived`.
#[derive(Clone, Debug, PartialEq)]
pub struct InequalityCheck {
    pub displayed: MultiPoly,
    pub derived: MultiPoly,
    pub factor: Rational,
    pub residual: MultiPoly,
}

impl InequalityCheck {
    pub fn compare(displayed: MultiPoly, derived: MultiPoly) -> Self {
        let factor = if derived.is_zero() {
            Rational::zero()
        } else {
            displayed.leading_coeff() / derived.leading_coeff()
        };
        let residual = &displayed - &derived.scale(&factor);
        InequalityCheck { displayed, derived, factor, residual }
    }

    /// Zero residual with a positive factor.
    pub fn holds(&self) -> bool {
        self.residual.is_zero() && self.factor.is_positive()
    }
}

/// Both Hodge-index inequalities.
#[derive(Clone, Debug, PartialEq)]
pub struct HodgeInequalities {
    /// `d * (rhs - s)` for the bound on `s`
    pub a: InequalityCheck,
    /// rhs minus lhs of the bound on `-24x(2g-2-3d)`
    pub b: InequalityCheck,
}

/// Displayed bound on `s`, times `d`:
/// `(2/3)(g-1)^2 + (5/3)(g-1)d - d^3/24 + (5/12)d^2 - s d`.
pub fn hodge_a_displayed() -> MultiPoly {
    let (d, g1) = (v("d"), gm1());
    sum(&[
        g1.pow(2).scale(&q(2, 3)),
        (&g1 * &d).scale(&q(5, 3)),
        d.pow(3).scale(&q(-1, 24)),
        d.pow(2).scale(&q(5, 12)),
        -(&v("s") * &d),
    ])
}

/// Right side of the quadratic bound in `s`:
/// `36s^2 + 3s(d^2 - 22d - 16(g-1)) + (1/16)(d^4 - 92d^3 + 4d^2(12g+193)
/// + 32d(1-g)(g+8) + 768(g-1)^2)`.
pub fn hodge_b_rhs() -> MultiPoly {
    let (d, g, s, g1) = (v("d"), v("g"), v("s"), gm1());
    let quartic = sum(&[
        d.pow(4),
        &d.pow(3) * &k(-92),
        &(&d.pow(2) * &k(4)) * &(&(&g * &k(12)) + &k(193)),
        &(&(&d * &k(32)) * &(&k(1) - &g)) * &(&g + &k(8)),
        &g1.pow(2) * &k(768),
    ]);
    sum(&[
        &s.pow(2) * &k(36),
        &(&s * &k(3)) * &sum(&[d.pow(2), &d * &k(-22), &g1 * &k(-16)]),
        quartic.scale(&q(1, 16)),
    ])
}

/// `2g - 2 - 3d`.
pub fn case_split_form() -> MultiPoly {
    &(&v("g") * &k(2)) - &(&k(2) + &(&v("d") * &k(3)))
}

pub fn hodge_b_displayed() -> MultiPoly {
    &hodge_b_rhs() + &(&(&v("x") * &k(24)) * &case_split_form())
}

pub fn hodge_inequalities(rec: &InvariantRecord) -> HodgeInequalities {
    let sym = InvariantRecord::symbolic();
    let (kh3, k2h2, k3h, _) = canonical_intersections(&sym);
    let der_a = &kh3.pow(2) - &(&k2h2 * &v("d"));
    let der_b = &k2h2.pow(2) - &(&kh3 * &k3h);
    HodgeInequalities {
        a: InequalityCheck::compare(rec.apply(&hodge_a_displayed()), rec.apply(&der_a)),
        b: InequalityCheck::compare(rec.apply(&hodge_b_displayed()), rec.apply(&der_b)),
    }
}

/// `2s - x - v >= 0` for X not of general type.
pub fn non_general_type_bound() -> MultiPoly {
    &(&(&v("s") * &k(2)) - &v("x")) - &v("v")
}

/// Segre-positivity checks for `N(-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SegreInequalities {
    /// `24s - (d^2 - 2d - 24(g-1))` against `s_2(N(-1)).H^2`
    pub prop_a: InequalityCheck,
    /// the displayed bound on `240x` against `s_4(N(-1))`
    pub prop_b: InequalityCheck,
    /// `6s + 6(g-1) + d/2 - d^2/4` against `s_2(N(-1)).H^2`
    pub ineq_22: InequalityCheck,
    /// the closed right side of the `s_4` display against `s_4(N(-1))`
    pub ineq_23: InequalityCheck,
    /// the intermediate `(434-13d)K.H^3 + ...` line against `s_4(N(-1))`
    pub ineq_23_intermediate: InequalityCheck,
}

pub fn prop_a_displayed() -> MultiPoly {
    let d = v("d");
    &(&v("s") * &k(24)) - &sum(&[d.pow(2), &d * &k(-2), &gm1() * &k(-24)])
}

pub(crate) fn cubic_e() -> MultiPoly {
    let (d, g) = (v("d"), v("g"));
    sum(&[
        d.pow(3),
        &d.pow(2) * &k(-6),
        &(&d * &k(16)) * &(&(&g * &k(12)) - &k(13)),
        &gm1() * &k(-960),
    ])
}

/// `120v + (280-9d)s/2 - E/48 - 240x`.
pub fn prop_b_displayed() -> MultiPoly {
    let d = v("d");
    sum(&[
        &v("v") * &k(120),
        (&v("s") * &(&k(280) - &(&d * &k(9)))).scale(&q(1, 2)),
        cubic_e().scale(&q(-1, 48)),
        &v("x") * &k(-240),
    ])
}

pub fn ineq_22_displayed() -> MultiPoly {
    let d = v("d");
    sum(&[&v("s") * &k(6), &gm1() * &k(6), d.scale(&q(1, 2)), d.pow(2).scale(&q(-1, 4))])
}

/// `-240x + 120v + (280-9d)s/2 - (d^3 - 6d^2 + 16d(12g-13))/48 - 20(g-1)`.
pub fn ineq_23_displayed() -> MultiPoly {
    let (d, g) = (v("d"), v("g"));
    let cubic = sum(&[d.pow(3), &d.pow(2) * &k(-6), &(&d * &k(16)) * &(&(&g * &k(12)) - &k(13))]);
    sum(&[
        &v("x") * &k(-240),
        &v("v") * &k(120),
        (&v("s") * &(&k(280) - &(&d * &k(9)))).scale(&q(1, 2)),
        cubic.scale(&q(-1, 48)),
        &gm1() * &k(-20),
    ])
}

fn ineq_23_intermediate() -> MultiPoly {
    let sym = InvariantRecord::symbolic();
    let (kh3, k2h2, k3h, k4) = canonical_intersections(&sym);
    let d = v("d");
    sum(&[
        &(&k(434) - &(&d * &k(13))) * &kh3,
        &(&k(136) - &d.scale(&q(3, 2))) * &k2h2,
        &k3h * &k(19),
        k4,
        &d * &k(521),
        &d.pow(2) * &k(-29),
        d.pow(3).scale(&q(1, 4)),
    ])
}

/// `s_4 = c1^4 - 3 c1^2 c2 + c2^2` for a rank-two bundle.
pub fn segre_four_standard(c1: &CycleClass, c2: &CycleClass) -> CycleClass {
    &(&c1.pow(4) - &(&c1.pow(2) * c2).scale(&RatFunc::int(3))) + &c2.pow(2)
}

/// The printed `s_4 = c1^4 + c2^2 - 3 c1^2` mixes grades 4 and 2.
pub fn segre_four_as_printed(c1: &CycleClass, c2: &CycleClass) -> Result<CycleClass, ChowError> {
    c1.pow(4).checked_add(&c2.pow(2))?.checked_sub(&c1.pow(2).scale(&RatFunc::int(3)))
}

fn integrate(c: &CycleClass) -> MultiPoly {
    c.integrate().expect("top grade").as_polynomial().expect("polynomial degree")
}

/// `(c_1, c_2)` of `N(-1)` from `c(N) = 1 + (6H+K) + (d/2)H^2`.
pub fn twisted_normal_classes() -> (CycleClass, CycleClass) {
    let ctx = q6_context();
    let h = CycleClass::generator(&ctx, "H").expect("H");
    let kk = CycleClass::generator(&ctx, "K").expect("K");
    let n1 = &h.scale(&RatFunc::int(6)) + &kk;
    let n2 = h.pow(2).scale(&RatFunc::from(v("d").scale(&q(1, 2))));
    let tw = chern_of_twisted_bundle(&[n1, n2], &-&h, 2);
    (tw[0].clone(), tw[1].clone())
}

/// Segre checks with a caller-supplied `s_4` formula, for fault injection.
pub fn segre_inequalities_with(
    rec: &InvariantRecord,
    s4: impl Fn(&CycleClass, &CycleClass) -> CycleClass,
) -> SegreInequalities {
    let (c1, c2) = twisted_normal_classes();
    let h = CycleClass::generator(c1.context(), "H").expect("H");
    let seg = segre_classes(&[c1.clone(), c2.clone()], 2);
    let s2h2 = rec.apply(&integrate(&(&seg[1] * &h.pow(2))));
    let s4v = rec.apply(&integrate(&s4(&c1, &c2)));
    SegreInequalities {
        prop_a: InequalityCheck::compare(rec.apply(&prop_a_displayed()), s2h2.clone()),
        prop_b: InequalityCheck::compare(rec.apply(&prop_b_displayed()), s4v.clone()),
        ineq_22: InequalityCheck::compare(rec.apply(&ineq_22_displayed()), s2h2),
        ineq_23: InequalityCheck::compare(rec.apply(&ineq_23_displayed()), s4v.clone()),
        ineq_23_intermediate: InequalityCheck::compare(rec.apply(&ineq_23_intermediate()), s4v),
    }
}

pub fn segre_inequalities(rec: &InvariantRecord) -> SegreInequalities {
    segre_inequalities_with(rec, segre_four_standard)
}
