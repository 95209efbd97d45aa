use std::sync::Arc;

use super::InvariantRecord;
use crate::algebra::{q, MultiPoly, RatFunc};
use crate::chow::{q6_context, q6_primitive_context, ChowContext, CycleClass, TotalClass};

fn v(n: &str) -> MultiPoly {
    MultiPoly::var(n)
}

fn c(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

fn cq(n: i64, d: i64) -> MultiPoly {
    MultiPoly::ratio(n, d)
}

/// Closed forms for `K.H^3, K^2.H^2, K^3.H, K^4` in the symbols d, g, s, x, v.
fn displayed_symbolic() -> [MultiPoly; 4] {
    let (d, g, s, x, vv) = (v("d"), v("g"), v("s"), v("x"), v("v"));
    let gm1 = &g - &c(1);
    let kh3 = &(&(&g * &c(2)) - &c(2)) - &(&d * &c(3));
    let k2h2 = &(&(&(&s * &c(6)) - &(&g * &c(12))) + &c(12)) + &(&(&d * &cq(13, 2)) + &(&d.pow(2) * &cq(1, 4)));
    let k3h = [
        &x * &c(-24),
        &s * &c(-48),
        &g * &c(48),
        c(-48),
        &d * &c(3),
        &d.pow(2) * &c(-3),
        &d * &gm1,
    ]
    .iter()
    .fold(MultiPoly::zero(), |a, b| &a + b);
    let inner = [
        &d.pow(3) * &c(5),
        &d.pow(2) * &c(1098),
        &(&d * &c(-16)) * &(&(&g * &c(45)) + &c(434)),
        &gm1 * &c(-6144),
    ]
    .iter()
    .fold(MultiPoly::zero(), |a, b| &a + b);
    let k4 = [
        &vv * &c(120),
        &x * &c(216),
        &s * &(&(&d * &cq(9, 2)) + &c(236)),
        &inner * &cq(1, 48),
    ]
    .iter()
    .fold(MultiPoly::zero(), |a, b| &a + b);
    [kh3, k2h2, k3h, k4]
}

/// The four closed forms evaluated at a record.
pub fn canonical_intersections(rec: &InvariantRecord) -> (MultiPoly, MultiPoly, MultiPoly, MultiPoly) {
    let [a, b, cc, d] = displayed_symbolic();
    (rec.apply(&a), rec.apply(&b), rec.apply(&cc), rec.apply(&d))
}

/// Chern classes `c_1..c_4` of X in a context with generators H, K.
#[derive(Clone, Debug)]
pub struct Q6Chern {
    pub c1: CycleClass,
    pub c2: CycleClass,
    pub c3: CycleClass,
    pub c4: CycleClass,
}

/// `c(X) = c(T_Q6|X) / c(N)` with `c(T_Q6) = (1+H)^8/(1+2H)`,
/// `c_1(N) = 6H + K` and `c_2(N) = (d/2) H^2`.
pub fn tangent_chern_classes(ctx: &Arc<ChowContext>) -> Q6Chern {
    let h = CycleClass::generator(ctx, "H").expect("H");
    let k = CycleClass::generator(ctx, "K").expect("K");
    let one_h = TotalClass::linear(&h);
    let mut tq = TotalClass::one(ctx);
    for _ in 0..8 {
        tq = tq.mul(&one_h);
    }
    let tq = tq.mul(&TotalClass::linear(&h.scale(&RatFunc::int(2))).inverse());
    let n = TotalClass::from_classes(
        ctx,
        &[&h.scale(&RatFunc::int(6)) + &k, h.pow(2).scale(&RatFunc::from(v("d").scale(&q(1, 2))))],
    );
    let cx = tq.mul(&n.inverse());
    Q6Chern { c1: cx.part(1), c2: cx.part(2), c3: cx.part(3), c4: cx.part(4) }
}

fn hk(ctx: &Arc<ChowContext>) -> (CycleClass, CycleClass) {
    (CycleClass::generator(ctx, "H").expect("H"), CycleClass::generator(ctx, "K").expect("K"))
}

fn rf(p: MultiPoly) -> RatFunc {
    p.into()
}

/// Displayed `c_2, c_3` and the degree-reading of `c_4` as classes, with `d`
/// substituted; `c_4`'s constant part is carried on `H^4`.
fn displayed_chern(ctx: &Arc<ChowContext>, d: &MultiPoly) -> (CycleClass, CycleClass, CycleClass) {
    let (h, k) = hk(ctx);
    let s = |p: MultiPoly, cl: CycleClass| cl.scale(&rf(p.substitute("d", d)));
    let c2 = &(&s(&c(16) - &(&v("d") * &cq(1, 2)), h.pow(2)) + &s(c(6), &h * &k)) + &k.pow(2);
    let c3 = [
        s(&(&v("d") * &c(3)) - &c(72), h.pow(3)),
        s(&v("d") - &c(52), &h.pow(2) * &k),
        s(c(-12), &h * &k.pow(2)),
        -&k.pow(3),
    ]
    .iter()
    .fold(CycleClass::zero(ctx, 3), |a, b| &a + b);
    let c4 = [
        s(&(&c(454) - &(&v("d") * &c(26))) + &(&v("d").pow(2) * &cq(1, 4)), h.pow(4)),
        s(&c(384) - &(&v("d") * &c(12)), &h.pow(3) * &k),
        s(&c(124) - &(&v("d") * &cq(3, 2)), &h.pow(2) * &k.pow(2)),
        s(c(18), &h * &k.pow(3)),
        k.pow(4),
    ]
    .iter()
    .fold(CycleClass::zero(ctx, 4), |a, b| &a + b);
    (c2, c3, c4)
}

/// Displayed `(c_2, c_3, c_4)` in the closed-form context.
pub fn chern_classes_q6(d: &MultiPoly) -> (CycleClass, CycleClass, CycleClass) {
    displayed_chern(&q6_context(), d)
}

/// Outcome of re-deriving the closed forms from the tangent sequences,
/// Noether's formula and adjunction on the linear sections.
#[derive(Clone, Debug)]
pub struct DerivedIntersections {
    pub kh3: MultiPoly,
    pub k2h2: MultiPoly,
    pub k3h: MultiPoly,
    pub k4: MultiPoly,
    /// displayed minus derived, in the order above
    pub residuals: [MultiPoly; 4],
    /// displayed minus derived `c_2, c_3` classes, and the `c_4` degree
    pub chern_residuals: [String; 3],
    pub chern_residuals_zero: [bool; 3],
}

fn integrate(c: &CycleClass) -> MultiPoly {
    c.integrate().expect("top grade").as_polynomial().expect("polynomial degree")
}

/// Solves the linear equation `lhs = 0` for `var`.
fn solve_for(lhs: &MultiPoly, var: &str) -> MultiPoly {
    let parts = lhs.coeffs_in(var);
    assert!(parts.keys().all(|e| *e <= 1), "equation is not linear in {var}");
    let a = parts.get(&1).cloned().unwrap_or_else(MultiPoly::zero);
    let b = parts.get(&0).cloned().unwrap_or_else(MultiPoly::zero);
    let a = a.constant_value().expect("constant leading coefficient");
    (-&b).scale(&a.recip())
}

pub fn derive_intersections() -> DerivedIntersections {
    let ctx = q6_primitive_context();
    let (h, k) = hk(&ctx);
    let ch = tangent_chern_classes(&ctx);
    let two = RatFunc::int(2);
    let (g, s, x, vv) = (v("g"), v("s"), v("x"), v("v"));

    // adjunction on the curve section: (K + 3H).H^3 = 2g - 2
    let kc = integrate(&(&(&k + &h.scale(&RatFunc::int(3))) * &h.pow(3)));
    let kh3 = solve_for(&(&kc - &(&(&g * &c(2)) - &c(2))), "KH3");

    // surface and threefold sections: K_S = (K + 2H)|S, K_X3 = (K + H)|X3
    let ks = &k + &h.scale(&two);
    let kx3 = &k + &h;
    let ks_sq = integrate(&(&ks.pow(2) * &h.pow(2)));
    let ks_h = integrate(&(&ks * &h.pow(3)));
    let kx3_h2 = integrate(&(&kx3 * &h.pow(3)));
    // Noether: c2(S) = 12 chi(O_S) - K_S^2
    let c2s = &(&s * &c(12)) - &ks_sq;
    let c2x3_h = &c2s - &ks_h;
    let c2_h2_from = &c2x3_h - &kx3_h2;
    let c2_h2 = integrate(&(&ch.c2 * &h.pow(2)));
    let k2h2 = solve_for(&(&c2_h2 - &c2_h2_from).substitute("KH3", &kh3), "K2H2");

    // c2(X3).K_X3 = -24 chi(O_X3); K|X3 = K_X3 - H
    let kx3_hk = integrate(&(&(&kx3 * &k) * &h.pow(2)));
    let c2_hk_from = &(&(&x * &c(-24)) - &c2x3_h) - &kx3_hk;
    let c2_hk = integrate(&(&(&ch.c2 * &h) * &k));
    let k3h = solve_for(
        &(&c2_hk - &c2_hk_from).substitute("KH3", &kh3).substitute("K2H2", &k2h2),
        "K3H",
    );

    // Riemann-Roch: -720 chi(O_X) = K^4 - 4K^2 c2 - 3c2^2 + K c3 + c4
    let rr = [
        k.pow(4),
        (&k.pow(2) * &ch.c2).scale(&RatFunc::int(-4)),
        ch.c2.pow(2).scale(&RatFunc::int(-3)),
        &k * &ch.c3,
        ch.c4.clone(),
    ]
    .iter()
    .fold(CycleClass::zero(&ctx, 4), |a, b| &a + b);
    let rr = &integrate(&rr) + &(&vv * &c(720));
    let k4 = solve_for(
        &rr.substitute("KH3", &kh3).substitute("K2H2", &k2h2).substitute("K3H", &k3h),
        "K4",
    );

    let disp = displayed_symbolic();
    let derived = [kh3.clone(), k2h2.clone(), k3h.clone(), k4.clone()];
    let residuals = [0, 1, 2, 3].map(|i| &disp[i] - &derived[i]);

    let (dc2, dc3, dc4) = displayed_chern(&ctx, &v("d"));
    let r2 = (&dc2 - &ch.c2).normal_form().expect("free context");
    let r3 = (&dc3 - &ch.c3).normal_form().expect("free context");
    let r4 = &integrate(&dc4) - &integrate(&ch.c4);
    DerivedIntersections {
        kh3,
        k2h2,
        k3h,
        k4,
        residuals,
        chern_residuals_zero: [r2.is_formally_zero(), r3.is_formally_zero(), r4.is_zero()],
        chern_residuals: [r2.to_string(), r3.to_string(), r4.to_string()],
    }
}

/// Riemann-Roch check of `K^4` against a supplied transcription, from the
/// displayed `K.H^3, K^2.H^2, K^3.H` and displayed Chern classes; returns
/// transcribed minus re-derived.
pub fn verify_riemann_roch_against(rec: &InvariantRecord, k4_display: &MultiPoly) -> MultiPoly {
    let ctx = q6_primitive_context();
    let (_, k) = hk(&ctx);
    let (c2, c3, c4) = displayed_chern(&ctx, &v("d"));
    let sym = [
        k.pow(4),
        (&k.pow(2) * &c2).scale(&RatFunc::int(-4)),
        c2.pow(2).scale(&RatFunc::int(-3)),
        &k * &c3,
        c4,
    ]
    .iter()
    .fold(CycleClass::zero(&ctx, 4), |a, b| &a + b);
    let [kh3, k2h2, k3h, _] = displayed_symbolic();
    let rr = &integrate(&sym) + &(&v("v") * &c(720));
    let rr = rr.substitute("KH3", &kh3).substitute("K2H2", &k2h2).substitute("K3H", &k3h);
    let k4 = solve_for(&rr, "K4");
    rec.apply(&(k4_display - &k4))
}

/// Transcribed `K^4` minus its Riemann-Roch re-derivation.
pub fn verify_riemann_roch(rec: &InvariantRecord) -> MultiPoly {
    verify_riemann_roch_against(rec, &displayed_symbolic()[3])
}

/// `24H^3 - (c3 + c2.(6H+K) - (d/2) K.H^2)` with re-derived classes.
pub fn displayed_c3_relation_residual() -> CycleClass {
    let ctx = q6_primitive_context();
    let (h, k) = hk(&ctx);
    let ch = tangent_chern_classes(&ctx);
    let half_d = RatFunc::from(v("d").scale(&q(1, 2)));
    let n1 = &h.scale(&RatFunc::int(6)) + &k;
    let rhs = &(&ch.c3 + &(&ch.c2 * &n1)) - &(&k * &h.pow(2)).scale(&half_d);
    (&h.pow(3).scale(&RatFunc::int(24)) - &rhs).normal_form().expect("free context")
}

/// Degree of `22H^4 - (c4 + c3.(6H+K) - (d/2) H^2.c2)` with re-derived
/// classes, as a polynomial in d and the primitive symbols.
pub fn displayed_c4_relation_residual() -> MultiPoly {
    let ctx = q6_primitive_context();
    let (h, k) = hk(&ctx);
    let ch = tangent_chern_classes(&ctx);
    let half_d = RatFunc::from(v("d").scale(&q(1, 2)));
    let n1 = &h.scale(&RatFunc::int(6)) + &k;
    let rhs = &(&ch.c4 + &(&ch.c3 * &n1)) - &(&h.pow(2) * &ch.c2).scale(&half_d);
    integrate(&(&h.pow(4).scale(&RatFunc::int(22)) - &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qi;

    #[test]
    fn numeric_examples() {
        let (kh3, _, _, _) = canonical_intersections(&InvariantRecord::numeric(10, 6, 0, 0, 0));
        assert_eq!(kh3, MultiPoly::int(-20));
        let (_, k2h2, _, _) = canonical_intersections(&InvariantRecord::numeric(2, 0, 1, 0, 0));
        assert_eq!(k2h2, MultiPoly::int(32));
    }

    #[test]
    fn q4_complete_intersection() {
        // X = Q6 cut by a hyperplane-section quadric: K = -4H, d = 2, g = 0
        let rec = InvariantRecord::numeric(2, 0, 1, 1, 1);
        let (kh3, k2h2, k3h, k4) = canonical_intersections(&rec);
        assert_eq!(kh3, MultiPoly::int(-8));
        assert_eq!(k2h2, MultiPoly::int(32));
        assert_eq!(k3h, MultiPoly::int(-128));
        assert_eq!(k4, MultiPoly::int(512));
    }

    #[test]
    fn rederivation_is_exact() {
        let r = derive_intersections();
        for res in &r.residuals {
            assert!(res.is_zero(), "residual {res}");
        }
        assert_eq!(r.chern_residuals_zero, [true, true, true]);
    }

    #[test]
    fn riemann_roch_zero_and_fault() {
        let rec = InvariantRecord::symbolic();
        assert!(verify_riemann_roch(&rec).is_zero());
        let bumped = &displayed_symbolic()[3] + &MultiPoly::int(1);
        assert_eq!(verify_riemann_roch_against(&rec, &bumped), MultiPoly::int(1));
    }

    #[test]
    fn displayed_relations() {
        assert!(displayed_c3_relation_residual().is_formally_zero());
        // the displayed fourth relation carries the wrong sign on (d/2) H^2.c2
        let r = displayed_c4_relation_residual();
        assert!(!r.is_zero());
        let expect = &v("d") * &(&(&(&c(16) - &(&v("d") * &cq(1, 2))) * &v("d")) + &(&(&v("KH3") * &c(6)) + &v("K2H2")));
        assert_eq!(r, expect);
    }

    #[test]
    fn displayed_chern_coefficients() {
        let (c2, c3, _) = chern_classes_q6(&MultiPoly::int(32));
        assert!(c2.coeff(&[("H", 2)]).is_zero());
        let (_, c3b, _) = chern_classes_q6(&MultiPoly::int(24));
        assert!(c3b.coeff(&[("H", 3)]).is_zero());
        assert_eq!(c3.coeff(&[("H", 3)]), RatFunc::from(qi(24)));
    }
}
