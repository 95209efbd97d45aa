use std::sync::Arc;

use crate::algebra::{q, solve_linear_system, MultiPoly, RatFunc};
use crate::chow::{
    bundle_w_context, bundle_x_context, chern_of_twisted_bundle, free_context, BundleClasses, ChowContext,
    CycleClass, TotalClass,
};

/// A displayed class against its derivation; `residual` is in normal form.
#[derive(Clone, Debug)]
pub struct ClassCheck {
    pub name: &'static str,
    pub derived: CycleClass,
    pub displayed: CycleClass,
    pub residual: CycleClass,
}

impl ClassCheck {
    pub fn new(name: &'static str, derived: CycleClass, displayed: CycleClass) -> Self {
        let residual = (&derived - &displayed).normal_form().expect("terminating context");
        ClassCheck { name, derived, displayed, residual }
    }

    pub fn holds(&self) -> bool {
        self.residual.is_formally_zero()
    }
}

fn r(n: i64) -> RatFunc {
    RatFunc::int(n)
}

fn rq(n: i64, d: i64) -> RatFunc {
    RatFunc::ratio(n, d)
}

/// `c(W) = c(E^v (H)) c(B)` from the relative Euler sequence.
pub fn chern_w_total(ctx: &Arc<ChowContext>) -> TotalClass {
    let b = BundleClasses::new(ctx);
    let rel = chern_of_twisted_bundle(&[-&b.c1e, b.c2e.clone()], &b.h, 4);
    TotalClass::from_classes(ctx, &rel).mul(&TotalClass::from_classes(ctx, &[b.c1b.clone(), b.c2b.clone()]))
}

/// The displayed `c_1(W) .. c_4(W)`.
pub fn chern_w_displayed(b: &BundleClasses) -> Vec<CycleClass> {
    let (h, c1e, c1b, c2e, c2b) = (&b.h, &b.c1e, &b.c1b, &b.c2e, &b.c2b);
    let e_b = c1e * c1b;
    vec![
        &(&h.scale(&r(4)) - c1e) + c1b,
        &(&(&(&h.pow(2).scale(&r(6)) + &(h * &(&c1b.scale(&r(4)) - &c1e.scale(&r(3))))) + c2b) - &e_b) + c2e,
        &(&h.pow(3).scale(&r(4)) + &(&h.pow(2) * &(&c1b.scale(&r(6)) - &c1e.scale(&r(3)))))
            + &(h * &(&(&c2e.scale(&r(2)) + &c2b.scale(&r(4))) - &e_b.scale(&r(3)))),
        &(&h.pow(3) * c1b).scale(&r(4)) + &(&h.pow(2) * &(&c2b.scale(&r(6)) - &e_b.scale(&r(3)))),
    ]
}

fn wu_chern(b: &BundleClasses) -> CycleClass {
    &(&b.h.pow(4) - &(&b.h.pow(3) * &b.c1e)) + &(&b.h.pow(2) * &b.c2e)
}

#[derive(Clone, Debug)]
pub struct ChernW {
    pub classes: Vec<CycleClass>,
    /// normal form of `H^4 - H^3 c1(E) + H^2 c2(E)`
    pub wu_chern: CycleClass,
    pub checks: Vec<ClassCheck>,
}

pub fn chern_w() -> ChernW {
    let ctx = bundle_w_context();
    let b = BundleClasses::new(&ctx);
    let classes: Vec<CycleClass> = chern_w_total(&ctx).classes().into_iter().take(4).collect();
    let names = ["c1(W)", "c2(W)", "c3(W)", "c4(W)"];
    let checks = classes
        .iter()
        .zip(chern_w_displayed(&b))
        .zip(names)
        .map(|((c, disp), n)| ClassCheck::new(n, c.clone(), disp))
        .collect();
    ChernW { classes, wu_chern: wu_chern(&b).normal_form().expect("terminating"), checks }
}

/// `c1(E)` and `L` from adjunction on `X = 2H - L` in `W` and the
/// discriminant `D = 2 c1(E) - 4L`, in a free ring of divisors.
#[derive(Clone, Debug)]
pub struct C1ERelations {
    pub c1e: CycleClass,
    pub l: CycleClass,
    pub checks: Vec<ClassCheck>,
}

pub fn relations_c1e() -> C1ERelations {
    let ctx = free_context("divisors", &[("H", 1), ("R", 1), ("D", 1), ("KB", 1), ("C", 1), ("L", 1)], 4);
    let g = |n: &str| CycleClass::generator(&ctx, n).expect("generator");
    let (h, rr, dd, kb, c, l) = (g("H"), g("R"), g("D"), g("KB"), g("C"), g("L"));
    // c1 of the relative tangent bundle with c1(E) = C left free
    let c1w = &chern_of_twisted_bundle(&[-&c], &h, 4)[0] - &kb;
    let x = &h.scale(&r(2)) - &l;
    let k_adj = &(-&c1w) + &x;
    let k_x = &(&h.scale(&r(-2)) + &rr) + &kb;
    let eqs = [&k_adj - &k_x, &(&c.scale(&r(2)) - &l.scale(&r(4))) - &dd];
    let matrix: Vec<Vec<RatFunc>> = eqs.iter().map(|e| vec![e.coeff(&[("C", 1)]), e.coeff(&[("L", 1)])]).collect();
    let mut c1e = CycleClass::zero(&ctx, 1);
    let mut ll = CycleClass::zero(&ctx, 1);
    for (name, basis) in [("H", &h), ("R", &rr), ("D", &dd), ("KB", &kb)] {
        let rhs: Vec<RatFunc> = eqs.iter().map(|e| -e.coeff(&[(name, 1)])).collect();
        let sol = solve_linear_system(&matrix, &rhs).expect("nonsingular 2x2");
        c1e = &c1e + &basis.scale(&sol[0]);
        ll = &ll + &basis.scale(&sol[1]);
    }
    let half = rq(1, 2);
    let checks = vec![
        ClassCheck::new("c1(E)", c1e.clone(), &rr.scale(&r(2)) - &dd.scale(&half)),
        ClassCheck::new("L", ll.clone(), &rr - &dd.scale(&half)),
        ClassCheck::new("c1(E) - L", &c1e - &ll, rr.clone()),
        ClassCheck::new("2c1(E) - 4L", &c1e.scale(&r(2)) - &ll.scale(&r(4)), dd.clone()),
    ];
    C1ERelations { c1e, l: ll, checks }
}

/// `c(X) = c(W)|_X / (1 + X|_X)`.
pub fn chern_x_total(ctx: &Arc<ChowContext>) -> TotalClass {
    let b = BundleClasses::new(ctx);
    chern_w_total(ctx).mul(&TotalClass::linear(&b.x_class()).inverse())
}

/// Chern classes of X with `c1(E)`, `R`, `K_B` kept apart.
pub fn chern_x_first_displayed(b: &BundleClasses) -> Vec<CycleClass> {
    let (h, rr, c1e, c1b, c2e, c2b) = (&b.h, &b.r, &b.c1e, &b.c1b, &b.c2e, &b.c2b);
    let h2 = h.pow(2);
    vec![
        &(&h.scale(&r(2)) - &b.kb) - rr,
        sum(&[
            h2.scale(&r(2)),
            h * &(&c1b.scale(&r(2)) - c1e),
            rr.pow(2),
            -&(c1e * rr),
            -&(c1b * rr),
            c2b.clone(),
            c2e.clone(),
        ]),
        &(&h2 * &sum(&[c1b.scale(&r(2)), c1e.clone(), rr.scale(&r(-2))]))
            + &(h * &sum(&[
                c2b.scale(&r(2)),
                -&(c1b * c1e),
                rr.pow(2).scale(&r(-2)),
                (rr * c1e).scale(&r(3)),
                -&c1e.pow(2),
            ])),
        &(&h.pow(3) * &(&rr.scale(&r(4)) - &c1e.scale(&r(2))))
            + &(&h2 * &sum(&[
                c2b.scale(&r(2)),
                c1b * c1e,
                rr.pow(2).scale(&r(6)),
                c1e.pow(2).scale(&r(3)),
                (rr * c1e).scale(&r(-9)),
                (rr * c1b).scale(&r(-2)),
            ])),
    ]
}

/// Chern classes of X after `c1(E) = 2R - D/2`.
pub fn chern_x_substituted_displayed(b: &BundleClasses) -> Vec<CycleClass> {
    let (h, rr, dd, c1b, c2e, c2b) = (&b.h, &b.r, &b.d, &b.c1b, &b.c2e, &b.c2b);
    let h2 = h.pow(2);
    let half = rq(1, 2);
    vec![
        &(&h.scale(&r(2)) + c1b) - rr,
        sum(&[
            h2.scale(&r(2)),
            h * &sum(&[c1b.scale(&r(2)), rr.scale(&r(-2)), dd.scale(&half)]),
            -&rr.pow(2),
            c2e.clone(),
            -&(c1b * rr),
            c2b.clone(),
            (dd * rr).scale(&half),
        ]),
        &(&h2 * &(&c1b.scale(&r(2)) - &dd.scale(&half)))
            + &(h * &sum(&[
                (c1b * dd).scale(&half),
                (c1b * rr).scale(&r(-2)),
                c2b.scale(&r(2)),
                dd.pow(2).scale(&rq(-1, 4)),
                (dd * rr).scale(&half),
            ])),
        &(&h.pow(3) * dd)
            + &(&h2 * &sum(&[
                (c1b * dd).scale(&rq(-1, 2)),
                c2b.scale(&r(2)),
                dd.pow(2).scale(&rq(3, 4)),
                (dd * rr).scale(&rq(-3, 2)),
            ])),
    ]
}

pub(crate) fn sum(parts: &[CycleClass]) -> CycleClass {
    let mut it = parts.iter();
    let first = it.next().expect("nonempty").clone();
    it.fold(first, |a, b| &a + b)
}

#[derive(Clone, Debug)]
pub struct ChernX {
    pub classes: Vec<CycleClass>,
    pub first_form: Vec<ClassCheck>,
    pub substituted_form: Vec<ClassCheck>,
    /// `2H - K_B - R` against `2H + c1(B) - R`
    pub c1_convention: ClassCheck,
}

pub fn chern_x_bundle() -> ChernX {
    let ctx = bundle_x_context();
    let b = BundleClasses::new(&ctx);
    let classes = chern_x_total(&ctx).classes();
    let names = ["c1(X)", "c2(X)", "c3(X)", "c4(X)"];
    let mk = |disp: Vec<CycleClass>| -> Vec<ClassCheck> {
        classes.iter().zip(disp).zip(names).map(|((c, d), n)| ClassCheck::new(n, c.clone(), d)).collect()
    };
    let first = chern_x_first_displayed(&b);
    let subst = chern_x_substituted_displayed(&b);
    let c1_convention = ClassCheck::new("c1(X) convention", first[0].clone(), subst[0].clone());
    ChernX { first_form: mk(first), substituted_form: mk(subst), c1_convention, classes }
}

/// `(56-d)H^3 - 28H^2 c1 + 8H(c1^2 - c2) - c1^3 + 2c1c2 - c3`, zero for a
/// four-fold in `P^7`.
pub fn c3_identity(h: &CycleClass, c: &[CycleClass]) -> CycleClass {
    let d = RatFunc::var("d");
    let (c1, c2, c3) = (&c[0], &c[1], &c[2]);
    sum(&[
        h.pow(3).scale(&(&r(56) - &d)),
        (&h.pow(2) * c1).scale(&r(-28)),
        (h * &(&c1.pow(2) - c2)).scale(&r(8)),
        -&c1.pow(3),
        (c1 * c2).scale(&r(2)),
        -c3,
    ])
}

/// `70H^4 - d c1 H^3 - c2(28H^2 - 8c1H + c1^2 - c2) - c3(8H - c1) - c4`.
pub fn c4_identity(h: &CycleClass, c: &[CycleClass]) -> CycleClass {
    let d = RatFunc::var("d");
    let (c1, c2, c3, c4) = (&c[0], &c[1], &c[2], &c[3]);
    let n2 = sum(&[h.pow(2).scale(&r(28)), (h * c1).scale(&r(-8)), c1.pow(2), -c2]);
    sum(&[h.pow(4).scale(&r(70)), (&h.pow(3) * c1).scale(&(-&d)), -&(c2 * &n2), -&(c3 * &(&h.scale(&r(8)) - c1)), -c4])
}

/// The two identities from `c(T_P7|X) = c(X) c(N)` with `c3(N) = dH^3`
/// and `c4(N) = 0`, derived in a free ring.
#[derive(Clone, Debug)]
pub struct NormalIdentities {
    pub c3: ClassCheck,
    pub c4: ClassCheck,
}

pub fn p7_normal_identities() -> NormalIdentities {
    let ctx = free_context("p7-fourfold", &[("H", 1), ("c1", 1), ("c2", 2), ("c3", 3), ("c4", 4)], 4);
    let g = |n: &str| CycleClass::generator(&ctx, n).expect("generator");
    let h = g("H");
    let c = [g("c1"), g("c2"), g("c3"), g("c4")];
    let d = RatFunc::var("d");
    let binom = |k: i64| r([1, 8, 28, 56, 70][k as usize]);
    let n1 = &h.scale(&binom(1)) - &c[0];
    let n2 = sum(&[h.pow(2).scale(&binom(2)), -&(&c[0] * &n1), -&c[1]]);
    let n3 = h.pow(3).scale(&d);
    // grade three: C(8,3) H^3 = c3 + c2 n1 + c1 n2 + n3
    let c3_derived = sum(&[h.pow(3).scale(&binom(3)), -&(&c[1] * &n1), -&(&c[0] * &n2), -&n3]);
    // grade four, with c4(N) = 0
    let c4_derived = sum(&[h.pow(4).scale(&binom(4)), -&(&c[2] * &n1), -&(&c[1] * &n2), -&(&c[0] * &n3)]);
    NormalIdentities {
        c3: ClassCheck::new("c3 identity", &c3_derived - &c[2], c3_identity(&h, &c)),
        c4: ClassCheck::new("c4 identity", &c4_derived - &c[3], c4_identity(&h, &c)),
    }
}

/// The displayed intermediate class of the `c3` identity on the bundle:
/// `(d-16)H^3 + (-12R + 3D/2 + 14c1(B))H^2 + (...)H`.
pub fn c3_identity_bundle_displayed(b: &BundleClasses) -> CycleClass {
    let (h, rr, dd, c1b, c2e, c2b) = (&b.h, &b.r, &b.d, &b.c1b, &b.c2e, &b.c2b);
    let d = RatFunc::var("d");
    let half = rq(1, 2);
    sum(&[
        h.pow(3).scale(&(&d - &r(16))),
        &h.pow(2) * &sum(&[rr.scale(&r(-12)), dd.scale(&rq(3, 2)), c1b.scale(&r(14))]),
        h * &sum(&[
            c1b.pow(2).scale(&r(-6)),
            rr.pow(2).scale(&r(-10)),
            c2b.scale(&r(6)),
            c2e.scale(&r(4)),
            dd.pow(2).scale(&rq(-1, 4)),
            (c1b * rr).scale(&r(6)),
            (c1b * dd).scale(&(-&half)),
            (rr * dd).scale(&rq(7, 2)),
        ]),
    ])
}

/// The `c3` identity on the bundle against its display; the display is
/// the negative of the identity class.
pub fn c3_identity_bundle_check() -> ClassCheck {
    let ctx = bundle_x_context();
    let b = BundleClasses::new(&ctx);
    let cx = chern_x_total(&ctx).classes();
    ClassCheck::new("c3 identity on X", -&c3_identity(&b.h, &cx), c3_identity_bundle_displayed(&b))
}

/// Bidegree of the base in the Grassmannian.
#[derive(Clone, Debug, PartialEq)]
pub struct Bidegree {
    pub delta: RatFunc,
    pub c2e: RatFunc,
    pub delta_residual: RatFunc,
    pub c2e_residual: RatFunc,
    /// `c2(E)` against `(6R^2 - 5D.R/2 + D^2/4 - d)/2`
    pub reduction_residual: RatFunc,
}

fn mp(n: &str) -> MultiPoly {
    MultiPoly::var(n)
}

/// Wu-Chern cut with `H` and the class of X cut with `H^4` in `W`, solved
/// for `delta = H^5` and `c2(E)`.
pub fn bidegree() -> Bidegree {
    let ctx = bundle_w_context();
    let b = BundleClasses::new(&ctx);
    let int = |c: CycleClass| c.integrate().expect("top grade");
    // delta - H^4 c1(E) + H^3 c2(E) = 0, with H^3 c2(E) = c2E
    let h4c1 = int(&b.h.pow(4) * &b.c1e);
    // d = 2 delta + H^4 R - H^4 c1(E)
    let h4r = int(&b.h.pow(4) * &b.r);
    let matrix = vec![vec![r(1), r(1)], vec![r(2), r(0)]];
    let rhs = vec![h4c1.clone(), &(&RatFunc::var("d") - &h4r) + &h4c1];
    let sol = solve_linear_system(&matrix, &rhs).expect("nonsingular");
    let (delta, c2e) = (sol[0].clone(), sol[1].clone());
    // R.c1(E) = 2v - y/2 and c1(E)^2 = 4v - 2y + z/4
    let rc1 = RatFunc::from(&mp("v").scale(&q(2, 1)) - &mp("y").scale(&q(1, 2)));
    let c1sq = RatFunc::from(&(&mp("v").scale(&q(4, 1)) - &mp("y").scale(&q(2, 1))) + &mp("z").scale(&q(1, 4)));
    let d = RatFunc::var("d");
    let delta_disp = (&(&d - &rc1) + &c1sq).scale(&q(1, 2));
    let c2e_disp = (&(&rc1 + &c1sq) - &d).scale(&q(1, 2));
    let reduced = RatFunc::from(
        &(&(&mp("v").scale(&q(6, 1)) - &mp("y").scale(&q(5, 2))) + &mp("z").scale(&q(1, 4))) - &mp("d"),
    )
    .scale(&q(1, 2));
    Bidegree {
        delta_residual: &delta - &delta_disp,
        c2e_residual: &c2e - &c2e_disp,
        reduction_residual: &c2e - &reduced,
        delta,
        c2e,
    }
}
