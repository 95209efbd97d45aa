//! Property runners shared by the property and acceptance targets. Each
//! runs `CASES` cases from a fixed seed.

#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

use qbound_core::algebra::{isolate_real_roots, max_integer_where_nonpositive, q, qi, refine_root, MultiPoly, RatFunc, Rational, UniPoly};
use qbound_core::bundle::{feasible_triangle_from, feasible_triangle_symbolic_from, genus_window_from, solve_invariant_system, BundleInvariants, FeasibleTriangle};
use qbound_core::chow::{bundle_x_context, q6_context, ChowContext, CycleClass};
use qbound_core::dsl::{elaborate, parse_expr, DslContext, Expr};

pub const CASES: u32 = 256;
pub const SEED: u64 = 0x5157_2963;

pub type PropResult = Result<(), String>;

fn runner() -> TestRunner {
    TestRunner::new(Config { cases: CASES, rng_seed: RngSeed::Fixed(SEED), failure_persistence: None, ..Config::default() })
}

fn run<S: Strategy>(s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> PropResult
where
    S::Value: std::fmt::Debug,
{
    runner().run(&s, f).map_err(|e| e.to_string())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, 3), small_rational()), 0..5)
        .prop_map(|terms| MultiPoly::from_terms(&["d", "g", "x"], terms))
}

/// Commutative ring axioms for polynomials and rational functions.
pub fn ring_axioms_poly() -> PropResult {
    run((poly(), poly(), poly()), |(a, b, c)| {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            let f = RatFunc::new(a.clone(), b.clone()).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(&f * &RatFunc::from(b.clone()), RatFunc::from(a.clone()));
        }
        Ok(())
    })
}

fn divisor_names() -> [&'static str; 4] {
    ["H", "R", "D", "KB"]
}

fn class_of(ctx: &Arc<ChowContext>, names: &[&str], coeffs: &[i64]) -> CycleClass {
    names.iter().zip(coeffs).fold(CycleClass::zero(ctx, 1), |acc, (n, c)| {
        &acc + &CycleClass::generator(ctx, n).expect("generator").scale(&RatFunc::int(*c))
    })
}

fn divisor_coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, 4)
}

/// Ring axioms in the Chow ring of the bundle four-fold, compared after
/// reduction.
pub fn ring_axioms_chow() -> PropResult {
    let ctx = bundle_x_context();
    run((divisor_coeffs(), divisor_coeffs(), divisor_coeffs()), move |(a, b, c)| {
        let (a, b, c) = (class_of(&ctx, &divisor_names(), &a), class_of(&ctx, &divisor_names(), &b), class_of(&ctx, &divisor_names(), &c));
        prop_assert!(&a * &b == &b * &a);
        prop_assert!(&(&a * &b) * &c == &a * &(&b * &c));
        prop_assert!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c));
        prop_assert!(&(&a + &b) + &c == &a + &(&b + &c));
        prop_assert!((&a - &a).is_zero());
        Ok(())
    })
}

/// A product of generators of the bundle ring, of total grade at most 4.
fn monomial_product() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..6, 1..5)
}

const BUNDLE_GENERATORS: [&str; 6] = ["H", "R", "D", "KB", "c2E", "c2B"];

fn product_class(ctx: &Arc<ChowContext>, idx: &[usize], scale: i64) -> CycleClass {
    let mut c = CycleClass::scalar(ctx, RatFunc::int(scale));
    for &i in idx {
        c = &c * &CycleClass::generator(ctx, BUNDLE_GENERATORS[i]).expect("generator");
    }
    c
}

/// Reduction is idempotent.
pub fn normal_form_idempotent() -> PropResult {
    let ctx = bundle_x_context();
    run(prop::collection::vec((monomial_product(), -4i64..=4), 1..4), move |parts| {
        let grade_of = |idx: &Vec<usize>| idx.iter().map(|&i| if i >= 4 { 2 } else { 1 }).sum::<u32>();
        let g = grade_of(&parts[0].0);
        let c = parts
            .iter()
            .filter(|(idx, _)| grade_of(idx) == g)
            .fold(CycleClass::zero(&ctx, g), |acc, (idx, s)| &acc + &product_class(&ctx, idx, *s));
        let once = c.normal_form().map_err(|e| TestCaseError::fail(e.to_string()))?;
        let twice = once.normal_form().map_err(|e| TestCaseError::fail(e.to_string()))?;
        let a: Vec<_> = once.terms().collect();
        let b: Vec<_> = twice.terms().collect();
        prop_assert_eq!(a, b);
        Ok(())
    })
}

fn top_class(ctx: &Arc<ChowContext>, names: &[&str], coeffs: &[Vec<i64>]) -> CycleClass {
    coeffs.iter().fold(CycleClass::scalar(ctx, RatFunc::one()), |acc, c| &acc * &class_of(ctx, names, c))
}

/// Integration is linear over the coefficient field.
pub fn integrate_linear() -> PropResult {
    let bundle = bundle_x_context();
    let q6 = q6_context();
    let four = || prop::collection::vec(divisor_coeffs(), 4);
    run((four(), four(), small_rational(), small_rational(), prop::collection::vec(-3i64..=3, 8)), move |(u, w, a, b, hk)| {
        let names = divisor_names();
        let (cu, cw) = (top_class(&bundle, &names, &u), top_class(&bundle, &names, &w));
        let (ra, rb) = (RatFunc::from(a), RatFunc::from(b));
        let lhs = (&cu.scale(&ra) + &cw.scale(&rb)).integrate().map_err(|e| TestCaseError::fail(e.to_string()))?;
        let iu = cu.integrate().map_err(|e| TestCaseError::fail(e.to_string()))?;
        let iw = cw.integrate().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(lhs, &(&iu * &ra) + &(&iw * &rb));

        let pair: Vec<Vec<i64>> = hk.chunks(2).map(|c| c.to_vec()).collect();
        let c = top_class(&q6, &["H", "K"], &pair);
        let twice = (&c + &c).integrate().map_err(|e| TestCaseError::fail(e.to_string()))?;
        let one = c.integrate().map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert_eq!(twice, &one * &RatFunc::int(2));
        Ok(())
    })
}

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Isolating intervals: one per distinct rational root, disjoint,
/// ascending, with a sign change of the square-free part at the ends; the
/// integer search returns a point where the polynomial is non-positive
/// with every larger integer positive.
pub fn root_isolation() -> PropResult {
    let roots = prop::collection::vec((-40i64..=40, 1i64..=3), 1..5);
    run((roots, 1i64..=5, any::<bool>()), |(rs, c, twice)| {
        let mut p = UniPoly::from_ints("x", &[c, 0, 1]);
        let mut distinct: Vec<Rational> = Vec::new();
        for (n, d) in &rs {
            let r = q(*n, *d);
            p = p.mul(&UniPoly::new("x", vec![-r.clone(), qi(1)]));
            if twice {
                p = p.mul(&UniPoly::new("x", vec![-r.clone(), qi(1)]));
            }
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
        distinct.sort();
        let sf = p.square_free();
        let ivs = isolate_real_roots(&p);
        prop_assert_eq!(ivs.len(), distinct.len());
        for (k, (lo, hi)) in ivs.iter().enumerate() {
            prop_assert!(lo < hi);
            if k > 0 {
                prop_assert!(ivs[k - 1].1 <= *lo);
            }
            prop_assert!(lo < &distinct[k] && &distinct[k] < hi);
            prop_assert_eq!(sign(&sf.eval(lo)) * sign(&sf.eval(hi)), -1);
            let (a, b) = refine_root(&sf, lo.clone(), hi.clone(), &q(1, 1000));
            prop_assert!(&b - &a <= q(1, 1000));
            prop_assert!(a <= distinct[k] && distinct[k] <= b);
        }
        let neg = p.scale(&qi(-1)).add(&UniPoly::from_ints("x", &[0]));
        let top = distinct.last().expect("one root").floor().to_integer();
        let low = distinct[0].floor().to_integer() - 1;
        match max_integer_where_nonpositive(&p, &low) {
            Ok(t) => {
                prop_assert!(!p.eval_int(&t).is_positive());
                let mut s = &t + 1;
                while s <= &top + 2 {
                    prop_assert!(p.eval_int(&s).is_positive());
                    s += 1;
                }
            }
            Err(_) => {
                // p >= 0 only fails when every integer in range is positive
                let mut s = low.clone();
                while s <= &top + 2 {
                    prop_assert!(p.eval_int(&s).is_positive());
                    s += 1;
                }
            }
        }
        prop_assert!(max_integer_where_nonpositive(&neg, &BigInt::zero()).is_err());
        Ok(())
    })
}

const IDENTS: [&str; 10] = ["H", "K", "R", "D", "KB", "c1B", "c1E", "c2E", "c2B", "L"];

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20, 1i64..6).prop_map(|(n, d)| Expr::Num(q(n, d))),
        (0usize..IDENTS.len()).prop_map(|i| Expr::Ident(IDENTS[i].to_string())),
    ]
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 3, |inner| {
        let term = prop_oneof![3 => inner.clone(), 1 => inner.clone().prop_map(|e| Expr::Neg(Box::new(e)))];
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Pullback(Box::new(e))),
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            (inner.clone(), prop::collection::vec(term, 1..3)).prop_map(|(first, rest)| {
                let mut ts = vec![first];
                ts.extend(rest);
                Expr::Sum(ts)
            }),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Product),
            (inner, 0u32..4).prop_map(|(b, n)| Expr::Power(Box::new(b), n)),
        ]
    })
}

/// Printing then parsing returns the same tree, and both elaborate to the
/// same class.
pub fn dsl_round_trip() -> PropResult {
    let ctx = DslContext::bundle();
    run(expr(), move |e| {
        let text = e.to_string();
        prop_assert!(text.is_ascii());
        let back = parse_expr(&text).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
        prop_assert_eq!(&back, &e);
        prop_assert_eq!(back.to_string(), text);
        match (elaborate(&e, &ctx), elaborate(&back, &ctx)) {
            (Ok(a), Ok(b)) => prop_assert!(a == b),
            (Err(a), Err(b)) => prop_assert_eq!(a, b),
            (a, b) => return Err(TestCaseError::fail(format!("{a:?} vs {b:?}"))),
        }
        Ok(())
    })
}

fn bundle_setup() -> &'static (BundleInvariants, FeasibleTriangle) {
    static CELL: OnceLock<(BundleInvariants, FeasibleTriangle)> = OnceLock::new();
    CELL.get_or_init(|| {
        let inv = solve_invariant_system().expect("system solves");
        let tri = feasible_triangle_symbolic_from(&inv);
        (inv, tri)
    })
}

/// On the feasible triangle `g - 1` stays between its vertex values.
pub fn genus_window_bounds() -> PropResult {
    let (inv, tri) = bundle_setup();
    run((23i64..4000, 0i64..50, 0i64..50, 0i64..50), move |(d, a, b, c)| {
        prop_assume!(a + b + c > 0);
        let dq = qi(d);
        let num = feasible_triangle_from(tri, &dq).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let w = genus_window_from(inv, tri, &dq).map_err(|e| TestCaseError::fail(e.to_string()))?;
        let s = qi(a + b + c);
        let wts = [qi(a) / &s, qi(b) / &s, qi(c) / &s];
        let x = (0..3).fold(qi(0), |acc, k| acc + &wts[k] * &num.vertices[k].0);
        let y = (0..3).fold(qi(0), |acc, k| acc + &wts[k] * &num.vertices[k].1);
        prop_assert!(num.contains(&x, &y));
        let g = inv
            .genus_minus_1
            .substitute("d", &RatFunc::from(dq))
            .substitute("x", &RatFunc::from(x))
            .substitute("y", &RatFunc::from(y))
            .constant_value()
            .ok_or_else(|| TestCaseError::fail("genus not constant"))?;
        prop_assert!(w.lower <= g && g <= w.upper);
        Ok(())
    })
}

/// Every runner with its name.
pub fn all() -> Vec<(&'static str, fn() -> PropResult)> {
    vec![
        ("ring axioms (polynomials)", ring_axioms_poly),
        ("ring axioms (Chow ring)", ring_axioms_chow),
        ("normal-form idempotence", normal_form_idempotent),
        ("integrate linearity", integrate_linear),
        ("root isolation", root_isolation),
        ("DSL round trip", dsl_round_trip),
        ("genus window", genus_window_bounds),
    ]
}
