//! The concrete contexts: the quadric six-fold invariant ring and the
//! projective-bundle rings for quadric fibrations over a surface.

use std::sync::Arc;

use super::{ChowContext, ChowContextBuilder, CycleClass};
use crate::algebra::{MultiPoly, RatFunc};
use crate::q6::{canonical_intersections, InvariantRecord};

/// Context with generators H, K whose degrees are the closed forms in
/// (d, g, s, x, v).
pub fn q6_context() -> Arc<ChowContext> {
    let rec = InvariantRecord::symbolic();
    let (kh3, k2h2, k3h, k4) = canonical_intersections(&rec);
    ChowContextBuilder::new("q6", 4)
        .generator("H", 1, false)
        .generator("K", 1, false)
        .evaluate(&[("H", 4)], rec.d.clone().into())
        .evaluate(&[("H", 3), ("K", 1)], kh3.into())
        .evaluate(&[("H", 2), ("K", 2)], k2h2.into())
        .evaluate(&[("H", 1), ("K", 3)], k3h.into())
        .evaluate(&[("K", 4)], k4.into())
        .build()
        .expect("valid context")
}

/// Same ring with the four mixed degrees left as free symbols
/// `KH3, K2H2, K3H, K4`.
pub fn q6_primitive_context() -> Arc<ChowContext> {
    ChowContextBuilder::new("q6-primitive", 4)
        .generator("H", 1, false)
        .generator("K", 1, false)
        .evaluate(&[("H", 4)], RatFunc::var("d"))
        .evaluate(&[("H", 3), ("K", 1)], RatFunc::var("KH3"))
        .evaluate(&[("H", 2), ("K", 2)], RatFunc::var("K2H2"))
        .evaluate(&[("H", 1), ("K", 3)], RatFunc::var("K3H"))
        .evaluate(&[("K", 4)], RatFunc::var("K4"))
        .build()
        .expect("valid context")
}

/// Free graded ring without relations or integration.
pub fn free_context(name: &str, gens: &[(&str, u32)], top: u32) -> Arc<ChowContext> {
    gens.iter()
        .fold(ChowContextBuilder::new(name, top), |b, (n, g)| b.generator(n, *g, false))
        .build()
        .expect("valid context")
}

const BASE_DIVISORS: [&str; 3] = ["R", "D", "KB"];
const BASE_SECOND: [&str; 2] = ["c2E", "c2B"];

fn bundle_builder(name: &str, top: u32) -> ChowContextBuilder {
    let mut b = ChowContextBuilder::new(name, top)
        .generator("H", 1, false)
        .generator("R", 1, true)
        .generator("D", 1, true)
        .generator("KB", 1, true)
        .generator("c2E", 2, true)
        .generator("c2B", 2, true);
    // The base is a surface: every base monomial of grade three or more vanishes.
    for i in 0..3 {
        for j in i..3 {
            for k in j..3 {
                let mut pat: Vec<(&str, u32)> = Vec::new();
                for n in [BASE_DIVISORS[i], BASE_DIVISORS[j], BASE_DIVISORS[k]] {
                    match pat.iter_mut().find(|(m, _)| *m == n) {
                        Some(e) => e.1 += 1,
                        None => pat.push((n, 1)),
                    }
                }
                b = b.relation(&pat, vec![]);
            }
        }
    }
    for c in BASE_SECOND {
        for z in BASE_DIVISORS {
            b = b.relation(&[(c, 1), (z, 1)], vec![]);
        }
    }
    for (i, c) in BASE_SECOND.iter().enumerate() {
        for c2 in &BASE_SECOND[i..] {
            if c == c2 {
                b = b.relation(&[(c, 2)], vec![]);
            } else {
                b = b.relation(&[(c, 1), (c2, 1)], vec![]);
            }
        }
    }
    // Wu-Chern: H^4 = H^3 c1(E) - H^2 c2(E), with c1(E) = 2R - D/2.
    b.relation(
        &[("H", 4)],
        vec![
            (vec![("H", 3), ("R", 1)], RatFunc::int(2)),
            (vec![("H", 3), ("D", 1)], RatFunc::ratio(-1, 2)),
            (vec![("H", 2), ("c2E", 1)], RatFunc::int(-1)),
        ],
    )
}

fn v(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

/// Base intersection numbers as polynomials: `R^2 = v`, `D.R = y`,
/// `D^2 = z`, `KB^2 = x`, `KB.R = u`, `KB.D = t`.
fn base_pairing(a: &str, b: &str) -> MultiPoly {
    let mut k = [a, b];
    k.sort();
    match (k[0], k[1]) {
        ("R", "R") => v("v"),
        ("D", "R") => v("y"),
        ("D", "D") => v("z"),
        ("KB", "KB") => v("x"),
        ("KB", "R") => v("u"),
        ("D", "KB") => v("t"),
        _ => unreachable!("base divisor pair"),
    }
}

/// `c2(E)` as forced on the four-fold by `H^4 = d`:
/// `(6v - 5y/2 + z/4 - d) / 2`.
pub fn c2e_on_fourfold() -> MultiPoly {
    let c1e_r = &(&v("v") * &MultiPoly::int(2)) - &(&v("y") * &MultiPoly::ratio(1, 2));
    let c1e_sq = &(&(&v("v") * &MultiPoly::int(4)) - &(&v("y") * &MultiPoly::int(2))) + &(&v("z") * &MultiPoly::ratio(1, 4));
    (&(&c1e_r + &c1e_sq) - &v("d")).scale(&crate::algebra::q(1, 2))
}

/// The four-fold X: `H^2 Z Z' = 2 Z.Z'`, `H^3 Z = (3R - D/2).Z`, and
/// `H^4 = d` through the Wu-Chern rewrite.
pub fn bundle_x_context() -> Arc<ChowContext> {
    let mut b = bundle_builder("bundle", 4);
    for (i, z) in BASE_DIVISORS.iter().enumerate() {
        for z2 in &BASE_DIVISORS[i..] {
            let m: Vec<(&str, u32)> = if z == z2 { vec![("H", 2), (z, 2)] } else { vec![("H", 2), (z, 1), (z2, 1)] };
            b = b.evaluate(&m, (&base_pairing(z, z2) * &MultiPoly::int(2)).into());
        }
        let h3 = &(&base_pairing("R", z) * &MultiPoly::int(3)) - &(&base_pairing("D", z) * &MultiPoly::ratio(1, 2));
        b = b.evaluate(&[("H", 3), (z, 1)], h3.into());
    }
    b.evaluate(&[("H", 2), ("c2E", 1)], (&c2e_on_fourfold() * &MultiPoly::int(2)).into())
        .evaluate(&[("H", 2), ("c2B", 1)], (&v("f") * &MultiPoly::int(2)).into())
        .build()
        .expect("valid context")
}

/// The five-fold W = P(E): `H^3 beta = beta` for base classes of grade two,
/// with `c2(E)` a free symbol.
pub fn bundle_w_context() -> Arc<ChowContext> {
    let mut b = bundle_builder("bundle-w", 5);
    for (i, z) in BASE_DIVISORS.iter().enumerate() {
        for z2 in &BASE_DIVISORS[i..] {
            let m: Vec<(&str, u32)> = if z == z2 { vec![("H", 3), (z, 2)] } else { vec![("H", 3), (z, 1), (z2, 1)] };
            b = b.evaluate(&m, base_pairing(z, z2).into());
        }
    }
    b.evaluate(&[("H", 3), ("c2E", 1)], RatFunc::var("c2E"))
        .evaluate(&[("H", 3), ("c2B", 1)], RatFunc::var("f"))
        .build()
        .expect("valid context")
}

/// Named classes of a bundle context, including the derived ones.
#[derive(Clone, Debug)]
pub struct BundleClasses {
    pub h: CycleClass,
    pub r: CycleClass,
    pub d: CycleClass,
    pub kb: CycleClass,
    pub c2e: CycleClass,
    pub c2b: CycleClass,
    /// `c1(E) = 2R - D/2`
    pub c1e: CycleClass,
    /// `c1(B) = -KB`
    pub c1b: CycleClass,
    /// `L = R - D/2`
    pub l: CycleClass,
    /// `K_X = -2H + R + KB`
    pub k: CycleClass,
}

impl BundleClasses {
    pub fn new(ctx: &Arc<ChowContext>) -> Self {
        let g = |n: &str| CycleClass::generator(ctx, n).expect("bundle generator");
        let (h, r, d, kb) = (g("H"), g("R"), g("D"), g("KB"));
        let half = RatFunc::ratio(1, 2);
        let c1e = &r.scale(&RatFunc::int(2)) - &d.scale(&half);
        let l = &r - &d.scale(&half);
        let k = &(&r + &kb) - &h.scale(&RatFunc::int(2));
        BundleClasses { c1b: -&kb, c2e: g("c2E"), c2b: g("c2B"), h, r, d, kb, c1e, l, k }
    }

    /// Class of X in W: `2H + R - c1(E)`.
    pub fn x_class(&self) -> CycleClass {
        &(&self.h.scale(&RatFunc::int(2)) + &self.r) - &self.c1e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wu_chern_normal_form() {
        let ctx = bundle_x_context();
        let b = BundleClasses::new(&ctx);
        let h4 = b.h.pow(4).normal_form().unwrap();
        let expect = &(&b.h.pow(3) * &b.c1e) - &(&b.h.pow(2) * &b.c2e);
        assert_eq!(h4, expect.normal_form().unwrap());
        let wu = &(&b.h.pow(4) - &(&b.h.pow(3) * &b.c1e)) + &(&b.h.pow(2) * &b.c2e);
        assert!(wu.normal_form().unwrap().is_formally_zero());
    }

    #[test]
    fn three_base_divisors_vanish() {
        let ctx = bundle_x_context();
        let b = BundleClasses::new(&ctx);
        assert!((&(&b.r * &b.d) * &b.kb).normal_form().unwrap().is_formally_zero());
    }

    #[test]
    fn lemma_evaluations() {
        let ctx = bundle_x_context();
        let b = BundleClasses::new(&ctx);
        assert_eq!((&b.h.pow(2) * &(&b.r * &b.d)).integrate().unwrap(), RatFunc::var("y").scale(&crate::algebra::qi(2)));
        let h3d = (&b.h.pow(3) * &b.d).integrate().unwrap();
        assert_eq!(h3d, &RatFunc::var("y").scale(&crate::algebra::qi(3)) - &RatFunc::var("z").scale(&crate::algebra::q(1, 2)));
        assert_eq!(b.h.pow(4).integrate().unwrap(), RatFunc::var("d"));
    }

    #[test]
    fn x_class_cut_with_h4_in_w() {
        let ctx = bundle_w_context();
        let b = BundleClasses::new(&ctx);
        let deg = (&b.x_class() * &b.h.pow(4)).integrate().unwrap();
        // c1(E)^2 + R.c1(E) - 2 c2(E)
        let expect = crate::algebra::RatFunc::from(
            &(&(&v("v") * &MultiPoly::int(6)) - &(&v("y") * &MultiPoly::ratio(5, 2)))
                + &(&(&v("z") * &MultiPoly::ratio(1, 4)) - &(&v("c2E") * &MultiPoly::int(2))),
        );
        assert_eq!(deg, expect);
    }

    #[test]
    fn q6_evaluations() {
        let ctx = q6_context();
        let h = CycleClass::generator(&ctx, "H").unwrap();
        let k = CycleClass::generator(&ctx, "K").unwrap();
        let kh3 = (&k * &h.pow(3)).integrate().unwrap();
        assert_eq!(kh3, RatFunc::from(&(&v("g") * &MultiPoly::int(2)) - &(&MultiPoly::int(2) + &(&v("d") * &MultiPoly::int(3)))));
    }

    #[test]
    fn grade_mismatch() {
        let ctx = q6_context();
        let h = CycleClass::generator(&ctx, "H").unwrap();
        assert!(matches!(h.pow(3).integrate(), Err(super::super::ChowError::GradeMismatch { .. })));
    }

    #[test]
    fn non_terminating_guard() {
        let ctx = ChowContextBuilder::new("loop", 2)
            .generator("A", 1, false)
            .generator("B", 1, false)
            .relation(&[("A", 1)], vec![(vec![("B", 1)], RatFunc::one())])
            .max_steps(10)
            .build()
            .unwrap();
        let a = CycleClass::generator(&ctx, "A").unwrap();
        assert!(a.normal_form().is_ok());
        let starved = ChowContextBuilder::new("starved", 2)
            .generator("A", 1, false)
            .generator("B", 1, false)
            .relation(&[("A", 1)], vec![(vec![("B", 1)], RatFunc::one())])
            .max_steps(0)
            .build()
            .unwrap();
        let a = CycleClass::generator(&starved, "A").unwrap();
        assert!(matches!(a.normal_form(), Err(crate::chow::ChowError::NonTerminating { .. })));
        // a relation that does not decrease the ranking is rejected up front
        let bad = ChowContextBuilder::new("bad", 2)
            .generator("A", 1, false)
            .generator("B", 1, false)
            .relation(&[("B", 1)], vec![(vec![("A", 1)], RatFunc::one())])
            .build();
        assert!(bad.is_err());
    }
}
