use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::system::{dxy, p_of_d, solve_invariant_system, BundleInvariants};
use crate::algebra::{
    isolate_real_roots, max_integer_where_nonpositive, q, refine_root, qi, AlgebraError, MultiPoly, RatFunc, Rational, UniPoly,
};
use crate::q6::{ccd_applicability, ccd_genus_bound_symbolic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BundleError {
    #[error("constraint lines {0} and {1} are parallel at d = {2}")]
    DegenerateTriangle(usize, usize, Rational),
    #[error("the constraints do not bound a triangle at d = {0}")]
    NotATriangle(Rational),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `cx x + cy y + c0 >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm {
    pub cx: RatFunc,
    pub cy: RatFunc,
    pub c0: RatFunc,
}

impl LinearForm {
    /// Reads an expression affine in `x, y` with `d`-only denominator.
    pub fn from_ratfunc(e: &RatFunc) -> LinearForm {
        assert!(e.denom().degree_in("x") == 0 && e.denom().degree_in("y") == 0, "denominator depends on x or y");
        let den: RatFunc = e.denom().clone().into();
        let num = e.numer();
        assert!(num.degree_in("x") <= 1 && num.degree_in("y") <= 1, "not affine in x, y");
        let part = |n: &str| -> MultiPoly { num.coeffs_in(n).get(&1).cloned().unwrap_or_else(MultiPoly::zero) };
        let zero = MultiPoly::zero();
        let c0 = num.substitute("x", &zero).substitute("y", &zero);
        let div = |p: MultiPoly| RatFunc::from(p).checked_div(&den).expect("nonzero");
        LinearForm { cx: div(part("x")), cy: div(part("y")), c0: div(c0) }
    }

    pub fn eval(&self, x: &RatFunc, y: &RatFunc) -> RatFunc {
        &(&(&self.cx * x) + &(&self.cy * y)) + &self.c0
    }

    pub fn at(&self, d: &Rational) -> Result<[Rational; 3], AlgebraError> {
        Ok([self.cx.eval_at("d", d)?, self.cy.eval_at("d", d)?, self.c0.eval_at("d", d)?])
    }
}

/// Symbolic triangle: `y >= 0`, `c2(E) >= 0`, `c1(E).D >= 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FeasibleTriangle {
    pub constraints: [LinearForm; 3],
    /// `A` = lines 0, 1; `B` = lines 0, 2; `C` = lines 1, 2
    pub vertices: [(RatFunc, RatFunc); 3],
    pub vertex_residuals: [(RatFunc, RatFunc); 3],
    /// derived `c2(E)` and `c1(E).D` divided by the displayed forms
    pub constraint_ratios: [RatFunc; 2],
}

fn rf(p: MultiPoly) -> RatFunc {
    p.into()
}

fn frac(n: MultiPoly, d: MultiPoly) -> RatFunc {
    RatFunc::new(n, d).expect("nonzero denominator")
}

/// The displayed numerators of `c2(E) >= 0` and `c1(E).D >= 0`.
pub fn displayed_constraints() -> [MultiPoly; 2] {
    [
        dxy(&[
            (41160, 1, 1, 0),
            (-360640, 0, 1, 0),
            (-95, 2, 0, 1),
            (5005, 1, 0, 1),
            (-69440, 0, 0, 1),
            (-165, 4, 0, 0),
            (10390, 3, 0, 0),
            (-205070, 2, 0, 0),
            (1225840, 1, 0, 0),
        ]),
        dxy(&[
            (-190512, 1, 1, 0),
            (3035648, 0, 1, 0),
            (-18, 3, 0, 1),
            (670, 2, 0, 1),
            (-4004, 1, 0, 1),
            (-33152, 0, 0, 1),
            (882, 4, 0, 0),
            (-54684, 3, 0, 0),
            (1100736, 2, 0, 0),
            (-7112448, 1, 0, 0),
        ]),
    ]
}

fn dpoly(c: &[(i64, u32)]) -> MultiPoly {
    dxy(&c.iter().map(|&(a, e)| (a, e, 0, 0)).collect::<Vec<_>>())
}

/// The displayed vertices `A_d, B_d, C_d`.
pub fn displayed_vertices() -> [(RatFunc, RatFunc); 3] {
    let d = MultiPoly::var("d");
    let zero = RatFunc::zero();
    [
        (
            frac(&d * &dpoly(&[(33, 3), (-2078, 2), (41014, 1), (-245168, 0)]), dpoly(&[(8232, 1), (-72128, 0)])),
            zero.clone(),
        ),
        (
            frac((&d * &dpoly(&[(1, 3), (-62, 2), (1248, 1), (-8064, 0)])).scale(&qi(9)), dpoly(&[(1944, 1), (-30976, 0)])),
            zero,
        ),
        (
            frac(&d * &dpoly(&[(33, 3), (-2192, 2), (46900, 1), (-316064, 0)]), dpoly(&[(8232, 1), (-131712, 0)])),
            frac((&d * &dpoly(&[(69, 1), (-872, 0)])).scale(&qi(2)), dpoly(&[(21, 1), (-336, 0)])),
        ),
    ]
}

/// The displayed values of `g - 1` at `A_d, B_d, C_d`.
pub fn displayed_vertex_genus() -> [RatFunc; 3] {
    let d = MultiPoly::var("d");
    [
        frac(&d * &dpoly(&[(33, 2), (-293, 1), (-552, 0)]), dpoly(&[(588, 1), (-5152, 0)])),
        frac(&d * &dpoly(&[(63, 2), (-1320, 1), (5192, 0)]), dpoly(&[(972, 1), (-15488, 0)])),
        frac(&d * &dpoly(&[(33, 2), (-407, 1), (-1008, 0)]), dpoly(&[(588, 1), (-9408, 0)])),
    ]
}

fn solve2(a: &LinearForm, b: &LinearForm) -> Option<(RatFunc, RatFunc)> {
    let det = &(&a.cx * &b.cy) - &(&a.cy * &b.cx);
    if det.is_zero() {
        return None;
    }
    let x = (&(&a.cy * &b.c0) - &(&a.c0 * &b.cy)).checked_div(&det).ok()?;
    let y = (&(&a.c0 * &b.cx) - &(&a.cx * &b.c0)).checked_div(&det).ok()?;
    Some((x, y))
}

pub const VERTEX_PAIRS: [(usize, usize, usize); 3] = [(0, 1, 2), (0, 2, 1), (1, 2, 0)];

pub fn feasible_triangle_symbolic_from(inv: &BundleInvariants) -> FeasibleTriangle {
    let y = LinearForm { cx: RatFunc::zero(), cy: RatFunc::one(), c0: RatFunc::zero() };
    let c2e = LinearForm::from_ratfunc(&inv.c2e);
    // c1(E).D = 2 D.R - D^2/2
    let c1ed = &RatFunc::var("y").scale(&qi(2)) - &inv.solved["z"].scale(&q(1, 2));
    let c1ed_form = LinearForm::from_ratfunc(&c1ed);
    let [d2, d3] = displayed_constraints();
    let constraint_ratios = [
        inv.c2e.checked_div(&rf(d2)).expect("nonzero"),
        c1ed.checked_div(&rf(d3)).expect("nonzero"),
    ];
    let constraints = [y, c2e, c1ed_form];
    let vertices = VERTEX_PAIRS.map(|(i, j, _)| solve2(&constraints[i], &constraints[j]).expect("symbolic lines meet"));
    let disp = displayed_vertices();
    let vertex_residuals = [0, 1, 2].map(|k| (&vertices[k].0 - &disp[k].0, &vertices[k].1 - &disp[k].1));
    FeasibleTriangle { constraints, vertices, vertex_residuals, constraint_ratios }
}

pub fn feasible_triangle_symbolic() -> Result<FeasibleTriangle, BundleError> {
    Ok(feasible_triangle_symbolic_from(&solve_invariant_system()?))
}

/// `g - 1` at the three vertices.
pub fn vertex_genus(inv: &BundleInvariants, tri: &FeasibleTriangle) -> [RatFunc; 3] {
    tri.vertices.clone().map(|(x, y)| inv.genus_minus_1.substitute("x", &x).substitute("y", &y))
}

/// Sign of a rational function of `d` for all `d` beyond the returned
/// bound: the largest real root of `numer * denom`, or `None` if it has
/// none.
fn eventual_sign_bound(e: &RatFunc) -> Option<Rational> {
    let p = e.numer() * e.denom();
    let u = UniPoly::from_multi(&p, "d").expect("univariate in d");
    let sf = u.square_free();
    isolate_real_roots(&u).last().map(|(lo, hi)| refine_root(&sf, lo.clone(), hi.clone(), &q(1, 1000)).1)
}

fn leading_sign(e: &RatFunc) -> bool {
    let lc = |p: &MultiPoly| p.coeff(&[("d", p.degree_in("d"))]);
    (lc(e.numer()) * lc(e.denom())).is_positive()
}

/// Smallest integer `d0` such that for all `d >= d0`: `P(d) > 0`, each
/// vertex strictly satisfies the third constraint, and every denominator
/// in the vertex and genus displays is positive.
pub fn validity_threshold(tri: &FeasibleTriangle) -> Result<BigInt, BundleError> {
    let mut needs: Vec<RatFunc> = vec![p_of_d()];
    for (k, &(_, _, other)) in VERTEX_PAIRS.iter().enumerate() {
        let (x, y) = &tri.vertices[k];
        needs.push(tri.constraints[other].eval(x, y));
    }
    for (x, y) in displayed_vertices() {
        needs.push(RatFunc::from(x.denom().clone()));
        needs.push(RatFunc::from(y.denom().clone()));
    }
    for g in displayed_vertex_genus() {
        needs.push(RatFunc::from(g.denom().clone()));
    }
    let mut bound = Rational::zero();
    for e in &needs {
        if e.numer().degree_in("d") == 0 && e.denom().degree_in("d") == 0 {
            continue;
        }
        if !leading_sign(e) {
            return Err(BundleError::NotATriangle(Rational::zero()));
        }
        if let Some(b) = eventual_sign_bound(e) {
            bound = bound.max(b);
        }
    }
    Ok(bound.floor().to_integer() + 1)
}

/// The triangle at a numeric `d`, solved afresh from the numeric lines.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericTriangle {
    pub d: Rational,
    pub constraints: [[Rational; 3]; 3],
    pub vertices: [(Rational, Rational); 3],
}

impl NumericTriangle {
    pub fn contains(&self, x: &Rational, y: &Rational) -> bool {
        self.constraints.iter().all(|c| !(&c[0] * x + &c[1] * y + &c[2]).is_negative())
    }
}

pub fn feasible_triangle(d: &Rational) -> Result<NumericTriangle, BundleError> {
    let tri = feasible_triangle_symbolic()?;
    feasible_triangle_from(&tri, d)
}

pub fn feasible_triangle_from(tri: &FeasibleTriangle, d: &Rational) -> Result<NumericTriangle, BundleError> {
    let c = [tri.constraints[0].at(d)?, tri.constraints[1].at(d)?, tri.constraints[2].at(d)?];
    let mut vertices = Vec::new();
    for &(i, j, other) in &VERTEX_PAIRS {
        let (a, b) = (&c[i], &c[j]);
        let det = &a[0] * &b[1] - &a[1] * &b[0];
        if det.is_zero() {
            return Err(BundleError::DegenerateTriangle(i, j, d.clone()));
        }
        let x = (&a[1] * &b[2] - &a[2] * &b[1]) / &det;
        let y = (&a[2] * &b[0] - &a[0] * &b[2]) / &det;
        let slack = &c[other][0] * &x + &c[other][1] * &y + &c[other][2];
        if !slack.is_positive() {
            return Err(BundleError::NotATriangle(d.clone()));
        }
        vertices.push((x, y));
    }
    let vertices: [(Rational, Rational); 3] = vertices.try_into().expect("three vertices");
    Ok(NumericTriangle { d: d.clone(), constraints: c, vertices })
}

/// Extremes of `g - 1` over the triangle at `d`, attained at vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct GenusWindow {
    pub values: [Rational; 3],
    pub lower: Rational,
    pub upper: Rational,
    /// vertex indices of the extremes
    pub argmin: usize,
    pub argmax: usize,
}

pub fn genus_window_from(inv: &BundleInvariants, tri: &FeasibleTriangle, d: &Rational) -> Result<GenusWindow, BundleError> {
    let num = feasible_triangle_from(tri, d)?;
    let g = inv.genus_minus_1.substitute("d", &RatFunc::from(d.clone()));
    let values = num.vertices.clone().map(|(x, y)| {
        g.substitute("x", &x.into()).substitute("y", &y.into()).constant_value().expect("numeric")
    });
    let argmin = (0..3).min_by(|&a, &b| values[a].cmp(&values[b])).expect("three");
    let argmax = (0..3).max_by(|&a, &b| values[a].cmp(&values[b])).expect("three");
    Ok(GenusWindow { lower: values[argmin].clone(), upper: values[argmax].clone(), values, argmin, argmax })
}

pub fn genus_window(d: &Rational) -> Result<GenusWindow, BundleError> {
    let inv = solve_invariant_system()?;
    let tri = feasible_triangle_symbolic_from(&inv);
    genus_window_from(&inv, &tri, d)
}

/// `3d^3 - 8881d^2 - 29706d + 893872`.
pub fn displayed_cubic() -> UniPoly {
    UniPoly::from_ints("d", &[893872, -29706, -8881, 3])
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeBound {
    /// the cleared inequality `cubic <= 0`
    pub cubic: UniPoly,
    /// positive factor with `displayed = factor * cubic`
    pub factor: Rational,
    pub matches_display: bool,
    /// the cleared denominator is positive for `d > sign_assumption`
    pub sign_assumption: Rational,
    pub bound: BigInt,
    pub witness_at_bound: Rational,
    pub witness_above: Rational,
    /// first degree satisfying the curve-genus theorem's degree hypothesis
    pub ccd_threshold: BigInt,
    /// the alternative arm: octic containment needs `8^2 <= d`
    pub octic_sigma: i64,
}

/// Lower vertex genus against the curve-genus bound for `s = 9, n = 3`.
pub fn degree_bound_from(lower_genus: &RatFunc) -> Result<DegreeBound, BundleError> {
    let ccd = RatFunc::from(ccd_genus_bound_symbolic(9, 3));
    let diff = lower_genus - &ccd;
    let den = UniPoly::from_multi(diff.denom(), "d").expect("univariate");
    let num = UniPoly::from_multi(diff.numer(), "d").expect("univariate");
    let roots = isolate_real_roots(&den);
    let sign_assumption = match (den.degree(), roots.last()) {
        (Some(1), _) => -den.coeff(0) / den.coeff(1),
        (_, Some((_, hi))) => hi.clone(),
        _ => Rational::zero(),
    };
    let num = if den.leading_coeff().is_positive() { num } else { num.scale(&qi(-1)) };
    let disp = displayed_cubic();
    let factor = disp.leading_coeff() / num.leading_coeff();
    let matches_display = factor.is_positive() && num.scale(&factor) == disp;
    let bound = max_integer_where_nonpositive(&num, &BigInt::zero())?;
    let b = Rational::from_integer(bound.clone());
    Ok(DegreeBound {
        witness_at_bound: disp.eval(&b),
        witness_above: disp.eval(&(b + Rational::one())),
        cubic: num,
        factor,
        matches_display,
        sign_assumption,
        bound,
        ccd_threshold: ccd_threshold(9, 3),
        octic_sigma: 8,
    })
}

pub fn degree_bound_p7() -> Result<DegreeBound, BundleError> {
    let inv = solve_invariant_system()?;
    let tri = feasible_triangle_symbolic_from(&inv);
    degree_bound_from(&vertex_genus(&inv, &tri)[0])
}

/// Smallest integer `d` for which the degree hypothesis holds.
pub fn ccd_threshold(s: i64, n: u32) -> BigInt {
    let ok = |d: &BigInt| ccd_applicability(&Rational::from_integer(d.clone()), s, n).applicable;
    let mut hi = BigInt::one();
    while !ok(&hi) {
        hi *= 2;
    }
    let mut lo = BigInt::zero();
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) / 2;
        if ok(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// A curve section in a surface of degree `sigma` lifts to X when
/// `sigma^2 <= d`.
pub fn roth_hypothesis(sigma: i64, d: &BigInt) -> bool {
    BigInt::from(sigma * sigma) <= *d
}

/// Leading constants for an `(n+1)`-fold in `P^{2n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralN {
    pub a: Rational,
    pub b: Rational,
    pub fold_degree: BigInt,
    /// `A > 1/(2s)` with `s = fold_degree + 1`
    pub gate: bool,
}

pub fn general_n(n: u32) -> GeneralN {
    assert!(n >= 2, "need n >= 2");
    let n = BigInt::from(n);
    let sq = &n * 4u32 * &n + &n * 4u32 + 1u32;
    let a = Rational::new(BigInt::from(3) * (&n * 4u32 - 1u32), &n * (&n + 1u32) * &sq);
    let b = Rational::new(
        BigInt::from(3) * (&n * 2u32 + 1u32),
        (&n + 1u32) * (&n * &n * &n * 2u32 + &n * &n * 2u32 + &n * 2u32 + 3u32),
    );
    let fold_degree = (&n * (&n + 1u32) * &sq).div_floor(&(BigInt::from(6) * (&n * 4u32 - 1u32)));
    let s = Rational::from_integer(&fold_degree + 1u32);
    let gate = a > Rational::one() / (s * qi(2));
    GeneralN { a, b, fold_degree, gate }
}

/// Leading coefficient of a rational function of `d` growing like `d^2`.
pub fn quadratic_growth(e: &RatFunc) -> Option<Rational> {
    let (n, m) = (e.numer(), e.denom());
    let (dn, dm) = (n.degree_in("d"), m.degree_in("d"));
    (dn == dm + 2).then(|| n.coeff(&[("d", dn)]) / m.coeff(&[("d", dm)]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (BundleInvariants, FeasibleTriangle) {
        let inv = solve_invariant_system().unwrap();
        let tri = feasible_triangle_symbolic_from(&inv);
        (inv, tri)
    }

    #[test]
    fn triangle_matches_display() {
        let (inv, tri) = setup();
        for (rx, ry) in &tri.vertex_residuals {
            assert!(rx.is_zero() && ry.is_zero());
        }
        assert!(tri.vertices[0].1.is_zero() && tri.vertices[1].1.is_zero());
        let p = p_of_d();
        assert_eq!(tri.constraint_ratios[0], p.scale(&q(1, 4)));
        assert_eq!(tri.constraint_ratios[1], p.scale(&q(1, 2)));
        let g = vertex_genus(&inv, &tri);
        for (a, b) in g.iter().zip(displayed_vertex_genus()) {
            assert_eq!(a, &b);
        }
    }

    #[test]
    fn validity_from_23() {
        let (_, tri) = setup();
        assert_eq!(validity_threshold(&tri).unwrap(), BigInt::from(23));
        assert!(feasible_triangle_from(&tri, &qi(23)).is_ok());
        // at d = 22 the displayed numerators carry the opposite sense
        assert!(p_of_d().eval_at("d", &qi(22)).unwrap().is_negative());
    }

    #[test]
    fn window_at_100() {
        let (inv, tri) = setup();
        let w = genus_window_from(&inv, &tri, &qi(100)).unwrap();
        assert_eq!((w.argmin, w.argmax), (0, 1));
        let disp = displayed_vertex_genus();
        assert_eq!(w.lower, disp[0].eval_at("d", &qi(100)).unwrap());
        assert_eq!(w.upper, disp[1].eval_at("d", &qi(100)).unwrap());
    }

    #[test]
    fn interior_points_inside_window() {
        let (inv, tri) = setup();
        let d = qi(500);
        let num = feasible_triangle_from(&tri, &d).unwrap();
        let w = genus_window_from(&inv, &tri, &d).unwrap();
        let g = inv.genus_minus_1.substitute("d", &RatFunc::from(d));
        for i in 0..=10i64 {
            for j in 0..=(10 - i) {
                let (a, b, c) = (q(i, 10), q(j, 10), q(10 - i - j, 10));
                let x = &a * &num.vertices[0].0 + &b * &num.vertices[1].0 + &c * &num.vertices[2].0;
                let y = &a * &num.vertices[0].1 + &b * &num.vertices[1].1 + &c * &num.vertices[2].1;
                assert!(num.contains(&x, &y));
                let val = g.substitute("x", &x.into()).substitute("y", &y.into()).constant_value().unwrap();
                assert!(w.lower <= val && val <= w.upper);
            }
        }
    }

    #[test]
    fn cubic_and_bound() {
        let b = degree_bound_p7().unwrap();
        assert!(b.matches_display);
        assert_eq!(b.sign_assumption, q(184, 21));
        assert_eq!(b.bound, BigInt::from(2963));
        assert!(b.witness_at_bound.is_negative() && b.witness_above.is_positive());
        assert_eq!(b.ccd_threshold, BigInt::from(3572));
        assert!(roth_hypothesis(8, &BigInt::from(64)) && !roth_hypothesis(8, &BigInt::from(63)));
    }

    #[test]
    fn general_n_three() {
        let g = general_n(3);
        assert_eq!(g, GeneralN { a: q(11, 196), b: q(7, 108), fold_degree: BigInt::from(8), gate: true });
        let disp = displayed_vertex_genus();
        assert_eq!(quadratic_growth(&disp[0]), Some(q(33, 588)));
        assert_eq!(quadratic_growth(&disp[1]), Some(q(63, 972)));
    }

    #[test]
    fn general_n_two() {
        // 2*3*25 / (6*7) = 150/42
        assert_eq!(general_n(2).fold_degree, BigInt::from(3));
    }
}
