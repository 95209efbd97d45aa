use std::collections::BTreeMap;

use super::chern::{c3_identity, c4_identity, chern_x_total};
use crate::algebra::{
    q, qi, solve_linear_system_ordered, substitute_poly, AlgebraError, MultiPoly, PivotOrder, RatFunc,
};
use crate::chow::{bundle_x_context, c2e_on_fourfold, BundleClasses, CycleClass};

/// Unknown base intersection numbers: `f = c2(B)`, `t = K_B.D`,
/// `u = K_B.R`, `v = R^2`, `z = D^2`.
pub const UNKNOWNS: [&str; 5] = ["f", "t", "u", "v", "z"];

/// `sum c d^i x^j y^k` from `(c, i, j, k)`.
pub(crate) fn dxy(terms: &[(i64, u32, u32, u32)]) -> MultiPoly {
    MultiPoly::from_terms(
        &["d", "x", "y"],
        terms.iter().map(|&(c, i, j, k)| (vec![i, j, k], qi(c))),
    )
}

/// `9d^3 - 50d^2 - 10949d + 169120`.
pub fn p_denominator() -> MultiPoly {
    dxy(&[(9, 3, 0, 0), (-50, 2, 0, 0), (-10949, 1, 0, 0), (169120, 0, 0, 0)])
}

/// `P(d) = 1 / (9d^3 - 50d^2 - 10949d + 169120)`.
pub fn p_of_d() -> RatFunc {
    RatFunc::new(MultiPoly::one(), p_denominator()).expect("nonzero")
}

fn times_p(c: crate::algebra::Rational, bracket: MultiPoly) -> RatFunc {
    RatFunc::new(bracket.scale(&c), p_denominator()).expect("nonzero")
}

/// The displayed solution, in the order of `UNKNOWNS`.
pub fn displayed_solution() -> [RatFunc; 5] {
    let f = dxy(&[
        (9, 5, 0, 0),
        (-328, 4, 0, 0),
        (144, 3, 1, 0),
        (3, 3, 0, 1),
        (3036, 3, 0, 0),
        (-173, 2, 0, 1),
        (-37416, 2, 0, 0),
        (712, 2, 1, 0),
        (2608, 1, 0, 1),
        (-102048, 1, 1, 0),
        (728896, 1, 0, 0),
        (675584, 0, 1, 0),
        (-8576, 0, 0, 1),
    ]);
    let t = dxy(&[
        (-63, 5, 0, 0),
        (5292, 4, 0, 0),
        (-164556, 3, 0, 0),
        (-33, 3, 0, 1),
        (2237760, 2, 0, 0),
        (13608, 2, 1, 0),
        (2703, 2, 0, 1),
        (-11176704, 1, 0, 0),
        (-71880, 1, 0, 1),
        (-516208, 1, 1, 0),
        (624384, 0, 0, 1),
        (4770304, 0, 1, 0),
    ]);
    let u = dxy(&[
        (-175392, 1, 1, 0),
        (1722, 4, 0, 0),
        (696696, 2, 0, 0),
        (-22686, 1, 0, 1),
        (-52332, 3, 0, 0),
        (-11, 3, 0, 1),
        (-21, 5, 0, 0),
        (879, 2, 0, 1),
        (3864, 2, 1, 0),
        (1983744, 0, 1, 0),
        (-3415104, 1, 0, 0),
        (190784, 0, 0, 1),
    ]);
    let v = dxy(&[
        (-192864, 0, 1, 0),
        (2842, 3, 0, 0),
        (332024, 1, 0, 0),
        (-70224, 0, 0, 1),
        (-53900, 2, 0, 0),
        (-15, 2, 0, 1),
        (-49, 4, 0, 0),
        (4974, 1, 0, 1),
        (-3, 3, 0, 1),
        (9016, 1, 1, 0),
    ]);
    let z = dxy(&[
        (-882, 4, 0, 0),
        (54, 3, 0, 1),
        (54684, 3, 0, 0),
        (-870, 2, 0, 1),
        (-1100736, 2, 0, 0),
        (190512, 1, 1, 0),
        (-39792, 1, 0, 1),
        (7112448, 1, 0, 0),
        (-3035648, 0, 1, 0),
        (709632, 0, 0, 1),
    ]);
    [times_p(q(1, 16), f), times_p(q(-1, 4), t), times_p(q(-1, 8), u), times_p(q(-1, 2), v), times_p(qi(1), z)]
}

/// The five equations as polynomials in `d, x, y` and the unknowns.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSystem {
    pub equations: Vec<MultiPoly>,
    pub matrix: Vec<Vec<RatFunc>>,
    pub rhs: Vec<RatFunc>,
}

/// The `c3` identity cut with `H, R, K_B, D` and the `c4` identity.
pub fn invariant_system() -> InvariantSystem {
    let ctx = bundle_x_context();
    let b = BundleClasses::new(&ctx);
    let cx = chern_x_total(&ctx).classes();
    let z3 = c3_identity(&b.h, &cx);
    let int = |c: CycleClass| -> MultiPoly {
        c.integrate().expect("top grade").as_polynomial().expect("polynomial integrand")
    };
    let equations: Vec<MultiPoly> = [&b.h, &b.r, &b.kb, &b.d]
        .iter()
        .map(|cut| int(&z3 * *cut))
        .chain(std::iter::once(int(c4_identity(&b.h, &cx))))
        .collect();
    let zero = MultiPoly::zero();
    let mut matrix = Vec::new();
    let mut rhs = Vec::new();
    for e in &equations {
        let row: Vec<RatFunc> = UNKNOWNS
            .iter()
            .map(|n| {
                assert!(e.degree_in(n) <= 1, "equation not linear in {n}");
                e.coeffs_in(n).get(&1).cloned().unwrap_or_else(MultiPoly::zero).into()
            })
            .collect();
        let c0 = UNKNOWNS.iter().fold(e.clone(), |p, n| p.substitute(n, &zero));
        matrix.push(row);
        rhs.push(RatFunc::from(-c0));
    }
    InvariantSystem { equations, matrix, rhs }
}

/// Determinant by permutation expansion.
pub fn determinant(m: &[Vec<RatFunc>]) -> RatFunc {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut acc = RatFunc::zero();
    loop {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = RatFunc::one();
        for (i, &j) in perm.iter().enumerate() {
            term = &term * &m[i][j];
            if term.is_zero() {
                break;
            }
        }
        acc = if inversions % 2 == 0 { &acc + &term } else { &acc - &term };
        if !next_permutation(&mut perm) {
            return acc;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Cramer's rule, independent of the elimination code.
pub fn cramer_solution(sys: &InvariantSystem) -> Result<Vec<RatFunc>, AlgebraError> {
    let det = determinant(&sys.matrix);
    if det.is_zero() {
        return Err(AlgebraError::SingularSystem);
    }
    (0..sys.matrix.len())
        .map(|j| {
            let mj: Vec<Vec<RatFunc>> = sys
                .matrix
                .iter()
                .zip(&sys.rhs)
                .map(|(row, b)| row.iter().enumerate().map(|(k, a)| if k == j { b.clone() } else { a.clone() }).collect())
                .collect();
            determinant(&mj).checked_div(&det)
        })
        .collect()
}

/// Substitutes solved unknowns into a polynomial.
pub fn substitute_solution(p: &MultiPoly, solved: &BTreeMap<String, RatFunc>) -> RatFunc {
    let mut it = solved.iter();
    let Some((n0, v0)) = it.next() else {
        return p.clone().into();
    };
    it.fold(substitute_poly(p, n0, v0), |acc, (n, v)| acc.substitute(n, v))
}

/// The solved system and its audits.
#[derive(Clone, Debug, PartialEq)]
pub struct BundleInvariants {
    pub solved: BTreeMap<String, RatFunc>,
    pub p: RatFunc,
    pub c2e: RatFunc,
    pub genus_minus_1: RatFunc,
    /// each equation with the solution substituted
    pub backsub_residuals: Vec<RatFunc>,
    /// solution minus display, per unknown
    pub display_residuals: BTreeMap<String, RatFunc>,
    pub second_order_agrees: bool,
    pub cramer_agrees: bool,
    /// determinant divided by `9d^3 - 50d^2 - 10949d + 169120`
    pub determinant_ratio: RatFunc,
}

pub fn solve_invariant_system() -> Result<BundleInvariants, AlgebraError> {
    let sys = invariant_system();
    let first = solve_linear_system_ordered(&sys.matrix, &sys.rhs, PivotOrder::Natural)?;
    let second = solve_linear_system_ordered(&sys.matrix, &sys.rhs, PivotOrder::Reversed)?;
    let cramer = cramer_solution(&sys)?;
    let solved: BTreeMap<String, RatFunc> = UNKNOWNS.iter().map(|n| n.to_string()).zip(first.iter().cloned()).collect();
    let backsub_residuals = sys.equations.iter().map(|e| substitute_solution(e, &solved)).collect();
    let display_residuals = UNKNOWNS
        .iter()
        .zip(displayed_solution())
        .map(|(n, disp)| (n.to_string(), &solved[*n] - &disp))
        .collect();
    let det = determinant(&sys.matrix);
    let gc = genus_and_c2e_from(&solved);
    Ok(BundleInvariants {
        p: p_of_d(),
        c2e: gc.c2e,
        genus_minus_1: gc.g_minus_1,
        backsub_residuals,
        display_residuals,
        second_order_agrees: first == second,
        cramer_agrees: first == cramer,
        determinant_ratio: det.checked_div(&p_denominator().into())?,
        solved,
    })
}

/// `c2(E) = (1/4) P(d) [...]`.
pub fn c2e_displayed() -> RatFunc {
    let b = dxy(&[
        (41160, 1, 1, 0),
        (-360640, 0, 1, 0),
        (-95, 2, 0, 1),
        (5005, 1, 0, 1),
        (-69440, 0, 0, 1),
        (-165, 4, 0, 0),
        (10390, 3, 0, 0),
        (-205070, 2, 0, 0),
        (1225840, 1, 0, 0),
    ]);
    times_p(q(1, 4), b)
}

/// `g - 1 = (1/8) P(d) [...]`.
pub fn genus_displayed() -> RatFunc {
    let b = dxy(&[
        (1008, 2, 1, 0),
        (-49112, 1, 1, 0),
        (566720, 0, 1, 0),
        (223, 2, 0, 1),
        (-9857, 1, 0, 1),
        (109120, 0, 0, 1),
        (393, 4, 0, 0),
        (-21032, 3, 0, 0),
        (353440, 2, 0, 0),
        (-1781360, 1, 0, 0),
    ]);
    times_p(q(1, 8), b)
}

/// `g - 1 = (K_X + 3H).H^3 / 2` in the bundle ring.
pub fn genus_minus_1_in_base() -> MultiPoly {
    let ctx = bundle_x_context();
    let b = BundleClasses::new(&ctx);
    let e = (&(&b.k + &b.h.scale(&RatFunc::int(3))) * &b.h.pow(3)).integrate().expect("top grade");
    e.as_polynomial().expect("polynomial").scale(&q(1, 2))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GenusC2E {
    pub c2e: RatFunc,
    pub g_minus_1: RatFunc,
    pub c2e_residual: RatFunc,
    pub g_residual: RatFunc,
}

fn genus_and_c2e_from(solved: &BTreeMap<String, RatFunc>) -> GenusC2E {
    let c2e = substitute_solution(&c2e_on_fourfold(), solved);
    let g_minus_1 = substitute_solution(&genus_minus_1_in_base(), solved);
    GenusC2E {
        c2e_residual: &c2e - &c2e_displayed(),
        g_residual: &g_minus_1 - &genus_displayed(),
        c2e,
        g_minus_1,
    }
}

pub fn genus_and_c2e() -> Result<GenusC2E, AlgebraError> {
    let sys = invariant_system();
    let sol = solve_linear_system_ordered(&sys.matrix, &sys.rhs, PivotOrder::Natural)?;
    let solved = UNKNOWNS.iter().map(|n| n.to_string()).zip(sol).collect();
    Ok(genus_and_c2e_from(&solved))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv() -> BundleInvariants {
        solve_invariant_system().unwrap()
    }

    #[test]
    fn p_at_20() {
        assert_eq!(p_of_d().eval_at("d", &qi(20)).unwrap(), q(1, 2140));
    }

    #[test]
    fn discriminant_cut_equation() {
        // -72 R.D + 11 D^2 + 3d R.D - d D^2/2 - 28 K_B.D, up to sign
        let sys = invariant_system();
        let disp = &dxy(&[(-72, 0, 0, 1), (3, 1, 0, 1)])
            + &(&(&MultiPoly::var("z") * &(&MultiPoly::int(11) - &MultiPoly::var("d").scale(&q(1, 2))))
                - &MultiPoly::var("t").scale(&qi(28)));
        assert_eq!(sys.equations[3], -disp);
    }

    #[test]
    fn solution_audits() {
        let s = inv();
        assert!(s.backsub_residuals.iter().all(|r| r.is_zero()));
        for (n, r) in &s.display_residuals {
            assert!(r.is_zero(), "{n}: {r}");
        }
        assert!(s.second_order_agrees && s.cramer_agrees);
        assert!(s.determinant_ratio.constant_value().is_some());
        assert!(!s.determinant_ratio.is_zero());
    }

    #[test]
    fn genus_and_c2e_match() {
        let g = genus_and_c2e().unwrap();
        assert!(g.c2e_residual.is_zero() && g.g_residual.is_zero());
        // 8(g-1)/P is linear in x with the displayed coefficient
        let scaled = (&g.g_minus_1.scale(&qi(8)) * &RatFunc::from(p_denominator())).as_polynomial().unwrap();
        assert_eq!(scaled.degree_in("x"), 1);
        assert_eq!(scaled.coeffs_in("x")[&1], dxy(&[(1008, 2, 0, 0), (-49112, 1, 0, 0), (566720, 0, 0, 0)]));
        assert_eq!(scaled.degree_in("y"), 1);
    }

    #[test]
    fn determinant_of_permutation_matrix() {
        let one = RatFunc::one;
        let z = RatFunc::zero;
        let m = vec![vec![z(), one(), z()], vec![one(), z(), z()], vec![z(), z(), one()]];
        assert_eq!(determinant(&m), RatFunc::int(-1));
    }
}
