use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use thiserror::Error;

use super::inequalities::{case_split_form, cubic_e, gm1, hodge_b_rhs, k, sum, v};
use crate::algebra::{q, qi, MultiPoly, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GateError {
    #[error("case mismatch: 2g - 2 - 3d = {0} is not positive")]
    CaseMismatch(Rational),
}

/// Upper bound on `x` from the `s_4` inequality and `v <= 2s - x`:
/// `360x <= (760 - 9d)s/2 - E/48`.
pub fn x_upper_bound() -> MultiPoly {
    let d = v("d");
    (&(&v("s") * &(&k(760) - &(&d * &k(9)))).scale(&q(1, 2)) - &cubic_e().scale(&q(1, 48))).scale(&q(1, 360))
}

/// `(2g-2-3d)` times the quadratic in `s`, re-derived:
/// `15 (rhs_b + 24 (2g-2-3d) x_upper)`.
pub fn quadratic_in_s() -> MultiPoly {
    (&hodge_b_rhs() + &(&(&case_split_form() * &k(24)) * &x_upper_bound())).scale(&qi(15))
}

/// The quadratic as displayed, times `2g-2-3d`.
pub fn quadratic_in_s_displayed() -> MultiPoly {
    let (d, g, s) = (v("d"), v("g"), v("s"));
    let lin = sum(&[&d.pow(2) * &k(117), &(&d * &k(-6)) * &(&(&g * &k(3)) + &k(707)), &gm1() * &k(80)]);
    let cub = sum(&[
        &(-&d.pow(3)) * &(&g + &k(2078)),
        &(&d.pow(2) * &k(6)) * &(&(&g * &k(229)) + &k(2842)),
        &(&(&d * &k(304)) * &(&k(1) - &g)) * &(&(&g * &k(3)) + &k(23)),
    ]);
    sum(&[
        &s.pow(2) * &k(540),
        (&lin * &s).scale(&q(1, 2)),
        d.pow(4),
        cub.scale(&q(1, 24)),
        &gm1().pow(2) * &k(76),
    ])
}

/// `b = -117d^2 + 6d(3g+707) - 80(g-1)`.
pub fn b_displayed() -> MultiPoly {
    let (d, g) = (v("d"), v("g"));
    sum(&[&d.pow(2) * &k(-117), &(&d * &k(6)) * &(&(&g * &k(3)) + &k(707)), &gm1() * &k(-80)])
}

/// `L = 5049d^4 - 36d^3(107g+6793) + 36d^2(9g^2-8978g+328809)
/// + 960d(g-1)(339g+1915) - 6560000(g-1)^2`.
pub fn l_displayed() -> MultiPoly {
    let (d, g) = (v("d"), v("g"));
    sum(&[
        &d.pow(4) * &k(5049),
        &(&d.pow(3) * &k(-36)) * &(&(&g * &k(107)) + &k(6793)),
        &(&d.pow(2) * &k(36)) * &sum(&[&g.pow(2) * &k(9), &g * &k(-8978), k(328809)]),
        &(&(&d * &k(960)) * &gm1()) * &(&(&g * &k(339)) + &k(1915)),
        &gm1().pow(2) * &k(-6560000),
    ])
}

/// `(b, L)` with roots `s = (b +- sqrt L)/2160` of `quadratic_in_s`.
pub fn b_and_l_derived() -> (MultiPoly, MultiPoly) {
    let quad = quadratic_in_s();
    let parts = quad.coeffs_in("s");
    let lead = parts.get(&2).and_then(|p| p.constant_value()).expect("constant s^2 coefficient");
    assert_eq!(lead, qi(540));
    let b = parts.get(&1).cloned().unwrap_or_else(MultiPoly::zero).scale(&qi(-2));
    let c0 = parts.get(&0).cloned().unwrap_or_else(MultiPoly::zero);
    let l = &b.pow(2) - &(&c0 * &k(8640));
    (b, l)
}

/// Which part of the `s`-line a value falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SBranch {
    /// `s >= (b + sqrt L)/2160`
    Lower,
    /// `s <= (b - sqrt L)/2160`
    Upper,
    /// strictly between the roots: excluded
    Empty,
    /// `L < 0`: every `s` is admissible
    All,
    /// `L >= 0`: either `Lower` or `Upper`
    Split,
}

/// Closed rational interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

impl Enclosure {
    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Enclosure of `sqrt(x)` for `x >= 0` of width at most `2^-bits`
/// (exact when `x` is a rational square).
pub fn sqrt_enclosure(x: &Rational, bits: u32) -> Enclosure {
    assert!(!x.is_negative(), "square root of a negative number");
    let (p, qd) = (x.numer().clone(), x.denom().clone());
    let scale = BigInt::from(1) << bits;
    let n = &p * &qd * &scale * &scale;
    let r = n.sqrt();
    let den = &qd * &scale;
    if &r * &r == n {
        let e = Rational::new(r, den);
        return Enclosure { lo: e.clone(), hi: e };
    }
    Enclosure { lo: Rational::new(r.clone(), den.clone()), hi: Rational::new(r + 1, den) }
}

/// The admissible region for `s` at numeric `(d, g)` in case 2.
#[derive(Clone, Debug, PartialEq)]
pub struct SWindow {
    pub b: Rational,
    pub l: Rational,
    pub branch: SBranch,
    /// enclosures of `(b - sqrt L)/2160` and `(b + sqrt L)/2160`
    pub roots: Option<(Enclosure, Enclosure)>,
    /// the quadratic changes sign across each enclosure
    pub brackets_ok: bool,
}

impl SWindow {
    pub fn classify(&self, s: &Rational) -> SBranch {
        match &self.roots {
            None => SBranch::All,
            Some((small, big)) => {
                if s <= &small.lo {
                    SBranch::Upper
                } else if s >= &big.hi {
                    SBranch::Lower
                } else {
                    SBranch::Empty
                }
            }
        }
    }
}

fn eval_dg(p: &MultiPoly, d: &Rational, g: &Rational) -> MultiPoly {
    p.substitute("d", &MultiPoly::constant(d.clone())).substitute("g", &MultiPoly::constant(g.clone()))
}

pub fn s_window(d: &Rational, g: &Rational) -> Result<SWindow, GateError> {
    let m = qi(2) * g - qi(2) - qi(3) * d;
    if !m.is_positive() {
        return Err(GateError::CaseMismatch(m));
    }
    let (bp, lp) = b_and_l_derived();
    let b = eval_dg(&bp, d, g).constant_value().expect("numeric");
    let l = eval_dg(&lp, d, g).constant_value().expect("numeric");
    if l.is_negative() {
        return Ok(SWindow { b, l, branch: SBranch::All, roots: None, brackets_ok: true });
    }
    let quad = eval_dg(&quadratic_in_s(), d, g);
    let at = |s: &Rational| quad.substitute("s", &MultiPoly::constant(s.clone())).constant_value().expect("numeric");
    let root = sqrt_enclosure(&l, 64);
    let den = qi(2160);
    let small = Enclosure { lo: (&b - &root.hi) / &den, hi: (&b - &root.lo) / &den };
    let big = Enclosure { lo: (&b + &root.lo) / &den, hi: (&b + &root.hi) / &den };
    // positive leading coefficient: >= 0 outside the roots, <= 0 between them
    let sign = |x: Rational| x.sign();
    let brackets_ok = sign(at(&small.lo)) != Sign::Minus
        && sign(at(&small.hi)) != Sign::Plus
        && sign(at(&big.lo)) != Sign::Plus
        && sign(at(&big.hi)) != Sign::Minus;
    Ok(SWindow { b, l, branch: SBranch::Split, roots: Some((small, big)), brackets_ok })
}

trait RationalSign {
    fn sign(&self) -> Sign;
}

impl RationalSign for Rational {
    fn sign(&self) -> Sign {
        if self.is_zero() {
            Sign::NoSign
        } else if self.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_and_l_match_display() {
        let (b, l) = b_and_l_derived();
        assert_eq!(b, b_displayed());
        assert_eq!(l, l_displayed());
        assert_eq!(l.coeff(&[("d", 4)]), qi(5049));
    }

    #[test]
    fn displayed_constant_off_by_684() {
        // the printed 76 (g-1)^2 should read 760 (g-1)^2
        let r = &quadratic_in_s() - &quadratic_in_s_displayed();
        assert_eq!(r, &gm1().pow(2) * &k(684));
    }

    #[test]
    fn case_mismatch() {
        assert!(matches!(s_window(&qi(10), &qi(6)), Err(GateError::CaseMismatch(_))));
    }

    #[test]
    fn windows() {
        let w = s_window(&qi(20), &qi(200)).unwrap();
        assert!(w.brackets_ok);
        let w2 = s_window(&qi(10), &qi(17)).unwrap();
        assert!(w2.brackets_ok);
    }

    #[test]
    fn sqrt_enclosures() {
        let e = sqrt_enclosure(&qi(2), 20);
        assert!(&e.lo * &e.lo <= qi(2) && &e.hi * &e.hi >= qi(2));
        assert_eq!(sqrt_enclosure(&q(9, 4), 8), Enclosure { lo: q(3, 2), hi: q(3, 2) });
    }
}
