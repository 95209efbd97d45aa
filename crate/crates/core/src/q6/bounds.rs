use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{binomial, q, qi, MultiPoly, RatFunc, Rational};

/// Exact verdict on the degree hypothesis
/// `d > 2s/(n-1) * prod_{i=1}^{n-1} (n! s)^{1/(n-i)}`, decided by comparing
/// `d^L` with the `L`-th power of the right side, `L = lcm(1..n-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CcdApplicability {
    pub applicable: bool,
    pub exponent: u32,
    pub lhs_power: Rational,
    pub rhs_power: Rational,
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * BigInt::from(k))
}

pub fn ccd_applicability(d: &Rational, s: i64, n: u32) -> CcdApplicability {
    assert!(n >= 2 && s >= 1, "need n >= 2 and s >= 1");
    let l = (1..n).fold(1u32, |a, k| a.lcm(&k));
    let base = Rational::from_integer(factorial(n) * BigInt::from(s));
    let mut rhs = (qi(2 * s) / qi(n as i64 - 1)).pow(l as i32);
    for i in 1..n {
        rhs *= base.pow((l / (n - i)) as i32);
    }
    let lhs = if d.is_positive() { d.pow(l as i32) } else { Rational::zero() };
    CcdApplicability { applicable: d.is_positive() && lhs > rhs, exponent: l, lhs_power: lhs, rhs_power: rhs }
}

/// Five-term bound on `g - 1` for a curve in `P^{n+1}` not on surfaces of
/// degree `< s`, as a polynomial in `d`.
pub fn ccd_genus_bound_symbolic(s: i64, n: i64) -> MultiPoly {
    assert!(n >= 2 && s >= 1, "need n >= 2 and s >= 1");
    let d = MultiPoly::var("d");
    let one = MultiPoly::one();
    let k = |x: i64| MultiPoly::int(x);
    let terms = [
        (&d * &(&d - &one)).scale(&q(1, 2 * s)),
        (&d * &k(s - 2 * n + 1)).scale(&q(1, 2 * (n - 1))),
        (&(&d + &k(s - 1)) * &k(s - 1)).scale(&q(1, 2 * s)),
        (&(&d - &one) * &k((n - 2) * (s + n - 2))).scale(&q(1, 2 * s * (n - 1))),
        k((s - 1) * (s - 1)).scale(&q(1, 2 * (n - 1))),
    ];
    terms.iter().fold(MultiPoly::zero(), |a, b| &a + b)
}

/// Formula value at `d` with its applicability verdict; the value is
/// returned even when the hypothesis fails.
pub fn ccd_genus_bound(d: &Rational, s: i64, n: u32) -> (Rational, CcdApplicability) {
    let p = ccd_genus_bound_symbolic(s, n as i64);
    let val = p.substitute("d", &MultiPoly::constant(d.clone())).constant_value().expect("numeric");
    (val, ccd_applicability(d, s, n))
}

/// `d^2/(2k) + (k-4) d/2`, bounding `g - 1` in `Q_3`.
pub fn q3_genus_bound_symbolic(k: i64) -> MultiPoly {
    assert!(k >= 1, "k must be positive");
    let d = MultiPoly::var("d");
    &d.pow(2).scale(&q(1, 2 * k)) + &d.scale(&q(k - 4, 2))
}

pub fn q3_genus_bound(d: &Rational, k: i64) -> Rational {
    q3_genus_bound_symbolic(k)
        .substitute("d", &MultiPoly::constant(d.clone()))
        .constant_value()
        .expect("numeric")
}

/// Harris' bound `C(M, k+1)(n-k) + C(M, k) eps` for a `k`-dimensional
/// variety of degree `d` in `P^n`.
pub fn castelnuovo_pg_bound(d: &BigInt, n: u32, k: u32) -> BigInt {
    assert!(d >= &BigInt::one() && k >= 1 && k < n, "need d >= 1 and 1 <= k < n");
    let nk = BigInt::from(n - k);
    let m = (d - 1u32).div_floor(&nk);
    let eps = d - 1u32 - &m * &nk;
    binomial(&m, k + 1) * &nk + binomial(&m, k) * eps
}

/// Leading coefficient in `d` of the Harris bound: `1/((k+1)! (n-k)^k)`.
pub fn castelnuovo_leading_coefficient(n: u32, k: u32) -> Rational {
    let nk = BigInt::from(n - k);
    Rational::new(BigInt::one(), factorial(k + 1) * nk.pow(k))
}

/// `1/(192 sigma^3)`, the corrected leading coefficient of `-chi(O_X3)`.
pub fn dec_leading_coefficient(sigma: i64) -> Rational {
    assert!(sigma >= 1, "sigma must be positive");
    Rational::new(BigInt::one(), BigInt::from(192) * BigInt::from(sigma).pow(3))
}

pub fn dec_leading_coefficient_symbolic() -> RatFunc {
    RatFunc::new(MultiPoly::one(), MultiPoly::var("sigma").pow(3).scale(&qi(192))).expect("nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ccd_specialisation() {
        let p = ccd_genus_bound_symbolic(9, 3);
        let d = MultiPoly::var("d");
        let expect = &(&d.pow(2).scale(&q(1, 18)) + &d.scale(&q(5, 3))) + &MultiPoly::constant(q(347, 18));
        assert_eq!(p, expect);
        // 10000/18 + 500/3 + 347/18 = 13347/18
        assert_eq!(ccd_genus_bound(&qi(100), 9, 3).0, q(1483, 2));
    }

    #[test]
    fn ccd_s1_leading() {
        let p = ccd_genus_bound_symbolic(1, 3);
        assert_eq!(p.degree_in("d"), 2);
        assert_eq!(p.coeff(&[("d", 2)]), q(1, 2));
    }

    #[test]
    fn ccd_threshold_s9_n3() {
        // 486 sqrt(54) is about 3571.36
        assert!(!ccd_applicability(&qi(3571), 9, 3).applicable);
        assert!(ccd_applicability(&qi(3572), 9, 3).applicable);
    }

    #[test]
    fn q3_examples() {
        assert_eq!(q3_genus_bound(&qi(12), 2), qi(24));
        assert_eq!(q3_genus_bound_symbolic(4), MultiPoly::var("d").pow(2).scale(&q(1, 8)));
        let d = MultiPoly::var("d");
        assert_eq!(q3_genus_bound_symbolic(47), &d.pow(2).scale(&q(1, 94)) + &d.scale(&q(43, 2)));
    }

    #[test]
    fn harris_examples() {
        assert_eq!(castelnuovo_pg_bound(&6.into(), 3, 1), 4.into());
        assert_eq!(castelnuovo_pg_bound(&1.into(), 6, 3), 0.into());
        assert_eq!(castelnuovo_leading_coefficient(6, 3), q(1, 648));
        // C(M,4)*3 with M = (d-1)/3 at d = 3001
        let b = castelnuovo_pg_bound(&3001.into(), 6, 3);
        assert_eq!(b, binomial(&1000.into(), 4) * 3);
    }

    #[test]
    fn dec_values() {
        assert_eq!(dec_leading_coefficient(1), q(1, 192));
        assert_eq!(dec_leading_coefficient(2), q(1, 1536));
        let s = dec_leading_coefficient_symbolic();
        assert_eq!(s.eval_at("sigma", &qi(2)).unwrap(), q(1, 1536));
    }
}
