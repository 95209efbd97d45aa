use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Rational, UniPoly};

/// The polynomial (t+shift)(t+shift-1)...(t+shift-choose+1)/choose! in `t`.
pub fn binomial_poly(shift: i64, choose: u32) -> UniPoly {
    let mut p = UniPoly::constant("t", Rational::one());
    let mut fact = BigInt::one();
    for i in 0..choose as i64 {
        p = p.mul(&UniPoly::from_ints("t", &[shift - i, 1]));
        fact *= i + 1;
    }
    p.scale(&Rational::new(BigInt::one(), fact))
}

/// Integer binomial coefficient, zero when `k > n` or `n < 0`.
pub fn binomial(n: &BigInt, k: u32) -> BigInt {
    if n < &BigInt::zero() || n < &BigInt::from(k) {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let z = Rational::zero();
        assert_eq!(binomial_poly(5, 5).eval(&z), Rational::one());
        assert_eq!(binomial_poly(3, 5).eval(&z), Rational::zero());
        let q6 = binomial_poly(7, 7).sub(&binomial_poly(5, 7));
        assert_eq!(q6.eval(&z), Rational::one());
    }

    #[test]
    fn rational_argument() {
        // C(t+2, 2) at t = 1/2 is (5/2)(3/2)/2
        let v = binomial_poly(2, 2).eval(&Rational::new(1.into(), 2.into()));
        assert_eq!(v, Rational::new(15.into(), 8.into()));
    }

    #[test]
    fn integer_binomial() {
        assert_eq!(binomial(&BigInt::from(6), 2), BigInt::from(15));
        assert_eq!(binomial(&BigInt::from(2), 3), BigInt::zero());
        assert_eq!(binomial(&BigInt::from(0), 0), BigInt::one());
    }
}
