use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::{AlgebraError, MultiPoly, Rational};

/// Quotient of polynomials, kept with coprime parts and a monic denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() };
        }
        if let Some(c) = den.constant_value() {
            return RatFunc { num: num.scale(&c.recip()).trimmed(), den: MultiPoly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let lc = den.leading_coeff();
        let inv = lc.recip();
        RatFunc { num: num.scale(&inv).trimmed(), den: den.scale(&inv).trimmed() }
    }

    pub fn zero() -> Self {
        RatFunc { num: MultiPoly::zero(), den: MultiPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: MultiPoly::one(), den: MultiPoly::one() }
    }

    pub fn int(c: i64) -> Self {
        MultiPoly::int(c).into()
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        MultiPoly::ratio(n, d).into()
    }

    pub fn var(name: &str) -> Self {
        MultiPoly::var(name).into()
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn as_polynomial(&self) -> Option<MultiPoly> {
        self.is_polynomial().then(|| self.num.clone())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_polynomial() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn recip(&self) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, other: &RatFunc) -> Result<RatFunc, AlgebraError> {
        if other.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(RatFunc::canonical(&self.num * &other.den, &self.den * &other.num))
    }

    /// Substitutes a rational function for a variable.
    pub fn substitute(&self, name: &str, value: &RatFunc) -> RatFunc {
        let n = substitute_poly(&self.num, name, value);
        let d = substitute_poly(&self.den, name, value);
        n.checked_div(&d).expect("substitution made the denominator vanish")
    }

    /// Substitutes rational values; fails if the denominator vanishes.
    pub fn eval_partial(
        &self,
        values: &std::collections::BTreeMap<String, Rational>,
    ) -> Result<RatFunc, AlgebraError> {
        RatFunc::new(self.num.eval_partial(values), self.den.eval_partial(values))
    }

    pub fn eval(&self, values: &std::collections::BTreeMap<String, Rational>) -> Result<Rational, AlgebraError> {
        let r = self.eval_partial(values)?;
        r.constant_value().ok_or(AlgebraError::UnboundVariable)
    }

    /// Evaluates a function of a single variable at a rational point.
    pub fn eval_at(&self, name: &str, x: &Rational) -> Result<Rational, AlgebraError> {
        let mut m = std::collections::BTreeMap::new();
        m.insert(name.to_string(), x.clone());
        self.eval(&m)
    }

    pub fn used_vars(&self) -> Vec<String> {
        let mut v = self.num.used_vars();
        v.extend(self.den.used_vars());
        v.sort();
        v.dedup();
        v
    }
}

/// Horner evaluation of a polynomial at a rational function.
pub fn substitute_poly(p: &MultiPoly, name: &str, value: &RatFunc) -> RatFunc {
    let coeffs = p.coeffs_in(name);
    let mut acc = RatFunc::zero();
    let mut prev = 0u32;
    for (e, c) in coeffs.iter().rev() {
        if !acc.is_zero() {
            acc = &acc * &value.pow(prev - e);
        }
        acc = &acc + &RatFunc::from(c.clone());
        prev = *e;
    }
    if prev > 0 {
        acc = &acc * &value.pow(prev);
    }
    acc
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::canonical(p, MultiPoly::one())
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c).into()
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::int(c)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

crate::algebra::forward_owned_ops!(RatFunc, Add add, Sub sub, Mul mul, Div div);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.num_terms() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        write!(f, "{n}/({})", self.den)
    }
}
