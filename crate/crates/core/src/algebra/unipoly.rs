use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, MultiPoly, Rational};

/// Dense univariate polynomial, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    var: String,
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(var: &str, coeffs: Vec<Rational>) -> Self {
        let mut p = UniPoly { var: var.to_string(), coeffs };
        p.trim();
        p
    }

    pub fn from_ints(var: &str, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|c| Rational::from_integer((*c).into())).collect())
    }

    pub fn zero(var: &str) -> Self {
        UniPoly { var: var.to_string(), coeffs: Vec::new() }
    }

    pub fn constant(var: &str, c: Rational) -> Self {
        Self::new(var, vec![c])
    }

    pub fn monomial(var: &str, c: Rational, deg: usize) -> Self {
        let mut v = vec![Rational::zero(); deg + 1];
        v[deg] = c;
        Self::new(var, v)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> Rational {
        self.eval(&Rational::from_integer(x.clone()))
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(&self.var, (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(&self.var, (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(&self.var);
        }
        let mut v = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly::new(&self.var, v)
    }

    pub fn scale(&self, c: &Rational) -> UniPoly {
        UniPoly::new(&self.var, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            &self.var,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(i.into()))
                .collect(),
        )
    }

    /// Euclidean division.
    pub fn div_rem(&self, other: &UniPoly) -> Result<(UniPoly, UniPoly), AlgebraError> {
        let dd = other.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lc = other.leading_coeff();
        let mut r = self.coeffs.clone();
        let mut q = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r.last().unwrap() / &lc;
            for (i, b) in other.coeffs.iter().enumerate() {
                r[k + i] -= &c * b;
            }
            q[k] = c;
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        Ok((UniPoly::new(&self.var, q), UniPoly::new(&self.var, r)))
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Square-free part p / gcd(p, p').
    pub fn square_free(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).expect("nonzero gcd").0
    }

    pub fn to_multi(&self) -> MultiPoly {
        let x = MultiPoly::var(&self.var);
        let mut acc = MultiPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &x) + &MultiPoly::constant(c.clone());
        }
        acc
    }

    /// Reads a polynomial in at most the variable `var`.
    pub fn from_multi(p: &MultiPoly, var: &str) -> Option<UniPoly> {
        let used = p.used_vars();
        if used.iter().any(|v| v != var) {
            return None;
        }
        let n = p.degree_in(var) as usize;
        Some(UniPoly::new(var, (0..=n).map(|i| p.coeff(&[(var, i as u32)])).collect()))
    }

    /// Evaluates at a polynomial argument, giving a multivariate result.
    pub fn compose(&self, arg: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * arg) + &MultiPoly::constant(c.clone());
        }
        acc
    }

    /// Scales by a positive rational so that the coefficients are coprime
    /// integers, keeping the sign of the leading coefficient.
    pub fn primitive_integer(&self) -> UniPoly {
        use num_integer::Integer;
        if self.is_zero() {
            return self.clone();
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Rational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        UniPoly::new(&self.var, ints.into_iter().map(|c| Rational::from_integer(c / &g)).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let a = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => self.var.clone(),
                _ => format!("{}^{}", self.var, i),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}
