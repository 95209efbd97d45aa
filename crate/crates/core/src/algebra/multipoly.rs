use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::Rational;

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then the earliest variable with a larger exponent wins.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over the rationals. The variable list is kept sorted
/// by name so that aligning two polynomials is a sorted merge.
#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { vars: Arc::from(Vec::new()), terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        MultiPoly { vars: Arc::from(Vec::new()), terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from_integer(c.into()))
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(Rational::new(n.into(), d.into()))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        MultiPoly { vars: Arc::from(vec![name.to_string()]), terms }
    }

    /// Builds a polynomial from explicit terms over a sorted variable list.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = MultiPoly::zero();
        for (exps, c) in terms {
            let mut t = MultiPoly::constant(c);
            for (name, e) in vars.iter().zip(exps) {
                t = &t * &MultiPoly::var(name).pow(e);
            }
            p = &p + &t;
        }
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.terms.values().next().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Variables that actually occur with a positive exponent.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|m| m.0[*i] > 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    pub fn degree_in(&self, name: &str) -> u32 {
        match self.var_index(name) {
            Some(i) => self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Rational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Rational::zero)
    }

    /// Coefficient of the monomial given by `(name, exponent)` pairs, with
    /// unlisted variables at exponent zero.
    pub fn coeff(&self, exps: &[(&str, u32)]) -> Rational {
        let mut m = vec![0u32; self.vars.len()];
        for (name, e) in exps {
            match self.var_index(name) {
                Some(i) => m[i] = *e,
                None if *e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&Monomial(m)).cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-expresses the polynomial over `vars`, which must be a sorted superset.
    fn aligned_to(&self, vars: &Arc<[String]>) -> MultiPoly {
        if Arc::ptr_eq(&self.vars, vars) || *self.vars == **vars {
            return MultiPoly { vars: vars.clone(), terms: self.terms.clone() };
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; vars.len()];
                for (i, x) in m.0.iter().enumerate() {
                    e[map[i]] = *x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        MultiPoly { vars: vars.clone(), terms }
    }

    fn union_vars(a: &Arc<[String]>, b: &Arc<[String]>) -> Arc<[String]> {
        if Arc::ptr_eq(a, b) || a == b {
            return a.clone();
        }
        let mut out: Vec<String> = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                out.push(b[j].clone());
                j += 1;
            } else {
                out.push(a[i].clone());
                i += 1;
                j += 1;
            }
        }
        Arc::from(out)
    }

    fn align_pair(a: &MultiPoly, b: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let vars = Self::union_vars(&a.vars, &b.vars);
        (a.aligned_to(&vars), b.aligned_to(&vars))
    }

    /// Extends the variable list to include `names`.
    pub fn with_vars(&self, names: &[&str]) -> MultiPoly {
        let mut v: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        v.sort();
        v.dedup();
        let vars = Self::union_vars(&self.vars, &Arc::from(v));
        self.aligned_to(&vars)
    }

    /// Drops variables that do not occur.
    pub fn trimmed(&self) -> MultiPoly {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|i| self.terms.keys().any(|m| m.0[*i] > 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars: Arc<[String]> = keep.iter().map(|i| self.vars[*i].clone()).collect::<Vec<_>>().into();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (Monomial(keep.iter().map(|i| m.0[*i]).collect()), c.clone()))
            .collect();
        MultiPoly { vars, terms }
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    /// Normalizes so that the leading coefficient is 1.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.recip()),
            _ => self.clone(),
        }
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &MultiPoly) -> Option<MultiPoly> {
        assert!(!other.is_zero(), "division by the zero polynomial");
        if let Some(c) = other.constant_value() {
            return Some(self.scale(&c.recip()));
        }
        let (mut r, b) = Self::align_pair(self, other);
        let (lm_b, lc_b) = {
            let (m, c) = b.leading().expect("nonzero");
            (m.clone(), c.clone())
        };
        let mut q = BTreeMap::new();
        while let Some((lm_r, lc_r)) = r.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !lm_b.divides(&lm_r) {
                return None;
            }
            let m = lm_r.div(&lm_b);
            let c = lc_r / &lc_b;
            r = &r - &b.mul_term(&m, &c);
            q.insert(m, c);
        }
        Some(MultiPoly { vars: r.vars.clone(), terms: q })
    }

    /// Decomposes as a univariate polynomial in `name`; coefficients keep the
    /// full variable list with that variable at exponent zero.
    pub fn coeffs_in(&self, name: &str) -> BTreeMap<u32, MultiPoly> {
        let mut out: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        let Some(i) = self.var_index(name) else {
            if !self.is_zero() {
                out.insert(0, self.clone());
            }
            return out;
        };
        for (m, c) in &self.terms {
            let e = m.0[i];
            let mut m2 = m.clone();
            m2.0[i] = 0;
            let entry = out
                .entry(e)
                .or_insert_with(|| MultiPoly { vars: self.vars.clone(), terms: BTreeMap::new() });
            entry.terms.insert(m2, c.clone());
        }
        out
    }

    /// Substitutes a polynomial for a variable.
    pub fn substitute(&self, name: &str, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.coeffs_in(name);
        let mut acc = MultiPoly::zero();
        let mut prev = 0u32;
        for (e, c) in coeffs.iter().rev() {
            if !acc.is_zero() {
                acc = &acc * &value.pow(prev - e);
            }
            acc = &acc + c;
            prev = *e;
        }
        let res = if prev > 0 { &acc * &value.pow(prev) } else { acc };
        res.drop_var(name)
    }

    fn drop_var(&self, name: &str) -> MultiPoly {
        match self.var_index(name) {
            Some(i) if self.terms.keys().all(|m| m.0[i] == 0) => {
                let vars: Arc<[String]> =
                    self.vars.iter().filter(|v| *v != name).cloned().collect::<Vec<_>>().into();
                let terms = self
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let mut e = m.0.clone();
                        e.remove(i);
                        (Monomial(e), c.clone())
                    })
                    .collect();
                MultiPoly { vars, terms }
            }
            _ => self.clone(),
        }
    }

    /// Substitutes rational values for the named variables.
    pub fn eval_partial(&self, values: &BTreeMap<String, Rational>) -> MultiPoly {
        let mut out = self.clone();
        for (k, v) in values {
            if out.var_index(k).is_some() {
                out = out.substitute(k, &MultiPoly::constant(v.clone()));
            }
        }
        out
    }

    /// Full evaluation; `None` if some variable that occurs is unbound.
    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Option<Rational> {
        self.eval_partial(values).constant_value()
    }

    pub fn derivative(&self, name: &str) -> MultiPoly {
        let Some(i) = self.var_index(name) else {
            return MultiPoly::zero();
        };
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut m2 = m.clone();
                m2.0[i] -= 1;
                terms.insert(m2, c * Rational::from_integer(m.0[i].into()));
            }
        }
        MultiPoly { vars: self.vars.clone(), terms }
    }
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = Self::align_pair(self, other);
        a.terms == b.terms
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::align_pair(self, rhs);
        for (m, c) in b.terms {
            MultiPoly::insert_add(&mut a.terms, m, c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = MultiPoly::align_pair(self, rhs);
        for (m, c) in b.terms {
            MultiPoly::insert_add(&mut a.terms, m, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        if let Some(c) = rhs.constant_value() {
            return self.scale(&c);
        }
        if let Some(c) = self.constant_value() {
            return rhs.scale(&c);
        }
        let (a, b) = MultiPoly::align_pair(self, rhs);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                MultiPoly::insert_add(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        MultiPoly { vars: a.vars, terms }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}

crate::algebra::forward_owned_ops!(MultiPoly, Add add, Sub sub, Mul mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Rational> for MultiPoly {
    fn from(c: Rational) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<i64> for MultiPoly {
    fn from(c: i64) -> Self {
        MultiPoly::int(c)
    }
}

fn fmt_monomial(vars: &[String], m: &Monomial) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(&m.0)
        .filter(|(_, e)| **e > 0)
        .map(|(v, e)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono = fmt_monomial(&self.vars, m);
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

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }
    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }

    #[test]
    fn binomial_square() {
        let p = &x() + &MultiPoly::one();
        let expect = &(&x().pow(2) + &x().scale(&Rational::from_integer(2.into()))) + &MultiPoly::one();
        assert_eq!(&p * &p, expect);
    }

    #[test]
    fn additive_identity() {
        let p = &x() * &y() - MultiPoly::int(3);
        assert_eq!(&p + &MultiPoly::zero(), p);
    }

    #[test]
    fn two_variable_square() {
        let p = (x() + y().scale(&Rational::from_integer(2.into()))).pow(2);
        let expect = x().pow(2) + (&x() * &y()).scale(&Rational::from_integer(4.into()))
            + y().pow(2).scale(&Rational::from_integer(4.into()));
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x^2 + 4*x*y + 4*y^2");
    }

    #[test]
    fn grlex_leading_term() {
        let p = x().pow(2) + y().pow(3) + &x() * &y();
        let (m, _) = p.leading().unwrap();
        assert_eq!(m.0, vec![0, 3]);
    }

    #[test]
    fn exact_division() {
        let a = &(x() + y()) * &(x() - y());
        assert_eq!(a.div_exact(&(x() - y())).unwrap(), x() + y());
        assert!(x().pow(2).div_exact(&(x() + y())).is_none());
    }

    #[test]
    fn substitution() {
        let p = x().pow(2) + &x() * &y();
        let q = p.substitute("x", &(y() + MultiPoly::one()));
        let expect = (y() + MultiPoly::one()).pow(2) + &(y() + MultiPoly::one()) * &y();
        assert_eq!(q, expect);
        assert!(!q.vars().iter().any(|v| v == "x"));
    }

    #[test]
    fn negative_display() {
        let p = MultiPoly::ratio(-1, 2) * x() + MultiPoly::int(3);
        assert_eq!(p.to_string(), "-1/2*x + 3");
    }
}
