use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{ChowContext, ChowError};
use crate::algebra::{Monomial, RatFunc};

/// Homogeneous formal sum of generator monomials with rational-function
/// coefficients. Classes above the top grade are zero.
#[derive(Clone, Debug)]
pub struct CycleClass {
    ctx: Arc<ChowContext>,
    grade: u32,
    terms: BTreeMap<Monomial, RatFunc>,
}

fn add_term(terms: &mut BTreeMap<Monomial, RatFunc>, m: Monomial, c: RatFunc) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            let v = e.get() + &c;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl CycleClass {
    pub fn zero(ctx: &Arc<ChowContext>, grade: u32) -> Self {
        CycleClass { ctx: ctx.clone(), grade, terms: BTreeMap::new() }
    }

    pub fn scalar(ctx: &Arc<ChowContext>, c: RatFunc) -> Self {
        Self::from_monomial(ctx, Monomial::one(ctx.generators().len()), c)
    }

    pub fn one(ctx: &Arc<ChowContext>) -> Self {
        Self::scalar(ctx, RatFunc::one())
    }

    pub(crate) fn from_monomial(ctx: &Arc<ChowContext>, m: Monomial, c: RatFunc) -> Self {
        let grade = ctx.grade_of(&m);
        let mut terms = BTreeMap::new();
        if grade <= ctx.top_grade() {
            add_term(&mut terms, m, c);
        }
        CycleClass { ctx: ctx.clone(), grade, terms }
    }

    pub fn generator(ctx: &Arc<ChowContext>, name: &str) -> Result<Self, ChowError> {
        let i = ctx.generator_index(name).ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
        let mut e = vec![0u32; ctx.generators().len()];
        e[i] = 1;
        Ok(Self::from_monomial(ctx, Monomial(e), RatFunc::one()))
    }

    pub fn context(&self) -> &Arc<ChowContext> {
        &self.ctx
    }

    pub fn grade(&self) -> u32 {
        self.grade
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFunc)> {
        self.terms.iter()
    }

    pub fn is_formally_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of a monomial given as `(generator, exponent)` pairs.
    pub fn coeff(&self, m: &[(&str, u32)]) -> RatFunc {
        let mut e = vec![0u32; self.ctx.generators().len()];
        for (n, k) in m {
            match self.ctx.generator_index(n) {
                Some(i) => e[i] += k,
                None => return RatFunc::zero(),
            }
        }
        self.terms.get(&Monomial(e)).cloned().unwrap_or_else(RatFunc::zero)
    }

    fn check_ctx(&self, other: &CycleClass) -> Result<(), ChowError> {
        if self.ctx.same_as(&other.ctx) {
            Ok(())
        } else {
            Err(ChowError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &CycleClass) -> Result<CycleClass, ChowError> {
        self.check_ctx(other)?;
        if other.terms.is_empty() {
            return Ok(self.clone());
        }
        if self.terms.is_empty() {
            return Ok(other.clone());
        }
        if self.grade != other.grade {
            return Err(ChowError::GradeMismatch { expected: self.grade, found: other.grade });
        }
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Ok(CycleClass { ctx: self.ctx.clone(), grade: self.grade, terms })
    }

    pub fn checked_sub(&self, other: &CycleClass) -> Result<CycleClass, ChowError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &CycleClass) -> Result<CycleClass, ChowError> {
        self.check_ctx(other)?;
        let grade = self.grade + other.grade;
        let mut terms = BTreeMap::new();
        if grade <= self.ctx.top_grade() {
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let m = Monomial(ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect());
                    add_term(&mut terms, m, ca * cb);
                }
            }
        }
        Ok(CycleClass { ctx: self.ctx.clone(), grade, terms })
    }

    fn neg_ref(&self) -> CycleClass {
        self.scale(&RatFunc::int(-1))
    }

    pub fn scale(&self, c: &RatFunc) -> CycleClass {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            for (m, x) in &self.terms {
                add_term(&mut terms, m.clone(), x * c);
            }
        }
        CycleClass { ctx: self.ctx.clone(), grade: self.grade, terms }
    }

    pub fn pow(&self, e: u32) -> CycleClass {
        let mut acc = CycleClass::one(&self.ctx);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Applies the coefficient map to every term.
    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> CycleClass {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, m.clone(), f(c));
        }
        CycleClass { ctx: self.ctx.clone(), grade: self.grade, terms }
    }

    /// Re-reads the class in another context with the same generators.
    pub fn transport(&self, ctx: &Arc<ChowContext>) -> Result<CycleClass, ChowError> {
        if ctx.generators() != self.ctx.generators() {
            return Err(ChowError::ContextMismatch);
        }
        let mut out = CycleClass::zero(ctx, self.grade);
        if self.grade <= ctx.top_grade() {
            out.terms = self.terms.clone();
        }
        Ok(out)
    }

    /// Fixed point of the rewrite system.
    pub fn normal_form(&self) -> Result<CycleClass, ChowError> {
        let mut pending = self.terms.clone();
        let mut out = BTreeMap::new();
        let mut steps = 0usize;
        while let Some((m, c)) = pending.pop_last() {
            let rel = self.ctx.relations().iter().find(|r| r.pattern.divides(&m));
            match rel {
                None => {
                    out.insert(m, c);
                }
                Some(r) => {
                    steps += 1;
                    if steps > self.ctx.max_steps() {
                        return Err(ChowError::NonTerminating { steps });
                    }
                    let rest: Vec<u32> = m.0.iter().zip(&r.pattern.0).map(|(a, b)| a - b).collect();
                    for (rm, rc) in &r.replacement {
                        let nm = Monomial(rm.0.iter().zip(&rest).map(|(a, b)| a + b).collect());
                        add_term(&mut pending, nm, &c * rc);
                    }
                }
            }
        }
        Ok(CycleClass { ctx: self.ctx.clone(), grade: self.grade, terms: out })
    }

    /// Degree of a top-grade class.
    pub fn integrate(&self) -> Result<RatFunc, ChowError> {
        if self.terms.is_empty() {
            return Ok(RatFunc::zero());
        }
        if self.grade != self.ctx.top_grade() {
            return Err(ChowError::GradeMismatch { expected: self.ctx.top_grade(), found: self.grade });
        }
        let nf = self.normal_form()?;
        let mut acc = RatFunc::zero();
        for (m, c) in &nf.terms {
            let v = self
                .ctx
                .evaluation_rule(m)
                .ok_or_else(|| ChowError::MissingEvaluation(self.ctx.fmt_monomial(m)))?;
            acc = &acc + &(c * v);
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form().map(|n| n.terms.is_empty()).unwrap_or(false)
    }
}

impl PartialEq for CycleClass {
    fn eq(&self, other: &Self) -> bool {
        if !self.ctx.same_as(&other.ctx) {
            return false;
        }
        match self.checked_sub(other) {
            Ok(diff) => diff.is_zero(),
            Err(_) => false,
        }
    }
}

impl<'a> Add<&'a CycleClass> for &'a CycleClass {
    type Output = CycleClass;
    fn add(self, rhs: &CycleClass) -> CycleClass {
        self.checked_add(rhs).expect("classes of equal grade in one context")
    }
}

impl<'a> Sub<&'a CycleClass> for &'a CycleClass {
    type Output = CycleClass;
    fn sub(self, rhs: &CycleClass) -> CycleClass {
        self.checked_sub(rhs).expect("classes of equal grade in one context")
    }
}

impl<'a> Mul<&'a CycleClass> for &'a CycleClass {
    type Output = CycleClass;
    fn mul(self, rhs: &CycleClass) -> CycleClass {
        self.checked_mul(rhs).expect("classes in one context")
    }
}

impl Neg for &CycleClass {
    type Output = CycleClass;
    fn neg(self) -> CycleClass {
        self.neg_ref()
    }
}

crate::algebra::forward_owned_ops!(CycleClass, Add add, Sub sub, Mul mul);

impl Neg for CycleClass {
    type Output = CycleClass;
    fn neg(self) -> CycleClass {
        self.neg_ref()
    }
}

impl fmt::Display for CycleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let mono = self.ctx.fmt_monomial(m);
            let coeff = match c.constant_value() {
                Some(v) => format!("{v}"),
                None => format!("({c})"),
            };
            if mono == "1" {
                write!(f, "{coeff}")?;
            } else if coeff == "1" {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{coeff}*{mono}")?;
            }
        }
        Ok(())
    }
}
