//! Total classes, twisted Chern classes and Segre classes.

use std::sync::Arc;

use super::{ChowContext, CycleClass};
use crate::algebra::{binomial, RatFunc};

/// Inhomogeneous class `1 + c_1 + c_2 + ...`, truncated at the top grade.
#[derive(Clone, Debug)]
pub struct TotalClass {
    ctx: Arc<ChowContext>,
    parts: Vec<CycleClass>,
}

impl TotalClass {
    /// From `[c_1, c_2, ...]`, with `c_0 = 1`.
    pub fn from_classes(ctx: &Arc<ChowContext>, classes: &[CycleClass]) -> Self {
        let top = ctx.top_grade() as usize;
        let mut parts: Vec<CycleClass> = (0..=top).map(|k| CycleClass::zero(ctx, k as u32)).collect();
        parts[0] = CycleClass::one(ctx);
        for (i, c) in classes.iter().enumerate() {
            if i < top {
                parts[i + 1] = &parts[i + 1] + c;
            }
        }
        TotalClass { ctx: ctx.clone(), parts }
    }

    pub fn one(ctx: &Arc<ChowContext>) -> Self {
        Self::from_classes(ctx, &[])
    }

    /// `1 + a` for a grade-one class `a`.
    pub fn linear(a: &CycleClass) -> Self {
        Self::from_classes(a.context(), std::slice::from_ref(a))
    }

    pub fn part(&self, k: usize) -> CycleClass {
        self.parts.get(k).cloned().unwrap_or_else(|| CycleClass::zero(&self.ctx, k as u32))
    }

    /// `[c_1, ..., c_top]`.
    pub fn classes(&self) -> Vec<CycleClass> {
        self.parts[1..].to_vec()
    }

    pub fn mul(&self, other: &TotalClass) -> TotalClass {
        let top = self.parts.len() - 1;
        let mut parts: Vec<CycleClass> = (0..=top).map(|k| CycleClass::zero(&self.ctx, k as u32)).collect();
        for (i, a) in self.parts.iter().enumerate() {
            for (j, b) in other.parts.iter().enumerate() {
                if i + j <= top {
                    parts[i + j] = &parts[i + j] + &(a * b);
                }
            }
        }
        TotalClass { ctx: self.ctx.clone(), parts }
    }

    /// Formal inverse: `u_0 = 1`, `u_k = -sum_{i=1..k} c_i u_{k-i}`.
    pub fn inverse(&self) -> TotalClass {
        let top = self.parts.len() - 1;
        let mut u: Vec<CycleClass> = vec![CycleClass::one(&self.ctx)];
        for k in 1..=top {
            let mut acc = CycleClass::zero(&self.ctx, k as u32);
            for i in 1..=k {
                acc = &acc - &(&self.parts[i] * &u[k - i]);
            }
            u.push(acc);
        }
        TotalClass { ctx: self.ctx.clone(), parts: u }
    }

    pub fn normal_form(&self) -> TotalClass {
        TotalClass {
            ctx: self.ctx.clone(),
            parts: self.parts.iter().map(|p| p.normal_form().expect("terminating context")).collect(),
        }
    }
}

/// Chern classes of `E (x) M` for a line bundle `M` with first Chern class
/// `twist`: `c_k = sum_i C(r-i, k-i) c_i(E) twist^(k-i)`.
pub fn chern_of_twisted_bundle(classes: &[CycleClass], twist: &CycleClass, rank: u32) -> Vec<CycleClass> {
    let ctx = twist.context().clone();
    let c = |i: u32| -> CycleClass {
        if i == 0 {
            CycleClass::one(&ctx)
        } else {
            classes.get(i as usize - 1).cloned().unwrap_or_else(|| CycleClass::zero(&ctx, i))
        }
    };
    (1..=rank)
        .map(|k| {
            let mut acc = CycleClass::zero(&ctx, k);
            for i in 0..=k {
                let coeff = binomial(&(rank - i).into(), k - i);
                let term = (&c(i) * &twist.pow(k - i)).scale(&RatFunc::from(crate::algebra::Rational::from_integer(coeff)));
                acc = &acc + &term;
            }
            acc
        })
        .collect()
}

/// Segre classes `s_1..s_up_to` with `s_k = (-1)^k [c^{-1}]_k`, so that
/// `s_2 = c_1^2 - c_2` for a rank-two bundle.
pub fn segre_classes(chern: &[CycleClass], up_to: u32) -> Vec<CycleClass> {
    let Some(first) = chern.first() else {
        return Vec::new();
    };
    let ctx = first.context().clone();
    let c = |i: usize| -> CycleClass {
        chern.get(i - 1).cloned().unwrap_or_else(|| CycleClass::zero(&ctx, i as u32))
    };
    let mut u: Vec<CycleClass> = vec![CycleClass::one(&ctx)];
    for k in 1..=up_to as usize {
        let mut acc = CycleClass::zero(&ctx, k as u32);
        for i in 1..=k {
            acc = &acc - &(&c(i) * &u[k - i]);
        }
        u.push(acc);
    }
    u.into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, s)| if k % 2 == 1 { -&s } else { s })
        .collect()
}
