use std::collections::BTreeMap;
use std::sync::Arc;

use super::{parse_expr, DslError, Expr};
use crate::algebra::{RatFunc, Rational};
use crate::chow::{bundle_x_context, q6_context, BundleClasses, ChowContext, CycleClass};

/// Named context an expression is elaborated in.
#[derive(Clone, Debug)]
pub enum DslContext {
    /// generators H, K of the six-fold quadric
    Q6(Arc<ChowContext>),
    /// the four-fold X in the bundle, with the derived classes
    Bundle(Box<BundleClasses>),
}

impl DslContext {
    pub fn q6() -> Self {
        DslContext::Q6(q6_context())
    }

    pub fn bundle() -> Self {
        DslContext::Bundle(Box::new(BundleClasses::new(&bundle_x_context())))
    }

    pub fn by_name(name: &str) -> Option<Self> {
        match name {
            "q6" => Some(Self::q6()),
            "bundle" => Some(Self::bundle()),
            _ => None,
        }
    }

    pub fn chow(&self) -> &Arc<ChowContext> {
        match self {
            DslContext::Q6(c) => c,
            DslContext::Bundle(b) => b.h.context(),
        }
    }

    fn ident(&self, name: &str) -> Result<CycleClass, DslError> {
        let unknown = || DslError::UnknownIdentifier(name.to_string());
        match self {
            DslContext::Q6(c) => match name {
                "H" | "K" => Ok(CycleClass::generator(c, name)?),
                _ => Err(unknown()),
            },
            DslContext::Bundle(b) => Ok(match name {
                "H" => b.h.clone(),
                "K" => b.k.clone(),
                "R" => b.r.clone(),
                "D" => b.d.clone(),
                "KB" => b.kb.clone(),
                "c1B" => b.c1b.clone(),
                "c1E" => b.c1e.clone(),
                "c2E" => b.c2e.clone(),
                "c2B" => b.c2b.clone(),
                "L" => b.l.clone(),
                _ => return Err(unknown()),
            }),
        }
    }
}

/// Builds the class of an expression without reducing it.
pub fn elaborate(e: &Expr, ctx: &DslContext) -> Result<CycleClass, DslError> {
    match e {
        Expr::Num(r) => Ok(CycleClass::scalar(ctx.chow(), RatFunc::from(r.clone()))),
        Expr::Ident(n) => ctx.ident(n),
        Expr::Pullback(inner) => {
            let c = elaborate(inner, ctx)?;
            let gens = ctx.chow().generators();
            for (m, _) in c.terms() {
                if m.0.iter().zip(gens).any(|(&k, g)| k > 0 && !g.base) {
                    return Err(DslError::PullbackOfNonBase(inner.to_string()));
                }
            }
            Ok(c)
        }
        Expr::Neg(inner) => Ok(-&elaborate(inner, ctx)?),
        Expr::Sum(ts) => {
            let mut acc = elaborate(&ts[0], ctx)?;
            for t in &ts[1..] {
                let c = elaborate(t, ctx)?;
                if c.grade() != acc.grade() {
                    return Err(DslError::GradeMismatch { left: acc.grade(), right: c.grade() });
                }
                acc = acc.checked_add(&c)?;
            }
            Ok(acc)
        }
        Expr::Product(fs) => {
            let mut acc = elaborate(&fs[0], ctx)?;
            for f in &fs[1..] {
                acc = acc.checked_mul(&elaborate(f, ctx)?)?;
            }
            Ok(acc)
        }
        Expr::Power(b, n) => Ok(elaborate(b, ctx)?.pow(*n)),
    }
}

/// A reduced class and, in top grade, its degree.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub expr: Expr,
    pub class: CycleClass,
    pub degree: Option<RatFunc>,
}

/// Parses, elaborates and reduces `text`, substituting `bindings` into
/// every coefficient.
pub fn eval_expr(text: &str, ctx: &DslContext, bindings: &BTreeMap<String, Rational>) -> Result<Evaluation, DslError> {
    let expr = parse_expr(text)?;
    let raw = elaborate(&expr, ctx)?.normal_form()?;
    for (_, c) in raw.terms() {
        c.eval_partial(bindings).map_err(|e| DslError::Binding(e.to_string()))?;
    }
    let class = raw.map_coeffs(|c| c.eval_partial(bindings).expect("checked above"));
    let degree = if class.grade() == ctx.chow().top_grade() {
        let deg = raw.integrate()?;
        Some(deg.eval_partial(bindings).map_err(|e| DslError::Binding(e.to_string()))?)
    } else {
        None
    };
    Ok(Evaluation { expr, class, degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MultiPoly;

    fn poly(s: &[(i64, &str)]) -> RatFunc {
        s.iter().fold(RatFunc::zero(), |acc, (c, v)| &acc + &(&RatFunc::int(*c) * &RatFunc::var(v)))
    }

    #[test]
    fn h3_times_d() {
        let ev = eval_expr("H^3 * p*(D)", &DslContext::bundle(), &BTreeMap::new()).unwrap();
        let expect = &poly(&[(3, "y")]) - &RatFunc::from(MultiPoly::var("z")).scale(&crate::algebra::q(1, 2));
        assert_eq!(ev.degree, Some(expect));
    }

    #[test]
    fn x_class() {
        let ctx = DslContext::bundle();
        let e = elaborate(&parse_expr("2H + p*(R) - p*(c1E)").unwrap(), &ctx).unwrap();
        let DslContext::Bundle(b) = &ctx else { unreachable!() };
        assert!((&e - &b.x_class()).is_zero());
        let l = elaborate(&parse_expr("2H - p*(L)").unwrap(), &ctx).unwrap();
        let diff = (&l - &b.x_class()).normal_form().unwrap();
        assert!(diff.is_zero(), "{diff}");
    }

    #[test]
    fn q6_degrees() {
        let mut b = BTreeMap::new();
        b.insert("d".to_string(), Rational::from_integer(2.into()));
        let ev = eval_expr("H^4", &DslContext::q6(), &b).unwrap();
        assert_eq!(ev.degree, Some(RatFunc::int(2)));
        let ev = eval_expr("H^2", &DslContext::q6(), &b).unwrap();
        assert!(ev.degree.is_none());
    }

    #[test]
    fn elaboration_errors() {
        let q = DslContext::q6();
        let bu = DslContext::bundle();
        let none = BTreeMap::new();
        assert!(matches!(eval_expr("R", &q, &none), Err(DslError::UnknownIdentifier(_))));
        assert!(matches!(eval_expr("Q", &bu, &none), Err(DslError::UnknownIdentifier(_))));
        assert!(matches!(eval_expr("p*(H)", &bu, &none), Err(DslError::PullbackOfNonBase(_))));
        assert!(matches!(eval_expr("p*(K)", &bu, &none), Err(DslError::PullbackOfNonBase(_))));
        assert!(matches!(eval_expr("H + H^2", &bu, &none), Err(DslError::GradeMismatch { left: 1, right: 2 })));
        assert!(matches!(eval_expr("H^^2", &bu, &none), Err(DslError::Parse(_))));
    }
}
