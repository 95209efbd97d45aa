use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::Arc;

use sha2::{Digest, Sha256};

use super::{ChowError, CycleClass};
use crate::algebra::{Monomial, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub grade: u32,
    /// Base classes may appear under a pullback in expressions.
    pub base: bool,
}

/// Rewrite rule: any monomial divisible by `pattern` has that factor
/// replaced by `replacement`.
#[derive(Clone, Debug)]
pub struct Relation {
    pub pattern: Monomial,
    pub replacement: Vec<(Monomial, RatFunc)>,
}

/// Graded ring with rewrite relations and a top-grade evaluation map.
#[derive(Debug)]
pub struct ChowContext {
    name: String,
    generators: Vec<Generator>,
    relations: Vec<Relation>,
    evaluation: BTreeMap<Monomial, RatFunc>,
    top_grade: u32,
    max_steps: usize,
}

pub struct ChowContextBuilder {
    name: String,
    generators: Vec<Generator>,
    relations: Vec<(Vec<(String, u32)>, Vec<(Vec<(String, u32)>, RatFunc)>)>,
    evaluation: Vec<(Vec<(String, u32)>, RatFunc)>,
    top_grade: u32,
    max_steps: usize,
}

impl ChowContextBuilder {
    pub fn new(name: &str, top_grade: u32) -> Self {
        ChowContextBuilder {
            name: name.to_string(),
            generators: Vec::new(),
            relations: Vec::new(),
            evaluation: Vec::new(),
            top_grade,
            max_steps: 100_000,
        }
    }

    pub fn generator(mut self, name: &str, grade: u32, base: bool) -> Self {
        self.generators.push(Generator { name: name.to_string(), grade, base });
        self
    }

    /// Monomials are written as `(generator, exponent)` lists.
    pub fn relation(mut self, pattern: &[(&str, u32)], replacement: Vec<(Vec<(&str, u32)>, RatFunc)>) -> Self {
        let own = |m: &[(&str, u32)]| m.iter().map(|(n, e)| (n.to_string(), *e)).collect::<Vec<_>>();
        self.relations
            .push((own(pattern), replacement.into_iter().map(|(m, c)| (own(&m), c)).collect()));
        self
    }

    pub fn evaluate(mut self, monomial: &[(&str, u32)], value: RatFunc) -> Self {
        self.evaluation.push((monomial.iter().map(|(n, e)| (n.to_string(), *e)).collect(), value));
        self
    }

    pub fn max_steps(mut self, n: usize) -> Self {
        self.max_steps = n;
        self
    }

    fn monomial(&self, m: &[(String, u32)]) -> Result<Monomial, ChowError> {
        let mut e = vec![0u32; self.generators.len()];
        for (n, k) in m {
            let i = self
                .generators
                .iter()
                .position(|g| &g.name == n)
                .ok_or_else(|| ChowError::UnknownGenerator(n.clone()))?;
            e[i] += k;
        }
        Ok(Monomial(e))
    }

    pub fn build(self) -> Result<Arc<ChowContext>, ChowError> {
        let grade = |m: &Monomial| -> u32 { m.0.iter().zip(&self.generators).map(|(e, g)| e * g.grade).sum() };
        let mut relations = Vec::new();
        for (pat, rep) in &self.relations {
            let pattern = self.monomial(pat)?;
            let mut replacement = Vec::new();
            for (m, c) in rep {
                let m = self.monomial(m)?;
                if grade(&m) != grade(&pattern) {
                    return Err(ChowError::InvalidRelation(format!("relation for {pat:?} is not homogeneous")));
                }
                if m >= pattern {
                    return Err(ChowError::InvalidRelation(format!("relation for {pat:?} does not decrease the ranking")));
                }
                if !c.is_zero() {
                    replacement.push((m, c.clone()));
                }
            }
            relations.push(Relation { pattern, replacement });
        }
        let mut evaluation = BTreeMap::new();
        for (m, v) in &self.evaluation {
            let m = self.monomial(m)?;
            if grade(&m) != self.top_grade {
                return Err(ChowError::InvalidRelation("evaluation rule outside the top grade".into()));
            }
            evaluation.insert(m, v.clone());
        }
        let ctx = Arc::new(ChowContext {
            name: self.name,
            generators: self.generators,
            relations,
            evaluation,
            top_grade: self.top_grade,
            max_steps: self.max_steps,
        });
        if !ctx.evaluation.is_empty() {
            ctx.check_coverage()?;
        }
        Ok(ctx)
    }
}

impl ChowContext {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn top_grade(&self) -> u32 {
        self.top_grade
    }

    pub(crate) fn max_steps(&self) -> usize {
        self.max_steps
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn grade_of(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.generators).map(|(e, g)| e * g.grade).sum()
    }

    pub(crate) fn evaluation_rule(&self, m: &Monomial) -> Option<&RatFunc> {
        self.evaluation.get(m)
    }

    /// All monomials of the given grade.
    pub fn monomials_of_grade(&self, grade: u32) -> Vec<Monomial> {
        fn rec(gens: &[Generator], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == gens.len() {
                if left == 0 {
                    out.push(Monomial(cur.clone()));
                }
                return;
            }
            let g = gens[i].grade;
            let mut e = 0;
            while e * g <= left {
                cur.push(e);
                rec(gens, i + 1, left - e * g, cur, out);
                cur.pop();
                e += 1;
                if g == 0 {
                    break;
                }
            }
        }
        let mut out = Vec::new();
        rec(&self.generators, 0, grade, &mut Vec::new(), &mut out);
        out
    }

    fn check_coverage(self: &Arc<Self>) -> Result<(), ChowError> {
        for m in self.monomials_of_grade(self.top_grade) {
            let c = CycleClass::from_monomial(self, m, RatFunc::one());
            let nf = c.normal_form()?;
            for (k, _) in nf.terms() {
                if self.evaluation.get(k).is_none() {
                    return Err(ChowError::MissingEvaluation(self.fmt_monomial(k)));
                }
            }
        }
        Ok(())
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = self
            .generators
            .iter()
            .zip(&m.0)
            .filter(|(_, e)| **e > 0)
            .map(|(g, e)| if *e == 1 { g.name.clone() } else { format!("{}^{}", g.name, e) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// Canonical text of generators, relations and evaluation rules.
    pub fn describe(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "context {} top {}", self.name, self.top_grade);
        for g in &self.generators {
            let _ = writeln!(s, "gen {} {} {}", g.name, g.grade, g.base);
        }
        for r in &self.relations {
            let rep: Vec<String> =
                r.replacement.iter().map(|(m, c)| format!("({c})*{}", self.fmt_monomial(m))).collect();
            let _ = writeln!(s, "rel {} -> {}", self.fmt_monomial(&r.pattern), rep.join(" + "));
        }
        for (m, v) in &self.evaluation {
            let _ = writeln!(s, "eval {} = {v}", self.fmt_monomial(m));
        }
        s
    }

    /// SHA-256 fingerprint of [`ChowContext::describe`].
    pub fn fingerprint(&self) -> String {
        hex::encode(Sha256::digest(self.describe().as_bytes()))
    }

    pub(crate) fn same_as(&self, other: &ChowContext) -> bool {
        std::ptr::eq(self, other) || (self.name == other.name && self.generators == other.generators)
    }
}
