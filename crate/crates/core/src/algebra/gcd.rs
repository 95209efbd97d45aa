//! Multivariate gcd over the rationals by recursive primitive remainder
//! sequences. Results are monic under the graded-lex order.

use super::MultiPoly;

pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    gcd_rec(a, b).monic()
}

fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let ua = a.used_vars();
    let ub = b.used_vars();
    // A variable present in only one operand can be eliminated through content.
    if let Some(v) = ua.iter().find(|v| !ub.contains(v)) {
        return gcd_rec(&content_in(a, v), b);
    }
    if let Some(v) = ub.iter().find(|v| !ua.contains(v)) {
        return gcd_rec(a, &content_in(b, v));
    }
    let main = ua
        .iter()
        .min_by_key(|v| a.degree_in(v).min(b.degree_in(v)))
        .expect("non-constant")
        .clone();
    let ca = content_in(a, &main);
    let cb = content_in(b, &main);
    let c = gcd_rec(&ca, &cb);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(&main) < q.degree_in(&main) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_rem(&p, &q, &main);
        if r.is_zero() {
            break;
        }
        if r.degree_in(&main) == 0 {
            q = MultiPoly::one();
            break;
        }
        p = q;
        q = primitive_part(&r, &main);
    }
    (&c * &q).monic()
}

/// Gcd of the coefficients of `a` viewed as a polynomial in `var`.
pub fn content_in(a: &MultiPoly, var: &str) -> MultiPoly {
    let mut g: Option<MultiPoly> = None;
    for c in a.coeffs_in(var).values() {
        let next = match &g {
            None => c.monic(),
            Some(h) => gcd_rec(h, c).monic(),
        };
        if next.is_constant() {
            return MultiPoly::one();
        }
        g = Some(next);
    }
    g.unwrap_or_else(MultiPoly::one)
}

fn primitive_part(a: &MultiPoly, var: &str) -> MultiPoly {
    let c = content_in(a, var);
    a.div_exact(&c).expect("content divides").monic()
}

fn pseudo_rem(p: &MultiPoly, q: &MultiPoly, var: &str) -> MultiPoly {
    let m = q.degree_in(var);
    let qc = q.coeffs_in(var);
    let lc_q = qc.get(&m).expect("leading coefficient").clone();
    let x = MultiPoly::var(var);
    let mut r = p.clone();
    while !r.is_zero() && r.degree_in(var) >= m {
        let n = r.degree_in(var);
        let lc_r = r.coeffs_in(var).remove(&n).expect("leading coefficient");
        let shift = &lc_r * &x.pow(n - m);
        r = &(&r * &lc_q) - &(&shift * q);
    }
    r
}
