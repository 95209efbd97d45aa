use super::{chern_classes_q6, InvariantRecord};
use crate::algebra::{MultiPoly, RatFunc};
use crate::chow::{q6_context, CycleClass};

fn v(n: &str) -> MultiPoly {
    MultiPoly::var(n)
}

fn c(n: i64) -> MultiPoly {
    MultiPoly::int(n)
}

/// `chi(O_X(t))` in closed form, as a polynomial in `t` and the record's
/// symbols.
pub fn hilbert_polynomial(rec: &InvariantRecord) -> MultiPoly {
    let (d, g, s, x, vv, t) = (v("d"), v("g"), v("s"), v("x"), v("v"), v("t"));
    let c4 = d.scale(&crate::algebra::q(1, 24));
    let c3 = (&(&c(2) - &(&g * &c(2))) + &(&d * &c(3))).scale(&crate::algebra::q(1, 12));
    let c2 = [&s * &c(12), &g * &c(-12), c(12), &d * &c(11)]
        .iter()
        .fold(MultiPoly::zero(), |a, b| &a + b)
        .scale(&crate::algebra::q(1, 24));
    let c1 = [&x * &c(12), &s * &c(6), &g * &c(-4), c(4), &d * &c(3)]
        .iter()
        .fold(MultiPoly::zero(), |a, b| &a + b)
        .scale(&crate::algebra::q(1, 12));
    let p = [&c4 * &t.pow(4), &c3 * &t.pow(3), &c2 * &t.pow(2), &c1 * &t, vv]
        .iter()
        .fold(MultiPoly::zero(), |a, b| &a + b);
    rec.apply(&p)
}

/// Hirzebruch-Riemann-Roch for `L = tH`:
/// `L^4/24 - L^3 K/12 + L^2 (K^2 + c2)/24 - L K c2/24 + chi(O_X)`.
pub fn hilbert_polynomial_from_riemann_roch(rec: &InvariantRecord) -> MultiPoly {
    let ctx = q6_context();
    let h = CycleClass::generator(&ctx, "H").expect("H");
    let k = CycleClass::generator(&ctx, "K").expect("K");
    let (c2, _, _) = chern_classes_q6(&v("d"));
    let l = h.scale(&RatFunc::var("t"));
    let r = |n: i64, dd: i64| RatFunc::ratio(n, dd);
    let td = [
        l.pow(4).scale(&r(1, 24)),
        (&l.pow(3) * &k).scale(&r(-1, 12)),
        (&l.pow(2) * &(&k.pow(2) + &c2)).scale(&r(1, 24)),
        (&(&l * &k) * &c2).scale(&r(-1, 24)),
    ]
    .iter()
    .fold(CycleClass::zero(&ctx, 4), |a, b| &a + b);
    let deg = td.integrate().expect("top grade").as_polynomial().expect("polynomial degree");
    rec.apply(&(&deg + &v("v")))
}

/// `chi(t) - chi(t-1)`.
pub fn hilbert_difference(rec: &InvariantRecord) -> MultiPoly {
    let p = hilbert_polynomial(rec);
    &p - &p.substitute("t", &(&v("t") - &c(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q;

    #[test]
    fn closed_form_matches_riemann_roch() {
        let rec = InvariantRecord::symbolic();
        assert_eq!(hilbert_polynomial(&rec), hilbert_polynomial_from_riemann_roch(&rec));
    }

    #[test]
    fn constant_and_leading() {
        let rec = InvariantRecord::symbolic();
        let p = hilbert_polynomial(&rec);
        assert_eq!(p.substitute("t", &MultiPoly::zero()), v("v"));
        let lead = p.coeffs_in("t").get(&4).cloned().unwrap();
        assert_eq!(lead, v("d").scale(&q(1, 24)));
    }

    #[test]
    fn difference_is_cubic() {
        let p = hilbert_difference(&InvariantRecord::symbolic());
        let parts = p.coeffs_in("t");
        assert_eq!(parts.keys().max(), Some(&3));
        assert_eq!(parts[&3], v("d").scale(&q(1, 6)));
    }

    #[test]
    fn quadric_fourfold() {
        // hyperplane section of Q6 cut by a second hyperplane: Q4, d = 2
        let rec = InvariantRecord::numeric(2, 0, 1, 1, 1);
        let p = hilbert_polynomial(&rec);
        // chi(O_Q4(1)) = 6
        assert_eq!(p.substitute("t", &c(1)), c(6));
        assert_eq!(p.substitute("t", &c(2)), c(20));
    }
}
