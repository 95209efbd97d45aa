//! Real-root isolation by Sturm sequences on the square-free part.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational, UniPoly};

fn sign(x: &Rational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

pub fn sturm_sequence(p: &UniPoly) -> Vec<UniPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero");
        if r.is_zero() {
            break;
        }
        seq.push(r.scale(&-Rational::one()));
    }
    seq
}

fn variations(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut v = 0;
    for s in signs.filter(|s| *s != 0) {
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

fn variations_at(seq: &[UniPoly], x: &Rational) -> usize {
    variations(seq.iter().map(|q| sign(&q.eval(x))))
}

/// Sign variations at minus and plus infinity.
fn variations_at_infinity(seq: &[UniPoly]) -> (usize, usize) {
    let neg = variations(seq.iter().map(|q| {
        let s = sign(&q.leading_coeff());
        if q.degree().unwrap_or(0) % 2 == 1 { -s } else { s }
    }));
    let pos = variations(seq.iter().map(|q| sign(&q.leading_coeff())));
    (neg, pos)
}

/// Number of distinct real roots according to the Sturm sequence.
pub fn sturm_root_count(p: &UniPoly) -> usize {
    if p.degree().unwrap_or(0) == 0 {
        return 0;
    }
    let seq = sturm_sequence(&p.square_free());
    let (a, b) = variations_at_infinity(&seq);
    a - b
}

/// Strict bound on the absolute value of every root (Cauchy).
fn root_bound(p: &UniPoly) -> Rational {
    let lc = p.leading_coeff().abs();
    let m = p.coeffs().iter().map(|c| c.abs() / &lc).fold(Rational::zero(), |a, b| if b > a { b } else { a });
    m + Rational::from_integer(2.into())
}

/// Disjoint open intervals, ascending, each holding exactly one real root.
pub fn isolate_real_roots(p: &UniPoly) -> Vec<(Rational, Rational)> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let q = p.square_free();
    let seq = sturm_sequence(&q);
    let b = root_bound(&q);
    let mut out = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    let two = Rational::from_integer(2.into());
    while let Some((lo, hi)) = stack.pop() {
        let n = variations_at(&seq, &lo) - variations_at(&seq, &hi);
        match n {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                if q.eval(&mid).is_zero() {
                    let mut eps = (&hi - &lo) / Rational::from_integer(4.into());
                    loop {
                        let a = &mid - &eps;
                        let c = &mid + &eps;
                        if !q.eval(&a).is_zero()
                            && !q.eval(&c).is_zero()
                            && variations_at(&seq, &a) - variations_at(&seq, &c) == 1
                        {
                            stack.push((lo, a.clone()));
                            stack.push((c.clone(), hi));
                            out.push((a, c));
                            break;
                        }
                        eps /= &two;
                    }
                } else {
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Shrinks an isolating interval of a square-free polynomial by bisection
/// until its width is at most `width`.
pub fn refine_root(q: &UniPoly, mut lo: Rational, mut hi: Rational, width: &Rational) -> (Rational, Rational) {
    let two = Rational::from_integer(2.into());
    let slo = sign(&q.eval(&lo));
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / &two;
        let s = sign(&q.eval(&mid));
        if s == 0 {
            let quarter = Rational::from_integer(4.into());
            let eps = std::cmp::min((&hi - &lo) / &quarter, width / &quarter);
            return (&mid - &eps, &mid + &eps);
        }
        if s == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}

/// Floor of the unique root of the square-free `q` in the open interval.
fn root_floor(q: &UniPoly, mut lo: Rational, mut hi: Rational) -> BigInt {
    loop {
        let fl = lo.floor().to_integer();
        let next = Rational::from_integer(&fl + 1);
        if hi <= next {
            return fl;
        }
        let v = q.eval(&next);
        if v.is_zero() {
            return next.to_integer();
        }
        if sign(&q.eval(&lo)) != sign(&v) {
            hi = next;
        } else {
            lo = next;
        }
    }
}

/// Largest integer `t >= search_from` with `p(t) <= 0`, for `p` with a
/// positive leading coefficient.
pub fn max_integer_where_nonpositive(p: &UniPoly, search_from: &BigInt) -> Result<BigInt, AlgebraError> {
    if !p.leading_coeff().is_positive() {
        return Err(AlgebraError::NonPositiveLeading);
    }
    let q = p.square_free();
    for (lo, hi) in isolate_real_roots(p).into_iter().rev() {
        let t = root_floor(&q, lo, hi);
        if &t < search_from {
            break;
        }
        if !p.eval_int(&t).is_positive() {
            return Ok(t);
        }
    }
    Err(AlgebraError::NoSuchInteger { from: search_from.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn contains(iv: &(Rational, Rational), x: f64) -> bool {
        let lo = iv.0.numer().to_string().parse::<f64>().unwrap() / iv.0.denom().to_string().parse::<f64>().unwrap();
        let hi = iv.1.numer().to_string().parse::<f64>().unwrap() / iv.1.denom().to_string().parse::<f64>().unwrap();
        lo < x && x < hi
    }

    #[test]
    fn sqrt_two() {
        let p = UniPoly::from_ints("x", &[-2, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(contains(&roots[0], -std::f64::consts::SQRT_2));
        assert!(contains(&roots[1], std::f64::consts::SQRT_2));
    }

    #[test]
    fn no_real_roots() {
        assert!(isolate_real_roots(&UniPoly::from_ints("x", &[1, 0, 1])).is_empty());
    }

    #[test]
    fn exact_rational_roots() {
        // x (x - 1) (x + 1), roots hit bisection midpoints
        let p = UniPoly::from_ints("x", &[0, -1, 0, 1]);
        let roots = isolate_real_roots(&p);
        assert_eq!(roots.len(), 3);
        for (iv, x) in roots.iter().zip([-1.0, 0.0, 1.0]) {
            assert!(contains(iv, x));
        }
    }

    #[test]
    fn cubic_root_between_2963_and_2964() {
        let p = UniPoly::from_ints("d", &[893872, -29706, -8881, 3]);
        let roots = isolate_real_roots(&p);
        let big: Vec<_> = roots.iter().filter(|(lo, _)| *lo > r(100)).collect();
        assert_eq!(big.len(), 1);
        let (lo, hi) = refine_root(&p, big[0].0.clone(), big[0].1.clone(), &Rational::new(1.into(), 4.into()));
        assert!(lo >= r(2963) - r(1) && hi <= r(2965));
        assert!(p.eval(&r(2963)).is_negative());
        assert!(p.eval(&r(2964)).is_positive());
    }

    #[test]
    fn integer_bounds() {
        let cubic = UniPoly::from_ints("d", &[893872, -29706, -8881, 3]);
        assert_eq!(max_integer_where_nonpositive(&cubic, &100.into()).unwrap(), 2963.into());
        let q = UniPoly::new("d", vec![r(0), r(-6), Rational::new(1.into(), 2.into())]);
        assert_eq!(max_integer_where_nonpositive(&q, &0.into()).unwrap(), 12.into());
        assert_eq!(max_integer_where_nonpositive(&UniPoly::from_ints("d", &[-5, 1]), &0.into()).unwrap(), 5.into());
    }

    #[test]
    fn no_such_integer() {
        let p = UniPoly::from_ints("d", &[-5, 1]);
        assert!(matches!(max_integer_where_nonpositive(&p, &6.into()), Err(AlgebraError::NoSuchInteger { .. })));
        assert!(max_integer_where_nonpositive(&UniPoly::from_ints("x", &[1, 0, 1]), &0.into()).is_err());
    }

    #[test]
    fn double_root_is_reported_once() {
        let p = UniPoly::from_ints("x", &[1, -2, 1]);
        assert_eq!(isolate_real_roots(&p).len(), 1);
        assert_eq!(max_integer_where_nonpositive(&p, &0.into()).unwrap(), 1.into());
    }
}
