//! Fraction-free elimination over polynomial rings, with rational-function
//! back substitution.

use super::gcd::gcd;
use super::{AlgebraError, MultiPoly, RatFunc};

/// Row and column order in which pivots are sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    Natural,
    Reversed,
}

pub fn solve_linear_system(matrix: &[Vec<RatFunc>], rhs: &[RatFunc]) -> Result<Vec<RatFunc>, AlgebraError> {
    solve_linear_system_ordered(matrix, rhs, PivotOrder::Natural)
}

fn lcm(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let g = gcd(a, b);
    (a * b).div_exact(&g).expect("gcd divides")
}

pub fn solve_linear_system_ordered(
    matrix: &[Vec<RatFunc>],
    rhs: &[RatFunc],
    order: PivotOrder,
) -> Result<Vec<RatFunc>, AlgebraError> {
    let n = matrix.len();
    if rhs.len() != n || matrix.iter().any(|r| r.len() != n) {
        return Err(AlgebraError::ShapeMismatch);
    }
    let perm: Vec<usize> = match order {
        PivotOrder::Natural => (0..n).collect(),
        PivotOrder::Reversed => (0..n).rev().collect(),
    };
    // Clear denominators row by row to get a polynomial augmented matrix.
    let mut m: Vec<Vec<MultiPoly>> = Vec::with_capacity(n);
    for &i in &perm {
        let row: Vec<&RatFunc> = perm.iter().map(|&j| &matrix[i][j]).chain(std::iter::once(&rhs[i])).collect();
        let l = row.iter().fold(MultiPoly::one(), |acc, e| lcm(&acc, e.denom()));
        m.push(
            row.iter()
                .map(|e| &e.numer().clone() * &l.div_exact(e.denom()).expect("lcm divisible"))
                .collect(),
        );
    }
    let mut prev = MultiPoly::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !m[r][k].is_zero()).ok_or(AlgebraError::SingularSystem)?;
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = MultiPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![RatFunc::zero(); n];
    for i in (0..n).rev() {
        let mut acc = RatFunc::from(m[i][n].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc = &acc - &(&RatFunc::from(m[i][j].clone()) * &x[j]);
            }
        }
        x[i] = acc.checked_div(&RatFunc::from(m[i][i].clone()))?;
    }
    let mut out = vec![RatFunc::zero(); n];
    for (pos, &j) in perm.iter().enumerate() {
        out[j] = x[pos].clone();
    }
    Ok(out)
}

/// Residuals `A x - b` of a candidate solution.
pub fn residuals(matrix: &[Vec<RatFunc>], rhs: &[RatFunc], x: &[RatFunc]) -> Vec<RatFunc> {
    matrix
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let s = row.iter().zip(x).fold(RatFunc::zero(), |acc, (a, xi)| &acc + &(a * xi));
            &s - b
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ri(n: i64) -> RatFunc {
        RatFunc::int(n)
    }

    #[test]
    fn two_by_two() {
        let a = vec![vec![ri(1), ri(2)], vec![ri(3), ri(4)]];
        let b = vec![ri(5), ri(6)];
        let x = solve_linear_system(&a, &b).unwrap();
        assert_eq!(x, vec![ri(-4), RatFunc::ratio(9, 2)]);
    }

    #[test]
    fn identity() {
        let a = vec![vec![ri(1), ri(0)], vec![ri(0), ri(1)]];
        let b = vec![RatFunc::var("d"), ri(7)];
        assert_eq!(solve_linear_system(&a, &b).unwrap(), b);
    }

    #[test]
    fn singular() {
        let a = vec![vec![ri(1), ri(2)], vec![ri(2), ri(4)]];
        assert_eq!(solve_linear_system(&a, &[ri(1), ri(2)]), Err(AlgebraError::SingularSystem));
    }

    #[test]
    fn symbolic_entries_both_orders() {
        let d = RatFunc::var("d");
        let a = vec![
            vec![d.clone(), ri(1), ri(0)],
            vec![ri(1), &d * &d, RatFunc::ratio(1, 2)],
            vec![ri(0), ri(2), &d + &ri(1)],
        ];
        let b = vec![ri(1), RatFunc::var("x"), &d / &(&d + &ri(3))];
        let x1 = solve_linear_system_ordered(&a, &b, PivotOrder::Natural).unwrap();
        let x2 = solve_linear_system_ordered(&a, &b, PivotOrder::Reversed).unwrap();
        assert_eq!(x1, x2);
        assert!(residuals(&a, &b, &x1).iter().all(RatFunc::is_zero));
    }
}
