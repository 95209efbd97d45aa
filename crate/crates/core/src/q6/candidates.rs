use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::castelnuovo_pg_bound;

/// One admissible `(d, g, chi(O_S), chi(O_X3), chi(O_X))`; it fixes the
/// Hilbert polynomial uniquely.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CandidateTuple {
    pub d: i64,
    pub g: i64,
    pub chi_s: i64,
    pub chi_x3: i64,
    pub chi_x: i64,
}

struct Ranges {
    g_max: i64,
    pg_s_max: i64,
    pg_x3_max: i64,
    pg_x_max: i64,
}

fn harris(d: i64, n: u32, k: u32) -> i64 {
    castelnuovo_pg_bound(&BigInt::from(d), n, k).to_i64().expect("bound fits in i64")
}

/// Curve section in `P^4`, surface in `P^5`, threefold in `P^6`, X in `P^7`.
fn ranges(d: i64) -> Ranges {
    Ranges { g_max: harris(d, 4, 1), pg_s_max: harris(d, 5, 2), pg_x3_max: harris(d, 6, 3), pg_x_max: harris(d, 7, 4) }
}

/// All tuples with `d <= d0`, using `h^1 = 0` on every section,
/// `h^2(O_X3), h^2(O_X) <= p_g(S)` and `h^3(O_X) <= p_g(X3)`:
/// `chi_S = 1 + p_g(S)`, `chi_X3 in [1 - P3, 1 + p_g(S)]`,
/// `chi_X in [1 - P3, 1 + p_g(S) + P4]`.
pub fn enumerate_hilbert_candidates(d0: i64) -> impl Iterator<Item = CandidateTuple> {
    (1..=d0).flat_map(|d| {
        let r = ranges(d);
        (0..=r.g_max).flat_map(move |g| {
            (0..=r.pg_s_max).flat_map(move |a| {
                (1 - r.pg_x3_max..=1 + a).flat_map(move |x| {
                    (1 - r.pg_x3_max..=1 + a + r.pg_x_max)
                        .map(move |v| CandidateTuple { d, g, chi_s: 1 + a, chi_x3: x, chi_x: v })
                })
            })
        })
    })
}

/// Closed count `sum_d (G+1) sum_a (a+P3+1)(a+P3+P4+1)`.
pub fn hilbert_candidate_count(d0: i64) -> BigInt {
    let mut total = BigInt::zero();
    for d in 1..=d0 {
        let r = ranges(d);
        let mut inner = BigInt::zero();
        for a in 0..=r.pg_s_max {
            inner += BigInt::from(a + r.pg_x3_max + 1) * BigInt::from(a + r.pg_x3_max + r.pg_x_max + 1);
        }
        total += inner * BigInt::from(r.g_max + 1);
    }
    total
}
