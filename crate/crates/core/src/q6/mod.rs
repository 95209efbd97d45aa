//! Numerical invariants of a smooth four-fold X of degree d in Q6.

mod bounds;
mod candidates;
mod hilbert;
mod intersections;
mod pg;

use crate::algebra::{qi, MultiPoly};

pub use bounds::{
    castelnuovo_leading_coefficient, castelnuovo_pg_bound, ccd_applicability, ccd_genus_bound, ccd_genus_bound_symbolic,
    dec_leading_coefficient, dec_leading_coefficient_symbolic, q3_genus_bound, q3_genus_bound_symbolic, CcdApplicability,
};
pub use candidates::{enumerate_hilbert_candidates, hilbert_candidate_count, CandidateTuple};
pub use hilbert::{hilbert_difference, hilbert_polynomial, hilbert_polynomial_from_riemann_roch};
pub use intersections::{
    canonical_intersections, chern_classes_q6, derive_intersections, displayed_c4_relation_residual,
    displayed_c3_relation_residual, tangent_chern_classes, verify_riemann_roch, verify_riemann_roch_against,
    DerivedIntersections, Q6Chern,
};
pub use pg::{pg_gap, pg_surface_bound, pg_surface_bound_symbolic, pg_surface_audit, PgAudit};

/// The numerical character `(d, g, chi(O_S), chi(O_X3), chi(O_X))`; entries
/// are constants or the symbols `d, g, s, x, v`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantRecord {
    pub d: MultiPoly,
    pub g: MultiPoly,
    pub chi_s: MultiPoly,
    pub chi_x3: MultiPoly,
    pub chi_x: MultiPoly,
}

impl InvariantRecord {
    pub fn symbolic() -> Self {
        InvariantRecord {
            d: MultiPoly::var("d"),
            g: MultiPoly::var("g"),
            chi_s: MultiPoly::var("s"),
            chi_x3: MultiPoly::var("x"),
            chi_x: MultiPoly::var("v"),
        }
    }

    pub fn numeric(d: i64, g: i64, chi_s: i64, chi_x3: i64, chi_x: i64) -> Self {
        assert!(d >= 1, "degree must be positive");
        InvariantRecord {
            d: qi(d).into(),
            g: qi(g).into(),
            chi_s: qi(chi_s).into(),
            chi_x3: qi(chi_x3).into(),
            chi_x: qi(chi_x).into(),
        }
    }

    /// Replaces the symbols `d, g, s, x, v` in `p` by this record's entries.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = p.clone();
        for (name, val) in [("d", &self.d), ("g", &self.g), ("s", &self.chi_s), ("x", &self.chi_x3), ("v", &self.chi_x)] {
            if *val != MultiPoly::var(name) {
                out = out.substitute(name, val);
            }
        }
        out
    }
}
