//! Shared expensive computations, built once per process.

use std::sync::OnceLock;

use crate::bundle::{
    chern_w, chern_x_bundle, degree_bound_from, feasible_triangle_symbolic_from, solve_invariant_system, vertex_genus,
    BundleInvariants, ChernW, ChernX, DegreeBound, FeasibleTriangle,
};
use crate::algebra::RatFunc;
use crate::gate::{gate_audit, hodge_inequalities, segre_inequalities, GateAudit, HodgeInequalities, SegreInequalities};
use crate::q6::{derive_intersections, DerivedIntersections, InvariantRecord};

macro_rules! cached {
    ($name:ident: $ty:ty = $init:expr) => {
        pub fn $name() -> &'static $ty {
            static CELL: OnceLock<$ty> = OnceLock::new();
            CELL.get_or_init(|| $init)
        }
    };
}

cached!(intersections: DerivedIntersections = derive_intersections());
cached!(audit: GateAudit = gate_audit());
cached!(hodge: HodgeInequalities = hodge_inequalities(&InvariantRecord::symbolic()));
cached!(segre: SegreInequalities = segre_inequalities(&InvariantRecord::symbolic()));
cached!(w_classes: ChernW = chern_w());
cached!(x_classes: ChernX = chern_x_bundle());
cached!(invariants: Result<BundleInvariants, String> = solve_invariant_system().map_err(|e| e.to_string()));

cached!(triangle: Result<FeasibleTriangle, String> = invariants().as_ref().map(feasible_triangle_symbolic_from).map_err(Clone::clone));

cached!(genus_at_vertices: Result<[RatFunc; 3], String> = match (invariants(), triangle()) {
    (Ok(inv), Ok(tri)) => Ok(vertex_genus(inv, tri)),
    (Err(e), _) | (_, Err(e)) => Err(e.clone()),
});

cached!(bound: Result<DegreeBound, String> = genus_at_vertices()
    .as_ref()
    .map_err(Clone::clone)
    .and_then(|g| degree_bound_from(&g[0]).map_err(|e| e.to_string())));
