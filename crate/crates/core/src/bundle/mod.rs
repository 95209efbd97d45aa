//! Four-folds in `P^7` that are quadric bundles over a surface: Chern
//! classes of `W = P(E)` and of X, the five-equation system for the base
//! invariants, the feasibility triangle in `(K_B^2, D.R)`, the genus
//! window and the degree bound.

mod chern;
mod system;
mod triangle;

pub use chern::*;
pub use system::*;
pub use triangle::*;
