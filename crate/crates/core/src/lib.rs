//! Exact verification engine for numerical invariants of codimension-two
//! subvarieties of the six-dimensional quadric.

pub mod algebra;
pub mod chow;
pub mod q6;
pub mod hypersurface;
pub mod gate;
pub mod bundle;
pub mod dsl;
pub mod report;
pub mod suite;
