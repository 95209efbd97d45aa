//! Graded rings with rewrite relations and top-grade evaluation.

mod chern;
mod class;
mod context;
mod instances;

use thiserror::Error;

pub use chern::{chern_of_twisted_bundle, segre_classes, TotalClass};
pub use class::CycleClass;
pub use context::{ChowContext, ChowContextBuilder, Generator, Relation};
pub use instances::{bundle_w_context, bundle_x_context, c2e_on_fourfold, free_context, q6_context, q6_primitive_context, BundleClasses};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("rewriting did not terminate after {steps} steps")]
    NonTerminating { steps: usize },
    #[error("grade mismatch: expected {expected}, found {found}")]
    GradeMismatch { expected: u32, found: u32 },
    #[error("classes belong to different contexts")]
    ContextMismatch,
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("no evaluation rule for {0}")]
    MissingEvaluation(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
}
