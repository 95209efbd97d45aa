//! Boundedness of non-general-type threefolds in `Q_6`: Hodge-index and
//! Segre-positivity inequalities, the quadratic window in `s`, genus
//! gates, the `k`-gate and the assembled certificate chain.

mod genus;
mod inequalities;
mod window;

pub use genus::*;
pub use inequalities::{
    case_split_form, hodge_a_displayed, hodge_b_displayed, hodge_b_rhs, hodge_inequalities, ineq_22_displayed,
    ineq_23_displayed, non_general_type_bound, prop_a_displayed, prop_b_displayed, segre_four_as_printed,
    segre_four_standard, segre_inequalities, segre_inequalities_with, twisted_normal_classes, HodgeInequalities,
    InequalityCheck, SegreInequalities,
};
pub use window::*;
