//! Triangle functors on a finite catalog of complexes and the conditions
//! relating them to their kernels.

mod catalog;
mod checks;
mod conditions;
mod functor;
mod report;
mod sampling;

pub use catalog::MorphismCatalog;
pub use checks::{
    check_i, check_ri, check_rse, check_rsm, check_se, check_sm, check_wse, check_wsm, functoriality_check,
    is_faithful_on, is_full_on, is_sincere_on, representative,
};
pub(crate) use checks::{iso_lifting, salt};
pub use conditions::{
    aggregate, evaluate_implications, implications, Condition, ConditionVerdict, Coverage, Implication,
    ImplicationStatus, MorphismRef, Outcome, Scope, Side, Status, Witness,
};
pub use functor::{ChainAction, TriangleFunctorModel};
pub use report::{condition_report, ConditionReport};
pub use sampling::{Sample, SamplingPolicy};

pub(crate) use crate::homotopy::unit;

#[cfg(test)]
mod tests;
