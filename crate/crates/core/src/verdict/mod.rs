//! Objectivity through ideals of the catalog, factorizations through kernel
//! objects, quotient Hom spaces, and inverses in the Verdier quotient.

mod factor;
mod ideal;
mod inverse;
mod quotient;
mod report;

pub use factor::{factor_through_kernel, FactorizationOutcome, KernelFactorization};
pub use ideal::{build_ideal_table, objectivity_verdict, IdealKind, IdealTable};
pub use inverse::{fitting_inverse_witness, split_complex, ComplexFittingSplit, VerdierInverseWitness};
pub use quotient::{ideal_is_two_sided, quotient_hom, IdealLeak, QuotientHom};
pub use report::{
    full_report, quotient_comparison, verdier_fullness_verdict, FullReport, QuotientComparison, QuotientDims, FITTING_NOTE,
};
