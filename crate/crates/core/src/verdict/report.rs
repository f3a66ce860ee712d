use rayon::prelude::*;

use crate::error::Result;
use crate::field::Field;
use crate::trifun::{
    aggregate, condition_report, iso_lifting, salt, Condition, ConditionReport, ConditionVerdict, Outcome, SamplingPolicy,
    Status, TriangleFunctorModel,
};

use super::{build_ideal_table, objectivity_verdict, quotient_hom, IdealKind, IdealTable};

pub const FITTING_NOTE: &str =
    "Hom-finite Krull-Remak-Schmidt, hence Fitting: the Verdier quotient is full iff (I) holds";

/// Fullness of the Verdier quotient by the kernel, decided through (I).
pub fn verdier_fullness_verdict<F: Field>(f: &TriangleFunctorModel<F>, policy: &SamplingPolicy) -> ConditionVerdict<F> {
    let cat = f.catalog();
    let pairs: Vec<(usize, usize)> = cat.pairs().collect();
    let per_pair: Vec<(bool, Vec<Outcome<F>>)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let sample = policy.elements(f.field(), cat.hom_dim(x, y), salt(x, y, 0));
            let mut out = Vec::new();
            for u in &sample.elements {
                let o = iso_lifting(f, x, y, u);
                let stop = o.fails();
                out.push(o);
                if stop {
                    break;
                }
            }
            (sample.exhaustive, out)
        })
        .collect();
    let exhaustive = per_pair.iter().all(|(e, _)| *e);
    let mut v = aggregate(Condition::VerdierFull, per_pair.into_iter().flat_map(|(_, o)| o), exhaustive);
    v.note = Some(FITTING_NOTE.into());
    v
}

/// Quotient dimensions at one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientDims {
    pub source: usize,
    pub target: usize,
    pub hom_dim: usize,
    pub by_kernel: usize,
    pub by_generated: usize,
}

#[derive(Clone, Debug)]
pub struct QuotientComparison {
    pub split_mono: Status,
    pub objective: Status,
    pub verdier_full: Status,
    pub pairs: Vec<QuotientDims>,
    /// The kernel quotients are the Verdier quotient Homs; only when (SM) holds.
    pub verdier_labeled: bool,
    /// Both quotients agree on every pair.
    pub quotients_agree: bool,
}

/// Lists both quotient dimensions per pair, and labels the kernel quotient
/// as the Verdier quotient only under a verified (SM).
pub fn quotient_comparison<F: Field>(table: &IdealTable<F>, report: &ConditionReport<F>) -> QuotientComparison {
    let cat = table.catalog();
    let pairs: Vec<QuotientDims> = cat
        .pairs()
        .map(|(x, y)| QuotientDims {
            source: x,
            target: y,
            hom_dim: cat.hom_dim(x, y),
            by_kernel: quotient_hom(table, IdealKind::Kernel, x, y).dim(),
            by_generated: quotient_hom(table, IdealKind::Generated, x, y).dim(),
        })
        .collect();
    let st = |c| report.status(c).unwrap_or(Status::Unknown);
    let split_mono = st(Condition::SplitMono);
    QuotientComparison {
        split_mono,
        objective: st(Condition::Objective),
        verdier_full: st(Condition::VerdierFull),
        quotients_agree: pairs.iter().all(|p| p.by_kernel == p.by_generated),
        verdier_labeled: split_mono == Status::Holds,
        pairs,
    }
}

/// Everything at once: functor conditions, objectivity, Verdier fullness,
/// the ideal table, quotient comparison, and the implications among them.
#[derive(Clone, Debug)]
pub struct FullReport<F: Field> {
    pub conditions: ConditionReport<F>,
    pub table: IdealTable<F>,
    pub comparison: QuotientComparison,
}

pub fn full_report<F: Field>(
    f: &TriangleFunctorModel<F>,
    kernel_objects: &[usize],
    policy: &SamplingPolicy,
) -> Result<FullReport<F>> {
    let table = build_ideal_table(f, kernel_objects)?;
    let mut conditions = condition_report(f, policy);
    conditions.extend(
        [objectivity_verdict(&table), verdier_fullness_verdict(f, policy)],
        f.catalog().is_cone_closed(),
    );
    let comparison = quotient_comparison(&table, &conditions);
    Ok(FullReport {
        conditions,
        table,
        comparison,
    })
}
