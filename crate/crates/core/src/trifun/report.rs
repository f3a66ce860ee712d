use rayon::prelude::*;

use crate::field::Field;

use super::checks::{
    is_faithful_on, is_full_on, is_sincere_on, iso_lifting, reflects_iso, reflects_split_epi, reflects_split_mono, salt,
    split_epi, split_mono, weak_split_epi, weak_split_mono,
};
use super::{
    aggregate, evaluate_implications, functoriality_check, Condition, ConditionVerdict, Implication, ImplicationStatus,
    Outcome, SamplingPolicy, Status, TriangleFunctorModel,
};

/// Pointwise conditions swept over sampled morphisms of every Hom space.
const SWEPT: [Condition; 8] = [
    Condition::SplitMono,
    Condition::SplitEpi,
    Condition::WeakSplitMono,
    Condition::WeakSplitEpi,
    Condition::IsoLifting,
    Condition::ReflectsSplitMono,
    Condition::ReflectsSplitEpi,
    Condition::ReflectsIso,
];

#[derive(Clone, Debug)]
pub struct ConditionReport<F: Field> {
    pub functor: String,
    pub verdicts: Vec<ConditionVerdict<F>>,
    pub implications: Vec<(Implication, ImplicationStatus)>,
}

impl<F: Field> ConditionReport<F> {
    pub fn verdict(&self, c: Condition) -> Option<&ConditionVerdict<F>> {
        self.verdicts.iter().find(|v| v.condition == c)
    }

    pub fn status(&self, c: Condition) -> Option<Status> {
        self.verdict(c).map(|v| v.status())
    }

    /// Adds verdicts and re-evaluates the implications.
    pub fn extend(&mut self, more: impl IntoIterator<Item = ConditionVerdict<F>>, cone_closed: bool) {
        for v in more {
            self.verdicts.retain(|old| old.condition != v.condition);
            self.verdicts.push(v);
        }
        self.verdicts.sort_by_key(|v| v.condition);
        self.implications = evaluate_implications(|c| self.status(c), cone_closed);
    }

    pub fn violations(&self) -> impl Iterator<Item = &Implication> {
        self.implications
            .iter()
            .filter(|(_, s)| *s == ImplicationStatus::Violated)
            .map(|(i, _)| i)
    }
}

fn pointwise<F: Field>(
    f: &TriangleFunctorModel<F>,
    c: Condition,
    x: usize,
    y: usize,
    u: &[F::Elem],
    candidates: &[usize],
    policy: &SamplingPolicy,
) -> Outcome<F> {
    match c {
        Condition::SplitMono => split_mono(f, x, y, u),
        Condition::SplitEpi => split_epi(f, x, y, u),
        Condition::WeakSplitMono => weak_split_mono(f, x, y, u, candidates, policy),
        Condition::WeakSplitEpi => weak_split_epi(f, x, y, u, candidates, policy),
        Condition::IsoLifting => iso_lifting(f, x, y, u),
        Condition::ReflectsSplitMono => reflects_split_mono(f, x, y, u),
        Condition::ReflectsSplitEpi => reflects_split_epi(f, x, y, u),
        Condition::ReflectsIso => reflects_iso(f, x, y, u),
        _ => unreachable!("not a swept condition"),
    }
}

/// Every condition decidable from the functor alone, with the implications
/// between them. Objectivity and Verdier fullness come from the verdict layer.
pub fn condition_report<F: Field>(f: &TriangleFunctorModel<F>, policy: &SamplingPolicy) -> ConditionReport<F> {
    let cat = f.catalog();
    let candidates: Vec<usize> = (0..cat.len()).collect();
    let pairs: Vec<(usize, usize)> = cat.pairs().collect();
    let per_pair: Vec<(bool, Vec<Vec<Outcome<F>>>)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let sample = policy.elements(f.field(), cat.hom_dim(x, y), salt(x, y, 0));
            let outcomes = SWEPT
                .iter()
                .map(|&c| {
                    let mut out = Vec::new();
                    for u in &sample.elements {
                        let o = pointwise(f, c, x, y, u, &candidates, policy);
                        let stop = !o.holds();
                        out.push(o);
                        if stop {
                            break;
                        }
                    }
                    out
                })
                .collect();
            (sample.exhaustive, outcomes)
        })
        .collect();
    let exhaustive = per_pair.iter().all(|(e, _)| *e);
    let mut verdicts = vec![functoriality_check(f), is_faithful_on(f), is_full_on(f), is_sincere_on(f)];
    for (k, &c) in SWEPT.iter().enumerate() {
        let outcomes = per_pair.iter().flat_map(|(_, o)| o[k].iter().cloned());
        verdicts.push(aggregate(c, outcomes, exhaustive));
    }
    let mut report = ConditionReport {
        functor: f.name().to_string(),
        verdicts: Vec::new(),
        implications: Vec::new(),
    };
    report.extend(verdicts, cat.is_cone_closed());
    report
}
