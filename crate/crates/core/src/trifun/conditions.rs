use std::fmt;

use crate::field::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    Functorial,
    Faithful,
    Full,
    Sincere,
    SplitMono,
    SplitEpi,
    WeakSplitMono,
    WeakSplitEpi,
    IsoLifting,
    ReflectsSplitMono,
    ReflectsSplitEpi,
    ReflectsIso,
    Objective,
    VerdierFull,
}

impl Condition {
    pub const ALL: [Condition; 14] = [
        Condition::Functorial,
        Condition::Faithful,
        Condition::Full,
        Condition::Sincere,
        Condition::SplitMono,
        Condition::SplitEpi,
        Condition::WeakSplitMono,
        Condition::WeakSplitEpi,
        Condition::IsoLifting,
        Condition::ReflectsSplitMono,
        Condition::ReflectsSplitEpi,
        Condition::ReflectsIso,
        Condition::Objective,
        Condition::VerdierFull,
    ];

    /// Stable machine name.
    pub fn key(self) -> &'static str {
        match self {
            Condition::Functorial => "functorial",
            Condition::Faithful => "faithful",
            Condition::Full => "full",
            Condition::Sincere => "sincere",
            Condition::SplitMono => "SM",
            Condition::SplitEpi => "SE",
            Condition::WeakSplitMono => "WSM",
            Condition::WeakSplitEpi => "WSE",
            Condition::IsoLifting => "I",
            Condition::ReflectsSplitMono => "RSM",
            Condition::ReflectsSplitEpi => "RSE",
            Condition::ReflectsIso => "RI",
            Condition::Objective => "objective",
            Condition::VerdierFull => "verdier_full",
        }
    }

    pub fn from_key(s: &str) -> Option<Condition> {
        Condition::ALL.into_iter().find(|c| c.key().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// Which category a witness morphism lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Source,
    Target,
}

/// A class `source → target` between catalog objects (or their images).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphismRef<F: Field> {
    pub role: String,
    pub side: Side,
    pub source: usize,
    pub target: usize,
    pub coords: Vec<F::Elem>,
}

impl<F: Field> MorphismRef<F> {
    pub fn source_side(role: &str, source: usize, target: usize, coords: Vec<F::Elem>) -> Self {
        MorphismRef {
            role: role.to_string(),
            side: Side::Source,
            source,
            target,
            coords,
        }
    }

    pub fn target_side(role: &str, source: usize, target: usize, coords: Vec<F::Elem>) -> Self {
        MorphismRef {
            role: role.to_string(),
            side: Side::Target,
            source,
            target,
            coords,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<F: Field> {
    pub detail: String,
    pub morphisms: Vec<MorphismRef<F>>,
    pub objects: Vec<usize>,
}

impl<F: Field> Witness<F> {
    pub fn new(detail: impl Into<String>) -> Self {
        Witness {
            detail: detail.into(),
            morphisms: Vec::new(),
            objects: Vec::new(),
        }
    }

    pub fn with_morphism(mut self, m: MorphismRef<F>) -> Self {
        self.morphisms.push(m);
        self
    }

    pub fn with_object(mut self, x: usize) -> Self {
        self.objects.push(x);
        self
    }

    pub fn morphism(&self, role: &str) -> Option<&MorphismRef<F>> {
        self.morphisms.iter().find(|m| m.role == role)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<F: Field> {
    /// Holds, optionally with the data that proves it.
    Holds(Option<Witness<F>>),
    Fails(Witness<F>),
    /// Search exhausted without a decision.
    Unknown(String),
}

impl<F: Field> Outcome<F> {
    pub fn holds(&self) -> bool {
        matches!(self, Outcome::Holds(_))
    }

    pub fn fails(&self) -> bool {
        matches!(self, Outcome::Fails(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Outcome::Unknown(_))
    }

    pub fn status(&self) -> Status {
        match self {
            Outcome::Holds(_) => Status::Holds,
            Outcome::Fails(_) => Status::Fails,
            Outcome::Unknown(_) => Status::Unknown,
        }
    }

    pub fn witness(&self) -> Option<&Witness<F>> {
        match self {
            Outcome::Holds(w) => w.as_ref(),
            Outcome::Fails(w) => Some(w),
            Outcome::Unknown(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Holds,
    Fails,
    Unknown,
}

impl Status {
    pub fn key(self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Fails => "fails",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope<F: Field> {
    /// At a single class `source → target`.
    Pointwise { source: usize, target: usize, coords: Vec<F::Elem> },
    Aggregate,
}

/// How much of the catalog an aggregate verdict looked at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub morphisms_checked: usize,
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionVerdict<F: Field> {
    pub condition: Condition,
    pub scope: Scope<F>,
    pub outcome: Outcome<F>,
    pub coverage: Coverage,
    pub note: Option<String>,
}

impl<F: Field> ConditionVerdict<F> {
    pub fn pointwise(condition: Condition, source: usize, target: usize, coords: &[F::Elem], outcome: Outcome<F>) -> Self {
        ConditionVerdict {
            condition,
            scope: Scope::Pointwise {
                source,
                target,
                coords: coords.to_vec(),
            },
            outcome,
            coverage: Coverage {
                morphisms_checked: 1,
                exhaustive: true,
            },
            note: None,
        }
    }

    pub fn aggregate(condition: Condition, outcome: Outcome<F>, coverage: Coverage) -> Self {
        ConditionVerdict {
            condition,
            scope: Scope::Aggregate,
            outcome,
            coverage,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.outcome.holds()
    }

    pub fn fails(&self) -> bool {
        self.outcome.fails()
    }

    pub fn status(&self) -> Status {
        self.outcome.status()
    }
}

/// Folds pointwise verdicts in catalog order: the first failure wins, then
/// any unknown, else holds.
pub fn aggregate<F: Field>(condition: Condition, verdicts: impl IntoIterator<Item = Outcome<F>>, exhaustive: bool) -> ConditionVerdict<F> {
    let mut checked = 0;
    let mut unknown = None;
    for o in verdicts {
        checked += 1;
        match o {
            Outcome::Fails(w) => {
                return ConditionVerdict::aggregate(
                    condition,
                    Outcome::Fails(w),
                    Coverage {
                        morphisms_checked: checked,
                        exhaustive,
                    },
                )
            }
            Outcome::Unknown(s) if unknown.is_none() => unknown = Some(s),
            _ => {}
        }
    }
    let outcome = match unknown {
        Some(s) => Outcome::Unknown(s),
        None => Outcome::Holds(None),
    };
    ConditionVerdict::aggregate(
        condition,
        outcome,
        Coverage {
            morphisms_checked: checked,
            exhaustive,
        },
    )
}

/// `premises ⟹ conclusion` between aggregate verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Implication {
    pub premises: Vec<Condition>,
    pub conclusion: Condition,
    /// Only asserted on catalogs declared closed under cones.
    pub needs_cone_closed: bool,
}

impl Implication {
    fn new(premises: &[Condition], conclusion: Condition, needs_cone_closed: bool) -> Self {
        Implication {
            premises: premises.to_vec(),
            conclusion,
            needs_cone_closed,
        }
    }

    pub fn label(&self) -> String {
        let p: Vec<&str> = self.premises.iter().map(|c| c.key()).collect();
        format!("{} => {}", p.join(" & "), self.conclusion.key())
    }
}

/// The implications between the conditions that a correct computation can never violate.
pub fn implications() -> Vec<Implication> {
    use Condition::*;
    vec![
        Implication::new(&[Faithful], SplitMono, true),
        Implication::new(&[Full], SplitMono, false),
        Implication::new(&[SplitMono], Objective, true),
        Implication::new(&[SplitMono], VerdierFull, false),
        Implication::new(&[SplitMono], WeakSplitMono, false),
        Implication::new(&[SplitEpi], WeakSplitEpi, false),
        Implication::new(&[SplitMono], IsoLifting, false),
        Implication::new(&[Faithful], Sincere, false),
        Implication::new(&[Faithful], Objective, false),
        Implication::new(&[Objective, Sincere], Faithful, false),
        Implication::new(&[ReflectsIso], Sincere, false),
        Implication::new(&[SplitMono], SplitEpi, true),
        Implication::new(&[SplitEpi], SplitMono, true),
        Implication::new(&[Sincere], ReflectsIso, true),
        Implication::new(&[Sincere], VerdierFull, true),
        Implication::new(&[Faithful], ReflectsSplitMono, true),
        Implication::new(&[Faithful], ReflectsSplitEpi, true),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ImplicationStatus {
    /// Premises hold and the conclusion holds.
    Confirmed,
    /// Some premise fails or is undecided.
    Vacuous,
    /// Premises hold, conclusion undecided.
    Undecided,
    /// Premises hold, conclusion fails: a bug.
    Violated,
    /// Needs a cone-closed catalog, or a verdict was not computed.
    NotApplicable,
}

impl ImplicationStatus {
    pub fn key(&self) -> &'static str {
        match self {
            ImplicationStatus::Confirmed => "confirmed",
            ImplicationStatus::Vacuous => "vacuous",
            ImplicationStatus::Undecided => "undecided",
            ImplicationStatus::Violated => "violated",
            ImplicationStatus::NotApplicable => "not_applicable",
        }
    }
}

pub fn evaluate_implications(
    status_of: impl Fn(Condition) -> Option<Status>,
    cone_closed: bool,
) -> Vec<(Implication, ImplicationStatus)> {
    implications()
        .into_iter()
        .map(|imp| {
            if imp.needs_cone_closed && !cone_closed {
                return (imp, ImplicationStatus::NotApplicable);
            }
            let premises: Option<Vec<Status>> = imp.premises.iter().map(|&c| status_of(c)).collect();
            let (Some(premises), Some(conclusion)) = (premises, status_of(imp.conclusion)) else {
                return (imp, ImplicationStatus::NotApplicable);
            };
            let st = if !premises.iter().all(|&s| s == Status::Holds) {
                ImplicationStatus::Vacuous
            } else {
                match conclusion {
                    Status::Holds => ImplicationStatus::Confirmed,
                    Status::Unknown => ImplicationStatus::Undecided,
                    Status::Fails => ImplicationStatus::Violated,
                }
            };
            (imp, st)
        })
        .collect()
}
