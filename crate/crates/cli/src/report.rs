//! Report documents: running a scenario, serializing verdicts with
//! chain-level witnesses, and re-verifying those witnesses after loading.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use tricat_core::homotopy::{BoundedComplex, ChainMap, FiniteSubcategory};
use tricat_core::quivrep::ModuleMorphism;
use tricat_core::trifun::{
    check_i, check_ri, check_rse, check_rsm, check_se, check_sm, check_wse, check_wsm, evaluate_implications,
    functoriality_check, representative, Condition, ConditionVerdict, ImplicationStatus, MorphismRef, Outcome, Side,
    Status, TriangleFunctorModel,
};
use tricat_core::verdict::{build_ideal_table, full_report, IdealTable};
use tricat_core::Field;

use crate::error::{CliError, CliResult};
use crate::scenario::{format_matrix, parse_matrix, resolve, KernelObjects, MatrixSpec, Resolved, ScenarioDocument};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    /// The scenario as run, overrides applied; makes the report self-contained.
    pub scenario: ScenarioDocument,
    pub functor: String,
    pub catalog: Vec<CatalogEntry>,
    pub cone_closed: bool,
    pub kernel_objects: Vec<String>,
    /// Condition key to `holds`, `fails` or `unknown`.
    pub verdicts: IndexMap<String, String>,
    pub conditions: Vec<ConditionEntry>,
    pub ideal_table: Vec<IdealEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotients: Option<QuotientSection>,
    pub implications: Vec<ImplicationEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub degrees: [i32; 2],
    pub total_dim: usize,
    pub killed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConditionEntry {
    pub condition: String,
    pub status: String,
    pub checked: usize,
    pub exhaustive: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessDoc {
    pub detail: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub objects: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<MorphismDoc>,
}

/// A morphism class with one chain-map representative, degree by degree.
/// Target-side morphisms live between the images `F(X)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MorphismDoc {
    pub role: String,
    pub side: String,
    pub source: String,
    pub target: String,
    pub class: Vec<String>,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentDoc {
    pub degree: i32,
    /// Vertex label to matrix `dim target × dim source`.
    pub maps: IndexMap<String, MatrixSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub source: String,
    pub target: String,
    pub hom: usize,
    pub ker: usize,
    pub gen: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientSection {
    pub verdier_labeled: bool,
    pub quotients_agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationEntry {
    pub rule: String,
    pub status: String,
}

impl ReportDocument {
    /// Pretty JSON with a trailing newline; field order is fixed by the types.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn status(&self, c: Condition) -> Option<&str> {
        self.verdicts.get(c.key()).map(String::as_str)
    }

    pub fn entry(&self, c: Condition) -> Option<&ConditionEntry> {
        self.conditions.iter().find(|e| e.condition == c.key())
    }

    pub fn ideal(&self, source: &str, target: &str) -> Option<&IdealEntry> {
        self.ideal_table.iter().find(|e| e.source == source && e.target == target)
    }

    /// Implications broken by the verdicts, re-evaluated from the verdict
    /// map rather than read from the stored section.
    pub fn violations(&self) -> Vec<String> {
        let status_of = |c: Condition| {
            self.verdicts.get(c.key()).and_then(|s| match s.as_str() {
                "holds" => Some(Status::Holds),
                "fails" => Some(Status::Fails),
                "unknown" => Some(Status::Unknown),
                _ => None,
            })
        };
        evaluate_implications(status_of, self.cone_closed)
            .into_iter()
            .filter(|(_, st)| *st == ImplicationStatus::Violated)
            .map(|(imp, _)| imp.label())
            .collect()
    }
}

fn ctx(what: &str) -> impl FnOnce(tricat_core::Error) -> CliError + '_ {
    move |e| CliError::Core {
        context: what.to_string(),
        source: e,
    }
}

/// Runs every requested check of the scenario.
pub fn run(doc: &ScenarioDocument) -> CliResult<ReportDocument> {
    let conds = doc.conditions()?;
    crate::dispatch!(doc.field_spec()?, |k| run_in(doc, &conds, k))
}

fn run_in<F: Field>(doc: &ScenarioDocument, conds: &[Condition], field: F) -> CliResult<ReportDocument> {
    let r = resolve(doc, field)?;
    let cat = &r.catalog;
    let killed: Vec<bool> = (0..cat.len()).map(|x| r.functor.target().is_zero_object(x)).collect();
    let mut out = ReportDocument {
        scenario: doc.clone(),
        functor: r.functor.name().to_string(),
        catalog: (0..cat.len())
            .map(|x| {
                let c = cat.object(x);
                CatalogEntry {
                    name: cat.name(x).to_string(),
                    degrees: [c.lo(), c.hi()],
                    total_dim: c.total_dim(),
                    killed: killed[x],
                }
            })
            .collect(),
        cone_closed: cat.is_cone_closed(),
        kernel_objects: r.kernel_objects.iter().map(|&x| cat.name(x).to_string()).collect(),
        verdicts: IndexMap::new(),
        conditions: Vec::new(),
        ideal_table: Vec::new(),
        quotients: None,
        implications: Vec::new(),
    };
    if conds.is_empty() {
        return Ok(out);
    }

    let full = full_report(&r.functor, &r.kernel_objects, &r.policy).map_err(ctx("run"))?;
    for &c in conds {
        let v = full
            .conditions
            .verdict(c)
            .ok_or_else(|| CliError::Report(format!("no verdict computed for {c}")))?;
        out.verdicts.insert(c.key().to_string(), v.status().key().to_string());
        out.conditions.push(condition_entry(&r.functor, v));
    }
    let status_of = |c: Condition| conds.contains(&c).then(|| full.conditions.status(c)).flatten();
    out.implications = evaluate_implications(status_of, cat.is_cone_closed())
        .into_iter()
        .map(|(imp, st)| ImplicationEntry {
            rule: imp.label(),
            status: st.key().to_string(),
        })
        .collect();
    out.ideal_table = full
        .comparison
        .pairs
        .iter()
        .filter(|p| p.hom_dim > 0)
        .map(|p| IdealEntry {
            source: cat.name(p.source).to_string(),
            target: cat.name(p.target).to_string(),
            hom: p.hom_dim,
            ker: p.hom_dim - p.by_kernel,
            gen: p.hom_dim - p.by_generated,
        })
        .collect();
    out.quotients = Some(QuotientSection {
        verdier_labeled: full.comparison.verdier_labeled,
        quotients_agree: full.comparison.quotients_agree,
    });
    Ok(out)
}

fn condition_entry<F: Field>(f: &TriangleFunctorModel<F>, v: &ConditionVerdict<F>) -> ConditionEntry {
    let cat = f.catalog();
    let (reason, witness) = match &v.outcome {
        Outcome::Unknown(s) => (Some(s.clone()), None),
        o => (
            None,
            o.witness().map(|w| WitnessDoc {
                detail: w.detail.clone(),
                objects: w.objects.iter().map(|&x| cat.name(x).to_string()).collect(),
                morphisms: w.morphisms.iter().map(|m| morphism_doc(f, m)).collect(),
            }),
        ),
    };
    ConditionEntry {
        condition: v.condition.key().to_string(),
        status: v.status().key().to_string(),
        checked: v.coverage.morphisms_checked,
        exhaustive: v.coverage.exhaustive,
        note: v.note.clone(),
        reason,
        witness,
    }
}

fn side_name(side: Side, name: &str) -> String {
    match side {
        Side::Source => name.to_string(),
        Side::Target => format!("F({name})"),
    }
}

fn overlap<F: Field>(c: &BoundedComplex<F>, d: &BoundedComplex<F>) -> std::ops::RangeInclusive<i32> {
    if c.is_zero_complex() || d.is_zero_complex() {
        return 1..=0;
    }
    c.lo().max(d.lo())..=c.hi().min(d.hi())
}

pub fn morphism_doc<F: Field>(f: &TriangleFunctorModel<F>, m: &MorphismRef<F>) -> MorphismDoc {
    let cat = f.catalog();
    let field = f.field();
    let cm = representative(f, m);
    let q = cm.source().quiver().clone();
    let components = overlap(cm.source(), cm.target())
        .map(|i| {
            let c = cm.component(i);
            ComponentDoc {
                degree: i,
                maps: (0..q.vertex_count())
                    .map(|v| (q.vertex_label(v).to_string(), format_matrix(c.map(v))))
                    .collect(),
            }
        })
        .collect();
    MorphismDoc {
        role: m.role.clone(),
        side: match m.side {
            Side::Source => "source".into(),
            Side::Target => "target".into(),
        },
        source: side_name(m.side, cat.name(m.source)),
        target: side_name(m.side, cat.name(m.target)),
        class: m.coords.iter().map(|e| field.format_elem(e)).collect(),
        components,
    }
}

/// Outcome of re-checking one serialized failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessCheck {
    pub condition: String,
    pub reproduced: bool,
    pub detail: String,
}

/// Rebuilds the scenario embedded in the report and checks that every
/// `fails` verdict carries a witness that still fails.
pub fn verify_report(report: &ReportDocument) -> CliResult<Vec<WitnessCheck>> {
    crate::dispatch!(report.scenario.field_spec()?, |k| verify_in(report, k))
}

fn verify_in<F: Field>(report: &ReportDocument, field: F) -> CliResult<Vec<WitnessCheck>> {
    let r = resolve(&report.scenario, field)?;
    let mut table = None;
    let mut out = Vec::new();
    for e in report.conditions.iter().filter(|e| e.status == Status::Fails.key()) {
        let res = match Condition::from_key(&e.condition) {
            None => Err(format!("unknown condition `{}`", e.condition)),
            Some(c) => match &e.witness {
                None => Err("no witness serialized".to_string()),
                Some(w) => {
                    if c == Condition::Objective && table.is_none() {
                        let ks = kernel_indices(&r, report)?;
                        table = Some(build_ideal_table(&r.functor, &ks).map_err(ctx("kernel_objects"))?);
                    }
                    reproduce(&r, table.as_ref(), c, w)
                }
            },
        };
        out.push(WitnessCheck {
            condition: e.condition.clone(),
            reproduced: res.is_ok(),
            detail: res.unwrap_or_else(|s| s),
        });
    }
    Ok(out)
}

fn kernel_indices<F: Field>(r: &Resolved<F>, report: &ReportDocument) -> CliResult<Vec<usize>> {
    let names = match &report.scenario.kernel_objects {
        KernelObjects::Auto => &report.kernel_objects,
        KernelObjects::Named(n) => n,
    };
    names
        .iter()
        .map(|n| r.catalog.index(n).map_err(ctx("kernel_objects")))
        .collect()
}

fn object_index<F: Field>(r: &Resolved<F>, name: &str, side: Side) -> Result<usize, String> {
    let base = match side {
        Side::Source => Some(name),
        Side::Target => name.strip_prefix("F(").and_then(|s| s.strip_suffix(')')),
    };
    base.and_then(|b| r.catalog.index(b).ok())
        .ok_or_else(|| format!("unknown object `{name}`"))
}

/// Parses a serialized morphism and checks its components against its class.
fn parse_morphism<F: Field>(r: &Resolved<F>, m: &MorphismDoc) -> Result<MorphismRef<F>, String> {
    let field = r.catalog.field();
    let side = match m.side.as_str() {
        "source" => Side::Source,
        "target" => Side::Target,
        s => return Err(format!("unknown side `{s}`")),
    };
    let (x, y) = (object_index(r, &m.source, side)?, object_index(r, &m.target, side)?);
    let cat: &FiniteSubcategory<F> = match side {
        Side::Source => r.functor.source(),
        Side::Target => r.functor.target(),
    };
    let hom = cat.hom(x, y);
    if m.class.len() != hom.dim() {
        return Err(format!("{}: class has {} coordinates, Hom has dimension {}", m.role, m.class.len(), hom.dim()));
    }
    let coords = m
        .class
        .iter()
        .map(|s| field.parse_elem(s))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| format!("{}: {e}", m.role))?;
    let (c, d) = (cat.object(x).clone(), cat.object(y).clone());
    let q = c.quiver().clone();
    for comp in &m.components {
        if !overlap(&c, &d).contains(&comp.degree) {
            return Err(format!("{}: component in degree {} outside the overlap", m.role, comp.degree));
        }
    }
    let chain = ChainMap::from_fn(c.clone(), d.clone(), |i| {
        let (s, t) = (c.term(i), d.term(i));
        let Some(comp) = m.components.iter().find(|k| k.degree == i) else {
            return Ok(ModuleMorphism::zero(s, t));
        };
        let maps = (0..q.vertex_count())
            .map(|v| {
                let label = q.vertex_label(v);
                match comp.maps.get(label) {
                    Some(mat) => parse_matrix(field, t.dim(v), s.dim(v), mat, label)
                        .map_err(|e| tricat_core::Error::Parse(e.to_string())),
                    None => Ok(tricat_core::exactlin::Matrix::zeros(field, t.dim(v), s.dim(v))),
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        ModuleMorphism::new(s.clone(), t.clone(), maps)
    })
    .map_err(|e| format!("{}: {e}", m.role))?;
    let class = hom.class_coords(&chain).map_err(|e| format!("{}: {e}", m.role))?;
    if class != coords {
        return Err(format!("{}: components do not represent the stated class", m.role));
    }
    Ok(MorphismRef {
        role: m.role.clone(),
        side,
        source: x,
        target: y,
        coords,
    })
}

fn reproduce<F: Field>(
    r: &Resolved<F>,
    table: Option<&IdealTable<F>>,
    c: Condition,
    w: &WitnessDoc,
) -> Result<String, String> {
    let f = &r.functor;
    let field = f.field();
    let morphisms = w
        .morphisms
        .iter()
        .map(|m| parse_morphism(r, m))
        .collect::<Result<Vec<_>, _>>()?;
    let first = || morphisms.first().ok_or_else(|| "witness has no morphism".to_string());
    let nonzero = |m: &MorphismRef<F>| m.coords.iter().any(|e| !field.is_zero(e));
    let pointwise = |check: fn(&TriangleFunctorModel<F>, usize, usize, &[F::Elem]) -> ConditionVerdict<F>| {
        let m = first()?;
        if m.side != Side::Source {
            return Err(format!("{}: expected a source-side morphism", m.role));
        }
        if check(f, m.source, m.target, &m.coords).fails() {
            Ok(format!("{c} fails at {}: {} -> {}", m.role, r.catalog.name(m.source), r.catalog.name(m.target)))
        } else {
            Err(format!("{c} does not fail at the serialized {}", m.role))
        }
    };
    match c {
        Condition::Functorial => {
            if functoriality_check(f).fails() {
                Ok("functoriality failure reproduced".into())
            } else {
                Err("functoriality failure not reproduced".into())
            }
        }
        Condition::Faithful => {
            let m = first()?;
            if nonzero(m) && f.map_class(m.source, m.target, &m.coords).iter().all(|e| field.is_zero(e)) {
                Ok(format!("F({}) = 0 with {} nonzero", m.role, m.role))
            } else {
                Err(format!("{} is zero or F({}) is nonzero", m.role, m.role))
            }
        }
        Condition::Full => {
            let m = first()?;
            let image = f.hom_map(m.source, m.target).image_basis();
            if m.side == Side::Target && !image.contains(&m.coords).map_err(|e| e.to_string())? {
                Ok(format!("{} is not in the image of F", m.role))
            } else {
                Err(format!("{} lies in the image of F", m.role))
            }
        }
        Condition::Sincere => {
            let names = &w.objects;
            let x = names
                .first()
                .ok_or("witness has no object")
                .and_then(|n| r.catalog.index(n).map_err(|_| "unknown object"))
                .map_err(str::to_string)?;
            if !f.source().is_zero_object(x) && f.target().is_zero_object(x) {
                Ok(format!("F({}) = 0", names[0]))
            } else {
                Err(format!("{} is zero or not killed", names[0]))
            }
        }
        Condition::SplitMono => pointwise(check_sm),
        Condition::SplitEpi => pointwise(check_se),
        Condition::IsoLifting | Condition::VerdierFull => pointwise(check_i),
        Condition::ReflectsSplitMono => pointwise(check_rsm),
        Condition::ReflectsSplitEpi => pointwise(check_rse),
        Condition::ReflectsIso => pointwise(check_ri),
        Condition::WeakSplitMono | Condition::WeakSplitEpi => {
            let m = first()?;
            let all: Vec<usize> = (0..r.catalog.len()).collect();
            let v = if c == Condition::WeakSplitMono {
                check_wsm(f, m.source, m.target, &m.coords, &all, &r.policy)
            } else {
                check_wse(f, m.source, m.target, &m.coords, &all, &r.policy)
            };
            if v.fails() {
                Ok(format!("{c} fails at {}", m.role))
            } else {
                Err(format!("{c} does not fail at the serialized {}", m.role))
            }
        }
        Condition::Objective => {
            let m = first()?;
            let t = table.ok_or("no ideal table")?;
            let inside = |s: &tricat_core::exactlin::Subspace<F>| s.contains(&m.coords).map_err(|e| e.to_string());
            if nonzero(m) && inside(t.ker(m.source, m.target))? && !inside(t.gen(m.source, m.target))? {
                Ok(format!("{} lies in ker but not in gen", m.role))
            } else {
                Err(format!("{} does not separate ker from gen", m.role))
            }
        }
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn empty_checks_is_a_no_op() {
        let mut doc = builtin::a2();
        doc.checks.clear();
        let rep = run(&doc).unwrap();
        assert!(rep.verdicts.is_empty() && rep.implications.is_empty() && rep.ideal_table.is_empty());
        assert_eq!(rep.catalog.len(), 6);
    }

    #[test]
    fn verdicts_follow_declaration_order() {
        let mut doc = builtin::a2();
        doc.checks = vec!["objective".into(), "sincere".into(), "SM".into()];
        let rep = run(&doc).unwrap();
        let keys: Vec<&String> = rep.verdicts.keys().collect();
        assert_eq!(keys, ["objective", "sincere", "SM"]);
        let undecidable = rep.implications.iter().find(|i| i.rule == "faithful => SM").unwrap();
        assert_eq!(undecidable.status, "not_applicable");
    }

    #[test]
    fn golden_witnesses_round_trip() {
        let rep = run(&builtin::a2()).unwrap();
        let back = ReportDocument::from_json(&rep.to_json()).unwrap();
        assert_eq!(back, rep);
        let checks = verify_report(&back).unwrap();
        assert!(checks.len() >= 4);
        assert!(checks.iter().all(|c| c.reproduced), "{checks:?}");
    }

    #[test]
    fn tampered_witness_is_rejected() {
        let rep = run(&builtin::a2()).unwrap();
        let mut bad = rep.clone();
        let e = bad.conditions.iter_mut().find(|e| e.condition == "faithful").unwrap();
        let m = &mut e.witness.as_mut().unwrap().morphisms[0];
        m.class = vec!["0".into(); m.class.len()];
        let checks = verify_report(&bad).unwrap();
        let c = checks.iter().find(|c| c.condition == "faithful").unwrap();
        assert!(!c.reproduced);

        let mut bad = rep;
        let e = bad.conditions.iter_mut().find(|e| e.condition == "SM").unwrap();
        let m = &mut e.witness.as_mut().unwrap().morphisms[0];
        for comp in &mut m.components {
            for mat in comp.maps.values_mut() {
                for row in mat.iter_mut() {
                    for x in row.iter_mut() {
                        *x = "0".into();
                    }
                }
            }
        }
        let checks = verify_report(&bad).unwrap();
        let c = checks.iter().find(|c| c.condition == "SM").unwrap();
        assert!(!c.reproduced && c.detail.contains("class"), "{c:?}");
    }

    #[test]
    fn violations_are_recomputed_from_verdicts() {
        let mut rep = run(&builtin::a2()).unwrap();
        assert!(rep.violations().is_empty());
        rep.verdicts.insert("faithful".into(), "holds".into());
        assert_eq!(rep.violations(), ["faithful => SM", "faithful => objective", "faithful => RSM", "faithful => RSE"]);
    }
}
