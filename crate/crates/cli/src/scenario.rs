//! Scenario documents: the JSON input format and its resolution into a
//! catalog, a functor and a sampling policy.

use std::path::Path;
use std::sync::Arc;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use tricat_core::exactlin::Matrix;
use tricat_core::homotopy::{BoundedComplex, HomSemantics};
use tricat_core::quivrep::{
    projective_module, simple_module, ExactFunctorModel, ModuleMorphism, Quiver, Representation,
};
use tricat_core::standard::killed_objects;
use tricat_core::trifun::{Condition, MorphismCatalog, SamplingPolicy, TriangleFunctorModel};
use tricat_core::{Field, FieldSpec};

use crate::error::{CliError, CliResult};

/// A matrix as rows of exact scalars written as strings.
pub type MatrixSpec = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub field: String,
    pub quiver: QuiverSpec,
    #[serde(default)]
    pub modules: IndexMap<String, ModuleSpec>,
    #[serde(default)]
    pub complexes: IndexMap<String, ComplexSpec>,
    pub functor: FunctorSpec,
    pub catalog: CatalogSpec,
    #[serde(default)]
    pub kernel_objects: KernelObjects,
    #[serde(default = "all_checks")]
    pub checks: Vec<String>,
    #[serde(default)]
    pub policy: PolicySpec,
}

fn all_checks() -> Vec<String> {
    Condition::ALL.iter().map(|c| c.key().to_string()).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub label: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    Simple {
        vertex: String,
    },
    Projective {
        vertex: String,
    },
    /// Vector space dimensions per vertex and a matrix per arrow
    /// (`dim target × dim source`); missing arrows are zero.
    Explicit {
        dims: IndexMap<String, usize>,
        #[serde(default)]
        maps: IndexMap<String, MatrixSpec>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ComplexSpec {
    Stalk {
        module: String,
        #[serde(default)]
        degree: i32,
    },
    Resolution {
        module: String,
    },
    /// `terms[k]` in degree `lo + k`; `differentials[k]` maps term `k` to
    /// term `k + 1`, one matrix per vertex, missing vertices zero.
    Explicit {
        lo: i32,
        terms: Vec<String>,
        #[serde(default)]
        differentials: Vec<IndexMap<String, MatrixSpec>>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctorKind {
    Identity,
    Zero,
    ArrowRestriction,
    VertexTruncation,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    Module,
    #[default]
    Derived,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorSpec {
    pub kind: FunctorKind,
    /// Kept arrows or kept vertices.
    #[serde(default)]
    pub keep: Vec<String>,
    #[serde(default)]
    pub level: Level,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogSpec {
    pub objects: Vec<String>,
    /// Inclusive shift range `[lo, hi]`.
    #[serde(default = "no_shift")]
    pub shifts: [i32; 2],
    #[serde(default)]
    pub cone_closed: bool,
}

fn no_shift() -> [i32; 2] {
    [0, 0]
}

#[derive(Clone, Debug, Default, PartialEq)]
pub enum KernelObjects {
    /// `"auto"`: every catalog object the functor kills.
    #[default]
    Auto,
    Named(Vec<String>),
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum KernelObjectsRepr {
    Tag(String),
    Named(Vec<String>),
}

impl Serialize for KernelObjects {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            KernelObjects::Auto => KernelObjectsRepr::Tag("auto".into()).serialize(s),
            KernelObjects::Named(v) => KernelObjectsRepr::Named(v.clone()).serialize(s),
        }
    }
}

impl<'de> Deserialize<'de> for KernelObjects {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match KernelObjectsRepr::deserialize(d)? {
            KernelObjectsRepr::Tag(t) if t == "auto" => Ok(KernelObjects::Auto),
            KernelObjectsRepr::Tag(t) => Err(serde::de::Error::custom(format!(
                "kernel_objects: expected \"auto\" or a list of names, got \"{t}\""
            ))),
            KernelObjectsRepr::Named(v) => Ok(KernelObjects::Named(v)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolicySpec {
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_bound")]
    pub exhaustive_bound: u64,
    #[serde(default = "default_samples")]
    pub samples: usize,
}

fn default_bound() -> u64 {
    SamplingPolicy::default().exhaustive_bound
}

fn default_samples() -> usize {
    SamplingPolicy::default().samples
}

impl Default for PolicySpec {
    fn default() -> Self {
        let p = SamplingPolicy::default();
        PolicySpec {
            seed: p.seed,
            exhaustive_bound: p.exhaustive_bound,
            samples: p.samples,
        }
    }
}

impl From<PolicySpec> for SamplingPolicy {
    fn from(p: PolicySpec) -> Self {
        SamplingPolicy {
            seed: p.seed,
            exhaustive_bound: p.exhaustive_bound,
            samples: p.samples,
        }
    }
}

impl ScenarioDocument {
    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn field_spec(&self) -> CliResult<FieldSpec> {
        self.field
            .parse()
            .map_err(|e: tricat_core::Error| CliError::Scenario(format!("field: {e}")))
    }

    /// Requested conditions in declaration order.
    pub fn conditions(&self) -> CliResult<Vec<Condition>> {
        let mut out = Vec::new();
        for c in &self.checks {
            let cond = Condition::from_key(c).ok_or_else(|| CliError::Scenario(format!("unknown check `{c}`")))?;
            if !out.contains(&cond) {
                out.push(cond);
            }
        }
        Ok(out)
    }
}

/// Reads and validates a scenario file: every name must resolve and every
/// matrix must parse over the declared field.
pub fn load_scenario(path: impl AsRef<Path>) -> CliResult<ScenarioDocument> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let doc = ScenarioDocument::from_json(&text)?;
    validate(&doc)?;
    Ok(doc)
}

pub fn validate(doc: &ScenarioDocument) -> CliResult<()> {
    doc.conditions()?;
    crate::dispatch!(doc.field_spec()?, |k| resolve(doc, k).map(|_| ()))
}

/// A scenario turned into library objects.
pub struct Resolved<F: Field> {
    pub quiver: Arc<Quiver>,
    pub catalog: Arc<MorphismCatalog<F>>,
    pub functor: TriangleFunctorModel<F>,
    pub kernel_objects: Vec<usize>,
    pub policy: SamplingPolicy,
}

fn ctx(what: impl std::fmt::Display) -> impl FnOnce(tricat_core::Error) -> CliError {
    let what = what.to_string();
    move |e| CliError::Core { context: what, source: e }
}

pub fn parse_matrix<F: Field>(field: F, rows: usize, cols: usize, m: &MatrixSpec, what: &str) -> CliResult<Matrix<F>> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(CliError::Scenario(format!("{what}: expected a {rows}×{cols} matrix")));
    }
    let mut parsed = Vec::with_capacity(rows);
    for r in m {
        let row = r
            .iter()
            .map(|s| field.parse_elem(s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(ctx(what))?;
        parsed.push(row);
    }
    Matrix::from_rows(field, cols, &parsed).map_err(ctx(what))
}

pub fn format_matrix<F: Field>(m: &Matrix<F>) -> MatrixSpec {
    let field = m.field();
    m.to_rows()
        .iter()
        .map(|r| r.iter().map(|e| field.format_elem(e)).collect())
        .collect()
}

fn build_quiver(q: &QuiverSpec) -> CliResult<Arc<Quiver>> {
    let vertices: Vec<&str> = q.vertices.iter().map(String::as_str).collect();
    let arrows: Vec<(&str, &str, &str)> = q
        .arrows
        .iter()
        .map(|a| (a.label.as_str(), a.source.as_str(), a.target.as_str()))
        .collect();
    Ok(Arc::new(Quiver::new(&vertices, &arrows).map_err(ctx("quiver"))?))
}

fn build_module<F: Field>(q: &Arc<Quiver>, field: F, name: &str, spec: &ModuleSpec) -> CliResult<Representation<F>> {
    let what = format!("module `{name}`");
    match spec {
        ModuleSpec::Simple { vertex } => simple_module(q, field, vertex).map_err(ctx(what)),
        ModuleSpec::Projective { vertex } => projective_module(q, field, vertex).map_err(ctx(what)),
        ModuleSpec::Explicit { dims, maps } => {
            let mut d = vec![0; q.vertex_count()];
            for (v, &n) in dims {
                d[q.vertex_index(v).map_err(ctx(&what))?] = n;
            }
            for a in maps.keys() {
                q.arrow_index(a).map_err(ctx(&what))?;
            }
            let mats = q
                .arrows()
                .iter()
                .map(|a| {
                    let (r, c) = (d[a.target], d[a.source]);
                    match maps.get(&a.label) {
                        Some(m) => parse_matrix(field, r, c, m, &format!("{what}, arrow `{}`", a.label)),
                        None => Ok(Matrix::zeros(field, r, c)),
                    }
                })
                .collect::<CliResult<Vec<_>>>()?;
            Representation::new(q.clone(), field, d, mats).map_err(ctx(what))
        }
    }
}

fn lookup<'a, T>(map: &'a IndexMap<String, T>, name: &str, kind: &str, user: &str) -> CliResult<&'a T> {
    map.get(name)
        .ok_or_else(|| CliError::Scenario(format!("{user}: unknown {kind} `{name}`")))
}

fn build_complex<F: Field>(
    q: &Arc<Quiver>,
    field: F,
    modules: &IndexMap<String, Arc<Representation<F>>>,
    name: &str,
    spec: &ComplexSpec,
) -> CliResult<BoundedComplex<F>> {
    let what = format!("complex `{name}`");
    match spec {
        ComplexSpec::Stalk { module, degree } => {
            Ok(BoundedComplex::stalk(lookup(modules, module, "module", &what)?.clone(), *degree))
        }
        ComplexSpec::Resolution { module } => {
            BoundedComplex::resolve(lookup(modules, module, "module", &what)?).map_err(ctx(what))
        }
        ComplexSpec::Explicit { lo, terms, differentials } => {
            let terms = terms
                .iter()
                .map(|t| lookup(modules, t, "module", &what).cloned())
                .collect::<CliResult<Vec<_>>>()?;
            if differentials.len() + 1 != terms.len() && !terms.is_empty() {
                return Err(CliError::Scenario(format!(
                    "{what}: {} terms need {} differentials",
                    terms.len(),
                    terms.len() - 1
                )));
            }
            let mut diffs = Vec::new();
            for (k, d) in differentials.iter().enumerate() {
                let (s, t) = (&terms[k], &terms[k + 1]);
                for v in d.keys() {
                    q.vertex_index(v).map_err(ctx(&what))?;
                }
                let maps = (0..q.vertex_count())
                    .map(|v| {
                        let (r, c) = (t.dim(v), s.dim(v));
                        match d.get(q.vertex_label(v)) {
                            Some(m) => parse_matrix(
                                field,
                                r,
                                c,
                                m,
                                &format!("{what}, differential {k} at `{}`", q.vertex_label(v)),
                            ),
                            None => Ok(Matrix::zeros(field, r, c)),
                        }
                    })
                    .collect::<CliResult<Vec<_>>>()?;
                diffs.push(ModuleMorphism::new(s.clone(), t.clone(), maps).map_err(ctx(&what))?);
            }
            BoundedComplex::new(q.clone(), field, *lo, terms, diffs).map_err(ctx(what))
        }
    }
}

fn functor_name(spec: &FunctorSpec) -> String {
    if let Some(n) = &spec.name {
        return n.clone();
    }
    match spec.kind {
        FunctorKind::Identity => "identity".into(),
        FunctorKind::Zero => "zero".into(),
        FunctorKind::ArrowRestriction if spec.keep.is_empty() => "forget-arrows".into(),
        FunctorKind::ArrowRestriction => format!("restrict-arrows-to-{}", spec.keep.join(",")),
        FunctorKind::VertexTruncation => format!("truncate-to-{}", spec.keep.join("")),
    }
}

pub fn resolve<F: Field>(doc: &ScenarioDocument, field: F) -> CliResult<Resolved<F>> {
    let quiver = build_quiver(&doc.quiver)?;
    let mut modules = IndexMap::new();
    for (name, spec) in &doc.modules {
        modules.insert(name.clone(), Arc::new(build_module(&quiver, field, name, spec)?));
    }
    let mut complexes = IndexMap::new();
    for (name, spec) in &doc.complexes {
        if modules.contains_key(name) {
            return Err(CliError::Scenario(format!("`{name}` names both a module and a complex")));
        }
        complexes.insert(name.clone(), Arc::new(build_complex(&quiver, field, &modules, name, spec)?));
    }

    let level = doc.functor.level;
    let mut base = Vec::new();
    for name in &doc.catalog.objects {
        let c = if let Some(c) = complexes.get(name) {
            c.clone()
        } else if let Some(m) = modules.get(name) {
            match level {
                Level::Derived => Arc::new(BoundedComplex::resolve(m).map_err(ctx(format!("catalog object `{name}`")))?),
                Level::Module => Arc::new(BoundedComplex::stalk(m.clone(), 0)),
            }
        } else {
            return Err(CliError::Scenario(format!("catalog: unknown object `{name}`")));
        };
        base.push((name.clone(), c));
    }
    if base.is_empty() {
        return Err(CliError::Scenario("catalog: no objects".into()));
    }
    let [lo, hi] = doc.catalog.shifts;
    if lo > hi {
        return Err(CliError::Scenario(format!("catalog: empty shift range [{lo}, {hi}]")));
    }
    let semantics = match level {
        Level::Derived => HomSemantics::Derived,
        Level::Module => HomSemantics::Homotopy,
    };
    let catalog = Arc::new(
        MorphismCatalog::with_shifts(field, base, lo..=hi, semantics)
            .map_err(ctx("catalog"))?
            .declare_cone_closed(doc.catalog.cone_closed),
    );

    let keep: Vec<&str> = doc.functor.keep.iter().map(String::as_str).collect();
    let functor = match doc.functor.kind {
        FunctorKind::Identity => TriangleFunctorModel::identity(&catalog),
        FunctorKind::Zero => TriangleFunctorModel::zero(&catalog),
        FunctorKind::ArrowRestriction => ExactFunctorModel::arrow_restriction(&quiver, &keep)
            .and_then(|e| TriangleFunctorModel::induce_termwise(&e, &catalog)),
        FunctorKind::VertexTruncation => ExactFunctorModel::vertex_truncation(&quiver, &keep)
            .and_then(|e| TriangleFunctorModel::induce_termwise(&e, &catalog)),
    }
    .map_err(ctx("functor"))?
    .with_name(functor_name(&doc.functor));

    let kernel_objects = match &doc.kernel_objects {
        KernelObjects::Auto => killed_objects(&functor),
        KernelObjects::Named(names) => names
            .iter()
            .map(|n| catalog.index(n).map_err(ctx("kernel_objects")))
            .collect::<CliResult<Vec<_>>>()?,
    };

    Ok(Resolved {
        quiver,
        catalog,
        functor,
        kernel_objects,
        policy: doc.policy.into(),
    })
}
