//! Rendering reports as JSON or as a verdict table.

use std::fmt::Write;

use clap::ValueEnum;

use crate::report::{MorphismDoc, ReportDocument};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

pub fn emit(report: &ReportDocument, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Text => text(report),
    }
}

fn arrow(m: &MorphismDoc) -> String {
    format!("{}: {} -> {}", m.role, m.source, m.target)
}

fn text(r: &ReportDocument) -> String {
    let mut s = String::new();
    let sc = &r.scenario;
    let _ = writeln!(
        s,
        "scenario {}  field {}  seed {}",
        sc.name.as_deref().unwrap_or("(unnamed)"),
        sc.field,
        sc.policy.seed
    );
    let _ = writeln!(
        s,
        "functor {}  catalog {} objects{}",
        r.functor,
        r.catalog.len(),
        if r.cone_closed { " (cone-closed)" } else { "" }
    );
    let ks = if r.kernel_objects.is_empty() {
        "none".to_string()
    } else {
        r.kernel_objects.join(", ")
    };
    let _ = writeln!(s, "kernel objects: {ks}");
    if r.conditions.is_empty() {
        let _ = writeln!(s, "\nno checks requested");
        return s;
    }

    let _ = writeln!(s, "\n{:<14}{:<9}{}", "condition", "status", "witness");
    for e in &r.conditions {
        let mut line = format!("{:<14}{:<9}", e.condition, e.status);
        if let Some(w) = &e.witness {
            let mut parts: Vec<String> = w.morphisms.iter().map(arrow).collect();
            parts.extend(w.objects.iter().map(|o| format!("object {o}")));
            let _ = write!(line, "{}  ({})", parts.join("; "), w.detail);
        } else if let Some(reason) = &e.reason {
            let _ = write!(line, "({reason})");
        }
        if !e.exhaustive {
            line.push_str("  [sampled]");
        }
        let _ = writeln!(s, "{}", line.trim_end());
    }

    let nontrivial: Vec<_> = r.ideal_table.iter().filter(|e| e.ker > 0 || e.gen > 0).collect();
    let _ = writeln!(s, "\nideal table ({} pairs with nonzero Hom)", r.ideal_table.len());
    if nontrivial.is_empty() {
        let _ = writeln!(s, "  ker = gen = 0 everywhere");
    }
    for e in nontrivial {
        let _ = writeln!(
            s,
            "  {} -> {}  hom {}  ker {}  gen {}",
            e.source, e.target, e.hom, e.ker, e.gen
        );
    }
    if let Some(q) = &r.quotients {
        let _ = writeln!(
            s,
            "quotients agree: {}  verdier-labeled: {}",
            if q.quotients_agree { "yes" } else { "no" },
            if q.verdier_labeled { "yes" } else { "no" }
        );
    }

    let _ = writeln!(s, "\nimplications");
    for i in &r.implications {
        let _ = writeln!(s, "  {:<34}{}", i.rule, i.status);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{builtin, run};

    #[test]
    fn text_has_a_line_per_condition() {
        let r = run(&builtin::identity()).unwrap();
        let t = emit(&r, Format::Text);
        for key in r.verdicts.keys() {
            assert!(t.lines().any(|l| l.starts_with(&format!("{key} ")) && l.contains("holds")), "{key}");
        }
    }

    #[test]
    fn json_contains_objective_fails() {
        let r = run(&builtin::a2()).unwrap();
        assert!(emit(&r, Format::Json).contains("\"objective\": \"fails\""));
    }
}
