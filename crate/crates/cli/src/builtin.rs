//! Scenarios shipped with the binary.

use crate::scenario::ScenarioDocument;

pub const A2: &str = include_str!("../scenarios/a2.json");
pub const IDENTITY: &str = include_str!("../scenarios/identity.json");
pub const ZERO: &str = include_str!("../scenarios/zero.json");
pub const A3_TRUNCATION: &str = include_str!("../scenarios/a3-truncation.json");

pub const ALL: [(&str, &str); 4] = [
    ("a2", A2),
    ("identity", IDENTITY),
    ("zero", ZERO),
    ("a3-truncation", A3_TRUNCATION),
];

fn parse(text: &str) -> ScenarioDocument {
    ScenarioDocument::from_json(text).expect("built-in scenario parses")
}

/// The forgetful functor on the derived catalog of `b → a`.
pub fn a2() -> ScenarioDocument {
    parse(A2)
}

pub fn identity() -> ScenarioDocument {
    parse(IDENTITY)
}

pub fn zero() -> ScenarioDocument {
    parse(ZERO)
}

pub fn a3_truncation() -> ScenarioDocument {
    parse(A3_TRUNCATION)
}

pub fn by_name(name: &str) -> Option<ScenarioDocument> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, t)| parse(t))
}
