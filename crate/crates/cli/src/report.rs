//! Reports, rendered as text or JSON from the same values.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;
use serde_json::Number;
use torfix_core::{BehaviorReport, EigenvalueClassification};

use crate::input::InputDoc;

pub fn number(x: &BigInt) -> Number {
    Number::from_str(&x.to_string()).expect("decimal integer")
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenReport {
    pub n_zero: usize,
    pub n_less: usize,
    pub n_on: usize,
    pub n_more: usize,
    pub unity_orders: Vec<u32>,
    /// Enclosures of `|μ|²` for the roots outside the unit circle.
    pub outside_moduli_squared: Vec<String>,
}

impl From<&EigenvalueClassification> for EigenReport {
    fn from(e: &EigenvalueClassification) -> Self {
        Self {
            n_zero: e.n_zero,
            n_less: e.n_less,
            n_on: e.n_on,
            n_more: e.n_more,
            unity_orders: e.unity_orders.clone(),
            outside_moduli_squared: e.outside_moduli.iter().map(|i| i.to_string()).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub verdict: String,
    pub char_poly: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub growth_base: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub period: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle: Option<Vec<Number>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    /// Whether `|a + √disc| = 1` holds for the `+` root (quaternion elements).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub one_root_criterion: Option<bool>,
    pub eigen: EigenReport,
}

impl ClassifyReport {
    pub fn new(char_poly: String, r: &BehaviorReport) -> Self {
        Self {
            verdict: r.verdict.to_string(),
            char_poly,
            growth_base: r.growth_base().map(|g| g.to_string()),
            period: r.period(),
            cycle: r.cycle().map(|c| c.iter().map(number).collect()),
            r: r.r(),
            one_root_criterion: None,
            eigen: (&r.eigen).into(),
        }
    }

    fn write_text(&self, out: &mut String) {
        let _ = writeln!(out, "verdict: {}", self.verdict);
        let _ = writeln!(out, "char_poly: {}", self.char_poly);
        if let Some(g) = &self.growth_base {
            let _ = writeln!(out, "growth_base: {g}");
        }
        if let Some(p) = self.period {
            let _ = writeln!(out, "period: {p}");
        }
        if let Some(c) = &self.cycle {
            let _ = writeln!(out, "cycle: {}", join(c));
        }
        if let Some(r) = self.r {
            let _ = writeln!(out, "r: {r}");
        }
        if let Some(b) = self.one_root_criterion {
            let _ = writeln!(out, "one_root_criterion: {b}");
        }
        let e = &self.eigen;
        let _ = writeln!(
            out,
            "roots: zero {}, inside {}, on circle {}, outside {}",
            e.n_zero, e.n_less, e.n_on, e.n_more
        );
        if !e.unity_orders.is_empty() {
            let _ = writeln!(out, "unity_orders: {}", join(&e.unity_orders));
        }
        if !e.outside_moduli_squared.is_empty() {
            let _ = writeln!(
                out,
                "outside_moduli_squared: {}",
                e.outside_moduli_squared.join(" ")
            );
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub char_poly: String,
    pub values: Vec<Number>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableEntry {
    pub order: u32,
    pub degree: usize,
    pub poly: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub kind: String,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub eps: String,
    pub a: u64,
    pub char_poly: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleSummary {
    pub name: String,
    pub char_poly: String,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExampleReport {
    pub name: String,
    pub input: InputDoc,
    pub report: ClassifyReport,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Classify(ClassifyReport),
    Sequence(SequenceReport),
    Table(TableReport),
    Search(SearchReport),
    Examples(Vec<ExampleSummary>),
    Example(Box<ExampleReport>),
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Report::Classify(r) => r.write_text(&mut out),
            Report::Sequence(s) => {
                let _ = writeln!(out, "char_poly: {}", s.char_poly);
                for (i, v) in s.values.iter().enumerate() {
                    let _ = writeln!(out, "{}\t{v}", i + 1);
                }
            }
            Report::Table(t) => {
                let _ = writeln!(out, "{} table: {} entries", t.kind, t.entries.len());
                for e in &t.entries {
                    let _ = writeln!(out, "order {}\tdegree {}\t{}", e.order, e.degree, e.poly);
                }
            }
            Report::Search(s) => {
                let _ = writeln!(out, "eps: {}", s.eps);
                let _ = writeln!(out, "a: {}", s.a);
                let _ = writeln!(out, "char_poly: {}", s.char_poly);
            }
            Report::Examples(list) => {
                for e in list {
                    let _ = writeln!(out, "{}\t{}\t{}", e.name, e.verdict, e.char_poly);
                }
            }
            Report::Example(e) => {
                let _ = writeln!(out, "name: {}", e.name);
                let _ = writeln!(
                    out,
                    "input: {}",
                    serde_json::to_string(&e.input).expect("serializable input")
                );
                e.report.write_text(&mut out);
            }
        }
        out
    }
}
