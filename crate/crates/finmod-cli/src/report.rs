//! Per-instance report schemas for the analyze commands, with a legend
//! mapping element ids to coordinate tuples so witnesses stay readable.

use finmod::catalog::{verdicts, SymbolicVerdict, SymbolicZModule};
use finmod::endo::{SymmetryAnalysis, SymmetryReport};
use finmod::ideal::{
    brauer_split, ideals, is_local_ring, is_semiprime, is_us_ring, jacobson_radical,
    maximal_ideals, minimal_ideals, theorem0_check, BrauerSplit, Side, UsRingReport,
};
use finmod::invariants::{Decomposition, InvariantReport};
use finmod::module::FiniteModule;
use finmod::ring::FiniteRing;
use finmod::{Limits, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::sync::Arc;

/// Element-id legend for one module.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Legend {
    pub coord_moduli: Vec<u32>,
    pub elements: Vec<Vec<u32>>,
}

impl Legend {
    pub fn of(module: &FiniteModule) -> Self {
        Legend {
            coord_moduli: module.coord_moduli().to_vec(),
            elements: module
                .elements()
                .map(|m| module.coords(m).to_vec())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingReport {
    pub label: String,
    pub presentation: String,
    pub order: usize,
    pub commutative: bool,
    pub jacobson_radical: Vec<u16>,
    pub jacobson_degenerate: bool,
    pub idempotents: Vec<u16>,
    pub right_ideals: Vec<Vec<u16>>,
    pub left_ideal_count: usize,
    pub two_sided_ideal_count: usize,
    pub minimal_right_ideals: Vec<Vec<u16>>,
    pub maximal_right_ideals: Vec<Vec<u16>>,
    pub local: bool,
    pub semiprime: bool,
    pub us_right: bool,
    pub us_left: bool,
    pub small_right_ideals: Vec<Vec<u16>>,
    pub trichotomy_right: UsRingReport,
    pub trichotomy_left: UsRingReport,
    pub minimal_ideal_splits: Vec<MinimalIdealSplit>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinimalIdealSplit {
    pub ideal: Vec<u16>,
    pub outcome: String,
}

pub fn ring_report(label: &str, ring: &Arc<FiniteRing>, limits: &Limits) -> Result<RingReport> {
    let rights = ideals(ring, Side::Right, limits)?;
    let lefts = ideals(ring, Side::Left, limits)?;
    let two_sided = ideals(ring, Side::TwoSided, limits)?;
    let jac = jacobson_radical(ring, limits)?;
    let minimals = minimal_ideals(&rights);
    let maximals = maximal_ideals(&rights, ring.order());
    let us_right = is_us_ring(ring, Side::Right, limits)?;
    let us_left = is_us_ring(ring, Side::Left, limits)?;
    let mut splits = Vec::new();
    for a in &minimals {
        let outcome = match brauer_split(ring, a, limits)? {
            Ok(BrauerSplit::Idempotent { e }) => format!("idempotent e={e}"),
            Ok(BrauerSplit::Nilpotent { .. }) => "square zero".to_string(),
            Err(err) => format!("error: {err}"),
        };
        splits.push(MinimalIdealSplit {
            ideal: a.ids(),
            outcome,
        });
    }
    Ok(RingReport {
        label: label.to_string(),
        presentation: ring.presentation().to_string(),
        order: ring.order(),
        commutative: ring.is_commutative(),
        jacobson_radical: jac.ideal.ids(),
        jacobson_degenerate: jac.degenerate,
        idempotents: ring.idempotents(),
        right_ideals: rights.iter().map(|i| i.ids()).collect(),
        left_ideal_count: lefts.len(),
        two_sided_ideal_count: two_sided.len(),
        minimal_right_ideals: minimals.iter().map(|i| i.ids()).collect(),
        maximal_right_ideals: maximals.iter().map(|i| i.ids()).collect(),
        local: !ring.is_zero_ring() && is_local_ring(ring, limits)?,
        semiprime: is_semiprime(ring, limits)?,
        us_right: us_right.is_us,
        us_left: us_left.is_us,
        small_right_ideals: us_right.small_ideals,
        trichotomy_right: theorem0_check(ring, Side::Right, limits)?,
        trichotomy_left: theorem0_check(ring, Side::Left, limits)?,
        minimal_ideal_splits: splits,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModuleReport {
    pub label: String,
    pub ring_order: usize,
    pub invariants: InvariantReport,
    pub legend: Legend,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub label: String,
    pub decomposition: Decomposition,
    pub legend: Legend,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetryFile {
    pub label: String,
    pub report: SymmetryReport,
    pub multiplication_failure: Option<Vec<u16>>,
    pub self_generator_failure: Option<Vec<u16>>,
    pub legend: Legend,
}

pub fn symmetry_file(label: &str, analysis: &SymmetryAnalysis) -> SymmetryFile {
    SymmetryFile {
        label: label.to_string(),
        report: analysis.report.clone(),
        multiplication_failure: analysis
            .multiplication
            .as_ref()
            .and_then(|w| w.failing_submodule.clone()),
        self_generator_failure: analysis.self_generator.failing_submodule.clone(),
        legend: Legend::of(analysis.s_view.as_ref()),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogReport {
    pub name: String,
    pub verdicts: Vec<SymbolicVerdict>,
}

pub fn catalog_report(entry: &SymbolicZModule) -> CatalogReport {
    CatalogReport {
        name: entry.name.clone(),
        verdicts: verdicts(entry),
    }
}

/// Plain-text rendering used by `--format text`; JSON output goes through
/// serde directly.
pub fn render_text<T: Serialize>(value: &T) -> String {
    let json = serde_json::to_value(value).expect("report serializes");
    let mut out = String::new();
    render_value(&json, 0, &mut out);
    out
}

fn render_value(value: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            for (key, val) in map {
                match val {
                    serde_json::Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{key}:");
                        render_value(val, indent + 1, out);
                    }
                    serde_json::Value::Array(items)
                        if items.iter().any(|i| i.is_object() || i.is_array()) =>
                    {
                        let _ = writeln!(out, "{pad}{key}:");
                        render_value(val, indent + 1, out);
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{key}: {}", compact(val));
                    }
                }
            }
        }
        serde_json::Value::Array(items) => {
            for item in items {
                if item.is_object() || item.is_array() {
                    let _ = writeln!(out, "{pad}-");
                    render_value(item, indent + 1, out);
                } else {
                    let _ = writeln!(out, "{pad}- {}", compact(item));
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", compact(other));
        }
    }
}

fn compact(value: &serde_json::Value) -> String {
    match value {
        serde_json::Value::String(s) => s.clone(),
        other => serde_json::to_string(other).expect("value serializes"),
    }
}
