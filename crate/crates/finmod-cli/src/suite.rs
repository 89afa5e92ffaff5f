//! The structure-theorem suite: run every applicable check over a corpus,
//! in parallel across instances, with a deterministic merged report.

use crate::corpus::{labels_digest, ring_descriptors, CorpusConfig};
use crate::instance::InstanceDescriptor;
use finmod::checks::{
    endo_checks, module_checks_with, ring_checks, CheckReport, CheckStatus, ENDO_CHECK_NAMES,
    MODULE_CHECK_NAMES, RING_CHECK_NAMES,
};
use finmod::endo::analyze_symmetry_with;
use finmod::invariants::ModuleAnalysis;
use finmod::lattice::SubmoduleLattice;
use finmod::{Error as EngineError, Limits};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fingerprint {
    pub instance_count: usize,
    pub ring_count: usize,
    pub max_ring_order: usize,
    pub max_module_order: usize,
    pub seed: u64,
    pub labels_digest: String,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Summary {
    pub checks_run: usize,
    pub passed: usize,
    pub vacuous: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TheoremCount {
    pub name: String,
    pub pass: usize,
    pub vacuous: usize,
    pub fail: usize,
    pub skip: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FailureRecord {
    pub label: String,
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkipRecord {
    pub label: String,
    pub stage: String,
    pub ceiling: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub fingerprint: Fingerprint,
    pub summary: Summary,
    pub theorems: Vec<TheoremCount>,
    pub failures: Vec<FailureRecord>,
    pub skips: Vec<SkipRecord>,
}

impl SuiteReport {
    pub fn all_green(&self) -> bool {
        self.summary.failed == 0
    }
}

struct InstanceOutcome {
    label: String,
    checks: Vec<CheckReport>,
    skips: Vec<SkipRecord>,
}

/// Run the ring battery over every distinct ring and the module and
/// endomorphism batteries over every instance. Engine ceilings become skip
/// records; check failures become failure records and a red summary.
pub fn run_suite(
    config: &CorpusConfig,
    instances: &[InstanceDescriptor],
    jobs: Option<usize>,
) -> SuiteReport {
    let limits = config.limits();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .expect("thread pool");

    let ring_outcomes: Vec<InstanceOutcome> = {
        let descriptors = ring_descriptors(config);
        pool.install(|| {
            use rayon::prelude::*;
            descriptors
                .par_iter()
                .map(|desc| run_ring_instance(desc, &limits))
                .collect()
        })
    };
    let module_outcomes: Vec<InstanceOutcome> = pool.install(|| {
        use rayon::prelude::*;
        instances
            .par_iter()
            .map(|inst| run_module_instance(inst, &limits))
            .collect()
    });

    let mut outcomes = ring_outcomes;
    outcomes.extend(module_outcomes);
    outcomes.sort_by(|a, b| a.label.cmp(&b.label));

    let mut theorem_order: Vec<&'static str> = Vec::new();
    theorem_order.extend_from_slice(RING_CHECK_NAMES);
    theorem_order.extend_from_slice(MODULE_CHECK_NAMES);
    theorem_order.extend_from_slice(ENDO_CHECK_NAMES);
    let mut counts: BTreeMap<&str, TheoremCount> = theorem_order
        .iter()
        .map(|&n| {
            (
                n,
                TheoremCount {
                    name: n.to_string(),
                    pass: 0,
                    vacuous: 0,
                    fail: 0,
                    skip: 0,
                },
            )
        })
        .collect();

    let mut summary = Summary::default();
    let mut failures = Vec::new();
    let mut skips = Vec::new();
    for outcome in &outcomes {
        for check in &outcome.checks {
            summary.checks_run += 1;
            let slot = counts.get_mut(check.name).expect("known check name");
            match check.status {
                CheckStatus::Pass => {
                    summary.passed += 1;
                    slot.pass += 1;
                }
                CheckStatus::Vacuous => {
                    summary.vacuous += 1;
                    slot.vacuous += 1;
                }
                CheckStatus::Fail => {
                    summary.failed += 1;
                    slot.fail += 1;
                    failures.push(FailureRecord {
                        label: outcome.label.clone(),
                        check: check.name.to_string(),
                        detail: check.detail.clone(),
                    });
                }
            }
        }
        for skip in &outcome.skips {
            summary.skipped += 1;
            skips.push(skip.clone());
            if let Some(slot) = skip
                .stage
                .strip_prefix("check:")
                .and_then(|name| counts.get_mut(name))
            {
                slot.skip += 1;
            }
        }
    }

    let theorems = theorem_order
        .iter()
        .map(|&n| counts[n].clone())
        .collect();
    SuiteReport {
        schema_version: 1,
        fingerprint: Fingerprint {
            instance_count: instances.len(),
            ring_count: ring_descriptors(config).len(),
            max_ring_order: config.max_ring_order,
            max_module_order: config.max_module_order,
            seed: config.seed,
            labels_digest: labels_digest(instances),
        },
        summary,
        theorems,
        failures,
        skips,
    }
}

fn run_ring_instance(desc: &crate::instance::RingDescriptor, limits: &Limits) -> InstanceOutcome {
    let label = desc.label();
    let ring = match desc.build() {
        Ok(r) => r,
        Err(e) => {
            return InstanceOutcome {
                label,
                checks: vec![],
                skips: vec![SkipRecord {
                    label: desc.label(),
                    stage: "ring-build".to_string(),
                    ceiling: e.to_string(),
                }],
            }
        }
    };
    match ring_checks(&ring, limits) {
        Ok(checks) => InstanceOutcome {
            label,
            checks,
            skips: vec![],
        },
        Err(EngineError::Ceiling(c)) => InstanceOutcome {
            label: label.clone(),
            checks: vec![],
            skips: vec![SkipRecord {
                label,
                stage: "ring-checks".to_string(),
                ceiling: c.to_string(),
            }],
        },
        Err(other) => InstanceOutcome {
            label: label.clone(),
            checks: vec![CheckReport {
                name: "jacobson_quasi_regular_agrees",
                status: CheckStatus::Fail,
                detail: format!("engine fault: {other}"),
            }],
            skips: vec![],
        },
    }
}

fn run_module_instance(inst: &InstanceDescriptor, limits: &Limits) -> InstanceOutcome {
    let label = inst.label.clone();
    let mut skips = Vec::new();
    let mut checks = Vec::new();

    let module_desc = match &inst.module {
        Some(m) => m,
        None => {
            return InstanceOutcome {
                label,
                checks,
                skips,
            }
        }
    };
    let ring = match inst.ring.build() {
        Ok(r) => r,
        Err(e) => {
            skips.push(SkipRecord {
                label: label.clone(),
                stage: "ring-build".to_string(),
                ceiling: e.to_string(),
            });
            return InstanceOutcome {
                label,
                checks,
                skips,
            };
        }
    };
    let module = match module_desc.build(&ring, limits) {
        Ok(m) => m,
        Err(e) => {
            skips.push(SkipRecord {
                label: label.clone(),
                stage: "module-build".to_string(),
                ceiling: e.to_string(),
            });
            return InstanceOutcome {
                label,
                checks,
                skips,
            };
        }
    };
    let lattice = match SubmoduleLattice::compute(&module, limits) {
        Ok(l) => l,
        Err(c) => {
            skips.push(SkipRecord {
                label: label.clone(),
                stage: "lattice".to_string(),
                ceiling: c.to_string(),
            });
            return InstanceOutcome {
                label,
                checks,
                skips,
            };
        }
    };
    let analysis = match ModuleAnalysis::compute(&lattice) {
        Ok(a) => a,
        Err(e) => {
            checks.push(CheckReport {
                name: "oracle_radical_socle_dual_routes",
                status: CheckStatus::Fail,
                detail: format!("engine fault: {e}"),
            });
            return InstanceOutcome {
                label,
                checks,
                skips,
            };
        }
    };
    match module_checks_with(&analysis, limits) {
        Ok(mut reports) => checks.append(&mut reports),
        Err(e) => checks.push(CheckReport {
            name: "oracle_radical_socle_dual_routes",
            status: CheckStatus::Fail,
            detail: format!("engine fault: {e}"),
        }),
    }
    match analyze_symmetry_with(&analysis, limits) {
        Ok(symmetry) => {
            checks.extend(endo_checks(&lattice, &symmetry, limits));
        }
        Err(EngineError::Ceiling(c)) => {
            for name in ENDO_CHECK_NAMES {
                skips.push(SkipRecord {
                    label: label.clone(),
                    stage: format!("check:{name}"),
                    ceiling: c.to_string(),
                });
            }
        }
        Err(other) => checks.push(CheckReport {
            name: "s_submodules_are_r_submodules",
            status: CheckStatus::Fail,
            detail: format!("engine fault: {other}"),
        }),
    }
    InstanceOutcome {
        label,
        checks,
        skips,
    }
}
