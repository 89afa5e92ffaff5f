//! The JSON instance format: a labeled ring descriptor plus an optional
//! module descriptor, parsed into validated engine objects.

use finmod::module::FiniteModule;
use finmod::ring::FiniteRing;
use finmod::{Error as EngineError, Limits};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingDescriptor {
    Cyclic {
        n: u32,
    },
    Product {
        factors: Vec<RingDescriptor>,
    },
    PolyQuotient {
        p: u32,
        f: Vec<u32>,
    },
    Tables {
        order: usize,
        add: Vec<Vec<u16>>,
        mul: Vec<Vec<u16>>,
        one: u16,
    },
}

impl RingDescriptor {
    pub fn label(&self) -> String {
        match self {
            RingDescriptor::Cyclic { n } => format!("cyclic:{n}"),
            RingDescriptor::Product { factors } => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|f| match f {
                        RingDescriptor::Cyclic { n } => n.to_string(),
                        other => other.label(),
                    })
                    .collect();
                format!("product:{}", parts.join("x"))
            }
            RingDescriptor::PolyQuotient { p, f } => {
                let coeffs: Vec<String> = f.iter().map(|c| c.to_string()).collect();
                format!("poly:{p}:{}", coeffs.join(","))
            }
            RingDescriptor::Tables { order, .. } => format!("tables:{order}"),
        }
    }

    pub fn build(&self) -> Result<Arc<FiniteRing>, EngineError> {
        match self {
            RingDescriptor::Cyclic { n } => FiniteRing::cyclic(*n).map_err(EngineError::Ring),
            RingDescriptor::Product { factors } => {
                let built: Result<Vec<_>, _> = factors.iter().map(|f| f.build()).collect();
                FiniteRing::product(&built?).map_err(EngineError::Ring)
            }
            RingDescriptor::PolyQuotient { p, f } => {
                FiniteRing::poly_quotient(*p, f).map_err(EngineError::Ring)
            }
            RingDescriptor::Tables {
                order,
                add,
                mul,
                one,
            } => {
                let flat = |rows: &[Vec<u16>]| -> Vec<u16> {
                    rows.iter().flat_map(|r| r.iter().copied()).collect()
                };
                FiniteRing::from_tables(
                    *order,
                    flat(add),
                    flat(mul),
                    *one,
                    finmod::RingPresentation::Tables,
                )
                .map_err(EngineError::Ring)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleDescriptor {
    Regular,
    DirectSum {
        parts: Vec<ModuleDescriptor>,
    },
    Quotient {
        of: Box<ModuleDescriptor>,
        by_generators: Vec<u16>,
    },
    ExplicitAction {
        divisors: Vec<u32>,
        action: Vec<Vec<u16>>,
    },
}

impl ModuleDescriptor {
    pub fn label(&self) -> String {
        match self {
            ModuleDescriptor::Regular => "regular".to_string(),
            ModuleDescriptor::DirectSum { parts } => {
                let inner: Vec<String> = parts.iter().map(|p| p.label()).collect();
                format!("sum({})", inner.join("+"))
            }
            ModuleDescriptor::Quotient { of, by_generators } => {
                let gens: Vec<String> = by_generators.iter().map(|g| g.to_string()).collect();
                let base = of.label();
                if base == "regular" {
                    format!("quot[{}]", gens.join(","))
                } else {
                    format!("{base}/quot[{}]", gens.join(","))
                }
            }
            ModuleDescriptor::ExplicitAction { divisors, .. } => {
                let ds: Vec<String> = divisors.iter().map(|d| d.to_string()).collect();
                format!("explicit[{}]", ds.join(","))
            }
        }
    }

    pub fn build(
        &self,
        ring: &Arc<FiniteRing>,
        limits: &Limits,
    ) -> Result<Arc<FiniteModule>, EngineError> {
        match self {
            ModuleDescriptor::Regular => {
                FiniteModule::regular(ring, limits).map_err(EngineError::Module)
            }
            ModuleDescriptor::DirectSum { parts } => {
                if parts.is_empty() {
                    return Err(EngineError::Module(
                        finmod::module::ModuleError::BadDivisors,
                    ));
                }
                let mut acc = parts[0].build(ring, limits)?;
                for p in &parts[1..] {
                    let next = p.build(ring, limits)?;
                    acc = acc.direct_sum(&next, limits).map_err(EngineError::Module)?;
                }
                Ok(acc)
            }
            ModuleDescriptor::Quotient { of, by_generators } => {
                let base = of.build(ring, limits)?;
                let sub = base.submodule_generated(by_generators);
                base.quotient(&sub, limits).map_err(EngineError::Module)
            }
            ModuleDescriptor::ExplicitAction { divisors, action } => {
                let flat: Vec<u16> = action.iter().flat_map(|r| r.iter().copied()).collect();
                FiniteModule::from_action(ring, divisors, flat, limits)
                    .map_err(EngineError::Module)
            }
        }
    }
}

/// One labeled instance: a ring and optionally a module over it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDescriptor {
    pub label: String,
    pub ring: RingDescriptor,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleDescriptor>,
}

impl InstanceDescriptor {
    pub fn new(ring: RingDescriptor, module: Option<ModuleDescriptor>) -> Self {
        let label = match &module {
            Some(m) => format!("{}/{}", ring.label(), m.label()),
            None => ring.label(),
        };
        InstanceDescriptor {
            label,
            ring,
            module,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("descriptor serializes")
    }
}
