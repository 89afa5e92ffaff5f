//! Deterministic instance-corpus generation.
//!
//! The corpus is an enumeration, not a sample: all cyclic rings up to the
//! ring bound, products of two or three cyclic factors within the bound,
//! the nilpotent and field-like polynomial quotients over F_2 and F_3, and
//! for every ring its regular module, the quotients by every nonzero right
//! ideal, and direct sums of two or three nonzero cyclic quotients within
//! the module bound. The seed never influences membership; it is recorded
//! in the fingerprint so reports stay self-describing.

use crate::instance::{InstanceDescriptor, ModuleDescriptor, RingDescriptor};
use finmod::ideal::{ideals, Side};
use finmod::{CeilingError, Limits};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub max_ring_order: usize,
    pub max_module_order: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            max_ring_order: 64,
            max_module_order: 256,
            seed: 0,
        }
    }
}

impl CorpusConfig {
    pub fn limits(&self) -> Limits {
        Limits {
            max_module_order: self.max_module_order.max(Limits::default().max_module_order),
            ..Limits::default()
        }
    }
}

/// All ring descriptors for the configured bound, in canonical order.
pub fn ring_descriptors(config: &CorpusConfig) -> Vec<RingDescriptor> {
    let bound = config.max_ring_order as u32;
    let mut out = Vec::new();
    for n in 1..=bound {
        out.push(RingDescriptor::Cyclic { n });
    }
    // products of two or three cyclic factors, nondecreasing
    for a in 2..=bound {
        for b in a..=bound {
            if a * b > bound {
                break;
            }
            out.push(RingDescriptor::Product {
                factors: vec![
                    RingDescriptor::Cyclic { n: a },
                    RingDescriptor::Cyclic { n: b },
                ],
            });
            for c in b..=bound {
                if a * b * c > bound {
                    break;
                }
                out.push(RingDescriptor::Product {
                    factors: vec![
                        RingDescriptor::Cyclic { n: a },
                        RingDescriptor::Cyclic { n: b },
                        RingDescriptor::Cyclic { n: c },
                    ],
                });
            }
        }
    }
    for p in [2u32, 3] {
        for k in 2..=3u32 {
            if p.pow(k) <= bound {
                let mut f = vec![0u32; k as usize + 1];
                f[k as usize] = 1;
                out.push(RingDescriptor::PolyQuotient { p, f });
            }
        }
    }
    out
}

/// Generate the full corpus. Rings whose ideal enumeration exceeds the
/// engine ceiling are rejected up front with the offending bound.
pub fn generate_corpus(config: &CorpusConfig) -> Result<Vec<InstanceDescriptor>, CeilingError> {
    let limits = config.limits();
    if config.max_ring_order > limits.max_ring_order {
        return Err(CeilingError::new(
            "corpus ring order",
            limits.max_ring_order as u64,
            config.max_ring_order as u64,
        ));
    }
    let mut out = Vec::new();
    for ring_desc in ring_descriptors(config) {
        let ring = ring_desc
            .build()
            .expect("generated descriptors are valid");
        let right_ideals =
            ideals(&ring, Side::Right, &limits).expect("ring order within corpus ceiling");

        out.push(InstanceDescriptor::new(
            ring_desc.clone(),
            Some(ModuleDescriptor::Regular),
        ));
        // quotients by every nonzero right ideal (the full ideal gives the
        // zero module, kept deliberately)
        for ideal in right_ideals.iter().filter(|i| !i.is_zero()) {
            out.push(InstanceDescriptor::new(
                ring_desc.clone(),
                Some(ModuleDescriptor::Quotient {
                    of: Box::new(ModuleDescriptor::Regular),
                    by_generators: generators_of(ideal, &ring),
                }),
            ));
        }
        // direct sums of two or three nonzero cyclic quotients
        let blocks: Vec<(ModuleDescriptor, usize)> = right_ideals
            .iter()
            .filter(|i| i.len() < ring.order())
            .map(|i| {
                let block_order = ring.order() / i.len();
                (
                    ModuleDescriptor::Quotient {
                        of: Box::new(ModuleDescriptor::Regular),
                        by_generators: generators_of(i, &ring),
                    },
                    block_order,
                )
            })
            .collect();
        for i in 0..blocks.len() {
            for j in i..blocks.len() {
                let pair = blocks[i].1 * blocks[j].1;
                if pair > config.max_module_order {
                    continue;
                }
                out.push(InstanceDescriptor::new(
                    ring_desc.clone(),
                    Some(ModuleDescriptor::DirectSum {
                        parts: vec![blocks[i].0.clone(), blocks[j].0.clone()],
                    }),
                ));
                for (block_k, order_k) in blocks.iter().skip(j) {
                    if pair * order_k > config.max_module_order {
                        continue;
                    }
                    out.push(InstanceDescriptor::new(
                        ring_desc.clone(),
                        Some(ModuleDescriptor::DirectSum {
                            parts: vec![
                                blocks[i].0.clone(),
                                blocks[j].0.clone(),
                                block_k.clone(),
                            ],
                        }),
                    ));
                }
            }
        }
    }
    out.sort_by(|a, b| a.label.cmp(&b.label));
    out.dedup_by(|a, b| a.label == b.label);
    Ok(out)
}

fn generators_of(ideal: &finmod::Ideal, ring: &finmod::FiniteRing) -> Vec<u16> {
    // Greedy irredundant generating list over the ideal's canonical order;
    // mirrors the submodule generator cache but works on ring ideals.
    let span = |gens: &[u16]| -> finmod::ElemSet {
        let mut set = finmod::ElemSet::singleton(ring.order(), 0);
        let mut stack: Vec<u16> = gens.to_vec();
        while let Some(x) = stack.pop() {
            if set.contains(x) {
                continue;
            }
            set.insert(x);
            stack.push(ring.neg(x));
            for y in set.ids() {
                stack.push(ring.add(x, y));
            }
            for r in ring.elements() {
                stack.push(ring.mul(x, r));
            }
        }
        set
    };
    let target = ideal.elements();
    let mut gens: Vec<u16> = Vec::new();
    let mut spanned = finmod::ElemSet::singleton(ring.order(), 0);
    for x in target.iter() {
        if !spanned.contains(x) {
            gens.push(x);
            spanned = span(&gens);
            if &spanned == target {
                break;
            }
        }
    }
    gens
}

/// FNV-1a digest of the corpus labels; pins membership in golden files.
pub fn labels_digest(instances: &[InstanceDescriptor]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for inst in instances {
        for b in inst.label.as_bytes() {
            hash ^= *b as u64;
            hash = hash.wrapping_mul(0x100000001b3);
        }
        hash ^= 0x0a;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}
