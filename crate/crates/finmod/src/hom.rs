//! Module homomorphisms and endomorphism rings.
//!
//! Homs are enumerated by choosing images for an irredundant generating set
//! and propagating along the relations `f(a + g*r) = f(a) + y*r`; a candidate
//! that survives every such edge is additive and action-commuting, so no
//! separate linearity pass is needed. The endomorphism ring packages the homs
//! as a Cayley-table ring (pointwise addition, composition `(f*g)(m) =
//! f(g(m))`) and is re-validated by the ring constructor.

use crate::module::FiniteModule;
use crate::ring::{FiniteRing, RingPresentation};
use crate::{CeilingError, Error, Limits, Result};
use std::collections::BTreeMap;
use std::sync::Arc;

/// A homomorphism of right modules, as a full element map.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ModuleHom {
    source: u64,
    target: u64,
    map: Vec<u16>,
}

impl ModuleHom {
    pub fn map(&self) -> &[u16] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, m: u16) -> u16 {
        self.map[m as usize]
    }

    pub fn source_token(&self) -> u64 {
        self.source
    }

    pub fn target_token(&self) -> u64 {
        self.target
    }

    pub fn is_zero(&self) -> bool {
        self.map.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    /// Full axiom check: additive and commuting with every scalar.
    pub fn is_valid(&self, source: &FiniteModule, target: &FiniteModule) -> bool {
        for a in source.elements() {
            for b in source.elements() {
                if self.map[source.add(a, b) as usize]
                    != target.add(self.map[a as usize], self.map[b as usize])
                {
                    return false;
                }
            }
            for r in source.ring().elements() {
                if self.map[source.act(r, a) as usize] != target.act(r, self.map[a as usize]) {
                    return false;
                }
            }
        }
        true
    }

    /// Build a hom from an explicit table, verifying the axioms.
    pub fn from_map(
        source: &FiniteModule,
        target: &FiniteModule,
        map: Vec<u16>,
    ) -> Option<ModuleHom> {
        let hom = ModuleHom {
            source: source.token(),
            target: target.token(),
            map,
        };
        hom.is_valid(source, target).then_some(hom)
    }
}

/// Enumerate `Hom(M, N)` in canonical (map-table lexicographic) order.
///
/// `cap`: stop and report a ceiling once more than `cap` homs are found
/// (used to bound endomorphism rings before tables are materialized).
pub fn hom_set(
    source: &Arc<FiniteModule>,
    target: &Arc<FiniteModule>,
    limits: &Limits,
    cap: Option<usize>,
) -> Result<Vec<ModuleHom>> {
    if source.ring().token() != target.ring().token() {
        return Err(Error::Module(crate::module::ModuleError::RingMismatch));
    }
    let full = source.submodule_generated(
        &source.elements().collect::<Vec<_>>(),
    );
    let gens = full.generators(source).to_vec();
    let k = gens.len();
    let t_order = target.order() as u64;
    let budget: u64 = t_order
        .checked_pow(k as u32)
        .unwrap_or(u64::MAX);
    if budget > limits.endo_image_budget {
        return Err(CeilingError::new(
            "hom image candidates",
            limits.endo_image_budget,
            budget,
        )
        .into());
    }
    if k == 0 {
        // zero module source: the zero map is the only hom
        return Ok(vec![ModuleHom {
            source: source.token(),
            target: target.token(),
            map: vec![0; source.order()],
        }]);
    }
    // Per-generator image prefilter: y is admissible for g only if every
    // scalar killing g kills y.
    let ring = source.ring();
    let mut admissible: Vec<Vec<u16>> = Vec::with_capacity(k);
    for &g in &gens {
        let killers: Vec<u16> = ring
            .elements()
            .filter(|&r| source.act(r, g) == 0)
            .collect();
        let images: Vec<u16> = target
            .elements()
            .filter(|&y| killers.iter().all(|&r| target.act(r, y) == 0))
            .collect();
        admissible.push(images);
    }
    let mut out = Vec::new();
    let mut images = vec![0u16; k];
    enumerate_rec(
        source, target, &gens, &admissible, 0, &mut images, &mut out, cap,
    )?;
    out.sort();
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    source: &FiniteModule,
    target: &FiniteModule,
    gens: &[u16],
    admissible: &[Vec<u16>],
    depth: usize,
    images: &mut Vec<u16>,
    out: &mut Vec<ModuleHom>,
    cap: Option<usize>,
) -> Result<()> {
    if depth == gens.len() {
        if let Some(map) = propagate(source, target, gens, images) {
            out.push(ModuleHom {
                source: source.token(),
                target: target.token(),
                map,
            });
            if let Some(c) = cap {
                if out.len() > c {
                    return Err(CeilingError::new(
                        "endomorphism ring order",
                        c as u64,
                        out.len() as u64,
                    )
                    .into());
                }
            }
        }
        return Ok(());
    }
    for &y in &admissible[depth] {
        images[depth] = y;
        enumerate_rec(source, target, gens, admissible, depth + 1, images, out, cap)?;
    }
    Ok(())
}

/// Grow the map from generator images along edges `a -> a + g*r`, rejecting
/// on the first conflict. Consistency on every edge makes the map additive
/// (every element is a sum of `g*r` terms) and scalar-linear (relations
/// `g*(rs)` are edges too).
fn propagate(
    source: &FiniteModule,
    target: &FiniteModule,
    gens: &[u16],
    images: &[u16],
) -> Option<Vec<u16>> {
    const UNSET: u16 = u16::MAX;
    let n = source.order();
    let ring = source.ring();
    let mut map = vec![UNSET; n];
    map[0] = 0;
    let mut queue: Vec<u16> = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let a = queue[head];
        head += 1;
        let fa = map[a as usize];
        for (gi, &g) in gens.iter().enumerate() {
            for r in ring.elements() {
                let step = source.act(r, g);
                let next = source.add(a, step);
                let fnext = target.add(fa, target.act(r, images[gi]));
                let slot = &mut map[next as usize];
                if *slot == UNSET {
                    *slot = fnext;
                    queue.push(next);
                } else if *slot != fnext {
                    return None;
                }
            }
        }
    }
    debug_assert!(map.iter().all(|&v| v != UNSET), "generators span the module");
    Some(map)
}

/// `End_R(M)` with the left action `f . m = f(m)`.
#[derive(Debug)]
pub struct EndomorphismRing {
    /// Composition ring: `mul(f, g) = f o g`, addition pointwise.
    ring: Arc<FiniteRing>,
    /// Hom for each ring element id, in canonical order (the zero map is
    /// id 0, matching the ring's additive identity).
    homs: Vec<ModuleHom>,
    module: Arc<FiniteModule>,
}

impl EndomorphismRing {
    /// Enumerate `End_R(M)` and package it as a validated ring.
    pub fn compute(module: &Arc<FiniteModule>, limits: &Limits) -> Result<Self> {
        let homs = hom_set(module, module, limits, Some(limits.max_end_ring_order))?;
        let order = homs.len();
        let index: BTreeMap<&[u16], u16> = homs
            .iter()
            .enumerate()
            .map(|(i, h)| (h.map(), i as u16))
            .collect();
        let lookup = |map: &[u16]| -> Result<u16> {
            index.get(map).copied().ok_or_else(|| {
                Error::Internal("endomorphisms are not closed under ring operations".into())
            })
        };
        let n = module.order();
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut scratch = vec![0u16; n];
        for (i, f) in homs.iter().enumerate() {
            for (j, g) in homs.iter().enumerate() {
                for (s, (&fm, &gm)) in scratch.iter_mut().zip(f.map.iter().zip(&g.map)) {
                    *s = module.add(fm, gm);
                }
                add[i * order + j] = lookup(&scratch)?;
                for (s, &gm) in scratch.iter_mut().zip(&g.map) {
                    *s = f.map[gm as usize];
                }
                mul[i * order + j] = lookup(&scratch)?;
            }
        }
        let identity: Vec<u16> = (0..n as u16).collect();
        let one = lookup(&identity)?;
        let ring = FiniteRing::from_tables(order, add, mul, one, RingPresentation::Endomorphism)
            .map_err(Error::Ring)?;
        Ok(EndomorphismRing {
            ring,
            homs,
            module: Arc::clone(module),
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn order(&self) -> usize {
        self.homs.len()
    }

    pub fn homs(&self) -> &[ModuleHom] {
        &self.homs
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn is_commutative(&self) -> bool {
        self.ring.is_commutative()
    }

    /// The left action table `action[f][m] = f(m)`.
    pub fn action_table(&self) -> Vec<u16> {
        let n = self.module.order();
        let mut table = vec![0u16; self.homs.len() * n];
        for (i, h) in self.homs.iter().enumerate() {
            table[i * n..(i + 1) * n].copy_from_slice(h.map());
        }
        table
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn end_of_regular_z6_is_z6() {
        let r = FiniteRing::cyclic(6).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let end = EndomorphismRing::compute(&m, &limits()).unwrap();
        assert_eq!(end.order(), 6);
        assert!(end.is_commutative());
    }

    #[test]
    fn end_of_z2_squared_is_full_matrix_ring() {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], action, &limits()).unwrap();
        let end = EndomorphismRing::compute(&m, &limits()).unwrap();
        assert_eq!(end.order(), 16);
        assert!(!end.is_commutative());
    }

    #[test]
    fn end_of_simple_module_is_a_field() {
        for p in [2u32, 3, 5] {
            let r = FiniteRing::cyclic(p).unwrap();
            let m = FiniteModule::regular(&r, &limits()).unwrap();
            let end = EndomorphismRing::compute(&m, &limits()).unwrap();
            assert_eq!(end.order(), p as usize);
            assert!(end.is_commutative());
            assert!(end.ring().elements().skip(1).all(|a| end.ring().is_unit(a)));
        }
    }

    #[test]
    fn hom_set_contains_identity_and_closes() {
        let r = FiniteRing::cyclic(4).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let homs = hom_set(&m, &m, &limits(), None).unwrap();
        assert!(homs.iter().any(|h| h.is_identity()));
        assert!(homs.iter().any(|h| h.is_zero()));
        for f in &homs {
            for g in &homs {
                let comp: Vec<u16> = (0..m.order())
                    .map(|x| f.map()[g.map()[x] as usize])
                    .collect();
                assert!(homs.iter().any(|h| h.map() == comp));
                let sum: Vec<u16> = (0..m.order() as u16)
                    .map(|x| m.add(f.apply(x), g.apply(x)))
                    .collect();
                assert!(homs.iter().any(|h| h.map() == sum));
            }
        }
    }

    #[test]
    fn zero_module_end_ring_is_zero_ring() {
        let r = FiniteRing::cyclic(1).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let end = EndomorphismRing::compute(&m, &limits()).unwrap();
        assert_eq!(end.order(), 1);
    }

    #[test]
    fn end_ring_cap_reports_ceiling() {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], action, &limits()).unwrap();
        let tight = Limits {
            max_end_ring_order: 8,
            ..Limits::default()
        };
        assert!(matches!(
            EndomorphismRing::compute(&m, &tight),
            Err(Error::Ceiling(_))
        ));
    }
}
