//! Finite unital right modules over a finite ring.
//!
//! A module is a finite abelian group (addition table) together with a
//! validated scalar-action table. Elements carry coordinate tuples used only
//! for display legends; the group law is always the table. Constructions:
//! the regular module R_R, explicit-action modules over cyclic coordinate
//! groups, direct sums, quotients (cosets represented by their least
//! element), and generated submodules.

use crate::bitset::ElemSet;
use crate::ring::FiniteRing;
use crate::{fresh_token, CeilingError, Limits};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ModulePresentation {
    Regular,
    ExplicitAction,
    Quotient { by: Vec<u16> },
    DirectSum(usize),
    SModuleView,
}

impl fmt::Display for ModulePresentation {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModulePresentation::Regular => write!(out, "regular"),
            ModulePresentation::ExplicitAction => write!(out, "explicit"),
            ModulePresentation::Quotient { by } => {
                let ids: Vec<String> = by.iter().map(|i| i.to_string()).collect();
                write!(out, "quot[{}]", ids.join(","))
            }
            ModulePresentation::DirectSum(n) => write!(out, "dsum({n})"),
            ModulePresentation::SModuleView => write!(out, "s-view"),
        }
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum ModuleError {
    #[error("module order {got} exceeds ceiling {limit}")]
    TooLarge { got: usize, limit: usize },
    #[error("divisors must all be >= 1")]
    BadDivisors,
    #[error("action table has wrong shape: expected {expected}, got {got}")]
    BadTableShape { expected: usize, got: usize },
    #[error("action entry out of range for (r={r}, m={m}): {value}")]
    EntryOutOfRange { r: u16, m: u16, value: u16 },
    #[error("action is not additive in the module argument at (r={r}, m1={m1}, m2={m2})")]
    NotAdditiveInModule { r: u16, m1: u16, m2: u16 },
    #[error("action is not additive in the ring argument at (r1={r1}, r2={r2}, m={m})")]
    NotAdditiveInRing { r1: u16, r2: u16, m: u16 },
    #[error("action is not unital at m={m}")]
    NotUnital { m: u16 },
    #[error("action is not associative at (r={r}, s={s}, m={m}): m*(r*s) != (m*r)*s")]
    NotAssociative { r: u16, s: u16, m: u16 },
    #[error("modules live over different rings")]
    RingMismatch,
    #[error("submodule belongs to a different module")]
    ForeignSubmodule,
    #[error(transparent)]
    Ceiling(#[from] CeilingError),
}

/// A finite right module with fully materialized tables.
#[derive(Debug)]
pub struct FiniteModule {
    token: u64,
    ring: Arc<FiniteRing>,
    order: usize,
    /// Moduli of the coordinate legend; the group law is the table below.
    coord_moduli: Vec<u32>,
    /// Element id -> coordinate tuple, for legends and witnesses.
    coords: Vec<Vec<u32>>,
    add: Vec<u16>,
    neg: Vec<u16>,
    /// `action[r * order + m]` = m * r.
    action: Vec<u16>,
    presentation: ModulePresentation,
}

impl FiniteModule {
    /// The regular module R_R: elements are ring elements, action is ring
    /// multiplication.
    pub fn regular(ring: &Arc<FiniteRing>, limits: &Limits) -> Result<Arc<Self>, ModuleError> {
        let n = ring.order();
        check_order(n, limits)?;
        let mut add = vec![0u16; n * n];
        let mut action = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        for a in 0..n as u16 {
            neg[a as usize] = ring.neg(a);
            for b in 0..n as u16 {
                add[a as usize * n + b as usize] = ring.add(a, b);
                // action[r][m] = m * r
                action[a as usize * n + b as usize] = ring.mul(b, a);
            }
        }
        Ok(Arc::new(FiniteModule {
            token: fresh_token(),
            ring: Arc::clone(ring),
            order: n,
            coord_moduli: vec![n as u32],
            coords: (0..n as u32).map(|i| vec![i]).collect(),
            add,
            neg,
            action,
            presentation: ModulePresentation::Regular,
        }))
    }

    /// Build a module over cyclic coordinate groups `Z_{d_1} x ... x Z_{d_k}`
    /// from an explicit action table `action[r][m]`, validating every module
    /// axiom. Axiom violations name the failing triple.
    pub fn from_action(
        ring: &Arc<FiniteRing>,
        divisors: &[u32],
        action: Vec<u16>,
        limits: &Limits,
    ) -> Result<Arc<Self>, ModuleError> {
        if divisors.contains(&0) {
            return Err(ModuleError::BadDivisors);
        }
        let order: usize = divisors.iter().map(|&d| d as usize).product();
        check_order(order, limits)?;
        let coords: Vec<Vec<u32>> = (0..order).map(|id| decode(id, divisors)).collect();
        let mut add = vec![0u16; order * order];
        let mut neg = vec![0u16; order];
        for a in 0..order {
            let ca = &coords[a];
            let cneg: Vec<u32> = ca
                .iter()
                .zip(divisors)
                .map(|(&x, &d)| (d - x) % d)
                .collect();
            neg[a] = encode(&cneg, divisors);
            for b in 0..order {
                let sum: Vec<u32> = ca
                    .iter()
                    .zip(&coords[b])
                    .zip(divisors)
                    .map(|((&x, &y), &d)| (x + y) % d)
                    .collect();
                add[a * order + b] = encode(&sum, divisors);
            }
        }
        let module = FiniteModule {
            token: fresh_token(),
            ring: Arc::clone(ring),
            order,
            coord_moduli: divisors.to_vec(),
            coords,
            add,
            neg,
            action,
            presentation: ModulePresentation::ExplicitAction,
        };
        module.validate()?;
        Ok(Arc::new(module))
    }

    /// Internal constructor for derived modules whose tables are produced by
    /// the crate itself; still validated.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn from_tables(
        ring: Arc<FiniteRing>,
        order: usize,
        coord_moduli: Vec<u32>,
        coords: Vec<Vec<u32>>,
        add: Vec<u16>,
        neg: Vec<u16>,
        action: Vec<u16>,
        presentation: ModulePresentation,
        limits: &Limits,
    ) -> Result<Arc<Self>, ModuleError> {
        check_order(order, limits)?;
        let module = FiniteModule {
            token: fresh_token(),
            ring,
            order,
            coord_moduli,
            coords,
            add,
            neg,
            action,
            presentation,
        };
        module.validate()?;
        Ok(Arc::new(module))
    }

    fn validate(&self) -> Result<(), ModuleError> {
        let n = self.order;
        let r_ord = self.ring.order();
        if self.action.len() != r_ord * n {
            return Err(ModuleError::BadTableShape {
                expected: r_ord * n,
                got: self.action.len(),
            });
        }
        if self.add.len() != n * n {
            return Err(ModuleError::BadTableShape {
                expected: n * n,
                got: self.add.len(),
            });
        }
        for (i, &v) in self.action.iter().enumerate() {
            if v as usize >= n {
                return Err(ModuleError::EntryOutOfRange {
                    r: (i / n) as u16,
                    m: (i % n) as u16,
                    value: v,
                });
            }
        }
        for m in 0..n as u16 {
            if self.act(self.ring.one(), m) != m {
                return Err(ModuleError::NotUnital { m });
            }
        }
        // Additive in the module argument.
        for r in 0..r_ord as u16 {
            for m1 in 0..n as u16 {
                let a1 = self.act(r, m1);
                for m2 in 0..=m1 {
                    if self.act(r, self.add(m1, m2)) != self.add(a1, self.act(r, m2)) {
                        return Err(ModuleError::NotAdditiveInModule { r, m1, m2 });
                    }
                }
            }
        }
        // Additive in the ring argument.
        for r1 in 0..r_ord as u16 {
            for r2 in 0..=r1 {
                let sum = self.ring.add(r1, r2);
                for m in 0..n as u16 {
                    if self.act(sum, m) != self.add(self.act(r1, m), self.act(r2, m)) {
                        return Err(ModuleError::NotAdditiveInRing { r1, r2, m });
                    }
                }
            }
        }
        // Right-module associativity: m*(r*s) = (m*r)*s.
        for r in 0..r_ord as u16 {
            for s in 0..r_ord as u16 {
                let rs = self.ring.mul(r, s);
                for m in 0..n as u16 {
                    if self.act(rs, m) != self.act(s, self.act(r, m)) {
                        return Err(ModuleError::NotAssociative { r, s, m });
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg[a as usize]
    }

    /// `m * r` in the right-module convention.
    #[inline]
    pub fn act(&self, r: u16, m: u16) -> u16 {
        self.action[r as usize * self.order + m as usize]
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn token(&self) -> u64 {
        self.token
    }

    pub fn coord_moduli(&self) -> &[u32] {
        &self.coord_moduli
    }

    pub fn coords(&self, id: u16) -> &[u32] {
        &self.coords[id as usize]
    }

    pub fn presentation(&self) -> &ModulePresentation {
        &self.presentation
    }

    pub fn elements(&self) -> impl Iterator<Item = u16> {
        0..self.order as u16
    }

    pub fn is_zero_module(&self) -> bool {
        self.order == 1
    }

    /// The submodule generated by a set of elements: additive closure of all
    /// orbits under the ring action.
    pub fn submodule_generated(&self, generators: &[u16]) -> Submodule {
        Submodule::from_set(self, self.span(generators))
    }

    /// Raw element-set closure of a generating list.
    pub(crate) fn span(&self, generators: &[u16]) -> ElemSet {
        let mut set = ElemSet::empty(self.order);
        set.insert(0);
        let mut stack: Vec<u16> = generators.iter().copied().filter(|&x| x != 0).collect();
        while let Some(x) = stack.pop() {
            if set.contains(x) {
                continue;
            }
            set.insert(x);
            let snapshot: Vec<u16> = set.iter().collect();
            for y in snapshot {
                let s = self.add(x, y);
                if !set.contains(s) {
                    stack.push(s);
                }
            }
            stack.push(self.neg(x));
            for r in self.ring.elements() {
                let orbit = self.act(r, x);
                if !set.contains(orbit) {
                    stack.push(orbit);
                }
            }
        }
        set
    }

    /// The cyclic submodule generated by one element.
    pub fn cyclic_submodule(&self, x: u16) -> Submodule {
        self.submodule_generated(&[x])
    }

    /// Whether a set of elements is closed under addition, negation, and the
    /// full ring action.
    pub fn is_submodule_set(&self, set: &ElemSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        for x in set.iter() {
            if !set.contains(self.neg(x)) {
                return false;
            }
            for y in set.iter() {
                if !set.contains(self.add(x, y)) {
                    return false;
                }
            }
            for r in self.ring.elements() {
                if !set.contains(self.act(r, x)) {
                    return false;
                }
            }
        }
        true
    }

    /// Direct sum with another module over the same ring.
    pub fn direct_sum(
        self: &Arc<Self>,
        other: &Arc<FiniteModule>,
        limits: &Limits,
    ) -> Result<Arc<FiniteModule>, ModuleError> {
        if self.ring.token() != other.ring.token() {
            return Err(ModuleError::RingMismatch);
        }
        let n1 = self.order;
        let n2 = other.order;
        let order = n1
            .checked_mul(n2)
            .ok_or(ModuleError::TooLarge {
                got: usize::MAX,
                limit: limits.max_module_order,
            })?;
        check_order(order, limits)?;
        let encode = |a: u16, b: u16| -> u16 { (a as usize * n2 + b as usize) as u16 };
        let mut add = vec![0u16; order * order];
        let mut neg = vec![0u16; order];
        let mut coords = Vec::with_capacity(order);
        for a in 0..n1 as u16 {
            for b in 0..n2 as u16 {
                let id = encode(a, b) as usize;
                neg[id] = encode(self.neg(a), other.neg(b));
                let mut c = self.coords[a as usize].clone();
                c.extend_from_slice(&other.coords[b as usize]);
                coords.push(c);
                for x in 0..n1 as u16 {
                    for y in 0..n2 as u16 {
                        add[id * order + encode(x, y) as usize] =
                            encode(self.add(a, x), other.add(b, y));
                    }
                }
            }
        }
        let r_ord = self.ring.order();
        let mut action = vec![0u16; r_ord * order];
        for r in 0..r_ord as u16 {
            for a in 0..n1 as u16 {
                for b in 0..n2 as u16 {
                    action[r as usize * order + encode(a, b) as usize] =
                        encode(self.act(r, a), other.act(r, b));
                }
            }
        }
        let mut moduli = self.coord_moduli.clone();
        moduli.extend_from_slice(&other.coord_moduli);
        let count = match self.presentation {
            ModulePresentation::DirectSum(k) => k + 1,
            _ => 2,
        };
        FiniteModule::from_tables(
            Arc::clone(&self.ring),
            order,
            moduli,
            coords,
            add,
            neg,
            action,
            ModulePresentation::DirectSum(count),
            limits,
        )
    }

    /// Quotient by a submodule. Cosets are represented by their least element
    /// id; quotient ids follow the sorted representative order, so the zero
    /// coset is id 0.
    pub fn quotient(
        self: &Arc<Self>,
        by: &Submodule,
        limits: &Limits,
    ) -> Result<Arc<FiniteModule>, ModuleError> {
        if by.parent != self.token {
            return Err(ModuleError::ForeignSubmodule);
        }
        let n = self.order;
        // coset leader for every element
        let mut leader = vec![u16::MAX; n];
        let mut reps = Vec::new();
        for m in 0..n as u16 {
            if leader[m as usize] != u16::MAX {
                continue;
            }
            // coset m + N; m is the least member since we scan ascending
            reps.push(m);
            for x in by.set.iter() {
                let member = self.add(m, x);
                if leader[member as usize] == u16::MAX {
                    leader[member as usize] = m;
                } else {
                    debug_assert_eq!(leader[member as usize], m, "cosets must partition");
                }
            }
        }
        let q_order = reps.len();
        let rep_index = {
            let mut idx = vec![u16::MAX; n];
            for (qi, &r) in reps.iter().enumerate() {
                idx[r as usize] = qi as u16;
            }
            idx
        };
        let project = |m: u16| -> u16 { rep_index[leader[m as usize] as usize] };
        let mut add = vec![0u16; q_order * q_order];
        let mut neg = vec![0u16; q_order];
        for (qi, &a) in reps.iter().enumerate() {
            neg[qi] = project(self.neg(a));
            for (qj, &b) in reps.iter().enumerate() {
                add[qi * q_order + qj] = project(self.add(a, b));
            }
        }
        let r_ord = self.ring.order();
        let mut action = vec![0u16; r_ord * q_order];
        for r in 0..r_ord as u16 {
            for (qi, &a) in reps.iter().enumerate() {
                action[r as usize * q_order + qi] = project(self.act(r, a));
            }
        }
        let coords = reps
            .iter()
            .map(|&r| self.coords[r as usize].clone())
            .collect();
        FiniteModule::from_tables(
            Arc::clone(&self.ring),
            q_order,
            self.coord_moduli.clone(),
            coords,
            add,
            neg,
            action,
            ModulePresentation::Quotient {
                by: by.generators(self).to_vec(),
            },
            limits,
        )
    }

    /// The canonical projection onto a quotient built by [`Self::quotient`],
    /// as an element map `parent id -> quotient id`.
    pub fn projection_map(&self, by: &Submodule, quotient: &FiniteModule) -> Vec<u16> {
        let mut map = vec![0u16; self.order];
        for m in 0..self.order as u16 {
            // least element of the coset m + N
            let leader = by
                .set
                .iter()
                .map(|x| self.add(m, x))
                .min()
                .expect("submodule is nonempty");
            let qi = quotient
                .elements()
                .find(|&q| quotient.coords[q as usize] == self.coords[leader as usize])
                .expect("leader is a quotient representative");
            map[m as usize] = qi;
        }
        map
    }
}

fn check_order(order: usize, limits: &Limits) -> Result<(), ModuleError> {
    if order > limits.max_module_order {
        return Err(ModuleError::TooLarge {
            got: order,
            limit: limits.max_module_order,
        });
    }
    Ok(())
}

fn decode(mut id: usize, divisors: &[u32]) -> Vec<u32> {
    let mut coords = vec![0u32; divisors.len()];
    for (c, &d) in coords.iter_mut().zip(divisors).rev() {
        *c = (id % d as usize) as u32;
        id /= d as usize;
    }
    coords
}

fn encode(coords: &[u32], divisors: &[u32]) -> u16 {
    let mut id = 0usize;
    for (&c, &d) in coords.iter().zip(divisors) {
        id = id * d as usize + c as usize;
    }
    id as u16
}

/// A submodule of a specific module: canonical element set plus a lazily
/// cached irredundant generating list.
#[derive(Debug, Clone)]
pub struct Submodule {
    pub(crate) parent: u64,
    pub(crate) set: ElemSet,
    generators: std::sync::OnceLock<Vec<u16>>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.parent == other.parent && self.set == other.set
    }
}

impl Eq for Submodule {}

impl Submodule {
    // Closure properties hold by construction for every caller; the lattice
    // enumeration is additionally cross-checked against the subgroup oracle
    // in the integration tests.
    pub(crate) fn from_set(module: &FiniteModule, set: ElemSet) -> Self {
        Submodule {
            parent: module.token(),
            set,
            generators: std::sync::OnceLock::new(),
        }
    }

    pub fn elements(&self) -> &ElemSet {
        &self.set
    }

    pub fn ids(&self) -> Vec<u16> {
        self.set.ids()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains 0
    }

    pub fn is_zero(&self) -> bool {
        self.set.is_zero_only()
    }

    pub fn parent_token(&self) -> u64 {
        self.parent
    }

    /// Irredundant generating list, computed on first use.
    pub fn generators(&self, module: &FiniteModule) -> &[u16] {
        assert_eq!(module.token(), self.parent, "foreign module");
        self.generators
            .get_or_init(|| irredundant_generators(module, &self.set))
    }

    pub fn contains(&self, id: u16) -> bool {
        self.set.contains(id)
    }
}

/// Greedy generating list in ascending element order, then pruned to an
/// irredundant one.
fn irredundant_generators(module: &FiniteModule, set: &ElemSet) -> Vec<u16> {
    let mut gens: Vec<u16> = Vec::new();
    let mut span = ElemSet::singleton(module.order(), 0);
    for x in set.iter() {
        if !span.contains(x) {
            gens.push(x);
            span = module.span(&gens);
            if span == *set {
                break;
            }
        }
    }
    // prune: drop any generator the others still span
    let mut i = 0;
    while i < gens.len() {
        if gens.len() == 1 {
            break;
        }
        let mut rest = gens.clone();
        rest.remove(i);
        if module.span(&rest) == *set {
            gens.remove(i);
        } else {
            i += 1;
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn regular_module_of_zero_ring() {
        let r = FiniteRing::cyclic(1).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        assert!(m.is_zero_module());
    }

    #[test]
    fn cyclic_submodule_of_z12() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        assert_eq!(m.cyclic_submodule(4).ids(), vec![0, 4, 8]);
        assert_eq!(m.cyclic_submodule(0).ids(), vec![0]);
    }

    #[test]
    fn quotient_of_z12_by_small() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let n = m.cyclic_submodule(6);
        let q = m.quotient(&n, &limits()).unwrap();
        assert_eq!(q.order(), 6);
        // representatives are the least coset members 0..5
        assert_eq!(
            (0..6).map(|i| q.coords(i)[0]).collect::<Vec<_>>(),
            vec![0, 1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn projection_kernel_is_the_submodule() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let n = m.cyclic_submodule(4);
        let q = m.quotient(&n, &limits()).unwrap();
        let proj = m.projection_map(&n, &q);
        let kernel: Vec<u16> = m.elements().filter(|&x| proj[x as usize] == 0).collect();
        assert_eq!(kernel, n.ids());
        // projection is additive and commutes with the action
        for a in m.elements() {
            for b in m.elements() {
                assert_eq!(proj[m.add(a, b) as usize], q.add(proj[a as usize], proj[b as usize]));
            }
            for rr in r.elements() {
                assert_eq!(proj[m.act(rr, a) as usize], q.act(rr, proj[a as usize]));
            }
        }
    }

    #[test]
    fn direct_sum_orders_multiply() {
        let r = FiniteRing::cyclic(6).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let a = m.cyclic_submodule(3); // order 2
        let b = m.cyclic_submodule(2); // order 3
        let qa = m.quotient(&b, &limits()).unwrap(); // Z2-ish quotient, order 2... M/<2> has order 2
        let qb = m.quotient(&a, &limits()).unwrap(); // order 3
        let sum = qa.direct_sum(&qb, &limits()).unwrap();
        assert_eq!(sum.order(), 6);
    }

    #[test]
    fn explicit_action_validation_flags_bad_tables() {
        let r = FiniteRing::cyclic(2).unwrap();
        // Coordinatewise action on Z2 x Z2: action[r][m] = m * r.
        let good: Vec<u16> = (0..2u16)
            .flat_map(|r| (0..4u16).map(move |m| if r == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], good, &limits()).unwrap();
        assert_eq!(m.order(), 4);

        // break unitality
        let bad: Vec<u16> = vec![0, 0, 0, 0, 0, 0, 0, 0];
        assert!(matches!(
            FiniteModule::from_action(&r, &[2, 2], bad, &limits()),
            Err(ModuleError::NotUnital { .. })
        ));

        // break additivity in the module argument: 1 acts by a non-additive
        // permutation swapping 0 and 1
        let swap: Vec<u16> = vec![0, 0, 0, 0, 1, 0, 2, 3];
        assert!(matches!(
            FiniteModule::from_action(&r, &[2, 2], swap, &limits()),
            Err(ModuleError::NotAdditiveInModule { .. }) | Err(ModuleError::NotUnital { .. })
        ));
    }

    #[test]
    fn action_associativity_failure_names_the_triple() {
        // Over Z4, let 1 act as identity on Z2 x Z2 but 2 act by projection
        // to the first coordinate and 3 by the map matching additivity but
        // breaking m*(2*2) = (m*2)*2.
        let r = FiniteRing::cyclic(4).unwrap();
        let action: Vec<u16> = vec![
            0, 0, 0, 0, // 0 kills
            0, 1, 2, 3, // 1 identity
            0, 0, 2, 2, // 2 projects onto the second coordinate
            0, 1, 2, 3, // 3 = 2 + 1 should act as sum; identity breaks associativity
        ];
        let err = FiniteModule::from_action(&r, &[2, 2], action, &limits());
        assert!(matches!(
            err,
            Err(ModuleError::NotAssociative { .. }) | Err(ModuleError::NotAdditiveInRing { .. })
        ));
    }

    #[test]
    fn simple_module_over_z4() {
        // Z4 acting on Z2 by reduction mod 2.
        let r = FiniteRing::cyclic(4).unwrap();
        let action: Vec<u16> = (0..4u16)
            .flat_map(|rr| (0..2u16).map(move |m| (m * rr) % 2))
            .collect();
        let m = FiniteModule::from_action(&r, &[2], action, &limits()).unwrap();
        assert_eq!(m.order(), 2);
        assert_eq!(m.cyclic_submodule(1).len(), 2);
    }

    #[test]
    fn foreign_submodule_rejected() {
        let r = FiniteRing::cyclic(4).unwrap();
        let m1 = FiniteModule::regular(&r, &limits()).unwrap();
        let m2 = FiniteModule::regular(&r, &limits()).unwrap();
        let n = m1.cyclic_submodule(2);
        assert!(matches!(
            m2.quotient(&n, &limits()),
            Err(ModuleError::ForeignSubmodule)
        ));
    }

    #[test]
    fn generators_are_irredundant() {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..8u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2, 2], action, &limits()).unwrap();
        let full = m.submodule_generated(&[1, 2, 4]);
        assert_eq!(full.len(), 8);
        assert_eq!(full.generators(&m).len(), 3);
    }
}
