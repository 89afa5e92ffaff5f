//! The complete submodule lattice of a finite module.
//!
//! Enumeration seeds with every cyclic submodule and closes under joins with
//! the seeds; since each submodule is the join of the cyclic submodules of
//! its elements, the closure is the complete lattice. Nodes are sorted
//! canonically (cardinality, then lexicographic id list), so node 0 is the
//! zero submodule and the last node is the whole module. Containment is kept
//! as a bit matrix and the Hasse diagram as cover lists.

use crate::bitset::ElemSet;
use crate::module::{FiniteModule, Submodule};
use crate::{CeilingError, Limits};
use std::collections::BTreeMap;
use std::sync::Arc;

pub type NodeId = u32;

#[derive(Debug)]
pub struct SubmoduleLattice {
    module: Arc<FiniteModule>,
    nodes: Vec<Submodule>,
    index: BTreeMap<ElemSet, NodeId>,
    /// `above[i]` = bitset over node ids j with nodes[i] subset of nodes[j].
    above: Vec<Vec<u64>>,
    /// `below[i]` = bitset over node ids j with nodes[j] subset of nodes[i].
    below: Vec<Vec<u64>>,
    /// Upper covers in the Hasse diagram.
    covers_up: Vec<Vec<NodeId>>,
    /// Lower covers.
    covers_down: Vec<Vec<NodeId>>,
}

impl SubmoduleLattice {
    /// Enumerate every submodule. Fails with the partial count when the node
    /// ceiling is exceeded.
    pub fn compute(module: &Arc<FiniteModule>, limits: &Limits) -> Result<Self, CeilingError> {
        let order = module.order();
        let mut seeds: Vec<ElemSet> = Vec::new();
        let mut seen: BTreeMap<ElemSet, ()> = BTreeMap::new();
        for x in module.elements() {
            let cyc = module.span(&[x]);
            if seen.insert(cyc.clone(), ()).is_none() {
                seeds.push(cyc);
            }
        }
        // Every submodule is a join of cyclic ones, so closing the seed set
        // under joins with seeds is complete. A seed that is itself the join
        // of the seeds strictly inside it is redundant as a join partner
        // (iterated joins with the smaller ones reach the same places), so
        // only the join-irreducible seeds drive the closure.
        let partners: Vec<ElemSet> = seeds
            .iter()
            .filter(|seed| {
                let mut span = ElemSet::empty(order);
                span.insert(0);
                for other in &seeds {
                    if other != *seed && other.is_subset_of(seed) {
                        span = join_sets(module, &span, other);
                    }
                }
                span != **seed
            })
            .cloned()
            .collect();
        let mut found: BTreeMap<ElemSet, ()> = BTreeMap::new();
        found.insert(ElemSet::singleton(order, 0), ());
        for s in &seeds {
            found.insert(s.clone(), ());
        }
        let mut frontier: Vec<ElemSet> = found.keys().cloned().collect();
        while let Some(current) = frontier.pop() {
            for seed in &partners {
                if seed.is_subset_of(&current) {
                    continue;
                }
                let joined = join_sets(module, &current, seed);
                if !found.contains_key(&joined) {
                    if found.len() >= limits.max_lattice_nodes {
                        return Err(CeilingError::new(
                            "lattice nodes",
                            limits.max_lattice_nodes as u64,
                            (found.len() + 1) as u64,
                        ));
                    }
                    found.insert(joined.clone(), ());
                    frontier.push(joined);
                }
            }
        }
        let mut sets: Vec<ElemSet> = found.into_keys().collect();
        sets.sort();
        let nodes: Vec<Submodule> = sets
            .iter()
            .map(|s| Submodule::from_set(module, s.clone()))
            .collect();
        let index: BTreeMap<ElemSet, NodeId> = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), i as NodeId))
            .collect();

        let count = nodes.len();
        let words = count.div_ceil(64);
        let mut above = vec![vec![0u64; words]; count];
        let mut below = vec![vec![0u64; words]; count];
        for i in 0..count {
            for j in 0..count {
                if nodes[i].elements().is_subset_of(nodes[j].elements()) {
                    above[i][j / 64] |= 1 << (j % 64);
                    below[j][i / 64] |= 1 << (i % 64);
                }
            }
        }
        // Covers: walk strictly-larger nodes in canonical (cardinality)
        // order; a candidate is a cover unless it contains an accepted one.
        let mut covers_up = vec![Vec::new(); count];
        let mut covers_down = vec![Vec::new(); count];
        for i in 0..count {
            let mut accepted: Vec<NodeId> = Vec::new();
            for j in (i + 1)..count {
                if above[i][j / 64] >> (j % 64) & 1 == 0 {
                    continue;
                }
                let dominated = accepted
                    .iter()
                    .any(|&k| above[k as usize][j / 64] >> (j % 64) & 1 == 1);
                if !dominated {
                    accepted.push(j as NodeId);
                }
            }
            for &j in &accepted {
                covers_up[i].push(j);
                covers_down[j as usize].push(i as NodeId);
            }
        }
        Ok(SubmoduleLattice {
            module: Arc::clone(module),
            nodes,
            index,
            above,
            below,
            covers_up,
            covers_down,
        })
    }

    pub fn module(&self) -> &Arc<FiniteModule> {
        &self.module
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains at least the zero submodule
    }

    pub fn nodes(&self) -> &[Submodule] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &Submodule {
        &self.nodes[id as usize]
    }

    pub fn bottom(&self) -> NodeId {
        0
    }

    pub fn top(&self) -> NodeId {
        (self.nodes.len() - 1) as NodeId
    }

    pub fn find(&self, set: &ElemSet) -> Option<NodeId> {
        self.index.get(set).copied()
    }

    #[inline]
    pub fn leq(&self, a: NodeId, b: NodeId) -> bool {
        self.above[a as usize][b as usize / 64] >> (b % 64) & 1 == 1
    }

    /// Meet: the greatest common lower bound. The enumeration is complete,
    /// so the common-lower-bound set has a unique maximum, which is its
    /// highest node index (node order refines cardinality).
    pub fn meet(&self, a: NodeId, b: NodeId) -> NodeId {
        let xs = &self.below[a as usize];
        let ys = &self.below[b as usize];
        for w in (0..xs.len()).rev() {
            let bits = xs[w] & ys[w];
            if bits != 0 {
                return (w * 64) as NodeId + 63 - bits.leading_zeros();
            }
        }
        unreachable!("zero submodule is below everything")
    }

    /// Join: the least common upper bound, the lowest index of the
    /// common-upper-bound set.
    pub fn join(&self, a: NodeId, b: NodeId) -> NodeId {
        let xs = &self.above[a as usize];
        let ys = &self.above[b as usize];
        for (w, (x, y)) in xs.iter().zip(ys).enumerate() {
            let bits = x & y;
            if bits != 0 {
                return (w * 64) as NodeId + bits.trailing_zeros();
            }
        }
        unreachable!("the whole module is above everything")
    }

    /// Join as a raw element set, without the node lookup.
    pub fn join_set(&self, a: NodeId, b: NodeId) -> ElemSet {
        join_sets(
            &self.module,
            self.nodes[a as usize].elements(),
            self.nodes[b as usize].elements(),
        )
    }

    pub fn upper_covers(&self, id: NodeId) -> &[NodeId] {
        &self.covers_up[id as usize]
    }

    pub fn lower_covers(&self, id: NodeId) -> &[NodeId] {
        &self.covers_down[id as usize]
    }

    /// Atoms of the interval `[lo, hi]`: nodes covering `lo` within the
    /// interval.
    pub fn atoms_of(&self, lo: NodeId, hi: NodeId) -> Vec<NodeId> {
        self.covers_up[lo as usize]
            .iter()
            .copied()
            .filter(|&j| self.leq(j, hi))
            .collect()
    }

    /// Coatoms of the interval `[lo, hi]`: nodes covered by `hi` within the
    /// interval.
    pub fn coatoms_of(&self, lo: NodeId, hi: NodeId) -> Vec<NodeId> {
        self.covers_down[hi as usize]
            .iter()
            .copied()
            .filter(|&j| self.leq(lo, j))
            .sorted_canonical()
    }

    /// Node ids inside the interval `[lo, hi]`, ascending (canonical order).
    pub fn interval(&self, lo: NodeId, hi: NodeId) -> Vec<NodeId> {
        let words = &self.above[lo as usize];
        let below = &self.below[hi as usize];
        let mut out = Vec::new();
        for (w, (a, b)) in words.iter().zip(below).enumerate() {
            let mut bits = a & b;
            while bits != 0 {
                let tz = bits.trailing_zeros();
                bits &= bits - 1;
                out.push((w * 64) as NodeId + tz);
            }
        }
        out
    }

    /// Longest chain length (number of covering steps) from `lo` to `hi`.
    /// On the modular lattices produced here this is the composition length
    /// of the factor.
    pub fn longest_chain(&self, lo: NodeId, hi: NodeId) -> u32 {
        debug_assert!(self.leq(lo, hi));
        const UNSET: u32 = u32::MAX;
        let mut dist = vec![UNSET; self.nodes.len()];
        // interval members come back canonically ordered, which refines the
        // order by cardinality, so one ascending pass is a topological sweep
        for m in self.interval(lo, hi) {
            let best = self.covers_down[m as usize]
                .iter()
                .filter(|&&d| self.leq(lo, d) && dist[d as usize] != UNSET)
                .map(|&d| dist[d as usize] + 1)
                .max()
                .unwrap_or(0);
            dist[m as usize] = best;
        }
        dist[hi as usize]
    }

    /// Every maximal chain in `[lo, hi]` has the same length. True in any
    /// modular lattice; asserted as an engine self-check.
    pub fn jordan_holder_holds(&self, lo: NodeId, hi: NodeId) -> bool {
        const UNSET: u32 = u32::MAX;
        let count = self.nodes.len();
        let mut shortest = vec![UNSET; count];
        let mut longest = vec![UNSET; count];
        for m in self.interval(lo, hi) {
            let mut lo_best = UNSET;
            let mut hi_best = UNSET;
            for &d in &self.covers_down[m as usize] {
                if self.leq(lo, d) && shortest[d as usize] != UNSET {
                    lo_best = lo_best.min(shortest[d as usize] + 1);
                    hi_best = if hi_best == UNSET {
                        longest[d as usize] + 1
                    } else {
                        hi_best.max(longest[d as usize] + 1)
                    };
                }
            }
            shortest[m as usize] = if lo_best == UNSET { 0 } else { lo_best };
            longest[m as usize] = if hi_best == UNSET { 0 } else { hi_best };
        }
        shortest[hi as usize] == longest[hi as usize]
    }
}

trait SortedCanonical {
    fn sorted_canonical(self) -> Vec<NodeId>;
}

impl<I: Iterator<Item = NodeId>> SortedCanonical for I {
    fn sorted_canonical(self) -> Vec<NodeId> {
        let mut v: Vec<NodeId> = self.collect();
        v.sort_unstable();
        v
    }
}

/// Elementwise sum of two submodule element sets; the set `{a + b}` is
/// already a submodule when both operands are.
pub(crate) fn join_sets(module: &FiniteModule, a: &ElemSet, b: &ElemSet) -> ElemSet {
    let mut out = ElemSet::empty(module.order());
    for x in a.iter() {
        for y in b.iter() {
            out.insert(module.add(x, y));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::FiniteRing;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn z12_regular_has_six_submodules() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        let sets: Vec<Vec<u16>> = lat.nodes().iter().map(|n| n.ids()).collect();
        assert_eq!(
            sets,
            vec![
                vec![0],
                vec![0, 6],
                vec![0, 4, 8],
                vec![0, 3, 6, 9],
                vec![0, 2, 4, 6, 8, 10],
                vec![0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11],
            ]
        );
    }

    #[test]
    fn z2xz2_has_five_submodules() {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], action, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        assert_eq!(lat.len(), 5);
    }

    #[test]
    fn simple_module_has_two_nodes() {
        let r = FiniteRing::cyclic(4).unwrap();
        let action: Vec<u16> = (0..4u16)
            .flat_map(|rr| (0..2u16).map(move |m| (m * rr) % 2))
            .collect();
        let m = FiniteModule::from_action(&r, &[2], action, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        assert_eq!(lat.len(), 2);
    }

    #[test]
    fn hasse_and_chains_on_z12() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        let atoms: Vec<Vec<u16>> = lat
            .atoms_of(lat.bottom(), lat.top())
            .iter()
            .map(|&a| lat.node(a).ids())
            .collect();
        assert_eq!(atoms, vec![vec![0, 6], vec![0, 4, 8]]);
        let coatoms: Vec<Vec<u16>> = lat
            .coatoms_of(lat.bottom(), lat.top())
            .iter()
            .map(|&a| lat.node(a).ids())
            .collect();
        assert_eq!(
            coatoms,
            vec![vec![0, 3, 6, 9], vec![0, 2, 4, 6, 8, 10]]
        );
        assert_eq!(lat.longest_chain(lat.bottom(), lat.top()), 3);
        assert!(lat.jordan_holder_holds(lat.bottom(), lat.top()));
    }

    #[test]
    fn meets_and_joins_close() {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        for a in 0..lat.len() as NodeId {
            for b in 0..lat.len() as NodeId {
                let meet = lat.meet(a, b);
                let join = lat.join(a, b);
                assert!(lat.leq(meet, a) && lat.leq(meet, b));
                assert!(lat.leq(a, join) && lat.leq(b, join));
            }
        }
    }

    #[test]
    fn node_ceiling_reports_partial_count() {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..16u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2, 2, 2], action, &limits()).unwrap();
        let tight = Limits {
            max_lattice_nodes: 10,
            ..Limits::default()
        };
        let err = SubmoduleLattice::compute(&m, &tight).unwrap_err();
        assert_eq!(err.limit, 10);
        assert!(err.needed > 10);
    }
}
