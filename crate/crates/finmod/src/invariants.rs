//! Lattice invariants of a finite module.
//!
//! Every quantity is computed from its defining condition on the complete
//! submodule lattice, and where a second characterization exists the two
//! routes are compared: the radical is both the intersection of maximal
//! submodules and the join of small ones, the socle both the join of minimal
//! submodules and the meet of essential ones; disagreement is an engine
//! fault, not a property of the input. All computations work on lattice
//! intervals `[lo, hi]`, so the same code serves the module itself, its
//! submodules, and its quotients.

use crate::bitset::ElemSet;
use crate::lattice::{NodeId, SubmoduleLattice};
use crate::{Error, Limits, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// `N + A != hi` for every `A` with `lo <= A < hi`: N is small in the factor
/// `hi/lo`. Brute force over the interval.
pub fn is_small_in(lat: &SubmoduleLattice, n: NodeId, lo: NodeId, hi: NodeId) -> bool {
    debug_assert!(lat.leq(lo, n) && lat.leq(n, hi));
    lat.interval(lo, hi)
        .into_iter()
        .all(|a| a == hi || lat.join(n, a) != hi)
}

/// `N meet A != lo` for every `A` with `lo < A <= hi`: N is essential in the
/// factor `hi/lo`.
pub fn is_essential_in(lat: &SubmoduleLattice, n: NodeId, lo: NodeId, hi: NodeId) -> bool {
    debug_assert!(lat.leq(lo, n) && lat.leq(n, hi));
    lat.interval(lo, hi)
        .into_iter()
        .all(|a| a == lo || lat.meet(n, a) != lo)
}

/// Smallness in the whole module.
pub fn is_small(lat: &SubmoduleLattice, n: NodeId) -> bool {
    is_small_in(lat, n, lat.bottom(), lat.top())
}

/// Essentiality in the whole module.
pub fn is_essential(lat: &SubmoduleLattice, n: NodeId) -> bool {
    is_essential_in(lat, n, lat.bottom(), lat.top())
}

/// All small nodes of the interval, ascending.
pub fn small_nodes_in(lat: &SubmoduleLattice, lo: NodeId, hi: NodeId) -> Vec<NodeId> {
    let members = lat.interval(lo, hi);
    members
        .iter()
        .copied()
        .filter(|&n| {
            members
                .iter()
                .all(|&a| a == hi || lat.join(n, a) != hi)
        })
        .collect()
}

/// All essential nodes of the interval, ascending.
pub fn essential_nodes_in(lat: &SubmoduleLattice, lo: NodeId, hi: NodeId) -> Vec<NodeId> {
    let members = lat.interval(lo, hi);
    members
        .iter()
        .copied()
        .filter(|&n| {
            members
                .iter()
                .all(|&a| a == lo || lat.meet(n, a) != lo)
        })
        .collect()
}

/// Radical by the maximal-submodule route only; the dual route (join of
/// smalls) is costlier and is cross-checked by [`radical_in`] on the whole
/// module and by the hereditary checks on small lattices.
pub fn radical_via_maximals(lat: &SubmoduleLattice, lo: NodeId, hi: NodeId) -> NodeId {
    let coatoms = lat.coatoms_of(lo, hi);
    if coatoms.is_empty() {
        hi
    } else {
        coatoms.iter().copied().fold(hi, |acc, c| lat.meet(acc, c))
    }
}

/// Radical of the factor `hi/lo`, computed by both characterizations.
///
/// Intersection of the maximal members (the whole factor when there are
/// none) must equal the join of the small members; a mismatch is a hard
/// fault.
pub fn radical_in(lat: &SubmoduleLattice, lo: NodeId, hi: NodeId) -> Result<NodeId> {
    let coatoms = lat.coatoms_of(lo, hi);
    let via_maximals = if coatoms.is_empty() {
        hi
    } else {
        coatoms.iter().copied().fold(hi, |acc, c| lat.meet(acc, c))
    };
    let via_smalls = small_nodes_in(lat, lo, hi)
        .into_iter()
        .fold(lo, |acc, s| lat.join(acc, s));
    if via_maximals != via_smalls {
        return Err(Error::Internal(format!(
            "radical routes disagree on interval [{lo},{hi}]: maximals give node {via_maximals}, smalls give node {via_smalls}"
        )));
    }
    Ok(via_maximals)
}

/// Socle of the factor `hi/lo`, computed by both characterizations.
pub fn socle_in(lat: &SubmoduleLattice, lo: NodeId, hi: NodeId) -> Result<NodeId> {
    let atoms = lat.atoms_of(lo, hi);
    let via_minimals = atoms.iter().copied().fold(lo, |acc, a| lat.join(acc, a));
    let via_essentials = essential_nodes_in(lat, lo, hi)
        .into_iter()
        .fold(hi, |acc, e| lat.meet(acc, e));
    if via_minimals != via_essentials {
        return Err(Error::Internal(format!(
            "socle routes disagree on interval [{lo},{hi}]: minimals give node {via_minimals}, essentials give node {via_essentials}"
        )));
    }
    Ok(via_minimals)
}

pub fn radical(lat: &SubmoduleLattice) -> Result<NodeId> {
    radical_in(lat, lat.bottom(), lat.top())
}

pub fn socle(lat: &SubmoduleLattice) -> Result<NodeId> {
    socle_in(lat, lat.bottom(), lat.top())
}

/// Composition length of the factor `hi/lo` (longest chain of covers).
pub fn length_in(lat: &SubmoduleLattice, lo: NodeId, hi: NodeId) -> u32 {
    lat.longest_chain(lo, hi)
}

/// Largest independent family of nonzero submodules in the factor `hi/lo`,
/// found by exhaustive search over atom families.
///
/// Restricting to atoms is exact: every member of an independent family
/// contains an atom of the interval, and shrinking members preserves
/// independence, so the maximum is attained on atoms. Families are grown in
/// ascending node order with the sequential condition `N_k meet (N_1 + ...
/// + N_{k-1}) = lo`, which every symmetric independent family satisfies, and
/// each candidate improving the maximum is re-verified against the symmetric
/// condition `N_i meet sum(N_j, j != i) = lo`. A direct sum inside the
/// factor cannot exceed its order, so branches are cut once the order
/// product would overflow it.
pub fn goldie_dimension_in(
    lat: &SubmoduleLattice,
    lo: NodeId,
    hi: NodeId,
    limits: &Limits,
) -> u32 {
    let members: Vec<NodeId> = lat.atoms_of(lo, hi);
    let lo_len = lat.node(lo).len();
    let hi_factor = (lat.node(hi).len() / lo_len) as u64;
    let mut best: Vec<NodeId> = Vec::new();
    let mut stack: Vec<NodeId> = Vec::new();
    struct Ctx<'a> {
        lat: &'a SubmoduleLattice,
        members: Vec<NodeId>,
        lo: NodeId,
        lo_len: usize,
        hi_factor: u64,
        cap: usize,
    }
    #[allow(clippy::only_used_in_recursion)]
    fn dfs(
        ctx: &Ctx<'_>,
        start: usize,
        joined: NodeId,
        factor_product: u64,
        stack: &mut Vec<NodeId>,
        best: &mut Vec<NodeId>,
    ) {
        if stack.len() > best.len() && verify_independent(ctx.lat, stack, ctx.lo) {
            *best = stack.clone();
        }
        if stack.len() >= ctx.cap {
            return;
        }
        for (offset, &cand) in ctx.members[start..].iter().enumerate() {
            let cand_factor = (ctx.lat.node(cand).len() / ctx.lo_len) as u64;
            if factor_product.saturating_mul(cand_factor) > ctx.hi_factor {
                continue;
            }
            if ctx.lat.meet(cand, joined) != ctx.lo {
                continue;
            }
            stack.push(cand);
            dfs(
                ctx,
                start + offset + 1,
                ctx.lat.join(joined, cand),
                factor_product * cand_factor,
                stack,
                best,
            );
            stack.pop();
        }
    }
    let ctx = Ctx {
        lat,
        members,
        lo,
        lo_len,
        hi_factor,
        cap: limits.max_family_size,
    };
    dfs(&ctx, 0, lo, 1, &mut stack, &mut best);
    best.len() as u32
}

fn verify_independent(lat: &SubmoduleLattice, family: &[NodeId], lo: NodeId) -> bool {
    family.iter().enumerate().all(|(i, &n)| {
        let others = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &m)| m)
            .fold(lo, |acc, m| lat.join(acc, m));
        lat.meet(n, others) == lo
    })
}

/// Largest coindependent family of proper submodules in the factor `hi/lo`:
/// `K_i + meet(K_j, j != i) = hi` for every i. Dual search to
/// [`goldie_dimension_in`] over coatom families (every coindependent family
/// stays coindependent when its members are enlarged to maximal ones),
/// pruned by the product of factor indices.
pub fn hollow_dimension_in(
    lat: &SubmoduleLattice,
    lo: NodeId,
    hi: NodeId,
    limits: &Limits,
) -> u32 {
    let members: Vec<NodeId> = lat.coatoms_of(lo, hi);
    let hi_len = lat.node(hi).len() as u64;
    let mut best: Vec<NodeId> = Vec::new();
    let mut stack: Vec<NodeId> = Vec::new();
    struct Ctx<'a> {
        lat: &'a SubmoduleLattice,
        members: Vec<NodeId>,
        hi: NodeId,
        hi_len: u64,
        cap: usize,
    }
    fn dfs(
        ctx: &Ctx<'_>,
        start: usize,
        met: NodeId,
        index_product: u64,
        stack: &mut Vec<NodeId>,
        best: &mut Vec<NodeId>,
    ) {
        if stack.len() > best.len() && verify_coindependent(ctx.lat, stack, ctx.hi) {
            *best = stack.clone();
        }
        if stack.len() >= ctx.cap {
            return;
        }
        for (offset, &cand) in ctx.members[start..].iter().enumerate() {
            let index = ctx.hi_len / ctx.lat.node(cand).len() as u64;
            if index_product.saturating_mul(index) > ctx.hi_len {
                continue;
            }
            if ctx.lat.join(cand, met) != ctx.hi {
                continue;
            }
            stack.push(cand);
            dfs(
                ctx,
                start + offset + 1,
                ctx.lat.meet(met, cand),
                index_product * index,
                stack,
                best,
            );
            stack.pop();
        }
    }
    let ctx = Ctx {
        lat,
        members,
        hi,
        hi_len,
        cap: limits.max_family_size,
    };
    dfs(&ctx, 0, hi, 1, &mut stack, &mut best);
    best.len() as u32
}

fn verify_coindependent(lat: &SubmoduleLattice, family: &[NodeId], hi: NodeId) -> bool {
    family.iter().enumerate().all(|(i, &n)| {
        let others = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &m)| m)
            .fold(hi, |acc, m| lat.meet(acc, m));
        lat.join(n, others) == hi
    })
}

/// Deviation of the interval `[lo, hi]`, descending (`dual = false`, the
/// Krull dimension of the factor) or ascending (`dual = true`, the
/// Noetherian dimension).
///
/// General recursion: a trivial interval has deviation -1; otherwise the
/// deviation is the least `alpha` such that no chain in the given direction
/// passes through infinitely many factor intervals of deviation >= alpha.
/// "Deviation >= 0" means the factor is nontrivial, so the alpha = 0 test
/// asks for a chain with infinitely many strict steps; the longest strict
/// chain of the interval is computed and finite, hence the test succeeds
/// and every nontrivial factor of a finite lattice has deviation 0. The
/// recursion and memoization stay in place for factor evaluation at higher
/// alpha, which finite inputs never reach.
pub struct DeviationEngine<'a> {
    lat: &'a SubmoduleLattice,
    memo: BTreeMap<(NodeId, NodeId, bool), i32>,
}

impl<'a> DeviationEngine<'a> {
    pub fn new(lat: &'a SubmoduleLattice) -> Self {
        DeviationEngine {
            lat,
            memo: BTreeMap::new(),
        }
    }

    pub fn deviation(&mut self, lo: NodeId, hi: NodeId, dual: bool) -> i32 {
        if let Some(&v) = self.memo.get(&(lo, hi, dual)) {
            return v;
        }
        let value = self.compute(lo, hi, dual);
        self.memo.insert((lo, hi, dual), value);
        value
    }

    fn compute(&mut self, lo: NodeId, hi: NodeId, dual: bool) -> i32 {
        if lo == hi {
            return -1;
        }
        let mut alpha = 0i32;
        loop {
            // Count the most alpha-critical steps any chain in the interval
            // can pass through. A step is critical when its factor interval
            // has deviation >= alpha; at alpha = 0 that is every strict step
            // by the definition of deviation (nontrivial <=> dev >= 0),
            // above 0 the factor is evaluated recursively.
            let mut has_critical_step = false;
            for m in self.lat.interval(lo, hi) {
                let steps = if dual {
                    self.lat.upper_covers(m).to_vec()
                } else {
                    self.lat.lower_covers(m).to_vec()
                };
                for s in steps {
                    if self.lat.leq(lo, s) && self.lat.leq(s, hi) {
                        let (a, b) = if dual { (m, s) } else { (s, m) };
                        let critical = if alpha == 0 {
                            a != b
                        } else {
                            self.deviation(a, b, dual) >= alpha
                        };
                        if critical {
                            has_critical_step = true;
                        }
                    }
                }
            }
            // A chain with infinitely many critical factors needs
            // unboundedly long strict chains; the longest chain of a finite
            // interval bounds every chain, so the count of critical factors
            // per chain is finite and alpha suffices.
            let chain_bound = self.lat.longest_chain(lo, hi);
            if !has_critical_step || chain_bound < u32::MAX {
                return alpha;
            }
            alpha += 1;
        }
    }
}

pub fn krull_dim(lat: &SubmoduleLattice) -> i32 {
    DeviationEngine::new(lat).deviation(lat.bottom(), lat.top(), false)
}

pub fn noeth_dim(lat: &SubmoduleLattice) -> i32 {
    DeviationEngine::new(lat).deviation(lat.bottom(), lat.top(), true)
}

/// Classification flags of a module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    /// Finitely many nonzero small submodules (every finite module
    /// qualifies; recorded for schema symmetry with the symbolic catalog).
    pub fs: bool,
    /// Finitely many submodules that are simultaneously small and minimal.
    pub fsm: bool,
    /// Exactly one nonzero small submodule.
    pub us: bool,
    /// Exactly one small-and-minimal submodule.
    pub usm: bool,
    /// Exactly one maximal submodule, containing every proper submodule.
    pub local: bool,
    /// Exactly one minimal submodule.
    pub dual_local: bool,
    /// Exactly one proper essential submodule.
    pub ue: bool,
    /// Every nonzero submodule N has a nonzero submodule small in N
    /// (equivalently Rad(N) != 0).
    pub homogeneous: bool,
    /// Variant reading: every nonzero submodule contains a nonzero
    /// submodule small in the ambient module.
    pub homogeneous_ambient: bool,
    /// Socle finitely generated (automatic here) and essential.
    pub finitely_embedded: bool,
    /// Socle is the whole module.
    pub semisimple: bool,
}

/// The full invariant record of a finite module.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantReport {
    pub order: usize,
    pub lattice_nodes: usize,
    pub radical: Vec<u16>,
    pub socle: Vec<u16>,
    pub soc_of_rad: Vec<u16>,
    pub small_submodules: Vec<Vec<u16>>,
    pub essential_submodules: Vec<Vec<u16>>,
    pub minimal_submodules: Vec<Vec<u16>>,
    pub maximal_submodules: Vec<Vec<u16>>,
    pub goldie_dim: u32,
    pub hollow_dim: u32,
    pub length: u32,
    pub krull_dim: i32,
    pub noeth_dim: i32,
    pub flags: ClassFlags,
    /// Count of nonzero small submodules.
    pub fs_small_count: u32,
    /// Count of small-and-minimal submodules.
    pub fsm_small_minimal_count: u32,
}

/// Shared per-lattice analysis: the radical and socle with their dual
/// routes verified, plus the small, essential, minimal and maximal node
/// lists. Computed once and fed to classification, the theorem checks, and
/// the decomposition.
#[derive(Debug)]
pub struct ModuleAnalysis<'a> {
    pub lat: &'a SubmoduleLattice,
    pub radical: NodeId,
    pub socle: NodeId,
    pub smalls: Vec<NodeId>,
    pub essentials: Vec<NodeId>,
    pub atoms: Vec<NodeId>,
    pub coatoms: Vec<NodeId>,
}

impl<'a> ModuleAnalysis<'a> {
    pub fn compute(lat: &'a SubmoduleLattice) -> Result<Self> {
        let bot = lat.bottom();
        let top = lat.top();
        let smalls = small_nodes_in(lat, bot, top);
        let essentials = essential_nodes_in(lat, bot, top);
        let atoms = lat.atoms_of(bot, top);
        let coatoms = lat.coatoms_of(bot, top);
        // dual routes, verified here once
        let rad_maximals = radical_via_maximals(lat, bot, top);
        let rad_smalls = smalls.iter().copied().fold(bot, |acc, s| lat.join(acc, s));
        if rad_maximals != rad_smalls {
            return Err(Error::Internal(format!(
                "radical routes disagree: maximals give node {rad_maximals}, smalls give node {rad_smalls}"
            )));
        }
        let soc_minimals = atoms.iter().copied().fold(bot, |acc, a| lat.join(acc, a));
        let soc_essentials = essentials
            .iter()
            .copied()
            .fold(top, |acc, e| lat.meet(acc, e));
        if soc_minimals != soc_essentials {
            return Err(Error::Internal(format!(
                "socle routes disagree: minimals give node {soc_minimals}, essentials give node {soc_essentials}"
            )));
        }
        Ok(ModuleAnalysis {
            lat,
            radical: rad_maximals,
            socle: soc_minimals,
            smalls,
            essentials,
            atoms,
            coatoms,
        })
    }

    pub fn is_small(&self, n: NodeId) -> bool {
        self.smalls.binary_search(&n).is_ok()
    }

    pub fn is_essential(&self, n: NodeId) -> bool {
        self.essentials.binary_search(&n).is_ok()
    }
}

/// Compute every invariant and classification flag.
pub fn classify(lat: &SubmoduleLattice, limits: &Limits) -> Result<InvariantReport> {
    let analysis = ModuleAnalysis::compute(lat)?;
    classify_with(&analysis, limits)
}

/// Classification over a precomputed analysis.
pub fn classify_with(analysis: &ModuleAnalysis<'_>, limits: &Limits) -> Result<InvariantReport> {
    let lat = analysis.lat;
    let bot = lat.bottom();
    let top = lat.top();
    let rad = analysis.radical;
    let soc = analysis.socle;
    let soc_of_rad = socle_in(lat, bot, rad)?;
    let smalls = &analysis.smalls;
    let essentials = &analysis.essentials;
    let minimals = &analysis.atoms;
    let maximals = &analysis.coatoms;
    let goldie = goldie_dimension_in(lat, bot, top, limits);
    let hollow = hollow_dimension_in(lat, bot, top, limits);
    let length = length_in(lat, bot, top);
    let krull = krull_dim(lat);
    let noeth = noeth_dim(lat);

    let nonzero_smalls: Vec<NodeId> = smalls.iter().copied().filter(|&s| s != bot).collect();
    let small_minimals: Vec<NodeId> = minimals
        .iter()
        .copied()
        .filter(|m| smalls.contains(m))
        .collect();
    let proper_essentials: Vec<NodeId> =
        essentials.iter().copied().filter(|&e| e != top).collect();

    let local = maximals.len() == 1 && {
        let k = maximals[0];
        lat.interval(bot, top)
            .into_iter()
            .filter(|&n| n != top)
            .all(|n| lat.leq(n, k))
    };
    let mut homogeneous = true;
    let mut homogeneous_ambient = true;
    for n in lat.interval(bot, top) {
        if n == bot {
            continue;
        }
        if radical_via_maximals(lat, bot, n) == bot {
            homogeneous = false;
        }
        if !nonzero_smalls.iter().any(|&s| lat.leq(s, n)) {
            homogeneous_ambient = false;
        }
    }

    let flags = ClassFlags {
        fs: true,
        fsm: true,
        us: nonzero_smalls.len() == 1,
        usm: small_minimals.len() == 1,
        local,
        dual_local: minimals.len() == 1,
        ue: proper_essentials.len() == 1,
        homogeneous,
        homogeneous_ambient,
        finitely_embedded: analysis.is_essential(soc),
        semisimple: soc == top,
    };
    let ids =
        |nodes: &[NodeId]| -> Vec<Vec<u16>> { nodes.iter().map(|&n| lat.node(n).ids()).collect() };
    Ok(InvariantReport {
        order: lat.module().order(),
        lattice_nodes: lat.len(),
        radical: lat.node(rad).ids(),
        socle: lat.node(soc).ids(),
        soc_of_rad: lat.node(soc_of_rad).ids(),
        small_submodules: ids(&smalls),
        essential_submodules: ids(&essentials),
        minimal_submodules: ids(&minimals),
        maximal_submodules: ids(&maximals),
        goldie_dim: goldie,
        hollow_dim: hollow,
        length,
        krull_dim: krull,
        noeth_dim: noeth,
        flags,
        fs_small_count: nonzero_smalls.len() as u32,
        fsm_small_minimal_count: small_minimals.len() as u32,
    })
}

/// One step of the decomposition: a minimal non-small submodule and the
/// maximal submodule of the working factor that complements it.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DecompositionStep {
    pub minimal: Vec<u16>,
    pub complement: Vec<u16>,
}

/// The semisimple-plus-small-socle decomposition `M = (N_1 + ... + N_m) + K`
/// with all sums direct.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Decomposition {
    pub semisimple_part: Vec<Vec<u16>>,
    /// Join of the semisimple summands.
    pub semisimple_span: Vec<u16>,
    pub complement: Vec<u16>,
    pub socle_of_complement: Vec<u16>,
    pub steps: Vec<DecompositionStep>,
}

/// Split off minimal non-small submodules one at a time.
///
/// While the working submodule W has a minimal submodule N not inside
/// Rad(W), the canonically least such N and the canonically least maximal
/// submodule K of W avoiding N satisfy N (+) K = W; recurse into K. The
/// final complement has small socle. Every claim (directness, minimality,
/// non-smallness in M, smallness of the final socle in M) is re-verified and
/// a failure is an engine fault.
pub fn decompose(lat: &SubmoduleLattice, _limits: &Limits) -> Result<Decomposition> {
    let bot = lat.bottom();
    let mut work = lat.top();
    let mut parts: Vec<NodeId> = Vec::new();
    let mut steps = Vec::new();
    loop {
        let rad_work = radical_via_maximals(lat, bot, work);
        let candidate = lat
            .atoms_of(bot, work)
            .into_iter()
            .find(|&n| !lat.leq(n, rad_work));
        let n = match candidate {
            Some(n) => n,
            None => break,
        };
        let k = lat
            .coatoms_of(bot, work)
            .into_iter()
            .find(|&k| !lat.leq(n, k))
            .ok_or_else(|| {
                Error::Internal(format!(
                    "no maximal complement for minimal non-small node {n} in working node {work}"
                ))
            })?;
        if lat.meet(n, k) != bot || lat.join(n, k) != work {
            return Err(Error::Internal(format!(
                "complement certificate failed: node {n} and node {k} do not decompose node {work}"
            )));
        }
        steps.push(DecompositionStep {
            minimal: lat.node(n).ids(),
            complement: lat.node(k).ids(),
        });
        parts.push(n);
        work = k;
    }
    // Verify the internal direct sum N_1 (+) ... (+) N_m (+) K = M.
    let mut family = parts.clone();
    family.push(work);
    for (i, &p) in family.iter().enumerate() {
        let others = family
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, &q)| q)
            .fold(bot, |acc, q| lat.join(acc, q));
        if lat.meet(p, others) != bot {
            return Err(Error::Internal(
                "decomposition summands are not independent".into(),
            ));
        }
    }
    let span = family.iter().copied().fold(bot, |acc, q| lat.join(acc, q));
    if span != lat.top() {
        return Err(Error::Internal("decomposition does not span".into()));
    }
    // Each split-off part is minimal in M and non-small in M.
    let atoms = lat.atoms_of(bot, lat.top());
    for &p in &parts {
        if !atoms.contains(&p) {
            return Err(Error::Internal(
                "decomposition part is not a minimal submodule".into(),
            ));
        }
        if is_small(lat, p) {
            return Err(Error::Internal(
                "decomposition part is small in the module".into(),
            ));
        }
    }
    let soc_k = socle_in(lat, bot, work)?;
    if !is_small(lat, soc_k) {
        return Err(Error::Internal(
            "socle of the decomposition complement is not small".into(),
        ));
    }
    let semisimple_span = parts.iter().copied().fold(bot, |acc, q| lat.join(acc, q));
    Ok(Decomposition {
        semisimple_part: parts.iter().map(|&p| lat.node(p).ids()).collect(),
        semisimple_span: lat.node(semisimple_span).ids(),
        complement: lat.node(work).ids(),
        socle_of_complement: lat.node(soc_k).ids(),
        steps,
    })
}

/// Node lookup by explicit id list; test and report helper.
pub fn node_by_ids(lat: &SubmoduleLattice, ids: &[u16]) -> Option<NodeId> {
    lat.find(&ElemSet::from_ids(lat.module().order(), ids))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::module::FiniteModule;
    use crate::ring::FiniteRing;
    use std::sync::Arc;

    fn limits() -> Limits {
        Limits::default()
    }

    fn regular(n: u32) -> (Arc<FiniteModule>, SubmoduleLattice) {
        let r = FiniteRing::cyclic(n).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        (m, lat)
    }

    fn node_of(lat: &SubmoduleLattice, ids: &[u16]) -> NodeId {
        node_by_ids(lat, ids).expect("node exists")
    }

    #[test]
    fn smallness_on_z12() {
        let (_, lat) = regular(12);
        assert!(is_small(&lat, node_of(&lat, &[0, 6])));
        assert!(!is_small(&lat, node_of(&lat, &[0, 4, 8])));
        assert!(is_small(&lat, lat.bottom()));
    }

    #[test]
    fn essentiality_on_z12() {
        let (_, lat) = regular(12);
        assert!(is_essential(&lat, node_of(&lat, &[0, 2, 4, 6, 8, 10])));
        assert!(!is_essential(&lat, node_of(&lat, &[0, 4, 8])));
        assert!(is_essential(&lat, lat.top()));
    }

    #[test]
    fn radical_and_socle_on_z12() {
        let (_, lat) = regular(12);
        let rad = radical(&lat).unwrap();
        let soc = socle(&lat).unwrap();
        assert_eq!(lat.node(rad).ids(), vec![0, 6]);
        assert_eq!(lat.node(soc).ids(), vec![0, 2, 4, 6, 8, 10]);
    }

    #[test]
    fn radical_and_socle_on_z6() {
        let (_, lat) = regular(6);
        assert_eq!(lat.node(radical(&lat).unwrap()).ids(), vec![0]);
        assert_eq!(socle(&lat).unwrap(), lat.top());
    }

    #[test]
    fn zero_module_invariants() {
        let (_, lat) = regular(1);
        assert_eq!(radical(&lat).unwrap(), lat.bottom());
        assert_eq!(socle(&lat).unwrap(), lat.bottom());
        assert_eq!(goldie_dimension_in(&lat, 0, 0, &limits()), 0);
        assert_eq!(hollow_dimension_in(&lat, 0, 0, &limits()), 0);
        assert_eq!(length_in(&lat, lat.bottom(), lat.top()), 0);
        assert_eq!(krull_dim(&lat), -1);
        assert_eq!(noeth_dim(&lat), -1);
    }

    #[test]
    fn dimensions_on_z12() {
        let (_, lat) = regular(12);
        assert_eq!(
            goldie_dimension_in(&lat, lat.bottom(), lat.top(), &limits()),
            2
        );
        assert_eq!(
            hollow_dimension_in(&lat, lat.bottom(), lat.top(), &limits()),
            2
        );
        assert_eq!(length_in(&lat, lat.bottom(), lat.top()), 3);
        assert_eq!(krull_dim(&lat), 0);
        assert_eq!(noeth_dim(&lat), 0);
    }

    #[test]
    fn dimensions_on_z9() {
        let (_, lat) = regular(9);
        assert_eq!(
            goldie_dimension_in(&lat, lat.bottom(), lat.top(), &limits()),
            1
        );
        assert_eq!(
            hollow_dimension_in(&lat, lat.bottom(), lat.top(), &limits()),
            1
        );
    }

    #[test]
    fn goldie_on_z2_squared() {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], action, &limits()).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
        assert_eq!(
            goldie_dimension_in(&lat, lat.bottom(), lat.top(), &limits()),
            2
        );
    }

    #[test]
    fn dim_cross_checks_on_samples() {
        for n in [2u32, 4, 6, 8, 9, 12, 16, 18, 24, 30] {
            let (_, lat) = regular(n);
            let rad = radical(&lat).unwrap();
            let soc = socle(&lat).unwrap();
            let g = goldie_dimension_in(&lat, lat.bottom(), lat.top(), &limits());
            let h = hollow_dimension_in(&lat, lat.bottom(), lat.top(), &limits());
            assert_eq!(
                g,
                length_in(&lat, lat.bottom(), soc),
                "goldie != len(soc) for Z{n}"
            );
            assert_eq!(
                h,
                length_in(&lat, rad, lat.top()),
                "hollow != len(M/rad) for Z{n}"
            );
        }
    }

    #[test]
    fn classify_z4() {
        let (_, lat) = regular(4);
        let rep = classify(&lat, &limits()).unwrap();
        assert!(rep.flags.local && rep.flags.us && rep.flags.dual_local && rep.flags.ue);
        assert_eq!(rep.fs_small_count, 1);
        assert_eq!(rep.lattice_nodes, 3);
    }

    #[test]
    fn classify_z6() {
        let (_, lat) = regular(6);
        let rep = classify(&lat, &limits()).unwrap();
        assert!(rep.flags.semisimple);
        assert!(!rep.flags.local);
        assert_eq!(rep.fs_small_count, 0);
    }

    #[test]
    fn classify_z12() {
        let (_, lat) = regular(12);
        let rep = classify(&lat, &limits()).unwrap();
        assert_eq!(rep.fs_small_count, 1);
        assert_eq!(rep.fsm_small_minimal_count, 1);
        assert!(rep.flags.us);
        assert!(!rep.flags.local);
        assert!(rep.flags.usm);
    }

    #[test]
    fn decompose_z12() {
        let (_, lat) = regular(12);
        let dec = decompose(&lat, &limits()).unwrap();
        assert_eq!(dec.semisimple_part, vec![vec![0, 4, 8]]);
        assert_eq!(dec.complement, vec![0, 3, 6, 9]);
        assert_eq!(dec.socle_of_complement, vec![0, 6]);
    }

    #[test]
    fn decompose_z6() {
        let (_, lat) = regular(6);
        let dec = decompose(&lat, &limits()).unwrap();
        assert_eq!(dec.semisimple_part.len(), 2);
        assert_eq!(dec.semisimple_span.len(), 6);
        assert_eq!(dec.complement, vec![0]);
    }

    #[test]
    fn decompose_z9() {
        let (_, lat) = regular(9);
        let dec = decompose(&lat, &limits()).unwrap();
        assert!(dec.semisimple_part.is_empty());
        assert_eq!(dec.complement.len(), 9);
    }
}
