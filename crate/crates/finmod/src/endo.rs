//! The endomorphism-ring side of a module: multiplication and self-generator
//! properties, fully invariant submodules, the view of M as a module over
//! S = End_R(M), and the comparison of the two submodule lattices and their
//! dimension vectors.
//!
//! The S-module view is stored in the right-module convention over the
//! opposite of the composition ring, so the one lattice engine serves both
//! sides; for commutative S the opposite is the same ring.

use crate::bitset::ElemSet;
use crate::hom::EndomorphismRing;
use crate::ideal::{Ideal, Side};
use crate::invariants::{
    essential_nodes_in, goldie_dimension_in, hollow_dimension_in, krull_dim, noeth_dim,
    small_nodes_in,
};
use crate::lattice::SubmoduleLattice;
use crate::module::{FiniteModule, ModulePresentation};
use crate::ring::FiniteRing;
use crate::{Error, Limits, Result};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

#[derive(Debug, Clone, thiserror::Error)]
#[error("operation requires a commutative base ring")]
pub struct NotCommutative;

/// The conductor `(N : M) = {r in R : M*r in N}` as a two-sided ideal of the
/// commutative base ring.
pub fn conductor(
    module: &FiniteModule,
    n: &crate::module::Submodule,
) -> std::result::Result<Ideal, NotCommutative> {
    let ring = module.ring();
    if !ring.is_commutative() {
        return Err(NotCommutative);
    }
    let mut set = ElemSet::empty(ring.order());
    for r in ring.elements() {
        if module.elements().all(|m| n.contains(module.act(r, m))) {
            set.insert(r);
        }
    }
    Ok(Ideal::from_set_unchecked(ring.token(), Side::TwoSided, set))
}

/// `M * I`: the additive span of all `m * r` with `r` in the given element
/// set.
pub fn module_times_ideal(module: &FiniteModule, ideal: &ElemSet) -> ElemSet {
    let mut gens = Vec::new();
    for r in ideal.iter() {
        for m in module.elements() {
            gens.push(module.act(r, m));
        }
    }
    module.span(&gens)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiplicationWitness {
    pub is_multiplication: bool,
    /// First submodule (canonical order) with `M*(N:M)` strictly below `N`.
    pub failing_submodule: Option<Vec<u16>>,
    pub conductor_of_failure: Option<Vec<u16>>,
}

/// Is every submodule of the form `M*I`? The conductor `(N:M)` is the
/// canonical candidate, so the test is one pass over the lattice.
pub fn is_multiplication(
    lat: &SubmoduleLattice,
) -> std::result::Result<MultiplicationWitness, NotCommutative> {
    let module = lat.module();
    for node in lat.nodes() {
        let cond = conductor(module, node)?;
        let span = module_times_ideal(module, cond.elements());
        debug_assert!(span.is_subset_of(node.elements()));
        if &span != node.elements() {
            return Ok(MultiplicationWitness {
                is_multiplication: false,
                failing_submodule: Some(node.ids()),
                conductor_of_failure: Some(cond.ids()),
            });
        }
    }
    Ok(MultiplicationWitness {
        is_multiplication: true,
        failing_submodule: None,
        conductor_of_failure: None,
    })
}

/// `f(N) subset of N` for every endomorphism f.
pub fn is_fully_invariant(end: &EndomorphismRing, n: &crate::module::Submodule) -> bool {
    end.homs()
        .iter()
        .all(|f| n.elements().iter().all(|x| n.contains(f.apply(x))))
}

/// The view of M as a module over S = End_R(M), in right-module convention
/// over the opposite composition ring: `m * f = f(m)`. Submodules of the
/// view are exactly the S-submodules of M, over the same element ids.
pub fn s_module_view(end: &EndomorphismRing, limits: &Limits) -> Result<Arc<FiniteModule>> {
    let module = end.module();
    let s_op = opposite_composition_ring(end);
    let n = module.order();
    let mut add = vec![0u16; n * n];
    let mut neg = vec![0u16; n];
    for a in 0..n as u16 {
        neg[a as usize] = module.neg(a);
        for b in 0..n as u16 {
            add[a as usize * n + b as usize] = module.add(a, b);
        }
    }
    let action = end.action_table();
    let coords = module
        .elements()
        .map(|m| module.coords(m).to_vec())
        .collect();
    FiniteModule::from_tables(
        s_op,
        n,
        module.coord_moduli().to_vec(),
        coords,
        add,
        neg,
        action,
        ModulePresentation::SModuleView,
        limits,
    )
    .map_err(Error::Module)
}

/// The composition ring with arguments swapped, so that `m * f = f(m)`
/// satisfies the right-module law `(m*f)*g = m*(f.g)`. Shared with the
/// reported end ring when S is commutative.
fn opposite_composition_ring(end: &EndomorphismRing) -> Arc<FiniteRing> {
    end.ring().opposite()
}

/// Dimension vector of one lattice view.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimVector {
    pub goldie: u32,
    pub hollow: u32,
    pub krull: i32,
    pub noeth: i32,
}

pub fn dim_vector(lat: &SubmoduleLattice, limits: &Limits) -> DimVector {
    DimVector {
        goldie: goldie_dimension_in(lat, lat.bottom(), lat.top(), limits),
        hollow: hollow_dimension_in(lat, lat.bottom(), lat.top(), limits),
        krull: krull_dim(lat),
        noeth: noeth_dim(lat),
    }
}

/// Comparison of the R-submodule and S-submodule lattices of one module.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub end_ring_order: usize,
    pub end_ring_commutative: bool,
    pub multiplication: bool,
    pub self_generator: bool,
    pub r_lattice_nodes: usize,
    pub s_lattice_nodes: usize,
    /// Node sets identical.
    pub lattices_equal: bool,
    /// Every S-submodule is an R-submodule.
    pub s_subset_of_r: bool,
    pub dims_r: DimVector,
    pub dims_s: DimVector,
    pub dims_equal: bool,
    /// Small sets and essential sets coincide across the views; only
    /// asserted (Some) for multiplication modules.
    pub small_essential_agree: Option<bool>,
    /// Nonzero small submodule sets identical, hence equal fs counts; only
    /// asserted for self-generator multiplication modules.
    pub fs_agree: Option<bool>,
}

/// Everything needed to compare the two views of one module.
pub struct SymmetryAnalysis {
    pub end: EndomorphismRing,
    pub s_view: Arc<FiniteModule>,
    pub s_lattice: SubmoduleLattice,
    pub multiplication: Option<MultiplicationWitness>,
    pub self_generator: SelfGeneratorWitness,
    pub report: SymmetryReport,
}

/// Build the S-module view, enumerate its lattice, and compare with the
/// R-lattice.
pub fn analyze_symmetry(r_lattice: &SubmoduleLattice, limits: &Limits) -> Result<SymmetryAnalysis> {
    let r_analysis = crate::invariants::ModuleAnalysis::compute(r_lattice)?;
    analyze_symmetry_with(&r_analysis, limits)
}

/// Symmetry analysis over a precomputed R-side analysis.
pub fn analyze_symmetry_with(
    r_analysis: &crate::invariants::ModuleAnalysis<'_>,
    limits: &Limits,
) -> Result<SymmetryAnalysis> {
    let r_lattice = r_analysis.lat;
    let module = r_lattice.module();
    let end = EndomorphismRing::compute(module, limits)?;
    let s_view = s_module_view(&end, limits)?;
    let s_lattice = SubmoduleLattice::compute(&s_view, limits)?;

    let r_sets: Vec<&ElemSet> = r_lattice.nodes().iter().map(|n| n.elements()).collect();
    let s_sets: Vec<&ElemSet> = s_lattice.nodes().iter().map(|n| n.elements()).collect();
    let s_subset_of_r = s_sets.iter().all(|s| r_sets.contains(s));
    let lattices_equal = s_subset_of_r && r_sets.len() == s_sets.len();

    let multiplication = if module.ring().is_commutative() {
        Some(is_multiplication(r_lattice).expect("commutativity checked"))
    } else {
        None
    };
    let is_mult = multiplication
        .as_ref()
        .map(|w| w.is_multiplication)
        .unwrap_or(false);
    let self_generator = is_self_generator(r_lattice, &end);

    let dims_r = dim_vector(r_lattice, limits);
    let dims_s = dim_vector(&s_lattice, limits);

    let ids_of = |lat: &SubmoduleLattice, nodes: &[crate::lattice::NodeId]| -> Vec<Vec<u16>> {
        nodes.iter().map(|&n| lat.node(n).ids()).collect()
    };
    let r_small_ids = ids_of(r_lattice, &r_analysis.smalls);
    let r_essential_ids = ids_of(r_lattice, &r_analysis.essentials);
    let s_small_ids = ids_of(
        &s_lattice,
        &small_nodes_in(&s_lattice, s_lattice.bottom(), s_lattice.top()),
    );
    let s_essential_ids = ids_of(
        &s_lattice,
        &essential_nodes_in(&s_lattice, s_lattice.bottom(), s_lattice.top()),
    );
    let small_essential_agree = if is_mult {
        Some(r_small_ids == s_small_ids && r_essential_ids == s_essential_ids)
    } else {
        None
    };
    let fs_agree = if is_mult && self_generator.is_self_generator {
        Some(r_small_ids == s_small_ids)
    } else {
        None
    };

    let report = SymmetryReport {
        end_ring_order: end.order(),
        end_ring_commutative: end.is_commutative(),
        multiplication: is_mult,
        self_generator: self_generator.is_self_generator,
        r_lattice_nodes: r_lattice.len(),
        s_lattice_nodes: s_lattice.len(),
        lattices_equal,
        s_subset_of_r,
        dims_r,
        dims_s,
        dims_equal: dims_r == dims_s,
        small_essential_agree,
        fs_agree,
    };
    Ok(SymmetryAnalysis {
        end,
        s_view,
        s_lattice,
        multiplication,
        self_generator,
        report,
    })
}

/// `I_X = {f in S : f(M) subset of X}` as a right ideal of the composition
/// ring (two-sided when S is commutative).
pub fn i_x(end: &EndomorphismRing, x: &ElemSet) -> Ideal {
    let module = end.module();
    let mut set = ElemSet::empty(end.order());
    for (i, f) in end.homs().iter().enumerate() {
        if module.elements().all(|m| x.contains(f.apply(m))) {
            set.insert(i as u16);
        }
    }
    Ideal::from_set_unchecked(end.ring().token(), Side::Right, set)
}

/// Sum of the images `f(M)` over all `f` in the given set of hom indices.
pub fn sum_of_images(end: &EndomorphismRing, homs: &ElemSet) -> ElemSet {
    let module = end.module();
    let mut gens = Vec::new();
    for i in homs.iter() {
        let f = &end.homs()[i as usize];
        for m in module.elements() {
            gens.push(f.apply(m));
        }
    }
    module.span(&gens)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SelfGeneratorWitness {
    pub is_self_generator: bool,
    /// First submodule not spanned by the images of `I_N`.
    pub failing_submodule: Option<Vec<u16>>,
}

/// Every submodule N equals the sum of images of the homs in `I_N`. Taking
/// the full `I_N` is canonical: any witness family sits inside it.
pub fn is_self_generator(lat: &SubmoduleLattice, end: &EndomorphismRing) -> SelfGeneratorWitness {
    for node in lat.nodes() {
        let ideal = i_x(end, node.elements());
        let span = sum_of_images(end, ideal.elements());
        if &span != node.elements() {
            return SelfGeneratorWitness {
                is_self_generator: false,
                failing_submodule: Some(node.ids()),
            };
        }
    }
    SelfGeneratorWitness {
        is_self_generator: true,
        failing_submodule: None,
    }
}

/// Is the S-view a multiplication module: `I_X * M = X` for every
/// S-submodule X, where `I_X * M` is the sum of images over `I_X`.
pub fn s_view_is_multiplication(s_lattice: &SubmoduleLattice, end: &EndomorphismRing) -> bool {
    s_lattice.nodes().iter().all(|node| {
        let ideal = i_x(end, node.elements());
        &sum_of_images(end, ideal.elements()) == node.elements()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::node_by_ids;

    fn limits() -> Limits {
        Limits::default()
    }

    fn regular_lattice(n: u32) -> SubmoduleLattice {
        let r = FiniteRing::cyclic(n).unwrap();
        let m = FiniteModule::regular(&r, &limits()).unwrap();
        SubmoduleLattice::compute(&m, &limits()).unwrap()
    }

    fn z2_squared_lattice() -> SubmoduleLattice {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], action, &limits()).unwrap();
        SubmoduleLattice::compute(&m, &limits()).unwrap()
    }

    #[test]
    fn conductor_examples() {
        let lat = regular_lattice(12);
        let m = lat.module();
        let two_z12 = lat.node(node_by_ids(&lat, &[0, 2, 4, 6, 8, 10]).unwrap());
        let cond = conductor(m, two_z12).unwrap();
        assert_eq!(cond.ids(), vec![0, 2, 4, 6, 8, 10]);
        let full = lat.node(lat.top());
        assert_eq!(conductor(m, full).unwrap().len(), 12);
    }

    #[test]
    fn conductor_of_axis_in_z2_squared_is_zero() {
        let lat = z2_squared_lattice();
        let axis = lat.node(node_by_ids(&lat, &[0, 1]).unwrap());
        let cond = conductor(lat.module(), axis).unwrap();
        assert_eq!(cond.ids(), vec![0]);
    }

    #[test]
    fn multiplication_examples() {
        for n in [4u32, 6, 9, 12] {
            let lat = regular_lattice(n);
            assert!(
                is_multiplication(&lat).unwrap().is_multiplication,
                "Z{n} regular is multiplication"
            );
        }
        let lat = z2_squared_lattice();
        let w = is_multiplication(&lat).unwrap();
        assert!(!w.is_multiplication);
        assert_eq!(w.failing_submodule, Some(vec![0, 1]));
    }

    #[test]
    fn fully_invariant_examples() {
        let lat = regular_lattice(6);
        let end = EndomorphismRing::compute(lat.module(), &limits()).unwrap();
        let n = lat.node(node_by_ids(&lat, &[0, 2, 4]).unwrap());
        assert!(is_fully_invariant(&end, n));

        let lat2 = z2_squared_lattice();
        let end2 = EndomorphismRing::compute(lat2.module(), &limits()).unwrap();
        let axis = lat2.node(node_by_ids(&lat2, &[0, 1]).unwrap());
        assert!(!is_fully_invariant(&end2, axis));
        let full = lat2.node(lat2.top());
        assert!(is_fully_invariant(&end2, full));
    }

    #[test]
    fn s_lattice_of_z6_coincides() {
        let lat = regular_lattice(6);
        let analysis = analyze_symmetry(&lat, &limits()).unwrap();
        assert!(analysis.report.lattices_equal);
        assert_eq!(analysis.report.r_lattice_nodes, 4);
        assert_eq!(analysis.report.s_lattice_nodes, 4);
    }

    #[test]
    fn s_lattice_of_z2_squared_is_strictly_smaller() {
        let lat = z2_squared_lattice();
        let analysis = analyze_symmetry(&lat, &limits()).unwrap();
        assert!(!analysis.report.lattices_equal);
        assert!(analysis.report.s_subset_of_r);
        assert_eq!(analysis.report.r_lattice_nodes, 5);
        assert_eq!(analysis.report.s_lattice_nodes, 2);
        assert_eq!(analysis.report.end_ring_order, 16);
        assert!(!analysis.report.end_ring_commutative);
        assert!(analysis.report.self_generator);
    }

    #[test]
    fn dimension_symmetry_on_z12_and_z9() {
        let lat = regular_lattice(12);
        let analysis = analyze_symmetry(&lat, &limits()).unwrap();
        assert_eq!(
            analysis.report.dims_r,
            DimVector {
                goldie: 2,
                hollow: 2,
                krull: 0,
                noeth: 0
            }
        );
        assert!(analysis.report.dims_equal);
        assert_eq!(analysis.report.small_essential_agree, Some(true));
        assert_eq!(analysis.report.fs_agree, Some(true));

        let lat9 = regular_lattice(9);
        let a9 = analyze_symmetry(&lat9, &limits()).unwrap();
        assert_eq!(
            a9.report.dims_r,
            DimVector {
                goldie: 1,
                hollow: 1,
                krull: 0,
                noeth: 0
            }
        );
        assert!(a9.report.dims_equal);
    }

    #[test]
    fn zero_module_symmetry_is_trivial() {
        let lat = regular_lattice(1);
        let analysis = analyze_symmetry(&lat, &limits()).unwrap();
        assert!(analysis.report.lattices_equal);
        assert_eq!(
            analysis.report.dims_r,
            DimVector {
                goldie: 0,
                hollow: 0,
                krull: -1,
                noeth: -1
            }
        );
        assert!(analysis.report.dims_equal);
    }

    #[test]
    fn i_x_on_z6() {
        let lat = regular_lattice(6);
        let end = EndomorphismRing::compute(lat.module(), &limits()).unwrap();
        let x = lat
            .node(node_by_ids(&lat, &[0, 2, 4]).unwrap())
            .elements()
            .clone();
        let ideal = i_x(&end, &x);
        // multiplications by 0, 2, 4
        assert_eq!(ideal.len(), 3);
        assert_eq!(sum_of_images(&end, ideal.elements()), x);

        let zero = ElemSet::singleton(6, 0);
        let i0 = i_x(&end, &zero);
        assert_eq!(i0.len(), 1);
        assert!(sum_of_images(&end, i0.elements()).is_zero_only());
    }

    #[test]
    fn z2_squared_is_self_generator() {
        let lat = z2_squared_lattice();
        let end = EndomorphismRing::compute(lat.module(), &limits()).unwrap();
        let w = is_self_generator(&lat, &end);
        assert!(w.is_self_generator);
    }

    #[test]
    fn s_view_multiplication_for_cyclic() {
        let lat = regular_lattice(12);
        let analysis = analyze_symmetry(&lat, &limits()).unwrap();
        assert!(s_view_is_multiplication(&analysis.s_lattice, &analysis.end));
    }
}
