//! End-to-end values for the standard desk examples, pinned exactly.

use finmod::endo::{analyze_symmetry, conductor, is_multiplication};
use finmod::hom::EndomorphismRing;
use finmod::ideal::{
    brauer_split, ideals, is_local_ring, is_us_ring, theorem0_check, BrauerSplit, Side,
};
use finmod::invariants::{classify, decompose, node_by_ids};
use finmod::lattice::SubmoduleLattice;
use finmod::module::FiniteModule;
use finmod::ring::FiniteRing;
use finmod::Limits;
use std::sync::Arc;

fn limits() -> Limits {
    Limits::default()
}

fn regular_lattice(n: u32) -> SubmoduleLattice {
    let r = FiniteRing::cyclic(n).unwrap();
    let m = FiniteModule::regular(&r, &limits()).unwrap();
    SubmoduleLattice::compute(&m, &limits()).unwrap()
}

fn z2_squared() -> Arc<FiniteModule> {
    let r = FiniteRing::cyclic(2).unwrap();
    let action: Vec<u16> = (0..2u16)
        .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
        .collect();
    FiniteModule::from_action(&r, &[2, 2], action, &limits()).unwrap()
}

#[test]
fn z12_full_profile() {
    let lat = regular_lattice(12);
    assert_eq!(lat.len(), 6);
    let rep = classify(&lat, &limits()).unwrap();
    assert_eq!(rep.radical, vec![0, 6]);
    assert_eq!(rep.socle, vec![0, 2, 4, 6, 8, 10]);
    assert_eq!(rep.goldie_dim, 2);
    assert_eq!(rep.hollow_dim, 2);
    assert_eq!(rep.length, 3);
    assert_eq!(rep.krull_dim, 0);
    assert_eq!(rep.noeth_dim, 0);
    assert_eq!(rep.fs_small_count, 1);
    assert_eq!(rep.fsm_small_minimal_count, 1);
    assert!(rep.flags.us && !rep.flags.local);
    assert_eq!(
        rep.minimal_submodules,
        vec![vec![0, 6], vec![0, 4, 8]]
    );
    assert_eq!(
        rep.maximal_submodules,
        vec![vec![0, 3, 6, 9], vec![0, 2, 4, 6, 8, 10]]
    );

    let dec = decompose(&lat, &limits()).unwrap();
    assert_eq!(dec.semisimple_part, vec![vec![0, 4, 8]]);
    assert_eq!(dec.complement, vec![0, 3, 6, 9]);
    assert_eq!(dec.socle_of_complement, vec![0, 6]);
}

#[test]
fn z9_is_a_us_ring_with_all_three_clauses() {
    let z9 = FiniteRing::cyclic(9).unwrap();
    assert!(is_us_ring(&z9, Side::Right, &limits()).unwrap().is_us);
    assert!(is_local_ring(&z9, &limits()).unwrap());
    let rep = theorem0_check(&z9, Side::Right, &limits()).unwrap();
    assert!(rep.us_ring);
    assert!(rep.radical_minimal_square_zero);
    assert!(rep.every_ideal_minimal_or_nonsmall);
    assert!(rep.agree);
}

#[test]
fn z8_fails_all_three_clauses() {
    let z8 = FiniteRing::cyclic(8).unwrap();
    let rep = theorem0_check(&z8, Side::Right, &limits()).unwrap();
    assert!(!rep.us_ring);
    assert!(!rep.radical_minimal_square_zero);
    assert!(!rep.every_ideal_minimal_or_nonsmall);
    assert!(rep.agree);
}

#[test]
fn z6_brauer_idempotent_is_four() {
    let z6 = FiniteRing::cyclic(6).unwrap();
    let all = ideals(&z6, Side::Right, &limits()).unwrap();
    let a = all.iter().find(|i| i.ids() == vec![0, 2, 4]).unwrap();
    match brauer_split(&z6, a, &limits()).unwrap().unwrap() {
        BrauerSplit::Idempotent { e } => {
            assert_eq!(e, 4);
            assert_eq!(z6.mul(4, 4), 4);
        }
        other => panic!("expected an idempotent split, got {other:?}"),
    }
}

#[test]
fn z2_squared_profile() {
    let m = z2_squared();
    let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
    assert_eq!(lat.len(), 5);
    let mult = is_multiplication(&lat).unwrap();
    assert!(!mult.is_multiplication);

    let end = EndomorphismRing::compute(&m, &limits()).unwrap();
    assert_eq!(end.order(), 16);
    assert!(!end.is_commutative());

    let analysis = analyze_symmetry(&lat, &limits()).unwrap();
    assert!(analysis.report.self_generator);
    assert!(analysis.report.s_subset_of_r);
    assert!(!analysis.report.lattices_equal);
    assert_eq!(analysis.report.s_lattice_nodes, 2);
}

#[test]
fn conductor_on_z12() {
    let lat = regular_lattice(12);
    let n = lat.node(node_by_ids(&lat, &[0, 2, 4, 6, 8, 10]).unwrap());
    let cond = conductor(lat.module(), n).unwrap();
    assert_eq!(cond.ids(), vec![0, 2, 4, 6, 8, 10]);
}

#[test]
fn quotient_of_z12_has_order_six() {
    let r = FiniteRing::cyclic(12).unwrap();
    let m = FiniteModule::regular(&r, &limits()).unwrap();
    let n = m.cyclic_submodule(6);
    let q = m.quotient(&n, &limits()).unwrap();
    assert_eq!(q.order(), 6);
    let qlat = SubmoduleLattice::compute(&q, &limits()).unwrap();
    assert_eq!(qlat.len(), 4);
}

#[test]
fn mixed_divisor_module_over_z6() {
    // Z6 acting componentwise on Z2 x Z3 by reduction; the lattice matches
    // the regular module of Z6.
    let r = FiniteRing::cyclic(6).unwrap();
    let action: Vec<u16> = (0..6u16)
        .flat_map(|rr| {
            (0..6u16).map(move |m| {
                let a = (m / 3) as u32; // Z2 coordinate
                let b = (m % 3) as u32; // Z3 coordinate
                let na = (a * rr as u32) % 2;
                let nb = (b * rr as u32) % 3;
                (na * 3 + nb) as u16
            })
        })
        .collect();
    let m = FiniteModule::from_action(&r, &[2, 3], action, &limits()).unwrap();
    let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
    let reg = regular_lattice(6);
    assert_eq!(lat.len(), reg.len());
    assert!(is_multiplication(&lat).unwrap().is_multiplication);
    let analysis = analyze_symmetry(&lat, &limits()).unwrap();
    assert!(analysis.report.end_ring_commutative);
    assert!(analysis.report.lattices_equal);
}

#[test]
fn zero_ring_end_to_end() {
    let zero = FiniteRing::cyclic(1).unwrap();
    let m = FiniteModule::regular(&zero, &limits()).unwrap();
    let lat = SubmoduleLattice::compute(&m, &limits()).unwrap();
    let rep = classify(&lat, &limits()).unwrap();
    assert_eq!(rep.length, 0);
    assert_eq!(rep.krull_dim, -1);
    assert_eq!(rep.noeth_dim, -1);
    assert_eq!(rep.goldie_dim, 0);
    assert_eq!(rep.hollow_dim, 0);
    assert!(rep.flags.semisimple);
    let dec = decompose(&lat, &limits()).unwrap();
    assert!(dec.semisimple_part.is_empty());
    assert_eq!(dec.complement, vec![0]);
}
