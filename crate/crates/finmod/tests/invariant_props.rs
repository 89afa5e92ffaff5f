//! Property-based checks of the invariant characterizations over randomly
//! drawn small instances.

use finmod::checks::{module_checks, ring_checks, CheckStatus};
use finmod::ideal::{ideals, Side};
use finmod::invariants::{
    goldie_dimension_in, hollow_dimension_in, length_in, radical, small_nodes_in, socle,
};
use finmod::lattice::SubmoduleLattice;
use finmod::module::FiniteModule;
use finmod::ring::FiniteRing;
use finmod::Limits;
use proptest::prelude::*;
use std::sync::Arc;

fn limits() -> Limits {
    Limits::default()
}

#[derive(Debug, Clone)]
enum RingSpec {
    Cyclic(u32),
    Product(Vec<u32>),
    Poly(u32, usize),
}

impl RingSpec {
    fn build(&self) -> Arc<FiniteRing> {
        match self {
            RingSpec::Cyclic(n) => FiniteRing::cyclic(*n).unwrap(),
            RingSpec::Product(ns) => {
                let factors: Vec<_> = ns.iter().map(|&n| FiniteRing::cyclic(n).unwrap()).collect();
                FiniteRing::product(&factors).unwrap()
            }
            RingSpec::Poly(p, k) => {
                let mut f = vec![0u32; *k + 1];
                f[*k] = 1;
                FiniteRing::poly_quotient(*p, &f).unwrap()
            }
        }
    }
}

fn arb_ring() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        (1u32..=24).prop_map(RingSpec::Cyclic),
        (2u32..=5, 2u32..=5).prop_map(|(a, b)| RingSpec::Product(vec![a, b])),
        (2u32..=3, 2u32..=3, 2u32..=3).prop_map(|(a, b, c)| RingSpec::Product(vec![a, b, c])),
        (prop_oneof![Just(2u32), Just(3u32)], 2usize..=3).prop_map(|(p, k)| RingSpec::Poly(p, k)),
    ]
}

#[derive(Debug, Clone)]
enum ModuleSpec {
    Regular,
    QuotientByIdeal(usize),
    SumOfQuotients(usize, usize),
}

fn arb_module() -> impl Strategy<Value = ModuleSpec> {
    prop_oneof![
        Just(ModuleSpec::Regular),
        (0usize..8).prop_map(ModuleSpec::QuotientByIdeal),
        (0usize..6, 0usize..6).prop_map(|(a, b)| ModuleSpec::SumOfQuotients(a, b)),
    ]
}

/// Build the drawn module; `None` when the combination exceeds the module
/// ceiling (large sums over large rings), which the properties skip.
fn build_module(ring: &Arc<FiniteRing>, spec: &ModuleSpec) -> Option<Arc<FiniteModule>> {
    let regular = FiniteModule::regular(ring, &limits()).unwrap();
    let quotient_by_index = |idx: usize| -> Arc<FiniteModule> {
        let all = ideals(ring, Side::Right, &limits()).unwrap();
        let ideal = &all[idx % all.len()];
        let sub = regular.submodule_generated(&ideal.ids());
        regular.quotient(&sub, &limits()).unwrap()
    };
    match spec {
        ModuleSpec::Regular => Some(regular),
        ModuleSpec::QuotientByIdeal(i) => Some(quotient_by_index(*i)),
        ModuleSpec::SumOfQuotients(i, j) => {
            let a = quotient_by_index(*i);
            let b = quotient_by_index(*j);
            a.direct_sum(&b, &limits()).ok()
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 48,
        failure_persistence: None,
        .. ProptestConfig::default()
    })]

    #[test]
    fn small_iff_inside_radical(spec in arb_ring(), mspec in arb_module()) {
        let ring = spec.build();
        let module = build_module(&ring, &mspec);
        prop_assume!(module.is_some());
        let module = module.unwrap();
        let lat = SubmoduleLattice::compute(&module, &limits()).unwrap();
        let rad = radical(&lat).unwrap();
        let smalls = small_nodes_in(&lat, lat.bottom(), lat.top());
        for n in 0..lat.len() as u32 {
            prop_assert_eq!(smalls.contains(&n), lat.leq(n, rad));
        }
    }

    #[test]
    fn dimension_cross_checks(spec in arb_ring(), mspec in arb_module()) {
        let ring = spec.build();
        let module = build_module(&ring, &mspec);
        prop_assume!(module.is_some());
        let module = module.unwrap();
        let lat = SubmoduleLattice::compute(&module, &limits()).unwrap();
        let rad = radical(&lat).unwrap();
        let soc = socle(&lat).unwrap();
        let g = goldie_dimension_in(&lat, lat.bottom(), lat.top(), &limits());
        let h = hollow_dimension_in(&lat, lat.bottom(), lat.top(), &limits());
        prop_assert_eq!(g, length_in(&lat, lat.bottom(), soc));
        prop_assert_eq!(h, length_in(&lat, rad, lat.top()));
    }

    #[test]
    fn module_battery_never_fails(spec in arb_ring(), mspec in arb_module()) {
        let ring = spec.build();
        let module = build_module(&ring, &mspec);
        prop_assume!(module.is_some());
        let module = module.unwrap();
        let lat = SubmoduleLattice::compute(&module, &limits()).unwrap();
        let reports = module_checks(&lat, &limits()).unwrap();
        for rep in &reports {
            prop_assert_ne!(rep.status, CheckStatus::Fail, "{} failed: {}", rep.name, rep.detail);
        }
    }

    #[test]
    fn ring_battery_never_fails(spec in arb_ring()) {
        let ring = spec.build();
        let reports = ring_checks(&ring, &limits()).unwrap();
        for rep in &reports {
            prop_assert_ne!(rep.status, CheckStatus::Fail, "{} failed: {}", rep.name, rep.detail);
        }
    }
}
