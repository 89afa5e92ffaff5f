//! Acceptance suite: one test per criterion, each printing a
//! `criterion N: pass/fail` line (run with `-- --nocapture` to see them).
//!
//! The default-bound theorem suite is executed through the real binary
//! twice; the first run backs the green-suite and oracle criteria, and the
//! byte comparison of the two runs backs the determinism criterion.

use finmod::catalog::{
    bridge_check, essential_extension_check, independence_table, verify_prime_coindependence,
    SourceTag, SymbolicZModule, VerdictValue,
};
use finmod::endo::analyze_symmetry;
use finmod::hom::EndomorphismRing;
use finmod::ideal::{brauer_split, ideals, theorem0_check, BrauerSplit, Side};
use finmod::invariants::{classify, decompose};
use finmod::lattice::SubmoduleLattice;
use finmod::module::FiniteModule;
use finmod::ring::FiniteRing;
use finmod::Limits;
use std::process::Command;
use std::sync::OnceLock;

fn criterion(n: u32, what: &str, ok: bool, detail: String) {
    println!(
        "criterion {n} ({what}): {}",
        if ok { "pass" } else { "fail" }
    );
    assert!(ok, "criterion {n} ({what}) failed: {detail}");
}

struct SuiteRuns {
    report: serde_json::Value,
    bytes_first: Vec<u8>,
    bytes_second: Vec<u8>,
}

/// Two consecutive default-bound suite invocations of the real binary.
fn suite_runs() -> &'static SuiteRuns {
    static RUNS: OnceLock<SuiteRuns> = OnceLock::new();
    RUNS.get_or_init(|| {
        let dir = tempfile::tempdir().expect("tempdir");
        let out_a = dir.path().join("report_a.json");
        let out_b = dir.path().join("report_b.json");
        for out in [&out_a, &out_b] {
            let status = Command::new(env!("CARGO_BIN_EXE_finmod"))
                .args([
                    "suite",
                    "run",
                    "--jobs",
                    "8",
                    "--format",
                    "json",
                    "--out",
                    out.to_str().unwrap(),
                ])
                .stdout(std::process::Stdio::null())
                .status()
                .expect("suite run executes");
            assert!(
                status.success(),
                "suite run exited with {:?}",
                status.code()
            );
        }
        let bytes_first = std::fs::read(&out_a).expect("first report");
        let bytes_second = std::fs::read(&out_b).expect("second report");
        let report = serde_json::from_slice(&bytes_first).expect("report parses");
        SuiteRuns {
            report,
            bytes_first,
            bytes_second,
        }
    })
}

#[test]
fn criterion_1_theorem_suite_green() {
    let runs = suite_runs();
    let summary = &runs.report["summary"];
    let failed = summary["failed"].as_u64().unwrap();
    let instances = runs.report["fingerprint"]["instance_count"].as_u64().unwrap();
    // every named verifier must actually fire somewhere
    let theorems = runs.report["theorems"].as_array().unwrap();
    let never_fired: Vec<&str> = theorems
        .iter()
        .filter(|t| t["pass"].as_u64().unwrap() == 0)
        .map(|t| t["name"].as_str().unwrap())
        .collect();
    criterion(
        1,
        "theorem suite green over the default corpus",
        failed == 0 && instances >= 200 && never_fired.is_empty(),
        format!(
            "failed={failed}, instances={instances}, verifiers with zero passes: {never_fired:?}, failures: {}",
            runs.report["failures"]
        ),
    );
}

#[test]
fn criterion_2_oracle_equivalences_exact() {
    let runs = suite_runs();
    let theorems = runs.report["theorems"].as_array().unwrap();
    let oracle_names = [
        "oracle_small_iff_in_radical",
        "oracle_essential_iff_contains_socle",
        "oracle_goldie_equals_socle_length",
        "oracle_hollow_equals_top_factor_length",
        "oracle_radical_socle_dual_routes",
    ];
    let instances = runs.report["fingerprint"]["instance_count"].as_u64().unwrap();
    let mut ok = true;
    let mut detail = String::new();
    for name in oracle_names {
        let row = theorems
            .iter()
            .find(|t| t["name"] == name)
            .unwrap_or_else(|| panic!("{name} missing from report"));
        let pass = row["pass"].as_u64().unwrap();
        let fail = row["fail"].as_u64().unwrap();
        let skip = row["skip"].as_u64().unwrap();
        // exact, on every corpus module: no failures, no skips, full count
        if fail != 0 || skip != 0 || pass != instances {
            ok = false;
            detail = format!("{name}: pass={pass}, fail={fail}, skip={skip} of {instances}");
            break;
        }
    }
    criterion(2, "oracle equivalences exact on every corpus module", ok, detail);
}

#[test]
fn criterion_3_worked_examples_exact() {
    let limits = Limits::default();
    let mut ok = true;
    let mut detail = String::new();
    let mut check = |cond: bool, what: &str| {
        if ok && !cond {
            ok = false;
            detail = what.to_string();
        }
    };

    // Z12 regular: 6-node lattice, the pinned radical/socle/dims, and the
    // decomposition with small complement socle.
    {
        let r = FiniteRing::cyclic(12).unwrap();
        let m = FiniteModule::regular(&r, &limits).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits).unwrap();
        check(lat.len() == 6, "z12 lattice size");
        let rep = classify(&lat, &limits).unwrap();
        check(rep.radical == vec![0, 6], "z12 radical");
        check(rep.socle == vec![0, 2, 4, 6, 8, 10], "z12 socle");
        check(rep.goldie_dim == 2 && rep.hollow_dim == 2, "z12 dimensions");
        let dec = decompose(&lat, &limits).unwrap();
        check(
            dec.semisimple_part == vec![vec![0, 4, 8]]
                && dec.complement == vec![0, 3, 6, 9]
                && dec.socle_of_complement == vec![0, 6],
            "z12 decomposition",
        );
    }
    // Z9: us-ring with all three characterization clauses true; Z8 fails
    // all three.
    {
        let z9 = FiniteRing::cyclic(9).unwrap();
        let t9 = theorem0_check(&z9, Side::Right, &limits).unwrap();
        check(
            t9.us_ring && t9.radical_minimal_square_zero && t9.every_ideal_minimal_or_nonsmall,
            "z9 trichotomy all true",
        );
        let z8 = FiniteRing::cyclic(8).unwrap();
        let t8 = theorem0_check(&z8, Side::Right, &limits).unwrap();
        check(
            !t8.us_ring
                && !t8.radical_minimal_square_zero
                && !t8.every_ideal_minimal_or_nonsmall
                && t8.agree,
            "z8 trichotomy all false",
        );
    }
    // Z6: the minimal ideal {0,2,4} splits off the idempotent 4.
    {
        let z6 = FiniteRing::cyclic(6).unwrap();
        let all = ideals(&z6, Side::Right, &limits).unwrap();
        let a = all.iter().find(|i| i.ids() == vec![0, 2, 4]).unwrap();
        match brauer_split(&z6, a, &limits).unwrap() {
            Ok(BrauerSplit::Idempotent { e }) => check(e == 4, "z6 idempotent is 4"),
            other => check(false, &format!("z6 split: {other:?}")),
        }
    }
    // (Z2)^2 over Z2: self-generator, non-multiplication, noncommutative
    // endomorphism ring of order 16, strictly smaller S-lattice.
    {
        let r = FiniteRing::cyclic(2).unwrap();
        let action: Vec<u16> = (0..2u16)
            .flat_map(|rr| (0..4u16).map(move |m| if rr == 1 { m } else { 0 }))
            .collect();
        let m = FiniteModule::from_action(&r, &[2, 2], action, &limits).unwrap();
        let lat = SubmoduleLattice::compute(&m, &limits).unwrap();
        let end = EndomorphismRing::compute(&m, &limits).unwrap();
        check(end.order() == 16 && !end.is_commutative(), "v2 end ring");
        let analysis = analyze_symmetry(&lat, &limits).unwrap();
        check(
            analysis.report.self_generator
                && !analysis.report.multiplication
                && analysis.report.s_subset_of_r
                && !analysis.report.lattices_equal
                && analysis.report.r_lattice_nodes == 5
                && analysis.report.s_lattice_nodes == 2,
            "v2 symmetry profile",
        );
    }
    criterion(3, "worked examples reproduce exactly", ok, detail);
}

#[test]
fn criterion_4_symbolic_catalog() {
    let limits = Limits::default();
    let mut ok = true;
    let mut detail = String::new();
    let mut check = |cond: bool, what: String| {
        if ok && !cond {
            ok = false;
            detail = what;
        }
    };

    // the four cells of the independence table
    let table = independence_table();
    check(table.len() == 4, "table size".to_string());
    check(
        table[0].fs == VerdictValue::Yes && table[0].instance == "cyclic:6/regular",
        "finite cell".to_string(),
    );
    check(
        table[1].fs == VerdictValue::Yes && table[1].hollow == VerdictValue::Infinite,
        "integers cell".to_string(),
    );
    check(
        table[2].fs == VerdictValue::No && table[2].hollow == VerdictValue::Finite(1),
        "prufer cell".to_string(),
    );
    check(
        table[3].fs == VerdictValue::No && table[3].hollow == VerdictValue::Unknown,
        "rationals cell".to_string(),
    );
    // the disputed tag on the rationals' hollow verdict
    let q = SymbolicZModule::rationals();
    check(
        q.hollow_dim().source == SourceTag::Disputed,
        "rationals hollow tag".to_string(),
    );
    // coindependent prime-ideal witness family of size 6, verified exactly
    match verify_prime_coindependence(6) {
        Ok(primes) => check(primes == vec![2, 3, 5, 7, 11, 13], "witness primes".to_string()),
        Err(e) => check(false, format!("witness: {e}")),
    }
    // essential extension boundary
    let ext = essential_extension_check();
    check(ext.pass, format!("essential extension: {:?}", ext.lines));

    // the finite bridge over every rank-zero entry of order <= 256
    let mut chains: Vec<Vec<u64>> = Vec::new();
    fn extend(prefix: &mut Vec<u64>, product: u64, bound: u64, out: &mut Vec<Vec<u64>>) {
        if !prefix.is_empty() {
            out.push(prefix.clone());
        }
        let base = *prefix.last().unwrap_or(&1);
        let mut d = if prefix.is_empty() { 2 } else { base };
        while product * d <= bound {
            if d % base == 0 {
                prefix.push(d);
                extend(prefix, product * d, bound, out);
                prefix.pop();
            }
            d += if prefix.is_empty() { 1 } else { base };
        }
    }
    extend(&mut Vec::new(), 1, 256, &mut chains);
    let mut full_engine_entries = 0usize;
    let mut elementwise_only = 0usize;
    for divisors in &chains {
        let outcome = bridge_check(divisors, &limits).unwrap();
        if !outcome.agreed {
            check(false, format!("bridge {}: {}", outcome.name, outcome.detail));
            break;
        }
        if outcome.full_engine {
            full_engine_entries += 1;
        } else {
            elementwise_only += 1;
        }
    }
    check(full_engine_entries > 0, "no full-engine bridge entries".to_string());
    criterion(
        4,
        "symbolic catalog verdicts and finite bridge",
        ok,
        format!(
            "{detail}; {} entries ({} full engine, {} elementwise only)",
            chains.len(),
            full_engine_entries,
            elementwise_only
        ),
    );
}

#[test]
fn criterion_5_determinism_byte_identical() {
    let runs = suite_runs();
    criterion(
        5,
        "two suite runs with --jobs 8 are byte-identical",
        runs.bytes_first == runs.bytes_second && !runs.bytes_first.is_empty(),
        format!(
            "first {} bytes, second {} bytes",
            runs.bytes_first.len(),
            runs.bytes_second.len()
        ),
    );
}
