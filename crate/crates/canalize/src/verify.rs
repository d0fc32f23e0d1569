//! The verification suite: every reproduction target in one place, runnable
//! through the CLI (`canalize verify`) and mirrored one-to-one by the
//! acceptance test target.
//!
//! Each check compares a computed value against an expectation pinned here
//! and renders a single pass/fail line. Sampled checks draw from a seeded
//! generator, so a given `(jobs, seed)` pair always produces the same
//! output.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bf::{self, TruthTable};
use crate::canalizing::{self, canalizing_triples, is_canalizing};
use crate::error::Error;
use crate::kmap::detect_canalizing;
use crate::ncf::{self, hd_histogram, hd_matrix};
use crate::pncf::{self, RemainderClass};

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x5EED_CAFE;

/// Worker count used when the caller does not supply one.
pub const DEFAULT_JOBS: usize = 4;

/// How many random functions the sampled checks draw per arity.
pub const SAMPLES_PER_ARITY: usize = 100_000;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyConfig {
    pub jobs: usize,
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            jobs: DEFAULT_JOBS,
            seed: DEFAULT_SEED,
        }
    }
}

/// Outcome of one check.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl CheckResult {
    pub fn line(&self) -> String {
        format!(
            "{}  {:<24} expected: {}  actual: {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.expected,
            self.actual
        )
    }
}

/// Run every check. The order is fixed.
pub fn run_all(cfg: VerifyConfig) -> Vec<CheckResult> {
    vec![
        census_two_variables(cfg),
        detector_equivalence(cfg),
        lemma_suites(cfg),
        single_minority_counts(cfg),
        family_generation(cfg),
        ncf_counts(cfg),
        matrix_recursion(cfg),
        histogram_vs_matrix(cfg),
        depth_census(cfg),
        determinism(cfg),
    ]
}

fn random_table(rng: &mut ChaCha8Rng, arity: u32) -> TruthTable {
    let code: u64 = rng.gen();
    let code = if arity <= 5 {
        code & ((1u64 << (1u64 << arity)) - 1)
    } else {
        code
    };
    TruthTable::from_int_u64(arity, code).expect("code in range")
}

/// Criterion 1: the two-variable canalizing family is the explicit
/// fourteen-function list; the two parity functions are excluded.
pub fn census_two_variables(cfg: VerifyConfig) -> CheckResult {
    let reference: BTreeSet<TruthTable> = [
        "1100", "1101", "1110", "1111", "0000", "0001", "0010", "0011", "0111", "1011", "0100",
        "0101", "1000", "1010",
    ]
    .iter()
    .map(|s| TruthTable::from_binary(2, s).expect("four bits"))
    .collect();
    let set = canalizing::canalizing_set(2, cfg.jobs).expect("arity 2");
    let xor = TruthTable::from_binary(2, "0110").expect("four bits");
    let excluded = !set.contains(&xor) && !set.contains(&xor.complement());
    let pass = set.len() == 14 && set == reference && excluded;
    CheckResult {
        name: "census-n2",
        pass,
        expected: "count 14, reference family, 0110/1001 excluded".into(),
        actual: format!(
            "count {}, family match {}, excluded {}",
            set.len(),
            set == reference,
            excluded
        ),
    }
}

/// Criterion 2: structural and definitional detectors agree everywhere —
/// exhaustively through arity 4, on 10^5 seeded samples at arities 5 and 6,
/// and on the two five-variable worked examples.
pub fn detector_equivalence(cfg: VerifyConfig) -> CheckResult {
    let mut disagreements = 0u64;
    let mut witness_mismatches = 0u64;
    let mut compare = |f: &TruthTable| {
        let structural = detect_canalizing(f);
        let definitional = canalizing_triples(f).into_iter().next();
        if structural.is_some() != definitional.is_some() {
            disagreements += 1;
        } else if structural != definitional {
            witness_mismatches += 1;
        }
    };
    for arity in 2..=4u32 {
        for f in bf::enumerate_all(arity).expect("small arity") {
            compare(&f);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x02);
    for arity in [5u32, 6] {
        for _ in 0..SAMPLES_PER_ARITY {
            let f = random_table(&mut rng, arity);
            compare(&f);
        }
    }

    let example2 =
        TruthTable::from_binary(5, "11010000111100001111000011110000").expect("32 bits");
    let example3 =
        TruthTable::from_binary(5, "00001110000111111110000111110000").expect("32 bits");
    let w2 = detect_canalizing(&example2);
    let example2_ok = is_canalizing(&example2)
        && w2.map(|t| (t.variable, t.input, t.output)) == Some((3, true, false));
    let example3_ok = detect_canalizing(&example3).is_none() && !is_canalizing(&example3);

    let pass = disagreements == 0 && witness_mismatches == 0 && example2_ok && example3_ok;
    CheckResult {
        name: "kmap-equivalence",
        pass,
        expected: "0 disagreements (exhaustive n<=4, 1e5 samples at n=5,6); example 2 via x3; example 3 none".into(),
        actual: format!(
            "disagreements {disagreements}, witness mismatches {witness_mismatches}, example2 {example2_ok}, example3 {example3_ok}"
        ),
    }
}

/// Criterion 3: the concatenation property suites — complement closure,
/// self-concatenation, complement pairing, the non-canalizing side rules,
/// constant absorption, and non-canalizing closure — exhaustively through
/// arity 3 and on 10^5 seeded four-variable samples.
pub fn lemma_suites(cfg: VerifyConfig) -> CheckResult {
    let mut violations = 0u64;

    let mut check_unary = |f: &TruthTable| {
        let fc = f.complement();
        // complement preserves the class
        if is_canalizing(f) != is_canalizing(&fc) {
            violations += 1;
        }
        // ff stays canalizing
        if is_canalizing(f) && !is_canalizing(&f.concat(f).expect("same arity")) {
            violations += 1;
        }
        // f next to its complement is canalizing only for constants
        let mixed = f.concat(&fc).expect("same arity");
        if is_canalizing(&mixed) != f.is_constant().is_some() {
            violations += 1;
        }
    };
    for arity in 1..=3u32 {
        for f in bf::enumerate_all(arity).expect("small arity") {
            check_unary(&f);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x03);
    for _ in 0..SAMPLES_PER_ARITY {
        let f = random_table(&mut rng, 4);
        check_unary(&f);
    }

    let mut check_pair = |f: &TruthTable, g: &TruthTable| {
        let fg = f.concat(g).expect("same arity");
        let f_can = is_canalizing(f);
        let g_can = is_canalizing(g);
        if !f_can {
            // a non-canalizing left side canalizes exactly when g is constant
            if is_canalizing(&fg) != g.is_constant().is_some() {
                violations += 1;
            }
        }
        if f.is_constant().is_some() && !is_canalizing(&fg) {
            // a constant side absorbs every g
            violations += 1;
        }
        if !f_can && !g_can && is_canalizing(&fg) {
            // two non-canalizing halves never canalize
            violations += 1;
        }
    };
    for arity in 1..=3u32 {
        for f in bf::enumerate_all(arity).expect("small arity") {
            for g in bf::enumerate_all(arity).expect("small arity") {
                check_pair(&f, &g);
            }
        }
    }
    for _ in 0..SAMPLES_PER_ARITY {
        let f = random_table(&mut rng, 4);
        let g = random_table(&mut rng, 4);
        check_pair(&f, &g);
    }

    CheckResult {
        name: "concat-lemmas",
        pass: violations == 0,
        expected: "0 counterexamples (exhaustive n<=3, 1e5 samples at n=4)".into(),
        actual: format!("violations {violations}"),
    }
}

/// Criterion 4: the single-minority-bit counting formula equals the
/// brute-force oracle for every weight-1 and co-weight-1 function at
/// arities 2 and 3.
pub fn single_minority_counts(_cfg: VerifyConfig) -> CheckResult {
    let mut results = Vec::new();
    for arity in [2u32, 3] {
        let formula = canalizing::lemma6_formula(arity).expect("small arity");
        let mut all_match = true;
        for k in 0..1usize << arity {
            for flip in [false, true] {
                let f = TruthTable::from_fn(arity, |i| (i == k) != flip).expect("small arity");
                let oracle = canalizing::lemma6_oracle(&f).expect("single minority bit");
                if oracle != formula {
                    all_match = false;
                }
            }
        }
        results.push((arity, formula, all_match));
    }
    let pass = results == vec![(2, 12, true), (3, 76, true)];
    CheckResult {
        name: "single-minority",
        pass,
        expected: "formula(2) = 12 and formula(3) = 76, each matching the oracle on every single-minority-bit function".into(),
        actual: results
            .iter()
            .map(|(n, v, ok)| format!("n={n}: formula {v}, oracle match {ok}"))
            .collect::<Vec<_>>()
            .join("; "),
    }
}

/// Criterion 5: concatenation generation reproduces the exhaustive families
/// one arity up within the stated check budgets, and the step to arity 5 is
/// independent of the worker count.
pub fn family_generation(cfg: VerifyConfig) -> CheckResult {
    let c2 = canalizing::canalizing_set(2, cfg.jobs).expect("arity 2");
    let (g3, s3) = canalizing::generate_next(&c2, cfg.jobs).expect("complete family");
    let sweep3 = canalizing::canalizing_set(3, cfg.jobs).expect("arity 3");
    let step3_ok = g3.len() == 120 && g3 == sweep3 && s3.checks_performed <= 132;

    let (g4, s4) = canalizing::generate_next(&g3, cfg.jobs).expect("complete family");
    let sweep4 = canalizing::canalizing_set(4, cfg.jobs).expect("arity 4");
    let bound4 = 118u64 * 118 - 118;
    let step4_ok = g4.len() == 3514 && g4 == sweep4 && s4.checks_performed <= bound4;

    let alt_jobs = if cfg.jobs == 1 { 4 } else { cfg.jobs };
    let (g5a, s5a) = canalizing::generate_next(&g4, 1).expect("complete family");
    let (g5b, s5b) = canalizing::generate_next(&g4, alt_jobs).expect("complete family");
    let step5_ok = g5a == g5b && s5a == s5b;

    let pass = step3_ok && step4_ok && step5_ok;
    CheckResult {
        name: "generation",
        pass,
        expected: format!(
            "|C3| 120 (<=132 checks), |C4| 3514 (<={bound4} checks), C5 partition-independent"
        ),
        actual: format!(
            "|C3| {} ({} checks), |C4| {} ({} checks), |C5| {} (jobs 1 vs {} identical: {})",
            g3.len(),
            s3.checks_performed,
            g4.len(),
            s4.checks_performed,
            g5a.len(),
            alt_jobs,
            step5_ok
        ),
    }
}

/// Criterion 6: merger enumeration counts and equality with the chain
/// detector, exhaustively through arity 4.
pub fn ncf_counts(_cfg: VerifyConfig) -> CheckResult {
    let n3 = ncf::enumerate_ncf(3).expect("arity 3").len();
    let n4_set = ncf::enumerate_ncf(4).expect("arity 4");
    let mut sets_match = true;
    for arity in 1..=4u32 {
        let enumerated = ncf::enumerate_ncf(arity).expect("small arity");
        let accepted: BTreeSet<TruthTable> = bf::enumerate_all(arity)
            .expect("small arity")
            .filter(ncf::is_ncf)
            .collect();
        if enumerated != accepted {
            sets_match = false;
        }
    }
    let pass = n3 == 64 && n4_set.len() == 736 && sets_match;
    CheckResult {
        name: "ncf-counts",
        pass,
        expected: "64 at n=3, 736 at n=4, merger set = chain-accepted set for n<=4".into(),
        actual: format!(
            "n=3 {}, n=4 {}, sets match {}",
            n3,
            n4_set.len(),
            sets_match
        ),
    }
}

/// Criterion 7: the count matrix reproduces the worked instances and its
/// arity-5 total equals the independent merger enumeration.
pub fn matrix_recursion(_cfg: VerifyConfig) -> CheckResult {
    let m2 = hd_matrix(2).expect("arity 2");
    let m3 = hd_matrix(3).expect("arity 3");
    let m4 = hd_matrix(4).expect("arity 4");
    let m5 = hd_matrix(5).expect("arity 5");
    let m2_ok = m2.entries() == [vec![2], vec![0]];
    let m3_ok = m3.entries() == [vec![4, 4], vec![0, 4], vec![0, 4]];
    let m4_ok = m4.entries()
        == [
            vec![8, 24, 24, 8],
            vec![0, 16, 24, 8],
            vec![0, 8, 24, 8],
            vec![0, 0, 24, 8],
        ];
    let counts_ok = m3.ncf_count() == 64 && m4.ncf_count() == 736 && m5.ncf_count() == 10_624;
    let cross = ncf::enumerate_ncf(5).expect("arity 5").len() as u64;
    let pass = m2_ok && m3_ok && m4_ok && counts_ok && cross == m5.ncf_count();
    CheckResult {
        name: "hd-matrix",
        pass,
        expected: "worked matrices at n=2,3,4; counts 64, 736, 10624; n=5 count equals merger enumeration".into(),
        actual: format!(
            "m2 {m2_ok}, m3 {m3_ok}, m4 {m4_ok}, counts {counts_ok}, enumerated n=5 {cross}"
        ),
    }
}

/// Criterion 8: observed histogram buckets equal four times the matrix for
/// arities 2 through 4; a failure carries the alternative-tie-break
/// diagnostic.
pub fn histogram_vs_matrix(_cfg: VerifyConfig) -> CheckResult {
    let mut lines = Vec::new();
    let mut pass = true;
    for arity in 2..=4u32 {
        match hd_histogram(arity) {
            Ok(_) => lines.push(format!("n={arity} match")),
            Err(Error::HistogramDisagreement(diag)) => {
                pass = false;
                lines.push(format!(
                    "n={arity} MISMATCH expected {:?} actual {:?} alternative-tie-break {:?}",
                    diag.expected, diag.actual, diag.alternative
                ));
            }
            Err(e) => {
                pass = false;
                lines.push(format!("n={arity} error {e}"));
            }
        }
    }
    CheckResult {
        name: "hd-histogram",
        pass,
        expected: "buckets equal 4x matrix for n=2,3,4 under the minimum-start-variable tie-break".into(),
        actual: lines.join("; "),
    }
}

/// Criterion 9: the four-variable depth census and the constructive
/// families.
pub fn depth_census(cfg: VerifyConfig) -> CheckResult {
    let census = pncf::depth_census(4, cfg.jobs).expect("arity 4");
    let d1 = census.depth_total(1);
    let d1_const = census.count(1, RemainderClass::Constant);
    let d1_nc = census.count(1, RemainderClass::NonCanalizing);
    let d2 = census.depth_total(2);
    let d3 = census.depth_total(3);
    let d3_all_constant = d3 == census.count(3, RemainderClass::Constant);
    let d4 = census.depth_total(4);
    let total = census.total();
    let sweep_total = canalizing::census_canalizing(4, cfg.jobs).expect("arity 4");

    let families = pncf::depth_families(4).expect("arity 4");
    let buckets = pncf::depth_census_sets(4, cfg.jobs).expect("arity 4");
    let families_match = families == buckets;

    let pass = d1 == 2186
        && d1_const == 10
        && d1_nc == 2176
        && d2 == 336
        && d3 == 256
        && d3_all_constant
        && d4 == 736
        && total == 3514
        && total == sweep_total
        && families_match;
    CheckResult {
        name: "depth-census",
        pass,
        expected: "depths 2186 (10+2176), 336, 256 (all constant), 736; total 3514; families = census buckets".into(),
        actual: format!(
            "depths {d1} ({d1_const}+{d1_nc}), {d2}, {d3} (constant-only {d3_all_constant}), {d4}; total {total} (sweep {sweep_total}); families match {families_match}"
        ),
    }
}

/// Criterion 10: sweeps are deterministic across worker counts and repeated
/// runs, down to the serialized output.
pub fn determinism(cfg: VerifyConfig) -> CheckResult {
    let alt_jobs = if cfg.jobs == 1 { 4 } else { cfg.jobs };

    let census_a = canalizing::census_canalizing(4, 1).expect("arity 4");
    let census_b = canalizing::census_canalizing(4, alt_jobs).expect("arity 4");
    let census_c = canalizing::census_canalizing(4, alt_jobs).expect("arity 4");
    let census_ok = census_a == census_b && census_b == census_c;

    let set_a = canalizing::canalizing_set(3, 1).expect("arity 3");
    let set_b = canalizing::canalizing_set(3, alt_jobs).expect("arity 3");
    let set_ok = set_a == set_b;

    let depth_a = pncf::depth_census(4, 1).expect("arity 4");
    let depth_b = pncf::depth_census(4, alt_jobs).expect("arity 4");
    let depth_json_a = serde_json::to_string(&depth_a).expect("serializable");
    let depth_json_b = serde_json::to_string(&depth_b).expect("serializable");
    let depth_ok = depth_a == depth_b && depth_json_a == depth_json_b;

    let (gen_a, stats_a) = canalizing::generate_next(&set_a, 1).expect("complete family");
    let (gen_b, stats_b) = canalizing::generate_next(&set_b, alt_jobs).expect("complete family");
    let gen_ok = gen_a == gen_b && stats_a == stats_b;

    let pass = census_ok && set_ok && depth_ok && gen_ok;
    CheckResult {
        name: "determinism",
        pass,
        expected: "identical results and serialized output across jobs {1, n} and repeated runs".into(),
        actual: format!(
            "census {census_ok}, family set {set_ok}, depth census {depth_ok}, generation {gen_ok}"
        ),
    }
}
