//! Definitional canalization tests, exhaustive censuses, the single-minority-
//! bit counting formula with its brute-force oracle, and generation of the
//! arity `n+1` canalizing family from the arity `n` family by concatenation.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bf::{self, TruthTable};
use crate::error::{Error, Result};
use crate::par;

/// Largest arity swept exhaustively (65 536 functions at arity 4).
pub const CENSUS_MAX_ARITY: u32 = 4;

/// One canalization witness: fixing `variable` to `input` forces the output
/// to `output`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanalizingTriple {
    pub variable: u32,
    pub input: bool,
    pub output: bool,
}

/// All witnesses of `f`, ordered by `(variable, input)`. Constants are
/// canalizing with respect to every variable and input.
pub fn canalizing_triples(f: &TruthTable) -> Vec<CanalizingTriple> {
    let mut triples = Vec::new();
    for variable in 1..=f.arity() {
        for input in [false, true] {
            if let Some(output) = f
                .restriction_is_constant(variable, input)
                .expect("variable in range")
            {
                triples.push(CanalizingTriple {
                    variable,
                    input,
                    output,
                });
            }
        }
    }
    triples
}

/// Whether at least one variable/input pair forces the output.
pub fn is_canalizing(f: &TruthTable) -> bool {
    for variable in 1..=f.arity() {
        for input in [false, true] {
            if f.restriction_is_constant(variable, input)
                .expect("variable in range")
                .is_some()
            {
                return true;
            }
        }
    }
    false
}

fn check_census_arity(arity: u32) -> Result<u64> {
    if arity == 0 {
        return Err(Error::ArityTooSmall { arity, min: 1 });
    }
    if arity > CENSUS_MAX_ARITY {
        return Err(Error::CensusTooLarge {
            arity,
            max: CENSUS_MAX_ARITY,
        });
    }
    Ok(bf::function_count(arity).expect("small arity"))
}

/// Count the canalizing functions of the given arity by exhaustive sweep.
pub fn census_canalizing(arity: u32, jobs: usize) -> Result<u64> {
    let total = check_census_arity(arity)?;
    let counts = par::run_partitioned(total, jobs, |lo, hi| {
        bf::functions_in_range(arity, lo, hi)
            .expect("arity checked")
            .filter(is_canalizing)
            .count() as u64
    });
    Ok(counts.iter().sum())
}

/// The full canalizing family of the given arity, by exhaustive sweep.
pub fn canalizing_set(arity: u32, jobs: usize) -> Result<BTreeSet<TruthTable>> {
    let total = check_census_arity(arity)?;
    let chunks = par::run_partitioned(total, jobs, |lo, hi| {
        bf::functions_in_range(arity, lo, hi)
            .expect("arity checked")
            .filter(is_canalizing)
            .collect::<Vec<_>>()
    });
    Ok(chunks.into_iter().flatten().collect())
}

/// The complement family: every non-canalizing function of the given arity.
pub fn non_canalizing_set(arity: u32, jobs: usize) -> Result<BTreeSet<TruthTable>> {
    let total = check_census_arity(arity)?;
    let chunks = par::run_partitioned(total, jobs, |lo, hi| {
        bf::functions_in_range(arity, lo, hi)
            .expect("arity checked")
            .filter(|f| !is_canalizing(f))
            .collect::<Vec<_>>()
    });
    Ok(chunks.into_iter().flatten().collect())
}

fn binomial(n: u32, k: u32) -> u64 {
    let mut acc = 1u64;
    for i in 1..=k as u64 {
        acc = acc * (n as u64 - k as u64 + i) / i;
    }
    acc
}

/// Closed-form count of `(side, g)` concatenations of a single-minority-bit
/// function that canalize in one of the original variables:
/// `2 * sum_{x=1..n} C(n,x) * 2^(2^n / 2^x) * (-1)^(x-1)`.
pub fn lemma6_formula(arity: u32) -> Result<u64> {
    if arity == 0 {
        return Err(Error::ArityTooSmall { arity, min: 1 });
    }
    if arity > 6 {
        return Err(Error::ArityTooLarge { arity, max: 6 });
    }
    let mut acc: i128 = 0;
    for x in 1..=arity {
        let exponent = (1u64 << arity) >> x;
        let term = binomial(arity, x) as i128 * (1i128 << exponent);
        if x % 2 == 1 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(u64::try_from(2 * acc).expect("alternating sum is positive"))
}

/// Brute-force oracle for [`lemma6_formula`]: for a function `f` at Hamming
/// distance 1 from a constant, count the pairs `(side, g)` over all
/// same-arity `g` such that putting `g` on that side of `f` yields a
/// function canalizing in one of the n original variables. Canalization
/// through the new first variable is excluded; that scoping is what the
/// inclusion-exclusion in the formula counts.
pub fn lemma6_oracle(f: &TruthTable) -> Result<u64> {
    if f.min_const_hd() != 1 {
        return Err(Error::NotSingleMinorityBit);
    }
    let n = f.arity();
    let mut count = 0u64;
    for g in bf::enumerate_all(n)? {
        for h in [g.concat(f)?, f.concat(&g)?] {
            let canalizes_original = (2..=n + 1).any(|i| {
                [false, true].into_iter().any(|a| {
                    h.restriction_is_constant(i, a)
                        .expect("variable in range")
                        .is_some()
                })
            });
            if canalizes_original {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Accounting for one [`generate_next`] run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenerationStats {
    /// `X`: size of the source family.
    pub source_count: u64,
    /// Concatenations tested with the canalization detector.
    pub checks_performed: u64,
    /// Concatenations emitted without testing (closure rules), counted per
    /// emission before deduplication.
    pub emitted_free: u64,
    /// Size of the generated family.
    pub result_count: u64,
}

impl GenerationStats {
    /// Upper bound `(X-2)^2 - (X-2)` on the pair checks.
    pub fn check_bound(&self) -> u64 {
        let x = self.source_count.saturating_sub(2);
        x * x - x
    }
}

/// Generate the complete canalizing family one arity up from the complete
/// family `source` of arity `n`.
///
/// Emitted without testing: every concatenation with a constant on either
/// side, and `ff` for every member. Skipped entirely: `f` next to its own
/// complement. Every other ordered pair of distinct non-constant members is
/// concatenated and tested; pairs of non-canalizing functions never yield a
/// canalizing result and are not part of the source to begin with.
pub fn generate_next(
    source: &BTreeSet<TruthTable>,
    jobs: usize,
) -> Result<(BTreeSet<TruthTable>, GenerationStats)> {
    let first = source
        .iter()
        .next()
        .ok_or(Error::InvalidSourceSet { reason: "empty" })?;
    let n = first.arity();
    if source.iter().any(|f| f.arity() != n) {
        return Err(Error::InvalidSourceSet {
            reason: "mixed arities",
        });
    }
    if n > CENSUS_MAX_ARITY {
        return Err(Error::GenerationTooLarge {
            arity: n,
            max: CENSUS_MAX_ARITY,
        });
    }
    let zero = TruthTable::constant(n, false)?;
    let one = TruthTable::constant(n, true)?;
    if !source.contains(&zero) || !source.contains(&one) {
        return Err(Error::InvalidSourceSet {
            reason: "constant functions missing",
        });
    }

    let mut result: BTreeSet<TruthTable> = BTreeSet::new();
    let mut emitted_free = 0u64;
    for g in bf::enumerate_all(n)? {
        for c in [&zero, &one] {
            result.insert(c.concat(&g)?);
            result.insert(g.concat(c)?);
            emitted_free += 2;
        }
    }
    for f in source {
        result.insert(f.concat(f)?);
        emitted_free += 1;
    }

    let members: Vec<&TruthTable> = source.iter().filter(|f| f.is_constant().is_none()).collect();
    let chunks = par::run_partitioned(members.len() as u64, jobs, |lo, hi| {
        let mut hits = Vec::new();
        let mut checks = 0u64;
        for fi in lo..hi {
            let f = members[fi as usize];
            let f_complement = f.complement();
            for &g in &members {
                if g == f || *g == f_complement {
                    continue;
                }
                let h = f.concat(g).expect("equal arities");
                checks += 1;
                if is_canalizing(&h) {
                    hits.push(h);
                }
            }
        }
        (hits, checks)
    });

    let mut checks_performed = 0u64;
    for (hits, checks) in chunks {
        checks_performed += checks;
        result.extend(hits);
    }
    let stats = GenerationStats {
        source_count: source.len() as u64,
        checks_performed,
        emitted_free,
        result_count: result.len() as u64,
    };
    debug_assert!(stats.checks_performed <= stats.check_bound());
    Ok((result, stats))
}
