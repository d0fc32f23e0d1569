//! Canalizing-depth classification: partially nested canalizing structure
//! and the exhaustive four-variable census by depth and remainder class.
//!
//! A chain step fixes one variable to its canalizing input, which forces
//! the output; the search continues on the complementary restriction. Steps
//! apply only to non-constant functions, so a chain ends as soon as the
//! remainder is constant or non-canalizing; the reported depth is the
//! maximum over all chains. With that convention constants sit at depth 1
//! (remainder constant), a complete chain through all variables is the
//! nested case, and every canalizing function lands in exactly one bucket.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use crate::bf::{self, TruthTable};
use crate::canalizing;
use crate::error::{Error, Result};
use crate::ncf::{self, ChainEntry, NestedChain};
use crate::par;

/// What is left after a maximal chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RemainderClass {
    Constant,
    NonCanalizing,
    Nested,
}

impl RemainderClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            RemainderClass::Constant => "constant",
            RemainderClass::NonCanalizing => "non_canalizing",
            RemainderClass::Nested => "nested",
        }
    }
}

/// Maximal-chain classification of one canalizing function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthReport {
    /// Maximal chain length; equals the arity exactly for nested
    /// canalizing functions.
    pub depth: u32,
    /// The first maximal chain in (variable, input) order.
    pub chain: NestedChain,
    pub remainder_class: RemainderClass,
    /// The function on the remaining variables; absent for the nested case
    /// and for single-variable inputs, where no variables remain.
    pub remainder: Option<TruthTable>,
}

type DepthMemo = HashMap<TruthTable, u32>;

/// Longest chain on a non-constant function; 0 when no restriction is
/// constant (non-canalizing).
fn max_depth(f: &TruthTable, memo: &mut DepthMemo) -> u32 {
    let n = f.arity();
    if n == 1 {
        // a non-constant single-variable function is one final step
        return 1;
    }
    if let Some(&d) = memo.get(f) {
        return d;
    }
    let mut best = 0;
    for variable in 1..=n {
        for input in [false, true] {
            if f.restriction_is_constant(variable, input)
                .expect("variable in range")
                .is_none()
            {
                continue;
            }
            let rest = f.cofactor(variable, !input).expect("variable in range");
            let tail = match rest.is_constant() {
                Some(_) => 0,
                None => max_depth(&rest, memo),
            };
            best = best.max(1 + tail);
        }
    }
    memo.insert(f.clone(), best);
    best
}

/// First chain in (variable, input) order realizing the target depth on a
/// non-constant function with `1 <= target < arity`. Returns the entries in
/// the original variable numbering and the remainder.
fn canonical_chain(f: &TruthTable, target: u32, memo: &mut DepthMemo) -> (Vec<ChainEntry>, TruthTable) {
    let n = f.arity();
    for variable in 1..=n {
        for input in [false, true] {
            let Some(output) = f
                .restriction_is_constant(variable, input)
                .expect("variable in range")
            else {
                continue;
            };
            let rest = f.cofactor(variable, !input).expect("variable in range");
            let tail = match rest.is_constant() {
                Some(_) => 0,
                None => max_depth(&rest, memo),
            };
            if 1 + tail < target {
                continue;
            }
            let head = ChainEntry {
                variable,
                input,
                output,
            };
            if target == 1 {
                return (vec![head], rest);
            }
            let (tail_entries, remainder) = canonical_chain(&rest, target - 1, memo);
            let mut entries = Vec::with_capacity(tail_entries.len() + 1);
            entries.push(head);
            entries.extend(tail_entries.into_iter().map(|mut e| {
                if e.variable >= variable {
                    e.variable += 1;
                }
                e
            }));
            return (entries, remainder);
        }
    }
    unreachable!("target depth {target} is achievable by construction")
}

/// Classify one function. `None` exactly when the function is non-canalizing
/// and non-constant, where depth is undefined. Constants report depth 1 with
/// a constant remainder; a depth equal to the arity is the nested case.
pub fn canalizing_depth(f: &TruthTable) -> Option<DepthReport> {
    canalizing_depth_memo(f, &mut DepthMemo::new())
}

fn canalizing_depth_memo(f: &TruthTable, memo: &mut DepthMemo) -> Option<DepthReport> {
    let n = f.arity();
    if n == 0 {
        return None;
    }
    if let Some(value) = f.is_constant() {
        let chain = NestedChain {
            entries: vec![ChainEntry {
                variable: 1,
                input: false,
                output: value,
            }],
            complete: false,
        };
        let remainder = if n >= 2 {
            Some(f.cofactor(1, true).expect("arity at least 2"))
        } else {
            None
        };
        return Some(DepthReport {
            depth: 1,
            chain,
            remainder_class: RemainderClass::Constant,
            remainder,
        });
    }
    let depth = max_depth(f, memo);
    if depth == 0 {
        return None;
    }
    if depth == n {
        let chain = ncf::ncf_chain(f).expect("full depth means a complete chain");
        return Some(DepthReport {
            depth,
            chain,
            remainder_class: RemainderClass::Nested,
            remainder: None,
        });
    }
    let (entries, remainder) = canonical_chain(f, depth, memo);
    let remainder_class = if remainder.is_constant().is_some() {
        RemainderClass::Constant
    } else {
        RemainderClass::NonCanalizing
    };
    Some(DepthReport {
        depth,
        chain: NestedChain {
            entries,
            complete: false,
        },
        remainder_class,
        remainder: Some(remainder),
    })
}

/// One census row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DepthBucket {
    pub depth: u32,
    pub remainder_class: RemainderClass,
    pub count: u64,
}

/// Exhaustive classification of every canalizing function of one arity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthCensus {
    pub arity: u32,
    pub buckets: Vec<DepthBucket>,
}

impl DepthCensus {
    pub fn count(&self, depth: u32, remainder_class: RemainderClass) -> u64 {
        self.buckets
            .iter()
            .filter(|b| b.depth == depth && b.remainder_class == remainder_class)
            .map(|b| b.count)
            .sum()
    }

    pub fn depth_total(&self, depth: u32) -> u64 {
        self.buckets
            .iter()
            .filter(|b| b.depth == depth)
            .map(|b| b.count)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.buckets.iter().map(|b| b.count).sum()
    }
}

fn check_sweep_arity(arity: u32) -> Result<u64> {
    if arity == 0 {
        return Err(Error::ArityTooSmall { arity, min: 1 });
    }
    if arity > canalizing::CENSUS_MAX_ARITY {
        return Err(Error::CensusTooLarge {
            arity,
            max: canalizing::CENSUS_MAX_ARITY,
        });
    }
    Ok(bf::function_count(arity).expect("small arity"))
}

/// Sweep every function of the given arity and bucket the canalizing ones
/// by (depth, remainder class).
pub fn depth_census(arity: u32, jobs: usize) -> Result<DepthCensus> {
    let total = check_sweep_arity(arity)?;
    let chunks = par::run_partitioned(total, jobs, |lo, hi| {
        let mut memo = DepthMemo::new();
        let mut counts: BTreeMap<(u32, RemainderClass), u64> = BTreeMap::new();
        for f in bf::functions_in_range(arity, lo, hi).expect("arity checked") {
            if let Some(report) = canalizing_depth_memo(&f, &mut memo) {
                *counts
                    .entry((report.depth, report.remainder_class))
                    .or_default() += 1;
            }
        }
        counts
    });
    let mut merged: BTreeMap<(u32, RemainderClass), u64> = BTreeMap::new();
    for counts in chunks {
        for (key, count) in counts {
            *merged.entry(key).or_default() += count;
        }
    }
    Ok(DepthCensus {
        arity,
        buckets: merged
            .into_iter()
            .map(|((depth, remainder_class), count)| DepthBucket {
                depth,
                remainder_class,
                count,
            })
            .collect(),
    })
}

/// Like [`depth_census`] but with full member sets per bucket.
pub fn depth_census_sets(
    arity: u32,
    jobs: usize,
) -> Result<BTreeMap<(u32, RemainderClass), BTreeSet<TruthTable>>> {
    let total = check_sweep_arity(arity)?;
    let chunks = par::run_partitioned(total, jobs, |lo, hi| {
        let mut memo = DepthMemo::new();
        let mut sets: BTreeMap<(u32, RemainderClass), Vec<TruthTable>> = BTreeMap::new();
        for f in bf::functions_in_range(arity, lo, hi).expect("arity checked") {
            if let Some(report) = canalizing_depth_memo(&f, &mut memo) {
                sets.entry((report.depth, report.remainder_class))
                    .or_default()
                    .push(f);
            }
        }
        sets
    });
    let mut merged: BTreeMap<(u32, RemainderClass), BTreeSet<TruthTable>> = BTreeMap::new();
    for sets in chunks {
        for (key, members) in sets {
            merged.entry(key).or_default().extend(members);
        }
    }
    Ok(merged)
}

/// Insert the merger chain `(vars[t], inputs[t], outputs[t])`, outermost
/// first, around `core`. Positions account for the variables not yet
/// present when each merge happens.
fn build_chain(
    vars: &[u32],
    inputs: &[bool],
    outputs: &[bool],
    core: &TruthTable,
) -> TruthTable {
    let mut f = core.clone();
    for t in (0..vars.len()).rev() {
        let position = vars[t] - (0..t).filter(|&s| vars[s] < vars[t]).count() as u32;
        f = f.merge(position, inputs[t], outputs[t]).expect("position in range");
    }
    f
}

/// Constructive enumeration of the four-variable depth families, grouped by
/// (depth, remainder class):
/// depth 1 with constant remainder is the constants and literals; depth 1
/// with non-canalizing remainder inserts one variable around each
/// non-canalizing three-variable function; depths 2 and 3 assemble chains
/// over ordered variable choices around a constant core whose value must
/// differ from the last output (otherwise the last step collapses); depth 2
/// also wraps the two non-canalizing two-variable functions; depth 4 is the
/// nested family.
pub fn depth_families(
    arity: u32,
) -> Result<BTreeMap<(u32, RemainderClass), BTreeSet<TruthTable>>> {
    if arity != 4 {
        return Err(Error::ArityMismatch {
            expected: 4,
            found: arity,
        });
    }
    let n = 4u32;
    let bools = [false, true];
    let mut families: BTreeMap<(u32, RemainderClass), BTreeSet<TruthTable>> = BTreeMap::new();

    let mut depth1_constant = BTreeSet::new();
    depth1_constant.insert(TruthTable::constant(n, false)?);
    depth1_constant.insert(TruthTable::constant(n, true)?);
    for i in 1..=n {
        let p = TruthTable::projection(i, n)?;
        depth1_constant.insert(p.complement());
        depth1_constant.insert(p);
    }
    families.insert((1, RemainderClass::Constant), depth1_constant);

    let non_canalizing3 = canalizing::non_canalizing_set(3, 1)?;
    let mut depth1_nc = BTreeSet::new();
    for g in &non_canalizing3 {
        for position in 1..=n {
            for input in bools {
                for output in bools {
                    depth1_nc.insert(g.merge(position, input, output)?);
                }
            }
        }
    }
    families.insert((1, RemainderClass::NonCanalizing), depth1_nc);

    let mut depth2_constant = BTreeSet::new();
    let mut depth2_nc = BTreeSet::new();
    let non_canalizing2 = canalizing::non_canalizing_set(2, 1)?;
    for v1 in 1..=n {
        for v2 in (1..=n).filter(|&v| v != v1) {
            for a1 in bools {
                for b1 in bools {
                    for a2 in bools {
                        for b2 in bools {
                            let core = TruthTable::constant(2, !b2)?;
                            depth2_constant.insert(build_chain(
                                &[v1, v2],
                                &[a1, a2],
                                &[b1, b2],
                                &core,
                            ));
                            for g in &non_canalizing2 {
                                depth2_nc.insert(build_chain(&[v1, v2], &[a1, a2], &[b1, b2], g));
                            }
                        }
                    }
                }
            }
        }
    }
    families.insert((2, RemainderClass::Constant), depth2_constant);
    families.insert((2, RemainderClass::NonCanalizing), depth2_nc);

    let mut depth3_constant = BTreeSet::new();
    for v1 in 1..=n {
        for v2 in (1..=n).filter(|&v| v != v1) {
            for v3 in (1..=n).filter(|&v| v != v1 && v != v2) {
                for a1 in bools {
                    for b1 in bools {
                        for a2 in bools {
                            for b2 in bools {
                                for a3 in bools {
                                    for b3 in bools {
                                        let core = TruthTable::constant(1, !b3)?;
                                        depth3_constant.insert(build_chain(
                                            &[v1, v2, v3],
                                            &[a1, a2, a3],
                                            &[b1, b2, b3],
                                            &core,
                                        ));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    families.insert((3, RemainderClass::Constant), depth3_constant);

    families.insert((4, RemainderClass::Nested), ncf::enumerate_ncf(4)?);
    Ok(families)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(arity: u32, bits: &str) -> TruthTable {
        TruthTable::from_binary(arity, bits).unwrap()
    }

    #[test]
    fn constants_classify_at_depth_one() {
        let report = canalizing_depth(&TruthTable::constant(4, false).unwrap()).unwrap();
        assert_eq!(report.depth, 1);
        assert_eq!(report.remainder_class, RemainderClass::Constant);
        assert_eq!(report.remainder.unwrap().is_constant(), Some(false));
        assert!(!report.chain.complete);
    }

    #[test]
    fn two_variable_conjunction_with_dummies_has_depth_two() {
        // x3 AND x4 as a 4-variable function
        let f = tt(4, "0001000100010001");
        let report = canalizing_depth(&f).unwrap();
        assert_eq!(report.depth, 2);
        assert_eq!(report.remainder_class, RemainderClass::Constant);
        let vars: Vec<u32> = report.chain.entries.iter().map(|e| e.variable).collect();
        assert_eq!(vars, vec![3, 4]);
        assert_eq!(report.remainder.unwrap().is_constant(), Some(true));
    }

    #[test]
    fn nested_functions_reach_full_depth() {
        for f in ncf::enumerate_ncf(4).unwrap().iter().take(40) {
            let report = canalizing_depth(f).unwrap();
            assert_eq!(report.depth, 4);
            assert_eq!(report.remainder_class, RemainderClass::Nested);
            assert!(report.chain.complete);
            assert!(report.remainder.is_none());
        }
    }

    #[test]
    fn non_canalizing_functions_have_no_depth() {
        assert_eq!(canalizing_depth(&tt(2, "0110")), None);
        assert_eq!(canalizing_depth(&tt(4, "0110100110010110")), None);
    }

    #[test]
    fn literals_with_dummies_sit_in_the_constant_bucket() {
        let f = TruthTable::projection(2, 4).unwrap();
        let report = canalizing_depth(&f).unwrap();
        assert_eq!(report.depth, 1);
        assert_eq!(report.remainder_class, RemainderClass::Constant);
        assert_eq!(report.chain.entries[0].variable, 2);
    }

    #[test]
    fn merged_non_canalizing_core_gives_depth_one() {
        // XOR of x2, x3 behind a forcing first variable, over 3 variables
        let xor = tt(2, "0110");
        let f = xor.merge(1, false, false).unwrap();
        let report = canalizing_depth(&f).unwrap();
        assert_eq!(report.depth, 1);
        assert_eq!(report.remainder_class, RemainderClass::NonCanalizing);
        assert_eq!(report.remainder.unwrap(), xor);
    }

    #[test]
    fn small_census_is_consistent_with_the_canalizing_census() {
        for arity in [2u32, 3] {
            let census = depth_census(arity, 2).unwrap();
            assert_eq!(
                census.total(),
                canalizing::census_canalizing(arity, 1).unwrap()
            );
        }
    }

    #[test]
    fn three_variable_depth_totals() {
        let census = depth_census(3, 2).unwrap();
        // 2 constants + 6 literals, then one forcing variable around the
        // two non-canalizing two-variable functions: 3 * 4 * 2 = 24
        assert_eq!(census.count(1, RemainderClass::Constant), 8);
        assert_eq!(census.count(1, RemainderClass::NonCanalizing), 24);
        assert_eq!(census.count(3, RemainderClass::Nested), 64);
        assert_eq!(census.total(), 120);
    }

    #[test]
    fn families_require_arity_four() {
        assert!(depth_families(3).is_err());
    }
}
