//! Nested canalizing functions: chain extraction, merger-based enumeration,
//! and the Hamming-distance matrix recursion with the derived NCF count.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bf::TruthTable;
use crate::error::{Error, Result};

/// One chain step: with all earlier chain variables off their inputs,
/// fixing `variable` to `input` forces the output to `output`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChainEntry {
    pub variable: u32,
    pub input: bool,
    pub output: bool,
}

/// An ordered canalizing chain. `complete` means the chain consumes every
/// variable and the final else-branch is the negation of the last output,
/// i.e. the owning function is nested canalizing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedChain {
    pub entries: Vec<ChainEntry>,
    pub complete: bool,
}

impl NestedChain {
    pub fn depth(&self) -> u32 {
        self.entries.len() as u32
    }
}

/// Canonical complete chain of `f`, when `f` is nested canalizing: at every
/// level the smallest usable variable index is taken, input 0 before 1.
pub fn ncf_chain(f: &TruthTable) -> Option<NestedChain> {
    chain_search(f).map(|entries| NestedChain {
        entries,
        complete: true,
    })
}

/// Whether `f` admits a complete canalizing chain.
pub fn is_ncf(f: &TruthTable) -> bool {
    chain_search(f).is_some()
}

/// Recursive search in local variable numbering: `f` is nested canalizing
/// iff some restriction is constant and the complementary restriction is
/// nested canalizing, down to a non-constant single-variable function.
fn chain_search(f: &TruthTable) -> Option<Vec<ChainEntry>> {
    let n = f.arity();
    if n == 0 {
        return None;
    }
    if n == 1 {
        let (b0, b1) = (f.bit(0), f.bit(1));
        if b0 == b1 {
            return None;
        }
        return Some(vec![ChainEntry {
            variable: 1,
            input: false,
            output: b0,
        }]);
    }
    for variable in 1..=n {
        for input in [false, true] {
            let Some(output) = f
                .restriction_is_constant(variable, input)
                .expect("variable in range")
            else {
                continue;
            };
            let rest = f.cofactor(variable, !input).expect("variable in range");
            if let Some(tail) = chain_search(&rest) {
                let mut entries = Vec::with_capacity(tail.len() + 1);
                entries.push(ChainEntry {
                    variable,
                    input,
                    output,
                });
                // restriction removed `variable`; later locals shift back up
                entries.extend(tail.into_iter().map(|mut e| {
                    if e.variable >= variable {
                        e.variable += 1;
                    }
                    e
                }));
                return Some(entries);
            }
        }
    }
    None
}

/// Every complete chain of `f`, for diagnostics; empty when `f` is not
/// nested canalizing.
fn all_complete_chains(f: &TruthTable) -> Vec<Vec<ChainEntry>> {
    let n = f.arity();
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        let (b0, b1) = (f.bit(0), f.bit(1));
        if b0 == b1 {
            return Vec::new();
        }
        return vec![
            vec![ChainEntry {
                variable: 1,
                input: false,
                output: b0,
            }],
            vec![ChainEntry {
                variable: 1,
                input: true,
                output: b1,
            }],
        ];
    }
    let mut chains = Vec::new();
    for variable in 1..=n {
        for input in [false, true] {
            let Some(output) = f
                .restriction_is_constant(variable, input)
                .expect("variable in range")
            else {
                continue;
            };
            let rest = f.cofactor(variable, !input).expect("variable in range");
            for tail in all_complete_chains(&rest) {
                let mut entries = Vec::with_capacity(tail.len() + 1);
                entries.push(ChainEntry {
                    variable,
                    input,
                    output,
                });
                entries.extend(tail.into_iter().map(|mut e| {
                    if e.variable >= variable {
                        e.variable += 1;
                    }
                    e
                }));
                chains.push(entries);
            }
        }
    }
    chains
}

/// All nested canalizing functions of the given arity, built bottom-up by
/// merging a new variable into every smaller chain at every position with
/// every input/output choice. Different merger paths collide, so the result
/// is a set.
pub fn enumerate_ncf(arity: u32) -> Result<BTreeSet<TruthTable>> {
    if arity == 0 {
        return Err(Error::ArityTooSmall { arity, min: 1 });
    }
    let mut current: BTreeSet<TruthTable> = [
        TruthTable::projection(1, 1)?,
        TruthTable::projection(1, 1)?.complement(),
    ]
    .into();
    for n in 2..=arity {
        let mut next = BTreeSet::new();
        for g in &current {
            for position in 1..=n {
                for input in [false, true] {
                    for output in [false, true] {
                        next.insert(g.merge(position, input, output)?);
                    }
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// The per-start-variable, per-Hamming-distance NCF count matrix. Row `i`
/// (1-based) is the starting canalizing variable; column `j` counts chains
/// whose function sits at Hamming distance `2j - 1` from the nearer
/// constant. The total NCF count is four times the matrix sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HdMatrix {
    arity: u32,
    entries: Vec<Vec<u64>>,
}

impl HdMatrix {
    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Columns, `2^(n-2)`.
    pub fn columns(&self) -> usize {
        1usize << (self.arity - 2)
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i - 1][j - 1]
    }

    /// Hamming distance counted by 1-based column `j`.
    pub fn hd_for_column(j: usize) -> u64 {
        2 * j as u64 - 1
    }

    pub fn sum(&self) -> u64 {
        self.entries.iter().flatten().sum()
    }

    /// `N_c = 4 * sum`, the number of nested canalizing functions.
    pub fn ncf_count(&self) -> u64 {
        4 * self.sum()
    }
}

/// Compute the count matrix by recursion on the arity:
/// base `[2; 0]` at two variables; above that, row `n` is zero on the low
/// columns, the high columns mirror row 1, and the remaining entries are
/// twice the tail sums of the previous matrix's column.
pub fn hd_matrix(arity: u32) -> Result<HdMatrix> {
    if arity < 2 {
        return Err(Error::ArityTooSmall { arity, min: 2 });
    }
    if arity > 12 {
        // entries overflow u64 well past this; nothing desk-scale needs it
        return Err(Error::ArityTooLarge { arity, max: 12 });
    }
    let mut m = HdMatrix {
        arity: 2,
        entries: vec![vec![2], vec![0]],
    };
    for n in 3..=arity {
        let cols = 1usize << (n - 2);
        let low_cols = 1usize << (n - 3);
        let rows = n as usize;
        let mut entries = vec![vec![0u64; cols]; rows];
        for j in 0..low_cols {
            for i in 0..rows - 1 {
                entries[i][j] = 2 * (i..rows - 1).map(|i1| m.entries[i1][j]).sum::<u64>();
            }
            // row n stays zero on the low columns
        }
        for j in low_cols..cols {
            let mirrored = entries[0][cols - 1 - j];
            for row in entries.iter_mut() {
                row[j] = mirrored;
            }
        }
        m = HdMatrix { arity: n, entries };
    }
    Ok(m)
}

/// Observed NCF histogram: bucket counts keyed by (starting variable of the
/// canonical chain, Hamming-distance class).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HdHistogram {
    pub arity: u32,
    pub buckets: Vec<Vec<u64>>,
}

/// Diagnostic payload for a histogram/matrix disagreement: the matrix-
/// derived expectation, the observed buckets under the minimum-start-
/// variable tie-break, and the buckets under the alternative tie-break that
/// keys on the lexicographically smallest complete chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistogramMismatch {
    pub arity: u32,
    pub expected: Vec<Vec<u64>>,
    pub actual: Vec<Vec<u64>>,
    pub alternative: Vec<Vec<u64>>,
}

/// Bucket every NCF of the given arity by (chain start variable, Hamming-
/// distance class) and check the counts against four times the matrix. A
/// mismatch is an error carrying the alternative-tie-break diagnostic.
pub fn hd_histogram(arity: u32) -> Result<HdHistogram> {
    if arity < 2 {
        return Err(Error::ArityTooSmall { arity, min: 2 });
    }
    if arity > 4 {
        return Err(Error::CensusTooLarge { arity, max: 4 });
    }
    let matrix = hd_matrix(arity)?;
    let cols = matrix.columns();
    let ncfs = enumerate_ncf(arity)?;
    let mut buckets = vec![vec![0u64; cols]; arity as usize];
    for f in &ncfs {
        let chain = ncf_chain(f).expect("enumerated functions are nested canalizing");
        let i = chain.entries[0].variable as usize;
        let j = ((f.min_const_hd() + 1) / 2) as usize;
        buckets[i - 1][j - 1] += 1;
    }
    let expected: Vec<Vec<u64>> = matrix
        .entries()
        .iter()
        .map(|row| row.iter().map(|&v| 4 * v).collect())
        .collect();
    if buckets == expected {
        return Ok(HdHistogram { arity, buckets });
    }
    let mut alternative = vec![vec![0u64; cols]; arity as usize];
    for f in &ncfs {
        let chains = all_complete_chains(f);
        let lex = chains
            .iter()
            .min_by_key(|chain| {
                let vars: Vec<u32> = chain.iter().map(|e| e.variable).collect();
                let inputs: Vec<bool> = chain.iter().map(|e| e.input).collect();
                (vars, inputs)
            })
            .expect("enumerated functions are nested canalizing");
        let i = lex[0].variable as usize;
        let j = ((f.min_const_hd() + 1) / 2) as usize;
        alternative[i - 1][j - 1] += 1;
    }
    Err(Error::HistogramDisagreement(Box::new(HistogramMismatch {
        arity,
        expected,
        actual: buckets,
        alternative,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(arity: u32, bits: &str) -> TruthTable {
        TruthTable::from_binary(arity, bits).unwrap()
    }

    fn entry(variable: u32, input: bool, output: bool) -> ChainEntry {
        ChainEntry {
            variable,
            input,
            output,
        }
    }

    #[test]
    fn conjunction_has_the_archetypal_chain() {
        let chain = ncf_chain(&tt(2, "0001")).unwrap();
        assert!(chain.complete);
        assert_eq!(
            chain.entries,
            vec![entry(1, false, false), entry(2, false, false)]
        );
    }

    #[test]
    fn xor_has_no_chain() {
        assert_eq!(ncf_chain(&tt(2, "0110")), None);
    }

    #[test]
    fn dummy_variable_breaks_completeness() {
        // x2 AND x3 as a 3-variable function: the single-variable remainder
        // is constant, so the final else-branch clause cannot hold
        assert_eq!(ncf_chain(&tt(3, "00010001")), None);
        assert!(!is_ncf(&tt(3, "00010001")));
    }

    #[test]
    fn single_variable_chains() {
        let chain = ncf_chain(&tt(1, "01")).unwrap();
        assert_eq!(chain.entries, vec![entry(1, false, false)]);
        let chain = ncf_chain(&tt(1, "10")).unwrap();
        assert_eq!(chain.entries, vec![entry(1, false, true)]);
        assert_eq!(ncf_chain(&tt(1, "11")), None);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ncf(1).unwrap().len(), 2);
        assert_eq!(enumerate_ncf(2).unwrap().len(), 8);
        assert_eq!(enumerate_ncf(3).unwrap().len(), 64);
        assert_eq!(enumerate_ncf(4).unwrap().len(), 736);
    }

    #[test]
    fn matrix_base_and_small_cases() {
        let m2 = hd_matrix(2).unwrap();
        assert_eq!(m2.entries(), &[vec![2], vec![0]]);
        assert_eq!(m2.ncf_count(), 8);

        let m3 = hd_matrix(3).unwrap();
        assert_eq!(m3.entries(), &[vec![4, 4], vec![0, 4], vec![0, 4]]);
        assert_eq!(m3.ncf_count(), 64);

        let m4 = hd_matrix(4).unwrap();
        assert_eq!(
            m4.entries(),
            &[
                vec![8, 24, 24, 8],
                vec![0, 16, 24, 8],
                vec![0, 8, 24, 8],
                vec![0, 0, 24, 8]
            ]
        );
        assert_eq!(m4.ncf_count(), 736);
    }

    #[test]
    fn five_variable_matrix_column_sums() {
        let m5 = hd_matrix(5).unwrap();
        let sums: Vec<u64> = (0..m5.columns())
            .map(|j| (0..5).map(|i| m5.entries()[i][j]).sum())
            .collect();
        assert_eq!(sums, vec![16, 160, 480, 160, 320, 960, 480, 80]);
        assert_eq!(m5.ncf_count(), 10_624);
    }

    #[test]
    fn matrix_structure_invariants_hold_well_past_the_worked_cases() {
        for n in 3..=8u32 {
            let m = hd_matrix(n).unwrap();
            let cols = m.columns();
            let low = cols / 2;
            for j in 1..=low {
                assert_eq!(m.get(n as usize, j), 0, "zero wall at n={n}, j={j}");
            }
            for j in low + 1..=cols {
                for i in 1..=n as usize {
                    assert_eq!(
                        m.get(i, j),
                        m.get(1, cols + 1 - j),
                        "mirror at n={n}, i={i}, j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn histogram_matches_matrix_for_two_and_three_variables() {
        let h2 = hd_histogram(2).unwrap();
        assert_eq!(h2.buckets, vec![vec![8], vec![0]]);

        let h3 = hd_histogram(3).unwrap();
        assert_eq!(h3.buckets, vec![vec![16, 16], vec![0, 16], vec![0, 16]]);
    }

    #[test]
    fn three_literal_conjunctions_and_disjunctions_fill_the_first_bucket() {
        // the sixteen distance-1 functions starting at x1
        let ncfs = enumerate_ncf(3).unwrap();
        let hd1: Vec<&TruthTable> = ncfs.iter().filter(|f| f.min_const_hd() == 1).collect();
        assert_eq!(hd1.len(), 16);
        for f in hd1 {
            assert_eq!(ncf_chain(f).unwrap().entries[0].variable, 1);
        }
    }
}
