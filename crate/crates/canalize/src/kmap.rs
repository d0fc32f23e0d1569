//! Gray-code Karnaugh maps and the structural canalization detector built
//! on recursive half / reflected-half decomposition.
//!
//! A map places the first `ceil(n/2)` variables on rows and the rest on
//! columns, each axis ordered by the standard reflected Gray code. Splitting
//! an axis yields the first half (`K_i`, level variable 0) and the second
//! half with its line order reversed (`K_i*`, level variable 1); because the
//! Gray code is reflected, the two halves carry identical residual labels,
//! so equal line positions address the same assignment of the remaining
//! variables. The detector reports a variable as canalizing exactly when the
//! union of its chosen-side blocks over every decomposition path is
//! constant, which is the geometric form of a constant restriction.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::bf::TruthTable;
use crate::canalizing::{canalizing_triples, CanalizingTriple};
use crate::error::{Error, Result};

/// Reflected Gray code of a line index.
pub fn gray_code(t: usize) -> u32 {
    (t ^ (t >> 1)) as u32
}

/// Split axis of a [`SubMap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    Row,
    Col,
}

/// One decomposition step along a path: plain first half or reflected
/// second half (`star`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub axis: Axis,
    pub star: bool,
}

/// Gray-code-ordered two-dimensional view of a truth table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KMap {
    arity: u32,
    row_vars: u32,
    col_vars: u32,
    grid: Vec<bool>,
    row_labels: Vec<u32>,
    col_labels: Vec<u32>,
}

impl KMap {
    /// Lay out `f` on a `2^ceil(n/2) x 2^floor(n/2)` grid. Needs n >= 2.
    pub fn build(f: &TruthTable) -> Result<KMap> {
        let n = f.arity();
        if n < 2 {
            return Err(Error::ArityTooSmall { arity: n, min: 2 });
        }
        let row_vars = n.div_ceil(2);
        let col_vars = n / 2;
        let rows = 1usize << row_vars;
        let cols = 1usize << col_vars;
        let row_labels: Vec<u32> = (0..rows).map(gray_code).collect();
        let col_labels: Vec<u32> = (0..cols).map(gray_code).collect();
        let mut grid = Vec::with_capacity(rows * cols);
        for &rl in &row_labels {
            for &cl in &col_labels {
                let k = ((rl as usize) << col_vars) | cl as usize;
                grid.push(f.bit(k));
            }
        }
        Ok(KMap {
            arity: n,
            row_vars,
            col_vars,
            grid,
            row_labels,
            col_labels,
        })
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    /// Number of variables on the row axis, `ceil(n/2)`.
    pub fn row_var_count(&self) -> u32 {
        self.row_vars
    }

    /// Number of variables on the column axis, `floor(n/2)`.
    pub fn col_var_count(&self) -> u32 {
        self.col_vars
    }

    pub fn row_labels(&self) -> &[u32] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[u32] {
        &self.col_labels
    }

    pub fn cell(&self, row: usize, col: usize) -> bool {
        self.grid[row * self.cols() + col]
    }

    /// Truth-table index addressed by a cell.
    pub fn assignment_index(&self, row: usize, col: usize) -> usize {
        ((self.row_labels[row] as usize) << self.col_vars) | self.col_labels[col] as usize
    }

    /// The whole map as an undecomposed block.
    pub fn root(&self) -> SubMap<'_> {
        SubMap {
            map: self,
            row_idx: (0..self.rows()).collect(),
            col_idx: (0..self.cols()).collect(),
            row_level: 0,
            col_level: 0,
            path: Vec::new(),
        }
    }

    /// Cells whose decoded assignment has `variable = input`.
    pub fn region(&self, variable: u32, input: bool) -> Result<BTreeSet<(usize, usize)>> {
        if variable == 0 || variable > self.arity {
            return Err(Error::VariableOutOfRange {
                variable,
                arity: self.arity,
            });
        }
        let p = self.arity - variable;
        let mut cells = BTreeSet::new();
        for r in 0..self.rows() {
            for c in 0..self.cols() {
                if (self.assignment_index(r, c) >> p) & 1 == input as usize {
                    cells.insert((r, c));
                }
            }
        }
        Ok(cells)
    }

    /// Aligned text grid with binary Gray labels.
    pub fn render(&self) -> String {
        let rw = self.row_vars as usize;
        let cw = self.col_vars as usize;
        let mut out = String::new();
        out.push_str(&" ".repeat(rw + 2));
        for &cl in &self.col_labels {
            let _ = write!(out, "{:0width$b} ", cl, width = cw);
        }
        out.push('\n');
        for (r, &rl) in self.row_labels.iter().enumerate() {
            let _ = write!(out, "{:0width$b}  ", rl, width = rw);
            for c in 0..self.cols() {
                let cell = if self.cell(r, c) { '1' } else { '0' };
                let _ = write!(out, "{:<width$} ", cell, width = cw);
            }
            out.push('\n');
        }
        out
    }
}

/// A rectangular block of a [`KMap`] with the half-choices that produced it.
/// Line index vectors refer to the parent map, so a block's cells keep their
/// original coordinates.
#[derive(Debug, Clone)]
pub struct SubMap<'a> {
    map: &'a KMap,
    row_idx: Vec<usize>,
    col_idx: Vec<usize>,
    row_level: u32,
    col_level: u32,
    path: Vec<Step>,
}

impl<'a> SubMap<'a> {
    pub fn height(&self) -> usize {
        self.row_idx.len()
    }

    pub fn width(&self) -> usize {
        self.col_idx.len()
    }

    pub fn cell(&self, row: usize, col: usize) -> bool {
        self.map.cell(self.row_idx[row], self.col_idx[col])
    }

    /// Row variables not yet consumed by row splits.
    pub fn residual_row_vars(&self) -> u32 {
        self.map.row_var_count() - self.row_level
    }

    /// Column variables not yet consumed by column splits.
    pub fn residual_col_vars(&self) -> u32 {
        self.map.col_var_count() - self.col_level
    }

    fn low_mask(bits: u32) -> u32 {
        if bits == 0 {
            0
        } else {
            (1u32 << bits) - 1
        }
    }

    /// Gray label of a block row restricted to the unconsumed variables.
    pub fn residual_row_label(&self, row: usize) -> u32 {
        self.map.row_labels[self.row_idx[row]] & Self::low_mask(self.residual_row_vars())
    }

    /// Gray label of a block column restricted to the unconsumed variables.
    pub fn residual_col_label(&self, col: usize) -> u32 {
        self.map.col_labels[self.col_idx[col]] & Self::low_mask(self.residual_col_vars())
    }

    /// The half-choices that produced this block, outermost first.
    pub fn path(&self) -> &[Step] {
        &self.path
    }

    /// Cell coordinates in the parent map.
    pub fn cells(&self) -> BTreeSet<(usize, usize)> {
        let mut cells = BTreeSet::new();
        for &r in &self.row_idx {
            for &c in &self.col_idx {
                cells.insert((r, c));
            }
        }
        cells
    }

    /// `Some(value)` when every cell of the block holds `value`.
    pub fn is_constant(&self) -> Option<bool> {
        let first = self.cell(0, 0);
        for r in 0..self.height() {
            for c in 0..self.width() {
                if self.cell(r, c) != first {
                    return None;
                }
            }
        }
        Some(first)
    }

    /// Split along `axis` into the first half and the reflected second
    /// half. The two blocks carry identical residual labels and are the two
    /// restrictions of the level's variable (0 on the first half, 1 on the
    /// reflected half).
    pub fn decompose(&self, axis: Axis) -> Result<(SubMap<'a>, SubMap<'a>)> {
        let lines = match axis {
            Axis::Row => self.height(),
            Axis::Col => self.width(),
        };
        if lines < 2 {
            return Err(Error::AxisExhausted);
        }
        let half = lines / 2;
        let mut first = self.clone();
        let mut second = self.clone();
        first.path.push(Step { axis, star: false });
        second.path.push(Step { axis, star: true });
        match axis {
            Axis::Row => {
                second.row_idx = self.row_idx[half..].to_vec();
                second.row_idx.reverse();
                first.row_idx.truncate(half);
                first.row_level += 1;
                second.row_level += 1;
            }
            Axis::Col => {
                second.col_idx = self.col_idx[half..].to_vec();
                second.col_idx.reverse();
                first.col_idx.truncate(half);
                first.col_level += 1;
                second.col_level += 1;
            }
        }
        debug_assert!(aligned(&first, &second));
        Ok((first, second))
    }
}

fn aligned(a: &SubMap<'_>, b: &SubMap<'_>) -> bool {
    a.height() == b.height()
        && a.width() == b.width()
        && a.residual_row_vars() == b.residual_row_vars()
        && a.residual_col_vars() == b.residual_col_vars()
        && (0..a.height()).all(|r| a.residual_row_label(r) == b.residual_row_label(r))
        && (0..a.width()).all(|c| a.residual_col_label(c) == b.residual_col_label(c))
}

/// The `~` relation between two aligned blocks: true when some identically
/// selected half-region is constant with one common value in both. The
/// regions considered are the whole block and, for each unconsumed variable
/// of either axis, the half selected by fixing that variable; "same
/// location" holds because aligned blocks share residual labels.
pub fn similar(a: &SubMap<'_>, b: &SubMap<'_>) -> Result<bool> {
    if !aligned(a, b) {
        return Err(Error::ShapeMismatch);
    }
    if let (Some(va), Some(vb)) = (a.is_constant(), b.is_constant()) {
        if va == vb {
            return Ok(true);
        }
    }
    for bit in 0..a.residual_row_vars() {
        for val in [false, true] {
            let rows: Vec<usize> = (0..a.height())
                .filter(|&r| (a.residual_row_label(r) >> bit) & 1 == val as u32)
                .collect();
            if let Some(v) = constant_over(a, &rows, None) {
                if constant_over(b, &rows, None) == Some(v) {
                    return Ok(true);
                }
            }
        }
    }
    for bit in 0..a.residual_col_vars() {
        for val in [false, true] {
            let cols: Vec<usize> = (0..a.width())
                .filter(|&c| (a.residual_col_label(c) >> bit) & 1 == val as u32)
                .collect();
            if let Some(v) = constant_over(a, &[], Some(&cols)) {
                if constant_over(b, &[], Some(&cols)) == Some(v) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Constant value of a block over selected rows (all columns) or selected
/// columns (all rows).
fn constant_over(block: &SubMap<'_>, rows: &[usize], cols: Option<&[usize]>) -> Option<bool> {
    let mut value = None;
    let probe = |v: bool, value: &mut Option<bool>| -> bool {
        match *value {
            None => {
                *value = Some(v);
                true
            }
            Some(prev) => prev == v,
        }
    };
    match cols {
        None => {
            for &r in rows {
                for c in 0..block.width() {
                    if !probe(block.cell(r, c), &mut value) {
                        return None;
                    }
                }
            }
        }
        Some(cols) => {
            for &c in cols {
                for r in 0..block.height() {
                    if !probe(block.cell(r, c), &mut value) {
                        return None;
                    }
                }
            }
        }
    }
    value
}

/// Structural canalization detector. Walks each variable's axis level by
/// level: the level-1 test is a constant half (condition on the outermost
/// split), deeper levels chain the reflected decomposition so that the
/// union of the chosen-side blocks over every path is exactly the
/// variable's region. Returns the witness with the smallest variable index,
/// input 0 before 1. Single-variable functions have no two-dimensional map
/// and are answered by the definitional test.
pub fn detect_canalizing(f: &TruthTable) -> Option<CanalizingTriple> {
    let n = f.arity();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return canalizing_triples(f).into_iter().next();
    }
    let map = KMap::build(f).expect("arity at least 2");
    for variable in 1..=n {
        let (axis, level) = if variable <= map.row_var_count() {
            (Axis::Row, variable)
        } else {
            (Axis::Col, variable - map.row_var_count())
        };
        for input in [false, true] {
            if let Some(output) = level_union_constant(&map, axis, level, input) {
                return Some(CanalizingTriple {
                    variable,
                    input,
                    output,
                });
            }
        }
    }
    None
}

/// Union-of-blocks test at one level of one axis: descend `level - 1`
/// splits keeping both halves of every block, then check that the
/// `input`-side halves are constant with one common value.
fn level_union_constant(map: &KMap, axis: Axis, level: u32, input: bool) -> Option<bool> {
    let mut blocks = vec![map.root()];
    for _ in 1..level {
        let mut next = Vec::with_capacity(blocks.len() * 2);
        for block in &blocks {
            let (first, second) = block.decompose(axis).expect("level within axis depth");
            next.push(first);
            next.push(second);
        }
        blocks = next;
    }
    let mut value = None;
    for block in &blocks {
        let (first, second) = block.decompose(axis).expect("level within axis depth");
        let side = if input { second } else { first };
        match side.is_constant() {
            None => return None,
            Some(v) => match value {
                None => value = Some(v),
                Some(prev) if prev != v => return None,
                _ => {}
            },
        }
    }
    value
}

/// Cells of the map of `f` whose assignment has `variable = input`.
pub fn region(f: &TruthTable, variable: u32, input: bool) -> Result<BTreeSet<(usize, usize)>> {
    KMap::build(f)?.region(variable, input)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bf;

    fn tt(arity: u32, bits: &str) -> TruthTable {
        TruthTable::from_binary(arity, bits).unwrap()
    }

    const EXAMPLE_CANALIZING: &str = "11010000111100001111000011110000";
    const EXAMPLE_NON_CANALIZING: &str = "00001110000111111110000111110000";

    #[test]
    fn layout_dimensions_and_gray_labels() {
        let map = KMap::build(&tt(3, "01010101")).unwrap();
        assert_eq!((map.rows(), map.cols()), (4, 2));
        assert_eq!(map.row_labels(), &[0b00, 0b01, 0b11, 0b10]);
        assert_eq!(map.col_labels(), &[0, 1]);
        for r in 0..4 {
            assert!(!map.cell(r, 0));
            assert!(map.cell(r, 1));
        }
        assert!(matches!(
            KMap::build(&tt(1, "01")),
            Err(Error::ArityTooSmall { arity: 1, min: 2 })
        ));
    }

    #[test]
    fn cells_are_a_bijection_with_the_table() {
        for bits in ["0110100110010110", "0001000100010001"] {
            let f = tt(4, bits);
            let map = KMap::build(&f).unwrap();
            let mut seen = std::collections::BTreeSet::new();
            for r in 0..map.rows() {
                for c in 0..map.cols() {
                    let k = map.assignment_index(r, c);
                    assert!(seen.insert(k));
                    assert_eq!(map.cell(r, c), f.bit(k));
                }
            }
            assert_eq!(seen.len(), f.len());
        }
    }

    #[test]
    fn five_variable_map_zeroes_where_x3_is_one() {
        let f = tt(5, EXAMPLE_CANALIZING);
        let map = KMap::build(&f).unwrap();
        assert_eq!((map.rows(), map.cols()), (8, 4));
        for (r, c) in map.region(3, true).unwrap() {
            assert!(!map.cell(r, c));
        }
    }

    #[test]
    fn constant_map_is_all_zero() {
        let map = KMap::build(&TruthTable::constant(2, false).unwrap()).unwrap();
        assert_eq!((map.rows(), map.cols()), (2, 2));
        for r in 0..2 {
            for c in 0..2 {
                assert!(!map.cell(r, c));
            }
        }
    }

    #[test]
    fn decompose_halves_are_the_two_restrictions() {
        // 2x2 map of AND: the first-half row is the x1=0 restriction (0,0),
        // the reflected second half is the x1=1 restriction (0,1) under the
        // shared residual labels.
        let map = KMap::build(&tt(2, "0001")).unwrap();
        let (k1, k1s) = map.root().decompose(Axis::Row).unwrap();
        assert_eq!((k1.cell(0, 0), k1.cell(0, 1)), (false, false));
        assert_eq!((k1s.cell(0, 0), k1s.cell(0, 1)), (false, true));
        assert_eq!(k1.residual_col_label(0), k1s.residual_col_label(0));
        assert_eq!(k1.residual_col_label(1), k1s.residual_col_label(1));
        assert!(matches!(k1.decompose(Axis::Row), Err(Error::AxisExhausted)));
    }

    #[test]
    fn self_concatenation_aligns_cell_for_cell() {
        for code in 0..256u64 {
            let f = TruthTable::from_int_u64(3, code).unwrap();
            let h = f.concat(&f).unwrap();
            let map = KMap::build(&h).unwrap();
            let (k1, k1s) = map.root().decompose(Axis::Row).unwrap();
            for r in 0..k1.height() {
                for c in 0..k1.width() {
                    assert_eq!(k1.cell(r, c), k1s.cell(r, c));
                }
            }
            // identical halves share a constant region exactly when the
            // repeated function has one, i.e. when it is canalizing
            assert_eq!(
                similar(&k1, &k1s).unwrap(),
                crate::canalizing::is_canalizing(&f),
                "code {code}"
            );
        }
    }

    #[test]
    fn example_two_chains_through_the_row_levels() {
        let map = KMap::build(&tt(5, EXAMPLE_CANALIZING)).unwrap();
        let (k1, k1s) = map.root().decompose(Axis::Row).unwrap();
        assert!(similar(&k1, &k1s).unwrap());
        let (k2, k2s) = k1.decompose(Axis::Row).unwrap();
        assert!(similar(&k2, &k2s).unwrap());
    }

    #[test]
    fn example_three_fails_the_first_level() {
        let map = KMap::build(&tt(5, EXAMPLE_NON_CANALIZING)).unwrap();
        let (k1, k1s) = map.root().decompose(Axis::Row).unwrap();
        assert!(!similar(&k1, &k1s).unwrap());
    }

    #[test]
    fn similar_rejects_mismatched_shapes() {
        let f = tt(4, "0001000100010001");
        let map = KMap::build(&f).unwrap();
        let (k1, _) = map.root().decompose(Axis::Row).unwrap();
        assert_eq!(similar(&k1, &map.root()), Err(Error::ShapeMismatch));
    }

    #[test]
    fn detector_examples() {
        let witness = detect_canalizing(&tt(5, EXAMPLE_CANALIZING)).unwrap();
        assert_eq!(
            (witness.variable, witness.input, witness.output),
            (3, true, false)
        );
        assert_eq!(detect_canalizing(&tt(5, EXAMPLE_NON_CANALIZING)), None);
        assert_eq!(detect_canalizing(&tt(2, "0110")), None);
    }

    #[test]
    fn detector_handles_constants_and_single_variables() {
        let zero = TruthTable::constant(2, false).unwrap();
        let w = detect_canalizing(&zero).unwrap();
        assert_eq!((w.variable, w.input, w.output), (1, false, false));
        let x = tt(1, "01");
        let w = detect_canalizing(&x).unwrap();
        assert_eq!((w.variable, w.input, w.output), (1, false, false));
        assert_eq!(detect_canalizing(&TruthTable::constant(1, true).unwrap()).map(|t| t.output), Some(true));
    }

    #[test]
    fn regions_by_gray_decode() {
        let f = tt(3, "01010101");
        let map = KMap::build(&f).unwrap();
        // x1 = 0: top two rows
        let top: BTreeSet<(usize, usize)> = [(0, 0), (0, 1), (1, 0), (1, 1)].into();
        assert_eq!(map.region(1, false).unwrap(), top);
        // x2 = 1: middle two rows, labels 01 and 11
        let middle: BTreeSet<(usize, usize)> = [(1, 0), (1, 1), (2, 0), (2, 1)].into();
        assert_eq!(map.region(2, true).unwrap(), middle);
        // 5 variables, x4 = 0: the columns whose first label bit is 0
        let g = tt(5, EXAMPLE_CANALIZING);
        let m5 = KMap::build(&g).unwrap();
        let cells = m5.region(4, false).unwrap();
        assert_eq!(cells.len(), 16);
        for (_, c) in cells {
            assert_eq!(m5.col_labels()[c] >> 1, 0);
        }
    }

    #[test]
    fn render_shows_labels_and_cells() {
        let s = KMap::build(&tt(3, "01010101")).unwrap().render();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[0].contains('0') && lines[0].contains('1'));
        assert!(lines[1].starts_with("00"));
        assert!(lines[3].starts_with("11"));
    }
}
