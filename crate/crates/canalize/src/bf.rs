//! Truth tables for Boolean functions of explicit arity, their text
//! encodings, and the structural operations (cofactor, complement,
//! concatenation, merger, Hamming metrics) the rest of the crate builds on.
//!
//! Bit `k` of a table stores `f(x1,..,xn)` where the binary expansion of `k`
//! carries `x1` in the most significant position and `xn` in the least
//! significant one. Under this convention the projection `x_i` consists of
//! repeating blocks of `2^(n-i)` zeros followed by `2^(n-i)` ones, and the
//! concatenation `fg` is the function whose `x1 = 0` cofactor is `f` and
//! whose `x1 = 1` cofactor is `g`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on the variable count; tables take `2^n` bits of storage.
pub const MAX_ARITY: u32 = 32;

/// Largest arity for which the full function space can be streamed
/// (`2^(2^n)` codes must fit in a `u64` range).
pub const MAX_ENUMERATION_ARITY: u32 = 5;

/// Bit patterns selecting the indices whose variable bit `p` is set, for
/// `p < 6` (the in-word cases). `MASK[p]` repeats `2^p` zeros then `2^p`
/// ones, starting from bit 0.
const IN_WORD_VARIABLE_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// A Boolean function of `arity` variables as an explicit table of `2^arity`
/// bits. Values are immutable once built; every operation returns a new
/// table.
///
/// Arity 0 (a single cell, no variables) is allowed as the degenerate result
/// of restricting a one-variable function; the text codecs only accept
/// arity >= 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    arity: u32,
    words: Vec<u64>,
}

/// One input row: the values of `x1..xn` in variable order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment(Vec<bool>);

/// Text encodings understood by [`decode`] and [`encode`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// `2^n` characters `0`/`1`, bit 0 first.
    Binary,
    /// `2^n / 4` hex digits; each digit covers four consecutive bits with
    /// the lowest-index bit in the high position of the nibble. Needs n >= 2.
    Hex,
    /// Decimal value of `sum_k f(k) * 2^k`.
    Integer,
}

impl TruthTable {
    fn words_for(arity: u32) -> usize {
        let len = 1usize << arity;
        len.div_ceil(64)
    }

    fn tail_mask(&self) -> u64 {
        let rem = self.len() % 64;
        if rem == 0 {
            u64::MAX
        } else {
            (1u64 << rem) - 1
        }
    }

    fn check_arity_bound(arity: u32) -> Result<()> {
        if arity > MAX_ARITY {
            return Err(Error::ArityTooLarge {
                arity,
                max: MAX_ARITY,
            });
        }
        Ok(())
    }

    fn check_variable(&self, variable: u32) -> Result<()> {
        if variable == 0 || variable > self.arity {
            return Err(Error::VariableOutOfRange {
                variable,
                arity: self.arity,
            });
        }
        Ok(())
    }

    /// The constant function of the given arity.
    pub fn constant(arity: u32, value: bool) -> Result<Self> {
        Self::check_arity_bound(arity)?;
        let words = vec![0u64; Self::words_for(arity)];
        let mut t = TruthTable { arity, words };
        if value {
            for w in &mut t.words {
                *w = u64::MAX;
            }
            let mask = t.tail_mask();
            *t.words.last_mut().expect("at least one word") &= mask;
        }
        Ok(t)
    }

    /// Build a table by evaluating `f` on every index `k = 0..2^arity`.
    pub fn from_fn<F: FnMut(usize) -> bool>(arity: u32, mut f: F) -> Result<Self> {
        let mut t = Self::constant(arity, false)?;
        for k in 0..t.len() {
            if f(k) {
                t.set_bit(k, true);
            }
        }
        Ok(t)
    }

    /// Build a table from an explicit bit slice; `bits.len()` must be `2^arity`.
    pub fn from_bits(arity: u32, bits: &[bool]) -> Result<Self> {
        Self::check_arity_bound(arity)?;
        let expected = 1usize << arity;
        if bits.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: bits.len(),
            });
        }
        Self::from_fn(arity, |k| bits[k])
    }

    /// The projection `x_i`: blocks of `2^(n-i)` zeros then `2^(n-i)` ones.
    pub fn projection(variable: u32, arity: u32) -> Result<Self> {
        Self::check_arity_bound(arity)?;
        if variable == 0 || variable > arity {
            return Err(Error::VariableOutOfRange { variable, arity });
        }
        let p = arity - variable;
        Self::from_fn(arity, |k| (k >> p) & 1 == 1)
    }

    /// Parse from binary text: exactly `2^arity` characters in `{0,1}`,
    /// read left to right as bits `0..2^arity`.
    pub fn from_binary(arity: u32, text: &str) -> Result<Self> {
        Self::check_arity_bound(arity)?;
        if arity == 0 {
            return Err(Error::ArityTooSmall { arity, min: 1 });
        }
        let expected = 1usize << arity;
        if text.chars().count() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: text.chars().count(),
            });
        }
        let mut t = Self::constant(arity, false)?;
        for (pos, ch) in text.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => t.set_bit(pos, true),
                _ => return Err(Error::InvalidCharacter { ch, pos }),
            }
        }
        Ok(t)
    }

    /// Render as binary text, bit 0 first.
    pub fn to_binary(&self) -> String {
        (0..self.len())
            .map(|k| if self.bit(k) { '1' } else { '0' })
            .collect()
    }

    /// Parse from hex text: `2^arity / 4` digits, each nibble covering four
    /// consecutive bits with the lowest-index bit most significant.
    pub fn from_hex(arity: u32, text: &str) -> Result<Self> {
        Self::check_arity_bound(arity)?;
        if arity < 2 {
            return Err(Error::ArityTooSmall { arity, min: 2 });
        }
        let expected = (1usize << arity) / 4;
        if text.chars().count() != expected {
            return Err(Error::LengthMismatch {
                expected,
                found: text.chars().count(),
            });
        }
        let mut t = Self::constant(arity, false)?;
        for (d, ch) in text.chars().enumerate() {
            let v = ch
                .to_digit(16)
                .ok_or(Error::InvalidCharacter { ch, pos: d })? as usize;
            for b in 0..4 {
                if (v >> (3 - b)) & 1 == 1 {
                    t.set_bit(4 * d + b, true);
                }
            }
        }
        Ok(t)
    }

    /// Render as uppercase hex text. Needs arity >= 2.
    pub fn to_hex(&self) -> Result<String> {
        if self.arity < 2 {
            return Err(Error::ArityTooSmall {
                arity: self.arity,
                min: 2,
            });
        }
        let mut out = String::with_capacity(self.len() / 4);
        for d in 0..self.len() / 4 {
            let mut v = 0usize;
            for b in 0..4 {
                if self.bit(4 * d + b) {
                    v |= 1 << (3 - b);
                }
            }
            out.push(char::from_digit(v as u32, 16).expect("nibble").to_ascii_uppercase());
        }
        Ok(out)
    }

    /// Build from the integer code `sum_k f(k) * 2^k`.
    pub fn from_int(arity: u32, value: &BigUint) -> Result<Self> {
        Self::check_arity_bound(arity)?;
        if arity == 0 {
            return Err(Error::ArityTooSmall { arity, min: 1 });
        }
        if value.bits() > (1u64 << arity) {
            return Err(Error::IntegerOutOfRange { arity });
        }
        let mut t = Self::constant(arity, false)?;
        for (i, digit) in value.iter_u64_digits().enumerate() {
            t.words[i] = digit;
        }
        Ok(t)
    }

    /// Integer code of the table as a big integer.
    pub fn to_int(&self) -> BigUint {
        let bytes: Vec<u8> = self.words.iter().flat_map(|w| w.to_le_bytes()).collect();
        BigUint::from_bytes_le(&bytes)
    }

    /// Fast constructor from a `u64` code; valid for arity <= 6.
    pub fn from_int_u64(arity: u32, code: u64) -> Result<Self> {
        if arity > 6 {
            return Err(Error::ArityTooLarge { arity, max: 6 });
        }
        let mut t = Self::constant(arity, false)?;
        if code & !t.tail_mask() != 0 {
            return Err(Error::IntegerOutOfRange { arity });
        }
        t.words[0] = code;
        Ok(t)
    }

    /// The `u64` code when the table fits a single word (arity <= 6).
    pub fn to_int_u64(&self) -> Option<u64> {
        if self.arity <= 6 {
            Some(self.words[0])
        } else {
            None
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    /// Number of table entries, `2^arity`.
    pub fn len(&self) -> usize {
        1usize << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Output bit at index `k`.
    pub fn bit(&self, k: usize) -> bool {
        debug_assert!(k < self.len());
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    fn set_bit(&mut self, k: usize, value: bool) {
        debug_assert!(k < self.len());
        let mask = 1u64 << (k % 64);
        if value {
            self.words[k / 64] |= mask;
        } else {
            self.words[k / 64] &= !mask;
        }
    }

    /// Evaluate on one input row.
    pub fn evaluate(&self, a: &Assignment) -> Result<bool> {
        if a.len() as u32 != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: a.len() as u32,
            });
        }
        Ok(self.bit(a.index()))
    }

    /// The restriction `f | x_i = a` as an `(n-1)`-variable table; remaining
    /// variables keep their relative order.
    pub fn cofactor(&self, variable: u32, input: bool) -> Result<Self> {
        self.check_variable(variable)?;
        let p = self.arity - variable;
        let low = (1usize << p) - 1;
        let mut out = Self::constant(self.arity - 1, false)?;
        for k_out in 0..out.len() {
            let k = ((k_out & !low) << 1) | ((input as usize) << p) | (k_out & low);
            if self.bit(k) {
                out.set_bit(k_out, true);
            }
        }
        Ok(out)
    }

    /// Whether `f | x_i = a` is constant, and if so with which value,
    /// without materializing the restriction.
    pub fn restriction_is_constant(&self, variable: u32, input: bool) -> Result<Option<bool>> {
        self.check_variable(variable)?;
        let p = self.arity - variable;
        let mut value: Option<bool> = None;
        if p >= 6 {
            // whole words alternate in blocks of 2^(p-6); no partial tail here
            for (w, &word) in self.words.iter().enumerate() {
                if (((w >> (p - 6)) & 1) == 1) != input {
                    continue;
                }
                let v = if word == 0 {
                    false
                } else if word == u64::MAX {
                    true
                } else {
                    return Ok(None);
                };
                match value {
                    None => value = Some(v),
                    Some(prev) if prev != v => return Ok(None),
                    _ => {}
                }
            }
        } else {
            let pat = IN_WORD_VARIABLE_MASKS[p as usize];
            let sel = if input { pat } else { !pat };
            let last = self.words.len() - 1;
            for (w, &word) in self.words.iter().enumerate() {
                let valid = if w == last { self.tail_mask() } else { u64::MAX };
                let m = sel & valid;
                if m == 0 {
                    continue;
                }
                let masked = word & m;
                let v = if masked == 0 {
                    false
                } else if masked == m {
                    true
                } else {
                    return Ok(None);
                };
                match value {
                    None => value = Some(v),
                    Some(prev) if prev != v => return Ok(None),
                    _ => {}
                }
            }
        }
        Ok(value)
    }

    /// Bitwise complement.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in &mut out.words {
            *w = !*w;
        }
        let mask = out.tail_mask();
        *out.words.last_mut().expect("at least one word") &= mask;
        out
    }

    /// Juxtaposition `fg`: the `(n+1)`-variable function whose `x1 = 0`
    /// cofactor is `self` and whose `x1 = 1` cofactor is `g`.
    pub fn concat(&self, g: &Self) -> Result<Self> {
        if g.arity != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: g.arity,
            });
        }
        Self::check_arity_bound(self.arity + 1)?;
        let mut out = Self::constant(self.arity + 1, false)?;
        let half = self.len();
        if half % 64 == 0 {
            let w = half / 64;
            out.words[..w].copy_from_slice(&self.words);
            out.words[w..].copy_from_slice(&g.words);
        } else {
            out.words[0] = self.words[0] | (g.words[0] << half);
        }
        Ok(out)
    }

    /// Insert a new variable at `position` (existing variables at or above
    /// it shift up): the new variable's `input` side is constant `output`
    /// and its other side is `self`.
    pub fn merge(&self, position: u32, input: bool, output: bool) -> Result<Self> {
        if position == 0 || position > self.arity + 1 {
            return Err(Error::PositionOutOfRange {
                position,
                arity: self.arity,
            });
        }
        Self::check_arity_bound(self.arity + 1)?;
        let res_arity = self.arity + 1;
        let p = res_arity - position;
        let low = (1usize << p) - 1;
        Self::from_fn(res_arity, |k| {
            if ((k >> p) & 1 == 1) == input {
                output
            } else {
                self.bit(((k >> (p + 1)) << p) | (k & low))
            }
        })
    }

    /// Number of 1-entries.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// Hamming distance to another table of the same arity.
    pub fn hamming(&self, g: &Self) -> Result<u64> {
        if g.arity != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: g.arity,
            });
        }
        Ok(self
            .words
            .iter()
            .zip(&g.words)
            .map(|(a, b)| (a ^ b).count_ones() as u64)
            .sum())
    }

    /// Minimum Hamming distance to the two constant functions.
    pub fn min_const_hd(&self) -> u64 {
        let w = self.weight();
        w.min(self.len() as u64 - w)
    }

    /// `Some(value)` when the table is constant.
    pub fn is_constant(&self) -> Option<bool> {
        let w = self.weight();
        if w == 0 {
            Some(false)
        } else if w == self.len() as u64 {
            Some(true)
        } else {
            None
        }
    }
}

impl Ord for TruthTable {
    /// Orders by arity, then by integer code; this is the order
    /// [`enumerate_all`] produces functions in.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity.cmp(&other.arity).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for TruthTable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_binary())
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruthTable(n={}, {})", self.arity, self.to_binary())
    }
}

impl Serialize for TruthTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TruthTable", 2)?;
        s.serialize_field("arity", &self.arity)?;
        s.serialize_field("bits", &self.to_binary())?;
        s.end()
    }
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment(values)
    }

    /// Decode index `k` into the row it addresses (`x1` most significant).
    pub fn from_index(k: usize, arity: u32) -> Self {
        Assignment(
            (1..=arity)
                .map(|j| (k >> (arity - j)) & 1 == 1)
                .collect(),
        )
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The table index this row addresses (`x1` most significant).
    pub fn index(&self) -> usize {
        self.0.iter().fold(0, |acc, &b| (acc << 1) | b as usize)
    }
}

impl From<&[bool]> for Assignment {
    fn from(values: &[bool]) -> Self {
        Assignment(values.to_vec())
    }
}

/// Parse `text` in the given encoding into an `arity`-variable table.
pub fn decode(text: &str, format: Format, arity: u32) -> Result<TruthTable> {
    match format {
        Format::Binary => TruthTable::from_binary(arity, text),
        Format::Hex => TruthTable::from_hex(arity, text),
        Format::Integer => {
            if text.is_empty() {
                return Err(Error::LengthMismatch {
                    expected: 1,
                    found: 0,
                });
            }
            if let Some(pos) = text.chars().position(|c| !c.is_ascii_digit()) {
                return Err(Error::InvalidCharacter {
                    ch: text.chars().nth(pos).expect("position in range"),
                    pos,
                });
            }
            let value = BigUint::parse_bytes(text.as_bytes(), 10).expect("digits only");
            TruthTable::from_int(arity, &value)
        }
    }
}

/// Render a table in the given encoding (inverse of [`decode`]).
pub fn encode(f: &TruthTable, format: Format) -> Result<String> {
    match format {
        Format::Binary => Ok(f.to_binary()),
        Format::Hex => f.to_hex(),
        Format::Integer => Ok(f.to_int().to_string()),
    }
}

/// Lazy stream over a contiguous range of integer codes, in ascending order.
#[derive(Debug, Clone)]
pub struct FunctionRange {
    arity: u32,
    next: u64,
    end: u64,
}

impl Iterator for FunctionRange {
    type Item = TruthTable;

    fn next(&mut self) -> Option<TruthTable> {
        if self.next >= self.end {
            return None;
        }
        let t = TruthTable::from_int_u64(self.arity, self.next).expect("code in range");
        self.next += 1;
        Some(t)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rem = (self.end - self.next) as usize;
        (rem, Some(rem))
    }
}

/// Number of `arity`-variable functions, when it fits a `u64` range.
pub fn function_count(arity: u32) -> Option<u64> {
    if arity <= MAX_ENUMERATION_ARITY {
        Some(1u64 << (1u64 << arity))
    } else {
        None
    }
}

/// Stream the functions with integer codes in `start..end`; the building
/// block for range-partitioned parallel sweeps.
pub fn functions_in_range(arity: u32, start: u64, end: u64) -> Result<FunctionRange> {
    let count = function_count(arity).ok_or(Error::EnumerationTooLarge {
        arity,
        max: MAX_ENUMERATION_ARITY,
    })?;
    if arity == 0 {
        return Err(Error::ArityTooSmall { arity, min: 1 });
    }
    let end = end.min(count);
    Ok(FunctionRange {
        arity,
        next: start.min(end),
        end,
    })
}

/// Stream all `2^(2^arity)` functions in ascending integer order.
pub fn enumerate_all(arity: u32) -> Result<FunctionRange> {
    let count = function_count(arity).ok_or(Error::EnumerationTooLarge {
        arity,
        max: MAX_ENUMERATION_ARITY,
    })?;
    functions_in_range(arity, 0, count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(arity: u32, bits: &str) -> TruthTable {
        TruthTable::from_binary(arity, bits).unwrap()
    }

    #[test]
    fn binary_integer_correspondence() {
        // output 1 only at input 00
        assert_eq!(tt(2, "1000").to_int(), BigUint::from(1u32));
        // XOR
        assert_eq!(tt(2, "0110").to_int(), BigUint::from(6u32));
        assert_eq!(
            TruthTable::from_int(2, &BigUint::from(6u32)).unwrap(),
            tt(2, "0110")
        );
        assert_eq!(
            TruthTable::from_int(3, &BigUint::from(0u32)).unwrap().to_binary(),
            "00000000"
        );
    }

    #[test]
    fn hex_groups_nibbles_from_bit_zero() {
        let f = tt(5, "11010000111100001111000011110000");
        assert_eq!(f.to_hex().unwrap(), "D0F0F0F0");
        assert_eq!(TruthTable::from_hex(5, "d0f0f0f0").unwrap(), f);
    }

    #[test]
    fn codec_errors() {
        assert_eq!(
            TruthTable::from_binary(2, "101"),
            Err(Error::LengthMismatch {
                expected: 4,
                found: 3
            })
        );
        assert_eq!(
            TruthTable::from_binary(2, "10x1"),
            Err(Error::InvalidCharacter { ch: 'x', pos: 2 })
        );
        assert_eq!(
            TruthTable::from_int(2, &BigUint::from(16u32)),
            Err(Error::IntegerOutOfRange { arity: 2 })
        );
        assert_eq!(
            TruthTable::from_hex(1, "1"),
            Err(Error::ArityTooSmall { arity: 1, min: 2 })
        );
        assert_eq!(
            decode("12c", Format::Integer, 3),
            Err(Error::InvalidCharacter { ch: 'c', pos: 2 })
        );
    }

    #[test]
    fn evaluate_follows_table_one() {
        let f = tt(3, "01010101");
        assert!(f.evaluate(&Assignment::new(vec![true, false, true])).unwrap());
        assert!(!f.evaluate(&Assignment::new(vec![true, true, false])).unwrap());
        let ones = TruthTable::constant(3, true).unwrap();
        assert!(ones.evaluate(&Assignment::from_index(5, 3)).unwrap());
        assert_eq!(
            f.evaluate(&Assignment::new(vec![true, false])),
            Err(Error::ArityMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn assignment_index_roundtrip() {
        for k in 0..16 {
            assert_eq!(Assignment::from_index(k, 4).index(), k);
        }
        assert_eq!(
            Assignment::from_index(5, 3).values(),
            &[true, false, true]
        );
    }

    #[test]
    fn cofactor_examples() {
        let f = tt(3, "01010101");
        assert_eq!(f.cofactor(3, true).unwrap(), tt(2, "1111"));
        assert_eq!(f.cofactor(1, false).unwrap(), tt(2, "0101"));
        assert_eq!(tt(2, "0001").cofactor(2, false).unwrap(), tt(1, "00"));
        assert_eq!(
            f.cofactor(4, false),
            Err(Error::VariableOutOfRange {
                variable: 4,
                arity: 3
            })
        );
    }

    #[test]
    fn cofactor_of_one_variable_function_is_a_cell() {
        let x = tt(1, "01");
        let c = x.cofactor(1, true).unwrap();
        assert_eq!(c.arity(), 0);
        assert_eq!(c.len(), 1);
        assert_eq!(c.is_constant(), Some(true));
    }

    #[test]
    fn complement_and_concat() {
        assert_eq!(tt(2, "0110").complement(), tt(2, "1001"));
        assert_eq!(
            tt(2, "0001").concat(&tt(2, "1111")).unwrap(),
            tt(3, "00011111")
        );
        let zero = tt(2, "0000");
        assert_eq!(
            zero.concat(&zero.complement()).unwrap(),
            TruthTable::projection(1, 3).unwrap()
        );
        assert_eq!(
            tt(2, "0001").concat(&tt(1, "01")),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn merge_examples() {
        let x = tt(1, "01");
        assert_eq!(x.merge(1, false, false).unwrap(), tt(2, "0001"));
        assert_eq!(x.merge(1, true, true).unwrap(), tt(2, "0111"));
        assert_eq!(x.merge(2, true, false).unwrap(), tt(2, "0010"));
        assert_eq!(
            x.merge(3, false, false),
            Err(Error::PositionOutOfRange {
                position: 3,
                arity: 1
            })
        );
    }

    #[test]
    fn weight_metrics() {
        assert_eq!(tt(2, "0001").min_const_hd(), 1);
        assert_eq!(tt(2, "0110").hamming(&tt(2, "1001")).unwrap(), 4);
        assert_eq!(tt(3, "11101111").min_const_hd(), 1);
    }

    #[test]
    fn projection_patterns() {
        assert_eq!(TruthTable::projection(1, 3).unwrap(), tt(3, "00001111"));
        assert_eq!(TruthTable::projection(3, 3).unwrap(), tt(3, "01010101"));
    }

    #[test]
    fn enumeration_is_integer_ordered() {
        let all: Vec<TruthTable> = enumerate_all(2).unwrap().collect();
        assert_eq!(all.len(), 16);
        assert_eq!(all[0], tt(2, "0000"));
        assert_eq!(all[1], tt(2, "1000"));
        assert_eq!(all[6], tt(2, "0110"));
        assert_eq!(all[15], tt(2, "1111"));
        for (code, f) in all.iter().enumerate() {
            assert_eq!(f.to_int_u64(), Some(code as u64));
        }
        assert!(matches!(
            enumerate_all(6),
            Err(Error::EnumerationTooLarge { arity: 6, .. })
        ));
    }

    #[test]
    fn ranges_partition_the_stream() {
        let whole: Vec<TruthTable> = enumerate_all(2).unwrap().collect();
        let mut parts: Vec<TruthTable> = functions_in_range(2, 0, 5).unwrap().collect();
        parts.extend(functions_in_range(2, 5, 16).unwrap());
        assert_eq!(whole, parts);
    }

    #[test]
    fn restriction_constancy_matches_cofactor() {
        for code in 0..256u64 {
            let f = TruthTable::from_int_u64(3, code).unwrap();
            for i in 1..=3 {
                for a in [false, true] {
                    assert_eq!(
                        f.restriction_is_constant(i, a).unwrap(),
                        f.cofactor(i, a).unwrap().is_constant(),
                        "code {code}, i {i}, a {a}"
                    );
                }
            }
        }
    }

    #[test]
    fn ordering_matches_integer_codes() {
        let mut v: Vec<TruthTable> = enumerate_all(2).unwrap().collect();
        v.reverse();
        v.sort();
        for (code, f) in v.iter().enumerate() {
            assert_eq!(f.to_int_u64(), Some(code as u64));
        }
    }
}
