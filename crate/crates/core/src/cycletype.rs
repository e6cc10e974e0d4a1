//! Cycle types of permutations and their text form.
//!
//! A cycle type records how many cycles of each length a permutation has.
//! It is stored sparsely: lengths that do not occur are simply absent.
//!
//! The text form is a comma-separated list of `ℓ^c` terms (or a bare `ℓ`
//! for multiplicity one), e.g. `1^4` or `2^2,5`. The canonical rendering
//! lists lengths in ascending order and always writes the multiplicity.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use thiserror::Error;

/// Sign of a permutation: `Plus` for even, `Minus` for odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^e`.
    pub fn from_exponent(e: u64) -> Sign {
        if e.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_even(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseCycleTypeError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: &'static str },
    #[error("cycle length {0} appears more than once")]
    DuplicateLength(u32),
    #[error("cycle length must be at least 1 (position {pos})")]
    ZeroLength { pos: usize },
    #[error("multiplicity of length {length} must be at least 1 (position {pos})")]
    ZeroMultiplicity { length: u32, pos: usize },
    #[error("total size overflows")]
    TooLarge,
}

/// Multiplicities `c_ℓ` of each cycle length `ℓ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: BTreeMap<u32, u32>,
    n: u64,
}

impl CycleType {
    /// The type of the empty permutation in `S_0`.
    pub fn empty() -> CycleType {
        CycleType::default()
    }

    /// The identity of `S_n`, i.e. `1^n`.
    pub fn identity(n: u32) -> CycleType {
        CycleType::from_parts([(1, n)])
    }

    /// Builds a cycle type from `(length, multiplicity)` pairs. Zero
    /// multiplicities are dropped; repeated lengths accumulate.
    ///
    /// Panics on a zero length with nonzero multiplicity.
    pub fn from_parts<I: IntoIterator<Item = (u32, u32)>>(parts: I) -> CycleType {
        let mut map = BTreeMap::new();
        for (length, mult) in parts {
            if mult == 0 {
                continue;
            }
            assert!(length >= 1, "cycle length must be positive");
            *map.entry(length).or_insert(0) += mult;
        }
        let n = map.iter().map(|(&l, &c)| l as u64 * c as u64).sum();
        CycleType { parts: map, n }
    }

    /// Builds a cycle type from the dense vector `(c_1, c_2, ...)`.
    pub fn from_multiplicities(mults: &[u32]) -> CycleType {
        CycleType::from_parts(mults.iter().enumerate().map(|(i, &c)| (i as u32 + 1, c)))
    }

    /// Total size `n = Σ ℓ·c_ℓ`.
    pub fn size(&self) -> u64 {
        self.n
    }

    /// Multiplicity of `length` (zero when absent).
    pub fn multiplicity(&self, length: u32) -> u32 {
        self.parts.get(&length).copied().unwrap_or(0)
    }

    /// `(length, multiplicity)` pairs in ascending length order.
    pub fn parts(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().map(|(&l, &c)| (l, c))
    }

    /// Number of distinct cycle lengths.
    pub fn distinct_lengths(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Total number of cycles, fixed points included.
    pub fn cycle_count(&self) -> u64 {
        self.parts.values().map(|&c| c as u64).sum()
    }

    /// Dense vector `(c_1, ..., c_n)`.
    pub fn multiplicities(&self) -> Vec<u32> {
        (1..=self.n as u32).map(|l| self.multiplicity(l)).collect()
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (l, c)) in self.parts().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}^{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CycleType {
    type Err = ParseCycleTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_cycle_type(s)
    }
}

/// Canonical text form: ascending lengths, `ℓ^c` terms joined by commas.
pub fn format_cycle_type(c: &CycleType) -> String {
    c.to_string()
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<(u32, usize), ParseCycleTypeError> {
        let start = self.pos;
        let mut value: u32 = 0;
        while let Some(b) = self.peek().filter(u8::is_ascii_digit) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u32))
                .ok_or(ParseCycleTypeError::Syntax {
                    pos: start,
                    msg: "number too large",
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(ParseCycleTypeError::Syntax {
                pos: start,
                msg: "expected a number",
            });
        }
        Ok((value, start))
    }
}

/// Parses `term ("," term)*` where `term` is `ℓ^c` or a bare `ℓ`.
///
/// Whitespace around tokens is ignored. An empty (or all-whitespace) string
/// denotes the empty cycle type of `S_0`.
pub fn parse_cycle_type(text: &str) -> Result<CycleType, ParseCycleTypeError> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut parts = BTreeMap::new();
    cur.skip_ws();
    if cur.peek().is_none() {
        return Ok(CycleType::empty());
    }
    loop {
        cur.skip_ws();
        let (length, lpos) = cur.number()?;
        if length == 0 {
            return Err(ParseCycleTypeError::ZeroLength { pos: lpos });
        }
        cur.skip_ws();
        let mult = if cur.peek() == Some(b'^') {
            cur.pos += 1;
            cur.skip_ws();
            let (c, cpos) = cur.number()?;
            if c == 0 {
                return Err(ParseCycleTypeError::ZeroMultiplicity { length, pos: cpos });
            }
            c
        } else {
            1
        };
        if parts.insert(length, mult).is_some() {
            return Err(ParseCycleTypeError::DuplicateLength(length));
        }
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(b',') => cur.pos += 1,
            Some(_) => {
                return Err(ParseCycleTypeError::Syntax {
                    pos: cur.pos,
                    msg: "expected ',' or '^'",
                })
            }
        }
    }
    let mut n: u64 = 0;
    for (&l, &c) in &parts {
        n = (l as u64)
            .checked_mul(c as u64)
            .and_then(|v| n.checked_add(v))
            .ok_or(ParseCycleTypeError::TooLarge)?;
    }
    Ok(CycleType { parts, n })
}

/// Every cycle type of total size `n`, each exactly once.
///
/// Ordered by descending lexicographic order of the multiplicity vector
/// `(c_1, ..., c_n)`, so `1^n` comes first and the single `n`-cycle last.
pub fn partitions_of(n: u32) -> Vec<CycleType> {
    fn go(
        length: u32,
        n: u32,
        remaining: u32,
        acc: &mut Vec<(u32, u32)>,
        out: &mut Vec<CycleType>,
    ) {
        if remaining == 0 {
            out.push(CycleType::from_parts(acc.iter().copied()));
            return;
        }
        if length > n {
            return;
        }
        for c in (0..=remaining / length).rev() {
            acc.push((length, c));
            go(length + 1, n, remaining - c * length, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, n, &mut Vec::new(), &mut out);
    out
}

/// Sign of any permutation of type `c`: `∏_ℓ ((-1)^(ℓ+1))^(c_ℓ)`.
pub fn parity_of_type(c: &CycleType) -> Sign {
    let e: u64 = c.parts().map(|(l, m)| (l as u64 + 1) * m as u64).sum();
    Sign::from_exponent(e)
}
