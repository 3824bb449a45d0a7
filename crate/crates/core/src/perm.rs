//! Linear and cyclic permutations of `{1, …, n}`.
//!
//! Values and positions are 1-based at every public boundary. Storage is a
//! plain `Vec<u32>` of values, indexed 0-based internally.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A linear arrangement of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is exactly a rearrangement of `1..=len`.
    pub fn new(values: Vec<u32>) -> Result<Self> {
        validate(values.iter().map(|&v| i64::from(v)))?;
        Ok(Permutation { values })
    }

    /// Like [`Permutation::new`] but accepts arbitrary integers, so that
    /// negative or oversized input is reported rather than truncated.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        validate(values.iter().copied())?;
        Ok(Permutation {
            values: values.iter().map(|&v| v as u32).collect(),
        })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(validate(values.iter().map(|&v| i64::from(v))).is_ok());
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutation length must be positive");
        Permutation {
            values: (1..=n as u32).collect(),
        }
    }

    /// `[n, n-1, …, 1]`.
    pub fn decreasing(n: usize) -> Self {
        assert!(n >= 1, "permutation length must be positive");
        Permutation {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false: permutations have at least one element.
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The value at 1-based position `t`.
    pub fn at(&self, t: usize) -> u32 {
        self.values[t - 1]
    }

    /// The rotation that starts at 0-based offset `start`.
    pub fn rotation(&self, start: usize) -> Permutation {
        let n = self.len();
        let start = start % n;
        let mut values = Vec::with_capacity(n);
        values.extend_from_slice(&self.values[start..]);
        values.extend_from_slice(&self.values[..start]);
        Permutation { values }
    }

    /// All `n` rotations ordered by starting index; the first is `self`.
    pub fn rotations(&self) -> Vec<Permutation> {
        (0..self.len()).map(|s| self.rotation(s)).collect()
    }

    /// The value-complement `n + 1 - a_t`, which swaps increasing and
    /// decreasing subsequences.
    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32 + 1;
        Permutation {
            values: self.values.iter().map(|&v| n - v).collect(),
        }
    }

    pub fn reversed(&self) -> Permutation {
        Permutation {
            values: self.values.iter().rev().copied().collect(),
        }
    }

    /// Adds 1 to every value and prepends 1, closing the sequence into the
    /// cycle `(1, a_1 + 1, …, a_n + 1)`. Inverse of [`shift_down`].
    pub fn shift_up_cyclic(&self) -> CyclicPermutation {
        let mut values = Vec::with_capacity(self.len() + 1);
        values.push(1);
        values.extend(self.values.iter().map(|&v| v + 1));
        CyclicPermutation {
            canonical: Permutation { values },
        }
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.values
    }
}

impl TryFrom<Vec<i64>> for Permutation {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        Permutation::from_signed(&values)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.values)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (values, _) = parse_values(s)?;
        Permutation::from_signed(&values)
    }
}

/// Decrements every value of the tail of a canonical cycle (the part after
/// the leading 1). The tail must be a rearrangement of `2..=n+1`.
pub fn shift_down(tail: &[u32]) -> Result<Permutation> {
    if let Some(pos) = tail.iter().position(|&v| v == 1) {
        return Err(Error::ContainsOne { position: pos + 1 });
    }
    let shifted: Vec<i64> = tail.iter().map(|&v| i64::from(v) - 1).collect();
    Permutation::from_signed(&shifted)
}

/// A permutation up to rotation, stored in the rotation that begins with 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct CyclicPermutation {
    canonical: Permutation,
}

impl CyclicPermutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        Ok(Self::from_permutation(&Permutation::new(values)?))
    }

    pub fn from_signed(values: &[i64]) -> Result<Self> {
        Ok(Self::from_permutation(&Permutation::from_signed(values)?))
    }

    /// The cycle obtained by joining the ends of `p`.
    pub fn from_permutation(p: &Permutation) -> Self {
        let one = p.values.iter().position(|&v| v == 1).expect("permutation contains 1");
        CyclicPermutation {
            canonical: p.rotation(one),
        }
    }

    /// `(1, 2, …, n)`.
    pub fn increasing(n: usize) -> Self {
        CyclicPermutation {
            canonical: Permutation::identity(n),
        }
    }

    /// `(n, n-1, …, 1)`, canonically `(1, n, n-1, …, 2)`.
    pub fn decreasing(n: usize) -> Self {
        Self::from_permutation(&Permutation::decreasing(n))
    }

    pub fn canonical(&self) -> &Permutation {
        &self.canonical
    }

    pub fn values(&self) -> &[u32] {
        self.canonical.values()
    }

    /// The canonical form without its leading 1.
    pub fn tail(&self) -> &[u32] {
        &self.canonical.values[1..]
    }

    pub fn len(&self) -> usize {
        self.canonical.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl From<CyclicPermutation> for Vec<u32> {
    fn from(c: CyclicPermutation) -> Self {
        c.canonical.values
    }
}

impl TryFrom<Vec<i64>> for CyclicPermutation {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        CyclicPermutation::from_signed(&values)
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_joined(f, self.values())?;
        f.write_str(")")
    }
}

impl FromStr for CyclicPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (values, _) = parse_values(s)?;
        CyclicPermutation::from_signed(&values)
    }
}

/// Direction of a monotone subsequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    /// Whether `a` followed by `b` continues a run in this direction.
    #[inline]
    pub fn admits(self, a: u32, b: u32) -> bool {
        match self {
            Direction::Increasing => a < b,
            Direction::Decreasing => a > b,
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::Increasing => Direction::Decreasing,
            Direction::Decreasing => Direction::Increasing,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Increasing => "increasing",
            Direction::Decreasing => "decreasing",
        })
    }
}

/// A monotone sub-permutation together with where it sits in its host.
///
/// `positions` are 1-based indices into the host (the canonical form for a
/// cyclic host), listed in traversal order. For a cyclic host the traversal
/// starts at `positions[0]` and may wrap past the end.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubPermutationWitness {
    pub positions: Vec<usize>,
    pub values: Vec<u32>,
    pub direction: Direction,
}

impl SubPermutationWitness {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Values strictly monotone in the declared direction.
    pub fn is_monotone(&self) -> bool {
        self.values
            .windows(2)
            .all(|w| self.direction.admits(w[0], w[1]))
    }

    /// Positions appear in cyclic order around a host of length `n`: walking
    /// forward from the first position visits them in the listed order within
    /// one lap.
    pub fn is_cyclically_ordered(&self, n: usize) -> bool {
        let Some(&first) = self.positions.first() else {
            return true;
        };
        let offset = |p: usize| (p + n - first) % n;
        self.positions.iter().all(|&p| p >= 1 && p <= n)
            && self
                .positions
                .windows(2)
                .all(|w| offset(w[0]) < offset(w[1]))
    }
}

/// Steps `items` to the next permutation in lexicographic order; returns
/// `false` (and leaves the slice sorted ascending) after the last one.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    let n = items.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = n - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

/// Parses `"2,1,3"` or `"(6,1,4,2,7,3,5)"`. Whitespace around tokens is
/// ignored. Returns the integers and whether parentheses were present.
pub fn parse_values(text: &str) -> Result<(Vec<i64>, bool)> {
    let trimmed = text.trim();
    let (body, parenthesized) = match (trimmed.strip_prefix('('), trimmed.strip_suffix(')')) {
        (Some(_), Some(_)) if trimmed.len() >= 2 => (&trimmed[1..trimmed.len() - 1], true),
        (None, None) => (trimmed, false),
        _ => return Err(Error::Parse(format!("unbalanced parentheses in {text:?}"))),
    };
    if body.trim().is_empty() {
        return Err(Error::EmptyInput);
    }
    let values = body
        .split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("token {} ({tok:?}) is not an integer", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((values, parenthesized))
}

fn validate(values: impl ExactSizeIterator<Item = i64>) -> Result<()> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let mut seen = vec![0usize; n + 1];
    for (i, v) in values.enumerate() {
        let position = i + 1;
        if v < 1 || v > n as i64 {
            return Err(Error::OutOfRangeValue { position, value: v, n });
        }
        let slot = &mut seen[v as usize];
        if *slot != 0 {
            return Err(Error::DuplicateValue {
                value: v,
                first: *slot,
                second: position,
            });
        }
        *slot = position;
    }
    Ok(())
}

fn write_joined(f: &mut fmt::Formatter<'_>, values: &[u32]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}
