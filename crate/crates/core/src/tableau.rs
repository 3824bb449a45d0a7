//! Standard Young tableaux on rectangular shapes.
//!
//! A tableau has `rows` rows (ℓ) and `cols` columns (k). Entries are
//! addressed 1-based as `(i, j)` with `i` the row and `j` the column.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact nonnegative count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }

    pub fn square(&self) -> BigCount {
        BigCount(&self.0 * &self.0)
    }

    /// Whether the count is at most `cap`.
    pub fn fits(&self, cap: u64) -> bool {
        self.0 <= BigUint::from(cap)
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Serialized as a JSON number when it fits in `u64`, otherwise as a
/// decimal string.
impl Serialize for BigCount {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_u64() {
            Some(v) => serializer.serialize_u64(v),
            None => serializer.serialize_str(&self.0.to_str_radix(10)),
        }
    }
}

/// A standard Young tableau of rectangular shape `rows × cols`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct YoungTableau {
    rows: usize,
    cols: usize,
    // row-major
    entries: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i64>>,
}

impl TryFrom<TableauJson> for YoungTableau {
    type Error = Error;

    fn try_from(j: TableauJson) -> Result<Self> {
        validate_syt(j.rows, j.cols, &j.entries)
    }
}

impl From<YoungTableau> for TableauJson {
    fn from(t: YoungTableau) -> Self {
        TableauJson {
            rows: t.rows,
            cols: t.cols,
            entries: t
                .row_vecs()
                .into_iter()
                .map(|r| r.into_iter().map(i64::from).collect())
                .collect(),
        }
    }
}

impl YoungTableau {
    /// Builds a tableau from a row-major entry list. The result is checked.
    pub fn from_row_major(rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape { rows, cols });
        }
        if entries.len() != rows * cols {
            return Err(Error::NotAPermutationFilling {
                expected_max: rows * cols,
            });
        }
        let t = YoungTableau {
            rows,
            cols,
            entries,
        };
        t.check()?;
        Ok(t)
    }

    pub(crate) fn from_row_major_unchecked(rows: usize, cols: usize, entries: Vec<u32>) -> Self {
        let t = YoungTableau {
            rows,
            cols,
            entries,
        };
        debug_assert!(t.check().is_ok());
        t
    }

    /// Filling `1..=rows*cols` left to right, top to bottom.
    pub fn row_reading(rows: usize, cols: usize) -> Result<Self> {
        Self::from_row_major(rows, cols, (1..=(rows * cols) as u32).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based row `i`, column `j`.
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn row_major(&self) -> &[u32] {
        &self.entries
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.cols).map(<[u32]>::to_vec).collect()
    }

    /// Cell `(i, j)` holding each entry, indexed by entry − 1.
    pub fn cells_by_entry(&self) -> Vec<(usize, usize)> {
        let mut cells = vec![(0, 0); self.entries.len()];
        for (idx, &v) in self.entries.iter().enumerate() {
            cells[v as usize - 1] = (idx / self.cols + 1, idx % self.cols + 1);
        }
        cells
    }

    pub fn same_shape(&self, other: &YoungTableau) -> bool {
        self.rows == other.rows && self.cols == other.cols
    }

    fn check(&self) -> Result<()> {
        let n = self.rows * self.cols;
        let mut seen = vec![false; n + 1];
        for &v in &self.entries {
            let v = v as usize;
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotAPermutationFilling { expected_max: n });
            }
        }
        for i in 1..=self.rows {
            if (2..=self.cols).any(|j| self.entry(i, j - 1) >= self.entry(i, j)) {
                return Err(Error::RowNotIncreasing(i));
            }
        }
        for j in 1..=self.cols {
            if (2..=self.rows).any(|i| self.entry(i - 1, j) >= self.entry(i, j)) {
                return Err(Error::ColumnNotIncreasing(j));
            }
        }
        Ok(())
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.cols).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// Checks an `rows × cols` integer matrix and returns it as a tableau.
pub fn validate_syt(rows: usize, cols: usize, entries: &[Vec<i64>]) -> Result<YoungTableau> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidShape { rows, cols });
    }
    if entries.len() != rows {
        return Err(Error::Ragged {
            row: entries.len().min(rows) + 1,
            found: 0,
            expected: cols,
        });
    }
    let n = rows * cols;
    let mut flat = Vec::with_capacity(n);
    for (i, row) in entries.iter().enumerate() {
        if row.len() != cols {
            return Err(Error::Ragged {
                row: i + 1,
                found: row.len(),
                expected: cols,
            });
        }
        for &v in row {
            if v < 1 || v > n as i64 {
                return Err(Error::NotAPermutationFilling { expected_max: n });
            }
            flat.push(v as u32);
        }
    }
    YoungTableau::from_row_major(rows, cols, flat)
}

/// Like [`validate_syt`], taking the shape from the matrix itself.
pub fn tableau_from_matrix(entries: &[Vec<i64>]) -> Result<YoungTableau> {
    let rows = entries.len();
    let cols = entries.first().map_or(0, Vec::len);
    validate_syt(rows, cols, entries)
}

fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, i| acc * i)
}

/// Number of standard Young tableaux of the `rows × cols` rectangle,
/// `(rows·cols)!` over the product of hook lengths.
pub fn count_syt_rect(rows: usize, cols: usize) -> Result<BigCount> {
    if rows == 0 || cols == 0 {
        return Err(Error::InvalidShape { rows, cols });
    }
    // Hook of cell (i, j), 0-based: arm + leg + 1.
    let hooks = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| ((cols - 1 - j) + (rows - 1 - i) + 1) as u64))
        .fold(BigUint::one(), |acc, h| acc * h);
    let (quotient, remainder) = factorial(rows * cols).div_rem(&hooks);
    assert!(remainder.is_zero(), "hook-length division must be exact");
    Ok(BigCount(quotient))
}

/// `|S(k, l)|`: permutations of length `k·l` with no increasing subsequence
/// of length `k + 1` and no decreasing one of length `l + 1`. This is the
/// square of the `l × k` tableau count.
pub fn count_extremal_linear(k: usize, l: usize) -> Result<BigCount> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidShape { rows: l, cols: k });
    }
    Ok(count_syt_rect(l, k)?.square())
}

/// Enumerates every SYT of the `rows × cols` rectangle in lexicographic
/// order of the row-major entry sequence. Fails with `BudgetExceeded` when
/// the count is above `cap`.
pub fn enumerate_syt_rect(rows: usize, cols: usize, cap: u64) -> Result<SytIter> {
    let count = count_syt_rect(rows, cols)?;
    if !count.fits(cap) {
        return Err(Error::BudgetExceeded {
            required: count.to_string(),
            cap,
        });
    }
    Ok(SytIter::new(rows, cols))
}

/// Depth-first generator of rectangular SYT.
///
/// Cells are filled in row-major order and each cell tries candidate values
/// in increasing order, so completed fillings come out sorted. A candidate
/// `v` for cell `(r, c)` must exceed its left and upper neighbours, must
/// leave enough unused larger values for the cells weakly below-right of
/// it, and must not strand more unused smaller values than the cells
/// strictly below-left can take.
pub struct SytIter {
    rows: usize,
    cols: usize,
    n: usize,
    filled: Vec<u32>,
    // candidate to try next at each depth
    next_candidate: Vec<u32>,
    used: Vec<bool>,
    done: bool,
}

impl SytIter {
    fn new(rows: usize, cols: usize) -> Self {
        let n = rows * cols;
        SytIter {
            rows,
            cols,
            n,
            filled: Vec::with_capacity(n),
            next_candidate: vec![0; n + 1],
            used: vec![false; n + 2],
            done: false,
        }
    }

    fn lower_bound(&self, cell: usize) -> u32 {
        let (r, c) = (cell / self.cols, cell % self.cols);
        let left = if c > 0 { self.filled[cell - 1] } else { 0 };
        let up = if r > 0 { self.filled[cell - self.cols] } else { 0 };
        left.max(up) + 1
    }

    fn admissible(&self, cell: usize, v: u32) -> bool {
        if self.used[v as usize] {
            return false;
        }
        let (r, c) = (cell / self.cols, cell % self.cols);
        let unused_above = (v as usize + 1..=self.n).filter(|&u| !self.used[u]).count();
        let dominated = (self.rows - r) * (self.cols - c) - 1;
        if unused_above < dominated {
            return false;
        }
        let unused_below = (1..v as usize).filter(|&u| !self.used[u]).count();
        unused_below <= (self.rows - 1 - r) * c
    }
}

impl Iterator for SytIter {
    type Item = YoungTableau;

    fn next(&mut self) -> Option<YoungTableau> {
        if self.done {
            return None;
        }
        // After a yield, resume by backtracking from the last cell.
        if self.filled.len() == self.n {
            let v = self.filled.pop().expect("nonempty");
            self.used[v as usize] = false;
        } else if self.filled.is_empty() {
            self.next_candidate[0] = self.lower_bound(0);
        }
        loop {
            let depth = self.filled.len();
            let mut placed = false;
            let mut v = self.next_candidate[depth];
            while (v as usize) <= self.n {
                if self.admissible(depth, v) {
                    self.used[v as usize] = true;
                    self.filled.push(v);
                    self.next_candidate[depth] = v + 1;
                    placed = true;
                    break;
                }
                v += 1;
            }
            if placed {
                if self.filled.len() == self.n {
                    return Some(YoungTableau::from_row_major_unchecked(
                        self.rows,
                        self.cols,
                        self.filled.clone(),
                    ));
                }
                let d = self.filled.len();
                self.next_candidate[d] = self.lower_bound(d);
            } else {
                match self.filled.pop() {
                    Some(prev) => self.used[prev as usize] = false,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
        }
    }
}
