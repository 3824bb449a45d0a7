//! The cyclic Erdős–Szekeres bound and its extremal cycles.
//!
//! Every cycle of length `(k-1)(l-1) + 2` has an increasing cyclic
//! sub-permutation of length `k + 1` or a decreasing one of length `l + 1`.
//! At one less, the cycles avoiding both (the class `C(k, l)`) are one or two
//! explicit constructions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::grid::phi_inverse;
use crate::monotone::{cyclic_lds_length, cyclic_length, cyclic_lis_length};
use crate::perm::{next_permutation, CyclicPermutation, Direction, Permutation};
use crate::tableau::{count_syt_rect, enumerate_syt_rect};

/// Default cap on the number of candidates an enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Smallest length forcing a long monotone cyclic sub-permutation.
pub fn alpha(k: usize, l: usize) -> Result<usize> {
    if k < 1 || l < 1 {
        return Err(Error::InvalidBound { k, l, min: 1 });
    }
    Ok((k - 1) * (l - 1) + 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StructureKind {
    /// `a[(j-1)(l-1) + i] = (l-1-i)(k-1) + j + 1`: consecutive decreasing
    /// blocks of length `l - 1`.
    #[serde(rename = "i")]
    I,
    /// `a[(i-1)(k-1) + j] = (j-1)(l-1) + (l-i) + 1`: consecutive increasing
    /// blocks of length `k - 1`.
    #[serde(rename = "ii")]
    II,
}

impl fmt::Display for StructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructureKind::I => "i",
            StructureKind::II => "ii",
        })
    }
}

impl FromStr for StructureKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "i" | "I" | "1" => Ok(StructureKind::I),
            "ii" | "II" | "2" => Ok(StructureKind::II),
            other => Err(format!("unknown structure {other:?}; expected i or ii")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalStructure {
    pub kind: StructureKind,
    pub k: usize,
    #[serde(rename = "ℓ")]
    pub l: usize,
    pub cyclic: CyclicPermutation,
}

pub fn construct_extremal(k: usize, l: usize, kind: StructureKind) -> Result<ExtremalStructure> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidBound { k, l, min: 2 });
    }
    let m = (k - 1) * (l - 1);
    let mut values = vec![0u32; m + 1];
    values[0] = 1;
    // values[t] is a_t: index 0 holds the leading 1.
    for i in 1..l {
        for j in 1..k {
            let (pos, val) = match kind {
                StructureKind::I => ((j - 1) * (l - 1) + i, (l - 1 - i) * (k - 1) + j + 1),
                StructureKind::II => ((i - 1) * (k - 1) + j, (j - 1) * (l - 1) + (l - i) + 1),
            };
            values[pos] = val as u32;
        }
    }
    Ok(ExtremalStructure {
        kind,
        k,
        l,
        cyclic: CyclicPermutation::new(values).expect("extremal formula yields a permutation"),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub length: usize,
    pub expected_length: usize,
    pub cyclic_lis: usize,
    pub cyclic_lds: usize,
    pub is_member: bool,
}

/// Checks membership of `c` in `C(k, l)`.
pub fn verify_extremal(c: &CyclicPermutation, k: usize, l: usize) -> ExtremalReport {
    let cyclic_lis = cyclic_lis_length(c);
    let cyclic_lds = cyclic_lds_length(c);
    let expected_length = k.saturating_sub(1) * l.saturating_sub(1) + 1;
    ExtremalReport {
        length: c.len(),
        expected_length,
        cyclic_lis,
        cyclic_lds,
        is_member: c.len() == expected_length && cyclic_lis <= k && cyclic_lds <= l,
    }
}

/// Decreasing blocks `D_1..D_{k-1}` and increasing blocks `C_1..C_{l-1}`
/// partitioning the tail. Positions are 1-based tail indices; block values
/// are read in position order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionWitness {
    pub decreasing_blocks: Vec<Vec<usize>>,
    pub increasing_blocks: Vec<Vec<usize>>,
}

impl PartitionWitness {
    fn values_of(tail: &[u32], blocks: &[Vec<usize>]) -> Vec<Vec<u32>> {
        blocks
            .iter()
            .map(|b| b.iter().map(|&t| tail[t - 1]).collect())
            .collect()
    }

    pub fn decreasing_values(&self, s: &ExtremalStructure) -> Vec<Vec<u32>> {
        Self::values_of(s.cyclic.tail(), &self.decreasing_blocks)
    }

    pub fn increasing_values(&self, s: &ExtremalStructure) -> Vec<Vec<u32>> {
        Self::values_of(s.cyclic.tail(), &self.increasing_blocks)
    }
}

/// The block partition showing neither long monotone cycle exists.
///
/// Structure i: `D_i` is the `i`-th run of `l - 1` consecutive positions and
/// `C_i` the positions of the values `c_i, …, c_i + k - 2` with
/// `c_i = 2 + (i-1)(k-1)`. Structure ii mirrors this: `C_i` is the `i`-th run
/// of `k - 1` consecutive positions and `D_j` the positions of the values
/// `(j-1)(l-1) + 2, …, j(l-1) + 1`.
pub fn partition_witness(s: &ExtremalStructure) -> PartitionWitness {
    let (k, l) = (s.k, s.l);
    let tail = s.cyclic.tail();
    let mut position_of = vec![0usize; tail.len() + 2];
    for (t, &v) in tail.iter().enumerate() {
        position_of[v as usize] = t + 1;
    }
    let positions_of_values = |lo: usize, count: usize| -> Vec<usize> {
        let mut ps: Vec<usize> = (lo..lo + count).map(|v| position_of[v]).collect();
        ps.sort_unstable();
        ps
    };
    let runs = |len: usize, count: usize| -> Vec<Vec<usize>> {
        (0..count)
            .map(|b| (b * len + 1..=(b + 1) * len).collect())
            .collect()
    };
    match s.kind {
        StructureKind::I => PartitionWitness {
            decreasing_blocks: runs(l - 1, k - 1),
            increasing_blocks: (0..l - 1)
                .map(|i| positions_of_values(2 + i * (k - 1), k - 1))
                .collect(),
        },
        StructureKind::II => PartitionWitness {
            decreasing_blocks: (0..k - 1)
                .map(|j| positions_of_values(2 + j * (l - 1), l - 1))
                .collect(),
            increasing_blocks: runs(k - 1, l - 1),
        },
    }
}

fn budget_error(required: impl ToString, cap: u64) -> Error {
    Error::BudgetExceeded {
        required: required.to_string(),
        cap,
    }
}

/// All of `C(k, l)`, sorted by canonical form.
///
/// Each member is `(1, a_1 + 1, …)` for some `[a_1, …]` in `S(k-1, l-1)`, so
/// the candidates are the images of all tableau pairs of shape
/// `(l-1) × (k-1)`, filtered by [`verify_extremal`].
pub fn enumerate_extremal(k: usize, l: usize, cap: u64) -> Result<Vec<CyclicPermutation>> {
    enumerate_extremal_with(k, l, cap, Execution::default())
}

pub fn enumerate_extremal_with(
    k: usize,
    l: usize,
    cap: u64,
    exec: Execution,
) -> Result<Vec<CyclicPermutation>> {
    if k < 2 || l < 2 {
        return Err(Error::InvalidBound { k, l, min: 2 });
    }
    let (rows, cols) = (l - 1, k - 1);
    let pairs = count_syt_rect(rows, cols)?.square();
    if !pairs.fits(cap) {
        return Err(budget_error(pairs, cap));
    }
    let tableaux: Vec<_> = enumerate_syt_rect(rows, cols, cap)?.collect();
    let per_ranking = exec.map_indexed(tableaux.len(), |r| {
        tableaux
            .iter()
            .filter_map(|v| {
                let tail = phi_inverse(&tableaux[r], v).expect("same shape");
                let c = tail.shift_up_cyclic();
                verify_extremal(&c, k, l).is_member.then_some(c)
            })
            .collect::<Vec<_>>()
    });
    let mut found: Vec<CyclicPermutation> = per_ranking.into_iter().flatten().collect();
    found.sort();
    found.dedup();
    Ok(found)
}

/// Result of scanning every cycle at lengths `alpha` and `alpha - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlphaReport {
    pub k: usize,
    #[serde(rename = "ℓ")]
    pub l: usize,
    pub alpha: usize,
    /// Cycles of length `alpha` examined.
    pub n_tested: u64,
    pub all_forced: bool,
    /// Members of `C(k, l)` found by the raw scan at length `alpha - 1`.
    pub survivors: Vec<CyclicPermutation>,
}

impl AlphaReport {
    pub fn survivor_count(&self) -> usize {
        self.survivors.len()
    }
}

fn factorial_u64(n: usize) -> Option<u64> {
    (2..=n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i))
}

/// Visits every cycle of length `n` (tails of `2..=n` after the leading 1),
/// grouped by the first tail element so groups can run in parallel.
/// Returns, per group, whatever `visit` accumulates.
fn scan_cycles<T, F>(n: usize, exec: Execution, visit: F) -> Vec<T>
where
    T: Send + Default,
    F: Fn(&mut T, &CyclicPermutation) + Sync + Send,
{
    if n == 1 {
        let mut acc = T::default();
        visit(&mut acc, &CyclicPermutation::increasing(n));
        return vec![acc];
    }
    exec.map_indexed(n - 1, |g| {
        let first = g as u32 + 2;
        let mut rest: Vec<u32> = (2..=n as u32).filter(|&v| v != first).collect();
        let mut values = Vec::with_capacity(n);
        let mut acc = T::default();
        loop {
            values.clear();
            values.push(1);
            values.push(first);
            values.extend_from_slice(&rest);
            let c = CyclicPermutation::new(values.clone()).expect("tail of 2..=n");
            visit(&mut acc, &c);
            if !next_permutation(&mut rest) {
                break;
            }
        }
        acc
    })
}

/// Whether `c` has an increasing cyclic sub-permutation longer than `k` or a
/// decreasing one longer than `l`.
pub fn is_forced(c: &CyclicPermutation, k: usize, l: usize) -> bool {
    cyclic_length(c, Direction::Increasing) > k || cyclic_length(c, Direction::Decreasing) > l
}

/// Exhaustively confirms the bound at `alpha(k, l)` and collects the
/// survivors one below it. Both scans run over raw cycles, independently of
/// the tableau route in [`enumerate_extremal`].
pub fn verify_alpha_exhaustive(k: usize, l: usize, cap: u64) -> Result<AlphaReport> {
    verify_alpha_exhaustive_with(k, l, cap, Execution::default())
}

pub fn verify_alpha_exhaustive_with(
    k: usize,
    l: usize,
    cap: u64,
    exec: Execution,
) -> Result<AlphaReport> {
    let n = alpha(k, l)?;
    let n_tested = match factorial_u64(n - 1) {
        Some(count) if count <= cap => count,
        Some(count) => return Err(budget_error(count, cap)),
        None => return Err(budget_error(format!("({})!", n - 1), cap)),
    };

    #[derive(Default)]
    struct Tally {
        seen: u64,
        unforced: u64,
    }
    let tallies = scan_cycles(n, exec, |acc: &mut Tally, c| {
        acc.seen += 1;
        if !is_forced(c, k, l) {
            acc.unforced += 1;
        }
    });
    let seen: u64 = tallies.iter().map(|t| t.seen).sum();
    debug_assert_eq!(seen, n_tested);
    let all_forced = tallies.iter().all(|t| t.unforced == 0);

    let mut survivors: Vec<CyclicPermutation> =
        scan_cycles(n - 1, exec, |acc: &mut Vec<CyclicPermutation>, c| {
            if !is_forced(c, k, l) {
                acc.push(c.clone());
            }
        })
        .into_iter()
        .flatten()
        .collect();
    survivors.sort();

    Ok(AlphaReport {
        k,
        l,
        alpha: n,
        n_tested: seen,
        all_forced,
        survivors,
    })
}

/// `[a_1 - 1, …]` for the tail of `c`; the linear representative of `c`.
pub fn shifted_tail(c: &CyclicPermutation) -> Option<Permutation> {
    if c.len() < 2 {
        return None;
    }
    crate::perm::shift_down(c.tail()).ok()
}
