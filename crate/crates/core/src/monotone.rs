//! Longest monotone subsequences of linear permutations and longest monotone
//! cyclic sub-permutations of cyclic permutations.
//!
//! Lengths use patience sorting with binary search (`O(n log n)`). A plain
//! quadratic dynamic program is kept alongside as an independent route.
//!
//! Every increasing cyclic sub-permutation, read from its smallest element,
//! is an increasing subsequence of the rotation starting at that element, and
//! any increasing subsequence of any rotation closes into an increasing cycle.
//! So the cyclic lengths are exact maxima over the `n` rotations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{CyclicPermutation, Direction, Permutation, SubPermutationWitness};

/// Per-position lengths of the longest monotone subsequences ending there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotoneProfile {
    pub inc_ending: Vec<usize>,
    pub dec_ending: Vec<usize>,
}

impl MonotoneProfile {
    pub fn lis(&self) -> usize {
        self.inc_ending.iter().copied().max().unwrap_or(0)
    }

    pub fn lds(&self) -> usize {
        self.dec_ending.iter().copied().max().unwrap_or(0)
    }
}

/// Outcome of checking a permutation against an Erdős–Szekeres bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErdosSzekeresReport {
    pub lis: usize,
    pub lds: usize,
    /// `lis >= k + 1 || lds >= l + 1`.
    pub satisfies: bool,
}

/// Length of the longest subsequence of `seq` monotone in `dir`.
pub fn longest_run_length(seq: &[u32], dir: Direction) -> usize {
    let mut tails: Vec<u32> = Vec::with_capacity(seq.len().min(64));
    for &a in seq {
        let slot = pile_for(&tails, a, dir);
        if slot == tails.len() {
            tails.push(a);
        } else {
            tails[slot] = a;
        }
    }
    tails.len()
}

// Index of the pile `a` lands on. `tails` is sorted in `dir`.
#[inline]
fn pile_for(tails: &[u32], a: u32, dir: Direction) -> usize {
    match dir {
        Direction::Increasing => tails.partition_point(|&x| x < a),
        Direction::Decreasing => tails.partition_point(|&x| x > a),
    }
}

/// Length of the longest run in `dir` ending at each position.
pub fn ending_lengths(seq: &[u32], dir: Direction) -> Vec<usize> {
    let mut tails: Vec<u32> = Vec::new();
    seq.iter()
        .map(|&a| {
            let slot = pile_for(&tails, a, dir);
            if slot == tails.len() {
                tails.push(a);
            } else {
                tails[slot] = a;
            }
            slot + 1
        })
        .collect()
}

/// Quadratic dynamic program over all earlier positions.
pub fn longest_run_length_quadratic(seq: &[u32], dir: Direction) -> usize {
    let mut best = vec![1usize; seq.len()];
    for t in 0..seq.len() {
        for s in 0..t {
            if dir.admits(seq[s], seq[t]) && best[s] + 1 > best[t] {
                best[t] = best[s] + 1;
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

pub fn lis_length(p: &Permutation) -> usize {
    longest_run_length(p.values(), Direction::Increasing)
}

pub fn lds_length(p: &Permutation) -> usize {
    longest_run_length(p.values(), Direction::Decreasing)
}

pub fn lis_length_quadratic(p: &Permutation) -> usize {
    longest_run_length_quadratic(p.values(), Direction::Increasing)
}

pub fn lds_length_quadratic(p: &Permutation) -> usize {
    longest_run_length_quadratic(p.values(), Direction::Decreasing)
}

pub fn monotone_profile(p: &Permutation) -> MonotoneProfile {
    MonotoneProfile {
        inc_ending: ending_lengths(p.values(), Direction::Increasing),
        dec_ending: ending_lengths(p.values(), Direction::Decreasing),
    }
}

/// Lexicographically smallest (by 0-based offsets) longest run in `dir`.
fn smallest_longest_run(seq: &[u32], dir: Direction) -> Vec<usize> {
    // Longest run in `dir` starting at t = longest opposite run ending at t
    // in the reversed sequence.
    let reversed: Vec<u32> = seq.iter().rev().copied().collect();
    let mut starting = ending_lengths(&reversed, dir.opposite());
    starting.reverse();
    let Some(&total) = starting.iter().max() else {
        return Vec::new();
    };

    let mut picked = Vec::with_capacity(total);
    let mut need = total;
    let mut last: Option<u32> = None;
    for (t, &a) in seq.iter().enumerate() {
        if need == 0 {
            break;
        }
        let fits = last.is_none_or(|prev| dir.admits(prev, a));
        if fits && starting[t] >= need {
            picked.push(t);
            last = Some(a);
            need -= 1;
        }
    }
    debug_assert_eq!(picked.len(), total);
    picked
}

/// A longest monotone subsequence of `p`, choosing the lexicographically
/// smallest position list among all of maximum length.
pub fn linear_witness(p: &Permutation, dir: Direction) -> SubPermutationWitness {
    let offsets = smallest_longest_run(p.values(), dir);
    SubPermutationWitness {
        positions: offsets.iter().map(|&t| t + 1).collect(),
        values: offsets.iter().map(|&t| p.values()[t]).collect(),
        direction: dir,
    }
}

// Runs `f` on each rotation as a window of the doubled sequence.
fn rotation_windows<T>(values: &[u32], mut f: impl FnMut(&[u32]) -> T) -> Vec<T> {
    let n = values.len();
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(values);
    doubled.extend_from_slice(values);
    (0..n).map(|s| f(&doubled[s..s + n])).collect()
}

/// Longest run in `dir` of each rotation, indexed by 0-based start.
pub fn rotation_lengths(c: &CyclicPermutation, dir: Direction) -> Vec<usize> {
    rotation_windows(c.values(), |w| longest_run_length(w, dir))
}

/// Longest monotone cyclic sub-permutation in `dir`.
pub fn cyclic_length(c: &CyclicPermutation, dir: Direction) -> usize {
    let values = c.values();
    let n = values.len();
    let mut doubled = Vec::with_capacity(2 * n);
    doubled.extend_from_slice(values);
    doubled.extend_from_slice(values);
    let mut best = 0;
    for s in 0..n {
        best = best.max(longest_run_length(&doubled[s..s + n], dir));
        if best == n {
            break;
        }
    }
    best
}

pub fn cyclic_lis_length(c: &CyclicPermutation) -> usize {
    cyclic_length(c, Direction::Increasing)
}

pub fn cyclic_lds_length(c: &CyclicPermutation) -> usize {
    cyclic_length(c, Direction::Decreasing)
}

/// A maximum monotone cyclic sub-permutation. Ties go to the smallest
/// starting rotation of the canonical form, then to the lexicographically
/// smallest offset list within that rotation.
pub fn cyclic_witness(c: &CyclicPermutation, dir: Direction) -> SubPermutationWitness {
    let lengths = rotation_lengths(c, dir);
    let best = lengths.iter().copied().max().unwrap_or(0);
    let start = lengths.iter().position(|&l| l == best).unwrap_or(0);
    let rotated = c.canonical().rotation(start);
    let offsets = smallest_longest_run(rotated.values(), dir);
    let n = c.len();
    SubPermutationWitness {
        positions: offsets.iter().map(|&o| (start + o) % n + 1).collect(),
        values: offsets.iter().map(|&o| rotated.values()[o]).collect(),
        direction: dir,
    }
}

/// Reports whether `p` has an increasing subsequence of length `k + 1` or a
/// decreasing one of length `l + 1`.
pub fn erdos_szekeres_check(p: &Permutation, k: usize, l: usize) -> Result<ErdosSzekeresReport> {
    if k < 1 || l < 1 {
        return Err(Error::InvalidBound { k, l, min: 1 });
    }
    let lis = lis_length(p);
    let lds = lds_length(p);
    Ok(ErdosSzekeresReport {
        lis,
        lds,
        satisfies: lis > k || lds > l,
    })
}
