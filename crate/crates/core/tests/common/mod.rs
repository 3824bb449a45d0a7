//! Brute-force oracles, independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::HashMap;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Every permutation of `1..=n`, by recursive insertion.
pub fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, used: &mut [bool], out: &mut Vec<Vec<u32>>) {
        let n = used.len();
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u32 + 1);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<u32> {
    let mut v: Vec<u32> = (1..=n as u32).collect();
    v.shuffle(rng);
    v
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn monotone(seq: &[u32], increasing: bool) -> bool {
    seq.windows(2)
        .all(|w| if increasing { w[0] < w[1] } else { w[0] > w[1] })
}

/// Longest monotone subsequence by trying every subset (n <= 20).
pub fn subset_longest(seq: &[u32], increasing: bool) -> usize {
    let n = seq.len();
    let mut best = 0;
    let mut buf = Vec::with_capacity(n);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        buf.clear();
        buf.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| seq[i]));
        if monotone(&buf, increasing) {
            best = size;
        }
    }
    best
}

/// A cyclic sequence is increasing iff it has at most one cyclic descent.
fn is_monotone_cycle(seq: &[u32], increasing: bool) -> bool {
    let m = seq.len();
    if m <= 2 {
        return true;
    }
    let breaks = (0..m)
        .filter(|&i| {
            let (a, b) = (seq[i], seq[(i + 1) % m]);
            if increasing {
                a > b
            } else {
                a < b
            }
        })
        .count();
    breaks <= 1
}

/// Longest monotone cyclic sub-permutation by trying every subset of the
/// cycle's elements.
pub fn subset_cyclic_longest(cycle: &[u32], increasing: bool) -> usize {
    let n = cycle.len();
    let mut best = 0;
    let mut buf = Vec::with_capacity(n);
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        buf.clear();
        buf.extend((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| cycle[i]));
        if is_monotone_cycle(&buf, increasing) {
            best = size;
        }
    }
    best
}

/// Tie-broken maximum cyclic witness by brute force: first rotation (of the
/// given cycle) containing a maximum subset, then the lexicographically
/// smallest offset list. Returns the values.
pub fn brute_cyclic_witness(cycle: &[u32], increasing: bool) -> Vec<u32> {
    let n = cycle.len();
    let best = subset_cyclic_longest(cycle, increasing);
    for s in 0..n {
        let window: Vec<u32> = (0..n).map(|o| cycle[(s + o) % n]).collect();
        let mut candidates: Vec<Vec<usize>> = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != best {
                continue;
            }
            let offs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let vals: Vec<u32> = offs.iter().map(|&o| window[o]).collect();
            if monotone(&vals, increasing) {
                candidates.push(offs);
            }
        }
        if let Some(offs) = candidates.into_iter().min() {
            return offs.iter().map(|&o| window[o]).collect();
        }
    }
    unreachable!("some rotation holds a maximum witness")
}

/// Members of `S(k, l)` by filtering all permutations (quadratic DP).
pub fn brute_extremal_linear(k: usize, l: usize) -> Vec<Vec<u32>> {
    all_permutations(k * l)
        .into_iter()
        .filter(|p| dp_longest(p, true) <= k && dp_longest(p, false) <= l)
        .collect()
}

pub fn dp_longest(seq: &[u32], increasing: bool) -> usize {
    let mut best = vec![1usize; seq.len()];
    for t in 0..seq.len() {
        for s in 0..t {
            let ok = if increasing { seq[s] < seq[t] } else { seq[s] > seq[t] };
            if ok {
                best[t] = best[t].max(best[s] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

/// Standard Young tableaux of `rows × cols` found by filtering every
/// row-major arrangement of `1..=rows*cols`.
pub fn brute_syt(rows: usize, cols: usize) -> Vec<Vec<u32>> {
    all_permutations(rows * cols)
        .into_iter()
        .filter(|e| {
            (0..rows).all(|i| (1..cols).all(|j| e[i * cols + j - 1] < e[i * cols + j]))
                && (1..rows).all(|i| (0..cols).all(|j| e[(i - 1) * cols + j] < e[i * cols + j]))
        })
        .collect()
}

/// Number of SYT of the rectangle as the number of ballot sequences: place
/// 1, 2, … one at a time into a row that stays no longer than the row above.
pub fn ballot_count(rows: usize, cols: usize) -> BigUint {
    fn go(lens: &mut Vec<usize>, cols: usize, memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if lens.iter().all(|&l| l == cols) {
            return BigUint::from(1u32);
        }
        if let Some(v) = memo.get(lens) {
            return v.clone();
        }
        let mut total = BigUint::from(0u32);
        for r in 0..lens.len() {
            let room = lens[r] < cols && (r == 0 || lens[r - 1] > lens[r]);
            if room {
                lens[r] += 1;
                total += go(lens, cols, memo);
                lens[r] -= 1;
            }
        }
        memo.insert(lens.clone(), total.clone());
        total
    }
    go(&mut vec![0; rows], cols, &mut HashMap::new())
}

/// The displayed closed form for `|S(k, l)|` with `k <= l`:
/// `((lk)! / (1^1 2^2 … k^k (k+1)^k … l^k (l+1)^(k-1) … (k+l-1)))^2`.
pub fn displayed_extremal_count(k: usize, l: usize) -> BigUint {
    let (k, l) = (k.min(l), k.max(l));
    let mut num = BigUint::from(1u32);
    for i in 2..=(k * l) as u64 {
        num *= i;
    }
    let mut den = BigUint::from(1u32);
    for h in 1..=(k + l - 1) {
        let exp = if h <= k {
            h
        } else if h <= l {
            k
        } else {
            k + l - h
        };
        den *= BigUint::from(h as u64).pow(exp as u32);
    }
    assert_eq!(&num % &den, BigUint::from(0u32));
    let q = num / den;
    &q * &q
}
