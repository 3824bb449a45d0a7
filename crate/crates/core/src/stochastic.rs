//! Uniform random cycles and Monte Carlo estimates of the expected longest
//! increasing circular subsequence, `μ(n)`, normalized by `2√n`.
//!
//! Sample `i` of a run with seed `s` draws from a ChaCha8 generator seeded
//! with `s` on stream `i`, so a run is reproducible bit for bit whatever the
//! execution strategy or thread count.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::monotone::cyclic_lis_length;
use crate::perm::{next_permutation, CyclicPermutation, Permutation};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MuEstimate {
    pub n: usize,
    pub samples: usize,
    pub mean: f64,
    pub std_error: f64,
    /// `mean / (2√n)`.
    pub ratio: f64,
    pub seed: u64,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn shuffled_cycle(n: usize, rng: &mut ChaCha8Rng) -> CyclicPermutation {
    assert!(n >= 1, "cycle length must be positive");
    let mut values: Vec<u32> = (1..=n as u32).collect();
    values[1..].shuffle(rng);
    CyclicPermutation::from_permutation(&Permutation::from_vec_unchecked(values))
}

/// A uniformly random cycle of length `n`: the tail after the leading 1 is a
/// uniform arrangement of `2..=n`.
pub fn sample_cyclic(n: usize, seed: u64) -> CyclicPermutation {
    sample_cyclic_stream(n, seed, 0)
}

/// The cycle drawn for sample index `stream` of a run seeded with `seed`.
pub fn sample_cyclic_stream(n: usize, seed: u64, stream: u64) -> CyclicPermutation {
    shuffled_cycle(n, &mut rng_for(seed, stream))
}

pub fn estimate_mu(n: usize, samples: usize, seed: u64) -> MuEstimate {
    estimate_mu_with(n, samples, seed, Execution::default())
}

pub fn estimate_mu_with(n: usize, samples: usize, seed: u64, exec: Execution) -> MuEstimate {
    assert!(n >= 1 && samples >= 1, "need n >= 1 and samples >= 1");
    let lengths = exec.map_indexed(samples, |i| {
        cyclic_lis_length(&sample_cyclic_stream(n, seed, i as u64))
    });
    summarize(n, seed, &lengths)
}

fn summarize(n: usize, seed: u64, lengths: &[usize]) -> MuEstimate {
    let count = lengths.len() as f64;
    let mean = lengths.iter().map(|&x| x as f64).sum::<f64>() / count;
    let std_error = if lengths.len() > 1 {
        let ss: f64 = lengths.iter().map(|&x| (x as f64 - mean).powi(2)).sum();
        (ss / (count - 1.0)).sqrt() / count.sqrt()
    } else {
        0.0
    };
    MuEstimate {
        n,
        samples: lengths.len(),
        mean,
        std_error,
        ratio: mean / (2.0 * (n as f64).sqrt()),
        seed,
    }
}

/// Exact `μ(n)`: the average cyclic LIS over all `(n-1)!` cycles.
pub fn exact_mu(n: usize, cap: u64) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let cycles = (2..n as u64).try_fold(1u64, |acc, i| acc.checked_mul(i));
    match cycles {
        Some(c) if c <= cap => {}
        Some(c) => {
            return Err(Error::BudgetExceeded {
                required: c.to_string(),
                cap,
            })
        }
        None => {
            return Err(Error::BudgetExceeded {
                required: format!("({})!", n - 1),
                cap,
            })
        }
    }
    let mut tail: Vec<u32> = (2..=n as u32).collect();
    let mut values = Vec::with_capacity(n);
    let (mut total, mut count) = (0u64, 0u64);
    loop {
        values.clear();
        values.push(1);
        values.extend_from_slice(&tail);
        let c = CyclicPermutation::from_permutation(&Permutation::from_vec_unchecked(values.clone()));
        total += cyclic_lis_length(&c) as u64;
        count += 1;
        if !next_permutation(&mut tail) {
            break;
        }
    }
    Ok(BigRational::new(BigInt::from(total), BigInt::from(count)))
}
