//! The grid-function of a permutation in `S(k, l)` and the bijection
//! between `S(k, l)` and pairs of `l × k` standard Young tableaux.
//!
//! Position `t` is sent to the cell `(i, j)` where `i` is the length of the
//! longest decreasing subsequence ending at `a_t` and `j` the length of the
//! longest increasing one. The ranking tableau holds `t` at `(i, j)`; the
//! valuation tableau holds `a_t` at `(l + 1 - i, j)`.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::monotone::{lds_length, linear_witness, lis_length, monotone_profile};
use crate::perm::{Direction, Permutation};
use crate::tableau::{tableau_from_matrix, YoungTableau};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridAssignment {
    pub k: usize,
    #[serde(rename = "ℓ")]
    pub l: usize,
    /// `gamma[t - 1] = (i, j)`, 1-based.
    pub gamma: Vec<(usize, usize)>,
    pub ranking: YoungTableau,
    pub valuation: YoungTableau,
}

/// Fails unless `p` has length `k·l`, no increasing subsequence longer than
/// `k` and no decreasing subsequence longer than `l`.
pub fn check_membership(p: &Permutation, k: usize, l: usize) -> Result<()> {
    if k == 0 || l == 0 {
        return Err(Error::InvalidBound { k, l, min: 1 });
    }
    if p.len() != k * l {
        return Err(Error::LengthMismatch {
            k,
            l,
            expected: k * l,
            found: p.len(),
        });
    }
    if lis_length(p) > k {
        return Err(Error::NotExtremal {
            k,
            l,
            witness: linear_witness(p, Direction::Increasing),
        });
    }
    if lds_length(p) > l {
        return Err(Error::NotExtremal {
            k,
            l,
            witness: linear_witness(p, Direction::Decreasing),
        });
    }
    Ok(())
}

pub fn is_member(p: &Permutation, k: usize, l: usize) -> bool {
    p.len() == k * l && lis_length(p) <= k && lds_length(p) <= l
}

pub fn grid_assignment(p: &Permutation, k: usize, l: usize) -> Result<GridAssignment> {
    check_membership(p, k, l)?;
    let profile = monotone_profile(p);
    let gamma: Vec<(usize, usize)> = profile
        .dec_ending
        .iter()
        .zip(&profile.inc_ending)
        .map(|(&i, &j)| (i, j))
        .collect();

    let cell = |i: usize, j: usize| (i - 1) * k + (j - 1);
    let mut ranking = vec![0u32; k * l];
    for (t, &(i, j)) in gamma.iter().enumerate() {
        ranking[cell(i, j)] = t as u32 + 1;
    }
    let mut valuation = vec![0u32; k * l];
    for i in 1..=l {
        for j in 1..=k {
            let t = ranking[cell(l + 1 - i, j)];
            valuation[cell(i, j)] = p.at(t as usize);
        }
    }
    Ok(GridAssignment {
        k,
        l,
        gamma,
        ranking: YoungTableau::from_row_major(l, k, ranking)
            .expect("grid ranking of a member of S(k, l) is a tableau"),
        valuation: YoungTableau::from_row_major(l, k, valuation)
            .expect("grid valuation of a member of S(k, l) is a tableau"),
    })
}

/// `p ↦ (ranking, valuation)`.
pub fn phi(p: &Permutation, k: usize, l: usize) -> Result<(YoungTableau, YoungTableau)> {
    let g = grid_assignment(p, k, l)?;
    Ok((g.ranking, g.valuation))
}

/// Places `v_ij` at position `r_(l+1-i, j)`.
pub fn phi_inverse(ranking: &YoungTableau, valuation: &YoungTableau) -> Result<Permutation> {
    if !ranking.same_shape(valuation) {
        return Err(Error::ShapeMismatch {
            left_rows: ranking.rows(),
            left_cols: ranking.cols(),
            right_rows: valuation.rows(),
            right_cols: valuation.cols(),
        });
    }
    let (l, k) = (ranking.rows(), ranking.cols());
    let mut values = vec![0u32; k * l];
    for i in 1..=l {
        for j in 1..=k {
            let t = ranking.entry(l + 1 - i, j) as usize;
            values[t - 1] = valuation.entry(i, j);
        }
    }
    Ok(Permutation::from_vec_unchecked(values))
}

/// [`phi_inverse`] on raw integer matrices, validating both first.
pub fn phi_inverse_matrices(ranking: &[Vec<i64>], valuation: &[Vec<i64>]) -> Result<Permutation> {
    let r = tableau_from_matrix(ranking).map_err(|e| Error::InvalidTableau {
        which: "R",
        source: Box::new(e),
    })?;
    let v = tableau_from_matrix(valuation).map_err(|e| Error::InvalidTableau {
        which: "V",
        source: Box::new(e),
    })?;
    phi_inverse(&r, &v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slope {
    Positive,
    Negative,
}

impl Slope {
    pub fn label(self) -> &'static str {
        match self {
            Slope::Positive => "pos",
            Slope::Negative => "neg",
        }
    }
}

/// Two γ-adjacent positions, `from < to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridEdge {
    pub from: usize,
    pub to: usize,
    pub slope: Slope,
}

impl Serialize for GridEdge {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        seq.serialize_element(&self.from)?;
        seq.serialize_element(&self.to)?;
        seq.serialize_element(self.slope.label())?;
        seq.end()
    }
}

/// Combinatorial skeleton of the distorted-grid picture: the points
/// `(t, a_t)` and the grid edges between them. Layout is up to the consumer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridDrawing {
    pub points: Vec<(usize, u32)>,
    pub edges: Vec<GridEdge>,
}

/// Joins positions whose cells agree in one coordinate and differ by one in
/// the other. Same first coordinate (same row) means positive slope.
pub fn grid_drawing(p: &Permutation, k: usize, l: usize) -> Result<GridDrawing> {
    let g = grid_assignment(p, k, l)?;
    let r = &g.ranking;
    let mut edges = Vec::with_capacity(l * (k - 1) + k * (l - 1));
    for i in 1..=l {
        for j in 1..=k {
            let here = r.entry(i, j) as usize;
            if j < k {
                edges.push(edge(here, r.entry(i, j + 1) as usize, Slope::Positive));
            }
            if i < l {
                edges.push(edge(here, r.entry(i + 1, j) as usize, Slope::Negative));
            }
        }
    }
    edges.sort_by_key(|e| (e.from, e.to));
    Ok(GridDrawing {
        points: p.values().iter().enumerate().map(|(t, &a)| (t + 1, a)).collect(),
        edges,
    })
}

fn edge(a: usize, b: usize, slope: Slope) -> GridEdge {
    GridEdge {
        from: a.min(b),
        to: a.max(b),
        slope,
    }
}
