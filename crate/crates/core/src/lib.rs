//! Exact analysis of monotone sub-permutations of linear and cyclic
//! permutations.
//!
//! - [`perm`]: permutations, cycles in canonical form, rotations.
//! - [`monotone`]: longest increasing/decreasing (cyclic) subsequences and
//!   witnesses.
//! - [`tableau`]: rectangular standard Young tableaux, hook-length counts.
//! - [`grid`]: the grid-function bijection between `S(k, l)` and pairs of
//!   tableaux, plus the distorted-grid drawing.
//! - [`extremal`]: the cyclic Erdős–Szekeres bound `alpha(k, l)`, its
//!   extremal constructions and exhaustive checks.
//! - [`stochastic`]: Monte Carlo and exact values of the expected circular
//!   LIS.
//!
//! Data-parallel loops run on rayon when the `parallel` feature is enabled
//! (the default) and sequentially otherwise; see [`exec::Execution`].

pub mod error;
pub mod exec;
pub mod extremal;
pub mod grid;
pub mod monotone;
pub mod perm;
pub mod stochastic;
pub mod tableau;

pub use error::{Error, Result};
pub use exec::Execution;
pub use extremal::{
    alpha, construct_extremal, enumerate_extremal, partition_witness, verify_alpha_exhaustive,
    verify_extremal, AlphaReport, ExtremalReport, ExtremalStructure, PartitionWitness,
    StructureKind, DEFAULT_BUDGET,
};
pub use grid::{grid_assignment, grid_drawing, phi, phi_inverse, GridAssignment, GridDrawing};
pub use monotone::{
    cyclic_lds_length, cyclic_lis_length, cyclic_witness, erdos_szekeres_check, lds_length,
    lis_length, monotone_profile, ErdosSzekeresReport, MonotoneProfile,
};
pub use perm::{shift_down, CyclicPermutation, Direction, Permutation, SubPermutationWitness};
pub use stochastic::{estimate_mu, exact_mu, sample_cyclic, MuEstimate};
pub use tableau::{
    count_extremal_linear, count_syt_rect, enumerate_syt_rect, validate_syt, BigCount,
    YoungTableau,
};
