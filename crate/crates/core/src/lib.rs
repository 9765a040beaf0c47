//! Entanglement of formation for qubit-qudit mixed states.
//!
//! The crate computes Wootters' exact concurrence and entanglement of formation
//! for two-qubit density matrices, the per-channel concurrence bounds
//! `C_ij(rho) = max(0, l1 - l2 - l3 - l4)` for qubit-qudit states together with
//! their root-sum-square lower bound `C_db(rho)`, and builds explicit
//! decompositions that attain each channel bound. An independent stochastic
//! search over decompositions ([`search`]) checks every bound from the other
//! side.
//!
//! All states live in the computational product basis `u_i (x) v_j`, ordered
//! `a_11, ..., a_1d, a_21, ..., a_2d`. Complex conjugation (and therefore every
//! spectrum computed here) is defined relative to that basis.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! thread-parallel search restarts live in the `eofb` companion crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod decomposition;
mod error;
pub mod linalg;
pub mod math;
pub mod search;
pub mod smatrix;
pub mod states;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Default numerical tolerance used by validating constructors and solvers.
pub const DEFAULT_TOL: f64 = 1e-9;
