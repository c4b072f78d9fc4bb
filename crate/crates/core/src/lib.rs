//! Ideal lattices in the power-of-two cyclotomic ring `Z[x]/(x^N + 1)`.
//!
//! The crate covers four layers:
//!
//! * [`modp`]: arithmetic and polynomials over prime fields, including
//!   primitive roots of unity, Dickson polynomials and root finding.
//! * [`factor`]: the explicit factorization of `x^(2^n) + 1` over `F_p`
//!   and the hardness class `r` of the primes above `p`.
//! * [`lattice`]: an exact integer lattice engine (HNF, LLL, enumeration,
//!   sublattice intersection).
//! * [`cyclo`] and [`svp`]: ideal lattices under the coefficient
//!   embedding and the shortest-vector solvers that work inside
//!   decomposition subfields `Z[zeta^(2^(n-r))]`.
//!
//! [`experiment`] and [`cli`] provide the sampling harness and the
//! `ideal-svp-lab` command line front end.

pub mod cli;
pub mod cyclo;
pub mod error;
pub mod experiment;
pub mod factor;
pub mod json;
pub mod lattice;
pub mod modp;
pub mod parallel;
pub mod svp;

pub use error::{Error, Result};

/// Version tag embedded in every JSON document this crate emits.
pub const SCHEMA: &str = "ideal-svp-lab/1";
