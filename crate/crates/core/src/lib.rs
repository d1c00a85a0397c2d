//! Exact arithmetic tools for deciding whether a controllable graph is
//! determined by its generalized spectrum (DGS).
//!
//! The crate is split by layer:
//!
//! * [`graphio`]: graphs, graph6 / 0-1 matrix text, seeded `G(n, 1/2)`.
//! * [`exactla`]: big-integer matrices, Bareiss determinants, Smith normal
//!   form, characteristic polynomials, discriminants, `F_p` rank/nullspace,
//!   rational inverses.
//! * [`fpoly`]: polynomials over `F_p`, gcd, squarefree part, factorization.
//! * [`criteria`]: the walk-matrix invariants and the per-prime arithmetic
//!   criteria, combined into a [`criteria::Verdict`].
//! * [`cospectral`]: rational regular orthogonal matrices and certificates
//!   of generalized cospectral mates.
//! * [`fixtures`]: the bundled example graphs and certificate.

pub mod cospectral;
pub mod criteria;
mod error;
pub mod exactla;
pub mod fixtures;
pub mod fpoly;
pub mod graphio;

pub use error::{Error, Result};
pub use graphio::Graph;
