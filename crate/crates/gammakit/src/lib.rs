//! gammakit — exact computation in the algebra Γ generated by Schur
//! Q-functions.
//!
//! Γ is the subalgebra of symmetric functions spanned by the Schur
//! Q-functions; its degree-`n` slice has the power sums `p_λ` (λ odd) and the
//! products `q_λ` of one-row Q-functions as bases. The crate provides, with
//! arbitrary-precision rational arithmetic throughout:
//!
//! * [`combinat`] — partitions, compositions, coarsenings, `z_λ`;
//! * [`diagram`] — ribbon diagrams, transpose/rotation, the composition
//!   transposition `α • D`, staircase ribbons, basic blocks, shifted skew
//!   shapes;
//! * [`algebra`] — `p`-expansions, `q`-polynomials, ribbon Schur Q-functions
//!   via the signed coarsening sum and an independent determinant route,
//!   one-row/hook Schur specializations, the scalar product, ω;
//! * [`tableaux`] — marked shifted tableau enumeration: the combinatorial
//!   oracle recovering the same expansions monomial by monomial;
//! * [`chromatic`] — chromatic symmetric functions `X_G`, their symmetrized
//!   variants `Y_G`, membership in Γ, and Y-bases built from stars and
//!   triangles;
//! * [`positivity`] — p-positivity verdicts, classification of staircase
//!   ribbons, the constructible family of positive ribbons, corner-count
//!   identities, and product checks for disconnected ribbons;
//! * [`cli`] — the `gammakit` command-line front end.
//!
//! Deterministic output is part of the contract: partition-keyed maps print
//! in descending lexicographic order and repeated runs are byte-identical.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod chromatic;
pub mod cli;
pub mod combinat;
pub mod diagram;
mod linalg;
pub mod positivity;
pub mod tableaux;

pub use combinat::{Composition, Partition};
pub use diagram::{Ribbon, SkewShape};

/// Errors surfaced by parsers, guarded entry points, and the linear solver.
#[derive(Debug, thiserror::Error)]
pub enum GammaError {
    /// Malformed text input (partition, composition, shape, or graph).
    #[error("parse error: {0}")]
    Parse(String),
    /// A size guard was exceeded; the message names the limit.
    #[error("guard exceeded: {0}")]
    Guard(String),
    /// A shape or graph constructor received inconsistent data.
    #[error("invalid input: {0}")]
    Invalid(String),
    /// The monomial-matching linear system has no (unique) solution in Γ.
    #[error("inconsistent system: {0}")]
    Inconsistent(String),
}
