//! Exact spectral certificates for 3-setwise intersecting permutation families.
//!
//! A family of permutations in Sym(n) is *3-setwise intersecting* when every
//! two of its members agree setwise on some 3-subset. Such families are the
//! cocliques of the derangement graph `Γ_{n,3}`, the Cayley graph on Sym(n)
//! whose connection set is all permutations fixing no 3-subset. This crate
//! computes, entirely in exact arithmetic, weighted eigenvalues of unions of
//! conjugacy classes inside `Γ_{n,3}` and assembles ratio-bound certificates
//! proving that a 3-setwise intersecting family has at most `6(n-3)!`
//! elements.
//!
//! The pipeline:
//!
//! - [`partitions`]: integer partitions, Young diagrams, hook lengths,
//!   rim hooks, branching neighbors.
//! - [`characters`]: symmetric-group character values via the
//!   Murnaghan–Nakayama rule, class sizes, degree-threshold classification.
//! - [`spectra`]: weighted eigenvalues of class unions, full spectrum
//!   reports, the ratio and clique–coclique bounds.
//! - [`certify`]: 3-derangement class selection, weight solving, polytope
//!   feasibility, closed-form cross-checks, end-to-end certificates, and a
//!   grid search for small n.
//! - [`oracle`]: independent brute-force cross-checks at small n (explicit
//!   Cayley matrices, orthogonality relations, exact maximum cocliques).
//!
//! Everything that feeds a certificate is exact: characters are
//! arbitrary-precision integers, eigenvalues and bounds are arbitrary-
//! precision rationals, and interval membership is decided by exact
//! comparison. Floating point appears only inside the optional brute-force
//! eigensolver oracle, which cross-checks but never certifies.
//!
//! With the default `parallel` feature the spectrum and search loops fan out
//! over a rayon pool; built with `--no-default-features` the same entry
//! points run sequentially and produce identical results.

pub mod certify;
pub mod characters;
pub mod oracle;
pub mod par;
pub mod partitions;
pub mod rational;
pub mod spectra;

use partitions::Partition;

/// Library-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A caller-supplied value violates an operation's documented domain.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A documented precondition does not hold, so the result would be
    /// meaningless (for example a magnitude bound whose uniqueness hypothesis
    /// fails).
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text input that could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// A certification step failed: the candidate weighting does not prove
    /// the bound. Carries the offending partition when one exists.
    #[error("certification failure: {reason}{}", offender.as_ref().map(|p| format!(" (offending partition {p})")).unwrap_or_default())]
    Certification {
        reason: String,
        offender: Option<Partition>,
    },

    /// An internal invariant broke; this is a bug, not a user error.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn certification(reason: impl Into<String>) -> Self {
        Error::Certification {
            reason: reason.into(),
            offender: None,
        }
    }

    pub(crate) fn certification_at(reason: impl Into<String>, offender: Partition) -> Self {
        Error::Certification {
            reason: reason.into(),
            offender: Some(offender),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
