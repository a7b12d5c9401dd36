//! Matroid computation over small prime fields.
//!
//! The crate represents a matroid by a matrix over GF(p) and derives all
//! structure (rank, closure, circuits, cocircuits, minors, duality,
//! connectivity) from column ranks. Ground sets are capped at 24 elements,
//! which keeps every subset enumerable and every answer exact.
//!
//! The main entry points are [`LinearMatroid`], the connectivity functions
//! in [`connectivity`], the named constructions in [`catalog`], the
//! structure verifiers in [`verify`], and the exhaustive and sampled
//! population runs in [`census`].

pub mod catalog;
pub mod census;
pub mod connectivity;
pub mod error;
pub mod iso;
pub mod linalg;
pub mod mask;
pub mod matroid;
pub mod verify;

pub use census::{CensusHeader, CensusRecord, CensusRun, SplitMix64, Verdict};
pub use connectivity::{Conn, ConnectivityProfile, MinimalityReport, Separation};
pub use error::MatroidError;
pub use linalg::FieldMatrix;
pub use mask::{SetFamily, SubsetMask};
pub use matroid::LinearMatroid;
pub use verify::{Outcome, VerificationReport};
