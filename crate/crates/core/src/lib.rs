//! Exact verification of fifth and seventh order mock theta function identities.
//!
//! Everything reduces to [`series::TruncSeries`], a dense integer power series
//! truncated at a fixed order. On top of it:
//!
//! * [`qkernel`]: q-Pochhammer products and the Eulerian series for
//!   chi0, chi1, F0, F1, F2.
//! * [`heckerogers`]: the Hecke-Rogers double sums.
//! * [`bailey`]: Slater's Bailey pairs, the conjugate pair and the Bailey transform.
//! * [`characters`]: Kronecker symbols, the character mod 60 and the
//!   character-weighted indefinite theta sums.
//! * [`relations`]: coefficient relations and vanishing statements.
//! * [`verify`]: named identity checks producing [`report::VerificationReport`]s.

pub mod bailey;
pub mod characters;
pub mod error;
pub mod heckerogers;
pub mod qkernel;
pub mod relations;
pub mod report;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use report::{Status, VerificationReport};
pub use series::{Coeff, Mismatch, TruncSeries};
