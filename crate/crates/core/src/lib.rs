//! Exact algebraic combinatorics around the Littlewood decomposition.
//!
//! The crate covers partitions and their t-cores and t-quotients, the ring of
//! symmetric functions with coefficients in ℚ\[q\], universal characters of the
//! classical groups together with the Hamel–King deformation, the Verschiebung
//! factorization of those characters, and SXP-type plethysm rules.

pub(crate) mod det;
pub mod error;
pub mod littlewood;
pub mod partition;
pub mod qpoly;
pub mod sxp;
pub mod symfunc;
pub mod universal;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{enumerate_z_asymmetric, FrobeniusCoords, Partition, SkewShape};
pub use qpoly::QPoly;
pub use symfunc::{Basis, SymFunc};
