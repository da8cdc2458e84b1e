use thiserror::Error;

use crate::partition::Partition;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    InvalidPartition(String),

    #[error("{inner} is not contained in {outer}")]
    NotContained { outer: Partition, inner: Partition },

    #[error("modulus t must be at least 2, got {0}")]
    BadModulus(usize),

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("kappa entries must sum to zero, got {0:?}")]
    KappaSum(Vec<i64>),

    #[error("{core} is not a {t}-core")]
    NotACore { core: Partition, t: usize },

    #[error("expected {expected} quotient entries, got {got}")]
    QuotientLength { expected: usize, got: usize },

    #[error("{outer}/{inner} is not {t}-tileable")]
    NotTileable { outer: Partition, inner: Partition, t: usize },

    #[error("kappa {kappa:?} is outside the symmetry class for z = {z}, t = {t}")]
    KappaClass { kappa: Vec<i64>, z: i64, t: usize },

    #[error("window {window} is shorter than the partition length {len}")]
    Window { window: usize, len: usize },

    #[error("degree {degree} exceeds the character-table cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("shift c must be nonnegative here, got {0}")]
    NegativeShift(i64),

    #[error("no consistent witness for {partition} at z = {z}, t = {t}")]
    Witness { partition: Partition, z: i64, t: usize },

    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_modulus(t: usize) -> Result<()> {
    if t < 2 {
        Err(Error::BadModulus(t))
    } else {
        Ok(())
    }
}
