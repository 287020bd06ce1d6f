use crate::partition::Partition;
use crate::tensor::Orientation;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("character weight mismatch: |{lambda}| = {lw} but |{mu}| = {mw}")]
    WeightMismatch {
        lambda: Partition,
        mu: Partition,
        lw: u32,
        mw: u32,
    },

    #[error("non-integral Schur coefficient {value} at partition {partition}")]
    NonIntegral { partition: Partition, value: String },

    #[error("series are undefined for the zero partition")]
    ZeroPartitionSeries,

    #[error("crossing orientation mismatch: crossing expects {expected:?}, tensor has {got:?}")]
    OrientationMismatch {
        expected: (Orientation, Orientation),
        got: (Orientation, Orientation),
    },

    #[error("braid closes to {components} components; evaluate links with the closed form")]
    MultiComponent { components: usize },

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
