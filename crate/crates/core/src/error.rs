use thiserror::Error;

/// Everything that can go wrong while building or combining the crate's
/// domain values. Operations on already-validated values do not fail.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("width {width} cannot hold a partition with {parts} parts")]
    WidthTooSmall { width: usize, parts: usize },
    #[error("compositions have different sums ({left} vs {right})")]
    SumMismatch { left: usize, right: usize },
    #[error("compositions have different widths ({left} vs {right})")]
    WidthMismatch { left: usize, right: usize },
    #[error("partition parts must be positive and weakly decreasing")]
    MalformedPartition,
    #[error("entries must be positive")]
    NonPositiveEntry,
    #[error("entry {entry} at column {column}, row {row} exceeds the basement width {width}")]
    EntryTooLarge {
        entry: usize,
        column: usize,
        row: usize,
        width: usize,
    },
    #[error("not a semi-skyline augmented filling: {reason}")]
    NotSsaf { reason: String },
    #[error("column {column} has no cell to remove")]
    EmptyColumn { column: usize },
    #[error("malformed semi-standard tableau: {reason}")]
    MalformedSsyt { reason: String },
    #[error("malformed reverse semi-standard tableau: {reason}")]
    MalformedReverseSsyt { reason: String },
    #[error("malformed two-line array: {reason}")]
    MalformedArray { reason: String },
    #[error("matrix entries need positive row, column, and count")]
    MalformedMatrix,
    #[error("the two shapes do not rearrange the same partition")]
    ShapeMismatch,
}
