use thiserror::Error;

use crate::tile::MosaicSystem;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tile index {0} is outside 0..=10")]
    InvalidTile(u8),
    #[error("mosaic dimensions must be positive (got {rows}x{cols})")]
    EmptyGrid { rows: usize, cols: usize },
    #[error("cell count {got} does not match {rows}x{cols}")]
    CellCount { rows: usize, cols: usize, got: usize },
    #[error("mosaic is not suitably connected ({violations} violations)")]
    InvalidMosaic { violations: usize },
    #[error("expected a {expected} mosaic")]
    WrongSystem { expected: MosaicSystem },
    #[error("corner mosaic is not a checkerboard: cell ({row}, {col}) has the wrong parity")]
    NotCheckerboard { row: usize, col: usize },
    #[error("cap push-in broke the mosaic: {0}")]
    ContractBreach(&'static str),
    #[error("diagram has {crossings} crossings, limit is {limit}")]
    CrossingBudget { crossings: usize, limit: usize },
    #[error("cell set is empty")]
    EmptyCellSet,
    #[error("growth enumeration needs at least 3 cells (got {0})")]
    GrowthTooSmall(usize),
    #[error("max_cells must lie in 3..=8 (got {0})")]
    MaxCellsOutOfRange(usize),
    #[error("occupancy mask has no constrained cell")]
    UnconstrainedMask,
}
