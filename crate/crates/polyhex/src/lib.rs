//! Hexagonal-lattice polyominoes: modelling, class recognition, and exact
//! enumeration.
//!
//! Cells live on the hexagonal tiling drawn with horizontal edges and are
//! addressed by `(column, position)` pairs; see [`cell`] for the coordinate
//! conventions and the domination relation. A [`Polyomino`] is an
//! edge-connected cell set up to translation.
//!
//! [`recognize`] decides membership in the directed-animal family — directed,
//! stacked directed, and multi-directed animals, plus column-convexity — via
//! one canonical decomposition into directed components. [`census`] counts
//! and lists all polyominoes by size, classifying each. [`oracle`] holds
//! deliberately naive reference implementations that everything else is
//! cross-validated against.

pub mod cell;
pub mod census;
pub mod oracle;
pub mod polyomino;
pub mod recognize;
pub mod textio;

pub use cell::Cell;
pub use census::{
    census, enumerate_fixed, enumerate_fixed_bounded, find_separators, CensusConfig, CensusError,
    CensusRow, ClassSelection, SeparatorKind, DEFAULT_SIZE_BOUND,
};
pub use polyomino::{dominates_set, Column, OverlappingSets, Polyomino, PolyominoError};
pub use recognize::{
    canonical_decomposition, classify, is_directed_animal, is_multi_directed,
    is_stacked_directed, upward_closure, verify_conditions, ClassLabel, ConditionReport,
    Decomposition, DecompositionPart, PartConditions, RecognizeError,
};
