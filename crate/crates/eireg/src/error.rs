//! Error type shared by every module of the crate.

use crate::partition::Node;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Construction input was not weakly decreasing after stripping trailing zeros.
    #[error("parts are not weakly decreasing: {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),

    /// A node lies outside the Young diagram it was used with.
    #[error("node {0} lies outside the diagram")]
    NodeOutsideDiagram(Node),

    /// Two partitions were compared that do not partition the same integer.
    #[error("partitions have different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),

    /// An abacus display needs at least one bead per nonzero part.
    #[error("{got} beads cannot encode a partition with {parts} parts")]
    TooFewBeads { got: usize, parts: usize },

    /// Regularisation parameters must satisfy e >= 2 and 0 < i < e.
    #[error("invalid parameters e={e}, i={i}: need e >= 2 and 0 < i < e")]
    InvalidParams { e: usize, i: usize },

    /// The queried abacus position holds a bead.
    #[error("position {0} is occupied")]
    PositionOccupied(usize),

    /// No bead lies above the queried abacus position, so it corresponds to no node.
    #[error("no bead above position {0}")]
    NoBeadAbove(usize),

    /// A bead-moving step was requested on a display without a suitable hook.
    #[error("no (e,i)-hook: the bead-moving step does not apply")]
    NoHook,

    /// A bead move hit an occupied destination or an empty source. This never
    /// happens on valid inputs; it signals a bug in the move scheduling.
    #[error("internal move conflict: {0}")]
    InternalMoveConflict(String),

    /// A regularisation class contained no hook-free member.
    #[error("class of {0} has no hook-free member")]
    NoRepresentative(String),

    /// A regularisation class contained more than one hook-free member.
    #[error("class of {0} has several hook-free members, e.g. {1}")]
    MultipleRepresentatives(String, String),

    /// A partition string did not match the `part[^exp]` grammar.
    #[error("cannot parse partition: {0}")]
    ParsePartition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
