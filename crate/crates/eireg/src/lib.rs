//! Generalised (e,i)-regularisation of integer partitions.
//!
//! For e >= 2 and 0 < i < e, the cells of a Young diagram split into
//! (e,i)-ladders, the orbits of (a,b) -> (a - (e-i), b + i). Sliding every
//! node as high as possible in its ladder, subject to the result being a
//! partition, defines the (e,i)-regularisation; the classical James
//! regularisation is the case i = 1. This crate implements the diagram
//! combinatorics, the abacus encoding on which the map is computed by
//! moving beads, and an exhaustive oracle that verifies the structural
//! theorems (unique hook-free class representative, dominance maximality,
//! fingerprint preservation, ...) on all partitions of small n.
//!
//! ```
//! use eireg::{regularise, EiParams, Partition};
//!
//! let lambda: Partition = "5,4^2,1^3".parse().unwrap();
//! let result = regularise(&lambda, EiParams::new(4, 2).unwrap()).unwrap();
//! assert_eq!(result.output.to_string(), "6,5,3,1^2");
//! ```

pub mod abacus;
pub mod error;
pub mod ladders;
pub mod oracle;
pub mod partition;
pub mod regulariser;

pub use abacus::{beta_set, AbacusDisplay, BetaSet, PhiTrace};
pub use error::{Error, Result};
pub use ladders::{
    fingerprint, ladder_key, ladder_labels, ladder_rungs, same_class, FingerprintEntry,
    LadderFingerprint, LadderKey,
};
pub use oracle::{classes, partitions, verify, CheckOutcome, RegClass, VerificationReport};
pub use partition::{EiParams, HookInfo, Node, Partition};
pub use regulariser::{
    abc_violation, is_ei_regular, regularise, regularise_then_james, regularise_with_beads,
    RegResult,
};
