//! (e,i)-ladders: the key identifying a ladder, enumeration of its rungs
//! inside a bounding box, per-ladder node counts (the fingerprint), and the
//! regularisation-class equivalence they induce.
//!
//! A cell (a,b) lies on the ladder with index l = (e-i)b + ai + 1 - e and
//! e-residue r = (b-a) mod e; the ladder is the orbit (a - k(e-i), b + ki)
//! for integer k. Keys always store r, which is redundant for coprime (e,i)
//! but carries real information otherwise.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{EiParams, Node, Partition};

/// Identifier of one (e,i)-ladder: the index l >= 1 and the e-residue r
/// shared by every rung. Valid keys satisfy i*r + l = 1 (mod e).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct LadderKey {
    pub l: usize,
    pub r: usize,
}

impl LadderKey {
    /// Keys violating this congruence denote empty ladders; they are never
    /// produced by [`ladder_key`].
    pub fn satisfies_congruence(self, p: EiParams) -> bool {
        self.l >= 1 && self.r < p.e() && (p.i() * self.r + self.l) % p.e() == 1
    }
}

impl fmt::Display for LadderKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\u{27e8}{},{}\u{27e9}", self.l, self.r)
    }
}

/// The key of the ladder through a cell.
pub fn ladder_key(x: Node, p: EiParams) -> LadderKey {
    let (e, i) = (p.e(), p.i());
    let key = LadderKey {
        l: (e - i) * x.col + x.row * i + 1 - e,
        r: x.residue(e),
    };
    debug_assert!(key.satisfies_congruence(p));
    key
}

/// All rungs of a ladder with row <= max_row and col <= max_col, ordered by
/// decreasing row ("upwards"). Ladders are infinite, so callers must bound
/// the search.
pub fn ladder_rungs(key: LadderKey, p: EiParams, max_row: usize, max_col: usize) -> Vec<Node> {
    let (e, i) = (p.e() as i64, p.i() as i64);
    let mut rungs = Vec::new();
    for row in (1..=max_row).rev() {
        // solve l = (e-i)b + ai + 1 - e for b at this row
        let num = key.l as i64 + e - 1 - row as i64 * i;
        if num <= 0 || num % (e - i) != 0 {
            continue;
        }
        let col = (num / (e - i)) as usize;
        if col < 1 || col > max_col {
            continue;
        }
        let node = Node::new(row, col);
        if node.residue(p.e()) == key.r {
            rungs.push(node);
        }
    }
    rungs
}

/// One entry of the JSON rendering of a fingerprint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FingerprintEntry {
    pub l: usize,
    pub r: usize,
    pub count: usize,
}

/// Per-ladder node counts of a partition; the invariant preserved by
/// (e,i)-regularisation. Two partitions of n are in the same regularisation
/// class exactly when their fingerprints coincide.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LadderFingerprint {
    counts: BTreeMap<LadderKey, usize>,
}

impl LadderFingerprint {
    pub fn counts(&self) -> &BTreeMap<LadderKey, usize> {
        &self.counts
    }

    pub fn count(&self, key: LadderKey) -> usize {
        self.counts.get(&key).copied().unwrap_or(0)
    }

    /// Total node count; equals |lambda| for the fingerprint of lambda.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Entries sorted by (l, r); the external JSON form.
    pub fn entries(&self) -> Vec<FingerprintEntry> {
        self.counts
            .iter()
            .map(|(key, &count)| FingerprintEntry {
                l: key.l,
                r: key.r,
                count,
            })
            .collect()
    }
}

impl Serialize for LadderFingerprint {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries().serialize(serializer)
    }
}

/// The ladder fingerprint of a partition.
pub fn fingerprint(lambda: &Partition, p: EiParams) -> LadderFingerprint {
    let mut counts = BTreeMap::new();
    for cell in lambda.cells() {
        *counts.entry(ladder_key(cell, p)).or_insert(0) += 1;
    }
    LadderFingerprint { counts }
}

/// Whether two partitions of the same integer lie in the same
/// (e,i)-regularisation class, i.e. have equal fingerprints.
pub fn same_class(lambda: &Partition, mu: &Partition, p: EiParams) -> Result<bool> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch(lambda.n(), mu.n()));
    }
    Ok(fingerprint(lambda, p) == fingerprint(mu, p))
}

/// Ladder keys of every diagram cell, row by row. Row `a` of the result has
/// `lambda_a` entries.
pub fn ladder_labels(lambda: &Partition, p: EiParams) -> Vec<Vec<LadderKey>> {
    (1..=lambda.num_parts())
        .map(|row| {
            (1..=lambda.part(row))
                .map(|col| ladder_key(Node::new(row, col), p))
                .collect()
        })
        .collect()
}
