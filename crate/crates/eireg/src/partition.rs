//! Integer partitions and Young-diagram geometry: conjugation, hooks, the
//! rim, skew-hook removal, dominance and lexicographic order, and
//! (e,i)-hook detection on the diagram.
//!
//! Rows and columns are 1-indexed everywhere, matching the usual (a,b)
//! convention for diagrams drawn in English style.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A cell of the lattice N x N, 1-indexed: `row` counts downwards, `col`
/// rightwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Node {
    pub row: usize,
    pub col: usize,
}

impl Node {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "nodes are 1-indexed");
        Node { row, col }
    }

    /// The e-residue (col - row) mod e, normalised to `0..e`.
    pub fn residue(self, e: usize) -> usize {
        assert!(e >= 2);
        (self.col as i64 - self.row as i64).rem_euclid(e as i64) as usize
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Hook data for one cell: the corner, the arm to its right, the leg below
/// it, and the extremal cells. When the arm (resp. leg) is empty the hand
/// (resp. foot) is the corner itself.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HookInfo {
    pub corner: Node,
    pub hook_len: usize,
    pub arm_len: usize,
    pub leg_len: usize,
    pub hand: Node,
    pub foot: Node,
}

/// Parameters of a generalised regularisation: e >= 2 and 0 < i < e.
/// `gcd(e, i) > 1` is allowed; ladder keys then carry the residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EiParams {
    e: usize,
    i: usize,
}

impl EiParams {
    pub fn new(e: usize, i: usize) -> Result<Self> {
        if e < 2 || i == 0 || i >= e {
            return Err(Error::InvalidParams { e, i });
        }
        Ok(EiParams { e, i })
    }

    pub fn e(self) -> usize {
        self.e
    }

    pub fn i(self) -> usize {
        self.i
    }

    /// The parameters (ke, ki). A hook of scale k for `self` is a hook of
    /// scale 1 for the scaled parameters.
    pub fn scaled(self, k: usize) -> EiParams {
        assert!(k >= 1);
        EiParams {
            e: self.e * k,
            i: self.i * k,
        }
    }

    pub fn is_coprime(self) -> bool {
        gcd(self.e, self.i) == 1
    }
}

impl fmt::Display for EiParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.e, self.i)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty sequence is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from a sequence of non-negative integers.
    /// Trailing zeros are stripped; anything else out of order is rejected
    /// rather than sorted, so caller bugs stay visible.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last() == Some(&0) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The partitioned integer, i.e. the sum of the parts.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The part in a given 1-indexed row, 0 beyond the last row.
    pub fn part(&self, row: usize) -> usize {
        assert!(row >= 1, "rows are 1-indexed");
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    /// Whether a node belongs to the Young diagram.
    pub fn contains(&self, x: Node) -> bool {
        x.col <= self.part(x.row)
    }

    /// All diagram cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Node> + '_ {
        (1..=self.num_parts())
            .flat_map(move |row| (1..=self.part(row)).map(move |col| Node::new(row, col)))
    }

    /// The conjugate partition, obtained by transposing the diagram.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|b| self.parts.iter().take_while(|&&p| p >= b).count())
            .collect::<Vec<_>>();
        Partition { parts }
    }

    /// Arm, leg and hook data of a diagram cell.
    pub fn hook_info(&self, x: Node) -> Result<HookInfo> {
        if !self.contains(x) {
            return Err(Error::NodeOutsideDiagram(x));
        }
        let arm_len = self.part(x.row) - x.col;
        let leg_len = self.parts.iter().take_while(|&&p| p >= x.col).count() - x.row;
        Ok(HookInfo {
            corner: x,
            hook_len: arm_len + leg_len + 1,
            arm_len,
            leg_len,
            hand: Node::new(x.row, x.col + arm_len),
            foot: Node::new(x.row + leg_len, x.col),
        })
    }

    /// The rim: cells (c,d) of the diagram with (c+1,d+1) outside it,
    /// ordered from bottom-left to top-right.
    pub fn rim(&self) -> Vec<Node> {
        let mut rim: Vec<Node> = self
            .cells()
            .filter(|x| !self.contains(Node::new(x.row + 1, x.col + 1)))
            .collect();
        rim.sort_by(|p, q| p.col.cmp(&q.col).then(q.row.cmp(&p.row)));
        rim
    }

    /// Removes the skew-hook corresponding to the hook at `x`, returning a
    /// partition of `n - hook_len`. Works on the beta-set: the beta value of
    /// row `x.row` drops by the hook length and the values are re-sorted.
    pub fn remove_skew_hook(&self, x: Node) -> Result<Partition> {
        let info = self.hook_info(x)?;
        let s = self.num_parts();
        let mut beta: Vec<usize> = (1..=s).map(|k| self.part(k) + s - k).collect();
        let moved = beta[x.row - 1] - info.hook_len;
        debug_assert!(!beta.contains(&moved), "hook removal lands on a free beta value");
        beta[x.row - 1] = moved;
        beta.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = beta
            .iter()
            .enumerate()
            .map(|(idx, &b)| b + idx + 1 - s)
            .take_while(|&p| p > 0)
            .collect();
        Partition::new(parts)
    }

    /// Dominance order: true iff every prefix sum of `self` is at least the
    /// corresponding prefix sum of `other`. Only defined for partitions of
    /// the same integer.
    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let rows = self.num_parts().max(other.num_parts());
        let (mut ours, mut theirs) = (0usize, 0usize);
        for row in 1..=rows {
            ours += self.part(row);
            theirs += other.part(row);
            if ours < theirs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Lexicographic comparison of partitions of the same integer.
    pub fn lex_cmp(&self, other: &Partition) -> Result<Ordering> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch(self.n(), other.n()));
        }
        let rows = self.num_parts().max(other.num_parts());
        for row in 1..=rows {
            match self.part(row).cmp(&other.part(row)) {
                Ordering::Equal => continue,
                other => return Ok(other),
            }
        }
        Ok(Ordering::Equal)
    }

    /// All (e,i)-hooks: cells whose hook length is k*e with leg length
    /// k*(e-i) for some k >= 1, row-major, together with that k.
    /// The list is empty exactly when the partition is (e,i)-regular.
    pub fn ei_hooks(&self, p: EiParams) -> Vec<(Node, usize)> {
        let conj = self.conjugate();
        let (e, i) = (p.e(), p.i());
        let mut hooks = Vec::new();
        for x in self.cells() {
            let arm = self.part(x.row) - x.col;
            let leg = conj.part(x.col) - x.row;
            let hook = arm + leg + 1;
            if hook % e == 0 {
                let k = hook / e;
                if leg == k * (e - i) {
                    hooks.push((x, k));
                }
            }
        }
        hooks
    }

    /// True iff no part occurs e or more times.
    pub fn is_e_regular(&self, e: usize) -> bool {
        assert!(e >= 2);
        let mut run = 0;
        let mut prev = 0;
        for &p in &self.parts {
            run = if p == prev { run + 1 } else { 1 };
            if run >= e {
                return false;
            }
            prev = p;
        }
        true
    }
}

/// Text form: comma-separated parts with exponent notation, e.g.
/// `14,13,5,4^5,3,1^2`; the empty partition prints as `-`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let mut first = true;
        let mut idx = 0;
        while idx < self.parts.len() {
            let part = self.parts[idx];
            let run = self.parts[idx..].iter().take_while(|&&p| p == part).count();
            if !first {
                write!(f, ",")?;
            }
            if run > 1 {
                write!(f, "{part}^{run}")?;
            } else {
                write!(f, "{part}")?;
            }
            first = false;
            idx += run;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the exponent grammar. Whitespace is ignored; `-` and the
    /// empty string denote the empty partition.
    fn from_str(input: &str) -> Result<Self> {
        let text: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() || text == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let (base, exp) = match token.split_once('^') {
                Some((base, exp)) => (base, exp),
                None => (token, "1"),
            };
            let part: usize = base
                .parse()
                .map_err(|_| Error::ParsePartition(format!("bad part {token:?}")))?;
            let count: usize = exp
                .parse()
                .map_err(|_| Error::ParsePartition(format!("bad exponent in {token:?}")))?;
            if parts.len() + count > 1_000_000 {
                return Err(Error::ParsePartition("too many parts".into()));
            }
            parts.extend(std::iter::repeat(part).take(count));
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
