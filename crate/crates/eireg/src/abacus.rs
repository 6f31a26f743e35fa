//! Beta-sets and e-abacus displays: encoding a partition as beads on e
//! runners, hook detection on the display, and the bead-moving step that
//! drives regularisation.
//!
//! Position t sits on runner t mod e. A display with s beads encodes the
//! partition via its beta-set beta_k = lambda_k + s - k.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ladders::{ladder_key, LadderKey};
use crate::partition::{EiParams, Node, Partition};

/// The s-beta-set of a partition: s distinct bead positions, strictly
/// decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaSet(Vec<usize>);

impl BetaSet {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The s-beta-set beta_k = lambda_k + s - k for k = 1..=s. Needs at least
/// as many beads as the partition has parts.
pub fn beta_set(lambda: &Partition, s: usize) -> Result<BetaSet> {
    if s < lambda.num_parts() {
        return Err(Error::TooFewBeads {
            got: s,
            parts: lambda.num_parts(),
        });
    }
    Ok(BetaSet((1..=s).map(|k| lambda.part(k) + s - k).collect()))
}

/// An e-abacus display: e runners and a finite set of occupied positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusDisplay {
    e: usize,
    occupied: BTreeSet<usize>,
}

/// Record of one bead-moving step: the window of empty positions found, the
/// beads and target positions involved, the cutoff c, and the displays
/// before and after.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhiTrace {
    pub s1: usize,
    pub s_list: Vec<usize>,
    pub x_list: Vec<usize>,
    pub b_list: Vec<usize>,
    pub t_prefix: Vec<usize>,
    pub c: usize,
    pub before: AbacusDisplay,
    pub after: AbacusDisplay,
}

impl AbacusDisplay {
    /// Encodes a partition on e runners with s beads.
    pub fn from_partition(lambda: &Partition, e: usize, s: usize) -> Result<Self> {
        assert!(e >= 2);
        let beta = beta_set(lambda, s)?;
        Ok(AbacusDisplay {
            e,
            occupied: beta.values().iter().copied().collect(),
        })
    }

    /// A display with the given occupied positions.
    pub fn from_occupied(e: usize, occupied: impl IntoIterator<Item = usize>) -> Self {
        assert!(e >= 2);
        AbacusDisplay {
            e,
            occupied: occupied.into_iter().collect(),
        }
    }

    /// Same beads on a different number of runners.
    pub fn with_runner_count(&self, e: usize) -> Self {
        assert!(e >= 2);
        AbacusDisplay {
            e,
            occupied: self.occupied.clone(),
        }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    /// The bead count s.
    pub fn beads(&self) -> usize {
        self.occupied.len()
    }

    pub fn occupied(&self) -> &BTreeSet<usize> {
        &self.occupied
    }

    pub fn is_occupied(&self, pos: usize) -> bool {
        self.occupied.contains(&pos)
    }

    pub fn runner(&self, pos: usize) -> usize {
        pos % self.e
    }

    /// Beads strictly between two positions.
    pub fn beads_between(&self, lo: usize, hi: usize) -> usize {
        self.occupied.range(lo + 1..hi).count()
    }

    /// Decodes the display back to its partition. Left inverse of
    /// [`AbacusDisplay::from_partition`] for every valid bead count.
    pub fn partition(&self) -> Partition {
        let s = self.occupied.len();
        let parts: Vec<usize> = self
            .occupied
            .iter()
            .rev()
            .enumerate()
            .map(|(idx, &beta)| beta + idx + 1 - s)
            .take_while(|&part| part > 0)
            .collect();
        Partition::new(parts).expect("beta-set decodes to a valid partition")
    }

    /// One text row per abacus row, runners left to right, 'b' for a bead
    /// and 'n' for an empty position. Shows every row up to the last bead
    /// plus one empty row.
    pub fn render(&self) -> String {
        let rows = match self.occupied.iter().next_back() {
            Some(&max) => max / self.e + 2,
            None => 1,
        };
        (0..rows)
            .map(|row| {
                (0..self.e)
                    .map(|col| {
                        if self.is_occupied(row * self.e + col) {
                            'b'
                        } else {
                            'n'
                        }
                    })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Looks for a bead b with an empty position b - ke on its runner and
    /// exactly k(e-i) beads strictly in between: the abacus form of an
    /// (e,i)-hook. Returns the witness with maximal empty position b - ke,
    /// breaking ties by minimal k.
    pub fn find_ei_hook(&self, i: usize) -> Option<(usize, usize)> {
        self.check_i(i);
        let e = self.e;
        let &max = self.occupied.iter().next_back()?;
        for foot in (0..max).rev() {
            if self.is_occupied(foot) {
                continue;
            }
            for k in 1..=(max - foot) / e {
                let bead = foot + k * e;
                if self.is_occupied(bead) && self.beads_between(foot, bead) == k * (e - i) {
                    return Some((bead, k));
                }
            }
        }
        None
    }

    /// The largest k for which the display contains a scale-k hook.
    pub fn max_ei_hook_scale(&self, i: usize) -> Option<usize> {
        self.check_i(i);
        let e = self.e;
        let mut best = None;
        for &bead in &self.occupied {
            for k in 1..=bead / e {
                let foot = bead - k * e;
                if !self.is_occupied(foot)
                    && self.beads_between(foot, bead) == k * (e - i)
                    && best.map_or(true, |b| k > b)
                {
                    best = Some(k);
                }
            }
        }
        best
    }

    /// The maximal empty position s_1 whose window [s_1, s_1 + e) contains
    /// exactly i empty positions (s_1 itself included) and whose top s_1 + e
    /// is occupied. Returns s_1 with the window's empty positions in
    /// increasing order; `None` exactly when the partition has no
    /// (e,i)-hook of scale 1.
    pub fn find_s_positions(&self, i: usize) -> Option<(usize, Vec<usize>)> {
        self.check_i(i);
        let e = self.e;
        let &max = self.occupied.iter().next_back()?;
        if max < e {
            return None;
        }
        for s1 in (0..=max - e).rev() {
            if self.is_occupied(s1) || !self.is_occupied(s1 + e) {
                continue;
            }
            let empties: Vec<usize> = (s1..s1 + e).filter(|&p| !self.is_occupied(p)).collect();
            if empties.len() == i {
                return Some((s1, empties));
            }
        }
        None
    }

    /// One regularisation step: beads b_1..b_c move one row up their
    /// runners, and beads move one row down into t_1..t_c. Moves are applied
    /// sequentially in increasing k in each phase; the cascades (a source
    /// vacated or a destination filled by an earlier move of the same phase)
    /// make every individual move valid. The decoded partition keeps its
    /// size and ladder fingerprint and strictly increases in lexicographic
    /// order.
    pub fn phi_step(&self, i: usize) -> Result<(AbacusDisplay, PhiTrace)> {
        self.check_i(i);
        let e = self.e;
        let (s1, s_list) = self.find_s_positions(i).ok_or(Error::NoHook)?;
        let x_list: Vec<usize> = s_list.iter().map(|&s| s % e).collect();
        let on_s_runner = |pos: usize| x_list.contains(&(pos % e));

        let b1 = s1 + e;
        let mut b_list = vec![b1];
        b_list.extend(
            self.occupied
                .range(b1 + 1..)
                .copied()
                .filter(|&pos| on_s_runner(pos)),
        );
        let total = b_list.len();

        // Empty positions above s_i off the s-runners. Everything above the
        // last bead is empty, so the first `total` of them always exist.
        let s_i = *s_list.last().expect("s_list holds i >= 1 positions");
        let mut t_list = Vec::with_capacity(total);
        let mut pos = s_i + 1;
        while t_list.len() < total {
            if !self.is_occupied(pos) && !on_s_runner(pos) {
                t_list.push(pos);
            }
            pos += 1;
        }

        let c = (1..total)
            .find(|&c| t_list[c - 1] < b_list[c])
            .unwrap_or(total);

        let mut occupied = self.occupied.clone();
        for k in 0..c {
            move_bead(&mut occupied, b_list[k], b_list[k] - e)?;
        }
        for k in 0..c {
            move_bead(&mut occupied, t_list[k] - e, t_list[k])?;
        }

        let after = AbacusDisplay { e, occupied };
        debug_assert_eq!(after.beads(), self.beads());
        let trace = PhiTrace {
            s1,
            s_list,
            x_list,
            b_list,
            t_prefix: t_list[..c].to_vec(),
            c,
            before: self.clone(),
            after: after.clone(),
        };
        Ok((after, trace))
    }

    /// The ladder key of the node corresponding to an empty position: with m
    /// empty positions below `pos` and s beads in total, that node sits at
    /// row s + m - pos, column m + 1. Requires a bead above `pos`, otherwise
    /// the position corresponds to no node.
    pub fn ladder_index_of_empty(&self, i: usize, pos: usize) -> Result<LadderKey> {
        self.check_i(i);
        if self.is_occupied(pos) {
            return Err(Error::PositionOccupied(pos));
        }
        let beads_above = self.occupied.range(pos + 1..).count();
        if beads_above == 0 {
            return Err(Error::NoBeadAbove(pos));
        }
        let beads_below = self.occupied.len() - beads_above;
        let empties_below = pos - beads_below;
        let node = Node::new(beads_above, empties_below + 1);
        let params = EiParams::new(self.e, i).expect("checked by check_i");
        let key = ladder_key(node, params);
        debug_assert_eq!(
            key.l as i64,
            self.e as i64 * empties_below as i64
                + (self.occupied.len() as i64 - pos as i64 - 1) * i as i64
                + 1
        );
        Ok(key)
    }

    fn check_i(&self, i: usize) {
        assert!(i >= 1 && i < self.e, "need 0 < i < e (got i={i}, e={})", self.e);
    }
}

fn move_bead(occupied: &mut BTreeSet<usize>, from: usize, to: usize) -> Result<()> {
    if !occupied.remove(&from) {
        return Err(Error::InternalMoveConflict(format!(
            "no bead at source position {from}"
        )));
    }
    if !occupied.insert(to) {
        return Err(Error::InternalMoveConflict(format!(
            "destination position {to} already occupied"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn beta_set_examples() {
        let beta = beta_set(&part("9,7,6^2,4,3^2,2"), 10).unwrap();
        assert_eq!(beta.values(), &[18, 15, 13, 12, 9, 7, 6, 4, 1, 0]);

        let beta = beta_set(&Partition::empty(), 3).unwrap();
        assert_eq!(beta.values(), &[2, 1, 0]);

        let beta = beta_set(&part("14,13,5,4^5,3,1^2"), 11).unwrap();
        assert_eq!(beta.values(), &[24, 22, 13, 11, 10, 9, 8, 7, 5, 2, 1]);

        assert_eq!(
            beta_set(&part("2,1"), 1),
            Err(Error::TooFewBeads { got: 1, parts: 2 })
        );
    }

    #[test]
    fn display_from_partition() {
        let a = AbacusDisplay::from_partition(&part("9,7,6^2,4,3^2,2"), 5, 10).unwrap();
        let expect: BTreeSet<usize> = [18, 15, 13, 12, 9, 7, 6, 4, 1, 0].into_iter().collect();
        assert_eq!(a.occupied(), &expect);
        assert_eq!(a.render(), "bbnnb\nnbbnb\nnnbbn\nbnnbn\nnnnnn");

        let a = AbacusDisplay::from_partition(&Partition::empty(), 3, 3).unwrap();
        let expect: BTreeSet<usize> = [0, 1, 2].into_iter().collect();
        assert_eq!(a.occupied(), &expect);

        let a = AbacusDisplay::from_partition(&part("14,13,5,4^5,3,1^2"), 7, 11).unwrap();
        assert_eq!(a.render(), "nbbnnbn\nbbbbbnb\nnnnnnnn\nnbnbnnn\nnnnnnnn");
    }

    #[test]
    fn decode_examples() {
        let a = AbacusDisplay::from_occupied(3, [0, 1, 2]);
        assert_eq!(a.partition(), Partition::empty());

        let a = AbacusDisplay::from_occupied(7, [24, 22, 19, 16, 15, 6, 4, 3, 2, 1, 0]);
        assert_eq!(a.partition(), part("14,13,11,9^2,1"));

        let empty = AbacusDisplay::from_occupied(4, []);
        assert_eq!(empty.partition(), Partition::empty());
        assert_eq!(empty.render(), "nnnn");
    }

    #[test]
    fn abacus_hook_examples() {
        let a = AbacusDisplay::from_partition(&part("14,13,5,4^5,3,1^2"), 7, 11).unwrap();
        assert_eq!(a.find_ei_hook(4), Some((7, 1)));

        let a = AbacusDisplay::from_partition(&Partition::empty(), 4, 2).unwrap();
        assert_eq!(a.find_ei_hook(2), None);

        let a = AbacusDisplay::from_partition(&part("6,5,3,1,1"), 4, 6).unwrap();
        assert_eq!(a.find_ei_hook(2), None);

        // (4,1,1) has a (3,2)-hook only at scale 2
        let a = AbacusDisplay::from_partition(&part("4,1,1"), 3, 3).unwrap();
        assert_eq!(a.find_ei_hook(2), Some((6, 2)));
        assert_eq!(a.find_s_positions(2), None);
        assert_eq!(a.max_ei_hook_scale(2), Some(2));
    }

    #[test]
    fn s_position_examples() {
        let a = AbacusDisplay::from_partition(&part("14,13,5,4^5,3,1^2"), 7, 11).unwrap();
        assert_eq!(a.find_s_positions(4), Some((0, vec![0, 3, 4, 6])));

        let a = AbacusDisplay::from_partition(&Partition::empty(), 5, 2).unwrap();
        assert_eq!(a.find_s_positions(2), None);

        let a = AbacusDisplay::from_partition(&part("5,4,4,1,1,1"), 4, 7).unwrap();
        assert!(a.find_s_positions(2).is_some());
    }

    #[test]
    fn phi_step_golden() {
        let a = AbacusDisplay::from_partition(&part("14,13,5,4^5,3,1^2"), 7, 11).unwrap();
        let (after, trace) = a.phi_step(4).unwrap();

        assert_eq!(trace.s1, 0);
        assert_eq!(trace.s_list, vec![0, 3, 4, 6]);
        assert_eq!(trace.x_list, vec![0, 3, 4, 6]);
        assert_eq!(trace.b_list, vec![7, 10, 11, 13, 24]);
        assert_eq!(trace.t_prefix, vec![12, 15, 16, 19]);
        assert_eq!(trace.c, 4);
        assert_eq!(after.partition(), part("14,13,11,9^2,1"));
        assert_eq!(
            after.render(),
            "bbbbbnb\nnnnnnnn\nnbbnnbn\nnbnbnnn\nnnnnnnn"
        );
        assert_eq!(trace.before.partition(), part("14,13,5,4^5,3,1^2"));
        assert_eq!(trace.after, after);
    }

    #[test]
    fn phi_step_needs_hook() {
        let a = AbacusDisplay::from_partition(&part("3,1"), 2, 2).unwrap();
        assert!(a.find_s_positions(1).is_none());
        assert_eq!(a.phi_step(1).err(), Some(Error::NoHook));
    }

    #[test]
    fn phi_step_t_phase_cascade() {
        // reg_{4,3} of (5,4^2,1^3) moves a bead into t_1 = 11 and then out of
        // it again (t_2 - e = t_1), all in one step
        let a = AbacusDisplay::from_partition(&part("5,4^2,1^3"), 4, 6).unwrap();
        let (after, trace) = a.phi_step(3).unwrap();
        assert_eq!(trace.c, 2);
        assert_eq!(trace.t_prefix, vec![11, 15]);
        assert_eq!(after.partition(), part("10,2,1^4"));
    }

    #[test]
    fn ladder_index_examples() {
        let a = AbacusDisplay::from_partition(&part("14,13,5,4^5,3,1^2"), 7, 11).unwrap();
        let key = a.ladder_index_of_empty(4, 0).unwrap();
        assert_eq!(key.l, 41);
        assert_eq!(key.r, Node::new(11, 1).residue(7));
        assert_eq!(
            key,
            ladder_key(Node::new(11, 1), EiParams::new(7, 4).unwrap())
        );

        assert_eq!(
            a.ladder_index_of_empty(4, 1),
            Err(Error::PositionOccupied(1))
        );
        assert_eq!(a.ladder_index_of_empty(4, 30), Err(Error::NoBeadAbove(30)));

        let single = AbacusDisplay::from_occupied(3, [0]);
        assert_eq!(single.ladder_index_of_empty(1, 1), Err(Error::NoBeadAbove(1)));
    }

    #[test]
    fn ladder_index_step_between_consecutive_empties() {
        let a = AbacusDisplay::from_partition(&part("9,7,6^2,4,3^2,2"), 5, 10).unwrap();
        for i in 1..5 {
            let mut prev: Option<(usize, LadderKey)> = None;
            for pos in 0..18 {
                if a.is_occupied(pos) {
                    prev = None;
                    continue;
                }
                let key = a.ladder_index_of_empty(i, pos).unwrap();
                if let Some((prev_pos, prev_key)) = prev {
                    if prev_pos + 1 == pos {
                        assert_eq!(key.l, prev_key.l + 5 - i);
                    }
                }
                prev = Some((pos, key));
            }
        }
    }

    #[test]
    fn display_json_shape() {
        let a = AbacusDisplay::from_occupied(3, [2, 0]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"e":3,"occupied":[0,2]}"#);
        let back: AbacusDisplay = serde_json::from_str(&json).unwrap();
        assert_eq!(back, a);
    }
}
