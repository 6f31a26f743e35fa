//! The full (e,i)-regularisation map: iterate the abacus bead-moving step
//! until no (e,i)-hook remains. The result is the unique hook-free member
//! of the input's regularisation class and dominates every other member.

use std::cmp::Ordering;

use serde::Serialize;

use crate::abacus::{AbacusDisplay, PhiTrace};
use crate::error::{Error, Result};
use crate::ladders::ladder_key;
use crate::partition::{EiParams, Node, Partition};

/// Outcome of a regularisation: input, hook-free output, and the trace of
/// every bead-moving step in order. Serialises with the partitions in text
/// form and the parameters inlined as "e" and "i".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegResult {
    pub input: Partition,
    pub output: Partition,
    #[serde(flatten)]
    pub params: EiParams,
    pub steps: Vec<PhiTrace>,
}

/// Regularises with the default bead count max(1, number of parts). The
/// decoded result is independent of that choice.
pub fn regularise(lambda: &Partition, p: EiParams) -> Result<RegResult> {
    regularise_with_beads(lambda, p, lambda.num_parts().max(1))
}

/// Regularises on a display with s beads. Each round finds the largest
/// scale k carrying a hook and runs the bead-moving step at parameters
/// (ke, ki): a scale-k hook for (e,i) is exactly a scale-1 hook there, and
/// ladder refinement keeps the step inside the (e,i)-class. Lexicographic
/// order strictly increases each round, so the loop terminates.
pub fn regularise_with_beads(lambda: &Partition, p: EiParams, s: usize) -> Result<RegResult> {
    let mut display = AbacusDisplay::from_partition(lambda, p.e(), s)?;
    let mut current = lambda.clone();
    let mut steps = Vec::new();
    while let Some(k) = display.max_ei_hook_scale(p.i()) {
        let scaled = p.scaled(k);
        let (after, trace) = display
            .with_runner_count(scaled.e())
            .phi_step(scaled.i())?;
        display = after.with_runner_count(p.e());
        let next = display.partition();
        if current.lex_cmp(&next)? != Ordering::Less {
            return Err(Error::InternalMoveConflict(
                "bead-moving step failed to increase lexicographic order".into(),
            ));
        }
        current = next;
        steps.push(trace);
    }
    Ok(RegResult {
        input: lambda.clone(),
        output: current,
        params: p,
        steps,
    })
}

/// True iff the partition is a fixed point of (e,i)-regularisation,
/// equivalently iff it has no (e,i)-hooks.
pub fn is_ei_regular(lambda: &Partition, p: EiParams) -> bool {
    lambda.ei_hooks(p).is_empty()
}

/// Searches one (e,i)-ladder for rungs A above B above C with B in the
/// diagram and A, C outside it. Regular partitions admit no such triple;
/// the condition is necessary but not sufficient for singularity. C may lie
/// below the diagram, so the search is cut off at `max_row` (default: one
/// ladder step below the diagram, i.e. conjugate length + e).
pub fn abc_violation(
    lambda: &Partition,
    p: EiParams,
    max_row: Option<usize>,
) -> Option<(Node, Node, Node)> {
    let (e, i) = (p.e(), p.i());
    let bound = max_row.unwrap_or(lambda.conjugate().num_parts() + e);
    for b_node in lambda.cells() {
        let above = (1..)
            .take_while(|k| b_node.row > k * (e - i))
            .map(|k| Node::new(b_node.row - k * (e - i), b_node.col + k * i))
            .find(|a_node| !lambda.contains(*a_node));
        let Some(a_node) = above else { continue };
        let below = (1..)
            .take_while(|k| b_node.col > k * i && b_node.row + k * (e - i) <= bound)
            .map(|k| Node::new(b_node.row + k * (e - i), b_node.col - k * i))
            .find(|c_node| !lambda.contains(*c_node));
        if let Some(c_node) = below {
            debug_assert_eq!(ladder_key(a_node, p), ladder_key(b_node, p));
            debug_assert_eq!(ladder_key(c_node, p), ladder_key(b_node, p));
            return Some((a_node, b_node, c_node));
        }
    }
    None
}

/// (e,i)-regularisation followed by (e,1)-regularisation; the result is
/// always e-regular.
pub fn regularise_then_james(lambda: &Partition, p: EiParams) -> Result<Partition> {
    let first = regularise(lambda, p)?;
    let james = EiParams::new(p.e(), 1).expect("e >= 2 makes (e,1) valid");
    Ok(regularise(&first.output, james)?.output)
}
