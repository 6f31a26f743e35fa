//! Exhaustive ground truth at desk scale: enumerate all partitions of n,
//! group them into (e,i)-regularisation classes by fingerprint, pick each
//! class representative by a hook scan that never touches the bead-moving
//! algorithm, and verify the full set of structural claims against it.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::abacus::AbacusDisplay;
use crate::error::{Error, Result};
use crate::ladders::{fingerprint, LadderFingerprint};
use crate::partition::{EiParams, Partition};
use crate::regulariser::{abc_violation, regularise_with_beads};

/// Iterator over all partitions of n in descending lexicographic order,
/// starting at (n) and ending at (1^n).
pub struct Partitions {
    current: Option<Vec<usize>>,
}

/// All partitions of n, each exactly once, lex-descending.
pub fn partitions(n: usize) -> Partitions {
    let first = if n == 0 { Vec::new() } else { vec![n] };
    Partitions {
        current: Some(first),
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Self::Item> {
        let parts = self.current.take()?;
        let result = Partition::new(parts.clone()).expect("enumeration yields valid partitions");

        // successor: shrink the rightmost part above 1, then refill greedily
        if let Some(idx) = parts.iter().rposition(|&p| p > 1) {
            let cap = parts[idx] - 1;
            let mut remaining = parts[idx] + (parts.len() - 1 - idx);
            let mut next = parts[..idx].to_vec();
            while remaining > 0 {
                let chunk = cap.min(remaining);
                next.push(chunk);
                remaining -= chunk;
            }
            self.current = Some(next);
        }
        Some(result)
    }
}

/// One (e,i)-regularisation class: all partitions of n sharing a ladder
/// fingerprint, lex-descending, with the unique hook-free member singled
/// out. That member is always the most dominant, hence also first in the
/// list.
#[derive(Debug, Clone, Serialize)]
pub struct RegClass {
    pub representative: Partition,
    pub members: Vec<Partition>,
    pub fingerprint: LadderFingerprint,
}

/// Groups the partitions of n by fingerprint and scans each group for its
/// hook-free member. A group with zero or several hook-free members
/// falsifies the uniqueness theorem and surfaces as an error, never as a
/// repaired result.
pub fn classes(n: usize, p: EiParams) -> Result<Vec<RegClass>> {
    let mut classes: Vec<RegClass> = grouped(n, p)
        .into_iter()
        .map(|(fingerprint, members)| {
            let mut hook_free = members.iter().filter(|m| m.ei_hooks(p).is_empty());
            let representative = hook_free
                .next()
                .ok_or_else(|| Error::NoRepresentative(members[0].to_string()))?
                .clone();
            if let Some(second) = hook_free.next() {
                return Err(Error::MultipleRepresentatives(
                    representative.to_string(),
                    second.to_string(),
                ));
            }
            Ok(RegClass {
                representative,
                members,
                fingerprint,
            })
        })
        .collect::<Result<_>>()?;
    classes.sort_by(|a, b| b.representative.cmp(&a.representative));
    Ok(classes)
}

/// Fingerprint groups in order of first appearance; members stay in the
/// lex-descending enumeration order.
fn grouped(n: usize, p: EiParams) -> Vec<(LadderFingerprint, Vec<Partition>)> {
    let mut index: HashMap<LadderFingerprint, usize> = HashMap::new();
    let mut groups: Vec<(LadderFingerprint, Vec<Partition>)> = Vec::new();
    for lambda in partitions(n) {
        let fp = fingerprint(&lambda, p);
        match index.get(&fp) {
            Some(&at) => groups[at].1.push(lambda),
            None => {
                index.insert(fp.clone(), groups.len());
                groups.push((fp, vec![lambda]));
            }
        }
    }
    groups
}

/// Outcome of one named check of [`verify`].
#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl CheckOutcome {
    fn pass(name: &'static str) -> Self {
        CheckOutcome {
            name,
            pass: true,
            counterexample: None,
        }
    }

    fn fail(name: &'static str, counterexample: String) -> Self {
        CheckOutcome {
            name,
            pass: false,
            counterexample: Some(counterexample),
        }
    }

    fn from(name: &'static str, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Self::pass(name),
            Some(cex) => Self::fail(name, cex),
        }
    }
}

/// Report of the exhaustive verification of every structural claim over all
/// partitions of n at fixed parameters. Failures carry a concrete
/// counterexample; they are data, not errors.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub e: usize,
    pub i: usize,
    pub class_count: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "n={} e={} i={}: {} classes",
            self.n, self.e, self.i, self.class_count
        )?;
        for check in &self.checks {
            match &check.counterexample {
                None => writeln!(f, "  {:<18} pass", check.name)?,
                Some(cex) => writeln!(f, "  {:<18} FAIL  {}", check.name, cex)?,
            }
        }
        Ok(())
    }
}

/// Runs the ten structural checks over all partitions of n. The
/// representative used as reference comes from the hook scan in
/// [`classes`], so agreement with the bead-moving algorithm is a genuine
/// two-implementation cross-check.
pub fn verify(n: usize, p: EiParams) -> VerificationReport {
    let (e, i) = (p.e(), p.i());
    let groups = grouped(n, p);
    let class_count = groups.len();
    let mut checks = Vec::with_capacity(10);

    // UNIQUE-REP: exactly one hook-free member per class
    let mut unique_rep_cex = None;
    let mut reps: HashMap<LadderFingerprint, Partition> = HashMap::new();
    for (fp, members) in &groups {
        let hook_free: Vec<&Partition> = members
            .iter()
            .filter(|m| m.ei_hooks(p).is_empty())
            .collect();
        match hook_free.as_slice() {
            [only] => {
                reps.insert(fp.clone(), (*only).clone());
            }
            [] => {
                unique_rep_cex
                    .get_or_insert_with(|| format!("class of {} has no hook-free member", members[0]));
            }
            several => {
                unique_rep_cex.get_or_insert_with(|| {
                    format!(
                        "class of {} has {} hook-free members",
                        members[0],
                        several.len()
                    )
                });
            }
        }
    }
    let reps_complete = unique_rep_cex.is_none();
    checks.push(CheckOutcome::from("UNIQUE-REP", unique_rep_cex));

    let rep_of = |fp: &LadderFingerprint| reps.get(fp);
    let blocked = || Some("blocked: representatives are not unique".to_string());

    // MAX-DOM: the representative dominates every class member
    let mut cex = if reps_complete { None } else { blocked() };
    if reps_complete {
        'outer: for (fp, members) in &groups {
            let rep = rep_of(fp).expect("complete");
            for member in members {
                if !rep.dominates(member).expect("same n") {
                    cex = Some(format!("{rep} does not dominate class member {member}"));
                    break 'outer;
                }
            }
        }
    }
    checks.push(CheckOutcome::from("MAX-DOM", cex));

    // per-partition sweep shared by ALGO-AGREE, FINGERPRINT-STEP,
    // LEX/DOM-STEP and S-INV
    let mut algo_cex = if reps_complete { None } else { blocked() };
    let mut fp_step_cex = None;
    let mut lexdom_cex = None;
    let mut sinv_cex = None;
    for (fp, members) in &groups {
        for lambda in members {
            let beads = lambda.num_parts();
            let runs: Vec<_> = [beads.max(1), beads + 1, beads + e]
                .into_iter()
                .map(|s| regularise_with_beads(lambda, p, s))
                .collect();
            let base = match &runs[0] {
                Ok(r) => r,
                Err(err) => {
                    algo_cex.get_or_insert_with(|| format!("{lambda}: {err}"));
                    continue;
                }
            };
            if reps_complete && algo_cex.is_none() {
                let rep = rep_of(fp).expect("complete");
                if &base.output != rep {
                    algo_cex = Some(format!(
                        "regularisation of {lambda} gives {} but the class representative is {rep}",
                        base.output
                    ));
                }
            }
            if fp_step_cex.is_none() || lexdom_cex.is_none() {
                for trace in &base.steps {
                    let before = trace.before.partition();
                    let after = trace.after.partition();
                    if fp_step_cex.is_none() && fingerprint(&before, p) != fingerprint(&after, p) {
                        fp_step_cex =
                            Some(format!("step {before} -> {after} changes the fingerprint"));
                    }
                    if lexdom_cex.is_none() {
                        let lex_up = after.lex_cmp(&before) == Ok(Ordering::Greater);
                        let dom_up = after != before && after.dominates(&before) == Ok(true);
                        if !lex_up || !dom_up {
                            lexdom_cex = Some(format!(
                                "step {before} -> {after} is not a strict lex/dominance increase"
                            ));
                        }
                    }
                }
            }
            if sinv_cex.is_none() {
                for run in &runs[1..] {
                    match run {
                        Ok(other) if other.output == base.output => {}
                        Ok(other) => {
                            sinv_cex = Some(format!(
                                "{lambda}: output {} with default beads but {} with more",
                                base.output, other.output
                            ));
                        }
                        Err(err) => {
                            sinv_cex = Some(format!("{lambda}: {err}"));
                        }
                    }
                }
            }
        }
    }
    checks.push(CheckOutcome::from("ALGO-AGREE", algo_cex));
    checks.push(CheckOutcome::from("FINGERPRINT-STEP", fp_step_cex));
    checks.push(CheckOutcome::from("LEX/DOM-STEP", lexdom_cex));

    // REFINE: a shared (2e,2i)-fingerprint forces a shared (e,i)-fingerprint
    let mut cex = None;
    if e <= 3 {
        let doubled = p.scaled(2);
        let mut seen: HashMap<LadderFingerprint, (Partition, LadderFingerprint)> = HashMap::new();
        'refine: for lambda in partitions(n) {
            let coarse = fingerprint(&lambda, p);
            let fine = fingerprint(&lambda, doubled);
            match seen.get(&fine) {
                Some((first, first_coarse)) if *first_coarse != coarse => {
                    cex = Some(format!(
                        "{first} and {lambda} share the ({},{}) fingerprint but not the ({e},{i}) one",
                        doubled.e(),
                        doubled.i()
                    ));
                    break 'refine;
                }
                Some(_) => {}
                None => {
                    seen.insert(fine, (lambda, coarse));
                }
            }
        }
    }
    checks.push(CheckOutcome::from("REFINE", cex));

    // JAMES: for i = 1, representatives are exactly the e-regular partitions
    let mut cex = if reps_complete || i != 1 { None } else { blocked() };
    if i == 1 && reps_complete {
        'james: for (fp, members) in &groups {
            let rep = rep_of(fp).expect("complete");
            if !rep.is_e_regular(e) {
                cex = Some(format!("representative {rep} is {e}-singular"));
                break;
            }
            for member in members {
                if member.is_e_regular(e) && member != rep {
                    cex = Some(format!(
                        "{member} is {e}-regular but its representative is {rep}"
                    ));
                    break 'james;
                }
            }
        }
    }
    checks.push(CheckOutcome::from("JAMES", cex));

    // ABC-NEC: no representative carries an A,B,C triple in one ladder
    let mut cex = if reps_complete { None } else { blocked() };
    if reps_complete {
        for (fp, _) in &groups {
            let rep = rep_of(fp).expect("complete");
            if let Some((a, b, c)) = abc_violation(rep, p, None) {
                cex = Some(format!("representative {rep} has rungs {a}, {b}, {c}"));
                break;
            }
        }
    }
    checks.push(CheckOutcome::from("ABC-NEC", cex));

    // HOOK-EQUIV: diagram and abacus hook detection agree at two bead counts
    let mut cex = None;
    'hooks: for (_, members) in &groups {
        for lambda in members {
            let diagram = !lambda.ei_hooks(p).is_empty();
            for s in [lambda.num_parts(), lambda.num_parts() + e] {
                let display = AbacusDisplay::from_partition(lambda, e, s).expect("s >= parts");
                if display.find_ei_hook(i).is_some() != diagram {
                    cex = Some(format!(
                        "{lambda}: diagram says hook={diagram}, abacus with {s} beads disagrees"
                    ));
                    break 'hooks;
                }
            }
        }
    }
    checks.push(CheckOutcome::from("HOOK-EQUIV", cex));

    checks.push(CheckOutcome::from("S-INV", sinv_cex));

    VerificationReport {
        n,
        e,
        i,
        class_count,
        checks,
    }
}
