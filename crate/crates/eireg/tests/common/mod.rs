//! Helpers shared by the integration test suites, including the exhaustive
//! sweeps that both the property tests and the acceptance gate run.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use eireg::{ladder_key, partitions, AbacusDisplay, EiParams, Node, Partition};

pub fn part(text: &str) -> Partition {
    text.parse().unwrap()
}

pub fn params(e: usize, i: usize) -> EiParams {
    EiParams::new(e, i).unwrap()
}

/// Every (e,i) with 2 <= e <= max_e and 0 < i < e.
pub fn all_params(max_e: usize) -> Vec<EiParams> {
    (2..=max_e)
        .flat_map(|e| (1..e).map(move |i| params(e, i)))
        .collect()
}

/// p(n) by the pentagonal-number recurrence; independent of the
/// enumeration under test.
pub fn partition_count(n: usize) -> u64 {
    let mut table = vec![0i64; n + 1];
    table[0] = 1;
    for m in 1..=n {
        let mut total = 0i64;
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            total += sign * table[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                total += sign * table[m - g2];
            }
            k += 1;
        }
        table[m] = total;
    }
    table[n] as u64
}

/// Conjugation is an involution on all partitions of n <= 20.
pub fn sweep_conjugate_involution() {
    for n in 0..=20 {
        for lambda in partitions(n) {
            assert_eq!(lambda.conjugate().conjugate(), lambda);
        }
    }
}

/// Encoding to an abacus display and decoding again is the identity for
/// n <= 12, e in 2..=6 and several bead counts, and re-encoding the decode
/// reproduces the occupied set.
pub fn sweep_beta_round_trips() {
    for n in 0..=12 {
        for lambda in partitions(n) {
            let parts = lambda.num_parts();
            for e in 2..=6 {
                for s in [parts, parts + 1, parts + e] {
                    let display = AbacusDisplay::from_partition(&lambda, e, s).unwrap();
                    assert_eq!(display.beads(), s);
                    assert_eq!(display.partition(), lambda);

                    let again = AbacusDisplay::from_partition(&display.partition(), e, s).unwrap();
                    assert_eq!(again.occupied(), display.occupied());
                }
            }
        }
    }
}

/// Removing the skew-hook of any cell yields a valid partition of
/// n - hook_len whose removed cells form one contiguous rim segment.
pub fn sweep_skew_hook_removal() {
    for n in 1..=12 {
        for lambda in partitions(n) {
            let rim = lambda.rim();
            for x in lambda.cells() {
                let info = lambda.hook_info(x).unwrap();
                let smaller = lambda.remove_skew_hook(x).unwrap();
                assert_eq!(smaller.n(), n - info.hook_len);

                let removed: Vec<Node> =
                    lambda.cells().filter(|c| !smaller.contains(*c)).collect();
                assert_eq!(removed.len(), info.hook_len);
                let mut positions: Vec<usize> = removed
                    .iter()
                    .map(|c| {
                        rim.iter()
                            .position(|r| r == c)
                            .expect("removed cells lie on the rim")
                    })
                    .collect();
                positions.sort_unstable();
                for pair in positions.windows(2) {
                    assert_eq!(pair[1], pair[0] + 1, "skew-hook is a contiguous rim segment");
                }
            }
        }
    }
}

/// Dominance is reflexive, antisymmetric and transitive on partitions of
/// each n <= 10.
pub fn sweep_dominance_axioms() {
    for n in 0..=10 {
        let all: Vec<Partition> = partitions(n).collect();
        for a in &all {
            assert!(a.dominates(a).unwrap());
            for b in &all {
                if a.dominates(b).unwrap() && b.dominates(a).unwrap() {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if a.dominates(b).unwrap() && b.dominates(c).unwrap() {
                        assert!(a.dominates(c).unwrap());
                    }
                }
            }
        }
    }
}

/// Two cells of a 12 x 12 box share a ladder key exactly when they differ
/// by (-k(e-i), +ki) for an integer k, for every e <= 6.
pub fn sweep_ladder_parametrisation() {
    for p in all_params(6) {
        let (e, i) = (p.e(), p.i());
        let cells: Vec<Node> = (1..=12)
            .flat_map(|a| (1..=12).map(move |b| Node::new(a, b)))
            .collect();

        for &x in &cells {
            for k in 1..=12 {
                if x.row > k * (e - i) {
                    let shifted = Node::new(x.row - k * (e - i), x.col + k * i);
                    assert_eq!(ladder_key(shifted, p), ladder_key(x, p));
                }
            }
        }

        let mut by_key: HashMap<_, Vec<Node>> = HashMap::new();
        for &x in &cells {
            by_key.entry(ladder_key(x, p)).or_default().push(x);
        }
        for group in by_key.values() {
            for &u in group {
                for &v in group {
                    let dc = v.col as i64 - u.col as i64;
                    assert_eq!(dc % i as i64, 0, "{u} vs {v} under {p}");
                    let k = dc / i as i64;
                    assert_eq!(
                        v.row as i64,
                        u.row as i64 - k * (e - i) as i64,
                        "{u} vs {v} under {p}"
                    );
                }
            }
        }
    }
}

/// Enumeration agrees with the pentagonal recurrence and never repeats.
pub fn sweep_enumeration() {
    for n in 0..=25 {
        assert_eq!(partitions(n).count() as u64, partition_count(n));
    }
    for n in 0..=16 {
        let distinct: HashSet<Partition> = partitions(n).collect();
        assert_eq!(distinct.len() as u64, partition_count(n));
    }
}
