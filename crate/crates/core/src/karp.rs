//! Karp-style dynamic program over walk lengths; certificate-free oracle.
//!
//! `D[k][v]` is the minimum weight of a walk with exactly `k` arcs from a
//! fixed source to `v`. The optimum mean is
//! `min_v max_k (D[n][v] - D[k][v]) / (n - k)` over reachable entries. This
//! is O(nm) time and O(n^2) memory, independent of the policy-iteration
//! solver, which is exactly why the test suites cross-check against it.

use alloc::vec::Vec;

use crate::graph::WeightedDigraph;
use crate::howard::{Direction, SolveError};
use crate::rational::Rational;

/// Exact optimum cycle mean of a strongly connected component by dynamic
/// programming. Works on any graph whose every cycle is reachable from node
/// 0, which holds for strongly connected inputs.
pub fn karp_cycle_mean(g: &WeightedDigraph, direction: Direction) -> Result<Rational, SolveError> {
    match direction {
        Direction::Min => karp_min(g),
        Direction::Max => karp_min(&g.negate()).map(|r| -r),
    }
}

fn karp_min(g: &WeightedDigraph) -> Result<Rational, SolveError> {
    let n = g.node_count();
    if g.arc_count() == 0 {
        return Err(SolveError::NoCycle);
    }

    // dist[k][v] = min weight over walks of exactly k arcs from node 0.
    let mut dist: Vec<Vec<Option<i128>>> = alloc::vec![alloc::vec![None; n]; n + 1];
    dist[0][0] = Some(0);
    for k in 1..=n {
        let (prev, rest) = dist.split_at_mut(k);
        let prev = &prev[k - 1];
        let cur = &mut rest[0];
        for arc in g.arcs() {
            if let Some(base) = prev[arc.tail as usize] {
                let cand = base + arc.weight as i128;
                let slot = &mut cur[arc.head as usize];
                if slot.is_none_or(|old| cand < old) {
                    *slot = Some(cand);
                }
            }
        }
    }

    let mut best: Option<Rational> = None;
    for v in 0..n {
        let Some(full) = dist[n][v] else { continue };
        let mut worst: Option<Rational> = None;
        for (k, row) in dist.iter().take(n).enumerate() {
            if let Some(dk) = row[v] {
                let ratio = Rational::new(full - dk, (n - k) as i128);
                if worst.is_none_or(|w| ratio > w) {
                    worst = Some(ratio);
                }
            }
        }
        if let Some(w) = worst {
            if best.is_none_or(|b| w < b) {
                best = Some(w);
            }
        }
    }

    match best {
        Some(lambda) => Ok(lambda / Rational::from_int(g.denominator() as i128)),
        None => Err(SolveError::NoCycle),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;
    use crate::howard::{max_cycle_mean, min_cycle_mean};
    use alloc::vec;

    fn arc(tail: u32, head: u32, weight: i64) -> Arc {
        Arc { tail, head, weight }
    }

    #[test]
    fn self_loop() {
        let g = WeightedDigraph::new(1, vec![arc(0, 0, 887)]).unwrap();
        assert_eq!(
            karp_cycle_mean(&g, Direction::Min).unwrap(),
            Rational::from_int(887)
        );
        assert_eq!(
            karp_cycle_mean(&g, Direction::Max).unwrap(),
            Rational::from_int(887)
        );
    }

    #[test]
    fn agrees_with_policy_iteration_on_mixed_graph() {
        let arcs = vec![
            arc(0, 1, 2),
            arc(1, 2, -4),
            arc(2, 0, 1),
            arc(1, 0, 7),
            arc(2, 2, 3),
            arc(0, 2, -1),
            arc(2, 1, 0),
        ];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        let lo = karp_cycle_mean(&g, Direction::Min).unwrap();
        let hi = karp_cycle_mean(&g, Direction::Max).unwrap();
        assert_eq!(lo, min_cycle_mean(&g).unwrap().lambda);
        assert_eq!(hi, max_cycle_mean(&g).unwrap().lambda);
        assert!(lo <= hi);
    }

    #[test]
    fn two_node_parity_is_handled() {
        // Walks from node 0 alternate parity; D[n][v] is still populated for
        // some v and the recurrence recovers the single cycle's mean.
        let g = WeightedDigraph::new(2, vec![arc(0, 1, 3), arc(1, 0, 7)]).unwrap();
        assert_eq!(
            karp_cycle_mean(&g, Direction::Min).unwrap(),
            Rational::new(10, 2)
        );
    }

    #[test]
    fn no_cycle_errors() {
        let g = WeightedDigraph::new(2, vec![arc(0, 1, 3)]).unwrap();
        assert_eq!(
            karp_cycle_mean(&g, Direction::Min).unwrap_err(),
            SolveError::NoCycle
        );
    }
}
