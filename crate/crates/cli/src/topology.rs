//! Seeded random topologies for sweeps and benchmarks.
//!
//! Two families: small strongly connected multigraphs (a ring through all
//! nodes plus random extra arcs, so connectivity is by construction), and
//! circuit-like graphs (a forward backbone with short-span skips and a few
//! feedback arcs), whose cycle population stays small enough for exhaustive
//! enumeration.

use ocm_core::{Arc, WeightedDigraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Strongly connected multigraph: ring over all `n` nodes plus `extra`
/// random arcs (self-loops and parallels allowed), weights uniform in
/// `[w_lo, w_hi]`.
pub fn random_strongly_connected(
    seed: u64,
    n: usize,
    extra: usize,
    w_lo: i64,
    w_hi: i64,
) -> WeightedDigraph {
    assert!(n >= 1 && w_lo <= w_hi);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut arcs: Vec<Arc> = (0..n)
        .map(|i| Arc {
            tail: i as u32,
            head: ((i + 1) % n) as u32,
            weight: rng.gen_range(w_lo..=w_hi),
        })
        .collect();
    for _ in 0..extra {
        arcs.push(Arc {
            tail: rng.gen_range(0..n as u32),
            head: rng.gen_range(0..n as u32),
            weight: rng.gen_range(w_lo..=w_hi),
        });
    }
    WeightedDigraph::new(n, arcs).unwrap()
}

/// Circuit-like cyclic topology with unit weights (weights are assigned
/// later by `gen-weights`).
///
/// One long feedback loop over roughly a third of the nodes carries a few
/// forward shortcuts and `feedback` short backward arcs (span at most
/// `window`), giving a single dominant component whose max-length cycle is
/// the long loop while short cycles set the mean extremes. The remaining
/// nodes form an acyclic tail that absorbs the rest of the arc budget. The
/// cycle population stays small enough for exhaustive enumeration.
pub fn circuit_topology(
    seed: u64,
    n: usize,
    m_target: usize,
    window: usize,
    feedback: usize,
) -> WeightedDigraph {
    assert!(n >= 12 && window >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let loop_len = n / 3 + rng.gen_range(0..=n / 6);
    let arc = |tail: usize, head: usize| Arc {
        tail: tail as u32,
        head: head as u32,
        weight: 1,
    };

    // Long loop: path 0..loop_len plus the closing arc.
    let mut arcs: Vec<Arc> = (0..loop_len).map(|i| arc(i, i + 1)).collect();
    arcs.push(arc(loop_len, 0));

    // Short feedback windows inside the loop.
    for _ in 0..feedback {
        let span = rng.gen_range(1..=window);
        let head = rng.gen_range(0..loop_len.saturating_sub(span).max(1));
        arcs.push(arc(head + span, head));
    }
    // A few forward shortcuts create alternate routes around the loop.
    for _ in 0..6 {
        let span = rng.gen_range(2..=4);
        let tail = rng.gen_range(0..loop_len - span);
        arcs.push(arc(tail, tail + span));
    }

    // Acyclic tail: a path through the remaining nodes, fed from the loop.
    arcs.push(arc(rng.gen_range(0..=loop_len), loop_len + 1));
    for i in loop_len + 1..n - 1 {
        arcs.push(arc(i, i + 1));
    }
    // Fill the remaining budget with forward-only arcs into or along the
    // tail; they can never close a cycle.
    while arcs.len() < m_target {
        let tail = rng.gen_range(0..n - 1);
        let head = rng.gen_range((tail.max(loop_len)) + 1..n);
        arcs.push(arc(tail, head));
    }
    WeightedDigraph::new(n, arcs).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ocm_core::{count_simple_cycles, decompose_sccs};

    #[test]
    fn ring_plus_extras_is_strongly_connected() {
        for seed in 0..20 {
            let g = random_strongly_connected(seed, 8, 10, -50, 50);
            let d = decompose_sccs(&g);
            assert_eq!(d.components.len(), 1);
            assert!(!d.components[0].trivial);
        }
    }

    #[test]
    fn circuit_topology_is_cyclic_and_enumerable() {
        for seed in 0..10 {
            let g = circuit_topology(seed, 100, 200, 8, 12);
            assert_eq!(g.node_count(), 100);
            assert_eq!(g.arc_count(), 200);
            let d = decompose_sccs(&g);
            assert!(d.non_trivial().count() >= 1, "seed {seed} produced no cycle");
            let e = count_simple_cycles(&g, 1_000_000);
            assert!(e.complete, "seed {seed} exceeded the enumeration cap");
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_strongly_connected(5, 10, 12, -9, 9);
        let b = random_strongly_connected(5, 10, 12, -9, 9);
        assert_eq!(a.arcs(), b.arcs());
        let c = circuit_topology(3, 50, 100, 6, 8);
        let d = circuit_topology(3, 50, 100, 6, 8);
        assert_eq!(c.arcs(), d.arcs());
    }
}
