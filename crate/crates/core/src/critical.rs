//! Critical arcs and critical cycles of an optimum-cycle-mean certificate.
//!
//! An arc is critical when its potential inequality is tight. Telescoping
//! the tight equalities around any cycle of the critical subgraph forces its
//! mean to equal the optimum, and conversely every optimum-mean cycle lies
//! inside the critical subgraph, so enumerating that subgraph yields exactly
//! the critical cycles.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::enumerate::enumerate_simple_cycles;
use crate::graph::{cycle_mean, Arc, Cycle, WeightedDigraph};
use crate::howard::{CycleMeanCertificate, Direction};
use crate::rational::Rational;

/// Arcs with tight potential equality, plus collected critical cycles.
#[derive(Clone, Debug)]
pub struct CriticalSubgraph {
    pub direction: Direction,
    /// Arc ids of the parent graph whose inequality is tight, ascending.
    pub arc_ids: Vec<u32>,
    /// All critical cycles if their number fits the cap, otherwise just the
    /// certificate witness.
    pub cycles: Vec<Cycle>,
    /// True when the collected set had to fall back to the witness alone.
    pub truncated: bool,
}

/// Extremes over a collected critical-cycle set; the inputs the bound
/// evaluations need. Weights are exact (already divided by the graph
/// denominator).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CriticalSetSummary {
    pub count: u64,
    pub len_min: u32,
    pub len_max: u32,
    pub weight_min: Rational,
    pub weight_max: Rational,
    pub truncated: bool,
}

impl CriticalSubgraph {
    pub fn summary(&self, g: &WeightedDigraph) -> CriticalSetSummary {
        debug_assert!(!self.cycles.is_empty());
        let mut len_min = u32::MAX;
        let mut len_max = 0;
        let mut weight_min: Option<Rational> = None;
        let mut weight_max: Option<Rational> = None;
        for c in &self.cycles {
            len_min = len_min.min(c.length());
            len_max = len_max.max(c.length());
            let w = c.weight(g);
            weight_min = Some(weight_min.map_or(w, |m| m.min(w)));
            weight_max = Some(weight_max.map_or(w, |m| m.max(w)));
        }
        CriticalSetSummary {
            count: self.cycles.len() as u64,
            len_min,
            len_max,
            weight_min: weight_min.unwrap(),
            weight_max: weight_max.unwrap(),
            truncated: self.truncated,
        }
    }
}

/// Collects the critical subgraph of `cert` and up to `cycle_cap` of its
/// simple cycles.
///
/// Every collected cycle is re-checked to have mean exactly `cert.lambda`;
/// a mismatch would mean the certificate is not one for `g` and panics.
pub fn critical_subgraph(
    g: &WeightedDigraph,
    cert: &CycleMeanCertificate,
    cycle_cap: u64,
) -> CriticalSubgraph {
    let denom = Rational::from_int(g.denominator() as i128);
    let mut tight_ids: Vec<u32> = Vec::new();
    for (id, arc) in g.arcs().iter().enumerate() {
        let w = Rational::from_int(arc.weight as i128) / denom;
        let lhs = cert.potentials[arc.head as usize] - cert.potentials[arc.tail as usize];
        if lhs == w - cert.lambda {
            tight_ids.push(id as u32);
        }
    }

    // Rebuild the tight arcs as a graph over the same node set; cycles found
    // there map back through `tight_ids`.
    let sub_arcs: Vec<Arc> = tight_ids.iter().map(|&id| *g.arc(id)).collect();
    let sub = WeightedDigraph::new(g.node_count(), sub_arcs).expect("same node range");

    let mut collected: Vec<Vec<u32>> = Vec::new();
    let outcome = enumerate_simple_cycles(&sub, cycle_cap, |visit| {
        collected.push(visit.arc_ids.iter().map(|&a| tight_ids[a as usize]).collect());
        ControlFlow::Continue(())
    });

    let (cycles, truncated) = if outcome.complete {
        let cycles: Vec<Cycle> = collected
            .into_iter()
            .map(|ids| Cycle::new(g, ids).expect("tight subgraph cycles are valid in the parent"))
            .collect();
        (cycles, false)
    } else {
        (alloc::vec![cert.witness.clone()], true)
    };

    for c in &cycles {
        assert_eq!(
            cycle_mean(g, c),
            cert.lambda,
            "critical-subgraph cycle must achieve the optimum mean"
        );
    }

    CriticalSubgraph {
        direction: cert.direction,
        arc_ids: tight_ids,
        cycles,
        truncated,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::howard::{max_cycle_mean, min_cycle_mean};
    use alloc::vec;

    fn arc(tail: u32, head: u32, weight: i64) -> Arc {
        Arc { tail, head, weight }
    }

    #[test]
    fn uniform_weights_make_every_arc_critical() {
        let arcs = vec![
            arc(0, 1, 4),
            arc(1, 2, 4),
            arc(2, 0, 4),
            arc(1, 0, 4),
            arc(0, 0, 4),
        ];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        let lo = min_cycle_mean(&g).unwrap();
        let hi = max_cycle_mean(&g).unwrap();
        assert_eq!(lo.lambda, hi.lambda);
        let sub = critical_subgraph(&g, &lo, 1_000);
        assert_eq!(sub.arc_ids.len(), g.arc_count());
        // 0->0, 0->1->0, 0->1->2->0: all three cycles are critical.
        assert_eq!(sub.cycles.len(), 3);
        assert!(!sub.truncated);
    }

    #[test]
    fn collects_only_optimum_cycles() {
        // Self-loop mean 1 at node 0 vs 2-cycle mean 5.
        let arcs = vec![arc(0, 0, 1), arc(0, 1, 4), arc(1, 0, 6)];
        let g = WeightedDigraph::new(2, arcs).unwrap();
        let lo = min_cycle_mean(&g).unwrap();
        let sub = critical_subgraph(&g, &lo, 1_000);
        assert_eq!(sub.cycles.len(), 1);
        assert_eq!(sub.cycles[0].length(), 1);
        let summary = sub.summary(&g);
        assert_eq!(summary.len_min, 1);
        assert_eq!(summary.weight_max, Rational::from_int(1));
        assert!(!summary.truncated);
    }

    #[test]
    fn zero_cap_keeps_witness_and_flags_truncation() {
        let arcs = vec![arc(0, 1, 2), arc(1, 0, 2)];
        let g = WeightedDigraph::new(2, arcs).unwrap();
        let lo = min_cycle_mean(&g).unwrap();
        let sub = critical_subgraph(&g, &lo, 0);
        assert!(sub.truncated);
        assert_eq!(sub.cycles.len(), 1);
        assert_eq!(sub.cycles[0], lo.witness);
    }
}
