//! Minimum/maximum cycle mean by policy iteration, with optimality
//! certificates.
//!
//! The solver maintains one chosen outgoing arc per node (the policy). Value
//! determination assigns each node the mean of the policy cycle it drains
//! into plus an exact potential; improvement switches a node's arc only on a
//! strict lexicographic win, so the iteration terminates and every run of
//! the same input produces the same certificate.
//!
//! The returned certificate proves optimality on its own: potentials
//! feasible on every arc, equality on the witness cycle. `verify_certificate`
//! re-checks exactly that, which is what the test suites lean on.

use alloc::vec::Vec;

use crate::graph::{cycle_mean, Cycle, WeightedDigraph};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Direction {
    Min,
    Max,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    /// Trivial component: no cycle exists.
    NoCycle,
    /// Some node has no outgoing arc, so the input is not a strongly
    /// connected component with a cycle.
    NotStronglyConnected { node: u32 },
    /// Internal safety valve; must not trigger on finite integer inputs.
    IterationLimit,
}

impl core::fmt::Display for SolveError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            SolveError::NoCycle => write!(f, "component contains no cycle"),
            SolveError::NotStronglyConnected { node } => {
                write!(f, "node {node} has no outgoing arc")
            }
            SolveError::IterationLimit => write!(f, "policy iteration failed to converge"),
        }
    }
}

impl core::error::Error for SolveError {}

/// Optimum cycle mean plus the evidence for it.
#[derive(Clone, Debug)]
pub struct CycleMeanCertificate {
    pub lambda: Rational,
    /// A simple cycle achieving `lambda`, in canonical rotation.
    pub witness: Cycle,
    /// Node potentials indexed by node id. For `Min`, every arc `(u,v)`
    /// satisfies `d(v) - d(u) <= w(u,v) - lambda`; for `Max` the mirrored
    /// `>=` holds. Witness arcs meet the bound with equality, and the
    /// smallest node of the witness carries potential zero.
    pub potentials: Vec<Rational>,
    pub direction: Direction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    PotentialCountMismatch,
    ArcInfeasible { arc: u32 },
    WitnessMeanMismatch,
    WitnessArcSlack { arc: u32 },
    AnchorNotZero,
}

impl core::fmt::Display for CertificateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CertificateError::PotentialCountMismatch => {
                write!(f, "potential vector length differs from node count")
            }
            CertificateError::ArcInfeasible { arc } => {
                write!(f, "arc {arc} violates the potential inequality")
            }
            CertificateError::WitnessMeanMismatch => {
                write!(f, "witness cycle mean differs from lambda")
            }
            CertificateError::WitnessArcSlack { arc } => {
                write!(f, "witness arc {arc} has potential slack")
            }
            CertificateError::AnchorNotZero => {
                write!(f, "witness anchor potential is not zero")
            }
        }
    }
}

impl core::error::Error for CertificateError {}

/// Exact minimum cycle mean of a strongly connected component.
pub fn min_cycle_mean(g: &WeightedDigraph) -> Result<CycleMeanCertificate, SolveError> {
    let (lambda_int, witness_arcs, pot_int) = howard_min_on_integers(g)?;
    let denom = Rational::from_int(g.denominator() as i128);
    let witness = Cycle::new(g, witness_arcs).expect("policy cycle is a valid simple cycle");
    Ok(CycleMeanCertificate {
        lambda: lambda_int / denom,
        witness,
        // Spec orientation: negate so d(v) - d(u) <= w(u,v) - lambda.
        potentials: pot_int.into_iter().map(|d| -d / denom).collect(),
        direction: Direction::Min,
    })
}

/// Exact maximum cycle mean, computed as the minimum on the negated graph.
pub fn max_cycle_mean(g: &WeightedDigraph) -> Result<CycleMeanCertificate, SolveError> {
    let negated = g.negate();
    let (lambda_int, witness_arcs, pot_int) = howard_min_on_integers(&negated)?;
    let denom = Rational::from_int(g.denominator() as i128);
    let witness = Cycle::new(g, witness_arcs).expect("policy cycle is a valid simple cycle");
    Ok(CycleMeanCertificate {
        lambda: -lambda_int / denom,
        // Two sign flips (mirror + orientation) cancel out.
        witness,
        potentials: pot_int.into_iter().map(|d| d / denom).collect(),
        direction: Direction::Max,
    })
}

/// Re-derives every certificate claim from scratch.
pub fn verify_certificate(
    g: &WeightedDigraph,
    cert: &CycleMeanCertificate,
) -> Result<(), CertificateError> {
    if cert.potentials.len() != g.node_count() {
        return Err(CertificateError::PotentialCountMismatch);
    }
    let denom = Rational::from_int(g.denominator() as i128);
    for (id, arc) in g.arcs().iter().enumerate() {
        let w = Rational::from_int(arc.weight as i128) / denom;
        let lhs = cert.potentials[arc.head as usize] - cert.potentials[arc.tail as usize];
        let rhs = w - cert.lambda;
        let ok = match cert.direction {
            Direction::Min => lhs <= rhs,
            Direction::Max => lhs >= rhs,
        };
        if !ok {
            return Err(CertificateError::ArcInfeasible { arc: id as u32 });
        }
    }
    if cycle_mean(g, &cert.witness) != cert.lambda {
        return Err(CertificateError::WitnessMeanMismatch);
    }
    for &id in cert.witness.arc_ids() {
        let arc = g.arc(id);
        let w = Rational::from_int(arc.weight as i128) / denom;
        let lhs = cert.potentials[arc.head as usize] - cert.potentials[arc.tail as usize];
        if lhs != w - cert.lambda {
            return Err(CertificateError::WitnessArcSlack { arc: id });
        }
    }
    let anchor = *cert
        .witness
        .nodes(g)
        .iter()
        .min()
        .expect("witness is non-empty");
    if !cert.potentials[anchor as usize].is_zero() {
        return Err(CertificateError::AnchorNotZero);
    }
    Ok(())
}

/// Core policy iteration on raw integer weights.
///
/// Returns `lambda`, the witness arcs (rotated to start at the witness's
/// smallest node), and potentials `d` with `d(u) - d(v) = w - lambda` on
/// policy arcs and `<=` on all arcs.
fn howard_min_on_integers(
    g: &WeightedDigraph,
) -> Result<(Rational, Vec<u32>, Vec<Rational>), SolveError> {
    let n = g.node_count();
    if g.arc_count() == 0 {
        return Err(SolveError::NoCycle);
    }
    for v in 0..n as u32 {
        if g.out_arcs(v).is_empty() {
            if n == 1 {
                return Err(SolveError::NoCycle);
            }
            return Err(SolveError::NotStronglyConnected { node: v });
        }
    }

    // Initial policy: cheapest arc, smallest arc id on ties.
    let mut policy: Vec<u32> = (0..n as u32)
        .map(|v| {
            let mut best = g.out_arcs(v)[0];
            for &a in &g.out_arcs(v)[1..] {
                if g.arc(a).weight < g.arc(best).weight {
                    best = a;
                }
            }
            best
        })
        .collect();

    let mut lambda = alloc::vec![Rational::ZERO; n];
    let mut d = alloc::vec![Rational::ZERO; n];
    let mut cycle_anchors: Vec<u32> = Vec::new();

    let max_rounds = 64 * n + 1024;
    for _ in 0..max_rounds {
        evaluate_policy(g, &policy, &mut lambda, &mut d, &mut cycle_anchors);

        let mut changed = false;
        for u in 0..n as u32 {
            let mut best_key = (lambda[u as usize], d[u as usize]);
            let mut best_arc = policy[u as usize];
            for &a in g.out_arcs(u) {
                let v = g.arc(a).head as usize;
                let cand = (
                    lambda[v],
                    Rational::from_int(g.arc(a).weight as i128) - lambda[v] + d[v],
                );
                if cand < best_key {
                    best_key = cand;
                    best_arc = a;
                }
            }
            if best_arc != policy[u as usize] {
                policy[u as usize] = best_arc;
                changed = true;
            }
        }

        if !changed {
            let witness_anchor = *cycle_anchors
                .iter()
                .min()
                .expect("a policy over out-arcs always contains a cycle");
            let mut witness = Vec::new();
            let mut at = witness_anchor;
            loop {
                let a = policy[at as usize];
                witness.push(a);
                at = g.arc(a).head;
                if at == witness_anchor {
                    break;
                }
            }
            return Ok((lambda[witness_anchor as usize], witness, d));
        }
    }
    Err(SolveError::IterationLimit)
}

/// Multichain value determination for one policy.
///
/// Every node drains into exactly one policy cycle. Cycle nodes get the
/// cycle's exact mean and potentials anchored at the cycle's smallest node;
/// tree nodes inherit down the policy chain. `cycle_anchors` collects one
/// anchor per policy cycle.
fn evaluate_policy(
    g: &WeightedDigraph,
    policy: &[u32],
    lambda: &mut [Rational],
    d: &mut [Rational],
    cycle_anchors: &mut Vec<u32>,
) {
    let n = policy.len();
    cycle_anchors.clear();
    // 0 = unvisited, 1 = on current walk, 2 = resolved.
    let mut state = alloc::vec![0u8; n];
    let mut walk: Vec<u32> = Vec::new();

    for v0 in 0..n as u32 {
        if state[v0 as usize] != 0 {
            continue;
        }
        walk.clear();
        let mut u = v0;
        while state[u as usize] == 0 {
            state[u as usize] = 1;
            walk.push(u);
            u = g.arc(policy[u as usize]).head;
        }

        if state[u as usize] == 1 {
            // Closed a new policy cycle; `u` is its entry point on the walk.
            let pos = walk.iter().position(|&x| x == u).unwrap();
            let cycle = &walk[pos..];
            let mut weight: i128 = 0;
            for &x in cycle {
                weight += g.arc(policy[x as usize]).weight as i128;
            }
            let mean = Rational::new(weight, cycle.len() as i128);

            let anchor_pos = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
            let anchor = cycle[anchor_pos];
            cycle_anchors.push(anchor);
            d[anchor as usize] = Rational::ZERO;
            lambda[anchor as usize] = mean;
            state[anchor as usize] = 2;
            // Walk the cycle backwards from the anchor: d(u) = w - mean + d(succ).
            for back in (1..cycle.len()).rev() {
                let x = cycle[(anchor_pos + back) % cycle.len()];
                let succ = g.arc(policy[x as usize]).head;
                d[x as usize] = Rational::from_int(g.arc(policy[x as usize]).weight as i128)
                    - mean
                    + d[succ as usize];
                lambda[x as usize] = mean;
                state[x as usize] = 2;
            }
        }

        // Unwind the remaining walk prefix in reverse.
        while let Some(&x) = walk.last() {
            if state[x as usize] == 2 {
                walk.pop();
                continue;
            }
            break;
        }
        while let Some(x) = walk.pop() {
            if state[x as usize] == 2 {
                continue;
            }
            let succ = g.arc(policy[x as usize]).head;
            debug_assert_eq!(state[succ as usize], 2);
            d[x as usize] = Rational::from_int(g.arc(policy[x as usize]).weight as i128)
                - lambda[succ as usize]
                + d[succ as usize];
            lambda[x as usize] = lambda[succ as usize];
            state[x as usize] = 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Arc;
    use alloc::vec;

    fn arc(tail: u32, head: u32, weight: i64) -> Arc {
        Arc { tail, head, weight }
    }

    #[test]
    fn single_self_loop() {
        let g = WeightedDigraph::new(1, vec![arc(0, 0, 5)]).unwrap();
        let cert = min_cycle_mean(&g).unwrap();
        assert_eq!(cert.lambda, Rational::from_int(5));
        assert_eq!(cert.witness.length(), 1);
        verify_certificate(&g, &cert).unwrap();
    }

    #[test]
    fn trivial_component_errors() {
        let g = WeightedDigraph::new(1, vec![]).unwrap();
        assert_eq!(min_cycle_mean(&g).unwrap_err(), SolveError::NoCycle);
    }

    #[test]
    fn dead_end_node_errors() {
        let g = WeightedDigraph::new(2, vec![arc(0, 1, 1)]).unwrap();
        assert_eq!(
            min_cycle_mean(&g).unwrap_err(),
            SolveError::NotStronglyConnected { node: 1 }
        );
    }

    #[test]
    fn two_cycles_min_and_max() {
        // Self-loop mean 7 at node 0; triangle 0-1-2 mean 2.
        let arcs = vec![
            arc(0, 0, 7),
            arc(0, 1, 1),
            arc(1, 2, 2),
            arc(2, 0, 3),
        ];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        let lo = min_cycle_mean(&g).unwrap();
        assert_eq!(lo.lambda, Rational::from_int(2));
        assert_eq!(lo.witness.length(), 3);
        verify_certificate(&g, &lo).unwrap();

        let hi = max_cycle_mean(&g).unwrap();
        assert_eq!(hi.lambda, Rational::from_int(7));
        assert_eq!(hi.witness.length(), 1);
        verify_certificate(&g, &hi).unwrap();
    }

    #[test]
    fn negative_weights() {
        let arcs = vec![arc(0, 1, -3), arc(1, 0, -1), arc(0, 0, -5)];
        let g = WeightedDigraph::new(2, arcs).unwrap();
        let lo = min_cycle_mean(&g).unwrap();
        assert_eq!(lo.lambda, Rational::from_int(-5));
        let hi = max_cycle_mean(&g).unwrap();
        assert_eq!(hi.lambda, Rational::new(-4, 2));
        verify_certificate(&g, &lo).unwrap();
        verify_certificate(&g, &hi).unwrap();
    }

    #[test]
    fn parallel_arcs_pick_cheapest() {
        let arcs = vec![arc(0, 1, 10), arc(0, 1, 4), arc(1, 0, 2)];
        let g = WeightedDigraph::new(2, arcs).unwrap();
        let lo = min_cycle_mean(&g).unwrap();
        assert_eq!(lo.lambda, Rational::new(6, 2));
        // Witness must use the parallel arc with weight 4 (arc id 1).
        assert!(lo.witness.arc_ids().contains(&1));
        let hi = max_cycle_mean(&g).unwrap();
        assert_eq!(hi.lambda, Rational::from_int(6));
        assert!(hi.witness.arc_ids().contains(&0));
    }

    #[test]
    fn deterministic_certificates() {
        let arcs = vec![
            arc(0, 1, 2),
            arc(1, 2, 4),
            arc(2, 0, 0),
            arc(1, 0, 1),
            arc(2, 1, 5),
            arc(0, 2, 3),
        ];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        let a = min_cycle_mean(&g).unwrap();
        let b = min_cycle_mean(&g).unwrap();
        assert_eq!(a.lambda, b.lambda);
        assert_eq!(a.witness.arc_ids(), b.witness.arc_ids());
        assert_eq!(a.potentials, b.potentials);
    }

    #[test]
    fn shifted_graph_keeps_denominator_exact() {
        let arcs = vec![arc(0, 1, 3), arc(1, 0, 4)];
        let g = WeightedDigraph::new(2, arcs).unwrap();
        let shifted = g.shift(Rational::new(1, 3));
        let cert = min_cycle_mean(&shifted).unwrap();
        assert_eq!(cert.lambda, Rational::new(7, 2) + Rational::new(1, 3));
        verify_certificate(&shifted, &cert).unwrap();
    }
}
