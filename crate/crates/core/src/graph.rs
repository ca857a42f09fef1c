//! Weighted directed multigraph with integer arc weights.
//!
//! Node ids are 0-based and dense. Parallel arcs and self-loops are allowed;
//! arcs keep their insertion order and are addressed by index, which is what
//! makes parallel arcs distinguishable throughout the crate.
//!
//! Rational shift/scale transforms are lifted to integers through a common
//! per-graph denominator, so all downstream arithmetic stays exact.

use alloc::vec::Vec;

use crate::rational::Rational;

/// A directed arc `tail -> head` with an integer weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arc {
    pub tail: u32,
    pub head: u32,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    /// An arc endpoint is outside `0..node_count`.
    NodeOutOfRange { arc: usize, node: u32 },
    /// Scale factor must be strictly positive.
    NonPositiveScale,
    ZeroNodes,
}

impl core::fmt::Display for GraphError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            GraphError::NodeOutOfRange { arc, node } => {
                write!(f, "arc {arc} references node {node} outside the node range")
            }
            GraphError::NonPositiveScale => write!(f, "scale factor must be positive"),
            GraphError::ZeroNodes => write!(f, "graph must have at least one node"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable weighted directed multigraph.
#[derive(Clone, Debug)]
pub struct WeightedDigraph {
    node_count: usize,
    arcs: Vec<Arc>,
    /// Common denominator for all arc weights; the true weight of arc `a`
    /// is `a.weight / denom`. Always 1 for parsed or hand-built graphs and
    /// only raised by rational `shift`/`scale` transforms.
    denom: i64,
    /// Outgoing arc ids per node, ascending.
    out: Vec<Vec<u32>>,
}

impl WeightedDigraph {
    pub fn new(node_count: usize, arcs: Vec<Arc>) -> Result<Self, GraphError> {
        Self::with_denominator(node_count, arcs, 1)
    }

    fn with_denominator(node_count: usize, arcs: Vec<Arc>, denom: i64) -> Result<Self, GraphError> {
        if node_count == 0 {
            return Err(GraphError::ZeroNodes);
        }
        debug_assert!(denom >= 1);
        let mut out = alloc::vec![Vec::new(); node_count];
        for (i, arc) in arcs.iter().enumerate() {
            let bad = [arc.tail, arc.head]
                .into_iter()
                .find(|&v| v as usize >= node_count);
            if let Some(node) = bad {
                return Err(GraphError::NodeOutOfRange { arc: i, node });
            }
            out[arc.tail as usize].push(i as u32);
        }
        Ok(WeightedDigraph {
            node_count,
            arcs,
            denom,
            out,
        })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, id: u32) -> &Arc {
        &self.arcs[id as usize]
    }

    /// Ids of arcs leaving `node`, in ascending arc order.
    pub fn out_arcs(&self, node: u32) -> &[u32] {
        &self.out[node as usize]
    }

    pub fn denominator(&self) -> i64 {
        self.denom
    }

    /// Exact weight of one arc, `weight/denom`.
    pub fn arc_weight(&self, id: u32) -> Rational {
        Rational::new(self.arcs[id as usize].weight as i128, self.denom as i128)
    }

    /// Minimum and maximum arc weight, or `None` for an arc-free graph.
    pub fn weight_bounds(&self) -> Option<(Rational, Rational)> {
        let min = self.arcs.iter().map(|a| a.weight).min()?;
        let max = self.arcs.iter().map(|a| a.weight).max()?;
        Some((
            Rational::new(min as i128, self.denom as i128),
            Rational::new(max as i128, self.denom as i128),
        ))
    }

    pub fn has_self_loop(&self, node: u32) -> bool {
        self.out[node as usize]
            .iter()
            .any(|&a| self.arcs[a as usize].head == node)
    }

    /// Adds `c` to every arc weight; same topology.
    pub fn shift(&self, c: Rational) -> WeightedDigraph {
        let q = c.denominator();
        debug_assert!(q > 0);
        let q64 = i64::try_from(q).expect("shift denominator out of range");
        let p = i64::try_from(c.numerator()).expect("shift numerator out of range");
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                tail: a.tail,
                head: a.head,
                weight: a.weight * q64 + p * self.denom,
            })
            .collect();
        WeightedDigraph::with_denominator(self.node_count, arcs, self.denom * q64)
            .expect("shift preserves validity")
    }

    /// Multiplies every arc weight by -1; same topology.
    pub fn negate(&self) -> WeightedDigraph {
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                tail: a.tail,
                head: a.head,
                weight: -a.weight,
            })
            .collect();
        WeightedDigraph::with_denominator(self.node_count, arcs, self.denom)
            .expect("negate preserves validity")
    }

    /// Multiplies every arc weight by `c > 0`; same topology.
    pub fn scale(&self, c: Rational) -> Result<WeightedDigraph, GraphError> {
        if !c.is_positive() {
            return Err(GraphError::NonPositiveScale);
        }
        let p = i64::try_from(c.numerator()).expect("scale numerator out of range");
        let q = i64::try_from(c.denominator()).expect("scale denominator out of range");
        let arcs = self
            .arcs
            .iter()
            .map(|a| Arc {
                tail: a.tail,
                head: a.head,
                weight: a.weight * p,
            })
            .collect();
        WeightedDigraph::with_denominator(self.node_count, arcs, self.denom * q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycleError {
    Empty,
    /// Arc at position `pos` does not start where the previous arc ended.
    NotAdjacent { pos: usize },
    /// Last arc does not return to the first arc's tail.
    NotClosed,
    /// A node other than the start appears twice.
    RepeatedNode { node: u32 },
}

impl core::fmt::Display for CycleError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            CycleError::Empty => write!(f, "cycle must contain at least one arc"),
            CycleError::NotAdjacent { pos } => write!(f, "arc at position {pos} is not adjacent"),
            CycleError::NotClosed => write!(f, "arc sequence does not close"),
            CycleError::RepeatedNode { node } => write!(f, "node {node} repeats in cycle"),
        }
    }
}

impl core::error::Error for CycleError {}

/// A node-simple cycle stored as an arc-id sequence with cached totals.
///
/// The cached weight is the raw integer sum of member arc weights; the exact
/// cycle mean additionally divides by the graph denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    arcs: Vec<u32>,
    weight: i128,
    length: u32,
}

impl Cycle {
    /// Validates adjacency, closure, and node-simplicity, then caches totals.
    pub fn new(g: &WeightedDigraph, arc_ids: Vec<u32>) -> Result<Cycle, CycleError> {
        if arc_ids.is_empty() {
            return Err(CycleError::Empty);
        }
        let first_tail = g.arc(arc_ids[0]).tail;
        let mut seen = alloc::vec![false; g.node_count()];
        let mut weight: i128 = 0;
        let mut at = first_tail;
        for (pos, &id) in arc_ids.iter().enumerate() {
            let arc = g.arc(id);
            if arc.tail != at {
                return Err(CycleError::NotAdjacent { pos });
            }
            if seen[arc.tail as usize] {
                return Err(CycleError::RepeatedNode { node: arc.tail });
            }
            seen[arc.tail as usize] = true;
            weight += arc.weight as i128;
            at = arc.head;
        }
        if at != first_tail {
            return Err(CycleError::NotClosed);
        }
        let length = arc_ids.len() as u32;
        Ok(Cycle {
            arcs: arc_ids,
            weight,
            length,
        })
    }

    /// As `new`, but rotated so the cycle starts at its smallest node id.
    pub fn canonical(g: &WeightedDigraph, arc_ids: Vec<u32>) -> Result<Cycle, CycleError> {
        let mut c = Cycle::new(g, arc_ids)?;
        let start = c
            .arcs
            .iter()
            .enumerate()
            .min_by_key(|(_, &id)| g.arc(id).tail)
            .map(|(i, _)| i)
            .unwrap();
        c.arcs.rotate_left(start);
        Ok(c)
    }

    pub fn arc_ids(&self) -> &[u32] {
        &self.arcs
    }

    /// Integer weight sum before dividing by the graph denominator.
    pub fn raw_weight(&self) -> i128 {
        self.weight
    }

    /// Exact total cycle weight.
    pub fn weight(&self, g: &WeightedDigraph) -> Rational {
        Rational::new(self.weight, g.denominator() as i128)
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    /// Node sequence visited by the cycle (tails in arc order).
    pub fn nodes(&self, g: &WeightedDigraph) -> Vec<u32> {
        self.arcs.iter().map(|&id| g.arc(id).tail).collect()
    }

    pub fn is_self_loop(&self) -> bool {
        self.length == 1
    }
}

/// Average arc weight `w(C)/|C|`, exact.
pub fn cycle_mean(g: &WeightedDigraph, c: &Cycle) -> Rational {
    Rational::new(c.raw_weight(), c.length() as i128 * g.denominator() as i128)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn arc(tail: u32, head: u32, weight: i64) -> Arc {
        Arc { tail, head, weight }
    }

    #[test]
    fn rejects_out_of_range_endpoints() {
        let err = WeightedDigraph::new(2, vec![arc(0, 2, 1)]).unwrap_err();
        assert_eq!(err, GraphError::NodeOutOfRange { arc: 0, node: 2 });
    }

    #[test]
    fn self_loop_mean() {
        let g = WeightedDigraph::new(1, vec![arc(0, 0, 887)]).unwrap();
        let c = Cycle::new(&g, vec![0]).unwrap();
        assert_eq!(cycle_mean(&g, &c), Rational::from_int(887));
        assert!(c.is_self_loop());
    }

    #[test]
    fn five_arc_cycle_mean() {
        // Weight 21718 over 5 arcs -> 21718/5.
        let w = [7879, 7540, 1439, 1439, 3421];
        let arcs: Vec<Arc> = (0..5).map(|i| arc(i, (i + 1) % 5, w[i as usize])).collect();
        let g = WeightedDigraph::new(5, arcs).unwrap();
        let c = Cycle::new(&g, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(cycle_mean(&g, &c), Rational::new(21718, 5));
        assert_eq!(c.length(), 5);
    }

    #[test]
    fn zero_weight_cycle() {
        let arcs = vec![arc(0, 1, 5), arc(1, 2, -3), arc(2, 0, -2)];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        let c = Cycle::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(cycle_mean(&g, &c), Rational::ZERO);
    }

    #[test]
    fn cycle_validation() {
        let arcs = vec![arc(0, 1, 1), arc(1, 0, 1), arc(1, 2, 1), arc(2, 1, 1)];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        assert_eq!(Cycle::new(&g, vec![]).unwrap_err(), CycleError::Empty);
        assert_eq!(
            Cycle::new(&g, vec![0, 2]).unwrap_err(),
            CycleError::NotClosed
        );
        assert_eq!(
            Cycle::new(&g, vec![0, 3]).unwrap_err(),
            CycleError::NotAdjacent { pos: 1 }
        );
        // 0 -> 1 -> 2 -> 1 repeats node 1 before closing.
        assert!(matches!(
            Cycle::new(&g, vec![0, 2, 3, 2]),
            Err(CycleError::RepeatedNode { node: 1 }) | Err(CycleError::NotClosed)
        ));
    }

    #[test]
    fn canonical_starts_at_smallest_node() {
        let arcs = vec![arc(2, 1, 1), arc(1, 0, 1), arc(0, 2, 1)];
        let g = WeightedDigraph::new(3, arcs).unwrap();
        let c = Cycle::canonical(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(c.nodes(&g), vec![0, 2, 1]);
    }

    #[test]
    fn negate_is_involution() {
        let arcs = vec![arc(0, 1, 3), arc(1, 0, -7)];
        let g = WeightedDigraph::new(2, arcs.clone()).unwrap();
        let back = g.negate().negate();
        assert_eq!(back.arcs(), g.arcs());
        assert_eq!(back.denominator(), 1);
    }

    #[test]
    fn rational_shift_lifts_denominator() {
        let arcs = vec![arc(0, 1, 3), arc(1, 0, 7)];
        let g = WeightedDigraph::new(2, arcs).unwrap();
        let shifted = g.shift(Rational::new(-1, 2));
        assert_eq!(shifted.denominator(), 2);
        assert_eq!(shifted.arc_weight(0), Rational::new(5, 2));
        let c = Cycle::new(&shifted, vec![0, 1]).unwrap();
        // Mean moves from 5 to 5 - 1/2.
        assert_eq!(cycle_mean(&shifted, &c), Rational::new(9, 2));
    }

    #[test]
    fn scale_rejects_non_positive() {
        let g = WeightedDigraph::new(1, vec![arc(0, 0, 1)]).unwrap();
        assert_eq!(
            g.scale(Rational::ZERO).unwrap_err(),
            GraphError::NonPositiveScale
        );
        assert_eq!(
            g.scale(Rational::from_int(-2)).unwrap_err(),
            GraphError::NonPositiveScale
        );
        let doubled = g.scale(Rational::from_int(2)).unwrap();
        assert_eq!(doubled.arc_weight(0), Rational::from_int(2));
    }
}
