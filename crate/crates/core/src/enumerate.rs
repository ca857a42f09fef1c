//! Exhaustive simple-cycle enumeration and extremal-cycle extraction.
//!
//! Blocked-set search in the style of Johnson's circuit enumeration,
//! extended to multigraphs by walking arc ids instead of neighbor nodes, so
//! parallel arcs yield distinct cycles. Cycles are produced in canonical
//! rotation (starting at their smallest node id) and no cycle is reported
//! twice. The visitor API keeps sweeps from materializing every cycle.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::graph::{cycle_mean, Cycle, WeightedDigraph};
use crate::rational::Rational;

/// Outcome of one enumeration run.
///
/// `complete` is false when the cap cut the run short or the visitor asked
/// to stop; `count` is the number of cycles actually visited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub count: u64,
    pub complete: bool,
}

/// Borrowed view of one enumerated cycle.
#[derive(Clone, Copy, Debug)]
pub struct CycleVisit<'a> {
    /// Arc ids in traversal order, starting at the smallest node id.
    pub arc_ids: &'a [u32],
    /// Integer weight sum before dividing by the graph denominator.
    pub raw_weight: i128,
}

impl<'a> CycleVisit<'a> {
    pub fn length(&self) -> u32 {
        self.arc_ids.len() as u32
    }

    pub fn to_cycle(&self, g: &WeightedDigraph) -> Cycle {
        Cycle::new(g, self.arc_ids.to_vec()).expect("enumerator emits valid cycles")
    }
}

/// Visits every distinct simple cycle of `g`, at most `cap` of them.
///
/// A cycle beyond the cap is never emitted; finding one flips the run to
/// incomplete. The visitor may return `ControlFlow::Break` to stop early,
/// which also marks the run incomplete.
pub fn enumerate_simple_cycles<F>(g: &WeightedDigraph, cap: u64, mut visit: F) -> Enumeration
where
    F: FnMut(CycleVisit<'_>) -> ControlFlow<()>,
{
    let n = g.node_count();
    let mut count = 0u64;
    let mut scratch = Scratch::new(n);

    for start in 0..n as u32 {
        // Restrict the search to the strongly connected region of `start`
        // within the subgraph on nodes >= start; cycles rooted at `start`
        // cannot leave it.
        if !scratch.mark_component(g, start) {
            continue;
        }
        match scratch.circuits_from(g, start, cap, &mut count, &mut visit) {
            ControlFlow::Continue(()) => {}
            ControlFlow::Break(()) => {
                return Enumeration {
                    count,
                    complete: false,
                };
            }
        }
    }

    Enumeration {
        count,
        complete: true,
    }
}

/// Reusable buffers for the blocked-set search.
struct Scratch {
    allowed: Vec<bool>,
    blocked: Vec<bool>,
    blists: Vec<Vec<u32>>,
    // Tarjan state for the per-start component restriction.
    index: Vec<u32>,
    lowlink: Vec<u32>,
    on_stack: Vec<bool>,
}

const UNVISITED: u32 = u32::MAX;

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            allowed: alloc::vec![false; n],
            blocked: alloc::vec![false; n],
            blists: alloc::vec![Vec::new(); n],
            index: alloc::vec![UNVISITED; n],
            lowlink: alloc::vec![0; n],
            on_stack: alloc::vec![false; n],
        }
    }

    /// Marks `allowed` with the SCC of `start` in the subgraph on nodes
    /// `>= start`. Returns false when no cycle can pass through `start`.
    fn mark_component(&mut self, g: &WeightedDigraph, start: u32) -> bool {
        let n = g.node_count();
        for v in start as usize..n {
            self.index[v] = UNVISITED;
            self.on_stack[v] = false;
            self.allowed[v] = false;
        }
        let mut next_index = 0u32;
        let mut stack: Vec<u32> = Vec::new();
        let mut call: Vec<(u32, usize)> = alloc::vec![(start, 0)];
        self.index[start as usize] = 0;
        self.lowlink[start as usize] = 0;
        next_index += 1;
        stack.push(start);
        self.on_stack[start as usize] = true;

        let mut found = false;
        while let Some(&mut (v, ref mut pos)) = call.last_mut() {
            if *pos < g.out_arcs(v).len() {
                let arc_id = g.out_arcs(v)[*pos];
                *pos += 1;
                let w = g.arc(arc_id).head;
                if w < start {
                    continue;
                }
                if self.index[w as usize] == UNVISITED {
                    self.index[w as usize] = next_index;
                    self.lowlink[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    self.on_stack[w as usize] = true;
                    call.push((w, 0));
                } else if self.on_stack[w as usize] {
                    self.lowlink[v as usize] =
                        self.lowlink[v as usize].min(self.index[w as usize]);
                }
            } else {
                if self.lowlink[v as usize] == self.index[v as usize] {
                    let root_is_start = v == start;
                    let mut members = 0usize;
                    loop {
                        let w = stack.pop().unwrap();
                        self.on_stack[w as usize] = false;
                        if root_is_start {
                            self.allowed[w as usize] = true;
                            members += 1;
                        }
                        if w == v {
                            break;
                        }
                    }
                    if root_is_start {
                        found = members > 1 || g.has_self_loop(start);
                        break;
                    }
                }
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    self.lowlink[p as usize] =
                        self.lowlink[p as usize].min(self.lowlink[v as usize]);
                }
            }
        }
        found
    }

    fn circuits_from<F>(
        &mut self,
        g: &WeightedDigraph,
        start: u32,
        cap: u64,
        count: &mut u64,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(CycleVisit<'_>) -> ControlFlow<()>,
    {
        for v in start as usize..g.node_count() {
            self.blocked[v] = false;
            self.blists[v].clear();
        }

        struct Frame {
            node: u32,
            next_out: usize,
            found: bool,
        }

        let mut path_arcs: Vec<u32> = Vec::new();
        let mut path_weight: i128 = 0;
        let mut stack = alloc::vec![Frame {
            node: start,
            next_out: 0,
            found: false,
        }];
        self.blocked[start as usize] = true;

        while let Some(top) = stack.last_mut() {
            let v = top.node;
            if top.next_out < g.out_arcs(v).len() {
                let arc_id = g.out_arcs(v)[top.next_out];
                top.next_out += 1;
                let arc = g.arc(arc_id);
                let w = arc.head;
                if w < start || !self.allowed[w as usize] {
                    continue;
                }
                if w == start {
                    if *count == cap {
                        return ControlFlow::Break(());
                    }
                    path_arcs.push(arc_id);
                    let flow = visit(CycleVisit {
                        arc_ids: &path_arcs,
                        raw_weight: path_weight + arc.weight as i128,
                    });
                    path_arcs.pop();
                    *count += 1;
                    top.found = true;
                    flow?;
                } else if !self.blocked[w as usize] {
                    path_arcs.push(arc_id);
                    path_weight += arc.weight as i128;
                    self.blocked[w as usize] = true;
                    stack.push(Frame {
                        node: w,
                        next_out: 0,
                        found: false,
                    });
                }
            } else {
                let found = top.found;
                if found {
                    self.unblock(v);
                } else {
                    for &arc_id in g.out_arcs(v) {
                        let w = g.arc(arc_id).head;
                        if w < start || !self.allowed[w as usize] || w == v {
                            continue;
                        }
                        if !self.blists[w as usize].contains(&v) {
                            self.blists[w as usize].push(v);
                        }
                    }
                }
                stack.pop();
                if let Some(parent) = stack.last_mut() {
                    parent.found |= found;
                    let arc_id = path_arcs.pop().expect("non-root frame has an entry arc");
                    path_weight -= g.arc(arc_id).weight as i128;
                }
            }
        }
        ControlFlow::Continue(())
    }

    fn unblock(&mut self, v: u32) {
        let mut work = alloc::vec![v];
        while let Some(u) = work.pop() {
            if !self.blocked[u as usize] {
                continue;
            }
            self.blocked[u as usize] = false;
            work.append(&mut self.blists[u as usize]);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerationError {
    /// The graph contains no cycle at all.
    NoCycle,
}

impl core::fmt::Display for EnumerationError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumerationError::NoCycle => write!(f, "graph contains no cycle"),
        }
    }
}

impl core::error::Error for EnumerationError {}

/// The four extremal simple cycles of a component.
#[derive(Clone, Debug)]
pub struct ExtremalCycles {
    /// Max-weight cycle.
    pub max_weight: Cycle,
    /// Max-length cycle.
    pub max_length: Cycle,
    /// Min-weight cycle.
    pub min_weight: Cycle,
    /// Min-length cycle.
    pub min_length: Cycle,
    pub total_cycles: u64,
    /// False when the cap stopped enumeration; the extremes are then only
    /// the best witnesses seen so far.
    pub complete: bool,
}

impl ExtremalCycles {
    pub fn mean_of_max_weight(&self, g: &WeightedDigraph) -> Rational {
        cycle_mean(g, &self.max_weight)
    }

    pub fn mean_of_max_length(&self, g: &WeightedDigraph) -> Rational {
        cycle_mean(g, &self.max_length)
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    MaxWeight,
    MaxLength,
    MinWeight,
    MinLength,
}

/// Comparison key of one cycle under the extremal tie rules.
#[derive(Clone, Copy)]
struct CycleKey<'a> {
    weight: i128,
    length: u32,
    nodes: &'a [u32],
    arcs: &'a [u32],
}

/// `true` when the challenger should replace the incumbent.
///
/// Primary criterion first, then shorter arc sequence, then smaller
/// canonical node sequence, then smaller arc-id sequence. The trailing keys
/// make the selection independent of enumeration order.
fn better(goal: Goal, ch: CycleKey<'_>, inc: CycleKey<'_>) -> bool {
    use core::cmp::Ordering::*;
    let primary = match goal {
        Goal::MaxWeight => inc.weight.cmp(&ch.weight),
        Goal::MinWeight => ch.weight.cmp(&inc.weight),
        Goal::MaxLength => inc.length.cmp(&ch.length),
        Goal::MinLength => ch.length.cmp(&inc.length),
    };
    match primary {
        Less => true,
        Greater => false,
        Equal => match ch.length.cmp(&inc.length) {
            Less => true,
            Greater => false,
            Equal => match ch.nodes.cmp(inc.nodes) {
                Less => true,
                Greater => false,
                Equal => ch.arcs < inc.arcs,
            },
        },
    }
}

/// Single enumeration pass tracking all four extremes.
pub fn extremal_cycles(
    g: &WeightedDigraph,
    cap: u64,
) -> Result<ExtremalCycles, EnumerationError> {
    struct Best {
        arcs: Vec<u32>,
        nodes: Vec<u32>,
        weight: i128,
        length: u32,
    }
    let mut best: [Option<Best>; 4] = [None, None, None, None];
    let goals = [
        Goal::MaxWeight,
        Goal::MaxLength,
        Goal::MinWeight,
        Goal::MinLength,
    ];

    let outcome = enumerate_simple_cycles(g, cap, |visit| {
        let nodes: Vec<u32> = visit.arc_ids.iter().map(|&id| g.arc(id).tail).collect();
        let challenger = CycleKey {
            weight: visit.raw_weight,
            length: visit.length(),
            nodes: &nodes,
            arcs: visit.arc_ids,
        };
        for (slot, &goal) in best.iter_mut().zip(goals.iter()) {
            let take = match slot {
                None => true,
                Some(inc) => better(
                    goal,
                    challenger,
                    CycleKey {
                        weight: inc.weight,
                        length: inc.length,
                        nodes: &inc.nodes,
                        arcs: &inc.arcs,
                    },
                ),
            };
            if take {
                *slot = Some(Best {
                    arcs: visit.arc_ids.to_vec(),
                    nodes: nodes.clone(),
                    weight: visit.raw_weight,
                    length: visit.length(),
                });
            }
        }
        ControlFlow::Continue(())
    });

    if outcome.count == 0 {
        return Err(EnumerationError::NoCycle);
    }
    let mut cycles = best
        .into_iter()
        .map(|b| Cycle::new(g, b.unwrap().arcs).expect("tracked cycles are valid"));
    Ok(ExtremalCycles {
        max_weight: cycles.next().unwrap(),
        max_length: cycles.next().unwrap(),
        min_weight: cycles.next().unwrap(),
        min_length: cycles.next().unwrap(),
        total_cycles: outcome.count,
        complete: outcome.complete,
    })
}

/// Counts simple cycles without visiting payloads.
pub fn count_simple_cycles(g: &WeightedDigraph, cap: u64) -> Enumeration {
    enumerate_simple_cycles(g, cap, |_| ControlFlow::Continue(()))
}
