//! Strongly connected components via iterative Tarjan.

use alloc::vec::Vec;

use crate::graph::{Arc, WeightedDigraph};

/// One strongly connected component with its induced node and arc sets.
#[derive(Clone, Debug)]
pub struct SccComponent {
    /// Member nodes, ascending.
    pub nodes: Vec<u32>,
    /// Arcs with both endpoints inside the component, ascending.
    pub arc_ids: Vec<u32>,
    /// Single node without a self-loop; contains no cycle.
    pub trivial: bool,
}

/// Partition of the node set into strongly connected components.
///
/// Components are ordered by their smallest member node id, so the
/// decomposition is independent of traversal order.
#[derive(Clone, Debug)]
pub struct SccDecomposition {
    pub component_of: Vec<u32>,
    pub components: Vec<SccComponent>,
}

impl SccDecomposition {
    pub fn non_trivial(&self) -> impl Iterator<Item = (usize, &SccComponent)> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.trivial)
    }
}

/// A component copied out as a standalone graph with dense local ids.
///
/// `nodes[local]` and `arc_ids[local]` map back to the parent graph. Local
/// node order follows ascending parent ids, so "smallest node id" means the
/// same thing in both id spaces.
#[derive(Clone, Debug)]
pub struct ComponentGraph {
    pub graph: WeightedDigraph,
    pub nodes: Vec<u32>,
    pub arc_ids: Vec<u32>,
}

impl ComponentGraph {
    pub fn extract(g: &WeightedDigraph, component: &SccComponent) -> ComponentGraph {
        let mut local_of = alloc::vec![u32::MAX; g.node_count()];
        for (local, &node) in component.nodes.iter().enumerate() {
            local_of[node as usize] = local as u32;
        }
        let arcs: Vec<Arc> = component
            .arc_ids
            .iter()
            .map(|&id| {
                let a = g.arc(id);
                Arc {
                    tail: local_of[a.tail as usize],
                    head: local_of[a.head as usize],
                    weight: a.weight,
                }
            })
            .collect();
        let graph = WeightedDigraph::new(component.nodes.len(), arcs)
            .expect("component arcs are in range");
        ComponentGraph {
            graph,
            nodes: component.nodes.clone(),
            arc_ids: component.arc_ids.clone(),
        }
    }
}

/// Tarjan's algorithm with an explicit stack.
pub fn decompose_sccs(g: &WeightedDigraph) -> SccDecomposition {
    const UNVISITED: u32 = u32::MAX;
    let n = g.node_count();
    let mut index = alloc::vec![UNVISITED; n];
    let mut lowlink = alloc::vec![0u32; n];
    let mut on_stack = alloc::vec![false; n];
    let mut stack: Vec<u32> = Vec::new();
    let mut next_index = 0u32;
    let mut raw_components: Vec<Vec<u32>> = Vec::new();

    struct Frame {
        node: u32,
        next_out: usize,
    }

    for start in 0..n as u32 {
        if index[start as usize] != UNVISITED {
            continue;
        }
        let mut call: Vec<Frame> = alloc::vec![Frame { node: start, next_out: 0 }];
        index[start as usize] = next_index;
        lowlink[start as usize] = next_index;
        next_index += 1;
        stack.push(start);
        on_stack[start as usize] = true;

        while let Some(frame) = call.last_mut() {
            let v = frame.node;
            if frame.next_out < g.out_arcs(v).len() {
                let arc_id = g.out_arcs(v)[frame.next_out];
                frame.next_out += 1;
                let w = g.arc(arc_id).head;
                if index[w as usize] == UNVISITED {
                    index[w as usize] = next_index;
                    lowlink[w as usize] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w as usize] = true;
                    call.push(Frame {
                        node: w,
                        next_out: 0,
                    });
                } else if on_stack[w as usize] {
                    lowlink[v as usize] = lowlink[v as usize].min(index[w as usize]);
                }
            } else {
                if lowlink[v as usize] == index[v as usize] {
                    let mut members = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w as usize] = false;
                        members.push(w);
                        if w == v {
                            break;
                        }
                    }
                    members.sort_unstable();
                    raw_components.push(members);
                }
                let done = call.pop().unwrap().node;
                if let Some(parent) = call.last() {
                    let p = parent.node as usize;
                    lowlink[p] = lowlink[p].min(lowlink[done as usize]);
                }
            }
        }
    }

    raw_components.sort_by_key(|members| members[0]);

    let mut component_of = alloc::vec![0u32; n];
    for (ci, members) in raw_components.iter().enumerate() {
        for &v in members {
            component_of[v as usize] = ci as u32;
        }
    }

    let mut arc_sets: Vec<Vec<u32>> = alloc::vec![Vec::new(); raw_components.len()];
    for (id, arc) in g.arcs().iter().enumerate() {
        let ct = component_of[arc.tail as usize];
        if ct == component_of[arc.head as usize] {
            arc_sets[ct as usize].push(id as u32);
        }
    }

    let components = raw_components
        .into_iter()
        .zip(arc_sets)
        .map(|(nodes, arc_ids)| {
            let trivial = nodes.len() == 1 && arc_ids.is_empty();
            SccComponent {
                nodes,
                arc_ids,
                trivial,
            }
        })
        .collect();

    SccDecomposition {
        component_of,
        components,
    }
}
