//! Re-derives every value the fixture files claim in their header comments:
//! cycle inventories, optimum means, witnesses, and extremal cycles.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use ocm_cli::format::parse_edge_list;
use ocm_core::{
    decompose_sccs, enumerate_simple_cycles, extremal_cycles, max_cycle_mean, min_cycle_mean,
    ComponentGraph, Rational, WeightedDigraph,
};

fn fixture(name: &str) -> WeightedDigraph {
    let path = format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    parse_edge_list(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn cycle_weights(g: &WeightedDigraph) -> Vec<i128> {
    let mut out = Vec::new();
    enumerate_simple_cycles(g, 1_000_000, |v| {
        out.push(v.raw_weight);
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    out
}

#[test]
fn scc4_cycle_inventory() {
    let g = fixture("scc4.graph");
    assert_eq!(g.node_count(), 4);
    assert_eq!(g.arc_count(), 8);
    let mut expected = vec![19942i128, 6640, 10036, 18883, 8977, 887];
    expected.sort_unstable();
    assert_eq!(cycle_weights(&g), expected);
}

#[test]
fn scc4_optimum_means_and_witnesses() {
    let g = fixture("scc4.graph");
    let lo = min_cycle_mean(&g).unwrap();
    assert_eq!(lo.lambda, Rational::from_int(887));
    assert_eq!(lo.witness.length(), 1);
    assert_eq!(lo.witness.nodes(&g), vec![2]); // node 3 in file ids

    let hi = max_cycle_mean(&g).unwrap();
    assert_eq!(hi.lambda, Rational::new(19942, 3));
    assert_eq!(hi.witness.length(), 3);
    // 1 -> 3 -> 2 -> 1 in file ids.
    assert_eq!(hi.witness.nodes(&g), vec![0, 2, 1]);

    let (w_min, w_max) = g.weight_bounds().unwrap();
    assert_eq!(w_min, Rational::from_int(887));
    assert_eq!(w_max, Rational::from_int(8136));
}

#[test]
fn scc4_extremal_cycles_and_tie_rule() {
    let g = fixture("scc4.graph");
    let e = extremal_cycles(&g, 1_000_000).unwrap();
    assert!(e.complete);
    assert_eq!(e.total_cycles, 6);
    assert_eq!(e.max_weight.raw_weight(), 19942);
    assert_eq!(e.max_weight.length(), 3);
    assert_eq!(e.max_length.length(), 4);
    assert_eq!(e.max_length.raw_weight(), 18883);
    assert_eq!(e.min_weight.raw_weight(), 887);
    assert_eq!(e.min_weight.length(), 1);
    // Two length-1 cycles exist (nodes 1 and 3 in file ids); the smaller
    // node sequence wins the min-length tie.
    assert_eq!(e.min_length.length(), 1);
    assert_eq!(e.min_length.nodes(&g), vec![0]);
    assert_eq!(e.min_length.raw_weight(), 6640);
}

#[test]
fn scc3_cycle_inventory_and_means() {
    let g = fixture("scc3.graph");
    assert_eq!(g.node_count(), 5);
    assert_eq!(g.arc_count(), 7);
    let mut expected = vec![6510i128, 21718, 13744];
    expected.sort_unstable();
    assert_eq!(cycle_weights(&g), expected);

    let lo = min_cycle_mean(&g).unwrap();
    assert_eq!(lo.lambda, Rational::from_int(3436));
    assert_eq!(lo.witness.length(), 4);
    let hi = max_cycle_mean(&g).unwrap();
    assert_eq!(hi.lambda, Rational::from_int(6510));
    assert_eq!(hi.witness.length(), 1);

    let (w_min, w_max) = g.weight_bounds().unwrap();
    assert_eq!(w_min, Rational::from_int(1439));
    assert_eq!(w_max, Rational::from_int(7879));

    let e = extremal_cycles(&g, 1_000_000).unwrap();
    assert_eq!(e.max_weight.raw_weight(), 21718);
    assert_eq!(e.max_weight.length(), 5);
    assert_eq!(e.max_length, e.max_weight);
}

#[test]
fn example18_component_structure() {
    let g = fixture("example18.graph");
    assert_eq!(g.node_count(), 18);
    assert_eq!(g.arc_count(), 32);
    let d = decompose_sccs(&g);
    let sizes: Vec<usize> = d.components.iter().map(|c| c.nodes.len()).collect();
    assert_eq!(sizes, vec![1, 2, 5, 4, 5, 1]);
    // Every component contains a cycle, so none is trivial.
    assert_eq!(d.non_trivial().count(), 6);
}

#[test]
fn example18_per_component_inventories() {
    let g = fixture("example18.graph");
    let d = decompose_sccs(&g);
    let expected: [&[i128]; 6] = [
        &[1208],
        &[6838],
        &[6510, 13744, 21718],
        &[887, 6640, 8977, 10036, 18883, 19942],
        &[9682, 15334],
        &[951],
    ];
    for (idx, comp) in d.components.iter().enumerate() {
        let cg = ComponentGraph::extract(&g, comp);
        let mut expect = expected[idx].to_vec();
        expect.sort_unstable();
        assert_eq!(cycle_weights(&cg.graph), expect, "component {}", idx + 1);
    }
}

#[test]
fn example18_component_means_match_the_documented_table() {
    let g = fixture("example18.graph");
    let d = decompose_sccs(&g);
    // (lambda_min, lambda_max) per component, exact.
    let expected = [
        (Rational::from_int(1208), Rational::from_int(1208)),
        (Rational::from_int(3419), Rational::from_int(3419)),
        (Rational::from_int(3436), Rational::from_int(6510)),
        (Rational::from_int(887), Rational::new(19942, 3)),
        (Rational::new(9682, 3), Rational::new(15334, 3)),
        (Rational::from_int(951), Rational::from_int(951)),
    ];
    // Min-critical witness of the fourth component is the self-loop on
    // node 11 in original file ids.
    for (idx, comp) in d.components.iter().enumerate() {
        let cg = ComponentGraph::extract(&g, comp);
        let lo = min_cycle_mean(&cg.graph).unwrap();
        let hi = max_cycle_mean(&cg.graph).unwrap();
        assert_eq!((lo.lambda, hi.lambda), expected[idx], "component {}", idx + 1);
        if idx == 3 {
            let original: BTreeSet<u32> = lo
                .witness
                .nodes(&cg.graph)
                .iter()
                .map(|&local| cg.nodes[local as usize] + 1)
                .collect();
            assert_eq!(original, BTreeSet::from([11]));
        }
    }
}

#[test]
fn scc4_shift_by_minus_min_mean() {
    let g = fixture("scc4.graph");
    let shifted = g.shift(-Rational::from_int(887));
    let lo = min_cycle_mean(&shifted).unwrap();
    let hi = max_cycle_mean(&shifted).unwrap();
    assert_eq!(lo.lambda, Rational::ZERO);
    // 19942/3 - 887 = 17281/3.
    assert_eq!(hi.lambda, Rational::new(17281, 3));
}

#[test]
fn scc4_karp_oracle_values() {
    use ocm_core::{karp_cycle_mean, Direction};
    let g = fixture("scc4.graph");
    assert_eq!(
        karp_cycle_mean(&g, Direction::Min).unwrap(),
        Rational::from_int(887)
    );
    assert_eq!(
        karp_cycle_mean(&g, Direction::Max).unwrap(),
        Rational::new(19942, 3)
    );
}

#[test]
fn scc4_min_critical_set_is_the_self_loop() {
    use ocm_core::critical_subgraph;
    let g = fixture("scc4.graph");
    let lo = min_cycle_mean(&g).unwrap();
    let crit = critical_subgraph(&g, &lo, 1_000_000);
    assert!(!crit.truncated);
    assert_eq!(crit.cycles.len(), 1);
    assert_eq!(crit.cycles[0].length(), 1);
    assert_eq!(crit.cycles[0].nodes(&g), vec![2]); // node 3 in file ids
    // The tight arc set contains that self-loop.
    let self_loop = crit.cycles[0].arc_ids()[0];
    assert!(crit.arc_ids.contains(&self_loop));
}

#[test]
fn parse_serialize_round_trip_on_fixtures() {
    use ocm_cli::format::{parse_edge_list, serialize_edge_list};
    for name in ["scc3.graph", "scc4.graph", "example18.graph"] {
        let g = fixture(name);
        let text = serialize_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back.arcs(), g.arcs(), "{name}");
        assert_eq!(back.node_count(), g.node_count(), "{name}");
        assert_eq!(serialize_edge_list(&back), text, "{name}");
    }
}
