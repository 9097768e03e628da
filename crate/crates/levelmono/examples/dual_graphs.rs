//! Dual graphs of stable curves: edge classification, the filtration of
//! the edge lattice, stabilizer lattices, and the smoothness test at a
//! boundary point.

use levelmono::graph::{
    classify_edges, filtration, is_smooth_point, stabilizer_lattice, StableGraph,
};

fn show(name: &str, graph: &StableGraph) {
    let class = classify_edges(graph).unwrap();
    let f = filtration(graph, &class);
    println!("{name} (genus {}):", graph.genus());
    let ids = class.with_ids(graph);
    println!("  bridges {:?}, genus-one bridges {:?}, cut systems {:?}",
        ids.bridges, ids.genus_one_bridges, ids.cut_systems);
    println!(
        "  filtration ranks: F0 = {}, F1 = {}, F2 = {}, F21 = {}",
        f.f0.rank(),
        f.f1.rank(),
        f.f2.rank(),
        f.f21.rank()
    );
    for (k, n) in [(1usize, 5u64), (2, 4), (3, 6)] {
        let stab = stabilizer_lattice(graph, k, n).unwrap();
        let rows: Vec<String> = stab
            .lattice
            .rows()
            .iter()
            .map(|r| {
                let cs: Vec<String> = r.iter().map(|c| c.to_string()).collect();
                format!("[{}]", cs.join(","))
            })
            .collect();
        let smooth = is_smooth_point(graph, k, n).unwrap();
        println!(
            "  k = {k}, n = {n}: stabilizer HNF {} -> smooth: {}",
            rows.join(" "),
            smooth.smooth
        );
    }
    println!();
}

fn main() {
    // Two genus-0 components meeting in three points.
    show("theta", &StableGraph::build(&[0, 0], &[(0, 1), (0, 1), (0, 1)]).unwrap());
    // Two elliptic curves meeting in one point: a genus-one bridge.
    show("dumbbell", &StableGraph::build(&[1, 1], &[(0, 1)]).unwrap());
    // Two elliptic curves meeting in two points: one maximal cut system.
    // The difference of the two edges stays in the stabilizer with a small
    // coefficient, which breaks rectangularity and hence smoothness.
    show("banana", &StableGraph::build(&[1, 1], &[(0, 1), (0, 1)]).unwrap());
}
