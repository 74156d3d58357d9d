mod common;

use altind::graph6::{parse_graph6, to_graph6};
use altind::{Graph, VertexSet};
use common::{acyclic_oracle, random_graph, rng};

#[test]
fn closed_neighbourhood_has_degree_plus_one_vertices() {
    let mut r = rng(41);
    for _ in 0..50 {
        let g = random_graph(&mut r, 12, 0.3);
        for v in 0..g.n() {
            let nv = g.closed_neighborhood(v).unwrap();
            assert_eq!(nv.len(), g.degree(v) + 1);
            assert!(nv.contains(v));
        }
    }
}

#[test]
fn deletion_order_does_not_matter() {
    let mut r = rng(42);
    for _ in 0..50 {
        let g = random_graph(&mut r, 10, 0.4);
        let a = VertexSet::from_bits(0b00_0010_0101);
        let b = VertexSet::from_bits(0b01_1000_0000);
        let at_once = g.delete_vertices(a.union(b)).unwrap();
        let ab = g.delete_vertices(a).unwrap();
        // `ab` is relabelled; find b's new positions through the labels.
        let b_in_ab: VertexSet = (0..ab.n()).filter(|&i| b.contains(ab.label(i))).collect();
        let stepwise = ab.delete_vertices(b_in_ab).unwrap();
        assert_eq!(at_once, stepwise);
        assert_eq!(at_once.labels(), stepwise.labels());
    }
}

#[test]
fn both_forest_tests_agree() {
    let mut r = rng(43);
    for n in 1..=14 {
        for p in [0.05, 0.1, 0.2, 0.4] {
            let g = random_graph(&mut r, n, p);
            let by_count = g.edge_count() + g.component_count() == g.n();
            assert_eq!(g.is_acyclic(), by_count);
            assert_eq!(g.is_acyclic(), acyclic_oracle(&g, 0));
        }
    }
}

#[test]
fn graph6_round_trips_random_graphs() {
    let mut r = rng(44);
    for n in [0, 1, 2, 5, 6, 7, 30, 62] {
        let g = random_graph(&mut r, n, 0.5);
        let text = to_graph6(&g);
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }
}

#[test]
fn cycle_vertices_are_the_union_of_cycles() {
    // Triangle with a pendant path and a separate square.
    let g = Graph::from_edges(9, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (5, 6), (6, 7), (7, 8), (5, 8)]).unwrap();
    assert_eq!(g.cycle_vertices().to_vec(), vec![0, 1, 2, 5, 6, 7, 8]);
}
