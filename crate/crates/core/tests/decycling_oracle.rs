mod common;

use altind::cycles::is_ternary;
use altind::decycling::{
    analyze, cyclomatic_number, is_ternary_decycling_set, middle_bound, min_decycling, min_ternary_decycling,
    minimal_ternary_decycling_sets,
};
use altind::{Graph, Limits, VertexSet};
use common::{
    acyclic_oracle, all_graphs, chordless_census, count_independent, phi3_oracle, phi_oracle, random_graph, rng,
};
use num_bigint::BigUint;

fn check_against_oracles(g: &Graph) {
    let (phi, w) = min_decycling(g).unwrap();
    assert_eq!((phi, w.to_vec()), phi_oracle(g), "phi of {g:?}");
    let (phi3, w3) = min_ternary_decycling(g).unwrap();
    assert_eq!((phi3, w3.to_vec()), phi3_oracle(g), "phi3 of {g:?}");
}

/// Inclusion-minimal hitting sets of the induced 3~-cycles, by subset scan.
fn minimal_sets_oracle(g: &Graph) -> Vec<u64> {
    let bad: Vec<u64> = chordless_census(g)
        .into_iter()
        .filter(|s| s.count_ones() % 3 == 0)
        .collect();
    let hits = |d: u64| bad.iter().all(|c| c & d != 0);
    let mut out: Vec<u64> = (0u64..1 << g.n())
        .filter(|&d| hits(d) && (0..g.n()).all(|v| d >> v & 1 == 0 || !hits(d & !(1 << v))))
        .collect();
    out.sort_by_key(|&d| VertexSet::from_bits(d).to_vec());
    out
}

#[test]
fn optima_match_on_every_graph_up_to_six_vertices() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            check_against_oracles(&g);
        }
    }
}

/// 2^21 graphs; about half a minute with the optimized test profile.
#[test]
fn optima_match_on_every_graph_on_seven_vertices() {
    for g in all_graphs(7) {
        check_against_oracles(&g);
    }
}

#[test]
fn minimal_sets_match_subset_scan() {
    let mut r = rng(32);
    for n in 3..=8 {
        for _ in 0..80 {
            let g = random_graph(&mut r, n, 0.5);
            let listed = minimal_ternary_decycling_sets(&g, 1 << 20).unwrap();
            assert!(!listed.truncated);
            let got: Vec<u64> = listed.sets.iter().map(|s| s.bits()).collect();
            assert_eq!(got, minimal_sets_oracle(&g), "{g:?}");
        }
    }
}

#[test]
fn middle_bound_is_the_smallest_count_over_minimal_sets() {
    let mut r = rng(33);
    for _ in 0..200 {
        let g = random_graph(&mut r, 8, 0.45);
        let want = minimal_sets_oracle(&g)
            .into_iter()
            .map(|d| count_independent(&g, d))
            .min()
            .unwrap();
        let (got, witness) = middle_bound(&g).unwrap();
        assert_eq!(got, BigUint::from(want));
        assert_eq!(BigUint::from(count_independent(&g, witness.bits())), got);
        assert!(is_ternary_decycling_set(&g, witness, &Limits::default()).unwrap());
    }
}

#[test]
fn invariants_and_witnesses() {
    let mut r = rng(34);
    for n in 1..=12 {
        for p in [0.2, 0.4, 0.6] {
            let g = random_graph(&mut r, n, p);
            let a = analyze(&g, &Limits::default()).unwrap();
            assert!(a.phi3 <= a.phi && a.phi <= a.nu, "{g:?}: {a:?}");
            assert_eq!(a.nu, cyclomatic_number(&g));
            assert_eq!(a.phi_witness.len(), a.phi);
            assert_eq!(a.phi3_witness.len(), a.phi3);
            assert!(acyclic_oracle(&g, a.phi_witness.bits()));
            assert!(is_ternary(&g.delete_vertices(a.phi3_witness).unwrap()).unwrap());
            assert!(a.middle_bound >= BigUint::from(1u32));
            assert!(a.middle_bound <= BigUint::from(1u32) << a.phi3);
        }
    }
}

#[test]
fn ternary_decycling_sets_are_upward_closed() {
    let mut r = rng(35);
    let limits = Limits::default();
    for _ in 0..100 {
        let g = random_graph(&mut r, 9, 0.4);
        let (_, d) = min_ternary_decycling(&g).unwrap();
        for v in 0..9 {
            let mut bigger = d;
            bigger.insert(v);
            assert!(is_ternary_decycling_set(&g, bigger, &limits).unwrap());
        }
    }
}

#[test]
fn budget_is_reported_not_guessed() {
    let g = Graph::complete(12).unwrap();
    let limits = Limits { subset_cap: 10, ..Limits::default() };
    assert!(analyze(&g, &limits).is_err());
}
