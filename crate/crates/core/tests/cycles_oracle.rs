mod common;

use altind::cycles::{chordless_cycles, has_cycle_length_not_div3, induced_3tilde_cycles, is_ternary};
use altind::{Graph, Limits, VertexSet};
use common::{
    all_graphs, chordless_census, cycle_lengths_by_subsets, random_graph, rng, simple_cycle_lengths, ternary_oracle,
};

fn listed_sets(g: &Graph) -> Vec<u64> {
    let report = chordless_cycles(g, &Limits::default()).unwrap();
    assert!(!report.truncated);
    let mut sets: Vec<u64> = report
        .chordless_cycles
        .iter()
        .map(|c| c.iter().copied().collect::<VertexSet>().bits())
        .collect();
    sets.sort_unstable();
    sets
}

fn check_sequences_are_cycles(g: &Graph) {
    for c in chordless_cycles(g, &Limits::default()).unwrap().chordless_cycles {
        let k = c.len();
        assert!(k >= 3);
        for i in 0..k {
            assert!(g.has_edge(c[i], c[(i + 1) % k]), "{c:?} not a cycle");
        }
        assert_eq!(c[0], *c.iter().min().unwrap());
        assert!(c[1] < c[k - 1]);
    }
}

#[test]
fn census_matches_on_every_graph_up_to_six_vertices() {
    for n in 0..=6 {
        for g in all_graphs(n) {
            let mut want = chordless_census(&g);
            want.sort_unstable();
            assert_eq!(listed_sets(&g), want, "{g:?}");
            assert_eq!(is_ternary(&g).unwrap(), ternary_oracle(&g));
        }
    }
}

#[test]
fn census_matches_on_random_graphs_up_to_eight_vertices() {
    let mut r = rng(21);
    for n in 7..=8 {
        for p in [0.2, 0.35, 0.5, 0.7, 0.9] {
            for _ in 0..150 {
                let g = random_graph(&mut r, n, p);
                let mut want = chordless_census(&g);
                want.sort_unstable();
                assert_eq!(listed_sets(&g), want, "{g:?}");
                check_sequences_are_cycles(&g);
            }
        }
    }
}

#[test]
fn induced_3tilde_cycles_are_the_multiple_of_three_census() {
    let mut r = rng(22);
    for _ in 0..300 {
        let g = random_graph(&mut r, 8, 0.4);
        let mut want: Vec<u64> = chordless_census(&g)
            .into_iter()
            .filter(|s| s.count_ones() % 3 == 0)
            .collect();
        want.sort_unstable();
        let mut got: Vec<u64> = induced_3tilde_cycles(&g, &Limits::default())
            .unwrap()
            .into_iter()
            .map(|s| s.bits())
            .collect();
        got.sort_unstable();
        assert_eq!(got, want);
    }
}

#[test]
fn non_multiple_of_three_cycles_agree_with_two_oracles() {
    let mut r = rng(23);
    for n in 3..=9 {
        for p in [0.2, 0.3, 0.45, 0.7] {
            for _ in 0..40 {
                let g = random_graph(&mut r, n, p);
                let dfs = simple_cycle_lengths(&g).iter().any(|l| l % 3 != 0);
                let dp = cycle_lengths_by_subsets(&g).iter().any(|l| l % 3 != 0);
                assert_eq!(dfs, dp);
                assert_eq!(has_cycle_length_not_div3(&g).unwrap(), dfs, "{g:?}");
            }
        }
    }
}

#[test]
fn ternary_is_hereditary() {
    let mut r = rng(24);
    let mut checked = 0;
    while checked < 100 {
        let g = random_graph(&mut r, 9, 0.3);
        if !is_ternary(&g).unwrap() {
            continue;
        }
        checked += 1;
        for s in 0u64..1 << 9 {
            if s.count_ones() <= 3 {
                let h = g.delete_vertices(VertexSet::from_bits(s)).unwrap();
                assert!(is_ternary(&h).unwrap());
            }
        }
    }
}

#[test]
fn cap_truncates_without_lying() {
    let g = Graph::complete(7).unwrap();
    let limits = Limits { cycle_cap: 5, ..Limits::default() };
    let report = chordless_cycles(&g, &limits).unwrap();
    assert!(report.truncated);
    assert_eq!(report.chordless_cycles.len(), 5);
    assert!(induced_3tilde_cycles(&g, &limits).is_err());
}
