//! Definition-level oracles shared by the integration tests. Nothing here
//! calls into the solvers it is used to check.
#![allow(dead_code)]

use altind::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` with the given generator.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    g
}

/// Labelled graph on `n` vertices whose edges are the set bits of `mask`,
/// edge `b` being the `b`-th pair in graph6 order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut b = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> b & 1 == 1 {
                g.add_edge(i, j).unwrap();
            }
            b += 1;
        }
    }
    g
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs).map(move |m| graph_from_mask(n, m))
}

fn connected(g: &Graph, s: u64) -> bool {
    if s == 0 {
        return true;
    }
    let start = s.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for u in 0..g.n() {
            if s >> u & 1 == 1 && seen >> u & 1 == 0 && g.has_edge(v, u) {
                seen |= 1 << u;
                stack.push(u);
            }
        }
    }
    seen == s
}

/// Subsets `S` with `G[S]` connected and 2-regular, i.e. vertex sets of
/// chordless cycles.
pub fn chordless_census(g: &Graph) -> Vec<u64> {
    (0u64..1 << g.n())
        .filter(|&s| {
            s.count_ones() >= 3
                && (0..g.n())
                    .filter(|&v| s >> v & 1 == 1)
                    .all(|v| (g.neighbors(v).bits() & s).count_ones() == 2)
                && connected(g, s)
        })
        .collect()
}

pub fn ternary_oracle(g: &Graph) -> bool {
    chordless_census(g).iter().all(|s| s.count_ones() % 3 != 0)
}

/// Union-find forest test.
pub fn acyclic_oracle(g: &Graph, removed: u64) -> bool {
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (u, v) in g.edges() {
        if removed >> u & 1 == 1 || removed >> v & 1 == 1 {
            continue;
        }
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Smallest-size, then lexicographically smallest, subset satisfying `ok`.
pub fn min_subset(n: usize, ok: impl Fn(u64) -> bool) -> (usize, Vec<usize>) {
    for k in 0..=n {
        let mut best: Option<Vec<usize>> = None;
        for s in 0u64..1 << n {
            if s.count_ones() as usize != k || !ok(s) {
                continue;
            }
            let v: Vec<usize> = (0..n).filter(|&i| s >> i & 1 == 1).collect();
            if best.as_ref().is_none_or(|b| v < *b) {
                best = Some(v);
            }
        }
        if let Some(b) = best {
            return (k, b);
        }
    }
    unreachable!()
}

pub fn phi_oracle(g: &Graph) -> (usize, Vec<usize>) {
    min_subset(g.n(), |s| acyclic_oracle(g, s))
}

pub fn phi3_oracle(g: &Graph) -> (usize, Vec<usize>) {
    let bad: Vec<u64> = chordless_census(g)
        .into_iter()
        .filter(|s| s.count_ones() % 3 == 0)
        .collect();
    min_subset(g.n(), |d| bad.iter().all(|c| c & d != 0))
}

/// Number of independent subsets of `s`.
pub fn count_independent(g: &Graph, s: u64) -> u64 {
    let mut count = 0;
    let mut sub = s;
    loop {
        if (0..g.n()).all(|v| sub >> v & 1 == 0 || g.neighbors(v).bits() & sub == 0) {
            count += 1;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & s;
    }
    count
}

/// Lengths of all simple cycles, by plain DFS from each start vertex over
/// larger vertices only.
pub fn simple_cycle_lengths(g: &Graph) -> Vec<usize> {
    fn dfs(g: &Graph, s: usize, v: usize, on: u64, len: usize, out: &mut Vec<usize>) {
        for w in 0..g.n() {
            if !g.has_edge(v, w) {
                continue;
            }
            if w == s && len >= 3 {
                out.push(len);
            } else if w > s && on >> w & 1 == 0 {
                dfs(g, s, w, on | 1 << w, len + 1, out);
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.n() {
        dfs(g, s, s, 1 << s, 1, &mut out);
    }
    out
}

/// Cycle lengths via a Held-Karp table over vertex subsets, as a second
/// opinion on [`simple_cycle_lengths`].
pub fn cycle_lengths_by_subsets(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut lengths = vec![false; n + 1];
    // path[s][v]: a path from min(s) to v visiting exactly s
    let mut path = vec![0u64; 1 << n];
    for v in 0..n {
        path[1 << v] |= 1 << v;
    }
    for s in 1u64..1 << n {
        let start = s.trailing_zeros() as usize;
        for v in 0..n {
            if path[s as usize] >> v & 1 == 0 {
                continue;
            }
            if s.count_ones() >= 3 && g.has_edge(v, start) {
                lengths[s.count_ones() as usize] = true;
            }
            for w in start + 1..n {
                if s >> w & 1 == 0 && g.has_edge(v, w) {
                    path[(s | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    (3..=n).filter(|&l| lengths[l]).collect()
}

pub fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}
