//! Exact decycling numbers.
//!
//! `φ(G)` is the smallest `S` with `G - S` acyclic. `φ₃(G)` is the smallest
//! `D` with `G - D` ternary. Since deleting vertices never creates new induced
//! cycles, `G - D` is ternary exactly when `D` meets every chordless cycle
//! whose length is divisible by 3, so ternary decycling is a hitting-set
//! problem over that family.
//!
//! Both minima are found by scanning candidate subsets in increasing size and
//! lexicographic order, so the reported witness is the lexicographically
//! smallest optimum.

use num_bigint::BigUint;
use serde::Serialize;

use crate::cycles::{induced_3tilde_cycles, is_ternary_within};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::indpoly::independent_set_count_within;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecyclingResult {
    pub phi: usize,
    pub phi_witness: VertexSet,
    pub phi3: usize,
    pub phi3_witness: VertexSet,
    pub nu: usize,
    /// `min |Ind(G[D])|` over ternary decycling sets `D`.
    #[serde(serialize_with = "crate::serde_big::uint")]
    pub middle_bound: BigUint,
    pub middle_witness: VertexSet,
}

/// Inclusion-minimal ternary decycling sets, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalSets {
    pub sets: Vec<VertexSet>,
    /// The listing stopped at the requested cap.
    pub truncated: bool,
}

/// `ν(G) = e - n + q`.
pub fn cyclomatic_number(g: &Graph) -> usize {
    g.edge_count() + g.component_count() - g.n()
}

/// Visits the `k`-subsets of `pool` in lexicographic order until `found`
/// accepts one.
fn first_subset(
    pool: &[usize],
    k: usize,
    spent: &mut u64,
    limit: u64,
    mut found: impl FnMut(VertexSet) -> bool,
) -> Result<Option<VertexSet>> {
    if k > pool.len() {
        return Ok(None);
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        *spent += 1;
        if *spent > limit {
            return Err(Error::budget("candidate subsets", limit));
        }
        let s: VertexSet = idx.iter().map(|&i| pool[i]).collect();
        if found(s) {
            return Ok(Some(s));
        }
        // advance to the next combination
        let Some(i) = (0..k).rev().find(|&i| idx[i] < pool.len() - k + i) else {
            return Ok(None);
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn min_decycling(g: &Graph) -> Result<(usize, VertexSet)> {
    min_decycling_with(g, &Limits::default())
}

/// Only vertices lying on some cycle are candidates.
pub fn min_decycling_with(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let pool = g.cycle_vertices().to_vec();
    let all = g.vertices();
    let mut spent = 0;
    for k in 0..=pool.len() {
        if let Some(s) = first_subset(&pool, k, &mut spent, limits.subset_cap, |s| {
            g.is_forest_within(all.difference(s))
        })? {
            return Ok((k, s));
        }
    }
    unreachable!("deleting every cycle vertex leaves a forest")
}

fn hits_all(cycles: &[VertexSet], d: VertexSet) -> bool {
    cycles.iter().all(|c| !c.intersection(d).is_empty())
}

/// True iff `G - d` is ternary.
pub fn is_ternary_decycling_set(g: &Graph, d: VertexSet, limits: &Limits) -> Result<bool> {
    is_ternary_within(g, g.vertices().difference(d), limits)
}

pub fn min_ternary_decycling(g: &Graph) -> Result<(usize, VertexSet)> {
    min_ternary_decycling_with(g, &Limits::default())
}

/// Only vertices on some chordless cycle of length divisible by 3 are candidates.
pub fn min_ternary_decycling_with(g: &Graph, limits: &Limits) -> Result<(usize, VertexSet)> {
    let cycles = induced_3tilde_cycles(g, limits)?;
    let pool = cycles
        .iter()
        .fold(VertexSet::EMPTY, |acc, &c| acc.union(c))
        .to_vec();
    let mut spent = 0;
    for k in 0..=pool.len() {
        if let Some(d) = first_subset(&pool, k, &mut spent, limits.subset_cap, |d| hits_all(&cycles, d))? {
            assert!(
                is_ternary_decycling_set(g, d, limits)?,
                "hitting set {d:?} does not leave a ternary graph"
            );
            return Ok((k, d));
        }
    }
    unreachable!("deleting every candidate hits every cycle")
}

pub fn minimal_ternary_decycling_sets(g: &Graph, cap: usize) -> Result<MinimalSets> {
    minimal_ternary_decycling_sets_with(g, cap, &Limits::default())
}

/// Enumerates minimal transversals of the induced 3̃-cycle family by
/// branching on the first unhit cycle. Branch `i` takes the `i`-th vertex of
/// that cycle and forbids the earlier ones, so no set is produced twice; a
/// branch dies as soon as one of its chosen vertices becomes redundant.
pub fn minimal_ternary_decycling_sets_with(g: &Graph, cap: usize, limits: &Limits) -> Result<MinimalSets> {
    struct Search<'a> {
        cycles: &'a [VertexSet],
        out: Vec<VertexSet>,
        cap: usize,
        truncated: bool,
        steps: u64,
        limit: u64,
    }

    impl Search<'_> {
        fn irredundant(&self, chosen: VertexSet) -> bool {
            chosen.iter().all(|u| {
                self.cycles
                    .iter()
                    .any(|c| c.intersection(chosen) == VertexSet::singleton(u))
            })
        }

        fn branch(&mut self, chosen: VertexSet, forbidden: VertexSet) -> Result<()> {
            if self.truncated {
                return Ok(());
            }
            self.steps += 1;
            if self.steps > self.limit {
                return Err(Error::budget("transversal search steps", self.limit));
            }
            let Some(&unhit) = self.cycles.iter().find(|c| c.intersection(chosen).is_empty()) else {
                if self.out.len() == self.cap {
                    self.truncated = true;
                } else {
                    self.out.push(chosen);
                }
                return Ok(());
            };
            let mut forbidden = forbidden;
            for v in unhit.difference(forbidden) {
                let next = chosen.union(VertexSet::singleton(v));
                if self.irredundant(next) {
                    self.branch(next, forbidden)?;
                }
                forbidden.insert(v);
            }
            Ok(())
        }
    }

    let cycles = induced_3tilde_cycles(g, limits)?;
    let mut search = Search {
        cycles: &cycles,
        out: Vec::new(),
        cap,
        truncated: false,
        steps: 0,
        limit: limits.expansions,
    };
    search.branch(VertexSet::EMPTY, VertexSet::EMPTY)?;
    let mut sets = search.out;
    sets.sort_by_cached_key(|s| s.to_vec());
    Ok(MinimalSets { sets, truncated: search.truncated })
}

pub fn middle_bound(g: &Graph) -> Result<(BigUint, VertexSet)> {
    middle_bound_with(g, &Limits::default())
}

/// `min |Ind(G[D])|` over ternary decycling sets `D`.
///
/// Enlarging `D` can only add independent sets, so the minimum is attained
/// at an inclusion-minimal `D`; only those are scanned. Ties go to the
/// lexicographically smallest set.
pub fn middle_bound_with(g: &Graph, limits: &Limits) -> Result<(BigUint, VertexSet)> {
    let cap = usize::try_from(limits.subset_cap).unwrap_or(usize::MAX);
    let minimal = minimal_ternary_decycling_sets_with(g, cap, limits)?;
    if minimal.truncated {
        return Err(Error::budget("minimal ternary decycling sets", limits.subset_cap));
    }
    let mut best: Option<(BigUint, VertexSet)> = None;
    for d in minimal.sets {
        let count = independent_set_count_within(g, d, limits)?;
        if best.as_ref().is_none_or(|(b, _)| count < *b) {
            best = Some((count, d));
        }
    }
    Ok(best.expect("the minimal family is never empty"))
}

pub fn analyze(g: &Graph, limits: &Limits) -> Result<DecyclingResult> {
    let (phi, phi_witness) = min_decycling_with(g, limits)?;
    let (phi3, phi3_witness) = min_ternary_decycling_with(g, limits)?;
    let (middle_bound, middle_witness) = middle_bound_with(g, limits)?;
    Ok(DecyclingResult {
        phi,
        phi_witness,
        phi3,
        phi3_witness,
        nu: cyclomatic_number(g),
        middle_bound,
        middle_witness,
    })
}
