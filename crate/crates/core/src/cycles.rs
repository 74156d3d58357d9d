//! Chordless cycles, the ternary predicate, and cycle-length tests.
//!
//! A cycle is listed in canonical form: it starts at its smallest vertex and
//! continues towards the smaller of that vertex's two cycle neighbours.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::indpoly::two_core;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleReport {
    /// Chordless cycles as vertex sequences, in the labels of the input graph.
    pub chordless_cycles: Vec<Vec<usize>>,
    /// Some listed cycle has length divisible by 3. A `false` is only
    /// conclusive when `truncated` is false.
    pub has_induced_3tilde: bool,
    /// Some (not necessarily induced) cycle has length not divisible by 3.
    /// `None` when that search ran out of budget.
    pub has_cycle_len_not_div3: Option<bool>,
    /// The enumeration stopped at the cycle cap.
    pub truncated: bool,
}

struct Budget {
    used: u64,
    limit: u64,
}

impl Budget {
    fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    fn spend(&mut self, what: &'static str) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::budget(what, self.limit))
        } else {
            Ok(())
        }
    }
}

/// Calls `visit` once per chordless cycle of `G[within]`, in canonical form.
///
/// Paths are grown from their smallest vertex `s`; a path `s, p1, ..., pk`
/// stays induced apart from a possible closing edge back to `s`, so the next
/// vertex must avoid the neighbourhoods of `p1 .. p(k-1)`. A candidate
/// adjacent to `s` closes the cycle and is never extended further.
fn for_each_chordless(
    g: &Graph,
    within: u64,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let within = two_core(g, within);
    let mut path = Vec::with_capacity(g.n());
    for s in VertexSet::from_bits(within) {
        let above = within & !((2u64 << s) - 1);
        for p1 in VertexSet::from_bits(g.adj_bits(s) & above) {
            path.clear();
            path.extend([s, p1]);
            let forbidden = !above | 1u64 << p1;
            if extend(g, above, forbidden, &mut path, budget, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

fn extend(
    g: &Graph,
    above: u64,
    forbidden: u64,
    path: &mut Vec<usize>,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let s = path[0];
    let p1 = path[1];
    let last = *path.last().expect("path has at least two vertices");
    let closers = g.adj_bits(s);
    let candidates = g.adj_bits(last) & above & !forbidden;
    for w in VertexSet::from_bits(candidates) {
        budget.spend("cycle search steps")?;
        path.push(w);
        let flow = if closers >> w & 1 == 1 {
            if p1 < w {
                visit(path)
            } else {
                ControlFlow::Continue(())
            }
        } else {
            let blocked = forbidden | g.adj_bits(last) | 1u64 << w;
            extend(g, above, blocked, path, budget, visit)?
        };
        path.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Lists every chordless cycle, stopping after `limits.cycle_cap` of them.
pub fn chordless_cycles(g: &Graph, limits: &Limits) -> Result<CycleReport> {
    let mut cycles = Vec::new();
    let mut truncated = false;
    let mut budget = Budget::new(limits.expansions);
    let _ = for_each_chordless(g, g.vertices().bits(), &mut budget, &mut |c| {
        if cycles.len() == limits.cycle_cap {
            truncated = true;
            return ControlFlow::Break(());
        }
        cycles.push(c.iter().map(|&v| g.label(v)).collect::<Vec<_>>());
        ControlFlow::Continue(())
    })?;
    let has_induced_3tilde = cycles.iter().any(|c| c.len() % 3 == 0);
    let has_cycle_len_not_div3 = if cycles.iter().any(|c| c.len() % 3 != 0) {
        Some(true)
    } else {
        match has_cycle_length_not_div3_with(g, limits) {
            Ok(b) => Some(b),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    Ok(CycleReport {
        chordless_cycles: cycles,
        has_induced_3tilde,
        has_cycle_len_not_div3,
        truncated,
    })
}

/// Vertex sets of the chordless cycles whose length is divisible by 3.
/// Errors rather than returning a partial list.
pub fn induced_3tilde_cycles(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let mut budget = Budget::new(limits.expansions);
    let mut overflow = false;
    let _ = for_each_chordless(g, g.vertices().bits(), &mut budget, &mut |c| {
        if c.len() % 3 == 0 {
            if out.len() == limits.cycle_cap {
                overflow = true;
                return ControlFlow::Break(());
            }
            out.push(c.iter().copied().collect());
        }
        ControlFlow::Continue(())
    })?;
    if overflow {
        return Err(Error::budget("chordless cycles", limits.cycle_cap as u64));
    }
    Ok(out)
}

/// True iff no chordless cycle has length divisible by 3.
pub fn is_ternary(g: &Graph) -> Result<bool> {
    is_ternary_with(g, &Limits::default())
}

pub fn is_ternary_with(g: &Graph, limits: &Limits) -> Result<bool> {
    is_ternary_within(g, g.vertices(), limits)
}

/// [`is_ternary`] for `G[within]`.
pub fn is_ternary_within(g: &Graph, within: VertexSet, limits: &Limits) -> Result<bool> {
    let mut budget = Budget::new(limits.expansions);
    let flow = for_each_chordless(g, within.bits(), &mut budget, &mut |c| {
        if c.len() % 3 == 0 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(flow.is_continue())
}

/// True iff some simple cycle (chords allowed) has length not divisible by 3.
pub fn has_cycle_length_not_div3(g: &Graph) -> Result<bool> {
    has_cycle_length_not_div3_with(g, &Limits::default())
}

/// Depth-first enumeration of simple cycles from their smallest vertex, with
/// early exit on the first length not divisible by 3.
pub fn has_cycle_length_not_div3_with(g: &Graph, limits: &Limits) -> Result<bool> {
    fn walk(
        g: &Graph,
        s: usize,
        above: u64,
        on_path: u64,
        last: usize,
        len: usize,
        budget: &mut Budget,
    ) -> Result<bool> {
        if len >= 3 && g.adj_bits(last) >> s & 1 == 1 && !len.is_multiple_of(3) {
            return Ok(true);
        }
        for w in VertexSet::from_bits(g.adj_bits(last) & above & !on_path) {
            budget.spend("cycle search steps")?;
            if walk(g, s, above, on_path | 1u64 << w, w, len + 1, budget)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    let core = two_core(g, g.vertices().bits());
    let mut budget = Budget::new(limits.expansions);
    for s in VertexSet::from_bits(core) {
        let above = core & !((2u64 << s) - 1);
        // only vertices still connected to s through `above` can close a cycle
        let reach = g.reach(s, above | 1u64 << s) & !(1u64 << s);
        if walk(g, s, reach, 1u64 << s, s, 1, &mut budget)? {
            return Ok(true);
        }
    }
    Ok(false)
}
