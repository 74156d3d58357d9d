//! Connected graphs with prescribed `φ₃(G) = k` and `I(G; -1) = q`.
//!
//! Graphs are grown from a seed by local attachments at an *anchor* vertex
//! `v`. Writing `A = I(G; -1)` and `B = I(G - v; -1)`, the attachments act on
//! the pair `(A, B)` as follows (each is a consequence of the pivot
//! recurrence, and is re-checked by the exact engines on every emitted graph
//! rather than trusted):
//!
//! * pendant path of length 1, anchor moves to the new leaf: `(A - B, A)`
//! * pendant path of length 3, anchor kept: `(-A, -B)`
//! * triangle glued at `v`: `(A - 2B, -B)`
//! * gadget `H` with contact `u`, joined through a new vertex `m` by the
//!   edges `v-m` and `m-u`: `(hA - h'B, (h - h')B)` where `h = I(H; -1)`,
//!   `h' = I(H - u; -1)`.
//!
//! Every gadget holds exactly one triangle and the bridge adds no cycle, and
//! triangles are only glued at vertices on no cycle, so all cycles stay
//! vertex-disjoint triangles and `φ₃` equals the number of triangles.

use std::collections::{HashSet, VecDeque};

use num_bigint::BigInt;
use serde::Serialize;

use crate::decycling::min_ternary_decycling_with;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::indpoly::alternating_number_with;
use crate::Limits;

/// Largest `k` accepted by [`realize`] unless the caller raises it.
pub const DEFAULT_DENSITY_CAP: u32 = 3;

/// Longest recipe the search explores, seed included.
const MAX_RECIPE_LEN: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Seed {
    K1,
    C3,
    C6,
    Path(usize),
}

impl Seed {
    pub fn graph(self) -> Result<Graph> {
        match self {
            Seed::K1 => Graph::new(1),
            Seed::C3 => Graph::cycle(3),
            Seed::C6 => Graph::cycle(6),
            Seed::Path(m) => Graph::path(m),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    /// Triangle `w1 w2 w3` with pendant path `w1-p1-p2-p3`, contact `p2`.
    /// `I(H) = 2` and `I(H - p2) = 0`, so bridging it doubles `A` and `B`.
    Doubler,
    /// Triangle with a pendant path of `tail` vertices; the contact is the
    /// end of the path (a triangle vertex when `tail = 0`).
    TriangleTail { tail: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    Base { seed: Seed },
    AttachPendantPath { at: usize, length: usize },
    BridgeGadget { kind: GadgetKind, at: usize },
    GlueTriangle { at: usize },
}

/// A replayable construction together with the `(k, q)` it was built for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GadgetRecipe {
    pub k: u32,
    pub q: i64,
    pub steps: Vec<Step>,
}

impl GadgetRecipe {
    /// Replays the steps. The first step must be a [`Step::Base`].
    pub fn build(&self) -> Result<Graph> {
        build_steps(&self.steps)
    }
}

fn build_steps(steps: &[Step]) -> Result<Graph> {
    let mut g = Graph::new(0)?;
    for (i, step) in steps.iter().enumerate() {
        g = match *step {
            Step::Base { seed } if i == 0 => seed.graph()?,
            Step::Base { .. } => {
                return Err(Error::InvalidTarget { k: 0, q: 0, reason: "seed after the first step".into() })
            }
            Step::AttachPendantPath { at, length } => attach_pendant_path(&g, at, length)?,
            Step::BridgeGadget { kind, at } => bridge_gadget(&g, at, kind)?,
            Step::GlueTriangle { at } => glue_triangle(&g, at)?,
        };
    }
    Ok(g)
}

/// Appends a path of `length` new vertices hanging off `v`.
pub fn attach_pendant_path(g: &Graph, v: usize, length: usize) -> Result<Graph> {
    g.closed_neighborhood(v)?;
    let mut h = g.clone();
    let mut prev = v;
    for _ in 0..length {
        let w = h.add_vertex()?;
        h.add_edge(prev, w)?;
        prev = w;
    }
    Ok(h)
}

/// Pendant path of three vertices at `v`; negates `I(G; -1)`.
pub fn sign_flip_extend(g: &Graph, v: usize) -> Result<Graph> {
    attach_pendant_path(g, v, 3)
}

/// Adds vertices `a, b` and the triangle `v a b`.
pub fn glue_triangle(g: &Graph, v: usize) -> Result<Graph> {
    g.closed_neighborhood(v)?;
    let mut h = g.clone();
    let a = h.add_vertex()?;
    let b = h.add_vertex()?;
    h.add_edge(v, a)?;
    h.add_edge(v, b)?;
    h.add_edge(a, b)?;
    Ok(h)
}

/// Bridges the doubler gadget to `v`; doubles `I(G; -1)` and raises `φ₃` by one.
pub fn doubler_attach(g: &Graph, v: usize) -> Result<Graph> {
    bridge_gadget(g, v, GadgetKind::Doubler)
}

/// Adds a fresh copy of the gadget and a bridge vertex `m` with edges
/// `v-m` and `m-contact`.
pub fn bridge_gadget(g: &Graph, v: usize, kind: GadgetKind) -> Result<Graph> {
    g.closed_neighborhood(v)?;
    let mut h = g.clone();
    let m = h.add_vertex()?;
    let w1 = h.add_vertex()?;
    let w2 = h.add_vertex()?;
    let w3 = h.add_vertex()?;
    h.add_edge(w1, w2)?;
    h.add_edge(w2, w3)?;
    h.add_edge(w3, w1)?;
    let tail = match kind {
        GadgetKind::Doubler => 3,
        GadgetKind::TriangleTail { tail } => tail,
    };
    let mut path = vec![w1];
    for _ in 0..tail {
        let p = h.add_vertex()?;
        h.add_edge(*path.last().unwrap(), p)?;
        path.push(p);
    }
    let contact = match kind {
        GadgetKind::Doubler => path[2],
        GadgetKind::TriangleTail { .. } => *path.last().unwrap(),
    };
    h.add_edge(v, m)?;
    h.add_edge(m, contact)?;
    Ok(h)
}

/// Predicted `(I(H; -1), I(H - contact; -1))` for a gadget.
fn gadget_values(kind: GadgetKind) -> (i64, i64) {
    match kind {
        GadgetKind::Doubler => (2, 0),
        GadgetKind::TriangleTail { tail } => {
            (0..tail).fold((-2, -1), |(a, b), _| (a - b, a))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Move {
    Bridge(GadgetKind),
    SignFlip,
    Leaf,
    Triangle,
}

const MOVES: [Move; 10] = [
    Move::Bridge(GadgetKind::Doubler),
    Move::SignFlip,
    Move::Leaf,
    Move::Triangle,
    Move::Bridge(GadgetKind::TriangleTail { tail: 0 }),
    Move::Bridge(GadgetKind::TriangleTail { tail: 1 }),
    Move::Bridge(GadgetKind::TriangleTail { tail: 2 }),
    Move::Bridge(GadgetKind::TriangleTail { tail: 3 }),
    Move::Bridge(GadgetKind::TriangleTail { tail: 4 }),
    Move::Bridge(GadgetKind::TriangleTail { tail: 5 }),
];

/// Search node: predicted `(A, B)`, triangle count, whether the anchor lies
/// on a cycle, plus what is needed to write the next step.
#[derive(Debug, Clone)]
struct Node {
    a: i64,
    b: i64,
    triangles: u32,
    anchor_on_cycle: bool,
    n: usize,
    anchor: usize,
    steps: Vec<Step>,
}

impl Node {
    fn seed(seed: Seed) -> Node {
        let (a, b, triangles, on, n) = match seed {
            Seed::K1 => (0, 1, 0, false, 1),
            Seed::C3 => (-2, -1, 1, true, 3),
            Seed::C6 => (2, 1, 1, true, 6),
            Seed::Path(m) => {
                // anchor at an end: I(P_m), I(P_(m-1))
                let f = |len: usize| [1, 0, -1, -1, 0, 1][len % 6];
                (f(m), f(m.saturating_sub(1)), 0, false, m)
            }
        };
        Node { a, b, triangles, anchor_on_cycle: on, n, anchor: 0, steps: vec![Step::Base { seed }] }
    }

    fn apply(&self, mv: Move) -> Option<Node> {
        let mut next = self.clone();
        let at = self.anchor;
        match mv {
            Move::Bridge(kind) => {
                let (h, h1) = gadget_values(kind);
                next.a = h * self.a - h1 * self.b;
                next.b = (h - h1) * self.b;
                next.triangles += 1;
                next.n += 4 + gadget_tail(kind);
                next.steps.push(Step::BridgeGadget { kind, at });
            }
            Move::SignFlip => {
                next.a = -self.a;
                next.b = -self.b;
                next.n += 3;
                next.steps.push(Step::AttachPendantPath { at, length: 3 });
            }
            Move::Leaf => {
                next.a = self.a - self.b;
                next.b = self.a;
                next.anchor = self.n;
                next.anchor_on_cycle = false;
                next.n += 1;
                next.steps.push(Step::AttachPendantPath { at, length: 1 });
            }
            Move::Triangle => {
                if self.anchor_on_cycle {
                    return None;
                }
                next.a = self.a - 2 * self.b;
                next.b = -self.b;
                next.triangles += 1;
                next.anchor_on_cycle = true;
                next.n += 2;
                next.steps.push(Step::GlueTriangle { at });
            }
        }
        (next.n <= crate::MAX_VERTICES).then_some(next)
    }
}

fn gadget_tail(kind: GadgetKind) -> usize {
    match kind {
        GadgetKind::Doubler => 3,
        GadgetKind::TriangleTail { tail } => tail,
    }
}

pub fn realize(k: u32, q: i64) -> Result<(Graph, GadgetRecipe)> {
    realize_with(k, q, DEFAULT_DENSITY_CAP, &Limits::default())
}

/// Breadth-first search over recipes, guided by the predicted `(A, B)`
/// algebra. Recipes are explored shortest first, in a fixed move order, and
/// every candidate that is predicted to hit `(k, q)` is rebuilt and checked
/// with [`alternating_number_with`] and [`min_ternary_decycling_with`]; only a
/// candidate passing both (and connected) is returned.
pub fn realize_with(k: u32, q: i64, density_cap: u32, limits: &Limits) -> Result<(Graph, GadgetRecipe)> {
    let invalid = |reason: String| Error::InvalidTarget { k, q, reason };
    if k == 0 {
        return Err(invalid("k must be positive".into()));
    }
    if k > density_cap {
        return Err(invalid(format!("k exceeds the density cap of {density_cap}")));
    }
    if k >= 62 || q.unsigned_abs() > 1u64 << k {
        return Err(invalid(format!("|q| must not exceed 2^{k}")));
    }
    let span = 1i64 << (k + 1).min(62);

    let mut queue: VecDeque<Node> = [Seed::K1, Seed::C3].into_iter().map(Node::seed).collect();
    let mut seen = HashSet::new();
    while let Some(node) = queue.pop_front() {
        if !seen.insert((node.a, node.b, node.triangles, node.anchor_on_cycle)) {
            continue;
        }
        if node.triangles == k && node.a == q {
            let recipe = GadgetRecipe { k, q, steps: node.steps.clone() };
            if let Some(g) = verified(&recipe, limits)? {
                return Ok((g, recipe));
            }
        }
        if node.steps.len() == MAX_RECIPE_LEN {
            continue;
        }
        for mv in MOVES {
            if let Some(next) = node.apply(mv) {
                if next.triangles <= k && next.a.abs() <= span && next.b.abs() <= span {
                    queue.push_back(next);
                }
            }
        }
    }
    Err(Error::Unrealized { k, q })
}

/// Rebuilds the recipe and checks it with the exact engines.
fn verified(recipe: &GadgetRecipe, limits: &Limits) -> Result<Option<Graph>> {
    let g = recipe.build()?;
    let ok = g.is_connected()
        && alternating_number_with(&g, limits)? == BigInt::from(recipe.q)
        && min_ternary_decycling_with(&g, limits)?.0 == recipe.k as usize;
    Ok(ok.then_some(g))
}

/// `C₃` followed by `j` doubler attachments at vertex 0: `|I| = 2^(j+1)` and
/// `φ₃ = j + 1`.
pub fn doubler_chain(j: usize) -> Result<Graph> {
    (0..j).try_fold(Graph::cycle(3)?, |g, _| doubler_attach(&g, 0))
}
