//! Independence polynomials and their evaluations.
//!
//! Every evaluation runs the same engine: split the surviving vertex set into
//! connected components and multiply their values; solve tree components with
//! a rooted dynamic program; otherwise pick a pivot `v` on a cycle and apply
//!
//! ```text
//! I(G; x) = I(G - v; x) + x * I(G - N[v]; x)
//! ```
//!
//! Component values are memoized on their vertex bitmask (relative to the
//! input graph) for the duration of one call. The engine is generic over the
//! value being computed: the full polynomial, the signed value at `x = -1`, or
//! the plain count at `x = 1`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Limits;

/// Largest graph the brute-force oracle accepts.
pub const ORACLE_CAP: usize = 25;

/// `I(G; -1)`: even-size minus odd-size independent sets.
pub type AlternatingNumber = BigInt;

/// `I(G; x) = Σ i_k x^k`, where `i_k` counts independent sets of size `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct IndependencePolynomial {
    #[serde(serialize_with = "crate::serde_big::uint_seq")]
    coefficients: Vec<BigUint>,
}

impl IndependencePolynomial {
    /// Builds a polynomial from coefficients `i_0, i_1, ...`; trailing zeros are dropped.
    pub fn from_coefficients(mut coefficients: Vec<BigUint>) -> Self {
        while coefficients.len() > 1 && coefficients.last().is_some_and(Zero::is_zero) {
            coefficients.pop();
        }
        if coefficients.is_empty() {
            coefficients.push(BigUint::zero());
        }
        IndependencePolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[BigUint] {
        &self.coefficients
    }

    /// Independence number `α(G)`.
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coefficients
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + BigInt::from(c.clone()))
    }

    pub fn at_minus_one(&self) -> AlternatingNumber {
        self.coefficients
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |acc, (k, c)| {
                let c = BigInt::from(c.clone());
                if k % 2 == 0 {
                    acc + c
                } else {
                    acc - c
                }
            })
    }

    /// `I(G; 1)`, the number of independent sets.
    pub fn total(&self) -> BigUint {
        self.coefficients.iter().sum()
    }

    /// `x * self`.
    pub fn shifted(&self) -> Self {
        let mut c = Vec::with_capacity(self.coefficients.len() + 1);
        c.push(BigUint::zero());
        c.extend(self.coefficients.iter().cloned());
        IndependencePolynomial::from_coefficients(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coefficients.len().max(other.coefficients.len());
        let zero = BigUint::zero();
        let c = (0..len)
            .map(|k| {
                self.coefficients.get(k).unwrap_or(&zero) + other.coefficients.get(k).unwrap_or(&zero)
            })
            .collect();
        IndependencePolynomial::from_coefficients(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut c = vec![BigUint::zero(); self.coefficients.len() + other.coefficients.len() - 1];
        for (i, a) in self.coefficients.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coefficients.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IndependencePolynomial::from_coefficients(c)
    }
}

/// What the engine computes per component.
trait Algebra {
    type Value: Clone;
    fn one() -> Self::Value;
    fn add(a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn times_x(a: &Self::Value) -> Self::Value;
}

struct Polynomial;
struct AtMinusOne;
struct AtOne;

impl Algebra for Polynomial {
    type Value = IndependencePolynomial;
    fn one() -> Self::Value {
        IndependencePolynomial::from_coefficients(vec![BigUint::one()])
    }
    fn add(a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.add(b)
    }
    fn mul(a: &Self::Value, b: &Self::Value) -> Self::Value {
        a.mul(b)
    }
    fn times_x(a: &Self::Value) -> Self::Value {
        a.shifted()
    }
}

impl Algebra for AtMinusOne {
    type Value = BigInt;
    fn one() -> BigInt {
        BigInt::one()
    }
    fn add(a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn times_x(a: &BigInt) -> BigInt {
        -a
    }
}

impl Algebra for AtOne {
    type Value = BigUint;
    fn one() -> BigUint {
        BigUint::one()
    }
    fn add(a: &BigUint, b: &BigUint) -> BigUint {
        a + b
    }
    fn mul(a: &BigUint, b: &BigUint) -> BigUint {
        a * b
    }
    fn times_x(a: &BigUint) -> BigUint {
        a.clone()
    }
}

struct Engine<'g, A: Algebra> {
    g: &'g Graph,
    memo: HashMap<u64, A::Value>,
    expansions: u64,
    budget: u64,
}

impl<'g, A: Algebra> Engine<'g, A> {
    fn new(g: &'g Graph, limits: &Limits) -> Self {
        Engine {
            g,
            memo: HashMap::new(),
            expansions: 0,
            budget: limits.expansions,
        }
    }

    fn eval(&mut self, mask: u64) -> Result<A::Value> {
        let mut acc = A::one();
        for comp in self.g.components_within(VertexSet::from_bits(mask)) {
            let value = self.eval_component(comp.bits())?;
            acc = A::mul(&acc, &value);
        }
        Ok(acc)
    }

    fn eval_component(&mut self, comp: u64) -> Result<A::Value> {
        if comp.count_ones() == 1 {
            return Ok(A::add(&A::one(), &A::times_x(&A::one())));
        }
        if let Some(v) = self.memo.get(&comp) {
            return Ok(v.clone());
        }
        let set = VertexSet::from_bits(comp);
        let value = if self.g.edges_within(set) + 1 == set.len() {
            self.tree(comp)
        } else {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(Error::budget("node expansions", self.budget));
            }
            let v = self.pivot(comp);
            let without_v = self.eval(comp & !(1u64 << v))?;
            let closed = self.g.adj_bits(v) | 1u64 << v;
            let without_closed = self.eval(comp & !closed)?;
            A::add(&without_v, &A::times_x(&without_closed))
        };
        self.memo.insert(comp, value.clone());
        Ok(value)
    }

    /// Highest-degree vertex of the component that lies on a cycle; ties go
    /// to the lowest index.
    fn pivot(&self, comp: u64) -> usize {
        let core = two_core(self.g, comp);
        let mut candidates: Vec<usize> = VertexSet::from_bits(core).to_vec();
        candidates.sort_by_key(|&v| std::cmp::Reverse((self.g.adj_bits(v) & comp).count_ones()));
        candidates
            .into_iter()
            .find(|&v| self.g.on_cycle_within(v, comp))
            .expect("a component with a cycle has a vertex on it")
    }

    /// Rooted DP on a tree component: `take[v] = x * Π skip[c]`,
    /// `skip[v] = Π (take[c] + skip[c])`.
    fn tree(&self, comp: u64) -> A::Value {
        let root = comp.trailing_zeros() as usize;
        let mut order = vec![root];
        let mut parent = vec![usize::MAX; self.g.n()];
        let mut seen = 1u64 << root;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            let mut children = self.g.adj_bits(v) & comp & !seen;
            seen |= children;
            while children != 0 {
                let c = children.trailing_zeros() as usize;
                children &= children - 1;
                parent[c] = v;
                order.push(c);
            }
            i += 1;
        }
        let mut take: HashMap<usize, A::Value> = HashMap::with_capacity(order.len());
        let mut skip: HashMap<usize, A::Value> = HashMap::with_capacity(order.len());
        for &v in order.iter().rev() {
            let mut t = A::one();
            let mut s = A::one();
            for c in VertexSet::from_bits(self.g.adj_bits(v) & comp) {
                if parent[c] != v {
                    continue;
                }
                let (tc, sc) = (&take[&c], &skip[&c]);
                t = A::mul(&t, sc);
                s = A::mul(&s, &A::add(tc, sc));
            }
            take.insert(v, A::times_x(&t));
            skip.insert(v, s);
        }
        A::add(&take[&root], &skip[&root])
    }
}

/// Vertices of `G[mask]` surviving repeated removal of vertices of degree <= 1.
pub(crate) fn two_core(g: &Graph, mask: u64) -> u64 {
    let mut core = mask;
    loop {
        let peel = VertexSet::from_bits(core)
            .iter()
            .filter(|&v| (g.adj_bits(v) & core).count_ones() <= 1)
            .fold(0u64, |acc, v| acc | 1 << v);
        if peel == 0 {
            return core;
        }
        core &= !peel;
    }
}

pub fn independence_polynomial(g: &Graph) -> Result<IndependencePolynomial> {
    independence_polynomial_with(g, &Limits::default())
}

pub fn independence_polynomial_with(g: &Graph, limits: &Limits) -> Result<IndependencePolynomial> {
    Engine::<Polynomial>::new(g, limits).eval(g.vertices().bits())
}

/// `I(G; -1)`, computed with the signed recurrence directly.
pub fn alternating_number(g: &Graph) -> Result<AlternatingNumber> {
    alternating_number_with(g, &Limits::default())
}

pub fn alternating_number_with(g: &Graph, limits: &Limits) -> Result<AlternatingNumber> {
    Engine::<AtMinusOne>::new(g, limits).eval(g.vertices().bits())
}

/// `|Ind(G)| = I(G; 1)`, the number of independent sets including the empty one.
pub fn independent_set_count(g: &Graph) -> Result<BigUint> {
    independent_set_count_with(g, &Limits::default())
}

pub fn independent_set_count_with(g: &Graph, limits: &Limits) -> Result<BigUint> {
    Engine::<AtOne>::new(g, limits).eval(g.vertices().bits())
}

/// `|Ind(G[within])|` without materializing the induced subgraph.
pub(crate) fn independent_set_count_within(g: &Graph, within: VertexSet, limits: &Limits) -> Result<BigUint> {
    Engine::<AtOne>::new(g, limits).eval(within.bits())
}

/// Definition-level reference: tests every vertex subset for independence.
/// Refuses graphs with more than [`ORACLE_CAP`] vertices.
pub fn oracle_polynomial(g: &Graph) -> Result<IndependencePolynomial> {
    let n = g.n();
    if n > ORACLE_CAP {
        return Err(Error::OracleCap { n, cap: ORACLE_CAP });
    }
    let mut counts = vec![0u64; n + 1];
    for s in 0u64..1 << n {
        let independent = VertexSet::from_bits(s)
            .iter()
            .all(|v| g.adj_bits(v) & s == 0);
        if independent {
            counts[s.count_ones() as usize] += 1;
        }
    }
    Ok(IndependencePolynomial::from_coefficients(
        counts.into_iter().map(BigUint::from).collect(),
    ))
}
