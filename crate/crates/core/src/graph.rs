//! The conjugacy graph `sk(G, X)`: a directed edge labelled `x` from `g` to
//! `x g x^-1` for every letter `x` of `X ∪ X^-1`.
//!
//! Letters are closed under inversion, so the graph is symmetric and its
//! path metric `ρ` can be found by breadth-first search from either end.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use crate::bounded::Bounded;
use crate::group::{cayley_layers, Generator, Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ConjEdge<E> {
    pub src: E,
    pub label: Generator,
    pub dst: E,
}

impl<E: PartialEq> ConjEdge<E> {
    pub fn is_loop(&self) -> bool {
        self.src == self.dst
    }
}

/// Breadth-first ball of `sk(G, X)` around `base`.
#[derive(Debug, Clone)]
pub struct ConjGraphBall<E: Ord> {
    pub base: E,
    pub radius: u64,
    /// Distance from `base` of every explored vertex.
    pub dist: BTreeMap<E, u64>,
    /// Every edge with both ends in the ball, self-loops included.
    pub edges: Vec<ConjEdge<E>>,
    /// False when the node budget stopped the search early.
    pub complete: bool,
    /// True when the ball is the whole connected component.
    pub closed: bool,
}

impl<E: Ord + Clone> ConjGraphBall<E> {
    pub fn vertices(&self) -> impl Iterator<Item = &E> {
        self.dist.keys()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.dist.contains_key(e)
    }
}

/// `(x, x h x^-1)` for every letter `x`, loops included.
pub fn conj_neighbors<G: Group>(group: &G, h: &G::Element) -> Vec<(Generator, G::Element)> {
    group
        .letter_elements()
        .into_iter()
        .map(|(gen, x)| {
            let y = group.conjugate(&x, h);
            (gen, y)
        })
        .collect()
}

/// Explore the component of `u0` out to `radius`, stopping early (and
/// clearing `complete`) once `node_budget` vertices have been found.
pub fn explore_component<G: Group>(
    group: &G,
    u0: &G::Element,
    radius: u64,
    node_budget: usize,
) -> ConjGraphBall<G::Element> {
    let letters = group.letter_elements();
    let mut dist = BTreeMap::new();
    dist.insert(u0.clone(), 0u64);
    let mut frontier = alloc::vec![u0.clone()];
    let mut complete = true;
    let mut depth = 0;
    'bfs: while depth < radius && !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for (_, x) in &letters {
                let y = group.conjugate(x, h);
                if dist.contains_key(&y) {
                    continue;
                }
                if dist.len() >= node_budget {
                    complete = false;
                    break 'bfs;
                }
                dist.insert(y.clone(), depth + 1);
                next.push(y);
            }
        }
        frontier = next;
        depth += 1;
    }
    let mut edges = Vec::new();
    let mut closed = complete;
    for h in dist.keys() {
        for (gen, x) in &letters {
            let y = group.conjugate(x, h);
            if dist.contains_key(&y) {
                edges.push(ConjEdge {
                    src: h.clone(),
                    label: gen.clone(),
                    dst: y,
                });
            } else {
                closed = false;
            }
        }
    }
    ConjGraphBall {
        base: u0.clone(),
        radius,
        dist,
        edges,
        complete,
        closed,
    }
}

/// `ρ(h1, h2)`, exact when it is below `budget`.
///
/// Returns `AtLeast(budget)` for far or disconnected pairs, and `AtLeast` the
/// certified depth if `node_budget` runs out first.
pub fn conj_distance<G: Group>(
    group: &G,
    h1: &G::Element,
    h2: &G::Element,
    budget: u64,
    node_budget: usize,
) -> Bounded {
    if h1 == h2 {
        return Bounded::Exact(0);
    }
    let letters: Vec<G::Element> = group
        .letter_elements()
        .into_iter()
        .map(|(_, x)| x)
        .collect();
    let mut seen = [BTreeMap::new(), BTreeMap::new()];
    seen[0].insert(h1.clone(), 0u64);
    seen[1].insert(h2.clone(), 0u64);
    let mut frontiers = [alloc::vec![h1.clone()], alloc::vec![h2.clone()]];
    let mut depth = [0u64, 0u64];
    // invariant: no path of length <= depth[0] + depth[1] exists
    while depth[0] + depth[1] + 1 < budget {
        let side = usize::from(frontiers[1].len() < frontiers[0].len());
        let other = 1 - side;
        let mut next = Vec::new();
        let mut best: Option<u64> = None;
        for h in &frontiers[side] {
            for x in &letters {
                let y = group.conjugate(x, h);
                if seen[side].contains_key(&y) {
                    continue;
                }
                if let Some(d) = seen[other].get(&y) {
                    let total = depth[side] + 1 + d;
                    best = Some(best.map_or(total, |b| b.min(total)));
                }
                if seen[0].len() + seen[1].len() >= node_budget {
                    return Bounded::AtLeast(depth[0] + depth[1] + 1);
                }
                seen[side].insert(y.clone(), depth[side] + 1);
                next.push(y);
            }
        }
        if let Some(d) = best {
            return if d < budget {
                Bounded::Exact(d)
            } else {
                Bounded::AtLeast(budget)
            };
        }
        if next.is_empty() {
            // the component of one end is exhausted without meeting the other
            return Bounded::AtLeast(budget);
        }
        frontiers[side] = next;
        depth[side] += 1;
    }
    Bounded::AtLeast(budget)
}

/// Largest pairwise `ρ` within a finite set.
pub fn conj_diameter<G: Group>(
    group: &G,
    set: &[G::Element],
    budget: u64,
    node_budget: usize,
) -> Bounded {
    let mut diam = Bounded::Exact(0);
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            diam = diam.max(conj_distance(group, a, b, budget, node_budget));
        }
    }
    diam
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BcVerdict {
    Plateau(u64),
    Growing,
    Inconclusive,
}

impl core::fmt::Display for BcVerdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BcVerdict::Plateau(c) => write!(f, "Plateau({c})"),
            BcVerdict::Growing => f.write_str("Growing"),
            BcVerdict::Inconclusive => f.write_str("Inconclusive"),
        }
    }
}

/// Evidence for or against the bounded-conjugation condition on a set `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcReport {
    /// Canonical encodings of `K`.
    pub k_encodings: Vec<String>,
    /// `(r, max_{|g| <= r} diam(g K g^-1))`.
    pub shells: Vec<(u64, Bounded)>,
    pub verdict: BcVerdict,
    /// Number of distinct conjugation actions on `K` that were measured.
    pub distinct_actions: usize,
}

/// Number of trailing shells that must agree for a plateau.
pub fn plateau_window(max_radius: u64) -> usize {
    (max_radius.div_ceil(2) as usize).max(1)
}

/// Number of trailing shells that must strictly increase for growth.
pub const GROWTH_WINDOW: usize = 3;

pub fn bc_verdict(shells: &[(u64, Bounded)], max_radius: u64) -> BcVerdict {
    let values: Option<Vec<u64>> = shells.iter().map(|(_, d)| d.exact()).collect();
    let Some(values) = values else {
        return BcVerdict::Inconclusive;
    };
    let w = plateau_window(max_radius);
    if values.len() >= w {
        let tail = &values[values.len() - w..];
        if tail.iter().all(|&v| v == tail[0]) {
            return BcVerdict::Plateau(tail[0]);
        }
    }
    if values.len() >= GROWTH_WINDOW {
        let tail = &values[values.len() - GROWTH_WINDOW..];
        if tail.windows(2).all(|p| p[0] < p[1]) {
            return BcVerdict::Growing;
        }
    }
    BcVerdict::Inconclusive
}

/// For each `r <= max_radius`, the largest `diam(g K g^-1)` over the Cayley
/// ball of radius `r`. Conjugators with the same action on `K` are measured
/// once.
pub fn bc_probe<G: Group>(
    group: &G,
    k: &[G::Element],
    max_radius: u64,
    diam_budget: u64,
    node_budget: usize,
) -> Result<BcReport, GroupError> {
    let set: BTreeSet<G::Element> = k.iter().cloned().collect();
    let set: Vec<G::Element> = set.into_iter().collect();
    let layers = cayley_layers(group, max_radius as usize, node_budget)?;
    let mut memo: BTreeMap<Vec<G::Element>, Bounded> = BTreeMap::new();
    let mut running = Bounded::Exact(0);
    let mut shells = Vec::new();
    for r in 0..=max_radius {
        if let Some(layer) = layers.get(r as usize) {
            for g in layer {
                let images: Vec<G::Element> = set.iter().map(|h| group.conjugate(g, h)).collect();
                if let Some(d) = memo.get(&images) {
                    running = running.max(*d);
                    continue;
                }
                let d = conj_diameter(group, &images, diam_budget, node_budget);
                memo.insert(images, d);
                running = running.max(d);
            }
        }
        shells.push((r, running));
    }
    Ok(BcReport {
        k_encodings: set.iter().map(|e| group.encode(e)).collect(),
        verdict: bc_verdict(&shells, max_radius),
        shells,
        distinct_actions: memo.len(),
    })
}

/// Deterministic DOT rendering: vertices sorted by canonical encoding, edges
/// by (source, label, target).
pub fn export_dot<G: Group>(
    group: &G,
    ball: &ConjGraphBall<G::Element>,
    suppress_loops: bool,
) -> String {
    let mut nodes: Vec<String> = ball.vertices().map(|v| group.encode(v)).collect();
    nodes.sort();
    let mut edges: Vec<(String, String, String)> = ball
        .edges
        .iter()
        .filter(|e| !(suppress_loops && e.is_loop()))
        .map(|e| {
            (
                group.encode(&e.src),
                e.label.to_string(),
                group.encode(&e.dst),
            )
        })
        .collect();
    edges.sort();
    let mut out = String::new();
    out.push_str("digraph sk {\n");
    for n in &nodes {
        let _ = writeln!(out, "  \"{}\";", escape(n));
    }
    for (s, l, d) in &edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            escape(s),
            escape(d),
            escape(l)
        );
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}
