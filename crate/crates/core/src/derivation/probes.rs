use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use super::{Derivation, DerivationError, Exactness, Potential};
use crate::graph::ConjGraphBall;
use crate::group::{cayley_layers, Group};
use crate::Rational;

#[derive(Debug, Clone, PartialEq)]
pub struct BoundProbe<E> {
    /// `max ‖d(g)‖_p` over the whole ball.
    pub max_norm: f64,
    pub argmax: E,
    /// `(r, max_{|g| <= r} ‖d(g)‖_p)`.
    pub shells: Vec<(u64, f64)>,
    pub exactness: Exactness,
    /// Bound on `‖d(g) - d_K(g)‖_p` for every `g` when the potential was
    /// truncated at `K`; zero for exact evaluation.
    pub tail_bound: f64,
}

/// Largest `‖d(g)‖_p` over the Cayley ball of the given radius.
pub fn g_boundedness_probe<G: Group>(
    d: &Derivation<G::Element>,
    group: &G,
    radius: u64,
    p: f64,
    node_budget: usize,
) -> Result<BoundProbe<G::Element>, DerivationError> {
    let layers = cayley_layers(group, radius as usize, node_budget)?;
    let mut max_norm = 0.0f64;
    let mut argmax = group.identity();
    let mut shells = Vec::new();
    for r in 0..=radius {
        for g in layers.get(r as usize).into_iter().flatten() {
            let n = d.apply(group, g).lp_norm(p)?;
            if n > max_norm {
                max_norm = n;
                argmax = g.clone();
            }
        }
        shells.push((r, max_norm));
    }
    let exactness = d.exactness();
    let tail_bound = match (exactness, d.potential().and_then(|p| p.closed_form())) {
        // d(g) - d_K(g) = g (a - a_K) - (a - a_K) g, so the error is at most
        // twice the l_p mass of the cut-off tail
        (Exactness::Truncated { max_index }, Some(cf)) => 2.0 * cf.tail_norm_bound(max_index, p),
        _ => 0.0,
    };
    Ok(BoundProbe {
        max_norm,
        argmax,
        shells,
        exactness,
        tail_bound,
    })
}

/// For each `r`, `sup |φ(v)|` over ball vertices at distance `> r` from the
/// base: how far `φ` is from having stabilised to 0.
pub fn stabilisation_probe<E: Ord + Clone>(
    potential: &Potential<E>,
    ball: &ConjGraphBall<E>,
    radii: &[u64],
) -> Vec<(u64, Rational)> {
    radii
        .iter()
        .map(|&r| {
            let sup = ball
                .dist
                .iter()
                .filter(|(_, &d)| d > r)
                .map(|(v, _)| potential.evaluate(v).abs())
                .max()
                .unwrap_or_else(Rational::zero);
            (r, sup)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeJumps<E> {
    pub count: usize,
    /// `(v, w, |φ(v) - φ(w)|)` with `v < w`.
    pub witnesses: Vec<(E, E, Rational)>,
}

/// Adjacent vertex pairs of the ball whose potential values differ by at
/// least `epsilon`. Each undirected pair is counted once; loops never jump.
pub fn edge_jump_probe<E: Ord + Clone>(
    potential: &Potential<E>,
    ball: &ConjGraphBall<E>,
    epsilon: &Rational,
) -> EdgeJumps<E> {
    let pairs: BTreeSet<(E, E)> = ball
        .edges
        .iter()
        .filter(|e| !e.is_loop())
        .map(|e| {
            if e.src < e.dst {
                (e.src.clone(), e.dst.clone())
            } else {
                (e.dst.clone(), e.src.clone())
            }
        })
        .collect();
    let witnesses: Vec<(E, E, Rational)> = pairs
        .into_iter()
        .filter_map(|(v, w)| {
            let gap = (potential.evaluate(&v) - potential.evaluate(&w)).abs();
            (gap >= *epsilon).then_some((v, w, gap))
        })
        .collect();
    EdgeJumps {
        count: witnesses.len(),
        witnesses,
    }
}
