//! Connected induced subgraphs of a host, and exhaustive lists of small
//! graphs up to isomorphism.

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subiso::count_isomorphisms;
use num_bigint::BigUint;

/// Largest edge count accepted by [`connected_graphs_of_size`].
pub const MAX_ENUM_SIZE: usize = 7;
/// Largest order accepted by [`graphs_of_order`].
pub const MAX_ENUM_ORDER: usize = 6;

/// Calls `f` once for each connected vertex subset of `g`.
///
/// Each call of `extend` owns the connected sets containing `set`, avoiding
/// `excluded`. It branches on the smallest vertex adjacent to `set`: either
/// that vertex joins, or it is excluded for the rest of the branch. Leaves
/// are in bijection with the output, so the delay is polynomial.
pub fn for_each_connected_subset<F>(g: &Graph, mut f: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    fn extend<F>(g: &Graph, set: VertexSet, excluded: VertexSet, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(VertexSet) -> ControlFlow<()>,
    {
        let mut frontier = VertexSet::EMPTY;
        for v in set.iter() {
            frontier = frontier.union(g.neighbors(v));
        }
        let frontier = frontier.difference(set).difference(excluded);
        let Some(w) = frontier.min() else {
            return f(set);
        };
        let mut with = set;
        with.insert(w);
        extend(g, with, excluded, f)?;
        let mut without = excluded;
        without.insert(w);
        extend(g, set, without, f)
    }

    for v in 0..g.order() {
        // Vertices below `v` are excluded: `v` is the minimum of the set.
        extend(g, VertexSet::singleton(v), VertexSet::full(v), &mut f)?;
    }
    ControlFlow::Continue(())
}

/// All non-empty connected vertex subsets, ascending by size then by bits.
pub fn connected_subsets(g: &Graph) -> Vec<VertexSet> {
    connected_subsets_capped(g, usize::MAX).expect("uncapped")
}

/// As [`connected_subsets`], failing once more than `cap` sets are found.
pub fn connected_subsets_capped(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let mut out = Vec::new();
    let flow = for_each_connected_subset(g, |s| {
        if out.len() == cap {
            return ControlFlow::Break(());
        }
        out.push(s);
        ControlFlow::Continue(())
    });
    if flow.is_break() {
        return Err(Error::FeasibilityCap {
            what: "connected vertex subsets",
            cap,
        });
    }
    out.sort_unstable_by_key(|s| (s.len(), s.bits()));
    Ok(out)
}

/// One isomorphism class of connected induced subgraphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphClass {
    /// Canonical form of the class.
    pub representative: Graph,
    pub code: CanonicalCode,
    /// Number of vertex subsets of the host inducing this class.
    pub multiplicity: u64,
    pub automorphisms: BigUint,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubgraphClassTable {
    /// Sorted by code.
    pub classes: Vec<SubgraphClass>,
}

impl SubgraphClassTable {
    pub fn total_subsets(&self) -> u64 {
        self.classes.iter().map(|c| c.multiplicity).sum()
    }
}

pub fn classify_connected_subgraphs(g: &Graph) -> Result<SubgraphClassTable> {
    classify_connected_subgraphs_capped(g, usize::MAX)
}

pub fn classify_connected_subgraphs_capped(g: &Graph, cap: usize) -> Result<SubgraphClassTable> {
    let mut counts: BTreeMap<CanonicalCode, u64> = BTreeMap::new();
    for s in connected_subsets_capped(g, cap)? {
        let (sub, _) = g.induced_subgraph(s);
        *counts.entry(canonical_code(&sub)?).or_default() += 1;
    }
    let classes = counts
        .into_iter()
        .map(|(code, multiplicity)| {
            let representative = code.to_graph();
            let automorphisms = count_isomorphisms(&representative, &representative);
            SubgraphClass {
                representative,
                code,
                multiplicity,
                automorphisms,
            }
        })
        .collect();
    Ok(SubgraphClassTable { classes })
}

/// All `k`-subsets of `0..universe`, as bitmasks in increasing order.
fn k_subsets(universe: usize, k: usize) -> impl Iterator<Item = u64> {
    debug_assert!(universe < 64);
    let limit = 1u64 << universe;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = (k <= universe).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(cur)
    })
}

fn pairs(order: usize) -> Vec<(usize, usize)> {
    (1..order)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect()
}

fn graph_from_mask(order: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let edges = VertexSet::from_bits(mask).iter().map(|i| pairs[i]);
    Graph::from_edges(order, edges).expect("pairs are valid edges")
}

/// Canonical forms of the graphs produced by `masks`, deduplicated and
/// sorted by code. Workers fold into private maps that are merged by code,
/// so the result does not depend on the thread count.
fn dedup_parallel<I>(order: usize, masks: I, connected_only: bool) -> Result<Vec<Graph>>
where
    I: ParallelIterator<Item = u64>,
{
    let pairs = pairs(order);
    let merged = masks
        .filter_map(|mask| {
            let g = graph_from_mask(order, &pairs, mask);
            (!connected_only || g.is_connected(None)).then_some(g)
        })
        .map(|g| canonical_code(&g))
        .try_fold(BTreeMap::new, |mut acc, code| {
            acc.insert(code?, ());
            Ok::<_, Error>(acc)
        })
        .try_reduce(BTreeMap::new, |mut a, b| {
            a.extend(b);
            Ok(a)
        })?;
    Ok(merged.into_keys().map(|c| c.to_graph()).collect())
}

/// One representative (the canonical form) of every isomorphism class of
/// connected graphs with exactly `n` edges, sorted by (order, code).
///
/// Runs on the current rayon pool.
pub fn connected_graphs_of_size(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUM_SIZE {
        return Err(Error::OutOfBounds {
            what: "edge count",
            value: n,
            min: 0,
            max: MAX_ENUM_SIZE,
        });
    }
    if n == 0 {
        return Ok(vec![Graph::empty(1)?]);
    }
    let mut out = Vec::new();
    // A connected graph of order m has between m - 1 and m(m-1)/2 edges.
    for order in 2..=n + 1 {
        let slots = order * (order - 1) / 2;
        if slots < n {
            continue;
        }
        let masks: Vec<u64> = k_subsets(slots, n).collect();
        out.extend(dedup_parallel(order, masks.into_par_iter(), true)?);
    }
    Ok(out)
}

/// One representative of every isomorphism class of graphs of order `m`.
pub fn graphs_of_order(m: usize) -> Result<Vec<Graph>> {
    if m > MAX_ENUM_ORDER {
        return Err(Error::OutOfBounds {
            what: "order",
            value: m,
            min: 0,
            max: MAX_ENUM_ORDER,
        });
    }
    let slots = m * m.saturating_sub(1) / 2;
    dedup_parallel(m, (0..1u64 << slots).into_par_iter(), false)
}
