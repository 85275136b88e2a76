//! Simple undirected graphs on at most [`MAX_ORDER`] vertices with bitset
//! adjacency rows, plus the named families used throughout the crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest supported order. Matches the graph6 short-form ceiling.
pub const MAX_ORDER: usize = 62;

/// A set of vertex labels of some host graph, stored as a bitset.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, .., order - 1}`.
    pub fn full(order: usize) -> Self {
        debug_assert!(order <= 64);
        if order >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << order) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// True iff no member is `>= order`.
    pub fn fits(self, order: usize) -> bool {
        self.is_subset(VertexSet::full(order))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// A simple undirected graph on the vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph of the given order.
    pub fn empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; order],
        })
    }

    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let order = adj.len();
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        for (u, row) in adj.iter().enumerate() {
            if row.contains(u) {
                return Err(Error::SelfLoop(u));
            }
            for v in row.iter() {
                if v >= order {
                    return Err(Error::VertexOutOfRange { vertex: v, order });
                }
                if !adj[v].contains(u) {
                    return Err(Error::Asymmetric(u, v));
                }
            }
        }
        Ok(Graph { adj })
    }

    /// Adds `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let order = self.order();
        for w in [u, v] {
            if w >= order {
                return Err(Error::VertexOutOfRange { vertex: w, order });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.len()).collect()
    }

    /// Degrees sorted in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges `(u, v)` with `u < v`, ascending by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (u, row) in self.adj.iter().enumerate() {
            for v in row.iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Whether `s` (or the whole graph, when `None`) induces a connected
    /// subgraph. The empty set is not connected; a single vertex is.
    pub fn is_connected(&self, restricted_to: Option<VertexSet>) -> bool {
        let within = restricted_to.unwrap_or_else(|| self.vertices());
        debug_assert!(within.fits(self.order()));
        let Some(start) = within.min() else {
            return false;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen == within
    }

    /// The subgraph induced by `s`, relabelled densely. The second value
    /// maps each new label to its host label, ascending.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        debug_assert!(s.fits(self.order()));
        let back: Vec<usize> = s.iter().collect();
        let mut forward = [usize::MAX; 64];
        for (i, &v) in back.iter().enumerate() {
            forward[v] = i;
        }
        let adj = back
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(s)
                    .iter()
                    .map(|w| forward[w])
                    .collect()
            })
            .collect();
        (Graph { adj }, back)
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut adj = vec![VertexSet::EMPTY; self.order()];
        for (u, row) in self.adj.iter().enumerate() {
            adj[perm[u]] = row.iter().map(|v| perm[v]).collect();
        }
        Graph { adj }
    }

    pub fn is_acyclic(&self) -> bool {
        // A forest has order - components edges.
        let mut remaining = self.vertices();
        let mut components = 0;
        while let Some(v) = remaining.min() {
            let mut seen = VertexSet::singleton(v);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for w in frontier.iter() {
                    next = next.union(self.adj[w]);
                }
                frontier = next.difference(seen);
                seen = seen.union(frontier);
            }
            remaining = remaining.difference(seen);
            components += 1;
        }
        self.size() + components == self.order()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(order={}, edges={:?})", self.order(), self.edges())
    }
}

/// The star `K_{1,n}`: center 0 joined to leaves `1..=n`.
pub fn make_star(n: usize) -> Result<Graph> {
    Graph::from_edges(n + 1, (1..=n).map(|v| (0, v)))
}

pub fn make_path(m: usize) -> Result<Graph> {
    if m == 0 {
        return Err(Error::OutOfBounds {
            what: "path order",
            value: m,
            min: 1,
            max: MAX_ORDER,
        });
    }
    Graph::from_edges(m, (1..m).map(|v| (v - 1, v)))
}

pub fn make_cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::OutOfBounds {
            what: "cycle order",
            value: m,
            min: 3,
            max: MAX_ORDER,
        });
    }
    let mut g = make_path(m)?;
    g.add_edge(m - 1, 0)?;
    Ok(g)
}

pub fn make_complete(m: usize) -> Result<Graph> {
    let mut g = Graph::empty(m)?;
    let all = VertexSet::full(m);
    for (v, row) in g.adj.iter_mut().enumerate() {
        *row = all.difference(VertexSet::singleton(v));
    }
    Ok(g)
}

/// The named graph families with closed-form indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Parameter is the number of rays.
    Star,
    /// Parameter is the order.
    Path,
    /// Parameter is the order.
    Cycle,
    /// Parameter is the order.
    Complete,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Star, Family::Path, Family::Cycle, Family::Complete];

    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }

    /// Smallest admissible parameter.
    pub fn min_param(self) -> usize {
        match self {
            Family::Star => 0,
            Family::Path => 1,
            Family::Cycle => 3,
            Family::Complete => 0,
        }
    }

    pub fn generate(self, param: usize) -> Result<Graph> {
        match self {
            Family::Star => make_star(param),
            Family::Path => make_path(param),
            Family::Cycle => make_cycle(param),
            Family::Complete => make_complete(param),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}
