//! Isomorphism search between small graphs.
//!
//! Both the counting search and the enumerating iterator are plain
//! backtracking over vertex assignments. A candidate image `w` for `v` must
//! be unused, have the same degree, and agree with every earlier assignment
//! on adjacency. Counting assigns vertices in descending-degree order;
//! enumeration assigns `0, 1, ..` so that bijections come out in
//! lexicographic order of their image sequence.

use num_bigint::BigUint;

use crate::graph::{Graph, VertexSet};

/// Cheap necessary conditions for `g ≅ h`.
pub fn invariants_match(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && g.degree_sequence() == h.degree_sequence()
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    /// `by_degree[d]` = vertices of `h` with degree `d`.
    by_degree: Vec<VertexSet>,
}

impl<'a> Matcher<'a> {
    fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let mut by_degree = vec![VertexSet::EMPTY; h.order().max(1)];
        for w in 0..h.order() {
            by_degree[h.degree(w)].insert(w);
        }
        Matcher { g, h, by_degree }
    }

    /// Images available to `v` given the partial map on `assigned`.
    fn candidates(
        &self,
        v: usize,
        assigned: VertexSet,
        map: &[usize],
        used: VertexSet,
    ) -> VertexSet {
        let mut c = self.by_degree[self.g.degree(v)].difference(used);
        let gn = self.g.neighbors(v);
        for u in assigned.iter() {
            let hn = self.h.neighbors(map[u]);
            c = if gn.contains(u) {
                c.intersection(hn)
            } else {
                c.difference(hn)
            };
            if c.is_empty() {
                break;
            }
        }
        c
    }
}

/// Number of isomorphisms `g → h`; `count_isomorphisms(g, g)` is `|Aut(g)|`.
pub fn count_isomorphisms(g: &Graph, h: &Graph) -> BigUint {
    BigUint::from(count_isomorphisms_u128(g, h))
}

/// Fixed-width variant of [`count_isomorphisms`]. Any count large enough to
/// overflow would take far longer than the age of the universe to reach by
/// enumeration, so the narrower type is not a practical restriction.
pub fn count_isomorphisms_u128(g: &Graph, h: &Graph) -> u128 {
    if !invariants_match(g, h) {
        return 0;
    }
    let n = g.order();
    if n == 0 {
        return 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let m = Matcher::new(g, h);
    let mut map = vec![usize::MAX; n];
    count_rec(&m, &order, 0, VertexSet::EMPTY, VertexSet::EMPTY, &mut map)
}

fn count_rec(
    m: &Matcher<'_>,
    order: &[usize],
    depth: usize,
    assigned: VertexSet,
    used: VertexSet,
    map: &mut [usize],
) -> u128 {
    let v = order[depth];
    let cands = m.candidates(v, assigned, map, used);
    if depth + 1 == order.len() {
        return cands.len() as u128;
    }
    let mut total = 0;
    for w in cands.iter() {
        map[v] = w;
        let mut a = assigned;
        a.insert(v);
        let mut u = used;
        u.insert(w);
        total += count_rec(m, order, depth + 1, a, u, map);
    }
    total
}

/// Iterator over all isomorphisms `g → h`, each given as the image sequence
/// `[f(0), f(1), ..]`, in lexicographic order.
pub fn enumerate_isomorphisms<'a>(g: &'a Graph, h: &'a Graph) -> Isomorphisms<'a> {
    let n = g.order();
    let feasible = invariants_match(g, h);
    Isomorphisms {
        matcher: Matcher::new(g, h),
        map: vec![usize::MAX; n],
        cands: vec![VertexSet::EMPTY; n],
        used: VertexSet::EMPTY,
        depth: 0,
        state: if feasible { State::Fresh } else { State::Done },
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

pub struct Isomorphisms<'a> {
    matcher: Matcher<'a>,
    map: Vec<usize>,
    cands: Vec<VertexSet>,
    used: VertexSet,
    depth: usize,
    state: State,
}

impl Iterator for Isomorphisms<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let n = self.map.len();
        match self.state {
            State::Done => return None,
            State::Fresh => {
                if n == 0 {
                    self.state = State::Done;
                    return Some(Vec::new());
                }
                self.state = State::Running;
                self.cands[0] = self
                    .matcher
                    .candidates(0, VertexSet::EMPTY, &self.map, self.used);
            }
            State::Running => {}
        }
        loop {
            let d = self.depth;
            let Some(w) = self.cands[d].min() else {
                if d == 0 {
                    self.state = State::Done;
                    return None;
                }
                self.depth -= 1;
                self.used.remove(self.map[self.depth]);
                continue;
            };
            self.cands[d].remove(w);
            self.map[d] = w;
            if d + 1 == n {
                return Some(self.map.clone());
            }
            self.used.insert(w);
            self.depth += 1;
            let assigned = VertexSet::full(self.depth);
            self.cands[self.depth] = self
                .matcher
                .candidates(self.depth, assigned, &self.map, self.used);
        }
    }
}

/// Whether `g ≅ h`; stops at the first isomorphism found.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    enumerate_isomorphisms(g, h).next().is_some()
}

/// Image of each edge of `g` (in [`Graph::edges`] order) under `f`, with
/// endpoints normalised to `(min, max)`.
pub fn edge_bijection(g: &Graph, f: &[usize]) -> Vec<(usize, usize)> {
    g.edges()
        .into_iter()
        .map(|(a, b)| {
            let (x, y) = (f[a], f[b]);
            (x.min(y), x.max(y))
        })
        .collect()
}

/// A witnessed isomorphism between two induced subgraphs of one host.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartialSymmetry {
    pub domain: VertexSet,
    pub codomain: VertexSet,
    /// `(a, f(a))` in host labels, ascending by `a`.
    pub map: Vec<(usize, usize)>,
}

impl PartialSymmetry {
    /// Lifts an isomorphism between the induced subgraphs on `domain` and
    /// `codomain` (given in their dense labels) back to host labels.
    pub fn from_induced(domain: VertexSet, codomain: VertexSet, f: &[usize]) -> Self {
        let dom: Vec<usize> = domain.iter().collect();
        let cod: Vec<usize> = codomain.iter().collect();
        let map = dom
            .iter()
            .enumerate()
            .map(|(i, &a)| (a, cod[f[i]]))
            .collect();
        PartialSymmetry {
            domain,
            codomain,
            map,
        }
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn apply(&self, a: usize) -> Option<usize> {
        self.map
            .binary_search_by_key(&a, |&(x, _)| x)
            .ok()
            .map(|i| self.map[i].1)
    }

    /// Checks bijectivity onto `codomain` and edge preservation both ways.
    pub fn is_valid_in(&self, host: &Graph) -> bool {
        let order = host.order();
        if !self.domain.fits(order) || !self.codomain.fits(order) {
            return false;
        }
        if self.map.iter().map(|&(a, _)| a).collect::<VertexSet>() != self.domain
            || !self.map.windows(2).all(|w| w[0].0 < w[1].0)
        {
            return false;
        }
        let image: VertexSet = self.map.iter().map(|&(_, b)| b).collect();
        if image != self.codomain || image.len() != self.map.len() {
            return false;
        }
        self.map.iter().enumerate().all(|(i, &(a, fa))| {
            self.map[i + 1..]
                .iter()
                .all(|&(b, fb)| host.has_edge(a, b) == host.has_edge(fa, fb))
        })
    }

    /// Host edges inside the domain paired with their images, in the
    /// domain's edge order.
    pub fn edge_map(&self, host: &Graph) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for (i, &(a, fa)) in self.map.iter().enumerate() {
            for &(b, fb) in &self.map[i + 1..] {
                if host.has_edge(a, b) {
                    out.push(((a, b), (fa.min(fb), fa.max(fb))));
                }
            }
        }
        out
    }
}
