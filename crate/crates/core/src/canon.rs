//! Canonical codes for small graphs.
//!
//! The code of `g` is its order followed by the lexicographically smallest
//! upper-triangle adjacency bitstring (graph6 column order) over all vertex
//! orderings that list vertices by non-increasing degree. Equal codes mean
//! isomorphic graphs because the bitstring determines the graph; isomorphic
//! graphs share the whole set of admissible bitstrings, hence the minimum.
//!
//! The search is branch-and-bound on column prefixes. Twins (vertices with
//! equal open or equal closed neighbourhoods) can be swapped by an
//! automorphism, so only orderings that keep each twin class in ascending
//! label order are explored; every bitstring is still reached.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by [`canonical_code`]. Runtime is exponential in
/// the size of the largest degree class that has no twins; regular graphs
/// near this bound can take seconds.
pub const MAX_CANONICAL_ORDER: usize = 16;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// The canonical form: the graph whose vertex `k` sits at position `k`
    /// of the minimising ordering.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n).expect("code order within bounds");
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if self.0[1 + bit / 8] >> (7 - bit % 8) & 1 == 1 {
                    g.add_edge(i, j).expect("code bits index valid vertices");
                }
                bit += 1;
            }
        }
        g
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

struct Search<'a> {
    g: &'a Graph,
    /// Degree required at each position.
    slot_degree: Vec<usize>,
    /// Vertices that must already be placed before `v` may be.
    before: Vec<VertexSet>,
    pos: Vec<usize>,
    cols: Vec<u64>,
    best: Option<Vec<u64>>,
}

impl Search<'_> {
    /// Bits `x(pos[i], v)` for `i < k`, earliest position most significant.
    fn column(&self, k: usize, v: usize) -> u64 {
        let row = self.g.neighbors(v);
        self.pos[..k]
            .iter()
            .fold(0u64, |acc, &u| (acc << 1) | row.contains(u) as u64)
    }

    fn run(&mut self, k: usize, placed: VertexSet) {
        let n = self.g.order();
        if k == n {
            if self.best.as_ref().is_none_or(|b| self.cols < *b) {
                self.best = Some(self.cols.clone());
            }
            return;
        }
        for v in 0..n {
            if placed.contains(v)
                || self.g.degree(v) != self.slot_degree[k]
                || !self.before[v].is_subset(placed)
            {
                continue;
            }
            let col = self.column(k, v);
            // The incumbent can change inside an earlier sibling's subtree,
            // so the tie test is redone per candidate.
            if let Some(b) = &self.best {
                if b[..k] == self.cols[..k] && col > b[k] {
                    continue;
                }
            }
            self.pos[k] = v;
            self.cols[k] = col;
            let mut next = placed;
            next.insert(v);
            self.run(k + 1, next);
        }
    }
}

fn twin_constraints(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    (0..n)
        .map(|v| {
            let open = g.neighbors(v);
            let mut closed = open;
            closed.insert(v);
            (0..v)
                .filter(|&u| {
                    let ou = g.neighbors(u);
                    let mut cu = ou;
                    cu.insert(u);
                    ou == open || cu == closed
                })
                .collect()
        })
        .collect()
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::OrderTooLarge {
            order: n,
            max: MAX_CANONICAL_ORDER,
        });
    }
    let mut search = Search {
        g,
        slot_degree: g.degree_sequence(),
        before: twin_constraints(g),
        pos: vec![0; n],
        cols: vec![0; n],
        best: None,
    };
    search.run(0, VertexSet::EMPTY);
    let cols = search
        .best
        .expect("degree-respecting ordering always exists");

    let bits = n * n.saturating_sub(1) / 2;
    let mut out = vec![0u8; 1 + bits.div_ceil(8)];
    out[0] = n as u8;
    let mut bit = 0;
    for (k, &col) in cols.iter().enumerate() {
        for i in 0..k {
            if col >> (k - 1 - i) & 1 == 1 {
                out[1 + bit / 8] |= 0x80 >> (bit % 8);
            }
            bit += 1;
        }
    }
    Ok(CanonicalCode(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path, make_star};
    use crate::subiso::count_isomorphisms_u128;

    #[test]
    fn same_graph_same_code() {
        assert_eq!(
            canonical_code(&make_cycle(3).unwrap()).unwrap(),
            canonical_code(&make_complete(3).unwrap()).unwrap()
        );
        assert_ne!(
            canonical_code(&make_path(4).unwrap()).unwrap(),
            canonical_code(&make_star(3).unwrap()).unwrap()
        );
    }

    #[test]
    fn canonical_form_is_isomorphic() {
        for g in [
            make_path(6).unwrap(),
            make_star(5).unwrap(),
            make_cycle(7).unwrap(),
            Graph::from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
        ] {
            let code = canonical_code(&g).unwrap();
            let form = code.to_graph();
            assert!(count_isomorphisms_u128(&g, &form) > 0);
            assert_eq!(canonical_code(&form).unwrap(), code);
        }
    }

    #[test]
    fn order_four_classes() {
        // Oracle: cluster the 64 labelled graphs by pairwise isomorphism.
        let graphs: Vec<Graph> = (0u32..64)
            .map(|mask| {
                let pairs = [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)];
                Graph::from_edges(
                    4,
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask >> i & 1 == 1)
                        .map(|(_, &p)| p),
                )
                .unwrap()
            })
            .collect();
        let mut reps: Vec<&Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| count_isomorphisms_u128(r, g) > 0) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 11);
        let codes: std::collections::BTreeSet<_> =
            graphs.iter().map(|g| canonical_code(g).unwrap()).collect();
        assert_eq!(codes.len(), 11);
    }

    #[test]
    fn order_bound() {
        assert!(canonical_code(&make_cycle(16).unwrap()).is_ok());
        assert!(matches!(
            canonical_code(&make_path(17).unwrap()),
            Err(Error::OrderTooLarge { .. })
        ));
        assert_eq!(
            canonical_code(&Graph::empty(0).unwrap()).unwrap().order(),
            0
        );
    }
}
