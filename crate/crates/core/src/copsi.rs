//! The connected partial symmetry index, computed two independent ways.
//!
//! * [`Engine::naive`] sums `#Iso(G[U], G[V])` over every ordered pair of
//!   connected vertex subsets.
//! * [`Engine::classes`] groups the connected subsets by isomorphism class.
//!   Two subsets of one class with multiplicity `k` and automorphism count
//!   `a` contribute `a` isomorphisms per ordered pair, and subsets of
//!   different classes contribute nothing, so the index is `Σ k² · a`.
//!
//! The empty subset is not connected, so the empty map is never counted.

use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::enumerate::{
    classify_connected_subgraphs_capped, connected_subsets_capped, SubgraphClassTable,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::subiso::{count_isomorphisms_u128, enumerate_isomorphisms, PartialSymmetry};

pub const DEFAULT_SUBSET_CAP: usize = 100_000;

/// Connected partial symmetries split by the number of edges each side
/// spans: none (single vertices), one (single edges), or at least two.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CopsiBreakdown {
    pub singleton: BigUint,
    pub edge: BigUint,
    pub third: BigUint,
    pub total: BigUint,
}

/// Evaluation settings shared by the engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    /// Hosts with more connected vertex subsets than this are refused.
    pub subset_cap: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            subset_cap: DEFAULT_SUBSET_CAP,
        }
    }
}

struct Piece {
    graph: Graph,
    size: usize,
}

impl Engine {
    pub fn with_subset_cap(subset_cap: usize) -> Self {
        Engine { subset_cap }
    }

    pub fn naive(&self, g: &Graph) -> Result<BigUint> {
        let pieces: Vec<Piece> = connected_subsets_capped(g, self.subset_cap)?
            .into_iter()
            .map(|s| {
                let (graph, _) = g.induced_subgraph(s);
                let size = graph.size();
                Piece { graph, size }
            })
            .collect();
        let mut total: u128 = 0;
        for u in &pieces {
            for v in &pieces {
                if u.graph.order() == v.graph.order() && u.size == v.size {
                    total += count_isomorphisms_u128(&u.graph, &v.graph);
                }
            }
        }
        Ok(BigUint::from(total))
    }

    pub fn class_table(&self, g: &Graph) -> Result<SubgraphClassTable> {
        classify_connected_subgraphs_capped(g, self.subset_cap)
    }

    pub fn classes(&self, g: &Graph) -> Result<BigUint> {
        Ok(classes_total(&self.class_table(g)?))
    }

    pub fn breakdown(&self, g: &Graph) -> Result<CopsiBreakdown> {
        Ok(breakdown_from_table(&self.class_table(g)?))
    }

    /// Isomorphisms between all ordered pairs of induced subgraphs,
    /// connected or not, including the single map between empty subgraphs.
    pub fn count_all_partial_symmetries(&self, g: &Graph) -> Result<BigUint> {
        let order = g.order();
        if order >= usize::BITS as usize || (1usize << order) > self.subset_cap {
            return Err(Error::FeasibilityCap {
                what: "vertex subsets",
                cap: self.subset_cap,
            });
        }
        let pieces: Vec<Piece> = (0..1u64 << order)
            .map(|bits| {
                let (graph, _) = g.induced_subgraph(VertexSet::from_bits(bits));
                let size = graph.size();
                Piece { graph, size }
            })
            .collect();
        let mut total: u128 = 0;
        for u in &pieces {
            for v in &pieces {
                if u.graph.order() == v.graph.order() && u.size == v.size {
                    total += count_isomorphisms_u128(&u.graph, &v.graph);
                }
            }
        }
        Ok(BigUint::from(total))
    }

    /// Visits every connected partial symmetry with explicit host labels.
    pub fn for_each_connected_partial_symmetry<F>(&self, g: &Graph, mut f: F) -> Result<()>
    where
        F: FnMut(&PartialSymmetry) -> ControlFlow<()>,
    {
        let subsets = connected_subsets_capped(g, self.subset_cap)?;
        let induced: Vec<Graph> = subsets.iter().map(|&s| g.induced_subgraph(s).0).collect();
        for (i, &u) in subsets.iter().enumerate() {
            for (j, &v) in subsets.iter().enumerate() {
                if u.len() != v.len() {
                    continue;
                }
                for iso in enumerate_isomorphisms(&induced[i], &induced[j]) {
                    if f(&PartialSymmetry::from_induced(u, v, &iso)).is_break() {
                        return Ok(());
                    }
                }
            }
        }
        Ok(())
    }
}

fn classes_total(table: &SubgraphClassTable) -> BigUint {
    table
        .classes
        .iter()
        .map(|c| BigUint::from(c.multiplicity).pow(2) * &c.automorphisms)
        .sum()
}

fn breakdown_from_table(table: &SubgraphClassTable) -> CopsiBreakdown {
    let mut b = CopsiBreakdown::default();
    for c in &table.classes {
        let contribution = BigUint::from(c.multiplicity).pow(2) * &c.automorphisms;
        match c.representative.size() {
            0 => b.singleton += &contribution,
            1 => b.edge += &contribution,
            _ => b.third += &contribution,
        }
    }
    b.total = &b.singleton + &b.edge + &b.third;
    debug_assert!(b.total.is_zero() == table.classes.is_empty());
    b
}

pub fn copsi_naive(g: &Graph) -> Result<BigUint> {
    Engine::default().naive(g)
}

pub fn copsi_classes(g: &Graph) -> Result<BigUint> {
    Engine::default().classes(g)
}

pub fn copsi_breakdown(g: &Graph) -> Result<CopsiBreakdown> {
    Engine::default().breakdown(g)
}

pub fn count_all_partial_symmetries(g: &Graph) -> Result<BigUint> {
    Engine::default().count_all_partial_symmetries(g)
}
