//! Exhaustive searches for the graphs with the largest index, either among
//! connected graphs with a fixed number of edges or among all graphs with a
//! fixed number of vertices.

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::canon::{canonical_code, CanonicalCode};
use crate::copsi::Engine;
use crate::enumerate::{connected_graphs_of_size, graphs_of_order};
use crate::error::{Error, Result};
use crate::formula::{copsi_complete_formula, star_formula};
use crate::graph::{make_complete, make_star, Graph};
use crate::graph6;

/// Largest order accepted by [`extremal_by_order`].
pub const MAX_EXTREMAL_ORDER: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameter {
    /// Connected graphs with this many edges.
    Size(usize),
    /// All graphs with this many vertices.
    Order(usize),
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Size(n) => write!(f, "size {n}"),
            Parameter::Order(m) => write!(f, "order {m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub graph: Graph,
    pub code: CanonicalCode,
    pub graph6: String,
    pub copsi: BigUint,
    /// Whether the naive engine was also run on this candidate.
    pub cross_checked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalReport {
    pub parameter: Parameter,
    /// Every candidate, sorted by code.
    pub candidates: Vec<Candidate>,
    pub maximum: BigUint,
    /// Codes of the candidates attaining `maximum`, sorted.
    pub maximizers: Vec<CanonicalCode>,
    /// The graph expected to be the unique maximiser, and its index from
    /// the closed form.
    pub expected_code: CanonicalCode,
    pub expected_value: BigUint,
}

impl ExtremalReport {
    pub fn unique_maximizer(&self) -> Option<&Candidate> {
        match self.maximizers.as_slice() {
            [code] => self.candidates.iter().find(|c| &c.code == code),
            _ => None,
        }
    }

    /// True iff the expected graph is the only maximiser and its computed
    /// index equals the closed form.
    pub fn confirms_expected(&self) -> bool {
        self.maximizers == [self.expected_code.clone()] && self.maximum == self.expected_value
    }

    /// Largest index among candidates other than the maximisers.
    pub fn runner_up(&self) -> Option<&BigUint> {
        self.candidates
            .iter()
            .filter(|c| c.copsi < self.maximum)
            .map(|c| &c.copsi)
            .max()
    }

    /// Candidates by descending index, ties by code.
    pub fn ranked(&self) -> Vec<&Candidate> {
        let mut v: Vec<&Candidate> = self.candidates.iter().collect();
        v.sort_by(|a, b| b.copsi.cmp(&a.copsi).then_with(|| a.code.cmp(&b.code)));
        v
    }
}

/// Evaluates every candidate with the class engine and re-evaluates every
/// tenth one (by code order) with the naive engine.
fn evaluate(engine: &Engine, graphs: Vec<Graph>) -> Result<Vec<Candidate>> {
    let mut coded: Vec<(CanonicalCode, Graph)> = graphs
        .into_iter()
        .map(|g| Ok((canonical_code(&g)?, g)))
        .collect::<Result<_>>()?;
    coded.sort_by(|a, b| a.0.cmp(&b.0));
    coded
        .into_par_iter()
        .enumerate()
        .map(|(i, (code, graph))| {
            let copsi = engine.classes(&graph)?;
            let cross_checked = i % 10 == 0;
            if cross_checked {
                let naive = engine.naive(&graph)?;
                if naive != copsi {
                    return Err(Error::EngineDisagreement {
                        graph6: graph6::encode(&graph),
                        naive: naive.to_string(),
                        classes: copsi.to_string(),
                    });
                }
            }
            Ok(Candidate {
                graph6: graph6::encode(&graph),
                graph,
                code,
                copsi,
                cross_checked,
            })
        })
        .collect()
}

fn report(
    parameter: Parameter,
    candidates: Vec<Candidate>,
    expected: &Graph,
    expected_value: BigUint,
) -> Result<ExtremalReport> {
    let maximum = candidates
        .iter()
        .map(|c| c.copsi.clone())
        .max()
        .unwrap_or_default();
    let maximizers = candidates
        .iter()
        .filter(|c| c.copsi == maximum)
        .map(|c| c.code.clone())
        .collect();
    Ok(ExtremalReport {
        parameter,
        candidates,
        maximum,
        maximizers,
        expected_code: canonical_code(expected)?,
        expected_value,
    })
}

/// Index of every connected graph with `n` edges; the star `K_{1,n}` is
/// the expected unique maximiser.
pub fn extremal_by_size(n: usize) -> Result<ExtremalReport> {
    extremal_by_size_with(&Engine::default(), n)
}

pub fn extremal_by_size_with(engine: &Engine, n: usize) -> Result<ExtremalReport> {
    let candidates = evaluate(engine, connected_graphs_of_size(n)?)?;
    report(
        Parameter::Size(n),
        candidates,
        &make_star(n)?,
        star_formula(n as u64),
    )
}

/// Index of every graph of order `m`, connected or not; `K_m` is the
/// expected unique maximiser.
pub fn extremal_by_order(m: usize) -> Result<ExtremalReport> {
    extremal_by_order_with(&Engine::default(), m)
}

pub fn extremal_by_order_with(engine: &Engine, m: usize) -> Result<ExtremalReport> {
    if m > MAX_EXTREMAL_ORDER {
        return Err(Error::OutOfBounds {
            what: "order",
            value: m,
            min: 0,
            max: MAX_EXTREMAL_ORDER,
        });
    }
    let candidates = evaluate(engine, graphs_of_order(m)?)?;
    report(
        Parameter::Order(m),
        candidates,
        &make_complete(m)?,
        copsi_complete_formula(m as u64),
    )
}
