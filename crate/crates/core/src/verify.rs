//! Exhaustive checks of the structural facts the engines rely on, packaged
//! as pass/fail suites with witnesses.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::copsi::Engine;
use crate::enumerate::{graphs_of_order, MAX_ENUM_ORDER};
use crate::error::{Error, Result};
use crate::formula::{
    copsi_complete_formula, cycle_formula, path_formula, psin_complete_formula, star_formula,
    star_linear_summand,
};
use crate::graph::{make_complete, make_cycle, make_path, make_star, Graph};
use crate::graph6;
use crate::subiso::{edge_bijection, enumerate_isomorphisms};

/// Largest order bound accepted by [`verify_lemma_rigidity`].
pub const MAX_RIGIDITY_ORDER: usize = MAX_ENUM_ORDER;

/// Seed for the random connected hosts in the engine suite.
pub const ENGINE_SAMPLE_SEED: u64 = 0x0063_6f70_7369;

/// Advances `p` to the next permutation in lexicographic order; false once
/// `p` was the last one.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("p[i+1] > p[i]");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// Two distinct isomorphisms `graph → target` with the same edge image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityWitness {
    pub graph: Graph,
    pub target: Graph,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub edge_image: Vec<(usize, usize)>,
}

impl fmt::Display for RigidityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} -> {}: {:?} and {:?} both send edges to {:?}",
            graph6::encode(&self.graph),
            graph6::encode(&self.target),
            self.first,
            self.second,
            self.edge_image
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub order_bound: usize,
    /// Connected isomorphism classes with size other than one.
    pub graphs_checked: usize,
    pub targets_checked: usize,
    pub isomorphisms_checked: u64,
    /// A failure of rigidity on a graph that should be rigid.
    pub violation: Option<RigidityWitness>,
    /// The expected failure on the single edge.
    pub counterexample: Option<RigidityWitness>,
}

impl RigidityReport {
    /// No violation, and the single-edge counterexample was exhibited
    /// whenever the bound admits it.
    pub fn passed(&self) -> bool {
        self.violation.is_none() && (self.order_bound < 2 || self.counterexample.is_some())
    }
}

/// First pair of distinct isomorphisms `g → h` inducing the same edge map.
fn rigidity_collision(g: &Graph, h: &Graph, checked: &mut u64) -> Option<RigidityWitness> {
    let mut seen: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
    for iso in enumerate_isomorphisms(g, h) {
        *checked += 1;
        let image = edge_bijection(g, &iso);
        if let Some(prev) = seen.get(&image) {
            return Some(RigidityWitness {
                graph: g.clone(),
                target: h.clone(),
                first: prev.clone(),
                second: iso,
                edge_image: image,
            });
        }
        seen.insert(image, iso);
    }
    None
}

/// For every connected graph of order at most `order_bound` and every
/// relabelling `h` of it, checks that distinct isomorphisms `g → h` induce
/// distinct edge maps, except on the single edge where they cannot.
pub fn verify_lemma_rigidity(order_bound: usize) -> Result<RigidityReport> {
    if order_bound > MAX_RIGIDITY_ORDER {
        return Err(Error::OutOfBounds {
            what: "order bound",
            value: order_bound,
            min: 0,
            max: MAX_RIGIDITY_ORDER,
        });
    }
    let mut report = RigidityReport {
        order_bound,
        graphs_checked: 0,
        targets_checked: 0,
        isomorphisms_checked: 0,
        violation: None,
        counterexample: None,
    };
    for m in 1..=order_bound {
        for g in graphs_of_order(m)?
            .into_iter()
            .filter(|g| g.is_connected(None))
        {
            let single_edge = g.size() == 1;
            if !single_edge {
                report.graphs_checked += 1;
            }
            let mut perm: Vec<usize> = (0..m).collect();
            loop {
                let h = g.relabel(&perm);
                report.targets_checked += 1;
                let hit = rigidity_collision(&g, &h, &mut report.isomorphisms_checked);
                match (hit, single_edge) {
                    (Some(w), true) => {
                        report.counterexample.get_or_insert(w);
                    }
                    (Some(w), false) => {
                        report.violation = Some(w);
                        return Ok(report);
                    }
                    (None, _) => {}
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
    Ok(report)
}

/// A connected graph on `order` vertices: a random recursive tree plus each
/// remaining pair independently with probability `extra`, then shuffled.
pub fn random_connected_graph<R: Rng>(rng: &mut R, order: usize, extra: f64) -> Graph {
    let mut g = Graph::empty(order).expect("order within bounds");
    for v in 1..order {
        let parent = rng.gen_range(0..v);
        g.add_edge(parent, v).unwrap();
    }
    for j in 1..order {
        for i in 0..j {
            if !g.has_edge(i, j) && rng.gen_bool(extra) {
                g.add_edge(i, j).unwrap();
            }
        }
    }
    let mut perm: Vec<usize> = (0..order).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

/// `count` seeded random connected graphs with orders in `1..=max_order`.
pub fn random_connected_sample(seed: u64, count: usize, max_order: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let order = rng.gen_range(1..=max_order);
            let extra = rng.gen_range(0.0..0.6);
            random_connected_graph(&mut rng, order, extra)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Lemma,
    Engines,
    Formulas,
    All,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "lemma" => Ok(Suite::Lemma),
            "engines" => Ok(Suite::Engines),
            "formulas" => Ok(Suite::Formulas),
            "all" => Ok(Suite::All),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

impl CheckOutcome {
    fn new(name: &str, detail: String, witness: Option<String>) -> Self {
        CheckOutcome {
            name: name.to_string(),
            passed: witness.is_none(),
            detail,
            witness,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub checks: Vec<CheckOutcome>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_suite(suite: Suite, order_bound: usize) -> Result<SuiteReport> {
    run_suite_with(&Engine::default(), suite, order_bound)
}

pub fn run_suite_with(engine: &Engine, suite: Suite, order_bound: usize) -> Result<SuiteReport> {
    let mut report = SuiteReport::default();
    if matches!(suite, Suite::Lemma | Suite::All) {
        report.checks.push(lemma_check(order_bound)?);
    }
    if matches!(suite, Suite::Engines | Suite::All) {
        report.checks.extend(engine_checks(engine, order_bound)?);
    }
    if matches!(suite, Suite::Formulas | Suite::All) {
        report.checks.extend(formula_checks(engine)?);
    }
    Ok(report)
}

fn lemma_check(order_bound: usize) -> Result<CheckOutcome> {
    let r = verify_lemma_rigidity(order_bound)?;
    let witness = match (&r.violation, &r.counterexample) {
        (Some(w), _) => Some(format!("rigidity fails: {w}")),
        (None, None) if order_bound >= 2 => Some("single-edge counterexample not found".into()),
        _ => None,
    };
    let detail = format!(
        "{} graphs, {} targets, {} isomorphisms; single edge: {}",
        r.graphs_checked,
        r.targets_checked,
        r.isomorphisms_checked,
        r.counterexample
            .as_ref()
            .map_or_else(|| "not applicable".to_string(), |w| w.to_string())
    );
    Ok(CheckOutcome::new("edge-map rigidity", detail, witness))
}

fn engine_agreement(engine: &Engine, g: &Graph) -> Result<Option<String>> {
    let naive = engine.naive(g)?;
    let classes = engine.classes(g)?;
    let total = engine.breakdown(g)?.total;
    Ok((naive != classes || classes != total).then(|| {
        format!(
            "{}: naive {naive}, classes {classes}, breakdown {total}",
            graph6::encode(g)
        )
    }))
}

fn engine_checks(engine: &Engine, order_bound: usize) -> Result<Vec<CheckOutcome>> {
    let mut all = Vec::new();
    for m in 0..=order_bound.min(MAX_ENUM_ORDER) {
        all.extend(graphs_of_order(m)?);
    }

    let mut agreement = None;
    let mut connected = 0;
    for g in all.iter().filter(|g| g.is_connected(None)) {
        connected += 1;
        agreement = engine_agreement(engine, g)?;
        if agreement.is_some() {
            break;
        }
    }

    let sample = random_connected_sample(ENGINE_SAMPLE_SEED, 100, 8);
    let mut random = None;
    for g in &sample {
        random = engine_agreement(engine, g)?;
        if random.is_some() {
            break;
        }
    }

    let mut law = None;
    for g in &all {
        let b = engine.breakdown(g)?;
        let order = BigUint::from(g.order());
        let size = BigUint::from(g.size());
        if b.singleton != &order * &order || b.edge != &size * &size * 2u32 {
            law = Some(format!(
                "{}: singleton {}, edge {}",
                graph6::encode(g),
                b.singleton,
                b.edge
            ));
            break;
        }
    }

    Ok(vec![
        CheckOutcome::new(
            "engine agreement (exhaustive)",
            format!("{connected} connected graphs of order <= {order_bound}"),
            agreement,
        ),
        CheckOutcome::new(
            "engine agreement (random)",
            format!("100 random connected graphs of order <= 8, seed {ENGINE_SAMPLE_SEED:#x}"),
            random,
        ),
        CheckOutcome::new(
            "breakdown law",
            format!("{} graphs of order <= {order_bound}", all.len()),
            law,
        ),
    ])
}

fn first_mismatch<I>(cases: I) -> Result<Option<String>>
where
    I: IntoIterator<Item = Result<(String, BigUint, BigUint)>>,
{
    for case in cases {
        let (label, computed, expected) = case?;
        if computed != expected {
            return Ok(Some(format!(
                "{label}: computed {computed}, closed form {expected}"
            )));
        }
    }
    Ok(None)
}

fn formula_checks(engine: &Engine) -> Result<Vec<CheckOutcome>> {
    let stars = first_mismatch((1..=6u64).map(|n| {
        Ok((
            format!("star {n}"),
            engine.naive(&make_star(n as usize)?)?,
            star_formula(n),
        ))
    }))?;
    let paths = first_mismatch((1..=9u64).map(|m| {
        Ok((
            format!("path {m}"),
            engine.naive(&make_path(m as usize)?)?,
            path_formula(m)?,
        ))
    }))?;
    let cycles = first_mismatch((3..=8u64).map(|m| {
        Ok((
            format!("cycle {m}"),
            engine.naive(&make_cycle(m as usize)?)?,
            cycle_formula(m)?,
        ))
    }))?;
    let identities = first_mismatch((0..=50u64).flat_map(|n| {
        let star = star_formula(n);
        let squares = BigUint::from(n * n + (n + 1) * (n + 1));
        [
            Ok((
                format!("n^2+(n+1)^2+copsi(K_{n})"),
                star.clone(),
                squares + copsi_complete_formula(n),
            )),
            Ok((
                format!("2n(n+1)+psin(K_{n})"),
                star,
                star_linear_summand(n) + psin_complete_formula(n),
            )),
        ]
    }))?;
    let complete = first_mismatch((0..=4usize).map(|n| {
        let k = make_complete(n)?;
        Ok((
            format!("K_{n}"),
            engine.count_all_partial_symmetries(&k)?,
            engine.naive(&k)? + 1u32,
        ))
    }))?;
    Ok(vec![
        CheckOutcome::new("star closed form", "n = 1..6".into(), stars),
        CheckOutcome::new("path closed form", "m = 1..9".into(), paths),
        CheckOutcome::new("cycle closed form", "m = 3..8".into(), cycles),
        CheckOutcome::new("star identities", "n = 0..50".into(), identities),
        CheckOutcome::new(
            "complete graphs: all = connected + empty",
            "n = 0..4".into(),
            complete,
        ),
    ])
}
