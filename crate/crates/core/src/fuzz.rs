//! Seeded random connected graphs with bounded maximum degree, and batch
//! auditing of every applicable bound on them.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{audit_graph, BoundsError};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FuzzError {
    #[error("invalid fuzz configuration: {0}")]
    InvalidConfig(String),
    #[error("no connected graph on {n} vertices has maximum degree at most {k}{extra}")]
    Infeasible { n: usize, k: usize, extra: &'static str },
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzConfig {
    pub k: usize,
    pub trials: usize,
    pub max_n: usize,
    pub seed: u64,
    pub forbid_regular_components: bool,
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), FuzzError> {
        if self.k < 3 {
            return Err(FuzzError::InvalidConfig(format!("k must be at least 3, got {}", self.k)));
        }
        if self.trials == 0 {
            return Err(FuzzError::InvalidConfig("trials must be at least 1".into()));
        }
        if self.max_n < 2 {
            return Err(FuzzError::InvalidConfig(format!("max_n must be at least 2, got {}", self.max_n)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub seed: u64,
    pub trial: usize,
    /// seed passed to [`random_connected_bounded`] to rebuild the graph
    pub graph_seed: u64,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub bound_name: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzOutcome {
    pub config: FuzzConfig,
    pub trials_run: usize,
    pub violations: Vec<Violation>,
    pub tight_hits: BTreeMap<String, usize>,
}

impl FuzzOutcome {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A connected graph on `n` vertices with `Δ <= k`, fully determined by
/// `(seed, n, k, forbid_regular)`.
///
/// A random spanning tree (each new vertex joined to a random earlier vertex
/// of spare degree) is extended by random extra edges. With `forbid_regular`,
/// a k-regular sample loses its lexicographically first non-bridge edge.
pub fn random_connected_bounded(seed: u64, n: usize, k: usize, forbid_regular: bool) -> Result<Graph, FuzzError> {
    if n == 0 {
        return Err(FuzzError::InvalidConfig("n must be at least 1".into()));
    }
    if (k == 0 && n >= 2) || (k == 1 && n >= 3) {
        return Err(FuzzError::Infeasible { n, k, extra: "" });
    }
    if forbid_regular && k == 1 && n == 2 {
        return Err(FuzzError::Infeasible { n, k, extra: " that is not k-regular" });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut sample = Sample { degree: vec![0; n], adjacent: vec![vec![false; n]; n], edges: Vec::new() };
    for i in 1..n {
        let open: Vec<usize> = order[..i].iter().copied().filter(|&v| sample.degree[v] < k).collect();
        let parent = open[rng.random_range(0..open.len())];
        sample.add(order[i], parent);
    }

    let capacity = (n * k / 2).saturating_sub(n - 1);
    let target = if capacity == 0 { 0 } else { rng.random_range(0..=capacity) };
    let mut added = 0;
    for _ in 0..4 * target + n {
        if added == target {
            break;
        }
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || sample.degree[u] >= k || sample.degree[v] >= k || sample.adjacent[u][v] {
            continue;
        }
        sample.add(u, v);
        added += 1;
    }

    let graph = Graph::new(n, sample.edges).expect("generator emits simple graphs");
    if forbid_regular && graph.is_k_regular(k) {
        let bridges = graph.bridges();
        let edge = graph
            .edges()
            .find(|e| bridges.binary_search(e).is_err())
            .expect("a connected k-regular graph with k >= 2 has a cycle");
        return Ok(graph.without_edge(edge.0, edge.1));
    }
    Ok(graph)
}

struct Sample {
    degree: Vec<usize>,
    adjacent: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
}

impl Sample {
    fn add(&mut self, u: usize, v: usize) {
        self.adjacent[u][v] = true;
        self.adjacent[v][u] = true;
        self.degree[u] += 1;
        self.degree[v] += 1;
        self.edges.push((u.min(v), u.max(v)));
    }
}

/// Per-trial generator keyed by `(seed, trial)`, independent of execution order.
fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial as u64);
    rng
}

struct TrialResult {
    violations: Vec<Violation>,
    tight: Vec<&'static str>,
}

fn run_trial(config: &FuzzConfig, trial: usize) -> Result<TrialResult, FuzzError> {
    let mut rng = trial_rng(config.seed, trial);
    let n = rng.random_range(2..=config.max_n);
    let graph_seed = rng.next_u64();
    let graph = random_connected_bounded(graph_seed, n, config.k, config.forbid_regular_components)?;
    let violation = |bound_name: &str, detail: String| Violation {
        seed: config.seed,
        trial,
        graph_seed,
        n,
        edges: graph.edges().collect(),
        bound_name: bound_name.to_string(),
        detail,
    };

    let mut violations = Vec::new();
    if !graph.is_connected() || graph.max_degree() > config.k {
        violations.push(violation(
            "structure",
            format!("connected = {}, max degree = {}", graph.is_connected(), graph.max_degree()),
        ));
        return Ok(TrialResult { violations, tight: Vec::new() });
    }
    let report = audit_graph(&graph, config.k)?;
    for entry in report.violations() {
        let value = entry.bound_value.as_ref().map(|v| v.to_string()).unwrap_or_default();
        violations.push(violation(entry.bound_name, format!("alpha = {} < {value}", report.alpha)));
    }
    let tight = report.entries.iter().filter(|e| e.applicable && e.tight).map(|e| e.bound_name).collect();
    Ok(TrialResult { violations, tight })
}

pub fn run_fuzz(config: &FuzzConfig) -> Result<FuzzOutcome, FuzzError> {
    config.validate()?;
    let results: Vec<TrialResult> =
        (0..config.trials).into_par_iter().map(|t| run_trial(config, t)).collect::<Result<_, _>>()?;
    let mut violations = Vec::new();
    let mut tight_hits = BTreeMap::new();
    for result in results {
        violations.extend(result.violations);
        for name in result.tight {
            *tight_hits.entry(name.to_string()).or_insert(0) += 1;
        }
    }
    Ok(FuzzOutcome { config: config.clone(), trials_run: config.trials, violations, tight_hits })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn config(k: usize, trials: usize, max_n: usize, seed: u64) -> FuzzConfig {
        FuzzConfig { k, trials, max_n, seed, forbid_regular_components: false }
    }

    #[test]
    fn single_vertex() {
        let g = random_connected_bounded(1, 1, 3, false).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn infeasible_requests() {
        assert!(matches!(random_connected_bounded(0, 2, 0, false), Err(FuzzError::Infeasible { .. })));
        assert!(matches!(random_connected_bounded(0, 3, 1, false), Err(FuzzError::Infeasible { .. })));
        assert!(random_connected_bounded(0, 2, 1, false).is_ok());
        assert!(random_connected_bounded(0, 0, 3, false).is_err());
    }

    #[test]
    fn deterministic() {
        for seed in 0..20 {
            assert_eq!(
                random_connected_bounded(seed, 12, 4, false).unwrap(),
                random_connected_bounded(seed, 12, 4, false).unwrap()
            );
        }
    }

    #[test]
    fn forbid_regular_removes_regularity() {
        let mut saw_regular = false;
        for seed in 0..500 {
            let free = random_connected_bounded(seed, 6, 3, false).unwrap();
            saw_regular |= free.is_k_regular(3);
            let g = random_connected_bounded(seed, 6, 3, true).unwrap();
            assert!(!g.is_k_regular(3) && g.is_connected());
        }
        assert!(saw_regular, "generator never produced a 3-regular graph on 6 vertices");
    }

    #[test]
    fn documented_seed_suites_are_clean() {
        assert!(run_fuzz(&config(3, 1000, 12, 42)).unwrap().is_clean());
        assert!(run_fuzz(&config(4, 1000, 12, 7)).unwrap().is_clean());
    }

    #[test]
    fn one_trial_on_two_vertices() {
        let outcome = run_fuzz(&config(3, 1, 2, 0)).unwrap();
        assert_eq!(outcome.trials_run, 1);
        assert!(outcome.is_clean());
    }

    #[test]
    fn reproducible_serialization() {
        let c = config(5, 200, 14, 99);
        let a = serde_json::to_string(&run_fuzz(&c).unwrap()).unwrap();
        let b = serde_json::to_string(&run_fuzz(&c).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(run_fuzz(&config(2, 10, 10, 0)).is_err());
        assert!(run_fuzz(&config(3, 0, 10, 0)).is_err());
        assert!(run_fuzz(&config(3, 10, 1, 0)).is_err());
    }

    proptest! {
        #[test]
        fn generated_graphs_meet_postconditions(seed in any::<u64>(), n in 1usize..=20, k in 2usize..=7, forbid in any::<bool>()) {
            let g = random_connected_bounded(seed, n, k, forbid).unwrap();
            prop_assert_eq!(g.vertex_count(), n);
            prop_assert!(g.is_connected());
            prop_assert!(g.max_degree() <= k);
            if forbid {
                prop_assert!(!g.is_k_regular(k));
            }
        }
    }
}
