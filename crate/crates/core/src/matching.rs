//! Maximum matchings.
//!
//! [`maximum_matching`] is Edmonds' blossom-contraction algorithm (O(n^3)).
//! [`tutte_berge`] evaluates the Tutte–Berge minimum over every vertex subset
//! and serves as an independent, exponential-time oracle for it.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Default vertex limit for the exhaustive Tutte–Berge search.
pub const DEFAULT_TUTTE_BERGE_LIMIT: usize = 22;

/// Hard ceiling imposed by the 64-bit vertex masks.
const MASK_CAPACITY: usize = 63;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("graph has {n} vertices; exhaustive Tutte-Berge search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// `mate[v]` for every vertex of a graph on `n` vertices.
    pub fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TutteBergeCertificate {
    /// `min_X (n + |X| - oc(G - X)) / 2`
    pub value: usize,
    /// Lexicographically least minimiser, ascending.
    pub witness: Vec<usize>,
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.vertex_count();
        Self {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.g.vertex_count() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(&v) = self.g.neighbors(u).iter().find(|&&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.g.vertex_count()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path, if any.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.vertex_count();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // odd cycle: contract it into its base
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Matching {
        self.greedy();
        for root in 0..self.g.vertex_count() {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_augmenting_path(root) {
                self.augment(end);
            }
        }
        let edges = self
            .mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
            .collect();
        Matching { edges }
    }
}

/// A maximum-cardinality matching. The result depends only on the graph's
/// (sorted) adjacency, so identical inputs give identical matchings.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

/// `α'(G)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size()
}

/// True iff every pair is an edge of `g` and no vertex is covered twice.
pub fn verify_matching(g: &Graph, m: &Matching) -> bool {
    let mut covered = vec![false; g.vertex_count()];
    for &(u, v) in &m.edges {
        if !g.has_edge(u, v) || covered[u] || covered[v] {
            return false;
        }
        covered[u] = true;
        covered[v] = true;
    }
    true
}

/// `(n + |X| - oc(G - X)) / 2` for one vertex set. By Tutte–Berge this is an
/// upper bound on `α'(G)` for every `X`.
pub fn tutte_berge_value(g: &Graph, deleted: &[usize]) -> Result<usize, GraphError> {
    let mut distinct = deleted.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let odd = g.odd_components_after_deletion(&distinct)?;
    Ok((g.vertex_count() + distinct.len() - odd) / 2)
}

fn odd_components_masked(adjacency: &[u64], alive: u64) -> u32 {
    let mut remaining = alive;
    let mut odd = 0;
    while remaining != 0 {
        let start = remaining & remaining.wrapping_neg();
        let mut component = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adjacency[v] & remaining & !component;
            component |= fresh;
            frontier |= fresh;
        }
        remaining &= !component;
        odd += component.count_ones() & 1;
    }
    odd
}

/// Lexicographic order on the ascending id lists encoded by two masks.
fn lex_less(mut a: u64, mut b: u64) -> bool {
    loop {
        if a == b {
            return false;
        }
        if a == 0 {
            return true;
        }
        if b == 0 {
            return false;
        }
        let (la, lb) = (a.trailing_zeros(), b.trailing_zeros());
        if la != lb {
            return la < lb;
        }
        a &= a - 1;
        b &= b - 1;
    }
}

fn better(a: (usize, u64), b: (usize, u64)) -> (usize, u64) {
    if a.0 < b.0 || (a.0 == b.0 && lex_less(a.1, b.1)) {
        a
    } else {
        b
    }
}

/// Exhaustive Tutte–Berge minimisation over all `2^n` subsets.
///
/// Refuses graphs with more than `max_n` vertices. Subsets are scanned in
/// parallel blocks; the reduction keeps the minimum value and, among
/// minimisers, the lexicographically least witness, so the result does not
/// depend on scheduling.
pub fn tutte_berge(g: &Graph, max_n: usize) -> Result<TutteBergeCertificate, MatchingError> {
    let n = g.vertex_count();
    let limit = max_n.min(MASK_CAPACITY);
    if n > limit {
        return Err(MatchingError::TooLarge { n, limit });
    }
    let adjacency: Vec<u64> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | (1 << w)))
        .collect();
    let full: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let evaluate = |x: u64| -> (usize, u64) {
        let odd = odd_components_masked(&adjacency, full & !x) as usize;
        ((n + x.count_ones() as usize - odd) / 2, x)
    };

    let block_bits = n.min(10);
    let low_bits = n - block_bits;
    let best = (0u64..1 << block_bits)
        .into_par_iter()
        .map(|high| {
            let prefix = high << low_bits;
            (0u64..1 << low_bits)
                .map(|low| evaluate(prefix | low))
                .reduce(better)
                .expect("every block is non-empty")
        })
        .reduce(|| (usize::MAX, u64::MAX), better);

    let witness = (0..n).filter(|&v| best.1 >> v & 1 == 1).collect();
    Ok(TutteBergeCertificate { value: best.0, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&Graph::path(4)), 2);
        assert_eq!(matching_number(&Graph::complete(5)), 2);
        assert_eq!(matching_number(&Graph::petersen()), 5);
        assert_eq!(matching_number(&Graph::empty(0)), 0);
        assert_eq!(matching_number(&Graph::empty(3)), 0);
    }

    #[test]
    fn petersen_value_agrees_with_oracle() {
        let cert = tutte_berge(&Graph::petersen(), DEFAULT_TUTTE_BERGE_LIMIT).unwrap();
        assert_eq!(cert.value, 5);
        assert!(cert.witness.is_empty());
    }

    #[test]
    fn tutte_berge_examples() {
        let star = tutte_berge(&Graph::star(3), 22).unwrap();
        assert_eq!(star, TutteBergeCertificate { value: 1, witness: vec![0] });
        let k5 = tutte_berge(&Graph::complete(5), 22).unwrap();
        assert_eq!(k5, TutteBergeCertificate { value: 2, witness: vec![] });
        let empty = tutte_berge(&Graph::empty(0), 22).unwrap();
        assert_eq!(empty.value, 0);
    }

    #[test]
    fn tutte_berge_refuses_large_graphs() {
        let err = tutte_berge(&Graph::path(23), 22).unwrap_err();
        assert_eq!(err, MatchingError::TooLarge { n: 23, limit: 22 });
        assert!(err.to_string().contains("limited to 22"));
    }

    #[test]
    fn verify_matching_examples() {
        let p4 = Graph::path(4);
        assert!(verify_matching(&p4, &Matching { edges: vec![(0, 1), (2, 3)] }));
        assert!(!verify_matching(&p4, &Matching { edges: vec![(0, 1), (1, 2)] }));
        assert!(!verify_matching(&p4, &Matching { edges: vec![(0, 2)] }));
    }

    #[test]
    fn lexicographic_mask_order() {
        // {} < {0} < {0,1} < {1}
        assert!(lex_less(0b00, 0b01));
        assert!(lex_less(0b01, 0b11));
        assert!(lex_less(0b11, 0b10));
        assert!(!lex_less(0b10, 0b10));
        // {0,2} > {0,1,5}
        assert!(lex_less(0b100011, 0b101));
    }

    #[test]
    fn deterministic_output() {
        let g = Graph::petersen();
        assert_eq!(maximum_matching(&g), maximum_matching(&g));
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let len = pairs.len();
            (proptest::collection::vec(any::<bool>(), len), 0u8..4).prop_map(move |(keep, sparsity)| {
                // thin the graph out so sparse instances are common too
                let step = sparsity as usize + 1;
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| keep[i] && i % step == 0)
                    .map(|(_, &e)| e);
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn blossom_equals_oracle(g in arb_graph(10)) {
            let m = maximum_matching(&g);
            prop_assert!(verify_matching(&g, &m));
            let cert = tutte_berge(&g, 22).unwrap();
            prop_assert_eq!(m.size(), cert.value);
            prop_assert_eq!(tutte_berge_value(&g, &cert.witness).unwrap(), cert.value);
        }

        #[test]
        fn any_subset_bounds_matching(g in arb_graph(16), mask in any::<u64>()) {
            let x: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask >> v & 1 == 1).collect();
            prop_assert!(matching_number(&g) <= tutte_berge_value(&g, &x).unwrap());
        }

        #[test]
        fn odd_components_of_witness_are_near_perfect(g in arb_graph(10)) {
            let cert = tutte_berge(&g, 22).unwrap();
            let mut removed = vec![false; g.vertex_count()];
            for &v in &cert.witness { removed[v] = true; }
            let partition = {
                let keep: Vec<usize> = (0..g.vertex_count()).filter(|&v| !removed[v]).collect();
                let index: std::collections::HashMap<usize, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                Graph::new(keep.len(), g.edges().filter_map(|(u, v)| Some((*index.get(&u)?, *index.get(&v)?)))).unwrap()
            };
            let comps = partition.components();
            for c in 0..comps.component_count() {
                let size = comps.component_sizes[c];
                if size % 2 == 1 {
                    let members = comps.members(c);
                    let index: std::collections::HashMap<usize, usize> = members.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                    let sub = Graph::new(members.len(), partition.edges().filter_map(|(u, v)| Some((*index.get(&u)?, *index.get(&v)?)))).unwrap();
                    prop_assert_eq!(matching_number(&sub), (size - 1) / 2);
                }
            }
        }
    }
}
