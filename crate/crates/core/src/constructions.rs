//! Generators for the extremal families that attain the lower bounds with
//! equality.
//!
//! Each generator returns the graph together with closed-form predictions of
//! its order, size and matching number. Predictions are computed from the
//! family parameters alone, never from the generated graph, so comparing the
//! two is a real check.
//!
//! Gadgets:
//! - `K_{k+1} - e`, the complete graph on `k+1` vertices minus one edge; its
//!   two endpoints of the missing edge (degree `k-1`) are link vertices.
//! - `H_{k+2}` for odd `k`, the graph on `k+2` vertices whose complement is
//!   `P_3` plus `(k-1)/2` disjoint edges; the centre of the `P_3` is the only
//!   vertex of degree `k-1` and is its link vertex.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::graph::{Graph, GraphError};
use crate::rational::{from_usize, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("k = {k} not allowed: {requirement}")]
    InvalidK { k: usize, requirement: &'static str },
    #[error("r must be at least 1")]
    InvalidR,
    #[error("expected {expected} block choices (r(k-1)+1), got {got}")]
    BlockCount { expected: usize, got: usize },
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Block {
    Single,
    Gadget,
}

impl Block {
    /// `"gadgets"`, `"singles"`, or a string of `0` (single) / `1` (gadget).
    pub fn parse_choices(text: &str, len: usize) -> Result<Vec<Block>, String> {
        match text {
            "gadgets" => Ok(vec![Block::Gadget; len]),
            "singles" => Ok(vec![Block::Single; len]),
            bits => bits
                .chars()
                .map(|ch| match ch {
                    '0' => Ok(Block::Single),
                    '1' => Ok(Block::Gadget),
                    other => Err(format!("block string may only contain 0 and 1, found {other:?}")),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TreeMode {
    /// every V2 vertex has degree k, so no gadgets are added
    Tree,
    /// every V1 vertex has degree k, so the result is k-regular
    Regular,
}

/// A tree with a fixed bipartition `(V1, V2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteTree {
    graph: Graph,
    in_v2: Vec<bool>,
}

impl BipartiteTree {
    /// Checks that `graph` is a tree and that `v2` is exactly one side of its
    /// (unique) bipartition.
    pub fn new(graph: Graph, v2: &[usize]) -> Result<Self, ConstructionError> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(ConstructionError::InvalidTree("tree has no vertices".into()));
        }
        if graph.edge_count() != n - 1 || !graph.is_connected() {
            return Err(ConstructionError::InvalidTree(format!(
                "graph with {n} vertices and {} edges is not a tree",
                graph.edge_count()
            )));
        }
        let mut in_v2 = vec![false; n];
        for &v in v2 {
            if v >= n {
                return Err(GraphError::InvalidVertex(v, n).into());
            }
            in_v2[v] = true;
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| in_v2[u] == in_v2[v]) {
            return Err(ConstructionError::InvalidTree(format!(
                "edge ({u}, {v}) joins two vertices on the same side"
            )));
        }
        Ok(Self { graph, in_v2 })
    }

    /// Uses the side containing vertex 0 as `V2`.
    pub fn rooted_at_zero(graph: Graph) -> Result<Self, ConstructionError> {
        let n = graph.vertex_count();
        if n == 0 {
            return Err(ConstructionError::InvalidTree("tree has no vertices".into()));
        }
        let mut side = vec![usize::MAX; n];
        side[0] = 0;
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for &w in graph.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                }
            }
        }
        let v2: Vec<usize> = (0..n).filter(|&v| side[v] == 0).collect();
        Self::new(graph, &v2)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn v1(&self) -> Vec<usize> {
        (0..self.graph.vertex_count()).filter(|&v| !self.in_v2[v]).collect()
    }

    pub fn v2(&self) -> Vec<usize> {
        (0..self.graph.vertex_count()).filter(|&v| self.in_v2[v]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TreeSource {
    Explicit(BipartiteTree),
    Canonical { r: usize, mode: TreeMode },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    CompleteMinusEdge { k: usize },
    GadgetHk2 { k: usize },
    Gkr { k: usize, r: usize, blocks: Vec<Block> },
    Hkr { k: usize, tree: TreeSource },
    Fkr { k: usize, r: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedGraph {
    pub graph: Graph,
    pub predicted_n: usize,
    pub predicted_m: usize,
    pub predicted_alpha: usize,
    pub link_vertices: Vec<usize>,
}

fn require_even_k(k: usize) -> Result<(), ConstructionError> {
    if k < 4 || k % 2 == 1 {
        return Err(ConstructionError::InvalidK { k, requirement: "k even and >= 4" });
    }
    Ok(())
}

fn require_odd_k(k: usize) -> Result<(), ConstructionError> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(ConstructionError::InvalidK { k, requirement: "k odd and >= 3" });
    }
    Ok(())
}

/// Number of blocks `r(k-1)+1` in a `G_{k,r}` instance.
pub fn gkr_block_count(k: usize, r: usize) -> usize {
    r * (k - 1) + 1
}

/// Edge accumulator used by the generators.
#[derive(Default)]
struct Builder {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    fn edge(&mut self, u: usize, v: usize) {
        self.edges.push((u.min(v), u.max(v)));
    }

    /// Adds `K_{k+1} - e`; returns its two link vertices.
    fn complete_minus_edge(&mut self, k: usize) -> [usize; 2] {
        let first = self.n;
        self.n += k + 1;
        for u in 0..=k {
            for v in u + 1..=k {
                if (u, v) != (0, 1) {
                    self.edge(first + u, first + v);
                }
            }
        }
        [first, first + 1]
    }

    /// Adds `H_{k+2}` (k odd); returns its link vertex.
    fn gadget_hk2(&mut self, k: usize) -> usize {
        let first = self.n;
        self.n += k + 2;
        let removed = |u: usize, v: usize| -> bool {
            // complement: path 1-0-2 plus the pairs (3,4), (5,6), ..., (k, k+1)
            matches!((u, v), (0, 1) | (0, 2)) || (u >= 3 && u % 2 == 1 && v == u + 1)
        };
        for u in 0..k + 2 {
            for v in u + 1..k + 2 {
                if !removed(u, v) {
                    self.edge(first + u, first + v);
                }
            }
        }
        first
    }

    fn finish(self) -> Graph {
        Graph::new(self.n, self.edges).expect("generators emit simple graphs")
    }
}

/// `K_{k+1} - e`, `k >= 2`.
pub fn complete_minus_edge(k: usize) -> Result<GeneratedGraph, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::InvalidK { k, requirement: "k >= 2" });
    }
    let mut b = Builder::default();
    let links = b.complete_minus_edge(k);
    Ok(GeneratedGraph {
        graph: b.finish(),
        predicted_n: k + 1,
        predicted_m: k * (k + 1) / 2 - 1,
        predicted_alpha: k.div_ceil(2),
        link_vertices: links.to_vec(),
    })
}

/// `H_{k+2}` for odd `k >= 3`.
pub fn gadget_hk2(k: usize) -> Result<GeneratedGraph, ConstructionError> {
    require_odd_k(k)?;
    let mut b = Builder::default();
    let link = b.gadget_hk2(k);
    Ok(GeneratedGraph {
        graph: b.finish(),
        predicted_n: k + 2,
        predicted_m: (k * k + 2 * k - 1) / 2,
        predicted_alpha: k.div_ceil(2),
        link_vertices: vec![link],
    })
}

/// `G_{k,r}`: `r(k-1)+1` blocks, each a single vertex or `K_{k+1} - e`, plus
/// hubs `y_1..y_r`. Hub `y_i` is joined to blocks `(i-1)(k-1) .. (i-1)(k-1)+k-1`
/// (0-based), so consecutive hubs share one block. A gadget block is entered
/// through its first unused link vertex.
pub fn family_gkr(k: usize, r: usize, blocks: &[Block]) -> Result<GeneratedGraph, ConstructionError> {
    require_even_k(k)?;
    if r == 0 {
        return Err(ConstructionError::InvalidR);
    }
    let count = gkr_block_count(k, r);
    if blocks.len() != count {
        return Err(ConstructionError::BlockCount { expected: count, got: blocks.len() });
    }

    let mut b = Builder::default();
    let mut ports: Vec<Vec<usize>> = Vec::with_capacity(count);
    let mut link_vertices = Vec::new();
    for block in blocks {
        match block {
            Block::Single => {
                let v = b.vertex();
                ports.push(vec![v]);
            }
            Block::Gadget => {
                let links = b.complete_minus_edge(k);
                link_vertices.extend(links);
                ports.push(links.to_vec());
            }
        }
    }
    let mut used = vec![0usize; count];
    for i in 0..r {
        let hub = b.vertex();
        for j in i * (k - 1)..i * (k - 1) + k {
            let target = match blocks[j] {
                Block::Single => ports[j][0],
                Block::Gadget => {
                    let port = ports[j][used[j]];
                    used[j] += 1;
                    port
                }
            };
            b.edge(hub, target);
        }
    }
    let graph = b.finish();
    assert!(graph.max_degree() <= k, "G_{{k,r}} wiring exceeded degree k");

    let gadgets = blocks.iter().filter(|&&x| x == Block::Gadget).count();
    let singles = count - gadgets;
    Ok(GeneratedGraph {
        graph,
        predicted_n: r + singles + gadgets * (k + 1),
        predicted_m: r * k + gadgets * (k * (k + 1) / 2 - 1),
        predicted_alpha: r + gadgets * k / 2,
        link_vertices,
    })
}

/// `G'_{k,r}`: every block is a gadget.
pub fn family_gkr_prime(k: usize, r: usize) -> Result<GeneratedGraph, ConstructionError> {
    require_even_k(k)?;
    family_gkr(k, r, &vec![Block::Gadget; gkr_block_count(k, r)])
}

/// A deterministic caterpillar `T_{k,r}` with `|V2| = r`.
///
/// `Tree` mode: the `r` vertices of `V2` are the spine, each with `k`
/// neighbours in `V1`, consecutive spine vertices sharing one. `Regular`
/// mode: `V1` is the spine with `(r-1)/(k-1)` vertices of degree `k`; this
/// needs `(k-1) | (r-1)`.
pub fn canonical_tree(k: usize, r: usize, mode: TreeMode) -> Result<BipartiteTree, ConstructionError> {
    require_odd_k(k)?;
    if r == 0 {
        return Err(ConstructionError::InvalidR);
    }
    let (spine, leaves) = match mode {
        TreeMode::Tree => (r, r * (k - 1) + 1),
        TreeMode::Regular => {
            if !(r - 1).is_multiple_of(k - 1) {
                return Err(ConstructionError::Infeasible(format!(
                    "every V1 vertex of degree {k} forces |E| = {k}|V1| = |V1| + r - 1, \
                     so r - 1 must be a multiple of k - 1 = {}; r = {r} is not",
                    k - 1
                )));
            }
            ((r - 1) / (k - 1), r)
        }
    };
    // spine vertices 0..spine, leaves after
    let mut edges = Vec::new();
    for s in 0..spine {
        for t in 0..k {
            edges.push((s, spine + s * (k - 1) + t));
        }
    }
    let graph = Graph::new(spine + leaves, edges)?;
    let v2: Vec<usize> = match mode {
        TreeMode::Tree => (0..spine).collect(),
        TreeMode::Regular => (spine..spine + leaves).collect(),
    };
    BipartiteTree::new(graph, &v2)
}

/// `H_{k,r}`: the tree, plus `k - deg(x)` copies of `H_{k+2}` hung from every
/// `x ∈ V2` by their link vertices.
pub fn family_hkr(k: usize, tree: &BipartiteTree) -> Result<GeneratedGraph, ConstructionError> {
    require_odd_k(k)?;
    let t = tree.graph();
    if t.max_degree() > k {
        return Err(ConstructionError::InvalidTree(format!(
            "tree has maximum degree {} > k = {k}",
            t.max_degree()
        )));
    }
    let v1 = tree.v1().len();
    let v2 = tree.v2();
    if v2.is_empty() {
        return Err(ConstructionError::InvalidR);
    }
    let mut b = Builder { n: t.vertex_count(), edges: t.edges().collect() };
    let mut link_vertices = Vec::new();
    for &x in &v2 {
        for _ in t.degree(x)..k {
            let link = b.gadget_hk2(k);
            b.edge(x, link);
            link_vertices.push(link);
        }
    }
    let graph = b.finish();

    let (k_i, v1_i, v2_i) = (k as i64, v1 as i64, v2.len() as i64);
    let n = (k_i * k_i + k_i - 1) * v2_i - (k_i + 1) * v1_i + (k_i + 2);
    let gadget_m = k_i * k_i + 2 * k_i - 1;
    let twice_m = (k_i * k_i * k_i + k_i * k_i - k_i + 1) * v2_i - gadget_m * v1_i + gadget_m;
    let (n, m) = (n as usize, (twice_m / 2) as usize);
    let alpha = bounds::lower_bound_connected(n, m, k, None)?.remove(0).value;
    Ok(GeneratedGraph {
        graph,
        predicted_n: n,
        predicted_m: m,
        predicted_alpha: rational_to_usize(&alpha)?,
        link_vertices,
    })
}

/// `F_{k,r}`: `kr/2` copies of `K_{k+1} - e` and `r` hubs; hub `i` takes the
/// link vertices `ik+1 .. ik+k` (cyclically), so hub `i` and hub `i+1` share a
/// gadget and the result is connected and k-regular.
pub fn family_fkr(k: usize, r: usize) -> Result<GeneratedGraph, ConstructionError> {
    require_even_k(k)?;
    if r == 0 {
        return Err(ConstructionError::InvalidR);
    }
    let gadgets = k * r / 2;
    let mut b = Builder::default();
    let hubs: Vec<usize> = (0..r).map(|_| b.vertex()).collect();
    let links: Vec<usize> = (0..gadgets).flat_map(|_| b.complete_minus_edge(k)).collect();
    let total = links.len();
    for (i, &hub) in hubs.iter().enumerate() {
        for t in 1..=k {
            b.edge(hub, links[(i * k + t) % total]);
        }
    }
    let graph = b.finish();
    assert!(graph.is_k_regular(k), "F_{{k,r}} wiring is not k-regular");
    Ok(GeneratedGraph {
        graph,
        predicted_n: r + gadgets * (k + 1),
        predicted_m: r * k + gadgets * (k * k + k - 2) / 2,
        predicted_alpha: r + k * k * r / 4,
        link_vertices: links,
    })
}

fn rational_to_usize(value: &Rational) -> Result<usize, ConstructionError> {
    if !value.is_integer() || value < &int(0) {
        return Err(ConstructionError::Infeasible(format!("predicted matching number {value} is not a natural number")));
    }
    usize::try_from(value.to_integer()).map_err(|e| ConstructionError::Infeasible(e.to_string()))
}

fn resolve_tree(k: usize, source: &TreeSource) -> Result<BipartiteTree, ConstructionError> {
    match source {
        TreeSource::Explicit(tree) => Ok(tree.clone()),
        TreeSource::Canonical { r, mode } => canonical_tree(k, *r, *mode),
    }
}

pub fn generate(spec: &FamilySpec) -> Result<GeneratedGraph, ConstructionError> {
    match spec {
        FamilySpec::CompleteMinusEdge { k } => complete_minus_edge(*k),
        FamilySpec::GadgetHk2 { k } => gadget_hk2(*k),
        FamilySpec::Gkr { k, r, blocks } => family_gkr(*k, *r, blocks),
        FamilySpec::Hkr { k, tree } => family_hkr(*k, &resolve_tree(*k, tree)?),
        FamilySpec::Fkr { k, r } => family_fkr(*k, *r),
    }
}

/// Closed-form matching number of a family instance.
pub fn expected_matching_number(spec: &FamilySpec) -> Result<Rational, ConstructionError> {
    let value = match spec {
        FamilySpec::CompleteMinusEdge { k } => {
            if *k < 2 {
                return Err(ConstructionError::InvalidK { k: *k, requirement: "k >= 2" });
            }
            from_usize(k.div_ceil(2))
        }
        FamilySpec::GadgetHk2 { k } => {
            require_odd_k(*k)?;
            from_usize(k.div_ceil(2))
        }
        FamilySpec::Gkr { k, r, blocks } => {
            require_even_k(*k)?;
            if *r == 0 {
                return Err(ConstructionError::InvalidR);
            }
            let count = gkr_block_count(*k, *r);
            if blocks.len() != count {
                return Err(ConstructionError::BlockCount { expected: count, got: blocks.len() });
            }
            let gadgets = blocks.iter().filter(|&&x| x == Block::Gadget).count();
            from_usize(*r) + from_usize(*k) / int(2) * from_usize(gadgets)
        }
        FamilySpec::Hkr { k, tree } => {
            require_odd_k(*k)?;
            let tree = resolve_tree(*k, tree)?;
            return Ok(from_usize(family_hkr(*k, &tree)?.predicted_alpha));
        }
        FamilySpec::Fkr { k, r } => {
            require_even_k(*k)?;
            if *r == 0 {
                return Err(ConstructionError::InvalidR);
            }
            from_usize(*r) + from_usize(k * k * r) / int(4)
        }
    };
    Ok(value)
}

/// Average degree `k - (r(k-2)+2)/(rk²+k+1)` of a `G'_{k,r}` instance.
pub fn average_degree_gkr_prime(k: usize, r: usize) -> Result<Rational, ConstructionError> {
    require_even_k(k)?;
    if r == 0 {
        return Err(ConstructionError::InvalidR);
    }
    let (k, r) = (from_usize(k), from_usize(r));
    Ok(&k - (&r * (&k - int(2)) + int(2)) / (&r * &k * &k + &k + int(1)))
}

/// Supremum `k - (k-2)/k²` of the `G'_{k,r}` average degree as `r` grows.
pub fn average_degree_gkr_prime_limit(k: usize) -> Result<Rational, ConstructionError> {
    require_even_k(k)?;
    let k = from_usize(k);
    Ok(&k - (&k - int(2)) / (&k * &k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::{matching_number, tutte_berge};
    use crate::rational::ratio;

    #[test]
    fn complete_minus_edge_examples() {
        let g = complete_minus_edge(4).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (5, 9));
        assert_eq!(g.link_vertices.len(), 2);
        assert!(g.link_vertices.iter().all(|&v| g.graph.degree(v) == 3));
        assert_eq!(tutte_berge(&g.graph, 22).unwrap().value, 2);
        let p3 = complete_minus_edge(2).unwrap();
        assert_eq!(p3.graph.edge_count(), 2);
        assert_eq!(matching_number(&p3.graph), 1);
    }

    #[test]
    fn gadget_examples() {
        let h5 = gadget_hk2(3).unwrap();
        assert_eq!((h5.graph.vertex_count(), h5.graph.edge_count()), (5, 7));
        let mut degrees: Vec<usize> = (0..5).map(|v| h5.graph.degree(v)).collect();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![2, 3, 3, 3, 3]);
        assert_eq!(h5.graph.degree(h5.link_vertices[0]), 2);
        assert_eq!(tutte_berge(&h5.graph, 22).unwrap().value, 2);

        let h7 = gadget_hk2(5).unwrap();
        assert_eq!((h7.graph.vertex_count(), h7.graph.edge_count()), (7, 17));
        assert!(gadget_hk2(4).is_err());
    }

    #[test]
    fn gadget_complement_is_p3_plus_matching() {
        for k in [3, 5, 7, 9] {
            let h = gadget_hk2(k).unwrap().graph;
            let n = h.vertex_count();
            let complement: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !h.has_edge(u, v)).collect();
            let c = Graph::new(n, complement).unwrap();
            let profile = c.degree_profile();
            assert_eq!(profile.count(2), 1);
            assert_eq!(profile.count(1), k + 1);
            assert_eq!(c.components().component_count(), 1 + (k - 1) / 2);
            let degree_k_minus_1 = (0..n).filter(|&v| h.degree(v) == k - 1).count();
            assert_eq!(degree_k_minus_1, 1);
        }
    }

    fn g42_example_blocks() -> Vec<Block> {
        use Block::*;
        vec![Gadget, Single, Single, Gadget, Single, Gadget, Single]
    }

    #[test]
    fn gkr_example_instance() {
        let g = family_gkr(4, 2, &g42_example_blocks()).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (21, 35));
        assert_eq!(g.predicted_alpha, 8);
        assert_eq!(matching_number(&g.graph), 8);
        assert_eq!(tutte_berge(&g.graph, 22).unwrap().value, 8);
        assert!(g.graph.is_connected());
    }

    #[test]
    fn gkr_all_singles_is_tree() {
        let g = family_gkr(4, 2, &[Block::Single; 7]).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (9, 8));
        assert!(g.graph.is_connected());
        assert_eq!(matching_number(&g.graph), 2);
    }

    #[test]
    fn gkr_prime_r1() {
        let g = family_gkr_prime(4, 1).unwrap();
        assert_eq!((g.predicted_n, g.predicted_m, g.predicted_alpha), (21, 40, 9));
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (21, 40));
        assert_eq!(matching_number(&g.graph), 9);
    }

    #[test]
    fn gkr_rejects_wrong_block_count() {
        assert_eq!(
            family_gkr(4, 2, &[Block::Single; 6]),
            Err(ConstructionError::BlockCount { expected: 7, got: 6 })
        );
        assert!(family_gkr(3, 2, &[Block::Single; 5]).is_err());
    }

    #[test]
    fn block_choice_parsing() {
        assert_eq!(Block::parse_choices("gadgets", 3).unwrap(), vec![Block::Gadget; 3]);
        assert_eq!(Block::parse_choices("10", 2).unwrap(), vec![Block::Gadget, Block::Single]);
        assert!(Block::parse_choices("1x", 2).is_err());
    }

    #[test]
    fn canonical_tree_examples() {
        let star = canonical_tree(3, 1, TreeMode::Tree).unwrap();
        assert_eq!(star.v2(), vec![0]);
        assert_eq!(star.v1().len(), 3);
        assert_eq!(star.graph().degree(0), 3);

        let double = canonical_tree(3, 2, TreeMode::Tree).unwrap();
        assert_eq!(double.v1().len(), 5);
        assert_eq!(double.v2().len(), 2);

        let regular = canonical_tree(3, 5, TreeMode::Regular).unwrap();
        assert_eq!(regular.v2().len(), 5);
        assert!(regular.v1().iter().all(|&v| regular.graph().degree(v) == 3));

        let err = canonical_tree(3, 2, TreeMode::Regular).unwrap_err();
        assert!(err.to_string().contains("multiple of k - 1"));
    }

    fn h34_example_tree() -> BipartiteTree {
        // V2 = {0,1,2,3}, V1 = {4,..,8}; V2 degrees 2, 1, 3, 2
        let edges = [(0, 4), (0, 5), (1, 5), (2, 5), (2, 6), (2, 7), (3, 7), (3, 8)];
        BipartiteTree::rooted_at_zero(Graph::new(9, edges).unwrap()).unwrap()
    }

    #[test]
    fn hkr_example_instance() {
        let tree = h34_example_tree();
        assert_eq!(tree.v2(), vec![0, 1, 2, 3]);
        let g = family_hkr(3, &tree).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count()), (29, 40));
        assert_eq!((g.predicted_n, g.predicted_m, g.predicted_alpha), (29, 40, 12));
        assert_eq!(matching_number(&g.graph), 12);
        assert_eq!(g.link_vertices.len(), 4);
        assert!(g.graph.max_degree() <= 3);
    }

    #[test]
    fn hkr_star_has_no_gadgets() {
        let g = family_hkr(3, &canonical_tree(3, 1, TreeMode::Tree).unwrap()).unwrap();
        assert_eq!((g.graph.vertex_count(), g.graph.edge_count(), g.predicted_alpha), (4, 3, 1));
        assert!(g.link_vertices.is_empty());
    }

    #[test]
    fn hkr_regular_mode_is_regular() {
        for r in [1, 3, 5] {
            let g = family_hkr(3, &canonical_tree(3, r, TreeMode::Regular).unwrap()).unwrap();
            assert!(g.graph.is_k_regular(3));
            assert!(g.graph.is_connected());
            assert_eq!(matching_number(&g.graph), g.predicted_alpha);
        }
    }

    #[test]
    fn hkr_rejects_bad_trees() {
        let not_bipartite_side = Graph::path(3);
        assert!(BipartiteTree::new(not_bipartite_side.clone(), &[0, 1]).is_err());
        assert!(BipartiteTree::new(Graph::cycle(4), &[0, 2]).is_err());
        let high_degree = BipartiteTree::rooted_at_zero(Graph::star(4)).unwrap();
        assert!(matches!(family_hkr(3, &high_degree), Err(ConstructionError::InvalidTree(_))));
    }

    #[test]
    fn fkr_examples() {
        let f41 = family_fkr(4, 1).unwrap();
        assert_eq!((f41.graph.vertex_count(), f41.graph.edge_count()), (11, 22));
        assert!(f41.graph.is_k_regular(4) && f41.graph.is_connected());
        assert_eq!(f41.predicted_alpha, 5);
        assert_eq!(tutte_berge(&f41.graph, 22).unwrap().value, 5);

        let f42 = family_fkr(4, 2).unwrap();
        assert_eq!((f42.graph.vertex_count(), f42.graph.edge_count(), f42.predicted_alpha), (22, 44, 10));
        assert_eq!(matching_number(&f42.graph), 10);

        let f61 = family_fkr(6, 1).unwrap();
        assert_eq!((f61.graph.vertex_count(), f61.graph.edge_count(), f61.predicted_alpha), (22, 66, 10));
        assert_eq!(matching_number(&f61.graph), 10);
    }

    #[test]
    fn expected_matching_number_examples() {
        let g42 = FamilySpec::Gkr { k: 4, r: 2, blocks: g42_example_blocks() };
        assert_eq!(expected_matching_number(&g42).unwrap(), int(8));
        let h34 = FamilySpec::Hkr { k: 3, tree: TreeSource::Explicit(h34_example_tree()) };
        assert_eq!(expected_matching_number(&h34).unwrap(), int(12));
        assert_eq!(expected_matching_number(&FamilySpec::Fkr { k: 4, r: 1 }).unwrap(), int(5));
        assert!(expected_matching_number(&FamilySpec::Fkr { k: 5, r: 1 }).is_err());
    }

    #[test]
    fn average_degree_examples() {
        assert_eq!(average_degree_gkr_prime(4, 1).unwrap(), ratio(80, 21));
        assert_eq!(average_degree_gkr_prime_limit(4).unwrap(), ratio(31, 8));
        assert_eq!(average_degree_gkr_prime_limit(6).unwrap(), ratio(53, 9));
        for k in [4, 6, 8] {
            for r in 1..6 {
                let g = family_gkr_prime(k, r).unwrap().graph;
                let actual = from_usize(2 * g.edge_count()) / from_usize(g.vertex_count());
                assert_eq!(average_degree_gkr_prime(k, r).unwrap(), actual);
            }
        }
    }

    #[test]
    fn average_degree_increases_toward_limit() {
        for k in (4..=14).step_by(2) {
            let limit = average_degree_gkr_prime_limit(k).unwrap();
            let mut previous = Rational::from_integer(0.into());
            for r in 1..50 {
                let value = average_degree_gkr_prime(k, r).unwrap();
                assert!(value > previous && value < limit);
                previous = value;
            }
        }
    }

    #[test]
    fn families_match_predictions() {
        let mut instances = Vec::new();
        for k in [4, 6] {
            for r in 1..=3 {
                instances.push(family_gkr_prime(k, r).unwrap());
                instances.push(family_gkr(k, r, &vec![Block::Single; gkr_block_count(k, r)]).unwrap());
                let alternating: Vec<Block> = (0..gkr_block_count(k, r))
                    .map(|i| if i % 2 == 0 { Block::Gadget } else { Block::Single })
                    .collect();
                instances.push(family_gkr(k, r, &alternating).unwrap());
                instances.push(family_fkr(k, r).unwrap());
            }
        }
        for k in [3, 5] {
            for r in 1..=4 {
                instances.push(family_hkr(k, &canonical_tree(k, r, TreeMode::Tree).unwrap()).unwrap());
            }
            for r in [1, k, 2 * k - 1] {
                instances.push(family_hkr(k, &canonical_tree(k, r, TreeMode::Regular).unwrap()).unwrap());
            }
        }
        for g in instances {
            assert_eq!(g.graph.vertex_count(), g.predicted_n);
            assert_eq!(g.graph.edge_count(), g.predicted_m);
            assert_eq!(matching_number(&g.graph), g.predicted_alpha);
            assert!(g.graph.is_connected());
        }
    }
}
