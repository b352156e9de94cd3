//! Undirected simple graphs and the structural queries the bounds need:
//! components, odd components after deleting a vertex set, degree counts and
//! per-component regularity.
//!
//! Graphs are immutable once built. Vertex ids are dense (`0..n`) and every
//! adjacency list is sorted ascending, so iteration order (and therefore every
//! derived output) is deterministic.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) is a loop")]
    Loop(usize, usize),
    #[error("edge ({0}, {1}) appears more than once")]
    DuplicateEdge(usize, usize),
    #[error("edge ({0}, {1}) refers to a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("vertex {0} is outside 0..{1}")]
    InvalidVertex(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentPartition {
    pub component_of: Vec<usize>,
    pub component_sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn component_count(&self) -> usize {
        self.component_sizes.len()
    }

    /// Vertex ids of component `index`, ascending.
    pub fn members(&self, index: usize) -> Vec<usize> {
        self.component_of
            .iter()
            .enumerate()
            .filter(|(_, &c)| c == index)
            .map(|(v, _)| v)
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub max_degree: usize,
    /// degree -> number of vertices with that degree
    pub degree_counts: BTreeMap<usize, usize>,
}

impl DegreeProfile {
    /// `n_i`, the number of vertices of degree `i`.
    pub fn count(&self, degree: usize) -> usize {
        self.degree_counts.get(&degree).copied().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Regularity {
    /// One flag per component, in component-index order.
    pub per_component: Vec<bool>,
    /// Every vertex of the graph has degree exactly k.
    pub global: bool,
}

impl Regularity {
    pub fn any_component(&self) -> bool {
        self.per_component.iter().any(|&r| r)
    }
}

impl Graph {
    /// Builds a simple graph on `n` vertices. Loops, duplicates and out of
    /// range ids are rejected with an error naming the offending pair.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::Loop(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Self { adjacency, edge_count })
    }

    pub fn empty(n: usize) -> Self {
        Self { adjacency: vec![Vec::new(); n], edge_count: 0 }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    /// Circulant graph on `n` vertices joining `i` to `i ± d` for every offset `d`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Self, GraphError> {
        let mut edges = Vec::new();
        for i in 0..n {
            for &d in offsets {
                let j = (i + d) % n;
                let (a, b) = (i.min(j), i.max(j));
                edges.push((a, b));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Self::new(n, edges)
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let offset = self.vertex_count();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + offset, v + offset)));
        Graph::new(offset + other.vertex_count(), edges).expect("union of simple graphs is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Breadth-first component labelling; components are numbered in order of
    /// their smallest vertex.
    pub fn components(&self) -> ComponentPartition {
        let n = self.vertex_count();
        let mut component_of = vec![usize::MAX; n];
        let mut component_sizes = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if component_of[start] != usize::MAX {
                continue;
            }
            let index = component_sizes.len();
            component_of[start] = index;
            queue.push_back(start);
            let mut size = 0;
            while let Some(u) = queue.pop_front() {
                size += 1;
                for &w in &self.adjacency[u] {
                    if component_of[w] == usize::MAX {
                        component_of[w] = index;
                        queue.push_back(w);
                    }
                }
            }
            component_sizes.push(size);
        }
        ComponentPartition { component_of, component_sizes }
    }

    pub fn is_connected(&self) -> bool {
        self.components().component_count() == 1
    }

    /// Sizes of the components of `G - X`, where `X` is given as a mask
    /// (`removed[v]` is true for deleted vertices). No subgraph is built.
    pub fn component_sizes_masked(&self, removed: &[bool]) -> Vec<usize> {
        let n = self.vertex_count();
        let mut seen = removed.to_vec();
        let mut stack = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            stack.push(start);
            let mut size = 0;
            while let Some(u) = stack.pop() {
                size += 1;
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            sizes.push(size);
        }
        sizes
    }

    fn deletion_mask(&self, deleted: &[usize]) -> Result<Vec<bool>, GraphError> {
        let n = self.vertex_count();
        let mut removed = vec![false; n];
        for &v in deleted {
            if v >= n {
                return Err(GraphError::InvalidVertex(v, n));
            }
            removed[v] = true;
        }
        Ok(removed)
    }

    /// `oc(G - X)`: the number of odd-order components left after deleting `deleted`.
    pub fn odd_components_after_deletion(&self, deleted: &[usize]) -> Result<usize, GraphError> {
        let removed = self.deletion_mask(deleted)?;
        Ok(self.component_sizes_masked(&removed).iter().filter(|&&s| s % 2 == 1).count())
    }

    /// Number of even-order components of `G - X`.
    pub fn even_components_after_deletion(&self, deleted: &[usize]) -> Result<usize, GraphError> {
        let removed = self.deletion_mask(deleted)?;
        Ok(self.component_sizes_masked(&removed).iter().filter(|&&s| s % 2 == 0).count())
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut degree_counts = BTreeMap::new();
        for list in &self.adjacency {
            *degree_counts.entry(list.len()).or_insert(0) += 1;
        }
        DegreeProfile { max_degree: self.max_degree(), degree_counts }
    }

    /// Per-component and global k-regularity. The empty graph is vacuously
    /// regular globally and has no components.
    pub fn regularity(&self, k: usize) -> Regularity {
        let partition = self.components();
        let mut per_component = vec![true; partition.component_count()];
        for (v, &c) in partition.component_of.iter().enumerate() {
            if self.degree(v) != k {
                per_component[c] = false;
            }
        }
        let global = per_component.iter().all(|&r| r);
        Regularity { per_component, global }
    }

    pub fn is_k_regular(&self, k: usize) -> bool {
        self.adjacency.iter().all(|list| list.len() == k)
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count());
        Graph::new(self.vertex_count(), self.edges().map(|(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves simplicity")
    }

    /// Bridges, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn bridges(&self) -> Vec<(usize, usize)> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // iterative DFS: (vertex, parent, next neighbour index)
            let mut stack = vec![(root, usize::MAX, 0usize)];
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                if top.2 < self.adjacency[u].len() {
                    let w = self.adjacency[u][top.2];
                    top.2 += 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, u, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] > disc[parent] {
                            out.push((parent.min(u), parent.max(u)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let (a, b) = (u.min(v), u.max(v));
        Graph::new(self.vertex_count(), self.edges().filter(|&e| e != (a, b)))
            .expect("subgraph of a simple graph is simple")
    }

    /// Plain edge-list text: `n m` header then one `u v` line per edge, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.vertex_count(), self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    /// Graphviz text for an undirected graph.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "graph {name} {{").unwrap();
        for v in 0..self.vertex_count() {
            writeln!(out, "  {v};").unwrap();
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// Parses the edge-list format written by [`Graph::to_edge_list`]. Lines
    /// starting with `#` and blank lines are ignored; every edge line must
    /// satisfy `0 <= u < v < n`.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (header_line, header) = lines.next().ok_or(GraphError::Parse {
            line: 0,
            message: "missing \"n m\" header".into(),
        })?;
        let (n, m) = parse_pair(header_line, header)?;
        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line, content) in lines {
            if edges.len() == m {
                return Err(GraphError::Parse {
                    line,
                    message: format!("declared {m} edges, found more"),
                });
            }
            let (u, v) = parse_pair(line, content)?;
            if u >= v {
                return Err(GraphError::Parse { line, message: format!("expected u < v, got {u} {v}") });
            }
            if v >= n {
                return Err(GraphError::Parse {
                    line,
                    message: format!("vertex {v} outside 0..{n}"),
                });
            }
            edges.push((u, v));
            last_line = line;
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: last_line,
                message: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, edges)
    }
}

fn parse_pair(line: usize, content: &str) -> Result<(usize, usize), GraphError> {
    let mut fields = content.split_whitespace();
    let parse = |field: Option<&str>| -> Result<usize, GraphError> {
        let field = field.ok_or(GraphError::Parse { line, message: "expected two integers".into() })?;
        field
            .parse()
            .map_err(|_| GraphError::Parse { line, message: format!("not a non-negative integer: {field:?}") })
    };
    let a = parse(fields.next())?;
    let b = parse(fields.next())?;
    if fields.next().is_some() {
        return Err(GraphError::Parse { line, message: "expected exactly two integers".into() });
    }
    Ok((a, b))
}
