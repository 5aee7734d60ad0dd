//! Simple undirected graphs restricted to forests and trees.
//!
//! Vertices are the dense integers `0..n`. A [`Graph`] may be any simple
//! graph (cycles are representable so they can be rejected); a [`Tree`] is a
//! graph that has been checked to be connected and acyclic.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Deref;

use crate::error::{CsfError, Result};

/// Finite simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Sorted, each pair stored as `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(CsfError::Loop { line: 0, vertex: u });
            }
            for w in [u, v] {
                if w >= n {
                    return Err(CsfError::VertexOutOfRange { vertex: w, n });
                }
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(CsfError::DuplicateEdge { line: 0, u: e.0, v: e.1 });
            }
        }
        Ok(Self::from_sorted(n, set.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { n, edges, adj }
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// A graph is a forest iff |E| = n - (number of components).
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.components().len() == self.n
    }

    /// Subgraph induced by `vertices`, relabelled to `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u].min(index[v]), index[u].max(index[v])))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(vertices.len(), edges)
    }

    /// Applies a vertex relabelling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(CsfError::InvalidArgument(format!(
                "permutation has length {} but graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Edge-list text: an `n <k>` header followed by one `u v` line per edge.
    pub fn serialize(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for &(u, v) in &self.edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Parses the edge-list text format.
///
/// Each non-blank line not starting with `#` is either `u v` or the header
/// `n <k>`. Without a header the vertex count is one more than the largest id.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || CsfError::Malformed { line: line_no, content: raw.to_string() };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(malformed());
        }
        if fields[0] == "n" {
            if declared_n.is_some() {
                return Err(malformed());
            }
            declared_n = Some(fields[1].parse().map_err(|_| malformed())?);
            continue;
        }
        let u: usize = fields[0].parse().map_err(|_| malformed())?;
        let v: usize = fields[1].parse().map_err(|_| malformed())?;
        if u == v {
            return Err(CsfError::Loop { line: line_no, vertex: u });
        }
        let e = (u.min(v), u.max(v));
        if !seen.insert(e) {
            return Err(CsfError::DuplicateEdge { line: line_no, u: e.0, v: e.1 });
        }
        edges.push(e);
    }
    let max_id = edges.iter().map(|&(_, v)| v + 1).max().unwrap_or(0);
    let n = match declared_n {
        Some(n) => {
            if max_id > n {
                return Err(CsfError::VertexOutOfRange { vertex: max_id - 1, n });
            }
            n
        }
        None => max_id,
    };
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges))
}

/// A connected acyclic graph with at least one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree(Graph);

impl Tree {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    pub fn into_graph(self) -> Graph {
        self.0
    }

    /// One or two central vertices (minimisers of eccentricity).
    pub fn centers(&self) -> Vec<usize> {
        let g = &self.0;
        let n = g.n;
        if n <= 2 {
            return (0..n).collect();
        }
        let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &v in &layer {
                for &w in g.neighbors(v) {
                    if deg[w] > 1 {
                        deg[w] -= 1;
                        if deg[w] == 1 {
                            next.push(w);
                        }
                    }
                }
                deg[v] = 0;
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }
}

impl Deref for Tree {
    type Target = Graph;
    fn deref(&self) -> &Graph {
        &self.0
    }
}

impl TryFrom<Graph> for Tree {
    type Error = CsfError;
    fn try_from(g: Graph) -> Result<Tree> {
        as_tree(g)
    }
}

/// Accepts `g` as a tree if it is non-empty, connected and acyclic.
pub fn as_tree(g: Graph) -> Result<Tree> {
    if g.n == 0 {
        return Err(CsfError::Empty);
    }
    let components = g.components().len();
    let acyclic = g.edges.len() + components == g.n;
    if !acyclic {
        return Err(CsfError::HasCycle);
    }
    if components != 1 {
        return Err(CsfError::NotConnected);
    }
    debug_assert_eq!(g.edges.len(), g.n - 1);
    Ok(Tree(g))
}

/// Relabelling-invariant code of a tree: AHU parenthesis string rooted at
/// the center (the smaller of the two rooted codes for bicentral trees).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn rooted_code(g: &Graph, root: usize) -> String {
    // Iterative post-order so deep paths do not recurse.
    let n = g.n;
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in g.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut codes: Vec<Option<String>> = vec![None; n];
    let mut children: Vec<Vec<String>> = vec![Vec::new(); n];
    for &u in order.iter().rev() {
        let mut kids = std::mem::take(&mut children[u]);
        kids.sort_unstable();
        let mut code = String::with_capacity(2 + kids.iter().map(String::len).sum::<usize>());
        code.push('(');
        for k in kids {
            code.push_str(&k);
        }
        code.push(')');
        if u == root {
            codes[u] = Some(code);
        } else {
            children[parent[u]].push(code);
        }
    }
    codes[root].take().unwrap_or_default()
}

pub fn canonical_code(t: &Tree) -> CanonicalCode {
    let code = t.centers().into_iter().map(|c| rooted_code(&t.0, c)).min().unwrap_or_default();
    CanonicalCode(code)
}

pub fn trees_isomorphic(a: &Tree, b: &Tree) -> bool {
    a.vertex_count() == b.vertex_count() && canonical_code(a) == canonical_code(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(text: &str) -> Tree {
        as_tree(parse_edge_list(text).unwrap()).unwrap()
    }

    #[test]
    fn parses_star() {
        let g = parse_edge_list("0 1\n1 2\n1 3").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.leaves(), vec![0, 2, 3]);
        assert!(as_tree(g).is_ok());
    }

    #[test]
    fn parses_forest_with_comments_and_header() {
        let g = parse_edge_list("# two edges\n\nn 6\n0 1\n2 3\n").unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.components().len(), 4);
        let g = parse_edge_list("0 1\n2 3").unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(as_tree(g), Err(CsfError::NotConnected));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list("0 0"), Err(CsfError::Loop { line: 1, vertex: 0 })));
        assert!(matches!(parse_edge_list("0 1\n1 0"), Err(CsfError::DuplicateEdge { line: 2, .. })));
        assert!(matches!(parse_edge_list("0 1 2"), Err(CsfError::Malformed { line: 1, .. })));
        assert!(matches!(parse_edge_list("0 x"), Err(CsfError::Malformed { .. })));
        assert!(matches!(parse_edge_list("-1 2"), Err(CsfError::Malformed { .. })));
        assert!(matches!(parse_edge_list("n 3\n0 3"), Err(CsfError::VertexOutOfRange { vertex: 3, n: 3 })));
        assert!(matches!(parse_edge_list("n 3\nn 4"), Err(CsfError::Malformed { line: 2, .. })));
    }

    #[test]
    fn as_tree_rejections() {
        assert!(as_tree(parse_edge_list("0 1\n1 2\n2 3").unwrap()).is_ok());
        assert_eq!(as_tree(parse_edge_list("0 1\n1 2\n2 0").unwrap()), Err(CsfError::HasCycle));
        assert_eq!(as_tree(Graph::empty(0)), Err(CsfError::Empty));
        assert!(as_tree(Graph::empty(1)).is_ok());
        assert_eq!(as_tree(parse_edge_list("n 5\n0 1\n1 2\n2 0\n3 4").unwrap()), Err(CsfError::HasCycle));
    }

    #[test]
    fn centers() {
        assert_eq!(tree("0 1\n1 2\n2 3").centers(), vec![1, 2]);
        assert_eq!(tree("0 1\n1 2\n2 3\n3 4").centers(), vec![2]);
        assert_eq!(tree("0 1\n0 2\n0 3").centers(), vec![0]);
        assert_eq!(as_tree(Graph::empty(1)).unwrap().centers(), vec![0]);
    }

    #[test]
    fn canonical_code_examples() {
        let p4 = tree("0 1\n1 2\n2 3");
        let p4_relabelled = tree("2 0\n0 3\n3 1");
        let s4 = tree("0 1\n0 2\n0 3");
        assert_eq!(canonical_code(&p4), canonical_code(&p4_relabelled));
        assert_ne!(canonical_code(&p4), canonical_code(&s4));
        assert!(trees_isomorphic(&p4, &p4_relabelled));
        assert!(!trees_isomorphic(&s4, &p4));
        let single = as_tree(Graph::empty(1)).unwrap();
        assert!(trees_isomorphic(&single, &single.clone()));
        assert_eq!(canonical_code(&single).as_str(), "()");
    }

    #[test]
    fn serialize_format() {
        let g = Graph::new(4, [(3, 1), (0, 1)]).unwrap();
        assert_eq!(g.serialize(), "n 4\n0 1\n1 3\n");
    }

    #[test]
    fn induced_subgraph() {
        let p5 = tree("0 1\n1 2\n2 3\n3 4");
        let h = p5.induced(&[1, 2, 4]);
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges(), &[(0, 1)]);
    }
}
