//! Validated bipartite graphs, degree profiles, classification and girth.
//!
//! Node identity: U-side (variable) nodes are `0..n`, W-side (check) nodes are
//! `0..m`. Where a single index space is needed (adjacency-matrix rows, walk
//! enumeration) the U block comes first: `u -> u`, `w -> n + w`.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// An immutable simple bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n: usize,
    m: usize,
    adj_u: Vec<Vec<usize>>,
    adj_w: Vec<Vec<usize>>,
    edge_count: usize,
}

impl BipartiteGraph {
    /// Builds a graph from `(u, w)` pairs, rejecting duplicates and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, m: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj_u = vec![Vec::new(); n];
        let mut adj_w = vec![Vec::new(); m];
        let mut edge_count = 0;
        for (u, w) in edges {
            if u >= n || w >= m {
                return Err(Error::IndexOutOfRange { u, w, n, m });
            }
            adj_u[u].push(w);
            adj_w[w].push(u);
            edge_count += 1;
        }
        for (u, list) in adj_u.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(pair) = list.windows(2).find(|p| p[0] == p[1]) {
                return Err(Error::DuplicateEdge { u, w: pair[0] });
            }
        }
        for list in adj_w.iter_mut() {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            m,
            adj_u,
            adj_w,
            edge_count,
        })
    }

    /// The complete bipartite graph `K_{a,b}`.
    pub fn complete(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |w| (u, w)));
        Self::new(a, b, edges).expect("complete bipartite graph is simple")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn node_count(&self) -> usize {
        self.n + self.m
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted W-neighbours of `u`.
    pub fn u_neighbors(&self, u: usize) -> &[usize] {
        &self.adj_u[u]
    }

    /// Sorted U-neighbours of `w`.
    pub fn w_neighbors(&self, w: usize) -> &[usize] {
        &self.adj_w[w]
    }

    pub fn u_degree(&self, u: usize) -> usize {
        self.adj_u[u].len()
    }

    pub fn w_degree(&self, w: usize) -> usize {
        self.adj_w[w].len()
    }

    /// Degree of a node in the global index space.
    pub fn degree(&self, v: usize) -> usize {
        if v < self.n {
            self.adj_u[v].len()
        } else {
            self.adj_w[v - self.n].len()
        }
    }

    /// Neighbours of a node in the global index space.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        let (list, offset) = if v < n {
            (&self.adj_u[v], n)
        } else {
            (&self.adj_w[v - n], 0)
        };
        list.iter().map(move |&x| x + offset)
    }

    /// Edges as `(u, w)` pairs, ordered by `u` then `w`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_u
            .iter()
            .enumerate()
            .flat_map(|(u, ws)| ws.iter().map(move |&w| (u, w)))
    }

    /// Global-index adjacency in compressed sparse row form.
    pub fn csr(&self) -> (Vec<usize>, Vec<usize>) {
        let total = self.node_count();
        let mut offsets = Vec::with_capacity(total + 1);
        let mut targets = Vec::with_capacity(2 * self.edge_count);
        offsets.push(0);
        for v in 0..total {
            targets.extend(self.neighbors(v));
            offsets.push(targets.len());
        }
        (offsets, targets)
    }

    /// The same graph with the roles of U and W exchanged.
    pub fn transposed(&self) -> Self {
        Self {
            n: self.m,
            m: self.n,
            adj_u: self.adj_w.clone(),
            adj_w: self.adj_u.clone(),
            edge_count: self.edge_count,
        }
    }

    /// Relabels nodes: `u -> perm_u[u]`, `w -> perm_w[w]`.
    pub fn relabeled(&self, perm_u: &[usize], perm_w: &[usize]) -> Result<Self> {
        Self::new(
            self.n,
            self.m,
            self.edges().map(|(u, w)| (perm_u[u], perm_w[w])),
        )
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::new(
            self.adj_u.iter().map(Vec::len).collect(),
            self.adj_w.iter().map(Vec::len).collect(),
        )
    }
}

/// Degree sequences of both sides, each sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub u_degrees: Vec<usize>,
    pub w_degrees: Vec<usize>,
    /// Common U-side degree, if every U node has the same degree.
    pub d_v: Option<usize>,
    /// Common W-side degree, if every W node has the same degree.
    pub d_c: Option<usize>,
}

impl DegreeProfile {
    pub fn new(mut u_degrees: Vec<usize>, mut w_degrees: Vec<usize>) -> Self {
        u_degrees.sort_unstable_by(|a, b| b.cmp(a));
        w_degrees.sort_unstable_by(|a, b| b.cmp(a));
        let d_v = uniform(&u_degrees);
        let d_c = uniform(&w_degrees);
        Self {
            u_degrees,
            w_degrees,
            d_v,
            d_c,
        }
    }

    pub fn n(&self) -> usize {
        self.u_degrees.len()
    }

    pub fn m(&self) -> usize {
        self.w_degrees.len()
    }

    pub fn edge_count(&self) -> usize {
        self.u_degrees.iter().sum()
    }

    /// Most specific class for these degree sequences.
    pub fn class(&self) -> GraphClass {
        match (self.d_v, self.d_c) {
            (Some(d_v), Some(d_c)) if self.n() * d_v == self.m() * d_c => {
                GraphClass::BiRegular { d_v, d_c }
            }
            (Some(d_v), _) => GraphClass::VariableRegular { d_v },
            (None, Some(d_c)) => GraphClass::CheckRegular { d_c },
            (None, None) => GraphClass::Irregular,
        }
    }
}

fn uniform(degrees: &[usize]) -> Option<usize> {
    let first = *degrees.first()?;
    degrees.iter().all(|&d| d == first).then_some(first)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    BiRegular { d_v: usize, d_c: usize },
    VariableRegular { d_v: usize },
    CheckRegular { d_c: usize },
    Irregular,
}

impl GraphClass {
    pub fn is_half_regular(self) -> bool {
        matches!(
            self,
            GraphClass::VariableRegular { .. } | GraphClass::CheckRegular { .. }
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::BiRegular { .. } => "bi-regular",
            GraphClass::VariableRegular { .. } => "variable-regular",
            GraphClass::CheckRegular { .. } => "check-regular",
            GraphClass::Irregular => "irregular",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphClass::BiRegular { d_v, d_c } => write!(f, "bi-regular({d_v},{d_c})"),
            GraphClass::VariableRegular { d_v } => write!(f, "variable-regular({d_v})"),
            GraphClass::CheckRegular { d_c } => write!(f, "check-regular({d_c})"),
            GraphClass::Irregular => f.write_str("irregular"),
        }
    }
}

pub fn classify(graph: &BipartiteGraph) -> (DegreeProfile, GraphClass) {
    let profile = graph.degree_profile();
    let class = profile.class();
    (profile, class)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GirthValue {
    Finite(usize),
    Acyclic,
}

impl GirthValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(g) => Some(g),
            GirthValue::Acyclic => None,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Exact girth by breadth-first search from every node.
///
/// A non-tree edge `(x, y)` seen from root `r` closes a closed walk of length
/// `dist[x] + dist[y] + 1` through `r`; the minimum over all roots is the
/// girth. O(|V| |E|).
pub fn girth(graph: &BipartiteGraph) -> GirthValue {
    let total = graph.node_count();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; total];
    let mut parent = vec![usize::MAX; total];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();

    for root in 0..total {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        queue.clear();

        dist[root] = 0;
        touched.push(root);
        queue.push_back(root);
        'bfs: while let Some(x) = queue.pop_front() {
            if 2 * dist[x] >= best {
                break;
            }
            for y in graph.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    touched.push(y);
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.min(dist[x] + dist[y] + 1);
                    if best == 4 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 4 {
            break;
        }
    }

    if best == usize::MAX {
        GirthValue::Acyclic
    } else {
        GirthValue::Finite(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(nodes: usize) -> BipartiteGraph {
        // alternate sides along the path: node i is U if even, W if odd
        let n = nodes.div_ceil(2);
        let m = nodes / 2;
        let edges = (0..nodes - 1).map(|i| {
            if i % 2 == 0 {
                (i / 2, i / 2)
            } else {
                (i / 2 + 1, i / 2)
            }
        });
        BipartiteGraph::new(n, m, edges).unwrap()
    }

    pub(crate) fn cycle(len: usize) -> BipartiteGraph {
        let h = len / 2;
        let edges = (0..h).flat_map(|i| [(i, i), ((i + 1) % h, i)]);
        BipartiteGraph::new(h, h, edges).unwrap()
    }

    #[test]
    fn builds_k22() {
        let g = BipartiteGraph::new(2, 2, [(0, 0), (0, 1), (1, 0), (1, 1)]).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g, BipartiteGraph::complete(2, 2));
        assert_eq!(g.w_neighbors(1), &[0, 1]);
    }

    #[test]
    fn rejects_parallel_edge() {
        assert_eq!(
            BipartiteGraph::new(1, 1, [(0, 0), (0, 0)]),
            Err(Error::DuplicateEdge { u: 0, w: 0 })
        );
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            BipartiteGraph::new(2, 2, [(2, 0)]),
            Err(Error::IndexOutOfRange { u: 2, w: 0, .. })
        ));
    }

    #[test]
    fn adjacency_is_consistent() {
        let g = BipartiteGraph::new(3, 4, [(0, 3), (0, 1), (2, 1), (1, 0), (2, 2)]).unwrap();
        for (u, w) in g.edges() {
            assert!(g.w_neighbors(w).contains(&u));
        }
        let du: usize = (0..3).map(|u| g.u_degree(u)).sum();
        let dw: usize = (0..4).map(|w| g.w_degree(w)).sum();
        assert_eq!(du, g.edge_count());
        assert_eq!(dw, g.edge_count());
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![4, 6]);
        assert_eq!(g.neighbors(4).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(g.neighbors(3).collect::<Vec<_>>(), vec![1]);
    }

    #[test]
    fn classify_k23() {
        let (profile, class) = classify(&BipartiteGraph::complete(2, 3));
        assert_eq!(profile.u_degrees, vec![3, 3]);
        assert_eq!(profile.w_degrees, vec![2, 2, 2]);
        assert_eq!(class, GraphClass::BiRegular { d_v: 3, d_c: 2 });
    }

    #[test]
    fn classify_star_is_biregular() {
        // one centre of degree 4, four leaves: both sides are uniform
        let (_, class) = classify(&BipartiteGraph::complete(1, 4));
        assert_eq!(class, GraphClass::BiRegular { d_v: 4, d_c: 1 });
    }

    #[test]
    fn classify_one_sided() {
        let p = DegreeProfile::new(vec![2; 12], vec![6, 4, 3, 3, 3, 2, 2, 1]);
        assert_eq!(p.class(), GraphClass::VariableRegular { d_v: 2 });
        let p = DegreeProfile::new(vec![3, 1], vec![2, 2]);
        assert_eq!(p.class(), GraphClass::CheckRegular { d_c: 2 });
        let p = DegreeProfile::new(vec![3, 1], vec![2, 1, 1]);
        assert_eq!(p.class(), GraphClass::Irregular);
        assert_eq!(p.u_degrees, vec![3, 1]);
    }

    #[test]
    fn girth_examples() {
        for x in 2..6 {
            assert_eq!(
                girth(&BipartiteGraph::complete(x, x)),
                GirthValue::Finite(4)
            );
        }
        assert_eq!(girth(&path(5)), GirthValue::Acyclic);
        assert_eq!(
            girth(&BipartiteGraph::new(0, 0, []).unwrap()),
            GirthValue::Acyclic
        );
        for len in [4, 6, 8, 10, 14] {
            assert_eq!(girth(&cycle(len)), GirthValue::Finite(len));
        }
    }

    #[test]
    fn transpose_swaps_sides() {
        let g = BipartiteGraph::new(2, 3, [(0, 0), (0, 2), (1, 2)]).unwrap();
        let t = g.transposed();
        assert_eq!((t.n(), t.m()), (3, 2));
        assert_eq!(t.u_neighbors(2), &[0, 1]);
        assert_eq!(t.transposed(), g);
    }
}
