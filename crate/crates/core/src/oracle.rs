//! Brute-force ground truth for small graphs.
//!
//! Nothing here shares code with the trace or formula paths: cycles are found
//! by backtracking over simple paths, and closed walks are enumerated one by
//! one and classified through their edge-induced subgraph.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Default number of partial paths the cycle search may extend.
pub const DEFAULT_CYCLE_BUDGET: u64 = 10_000_000;
/// Default number of walk prefixes the walk enumerator may extend.
pub const DEFAULT_WALK_BUDGET: u64 = 100_000_000;
pub const MAX_WALK_NODES: usize = 14;
pub const MAX_WALK_LENGTH: usize = 12;

fn distances_from(graph: &BipartiteGraph, root: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; graph.node_count()];
    let mut queue = VecDeque::from([root]);
    dist[root] = 0;
    while let Some(x) = queue.pop_front() {
        for y in graph.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// `N_i` for every even `4 <= i <= max_len`, with the default budget.
pub fn backtrack_cycle_count(
    graph: &BipartiteGraph,
    max_len: usize,
) -> Result<BTreeMap<usize, u64>> {
    backtrack_cycle_count_with_budget(graph, max_len, DEFAULT_CYCLE_BUDGET)
}

/// Each cycle is recorded once: from its lowest-indexed node, and only in
/// the direction whose second node is lower than its last node.
pub fn backtrack_cycle_count_with_budget(
    graph: &BipartiteGraph,
    max_len: usize,
    budget: u64,
) -> Result<BTreeMap<usize, u64>> {
    let mut counts: BTreeMap<usize, u64> = (4..=max_len).step_by(2).map(|i| (i, 0)).collect();
    let total = graph.node_count();
    let mut steps = 0u64;
    let mut on_path = vec![false; total];

    for root in 0..total {
        let dist = distances_from(graph, root);
        let mut path = vec![root];
        on_path[root] = true;
        // stack of (node, next neighbour position) frames
        let mut frames: Vec<(usize, usize)> = vec![(root, 0)];
        while let Some(frame) = frames.last_mut() {
            let (x, pos) = *frame;
            let neighbors: Vec<usize> = graph.neighbors(x).collect();
            if pos >= neighbors.len() {
                frames.pop();
                path.pop();
                on_path[x] = false;
                continue;
            }
            frame.1 += 1;
            let y = neighbors[pos];
            let len = path.len();
            if y == root {
                if len >= 4 && path[1] < path[len - 1] && len <= max_len {
                    *counts.get_mut(&len).unwrap() += 1;
                }
                continue;
            }
            if y < root || on_path[y] || len + dist[y] > max_len {
                continue;
            }
            steps += 1;
            if steps > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            path.push(y);
            on_path[y] = true;
            frames.push((y, 0));
        }
        on_path[root] = false;
    }
    Ok(counts)
}

/// Structural breakdown of all closed walks of one length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WalkClassification {
    pub length: usize,
    pub total_closed_walks: u64,
    /// Walks that traverse a cycle once; `2i` per `i`-cycle.
    pub cycle_walks: u64,
    /// Walks whose edge-induced subgraph is a forest.
    pub cycle_free_walks: u64,
    /// Walks that are not cycles but whose edge set contains a cycle.
    pub cwwc_walks: u64,
    /// CWWCs whose edge-induced subgraph has more than one independent cycle.
    pub cwwc_multi_cycle: u64,
    /// CWWCs in which every edge is traversed at least twice.
    pub cwwc_without_single_edge: u64,
}

/// Enumerates every closed walk of length `i` (start and direction
/// distinguished) on a graph of at most [`MAX_WALK_NODES`] nodes.
pub fn classify_closed_walks(graph: &BipartiteGraph, i: usize) -> Result<WalkClassification> {
    classify_closed_walks_with_budget(graph, i, DEFAULT_WALK_BUDGET)
}

pub fn classify_closed_walks_with_budget(
    graph: &BipartiteGraph,
    i: usize,
    budget: u64,
) -> Result<WalkClassification> {
    if graph.node_count() > MAX_WALK_NODES || i > MAX_WALK_LENGTH {
        return Err(Error::BudgetExceeded { budget });
    }
    if i < 2 || !i.is_multiple_of(2) {
        return Err(Error::InvalidLength(i));
    }
    let total = graph.node_count();
    let adjacency: Vec<Vec<usize>> = (0..total).map(|v| graph.neighbors(v).collect()).collect();
    let mut out = WalkClassification {
        length: i,
        ..Default::default()
    };
    let mut steps = 0u64;

    for start in 0..total {
        let dist = distances_from(graph, start);
        let mut walk = vec![start];
        let mut frames: Vec<usize> = vec![0];
        while let Some(pos) = frames.last_mut() {
            let x = *walk.last().unwrap();
            if *pos >= adjacency[x].len() {
                frames.pop();
                walk.pop();
                continue;
            }
            let y = adjacency[x][*pos];
            *pos += 1;
            let remaining = i - walk.len();
            if dist[y] > remaining {
                continue;
            }
            steps += 1;
            if steps > budget {
                return Err(Error::BudgetExceeded { budget });
            }
            if remaining == 0 {
                walk.push(y);
                tally(&walk, total, &mut out);
                walk.pop();
                continue;
            }
            walk.push(y);
            frames.push(0);
        }
    }
    Ok(out)
}

/// `walk` is a closed node sequence `v_0 .. v_i` with `v_i = v_0`.
fn tally(walk: &[usize], node_total: usize, out: &mut WalkClassification) {
    out.total_closed_walks += 1;
    let len = walk.len() - 1;

    let mut seen = vec![false; node_total];
    let is_cycle = len >= 3
        && walk[..len]
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true));
    if is_cycle {
        out.cycle_walks += 1;
        return;
    }

    let mut edges: Vec<(usize, usize)> = walk
        .windows(2)
        .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
        .collect();
    edges.sort_unstable();
    let mut multiplicity: Vec<((usize, usize), usize)> = Vec::new();
    for e in edges {
        match multiplicity.last_mut() {
            Some((last, k)) if *last == e => *k += 1,
            _ => multiplicity.push((e, 1)),
        }
    }

    let mut dsu = DisjointSets::new(node_total);
    let mut independent_cycles = 0usize;
    for &((a, b), _) in &multiplicity {
        if !dsu.union(a, b) {
            independent_cycles += 1;
        }
    }
    if independent_cycles == 0 {
        out.cycle_free_walks += 1;
        return;
    }
    out.cwwc_walks += 1;
    if independent_cycles > 1 {
        out.cwwc_multi_cycle += 1;
    }
    if multiplicity.iter().all(|&(_, k)| k >= 2) {
        out.cwwc_without_single_edge += 1;
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(size: usize) -> Self {
        Self {
            parent: (0..size).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already connected.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
