//! Seeded test-graph generators.

use std::collections::VecDeque;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Restarts allowed before [`Error::RetriesExhausted`].
pub const MAX_RETRIES: usize = 500;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenKind {
    CompleteBipartite(usize, usize),
    RandomBiRegular {
        n: usize,
        d_v: usize,
        d_c: usize,
    },
    /// Every U degree is `d_v`; W degrees lie in `w_degree_bounds` and are
    /// not all equal whenever the bounds allow it.
    RandomVariableRegular {
        n: usize,
        d_v: usize,
        w_degree_bounds: (usize, usize),
    },
    RandomIrregular {
        n: usize,
        m: usize,
        edge_prob: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub kind: GenKind,
    pub seed: u64,
    pub min_girth: Option<usize>,
}

impl GenSpec {
    pub fn new(kind: GenKind, seed: u64) -> Self {
        Self {
            kind,
            seed,
            min_girth: None,
        }
    }

    pub fn with_min_girth(mut self, girth: usize) -> Self {
        self.min_girth = Some(girth);
        self
    }
}

fn infeasible(msg: impl Into<String>) -> Error {
    Error::InfeasibleSpec(msg.into())
}

pub fn generate(spec: &GenSpec) -> Result<BipartiteGraph> {
    let min_girth = match spec.min_girth {
        Some(g) if g % 2 != 0 => return Err(infeasible(format!("odd minimum girth {g}"))),
        Some(g) if g > 4 => g,
        _ => 0,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.kind {
        GenKind::CompleteBipartite(a, b) => {
            let g = BipartiteGraph::complete(a, b);
            if min_girth > 4 && a >= 2 && b >= 2 {
                return Err(infeasible("complete bipartite graph has girth 4"));
            }
            Ok(g)
        }
        GenKind::RandomBiRegular { n, d_v, d_c } => {
            if n == 0 || d_v == 0 || d_c == 0 {
                return Err(infeasible("sizes and degrees must be positive"));
            }
            if (n * d_v) % d_c != 0 {
                return Err(infeasible(format!(
                    "n*d_v = {} is not divisible by d_c = {d_c}",
                    n * d_v
                )));
            }
            let m = n * d_v / d_c;
            if d_v > m || d_c > n {
                return Err(infeasible("a degree exceeds the opposite side"));
            }
            match_stubs(
                &vec![d_v; n],
                &vec![d_c; m],
                min_girth,
                MAX_RETRIES,
                &mut rng,
            )
        }
        GenKind::RandomVariableRegular {
            n,
            d_v,
            w_degree_bounds: (lo, hi),
        } => {
            if n == 0 || d_v == 0 || lo == 0 || lo > hi || hi > n {
                return Err(infeasible(
                    "check degree bounds must satisfy 1 <= lo <= hi <= n",
                ));
            }
            let edges = n * d_v;
            let m_min = edges.div_ceil(hi).max(d_v);
            let m_max = edges / lo;
            if m_min > m_max {
                return Err(infeasible("no check count fits the degree bounds"));
            }
            for _ in 0..MAX_RETRIES {
                let m = rng.random_range(m_min..=m_max);
                let w_degrees = spread_degrees(edges, m, lo, hi, &mut rng);
                if let Ok(g) = match_stubs(&vec![d_v; n], &w_degrees, min_girth, 1, &mut rng) {
                    return Ok(g);
                }
            }
            Err(Error::RetriesExhausted(MAX_RETRIES))
        }
        GenKind::RandomIrregular { n, m, edge_prob } => {
            if !(0.0..=1.0).contains(&edge_prob) {
                return Err(infeasible("edge probability outside [0, 1]"));
            }
            Ok(sample_edges(n, m, edge_prob, min_girth, &mut rng))
        }
    }
}

/// `m` degrees in `[lo, hi]` summing to `total`.
fn spread_degrees(
    total: usize,
    m: usize,
    lo: usize,
    hi: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<usize> {
    let mut degrees = vec![lo; m];
    let mut open: Vec<usize> = (0..m).filter(|_| lo < hi).collect();
    for _ in 0..total - lo * m {
        let k = rng.random_range(0..open.len());
        let w = open[k];
        degrees[w] += 1;
        if degrees[w] == hi {
            open.swap_remove(k);
        }
    }
    if m >= 2 && lo < hi && degrees.iter().all(|&d| d == degrees[0]) {
        if degrees[0] < hi {
            degrees[0] += 1;
            degrees[1] -= 1;
        } else {
            degrees[0] -= 1;
            degrees[1] += 1;
        }
    }
    degrees
}

/// Checks within distance `min_girth - 2` of `u`; joining `u` to one of
/// them would close a cycle shorter than `min_girth`.
fn near_checks(
    adj_u: &[Vec<usize>],
    adj_w: &[Vec<usize>],
    u: usize,
    min_girth: usize,
) -> Vec<bool> {
    let mut near = vec![false; adj_w.len()];
    for &w in &adj_u[u] {
        near[w] = true;
    }
    if min_girth <= 4 {
        return near;
    }
    let limit = min_girth - 2;
    let mut seen_u = vec![false; adj_u.len()];
    seen_u[u] = true;
    let mut queue = VecDeque::from([(u, 0usize)]);
    while let Some((x, d)) = queue.pop_front() {
        if d + 1 > limit {
            continue;
        }
        for &w in &adj_u[x] {
            near[w] = true;
            if d + 2 > limit {
                continue;
            }
            for &y in &adj_w[w] {
                if !seen_u[y] {
                    seen_u[y] = true;
                    queue.push_back((y, d + 2));
                }
            }
        }
    }
    near
}

/// Stub matching: each U stub is joined to a W node that still has free
/// stubs, is not already adjacent, and would not close a cycle shorter than
/// `min_girth`. Among those, the W nodes with the most free stubs are
/// preferred and ties are broken at random. A dead end restarts the matching.
fn match_stubs(
    u_degrees: &[usize],
    w_degrees: &[usize],
    min_girth: usize,
    attempts: usize,
    rng: &mut ChaCha8Rng,
) -> Result<BipartiteGraph> {
    let (n, m) = (u_degrees.len(), w_degrees.len());
    'attempt: for _ in 0..attempts {
        let mut adj_u = vec![Vec::new(); n];
        let mut adj_w = vec![Vec::new(); m];
        let mut free = w_degrees.to_vec();
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        for &u in &order {
            for _ in 0..u_degrees[u] {
                let near = near_checks(&adj_u, &adj_w, u, min_girth);
                let best = (0..m)
                    .filter(|&w| !near[w])
                    .map(|w| free[w])
                    .max()
                    .unwrap_or(0);
                if best == 0 {
                    continue 'attempt;
                }
                let candidates: Vec<usize> =
                    (0..m).filter(|&w| !near[w] && free[w] == best).collect();
                let &w = candidates.choose(rng).expect("at least one candidate");
                free[w] -= 1;
                adj_u[u].push(w);
                adj_w[w].push(u);
            }
        }
        let edges = adj_u
            .iter()
            .enumerate()
            .flat_map(|(u, ws)| ws.iter().map(move |&w| (u, w)));
        return BipartiteGraph::new(n, m, edges);
    }
    Err(Error::RetriesExhausted(attempts))
}

/// Each pair is kept with probability `p`, in a random order, unless it would
/// close a cycle shorter than `min_girth`.
fn sample_edges(
    n: usize,
    m: usize,
    p: f64,
    min_girth: usize,
    rng: &mut ChaCha8Rng,
) -> BipartiteGraph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (0..m).map(move |w| (u, w))).collect();
    pairs.shuffle(rng);
    let mut adj_u = vec![Vec::new(); n];
    let mut adj_w = vec![Vec::new(); m];
    for (u, w) in pairs {
        if !rng.random_bool(p) {
            continue;
        }
        if min_girth > 4 && near_checks(&adj_u, &adj_w, u, min_girth)[w] {
            continue;
        }
        adj_u[u].push(w);
        adj_w[w].push(u);
    }
    let edges = adj_u
        .iter()
        .enumerate()
        .flat_map(|(u, ws)| ws.iter().map(move |&w| (u, w)));
    BipartiteGraph::new(n, m, edges).expect("sampled pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{classify, girth, GraphClass};

    #[test]
    fn complete() {
        let g = generate(&GenSpec::new(GenKind::CompleteBipartite(2, 3), 0)).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(classify(&g).1, GraphClass::BiRegular { d_v: 3, d_c: 2 });
    }

    #[test]
    fn biregular_degrees() {
        for seed in 0..5 {
            let g = generate(&GenSpec::new(
                GenKind::RandomBiRegular {
                    n: 20,
                    d_v: 3,
                    d_c: 5,
                },
                seed,
            ))
            .unwrap();
            assert_eq!(g.m(), 12);
            assert!((0..20).all(|u| g.u_degree(u) == 3));
            assert!((0..12).all(|w| g.w_degree(w) == 5));
        }
    }

    #[test]
    fn min_girth_is_enforced() {
        for seed in 0..5 {
            let spec = GenSpec::new(
                GenKind::RandomBiRegular {
                    n: 40,
                    d_v: 3,
                    d_c: 4,
                },
                seed,
            )
            .with_min_girth(6);
            let g = generate(&spec).unwrap();
            assert!(girth(&g).finite().is_none_or(|g| g >= 6));
        }
    }

    #[test]
    fn deterministic() {
        let spec = GenSpec::new(
            GenKind::RandomIrregular {
                n: 10,
                m: 8,
                edge_prob: 0.3,
            },
            42,
        );
        let a: Vec<_> = generate(&spec).unwrap().edges().collect();
        let b: Vec<_> = generate(&spec).unwrap().edges().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn variable_regular_is_half_regular() {
        let kind = GenKind::RandomVariableRegular {
            n: 12,
            d_v: 2,
            w_degree_bounds: (1, 5),
        };
        for seed in 0..10 {
            let g = generate(&GenSpec::new(kind, seed)).unwrap();
            assert_eq!(classify(&g).1, GraphClass::VariableRegular { d_v: 2 });
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let bad = [
            GenKind::RandomBiRegular {
                n: 7,
                d_v: 3,
                d_c: 5,
            },
            GenKind::RandomBiRegular {
                n: 2,
                d_v: 3,
                d_c: 3,
            },
            GenKind::RandomIrregular {
                n: 3,
                m: 3,
                edge_prob: 1.5,
            },
            GenKind::RandomVariableRegular {
                n: 4,
                d_v: 2,
                w_degree_bounds: (3, 2),
            },
        ];
        for kind in bad {
            assert!(matches!(
                generate(&GenSpec::new(kind, 1)),
                Err(Error::InfeasibleSpec(_))
            ));
        }
    }

    #[test]
    fn impossible_girth_exhausts_retries() {
        let spec = GenSpec::new(
            GenKind::RandomBiRegular {
                n: 6,
                d_v: 3,
                d_c: 3,
            },
            3,
        )
        .with_min_girth(8);
        assert_eq!(generate(&spec), Err(Error::RetriesExhausted(MAX_RETRIES)));
    }
}
