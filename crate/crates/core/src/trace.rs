//! Exact closed-walk counts `tr(A^k)`.
//!
//! For each start node `v` the walk-count vector `w_t = A^t e_v` is advanced
//! over the adjacency lists; `(w_k)_v` is the number of closed `k`-walks at
//! `v`. Start nodes are processed in parallel and summed exactly, so the
//! result does not depend on scheduling.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::scalar::{sum_exact, ExactInt};

/// `tr(A^k)` for `k = 0..=k_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceVector<T> {
    values: Vec<T>,
}

impl<T: ExactInt> TraceVector<T> {
    pub fn k_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `tr(A^k)`; `None` beyond `k_max`.
    pub fn get(&self, k: usize) -> Option<&T> {
        self.values.get(k)
    }

    /// `(k, tr(A^k))` for `k = 1..=k_max`.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &T)> {
        self.values.iter().enumerate().skip(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TraceMethod {
    /// Advance to `w_k` and read the diagonal entry.
    Direct,
    /// Advance to `w_{ceil(k/2)}` only and use
    /// `(A^k)_{vv} = <w_{floor(k/2)}, w_{ceil(k/2)}>`.
    #[default]
    NormShortcut,
}

pub fn exact_traces<T: ExactInt>(graph: &BipartiteGraph, k_max: usize) -> Result<TraceVector<T>> {
    exact_traces_with(graph, k_max, TraceMethod::default())
}

pub fn exact_traces_with<T: ExactInt>(
    graph: &BipartiteGraph,
    k_max: usize,
    method: TraceMethod,
) -> Result<TraceVector<T>> {
    if k_max < 2 || !k_max.is_multiple_of(2) {
        return Err(Error::InvalidLength(k_max));
    }
    let (offsets, targets) = graph.csr();
    let total = graph.node_count();
    let csr = Csr {
        offsets: &offsets,
        targets: &targets,
    };

    let per_node: Vec<Vec<T>> = (0..total)
        .into_par_iter()
        .map(|v| match method {
            TraceMethod::Direct => csr.diagonal_direct(v, k_max),
            TraceMethod::NormShortcut => csr.diagonal_shortcut(v, k_max),
        })
        .collect::<Result<_>>()?;

    let values = (0..=k_max)
        .map(|k| sum_exact(per_node.iter().map(|d| d[k].clone())))
        .collect::<Result<Vec<T>>>()?;
    Ok(TraceVector { values })
}

struct Csr<'a> {
    offsets: &'a [usize],
    targets: &'a [usize],
}

impl Csr<'_> {
    fn step<T: ExactInt>(&self, w: &[T]) -> Result<Vec<T>> {
        let mut next = vec![T::zero(); w.len()];
        for (x, count) in w.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            for &y in &self.targets[self.offsets[x]..self.offsets[x + 1]] {
                next[y] = next[y].add_exact(count)?;
            }
        }
        Ok(next)
    }

    fn unit<T: ExactInt>(&self, v: usize) -> Vec<T> {
        let mut w = vec![T::zero(); self.offsets.len() - 1];
        w[v] = T::one();
        w
    }

    fn diagonal_direct<T: ExactInt>(&self, v: usize, k_max: usize) -> Result<Vec<T>> {
        let mut w = self.unit::<T>(v);
        let mut out = Vec::with_capacity(k_max + 1);
        out.push(T::one());
        for _ in 1..=k_max {
            w = self.step(&w)?;
            out.push(w[v].clone());
        }
        Ok(out)
    }

    fn diagonal_shortcut<T: ExactInt>(&self, v: usize, k_max: usize) -> Result<Vec<T>> {
        let half = k_max / 2;
        let mut powers = Vec::with_capacity(half + 1);
        powers.push(self.unit::<T>(v));
        for t in 0..half {
            let next = self.step(&powers[t])?;
            powers.push(next);
        }
        (0..=k_max)
            .map(|k| dot(&powers[k / 2], &powers[k.div_ceil(2)]))
            .collect()
    }
}

fn dot<T: ExactInt>(a: &[T], b: &[T]) -> Result<T> {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .try_fold(T::zero(), |acc, (x, y)| acc.add_exact(&x.mul_exact(y)?))
}
