//! Floating-point spectrum, used only to cross-check the exact traces.

use nalgebra::{DMatrix, RealField};
use num_traits::FromPrimitive;

use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::scalar::ExactInt;
use crate::trace::exact_traces;

/// Largest node count accepted by the dense eigensolver.
pub const DENSE_LIMIT: usize = 2000;

#[derive(Debug, Clone)]
pub struct SpectrumSummary<F> {
    pub eigenvalues: Vec<F>,
    pub tolerance: F,
}

impl<F: RealField + Copy + FromPrimitive> SpectrumSummary<F> {
    /// `sum_j lambda_j^k`.
    pub fn power_sum(&self, k: usize) -> F {
        self.eigenvalues
            .iter()
            .fold(F::zero(), |acc, &l| acc + l.powi(k as i32))
    }

    pub fn spectral_radius(&self) -> F {
        self.eigenvalues
            .iter()
            .fold(F::zero(), |acc, &l| acc.max(l.abs()))
    }

    /// Eigenvalues sum to zero within tolerance.
    pub fn is_traceless(&self) -> bool {
        let scale = F::one().max(self.spectral_radius())
            * F::from_usize(self.eigenvalues.len().max(1)).unwrap();
        self.power_sum(1).abs() <= self.tolerance * scale
    }

    /// The multiset is symmetric about the origin within tolerance.
    pub fn is_symmetric(&self) -> bool {
        let mut sorted = self.eigenvalues.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let scale = F::one().max(self.spectral_radius());
        sorted
            .iter()
            .zip(sorted.iter().rev())
            .all(|(&a, &b)| (a + b).abs() <= self.tolerance * scale)
    }
}

pub fn spectrum<F>(graph: &BipartiteGraph) -> Result<SpectrumSummary<F>>
where
    F: RealField + Copy + FromPrimitive,
{
    let total = graph.node_count();
    if total > DENSE_LIMIT {
        return Err(Error::TooLarge {
            nodes: total,
            limit: DENSE_LIMIT,
        });
    }
    let mut a = DMatrix::<F>::zeros(total, total);
    for v in 0..total {
        for x in graph.neighbors(v) {
            a[(v, x)] = F::one();
        }
    }
    let eigen = a.symmetric_eigen();
    Ok(SpectrumSummary {
        eigenvalues: eigen.eigenvalues.iter().copied().collect(),
        tolerance: F::default_epsilon().sqrt(),
    })
}

/// Relative error `|sum lambda^k - tr(A^k)| / max(1, tr(A^k))` for each even
/// `k <= k_max`.
pub fn spectrum_residual<F>(graph: &BipartiteGraph, k_max: usize) -> Result<Vec<(usize, F)>>
where
    F: RealField + Copy + FromPrimitive,
{
    let spec = spectrum::<F>(graph)?;
    let traces = exact_traces::<i128>(graph, k_max)?;
    Ok((2..=k_max)
        .step_by(2)
        .map(|k| {
            let exact = to_float::<F, _>(traces.get(k).unwrap());
            let err = (spec.power_sum(k) - exact).abs() / F::one().max(exact);
            (k, err)
        })
        .collect())
}

fn to_float<F: FromPrimitive, T: ExactInt>(v: &T) -> F {
    F::from_f64(v.to_f64().unwrap_or(f64::INFINITY)).unwrap()
}
