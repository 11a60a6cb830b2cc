//! Cycle multiplicities from closed-walk traces and degree data.
//!
//! Every closed walk of length `i` is a cycle, cycle-free, or a closed walk
//! with cycle, and each `i`-cycle accounts for exactly `2i` closed walks, so
//!
//! ```text
//! N_i = (tr(A^i) - Omega_i - Psi_i) / 2i
//! ```
//!
//! The capability table decides which `(class, girth, i)` combinations have a
//! closed form for `Omega_i` and `Psi_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::cwwc::{psi_g2, psi_g4};
use crate::error::{Error, Result};
use crate::graph::{classify, girth, BipartiteGraph, DegreeProfile, GirthValue, GraphClass};
use crate::scalar::ExactInt;
use crate::trace::{exact_traces, TraceVector};
use crate::walks::{omega_biregular, omega_halfregular_6, omega_irregular_4, OmegaFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Capability {
    Supported,
    /// Not determined by spectrum and degree data in general ("IP").
    ImpossibleInGeneral,
    /// Determined in principle, but no closed form is implemented.
    NotImplemented,
}

impl Capability {
    pub fn verdict(self) -> &'static str {
        match self {
            Capability::Supported => "P",
            Capability::ImpossibleInGeneral => "IP",
            Capability::NotImplemented => "not implemented",
        }
    }
}

impl fmt::Display for Capability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.verdict())
    }
}

/// Whether `N_i` can be computed for a graph of this class and girth.
/// `i` is expected to be even and at least 4; anything else is
/// `NotImplemented`.
pub fn capability(class: GraphClass, girth: GirthValue, i: usize) -> Capability {
    use Capability::*;
    if i < 4 || !i.is_multiple_of(2) {
        return NotImplemented;
    }
    let g = match girth {
        GirthValue::Acyclic => return Supported,
        GirthValue::Finite(g) => g,
    };
    match class {
        GraphClass::BiRegular { .. } => {
            if i >= 2 * g {
                ImpossibleInGeneral
            } else if i <= g + 4 {
                Supported
            } else {
                NotImplemented
            }
        }
        GraphClass::VariableRegular { .. } | GraphClass::CheckRegular { .. } => {
            if i == 4 || (i == 6 && g >= 6) {
                Supported
            } else {
                ImpossibleInGeneral
            }
        }
        GraphClass::Irregular => {
            if i == 4 {
                Supported
            } else {
                ImpossibleInGeneral
            }
        }
    }
}

/// Formula family behind one reported count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Forest: no cycles of any length.
    Acyclic,
    /// Bi-regular, `i <= g`: no closed walk with cycle exists.
    BiRegular,
    /// Bi-regular, `i = g + 2`.
    BiRegularGirthPlus2,
    /// Bi-regular, `i = g + 4`.
    BiRegularGirthPlus4,
    /// Any class, `i = 4`, from the degree sum.
    Irregular4,
    /// Half-regular, `i = 6`, girth at least 6.
    HalfRegular6 { transposed: bool },
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::Acyclic => "acyclic",
            Method::BiRegular => "bi-regular",
            Method::BiRegularGirthPlus2 => "bi-regular+psi(g+2)",
            Method::BiRegularGirthPlus4 => "bi-regular+psi(g+4)",
            Method::Irregular4 => "irregular-4",
            Method::HalfRegular6 { transposed: false } => "variable-regular-6",
            Method::HalfRegular6 { transposed: true } => "check-regular-6",
        }
    }
}

/// The three terms behind `N_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTerms<T> {
    pub length: usize,
    pub trace: T,
    pub omega: T,
    pub omega_family: OmegaFamily,
    pub psi: T,
    pub cycles: T,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleReport<T> {
    pub girth: GirthValue,
    pub class: GraphClass,
    pub profile: DegreeProfile,
    pub counts: BTreeMap<usize, T>,
    pub terms: BTreeMap<usize, CountTerms<T>>,
    pub methods: BTreeMap<usize, Method>,
    /// Requested lengths that were not computed, with the reason.
    pub refused: BTreeMap<usize, Capability>,
    /// `None` when the graph is a forest (no traces needed).
    pub traces: Option<TraceVector<T>>,
}

/// `(tr - omega - psi) / 2i`, insisting on exact, non-negative division.
fn cycles_from<T: ExactInt>(length: usize, trace: &T, omega: &T, psi: &T) -> Result<T> {
    let residual = trace.sub_exact(omega)?.sub_exact(psi)?;
    let divisor = T::from_u64_exact(2 * length as u64)?;
    let (q, r) = residual.div_rem(&divisor);
    if !r.is_zero() || residual < T::zero() {
        return Err(Error::NonDivisibleTrace {
            length,
            residual: residual.to_string(),
            divisor: 2 * length,
        });
    }
    Ok(q)
}

fn trace_at<T: ExactInt>(traces: &TraceVector<T>, k: usize) -> Result<&T> {
    traces.get(k).ok_or(Error::InvalidLength(k))
}

/// `N_4` from the degree sum; valid for every bipartite graph.
pub fn n4_from_degrees<T: ExactInt>(
    profile: &DegreeProfile,
    traces: &TraceVector<T>,
) -> Result<CountTerms<T>> {
    let omega = omega_irregular_4::<T>(profile)?;
    let trace = trace_at(traces, 4)?.clone();
    let psi = T::zero();
    let cycles = cycles_from(4, &trace, &omega.omega, &psi)?;
    Ok(CountTerms {
        length: 4,
        trace,
        omega: omega.omega,
        omega_family: omega.family,
        psi,
        cycles,
    })
}

/// `N_6` for a half-regular (or bi-regular) graph of girth at least 6.
/// Check-regular graphs are handled by exchanging the two sides.
pub fn n6_half_regular<T: ExactInt>(
    profile: &DegreeProfile,
    girth: GirthValue,
    traces: &TraceVector<T>,
) -> Result<(CountTerms<T>, bool)> {
    if let GirthValue::Finite(g) = girth {
        if g < 6 {
            return Err(Error::GirthTooSmall {
                girth: g,
                required: 6,
            });
        }
    }
    let (n, d_v, w_degrees, transposed) = match (profile.d_v, profile.d_c) {
        (Some(d_v), _) => (profile.n(), d_v, &profile.w_degrees, false),
        (None, Some(d_c)) => (profile.m(), d_c, &profile.u_degrees, true),
        (None, None) => return Err(Error::WrongClass("half-regular")),
    };
    let omega = omega_halfregular_6::<T>(n, d_v, w_degrees)?;
    let trace = trace_at(traces, 6)?.clone();
    let psi = T::zero();
    let cycles = cycles_from(6, &trace, &omega.omega, &psi)?;
    Ok((
        CountTerms {
            length: 6,
            trace,
            omega: omega.omega,
            omega_family: omega.family,
            psi,
            cycles,
        },
        transposed,
    ))
}

/// Bi-regular counts for every even length in `lengths`, all `<= g + 4` and
/// `< 2g`. Lengths above `g` pull in the lower ones they depend on.
fn biregular_counts<T: ExactInt>(
    profile: &DegreeProfile,
    d_v: usize,
    d_c: usize,
    g: usize,
    lengths: &BTreeSet<usize>,
    traces: &TraceVector<T>,
) -> Result<BTreeMap<usize, (CountTerms<T>, Method)>> {
    let mut needed = lengths.clone();
    if let Some(&top) = lengths.iter().next_back() {
        needed.extend((g..=top).step_by(2));
    }
    let mut out: BTreeMap<usize, (CountTerms<T>, Method)> = BTreeMap::new();
    for &i in &needed {
        let omega = omega_biregular::<T>(profile.n(), profile.m(), d_v, d_c, i)?;
        let (psi, method) = if i <= g {
            (T::zero(), Method::BiRegular)
        } else if i == g + 2 {
            let n_g = &out[&g].0.cycles;
            (psi_g2(g, d_v, d_c, n_g)?.psi, Method::BiRegularGirthPlus2)
        } else if i == g + 4 {
            let n_g = &out[&g].0.cycles;
            let n_g2 = &out[&(g + 2)].0.cycles;
            (
                psi_g4(g, d_v, d_c, n_g, n_g2)?.psi,
                Method::BiRegularGirthPlus4,
            )
        } else {
            unreachable!("capability admits only lengths up to g + 4");
        };
        let trace = trace_at(traces, i)?.clone();
        let cycles = cycles_from(i, &trace, &omega.omega, &psi)?;
        out.insert(
            i,
            (
                CountTerms {
                    length: i,
                    trace,
                    omega: omega.omega,
                    omega_family: omega.family,
                    psi,
                    cycles,
                },
                method,
            ),
        );
    }
    out.retain(|i, _| lengths.contains(i));
    Ok(out)
}

/// Computes `N_i` for every supported `i` in `targets`; the rest are listed
/// in [`CycleReport::refused`] with their capability verdict.
pub fn count_cycles<T: ExactInt>(
    graph: &BipartiteGraph,
    targets: &[usize],
) -> Result<CycleReport<T>> {
    if targets.is_empty() {
        return Err(Error::EmptyTargets);
    }
    if let Some(&bad) = targets.iter().find(|&&i| i < 4 || !i.is_multiple_of(2)) {
        return Err(Error::InvalidLength(bad));
    }
    let (profile, class) = classify(graph);
    let girth = girth(graph);
    let mut report = CycleReport {
        girth,
        class,
        profile,
        counts: BTreeMap::new(),
        terms: BTreeMap::new(),
        methods: BTreeMap::new(),
        refused: BTreeMap::new(),
        traces: None,
    };

    let g = match girth {
        GirthValue::Acyclic => {
            for &i in targets {
                report.counts.insert(i, T::zero());
                report.methods.insert(i, Method::Acyclic);
            }
            return Ok(report);
        }
        GirthValue::Finite(g) => g,
    };

    let mut supported = BTreeSet::new();
    for &i in targets {
        match capability(class, girth, i) {
            Capability::Supported => {
                supported.insert(i);
            }
            verdict => {
                report.refused.insert(i, verdict);
            }
        }
    }
    let Some(&k_max) = supported.iter().next_back() else {
        return Ok(report);
    };
    let traces = exact_traces::<T>(graph, k_max)?;

    let computed: Vec<(CountTerms<T>, Method)> = match class {
        GraphClass::BiRegular { d_v, d_c } => {
            biregular_counts(&report.profile, d_v, d_c, g, &supported, &traces)?
                .into_values()
                .collect()
        }
        _ => supported
            .iter()
            .map(|&i| match i {
                4 => Ok((
                    n4_from_degrees(&report.profile, &traces)?,
                    Method::Irregular4,
                )),
                6 => {
                    let (terms, transposed) = n6_half_regular(&report.profile, girth, &traces)?;
                    Ok((terms, Method::HalfRegular6 { transposed }))
                }
                _ => unreachable!("capability admits only 4 and 6 here"),
            })
            .collect::<Result<_>>()?,
    };
    for (terms, method) in computed {
        report.counts.insert(terms.length, terms.cycles.clone());
        report.methods.insert(terms.length, method);
        report.terms.insert(terms.length, terms);
    }
    report.traces = Some(traces);
    Ok(report)
}

/// Lengths chosen by `--lengths auto`: `{g, g+2, g+4}` filtered by
/// capability. Empty for forests.
pub fn auto_lengths(class: GraphClass, girth: GirthValue) -> Vec<usize> {
    match girth {
        GirthValue::Acyclic => Vec::new(),
        GirthValue::Finite(g) => [g, g + 2, g + 4]
            .into_iter()
            .filter(|&i| capability(class, girth, i) == Capability::Supported)
            .collect(),
    }
}
