//! Closed walks with cycle (CWWCs) in bi-regular graphs.
//!
//! For lengths up to `2g - 2` every CWWC is one cycle plus closed cycle-free
//! walks hanging off its nodes, and at least one cycle edge is traversed only
//! once. Counting the undirected, start-agnostic shapes and multiplying by
//! `2i` therefore gives the directed count `Psi_i`.
//!
//! These are pure functions of `(g, d_v, d_c, N_g, N_{g+2})`; they never look
//! at the graph.

use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// What a [`PsiValue`] was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiInputs<T> {
    pub girth: usize,
    pub d_v: usize,
    pub d_c: usize,
    pub n_g: T,
    pub n_g2: Option<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiValue<T> {
    pub i: usize,
    pub psi: T,
    pub inputs: PsiInputs<T>,
}

fn check_girth(g: usize, required: usize) -> Result<()> {
    if g < required {
        return Err(Error::GirthTooSmall { girth: g, required });
    }
    if !g.is_multiple_of(2) {
        return Err(Error::InvalidLength(g));
    }
    Ok(())
}

/// Undirected `(c+2)`-CWWC shapes per `c`-cycle: one extra length-2 excursion,
/// either onto a non-cycle edge or back along a cycle edge.
fn single_excursion_coefficient(cycle_len: usize, d_v: i128, d_c: i128) -> i128 {
    let c = cycle_len as i128;
    c / 2 * (d_v + d_c) - c
}

/// `Psi_{g+2} = N_g (g/2 (d_v + d_c) - g) 2(g + 2)`.
pub fn psi_g2<T: ExactInt>(g: usize, d_v: usize, d_c: usize, n_g: &T) -> Result<PsiValue<T>> {
    check_girth(g, 4)?;
    let i = g + 2;
    let coeff = single_excursion_coefficient(g, d_v as i128, d_c as i128);
    let psi = n_g.scale(coeff)?.scale(2 * i as i128)?;
    Ok(PsiValue {
        i,
        psi,
        inputs: PsiInputs {
            girth: g,
            d_v,
            d_c,
            n_g: n_g.clone(),
            n_g2: None,
        },
    })
}

/// Per-`g`-cycle coefficient of `N_g` in `Psi_{g+4} / 2(g+4)`.
fn double_excursion_coefficient(g: usize, d_v: i128, d_c: i128) -> i128 {
    let g = g as i128;
    let h = g / 2;
    let (a, b) = (d_v - 2, d_c - 2);
    let pairs = h * (h - 1) / 2 + h;
    // one length-4 excursion leaving the cycle through a fresh edge
    let off_cycle = h * a * (d_c - 1) + h * b * (d_v - 1);
    // two length-2 excursions at distinct nodes, plus the length-4 shapes
    // that revisit the same off-cycle edge
    let two_attachments = pairs * a * a + pairs * b * b + h * h * a * b;
    let on_cycle = g * (g - 1) / 2 + 2 * g + (g + 2) * (h * a + h * b);
    off_cycle + two_attachments + on_cycle
}

/// `Psi_{g+4}` for girth `g >= 6`.
pub fn psi_g4<T: ExactInt>(
    g: usize,
    d_v: usize,
    d_c: usize,
    n_g: &T,
    n_g2: &T,
) -> Result<PsiValue<T>> {
    check_girth(g, 6)?;
    let i = g + 4;
    let (dv, dc) = (d_v as i128, d_c as i128);
    let from_g2 = n_g2.scale(single_excursion_coefficient(g + 2, dv, dc))?;
    let from_g = n_g.scale(double_excursion_coefficient(g, dv, dc))?;
    let psi = from_g2.add_exact(&from_g)?.scale(2 * i as i128)?;
    Ok(PsiValue {
        i,
        psi,
        inputs: PsiInputs {
            girth: g,
            d_v,
            d_c,
            n_g: n_g.clone(),
            n_g2: Some(n_g2.clone()),
        },
    })
}
