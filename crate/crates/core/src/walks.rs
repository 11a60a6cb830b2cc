//! Closed cycle-free walk counts.
//!
//! `S(x, y, i)` is the number of closed cycle-free walks of length `i` from a
//! degree-`x` node to itself when its neighbours have degree `y`, the next
//! layer degree `x`, and so on. It equals the number of closed walks from the
//! root of the infinite alternating tree with branching `x` at the root, then
//! `y - 1`, `x - 1`, `y - 1`, ...
//!
//! `Q(x, y, i)` counts the subset of those walks that return to the root only
//! at the final step. Every closed walk splits uniquely into first-return
//! excursions, so `S(i)` is the sum over compositions of `i / 2` of products of
//! `Q`. The closed forms below are tabulated for `i <= 10`; the tree dynamic
//! program handles any even length.

use crate::error::{Error, Result};
use crate::graph::DegreeProfile;
use crate::scalar::{sum_exact, ExactInt};

/// Default bound on the walk length accepted by [`s_tree_dp`].
pub const DEFAULT_TREE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFreeWalkCount<T> {
    pub x: u64,
    pub y: u64,
    pub i: usize,
    pub s_value: T,
    pub q_value: Option<T>,
}

fn check_degrees(x: u64, y: u64) -> Result<()> {
    match (x, y) {
        (0, _) => Err(Error::InvalidDegree(x)),
        (_, 0) => Err(Error::InvalidDegree(y)),
        _ => Ok(()),
    }
}

/// First-return counts `Q(x, y, i)` for `i` in {2, 4, 6, 8, 10}.
pub fn q_closed_form<T: ExactInt>(x: u64, y: u64, i: usize) -> Result<T> {
    check_degrees(x, y)?;
    let xs = T::from_u64_exact(x)?;
    let a = T::from_u64_exact(x - 1)?;
    let b = T::from_u64_exact(y - 1)?;
    let inner = match i {
        2 => T::one(),
        4 => b,
        6 => b.pow_exact(2)?.add_exact(&a.mul_exact(&b)?)?,
        8 => sum_exact([
            b.pow_exact(3)?,
            a.mul_exact(&b.pow_exact(2)?)?.scale(3)?,
            a.pow_exact(2)?.mul_exact(&b)?,
        ])?,
        10 => sum_exact([
            b.pow_exact(4)?,
            a.mul_exact(&b.pow_exact(3)?)?.scale(6)?,
            a.pow_exact(2)?.mul_exact(&b.pow_exact(2)?)?.scale(6)?,
            a.pow_exact(3)?.mul_exact(&b)?,
        ])?,
        _ => return Err(Error::UnsupportedLength(i)),
    };
    xs.mul_exact(&inner)
}

/// `S(x, y, i)` from the tabulated closed forms, `i` in {2, 4, 6, 8, 10}.
pub fn s_closed_form<T: ExactInt>(x: u64, y: u64, i: usize) -> Result<CycleFreeWalkCount<T>> {
    check_degrees(x, y)?;
    if !matches!(i, 2 | 4 | 6 | 8 | 10) {
        return Err(Error::UnsupportedLength(i));
    }
    let xs = T::from_u64_exact(x)?;
    let a = T::from_u64_exact(x - 1)?;
    let b = T::from_u64_exact(y - 1)?;
    let s_value = match i {
        2 => xs.clone(),
        4 => xs.mul_exact(&xs.add_exact(&b)?)?,
        6 => xs.mul_exact(&sum_exact([
            xs.pow_exact(2)?,
            xs.mul_exact(&b)?.scale(2)?,
            a.mul_exact(&b)?,
            b.pow_exact(2)?,
        ])?)?,
        8 => {
            let first = sum_exact([
                b.pow_exact(3)?,
                a.mul_exact(&b.pow_exact(2)?)?.scale(3)?,
                a.pow_exact(2)?.mul_exact(&b)?,
            ])?;
            let second = sum_exact([
                xs.scale(2)?
                    .mul_exact(&b.pow_exact(2)?.add_exact(&a.mul_exact(&b)?)?)?,
                xs.mul_exact(&b.pow_exact(2)?)?,
                xs.pow_exact(2)?.mul_exact(&b)?.scale(3)?,
                xs.pow_exact(3)?,
            ])?;
            xs.mul_exact(&first)?.add_exact(&xs.mul_exact(&second)?)?
        }
        _ => {
            // compositions of 5: 5, 4+1 (x2), 3+2 (x2), 3+1+1 (x3), 2+2+1 (x3),
            // 2+1+1+1 (x4), 1+1+1+1+1
            let q = |len| q_closed_form::<T>(x, y, len);
            let (q2, q4, q6, q8, q10) = (q(2)?, q(4)?, q(6)?, q(8)?, q(10)?);
            sum_exact([
                q10,
                q2.mul_exact(&q8)?.scale(2)?,
                q4.mul_exact(&q6)?.scale(2)?,
                q2.mul_exact(&q4.pow_exact(2)?)?.scale(3)?,
                q2.pow_exact(2)?.mul_exact(&q6)?.scale(3)?,
                q2.pow_exact(3)?.mul_exact(&q4)?.scale(4)?,
                q2.pow_exact(5)?,
            ])?
        }
    };
    Ok(CycleFreeWalkCount {
        x,
        y,
        i,
        s_value,
        q_value: Some(q_closed_form(x, y, i)?),
    })
}

/// `S(x, y, i)` by dynamic programming over tree levels, bounded by
/// [`DEFAULT_TREE_LIMIT`].
pub fn s_tree_dp<T: ExactInt>(x: u64, y: u64, i: usize) -> Result<CycleFreeWalkCount<T>> {
    s_tree_dp_bounded(x, y, i, DEFAULT_TREE_LIMIT)
}

/// Walks on the alternating tree are tracked per level: descending from level
/// `l` multiplies by the branching of `l`, ascending multiplies by one. The
/// tree is never materialised.
pub fn s_tree_dp_bounded<T: ExactInt>(
    x: u64,
    y: u64,
    i: usize,
    limit: usize,
) -> Result<CycleFreeWalkCount<T>> {
    check_degrees(x, y)?;
    if i < 2 || !i.is_multiple_of(2) {
        return Err(Error::InvalidLength(i));
    }
    if i > limit {
        return Err(Error::ResourceLimit { len: i, limit });
    }
    let height = i / 2;
    let branching = (0..height)
        .map(|level| {
            T::from_u64_exact(match level {
                0 => x,
                l if l % 2 == 1 => y - 1,
                _ => x - 1,
            })
        })
        .collect::<Result<Vec<T>>>()?;

    let mut walks = vec![T::zero(); height + 1];
    walks[0] = T::one();
    for _ in 0..i {
        let mut next = vec![T::zero(); height + 1];
        for (level, count) in walks.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            if level < height {
                next[level + 1] =
                    next[level + 1].add_exact(&count.mul_exact(&branching[level])?)?;
            }
            if level > 0 {
                next[level - 1] = next[level - 1].add_exact(count)?;
            }
        }
        walks = next;
    }
    Ok(CycleFreeWalkCount {
        x,
        y,
        i,
        s_value: walks.swap_remove(0),
        q_value: None,
    })
}

/// Which formula produced an [`OmegaValue`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OmegaFamily {
    /// `n S(d_v, d_c, i) + m S(d_c, d_v, i)` with tabulated `S`.
    BiRegularClosedForm,
    /// The same sum with `S` from the tree dynamic program.
    BiRegularTreeDp,
    /// `sum_v d(v) (2 d(v) - 1)`, valid for every bipartite graph.
    Irregular4,
    /// The length-6 aggregate for variable-regular graphs of girth >= 6.
    HalfRegular6,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaValue<T> {
    pub i: usize,
    pub omega: T,
    pub family: OmegaFamily,
}

/// Closed cycle-free walks of length `i` in a `(d_v, d_c)`-regular graph with
/// `n` variable and `m` check nodes. Valid for `i <= 2g - 2`.
pub fn omega_biregular<T: ExactInt>(
    n: usize,
    m: usize,
    d_v: usize,
    d_c: usize,
    i: usize,
) -> Result<OmegaValue<T>> {
    let lhs = n as u128 * d_v as u128;
    let rhs = m as u128 * d_c as u128;
    if lhs != rhs {
        return Err(Error::InconsistentParameters { lhs, rhs });
    }
    if i < 2 || !i.is_multiple_of(2) {
        return Err(Error::InvalidLength(i));
    }
    let closed_form = i <= 10;
    let family = if closed_form {
        OmegaFamily::BiRegularClosedForm
    } else {
        OmegaFamily::BiRegularTreeDp
    };
    if lhs == 0 {
        return Ok(OmegaValue {
            i,
            omega: T::zero(),
            family,
        });
    }
    let s = |x: usize, y: usize| -> Result<T> {
        let (x, y) = (x as u64, y as u64);
        let c = if closed_form {
            s_closed_form(x, y, i)?
        } else {
            s_tree_dp_bounded(x, y, i, usize::MAX)?
        };
        Ok(c.s_value)
    };
    let omega = s(d_v, d_c)?
        .mul_exact(&T::from_u64_exact(n as u64)?)?
        .add_exact(&s(d_c, d_v)?.mul_exact(&T::from_u64_exact(m as u64)?)?)?;
    Ok(OmegaValue { i, omega, family })
}

/// `Omega_4 = sum_v d(v) (2 d(v) - 1)` over both sides.
pub fn omega_irregular_4<T: ExactInt>(profile: &DegreeProfile) -> Result<OmegaValue<T>> {
    let omega = sum_exact(
        profile
            .u_degrees
            .iter()
            .chain(&profile.w_degrees)
            .map(|&d| {
                let d = d as i128;
                T::from_i128_exact(d * (2 * d - 1))
            })
            .collect::<Result<Vec<T>>>()?,
    )?;
    Ok(OmegaValue {
        i: 4,
        omega,
        family: OmegaFamily::Irregular4,
    })
}

/// `Omega_6` for a variable-regular graph: `n` variable nodes of degree `d_v`
/// and check degrees `w_degrees`. Requires girth at least 6 (not checked here).
pub fn omega_halfregular_6<T: ExactInt>(
    n: usize,
    d_v: usize,
    w_degrees: &[usize],
) -> Result<OmegaValue<T>> {
    let dv = d_v as i128;
    let variable_side = T::from_i128_exact(dv * (1 + 3 * (dv - 1) + 2 * (dv - 1) * (dv - 2)))?
        .mul_exact(&T::from_u64_exact(n as u64)?)?;
    let check_terms = w_degrees
        .iter()
        .map(|&d| {
            let d = d as i128;
            let t = d * (3 * d - 2)
                + 2 * d * (d - 1) * (d - 2)
                + 6 * d * (d - 1) * (dv - 1)
                + 3 * d * (d - 1 + dv - 1);
            T::from_i128_exact(t)
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(OmegaValue {
        i: 6,
        omega: variable_side.add_exact(&sum_exact(check_terms)?)?,
        family: OmegaFamily::HalfRegular6,
    })
}
