//! Fixed components of the torus action and the localized Betti table.
//!
//! With `c1 = -l'σ` and `c2 >= 0`, the fixed components of the moduli space
//! are indexed by an integer `l` and a pair of partitions `(α, β)` with
//! `|α| + |β| = c2`. Each is a product of symmetric powers of the curve and
//! contributes its homology shifted up by twice its shift index:
//!
//! ```text
//! H_k(M) = ⊕_l ⊕_{|α|+|β|=c2} H_{k - 2d(α,β,l,l')}(Sym^α C × Sym^β C)
//! ```
//!
//! The sum over `l` is infinite, so every query here takes an explicit finite
//! window `[l_min, l_max]`. Once `|l' + 2l|` exceeds the largest part the
//! shift is constant ([`crate::shift::stable_shift`]), so any window is a
//! finite core plus copies of a stable tail.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::partition::{enumerate_pairs, Partition};
use crate::shift::{shift_closed, ShiftInput};
use crate::spaces::betti_sym_component;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChernInvariants {
    /// `c1 = -l'σ`.
    pub lprime: i64,
    pub c2: u64,
}

impl ChernInvariants {
    pub fn new(lprime: i64, c2: u64) -> Self {
        Self { lprime, c2 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedComponent {
    pub l: i64,
    pub alpha: Partition,
    pub beta: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentContribution {
    pub component: FixedComponent,
    /// Complex codimension of the attracting stratum.
    pub shift: u64,
    /// `H_*(Sym^α C × Sym^β C)` before shifting.
    pub homology: GradedDims,
}

impl ComponentContribution {
    /// The homology as it appears in the moduli space.
    pub fn shifted(&self) -> GradedDims {
        self.homology.shift(self.shift as u32)
    }
}

fn check_window(l_min: i64, l_max: i64) -> Result<()> {
    if l_min > l_max {
        return Err(Error::EmptyWindow { l_min, l_max });
    }
    Ok(())
}

/// Smallest `l` with `l >= -l'/2`. Components with smaller `l` are still
/// computed; callers may flag them.
pub fn strata_lower_bound(lprime: i64) -> i64 {
    (-lprime).div_euclid(2) + i64::from((-lprime).rem_euclid(2) != 0)
}

/// Components for each `l` in the window (ascending), then each pair in
/// [`enumerate_pairs`] order.
pub fn enumerate_components(
    chern: ChernInvariants,
    l_min: i64,
    l_max: i64,
) -> Result<Vec<FixedComponent>> {
    check_window(l_min, l_max)?;
    let pairs = enumerate_pairs(chern.c2)?;
    let mut out = Vec::with_capacity(pairs.len() * (l_max - l_min + 1) as usize);
    for l in l_min..=l_max {
        for (alpha, beta) in &pairs {
            out.push(FixedComponent {
                l,
                alpha: alpha.clone(),
                beta: beta.clone(),
            });
        }
    }
    Ok(out)
}

pub fn component_contribution(comp: &FixedComponent, lprime: i64) -> ComponentContribution {
    let input = ShiftInput::new(comp.alpha.clone(), comp.beta.clone(), comp.l, lprime);
    ComponentContribution {
        component: comp.clone(),
        shift: shift_closed(&input),
        homology: betti_sym_component(&comp.alpha, &comp.beta),
    }
}

pub fn contributions(
    chern: ChernInvariants,
    l_min: i64,
    l_max: i64,
) -> Result<Vec<ComponentContribution>> {
    Ok(enumerate_components(chern, l_min, l_max)?
        .iter()
        .map(|c| component_contribution(c, chern.lprime))
        .collect())
}

/// Betti numbers of the part of the moduli space whose fixed components
/// have `l` in `[l_min, l_max]`.
pub fn betti_table(chern: ChernInvariants, l_min: i64, l_max: i64) -> Result<GradedDims> {
    Ok(total_of(&contributions(chern, l_min, l_max)?))
}

pub fn total_of(contribs: &[ComponentContribution]) -> GradedDims {
    let mut total = GradedDims::zero();
    for c in contribs {
        total.add_assign(&c.shifted());
    }
    total
}

/// A fiber splitting type `O(d) ⊕ O(d')` with `d > d'`, together with the
/// data of the canonical extension
/// `0 → I_1(dσ) ⊗ π^*B_1 → E → I_2(d'σ) ⊗ π^*B_2 → 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplittingType {
    pub d: i64,
    pub dprime: i64,
    pub deg_b1: i64,
    pub c2_i1: u64,
    pub c2_i2: u64,
    pub deg_e: i64,
    /// `F = d + d'`.
    pub fiber_degree: i64,
}

impl SplittingType {
    /// `d·deg E + (F - 2d)·deg B_1 + c2(I_1) + c2(I_2)`.
    pub fn second_chern_class(&self) -> i64 {
        self.d * self.deg_e
            + (self.fiber_degree - 2 * self.d) * self.deg_b1
            + self.c2_i1 as i64
            + self.c2_i2 as i64
    }
}

/// Every splitting type with framing degree `deg_e ∈ {0, 1}`, fiber degree
/// `fiber_degree <= 0` and second Chern class `c2`.
///
/// Constraints: `d > d' = F - d`, `deg B_1 < 0` when `deg E = 0` and
/// `deg B_1 <= 0` when `deg E = 1`. Then `F - 2d < 0` makes
/// `(F - 2d)·deg B_1 >= 0`, and the minimal value of
/// `d·deg E + (F - 2d)·deg B_1` grows with `d` (through the second term for
/// `deg E = 0`, the first for `deg E = 1`), which bounds `d` from above.
///
/// Output is ordered by `d` ascending, `deg B_1` descending, `c2(I_1)`
/// ascending.
pub fn splitting_types(deg_e: i64, fiber_degree: i64, c2: u64) -> Result<Vec<SplittingType>> {
    if !(0..=1).contains(&deg_e) {
        return Err(Error::InvalidFramingDegree(deg_e));
    }
    if fiber_degree > 0 {
        return Err(Error::PositiveFiberDegree(fiber_degree));
    }
    let c2 = c2 as i64;
    // |deg B_1| is at least 1 for deg E = 0.
    let min_b = 1 - deg_e;
    let mut out = Vec::new();
    // d > F/2.
    let mut d = fiber_degree.div_euclid(2) + 1;
    loop {
        let slope = 2 * d - fiber_degree;
        if d * deg_e + slope * min_b > c2 {
            break;
        }
        let mut b = min_b;
        loop {
            let used = d * deg_e + slope * b;
            if used > c2 {
                break;
            }
            let rest = (c2 - used) as u64;
            for c2_i1 in 0..=rest {
                out.push(SplittingType {
                    d,
                    dprime: fiber_degree - d,
                    deg_b1: -b,
                    c2_i1,
                    c2_i2: rest - c2_i1,
                    deg_e,
                    fiber_degree,
                });
            }
            b += 1;
        }
        d += 1;
    }
    Ok(out)
}
