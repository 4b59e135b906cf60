//! Homological shift of a fixed component.
//!
//! The shift `d(α, β, l, l')` is the complex rank of the negative part of the
//! normal bundle. It is the sum of a Hilbert-scheme contribution
//! `|α| - ℓ(α) + |β| - ℓ(β)` and the negative weight count of the four
//! families in [`crate::weights`]. With `m = l' + 2l` the closed form is
//!
//! ```text
//! d = |α| - ℓ(α) + Σ_{j>i≥0} a_j (1 - δ(m - i - 1))
//!   + |β| - ℓ(β) + Σ_{j>i≥0} b_j (1 - δ(m + i))
//! ```
//!
//! where `j` runs over part sizes and `0 <= i < j`.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::weights::{ext_weight_families, WeightTriple};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ShiftInput {
    pub alpha: Partition,
    pub beta: Partition,
    pub l: i64,
    pub lprime: i64,
}

impl ShiftInput {
    pub fn new(alpha: Partition, beta: Partition, l: i64, lprime: i64) -> Self {
        Self {
            alpha,
            beta,
            l,
            lprime,
        }
    }

    /// `l' + 2l`, the only way `l` and `l'` enter the shift.
    pub fn offset(&self) -> i64 {
        self.lprime + 2 * self.l
    }
}

impl std::fmt::Display for ShiftInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "alpha={} beta={} l={} lprime={}",
            self.alpha, self.beta, self.l, self.lprime
        )
    }
}

/// Contribution of the punctual Hilbert scheme stratum: `|p| - ℓ(p)`.
pub fn hilbert_part(p: &Partition) -> u64 {
    p.weight() - p.length()
}

/// `Σ_{j>i≥0} mult_j · [offset(i) ≠ 0]` over the parts of `p`.
fn delta_sum(p: &Partition, offset: impl Fn(i64) -> i64) -> u64 {
    p.iter()
        .map(|(j, mult)| {
            let surviving = (0..i64::from(j)).filter(|&i| offset(i) != 0).count() as u64;
            u64::from(mult) * surviving
        })
        .sum()
}

/// The shift index by its closed form.
pub fn shift_closed(input: &ShiftInput) -> u64 {
    let m = input.offset();
    let alpha = hilbert_part(&input.alpha) + delta_sum(&input.alpha, |i| m - i - 1);
    let beta = hilbert_part(&input.beta) + delta_sum(&input.beta, |i| m + i);
    alpha + beta
}

/// The shift index by counting negative weights of the normal families at
/// the torus weights `w`.
pub fn shift_oracle(input: &ShiftInput, w: WeightTriple) -> u64 {
    let families = ext_weight_families(&input.alpha, &input.beta, input.l, input.lprime, w);
    hilbert_part(&input.alpha) + hilbert_part(&input.beta) + families.negative_count()
}

/// Shift once `l' + 2l` lies outside `[-(maxpart - 1), maxpart]`, where every
/// delta term vanishes.
pub fn stable_shift(alpha: &Partition, beta: &Partition) -> u64 {
    2 * alpha.weight() - alpha.length() + 2 * beta.weight() - beta.length()
}
