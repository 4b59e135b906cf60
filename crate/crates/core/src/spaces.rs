//! Rational Betti numbers of the spaces fixed components are built from.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graded::GradedDims;
use crate::partition::{Partition, MAX_WEIGHT};

/// Genus of a smooth projective curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CurveGenus(pub u32);

impl CurveGenus {
    /// The only genus used when assembling moduli homology.
    pub const ELLIPTIC: CurveGenus = CurveGenus(1);
}

/// `H_*(P^n)`: one dimension in each even degree up to `2n`.
pub fn betti_projective(n: u32) -> GradedDims {
    let mut out = GradedDims::zero();
    for k in 0..=n {
        out.add_assign(&GradedDims::monomial(2 * k, 1u32));
    }
    out
}

/// `H_*(C)` for a curve of genus `g`: `(1, 2g, 1)`.
pub fn betti_curve(genus: CurveGenus) -> GradedDims {
    GradedDims::monomial(0, 1u32)
        .direct_sum(&GradedDims::monomial(1, 2 * genus.0))
        .direct_sum(&GradedDims::monomial(2, 1u32))
}

/// `H_*(Sym^α C × Sym^β C)` for the elliptic curve `C`, where
/// `Sym^α C = Π_{a_i ≠ 0} Sym^{a_i} C`.
///
/// Each factor `Sym^{a} C` is a `P^{a-1}`-bundle over `C` through the
/// Abel–Jacobi map, so it contributes `H_*(P^{a-1}) ⊗ H_*(C)`.
pub fn betti_sym_component(alpha: &Partition, beta: &Partition) -> GradedDims {
    let curve = betti_curve(CurveGenus::ELLIPTIC);
    let factors: Vec<GradedDims> = alpha
        .iter()
        .chain(beta.iter())
        .map(|(_, m)| betti_projective(m - 1).tensor(&curve))
        .collect();
    GradedDims::tensor_all(&factors)
}

/// `H_*(Sym^n C)` for a genus-`g` curve, read off Macdonald's generating
/// function
///
/// ```text
/// Σ_n P(Sym^n C; t) q^n = (1 + q t)^{2g} / ((1 - q)(1 - q t^2))
/// ```
///
/// by expanding the series to order `q^n`. This is a reference routine for
/// cross-checking [`betti_sym_component`]; it accepts any genus.
pub fn macdonald_sym(n: u64, genus: CurveGenus) -> Result<GradedDims> {
    if n > MAX_WEIGHT {
        return Err(Error::WeightTooLarge {
            weight: n,
            max: MAX_WEIGHT,
        });
    }
    let n = n as usize;
    let two_g = 2 * genus.0 as usize;

    // Series in q truncated after q^n, coefficients dense polynomials in t.
    type Series = Vec<Vec<BigUint>>;
    let mul = |a: &Series, b: &Series| -> Series {
        let mut out: Series = vec![Vec::new(); n + 1];
        for (i, pa) in a.iter().enumerate() {
            for (j, pb) in b.iter().enumerate().take(n + 1 - i) {
                let slot = &mut out[i + j];
                for (s, ca) in pa.iter().enumerate() {
                    for (u, cb) in pb.iter().enumerate() {
                        if slot.len() <= s + u {
                            slot.resize(s + u + 1, BigUint::zero());
                        }
                        slot[s + u] += ca * cb;
                    }
                }
            }
        }
        out
    };

    // (1 + q t)^{2g}
    let mut numerator: Series = vec![Vec::new(); n + 1];
    let mut binom = BigUint::one();
    for k in 0..=two_g.min(n) {
        let mut poly = vec![BigUint::zero(); k + 1];
        poly[k] = binom.clone();
        numerator[k] = poly;
        binom = binom * BigUint::from(two_g - k) / BigUint::from(k + 1);
    }
    // 1 / (1 - q)
    let geometric: Series = vec![vec![BigUint::one()]; n + 1];
    // 1 / (1 - q t^2)
    let geometric_t2: Series = (0..=n)
        .map(|b| {
            let mut poly = vec![BigUint::zero(); 2 * b + 1];
            poly[2 * b] = BigUint::one();
            poly
        })
        .collect();

    let series = mul(&mul(&numerator, &geometric), &geometric_t2);
    Ok(GradedDims::from_dense(&series[n]))
}
