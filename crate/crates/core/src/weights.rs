//! Torus weights at a fixed point of the moduli space.
//!
//! Under the inverse scaling action on the fibers of `S → C`:
//!
//! - `π_* O(kσ) = ⊕_{j=0}^{k} L^{k-j}`, the summand `L^{k-j}` having weight
//!   `k - j` ([`pushforward_weights`]);
//! - the conormal piece `I_D^k / I_D^{k+1} ≅ L^k` has weight `k`
//!   ([`conormal_weight`]).
//!
//! Twisting by the framing torus with weights `(w1, w2, w3)` and writing
//! `m = l' + 2l`, the normal space to the fixed component indexed by
//! `(α, β, l)` splits into four families over parts `j` and `0 <= i < j`:
//!
//! | family | weight                      | multiplicity |
//! |--------|-----------------------------|--------------|
//! | (i)    | `w2 - w1 - w3 (m + i)`      | `b_j`        |
//! | (ii)   | `w1 - w2 + w3 (m + i + 1)`  | `b_j`        |
//! | (iii)  | `w2 - w1 + w3 (i + 1 - m)`  | `a_j`        |
//! | (iv)   | `w1 - w2 + w3 (m - i)`      | `a_j`        |

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Weights `(w1, w2, w3)` of the three-torus.
///
/// The ordering `w3 ≫ w2 ≫ w1 > 0` needed for the sign analysis is realized
/// exactly by `w1 > 0` and `w3 > w2 - w1 > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightTriple {
    w1: i64,
    w2: i64,
    w3: i64,
}

impl WeightTriple {
    pub const DEFAULT: WeightTriple = WeightTriple {
        w1: 1,
        w2: 2,
        w3: 10,
    };

    pub fn new(w1: i64, w2: i64, w3: i64) -> Result<Self> {
        let gap = w2.checked_sub(w1);
        match gap {
            Some(gap) if w1 > 0 && gap > 0 && w3 > gap => Ok(Self { w1, w2, w3 }),
            _ => Err(Error::InvalidWeightTriple { w1, w2, w3 }),
        }
    }

    pub fn w1(&self) -> i64 {
        self.w1
    }

    pub fn w2(&self) -> i64 {
        self.w2
    }

    pub fn w3(&self) -> i64 {
        self.w3
    }
}

impl Default for WeightTriple {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// A finite torus representation as `weight -> multiplicity`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeightMultiset {
    entries: BTreeMap<i64, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, weight: i64, multiplicity: u64) {
        if multiplicity != 0 {
            *self.entries.entry(weight).or_default() += multiplicity;
        }
    }

    pub fn multiplicity(&self, weight: i64) -> u64 {
        self.entries.get(&weight).copied().unwrap_or(0)
    }

    /// `(weight, multiplicity)` in ascending weight.
    pub fn iter(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.entries.iter().map(|(&w, &m)| (w, m))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Dimension of the strictly negative weight space. Weight 0 is not
    /// negative.
    pub fn negative_count(&self) -> u64 {
        self.entries.range(..0).map(|(_, &m)| m).sum()
    }

    /// JSON array of `{"weight": w, "multiplicity": m}` in ascending weight.
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.iter()
                .map(|(w, m)| serde_json::json!({ "weight": w, "multiplicity": m }))
                .collect(),
        )
    }
}

impl FromIterator<(i64, u64)> for WeightMultiset {
    fn from_iter<I: IntoIterator<Item = (i64, u64)>>(iter: I) -> Self {
        let mut out = Self::new();
        for (w, m) in iter {
            out.insert(w, m);
        }
        out
    }
}

/// One `weight × multiplicity` line per entry, ascending.
impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, m) in self.iter() {
            writeln!(f, "{w} × {m}")?;
        }
        Ok(())
    }
}

/// `(twist exponent, weight)` of each summand `L^{k-j}` of `π_* O(kσ)`,
/// `j = 0..=k`.
pub fn pushforward_weights(k: u32) -> Vec<(i64, i64)> {
    (0..=k)
        .map(|j| {
            let e = i64::from(k - j);
            (e, e)
        })
        .collect()
}

/// Weight of `I_D^k / I_D^{k+1} ≅ L^k`.
pub fn conormal_weight(k: u32) -> i64 {
    i64::from(k)
}

/// The four weight families of the normal space at the fixed point indexed
/// by `(alpha, beta, l)` with `c1 = -l'σ`.
pub fn ext_weight_families(
    alpha: &Partition,
    beta: &Partition,
    l: i64,
    lprime: i64,
    w: WeightTriple,
) -> WeightMultiset {
    let m = lprime + 2 * l;
    let gap = w.w2 - w.w1;
    let mut out = WeightMultiset::new();
    for (j, b) in beta.iter() {
        for i in 0..i64::from(j) {
            out.insert(gap - w.w3 * (m + i), u64::from(b));
            out.insert(-gap + w.w3 * (m + i + 1), u64::from(b));
        }
    }
    for (j, a) in alpha.iter() {
        for i in 0..i64::from(j) {
            out.insert(gap + w.w3 * (i + 1 - m), u64::from(a));
            out.insert(-gap + w.w3 * (m - i), u64::from(a));
        }
    }
    out
}

/// Dimension of the negative weight space of `ms`.
pub fn negative_count(ms: &WeightMultiset) -> u64 {
    ms.negative_count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_pairs;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn ms(entries: &[(i64, u64)]) -> WeightMultiset {
        entries.iter().copied().collect()
    }

    #[test]
    fn weight_triple_validation() {
        assert!(WeightTriple::new(1, 2, 10).is_ok());
        assert!(WeightTriple::new(1, 3, 100).is_ok());
        assert!(WeightTriple::new(2, 5, 1000).is_ok());
        assert!(WeightTriple::new(1, 2, 2).is_ok());
        for (a, b, c) in [
            (1, 2, 1),
            (2, 2, 10),
            (3, 2, 10),
            (0, 2, 10),
            (-1, 2, 10),
            (1, 5, 4),
        ] {
            assert_eq!(
                WeightTriple::new(a, b, c),
                Err(Error::InvalidWeightTriple {
                    w1: a,
                    w2: b,
                    w3: c
                })
            );
        }
    }

    #[test]
    fn pushforward_and_conormal() {
        assert_eq!(pushforward_weights(0), vec![(0, 0)]);
        assert_eq!(pushforward_weights(1), vec![(1, 1), (0, 0)]);
        assert_eq!(pushforward_weights(2), vec![(2, 2), (1, 1), (0, 0)]);
        assert_eq!(conormal_weight(0), 0);
        assert_eq!(conormal_weight(1), 1);
        assert_eq!(conormal_weight(5), 5);
    }

    #[test]
    fn family_examples() {
        let w = WeightTriple::DEFAULT;
        let e = Partition::empty();
        for (l, lp) in [(0, 0), (7, -3), (-4, 1)] {
            assert!(ext_weight_families(&e, &e, l, lp, w).is_empty());
        }
        assert_eq!(
            ext_weight_families(&p("1^1"), &e, 0, 0, w),
            ms(&[(-1, 1), (11, 1)])
        );
        assert_eq!(
            ext_weight_families(&e, &p("1^1"), 0, 0, w),
            ms(&[(1, 1), (9, 1)])
        );
        // Hand evaluation at m = 0 for α = 2^1, β = 1^1:
        // (iii) 1 + 10(i+1) = 11, 21; (iv) -1 - 10i = -1, -11; (i) 1; (ii) 9.
        assert_eq!(
            ext_weight_families(&p("2^1"), &p("1^1"), 0, 0, w),
            ms(&[(-11, 1), (-1, 1), (1, 1), (9, 1), (11, 1), (21, 1)])
        );
    }

    #[test]
    fn negative_count_examples() {
        assert_eq!(negative_count(&WeightMultiset::new()), 0);
        assert_eq!(negative_count(&ms(&[(-1, 1), (11, 1)])), 1);
        assert_eq!(negative_count(&ms(&[(-3, 2), (0, 5), (4, 1)])), 2);
    }

    #[test]
    fn equal_weights_merge() {
        let x = ms(&[(3, 1), (3, 2), (0, 0)]);
        assert_eq!(x.iter().collect::<Vec<_>>(), vec![(3, 3)]);
        assert_eq!(x.to_string(), "3 × 3\n");
    }

    #[test]
    fn total_multiplicity_is_twice_the_weight() {
        for n in 0..=5 {
            for (alpha, beta) in enumerate_pairs(n).unwrap() {
                for l in -3..=3 {
                    let fam = ext_weight_families(&alpha, &beta, l, 1, WeightTriple::DEFAULT);
                    assert_eq!(fam.total_multiplicity(), 2 * n);
                }
            }
        }
    }

    /// Each family's sign depends only on the offset `m ± i`.
    #[test]
    fn sign_characterization() {
        let triples = [(1, 2, 10), (1, 3, 100), (2, 5, 1000), (1, 2, 2)];
        for (a, b, c) in triples {
            let w = WeightTriple::new(a, b, c).unwrap();
            let gap = b - a;
            for m in -12i64..=12 {
                for i in 0..8i64 {
                    assert_eq!(gap - c * (m + i) < 0, m + i >= 1);
                    assert_eq!(-gap + c * (m + i + 1) < 0, m + i <= -1);
                    assert_eq!(gap + c * (i + 1 - m) < 0, m - i > 1);
                    assert_eq!(-gap + c * (m - i) < 0, m - i <= 0);
                }
            }
            // Same statement through the public routine: a single part of
            // size j isolates one family pair.
            for j in 1..=4u32 {
                let single = Partition::from_parts(&[j]).unwrap();
                for m in -6i64..=6 {
                    let on_beta = ext_weight_families(&Partition::empty(), &single, 0, m, w);
                    let on_alpha = ext_weight_families(&single, &Partition::empty(), 0, m, w);
                    let expect_beta = (0..i64::from(j)).filter(|i| m + i != 0).count() as u64;
                    let expect_alpha = (0..i64::from(j)).filter(|i| m - i != 1).count() as u64;
                    assert_eq!(on_beta.negative_count(), expect_beta);
                    assert_eq!(on_alpha.negative_count(), expect_alpha);
                }
            }
        }
    }

    #[test]
    fn negative_count_is_regime_invariant() {
        let triples: Vec<WeightTriple> = [(1, 2, 10), (1, 3, 100), (2, 5, 1000)]
            .into_iter()
            .map(|(a, b, c)| WeightTriple::new(a, b, c).unwrap())
            .collect();
        for n in 0..=5 {
            for (alpha, beta) in enumerate_pairs(n).unwrap() {
                for l in -8..=8 {
                    for lp in -3..=3 {
                        let counts: Vec<u64> = triples
                            .iter()
                            .map(|&w| ext_weight_families(&alpha, &beta, l, lp, w).negative_count())
                            .collect();
                        assert!(counts.windows(2).all(|c| c[0] == c[1]));
                    }
                }
            }
        }
    }

    #[test]
    fn json_rendering() {
        let x = ms(&[(-1, 1), (11, 2)]);
        assert_eq!(
            x.to_json_value().to_string(),
            r#"[{"weight":-1,"multiplicity":1},{"weight":11,"multiplicity":2}]"#
        );
    }
}
