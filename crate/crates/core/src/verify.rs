//! Consistency sweeps: closed-form shift against weight counting, and the
//! symmetric-product decomposition against Macdonald's formula.

use std::fmt;

use crate::error::Result;
use crate::graded::GradedDims;
use crate::partition::{enumerate_pairs, enumerate_partitions, Partition};
use crate::shift::{shift_closed, shift_oracle, ShiftInput};
use crate::spaces::{betti_sym_component, macdonald_sym, CurveGenus};
use crate::weights::WeightTriple;

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_c2: u64,
    /// `l` ranges over `[-l_bound, l_bound]`.
    pub l_bound: i64,
    /// `l'` ranges over `[-lprime_bound, lprime_bound]`.
    pub lprime_bound: i64,
    pub triples: Vec<WeightTriple>,
}

impl VerifyConfig {
    pub fn new(max_c2: u64, l_bound: i64, lprime_bound: i64) -> Self {
        Self {
            max_c2,
            l_bound,
            lprime_bound,
            triples: standard_triples(),
        }
    }
}

/// `(1,2,10)`, `(1,3,100)`, `(2,5,1000)`.
pub fn standard_triples() -> Vec<WeightTriple> {
    [(1, 2, 10), (1, 3, 100), (2, 5, 1000)]
        .into_iter()
        .map(|(a, b, c)| WeightTriple::new(a, b, c).expect("valid triple"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Shift {
        input: ShiftInput,
        weights: WeightTriple,
        closed: u64,
        oracle: u64,
    },
    SymmetricProduct {
        alpha: Partition,
        decomposition: GradedDims,
        macdonald: GradedDims,
    },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Shift {
                input,
                weights,
                closed,
                oracle,
            } => write!(
                f,
                "shift mismatch at {input} w=({},{},{}): closed={closed} oracle={oracle}",
                weights.w1(),
                weights.w2(),
                weights.w3()
            ),
            Mismatch::SymmetricProduct {
                alpha,
                decomposition,
                macdonald,
            } => write!(
                f,
                "symmetric product mismatch at alpha={alpha}: decomposition={decomposition} macdonald={macdonald}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub cases: u64,
    pub mismatches: u64,
    pub first: Option<Mismatch>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }

    fn record(&mut self, mismatch: Option<Mismatch>) {
        self.cases += 1;
        if let Some(m) = mismatch {
            self.mismatches += 1;
            self.first.get_or_insert(m);
        }
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "OK" } else { "FAIL" };
        write!(
            f,
            "{status}: {} mismatches / {} cases",
            self.mismatches, self.cases
        )?;
        if let Some(m) = &self.first {
            write!(f, "\nfirst counterexample: {m}")?;
        }
        Ok(())
    }
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    run_with(config, shift_closed)
}

/// Runs the sweep with `closed` standing in for the closed-form shift.
pub fn run_with(
    config: &VerifyConfig,
    closed: impl Fn(&ShiftInput) -> u64,
) -> Result<VerifyReport> {
    let mut report = VerifyReport {
        cases: 0,
        mismatches: 0,
        first: None,
    };
    for n in 0..=config.max_c2 {
        for (alpha, beta) in enumerate_pairs(n)? {
            for l in -config.l_bound..=config.l_bound {
                for lprime in -config.lprime_bound..=config.lprime_bound {
                    let input = ShiftInput::new(alpha.clone(), beta.clone(), l, lprime);
                    let c = closed(&input);
                    for &w in &config.triples {
                        let o = shift_oracle(&input, w);
                        report.record((c != o).then(|| Mismatch::Shift {
                            input: input.clone(),
                            weights: w,
                            closed: c,
                            oracle: o,
                        }));
                    }
                }
            }
        }
    }
    for n in 0..=config.max_c2 {
        for alpha in enumerate_partitions(n)? {
            let factors = alpha
                .iter()
                .map(|(_, m)| macdonald_sym(u64::from(m), CurveGenus::ELLIPTIC))
                .collect::<Result<Vec<_>>>()?;
            let macdonald = GradedDims::tensor_all(&factors);
            let decomposition = betti_sym_component(&alpha, &Partition::empty());
            report.record(
                (decomposition != macdonald).then(|| Mismatch::SymmetricProduct {
                    alpha: alpha.clone(),
                    decomposition,
                    macdonald,
                }),
            );
        }
    }
    Ok(report)
}

/// Closed form with the `β` delta condition flipped from `m + i` to
/// `m - i`. Used to check that the sweep catches a broken shift formula.
#[doc(hidden)]
pub fn flipped_delta_shift(input: &ShiftInput) -> u64 {
    let m = input.offset();
    let sum = |p: &Partition, cond: &dyn Fn(i64) -> bool| -> u64 {
        p.iter()
            .map(|(j, mult)| {
                u64::from(mult) * (0..i64::from(j)).filter(|&i| cond(i)).count() as u64
            })
            .sum()
    };
    crate::shift::hilbert_part(&input.alpha)
        + sum(&input.alpha, &|i| m - i - 1 != 0)
        + crate::shift::hilbert_part(&input.beta)
        + sum(&input.beta, &|i| m - i != 0)
}
