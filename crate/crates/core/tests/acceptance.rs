//! Acceptance suite. Every criterion is checked exactly and reported on its
//! own `PASS`/`FAIL` line; run with `--nocapture` to see the report.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use ruled_betti::graded::GradedDims;
use ruled_betti::moduli::{
    betti_table, component_contribution, enumerate_components, splitting_types, ChernInvariants,
    SplittingType,
};
use ruled_betti::partition::{enumerate_pairs, enumerate_partitions, Partition};
use ruled_betti::shift::{shift_closed, shift_oracle, ShiftInput};
use ruled_betti::spaces::{betti_sym_component, macdonald_sym, CurveGenus};
use ruled_betti::verify::standard_triples;

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    check: fn() -> Outcome,
}

fn sweep_pairs(max_weight: u64) -> Vec<(Partition, Partition)> {
    (0..=max_weight)
        .flat_map(|n| enumerate_pairs(n).unwrap())
        .collect()
}

/// p(0..=n) from Euler's pentagonal recurrence, independent of enumeration.
fn partition_numbers(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n as i64 {
        let mut acc = 0;
        for k in 1i64.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += sign * p[(m - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += sign * p[(m - g2) as usize];
            }
        }
        p[m as usize] = acc;
    }
    p.into_iter().map(|x| x as u64).collect()
}

fn shift_oracle_equivalence() -> Outcome {
    let pairs = sweep_pairs(6);
    let p = partition_numbers(6);
    let expected_pairs: u64 = (0..=6)
        .map(|n| (0..=n).map(|k| p[k] * p[n - k]).sum::<u64>())
        .sum();
    if pairs.len() as u64 != expected_pairs {
        return Err(format!(
            "{} pairs enumerated, expected {expected_pairs}",
            pairs.len()
        ));
    }
    let mut cases = 0u64;
    for (alpha, beta) in &pairs {
        for l in -8..=8 {
            for lprime in -3..=3 {
                let input = ShiftInput::new(alpha.clone(), beta.clone(), l, lprime);
                let closed = shift_closed(&input);
                for w in standard_triples() {
                    cases += 1;
                    let oracle = shift_oracle(&input, w);
                    if closed != oracle {
                        return Err(format!("{input} {w:?}: closed {closed} vs oracle {oracle}"));
                    }
                }
            }
        }
    }
    Ok(format!("{} pairs, {cases} comparisons", pairs.len()))
}

fn macdonald_consistency() -> Outcome {
    let mut count = 0;
    for n in 0..=10 {
        for alpha in enumerate_partitions(n).unwrap() {
            let factors: Vec<GradedDims> = alpha
                .iter()
                .map(|(_, m)| macdonald_sym(u64::from(m), CurveGenus::ELLIPTIC).unwrap())
                .collect();
            let expected = GradedDims::tensor_all(&factors);
            let got = betti_sym_component(&alpha, &Partition::empty());
            if got != expected {
                return Err(format!("alpha={alpha}: {got} vs {expected}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} partitions"))
}

fn each_contribution(
    mut f: impl FnMut(&ruled_betti::ComponentContribution) -> Result<(), String>,
) -> Outcome {
    let mut count = 0;
    for c2 in 0..=6 {
        for lprime in -1..=1 {
            let comps = enumerate_components(ChernInvariants::new(lprime, c2), -2, 2).unwrap();
            for comp in comps {
                f(&component_contribution(&comp, lprime))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} components"))
}

fn euler_vanishing() -> Outcome {
    each_contribution(|c| {
        let empty = c.component.alpha.is_empty() && c.component.beta.is_empty();
        let chi = c.shifted().euler_char();
        let expected = BigInt::from(i32::from(empty));
        if chi != expected {
            return Err(format!("{:?}: euler characteristic {chi}", c.component));
        }
        Ok(())
    })
}

fn rank_formula() -> Outcome {
    each_contribution(|c| {
        let expected: BigUint = c
            .component
            .alpha
            .iter()
            .chain(c.component.beta.iter())
            .map(|(_, m)| BigUint::from(4 * m))
            .product();
        if c.homology.total_rank() != expected || c.shifted().total_rank() != expected {
            return Err(format!(
                "{:?}: rank {} vs {expected}",
                c.component,
                c.homology.total_rank()
            ));
        }
        Ok(())
    })
}

fn stabilization() -> Outcome {
    let mut count = 0;
    for c2 in 0..=4u64 {
        for lprime in -3..=3 {
            let comps = enumerate_components(ChernInvariants::new(lprime, c2), -8, 8).unwrap();
            for comp in comps {
                if (lprime + 2 * comp.l).unsigned_abs() <= c2 {
                    continue;
                }
                let (a, b) = (&comp.alpha, &comp.beta);
                let stable = 2 * a.weight() - a.length() + 2 * b.weight() - b.length();
                let got = component_contribution(&comp, lprime).shift;
                if got != stable {
                    return Err(format!("{comp:?} l'={lprime}: shift {got} vs {stable}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} components in the stable range"))
}

fn swap_symmetry() -> Outcome {
    let mut count = 0;
    for (alpha, beta) in sweep_pairs(6) {
        for l in -8..=8 {
            for lprime in -3..=3 {
                let input = ShiftInput::new(alpha.clone(), beta.clone(), l, lprime);
                let swapped = ShiftInput::new(beta.clone(), alpha.clone(), -l, 1 - lprime);
                if shift_closed(&input) != shift_closed(&swapped) {
                    return Err(format!("{input}"));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} inputs"))
}

/// Exhaustive search over a box that contains every solution: the constraint
/// `d > d'` gives `d > F/2`, and each summand of
/// `c2 = d·degE + (F - 2d)·degB1 + c2I1 + c2I2` is bounded by
/// `c2 + |F|` once `d > F/2`.
fn box_search(deg_e: i64, f: i64, c2: u64) -> Vec<SplittingType> {
    let c2 = c2 as i64;
    let reach = c2 + f.abs() + 2;
    let mut out = Vec::new();
    for d in (f - reach)..=reach {
        let dprime = f - d;
        if d <= dprime {
            continue;
        }
        for deg_b1 in -reach..=0 {
            if deg_e == 0 && deg_b1 >= 0 {
                continue;
            }
            for c2_i1 in 0..=reach {
                for c2_i2 in 0..=reach {
                    if d * deg_e + (f - 2 * d) * deg_b1 + c2_i1 + c2_i2 == c2 {
                        out.push(SplittingType {
                            d,
                            dprime,
                            deg_b1,
                            c2_i1: c2_i1 as u64,
                            c2_i2: c2_i2 as u64,
                            deg_e,
                            fiber_degree: f,
                        });
                    }
                }
            }
        }
    }
    out
}

fn splitting_completeness() -> Outcome {
    let mut total = 0;
    for deg_e in 0..=1 {
        for f in -4..=0 {
            for c2 in 0..=6u64 {
                let mut got = splitting_types(deg_e, f, c2).map_err(|e| e.to_string())?;
                let mut expected = box_search(deg_e, f, c2);
                got.sort();
                expected.sort();
                if got != expected {
                    return Err(format!(
                        "degE={deg_e} F={f} c2={c2}: {} enumerated vs {} in box",
                        got.len(),
                        expected.len()
                    ));
                }
                total += got.len();
            }
        }
    }
    Ok(format!("{total} splitting types across 70 cases"))
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ruled-betti"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?} exited with {}", out.status));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn golden_table() -> Outcome {
    let one = run_cli(&[
        "betti", "--lprime", "0", "--c2", "1", "--l-min", "0", "--l-max", "0",
    ])?;
    if one != "1 + 2t + 2t^2 + 2t^3 + t^4\n" {
        return Err(format!("c2=1 printed {one:?}"));
    }
    let zero = run_cli(&[
        "betti", "--lprime", "0", "--c2", "0", "--l-min", "0", "--l-max", "0",
    ])?;
    if zero != "1\n" {
        return Err(format!("c2=0 printed {zero:?}"));
    }
    for lprime in -3..=3 {
        for c2 in 0..=4 {
            let chern = ChernInvariants::new(lprime, c2);
            let whole = betti_table(chern, -2, 2).unwrap();
            let parts = betti_table(chern, -2, 0)
                .unwrap()
                .direct_sum(&betti_table(chern, 1, 2).unwrap());
            if whole != parts {
                return Err(format!("window additivity fails at l'={lprime} c2={c2}"));
            }
        }
    }
    Ok("golden strings and window additivity".into())
}

#[test]
fn acceptance_criteria() {
    let criteria = [
        Criterion {
            name: "1 shift-index oracle equivalence",
            budget: Some(Duration::from_secs(10)),
            check: shift_oracle_equivalence,
        },
        Criterion {
            name: "2 Macdonald consistency",
            budget: Some(Duration::from_secs(5)),
            check: macdonald_consistency,
        },
        Criterion {
            name: "3 Euler-characteristic vanishing",
            budget: Some(Duration::from_secs(5)),
            check: euler_vanishing,
        },
        Criterion {
            name: "4 rank formula",
            budget: None,
            check: rank_formula,
        },
        Criterion {
            name: "5 stabilization",
            budget: None,
            check: stabilization,
        },
        Criterion {
            name: "6 swap symmetry",
            budget: None,
            check: swap_symmetry,
        },
        Criterion {
            name: "7 splitting-type finiteness and completeness",
            budget: Some(Duration::from_secs(5)),
            check: splitting_completeness,
        },
        Criterion {
            name: "8 golden table",
            budget: None,
            check: golden_table,
        },
    ];

    let mut failures = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.check)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(budget)) = (&outcome, c.budget) {
            if elapsed > budget {
                outcome = Err(format!("took {elapsed:?}, budget {budget:?}"));
            }
        }
        match &outcome {
            Ok(detail) => println!("PASS  {:<48} {detail} ({elapsed:.2?})", c.name),
            Err(why) => {
                println!("FAIL  {:<48} {why} ({elapsed:.2?})", c.name);
                failures.push(c.name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
