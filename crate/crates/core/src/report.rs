//! Text, JSON and CSV renderings of computed results.

use serde::{Deserialize, Serialize};

use crate::graded::GradedDims;
use crate::moduli::{ChernInvariants, ComponentContribution, SplittingType};
use crate::weights::WeightMultiset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub l: i64,
    pub alpha: String,
    pub beta: String,
    pub shift: u64,
    /// Contribution to the moduli homology, already shifted.
    pub poincare: GradedDims,
}

impl From<&ComponentContribution> for ComponentReport {
    fn from(c: &ComponentContribution) -> Self {
        Self {
            l: c.component.l,
            alpha: c.component.alpha.to_string(),
            beta: c.component.beta.to_string(),
            shift: c.shift,
            poincare: c.shifted(),
        }
    }
}

/// The JSON document emitted by `betti --format json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiReport {
    pub lprime: i64,
    pub c2: u64,
    pub l_window: [i64; 2],
    pub components: Vec<ComponentReport>,
    pub total: GradedDims,
}

impl BettiReport {
    pub fn new(
        chern: ChernInvariants,
        l_min: i64,
        l_max: i64,
        contribs: &[ComponentContribution],
        total: GradedDims,
    ) -> Self {
        Self {
            lprime: chern.lprime,
            c2: chern.c2,
            l_window: [l_min, l_max],
            components: contribs.iter().map(ComponentReport::from).collect(),
            total,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

pub fn component_line(c: &ComponentReport) -> String {
    format!(
        "l={} alpha={} beta={} shift={} : {}",
        c.l, c.alpha, c.beta, c.shift, c.poincare
    )
}

fn csv_string(write_rows: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write_rows(&mut w).expect("writing CSV to memory");
    let bytes = w.into_inner().expect("flushing CSV to memory");
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

/// `degree,dimension` rows.
pub fn graded_csv(x: &GradedDims) -> String {
    csv_string(|w| {
        w.write_record(["degree", "dimension"])?;
        for (k, d) in x.iter() {
            w.write_record([k.to_string(), d.to_string()])?;
        }
        Ok(())
    })
}

pub fn graded_text(x: &GradedDims) -> String {
    format!("{x}\n")
}

pub fn graded_json(x: &GradedDims) -> String {
    format!(
        "{}\n",
        serde_json::to_string_pretty(x).expect("graded dims serialize")
    )
}

pub fn render_graded(x: &GradedDims, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => graded_text(x),
        OutputFormat::Json => graded_json(x),
        OutputFormat::Csv => graded_csv(x),
    }
}

pub fn render_betti(report: &BettiReport, format: OutputFormat, verbose: bool) -> String {
    match format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv if verbose => components_csv(&report.components),
        OutputFormat::Csv => graded_csv(&report.total),
        OutputFormat::Text => {
            let mut out = String::new();
            if verbose {
                for c in &report.components {
                    out.push_str(&component_line(c));
                    out.push('\n');
                }
            }
            out.push_str(&graded_text(&report.total));
            out
        }
    }
}

/// `l,alpha,beta,shift,poincare` rows; `poincare` is the polynomial string.
pub fn components_csv(components: &[ComponentReport]) -> String {
    csv_string(|w| {
        w.write_record(["l", "alpha", "beta", "shift", "poincare"])?;
        for c in components {
            w.write_record([
                c.l.to_string(),
                c.alpha.clone(),
                c.beta.clone(),
                c.shift.to_string(),
                c.poincare.to_string(),
            ])?;
        }
        Ok(())
    })
}

pub fn render_components(components: &[ComponentReport], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => components
            .iter()
            .map(|c| component_line(c) + "\n")
            .collect(),
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(components).expect("components serialize")
        ),
        OutputFormat::Csv => components_csv(components),
    }
}

pub fn render_splitting_types(types: &[SplittingType], format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => types
            .iter()
            .map(|t| {
                format!(
                    "d={} d'={} degB1={} c2I1={} c2I2={}\n",
                    t.d, t.dprime, t.deg_b1, t.c2_i1, t.c2_i2
                )
            })
            .collect(),
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(types).expect("splitting types serialize")
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["d", "dprime", "degB1", "c2I1", "c2I2", "degE", "F"])?;
            for t in types {
                w.write_record([
                    t.d.to_string(),
                    t.dprime.to_string(),
                    t.deg_b1.to_string(),
                    t.c2_i1.to_string(),
                    t.c2_i2.to_string(),
                    t.deg_e.to_string(),
                    t.fiber_degree.to_string(),
                ])?;
            }
            Ok(())
        }),
    }
}

pub fn render_weights(ms: &WeightMultiset, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{ms}negative: {}\n", ms.negative_count()),
        OutputFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&serde_json::json!({
                "weights": ms.to_json_value(),
                "negative": ms.negative_count(),
            }))
            .expect("weights serialize")
        ),
        OutputFormat::Csv => csv_string(|w| {
            w.write_record(["weight", "multiplicity"])?;
            for (wt, m) in ms.iter() {
                w.write_record([wt.to_string(), m.to_string()])?;
            }
            Ok(())
        }),
    }
}

/// Scalar results (shift indices) in any format.
pub fn render_scalar(name: &str, value: u64, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => format!("{value}\n"),
        OutputFormat::Json => format!("{}\n", serde_json::json!({ name: value })),
        OutputFormat::Csv => format!("{name}\n{value}\n"),
    }
}
