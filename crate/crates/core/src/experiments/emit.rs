use std::path::{Path, PathBuf};

use super::{ExperimentOutcome, StepReport, SummaryRow, TrialRecord};
use crate::io::write_all_or_nothing;
use crate::{Error, Result};

/// Significant digits kept in every emitted float.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Rounds to [`SIGNIFICANT_DIGITS`] significant digits. Non-finite values pass through.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x)
}

/// Shortest decimal form of `round_sig(x)`.
pub fn format_float(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        "0".into()
    } else {
        r.to_string()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl OutputFormat {
    pub fn extension(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Json => "json",
        }
    }
}

/// CSV column order for trial records.
pub const TRIAL_COLUMNS: [&str; 11] = [
    "trial_index",
    "derived_seed",
    "n",
    "p",
    "t",
    "alpha_hat",
    "alpha_exact_flag",
    "chi_upper_greedy",
    "chi_upper_lovasz",
    "chi_lower_ratio",
    "wall_time_ms",
];

/// CSV column order for step-experiment trials.
pub const STEP_COLUMNS: [&str; 10] = [
    "trial_index",
    "derived_seed",
    "n",
    "p",
    "t",
    "chi_upper_lovasz",
    "step_value",
    "upper_holds",
    "lower_certified",
    "concluded",
];

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::precondition(format!("csv encoding failed: {e}"));
    w.write_record(header).map_err(csv_err)?;
    for row in rows {
        w.write_record(&row).map_err(csv_err)?;
    }
    w.into_inner().map_err(|e| Error::precondition(format!("csv encoding failed: {e}")))
}

fn trial_row(r: &TrialRecord) -> Vec<String> {
    vec![
        r.trial_index.to_string(),
        r.derived_seed.to_string(),
        r.n.to_string(),
        format_float(r.p),
        r.t.to_string(),
        r.alpha_hat.to_string(),
        r.alpha_exact_flag.to_string(),
        r.chi_upper_greedy.to_string(),
        r.chi_upper_lovasz.to_string(),
        r.chi_lower_ratio.to_string(),
        format_float(r.wall_time_ms),
    ]
}

/// Summary rows are flagged by `mean` or `stddev` in the `trial_index` column
/// and leave `derived_seed` empty.
fn summary_rows(s: &SummaryRow) -> [Vec<String>; 2] {
    [("mean", &s.mean), ("stddev", &s.stddev)].map(|(label, f)| {
        vec![
            label.to_string(),
            String::new(),
            s.n.to_string(),
            format_float(s.p),
            s.t.to_string(),
            format_float(f.alpha_hat),
            format_float(f.alpha_exact_flag),
            format_float(f.chi_upper_greedy),
            format_float(f.chi_upper_lovasz),
            format_float(f.chi_lower_ratio),
            format_float(f.wall_time_ms),
        ]
    })
}

/// Records in index order, then two summary rows per vertex count.
pub fn experiment_csv(records: &[TrialRecord], summary: &[SummaryRow]) -> Result<Vec<u8>> {
    let rows = records.iter().map(trial_row).chain(summary.iter().flat_map(summary_rows));
    csv_bytes(&TRIAL_COLUMNS, rows)
}

pub fn step_csv(reports: &[StepReport]) -> Result<Vec<u8>> {
    let rows = reports.iter().flat_map(|r| {
        r.trials.iter().map(move |s| {
            vec![
                s.trial_index.to_string(),
                s.derived_seed.to_string(),
                r.n.to_string(),
                format_float(r.p),
                r.t.to_string(),
                s.chi_upper_lovasz.to_string(),
                r.step_value.to_string(),
                s.upper_holds.to_string(),
                r.lower_certified.to_string(),
                s.concluded.to_string(),
            ]
        })
    });
    csv_bytes(&STEP_COLUMNS, rows)
}

fn json_bytes<T: serde::Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// `base` with `.ext` appended (an existing extension is kept).
pub fn output_path(base: &Path, format: OutputFormat) -> PathBuf {
    let mut s = base.as_os_str().to_owned();
    s.push(".");
    s.push(format.extension());
    PathBuf::from(s)
}

/// Serializes an experiment in one format.
pub fn encode_experiment(outcome: &ExperimentOutcome, format: OutputFormat) -> Result<Vec<u8>> {
    match format {
        OutputFormat::Csv => experiment_csv(&outcome.records, &outcome.summary),
        OutputFormat::Json => json_bytes(outcome),
    }
}

pub fn encode_step(reports: &[StepReport], format: OutputFormat) -> Result<Vec<u8>> {
    match format {
        OutputFormat::Csv => step_csv(reports),
        OutputFormat::Json => json_bytes(&reports),
    }
}

/// Writes `base.csv` and `base.json`; returns the paths written.
pub fn emit_results(outcome: &ExperimentOutcome, base: &Path) -> Result<Vec<PathBuf>> {
    emit_with(base, |f| encode_experiment(outcome, f))
}

pub fn emit_step_results(reports: &[StepReport], base: &Path) -> Result<Vec<PathBuf>> {
    emit_with(base, |f| encode_step(reports, f))
}

fn emit_with(base: &Path, encode: impl Fn(OutputFormat) -> Result<Vec<u8>>) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for format in [OutputFormat::Csv, OutputFormat::Json] {
        files.push((output_path(base, format), encode(format)?));
    }
    write_all_or_nothing(&files)?;
    Ok(files.into_iter().map(|(p, _)| p).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(format_float(0.5), "0.5");
        assert_eq!(format_float(1.0 / 3.0), "0.333333333333");
        assert_eq!(format_float(2.0 / 3.0), "0.666666666667");
        assert_eq!(format_float(123456789.0123456), "123456789.012");
        assert_eq!(format_float(0.0), "0");
        assert_eq!(format_float(-0.0), "0");
        assert_eq!(round_sig(round_sig(std::f64::consts::PI)), round_sig(std::f64::consts::PI));
    }

    #[test]
    fn header_only_csv() {
        let bytes = experiment_csv(&[], &[]).unwrap();
        assert_eq!(String::from_utf8(bytes).unwrap(), format!("{}\n", TRIAL_COLUMNS.join(",")));
    }
}
