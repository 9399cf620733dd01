use std::fs;

use improper_core::experiments::*;
use improper_core::{mix_seed, RngSeed};

fn config(json: &str) -> ExperimentConfig {
    ExperimentConfig::from_json_str(json).unwrap()
}

#[test]
fn complete_graph_config() {
    let c = config(r#"{"n": 5, "p": 1.0, "t_spec": {"absolute": 1}, "trials": 1, "master_seed": 3, "solver": "exact"}"#);
    let out = run_experiment(&c).unwrap();
    assert_eq!(out.records.len(), 1);
    assert_eq!(out.records[0].chi_exact, Some(3));
    assert_eq!(out.records[0].chi_upper_greedy, 3);
}

#[test]
fn json_round_trip() {
    let c = config(r#"{"n": [12, 20], "p": 0.4, "t_spec": {"tau": 0.7}, "trials": 3, "master_seed": 8}"#);
    let out = run_experiment(&c).unwrap();
    let bytes = encode_experiment(&out, OutputFormat::Json).unwrap();
    let back: ExperimentOutcome = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(back, out);
    let value: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
    for key in ["chi_predicted", "alpha_predicted", "k_star", "step_value"] {
        assert!(value["theory"]["20"].get(key).is_some(), "{key}");
    }
}

#[test]
fn csv_layout() {
    let c = config(r#"{"n": 15, "p": 0.5, "t_spec": {"absolute": 2}, "trials": 4, "master_seed": 1}"#);
    let out = run_experiment(&c).unwrap();
    let text = String::from_utf8(encode_experiment(&out, OutputFormat::Csv).unwrap()).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], TRIAL_COLUMNS.join(","));
    assert_eq!(lines.len(), 1 + 4 + 2);
    assert!(lines[5].starts_with("mean,,15,0.5,2,"));
    assert!(lines[6].starts_with("stddev,,15,0.5,2,"));
    let first: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(first.len(), TRIAL_COLUMNS.len());
    assert_eq!(first[1], mix_seed(RngSeed(1), 0).0.to_string());
}

#[test]
fn empty_outcome_is_header_only() {
    let out = ExperimentOutcome { records: vec![], summary: vec![], theory: Default::default() };
    let text = String::from_utf8(encode_experiment(&out, OutputFormat::Csv).unwrap()).unwrap();
    assert_eq!(text, format!("{}\n", TRIAL_COLUMNS.join(",")));
}

#[test]
fn files_are_byte_identical_across_runs_and_workers() {
    let dir = tempfile::tempdir().unwrap();
    let base = r#"{"n": [30, 40], "p": 0.5, "t_spec": {"absolute": 1}, "trials": 6, "master_seed": 99, "solver": "both""#;
    let mut contents = Vec::new();
    for (i, workers) in [1, 4, 4, 2].iter().enumerate() {
        let c = config(&format!("{base}, \"workers\": {workers}}}"));
        let stem = dir.path().join(format!("run{i}"));
        let written = emit_results(&run_experiment(&c).unwrap(), &stem).unwrap();
        contents.push(written.iter().map(|p| fs::read(p).unwrap()).collect::<Vec<_>>());
    }
    assert!(contents.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn step_mode_config() {
    let c = config(r#"{"n": 150, "p": 0.5, "t_spec": {"x": 2.5}, "trials": 3, "master_seed": 4, "mode": "step"}"#);
    let reports = run_step_experiment(&c).unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0].t, 30);
    assert_eq!(reports[0].step_value, 3);
    let text = String::from_utf8(encode_step(&reports, OutputFormat::Csv).unwrap()).unwrap();
    assert_eq!(text.lines().next().unwrap(), STEP_COLUMNS.join(","));
    assert_eq!(text.lines().count(), 4);
    assert!(matches!(
        ExperimentConfig::from_json_str(r#"{"n": 150, "p": 0.5, "t_spec": {"x": 2}, "trials": 3, "master_seed": 4, "mode": "step"}"#),
        Err(improper_core::Error::Config(_))
    ));
}

#[test]
fn timings_are_opt_in() {
    let c = config(r#"{"n": 20, "p": 0.5, "t_spec": {"absolute": 0}, "trials": 2, "master_seed": 5, "timings": true}"#);
    let out = run_experiment(&c).unwrap();
    assert!(out.records.iter().all(|r| r.wall_time_ms > 0.0));
}
