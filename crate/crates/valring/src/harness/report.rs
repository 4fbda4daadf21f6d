//! Trial records and report writers.
//!
//! CSV bytes are deterministic for a fixed config and seed: floats print in
//! Rust's shortest round-trip form, and wall time lives only in the summary,
//! never in records.

use serde::Serialize;
use std::fmt::Write as _;

#[derive(Debug, Clone, Serialize)]
pub struct TrialRecord {
    pub experiment: String,
    pub ring: String,
    pub trial: u64,
    /// Input sizes in a compact `k=v;k=v` form.
    pub inputs: String,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
    pub pass: bool,
}

impl TrialRecord {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.experiment,
            self.ring,
            self.trial,
            self.inputs,
            self.lhs,
            self.rhs,
            self.ratio,
            self.pass
        )
    }
}

pub const CSV_HEADER: &str = "experiment,ring,trial,inputs,lhs,rhs,ratio,pass";

#[derive(Debug, Clone, Serialize)]
pub struct ExperimentAggregate {
    pub experiment: String,
    pub trials: u64,
    pub failures: u64,
}

/// Hypothesis-satisfying theorem-2 runs: the reported (not asserted) ratio.
#[derive(Debug, Clone, Serialize)]
pub struct Thm2RatioRow {
    pub ring: String,
    pub trial: u64,
    pub a_size: u64,
    pub ratio: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub total_trials: u64,
    pub failures: u64,
    pub per_experiment: Vec<ExperimentAggregate>,
    pub thm2_ratios: Vec<Thm2RatioRow>,
    pub wall_time_secs: f64,
}

impl RunSummary {
    pub fn from_records(records: &[TrialRecord], ratios: Vec<Thm2RatioRow>, wall: f64) -> Self {
        let mut per: Vec<ExperimentAggregate> = Vec::new();
        for rec in records {
            match per.iter_mut().find(|a| a.experiment == rec.experiment) {
                Some(agg) => {
                    agg.trials += 1;
                    agg.failures += u64::from(!rec.pass);
                }
                None => per.push(ExperimentAggregate {
                    experiment: rec.experiment.clone(),
                    trials: 1,
                    failures: u64::from(!rec.pass),
                }),
            }
        }
        RunSummary {
            total_trials: records.len() as u64,
            failures: records.iter().filter(|r| !r.pass).count() as u64,
            per_experiment: per,
            thm2_ratios: ratios,
            wall_time_secs: wall,
        }
    }

    /// Human-readable block for the terminal.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "summary: {} trials, {} failures, {:.2}s",
            self.total_trials, self.failures, self.wall_time_secs
        );
        for agg in &self.per_experiment {
            let _ = writeln!(
                out,
                "  {}: {} trials, {} failures",
                agg.experiment, agg.trials, agg.failures
            );
        }
        if !self.thm2_ratios.is_empty() {
            let _ = writeln!(out, "  thm2 ratios (hypothesis-satisfying runs):");
            let _ = writeln!(out, "    {:<18} {:>5} {:>4} {:>10}", "ring", "trial", "|A|", "ratio");
            for row in &self.thm2_ratios {
                let _ = writeln!(
                    out,
                    "    {:<18} {:>5} {:>4} {:>10.4}",
                    row.ring, row.trial, row.a_size, row.ratio
                );
            }
        }
        out
    }
}

/// CSV body: mandatory header plus one row per record. Does not include the
/// summary, so the bytes depend only on (config, master_seed).
pub fn render_csv(records: &[TrialRecord]) -> String {
    let mut out = String::with_capacity(64 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for rec in records {
        out.push_str(&rec.csv_row());
        out.push('\n');
    }
    out
}

/// JSON report: the record array plus the summary object.
pub fn render_json(records: &[TrialRecord], summary: &RunSummary) -> String {
    #[derive(Serialize)]
    struct Report<'a> {
        records: &'a [TrialRecord],
        summary: &'a RunSummary,
    }
    serde_json::to_string_pretty(&Report { records, summary }).expect("plain data")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(pass: bool) -> TrialRecord {
        TrialRecord {
            experiment: "thm1".into(),
            ring: "Z/2^2".into(),
            trial: 3,
            inputs: "|A|=3;|B|=3;|C|=3".into(),
            lhs: 4.0,
            rhs: 2.0,
            ratio: 2.0,
            pass,
        }
    }

    #[test]
    fn csv_shape() {
        let text = render_csv(&[rec(true), rec(false)]);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[0], CSV_HEADER);
        assert_eq!(lines[1], "thm1,Z/2^2,3,|A|=3;|B|=3;|C|=3,4,2,2,true");
        assert!(lines[2].ends_with("false"));
    }

    #[test]
    fn summary_counts() {
        let records = vec![rec(true), rec(false), rec(true)];
        let s = RunSummary::from_records(&records, Vec::new(), 0.5);
        assert_eq!(s.total_trials, 3);
        assert_eq!(s.failures, 1);
        assert_eq!(s.per_experiment.len(), 1);
        assert_eq!(s.per_experiment[0].trials, 3);
    }

    #[test]
    fn json_is_parseable() {
        let records = vec![rec(true)];
        let s = RunSummary::from_records(&records, Vec::new(), 0.1);
        let text = render_json(&records, &s);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["records"][0]["lhs"], 4.0);
        assert_eq!(v["summary"]["total_trials"], 1);
    }
}
