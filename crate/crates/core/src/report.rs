//! One-shot analysis of a configuration, as text or JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::incidence::{Configuration, SimpleLine};
use crate::wedge::{brute_force_wedges, coverage_from, CoverageReport, WedgeCertificate};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineSummary {
    pub count: usize,
    /// Points per line mapped to the number of lines of that size.
    pub size_histogram: BTreeMap<usize, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub lines: LineSummary,
    pub simple_lines: Vec<SimpleLine>,
    pub max_line_size: usize,
    pub three_bounded: bool,
    pub wedges: Vec<WedgeCertificate>,
    pub coverage: CoverageReport,
}

pub fn analyze(config: &Configuration) -> AnalysisReport {
    let incidence = config.spanned_lines();
    let wedges = brute_force_wedges(config);
    let coverage = coverage_from(config, &wedges);
    let max_line_size = incidence.max_line_size();
    AnalysisReport {
        n: config.len(),
        lines: LineSummary {
            count: incidence.len(),
            size_histogram: incidence.size_histogram(),
        },
        simple_lines: config.simple_lines(),
        max_line_size,
        three_bounded: max_line_size <= 3,
        wedges,
        coverage,
    }
}

impl AnalysisReport {
    pub fn line_count(&self) -> usize {
        self.lines.count
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Checks that the histogram accounts for every pair of points exactly
    /// once and that the boundedness flag agrees with the largest line.
    pub fn is_consistent(&self) -> bool {
        let pairs: usize = self
            .lines
            .size_histogram
            .iter()
            .map(|(&size, &count)| count * size * (size - 1) / 2)
            .sum();
        pairs == self.n * (self.n - 1) / 2 && self.three_bounded == (self.max_line_size <= 3)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "points: {}", self.n);
        let _ = writeln!(out, "spanned lines: {}", self.lines.count);
        for (size, count) in &self.lines.size_histogram {
            let _ = writeln!(out, "  {count} line(s) with {size} points");
        }
        let _ = writeln!(out, "max line size: {}", self.max_line_size);
        let _ = writeln!(
            out,
            "3-bounded: {}",
            if self.three_bounded { "yes" } else { "no" }
        );
        let _ = writeln!(out, "simple lines: {}", self.simple_lines.len());
        for s in &self.simple_lines {
            let _ = writeln!(
                out,
                "  {} through {} and {}",
                s.key, s.endpoints.0, s.endpoints.1
            );
        }
        let _ = writeln!(out, "simple wedges: {}", self.wedges.len());
        for w in &self.wedges {
            let _ = writeln!(out, "  apex {} arms {} {}", w.apex, w.arm1, w.arm2);
        }
        let covered = self.coverage.entries.iter().filter(|e| e.covered).count();
        let _ = writeln!(
            out,
            "coverage: {covered}/{} simple lines extend to a wedge",
            self.coverage.entries.len()
        );
        for e in self.coverage.entries.iter().filter(|e| !e.covered) {
            let _ = writeln!(
                out,
                "  uncovered {} through {} and {}",
                e.line.key, e.line.endpoints.0, e.line.endpoints.1
            );
        }
        out
    }
}
