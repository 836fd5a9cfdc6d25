//! Verification reports and their deterministic text rendering.

use std::fmt::{self, Write as _};
use std::time::Duration;

use clap::ValueEnum;
use rainbow_core::{EdgeColoring, Graph};

use crate::format::{render_coloring, render_edge_list};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// Diameter 2: rc is 3 for C5 and the fan on 8 vertices, 2 otherwise.
    Diam2,
    /// Diameter 3: rc is at most 4, and 4 is attained.
    Diam3,
    /// Closed forms for cycles and fans.
    Formulas,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::Diam2 => "diam2",
            Theorem::Diam3 => "diam3",
            Theorem::Formulas => "formulas",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Exactly(usize),
    AtMost(usize),
}

impl Expectation {
    pub fn holds(self, rc: usize) -> bool {
        match self {
            Expectation::Exactly(k) => rc == k,
            Expectation::AtMost(k) => rc <= k,
        }
    }
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expectation::Exactly(k) => write!(f, "={k}"),
            Expectation::AtMost(k) => write!(f, "<={k}"),
        }
    }
}

/// One checked graph. `graph` is the canonical form, so `code` and the
/// witness digits (colors in lexicographic edge order) refer to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub graph: Graph,
    pub code: String,
    pub label: String,
    pub diameter: usize,
    pub cut_vertex: bool,
    pub rc: usize,
    pub expected: Expectation,
    pub witness: EdgeColoring,
}

impl Record {
    pub fn holds(&self) -> bool {
        self.expected.holds(self.rc)
    }

    fn witness_digits(&self) -> String {
        self.witness
            .colors()
            .map(|c| char::from_digit(c as u32, 16).expect("at most 16 colors"))
            .collect()
    }

    fn row(&self) -> String {
        format!(
            "{:>3} {:>3} {:>2} {:>4} {:>3} {:>6}  {:<14} {:<6} {}",
            self.graph.order(),
            self.graph.size(),
            self.diameter,
            if self.cut_vertex { "yes" } else { "no" },
            self.rc,
            self.expected.to_string(),
            self.code,
            self.label,
            self.witness_digits()
        )
    }
}

const HEADER: &str = "  n   m  d  cut  rc expect  code           label  witness";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    /// Every counterexample has a cut vertex; the 2-connected class is clean.
    Localized,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Localized => "localized",
            Verdict::Fail => "fail",
        })
    }
}

/// Smallest order at which rc reaches the bound, with the first such graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sharpness {
    pub target: usize,
    pub expected_order: usize,
    pub witness: Option<Record>,
}

impl Sharpness {
    pub fn order(&self) -> Option<usize> {
        self.witness.as_ref().map(|r| r.graph.order())
    }

    pub fn discrepancy(&self) -> bool {
        self.order() != Some(self.expected_order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub max_n: usize,
    /// Sorted by order, then code.
    pub records: Vec<Record>,
    pub sharpness: Option<Sharpness>,
    /// Wall time; shown on the terminal but never written to report files.
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn counterexamples(&self) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(|r| !r.holds())
    }

    pub fn verdict(&self) -> Verdict {
        let mut any = false;
        for r in self.counterexamples() {
            if !r.cut_vertex || self.theorem == Theorem::Formulas {
                return Verdict::Fail;
            }
            any = true;
        }
        if any {
            Verdict::Localized
        } else {
            Verdict::Pass
        }
    }

    /// The report file contents. Identical inputs give identical bytes.
    pub fn render(&self) -> String {
        let cut = self.records.iter().filter(|r| r.cut_vertex).count();
        let bad_cut = self.counterexamples().filter(|r| r.cut_vertex).count();
        let bad = self.counterexamples().count();
        let mut s = String::new();
        let _ = writeln!(s, "theorem: {}", self.theorem);
        let _ = writeln!(s, "max_n: {}", self.max_n);
        let _ = writeln!(s, "graphs: {}", self.records.len());
        let _ = writeln!(s, "two_connected: {}", self.records.len() - cut);
        let _ = writeln!(s, "cut_vertex: {cut}");
        let _ = writeln!(s, "counterexamples: {bad}");
        let _ = writeln!(s, "counterexamples_two_connected: {}", bad - bad_cut);
        let _ = writeln!(s, "counterexamples_cut_vertex: {bad_cut}");
        if let Some(sh) = &self.sharpness {
            let order = sh.order().map_or("none".to_string(), |n| n.to_string());
            let _ = writeln!(s, "sharpness_rc: {}", sh.target);
            let _ = writeln!(s, "sharpness_order: {order}");
            let _ = writeln!(s, "sharpness_expected_order: {}", sh.expected_order);
            let _ = writeln!(
                s,
                "sharpness_discrepancy: {}",
                if sh.discrepancy() { "yes" } else { "no" }
            );
        }
        let _ = writeln!(s, "verdict: {}", self.verdict());
        s.push_str("\nrecords:\n");
        s.push_str(HEADER);
        s.push('\n');
        for r in &self.records {
            s.push_str(&r.row());
            s.push('\n');
        }
        s.push_str("\ncounterexamples:\n");
        if bad > 0 {
            s.push_str(HEADER);
            s.push('\n');
            for r in self.counterexamples() {
                s.push_str(&r.row());
                s.push('\n');
            }
        }
        if let Some(Sharpness { witness: Some(w), .. }) = &self.sharpness {
            let _ = write!(s, "\nsharpness_witness: {}\n", w.code);
            s.push_str(&render_edge_list(&w.graph));
            s.push_str("\nsharpness_coloring:\n");
            s.push_str(&render_coloring(&w.witness));
        }
        s
    }
}
