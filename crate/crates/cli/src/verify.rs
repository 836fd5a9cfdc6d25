//! Drivers that check the diameter-2 classification, the diameter-3 bound
//! and the cycle and fan formulas over enumerated or named graphs.

use std::time::Instant;

use rainbow_core::{
    are_isomorphic, canonical_form, enumerate_bridgeless_outerplanar, families, formula_rc_cycle,
    formula_rc_fan, is_rainbow_connected, is_two_connected, rc_exact, to_graph6, EnumerationError, Graph,
    GraphClass, RainbowError,
};
use rayon::prelude::*;

use crate::report::{Expectation, Record, Sharpness, Theorem, VerificationReport};

/// Largest `max_n` accepted by the diameter drivers.
pub const DIAMETER_CAP: usize = 10;
/// Largest `max_n` accepted by the formula driver.
pub const FORMULA_CAP: usize = 12;
/// Order of the smallest graph expected to need four colors at diameter 3.
pub const EXPECTED_SHARPNESS_ORDER: usize = 7;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("max_n {max_n} exceeds the cap of {cap} for {theorem}")]
    CapExceeded {
        theorem: Theorem,
        max_n: usize,
        cap: usize,
    },
    #[error("could not start {jobs} worker threads: {message}")]
    Pool { jobs: usize, message: String },
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Rainbow(#[from] RainbowError),
}

pub fn cap(theorem: Theorem) -> usize {
    match theorem {
        Theorem::Diam2 | Theorem::Diam3 => DIAMETER_CAP,
        Theorem::Formulas => FORMULA_CAP,
    }
}

struct Job {
    graph: Graph,
    label: String,
    expected: Expectation,
}

/// `jobs == 0` uses rayon's default worker count.
pub fn verify(theorem: Theorem, max_n: usize, jobs: usize) -> Result<VerificationReport, VerifyError> {
    let cap = cap(theorem);
    if max_n > cap {
        return Err(VerifyError::CapExceeded { theorem, max_n, cap });
    }
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| VerifyError::Pool {
            jobs,
            message: e.to_string(),
        })?;
    let jobs = match theorem {
        Theorem::Diam2 => diameter_jobs(max_n, 2)?,
        Theorem::Diam3 => diameter_jobs(max_n, 3)?,
        Theorem::Formulas => formula_jobs(max_n)?,
    };
    let mut records = pool.install(|| jobs.into_par_iter().map(check).collect::<Result<Vec<_>, _>>())?;
    records.sort_by(|a, b| (a.graph.order(), &a.code).cmp(&(b.graph.order(), &b.code)));
    let sharpness = (theorem == Theorem::Diam3).then(|| Sharpness {
        target: 4,
        expected_order: EXPECTED_SHARPNESS_ORDER,
        witness: records.iter().find(|r| r.rc == 4).cloned(),
    });
    Ok(VerificationReport {
        theorem,
        max_n,
        records,
        sharpness,
        elapsed: start.elapsed(),
    })
}

fn check(job: Job) -> Result<Record, VerifyError> {
    let (graph, _) = canonical_form(&job.graph);
    let result = rc_exact(&graph)?;
    assert!(
        is_rainbow_connected(&graph, &result.witness)?,
        "solver witness for {} is not rainbow connected",
        to_graph6(&graph)
    );
    Ok(Record {
        code: to_graph6(&graph),
        label: job.label,
        diameter: graph.diameter().expect("connected"),
        cut_vertex: !is_two_connected(&graph),
        rc: result.rc,
        expected: job.expected,
        witness: result.witness,
        graph,
    })
}

/// The two exceptional diameter-2 graphs: C5, and the fan on a 7-vertex path.
pub fn diam2_expected(g: &Graph) -> usize {
    let c5 = families::cycle(5).expect("C5");
    let f7 = families::fan(7).expect("fan");
    if are_isomorphic(g, &c5) || are_isomorphic(g, &f7) {
        3
    } else {
        2
    }
}

fn diameter_jobs(max_n: usize, d: usize) -> Result<Vec<Job>, VerifyError> {
    let mut jobs = Vec::new();
    for n in GraphClass::BridgelessOuterplanar.min_order()..=max_n {
        for g in enumerate_bridgeless_outerplanar(n)? {
            if g.diameter() != Some(d) {
                continue;
            }
            let expected = if d == 2 {
                Expectation::Exactly(diam2_expected(&g))
            } else {
                Expectation::AtMost(4)
            };
            jobs.push(Job {
                graph: g,
                label: "-".to_string(),
                expected,
            });
        }
    }
    Ok(jobs)
}

fn formula_jobs(max_n: usize) -> Result<Vec<Job>, VerifyError> {
    let mut jobs = Vec::new();
    for n in 4..=max_n {
        jobs.push(Job {
            graph: families::cycle(n).expect("n >= 4"),
            label: format!("C{n}"),
            expected: Expectation::Exactly(formula_rc_cycle(n)?),
        });
    }
    // The fan on a path of n vertices has n + 1 vertices.
    for n in 2..max_n {
        jobs.push(Job {
            graph: families::fan(n).expect("n >= 2"),
            label: format!("F{n}"),
            expected: Expectation::Exactly(formula_rc_fan(n)?),
        });
    }
    Ok(jobs)
}
