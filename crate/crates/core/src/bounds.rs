//! Checks every bound on `|I(G; -1)|` for a graph and tallies the results
//! over a corpus.
//!
//! | check               | hypothesis                           | inequality                    |
//! |---------------------|--------------------------------------|-------------------------------|
//! | `ternary`           | `G` is ternary                       | `|I| <= 1`                    |
//! | `decycling`         | none                                 | `|I| <= 2^φ`                  |
//! | `cyclomatic`        | a cycle of length not divisible by 3 | `|I| <= 2^ν - ν`              |
//! | `middle`            | none                                 | `|I| <= min_D |Ind(G[D])|`    |
//! | `middle_vs_phi3`    | none                                 | `min_D |Ind(G[D])| <= 2^φ₃`   |
//! | `ternary_decycling` | none                                 | `|I| <= 2^φ₃`                 |
//!
//! A check whose hypothesis fails is `not_applicable`, one whose inputs ran
//! out of budget is `not_evaluated`; neither is ever reported as a violation.

use std::io::BufRead;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;

use crate::cycles::{has_cycle_length_not_div3_with, is_ternary_with};
use crate::decycling::{cyclomatic_number, middle_bound_with, min_decycling_with, min_ternary_decycling_with};
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::indpoly::alternating_number_with;
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Satisfied,
    Violated,
    NotApplicable,
    NotEvaluated,
}

/// One inequality `lhs <= bound` for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "crate::serde_big::opt_int")]
    pub lhs: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "crate::serde_big::opt_int")]
    pub bound: Option<BigInt>,
    /// `bound - lhs`.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "crate::serde_big::opt_int")]
    pub slack: Option<BigInt>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Check {
    fn compare(lhs: BigInt, bound: BigInt) -> Check {
        let slack = &bound - &lhs;
        Check {
            status: if slack >= BigInt::ZERO { Status::Satisfied } else { Status::Violated },
            lhs: Some(lhs),
            bound: Some(bound),
            slack: Some(slack),
            reason: None,
        }
    }

    fn not_applicable(reason: &str) -> Check {
        Check {
            status: Status::NotApplicable,
            lhs: None,
            bound: None,
            slack: None,
            reason: Some(reason.to_owned()),
        }
    }

    fn not_evaluated(reason: String) -> Check {
        Check {
            status: Status::NotEvaluated,
            lhs: None,
            bound: None,
            slack: None,
            reason: Some(reason),
        }
    }

    pub fn is_applicable(&self) -> bool {
        matches!(self.status, Status::Satisfied | Status::Violated)
    }

    pub fn is_satisfied(&self) -> bool {
        self.status == Status::Satisfied
    }

    pub fn is_tight(&self) -> bool {
        self.is_satisfied() && self.slack.as_ref().is_some_and(|s| s == &BigInt::ZERO)
    }
}

/// One value per bound, in a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Checks<T> {
    pub ternary: T,
    pub decycling: T,
    pub cyclomatic: T,
    pub middle: T,
    pub middle_vs_phi3: T,
    pub ternary_decycling: T,
}

impl<T> Checks<T> {
    pub const NAMES: [&'static str; 6] = [
        "ternary",
        "decycling",
        "cyclomatic",
        "middle",
        "middle_vs_phi3",
        "ternary_decycling",
    ];

    pub fn iter(&self) -> impl Iterator<Item = (&'static str, &T)> {
        Self::NAMES.into_iter().zip([
            &self.ternary,
            &self.decycling,
            &self.cyclomatic,
            &self.middle,
            &self.middle_vs_phi3,
            &self.ternary_decycling,
        ])
    }

    fn iter_mut(&mut self) -> impl Iterator<Item = (&'static str, &mut T)> {
        Self::NAMES.into_iter().zip([
            &mut self.ternary,
            &mut self.decycling,
            &mut self.cyclomatic,
            &mut self.middle,
            &mut self.middle_vs_phi3,
            &mut self.ternary_decycling,
        ])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    /// 1-based input line, when the graph came from a stream.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub graph6: String,
    pub n: usize,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub alternating: Option<BigInt>,
    pub ternary: Option<bool>,
    pub phi: Option<usize>,
    pub phi3: Option<usize>,
    pub nu: usize,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub middle_bound: Option<BigInt>,
    pub checks: Checks<Check>,
}

impl BoundsReport {
    pub fn violations(&self) -> impl Iterator<Item = (&'static str, &Check)> {
        self.checks.iter().filter(|(_, c)| c.status == Status::Violated)
    }
}

fn pow2(k: usize) -> BigInt {
    BigInt::one() << k
}

fn reason<T>(r: &Result<T>) -> String {
    match r {
        Err(e) => e.to_string(),
        Ok(_) => String::new(),
    }
}

/// Evaluates every bound on one graph with exact integers.
pub fn verify_graph(g: &Graph, limits: &Limits) -> BoundsReport {
    let alternating = alternating_number_with(g, limits);
    let ternary = is_ternary_with(g, limits);
    let phi = min_decycling_with(g, limits).map(|(k, _)| k);
    let phi3 = min_ternary_decycling_with(g, limits).map(|(k, _)| k);
    let middle = middle_bound_with(g, limits).map(|(m, _)| BigInt::from(m));
    let not_div3 = has_cycle_length_not_div3_with(g, limits);
    let nu = cyclomatic_number(g);

    let magnitude = alternating.as_ref().map(|a| a.abs());
    // Combines the inputs of one check; any budget failure wins.
    let eval = |inputs: Vec<String>, f: &dyn Fn() -> Check| -> Check {
        let failures: Vec<String> = inputs.into_iter().filter(|r| !r.is_empty()).collect();
        if failures.is_empty() {
            f()
        } else {
            Check::not_evaluated(failures.join("; "))
        }
    };

    let checks = Checks {
        ternary: eval(vec![reason(&alternating), reason(&ternary)], &|| {
            if *ternary.as_ref().unwrap() {
                Check::compare(magnitude.clone().unwrap(), BigInt::one())
            } else {
                Check::not_applicable("graph has an induced cycle of length divisible by 3")
            }
        }),
        decycling: eval(vec![reason(&alternating), reason(&phi)], &|| {
            Check::compare(magnitude.clone().unwrap(), pow2(*phi.as_ref().unwrap()))
        }),
        cyclomatic: eval(vec![reason(&alternating), reason(&not_div3)], &|| {
            if *not_div3.as_ref().unwrap() {
                Check::compare(magnitude.clone().unwrap(), pow2(nu) - BigInt::from(nu))
            } else {
                Check::not_applicable("every cycle has length divisible by 3")
            }
        }),
        middle: eval(vec![reason(&alternating), reason(&middle)], &|| {
            Check::compare(magnitude.clone().unwrap(), middle.clone().unwrap())
        }),
        middle_vs_phi3: eval(vec![reason(&middle), reason(&phi3)], &|| {
            Check::compare(middle.clone().unwrap(), pow2(*phi3.as_ref().unwrap()))
        }),
        ternary_decycling: eval(vec![reason(&alternating), reason(&phi3)], &|| {
            Check::compare(magnitude.clone().unwrap(), pow2(*phi3.as_ref().unwrap()))
        }),
    };

    BoundsReport {
        line: None,
        graph6: to_graph6(g),
        n: g.n(),
        alternating: alternating.ok(),
        ternary: ternary.ok(),
        phi: phi.ok(),
        phi3: phi3.ok(),
        nu,
        middle_bound: middle.ok(),
        checks,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub applicable: usize,
    pub satisfied: usize,
    pub violated: usize,
    pub tight: usize,
    pub not_applicable: usize,
    pub not_evaluated: usize,
}

impl Tally {
    fn add(&mut self, c: &Check) {
        match c.status {
            Status::Satisfied => self.satisfied += 1,
            Status::Violated => self.violated += 1,
            Status::NotApplicable => self.not_applicable += 1,
            Status::NotEvaluated => self.not_evaluated += 1,
        }
        self.applicable += c.is_applicable() as usize;
        self.tight += c.is_tight() as usize;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub line: Option<usize>,
    pub graph6: String,
    pub check: &'static str,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub lhs: Option<BigInt>,
    #[serde(serialize_with = "crate::serde_big::opt_int")]
    pub bound: Option<BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputError {
    pub line: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
#[allow(clippy::large_enum_variant)]
pub enum Record {
    Report(BoundsReport),
    InputError(InputError),
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub input_errors: usize,
    pub checks: Checks<Tally>,
    pub violations: Vec<Violation>,
}

impl Summary {
    pub fn not_evaluated(&self) -> usize {
        self.checks.iter().map(|(_, t)| t.not_evaluated).sum()
    }

    /// 0 all satisfied, 1 violation, 2 input error, 3 a check was not
    /// evaluated and `strict` is set.
    pub fn exit_code(&self, strict: bool) -> i32 {
        if !self.violations.is_empty() {
            1
        } else if self.input_errors > 0 {
            2
        } else if strict && self.not_evaluated() > 0 {
            3
        } else {
            0
        }
    }

    fn absorb(&mut self, record: &Record) {
        match record {
            Record::InputError(_) => self.input_errors += 1,
            Record::Report(r) => {
                self.graphs += 1;
                for ((name, tally), (_, check)) in self.checks.iter_mut().zip(r.checks.iter()) {
                    tally.add(check);
                    if check.status == Status::Violated {
                        self.violations.push(Violation {
                            line: r.line,
                            graph6: r.graph6.clone(),
                            check: name,
                            lhs: check.lhs.clone(),
                            bound: check.bound.clone(),
                        });
                    }
                }
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CorpusOptions {
    pub limits: Limits,
    /// Worker threads; 0 means one per available core.
    pub jobs: usize,
    /// Stop after the first violation or input error.
    pub fail_fast: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusOutcome {
    /// One record per non-blank input line, in input order.
    pub records: Vec<Record>,
    pub summary: Summary,
}

/// Splits a graph6 stream into numbered, parsed lines. Blank lines are skipped.
pub fn read_graph6_lines(source: impl BufRead) -> std::io::Result<Vec<(usize, std::result::Result<Graph, String>)>> {
    let mut out = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push((i + 1, parse_graph6(line.trim()).map_err(|e| e.to_string())));
    }
    Ok(out)
}

/// Runs [`verify_graph`] over a stream, in parallel, keeping input order.
pub fn verify_corpus(source: impl BufRead, options: &CorpusOptions) -> std::io::Result<CorpusOutcome> {
    let inputs = read_graph6_lines(source)?;
    verify_graphs(&inputs, options)
}

/// [`verify_corpus`] over already-parsed `(line, graph or error)` pairs.
pub fn verify_graphs(
    inputs: &[(usize, std::result::Result<Graph, String>)],
    options: &CorpusOptions,
) -> std::io::Result<CorpusOutcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .map_err(std::io::Error::other)?;
    let mut records: Vec<Record> = pool.install(|| {
        inputs
            .par_iter()
            .map(|(line, parsed)| match parsed {
                Ok(g) => {
                    let mut report = verify_graph(g, &options.limits);
                    report.line = Some(*line);
                    Record::Report(report)
                }
                Err(error) => Record::InputError(InputError { line: *line, error: error.clone() }),
            })
            .collect()
    });
    if options.fail_fast {
        let stop = records.iter().position(|r| match r {
            Record::InputError(_) => true,
            Record::Report(rep) => rep.violations().next().is_some(),
        });
        if let Some(i) = stop {
            records.truncate(i + 1);
        }
    }
    let mut summary = Summary::default();
    for r in &records {
        summary.absorb(r);
    }
    Ok(CorpusOutcome { records, summary })
}
