//! Exhaustive check of a recipe: every valid colouring of the reduced graph
//! must extend back to the original.

use std::collections::BTreeSet;

use serde::Serialize;

use super::recipes::{extend_back, RecipeError};
use super::surgery::{apply_surgery, validate_surgery, SurgeryError, SurgeryValidity, TriangularReading};
use super::ConfigurationMatch;
use crate::coloring::{Color, Partial};
use crate::plane_graph::PlaneGraph;

/// Largest reduced graph enumerated exhaustively.
pub const CERTIFY_VERTEX_BOUND: usize = 24;

const KEPT_FAILURES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub result_coloring: Vec<Color>,
    pub error: RecipeError,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificationReport {
    pub kind: String,
    pub case_tag: String,
    pub result_vertices: usize,
    pub validity: SurgeryValidity,
    pub colorings_checked: u64,
    pub successes: u64,
    pub failures: u64,
    pub sample_failures: Vec<Failure>,
    pub branches: BTreeSet<&'static str>,
}

impl CertificationReport {
    pub fn certified(&self) -> bool {
        self.colorings_checked > 0 && self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyError {
    Surgery(SurgeryError),
    TooLarge { n: usize, bound: usize },
}

impl std::fmt::Display for CertifyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CertifyError::Surgery(e) => write!(f, "{e}"),
            CertifyError::TooLarge { n, bound } => write!(f, "reduced graph has {n} vertices, bound is {bound}"),
        }
    }
}

impl std::error::Error for CertifyError {}

/// Runs the recipe against every valid colouring of the reduced graph.
pub fn verify_reducibility(g: &PlaneGraph, m: &ConfigurationMatch) -> Result<CertificationReport, CertifyError> {
    let s = apply_surgery(g, m).map_err(CertifyError::Surgery)?;
    let n = s.result.vertex_count();
    if n > CERTIFY_VERTEX_BOUND {
        return Err(CertifyError::TooLarge { n, bound: CERTIFY_VERTEX_BOUND });
    }
    let validity = validate_surgery(g, &s, TriangularReading::Chord);
    let mut report = CertificationReport {
        kind: m.kind.name().to_string(),
        case_tag: m.case_tag.clone(),
        result_vertices: n,
        validity,
        colorings_checked: 0,
        successes: 0,
        failures: 0,
        sample_failures: Vec::new(),
        branches: BTreeSet::new(),
    };
    let adj = s.result.adjacency();
    let mut p = Partial::new(adj);
    p.for_each_completion(&mut |colors| {
        report.colorings_checked += 1;
        match extend_back(g, m, &s, colors) {
            Ok(ext) => {
                report.successes += 1;
                for b in ext.branches {
                    if !report.branches.contains(b) {
                        report.branches.insert(b);
                    }
                }
            }
            Err(error) => {
                report.failures += 1;
                if report.sample_failures.len() < KEPT_FAILURES {
                    report.sample_failures.push(Failure { result_coloring: colors.to_vec(), error });
                }
            }
        }
        true
    });
    Ok(report)
}
