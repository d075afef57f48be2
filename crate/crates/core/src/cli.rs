//! Command-line entry point. JSON goes to stdout; diagnostics to stderr.
//! Exit codes: 0 found or verified, 2 none exists or a check failed, 1 bad input.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::checks;
use crate::coloring::{enumerate_all_with_bound, parse_coloring, solve, super_extend, verify_coloring, write_coloring, Color};
use crate::configurations::certify::verify_reducibility;
use crate::configurations::{apply_surgery, detect_all, ConfigurationKind};
use crate::corpus;
use crate::cycles::{
    all_bad_partitions, check_bad_shape, check_split_lengths, classify_cycle_opt_in, simple_cycles, splitting_paths,
    BadPartition, Classification,
};
use crate::discharging::{audit, discharge, RuleOptions};
use crate::dot::{emit_dot, Highlight};
use crate::plane_graph::{PlaneGraph, VertexId};
use crate::plg;

#[derive(Parser)]
#[command(name = "discharge-lab", version, about = "Plane graphs without 4- and 6-cycles: colourings, cycles, configurations, discharging")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Check membership in the class (connected, simple, no 4- or 6-cycles).
    Validate { file: PathBuf },
    /// List faces with their boundary walks.
    Faces { file: PathBuf },
    /// List reducible configurations.
    Configs { file: PathBuf },
    /// Apply the surgery of the given match and print the reduced graph.
    Reduce {
        file: PathBuf,
        #[arg(long = "match")]
        id: usize,
    },
    /// Replay the colour-extension recipe over every colouring of the reduced graph.
    Certify {
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Classify every cycle up to the given length.
    Cycles {
        file: PathBuf,
        #[arg(long, default_value_t = 11)]
        max_len: usize,
    },
    /// Classify one cycle, given as comma-separated vertex ids.
    Classify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        cycle: Vec<usize>,
        /// Report cycles longer than 11 as good instead of rejecting them.
        #[arg(long)]
        long_cycles_good: bool,
    },
    /// Check the interior shape forced around bad cycles (every bad cycle, or just `--cycle`).
    Shape {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        cycle: Vec<usize>,
    },
    /// Lengths of paths splitting the outer cycle.
    Splits {
        file: PathBuf,
        /// Longest path considered; split lengths are known up to 5.
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Find a colouring; prints `col <v> <c>` lines.
    Color { file: PathBuf },
    /// Super-extend a precolouring of the outer cycle to the interior.
    Extend {
        file: PathBuf,
        #[arg(long)]
        precoloring: PathBuf,
    },
    /// Compare the solver with exhaustive enumeration.
    Oracle {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Run the discharging rules and print the charge ledger.
    Discharge {
        file: PathBuf,
        #[command(flatten)]
        rules: RuleFlags,
    },
    /// Audit the final charges against the counting bounds.
    Audit {
        file: PathBuf,
        #[command(flatten)]
        rules: RuleFlags,
    },
    /// Run every acceptance check over a corpus directory.
    CorpusRun {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
        /// Run only this criterion (1 to 9).
        #[arg(long)]
        criterion: Option<u8>,
    },
    /// Draw the graph in Graphviz format.
    Dot {
        file: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Highlight the configuration match with this id (repeatable).
        #[arg(long = "match")]
        matches: Vec<usize>,
        /// Highlight the bad partition of this cycle.
        #[arg(long, value_delimiter = ',')]
        cycle: Vec<usize>,
    },
    /// Write the random and drawn graphs of the corpus and its manifest.
    GenCorpus {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
        #[arg(long, default_value_t = corpus::DEFAULT_SEED)]
        seed: u64,
    },
    /// Rebuild the manifest of an existing corpus directory.
    Manifest {
        #[arg(default_value = "corpus")]
        dir: PathBuf,
    },
}

#[derive(clap::Args)]
struct RuleFlags {
    /// External vertices pay pendent 3-faces with the internal-vertex split.
    #[arg(long)]
    r12_split: bool,
    /// A 5-vertex pays 10/3 to a strong (3,5,5)-face.
    #[arg(long)]
    r3_ten_thirds: bool,
}

impl RuleFlags {
    fn options(&self) -> RuleOptions {
        RuleOptions { r12_split: self.r12_split, r3_ten_thirds: self.r3_ten_thirds }
    }
}

/// Outcome of a subcommand before it becomes an exit code.
pub enum Outcome {
    Ok(String),
    NotFound(String),
}

pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

/// Runs the CLI on `argv`, printing to stdout/stderr, and returns the exit code.
pub fn run(argv: &[String]) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(Outcome::Ok(s)) => {
            print!("{s}");
            0
        }
        Ok(Outcome::NotFound(s)) => {
            print!("{s}");
            2
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn load(path: &Path) -> Result<PlaneGraph, InputError> {
    Ok(plg::read(path)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn one_based(vs: &[usize]) -> Vec<usize> {
    vs.iter().map(|v| v + 1).collect()
}

fn dispatch(cmd: Cmd) -> Result<Outcome, InputError> {
    match cmd {
        Cmd::Validate { file } => {
            let g = load(&file)?;
            let r = g.validate_class_g();
            let cycles: Vec<Value> =
                r.forbidden_cycles.iter().map(|c| json!({"length": c.length, "vertices": one_based(&c.vertices)})).collect();
            let v = json!({
                "verdict": r.verdict,
                "connected": r.is_connected,
                "simple": r.is_simple,
                "forbidden_cycles": cycles,
            });
            Ok(if r.verdict { Outcome::Ok(pretty(&v)) } else { Outcome::NotFound(pretty(&v)) })
        }
        Cmd::Faces { file } => {
            let g = load(&file)?;
            let faces: Vec<Value> = (0..g.face_count())
                .map(|f| {
                    json!({
                        "face": format!("f{}", f + 1),
                        "degree": g.face_degree(f),
                        "outer": f == g.outer_face(),
                        "walk": one_based(g.face(f)),
                    })
                })
                .collect();
            Ok(Outcome::Ok(pretty(&Value::Array(faces))))
        }
        Cmd::Configs { file } => {
            let g = load(&file)?;
            let ms: Vec<Value> = detect_all(&g)
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    let mut v = m.to_json_value();
                    v["id"] = json!(i);
                    v
                })
                .collect();
            Ok(Outcome::Ok(pretty(&Value::Array(ms))))
        }
        Cmd::Reduce { file, id } => {
            let g = load(&file)?;
            let all = detect_all(&g);
            let m = all.get(id).ok_or_else(|| InputError(format!("{}: no match with id {id}", file.display())))?;
            let s = apply_surgery(&g, m)?;
            let map: Vec<Value> =
                s.vertex_map.iter().map(|x| x.map_or(Value::Null, |r| json!(r + 1))).collect();
            let v = json!({
                "match": m.to_json_value(),
                "result_plg": plg::write(&s.result),
                "vertex_map": map,
            });
            Ok(Outcome::Ok(pretty(&v)))
        }
        Cmd::Certify { kind, corpus, file } => {
            let kind = match kind {
                Some(k) => Some(ConfigurationKind::from_name(&k).ok_or_else(|| InputError(format!("unknown kind `{k}`")))?),
                None => None,
            };
            let files: Vec<PathBuf> = match (file, corpus) {
                (Some(f), _) => vec![f],
                (None, Some(dir)) => corpus::plg_files(&dir)?,
                (None, None) => corpus::plg_files(Path::new("corpus"))?,
            };
            let mut reports = Vec::new();
            let mut all_ok = true;
            for f in files {
                let g = load(&f)?;
                for m in detect_all(&g) {
                    if kind.is_some_and(|k| k != m.kind) {
                        continue;
                    }
                    let entry = match verify_reducibility(&g, &m) {
                        Ok(r) => {
                            all_ok &= r.certified();
                            json!({"file": f.display().to_string(), "match": m.to_json_value(), "report": r})
                        }
                        Err(e) => {
                            all_ok = false;
                            json!({"file": f.display().to_string(), "match": m.to_json_value(), "error": e.to_string()})
                        }
                    };
                    reports.push(entry);
                }
            }
            let v = Value::Array(reports);
            Ok(if all_ok { Outcome::Ok(pretty(&v)) } else { Outcome::NotFound(pretty(&v)) })
        }
        Cmd::Cycles { file, max_len } => {
            let g = load(&file)?;
            if max_len > 11 {
                return Err(InputError(format!("--max-len {max_len}: cycles are classified up to length 11")));
            }
            let mut out = Vec::new();
            for c in simple_cycles(g.adjacency(), max_len) {
                out.push(cycle_json(&c, &classify_cycle_opt_in(&g, &c, false)?));
            }
            Ok(Outcome::Ok(pretty(&Value::Array(out))))
        }
        Cmd::Classify { file, cycle, long_cycles_good } => {
            let g = load(&file)?;
            let c = zero_based(&cycle, g.vertex_count())?;
            let class = classify_cycle_opt_in(&g, &c, long_cycles_good)?;
            Ok(Outcome::Ok(pretty(&cycle_json(&c, &class))))
        }
        Cmd::Shape { file, cycle } => {
            let g = load(&file)?;
            let targets: Vec<Vec<VertexId>> = if cycle.is_empty() {
                simple_cycles(g.adjacency(), 11)
            } else {
                vec![zero_based(&cycle, g.vertex_count())?]
            };
            let mut out = Vec::new();
            let mut all_pass = true;
            for c in targets {
                for bp in all_bad_partitions(&g, &c)? {
                    let r = check_bad_shape(&g, &c, &bp)?;
                    all_pass &= r.passes();
                    let mut v = cycle_json(&c, &Classification::Bad(bp));
                    v["violations"] = json!(r.violations);
                    v["equality_vertices"] = json!(one_based(&r.equality_vertices));
                    out.push(v);
                }
            }
            let v = Value::Array(out);
            Ok(if all_pass { Outcome::Ok(pretty(&v)) } else { Outcome::NotFound(pretty(&v)) })
        }
        Cmd::Splits { file, max_len } => {
            let g = load(&file)?;
            if max_len > 5 {
                return Err(InputError(format!("--max-len {max_len}: split lengths are known for paths up to 5 edges")));
            }
            let mut out = Vec::new();
            for p in splitting_paths(&g, max_len) {
                let r = check_split_lengths(&g, &p)?;
                out.push(json!({"path": one_based(&p), "report": r}));
            }
            Ok(Outcome::Ok(pretty(&Value::Array(out))))
        }
        Cmd::Color { file } => {
            let g = load(&file)?;
            Ok(match solve(&g) {
                Some(c) => Outcome::Ok(write_coloring(&c)),
                None => Outcome::NotFound(String::new()),
            })
        }
        Cmd::Extend { file, precoloring } => {
            let g = load(&file)?;
            let pre = read_precoloring(&precoloring, g.vertex_count())?;
            Ok(match super_extend(&g, &pre)? {
                Some(w) => Outcome::Ok(write_coloring(&w.coloring)),
                None => Outcome::NotFound(String::new()),
            })
        }
        Cmd::Oracle { file, max_n } => {
            let g = load(&file)?;
            let all = enumerate_all_with_bound(g.adjacency(), max_n)?;
            let found = solve(&g);
            let valid = found.as_ref().is_none_or(|c| verify_coloring(&g, c).is_empty());
            let agree = valid && found.is_some() == !all.is_empty();
            let v = json!({
                "vertices": g.vertex_count(),
                "colorings": all.len(),
                "solver_found": found.is_some(),
                "solver_valid": valid,
                "agree": agree,
            });
            Ok(if agree && !all.is_empty() { Outcome::Ok(pretty(&v)) } else { Outcome::NotFound(pretty(&v)) })
        }
        Cmd::Discharge { file, rules } => {
            let g = load(&file)?;
            Ok(Outcome::Ok(discharge(&g, rules.options()).to_json()))
        }
        Cmd::Audit { file, rules } => {
            let g = load(&file)?;
            let ledger = discharge(&g, rules.options());
            let configs: Vec<(String, Vec<VertexId>)> = detect_all(&g).iter().map(|m| (m.label(), m.vertices())).collect();
            let r = audit(&g, &ledger, &configs);
            let ok = r.conservation_holds && r.total_matches_identity;
            Ok(if ok { Outcome::Ok(r.to_json()) } else { Outcome::NotFound(r.to_json()) })
        }
        Cmd::CorpusRun { dir, criterion } => {
            let graphs = corpus::load(&dir)?;
            let mut problems = checks::manifest_problems(&graphs);
            let outcomes: Vec<checks::CriterionOutcome> = match criterion {
                Some(id) if (1..=9).contains(&id) => checks::thread_pool().install(|| vec![checks::run(id, &graphs, &dir)]),
                Some(id) => return Err(InputError(format!("--criterion {id}: criteria are numbered 1 to 9"))),
                None => checks::run_all(&graphs, &dir),
            };
            for o in &outcomes {
                eprintln!("{}", o.line());
            }
            problems.truncate(20);
            let passed = problems.is_empty() && outcomes.iter().all(|o| o.passed);
            let v = json!({"passed": passed, "graphs": graphs.len(), "manifest_problems": problems, "criteria": outcomes});
            Ok(if passed { Outcome::Ok(pretty(&v)) } else { Outcome::NotFound(pretty(&v)) })
        }
        Cmd::Dot { file, coloring, matches, cycle } => {
            let g = load(&file)?;
            let colors = match coloring {
                Some(p) => {
                    let pre = read_precoloring(&p, g.vertex_count())?;
                    Some(pre.iter().map(|c| c.unwrap_or(0)).collect::<Vec<Color>>())
                }
                None => None,
            };
            let mut highlights = Vec::new();
            if !matches.is_empty() {
                let all = detect_all(&g);
                for id in matches {
                    let m = all.get(id).ok_or_else(|| InputError(format!("{}: no match with id {id}", file.display())))?;
                    highlights.push(Highlight { label: m.label(), vertices: m.vertices() });
                }
            }
            if !cycle.is_empty() {
                let c = zero_based(&cycle, g.vertex_count())?;
                if let Classification::Bad(bp) = classify_cycle_opt_in(&g, &c, false)? {
                    highlights.push(Highlight { label: bp.kind.name().to_string(), vertices: bp.core.clone() });
                }
            }
            Ok(Outcome::Ok(emit_dot(&g, colors.as_deref(), &highlights)))
        }
        Cmd::GenCorpus { dir, seed } => {
            let m = corpus::generate(&dir, seed)?;
            Ok(Outcome::Ok(format!("{} graphs in {}\n", m.entries.len(), dir.display())))
        }
        Cmd::Manifest { dir } => {
            let seed = corpus::Manifest::read(&dir).map(|m| m.seed).unwrap_or(corpus::DEFAULT_SEED);
            let m = corpus::build_manifest(&dir, seed)?;
            std::fs::write(dir.join(corpus::MANIFEST), m.to_json())?;
            Ok(Outcome::Ok(format!("{} graphs in {}\n", m.entries.len(), dir.display())))
        }
    }
}

fn zero_based(ids: &[usize], n: usize) -> Result<Vec<VertexId>, InputError> {
    ids.iter()
        .map(|&v| if (1..=n).contains(&v) { Ok(v - 1) } else { Err(InputError(format!("vertex {v} out of range 1..={n}"))) })
        .collect()
}

fn read_precoloring(path: &Path, n: usize) -> Result<Vec<Option<Color>>, InputError> {
    let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    parse_coloring(&text, n).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn partition_json(bp: &BadPartition) -> Value {
    let cells: Vec<Value> = bp.cells.iter().map(|c| json!({"length": c.length, "vertices": one_based(&c.vertices)})).collect();
    let attachments: Vec<[usize; 2]> = bp.attachments.iter().map(|&(a, b)| [a + 1, b + 1]).collect();
    json!({"core": one_based(&bp.core), "attachments": attachments, "cells": cells})
}

fn cycle_json(cycle: &[VertexId], class: &Classification) -> Value {
    let mut v = json!({
        "vertices": one_based(cycle),
        "length": cycle.len(),
        "verdict": if class.is_bad() { "bad" } else { "good" },
        "kind": Value::Null,
        "cells": [],
    });
    if let Classification::Bad(bp) = class {
        let p = partition_json(bp);
        v["kind"] = json!(bp.kind.name());
        v["cells"] = p["cells"].clone();
        v["core"] = p["core"].clone();
        v["attachments"] = p["attachments"].clone();
    }
    v
}
