//! Corpus-wide checks, one per acceptance criterion. Each returns a verdict
//! with the number of instances it looked at and a short note on failures.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::time::Instant;

use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::coloring::{boundary_subgraph, enumerate_all, enumerate_all_with_bound, is_valid, solve, super_extend, Color};
use crate::configurations::certify::verify_reducibility;
use crate::configurations::{detect, recipe_branches, ConfigurationKind, UNREACHABLE_GUARDS};
use crate::corpus::{CorpusGraph, HOSTS};
use crate::cycles::{all_bad_partitions, find_bad_partition, is_good, simple_cycles};
use crate::discharging::{apply_rules_in_order, discharge, initial_charges, Rule, RuleOptions};
use crate::oracle::{bad_kinds_by_gaps, class_g_verdict};
use crate::plane_graph::PlaneGraph;

/// Environment variable capping the worker threads of corpus runs.
pub const THREADS_ENV: &str = "DISCHARGE_LAB_THREADS";

#[derive(Debug, Clone, Serialize)]
pub struct CriterionOutcome {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub instances: usize,
    pub seconds: f64,
    pub limit_seconds: Option<f64>,
    pub notes: Vec<String>,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        let limit = self.limit_seconds.map(|l| format!(" (limit {l:.0}s)")).unwrap_or_default();
        format!(
            "criterion {} [{}] {}: {} instances in {:.1}s{}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.title,
            self.instances,
            self.seconds,
            limit
        )
    }
}

pub const TITLES: [&str; 9] = [
    "solver agrees with exhaustive enumeration",
    "every class member has a colouring",
    "good outer cycles super-extend",
    "bad-partition search agrees with brute force",
    "reducibility recipes replay over every colouring",
    "charge is conserved and totals 10 - d(f0)",
    "face counters stay within the degree",
    "rule order does not change the ledger",
    "golden ledgers reproduce",
];

const LIMITS: [Option<f64>; 9] = [Some(60.0), Some(120.0), Some(300.0), None, Some(600.0), None, None, None, None];

/// Thread pool honouring `DISCHARGE_LAB_THREADS`.
pub fn thread_pool() -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()).filter(|&n| n > 0) {
        b = b.num_threads(n);
    }
    b.build().expect("thread pool")
}

/// Per-graph problems, collected in corpus order.
fn problems<F>(graphs: &[&CorpusGraph], f: F) -> Vec<String>
where
    F: Fn(&CorpusGraph) -> Vec<String> + Sync,
{
    let per: Vec<Vec<String>> = graphs.par_iter().map(|c| f(c)).collect();
    per.into_iter().flatten().collect()
}

fn finish(id: u8, start: Instant, instances: usize, mut notes: Vec<String>, ok: bool) -> CriterionOutcome {
    let seconds = start.elapsed().as_secs_f64();
    let limit_seconds = LIMITS[id as usize - 1];
    let in_time = limit_seconds.is_none_or(|l| seconds < l);
    if !in_time {
        notes.push(format!("took {seconds:.1}s"));
    }
    CriterionOutcome { id, title: TITLES[id as usize - 1], passed: ok && in_time, instances, seconds, limit_seconds, notes }
}

fn short(notes: Vec<String>) -> Vec<String> {
    let total = notes.len();
    let mut out: Vec<String> = notes.into_iter().take(12).collect();
    if total > out.len() {
        out.push(format!("... {} more", total - out.len()));
    }
    out
}

pub fn solver_matches_enumeration(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<&CorpusGraph> = corpus.iter().filter(|c| c.graph.vertex_count() <= 12).collect();
    let members = graphs.iter().filter(|c| c.entry.class_g).count();
    let bad = problems(&graphs, |c| {
        let all = match enumerate_all(&c.graph) {
            Ok(a) => a,
            Err(e) => return vec![format!("{}: {e}", c.entry.path)],
        };
        match solve(&c.graph) {
            Some(col) if !is_valid(c.graph.adjacency(), &col) => vec![format!("{}: solver colouring invalid", c.entry.path)],
            Some(_) if all.is_empty() => vec![format!("{}: solver found a colouring enumeration missed", c.entry.path)],
            None if !all.is_empty() => vec![format!("{}: solver missed {} colourings", c.entry.path, all.len())],
            _ => vec![],
        }
    });
    let mut notes = short(bad.clone());
    let enough = graphs.len() >= 200 && members > 0 && members < graphs.len();
    if !enough {
        notes.push(format!("{} graphs, {members} in the class", graphs.len()));
    }
    finish(1, start, graphs.len(), notes, bad.is_empty() && enough)
}

pub fn class_members_colourable(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<&CorpusGraph> = corpus.iter().filter(|c| c.entry.class_g).collect();
    let bad = problems(&graphs, |c| {
        let mut out = Vec::new();
        if !c.graph.is_class_g() {
            out.push(format!("{}: validator disagrees with the manifest", c.entry.path));
        }
        match solve(&c.graph) {
            Some(col) if is_valid(c.graph.adjacency(), &col) => {}
            Some(_) => out.push(format!("{}: invalid colouring", c.entry.path)),
            None => out.push(format!("{}: no colouring", c.entry.path)),
        }
        out
    });
    let up_to_20 = graphs.iter().filter(|c| c.graph.vertex_count() <= 20).count();
    let mut notes = short(bad.clone());
    if up_to_20 < 100 {
        notes.push(format!("only {up_to_20} class members with at most 20 vertices"));
    }
    finish(2, start, graphs.len(), notes, bad.is_empty() && up_to_20 >= 100)
}

/// Boundary colourings found by filtering every assignment of the outer cycle.
fn all_boundary_colourings(g: &PlaneGraph) -> Vec<Vec<Option<Color>>> {
    let (sub, ids) = boundary_subgraph(g);
    enumerate_all_with_bound(&sub, sub.len())
        .expect("bound is the size")
        .into_iter()
        .map(|cs| {
            let mut pre = vec![None; g.vertex_count()];
            for (i, &v) in ids.iter().enumerate() {
                pre[v] = Some(cs[i]);
            }
            pre
        })
        .collect()
}

fn is_super_extension(g: &PlaneGraph, pre: &[Option<Color>], col: &[Color]) -> bool {
    let agrees = pre.iter().zip(col).all(|(p, &c)| p.is_none_or(|p| p == c));
    let crossing = g.edges().iter().all(|&(u, v)| pre[u].is_some() == pre[v].is_some() || col[u] != col[v]);
    agrees && crossing && is_valid(g.adjacency(), col)
}

pub fn good_boundaries_extend(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<&CorpusGraph> = corpus
        .iter()
        .filter(|c| {
            let g = &c.graph;
            c.entry.class_g && g.outer_is_cycle() && g.face_degree(g.outer_face()) <= 9 && is_good(g, g.outer_walk())
        })
        .collect();
    let bad = problems(&graphs, |c| {
        let g = &c.graph;
        let mut out = Vec::new();
        for pre in all_boundary_colourings(g) {
            match super_extend(g, &pre) {
                Ok(Some(w)) if is_super_extension(g, &pre, &w.coloring) => {}
                Ok(Some(_)) => out.push(format!("{}: witness breaks the boundary rule", c.entry.path)),
                Ok(None) => out.push(format!("{}: precolouring {:?} does not extend", c.entry.path, pre)),
                Err(e) => out.push(format!("{}: {e}", c.entry.path)),
            }
        }
        out
    });
    finish(3, start, graphs.len(), short(bad.clone()), bad.is_empty() && !graphs.is_empty())
}

pub fn bad_partitions_match_oracle(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<&CorpusGraph> = corpus.iter().filter(|c| c.graph.vertex_count() <= 14).collect();
    let per: Vec<(usize, usize, BTreeSet<&'static str>, Vec<String>)> = graphs
        .par_iter()
        .map(|c| {
            let g = &c.graph;
            let mut out = Vec::new();
            let cycles = simple_cycles(g.adjacency(), 11);
            let mut bad_count = 0;
            let mut kinds = BTreeSet::new();
            for cyc in &cycles {
                let fast: BTreeSet<_> = match all_bad_partitions(g, cyc) {
                    Ok(ps) => ps.into_iter().map(|p| p.kind).collect(),
                    Err(e) => {
                        out.push(format!("{}: {e}", c.entry.path));
                        continue;
                    }
                };
                let first = find_bad_partition(g, cyc).ok().flatten().map(|p| p.kind);
                let slow = bad_kinds_by_gaps(g, cyc);
                if fast != slow || first.is_some() != !slow.is_empty() {
                    out.push(format!("{}: cycle {:?}: search {:?}, brute force {:?}", c.entry.path, cyc, fast, slow));
                }
                if !fast.is_empty() {
                    bad_count += 1;
                    kinds.extend(fast.iter().map(|k| k.name()));
                    if !(9..=11).contains(&cyc.len()) {
                        out.push(format!("{}: bad cycle of length {}", c.entry.path, cyc.len()));
                    }
                }
            }
            (cycles.len(), bad_count, kinds, out)
        })
        .collect();
    let cycles: usize = per.iter().map(|p| p.0).sum();
    let bad_cycles: usize = per.iter().map(|p| p.1).sum();
    let kinds: BTreeSet<&str> = per.iter().flat_map(|p| p.2.iter().copied()).collect();
    let bad: Vec<String> = per.into_iter().flat_map(|p| p.3).collect();
    let mut notes = short(bad.clone());
    notes.push(format!("{cycles} cycles, {bad_cycles} bad, kinds seen: {}", kinds.into_iter().collect::<Vec<_>>().join(" ")));
    finish(4, start, graphs.len(), notes, bad.is_empty() && bad_cycles > 0)
}

pub fn recipes_certified(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let hosts: Vec<(&CorpusGraph, ConfigurationKind)> = corpus
        .iter()
        .filter_map(|c| {
            let k = c.entry.host_for.as_deref().and_then(ConfigurationKind::from_name)?;
            Some((c, k))
        })
        .collect();
    // per host: kind, problems, cases certified, branches taken, match count
    type HostRun = (ConfigurationKind, Vec<String>, BTreeSet<String>, BTreeSet<&'static str>, usize);
    let per: Vec<HostRun> = hosts
        .par_iter()
        .map(|&(c, kind)| {
            let mut notes = Vec::new();
            let mut cases = BTreeSet::new();
            let mut branches = BTreeSet::new();
            let matches = detect(&c.graph, kind);
            if matches.is_empty() {
                notes.push(format!("{}: no {kind} match", c.entry.path));
            }
            for m in &matches {
                match verify_reducibility(&c.graph, m) {
                    Ok(r) if r.certified() => {
                        cases.insert(m.case_tag.split(' ').next().unwrap_or("").to_string());
                        branches.extend(r.branches.iter().copied());
                    }
                    Ok(r) => notes.push(format!(
                        "{}: {kind} case {:?}: {} of {} colourings fail, e.g. {:?}",
                        c.entry.path,
                        m.case_tag,
                        r.failures,
                        r.colorings_checked,
                        r.sample_failures.first().map(|f| &f.error)
                    )),
                    Err(e) => notes.push(format!("{}: {kind}: {e}", c.entry.path)),
                }
            }
            (kind, notes, cases, branches, matches.len())
        })
        .collect();
    let mut notes = Vec::new();
    let mut cases: BTreeMap<ConfigurationKind, BTreeSet<String>> = BTreeMap::new();
    let mut branches: BTreeMap<ConfigurationKind, BTreeSet<&str>> = BTreeMap::new();
    let mut matches = 0;
    for (k, n, c, b, count) in per {
        notes.extend(n);
        cases.entry(k).or_default().extend(c);
        branches.entry(k).or_default().extend(b);
        matches += count;
    }
    for k in ConfigurationKind::ALL {
        if !cases.contains_key(&k) {
            notes.push(format!("{k}: no host"));
            continue;
        }
        for case in k.proof_cases() {
            if !cases[&k].contains(*case) {
                notes.push(format!("{k}: case {case} not certified"));
            }
        }
        for b in recipe_branches(k) {
            if !UNREACHABLE_GUARDS.contains(b) && !branches[&k].contains(b) {
                notes.push(format!("{k}: branch {b:?} never taken"));
            }
        }
    }
    let ok = notes.is_empty();
    notes.push(format!("{matches} matches on {} hosts", hosts.len()));
    finish(5, start, hosts.len(), short(notes), ok)
}

pub fn charge_conserved(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<&CorpusGraph> = corpus.iter().collect();
    let bad = problems(&graphs, |c| {
        let g = &c.graph;
        let ledger = discharge(g, RuleOptions::default());
        let d0 = g.face_degree(g.outer_face()) as i64;
        let expected = Ratio::from_integer(10 - d0);
        let mut out = Vec::new();
        if ledger.total_final() != ledger.total_initial() {
            out.push(format!("{}: final {} != initial {}", c.entry.path, ledger.total_final(), ledger.total_initial()));
        }
        if ledger.total_initial() != expected {
            out.push(format!("{}: initial {} != 10 - d(f0) = {}", c.entry.path, ledger.total_initial(), expected));
        }
        out
    });
    finish(6, start, graphs.len(), short(bad.clone()), bad.is_empty())
}

pub fn counters_bounded(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<&CorpusGraph> = corpus.iter().filter(|c| c.entry.class_g).collect();
    let bad = problems(&graphs, |c| {
        let g = &c.graph;
        let f0 = g.outer_face();
        let outer: BTreeSet<usize> = g.face(f0).iter().copied().collect();
        let light = |v: usize| g.degree(v) == 3 && !outer.contains(&v);
        let bounded: Vec<usize> = (0..g.face_count()).filter(|&f| f != f0).collect();
        let triangle = |f: usize| g.face(f).len() == 3 && g.face(f).iter().collect::<BTreeSet<_>>().len() == 3;
        let mut out = Vec::new();
        for v in (0..g.vertex_count()).filter(|v| !outer.contains(v)) {
            let at: BTreeSet<usize> = bounded.iter().copied().filter(|&f| g.face(f).contains(&v)).collect();
            let n3 = at.iter().filter(|&&f| g.face(f).len() == 3).count();
            let n5 = at.iter().filter(|&&f| g.face(f).len() == 5).count();
            let m3 = g
                .neighbors(v)
                .iter()
                .filter(|&&u| light(u))
                .map(|&u| bounded.iter().filter(|&&f| triangle(f) && g.face(f).contains(&u) && !g.face(f).contains(&v)).count())
                .sum::<usize>();
            let d = g.degree(v);
            let z = 2 * n3 + n5 + m3;
            if z > d || (n5 != 0 && n5 != d && z + 1 > d) {
                out.push(format!("{}: vertex {}: 2*{n3}+{n5}+{m3} against degree {d}", c.entry.path, v + 1));
            }
        }
        out
    });
    finish(7, start, graphs.len(), short(bad.clone()), bad.is_empty())
}

pub fn order_independent(corpus: &[CorpusGraph]) -> CriterionOutcome {
    let start = Instant::now();
    let graphs: Vec<(usize, &CorpusGraph)> = corpus.iter().enumerate().collect();
    let bad: Vec<String> = graphs
        .par_iter()
        .flat_map(|&(i, c)| {
            let g = &c.graph;
            let opts = RuleOptions::default();
            let base = discharge(g, opts).to_json();
            let init = initial_charges(g);
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let mut out = Vec::new();
            for _ in 0..10 {
                let mut order = Rule::ALL.to_vec();
                order.shuffle(&mut rng);
                if apply_rules_in_order(g, &init, &order, opts).to_json() != base {
                    out.push(format!("{}: order {:?} changes the ledger", c.entry.path, order));
                }
            }
            out
        })
        .collect();
    finish(8, start, graphs.len(), short(bad.clone()), bad.is_empty())
}

/// Golden ledgers that must be present.
pub const GOLDEN: [&str; 4] = ["basic/k3.plg", "basic/claw555.plg", "hosts/small_five_face.plg", "hosts/antiwheel.plg"];

pub fn golden_ledgers(corpus: &[CorpusGraph], dir: &Path) -> CriterionOutcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut checked = 0;
    for want in GOLDEN {
        if !corpus.iter().any(|c| c.entry.path == want && c.entry.golden_ledger.is_some()) {
            notes.push(format!("{want}: no golden ledger"));
        }
    }
    for c in corpus {
        let Some(rel) = &c.entry.golden_ledger else { continue };
        checked += 1;
        match std::fs::read_to_string(dir.join(rel)) {
            Ok(text) if text == discharge(&c.graph, RuleOptions::default()).to_json() => {}
            Ok(_) => notes.push(format!("{}: ledger differs from {rel}", c.entry.path)),
            Err(e) => notes.push(format!("{rel}: {e}")),
        }
    }
    let ok = notes.is_empty();
    finish(9, start, checked, notes, ok)
}

/// Runs one criterion by number.
pub fn run(id: u8, corpus: &[CorpusGraph], dir: &Path) -> CriterionOutcome {
    match id {
        1 => solver_matches_enumeration(corpus),
        2 => class_members_colourable(corpus),
        3 => good_boundaries_extend(corpus),
        4 => bad_partitions_match_oracle(corpus),
        5 => recipes_certified(corpus),
        6 => charge_conserved(corpus),
        7 => counters_bounded(corpus),
        8 => order_independent(corpus),
        9 => golden_ledgers(corpus, dir),
        _ => panic!("criteria are numbered 1 to 9"),
    }
}

/// Every criterion in order, inside the capped thread pool.
pub fn run_all(corpus: &[CorpusGraph], dir: &Path) -> Vec<CriterionOutcome> {
    thread_pool().install(|| (1..=9).map(|id| run(id, corpus, dir)).collect())
}

/// Manifest expectations the corpus itself must meet: class verdicts agree
/// with the oracle and hosts exhibit their configuration.
pub fn manifest_problems(corpus: &[CorpusGraph]) -> Vec<String> {
    let mut out = Vec::new();
    for c in corpus {
        if class_g_verdict(c.graph.adjacency()) != c.entry.class_g {
            out.push(format!("{}: class verdict differs from the manifest", c.entry.path));
        }
        if let Some(k) = &c.entry.host_for {
            if !c.entry.kinds.contains(k) {
                out.push(format!("{}: host for {k} lists {:?}", c.entry.path, c.entry.kinds));
            }
        }
    }
    for (stem, k) in HOSTS {
        if !corpus.iter().any(|c| c.entry.path == format!("hosts/{stem}.plg") && c.entry.host_for.as_deref() == Some(k.name())) {
            out.push(format!("hosts/{stem}.plg: missing from the manifest"));
        }
    }
    out
}
