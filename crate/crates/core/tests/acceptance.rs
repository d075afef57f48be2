//! Runs the nine corpus criteria against the shipped corpus and prints one
//! line per criterion. Every criterion must pass.

use std::path::PathBuf;

use discharge_lab::checks;
use discharge_lab::corpus;

fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn all_criteria_pass_on_shipped_corpus() {
    let dir = corpus_dir();
    let graphs = corpus::load(&dir).expect("shipped corpus loads");
    let manifest = checks::manifest_problems(&graphs);
    println!("manifest [{}] {} graphs", if manifest.is_empty() { "PASS" } else { "FAIL" }, graphs.len());
    for p in &manifest {
        println!("    {p}");
    }

    let outcomes = checks::run_all(&graphs, &dir);
    assert_eq!(outcomes.len(), 9);
    for o in &outcomes {
        println!("{}", o.line());
        for n in &o.notes {
            println!("    {n}");
        }
    }
    let failed: Vec<u8> = outcomes.iter().filter(|o| !o.passed).map(|o| o.id).collect();
    assert!(manifest.is_empty(), "manifest problems: {manifest:?}");
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

#[test]
fn generated_part_of_corpus_is_reproducible() {
    let shipped = corpus_dir();
    let seed = corpus::Manifest::read(&shipped).expect("manifest").seed;
    let tmp = tempfile::tempdir().expect("temp dir");
    corpus::generate(tmp.path(), seed).expect("generate");
    let fresh = corpus::plg_files(tmp.path()).expect("list");
    assert!(fresh.len() > corpus::SMALL_GRAPHS + corpus::MEDIUM_GRAPHS);
    for p in fresh {
        let rel = p.strip_prefix(tmp.path()).unwrap();
        let a = std::fs::read_to_string(&p).unwrap();
        let b = std::fs::read_to_string(shipped.join(rel)).unwrap_or_else(|e| panic!("{}: {e}", rel.display()));
        assert_eq!(a, b, "{} differs from a fresh generation", rel.display());
    }
}
