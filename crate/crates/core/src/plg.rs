//! Reader and writer for the line-oriented `plg 1` embedding format.
//!
//! ```text
//! plg 1
//! n 3
//! outer 3 1 3 2
//! rot 1: 2 3
//! rot 2: 3 1
//! rot 3: 1 2
//! ```
//!
//! Ids are 1-based in the file and 0-based in memory.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::plane_graph::{GraphError, PlaneGraph, VertexId};

#[derive(Debug, Error)]
pub enum PlgError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn syntax(line: usize, message: impl Into<String>) -> PlgError {
    PlgError::Syntax { line, message: message.into() }
}

fn parse_ids(line: usize, tokens: &[&str], n: usize) -> Result<Vec<VertexId>, PlgError> {
    tokens
        .iter()
        .map(|t| {
            let v: usize = t.parse().map_err(|_| syntax(line, format!("bad vertex id `{t}`")))?;
            if v == 0 || v > n {
                return Err(syntax(line, format!("vertex id {v} out of range 1..={n}")));
            }
            Ok(v - 1)
        })
        .collect()
}

pub fn parse(text: &str) -> Result<PlaneGraph, PlgError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["plg", "1"] {
        return Err(syntax(ln, "expected `plg 1`"));
    }
    let (ln, nline) = lines.next().ok_or_else(|| syntax(ln + 1, "missing `n` line"))?;
    let n: usize = match nline.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", v] => v.parse().map_err(|_| syntax(ln, "bad vertex count"))?,
        _ => return Err(syntax(ln, "expected `n <V>`")),
    };
    if n == 0 {
        return Err(GraphError::Empty.into());
    }
    let (ln, oline) = lines.next().ok_or_else(|| syntax(ln + 1, "missing `outer` line"))?;
    let otoks: Vec<&str> = oline.split_whitespace().collect();
    if otoks.len() < 2 || otoks[0] != "outer" {
        return Err(syntax(ln, "expected `outer <k> ...`"));
    }
    let k: usize = otoks[1].parse().map_err(|_| syntax(ln, "bad outer length"))?;
    if otoks.len() != k + 2 {
        return Err(syntax(ln, format!("outer walk declares {k} vertices but lists {}", otoks.len() - 2)));
    }
    let outer = parse_ids(ln, &otoks[2..], n)?;

    let mut rotation: Vec<Option<Vec<VertexId>>> = vec![None; n];
    let mut last_ln = ln;
    for (ln, l) in lines {
        last_ln = ln;
        let rest = l.strip_prefix("rot").ok_or_else(|| syntax(ln, "expected `rot <v>: ...`"))?;
        let (head, tail) = rest.split_once(':').ok_or_else(|| syntax(ln, "missing `:`"))?;
        let v = parse_ids(ln, &[head.trim()], n)?[0];
        if rotation[v].is_some() {
            return Err(syntax(ln, format!("rotation of vertex {} given twice", v + 1)));
        }
        let toks: Vec<&str> = tail.split_whitespace().collect();
        rotation[v] = Some(parse_ids(ln, &toks, n)?);
    }
    let rotation: Vec<Vec<VertexId>> = rotation
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(last_ln, format!("no rotation for vertex {}", v + 1))))
        .collect::<Result<_, _>>()?;
    Ok(PlaneGraph::from_rotation(rotation, &outer)?)
}

pub fn read(path: &Path) -> Result<PlaneGraph, PlgError> {
    let text = std::fs::read_to_string(path).map_err(|source| PlgError::Io { path: path.display().to_string(), source })?;
    parse(&text)
}

pub fn write(g: &PlaneGraph) -> String {
    let mut s = String::new();
    s.push_str("plg 1\n");
    let _ = writeln!(s, "n {}", g.vertex_count());
    let walk = g.outer_walk();
    let _ = write!(s, "outer {}", walk.len());
    for v in walk {
        let _ = write!(s, " {}", v + 1);
    }
    s.push('\n');
    for v in 0..g.vertex_count() {
        let _ = write!(s, "rot {}:", v + 1);
        for w in g.rotation(v) {
            let _ = write!(s, " {}", w + 1);
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    const K3: &str = "plg 1\nn 3\nouter 3 1 3 2\nrot 1: 2 3\nrot 2: 3 1\nrot 3: 1 2\n";

    #[test]
    fn k3_roundtrip() {
        let g = parse(K3).unwrap();
        assert_eq!(g.face_count(), 2);
        assert_eq!(write(&g), K3);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# triangle\nplg 1\n\nn 3\nouter 3 3 2 1\n# rotations\nrot 3: 1 2\nrot 1: 2 3\nrot 2: 3 1\n";
        let g = parse(text).unwrap();
        assert_eq!(g.outer_walk().len(), 3);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "plg 1\nn 3\nouter 3 1 3 2\nrot 1: 2 3\nrot 2: 3 9\n";
        match parse(bad) {
            Err(PlgError::Syntax { line, .. }) => assert_eq!(line, 5),
            other => panic!("{other:?}"),
        }
        match parse("plg 2\n") {
            Err(PlgError::Syntax { line, .. }) => assert_eq!(line, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let bad = "plg 1\nn 3\nouter 3 1 3 2\nrot 1: 2 3\nrot 2: 1\nrot 3: 1 2\n";
        assert!(matches!(parse(bad), Err(PlgError::Graph(GraphError::AsymmetricAdjacency(..)))));
    }

    #[test]
    fn samples_roundtrip() {
        for g in [samples::claw555_host(), samples::path2(), samples::cycle_graph(7)] {
            let text = write(&g);
            assert_eq!(write(&parse(&text).unwrap()), text);
        }
    }
}
