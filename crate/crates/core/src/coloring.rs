//! (1,0,0)-colourings: colour 1 may induce a matching, colours 2 and 3 must be
//! independent.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{PlaneGraph, VertexId};

pub type Color = u8;
pub const COLORS: [Color; 3] = [1, 2, 3];

/// Default vertex bound for brute-force enumeration.
pub const ENUMERATION_BOUND: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("outer boundary is not a cycle")]
    BoundaryNotCycle,
    #[error("invalid precoloring: {0}")]
    InvalidPrecoloring(String),
    #[error("{n} vertices exceed the enumeration bound {bound}")]
    SizeBound { n: usize, bound: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Violation {
    /// Edge of the colour-1 class outside a maximal matching of that class.
    ColorOneExcess { edge: (VertexId, VertexId) },
    Monochromatic { edge: (VertexId, VertexId), color: Color },
    Uncolored { vertex: VertexId },
}

/// Lists violations of a total colouring. Colour-1 excess is counted as the
/// edges left over by a greedy maximal matching of the colour-1 class taken in
/// lexicographic edge order, so a triangle coloured 1,1,1 yields two.
pub fn verify_on(adj: &[Vec<VertexId>], colors: &[Color]) -> Vec<Violation> {
    let mut out = Vec::new();
    for (v, &c) in colors.iter().enumerate() {
        if !(1..=3).contains(&c) {
            out.push(Violation::Uncolored { vertex: v });
        }
    }
    let mut matched = vec![false; adj.len()];
    for u in 0..adj.len() {
        for &v in &adj[u] {
            if v <= u {
                continue;
            }
            let (cu, cv) = (colors[u], colors[v]);
            if cu != cv || cu == 0 {
                continue;
            }
            if cu == 1 {
                if matched[u] || matched[v] {
                    out.push(Violation::ColorOneExcess { edge: (u, v) });
                } else {
                    matched[u] = true;
                    matched[v] = true;
                }
            } else if cu <= 3 {
                out.push(Violation::Monochromatic { edge: (u, v), color: cu });
            }
        }
    }
    out
}

pub fn verify_coloring(g: &PlaneGraph, colors: &[Color]) -> Vec<Violation> {
    verify_on(g.adjacency(), colors)
}

pub fn is_valid(adj: &[Vec<VertexId>], colors: &[Color]) -> bool {
    if colors.len() != adj.len() {
        return false;
    }
    if adj.len() > 128 {
        return verify_on(adj, colors).is_empty();
    }
    // same checks as `verify_on`, without allocating
    let mut matched = 0u128;
    for u in 0..adj.len() {
        let cu = colors[u];
        if !(1..=3).contains(&cu) {
            return false;
        }
        for &v in &adj[u] {
            if v <= u || colors[v] != cu {
                continue;
            }
            if cu != 1 || (matched >> u | matched >> v) & 1 == 1 {
                return false;
            }
            matched |= 1 << u | 1 << v;
        }
    }
    true
}

/// Partial assignment with colour-1 defect counters.
#[derive(Debug, Clone)]
pub struct Partial<'a> {
    adj: &'a [Vec<VertexId>],
    colors: Vec<Color>,
    ones: Vec<u8>,
    /// Bitmask of colours (bit c) a vertex may not take.
    forbidden: Vec<u8>,
}

impl<'a> Partial<'a> {
    pub fn new(adj: &'a [Vec<VertexId>]) -> Self {
        let n = adj.len();
        Partial { adj, colors: vec![0; n], ones: vec![0; n], forbidden: vec![0; n] }
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, v: VertexId) -> Color {
        self.colors[v]
    }

    pub fn forbid(&mut self, v: VertexId, c: Color) {
        self.forbidden[v] |= 1 << c;
    }

    /// Whether `v` may take `c` given the colours already placed.
    pub fn allows(&self, v: VertexId, c: Color) -> bool {
        if self.forbidden[v] & (1 << c) != 0 {
            return false;
        }
        if c == 1 {
            let mut seen = 0;
            for &w in &self.adj[v] {
                if self.colors[w] == 1 {
                    seen += 1;
                    if seen > 1 || self.ones[w] > 0 {
                        return false;
                    }
                }
            }
            true
        } else {
            self.adj[v].iter().all(|&w| self.colors[w] != c)
        }
    }

    /// Colour `v` with `c` if allowed.
    pub fn try_assign(&mut self, v: VertexId, c: Color) -> bool {
        if self.colors[v] != 0 || !self.allows(v, c) {
            return false;
        }
        self.assign(v, c);
        true
    }

    fn assign(&mut self, v: VertexId, c: Color) {
        self.colors[v] = c;
        if c == 1 {
            for &w in &self.adj[v] {
                if self.colors[w] == 1 {
                    self.ones[w] += 1;
                    self.ones[v] += 1;
                }
            }
        }
    }

    pub fn unassign(&mut self, v: VertexId) {
        if self.colors[v] == 1 {
            for &w in &self.adj[v] {
                if self.colors[w] == 1 {
                    self.ones[w] -= 1;
                    self.ones[v] -= 1;
                }
            }
        }
        self.colors[v] = 0;
    }

    fn domain(&self, v: VertexId) -> u8 {
        COLORS.iter().filter(|&&c| self.allows(v, c)).fold(0, |m, &c| m | (1 << c))
    }

    /// Completes the assignment by MRV backtracking. Ties go to larger degree,
    /// then smaller id.
    pub fn complete(&mut self) -> bool {
        let mut best: Option<(u32, VertexId, u8)> = None;
        for v in 0..self.adj.len() {
            if self.colors[v] != 0 {
                continue;
            }
            let dom = self.domain(v);
            let size = dom.count_ones();
            let better = match best {
                None => true,
                Some((s, b, _)) => size < s || (size == s && self.adj[v].len() > self.adj[b].len()),
            };
            if better {
                best = Some((size, v, dom));
                if size == 0 {
                    break;
                }
            }
        }
        let Some((_, v, dom)) = best else {
            return true;
        };
        for c in COLORS {
            if dom & (1 << c) == 0 {
                continue;
            }
            self.assign(v, c);
            if self.complete() {
                return true;
            }
            self.unassign(v);
        }
        false
    }

    /// Calls `f` on every completion, in a fixed vertex order, until it returns `false`.
    /// Returns `false` if stopped early.
    pub fn for_each_completion(&mut self, f: &mut dyn FnMut(&[Color]) -> bool) -> bool {
        let order: Vec<VertexId> = (0..self.adj.len()).filter(|&v| self.colors[v] == 0).collect();
        self.walk(&order, 0, f)
    }

    fn walk(&mut self, order: &[VertexId], i: usize, f: &mut dyn FnMut(&[Color]) -> bool) -> bool {
        if i == order.len() {
            return f(&self.colors);
        }
        let v = order[i];
        for c in COLORS {
            if self.allows(v, c) {
                self.assign(v, c);
                let go_on = self.walk(order, i + 1, f);
                self.unassign(v);
                if !go_on {
                    return false;
                }
            }
        }
        true
    }
}

pub fn solve_adj(adj: &[Vec<VertexId>]) -> Option<Vec<Color>> {
    let mut p = Partial::new(adj);
    p.complete().then_some(p.colors)
}

/// A valid colouring, or `None` after exhaustive search.
pub fn solve(g: &PlaneGraph) -> Option<Vec<Color>> {
    solve_adj(g.adjacency())
}

/// Every valid colouring, by filtering all `3^n` assignments.
pub fn enumerate_all_with_bound(adj: &[Vec<VertexId>], bound: usize) -> Result<Vec<Vec<Color>>, ColoringError> {
    let n = adj.len();
    if n > bound {
        return Err(ColoringError::SizeBound { n, bound });
    }
    let mut out = Vec::new();
    let mut cur = vec![1 as Color; n];
    loop {
        if is_valid(adj, &cur) {
            out.push(cur.clone());
        }
        let mut i = 0;
        while i < n && cur[i] == 3 {
            cur[i] = 1;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    Ok(out)
}

pub fn enumerate_all(g: &PlaneGraph) -> Result<Vec<Vec<Color>>, ColoringError> {
    enumerate_all_with_bound(g.adjacency(), ENUMERATION_BOUND)
}

/// Extension of a boundary precolouring in which no boundary vertex shares its
/// colour with an interior neighbour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionWitness {
    pub coloring: Vec<Color>,
    pub respects_boundary: bool,
}

/// Checks the precondition of a super-extension: the outer walk is a cycle and
/// `pre` is a valid colouring of the subgraph it induces.
pub fn check_precoloring(g: &PlaneGraph, pre: &[Option<Color>]) -> Result<(), ColoringError> {
    if !g.outer_is_cycle() {
        return Err(ColoringError::BoundaryNotCycle);
    }
    if pre.len() != g.vertex_count() {
        return Err(ColoringError::InvalidPrecoloring(format!(
            "{} entries for {} vertices",
            pre.len(),
            g.vertex_count()
        )));
    }
    for v in 0..g.vertex_count() {
        match (g.is_external(v), pre[v]) {
            (true, None) => return Err(ColoringError::InvalidPrecoloring(format!("boundary vertex {v} uncoloured"))),
            (false, Some(_)) => return Err(ColoringError::InvalidPrecoloring(format!("interior vertex {v} precoloured"))),
            (true, Some(c)) if !(1..=3).contains(&c) => {
                return Err(ColoringError::InvalidPrecoloring(format!("colour {c} at vertex {v}")))
            }
            _ => {}
        }
    }
    let (sub, ids) = boundary_subgraph(g);
    let colors: Vec<Color> = ids.iter().map(|&v| pre[v].unwrap()).collect();
    if let Some(v) = verify_on(&sub, &colors).first() {
        return Err(ColoringError::InvalidPrecoloring(format!("{v:?}")));
    }
    Ok(())
}

/// The subgraph induced by the outer walk's vertices, with the original ids.
pub fn boundary_subgraph(g: &PlaneGraph) -> (Vec<Vec<VertexId>>, Vec<VertexId>) {
    let ids: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| g.is_external(v)).collect();
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in ids.iter().enumerate() {
        local[v] = i;
    }
    let sub = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| local[w] != usize::MAX).map(|&w| local[w]).collect())
        .collect();
    (sub, ids)
}

fn seeded<'a>(g: &'a PlaneGraph, pre: &[Option<Color>]) -> Partial<'a> {
    let mut p = Partial::new(g.adjacency());
    for v in 0..g.vertex_count() {
        if let Some(c) = pre[v] {
            p.assign(v, c);
            for &w in g.neighbors(v) {
                if !g.is_external(w) {
                    p.forbid(w, c);
                }
            }
        }
    }
    p
}

pub fn super_extend(g: &PlaneGraph, pre: &[Option<Color>]) -> Result<Option<ExtensionWitness>, ColoringError> {
    check_precoloring(g, pre)?;
    let mut p = seeded(g, pre);
    if !p.complete() {
        return Ok(None);
    }
    let coloring = p.colors;
    let respects_boundary = g
        .edges()
        .iter()
        .filter(|&&(u, v)| g.is_external(u) != g.is_external(v))
        .all(|&(u, v)| coloring[u] != coloring[v]);
    Ok(Some(ExtensionWitness { coloring, respects_boundary }))
}

/// Every valid precolouring of the outer boundary, as full-length vectors.
pub fn boundary_precolorings(g: &PlaneGraph) -> Vec<Vec<Option<Color>>> {
    let (sub, ids) = boundary_subgraph(g);
    let mut out = Vec::new();
    Partial::new(&sub).for_each_completion(&mut |cs| {
        let mut pre = vec![None; g.vertex_count()];
        for (i, &v) in ids.iter().enumerate() {
            pre[v] = Some(cs[i]);
        }
        out.push(pre);
        true
    });
    out
}

pub fn swap_two_three(colors: &[Color]) -> Vec<Color> {
    colors
        .iter()
        .map(|&c| match c {
            2 => 3,
            3 => 2,
            c => c,
        })
        .collect()
}

/// Parses `col <v> <c>` lines (1-based ids). Vertices not mentioned stay `None`.
pub fn parse_coloring(text: &str, n: usize) -> Result<Vec<Option<Color>>, ColoringError> {
    let mut out = vec![None; n];
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |m: &str| ColoringError::Parse { line: i + 1, message: m.to_string() };
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "col" {
            return Err(err("expected `col <v> <c>`"));
        }
        let v: usize = toks[1].parse().map_err(|_| err("bad vertex id"))?;
        let c: Color = toks[2].parse().map_err(|_| err("bad colour"))?;
        if v == 0 || v > n {
            return Err(err("vertex id out of range"));
        }
        if !(1..=3).contains(&c) {
            return Err(err("colour must be 1, 2 or 3"));
        }
        if out[v - 1].replace(c).is_some() {
            return Err(err("vertex coloured twice"));
        }
    }
    Ok(out)
}

pub fn write_coloring(colors: &[Color]) -> String {
    let mut s = String::new();
    for (v, c) in colors.iter().enumerate() {
        let _ = writeln!(s, "col {} {}", v + 1, c);
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::*;

    #[test]
    fn k3_verification_examples() {
        let g = k3();
        assert!(verify_coloring(&g, &[1, 1, 2]).is_empty());
        assert_eq!(verify_coloring(&g, &[1, 1, 1]).len(), 2);
        assert_eq!(
            verify_coloring(&g, &[2, 2, 3]),
            vec![Violation::Monochromatic { edge: (0, 1), color: 2 }]
        );
    }

    #[test]
    fn enumeration_counts() {
        let single = vec![vec![]];
        assert_eq!(enumerate_all_with_bound(&single, 14).unwrap().len(), 3);
        assert_eq!(enumerate_all(&path2()).unwrap().len(), 7);
        assert_eq!(enumerate_all(&k3()).unwrap().len(), 12);
        let big: Vec<Vec<usize>> = vec![vec![]; 15];
        assert_eq!(
            enumerate_all_with_bound(&big, 14).unwrap_err(),
            ColoringError::SizeBound { n: 15, bound: 14 }
        );
    }

    #[test]
    fn solver_examples() {
        let c5 = cycle_graph(5);
        assert!(verify_coloring(&c5, &solve(&c5).unwrap()).is_empty());
        let k4 = k4();
        let c = solve(&k4).unwrap();
        assert!(verify_coloring(&k4, &c).is_empty());
        assert_eq!(c.iter().filter(|&&x| x == 1).count(), 2);
    }

    #[test]
    fn k5_has_no_coloring() {
        let adj: Vec<Vec<usize>> = (0..5).map(|v| (0..5).filter(|&w| w != v).collect()).collect();
        assert!(solve_adj(&adj).is_none());
        assert!(enumerate_all_with_bound(&adj, 14).unwrap().is_empty());
    }

    #[test]
    fn completion_enumeration_matches_filter() {
        let g = claw555_host();
        let mut count = 0;
        Partial::new(g.adjacency()).for_each_completion(&mut |cs| {
            assert!(is_valid(g.adjacency(), cs));
            count += 1;
            true
        });
        assert_eq!(count, enumerate_all(&g).unwrap().len());
    }

    #[test]
    fn plain_cycle_extension_is_the_precoloring() {
        let g = cycle_graph(9);
        let pres = boundary_precolorings(&g);
        assert!(!pres.is_empty());
        for pre in pres {
            let w = super_extend(&g, &pre).unwrap().unwrap();
            assert!(w.respects_boundary);
            assert!(w.coloring.iter().zip(&pre).all(|(c, p)| Some(*c) == *p));
        }
    }

    #[test]
    fn precondition_errors() {
        let g = path2();
        assert_eq!(super_extend(&g, &[Some(1), Some(2)]).unwrap_err(), ColoringError::BoundaryNotCycle);
        let g = k3();
        assert!(matches!(
            super_extend(&g, &[Some(2), Some(2), Some(1)]),
            Err(ColoringError::InvalidPrecoloring(_))
        ));
        assert!(matches!(super_extend(&g, &[Some(2), None, Some(1)]), Err(ColoringError::InvalidPrecoloring(_))));
    }

    #[test]
    fn claw_host_extension_is_not_universal() {
        let g = claw555_host();
        let pres = boundary_precolorings(&g);
        let ok = pres.iter().filter(|p| super_extend(&g, p).unwrap().is_some()).count();
        assert!(ok > 0 && ok < pres.len());
    }

    #[test]
    fn coloring_file_roundtrip() {
        let text = write_coloring(&[1, 2, 3]);
        assert_eq!(parse_coloring(&text, 3).unwrap(), vec![Some(1), Some(2), Some(3)]);
        assert!(matches!(parse_coloring("col 4 1\n", 3), Err(ColoringError::Parse { line: 1, .. })));
    }
}
