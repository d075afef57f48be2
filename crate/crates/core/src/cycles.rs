//! Short-cycle enumeration, cycle sides, splitting paths and the good/bad
//! classification of cycles of length at most 11.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::plane_graph::{FaceId, PlaneGraph, VertexId};

/// Longest cycle for which good/bad is defined.
pub const MAX_CLASSIFIED_LEN: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CycleError {
    #[error("vertex sequence is not a cycle of the graph")]
    NotACycle,
    #[error("path does not split the outer cycle")]
    PathDoesNotSplit,
    #[error("cycle of length {0} exceeds the classified range")]
    TooLong(usize),
}

/// Rotates and reflects a cycle so it starts at its smallest vertex and the
/// second vertex is smaller than the last.
pub fn canonical_cycle(cycle: &[VertexId]) -> Vec<VertexId> {
    let n = cycle.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n).min_by_key(|&i| cycle[i]).unwrap();
    let fwd: Vec<_> = (0..n).map(|k| cycle[(start + k) % n]).collect();
    let bwd: Vec<_> = (0..n).map(|k| cycle[(start + n - k) % n]).collect();
    if n < 3 || fwd[1] <= bwd[1] {
        fwd
    } else {
        bwd
    }
}

/// All simple cycles with length in `3..=max_len`, each once in canonical form,
/// sorted by (length, vertices).
pub fn simple_cycles(adj: &[Vec<VertexId>], max_len: usize) -> Vec<Vec<VertexId>> {
    let n = adj.len();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path = Vec::with_capacity(max_len);
    for s in 0..n {
        path.push(s);
        on_path[s] = true;
        extend(adj, s, max_len, &mut path, &mut on_path, &mut out);
        on_path[s] = false;
        path.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn extend(
    adj: &[Vec<VertexId>],
    s: VertexId,
    max_len: usize,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<VertexId>>,
) {
    let u = *path.last().unwrap();
    for &w in &adj[u] {
        if w == s && path.len() >= 3 && path[1] < u {
            out.push(path.clone());
        }
        if w > s && !on_path[w] && path.len() < max_len {
            path.push(w);
            on_path[w] = true;
            extend(adj, s, max_len, path, on_path, out);
            on_path[w] = false;
            path.pop();
        }
    }
}

fn check_cycle(g: &PlaneGraph, cycle: &[VertexId]) -> Result<(), CycleError> {
    let n = cycle.len();
    if n < 3 {
        return Err(CycleError::NotACycle);
    }
    let distinct: BTreeSet<_> = cycle.iter().collect();
    if distinct.len() != n || cycle.iter().any(|&v| v >= g.vertex_count()) {
        return Err(CycleError::NotACycle);
    }
    if (0..n).any(|i| !g.has_edge(cycle[i], cycle[(i + 1) % n])) {
        return Err(CycleError::NotACycle);
    }
    Ok(())
}

fn cycle_edge_set(cycle: &[VertexId]) -> BTreeSet<(VertexId, VertexId)> {
    let n = cycle.len();
    (0..n)
        .map(|i| {
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Which side of a cycle every face lies on.
#[derive(Debug, Clone)]
pub struct CycleSides {
    /// `true` for faces on the interior side.
    pub face_inside: Vec<bool>,
    pub interior: Vec<VertexId>,
    pub exterior: Vec<VertexId>,
}

impl CycleSides {
    pub fn is_inside(&self, f: FaceId) -> bool {
        self.face_inside[f]
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// Splits faces and vertices by a cycle, treating `outer_face` as exterior.
/// Faces are grouped by flood fill across every edge not on the cycle.
pub fn sides_with_outer(g: &PlaneGraph, cycle: &[VertexId], outer_face: FaceId) -> Result<CycleSides, CycleError> {
    check_cycle(g, cycle)?;
    let on_cycle = cycle_edge_set(cycle);
    let nf = g.face_count();
    let mut parent: Vec<usize> = (0..nf).collect();
    for &(u, v) in g.edges() {
        if on_cycle.contains(&(u, v)) {
            continue;
        }
        let a = find(&mut parent, g.dart_face(u, v));
        let b = find(&mut parent, g.dart_face(v, u));
        if a != b {
            parent[a] = b;
        }
    }
    let outer_root = find(&mut parent, outer_face);
    let face_inside: Vec<bool> = (0..nf).map(|f| find(&mut parent, f) != outer_root).collect();
    let in_cycle: BTreeSet<_> = cycle.iter().copied().collect();
    let mut interior = Vec::new();
    let mut exterior = Vec::new();
    for v in 0..g.vertex_count() {
        if in_cycle.contains(&v) {
            continue;
        }
        let inside = g.faces_at(v).first().map(|&f| face_inside[f]).unwrap_or(false);
        if inside {
            interior.push(v);
        } else {
            exterior.push(v);
        }
    }
    Ok(CycleSides { face_inside, interior, exterior })
}

/// Interior and exterior vertex sets of a cycle; the side holding the
/// designated outer face is the exterior.
pub fn sides_of_cycle(g: &PlaneGraph, cycle: &[VertexId]) -> Result<(Vec<VertexId>, Vec<VertexId>), CycleError> {
    let s = sides_with_outer(g, cycle, g.outer_face())?;
    Ok((s.interior, s.exterior))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleRecord {
    pub vertices: Vec<VertexId>,
    pub length: usize,
    pub chords: Vec<(VertexId, VertexId)>,
    pub interior: Vec<VertexId>,
    pub exterior: Vec<VertexId>,
    pub is_separating: bool,
}

pub fn chords_of(g: &PlaneGraph, cycle: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let on_cycle = cycle_edge_set(cycle);
    let members: BTreeSet<_> = cycle.iter().copied().collect();
    let mut chords = Vec::new();
    for &(u, v) in g.edges() {
        if members.contains(&u) && members.contains(&v) && !on_cycle.contains(&(u, v)) {
            chords.push((u, v));
        }
    }
    chords
}

pub fn cycle_record(g: &PlaneGraph, cycle: &[VertexId]) -> Result<CycleRecord, CycleError> {
    let (interior, exterior) = sides_of_cycle(g, cycle)?;
    Ok(CycleRecord {
        vertices: cycle.to_vec(),
        length: cycle.len(),
        chords: chords_of(g, cycle),
        is_separating: !interior.is_empty() && !exterior.is_empty(),
        interior,
        exterior,
    })
}

/// Every cycle of length `3..=max_len`, canonicalised, with sides and chords.
pub fn enumerate_cycles(g: &PlaneGraph, max_len: usize) -> Vec<CycleRecord> {
    simple_cycles(g.adjacency(), max_len)
        .into_iter()
        .map(|c| cycle_record(g, &c).expect("enumerated cycle is a cycle"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BadKind {
    #[serde(rename = "Claw_555")]
    Claw555,
    #[serde(rename = "Claw_377")]
    Claw377,
    #[serde(rename = "Claw_557")]
    Claw557,
    #[serde(rename = "EdgeClaw_3737")]
    EdgeClaw3737,
    #[serde(rename = "EdgeClaw_5555")]
    EdgeClaw5555,
    #[serde(rename = "EdgeClaw_3738")]
    EdgeClaw3738,
    #[serde(rename = "PathClaw_55555")]
    PathClaw55555,
    #[serde(rename = "PentagonClaw_55555")]
    PentagonClaw55555,
}

impl BadKind {
    pub const ALL: [BadKind; 8] = [
        BadKind::Claw555,
        BadKind::Claw377,
        BadKind::Claw557,
        BadKind::EdgeClaw3737,
        BadKind::EdgeClaw5555,
        BadKind::EdgeClaw3738,
        BadKind::PathClaw55555,
        BadKind::PentagonClaw55555,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BadKind::Claw555 => "Claw_555",
            BadKind::Claw377 => "Claw_377",
            BadKind::Claw557 => "Claw_557",
            BadKind::EdgeClaw3737 => "EdgeClaw_3737",
            BadKind::EdgeClaw5555 => "EdgeClaw_5555",
            BadKind::EdgeClaw3738 => "EdgeClaw_3738",
            BadKind::PathClaw55555 => "PathClaw_55555",
            BadKind::PentagonClaw55555 => "PentagonClaw_55555",
        }
    }

    /// Length of the host cycle forced by the template.
    pub fn cycle_length(self) -> usize {
        match self {
            BadKind::Claw555 => 9,
            BadKind::EdgeClaw3737 | BadKind::EdgeClaw5555 | BadKind::PentagonClaw55555 => 10,
            _ => 11,
        }
    }

    pub fn core_size(self) -> usize {
        match self {
            BadKind::Claw555 | BadKind::Claw377 | BadKind::Claw557 => 1,
            BadKind::EdgeClaw3737 | BadKind::EdgeClaw5555 | BadKind::EdgeClaw3738 => 2,
            BadKind::PathClaw55555 => 3,
            BadKind::PentagonClaw55555 => 5,
        }
    }
}

impl fmt::Display for BadKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub vertices: Vec<VertexId>,
    pub length: usize,
}

/// A claw-like subgraph inside a cycle together with the cells it cuts out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadPartition {
    pub kind: BadKind,
    /// Vertices of the off-cycle core, in path/cycle order for paths and pentagons.
    pub core: Vec<VertexId>,
    /// Edges from core vertices to cycle vertices.
    pub attachments: Vec<(VertexId, VertexId)>,
    pub cells: Vec<Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Good,
    Bad(BadPartition),
}

impl Classification {
    pub fn is_bad(&self) -> bool {
        matches!(self, Classification::Bad(_))
    }
}

fn choose(items: &[VertexId], k: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(items: &[VertexId], k: usize, start: usize, cur: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(items, k, 0, &mut cur, &mut out);
    out
}

/// Candidate partition before its cells are measured.
struct Candidate {
    core: Vec<VertexId>,
    core_edges: Vec<(VertexId, VertexId)>,
    attachments: Vec<(VertexId, VertexId)>,
}

/// Faces of the subgraph made of `cycle`, the core edges and the attachment
/// edges, with the rotation inherited from `g`; the face without core
/// vertices (the far side of the cycle) is dropped.
fn cells_of(g: &PlaneGraph, cycle: &[VertexId], cand: &Candidate) -> Vec<Cell> {
    let mut keep: BTreeSet<(VertexId, VertexId)> = cycle_edge_set(cycle);
    for &(a, b) in cand.core_edges.iter().chain(cand.attachments.iter()) {
        keep.insert((a.min(b), a.max(b)));
    }
    let rotation: Vec<Vec<VertexId>> = (0..g.vertex_count())
        .map(|u| {
            g.rotation(u)
                .iter()
                .copied()
                .filter(|&w| keep.contains(&(u.min(w), u.max(w))))
                .collect()
        })
        .collect();
    let (faces, _) = crate::plane_graph::trace_faces(&rotation);
    let core: BTreeSet<_> = cand.core.iter().copied().collect();
    let mut cells: Vec<Cell> = faces
        .into_iter()
        .filter(|f| f.iter().any(|v| core.contains(v)))
        .map(|f| Cell { length: f.len(), vertices: canonical_cycle(&f) })
        .collect();
    cells.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    cells
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn match_template(cand: &Candidate, cells: &[Cell]) -> Option<BadKind> {
    let lens = sorted(cells.iter().map(|c| c.length).collect());
    match cand.core.len() {
        1 => match lens.as_slice() {
            [5, 5, 5] => Some(BadKind::Claw555),
            [3, 7, 7] => Some(BadKind::Claw377),
            [5, 5, 7] => Some(BadKind::Claw557),
            _ => None,
        },
        2 => {
            let (x, y) = (cand.core[0], cand.core[1]);
            let mut ends = Vec::new();
            let mut sides = Vec::new();
            for c in cells {
                let hx = c.vertices.contains(&x);
                let hy = c.vertices.contains(&y);
                if hx && hy {
                    sides.push(c.length);
                } else {
                    ends.push(c.length);
                }
            }
            let (ends, sides) = (sorted(ends), sorted(sides));
            match (ends.as_slice(), sides.as_slice()) {
                ([3, 3], [7, 7]) => Some(BadKind::EdgeClaw3737),
                ([5, 5], [5, 5]) => Some(BadKind::EdgeClaw5555),
                ([3, 3], [7, 8]) => Some(BadKind::EdgeClaw3738),
                _ => None,
            }
        }
        3 if lens == [5; 5] => Some(BadKind::PathClaw55555),
        5 if lens == [5; 6] => Some(BadKind::PentagonClaw55555),
        _ => None,
    }
}

struct CoreContext {
    interior: Vec<VertexId>,
    is_interior: Vec<bool>,
    cycle_nbrs: Vec<Vec<VertexId>>,
}

fn core_context(g: &PlaneGraph, cycle: &[VertexId], sides: &CycleSides) -> CoreContext {
    let n = g.vertex_count();
    let on_cycle: BTreeSet<_> = cycle.iter().copied().collect();
    let mut is_interior = vec![false; n];
    for &v in &sides.interior {
        is_interior[v] = true;
    }
    let cycle_nbrs = (0..n)
        .map(|v| {
            if is_interior[v] {
                g.neighbors(v).iter().copied().filter(|w| on_cycle.contains(w)).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    CoreContext { interior: sides.interior.clone(), is_interior, cycle_nbrs }
}

/// Candidates in search order: claws, edge-claws, path-claws, pentagon-claws.
fn candidates(g: &PlaneGraph, ctx: &CoreContext) -> Vec<Candidate> {
    let mut out = Vec::new();
    let cn = &ctx.cycle_nbrs;
    for &x in &ctx.interior {
        for a in choose(&cn[x], 3) {
            out.push(Candidate { core: vec![x], core_edges: vec![], attachments: a.iter().map(|&c| (x, c)).collect() });
        }
    }
    for &x in &ctx.interior {
        for &y in g.neighbors(x) {
            if y <= x || !ctx.is_interior[y] {
                continue;
            }
            for ax in choose(&cn[x], 2) {
                for ay in choose(&cn[y], 2) {
                    let mut att: Vec<_> = ax.iter().map(|&c| (x, c)).collect();
                    att.extend(ay.iter().map(|&c| (y, c)));
                    out.push(Candidate { core: vec![x, y], core_edges: vec![(x, y)], attachments: att });
                }
            }
        }
    }
    for &y in &ctx.interior {
        let inner: Vec<VertexId> = g.neighbors(y).iter().copied().filter(|&w| ctx.is_interior[w]).collect();
        for pair in choose(&inner, 2) {
            let (x, z) = (pair[0], pair[1]);
            for ax in choose(&cn[x], 2) {
                for &ay in &cn[y] {
                    for az in choose(&cn[z], 2) {
                        let mut att: Vec<_> = ax.iter().map(|&c| (x, c)).collect();
                        att.push((y, ay));
                        att.extend(az.iter().map(|&c| (z, c)));
                        out.push(Candidate { core: vec![x, y, z], core_edges: vec![(x, y), (y, z)], attachments: att });
                    }
                }
            }
        }
    }
    let n = g.vertex_count();
    let inner_adj: Vec<Vec<VertexId>> = (0..n)
        .map(|v| {
            if ctx.is_interior[v] {
                g.neighbors(v).iter().copied().filter(|&w| ctx.is_interior[w]).collect()
            } else {
                Vec::new()
            }
        })
        .collect();
    for pent in simple_cycles(&inner_adj, 5).into_iter().filter(|c| c.len() == 5) {
        let mut choices: Vec<Vec<(VertexId, VertexId)>> = vec![Vec::new()];
        for &p in &pent {
            let mut next = Vec::new();
            for partial in &choices {
                for &c in &cn[p] {
                    let mut q = partial.clone();
                    q.push((p, c));
                    next.push(q);
                }
            }
            choices = next;
        }
        let core_edges: Vec<_> = (0..5).map(|i| (pent[i], pent[(i + 1) % 5])).collect();
        for att in choices {
            out.push(Candidate { core: pent.clone(), core_edges: core_edges.clone(), attachments: att });
        }
    }
    out
}

fn partitions(g: &PlaneGraph, cycle: &[VertexId], first_only: bool) -> Result<Vec<BadPartition>, CycleError> {
    let sides = sides_with_outer(g, cycle, g.outer_face())?;
    let ctx = core_context(g, cycle, &sides);
    let mut found = Vec::new();
    for cand in candidates(g, &ctx) {
        let cells = cells_of(g, cycle, &cand);
        if let Some(kind) = match_template(&cand, &cells) {
            found.push(BadPartition { kind, core: cand.core, attachments: cand.attachments, cells });
            if first_only {
                break;
            }
        }
    }
    Ok(found)
}

/// First bad partition of `cycle` in search order, if any.
pub fn find_bad_partition(g: &PlaneGraph, cycle: &[VertexId]) -> Result<Option<BadPartition>, CycleError> {
    if cycle.len() > MAX_CLASSIFIED_LEN {
        return Err(CycleError::TooLong(cycle.len()));
    }
    Ok(partitions(g, cycle, true)?.into_iter().next())
}

/// Every bad partition of `cycle`.
pub fn all_bad_partitions(g: &PlaneGraph, cycle: &[VertexId]) -> Result<Vec<BadPartition>, CycleError> {
    if cycle.len() > MAX_CLASSIFIED_LEN {
        return Err(CycleError::TooLong(cycle.len()));
    }
    partitions(g, cycle, false)
}

pub fn classify_cycle(g: &PlaneGraph, cycle: &[VertexId]) -> Result<Classification, CycleError> {
    Ok(match find_bad_partition(g, cycle)? {
        Some(bp) => Classification::Bad(bp),
        None => Classification::Good,
    })
}

/// Classification that also accepts cycles longer than 11, reporting them
/// as good only because `long_cycles_good` was requested.
pub fn classify_cycle_opt_in(
    g: &PlaneGraph,
    cycle: &[VertexId],
    long_cycles_good: bool,
) -> Result<Classification, CycleError> {
    if cycle.len() > MAX_CLASSIFIED_LEN && long_cycles_good {
        check_cycle(g, cycle)?;
        return Ok(Classification::Good);
    }
    classify_cycle(g, cycle)
}

pub fn is_good(g: &PlaneGraph, cycle: &[VertexId]) -> bool {
    matches!(classify_cycle(g, cycle), Ok(Classification::Good))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeViolation {
    pub item: u8,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShapeReport {
    pub kind: BadKind,
    pub violations: Vec<ShapeViolation>,
    /// Cycle vertices incident with exactly two edges lying inside the cycle.
    pub equality_vertices: Vec<VertexId>,
}

impl ShapeReport {
    pub fn passes(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated_items(&self) -> BTreeSet<u8> {
        self.violations.iter().map(|v| v.item).collect()
    }
}

fn same_cycle_any_direction(a: &[VertexId], b: &[VertexId]) -> bool {
    canonical_cycle(a) == canonical_cycle(b)
}

/// Checks the interior structure forced around a bad cycle: facial cells,
/// cubic interior, neighbour and edge counts along the cycle.
pub fn check_bad_shape(g: &PlaneGraph, cycle: &[VertexId], partition: &BadPartition) -> Result<ShapeReport, CycleError> {
    let sides = sides_with_outer(g, cycle, g.outer_face())?;
    let n = cycle.len();
    let mut violations = Vec::new();
    let is_interior = {
        let mut m = vec![false; g.vertex_count()];
        for &v in &sides.interior {
            m[v] = true;
        }
        m
    };
    let chords = chords_of(g, cycle);
    let inside_chords: Vec<_> = chords.iter().copied().filter(|&(a, b)| sides.is_inside(g.dart_face(a, b))).collect();

    for cell in &partition.cells {
        let facial = g.faces().iter().any(|f| same_cycle_any_direction(f, &cell.vertices));
        if facial {
            continue;
        }
        let excused = cell.length == 8
            && inside_chords.iter().any(|&(a, b)| {
                let ia = cell.vertices.iter().position(|&v| v == a);
                let ib = cell.vertices.iter().position(|&v| v == b);
                match (ia, ib) {
                    (Some(i), Some(j)) => {
                        let d = (i + 8 - j) % 8;
                        d == 2 || d == 6
                    }
                    _ => false,
                }
            });
        if !excused {
            violations.push(ShapeViolation {
                item: 1,
                detail: format!("cell {:?} of length {} is not a face", cell.vertices, cell.length),
            });
        }
    }
    for &v in &sides.interior {
        if g.degree(v) != 3 {
            violations.push(ShapeViolation { item: 2, detail: format!("interior vertex {v} has degree {}", g.degree(v)) });
        }
    }
    let inside_count: Vec<usize> = cycle.iter().map(|&c| g.neighbors(c).iter().filter(|&&w| is_interior[w]).count()).collect();
    for (i, &c) in cycle.iter().enumerate() {
        if inside_count[i] > 1 {
            violations.push(ShapeViolation { item: 3, detail: format!("cycle vertex {c} has {} interior neighbours", inside_count[i]) });
        }
    }
    let mut equality_vertices = Vec::new();
    for (i, &c) in cycle.iter().enumerate() {
        let chord_edges = inside_chords.iter().filter(|&&(a, b)| a == c || b == c).count();
        let total = inside_count[i] + chord_edges;
        if total > 2 {
            violations.push(ShapeViolation { item: 4, detail: format!("cycle vertex {c} has {total} edges inside") });
        } else if total == 2 {
            equality_vertices.push(c);
        }
    }
    let is_3738 = partition.kind == BadKind::EdgeClaw3738;
    if !equality_vertices.is_empty() && !is_3738 {
        violations.push(ShapeViolation {
            item: 4,
            detail: format!("vertices {equality_vertices:?} reach two inside edges without a (3,7,3,8)-edge-claw"),
        });
    }
    if is_3738 && equality_vertices.is_empty() {
        violations.push(ShapeViolation { item: 4, detail: "(3,7,3,8)-edge-claw without a vertex having two inside edges".into() });
    }
    if n >= 4 {
        for s in 0..n {
            let total: usize = (0..4).map(|k| inside_count[(s + k) % n]).sum();
            if total > 2 {
                let window: Vec<_> = (0..4).map(|k| cycle[(s + k) % n]).collect();
                violations.push(ShapeViolation { item: 5, detail: format!("vertices {window:?} send {total} edges inside") });
            }
        }
    }
    Ok(ShapeReport { kind: partition.kind, violations, equality_vertices })
}

/// Paths of length `2..=max_len` whose ends lie on the outer boundary and whose
/// inner vertices avoid it. Each path is reported once, oriented from the
/// smaller end id.
pub fn splitting_paths(g: &PlaneGraph, max_len: usize) -> Vec<Vec<VertexId>> {
    let n = g.vertex_count();
    let mut on_d = vec![false; n];
    for &v in g.outer_walk() {
        on_d[v] = true;
    }
    let mut out = Vec::new();
    let mut path = Vec::new();
    let mut used = vec![false; n];
    fn rec(
        g: &PlaneGraph,
        on_d: &[bool],
        max_len: usize,
        path: &mut Vec<VertexId>,
        used: &mut [bool],
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let u = *path.last().unwrap();
        let edges = path.len() - 1;
        for &w in g.neighbors(u) {
            if used[w] {
                continue;
            }
            if on_d[w] {
                if edges + 1 >= 2 && path[0] < w {
                    let mut p = path.clone();
                    p.push(w);
                    out.push(p);
                }
            } else if edges + 1 < max_len {
                path.push(w);
                used[w] = true;
                rec(g, on_d, max_len, path, used, out);
                used[w] = false;
                path.pop();
            }
        }
    }
    for s in 0..n {
        if !on_d[s] {
            continue;
        }
        path.push(s);
        used[s] = true;
        rec(g, &on_d, max_len, &mut path, &mut used, &mut out);
        used[s] = false;
        path.pop();
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub path_length: usize,
    pub side_lengths: (usize, usize),
    pub allowed: Vec<usize>,
    pub passes: bool,
}

/// Compares the shorter side of a split of the outer cycle against the
/// lengths a minimal counterexample would force. Report only.
pub fn check_split_lengths(g: &PlaneGraph, path: &[VertexId]) -> Result<SplitReport, CycleError> {
    let d = g.outer_walk();
    let len = path.len().saturating_sub(1);
    if !(2..=5).contains(&len) {
        return Err(CycleError::PathDoesNotSplit);
    }
    let pos = |v: VertexId| d.iter().position(|&x| x == v);
    let (i, j) = match (pos(path[0]), pos(path[len])) {
        (Some(i), Some(j)) if i != j => (i, j),
        _ => return Err(CycleError::PathDoesNotSplit),
    };
    let distinct: BTreeSet<_> = path.iter().collect();
    if distinct.len() != path.len()
        || path[1..len].iter().any(|&v| pos(v).is_some())
        || path.windows(2).any(|w| !g.has_edge(w[0], w[1]))
    {
        return Err(CycleError::PathDoesNotSplit);
    }
    let k1 = (j + d.len() - i) % d.len();
    let k2 = d.len() - k1;
    let sides = (k1 + len, k2 + len);
    let allowed = match len {
        2 => vec![3],
        3 => vec![5],
        4 => vec![5, 7],
        _ => vec![7, 8, 9],
    };
    let shorter = sides.0.min(sides.1);
    Ok(SplitReport { path_length: len, side_lengths: sides, passes: allowed.contains(&shorter), allowed })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn canonical_form_is_rotation_and_reflection_invariant() {
        assert_eq!(canonical_cycle(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[2, 1, 3]), vec![1, 2, 3]);
        assert_eq!(canonical_cycle(&[5, 4, 9, 7]), vec![4, 5, 7, 9]);
    }

    #[test]
    fn c5_has_one_cycle() {
        let g = cycle_graph(5);
        let cs = enumerate_cycles(&g, 11);
        assert_eq!(cs.len(), 1);
        assert!(!cs[0].is_separating);
        assert!(enumerate_cycles(&cycle_graph(4), 3).is_empty());
    }

    #[test]
    fn claw_host_cycles() {
        let g = claw555_host();
        let cs = enumerate_cycles(&g, 11);
        let mut lens: Vec<_> = cs.iter().map(|c| c.length).collect();
        lens.sort();
        assert_eq!(lens, vec![5, 5, 5, 8, 8, 8, 9]);
        let nine = cs.iter().find(|c| c.length == 9).unwrap();
        assert_eq!(nine.interior, vec![9]);
        assert!(nine.exterior.is_empty());
        let five = cs.iter().find(|c| c.length == 5).unwrap();
        assert!(five.interior.is_empty());
        assert_eq!(five.exterior.len(), 10 - 5);
    }

    #[test]
    fn triangle_sides_are_empty() {
        let g = k3();
        let (i, e) = sides_of_cycle(&g, &[0, 1, 2]).unwrap();
        assert!(i.is_empty() && e.is_empty());
    }

    #[test]
    fn not_a_cycle_is_rejected() {
        let g = claw555_host();
        assert_eq!(sides_of_cycle(&g, &[0, 1, 3]).unwrap_err(), CycleError::NotACycle);
    }

    #[test]
    fn moving_outer_face_swaps_sides() {
        let g = claw555_host();
        let five: Vec<_> = enumerate_cycles(&g, 5).into_iter().next().unwrap().vertices;
        let a = sides_with_outer(&g, &five, g.outer_face()).unwrap();
        let inner_face = (0..g.face_count()).find(|&f| a.is_inside(f)).unwrap();
        let b = sides_with_outer(&g, &five, inner_face).unwrap();
        assert_eq!(a.interior, b.exterior);
        assert_eq!(a.exterior, b.interior);
    }

    #[test]
    fn claw_host_nine_cycle_is_bad() {
        let g = claw555_host();
        let d: Vec<_> = (0..9).collect();
        let bp = find_bad_partition(&g, &d).unwrap().unwrap();
        assert_eq!(bp.kind, BadKind::Claw555);
        assert_eq!(bp.core, vec![9]);
        assert!(find_bad_partition(&cycle_graph(9), &d).unwrap().is_none());
        let r = check_bad_shape(&g, &d, &bp).unwrap();
        assert!(r.passes(), "{r:?}");
    }

    #[test]
    fn long_cycles_need_opt_in() {
        let g = cycle_graph(12);
        let c: Vec<_> = (0..12).collect();
        assert_eq!(classify_cycle(&g, &c).unwrap_err(), CycleError::TooLong(12));
        assert_eq!(classify_cycle_opt_in(&g, &c, true).unwrap(), Classification::Good);
    }

    #[test]
    fn splitting_paths_of_claw_host() {
        let g = claw555_host();
        let ps = splitting_paths(&g, 5);
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|p| p.len() == 3 && p[1] == 9));
        assert!(splitting_paths(&cycle_graph(9), 5).is_empty());
        let r = check_split_lengths(&g, &ps[0]).unwrap();
        assert_eq!(r.side_lengths, (5, 8));
        assert!(!r.passes);
    }

    #[test]
    fn splitting_a_path_that_misses_d_is_an_error() {
        let g = claw555_host();
        assert_eq!(check_split_lengths(&g, &[0, 1, 2]).unwrap_err(), CycleError::PathDoesNotSplit);
    }
}
