//! Deleting, identifying and joining vertices on a rotation system, and the
//! checks that decide whether the smaller graph is a legal reduction.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use super::{ConfigurationKind as K, ConfigurationMatch};
use crate::cycles::{canonical_cycle, classify_cycle_opt_in, sides_of_cycle, simple_cycles, Classification};
use crate::plane_graph::{trace_faces, GraphError, PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurgeryError {
    #[error("joining {0} and {1} would create a loop")]
    CreatesLoop(VertexId, VertexId),
    #[error("joining {0} and {1} would create a parallel edge")]
    CreatesMultiEdge(VertexId, VertexId),
    #[error("{0} and {1} share no face after deletion")]
    NoCommonFace(VertexId, VertexId),
    #[error("the outer boundary did not survive the surgery")]
    OuterFaceLost,
    #[error("recipe does not apply: {0}")]
    RecipeInapplicable(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The smaller graph produced by a configuration's surgery.
#[derive(Debug, Clone)]
pub struct Surgery {
    pub deletions: Vec<VertexId>,
    pub identifications: Vec<(VertexId, VertexId)>,
    pub insertions: Vec<(VertexId, VertexId)>,
    pub result: PlaneGraph,
    /// Original vertex to result vertex; `None` for deleted vertices.
    pub vertex_map: Vec<Option<VertexId>>,
}

impl Surgery {
    /// Original vertices that survive, grouped by their image.
    pub fn preimages(&self, r: VertexId) -> Vec<VertexId> {
        (0..self.vertex_map.len()).filter(|&o| self.vertex_map[o] == Some(r)).collect()
    }
}

/// Operations the proof prescribes for a match.
pub fn plan(g: &PlaneGraph, m: &ConfigurationMatch) -> Result<(Vec<VertexId>, Vec<(VertexId, VertexId)>, Vec<(VertexId, VertexId)>), SurgeryError> {
    let v = |n: &str| m.get(n);
    let names = |ns: &[&str]| ns.iter().map(|n| m.get(n)).collect::<Vec<_>>();
    let (del, ids, ins) = match (m.kind, m.case_tag.split(' ').next().unwrap_or("")) {
        (K::MinDegree, _) => (names(&["v"]), vec![], vec![]),
        (K::SeparatingGoodCycle, _) => {
            let cycle: Vec<VertexId> = m.vertices();
            let (inside, _) = sides_of_cycle(g, &cycle).map_err(|e| SurgeryError::RecipeInapplicable(e.to_string()))?;
            (inside, vec![], vec![])
        }
        (K::CutVertex, _) => (m.binding.iter().filter(|(n, _)| n != "v").map(|&(_, x)| x).collect(), vec![], vec![]),
        (K::LightCluster, _) => (names(&["v", "v1", "v2", "v3"]), vec![], vec![]),
        (K::LightTriangle334, _) => (names(&["u", "v", "w", "x"]), vec![], vec![]),
        (K::TwoPendent, "opposite") => (names(&["x", "u1", "u2", "u3", "v1", "v2", "v3"]), vec![(v("x1"), v("x2"))], vec![]),
        (K::TwoPendent, _) => (names(&["x", "u1", "u2", "u3", "v1", "v2", "v3"]), vec![(v("x2"), v("y"))], vec![]),
        (K::IncidentPlusPendent, _) => (names(&["u1", "u", "u3", "u3p", "u3pp"]), vec![(v("u2"), v("u4"))], vec![]),
        (K::TwoIncident344, "334-face") => (names(&["v", "v1", "v2", "v3", "v4"]), vec![], vec![]),
        (K::TwoIncident344, "v3-heavy") => (names(&["v", "v1", "v2", "v3", "v4"]), vec![(v("v2p"), v("v4p"))], vec![]),
        (K::TwoIncident344, _) => (names(&["v", "v1", "v2", "v3", "v4"]), vec![(v("v1p"), v("v3p"))], vec![]),
        (K::FiveVertexTwoIncident, "v4-light") => (names(&["v", "v1", "v2", "xp", "v4"]), vec![(v("v3"), v("v5"))], vec![]),
        (K::FiveVertexTwoIncident, _) => (names(&["v", "v1", "v2", "v3", "v4", "xp"]), vec![], vec![(v("v3p"), v("v5"))]),
        (K::FiveVertexPendent333, _) => (names(&["v", "v1", "v2", "v3", "v4", "w1", "w2", "v3p", "v4p"]), vec![], vec![]),
        (K::SixVertexTwoWeak336, _) => {
            (names(&["v", "v1", "v2", "v3", "v4", "v5", "v6", "xp"]), vec![(v("v2p"), v("v5p"))], vec![])
        }
        (K::Wheel, _) => (
            names(&["u", "v", "w", "u1", "u2", "v1", "v2", "w1", "w2"]),
            vec![],
            vec![(v("u1p"), v("v1p")), (v("v1p"), v("w1p")), (v("w1p"), v("u1p"))],
        ),
        (K::AntiwheelAllLight, _) => (
            names(&["u", "v", "w", "u1", "u2", "v1", "w1", "w2"]),
            vec![(v("v2"), v("w2p"))],
            vec![(v("u1p"), v("v1p"))],
        ),
        (K::FiveFaceAllLight | K::SmallFiveFaceWith4Vertex, _) => {
            (names(&["u1", "u2", "u3", "u4", "u5"]), vec![], vec![(v("u2p"), v("u5p"))])
        }
        (K::AdjacentFiveFaces, _) => (names(&["u", "v", "a1", "a2", "a3", "b1", "b2", "b3"]), vec![], vec![]),
    };
    Ok((del, ids, ins))
}

/// Applies the configuration's surgery to `g`.
pub fn apply_surgery(g: &PlaneGraph, m: &ConfigurationMatch) -> Result<Surgery, SurgeryError> {
    let (del, ids, ins) = plan(g, m)?;
    perform(g, &del, &ids, &ins)
}

/// Deletes `del`, then merges each identified pair into its first vertex,
/// then adds each inserted edge. Identified and joined vertices must share a
/// face; angles opened up by the deletions are preferred.
pub fn perform(
    g: &PlaneGraph,
    del: &[VertexId],
    ids: &[(VertexId, VertexId)],
    ins: &[(VertexId, VertexId)],
) -> Result<Surgery, SurgeryError> {
    let n = g.vertex_count();
    let mut ed = Editor { rot: g.rotations().to_vec(), alive: vec![true; n], rep: (0..n).collect(), gap: vec![BTreeSet::new(); n] };
    let dels: BTreeSet<VertexId> = del.iter().copied().collect();
    for &x in &dels {
        ed.delete(x);
    }
    for &(a, b) in ids {
        ed.identify(ed.find(a), ed.find(b))?;
    }
    for &(a, b) in ins {
        ed.insert(ed.find(a), ed.find(b))?;
    }

    let mut new_id = vec![usize::MAX; n];
    let mut k = 0;
    for o in 0..n {
        if ed.alive[o] {
            new_id[o] = k;
            k += 1;
        }
    }
    let vertex_map: Vec<Option<VertexId>> = (0..n)
        .map(|o| if dels.contains(&o) { None } else { Some(new_id[ed.find(o)]) })
        .collect();
    let rotation: Vec<Vec<VertexId>> =
        (0..n).filter(|&o| ed.alive[o]).map(|o| ed.rot[o].iter().map(|&w| new_id[w]).collect()).collect();

    let walk = g.outer_walk();
    let dart = (0..walk.len()).map(|i| (walk[i], walk[(i + 1) % walk.len()])).find(|&(a, b)| {
        !dels.contains(&a) && !dels.contains(&b) && a != b
    });
    let result = match dart {
        Some((a, b)) => PlaneGraph::from_rotation_with_outer_dart(rotation, new_id[ed.find(a)], new_id[ed.find(b)])?,
        None => return Err(SurgeryError::OuterFaceLost),
    };
    Ok(Surgery {
        deletions: dels.into_iter().collect(),
        identifications: ids.to_vec(),
        insertions: ins.to_vec(),
        result,
        vertex_map,
    })
}

struct Editor {
    rot: Vec<Vec<VertexId>>,
    alive: Vec<bool>,
    rep: Vec<VertexId>,
    /// Neighbours `x` of a vertex whose following angle was opened by a deletion.
    gap: Vec<BTreeSet<VertexId>>,
}

impl Editor {
    fn find(&self, mut v: VertexId) -> VertexId {
        while self.rep[v] != v {
            v = self.rep[v];
        }
        v
    }

    fn delete(&mut self, x: VertexId) {
        for w in std::mem::take(&mut self.rot[x]) {
            let r = &mut self.rot[w];
            let i = r.iter().position(|&y| y == x).unwrap();
            r.remove(i);
            if !r.is_empty() {
                let prev = r[(i + r.len() - 1) % r.len()];
                self.gap[w].insert(prev);
            }
            self.gap[w].remove(&x);
        }
        self.alive[x] = false;
        self.gap[x].clear();
    }

    /// Angle indices `(i, j)` at `a` and `b` lying in a common face.
    fn common_angle(&self, a: VertexId, b: VertexId) -> Result<(usize, usize), SurgeryError> {
        let (_, dart_face) = trace_faces(&self.rot);
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, &fa) in dart_face[a].iter().enumerate() {
            for (j, &fb) in dart_face[b].iter().enumerate() {
                if fa != fb {
                    continue;
                }
                let score = self.gap[a].contains(&self.rot[a][i]) as usize + self.gap[b].contains(&self.rot[b][j]) as usize;
                if best.is_none_or(|(s, _, _)| score > s) {
                    best = Some((score, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j)).ok_or(SurgeryError::NoCommonFace(a, b))
    }

    fn identify(&mut self, a: VertexId, b: VertexId) -> Result<(), SurgeryError> {
        if a == b || self.rot[a].contains(&b) {
            return Err(SurgeryError::CreatesLoop(a, b));
        }
        if let Some(&c) = self.rot[a].iter().find(|w| self.rot[b].contains(w)) {
            let _ = c;
            return Err(SurgeryError::CreatesMultiEdge(a, b));
        }
        let merged = if self.rot[a].is_empty() || self.rot[b].is_empty() {
            self.rot[a].iter().chain(&self.rot[b]).copied().collect()
        } else {
            let (i, j) = self.common_angle(a, b)?;
            let (ra, rb) = (&self.rot[a], &self.rot[b]);
            let (la, lb) = (ra.len(), rb.len());
            self.gap[a].insert(ra[i]);
            self.gap[a].insert(rb[j]);
            let mut m: Vec<VertexId> = (1..=la).map(|k| ra[(i + k) % la]).collect();
            m.extend((1..=lb).map(|k| rb[(j + k) % lb]));
            m
        };
        for w in self.rot[b].clone() {
            for y in self.rot[w].iter_mut() {
                if *y == b {
                    *y = a;
                }
            }
        }
        let moved: Vec<VertexId> = std::mem::take(&mut self.gap[b]).into_iter().collect();
        self.gap[a].extend(moved);
        self.rot[a] = merged;
        self.rot[b].clear();
        self.alive[b] = false;
        self.rep[b] = a;
        Ok(())
    }

    fn insert(&mut self, a: VertexId, b: VertexId) -> Result<(), SurgeryError> {
        if a == b {
            return Err(SurgeryError::CreatesLoop(a, b));
        }
        if self.rot[a].contains(&b) {
            return Err(SurgeryError::CreatesMultiEdge(a, b));
        }
        let (i, j) = match (self.rot[a].is_empty(), self.rot[b].is_empty()) {
            (false, false) => self.common_angle(a, b)?,
            _ => (0, 0),
        };
        if self.gap[a].contains(self.rot[a].get(i).unwrap_or(&usize::MAX)) {
            self.gap[a].insert(b);
        }
        if self.gap[b].contains(self.rot[b].get(j).unwrap_or(&usize::MAX)) {
            self.gap[b].insert(a);
        }
        let pa = if self.rot[a].is_empty() { 0 } else { i + 1 };
        let pb = if self.rot[b].is_empty() { 0 } else { j + 1 };
        self.rot[a].insert(pa, b);
        self.rot[b].insert(pb, a);
        Ok(())
    }
}

/// How a created 7-cycle counts as triangular.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum TriangularReading {
    /// The cycle has a chord joining two vertices at distance two along it.
    #[default]
    Chord,
    /// Some edge of the cycle lies on a triangle whose apex is off the cycle.
    AdjacentTriangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurgeryValidity {
    /// An identification or insertion joins two vertices of D.
    pub touches_d: bool,
    /// Cycles of length at most 7 in the result with no preimage cycle.
    pub created_cycles: Vec<Vec<VertexId>>,
    pub creates_forbidden_cycle: bool,
    pub creates_short_cycle: bool,
    pub creates_triangular_7_cycle: bool,
    pub result_connected: bool,
    pub result_smaller: bool,
    pub d_still_good: bool,
    /// No D-joins, no new 4- or 6-cycles, D stays good.
    pub verdict_general: bool,
    /// No D-joins, no new cycles of length at most 6, no new triangular 7-cycles.
    pub verdict_strong: bool,
}

pub fn validate_surgery(g: &PlaneGraph, s: &Surgery, reading: TriangularReading) -> SurgeryValidity {
    let on_d = |v: VertexId| g.is_external(v);
    let touches_d = s.identifications.iter().chain(&s.insertions).any(|&(a, b)| on_d(a) && on_d(b));

    let old: BTreeSet<Vec<VertexId>> = simple_cycles(g.adjacency(), 7)
        .into_iter()
        .filter_map(|c| {
            let img: Option<Vec<VertexId>> = c.iter().map(|&v| s.vertex_map[v]).collect();
            let img = img?;
            let distinct: BTreeSet<_> = img.iter().collect();
            (distinct.len() == img.len()).then(|| canonical_cycle(&img))
        })
        .collect();
    let r = &s.result;
    let created: Vec<Vec<VertexId>> =
        simple_cycles(r.adjacency(), 7).into_iter().filter(|c| !old.contains(&canonical_cycle(c))).collect();
    let creates_forbidden_cycle = created.iter().any(|c| c.len() == 4 || c.len() == 6);
    let creates_short_cycle = created.iter().any(|c| c.len() <= 6);
    let creates_triangular_7_cycle = created.iter().filter(|c| c.len() == 7).any(|c| is_triangular(r, c, reading));

    let d_img: Option<Vec<VertexId>> = g.outer_walk().iter().map(|&v| s.vertex_map[v]).collect();
    let d_still_good = d_img.is_some_and(|d| {
        let distinct: BTreeSet<_> = d.iter().collect();
        distinct.len() == d.len()
            && d.len() >= 3
            && matches!(classify_cycle_opt_in(r, &d, true), Ok(Classification::Good))
    });
    let result_connected = r.is_connected();
    let result_smaller = r.vertex_count() + r.edge_count() < g.vertex_count() + g.edge_count();
    SurgeryValidity {
        touches_d,
        verdict_general: !touches_d && !creates_forbidden_cycle && d_still_good && result_connected,
        verdict_strong: !touches_d && !creates_short_cycle && !creates_triangular_7_cycle,
        created_cycles: created,
        creates_forbidden_cycle,
        creates_short_cycle,
        creates_triangular_7_cycle,
        result_connected,
        result_smaller,
        d_still_good,
    }
}

fn is_triangular(g: &PlaneGraph, c: &[VertexId], reading: TriangularReading) -> bool {
    let k = c.len();
    match reading {
        TriangularReading::Chord => (0..k).any(|i| g.has_edge(c[i], c[(i + 2) % k])),
        TriangularReading::AdjacentTriangle => (0..k).any(|i| {
            let (a, b) = (c[i], c[(i + 1) % k]);
            g.neighbors(a).iter().any(|&x| !c.contains(&x) && g.has_edge(x, b))
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::*;

    #[test]
    fn deleting_a_claw_centre_leaves_the_nine_cycle() {
        let g = claw555_host();
        let s = perform(&g, &[9], &[], &[]).unwrap();
        assert_eq!(s.result.vertex_count(), 9);
        assert_eq!(s.result.face_count(), 2);
        assert_eq!(s.vertex_map[9], None);
        assert_eq!(s.result.outer_walk().len(), 9);
    }

    #[test]
    fn identification_through_the_opened_face() {
        // delete the centre, then identify 1 with 4 across the old claw
        let g = claw555_host();
        let s = perform(&g, &[9], &[(1, 4)], &[]).unwrap();
        let r = &s.result;
        assert_eq!(r.vertex_count(), 8);
        assert_eq!(r.edge_count(), 9);
        assert_eq!(r.euler_characteristic(), 2);
        assert_eq!(s.vertex_map[1], s.vertex_map[4]);
        let v = validate_surgery(&g, &s, TriangularReading::Chord);
        // the merge pinches off cycles of lengths 3 and 6
        assert!(v.touches_d);
        assert!(v.created_cycles.iter().any(|c| c.len() == 3));
        assert!(v.creates_forbidden_cycle);
    }

    #[test]
    fn insertion_splits_a_face() {
        let g = claw555_host();
        let s = perform(&g, &[9], &[], &[(0, 4)]).unwrap();
        assert_eq!(s.result.face_count(), 3);
        let v = validate_surgery(&g, &s, TriangularReading::Chord);
        let mut lens: Vec<usize> = v.created_cycles.iter().map(Vec::len).collect();
        lens.sort();
        assert_eq!(lens, vec![5, 6]);
    }

    #[test]
    fn parallel_edges_are_rejected() {
        let g = claw555_host();
        assert_eq!(perform(&g, &[9], &[], &[(0, 1)]).unwrap_err(), SurgeryError::CreatesMultiEdge(0, 1));
        assert_eq!(perform(&g, &[9], &[(0, 2)], &[]).unwrap_err(), SurgeryError::CreatesMultiEdge(0, 2));
    }
}
