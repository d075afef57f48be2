//! Plane graphs stored as rotation systems.
//!
//! Every vertex carries the clockwise cyclic order of its neighbours. Faces are
//! recovered by tracing darts: the successor of the dart `u -> v` is `v -> w`
//! where `w` immediately precedes `u` in the clockwise rotation at `v`. Under
//! this convention every face lies to the right of its darts, so bounded faces
//! of a drawing are traced clockwise and the unbounded face counterclockwise.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::cycles;

pub type VertexId = usize;
pub type FaceId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} is out of range")]
    InvalidVertex(VertexId),
    #[error("vertex {0} lists itself as a neighbour")]
    SelfLoop(VertexId),
    #[error("vertex {0} lists neighbour {1} more than once")]
    DuplicateNeighbor(VertexId, VertexId),
    #[error("adjacency is not symmetric: {0} lists {1} but not vice versa")]
    AsymmetricAdjacency(VertexId, VertexId),
    #[error("declared outer walk is not a traced face")]
    OuterWalkNotAFace,
    #[error("rotation system is not spherical: |V| - |E| + |F| = {characteristic}")]
    EulerViolation { characteristic: i64 },
    #[error("graph has no vertices")]
    Empty,
}

#[derive(Debug, Clone)]
pub struct PlaneGraph {
    rotation: Vec<Vec<VertexId>>,
    sorted_adj: Vec<Vec<VertexId>>,
    faces: Vec<Vec<VertexId>>,
    dart_face: Vec<Vec<FaceId>>,
    outer: FaceId,
    on_outer: Vec<bool>,
    edges: Vec<(VertexId, VertexId)>,
    connected: bool,
}

/// Degree and boundary status of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexClass {
    pub is_external: bool,
    pub degree: usize,
    pub is_light: bool,
}

impl VertexClass {
    pub fn is_heavy(&self) -> bool {
        !self.is_light
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenCycle {
    pub length: usize,
    pub vertices: Vec<VertexId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassGReport {
    pub is_connected: bool,
    pub is_simple: bool,
    pub forbidden_cycles: Vec<ForbiddenCycle>,
    pub verdict: bool,
}

/// Traces all faces of a rotation system. Returns the boundary walks and, for
/// every dart `u -> rotation[u][i]`, the face it belongs to.
pub fn trace_faces(rotation: &[Vec<VertexId>]) -> (Vec<Vec<VertexId>>, Vec<Vec<FaceId>>) {
    let mut dart_face: Vec<Vec<FaceId>> = rotation.iter().map(|r| vec![usize::MAX; r.len()]).collect();
    let mut faces = Vec::new();
    for start in 0..rotation.len() {
        for start_idx in 0..rotation[start].len() {
            if dart_face[start][start_idx] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut walk = Vec::new();
            let (mut u, mut i) = (start, start_idx);
            loop {
                dart_face[u][i] = id;
                walk.push(u);
                let v = rotation[u][i];
                let back = position(&rotation[v], u).expect("asymmetric rotation");
                let deg = rotation[v].len();
                let j = (back + deg - 1) % deg;
                u = v;
                i = j;
                if u == start && i == start_idx {
                    break;
                }
            }
            faces.push(walk);
        }
    }
    (faces, dart_face)
}

fn position(list: &[VertexId], x: VertexId) -> Option<usize> {
    list.iter().position(|&y| y == x)
}

/// True when `a` equals `b` read from some starting offset (same direction).
pub fn same_cyclic_walk(a: &[VertexId], b: &[VertexId]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    if a.is_empty() {
        return true;
    }
    (0..a.len()).any(|s| (0..a.len()).all(|k| a[(s + k) % a.len()] == b[k]))
}

fn check_rotation(rotation: &[Vec<VertexId>]) -> Result<(), GraphError> {
    let n = rotation.len();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    for (u, rot) in rotation.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for &v in rot {
            if v >= n {
                return Err(GraphError::InvalidVertex(v));
            }
            if v == u {
                return Err(GraphError::SelfLoop(u));
            }
            if !seen.insert(v) {
                return Err(GraphError::DuplicateNeighbor(u, v));
            }
        }
    }
    for (u, rot) in rotation.iter().enumerate() {
        for &v in rot {
            if !rotation[v].contains(&u) {
                return Err(GraphError::AsymmetricAdjacency(u, v));
            }
        }
    }
    Ok(())
}

impl PlaneGraph {
    /// Builds a plane graph from clockwise rotations and the declared outer
    /// boundary walk (matched against the traced faces up to rotation).
    pub fn from_rotation(rotation: Vec<Vec<VertexId>>, outer_walk: &[VertexId]) -> Result<Self, GraphError> {
        check_rotation(&rotation)?;
        let (faces, dart_face) = Self::faces_for(&rotation);
        let outer = faces
            .iter()
            .position(|f| same_cyclic_walk(f, outer_walk))
            .ok_or(GraphError::OuterWalkNotAFace)?;
        Self::assemble(rotation, faces, dart_face, outer)
    }

    /// Builds a plane graph whose outer face is the face containing the dart
    /// `tail -> head`.
    pub fn from_rotation_with_outer_dart(
        rotation: Vec<Vec<VertexId>>,
        tail: VertexId,
        head: VertexId,
    ) -> Result<Self, GraphError> {
        check_rotation(&rotation)?;
        let (faces, dart_face) = Self::faces_for(&rotation);
        let idx = rotation
            .get(tail)
            .and_then(|r| position(r, head))
            .ok_or(GraphError::OuterWalkNotAFace)?;
        let outer = dart_face[tail][idx];
        Self::assemble(rotation, faces, dart_face, outer)
    }

    fn faces_for(rotation: &[Vec<VertexId>]) -> (Vec<Vec<VertexId>>, Vec<Vec<FaceId>>) {
        if rotation.len() == 1 && rotation[0].is_empty() {
            // a lone vertex bounds the single face of the sphere
            return (vec![vec![0]], vec![vec![]]);
        }
        trace_faces(rotation)
    }

    fn assemble(
        rotation: Vec<Vec<VertexId>>,
        faces: Vec<Vec<VertexId>>,
        dart_face: Vec<Vec<FaceId>>,
        outer: FaceId,
    ) -> Result<Self, GraphError> {
        let n = rotation.len();
        let mut edges = Vec::new();
        for (u, rot) in rotation.iter().enumerate() {
            for &v in rot {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges.sort_unstable();
        let sorted_adj = rotation
            .iter()
            .map(|r| {
                let mut s = r.clone();
                s.sort_unstable();
                s
            })
            .collect();
        let mut on_outer = vec![false; n];
        for &v in &faces[outer] {
            on_outer[v] = true;
        }
        let mut g = PlaneGraph {
            rotation,
            sorted_adj,
            faces,
            dart_face,
            outer,
            on_outer,
            edges,
            connected: false,
        };
        g.connected = g.component_count() == 1;
        if g.connected {
            let chi = g.euler_characteristic();
            if chi != 2 {
                return Err(GraphError::EulerViolation { characteristic: chi });
            }
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    pub fn rotations(&self) -> &[Vec<VertexId>] {
        &self.rotation
    }

    /// Clockwise neighbour order of `v`.
    pub fn rotation(&self, v: VertexId) -> &[VertexId] {
        &self.rotation[v]
    }

    /// Neighbours of `v` in ascending id order.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.sorted_adj[v]
    }

    pub fn adjacency(&self) -> &[Vec<VertexId>] {
        &self.sorted_adj
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.rotation[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.sorted_adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn faces(&self) -> &[Vec<VertexId>] {
        &self.faces
    }

    pub fn face(&self, f: FaceId) -> &[VertexId] {
        &self.faces[f]
    }

    pub fn face_degree(&self, f: FaceId) -> usize {
        self.faces[f].len()
    }

    pub fn outer_face(&self) -> FaceId {
        self.outer
    }

    pub fn outer_walk(&self) -> &[VertexId] {
        &self.faces[self.outer]
    }

    /// Face containing the dart `u -> v`.
    pub fn dart_face(&self, u: VertexId, v: VertexId) -> FaceId {
        let i = position(&self.rotation[u], v).expect("not an edge");
        self.dart_face[u][i]
    }

    /// The dart following `u -> v` along its face.
    pub fn next_dart(&self, u: VertexId, v: VertexId) -> (VertexId, VertexId) {
        let rot = &self.rotation[v];
        let back = position(rot, u).expect("not an edge");
        (v, rot[(back + rot.len() - 1) % rot.len()])
    }

    /// Neighbour following `u` clockwise around `v`.
    pub fn clockwise_after(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotation[v];
        let i = position(rot, u).expect("not a neighbour");
        rot[(i + 1) % rot.len()]
    }

    /// Neighbour preceding `u` clockwise around `v`.
    pub fn clockwise_before(&self, v: VertexId, u: VertexId) -> VertexId {
        let rot = &self.rotation[v];
        let i = position(rot, u).expect("not a neighbour");
        rot[(i + rot.len() - 1) % rot.len()]
    }

    /// Faces incident with `v`, one entry per angle (clockwise order).
    pub fn faces_at(&self, v: VertexId) -> Vec<FaceId> {
        self.dart_face[v].clone()
    }

    /// Faces whose boundary walk visits `v`, without repetition.
    pub fn incident_faces(&self, v: VertexId) -> Vec<FaceId> {
        let set: BTreeSet<FaceId> = self.dart_face[v].iter().copied().collect();
        set.into_iter().collect()
    }

    /// Lies on the boundary of the outer face.
    pub fn is_external(&self, v: VertexId) -> bool {
        self.on_outer[v]
    }

    pub fn is_light(&self, v: VertexId) -> bool {
        !self.on_outer[v] && self.degree(v) == 3
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(u) = stack.pop() {
                for &w in &self.rotation[u] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        count
    }

    /// True when the outer boundary walk is a simple cycle of length at least 3.
    pub fn outer_is_cycle(&self) -> bool {
        let w = self.outer_walk();
        let distinct: BTreeSet<_> = w.iter().collect();
        w.len() >= 3 && distinct.len() == w.len()
    }

    pub fn classify_vertex(&self, v: VertexId) -> VertexClass {
        VertexClass {
            is_external: self.is_external(v),
            degree: self.degree(v),
            is_light: self.is_light(v),
        }
    }

    /// Checks membership in the class of connected simple plane graphs with
    /// no 4-cycles and no 6-cycles.
    pub fn validate_class_g(&self) -> ClassGReport {
        let forbidden_cycles: Vec<ForbiddenCycle> = cycles::simple_cycles(self.adjacency(), 6)
            .into_iter()
            .filter(|c| c.len() == 4 || c.len() == 6)
            .map(|c| ForbiddenCycle { length: c.len(), vertices: c })
            .collect();
        // rotation lists are rejected at construction if they contain loops or repeats
        let is_simple = true;
        let is_connected = self.connected;
        ClassGReport {
            is_connected,
            is_simple,
            verdict: is_connected && is_simple && forbidden_cycles.is_empty(),
            forbidden_cycles,
        }
    }

    pub fn is_class_g(&self) -> bool {
        self.connected && cycles::simple_cycles(self.adjacency(), 6).iter().all(|c| c.len() != 4 && c.len() != 6)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn k3() -> PlaneGraph {
        PlaneGraph::from_rotation(vec![vec![1, 2], vec![2, 0], vec![0, 1]], &[0, 1, 2]).unwrap()
    }

    fn cycle(n: usize) -> PlaneGraph {
        let rot = (0..n).map(|i| vec![(i + 1) % n, (i + n - 1) % n]).collect();
        let outer: Vec<_> = (0..n).collect();
        PlaneGraph::from_rotation(rot, &outer).unwrap()
    }

    #[test]
    fn triangle_has_two_faces() {
        let g = k3();
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.face_degree(g.outer_face()), 3);
        assert!(g.faces().iter().all(|f| f.len() == 3));
    }

    #[test]
    fn single_edge_has_one_walk_of_length_two() {
        let g = PlaneGraph::from_rotation(vec![vec![1], vec![0]], &[0, 1]).unwrap();
        assert_eq!(g.face_count(), 1);
        assert_eq!(g.face_degree(g.outer_face()), 2);
    }

    #[test]
    fn k5_is_not_spherical() {
        let rot: Vec<Vec<usize>> = (0..5).map(|i| (0..5).filter(|&j| j != i).collect()).collect();
        let (faces, _) = trace_faces(&rot);
        let outer = faces[0].clone();
        let err = PlaneGraph::from_rotation(rot, &outer).unwrap_err();
        assert!(matches!(err, GraphError::EulerViolation { .. }));
    }

    #[test]
    fn asymmetric_rotation_is_rejected() {
        let err = PlaneGraph::from_rotation(vec![vec![1], vec![]], &[0, 1]).unwrap_err();
        assert_eq!(err, GraphError::AsymmetricAdjacency(0, 1));
    }

    #[test]
    fn outer_walk_must_be_a_face() {
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        assert_eq!(PlaneGraph::from_rotation(rot, &[0, 1]).unwrap_err(), GraphError::OuterWalkNotAFace);
    }

    #[test]
    fn c5_traces_two_five_walks() {
        let g = cycle(5);
        let mut lens: Vec<_> = g.faces().iter().map(|f| f.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![5, 5]);
        assert!(g.validate_class_g().verdict);
    }

    #[test]
    fn c4_is_outside_the_class() {
        let r = cycle(4).validate_class_g();
        assert!(!r.verdict);
        assert_eq!(r.forbidden_cycles.len(), 1);
        assert_eq!(r.forbidden_cycles[0].length, 4);
    }

    #[test]
    fn k3_vertices_are_external() {
        let g = k3();
        let c = g.classify_vertex(0);
        assert!(c.is_external && !c.is_light && c.degree == 2);
    }
}
