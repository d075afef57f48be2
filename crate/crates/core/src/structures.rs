//! Local face and vertex structures used by the discharging rules and the
//! configuration detectors.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::plane_graph::{FaceId, PlaneGraph, VertexId};

/// How a face meets the outer boundary `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum CeilingClass {
    NotOnD,
    Sticking,
    /// The common part is a path with this many edges.
    Ceiling(usize),
    /// The common part is neither a vertex nor a single path.
    Irregular,
}

/// A 3-face seen from a neighbour `owner` of one of its internal 3-vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Pendency {
    pub owner: VertexId,
    pub pendent: VertexId,
    pub face: FaceId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FaceProfile {
    pub degree: usize,
    /// Degrees of the boundary vertices, ascending.
    pub vertex_degrees: Vec<usize>,
    pub all_internal: bool,
    pub is_weak: bool,
    pub is_strong: bool,
    pub is_small: bool,
    pub ceiling_class: CeilingClass,
    pub pendent_owners: Vec<VertexId>,
}

/// A (4,4,4)-face with a 3-face hanging off each corner.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Wheel {
    pub center: FaceId,
    pub corners: [VertexId; 3],
    pub spokes: [FaceId; 3],
    pub is_anti: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexRole {
    pub is_abnormal: bool,
    pub wheel_memberships: Vec<usize>,
}

/// Everything the rules look at, computed once per graph.
#[derive(Debug, Clone)]
pub struct Structures {
    pub internal: Vec<bool>,
    pub light: Vec<bool>,
    pub faces: Vec<FaceProfile>,
    pub pendencies: Vec<Pendency>,
    pub wheels: Vec<Wheel>,
    pub roles: Vec<VertexRole>,
}

impl Structures {
    pub fn new(g: &PlaneGraph) -> Self {
        let n = g.vertex_count();
        let f0 = g.outer_face();
        let internal: Vec<bool> = (0..n).map(|v| !g.is_external(v)).collect();
        let light: Vec<bool> = (0..n).map(|v| g.is_light(v)).collect();

        let mut pendencies = Vec::new();
        for f in 0..g.face_count() {
            if f == f0 || !is_triangle(g, f) {
                continue;
            }
            let tri = g.face(f);
            for &u in tri {
                if !light[u] {
                    continue;
                }
                for &w in g.neighbors(u) {
                    if !tri.contains(&w) {
                        pendencies.push(Pendency { owner: w, pendent: u, face: f });
                    }
                }
            }
        }
        pendencies.sort();

        let ceiling = ceiling_classes(g);
        let faces: Vec<FaceProfile> = (0..g.face_count())
            .map(|f| {
                let walk = g.face(f);
                let mut vertex_degrees: Vec<usize> = walk.iter().map(|&v| g.degree(v)).collect();
                vertex_degrees.sort_unstable();
                let tri = f != f0 && is_triangle(g, f);
                let is_weak = tri && pendencies.iter().any(|p| p.face == f && light[p.owner]);
                let owners: BTreeSet<VertexId> = pendencies.iter().filter(|p| p.face == f).map(|p| p.owner).collect();
                FaceProfile {
                    degree: walk.len(),
                    all_internal: walk.iter().all(|&v| internal[v]),
                    is_weak,
                    is_strong: tri && !is_weak,
                    is_small: f != f0 && walk.len() == 5 && walk.iter().filter(|&&v| light[v]).count() == 4,
                    ceiling_class: ceiling[f],
                    pendent_owners: owners.into_iter().collect(),
                    vertex_degrees,
                }
            })
            .collect();

        let wheels = find_wheels(g, &faces, f0);
        let mut roles = vec![VertexRole { is_abnormal: false, wheel_memberships: Vec::new() }; n];
        for (i, w) in wheels.iter().enumerate() {
            for &c in &w.corners {
                roles[c].wheel_memberships.push(i);
            }
        }
        for f in 0..g.face_count() {
            if is_type(&faces[f], &[4, 4, 4]) {
                for &u in g.face(f) {
                    roles[u].is_abnormal = g.incident_faces(u).iter().any(|&h| is_type(&faces[h], &[3, 4, 4]));
                }
            }
        }
        Structures { internal, light, faces, pendencies, wheels, roles }
    }

    /// The face is an (a,b,c)-face: a 3-face, all vertices internal, with these degrees.
    pub fn is_face_type(&self, f: FaceId, degrees: &[usize; 3]) -> bool {
        is_type(&self.faces[f], degrees)
    }

    pub fn pendent_faces_of(&self, v: VertexId) -> impl Iterator<Item = &Pendency> + '_ {
        self.pendencies.iter().filter(move |p| p.owner == v)
    }

    /// Outer neighbours of a 3-face.
    pub fn outer_neighbors(&self, f: FaceId) -> Vec<VertexId> {
        self.pendencies.iter().filter(|p| p.face == f).map(|p| p.owner).collect()
    }
}

fn is_type(p: &FaceProfile, degrees: &[usize; 3]) -> bool {
    let mut want = degrees.to_vec();
    want.sort_unstable();
    p.degree == 3 && p.all_internal && p.vertex_degrees == want
}

pub fn is_triangle(g: &PlaneGraph, f: FaceId) -> bool {
    let w = g.face(f);
    w.len() == 3 && w[0] != w[1] && w[1] != w[2] && w[0] != w[2]
}

fn ceiling_classes(g: &PlaneGraph) -> Vec<CeilingClass> {
    let f0 = g.outer_face();
    let d = g.outer_walk();
    let mut d_edges = BTreeSet::new();
    for i in 0..d.len() {
        let (a, b) = (d[i], d[(i + 1) % d.len()]);
        if a != b {
            d_edges.insert((a.min(b), a.max(b)));
        }
    }
    (0..g.face_count())
        .map(|f| {
            if f == f0 {
                return CeilingClass::Irregular;
            }
            let walk = g.face(f);
            let verts: BTreeSet<VertexId> = walk.iter().copied().filter(|&v| g.is_external(v)).collect();
            if verts.is_empty() {
                return CeilingClass::NotOnD;
            }
            let mut edges = BTreeSet::new();
            for i in 0..walk.len() {
                let (a, b) = (walk[i], walk[(i + 1) % walk.len()]);
                if d_edges.contains(&(a.min(b), a.max(b))) {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
            if edges.is_empty() {
                return if verts.len() == 1 { CeilingClass::Sticking } else { CeilingClass::Irregular };
            }
            if is_path(&verts, &edges) {
                CeilingClass::Ceiling(edges.len())
            } else {
                CeilingClass::Irregular
            }
        })
        .collect()
}

/// Whether `edges` form one simple path spanning exactly `verts`.
fn is_path(verts: &BTreeSet<VertexId>, edges: &BTreeSet<(VertexId, VertexId)>) -> bool {
    if edges.len() + 1 != verts.len() {
        return false;
    }
    let mut deg = std::collections::BTreeMap::new();
    for &(a, b) in edges {
        if !verts.contains(&a) || !verts.contains(&b) {
            return false;
        }
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    if deg.len() != verts.len() || deg.values().any(|&k| k > 2) {
        return false;
    }
    // acyclic with |E| = |V| - 1 and max degree 2 means a path when connected
    let start = *verts.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u { b } else if b == u { a } else { continue };
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == verts.len()
}

fn find_wheels(g: &PlaneGraph, faces: &[FaceProfile], f0: FaceId) -> Vec<Wheel> {
    let mut out = Vec::new();
    for center in 0..g.face_count() {
        if center == f0 || !is_type(&faces[center], &[4, 4, 4]) {
            continue;
        }
        let corners: Vec<VertexId> = g.face(center).to_vec();
        let mut spokes = [0; 3];
        let mut bits = [false; 3];
        let mut ok = true;
        for (k, &x) in corners.iter().enumerate() {
            let rot = g.rotation(x);
            let i = (0..4).find(|&i| g.dart_face(x, rot[i]) == center).unwrap();
            let (p, q) = (rot[(i + 2) % 4], rot[(i + 3) % 4]);
            let spoke = g.dart_face(x, p);
            let pq = [g.degree(p), g.degree(q)];
            let shape_ok = is_triangle(g, spoke)
                && g.face(spoke).contains(&q)
                && faces[spoke].all_internal
                && (pq == [3, 4] || pq == [4, 3]);
            if !shape_ok {
                ok = false;
                break;
            }
            spokes[k] = spoke;
            bits[k] = pq[0] == 3;
        }
        if ok {
            let is_anti = !(bits[0] == bits[1] && bits[1] == bits[2]);
            out.push(Wheel { center, corners: [corners[0], corners[1], corners[2]], spokes, is_anti });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::*;

    #[test]
    fn triangle_faces_meet_d_irregularly() {
        let g = k3();
        let s = Structures::new(&g);
        let inner = 1 - g.outer_face();
        assert_eq!(s.faces[inner].ceiling_class, CeilingClass::Irregular);
        assert!(s.pendencies.is_empty());
    }

    #[test]
    fn claw_host_ceilings() {
        let g = claw555_host();
        let s = Structures::new(&g);
        for f in 0..g.face_count() {
            if f != g.outer_face() {
                assert_eq!(s.faces[f].ceiling_class, CeilingClass::Ceiling(3));
                assert!(!s.faces[f].is_small);
            }
        }
        assert!(s.light[9]);
    }

    #[test]
    fn path_detection() {
        let v = BTreeSet::from([1, 2, 3]);
        assert!(is_path(&v, &BTreeSet::from([(1, 2), (2, 3)])));
        assert!(!is_path(&v, &BTreeSet::from([(1, 2)])));
        assert!(!is_path(&BTreeSet::from([1, 2, 3, 4]), &BTreeSet::from([(1, 2), (3, 4), (2, 3), (1, 4)])));
    }
}
