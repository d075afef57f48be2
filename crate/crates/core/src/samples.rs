//! Small plane graphs built from straight-line drawings.

use std::f64::consts::PI;

use crate::plane_graph::{trace_faces, GraphError, PlaneGraph, VertexId};

/// Builds a plane graph from a straight-line drawing. Rotations are read off
/// the angles (clockwise) and the outer face is the one traced with positive
/// signed area.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(VertexId, VertexId)]) -> Result<PlaneGraph, GraphError> {
    let n = points.len();
    let mut nbrs: Vec<Vec<VertexId>> = vec![Vec::new(); n];
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(GraphError::InvalidVertex(u.max(v)));
        }
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    let rotation: Vec<Vec<VertexId>> = nbrs
        .into_iter()
        .enumerate()
        .map(|(u, mut ns)| {
            let (x0, y0) = points[u];
            let angle = |w: &VertexId| (points[*w].1 - y0).atan2(points[*w].0 - x0);
            ns.sort_by(|a, b| angle(b).partial_cmp(&angle(a)).unwrap());
            ns
        })
        .collect();
    let (faces, _) = trace_faces(&rotation);
    let area = |f: &Vec<VertexId>| -> f64 {
        (0..f.len())
            .map(|i| {
                let (a, b) = (points[f[i]], points[f[(i + 1) % f.len()]]);
                a.0 * b.1 - b.0 * a.1
            })
            .sum::<f64>()
    };
    let outer = faces
        .iter()
        .max_by(|a, b| area(a).partial_cmp(&area(b)).unwrap())
        .cloned()
        .unwrap_or_default();
    PlaneGraph::from_rotation(rotation, &outer)
}

/// `k` points evenly spaced counterclockwise on a circle, starting at angle `phase`.
pub fn circle(k: usize, radius: f64, phase: f64) -> Vec<(f64, f64)> {
    (0..k)
        .map(|i| {
            let t = phase + 2.0 * PI * i as f64 / k as f64;
            (radius * t.cos(), radius * t.sin())
        })
        .collect()
}

pub fn cycle_edges(k: usize) -> Vec<(VertexId, VertexId)> {
    (0..k).map(|i| (i, (i + 1) % k)).collect()
}

pub fn cycle_graph(k: usize) -> PlaneGraph {
    from_drawing(&circle(k, 1.0, 0.0), &cycle_edges(k)).expect("cycle drawing")
}

pub fn k3() -> PlaneGraph {
    cycle_graph(3)
}

pub fn path2() -> PlaneGraph {
    from_drawing(&[(0.0, 0.0), (1.0, 0.0)], &[(0, 1)]).expect("edge drawing")
}

/// C9 (vertices 0..8) with a centre 9 joined to 0, 3 and 6.
pub fn claw555_host() -> PlaneGraph {
    let mut pts = circle(9, 2.0, 0.0);
    pts.push((0.0, 0.0));
    let mut edges = cycle_edges(9);
    edges.extend([(9, 0), (9, 3), (9, 6)]);
    from_drawing(&pts, &edges).expect("claw drawing")
}

/// K4 drawn as a triangle with a centre.
pub fn k4() -> PlaneGraph {
    let mut pts = circle(3, 2.0, PI / 2.0);
    pts.push((0.0, 0.0));
    let mut edges = cycle_edges(3);
    edges.extend([(3, 0), (3, 1), (3, 2)]);
    from_drawing(&pts, &edges).expect("k4 drawing")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_outer_is_counterclockwise() {
        let g = k3();
        assert_eq!(g.face_count(), 2);
        assert_eq!(g.face_degree(g.outer_face()), 3);
        assert_eq!(g.outer_walk(), &[0, 1, 2]);
    }

    #[test]
    fn claw_host_faces() {
        let g = claw555_host();
        let mut degs: Vec<_> = (0..g.face_count()).map(|f| g.face_degree(f)).collect();
        degs.sort();
        assert_eq!(degs, vec![5, 5, 5, 9]);
        assert_eq!(g.face_degree(g.outer_face()), 9);
        let c = g.classify_vertex(9);
        assert!(!c.is_external && c.degree == 3 && c.is_light);
        assert!(!g.classify_vertex(4).is_light);
    }

    #[test]
    fn k4_is_planar_but_not_in_class() {
        let g = k4();
        assert_eq!(g.euler_characteristic(), 2);
        assert!(!g.is_class_g());
    }
}
