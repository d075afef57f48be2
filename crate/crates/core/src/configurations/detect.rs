use std::collections::BTreeSet;

use super::{ConfigurationKind as K, ConfigurationMatch as M, Oriented};
use crate::cycles::{is_good, sides_of_cycle, simple_cycles, MAX_CLASSIFIED_LEN};
use crate::plane_graph::{FaceId, PlaneGraph, VertexId};
use crate::structures::{is_triangle, Structures};

/// Every configuration of every kind, in kind order.
pub fn detect_all(g: &PlaneGraph) -> Vec<M> {
    let s = Structures::new(g);
    K::ALL.iter().flat_map(|&k| detect_with(g, &s, k)).collect()
}

pub fn detect(g: &PlaneGraph, kind: K) -> Vec<M> {
    detect_with(g, &Structures::new(g), kind)
}

fn detect_with(g: &PlaneGraph, s: &Structures, kind: K) -> Vec<M> {
    let cx = Cx { g, s };
    let mut out = match kind {
        K::MinDegree => cx.min_degree(),
        K::SeparatingGoodCycle => cx.separating_good_cycles(),
        K::CutVertex => cx.cut_vertices(),
        K::LightCluster => cx.light_clusters(),
        K::LightTriangle334 => cx.light_triangles(),
        K::TwoPendent => cx.two_pendent(),
        K::IncidentPlusPendent => cx.incident_plus_pendent(),
        K::TwoIncident344 => cx.two_incident(),
        K::FiveVertexTwoIncident => cx.five_two_incident(),
        K::FiveVertexPendent333 => cx.five_pendent(),
        K::SixVertexTwoWeak336 => cx.six_two_weak(),
        K::Wheel => cx.wheels(false),
        K::AntiwheelAllLight => cx.wheels(true),
        K::FiveFaceAllLight => cx.five_faces(false),
        K::SmallFiveFaceWith4Vertex => cx.five_faces(true),
        K::AdjacentFiveFaces => cx.adjacent_five_faces(),
    };
    out.retain(M::is_injective);
    let mut seen = BTreeSet::new();
    out.retain(|m| seen.insert((m.binding.clone(), m.case_tag.clone())));
    out
}

struct Cx<'a> {
    g: &'a PlaneGraph,
    s: &'a Structures,
}

const ORIENTATIONS: [bool; 2] = [false, true];

impl<'a> Cx<'a> {
    fn internal(&self, v: VertexId) -> bool {
        self.s.internal[v]
    }

    fn light(&self, v: VertexId) -> bool {
        self.s.light[v]
    }

    fn deg(&self, v: VertexId) -> usize {
        self.g.degree(v)
    }

    /// Sorted degrees of a bounded 3-face with all vertices internal.
    fn tri_type(&self, f: FaceId) -> Option<&[usize]> {
        let p = &self.s.faces[f];
        (f != self.g.outer_face() && is_triangle(self.g, f) && p.all_internal).then_some(&p.vertex_degrees[..])
    }

    fn tri_is(&self, f: FaceId, types: &[[usize; 3]]) -> bool {
        self.tri_type(f).is_some_and(|t| types.iter().any(|want| t == want))
    }

    fn is_weak(&self, f: FaceId) -> bool {
        self.s.faces[f].is_weak
    }

    /// Neighbours of `v` outside `skip`.
    fn others(&self, v: VertexId, skip: &[VertexId]) -> Vec<VertexId> {
        self.g.neighbors(v).iter().copied().filter(|w| !skip.contains(w)).collect()
    }

    /// The single neighbour of `v` outside `skip`.
    fn third(&self, v: VertexId, skip: &[VertexId]) -> Option<VertexId> {
        match self.others(v, skip)[..] {
            [w] => Some(w),
            _ => None,
        }
    }

    fn min_degree(&self) -> Vec<M> {
        (0..self.g.vertex_count())
            .filter(|&v| self.internal(v) && self.deg(v) <= 2)
            .map(|v| M::new(K::MinDegree, format!("degree {}", self.deg(v)), false).bind("v", v))
            .collect()
    }

    fn separating_good_cycles(&self) -> Vec<M> {
        let mut out = Vec::new();
        for c in simple_cycles(self.g.adjacency(), MAX_CLASSIFIED_LEN) {
            let Ok((inside, outside)) = sides_of_cycle(self.g, &c) else { continue };
            if inside.is_empty() || outside.is_empty() || !is_good(self.g, &c) {
                continue;
            }
            let mut m = M::new(K::SeparatingGoodCycle, format!("length {}", c.len()), false);
            for (i, &v) in c.iter().enumerate() {
                m = m.bind(&format!("c{}", i + 1), v);
            }
            out.push(m);
        }
        out
    }

    /// Leaf blocks hanging off a cut vertex whose other vertices avoid D.
    fn cut_vertices(&self) -> Vec<M> {
        let mut out = Vec::new();
        let blocks = biconnected_blocks(self.g.adjacency());
        let cuts: BTreeSet<VertexId> = articulation_points(&blocks, self.g.vertex_count());
        for b in &blocks {
            let in_block: Vec<VertexId> = b.iter().copied().filter(|v| cuts.contains(v)).collect();
            let [v] = in_block[..] else { continue };
            let rest: Vec<VertexId> = b.iter().copied().filter(|&w| w != v).collect();
            if rest.iter().any(|&w| !self.internal(w)) {
                continue;
            }
            let mut m = M::new(K::CutVertex, format!("order {}", b.len()), false).bind("v", v);
            for (i, &w) in rest.iter().enumerate() {
                m = m.bind(&format!("b{}", i + 1), w);
            }
            out.push(m);
        }
        out
    }

    fn light_clusters(&self) -> Vec<M> {
        let mut out = Vec::new();
        for v in 0..self.g.vertex_count() {
            if !self.light(v) || !self.g.neighbors(v).iter().all(|&w| self.light(w)) {
                continue;
            }
            let start = self.g.neighbors(v)[0];
            let ring = Oriented::new(self.g, false).around(v, start);
            out.push(
                M::new(K::LightCluster, "", false).bind("v", v).bind("v1", ring[0]).bind("v2", ring[1]).bind("v3", ring[2]),
            );
        }
        out
    }

    fn light_triangles(&self) -> Vec<M> {
        let mut out = Vec::new();
        for f in 0..self.g.face_count() {
            if !self.tri_is(f, &[[3, 3, 4]]) {
                continue;
            }
            let tri = self.g.face(f);
            let w = *tri.iter().find(|&&x| self.deg(x) == 4).unwrap();
            for &u in tri {
                if u == w {
                    continue;
                }
                let v = *tri.iter().find(|&&x| x != u && x != w).unwrap();
                let Some(x) = self.third(u, tri) else { continue };
                if self.light(x) {
                    out.push(M::new(K::LightTriangle334, "", false).bind("u", u).bind("v", v).bind("w", w).bind("x", x));
                }
            }
        }
        out
    }

    fn two_pendent(&self) -> Vec<M> {
        let mut out = Vec::new();
        for x in 0..self.g.vertex_count() {
            if !self.internal(x) || self.deg(x) != 4 {
                continue;
            }
            let pend: Vec<_> = self.s.pendent_faces_of(x).copied().collect();
            for pu in &pend {
                if !self.tri_is(pu.face, &[[3, 3, 3]]) {
                    continue;
                }
                for pv in &pend {
                    if pv.face == pu.face || !self.tri_is(pv.face, &[[3, 3, 3], [3, 3, 4]]) {
                        continue;
                    }
                    let (u1, v1) = (pu.pendent, pv.pendent);
                    let vf = Oriented::new(self.g, false).face_from(pv.face, v1);
                    let (v2, v3) = if self.deg(vf[1]) == 4 { (vf[2], vf[1]) } else { (vf[1], vf[2]) };
                    let cw = Oriented::new(self.g, false);
                    if cw.next(x, cw.next(x, u1)) == v1 {
                        // u1 and v1 opposite around x
                        let x1 = cw.next(x, u1);
                        let x2 = cw.next(x, v1);
                        let uf = cw.face_from(pu.face, u1);
                        out.push(
                            M::new(K::TwoPendent, "opposite", false)
                                .bind("x", x)
                                .bind("x1", x1)
                                .bind("x2", x2)
                                .bind("u1", u1)
                                .bind("u2", uf[1])
                                .bind("u3", uf[2])
                                .bind("v1", v1)
                                .bind("v2", v2)
                                .bind("v3", v3),
                        );
                        continue;
                    }
                    // u1, x1, x2, v1 in order around x
                    let mirrored = cw.next(x, v1) != u1;
                    let o = Oriented::new(self.g, mirrored);
                    let x1 = o.next(x, u1);
                    let x2 = o.next(x, x1);
                    debug_assert_eq!(o.next(x, x2), v1);
                    let uf = o.face_from(pu.face, u1);
                    let (u2, u3) = (uf[1], uf[2]);
                    let Some(y) = self.third(u2, &[u1, u3]) else { continue };
                    out.push(
                        M::new(K::TwoPendent, "adjacent", mirrored)
                            .bind("x", x)
                            .bind("x1", x1)
                            .bind("x2", x2)
                            .bind("u1", u1)
                            .bind("u2", u2)
                            .bind("u3", u3)
                            .bind("v1", v1)
                            .bind("v2", v2)
                            .bind("v3", v3)
                            .bind("y", y),
                    );
                }
            }
        }
        out
    }

    fn incident_plus_pendent(&self) -> Vec<M> {
        let mut out = Vec::new();
        for u in 0..self.g.vertex_count() {
            if !self.internal(u) || self.deg(u) != 4 {
                continue;
            }
            for mirrored in ORIENTATIONS {
                let o = Oriented::new(self.g, mirrored);
                for &u1 in self.g.neighbors(u) {
                    let t = o.angle_face(u, u1);
                    if !self.tri_is(t, &[[3, 3, 4], [3, 4, 4]]) {
                        continue;
                    }
                    let u2 = o.next(u, u1);
                    let u3 = o.next(u, u2);
                    let u4 = o.next(u, u3);
                    for p in self.s.pendent_faces_of(u) {
                        if p.pendent != u3 || !self.tri_is(p.face, &[[3, 3, 3], [3, 3, 4]]) {
                            continue;
                        }
                        let pf = o.face_from(p.face, u3);
                        out.push(
                            M::new(K::IncidentPlusPendent, "", mirrored)
                                .bind("u", u)
                                .bind("u1", u1)
                                .bind("u2", u2)
                                .bind("u3", u3)
                                .bind("u4", u4)
                                .bind("u3p", pf[1])
                                .bind("u3pp", pf[2]),
                        );
                    }
                }
            }
        }
        out
    }

    fn two_incident(&self) -> Vec<M> {
        let mut out = Vec::new();
        let inc = [[3, 3, 4], [3, 4, 4]];
        for v in 0..self.g.vertex_count() {
            if !self.internal(v) || self.deg(v) != 4 {
                continue;
            }
            for mirrored in ORIENTATIONS {
                let o = Oriented::new(self.g, mirrored);
                for &v1 in self.g.neighbors(v) {
                    let t1 = o.angle_face(v, v1);
                    let v2 = o.next(v, v1);
                    let v3 = o.next(v, v2);
                    let v4 = o.next(v, v3);
                    let t2 = o.angle_face(v, v3);
                    if !self.tri_is(t1, &inc) || !self.tri_is(t2, &inc) {
                        continue;
                    }
                    let base = |tag: &str| {
                        M::new(K::TwoIncident344, tag, mirrored)
                            .bind("v", v)
                            .bind("v1", v1)
                            .bind("v2", v2)
                            .bind("v3", v3)
                            .bind("v4", v4)
                    };
                    if self.tri_is(t1, &[[3, 3, 4]]) {
                        if !mirrored {
                            out.push(base("334-face"));
                        }
                        continue;
                    }
                    if self.tri_is(t2, &[[3, 3, 4]]) || self.deg(v1) != 4 {
                        continue;
                    }
                    if self.deg(v3) == 4 {
                        let (Some(v2p), Some(v4p)) = (self.third(v2, &[v, v1]), self.third(v4, &[v, v3])) else { continue };
                        out.push(base("v3-heavy").bind("v2p", v2p).bind("v4p", v4p));
                    } else {
                        let (Some(v2p), Some(v3p)) = (self.third(v2, &[v, v1]), self.third(v3, &[v, v4])) else { continue };
                        let (v1p, v1pp) = after_face(&o, v1, t1);
                        let (v4p, v4pp) = after_face(&o, v4, t2);
                        out.push(
                            base("v4-heavy")
                                .bind("v1p", v1p)
                                .bind("v1pp", v1pp)
                                .bind("v2p", v2p)
                                .bind("v3p", v3p)
                                .bind("v4p", v4p)
                                .bind("v4pp", v4pp),
                        );
                    }
                }
            }
        }
        out
    }

    fn five_two_incident(&self) -> Vec<M> {
        let mut out = Vec::new();
        for v in 0..self.g.vertex_count() {
            if !self.internal(v) || self.deg(v) != 5 {
                continue;
            }
            for mirrored in ORIENTATIONS {
                let o = Oriented::new(self.g, mirrored);
                for &v1 in self.g.neighbors(v) {
                    let ta = o.angle_face(v, v1);
                    if !self.tri_is(ta, &[[3, 3, 5]]) || !self.is_weak(ta) {
                        continue;
                    }
                    let v2 = o.next(v, v1);
                    let v3 = o.next(v, v2);
                    let v4 = o.next(v, v3);
                    let v5 = o.next(v, v4);
                    if !self.tri_is(o.angle_face(v, v3), &[[3, 3, 5], [3, 4, 5]]) {
                        continue;
                    }
                    for (x, y) in [(v1, v2), (v2, v1)] {
                        let Some(xp) = self.third(x, &[v, y]) else { continue };
                        if !self.light(xp) {
                            continue;
                        }
                        let xname = if x == v1 { "x=v1" } else { "x=v2" };
                        let m = |tag: &str| {
                            M::new(K::FiveVertexTwoIncident, format!("{tag} {xname}"), mirrored)
                                .bind("v", v)
                                .bind("v1", v1)
                                .bind("v2", v2)
                                .bind("v3", v3)
                                .bind("v4", v4)
                                .bind("v5", v5)
                                .bind("xp", xp)
                        };
                        if self.deg(v4) == 3 {
                            out.push(m("v4-light"));
                        } else if let Some(v3p) = self.third(v3, &[v, v4]) {
                            out.push(m("v4-heavy").bind("v3p", v3p));
                        }
                    }
                }
            }
        }
        out
    }

    fn five_pendent(&self) -> Vec<M> {
        let mut out = Vec::new();
        for v in 0..self.g.vertex_count() {
            if !self.internal(v) || self.deg(v) != 5 {
                continue;
            }
            let faces = self.g.incident_faces(v);
            let fa: Vec<FaceId> = faces.iter().copied().filter(|&f| self.tri_is(f, &[[3, 3, 5]]) && self.is_weak(f)).collect();
            let fb: Vec<FaceId> = faces
                .iter()
                .copied()
                .filter(|&f| self.is_weak(f) && self.tri_type(f).is_some_and(|t| t[0] == 3 && t[1] == 5 && t[2] >= 5))
                .collect();
            let pend: Vec<_> = self.s.pendent_faces_of(v).filter(|p| self.tri_is(p.face, &[[3, 3, 3]])).copied().collect();
            for &a in &fa {
                for &b in &fb {
                    if a == b {
                        continue;
                    }
                    let bt = self.g.face(b);
                    let v4 = *bt.iter().find(|&&x| x != v && self.deg(x) == 3).unwrap();
                    let v5 = *bt.iter().find(|&&x| x != v && x != v4).unwrap();
                    let Some(v4p) = self.third(v4, bt) else { continue };
                    if !self.light(v4p) {
                        continue;
                    }
                    let at = self.g.face(a);
                    for &v3 in at {
                        if v3 == v {
                            continue;
                        }
                        let v2 = *at.iter().find(|&&x| x != v && x != v3).unwrap();
                        let Some(v3p) = self.third(v3, at) else { continue };
                        if !self.light(v3p) {
                            continue;
                        }
                        for p in &pend {
                            let pf = self.g.face(p.face);
                            let others: Vec<VertexId> = pf.iter().copied().filter(|&x| x != p.pendent).collect();
                            out.push(
                                M::new(K::FiveVertexPendent333, "", false)
                                    .bind("v", v)
                                    .bind("v1", p.pendent)
                                    .bind("v2", v2)
                                    .bind("v3", v3)
                                    .bind("v4", v4)
                                    .bind("v5", v5)
                                    .bind("w1", others[0])
                                    .bind("w2", others[1])
                                    .bind("v3p", v3p)
                                    .bind("v4p", v4p),
                            );
                        }
                    }
                }
            }
        }
        out
    }

    fn six_two_weak(&self) -> Vec<M> {
        let mut out = Vec::new();
        for v in 0..self.g.vertex_count() {
            if !self.internal(v) || self.deg(v) != 6 {
                continue;
            }
            for mirrored in ORIENTATIONS {
                let o = Oriented::new(self.g, mirrored);
                for &v1 in self.g.neighbors(v) {
                    let ring = o.around(v, v1);
                    let t1 = o.angle_face(v, ring[0]);
                    let t2 = o.angle_face(v, ring[2]);
                    let t3 = o.angle_face(v, ring[4]);
                    if !self.tri_is(t1, &[[3, 3, 6], [3, 4, 6]]) || self.deg(ring[1]) != 3 {
                        continue;
                    }
                    if !(self.tri_is(t2, &[[3, 3, 6]]) && self.is_weak(t2) && self.tri_is(t3, &[[3, 3, 6]]) && self.is_weak(t3)) {
                        continue;
                    }
                    let [_, v2, v3, v4, v5, v6] = ring[..] else { unreachable!() };
                    let (Some(v2p), Some(v5p)) = (self.third(v2, &[v, v1]), self.third(v5, &[v, v6])) else { continue };
                    for (x, y) in [(v3, v4), (v4, v3)] {
                        let Some(xp) = self.third(x, &[v, y]) else { continue };
                        if !self.light(xp) {
                            continue;
                        }
                        let mut m = M::new(K::SixVertexTwoWeak336, if x == v3 { "x=v3" } else { "x=v4" }, mirrored).bind("v", v);
                        for (i, &r) in ring.iter().enumerate() {
                            m = m.bind(&format!("v{}", i + 1), r);
                        }
                        out.push(m.bind("v2p", v2p).bind("v5p", v5p).bind("xp", xp));
                    }
                }
            }
        }
        out
    }

    fn wheels(&self, anti: bool) -> Vec<M> {
        let mut out = Vec::new();
        for w in &self.s.wheels {
            if w.is_anti != anti {
                continue;
            }
            for mirrored in ORIENTATIONS {
                let o = Oriented::new(self.g, mirrored);
                // spoke vertices at each corner, first one after the centre angle
                let spoke = |x: VertexId| {
                    let a = *self.g.neighbors(x).iter().find(|&&a| o.angle_face(x, a) == w.center).unwrap();
                    let b = o.next(x, a);
                    let p = o.next(x, b);
                    (a, p, o.next(x, p))
                };
                let bits: Vec<bool> = w.corners.iter().map(|&x| self.deg(spoke(x).1) == 3).collect();
                // u1 and v1 are 3-vertices; in an antiwheel w is the odd corner
                let (u, v, ww) = if anti {
                    let odd = (0..3).find(|&i| bits[i] != bits[(i + 1) % 3] && bits[i] != bits[(i + 2) % 3]).unwrap();
                    if bits[odd] {
                        continue;
                    }
                    let wc = w.corners[odd];
                    let u = spoke(wc).0;
                    (u, spoke(u).0, wc)
                } else {
                    if !bits[0] {
                        continue;
                    }
                    let u = w.corners[0];
                    let v = spoke(u).0;
                    (u, v, spoke(v).0)
                };
                let (_, u1, u2) = spoke(u);
                let (_, v1, v2) = spoke(v);
                let (_, w1, w2) = spoke(ww);
                let (u1p, v1p, l3p, l3name) = if anti {
                    (self.third(u1, &[u, u2]), self.third(v1, &[v, v2]), self.third(w2, &[ww, w1]), "w2p")
                } else {
                    (self.third(u1, &[u, u2]), self.third(v1, &[v, v2]), self.third(w1, &[ww, w2]), "w1p")
                };
                let (Some(u1p), Some(v1p), Some(l3p)) = (u1p, v1p, l3p) else { continue };
                if anti && !(self.light(u1p) && self.light(v1p) && self.light(l3p)) {
                    continue;
                }
                let kind = if anti { K::AntiwheelAllLight } else { K::Wheel };
                out.push(
                    M::new(kind, "", mirrored)
                        .bind("u", u)
                        .bind("v", v)
                        .bind("w", ww)
                        .bind("u1", u1)
                        .bind("u2", u2)
                        .bind("v1", v1)
                        .bind("v2", v2)
                        .bind("w1", w1)
                        .bind("w2", w2)
                        .bind("u1p", u1p)
                        .bind("v1p", v1p)
                        .bind(l3name, l3p),
                );
            }
        }
        out
    }

    /// Five-faces whose vertices are all light, or all light but one internal 4-vertex.
    fn five_faces(&self, with_four: bool) -> Vec<M> {
        let mut out = Vec::new();
        let f0 = self.g.outer_face();
        for f in 0..self.g.face_count() {
            let walk = self.g.face(f);
            if f == f0 || walk.len() != 5 || walk.iter().collect::<BTreeSet<_>>().len() != 5 {
                continue;
            }
            let heavy: Vec<usize> = (0..5).filter(|&i| !self.light(walk[i])).collect();
            let starts: Vec<usize> = match (with_four, &heavy[..]) {
                (false, []) => (0..5).collect(),
                (true, &[i]) if self.internal(walk[i]) && self.deg(walk[i]) == 4 => vec![i],
                _ => continue,
            };
            let mut best: Option<(u8, M)> = None;
            for &i in &starts {
                for mirrored in ORIENTATIONS {
                    let o = Oriented::new(self.g, mirrored);
                    let u = o.face_from(f, walk[i]);
                    let mut outer = Vec::new();
                    for k in 0..5 {
                        let skip = [u[(k + 4) % 5], u[(k + 1) % 5]];
                        outer.push(self.others(u[k], &skip));
                    }
                    if outer.iter().skip(1).any(|o| o.len() != 1) {
                        continue;
                    }
                    let single = |k: usize| outer[k][0];
                    // prefer u5', u1', u2' internal; u1' only counts when u1 is light
                    let u1_ok = with_four || self.internal(single(0));
                    let ends = [self.internal(single(4)), self.internal(single(1))];
                    let rank = match (u1_ok && ends[0] && ends[1], ends[0] || ends[1]) {
                        (true, _) => 0,
                        (false, true) => 1,
                        _ => 2,
                    };
                    let tag = ["", "ends partly on D", "ends on D"][rank as usize];
                    let kind = if with_four { K::SmallFiveFaceWith4Vertex } else { K::FiveFaceAllLight };
                    let mut m = M::new(kind, tag, mirrored);
                    for (k, &x) in u.iter().enumerate() {
                        m = m.bind(&format!("u{}", k + 1), x);
                    }
                    if with_four {
                        let (a, b) = after_face(&o, u[0], f);
                        m = m.bind("u1p", a).bind("u1pp", b);
                    } else {
                        m = m.bind("u1p", single(0));
                    }
                    for k in 1..5 {
                        m = m.bind(&format!("u{}p", k + 1), single(k));
                    }
                    if best.as_ref().is_none_or(|(r, _)| rank < *r) {
                        best = Some((rank, m));
                    }
                }
            }
            out.extend(best.map(|(_, m)| m));
        }
        out
    }

    fn adjacent_five_faces(&self) -> Vec<M> {
        let mut out = Vec::new();
        let f0 = self.g.outer_face();
        let ok_face = |f: FaceId| f != f0 && self.g.face_degree(f) == 5 && self.g.face(f).iter().collect::<BTreeSet<_>>().len() == 5;
        for u in 0..self.g.vertex_count() {
            if !self.internal(u) || self.deg(u) != 5 {
                continue;
            }
            for &v in self.g.neighbors(u) {
                let (f, h) = (self.g.dart_face(u, v), self.g.dart_face(v, u));
                if f == h || !ok_face(f) || !ok_face(h) {
                    continue;
                }
                let fv: BTreeSet<VertexId> = self.g.face(f).iter().copied().collect();
                let hv: BTreeSet<VertexId> = self.g.face(h).iter().copied().collect();
                if fv.intersection(&hv).count() != 2 {
                    continue;
                }
                if fv.union(&hv).any(|&x| x != u && !self.light(x)) {
                    continue;
                }
                // walks from v away from u: a1 a2 a3 on f, b1 b2 b3 on h
                let path = |face: FaceId| {
                    let w = Oriented::new(self.g, false).face_from(face, v);
                    if w[1] == u {
                        vec![w[4], w[3], w[2]]
                    } else {
                        vec![w[1], w[2], w[3]]
                    }
                };
                let (a, b) = (path(f), path(h));
                out.push(
                    M::new(K::AdjacentFiveFaces, "", false)
                        .bind("u", u)
                        .bind("v", v)
                        .bind("a1", a[0])
                        .bind("a2", a[1])
                        .bind("a3", a[2])
                        .bind("b1", b[0])
                        .bind("b2", b[1])
                        .bind("b3", b[2]),
                );
            }
        }
        out
    }
}

/// The two neighbours of a 4-vertex `x` that follow its angle in face `f`,
/// in the orientation's order.
fn after_face(o: &Oriented<'_>, x: VertexId, f: FaceId) -> (VertexId, VertexId) {
    let a = *o.g.neighbors(x).iter().find(|&&a| o.angle_face(x, a) == f).expect("x lies on f");
    let p = o.next(x, o.next(x, a));
    (p, o.next(x, p))
}

/// Vertex sets of the biconnected components (bridges count as blocks).
fn biconnected_blocks(adj: &[Vec<VertexId>]) -> Vec<Vec<VertexId>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(VertexId, VertexId)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbour index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&(u, parent, idx)) = stack.last() {
            if idx < adj[u].len() {
                let w = adj[u][idx];
                stack.last_mut().unwrap().2 += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((u, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, u, 0));
                } else if w != parent && disc[w] < disc[u] {
                    edge_stack.push((u, w));
                    low[u] = low[u].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if let Some(&(p, _, _)) = stack.last() {
                low[p] = low[p].min(low[u]);
                if low[u] >= disc[p] {
                    let mut block = BTreeSet::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        block.insert(a);
                        block.insert(b);
                        if (a, b) == (p, u) {
                            break;
                        }
                    }
                    blocks.push(block.into_iter().collect());
                }
            }
        }
    }
    blocks.sort();
    blocks
}

fn articulation_points(blocks: &[Vec<VertexId>], n: usize) -> BTreeSet<VertexId> {
    let mut count = vec![0; n];
    for b in blocks {
        for &v in b {
            count[v] += 1;
        }
    }
    (0..n).filter(|&v| count[v] > 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::*;

    #[test]
    fn blocks_of_a_bowtie() {
        // two triangles sharing vertex 2
        let adj = vec![vec![1, 2], vec![0, 2], vec![0, 1, 3, 4], vec![2, 4], vec![2, 3]];
        let b = biconnected_blocks(&adj);
        assert_eq!(b, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(articulation_points(&b, 5), BTreeSet::from([2]));
    }

    #[test]
    fn claw_host_has_a_light_cluster_free_centre() {
        let g = claw555_host();
        let all = detect_all(&g);
        assert!(all.iter().all(|m| m.kind != K::LightCluster));
        assert!(all.iter().all(|m| m.kind != K::MinDegree));
    }
}
