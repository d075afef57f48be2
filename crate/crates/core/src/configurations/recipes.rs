//! Colour-extension recipes: turn a colouring of the reduced graph into a
//! (1,0,0)-colouring of the original by replaying the proof's steps.
//!
//! "3-colour x" gives x the smallest colour unused on its coloured
//! neighbours. "(1,0,0)-colour x" does the same, or else uses colour 1 when x
//! has exactly one neighbour of colour 1 and that neighbour has no other.

use serde::Serialize;
use thiserror::Error;

use super::surgery::Surgery;
use super::{ConfigurationKind as K, ConfigurationMatch};
use crate::coloring::{is_valid, super_extend, verify_coloring, Color, Violation, COLORS};
use crate::cycles::sides_with_outer;
use crate::plane_graph::{PlaneGraph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq, Serialize)]
pub enum RecipeError {
    #[error("recipe stuck at `{step}` (vertex {vertex})")]
    Stuck { step: String, vertex: VertexId, colors: Vec<Color> },
    #[error("recipe finished with {} violations", violations.len())]
    Invalid { violations: Vec<Violation>, branches: Vec<&'static str> },
    #[error("recipe does not apply: {0}")]
    Inapplicable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub coloring: Vec<Color>,
    /// Proof branches taken, in order.
    pub branches: Vec<&'static str>,
}

type R<T = ()> = Result<T, RecipeError>;

/// Branch labels a recipe can record, per configuration kind.
pub fn recipe_branches(kind: K) -> &'static [&'static str] {
    match kind {
        K::IncidentPlusPendent => &["u1 takes a free colour", "u1 borrows the colour of u2"],
        K::TwoIncident344 => &[
            "v1 and v2 free",
            "v1 and v2 both take 1",
            "v has colour 1",
            "v recoloured 1",
            "v takes the shared colour",
            "v3 has the shared colour",
            "v1 has the shared colour",
            "v2 direct",
        ],
        K::FiveVertexTwoIncident => &["v and v3 free", "v3 takes 1"],
        K::FiveVertexPendent333 => &["swap v and v4"],
        K::SixVertexTwoWeak336 => &["v has the shared colour", "v1 has the shared colour", "swap v and v2"],
        K::Wheel => &[
            "outer colours distinct",
            "corners copy the outer colours",
            "a corner's far spoke blocks its colour",
            "two outer vertices have colour 1",
            "swap w and w1",
            "u recoloured 1",
        ],
        K::AntiwheelAllLight => &[
            "u2 and w1 not both the shared colour",
            "v2 recoloured",
            "v2 sees every colour",
            "v1 takes the spare colour",
            "rotate colours on v, v1, v2",
            "u2 and w1 both the shared colour",
            "u1' avoids the third colour",
            "fixed assignment",
        ],
        K::FiveFaceAllLight | K::SmallFiveFaceWith4Vertex => &["u5' not 1", "u2' not 1", "both ends 1"],
        _ => &[],
    }
}

/// Guards that undo a colour 1 the earlier steps cannot produce: each step
/// takes the smallest free colour, which rules these colourings out.
pub const UNREACHABLE_GUARDS: [&str; 2] = ["swap v and v2", "swap w and w1"];

/// Extends `result_colors` (a valid colouring of `s.result`) to `g`.
pub fn extend_back(g: &PlaneGraph, m: &ConfigurationMatch, s: &Surgery, result_colors: &[Color]) -> R<Extension> {
    let c: Vec<Color> = s.vertex_map.iter().map(|img| img.map_or(0, |r| result_colors[r])).collect();
    let mut st = St { g, m, c, branches: Vec::new() };
    st.run()?;
    if !is_valid(g.adjacency(), &st.c) {
        let violations = verify_coloring(g, &st.c);
        return Err(RecipeError::Invalid { violations, branches: st.branches });
    }
    Ok(Extension { coloring: st.c, branches: st.branches })
}

struct St<'a> {
    g: &'a PlaneGraph,
    m: &'a ConfigurationMatch,
    c: Vec<Color>,
    branches: Vec<&'static str>,
}

impl<'a> St<'a> {
    fn v(&self, name: &str) -> VertexId {
        self.m.get(name)
    }

    fn col(&self, x: VertexId) -> Color {
        self.c[x]
    }

    fn branch(&mut self, tag: &'static str) {
        self.branches.push(tag);
    }

    fn stuck(&self, step: &str, x: VertexId) -> RecipeError {
        RecipeError::Stuck { step: step.to_string(), vertex: x, colors: self.c.clone() }
    }

    /// Colours unused by the coloured neighbours of `x` outside `ignore`, ascending.
    fn free_colors(&self, x: VertexId, ignore: &[VertexId]) -> impl Iterator<Item = Color> + use<> {
        let mut used = 0u8;
        for &w in self.g.neighbors(x) {
            if !ignore.contains(&w) {
                used |= 1 << self.c[w];
            }
        }
        COLORS.into_iter().filter(move |&c| used & (1 << c) == 0)
    }

    fn can_three(&self, x: VertexId) -> bool {
        self.free_colors(x, &[]).next().is_some()
    }

    fn set(&mut self, x: VertexId, col: Color) {
        self.c[x] = col;
    }

    fn unset(&mut self, x: VertexId) {
        self.c[x] = 0;
    }

    fn swap(&mut self, x: VertexId, y: VertexId) {
        self.c.swap(x, y);
    }

    fn three(&mut self, x: VertexId) -> R {
        match self.free_colors(x, &[]).next() {
            Some(col) => {
                self.c[x] = col;
                Ok(())
            }
            None => Err(self.stuck("3-colour", x)),
        }
    }

    fn three_n(&mut self, names: &[&str]) -> R {
        for n in names {
            self.three(self.v(n))?;
        }
        Ok(())
    }

    fn ones_around(&self, x: VertexId) -> Vec<VertexId> {
        self.g.neighbors(x).iter().copied().filter(|&w| self.c[w] == 1).collect()
    }

    fn try_one(&mut self, x: VertexId) -> bool {
        if self.three(x).is_ok() {
            return true;
        }
        if let [w] = self.ones_around(x)[..] {
            if self.ones_around(w).is_empty() {
                self.c[x] = 1;
                return true;
            }
        }
        false
    }

    fn one(&mut self, x: VertexId) -> R {
        if self.try_one(x) {
            Ok(())
        } else {
            Err(self.stuck("(1,0,0)-colour", x))
        }
    }

    /// Colours `xs` properly and jointly, lexicographically smallest first,
    /// treating the edge `ignore` (if any) as absent. Leaves them unset on failure.
    fn try_joint_ignoring(&mut self, xs: &[VertexId], ignore: Option<(VertexId, VertexId)>) -> bool {
        fn go(st: &mut St<'_>, xs: &[VertexId], i: usize, ignore: Option<(VertexId, VertexId)>) -> bool {
            let Some(&x) = xs.get(i) else { return true };
            let skip = match ignore {
                Some((a, b)) if a == x => Some(b),
                Some((a, b)) if b == x => Some(a),
                _ => None,
            };
            for col in st.free_colors(x, skip.as_slice()) {
                st.c[x] = col;
                if go(st, xs, i + 1, ignore) {
                    return true;
                }
            }
            st.c[x] = 0;
            false
        }
        for &x in xs {
            self.c[x] = 0;
        }
        go(self, xs, 0, ignore)
    }

    fn joint(&mut self, names: &[&str]) -> R {
        let xs: Vec<VertexId> = names.iter().map(|n| self.v(n)).collect();
        if self.try_joint_ignoring(&xs, None) {
            Ok(())
        } else {
            Err(self.stuck("joint 3-colour", xs[0]))
        }
    }

    /// The single neighbour of `x` outside `skip`.
    fn third(&self, x: VertexId, skip: &[VertexId]) -> R<VertexId> {
        match self.g.neighbors(x).iter().copied().filter(|w| !skip.contains(w)).collect::<Vec<_>>()[..] {
            [w] => Ok(w),
            _ => Err(RecipeError::Inapplicable(format!("vertex {x} is not a 3-vertex of the configuration"))),
        }
    }

    /// `(x, y)` from a case tag such as `x=v3`.
    fn xy(&self, pair: [&str; 2]) -> (VertexId, VertexId) {
        if self.m.case_tag.split_whitespace().any(|t| t.strip_prefix("x=") == Some(pair[0])) {
            (self.v(pair[0]), self.v(pair[1]))
        } else {
            (self.v(pair[1]), self.v(pair[0]))
        }
    }

    fn run(&mut self) -> R {
        let case = self.m.case_tag.split(' ').next().unwrap_or("").to_string();
        match self.m.kind {
            K::MinDegree => self.three_n(&["v"]),
            K::SeparatingGoodCycle => self.inside_cycle(),
            K::CutVertex => self.pendant_block(),
            K::LightCluster => {
                self.three_n(&["v1", "v2", "v3"])?;
                self.one(self.v("v"))
            }
            K::LightTriangle334 => {
                self.three_n(&["w", "v", "x"])?;
                self.one(self.v("u"))
            }
            K::TwoPendent if case == "opposite" => {
                self.three_n(&["v3", "v2", "v1", "x", "u2", "u3"])?;
                self.one(self.v("u1"))
            }
            K::TwoPendent => {
                self.three_n(&["x", "u3"])?;
                self.joint(&["u1", "u2"])?;
                self.three_n(&["v3", "v2"])?;
                self.one(self.v("v1"))
            }
            K::IncidentPlusPendent => self.incident_plus_pendent(),
            K::TwoIncident344 => match case.as_str() {
                "334-face" => self.two_incident_light_face(),
                "v3-heavy" => self.two_incident_v3_heavy(),
                _ => self.two_incident_v4_heavy(),
            },
            K::FiveVertexTwoIncident => self.five_two_incident(&case),
            K::FiveVertexPendent333 => self.five_pendent(),
            K::SixVertexTwoWeak336 => self.six_two_weak(),
            K::Wheel => self.wheel(),
            K::AntiwheelAllLight => self.antiwheel(),
            K::FiveFaceAllLight | K::SmallFiveFaceWith4Vertex => self.five_face(),
            K::AdjacentFiveFaces => {
                self.three_n(&["u", "a3", "a2", "a1", "b3", "b2", "b1"])?;
                self.one(self.v("v"))
            }
        }
    }

    /// Super-extends the colouring of the cycle into its interior.
    fn inside_cycle(&mut self) -> R {
        let g = self.g;
        let cycle = self.m.vertices();
        let sides = sides_with_outer(g, &cycle, g.outer_face()).map_err(|e| RecipeError::Inapplicable(e.to_string()))?;
        let keep: Vec<VertexId> = cycle.iter().chain(&sides.interior).copied().collect();
        let mut id = vec![usize::MAX; g.vertex_count()];
        for (k, &x) in keep.iter().enumerate() {
            id[x] = k;
        }
        let on_cycle = |x: VertexId| cycle.contains(&x);
        // keep edges with an interior end, cycle edges and chords drawn inside
        let rotation: Vec<Vec<VertexId>> = keep
            .iter()
            .map(|&x| {
                g.rotation(x)
                    .iter()
                    .copied()
                    .filter(|&w| id[w] != usize::MAX)
                    .filter(|&w| {
                        !(on_cycle(x) && on_cycle(w))
                            || is_cycle_edge(&cycle, x, w)
                            || sides.is_inside(g.dart_face(x, w))
                    })
                    .map(|w| id[w])
                    .collect()
            })
            .collect();
        let (a, b) = (cycle[0], cycle[1]);
        let (t, h) = if sides.is_inside(g.dart_face(a, b)) { (b, a) } else { (a, b) };
        let inner = PlaneGraph::from_rotation_with_outer_dart(rotation, id[t], id[h])
            .map_err(|e| RecipeError::Inapplicable(e.to_string()))?;
        let pre: Vec<Option<Color>> = keep.iter().map(|&x| on_cycle(x).then(|| self.c[x])).collect();
        match super_extend(&inner, &pre) {
            Ok(Some(w)) => {
                for (k, &x) in keep.iter().enumerate() {
                    self.c[x] = w.coloring[k];
                }
                Ok(())
            }
            Ok(None) => Err(self.stuck("super-extend into the cycle", cycle[0])),
            Err(e) => Err(RecipeError::Inapplicable(e.to_string())),
        }
    }

    /// Properly 3-colours the block, then permutes colours to agree at the cut vertex.
    fn pendant_block(&mut self) -> R {
        let cut = self.v("v");
        let block: Vec<VertexId> = self.m.vertices();
        for &x in &block {
            if x != cut {
                self.c[x] = 0;
            }
        }
        let keep = self.c[cut];
        self.c[cut] = 0;
        // the block's only link to the rest is the cut vertex, so colour it in isolation
        let mut saved = Vec::new();
        for &x in &block {
            for &w in self.g.neighbors(x) {
                if !block.contains(&w) && self.c[w] != 0 {
                    saved.push((w, self.c[w]));
                    self.c[w] = 0;
                }
            }
        }
        let ok = self.try_joint_ignoring(&block, None);
        for &(w, col) in &saved {
            self.c[w] = col;
        }
        if !ok {
            self.c[cut] = keep;
            return Err(self.stuck("3-colour the pendant block", cut));
        }
        let from = self.c[cut];
        let perm = |col: Color| -> Color {
            if col == from {
                keep
            } else if col == keep {
                from
            } else {
                col
            }
        };
        for &x in &block {
            self.c[x] = perm(self.c[x]);
        }
        Ok(())
    }

    fn incident_plus_pendent(&mut self) -> R {
        self.joint(&["u3p", "u3pp"])?;
        let (u, u1, u2, u3) = (self.v("u"), self.v("u1"), self.v("u2"), self.v("u3"));
        if self.can_three(u1) {
            self.branch("u1 takes a free colour");
            self.three(u1)?;
        } else {
            self.branch("u1 borrows the colour of u2");
            self.set(u1, self.col(u2));
            self.unset(u2);
            self.three(u2)?;
        }
        self.three(u)?;
        self.one(u3)
    }

    fn two_incident_light_face(&mut self) -> R {
        self.joint(&["v3", "v4", "v"])?;
        let (v, v1, v2) = (self.v("v"), self.v("v1"), self.v("v2"));
        if self.try_joint_ignoring(&[v1, v2], None) {
            self.branch("v1 and v2 free");
            return Ok(());
        }
        let a = self.col(self.third(v1, &[v, v2])?);
        if a != 1 && self.col(v) != 1 {
            self.branch("v1 and v2 both take 1");
            self.set(v1, 1);
            self.set(v2, 1);
            Ok(())
        } else if self.col(v) == 1 {
            self.branch("v has colour 1");
            self.set(v1, 1);
            self.three(v2)
        } else {
            self.branch("v recoloured 1");
            self.set(v, 1);
            self.joint(&["v1", "v2"])
        }
    }

    fn two_incident_v3_heavy(&mut self) -> R {
        self.three_n(&["v1", "v3"])?;
        let alpha = self.col(self.v("v2p"));
        let (v, v1, v3) = (self.v("v"), self.v("v1"), self.v("v3"));
        if self.col(v1) != alpha && self.col(v3) != alpha {
            self.branch("v takes the shared colour");
            self.set(v, alpha);
            self.three_n(&["v2", "v4"])
        } else if self.col(v3) == alpha {
            self.branch("v3 has the shared colour");
            self.three_n(&["v2"])?;
            self.one(v)?;
            self.three_n(&["v4"])
        } else {
            self.branch("v1 has the shared colour");
            self.three_n(&["v4"])?;
            self.one(v)?;
            self.three_n(&["v2"])
        }
    }

    fn two_incident_v4_heavy(&mut self) -> R {
        self.three_n(&["v4", "v1"])?;
        self.joint(&["v3", "v"])?;
        let v2 = self.v("v2");
        if self.try_one(v2) {
            self.branch("v2 direct");
            return Ok(());
        }
        self.branch("v recoloured 1");
        self.set(self.v("v"), 1);
        self.three(v2)
    }

    fn five_two_incident(&mut self, case: &str) -> R {
        let (x, y) = self.xy(["v1", "v2"]);
        if case == "v4-light" {
            self.three_n(&["v4", "v"])?;
        } else {
            self.three_n(&["v4"])?;
            let (a, b) = (self.col(self.v("v3p")), self.col(self.v("v5")));
            if a != b || a == self.col(self.v("v4")) {
                self.branch("v and v3 free");
                self.joint(&["v", "v3"])?;
            } else {
                self.branch("v3 takes 1");
                self.set(self.v("v3"), 1);
                self.three_n(&["v"])?;
            }
        }
        self.three_n(&["xp"])?;
        self.three(y)?;
        self.one(x)
    }

    fn five_pendent(&mut self) -> R {
        self.three_n(&["v4p", "v4", "v"])?;
        if self.col(self.v("v")) == 1 {
            self.branch("swap v and v4");
            self.swap(self.v("v"), self.v("v4"));
        }
        self.three_n(&["v3p", "v2", "w1", "w2"])?;
        self.one(self.v("v3"))?;
        self.one(self.v("v1"))
    }

    fn six_two_weak(&mut self) -> R {
        let alpha = self.col(self.v("v2p"));
        self.three_n(&["v1", "v2", "v"])?;
        let (x, y) = self.xy(["v3", "v4"]);
        let (v, v5, v6) = (self.v("v"), self.v("v5"), self.v("v6"));
        if self.col(v) == alpha {
            self.branch("v has the shared colour");
            self.three_n(&["v6", "v5", "xp"])?;
            self.three(y)?;
            return self.one(x);
        }
        self.branch("v1 has the shared colour");
        if self.col(v) == 1 {
            self.branch("swap v and v2");
            self.swap(v, self.v("v2"));
        }
        self.three_n(&["xp"])?;
        self.three(y)?;
        self.one(x)?;
        // redo a light outer neighbour z of [v v5 v6] together with v5, v6
        let mut pick = None;
        for (t, other) in [(v5, v6), (v6, v5)] {
            let z = self.third(t, &[v, other])?;
            if self.g.is_light(z) {
                pick = Some((z, t, other));
                break;
            }
        }
        let (z, zx, zy) = pick.ok_or_else(|| RecipeError::Inapplicable("[v v5 v6] has no light outer neighbour".into()))?;
        self.unset(z);
        self.three(z)?;
        self.three(zy)?;
        self.one(zx)
    }

    fn wheel(&mut self) -> R {
        let corner = |st: &Self, [p, p1, p2, p1p]: [&str; 4]| (st.v(p), st.v(p1), st.v(p2), st.v(p1p));
        let mut cs = [
            corner(self, ["u", "u1", "u2", "u1p"]),
            corner(self, ["v", "v1", "v2", "v1p"]),
            corner(self, ["w", "w1", "w2", "w1p"]),
        ];
        let outer: Vec<Color> = cs.iter().map(|c| self.col(c.3)).collect();
        let distinct = outer[0] != outer[1] && outer[1] != outer[2] && outer[0] != outer[2];
        if distinct {
            self.branch("outer colours distinct");
            let k = outer.iter().position(|&c| c == 1).expect("one outer vertex has colour 1");
            cs.rotate_left((k + 1) % 3);
            let [a, b, w] = cs;
            let (ca, cb) = (self.col(a.3), self.col(b.3));
            for t in [a.2, b.2, w.2] {
                self.three(t)?;
            }
            if self.col(a.2) != ca && self.col(b.2) != cb {
                self.branch("corners copy the outer colours");
                self.set(a.0, ca);
                self.set(b.0, cb);
                self.set(w.0, 1);
                for t in [a.1, b.1, w.1] {
                    self.three(t)?;
                }
                return Ok(());
            }
            self.branch("a corner's far spoke blocks its colour");
            let (p, q, cq) = if self.col(a.2) == ca { (a, b, cb) } else { (b, a, ca) };
            self.set(p.1, cq);
            self.set(p.0, 1);
            if !self.try_joint_ignoring(&[q.0, q.1], None) {
                return Err(self.stuck("joint 3-colour", q.0));
            }
            if self.col(w.2) == 1 {
                self.three(w.0)?;
            } else {
                self.set(w.0, 1);
            }
            return self.three(w.1);
        }
        self.branch("two outer vertices have colour 1");
        let k = outer.iter().position(|&c| c != 1).ok_or_else(|| self.stuck("outer colours", cs[0].3))?;
        cs.rotate_left((k + 1) % 3);
        let [a, b, w] = cs;
        for t in [a.2, b.2, w.2, w.1, w.0] {
            self.three(t)?;
        }
        if self.col(w.0) == 1 {
            self.branch("swap w and w1");
            self.swap(w.0, w.1);
        }
        let other = 5 - self.col(w.0);
        for p in [a, b] {
            if !self.try_joint_ignoring(&[p.0, p.1], Some((a.0, b.0))) {
                return Err(self.stuck("joint 3-colour ignoring uv", p.0));
            }
        }
        if self.col(a.0) == other && self.col(b.0) == other {
            self.branch("u recoloured 1");
            self.set(a.0, 1);
        }
        Ok(())
    }

    fn antiwheel(&mut self) -> R {
        let n = |st: &Self, s: &str| st.v(s);
        let (u, v, w) = (n(self, "u"), n(self, "v"), n(self, "w"));
        let (u1, u2, v1, v2, w1, w2) = (n(self, "u1"), n(self, "u2"), n(self, "v1"), n(self, "v2"), n(self, "w1"), n(self, "w2"));
        let (u1p, v1p, w2p) = (n(self, "u1p"), n(self, "v1p"), n(self, "w2p"));
        let alpha = self.col(v2);
        let beta = self.col(u1p);
        self.three(u2)?;
        self.three(w1)?;
        if !(self.col(u2) == alpha && self.col(w1) == alpha) {
            self.branch("u2 and w1 not both the shared colour");
            self.joint(&["u", "v", "w"])?;
            for x in [u1p, w2p] {
                self.unset(x);
                self.three(x)?;
            }
            self.one(u1)?;
            self.one(w2)?;
            self.unset(v2);
            if self.three(v2).is_ok() {
                self.branch("v2 recoloured");
                self.unset(v1p);
                self.three(v1p)?;
                return self.one(v1);
            }
            self.set(v2, alpha);
            self.branch("v2 sees every colour");
            let cv = self.col(v);
            if alpha != 1 || cv == 1 {
                return Err(self.stuck("v2 sees every colour but v2 or v has the wrong colour", v2));
            }
            let d = 5 - cv;
            if self.col(v1p) != d {
                self.branch("v1 takes the spare colour");
                return self.three(v1);
            }
            self.branch("rotate colours on v, v1, v2");
            self.set(v1, 1);
            self.set(v2, cv);
            self.set(v, d);
            for x in [u1, u, w, w2] {
                self.unset(x);
            }
            self.set(w2p, alpha);
            self.set(u1p, beta);
            if !self.try_joint_ignoring(&[u, u1], None) {
                return Err(self.stuck("joint 3-colour", u));
            }
            if self.col(w1) == d {
                self.three(w)?;
                return self.one(w2);
            }
            self.set(w2, d);
            return self.one(w);
        }
        self.branch("u2 and w1 both the shared colour");
        if alpha == 1 {
            self.set(u, 1);
            return self.three_n(&["u1", "v1", "v", "w", "w2"]);
        }
        let gamma = 5 - alpha;
        if beta != gamma {
            self.branch("u1' avoids the third colour");
            self.three_n(&["v1", "v", "w", "w2"])?;
            self.set(u, 1);
            return self.three(u1);
        }
        self.branch("fixed assignment");
        for x in [u, w2, v1] {
            self.set(x, gamma);
        }
        for x in [u1, w, v] {
            self.set(x, 1);
        }
        Ok(())
    }

    fn five_face(&mut self) -> R {
        let order = if self.col(self.v("u5p")) != 1 {
            self.branch("u5' not 1");
            ["u1", "u2", "u3", "u4", "u5"]
        } else if self.col(self.v("u2p")) != 1 {
            self.branch("u2' not 1");
            ["u1", "u5", "u4", "u3", "u2"]
        } else {
            self.branch("both ends 1");
            ["u1", "u2", "u3", "u4", "u5"]
        };
        self.three_n(&order[..4])?;
        self.one(self.v(order[4]))
    }
}

fn is_cycle_edge(cycle: &[VertexId], a: VertexId, b: VertexId) -> bool {
    let k = cycle.len();
    (0..k).any(|i| {
        let (x, y) = (cycle[i], cycle[(i + 1) % k]);
        (x, y) == (a, b) || (x, y) == (b, a)
    })
}
