//! Reducible configurations: detection, graph surgery, validity of the
//! surgery, colour-extension recipes and exhaustive certification.

pub mod certify;
mod detect;
pub mod recipes;
pub mod surgery;

pub use detect::{detect, detect_all};
pub use recipes::{extend_back, recipe_branches, Extension, RecipeError, UNREACHABLE_GUARDS};
pub use surgery::{apply_surgery, validate_surgery, Surgery, SurgeryError, SurgeryValidity, TriangularReading};

use std::fmt;

use serde::Serialize;

use crate::plane_graph::{FaceId, PlaneGraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ConfigurationKind {
    MinDegree,
    SeparatingGoodCycle,
    CutVertex,
    LightCluster,
    LightTriangle334,
    TwoPendent,
    IncidentPlusPendent,
    TwoIncident344,
    FiveVertexTwoIncident,
    FiveVertexPendent333,
    SixVertexTwoWeak336,
    Wheel,
    AntiwheelAllLight,
    FiveFaceAllLight,
    SmallFiveFaceWith4Vertex,
    AdjacentFiveFaces,
}

impl ConfigurationKind {
    /// Case labels of the reduction, as the first word of a match's case tag.
    pub fn proof_cases(self) -> &'static [&'static str] {
        match self {
            ConfigurationKind::TwoPendent => &["opposite", "adjacent"],
            ConfigurationKind::TwoIncident344 => &["334-face", "v3-heavy", "v4-heavy"],
            ConfigurationKind::FiveVertexTwoIncident => &["v4-light", "v4-heavy"],
            _ => &[],
        }
    }

    pub const ALL: [ConfigurationKind; 16] = [
        ConfigurationKind::MinDegree,
        ConfigurationKind::SeparatingGoodCycle,
        ConfigurationKind::CutVertex,
        ConfigurationKind::LightCluster,
        ConfigurationKind::LightTriangle334,
        ConfigurationKind::TwoPendent,
        ConfigurationKind::IncidentPlusPendent,
        ConfigurationKind::TwoIncident344,
        ConfigurationKind::FiveVertexTwoIncident,
        ConfigurationKind::FiveVertexPendent333,
        ConfigurationKind::SixVertexTwoWeak336,
        ConfigurationKind::Wheel,
        ConfigurationKind::AntiwheelAllLight,
        ConfigurationKind::FiveFaceAllLight,
        ConfigurationKind::SmallFiveFaceWith4Vertex,
        ConfigurationKind::AdjacentFiveFaces,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConfigurationKind::MinDegree => "MinDegree",
            ConfigurationKind::SeparatingGoodCycle => "SeparatingGoodCycle",
            ConfigurationKind::CutVertex => "CutVertex",
            ConfigurationKind::LightCluster => "LightCluster",
            ConfigurationKind::LightTriangle334 => "LightTriangle334",
            ConfigurationKind::TwoPendent => "TwoPendent",
            ConfigurationKind::IncidentPlusPendent => "IncidentPlusPendent",
            ConfigurationKind::TwoIncident344 => "TwoIncident344",
            ConfigurationKind::FiveVertexTwoIncident => "FiveVertexTwoIncident",
            ConfigurationKind::FiveVertexPendent333 => "FiveVertexPendent333",
            ConfigurationKind::SixVertexTwoWeak336 => "SixVertexTwoWeak336",
            ConfigurationKind::Wheel => "Wheel",
            ConfigurationKind::AntiwheelAllLight => "AntiwheelAllLight",
            ConfigurationKind::FiveFaceAllLight => "FiveFaceAllLight",
            ConfigurationKind::SmallFiveFaceWith4Vertex => "SmallFiveFaceWith4Vertex",
            ConfigurationKind::AdjacentFiveFaces => "AdjacentFiveFaces",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|k| k.name() == s)
    }
}

impl fmt::Display for ConfigurationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A configuration found in a graph: named vertices plus the proof case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationMatch {
    pub kind: ConfigurationKind,
    pub binding: Vec<(String, VertexId)>,
    pub case_tag: String,
    /// Labels were read counterclockwise.
    pub mirrored: bool,
}

impl ConfigurationMatch {
    pub fn new(kind: ConfigurationKind, case_tag: impl Into<String>, mirrored: bool) -> Self {
        ConfigurationMatch { kind, binding: Vec::new(), case_tag: case_tag.into(), mirrored }
    }

    pub fn bind(mut self, name: &str, v: VertexId) -> Self {
        self.binding.push((name.to_string(), v));
        self
    }

    /// Vertex bound to `name`. Panics if the name is missing.
    pub fn get(&self, name: &str) -> VertexId {
        self.try_get(name).unwrap_or_else(|| panic!("{} binding has no `{name}`", self.kind))
    }

    pub fn try_get(&self, name: &str) -> Option<VertexId> {
        self.binding.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn vertices(&self) -> Vec<VertexId> {
        self.binding.iter().map(|&(_, v)| v).collect()
    }

    pub fn is_injective(&self) -> bool {
        let mut vs = self.vertices();
        vs.sort_unstable();
        vs.windows(2).all(|w| w[0] != w[1])
    }

    pub fn label(&self) -> String {
        if self.case_tag.is_empty() {
            self.kind.name().to_string()
        } else {
            format!("{}[{}]", self.kind, self.case_tag)
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let binding: serde_json::Map<String, serde_json::Value> =
            self.binding.iter().map(|(n, v)| (n.clone(), serde_json::Value::from(v + 1))).collect();
        serde_json::json!({
            "kind": self.kind.name(),
            "case": self.case_tag,
            "mirrored": self.mirrored,
            "binding": binding,
        })
    }
}

/// Reads rotations clockwise, or counterclockwise when `mirrored`.
#[derive(Clone, Copy)]
pub struct Oriented<'a> {
    pub g: &'a PlaneGraph,
    pub mirrored: bool,
}

impl<'a> Oriented<'a> {
    pub fn new(g: &'a PlaneGraph, mirrored: bool) -> Self {
        Oriented { g, mirrored }
    }

    /// Neighbour after `u` around `v`.
    pub fn next(&self, v: VertexId, u: VertexId) -> VertexId {
        if self.mirrored {
            self.g.clockwise_before(v, u)
        } else {
            self.g.clockwise_after(v, u)
        }
    }

    /// Face in the angle at `v` running from `u` to `next(v, u)`.
    pub fn angle_face(&self, v: VertexId, u: VertexId) -> FaceId {
        if self.mirrored {
            self.g.dart_face(v, self.next(v, u))
        } else {
            self.g.dart_face(v, u)
        }
    }

    /// Neighbours of `v` in order, starting at `u`.
    pub fn around(&self, v: VertexId, u: VertexId) -> Vec<VertexId> {
        let mut out = vec![u];
        let mut cur = self.next(v, u);
        while cur != u {
            out.push(cur);
            cur = self.next(v, cur);
        }
        out
    }

    /// Boundary walk of a bounded face in this orientation's clockwise sense,
    /// starting at `start`.
    pub fn face_from(&self, f: FaceId, start: VertexId) -> Vec<VertexId> {
        let mut walk = self.g.face(f).to_vec();
        if self.mirrored {
            walk.reverse();
        }
        let i = walk.iter().position(|&x| x == start).expect("vertex on face");
        walk.rotate_left(i);
        walk
    }
}
