//! The shipped graph corpus: seeded random generation, hand-built cycle
//! hosts, and the manifest that records what each graph is expected to be.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use walkdir::WalkDir;

use crate::configurations::{detect_all, ConfigurationKind};
use crate::oracle::class_g_verdict;
use crate::plane_graph::{trace_faces, FaceId, GraphError, PlaneGraph, VertexId};
use crate::plg;
use crate::samples::{circle, from_drawing};

pub const MANIFEST: &str = "manifest.json";
pub const DEFAULT_SEED: u64 = 0x5eed_0100;

/// Configuration hosts shipped under `hosts/`, by file stem.
pub const HOSTS: [(&str, ConfigurationKind); 21] = {
    use ConfigurationKind as K;
    [
        ("min_degree", K::MinDegree),
        ("separating_cycle", K::SeparatingGoodCycle),
        ("cut_vertex", K::CutVertex),
        ("light_cluster", K::LightCluster),
        ("light_triangle", K::LightTriangle334),
        ("two_pendent_opposite", K::TwoPendent),
        ("two_pendent_adjacent", K::TwoPendent),
        ("incident_plus_pendent_a", K::IncidentPlusPendent),
        ("incident_plus_pendent_b", K::IncidentPlusPendent),
        ("two_incident_light_face", K::TwoIncident344),
        ("two_incident_v3_heavy", K::TwoIncident344),
        ("two_incident_v4_heavy", K::TwoIncident344),
        ("five_two_incident_v4_light", K::FiveVertexTwoIncident),
        ("five_two_incident_v4_heavy", K::FiveVertexTwoIncident),
        ("five_pendent", K::FiveVertexPendent333),
        ("six_two_weak", K::SixVertexTwoWeak336),
        ("wheel", K::Wheel),
        ("antiwheel", K::AntiwheelAllLight),
        ("five_face_light", K::FiveFaceAllLight),
        ("small_five_face", K::SmallFiveFaceWith4Vertex),
        ("adjacent_five_faces", K::AdjacentFiveFaces),
    ]
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    /// Relative to the corpus directory, `/`-separated.
    pub path: String,
    pub class_g: bool,
    pub kinds: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub golden_ledger: Option<String>,
    /// The configuration this graph was built to exhibit.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub host_for: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub seed: u64,
    pub entries: Vec<ManifestEntry>,
}

#[derive(Debug, thiserror::Error)]
pub enum CorpusError {
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("{0}: {1}")]
    Manifest(PathBuf, serde_json::Error),
    #[error(transparent)]
    Plg(#[from] plg::PlgError),
    #[error("{0}: {1}")]
    Graph(String, GraphError),
    #[error("{0}: listed in the manifest but missing")]
    Missing(PathBuf),
}

/// A loaded corpus graph with its manifest entry.
#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub entry: ManifestEntry,
    pub graph: PlaneGraph,
}

impl Manifest {
    pub fn read(dir: &Path) -> Result<Manifest, CorpusError> {
        let p = dir.join(MANIFEST);
        let text = fs::read_to_string(&p).map_err(|e| CorpusError::Io(p.clone(), e))?;
        serde_json::from_str(&text).map_err(|e| CorpusError::Manifest(p, e))
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("manifest serializes");
        s.push('\n');
        s
    }
}

/// Reads the manifest and every graph it lists.
pub fn load(dir: &Path) -> Result<Vec<CorpusGraph>, CorpusError> {
    let m = Manifest::read(dir)?;
    m.entries
        .into_iter()
        .map(|entry| {
            let p = dir.join(&entry.path);
            if !p.exists() {
                return Err(CorpusError::Missing(p));
            }
            let graph = plg::read(&p)?;
            Ok(CorpusGraph { entry, graph })
        })
        .collect()
}

/// `.plg` files under `dir`, recursively, sorted.
pub fn plg_files(dir: &Path) -> Result<Vec<PathBuf>, CorpusError> {
    let mut out = Vec::new();
    for e in WalkDir::new(dir).sort_by_file_name() {
        let e = e.map_err(|e| CorpusError::Io(dir.to_path_buf(), e.into()))?;
        if e.file_type().is_file() && e.path().extension().is_some_and(|x| x == "plg") {
            out.push(e.into_path());
        }
    }
    out.sort();
    Ok(out)
}

/// Rotation system under construction. New edges always go into a corner of
/// a face, so every intermediate state stays plane.
#[derive(Debug, Clone)]
struct Builder {
    rot: Vec<Vec<VertexId>>,
}

impl Builder {
    fn cycle(k: usize) -> Self {
        Builder { rot: (0..k).map(|i| vec![(i + 1) % k, (i + k - 1) % k]).collect() }
    }

    fn n(&self) -> usize {
        self.rot.len()
    }

    /// The face on the far side of the starting cycle, fixed by the dart 1 -> 0.
    fn outer(&self, dart_face: &[Vec<FaceId>]) -> FaceId {
        let i = self.rot[1].iter().position(|&w| w == 0).expect("edge 0-1 is never removed");
        dart_face[1][i]
    }

    /// Vertex at corner `i` of `walk` and where a new neighbour goes in its rotation.
    fn slot(&self, walk: &[VertexId], i: usize) -> (VertexId, usize) {
        let k = walk.len();
        let (x, p) = (walk[i], walk[(i + k - 1) % k]);
        let r = &self.rot[x];
        if r.len() == 1 {
            return (x, 1);
        }
        (x, r.iter().position(|&w| w == p).unwrap())
    }

    /// A path of `len` edges from corner `i` to corner `j` of `walk`, or a
    /// pendant path of `len` edges hanging from corner `i` when `j` is `None`.
    fn add_path(&mut self, walk: &[VertexId], i: usize, j: Option<usize>, len: usize) {
        let (a, ia) = self.slot(walk, i);
        let end = j.map(|j| self.slot(walk, j));
        let fresh = if end.is_some() { len - 1 } else { len };
        let first = self.n();
        let chain: Vec<VertexId> = (first..first + fresh).collect();
        for _ in 0..fresh {
            self.rot.push(Vec::new());
        }
        let mut prev = a;
        for &x in &chain {
            self.rot[x].push(prev);
            if prev != a {
                self.rot[prev].push(x);
            }
            prev = x;
        }
        match end {
            Some((b, ib)) => {
                self.rot[a].insert(ia, chain.first().copied().unwrap_or(b));
                if let Some(&last) = chain.last() {
                    self.rot[last].push(b);
                }
                self.rot[b].insert(ib, prev);
            }
            None => {
                self.rot[a].insert(ia, chain[0]);
            }
        }
    }

    fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.rot[a].contains(&b)
    }

    fn adjacency(&self) -> Vec<Vec<VertexId>> {
        self.rot.clone()
    }

    fn finish(self) -> PlaneGraph {
        PlaneGraph::from_rotation_with_outer_dart(self.rot, 1, 0).expect("builder keeps the embedding plane")
    }
}

/// Shape of a random graph.
#[derive(Debug, Clone, Copy)]
pub struct GenParams {
    pub max_n: usize,
    /// Length of the starting cycle.
    pub start: usize,
    /// Reject any step that creates a 4- or 6-cycle.
    pub class_g: bool,
    /// Keep the starting cycle as the outer face.
    pub inside_only: bool,
}

/// Grows a graph from a cycle by inserting paths (ears) and pendant paths
/// into faces, chosen at random.
pub fn random_graph(rng: &mut ChaCha8Rng, p: GenParams) -> PlaneGraph {
    let mut b = Builder::cycle(p.start);
    let mut attempts = 0;
    while b.n() < p.max_n && attempts < 300 {
        attempts += 1;
        let (faces, dart_face) = trace_faces(&b.rot);
        let outer = b.outer(&dart_face);
        let choices: Vec<FaceId> = (0..faces.len()).filter(|&f| !p.inside_only || f != outer).collect();
        let Some(&f) = choices.choose(rng) else { break };
        let walk = &faces[f];
        let room = p.max_n - b.n();
        let mut next = b.clone();
        let i = rng.gen_range(0..walk.len());
        if rng.gen_bool(0.2) {
            let len = rng.gen_range(1..=room.min(2));
            next.add_path(walk, i, None, len);
        } else {
            let j = rng.gen_range(0..walk.len());
            let len = rng.gen_range(1..=(room + 1).min(4));
            if walk[i] == walk[j] || (len == 1 && b.has_edge(walk[i], walk[j])) {
                continue;
            }
            next.add_path(walk, i, Some(j), len);
        }
        if p.class_g && !class_g_verdict(&next.adjacency()) {
            continue;
        }
        b = next;
    }
    b.finish()
}

/// Drawn hosts for the bad-cycle templates and a few near misses: a cycle
/// on the unit circle with a small core inside attached at given positions.
pub fn cycle_hosts() -> Vec<(&'static str, PlaneGraph)> {
    // (name, cycle length, core points as (angle position, radius), core edges, attachments (core index, cycle position))
    type Drawing = (&'static str, usize, Vec<(f64, f64)>, Vec<(usize, usize)>, Vec<(usize, usize)>);
    let drawings: Vec<Drawing> = vec![
        ("claw_555", 9, vec![(0.0, 0.0)], vec![], vec![(0, 0), (0, 3), (0, 6)]),
        ("claw_377", 11, vec![(3.5, 0.3)], vec![], vec![(0, 0), (0, 1), (0, 6)]),
        ("claw_557", 11, vec![(3.0, 0.2)], vec![], vec![(0, 0), (0, 3), (0, 6)]),
        ("claw_miss_9", 9, vec![(2.5, 0.2)], vec![], vec![(0, 0), (0, 3), (0, 5)]),
        ("edge_claw_3737", 10, vec![(0.5, 0.5), (5.5, 0.5)], vec![(0, 1)], vec![(0, 0), (0, 1), (1, 5), (1, 6)]),
        ("edge_claw_5555", 10, vec![(1.5, 0.4), (6.5, 0.4)], vec![(0, 1)], vec![(0, 0), (0, 3), (1, 5), (1, 8)]),
        ("edge_claw_3738", 11, vec![(0.5, 0.5), (5.5, 0.5)], vec![(0, 1)], vec![(0, 0), (0, 1), (1, 5), (1, 6)]),
        ("edge_claw_miss_10", 10, vec![(0.5, 0.5), (5.0, 0.5)], vec![(0, 1)], vec![(0, 0), (0, 1), (1, 4), (1, 6)]),
        (
            "path_claw_55555",
            11,
            vec![(1.5, 0.45), (5.0, 0.3), (8.5, 0.45)],
            vec![(0, 1), (1, 2)],
            vec![(0, 0), (0, 3), (1, 5), (2, 7), (2, 10)],
        ),
        (
            "pentagon_claw_55555",
            10,
            (0..5).map(|i| (2.0 * i as f64, 0.45)).collect(),
            (0..5).map(|i| (i, (i + 1) % 5)).collect(),
            (0..5).map(|i| (i, 2 * i)).collect(),
        ),
    ];
    drawings
        .into_iter()
        .map(|(name, len, core, core_edges, att)| {
            let mut pts = circle(len, 1.0, 0.0);
            let step = std::f64::consts::TAU / len as f64;
            for &(at, r) in &core {
                pts.push((r * (at * step).cos(), r * (at * step).sin()));
            }
            let mut edges: Vec<(VertexId, VertexId)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
            edges.extend(core_edges.iter().map(|&(a, b)| (len + a, len + b)));
            edges.extend(att.iter().map(|&(c, p)| (len + c, p)));
            (name, from_drawing(&pts, &edges).expect("drawn host is plane"))
        })
        .collect()
}

/// Small fixed graphs every run should see.
pub fn basic_graphs() -> Vec<(&'static str, PlaneGraph)> {
    use crate::samples::*;
    vec![("k3", k3()), ("claw555", claw555_host()), ("c9", cycle_graph(9)), ("k4", k4()), ("path2", path2())]
}

fn write(path: &Path, text: &str) -> Result<(), CorpusError> {
    if let Some(d) = path.parent() {
        fs::create_dir_all(d).map_err(|e| CorpusError::Io(d.to_path_buf(), e))?;
    }
    fs::write(path, text).map_err(|e| CorpusError::Io(path.to_path_buf(), e))
}

/// Distinct random graphs drawn until `count` are collected.
fn distinct(rng: &mut ChaCha8Rng, count: usize, mut params: impl FnMut(&mut ChaCha8Rng) -> GenParams) -> Vec<String> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count && tries < count * 50 {
        tries += 1;
        let p = params(rng);
        let text = plg::write(&random_graph(rng, p));
        if seen.insert(text.clone()) {
            out.push(text);
        }
    }
    out
}

/// Counts of generated graphs.
pub const SMALL_GRAPHS: usize = 240;
pub const MEDIUM_GRAPHS: usize = 120;

/// Writes the generated part of the corpus under `dir` and rebuilds the
/// manifest over every `.plg` file found there. Shipped files (hosts,
/// golden ledgers) are left alone.
pub fn generate(dir: &Path, seed: u64) -> Result<Manifest, CorpusError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let starts_g = [3, 5, 7, 8, 9];
    let small = distinct(&mut rng, SMALL_GRAPHS, |r| {
        let class_g = r.gen_bool(0.5);
        let start = if class_g { *starts_g.choose(r).unwrap() } else { r.gen_range(3..=9) };
        GenParams { max_n: r.gen_range(start.max(4)..=12), start, class_g, inside_only: r.gen_bool(0.5) }
    });
    let medium = distinct(&mut rng, MEDIUM_GRAPHS, |r| {
        let start = *starts_g.choose(r).unwrap();
        GenParams { max_n: r.gen_range(13..=20), start, class_g: true, inside_only: r.gen_bool(0.6) }
    });
    for (i, text) in small.iter().enumerate() {
        write(&dir.join(format!("random/small/s{i:03}.plg")), text)?;
    }
    for (i, text) in medium.iter().enumerate() {
        write(&dir.join(format!("random/medium/m{i:03}.plg")), text)?;
    }
    for (name, g) in cycle_hosts() {
        write(&dir.join(format!("cycles/{name}.plg")), &plg::write(&g))?;
    }
    for (name, g) in basic_graphs() {
        write(&dir.join(format!("basic/{name}.plg")), &plg::write(&g))?;
    }
    let m = build_manifest(dir, seed)?;
    write(&dir.join(MANIFEST), &m.to_json())?;
    Ok(m)
}

/// Manifest over every `.plg` file under `dir`. Class membership comes from
/// the brute-force oracle; kinds are a snapshot of detection.
pub fn build_manifest(dir: &Path, seed: u64) -> Result<Manifest, CorpusError> {
    let mut entries = Vec::new();
    for p in plg_files(dir)? {
        let rel = p.strip_prefix(dir).unwrap_or(&p);
        let rel_s = rel.components().map(|c| c.as_os_str().to_string_lossy()).collect::<Vec<_>>().join("/");
        let g = plg::read(&p)?;
        let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        let golden = format!("golden/{stem}.ledger.json");
        let kinds: BTreeSet<&str> = detect_all(&g).iter().map(|m| m.kind.name()).collect();
        let host_for = if rel_s.starts_with("hosts/") {
            HOSTS.iter().find(|(s, _)| *s == stem).map(|(_, k)| k.name().to_string())
        } else {
            None
        };
        entries.push(ManifestEntry {
            path: rel_s,
            class_g: class_g_verdict(g.adjacency()),
            kinds: kinds.into_iter().map(String::from).collect(),
            golden_ledger: dir.join(&golden).exists().then_some(golden),
            host_for,
        });
    }
    Ok(Manifest { seed, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_stays_plane() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..60 {
            let p = GenParams { max_n: 14, start: [3, 5, 7, 8, 9][k % 5], class_g: k % 2 == 0, inside_only: k % 3 == 0 };
            let g = random_graph(&mut rng, p);
            assert_eq!(g.euler_characteristic(), 2);
            assert!(g.is_connected());
            if p.class_g {
                assert!(g.is_class_g());
            }
            if p.inside_only {
                assert_eq!(g.face_degree(g.outer_face()), p.start);
            }
        }
    }

    #[test]
    fn cycle_hosts_are_drawn() {
        let hosts = cycle_hosts();
        assert_eq!(hosts.len(), 10);
        for (name, g) in hosts {
            assert_eq!(g.euler_characteristic(), 2, "{name}");
        }
    }
}
