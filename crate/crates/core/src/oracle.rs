//! Brute-force reference implementations used to cross-check the fast paths.
//!
//! Nothing here shares code with the modules it checks: cycles are found by
//! plain path extension, the inside of a cycle by flooding the dual graph, and
//! bad partitions by reading cell lengths off the gaps between attachment
//! points along the cycle instead of tracing faces.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::cycles::BadKind;
use crate::plane_graph::{PlaneGraph, VertexId};

/// Whether `adj` has a simple cycle of exactly `len` vertices.
pub fn has_cycle_of_length(adj: &[Vec<VertexId>], len: usize) -> bool {
    fn extend(adj: &[Vec<VertexId>], start: VertexId, len: usize, path: &mut Vec<VertexId>, on: &mut [bool]) -> bool {
        let u = *path.last().unwrap();
        for &w in &adj[u] {
            if w == start && path.len() == len && len >= 3 {
                return true;
            }
            // every vertex of the cycle other than `start` is larger than it
            if w > start && !on[w] && path.len() < len {
                path.push(w);
                on[w] = true;
                let found = extend(adj, start, len, path, on);
                on[w] = false;
                path.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
    let mut on = vec![false; adj.len()];
    (0..adj.len()).any(|s| {
        let mut path = vec![s];
        on[s] = true;
        let r = extend(adj, s, len, &mut path, &mut on);
        on[s] = false;
        r
    })
}

fn connected(adj: &[Vec<VertexId>]) -> bool {
    if adj.is_empty() {
        return true;
    }
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

fn simple(adj: &[Vec<VertexId>]) -> bool {
    adj.iter().enumerate().all(|(u, ns)| {
        let set: BTreeSet<_> = ns.iter().collect();
        set.len() == ns.len() && !set.contains(&u)
    })
}

/// Class membership decided from scratch: connected, simple, and no cycle
/// of length 4 or 6.
pub fn class_g_verdict(adj: &[Vec<VertexId>]) -> bool {
    connected(adj) && simple(adj) && !has_cycle_of_length(adj, 4) && !has_cycle_of_length(adj, 6)
}

/// Vertices strictly inside `cycle`, where inside is the side away from the
/// outer face. Faces are flooded across every edge that is not on the cycle.
pub fn interior_by_flood(g: &PlaneGraph, cycle: &[VertexId]) -> Vec<VertexId> {
    let k = cycle.len();
    let on_cycle: BTreeSet<(VertexId, VertexId)> =
        (0..k).map(|i| (cycle[i].min(cycle[(i + 1) % k]), cycle[i].max(cycle[(i + 1) % k]))).collect();
    let mut reached = vec![false; g.face_count()];
    reached[g.outer_face()] = true;
    let mut stack = vec![g.outer_face()];
    while let Some(f) = stack.pop() {
        let walk = g.face(f);
        for i in 0..walk.len() {
            let (u, v) = (walk[i], walk[(i + 1) % walk.len()]);
            if on_cycle.contains(&(u.min(v), u.max(v))) {
                continue;
            }
            let other = g.dart_face(v, u);
            if !reached[other] {
                reached[other] = true;
                stack.push(other);
            }
        }
    }
    let cyc: BTreeSet<VertexId> = cycle.iter().copied().collect();
    (0..g.vertex_count())
        .filter(|v| !cyc.contains(v) && g.degree(*v) > 0 && g.faces_at(*v).iter().all(|&f| !reached[f]))
        .collect()
}

/// A core shape: the core vertices, the required number of attachments per
/// core vertex, and the core distance between any two of them.
struct Core {
    vertices: Vec<VertexId>,
    needs: Vec<usize>,
    dist: Vec<Vec<usize>>,
    pentagon: bool,
}

fn cores(g: &PlaneGraph, inside: &[bool]) -> Vec<Core> {
    let mut out = Vec::new();
    let inner: Vec<VertexId> = (0..g.vertex_count()).filter(|&v| inside[v]).collect();
    for &x in &inner {
        out.push(Core { vertices: vec![x], needs: vec![3], dist: vec![vec![0]], pentagon: false });
    }
    for &x in &inner {
        for &y in &inner {
            if x < y && g.has_edge(x, y) {
                out.push(Core { vertices: vec![x, y], needs: vec![2, 2], dist: vec![vec![0, 1], vec![1, 0]], pentagon: false });
            }
        }
    }
    for &y in &inner {
        for &x in &inner {
            for &z in &inner {
                if x < z && x != y && z != y && g.has_edge(x, y) && g.has_edge(y, z) {
                    out.push(Core {
                        vertices: vec![x, y, z],
                        needs: vec![2, 1, 2],
                        dist: vec![vec![0, 1, 2], vec![1, 0, 1], vec![2, 1, 0]],
                        pentagon: false,
                    });
                }
            }
        }
    }
    // pentagons p0 p1 p2 p3 p4 with p0 smallest and p1 < p4
    let nb = |v: VertexId| g.neighbors(v).iter().copied().filter(move |&w| inside[w]);
    for &p0 in &inner {
        for p1 in nb(p0).filter(|&w| w > p0) {
            for p2 in nb(p1).filter(|&w| w > p0) {
                for p3 in nb(p2).filter(|&w| w > p0 && w != p1) {
                    for p4 in nb(p3).filter(|&w| w > p1 && w != p2 && g.has_edge(w, p0)) {
                        let p = [p0, p1, p2, p3, p4];
                        let dist = (0..5).map(|i| (0..5).map(|j| (5 + j - i) % 5).map(|d| d.min(5 - d)).collect()).collect();
                        out.push(Core { vertices: p.to_vec(), needs: vec![1; 5], dist, pentagon: true });
                    }
                }
            }
        }
    }
    out
}

/// Whether a cyclic sequence of owners (indices into the core) can come from
/// a plane drawing of the core inside the cycle.
fn consistent(owners: &[usize], core: &Core) -> bool {
    let m = owners.len();
    if core.pentagon {
        let step = (5 + owners[1] - owners[0]) % 5;
        return (step == 1 || step == 4) && (0..m).all(|i| (5 + owners[(i + 1) % m] - owners[i]) % 5 == step);
    }
    // each core vertex's attachments form one contiguous block
    let changes = (0..m).filter(|&i| owners[i] != owners[(i + 1) % m]).count();
    let k = core.vertices.len();
    changes == if k == 1 { 0 } else { k }
}

/// Every arrangement of `items` (pairs of position and owner) sorted by
/// position, with owners at a shared position taken in every order.
fn arrangements(mut items: Vec<(usize, usize)>) -> Vec<Vec<usize>> {
    items.sort_unstable();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut last = usize::MAX;
    for &(p, o) in &items {
        if p != last {
            groups.push(Vec::new());
            last = p;
        }
        groups.last_mut().unwrap().push(o);
    }
    let mut out = vec![Vec::new()];
    for grp in groups {
        let perms: Vec<Vec<usize>> = grp.iter().copied().permutations(grp.len()).collect();
        out = out
            .into_iter()
            .flat_map(|pre: Vec<usize>| {
                perms.iter().map(move |p| {
                    let mut q = pre.clone();
                    q.extend(p);
                    q
                })
            })
            .collect();
    }
    out
}

fn template(core: &Core, cells: &[(usize, usize, usize)]) -> Option<BadKind> {
    let mut lens: Vec<usize> = cells.iter().map(|c| c.2).collect();
    lens.sort_unstable();
    match (core.vertices.len(), core.pentagon) {
        (1, _) => match lens[..] {
            [5, 5, 5] => Some(BadKind::Claw555),
            [3, 7, 7] => Some(BadKind::Claw377),
            [5, 5, 7] => Some(BadKind::Claw557),
            _ => None,
        },
        (2, _) => {
            let mut ends: Vec<usize> = cells.iter().filter(|c| c.0 == c.1).map(|c| c.2).collect();
            let mut sides: Vec<usize> = cells.iter().filter(|c| c.0 != c.1).map(|c| c.2).collect();
            ends.sort_unstable();
            sides.sort_unstable();
            match (&ends[..], &sides[..]) {
                ([3, 3], [7, 7]) => Some(BadKind::EdgeClaw3737),
                ([5, 5], [5, 5]) => Some(BadKind::EdgeClaw5555),
                ([3, 3], [7, 8]) => Some(BadKind::EdgeClaw3738),
                _ => None,
            }
        }
        (3, _) if lens == [5; 5] => Some(BadKind::PathClaw55555),
        // the pentagon itself is a sixth cell of length 5
        (5, true) if lens == [5; 5] => Some(BadKind::PentagonClaw55555),
        _ => None,
    }
}

/// Kinds of bad partition present in `cycle`, by exhaustive search over
/// interior cores and attachment choices. Cell lengths come from the gaps
/// between consecutive attachment points along the cycle.
pub fn bad_kinds_by_gaps(g: &PlaneGraph, cycle: &[VertexId]) -> BTreeSet<BadKind> {
    let n = g.vertex_count();
    let l = cycle.len();
    let mut pos = vec![usize::MAX; n];
    for (i, &c) in cycle.iter().enumerate() {
        pos[c] = i;
    }
    let mut inside = vec![false; n];
    for v in interior_by_flood(g, cycle) {
        inside[v] = true;
    }
    let mut found = BTreeSet::new();
    for core in cores(g, &inside) {
        let options: Vec<Vec<Vec<VertexId>>> = core
            .vertices
            .iter()
            .zip(&core.needs)
            .map(|(&x, &k)| {
                let on: Vec<VertexId> = g.neighbors(x).iter().copied().filter(|&w| pos[w] != usize::MAX).collect();
                on.into_iter().combinations(k).collect::<Vec<_>>()
            })
            .collect();
        let mut pick = vec![0usize; options.len()];
        if options.iter().any(|o| o.is_empty()) {
            continue;
        }
        loop {
            let mut items = Vec::new();
            for (i, o) in options.iter().enumerate() {
                for &c in &o[pick[i]] {
                    items.push((pos[c], i));
                }
            }
            let mut at: Vec<usize> = items.iter().map(|x| x.0).collect();
            at.sort_unstable();
            for owners in arrangements(items.clone()) {
                if !consistent(&owners, &core) {
                    continue;
                }
                let m = owners.len();
                let cells: Vec<(usize, usize, usize)> = (0..m)
                    .map(|i| {
                        let j = (i + 1) % m;
                        let gap = if j == 0 { at[0] + l - at[m - 1] } else { at[j] - at[i] };
                        (owners[i], owners[j], gap + 2 + core.dist[owners[i]][owners[j]])
                    })
                    .collect();
                if let Some(kind) = template(&core, &cells) {
                    found.insert(kind);
                }
            }
            // next attachment choice
            let mut i = 0;
            while i < pick.len() {
                pick[i] += 1;
                if pick[i] < options[i].len() {
                    break;
                }
                pick[i] = 0;
                i += 1;
            }
            if i == pick.len() {
                break;
            }
        }
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::*;

    #[test]
    fn cycle_lengths_of_small_graphs() {
        let c5 = cycle_graph(5);
        assert!(has_cycle_of_length(c5.adjacency(), 5));
        assert!(!has_cycle_of_length(c5.adjacency(), 3));
        let k4 = k4();
        assert!(has_cycle_of_length(k4.adjacency(), 3));
        assert!(has_cycle_of_length(k4.adjacency(), 4));
        assert!(!class_g_verdict(k4.adjacency()));
        assert!(class_g_verdict(k3().adjacency()));
    }

    #[test]
    fn claw_found_by_gaps() {
        let g = claw555_host();
        let outer = g.outer_walk().to_vec();
        assert_eq!(interior_by_flood(&g, &outer).len(), 1);
        assert_eq!(bad_kinds_by_gaps(&g, &outer), BTreeSet::from([BadKind::Claw555]));
        assert!(bad_kinds_by_gaps(&cycle_graph(9), &(0..9).collect::<Vec<_>>()).is_empty());
    }
}
