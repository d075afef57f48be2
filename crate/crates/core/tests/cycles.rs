use std::collections::BTreeSet;

use discharge_lab::corpus::cycle_hosts;
use discharge_lab::cycles::{
    all_bad_partitions, check_bad_shape, classify_cycle, find_bad_partition, sides_of_cycle, sides_with_outer,
    simple_cycles, BadKind, Classification,
};
use discharge_lab::oracle::{bad_kinds_by_gaps, interior_by_flood};
use discharge_lab::plane_graph::PlaneGraph;

fn host(name: &str) -> PlaneGraph {
    cycle_hosts().into_iter().find(|(n, _)| *n == name).unwrap().1
}

fn rim(g: &PlaneGraph) -> Vec<usize> {
    g.outer_walk().to_vec()
}

#[test]
fn drawn_hosts_classify_as_intended() {
    let expect = [
        ("claw_555", Some(BadKind::Claw555)),
        ("claw_377", Some(BadKind::Claw377)),
        ("claw_557", Some(BadKind::Claw557)),
        ("claw_miss_9", None),
        ("edge_claw_3737", Some(BadKind::EdgeClaw3737)),
        ("edge_claw_5555", Some(BadKind::EdgeClaw5555)),
        ("edge_claw_3738", Some(BadKind::EdgeClaw3738)),
        ("edge_claw_miss_10", None),
        ("path_claw_55555", Some(BadKind::PathClaw55555)),
        ("pentagon_claw_55555", Some(BadKind::PentagonClaw55555)),
    ];
    for (name, kind) in expect {
        let g = host(name);
        let c = rim(&g);
        let got = find_bad_partition(&g, &c).unwrap().map(|p| p.kind);
        assert_eq!(got, kind, "{name}");
        if let Some(k) = kind {
            assert_eq!(c.len(), k.cycle_length(), "{name}");
        }
    }
}

#[test]
fn pentagon_host_agrees_with_brute_force() {
    // 15 vertices, so it sits outside the size bound of the corpus-wide check
    let g = host("pentagon_claw_55555");
    assert_eq!(g.vertex_count(), 15);
    for c in simple_cycles(g.adjacency(), 11) {
        let fast: BTreeSet<BadKind> = all_bad_partitions(&g, &c).unwrap().into_iter().map(|p| p.kind).collect();
        assert_eq!(fast, bad_kinds_by_gaps(&g, &c), "{c:?}");
    }
}

#[test]
fn bad_cells_are_faces_of_the_partition() {
    for (name, g) in cycle_hosts() {
        let c = rim(&g);
        let Ok(Classification::Bad(p)) = classify_cycle(&g, &c) else { continue };
        let total: usize = p.cells.iter().map(|cell| cell.length).sum();
        // every cycle edge lies on one cell, every core edge on two
        let core_edges = p.attachments.len() + p.core.len() - usize::from(p.core.len() < 5);
        assert_eq!(total, c.len() + 2 * core_edges, "{name}");
    }
}

#[test]
fn shape_check_flags_bare_edge_claw() {
    // a bare (3,7,3,8) template lacks the vertex with two inside edges that
    // a minimal counterexample would have
    let g = host("edge_claw_3738");
    let c = rim(&g);
    let p = find_bad_partition(&g, &c).unwrap().unwrap();
    let shape = check_bad_shape(&g, &c, &p).unwrap();
    assert_eq!(shape.violated_items(), BTreeSet::from([4]));

    let g = host("claw_555");
    let c = rim(&g);
    let p = find_bad_partition(&g, &c).unwrap().unwrap();
    assert!(check_bad_shape(&g, &c, &p).unwrap().passes());
}

#[test]
fn interior_matches_flood_fill() {
    for (name, g) in cycle_hosts() {
        for c in simple_cycles(g.adjacency(), 11) {
            let (inside, _) = sides_of_cycle(&g, &c).unwrap();
            let mut flood = interior_by_flood(&g, &c);
            flood.sort_unstable();
            let mut inside = inside.clone();
            inside.sort_unstable();
            assert_eq!(inside, flood, "{name} {c:?}");
        }
    }
}

#[test]
fn moving_the_outer_face_swaps_sides() {
    let g = host("edge_claw_5555");
    for c in simple_cycles(g.adjacency(), 11) {
        let here = sides_with_outer(&g, &c, g.outer_face()).unwrap();
        let Some(f) = (0..g.face_count()).find(|&f| here.is_inside(f)) else { continue };
        let there = sides_with_outer(&g, &c, f).unwrap();
        assert_eq!(here.interior, there.exterior, "{c:?}");
        assert_eq!(here.exterior, there.interior, "{c:?}");
    }
}

#[test]
fn bad_cycles_have_length_nine_to_eleven() {
    for (name, g) in cycle_hosts() {
        for c in simple_cycles(g.adjacency(), 11) {
            if find_bad_partition(&g, &c).unwrap().is_some() {
                assert!((9..=11).contains(&c.len()), "{name} {c:?}");
            }
        }
    }
}
