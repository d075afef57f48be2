use std::path::PathBuf;

use discharge_lab::configurations::certify::verify_reducibility;
use discharge_lab::configurations::{
    apply_surgery, detect, detect_all, recipe_branches, validate_surgery, ConfigurationKind, TriangularReading,
    UNREACHABLE_GUARDS,
};
use discharge_lab::corpus::HOSTS;
use discharge_lab::plane_graph::PlaneGraph;
use discharge_lab::plg;

fn host(stem: &str) -> PlaneGraph {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus/hosts").join(format!("{stem}.plg"));
    plg::read(&p).unwrap()
}

#[test]
fn every_kind_has_a_host() {
    for k in ConfigurationKind::ALL {
        assert!(HOSTS.iter().any(|&(_, hk)| hk == k), "{k}");
    }
}

#[test]
fn hosts_are_class_members_showing_their_kind() {
    for (stem, kind) in HOSTS {
        let g = host(stem);
        assert!(g.is_class_g(), "{stem}");
        assert!(g.outer_is_cycle(), "{stem}");
        assert!(!detect(&g, kind).is_empty(), "{stem} lacks {kind}");
    }
}

#[test]
fn matches_are_injective_and_listed_once() {
    for (stem, _) in HOSTS {
        let g = host(stem);
        let all = detect_all(&g);
        for m in &all {
            assert!(m.is_injective(), "{stem}: {}", m.label());
        }
        let mut keys: Vec<String> = all.iter().map(|m| m.to_json_value().to_string()).collect();
        let n = keys.len();
        keys.sort();
        keys.dedup();
        assert_eq!(keys.len(), n, "{stem}");
    }
}

#[test]
fn surgery_shrinks_and_keeps_the_graph_connected() {
    for (stem, kind) in HOSTS {
        let g = host(stem);
        for m in detect(&g, kind) {
            let s = apply_surgery(&g, &m).unwrap();
            let v = validate_surgery(&g, &s, TriangularReading::default());
            assert!(v.result_smaller, "{stem}");
            assert!(v.result_connected, "{stem}");
            assert!(!v.creates_forbidden_cycle, "{stem}: {:?}", v.created_cycles);
            assert_eq!(s.vertex_map.len(), g.vertex_count());
        }
    }
}

#[test]
fn quick_hosts_certify() {
    for stem in ["min_degree", "separating_cycle", "cut_vertex", "light_cluster", "two_incident_light_face"] {
        let g = host(stem);
        let (_, kind) = HOSTS.iter().find(|(s, _)| *s == stem).unwrap();
        for m in detect(&g, *kind) {
            let r = verify_reducibility(&g, &m).unwrap();
            assert!(r.certified(), "{stem}: {:?}", r.sample_failures);
            assert!(r.colorings_checked > 0, "{stem}");
        }
    }
}

#[test]
fn branch_tables_name_known_guards() {
    let all: Vec<&str> = ConfigurationKind::ALL.iter().flat_map(|&k| recipe_branches(k).iter().copied()).collect();
    for g in UNREACHABLE_GUARDS {
        assert!(all.contains(&g), "{g}");
    }
}

#[test]
fn names_roundtrip() {
    for k in ConfigurationKind::ALL {
        assert_eq!(ConfigurationKind::from_name(k.name()), Some(k));
    }
    assert_eq!(ConfigurationKind::from_name("Claw"), None);
}
