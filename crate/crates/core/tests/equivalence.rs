//! Randomized cross-checks between the injecting engine, the plain tree
//! search and the exhaustive oracle.

mod common;

use common::{seedable_instance, small_instance};
use hipermotif::{
    brute_force, edge_validator, engine::run, hipermotif, verify_embedding, vertex_validator,
    vf2ps_with_stats, Engine, MatchConfig, PreparedPattern, SearchOptions, SearchState, Semantics,
};

fn config(semantics: Semantics) -> MatchConfig {
    MatchConfig {
        semantics,
        ..MatchConfig::default()
    }
}

#[test]
fn engines_agree_with_oracle() {
    for seed in 0..300 {
        let inst = seedable_instance(seed, seed % 3 == 0);
        let cfg = config(inst.semantics);
        let oracle = brute_force(&inst.pattern, &inst.target, inst.semantics).unwrap();
        let hm = hipermotif(&inst.pattern, &inst.target, &cfg).unwrap();
        let tree = run(Engine::Vf2ps, &inst.pattern, &inst.target, &cfg).unwrap();
        assert_eq!(hm, oracle, "hipermotif vs oracle, seed {seed}");
        assert_eq!(tree, oracle, "vf2ps vs oracle, seed {seed}");
        for f in &hm {
            assert!(verify_embedding(&inst.pattern, &inst.target, f, inst.semantics));
        }
    }
}

#[test]
fn tree_search_handles_patterns_without_seed_edge() {
    for seed in 0..200 {
        let inst = small_instance(seed, true);
        for semantics in [Semantics::Mono, Semantics::Iso] {
            let oracle = brute_force(&inst.pattern, &inst.target, semantics).unwrap();
            for reorder in [true, false] {
                let cfg = MatchConfig {
                    reorder,
                    ..config(semantics)
                };
                assert_eq!(run(Engine::Vf2ps, &inst.pattern, &inst.target, &cfg).unwrap(), oracle, "seed {seed}");
            }
        }
    }
}

#[test]
fn iso_results_are_subset_of_mono() {
    for seed in 0..150 {
        let inst = small_instance(seed, true);
        let iso = brute_force(&inst.pattern, &inst.target, Semantics::Iso).unwrap();
        let mono = brute_force(&inst.pattern, &inst.target, Semantics::Mono).unwrap();
        assert!(iso.is_subset_of(&mono), "seed {seed}");
    }
}

#[test]
fn validators_never_reject_a_real_embedding() {
    for seed in 0..300 {
        let inst = seedable_instance(seed, seed % 2 == 0);
        let prepared = PreparedPattern::new(&inst.pattern, true).unwrap();
        let p = &prepared.graph;
        let flags = vertex_validator(p, &inst.target);
        for f in &brute_force(p, &inst.target, inst.semantics).unwrap() {
            assert!(flags[f[0]], "seed {seed}: f(0)={} unflagged", f[0]);
            let mut s = SearchState::new(inst.target.vertex_count(), p.vertex_count()).unwrap();
            assert!(
                edge_validator(f[0], f[1], &mut s, p, &inst.target, inst.semantics),
                "seed {seed}: ({}, {}) rejected",
                f[0],
                f[1]
            );
        }
    }
}

#[test]
fn injected_state_equals_two_extensions() {
    let mut accepted = 0;
    for seed in 0..200 {
        let inst = seedable_instance(seed, true);
        let prepared = PreparedPattern::new(&inst.pattern, true).unwrap();
        let (p, t) = (&prepared.graph, &inst.target);
        let empty = SearchState::new(t.vertex_count(), p.vertex_count()).unwrap();
        for (u, v) in t.edges() {
            let mut injected = empty.clone();
            if !edge_validator(u, v, &mut injected, p, t, inst.semantics) {
                assert_eq!(injected, empty);
                continue;
            }
            accepted += 1;
            let stepped = empty.extend(p, t, 0, u).unwrap().extend(p, t, 1, v).unwrap();
            assert_eq!(injected, stepped, "seed {seed}, edge ({u}, {v})");
        }
    }
    assert!(accepted > 100);
}

#[test]
fn lookahead_only_prunes() {
    let mut pruned_somewhere = false;
    for seed in 0..200 {
        let inst = small_instance(seed, false);
        let root = SearchState::new(inst.target.vertex_count(), inst.pattern.vertex_count()).unwrap();
        let on = SearchOptions {
            semantics: inst.semantics,
            lookahead: true,
            limit: None,
        };
        let off = SearchOptions { lookahead: false, ..on };
        let (with, with_stats) = vf2ps_with_stats(&root, &inst.pattern, &inst.target, &on);
        let (without, without_stats) = vf2ps_with_stats(&root, &inst.pattern, &inst.target, &off);
        assert_eq!(with, without, "seed {seed}");
        assert!(with_stats.states <= without_stats.states);
        pruned_somewhere |= with_stats.states < without_stats.states;
    }
    assert!(pruned_somewhere);
}

#[test]
fn worker_count_and_reorder_invariance() {
    for seed in 0..100 {
        let inst = seedable_instance(seed, false);
        let base = hipermotif(&inst.pattern, &inst.target, &config(inst.semantics)).unwrap();
        for workers in [2, 8] {
            let cfg = MatchConfig {
                workers,
                ..config(inst.semantics)
            };
            assert_eq!(hipermotif(&inst.pattern, &inst.target, &cfg).unwrap(), base, "seed {seed}");
        }
        // random patterns always contain (0, 1), so the unreordered pattern is seedable too
        let cfg = MatchConfig {
            reorder: false,
            ..config(inst.semantics)
        };
        assert_eq!(hipermotif(&inst.pattern, &inst.target, &cfg).unwrap(), base, "seed {seed}");
    }
}

#[test]
fn limits_return_verified_subsets() {
    for seed in 0..100 {
        let inst = seedable_instance(seed, false);
        let full = brute_force(&inst.pattern, &inst.target, inst.semantics).unwrap();
        for k in [1, 2, 5] {
            for workers in [1, 4] {
                let cfg = MatchConfig {
                    match_limit: Some(k),
                    workers,
                    ..config(inst.semantics)
                };
                let got = hipermotif(&inst.pattern, &inst.target, &cfg).unwrap();
                assert_eq!(got.len(), k.min(full.len()), "seed {seed}");
                assert!(got.is_subset_of(&full));
                for f in &got {
                    assert!(verify_embedding(&inst.pattern, &inst.target, f, inst.semantics));
                }
            }
        }
    }
}

#[test]
fn tree_search_limit_is_canonical_prefix() {
    for seed in 0..100 {
        let inst = small_instance(seed, false);
        let root = SearchState::new(inst.target.vertex_count(), inst.pattern.vertex_count()).unwrap();
        let full = hipermotif::vf2ps(&root, &inst.pattern, &inst.target, &SearchOptions::with_semantics(inst.semantics));
        let k = 3;
        let opts = SearchOptions {
            limit: Some(k),
            ..SearchOptions::with_semantics(inst.semantics)
        };
        let part = hipermotif::vf2ps(&root, &inst.pattern, &inst.target, &opts);
        assert_eq!(part.as_slice(), &full.as_slice()[..k.min(full.len())]);
    }
}
