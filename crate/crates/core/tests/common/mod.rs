#![allow(dead_code)]

use hipermotif::generate::{assign_attributes, random_pattern, seeded_rng, AttributeSchema, AttributeSpec, Family, GeneratorSpec, GraphRng};
use hipermotif::{generate::generate, AttributeSet, PreparedPattern, PropertyGraph, Semantics};
use rand::Rng;

pub struct Instance {
    pub pattern: PropertyGraph,
    pub target: PropertyGraph,
    pub semantics: Semantics,
    pub seed: u64,
}

fn alphabet(key: &str, size: usize) -> AttributeSpec {
    AttributeSpec {
        key: key.to_string(),
        values: (0..size).map(|i| ((b'A' + i as u8) as char).to_string()).collect(),
    }
}

/// Pattern attributes: each element keeps its drawn label with probability
/// 1/2 and is a wildcard otherwise.
fn thin_out(g: &PropertyGraph, rng: &mut GraphRng) -> PropertyGraph {
    let keep = |a: &AttributeSet, rng: &mut GraphRng| if rng.random_bool(0.5) { a.clone() } else { AttributeSet::new() };
    let va = (0..g.vertex_count() as u32).map(|v| keep(g.vertex_attrs(v), rng)).collect();
    let ea = (0..g.edge_count() as u32).map(|e| keep(g.edge_attrs(e), rng)).collect();
    PropertyGraph::build(g.vertex_count(), g.edges().collect(), va, ea).unwrap()
}

/// Small random instance: pattern of 2..=5 vertices, ER target of 3..=12
/// vertices, optional labels and optional target self-loops.
pub fn small_instance(seed: u64, with_self_loops: bool) -> Instance {
    let mut rng = seeded_rng(seed);
    let n1 = rng.random_range(2..=5usize);
    let n2 = rng.random_range(3..=12usize);
    let p = [0.1, 0.3, 0.6][rng.random_range(0..3)];
    let labels = rng.random_range(0..=3usize);
    let semantics = if rng.random_bool(0.5) { Semantics::Mono } else { Semantics::Iso };

    let mut target = generate(&GeneratorSpec::new(Family::ErdosRenyi { p }, n2, seed)).unwrap();
    if with_self_loops {
        let mut edges: Vec<(u32, u32)> = target.edges().collect();
        for v in 0..n2 as u32 {
            if rng.random_bool(0.15) {
                edges.push((v, v));
            }
        }
        target = PropertyGraph::build(n2, edges, vec![], vec![]).unwrap();
    }
    let max_edges = n1 * (n1 - 1);
    let m1 = rng.random_range(n1 - 1..=max_edges.min(n1 + 2));
    let mut pattern = random_pattern(n1, m1, &mut rng);
    if labels > 0 {
        let schema = AttributeSchema {
            vertex: vec![alphabet("c", labels)],
            edge: vec![alphabet("w", labels)],
        };
        target = assign_attributes(&target, &schema, seed).unwrap();
        pattern = thin_out(&assign_attributes(&pattern, &schema, seed ^ 0x5eed).unwrap(), &mut rng);
    }
    Instance { pattern, target, semantics, seed }
}

/// Like [`small_instance`], but skips seeds whose reordered pattern has no
/// seed edge, which the injecting engine refuses.
pub fn seedable_instance(seed: u64, with_self_loops: bool) -> Instance {
    let mut s = seed;
    loop {
        let inst = small_instance(s, with_self_loops);
        let prepared = PreparedPattern::new(&inst.pattern, true).unwrap();
        if prepared.check_seed_edge().is_ok() {
            return inst;
        }
        s = s.wrapping_add(1_000_003);
    }
}
