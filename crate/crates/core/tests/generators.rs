use hipermotif::generate::{generate, Family, GeneratorSpec};
use hipermotif::io::{format_edge_list, parse_edge_list, LoadOptions};

#[test]
fn scale_free_in_degree_is_heavy_tailed() {
    let g = generate(&GeneratorSpec::new(Family::scale_free_default(), 100_000, 17)).unwrap();
    let n = g.vertex_count();
    let max_in = (0..n as u32).map(|v| g.in_degree(v)).max().unwrap();
    let mean_in = g.edge_count() as f64 / n as f64;
    assert!(max_in as f64 > 10.0 * mean_in, "max {max_in}, mean {mean_in}");
}

#[test]
fn watts_strogatz_degrees_stay_near_2k() {
    let k = 10;
    let g = generate(&GeneratorSpec::new(Family::WattsStrogatz { k, p: 0.01 }, 1000, 42)).unwrap();
    let total: usize = (0..1000u32).map(|v| g.degrees(v).totaldeg).sum();
    assert_eq!(total, 1000 * 2 * k);
    // each vertex keeps at least the k/2 lattice edges it owns
    for v in 0..1000u32 {
        assert!(g.degrees(v).totaldeg >= k, "vertex {v}");
    }
}

#[test]
fn generated_graphs_round_trip_through_text() {
    for family in [Family::ErdosRenyi { p: 0.05 }, Family::WattsStrogatz { k: 4, p: 0.2 }, Family::scale_free_default()] {
        let mut spec = GeneratorSpec::new(family, 300, 9);
        spec.schema.vertex.push("t:A,B,C".parse().unwrap());
        spec.schema.edge.push("w:x,y".parse().unwrap());
        let g = generate(&spec).unwrap();
        let text = format_edge_list(&g).unwrap();
        assert_eq!(parse_edge_list(&text, LoadOptions::target()).unwrap(), g);
        assert_eq!(generate(&spec).unwrap(), g);
    }
}
