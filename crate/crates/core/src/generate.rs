//! Seeded synthetic graph generators and attribute assignment.
//!
//! All randomness comes from ChaCha8 seeded with a `u64`; structure is drawn
//! from stream 0 and attributes from stream 1, so adding a schema never
//! changes the edges of a generated graph.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::GenerateError;
use crate::graph::{AttributeSet, PropertyGraph, VertexId};

pub type GraphRng = ChaCha8Rng;

const STRUCTURE_STREAM: u64 = 0;
const ATTRIBUTE_STREAM: u64 = 1;

pub fn seeded_rng(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn stream_rng(seed: u64, stream: u64) -> GraphRng {
    let mut rng = seeded_rng(seed);
    rng.set_stream(stream);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Directed G(n, p) over ordered pairs, no self-loops.
    ErdosRenyi { p: f64 },
    /// Ring lattice of degree `k` with rewiring probability `p`; every
    /// undirected edge is emitted in both directions.
    WattsStrogatz { k: usize, p: f64 },
    /// Directed preferential attachment with in/out bias terms.
    ScaleFree {
        alpha: f64,
        beta: f64,
        gamma: f64,
        delta_in: f64,
        delta_out: f64,
    },
}

impl Family {
    pub fn scale_free_default() -> Self {
        Family::ScaleFree {
            alpha: 0.41,
            beta: 0.54,
            gamma: 0.05,
            delta_in: 0.2,
            delta_out: 0.2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::ErdosRenyi { .. } => "er",
            Family::WattsStrogatz { .. } => "ws",
            Family::ScaleFree { .. } => "sf",
        }
    }
}

/// One attribute key and the alphabet its values are drawn from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttributeSpec {
    pub key: String,
    pub values: Vec<String>,
}

impl FromStr for AttributeSpec {
    type Err = GenerateError;

    /// Parses `key:v1,v2,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (key, values) = s
            .split_once(':')
            .ok_or_else(|| GenerateError::invalid("attribute", format!("expected key:v1,v2 in {s:?}")))?;
        let values: Vec<String> = values
            .split(',')
            .map(str::trim)
            .filter(|v| !v.is_empty())
            .map(String::from)
            .collect();
        let key = key.trim();
        if key.is_empty() || values.is_empty() {
            return Err(GenerateError::invalid(
                "attribute",
                format!("empty key or alphabet in {s:?}"),
            ));
        }
        Ok(Self {
            key: key.to_string(),
            values,
        })
    }
}

impl fmt::Display for AttributeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.key, self.values.join(","))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AttributeSchema {
    pub vertex: Vec<AttributeSpec>,
    pub edge: Vec<AttributeSpec>,
}

impl AttributeSchema {
    pub fn is_empty(&self) -> bool {
        self.vertex.is_empty() && self.edge.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub vertex_count: usize,
    pub seed: u64,
    pub schema: AttributeSchema,
}

impl GeneratorSpec {
    pub fn new(family: Family, vertex_count: usize, seed: u64) -> Self {
        Self {
            family,
            vertex_count,
            seed,
            schema: AttributeSchema::default(),
        }
    }

    /// Parses `key=value` lines: `family` (er|ws|sf), `n`, `seed`, `p`, `k`,
    /// `alpha`, `beta`, `gamma`, `delta_in`, `delta_out`, and repeatable
    /// `vertex_attr` / `edge_attr` entries of the form `key:v1,v2`.
    pub fn from_config(text: &str) -> Result<Self, GenerateError> {
        let mut family = None;
        let mut n = None;
        let mut seed = 0u64;
        let mut p = None;
        let mut k = None;
        let mut sf = [None; 5];
        let mut schema = AttributeSchema::default();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| GenerateError::invalid("config", format!("expected key=value, got {line:?}")))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "family" => family = Some(value.to_string()),
                "n" => n = Some(parse_num::<usize>("n", value)?),
                "seed" => seed = parse_num("seed", value)?,
                "p" => p = Some(parse_num::<f64>("p", value)?),
                "k" => k = Some(parse_num::<usize>("k", value)?),
                "alpha" => sf[0] = Some(parse_num::<f64>("alpha", value)?),
                "beta" => sf[1] = Some(parse_num::<f64>("beta", value)?),
                "gamma" => sf[2] = Some(parse_num::<f64>("gamma", value)?),
                "delta_in" => sf[3] = Some(parse_num::<f64>("delta_in", value)?),
                "delta_out" => sf[4] = Some(parse_num::<f64>("delta_out", value)?),
                "vertex_attr" => schema.vertex.push(value.parse()?),
                "edge_attr" => schema.edge.push(value.parse()?),
                other => {
                    return Err(GenerateError::invalid("config", format!("unknown key {other:?}")))
                }
            }
        }
        let vertex_count = n.ok_or_else(|| GenerateError::invalid("n", "missing"))?;
        let need_p = || p.ok_or_else(|| GenerateError::invalid("p", "missing"));
        let family = match family.as_deref() {
            Some("er") => Family::ErdosRenyi { p: need_p()? },
            Some("ws") => Family::WattsStrogatz {
                k: k.ok_or_else(|| GenerateError::invalid("k", "missing"))?,
                p: need_p()?,
            },
            Some("sf") => {
                let Family::ScaleFree {
                    alpha,
                    beta,
                    gamma,
                    delta_in,
                    delta_out,
                } = Family::scale_free_default()
                else {
                    unreachable!()
                };
                Family::ScaleFree {
                    alpha: sf[0].unwrap_or(alpha),
                    beta: sf[1].unwrap_or(beta),
                    gamma: sf[2].unwrap_or(gamma),
                    delta_in: sf[3].unwrap_or(delta_in),
                    delta_out: sf[4].unwrap_or(delta_out),
                }
            }
            Some(other) => {
                return Err(GenerateError::invalid("family", format!("unknown family {other:?}")))
            }
            None => return Err(GenerateError::invalid("family", "missing")),
        };
        Ok(Self {
            family,
            vertex_count,
            seed,
            schema,
        })
    }
}

fn parse_num<T: FromStr>(name: &'static str, value: &str) -> Result<T, GenerateError> {
    value
        .parse()
        .map_err(|_| GenerateError::invalid(name, format!("cannot parse {value:?}")))
}

fn check_probability(name: &'static str, p: f64) -> Result<(), GenerateError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenerateError::invalid(name, format!("{p} is not in [0, 1]")))
    }
}

pub fn generate(spec: &GeneratorSpec) -> Result<PropertyGraph, GenerateError> {
    let n = spec.vertex_count;
    if n > VertexId::MAX as usize {
        return Err(GenerateError::invalid("n", "too many vertices"));
    }
    let mut rng = stream_rng(spec.seed, STRUCTURE_STREAM);
    let edges = match spec.family {
        Family::ErdosRenyi { p } => erdos_renyi_edges(n, p, &mut rng)?,
        Family::WattsStrogatz { k, p } => watts_strogatz_edges(n, k, p, &mut rng)?,
        Family::ScaleFree {
            alpha,
            beta,
            gamma,
            delta_in,
            delta_out,
        } => scale_free_edges(n, [alpha, beta, gamma], delta_in, delta_out, &mut rng)?,
    };
    let g = PropertyGraph::build(n, edges, Vec::new(), Vec::new())
        .expect("generators emit valid, duplicate-free edges");
    if spec.schema.is_empty() {
        Ok(g)
    } else {
        assign_attributes(&g, &spec.schema, spec.seed)
    }
}

/// Geometric skipping over the `n (n - 1)` ordered pairs; edges come out in
/// `(src, dst)` order.
fn erdos_renyi_edges(
    n: usize,
    p: f64,
    rng: &mut GraphRng,
) -> Result<Vec<(VertexId, VertexId)>, GenerateError> {
    check_probability("p", p)?;
    let span = n.saturating_sub(1) as u64;
    let total = n as u64 * span;
    let pair = |idx: u64| {
        let u = idx / span;
        let w = idx % span;
        let v = if w >= u { w + 1 } else { w };
        (u as VertexId, v as VertexId)
    };
    if p == 0.0 || total == 0 {
        return Ok(Vec::new());
    }
    if p == 1.0 {
        return Ok((0..total).map(pair).collect());
    }
    let log_q = (1.0 - p).ln();
    let mut edges = Vec::with_capacity((total as f64 * p * 1.1) as usize + 16);
    let mut idx: i128 = -1;
    loop {
        let r: f64 = rng.random();
        let skip = ((1.0 - r).ln() / log_q).floor();
        idx += skip as i128 + 1;
        if idx >= total as i128 || !skip.is_finite() {
            break;
        }
        edges.push(pair(idx as u64));
    }
    Ok(edges)
}

fn watts_strogatz_edges(
    n: usize,
    k: usize,
    p: f64,
    rng: &mut GraphRng,
) -> Result<Vec<(VertexId, VertexId)>, GenerateError> {
    check_probability("p", p)?;
    if k == 0 || k % 2 != 0 || k >= n {
        return Err(GenerateError::invalid("k", format!("must be even, positive and below n={n}, got {k}")));
    }
    let mut adj: Vec<BTreeSet<VertexId>> = vec![BTreeSet::new(); n];
    for u in 0..n {
        for j in 1..=k / 2 {
            let v = (u + j) % n;
            adj[u].insert(v as VertexId);
            adj[v].insert(u as VertexId);
        }
    }
    for j in 1..=k / 2 {
        for u in 0..n {
            let v = ((u + j) % n) as VertexId;
            if !rng.random_bool(p) || !adj[u].contains(&v) {
                continue;
            }
            if adj[u].len() >= n - 1 {
                continue;
            }
            let w = loop {
                let w = rng.random_range(0..n as VertexId);
                if w as usize != u && !adj[u].contains(&w) {
                    break w;
                }
            };
            adj[u].remove(&v);
            adj[v as usize].remove(&(u as VertexId));
            adj[u].insert(w);
            adj[w as usize].insert(u as VertexId);
        }
    }
    Ok(adj
        .iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.iter().map(move |&v| (u as VertexId, v)))
        .collect())
}

fn scale_free_edges(
    n: usize,
    [alpha, beta, gamma]: [f64; 3],
    delta_in: f64,
    delta_out: f64,
    rng: &mut GraphRng,
) -> Result<Vec<(VertexId, VertexId)>, GenerateError> {
    for (name, x) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        check_probability(name, x)?;
    }
    if ((alpha + beta + gamma) - 1.0).abs() > 1e-9 {
        return Err(GenerateError::invalid("alpha", "alpha + beta + gamma must equal 1"));
    }
    if alpha + gamma <= 0.0 {
        return Err(GenerateError::invalid("alpha", "alpha + gamma must be positive to add vertices"));
    }
    for (name, d) in [("delta_in", delta_in), ("delta_out", delta_out)] {
        if !(d >= 0.0 && d.is_finite()) {
            return Err(GenerateError::invalid(name, format!("{d} must be non-negative")));
        }
    }
    if n < 3 {
        return Err(GenerateError::invalid("n", "scale-free growth starts from a 3-cycle, need n >= 3"));
    }

    // Edge endpoints with multiplicity: sampling uniformly from `sources`
    // picks a vertex proportionally to its out-degree, likewise for in.
    let mut sources: Vec<VertexId> = vec![0, 1, 2];
    let mut sinks: Vec<VertexId> = vec![1, 2, 0];
    let mut vertices: VertexId = 3;

    fn choose(rng: &mut GraphRng, weighted: &[VertexId], vertices: VertexId, delta: f64) -> VertexId {
        if delta > 0.0 {
            let bias = vertices as f64 * delta;
            if rng.random::<f64>() < bias / (bias + weighted.len() as f64) {
                return rng.random_range(0..vertices);
            }
        }
        *weighted.choose(rng).expect("never empty")
    }

    while (vertices as usize) < n {
        let r: f64 = rng.random();
        let (v, w) = if r < alpha {
            let v = vertices;
            vertices += 1;
            (v, choose(rng, &sinks, vertices, delta_in))
        } else if r < alpha + beta {
            let v = choose(rng, &sources, vertices, delta_out);
            (v, choose(rng, &sinks, vertices, delta_in))
        } else {
            let v = choose(rng, &sources, vertices, delta_out);
            let w = vertices;
            vertices += 1;
            (v, w)
        };
        sources.push(v);
        sinks.push(w);
    }
    let mut edges: Vec<(VertexId, VertexId)> = sources.into_iter().zip(sinks).collect();
    edges.sort_unstable();
    edges.dedup();
    Ok(edges)
}

/// Returns a copy of `g` where every vertex and edge carries one value per
/// schema key, drawn uniformly from that key's alphabet.
pub fn assign_attributes(
    g: &PropertyGraph,
    schema: &AttributeSchema,
    seed: u64,
) -> Result<PropertyGraph, GenerateError> {
    for spec in schema.vertex.iter().chain(&schema.edge) {
        if spec.values.is_empty() {
            return Err(GenerateError::invalid("attribute", format!("empty alphabet for {:?}", spec.key)));
        }
    }
    let mut rng = stream_rng(seed, ATTRIBUTE_STREAM);
    let mut draw = |specs: &[AttributeSpec]| -> AttributeSet {
        specs
            .iter()
            .map(|s| (s.key.clone(), s.values.choose(&mut rng).expect("non-empty").clone()))
            .collect()
    };
    let vertex_attrs: Vec<AttributeSet> = (0..g.vertex_count()).map(|_| draw(&schema.vertex)).collect();
    let edge_attrs: Vec<AttributeSet> = (0..g.edge_count()).map(|_| draw(&schema.edge)).collect();
    Ok(PropertyGraph::build(g.vertex_count(), g.edges().collect(), vertex_attrs, edge_attrs)
        .expect("same structure as a valid graph"))
}

/// A random weakly connected pattern with `vertices` vertices and
/// `edges` edges (clamped to what fits), containing the edge `(0, 1)` and no
/// self-loops.
pub fn random_pattern(vertices: usize, edges: usize, rng: &mut GraphRng) -> PropertyGraph {
    assert!(vertices >= 2, "a pattern needs at least two vertices");
    let mut set = BTreeSet::new();
    set.insert((0, 1));
    for v in 2..vertices as VertexId {
        let u = rng.random_range(0..v);
        set.insert(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
    }
    let target = edges.clamp(vertices - 1, vertices * (vertices - 1));
    while set.len() < target {
        let u = rng.random_range(0..vertices as VertexId);
        let v = rng.random_range(0..vertices as VertexId);
        if u != v {
            set.insert((u, v));
        }
    }
    PropertyGraph::build(vertices, set.into_iter().collect(), Vec::new(), Vec::new())
        .expect("valid by construction")
}

/// Grows a random connected vertex set of size `vertices` inside `target`
/// and returns its induced subgraph (attributes included, self-loops
/// dropped). Vertex 0 is the start, vertex 1 one of its out-neighbors.
/// Returns `None` when no such set is found after a few restarts.
pub fn sample_pattern(target: &PropertyGraph, vertices: usize, rng: &mut GraphRng) -> Option<PropertyGraph> {
    if vertices < 2 || target.vertex_count() < vertices || target.edge_count() == 0 {
        return None;
    }
    'attempt: for _ in 0..64 {
        let (start, first) = target.endpoints(rng.random_range(0..target.edge_count() as u32));
        if start == first {
            continue;
        }
        let mut chosen = vec![start, first];
        while chosen.len() < vertices {
            let frontier: BTreeSet<VertexId> = chosen
                .iter()
                .flat_map(|&v| target.out_neighbors(v).iter().chain(target.in_neighbors(v)))
                .copied()
                .filter(|w| !chosen.contains(w))
                .collect();
            let frontier: Vec<VertexId> = frontier.into_iter().collect();
            match frontier.choose(rng) {
                Some(&w) => chosen.push(w),
                None => continue 'attempt,
            }
        }
        return Some(induced(target, &chosen));
    }
    None
}

fn induced(target: &PropertyGraph, chosen: &[VertexId]) -> PropertyGraph {
    let mut edges = Vec::new();
    let mut edge_attrs = Vec::new();
    for (a, &u) in chosen.iter().enumerate() {
        for (b, &v) in chosen.iter().enumerate() {
            if a == b {
                continue;
            }
            if let Some(e) = target.edge_id(u, v) {
                edges.push((a as VertexId, b as VertexId));
                edge_attrs.push(target.edge_attrs(e).clone());
            }
        }
    }
    let vertex_attrs = chosen.iter().map(|&v| target.vertex_attrs(v).clone()).collect();
    PropertyGraph::build(chosen.len(), edges, vertex_attrs, edge_attrs).expect("induced subgraph is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn er(n: usize, p: f64, seed: u64) -> PropertyGraph {
        generate(&GeneratorSpec::new(Family::ErdosRenyi { p }, n, seed)).unwrap()
    }

    #[test]
    fn er_extremes() {
        assert_eq!(er(5, 0.0, 1).edge_count(), 0);
        let full = er(5, 1.0, 1);
        assert_eq!(full.edge_count(), 20);
        assert!(full.first_self_loop().is_none());
    }

    #[test]
    fn er_edge_count_within_three_sigma() {
        let (n, p) = (10_000usize, 0.005);
        let pairs = (n * (n - 1)) as f64;
        let mean = pairs * p;
        let sd = (pairs * p * (1.0 - p)).sqrt();
        let m = er(n, p, 42).edge_count() as f64;
        assert!((m - mean).abs() <= 3.0 * sd, "m={m} mean={mean} sd={sd}");
    }

    #[test]
    fn er_rejects_bad_probability() {
        let spec = GeneratorSpec::new(Family::ErdosRenyi { p: 1.5 }, 10, 0);
        assert!(matches!(generate(&spec), Err(GenerateError::InvalidParameter { name: "p", .. })));
    }

    #[test]
    fn er_is_seed_deterministic() {
        assert_eq!(er(300, 0.02, 7), er(300, 0.02, 7));
        assert_ne!(er(300, 0.02, 7), er(300, 0.02, 8));
    }

    #[test]
    fn ws_without_rewiring_is_a_bidirected_ring() {
        let g = generate(&GeneratorSpec::new(Family::WattsStrogatz { k: 4, p: 0.0 }, 10, 3)).unwrap();
        assert_eq!(g.edge_count(), 10 * 4);
        for v in 0..10 {
            assert_eq!(g.degrees(v).totaldeg, 8);
        }
        assert!(g.has_edge(0, 9) && g.has_edge(9, 0) && g.has_edge(0, 2));
    }

    #[test]
    fn ws_rewiring_keeps_edge_count() {
        let g = generate(&GeneratorSpec::new(Family::WattsStrogatz { k: 10, p: 0.3 }, 500, 3)).unwrap();
        assert_eq!(g.edge_count(), 500 * 10);
        assert!(g.first_self_loop().is_none());
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
    }

    #[test]
    fn ws_parameter_checks() {
        for k in [0, 3, 10] {
            let spec = GeneratorSpec::new(Family::WattsStrogatz { k, p: 0.1 }, 10, 0);
            assert!(generate(&spec).is_err(), "k={k}");
        }
    }

    #[test]
    fn scale_free_shape() {
        let g = generate(&GeneratorSpec::new(Family::scale_free_default(), 2000, 5)).unwrap();
        assert_eq!(g.vertex_count(), 2000);
        assert!(g.edge_count() >= 1999);
        let bad = Family::ScaleFree {
            alpha: 0.5,
            beta: 0.5,
            gamma: 0.5,
            delta_in: 0.2,
            delta_out: 0.2,
        };
        assert!(generate(&GeneratorSpec::new(bad, 100, 0)).is_err());
    }

    #[test]
    fn attributes_single_letter_alphabet() {
        let g = er(50, 0.1, 1);
        let schema = AttributeSchema {
            vertex: vec!["type:A".parse().unwrap()],
            edge: vec!["w:x".parse().unwrap()],
        };
        let a = assign_attributes(&g, &schema, 9).unwrap();
        assert!((0..50).all(|v| a.vertex_attrs(v).get("type") == Some("A")));
        assert!((0..a.edge_count() as u32).all(|e| a.edge_attrs(e).get("w") == Some("x")));
        assert_eq!(a, assign_attributes(&g, &schema, 9).unwrap());
        assert_eq!(a.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn attribute_frequencies_within_three_sigma() {
        let g = PropertyGraph::from_edges(10_000, &[]).unwrap();
        let schema = AttributeSchema {
            vertex: vec!["c:A,B".parse().unwrap()],
            edge: vec![],
        };
        let a = assign_attributes(&g, &schema, 11).unwrap();
        let count_a = (0..10_000).filter(|&v| a.vertex_attrs(v).get("c") == Some("A")).count() as f64;
        let sd = (10_000f64 * 0.25).sqrt();
        assert!((count_a - 5000.0).abs() <= 3.0 * sd, "count={count_a}");
    }

    #[test]
    fn config_round_trip() {
        let spec = GeneratorSpec::from_config(
            "# a comment\nfamily = ws\nn=100\nk=10\np=0.01\nseed=42\nvertex_attr=label:A,B\n",
        )
        .unwrap();
        assert_eq!(spec.family, Family::WattsStrogatz { k: 10, p: 0.01 });
        assert_eq!(spec.vertex_count, 100);
        assert_eq!(spec.seed, 42);
        assert_eq!(spec.schema.vertex[0].values, vec!["A", "B"]);
        let sf = GeneratorSpec::from_config("family=sf\nn=10").unwrap();
        assert_eq!(sf.family, Family::scale_free_default());
        assert!(GeneratorSpec::from_config("family=er\nn=10").is_err());
        assert!(GeneratorSpec::from_config("family=er\nn=10\nq=1").is_err());
    }

    #[test]
    fn random_patterns_are_connected_with_seed_edge() {
        let mut rng = seeded_rng(3);
        for n in 2..10 {
            let p = random_pattern(n, n + 2, &mut rng);
            assert!(p.has_edge(0, 1));
            assert!(p.first_self_loop().is_none());
            assert_eq!(p.edge_count(), (n + 2).min(n * (n - 1)));
        }
    }

    #[test]
    fn sampled_patterns_embed_in_their_source() {
        let t = er(200, 0.03, 4);
        let mut rng = seeded_rng(5);
        let p = sample_pattern(&t, 6, &mut rng).unwrap();
        assert_eq!(p.vertex_count(), 6);
        assert!(p.has_edge(0, 1));
    }
}
