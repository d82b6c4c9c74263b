//! Edge-parallel matching with state injection.
//!
//! After reordering, the pattern's seed edge `(0, 1)` is matched against every
//! target edge. A target edge whose source passes the vertex filter and which
//! passes the edge validator yields a depth-2 state, and the tree search
//! takes over from there. Each target edge roots a disjoint part of the
//! result, since an embedding is fixed to exactly one `(f(0), f(1))`.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::MatchError;
use crate::graph::{check_edge_attrs, check_vertex_attrs, EdgeId, PropertyGraph, VertexId};
use crate::matches::{Embedding, MatchSet};
use crate::oracle;
use crate::reorder::structural_reorder;
use crate::search::{search, vf2ps, SearchOptions, SearchState, Semantics};
use crate::validators::{vertex_validator, SeedEdge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Engine {
    /// Seed-edge injection at depth 2, parallel over target edges.
    HiPerMotif,
    /// Tree search from the empty state.
    Vf2ps,
    /// Exhaustive enumeration; small targets only.
    Oracle,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::HiPerMotif => "hipermotif",
            Engine::Vf2ps => "vf2ps",
            Engine::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchConfig {
    pub semantics: Semantics,
    pub reorder: bool,
    pub workers: usize,
    pub match_limit: Option<usize>,
    /// Report embeddings over the caller's pattern ids instead of the
    /// reordered ids.
    pub report_original_ids: bool,
    pub lookahead: bool,
    /// Re-check every emitted embedding with [`verify_embedding`].
    pub paranoid: bool,
}

impl Default for MatchConfig {
    fn default() -> Self {
        Self {
            semantics: Semantics::Mono,
            reorder: true,
            workers: 1,
            match_limit: None,
            report_original_ids: true,
            lookahead: true,
            paranoid: false,
        }
    }
}

impl MatchConfig {
    fn validate(&self) -> Result<(), MatchError> {
        if self.workers == 0 {
            return Err(MatchError::InvalidWorkerCount);
        }
        if self.match_limit == Some(0) {
            return Err(MatchError::InvalidLimit);
        }
        Ok(())
    }

    fn search_options(&self) -> SearchOptions {
        SearchOptions {
            semantics: self.semantics,
            lookahead: self.lookahead,
            limit: self.match_limit,
        }
    }
}

/// A pattern ready for matching, plus the relabeling applied to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreparedPattern {
    pub graph: PropertyGraph,
    /// `permutation[old] == new`, when reordering was applied.
    pub permutation: Option<Vec<VertexId>>,
}

impl PreparedPattern {
    pub fn new(pattern: &PropertyGraph, reorder: bool) -> Result<Self, MatchError> {
        if pattern.vertex_count() == 0 {
            return Err(MatchError::EmptyPattern);
        }
        if let Some(v) = pattern.first_self_loop() {
            return Err(MatchError::PatternSelfLoop(v));
        }
        if reorder {
            let r = structural_reorder(pattern)?;
            Ok(Self {
                graph: r.reordered,
                permutation: Some(r.permutation),
            })
        } else {
            Ok(Self {
                graph: pattern.clone(),
                permutation: None,
            })
        }
    }

    /// Converts a result over the prepared ids into the requested view.
    pub fn report(&self, matches: MatchSet, original_ids: bool) -> MatchSet {
        match (&self.permutation, original_ids) {
            (Some(p), true) => matches.to_original(p),
            _ => matches,
        }
    }

    /// Checks the seed-edge preconditions of [`Engine::HiPerMotif`].
    pub fn check_seed_edge(&self) -> Result<(), MatchError> {
        let g = &self.graph;
        if g.vertex_count() < 2 || g.edge_count() == 0 {
            return Err(MatchError::PatternTooSmall {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
            });
        }
        if !g.has_edge(0, 1) {
            return Err(MatchError::MissingSeedEdge);
        }
        Ok(())
    }
}

/// Reorders (if configured), matches and reports in the configured id view.
pub fn hipermotif(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    config: &MatchConfig,
) -> Result<MatchSet, MatchError> {
    run(Engine::HiPerMotif, pattern, target, config)
}

/// Runs any engine end to end with the same preparation and reporting.
pub fn run(
    engine: Engine,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    config: &MatchConfig,
) -> Result<MatchSet, MatchError> {
    let prepared = PreparedPattern::new(pattern, config.reorder)?;
    let matches = run_prepared(engine, &prepared, target, config)?;
    Ok(prepared.report(matches, config.report_original_ids))
}

/// Matches an already prepared pattern; the result is over prepared ids.
pub fn run_prepared(
    engine: Engine,
    prepared: &PreparedPattern,
    target: &PropertyGraph,
    config: &MatchConfig,
) -> Result<MatchSet, MatchError> {
    config.validate()?;
    let pattern = &prepared.graph;
    if engine == Engine::HiPerMotif {
        prepared.check_seed_edge()?;
    }
    if target.vertex_count() == 0 {
        return Err(MatchError::EmptyTarget);
    }
    let matches = match engine {
        Engine::HiPerMotif => inject_and_search(pattern, target, config)?,
        Engine::Vf2ps => {
            let root = SearchState::new(target.vertex_count(), pattern.vertex_count())
                .expect("sizes checked above");
            vf2ps(&root, pattern, target, &config.search_options())
        }
        Engine::Oracle => {
            let mut all = oracle::brute_force(pattern, target, config.semantics)?;
            if let Some(k) = config.match_limit {
                all.truncate(k);
            }
            all
        }
    };
    if config.paranoid {
        if let Some(bad) = matches
            .iter()
            .find(|f| !verify_embedding(pattern, target, f, config.semantics))
        {
            return Err(MatchError::UnsoundEmbedding(bad.to_vec()));
        }
    }
    Ok(matches)
}

fn inject_and_search(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    config: &MatchConfig,
) -> Result<MatchSet, MatchError> {
    if pattern.vertex_count() > target.vertex_count() {
        return Ok(MatchSet::new());
    }
    let flags = vertex_validator(pattern, target);
    let limit = config.match_limit.unwrap_or(usize::MAX);
    let found = AtomicUsize::new(0);

    let seed = SeedEdge::new(pattern, config.semantics).expect("seed edge checked by caller");
    let expand = |acc: &mut Vec<Embedding>, e: EdgeId| {
        let (u, v) = target.endpoints(e);
        if !flags[u] || found.load(Ordering::Relaxed) >= limit || !seed.admits(pattern, target, e) {
            return;
        }
        let mut state = SearchState::new(target.vertex_count(), pattern.vertex_count())
            .expect("non-empty graphs");
        seed.fill(&mut state, target, u, v);
        search(
            state,
            pattern,
            target,
            config.semantics,
            config.lookahead,
            &|| found.load(Ordering::Relaxed) >= limit,
            &mut |f| {
                acc.push(f);
                found.fetch_add(1, Ordering::Relaxed) + 1 < limit
            },
        );
    };

    let edges = 0..target.edge_count() as EdgeId;
    let collected = if config.workers == 1 {
        let mut acc = Vec::new();
        for e in edges {
            expand(&mut acc, e);
        }
        acc
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| MatchError::ThreadPool(e.to_string()))?;
        pool.install(|| {
            edges
                .into_par_iter()
                .fold(Vec::new, |mut acc, e| {
                    expand(&mut acc, e);
                    acc
                })
                .reduce(Vec::new, |mut a, mut b| {
                    a.append(&mut b);
                    a
                })
        })
    };

    let mut matches = MatchSet::from_unsorted(collected);
    matches.truncate(limit);
    Ok(matches)
}

/// Re-validates `f` directly against both graphs: totality, injectivity,
/// vertex attributes, and every ordered vertex pair of the pattern under the
/// given edge semantics.
pub fn verify_embedding(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    f: &[VertexId],
    semantics: Semantics,
) -> bool {
    let n = pattern.vertex_count();
    if f.len() != n || f.iter().any(|&t| t as usize >= target.vertex_count()) {
        return false;
    }
    let mut images = f.to_vec();
    images.sort_unstable();
    if images.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    for p in 0..n as VertexId {
        if !check_vertex_attrs(pattern, p, target, f[p as usize]) {
            return false;
        }
    }
    for a in 0..n as VertexId {
        for b in 0..n as VertexId {
            let (fa, fb) = (f[a as usize], f[b as usize]);
            match (pattern.edge_id(a, b), target.edge_id(fa, fb)) {
                (Some(pe), Some(te)) => {
                    if !check_edge_attrs(pattern, pe, target, te) {
                        return false;
                    }
                }
                (Some(_), None) => return false,
                (None, Some(_)) if semantics == Semantics::Iso => return false,
                _ => {}
            }
        }
    }
    true
}
