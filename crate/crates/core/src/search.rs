//! Frontier-set backtracking search over partial mappings.
//!
//! Pattern vertices are matched strictly in index order, so a state at depth
//! `d` maps exactly `0..d`. States are never mutated once built: extending a
//! state clones it, which lets a depth-2 state prepared elsewhere be handed
//! to [`vf2ps`] as the root of an independent subtree.

use std::cmp::Ordering;

use crate::error::SearchError;
use crate::graph::{check_edge_attrs, check_vertex_attrs, PropertyGraph, VertexId};
use crate::matches::{Embedding, MatchSet};

/// Edge semantics of a match.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Semantics {
    /// Pattern edges must map to target edges (non-induced).
    #[default]
    Mono,
    /// Additionally, non-edges must map to non-edges (induced).
    Iso,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchState {
    pub(crate) core: Vec<Option<VertexId>>,
    /// Target vertices in use, sorted.
    pub(crate) used: Vec<VertexId>,
    pub(crate) t1_in: Vec<VertexId>,
    pub(crate) t1_out: Vec<VertexId>,
    pub(crate) t2_in: Vec<VertexId>,
    pub(crate) t2_out: Vec<VertexId>,
    pub(crate) depth: usize,
    pub(crate) target_size: usize,
}

impl SearchState {
    pub fn new(target_size: usize, pattern_size: usize) -> Result<Self, SearchError> {
        if target_size == 0 || pattern_size == 0 {
            return Err(SearchError::InvalidSize {
                pattern: pattern_size,
                target: target_size,
            });
        }
        Ok(Self {
            core: vec![None; pattern_size],
            used: Vec::new(),
            t1_in: Vec::new(),
            t1_out: Vec::new(),
            t2_in: Vec::new(),
            t2_out: Vec::new(),
            depth: 0,
            target_size,
        })
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn pattern_size(&self) -> usize {
        self.core.len()
    }

    pub fn target_size(&self) -> usize {
        self.target_size
    }

    pub fn core(&self) -> &[Option<VertexId>] {
        &self.core
    }

    pub fn mapped(&self, pattern_v: VertexId) -> Option<VertexId> {
        self.core[pattern_v as usize]
    }

    pub fn is_used(&self, target_v: VertexId) -> bool {
        self.used.binary_search(&target_v).is_ok()
    }

    pub fn is_complete(&self) -> bool {
        self.depth == self.core.len()
    }

    pub fn t1_in(&self) -> &[VertexId] {
        &self.t1_in
    }

    pub fn t1_out(&self) -> &[VertexId] {
        &self.t1_out
    }

    pub fn t2_in(&self) -> &[VertexId] {
        &self.t2_in
    }

    pub fn t2_out(&self) -> &[VertexId] {
        &self.t2_out
    }

    /// Returns a new state with `pattern_v -> target_v` added. The caller's
    /// state is left untouched.
    pub fn extend(
        &self,
        pattern: &PropertyGraph,
        target: &PropertyGraph,
        pattern_v: VertexId,
        target_v: VertexId,
    ) -> Result<SearchState, SearchError> {
        if pattern_v as usize != self.depth || self.depth >= self.core.len() {
            return Err(SearchError::OutOfOrder {
                expected: self.depth,
                got: pattern_v,
            });
        }
        let slot = match self.used.binary_search(&target_v) {
            Ok(_) => return Err(SearchError::TargetAlreadyUsed(target_v)),
            Err(slot) => slot,
        };

        let mut next = self.clone();
        next.core[pattern_v as usize] = Some(target_v);
        next.used.insert(slot, target_v);
        next.depth += 1;

        let core = &next.core;
        let pattern_free = |p: &VertexId| core[*p as usize].is_none();
        next.t1_in = merge_filtered(&self.t1_in, pattern.in_neighbors(pattern_v), pattern_free);
        next.t1_out = merge_filtered(&self.t1_out, pattern.out_neighbors(pattern_v), pattern_free);

        let used = &next.used;
        let target_free = |t: &VertexId| used.binary_search(t).is_err();
        next.t2_in = merge_filtered(&self.t2_in, target.in_neighbors(target_v), target_free);
        next.t2_out = merge_filtered(&self.t2_out, target.out_neighbors(target_v), target_free);
        Ok(next)
    }
}

/// Sorted union of `a` and `b` restricted to elements passing `keep`.
fn merge_filtered(
    a: &[VertexId],
    b: &[VertexId],
    keep: impl Fn(&VertexId) -> bool,
) -> Vec<VertexId> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    loop {
        let x = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) => match x.cmp(&y) {
                Ordering::Less => {
                    i += 1;
                    x
                }
                Ordering::Greater => {
                    j += 1;
                    y
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                    x
                }
            },
            (Some(&x), None) => {
                i += 1;
                x
            }
            (None, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => break,
        };
        if keep(&x) {
            out.push(x);
        }
    }
    out
}

/// Number of elements of `set` that occur in `a` or `b` (all sorted).
fn count_in_union(set: &[VertexId], a: &[VertexId], b: &[VertexId]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    for &x in set {
        while i < a.len() && a[i] < x {
            i += 1;
        }
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if a.get(i) == Some(&x) || b.get(j) == Some(&x) {
            n += 1;
        }
    }
    n
}

/// Consistency of one ordered pair: the pattern edge `(pa, pb)` against the
/// target pair `(ta, tb)`.
#[inline]
fn pair_consistent(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    (pa, pb): (VertexId, VertexId),
    (ta, tb): (VertexId, VertexId),
    semantics: Semantics,
) -> bool {
    match pattern.edge_id(pa, pb) {
        Some(pe) => target
            .edge_id(ta, tb)
            .is_some_and(|te| check_edge_attrs(pattern, pe, target, te)),
        None => semantics == Semantics::Mono || !target.has_edge(ta, tb),
    }
}

/// Whether `pattern_v -> target_v` may extend `state`.
pub fn feasible(
    state: &SearchState,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    pattern_v: VertexId,
    target_v: VertexId,
    semantics: Semantics,
) -> bool {
    feasible_with(state, pattern, target, pattern_v, target_v, semantics, true)
}

pub(crate) fn feasible_with(
    state: &SearchState,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    pattern_v: VertexId,
    target_v: VertexId,
    semantics: Semantics,
    lookahead: bool,
) -> bool {
    if state.is_used(target_v) || !check_vertex_attrs(pattern, pattern_v, target, target_v) {
        return false;
    }
    if !pair_consistent(pattern, target, (pattern_v, pattern_v), (target_v, target_v), semantics) {
        return false;
    }
    for (q, image) in state.core.iter().enumerate() {
        let Some(image) = *image else { continue };
        let q = q as VertexId;
        if !pair_consistent(pattern, target, (q, pattern_v), (image, target_v), semantics)
            || !pair_consistent(pattern, target, (pattern_v, q), (target_v, image), semantics)
        {
            return false;
        }
    }
    if lookahead {
        let (p_out, p_in) = (pattern.out_neighbors(pattern_v), pattern.in_neighbors(pattern_v));
        let (t_out, t_in) = (target.out_neighbors(target_v), target.in_neighbors(target_v));
        if count_in_union(&state.t1_in, p_out, p_in) > count_in_union(&state.t2_in, t_out, t_in)
            || count_in_union(&state.t1_out, p_out, p_in)
                > count_in_union(&state.t2_out, t_out, t_in)
        {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub semantics: Semantics,
    /// Frontier-count lookahead; prune-only.
    pub lookahead: bool,
    pub limit: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            semantics: Semantics::Mono,
            lookahead: true,
            limit: None,
        }
    }
}

impl SearchOptions {
    pub fn with_semantics(semantics: Semantics) -> Self {
        Self {
            semantics,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// States created by successful extensions, the root excluded.
    pub states: u64,
}

/// Enumerates every embedding that extends `state`, in canonical order.
/// Stops after `limit` embeddings when one is set.
pub fn vf2ps(
    state: &SearchState,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    options: &SearchOptions,
) -> MatchSet {
    vf2ps_with_stats(state, pattern, target, options).0
}

pub fn vf2ps_with_stats(
    state: &SearchState,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    options: &SearchOptions,
) -> (MatchSet, SearchStats) {
    let mut found = Vec::new();
    let limit = options.limit.unwrap_or(usize::MAX);
    let stats = search(
        state.clone(),
        pattern,
        target,
        options.semantics,
        options.lookahead,
        &|| false,
        &mut |f| {
            found.push(f);
            found.len() < limit
        },
    );
    // DFS over ascending candidates already yields canonical order.
    debug_assert!(found.windows(2).all(|w| w[0] < w[1]));
    (MatchSet::from_unsorted(found), stats)
}

enum Candidates {
    Listed(Vec<VertexId>, usize),
    All(VertexId, VertexId),
}

impl Iterator for Candidates {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        match self {
            Candidates::Listed(list, i) => {
                let x = list.get(*i).copied();
                *i += 1;
                x
            }
            Candidates::All(next, end) => (*next < *end).then(|| {
                *next += 1;
                *next - 1
            }),
        }
    }
}

/// Candidates for the next pattern vertex. A frontier vertex can only map
/// next to a mapped neighbor's image, so the neighbor list of the mapped
/// neighbor with the smallest list stands in for the whole target frontier;
/// the two differ only in vertices `feasible` rejects.
fn candidates(state: &SearchState, pattern: &PropertyGraph, target: &PropertyGraph) -> Candidates {
    let pv = state.depth as VertexId;
    let pick = |mapped_neighbors: &[VertexId], image_list: fn(&PropertyGraph, VertexId) -> &[VertexId]| {
        mapped_neighbors
            .iter()
            .filter_map(|&q| state.core[q as usize])
            .map(|t| image_list(target, t))
            .min_by_key(|list| list.len())
            .map(|list| list.iter().copied().filter(|t| !state.is_used(*t)).collect())
    };
    let listed = if state.t1_out.binary_search(&pv).is_ok() {
        pick(pattern.in_neighbors(pv), PropertyGraph::out_neighbors)
    } else if state.t1_in.binary_search(&pv).is_ok() {
        pick(pattern.out_neighbors(pv), PropertyGraph::in_neighbors)
    } else {
        None
    };
    match listed {
        Some(list) => Candidates::Listed(list, 0),
        None => Candidates::All(0, state.target_size as VertexId),
    }
}

/// Depth-first search driven by an explicit stack. `emit` returns `false` to
/// stop; `stop` is polled before every candidate.
pub(crate) fn search(
    root: SearchState,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    semantics: Semantics,
    lookahead: bool,
    stop: &dyn Fn() -> bool,
    emit: &mut dyn FnMut(Embedding) -> bool,
) -> SearchStats {
    let mut stats = SearchStats::default();
    if root.is_complete() {
        emit(complete_embedding(&root));
        return stats;
    }
    let first = candidates(&root, pattern, target);
    let mut stack = vec![(root, first)];
    while let Some((state, cands)) = stack.last_mut() {
        if stop() {
            break;
        }
        let Some(tv) = cands.next() else {
            stack.pop();
            continue;
        };
        let pv = state.depth as VertexId;
        if !feasible_with(state, pattern, target, pv, tv, semantics, lookahead) {
            continue;
        }
        let child = state
            .extend(pattern, target, pv, tv)
            .expect("feasible candidates are unused");
        stats.states += 1;
        if child.is_complete() {
            if !emit(complete_embedding(&child)) {
                break;
            }
        } else {
            let next = candidates(&child, pattern, target);
            stack.push((child, next));
        }
    }
    stats
}

fn complete_embedding(state: &SearchState) -> Embedding {
    Embedding::new(
        state
            .core
            .iter()
            .map(|t| t.expect("complete state"))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::brute_force;

    fn g(n: usize, edges: &[(u32, u32)]) -> PropertyGraph {
        PropertyGraph::from_edges(n, edges).unwrap()
    }

    fn from_empty(p: &PropertyGraph, t: &PropertyGraph, semantics: Semantics) -> MatchSet {
        let s = SearchState::new(t.vertex_count(), p.vertex_count()).unwrap();
        vf2ps(&s, p, t, &SearchOptions::with_semantics(semantics))
    }

    #[test]
    fn new_state_shapes() {
        let s = SearchState::new(5, 3).unwrap();
        assert_eq!(s.core(), &[None, None, None]);
        assert_eq!(s.depth(), 0);
        assert!(SearchState::new(1, 1).is_ok());
        assert_eq!(
            SearchState::new(0, 2),
            Err(SearchError::InvalidSize {
                pattern: 2,
                target: 0
            })
        );
    }

    #[test]
    fn extend_updates_frontiers() {
        let p = g(3, &[(0, 1), (1, 2)]);
        let t = g(4, &[(0, 1), (0, 2), (0, 0), (3, 0)]);
        let s0 = SearchState::new(4, 3).unwrap();
        let s1 = s0.extend(&p, &t, 0, 0).unwrap();
        assert_eq!(s1.depth(), 1);
        assert_eq!(s1.t2_out(), &[1, 2]);
        assert_eq!(s1.t2_in(), &[3]);
        assert_eq!(s1.t1_out(), &[1]);
        assert!(s1.t1_in().is_empty());
        // parent untouched
        assert_eq!(s0.depth(), 0);
        assert_eq!(
            s1.extend(&p, &t, 1, 0),
            Err(SearchError::TargetAlreadyUsed(0))
        );
        assert!(matches!(
            s1.extend(&p, &t, 2, 1),
            Err(SearchError::OutOfOrder { .. })
        ));
    }

    #[test]
    fn feasibility_single_edge() {
        let p = g(2, &[(0, 1)]);
        let t = g(3, &[(0, 1), (1, 0)]);
        let s = SearchState::new(3, 2).unwrap().extend(&p, &t, 0, 0).unwrap();
        assert!(feasible(&s, &p, &t, 1, 1, Semantics::Mono));
        assert!(!feasible(&s, &p, &t, 1, 2, Semantics::Mono));
        // reverse target edge (1, 0) has no pattern counterpart
        assert!(!feasible(&s, &p, &t, 1, 1, Semantics::Iso));
    }

    #[test]
    fn iso_rejects_target_self_loop() {
        let p = g(2, &[(0, 1)]);
        let t = g(2, &[(0, 1), (1, 1)]);
        assert_eq!(from_empty(&p, &t, Semantics::Mono).len(), 1);
        assert!(from_empty(&p, &t, Semantics::Iso).is_empty());
    }

    #[test]
    fn single_edge_into_three_edges() {
        let p = g(2, &[(0, 1)]);
        let t = g(4, &[(0, 1), (1, 2), (3, 2)]);
        assert_eq!(from_empty(&p, &t, Semantics::Mono).len(), 3);
    }

    #[test]
    fn cycle_into_cycle_and_complete_digraph() {
        let cycle = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let rotations = from_empty(&cycle, &cycle, Semantics::Mono);
        assert_eq!(rotations, brute_force(&cycle, &cycle, Semantics::Mono).unwrap());
        let got: Vec<Vec<u32>> = rotations.iter().map(|f| f.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]);

        let k3 = g(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]);
        let all = from_empty(&cycle, &k3, Semantics::Mono);
        assert_eq!(all.len(), 6);
        assert_eq!(all, brute_force(&cycle, &k3, Semantics::Mono).unwrap());
        assert!(from_empty(&cycle, &k3, Semantics::Iso).is_empty());
    }

    #[test]
    fn limit_returns_canonical_prefix() {
        let cycle = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let k4: Vec<(u32, u32)> = (0..4)
            .flat_map(|u| (0..4).filter(move |&v| v != u).map(move |v| (u, v)))
            .collect();
        let t = g(4, &k4);
        let full = from_empty(&cycle, &t, Semantics::Mono);
        assert_eq!(full.len(), 24);
        let s = SearchState::new(4, 3).unwrap();
        for k in [1, 5, 24, 30] {
            let opts = SearchOptions {
                limit: Some(k),
                ..SearchOptions::default()
            };
            let part = vf2ps(&s, &cycle, &t, &opts);
            assert_eq!(part.as_slice(), &full.as_slice()[..k.min(24)]);
        }
    }

    #[test]
    fn disconnected_pattern_scans_all_targets() {
        let p = g(3, &[(0, 1)]);
        let t = g(3, &[(0, 1), (1, 2)]);
        let got = from_empty(&p, &t, Semantics::Mono);
        assert_eq!(got, brute_force(&p, &t, Semantics::Mono).unwrap());
        assert_eq!(got.len(), 2);
    }

    #[test]
    fn union_counting() {
        assert_eq!(count_in_union(&[1, 3, 5, 7], &[3, 4], &[5, 7, 9]), 3);
        assert_eq!(count_in_union(&[], &[1], &[2]), 0);
        assert_eq!(merge_filtered(&[1, 4], &[2, 4, 6], |x| *x != 6), vec![1, 2, 4]);
    }
}
