//! Candidate pruning ahead of the tree search: a per-vertex filter for the
//! image of pattern vertex 0, and a per-edge check that a target edge can
//! carry the seed edge `(0, 1)`, which also builds the depth-2 state.

use std::ops::Index;

use crate::graph::{
    check_edge_attrs, check_vertex_attrs, common_neighbor_count, sorted_union,
    EdgeId, PropertyGraph, VertexId,
};
use crate::search::{SearchState, Semantics};

/// `flags[v]` is set when `v` may be the image of pattern vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFlags(Vec<bool>);

impl VertexFlags {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&f| f).count()
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.0
    }
}

impl Index<VertexId> for VertexFlags {
    type Output = bool;

    fn index(&self, v: VertexId) -> &bool {
        &self.0[v as usize]
    }
}

pub fn vertex_validator(pattern: &PropertyGraph, target: &PropertyGraph) -> VertexFlags {
    let need_in = pattern.in_degree(0);
    let need_out = pattern.out_degree(0);
    VertexFlags(
        (0..target.vertex_count() as VertexId)
            .map(|v| {
                check_vertex_attrs(pattern, 0, target, v)
                    && target.in_degree(v) >= need_in
                    && target.out_degree(v) >= need_out
            })
            .collect(),
    )
}

/// Tests whether target edge `(u, v)` can be the image of the seed edge
/// `(0, 1)`. On success `state` holds `0 -> u, 1 -> v` at depth 2 with its
/// frontiers filled in; on failure it is left as it was.
///
/// The image of vertex 0 is assumed to have passed [`vertex_validator`].
pub fn edge_validator(
    u: VertexId,
    v: VertexId,
    state: &mut SearchState,
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    semantics: Semantics,
) -> bool {
    debug_assert_eq!(state.depth, 0);
    let (Some(seed), Some(e)) = (SeedEdge::new(pattern, semantics), target.edge_id(u, v)) else {
        return false;
    };
    if !seed.admits(pattern, target, e) {
        return false;
    }
    seed.fill(state, target, u, v);
    true
}

/// Pattern-side facts about the seed edge, computed once per run.
#[derive(Debug)]
pub(crate) struct SeedEdge {
    semantics: Semantics,
    forward: EdgeId,
    reverse: Option<EdgeId>,
    in_degree: usize,
    out_degree: usize,
    common: usize,
    t1_in: Vec<VertexId>,
    t1_out: Vec<VertexId>,
}

fn without_pair(a: &[VertexId], b: &[VertexId], x: VertexId, y: VertexId) -> Vec<VertexId> {
    let mut s = sorted_union(a, b);
    s.retain(|&w| w != x && w != y);
    s
}

impl SeedEdge {
    /// `None` when the pattern has no edge `(0, 1)`.
    pub(crate) fn new(pattern: &PropertyGraph, semantics: Semantics) -> Option<Self> {
        let forward = pattern.edge_id(0, 1)?;
        Some(Self {
            semantics,
            forward,
            reverse: pattern.edge_id(1, 0),
            in_degree: pattern.in_degree(1),
            out_degree: pattern.out_degree(1),
            common: common_neighbor_count(pattern, 0, 1, usize::MAX),
            t1_in: without_pair(pattern.in_neighbors(0), pattern.in_neighbors(1), 0, 1),
            t1_out: without_pair(pattern.out_neighbors(0), pattern.out_neighbors(1), 0, 1),
        })
    }

    /// The checks of [`edge_validator`] for target edge `e`.
    pub(crate) fn admits(&self, pattern: &PropertyGraph, target: &PropertyGraph, e: EdgeId) -> bool {
        let (u, v) = target.endpoints(e);
        if u == v || !check_vertex_attrs(pattern, 1, target, v) {
            return false;
        }
        if self.semantics == Semantics::Iso && (target.has_self_loop(u) || target.has_self_loop(v)) {
            return false;
        }
        if !check_edge_attrs(pattern, self.forward, target, e) {
            return false;
        }
        match (target.edge_id(v, u), self.reverse) {
            (None, Some(_)) => return false,
            (Some(target_r), Some(pattern_r)) => {
                if !check_edge_attrs(pattern, pattern_r, target, target_r) {
                    return false;
                }
            }
            (Some(_), None) if self.semantics == Semantics::Iso => return false,
            _ => {}
        }
        if target.in_degree(v) < self.in_degree || target.out_degree(v) < self.out_degree {
            return false;
        }
        self.common == 0 || common_neighbor_count(target, u, v, self.common) >= self.common
    }

    /// Writes the depth-2 state for an admitted edge `(u, v)` into a fresh
    /// `state`.
    pub(crate) fn fill(&self, state: &mut SearchState, target: &PropertyGraph, u: VertexId, v: VertexId) {
        state.t2_in = without_pair(target.in_neighbors(u), target.in_neighbors(v), u, v);
        state.t2_out = without_pair(target.out_neighbors(u), target.out_neighbors(v), u, v);
        state.t1_in = self.t1_in.clone();
        state.t1_out = self.t1_out.clone();
        state.depth += 2;
        state.core[0] = Some(u);
        state.core[1] = Some(v);
        state.used = if u < v { vec![u, v] } else { vec![v, u] };
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::AttributeSet;

    fn g(n: usize, edges: &[(u32, u32)]) -> PropertyGraph {
        PropertyGraph::from_edges(n, edges).unwrap()
    }

    fn fresh(p: &PropertyGraph, t: &PropertyGraph) -> SearchState {
        SearchState::new(t.vertex_count(), p.vertex_count()).unwrap()
    }

    #[test]
    fn vertex_thresholds() {
        // pattern vertex 0: indeg 1, outdeg 2
        let p = g(4, &[(3, 0), (0, 1), (0, 2)]);
        // target 0: (1,1); 1: (2,2); 2: (1,2)
        let t = g(
            8,
            &[(3, 0), (0, 4), (3, 1), (4, 1), (1, 5), (1, 6), (5, 2), (2, 6), (2, 7)],
        );
        let flags = vertex_validator(&p, &t);
        assert!(!flags[0]);
        assert!(flags[1]);
        assert!(flags[2]);
        assert_eq!(flags.len(), 8);
    }

    #[test]
    fn vertex_attribute_mismatch_wins() {
        let a: AttributeSet = [("type", "A")].into_iter().collect();
        let b: AttributeSet = [("type", "B")].into_iter().collect();
        let p = PropertyGraph::build(2, vec![(0, 1)], vec![a, AttributeSet::new()], vec![]).unwrap();
        let t = PropertyGraph::build(
            3,
            vec![(0, 1), (0, 2), (1, 2)],
            vec![b.clone(), b.clone(), b],
            vec![],
        )
        .unwrap();
        assert_eq!(vertex_validator(&p, &t).count(), 0);
    }

    #[test]
    fn missing_reverse_edge_rejected() {
        let p = g(2, &[(0, 1), (1, 0)]);
        let t = g(2, &[(0, 1)]);
        let mut s = fresh(&p, &t);
        assert!(!edge_validator(0, 1, &mut s, &p, &t, Semantics::Mono));
        assert_eq!(s, fresh(&p, &t));
    }

    #[test]
    fn single_edge_floor_thresholds() {
        let p = g(2, &[(0, 1)]);
        let t = g(3, &[(0, 1), (2, 0)]);
        let mut s = fresh(&p, &t);
        assert!(edge_validator(0, 1, &mut s, &p, &t, Semantics::Mono));
        assert_eq!(s.depth(), 2);
        assert_eq!(s.core(), &[Some(0), Some(1)]);
        assert_eq!(s.t2_in(), &[2]);
        assert!(s.t2_out().is_empty());
    }

    #[test]
    fn triangle_needs_common_neighbor() {
        let p = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let lonely = g(4, &[(0, 1), (1, 2), (3, 0)]);
        let mut s = fresh(&p, &lonely);
        assert!(!edge_validator(0, 1, &mut s, &p, &lonely, Semantics::Mono));

        let shared = g(3, &[(0, 1), (1, 2), (2, 0)]);
        let mut s = fresh(&p, &shared);
        assert!(edge_validator(0, 1, &mut s, &p, &shared, Semantics::Mono));
    }

    #[test]
    fn iso_rejects_extra_reverse_edge() {
        let p = g(2, &[(0, 1)]);
        let t = g(2, &[(0, 1), (1, 0)]);
        let mut s = fresh(&p, &t);
        assert!(!edge_validator(0, 1, &mut s, &p, &t, Semantics::Iso));
        assert!(edge_validator(0, 1, &mut s, &p, &t, Semantics::Mono));
    }

    #[test]
    fn edge_attributes_both_directions() {
        let strong: AttributeSet = [("w", "strong")].into_iter().collect();
        let weak: AttributeSet = [("w", "weak")].into_iter().collect();
        let p = PropertyGraph::build(2, vec![(0, 1), (1, 0)], vec![], vec![strong.clone(), strong.clone()])
            .unwrap();
        let good = PropertyGraph::build(2, vec![(0, 1), (1, 0)], vec![], vec![strong.clone(), strong.clone()])
            .unwrap();
        let bad = PropertyGraph::build(2, vec![(0, 1), (1, 0)], vec![], vec![strong, weak]).unwrap();
        assert!(edge_validator(0, 1, &mut fresh(&p, &good), &p, &good, Semantics::Mono));
        assert!(!edge_validator(0, 1, &mut fresh(&p, &bad), &p, &bad, Semantics::Mono));
    }

    #[test]
    fn injected_state_matches_two_extensions() {
        let p = g(4, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1)]);
        let t = g(
            6,
            &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 1), (4, 0), (1, 5), (5, 5), (2, 4)],
        );
        let mut injected = fresh(&p, &t);
        assert!(edge_validator(0, 1, &mut injected, &p, &t, Semantics::Mono));
        let stepped = fresh(&p, &t)
            .extend(&p, &t, 0, 0)
            .unwrap()
            .extend(&p, &t, 1, 1)
            .unwrap();
        assert_eq!(injected, stepped);
    }
}
