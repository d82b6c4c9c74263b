//! Structural reordering of the pattern graph.
//!
//! Vertices are relabeled so the highest-ranked vertex becomes 0 and each
//! following position takes the best unplaced out-neighbor of the vertex
//! placed just before it, which keeps the matching order path-like and makes
//! `(0, 1)` the seed edge whenever vertex 0 has an out-neighbor.

use std::cmp::Reverse;

use crate::error::MatchError;
use crate::graph::{PropertyGraph, VertexId};

/// Lexicographic rank `(totaldeg, outdeg, Reverse(id))`: higher is better and
/// remaining ties go to the smaller vertex id.
pub type SigmaRank = (usize, usize, Reverse<VertexId>);

pub fn sigma_rank(g: &PropertyGraph, v: VertexId) -> SigmaRank {
    let d = g.degrees(v);
    (d.totaldeg, d.outdeg, Reverse(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReorderResult {
    /// `permutation[old_id] == new_id`
    pub permutation: Vec<VertexId>,
    pub reordered: PropertyGraph,
}

impl ReorderResult {
    /// `inverse[new_id] == old_id`
    pub fn inverse(&self) -> Vec<VertexId> {
        invert(&self.permutation)
    }
}

pub(crate) fn invert(permutation: &[VertexId]) -> Vec<VertexId> {
    let mut inverse = vec![0; permutation.len()];
    for (old, &new) in permutation.iter().enumerate() {
        inverse[new as usize] = old as VertexId;
    }
    inverse
}

/// Placement order: `order[position] == old_id`.
pub fn placement_order(pattern: &PropertyGraph) -> Vec<VertexId> {
    let n = pattern.vertex_count();
    let ranks: Vec<SigmaRank> = (0..n as VertexId).map(|v| sigma_rank(pattern, v)).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);

    let best_unplaced = |placed: &[bool], candidates: &mut dyn Iterator<Item = VertexId>| {
        candidates
            .filter(|&w| !placed[w as usize])
            .max_by_key(|&w| ranks[w as usize])
    };

    while order.len() < n {
        let next = order
            .last()
            .and_then(|&u| best_unplaced(&placed, &mut pattern.out_neighbors(u).iter().copied()))
            .or_else(|| best_unplaced(&placed, &mut (0..n as VertexId)))
            .expect("an unplaced vertex remains");
        placed[next as usize] = true;
        order.push(next);
    }
    order
}

pub fn structural_reorder(pattern: &PropertyGraph) -> Result<ReorderResult, MatchError> {
    if pattern.vertex_count() == 0 {
        return Err(MatchError::EmptyPattern);
    }
    let order = placement_order(pattern);
    let permutation = invert(&order);
    let reordered = relabel(pattern, &permutation);
    Ok(ReorderResult {
        permutation,
        reordered,
    })
}

/// Builds the graph whose vertex `permutation[v]` is the old vertex `v`.
pub fn relabel(g: &PropertyGraph, permutation: &[VertexId]) -> PropertyGraph {
    let edges = g
        .edges()
        .map(|(u, v)| (permutation[u as usize], permutation[v as usize]))
        .collect();
    let mut vertex_attrs = vec![Default::default(); g.vertex_count()];
    for (old, attrs) in g.all_vertex_attrs().iter().enumerate() {
        vertex_attrs[permutation[old] as usize] = attrs.clone();
    }
    let edge_attrs = g.all_edge_attrs().to_vec();
    PropertyGraph::build(g.vertex_count(), edges, vertex_attrs, edge_attrs)
        .expect("a bijective relabeling preserves graph validity")
}
