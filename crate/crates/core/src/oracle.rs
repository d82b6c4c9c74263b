//! Exhaustive reference enumerator. Tries every injective map and keeps the
//! ones [`verify_embedding`] accepts; no pruning of any kind.

use crate::engine::verify_embedding;
use crate::error::MatchError;
use crate::graph::{PropertyGraph, VertexId};
use crate::matches::{Embedding, MatchSet};
use crate::search::Semantics;

pub const DEFAULT_TARGET_CAP: usize = 12;

pub fn brute_force(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    semantics: Semantics,
) -> Result<MatchSet, MatchError> {
    brute_force_capped(pattern, target, semantics, DEFAULT_TARGET_CAP)
}

pub fn brute_force_capped(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    semantics: Semantics,
    cap: usize,
) -> Result<MatchSet, MatchError> {
    if target.vertex_count() > cap {
        return Err(MatchError::InstanceTooLarge {
            vertices: target.vertex_count(),
            cap,
        });
    }
    let mut found = Vec::new();
    let mut mapping = Vec::with_capacity(pattern.vertex_count());
    let mut used = vec![false; target.vertex_count()];
    enumerate(pattern, target, semantics, &mut mapping, &mut used, &mut found);
    Ok(MatchSet::from_unsorted(found))
}

fn enumerate(
    pattern: &PropertyGraph,
    target: &PropertyGraph,
    semantics: Semantics,
    mapping: &mut Vec<VertexId>,
    used: &mut [bool],
    found: &mut Vec<Embedding>,
) {
    if mapping.len() == pattern.vertex_count() {
        let f = Embedding::new(mapping.clone());
        if verify_embedding(pattern, target, &f, semantics) {
            found.push(f);
        }
        return;
    }
    for t in 0..target.vertex_count() {
        if used[t] {
            continue;
        }
        used[t] = true;
        mapping.push(t as VertexId);
        enumerate(pattern, target, semantics, mapping, used, found);
        mapping.pop();
        used[t] = false;
    }
}
