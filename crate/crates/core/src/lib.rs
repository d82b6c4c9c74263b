//! Subgraph isomorphism and monomorphism on directed property graphs.
//!
//! The main entry point is [`hipermotif`]: the pattern is reordered so its
//! two highest-ranked vertices form the seed edge `(0, 1)`, every target
//! edge is screened as an image of that edge, and surviving depth-2 states
//! are handed to a frontier-set tree search, in parallel over target edges.
//!
//! ```
//! use hipermotif::{hipermotif, MatchConfig, PropertyGraph};
//!
//! let triangle = PropertyGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
//! let matches = hipermotif(&triangle, &triangle, &MatchConfig::default()).unwrap();
//! assert_eq!(matches.len(), 3);
//! ```

pub mod engine;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod matches;
pub mod oracle;
pub mod reorder;
pub mod search;
pub mod validators;

pub use engine::{hipermotif, run, run_prepared, verify_embedding, Engine, MatchConfig, PreparedPattern};
pub use error::{GenerateError, GraphError, IoError, MatchError, SearchError};
pub use graph::{
    check_edge_attrs, check_vertex_attrs, AttributeSet, Degrees, Direction, EdgeId, PropertyGraph,
    VertexId,
};
pub use matches::{Embedding, MatchSet};
pub use oracle::brute_force;
pub use reorder::{sigma_rank, structural_reorder, ReorderResult};
pub use search::{feasible, vf2ps, vf2ps_with_stats, SearchOptions, SearchState, SearchStats, Semantics};
pub use validators::{edge_validator, vertex_validator, VertexFlags};
