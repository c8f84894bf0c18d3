//! Two-colorings of K43 and K42 built from a circulant base: construction,
//! exact monochromatic clique counting, replayable structural checks,
//! certificates, and flip-based local search for colorings with few
//! monochromatic K5s.

pub mod certificate;
pub mod clique;
pub mod coloring;
pub mod counter;
pub mod error;
pub mod oracle;
pub mod proof;
pub mod search;
pub mod vertex_set;

pub use certificate::{decode_certificate, encode_certificate, verify_certificate, Certificate, Claim};
pub use clique::{cliques_through_edge, common_color_neighbors, count_mono, enumerate_mono, Clique, CliqueReport};
pub use coloring::{dist, preset, Color, Coloring, ColoringSpec, Edge, Preset, Vertex};
pub use counter::{counter_by_name, CliqueCounter};
pub use error::{Error, Result};
pub use search::{
    flip_delta, local_search, objective, policy_by_name, FlipDelta, SearchOptions, SearchPolicy, SearchState,
};
pub use vertex_set::VertexSet;
