//! Exact and heuristic t-improper colouring of random graphs, together with
//! the large-deviation toolkit used to predict the t-dependence number and
//! the t-improper chromatic number of `G(n, p)`, and a deterministic Monte
//! Carlo harness that compares the predictions against samples.
//!
//! A set of vertices is *t-dependent* when the subgraph it induces has
//! maximum degree at most `t`; a *t-improper colouring* partitions the
//! vertices into t-dependent classes. `t = 0` recovers independent sets and
//! proper colourings.

pub mod colouring;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod io;
pub mod rng;
pub mod theory;
mod bitset;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::Graph;
pub use rng::{mix_seed, RngSeed, SplitMix64};
