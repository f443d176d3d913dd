//! Irreversible k-threshold and majority conversion processes on
//! simple undirected graphs.
//!
//! The crate provides:
//!
//! - graph construction, named families, and the Cartesian and tensor
//!   products ([`graph`], [`family`]);
//! - synchronous simulation of both conversion rules ([`engine`]);
//! - an exact minimum conversion-set / dynamo solver with certified,
//!   lexicographically-least witnesses ([`solver`]);
//! - closed-form values and witnesses for complete multipartite graphs
//!   ([`multipartite`]);
//! - constructive, simulation-verified upper bounds for products
//!   ([`bounds`]).
//!
//! Vertices are dense ids `0..n`. Product vertices flatten as
//! `g * |V(H)| + h`; this layout is normative for every witness.

pub mod bounds;
pub mod edgelist;
pub mod engine;
pub mod family;
pub mod graph;
pub mod multipartite;
pub mod solver;
pub mod structure;
pub mod vset;

pub use engine::{Rule, Trace};
pub use family::{Family, MultipartiteSpec};
pub use graph::{cartesian_product, tensor_product, Graph};
pub use vset::VertexSet;
