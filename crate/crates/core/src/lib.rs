//! Topological invariants of normal surface singularities: plumbing graphs,
//! lattice cohomology, path lattice cohomology, Newton diagrams and Oka's
//! resolution graphs, the genus-computing sequence, and the semigroup formula
//! for superisolated germs.

#![allow(clippy::needless_range_loop)]

pub mod acceptance;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod examples;
pub mod lattice;
pub mod linalg;
pub mod newton;
pub mod oka;
pub mod path;
pub mod plumbing;
pub mod reduction;
pub mod sequence;
pub mod superisolated;

pub use error::{Error, Result};
pub use plumbing::{Cycle, PlumbingGraph, RatCycle};
