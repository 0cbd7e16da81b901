//! Homological index of free Z/p simplicial actions.

pub mod complexes;
pub mod fpalg;
pub mod actions;
pub mod cohomology;
pub mod index;
pub mod corpus;
pub mod graphs;
pub mod hypergraphs;
pub mod suites;
pub mod cli;
