//! Combinatorial toolkit for prime alternating links: Farey-graph
//! classification of 2-bridge and projective rational links, the cubed and
//! checkerboard polyhedral decompositions of alternating link exteriors,
//! round-disk ping-pong certificates, and a decision procedure for
//! meridian pairs.

pub mod farey;
pub mod decide;
pub mod diagram;
pub mod polyhedra;
pub mod cubing;
pub mod pingpong;
pub mod cli;
