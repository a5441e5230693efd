//! Nonrepetitive (Thue) colourings of graphs: square detection, checkers for
//! vertex, edge and total colourings, an exact solver for small graphs,
//! constructions for paths, cycles, stars and bridged graphs, and
//! Local-Lemma numerics with a resampling sampler.

pub mod cli;
pub mod colour;
pub mod construct;
pub mod graph;
pub mod lll;
pub mod seqcore;
pub mod solver;
