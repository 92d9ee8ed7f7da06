//! Cycle census workbench for planar triangulations.

pub mod cycles;
pub mod dual;
pub mod plane_graph;
pub mod generators;
pub mod io;
pub mod procedures;
pub mod counting_base;
pub mod checks;
pub mod suite;
