//! Toolkit for plane graphs without 4- and 6-cycles: embeddings, cycle
//! classification, (1,0,0)-colouring, reducible configurations and an exact
//! discharging engine.

pub mod cli;
pub mod coloring;
pub mod configurations;
pub mod checks;
pub mod corpus;
pub mod cycles;
pub mod discharging;
pub mod dot;
pub mod oracle;
pub mod plane_graph;
pub mod plg;
pub mod samples;
pub mod structures;

#[cfg(test)]
pub(crate) mod testing {
    pub use crate::samples::*;
}
