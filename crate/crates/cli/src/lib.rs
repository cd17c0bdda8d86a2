//! Command-line front end: report generation, table printing, file output
//! and the embedded verification suite for the triangle-inequality cones.

pub mod fixtures;
pub mod output;
pub mod pipeline;
pub mod table;
pub mod verify;
