//! File formats, rendering and the command-line front end for
//! `cornermosaic-core`.

pub mod commands;
pub mod formats;
pub mod render;
pub mod search;
