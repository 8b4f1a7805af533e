//! Knot mosaics in the edge-tile and corner-tile systems.
//!
//! The crate is `no_std` (it needs `alloc`). Text formats, rendering and the
//! command line live in the `cornermosaic` crate.
//!
//! * [`tile`] and [`mosaic`]: tiles, strand geometry, suitable connectedness.
//! * [`transform`]: caps and the edge to corner conversion.
//! * [`diagram`], [`poly`] and [`linkid`]: tracing a mosaic into a planar
//!   diagram and identifying the link with bracket fingerprints.
//! * [`polyomino`] and [`fillsearch`]: corner-connected shapes, occupancy
//!   masks and the exhaustive tile fill search.
#![no_std]

extern crate alloc;

pub mod diagram;
pub mod error;
pub mod fillsearch;
pub mod generate;
pub mod linkid;
pub mod mosaic;
pub mod poly;
pub mod polyomino;
pub mod tile;
pub mod transform;

pub use diagram::{trace, Crossing, PlanarDiagram};
pub use error::Error;

pub use linkid::{classify, fingerprint, LinkClass, LinkFingerprint};
pub use mosaic::{Coord, Mosaic, ValidationReport};
pub use poly::LaurentPoly;
pub use fillsearch::{FillRules, SearchReport, ShapeReport};
pub use polyomino::{GrowthSeed, MaskCell, OccupancyMask, Polyomino};
pub use tile::{Layer, MosaicSystem, Port, Strand, TileId};
pub use transform::{Cap, ConversionTrace};
