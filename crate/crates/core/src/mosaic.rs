//! The mosaic value type and suitable-connectedness validation.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::tile::{MosaicSystem, Port, TileId};

/// `(row, col)`, row 0 at the top.
pub type Coord = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mosaic {
    system: MosaicSystem,
    rows: usize,
    cols: usize,
    cells: Vec<TileId>,
}

impl Mosaic {
    /// Builds a mosaic from row-major cells.
    pub fn new(
        system: MosaicSystem,
        rows: usize,
        cols: usize,
        cells: Vec<TileId>,
    ) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGrid { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(Error::CellCount { rows, cols, got: cells.len() });
        }
        Ok(Mosaic { system, rows, cols, cells })
    }

    pub fn empty(system: MosaicSystem, rows: usize, cols: usize) -> Result<Self, Error> {
        Self::new(system, rows, cols, vec![TileId::T0; rows * cols])
    }

    /// Convenience constructor from tile indices, mostly for fixtures.
    pub fn from_indices(system: MosaicSystem, rows: &[&[u8]]) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut cells = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::CellCount { rows: rows.len(), cols, got: row.len() });
            }
            for &i in *row {
                cells.push(TileId::new(i)?);
            }
        }
        Self::new(system, rows.len(), cols, cells)
    }

    pub fn system(&self) -> MosaicSystem {
        self.system
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[TileId] {
        &self.cells
    }

    pub fn get(&self, (r, c): Coord) -> TileId {
        self.cells[r * self.cols + c]
    }

    pub fn try_get(&self, r: isize, c: isize) -> Option<TileId> {
        if r < 0 || c < 0 || r as usize >= self.rows || c as usize >= self.cols {
            None
        } else {
            Some(self.get((r as usize, c as usize)))
        }
    }

    pub fn set(&mut self, (r, c): Coord, tile: TileId) {
        self.cells[r * self.cols + c] = tile;
    }

    pub fn with_system(mut self, system: MosaicSystem) -> Self {
        self.system = system;
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (Coord, TileId)> + '_ {
        let cols = self.cols;
        self.cells.iter().enumerate().map(move |(i, &t)| ((i / cols, i % cols), t))
    }

    pub fn nonempty_count(&self) -> usize {
        self.cells.iter().filter(|t| !t.is_empty()).count()
    }

    pub fn occupancy(&self) -> BTreeSet<Coord> {
        self.iter().filter(|(_, t)| !t.is_empty()).map(|(p, _)| p).collect()
    }

    /// Smallest rectangle holding every nonempty cell, as
    /// `(row0, col0, rows, cols)`; `None` for an all-empty mosaic.
    pub fn bounding_box(&self) -> Option<(usize, usize, usize, usize)> {
        let occ = self.occupancy();
        let r0 = occ.iter().map(|p| p.0).min()?;
        let r1 = occ.iter().map(|p| p.0).max()?;
        let c0 = occ.iter().map(|p| p.1).min()?;
        let c1 = occ.iter().map(|p| p.1).max()?;
        Some((r0, c0, r1 - r0 + 1, c1 - c0 + 1))
    }

    /// Crops to the bounding box of the nonempty cells. All-empty mosaics
    /// are returned unchanged.
    pub fn cropped(&self) -> Mosaic {
        let Some((r0, c0, rows, cols)) = self.bounding_box() else {
            return self.clone();
        };
        let mut cells = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                cells.push(self.get((r0 + r, c0 + c)));
            }
        }
        Mosaic { system: self.system, rows, cols, cells }
    }

    /// The mosaic turned a quarter turn counterclockwise.
    pub fn rotated_ccw(&self) -> Mosaic {
        let (rows, cols) = (self.cols, self.rows);
        let mut cells = vec![TileId::T0; rows * cols];
        for ((r, c), t) in self.iter() {
            // (r, c) -> (cols-1-c, r)
            let (nr, nc) = (self.cols - 1 - c, r);
            cells[nr * cols + nc] = t.rotated_ccw();
        }
        Mosaic { system: self.system, rows, cols, cells }
    }

    /// Swaps every `T9` with `T10`, which mirrors the represented link.
    pub fn mirrored(&self) -> Mosaic {
        let mut m = self.clone();
        for t in &mut m.cells {
            *t = t.mirrored();
        }
        m
    }

    /// Doubled-lattice location of `port` on cell `(r, c)`; shared connection
    /// points of neighbouring cells land on the same location.
    pub(crate) fn location(&self, (r, c): Coord, port: Port) -> (usize, usize) {
        let (dr, dc) = port.doubled_offset();
        (2 * r + dr, 2 * c + dc)
    }

    pub fn validate(&self) -> ValidationReport {
        match self.system {
            MosaicSystem::Edge => self.validate_edge(),
            MosaicSystem::Corner => self.validate_corner(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.validate().valid
    }

    fn validate_edge(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let uses = |t: TileId, slot: u8| t.slot_mask() & (1 << slot) != 0;
        for ((r, c), t) in self.iter() {
            // slots: N=0 E=1 S=2 W=3
            if r == 0 && uses(t, 0) {
                violations.push((Location::Edge((r, c), Port::N), Reason::Boundary));
            }
            if c == 0 && uses(t, 3) {
                violations.push((Location::Edge((r, c), Port::W), Reason::Boundary));
            }
            if r + 1 == self.rows && uses(t, 2) {
                violations.push((Location::Edge((r, c), Port::S), Reason::Boundary));
            }
            if c + 1 == self.cols && uses(t, 1) {
                violations.push((Location::Edge((r, c), Port::E), Reason::Boundary));
            }
            if c + 1 < self.cols && uses(t, 1) != uses(self.get((r, c + 1)), 3) {
                violations.push((Location::Edge((r, c), Port::E), Reason::Unmatched));
            }
            if r + 1 < self.rows && uses(t, 2) != uses(self.get((r + 1, c)), 0) {
                violations.push((Location::Edge((r, c), Port::S), Reason::Unmatched));
            }
        }
        ValidationReport::from_violations(violations)
    }

    fn validate_corner(&self) -> ValidationReport {
        let vcols = self.cols + 1;
        let mut degree = vec![0u8; (self.rows + 1) * vcols];
        for ((r, c), t) in self.iter() {
            let mask = t.slot_mask();
            // slots: NE=0 SE=1 SW=2 NW=3
            for (slot, (vr, vc)) in [(0, (r, c + 1)), (1, (r + 1, c + 1)), (2, (r + 1, c)), (3, (r, c))] {
                if mask & (1 << slot) != 0 {
                    degree[vr * vcols + vc] += 1;
                }
            }
        }
        let violations = degree
            .iter()
            .enumerate()
            .filter(|(_, &d)| d != 0 && d != 2)
            .map(|(i, &d)| {
                let reason = if d == 1 { Reason::Unmatched } else { Reason::Overloaded(d) };
                (Location::Vertex((i / vcols, i % vcols)), reason)
            })
            .collect();
        ValidationReport::from_violations(violations)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    /// A connection point of an edge tile, named from the cell that owns it.
    Edge(Coord, Port),
    /// A lattice vertex; vertex `(r, c)` is the north-west corner of cell `(r, c)`.
    Vertex(Coord),
}

impl core::fmt::Display for Location {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Location::Edge((r, c), p) => write!(f, "cell ({r}, {c}) side {p:?}"),
            Location::Vertex((r, c)) => write!(f, "vertex ({r}, {c})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    /// An endpoint with no partner across the shared edge or vertex.
    Unmatched,
    /// An endpoint on the outer boundary of an edge mosaic.
    Boundary,
    /// A corner vertex with this many (3 or 4) strand endpoints.
    Overloaded(u8),
}

impl core::fmt::Display for Reason {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Reason::Unmatched => f.write_str("unmatched strand endpoint"),
            Reason::Boundary => f.write_str("strand endpoint on the outer boundary"),
            Reason::Overloaded(n) => write!(f, "{n} strand endpoints meet at one vertex"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<(Location, Reason)>,
}

impl ValidationReport {
    fn from_violations(violations: Vec<(Location, Reason)>) -> Self {
        ValidationReport { valid: violations.is_empty(), violations }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use MosaicSystem::*;

    #[test]
    fn all_empty_is_valid() {
        for (r, c) in [(1, 1), (3, 5), (4, 4)] {
            assert!(Mosaic::empty(Corner, r, c).unwrap().is_valid());
            assert!(Mosaic::empty(Edge, r, c).unwrap().is_valid());
        }
    }

    #[test]
    fn lone_corner_arc_has_two_dangling_vertices() {
        let m = Mosaic::from_indices(Corner, &[&[1]]).unwrap();
        let rep = m.validate();
        assert!(!rep.valid);
        assert_eq!(rep.violations.len(), 2);
        assert!(rep.violations.iter().all(|(_, r)| *r == Reason::Unmatched));
    }

    #[test]
    fn two_tile_corner_unknot() {
        let m = Mosaic::from_indices(Corner, &[&[3, 1]]).unwrap();
        assert!(m.is_valid());
        assert_eq!(m.nonempty_count(), 2);
        assert_eq!(m.occupancy().into_iter().collect::<Vec<_>>(), [(0, 0), (0, 1)]);
    }

    #[test]
    fn four_endpoints_at_a_vertex_are_rejected() {
        // four double-arc tiles all use the centre vertex
        let m = Mosaic::from_indices(Corner, &[&[8, 8], &[8, 8]]).unwrap();
        let rep = m.validate();
        assert!(rep.violations.iter().any(|v| v.1 == Reason::Overloaded(4)));
    }

    #[test]
    fn edge_boundary_and_mismatch() {
        let unknot = Mosaic::from_indices(Edge, &[&[2, 1], &[3, 4]]).unwrap();
        assert!(unknot.is_valid());
        let bad = Mosaic::from_indices(Edge, &[&[5]]).unwrap();
        let rep = bad.validate();
        assert_eq!(rep.violations.len(), 2);
        assert!(rep.violations.iter().all(|v| v.1 == Reason::Boundary));
        let mismatch = Mosaic::from_indices(Edge, &[&[2, 0], &[3, 4]]).unwrap();
        assert!(!mismatch.is_valid());
    }

    #[test]
    fn rotation_keeps_validity() {
        let m = Mosaic::from_indices(Corner, &[&[6, 9, 5], &[5, 10, 6]]).unwrap();
        assert!(m.is_valid());
        let r = m.rotated_ccw();
        assert_eq!((r.rows(), r.cols()), (3, 2));
        assert!(r.is_valid());
        assert_eq!(r.rotated_ccw().rotated_ccw().rotated_ccw(), m);
    }

    #[test]
    fn crop_trims_empty_border() {
        let m = Mosaic::from_indices(Corner, &[&[0, 0, 0], &[0, 3, 1], &[0, 0, 0]]).unwrap();
        assert_eq!(m.cropped(), Mosaic::from_indices(Corner, &[&[3, 1]]).unwrap());
        let e = Mosaic::empty(Corner, 2, 2).unwrap();
        assert_eq!(e.cropped(), e);
    }

    #[test]
    fn bad_dimensions() {
        assert!(matches!(Mosaic::empty(Edge, 0, 3), Err(Error::EmptyGrid { .. })));
        assert!(matches!(
            Mosaic::new(Edge, 2, 2, vec![TileId::T0; 3]),
            Err(Error::CellCount { .. })
        ));
    }
}
