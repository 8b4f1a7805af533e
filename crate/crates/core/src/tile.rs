//! The eleven tiles and their strand geometry in both mosaic systems.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// One of the tiles `T0`..`T10`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TileId(u8);

impl TileId {
    pub const T0: TileId = TileId(0);
    pub const T1: TileId = TileId(1);
    pub const T2: TileId = TileId(2);
    pub const T3: TileId = TileId(3);
    pub const T4: TileId = TileId(4);
    pub const T5: TileId = TileId(5);
    pub const T6: TileId = TileId(6);
    pub const T7: TileId = TileId(7);
    pub const T8: TileId = TileId(8);
    pub const T9: TileId = TileId(9);
    pub const T10: TileId = TileId(10);

    pub const ALL: [TileId; 11] = [
        Self::T0,
        Self::T1,
        Self::T2,
        Self::T3,
        Self::T4,
        Self::T5,
        Self::T6,
        Self::T7,
        Self::T8,
        Self::T9,
        Self::T10,
    ];

    pub fn new(index: u8) -> Result<Self, Error> {
        if index <= 10 {
            Ok(TileId(index))
        } else {
            Err(Error::InvalidTile(index))
        }
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_crossing(self) -> bool {
        self.0 >= 9
    }

    /// `T1`..`T4`, the tiles holding a single turning arc.
    pub fn is_single_arc(self) -> bool {
        (1..=4).contains(&self.0)
    }

    /// Slot pairs of the tile. Slot `i` is `N, E, S, W` in the edge system
    /// and `NE, SE, SW, NW` in the corner system. For crossings the first
    /// strand is the over strand.
    pub(crate) fn slot_strands(self) -> &'static [(u8, u8, Layer)] {
        use Layer::*;
        const N: u8 = 0;
        const E: u8 = 1;
        const S: u8 = 2;
        const W: u8 = 3;
        match self.0 {
            1 => &[(W, S, Only)],
            2 => &[(S, E, Only)],
            3 => &[(E, N, Only)],
            4 => &[(N, W, Only)],
            5 => &[(W, E, Only)],
            6 => &[(N, S, Only)],
            7 => &[(N, E, Only), (S, W, Only)],
            8 => &[(N, W, Only), (S, E, Only)],
            9 => &[(N, S, Over), (W, E, Under)],
            10 => &[(W, E, Over), (N, S, Under)],
            _ => &[],
        }
    }

    /// Bitmask of used slots (bit `i` for slot `i`).
    pub(crate) fn slot_mask(self) -> u8 {
        self.slot_strands()
            .iter()
            .fold(0, |m, &(a, b, _)| m | (1 << a) | (1 << b))
    }

    /// The non-crossing tile whose strands join exactly the given slot pairs.
    pub(crate) fn from_slot_pairs(pairs: &[(u8, u8)]) -> Option<TileId> {
        let norm = |(a, b): (u8, u8)| if a < b { (a, b) } else { (b, a) };
        let mut want: Vec<(u8, u8)> = pairs.iter().copied().map(norm).collect();
        want.sort_unstable();
        (0..=8u8).map(TileId).find(|t| {
            let mut have: Vec<(u8, u8)> =
                t.slot_strands().iter().map(|&(a, b, _)| norm((a, b))).collect();
            have.sort_unstable();
            have == want
        })
    }

    /// The tile showing this tile's picture turned a quarter turn
    /// counterclockwise. Layers are geometric, so `T9` and `T10` swap.
    pub fn rotated_ccw(self) -> TileId {
        TileId(match self.0 {
            0 => 0,
            4 => 1,
            k @ 1..=3 => k + 1,
            5 => 6,
            6 => 5,
            7 => 8,
            8 => 7,
            9 => 10,
            _ => 9,
        })
    }

    /// Swaps the two crossing tiles; every other tile is unchanged.
    pub fn mirrored(self) -> TileId {
        match self.0 {
            9 => Self::T10,
            10 => Self::T9,
            _ => self,
        }
    }
}

impl fmt::Display for TileId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MosaicSystem {
    Edge,
    Corner,
}

impl MosaicSystem {
    pub fn name(self) -> &'static str {
        match self {
            MosaicSystem::Edge => "edge",
            MosaicSystem::Corner => "corner",
        }
    }

    /// The connection point sitting at slot `i` (0..4).
    pub fn port(self, slot: u8) -> Port {
        const EDGE: [Port; 4] = [Port::N, Port::E, Port::S, Port::W];
        const CORNER: [Port; 4] = [Port::NE, Port::SE, Port::SW, Port::NW];
        match self {
            MosaicSystem::Edge => EDGE[slot as usize],
            MosaicSystem::Corner => CORNER[slot as usize],
        }
    }
}

impl fmt::Display for MosaicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A connection point on the boundary of a tile: edge midpoints for the edge
/// system, corners for the corner system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Port {
    N,
    E,
    S,
    W,
    NE,
    SE,
    SW,
    NW,
}

impl Port {
    /// Position on a doubled lattice where cell `(r, c)` spans
    /// `2r..=2r+2` by `2c..=2c+2`.
    pub fn doubled_offset(self) -> (usize, usize) {
        match self {
            Port::N => (0, 1),
            Port::E => (1, 2),
            Port::S => (2, 1),
            Port::W => (1, 0),
            Port::NE => (0, 2),
            Port::SE => (2, 2),
            Port::SW => (2, 0),
            Port::NW => (0, 0),
        }
    }

    pub fn slot(self) -> u8 {
        match self {
            Port::N | Port::NE => 0,
            Port::E | Port::SE => 1,
            Port::S | Port::SW => 2,
            Port::W | Port::NW => 3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Layer {
    Only,
    Over,
    Under,
}

/// A strand inside one tile. Endpoints are stored in a fixed order, so two
/// strands compare equal iff they join the same points on the same layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Strand {
    pub endpoints: (Port, Port),
    pub layer: Layer,
}

impl Strand {
    pub fn new(a: Port, b: Port, layer: Layer) -> Self {
        let endpoints = if a <= b { (a, b) } else { (b, a) };
        Strand { endpoints, layer }
    }
}

pub fn tile_geometry(tile: TileId, system: MosaicSystem) -> Vec<Strand> {
    tile.slot_strands()
        .iter()
        .map(|&(a, b, layer)| Strand::new(system.port(a), system.port(b), layer))
        .collect()
}
