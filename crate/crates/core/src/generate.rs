//! Random valid edge mosaics.
//!
//! Each interior lattice vertex owns the little square of four connection
//! points around it. Toggling a random set of those squares gives a set of
//! connection points where every cell meets 0, 2 or 4 of them, none on the
//! outer boundary, and each cell then has a tile realising exactly its set.

use alloc::vec;
use rand::Rng;

use crate::mosaic::Mosaic;
use crate::tile::{MosaicSystem, TileId};

/// A suitably connected `rows x cols` edge mosaic. Each interior vertex is
/// toggled with probability `density`; cells meeting four connection points
/// become a crossing with probability `crossing_rate`, otherwise a double
/// arc.
pub fn random_edge_mosaic<R: Rng + ?Sized>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    density: f64,
    crossing_rate: f64,
) -> Mosaic {
    // horizontal[r][c]: the side between (r, c) and (r, c + 1) is used
    let mut horizontal = vec![vec![false; cols.saturating_sub(1)]; rows];
    let mut vertical = vec![vec![false; cols]; rows.saturating_sub(1)];
    for i in 1..rows {
        for j in 1..cols {
            if rng.gen_bool(density) {
                horizontal[i - 1][j - 1] ^= true;
                horizontal[i][j - 1] ^= true;
                vertical[i - 1][j - 1] ^= true;
                vertical[i - 1][j] ^= true;
            }
        }
    }
    let mut m = Mosaic::empty(MosaicSystem::Edge, rows, cols).expect("positive dimensions");
    for r in 0..rows {
        for c in 0..cols {
            let n = r > 0 && vertical[r - 1][c];
            let s = r + 1 < rows && vertical[r][c];
            let w = c > 0 && horizontal[r][c - 1];
            let e = c + 1 < cols && horizontal[r][c];
            let tile = match (n, e, s, w) {
                (false, false, false, false) => TileId::T0,
                (false, false, true, true) => TileId::T1,
                (false, true, true, false) => TileId::T2,
                (true, true, false, false) => TileId::T3,
                (true, false, false, true) => TileId::T4,
                (false, true, false, true) => TileId::T5,
                (true, false, true, false) => TileId::T6,
                _ => {
                    if rng.gen_bool(crossing_rate) {
                        [TileId::T9, TileId::T10][rng.gen_range(0..2)]
                    } else {
                        [TileId::T7, TileId::T8][rng.gen_range(0..2)]
                    }
                }
            };
            m.set((r, c), tile);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn always_valid() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let rows = rng.gen_range(1..7);
            let cols = rng.gen_range(1..7);
            let m = random_edge_mosaic(&mut rng, rows, cols, 0.5, 0.5);
            assert!(m.is_valid(), "{m:?}");
        }
    }
}
