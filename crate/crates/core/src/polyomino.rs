//! Corner-connected polyominoes modulo rotation and translation, the growth
//! enumeration, and tri-state occupancy masks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;

/// `(row, col)` in the integer plane.
pub type Cell = (i32, i32);

const KING_STEPS: [Cell; 8] = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)];

/// A finite cell set in canonical form: the least sorted cell list over the
/// four rotations, each translated so its minimum row and column are 0.
/// Reflections are not identified.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polyomino {
    cells: Vec<Cell>,
}

fn rotate_ccw(cells: &[Cell]) -> Vec<Cell> {
    cells.iter().map(|&(r, c)| (-c, r)).collect()
}

fn normalized(cells: &[Cell]) -> Vec<Cell> {
    let r0 = cells.iter().map(|p| p.0).min().unwrap_or(0);
    let c0 = cells.iter().map(|p| p.1).min().unwrap_or(0);
    let mut out: Vec<Cell> = cells.iter().map(|&(r, c)| (r - r0, c - c0)).collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn canonicalize(cells: &[Cell]) -> Result<Polyomino, Error> {
    if cells.is_empty() {
        return Err(Error::EmptyCellSet);
    }
    let mut cur: Vec<Cell> = cells.to_vec();
    let mut best = normalized(&cur);
    for _ in 0..3 {
        cur = rotate_ccw(&cur);
        let n = normalized(&cur);
        if n < best {
            best = n;
        }
    }
    Ok(Polyomino { cells: best })
}

/// Connectivity under king moves; the empty set counts as connected.
pub fn is_corner_connected(cells: &[Cell]) -> bool {
    let all: BTreeSet<Cell> = cells.iter().copied().collect();
    let Some(&start) = all.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = alloc::vec![start];
    while let Some((r, c)) = stack.pop() {
        for (dr, dc) in KING_STEPS {
            let n = (r + dr, c + dc);
            if all.contains(&n) && seen.insert(n) {
                stack.push(n);
            }
        }
    }
    seen.len() == all.len()
}

impl Polyomino {
    /// The cell set exactly where it lies, without canonicalizing.
    pub(crate) fn from_placed(cells: &[Cell]) -> Polyomino {
        let mut cells = cells.to_vec();
        cells.sort_unstable();
        cells.dedup();
        Polyomino { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// `(rows, cols)` of the bounding box of the canonical placement.
    pub fn dims(&self) -> (usize, usize) {
        let rows = self.cells.iter().map(|p| p.0).max().map_or(0, |m| m + 1);
        let cols = self.cells.iter().map(|p| p.1).max().map_or(0, |m| m + 1);
        (rows as usize, cols as usize)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.binary_search(&cell).is_ok()
    }

    /// The L-triomino: three cells of a 2x2 block.
    pub fn l_triomino() -> Polyomino {
        canonicalize(&[(0, 0), (1, 0), (1, 1)]).unwrap()
    }

    pub fn contains_l_triomino(&self) -> bool {
        // every 2x2 block holding three cells has one of them at its top left
        // or top right
        self.cells.iter().any(|&(r, c)| {
            [c - 1, c].iter().any(|&left| {
                let block = [(r, left), (r, left + 1), (r + 1, left), (r + 1, left + 1)];
                block.iter().filter(|&&p| self.contains(p)).count() >= 3
            })
        })
    }

    /// Every distinct placement of the shape's rotations with minimum row and
    /// column 0.
    pub fn fixed_orientations(&self) -> Vec<Vec<Cell>> {
        let mut out = Vec::new();
        let mut cur = self.cells.clone();
        for _ in 0..4 {
            let n = normalized(&cur);
            if !out.contains(&n) {
                out.push(n);
            }
            cur = rotate_ccw(&cur);
        }
        out
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (rows, cols) = self.dims();
        for r in 0..rows as i32 {
            for c in 0..cols as i32 {
                f.write_str(if self.contains((r, c)) { "#" } else { "." })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

/// Which shapes the growth loop starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthSeed {
    /// Only the L-triomino.
    LTriomino,
    /// Every corner-connected triomino.
    Exhaustive,
}

fn grow_step(shapes: &BTreeSet<Polyomino>) -> BTreeSet<Polyomino> {
    let mut next = BTreeSet::new();
    for p in shapes {
        for &(r, c) in &p.cells {
            for (dr, dc) in KING_STEPS {
                let u = (r + dr, c + dc);
                if p.contains(u) {
                    continue;
                }
                let mut cells = p.cells.clone();
                cells.push(u);
                next.insert(canonicalize(&cells).unwrap());
            }
        }
    }
    next
}

/// Grows the seed set one king-adjacent cell at a time up to `n` cells,
/// deduplicating canonical forms at every size. Sorted output.
pub fn grow_enumerate(n: usize, seed: GrowthSeed) -> Result<Vec<Polyomino>, Error> {
    if n < 3 {
        return Err(Error::GrowthTooSmall(n));
    }
    let mut shapes: BTreeSet<Polyomino> = match seed {
        GrowthSeed::LTriomino => BTreeSet::from([Polyomino::l_triomino()]),
        GrowthSeed::Exhaustive => {
            let mono = BTreeSet::from([canonicalize(&[(0, 0)]).unwrap()]);
            grow_step(&grow_step(&mono))
        }
    };
    for _ in 3..n {
        shapes = grow_step(&shapes);
    }
    Ok(shapes.into_iter().collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MaskCell {
    /// Must be a nonempty tile.
    Filled,
    /// Must be empty.
    Empty,
    /// Unconstrained.
    Any,
}

/// A rectangular tri-state pattern of nonempty, empty and unconstrained cells.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OccupancyMask {
    rows: usize,
    cols: usize,
    cells: Vec<MaskCell>,
}

impl OccupancyMask {
    pub fn new(rows: usize, cols: usize, cells: Vec<MaskCell>) -> Result<Self, Error> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyGrid { rows, cols });
        }
        if cells.len() != rows * cols {
            return Err(Error::CellCount { rows, cols, got: cells.len() });
        }
        if cells.iter().all(|&c| c == MaskCell::Any) {
            return Err(Error::UnconstrainedMask);
        }
        Ok(OccupancyMask { rows, cols, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> MaskCell {
        self.cells[r * self.cols + c]
    }

    pub fn cells(&self) -> &[MaskCell] {
        &self.cells
    }

    pub fn rotated_ccw(&self) -> OccupancyMask {
        let (rows, cols) = (self.cols, self.rows);
        let mut cells = alloc::vec![MaskCell::Any; rows * cols];
        for r in 0..self.rows {
            for c in 0..self.cols {
                cells[(self.cols - 1 - c) * cols + r] = self.get(r, c);
            }
        }
        OccupancyMask { rows, cols, cells }
    }

    /// `(row, col, state)` for every constrained cell.
    fn constraints(&self) -> impl Iterator<Item = (i32, i32, MaskCell)> + '_ {
        (0..self.rows).flat_map(move |r| {
            (0..self.cols).filter_map(move |c| match self.get(r, c) {
                MaskCell::Any => None,
                s => Some((r as i32, c as i32, s)),
            })
        })
    }
}

/// Whether some rotation of `mask`, placed anywhere in the plane, has every
/// filled cell on `cells` and every empty cell off it.
pub fn mask_matches(cells: &[Cell], mask: &OccupancyMask) -> bool {
    let occupied: BTreeSet<Cell> = cells.iter().copied().collect();
    let mut m = mask.clone();
    for _ in 0..4 {
        let cons: Vec<(i32, i32, MaskCell)> = m.constraints().collect();
        let Some(&(ar, ac, _)) = cons.iter().find(|c| c.2 == MaskCell::Filled) else {
            // only empty cells: any placement far from the shape fits
            return true;
        };
        for &(sr, sc) in &occupied {
            let (dr, dc) = (sr - ar, sc - ac);
            let fits = cons.iter().all(|&(r, c, s)| {
                let hit = occupied.contains(&(r + dr, c + dc));
                (s == MaskCell::Filled) == hit
            });
            if fits {
                return true;
            }
        }
        m = m.rotated_ccw();
    }
    false
}

pub fn compliant(p: &Polyomino, masks: &[OccupancyMask]) -> bool {
    !masks.iter().any(|m| mask_matches(p.cells(), m))
}
