//! Exhaustive corner-tile fills of polyominoes and the classification of the
//! unknot-free links they carry.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::diagram::trace;
use crate::error::Error;
use crate::linkid::{classify, fingerprint, is_unknot_free, LinkClass};
use crate::mosaic::Mosaic;
use crate::polyomino::{compliant, grow_enumerate, mask_matches, Cell, GrowthSeed, MaskCell, OccupancyMask, Polyomino};
use crate::tile::{MosaicSystem, TileId};

/// Tile-level restrictions applied on top of suitable connectedness, which
/// is always required.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FillRules {
    /// A single-arc tile has an empty neighbour on the side its arc hugs.
    pub arc_side_empty: bool,
    /// A cell whose three neighbours around one corner are empty while the
    /// two orthogonal neighbours away from that corner are nonempty holds
    /// the diagonal avoiding that corner.
    pub forced_diagonal: bool,
    /// Reject shapes containing the push-down pattern (see
    /// [`pushable_arc_mask`]) in any rotation.
    pub avoid_pushable_arc: bool,
}

impl FillRules {
    pub const fn strict() -> Self {
        FillRules { arc_side_empty: true, forced_diagonal: true, avoid_pushable_arc: true }
    }

    pub const fn mandatory() -> Self {
        FillRules { avoid_pushable_arc: false, ..Self::strict() }
    }

    pub const fn none() -> Self {
        FillRules { arc_side_empty: false, forced_diagonal: false, avoid_pushable_arc: false }
    }
}

/// A nonempty cell with empty row above, empty left and right neighbours,
/// an empty cell below and nonempty cells diagonally below. The middle cell
/// can only be a bottom arc, which can be moved into the cell below.
pub fn pushable_arc_mask() -> OccupancyMask {
    use MaskCell::*;
    OccupancyMask::new(3, 3, alloc::vec![Empty, Empty, Empty, Empty, Filled, Empty, Filled, Empty, Filled])
        .expect("static mask")
}

// corner slot k of cell (r, c) sits at vertex (r + VERTEX_OFFSET[k].0, c + VERTEX_OFFSET[k].1)
const VERTEX_OFFSET: [(i32, i32); 4] = [(0, 1), (1, 1), (1, 0), (0, 0)];
// the cell sharing the side a single-arc tile hugs
const ARC_SIDE: [(i32, i32); 4] = [(0, -1), (1, 0), (0, 1), (-1, 0)];

/// The shape in its canonical placement together with everything the
/// backtracking needs.
struct Board {
    rows: usize,
    cols: usize,
    cells: Vec<Cell>,
    domains: Vec<Vec<TileId>>,
    // vertex indices touched by each cell, by corner slot
    corners: Vec<[usize; 4]>,
    // vertices whose last incident cell (in order) is the given cell
    closing: Vec<Vec<usize>>,
    vertex_count: usize,
}

fn neighbour_occupied(p: &Polyomino, (r, c): Cell, (dr, dc): (i32, i32)) -> bool {
    p.contains((r + dr, c + dc))
}

fn corner_usable(p: &Polyomino, (r, c): Cell, slot: usize) -> bool {
    let (vr, vc) = (r + VERTEX_OFFSET[slot].0, c + VERTEX_OFFSET[slot].1);
    [(vr - 1, vc - 1), (vr - 1, vc), (vr, vc - 1), (vr, vc)]
        .iter()
        .filter(|&&q| p.contains(q))
        .count()
        >= 2
}

fn allowed(p: &Polyomino, cell: Cell, tile: TileId, rules: &FillRules) -> bool {
    let mask = tile.slot_mask();
    if (0..4).any(|k| mask & (1 << k) != 0 && !corner_usable(p, cell, k)) {
        return false;
    }
    if rules.arc_side_empty && tile.is_single_arc() {
        let side = ARC_SIDE[(tile.index() - 1) as usize];
        if neighbour_occupied(p, cell, side) {
            return false;
        }
    }
    if rules.forced_diagonal {
        if let Some(required) = forced_diagonal(p, cell) {
            return tile == required;
        }
    }
    true
}

/// The tile a cell must hold when it matches the forced-diagonal pattern.
fn forced_diagonal(p: &Polyomino, cell: Cell) -> Option<TileId> {
    for slot in 0..4 {
        let (dr, dc) = VERTEX_OFFSET[slot];
        // unit steps from the cell toward the corner
        let sr = 2 * dr - 1;
        let sc = 2 * dc - 1;
        let around = [(sr, 0), (sr, sc), (0, sc)];
        let away = [(-sr, 0), (0, -sc)];
        if around.iter().all(|&d| !neighbour_occupied(p, cell, d))
            && away.iter().all(|&d| neighbour_occupied(p, cell, d))
        {
            // NE/SW blocked needs the NW-SE diagonal and vice versa
            return Some(if slot % 2 == 0 { TileId::T5 } else { TileId::T6 });
        }
    }
    None
}

impl Board {
    fn new(p: &Polyomino, rules: &FillRules) -> Board {
        let (rows, cols) = p.dims();
        let cells = p.cells().to_vec();
        let vid = |(r, c): (i32, i32)| r as usize * (cols + 1) + c as usize;
        let corners: Vec<[usize; 4]> = cells
            .iter()
            .map(|&(r, c)| core::array::from_fn(|k| vid((r + VERTEX_OFFSET[k].0, c + VERTEX_OFFSET[k].1))))
            .collect();
        let vertex_count = (rows + 1) * (cols + 1);
        let mut last = alloc::vec![None; vertex_count];
        for (i, cs) in corners.iter().enumerate() {
            for &v in cs {
                last[v] = Some(i);
            }
        }
        let mut closing = alloc::vec![Vec::new(); cells.len()];
        for (v, l) in last.iter().enumerate() {
            if let Some(i) = l {
                closing[*i].push(v);
            }
        }
        let domains = cells
            .iter()
            .map(|&cell| TileId::ALL[1..].iter().copied().filter(|&t| allowed(p, cell, t, rules)).collect())
            .collect();
        Board { rows, cols, cells, domains, corners, closing, vertex_count }
    }

    fn mosaic(&self, tiles: &[TileId]) -> Mosaic {
        let mut m = Mosaic::empty(MosaicSystem::Corner, self.rows, self.cols).expect("nonempty shape");
        for (&(r, c), &t) in self.cells.iter().zip(tiles) {
            m.set((r as usize, c as usize), t);
        }
        m
    }

    fn place(&self, degree: &mut [u8], i: usize, t: TileId, delta: i8) {
        let mask = t.slot_mask();
        for k in 0..4 {
            if mask & (1 << k) != 0 {
                let v = self.corners[i][k];
                degree[v] = (degree[v] as i8 + delta) as u8;
            }
        }
    }

    fn consistent(&self, degree: &[u8], i: usize) -> bool {
        self.corners[i].iter().all(|&v| degree[v] <= 2) && self.closing[i].iter().all(|&v| degree[v] != 1)
    }

    fn search<F: FnMut(&Mosaic)>(&self, i: usize, tiles: &mut Vec<TileId>, degree: &mut [u8], emit: &mut F) {
        if i == self.cells.len() {
            emit(&self.mosaic(tiles));
            return;
        }
        for &t in &self.domains[i] {
            self.place(degree, i, t, 1);
            if self.consistent(degree, i) {
                tiles.push(t);
                self.search(i + 1, tiles, degree, emit);
                tiles.pop();
            }
            self.place(degree, i, t, -1);
        }
    }
}

/// Calls `emit` on every valid corner mosaic with occupancy exactly `p` (in
/// its canonical placement) that satisfies `rules`. Fills are produced in
/// lexicographic order of their tile indices taken row by row.
pub fn for_each_fill<F: FnMut(&Mosaic)>(p: &Polyomino, rules: &FillRules, mut emit: F) {
    if p.is_empty() || (rules.avoid_pushable_arc && mask_matches(p.cells(), &pushable_arc_mask())) {
        return;
    }
    let board = Board::new(p, rules);
    let mut degree = alloc::vec![0u8; board.vertex_count];
    let mut tiles = Vec::with_capacity(board.cells.len());
    board.search(0, &mut tiles, &mut degree, &mut emit);
}

pub fn enumerate_fills(p: &Polyomino, rules: &FillRules) -> Vec<Mosaic> {
    let mut out = Vec::new();
    for_each_fill(p, rules, |m| out.push(m.clone()));
    out
}

/// Whether a prefix of the cell order (row-major in the canonical placement)
/// can still be completed. Checks vertices whose incident cells are all
/// decided, vertices overloaded by decided cells, and the tile rules on the
/// decided cells.
pub fn prune_feasible(p: &Polyomino, rules: &FillRules, prefix: &[TileId]) -> bool {
    if prefix.len() > p.len() {
        return false;
    }
    if !prefix.is_empty() && rules.avoid_pushable_arc && mask_matches(p.cells(), &pushable_arc_mask()) {
        return false;
    }
    let board = Board::new(p, rules);
    let mut degree = alloc::vec![0u8; board.vertex_count];
    for (i, &t) in prefix.iter().enumerate() {
        if !board.domains[i].contains(&t) {
            return false;
        }
        board.place(&mut degree, i, t, 1);
        if !board.consistent(&degree, i) {
            return false;
        }
    }
    true
}

/// Whether a complete corner mosaic obeys `rules` on its own occupancy.
pub fn satisfies_rules(m: &Mosaic, rules: &FillRules) -> bool {
    let cells: Vec<Cell> = m.occupancy().iter().map(|&(r, c)| (r as i32, c as i32)).collect();
    if cells.is_empty() {
        return true;
    }
    if rules.avoid_pushable_arc && mask_matches(&cells, &pushable_arc_mask()) {
        return false;
    }
    // `allowed` only reads occupancy, so an untranslated set works as well
    let shape = Polyomino::from_placed(&cells);
    cells.iter().all(|&cell| allowed(&shape, cell, m.get((cell.0 as usize, cell.1 as usize)), rules))
}

/// Link statistics for the fills of one shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub shape: Polyomino,
    pub fills: usize,
    /// How many fills represent each link class.
    pub classes: BTreeMap<LinkClass, usize>,
    pub unknot_free: BTreeSet<LinkClass>,
}

impl ShapeReport {
    pub fn for_shape(shape: &Polyomino, rules: &FillRules) -> Result<ShapeReport, Error> {
        let mut classes = BTreeMap::new();
        let mut unknot_free = BTreeSet::new();
        let mut fills = 0;
        let mut failure = None;
        for_each_fill(shape, rules, |m| {
            if failure.is_some() {
                return;
            }
            fills += 1;
            let result = trace(m).and_then(|d| Ok((classify(&fingerprint(&d)?), is_unknot_free(&d)?)));
            match result {
                Ok((class, free)) => {
                    if free {
                        unknot_free.insert(class.clone());
                    }
                    *classes.entry(class).or_insert(0) += 1;
                }
                Err(e) => failure = Some(e),
            }
        });
        match failure {
            Some(e) => Err(e),
            None => Ok(ShapeReport { shape: shape.clone(), fills, classes, unknot_free }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub max_cells: usize,
    pub rules: FillRules,
    /// Number of compliant shapes for each cell count.
    pub compliant_counts: BTreeMap<usize, usize>,
    /// One entry per compliant shape, ordered by size then canonical form.
    pub shapes: Vec<ShapeReport>,
}

impl SearchReport {
    /// Each unknot-free class with the fewest cells it appeared at.
    pub fn minimal_unknot_free(&self) -> BTreeMap<LinkClass, usize> {
        let mut out = BTreeMap::new();
        for s in &self.shapes {
            for c in &s.unknot_free {
                let n = out.entry(c.clone()).or_insert(s.shape.len());
                *n = (*n).min(s.shape.len());
            }
        }
        out
    }
}

/// Compliant shapes with `3..=max_cells` cells, ordered by size.
pub fn compliant_shapes(max_cells: usize, masks: &[OccupancyMask], seed: GrowthSeed) -> Result<Vec<Polyomino>, Error> {
    if !(3..=8).contains(&max_cells) {
        return Err(Error::MaxCellsOutOfRange(max_cells));
    }
    let mut out = Vec::new();
    for n in 3..=max_cells {
        out.extend(grow_enumerate(n, seed)?.into_iter().filter(|p| compliant(p, masks)));
    }
    Ok(out)
}

/// The occupancy filter for a search: the forbidden subarrays, plus the
/// push-down pattern when `rules` avoid it.
pub fn shape_filter(rules: &FillRules, masks: &[OccupancyMask]) -> Vec<OccupancyMask> {
    let mut out = masks.to_vec();
    if rules.avoid_pushable_arc {
        out.push(pushable_arc_mask());
    }
    out
}

/// Fills every compliant shape up to `max_cells` cells and records the link
/// classes found. A shape is compliant when no mask of
/// [`shape_filter`]`(rules, masks)` matches it.
pub fn reproduce_classification(
    max_cells: usize,
    rules: FillRules,
    masks: &[OccupancyMask],
    seed: GrowthSeed,
) -> Result<SearchReport, Error> {
    let shapes = compliant_shapes(max_cells, &shape_filter(&rules, masks), seed)?;
    let reports = shapes.iter().map(|p| ShapeReport::for_shape(p, &rules)).collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(max_cells, rules, reports))
}

/// Builds a report from per-shape results computed elsewhere, for instance
/// on several threads.
pub fn assemble(max_cells: usize, rules: FillRules, mut shapes: Vec<ShapeReport>) -> SearchReport {
    shapes.sort_by(|a, b| (a.shape.len(), &a.shape).cmp(&(b.shape.len(), &b.shape)));
    let mut compliant_counts: BTreeMap<usize, usize> = (3..=max_cells).map(|n| (n, 0)).collect();
    for s in &shapes {
        *compliant_counts.entry(s.shape.len()).or_insert(0) += 1;
    }
    SearchReport { max_cells, rules, compliant_counts, shapes }
}
