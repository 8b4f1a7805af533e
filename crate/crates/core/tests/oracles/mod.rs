//! Slow, direct reimplementations used to cross-check the library.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use cornermosaic_core::{MaskCell, Mosaic, MosaicSystem, OccupancyMask, TileId};

/// Strands of each tile as pairs of side letters; `|` separates the over
/// strand from the under strand of a crossing.
const STRANDS: [&str; 11] = ["", "WS", "SE", "EN", "NW", "WE", "NS", "NE SW", "NW SE", "NS|WE", "WE|NS"];

/// Point on the doubled lattice where the strand leaves through `side`.
fn point(system: MosaicSystem, (r, c): (usize, usize), side: char) -> (usize, usize) {
    let (r, c) = (2 * r, 2 * c);
    match (system, side) {
        (MosaicSystem::Edge, 'N') => (r, c + 1),
        (MosaicSystem::Edge, 'E') => (r + 1, c + 2),
        (MosaicSystem::Edge, 'S') => (r + 2, c + 1),
        (MosaicSystem::Edge, 'W') => (r + 1, c),
        // corner tiles are the edge pictures turned an eighth clockwise
        (MosaicSystem::Corner, 'N') => (r, c + 2),
        (MosaicSystem::Corner, 'E') => (r + 2, c + 2),
        (MosaicSystem::Corner, 'S') => (r + 2, c),
        (MosaicSystem::Corner, 'W') => (r, c),
        _ => unreachable!(),
    }
}

fn sides(tile: TileId) -> Vec<char> {
    STRANDS[tile.index() as usize].chars().filter(|ch| ch.is_ascii_alphabetic()).collect()
}

fn arcs(tile: TileId) -> Vec<(char, char)> {
    STRANDS[tile.index() as usize]
        .split([' ', '|'])
        .filter(|s| !s.is_empty())
        .map(|s| {
            let b = s.as_bytes();
            (b[0] as char, b[1] as char)
        })
        .collect()
}

/// Every strand endpoint meets exactly one other, and edge mosaics keep
/// their endpoints off the outer boundary.
pub fn endpoint_valid(m: &Mosaic) -> bool {
    let mut count: HashMap<(usize, usize), usize> = HashMap::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            for s in sides(m.get((r, c))) {
                *count.entry(point(m.system(), (r, c), s)).or_default() += 1;
            }
        }
    }
    count.iter().all(|(&(y, x), &k)| {
        let boundary = y == 0 || x == 0 || y == 2 * m.rows() || x == 2 * m.cols();
        k == 2 && !(m.system() == MosaicSystem::Edge && boundary)
    })
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        if self.0[x] != x {
            let r = self.find(self.0[x]);
            self.0[x] = r;
        }
        self.0[x]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }
}

/// Closed curves of a crossing-free picture given as point pairs.
fn count_loops(pairs: &[((usize, usize), (usize, usize))]) -> usize {
    let pts: BTreeSet<(usize, usize)> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    let idx: BTreeMap<(usize, usize), usize> = pts.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut dsu = Dsu((0..pts.len()).collect());
    for (a, b) in pairs {
        dsu.union(idx[a], idx[b]);
    }
    (0..pts.len()).filter(|&i| dsu.find(i) == i).count()
}

/// The bracket straight from the mosaic: every crossing tile is replaced by
/// each of its two smoothings, the loops of the resulting picture are
/// counted, and `A^(a - b) d^(loops - 1)` is summed.
///
/// For the crossing whose over strand runs N-S, turning the over strand
/// counterclockwise sweeps the NW and SE quadrants, so its A-smoothing joins
/// those quadrants and leaves arcs N-E and S-W.
pub fn state_sum_bracket(m: &Mosaic) -> BTreeMap<i32, i64> {
    let mut fixed = Vec::new();
    let mut crossings = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let t = m.get((r, c));
            match t.index() {
                9 | 10 => crossings.push(((r, c), t.index())),
                _ => {
                    for (a, b) in arcs(t) {
                        fixed.push((point(m.system(), (r, c), a), point(m.system(), (r, c), b)));
                    }
                }
            }
        }
    }
    let mut total: BTreeMap<i32, i64> = BTreeMap::new();
    if crossings.is_empty() && fixed.is_empty() {
        total.insert(0, 1);
        return total;
    }
    for state in 0u32..1 << crossings.len() {
        let mut pairs = fixed.clone();
        let mut a_count = 0i32;
        for (k, &(cell, idx)) in crossings.iter().enumerate() {
            let a_smoothing = state & (1 << k) == 0;
            if a_smoothing {
                a_count += 1;
            }
            let ne_sw = (idx == 9) == a_smoothing;
            let joins = if ne_sw { [('N', 'E'), ('S', 'W')] } else { [('N', 'W'), ('S', 'E')] };
            for (a, b) in joins {
                pairs.push((point(m.system(), cell, a), point(m.system(), cell, b)));
            }
        }
        let b_count = crossings.len() as i32 - a_count;
        let loops = count_loops(&pairs);
        // d^(loops - 1) with d = -A^2 - A^-2
        let mut term: BTreeMap<i32, i64> = BTreeMap::from([(a_count - b_count, 1)]);
        for _ in 1..loops {
            let mut next = BTreeMap::new();
            for (&e, &k) in &term {
                *next.entry(e + 2).or_insert(0) -= k;
                *next.entry(e - 2).or_insert(0) -= k;
            }
            term = next;
        }
        for (e, k) in term {
            *total.entry(e).or_insert(0) += k;
        }
    }
    total.retain(|_, k| *k != 0);
    total
}

/// Largest number of pairwise disjoint items, each item a pair of cells.
pub fn max_disjoint<T: Copy + Ord>(items: &[(T, T)]) -> usize {
    fn go<T: Copy + Ord>(items: &[(T, T)], used: &mut BTreeSet<T>) -> usize {
        let Some((&(a, b), rest)) = items.split_first() else {
            return 0;
        };
        let skip = go(rest, used);
        if used.contains(&a) || used.contains(&b) {
            return skip;
        }
        used.insert(a);
        used.insert(b);
        let take = 1 + go(rest, used);
        used.remove(&a);
        used.remove(&b);
        skip.max(take)
    }
    go(items, &mut BTreeSet::new())
}

const KING: [(i32, i32); 8] = [(-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1)];

/// Every fixed (translation-only) king-connected cell set of size `n`,
/// by Redelmeier's method: cells are added in an order that never revisits
/// a shape, counting each exactly once.
pub fn fixed_polyplets(n: usize) -> Vec<Vec<(i32, i32)>> {
    // cells are ordered so the origin is the least; only cells after it
    // in (row, col) order may be used
    fn allowed((r, c): (i32, i32)) -> bool {
        r > 0 || (r == 0 && c >= 0)
    }
    fn rec(
        n: usize,
        untried: &mut Vec<(i32, i32)>,
        shape: &mut Vec<(i32, i32)>,
        seen: &mut BTreeSet<(i32, i32)>,
        out: &mut Vec<Vec<(i32, i32)>>,
    ) {
        while let Some(cell) = untried.pop() {
            shape.push(cell);
            if shape.len() == n {
                out.push(shape.clone());
            } else {
                let mut new = Vec::new();
                for (dr, dc) in KING {
                    let nb = (cell.0 + dr, cell.1 + dc);
                    if allowed(nb) && seen.insert(nb) {
                        new.push(nb);
                    }
                }
                let mut next = untried.clone();
                next.extend(new.iter().copied());
                rec(n, &mut next, shape, seen, out);
                for nb in new {
                    seen.remove(&nb);
                }
            }
            shape.pop();
        }
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::from([(0, 0)]);
    rec(n, &mut vec![(0, 0)], &mut Vec::new(), &mut seen, &mut out);
    out
}

/// King-move connectivity by union-find over all adjacent pairs.
pub fn connected_uf(cells: &[(i32, i32)]) -> bool {
    let uniq: Vec<(i32, i32)> = cells.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if uniq.is_empty() {
        return true;
    }
    let mut dsu = Dsu((0..uniq.len()).collect());
    for i in 0..uniq.len() {
        for j in 0..i {
            let (a, b) = (uniq[i], uniq[j]);
            if (a.0 - b.0).abs() <= 1 && (a.1 - b.1).abs() <= 1 {
                dsu.union(i, j);
            }
        }
    }
    let root = dsu.find(0);
    (0..uniq.len()).all(|i| dsu.find(i) == root)
}

/// Every assignment of the 11 tiles to the cells of `cells` inside a
/// `rows x cols` corner grid that is endpoint-valid, has exactly `cells`
/// nonempty and passes `keep`.
pub fn naive_fills(rows: usize, cols: usize, cells: &[(usize, usize)], keep: impl Fn(&Mosaic) -> bool) -> BTreeSet<Vec<u8>> {
    let mut out = BTreeSet::new();
    let n = cells.len();
    let mut digits = vec![0u8; n];
    loop {
        let mut m = Mosaic::empty(MosaicSystem::Corner, rows, cols).unwrap();
        for (&cell, &d) in cells.iter().zip(&digits) {
            m.set(cell, TileId::new(d).unwrap());
        }
        if digits.iter().all(|&d| d != 0) && endpoint_valid(&m) && keep(&m) {
            out.insert(m.cells().iter().map(|t| t.index()).collect());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            digits[i] += 1;
            if digits[i] < 11 {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

pub fn forbidden_masks() -> Vec<OccupancyMask> {
    ["...\n.#.\n.?.", "...\n.#.\n..?", "...\n.#.\n?#?", "..??\n.#??\n.##.\n...."]
        .iter()
        .map(|text| {
            let rows: Vec<&str> = text.lines().collect();
            let cells = rows
                .iter()
                .flat_map(|r| r.chars())
                .map(|ch| match ch {
                    '#' => MaskCell::Filled,
                    '.' => MaskCell::Empty,
                    _ => MaskCell::Any,
                })
                .collect();
            OccupancyMask::new(rows.len(), rows[0].len(), cells).unwrap()
        })
        .collect()
}
