//! Caps in edge mosaics and the edge to corner conversion: rotate an edge
//! mosaic by an eighth turn into a checkerboard corner mosaic, then push
//! every cap into the empty cell it wraps around.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::mosaic::{Coord, Mosaic};
use crate::tile::{MosaicSystem, Port, TileId};

/// Two orthogonally adjacent single-arc tiles whose arcs turn back on each
/// other. `cells.0 < cells.1` in row-major order; `opening` is the side the
/// strand enters and leaves from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cap {
    pub cells: (Coord, Coord),
    pub opening: Port,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConversionTrace {
    pub input_nonempty: usize,
    pub caps_found: usize,
    pub pushed: usize,
    pub output_nonempty: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub t_upper: usize,
    pub caps: usize,
    pub tc_upper: usize,
    pub inequality_holds: bool,
}

fn cap_between(first: TileId, second: TileId, horizontal: bool) -> Option<Port> {
    match (horizontal, first.index(), second.index()) {
        (true, 2, 1) => Some(Port::S),
        (true, 3, 4) => Some(Port::N),
        (false, 2, 3) => Some(Port::E),
        (false, 1, 4) => Some(Port::W),
        _ => None,
    }
}

fn require(m: &Mosaic, system: MosaicSystem) -> Result<(), Error> {
    if m.system() != system {
        return Err(Error::WrongSystem { expected: system });
    }
    let report = m.validate();
    if !report.valid {
        return Err(Error::InvalidMosaic { violations: report.violations.len() });
    }
    Ok(())
}

/// Every cap-forming adjacent pair, in row-major order of the first cell.
pub fn all_caps(m: &Mosaic) -> Vec<Cap> {
    let mut caps = Vec::new();
    for ((r, c), t) in m.iter() {
        if c + 1 < m.cols() {
            if let Some(opening) = cap_between(t, m.get((r, c + 1)), true) {
                caps.push(Cap { cells: ((r, c), (r, c + 1)), opening });
            }
        }
        if r + 1 < m.rows() {
            if let Some(opening) = cap_between(t, m.get((r + 1, c)), false) {
                caps.push(Cap { cells: ((r, c), (r + 1, c)), opening });
            }
        }
    }
    caps
}

/// A maximum set of pairwise tile-disjoint caps.
///
/// Caps form a bipartite graph (cells split by the parity of `r + c`), so
/// augmenting paths find a maximum matching. Cells and neighbours are tried
/// in row-major order, which makes the result deterministic.
pub fn find_caps(m: &Mosaic) -> Result<Vec<Cap>, Error> {
    require(m, MosaicSystem::Edge)?;
    let caps = all_caps(m);
    let idx = |(r, c): Coord| r * m.cols() + c;
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); m.rows() * m.cols()];
    for (k, cap) in caps.iter().enumerate() {
        let (a, b) = cap.cells;
        let (even, odd) = if (a.0 + a.1) % 2 == 0 { (a, b) } else { (b, a) };
        adj[idx(even)].push((idx(odd), k));
    }
    for list in &mut adj {
        list.sort_unstable();
    }

    fn augment(
        u: usize,
        adj: &[Vec<(usize, usize)>],
        seen: &mut [bool],
        owner: &mut [Option<(usize, usize)>],
    ) -> bool {
        for &(v, k) in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match owner[v] {
                None => true,
                Some((w, _)) => augment(w, adj, seen, owner),
            };
            if free {
                owner[v] = Some((u, k));
                return true;
            }
        }
        false
    }

    let n = m.rows() * m.cols();
    let mut owner: Vec<Option<(usize, usize)>> = vec![None; n];
    for u in 0..n {
        if !adj[u].is_empty() {
            let mut seen = vec![false; n];
            augment(u, &adj, &mut seen, &mut owner);
        }
    }
    let mut chosen: Vec<Cap> = owner.iter().flatten().map(|&(_, k)| caps[k]).collect();
    chosen.sort();
    Ok(chosen)
}

/// Cell `(r, c)` of an `R x C` edge mosaic lands on `(r + c, R - 1 - r + c)`.
fn rotate_point(rows: usize, (r, c): Coord) -> Coord {
    (r + c, rows - 1 - r + c)
}

/// The uncropped eighth-turn image, `(R + C - 1)` square.
fn rotate_uncropped(m: &Mosaic) -> Mosaic {
    let n = m.rows() + m.cols() - 1;
    let mut out = Mosaic::empty(MosaicSystem::Corner, n, n).expect("positive size");
    for (p, t) in m.iter() {
        out.set(rotate_point(m.rows(), p), t);
    }
    out
}

/// Rotates a valid edge mosaic into a checkerboard corner mosaic, cropped to
/// its nonempty cells. An all-empty input gives an all-empty corner mosaic
/// of the same size.
pub fn rotate_to_checkerboard(m: &Mosaic) -> Result<Mosaic, Error> {
    require(m, MosaicSystem::Edge)?;
    if m.nonempty_count() == 0 {
        return Ok(m.clone().with_system(MosaicSystem::Corner));
    }
    Ok(rotate_uncropped(m).cropped())
}

pub fn is_checkerboard(m: &Mosaic) -> bool {
    let mut parity = None;
    m.occupancy().iter().all(|&(r, c)| *parity.get_or_insert((r + c) % 2) == (r + c) % 2)
}

/// Inverse of [`rotate_to_checkerboard`] up to translation.
pub fn checkerboard_to_edge(m: &Mosaic) -> Result<Mosaic, Error> {
    if m.system() != MosaicSystem::Corner {
        return Err(Error::WrongSystem { expected: MosaicSystem::Corner });
    }
    let occ = m.occupancy();
    let Some(&first) = occ.iter().next() else {
        return Ok(m.clone().with_system(MosaicSystem::Edge));
    };
    if let Some(&(row, col)) = occ.iter().find(|&&(r, c)| (r + c) % 2 != (first.0 + first.1) % 2) {
        return Err(Error::NotCheckerboard { row, col });
    }
    // u = i - j and v = i + j step by 2 between edge-adjacent cells
    let uv: Vec<(isize, isize)> =
        occ.iter().map(|&(i, j)| (i as isize - j as isize, (i + j) as isize)).collect();
    let umin = uv.iter().map(|p| p.0).min().unwrap();
    let umax = uv.iter().map(|p| p.0).max().unwrap();
    let vmin = uv.iter().map(|p| p.1).min().unwrap();
    let vmax = uv.iter().map(|p| p.1).max().unwrap();
    let rows = ((umax - umin) / 2 + 1) as usize;
    let cols = ((vmax - vmin) / 2 + 1) as usize;
    let mut out = Mosaic::empty(MosaicSystem::Edge, rows, cols)?;
    for (&cell, &(u, v)) in occ.iter().zip(&uv) {
        out.set((((u - umin) / 2) as usize, ((v - vmin) / 2) as usize), m.get(cell));
    }
    Ok(out)
}

/// Lattice vertex used by corner slot `slot` of cell `(r, c)`.
fn corner_vertex((r, c): Coord, slot: u8) -> Coord {
    match slot {
        0 => (r, c + 1),
        1 => (r + 1, c + 1),
        2 => (r + 1, c),
        _ => (r, c),
    }
}

fn corner_slot(cell: Coord, v: Coord) -> Option<u8> {
    (0..4).find(|&s| corner_vertex(cell, s) == v)
}

fn single_strand_vertices(m: &Mosaic, cell: Coord) -> Option<(Coord, Coord)> {
    match m.get(cell).slot_strands() {
        [(a, b, _)] => Some((corner_vertex(cell, *a), corner_vertex(cell, *b))),
        _ => None,
    }
}

/// Pushes each cap image (a diagonal pair of single-arc corner tiles) into
/// the empty cell its path wraps around. Returns the new mosaic and the
/// number of caps actually pushed.
///
/// A push whose target already holds the same diagonal closes a three-tile
/// loop; that loop is redrawn as a two-tile lens. A target holding another
/// strand is merged into a double-arc tile when the arcs do not cross, and
/// the cap is skipped otherwise.
pub fn push_in_caps(m: &Mosaic, images: &[(Coord, Coord)]) -> Result<(Mosaic, usize), Error> {
    if m.system() != MosaicSystem::Corner {
        return Err(Error::WrongSystem { expected: MosaicSystem::Corner });
    }
    let mut out = m.clone();
    let mut pushed = 0;
    for &(p, q) in images {
        let (Some(sp), Some(sq)) = (single_strand_vertices(&out, p), single_strand_vertices(&out, q))
        else {
            return Err(Error::ContractBreach("cap image is not a pair of single-arc tiles"));
        };
        if !(p.0.abs_diff(q.0) == 1 && p.1.abs_diff(q.1) == 1) {
            return Err(Error::ContractBreach("cap image cells are not diagonal neighbours"));
        }
        let shared = [sp.0, sp.1].into_iter().find(|v| *v == sq.0 || *v == sq.1);
        let Some(y) = shared else {
            return Err(Error::ContractBreach("cap arcs do not meet"));
        };
        let x = if sp.0 == y { sp.1 } else { sp.0 };
        let z = if sq.0 == y { sq.1 } else { sq.0 };
        let target = [(p.0, q.1), (q.0, p.1)]
            .into_iter()
            .find(|&cell| corner_slot(cell, x).is_some() && corner_slot(cell, z).is_some())
            .ok_or(Error::ContractBreach("no cell holds both cap ends"))?;
        let (sx, sz) = (corner_slot(target, x).unwrap(), corner_slot(target, z).unwrap());
        let existing = out.get(target);

        if existing.is_empty() {
            out.set(target, TileId::from_slot_pairs(&[(sx, sz)]).unwrap());
            out.set(p, TileId::T0);
            out.set(q, TileId::T0);
        } else if single_strand_vertices(&out, target).is_some_and(|(a, b)| {
            (a, b) == (x, z) || (a, b) == (z, x)
        }) {
            let sy = corner_slot(target, y).unwrap();
            out.set(target, TileId::from_slot_pairs(&[(sx, sy)]).unwrap());
            out.set(q, TileId::T0);
        } else {
            let mut pairs: Vec<(u8, u8)> =
                existing.slot_strands().iter().map(|&(a, b, _)| (a, b)).collect();
            pairs.push((sx, sz));
            match TileId::from_slot_pairs(&pairs) {
                Some(merged) if !existing.is_crossing() => {
                    out.set(target, merged);
                    out.set(p, TileId::T0);
                    out.set(q, TileId::T0);
                }
                _ => continue,
            }
        }
        pushed += 1;
    }
    if !out.is_valid() {
        return Err(Error::ContractBreach("push-in left an unmatched endpoint"));
    }
    Ok((out, pushed))
}

/// Rotate, then push in every cap found by [`find_caps`].
pub fn convert(m: &Mosaic) -> Result<(Mosaic, ConversionTrace), Error> {
    let caps = find_caps(m)?;
    let rotated = rotate_uncropped(m);
    let images: Vec<(Coord, Coord)> = caps
        .iter()
        .map(|cap| (rotate_point(m.rows(), cap.cells.0), rotate_point(m.rows(), cap.cells.1)))
        .collect();
    let (pushed_mosaic, pushed) = push_in_caps(&rotated, &images)?;
    let out = if pushed_mosaic.nonempty_count() == 0 {
        m.clone().with_system(MosaicSystem::Corner)
    } else {
        pushed_mosaic.cropped()
    };
    let trace = ConversionTrace {
        input_nonempty: m.nonempty_count(),
        caps_found: caps.len(),
        pushed,
        output_nonempty: out.nonempty_count(),
    };
    Ok((out, trace))
}

pub fn verify_bound(m: &Mosaic, claimed_tc: usize) -> Result<BoundCheck, Error> {
    let (_, trace) = convert(m)?;
    Ok(BoundCheck {
        t_upper: trace.input_nonempty,
        caps: trace.caps_found,
        tc_upper: trace.output_nonempty,
        inequality_holds: claimed_tc + trace.caps_found <= trace.input_nonempty,
    })
}

/// True when the topmost and bottommost nonempty rows and the leftmost and
/// rightmost nonempty columns hold only empty tiles and tiles of caps lying
/// along that line.
pub fn extreme_lines_only_caps(m: &Mosaic) -> bool {
    let Some((r0, c0, rows, cols)) = m.bounding_box() else {
        return true;
    };
    let (r1, c1) = (r0 + rows - 1, c0 + cols - 1);
    let caps = all_caps(m);
    let along_row = |cap: &Cap, r: usize| cap.cells.0 .0 == r && cap.cells.1 .0 == r;
    let along_col = |cap: &Cap, c: usize| cap.cells.0 .1 == c && cap.cells.1 .1 == c;
    let covered = |cell: Coord, line: &dyn Fn(&Cap) -> bool| {
        m.get(cell).is_empty()
            || caps.iter().any(|cap| line(cap) && (cap.cells.0 == cell || cap.cells.1 == cell))
    };
    (c0..=c1).all(|c| {
        covered((r0, c), &|cap| along_row(cap, r0)) && covered((r1, c), &|cap| along_row(cap, r1))
    }) && (r0..=r1).all(|r| {
        covered((r, c0), &|cap| along_col(cap, c0)) && covered((r, c1), &|cap| along_col(cap, c1))
    })
}
