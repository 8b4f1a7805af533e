//! ASCII and SVG pictures of mosaics.

use std::fmt::Write as _;

use cornermosaic_core::tile::tile_geometry;
use cornermosaic_core::{Layer, Mosaic, MosaicSystem, Port, TileId};

const EDGE_GLYPHS: [[&str; 3]; 11] = [
    ["     ", "     ", "     "],
    ["     ", "--.  ", "  |  "],
    ["     ", "  .--", "  |  "],
    ["  |  ", "  '--", "     "],
    ["  |  ", "--'  ", "     "],
    ["     ", "-----", "     "],
    ["  |  ", "  |  ", "  |  "],
    ["  |  ", "-, `-", "  |  "],
    ["  |  ", "-' ,-", "  |  "],
    ["  |  ", "- | -", "  |  "],
    ["  |  ", "-----", "  |  "],
];

const CORNER_GLYPHS: [[&str; 3]; 11] = [
    ["     ", "     ", "     "],
    ["\\    ", " )   ", "/    "],
    ["     ", " .-. ", "/   \\"],
    ["    /", "   ( ", "    \\"],
    ["\\   /", " `-' ", "     "],
    ["\\    ", "  \\  ", "    \\"],
    ["    /", "  /  ", "/    "],
    ["\\   /", " ) ( ", "/   \\"],
    ["\\___/", " ___ ", "/   \\"],
    ["\\   /", "  /  ", "/   \\"],
    ["\\   /", "  \\  ", "/   \\"],
];

/// Each tile drawn as a 3x5 character block, trailing blanks removed.
pub fn ascii(m: &Mosaic) -> String {
    let glyphs = match m.system() {
        MosaicSystem::Edge => &EDGE_GLYPHS,
        MosaicSystem::Corner => &CORNER_GLYPHS,
    };
    let mut out = String::new();
    for r in 0..m.rows() {
        for line in 0..3 {
            let row: String = (0..m.cols()).map(|c| glyphs[m.get((r, c)).index() as usize][line]).collect();
            out.push_str(row.trim_end());
            out.push('\n');
        }
    }
    out
}

const CELL: usize = 40;

fn port_point(p: Port) -> (usize, usize) {
    let (y, x) = p.doubled_offset();
    (x * CELL / 2, y * CELL / 2)
}

/// A polyline from `a` to `b` bent through the tile centre, cut to the
/// parameter range `t0..t1`.
fn strand_path(a: Port, b: Port, t0: f64, t1: f64) -> String {
    let (ax, ay) = port_point(a);
    let (bx, by) = port_point(b);
    let c = (CELL / 2) as f64;
    let at = |t: f64| {
        let u = 1.0 - t;
        let x = u * u * ax as f64 + 2.0 * u * t * c + t * t * bx as f64;
        let y = u * u * ay as f64 + 2.0 * u * t * c + t * t * by as f64;
        (x, y)
    };
    let mut d = String::new();
    let steps = 8;
    for i in 0..=steps {
        let t = t0 + (t1 - t0) * i as f64 / steps as f64;
        let (x, y) = at(t);
        let _ = write!(d, "{}{:.1},{:.1}", if i == 0 { "M" } else { " L" }, x, y);
    }
    d
}

/// An SVG document with one `<g>` per tile.
pub fn svg(m: &Mosaic) -> String {
    let (w, h) = (m.cols() * CELL, m.rows() * CELL);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">"
    );
    out.push_str("<style>.cell{fill:none;stroke:#ccc;stroke-width:1}.strand{fill:none;stroke:#000;stroke-width:3;stroke-linecap:round}</style>\n");
    for ((r, c), t) in m.iter() {
        let _ = writeln!(
            out,
            "<g class=\"tile t{}\" transform=\"translate({},{})\">",
            t.index(),
            c * CELL,
            r * CELL
        );
        let _ = writeln!(out, "<rect class=\"cell\" width=\"{CELL}\" height=\"{CELL}\"/>");
        for s in tile_geometry(t, m.system()) {
            let (a, b) = s.endpoints;
            let pieces: &[(f64, f64)] = match s.layer {
                Layer::Under => &[(0.0, 0.35), (0.65, 1.0)],
                _ => &[(0.0, 1.0)],
            };
            for &(t0, t1) in pieces {
                let _ = writeln!(out, "<path class=\"strand\" d=\"{}\"/>", strand_path(a, b, t0, t1));
            }
        }
        out.push_str("</g>\n");
    }
    out.push_str("</svg>\n");
    out
}

/// Every tile has a distinct picture in each system.
pub fn glyph(tile: TileId, system: MosaicSystem) -> [&'static str; 3] {
    match system {
        MosaicSystem::Edge => EDGE_GLYPHS[tile.index() as usize],
        MosaicSystem::Corner => CORNER_GLYPHS[tile.index() as usize],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn glyphs_are_distinct_and_rectangular() {
        for system in [MosaicSystem::Edge, MosaicSystem::Corner] {
            let all: Vec<_> = TileId::ALL.iter().map(|&t| glyph(t, system)).collect();
            for (i, g) in all.iter().enumerate() {
                assert!(g.iter().all(|l| l.chars().count() == 5));
                assert!(all[..i].iter().all(|h| h != g));
            }
        }
    }

    #[test]
    fn under_strands_are_split() {
        let m = Mosaic::from_indices(MosaicSystem::Corner, &[&[9]]).unwrap();
        assert_eq!(svg(&m).matches("<path").count(), 3);
        assert_eq!(svg(&m).matches("<g ").count(), 1);
    }
}
