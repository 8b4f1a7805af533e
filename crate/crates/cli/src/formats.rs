//! Text formats: `.mosaic` grids, `.mask` patterns and `.poly` shapes.

use std::fs;
use std::path::{Path, PathBuf};

use cornermosaic_core::polyomino::{canonicalize, Cell};
use cornermosaic_core::{MaskCell, Mosaic, MosaicSystem, OccupancyMask, Polyomino, TileId};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn parse_dim(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    match tok.map(str::parse::<usize>) {
        Some(Ok(n)) if n > 0 => Ok(n),
        Some(_) => err(line, format!("{what} must be a positive integer")),
        None => err(line, format!("missing {what}")),
    }
}

fn body_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l))
}

/// Parses `<system> <rows> <cols>` followed by `rows` lines of `cols`
/// tile indices. `.` reads as `0`.
pub fn parse_mosaic(text: &str) -> Result<Mosaic, ParseError> {
    let mut lines = body_lines(text);
    let Some((_, header)) = lines.next() else {
        return err(1, "empty input");
    };
    let mut toks = header.split_whitespace();
    let system = match toks.next() {
        Some("edge") => MosaicSystem::Edge,
        Some("corner") => MosaicSystem::Corner,
        Some(other) => return err(1, format!("unknown system `{other}` (expected edge or corner)")),
        None => return err(1, "missing header"),
    };
    let rows = parse_dim(toks.next(), 1, "row count")?;
    let cols = parse_dim(toks.next(), 1, "column count")?;
    if toks.next().is_some() {
        return err(1, "trailing tokens in header");
    }
    let mut cells = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let Some((n, line)) = lines.next() else {
            return err(r + 2, format!("expected {rows} grid rows, found {r}"));
        };
        let before = cells.len();
        for tok in line.split_whitespace() {
            let tile = match tok {
                "." => TileId::T0,
                _ => match tok.parse::<u8>().ok().and_then(|i| TileId::new(i).ok()) {
                    Some(t) => t,
                    None => return err(n, format!("`{tok}` is not a tile index in 0..10")),
                },
            };
            cells.push(tile);
        }
        if cells.len() - before != cols {
            return err(n, format!("expected {cols} tiles, found {}", cells.len() - before));
        }
    }
    if let Some((n, line)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return err(n, format!("unexpected content after the grid: `{}`", line.trim()));
    }
    Ok(Mosaic::new(system, rows, cols, cells).expect("dimensions checked"))
}

pub fn serialize_mosaic(m: &Mosaic) -> String {
    let mut out = format!("{} {} {}\n", m.system(), m.rows(), m.cols());
    for r in 0..m.rows() {
        let row: Vec<String> = (0..m.cols()).map(|c| m.get((r, c)).index().to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses `<rows> <cols>` followed by a grid of `#`, `.` and `?`.
pub fn parse_mask(text: &str) -> Result<OccupancyMask, ParseError> {
    let mut lines = body_lines(text);
    let Some((_, header)) = lines.next() else {
        return err(1, "empty input");
    };
    let mut toks = header.split_whitespace();
    let rows = parse_dim(toks.next(), 1, "row count")?;
    let cols = parse_dim(toks.next(), 1, "column count")?;
    if toks.next().is_some() {
        return err(1, "trailing tokens in header");
    }
    let mut cells = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let Some((n, line)) = lines.next() else {
            return err(r + 2, format!("expected {rows} grid rows, found {r}"));
        };
        if line.chars().count() != cols {
            return err(n, format!("expected {cols} cells, found {}", line.chars().count()));
        }
        for ch in line.chars() {
            cells.push(match ch {
                '#' => MaskCell::Filled,
                '.' => MaskCell::Empty,
                '?' => MaskCell::Any,
                _ => return err(n, format!("unexpected character `{ch}`")),
            });
        }
    }
    if let Some((n, _)) = lines.find(|(_, l)| !l.trim().is_empty()) {
        return err(n, "unexpected content after the grid");
    }
    OccupancyMask::new(rows, cols, cells).map_err(|e| ParseError { line: 1, message: e.to_string() })
}

pub fn serialize_mask(m: &OccupancyMask) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.push(match m.get(r, c) {
                MaskCell::Filled => '#',
                MaskCell::Empty => '.',
                MaskCell::Any => '?',
            });
        }
        out.push('\n');
    }
    out
}

/// Parses a grid of `#` and `.`; the result is canonicalized.
pub fn parse_poly(text: &str) -> Result<Polyomino, ParseError> {
    let mut cells: Vec<Cell> = Vec::new();
    for (n, line) in body_lines(text) {
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(((n - 1) as i32, c as i32)),
                '.' => {}
                _ => return err(n, format!("unexpected character `{ch}`")),
            }
        }
    }
    canonicalize(&cells).map_err(|e| ParseError { line: 1, message: e.to_string() })
}

pub fn serialize_poly(p: &Polyomino) -> String {
    p.to_string()
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
}

pub fn read_text(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io { path: path.to_owned(), source })
}

pub fn load_mosaic(path: &Path) -> Result<Mosaic, LoadError> {
    parse_mosaic(&read_text(path)?).map_err(|source| LoadError::Parse { path: path.to_owned(), source })
}

/// Every `*.mask` file in `dir`, sorted by file name.
pub fn load_masks(dir: &Path) -> Result<Vec<(String, OccupancyMask)>, LoadError> {
    let io = |source| LoadError::Io { path: dir.to_owned(), source };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(io)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(io)?;
    paths.retain(|p| p.extension().is_some_and(|e| e == "mask"));
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let mask = parse_mask(&read_text(&p)?).map_err(|source| LoadError::Parse { path: p.clone(), source })?;
            let name = p.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            Ok((name, mask))
        })
        .collect()
}

const BUILTIN_MASKS: [(&str, &str); 4] = [
    ("subarray1", include_str!("../data/masks/subarray1.mask")),
    ("subarray2", include_str!("../data/masks/subarray2.mask")),
    ("subarray3", include_str!("../data/masks/subarray3.mask")),
    ("subarray4", include_str!("../data/masks/subarray4.mask")),
];

/// The forbidden subarrays shipped in `data/masks`, compiled in.
pub fn builtin_masks() -> Vec<(String, OccupancyMask)> {
    BUILTIN_MASKS
        .iter()
        .map(|(name, text)| (name.to_string(), parse_mask(text).expect("bundled mask parses")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_files() {
        let m = parse_mosaic("corner 1 1\n0\n").unwrap();
        assert_eq!(m.nonempty_count(), 0);
        assert_eq!(serialize_mosaic(&m), "corner 1 1\n0\n");
        let u = parse_mosaic("corner 1 2\n3 1\n").unwrap();
        assert!(u.is_valid());
        assert_eq!(parse_mosaic("edge 2 2\n2 1\n3 4\n").unwrap().nonempty_count(), 4);
    }

    #[test]
    fn dot_alias() {
        let m = parse_mosaic("edge 1 3\n. 5 .\n").unwrap();
        assert_eq!(serialize_mosaic(&m), "edge 1 3\n0 5 0\n");
    }

    #[test]
    fn errors_name_their_line() {
        assert_eq!(parse_mosaic("").unwrap_err().line, 1);
        assert_eq!(parse_mosaic("torus 1 1\n0\n").unwrap_err().line, 1);
        assert_eq!(parse_mosaic("edge 0 1\n").unwrap_err().line, 1);
        assert_eq!(parse_mosaic("edge 2 2\n1 2\n3 11\n").unwrap_err().line, 3);
        assert_eq!(parse_mosaic("edge 2 2\n1 2\n3\n").unwrap_err().line, 3);
        assert_eq!(parse_mosaic("edge 2 2\n1 2\n").unwrap_err().line, 3);
        assert_eq!(parse_mosaic("edge 1 1\n1\n\n2\n").unwrap_err().line, 4);
        assert_eq!(parse_mask("2 2\n#.\n#x\n").unwrap_err().line, 3);
        assert_eq!(parse_poly("#.\n#x\n").unwrap_err().line, 2);
        assert!(parse_poly("..\n").is_err());
    }

    #[test]
    fn mask_round_trip() {
        let text = "3 3\n...\n.#.\n?#?\n";
        assert_eq!(serialize_mask(&parse_mask(text).unwrap()), text);
        assert!(parse_mask("1 2\n??\n").is_err());
    }

    #[test]
    fn poly_is_canonical() {
        let a = parse_poly("##\n#.\n").unwrap();
        let b = parse_poly(".#\n##\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_poly(&serialize_poly(&a)).unwrap(), a);
    }

    #[test]
    fn builtin_masks_parse() {
        assert_eq!(builtin_masks().len(), 4);
    }
}
