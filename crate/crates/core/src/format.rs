//! Text formats for tilings and bit grids.
//!
//! ```text
//! PENROSE-TILING v1
//! tile W 0 0 0 0 0
//! ```
//!
//! ```text
//! PENROSE-BITS v1 <origin_x> <origin_y> <width> <height>
//! <row 0: lowest y>
//! ...
//! ```
//!
//! Lines end in `\n`; there is no trailing whitespace.

use std::fmt::Write as _;

use crate::codec::BitGrid;
use crate::lattice::LatticeVertex;
use crate::tiles::{Tile, TileKind, TilingDocument};

pub const TILING_HEADER: &str = "PENROSE-TILING v1";
const TILING_MAGIC: &str = "PENROSE-TILING";
const BITS_MAGIC: &str = "PENROSE-BITS";
const VERSION: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("line {line}: unsupported version {found:?}")]
    UnsupportedVersion { line: usize, found: String },
}

fn err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Splits into lines, allowing (only) a final newline.
fn lines(text: &str) -> Vec<&str> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    body.split('\n').collect()
}

fn check_header(line: &str, magic: &str) -> Result<Vec<String>, FormatError> {
    let mut parts = line.split(' ');
    if parts.next() != Some(magic) {
        return Err(err(1, format!("expected header starting with {magic}")));
    }
    match parts.next() {
        Some(VERSION) => Ok(parts.map(str::to_string).collect()),
        Some(other) => Err(FormatError::UnsupportedVersion {
            line: 1,
            found: other.to_string(),
        }),
        None => Err(err(1, "missing version")),
    }
}

pub fn serialize_tiling(doc: &TilingDocument) -> String {
    let mut out = String::from(TILING_HEADER);
    out.push('\n');
    for t in &doc.tiles {
        let a = t.anchor;
        writeln!(
            out,
            "tile {} {} {} {} {} {}",
            t.kind.letter(),
            t.rotation,
            a.x1,
            a.x2,
            a.x3,
            a.x4
        )
        .expect("writing to a String");
    }
    out
}

pub fn parse_tiling(text: &str) -> Result<TilingDocument, FormatError> {
    let ls = lines(text);
    let extra = check_header(ls[0], TILING_MAGIC)?;
    if !extra.is_empty() {
        return Err(err(1, "unexpected fields after version"));
    }
    let mut tiles = Vec::new();
    for (i, line) in ls.iter().enumerate().skip(1) {
        let n = i + 1;
        let f: Vec<&str> = line.split(' ').collect();
        if f.len() != 7 || f[0] != "tile" {
            return Err(err(n, "expected `tile <N|W> <r> <x1> <x2> <x3> <x4>`"));
        }
        let kind = match f[1] {
            "N" => TileKind::Narrow,
            "W" => TileKind::Wide,
            k => return Err(err(n, format!("unknown tile kind {k:?}"))),
        };
        let rotation: u8 = f[2]
            .parse()
            .map_err(|_| err(n, format!("bad rotation {:?}", f[2])))?;
        let mut c = [0i64; 4];
        for (slot, s) in c.iter_mut().zip(&f[3..]) {
            *slot = s.parse().map_err(|_| err(n, format!("bad coordinate {s:?}")))?;
        }
        let tile =
            Tile::new(kind, rotation, LatticeVertex::from_array(c)).map_err(|e| err(n, e.to_string()))?;
        tiles.push(tile);
    }
    Ok(TilingDocument::new(tiles))
}

pub fn serialize_bits(grid: &BitGrid) -> String {
    let mut out = format!(
        "{BITS_MAGIC} {VERSION} {} {} {} {}\n",
        grid.origin_x(),
        grid.origin_y(),
        grid.width(),
        grid.height()
    );
    for r in 0..grid.height() {
        for c in 0..grid.width() {
            out.push(if grid.cell(c, r) { '1' } else { '0' });
        }
        out.push('\n');
    }
    out
}

pub fn parse_bits(text: &str) -> Result<BitGrid, FormatError> {
    let ls = lines(text);
    let fields = check_header(ls[0], BITS_MAGIC)?;
    if fields.len() != 4 {
        return Err(err(1, "expected origin_x origin_y width height"));
    }
    let ox: i64 = fields[0].parse().map_err(|_| err(1, "bad origin_x"))?;
    let oy: i64 = fields[1].parse().map_err(|_| err(1, "bad origin_y"))?;
    let w: usize = fields[2].parse().map_err(|_| err(1, "bad width"))?;
    let h: usize = fields[3].parse().map_err(|_| err(1, "bad height"))?;
    if w == 0 || h == 0 {
        return Err(err(1, "width and height must be positive"));
    }
    if ls.len() - 1 != h {
        return Err(err(
            ls.len(),
            format!("expected {h} rows, found {}", ls.len() - 1),
        ));
    }
    let mut grid = BitGrid::new(ox, oy, w, h);
    for (r, line) in ls[1..].iter().enumerate() {
        let n = r + 2;
        if line.len() != w {
            return Err(err(n, format!("expected {w} columns, found {}", line.len())));
        }
        for (c, ch) in line.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => grid.set_cell(c, r, true),
                other => return Err(err(n, format!("invalid character {other:?}"))),
            }
        }
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projections::FlatPoint;

    #[test]
    fn tiling_examples() {
        assert_eq!(
            serialize_tiling(&TilingDocument::default()),
            "PENROSE-TILING v1\n"
        );
        let doc = TilingDocument::new(vec![Tile::new(TileKind::Wide, 0, LatticeVertex::ORIGIN).unwrap()]);
        let text = serialize_tiling(&doc);
        assert_eq!(text, "PENROSE-TILING v1\ntile W 0 0 0 0 0\n");
        assert_eq!(parse_tiling(&text), Ok(doc));
        assert_eq!(parse_tiling("PENROSE-TILING v1"), Ok(TilingDocument::default()));
    }

    #[test]
    fn tiling_errors_carry_lines() {
        assert_eq!(
            parse_tiling("PENROSE-TILING v2\n"),
            Err(FormatError::UnsupportedVersion {
                line: 1,
                found: "v2".into()
            })
        );
        let e = parse_tiling("PENROSE-TILING v1\ntile W 0 0 0 0 0\ntile X 0 0 0 0 0\n").unwrap_err();
        assert!(matches!(e, FormatError::Parse { line: 3, .. }));
        let e = parse_tiling("PENROSE-TILING v1\ntile N 7 0 0 0 0\n").unwrap_err();
        assert!(matches!(e, FormatError::Parse { line: 2, .. }));
        let e = parse_tiling("PENROSE-TILING v1\ntile N 0 0 0 0 0 \n").unwrap_err();
        assert!(matches!(e, FormatError::Parse { line: 2, .. }));
        assert!(parse_tiling("hello\n").is_err());
    }

    #[test]
    fn bits_examples() {
        let mut g = BitGrid::new(0, 0, 1, 1);
        g.set(FlatPoint::ORIGIN, true);
        let text = serialize_bits(&g);
        assert_eq!(text, "PENROSE-BITS v1 0 0 1 1\n1\n");
        assert_eq!(parse_bits(&text), Ok(g));
    }

    #[test]
    fn bits_errors() {
        assert!(matches!(
            parse_bits("PENROSE-BITS v1 0 0 2 1\n10\n01\n"),
            Err(FormatError::Parse { .. })
        ));
        assert!(matches!(
            parse_bits("PENROSE-BITS v1 0 0 2 1\n1x\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_bits("PENROSE-BITS v1 0 0 3 1\n10\n"),
            Err(FormatError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_bits("PENROSE-BITS v9 0 0 1 1\n1\n"),
            Err(FormatError::UnsupportedVersion { .. })
        ));
    }
}
