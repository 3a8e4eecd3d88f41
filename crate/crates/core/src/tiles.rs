//! Placed rhombi and their edges.
//!
//! A tile is `(kind, rotation, anchor)`. Narrow tiles at rotation `r` span
//! the directions `r+1` and `r+2`, wide tiles span `r` and `r+2`, with the
//! anchor at the vertex both edges leave from. Rotating a rhombus by 180°
//! maps it onto itself, so five rotations per kind cover every orientation.

use std::fmt;

use crate::lattice::{self, unit, LatticeError, LatticeVertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    /// The 36° rhombus.
    Narrow,
    /// The 72° rhombus.
    Wide,
}

impl TileKind {
    pub const ALL: [TileKind; 2] = [TileKind::Narrow, TileKind::Wide];

    pub fn letter(self) -> char {
        match self {
            TileKind::Narrow => 'N',
            TileKind::Wide => 'W',
        }
    }

    pub fn from_letter(c: char) -> Option<TileKind> {
        match c {
            'N' => Some(TileKind::Narrow),
            'W' => Some(TileKind::Wide),
            _ => None,
        }
    }

    /// Interior angle at the anchor, in degrees.
    pub fn acute_angle(self) -> u32 {
        match self {
            TileKind::Narrow => 36,
            TileKind::Wide => 72,
        }
    }

    /// Direction offsets of the two edges leaving the anchor, before rotation.
    fn base_directions(self) -> (usize, usize) {
        match self {
            TileKind::Narrow => (1, 2),
            TileKind::Wide => (0, 2),
        }
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TileError {
    #[error("rotation {0} is outside 0..5")]
    BadRotation(u8),
    #[error("tiles share {0} edges")]
    DegenerateSharing(usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// A rhombus placed in the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tile {
    pub kind: TileKind,
    pub rotation: u8,
    pub anchor: LatticeVertex,
}

impl Tile {
    pub fn new(kind: TileKind, rotation: u8, anchor: LatticeVertex) -> Result<Tile, TileError> {
        if rotation >= 5 {
            return Err(TileError::BadRotation(rotation));
        }
        Ok(Tile {
            kind,
            rotation,
            anchor,
        })
    }

    /// The tile of `kind` whose anchor edges are rotated by `k·36°` (any
    /// `k`), re-anchored into canonical form when `k mod 10 >= 5`.
    pub fn oriented(kind: TileKind, k: usize, anchor: LatticeVertex) -> Tile {
        let k = k % 10;
        if k < 5 {
            return Tile {
                kind,
                rotation: k as u8,
                anchor,
            };
        }
        let (d1, d2) = kind.base_directions();
        let far = anchor + unit(d1 + k) + unit(d2 + k);
        Tile {
            kind,
            rotation: (k - 5) as u8,
            anchor: far,
        }
    }

    /// Directions of the two edges leaving the anchor.
    pub fn directions(&self) -> (usize, usize) {
        let (d1, d2) = self.kind.base_directions();
        let r = self.rotation as usize;
        (d1 + r, d2 + r)
    }

    pub fn vertices(&self) -> [LatticeVertex; 4] {
        tile_vertices(self)
    }

    pub fn edges(&self) -> [Edge; 4] {
        tile_edges(self)
    }

    pub fn translated(&self, d: LatticeVertex) -> Tile {
        Tile {
            anchor: self.anchor + d,
            ..*self
        }
    }

    /// The tile's image under a counterclockwise 36° rotation about the origin.
    pub fn rotated36(&self) -> Result<Tile, LatticeError> {
        let anchor = lattice::rotate36(self.anchor)?;
        Ok(Tile::oriented(self.kind, self.rotation as usize + 1, anchor))
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} r{} @ {}", self.kind, self.rotation, self.anchor)
    }
}

/// Vertices in counterclockwise order, starting at the anchor.
pub fn tile_vertices(t: &Tile) -> [LatticeVertex; 4] {
    let (d1, d2) = t.directions();
    let a = t.anchor;
    let u = unit(d1);
    let v = unit(d2);
    [a, a + u, a + u + v, a + v]
}

/// An unordered pair of lattice vertices, stored with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub lo: LatticeVertex,
    pub hi: LatticeVertex,
}

impl Edge {
    pub fn new(a: LatticeVertex, b: LatticeVertex) -> Edge {
        if a <= b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    /// Direction index of `hi - lo`, if it is a unit step.
    pub fn direction(&self) -> Option<usize> {
        lattice::direction_of(self.hi - self.lo)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

pub fn tile_edges(t: &Tile) -> [Edge; 4] {
    let v = tile_vertices(t);
    [
        Edge::new(v[0], v[1]),
        Edge::new(v[1], v[2]),
        Edge::new(v[2], v[3]),
        Edge::new(v[3], v[0]),
    ]
}

/// The single edge two tiles have in common, if any.
pub fn shared_edge(t1: &Tile, t2: &Tile) -> Result<Option<Edge>, TileError> {
    let e2 = tile_edges(t2);
    let common: Vec<Edge> = tile_edges(t1).into_iter().filter(|e| e2.contains(e)).collect();
    match common.len() {
        0 => Ok(None),
        1 => Ok(Some(common[0])),
        n => Err(TileError::DegenerateSharing(n)),
    }
}

/// An ordered list of tiles; the unit of persistence and validation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TilingDocument {
    pub tiles: Vec<Tile>,
}

impl TilingDocument {
    pub fn new(tiles: Vec<Tile>) -> Self {
        TilingDocument { tiles }
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    /// Tiles sorted by `(kind, rotation, anchor)`.
    pub fn canonical(&self) -> TilingDocument {
        let mut tiles = self.tiles.clone();
        tiles.sort();
        TilingDocument { tiles }
    }

    /// Distinct tile vertices, sorted.
    pub fn vertices(&self) -> Vec<LatticeVertex> {
        let mut vs: Vec<LatticeVertex> = self.tiles.iter().flat_map(|t| t.vertices()).collect();
        vs.sort();
        vs.dedup();
        vs
    }
}

impl FromIterator<Tile> for TilingDocument {
    fn from_iter<I: IntoIterator<Item = Tile>>(iter: I) -> Self {
        TilingDocument {
            tiles: iter.into_iter().collect(),
        }
    }
}
