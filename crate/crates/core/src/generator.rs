//! Greedy growth of a tiling around the origin.
//!
//! Each step attaches, along some boundary edge, the legal tile whose
//! farthest new vertex is closest to the origin in the flat lattice metric.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::contact::{classify_contact, classify_flat, Bounds};
use crate::lattice::{unit, LatticeVertex};
use crate::projections::{flat_unit, project_flat, FlatPoint};
use crate::tiles::{Edge, Tile, TileKind, TilingDocument};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GenerateError {
    #[error("tile count must be at least 1")]
    ZeroCount,
    #[error("seed tile {0} is not anchored at the origin")]
    SeedOffOrigin(Tile),
    #[error("no legal tile can be attached to the boundary")]
    NoCandidates,
    #[error("stuck after {} tiles: no legal tile can be attached", partial.len())]
    Stuck { partial: TilingDocument },
}

/// An edge owned by exactly one placed tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FrontierEdge {
    pub edge: Edge,
    /// Index of the owning tile; new tiles go on the other side.
    pub owner: usize,
}

/// Boundary edges of a document, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Frontier {
    pub edges: Vec<FrontierEdge>,
}

impl Frontier {
    pub fn of(doc: &TilingDocument) -> Frontier {
        let mut owners: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (i, t) in doc.tiles.iter().enumerate() {
            for e in t.edges() {
                owners.entry(e).or_default().push(i);
            }
        }
        let edges = owners
            .into_iter()
            .filter_map(|(edge, o)| (o.len() == 1).then(|| FrontierEdge { edge, owner: o[0] }))
            .collect();
        Frontier { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Every tile sharing a full edge `{a, b}`, on either side.
fn tiles_on_edge(a: LatticeVertex, b: LatticeVertex) -> Vec<Tile> {
    let d = b - a;
    let mut out = Vec::new();
    for kind in TileKind::ALL {
        for r in 0..5 {
            let shape = Tile::new(kind, r, LatticeVertex::ORIGIN).expect("rotation < 5");
            let s = shape.vertices();
            for i in 0..4 {
                let step = s[(i + 1) % 4] - s[i];
                if step == d {
                    out.push(shape.translated(a - s[i]));
                } else if step == -d {
                    out.push(shape.translated(b - s[i]));
                }
            }
        }
    }
    out
}

/// Vertex lifts of the placed tiles, keyed by flat image.
struct FlatPicture {
    lifts: HashMap<FlatPoint, LatticeVertex>,
}

impl FlatPicture {
    fn of(doc: &TilingDocument) -> FlatPicture {
        let lifts = doc.vertices().into_iter().map(|v| (project_flat(v), v)).collect();
        FlatPicture { lifts }
    }

    /// No vertex of `t` shares a flat point with a different lattice
    /// vertex, and vertices one flat step apart are one lattice step apart.
    fn faithful(&self, t: &Tile) -> bool {
        t.vertices().iter().all(|&v| {
            let f = project_flat(v);
            self.lifts.get(&f).is_none_or(|&w| w == v)
                && (0..10).all(|j| {
                    self.lifts
                        .get(&(f + flat_unit(j)))
                        .is_none_or(|&w| w == v + unit(j))
                })
        })
    }
}

fn flat_box(t: &Tile) -> (FlatPoint, FlatPoint) {
    let q = t.vertices().map(project_flat);
    let lo = FlatPoint::new(
        q.iter().map(|p| p.x).min().unwrap(),
        q.iter().map(|p| p.y).min().unwrap(),
    );
    let hi = FlatPoint::new(
        q.iter().map(|p| p.x).max().unwrap(),
        q.iter().map(|p| p.y).max().unwrap(),
    );
    (lo, hi)
}

fn boxes_meet(a: &(FlatPoint, FlatPoint), b: &(FlatPoint, FlatPoint)) -> bool {
    a.0.x <= b.1.x && b.0.x <= a.1.x && a.0.y <= b.1.y && b.0.y <= a.1.y
}

/// Legal tiles that can be attached along a frontier edge.
///
/// A placement must touch every placed tile legally in the plane, and the
/// same way in the flat lattice, so that the bit array of the result
/// describes it faithfully.
pub fn candidate_placements(doc: &TilingDocument, f: &Frontier) -> Result<Vec<Tile>, GenerateError> {
    let placed: BTreeSet<Tile> = doc.tiles.iter().copied().collect();
    let bounds: Vec<Bounds> = doc.tiles.iter().map(Bounds::of).collect();
    let boxes: Vec<_> = doc.tiles.iter().map(flat_box).collect();
    let picture = FlatPicture::of(doc);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for fe in &f.edges {
        for t in tiles_on_edge(fe.edge.lo, fe.edge.hi) {
            if placed.contains(&t) || !seen.insert(t) || !picture.faithful(&t) {
                continue;
            }
            let (tb, tf) = (Bounds::of(&t), flat_box(&t));
            let legal = doc
                .tiles
                .iter()
                .zip(bounds.iter().zip(&boxes))
                .all(|(other, (ob, of))| {
                    if !tb.overlaps(ob) && !boxes_meet(&tf, of) {
                        return true;
                    }
                    match classify_contact(&t, other) {
                        Ok(c) => c.is_legal() && classify_flat(&t, other) == c,
                        Err(_) => false,
                    }
                });
            if legal {
                out.push(t);
            }
        }
    }
    if out.is_empty() {
        return Err(GenerateError::NoCandidates);
    }
    Ok(out)
}

/// Squared flat distance from the origin of the farthest vertex that `t`
/// would add. `placed` is the sorted vertex list of the document. A tile
/// adding no vertex closes a gap and scores 0.
pub fn placement_score(t: &Tile, placed: &[LatticeVertex]) -> i64 {
    t.vertices()
        .iter()
        .filter(|v| placed.binary_search(v).is_err())
        .map(|v| project_flat(*v).norm_sq())
        .max()
        .unwrap_or(0)
}

/// Total order used to pick among candidates; smallest wins.
pub fn placement_key(t: &Tile, placed: &[LatticeVertex]) -> (i64, TileKind, u8, i64, i64, LatticeVertex) {
    let a = project_flat(t.anchor);
    (placement_score(t, placed), t.kind, t.rotation, a.x, a.y, t.anchor)
}

/// Incremental greedy tiler.
#[derive(Debug, Clone)]
pub struct GreedyGenerator {
    doc: TilingDocument,
}

impl GreedyGenerator {
    pub fn new(seed: Tile) -> Result<GreedyGenerator, GenerateError> {
        if seed.anchor != LatticeVertex::ORIGIN {
            return Err(GenerateError::SeedOffOrigin(seed));
        }
        Ok(GreedyGenerator {
            doc: TilingDocument::new(vec![seed]),
        })
    }

    pub fn document(&self) -> &TilingDocument {
        &self.doc
    }

    pub fn into_document(self) -> TilingDocument {
        self.doc
    }

    pub fn candidates(&self) -> Result<Vec<Tile>, GenerateError> {
        candidate_placements(&self.doc, &Frontier::of(&self.doc))
    }

    /// Places the best candidate and returns it.
    pub fn step(&mut self) -> Result<Tile, GenerateError> {
        let placed = self.doc.vertices();
        let best = self
            .candidates()?
            .into_iter()
            .min_by_key(|t| placement_key(t, &placed))
            .expect("candidate list is non-empty");
        self.doc.tiles.push(best);
        Ok(best)
    }
}

/// The default seed: a wide tile at rotation 0 anchored at the origin.
pub fn default_seed(kind: TileKind) -> Tile {
    Tile::new(kind, 0, LatticeVertex::ORIGIN).expect("rotation 0")
}

/// A tiling of `n` tiles grown greedily from `seed`, in placement order.
pub fn generate_greedy(n: usize, seed: Tile) -> Result<TilingDocument, GenerateError> {
    if n == 0 {
        return Err(GenerateError::ZeroCount);
    }
    let mut g = GreedyGenerator::new(seed)?;
    while g.doc.len() < n {
        match g.step() {
            Ok(_) => {}
            Err(GenerateError::NoCandidates) => {
                return Err(GenerateError::Stuck {
                    partial: g.into_document(),
                })
            }
            Err(e) => return Err(e),
        }
    }
    Ok(g.into_document())
}
