//! Bit-array description of a tiling on the flat lattice.
//!
//! Encoding keeps only the flat positions of tile vertices. Decoding
//! recovers the edges (pairs of set bits one flat unit step apart), picks
//! the tiles by backtracking, and lifts the flat graph back to Z⁴ by summing
//! unit steps along paths from the origin.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::contact::{classify_contact, classify_flat, validate_tiling, Bounds};
use crate::lattice::{unit, LatticeVertex};
use crate::projections::{flat_unit, project_flat, FlatPoint};
use crate::tiles::{Tile, TileKind, TilingDocument};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CodecError {
    #[error("no tile vertex lies at the flat origin")]
    OriginMissing,
    #[error("lattice vertices {a} and {b} share flat point {flat}")]
    CollisionDetected {
        flat: FlatPoint,
        a: LatticeVertex,
        b: LatticeVertex,
    },
    #[error("bits do not describe a tiling: {0}")]
    Unreconstructable(String),
    #[error("bits admit more than one tiling")]
    Ambiguous,
    #[error("edge {from} -> {to} disagrees with the lift of its endpoints")]
    InconsistentLift { from: FlatPoint, to: FlatPoint },
    #[error("flat vertex {0} is not connected to the root")]
    Disconnected(FlatPoint),
    #[error("root {0} is not a vertex of the graph")]
    MissingRoot(FlatPoint),
}

/// A rectangle of presence bits over the flat lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitGrid {
    origin_x: i64,
    origin_y: i64,
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl BitGrid {
    /// An all-zero grid. Panics if either dimension is zero.
    pub fn new(origin_x: i64, origin_y: i64, width: usize, height: usize) -> BitGrid {
        assert!(width > 0 && height > 0, "bit grid must be non-empty");
        BitGrid {
            origin_x,
            origin_y,
            width,
            height,
            bits: vec![false; width * height],
        }
    }

    /// The smallest grid holding every point, with exactly those bits set.
    pub fn from_points<I: IntoIterator<Item = FlatPoint>>(points: I) -> Option<BitGrid> {
        let pts: Vec<FlatPoint> = points.into_iter().collect();
        let min_x = pts.iter().map(|p| p.x).min()?;
        let max_x = pts.iter().map(|p| p.x).max()?;
        let min_y = pts.iter().map(|p| p.y).min()?;
        let max_y = pts.iter().map(|p| p.y).max()?;
        let mut g = BitGrid::new(
            min_x,
            min_y,
            (max_x - min_x + 1) as usize,
            (max_y - min_y + 1) as usize,
        );
        for p in pts {
            g.set(p, true);
        }
        Some(g)
    }

    pub fn origin_x(&self) -> i64 {
        self.origin_x
    }

    pub fn origin_y(&self) -> i64 {
        self.origin_y
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn index(&self, p: FlatPoint) -> Option<usize> {
        let c = p.x - self.origin_x;
        let r = p.y - self.origin_y;
        if c < 0 || r < 0 || c as usize >= self.width || r as usize >= self.height {
            return None;
        }
        Some(r as usize * self.width + c as usize)
    }

    /// Bit at a flat point; points outside the grid read as 0.
    pub fn get(&self, p: FlatPoint) -> bool {
        self.index(p).is_some_and(|i| self.bits[i])
    }

    /// Panics if `p` lies outside the grid.
    pub fn set(&mut self, p: FlatPoint, value: bool) {
        let i = self
            .index(p)
            .unwrap_or_else(|| panic!("flat point {p} outside bit grid"));
        self.bits[i] = value;
    }

    /// Bit at column `c`, row `r`, row 0 being the lowest y.
    pub fn cell(&self, c: usize, r: usize) -> bool {
        self.bits[r * self.width + c]
    }

    pub fn set_cell(&mut self, c: usize, r: usize, value: bool) {
        self.bits[r * self.width + c] = value;
    }

    /// Set points in row-major order, lowest row first.
    pub fn ones(&self) -> impl Iterator<Item = FlatPoint> + '_ {
        self.bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| {
            FlatPoint::new(
                self.origin_x + (i % self.width) as i64,
                self.origin_y + (i / self.width) as i64,
            )
        })
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }
}

/// An edge `from -> to` with `to - from = flat_unit(dir)`, `dir < 5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlatEdge {
    pub from: FlatPoint,
    pub to: FlatPoint,
    pub dir: usize,
}

impl FlatEdge {
    /// The edge leaving `a` in direction `j` (any `j`, mod 10).
    pub fn from_step(a: FlatPoint, j: usize) -> FlatEdge {
        let j = j % 10;
        let b = a + flat_unit(j);
        if j < 5 {
            FlatEdge {
                from: a,
                to: b,
                dir: j,
            }
        } else {
            FlatEdge {
                from: b,
                to: a,
                dir: j - 5,
            }
        }
    }

    fn sort_key(&self) -> (i64, i64, usize) {
        (self.from.y, self.from.x, self.dir)
    }
}

impl fmt::Display for FlatEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -[{}]-> {}", self.from, self.dir, self.to)
    }
}

/// Flat vertices with direction-labelled edges.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FlatGraph {
    pub vertices: BTreeSet<FlatPoint>,
    pub edges: BTreeSet<FlatEdge>,
}

impl FlatGraph {
    pub fn add_vertex(&mut self, p: FlatPoint) {
        self.vertices.insert(p);
    }

    pub fn add_edge(&mut self, e: FlatEdge) {
        self.vertices.insert(e.from);
        self.vertices.insert(e.to);
        self.edges.insert(e);
    }

    /// Neighbours of each vertex with the direction index (0..10) of the step.
    pub fn adjacency(&self) -> BTreeMap<FlatPoint, Vec<(FlatPoint, usize)>> {
        let mut adj: BTreeMap<FlatPoint, Vec<(FlatPoint, usize)>> =
            self.vertices.iter().map(|&v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.entry(e.from).or_default().push((e.to, e.dir));
            adj.entry(e.to).or_default().push((e.from, e.dir + 5));
        }
        adj
    }

    /// Edges sorted by `(from.y, from.x, dir)`.
    pub fn ordered_edges(&self) -> Vec<FlatEdge> {
        let mut v: Vec<FlatEdge> = self.edges.iter().copied().collect();
        v.sort_by_key(FlatEdge::sort_key);
        v
    }
}

/// Flat graph of a document's tile edges.
pub fn tile_graph(doc: &TilingDocument) -> FlatGraph {
    let mut g = FlatGraph::default();
    for t in &doc.tiles {
        add_tile_edges(&mut g, t.kind, t.rotation, project_flat(t.anchor));
    }
    g
}

fn add_tile_edges(g: &mut FlatGraph, kind: TileKind, rotation: u8, anchor: FlatPoint) {
    let shape = Tile::new(kind, rotation, LatticeVertex::ORIGIN).expect("rotation < 5");
    let (d1, d2) = shape.directions();
    let verts = shape.vertices().map(|v| anchor + project_flat(v));
    g.add_edge(FlatEdge::from_step(verts[0], d1));
    g.add_edge(FlatEdge::from_step(verts[1], d2));
    g.add_edge(FlatEdge::from_step(verts[3], d1));
    g.add_edge(FlatEdge::from_step(verts[0], d2));
}

pub fn encode_bits(doc: &TilingDocument) -> Result<BitGrid, CodecError> {
    let mut seen: HashMap<FlatPoint, LatticeVertex> = HashMap::new();
    for v in doc.vertices() {
        let f = project_flat(v);
        if let Some(&other) = seen.get(&f) {
            return Err(CodecError::CollisionDetected {
                flat: f,
                a: other,
                b: v,
            });
        }
        seen.insert(f, v);
    }
    if !seen.contains_key(&FlatPoint::ORIGIN) {
        return Err(CodecError::OriginMissing);
    }
    Ok(BitGrid::from_points(seen.into_keys()).expect("origin present"))
}

/// Every pair of set bits one flat unit step apart.
pub fn infer_edges(grid: &BitGrid) -> FlatGraph {
    let mut g = FlatGraph::default();
    for p in grid.ones() {
        g.add_vertex(p);
        for j in 0..5 {
            let q = p + flat_unit(j);
            if grid.get(q) {
                g.add_edge(FlatEdge {
                    from: p,
                    to: q,
                    dir: j,
                });
            }
        }
    }
    g
}

/// Assigns Z⁴ coordinates by breadth-first summation of unit steps from
/// `root`, which lifts to the origin. Every non-tree edge is checked.
pub fn lift_to_lattice4(
    g: &FlatGraph,
    root: FlatPoint,
) -> Result<BTreeMap<FlatPoint, LatticeVertex>, CodecError> {
    if !g.vertices.contains(&root) {
        return Err(CodecError::MissingRoot(root));
    }
    let adj = g.adjacency();
    let mut lift = BTreeMap::new();
    lift.insert(root, LatticeVertex::ORIGIN);
    let mut queue = VecDeque::from([root]);
    while let Some(p) = queue.pop_front() {
        let here = lift[&p];
        for &(q, j) in &adj[&p] {
            let there = here + unit(j);
            match lift.get(&q) {
                Some(&known) if known != there => {
                    return Err(CodecError::InconsistentLift { from: p, to: q });
                }
                Some(_) => {}
                None => {
                    lift.insert(q, there);
                    queue.push_back(q);
                }
            }
        }
    }
    if let Some(&v) = g.vertices.iter().find(|v| !lift.contains_key(v)) {
        return Err(CodecError::Disconnected(v));
    }
    Ok(lift)
}

/// A tile-shaped quadruple of set bits.
#[derive(Debug, Clone)]
struct Candidate {
    kind: TileKind,
    rotation: u8,
    anchor: FlatPoint,
    verts: [FlatPoint; 4],
    lo: FlatPoint,
    hi: FlatPoint,
}

impl Candidate {
    fn boxes_meet(&self, o: &Candidate) -> bool {
        self.lo.x <= o.hi.x && o.lo.x <= self.hi.x && self.lo.y <= o.hi.y && o.lo.y <= self.hi.y
    }
}

fn cross(o: FlatPoint, a: FlatPoint, b: FlatPoint) -> i64 {
    (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)
}

/// Some edge line of `p` has all of `q` on or beyond it.
fn weakly_separates(p: &[FlatPoint; 4], q: &[FlatPoint; 4]) -> bool {
    (0..4).any(|i| {
        let (a, b) = (p[i], p[(i + 1) % 4]);
        q.iter().all(|&c| cross(a, b, c) <= 0)
    })
}

/// Whether two flat tile images have overlapping interiors.
fn interiors_overlap(a: &Candidate, b: &Candidate) -> bool {
    a.boxes_meet(b) && !(weakly_separates(&a.verts, &b.verts) || weakly_separates(&b.verts, &a.verts))
}

/// A candidate edge with a set bit in its interior is a chord, not an edge.
fn is_chord(grid: &BitGrid, e: &FlatEdge) -> bool {
    let d = e.to - e.from;
    let steps = gcd(d.x.abs(), d.y.abs());
    (1..steps).any(|k| {
        grid.get(FlatPoint::new(
            e.from.x + d.x / steps * k,
            e.from.y + d.y / steps * k,
        ))
    })
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Whether a set bit lies strictly inside the flat quadrilateral `q`.
fn holds_bit(grid: &BitGrid, q: &[FlatPoint; 4]) -> bool {
    let (x0, x1) = (
        q.iter().map(|p| p.x).min().unwrap(),
        q.iter().map(|p| p.x).max().unwrap(),
    );
    let (y0, y1) = (
        q.iter().map(|p| p.y).min().unwrap(),
        q.iter().map(|p| p.y).max().unwrap(),
    );
    (y0..=y1).any(|y| {
        (x0..=x1).any(|x| {
            let c = FlatPoint::new(x, y);
            grid.get(c) && (0..4).all(|i| cross(q[i], q[(i + 1) % 4], c) > 0)
        })
    })
}

/// Tile-shaped quadruples of set bits whose sides are edges and which
/// enclose no other bit, sorted by (anchor y, anchor x, kind, rotation).
fn candidates(grid: &BitGrid, graph: &FlatGraph) -> Vec<Candidate> {
    let mut shapes = Vec::new();
    for kind in TileKind::ALL {
        for r in 0..5u8 {
            let t = Tile::new(kind, r, LatticeVertex::ORIGIN).expect("rotation < 5");
            shapes.push((kind, r, t.vertices().map(project_flat)));
        }
    }
    let mut out = Vec::new();
    // ones() yields the lowest row first
    for p in grid.ones() {
        for &(kind, rotation, offs) in &shapes {
            let verts = offs.map(|o| p + o);
            if !verts.iter().all(|&v| grid.get(v)) || holds_bit(grid, &verts) {
                continue;
            }
            let mut g = FlatGraph::default();
            add_tile_edges(&mut g, kind, rotation, p);
            if !g.edges.is_subset(&graph.edges) {
                continue;
            }
            let lo = FlatPoint::new(
                verts.iter().map(|v| v.x).min().unwrap(),
                verts.iter().map(|v| v.y).min().unwrap(),
            );
            let hi = FlatPoint::new(
                verts.iter().map(|v| v.x).max().unwrap(),
                verts.iter().map(|v| v.y).max().unwrap(),
            );
            out.push(Candidate {
                kind,
                rotation,
                anchor: p,
                verts,
                lo,
                hi,
            });
        }
    }
    out
}

/// Whether two candidates cannot both belong to the tiling. Without a
/// lift only flat overlap counts; with one, the lifted tiles must touch
/// legally in the plane and the same way in the flat lattice.
fn in_conflict(a: &Candidate, b: &Candidate, lift: Option<&BTreeMap<FlatPoint, LatticeVertex>>) -> bool {
    if interiors_overlap(a, b) {
        return true;
    }
    let Some(lift) = lift else {
        return false;
    };
    let ta = Tile::new(a.kind, a.rotation, lift[&a.anchor]).expect("rotation < 5");
    let tb = Tile::new(b.kind, b.rotation, lift[&b.anchor]).expect("rotation < 5");
    if !a.boxes_meet(b) && !Bounds::of(&ta).overlaps(&Bounds::of(&tb)) {
        return false;
    }
    match classify_contact(&ta, &tb) {
        Ok(c) => !c.is_legal() || classify_flat(&ta, &tb) != c,
        Err(_) => true,
    }
}

struct Search<'a> {
    cands: &'a [Candidate],
    conflicts: Vec<Vec<usize>>,
    bits: Vec<FlatPoint>,
    bit_cands: Vec<Vec<usize>>,
    cand_bits: Vec<[usize; 4]>,
    used: Vec<u32>,
    blocked: Vec<u32>,
    forbidden: Vec<bool>,
    selected: Vec<usize>,
    in_set: Vec<bool>,
    solutions: Vec<TilingDocument>,
}

impl Search<'_> {
    fn compatible(&self, c: usize) -> bool {
        self.blocked[c] == 0 && !self.forbidden[c]
    }

    /// A forbidden candidate that nothing selectable could block would stay
    /// addable, so no maximal set is reachable.
    fn doomed(&self, c: usize) -> bool {
        self.blocked[c] == 0 && !self.conflicts[c].iter().any(|&o| self.compatible(o))
    }

    fn select(&mut self, c: usize) {
        self.selected.push(c);
        self.in_set[c] = true;
        for &b in &self.cand_bits[c] {
            self.used[b] += 1;
        }
        for &o in &self.conflicts[c] {
            self.blocked[o] += 1;
        }
    }

    fn unselect(&mut self, c: usize) {
        let last = self.selected.pop();
        debug_assert_eq!(last, Some(c));
        self.in_set[c] = false;
        for &b in &self.cand_bits[c] {
            self.used[b] -= 1;
        }
        for &o in &self.conflicts[c] {
            self.blocked[o] -= 1;
        }
    }

    /// Tries each option in turn, excluding it from later siblings so that
    /// every tile set is visited once. Returns true once the search can stop.
    fn branch(&mut self, options: &[usize], start: usize) -> bool {
        let mut excluded = Vec::new();
        let mut stop = false;
        for &c in options {
            if !self.compatible(c) {
                continue;
            }
            self.select(c);
            stop = self.run(start);
            self.unselect(c);
            if stop {
                break;
            }
            self.forbidden[c] = true;
            excluded.push(c);
            if self.doomed(c) {
                break;
            }
        }
        for c in excluded {
            self.forbidden[c] = false;
        }
        stop
    }

    fn run(&mut self, start: usize) -> bool {
        // every set bit needs a tile
        if let Some(b) = (start..self.bits.len()).find(|&b| self.used[b] == 0) {
            let options = self.bit_cands[b].clone();
            return self.branch(&options, b);
        }
        // the set must also be maximal
        if let Some(c) = (0..self.cands.len()).find(|&c| self.blocked[c] == 0 && !self.in_set[c]) {
            if self.forbidden[c] {
                return false;
            }
            self.select(c);
            let stop = self.run(self.bits.len());
            self.unselect(c);
            if stop {
                return true;
            }
            self.forbidden[c] = true;
            let stop = !self.doomed(c) && self.run(self.bits.len());
            self.forbidden[c] = false;
            return stop;
        }
        if let Some(doc) = self.lift_selection() {
            if !self.solutions.contains(&doc) {
                self.solutions.push(doc);
            }
        }
        self.solutions.len() >= 2
    }

    fn lift_selection(&self) -> Option<TilingDocument> {
        let mut g = FlatGraph::default();
        for &c in &self.selected {
            let cand = &self.cands[c];
            add_tile_edges(&mut g, cand.kind, cand.rotation, cand.anchor);
        }
        let lift = lift_to_lattice4(&g, FlatPoint::ORIGIN).ok()?;
        let doc = TilingDocument::new(
            self.selected
                .iter()
                .map(|&c| {
                    let cand = &self.cands[c];
                    Tile::new(cand.kind, cand.rotation, lift[&cand.anchor]).expect("rotation < 5")
                })
                .collect(),
        )
        .canonical();
        validate_tiling(&doc).is_valid().then_some(doc)
    }
}

/// Rebuilds the unique tiling whose vertex bits are `grid`.
///
/// Edges are the inferred unit steps that pass over no other bit. Candidate
/// tiles are quadruples of set bits in one of the ten flat tile shapes with
/// all four sides among the edges. The chosen set must use every bit, hold
/// no conflicting pair, admit no further candidate, lift consistently to Z⁴
/// and validate. The search runs on past the first solution to detect
/// ambiguity. The result is in canonical tile order.
pub fn decode_bits(grid: &BitGrid) -> Result<TilingDocument, CodecError> {
    let mut solutions = solve(grid)?;
    match solutions.len() {
        0 => Err(CodecError::Unreconstructable(
            "no consistent set of tiles covers the bits".into(),
        )),
        1 => Ok(solutions.pop().expect("one solution")),
        _ => Err(CodecError::Ambiguous),
    }
}

/// Up to two distinct tilings with the given bits.
fn solve(grid: &BitGrid) -> Result<Vec<TilingDocument>, CodecError> {
    if !grid.get(FlatPoint::ORIGIN) {
        return Err(CodecError::OriginMissing);
    }
    let mut graph = infer_edges(grid);
    graph.edges.retain(|e| !is_chord(grid, e));
    let adj = graph.adjacency();
    if let Some((p, _)) = adj.iter().find(|(_, n)| n.is_empty()) {
        return Err(CodecError::Unreconstructable(format!(
            "vertex {p} has no possible edges"
        )));
    }
    // lifting every bit at once lets conflicts be judged in the plane; when
    // the bits admit no global lift, flat overlap alone has to do
    let lift = lift_to_lattice4(&graph, FlatPoint::ORIGIN).ok();

    let cands = candidates(grid, &graph);
    let bits: Vec<FlatPoint> = grid.ones().collect();
    let bit_index: HashMap<FlatPoint, usize> = bits.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut bit_cands = vec![Vec::new(); bits.len()];
    let mut cand_bits = Vec::with_capacity(cands.len());
    for (ci, c) in cands.iter().enumerate() {
        let idx = c.verts.map(|v| bit_index[&v]);
        for &b in &idx {
            bit_cands[b].push(ci);
        }
        cand_bits.push(idx);
    }
    if let Some(b) = bit_cands.iter().position(Vec::is_empty) {
        return Err(CodecError::Unreconstructable(format!(
            "no tile fits at vertex {}",
            bits[b]
        )));
    }
    let mut conflicts = vec![Vec::new(); cands.len()];
    for i in 0..cands.len() {
        for j in i + 1..cands.len() {
            if in_conflict(&cands[i], &cands[j], lift.as_ref()) {
                conflicts[i].push(j);
                conflicts[j].push(i);
            }
        }
    }

    let n = cands.len();
    let mut search = Search {
        cands: &cands,
        conflicts,
        used: vec![0; bits.len()],
        bits,
        bit_cands,
        cand_bits,
        blocked: vec![0; n],
        forbidden: vec![false; n],
        selected: Vec::new(),
        in_set: vec![false; n],
        solutions: Vec::new(),
    };
    search.run(0);
    Ok(search.solutions)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(a: i64, b: i64, c: i64, d: i64) -> LatticeVertex {
        LatticeVertex::new(a, b, c, d)
    }

    fn fp(x: i64, y: i64) -> FlatPoint {
        FlatPoint::new(x, y)
    }

    fn single(kind: TileKind) -> TilingDocument {
        TilingDocument::new(vec![Tile::new(kind, 0, LatticeVertex::ORIGIN).unwrap()])
    }

    fn pair() -> TilingDocument {
        TilingDocument::new(vec![
            Tile::new(TileKind::Narrow, 0, LatticeVertex::ORIGIN).unwrap(),
            Tile::new(TileKind::Wide, 0, v(1, 1, 1, 0)).unwrap(),
        ])
    }

    #[test]
    fn encode_examples() {
        let g = encode_bits(&single(TileKind::Narrow)).unwrap();
        let ones: BTreeSet<_> = g.ones().collect();
        assert_eq!(ones, BTreeSet::from([fp(0, 0), fp(3, 1), fp(4, 3), fp(1, 2)]));
        assert_eq!((g.width(), g.height()), (5, 4));
        let g = encode_bits(&single(TileKind::Wide)).unwrap();
        let ones: BTreeSet<_> = g.ones().collect();
        assert_eq!(ones, BTreeSet::from([fp(0, 0), fp(4, 0), fp(5, 2), fp(1, 2)]));
        assert_eq!(
            encode_bits(&TilingDocument::default()),
            Err(CodecError::OriginMissing)
        );
        let shifted = TilingDocument::new(vec![Tile::new(TileKind::Wide, 0, v(4, 0, 0, 0)).unwrap()]);
        assert_eq!(encode_bits(&shifted), Err(CodecError::OriginMissing));
    }

    #[test]
    fn collision_is_reported() {
        // (2,-1,0,0) has flat image (0,0)
        let doc = TilingDocument::new(vec![
            Tile::new(TileKind::Wide, 0, LatticeVertex::ORIGIN).unwrap(),
            Tile::new(TileKind::Wide, 0, v(2, -1, 0, 0)).unwrap(),
        ]);
        assert!(matches!(
            encode_bits(&doc),
            Err(CodecError::CollisionDetected { .. })
        ));
    }

    #[test]
    fn infer_edges_examples() {
        let g = infer_edges(&encode_bits(&single(TileKind::Narrow)).unwrap());
        let mut dirs: Vec<_> = g.edges.iter().map(|e| e.dir).collect();
        dirs.sort();
        assert_eq!(dirs, vec![1, 1, 2, 2]);

        let mut one = BitGrid::new(0, 0, 1, 1);
        one.set(FlatPoint::ORIGIN, true);
        assert!(infer_edges(&one).edges.is_empty());

        assert_eq!(infer_edges(&encode_bits(&pair()).unwrap()).edges.len(), 7);
    }

    #[test]
    fn lift_examples() {
        let mut g = FlatGraph::default();
        g.add_vertex(FlatPoint::ORIGIN);
        let l = lift_to_lattice4(&g, FlatPoint::ORIGIN).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l[&FlatPoint::ORIGIN], LatticeVertex::ORIGIN);

        g.add_edge(FlatEdge::from_step(FlatPoint::ORIGIN, 1));
        let l = lift_to_lattice4(&g, FlatPoint::ORIGIN).unwrap();
        assert_eq!(l[&fp(3, 1)], v(1, 1, 1, 0));

        let mut sq = FlatGraph::default();
        let a = FlatPoint::ORIGIN;
        let b = a + flat_unit(1);
        let c = b + flat_unit(2);
        let d = a + flat_unit(2);
        sq.add_edge(FlatEdge::from_step(a, 1));
        sq.add_edge(FlatEdge::from_step(b, 2));
        sq.add_edge(FlatEdge::from_step(c, 6));
        sq.add_edge(FlatEdge::from_step(d, 7));
        let l = lift_to_lattice4(&sq, a).unwrap();
        assert_eq!(l[&c], v(0, 2, 1, 1));
    }

    #[test]
    fn lift_detects_inconsistency() {
        // steps 0,3,3,7,7 close up in the flat lattice but sum to (8,-4,0,0)
        let mut g = FlatGraph::default();
        let mut p = FlatPoint::ORIGIN;
        for j in [0, 3, 3, 7, 7] {
            g.add_edge(FlatEdge::from_step(p, j));
            p = p + flat_unit(j);
        }
        let a = FlatPoint::ORIGIN;
        assert_eq!(p, a);
        assert!(matches!(
            lift_to_lattice4(&g, a),
            Err(CodecError::InconsistentLift { .. })
        ));
        assert_eq!(
            lift_to_lattice4(&g, fp(100, 100)),
            Err(CodecError::MissingRoot(fp(100, 100)))
        );
    }

    #[test]
    fn decode_round_trips() {
        for doc in [single(TileKind::Narrow), single(TileKind::Wide), pair()] {
            let grid = encode_bits(&doc).unwrap();
            assert_eq!(decode_bits(&grid), Ok(doc.canonical()));
        }
    }

    #[test]
    fn decode_rejects_bad_grids() {
        let g = BitGrid::new(0, 0, 3, 3);
        assert_eq!(decode_bits(&g), Err(CodecError::OriginMissing));
        let mut g = BitGrid::new(0, 0, 2, 2);
        g.set(FlatPoint::ORIGIN, true);
        g.set(fp(1, 1), true);
        assert!(matches!(decode_bits(&g), Err(CodecError::Unreconstructable(_))));
        // a lone edge is not a tile
        let mut g = BitGrid::new(0, 0, 5, 1);
        g.set(FlatPoint::ORIGIN, true);
        g.set(fp(4, 0), true);
        assert!(matches!(decode_bits(&g), Err(CodecError::Unreconstructable(_))));
    }
}
