//! Exact tile-contact classification.
//!
//! Two independent routes decide how a pair of tiles touch:
//!
//! * [`classify_contact_canonical`] handles a narrow tile at rotation 0 and
//!   a wide tile at rotation 0 displaced by `d`. The set of displacements
//!   with contact is a hexagon; six signs of `a + b√5` locate `d` relative
//!   to its sides.
//! * [`classify_contact`] handles any pair by intersecting the two convex
//!   quadrilaterals with orientation predicates evaluated in Z[√5].
//!
//! Orientation of three plane points is the sign of a cross product. With
//! `x = A/4` and `y = (sin36°/2)·B` for `A, B ∈ Z[√5]`, the cross product is
//! `sin36°/8 · (A_u·B_w − B_u·A_w)`, so only the integer-ring part matters.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::lattice::{plane_f64, LatticeVertex};
use crate::projections::{project_flat, FlatPoint};
use crate::quad::{sign_quad, Overflow, QuadVal};
use crate::tiles::{Tile, TilingDocument};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ContactClass {
    NoContact,
    VertexVertex,
    VertexOrPartialEdge,
    PerfectEdge,
    AreaOverlap,
}

impl ContactClass {
    pub const ALL: [ContactClass; 5] = [
        ContactClass::PerfectEdge,
        ContactClass::NoContact,
        ContactClass::VertexVertex,
        ContactClass::VertexOrPartialEdge,
        ContactClass::AreaOverlap,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ContactClass::PerfectEdge => "perfect edge contact",
            ContactClass::NoContact => "no contact",
            ContactClass::VertexVertex => "vertex-vertex contact",
            ContactClass::VertexOrPartialEdge => "vertex-edge or partial edge contact",
            ContactClass::AreaOverlap => "nonzero-area overlap",
        }
    }

    /// Whether two tiles of an edge-to-edge tiling may touch this way.
    pub fn is_legal(self) -> bool {
        matches!(
            self,
            ContactClass::NoContact | ContactClass::VertexVertex | ContactClass::PerfectEdge
        )
    }
}

impl fmt::Display for ContactClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown contact class {0:?}")]
pub struct UnknownClass(pub String);

impl FromStr for ContactClass {
    type Err = UnknownClass;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ContactClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| UnknownClass(s.to_string()))
    }
}

/// Fixed parameters of the hexagon test for the canonical narrow/wide pair.
#[derive(Debug, Clone, Copy)]
pub struct HexagonModel;

impl HexagonModel {
    /// `OFFSETS[i][0]` and `OFFSETS[i][1]` are the points on the two parallel
    /// sides `i` of the hexagon, as `(a, b)` pairs; sign factor −1 then +1.
    pub const OFFSETS: [[(i128, i128); 2]; 3] = [[(-1, -1), (3, 1)], [(-4, 0), (8, 0)], [(-8, 0), (4, 4)]];

    /// Displacements at which the two tiles share a whole edge.
    pub const PERFECT: [LatticeVertex; 2] = [LatticeVertex::new(1, 1, 1, 0), LatticeVertex::new(-4, 0, 0, 0)];

    /// The three projections of `d` onto the hexagon's side normals.
    pub fn p_vectors(d: LatticeVertex) -> [(i128, i128); 3] {
        let [x1, x2, x3, x4] = d.to_array().map(|c| c as i128);
        [
            (2 * x3 + x4, x4),
            (-x1 + x3 + 3 * x4, -x2 + x3 + x4),
            (-x1 - 5 * x2 - 2 * x3 + 4 * x4, -x1 - x2 + 2 * x3),
        ]
    }

    /// The six side signs; all +1 strictly inside the hexagon.
    pub fn signs(d: LatticeVertex) -> Result<[i32; 6], Overflow> {
        let p = Self::p_vectors(d);
        let mut out = [0i32; 6];
        for i in 0..3 {
            for (k, j) in [-1i32, 1].into_iter().enumerate() {
                let (ba, bb) = Self::OFFSETS[i][k];
                let s = sign_quad(p[i].0 - ba, p[i].1 - bb)?;
                out[2 * i + k] = -j * s;
            }
        }
        Ok(out)
    }
}

/// Contact between a narrow tile at rotation 0 anchored at the origin and a
/// wide tile at rotation 0 anchored at `d`.
pub fn classify_contact_canonical(d: LatticeVertex) -> Result<ContactClass, Overflow> {
    if HexagonModel::PERFECT.contains(&d) {
        return Ok(ContactClass::PerfectEdge);
    }
    let mut signs = HexagonModel::signs(d)?;
    signs.sort_unstable();
    Ok(if signs[0] == -1 {
        ContactClass::NoContact
    } else if signs[1] == 0 {
        ContactClass::VertexVertex
    } else if signs[0] == 0 {
        ContactClass::VertexOrPartialEdge
    } else {
        ContactClass::AreaOverlap
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ContactError {
    #[error("the two tiles are identical")]
    IdenticalTiles,
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Sign of the orientation of `(a, b, c)`: +1 counterclockwise.
pub fn orient(a: LatticeVertex, b: LatticeVertex, c: LatticeVertex) -> Result<i32, Overflow> {
    let u = b - a;
    let w = c - a;
    let lhs = u.x_quad().checked_mul(w.y_quad())?;
    let rhs = u.y_quad().checked_mul(w.x_quad())?;
    let QuadVal { a, b } = lhs.checked_sub(rhs)?;
    sign_quad(a, b)
}

/// Points with an exact orientation predicate.
trait Oriented: Copy + Ord {
    fn orient(a: Self, b: Self, c: Self) -> Result<i32, Overflow>;
}

impl Oriented for LatticeVertex {
    fn orient(a: Self, b: Self, c: Self) -> Result<i32, Overflow> {
        orient(a, b, c)
    }
}

impl Oriented for FlatPoint {
    fn orient(a: Self, b: Self, c: Self) -> Result<i32, Overflow> {
        let cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        Ok(cross.signum() as i32)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Separation {
    None,
    Weak,
    Strict,
}

/// Best separation of `q` by an edge line of `p` (counterclockwise).
fn separation<P: Oriented>(p: &[P; 4], q: &[P; 4]) -> Result<Separation, Overflow> {
    let mut best = Separation::None;
    for i in 0..4 {
        let (a, b) = (p[i], p[(i + 1) % 4]);
        let mut all_neg = true;
        let mut all_nonpos = true;
        for &c in q {
            let s = P::orient(a, b, c)?;
            all_neg &= s < 0;
            all_nonpos &= s <= 0;
        }
        if all_neg {
            return Ok(Separation::Strict);
        }
        if all_nonpos {
            best = Separation::Weak;
        }
    }
    Ok(best)
}

fn in_closed<P: Oriented>(poly: &[P; 4], c: P) -> Result<bool, Overflow> {
    for i in 0..4 {
        if P::orient(poly[i], poly[(i + 1) % 4], c)? < 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

fn adjacent<P: Oriented>(poly: &[P; 4], u: P, v: P) -> bool {
    (0..4).any(|i| {
        let (a, b) = (poly[i], poly[(i + 1) % 4]);
        (a == u && b == v) || (a == v && b == u)
    })
}

fn classify_quads<P: Oriented>(p: &[P; 4], q: &[P; 4]) -> Result<ContactClass, Overflow> {
    let s1 = separation(p, q)?;
    let s2 = separation(q, p)?;
    match s1.max(s2) {
        Separation::Strict => return Ok(ContactClass::NoContact),
        Separation::None => return Ok(ContactClass::AreaOverlap),
        Separation::Weak => {}
    }

    // Interiors are disjoint and closures meet: the intersection is a point
    // or a segment whose ends are vertices of one tile or the other.
    let mut touching = BTreeSet::new();
    for &c in p {
        if in_closed(q, c)? {
            touching.insert(c);
        }
    }
    for &c in q {
        if in_closed(p, c)? {
            touching.insert(c);
        }
    }
    let pts: Vec<P> = touching.into_iter().collect();
    let shared = |c: &P| p.contains(c) && q.contains(c);
    Ok(match pts.as_slice() {
        [c] if shared(c) => ContactClass::VertexVertex,
        [u, v] if shared(u) && shared(v) && adjacent(p, *u, *v) && adjacent(q, *u, *v) => {
            ContactClass::PerfectEdge
        }
        [] => unreachable!("weakly separated tiles without a common boundary point"),
        _ => ContactClass::VertexOrPartialEdge,
    })
}

/// Exact contact class of two placed tiles.
pub fn classify_contact(t1: &Tile, t2: &Tile) -> Result<ContactClass, ContactError> {
    if t1 == t2 {
        return Err(ContactError::IdenticalTiles);
    }
    Ok(classify_quads(&t1.vertices(), &t2.vertices())?)
}

/// Contact class of two tiles' images in the flat lattice.
pub fn classify_flat(t1: &Tile, t2: &Tile) -> ContactClass {
    let p = t1.vertices().map(project_flat);
    let q = t2.vertices().map(project_flat);
    classify_quads(&p, &q).expect("flat orientation cannot overflow")
}

/// One defect found by [`validate_tiling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Issue {
    /// A tile vertex violates the lattice congruences.
    Constraint { tile: usize, vertex: LatticeVertex },
    /// Two entries describe the same tile.
    Duplicate { a: usize, b: usize },
    /// Two tiles touch in a way an edge-to-edge tiling forbids.
    Contact { a: usize, b: usize, class: ContactClass },
    /// Coordinates too large for exact evaluation.
    Arithmetic { a: usize, b: usize },
}

impl fmt::Display for Issue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Issue::Constraint { tile, vertex } => {
                write!(f, "tile {tile}: vertex {vertex} violates the lattice congruences")
            }
            Issue::Duplicate { a, b } => write!(f, "tiles {a} and {b}: identical"),
            Issue::Contact { a, b, class } => write!(f, "tiles {a} and {b}: {class}"),
            Issue::Arithmetic { a, b } => {
                write!(f, "tiles {a} and {b}: coordinates too large to classify")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub tile_count: usize,
    pub issues: Vec<Issue>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.issues.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for issue in &self.issues {
            writeln!(f, "{issue}")?;
        }
        if self.is_valid() {
            write!(f, "VALID ({} tiles)", self.tile_count)
        } else {
            write!(
                f,
                "INVALID ({} tiles, {} issues)",
                self.tile_count,
                self.issues.len()
            )
        }
    }
}

/// Axis-aligned plane bounds of a tile, widened by a margin that dominates
/// any float rounding in [`plane_f64`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Bounds {
    lo: (f64, f64),
    hi: (f64, f64),
}

impl Bounds {
    const MARGIN: f64 = 1e-6;

    pub(crate) fn of(t: &Tile) -> Bounds {
        let mut lo = (f64::INFINITY, f64::INFINITY);
        let mut hi = (f64::NEG_INFINITY, f64::NEG_INFINITY);
        for v in t.vertices() {
            let (x, y) = plane_f64(v);
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        Bounds {
            lo: (lo.0 - Self::MARGIN, lo.1 - Self::MARGIN),
            hi: (hi.0 + Self::MARGIN, hi.1 + Self::MARGIN),
        }
    }

    pub(crate) fn overlaps(&self, o: &Bounds) -> bool {
        self.lo.0 <= o.hi.0 && o.lo.0 <= self.hi.0 && self.lo.1 <= o.hi.1 && o.lo.1 <= self.hi.1
    }
}

/// Candidate pairs `(i, j)`, `i < j`, whose plane bounds overlap, in
/// lexicographic order.
pub(crate) fn nearby_pairs(tiles: &[Tile]) -> Vec<(usize, usize)> {
    let bounds: Vec<Bounds> = tiles.iter().map(Bounds::of).collect();
    let mut order: Vec<usize> = (0..tiles.len()).collect();
    order.sort_by(|&a, &b| bounds[a].lo.0.total_cmp(&bounds[b].lo.0));
    let mut pairs = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if bounds[j].lo.0 > bounds[i].hi.0 {
                break;
            }
            if bounds[i].overlaps(&bounds[j]) {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Checks every vertex congruence and every nearby tile pair.
pub fn validate_tiling(doc: &TilingDocument) -> ValidationReport {
    let mut issues = Vec::new();
    for (i, t) in doc.tiles.iter().enumerate() {
        for v in t.vertices() {
            if !v.satisfies_constraints() {
                issues.push(Issue::Constraint { tile: i, vertex: v });
            }
        }
    }
    for (a, b) in nearby_pairs(&doc.tiles) {
        match classify_contact(&doc.tiles[a], &doc.tiles[b]) {
            Ok(class) if class.is_legal() => {}
            Ok(class) => issues.push(Issue::Contact { a, b, class }),
            Err(ContactError::IdenticalTiles) => issues.push(Issue::Duplicate { a, b }),
            Err(ContactError::Overflow(_)) => issues.push(Issue::Arithmetic { a, b }),
        }
    }
    ValidationReport {
        tile_count: doc.len(),
        issues,
    }
}
