//! Shared helpers for the integration tests: seeded randomness and a
//! floating-point contact oracle that shares no code with the exact
//! classifiers.

#![allow(dead_code)]

use penrose_core::lattice::{plane_f64, unit};
use penrose_core::{ContactClass, LatticeVertex, Tile, TileKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const TOL: f64 = 1e-9;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// End point of a random walk of `len` unit steps from the origin.
pub fn random_walk<R: Rng>(rng: &mut R, len: usize) -> LatticeVertex {
    (0..len).fold(LatticeVertex::ORIGIN, |v, _| v + unit(rng.gen_range(0..10)))
}

/// A random vertex satisfying the congruences, within a few unit steps of
/// the origin.
pub fn random_vertex<R: Rng>(rng: &mut R) -> LatticeVertex {
    let len = rng.gen_range(0..40);
    random_walk(rng, len)
}

pub fn random_tile<R: Rng>(rng: &mut R) -> Tile {
    let kind = if rng.gen_bool(0.5) {
        TileKind::Narrow
    } else {
        TileKind::Wide
    };
    Tile::new(kind, rng.gen_range(0..5), random_vertex(rng)).unwrap()
}

pub type Pt = (f64, f64);

pub fn polygon(t: &Tile) -> [Pt; 4] {
    t.vertices().map(plane_f64)
}

fn sub(a: Pt, b: Pt) -> Pt {
    (a.0 - b.0, a.1 - b.1)
}

fn cross(a: Pt, b: Pt) -> f64 {
    a.0 * b.1 - a.1 * b.0
}

fn dot(a: Pt, b: Pt) -> f64 {
    a.0 * b.0 + a.1 * b.1
}

fn dist(a: Pt, b: Pt) -> f64 {
    let d = sub(a, b);
    dot(d, d).sqrt()
}

pub fn area(poly: &[Pt]) -> f64 {
    let n = poly.len();
    (0..n).map(|i| cross(poly[i], poly[(i + 1) % n])).sum::<f64>() / 2.0
}

/// Sutherland–Hodgman clip of `subject` by the convex counterclockwise
/// polygon `clip`.
pub fn clip(subject: &[Pt], clip: &[Pt]) -> Vec<Pt> {
    let mut out = subject.to_vec();
    for i in 0..clip.len() {
        let (a, b) = (clip[i], clip[(i + 1) % clip.len()]);
        let inside = |p: Pt| cross(sub(b, a), sub(p, a)) >= 0.0;
        let input = std::mem::take(&mut out);
        for j in 0..input.len() {
            let (p, q) = (input[j], input[(j + 1) % input.len()]);
            let (pin, qin) = (inside(p), inside(q));
            if pin {
                out.push(p);
            }
            if pin != qin {
                let dp = cross(sub(b, a), sub(p, a));
                let dq = cross(sub(b, a), sub(q, a));
                let s = dp / (dp - dq);
                out.push((p.0 + s * (q.0 - p.0), p.1 + s * (q.1 - p.1)));
            }
        }
        if out.is_empty() {
            break;
        }
    }
    out
}

pub fn point_segment(p: Pt, a: Pt, b: Pt) -> f64 {
    let ab = sub(b, a);
    let t = (dot(sub(p, a), ab) / dot(ab, ab)).clamp(0.0, 1.0);
    dist(p, (a.0 + t * ab.0, a.1 + t * ab.1))
}

fn segments_cross(a: Pt, b: Pt, c: Pt, d: Pt) -> bool {
    let d1 = cross(sub(b, a), sub(c, a));
    let d2 = cross(sub(b, a), sub(d, a));
    let d3 = cross(sub(d, c), sub(a, c));
    let d4 = cross(sub(d, c), sub(b, c));
    d1 * d2 < 0.0 && d3 * d4 < 0.0
}

fn segment_distance(a: Pt, b: Pt, c: Pt, d: Pt) -> f64 {
    if segments_cross(a, b, c, d) {
        return 0.0;
    }
    point_segment(a, c, d)
        .min(point_segment(b, c, d))
        .min(point_segment(c, a, b))
        .min(point_segment(d, a, b))
}

fn boundary_distance(p: Pt, poly: &[Pt; 4]) -> f64 {
    (0..4)
        .map(|i| point_segment(p, poly[i], poly[(i + 1) % 4]))
        .fold(f64::INFINITY, f64::min)
}

/// Contact class of two convex quadrilaterals, decided in floating point
/// with boundary tolerance [`TOL`].
pub fn oracle_contact(p: &[Pt; 4], q: &[Pt; 4]) -> ContactClass {
    let inter = clip(p, q);
    if inter.len() >= 3 && area(&inter) > TOL {
        return ContactClass::AreaOverlap;
    }
    let gap = (0..4)
        .flat_map(|i| (0..4).map(move |j| (i, j)))
        .map(|(i, j)| segment_distance(p[i], p[(i + 1) % 4], q[j], q[(j + 1) % 4]))
        .fold(f64::INFINITY, f64::min);
    if gap > TOL {
        return ContactClass::NoContact;
    }

    // touching points, clustered
    let mut pts: Vec<Pt> = Vec::new();
    let candidates = p
        .iter()
        .filter(|&&v| boundary_distance(v, q) <= TOL)
        .chain(q.iter().filter(|&&v| boundary_distance(v, p) <= TOL));
    for &c in candidates {
        if !pts.iter().any(|&o| dist(o, c) <= TOL) {
            pts.push(c);
        }
    }
    let vertex_index = |poly: &[Pt; 4], c: Pt| poly.iter().position(|&v| dist(v, c) <= TOL);
    let adjacent = |i: usize, j: usize| (i + 1) % 4 == j || (j + 1) % 4 == i;
    match pts.as_slice() {
        [c] if vertex_index(p, *c).is_some() && vertex_index(q, *c).is_some() => ContactClass::VertexVertex,
        [u, v] => match (
            vertex_index(p, *u),
            vertex_index(p, *v),
            vertex_index(q, *u),
            vertex_index(q, *v),
        ) {
            (Some(a), Some(b), Some(c), Some(d)) if adjacent(a, b) && adjacent(c, d) => {
                ContactClass::PerfectEdge
            }
            _ => ContactClass::VertexOrPartialEdge,
        },
        _ => ContactClass::VertexOrPartialEdge,
    }
}

pub fn oracle_tiles(a: &Tile, b: &Tile) -> ContactClass {
    oracle_contact(&polygon(a), &polygon(b))
}
