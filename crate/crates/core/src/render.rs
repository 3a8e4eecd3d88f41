//! SVG, OBJ and CSV output.
//!
//! SVG drawings are emitted in mathematical coordinates inside a
//! `scale(1,-1)` group, so polygon `points` attributes carry the plane
//! coordinates unchanged. The isometric views look along `(1, 1, 2)` with
//! screen axes `(1, −1, 0)/√2` and `(−1, −1, 1)/√3`; the μ-flattened view
//! looks along `(√5, −1, 0)`.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::str::FromStr;

use crate::contact::{classify_contact_canonical, ContactClass};
use crate::lattice::{plane_f64, unit, LatticeVertex};
use crate::projections::{flatten_mu, project_12, project_flat, project_mu};
use crate::tiles::TilingDocument;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown mode {0:?}")]
pub struct UnknownMode(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderMode {
    Plane,
    Flat,
    OneTwoIso,
    MuIso,
    MuFlattened,
}

impl RenderMode {
    pub const ALL: [RenderMode; 5] = [
        RenderMode::Plane,
        RenderMode::Flat,
        RenderMode::OneTwoIso,
        RenderMode::MuIso,
        RenderMode::MuFlattened,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RenderMode::Plane => "plane",
            RenderMode::Flat => "flat",
            RenderMode::OneTwoIso => "one-two-iso",
            RenderMode::MuIso => "mu-iso",
            RenderMode::MuFlattened => "mu-flattened",
        }
    }

    /// 2D drawing position of a vertex.
    pub fn point(self, v: LatticeVertex) -> (f64, f64) {
        match self {
            RenderMode::Plane => plane_f64(v),
            RenderMode::Flat => {
                let f = project_flat(v);
                (f.x as f64, f.y as f64)
            }
            RenderMode::OneTwoIso => iso(project_12(v).map(|c| c as f64)),
            RenderMode::MuIso => iso(project_mu(v).to_f64()),
            RenderMode::MuFlattened => flatten_mu(&project_mu(v)),
        }
    }
}

impl fmt::Display for RenderMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RenderMode {
    type Err = UnknownMode;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        RenderMode::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| UnknownMode(s.to_string()))
    }
}

fn iso(p: [f64; 3]) -> (f64, f64) {
    let u = (p[0] - p[1]) / 2f64.sqrt();
    let w = (-p[0] - p[1] + p[2]) / 3f64.sqrt();
    (u, w)
}

struct Svg {
    body: String,
    lo: (f64, f64),
    hi: (f64, f64),
}

impl Svg {
    fn new() -> Svg {
        Svg {
            body: String::new(),
            lo: (f64::INFINITY, f64::INFINITY),
            hi: (f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn include(&mut self, (x, y): (f64, f64), pad: f64) {
        self.lo = (self.lo.0.min(x - pad), self.lo.1.min(y - pad));
        self.hi = (self.hi.0.max(x + pad), self.hi.1.max(y + pad));
    }

    fn finish(self, stroke: f64, window: Option<((f64, f64), (f64, f64))>) -> String {
        let (lo, hi) = match window {
            Some(w) => w,
            None if self.lo.0.is_finite() => (self.lo, self.hi),
            None => ((-1.0, -1.0), (1.0, 1.0)),
        };
        let margin = 0.05 * (hi.0 - lo.0).max(hi.1 - lo.1).max(1.0);
        let (x0, y0) = (lo.0 - margin, -hi.1 - margin);
        let (w, h) = (hi.0 - lo.0 + 2.0 * margin, hi.1 - lo.1 + 2.0 * margin);
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\">\n\
             <g transform=\"scale(1,-1)\" stroke=\"black\" stroke-width=\"{stroke}\">\n\
             {}</g>\n</svg>\n",
            self.body
        )
    }
}

/// One `<polygon>` per tile.
pub fn render_svg(doc: &TilingDocument, mode: RenderMode) -> String {
    let mut svg = Svg::new();
    let mut scale: f64 = 0.0;
    for t in &doc.tiles {
        let pts = t.vertices().map(|v| mode.point(v));
        for p in pts {
            svg.include(p, 0.0);
        }
        let side = ((pts[1].0 - pts[0].0).powi(2) + (pts[1].1 - pts[0].1).powi(2)).sqrt();
        scale = scale.max(side);
        let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let fill = match t.kind {
            crate::tiles::TileKind::Narrow => "#f4c542",
            crate::tiles::TileKind::Wide => "#4a7fc1",
        };
        writeln!(
            svg.body,
            "<polygon class=\"{}\" fill=\"{fill}\" points=\"{}\"/>",
            t.kind.letter(),
            coords.join(" ")
        )
        .expect("writing to a String");
    }
    let stroke = if scale > 0.0 { scale * 0.02 } else { 0.02 };
    svg.finish(stroke, None)
}

/// Polygons of a rendered SVG, as read back from `points` attributes.
pub fn svg_polygons(svg: &str) -> Vec<Vec<(f64, f64)>> {
    svg.lines()
        .filter(|l| l.starts_with("<polygon"))
        .filter_map(|l| {
            let start = l.find("points=\"")? + 8;
            let end = start + l[start..].find('"')?;
            l[start..end]
                .split(' ')
                .map(|pair| {
                    let (x, y) = pair.split_once(',')?;
                    Some((x.parse().ok()?, y.parse().ok()?))
                })
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjMode {
    OneTwo,
    Mu,
}

/// One quad face per tile over shared, deduplicated vertices.
pub fn render_obj(doc: &TilingDocument, mode: ObjMode) -> String {
    let mut index: BTreeMap<LatticeVertex, usize> = BTreeMap::new();
    let mut out = String::from("# penrose tiling\n");
    for v in doc.vertices() {
        let n = index.len() + 1;
        index.insert(v, n);
        match mode {
            ObjMode::OneTwo => {
                let [x, y, z] = project_12(v);
                writeln!(out, "v {x} {y} {z}")
            }
            ObjMode::Mu => {
                let [x, y, z] = project_mu(v).to_f64();
                writeln!(out, "v {x} {y} {z}")
            }
        }
        .expect("writing to a String");
    }
    for t in &doc.tiles {
        let ids = t.vertices().map(|v| index[&v]);
        writeln!(out, "f {} {} {} {}", ids[0], ids[1], ids[2], ids[3]).expect("writing to a String");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProjectMode {
    Mu,
    OneTwo,
    Flat,
}

impl FromStr for ProjectMode {
    type Err = UnknownMode;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mu" => Ok(ProjectMode::Mu),
            "one-two" => Ok(ProjectMode::OneTwo),
            "flat" => Ok(ProjectMode::Flat),
            _ => Err(UnknownMode(s.to_string())),
        }
    }
}

/// Distinct vertices with their exact projected coordinates followed by
/// float renderings.
pub fn project_csv(doc: &TilingDocument, mode: ProjectMode) -> String {
    let mut out = String::from(match mode {
        ProjectMode::Mu => "x1,x2,x3,x4,px,py,pz_sin36,pz_sin72,fx,fy,fz\n",
        ProjectMode::OneTwo => "x1,x2,x3,x4,px,py,pz,fx,fy,fz\n",
        ProjectMode::Flat => "x1,x2,x3,x4,X,Y,fx,fy\n",
    });
    for v in doc.vertices() {
        let head = format!("{},{},{},{}", v.x1, v.x2, v.x3, v.x4);
        match mode {
            ProjectMode::Mu => {
                let p = project_mu(v);
                let [fx, fy, fz] = p.to_f64();
                writeln!(out, "{head},{},{},{},{},{fx},{fy},{fz}", p.x1, p.x2, p.z.0, p.z.1)
            }
            ProjectMode::OneTwo => {
                let [x, y, z] = project_12(v);
                writeln!(out, "{head},{x},{y},{z},{x}.0,{y}.0,{z}.0")
            }
            ProjectMode::Flat => {
                let f = project_flat(v);
                let (fx, fy) = f.to_f64();
                writeln!(out, "{head},{},{},{fx},{fy}", f.x, f.y)
            }
        }
        .expect("writing to a String");
    }
    out
}

/// Displacement ranges of the diagnostic contact figure.
pub const APPENDIX_RANGES: [(i64, i64); 4] = [(-5, 5), (-3, 3), (-2, 2), (-2, 2)];

/// Canonical contact class at every displacement in [`APPENDIX_RANGES`].
pub fn appendix_grid() -> Vec<(LatticeVertex, ContactClass)> {
    let [r1, r2, r3, r4] = APPENDIX_RANGES;
    let mut out = Vec::new();
    for x1 in r1.0..=r1.1 {
        for x2 in r2.0..=r2.1 {
            for x3 in r3.0..=r3.1 {
                for x4 in r4.0..=r4.1 {
                    let d = LatticeVertex::new(x1, x2, x3, x4);
                    let class = classify_contact_canonical(d).expect("small displacements");
                    out.push((d, class));
                }
            }
        }
    }
    out
}

/// Marker of a class: (filled, radius).
pub fn appendix_marker(class: ContactClass) -> (bool, f64) {
    match class {
        ContactClass::PerfectEdge => (true, 0.1),
        ContactClass::NoContact => (true, 0.025),
        ContactClass::VertexVertex => (true, 0.05),
        ContactClass::VertexOrPartialEdge => (false, 0.05),
        ContactClass::AreaOverlap => (false, 0.025),
    }
}

/// The contact diagram: one marker per displacement of the wide tile's
/// anchor, plus outlines of the narrow tile at the origin and of a wide
/// tile for scale. The view window is `[-2, 2]²`; markers outside it are
/// still emitted so the class counts cover the whole grid.
pub fn appendix_figure_svg() -> (String, BTreeMap<ContactClass, usize>) {
    let mut svg = Svg::new();
    let mut counts = BTreeMap::new();
    for (d, class) in appendix_grid() {
        *counts.entry(class).or_insert(0) += 1;
        let (x, y) = plane_f64(d);
        let (filled, r) = appendix_marker(class);
        let paint = if filled {
            "fill=\"black\" stroke=\"none\"".to_string()
        } else {
            format!("fill=\"none\" stroke-width=\"{}\"", r / 4.0)
        };
        writeln!(
            svg.body,
            "<circle data-class=\"{}\" cx=\"{x}\" cy=\"{y}\" r=\"{r}\" {paint}/>",
            class.as_str()
        )
        .expect("writing to a String");
    }
    let outline = |pts: &[(f64, f64)]| -> String {
        let s: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        format!("<polygon fill=\"none\" points=\"{}\"/>\n", s.join(" "))
    };
    let v1 = plane_f64(unit(1));
    let v2 = plane_f64(unit(2));
    svg.body
        .push_str(&outline(&[(0.0, 0.0), v1, (v1.0 + v2.0, v1.1 + v2.1), v2]));
    let off = (v1.0 - 0.5, -v2.1 - v1.1);
    svg.body.push_str(&outline(&[
        off,
        (off.0 + 1.0, off.1),
        (off.0 + 1.0 + v2.0, off.1 + v2.1),
        (off.0 + v2.0, off.1 + v2.1),
    ]));
    (svg.finish(0.01, Some(((-2.0, -2.0), (2.0, 2.0)))), counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tiles::{Tile, TileKind};

    fn wide_doc() -> TilingDocument {
        TilingDocument::new(vec![Tile::new(TileKind::Wide, 0, LatticeVertex::ORIGIN).unwrap()])
    }

    #[test]
    fn empty_svg() {
        let svg = render_svg(&TilingDocument::default(), RenderMode::Plane);
        assert!(svg.starts_with("<svg"));
        assert!(svg_polygons(&svg).is_empty());
    }

    #[test]
    fn plane_wide_tile() {
        let polys = svg_polygons(&render_svg(&wide_doc(), RenderMode::Plane));
        assert_eq!(polys.len(), 1);
        let c72 = 72f64.to_radians().cos();
        let s72 = 72f64.to_radians().sin();
        let expect = [(0.0, 0.0), (1.0, 0.0), (1.0 + c72, s72), (c72, s72)];
        for (p, e) in polys[0].iter().zip(expect) {
            assert!((p.0 - e.0).abs() < 1e-9 && (p.1 - e.1).abs() < 1e-9);
        }
    }

    #[test]
    fn mu_flattened_is_a_rescaled_plane() {
        let plane = svg_polygons(&render_svg(&wide_doc(), RenderMode::Plane));
        let flat = svg_polygons(&render_svg(&wide_doc(), RenderMode::MuFlattened));
        for (p, q) in plane[0].iter().zip(&flat[0]) {
            assert!((q.0 - crate::projections::MU * p.0).abs() < 1e-12);
            assert!((q.1 - crate::projections::MU * p.1).abs() < 1e-12);
        }
    }

    #[test]
    fn modes_parse() {
        for m in RenderMode::ALL {
            assert_eq!(m.name().parse::<RenderMode>(), Ok(m));
        }
        assert!("sideways".parse::<RenderMode>().is_err());
        assert_eq!("one-two".parse::<ProjectMode>(), Ok(ProjectMode::OneTwo));
    }

    #[test]
    fn obj_output() {
        let obj = render_obj(&wide_doc(), ObjMode::OneTwo);
        assert!(obj.contains("v 4 0 0\n"));
        assert!(obj.contains("v 3 1 2\n"));
        assert_eq!(obj.lines().filter(|l| l.starts_with("f ")).count(), 1);
    }

    #[test]
    fn csv_output() {
        let csv = project_csv(&wide_doc(), ProjectMode::Flat);
        assert!(csv.contains("\n4,0,0,0,4,0,1,0\n"));
        assert_eq!(csv.lines().count(), 5);
    }

    #[test]
    fn appendix_figure_counts() {
        let (svg, counts) = appendix_figure_svg();
        assert_eq!(counts.values().sum::<usize>(), 1925);
        assert_eq!(counts[&ContactClass::PerfectEdge], 2);
        let markers = svg.lines().filter(|l| l.starts_with("<circle")).count();
        assert_eq!(markers, 1925);
    }
}
