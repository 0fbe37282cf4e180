//! Six-sided lattice contours on the tilings and the subgraphs they cut out.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{self, Pt, S};
use crate::laurent::Monomial;
use crate::tiling::{self, Cell, Color, Off, Patch, PatchEdge, PatchVertex, PeriodicTiling};

/// Directions of sides `a..f` in lattice coordinates.
pub const DIRS: [(i64, i64); 6] = [(1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)];

/// Side index whose horizontal unit takes the route above the lattice line in
/// Models 3 and 4 (side `b`); the opposite side `e` takes the zig-zag below.
const UPPER_SIDE: usize = 1;

/// Points from `p` to `p + d` along one unit of side `side` (None: default route).
pub fn unit_path(model: u8, p: Pt, d: (i64, i64), side: Option<usize>) -> Vec<Pt> {
    let horizontal = d.1 == 0;
    if model >= 3 && horizontal {
        if d.0 < 0 {
            let start = geom::add(p, geom::lat((-1, 0)));
            let mut v = unit_path(model, start, (1, 0), side);
            v.reverse();
            return v;
        }
        let offs: [Pt; 3] = if side == Some(UPPER_SIDE) {
            [geom::frac(29, 72, 5, 72), geom::frac(1, 2, 0, 1), geom::frac(749, 864, 41, 864)]
        } else {
            [geom::frac(1, 2, -1, 2), geom::frac(1, 2, 0, 1), geom::frac(1, 1, -1, 2)]
        };
        let mut v = vec![p];
        v.extend(offs.iter().map(|&o| geom::add(p, o)));
        v.push(geom::add(p, geom::lat(d)));
        return v;
    }
    let full = geom::lat(d);
    vec![p, geom::add(p, geom::div_exact(full, 2)), geom::add(p, full)]
}

/// A segment up to lattice translation, endpoints ordered.
pub fn normalize_segment(a: Pt, b: Pt) -> (Pt, Pt) {
    let (a, b) = if b < a { (b, a) } else { (a, b) };
    let shift = geom::lat(geom::floor_cell(a));
    (geom::sub(a, shift), geom::sub(b, shift))
}

/// All segments of the default unit paths, up to translation.
pub fn unit_segments(model: u8) -> HashSet<(Pt, Pt)> {
    let mut out = HashSet::new();
    for &d in &DIRS[..3] {
        let u = unit_path(model, (0, 0), d, None);
        for w in u.windows(2) {
            out.insert(normalize_segment(w[0], w[1]));
        }
    }
    out
}

/// A closed contour built from a signed 6-tuple.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contour {
    pub model: u8,
    pub sides: [i64; 6],
    /// Closed polyline; first point repeated at the end.
    pub path: Vec<Pt>,
    /// The points of each side, both endpoints included.
    pub side_paths: Vec<Vec<Pt>>,
    pub self_intersecting: bool,
    /// Immediate back-tracking was cancelled before the intersection test.
    pub backtracked: bool,
}

impl Contour {
    /// `+`, `-` or `0` per side.
    pub fn sign_pattern(&self) -> String {
        sign_pattern(&self.sides)
    }
}

pub fn sign_pattern(sides: &[i64; 6]) -> String {
    sides
        .iter()
        .map(|&s| match s.signum() {
            1 => '+',
            -1 => '-',
            _ => '0',
        })
        .collect()
}

/// Walks the six sides from the base vertex at the origin.
pub fn build_contour(model: u8, sides: [i64; 6]) -> Result<Contour> {
    let mut cur: Pt = (0, 0);
    let mut path = vec![cur];
    let mut side_paths = Vec::with_capacity(6);
    for (s, &len) in sides.iter().enumerate() {
        let d = if len > 0 { DIRS[s] } else { (-DIRS[s].0, -DIRS[s].1) };
        let mut sp = vec![cur];
        for _ in 0..len.abs() {
            let u = unit_path(model, cur, d, Some(s));
            sp.extend_from_slice(&u[1..]);
            cur = *u.last().unwrap();
        }
        path.extend_from_slice(&sp[1..]);
        side_paths.push(sp);
    }
    if cur != (0, 0) {
        return Err(Error::Invalid(format!("contour {sides:?} does not close (sides must sum to 1)")));
    }
    let (self_intersecting, backtracked) = self_intersection(&path);
    Ok(Contour { model, sides, path, side_paths, self_intersecting, backtracked })
}

/// Whether a closed path revisits a point once immediate back-tracks are cancelled.
/// Also reports whether any cancellation happened.
pub fn self_intersection(path: &[Pt]) -> (bool, bool) {
    let mut st: Vec<Pt> = Vec::with_capacity(path.len());
    let mut cancelled = false;
    for &p in path {
        if st.len() >= 2 && st[st.len() - 2] == p {
            st.pop();
            cancelled = true;
        } else {
            st.push(p);
        }
    }
    // Back-tracks that wrap around the start.
    while st.len() > 3 && st[0] == st[st.len() - 1] {
        let n = st.len() - 1;
        if st[1] == st[n - 1] {
            let core: Vec<Pt> = st[1..n - 1].to_vec();
            st = core.clone();
            st.push(core[0]);
            cancelled = true;
        } else {
            break;
        }
    }
    let core = &st[..st.len().saturating_sub(1)];
    let distinct: HashSet<&Pt> = core.iter().collect();
    (distinct.len() != core.len(), cancelled)
}

/// Per-model data shared by all contours: tiling, adjacency and cells.
#[derive(Debug)]
pub struct ModelData {
    pub model: u8,
    pub tiling: PeriodicTiling,
    /// For each vertex: (neighbour, translate of neighbour, face pair).
    pub nbr: Vec<Vec<(usize, Off, (u8, u8))>>,
    pub cells: Vec<Cell>,
    by_frac: HashMap<Pt, usize>,
}

impl ModelData {
    fn new(model: u8) -> ModelData {
        let tiling = tiling::load_model_tiling(model);
        let mut nbr = vec![Vec::new(); tiling.n_vertices()];
        for e in tiling.edges() {
            nbr[e.u].push((e.v, e.off, e.faces));
            nbr[e.v].push((e.u, (-e.off.0, -e.off.1), e.faces));
        }
        let cells = tiling.quad_cells(model);
        let by_frac = (0..tiling.n_vertices()).map(|v| (geom::frac_part(tiling.pos[v]), v)).collect();
        ModelData { model, tiling, nbr, cells, by_frac }
    }

    /// Tiling vertex sitting at an absolute point, if any.
    pub fn vertex_at(&self, p: Pt) -> Option<usize> {
        self.by_frac.get(&geom::frac_part(p)).copied()
    }
}

/// Cached data for model `m`.
pub fn model_data(m: u8) -> &'static ModelData {
    static CACHE: OnceLock<Vec<ModelData>> = OnceLock::new();
    &CACHE.get_or_init(|| (1..=4).map(ModelData::new).collect())[m as usize - 1]
}

/// Extended and core subgraphs with the covering monomial.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SubgraphPair {
    pub extended: Patch,
    pub core: Patch,
    /// Edges of `extended` forced into every perfect matching.
    pub forced: Vec<PatchEdge>,
    pub covering: Monomial,
    /// Contour points whose vertices were deleted.
    pub removed: Vec<Pt>,
}

fn bbox(path: &[Pt]) -> (i64, i64, i64, i64) {
    let xs = path.iter().map(|p| p.0);
    let ys = path.iter().map(|p| p.1);
    (
        xs.clone().min().unwrap().div_euclid(S) - 2,
        xs.max().unwrap().div_euclid(S) + 2,
        ys.clone().min().unwrap().div_euclid(S) - 2,
        ys.max().unwrap().div_euclid(S) + 2,
    )
}

/// The subgraphs cut out by a non-self-intersecting contour.
///
/// Vertices strictly inside are kept. Along a positive (negative) side the
/// black (white) vertices are deleted; a zero side deletes its corner unless
/// both neighbouring sides are positive. An edge survives when both ends do
/// and it does not run outside the contour.
pub fn extract_subgraphs(c: &Contour) -> Result<SubgraphPair> {
    if c.self_intersecting {
        return Err(Error::SelfIntersecting(c.sides));
    }
    let md = model_data(c.model);
    let t = &md.tiling;
    let path = &c.path;
    let on_contour: HashSet<Pt> = path.iter().copied().collect();
    let mut removed: HashSet<Pt> = HashSet::new();
    for (s, sp) in c.side_paths.iter().enumerate() {
        let len = c.sides[s];
        if len == 0 {
            if c.sides[(s + 5) % 6] <= 0 || c.sides[(s + 1) % 6] <= 0 {
                removed.insert(sp[0]);
            }
            continue;
        }
        let doomed = if len > 0 { Color::Black } else { Color::White };
        for &p in sp {
            let v = md.vertex_at(p).expect("contour point on a vertex");
            if t.colors[v] == doomed {
                removed.insert(p);
            }
        }
    }
    let (x0, x1, y0, y1) = bbox(path);
    let mut vertices: Vec<PatchVertex> = Vec::new();
    let mut index: HashMap<Pt, usize> = HashMap::new();
    for ox in x0..=x1 {
        for oy in y0..=y1 {
            for v in 0..t.n_vertices() {
                let q = t.at(v, (ox, oy));
                let keep = if on_contour.contains(&q) {
                    !removed.contains(&q)
                } else {
                    geom::winding(q, path) != 0
                };
                if keep {
                    index.insert(q, vertices.len());
                    vertices.push(PatchVertex { pos: q, base: v, color: t.colors[v] });
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (a, pv) in vertices.iter().enumerate() {
        for &(u, o, faces) in &md.nbr[pv.base] {
            let r = geom::add(geom::add(geom::sub(pv.pos, t.pos[pv.base]), t.pos[u]), geom::lat(o));
            let Some(&b) = index.get(&r) else { continue };
            if pv.pos >= r {
                continue;
            }
            let mid = geom::midpoint(pv.pos, r);
            if geom::winding(mid, path) != 0 || geom::on_polyline(mid, path) {
                edges.push(PatchEdge { a, b, faces });
            }
        }
    }
    edges.sort_by_key(|e| (e.a, e.b));
    let extended = Patch { vertices, edges };
    let covering = covering_monomial(c);
    let (core, forced) = extended.prune_forced();
    let mut removed: Vec<Pt> = removed.into_iter().collect();
    removed.sort();
    Ok(SubgraphPair { extended, core, forced, covering, removed })
}

/// Product of `x_label` over all quadrilateral cells inside the contour.
pub fn covering_monomial(c: &Contour) -> Monomial {
    let md = model_data(c.model);
    let (x0, x1, y0, y1) = bbox(&c.path);
    let mut e = [0i32; 6];
    for cell in &md.cells {
        for ox in x0..=x1 {
            for oy in y0..=y1 {
                let p = geom::add(cell.point, geom::lat((ox, oy)));
                if geom::winding(p, &c.path) != 0 {
                    e[cell.label as usize - 1] += 1;
                }
            }
        }
    }
    Monomial(e)
}

/// A historical graph family with its converted parameters.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    A1([i64; 3]),
    A2([i64; 3]),
    A3([i64; 3]),
    F1([i64; 3]),
    F2([i64; 3]),
    F3([i64; 3]),
    D([i64; 3]),
    E([i64; 3]),
    Unnamed,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::A1(_) => "A1",
            Family::A2(_) => "A2",
            Family::A3(_) => "A3",
            Family::F1(_) => "F1",
            Family::F2(_) => "F2",
            Family::F3(_) => "F3",
            Family::D(_) => "D",
            Family::E(_) => "E",
            Family::Unnamed => "unnamed",
        }
    }
}

/// Matches a sign pattern against the trimmed-Aztec-rectangle families
/// (Model 3) and the dungeon regions (Model 4).
pub fn classify_sign_pattern(model: u8, sides: &[i64; 6]) -> Family {
    let [a, b, c, d, e, f] = *sides;
    let pat = sign_pattern(sides);
    match (model, pat.as_str()) {
        (3, "+-++-+") | (3, "+-++--") => Family::A3([a, -b, c]),
        (3, "++-++-") | (3, "-+-++-") => Family::A1([b, -c, d - 1]),
        (3, "-++-++") | (3, "--+-++") => Family::A2([c, -d + 1, e + 1]),
        (3, "--+--+") | (3, "--++-+") => Family::F1([-e - 1, f - 1, -a]),
        (3, "+--+--") | (3, "+--++-") => Family::F2([-f + 1, a, -b]),
        (3, "-+--+-") | (3, "-++-+-") => Family::F3([-d, e, -f]),
        (4, "-+-++-") | (4, "++-++-") => Family::D([b, -c, d - 1]),
        (4, "--+--+") | (4, "--++-+") => Family::E([-e - 1, f - 1, -a]),
        _ => Family::Unnamed,
    }
}

/// The straight-sided contour used for the self-intersecting `(+,-,+,-,+,-)` family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModifiedContour {
    pub original: [i64; 6],
    /// `(a-1, b+1, c-1, d, e, f)`.
    pub sides: [i64; 6],
    /// Corners, starting and ending at the centre of a hexagon labelled 5.
    pub corners: Vec<Pt>,
    /// Each side as (start, end, side index, signed length).
    pub segments: Vec<(Pt, Pt, usize, i64)>,
}

impl ModifiedContour {
    /// The two triangles (outer: corners 0,1,2; inner: 3,4,5), counter-clockwise.
    pub fn triangles(&self) -> [[Pt; 3]; 2] {
        let k = &self.corners;
        let mut t1 = [k[0], k[1], k[2]];
        let mut t2 = [k[3], k[4], k[5]];
        for t in [&mut t1, &mut t2] {
            if geom::area2(t) < 0 {
                t.reverse();
            }
        }
        [t1, t2]
    }
}

/// Base point of the modified contour: the centre of hexagon 5.
pub fn hexagon5_centre() -> Pt {
    geom::frac(1, 3, 1, 3)
}

pub fn modified_contour(model: u8, sides: &[i64; 6]) -> Result<ModifiedContour> {
    let [a, b, c, d, e, f] = *sides;
    if model != 4 || sign_pattern(sides) != "+-+-+-" {
        return Err(Error::PatternMismatch(*sides));
    }
    let m = [a - 1, b + 1, c - 1, d, e, f];
    let mut cur = hexagon5_centre();
    let mut corners = vec![cur];
    let mut segments = Vec::new();
    for (s, &len) in m.iter().enumerate() {
        let d = if len >= 0 { DIRS[s] } else { (-DIRS[s].0, -DIRS[s].1) };
        let next = geom::add(cur, geom::scale(geom::lat(d), len.abs()));
        segments.push((cur, next, s, len));
        cur = next;
        corners.push(cur);
    }
    if cur != corners[0] {
        return Err(Error::Invalid(format!("modified contour {m:?} does not close")));
    }
    Ok(ModifiedContour { original: *sides, sides: m, corners, segments })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::phi;

    #[test]
    fn documented_contours() {
        let c = build_contour(2, [0, 0, 1, -1, 1, 0]).unwrap();
        assert!(!c.self_intersecting);
        let c = build_contour(1, [1, 1, 1, -4, 6, -4]).unwrap();
        assert!(!c.self_intersecting);
        assert_eq!(c.sign_pattern(), "+++-+-");
        assert!(build_contour(4, [2, -2, 2, -1, 1, -1]).unwrap().self_intersecting);
    }

    #[test]
    fn initial_cores() {
        let core_faces = |m: u8, s: [i64; 6]| {
            let g = extract_subgraphs(&build_contour(m, s).unwrap()).unwrap();
            (g.core.vertices.len(), g.core.edges.len())
        };
        // A single quadrilateral: four vertices, four edges.
        assert_eq!(core_faces(2, phi((0, -1, 1))), (4, 4));
        assert_eq!(core_faces(3, [-1, 1, 0, 0, 0, 1]).0, 0);
        // Hexagon 4 glued to quad 3 along one edge.
        let g = extract_subgraphs(&build_contour(4, [1, 0, 0, 0, 1, -1]).unwrap()).unwrap();
        assert_eq!((g.core.vertices.len(), g.core.edges.len()), (8, 9));
        let mut labels: Vec<u8> = g.core.edges.iter().flat_map(|e| [e.faces.0, e.faces.1]).collect();
        labels.sort();
        labels.dedup();
        assert!(labels.contains(&3) && labels.contains(&4));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_sign_pattern(3, &[3, -4, 1, 4, -5, 2]), Family::A3([3, 4, 1]));
        assert_eq!(classify_sign_pattern(3, &[2, 3, -5, 3, 2, -4]), Family::A1([3, 5, 2]));
        assert_eq!(classify_sign_pattern(3, &[-6, 2, 5, -7, 3, 4]), Family::A2([5, 8, 4]));
        assert_eq!(classify_sign_pattern(3, &[-3, -3, 6, -2, -4, 7]), Family::F1([3, 6, 3]));
        assert_eq!(classify_sign_pattern(3, &[8, -4, -3, 7, -3, -4]), Family::F2([5, 8, 4]));
        assert_eq!(classify_sign_pattern(3, &[-2, 5, -2, -3, 6, -3]), Family::F3([3, 6, 3]));
        assert_eq!(classify_sign_pattern(3, &[0, 0, 1, -1, 1, 0]), Family::Unnamed);
        // The quoted E example does not sum to 1; the conversion rule gives (3, 5, 3).
        assert_eq!(classify_sign_pattern(4, &[-3, -3, 5, -2, -4, 6]), Family::E([3, 5, 3]));
    }

    #[test]
    fn modified_contours() {
        assert_eq!(modified_contour(4, &[2, -2, 2, -1, 1, -1]).unwrap().sides, [1, -1, 1, -1, 1, -1]);
        assert_eq!(modified_contour(4, &[4, -4, 3, -1, 1, -2]).unwrap().sides, [3, -3, 2, -1, 1, -2]);
        assert!(matches!(modified_contour(4, &[1, 1, -1, 0, 0, 0]), Err(Error::PatternMismatch(_))));
    }
}
