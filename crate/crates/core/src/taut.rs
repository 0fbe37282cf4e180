//! Mixed dimer / double-dimer configurations for the self-intersecting
//! `(+,-,+,-,+,-)` contours of Model 4.
//!
//! The modified contour is two overlapping triangles. Vertices in the overlap
//! have multiplicity two and must be covered twice; the rest form an ordinary
//! matching problem. Doubled-region paths between multiplicity-one vertices
//! are kept only when they pair up in the taut (nested-arc) pattern.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cluster::Point;
use crate::contour::{self, ModifiedContour};
use crate::error::{Error, Result};
use crate::formula::phi;
use crate::geom::{self, Pt, S};
use crate::laurent::{LaurentPoly, Monomial};
use crate::matching::{count_matchings, partition_function, WeightedGraph};
use crate::tiling::{self, Color, PeriodicTiling};

/// Unit vectors at multiples of 60 degrees, in lattice coordinates.
fn dirv(angle: u32) -> (i64, i64) {
    match angle {
        0 => (1, 0),
        60 => (0, 1),
        120 => (-1, 1),
        180 => (-1, 0),
        240 => (0, -1),
        300 => (1, -1),
        _ => unreachable!("angle {angle}"),
    }
}

/// Distance of hexagon corners from the centre, in lattice steps.
const EPS_DEN: i64 = 5;

/// `T4` redrawn with regular hexagons 4 and 5 of radius `1/5`.
///
/// Each vertex of `T4` is a corner of exactly one of the two hexagons; its
/// angle is read off from the square face across the hexagon edge. Hexagon 5
/// is centred at `(1/3, 1/3)`, and the translate of hexagon 4 is chosen to
/// make the longest edge as short as possible.
pub fn ideal_model4_tiling() -> PeriodicTiling {
    let t = tiling::load_model_tiling(4);
    let edges = t.edges();
    let other_face = |h: u8, a: usize, oa: (i64, i64), b: usize, ob: (i64, i64)| -> u8 {
        let ab = (ob.0 - oa.0, ob.1 - oa.1);
        let ba = (-ab.0, -ab.1);
        let e = edges
            .iter()
            .find(|e| (e.u, e.v, e.off) == (a, b, ab) || (e.u, e.v, e.off) == (b, a, ba))
            .expect("hexagon edge");
        if e.faces.0 == h {
            e.faces.1
        } else {
            e.faces.0
        }
    };
    let table = |h: u8, sq: u8| -> Option<(u32, u32)> {
        match (h, sq) {
            (5, 3) => Some((0, 60)),
            (5, 2) => Some((120, 180)),
            (5, 1) => Some((240, 300)),
            (4, 2) => Some((300, 0)),
            (4, 1) => Some((60, 120)),
            (4, 3) => Some((180, 240)),
            _ => None,
        }
    };
    let mut role: Vec<Option<(u8, u32, (i64, i64))>> = vec![None; t.n_vertices()];
    for h in [4u8, 5] {
        let cyc = &t.face(h).expect("hexagon").cycle;
        let n = cyc.len();
        for i in 0..n {
            let (a, oa) = cyc[i];
            let (b, ob) = cyc[(i + 1) % n];
            if let Some((th1, th2)) = table(h, other_face(h, a, oa, b, ob)) {
                role[a] = Some((h, th1, oa));
                role[b] = Some((h, th2, ob));
            }
        }
    }
    let role: Vec<(u8, u32, (i64, i64))> = role.into_iter().map(|r| r.expect("every vertex lies on a hexagon")).collect();
    let mut best: Option<(f64, Vec<Pt>)> = None;
    for tx in -2..=2 {
        for ty in -2..=2 {
            let centre = |h: u8| {
                if h == 5 {
                    geom::frac(1, 3, 1, 3)
                } else {
                    geom::add(geom::frac(2, 3, 2, 3), geom::lat((tx, ty)))
                }
            };
            let pos: Vec<Pt> = role
                .iter()
                .map(|&(h, th, o)| {
                    let d = geom::div_exact(geom::lat(dirv(th)), EPS_DEN);
                    geom::sub(geom::add(centre(h), d), geom::lat(o))
                })
                .collect();
            let longest = edges
                .iter()
                .map(|e| {
                    let d = geom::sub(geom::add(pos[e.v], geom::lat(e.off)), pos[e.u]);
                    let (x, y) = geom::cartesian(d);
                    x.hypot(y)
                })
                .fold(0.0, f64::max);
            if best.as_ref().is_none_or(|(l, _)| longest < *l) {
                best = Some((longest, pos));
            }
        }
    }
    PeriodicTiling { colors: t.colors.clone(), pos: best.expect("nonempty search").1, faces: t.faces.clone() }
}

/// A vertex of the doubled region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionVertex {
    pub pos: Pt,
    pub color: Color,
    pub multiplicity: u8,
}

/// The multiplicity-marked patch cut out by a modified contour.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MixedRegion {
    pub contour: ModifiedContour,
    pub vertices: Vec<RegionVertex>,
    /// `(a, b, face pair)` with `a < b`.
    pub edges: Vec<(usize, usize, (u8, u8))>,
}

/// Builds the region of a `(+,-,+,-,+,-)` contour of Model 4.
pub fn mixed_region(sides: &[i64; 6]) -> Result<MixedRegion> {
    let mc = contour::modified_contour(4, sides)?;
    let t = ideal_tiling();
    let path = &mc.corners;
    let xs = path.iter().map(|p| p.0.div_euclid(S));
    let ys = path.iter().map(|p| p.1.div_euclid(S));
    let (x0, x1) = (xs.clone().min().unwrap() - 2, xs.max().unwrap() + 2);
    let (y0, y1) = (ys.clone().min().unwrap() - 2, ys.max().unwrap() + 2);
    let wind = |q: Pt| geom::winding(q, path);
    let mut vertices = Vec::new();
    let mut base = Vec::new();
    let mut index: HashMap<Pt, usize> = HashMap::new();
    for v in 0..t.n_vertices() {
        // Base positions of the ideal embedding need not lie in the unit cell.
        let (fx, fy) = geom::floor_cell(t.pos[v]);
        for ox in x0 - fx..=x1 - fx {
            for oy in y0 - fy..=y1 - fy {
                let q = t.at(v, (ox, oy));
                let on: Vec<i64> =
                    mc.segments.iter().filter(|s| geom::on_segment(q, s.0, s.1)).map(|s| s.3).collect();
                let m = if on.is_empty() {
                    wind(q).abs()
                } else {
                    let d = 1;
                    let around = [(d, 0), (-d, 0), (0, d), (0, -d), (d, -d), (-d, d)];
                    let mut m = around.iter().map(|&o| wind(geom::add(q, o)).abs()).max().unwrap();
                    for len in on {
                        if (len > 0 && t.colors[v] == Color::Black) || (len < 0 && t.colors[v] == Color::White) {
                            m -= 1;
                        }
                    }
                    m
                };
                if m > 0 {
                    index.insert(q, vertices.len());
                    vertices.push(RegionVertex { pos: q, color: t.colors[v], multiplicity: m as u8 });
                    base.push(v);
                }
            }
        }
    }
    let mut nbr: Vec<Vec<(usize, (i64, i64), (u8, u8))>> = vec![Vec::new(); t.n_vertices()];
    for e in t.edges() {
        nbr[e.u].push((e.v, e.off, e.faces));
        nbr[e.v].push((e.u, (-e.off.0, -e.off.1), e.faces));
    }
    let mut edges = Vec::new();
    for (a, rv) in vertices.iter().enumerate() {
        let v = base[a];
        for &(u, o, faces) in &nbr[v] {
            let r = geom::add(geom::add(geom::sub(rv.pos, t.pos[v]), t.pos[u]), geom::lat(o));
            let Some(&b) = index.get(&r) else { continue };
            if rv.pos < r && wind(geom::midpoint(rv.pos, r)) != 0 {
                edges.push((a, b, faces));
            }
        }
    }
    edges.sort();
    Ok(MixedRegion { contour: mc, vertices, edges })
}

fn ideal_tiling() -> &'static PeriodicTiling {
    static CACHE: std::sync::OnceLock<PeriodicTiling> = std::sync::OnceLock::new();
    CACHE.get_or_init(ideal_model4_tiling)
}

/// One admissible way of covering the doubled vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixedConfig {
    /// `(edge index, copies)` for every chosen edge; copies is 1 or 2.
    pub copies: Vec<(usize, u8)>,
    /// Closed loops (length at least 4).
    pub cycles: u32,
    /// End points of the paths, each pair sorted.
    pub pairs: Vec<(usize, usize)>,
}

/// Every multiplicity-one vertex lying on two sides of the modified contour.
fn special_vertices(r: &MixedRegion) -> Vec<usize> {
    (0..r.vertices.len())
        .filter(|&q| {
            let p = r.vertices[q].pos;
            r.vertices[q].multiplicity == 1
                && r.contour.segments.iter().filter(|s| geom::on_segment(p, s.0, s.1)).count() >= 2
        })
        .collect()
}

/// All multisets of edges at the doubled and special vertices that give each
/// doubled vertex degree two, each special vertex degree one and every other
/// vertex degree at most one.
pub fn enumerate_mixed(r: &MixedRegion) -> Result<Vec<MixedConfig>> {
    let n = r.vertices.len();
    let special = special_vertices(r);
    let mut target = vec![None; n];
    for (q, v) in r.vertices.iter().enumerate() {
        if v.multiplicity == 2 {
            target[q] = Some(2u8);
        }
    }
    for &q in &special {
        target[q] = Some(1);
    }
    let mut inc: Vec<usize> =
        (0..r.edges.len()).filter(|&i| target[r.edges[i].0].is_some() || target[r.edges[i].1].is_some()).collect();
    // Group the edges of each constrained vertex so its degree is settled early.
    let key = |q: usize| if target[q].is_some() { r.vertices[q].pos } else { (i64::MAX, i64::MAX) };
    inc.sort_by_key(|&i| key(r.edges[i].0).min(key(r.edges[i].1)));
    let mut last = vec![None; n];
    for (k, &i) in inc.iter().enumerate() {
        last[r.edges[i].0] = Some(k);
        last[r.edges[i].1] = Some(k);
    }
    // Constrained vertices without incident candidate edges can never be covered.
    if (0..n).any(|q| target[q].is_some() && last[q].is_none()) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut deg = vec![0u8; n];
    let mut cnt = vec![0u8; inc.len()];
    struct Ctx<'a> {
        r: &'a MixedRegion,
        inc: &'a [usize],
        target: &'a [Option<u8>],
        last: &'a [Option<usize>],
    }
    fn rec(cx: &Ctx, k: usize, deg: &mut [u8], cnt: &mut [u8], out: &mut Vec<Vec<u8>>) {
        if k == cx.inc.len() {
            out.push(cnt.to_vec());
            return;
        }
        let (a, b, _) = cx.r.edges[cx.inc[k]];
        let cap = |q: usize| cx.target[q].unwrap_or(1);
        for c in 0..=2u8 {
            if deg[a] + c > cap(a) || deg[b] + c > cap(b) {
                continue;
            }
            deg[a] += c;
            deg[b] += c;
            let settled = [a, b].iter().all(|&q| cx.last[q] != Some(k) || cx.target[q].is_none_or(|t| deg[q] == t));
            if settled {
                cnt[k] = c;
                rec(cx, k + 1, deg, cnt, out);
                cnt[k] = 0;
            }
            deg[a] -= c;
            deg[b] -= c;
        }
    }
    let cx = Ctx { r, inc: &inc, target: &target, last: &last };
    let mut raw = Vec::new();
    rec(&cx, 0, &mut deg, &mut cnt, &mut raw);
    for c in raw {
        let copies: Vec<(usize, u8)> = inc.iter().zip(&c).filter(|(_, &k)| k > 0).map(|(&i, &k)| (i, k)).collect();
        out.push(decompose(r, copies)?);
    }
    Ok(out)
}

/// Splits the chosen edges into closed loops and paths.
fn decompose(r: &MixedRegion, copies: Vec<(usize, u8)>) -> Result<MixedConfig> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &(i, k) in &copies {
        let (a, b, _) = r.edges[i];
        for _ in 0..k {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut cycles = 0;
    let mut pairs = Vec::new();
    for &s in adj.keys() {
        if !seen.insert(s) {
            continue;
        }
        let mut comp = vec![];
        let mut stack = vec![s];
        while let Some(a) = stack.pop() {
            comp.push(a);
            for &b in &adj[&a] {
                if seen.insert(b) {
                    stack.push(b);
                }
            }
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&a| r.vertices[a].multiplicity == 1).collect();
        let n_edges: usize = comp.iter().map(|a| adj[a].len()).sum::<usize>() / 2;
        match ends.len() {
            0 => {
                // A doubled single edge is not a loop.
                if n_edges >= 4 || comp.len() >= 3 {
                    cycles += 1;
                }
            }
            2 => pairs.push((ends[0].min(ends[1]), ends[0].max(ends[1]))),
            k => return Err(Error::Invalid(format!("doubled-region component with {k} ends"))),
        }
    }
    pairs.sort();
    Ok(MixedConfig { copies, cycles, pairs })
}

fn line_dist(p: Pt, a: Pt, b: Pt) -> f64 {
    let (pa, pb, pp) = (geom::cartesian(a), geom::cartesian(b), geom::cartesian(p));
    let (dx, dy) = (pb.0 - pa.0, pb.1 - pa.1);
    (dx * (pp.1 - pa.1) - dy * (pp.0 - pa.0)).abs() / dx.hypot(dy)
}

fn dist(a: Pt, b: Pt) -> f64 {
    let (pa, pb) = (geom::cartesian(a), geom::cartesian(b));
    (pa.0 - pb.0).hypot(pa.1 - pb.1)
}

/// The taut boundary condition on path end points.
///
/// A special vertex on a side of the inner triangle must be joined to a
/// vertex that is not special on the same side and that lies nearer to the
/// adjacent side at the closer corner than to the other adjacent side. This
/// keeps the arcs nested and stops paths from crossing between the sides.
pub struct TautFilter {
    special: HashMap<usize, (usize, (Pt, Pt), (Pt, Pt))>,
    positions: Vec<Pt>,
}

impl TautFilter {
    pub fn new(r: &MixedRegion) -> TautFilter {
        let inner = r.contour.triangles()[1];
        let sides3: Vec<(Pt, Pt)> = (0..3).map(|i| (inner[i], inner[(i + 1) % 3])).collect();
        let mut special = HashMap::new();
        for q in special_vertices(r) {
            let p = r.vertices[q].pos;
            for (k, &(x, y)) in sides3.iter().enumerate() {
                if !geom::on_segment(p, x, y) {
                    continue;
                }
                let sx = sides3[(k + 2) % 3];
                let sy = sides3[(k + 1) % 3];
                let (near, far) = if dist(p, x) < dist(p, y) { (sx, sy) } else { (sy, sx) };
                special.insert(q, (k, near, far));
            }
        }
        TautFilter { special, positions: r.vertices.iter().map(|v| v.pos).collect() }
    }

    pub fn accepts(&self, pairs: &[(usize, usize)]) -> bool {
        let mut partner = HashMap::new();
        for &(a, b) in pairs {
            partner.insert(a, b);
            partner.insert(b, a);
        }
        self.special.iter().all(|(s, &(k, near, far))| {
            let Some(&p) = partner.get(s) else { return false };
            if self.special.get(&p).is_some_and(|o| o.0 == k) {
                return false;
            }
            let pp = self.positions[p];
            line_dist(pp, near.0, near.1) < line_dist(pp, far.0, far.1)
        })
    }
}

type Q = BigRational;

fn to_q(p: Pt) -> (Q, Q) {
    (Q::from_integer(p.0.into()), Q::from_integer(p.1.into()))
}

fn qcross(o: &(Q, Q), a: &(Q, Q), b: &(Q, Q)) -> Q {
    (&a.0 - &o.0) * (&b.1 - &o.1) - (&a.1 - &o.1) * (&b.0 - &o.0)
}

/// Sutherland-Hodgman clip of `poly` by a counter-clockwise triangle, with
/// repeated and collinear points removed.
fn clip(poly: &[Pt], tri: &[Pt; 3]) -> Vec<(Q, Q)> {
    let tri: Vec<(Q, Q)> = tri.iter().map(|&p| to_q(p)).collect();
    let mut out: Vec<(Q, Q)> = poly.iter().map(|&p| to_q(p)).collect();
    for i in 0..3 {
        let (a, b) = (&tri[i], &tri[(i + 1) % 3]);
        let inp = std::mem::take(&mut out);
        if inp.is_empty() {
            break;
        }
        for j in 0..inp.len() {
            let (p, q) = (&inp[j], &inp[(j + 1) % inp.len()]);
            let sp = qcross(a, b, p);
            let sq = qcross(a, b, q);
            if !sp.is_negative() {
                out.push(p.clone());
            }
            if (sp.is_positive() && sq.is_negative()) || (sp.is_negative() && sq.is_positive()) {
                let t = &sp / (&sp - &sq);
                out.push((&p.0 + (&q.0 - &p.0) * &t, &p.1 + (&q.1 - &p.1) * &t));
            }
        }
    }
    let mut res: Vec<(Q, Q)> = Vec::new();
    for p in out {
        if res.last() != Some(&p) {
            res.push(p);
        }
    }
    while res.len() > 1 && res.first() == res.last() {
        res.pop();
    }
    'again: while res.len() >= 3 {
        let n = res.len();
        for i in 0..n {
            if qcross(&res[(i + n - 1) % n], &res[i], &res[(i + 1) % n]).is_zero() {
                res.remove(i);
                continue 'again;
            }
        }
        break;
    }
    if res.len() >= 3 {
        res
    } else {
        Vec::new()
    }
}

/// Covering monomial of the doubled region: every face translate meeting a
/// triangle in a `k`-gon contributes `(k - 2) / 2`, once per triangle.
pub fn mixed_covering(mc: &ModifiedContour) -> Result<Monomial> {
    let t = ideal_tiling();
    let tris = mc.triangles();
    let mut ex = [Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::zero(), Q::zero()];
    let (lo, hi) = mc.corners.iter().fold((i64::MAX, i64::MIN), |(lo, hi), p| {
        (lo.min(p.0.min(p.1)), hi.max(p.0.max(p.1)))
    });
    for f in &t.faces {
        let base = t.face_points(f);
        for ox in -6..=6 {
            for oy in -6..=6 {
                let poly: Vec<Pt> = base.iter().map(|&p| geom::add(p, geom::lat((ox, oy)))).collect();
                // Cheap rejection before exact clipping.
                let (plo, phi_) = poly.iter().fold((i64::MAX, i64::MIN), |(l, h), p| (l.min(p.0.min(p.1)), h.max(p.0.max(p.1))));
                if phi_ < lo - 2 * S || plo > hi + 2 * S {
                    continue;
                }
                for tri in &tris {
                    let r = clip(&poly, tri);
                    if !r.is_empty() {
                        ex[f.label as usize - 1] += Q::new(BigInt::from(r.len() as i64 - 2), BigInt::from(2));
                    }
                }
            }
        }
    }
    let mut m = [0i32; 6];
    for (i, e) in ex.iter().enumerate() {
        if !e.is_integer() {
            return Err(Error::Invalid(format!("fractional covering exponent {e} for x{}", i + 1)));
        }
        m[i] = i32::try_from(e.to_integer()).map_err(|_| Error::Invalid("covering exponent overflow".into()))?;
    }
    Ok(Monomial(m))
}

/// Outcome of a taut enumeration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TautResult {
    pub sides: [i64; 6],
    pub modified: [i64; 6],
    pub value: LaurentPoly,
    /// Weighted count of all mixed configurations at all-ones.
    pub total_at_ones: BigInt,
    /// Same count restricted to taut configurations.
    pub taut_at_ones: BigInt,
    pub configurations: usize,
    pub taut_configurations: usize,
    pub covering: Monomial,
}

/// Sum over taut mixed configurations of `2^cycles` times the edge weights
/// (doubled edges squared) times the matchings of the remaining single
/// vertices, multiplied by the covering monomial.
pub fn taut_mixed_partition_sides(sides: &[i64; 6]) -> Result<TautResult> {
    let r = mixed_region(sides)?;
    let filter = TautFilter::new(&r);
    let configs = enumerate_mixed(&r)?;
    let singles: Vec<usize> = (0..r.vertices.len()).filter(|&q| r.vertices[q].multiplicity == 1).collect();
    let mut memo: HashMap<Vec<bool>, (Option<LaurentPoly>, BigInt)> = HashMap::new();
    let mut value = LaurentPoly::zero();
    let mut total = BigInt::zero();
    let mut taut = BigInt::zero();
    let mut n_taut = 0;
    for c in &configs {
        let mut used = vec![false; r.vertices.len()];
        let mut w = Monomial::default();
        for &(i, k) in &c.copies {
            let (a, b, faces) = r.edges[i];
            used[a] = true;
            used[b] = true;
            let mut e = [0i32; 6];
            e[faces.0 as usize - 1] -= k as i32;
            e[faces.1 as usize - 1] -= k as i32;
            w = w.mul(&Monomial(e));
        }
        let rest = rest_key(&r, &used);
        let accept = filter.accepts(&c.pairs);
        let entry = match memo.entry(rest) {
            std::collections::hash_map::Entry::Occupied(o) => o.into_mut(),
            std::collections::hash_map::Entry::Vacant(v) => {
                let n = count_matchings(&rest_graph(&r, &singles, v.key()))?;
                v.insert((None, n))
            }
        };
        if accept && entry.0.is_none() {
            // Only taut configurations need the full polynomial.
            entry.0 = Some(partition_function(&rest_graph(&r, &singles, &rest_key(&r, &used)))?);
        }
        let (pf, n) = (&entry.0, &entry.1);
        let factor = BigInt::from(1u64 << c.cycles);
        total += &factor * n;
        if accept {
            n_taut += 1;
            taut += &factor * n;
            value = value + pf.as_ref().expect("computed above").mul_monomial(&w).scale(&factor);
        }
    }
    let covering = mixed_covering(&r.contour)?;
    Ok(TautResult {
        sides: *sides,
        modified: r.contour.sides,
        value: value.mul_monomial(&covering),
        total_at_ones: total,
        taut_at_ones: taut,
        configurations: configs.len(),
        taut_configurations: n_taut,
        covering,
    })
}

/// Single vertices not touched by the chosen doubled-region edges.
fn rest_key(r: &MixedRegion, used: &[bool]) -> Vec<bool> {
    (0..r.vertices.len()).map(|q| r.vertices[q].multiplicity == 1 && !used[q]).collect()
}

fn rest_graph(r: &MixedRegion, singles: &[usize], rest: &[bool]) -> WeightedGraph {
    let mut map = vec![usize::MAX; r.vertices.len()];
    let mut g = WeightedGraph::default();
    for &q in singles {
        if rest[q] {
            map[q] = g.positions.len();
            g.positions.push(r.vertices[q].pos);
            g.colors.push(r.vertices[q].color);
            g.multiplicity.push(1);
        }
    }
    for &(a, b, faces) in &r.edges {
        if rest[a] && rest[b] {
            let mut e = [0i32; 6];
            e[faces.0 as usize - 1] -= 1;
            e[faces.1 as usize - 1] -= 1;
            g.edges.push((map[a], map[b], Monomial(e)));
        }
    }
    g
}

/// The taut partition function for `z^(4)` at a point whose contour has
/// the `(+,-,+,-,+,-)` pattern.
pub fn taut_mixed_partition(p: Point) -> Result<TautResult> {
    taut_mixed_partition_sides(&phi(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_embedding_is_a_tiling() {
        let t = ideal_model4_tiling();
        for f in &t.faces {
            assert!(geom::area2(&t.face_points(f)) > 0, "face {}", f.label);
        }
        let h5 = t.face(5).unwrap();
        let c = t.face_points(h5).iter().fold((0, 0), |a, &p| geom::add(a, p));
        assert_eq!(geom::div_exact(c, 6), geom::frac(1, 3, 1, 3));
    }

    #[test]
    fn smallest_case_counts() {
        let r = taut_mixed_partition((0, 0, 2)).unwrap();
        assert_eq!(r.modified, [1, -1, 1, -1, 1, -1]);
        assert_eq!(r.taut_at_ones, 14.into());
        assert_eq!(r.value.at_ones(), 14.into());
    }
}
