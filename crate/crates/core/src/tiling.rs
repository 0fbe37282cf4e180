//! Periodic brane tilings `T1..T4` and the spider move between them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cluster::{Potential, Quiver};
use crate::contour;
use crate::error::{Error, Result};
use crate::geom::{self, Pt, S};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Lattice translation of the fundamental domain.
pub type Off = (i64, i64);

/// A face: its label and its boundary as (vertex, translate) pairs, counter-clockwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub label: u8,
    pub cycle: Vec<(usize, Off)>,
}

/// An edge from `u` (at the origin copy) to `v` translated by `off`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub off: Off,
    /// Labels of the two faces on either side, sorted.
    pub faces: (u8, u8),
}

/// A quadrilateral cell of a face, represented by one interior point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub label: u8,
    pub point: Pt,
}

/// A doubly periodic face-labelled bipartite graph with periods `(1,0)`, `(0,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicTiling {
    pub colors: Vec<Color>,
    pub pos: Vec<Pt>,
    pub faces: Vec<Face>,
}

impl PeriodicTiling {
    /// The subdivided triangular lattice `T1`.
    pub fn model1() -> PeriodicTiling {
        use Color::*;
        let z = (0, 0);
        let (v, bh, b60, b120, wu, wd) = (0, 1, 2, 3, 4, 5);
        let mut t = PeriodicTiling {
            colors: vec![White, Black, Black, Black, White, White],
            pos: vec![
                (0, 0),
                geom::frac(1, 2, 0, 1),
                geom::frac(0, 1, 1, 2),
                geom::frac(-1, 2, 1, 2),
                geom::frac(1, 3, 1, 3),
                geom::frac(2, 3, 2, 3),
            ],
            faces: vec![
                Face { label: 1, cycle: vec![(v, z), (bh, z), (wu, z), (b60, z)] },
                Face { label: 4, cycle: vec![(v, (1, 0)), (b120, (1, 0)), (wu, z), (bh, z)] },
                Face { label: 5, cycle: vec![(v, (0, 1)), (b60, z), (wu, z), (b120, (1, 0))] },
                Face { label: 6, cycle: vec![(v, (1, 0)), (b60, (1, 0)), (wd, z), (b120, (1, 0))] },
                Face { label: 3, cycle: vec![(v, (0, 1)), (b120, (1, 0)), (wd, z), (bh, (0, 1))] },
                Face { label: 2, cycle: vec![(v, (1, 1)), (bh, (0, 1)), (wd, z), (b60, (1, 0))] },
            ],
        };
        t.orient();
        t
    }

    pub fn n_vertices(&self) -> usize {
        self.colors.len()
    }

    /// Absolute position of vertex `v` in translate `o`.
    pub fn at(&self, v: usize, o: Off) -> Pt {
        geom::add(self.pos[v], geom::lat(o))
    }

    pub fn face(&self, label: u8) -> Option<&Face> {
        self.faces.iter().find(|f| f.label == label)
    }

    pub fn face_points(&self, f: &Face) -> Vec<Pt> {
        f.cycle.iter().map(|&(v, o)| self.at(v, o)).collect()
    }

    fn orient(&mut self) {
        for i in 0..self.faces.len() {
            let pts = self.face_points(&self.faces[i]);
            if geom::area2(&pts) < 0 {
                self.faces[i].cycle.reverse();
            }
        }
    }

    /// Number of face corners at each vertex, which is its degree.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n_vertices()];
        for f in &self.faces {
            for &(v, _) in &f.cycle {
                d[v] += 1;
            }
        }
        d
    }

    /// Canonical edge list with the labels of the faces on both sides.
    pub fn edges(&self) -> Vec<Edge> {
        let mut map: BTreeMap<(usize, usize, Off), Vec<u8>> = BTreeMap::new();
        for f in &self.faces {
            let n = f.cycle.len();
            for i in 0..n {
                let (a, oa) = f.cycle[i];
                let (b, ob) = f.cycle[(i + 1) % n];
                let ab = (ob.0 - oa.0, ob.1 - oa.1);
                let ba = (-ab.0, -ab.1);
                let key = if (a, ab) <= (b, ba) { (a, b, ab) } else { (b, a, ba) };
                map.entry(key).or_default().push(f.label);
            }
        }
        map.into_iter()
            .map(|((u, v, off), labs)| {
                let (x, y) = (labs[0], *labs.get(1).unwrap_or(&labs[0]));
                Edge { u, v, off, faces: (x.min(y), x.max(y)) }
            })
            .collect()
    }

    /// Labels of the faces around `v`, counter-clockwise, starting from the smallest.
    pub fn faces_around(&self, v: usize) -> Vec<u8> {
        // (label, prev, next) with prev/next relative to v.
        let mut occ: Vec<(u8, Pt, Pt)> = Vec::new();
        for f in &self.faces {
            let n = f.cycle.len();
            for i in 0..n {
                let (w, ow) = f.cycle[i];
                if w != v {
                    continue;
                }
                let here = self.at(w, ow);
                let (a, oa) = f.cycle[(i + n - 1) % n];
                let (b, ob) = f.cycle[(i + 1) % n];
                occ.push((f.label, geom::sub(self.at(a, oa), here), geom::sub(self.at(b, ob), here)));
            }
        }
        if occ.is_empty() {
            return Vec::new();
        }
        let mut seq = vec![occ[0].0];
        let mut cur = 0;
        for _ in 1..occ.len() {
            match occ.iter().position(|o| o.2 == occ[cur].1) {
                Some(nx) if nx != 0 => {
                    seq.push(occ[nx].0);
                    cur = nx;
                }
                _ => break,
            }
        }
        rotate_min(&seq)
    }

    /// Spider move at every translate of face `label`: the corners are pushed a
    /// third of the way to the centre and recoloured, and each old side gets a
    /// new pair of vertices joined to the shrunken face.
    pub fn urban_renewal_all(&self, label: u8) -> Result<PeriodicTiling> {
        let mut t = self.clone();
        let fi = t.faces.iter().position(|f| f.label == label).ok_or(Error::NotQuadFace(label))?;
        let quad = t.faces[fi].cycle.clone();
        if quad.len() != 4 {
            return Err(Error::NotQuadFace(label));
        }
        let pts: Vec<Pt> = quad.iter().map(|&(v, o)| t.at(v, o)).collect();
        let sum = pts.iter().fold((0, 0), |a, &p| geom::add(a, p));
        let mut new = Vec::new();
        for (&(v, _), &p) in quad.iter().zip(&pts) {
            // p + (centroid - p) / 3
            let q = geom::div_exact(geom::add(geom::scale(p, 8), sum), 12);
            new.push(t.colors.len());
            t.colors.push(t.colors[v].flip());
            t.pos.push(q);
        }
        for (gi, g) in t.faces.iter_mut().enumerate() {
            if gi == fi {
                continue;
            }
            let n = g.cycle.len();
            let mut cyc = Vec::with_capacity(n + 2);
            for i in 0..n {
                let (a, oa) = g.cycle[i];
                let (b, ob) = g.cycle[(i + 1) % n];
                cyc.push((a, oa));
                for k in 0..4 {
                    let (v0, o0) = quad[k];
                    let (v1, o1) = quad[(k + 1) % 4];
                    // The neighbour traverses the shared side as v1 -> v0.
                    let s = (oa.0 - o1.0, oa.1 - o1.1);
                    if a == v1 && b == v0 && (ob.0 - o0.0, ob.1 - o0.1) == s {
                        cyc.push((new[(k + 1) % 4], s));
                        cyc.push((new[k], s));
                    }
                }
            }
            g.cycle = cyc;
        }
        t.faces[fi].cycle = new.iter().map(|&v| (v, (0, 0))).collect();
        t.orient();
        Ok(t)
    }

    /// Merges every 2-valent vertex with its two neighbours until none remain.
    ///
    /// The merged vertex sits at whichever neighbour lies on a lattice line
    /// (where contours run); if that is ambiguous it takes the removed vertex's place.
    pub fn collapse_two_valent(&self) -> PeriodicTiling {
        let mut t = self.clone();
        let mut alive = vec![true; t.n_vertices()];
        loop {
            let deg = t.degrees();
            let Some(w) = (0..t.n_vertices()).find(|&v| alive[v] && deg[v] == 2) else {
                break;
            };
            let (fi, k) = t
                .faces
                .iter()
                .enumerate()
                .find_map(|(fi, f)| f.cycle.iter().position(|&(v, _)| v == w).map(|k| (fi, k)))
                .unwrap();
            let cyc = &t.faces[fi].cycle;
            let n = cyc.len();
            let ow = cyc[k].1;
            let (a, oa) = cyc[(k + n - 1) % n];
            let (b, ob) = cyc[(k + 1) % n];
            assert_ne!(a, b, "2-valent vertex between copies of one vertex");
            let oa = (oa.0 - ow.0, oa.1 - ow.1);
            let ob = (ob.0 - ow.0, ob.1 - ow.1);
            let pa = t.at(a, oa);
            let pb = t.at(b, ob);
            let target = match (geom::on_lattice_line(pa), geom::on_lattice_line(pb)) {
                (true, false) => pa,
                (false, true) => pb,
                _ => t.pos[w],
            };
            let m = t.colors.len();
            t.colors.push(t.colors[a]);
            t.pos.push(target);
            alive.push(true);
            for f in t.faces.iter_mut() {
                let mut nc: Vec<(usize, Off)> = Vec::with_capacity(f.cycle.len());
                for &(v, o) in &f.cycle {
                    let item = if v == w {
                        continue;
                    } else if v == a {
                        (m, (o.0 - oa.0, o.1 - oa.1))
                    } else if v == b {
                        (m, (o.0 - ob.0, o.1 - ob.1))
                    } else {
                        (v, o)
                    };
                    if nc.last() != Some(&item) {
                        nc.push(item);
                    }
                }
                while nc.len() > 1 && nc.first() == nc.last() {
                    nc.pop();
                }
                f.cycle = nc;
            }
            for v in [w, a, b] {
                alive[v] = false;
            }
        }
        t.compact(&alive)
    }

    fn compact(&self, alive: &[bool]) -> PeriodicTiling {
        let mut map = vec![usize::MAX; alive.len()];
        let mut out = PeriodicTiling { colors: Vec::new(), pos: Vec::new(), faces: Vec::new() };
        for v in 0..alive.len() {
            if alive[v] {
                map[v] = out.colors.len();
                out.colors.push(self.colors[v]);
                out.pos.push(self.pos[v]);
            }
        }
        out.faces = self
            .faces
            .iter()
            .map(|f| Face { label: f.label, cycle: f.cycle.iter().map(|&(v, o)| (map[v], o)).collect() })
            .collect();
        out
    }

    /// Splits every face into quadrilateral cells.
    ///
    /// A face is first cut along chords that are segments of the model's unit
    /// contour paths, then each remaining piece is fan-split into quads.
    pub fn quad_cells(&self, model: u8) -> Vec<Cell> {
        let chords = contour::unit_segments(model);
        let mut cells = Vec::new();
        for f in &self.faces {
            let mut pieces = vec![self.face_points(f)];
            'split: loop {
                for pi in 0..pieces.len() {
                    let pc = &pieces[pi];
                    let n = pc.len();
                    for i in 0..n {
                        for j in i + 2..n {
                            if i == 0 && j == n - 1 {
                                continue;
                            }
                            if !chords.contains(&contour::normalize_segment(pc[i], pc[j])) {
                                continue;
                            }
                            if geom::winding(geom::midpoint(pc[i], pc[j]), pc) == 0 {
                                continue;
                            }
                            let left: Vec<Pt> = pc[i..=j].to_vec();
                            let mut right: Vec<Pt> = pc[j..].to_vec();
                            right.extend_from_slice(&pc[..=i]);
                            pieces.splice(pi..=pi, [left, right]);
                            continue 'split;
                        }
                    }
                }
                break;
            }
            for mut pc in pieces {
                assert!(pc.len() % 2 == 0, "odd piece in face {}", f.label);
                while pc.len() > 4 {
                    cells.push(interior_cell(f.label, &pc[..4]));
                    let mut rest = vec![pc[0]];
                    rest.extend_from_slice(&pc[3..]);
                    pc = rest;
                }
                cells.push(interior_cell(f.label, &pc));
            }
        }
        cells
    }

    /// All vertices and edges of the translates `[-radius, radius]^2`.
    pub fn unfold(&self, radius: i64) -> Patch {
        let mut vertices = Vec::new();
        let mut index = std::collections::HashMap::new();
        for ox in -radius..=radius {
            for oy in -radius..=radius {
                for v in 0..self.n_vertices() {
                    index.insert((v, (ox, oy)), vertices.len());
                    vertices.push(PatchVertex { pos: self.at(v, (ox, oy)), base: v, color: self.colors[v] });
                }
            }
        }
        let mut edges = Vec::new();
        for e in self.edges() {
            for ox in -radius..=radius {
                for oy in -radius..=radius {
                    let a = index[&(e.u, (ox, oy))];
                    if let Some(&b) = index.get(&(e.v, (ox + e.off.0, oy + e.off.1))) {
                        edges.push(PatchEdge { a: a.min(b), b: a.max(b), faces: e.faces });
                    }
                }
            }
        }
        edges.sort_by_key(|e| (e.a, e.b));
        Patch { vertices, edges }
    }

    /// Vertex whose position agrees with `p` modulo the lattice, with its translate.
    pub fn vertex_at(&self, p: Pt) -> Option<(usize, Off)> {
        let key = geom::frac_part(p);
        let v = (0..self.n_vertices()).find(|&v| geom::frac_part(self.pos[v]) == key)?;
        let d = geom::sub(p, self.pos[v]);
        Some((v, (d.0 / S, d.1 / S)))
    }
}

/// A vertex of a finite patch: absolute position and the periodic vertex it copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchVertex {
    pub pos: Pt,
    pub base: usize,
    pub color: Color,
}

/// An edge between patch vertices `a < b`, with the labels of its two faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatchEdge {
    pub a: usize,
    pub b: usize,
    pub faces: (u8, u8),
}

/// A finite piece of a tiling.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Patch {
    pub vertices: Vec<PatchVertex>,
    pub edges: Vec<PatchEdge>,
}

impl Patch {
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices.len()];
        for e in &self.edges {
            d[e.a] += 1;
            d[e.b] += 1;
        }
        d
    }

    /// Removes edges that every perfect matching must use.
    ///
    /// Repeatedly takes a vertex of degree one, records its edge as forced and
    /// deletes both endpoints. Returns the remaining patch and the forced
    /// edges (indexed into `self`).
    pub fn prune_forced(&self) -> (Patch, Vec<PatchEdge>) {
        let n = self.vertices.len();
        let mut alive = vec![true; n];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            adj[e.a].push(i);
            adj[e.b].push(i);
        }
        let live_edges = |v: usize, alive: &[bool]| -> Vec<usize> {
            adj[v].iter().copied().filter(|&i| alive[self.edges[i].a] && alive[self.edges[i].b]).collect()
        };
        let mut forced = Vec::new();
        let mut stack: Vec<usize> = (0..n).collect();
        while let Some(v) = stack.pop() {
            if !alive[v] {
                continue;
            }
            let le = live_edges(v, &alive);
            if le.len() != 1 {
                continue;
            }
            let e = self.edges[le[0]];
            let other = if e.a == v { e.b } else { e.a };
            alive[v] = false;
            alive[other] = false;
            forced.push(e);
            for &i in &adj[other] {
                let f = self.edges[i];
                stack.push(f.a);
                stack.push(f.b);
            }
        }
        forced.sort_by_key(|e| (e.a, e.b));
        (self.restrict(&alive), forced)
    }

    /// The induced sub-patch on the vertices flagged `keep`.
    pub fn restrict(&self, keep: &[bool]) -> Patch {
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (v, pv) in self.vertices.iter().enumerate() {
            if keep[v] {
                map[v] = vertices.len();
                vertices.push(*pv);
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep[e.a] && keep[e.b])
            .map(|e| PatchEdge { a: map[e.a], b: map[e.b], faces: e.faces })
            .collect();
        Patch { vertices, edges }
    }

    /// Weight `1 / (x_i x_j)` of an edge between faces `i` and `j`.
    pub fn edge_weight(e: &PatchEdge) -> crate::laurent::Monomial {
        let mut m = [0i32; 6];
        m[e.faces.0 as usize - 1] -= 1;
        m[e.faces.1 as usize - 1] -= 1;
        crate::laurent::Monomial(m)
    }
}

fn interior_cell(label: u8, pc: &[Pt]) -> Cell {
    let n = pc.len();
    for i in 0..n {
        let s = geom::add(geom::add(pc[i], pc[(i + 1) % n]), pc[(i + 2) % n]);
        let c = geom::div_exact(s, 3);
        let inside = geom::winding(c, pc) != 0;
        let on_edge = (0..n).any(|k| geom::on_segment(c, pc[k], pc[(k + 1) % n]));
        if inside && !on_edge {
            return Cell { label, point: c };
        }
    }
    panic!("no interior point for a cell of face {label}");
}

fn rotate_min<T: Ord + Clone>(s: &[T]) -> Vec<T> {
    (0..s.len())
        .map(|r| s[r..].iter().chain(&s[..r]).cloned().collect::<Vec<T>>())
        .min()
        .unwrap_or_default()
}

/// The built-in tiling of model `m`.
///
/// `T1` is given explicitly; `T2`, `T3`, `T4` follow it through the spider
/// moves at faces 1, 4 and 3 (mirroring the mutations `μ1`, `μ4`, `μ3`), each
/// followed by removal of 2-valent vertices.
pub fn load_model_tiling(m: u8) -> PeriodicTiling {
    let mut t = PeriodicTiling::model1();
    for &label in &crate::cluster::CHAIN[..m as usize - 1] {
        t = t.urban_renewal_all(label as u8).expect("quad face").collapse_two_valent();
    }
    t
}

/// Outcome of checking a tiling against a quiver with potential.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks dimer duality: bipartite, one face per label, edges ↔ arrows, and
/// white (black) vertices ↔ positive (negative) potential terms.
pub fn validate_against_potential(t: &PeriodicTiling, q: &Quiver, w: &Potential) -> ValidationReport {
    let mut bad = Vec::new();
    bad.extend(w.check());
    if w.quiver() != *q {
        bad.push("potential arrows do not match the quiver".to_string());
    }
    let edges = t.edges();
    for e in &edges {
        if t.colors[e.u] == t.colors[e.v] {
            bad.push(format!("edge {}-{} joins equal colours", e.u, e.v));
        }
    }
    let mut labels: Vec<u8> = t.faces.iter().map(|f| f.label).collect();
    labels.sort();
    if labels != [1, 2, 3, 4, 5, 6] {
        bad.push(format!("face labels {labels:?}"));
    }
    let mut from_edges: Vec<(u8, u8)> = edges.iter().map(|e| e.faces).collect();
    let mut from_arrows = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            for _ in 0..q.b[i][j].abs() {
                from_arrows.push((i as u8 + 1, j as u8 + 1));
            }
        }
    }
    from_edges.sort();
    from_arrows.sort();
    if from_edges != from_arrows {
        bad.push(format!("edge face pairs {from_edges:?} differ from arrows {from_arrows:?}"));
    }
    for (color, sign) in [(Color::White, 1i8), (Color::Black, -1i8)] {
        let mut around: Vec<Vec<u8>> = (0..t.n_vertices())
            .filter(|&v| t.colors[v] == color)
            .map(|v| {
                // Positive terms run counter-clockwise around white vertices,
                // negative terms clockwise around black ones.
                let mut s = t.faces_around(v);
                if color == Color::Black {
                    s.reverse();
                }
                rotate_min(&s)
            })
            .collect();
        let mut terms: Vec<Vec<u8>> = w.face_cycles(sign).iter().map(|c| rotate_min(c)).collect();
        around.sort();
        terms.sort();
        if around != terms {
            bad.push(format!("{color:?} vertex cycles {around:?} differ from terms {terms:?}"));
        }
    }
    ValidationReport { violations: bad }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn model_tilings_validate() {
        for m in 1..=4 {
            let t = load_model_tiling(m);
            let r = validate_against_potential(&t, &Quiver::model(m), &Potential::model(m));
            assert!(r.passed(), "model {m}: {:?}", r.violations);
        }
    }

    #[test]
    fn wrong_pairing_fails() {
        let r = validate_against_potential(&PeriodicTiling::model1(), &Quiver::model(2), &Potential::model(2));
        assert!(!r.passed());
    }

    #[test]
    fn face_sizes() {
        let sizes = |m: u8| {
            let t = load_model_tiling(m);
            let mut s: Vec<(u8, usize)> = t.faces.iter().map(|f| (f.label, f.cycle.len())).collect();
            s.sort();
            s
        };
        assert_eq!(sizes(1), vec![(1, 4), (2, 4), (3, 4), (4, 4), (5, 4), (6, 4)]);
        assert_eq!(sizes(2), vec![(1, 4), (2, 4), (3, 6), (4, 4), (5, 4), (6, 6)]);
        assert_eq!(sizes(3), vec![(1, 4), (2, 4), (3, 4), (4, 4), (5, 4), (6, 8)]);
        assert_eq!(sizes(4), vec![(1, 4), (2, 4), (3, 4), (4, 6), (5, 6), (6, 12)]);
    }

    #[test]
    fn unfolding() {
        let t = load_model_tiling(1);
        let p = t.unfold(1);
        assert_eq!(p.vertices.len(), 9 * t.n_vertices());
        let p2 = t.unfold(2);
        let deg = p2.degrees();
        assert!((0..p2.vertices.len()).any(|v| deg[v] == 6 && p2.vertices[v].color == Color::White));
        for e in &p2.edges {
            let (a, b) = (&p2.vertices[e.a], &p2.vertices[e.b]);
            assert_ne!(a.color, b.color);
        }
    }

    #[test]
    fn cell_counts_match_covering_exponents() {
        let counts = |m: u8| {
            let mut c = [0usize; 6];
            for cell in load_model_tiling(m).quad_cells(m) {
                c[cell.label as usize - 1] += 1;
            }
            c
        };
        assert_eq!(counts(1), [1, 1, 1, 1, 1, 1]);
        assert_eq!(counts(2), [1, 1, 2, 1, 1, 2]);
        assert_eq!(counts(3), [1, 1, 1, 1, 1, 3]);
        assert_eq!(counts(4), [1, 1, 1, 2, 2, 5]);
    }

    #[test]
    fn base_vertices() {
        // Contours start at the vertex sitting at the origin.
        let expect: [(usize, &[u8]); 4] =
            [(6, &[1, 2, 3, 4, 5, 6]), (5, &[2, 3, 4, 5, 6]), (4, &[2, 3, 5, 6]), (3, &[2, 5, 6])];
        for (m, (deg, faces)) in (1..=4).zip(expect) {
            let t = load_model_tiling(m);
            let (v, _) = t.vertex_at((0, 0)).unwrap();
            assert_eq!(t.colors[v], Color::White);
            assert_eq!(t.degrees()[v], deg, "model {m}");
            let mut around = t.faces_around(v);
            around.sort();
            around.dedup();
            assert_eq!(around, faces, "model {m}");
        }
    }

    #[test]
    fn non_quad_face_is_rejected() {
        let t2 = load_model_tiling(2);
        assert_eq!(t2.urban_renewal_all(3), Err(Error::NotQuadFace(3)));
    }
}
