//! Weighted perfect matchings and the combinatorial cluster variables.
//!
//! Partition functions are computed by a sweep over the vertices in a
//! geometric order. The state after vertex `i` is the set of later vertices
//! already matched (a bitset relative to `i`) together with the monomial
//! accumulated so far. Planar patches keep that frontier small.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::cluster::Point;
use crate::contour::{self, SubgraphPair};
use crate::error::{Error, Result};
use crate::formula::phi;
use crate::geom::Pt;
use crate::laurent::{LaurentPoly, Monomial};
use crate::tiling::{Color, Patch};

/// A finite bipartite graph with monomial edge weights.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedGraph {
    pub positions: Vec<Pt>,
    pub colors: Vec<Color>,
    pub edges: Vec<(usize, usize, Monomial)>,
    /// Vertex multiplicities, 1 or 2; all 1 for ordinary matchings.
    pub multiplicity: Vec<u8>,
}

impl WeightedGraph {
    /// Edge weights `1 / (x_i x_j)` from the face pairs.
    pub fn from_patch(p: &Patch) -> WeightedGraph {
        WeightedGraph {
            positions: p.vertices.iter().map(|v| v.pos).collect(),
            colors: p.vertices.iter().map(|v| v.color).collect(),
            edges: p.edges.iter().map(|e| (e.a, e.b, Patch::edge_weight(e))).collect(),
            multiplicity: vec![1; p.vertices.len()],
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.positions.len()
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> WeightedGraph {
        let n = self.n_vertices();
        let mut g = WeightedGraph {
            positions: vec![(0, 0); n],
            colors: vec![Color::Black; n],
            edges: Vec::with_capacity(self.edges.len()),
            multiplicity: vec![1; n],
        };
        for v in 0..n {
            g.positions[perm[v]] = self.positions[v];
            g.colors[perm[v]] = self.colors[v];
            g.multiplicity[perm[v]] = self.multiplicity[v];
        }
        g.edges = self.edges.iter().map(|&(a, b, w)| (perm[a], perm[b], w)).collect();
        g
    }

    /// The same graph with vertex indices reversed.
    pub fn reversed(&self) -> WeightedGraph {
        let n = self.n_vertices();
        let perm: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
        self.permuted(&perm)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n_vertices()];
        for &(a, b, _) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// Largest frontier and bandwidth of a sweep order.
fn profile(adj: &[Vec<usize>], order: &[usize]) -> (usize, usize) {
    let n = order.len();
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    // A later vertex enters the frontier when its first earlier neighbour is swept.
    let mut enter = vec![0i64; n + 1];
    let mut bw = 0;
    for v in 0..n {
        let first = adj[v].iter().map(|&u| rank[u]).min();
        if let Some(f) = first {
            if f < rank[v] {
                enter[f] += 1;
                enter[rank[v]] -= 1;
            }
        }
        for &u in &adj[v] {
            bw = bw.max(rank[u].abs_diff(rank[v]));
        }
    }
    let mut cur = 0i64;
    let mut worst = 0;
    for e in enter.iter().take(n) {
        cur += e;
        worst = worst.max(cur as usize);
    }
    (worst, bw)
}

/// Picks a sweep direction giving a small frontier.
pub fn sweep_order(g: &WeightedGraph) -> Vec<usize> {
    let adj = g.adjacency();
    let dirs: [(i64, i64); 8] = [(0, 1), (1, 0), (1, 1), (1, -1), (1, 2), (2, 1), (2, -1), (1, -2)];
    let mut best: Option<((usize, usize), Vec<usize>)> = None;
    for (a, b) in dirs {
        let mut order: Vec<usize> = (0..g.n_vertices()).collect();
        order.sort_by_key(|&v| {
            let (p, q) = g.positions[v];
            (a * p + b * q, -b * p + a * q, v)
        });
        let prof = profile(&adj, &order);
        if best.as_ref().is_none_or(|(bp, _)| prof < *bp) {
            best = Some((prof, order));
        }
    }
    best.map(|b| b.1).unwrap_or_default()
}

/// Coefficient arithmetic for the sweep: only additions are needed.
trait Coef: Clone {
    fn one() -> Self;
    /// False on overflow.
    fn add_to(&mut self, o: &Self) -> bool;
    fn into_bigint(self) -> BigInt;
}

impl Coef for u128 {
    fn one() -> Self {
        1
    }
    fn add_to(&mut self, o: &Self) -> bool {
        match self.checked_add(*o) {
            Some(s) => {
                *self = s;
                true
            }
            None => false,
        }
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

impl Coef for BigUint {
    fn one() -> Self {
        One::one()
    }
    fn add_to(&mut self, o: &Self) -> bool {
        *self += o;
        true
    }
    fn into_bigint(self) -> BigInt {
        BigInt::from(self)
    }
}

const BITS: u32 = 10;
const FIELD: u64 = (1 << BITS) - 1;

/// Packs a monomial with nonpositive exponents as its negation, 10 bits a variable.
fn pack(m: &Monomial) -> Result<u64> {
    let mut out = 0u64;
    for (i, &e) in m.0.iter().enumerate() {
        if e > 0 {
            return Err(Error::Invalid(format!("edge weight {m} has a positive exponent")));
        }
        out |= ((-e) as u64) << (BITS * i as u32);
    }
    Ok(out)
}

fn unpack(w: u64) -> Monomial {
    let mut m = [0i32; 6];
    for (i, e) in m.iter_mut().enumerate() {
        *e = -(((w >> (BITS * i as u32)) & FIELD) as i32);
    }
    Monomial(m)
}

/// One sweep; `None` if a coefficient overflowed.
fn sweep<const W: usize, C: Coef>(later: &[Vec<(usize, u64)>]) -> Option<Vec<(u64, C)>> {
    type Key<const W: usize> = ([u64; W], u64);
    let mut layer: FxHashMap<Key<W>, C> = FxHashMap::default();
    layer.insert(([0; W], 0), C::one());
    let shr = |mut b: [u64; W]| {
        for k in 0..W {
            b[k] = (b[k] >> 1) | if k + 1 < W { (b[k + 1] & 1) << 63 } else { 0 };
        }
        b
    };
    for nbrs in later {
        let mut next: FxHashMap<Key<W>, C> = FxHashMap::default();
        next.reserve(layer.len());
        let push = |k: Key<W>, c: C, next: &mut FxHashMap<Key<W>, C>| -> bool {
            match next.get_mut(&k) {
                Some(acc) => acc.add_to(&c),
                None => {
                    next.insert(k, c);
                    true
                }
            }
        };
        for ((bits, mono), c) in layer.drain() {
            if bits[0] & 1 == 1 {
                if !push((shr(bits), mono), c, &mut next) {
                    return None;
                }
                continue;
            }
            for &(d, w) in nbrs {
                let (word, bit) = (d / 64, d % 64);
                if bits[word] >> bit & 1 == 1 {
                    continue;
                }
                let mut nb = bits;
                nb[word] |= 1 << bit;
                if !push((shr(nb), mono + w), c.clone(), &mut next) {
                    return None;
                }
            }
        }
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    Some(layer.into_iter().map(|((_, m), c)| (m, c)).collect())
}

fn run<C: Coef>(later: &[Vec<(usize, u64)>], bw: usize) -> Result<Option<Vec<(u64, C)>>> {
    Ok(match bw {
        0..64 => sweep::<1, C>(later),
        64..128 => sweep::<2, C>(later),
        128..256 => sweep::<4, C>(later),
        256..512 => sweep::<8, C>(later),
        _ => return Err(Error::Invalid(format!("bandwidth {bw} too large for the sweep"))),
    })
}

/// Weighted sum over perfect matchings along a fixed sweep order.
pub fn partition_function_with_order(g: &WeightedGraph, order: &[usize], weighted: bool) -> Result<Vec<(Monomial, BigInt)>> {
    let n = g.n_vertices();
    if g.multiplicity.iter().any(|&m| m != 1) {
        return Err(Error::Invalid("partition_function needs multiplicity one everywhere".into()));
    }
    if n % 2 == 1 {
        return Ok(Vec::new());
    }
    if n > 2 * FIELD as usize {
        return Err(Error::Invalid(format!("{n} vertices exceed the exponent packing")));
    }
    let mut rank = vec![0; n];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut later: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    let mut bw = 0;
    for &(a, b, w) in &g.edges {
        let (ra, rb) = (rank[a], rank[b]);
        let (lo, hi) = (ra.min(rb), ra.max(rb));
        if lo == hi {
            return Err(Error::Invalid("loop edge".into()));
        }
        let w = if weighted { pack(&w)? } else { 0 };
        later[lo].push((hi - lo, w));
        bw = bw.max(hi - lo);
    }
    let terms: Vec<(u64, BigInt)> = match run::<u128>(&later, bw)? {
        Some(t) => t.into_iter().map(|(m, c)| (m, c.into_bigint())).collect(),
        None => run::<BigUint>(&later, bw)?
            .expect("big integers never overflow")
            .into_iter()
            .map(|(m, c)| (m, c.into_bigint()))
            .collect(),
    };
    Ok(terms.into_iter().map(|(m, c)| (unpack(m), c)).collect())
}

/// `w(G)`: the sum over perfect matchings of the product of edge weights.
/// The empty graph gives 1 and a graph without perfect matchings gives 0.
pub fn partition_function(g: &WeightedGraph) -> Result<LaurentPoly> {
    let terms = partition_function_with_order(g, &sweep_order(g), true)?;
    Ok(LaurentPoly::from_terms(terms))
}

/// Number of perfect matchings.
pub fn count_matchings(g: &WeightedGraph) -> Result<BigInt> {
    let terms = partition_function_with_order(g, &sweep_order(g), false)?;
    Ok(terms.into_iter().map(|(_, c)| c).sum())
}

/// Product of the weights of a set of edges.
pub fn forced_weight(p: &SubgraphPair) -> Monomial {
    p.forced.iter().fold(Monomial::default(), |acc, e| acc.mul(&Patch::edge_weight(e)))
}

/// `m(G~) · w(G~)` for an explicit side tuple.
pub fn combinatorial_z_sides(model: u8, sides: [i64; 6]) -> Result<LaurentPoly> {
    let c = contour::build_contour(model, sides)?;
    let pair = contour::extract_subgraphs(&c)?;
    let w = partition_function(&WeightedGraph::from_patch(&pair.core))?;
    Ok(w.mul_monomial(&pair.covering.mul(&forced_weight(&pair))))
}

/// The combinatorial formula for `z^(m)` at a lattice point.
pub fn combinatorial_z(model: u8, p: Point) -> Result<LaurentPoly> {
    combinatorial_z_sides(model, phi(p))
}

/// The hexahedron recurrence from `A_0 = A_1 = A_2 = B_0 = 1`, up to index `nmax`.
pub fn hexahedron_sequences(nmax: usize) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    if nmax < 2 {
        return Err(Error::Invalid("nmax must be at least 2".into()));
    }
    let exact = |num: BigInt, den: BigInt| -> Result<BigInt> {
        let (q, r) = num.div_rem(&den);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible)
        }
    };
    let mut a: Vec<BigInt> = vec![BigInt::one(); 3];
    let mut b: Vec<BigInt> = vec![BigInt::one()];
    let mut n = 1;
    while b.len() <= nmax || a.len() <= nmax {
        let (a0, a1, a2, b0) = (&a[n - 1], &a[n], &a[n + 1], &b[n - 1]);
        let b0c = b0.pow(3);
        let bn = exact(a1.pow(3) + a0 * a1 * a2 + &b0c, a0 * b0)?;
        let num = b0.pow(6) + BigInt::from(2) * a1.pow(3) * &b0c + BigInt::from(3) * a0 * a1 * a2 * &b0c + (a0 * a2 + a1 * a1).pow(3);
        let an2 = exact(num, a0 * a0 * &b0c)?;
        b.push(bn);
        a.push(an2);
        n += 1;
    }
    a.truncate(nmax + 1);
    b.truncate(nmax + 1);
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::z;
    use crate::laurent::poly;

    #[test]
    fn empty_and_odd_graphs() {
        let g = WeightedGraph::default();
        assert_eq!(partition_function(&g).unwrap(), LaurentPoly::one());
        let odd = WeightedGraph {
            positions: vec![(0, 0)],
            colors: vec![Color::White],
            edges: vec![],
            multiplicity: vec![1],
        };
        assert!(partition_function(&odd).unwrap().is_zero());
        assert_eq!(count_matchings(&odd).unwrap(), BigInt::zero());
    }

    #[test]
    fn initial_fixtures() {
        assert_eq!(combinatorial_z(2, (0, -1, 1)).unwrap(), z(2, (0, -1, 1)).unwrap());
        assert_eq!(combinatorial_z(3, (-1, 0, 1)).unwrap(), poly("x1*x2*x4^-1 + x3*x4^-1*x6"));
        assert_eq!(combinatorial_z(1, (0, 0, 0)).unwrap(), poly("x6"));
    }

    #[test]
    fn hexahedron_values() {
        let (a, b) = hexahedron_sequences(8).unwrap();
        assert_eq!(a[3], 14.into());
        assert_eq!(b[1], 3.into());
        assert_eq!(a[4], 196.into());
    }
}
