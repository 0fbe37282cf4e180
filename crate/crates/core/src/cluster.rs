//! Quivers, potentials, seeds and mutation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Monomial};

pub type Point = (i64, i64, i64);

/// Skew-symmetric exchange matrix, `b[i][j]` = arrows i→j minus arrows j→i (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Quiver {
    pub b: [[i32; 6]; 6],
}

/// Arrow lists of the four models, read off the potentials.
const ARROWS: [&str; 4] = [
    "16 64 42 25 53 31 14 45 51 23 36 62",
    "36 36 64 42 25 53 23 62 34 41 13 56 61 15",
    "36 36 62 62 25 53 56 61 61 15 24 43 14 46",
    "56 56 56 62 62 25 46 46 46 24 61 61 15 14 63 63 34 35",
];

/// Initial-cluster labels in Z^3 for each model.
pub const DELTA: [[Point; 6]; 4] = [
    [(0, -1, 1), (0, -1, 0), (-1, 0, 0), (-1, 0, 1), (0, 0, 1), (0, 0, 0)],
    [(-1, 1, 0), (0, -1, 0), (-1, 0, 0), (-1, 0, 1), (0, 0, 1), (0, 0, 0)],
    [(-1, 1, 0), (0, -1, 0), (-1, 0, 0), (0, 0, -1), (0, 0, 1), (0, 0, 0)],
    [(-1, 1, 0), (0, -1, 0), (1, 0, 0), (0, 0, -1), (0, 0, 1), (0, 0, 0)],
];

/// Mutation vertex leading from model `m - 1` to model `m`.
pub const CHAIN: [usize; 3] = [1, 4, 3];

/// The superurban renewal sequence on Model 4.
pub const SUPERURBAN: [usize; 6] = [1, 4, 2, 1, 3, 2];

impl Quiver {
    pub fn zero() -> Self {
        Quiver { b: [[0; 6]; 6] }
    }

    /// Builds from arrows written as two-digit strings `"ij"` (1-based).
    pub fn from_arrows(list: &str) -> Self {
        let mut q = Quiver::zero();
        for a in list.split_whitespace() {
            let d: Vec<usize> = a.bytes().map(|c| (c - b'1') as usize).collect();
            q.b[d[0]][d[1]] += 1;
            q.b[d[1]][d[0]] -= 1;
        }
        q
    }

    /// The quiver `Q_m` of model `m`.
    pub fn model(m: u8) -> Self {
        Quiver::from_arrows(ARROWS[m as usize - 1])
    }

    pub fn is_skew(&self) -> bool {
        (0..6).all(|i| self.b[i][i] == 0 && (0..6).all(|j| self.b[i][j] == -self.b[j][i]))
    }

    /// Quiver mutation at vertex `v` (1-based).
    pub fn mutate(&self, v: usize) -> Quiver {
        let k = v - 1;
        let b = &self.b;
        let mut n = *b;
        for i in 0..6 {
            for j in 0..6 {
                n[i][j] = if i == k || j == k {
                    -b[i][j]
                } else {
                    b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
                };
            }
        }
        Quiver { b: n }
    }

    /// (in-degree, out-degree) of vertex `v`, counting multiplicity.
    pub fn degrees(&self, v: usize) -> (i32, i32) {
        let k = v - 1;
        let inn = (0..6).map(|i| self.b[i][k].max(0)).sum();
        let out = (0..6).map(|j| self.b[k][j].max(0)).sum();
        (inn, out)
    }

    pub fn is_toric(&self, v: usize) -> bool {
        self.degrees(v) == (2, 2)
    }

    pub fn reversed(&self) -> Quiver {
        let mut q = *self;
        for row in q.b.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
        q
    }

    /// Relabel vertices: vertex `i` becomes `perm[i]` (0-based).
    pub fn permuted(&self, perm: &[usize; 6]) -> Quiver {
        let mut q = Quiver::zero();
        for i in 0..6 {
            for j in 0..6 {
                q.b[perm[i]][perm[j]] = self.b[i][j];
            }
        }
        q
    }

    /// Which of the four models this quiver is, up to relabeling and reversal.
    pub fn classify(&self) -> Option<u8> {
        let perms = permutations6();
        (1..=4u8).find(|&m| {
            let target = Quiver::model(m);
            let rev = target.reversed();
            perms.iter().any(|p| {
                let q = self.permuted(p);
                q == target || q == rev
            })
        })
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.b {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn permutations6() -> Vec<[usize; 6]> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool; 6], out: &mut Vec<[usize; 6]>) {
        if cur.len() == 6 {
            out.push(cur.clone().try_into().unwrap());
            return;
        }
        for i in 0..6 {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::with_capacity(720);
    rec(&mut Vec::new(), &mut [false; 6], &mut out);
    out
}

/// An arrow `A_{ij}` with an optional parallel-arrow tag.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub from: u8,
    pub to: u8,
    pub tag: u8,
}

/// Signed cyclic words in the arrows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Potential {
    pub terms: Vec<(i8, Vec<Arrow>)>,
}

const POTENTIALS: [&str; 4] = [
    "+ A16 A64 A42 A25 A53 A31 + A14 A45 A51 + A23 A36 A62 \
     - A16 A62 A25 A51 - A36 A64 A45 A53 - A14 A42 A23 A31",
    "+ A36(2) A64 A42 A25 A53 + A23 A36(1) A62 + A34 A41 A13 + A56 A61 A15 \
     - A56 A62 A25 - A53 A36(1) A64 A41 A15 - A34 A42 A23 - A36(2) A61 A13",
    "+ A36(2) A62(2) A25 A53 + A56 A61(1) A15 + A24 A43 A36(1) A62(1) + A61(2) A14 A46 \
     - A56 A62(1) A25 - A53 A36(1) A61(2) A15 - A36(2) A61(1) A14 A43 - A62(2) A24 A46",
    "+ A56(2) A62(2) A25 + A46(1) A62(1) A24 + A56(3) A61(1) A15 + A61(2) A14 A46(3) \
     + A46(2) A63(2) A34 + A56(1) A63(1) A35 \
     - A14 A46(2) A61(1) - A56(3) A62(1) A25 - A56(1) A61(2) A15 - A62(2) A24 A46(3) \
     - A46(1) A63(1) A34 - A56(2) A63(2) A35",
];

impl Potential {
    /// The potential `W_m`.
    pub fn model(m: u8) -> Potential {
        Potential::parse(POTENTIALS[m as usize - 1]).expect("built-in potential")
    }

    /// Parses `+ A16 A64 … - A16(2) …`.
    pub fn parse(s: &str) -> Result<Potential> {
        let bad = |t: &str| Error::Parse(format!("potential token {t:?}"));
        let mut terms: Vec<(i8, Vec<Arrow>)> = Vec::new();
        for tok in s.split_whitespace() {
            match tok {
                "+" => terms.push((1, Vec::new())),
                "-" => terms.push((-1, Vec::new())),
                _ => {
                    let body = tok.strip_prefix('A').ok_or_else(|| bad(tok))?;
                    let d = body.as_bytes();
                    if d.len() < 2 || !d[0].is_ascii_digit() || !d[1].is_ascii_digit() {
                        return Err(bad(tok));
                    }
                    let tag = match body[2..].strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
                        Some(t) => t.parse().map_err(|_| bad(tok))?,
                        None if body.len() == 2 => 0,
                        None => return Err(bad(tok)),
                    };
                    let a = Arrow { from: d[0] - b'0', to: d[1] - b'0', tag };
                    terms.last_mut().ok_or_else(|| bad(tok))?.1.push(a);
                }
            }
        }
        Ok(Potential { terms })
    }

    /// Quiver with one arrow per distinct arrow name.
    pub fn quiver(&self) -> Quiver {
        let mut arrows: Vec<Arrow> = self.terms.iter().flat_map(|t| t.1.iter().copied()).collect();
        arrows.sort();
        arrows.dedup();
        let mut q = Quiver::zero();
        for a in arrows {
            q.b[a.from as usize - 1][a.to as usize - 1] += 1;
            q.b[a.to as usize - 1][a.from as usize - 1] -= 1;
        }
        q
    }

    /// Every arrow in exactly one positive and one negative term, and every
    /// term a cycle. Returns the violations found.
    pub fn check(&self) -> Vec<String> {
        let mut errs = Vec::new();
        let mut count: std::collections::BTreeMap<Arrow, (u32, u32)> = Default::default();
        for (sign, w) in &self.terms {
            for (i, a) in w.iter().enumerate() {
                let nx = w[(i + 1) % w.len()];
                if a.to != nx.from {
                    errs.push(format!("term {w:?} is not a cycle"));
                }
                let e = count.entry(*a).or_default();
                if *sign > 0 {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (a, c) in count {
            if c != (1, 1) {
                errs.push(format!("arrow A{}{}({}) appears {:?} times (+,-)", a.from, a.to, a.tag, c));
            }
        }
        errs
    }

    /// The face cycle `(i, j, k, …)` of each term with the given sign.
    pub fn face_cycles(&self, sign: i8) -> Vec<Vec<u8>> {
        self.terms.iter().filter(|t| t.0 == sign).map(|t| t.1.iter().map(|a| a.from).collect()).collect()
    }
}

/// A quiver together with a cluster in the initial variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seed {
    pub quiver: Quiver,
    pub vars: Vec<LaurentPoly>,
    pub labels: Option<[Point; 6]>,
}

impl Seed {
    /// `Q_m` with the cluster `x1..x6` labelled by `Δ_m`.
    pub fn initial(m: u8) -> Seed {
        Seed {
            quiver: Quiver::model(m),
            vars: (1..=6).map(LaurentPoly::var).collect(),
            labels: Some(DELTA[m as usize - 1]),
        }
    }

    /// Mutation at `v` (1-based). Labels are dropped; only the named
    /// sequences below know how to transport them.
    pub fn mutate(&self, v: usize) -> Result<Seed> {
        let k = v - 1;
        let b = &self.quiver.b;
        let mut out = LaurentPoly::one();
        let mut inn = LaurentPoly::one();
        for i in 0..6 {
            if b[i][k] > 0 {
                inn = &inn * &self.vars[i].pow(b[i][k] as u32);
            } else if b[i][k] < 0 {
                out = &out * &self.vars[i].pow((-b[i][k]) as u32);
            }
        }
        let new = (&inn + &out).div_exact(&self.vars[k])?;
        let mut vars = self.vars.clone();
        vars[k] = new;
        Ok(Seed { quiver: self.quiver.mutate(v), vars, labels: None })
    }

    pub fn apply_sequence(&self, vs: &[usize]) -> Result<Seed> {
        let mut s = self.clone();
        let labels = self.labels;
        for &v in vs {
            s = s.mutate(v)?;
        }
        if vs.is_empty() {
            s.labels = labels;
        }
        Ok(s)
    }

    /// Multiset equality of clusters.
    pub fn same_cluster(&self, o: &Seed) -> bool {
        let mut a: Vec<String> = self.vars.iter().map(|p| p.to_string()).collect();
        let mut b: Vec<String> = o.vars.iter().map(|p| p.to_string()).collect();
        a.sort();
        b.sort();
        a == b
    }

    /// Superurban renewal: the six mutations `μ1 μ4 μ2 μ1 μ3 μ2` on a Model 4
    /// seed, followed by the relabelling [`SUPERURBAN_RELABEL`] that returns
    /// the quiver to `Q4` or its reversal, so the step can be repeated.
    ///
    /// Labels are transported by the point reflection through the midpoint of
    /// the labels of vertices 5 and 6 (the two vertices not mutated).
    pub fn superurban(&self) -> Result<Seed> {
        let found = self.quiver.classify();
        if found != Some(4) {
            return Err(Error::ModelMismatch { expected: 4, found });
        }
        let mut s = self.apply_sequence(&SUPERURBAN)?;
        s.labels = self.labels.map(|l| superurban_labels(&l));
        Ok(s.permuted(&SUPERURBAN_RELABEL))
    }

    /// Renames vertex `v` (0-based) to `perm[v]`.
    pub fn permuted(&self, perm: &[usize; 6]) -> Seed {
        let mut vars = self.vars.clone();
        let mut labels = self.labels;
        for i in 0..6 {
            vars[perm[i]] = self.vars[i].clone();
            if let (Some(out), Some(l)) = (labels.as_mut(), self.labels) {
                out[perm[i]] = l[i];
            }
        }
        Seed { quiver: self.quiver.permuted(perm), vars, labels }
    }
}

/// Vertex renaming (0-based) after [`SUPERURBAN`]: 3 -> 5 -> 6 -> 4 -> 3 in
/// 1-based names. Afterwards the quiver is `Q4` or `Q4` reversed.
pub const SUPERURBAN_RELABEL: [usize; 6] = [0, 1, 4, 2, 5, 3];

/// Labels right after the six mutations, before relabelling.
///
/// With `c = l5 + l6`, the mutated vertices get `c - l2`, `c - l3`, `c - l4`
/// and `c - l1`; on `Δ4` this is `(i, j, k) -> (-i, -j, 1 - k)`.
pub fn superurban_labels(l: &[Point; 6]) -> [Point; 6] {
    let c = (l[4].0 + l[5].0, l[4].1 + l[5].1, l[4].2 + l[5].2);
    let refl = |p: Point| (c.0 - p.0, c.1 - p.1, c.2 - p.2);
    [refl(l[1]), refl(l[2]), refl(l[3]), refl(l[0]), l[4], l[5]]
}

/// Seed of model `m` reached from the `Δ1` seed by `μ1`, `μ4`, `μ3`, with labels.
pub fn chain_seed(m: u8) -> Result<Seed> {
    let mut s = Seed::initial(1);
    for step in 0..(m as usize - 1) {
        let v = CHAIN[step];
        s = s.mutate(v)?;
        s.labels = Some(DELTA[step + 1]);
    }
    Ok(s)
}

/// Mutations taking the `Δ_m` seed back to the `Δ1` cluster.
pub fn back_to_model1(m: u8) -> Vec<usize> {
    CHAIN[..m as usize - 1].iter().rev().copied().collect()
}

/// Label of the variable created by a toric mutation at `v` (1-based): the
/// sum of the labels on the two incoming arrows minus the old label.
pub fn toric_label(q: &Quiver, labels: &[Point; 6], v: usize) -> Point {
    let k = v - 1;
    let mut acc = (-labels[k].0, -labels[k].1, -labels[k].2);
    for (i, l) in labels.iter().enumerate() {
        for _ in 0..q.b[i][k].max(0) {
            acc = (acc.0 + l.0, acc.1 + l.1, acc.2 + l.2);
        }
    }
    acc
}

/// Shortest sequence of toric mutations from the `Δ_m` seed after which some
/// vertex carries the label `p`, searched breadth-first over labelled
/// quivers. Returns the sequence and the vertex (1-based).
pub fn toric_route(m: u8, p: Point, max_states: usize) -> Result<(Vec<usize>, usize)> {
    use std::collections::{HashMap, VecDeque};
    let start = (Quiver::model(m), DELTA[m as usize - 1]);
    if let Some(i) = start.1.iter().position(|&l| l == p) {
        return Ok((Vec::new(), i + 1));
    }
    type State = (Quiver, [Point; 6]);
    let mut parent: HashMap<State, Option<(State, usize)>> = HashMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    while let Some(state) = queue.pop_front() {
        let (q, labels) = state;
        for v in (1..=6).filter(|&v| q.is_toric(v)) {
            let mut next = labels;
            next[v - 1] = toric_label(&q, &labels, v);
            let key = (q.mutate(v), next);
            if parent.contains_key(&key) {
                continue;
            }
            parent.insert(key, Some((state, v)));
            if next[v - 1] == p {
                let mut seq = Vec::new();
                let mut cur = key;
                while let Some(Some((prev, step))) = parent.get(&cur) {
                    seq.push(*step);
                    cur = *prev;
                }
                seq.reverse();
                return Ok((seq, v));
            }
            if parent.len() >= max_states {
                return Err(Error::Invalid(format!("{p:?} not reached within {max_states} toric seeds")));
            }
            queue.push_back(key);
        }
    }
    Err(Error::Invalid(format!("{p:?} is not reachable by toric mutations")))
}

/// `z` at `p` computed purely by mutating the `Δ_m` seed along [`toric_route`].
pub fn z_by_mutation(m: u8, p: Point, max_states: usize) -> Result<(Vec<usize>, LaurentPoly)> {
    let (seq, v) = toric_route(m, p, max_states)?;
    let s = Seed::initial(m).apply_sequence(&seq)?;
    Ok((seq, s.vars[v - 1].clone()))
}

/// `x_i` as a monomial polynomial; used in tests and fixtures.
pub fn x(i: usize) -> LaurentPoly {
    LaurentPoly::term(Monomial::var(i), 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    #[test]
    fn toric_routes_reach_formula_values() {
        for m in 1..=4u8 {
            for p in [(0, 0, 2), (1, -1, 1), (-1, 0, 2), (0, 1, -1)] {
                let (_, v) = z_by_mutation(m, p, 200_000).unwrap();
                assert_eq!(v, crate::formula::z(m, p).unwrap(), "model {m} {p:?}");
            }
        }
    }

    #[test]
    fn chain_reaches_each_model() {
        let mut q = Quiver::model(1);
        for (step, &v) in CHAIN.iter().enumerate() {
            q = q.mutate(v);
            assert_eq!(q, Quiver::model(step as u8 + 2));
            assert_eq!(q.classify(), Some(step as u8 + 2));
        }
        assert_eq!(Quiver::model(1).classify(), Some(1));
        assert_eq!(Quiver::zero().classify(), None);
    }

    #[test]
    fn potentials_are_consistent_and_match_quivers() {
        for m in 1..=4 {
            let w = Potential::model(m);
            assert!(w.check().is_empty(), "model {m}: {:?}", w.check());
            assert_eq!(w.quiver(), Quiver::model(m));
        }
    }

    #[test]
    fn toric_vertices() {
        assert!(Quiver::model(1).is_toric(1));
        assert!(!Quiver::zero().is_toric(1));
        // Vertex 6 of Q4 carries six arrows each way.
        assert_eq!(Quiver::model(4).degrees(6), (6, 6));
        assert!(!Quiver::model(4).is_toric(6));
    }

    #[test]
    fn first_mutation_gives_y1() {
        let s = Seed::initial(1).mutate(1).unwrap();
        assert_eq!(s.vars[0], poly("x1^-1*x3*x5 + x1^-1*x4*x6"));
        assert_eq!(s.quiver.classify(), Some(2));
    }

    #[test]
    fn model3_sequence_gives_primed_ys() {
        let s = Seed::initial(3).apply_sequence(&[4, 1]).unwrap();
        assert_eq!(s.vars[3], poly("x1*x2*x4^-1 + x3*x4^-1*x6"));
        assert_eq!(s.vars[0], poly("x2*x4^-1*x6 + x1^-1*x3*x4^-1*x6^2 + x1^-1*x3*x5"));
    }

    #[test]
    fn superurban_needs_model4() {
        assert!(matches!(Seed::initial(1).superurban(), Err(Error::ModelMismatch { .. })));
        let s = Seed::initial(4).superurban().unwrap();
        assert_eq!(s.quiver.classify(), Some(4));
        let q4 = Quiver::model(4);
        assert!(s.quiver == q4.reversed());
        assert!(s.superurban().unwrap().quiver == q4);
    }

    #[test]
    fn superurban_labels_follow_the_closed_forms() {
        let mut s = Seed::initial(4);
        for _ in 0..3 {
            s = s.superurban().unwrap();
            let labels = s.labels.unwrap();
            for v in 0..6 {
                assert_eq!(s.vars[v], crate::formula::z(4, labels[v]).unwrap(), "{:?}", labels[v]);
            }
        }
        let twice = Seed::initial(4).superurban().unwrap().superurban().unwrap();
        let mut got = twice.labels.unwrap().to_vec();
        let mut want: Vec<Point> = DELTA[3].iter().map(|&(i, j, k)| (i, j, k + 2)).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }
}
