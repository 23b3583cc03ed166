//! Torus-fixed G-clusters (G-graphs), their cones, and the fan of G-Hilb.
//!
//! A G-graph is found as the set of minimal monomials for a weight vector
//! `v` in the positive orthant; the fan is then built by walking across the
//! interior sides of each cone. Everything here works directly from the
//! character grading of monomials, and serves as the ground truth that the
//! combinatorial modules are checked against.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{Character, GroupData, LatticePoint, Monomial};

/// A divisor-closed set of monomials with one monomial per character.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GGraph {
    pub id: usize,
    /// `basis[chi]` is the monomial of character `chi`.
    basis: Vec<Monomial>,
}

impl GGraph {
    pub fn from_basis(id: usize, basis: Vec<Monomial>) -> Self {
        GGraph { id, basis }
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn monomial(&self, chi: Character) -> Monomial {
        self.basis[chi.index()]
    }

    pub fn contains(&self, g: &GroupData, m: &Monomial) -> bool {
        self.basis[g.character_of(m).index()] == *m
    }

    /// Characters whose monomial has no multiple by a variable inside the graph.
    pub fn socle(&self, g: &GroupData) -> Vec<Character> {
        g.characters()
            .filter(|&c| {
                let m = self.monomial(c);
                (0..3).all(|i| !self.contains(g, &m.times_var(i)))
            })
            .collect()
    }

    /// Checks one-per-character, unit membership and divisor closure.
    pub fn validate(&self, g: &GroupData) -> Result<()> {
        if self.basis.len() != g.order() as usize {
            return Err(Error::Invariant(format!(
                "graph {} has {} monomials, expected {}",
                self.id,
                self.basis.len(),
                g.order()
            )));
        }
        if self.basis[0] != Monomial::ONE {
            return Err(Error::Invariant(format!(
                "graph {} misses the unit monomial",
                self.id
            )));
        }
        for c in g.characters() {
            let m = self.monomial(c);
            if g.character_of(&m) != c {
                return Err(Error::Invariant(format!(
                    "graph {}: {m} sits in the slot of character {}",
                    self.id, c.0
                )));
            }
            if m.0.iter().any(|&e| e > g.order()) {
                return Err(Error::Invariant(format!(
                    "graph {}: {m} leaves the exponent box",
                    self.id
                )));
            }
            for i in 0..3 {
                if m.0[i] > 0 {
                    let mut d = m.0;
                    d[i] -= 1;
                    if !self.contains(g, &Monomial(d)) {
                        return Err(Error::Invariant(format!(
                            "graph {}: {m} is in but a divisor is not",
                            self.id
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Exponent differences `e(x_i b) - e(basis[chi(x_i b)])` over all
    /// `x_i b` outside the graph; the cone is where all of them pair
    /// nonnegatively.
    pub fn cone_inequalities(&self, g: &GroupData) -> Vec<[i64; 3]> {
        let mut out = Vec::new();
        for b in &self.basis {
            for i in 0..3 {
                let m = b.times_var(i);
                let rep = self.basis[g.character_of(&m).index()];
                if rep != m {
                    out.push(rep.log_ratio(&m));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// One line per character, monomials as `x^a y^b z^c`.
    pub fn dump(&self, g: &GroupData) -> String {
        let parts: Vec<String> = g
            .characters()
            .map(|c| format!("{}:{}", g.char_label(c), self.monomial(c)))
            .collect();
        parts.join(" ")
    }
}

impl fmt::Display for GGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|m| m.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn dot(a: &[i64; 3], b: &[u32; 3]) -> i64 {
    (0..3).map(|i| a[i] * b[i] as i64).sum()
}

/// The G-graph of monomials minimizing `v`, ties broken first by `w` and then
/// lexicographically on exponents.
///
/// The combined order is a monomial order, so the minimizers are divisor
/// closed and a best-first search from `1` reaches every one of them.
pub fn minimal_graph(g: &GroupData, v: [i64; 3], w: Option<[i64; 3]>) -> Result<GGraph> {
    if v.iter().any(|&t| t <= 0) {
        return Err(Error::Usage(format!(
            "weight vector {v:?} must be strictly positive"
        )));
    }
    let w = w.unwrap_or([0, 0, 0]);
    let n = g.order() as usize;
    let mut basis: Vec<Option<Monomial>> = vec![None; n];
    let mut found = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0i64, 0i64, Monomial::ONE)));
    while let Some(Reverse((_, _, m))) = heap.pop() {
        let c = g.character_of(&m).index();
        if basis[c].is_some() {
            continue;
        }
        basis[c] = Some(m);
        found += 1;
        if found == n {
            break;
        }
        for i in 0..3 {
            let next = m.times_var(i);
            heap.push(Reverse((dot(&v, &next.0), dot(&w, &next.0), next)));
        }
    }
    let basis = basis.into_iter().map(|m| m.expect("every slot filled")).collect();
    Ok(GGraph { id: 0, basis })
}

/// The cone of a G-graph, described by its facet normals and rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphCone {
    /// Inward primitive integer normals, one per side.
    pub normals: Vec<[i64; 3]>,
    /// Indices into the junior point list, sorted.
    pub rays: [usize; 3],
}

/// The fan of G-Hilb: junior points and one maximal cone per torus-fixed point.
#[derive(Clone, Debug)]
pub struct Fan {
    pub points: Vec<LatticePoint>,
    pub cells: Vec<(GGraph, GraphCone)>,
}

pub fn det3(a: &[i64; 3], b: &[i64; 3], c: &[i64; 3]) -> i64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

pub fn cross(a: &[i64; 3], b: &[i64; 3]) -> [i64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn primitive(v: [i64; 3]) -> [i64; 3] {
    use num_integer::Integer;
    let d = v[0].gcd(&v[1]).gcd(&v[2]);
    if d == 0 {
        v
    } else {
        v.map(|t| t / d)
    }
}

/// Two junior points lie on a common side of the simplex.
pub fn on_same_side(p: &LatticePoint, q: &LatticePoint) -> bool {
    (0..3).any(|i| p.num[i] == 0 && q.num[i] == 0)
}

fn cone_of(g: &GroupData, points: &[LatticePoint], graph: &GGraph) -> Result<GraphCone> {
    let ineqs = graph.cone_inequalities(g);
    let inside: Vec<usize> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| ineqs.iter().all(|d| (0..3).map(|i| d[i] * p.num[i]).sum::<i64>() >= 0))
        .map(|(k, _)| k)
        .collect();
    if inside.len() != 3 {
        return Err(Error::Fan(format!(
            "cone of graph {graph} contains {} junior points, expected 3",
            inside.len()
        )));
    }
    let rays = [inside[0], inside[1], inside[2]];
    let [a, b, c] = rays.map(|k| points[k].num);
    let det = det3(&a, &b, &c).abs() as i128;
    let l = g.exponent() as i128;
    if det * g.order() as i128 != l * l * l {
        return Err(Error::Fan(format!(
            "cone with rays {}, {}, {} is not unimodular",
            points[rays[0]], points[rays[1]], points[rays[2]]
        )));
    }
    let mut normals = Vec::new();
    for (p, q, r) in [(a, b, c), (b, c, a), (c, a, b)] {
        let mut n = primitive(cross(&p, &q));
        if (0..3).map(|i| n[i] * r[i]).sum::<i64>() < 0 {
            n = n.map(|t| -t);
        }
        normals.push(n);
    }
    Ok(GraphCone { normals, rays })
}

/// Builds the fan by walking from the cone containing `(1,1,1)` across every
/// interior side.
pub fn walk_fan(g: &GroupData) -> Result<Fan> {
    let points = g.junior_points();
    let mut cells: Vec<(GGraph, GraphCone)> = Vec::new();
    let mut seen: HashMap<Vec<Monomial>, usize> = HashMap::new();
    let mut queue = VecDeque::new();

    let start = minimal_graph(g, [1, 1, 1], None)?;
    start.validate(g)?;
    let cone = cone_of(g, &points, &start)?;
    seen.insert(start.basis.clone(), 0);
    cells.push((start, cone));
    queue.push_back(0);

    while let Some(k) = queue.pop_front() {
        let rays = cells[k].1.rays;
        for s in 0..3 {
            let (p, q, apex) = (rays[s], rays[(s + 1) % 3], rays[(s + 2) % 3]);
            if on_same_side(&points[p], &points[q]) {
                continue;
            }
            let (pn, qn, an) = (points[p].num, points[q].num, points[apex].num);
            let v = [pn[0] + qn[0], pn[1] + qn[1], pn[2] + qn[2]];
            let w = [v[0] - 2 * an[0], v[1] - 2 * an[1], v[2] - 2 * an[2]];
            let mut next = minimal_graph(g, v, Some(w))?;
            if seen.contains_key(&next.basis) {
                continue;
            }
            next.validate(g)?;
            let cone = cone_of(g, &points, &next)?;
            if !(cone.rays.contains(&p) && cone.rays.contains(&q)) || cone.rays.contains(&apex) {
                return Err(Error::Fan(format!(
                    "crossing side {}-{} did not reach a neighbouring cone",
                    points[p], points[q]
                )));
            }
            next.id = cells.len();
            seen.insert(next.basis.clone(), next.id);
            queue.push_back(next.id);
            cells.push((next, cone));
        }
    }
    let fan = Fan { points, cells };
    validate_fan(g, &fan)?;
    Ok(fan)
}

/// Cone count equals the group order and each interior side is shared by
/// exactly two cones, each boundary side by one.
pub fn validate_fan(g: &GroupData, fan: &Fan) -> Result<()> {
    if fan.cells.len() != g.order() as usize {
        return Err(Error::Fan(format!(
            "{} cones but the group has order {}",
            fan.cells.len(),
            g.order()
        )));
    }
    let mut sides: HashMap<(usize, usize), usize> = HashMap::new();
    for (_, cone) in &fan.cells {
        let r = cone.rays;
        for s in 0..3 {
            let (a, b) = (r[s], r[(s + 1) % 3]);
            *sides.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    for (&(a, b), &n) in &sides {
        let want = if on_same_side(&fan.points[a], &fan.points[b]) { 1 } else { 2 };
        if n != want {
            return Err(Error::Fan(format!(
                "side {}-{} lies in {n} cones, expected {want}",
                fan.points[a], fan.points[b]
            )));
        }
    }
    Ok(())
}

/// Characters whose monomials differ between two graphs.
pub fn gigsaw_oracle(a: &GGraph, b: &GGraph) -> Vec<Character> {
    a.basis
        .iter()
        .zip(&b.basis)
        .enumerate()
        .filter(|(_, (x, y))| x != y)
        .map(|(k, _)| Character(k as u32))
        .collect()
}

/// The exponent `k` with `to[rho] / from[rho] = ratio^k`, where `ratio` is the
/// signed exponent vector of an invariant ratio.
pub fn ratio_exponent(from: &GGraph, to: &GGraph, ratio: &[i64; 3], rho: Character) -> Result<i64> {
    let d = from.monomial(rho).log_ratio(&to.monomial(rho));
    let i = (0..3)
        .find(|&i| ratio[i] != 0)
        .ok_or_else(|| Error::Fan("zero ratio".into()))?;
    if d[i] % ratio[i] != 0 {
        return Err(Error::Fan(format!(
            "monomials of character {} differ by {d:?}, not a power of {ratio:?}",
            rho.0
        )));
    }
    let k = d[i] / ratio[i];
    if (0..3).any(|j| d[j] != k * ratio[j]) {
        return Err(Error::Fan(format!(
            "monomials of character {} differ by {d:?}, not a power of {ratio:?}",
            rho.0
        )));
    }
    Ok(k)
}
