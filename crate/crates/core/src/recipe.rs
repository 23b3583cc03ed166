//! Reid's recipe: characters on curves and divisors, chains, and the del
//! Pezzo character selected by a curve.

use std::collections::{BTreeMap, BTreeSet};

use crate::cluster::{cross, primitive, ratio_exponent};
use crate::error::{Error, Result};
use crate::group::{Character, Monomial};
use crate::triangulation::{Triangulation, VertexKind};

/// Markings of every compact edge and interior vertex.
#[derive(Clone, Debug)]
pub struct Recipe {
    /// `None` for the sides of the simplex.
    pub edge_marks: Vec<Option<Character>>,
    /// Invariant ratio `m1 / m2` of each compact edge.
    pub ratios: Vec<Option<(Monomial, Monomial)>>,
    /// Sorted; empty for vertices on the boundary.
    pub vertex_marks: Vec<Vec<Character>>,
    chains: BTreeMap<Character, Chain>,
}

/// All edges marked with one character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    pub character: Character,
    /// Sorted edge indices.
    pub edges: Vec<usize>,
    /// Sorted vertex indices.
    pub vertices: Vec<usize>,
}

impl Chain {
    /// Chain edges at a vertex.
    pub fn edges_at(&self, t: &Triangulation, v: usize) -> Vec<usize> {
        t.vertices[v]
            .edges
            .iter()
            .copied()
            .filter(|e| self.edges.binary_search(e).is_ok())
            .collect()
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Interior vertices the chain passes through (at least two chain edges).
    pub fn inner_vertices(&self, t: &Triangulation) -> Vec<usize> {
        self.vertices
            .iter()
            .copied()
            .filter(|&v| t.vertices[v].is_interior() && self.edges_at(t, v).len() >= 2)
            .collect()
    }
}

/// Primitive invariant ratio of a compact edge, oriented so that the
/// numerator has the larger degree (ties: lexicographically larger).
pub fn edge_ratio(t: &Triangulation, e: usize) -> Result<(Monomial, Monomial)> {
    let g = &t.group;
    let [a, b] = t.edges[e].v;
    let n = primitive(cross(&t.vertices[a].point.num, &t.vertices[b].point.num));
    if n == [0, 0, 0] {
        return Err(Error::Fan(format!("edge {e} is degenerate")));
    }
    let k = g.char_order(g.character_of_exponents(&n)) as i64;
    let n = n.map(|x| x * k);
    let (p, q) = Monomial::split(n);
    let (m1, m2) = if (p.degree(), p.0) >= (q.degree(), q.0) {
        (p, q)
    } else {
        (q, p)
    };
    if g.character_of(&m1) != g.character_of(&m2) {
        return Err(Error::Invariant(format!(
            "ratio {m1}/{m2} of edge {e} is not invariant"
        )));
    }
    Ok((m1, m2))
}

/// The mark and the oriented ratio of every edge.
pub type EdgeMarks = (Vec<Option<Character>>, Vec<Option<(Monomial, Monomial)>>);

/// Marks every compact edge by the character of its ratio.
pub fn mark_edges(t: &Triangulation) -> Result<EdgeMarks> {
    let mut marks = Vec::with_capacity(t.edges.len());
    let mut ratios = Vec::with_capacity(t.edges.len());
    for e in 0..t.edges.len() {
        if !t.edges[e].is_compact() {
            marks.push(None);
            ratios.push(None);
            continue;
        }
        let (m1, m2) = edge_ratio(t, e)?;
        let c = t.group.character_of(&m1);
        if c.is_trivial() {
            return Err(Error::Invariant(format!("edge {e} is marked trivially")));
        }
        marks.push(Some(c));
        ratios.push(Some((m1, m2)));
    }
    Ok((marks, ratios))
}

/// Marks every interior vertex by the characters in the socle of all
/// clusters around it.
pub fn mark_vertices(t: &Triangulation) -> Result<Vec<Vec<Character>>> {
    let g = &t.group;
    let mut out = vec![Vec::new(); t.vertices.len()];
    let mut socles: Vec<Option<BTreeSet<Character>>> = vec![None; t.triangles.len()];
    for v in t.interior_vertices() {
        let mut acc: Option<BTreeSet<Character>> = None;
        for (k, tri) in t.triangles.iter().enumerate() {
            if !tri.v.contains(&v) {
                continue;
            }
            let s = socles[k]
                .get_or_insert_with(|| t.graphs[tri.graph].socle(g).into_iter().collect())
                .clone();
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersection(&s).copied().collect(),
            });
        }
        let marks: Vec<Character> = acc.unwrap_or_default().into_iter().collect();
        let want = if t.vertices[v].kind == VertexKind::DelPezzo6 { 2 } else { 1 };
        if marks.len() != want || marks.iter().any(|c| c.is_trivial()) {
            return Err(Error::Invariant(format!(
                "vertex {} ({:?}) has socle marks {:?}",
                t.vertices[v].point,
                t.vertices[v].kind,
                marks.iter().map(|c| c.0).collect::<Vec<_>>()
            )));
        }
        out[v] = marks;
    }
    Ok(out)
}

impl Recipe {
    pub fn compute(t: &Triangulation) -> Result<Self> {
        let (edge_marks, ratios) = mark_edges(t)?;
        let vertex_marks = mark_vertices(t)?;
        let mut by_char: BTreeMap<Character, Vec<usize>> = BTreeMap::new();
        for (e, m) in edge_marks.iter().enumerate() {
            if let Some(c) = m {
                by_char.entry(*c).or_default().push(e);
            }
        }
        let mut chains = BTreeMap::new();
        for (c, edges) in by_char {
            chains.insert(c, build_chain(t, c, edges)?);
        }
        Ok(Recipe {
            edge_marks,
            ratios,
            vertex_marks,
            chains,
        })
    }

    pub fn mark(&self, e: usize) -> Option<Character> {
        self.edge_marks[e]
    }

    /// The chain of `chi`, if `chi` marks some edge.
    pub fn chain(&self, chi: Character) -> Option<&Chain> {
        self.chains.get(&chi)
    }

    pub fn chains(&self) -> impl Iterator<Item = &Chain> {
        self.chains.values()
    }

    /// The chain containing edge `e`.
    pub fn chain_of(&self, e: usize) -> Result<&Chain> {
        let c = self.edge_marks[e]
            .ok_or_else(|| Error::Usage(format!("edge {e} is not a compact curve")))?;
        Ok(&self.chains[&c])
    }

    /// Signed exponent vector of the edge ratio `m1 / m2`.
    pub fn ratio_vector(&self, e: usize) -> Option<[i64; 3]> {
        self.ratios[e].map(|(m1, m2)| m2.log_ratio(&m1))
    }

    /// Triangles `(tau, tau')` on a compact edge, ordered so that the
    /// marking character moves by exactly one ratio step from `tau` to `tau'`.
    pub fn oriented_triangles(&self, t: &Triangulation, e: usize) -> Result<(usize, usize)> {
        let chi = self.edge_marks[e]
            .ok_or_else(|| Error::Usage(format!("edge {e} is not a compact curve")))?;
        let n = self.ratio_vector(e).expect("compact edge has a ratio");
        let (a, b) = (t.edges[e].triangles[0], t.edges[e].triangles[1]);
        let k = ratio_exponent(&t.graphs[a], &t.graphs[b], &n, chi)?;
        match k {
            1 => Ok((a, b)),
            -1 => Ok((b, a)),
            _ => Err(Error::Invariant(format!(
                "marking character of edge {e} moves by {k} ratio steps"
            ))),
        }
    }

    /// Degree of the tautological bundle of `rho` on the curve of edge `e`.
    pub fn degree(&self, t: &Triangulation, rho: Character, e: usize) -> Result<i64> {
        let (a, b) = self.oriented_triangles(t, e)?;
        let n = self.ratio_vector(e).expect("compact edge has a ratio");
        let k = ratio_exponent(&t.graphs[a], &t.graphs[b], &n, rho)?;
        if k < 0 {
            return Err(Error::Invariant(format!(
                "character {} has negative degree {k} on edge {e}",
                rho.0
            )));
        }
        Ok(k)
    }

    /// The unique mark `phi` of the del Pezzo vertex `d` whose monomial is
    /// divisible by the monomial of the curve's character on both triangles
    /// adjacent to the curve.
    pub fn chi_dp(&self, t: &Triangulation, c: usize, d: usize) -> Result<Character> {
        let chi = self.edge_marks[c]
            .ok_or_else(|| Error::Usage(format!("edge {c} is not a compact curve")))?;
        if t.vertices[d].kind != VertexKind::DelPezzo6 {
            return Err(Error::Usage(format!("vertex {d} is not a del Pezzo vertex")));
        }
        let mut picks = Vec::new();
        for &tri in &t.edges[c].triangles {
            let gr = &t.graphs[t.triangles[tri].graph];
            let r = gr.monomial(chi);
            let q: Vec<Character> = self.vertex_marks[d]
                .iter()
                .copied()
                .filter(|&phi| r.divides(&gr.monomial(phi)))
                .collect();
            picks.push(q);
        }
        if picks[0] != picks[1] || picks[0].len() != 1 {
            return Err(Error::Invariant(format!(
                "del Pezzo character for edge {c} at vertex {d} is not unique: {:?}",
                picks
                    .iter()
                    .map(|p| p.iter().map(|c| c.0).collect::<Vec<_>>())
                    .collect::<Vec<_>>()
            )));
        }
        Ok(picks[0][0])
    }

    /// Characters appearing on at least two edges at `v`, with repeats for
    /// four or more.
    pub fn paired_marks(&self, t: &Triangulation, v: usize) -> Vec<Character> {
        let mut count: BTreeMap<Character, usize> = BTreeMap::new();
        for &e in &t.vertices[v].edges {
            if let Some(c) = self.edge_marks[e] {
                *count.entry(c).or_default() += 1;
            }
        }
        let mut out = Vec::new();
        for (c, n) in count {
            for _ in 0..n / 2 {
                out.push(c);
            }
        }
        out
    }

    /// Checks the vertex marks against the tensor rules on incident edges:
    /// three equal lines give `chi^2`, two pairs give `chi chi'`, three
    /// pairs give `phi phi'`. Returns the characters of the lines used.
    pub fn tensor_rule(&self, t: &Triangulation, v: usize) -> Result<Vec<Character>> {
        let g = &t.group;
        let marks = &self.vertex_marks[v];
        let lines: Vec<Character> = t.vertices[v]
            .edges
            .iter()
            .filter_map(|&e| self.edge_marks[e])
            .collect();
        let fail = || {
            Error::Invariant(format!(
                "vertex {} marked {:?} breaks the tensor rule for lines {:?}",
                t.vertices[v].point,
                marks.iter().map(|c| c.0).collect::<Vec<_>>(),
                lines.iter().map(|c| c.0).collect::<Vec<_>>()
            ))
        };
        match t.vertices[v].kind {
            VertexKind::Trivalent => {
                if lines.len() == 3 && lines.iter().all(|&c| c == lines[0]) && marks[0] == g.scale(lines[0], 2) {
                    Ok(vec![lines[0]])
                } else {
                    Err(fail())
                }
            }
            VertexKind::Hirzebruch => {
                let pairs = self.paired_marks(t, v);
                for i in 0..pairs.len() {
                    for j in i + 1..pairs.len() {
                        if g.add(pairs[i], pairs[j]) == marks[0] {
                            return Ok(vec![pairs[i], pairs[j]]);
                        }
                    }
                }
                Err(fail())
            }
            VertexKind::DelPezzo6 => {
                let pairs = self.paired_marks(t, v);
                let s = g.add(marks[0], marks[1]);
                if pairs.len() == 3 && g.add(g.add(pairs[0], pairs[1]), pairs[2]) == s {
                    Ok(pairs)
                } else {
                    Err(fail())
                }
            }
            _ => Ok(Vec::new()),
        }
    }

    /// Characters marking Hirzebruch (or trivalent) vertices the chain
    /// passes through.
    pub fn hirz(&self, t: &Triangulation, chi: Character) -> Vec<Character> {
        let mut out = BTreeSet::new();
        if let Some(ch) = self.chain(chi) {
            for v in ch.inner_vertices(t) {
                if t.vertices[v].kind != VertexKind::DelPezzo6 {
                    out.extend(self.vertex_marks[v].iter().copied());
                }
            }
        }
        out.into_iter().collect()
    }
}

fn build_chain(t: &Triangulation, c: Character, edges: Vec<usize>) -> Result<Chain> {
    let mut verts = BTreeSet::new();
    for &e in &edges {
        verts.extend(t.edges[e].v);
    }
    let vertices: Vec<usize> = verts.into_iter().collect();
    if edges.len() + 1 != vertices.len() {
        return Err(Error::Invariant(format!(
            "chain of {} has {} edges on {} vertices, so it is not a tree",
            c.0,
            edges.len(),
            vertices.len()
        )));
    }
    // connectivity by flood fill
    let mut seen = BTreeSet::from([vertices[0]]);
    let mut stack = vec![vertices[0]];
    while let Some(v) = stack.pop() {
        for &e in &edges {
            let [a, b] = t.edges[e].v;
            let w = if a == v {
                b
            } else if b == v {
                a
            } else {
                continue;
            };
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != vertices.len() {
        return Err(Error::Invariant(format!("chain of {} is disconnected", c.0)));
    }
    Ok(Chain {
        character: c,
        edges,
        vertices,
    })
}
