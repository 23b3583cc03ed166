//! The unlocking procedure: total G-igsaw pieces of exceptional curves
//! computed from Reid's recipe alone.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Character;
use crate::recipe::{Chain, Recipe};
use crate::triangulation::{CurveType, Triangulation, VertexKind};

/// Step of the procedure that contributed a character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Step {
    /// the curve's own character
    Ch,
    /// one mark of a del Pezzo divisor on the chain
    #[serde(rename = "dP")]
    Dp,
    /// the mark of a Hirzebruch divisor on the chain
    H1,
    /// inherited from a downstream curve
    H2,
}

/// Node of a chain quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum QuiverNode {
    /// base point in the interior of an edge
    Base(usize),
    Vertex(usize),
}

/// Chain segment between two quiver nodes, oriented away from the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
    /// chain edges covered, in order from tail to head
    pub edges: Vec<usize>,
}

/// Landmarks of the chain through a curve that is not a (-1,-1)-curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundaryFrame {
    /// corner of the simplex the curve points at
    pub corner: usize,
    /// endpoint of the curve nearer the corner
    pub v1: usize,
    /// endpoint of the curve farther from the corner
    pub v2: usize,
    /// last vertex of the straight run starting at the corner
    pub v_c: usize,
    /// end of the run of (-1,-1)-curves after `v_c`
    pub v_c_prime: usize,
}

/// The chain of a curve's character viewed as an oriented graph.
#[derive(Clone, Debug)]
pub struct ChainQuiver {
    pub curve: usize,
    pub character: Character,
    pub nodes: Vec<QuiverNode>,
    pub arrows: Vec<Arrow>,
    /// `None` for (-1,-1)-curves
    pub frame: Option<BoundaryFrame>,
    /// chain edge -> (tail vertex, head vertex) on the supported part
    pub orientation: BTreeMap<usize, (usize, usize)>,
}

impl ChainQuiver {
    /// Chain edges leaving `v`.
    pub fn outgoing(&self, v: usize) -> Vec<usize> {
        self.orientation
            .iter()
            .filter(|(_, &(tail, _))| tail == v)
            .map(|(&e, _)| e)
            .collect()
    }

    fn node(&self, n: QuiverNode) -> Option<usize> {
        self.nodes.iter().position(|&m| m == n)
    }
}

/// Downstream divisors of a curve and the downstream curves in each.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Downstream {
    pub divisors: Vec<usize>,
    pub curves: BTreeMap<usize, Vec<usize>>,
}

/// One contribution to a G-igsaw piece.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub character: u32,
    pub step: Step,
    /// divisor responsible, for `dP`, `H1` and `H2`
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub vertex: Option<usize>,
    /// downstream curve, for `H2`
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub via: Option<usize>,
}

/// Total G-igsaw piece of a curve with the step that produced each character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GigsawPiece {
    pub curve: usize,
    /// sorted, without repeats
    pub characters: Vec<Character>,
    /// first contribution of every character
    pub trace: Vec<TraceEntry>,
}

fn is_hirzebruch(t: &Triangulation, v: usize) -> bool {
    matches!(
        t.vertices[v].kind,
        VertexKind::Hirzebruch | VertexKind::Trivalent
    )
}

fn is_node_vertex(t: &Triangulation, chain: &Chain, v: usize) -> bool {
    is_hirzebruch(t, v) || chain.edges_at(t, v).len() == 1
}

fn compact_marked(t: &Triangulation, r: &Recipe, c: usize) -> Result<Character> {
    if c >= t.edges.len() || !t.edges[c].is_compact() {
        return Err(Error::Usage(format!("edge {c} is not a compact curve")));
    }
    r.mark(c)
        .ok_or_else(|| Error::Usage(format!("edge {c} is not marked")))
}

/// Orients the chain edges reachable from `start` away from it, never
/// crossing `skip`.
fn orient_from(
    t: &Triangulation,
    chain: &Chain,
    start: usize,
    skip: &BTreeSet<usize>,
    out: &mut BTreeMap<usize, (usize, usize)>,
) {
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for e in chain.edges_at(t, v) {
            if skip.contains(&e) || out.contains_key(&e) {
                continue;
            }
            let w = t.edges[e].other(v);
            out.insert(e, (v, w));
            stack.push(w);
        }
    }
}

/// Splits an orientation into arrows between node vertices.
fn build_arrows(
    t: &Triangulation,
    chain: &Chain,
    orientation: &BTreeMap<usize, (usize, usize)>,
    starts: &[(QuiverNode, usize, usize)],
    nodes: &mut Vec<QuiverNode>,
) -> Vec<Arrow> {
    let index = |nodes: &mut Vec<QuiverNode>, n: QuiverNode| match nodes.iter().position(|&m| m == n) {
        Some(i) => i,
        None => {
            nodes.push(n);
            nodes.len() - 1
        }
    };
    let mut arrows = Vec::new();
    // (tail node, first edge, vertex the first edge starts at)
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &(n, e, _) in starts {
        let i = index(nodes, n);
        queue.push((i, e));
    }
    while let Some((tail, first)) = queue.pop() {
        let mut edges = vec![first];
        let mut head = orientation[&first].1;
        loop {
            if is_node_vertex(t, chain, head) {
                break;
            }
            let next: Vec<usize> = orientation
                .iter()
                .filter(|(_, &(a, _))| a == head)
                .map(|(&e, _)| e)
                .collect();
            if next.len() != 1 {
                break;
            }
            edges.push(next[0]);
            head = orientation[&next[0]].1;
        }
        let h = index(nodes, QuiverNode::Vertex(head));
        for (&e, &(a, _)) in orientation {
            if a == head {
                queue.push((h, e));
            }
        }
        arrows.push(Arrow { tail, head: h, edges });
    }
    arrows.sort_by(|a, b| (a.tail, a.head, &a.edges).cmp(&(b.tail, b.head, &b.edges)));
    arrows
}

/// The chain quiver of a compact curve.
pub fn xi_quiver(t: &Triangulation, r: &Recipe, c: usize) -> Result<ChainQuiver> {
    let chi = compact_marked(t, r, c)?;
    let chain = r.chain_of(c)?;
    let mut orientation = BTreeMap::new();
    let mut nodes = Vec::new();
    if t.edges[c].curve_type == CurveType::MinusOneMinusOne {
        let [a, b] = t.edges[c].v;
        let skip = BTreeSet::from([c]);
        orient_from(t, chain, a, &skip, &mut orientation);
        orient_from(t, chain, b, &skip, &mut orientation);
        nodes.push(QuiverNode::Base(c));
        // the two halves of the base edge
        let mut arrows = Vec::new();
        let mut starts = Vec::new();
        for v in [a, b] {
            if is_node_vertex(t, chain, v) {
                let h = nodes.len();
                nodes.push(QuiverNode::Vertex(v));
                arrows.push(Arrow {
                    tail: 0,
                    head: h,
                    edges: vec![c],
                });
                for (&e, &(x, _)) in &orientation {
                    if x == v {
                        starts.push((QuiverNode::Vertex(v), e, v));
                    }
                }
            } else {
                for (&e, &(x, _)) in &orientation {
                    if x == v {
                        starts.push((QuiverNode::Base(c), e, v));
                    }
                }
            }
        }
        let mut rest = build_arrows(t, chain, &orientation, &starts, &mut nodes);
        // arrows leaving the base through a non-node endpoint start with c
        for ar in rest.iter_mut() {
            if ar.tail == 0 {
                ar.edges.insert(0, c);
            }
        }
        arrows.extend(rest);
        return Ok(ChainQuiver {
            curve: c,
            character: chi,
            nodes,
            arrows,
            frame: None,
            orientation,
        });
    }
    // straight run from v1 through v2 to v_c, then (-1,-1) curves to v'_c
    let (frame, path) = frame_and_path(t, r, c)?;
    let mut prev = frame.v1;
    for &e in &path {
        let w = t.edges[e].other(prev);
        orientation.insert(e, (prev, w));
        prev = w;
    }
    let start = [(QuiverNode::Vertex(frame.v2), path[1.min(path.len() - 1)], frame.v2)];
    nodes.push(QuiverNode::Vertex(frame.v2));
    let supported: BTreeMap<usize, (usize, usize)> =
        orientation.iter().filter(|(&e, _)| e != c).map(|(&e, &o)| (e, o)).collect();
    let arrows = if supported.is_empty() {
        Vec::new()
    } else {
        build_arrows(t, chain, &supported, &start, &mut nodes)
    };
    let last = QuiverNode::Vertex(frame.v_c_prime);
    if !nodes.contains(&last) {
        nodes.push(last);
    }
    Ok(ChainQuiver {
        curve: c,
        character: chi,
        nodes,
        arrows,
        frame: Some(frame),
        orientation: supported,
    })
}

/// Locates the corner, `v_c` and `v'_c` for a curve that is not (-1,-1).
pub fn boundary_frame(t: &Triangulation, r: &Recipe, c: usize) -> Result<BoundaryFrame> {
    Ok(frame_and_path(t, r, c)?.0)
}

/// The frame together with the chain edges from `v1` to `v'_c`, starting
/// with the curve itself.
fn frame_and_path(t: &Triangulation, r: &Recipe, c: usize) -> Result<(BoundaryFrame, Vec<usize>)> {
    let chain = r.chain_of(c)?;
    let [a, b] = t.edges[c].v;
    let corners: Vec<usize> = (0..t.vertices.len())
        .filter(|&k| t.vertices[k].point.is_corner() && t.collinear(k, a, b))
        .collect();
    if corners.len() != 1 {
        return Err(Error::Invariant(format!(
            "curve {c} is collinear with {} corners of the simplex",
            corners.len()
        )));
    }
    let corner = corners[0];
    let dist = |v: usize| -> i64 {
        let (p, q) = (t.vertices[v].point.num, t.vertices[corner].point.num);
        (0..3).map(|i| (p[i] - q[i]).abs()).sum()
    };
    let (v1, v2) = if dist(a) < dist(b) { (a, b) } else { (b, a) };
    // walk straight away from the corner
    let mut v_c = v2;
    let mut came = c;
    let mut path = vec![c];
    loop {
        let next: Vec<usize> = chain
            .edges_at(t, v_c)
            .into_iter()
            .filter(|&e| e != came && t.parallel(e, c) && dist(t.edges[e].other(v_c)) > dist(v_c))
            .collect();
        match next.as_slice() {
            [] => break,
            [e] => {
                came = *e;
                path.push(came);
                v_c = t.edges[*e].other(v_c);
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "chain of curve {c} continues straight in two ways"
                )))
            }
        }
    }
    // follow (-1,-1) curves of the chain
    let mut v_c_prime = v_c;
    loop {
        let next: Vec<usize> = chain
            .edges_at(t, v_c_prime)
            .into_iter()
            .filter(|&e| e != came && t.edges[e].curve_type == CurveType::MinusOneMinusOne)
            .collect();
        match next.as_slice() {
            [] => break,
            [e] => {
                came = *e;
                path.push(came);
                v_c_prime = t.edges[*e].other(v_c_prime);
            }
            _ => {
                return Err(Error::Invariant(format!(
                    "(-1,-1) part of the chain of curve {c} branches"
                )))
            }
        }
    }
    let frame = BoundaryFrame {
        corner,
        v1,
        v2,
        v_c,
        v_c_prime,
    };
    Ok((frame, path))
}

/// True when the chain of `rho` stops or bends at `v`.
pub fn broken_at(t: &Triangulation, r: &Recipe, rho: Character, v: usize) -> bool {
    let Some(chain) = r.chain(rho) else {
        return true;
    };
    let at = chain.edges_at(t, v);
    match at.len() {
        0 | 1 => true,
        2 => !t.parallel(at[0], at[1]),
        _ => true,
    }
}

/// (-1,-1)-curves at `d` other than the chain, in the regular triangle of
/// some chain curve leaving `d`.
fn ahead_of(t: &Triangulation, r: &Recipe, q: &ChainQuiver, d: usize) -> BTreeSet<usize> {
    let mut regions = BTreeSet::new();
    for f in q.outgoing(d) {
        if t.edges[f].curve_type == CurveType::MinusOneMinusOne {
            regions.extend(t.edge_regions(f));
        }
    }
    t.vertices[d]
        .edges
        .iter()
        .copied()
        .filter(|&e| {
            t.edges[e].curve_type == CurveType::MinusOneMinusOne
                && r.mark(e) != Some(q.character)
                && t.edge_regions(e).iter().all(|g| regions.contains(g))
        })
        .collect()
}

/// Downstream divisors and curves of a compact curve.
pub fn downstream(t: &Triangulation, r: &Recipe, q: &ChainQuiver) -> Downstream {
    let mut out = Downstream::default();
    let chi = q.character;
    match q.frame {
        None => {
            let chain = r.chain(chi).expect("quiver of a marked curve");
            for &d in &chain.vertices {
                if t.vertices[d].kind != VertexKind::Hirzebruch {
                    continue;
                }
                out.divisors.push(d);
                let cs: Vec<usize> = ahead_of(t, r, q, d).into_iter().collect();
                if !cs.is_empty() {
                    out.curves.insert(d, cs);
                }
            }
        }
        Some(f) => {
            // vertices in path order after v1
            let mut order = vec![f.v2];
            let mut v = f.v2;
            loop {
                let next = q.outgoing(v);
                let Some(&e) = next.first() else { break };
                v = t.edges[e].other(v);
                order.push(v);
            }
            let mut past_vc = false;
            for &d in &order {
                let straight = !past_vc;
                if d == f.v_c {
                    past_vc = true;
                }
                if d == f.v_c_prime && !straight {
                    break;
                }
                if d == f.v_c_prime && d != f.v_c {
                    break;
                }
                if t.vertices[d].kind != VertexKind::Hirzebruch {
                    continue;
                }
                out.divisors.push(d);
                let pool: BTreeSet<usize> = if straight {
                    t.vertices[d]
                        .edges
                        .iter()
                        .copied()
                        .filter(|&e| t.edges[e].is_compact() && r.mark(e) != Some(chi))
                        .collect()
                } else {
                    ahead_of(t, r, q, d)
                };
                let cs: Vec<usize> = pool
                    .into_iter()
                    .filter(|&e| broken_at(t, r, r.mark(e).expect("compact"), d))
                    .collect();
                if !cs.is_empty() {
                    out.curves.insert(d, cs);
                }
            }
        }
    }
    out
}

/// Memoised runner of the unlocking procedure.
pub struct Unlocker<'a> {
    t: &'a Triangulation,
    r: &'a Recipe,
    memo: BTreeMap<usize, GigsawPiece>,
    active: BTreeSet<usize>,
}

impl<'a> Unlocker<'a> {
    pub fn new(t: &'a Triangulation, r: &'a Recipe) -> Self {
        Unlocker {
            t,
            r,
            memo: BTreeMap::new(),
            active: BTreeSet::new(),
        }
    }

    /// G-igsaw piece of a compact curve.
    pub fn unlock(&mut self, c: usize) -> Result<GigsawPiece> {
        if let Some(p) = self.memo.get(&c) {
            return Ok(p.clone());
        }
        if !self.active.insert(c) {
            return Err(Error::Invariant(format!(
                "unlocking curve {c} depends on itself"
            )));
        }
        let piece = self.compute(c);
        self.active.remove(&c);
        let piece = piece?;
        self.memo.insert(c, piece.clone());
        Ok(piece)
    }

    fn compute(&mut self, c: usize) -> Result<GigsawPiece> {
        let (t, r) = (self.t, self.r);
        let q = xi_quiver(t, r, c)?;
        let chi = q.character;
        let chain = r.chain(chi).expect("quiver of a marked curve");
        let mut seen = BTreeSet::new();
        let mut trace = Vec::new();
        let mut add = |ch: Character, step: Step, vertex: Option<usize>, via: Option<usize>, trace: &mut Vec<TraceEntry>| {
            if seen.insert(ch) {
                trace.push(TraceEntry {
                    character: ch.0,
                    step,
                    vertex,
                    via,
                });
            }
        };
        add(chi, Step::Ch, None, None, &mut trace);
        for v in chain.inner_vertices(t) {
            match t.vertices[v].kind {
                VertexKind::DelPezzo6 => add(r.chi_dp(t, c, v)?, Step::Dp, Some(v), None, &mut trace),
                _ => {
                    for &m in &r.vertex_marks[v] {
                        add(m, Step::H1, Some(v), None, &mut trace);
                    }
                }
            }
        }
        let ds = downstream(t, r, &q);
        for (&d, curves) in &ds.curves {
            for &e in curves {
                let p = self.unlock(e)?;
                for ch in p.characters {
                    add(ch, Step::H2, Some(d), Some(e), &mut trace);
                }
            }
        }
        let mut characters: Vec<Character> = seen.into_iter().collect();
        characters.sort();
        Ok(GigsawPiece {
            curve: c,
            characters,
            trace,
        })
    }
}

/// G-igsaw piece of one curve.
pub fn unlock(t: &Triangulation, r: &Recipe, c: usize) -> Result<GigsawPiece> {
    Unlocker::new(t, r).unlock(c)
}

/// G-igsaw pieces of every compact curve, indexed by edge.
pub fn unlock_all(t: &Triangulation, r: &Recipe) -> Result<BTreeMap<usize, GigsawPiece>> {
    let mut u = Unlocker::new(t, r);
    let mut out = BTreeMap::new();
    for e in t.compact_edges() {
        out.insert(e, u.unlock(e)?);
    }
    Ok(out)
}

impl ChainQuiver {
    /// Index of the node for vertex `v`, if it is a node.
    pub fn vertex_node(&self, v: usize) -> Option<usize> {
        self.node(QuiverNode::Vertex(v))
    }
}
