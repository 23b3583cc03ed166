//! The triangulation of the junior simplex given by the fan of G-Hilb.
//!
//! Vertices are junior points, edges are torus-invariant curves and triangles
//! are torus-fixed points. On top of the bare complex we compute the normal
//! bundle type of every compact curve, the partition into regular triangles
//! (components glued across `(-1,-1)` curves) and the kind of every interior
//! vertex.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cluster::{on_same_side, Fan, GGraph};
use crate::error::{Error, Result};
use crate::group::{GroupData, LatticePoint};

/// Geometric class of a curve.
///
/// Interior edges of regular triangles are `(-1,-1)` curves and edges at a
/// trivalent vertex are `(1,-3)` curves. Every other compact curve lies on
/// the boundary of a regular triangle; these are grouped under
/// `ZeroMinusTwo` although their normal bundle is in general
/// `O(a) + O(-2-a)`, see [`Edge::normal`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CurveType {
    #[serde(rename = "(-1,-1)")]
    MinusOneMinusOne,
    #[serde(rename = "(0,-2)")]
    ZeroMinusTwo,
    #[serde(rename = "(1,-3)")]
    OneMinusThree,
    #[serde(rename = "noncompact")]
    NonCompact,
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CurveType::MinusOneMinusOne => "(-1,-1)",
            CurveType::ZeroMinusTwo => "(0,-2)",
            CurveType::OneMinusThree => "(1,-3)",
            CurveType::NonCompact => "noncompact",
        };
        write!(f, "{s}")
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexKind {
    Corner,
    Boundary,
    Trivalent,
    Hirzebruch,
    DelPezzo6,
}

impl VertexKind {
    pub fn is_interior(self) -> bool {
        matches!(
            self,
            VertexKind::Trivalent | VertexKind::Hirzebruch | VertexKind::DelPezzo6
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegularKind {
    /// Indices (0, 1, 2) of the simplex corners `e_i` that are corners of
    /// the regular triangle.
    Corner(Vec<usize>),
    MeetingOfChampions,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularTriangle {
    /// Basic triangles, sorted.
    pub members: Vec<usize>,
    pub side: u32,
    /// Vertex indices of the three corners.
    pub corners: [usize; 3],
    pub kind: RegularKind,
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub point: LatticePoint,
    pub kind: VertexKind,
    /// Incident edges, sorted.
    pub edges: Vec<usize>,
}

impl Vertex {
    pub fn is_interior(&self) -> bool {
        self.kind.is_interior()
    }
}

#[derive(Clone, Debug)]
pub struct Edge {
    /// Endpoints with `v[0] < v[1]`.
    pub v: [usize; 2],
    /// One triangle for a side of the simplex, two otherwise.
    pub triangles: Vec<usize>,
    pub curve_type: CurveType,
    /// Degrees of the divisors of `v[0]` and `v[1]` on the curve, so the
    /// normal bundle is `O(normal[0]) + O(normal[1])`; `None` when noncompact.
    pub normal: Option<[i64; 2]>,
}

impl Edge {
    pub fn is_compact(&self) -> bool {
        self.curve_type != CurveType::NonCompact
    }

    pub fn other(&self, v: usize) -> usize {
        if self.v[0] == v {
            self.v[1]
        } else {
            self.v[0]
        }
    }
}

#[derive(Clone, Debug)]
pub struct Triangle {
    /// Vertex indices, sorted.
    pub v: [usize; 3],
    /// Index into [`Triangulation::graphs`].
    pub graph: usize,
}

#[derive(Clone, Debug)]
pub struct Triangulation {
    pub group: GroupData,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub triangles: Vec<Triangle>,
    /// G-graphs, `graphs[t]` belongs to triangle `t`.
    pub graphs: Vec<GGraph>,
    pub regular: Vec<RegularTriangle>,
    /// Regular triangle of every basic triangle.
    pub region: Vec<usize>,
    /// The trivalent vertex of a side-0 meeting of champions, if any.
    pub champion_point: Option<usize>,
    edge_index: BTreeMap<(usize, usize), usize>,
}

impl Triangulation {
    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn compact_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(|&e| self.edges[e].is_compact())
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.vertices[v].is_interior())
    }

    pub fn vertex_by_coords(&self, num: [i64; 3]) -> Option<usize> {
        let l = self.group.exponent() as i64;
        let s: i64 = num.iter().sum();
        if s == 0 || l % s != 0 {
            return None;
        }
        let scaled = num.map(|t| t * (l / s));
        self.vertices.iter().position(|v| v.point.num == scaled)
    }

    /// Third vertex of a triangle containing the edge.
    pub fn apex(&self, t: usize, e: usize) -> usize {
        let [a, b] = self.edges[e].v;
        *self.triangles[t]
            .v
            .iter()
            .find(|&&x| x != a && x != b)
            .expect("triangle contains the edge")
    }

    /// Regular triangles the edge lies in: one for an interior edge, one or
    /// two for a boundary edge.
    pub fn edge_regions(&self, e: usize) -> Vec<usize> {
        let mut r: Vec<usize> = self.edges[e].triangles.iter().map(|&t| self.region[t]).collect();
        r.sort();
        r.dedup();
        r
    }

    /// True when `p`, `q`, `r` are collinear.
    pub fn collinear(&self, p: usize, q: usize, r: usize) -> bool {
        let [a, b, c] = [p, q, r].map(|k| self.vertices[k].point.num);
        crate::cluster::det3(&a, &b, &c) == 0
    }

    /// Direction of the edge leaving `from`, in numerator coordinates.
    pub fn direction(&self, e: usize, from: usize) -> [i64; 3] {
        let to = self.edges[e].other(from);
        let (a, b) = (self.vertices[from].point.num, self.vertices[to].point.num);
        [b[0] - a[0], b[1] - a[1], b[2] - a[2]]
    }

    pub fn parallel(&self, e: usize, f: usize) -> bool {
        let d1 = self.direction(e, self.edges[e].v[0]);
        let d2 = self.direction(f, self.edges[f].v[0]);
        crate::cluster::cross(&d1, &d2) == [0, 0, 0]
    }
}

/// Degrees `(D_1 . C, D_2 . C)` of the two divisors through the curve of a
/// compact edge, from `u + u' + a v1 + b v2 = 0` for the apexes `u, u'`.
/// The normal bundle of the curve is `O(a) + O(b)`.
pub fn normal_degrees(u: &[i64; 3], u2: &[i64; 3], v1: &[i64; 3], v2: &[i64; 3]) -> Result<[i64; 2]> {
    let s = [u[0] + u2[0], u[1] + u2[1], u[2] + u2[2]];
    // pick two coordinates giving a nonsingular system
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let det = v1[i] * v2[j] - v1[j] * v2[i];
        if det == 0 {
            continue;
        }
        let an = s[i] * v2[j] - s[j] * v2[i];
        let bn = v1[i] * s[j] - v1[j] * s[i];
        if an % det != 0 || bn % det != 0 {
            return Err(Error::Fan(format!(
                "apexes do not sum to an integer combination of {v1:?} and {v2:?}"
            )));
        }
        let (a, b) = (an / det, bn / det);
        if (0..3).any(|k| a * v1[k] + b * v2[k] != s[k]) || a + b != 2 {
            return Err(Error::Fan(format!(
                "apexes do not sum to a combination of {v1:?} and {v2:?}"
            )));
        }
        return Ok([-a, -b]);
    }
    Err(Error::Fan("degenerate edge".into()))
}

/// Classifies a compact curve from its normal degrees and whether it meets
/// a trivalent vertex.
pub fn curve_type(normal: [i64; 2], at_trivalent: bool) -> Result<CurveType> {
    let mut d = normal;
    d.sort();
    if at_trivalent {
        if d != [-3, 1] {
            return Err(Error::Invariant(format!(
                "curve at a trivalent vertex has normal degrees {normal:?}"
            )));
        }
        return Ok(CurveType::OneMinusThree);
    }
    Ok(if d == [-1, -1] {
        CurveType::MinusOneMinusOne
    } else {
        CurveType::ZeroMinusTwo
    })
}

/// Assembles the complex, curve types, vertex kinds and regular triangles.
pub fn build_complex(g: &GroupData, fan: &Fan) -> Result<Triangulation> {
    let points = &fan.points;
    // triangles in canonical order
    let mut cells: Vec<([usize; 3], &GGraph)> = fan
        .cells
        .iter()
        .map(|(gr, c)| {
            let mut r = c.rays;
            r.sort();
            (r, gr)
        })
        .collect();
    cells.sort_by_key(|(r, _)| *r);
    let mut triangles = Vec::new();
    let mut graphs = Vec::new();
    for (k, (r, gr)) in cells.iter().enumerate() {
        let mut gr = (*gr).clone();
        gr.id = k;
        graphs.push(gr);
        triangles.push(Triangle { v: *r, graph: k });
    }

    let mut edge_tris: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (t, tri) in triangles.iter().enumerate() {
        let [a, b, c] = tri.v;
        for (p, q) in [(a, b), (a, c), (b, c)] {
            edge_tris.entry((p, q)).or_default().push(t);
        }
    }
    let mut edges = Vec::new();
    let mut edge_index = BTreeMap::new();
    for ((a, b), tris) in edge_tris {
        let noncompact = on_same_side(&points[a], &points[b]);
        let want = if noncompact { 1 } else { 2 };
        if tris.len() != want {
            return Err(Error::Fan(format!(
                "edge {}-{} has {} triangles",
                points[a],
                points[b],
                tris.len()
            )));
        }
        edge_index.insert((a, b), edges.len());
        edges.push(Edge {
            v: [a, b],
            triangles: tris,
            curve_type: CurveType::NonCompact,
            normal: None,
        });
    }

    let mut vertices: Vec<Vertex> = points
        .iter()
        .map(|p| Vertex {
            point: p.clone(),
            kind: if p.is_corner() {
                VertexKind::Corner
            } else if p.on_boundary() {
                VertexKind::Boundary
            } else {
                VertexKind::Hirzebruch
            },
            edges: Vec::new(),
        })
        .collect();
    for (k, e) in edges.iter().enumerate() {
        vertices[e.v[0]].edges.push(k);
        vertices[e.v[1]].edges.push(k);
    }
    if let Some(p) = vertices.iter().find(|v| v.edges.is_empty()) {
        return Err(Error::Fan(format!("junior point {} is not a vertex", p.point)));
    }

    let mut t = Triangulation {
        group: g.clone(),
        vertices,
        edges,
        triangles,
        graphs,
        regular: Vec::new(),
        region: Vec::new(),
        champion_point: None,
        edge_index,
    };

    for e in 0..t.edges.len() {
        if t.edges[e].triangles.len() == 2 {
            let u = t.apex(t.edges[e].triangles[0], e);
            let u2 = t.apex(t.edges[e].triangles[1], e);
            let [a, b] = t.edges[e].v;
            let p = |k: usize| t.vertices[k].point.num;
            t.edges[e].normal = Some(normal_degrees(&p(u), &p(u2), &p(a), &p(b))?);
        }
    }

    for v in 0..t.vertices.len() {
        if !t.vertices[v].is_interior() {
            continue;
        }
        let val = t.vertices[v].edges.len();
        let all_flop = t.vertices[v]
            .edges
            .iter()
            .all(|&e| t.edges[e].normal == Some([-1, -1]));
        t.vertices[v].kind = if val == 3 {
            VertexKind::Trivalent
        } else if val == 6 && all_flop {
            VertexKind::DelPezzo6
        } else {
            VertexKind::Hirzebruch
        };
    }

    for e in 0..t.edges.len() {
        if let Some(n) = t.edges[e].normal {
            let at_tri = t.edges[e]
                .v
                .iter()
                .any(|&v| t.vertices[v].kind == VertexKind::Trivalent);
            t.edges[e].curve_type = curve_type(n, at_tri)?;
        }
    }

    let (regular, region) = regular_triangles(&t)?;
    t.regular = regular;
    t.region = region;

    let trivalent: Vec<usize> = (0..t.vertices.len())
        .filter(|&v| t.vertices[v].kind == VertexKind::Trivalent)
        .collect();
    let moc = t
        .regular
        .iter()
        .filter(|r| r.kind == RegularKind::MeetingOfChampions)
        .count();
    if trivalent.len() + moc > 1 {
        return Err(Error::Invariant(format!(
            "{} trivalent vertices and {moc} meeting of champions triangles",
            trivalent.len()
        )));
    }
    t.champion_point = trivalent.first().copied();
    Ok(t)
}

/// Components of basic triangles glued across `(-1,-1)` edges, each checked
/// against the standard subdivision of a lattice triangle of side `l`.
pub fn regular_triangles(t: &Triangulation) -> Result<(Vec<RegularTriangle>, Vec<usize>)> {
    let n = t.triangles.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for e in &t.edges {
        if e.curve_type == CurveType::MinusOneMinusOne {
            let (a, b) = (find(&mut parent, e.triangles[0]), find(&mut parent, e.triangles[1]));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut comps: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..n {
        let r = find(&mut parent, k);
        comps.entry(r).or_default().push(k);
    }
    let mut out = Vec::new();
    let mut region = vec![0; n];
    for (_, members) in comps {
        let reg = check_shape(t, members)?;
        for &m in &reg.members {
            region[m] = out.len();
        }
        out.push(reg);
    }
    Ok((out, region))
}

fn check_shape(t: &Triangulation, members: Vec<usize>) -> Result<RegularTriangle> {
    let mut count: BTreeMap<usize, usize> = BTreeMap::new();
    for &m in &members {
        for v in t.triangles[m].v {
            *count.entry(v).or_default() += 1;
        }
    }
    let corners: Vec<usize> = count.iter().filter(|(_, &c)| c == 1).map(|(&v, _)| v).collect();
    let bad = |why: &str| {
        Error::Invariant(format!(
            "component of triangles {members:?} is not a regular triangle: {why}"
        ))
    };
    if corners.len() != 3 {
        return Err(bad("it does not have three corners"));
    }
    let side = (members.len() as f64).sqrt().round() as i64;
    if side * side != members.len() as i64 {
        return Err(bad("member count is not a square"));
    }
    let p = |k: usize| t.vertices[k].point.num;
    let (a, b, c) = (p(corners[0]), p(corners[1]), p(corners[2]));
    let d1 = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
    let d2 = [c[0] - a[0], c[1] - a[1], c[2] - a[2]];
    // grid coordinates (i, j) with P = A + (i d1 + j d2) / side
    let grid = |q: [i64; 3]| -> Option<(i64, i64)> {
        let d = [side * (q[0] - a[0]), side * (q[1] - a[1]), side * (q[2] - a[2])];
        for (x, y) in [(0, 1), (0, 2), (1, 2)] {
            let det = d1[x] * d2[y] - d1[y] * d2[x];
            if det == 0 {
                continue;
            }
            let i_n = d[x] * d2[y] - d[y] * d2[x];
            let j_n = d1[x] * d[y] - d1[y] * d[x];
            if i_n % det != 0 || j_n % det != 0 {
                return None;
            }
            let (i, j) = (i_n / det, j_n / det);
            if (0..3).any(|k| i * d1[k] + j * d2[k] != d[k]) {
                return None;
            }
            return Some((i, j));
        }
        None
    };
    let mut got = BTreeSet::new();
    for &m in &members {
        let mut tri = Vec::new();
        for v in t.triangles[m].v {
            tri.push(grid(p(v)).ok_or_else(|| bad("a vertex is off the grid"))?);
        }
        tri.sort();
        got.insert(tri);
    }
    let mut want = BTreeSet::new();
    for i in 0..side {
        for j in 0..side - i {
            let mut up = vec![(i, j), (i + 1, j), (i, j + 1)];
            up.sort();
            want.insert(up);
            if i + j + 2 <= side {
                let mut down = vec![(i + 1, j), (i, j + 1), (i + 1, j + 1)];
                down.sort();
                want.insert(down);
            }
        }
    }
    if got != want {
        return Err(bad("its triangles differ from the standard subdivision"));
    }
    let mut simplex_corners: Vec<usize> = corners
        .iter()
        .filter(|&&v| t.vertices[v].kind == VertexKind::Corner)
        .map(|&v| {
            let num = t.vertices[v].point.num;
            (0..3).find(|&i| num[i] != 0).expect("corner")
        })
        .collect();
    simplex_corners.sort();
    let kind = if simplex_corners.is_empty() {
        RegularKind::MeetingOfChampions
    } else {
        RegularKind::Corner(simplex_corners)
    };
    Ok(RegularTriangle {
        members,
        side: side as u32,
        corners: [corners[0], corners[1], corners[2]],
        kind,
    })
}

/// Runs the fan walk and builds the complex.
pub fn triangulate(g: &GroupData) -> Result<Triangulation> {
    let fan = crate::cluster::walk_fan(g)?;
    build_complex(g, &fan)
}
