//! Serialization of results, text tables and figures.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::chamber::{Certificate, Source, Status, WallReport, WallType};
use crate::check::CheckReport;
use crate::cluster::gigsaw_oracle;
use crate::error::Result;
use crate::group::{Character, GroupData};
use crate::recipe::Recipe;
use crate::triangulation::{CurveType, Triangulation, VertexKind};
use crate::unlock::{GigsawPiece, TraceEntry};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupOut {
    pub spec: String,
    pub order: u32,
    /// orders of the cyclic factors; characters are tuples over these
    pub factors: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOut {
    /// numerators over `denominator`
    pub coords: [i64; 3],
    pub kind: VertexKind,
    pub marks: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeOut {
    pub v1: usize,
    pub v2: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub character: Option<Vec<u32>>,
    /// exponents of the invariant ratio `m1 / m2`
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ratio: Option<[[u32; 3]; 2]>,
    pub curve_type: CurveType,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub normal: Option<[i64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gig: Option<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleOut {
    pub vertices: [usize; 3],
    /// basis monomial of each character, in character order
    pub ggraph: Vec<[u32; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityOut {
    pub label: String,
    /// nonzero coefficients by character
    pub coeffs: Vec<(Vec<u32>, u64)>,
    pub source: Source,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<Certificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallOut {
    #[serde(rename = "type")]
    pub wall_type: WallType,
    pub inequality_ref: usize,
    pub support_edges: Vec<usize>,
    pub divisor: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Census {
    pub inequalities: usize,
    pub distinct: usize,
    pub redundant: usize,
    pub type_i: usize,
    pub type_iii: usize,
    pub type_0: usize,
    pub minus_one_curves: usize,
    pub long_sides: usize,
}

/// Everything computed for one group, in a stable layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: GroupOut,
    pub denominator: i64,
    pub vertices: Vec<VertexOut>,
    pub edges: Vec<EdgeOut>,
    pub triangles: Vec<TriangleOut>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inequalities: Option<Vec<InequalityOut>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub walls: Option<Vec<WallOut>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub census: Option<Census>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

fn tuple(g: &GroupData, c: Character) -> Vec<u32> {
    g.char_tuple(c)
}

/// Builds the report; later stages are filled in when given.
pub fn report(
    t: &Triangulation,
    recipe: Option<&Recipe>,
    pieces: Option<&BTreeMap<usize, GigsawPiece>>,
    walls: Option<&WallReport>,
) -> Report {
    let g = &t.group;
    let vertices = t
        .vertices
        .iter()
        .enumerate()
        .map(|(i, v)| VertexOut {
            coords: v.point.num,
            kind: v.kind,
            marks: recipe
                .map(|r| r.vertex_marks[i].iter().map(|&c| tuple(g, c)).collect())
                .unwrap_or_default(),
        })
        .collect();
    let edges = t
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| EdgeOut {
            v1: e.v[0],
            v2: e.v[1],
            character: recipe.and_then(|r| r.edge_marks[i]).map(|c| tuple(g, c)),
            ratio: recipe
                .and_then(|r| r.ratios[i])
                .map(|(a, b)| [a.exponents(), b.exponents()]),
            curve_type: e.curve_type,
            normal: e.normal,
            gig: pieces
                .and_then(|p| p.get(&i))
                .map(|p| p.characters.iter().map(|&c| tuple(g, c)).collect()),
        })
        .collect();
    let triangles = t
        .triangles
        .iter()
        .map(|tri| TriangleOut {
            vertices: tri.v,
            ggraph: g
                .characters()
                .map(|c| t.graphs[tri.graph].monomial(c).exponents())
                .collect(),
        })
        .collect();
    let mut rep = Report {
        group: GroupOut {
            spec: g.to_string(),
            order: g.order(),
            factors: g.factors().to_vec(),
        },
        denominator: t.vertices.first().map(|v| v.point.den).unwrap_or(1),
        vertices,
        edges,
        triangles,
        inequalities: None,
        walls: None,
        census: None,
        warnings: Vec::new(),
    };
    if let Some(w) = walls {
        rep.inequalities = Some(
            w.inequalities
                .iter()
                .map(|q| InequalityOut {
                    label: q.label.clone(),
                    coeffs: (0..q.coeffs.len())
                        .filter(|&i| q.coeffs[i] != 0)
                        .map(|i| (tuple(g, Character(i as u32)), q.coeffs[i]))
                        .collect(),
                    source: q.source.clone(),
                    status: q.status.clone(),
                    certificate: q.certificate.clone(),
                })
                .collect(),
        );
        rep.walls = Some(
            w.walls
                .iter()
                .map(|x| WallOut {
                    wall_type: x.wall_type,
                    inequality_ref: x.inequality,
                    support_edges: x.support_edges.clone(),
                    divisor: x.divisor.clone(),
                })
                .collect(),
        );
        rep.census = Some(census(t, w));
        rep.warnings = w.warnings.clone();
    }
    rep
}

pub fn census(t: &Triangulation, w: &WallReport) -> Census {
    let count = |f: &dyn Fn(&Status) -> bool| w.inequalities.iter().filter(|q| f(&q.status)).count();
    Census {
        inequalities: w.inequalities.len(),
        distinct: count(&|s| !matches!(s, Status::Duplicate(_))),
        redundant: count(&|s| *s == Status::Redundant),
        type_i: w.count(WallType::I),
        type_iii: w.count(WallType::III),
        type_0: w.count(WallType::Zero),
        minus_one_curves: t
            .compact_edges()
            .filter(|&e| t.edges[e].curve_type == CurveType::MinusOneMinusOne)
            .count(),
        long_sides: w.long_sides.len(),
    }
}

pub fn to_json(rep: &Report) -> Result<String> {
    let mut s = serde_json::to_string_pretty(rep)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<Report> {
    Ok(serde_json::from_str(s)?)
}

fn chars(c: &[Character]) -> String {
    let v: Vec<String> = c.iter().map(|c| c.0.to_string()).collect();
    format!("{{{}}}", v.join(","))
}

fn marks_of(g: &GroupData, c: &[Vec<u32>]) -> String {
    let v: Vec<String> = c.iter().map(|t| g.encode(t).0.to_string()).collect();
    v.join(",")
}

/// Vertices, curves and G-graphs.
pub fn triangulation_text(t: &Triangulation) -> String {
    let g = &t.group;
    let mut s = String::new();
    let _ = writeln!(s, "group {g}, {} vertices, {} edges, {} triangles", t.vertices.len(), t.edges.len(), t.triangles.len());
    for (i, v) in t.vertices.iter().enumerate() {
        let _ = writeln!(s, "v{i:<3} {:<20} {:?}", v.point.to_string(), v.kind);
    }
    for (i, e) in t.edges.iter().enumerate() {
        let normal = e.normal.map(|[a, b]| format!("O({a})+O({b})")).unwrap_or_else(|| "side".into());
        let _ = writeln!(s, "e{i:<3} v{}-v{} {:?} {normal}", e.v[0], e.v[1], e.curve_type);
    }
    for (i, tri) in t.triangles.iter().enumerate() {
        let basis: Vec<String> = g.characters().map(|c| t.graphs[tri.graph].monomial(c).to_string()).collect();
        let _ = writeln!(s, "t{i:<3} v{} v{} v{}  [{}]", tri.v[0], tri.v[1], tri.v[2], basis.join(" "));
    }
    s
}

/// Marks on curves and divisors.
pub fn recipe_text(t: &Triangulation, r: &Recipe) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {}", t.group);
    for e in t.compact_edges() {
        let [a, b] = t.edges[e].v;
        let (m1, m2) = r.ratios[e].expect("compact");
        let _ = writeln!(
            s,
            "e{e:<3} {} - {}  mark {:<3} ratio {m1}/{m2}  {:?}",
            t.vertices[a].point,
            t.vertices[b].point,
            r.mark(e).expect("compact").0,
            t.edges[e].curve_type
        );
    }
    for v in t.interior_vertices() {
        let _ = writeln!(s, "v{v:<3} {}  {:?} {}", t.vertices[v].point, t.vertices[v].kind, chars(&r.vertex_marks[v]));
    }
    s
}

/// A G-igsaw piece with the step contributing each character and the
/// verdict of the oracle.
pub fn gig_text(t: &Triangulation, r: &Recipe, piece: &GigsawPiece) -> String {
    let e = piece.curve;
    let [a, b] = t.edges[e].v;
    let [ta, tb] = [t.edges[e].triangles[0], t.edges[e].triangles[1]];
    let want = gigsaw_oracle(&t.graphs[t.triangles[ta].graph], &t.graphs[t.triangles[tb].graph]);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "curve e{e} {} - {} marked {}",
        t.vertices[a].point,
        t.vertices[b].point,
        r.mark(e).expect("compact").0
    );
    let _ = writeln!(s, "G-ig = {}", chars(&piece.characters));
    for TraceEntry { character, step, vertex, via } in &piece.trace {
        let mut line = format!("  {character:<4} {step:?}");
        if let Some(v) = vertex {
            let _ = write!(line, " at {}", t.vertices[*v].point);
        }
        if let Some(c) = via {
            let _ = write!(line, " via e{c}");
        }
        let _ = writeln!(s, "{line}");
    }
    let verdict = if want == piece.characters { "MATCH".to_string() } else { format!("MISMATCH {}", chars(&want)) };
    let _ = writeln!(s, "oracle: {verdict}");
    s
}

fn status_text(w: &WallReport, st: &Status) -> String {
    match st {
        Status::Wall(ty) => format!("wall {ty}"),
        Status::Redundant => "redundant".into(),
        Status::Duplicate(j) => format!("= {}", w.inequalities[*j].label),
    }
}

/// The labelled inequalities with certificates, the walls and the census.
pub fn walls_text(t: &Triangulation, w: &WallReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {}", t.group);
    for q in &w.inequalities {
        let src = match &q.source {
            Source::Curve(e) => format!("curve e{e}"),
            Source::Subsheaf { vertex, .. } => format!("subsheaf v{vertex}"),
            Source::Quotient(d) => format!("quotient {d:?}"),
        };
        let mut line = format!("({}) {}  [{src}; {}]", q.label, q.render(), status_text(w, &q.status));
        if let Some(Certificate::Sum(parts)) = &q.certificate {
            let p: Vec<String> = parts
                .iter()
                .map(|&(j, k)| if k == 1 { format!("({})", w.inequalities[j].label) } else { format!("{k}({})", w.inequalities[j].label) })
                .collect();
            let _ = write!(line, "  <= {}", p.join(" + "));
        }
        let _ = writeln!(s, "{line}");
    }
    let _ = writeln!(s, "walls:");
    for x in &w.walls {
        let q = &w.inequalities[x.inequality];
        let _ = writeln!(s, "  {:<3} ({}) {}", x.wall_type.to_string(), q.label, q.render().replace("> 0", "= 0"));
    }
    let c = census(t, w);
    let _ = writeln!(
        s,
        "census: {} inequalities, {} distinct, {} redundant; walls I {}, III {}, 0 {}; {} (-1,-1)-curves, {} long sides",
        c.inequalities, c.distinct, c.redundant, c.type_i, c.type_iii, c.type_0, c.minus_one_curves, c.long_sides
    );
    for m in &w.warnings {
        let _ = writeln!(s, "warning: {m}");
    }
    s
}

pub fn check_text(rep: &CheckReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {}", rep.group);
    for (k, n) in &rep.checked {
        let bad = rep.violations.iter().filter(|v| v.invariant == *k).count();
        let _ = writeln!(s, "  {:<34} {n:>6} checked, {bad} failed", k);
    }
    for v in &rep.violations {
        let _ = writeln!(s, "violation: {}: {}", v.invariant, v.detail);
    }
    let _ = writeln!(s, "{}", if rep.passed() { "ok" } else { "FAILED" });
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FigureFormat {
    Svg,
    Tikz,
}

struct Figure {
    points: Vec<(f64, f64)>,
    /// endpoints, bold, optional label
    edges: Vec<(usize, usize, bool, Option<String>)>,
    /// vertex, label
    boxes: Vec<(usize, String)>,
}

fn layout(t: &Triangulation, r: Option<&Recipe>) -> Figure {
    const CORNERS: [(f64, f64); 3] = [(0.0, 9.0), (10.0, -6.0), (-10.0, -6.0)];
    let points = t
        .vertices
        .iter()
        .map(|v| {
            let d = v.point.den as f64;
            let w = v.point.num.map(|n| n as f64 / d);
            (0..3).fold((0.0, 0.0), |(x, y), i| (x + w[i] * CORNERS[i].0, y + w[i] * CORNERS[i].1))
        })
        .collect();
    let edges = t
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            // sides of regular triangles are drawn bold
            let bold = e.triangles.len() == 1 || t.region[e.triangles[0]] != t.region[e.triangles[1]];
            let label = r.and_then(|r| r.mark(i)).map(|c| c.0.to_string());
            (e.v[0], e.v[1], bold, label)
        })
        .collect();
    let boxes = match r {
        Some(r) => t
            .interior_vertices()
            .map(|v| {
                let g = &t.group;
                let m: Vec<Vec<u32>> = r.vertex_marks[v].iter().map(|&c| g.char_tuple(c)).collect();
                (v, marks_of(g, &m))
            })
            .collect(),
        None => Vec::new(),
    };
    Figure { points, edges, boxes }
}

/// Picture of the triangulation in the junior simplex, with the marks of
/// Reid's recipe when given.
pub fn figure(t: &Triangulation, r: Option<&Recipe>, format: FigureFormat) -> String {
    let f = layout(t, r);
    let mut s = String::new();
    match format {
        FigureFormat::Svg => {
            let k = 30.0;
            let _ = writeln!(s, "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"660\" height=\"510\" font-family=\"sans-serif\" font-size=\"11\">");
            for (a, b, bold, _) in &f.edges {
                let (p, q) = (f.points[*a], f.points[*b]);
                let style = if *bold { "stroke-width=\"2.2\"" } else { "stroke-width=\"0.8\" stroke-dasharray=\"4 3\"" };
                let _ = writeln!(
                    s,
                    "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\" {style}/>",
                    p.0 * k + 330.0,
                    300.0 - p.1 * k,
                    q.0 * k + 330.0,
                    300.0 - q.1 * k
                );
            }
            for (a, b, _, label) in &f.edges {
                let Some(l) = label else { continue };
                let (p, q) = (f.points[*a], f.points[*b]);
                let (mx, my) = ((p.0 + q.0) / 2.0 * k + 330.0, 300.0 - (p.1 + q.1) / 2.0 * k);
                let w = 7.0 * l.len() as f64 + 4.0;
                let _ = writeln!(
                    s,
                    "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{w:.1}\" height=\"13\" fill=\"white\"/><text x=\"{mx:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{l}</text>",
                    mx - w / 2.0,
                    my - 6.5,
                    my + 4.0
                );
            }
            for (i, p) in f.points.iter().enumerate() {
                if f.boxes.iter().all(|(v, _)| *v != i) {
                    let _ = writeln!(s, "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\"/>", p.0 * k + 330.0, 300.0 - p.1 * k);
                }
            }
            for (v, l) in &f.boxes {
                let p = f.points[*v];
                let (cx, cy) = (p.0 * k + 330.0, 300.0 - p.1 * k);
                let w = 7.0 * l.len() as f64 + 6.0;
                let _ = writeln!(
                    s,
                    "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"{w:.1}\" height=\"15\" fill=\"white\" stroke=\"black\"/><text x=\"{cx:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{l}</text>",
                    cx - w / 2.0,
                    cy - 7.5,
                    cy + 4.0
                );
            }
            let _ = writeln!(s, "</svg>");
        }
        FigureFormat::Tikz => {
            let _ = writeln!(s, "\\begin{{tikzpicture}}[scale=0.6]");
            let _ = writeln!(s, "\\footnotesize");
            for (i, p) in f.points.iter().enumerate() {
                let _ = writeln!(s, "\\coordinate (p{i}) at ({:.4},{:.4});", p.0, p.1);
            }
            for (a, b, bold, label) in &f.edges {
                let style = if *bold { "thick" } else { "thin,dashed" };
                match label {
                    Some(l) => {
                        let _ = writeln!(s, "\\draw[{style}] (p{a}) to node[fill=white,inner sep=1pt] {{${l}$}} (p{b});");
                    }
                    None => {
                        let _ = writeln!(s, "\\draw[{style}] (p{a}) to (p{b});");
                    }
                }
            }
            for (i, _) in f.points.iter().enumerate() {
                match f.boxes.iter().find(|(v, _)| *v == i) {
                    Some((_, l)) => {
                        let _ = writeln!(s, "\\node[draw,fill=white,inner sep=2pt] at (p{i}) {{${l}$}};");
                    }
                    None => {
                        let _ = writeln!(s, "\\node at (p{i}) {{$\\bullet$}};");
                    }
                }
            }
            let _ = writeln!(s, "\\end{{tikzpicture}}");
        }
    }
    s
}
