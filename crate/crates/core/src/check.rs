//! Invariant checks and the sweep over small cyclic groups.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use serde::Serialize;

use crate::chamber::{compute_walls, render, ChamberConfig, Source, WallReport};
use crate::cluster::{det3, gigsaw_oracle};
use crate::error::{Error, Result};
use crate::group::{Character, GroupData, Monomial};
use crate::recipe::Recipe;
use crate::triangulation::{triangulate, CurveType, Triangulation, VertexKind};
use crate::unlock::{unlock_all, GigsawPiece, Step};

/// Canonical weight triples `(a, b, c)` of faithful cyclic subgroups
/// `1/r(a,b,c)` of SL(3), one per group up to permutation of coordinates
/// and change of generator.
pub fn cyclic_types(r: u32) -> Vec<[u32; 3]> {
    let units: Vec<u32> = (1..r.max(2)).filter(|k| k.gcd(&r) == 1).collect();
    let mut out = BTreeSet::new();
    for a in 0..r {
        for b in a..r {
            let c = (2 * r - a - b) % r;
            if c < b || a.gcd(&b).gcd(&c).gcd(&r) != 1 {
                continue;
            }
            let canon = units
                .iter()
                .map(|&k| {
                    let mut w = [a, b, c].map(|x| x * k % r);
                    w.sort();
                    w
                })
                .min()
                .unwrap_or([a, b, c]);
            out.insert(canon);
        }
    }
    out.into_iter().collect()
}

/// Every faithful cyclic group `1/r(a,b,c)` with `2 <= r <= max_r`, one per
/// isomorphism type of action.
pub fn sweep_groups(max_r: u32) -> Result<Vec<GroupData>> {
    let mut out = Vec::new();
    for r in 2..=max_r {
        for [a, b, c] in cyclic_types(r) {
            out.push(GroupData::cyclic(r, a, b, c)?);
        }
    }
    Ok(out)
}

/// One failed invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub invariant: &'static str,
    pub detail: String,
}

/// Outcome of the invariant suite on one group.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub group: String,
    /// invariant name and number of instances checked
    pub checked: BTreeMap<&'static str, usize>,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn tick(&mut self, name: &'static str) {
        *self.checked.entry(name).or_default() += 1;
    }

    fn fail(&mut self, name: &'static str, detail: String) {
        self.violations.push(Violation { invariant: name, detail });
    }

    fn expect(&mut self, name: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.tick(name);
        if !ok {
            self.fail(name, detail());
        }
    }

    /// Turns the first violation into an error.
    pub fn into_result(self) -> Result<Self> {
        match self.violations.first() {
            None => Ok(self),
            Some(v) => Err(Error::Invariant(format!(
                "{}: {} ({} violations)",
                v.invariant,
                v.detail,
                self.violations.len()
            ))),
        }
    }
}

pub const TRIANGLE_COUNT: &str = "triangle count";
pub const UNIMODULAR: &str = "unimodular cones";
pub const RELATIONS: &str = "generator relations";
pub const DIVISIBILITY: &str = "one character per divisor";
pub const DP_CONSTANT: &str = "del Pezzo choice constant";
pub const ORACLE: &str = "unlocking matches G-igsaw oracle";
pub const MULTIPLICITY: &str = "degree monotone along unlocking";
pub const BOUNDARY_REDUNDANT: &str = "boundary curve redundant";
pub const LONG_SIDE_FORM: &str = "final curve inequality";
pub const CENSUS: &str = "wall census";

/// Runs every invariant on one group, collecting violations. Errors only
/// when a stage cannot be computed at all.
pub fn check_group(g: &GroupData, config: &ChamberConfig) -> Result<CheckReport> {
    let mut rep = CheckReport {
        group: g.to_string(),
        ..Default::default()
    };
    let t = triangulate(g)?;
    check_triangulation(&t, &mut rep);
    let r = Recipe::compute(&t)?;
    check_relations(&t, &r, &mut rep);
    check_divisibility(&t, &r, &mut rep)?;
    let pieces = unlock_all(&t, &r)?;
    for e in t.compact_edges() {
        let [a, b] = [t.edges[e].triangles[0], t.edges[e].triangles[1]];
        let want = gigsaw_oracle(&t.graphs[t.triangles[a].graph], &t.graphs[t.triangles[b].graph]);
        rep.expect(ORACLE, pieces[&e].characters == want, || {
            format!("edge {e}: unlocking {:?}, oracle {:?}", ids(&pieces[&e].characters), ids(&want))
        });
    }
    check_multiplicity(&t, &r, &pieces, &mut rep)?;
    match compute_walls(&t, &r, config) {
        Ok(walls) => {
            rep.tick(CENSUS);
            check_walls(&t, &r, &walls, &mut rep);
        }
        Err(Error::Invariant(m)) | Err(Error::Inconsistency(m)) => rep.fail(CENSUS, m),
        Err(e) => return Err(e),
    }
    Ok(rep)
}

fn ids(c: &[Character]) -> Vec<u32> {
    c.iter().map(|c| c.0).collect()
}

/// `|G|` basic triangles, each spanning a cone of the lattice `N` of
/// determinant one.
pub fn check_triangulation(t: &Triangulation, rep: &mut CheckReport) {
    let n = t.group.order() as usize;
    rep.expect(TRIANGLE_COUNT, t.triangles.len() == n, || {
        format!("{} triangles for a group of order {n}", t.triangles.len())
    });
    for tri in &t.triangles {
        let [a, b, c] = tri.v.map(|v| t.vertices[v].point.num);
        let den = t.vertices[tri.v[0]].point.den;
        let d = det3(&a, &b, &c).abs() as i128;
        let ok = d * n as i128 == (den as i128).pow(3);
        rep.expect(UNIMODULAR, ok, || format!("triangle {:?} has determinant {d}/{den}^3", tri.v));
    }
}

/// Relations among the monomials of the vertex marks and of the
/// characters on the curves through each interior vertex, on every
/// triangle at the vertex.
pub fn check_relations(t: &Triangulation, r: &Recipe, rep: &mut CheckReport) {
    for v in t.interior_vertices() {
        let lines = match r.tensor_rule(t, v) {
            Ok(l) => l,
            Err(e) => {
                rep.fail(RELATIONS, e.to_string());
                continue;
            }
        };
        let marks = &r.vertex_marks[v];
        let tris: Vec<usize> = (0..t.triangles.len()).filter(|&k| t.triangles[k].v.contains(&v)).collect();
        let holds = |lines: &[Character]| {
            tris.iter().all(|&k| {
                let gr = &t.graphs[t.triangles[k].graph];
                let prod = |cs: &[Character]| {
                    cs.iter().fold(Monomial::new(0, 0, 0), |m, &c| m.mul(&gr.monomial(c)))
                };
                match t.vertices[v].kind {
                    VertexKind::Trivalent => prod(&[lines[0], lines[0]]) == gr.monomial(marks[0]),
                    _ => prod(lines) == prod(marks),
                }
            })
        };
        // any pair satisfying the tensor rule may carry the relation
        let ok = match t.vertices[v].kind {
            VertexKind::Hirzebruch => {
                let p = r.paired_marks(t, v);
                let g = &t.group;
                (0..p.len()).any(|i| {
                    (i + 1..p.len()).any(|j| g.add(p[i], p[j]) == marks[0] && holds(&[p[i], p[j]]))
                })
            }
            _ => holds(&lines),
        };
        rep.expect(RELATIONS, ok, || {
            format!(
                "vertex {} ({:?}) marks {:?}, lines {:?}",
                t.vertices[v].point,
                t.vertices[v].kind,
                ids(marks),
                ids(&lines)
            )
        });
    }
}

/// On the triangles at a chi-curve, the monomial of chi divides exactly one
/// mark of each divisor inside the chi-chain, and the del Pezzo choice is
/// the same on each side of the divisor.
pub fn check_divisibility(t: &Triangulation, r: &Recipe, rep: &mut CheckReport) -> Result<()> {
    for chain in r.chains() {
        let chi = chain.character;
        for v in chain.inner_vertices(t) {
            let kind = t.vertices[v].kind;
            if !matches!(kind, VertexKind::Hirzebruch | VertexKind::DelPezzo6) {
                continue;
            }
            for &e in &chain.edges {
                for &k in &t.edges[e].triangles {
                    let gr = &t.graphs[t.triangles[k].graph];
                    let n = r.vertex_marks[v]
                        .iter()
                        .filter(|&&phi| gr.monomial(chi).divides(&gr.monomial(phi)))
                        .count();
                    rep.expect(DIVISIBILITY, n == 1, || {
                        format!("{}-curve {e}: {n} marks of vertex {} divisible", chi.0, t.vertices[v].point)
                    });
                }
            }
            if kind != VertexKind::DelPezzo6 {
                continue;
            }
            // components of the chain with v removed
            let mut comp: BTreeMap<usize, usize> = BTreeMap::new();
            for &start in &chain.edges_at(t, v) {
                let mut stack = vec![(start, v)];
                while let Some((e, from)) = stack.pop() {
                    if comp.insert(e, start).is_some() {
                        continue;
                    }
                    let w = t.edges[e].other(from);
                    if w != v {
                        for f in chain.edges_at(t, w) {
                            if f != e {
                                stack.push((f, w));
                            }
                        }
                    }
                }
            }
            let mut seen: BTreeMap<usize, Character> = BTreeMap::new();
            for (&e, &c) in &comp {
                let phi = match r.chi_dp(t, e, v) {
                    Ok(p) => p,
                    Err(err) => {
                        rep.fail(DP_CONSTANT, err.to_string());
                        continue;
                    }
                };
                let first = *seen.entry(c).or_insert(phi);
                rep.expect(DP_CONSTANT, first == phi, || {
                    format!("{}-chain at {}: choices {} and {}", chi.0, t.vertices[v].point, first.0, phi.0)
                });
            }
        }
    }
    Ok(())
}

/// If `c` unlocks `c0` and `c0` unlocks a rho-curve `c1`, every character
/// of the piece of `c1` has degree on `c` at least that of rho.
pub fn check_multiplicity(
    t: &Triangulation,
    r: &Recipe,
    pieces: &BTreeMap<usize, GigsawPiece>,
    rep: &mut CheckReport,
) -> Result<()> {
    let unlocked = |c: usize| -> BTreeSet<usize> {
        pieces[&c].trace.iter().filter(|x| x.step == Step::H2).filter_map(|x| x.via).collect()
    };
    for &c in pieces.keys() {
        for c0 in unlocked(c) {
            for c1 in unlocked(c0) {
                let rho = r.mark(c1).expect("compact curve");
                let base = r.degree(t, rho, c)?;
                for &psi in &pieces[&c1].characters {
                    let d = r.degree(t, psi, c)?;
                    rep.expect(MULTIPLICITY, d >= base, || {
                        format!("curve {c} via {c0} and {c1}: degree {d} of {} below {base} of {}", psi.0, rho.0)
                    });
                }
            }
        }
    }
    Ok(())
}

/// Wall-level invariants beyond the census built into the reduction.
pub fn check_walls(t: &Triangulation, r: &Recipe, walls: &WallReport, rep: &mut CheckReport) {
    for q in &walls.inequalities {
        let Source::Curve(e) = q.source else { continue };
        if t.edges[e].curve_type != CurveType::ZeroMinusTwo {
            continue;
        }
        let chain = r.chain_of(e).expect("compact curve");
        if chain.edges.iter().any(|&f| t.edges[f].curve_type == CurveType::MinusOneMinusOne) {
            let head = &walls.inequalities[walls.representative(walls.by_label(&q.label).unwrap())];
            rep.expect(BOUNDARY_REDUNDANT, !head.is_wall(), || {
                format!("{} from boundary curve {e} is a wall", q.label)
            });
        }
    }
    let n = t.group.order() as usize;
    for side in &walls.long_sides {
        let mut want = vec![0u64; n];
        want[side.character.index()] = 1;
        for psi in r.hirz(t, side.character) {
            want[psi.index()] = 1;
        }
        for &e in &side.final_curves {
            let q = walls.inequalities.iter().find(|q| q.source == Source::Curve(e)).unwrap();
            rep.expect(LONG_SIDE_FORM, q.coeffs == want, || {
                format!("final {}-curve {e}: {} instead of {}", side.character.0, q.render(), render(&want))
            });
        }
    }
}
