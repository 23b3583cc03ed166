//! Inequalities cutting out the chamber of G-Hilb in the stability space,
//! their reduction to walls, and the wall types.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Character;
use crate::lp::{clear_denominators, cone_membership, int_dot, Membership};
use crate::recipe::Recipe;
use crate::triangulation::{CurveType, Triangulation};
use crate::unlock::{unlock_all, GigsawPiece};

/// Where an inequality comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Source {
    /// an exceptional curve, by edge
    Curve(usize),
    /// a rigid subsheaf on an irreducible divisor
    Subsheaf { vertex: usize, character: u32 },
    /// a rigid quotient on a connected divisor, by its vertices
    Quotient(Vec<usize>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WallType {
    #[serde(rename = "I")]
    I,
    #[serde(rename = "III")]
    III,
    #[serde(rename = "0")]
    Zero,
}

impl std::fmt::Display for WallType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WallType::I => "I",
            WallType::III => "III",
            WallType::Zero => "0",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Wall(WallType),
    Redundant,
    /// same coefficients as an earlier inequality
    Duplicate(usize),
}

/// Evidence for a status.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Certificate {
    /// the inequality equals this nonnegative integer combination
    Sum(Vec<(usize, u64)>),
    /// a stability parameter on the hyperplane, strictly inside every other
    /// inequality; entries indexed by character, as reduced fractions
    Witness(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inequality {
    pub label: String,
    /// indexed by character; the trivial character has coefficient 0
    pub coeffs: Vec<u64>,
    pub source: Source,
    pub status: Status,
    pub certificate: Option<Certificate>,
}

impl Inequality {
    pub fn support(&self) -> Vec<Character> {
        support(&self.coeffs)
    }

    pub fn is_wall(&self) -> bool {
        matches!(self.status, Status::Wall(_))
    }

    /// Text form `t5 + t7 + 2 t9 > 0`.
    pub fn render(&self) -> String {
        render(&self.coeffs)
    }
}

fn support(c: &[u64]) -> Vec<Character> {
    (0..c.len())
        .filter(|&i| c[i] != 0)
        .map(|i| Character(i as u32))
        .collect()
}

pub fn render(c: &[u64]) -> String {
    let terms: Vec<String> = (0..c.len())
        .filter(|&i| c[i] != 0)
        .map(|i| if c[i] == 1 { format!("t{i}") } else { format!("{} t{i}", c[i]) })
        .collect();
    format!("{} > 0", terms.join(" + "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Wall {
    #[serde(rename = "type")]
    pub wall_type: WallType,
    pub inequality: usize,
    /// curves whose whole G-igsaw piece lies in the support of the wall
    pub support_edges: Vec<usize>,
    /// interior vertices all of whose curves are support edges
    pub divisor: Vec<usize>,
}

/// A chain running from boundary to boundary along sides of regular
/// triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongSide {
    pub character: Character,
    /// chain edges from one end to the other
    pub path: Vec<usize>,
    pub final_curves: Vec<usize>,
}

#[derive(Clone, Debug, Default)]
pub struct ChamberConfig {
    /// largest connected divisor used for quotient inequalities
    pub max_quotient_size: Option<usize>,
}

/// Interior vertex count above which quotient divisors are capped when no
/// explicit cap is given.
pub const UNCAPPED_LIMIT: usize = 20;
pub const DEFAULT_CAP: usize = 4;

#[derive(Clone, Debug)]
pub struct WallReport {
    pub inequalities: Vec<Inequality>,
    pub walls: Vec<Wall>,
    pub long_sides: Vec<LongSide>,
    pub pieces: BTreeMap<usize, GigsawPiece>,
    pub warnings: Vec<String>,
}

impl WallReport {
    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.inequalities.iter().position(|q| q.label == label)
    }

    /// The wall-bearing inequality an inequality reduces to, following
    /// duplicates.
    pub fn representative(&self, i: usize) -> usize {
        match self.inequalities[i].status {
            Status::Duplicate(j) => j,
            _ => i,
        }
    }

    pub fn count(&self, ty: WallType) -> usize {
        self.walls.iter().filter(|w| w.wall_type == ty).count()
    }
}

/// Coefficients `deg(R_rho|C)` over the G-igsaw piece of a curve, checked
/// against the forms expected for (-1,-1) and (1,-3) curves.
pub fn curve_inequality(t: &Triangulation, r: &Recipe, piece: &GigsawPiece) -> Result<Vec<u64>> {
    let g = &t.group;
    let e = piece.curve;
    let mut c = vec![0u64; g.order() as usize];
    for &rho in &piece.characters {
        let d = r.degree(t, rho, e)?;
        if d <= 0 {
            return Err(Error::Invariant(format!(
                "character {} of the G-igsaw piece of edge {e} has degree {d}",
                rho.0
            )));
        }
        c[rho.index()] = d as u64;
    }
    // characters outside the piece have degree zero
    for rho in g.nontrivial_characters() {
        if c[rho.index()] == 0 && r.degree(t, rho, e)? != 0 {
            return Err(Error::Invariant(format!(
                "character {} outside the G-igsaw piece of edge {e} has nonzero degree",
                rho.0
            )));
        }
    }
    let chi = r.mark(e).expect("compact curve");
    match t.edges[e].curve_type {
        CurveType::MinusOneMinusOne => {
            if c.iter().any(|&x| x > 1) {
                return Err(Error::Invariant(format!(
                    "(-1,-1)-curve {e} has a coefficient above 1: {}",
                    render(&c)
                )));
            }
        }
        CurveType::OneMinusThree => {
            let sq = g.scale(chi, 2).index();
            if (0..c.len()).any(|i| c[i] != 0 && c[i] != if i == sq { 2 } else { 1 }) || c[sq] != 2 {
                return Err(Error::Invariant(format!(
                    "(1,-3)-curve {e} does not have the form 2 t(chi^2) + ...: {}",
                    render(&c)
                )));
            }
        }
        _ => {}
    }
    Ok(c)
}

/// `theta(psi) > 0` for every mark `psi` of every interior vertex.
pub fn subsheaf_inequalities(t: &Triangulation, r: &Recipe) -> Vec<(usize, Character)> {
    let mut out = Vec::new();
    for v in t.interior_vertices() {
        for &psi in &r.vertex_marks[v] {
            out.push((v, psi));
        }
    }
    out
}

fn adjacency(t: &Triangulation) -> BTreeMap<usize, BTreeSet<usize>> {
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for v in t.interior_vertices() {
        let nb = t.vertices[v]
            .edges
            .iter()
            .map(|&e| t.edges[e].other(v))
            .filter(|&w| t.vertices[w].is_interior())
            .collect();
        adj.insert(v, nb);
    }
    adj
}

/// Characters `U G-ig(C)` over curves meeting a connected set of interior
/// vertices; coefficient 1 each.
pub fn quotient_inequality(
    t: &Triangulation,
    pieces: &BTreeMap<usize, GigsawPiece>,
    divisor: &[usize],
) -> Result<Vec<u64>> {
    if divisor.is_empty() || divisor.iter().any(|&v| !t.vertices[v].is_interior()) {
        return Err(Error::Usage("a divisor is a nonempty set of interior vertices".into()));
    }
    let adj = adjacency(t);
    let set: BTreeSet<usize> = divisor.iter().copied().collect();
    let mut seen = BTreeSet::from([divisor[0]]);
    let mut stack = vec![divisor[0]];
    while let Some(v) = stack.pop() {
        for &w in &adj[&v] {
            if set.contains(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    if seen.len() != set.len() {
        return Err(Error::Usage(format!("divisor {divisor:?} is not connected")));
    }
    let mut c = vec![0u64; t.group.order() as usize];
    for &v in divisor {
        for &e in &t.vertices[v].edges {
            for ch in &pieces[&e].characters {
                c[ch.index()] = 1;
            }
        }
    }
    Ok(c)
}

/// Connected sets of interior vertices, each once, ordered by size and
/// then lexicographically.
pub fn connected_subsets(t: &Triangulation, cap: Option<usize>) -> Vec<Vec<usize>> {
    let adj = adjacency(t);
    let mut out = Vec::new();
    fn grow(
        adj: &BTreeMap<usize, BTreeSet<usize>>,
        root: usize,
        sub: &mut Vec<usize>,
        ext: BTreeSet<usize>,
        cap: Option<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let mut s = sub.clone();
        s.sort();
        out.push(s);
        if cap.is_some_and(|c| sub.len() >= c) {
            return;
        }
        let mut ext = ext;
        while let Some(w) = ext.pop_first() {
            // exclusive neighbours of w: not in or next to the current set
            let mut next = ext.clone();
            for &u in &adj[&w] {
                if u > root && !sub.contains(&u) && !sub.iter().any(|&s| adj[&s].contains(&u)) {
                    next.insert(u);
                }
            }
            sub.push(w);
            grow(adj, root, sub, next, cap, out);
            sub.pop();
        }
    }
    for &v in adj.keys() {
        let ext = adj[&v].iter().copied().filter(|&u| u > v).collect();
        grow(&adj, v, &mut vec![v], ext, cap, &mut out);
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Chains running boundary to boundary along sides of regular triangles,
/// with their final curves.
pub fn generalised_long_sides(t: &Triangulation, r: &Recipe) -> Result<Vec<LongSide>> {
    let mut out = Vec::new();
    for chain in r.chains() {
        if t.champion_point.is_some_and(|p| chain.vertices.contains(&p)) {
            continue;
        }
        if chain
            .edges
            .iter()
            .any(|&e| t.edges[e].curve_type == CurveType::MinusOneMinusOne)
        {
            continue;
        }
        let leaves: Vec<usize> = chain
            .vertices
            .iter()
            .copied()
            .filter(|&v| chain.edges_at(t, v).len() == 1)
            .collect();
        let is_path = chain.vertices.iter().all(|&v| chain.edges_at(t, v).len() <= 2);
        if !is_path || leaves.len() != 2 || leaves.iter().any(|&v| t.vertices[v].is_interior()) {
            continue;
        }
        // walk the path
        let mut path = Vec::new();
        let mut v = leaves[0];
        let mut came = usize::MAX;
        while let Some(e) = chain.edges_at(t, v).into_iter().find(|&e| e != came) {
            path.push(e);
            came = e;
            v = t.edges[e].other(v);
        }
        // split into straight runs and take the end of each run away from
        // the corner on its line
        let mut finals = BTreeSet::new();
        let mut start = 0;
        while start < path.len() {
            let mut end = start + 1;
            while end < path.len() && t.parallel(path[start], path[end]) {
                end += 1;
            }
            let run = &path[start..end];
            let [a, b] = t.edges[run[0]].v;
            let corner = (0..t.vertices.len())
                .find(|&k| t.vertices[k].point.is_corner() && t.collinear(k, a, b))
                .ok_or_else(|| {
                    Error::Invariant(format!(
                        "straight run of the {}-chain does not point at a corner",
                        chain.character.0
                    ))
                })?;
            let far = |e: usize| -> i64 {
                let q = t.vertices[corner].point.num;
                t.edges[e]
                    .v
                    .iter()
                    .map(|&x| {
                        let p = t.vertices[x].point.num;
                        (0..3).map(|i| (p[i] - q[i]).abs()).sum::<i64>()
                    })
                    .min()
                    .unwrap()
            };
            let last = *run.iter().max_by_key(|&&e| far(e)).expect("nonempty run");
            finals.insert(last);
            start = end;
        }
        out.push(LongSide {
            character: chain.character,
            path,
            final_curves: finals.into_iter().collect(),
        });
    }
    Ok(out)
}

/// Exact search for `a` as a nonnegative integer combination of
/// candidates, each at most `a` coefficientwise.
pub fn summand_decomposition(cands: &[(usize, &[u64])], a: &[u64]) -> Option<Vec<(usize, u64)>> {
    fn go(
        cands: &[(usize, &[u64])],
        rem: &mut Vec<u64>,
        used: &mut Vec<usize>,
        failed: &mut HashSet<Vec<u64>>,
    ) -> bool {
        let Some(i) = rem.iter().position(|&x| x != 0) else {
            return true;
        };
        if failed.contains(rem) {
            return false;
        }
        for (k, (_, b)) in cands.iter().enumerate() {
            if b[i] == 0 || b.iter().zip(rem.iter()).any(|(x, y)| x > y) {
                continue;
            }
            for (x, y) in rem.iter_mut().zip(b.iter()) {
                *x -= y;
            }
            used.push(k);
            if go(cands, rem, used, failed) {
                return true;
            }
            used.pop();
            for (x, y) in rem.iter_mut().zip(b.iter()) {
                *x += y;
            }
        }
        failed.insert(rem.clone());
        false
    }
    let cands: Vec<(usize, &[u64])> = cands
        .iter()
        .copied()
        .filter(|(_, b)| b.iter().any(|&x| x != 0) && b.iter().zip(a).all(|(x, y)| x <= y))
        .collect();
    let mut rem = a.to_vec();
    let mut used = Vec::new();
    let mut failed = HashSet::new();
    if !go(&cands, &mut rem, &mut used, &mut failed) {
        return None;
    }
    let mut count: BTreeMap<usize, u64> = BTreeMap::new();
    for k in used {
        *count.entry(cands[k].0).or_default() += 1;
    }
    Some(count.into_iter().collect())
}

/// Facet test: a stability parameter with `a . theta = 0` and
/// `b . theta > 0` for all other `b`, or `None` when `a` lies in the cone
/// of the others.
pub fn facet_witness(others: &[&[u64]], a: &[u64]) -> Result<Option<Vec<BigRational>>> {
    let n = a.len();
    let supp: Vec<usize> = (0..n).filter(|&i| a[i] != 0).collect();
    let inside: Vec<&[u64]> = others
        .iter()
        .copied()
        .filter(|b| (0..n).all(|i| b[i] == 0 || a[i] != 0))
        .collect();
    let gens: Vec<Vec<i64>> = inside
        .iter()
        .map(|b| supp.iter().map(|&i| b[i] as i64).collect())
        .collect();
    let target: Vec<i64> = supp.iter().map(|&i| a[i] as i64).collect();
    let sep = match cone_membership(&gens, &target) {
        Membership::Member(y) => {
            if !crate::lp::verify(&gens, &target, &Membership::Member(y)) {
                return Err(Error::Inconsistency("cone membership certificate fails".into()));
            }
            return Ok(None);
        }
        Membership::Separated(s) => s,
    };
    // lift to all characters: large on coordinates outside the support
    let sep = clear_denominators(&sep);
    let mut theta0 = vec![BigInt::zero(); n];
    for (k, &i) in supp.iter().enumerate() {
        theta0[i] = sep[k].clone();
    }
    let wide = |v: &[u64]| v.iter().map(|&x| x as i64).collect::<Vec<i64>>();
    let mut big = BigInt::one();
    for b in others {
        let inner = -int_dot(&wide(b), &theta0);
        if inner >= big {
            big = inner + 1;
        }
    }
    for i in 1..n {
        if a[i] == 0 {
            theta0[i] = big.clone();
        }
    }
    // theta = ones + s theta0, with s chosen to put theta on the hyperplane;
    // scaled by the denominator of s
    let ai = wide(a);
    let ones: Vec<BigInt> = (0..n).map(|i| BigInt::from((i != 0) as i64)).collect();
    let (num, den) = (-int_dot(&ai, &ones), int_dot(&ai, &theta0));
    let (num, den) = if den.is_negative() { (-num, -den) } else { (num, den) };
    let theta: Vec<BigInt> = (0..n).map(|i| &ones[i] * &den + &num * &theta0[i]).collect();
    if den.is_zero()
        || !int_dot(&ai, &theta).is_zero()
        || others.iter().any(|b| !int_dot(&wide(b), &theta).is_positive())
    {
        return Err(Error::Inconsistency("facet witness fails verification".into()));
    }
    // zero only when the stability space is a line
    let g = theta.iter().fold(BigInt::zero(), |g, x| num_integer::Integer::gcd(&g, x));
    let g = if g.is_zero() { BigInt::one() } else { g };
    Ok(Some(theta.into_iter().map(|x| BigRational::from_integer(x / &g)).collect()))
}

fn letter(k: usize) -> String {
    let mut s = String::new();
    let mut k = k + 1;
    while k > 0 {
        k -= 1;
        s.insert(0, (b'A' + (k % 26) as u8) as char);
        k /= 26;
    }
    s
}

/// Chain edges in traversal order. The walk starts at the first corner if
/// the chain reaches it, else at the smallest leaf that is not a corner.
pub fn chain_order(t: &Triangulation, r: &Recipe, chi: Character) -> Vec<usize> {
    let chain = r.chain(chi).expect("marking character");
    let start = chain
        .vertices
        .iter()
        .copied()
        .filter(|&v| chain.edges_at(t, v).len() == 1)
        .min_by_key(|&v| {
            let p = &t.vertices[v].point;
            let rank = match (p.is_corner(), p.num[0] != 0) {
                (true, true) => 0,
                (false, _) => 1,
                (true, false) => 2,
            };
            (rank, p.num)
        })
        .unwrap_or(chain.vertices[0]);
    let mut order = Vec::new();
    let mut seen = BTreeSet::new();
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        let mut next: Vec<usize> = chain.edges_at(t, v).into_iter().filter(|e| !seen.contains(e)).collect();
        next.sort();
        for &e in next.iter().rev() {
            seen.insert(e);
            stack.push(t.edges[e].other(v));
        }
        order.extend(next);
    }
    order
}

/// Assembles, reduces and classifies every inequality.
pub fn compute_walls(t: &Triangulation, r: &Recipe, config: &ChamberConfig) -> Result<WallReport> {
    let g = &t.group;
    let n = g.order() as usize;
    let pieces = unlock_all(t, r)?;
    let mut warnings = Vec::new();
    let long_sides = generalised_long_sides(t, r)?;
    let finals: BTreeSet<usize> = long_sides.iter().flat_map(|l| l.final_curves.iter().copied()).collect();

    let mut ineqs: Vec<Inequality> = Vec::new();
    let mut letters: BTreeMap<Character, usize> = BTreeMap::new();
    let mut next_label = |c: Character| {
        let k = letters.entry(c).or_default();
        *k += 1;
        format!("{}{}", letter(*k - 1), c.0)
    };
    // curves, chain by chain
    let mut chars: Vec<Character> = r.chains().map(|c| c.character).collect();
    chars.sort();
    for chi in chars {
        for e in chain_order(t, r, chi) {
            let coeffs = curve_inequality(t, r, &pieces[&e])?;
            ineqs.push(Inequality {
                label: next_label(chi),
                coeffs,
                source: Source::Curve(e),
                status: Status::Redundant,
                certificate: None,
            });
        }
    }
    let mut subs = subsheaf_inequalities(t, r);
    subs.sort_by_key(|&(v, psi)| (psi, v));
    for (v, psi) in subs {
        let mut coeffs = vec![0u64; n];
        coeffs[psi.index()] = 1;
        ineqs.push(Inequality {
            label: next_label(psi),
            coeffs,
            source: Source::Subsheaf { vertex: v, character: psi.0 },
            status: Status::Redundant,
            certificate: None,
        });
    }
    let interior = t.interior_vertices().count();
    let cap = match config.max_quotient_size {
        Some(c) => Some(c),
        None if interior > UNCAPPED_LIMIT => {
            warnings.push(format!(
                "{interior} interior vertices: quotient divisors capped at {DEFAULT_CAP} vertices"
            ));
            Some(DEFAULT_CAP)
        }
        None => None,
    };
    // characters on the curves at each interior vertex
    let mut at: BTreeMap<usize, FixedBitSet> = BTreeMap::new();
    for v in t.interior_vertices() {
        let mut bits = FixedBitSet::with_capacity(n);
        for e in &t.vertices[v].edges {
            for ch in &pieces[e].characters {
                bits.insert(ch.index());
            }
        }
        at.insert(v, bits);
    }
    let mut unions: HashSet<FixedBitSet> = HashSet::new();
    for d in connected_subsets(t, cap) {
        let mut bits = FixedBitSet::with_capacity(n);
        for v in &d {
            bits.union_with(&at[v]);
        }
        if unions.contains(&bits) {
            continue;
        }
        let coeffs = (0..n).map(|i| bits.contains(i) as u64).collect();
        unions.insert(bits);
        let sub = d
            .iter()
            .flat_map(|&v| r.vertex_marks[v].iter().copied())
            .min()
            .expect("interior vertices are marked");
        ineqs.push(Inequality {
            label: next_label(sub),
            coeffs,
            source: Source::Quotient(d),
            status: Status::Redundant,
            certificate: None,
        });
    }

    // duplicates
    let mut first: BTreeMap<Vec<u64>, usize> = BTreeMap::new();
    let mut reps = Vec::new();
    for (i, q) in ineqs.iter_mut().enumerate() {
        match first.get(&q.coeffs) {
            Some(&j) => q.status = Status::Duplicate(j),
            None => {
                first.insert(q.coeffs.clone(), i);
                reps.push(i);
            }
        }
    }

    // both engines on every distinct inequality
    for &i in &reps {
        let a = ineqs[i].coeffs.clone();
        let others: Vec<(usize, &[u64])> = reps
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| (j, ineqs[j].coeffs.as_slice()))
            .collect();
        let sum = summand_decomposition(&others, &a);
        let plain: Vec<&[u64]> = others.iter().map(|(_, b)| *b).collect();
        let witness = facet_witness(&plain, &a)?;
        let (status, cert) = match (sum, witness) {
            (Some(s), None) => (Status::Redundant, Certificate::Sum(s)),
            (None, Some(w)) => {
                let ty = wall_type(t, &ineqs[i].source, &finals);
                (
                    Status::Wall(ty.unwrap_or(WallType::Zero)),
                    Certificate::Witness(w.iter().map(|x| x.to_string()).collect()),
                )
            }
            (Some(_), Some(_)) => {
                return Err(Error::Inconsistency(format!(
                    "{}: an integer decomposition exists but the facet test separates it",
                    ineqs[i].label
                )))
            }
            (None, None) => {
                return Err(Error::Inconsistency(format!(
                    "{}: lies in the cone of the others but is no integer sum of them",
                    ineqs[i].label
                )))
            }
        };
        if let Status::Wall(_) = status {
            if wall_type(t, &ineqs[i].source, &finals).is_none() {
                return Err(Error::Invariant(format!(
                    "{} from {:?} is a wall but is neither a (-1,-1)-curve nor a final curve",
                    ineqs[i].label, ineqs[i].source
                )));
            }
        }
        ineqs[i].status = status;
        ineqs[i].certificate = Some(cert);
    }

    let mut walls = Vec::new();
    for &i in &reps {
        if let Status::Wall(ty) = ineqs[i].status {
            let (support_edges, divisor) = wall_support(t, &pieces, &ineqs[i].coeffs);
            walls.push(Wall {
                wall_type: ty,
                inequality: i,
                support_edges,
                divisor,
            });
        }
    }
    let report = WallReport {
        inequalities: ineqs,
        walls,
        long_sides,
        pieces,
        warnings,
    };
    check_census(t, &report)?;
    Ok(report)
}

/// Type of a wall by the source of its inequality; `None` for curves that
/// may not give walls.
fn wall_type(t: &Triangulation, src: &Source, finals: &BTreeSet<usize>) -> Option<WallType> {
    match src {
        Source::Curve(e) if t.edges[*e].curve_type == CurveType::MinusOneMinusOne => Some(WallType::I),
        Source::Curve(e) if finals.contains(e) => Some(WallType::III),
        Source::Curve(_) => None,
        Source::Subsheaf { .. } | Source::Quotient(_) => Some(WallType::Zero),
    }
}

/// Curves whose G-igsaw piece lies in the support of the inequality, and
/// the interior vertices surrounded by such curves.
pub fn wall_support(
    t: &Triangulation,
    pieces: &BTreeMap<usize, GigsawPiece>,
    coeffs: &[u64],
) -> (Vec<usize>, Vec<usize>) {
    let edges: Vec<usize> = pieces
        .iter()
        .filter(|(_, p)| p.characters.iter().all(|c| coeffs[c.index()] != 0))
        .map(|(&e, _)| e)
        .collect();
    let divisor = t
        .interior_vertices()
        .filter(|&v| t.vertices[v].edges.iter().all(|e| edges.binary_search(e).is_ok()))
        .collect();
    (edges, divisor)
}

/// The wall census: one Type I wall per (-1,-1)-curve, one Type III wall
/// per generalised long side, all subsheaf inequalities necessary, no
/// wall from a (1,-3)-curve, and 0/1 coefficients on Type I and III walls.
pub fn check_census(t: &Triangulation, rep: &WallReport) -> Result<()> {
    let fail = |m: String| Err(Error::Invariant(m));
    let minus_one = t
        .compact_edges()
        .filter(|&e| t.edges[e].curve_type == CurveType::MinusOneMinusOne)
        .count();
    if rep.count(WallType::I) != minus_one {
        return fail(format!(
            "{} Type I walls for {minus_one} (-1,-1)-curves",
            rep.count(WallType::I)
        ));
    }
    if rep.count(WallType::III) != rep.long_sides.len() {
        return fail(format!(
            "{} Type III walls for {} generalised long sides",
            rep.count(WallType::III),
            rep.long_sides.len()
        ));
    }
    for (i, q) in rep.inequalities.iter().enumerate() {
        let head = &rep.inequalities[rep.representative(i)];
        match &q.source {
            Source::Subsheaf { .. } if !head.is_wall() => {
                return fail(format!("subsheaf inequality {} is redundant", q.label));
            }
            Source::Curve(e) if t.edges[*e].curve_type == CurveType::OneMinusThree && head.is_wall() => {
                return fail(format!("(1,-3)-curve inequality {} is a wall", q.label));
            }
            Source::Curve(e) if t.edges[*e].curve_type == CurveType::MinusOneMinusOne && !head.is_wall() => {
                return fail(format!("(-1,-1)-curve inequality {} is redundant", q.label));
            }
            _ => {}
        }
        if matches!(head.status, Status::Wall(WallType::I | WallType::III)) && q.coeffs.iter().any(|&c| c > 1) {
            return fail(format!("wall {} has a coefficient above 1", q.label));
        }
    }
    for ls in &rep.long_sides {
        let mut vecs = BTreeSet::new();
        for &e in &ls.final_curves {
            let i = rep
                .inequalities
                .iter()
                .position(|q| q.source == Source::Curve(e))
                .expect("every curve has an inequality");
            vecs.insert(rep.inequalities[i].coeffs.clone());
        }
        if vecs.len() != 1 {
            return fail(format!(
                "final curves of the {}-chain give {} different inequalities",
                ls.character.0,
                vecs.len()
            ));
        }
    }
    Ok(())
}

/// Re-verifies a redundancy claim of the form `b_1 + ... + b_k => a`: the
/// listed sum is at most `a` and the rest is an exact nonnegative integer
/// combination of inequalities of the report. Returns that remainder
/// decomposition.
pub fn verify_claim(rep: &WallReport, parts: &[usize], target: usize) -> Result<Vec<(usize, u64)>> {
    let a = &rep.inequalities[target].coeffs;
    let mut rem = a.clone();
    for &p in parts {
        for (x, y) in rem.iter_mut().zip(&rep.inequalities[p].coeffs) {
            if *x < *y {
                return Err(Error::Invariant(format!(
                    "the claimed summands exceed {}",
                    rep.inequalities[target].label
                )));
            }
            *x -= y;
        }
    }
    let cands: Vec<(usize, &[u64])> = rep
        .inequalities
        .iter()
        .enumerate()
        .filter(|(i, q)| *i != target && matches!(q.status, Status::Wall(_) | Status::Redundant))
        .map(|(i, q)| (i, q.coeffs.as_slice()))
        .collect();
    summand_decomposition(&cands, &rem).ok_or_else(|| {
        Error::Invariant(format!(
            "remainder of the claim for {} is not a sum of inequalities",
            rep.inequalities[target].label
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_group_spec;
    use crate::triangulation::triangulate;

    fn walls_of(spec: &str) -> (Triangulation, WallReport) {
        let t = triangulate(&parse_group_spec(spec).unwrap()).unwrap();
        let r = Recipe::compute(&t).unwrap();
        let rep = compute_walls(&t, &r, &ChamberConfig::default()).unwrap();
        (t, rep)
    }

    fn vector(n: usize, terms: &[(u64, usize)]) -> Vec<u64> {
        let mut c = vec![0; n];
        for &(k, i) in terms {
            c[i] = k;
        }
        c
    }

    fn ones(n: usize, idx: &[usize]) -> Vec<u64> {
        vector(n, &idx.iter().map(|&i| (1, i)).collect::<Vec<_>>())
    }

    #[test]
    fn six_walls_of_one_sixth() {
        let (_, rep) = walls_of("1/6(1,2,3)");
        let got: Vec<(&str, Vec<u64>)> = rep
            .inequalities
            .iter()
            .map(|q| (q.label.as_str(), q.coeffs.clone()))
            .collect();
        let want = vec![
            ("A1", ones(6, &[1])),
            ("A2", ones(6, &[2, 5])),
            ("B2", vector(6, &[(1, 2), (1, 3), (2, 4), (2, 5)])),
            ("A3", ones(6, &[3, 5])),
            ("B3", ones(6, &[3, 4, 5])),
            ("A4", ones(6, &[4])),
            ("A5", ones(6, &[5])),
            ("B5", ones(6, &[2, 3, 4, 5])),
        ];
        assert_eq!(got, want);
        let walls: Vec<(WallType, &str)> = rep
            .walls
            .iter()
            .map(|w| (w.wall_type, rep.inequalities[w.inequality].label.as_str()))
            .collect();
        use WallType::*;
        assert_eq!(
            walls,
            vec![(I, "A1"), (III, "A2"), (I, "A3"), (I, "A4"), (Zero, "A5"), (Zero, "B5")]
        );
        for l in ["B2", "B3"] {
            let q = &rep.inequalities[rep.by_label(l).unwrap()];
            assert_eq!(q.status, Status::Redundant);
            let Some(Certificate::Sum(parts)) = &q.certificate else { panic!() };
            let mut sum = vec![0; 6];
            for &(j, k) in parts {
                for (s, c) in sum.iter_mut().zip(&rep.inequalities[j].coeffs) {
                    *s += k * c;
                }
            }
            assert_eq!(sum, q.coeffs);
        }
    }

    #[test]
    fn final_curves_of_one_thirty_fifth() {
        let (t, rep) = walls_of("1/35(1,3,31)");
        let side = rep.long_sides.iter().find(|l| l.character == Character(15)).unwrap();
        assert_eq!(side.final_curves, vec![8, 27]);
        let wall = ones(35, &[15, 16, 17, 18]);
        for l in ["C15", "D15"] {
            assert_eq!(rep.inequalities[rep.by_label(l).unwrap()].coeffs, wall);
        }
        let c15 = rep.by_label("C15").unwrap();
        assert_eq!(rep.inequalities[c15].status, Status::Wall(WallType::III));
        // summands as printed, looked up by coefficients
        let find = |idx: &[usize]| {
            let v = ones(35, idx);
            rep.inequalities.iter().position(|q| q.coeffs == v).unwrap()
        };
        let (a7, a11, a21, a24) = (find(&[7, 10, 13]), find(&[11, 14]), find(&[21]), find(&[20, 24]));
        for (target, parts) in [("A15", vec![c15, a7, a11, a21, a24]), ("B15", vec![c15, a11, a21])] {
            let a = rep.by_label(target).unwrap();
            assert_eq!(rep.inequalities[a].status, Status::Redundant);
            assert_eq!(verify_claim(&rep, &parts, a).unwrap(), vec![]);
        }
        assert!(t.compact_edges().count() > 0);
    }

    #[test]
    fn type_three_walls_of_one_twenty_fifth() {
        let (_, rep) = walls_of("1/25(1,3,21)");
        let mut got: Vec<Vec<u64>> = rep
            .walls
            .iter()
            .filter(|w| w.wall_type == WallType::III)
            .map(|w| rep.inequalities[w.inequality].coeffs.clone())
            .collect();
        got.sort();
        let mut want = vec![
            ones(25, &[3, 4, 8, 12, 16, 20, 24]),
            ones(25, &[9, 10, 11, 12]),
            ones(25, &[21, 22, 23, 24]),
        ];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn summands_and_facets_agree_on_a_toy_system() {
        let a = [0u64, 2, 1, 1];
        let b1 = [0u64, 1, 1, 0];
        let b2 = [0u64, 1, 0, 1];
        let b3 = [0u64, 0, 0, 1];
        let sum = summand_decomposition(&[(1, &b1), (2, &b2), (3, &b3)], &a).unwrap();
        assert_eq!(sum, vec![(1, 1), (2, 1)]);
        assert!(facet_witness(&[&b1, &b2, &b3], &a).unwrap().is_none());
        let w = facet_witness(&[&a, &b2, &b3], &b1).unwrap().unwrap();
        assert_eq!(w[0], BigRational::zero());
        assert!(summand_decomposition(&[(0, &b1)], &[0, 1, 2, 0]).is_none());
    }

    #[test]
    fn letters_run_past_z() {
        assert_eq!(letter(0), "A");
        assert_eq!(letter(25), "Z");
        assert_eq!(letter(26), "AA");
        assert_eq!(letter(27), "AB");
    }

    #[test]
    fn quotient_divisors_must_be_connected() {
        let t = triangulate(&parse_group_spec("1/30(25,2,3)").unwrap()).unwrap();
        let r = Recipe::compute(&t).unwrap();
        let pieces = unlock_all(&t, &r).unwrap();
        let far: Vec<usize> = t.interior_vertices().collect();
        let (a, b) = (far[0], *far.last().unwrap());
        assert!(t.edge_between(a, b).is_none());
        assert!(matches!(quotient_inequality(&t, &pieces, &[a, b]), Err(Error::Usage(_))));
        let all = connected_subsets(&t, None);
        assert!(all.windows(2).all(|w| (w[0].len(), &w[0]) < (w[1].len(), &w[1])));
        assert_eq!(connected_subsets(&t, Some(1)).len(), far.len());
    }
}
