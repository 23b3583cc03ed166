//! Diagonal abelian subgroups of SL(3), their characters and the junior simplex.
//!
//! A group is given by the weights of the coordinates `x, y, z` in a finite
//! abelian group `A = Z/n_1 + ... + Z/n_k`. Elements of `A` play two roles at
//! once: they index the characters of `G` and, through the identification
//! `G = Hom(A, Q/Z)`, the group elements themselves. Both are stored as a
//! single mixed-radix index, see [`Character`].

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of the character group, encoded as a mixed-radix index in
/// `0..order`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(pub u32);

impl Character {
    pub const TRIVIAL: Character = Character(0);

    pub fn is_trivial(self) -> bool {
        self.0 == 0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A monomial `x^a y^b z^c`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(pub [u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut e = self.0;
        e[i] += 1;
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..3).all(|i| self.0[i] <= other.0[i])
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other).then(|| {
            Monomial([
                other.0[0] - self.0[0],
                other.0[1] - self.0[1],
                other.0[2] - self.0[2],
            ])
        })
    }

    /// Exponent difference `other - self` as a signed vector.
    pub fn log_ratio(&self, other: &Monomial) -> [i64; 3] {
        [
            other.0[0] as i64 - self.0[0] as i64,
            other.0[1] as i64 - self.0[1] as i64,
            other.0[2] as i64 - self.0[2] as i64,
        ]
    }

    /// Splits a signed exponent vector into numerator and denominator.
    pub fn split(v: [i64; 3]) -> (Monomial, Monomial) {
        let pos = v.map(|t| t.max(0) as u32);
        let neg = v.map(|t| (-t).max(0) as u32);
        (Monomial(pos), Monomial(neg))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == [0, 0, 0] {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in ["x", "y", "z"].iter().zip(self.0) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A point of the lattice `N` on the plane `x + y + z = 1`, stored as integer
/// numerators over the group exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    /// Numerators; the coordinates are `num[i] / den`.
    pub num: [i64; 3],
    pub den: i64,
    /// The group element whose eigenvalue exponents give this point modulo
    /// `Z^3` (trivial for the corners `e_i`).
    pub element: Character,
}

impl LatticePoint {
    pub fn coords(&self) -> [Ratio<i64>; 3] {
        self.num.map(|n| Ratio::new(n, self.den))
    }

    pub fn is_corner(&self) -> bool {
        self.num.contains(&self.den)
    }

    /// True when the point lies on the boundary of the junior simplex.
    pub fn on_boundary(&self) -> bool {
        self.num.contains(&0)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{})/{}",
            self.num[0], self.num[1], self.num[2], self.den
        )
    }
}

/// A finite abelian subgroup of SL(3) acting diagonally.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupData {
    factors: Vec<u32>,
    /// Weights of x, y, z; one entry per cyclic factor.
    weights: [Vec<u32>; 3],
    order: u32,
    exponent: u32,
}

impl GroupData {
    /// Builds a group from cyclic factors and per-factor weight triples.
    pub fn new(factors: Vec<u32>, weights: Vec<[u32; 3]>) -> Result<Self> {
        if factors.is_empty() || factors.len() != weights.len() {
            return Err(Error::Parse("need one weight triple per factor".into()));
        }
        let mut order: u64 = 1;
        let mut exponent: u64 = 1;
        for &n in &factors {
            if n == 0 {
                return Err(Error::Parse("cyclic factor of order 0".into()));
            }
            order *= n as u64;
            exponent = exponent.lcm(&(n as u64));
        }
        if order > u32::MAX as u64 / 4 {
            return Err(Error::Parse("group order too large".into()));
        }
        for (n, w) in factors.iter().zip(&weights) {
            let s: u64 = w.iter().map(|&t| t as u64).sum();
            if !s.is_multiple_of(*n as u64) {
                return Err(Error::NotInSl3 {
                    weights: *w,
                    order: *n,
                });
            }
        }
        let ws = |i: usize| -> Vec<u32> {
            factors
                .iter()
                .zip(&weights)
                .map(|(n, w)| w[i] % n)
                .collect()
        };
        let g = GroupData {
            weights: [ws(0), ws(1), ws(2)],
            factors,
            order: order as u32,
            exponent: exponent as u32,
        };
        // every nontrivial element must act nontrivially on C^3
        for e in 1..g.order {
            if g.eigen_exponents(Character(e)) == [0, 0, 0] {
                return Err(Error::NotFaithful);
            }
        }
        Ok(g)
    }

    /// The cyclic group `1/r(a,b,c)`.
    pub fn cyclic(r: u32, a: u32, b: u32, c: u32) -> Result<Self> {
        Self::new(vec![r], vec![[a, b, c]])
    }

    pub fn trivial() -> Self {
        Self::cyclic(1, 0, 0, 0).expect("trivial group")
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Least common multiple of the factors; denominator of junior points.
    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() == 1
    }

    /// Weight of coordinate `i` (0 = x, 1 = y, 2 = z) as a character.
    pub fn weight(&self, i: usize) -> Character {
        self.encode(&self.weights[i])
    }

    pub fn characters(&self) -> impl Iterator<Item = Character> {
        (0..self.order).map(Character)
    }

    pub fn nontrivial_characters(&self) -> impl Iterator<Item = Character> {
        (1..self.order).map(Character)
    }

    /// Components of a character in the cyclic factors.
    pub fn decode(&self, c: Character) -> Vec<u32> {
        let mut rest = c.0;
        let mut out = vec![0; self.factors.len()];
        for (k, &n) in self.factors.iter().enumerate().rev() {
            out[k] = rest % n;
            rest /= n;
        }
        out
    }

    pub fn encode(&self, comps: &[u32]) -> Character {
        let mut idx = 0u32;
        for (&n, &c) in self.factors.iter().zip(comps) {
            idx = idx * n + c % n;
        }
        Character(idx)
    }

    pub fn add(&self, a: Character, b: Character) -> Character {
        let (x, y) = (self.decode(a), self.decode(b));
        let s: Vec<u32> = x
            .iter()
            .zip(&y)
            .zip(&self.factors)
            .map(|((p, q), n)| (p + q) % n)
            .collect();
        self.encode(&s)
    }

    pub fn neg(&self, a: Character) -> Character {
        let s: Vec<u32> = self
            .decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(p, n)| (n - p) % n)
            .collect();
        self.encode(&s)
    }

    pub fn scale(&self, a: Character, k: i64) -> Character {
        let s: Vec<u32> = self
            .decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(&p, &n)| (p as i64 * k).rem_euclid(n as i64) as u32)
            .collect();
        self.encode(&s)
    }

    /// Additive order of a character.
    pub fn char_order(&self, a: Character) -> u32 {
        self.decode(a)
            .iter()
            .zip(&self.factors)
            .map(|(&p, &n)| if p == 0 { 1 } else { n / p.gcd(&n) })
            .fold(1, |acc, k| acc.lcm(&k))
    }

    /// The character by which the group acts on a monomial.
    pub fn character_of(&self, m: &Monomial) -> Character {
        self.character_of_exponents(&m.0.map(|e| e as i64))
    }

    /// Character of a Laurent monomial given by a signed exponent vector.
    pub fn character_of_exponents(&self, e: &[i64; 3]) -> Character {
        let comps: Vec<u32> = self
            .factors
            .iter()
            .enumerate()
            .map(|(k, &n)| {
                let n = n as i64;
                let s: i64 = (0..3)
                    .map(|i| e[i] * self.weights[i][k] as i64)
                    .sum();
                s.rem_euclid(n) as u32
            })
            .collect();
        self.encode(&comps)
    }

    /// Eigenvalue exponents of a group element on x, y, z, as numerators
    /// over [`GroupData::exponent`] in `0..exponent`.
    pub fn eigen_exponents(&self, g: Character) -> [i64; 3] {
        let l = self.exponent as i64;
        let comps = self.decode(g);
        let mut out = [0i64; 3];
        for (i, o) in out.iter_mut().enumerate() {
            let mut s = 0i64;
            for (k, &n) in self.factors.iter().enumerate() {
                s += comps[k] as i64 * self.weights[i][k] as i64 * (l / n as i64);
            }
            *o = s.rem_euclid(l);
        }
        out
    }

    /// The corners `e_1, e_2, e_3` together with every age-one group element,
    /// sorted lexicographically by coordinates.
    pub fn junior_points(&self) -> Vec<LatticePoint> {
        let l = self.exponent as i64;
        let mut pts = Vec::new();
        for i in 0..3 {
            let mut num = [0; 3];
            num[i] = l;
            pts.push(LatticePoint {
                num,
                den: l,
                element: Character::TRIVIAL,
            });
        }
        for g in self.nontrivial_characters() {
            let e = self.eigen_exponents(g);
            if e.iter().sum::<i64>() == l {
                pts.push(LatticePoint {
                    num: e,
                    den: l,
                    element: g,
                });
            }
        }
        pts.sort();
        pts
    }

    /// Renders a character the way the paper-style tables do: an integer for
    /// cyclic groups, a tuple otherwise.
    pub fn char_label(&self, c: Character) -> String {
        if self.is_cyclic() {
            c.0.to_string()
        } else {
            let parts: Vec<String> = self.decode(c).iter().map(|p| p.to_string()).collect();
            format!("({})", parts.join(","))
        }
    }

    pub fn char_tuple(&self, c: Character) -> Vec<u32> {
        self.decode(c)
    }
}

impl fmt::Display for GroupData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .enumerate()
            .map(|(k, n)| {
                format!(
                    "1/{}({},{},{})",
                    n, self.weights[0][k], self.weights[1][k], self.weights[2][k]
                )
            })
            .collect();
        write!(f, "{}", parts.join(";"))
    }
}

/// Parses `1/r(a,b,c)`, or several such factors separated by `;`.
pub fn parse_group_spec(text: &str) -> Result<GroupData> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty group spec".into()));
    }
    let mut factors = Vec::new();
    let mut weights = Vec::new();
    for part in compact.split(';') {
        let bad = || Error::Parse(format!("expected `1/r(a,b,c)`, got `{part}`"));
        let rest = part.strip_prefix("1/").ok_or_else(bad)?;
        let open = rest.find('(').ok_or_else(bad)?;
        let body = rest[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let r: u32 = rest[..open].parse().map_err(|_| bad())?;
        let ws: Vec<u32> = body
            .split(',')
            .map(|t| t.parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        if ws.len() != 3 {
            return Err(bad());
        }
        factors.push(r);
        weights.push([ws[0], ws[1], ws[2]]);
    }
    GroupData::new(factors, weights)
}
