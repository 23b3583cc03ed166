//! Exact cone membership by the simplex method over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Outcome of testing whether `a` is a nonnegative combination of generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    /// `a = sum y_j b_j` with `y >= 0`, one entry per generator
    Member(Vec<BigRational>),
    /// `theta` with `a . theta < 0` and `b . theta >= 0` for every generator
    Separated(Vec<BigRational>),
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn dot(a: &[i64], x: &[BigRational]) -> BigRational {
    a.iter()
        .zip(x)
        .filter(|(c, _)| **c != 0)
        .fold(BigRational::zero(), |s, (c, v)| s + q(*c) * v)
}

/// Numbers the simplex runs over: exact rationals, or floats with a
/// tolerance for a quick first pass.
trait Scalar: Clone + std::fmt::Debug {
    fn from_i64(n: i64) -> Self;
    fn nil() -> Self;
    fn unit() -> Self;
    fn pos(&self) -> bool;
    fn neg(&self) -> bool;
    fn is_zero(&self) -> bool {
        !self.pos() && !self.neg()
    }
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn lt(&self, o: &Self) -> bool;
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        q(n)
    }
    fn nil() -> Self {
        <Self as Zero>::zero()
    }
    fn unit() -> Self {
        <Self as One>::one()
    }
    fn pos(&self) -> bool {
        self.is_positive()
    }
    fn neg(&self) -> bool {
        self.is_negative()
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn lt(&self, o: &Self) -> bool {
        self < o
    }
}

const EPS: f64 = 1e-9;

impl Scalar for f64 {
    fn from_i64(n: i64) -> Self {
        n as f64
    }
    fn nil() -> Self {
        0.0
    }
    fn unit() -> Self {
        1.0
    }
    fn pos(&self) -> bool {
        *self > EPS
    }
    fn neg(&self) -> bool {
        *self < -EPS
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn lt(&self, o: &Self) -> bool {
        *self < *o - EPS
    }
}

enum Outcome<T> {
    Member(Vec<T>),
    Separated(Vec<T>),
}

/// Phase one of the simplex method with Bland's rule on
/// `sum y_j b_j + s = a`, `y, s >= 0`. The optimal duals separate `a` when
/// the artificial variables cannot all be driven to zero.
fn phase_one<T: Scalar>(gens: &[Vec<i64>], a: &[i64], steepest: bool) -> Outcome<T> {
    let m = a.len();
    let k = gens.len();
    let neg_rows: Vec<bool> = a.iter().map(|&x| x < 0).collect();
    // tableau rows: constraints with nonnegative right-hand side
    let width = k + m + 1;
    let mut tab: Vec<Vec<T>> = (0..m)
        .map(|i| {
            let sign = if neg_rows[i] { -1 } else { 1 };
            let mut row = vec![T::nil(); width];
            for (j, b) in gens.iter().enumerate() {
                row[j] = T::from_i64(sign * b[i]);
            }
            row[k + i] = T::unit();
            row[width - 1] = T::from_i64(sign * a[i]);
            row
        })
        .collect();
    let mut basis: Vec<usize> = (k..k + m).collect();
    // objective: minimise the sum of artificials; reduced costs kept in `cost`
    let mut cost = vec![T::nil(); width];
    for c in cost.iter_mut().take(k + m).skip(k) {
        *c = T::unit();
    }
    for row in &tab {
        for j in 0..width {
            cost[j] = cost[j].sub(&row[j]);
        }
    }
    let mut pivots = 0;
    loop {
        // Bland: smallest index with negative reduced cost; the float pass
        // takes the most negative one instead and falls back on cycling
        let enter = if steepest && pivots < 50 * width {
            (0..width - 1)
                .filter(|&j| cost[j].neg())
                .fold(None, |best: Option<usize>, j| match best {
                    Some(b) if !cost[j].lt(&cost[b]) => Some(b),
                    _ => Some(j),
                })
        } else {
            (0..width - 1).find(|&j| cost[j].neg())
        };
        let Some(enter) = enter else {
            break;
        };
        pivots += 1;
        let mut leave: Option<(usize, T)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].pos() {
                let ratio = row[width - 1].div(&row[enter]);
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => {
                        ratio.lt(lr) || (!lr.lt(&ratio) && basis[i] < basis[*li])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            unreachable!("phase one objective is bounded below");
        };
        let p = tab[r][enter].clone();
        for v in tab[r].iter_mut() {
            *v = v.div(&p);
        }
        let pivot_row = tab[r].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v = v.sub(&f.mul(pv));
                }
            }
        }
        let f = cost[enter].clone();
        for (v, pv) in cost.iter_mut().zip(&pivot_row) {
            *v = v.sub(&f.mul(pv));
        }
        basis[r] = enter;
    }
    // objective value is -cost[rhs]
    if cost[width - 1].is_zero() {
        let mut y = vec![T::nil(); k];
        for (i, &b) in basis.iter().enumerate() {
            if b < k {
                y[b] = tab[i][width - 1].clone();
            }
        }
        return Outcome::Member(y);
    }
    // duals of the sign-adjusted rows: pi_i = 1 - reduced cost of s_i
    let theta = (0..m)
        .map(|i| {
            let pi = T::unit().sub(&cost[k + i]);
            if neg_rows[i] {
                pi
            } else {
                T::nil().sub(&pi)
            }
        })
        .collect();
    Outcome::Separated(theta)
}

/// Nearest fraction with a small denominator, by continued fractions.
fn snap(x: f64) -> Option<BigRational> {
    const MAX_DEN: i64 = 1 << 20;
    let (mut p0, mut q0, mut p1, mut q1) = (0i64, 1i64, 1i64, 0i64);
    let mut y = x;
    loop {
        let f = y.floor();
        if f.abs() > 1e12 {
            return None;
        }
        let c = f as i64;
        (p0, q0, p1, q1) = (p1, q1, c * p1 + p0, c * q1 + q0);
        if q1 > MAX_DEN {
            return None;
        }
        if (x - p1 as f64 / q1 as f64).abs() < EPS {
            return Some(BigRational::new(p1.into(), q1.into()));
        }
        y = 1.0 / (y - f);
    }
}

/// Decides `a in cone(gens)` exactly. All vectors have the same length.
///
/// A floating-point pass proposes a separating vector, accepted only after
/// exact verification; otherwise the exact simplex decides.
pub fn cone_membership(gens: &[Vec<i64>], a: &[i64]) -> Membership {
    let cert = match phase_one::<f64>(gens, a, true) {
        Outcome::Separated(t) => t.into_iter().map(snap).collect::<Option<Vec<_>>>().map(Membership::Separated),
        Outcome::Member(y) => y.into_iter().map(snap).collect::<Option<Vec<_>>>().map(Membership::Member),
    };
    match cert {
        Some(c) if verify(gens, a, &c) => c,
        _ => cone_membership_exact(gens, a),
    }
}

/// Decides `a in cone(gens)` by the simplex method over the rationals.
pub fn cone_membership_exact(gens: &[Vec<i64>], a: &[i64]) -> Membership {
    match phase_one::<BigRational>(gens, a, false) {
        Outcome::Member(y) => Membership::Member(y),
        Outcome::Separated(t) => Membership::Separated(t),
    }
}

/// A positive integer multiple of a rational vector.
pub fn clear_denominators(x: &[BigRational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let l = x.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
    x.iter().map(|v| v.numer() * (&l / v.denom())).collect()
}

pub fn int_dot(a: &[i64], x: &[BigInt]) -> BigInt {
    a.iter()
        .zip(x)
        .filter(|(c, _)| **c != 0)
        .fold(BigInt::zero(), |s, (c, v)| s + v * *c)
}

/// Checks a membership certificate exactly.
pub fn verify(gens: &[Vec<i64>], a: &[i64], cert: &Membership) -> bool {
    match cert {
        Membership::Member(y) => {
            y.len() == gens.len()
                && y.iter().all(|v| !v.is_negative())
                && {
                    use num_integer::Integer;
                    let l = y.iter().fold(BigInt::one(), |l, v| l.lcm(v.denom()));
                    let yi = clear_denominators(y);
                    (0..a.len()).all(|i| {
                        let s = gens
                            .iter()
                            .zip(&yi)
                            .filter(|(b, _)| b[i] != 0)
                            .fold(BigInt::zero(), |s, (b, v)| s + v * b[i]);
                        s == &l * a[i]
                    })
                }
        }
        Membership::Separated(theta) => {
            let t = clear_denominators(theta);
            int_dot(a, &t).is_negative() && gens.iter().all(|b| !int_dot(b, &t).is_negative())
        }
    }
}
