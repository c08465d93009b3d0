//! Exact rational points, canonical line keys and the incidence predicates.
//!
//! Every decision made anywhere in the crate bottoms out in one of the
//! predicates here, and all of them run on arbitrary-precision rationals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Canonical arbitrary-precision rational: positive denominator, reduced.
pub type Rational = BigRational;

/// Builds `num / den` from machine integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses the point-file rational syntax: `-?digits(/digits)?`.
///
/// The denominator must be positive; the result is reduced.
pub fn parse_rational(text: &str) -> Option<Rational> {
    fn digits(s: &str) -> Option<BigInt> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return None;
        }
        BigInt::from_str(s).ok()
    }
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (digits(n)?, digits(d)?),
        None => (digits(body)?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    let num = if negative { -num } else { num };
    Some(Rational::new(num, den))
}

/// A point of the plane with exact rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    /// Point with integer coordinates.
    pub fn int(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[String; 2]>::deserialize(d)?;
        let parse = |t: &str| {
            parse_rational(t)
                .ok_or_else(|| serde::de::Error::custom(format!("invalid rational {t:?}")))
        };
        Ok(Point::new(parse(&x)?, parse(&y)?))
    }
}

/// Canonical integer homogeneous coordinates of a line `a·x + b·y + c = 0`.
///
/// Invariants: `(a, b) != (0, 0)`, `gcd(|a|, |b|, |c|) = 1`, and the first
/// nonzero of `(a, b)` is positive. Equal lines have equal keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LineKey {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl LineKey {
    /// Canonicalizes an arbitrary nonzero integer multiple of a line.
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::DegenerateLine);
        }
        let g = a.gcd(&b).gcd(&c);
        let (mut a, mut b, mut c) = (a / &g, b / &g, c / &g);
        let leading_negative = if a.is_zero() {
            b.is_negative()
        } else {
            a.is_negative()
        };
        if leading_negative {
            a = -a;
            b = -b;
            c = -c;
        }
        Ok(LineKey { a, b, c })
    }

    /// Convenience constructor for tests and fixtures.
    pub fn from_i64(a: i64, b: i64, c: i64) -> Result<Self> {
        LineKey::new(a.into(), b.into(), c.into())
    }

    /// Canonical key from rational coefficients (denominators are cleared).
    fn from_rationals(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let scale = |r: Rational| (r * Rational::from_integer(l.clone())).to_integer();
        LineKey::new(scale(a), scale(b), scale(c))
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// Evaluates `a·x + b·y + c` at `p`.
    pub fn eval(&self, p: &Point) -> Rational {
        Rational::from_integer(self.a.clone()) * &p.x
            + Rational::from_integer(self.b.clone()) * &p.y
            + Rational::from_integer(self.c.clone())
    }
}

impl fmt::Display for LineKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// JSON integers: plain numbers while they fit in `i64`, decimal strings otherwise.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    fn from_big(v: &BigInt) -> Self {
        match v.to_i64() {
            Some(s) => JsonInt::Small(s),
            None => JsonInt::Big(v.to_string()),
        }
    }

    fn into_big(self) -> Option<BigInt> {
        match self {
            JsonInt::Small(v) => Some(v.into()),
            JsonInt::Big(s) => BigInt::from_str(&s).ok(),
        }
    }
}

impl Serialize for LineKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [
            JsonInt::from_big(&self.a),
            JsonInt::from_big(&self.b),
            JsonInt::from_big(&self.c),
        ]
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LineKey {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b, c] = <[JsonInt; 3]>::deserialize(d)?;
        let bad = || serde::de::Error::custom("invalid line coefficient");
        let key = LineKey::new(
            a.into_big().ok_or_else(bad)?,
            b.into_big().ok_or_else(bad)?,
            c.into_big().ok_or_else(bad)?,
        )
        .map_err(serde::de::Error::custom)?;
        Ok(key)
    }
}

/// Bound under which integer coordinates take the machine-word path:
/// differences fit in `i64` and their products in `i128`.
const SMALL: i64 = 1 << 62;

fn small_int(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    r.numer().to_i64().filter(|v| v.abs() < SMALL)
}

fn small_coords(p: &Point) -> Option<(i64, i64)> {
    Some((small_int(&p.x)?, small_int(&p.y)?))
}

/// The line spanned by two distinct points.
pub fn line_through(p: &Point, q: &Point) -> Result<LineKey> {
    if p == q {
        return Err(Error::DegeneratePair);
    }
    if let (Some((px, py)), Some((qx, qy))) = (small_coords(p), small_coords(q)) {
        let a = (py - qy) as i128;
        let b = (qx - px) as i128;
        let c = -(a * px as i128 + b * py as i128);
        return LineKey::new(a.into(), b.into(), c.into());
    }
    let a = &p.y - &q.y;
    let b = &q.x - &p.x;
    let c = -(&a * &p.x + &b * &p.y);
    LineKey::from_rationals(a, b, c)
}

/// Twice the signed area of `p q r`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Rational {
    (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x)
}

/// Exact collinearity; duplicated arguments count as collinear.
///
/// Coordinates are scaled to a common denominator first so the test runs on
/// integers, in machine words when they are small enough.
pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    if let (Some(p), Some(q), Some(r)) = (small_coords(p), small_coords(q), small_coords(r)) {
        return small_orientation_is_zero(p, q, r);
    }
    let common = [&p.x, &p.y, &q.x, &q.y, &r.x, &r.y]
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let scale = |v: &Rational| v.numer() * (&common / v.denom());
    let [px, py, qx, qy, rx, ry] = [&p.x, &p.y, &q.x, &q.y, &r.x, &r.y].map(scale);
    let small = [&px, &py, &qx, &qy, &rx, &ry].map(|v| v.to_i64().filter(|v| v.abs() < SMALL));
    if let [Some(px), Some(py), Some(qx), Some(qy), Some(rx), Some(ry)] = small {
        return small_orientation_is_zero((px, py), (qx, qy), (rx, ry));
    }
    (&qx - &px) * (&ry - &py) == (&qy - &py) * (&rx - &px)
}

fn small_orientation_is_zero(p: (i64, i64), q: (i64, i64), r: (i64, i64)) -> bool {
    let (ux, uy) = ((q.0 - p.0) as i128, (q.1 - p.1) as i128);
    let (vx, vy) = ((r.0 - p.0) as i128, (r.1 - p.1) as i128);
    ux * vy == uy * vx
}

pub fn on_line(p: &Point, line: &LineKey) -> bool {
    line.eval(p).is_zero()
}

/// Common point of two distinct lines, `None` when they are parallel.
pub fn intersect(l1: &LineKey, l2: &LineKey) -> Result<Option<Point>> {
    if l1 == l2 {
        return Err(Error::CoincidentLines);
    }
    let det = &l1.a * &l2.b - &l2.a * &l1.b;
    if det.is_zero() {
        return Ok(None);
    }
    let x = Rational::new(&l1.b * &l2.c - &l2.b * &l1.c, det.clone());
    let y = Rational::new(&l2.a * &l1.c - &l1.a * &l2.c, det);
    Ok(Some(Point::new(x, y)))
}
