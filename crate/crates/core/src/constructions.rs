//! Deterministic generators for the reference configurations and the two
//! parameterized families built from them.
//!
//! The families are realized by concrete recipes and then checked against
//! the properties they are meant to exhibit; a recipe that fails its checks
//! is retried with the next parameters in a fixed sequence.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::geometry::{int, intersect, line_through, rat, LineKey, Point, Rational};
use crate::incidence::Configuration;
use crate::orbit::{decompose, maximal_orbit, orbit_length, BaseLine};

/// Retries per family before giving up.
const RETRY_BUDGET: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstructionSpec {
    SixPoint,
    NinePoint,
    ClosedOrbit(usize),
    GExtended(usize),
}

impl ConstructionSpec {
    pub fn build(self) -> Result<Configuration> {
        match self {
            ConstructionSpec::SixPoint => Ok(six_point()),
            ConstructionSpec::NinePoint => Ok(nine_point()),
            ConstructionSpec::ClosedOrbit(k) => closed_orbit_config(k),
            ConstructionSpec::GExtended(m) => g_extended(m),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructionSpec::SixPoint => write!(f, "six"),
            ConstructionSpec::NinePoint => write!(f, "nine"),
            ConstructionSpec::ClosedOrbit(k) => write!(f, "closed-orbit k={k}"),
            ConstructionSpec::GExtended(m) => write!(f, "g-ext m={m}"),
        }
    }
}

fn six_point_coords() -> Vec<Point> {
    vec![
        Point::int(-2, 0),
        Point::int(2, 0),
        Point::int(-1, 2),
        Point::int(1, 2),
        Point::int(0, 4),
        Point::new(int(0), rat(4, 3)),
    ]
}

/// `a, b, x1, x2, x3, y`: 3-bounded, three simple lines, no simple wedge.
pub fn six_point() -> Configuration {
    Configuration::new(six_point_coords()).expect("six-point fixture is valid")
}

/// The six-point set plus `g1, g2, g3`: odd size, not 3-bounded, and the
/// base line through `a` and `b` is the only simple line at either endpoint.
pub fn nine_point() -> Configuration {
    let mut points = six_point_coords();
    points.extend([
        Point::new(rat(-2, 3), rat(8, 3)),
        Point::new(rat(2, 3), rat(8, 3)),
        Point::int(0, 2),
    ]);
    Configuration::new(points).expect("nine-point fixture is valid")
}

fn pencil_line(through: &Point, slope: &Rational) -> LineKey {
    // y = slope * (x - through.x) + through.y, via a second point one unit right
    let other = Point::new(&through.x + int(1), &through.y + slope);
    line_through(through, &other).expect("distinct points")
}

/// Slopes for attempt `r`: positive through `a`, negative through `b`.
fn zigzag_slopes(k: usize, r: u32) -> (Vec<Rational>, Vec<Rational>) {
    let shift = r as i64;
    let alphas = (1..=k as i64).map(|m| rat(m + shift, 1 + shift)).collect();
    let betas = (1..=k as i64)
        .map(|m| rat(-(2 * m + 1 + 2 * shift), 2 + 3 * shift))
        .collect();
    (alphas, betas)
}

fn zigzag(k: usize, r: u32) -> Option<Vec<Point>> {
    let a = Point::int(-1, 0);
    let b = Point::int(1, 0);
    let (alphas, betas) = zigzag_slopes(k, r);
    let through_a: Vec<LineKey> = alphas.iter().map(|s| pencil_line(&a, s)).collect();
    let through_b: Vec<LineKey> = betas.iter().map(|s| pencil_line(&b, s)).collect();
    let mut points = vec![a, b];
    for m in 0..k {
        let prev_a = &through_a[(m + k - 1) % k];
        points.push(intersect(prev_a, &through_b[m]).ok()??);
        points.push(intersect(&through_a[m], &through_b[m]).ok()??);
    }
    Some(points)
}

/// A 3-bounded set of `2k + 2` points whose base line `(0, 1)` carries a
/// single closed orbit of length `2k` through all other points.
///
/// Points alternate between intersections of consecutive lines from the
/// pencils through `a = (-1, 0)` and `b = (1, 0)`.
pub fn closed_orbit_config(k: usize) -> Result<Configuration> {
    if k < 2 {
        return Err(Error::Usage(format!("closed-orbit needs k >= 2, got {k}")));
    }
    for r in 0..RETRY_BUDGET {
        let Some(points) = zigzag(k, r) else { continue };
        let Ok(config) = Configuration::new(points) else {
            continue;
        };
        if closed_orbit_valid(&config, k) {
            return Ok(config);
        }
    }
    Err(Error::ConstructionFailed(format!("k={k}")))
}

fn closed_orbit_valid(config: &Configuration, k: usize) -> bool {
    if !config.is_three_bounded() {
        return false;
    }
    let Ok(base) = BaseLine::new(config, 0, 1) else {
        return false;
    };
    match maximal_orbit(config, &base, 2) {
        Ok(o) if o.is_closed() && orbit_length(&o) == 2 * k => {}
        _ => return false,
    }
    matches!(decompose(config, &base), Ok(d) if d.closed.len() == 1 && d.open.is_none())
}

/// Parameters along the line through `a` and `x1`, in `(0, 2)` and away
/// from the values already used by `x1` (1) and `g1` (4/3).
fn g_parameters() -> impl Iterator<Item = Rational> {
    (2i64..).flat_map(|den| (1..2 * den).map(move |num| rat(num, den)))
}

/// The nine-point set with `m - 1` further triples of the same shape.
/// `m` must be odd so that the total size `6 + 3m` is odd.
pub fn g_extended(m: usize) -> Result<Configuration> {
    if m == 0 || m.is_multiple_of(2) {
        return Err(Error::Usage(format!(
            "g-ext needs an odd m >= 1 (size 6 + 3m must be odd), got {m}"
        )));
    }
    let a = Point::int(-2, 0);
    let b = Point::int(2, 0);
    let mut points = nine_point().into_points();
    let mut present: HashSet<Point> = points.iter().cloned().collect();
    let mut params = g_parameters();
    let mut retries = 0;
    while points.len() < 6 + 3 * m {
        let s = params.next().expect("infinite sequence");
        // g1' = a + s (x1 - a) with x1 - a = (1, 2)
        let g1 = Point::new(&a.x + &s, &s * int(2));
        let g2 = Point::new(-g1.x.clone(), g1.y.clone());
        let g3 = line_through(&a, &g2)
            .and_then(|l1| line_through(&b, &g1).and_then(|l2| intersect(&l1, &l2)))
            .ok()
            .flatten();
        let fresh = match &g3 {
            Some(g3) => {
                g1 != g2
                    && g3 != &g1
                    && !present.contains(&g1)
                    && !present.contains(&g2)
                    && !present.contains(g3)
            }
            None => false,
        };
        if !fresh {
            retries += 1;
            if retries > RETRY_BUDGET {
                return Err(Error::ConstructionFailed(format!("m={m}")));
            }
            continue;
        }
        let g3 = g3.expect("checked above");
        for p in [g1, g2, g3] {
            present.insert(p.clone());
            points.push(p);
        }
    }
    let config = Configuration::new(points)?;
    if !g_extended_valid(&config) {
        return Err(Error::ConstructionFailed(format!("m={m}")));
    }
    Ok(config)
}

/// The base line stays simple and no other simple line leaves `a` or `b`.
fn g_extended_valid(config: &Configuration) -> bool {
    config.is_simple_pair(0, 1)
        && (2..config.len()).all(|c| !config.is_simple_pair(0, c) && !config.is_simple_pair(1, c))
}
