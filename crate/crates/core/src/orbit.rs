//! Orbits of a simple base line.
//!
//! An orbit over the simple line through `a` and `b` is a sequence
//! `x_1, x_2, ...` of points off that line where each even position lies on
//! the line through `b` and its predecessor and each odd position (from the
//! third on) lies on the line through `a` and its predecessor. In a
//! 3-bounded configuration every such line holds at most one further point,
//! so the walk is deterministic: it either gets stuck (an open orbit) or
//! returns to its first point (a closed orbit).

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::geometry::{collinear, LineKey};
use crate::incidence::Configuration;

/// The simple line an orbit is built over. `a` and `b` play different roles:
/// odd steps pivot around `a`, even steps around `b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseLine {
    a: usize,
    b: usize,
    key: LineKey,
}

impl BaseLine {
    pub fn new(config: &Configuration, a: usize, b: usize) -> Result<Self> {
        let (key, members) = config.line_of(a, b)?;
        if members.len() != 2 {
            return Err(Error::NotSimple(a, b));
        }
        Ok(BaseLine {
            a,
            b,
            key: key.clone(),
        })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn key(&self) -> &LineKey {
        &self.key
    }

    fn contains(&self, i: usize) -> bool {
        i == self.a || i == self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    Open,
    Closed,
}

/// A sequence satisfying the orbit clauses. Closed orbits store their first
/// point again at the end, so `seq.len() - 1` is their length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    base: BaseLine,
    seq: Vec<usize>,
    kind: OrbitKind,
    maximal: bool,
}

impl Orbit {
    pub fn base(&self) -> &BaseLine {
        &self.base
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn is_open(&self) -> bool {
        self.kind == OrbitKind::Open
    }

    pub fn is_closed(&self) -> bool {
        self.kind == OrbitKind::Closed
    }

    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    pub fn first(&self) -> usize {
        self.seq[0]
    }

    pub fn last(&self) -> usize {
        self.seq[self.seq.len() - 1]
    }

    pub fn len(&self) -> usize {
        orbit_length(self)
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// The set of point indices visited.
    pub fn support(&self) -> HashSet<usize> {
        self.seq.iter().copied().collect()
    }

    /// Wraps an arbitrary sequence after checking it with [`verify_orbit`].
    /// The result is not marked maximal.
    pub fn from_seq(config: &Configuration, base: &BaseLine, seq: Vec<usize>) -> Option<Self> {
        if !verify_orbit(config, base, &seq) {
            return None;
        }
        let kind = kind_of(&seq);
        Some(Orbit {
            base: base.clone(),
            seq,
            kind,
            maximal: false,
        })
    }

    /// One line per position, then a summary line.
    pub fn trace(&self, config: &Configuration) -> String {
        let mut out = String::new();
        for (i, &x) in self.seq.iter().enumerate() {
            let pos = i + 1;
            let via = if pos == 1 {
                "start".to_string()
            } else if pos % 2 == 0 {
                "via pivot b".to_string()
            } else {
                "via pivot a".to_string()
            };
            let _ = writeln!(out, "pos {pos}: x_{pos} = {x} {} {via}", config.point(x));
        }
        let length = orbit_length(self);
        match (self.kind, self.maximal) {
            (OrbitKind::Closed, _) => {
                let _ = writeln!(out, "CLOSED length {length}");
            }
            (OrbitKind::Open, true) => {
                let _ = writeln!(out, "OPEN maximal length {length}");
            }
            (OrbitKind::Open, false) => {
                let _ = writeln!(out, "OPEN length {length}");
            }
        }
        out
    }
}

fn kind_of(seq: &[usize]) -> OrbitKind {
    if seq.len() > 1 && seq[0] == seq[seq.len() - 1] {
        OrbitKind::Closed
    } else {
        OrbitKind::Open
    }
}

/// Checks the four orbit clauses for `seq` (`seq[0]` is `x_1`).
///
/// Consecutive entries must also differ: `x_{k+1}` has to lie on the line
/// spanned by the pivot and `x_k`, which a repeat of `x_k` would satisfy
/// trivially.
pub fn verify_orbit(config: &Configuration, base: &BaseLine, seq: &[usize]) -> bool {
    let n = config.len();
    if seq.is_empty() || seq.iter().any(|&x| x >= n || base.contains(x)) {
        return false;
    }
    let t = seq.len();
    let mut seen = HashSet::with_capacity(t);
    if !seq[..t - 1].iter().all(|&x| seen.insert(x)) {
        return false;
    }
    let pa = config.point(base.a);
    let pb = config.point(base.b);
    seq.windows(2).enumerate().all(|(i, w)| {
        // w[1] sits at 1-based position i + 2
        let pivot = if (i + 2) % 2 == 0 { pb } else { pa };
        w[0] != w[1] && collinear(pivot, config.point(w[0]), config.point(w[1]))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Extend(usize),
    Close,
    Stuck,
}

/// Pivot for the entry that would follow a sequence of length `t`.
fn pivot_after(base: &BaseLine, t: usize) -> usize {
    if (t + 1).is_multiple_of(2) {
        base.b
    } else {
        base.a
    }
}

/// One deterministic extension step of an open orbit.
pub fn orbit_step(config: &Configuration, base: &BaseLine, seq: &[usize]) -> Result<StepOutcome> {
    if !config.is_three_bounded() {
        return Err(Error::NotThreeBounded(
            config.spanned_lines().max_line_size(),
        ));
    }
    step_unchecked(config, base, seq)
}

fn step_unchecked(config: &Configuration, base: &BaseLine, seq: &[usize]) -> Result<StepOutcome> {
    let last = seq[seq.len() - 1];
    let pivot = pivot_after(base, seq.len());
    match config.third_point(pivot, last)? {
        None => Ok(StepOutcome::Stuck),
        Some(k) if k == seq[0] => Ok(StepOutcome::Close),
        Some(k) if seq.contains(&k) => Err(Error::OrbitAnomaly {
            seq: seq.to_vec(),
            repeated: k,
        }),
        Some(k) => Ok(StepOutcome::Extend(k)),
    }
}

/// Follows the orbit from `start` until it closes or gets stuck.
pub fn maximal_orbit(config: &Configuration, base: &BaseLine, start: usize) -> Result<Orbit> {
    config.check_index(start)?;
    if base.contains(start) {
        return Err(Error::StartOnBase(start));
    }
    if !config.is_three_bounded() {
        return Err(Error::NotThreeBounded(
            config.spanned_lines().max_line_size(),
        ));
    }
    let bound = config.len();
    let mut seq = vec![start];
    for _ in 0..=bound {
        match step_unchecked(config, base, &seq)? {
            StepOutcome::Extend(k) => seq.push(k),
            StepOutcome::Close => {
                seq.push(start);
                return Ok(Orbit {
                    base: base.clone(),
                    seq,
                    kind: OrbitKind::Closed,
                    maximal: true,
                });
            }
            StepOutcome::Stuck => {
                return Ok(Orbit {
                    base: base.clone(),
                    seq,
                    kind: OrbitKind::Open,
                    maximal: true,
                });
            }
        }
    }
    Err(Error::OrbitRunaway(bound))
}

/// `t` for an open orbit, `t - 1` for a closed one.
pub fn orbit_length(orbit: &Orbit) -> usize {
    match orbit.kind {
        OrbitKind::Open => orbit.seq.len(),
        OrbitKind::Closed => orbit.seq.len() - 1,
    }
}

pub fn orbits_disjoint(x: &Orbit, y: &Orbit) -> bool {
    let xs = x.support();
    y.seq.iter().all(|p| !xs.contains(p))
}

/// Closed orbits found before the first open one, in discovery order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub closed: Vec<Orbit>,
    pub open: Option<Orbit>,
}

/// Walks maximal orbits from the lowest unused point off the base line,
/// stopping at the first open orbit.
pub fn decompose(config: &Configuration, base: &BaseLine) -> Result<Decomposition> {
    if !config.is_three_bounded() {
        return Err(Error::NotThreeBounded(
            config.spanned_lines().max_line_size(),
        ));
    }
    let mut used = vec![false; config.len()];
    used[base.a] = true;
    used[base.b] = true;
    let mut closed = Vec::new();
    while let Some(start) = used.iter().position(|u| !u) {
        let orbit = maximal_orbit(config, base, start)?;
        if orbit.is_open() {
            return Ok(Decomposition {
                closed,
                open: Some(orbit),
            });
        }
        for &x in &orbit.seq {
            used[x] = true;
        }
        closed.push(orbit);
    }
    Ok(Decomposition { closed, open: None })
}
