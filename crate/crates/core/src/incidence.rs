//! Validated point configurations and their spanned lines.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{collinear, line_through, LineKey, Point};

/// Every line spanned by a configuration, with the sorted indices of the
/// points it contains. Lines are stored in ascending key order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    lines: Vec<(LineKey, Vec<usize>)>,
    max_line_size: usize,
}

impl IncidenceStructure {
    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&LineKey, &[usize])> {
        self.lines.iter().map(|(k, v)| (k, v.as_slice()))
    }

    pub fn get(&self, key: &LineKey) -> Option<&[usize]> {
        self.lines
            .binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|i| self.lines[i].1.as_slice())
    }

    /// Size of the fullest line.
    pub fn max_line_size(&self) -> usize {
        self.max_line_size
    }

    /// Map from incident-point count to the number of lines with that count.
    pub fn size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for (_, v) in &self.lines {
            *hist.entry(v.len()).or_insert(0) += 1;
        }
        hist
    }
}

/// A spanned line holding exactly two points, `endpoints.0 < endpoints.1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleLine {
    pub key: LineKey,
    pub endpoints: (usize, usize),
}

/// An "interesting set": at least three distinct points, not all on one line.
///
/// The incidence structure is computed once at construction. Points keep the
/// order they were given in and are addressed by index from here on.
#[derive(Clone, Debug)]
pub struct Configuration {
    points: Vec<Point>,
    incidence: IncidenceStructure,
    /// `pair_line[i * n + j]` is the position in `incidence.lines` of the
    /// line through points `i` and `j` (diagonal unused).
    pair_line: Vec<u32>,
}

impl PartialEq for Configuration {
    fn eq(&self, other: &Self) -> bool {
        self.points == other.points
    }
}

impl Eq for Configuration {}

pub fn build_configuration(points: Vec<Point>) -> Result<Configuration> {
    Configuration::new(points)
}

impl Configuration {
    pub fn new(points: Vec<Point>) -> Result<Self> {
        let n = points.len();
        if n < 3 {
            return Err(Error::TooFewPoints(n));
        }
        let mut seen: HashMap<&Point, usize> = HashMap::with_capacity(n);
        for (j, p) in points.iter().enumerate() {
            if let Some(&i) = seen.get(p) {
                return Err(Error::DuplicatePoint(i, j));
            }
            seen.insert(p, j);
        }
        if points[2..]
            .iter()
            .all(|r| collinear(&points[0], &points[1], r))
        {
            return Err(Error::ContainedInLine);
        }

        let mut map: BTreeMap<LineKey, Vec<usize>> = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let key = line_through(&points[i], &points[j])?;
                let entry = map.entry(key).or_default();
                if !entry.contains(&i) {
                    entry.push(i);
                }
                if !entry.contains(&j) {
                    entry.push(j);
                }
            }
        }
        let mut lines: Vec<(LineKey, Vec<usize>)> = map.into_iter().collect();
        let mut pair_line = vec![u32::MAX; n * n];
        for (idx, (_, members)) in lines.iter_mut().enumerate() {
            members.sort_unstable();
            for (s, &i) in members.iter().enumerate() {
                for &j in &members[s + 1..] {
                    pair_line[i * n + j] = idx as u32;
                    pair_line[j * n + i] = idx as u32;
                }
            }
        }
        let max_line_size = lines.iter().map(|(_, v)| v.len()).max().unwrap_or(0);
        let config = Configuration {
            points,
            incidence: IncidenceStructure {
                lines,
                max_line_size,
            },
            pair_line,
        };
        if !config.incidence.lines.iter().any(|(_, v)| v.len() == 2) {
            return Err(Error::NoSimpleLine);
        }
        Ok(config)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub fn spanned_lines(&self) -> &IncidenceStructure {
        &self.incidence
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index,
                n: self.len(),
            })
        }
    }

    fn check_pair(&self, i: usize, j: usize) -> Result<()> {
        self.check_index(i)?;
        self.check_index(j)?;
        if i == j {
            return Err(Error::SameIndex(i));
        }
        Ok(())
    }

    /// The spanned line through points `i` and `j` and all its incident indices.
    pub fn line_of(&self, i: usize, j: usize) -> Result<(&LineKey, &[usize])> {
        self.check_pair(i, j)?;
        let (key, members) = &self.incidence.lines[self.pair_line[i * self.len() + j] as usize];
        Ok((key, members))
    }

    /// Incident indices of the line through `i` and `j`, unchecked.
    pub(crate) fn members(&self, i: usize, j: usize) -> &[usize] {
        &self.incidence.lines[self.pair_line[i * self.len() + j] as usize].1
    }

    pub(crate) fn key_of(&self, i: usize, j: usize) -> &LineKey {
        &self.incidence.lines[self.pair_line[i * self.len() + j] as usize].0
    }

    pub fn is_simple_pair(&self, i: usize, j: usize) -> bool {
        i != j && i < self.len() && j < self.len() && self.members(i, j).len() == 2
    }

    pub fn simple_lines(&self) -> Vec<SimpleLine> {
        self.incidence
            .lines
            .iter()
            .filter(|(_, v)| v.len() == 2)
            .map(|(k, v)| SimpleLine {
                key: k.clone(),
                endpoints: (v[0], v[1]),
            })
            .collect()
    }

    /// Simple lines through point `p`, as the index of the other endpoint.
    pub(crate) fn simple_partners(&self, p: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&q| q != p && self.members(p, q).len() == 2)
            .collect()
    }

    pub fn is_ell_bounded(&self, ell: usize) -> bool {
        self.incidence.max_line_size() <= ell
    }

    pub fn is_three_bounded(&self) -> bool {
        self.is_ell_bounded(3)
    }

    /// The unique third point on the line through `i` and `j`, if any.
    pub fn third_point(&self, i: usize, j: usize) -> Result<Option<usize>> {
        self.check_pair(i, j)?;
        let members = self.members(i, j);
        match members.len() {
            2 => Ok(None),
            3 => Ok(members.iter().copied().find(|&k| k != i && k != j)),
            size => Err(Error::NotThreeBoundedOnLine(i, j, size)),
        }
    }
}

pub fn spanned_lines(config: &Configuration) -> &IncidenceStructure {
    config.spanned_lines()
}

pub fn simple_lines(config: &Configuration) -> Vec<SimpleLine> {
    config.simple_lines()
}

pub fn is_ell_bounded(config: &Configuration, ell: usize) -> bool {
    config.is_ell_bounded(ell)
}

pub fn third_point(config: &Configuration, i: usize, j: usize) -> Result<Option<usize>> {
    config.third_point(i, j)
}
