//! Simple wedges: two simple lines sharing an endpoint.
//!
//! Two independent routes are provided. The orbit route follows maximal
//! orbits over a chosen simple line and reads a wedge off the first open
//! orbit; it needs a 3-bounded configuration. The brute-force route checks
//! the definition directly on any configuration and serves as the oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::LineKey;
use crate::incidence::{Configuration, SimpleLine};
use crate::orbit::{decompose, BaseLine, Orbit};

/// Witness that `apex` spans simple lines to both `arm1` and `arm2`.
/// Arms are stored in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WedgeCertificate {
    pub apex: usize,
    pub arm1: usize,
    pub arm2: usize,
    pub key1: LineKey,
    pub key2: LineKey,
}

impl WedgeCertificate {
    /// Builds and validates a certificate. Fails with `NotSimple` when either
    /// line is not simple.
    pub fn new(config: &Configuration, apex: usize, arm_a: usize, arm_b: usize) -> Result<Self> {
        let (arm1, arm2) = if arm_a <= arm_b {
            (arm_a, arm_b)
        } else {
            (arm_b, arm_a)
        };
        if arm1 == arm2 {
            return Err(Error::SameIndex(arm1));
        }
        let (key1, m1) = config.line_of(apex, arm1)?;
        if m1.len() != 2 {
            return Err(Error::NotSimple(apex, arm1));
        }
        let (key2, m2) = config.line_of(apex, arm2)?;
        if m2.len() != 2 {
            return Err(Error::NotSimple(apex, arm2));
        }
        Ok(WedgeCertificate {
            apex,
            arm1,
            arm2,
            key1: key1.clone(),
            key2: key2.clone(),
        })
    }

    /// Re-checks every invariant against `config`.
    pub fn validate(&self, config: &Configuration) -> bool {
        let n = config.len();
        if self.apex >= n || self.arm1 >= n || self.arm2 >= n {
            return false;
        }
        if self.apex == self.arm1 || self.apex == self.arm2 || self.arm1 >= self.arm2 {
            return false;
        }
        let Ok((k1, m1)) = config.line_of(self.apex, self.arm1) else {
            return false;
        };
        let Ok((k2, m2)) = config.line_of(self.apex, self.arm2) else {
            return false;
        };
        *k1 == self.key1 && *k2 == self.key2 && k1 != k2 && m1.len() == 2 && m2.len() == 2
    }

    pub fn uses_line(&self, key: &LineKey) -> bool {
        self.key1 == *key || self.key2 == *key
    }
}

/// Reads the wedge off a maximal open orbit: the last point `x_t` has no
/// further partner through the next pivot, so that line is simple.
pub fn wedge_from_open_orbit(
    config: &Configuration,
    base: &BaseLine,
    orbit: &Orbit,
) -> Result<WedgeCertificate> {
    if !orbit.is_open() || !orbit.is_maximal() || orbit.base() != base {
        return Err(Error::Usage(
            "wedge extraction needs a maximal open orbit of this base line".into(),
        ));
    }
    let last = orbit.last();
    let (apex, other) = if orbit.seq().len() % 2 == 1 {
        (base.b(), base.a())
    } else {
        (base.a(), base.b())
    };
    if !config.is_simple_pair(apex, last) {
        return Err(Error::CharacterizationViolated(apex, last));
    }
    WedgeCertificate::new(config, apex, other, last)
}

/// Orbit route for one base line. Absent when every point off the base line
/// falls into closed orbits, which cannot happen for odd `n`.
pub fn find_wedge_from_line(
    config: &Configuration,
    base: &BaseLine,
) -> Result<Option<WedgeCertificate>> {
    let decomposition = decompose(config, base)?;
    match decomposition.open {
        Some(orbit) => wedge_from_open_orbit(config, base, &orbit).map(Some),
        None if config.len() % 2 == 1 => Err(Error::MainClaimViolated(base.a(), base.b())),
        None => Ok(None),
    }
}

/// Orbit route over every simple line, using the lower endpoint as `a`.
pub fn orbit_wedges(
    config: &Configuration,
    exec: Execution,
) -> Result<Vec<(SimpleLine, Option<WedgeCertificate>)>> {
    if !config.is_three_bounded() {
        return Err(Error::NotThreeBounded(
            config.spanned_lines().max_line_size(),
        ));
    }
    let lines = config.simple_lines();
    exec.map(&lines, |line| {
        let base = BaseLine::new(config, line.endpoints.0, line.endpoints.1)?;
        Ok((line.clone(), find_wedge_from_line(config, &base)?))
    })
    .into_iter()
    .collect()
}

/// Every simple wedge, by definition: one certificate per apex and unordered
/// pair of simple lines through it, sorted by `(apex, arm1, arm2)`.
pub fn brute_force_wedges(config: &Configuration) -> Vec<WedgeCertificate> {
    let mut out = Vec::new();
    for apex in 0..config.len() {
        let partners = config.simple_partners(apex);
        for (i, &p) in partners.iter().enumerate() {
            for &q in &partners[i + 1..] {
                let key1 = config.key_of(apex, p).clone();
                let key2 = config.key_of(apex, q).clone();
                out.push(WedgeCertificate {
                    apex,
                    arm1: p,
                    arm2: q,
                    key1,
                    key2,
                });
            }
        }
    }
    out
}

/// Whether any simple wedge exists at all. Cheaper than collecting them.
pub fn has_simple_wedge(config: &Configuration) -> bool {
    (0..config.len()).any(|apex| {
        (0..config.len())
            .filter(|&q| q != apex && config.is_simple_pair(apex, q))
            .nth(1)
            .is_some()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageEntry {
    pub line: SimpleLine,
    pub covered: bool,
    pub certificate: Option<WedgeCertificate>,
}

/// For each simple line, whether some simple wedge uses it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CoverageReport {
    pub entries: Vec<CoverageEntry>,
}

impl CoverageReport {
    pub fn all_covered(&self) -> bool {
        self.entries.iter().all(|e| e.covered)
    }

    pub fn entry(&self, key: &LineKey) -> Option<&CoverageEntry> {
        self.entries.iter().find(|e| e.line.key == *key)
    }
}

pub fn wedge_coverage(config: &Configuration) -> CoverageReport {
    coverage_from(config, &brute_force_wedges(config))
}

/// Coverage from an already computed brute-force certificate list.
pub fn coverage_from(config: &Configuration, wedges: &[WedgeCertificate]) -> CoverageReport {
    let entries = config
        .simple_lines()
        .into_iter()
        .map(|line| {
            let certificate = wedges.iter().find(|w| w.uses_line(&line.key)).cloned();
            CoverageEntry {
                covered: certificate.is_some(),
                line,
                certificate,
            }
        })
        .collect();
    CoverageReport { entries }
}
