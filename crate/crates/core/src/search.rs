//! Search for odd-sized point sets without any simple wedge.
//!
//! Two modes:
//!
//! * **Random.** Trial `t` of a run with seed `s` draws from a ChaCha8
//!   generator seeded with `ChaCha8Rng::seed_from_u64(s)` and switched to
//!   stream `t`. Integer coordinates in `[-range, range]` are drawn by
//!   rejection sampling on raw `u64` outputs, x before y, so the point sets
//!   depend only on `(seed, trial, n, range)`. Duplicate points are redrawn;
//!   a collinear draw is discarded and the whole trial redrawn from the same
//!   stream.
//! * **Exhaustive.** Every `n`-subset of the `grid × grid` lattice
//!   `{0..grid}²`, with lattice points in row-major order and subsets in
//!   lexicographic order. Collinear subsets are skipped.
//!
//! Only failures (configurations without a simple wedge) are returned, each
//! confirmed a second time before it is reported. Collinear draws are never
//! configurations, so they only show up in the counters.

use std::collections::HashSet;

use itertools::Itertools;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::geometry::Point;
use crate::incidence::Configuration;
use crate::wedge::{brute_force_wedges, has_simple_wedge};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Random { trials: u64, seed: u64, range: u64 },
    Exhaustive { grid: u64 },
}

/// A configuration examined by the search. For exhaustive runs `seed` is 0
/// and `trial` is the subset's rank in enumeration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureTrialResult {
    pub seed: u64,
    pub trial: u64,
    pub n: usize,
    pub points: Vec<Point>,
    pub wedge_found: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSummary {
    /// Configurations examined (random trials or lattice subsets).
    pub scanned: u64,
    /// Collinear draws discarded (random) or collinear subsets skipped (grid).
    pub collinear_rejected: u64,
    pub failures: Vec<ConjectureTrialResult>,
}

pub fn conjecture_search(n: usize, mode: SearchMode, exec: Execution) -> Result<SearchSummary> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Usage(format!(
            "n must be odd and at least 3, got {n}"
        )));
    }
    match mode {
        SearchMode::Random {
            trials,
            seed,
            range,
        } => random_search(n, trials, seed, range, exec),
        SearchMode::Exhaustive { grid } => exhaustive_search(n, grid, exec),
    }
}

/// Uniform integer in `[-range, range]` by rejection on raw 64-bit draws.
fn uniform_coord(rng: &mut ChaCha8Rng, range: u64) -> i64 {
    let width = 2 * range + 1;
    let zone = u64::MAX - (u64::MAX % width);
    loop {
        let v = rng.next_u64();
        if v < zone {
            return (v % width) as i64 - range as i64;
        }
    }
}

/// The generator state owned by one trial.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Draws the trial's point set. Returns it with the number of collinear
/// draws that were discarded first.
pub fn sample_trial(n: usize, seed: u64, trial: u64, range: u64) -> (Vec<(i64, i64)>, u64) {
    let mut rng = trial_rng(seed, trial);
    let mut rejected = 0;
    loop {
        let mut seen = HashSet::with_capacity(n);
        let mut coords = Vec::with_capacity(n);
        while coords.len() < n {
            let x = uniform_coord(&mut rng, range);
            let y = uniform_coord(&mut rng, range);
            if seen.insert((x, y)) {
                coords.push((x, y));
            }
        }
        if !all_collinear(&coords) {
            return (coords, rejected);
        }
        rejected += 1;
    }
}

fn all_collinear(coords: &[(i64, i64)]) -> bool {
    let (x0, y0) = coords[0];
    let (x1, y1) = coords[1];
    coords[2..]
        .iter()
        .all(|&(x, y)| (x1 - x0) as i128 * (y - y0) as i128 == (y1 - y0) as i128 * (x - x0) as i128)
}

fn to_points(coords: &[(i64, i64)]) -> Vec<Point> {
    coords.iter().map(|&(x, y)| Point::int(x, y)).collect()
}

/// Examines one configuration; `Some` only for a confirmed failure.
fn examine(
    n: usize,
    seed: u64,
    trial: u64,
    points: Vec<Point>,
) -> Option<Result<ConjectureTrialResult>> {
    let config = match Configuration::new(points) {
        Ok(c) => c,
        Err(e) => return Some(Err(e)),
    };
    if has_simple_wedge(&config) {
        return None;
    }
    // confirm with the full enumeration on a freshly built configuration
    let rebuilt = match Configuration::new(config.points().to_vec()) {
        Ok(c) => c,
        Err(e) => return Some(Err(e)),
    };
    if !brute_force_wedges(&rebuilt).is_empty() {
        return None;
    }
    Some(Ok(ConjectureTrialResult {
        seed,
        trial,
        n,
        points: rebuilt.into_points(),
        wedge_found: false,
    }))
}

fn random_search(
    n: usize,
    trials: u64,
    seed: u64,
    range: u64,
    exec: Execution,
) -> Result<SearchSummary> {
    let cells = (2 * range as u128 + 1).pow(2);
    if range == 0 || cells < n as u128 {
        return Err(Error::Usage(format!(
            "range {range} leaves too few lattice points for {n} points"
        )));
    }
    let outcomes = exec.filter_map_range(trials, |trial| {
        let (coords, rejected) = sample_trial(n, seed, trial, range);
        let failure = examine(n, seed, trial, to_points(&coords));
        if rejected == 0 && failure.is_none() {
            None
        } else {
            Some((rejected, failure))
        }
    });
    let mut summary = SearchSummary {
        scanned: trials,
        collinear_rejected: 0,
        failures: Vec::new(),
    };
    for (rejected, failure) in outcomes {
        summary.collinear_rejected += rejected;
        if let Some(f) = failure {
            summary.failures.push(f?);
        }
    }
    Ok(summary)
}

/// Lattice points of the `grid × grid` box in row-major order.
pub fn lattice(grid: u64) -> Vec<(i64, i64)> {
    let g = grid as i64;
    (0..g).flat_map(|y| (0..g).map(move |x| (x, y))).collect()
}

fn exhaustive_search(n: usize, grid: u64, exec: Execution) -> Result<SearchSummary> {
    let cells = lattice(grid);
    if cells.len() < n {
        return Err(Error::Usage(format!(
            "a {grid}x{grid} grid has fewer than {n} points"
        )));
    }
    let points: Vec<Point> = cells.iter().map(|&(x, y)| Point::int(x, y)).collect();
    let subsets = (0..cells.len()).combinations(n);
    let outcomes = exec.filter_map_iter(subsets, |rank, subset| {
        let coords: Vec<(i64, i64)> = subset.iter().map(|&i| cells[i]).collect();
        if all_collinear(&coords) {
            return Some(None);
        }
        let chosen = subset.iter().map(|&i| points[i].clone()).collect();
        examine(n, 0, rank, chosen).map(Some)
    });
    let mut summary = SearchSummary {
        scanned: 0,
        collinear_rejected: 0,
        failures: Vec::new(),
    };
    for (_, outcome) in outcomes {
        match outcome {
            None => summary.collinear_rejected += 1,
            Some(f) => summary.failures.push(f?),
        }
    }
    summary.scanned = binomial(cells.len() as u64, n as u64);
    Ok(summary)
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
