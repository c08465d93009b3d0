//! Reproducible configuration corpus shared by the integration suites.
#![allow(dead_code)]

use std::collections::HashSet;

use simple_wedge::constructions::{closed_orbit_config, nine_point, six_point};
use simple_wedge::geometry::{rat, Point};
use simple_wedge::orbit::{verify_orbit, BaseLine, Orbit};
use simple_wedge::search::sample_trial;
use simple_wedge::Configuration;

pub const CORPUS_SEED: u64 = 20_261_016;

/// The five-point set with a pencil of three points on the y-axis.
pub fn five_point() -> Configuration {
    Configuration::new(vec![
        Point::int(-2, 0),
        Point::int(2, 0),
        Point::int(0, 1),
        Point::int(0, 2),
        Point::int(0, 3),
    ])
    .unwrap()
}

pub fn triangle() -> Configuration {
    Configuration::new(vec![Point::int(0, 0), Point::int(1, 0), Point::int(0, 1)]).unwrap()
}

/// `closed_orbit_config(k)` plus one point off every spanned line.
pub fn closed_plus_generic(k: usize) -> Configuration {
    let base = closed_orbit_config(k).unwrap();
    for den in 3i64.. {
        for num in 1..200i64 {
            let p = Point::new(rat(num, den), rat(-num * 7 - 3, den * 2));
            if base.points().contains(&p) {
                continue;
            }
            let generic = base
                .spanned_lines()
                .iter()
                .all(|(key, _)| !simple_wedge::on_line(&p, key));
            if generic {
                let mut pts = base.points().to_vec();
                pts.push(p);
                return Configuration::new(pts).unwrap();
            }
        }
    }
    unreachable!()
}

/// Random 3-bounded configurations with `n` in 5..=13 and integer
/// coordinates in `[-50, 50]`. Small coordinate ranges are mixed in so that
/// 3-point lines (and thus nontrivial orbits) are common.
pub fn random_three_bounded(count: usize) -> Vec<Configuration> {
    const RANGES: [u64; 4] = [2, 3, 5, 50];
    let mut out = Vec::with_capacity(count);
    let mut stream = 0u64;
    let mut i = 0usize;
    while out.len() < count {
        let n = 5 + i % 9;
        // tiny boxes cannot hold many points without 4 on a line
        let mut range = RANGES[i % RANGES.len()].max(n as u64 / 3);
        let mut attempts = 0;
        loop {
            if (2 * range + 1).pow(2) >= n as u64 {
                let (coords, _) = sample_trial(n, CORPUS_SEED, stream, range);
                stream += 1;
                if !lattice_three_bounded(&coords) {
                    attempts += 1;
                    if attempts % 200 == 0 {
                        range = (range * 2).min(50);
                    }
                    continue;
                }
                let pts = coords.iter().map(|&(x, y)| Point::int(x, y)).collect();
                if let Ok(c) = Configuration::new(pts) {
                    if c.is_three_bounded() {
                        out.push(c);
                        break;
                    }
                }
            }
            attempts += 1;
            if attempts % 200 == 0 {
                range = (range * 2).min(50);
            }
        }
        i += 1;
    }
    out
}

/// Cheap integer pre-filter: no four of the points are collinear.
fn lattice_three_bounded(coords: &[(i64, i64)]) -> bool {
    let n = coords.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let (x0, y0) = coords[i];
            let (x1, y1) = coords[j];
            let on = coords[j + 1..]
                .iter()
                .filter(|&&(x, y)| (x1 - x0) * (y - y0) == (y1 - y0) * (x - x0))
                .count();
            if on >= 2 {
                return false;
            }
        }
    }
    true
}

/// Closed-orbit constructions with a few random integer points added,
/// keeping only 3-bounded results. Mixes closed and open orbits.
pub fn augmented_closed_orbits() -> Vec<Configuration> {
    let mut out = Vec::new();
    let mut stream = 1u64 << 32;
    for k in 2..=6 {
        let base = closed_orbit_config(k).unwrap();
        for extra in 1..=3 {
            let mut found = 0;
            let mut tries = 0;
            while found < 4 && tries < 400 {
                tries += 1;
                let (coords, _) = sample_trial(extra + 2, CORPUS_SEED, stream, 4);
                stream += 1;
                let mut pts = base.points().to_vec();
                let have: HashSet<Point> = pts.iter().cloned().collect();
                let add: Vec<Point> = coords
                    .iter()
                    .map(|&(x, y)| Point::int(x, y))
                    .filter(|p| !have.contains(p))
                    .take(extra)
                    .collect();
                if add.len() < extra {
                    continue;
                }
                pts.extend(add);
                if let Ok(c) = Configuration::new(pts) {
                    if c.is_three_bounded() {
                        out.push(c);
                        found += 1;
                    }
                }
            }
        }
    }
    out
}

/// Every 3-bounded configuration the lemma suites run over.
pub fn three_bounded_corpus(random: usize) -> Vec<Configuration> {
    let mut corpus = vec![six_point(), five_point(), triangle()];
    corpus.extend((2..=8).map(|k| closed_orbit_config(k).unwrap()));
    corpus.extend((2..=4).map(closed_plus_generic));
    corpus.extend(augmented_closed_orbits());
    corpus.extend(random_three_bounded(random));
    assert!(corpus.iter().all(|c| c.is_three_bounded()));
    corpus
}

/// Configurations that need not be 3-bounded.
pub fn general_corpus() -> Vec<Configuration> {
    let mut corpus = vec![nine_point()];
    corpus.extend([3, 5].map(|m| simple_wedge::constructions::g_extended(m).unwrap()));
    for t in 0..60u64 {
        let n = 4 + (t % 8) as usize;
        let (coords, _) = sample_trial(n, CORPUS_SEED ^ 0xABCD, t, 2);
        corpus.push(
            Configuration::new(coords.iter().map(|&(x, y)| Point::int(x, y)).collect()).unwrap(),
        );
    }
    corpus
}

/// Both orientations of every simple line.
pub fn bases(config: &Configuration) -> Vec<BaseLine> {
    config
        .simple_lines()
        .iter()
        .flat_map(|s| {
            let (i, j) = s.endpoints;
            [
                BaseLine::new(config, i, j).unwrap(),
                BaseLine::new(config, j, i).unwrap(),
            ]
        })
        .collect()
}

/// Maximality by definition: no point of V extends the sequence.
///
/// Candidates off the line through the next pivot and the last entry fail
/// the last clause, so only the others get the full check.
pub fn no_extension(config: &Configuration, base: &BaseLine, orbit: &Orbit) -> bool {
    let next = orbit.seq().len() + 1;
    let pivot = config.point(if next.is_multiple_of(2) {
        base.b()
    } else {
        base.a()
    });
    let last = config.point(orbit.last());
    (0..config.len()).all(|y| {
        if !simple_wedge::collinear(pivot, last, config.point(y)) {
            return true;
        }
        let mut seq = orbit.seq().to_vec();
        seq.push(y);
        !verify_orbit(config, base, &seq)
    })
}
