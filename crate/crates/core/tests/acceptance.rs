//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs as a plain binary (`harness = false`) so the lines are
//! always visible under `cargo test`.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use simple_wedge::constructions::{closed_orbit_config, g_extended, nine_point, six_point};
use simple_wedge::geometry::{int, rat, LineKey};
use simple_wedge::io::{parse_points, write_points};
use simple_wedge::orbit::{
    decompose, maximal_orbit, orbit_length, orbits_disjoint, verify_orbit, BaseLine,
};
use simple_wedge::search::{conjecture_search, SearchMode};
use simple_wedge::svg::{count_class, render_svg};
use simple_wedge::wedge::{brute_force_wedges, find_wedge_from_line, wedge_coverage};
use simple_wedge::{
    analyze, intersect, line_through, AnalysisReport, Configuration, Execution, Point,
};

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn key(a: i64, b: i64, c: i64) -> LineKey {
    LineKey::from_i64(a, b, c).unwrap()
}

fn c1_six_point() -> Check {
    let r = analyze(&six_point());
    ensure!(r.n == 6, "n = {}", r.n);
    let mut keys: Vec<LineKey> = r.simple_lines.iter().map(|s| s.key.clone()).collect();
    keys.sort();
    // L_{a,b}: y = 0; L_{x1,x2}: y = 2; L_{x3,y}: x = 0
    let mut expected = vec![key(0, 1, 0), key(0, 1, -2), key(1, 0, 0)];
    expected.sort();
    ensure!(keys == expected, "simple line keys {keys:?}");
    let mut ends: Vec<_> = r.simple_lines.iter().map(|s| s.endpoints).collect();
    ends.sort();
    ensure!(ends == vec![(0, 1), (2, 3), (4, 5)], "endpoints {ends:?}");
    ensure!(r.three_bounded, "not 3-bounded");
    ensure!(r.wedges.is_empty(), "{} wedges", r.wedges.len());
    ensure!(r.coverage.entries.len() == 3, "coverage size");
    ensure!(
        r.coverage.entries.iter().all(|e| !e.covered),
        "some line covered"
    );
    Ok(())
}

fn c2_nine_point() -> Check {
    let w = nine_point();
    let (a, b, g1, g2, g3) = (0, 1, 6, 7, 8);
    let l1 = line_through(w.point(a), w.point(g2)).map_err(|e| e.to_string())?;
    let l2 = line_through(w.point(b), w.point(g1)).map_err(|e| e.to_string())?;
    let meet = intersect(&l1, &l2).map_err(|e| e.to_string())?;
    ensure!(w.point(g3) == &Point::int(0, 2), "g3 = {}", w.point(g3));
    ensure!(meet.as_ref() == Some(w.point(g3)), "intersection {meet:?}");
    ensure!(w.point(g1) == &Point::new(rat(-2, 3), rat(8, 3)), "g1");
    ensure!(w.point(g2) == &Point::new(rat(2, 3), rat(8, 3)), "g2");
    let r = analyze(&w);
    ensure!(!r.three_bounded, "reported 3-bounded");
    ensure!(w.is_simple_pair(a, b), "L_ab not simple");
    let ab = key(0, 1, 0);
    let entry = r.coverage.entry(&ab).ok_or("no coverage entry for L_ab")?;
    ensure!(!entry.covered, "L_ab covered by {:?}", entry.certificate);
    ensure!(
        brute_force_wedges(&w).iter().all(|c| !c.uses_line(&ab)),
        "a certificate uses L_ab"
    );
    Ok(())
}

fn c3_orbit_trace() -> Check {
    let six = six_point();
    let base = BaseLine::new(&six, 0, 1).map_err(|e| e.to_string())?;
    let x = maximal_orbit(&six, &base, 2).map_err(|e| e.to_string())?;
    ensure!(
        x.is_closed() && x.seq() == [2, 5, 3, 4, 2],
        "orbit {:?}",
        x.seq()
    );
    ensure!(orbit_length(&x) == 4, "length {}", orbit_length(&x));
    let y = maximal_orbit(&six, &base, 3).map_err(|e| e.to_string())?;
    ensure!(
        y.is_closed() && y.seq() == [3, 4, 2, 5, 3],
        "orbit {:?}",
        y.seq()
    );
    ensure!(y.support() == x.support(), "supports differ");
    ensure!(orbit_length(&y) == 4, "length {}", orbit_length(&y));
    Ok(())
}

struct Corpus {
    three_bounded: Vec<Configuration>,
    general: Vec<Configuration>,
}

fn non_base(c: &Configuration, base: &BaseLine) -> impl Iterator<Item = usize> + use<> {
    let (a, b) = (base.a(), base.b());
    (0..c.len()).filter(move |&s| s != a && s != b)
}

fn c4_even_length(corpus: &mut Option<Corpus>) -> Check {
    const RANDOM: usize = 520;
    let random = random_three_bounded(RANDOM);
    ensure!(random.len() >= 500, "only {} random configs", random.len());
    for c in &random {
        ensure!((5..=13).contains(&c.len()), "n = {} out of range", c.len());
        ensure!(c.is_three_bounded(), "random config not 3-bounded");
        for p in c.points() {
            ensure!(
                p.x >= int(-50) && p.x <= int(50) && p.y >= int(-50) && p.y <= int(50),
                "coordinate out of range"
            );
        }
    }
    let mut three_bounded = vec![six_point(), five_point(), triangle()];
    three_bounded.extend((2..=8).map(|k| closed_orbit_config(k).unwrap()));
    three_bounded.extend((2..=4).map(closed_plus_generic));
    three_bounded.extend(augmented_closed_orbits());
    three_bounded.extend(random);

    let (mut closed, mut violations) = (0usize, 0usize);
    for c in &three_bounded {
        for base in bases(c) {
            for start in non_base(c, &base) {
                let o = maximal_orbit(c, &base, start).map_err(|e| e.to_string())?;
                if o.is_closed() {
                    closed += 1;
                    if !orbit_length(&o).is_multiple_of(2) {
                        violations += 1;
                    }
                }
            }
        }
    }
    ensure!(violations == 0, "{violations} odd closed orbits");
    ensure!(closed > 0, "corpus produced no closed orbits");
    println!(
        "      {} configurations, {closed} closed orbits, all of even length",
        three_bounded.len()
    );
    *corpus = Some(Corpus {
        three_bounded,
        general: general_corpus(),
    });
    Ok(())
}

fn c5_separation(corpus: &Corpus) -> Check {
    let mut checked = 0usize;
    for c in &corpus.three_bounded {
        for base in bases(c) {
            let d = decompose(c, &base).map_err(|e| e.to_string())?;
            let mut union: HashSet<usize> = HashSet::new();
            for (i, x) in d.closed.iter().enumerate() {
                for y in &d.closed[i + 1..] {
                    ensure!(orbits_disjoint(x, y), "closed orbits overlap");
                }
                if let Some(o) = &d.open {
                    ensure!(orbits_disjoint(x, o), "open orbit meets closed orbit");
                }
                union.extend(x.support());
            }
            if let Some(o) = &d.open {
                union.extend(o.support());
            }
            ensure!(
                !union.contains(&base.a()) && !union.contains(&base.b()),
                "orbit touches the base line"
            );
            // the lemma itself: any orbit started off a closed orbit avoids it
            for x in &d.closed {
                let support = x.support();
                for start in non_base(c, &base).filter(|s| !support.contains(s)) {
                    let y = maximal_orbit(c, &base, start).map_err(|e| e.to_string())?;
                    ensure!(
                        orbits_disjoint(x, &y),
                        "orbit from {start} meets a closed orbit"
                    );
                }
            }
            checked += 1;
        }
    }
    println!("      {checked} base lines decomposed");
    Ok(())
}

fn c6_main_claim(corpus: &Corpus) -> Check {
    let mut odd = 0usize;
    for c in corpus.three_bounded.iter().filter(|c| c.len() % 2 == 1) {
        odd += 1;
        for base in bases(c) {
            let w = find_wedge_from_line(c, &base)
                .map_err(|e| e.to_string())?
                .ok_or("no wedge for an odd 3-bounded set")?;
            ensure!(w.validate(c), "certificate fails re-validation");
            ensure!(
                w.uses_line(base.key()),
                "certificate does not use the base line"
            );
        }
        ensure!(
            wedge_coverage(c).all_covered(),
            "coverage incomplete on odd set"
        );
    }
    ensure!(odd > 0, "no odd configurations");
    println!("      {odd} odd configurations, every simple line extends");
    Ok(())
}

fn c7_oracle(corpus: &Corpus) -> Check {
    let mut lines = 0usize;
    for c in &corpus.three_bounded {
        let brute = brute_force_wedges(c);
        for base in bases(c) {
            let orbit = find_wedge_from_line(c, &base).map_err(|e| e.to_string())?;
            let oracle = brute.iter().any(|w| w.uses_line(base.key()));
            ensure!(orbit.is_some() == oracle, "disagreement on {}", base.key());
            lines += 1;
        }
    }
    // a wedge at apex p with arms q, r makes <r> a maximal open orbit of the
    // base line (q, p), on any configuration
    let mut singletons = 0usize;
    for c in corpus.three_bounded.iter().chain(&corpus.general) {
        for w in brute_force_wedges(c) {
            for (q, r) in [(w.arm1, w.arm2), (w.arm2, w.arm1)] {
                let base = BaseLine::new(c, q, w.apex).map_err(|e| e.to_string())?;
                ensure!(verify_orbit(c, &base, &[r]), "<{r}> is not an orbit");
                let o = simple_wedge::Orbit::from_seq(c, &base, vec![r]).ok_or("orbit")?;
                ensure!(o.is_open() && no_extension(c, &base, &o), "<{r}> extends");
                singletons += 1;
            }
        }
    }
    println!("      {lines} base lines agree; {singletons} singleton orbits maximal");
    Ok(())
}

fn c8_closed_orbit_generator() -> Check {
    for k in 2..=8 {
        let c = closed_orbit_config(k).map_err(|e| e.to_string())?;
        ensure!(c.len() == 2 * k + 2, "k={k}: size {}", c.len());
        ensure!(c.is_simple_pair(0, 1), "k={k}: base not simple");
        ensure!(c.is_three_bounded(), "k={k}: not 3-bounded");
        let base = BaseLine::new(&c, 0, 1).map_err(|e| e.to_string())?;
        let d = decompose(&c, &base).map_err(|e| e.to_string())?;
        ensure!(
            d.closed.len() == 1 && d.open.is_none(),
            "k={k}: decomposition"
        );
        ensure!(orbit_length(&d.closed[0]) == 2 * k, "k={k}: length");
        ensure!(
            find_wedge_from_line(&c, &base)
                .map_err(|e| e.to_string())?
                .is_none(),
            "k={k}: wedge from base"
        );
        if k >= 3 {
            ensure!(
                !brute_force_wedges(&c).is_empty(),
                "k={k}: no wedges at all"
            );
        }
    }
    Ok(())
}

fn c9_conjecture() -> Check {
    let dir = std::env::temp_dir().join("simple-wedge-acceptance");
    let persist = |n: usize, failures: &[simple_wedge::search::ConjectureTrialResult]| {
        let _ = std::fs::create_dir_all(&dir);
        for f in failures {
            let path = dir.join(format!(
                "counterexample-n{n}-seed{}-trial{}.txt",
                f.seed, f.trial
            ));
            let _ = std::fs::write(&path, write_points(&f.points));
            println!("      counterexample persisted to {}", path.display());
        }
    };
    for (n, grid, subsets) in [(5usize, 3u64, 126u64), (7, 4, 11_440)] {
        let s = conjecture_search(n, SearchMode::Exhaustive { grid }, Execution::Parallel)
            .map_err(|e| e.to_string())?;
        persist(n, &s.failures);
        ensure!(s.scanned == subsets, "n={n}: scanned {}", s.scanned);
        ensure!(
            s.failures.is_empty(),
            "n={n} grid {grid}: {} failures",
            s.failures.len()
        );
    }
    for n in [7usize, 9, 11] {
        let mode = SearchMode::Random {
            trials: 1000,
            seed: 1,
            range: 50,
        };
        let s = conjecture_search(n, mode, Execution::Parallel).map_err(|e| e.to_string())?;
        persist(n, &s.failures);
        ensure!(s.scanned == 1000, "n={n}: scanned {}", s.scanned);
        ensure!(
            s.failures.is_empty(),
            "n={n} random: {} failures",
            s.failures.len()
        );
    }
    Ok(())
}

fn c10_formats() -> Check {
    let mut fixtures = vec![six_point(), nine_point(), five_point(), triangle()];
    fixtures.extend((2..=8).map(|k| closed_orbit_config(k).unwrap()));
    fixtures.extend([1, 3, 5].map(|m| g_extended(m).unwrap()));
    for c in &fixtures {
        let back = parse_points(&write_points(c.points())).map_err(|e| e.to_string())?;
        ensure!(back == c.points(), "point file round trip");
        let r = analyze(c);
        let json = r.to_json();
        let parsed = AnalysisReport::from_json(&json).map_err(|e| e.to_string())?;
        ensure!(parsed == r, "JSON round trip");
        ensure!(r.is_consistent(), "report histogram inconsistent");
        let svg = render_svg(c, &r);
        ensure!(svg == render_svg(c, &analyze(c)), "SVG not byte-stable");
    }
    let counts = |c: &Configuration| {
        let svg = render_svg(c, &analyze(c));
        (count_class(&svg, "simple"), count_class(&svg, "apex"))
    };
    ensure!(
        counts(&six_point()) == (3, 0),
        "six-point classes {:?}",
        counts(&six_point())
    );
    ensure!(
        counts(&triangle()) == (3, 3),
        "triangle classes {:?}",
        counts(&triangle())
    );
    ensure!(counts(&five_point()).1 >= 1, "five-point has no apex");
    Ok(())
}

fn run(id: u32, name: &str, limit: Option<Duration>, check: impl FnOnce() -> Check) -> bool {
    let started = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(check))
        .unwrap_or_else(|p| Err(format!("panic: {:?}", p.downcast_ref::<String>())));
    let elapsed = started.elapsed();
    let result = match (result, limit) {
        (Ok(()), Some(l)) if elapsed > l => Err(format!("took {elapsed:.2?}, limit {l:?}")),
        (r, _) => r,
    };
    match &result {
        Ok(()) => println!("[PASS] criterion {id:>2}: {name} ({elapsed:.2?})"),
        Err(e) => println!("[FAIL] criterion {id:>2}: {name} ({elapsed:.2?}): {e}"),
    }
    result.is_ok()
}

fn main() -> ExitCode {
    let s = Duration::from_secs;
    let mut corpus = None;
    let mut ok = true;
    ok &= run(1, "six-point fixture", Some(s(1)), c1_six_point);
    ok &= run(2, "nine-point fixture", Some(s(1)), c2_nine_point);
    ok &= run(3, "orbit trace", None, c3_orbit_trace);
    ok &= run(4, "even-length lemma", Some(s(60)), || {
        c4_even_length(&mut corpus)
    });
    match &corpus {
        Some(corpus) => {
            ok &= run(5, "separation lemma", None, || c5_separation(corpus));
            ok &= run(6, "main claim and corollary", None, || {
                c6_main_claim(corpus)
            });
            ok &= run(7, "orbit route agrees with brute force", None, || {
                c7_oracle(corpus)
            });
        }
        None => {
            for (id, name) in [(5, "separation lemma"), (6, "main claim"), (7, "oracle")] {
                println!("[FAIL] criterion {id:>2}: {name}: corpus unavailable");
            }
            ok = false;
        }
    }
    ok &= run(
        8,
        "closed-orbit generator",
        Some(s(5)),
        c8_closed_orbit_generator,
    );
    ok &= run(
        9,
        "conjecture desk-scale search",
        Some(s(300)),
        c9_conjecture,
    );
    ok &= run(10, "determinism and formats", None, c10_formats);
    if ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
