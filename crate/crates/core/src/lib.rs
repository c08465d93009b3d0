//! Exact analysis of simple (ordinary) lines and simple wedges in finite
//! planar point sets.
//!
//! A *simple line* of a point set holds exactly two of its points. A *simple
//! wedge* is a point that is the common endpoint of two simple lines. For
//! 3-bounded sets of odd size every simple line extends to a simple wedge,
//! and [`wedge::find_wedge_from_line`] constructs one by walking orbits over
//! that line. [`wedge::brute_force_wedges`] checks the definition directly
//! and serves as an independent oracle.
//!
//! All predicates run on arbitrary-precision rationals.

pub mod constructions;
pub mod error;
pub mod exec;
pub mod geometry;
pub mod incidence;
pub mod io;
pub mod orbit;
pub mod report;
pub mod search;
pub mod svg;
pub mod wedge;

pub use error::{Error, Result};
pub use exec::Execution;
pub use geometry::{
    collinear, intersect, line_through, on_line, parse_rational, LineKey, Point, Rational,
};
pub use incidence::{build_configuration, Configuration, IncidenceStructure, SimpleLine};
pub use orbit::{BaseLine, Decomposition, Orbit, OrbitKind, StepOutcome};
pub use report::{analyze, AnalysisReport};
pub use wedge::{CoverageEntry, CoverageReport, WedgeCertificate};
