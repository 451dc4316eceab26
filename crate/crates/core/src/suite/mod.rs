//! Verification battery: recomputes every explicit table from first principles
//! and compares entry by entry.
//!
//! Each check owns a slice of [`ReferenceTables`]; corrupting one entry (see
//! [`ReferenceTables::perturb`]) makes exactly the owning check fail.

mod checks;
mod pipeline;
mod tables;

use serde::{Deserialize, Serialize};
use serde_json::Value as Json;

pub use checks::Certificate;
pub use pipeline::*;
pub use tables::{
    GeneratorTables, GeometryTables, ReferenceTables, Plane, PlaneQuotient, SignedMonomial, Step1Tables, Steps2to4Tables,
    Theorem1Tables, DISPLAYED_S_MATRIX,
};

use crate::geometry::{IncidenceGraph, LineLabel};

pub const CHECK_NAMES: [&str; 5] = ["geometry", "generators", "theorem1", "step1", "steps2to4"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
    pub certificate: Json,
    pub elapsed_ms: u128,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Data the checks compare against, plus the incidence graph the geometry check
/// audits.
#[derive(Clone, Debug)]
pub struct SuiteInput {
    pub tables: ReferenceTables,
    pub graph: IncidenceGraph,
}

impl Default for SuiteInput {
    fn default() -> Self {
        Self { tables: ReferenceTables::default(), graph: IncidenceGraph::get().clone() }
    }
}

/// A single corruption of the suite input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Perturb one named table entry.
    Table(String),
    /// Flip one incidence.
    Edge(LineLabel, LineLabel),
}

impl Fault {
    /// Parses `edge:A,B` or a table entry name.
    pub fn parse(s: &str) -> Option<Self> {
        if let Some(rest) = s.strip_prefix("edge:") {
            let (a, b) = rest.split_once(',')?;
            return Some(Fault::Edge(LineLabel::parse(a.trim())?, LineLabel::parse(b.trim())?));
        }
        ReferenceTables::default().entries().iter().any(|(n, _)| n == s).then(|| Fault::Table(s.to_string()))
    }
}

impl SuiteInput {
    /// Applies a fault; returns `false` if the fault names nothing.
    pub fn inject(&mut self, fault: &Fault) -> bool {
        match fault {
            Fault::Table(name) => self.tables.perturb(name),
            Fault::Edge(a, b) => {
                if a == b {
                    return false;
                }
                let flipped = !self.graph.adjacent(*a, *b);
                self.graph.set_edge(*a, *b, flipped);
                true
            }
        }
    }
}

/// Wall-clock timing where the platform has a clock (not bare wasm32).
struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    fn start() -> Self {
        Self {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn elapsed_ms(&self) -> u128 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed().as_millis();
        #[cfg(target_arch = "wasm32")]
        0
    }
}

/// Runs one check by name. Unknown names are `None`.
pub fn run_check(name: &str, input: &SuiteInput) -> Option<CheckReport> {
    let start = Stopwatch::start();
    let mut cert = Certificate::default();
    let t = &input.tables;
    let outcome = match name {
        "geometry" => checks::check_geometry(&t.geometry, &input.graph, &mut cert),
        "generators" => checks::check_generators(&t.generators, &mut cert),
        "theorem1" => checks::check_theorem1(&t.theorem1, &mut cert),
        "step1" => checks::check_step1(&t.step1, &mut cert),
        "steps2to4" => checks::check_steps2to4(&t.steps2to4, &mut cert),
        _ => return None,
    };
    Some(CheckReport {
        name: name.to_string(),
        status: if outcome.is_ok() { Status::Pass } else { Status::Fail },
        failure: outcome.err(),
        certificate: cert.into_json(),
        elapsed_ms: start.elapsed_ms(),
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Implication {
    pub certified: bool,
    pub statement: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
    pub implication: Implication,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckReport> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs the given checks (concurrently where threads exist); the report keeps
/// the order of `names`.
pub fn run_checks(names: &[&str], input: &SuiteInput) -> SuiteReport {
    #[cfg(not(target_arch = "wasm32"))]
    let checks: Vec<CheckReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = names.iter().map(|n| scope.spawn(move || run_check(n, input))).collect();
        handles.into_iter().filter_map(|h| h.join().expect("check panicked")).collect()
    });
    #[cfg(target_arch = "wasm32")]
    let checks: Vec<CheckReport> = names.iter().filter_map(|n| run_check(n, input)).collect();
    let pass = |n: &str| checks.iter().any(|c| c.name == n && c.passed());
    let certified = pass("generators") && pass("step1") && pass("steps2to4");
    SuiteReport {
        checks,
        implication: Implication {
            certified,
            statement: "d^{1,1}[φ] ≠ 0 ⇒ Br(V)/Br(F) = 0".to_string(),
        },
    }
}

pub fn full_report(input: &SuiteInput) -> SuiteReport {
    run_checks(&CHECK_NAMES, input)
}

fn default_check(name: &str) -> CheckReport {
    run_check(name, &SuiteInput::default()).expect("known check")
}

pub fn verify_geometry() -> CheckReport {
    default_check("geometry")
}

pub fn verify_generators() -> CheckReport {
    default_check("generators")
}

pub fn verify_theorem1() -> CheckReport {
    default_check("theorem1")
}

pub fn verify_step1() -> CheckReport {
    default_check("step1")
}

pub fn verify_steps2to4() -> CheckReport {
    default_check("steps2to4")
}
