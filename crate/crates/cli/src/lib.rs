//! Argument handling and command dispatch for the `cubic-brauer` binary.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cubic_brauer::classifier::{
    classify, galois_image, normalize, Ambient, ClassifierError, CubeClassVector, SurfaceInput,
};
use cubic_brauer::cohomology::{bar_cohomology, tate_h_minus1, CohomologyError, FiniteGroup, GLattice};
use cubic_brauer::geometry::{lines_dump, FieldAutomorphism, GeometryError};
use cubic_brauer::suite::{pic_lattice, run_checks, Fault, ReferenceTables, SuiteInput, CHECK_NAMES};
use num_rational::BigRational;
use serde_json::{json, Value as Json};
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cubic-brauer", version, about = "Brauer groups of diagonal cubic surfaces, computed exactly")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Structure of H¹(k, Pic V̄) and, where licensed, of Br(V)/Br(k).
    Classify(ClassifyArgs),
    /// The 27 lines: incidences and classes in Pic.
    Lines,
    /// Invariant factors of group cohomology of the Picard lattice.
    Cohomology(CohomologyArgs),
    /// Run the verification battery.
    Verify(VerifyArgs),
}

/// Coefficients of `ax³ + by³ + cz³ + dt³`, or the cube classes directly.
#[derive(Args, Debug)]
pub struct SurfaceArgs {
    #[arg(long, allow_hyphen_values = true, requires_all = ["b", "c", "d"], conflicts_with_all = ["lambda", "mu", "nu"])]
    pub a: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    pub b: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    pub c: Option<String>,
    #[arg(long, allow_hyphen_values = true, requires = "a")]
    pub d: Option<String>,
    /// Cube class of λ = b/a as comma-separated F₃ coordinates.
    #[arg(long, requires_all = ["mu", "nu"])]
    pub lambda: Option<String>,
    /// Cube class of μ = d/c.
    #[arg(long, requires = "lambda")]
    pub mu: Option<String>,
    /// Cube class of ν = c/a.
    #[arg(long, requires = "lambda")]
    pub nu: Option<String>,
    /// dim k*/(k*)³ for abstract classes (unbounded if omitted).
    #[arg(long, requires = "lambda")]
    pub dim: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub surface: SurfaceArgs,
    /// V has a rational point.
    #[arg(long)]
    pub rational_point: bool,
    /// The base field has cohomological dimension at most 2.
    #[arg(long)]
    pub cd_le_2: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LatticeChoice {
    /// The rank-7 geometric Picard lattice.
    Pic,
    /// Its w-invariant rank-5 sublattice.
    Rank5,
}

#[derive(Args, Debug)]
pub struct CohomologyArgs {
    /// Group generators, comma separated (e.g. `s,t` or `st`). Alternatively
    /// give a surface and use its Galois image.
    #[arg(long, conflicts_with_all = ["a", "lambda"])]
    pub group: Option<String>,
    #[command(flatten)]
    pub surface: SurfaceArgs,
    #[arg(long, value_enum, default_value_t = LatticeChoice::Pic)]
    pub lattice: LatticeChoice,
    #[arg(long, default_value_t = 1)]
    pub degree: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run only this check (repeatable).
    #[arg(long = "check", value_parser = clap::builder::PossibleValuesParser::new(CHECK_NAMES))]
    pub checks: Vec<String>,
    /// Corrupt one table entry (by name) or incidence (`edge:A,B`) before running.
    #[arg(long, hide = true)]
    pub inject: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_CHECK_FAILED,
        }
    }
}

fn parse_rational(name: &str, text: &str) -> Result<BigRational, CliError> {
    BigRational::from_str(text.trim()).map_err(|_| CliError::Usage(format!("--{name}: `{text}` is not a rational number")))
}

fn parse_class(name: &str, text: &str, ambient: Ambient) -> Result<CubeClassVector, CliError> {
    let coords = text
        .split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.trim().parse::<u8>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("--{name}: expected comma-separated digits 0, 1, 2")))?;
    CubeClassVector::new(coords, ambient).map_err(|e| CliError::Usage(format!("--{name}: {e}")))
}

impl SurfaceArgs {
    fn is_given(&self) -> bool {
        self.a.is_some() || self.lambda.is_some()
    }

    fn input(&self) -> Result<SurfaceInput, CliError> {
        if let (Some(a), Some(b), Some(c), Some(d)) = (&self.a, &self.b, &self.c, &self.d) {
            let [a, b, c, d] = [("a", a), ("b", b), ("c", c), ("d", d)].map(|(n, v)| parse_rational(n, v));
            return SurfaceInput::rational(a?, b?, c?, d?).map_err(|e| CliError::Usage(e.to_string()));
        }
        if let (Some(l), Some(m), Some(n)) = (&self.lambda, &self.mu, &self.nu) {
            let ambient = self.dim.map_or(Ambient::Unbounded, Ambient::Finite);
            return Ok(SurfaceInput::classes(
                parse_class("lambda", l, ambient)?,
                parse_class("mu", m, ambient)?,
                parse_class("nu", n, ambient)?,
            ));
        }
        Err(CliError::Usage("give --a --b --c --d or --lambda --mu --nu".into()))
    }
}

/// What a command produced, in both renderings.
struct Rendered {
    text: String,
    json: Json,
    code: i32,
}

fn cmd_classify(args: &ClassifyArgs) -> Result<Rendered, CliError> {
    let input = args.surface.input()?.with_flags(
        args.rational_point.then_some(true),
        args.cd_le_2.then_some(true),
    );
    let c = classify(&input)?;
    Ok(Rendered { text: c.to_string(), json: c.to_json(), code: EXIT_OK })
}

fn cmd_lines() -> Result<Rendered, CliError> {
    let dump = lines_dump()?;
    let mut text = String::from("incidence:\n");
    for (line, meets) in &dump.incidence {
        text += &format!("  {line}: {}\n", meets.join(" "));
    }
    text += "classes in Pic (basis L0 L1 L2 M0 M1 M2 l):\n";
    for (line, class) in &dump.pic_classes {
        text += &format!("  {line}: {class:?}\n");
    }
    let json = serde_json::to_value(&dump).expect("plain data");
    Ok(Rendered { text: text.trim_end().to_string(), json, code: EXIT_OK })
}

fn parse_group(spec: &str) -> Result<FiniteGroup, CliError> {
    let gens = spec
        .split(',')
        .map(|g| FieldAutomorphism::parse(g.trim()).ok_or_else(|| CliError::Usage(format!("--group: unknown element `{g}`"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteGroup::generated_by(&gens))
}

fn cmd_cohomology(args: &CohomologyArgs) -> Result<Rendered, CliError> {
    let group = match (&args.group, args.surface.is_given()) {
        (Some(spec), _) => parse_group(spec)?,
        (None, true) => {
            let n = normalize(&args.surface.input()?)?;
            galois_image(&n.lambda, &n.mu, &n.nu)
        }
        (None, false) => return Err(CliError::Usage("give --group or a surface".into())),
    };
    let pic = pic_lattice(&group)?;
    let lattice: GLattice = match args.lattice {
        LatticeChoice::Pic => pic,
        LatticeChoice::Rank5 => {
            let basis: Vec<Vec<i64>> = ReferenceTables::default().geometry.rank5_basis.iter().map(|v| v.to_vec()).collect();
            pic.restrict(&group, &basis)?
        }
    };
    let factors = bar_cohomology(&group, &lattice, args.degree)?;
    let elements: Vec<String> = group.elements().iter().map(|g| g.to_string()).collect();
    let factor_strings: Vec<String> = factors.iter().map(|f| f.to_string()).collect();
    let mut json = json!({
        "group": elements,
        "lattice": format!("{:?}", args.lattice).to_lowercase(),
        "degree": args.degree,
        "invariant_factors": factor_strings,
    });
    let mut text = format!(
        "group: ⟨{}⟩ (order {})\nH^{}: {}",
        elements.join(", "),
        group.order(),
        args.degree,
        describe(&factor_strings)
    );
    // cyclic of order 3: also report Tate Ĥ⁻¹, which agrees with H¹
    if group.order() == 3 {
        let g = group.elements().iter().copied().find(|g| !g.is_identity()).expect("nontrivial");
        let tate = tate_h_minus1(&lattice.int_matrix(g), 3)?;
        let t: Vec<String> = tate.factors.iter().map(|f| f.to_string()).collect();
        text += &format!("\nĤ^-1 (generator {g}): {}", describe(&t));
        json["tate_h_minus1"] = json!(t);
    }
    Ok(Rendered { text, json, code: EXIT_OK })
}

fn describe(factors: &[String]) -> String {
    if factors.is_empty() {
        return "0".into();
    }
    factors.iter().map(|f| if f == "0" { "Z".to_string() } else { format!("Z/{f}") }).collect::<Vec<_>>().join(" ⊕ ")
}

fn cmd_verify(args: &VerifyArgs) -> Result<Rendered, CliError> {
    let mut input = SuiteInput::default();
    for spec in &args.inject {
        let fault = Fault::parse(spec).ok_or_else(|| CliError::Usage(format!("--inject: unknown fault `{spec}`")))?;
        input.inject(&fault);
    }
    let names: Vec<&str> = if args.checks.is_empty() {
        CHECK_NAMES.to_vec()
    } else {
        CHECK_NAMES.iter().copied().filter(|n| args.checks.iter().any(|c| c == n)).collect()
    };
    let report = run_checks(&names, &input);
    let mut text = String::new();
    for c in &report.checks {
        let status = if c.passed() { "pass" } else { "FAIL" };
        text += &format!("{:<11} {status} ({} ms)\n", c.name, c.elapsed_ms);
        if let Some(f) = &c.failure {
            text += &format!("            {f}\n");
        }
    }
    if names.len() == CHECK_NAMES.len() {
        let verdict = if report.implication.certified { "certified" } else { "not certified" };
        text += &format!("{}: {verdict}\n", report.implication.statement);
    }
    let code = if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
    let json = serde_json::to_value(&report.checks).expect("plain data");
    Ok(Rendered { text: text.trim_end().to_string(), json, code })
}

fn execute(cli: &Cli) -> Result<Rendered, CliError> {
    match &cli.command {
        Command::Classify(a) => cmd_classify(a),
        Command::Lines => cmd_lines(),
        Command::Cohomology(a) => cmd_cohomology(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// Runs the program; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{rendered}") } else { write!(out, "{rendered}") };
            return code;
        }
    };
    let result = execute(&cli).and_then(|r| {
        let body = match cli.format {
            Format::Text => r.text,
            Format::Json => serde_json::to_string_pretty(&r.json).expect("plain data"),
        };
        match &cli.output {
            Some(path) => fs::write(path, format!("{body}\n"))?,
            None => writeln!(out, "{body}")?,
        }
        Ok(r.code)
    });
    match result {
        Ok(code) => code,
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
