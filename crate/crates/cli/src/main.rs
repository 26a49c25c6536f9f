use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use multielim::elim::{corank, count_roots};
use multielim::forms::{jacobian_determinant, sylvester_form, twisted_jacobian, SylvesterIndex};
use multielim::io::{write_matrix_json, write_matrix_market, PolyJson, SystemJson};
use multielim::regions::{NuKind, Regions};
use multielim::verify::{self, Report};
use multielim::{
    hybrid_matrix, macaulay_matrix, random_system, with_field, Error, Field, FieldSpec, GradedStructure, MultiDegree, MultiPoly, PolySystem, Q,
};
use thiserror::Error as ThisError;

#[derive(Parser, Debug)]
#[command(name = "multielim", version, about = "Multigraded elimination matrices over products of projective spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SystemArgs {
    /// Projective space dimensions, e.g. `1,1`.
    #[arg(long, value_name = "N1,N2,..", requires = "degrees", conflicts_with = "system")]
    dims: Option<String>,
    /// One multidegree per polynomial, e.g. `1,1;1,1;1,1`.
    #[arg(long, value_name = "D;D;..", requires = "dims")]
    degrees: Option<String>,
    /// JSON file with explicit coefficients.
    #[arg(long, value_name = "PATH")]
    system: Option<PathBuf>,
    /// `Q` or `Fp:<p>`; defaults to the field of `--system`, else `Fp:2147483647`.
    #[arg(long, value_name = "Q|Fp:<p>")]
    field: Option<String>,
    /// Seed for random coefficients.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Mtx,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum JacobianVariant {
    /// The twisted Jacobian `Sylv_0`.
    Twisted,
    /// The iterated-derivative Jacobian (over Q only).
    Derivative,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Property {
    Duality,
    Multiplication,
    Basis,
    Koszul,
    Jacobian,
    Droprank,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the critical degree and the Gamma regions; classify `--nu`.
    Regions {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Build and export M_nu, or H_nu with `--hybrid`.
    Matrix {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        hybrid: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print a Sylvester form.
    Sylvester {
        #[command(flatten)]
        sys: SystemArgs,
        /// One exponent list per block, e.g. `1,0;0,0`.
        #[arg(long)]
        index: String,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Print a Jacobian form.
    Jacobian {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, value_enum, default_value_t = JacobianVariant::Twisted)]
        variant: JacobianVariant,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Rank and corank of M_nu, or H_nu with `--hybrid`.
    Corank {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        nu: String,
        #[arg(long)]
        hybrid: bool,
    },
    /// Number of roots, checked at two degrees.
    Roots {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        nu: Option<String>,
    },
    /// Check a structural property on the given instance.
    Verify {
        #[arg(value_enum)]
        property: Property,
        #[command(flatten)]
        sys: SystemArgs,
        /// Number of planted roots for `droprank`.
        #[arg(long, default_value_t = 1)]
        kappa: usize,
        /// Upper corner of the degree window for `koszul`; defaults to delta + 3.
        #[arg(long)]
        window: Option<String>,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, ThisError)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(Error::NotZeroDimensional { .. }) => 1,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_nu(s: &str) -> CliResult<MultiDegree> {
    s.parse().map_err(|e| usage(format!("--nu {s:?}: {e}")))
}

fn parse_dims(s: &str) -> CliResult<Vec<usize>> {
    s.split(',').map(|p| p.trim().parse().map_err(|_| usage(format!("--dims {s:?}: expected comma-separated integers")))).collect()
}

fn parse_degrees(s: &str) -> CliResult<Vec<MultiDegree>> {
    s.split(';').map(|p| p.parse().map_err(|e| usage(format!("--degrees {s:?}: {e}")))).collect()
}

/// Where the polynomials come from.
enum Source {
    Generated(GradedStructure),
    Json(SystemJson),
}

impl Source {
    fn from_args(sys: &SystemArgs) -> CliResult<(Source, FieldSpec)> {
        let requested: Option<FieldSpec> = sys.field.as_deref().map(|f| f.parse().map_err(|e| usage(format!("--field: {e}")))).transpose()?;
        match (&sys.system, &sys.dims, &sys.degrees) {
            (Some(path), None, None) => {
                let json = SystemJson::parse(&std::fs::read_to_string(path)?)?;
                let declared = json.field_spec()?;
                if let Some(f) = requested {
                    if f != declared {
                        return Err(usage(format!("--field {f} disagrees with the system file's field {declared}")));
                    }
                }
                Ok((Source::Json(json), declared))
            }
            (None, Some(dims), Some(degrees)) => {
                let dims = parse_dims(dims)?;
                let degrees = parse_degrees(degrees)?;
                let n: usize = dims.iter().sum();
                let s = if degrees.len() == n + 1 {
                    GradedStructure::new(&dims, degrees)?
                } else {
                    GradedStructure::underdetermined(&dims, degrees)?
                };
                Ok((Source::Generated(s), requested.unwrap_or(FieldSpec::Prime(multielim::DEFAULT_PRIME))))
            }
            _ => Err(usage("give either --system or both --dims and --degrees")),
        }
    }

    fn structure(&self) -> CliResult<GradedStructure> {
        match self {
            Source::Generated(s) => Ok(s.clone()),
            Source::Json(j) => Ok(j.structure()?),
        }
    }

    fn system<S: Field>(&self, seed: u64) -> CliResult<PolySystem<S>> {
        match self {
            Source::Generated(s) => Ok(random_system::<S>(s, seed)),
            Source::Json(j) => Ok(j.to_system::<S>()?),
        }
    }
}

struct Outcome {
    text: String,
    passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, passed: true }
    }
}

fn print_poly<S: Field>(label: &str, p: &MultiPoly<S>, degree: &MultiDegree, format: Option<Format>) -> CliResult<String> {
    match format.unwrap_or(Format::Text) {
        Format::Text => Ok(format!("{label} (degree {degree}, {} terms)\n{p}\n", p.num_terms())),
        Format::Json => Ok(PolyJson::from_poly(p, degree).to_string_pretty() + "\n"),
        Format::Mtx => Err(usage("--format mtx applies to matrices only")),
    }
}

fn regions_text(s: &GradedStructure, nu: Option<&MultiDegree>) -> CliResult<String> {
    let regions = Regions::new(s);
    let mut out = String::new();
    writeln!(out, "delta = {}", regions.delta()).unwrap();
    for i in 0..3 {
        writeln!(out, "Gamma_{i} = {}", regions.gamma(i)).unwrap();
    }
    writeln!(out, "drop-of-rank region = {} + N^{}", regions.drop_of_rank_corner(), s.r()).unwrap();
    if let Some(nu) = nu {
        if nu.len() != s.r() {
            return Err(usage(format!("--nu {nu} has {} entries, expected {}", nu.len(), s.r())));
        }
        let a = regions.classify(nu);
        let kind = match &a.kind {
            NuKind::Macaulay => "Macaulay-admissible".to_string(),
            NuKind::Hybrid { mu } => format!("hybrid-admissible (mu = {mu})"),
            NuKind::Inadmissible => "inadmissible".to_string(),
        };
        writeln!(out, "nu = {nu}: {kind}{}", if a.drop_of_rank { ", in the drop-of-rank region" } else { "" }).unwrap();
    }
    Ok(out)
}

fn report_outcome(r: Report) -> Outcome {
    Outcome { text: format!("{r}\n"), passed: r.passed }
}

fn run_field<S: Field>(command: &Command, source: &Source, seed: u64) -> CliResult<Outcome> {
    match command {
        Command::Matrix { nu, hybrid, out, .. } => {
            let f = source.system::<S>(seed)?;
            let nu = parse_nu(nu)?;
            let m = if *hybrid { hybrid_matrix(&f, &nu)? } else { macaulay_matrix(&f, &nu)? };
            match out.format.unwrap_or(Format::Mtx) {
                Format::Mtx => Ok(Outcome::ok(write_matrix_market(&m))),
                Format::Json => Ok(Outcome::ok(write_matrix_json(&m) + "\n")),
                Format::Text => Ok(Outcome::ok(format!("nu = {nu}: {}\n", m.shape()))),
            }
        }
        Command::Sylvester { index, out, .. } => {
            let f = source.system::<S>(seed)?;
            let idx = SylvesterIndex::parse(f.layout(), index)?;
            let form = sylvester_form(&f, &idx)?;
            let degree = Regions::new(f.structure()).delta() - &idx.norms();
            print_poly(&format!("Sylv[{idx}]"), &form, &degree, out.format).map(Outcome::ok)
        }
        Command::Jacobian { variant, out, .. } => {
            let f = source.system::<S>(seed)?;
            let delta = Regions::new(f.structure()).delta().clone();
            let (label, p) = match variant {
                JacobianVariant::Twisted => ("twisted Jacobian", twisted_jacobian(&f)),
                JacobianVariant::Derivative => ("Jacobian", jacobian_determinant(&f)?),
            };
            print_poly(label, &p, &delta, out.format).map(Outcome::ok)
        }
        Command::Corank { nu, hybrid, .. } => {
            let f = source.system::<S>(seed)?;
            let nu = parse_nu(nu)?;
            let m = if *hybrid { hybrid_matrix(&f, &nu)? } else { macaulay_matrix(&f, &nu)? };
            let rank = m.rank()?;
            Ok(Outcome::ok(format!("nu = {nu}: {}, rank {rank}, corank {}\n", m.shape(), m.nrows() - rank)))
        }
        Command::Roots { nu, .. } => {
            let f = source.system::<S>(seed)?;
            let nu = nu.as_deref().map(parse_nu).transpose()?;
            let count = count_roots(&f, nu.as_ref())?;
            let at = nu.unwrap_or_else(|| Regions::new(f.structure()).drop_of_rank_corner());
            Ok(Outcome::ok(format!("roots = {count} (corank at {at}: {})\n", corank(&f, &at)?)))
        }
        Command::Verify { property, kappa, window, .. } => {
            let report = match property {
                Property::Duality => verify::duality(&source.system::<S>(seed)?)?,
                Property::Multiplication => verify::multiplication(&source.system::<S>(seed)?)?,
                Property::Basis => verify::basis(&source.system::<S>(seed)?)?,
                Property::Koszul => {
                    let f = source.system::<S>(seed)?;
                    let hi = match window {
                        Some(w) => parse_nu(w)?,
                        None => Regions::new(f.structure()).delta() + &MultiDegree::splat(f.structure().r(), 3),
                    };
                    verify::koszul(&f, &hi)?
                }
                Property::Droprank => verify::droprank::<S>(&source.structure()?, *kappa, seed)?,
                Property::Jacobian => unreachable!("handled over Q"),
            };
            Ok(report_outcome(report))
        }
        Command::Regions { .. } => unreachable!("field independent"),
    }
}

fn run(cli: &Cli) -> CliResult<Outcome> {
    let sys = match &cli.command {
        Command::Regions { sys, .. }
        | Command::Matrix { sys, .. }
        | Command::Sylvester { sys, .. }
        | Command::Jacobian { sys, .. }
        | Command::Corank { sys, .. }
        | Command::Roots { sys, .. }
        | Command::Verify { sys, .. } => sys,
    };
    let (source, field) = Source::from_args(sys)?;
    match &cli.command {
        Command::Regions { nu, .. } => {
            let nu = nu.as_deref().map(parse_nu).transpose()?;
            Ok(Outcome::ok(regions_text(&source.structure()?, nu.as_ref())?))
        }
        Command::Verify { property: Property::Jacobian, .. } | Command::Jacobian { variant: JacobianVariant::Derivative, .. } if field != FieldSpec::Rationals => {
            Err(CliError::Lib(Error::UnsupportedField { required: "Q", found: field }))
        }
        Command::Verify { property: Property::Jacobian, .. } => Ok(report_outcome(verify::jacobian(&source.system::<Q>(sys.seed)?)?)),
        command => with_field!(field, S => run_field::<S>(command, &source, sys.seed))?,
    }
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Matrix { out, .. } | Command::Sylvester { out, .. } | Command::Jacobian { out, .. } => out.output.as_ref(),
        Command::Verify { output, .. } => output.as_ref(),
        _ => None,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|outcome| {
        match output_path(&cli.command) {
            Some(path) => std::fs::write(path, &outcome.text)?,
            None => print!("{}", outcome.text),
        }
        Ok(outcome.passed)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("multielim: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
