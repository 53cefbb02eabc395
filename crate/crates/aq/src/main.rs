//! `aq`: grids, circle traces, decomposition reports, and the
//! cross-oracle verification suite for the Apollonius qubit geometry.
//!
//! Every numeric value comes from a library call; this binary only
//! parses flags, iterates grids, and serializes rows. Exit codes:
//! 0 success, 1 usage error, 2 I/O or domain error, 3 verification
//! failure.

mod output;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use apollonius::bipolar_nls::{self, ConcurrenceField};
use apollonius::complex_plane::{
    circle_from_ratio, from_bipolar, ratio, BipolarCoords, CircleKind, ExtendedComplex,
};
use apollonius::generic_two_qubit::{
    concurrence_parametric, decompose, law_of_cosines_residual, reconstruct, reflected_state,
};
use apollonius::multi_qubit::{
    apollonius_n_state, concurrence_closed_form, concurrence_determinant, TwoQubitState,
};
use apollonius::single_qubit::shannon_entropy;
use apollonius::verify::run_all_with_fault;

use output::{fmt_g, write_table, Cell, Format};

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "aq", version, about = "Apollonius-circle qubit geometry toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Shannon entropy of the reduced state over a plane grid
    EntropyGrid(GridArgs),
    /// Two-qubit concurrence over a plane grid, with an oracle spot check
    ConcurrenceGrid(ConcurrenceGridArgs),
    /// Trace a family of Apollonius circles
    Circles(CirclesArgs),
    /// Bipolar (tau, sigma) mesh with mapped plane points and concurrence
    BipolarGrid(BipolarGridArgs),
    /// Finite-difference residual of the soliton identity for the
    /// complex concurrence field
    NlsCheck(NlsArgs),
    /// Decompose a two-qubit state into (eta, zeta, xi) and report the
    /// concurrence by three routes
    Decompose(DecomposeArgs),
    /// Run the seeded cross-oracle verification suites
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = -1.0)]
    xmin: f64,
    #[arg(long, default_value_t = 2.0)]
    xmax: f64,
    #[arg(long, default_value_t = -1.5)]
    ymin: f64,
    #[arg(long, default_value_t = 1.5)]
    ymax: f64,
    #[arg(long, default_value_t = 300)]
    nx: usize,
    #[arg(long, default_value_t = 300)]
    ny: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

impl GridArgs {
    fn validate(&self) -> Result<(), String> {
        if !(self.xmin < self.xmax) || !(self.ymin < self.ymax) {
            return Err("grid bounds must satisfy xmin < xmax and ymin < ymax".to_string());
        }
        if self.nx < 2 || self.ny < 2 {
            return Err("grid needs nx >= 2 and ny >= 2".to_string());
        }
        Ok(())
    }

    fn points(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        let (nx, ny) = (self.nx, self.ny);
        (0..ny).flat_map(move |j| {
            (0..nx).map(move |i| {
                let x = self.xmin + (self.xmax - self.xmin) * i as f64 / (nx - 1) as f64;
                let y = self.ymin + (self.ymax - self.ymin) * j as f64 / (ny - 1) as f64;
                (x, y)
            })
        })
    }
}

#[derive(Args)]
struct ConcurrenceGridArgs {
    #[command(flatten)]
    grid: GridArgs,
    /// Seed for the 1% determinant-oracle spot check
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CirclesArgs {
    /// Ratios of the circles to trace, e.g. --ratios 0.5,1,2
    #[arg(long, value_delimiter = ',', required = true)]
    ratios: Vec<f64>,
    /// Points per circle
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Vertical extent used for the r = 1 line case
    #[arg(long, default_value_t = -1.5)]
    ymin: f64,
    #[arg(long, default_value_t = 1.5)]
    ymax: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BipolarGridArgs {
    #[arg(long, default_value_t = -3.0)]
    tau_min: f64,
    #[arg(long, default_value_t = 3.0)]
    tau_max: f64,
    #[arg(long, default_value_t = -PI, allow_hyphen_values = true)]
    sigma_min: f64,
    #[arg(long, default_value_t = PI)]
    sigma_max: f64,
    #[arg(long, default_value_t = 100)]
    nx: usize,
    #[arg(long, default_value_t = 100)]
    ny: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct NlsArgs {
    #[arg(long, default_value_t = -3.0)]
    tau_min: f64,
    #[arg(long, default_value_t = 3.0)]
    tau_max: f64,
    #[arg(long, default_value_t = -3.0)]
    sigma_min: f64,
    #[arg(long, default_value_t = 3.0)]
    sigma_max: f64,
    /// Grid steps per axis
    #[arg(long, default_value_t = 50)]
    steps: usize,
    /// Finite-difference step
    #[arg(long, default_value_t = 1e-3)]
    h: f64,
    /// Residual tolerance for PASS
    #[arg(long, default_value_t = 1e-4)]
    tol: f64,
    /// Amplitude factor; values other than 1 are a negative control
    #[arg(long, default_value_t = 1.0)]
    perturb: f64,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Eight reals: re and im of c00, c01, c10, c11
    #[arg(num_args = 8, allow_negative_numbers = true)]
    amps: Vec<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    trials: usize,
    /// Deliberately corrupt the first suite (harness negative control)
    #[arg(long, hide = true)]
    inject_fault: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                e.exit();
            }
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let result = match cli.command {
        Command::EntropyGrid(args) => cmd_entropy_grid(&args),
        Command::ConcurrenceGrid(args) => cmd_concurrence_grid(&args),
        Command::Circles(args) => cmd_circles(&args),
        Command::BipolarGrid(args) => cmd_bipolar_grid(&args),
        Command::NlsCheck(args) => cmd_nls_check(&args),
        Command::Decompose(args) => cmd_decompose(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("aq: {message}");
            ExitCode::from(EXIT_IO)
        }
    }
}

fn usage(args: &GridArgs) -> Option<u8> {
    if let Err(message) = args.validate() {
        eprintln!("aq: {message}");
        return Some(EXIT_USAGE);
    }
    None
}

fn cmd_entropy_grid(args: &GridArgs) -> Result<u8, String> {
    if let Some(code) = usage(args) {
        return Ok(code);
    }
    let mut rows = Vec::with_capacity(args.nx * args.ny);
    for (x, y) in args.points() {
        let z = ExtendedComplex::new(x, y);
        let r = ratio(z);
        let entropy = shannon_entropy(r).map_err(|e| e.to_string())?;
        rows.push(vec![Cell::Real(x), Cell::Real(y), Cell::Real(r), Cell::Real(entropy)]);
    }
    write_table(&["x", "y", "r", "entropy"], &rows, args.format, args.out.as_deref())
        .map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_concurrence_grid(args: &ConcurrenceGridArgs) -> Result<u8, String> {
    let grid = &args.grid;
    if let Some(code) = usage(grid) {
        return Ok(code);
    }
    let mut rows = Vec::with_capacity(grid.nx * grid.ny);
    let mut values = Vec::with_capacity(grid.nx * grid.ny);
    for (x, y) in grid.points() {
        let z = ExtendedComplex::new(x, y);
        let r = ratio(z);
        let c = concurrence_closed_form(r).map_err(|e| e.to_string())?;
        values.push((z, c));
        rows.push(vec![Cell::Real(x), Cell::Real(y), Cell::Real(r), Cell::Real(c)]);
    }

    // spot check 1% of the grid against the determinant oracle
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let checks = (values.len() / 100).max(1);
    for _ in 0..checks {
        let (z, c) = values[rng.gen_range(0..values.len())];
        let det = apollonius_n_state(z, 2)
            .and_then(|s| concurrence_determinant(&s.as_two_qubit().expect("n = 2")))
            .map_err(|e| e.to_string())?;
        if (det - c).abs() >= 1e-10 {
            eprintln!(
                "aq: oracle mismatch at z = {}: closed form {} vs determinant {}",
                fmt_complex(z),
                fmt_g(c),
                fmt_g(det)
            );
            return Ok(EXIT_VERIFY);
        }
    }

    write_table(&["x", "y", "r", "concurrence"], &rows, grid.format, grid.out.as_deref())
        .map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_circles(args: &CirclesArgs) -> Result<u8, String> {
    if args.samples < 2 {
        eprintln!("aq: --samples must be at least 2");
        return Ok(EXIT_USAGE);
    }
    if args.ratios.iter().any(|r| *r < 0.0 || r.is_nan()) {
        eprintln!("aq: circle ratios must be nonnegative");
        return Ok(EXIT_USAGE);
    }
    let mut rows = Vec::new();
    for &r in &args.ratios {
        let circle = circle_from_ratio(r).map_err(|e| e.to_string())?;
        match circle.kind() {
            CircleKind::Point => {
                let p = circle.point().expect("point case has a point");
                rows.push(vec![Cell::Real(r), Cell::Int(0), Cell::Real(p.re), Cell::Real(p.im)]);
            }
            CircleKind::Line => {
                // the r = 1 locus is the vertical line Re z = 1/2
                for k in 0..args.samples {
                    let y = args.ymin
                        + (args.ymax - args.ymin) * k as f64 / (args.samples - 1) as f64;
                    rows.push(vec![
                        Cell::Real(r),
                        Cell::Int(k as u64),
                        Cell::Real(0.5),
                        Cell::Real(y),
                    ]);
                }
            }
            CircleKind::Circle => {
                let points = circle.sample_points(args.samples).map_err(|e| e.to_string())?;
                for (k, p) in points.iter().enumerate() {
                    rows.push(vec![
                        Cell::Real(r),
                        Cell::Int(k as u64),
                        Cell::Real(p.re),
                        Cell::Real(p.im),
                    ]);
                }
            }
        }
    }
    write_table(&["r", "k", "x", "y"], &rows, args.format, args.out.as_deref())
        .map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_bipolar_grid(args: &BipolarGridArgs) -> Result<u8, String> {
    if !(args.tau_min < args.tau_max) || !(args.sigma_min < args.sigma_max) {
        eprintln!("aq: bipolar bounds must satisfy min < max");
        return Ok(EXIT_USAGE);
    }
    if args.nx < 2 || args.ny < 2 {
        eprintln!("aq: grid needs nx >= 2 and ny >= 2");
        return Ok(EXIT_USAGE);
    }
    let mut rows = Vec::with_capacity(args.nx * args.ny);
    for j in 0..args.ny {
        let sigma =
            args.sigma_min + (args.sigma_max - args.sigma_min) * j as f64 / (args.ny - 1) as f64;
        for i in 0..args.nx {
            let tau =
                args.tau_min + (args.tau_max - args.tau_min) * i as f64 / (args.nx - 1) as f64;
            let z = from_bipolar(BipolarCoords::new(tau, sigma));
            let (x, y) = match z.complex() {
                Some(z) => (z.re, z.im),
                None => (f64::INFINITY, f64::INFINITY),
            };
            rows.push(vec![
                Cell::Real(tau),
                Cell::Real(sigma),
                Cell::Real(x),
                Cell::Real(y),
                Cell::Real(bipolar_nls::concurrence_sech(tau)),
            ]);
        }
    }
    write_table(
        &["tau", "sigma", "x", "y", "concurrence"],
        &rows,
        args.format,
        args.out.as_deref(),
    )
    .map_err(|e| e.to_string())?;
    Ok(0)
}

fn cmd_nls_check(args: &NlsArgs) -> Result<u8, String> {
    if args.h <= 0.0 || !args.h.is_finite() {
        eprintln!("aq: --h must be a positive finite step");
        return Ok(EXIT_USAGE);
    }
    if args.steps < 2 || !(args.tau_min < args.tau_max) || !(args.sigma_min < args.sigma_max) {
        eprintln!("aq: need steps >= 2 and min < max ranges");
        return Ok(EXIT_USAGE);
    }
    let field = if args.perturb == 1.0 {
        ConcurrenceField::soliton()
    } else {
        ConcurrenceField::scaled_soliton(args.perturb)
    };
    let mut max_residual: f64 = 0.0;
    for i in 0..args.steps {
        let tau =
            args.tau_min + (args.tau_max - args.tau_min) * i as f64 / (args.steps - 1) as f64;
        for j in 0..args.steps {
            let sigma = args.sigma_min
                + (args.sigma_max - args.sigma_min) * j as f64 / (args.steps - 1) as f64;
            let residual = bipolar_nls::nls_residual(&field, tau, sigma, args.h)
                .map_err(|e| e.to_string())?;
            max_residual = max_residual.max(residual.norm());
        }
    }
    let pass = max_residual < args.tol;
    println!(
        "nls-check: max |residual| = {} over {}x{} grid (h = {}, amplitude = {})",
        fmt_g(max_residual),
        args.steps,
        args.steps,
        fmt_g(args.h),
        fmt_g(args.perturb)
    );
    println!("{}", if pass { "PASS" } else { "FAIL" });
    Ok(if pass { 0 } else { EXIT_VERIFY })
}

fn fmt_complex(z: ExtendedComplex) -> String {
    match z.complex() {
        None => "inf".to_string(),
        Some(z) => {
            let sign = if z.im < 0.0 { '-' } else { '+' };
            format!("{} {} {}i", fmt_g(z.re), sign, fmt_g(z.im.abs()))
        }
    }
}

fn cmd_decompose(args: &DecomposeArgs) -> Result<u8, String> {
    let v = &args.amps;
    let amps = [
        Complex64::new(v[0], v[1]),
        Complex64::new(v[2], v[3]),
        Complex64::new(v[4], v[5]),
        Complex64::new(v[6], v[7]),
    ];
    let norm = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    let state = match TwoQubitState::from_unnormalized(amps) {
        Ok(state) => state,
        Err(_) => {
            eprintln!("aq: amplitudes form the zero vector");
            return Ok(EXIT_USAGE);
        }
    };
    if (norm - 1.0).abs() > 1e-9 {
        eprintln!("aq: input norm {} differs from 1, normalizing", fmt_g(norm));
    }

    let d = decompose(&state);
    let psi = reconstruct(&d);
    println!("eta           = {}", fmt_complex(d.eta));
    println!("zeta          = {}", fmt_complex(d.zeta));
    println!("xi            = {}", fmt_complex(d.xi));
    println!("global_phase  = {}", fmt_g(d.global_phase));
    println!(
        "concurrence (parametric)  = {}",
        fmt_g(concurrence_parametric(&d))
    );
    println!(
        "concurrence (determinant) = {}",
        fmt_g(concurrence_determinant(&state).map_err(|e| e.to_string())?)
    );
    println!(
        "concurrence (reflection)  = {}",
        fmt_g(reflected_state(&d).inner(&psi).norm())
    );
    println!(
        "law_of_cosines_residual   = {}",
        fmt_g(law_of_cosines_residual(&d))
    );
    Ok(0)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8, String> {
    if args.trials == 0 {
        eprintln!("aq: --trials must be at least 1");
        return Ok(EXIT_USAGE);
    }
    let reports = run_all_with_fault(args.seed, args.trials, args.inject_fault);
    let mut all_passed = true;
    for report in &reports {
        let verdict = if report.passed() { "PASS" } else { "FAIL" };
        all_passed &= report.passed();
        println!(
            "{verdict}  {:<28} max error {:>12} (tolerance {})",
            report.name,
            fmt_g(report.max_error),
            fmt_g(report.tolerance)
        );
    }
    println!(
        "{} of {} suites passed (seed {}, trials {})",
        reports.iter().filter(|r| r.passed()).count(),
        reports.len(),
        args.seed,
        args.trials
    );
    Ok(if all_passed { 0 } else { EXIT_VERIFY })
}
