//! `unifour` command-line front end.
//!
//! Subcommands: `solve` (spectrum + eigenfunction tables), `scan`
//! (admissibility scan of candidate exponents), `verify` (invariant
//! suites), `transform` (tabulate a transform of a built-in test function),
//! `oracle` (finite-difference eigensolver). Every run prints a JSON report
//! to stdout; CSV outputs are deterministic with 15 significant digits.
//!
//! Exit codes: 0 all checks passed, 1 a check failed or a computation/IO
//! error occurred, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use unifour::checks;
use unifour::oracle::{self, FdConfig};
use unifour::oscillator;
use unifour::report::{Check, RunReport};
use unifour::testfns::TestFunction;
use unifour::transforms;
use unifour::{GridFunction, QuadratureConfig, TransformKind};

#[derive(Parser)]
#[command(
    name = "unifour",
    version,
    about = "Unilateral Fourier (sine/cosine) transform method for the 1-D quantum harmonic oscillator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve for the lowest eigenpairs and write spectrum/eigenfunction CSVs.
    Solve {
        /// Highest quantum number to solve for.
        #[arg(long = "n-max")]
        n_max: usize,
        /// Output directory for spectrum.csv and psi_<n>.csv.
        #[arg(long)]
        out: PathBuf,
        /// Domain half-width of the eigenfunction grid.
        #[arg(long, default_value_t = 10.0)]
        half_width: f64,
        /// Grid spacing of the eigenfunction grid.
        #[arg(long, default_value_t = 5e-3)]
        grid_spacing: f64,
    },
    /// Scan candidate exponents a and classify their admissibility.
    Scan {
        #[arg(long = "a-min", allow_negative_numbers = true)]
        a_min: f64,
        #[arg(long = "a-max", allow_negative_numbers = true)]
        a_max: f64,
        #[arg(long)]
        step: f64,
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Output directory for scan.csv.
        #[arg(long)]
        out: PathBuf,
        /// Quadrature relative tolerance for the growth diagnostics.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Run a module invariant suite and report pass/fail per check.
    Verify {
        #[arg(value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
    /// Tabulate a built-in test function and its transform.
    Transform {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// One of: exp, gauss, x_gauss, x3_gauss.
        #[arg(long, value_enum)]
        function: FunctionArg,
        /// Largest k to tabulate.
        #[arg(long = "k-max")]
        k_max: f64,
        /// Output directory for signal.csv and transform.csv.
        #[arg(long)]
        out: PathBuf,
        /// Quadrature relative tolerance.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Finite-difference eigensolver cross-check.
    Oracle {
        #[arg(long, default_value_t = FdConfig::DEFAULT_HALF_WIDTH)]
        half_width: f64,
        #[arg(long, default_value_t = FdConfig::DEFAULT_POINTS)]
        points: usize,
        #[arg(long, default_value_t = 9)]
        states: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Sine,
    Cosine,
}

impl From<KindArg> for TransformKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Sine => TransformKind::Sine,
            KindArg::Cosine => TransformKind::Cosine,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Transforms,
    Oscillator,
    Oracle,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FunctionArg {
    Exp,
    Gauss,
    #[value(name = "x_gauss")]
    XGauss,
    #[value(name = "x3_gauss")]
    X3Gauss,
}

impl From<FunctionArg> for TestFunction {
    fn from(f: FunctionArg) -> Self {
        match f {
            FunctionArg::Exp => TestFunction::Exp,
            FunctionArg::Gauss => TestFunction::Gauss,
            FunctionArg::XGauss => TestFunction::XGauss,
            FunctionArg::X3Gauss => TestFunction::X3Gauss,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve {
            n_max,
            out,
            half_width,
            grid_spacing,
        } => cmd_solve(n_max, &out, half_width, grid_spacing),
        Command::Scan {
            a_min,
            a_max,
            step,
            kind,
            out,
            tol,
        } => cmd_scan(a_min, a_max, step, kind.into(), &out, tol),
        Command::Verify { suite } => cmd_verify(suite),
        Command::Transform {
            kind,
            function,
            k_max,
            out,
            tol,
        } => cmd_transform(kind.into(), function.into(), k_max, &out, tol),
        Command::Oracle {
            half_width,
            points,
            states,
        } => cmd_oracle(half_width, points, states),
    };

    match result {
        Ok(report) => {
            println!("{}", report.to_json());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

type CmdResult = Result<RunReport, Box<dyn std::error::Error>>;

/// 15 significant digits, `.` decimal separator.
fn sig15(x: f64) -> String {
    format!("{x:.14e}")
}

fn write_csv(path: &Path, header: &str, rows: &[String]) -> std::io::Result<()> {
    let mut body = String::with_capacity(rows.len() * 40 + header.len() + 1);
    body.push_str(header);
    body.push('\n');
    for row in rows {
        body.push_str(row);
        body.push('\n');
    }
    fs::write(path, body)
}

fn cmd_solve(n_max: usize, out: &Path, half_width: f64, grid_spacing: f64) -> CmdResult {
    let mut report = RunReport::new("solve")
        .parameter("n_max", n_max)
        .parameter("half_width", half_width)
        .parameter("grid_spacing", grid_spacing)
        .parameter("out", out.display());

    let half_points = (half_width / grid_spacing).round() as usize;
    let points = 2 * half_points + 1;
    let grid = unifour::grid::linspace(-half_width, half_width, points);

    let pairs: Vec<_> = (0..=n_max)
        .map(|n| oscillator::eigenpair(n, &grid))
        .collect::<Result<_, _>>()?;

    fs::create_dir_all(out)?;

    let spectrum_rows: Vec<String> = pairs
        .iter()
        .map(|p| format!("{},{}", p.n, sig15(p.epsilon)))
        .collect();
    let spectrum_path = out.join("spectrum.csv");
    write_csv(&spectrum_path, "n,epsilon", &spectrum_rows)?;
    report.output(spectrum_path.display().to_string());

    for p in &pairs {
        let rows: Vec<String> = p
            .psi
            .grid()
            .iter()
            .zip(p.psi.values())
            .map(|(&x, &v)| format!("{},{}", sig15(x), sig15(v)))
            .collect();
        let path = out.join(format!("psi_{}.csv", p.n));
        write_csv(&path, "x,psi", &rows)?;
        report.output(path.display().to_string());
    }

    for p in &pairs {
        let r = oscillator::schrodinger_residual(p)?;
        report.check(Check::gap(format!("solve/schrodinger_residual_{}", p.n), r, 1e-2));
    }
    let mut ortho = 0.0f64;
    for m in 0..pairs.len() {
        for n in m..pairs.len() {
            let ip = oscillator::inner_product(&pairs[m], &pairs[n])?;
            let expect = if m == n { 1.0 } else { 0.0 };
            ortho = ortho.max((ip - expect).abs());
        }
    }
    report.check(Check::gap("solve/orthonormality", ortho, 1e-6));

    Ok(report)
}

fn cmd_scan(
    a_min: f64,
    a_max: f64,
    step: f64,
    kind: TransformKind,
    out: &Path,
    tol: f64,
) -> CmdResult {
    let mut report = RunReport::new("scan")
        .parameter("a_min", a_min)
        .parameter("a_max", a_max)
        .parameter("step", step)
        .parameter("kind", kind)
        .parameter("tol", tol)
        .parameter("out", out.display());

    let cfg = QuadratureConfig {
        rel_tol: tol,
        ..QuadratureConfig::default()
    };
    let rows = oscillator::scan_exponents(a_min, a_max, step, kind, &cfg)?;

    fs::create_dir_all(out)?;
    let csv_rows: Vec<String> = rows
        .iter()
        .map(|r| {
            let growth = match r.growth {
                Some(true) => "true",
                Some(false) => "false",
                None => "",
            };
            let adm = &r.admissibility;
            format!(
                "{},{},{},{},{},{},{}",
                sig15(r.a),
                adm.parseval_ok,
                adm.moment_ok,
                adm.derivative_conditions_ok,
                adm.parity_ok,
                adm.accepted,
                growth
            )
        })
        .collect();
    let path = out.join("scan.csv");
    write_csv(
        &path,
        "a,parseval_ok,moment_ok,derivative_ok,parity_ok,accepted,growth_flag",
        &csv_rows,
    )?;
    report.output(path.display().to_string());

    // Accepted candidates must be integers of the kind's parity, and the
    // growth diagnostic must flag exactly the rejected ones it ran on.
    let accepted_ok = rows.iter().filter(|r| r.admissibility.accepted).all(|r| {
        let n = r.a.round();
        (r.a - n).abs() < 1e-9
            && n >= 0.0
            && match kind {
                TransformKind::Cosine => (n as i64) % 2 == 0,
                TransformKind::Sine => (n as i64) % 2 == 1,
            }
    });
    report.check(Check::flag("scan/accepted_are_quantized", accepted_ok));
    let growth_ok = rows
        .iter()
        .all(|r| r.growth.is_none_or(|g| g == !r.admissibility.accepted));
    report.check(Check::flag("scan/growth_flags_rejections", growth_ok));

    Ok(report)
}

fn cmd_verify(suite: SuiteArg) -> CmdResult {
    let label = match suite {
        SuiteArg::Transforms => "transforms",
        SuiteArg::Oscillator => "oscillator",
        SuiteArg::Oracle => "oracle",
        SuiteArg::All => "all",
    };
    let mut report = RunReport::new("verify").parameter("suite", label);
    let checks = match suite {
        SuiteArg::Transforms => checks::transforms_suite()?,
        SuiteArg::Oscillator => checks::oscillator_suite()?,
        SuiteArg::Oracle => checks::oracle_suite()?,
        SuiteArg::All => checks::all_suites()?,
    };
    report.extend_checks(checks);
    Ok(report)
}

fn cmd_transform(
    kind: TransformKind,
    function: TestFunction,
    k_max: f64,
    out: &Path,
    tol: f64,
) -> CmdResult {
    let mut report = RunReport::new("transform")
        .parameter("kind", kind)
        .parameter("function", function)
        .parameter("k_max", k_max)
        .parameter("tol", tol)
        .parameter("out", out.display());

    // Negated comparison so a NaN k-max is rejected too.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    if !(k_max > 0.0) {
        return Err(format!("k-max must be positive, got {k_max}").into());
    }
    let cfg = QuadratureConfig {
        rel_tol: tol,
        // e^{-ζ} needs a much larger truncation radius than the Gaussians.
        truncation_radius: if function == TestFunction::Exp {
            45.0
        } else {
            12.0
        },
        ..QuadratureConfig::default()
    };

    let k_points = (20.0 * k_max).round() as usize + 1;
    let k_grid = unifour::grid::linspace(0.0, k_max, k_points.max(2));
    let fwd = transforms::forward_transform(
        |z| function.eval(z),
        function.parity(),
        kind,
        &k_grid,
        &cfg,
    )?;

    let zeta_grid = unifour::grid::linspace(0.0, 8.0, 161);
    let signal = GridFunction::sample(|z| function.eval(z), zeta_grid, function.parity())?;

    fs::create_dir_all(out)?;
    let signal_rows: Vec<String> = signal
        .grid()
        .iter()
        .zip(signal.values())
        .map(|(&z, &v)| format!("{},{}", sig15(z), sig15(v)))
        .collect();
    let signal_path = out.join("signal.csv");
    write_csv(&signal_path, "zeta,f", &signal_rows)?;
    report.output(signal_path.display().to_string());

    let transform_rows: Vec<String> = fwd
        .grid()
        .iter()
        .zip(fwd.values())
        .map(|(&k, &v)| format!("{},{}", sig15(k), sig15(v)))
        .collect();
    let transform_path = out.join("transform.csv");
    write_csv(&transform_path, "k,F", &transform_rows)?;
    report.output(transform_path.display().to_string());

    if kind == TransformKind::Sine {
        report.check(Check::gap(
            "transform/sine_vanishes_at_origin",
            fwd.values()[0].abs(),
            1e-12,
        ));
    }

    Ok(report)
}

fn cmd_oracle(half_width: f64, points: usize, states: usize) -> CmdResult {
    let mut report = RunReport::new("oracle")
        .parameter("half_width", half_width)
        .parameter("points", points)
        .parameter("states", states);

    let cfg = FdConfig::new(half_width, points, states)?;
    let pairs = oracle::fd_eigensolve(&cfg)?;
    let mut eigenvalues = String::new();
    for (n, p) in pairs.iter().enumerate() {
        if n > 0 {
            eigenvalues.push(' ');
        }
        let _ = write!(eigenvalues, "{}", sig15(p.epsilon));
        report.check(Check::gap(
            format!("oracle/eigenvalue_{n}"),
            (p.epsilon - (n as f64 + 0.5)).abs(),
            1e-3,
        ));
    }
    report = report.parameter("eigenvalues", eigenvalues);
    Ok(report)
}
