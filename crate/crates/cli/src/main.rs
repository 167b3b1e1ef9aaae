//! Command-line front end for multilevel Toeplitz matrices: generation,
//! symmetrizing conjugation, structure checks, recovery, and a benchmark of
//! the dense route against the structured per-level application.
//!
//! Exit codes are a contract: 0 success, 1 internal postcondition violation,
//! 2 usage or input error, 3 I/O failure, 4 structure-condition failure.

mod format;

use clap::{Parser, Subcommand, ValueEnum};
use format::{read_file, write_file, MatrixFile, ReadError};
use mltoeplitz::{
    build_transition, desymmetrize, has_constant_antidiagonals_all_levels,
    is_multilevel_toeplitz, symmetrize, symmetrize_intermediate, ComplexMatrix, Error, LevelDims,
    MultilevelToeplitz, Side, TransitionKind, DEFAULT_TOL,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

#[derive(Parser)]
#[command(
    name = "mlt",
    version,
    about = "Multilevel Toeplitz matrices: generate, symmetrize, check, recover, benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random multilevel Toeplitz matrix in compact form.
    Gen {
        /// Level dimensions, innermost first, e.g. 3,2.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        /// RNG seed; the output is a pure function of dims and seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path (JSON).
        out: PathBuf,
    },
    /// Conjugate a compact Toeplitz input by a symmetrizing transition.
    Symmetrize {
        /// Transition family: u (parity pairing) or v (exchange based).
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Stop after conjugating by the innermost LEVELS factors only.
        #[arg(long, value_name = "LEVELS")]
        intermediate: Option<usize>,
        /// Tolerance for the symmetry report (scaled by max(1, max |entry|)).
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Input path (a "mltoeplitz" kind file).
        input: PathBuf,
        /// Output path (dense JSON).
        out: PathBuf,
    },
    /// Recover the compact Toeplitz form from a qualifying symmetric matrix.
    Desymmetrize {
        /// Tolerance for the structure conditions (scaled by max entry).
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Input path (dense, side a power of two).
        input: PathBuf,
        /// Output path (mltoeplitz JSON).
        out: PathBuf,
    },
    /// Report structure defects of a dense matrix.
    Check {
        /// Also check multilevel Toeplitz structure for these dims.
        #[arg(long, value_delimiter = ',')]
        dims: Option<Vec<usize>>,
        /// Tolerance for every reported check (scaled by max entry).
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        /// Input path (dense).
        input: PathBuf,
    },
    /// Time dense conjugation against the structured per-level application.
    Bench {
        /// Level dimensions, innermost first.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        /// Repetitions per route (at least 1).
        #[arg(long, default_value_t = 1)]
        reps: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    /// Parity pairing family.
    U,
    /// Exchange-based family.
    V,
}

impl From<KindArg> for TransitionKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::U => TransitionKind::ParityU,
            KindArg::V => TransitionKind::ExchangeV,
        }
    }
}

enum Failure {
    /// Exit 1: a result violated its own postcondition.
    Postcondition(String),
    /// Exit 2: bad arguments or malformed/unsuitable input.
    Usage(String),
    /// Exit 3: filesystem trouble.
    Io(String),
    /// Exit 4: the input fails the structure conditions of the operation.
    Structure(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Postcondition(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 3,
            Failure::Structure(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Postcondition(m)
            | Failure::Usage(m)
            | Failure::Io(m)
            | Failure::Structure(m) => m,
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Gen { dims, seed, out } => cmd_gen(dims, seed, &out),
        Command::Symmetrize {
            kind,
            intermediate,
            tol,
            input,
            out,
        } => cmd_symmetrize(kind, intermediate, tol, &input, &out),
        Command::Desymmetrize { tol, input, out } => cmd_desymmetrize(tol, &input, &out),
        Command::Check { dims, tol, input } => cmd_check(dims, tol, &input),
        Command::Bench { dims, reps } => cmd_bench(dims, reps),
    }
}

fn parse_dims(dims: Vec<usize>) -> Result<LevelDims, Failure> {
    LevelDims::new(dims).map_err(|e| Failure::Usage(e.to_string()))
}

fn load(path: &Path) -> Result<MatrixFile, Failure> {
    read_file(path).map_err(|e| match e {
        ReadError::Io(err) => Failure::Io(format!("{}: {err}", path.display())),
        ReadError::Malformed(msg) => Failure::Usage(format!("{}: {msg}", path.display())),
    })
}

fn save(path: &Path, file: &MatrixFile) -> Result<(), Failure> {
    write_file(path, file).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn cmd_gen(dims: Vec<usize>, seed: u64, out: &Path) -> Result<(), Failure> {
    let shape = parse_dims(dims)?;
    let t = MultilevelToeplitz::random(shape, seed);
    save(out, &MatrixFile::from_toeplitz(&t))?;
    println!(
        "wrote {} ({} coefficients, side {})",
        out.display(),
        t.coeffs().len(),
        t.shape().side()
    );
    Ok(())
}

fn cmd_symmetrize(
    kind: KindArg,
    intermediate: Option<usize>,
    tol: f64,
    input: &Path,
    out: &Path,
) -> Result<(), Failure> {
    let t = load(input)?.into_toeplitz().map_err(Failure::Usage)?;
    let levels = t.shape().levels();
    let result = match intermediate {
        Some(k) => symmetrize_intermediate(&t, kind.into(), k)
            .map_err(|e| Failure::Usage(e.to_string()))?,
        None => symmetrize(&t, kind.into()),
    };
    let verdict = result
        .is_symmetric(tol)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    println!(
        "symmetry defect: {:.3e} (tol {tol:.3e}, scaled by max(1, max |entry|))",
        verdict.defect
    );
    save(out, &MatrixFile::from_dense(&result))?;
    // A partial conjugation is symmetric blockwise, not necessarily as a
    // whole, so the postcondition only binds for the full transform.
    let expect_symmetric = intermediate.is_none_or(|k| k == levels);
    if expect_symmetric && !verdict.ok {
        return Err(Failure::Postcondition(format!(
            "symmetrized output has symmetry defect {:.3e}",
            verdict.defect
        )));
    }
    Ok(())
}

fn cmd_desymmetrize(tol: f64, input: &Path, out: &Path) -> Result<(), Failure> {
    let s = load(input)?.into_dense().map_err(Failure::Usage)?;
    let t = desymmetrize(&s, tol).map_err(|e| match e {
        Error::NotSymmetric { defect } => Failure::Structure(format!(
            "input is not complex symmetric (defect {defect:.3e})"
        )),
        Error::NotConstantAntidiagonal { level, defect } => Failure::Structure(format!(
            "anti-diagonal constancy fails at level {level} (defect {defect:.3e})"
        )),
        Error::NotToeplitz { offset, defect } => Failure::Structure(format!(
            "an off-diagonal block of the input is asymmetric: the conjugated result \
             deviates from Toeplitz structure at offset {offset:?} (defect {defect:.3e})"
        )),
        other => Failure::Usage(other.to_string()),
    })?;
    save(out, &MatrixFile::from_toeplitz(&t))?;
    println!(
        "recovered {} level(s) (dims {:?})",
        t.shape().levels(),
        t.shape().dims()
    );
    Ok(())
}

fn cmd_check(dims: Option<Vec<usize>>, tol: f64, input: &Path) -> Result<(), Failure> {
    let m = load(input)?.into_dense().map_err(Failure::Usage)?;
    println!("tolerance: {tol:.3e} (scaled by max(1, max |entry|))");
    let mut all_pass = true;
    let mut report = |name: &str, defect: f64, ok: bool| {
        println!("{name} defect: {defect:.3e} ({})", if ok { "pass" } else { "fail" });
        all_pass &= ok;
    };

    let symmetry = m
        .is_symmetric(tol)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    report("symmetry", symmetry.defect, symmetry.ok);

    if let Some(d) = dims {
        let shape = parse_dims(d)?;
        let verdict =
            is_multilevel_toeplitz(&m, &shape, tol).map_err(|e| Failure::Usage(e.to_string()))?;
        report(
            &format!("toeplitz dims {:?}", shape.dims()),
            verdict.defect,
            verdict.ok,
        );
    }

    if m.is_square() && m.rows() >= 2 && m.rows().is_power_of_two() {
        let anti = has_constant_antidiagonals_all_levels(&m, tol)
            .map_err(|e| Failure::Usage(e.to_string()))?;
        for (index, &defect) in anti.per_level_defect.iter().enumerate() {
            report(
                &format!("anti-diagonal level {}", index + 1),
                defect,
                defect <= anti.threshold,
            );
        }
    }

    if all_pass {
        Ok(())
    } else {
        Err(Failure::Structure("one or more checks failed".into()))
    }
}

fn cmd_bench(dims: Vec<usize>, reps: u32) -> Result<(), Failure> {
    if reps == 0 {
        return Err(Failure::Usage("at least one repetition is required".into()));
    }
    let shape = parse_dims(dims)?;
    let t = MultilevelToeplitz::random(shape.clone(), 42);
    let dense = t.to_dense();
    let plan = build_transition(shape.clone(), TransitionKind::ParityU);

    let mut structured: Option<ComplexMatrix> = None;
    let mut structured_time = Duration::ZERO;
    for _ in 0..reps {
        let start = Instant::now();
        let half = plan
            .apply(&dense, Side::Left, true)
            .expect("expansion side matches the plan shape");
        let s = plan
            .apply(&half, Side::Right, false)
            .expect("expansion side matches the plan shape");
        structured_time += start.elapsed();
        structured = Some(s);
    }

    let mut via_dense: Option<ComplexMatrix> = None;
    let mut dense_time = Duration::ZERO;
    for _ in 0..reps {
        let start = Instant::now();
        let full = plan.dense();
        let s = full
            .adjoint()
            .matmul(&dense)
            .expect("square factors conform")
            .matmul(&full)
            .expect("square factors conform");
        dense_time += start.elapsed();
        via_dense = Some(s);
    }

    let deviation = structured
        .expect("reps >= 1")
        .max_abs_diff(&via_dense.expect("reps >= 1"));
    println!(
        "dims {:?} (side {}), {reps} rep(s) per route",
        shape.dims(),
        shape.side()
    );
    println!("dense conjugation: {dense_time:?}");
    println!("structured apply:  {structured_time:?}");
    println!("max deviation: {deviation:.3e}");
    if deviation <= 1e-10 {
        Ok(())
    } else {
        Err(Failure::Postcondition(format!(
            "the two routes deviate by {deviation:.3e}"
        )))
    }
}
