//! Command-line front-end.

use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::buchberger::{truncated_buchberger_with_stats, GroebnerBasis};
use crate::error::{Error, Result};
use crate::fan::{enumerate_fan, FanOptions};
use crate::format::{format_vectors, parse_instance, parse_matrix, parse_vectors};
use crate::ip::{optimize, solve_feasibility_report, toric_ideal_truncated, Method};
use crate::lattice::{kernel_basis, lll_reduce, saturate_truncated, LatticeBasis};
use crate::order::{weight_order, Grading, TermOrder, TruncatingPredicate, WalkContext};
use crate::par::Exec;
use crate::vector::{IntMatrix, IntVec};
use crate::walk::generic_walk_with_stats;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;
pub const EXIT_TERMINATION: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "latwalk", version, about = "Gröbner bases, walks and fans of lattice ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
struct Common {
    /// Print run statistics to stderr
    #[arg(long, global = true)]
    stats: bool,
}

#[derive(Args, Debug, Clone, Default)]
struct Truncation {
    /// Keep degrees `s` with `s ≤ B` (single-row grading)
    #[arg(long, value_name = "B", allow_hyphen_values = true)]
    truncate_b: Option<i64>,
    /// Keep degrees `s` with `h·s ≤ B`, given as "h1 … hd B"
    #[arg(long, value_name = "H B", allow_hyphen_values = true)]
    truncate_linear: Option<String>,
}

#[derive(Args, Debug, Clone, Default)]
struct Lattice {
    /// Vector-list file, or `-` for stdin
    input: String,
    /// Grading matrix file; defaults to the orthogonal complement of the lattice
    #[arg(long, value_name = "FILE")]
    grading: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum MethodArg {
    Direct,
    Walk,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Kernel lattice basis of an integer matrix
    Kernel {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// LLL-reduce a lattice basis
    Lll {
        input: String,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Gröbner basis of the lattice ideal spanned by a basis
    Saturate {
        #[command(flatten)]
        lattice: Lattice,
        #[arg(long, value_name = "C", allow_hyphen_values = true)]
        order_c: Option<String>,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Gröbner basis of the ideal generated by the given binomials
    Gbasis {
        #[command(flatten)]
        lattice: Lattice,
        #[arg(long, value_name = "C", allow_hyphen_values = true)]
        order_c: Option<String>,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        common: Common,
    },
    /// Walk a Gröbner basis from the source order to the target order
    Walk {
        #[command(flatten)]
        lattice: Lattice,
        #[arg(long, value_name = "C", allow_hyphen_values = true)]
        source_c: String,
        #[arg(long, value_name = "C", allow_hyphen_values = true)]
        target_c: String,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        common: Common,
    },
    /// Maximal cells of the (truncated) Gröbner fan of a toric ideal
    Fan {
        /// Matrix file, or `-` for stdin
        input: String,
        #[command(flatten)]
        trunc: Truncation,
        /// Also print adjacency lines "i j"
        #[arg(long)]
        graph: bool,
        /// Run the cell search on one thread
        #[arg(long)]
        sequential: bool,
        #[arg(long, default_value_t = 100_000)]
        max_cells: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Solve a knapsack feasibility problem
    Feasible {
        input: String,
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
        /// Truncate at the right-hand side
        #[arg(long)]
        truncate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Maximize the cost of an instance
    Optimize {
        input: String,
        /// Feasible starting point; found by `feasible` when absent
        #[arg(long, value_name = "X", allow_hyphen_values = true)]
        x0: Option<String>,
        #[arg(long)]
        truncate: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Reduced Gröbner basis of the toric ideal of a matrix
    Toric {
        input: String,
        #[arg(long, value_name = "C", allow_hyphen_values = true)]
        order_c: Option<String>,
        #[command(flatten)]
        trunc: Truncation,
        #[command(flatten)]
        common: Common,
    },
}

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Overflow => EXIT_OVERFLOW,
        Error::CannotCertifyTermination(_) | Error::NotPositive | Error::NonTermination(_) | Error::ResourceCap(_) => {
            EXIT_TERMINATION
        }
        _ => EXIT_MALFORMED,
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String> {
        let mut s = String::new();
        if path == "-" {
            self.stdin.read_to_string(&mut s).map_err(|e| Error::Invalid(format!("stdin: {e}")))?;
        } else {
            s = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
        }
        Ok(s)
    }

    fn print(&mut self, s: &str) -> Result<()> {
        self.out.write_all(s.as_bytes()).map_err(|e| Error::Invalid(format!("write: {e}")))
    }
}

struct Report {
    facets: usize,
    max_gb: usize,
    reductions: usize,
}

/// Runs the command line `argv` (including the program name) against the
/// process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdin = &mut std::io::stdin().lock();
    let out = &mut std::io::stdout().lock();
    let err = &mut std::io::stderr().lock();
    run_with(argv, stdin, out, err)
}

pub fn run_with<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
        }
    };
    let mut io = Io { stdin, out, err };
    let started = Instant::now();
    let stats = stats_flag(&cli.command);
    match dispatch(cli.command, &mut io) {
        Ok((code, report)) => {
            if stats {
                let _ = writeln!(
                    io.err,
                    "facets={} max_gb={} reductions={} ms={}",
                    report.facets,
                    report.max_gb,
                    report.reductions,
                    started.elapsed().as_millis()
                );
            }
            let _ = io.out.flush();
            code
        }
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn stats_flag(c: &Command) -> bool {
    match c {
        Command::Kernel { common, .. }
        | Command::Lll { common, .. }
        | Command::Saturate { common, .. }
        | Command::Gbasis { common, .. }
        | Command::Walk { common, .. }
        | Command::Fan { common, .. }
        | Command::Feasible { common, .. }
        | Command::Optimize { common, .. }
        | Command::Toric { common, .. } => common.stats,
    }
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split_whitespace()
        .map(|t| t.parse::<i64>().map_err(|_| Error::Invalid(format!("{what}: `{t}` is not an integer"))))
        .collect()
}

fn parse_weight(s: &str, n: usize, what: &str) -> Result<TermOrder> {
    let c = parse_ints(s, what)?;
    crate::error::check_len(n, c.len())?;
    Ok(weight_order(&c))
}

fn truncation(t: &Truncation) -> Result<TruncatingPredicate> {
    match (t.truncate_b, &t.truncate_linear) {
        (Some(_), Some(_)) => Err(Error::Invalid("give at most one truncation flag".into())),
        (Some(b), None) => TruncatingPredicate::rhs_bound(b),
        (None, Some(s)) => {
            let mut v = parse_ints(s, "--truncate-linear")?;
            let b = v.pop().ok_or_else(|| Error::Invalid("--truncate-linear needs weights and a bound".into()))?;
            TruncatingPredicate::linear_bound(IntVec::new(v), b, true)
        }
        (None, None) => Ok(TruncatingPredicate::All),
    }
}

/// Grading whose rows span the orthogonal complement of the lattice.
fn lattice_grading(n: usize, vectors: &[IntVec]) -> Result<Grading> {
    let kernel = if vectors.is_empty() {
        LatticeBasis::new((0..n).map(|i| IntVec::unit(n, i)).collect())?
    } else {
        kernel_basis(&IntMatrix::new(vectors.to_vec(), n)?)?
    };
    let rows = kernel.into_vectors();
    if rows.is_empty() {
        return Ok(Grading::new(IntMatrix::new(vec![IntVec::zeros(n)], n)?));
    }
    Ok(Grading::new(IntMatrix::new(rows, n)?))
}

fn grading_for(io: &mut Io, lat: &Lattice, n: usize, vectors: &[IntVec]) -> Result<Grading> {
    let mut g = match &lat.grading {
        Some(path) => {
            let m = parse_matrix(&io.read(path)?)?;
            crate::error::check_len(n, m.ncols())?;
            Grading::new(m)
        }
        None => lattice_grading(n, vectors)?,
    };
    match g.certify() {
        Ok(_) | Err(Error::NotPositive) => Ok(g),
        Err(e) => Err(e),
    }
}

/// The order used when none is given: the lattice's own positive weight,
/// so that every stage of a pipeline agrees on it.
fn default_order(n: usize, vectors: &[IntVec]) -> Result<TermOrder> {
    let mut g = lattice_grading(n, vectors)?;
    match g.certify() {
        Ok(_) => Ok(weight_order(g.positive_weight().expect("certified"))),
        Err(Error::NotPositive) => Ok(weight_order(&vec![1; n])),
        Err(e) => Err(e),
    }
}

fn order_or_default(c: &Option<String>, n: usize, vectors: &[IntVec]) -> Result<TermOrder> {
    match c {
        Some(s) => parse_weight(s, n, "--order-c"),
        None => default_order(n, vectors),
    }
}

fn print_basis(io: &mut Io, gb: &GroebnerBasis) -> Result<()> {
    let n = gb.order().nvars();
    io.print(&format_vectors(n, &gb.vectors()))
}

fn dispatch(cmd: Command, io: &mut Io) -> Result<(i32, Report)> {
    let mut report = Report { facets: 0, max_gb: 0, reductions: 0 };
    match cmd {
        Command::Kernel { input, .. } => {
            let a = parse_matrix(&io.read(&input)?)?;
            let k = kernel_basis(&a)?;
            io.print(&format_vectors(a.ncols(), k.vectors()))?;
        }
        Command::Lll { input, .. } => {
            let (n, v) = parse_vectors(&io.read(&input)?)?;
            let out = lll_reduce(&LatticeBasis::new(v)?)?;
            report.reductions = out.swaps;
            io.print(&format_vectors(n, out.basis.vectors()))?;
        }
        Command::Saturate { lattice, order_c, trunc, .. } => {
            let (n, v) = parse_vectors(&io.read(&lattice.input)?)?;
            let g = grading_for(io, &lattice, n, &v)?;
            let ord = order_or_default(&order_c, n, &v)?;
            let (gb, s) = saturate_truncated(&v, &ord, &truncation(&trunc)?, &g)?;
            report.max_gb = s.max_size;
            report.reductions = s.reductions;
            print_basis(io, &gb)?;
        }
        Command::Gbasis { lattice, order_c, trunc, .. } => {
            let (n, v) = parse_vectors(&io.read(&lattice.input)?)?;
            let g = grading_for(io, &lattice, n, &v)?;
            let ord = order_or_default(&order_c, n, &v)?;
            let (gb, s) = truncated_buchberger_with_stats(&v, &ord, &truncation(&trunc)?, &g)?;
            report.max_gb = s.max_size;
            report.reductions = s.reductions;
            print_basis(io, &gb)?;
        }
        Command::Walk { lattice, source_c, target_c, trunc, .. } => {
            let (n, v) = parse_vectors(&io.read(&lattice.input)?)?;
            let g = grading_for(io, &lattice, n, &v)?;
            let ctx = WalkContext::new(
                parse_weight(&source_c, n, "--source-c")?,
                parse_weight(&target_c, n, "--target-c")?,
            )?;
            let (gb, s) = generic_walk_with_stats(&v, &ctx, &truncation(&trunc)?, &g)?;
            report.facets = s.facets_crossed;
            report.max_gb = s.max_intermediate_size;
            report.reductions = s.reductions;
            print_basis(io, &gb)?;
        }
        Command::Fan { input, trunc, graph, sequential, max_cells, .. } => {
            let a = parse_matrix(&io.read(&input)?)?;
            let g = Grading::certified(a.clone())?;
            let k = kernel_basis(&a)?;
            let gens = lll_reduce(&k)?.basis.into_vectors();
            let opts = FanOptions { exec: if sequential { Exec::Sequential } else { Exec::Parallel }, max_cells };
            let fan = enumerate_fan(&gens, &truncation(&trunc)?, &g, &opts)?;
            report.max_gb = fan.cells().iter().map(|c| c.normals().len()).max().unwrap_or(0);
            let mut s = format!("cells = {}\n", fan.len());
            for (i, c) in fan.cells().iter().enumerate() {
                s.push_str(&format!("cell {i}\n"));
                s.push_str(&format_vectors(a.ncols(), c.normals()));
            }
            if graph {
                for (i, j) in fan.edges() {
                    s.push_str(&format!("{i} {j}\n"));
                }
            }
            io.print(&s)?;
        }
        Command::Feasible { input, method, truncate, .. } => {
            let inst = parse_instance(&io.read(&input)?)?;
            let m = match method {
                MethodArg::Direct => Method::Direct,
                MethodArg::Walk => Method::Walk,
            };
            let r = solve_feasibility_report(&inst.a, inst.b, m, truncate)?;
            if let Some(w) = r.walk {
                report.facets = w.facets_crossed;
                report.max_gb = w.max_intermediate_size;
                report.reductions = w.reductions;
            }
            if let Some(b) = r.buchberger {
                report.max_gb = b.max_size;
                report.reductions = b.reductions;
            }
            match r.solution {
                Some(x) => io.print(&format!("x = {x}\n"))?,
                None => {
                    io.print("infeasible\n")?;
                    return Ok((EXIT_INFEASIBLE, report));
                }
            }
        }
        Command::Optimize { input, x0, truncate, .. } => {
            let inst = parse_instance(&io.read(&input)?)?;
            let c = inst.c.clone().ok_or_else(|| Error::Invalid("instance has no cost line".into()))?;
            let x0 = match x0 {
                Some(s) => IntVec::new(parse_ints(&s, "--x0")?),
                None => match solve_feasibility_report(&inst.a, inst.b, Method::Direct, truncate)?.solution {
                    Some(x) => x,
                    None => {
                        io.print("infeasible\n")?;
                        return Ok((EXIT_INFEASIBLE, report));
                    }
                },
            };
            let x = optimize(&inst.matrix(), &[inst.b], &c, &x0, truncate)?;
            let value = x.dot(&c)?;
            io.print(&format!("x = {x}\nvalue = {value}\n"))?;
        }
        Command::Toric { input, order_c, trunc, .. } => {
            let a = parse_matrix(&io.read(&input)?)?;
            let n = a.ncols();
            let ord = match &order_c {
                Some(s) => parse_weight(s, n, "--order-c")?,
                None => default_order(n, kernel_basis(&a)?.vectors())?,
            };
            let (gb, s) = toric_ideal_truncated(&a, &ord, &truncation(&trunc)?)?;
            report.max_gb = s.max_size;
            report.reductions = s.reductions;
            print_basis(io, &gb)?;
        }
    }
    Ok((EXIT_OK, report))
}
