//! `altorder`: prefix orders on the alternating group from the command line.
//!
//! Exit status is 0 on success, 2 when a verification fails and 1 for usage
//! and input errors.

use std::process::ExitCode;

use altorder::hurwitz::orbit_decomposition;
use altorder::mdiv::{build_mdiv, conjecture_report, ConjectureRow};
use altorder::noncrossing::{onc_interval, zeta_closed_value};
use altorder::poly::format_rational;
use altorder::tables::{table1, table1_csv, table2, table2_csv, table3, table3_csv};
use altorder::trees::phi;
use altorder::verify::{run_suite, Suite, DEFAULT_SEED};
use altorder::{GeneratorContext, GeneratorFamily, IntervalPoset, LengthMode, Permutation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "altorder", version, about = "Prefix orders on the alternating group generated by 3-cycles and k-cycles")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Seed for randomized checks
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Cap on interval and poset sizes
    #[arg(long, global = true, default_value_t = 500_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_elements: u64,
    /// Cap on the number of reduced words
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_words: u64,
    /// Allow computations above the default size limits
    #[arg(long, global = true)]
    allow_large: bool,
    /// Output format
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The interval [bottom, top] in the prefix order of a cycle family
    Interval(IntervalArgs),
    /// Multichain counts Z(q) = #{x_1 <= ... <= x_{q-1}} of an interval
    Zeta(TargetArgs),
    /// Mobius number of an interval [e, x]
    Moebius(TargetArgs),
    /// Odd noncrossing partitions: the interval below the long cycle of odd degree
    Onc {
        #[arg(long)]
        n: usize,
    },
    /// Rank generating polynomials of A_N, ONC rank numbers, or the two-even-cycle numerology
    Tables(TablesArgs),
    /// Hurwitz orbits on minimal 3-cycle factorizations
    Hurwitz(HurwitzArgs),
    /// Tree bijections for noncrossing partitions
    Bijection {
        #[command(subcommand)]
        which: BijectionCmd,
    },
    /// Multichains of ONC_{2n+1} ordered through their delta sequences
    Mdiv(MdivArgs),
    /// Run a verification suite
    Verify {
        #[arg(long, value_parser = ["covers", "onc", "zeta", "hurwitz", "trees", "all"])]
        suite: String,
    },
}

#[derive(Args, Debug)]
struct IntervalArgs {
    /// Lower end; identity when omitted
    #[arg(long)]
    bottom: Option<String>,
    #[arg(long)]
    top: String,
    /// Degree
    #[arg(long)]
    n: usize,
    /// Cycle length of the generators (2 for transpositions)
    #[arg(long, default_value_t = 3)]
    k: usize,
    /// Compute lengths by search in the Cayley graph
    #[arg(long)]
    oracle: bool,
}

#[derive(Args, Debug)]
struct TargetArgs {
    /// Use ONC_N, the interval below (1 2 ... N) for odd N
    #[arg(long, conflicts_with = "perm")]
    onc: Option<usize>,
    /// Use [e, perm] under 3-cycles
    #[arg(long, requires = "n")]
    perm: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// Argument of the zeta polynomial; prints the polynomial when omitted
    #[arg(long)]
    q: Option<i64>,
}

#[derive(Args, Debug)]
struct TablesArgs {
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
    table: u8,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_pq: Option<usize>,
}

#[derive(Args, Debug)]
struct HurwitzArgs {
    #[arg(long)]
    perm: String,
    #[arg(long)]
    n: usize,
    /// Report format
    #[arg(long, value_parser = ["json", "text"])]
    report: Option<String>,
    /// Emit the word graph colored by orbit
    #[arg(long, value_parser = ["dot"])]
    orbit_graph: Option<String>,
}

#[derive(Subcommand, Debug)]
enum BijectionCmd {
    /// Noncrossing partition to edge-rooted bicolored plane tree
    Phi {
        #[arg(long)]
        perm: String,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
struct MdivArgs {
    #[arg(long, required_unless_present = "conjectures")]
    n: Option<usize>,
    #[arg(long, required_unless_present = "conjectures")]
    m: Option<usize>,
    #[arg(long, value_parser = ["json", "text"])]
    report: Option<String>,
    /// Compare computed values with the conjectured closed forms
    #[arg(long)]
    conjectures: bool,
    #[arg(long, default_value_t = 2)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    max_m: usize,
}

enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<altorder::Error> for Failure {
    fn from(e: altorder::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch(out)) => {
            print!("{out}");
            ExitCode::from(2)
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn format_or(g: &Global, default: Format, allowed: &[Format]) -> Result<Format, Failure> {
    let f = g.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(usage(format!("format {f:?} is not available here")))
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    let threads = g.threads as usize;
    let cap = g.max_elements as usize;
    match &cli.command {
        Command::Interval(a) => interval(g, a, cap),
        Command::Zeta(t) => {
            let iv = target_interval(t, cap)?;
            match t.q {
                Some(q) if q >= 1 => Ok(format!("{}\n", iv.count_multichains(q as usize))),
                Some(q) => Ok(format!("{}\n", format_rational(&iv.zeta_polynomial()?.eval_int(q)))),
                None => Ok(format!("{}\n", iv.zeta_polynomial()?.to_csv_cell())),
            }
        }
        Command::Moebius(t) => Ok(format!("{}\n", target_interval(t, cap)?.moebius())),
        Command::Onc { n } => {
            let iv = onc_interval(*n)?;
            check_size(iv.len(), cap)?;
            render_interval(&iv, format_or(g, Format::Text, &[Format::Text, Format::Json, Format::Dot, Format::Csv])?)
        }
        Command::Tables(a) => tables(g, a, threads, cap),
        Command::Hurwitz(a) => hurwitz(g, a),
        Command::Bijection { which: BijectionCmd::Phi { perm, n } } => {
            let x = Permutation::parse(perm, *n)?;
            let tree = phi(&x)?;
            Ok(match format_or(g, Format::Text, &[Format::Text, Format::Json, Format::Dot])? {
                Format::Json => format!("{}\n", tree.to_json()),
                Format::Dot => tree.to_dot(),
                _ => format!("{}\n", tree.to_parens()),
            })
        }
        Command::Mdiv(a) => mdiv(g, a, cap),
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let checks = run_suite(suite, g.seed);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut out: String = checks.iter().map(|c| format!("{c}\n")).collect();
            out += &format!("{} passed, {failed} failed\n", checks.len() - failed);
            if failed == 0 {
                Ok(out)
            } else {
                Err(Failure::Mismatch(out))
            }
        }
    }
}

fn check_size(len: usize, cap: usize) -> Result<(), Failure> {
    if len > cap {
        Err(usage(format!("{len} elements exceed --max-elements {cap}")))
    } else {
        Ok(())
    }
}

fn target_interval(t: &TargetArgs, cap: usize) -> Result<IntervalPoset, Failure> {
    let iv = match (&t.onc, &t.perm, t.n) {
        (Some(n), None, _) => onc_interval(*n)?,
        (None, Some(p), Some(n)) => {
            let x = Permutation::parse(p, n)?;
            GeneratorContext::three_cycles(n)?.interval_capped(&Permutation::identity(n), &x, cap)?
        }
        _ => return Err(usage("give --onc N or --perm X --n N")),
    };
    check_size(iv.len(), cap)?;
    if let (Some(n), Some(q)) = (t.onc, t.q) {
        // the closed form must agree with the count
        let count = iv.count_multichains(q.max(1) as usize);
        if q >= 1 && zeta_closed_value((n - 1) / 2, q)? != num_rational::BigRational::from_integer(count.into()) {
            return Err(Failure::Mismatch(format!("count differs from the closed form at q={q}\n")));
        }
    }
    Ok(iv)
}

fn interval(g: &Global, a: &IntervalArgs, cap: usize) -> Outcome {
    let family = match a.k {
        2 => GeneratorFamily::Transpositions,
        3 => GeneratorFamily::ThreeCycles,
        k => GeneratorFamily::KCycles(k),
    };
    let mode = if a.oracle { LengthMode::BfsOracle } else { LengthMode::ClosedForm };
    let ctx = GeneratorContext::new(a.n, family, mode)?;
    let top = Permutation::parse(&a.top, a.n)?;
    let bottom = match &a.bottom {
        Some(b) => Permutation::parse(b, a.n)?,
        None => Permutation::identity(a.n),
    };
    let iv = ctx.interval_capped(&bottom, &top, cap)?;
    render_interval(&iv, format_or(g, Format::Text, &[Format::Text, Format::Json, Format::Dot, Format::Csv])?)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

fn render_interval(iv: &IntervalPoset, f: Format) -> Outcome {
    Ok(match f {
        Format::Json => format!("{}\n", iv.to_json()),
        Format::Dot => iv.to_dot(),
        Format::Csv => {
            let mut s = String::from("index,element,rank\n");
            for (i, x) in iv.elements().iter().enumerate() {
                s += &format!("{i},{x},{}\n", iv.ranks()[i]);
            }
            s
        }
        Format::Text => format!(
            "elements: {}\nrank numbers: {}\nmaximal chains: {}\nmoebius: {}\n",
            iv.len(),
            join(&iv.rank_sizes()),
            iv.count_maximal_chains(),
            iv.moebius()
        ),
    })
}

fn tables(g: &Global, a: &TablesArgs, threads: usize, cap: usize) -> Outcome {
    format_or(g, Format::Csv, &[Format::Csv])?;
    Ok(match a.table {
        1 => {
            let max_n = a.max_n.unwrap_or(7);
            if max_n > 9 && !g.allow_large {
                return Err(usage("--max-n above 9 needs --allow-large"));
            }
            table1_csv(&table1(max_n, threads)?)
        }
        2 => {
            let max_n = a.max_n.unwrap_or(5);
            table2_csv(&table2(max_n, threads)?)
        }
        _ => {
            let max_pq = a.max_pq.unwrap_or(5);
            table3_csv(&table3(max_pq, g.allow_large, cap, threads)?)
        }
    })
}

fn hurwitz(g: &Global, a: &HurwitzArgs) -> Outcome {
    let x = Permutation::parse(&a.perm, a.n)?;
    let report = orbit_decomposition(&x, g.max_words as usize)?;
    if a.orbit_graph.is_some() {
        return Ok(report.to_dot());
    }
    let json = a.report.as_deref() == Some("json") || g.format == Some(Format::Json);
    if json {
        return Ok(format!("{}\n", report.to_json()));
    }
    let mut s = format!("words: {}\norbits: {}\n", report.word_count, report.orbit_count);
    for (i, o) in report.orbits.iter().enumerate() {
        s += &format!("orbit {i}: size {}, representative {}\n", o.size, o.representative);
    }
    if report.orbit_count as u64 != report.expected_orbit_count {
        return Err(Failure::Mismatch(s + &format!("expected {} orbits\n", report.expected_orbit_count)));
    }
    Ok(s)
}

fn mdiv(g: &Global, a: &MdivArgs, cap: usize) -> Outcome {
    let cap = cap.min(100_000);
    if a.conjectures {
        let rows = conjecture_report(a.max_n, a.max_m, cap)?;
        return Ok(match format_or(g, Format::Csv, &[Format::Csv, Format::Json, Format::Text])? {
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&rows).expect("report serializes")),
            _ => {
                let mut s = format!("{}\n", ConjectureRow::CSV_HEADER);
                for r in &rows {
                    s += &format!("{}\n", r.to_csv_line());
                }
                s
            }
        });
    }
    let (n, m) = (a.n.expect("required"), a.m.expect("required"));
    let p = build_mdiv(n, m, cap)?;
    let stats = p.stats();
    let (mu_hat, mu_bar) = (p.mu_hat()?, p.mu_bar()?);
    let json = a.report.as_deref() == Some("json") || g.format == Some(Format::Json);
    if json {
        let v = json!({
            "n": n,
            "m": m,
            "elements": stats.elements,
            "minimal_elements": stats.minimal_elements,
            "max_chains": stats.max_chains.to_string(),
            "zeta": stats.zeta.iter().map(|z| z.to_string()).collect::<Vec<_>>(),
            "mu_hat": mu_hat.to_string(),
            "mu_bar": mu_bar.to_string(),
        });
        return Ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("report serializes")));
    }
    Ok(format!(
        "elements: {}\nminimal elements: {}\nmaximal chains: {}\nzeta: {}\nmu_hat: {mu_hat}\nmu_bar: {mu_bar}\n",
        stats.elements,
        stats.minimal_elements,
        stats.max_chains,
        join(&stats.zeta)
    ))
}
