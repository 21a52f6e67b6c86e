//! Command-line front end: semigroup invariants, expanded polynomials,
//! remainder diagrams, gap power sums, Bernoulli numbers, batch identity
//! verification, and the semiprime theta census.
//!
//! Exit codes: `0` success, `1` usage error, `2` invalid mathematical
//! input (e.g. non-coprime generators), `3` a verification found a
//! mismatch.

mod census;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use semicyclo::arith::bernoulli_upto;
use semicyclo::identities::{bernoulli_via_semigroup, sylvester_sum};
use semicyclo::report::{self, IdentityRecord, Status};
use semicyclo::{
    BinaryPair, CoprimeBase, Diagram, DiagramFormat, Error, IntPoly, NumericalSemigroup,
    RenderOptions,
};
use serde::Serialize;

#[derive(Parser)]
#[command(
    name = "semicyclo",
    version,
    about = "Numerical semigroups, inclusion-exclusion polynomials, and the identities between them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants of the numerical semigroup generated by the arguments.
    Semigroup(SemigroupArgs),
    /// Expanded polynomials: semigroup, subset quotient, or cyclotomic.
    Poly(PolyArgs),
    /// The q-column by p-row remainder diagram of a coprime pair.
    Diagram(DiagramArgs),
    /// Gap power sums of a coprime pair, by closed form and by enumeration.
    Sylvester(SylvesterArgs),
    /// Bernoulli numbers, optionally re-derived through a coprime pair.
    Bernoulli(BernoulliArgs),
    /// Check every identity class over a family of coprime pairs.
    Verify(VerifyArgs),
    /// Census of the theta invariant over semiprimes.
    Scan(ScanArgs),
}

#[derive(Args)]
struct SemigroupArgs {
    /// Generators (gcd must be 1).
    #[arg(required = true)]
    generators: Vec<u64>,
    /// Emit one JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PolyArgs {
    #[command(subcommand)]
    which: PolyCommand,
}

#[derive(Subcommand)]
enum PolyCommand {
    /// Semigroup polynomial of the semigroup generated by the arguments.
    Ps {
        /// Generators (gcd must be 1).
        #[arg(required = true)]
        generators: Vec<u64>,
        /// Emit one JSON document instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Inclusion-exclusion polynomial of a pairwise-coprime base.
    Q {
        /// Pairwise-coprime elements, each at least 2.
        #[arg(required = true)]
        elements: Vec<u64>,
        /// Emit one JSON document instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Cyclotomic polynomial of the given index.
    Phi {
        /// The index n.
        n: u64,
        /// Emit one JSON document instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct DiagramArgs {
    /// Row-count generator (rows are the p residues of the coefficient).
    p: u64,
    /// Column-count generator, coprime to p.
    q: u64,
    /// Highlight gap cells.
    #[arg(long)]
    mark_gaps: bool,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Markdown,
    Json,
}

#[derive(Args)]
struct SylvesterArgs {
    /// First generator.
    p: u64,
    /// Second generator, coprime to p.
    q: u64,
    /// Largest power to sum the gaps to.
    #[arg(long, default_value_t = 4)]
    kmax: u32,
    /// Emit JSON lines instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct BernoulliArgs {
    /// Compute B_0 through B_m.
    m: u32,
    /// Also recover each B_t (t >= 1) through this coprime pair and compare.
    #[arg(long, num_args = 2, value_names = ["P", "Q"])]
    pair: Option<Vec<u64>>,
    /// Emit JSON lines instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check all coprime pairs 2 <= p < q <= pmax.
    #[arg(long, default_value_t = 20)]
    pmax: u64,
    /// Largest gap power sum exponent per pair.
    #[arg(long, default_value_t = 4)]
    kmax: u32,
    /// Worker threads (0 = library default).
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct ScanArgs {
    /// Largest semiprime to include (at least 6).
    #[arg(long)]
    max: u64,
    /// Exponent offset in the bound theta <= m^(1/2 + gamma), as "a/b".
    #[arg(long, default_value = "1/20", value_parser = census::parse_gamma)]
    gamma: census::Gamma,
    /// Worker threads (0 = library default).
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Emit JSON lines instead of text.
    #[arg(long)]
    json: bool,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let requested = matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = err.print();
            return if requested { 0 } else { 1 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Semigroup(args) => cmd_semigroup(args),
        Command::Poly(args) => cmd_poly(args),
        Command::Diagram(args) => cmd_diagram(args),
        Command::Sylvester(args) => cmd_sylvester(args),
        Command::Bernoulli(args) => cmd_bernoulli(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
    }
}

/// Run `f` on the ambient rayon pool, or on a dedicated pool of `workers`
/// threads when that is non-zero.
fn with_workers<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> T {
    if workers == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(f)
    }
}

fn join_u64(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_semigroup(args: SemigroupArgs) -> Result<i32, Error> {
    let s = NumericalSemigroup::new(&args.generators)?;
    let summary = s.summary();
    if args.json {
        println!("{}", serde_json::to_string(&summary).expect("summary serializes"));
    } else {
        let poly = s.semigroup_polynomial();
        let apery_label = format!("apery set (mod {}):", summary.multiplicity);
        println!("{:<20} {}", "generators:", join_u64(&summary.generators));
        println!("{:<20} {}", "minimal generators:", join_u64(&summary.minimal_generators));
        println!("{:<20} {}", "multiplicity:", summary.multiplicity);
        println!("{:<20} {}", "embedding dimension:", summary.embedding_dimension);
        println!("{:<20} {}", "frobenius:", summary.frobenius);
        println!("{:<20} {}", "genus:", summary.genus);
        println!("{:<20} {}", "gaps:", join_u64(&summary.gaps));
        println!("{apery_label:<20} {}", join_u64(&summary.apery));
        println!("{:<20} {}", "symmetric:", s.is_symmetric());
        println!("{:<20} {poly}", "polynomial:");
        println!(
            "{:<20} {}",
            "polynomial max gap:",
            poly.max_gap().expect("semigroup polynomial is non-zero")
        );
    }
    Ok(0)
}

#[derive(Serialize)]
struct PolyOut<'a> {
    kind: &'a str,
    input: &'a [u64],
    degree: usize,
    num_nonzero: usize,
    max_gap: usize,
    selfreciprocal: bool,
    coefficients: Vec<String>,
}

fn print_poly(kind: &str, input: &[u64], poly: &IntPoly, json: bool) {
    if json {
        let out = PolyOut {
            kind,
            input,
            degree: poly.degree().expect("family polynomials are non-zero"),
            num_nonzero: poly.num_nonzero_terms(),
            max_gap: poly.max_gap().expect("family polynomials are non-zero"),
            selfreciprocal: poly
                .is_selfreciprocal()
                .expect("family polynomials are non-zero"),
            coefficients: poly.coeffs().iter().map(|c| c.to_string()).collect(),
        };
        println!("{}", serde_json::to_string(&out).expect("polynomial serializes"));
    } else {
        println!("{poly}");
        println!(
            "degree {}, {} nonzero terms, max gap {}, selfreciprocal {}",
            poly.degree().expect("family polynomials are non-zero"),
            poly.num_nonzero_terms(),
            poly.max_gap().expect("family polynomials are non-zero"),
            poly.is_selfreciprocal().expect("family polynomials are non-zero"),
        );
    }
}

fn cmd_poly(args: PolyArgs) -> Result<i32, Error> {
    match args.which {
        PolyCommand::Ps { generators, json } => {
            let s = NumericalSemigroup::new(&generators)?;
            print_poly("semigroup", &generators, &s.semigroup_polynomial(), json);
        }
        PolyCommand::Q { elements, json } => {
            let base = CoprimeBase::new(&elements)?;
            print_poly("subset_quotient", &elements, &base.inclusion_exclusion()?, json);
        }
        PolyCommand::Phi { n, json } => {
            let phi = semicyclo::cyclo::cyclotomic(n)?;
            print_poly("cyclotomic", &[n], &phi, json);
        }
    }
    Ok(0)
}

fn cmd_diagram(args: DiagramArgs) -> Result<i32, Error> {
    let diagram = Diagram::new(args.p, args.q)?;
    let opts = RenderOptions {
        mark_gaps: args.mark_gaps,
        format: match args.format {
            FormatArg::Text => DiagramFormat::Text,
            FormatArg::Markdown => DiagramFormat::Markdown,
            FormatArg::Json => DiagramFormat::Json,
        },
    };
    println!("{}", diagram.render(&opts));
    Ok(0)
}

#[derive(Serialize)]
struct SylvesterRow {
    k: u32,
    brute: String,
    formula: String,
    ok: bool,
}

fn cmd_sylvester(args: SylvesterArgs) -> Result<i32, Error> {
    let pair = BinaryPair::new(args.p, args.q)?;
    let mut all_ok = true;
    for k in 0..=args.kmax {
        let sums = sylvester_sum(&pair, k);
        let ok = sums.ok();
        all_ok &= ok;
        if args.json {
            let row = SylvesterRow {
                k,
                brute: sums.brute.to_string(),
                formula: sums.formula.to_string(),
                ok,
            };
            println!("{}", serde_json::to_string(&row).expect("row serializes"));
        } else {
            println!(
                "sigma_{k} = {} (closed form {}, {})",
                sums.brute,
                sums.formula,
                if ok { "agree" } else { "MISMATCH" }
            );
        }
    }
    Ok(if all_ok { 0 } else { 3 })
}

#[derive(Serialize)]
struct BernoulliRow {
    m: u32,
    value: String,
    via_pair: Option<String>,
    ok: bool,
}

fn cmd_bernoulli(args: BernoulliArgs) -> Result<i32, Error> {
    let pair = match &args.pair {
        Some(pq) => Some(BinaryPair::new(pq[0], pq[1])?),
        None => None,
    };
    let values = bernoulli_upto(args.m as usize);
    let mut all_ok = true;
    for (t, value) in values.iter().enumerate() {
        let via_pair = pair
            .as_ref()
            .filter(|_| t >= 1)
            .map(|pr| bernoulli_via_semigroup(t as u32, pr));
        let ok = via_pair.as_ref().is_none_or(|v| v == value);
        all_ok &= ok;
        if args.json {
            let row = BernoulliRow {
                m: t as u32,
                value: value.to_string(),
                via_pair: via_pair.map(|v| v.to_string()),
                ok,
            };
            println!("{}", serde_json::to_string(&row).expect("row serializes"));
        } else {
            match via_pair {
                Some(v) => println!(
                    "B_{t} = {value} (via pair {v}, {})",
                    if ok { "agree" } else { "MISMATCH" }
                ),
                None => println!("B_{t} = {value}"),
            }
        }
    }
    Ok(if all_ok { 0 } else { 3 })
}

fn cmd_verify(args: VerifyArgs) -> Result<i32, Error> {
    let kmax = args.kmax;
    let pairs = report::coprime_pairs(args.pmax);
    let nested: Vec<Vec<IdentityRecord>> = with_workers(args.workers, || {
        pairs
            .into_par_iter()
            .map(|(p, q)| report::verify_pair(p, q, kmax))
            .collect::<Result<_, _>>()
    })?;

    let (mut pass, mut warn, mut fail) = (0u64, 0u64, 0u64);
    let mut first_fail: Option<&IdentityRecord> = None;
    for record in nested.iter().flatten() {
        println!("{}", serde_json::to_string(record).expect("record serializes"));
        match record.status {
            Status::Pass => pass += 1,
            Status::Warn => warn += 1,
            Status::Fail => {
                fail += 1;
                first_fail.get_or_insert(record);
            }
        }
    }
    eprintln!(
        "checked {} records over pairs up to {}: {pass} pass, {warn} warn, {fail} fail",
        pass + warn + fail,
        args.pmax
    );
    if let Some(record) = first_fail {
        eprintln!(
            "first failure: {} on ({}, {}): {} vs {}",
            record.identity, record.p, record.q, record.lhs, record.rhs
        );
        return Ok(3);
    }
    Ok(0)
}

fn cmd_scan(args: ScanArgs) -> Result<i32, Error> {
    if args.max < 6 {
        eprintln!("error: --max must be at least 6, the smallest semiprime");
        return Ok(1);
    }
    if args.max > 100_000_000 {
        eprintln!("error: --max above 100000000 would sieve unreasonably much memory");
        return Ok(1);
    }
    let records = with_workers(args.workers, || census::census(args.max, args.gamma));
    let mut within = 0u64;
    for record in &records {
        if record.within_bound {
            within += 1;
        }
        if args.json {
            println!("{}", serde_json::to_string(record).expect("record serializes"));
        } else {
            println!(
                "m={} p={} q={} theta={} within={}",
                record.m, record.p, record.q, record.theta, record.within_bound
            );
        }
    }
    eprintln!(
        "{} semiprimes up to {}, {within} within the m^(1/2 + {}) bound",
        records.len(),
        args.max,
        args.gamma
    );
    Ok(0)
}
