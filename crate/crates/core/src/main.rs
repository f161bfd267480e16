use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use finring::atlas::{self, AtlasEntry};
use finring::graph::{self, SimpleGraph};
use finring::poly::{self, NcPoly, Verdict};
use finring::ring::{self, FiniteRing};
use finring::structure::{self, Ideal};
use finring::{limits, verify, Error};

/// Exit status: 0 success, 1 negative answer, 2 bad input, 3 resource cap.
#[derive(Debug)]
enum Failure {
    Negative,
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::Io(e))
    }
}

type CliResult = Result<(), Failure>;

#[derive(Parser)]
#[command(name = "finring", version, about = "Finite rings, zero-divisor graphs and polynomial identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build rings and print structure reports.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Zero-divisor graphs.
    #[command(subcommand)]
    Zdg(ZdgCmd),
    /// Check polynomial identities.
    #[command(subcommand)]
    Identity(IdentityCmd),
    /// Enumerate rings of small order.
    #[command(subcommand)]
    Atlas(AtlasCmd),
    /// Run a named verification scenario (or `all`).
    Verify {
        scenario: String,
        /// Prime used by `prop5`.
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum RingCmd {
    /// Build a ring and write it in ringtab format.
    ///
    /// Families: zn N | gf P [K] | n0 P [N] | np2 P | npp P | ap P | ap0 P |
    /// zpx2 P | sum FILE FILE | matrix FILE K | quotient FILE ELEM...
    Build {
        family: String,
        params: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the structure report of a ringtab file.
    Info { file: PathBuf },
}

#[derive(Subcommand)]
enum ZdgCmd {
    /// Print vertex and edge counts, optionally writing DOT.
    Graph {
        file: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Decide whether two rings have isomorphic zero-divisor graphs.
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Subcommand)]
enum IdentityCmd {
    /// Check a polynomial, or a suite file of polynomials, on a ring.
    Check {
        file: PathBuf,
        poly: String,
        #[command(flatten)]
        opts: IdentityOpts,
    },
}

#[derive(Args)]
struct IdentityOpts {
    /// Maximum number of evaluations for an exhaustive check.
    #[arg(long)]
    budget: Option<u64>,
    /// Check this many random assignments instead of all of them.
    #[arg(long)]
    sample: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum AtlasCmd {
    /// Enumerate all rings of order N.
    Build {
        n: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        workers: Option<usize>,
        /// Raise the enumeration cap to its hard maximum.
        #[arg(long)]
        allow_large: bool,
    },
    /// List rings of order at most N whose graph matches.
    Query {
        /// `K<n>` for a complete graph, `E<n>` for an edgeless one, or a DOT file.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        max_order: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = apply_env_cap() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_cap() { 3 } else { 2 })
        }
    }
}

fn apply_env_cap() -> Result<(), Error> {
    if let Ok(v) = std::env::var(limits::ENUMERATION_CAP_ENV) {
        let cap = v
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{} must be an integer", limits::ENUMERATION_CAP_ENV)))?;
        limits::set_enumeration_cap(cap)?;
    }
    Ok(())
}

fn run(cmd: Command) -> CliResult {
    match cmd {
        Command::Ring(RingCmd::Build { family, params, out }) => {
            let r = build_ring(&family, &params)?;
            let text = ring::write_ringtab(&r);
            match out {
                Some(path) => std::fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Ring(RingCmd::Info { file }) => {
            let r = ring::read_ringtab(&file)?;
            print!("{}", structure::structure_report(&r)?);
            Ok(())
        }
        Command::Zdg(ZdgCmd::Graph { file, dot }) => {
            let g = graph::zero_divisor_graph(&ring::read_ringtab(&file)?);
            println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
            if let Some(k) = graph::is_complete(&g) {
                println!("complete: K{k}");
            }
            println!("certificate: {}", graph::canonical_form(&g)?);
            if let Some(path) = dot {
                write_or_stdout(&path, &graph::export_dot(&g))?;
            }
            Ok(())
        }
        Command::Zdg(ZdgCmd::Iso { a, b }) => {
            let (ra, rb) = (ring::read_ringtab(&a)?, ring::read_ringtab(&b)?);
            let (ga, gb) = (graph::zero_divisor_graph(&ra), graph::zero_divisor_graph(&rb));
            match graph::graph_isomorphic(&ga, &gb)? {
                Some(map) => {
                    println!("isomorphic");
                    for (v, &w) in map.iter().enumerate() {
                        println!("  {} -> {}", ga.label(v), gb.label(w));
                    }
                    Ok(())
                }
                None => {
                    println!(
                        "not isomorphic ({} vertices / {} edges vs {} vertices / {} edges)",
                        ga.vertex_count(),
                        ga.edge_count(),
                        gb.vertex_count(),
                        gb.edge_count()
                    );
                    Err(Failure::Negative)
                }
            }
        }
        Command::Identity(IdentityCmd::Check { file, poly, opts }) => identity_check(&file, &poly, &opts),
        Command::Atlas(AtlasCmd::Build {
            n,
            out,
            workers,
            allow_large,
        }) => atlas_build(n, out.as_deref(), workers, allow_large),
        Command::Atlas(AtlasCmd::Query { graph, max_order }) => atlas_query(&graph, max_order),
        Command::Verify { scenario, p } => {
            let reports = if scenario == "all" {
                verify::run_all()?
            } else {
                vec![verify::run(&scenario, p)?]
            };
            let mut ok = true;
            for r in &reports {
                print!("{r}");
                ok &= r.passed;
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
    }
}

fn write_or_stdout(path: &Path, text: &str) -> CliResult {
    if path == Path::new("-") {
        print!("{text}");
    } else {
        std::fs::write(path, text)?;
    }
    Ok(())
}

fn param<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T, Error> {
    let raw = params
        .get(i)
        .ok_or_else(|| Error::InvalidParameter(format!("missing parameter {what}")))?;
    raw.parse()
        .map_err(|_| Error::InvalidParameter(format!("{what} must be a number, got `{raw}`")))
}

fn opt_param<T: std::str::FromStr>(params: &[String], i: usize, what: &str, default: T) -> Result<T, Error> {
    if params.len() > i {
        param(params, i, what)
    } else {
        Ok(default)
    }
}

fn build_ring(family: &str, params: &[String]) -> Result<FiniteRing, Error> {
    let prime = |i| param::<u64>(params, i, "p");
    let expect = |n: usize| {
        if params.len() > n {
            Err(Error::InvalidParameter(format!("`{family}` takes at most {n} parameters")))
        } else {
            Ok(())
        }
    };
    match family {
        "zn" => {
            expect(1)?;
            let n: usize = param(params, 0, "n")?;
            if n == 0 {
                return Err(Error::InvalidParameter("n must be positive".into()));
            }
            limits_check(n as u64)?;
            Ok(ring::zn(n))
        }
        "gf" => {
            expect(2)?;
            ring::gf(prime(0)?, opt_param(params, 1, "k", 1)?)
        }
        "n0" => {
            expect(2)?;
            ring::n0(prime(0)?, opt_param(params, 1, "n", 1)?)
        }
        "np2" => expect(1).and_then(|_| ring::np2(prime(0)?)),
        "npp" => expect(1).and_then(|_| ring::npp(prime(0)?)),
        "ap" => expect(1).and_then(|_| ring::ap(prime(0)?)),
        "ap0" => expect(1).and_then(|_| ring::ap0(prime(0)?)),
        "zpx2" => expect(1).and_then(|_| ring::zpx_mod_x2(prime(0)?)),
        "sum" => {
            expect(2)?;
            let (a, b) = (file_param(params, 0)?, file_param(params, 1)?);
            ring::direct_sum(&ring::read_ringtab(a)?, &ring::read_ringtab(b)?)
        }
        "matrix" => {
            expect(2)?;
            let r = ring::read_ringtab(file_param(params, 0)?)?;
            ring::matrix_ring(&r, param(params, 1, "k")?)
        }
        "quotient" => {
            let r = ring::read_ringtab(file_param(params, 0)?)?;
            let gens = (1..params.len())
                .map(|i| param::<usize>(params, i, "element"))
                .collect::<Result<Vec<_>, _>>()?;
            if let Some(&bad) = gens.iter().find(|&&x| x >= r.order()) {
                return Err(Error::InvalidParameter(format!("{bad} is not an element")));
            }
            let ideal = Ideal::generated(&r, &gens)?;
            ring::quotient(&r, &ideal)
        }
        other => Err(Error::InvalidParameter(format!(
            "unknown family `{other}` (expected zn, gf, n0, np2, npp, ap, ap0, zpx2, sum, matrix, quotient)"
        ))),
    }
}

fn limits_check(order: u64) -> Result<(), Error> {
    if order > limits::max_order() {
        return Err(Error::OrderCapExceeded {
            what: "ring order",
            order,
            cap: limits::max_order(),
        });
    }
    Ok(())
}

fn file_param(params: &[String], i: usize) -> Result<&Path, Error> {
    params
        .get(i)
        .map(Path::new)
        .ok_or_else(|| Error::InvalidParameter("missing ring file".into()))
}

fn describe(assignment: &[(u32, usize)]) -> String {
    assignment
        .iter()
        .map(|(v, x)| format!("{}={x}", poly::render(&NcPoly::var(*v))))
        .collect::<Vec<_>>()
        .join(", ")
}

fn identity_check(file: &Path, spec: &str, opts: &IdentityOpts) -> CliResult {
    let r = ring::read_ringtab(file)?;
    let suite = if Path::new(spec).is_file() {
        poly::parse_suite(&std::fs::read_to_string(spec)?)?
    } else {
        vec![poly::parse(spec)?]
    };
    if let Some(b) = opts.budget {
        limits::set_evaluation_budget(b)?;
    }
    let mut all = true;
    for p in &suite {
        let verdict = match opts.sample {
            Some(n) => poly::sample_identity(&r, p, n, opts.seed),
            None => poly::satisfies_identity(&r, p)?,
        };
        match verdict {
            Verdict::Holds => println!("PASS {}", poly::render(p)),
            Verdict::Fails(a) => {
                all = false;
                println!("FAIL {}  counterexample {}", poly::render(p), describe(&a));
            }
        }
    }
    if all {
        Ok(())
    } else {
        Err(Failure::Negative)
    }
}

fn atlas_build(n: u64, out: Option<&Path>, workers: Option<usize>, allow_large: bool) -> CliResult {
    if allow_large {
        limits::set_enumeration_cap(limits::HARD_ENUMERATION_CAP)?;
    }
    match std::env::var(limits::ENUMERATION_CAP_ENV) {
        Ok(v) if !allow_large => println!("enumeration cap: {} (from {}={v})", limits::enumeration_cap(), limits::ENUMERATION_CAP_ENV),
        _ => println!("enumeration cap: {}", limits::enumeration_cap()),
    }
    let entries = match workers {
        Some(w) => atlas::enumerate_rings_with(n, w)?,
        None => atlas::enumerate_rings(n)?.to_vec(),
    };
    println!("{} classes", entries.len());
    for e in &entries {
        print_entry(e);
    }
    if let Some(dir) = out {
        std::fs::create_dir_all(dir)?;
        let path = dir.join(format!("atlas-{n}.txt"));
        atlas::save_atlas(n, &entries, &path)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn print_entry(e: &AtlasEntry) {
    println!("  order {:>2}  {:<24} {}", e.order(), e.label(), e.certificate.to_hex());
}

fn parse_graph_spec(spec: &str) -> Result<SimpleGraph, Error> {
    let sized = |rest: &str| {
        rest.parse::<usize>()
            .map_err(|_| Error::InvalidParameter(format!("bad graph spec `{spec}`")))
    };
    if let Some(rest) = spec.strip_prefix('K').filter(|r| !r.is_empty() && !Path::new(spec).exists()) {
        return Ok(SimpleGraph::complete(sized(rest)?));
    }
    if let Some(rest) = spec.strip_prefix('E').filter(|r| !r.is_empty() && !Path::new(spec).exists()) {
        return Ok(SimpleGraph::empty(sized(rest)?));
    }
    graph::parse_dot(&std::fs::read_to_string(spec)?)
}

fn atlas_query(spec: &str, max_order: u64) -> CliResult {
    let g = parse_graph_spec(spec)?;
    let hits = atlas::rings_with_graph(max_order, &g)?;
    println!("{} classes of order at most {max_order}", hits.len());
    for e in &hits {
        print_entry(e);
    }
    Ok(())
}
