//! `meshperm`: distributions, scans, transforms and verification from the shell.
//!
//! Data goes to stdout, progress to stderr. Exit codes: 0 ok, 1 verification
//! failure (or divergence under `--expect-equal`), 2 usage or parse error,
//! 3 enumeration cap exceeded.

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use meshperm::bijections::PatternPair;
use meshperm::catalog::{builtin, load_catalog, validate_catalog, Catalog};
use meshperm::distribution::{distribution_in, joint_distribution};
use meshperm::exec::with_threads;
use meshperm::scan::{scan_symmetric_in, ScanStrategy};
use meshperm::{sequences, Error, Execution, MeshPattern, Permutation, Shading, Sn, HARD_CAP};

/// Cap on `n` when neither `MESHPERM_MAX_N` nor `--long-running` is given.
const DEFAULT_CAP: usize = 8;

#[derive(Parser)]
#[command(
    name = "meshperm",
    version,
    about = "Mesh pattern distributions for 123 and 132"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Output format for tabular commands.
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    format: Format,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Raise the default cap to the library's hard limit.
    #[arg(long, global = true)]
    long_running: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeqName {
    Catalan,
    Bell,
    Stirling,
}

#[derive(Args)]
struct PairSel {
    /// Catalog id.
    #[arg(long, conflicts_with = "shading", required_unless_present = "shading")]
    pair_id: Option<u32>,
    /// Shading shared by 123 and 132, e.g. "0/0,0/2,2/0".
    #[arg(long)]
    shading: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Occurrence-count distribution of one pattern over S_n.
    Dist {
        #[arg(short, long)]
        pattern: String,
        #[arg(short)]
        n: usize,
    },
    /// Joint distribution of two patterns over S_n.
    Joint {
        #[arg(long)]
        p1: String,
        #[arg(long)]
        p2: String,
        #[arg(short)]
        n: usize,
        /// Exit 1 unless the table is symmetric.
        #[arg(long)]
        expect_equal: bool,
    },
    /// Number of avoiders for n = 0..=max-n.
    Avoid {
        #[arg(short, long)]
        pattern: String,
        #[arg(long)]
        max_n: usize,
    },
    /// First length at which the two patterns of a pair differ in distribution.
    CheckPair {
        #[command(flatten)]
        sel: PairSel,
        #[arg(long)]
        max_n: usize,
        /// Exit 1 if a divergence is found.
        #[arg(long)]
        expect_equal: bool,
    },
    /// Equidistribution verdict for every symmetric shading.
    Scan {
        #[arg(long)]
        max_n: usize,
    },
    /// Image of a permutation under a catalogued bijection.
    Apply {
        #[command(flatten)]
        sel: PairSel,
        #[arg(long)]
        perm: String,
    },
    /// Exhaustive bijection check on S_n, printed as JSON.
    Verify {
        #[arg(long)]
        pair_id: u32,
        #[arg(short)]
        n: usize,
    },
    /// Structural checks on the catalog, printed as JSON.
    CatalogValidate {
        /// JSONL file to check instead of the bundled catalog.
        #[arg(long)]
        path: Option<String>,
    },
    /// Reference sequences.
    Sequences {
        #[arg(long, value_enum)]
        name: SeqName,
        #[arg(long)]
        max_n: usize,
    },
}

enum Failure {
    Usage(String),
    Cap(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<(), Failure>;

fn cap(opts: &Opts) -> Result<usize, Failure> {
    match std::env::var("MESHPERM_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("MESHPERM_MAX_N={v:?} is not a number"))),
        Err(_) if opts.long_running => Ok(HARD_CAP),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn checked(n: usize, opts: &Opts) -> Result<Sn, Failure> {
    Ok(Sn::with_cap(n, cap(opts)?)?)
}

fn pattern(s: &str) -> Result<MeshPattern, Failure> {
    Ok(s.parse()?)
}

fn pair_of(sel: &PairSel, cat: &Catalog) -> Result<(String, PatternPair), Failure> {
    match (&sel.pair_id, &sel.shading) {
        (Some(id), _) => Ok((format!("pair {id}"), cat.get(*id)?.pair()?)),
        (None, Some(s)) => {
            let r = Shading::parse(3, s)?;
            Ok((r.compact(), PatternPair::same_shading(r)?))
        }
        (None, None) => Err(Failure::Usage("need --pair-id or --shading".into())),
    }
}

fn json<T: Serialize>(out: &mut impl Write, v: &T) -> Out {
    let s = serde_json::to_string_pretty(v).map_err(|e| Failure::Usage(e.to_string()))?;
    writeln!(out, "{s}")?;
    Ok(())
}

fn csv_field(s: &str) -> String {
    if s.contains(',') {
        format!("\"{s}\"")
    } else {
        s.to_string()
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Out {
    let opts = &cli.opts;
    let exec = Execution::Parallel;
    match cli.cmd {
        Cmd::Dist { pattern: p, n } => {
            let p = pattern(&p)?;
            let d = distribution_in(&p, checked(n, opts)?, exec)?;
            match opts.format {
                Format::Json => json(out, &d.rows())?,
                Format::Csv => {
                    writeln!(out, "n,k,count")?;
                    for r in d.rows() {
                        writeln!(out, "{},{},{}", r.n, r.k, r.count)?;
                    }
                }
            }
        }
        Cmd::Joint {
            p1,
            p2,
            n,
            expect_equal,
        } => {
            let (p1, p2) = (pattern(&p1)?, pattern(&p2)?);
            checked(n, opts)?;
            let j = joint_distribution(&p1, &p2, n, exec)?;
            match opts.format {
                Format::Json => json(
                    out,
                    &serde_json::json!({ "symmetric": j.is_symmetric(), "rows": j.rows() }),
                )?,
                Format::Csv => {
                    writeln!(out, "n,k,l,count")?;
                    for r in j.rows() {
                        writeln!(out, "{},{},{},{}", r.n, r.k, r.l, r.count)?;
                    }
                }
            }
            if expect_equal && !j.is_symmetric() {
                return Err(Failure::Check(format!(
                    "joint table at n={n} is not symmetric"
                )));
            }
        }
        Cmd::Avoid { pattern: p, max_n } => {
            let p = pattern(&p)?;
            checked(max_n, opts)?;
            let seq = (0..=max_n)
                .map(|n| Ok(distribution_in(&p, Sn::unbounded(n), exec)?.get(0)))
                .collect::<Result<Vec<u64>, Error>>()?;
            match opts.format {
                Format::Json => json(out, &seq)?,
                Format::Csv => {
                    writeln!(out, "n,avoiders")?;
                    for (n, a) in seq.iter().enumerate() {
                        writeln!(out, "{n},{a}")?;
                    }
                }
            }
        }
        Cmd::CheckPair {
            sel,
            max_n,
            expect_equal,
        } => {
            let (label, pair) = pair_of(&sel, &builtin())?;
            checked(max_n, opts)?;
            let mut first = None;
            for n in 0..=max_n {
                let sn = Sn::unbounded(n);
                if distribution_in(&pair.first, sn, exec)?
                    != distribution_in(&pair.second, sn, exec)?
                {
                    first = Some(n);
                    break;
                }
            }
            let verdict = if first.is_none() {
                "equidistributed"
            } else {
                "diverges"
            };
            match opts.format {
                Format::Json => json(
                    out,
                    &serde_json::json!({
                        "pair": label,
                        "max_n": max_n,
                        "verdict": verdict,
                        "first_divergence_n": first,
                    }),
                )?,
                Format::Csv => {
                    writeln!(out, "pair,max_n,verdict,first_divergence_n")?;
                    let d = first.map(|n| n.to_string()).unwrap_or_default();
                    writeln!(out, "{},{max_n},{verdict},{d}", csv_field(&label))?;
                }
            }
            if let (true, Some(n)) = (expect_equal, first) {
                return Err(Failure::Check(format!("{label} diverges at n={n}")));
            }
        }
        Cmd::Scan { max_n } => {
            let sn = checked(max_n, opts)?;
            let t = Instant::now();
            eprintln!("scanning 1024 symmetric shadings up to n={max_n}");
            let rep = scan_symmetric_in(sn, exec, ScanStrategy::Zeta)?;
            eprintln!(
                "{} equidistributed, {:.1}s",
                rep.survivors().len(),
                t.elapsed().as_secs_f64()
            );
            match opts.format {
                Format::Json => {
                    let lines: Vec<_> = rep.records.iter().map(|r| r.to_line()).collect();
                    json(out, &lines)?
                }
                Format::Csv => {
                    writeln!(out, "shading,verdict,first_divergence_n")?;
                    for r in &rep.records {
                        let l = r.to_line();
                        let d = l
                            .first_divergence_n
                            .map(|n| n.to_string())
                            .unwrap_or_default();
                        writeln!(out, "\"{}\",{},{d}", r.shading.compact(), l.verdict)?;
                    }
                }
            }
        }
        Cmd::Apply { sel, perm } => {
            let p: Permutation = perm.parse()?;
            let cat = builtin();
            let entry = match (sel.pair_id, &sel.shading) {
                (Some(id), _) => cat.get(id)?,
                (None, Some(s)) => {
                    let r = Shading::parse(3, s)?;
                    cat.find_proved(&r).ok_or_else(|| {
                        Failure::Usage(format!("no proved bijection for {}", r.compact()))
                    })?
                }
                (None, None) => return Err(Failure::Usage("need --pair-id or --shading".into())),
            };
            writeln!(out, "{}", entry.bijection()?.apply(&p))?;
        }
        Cmd::Verify { pair_id, n } => {
            let b = builtin().get(pair_id)?.bijection()?;
            checked(n, opts)?;
            let rep = b.verify(n, exec)?;
            json(out, &rep)?;
            if !rep.passed() {
                return Err(Failure::Check(format!("pair {pair_id} fails at n={n}")));
            }
        }
        Cmd::CatalogValidate { path } => {
            let cat = match path {
                Some(p) => load_catalog(p)?,
                None => builtin(),
            };
            let rep = validate_catalog(&cat);
            json(out, &rep)?;
            if !rep.is_ok() {
                return Err(Failure::Check(format!(
                    "{} violation(s)",
                    rep.violations.len()
                )));
            }
        }
        Cmd::Sequences { name, max_n } => {
            let rows: Vec<(usize, Option<usize>, u128)> = match name {
                SeqName::Catalan => (0..=max_n)
                    .map(|n| (n, None, sequences::catalan(n)))
                    .collect(),
                SeqName::Bell => sequences::bell_numbers(max_n)
                    .into_iter()
                    .enumerate()
                    .map(|(n, b)| (n, None, b))
                    .collect(),
                SeqName::Stirling => sequences::stirling_table(max_n)
                    .into_iter()
                    .enumerate()
                    .flat_map(|(n, row)| {
                        row.into_iter()
                            .enumerate()
                            .map(move |(k, v)| (n, Some(k), v))
                    })
                    .collect(),
            };
            match opts.format {
                Format::Json => {
                    let v: Vec<_> = rows
                        .iter()
                        .map(|&(n, k, value)| match k {
                            Some(k) => serde_json::json!({ "n": n, "k": k, "value": value }),
                            None => serde_json::json!({ "n": n, "value": value }),
                        })
                        .collect();
                    json(out, &v)?
                }
                Format::Csv => {
                    let stirling = matches!(name, SeqName::Stirling);
                    writeln!(out, "{}", if stirling { "n,k,value" } else { "n,value" })?;
                    for (n, k, v) in rows {
                        match k {
                            Some(k) => writeln!(out, "{n},{k},{v}")?,
                            None => writeln!(out, "{n},{v}")?,
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `-p1`/`-p2` are accepted as spellings of `--p1`/`--p2`.
fn normalize(args: impl Iterator<Item = String>) -> Vec<String> {
    args.map(|a| match a.as_str() {
        "-p1" | "-p2" => format!("-{a}"),
        _ => a,
    })
    .collect()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse_from(normalize(std::env::args())) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let jobs = cli.opts.jobs;
    let stdout = io::stdout();
    let result = with_threads(jobs, || run(cli, &mut stdout.lock()));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("meshperm: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("meshperm: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("meshperm: {m} (set MESHPERM_MAX_N to raise it)");
            ExitCode::from(3)
        }
    }
}
