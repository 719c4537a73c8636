use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use rotsys::extraction::{
    bound_n0, find_backward_monotone_subsystem, find_forward_monotone_subsystem,
    find_separated_subsystem, find_unavoidable, BoundTable,
};
use rotsys::extraction::bounds::DEFAULT_CEILING_DIGITS;
use rotsys::format::{parse, render};
use rotsys::search::{
    contains_any, contains_canonical, random_separated_system, random_system, ramsey_threshold,
    Enumerator, SearchConfig, ThresholdReport,
};
use rotsys::structure::{self, classify};
use rotsys::{canonical_of, Error, FamilyTag, Label, RotationSystem};

const EXIT_INPUT: u8 = 1;
const EXIT_NOT_FOUND: u8 = 2;
const EXIT_RANGE: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "rotsys", version, about = "Rotation systems and their unavoidable subsystems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Stage {
    Separated,
    Forward,
    Backward,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a system file; print its canonical form.
    Validate { file: PathBuf },
    /// Print a canonical system.
    Canon {
        #[arg(long)]
        family: FamilyTag,
        #[arg(long)]
        m: usize,
    },
    /// Print the inverse system.
    Invert { file: PathBuf },
    /// Print the subsystem induced by a subset of labels.
    Induce {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<Label>,
    },
    /// Per-element classification and system-level predicates.
    Classify { file: PathBuf },
    /// Run the extraction pipeline up to a stage.
    Extract {
        file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "full")]
        stage: Stage,
    },
    /// Exact worst-case thresholds.
    #[command(group(ArgGroup::new("which").required(true).args(["n1", "n2", "n0"])))]
    Bounds {
        #[arg(long)]
        n1: Option<u64>,
        #[arg(long)]
        n2: Option<u64>,
        #[arg(long)]
        n0: Option<u64>,
        /// Report OVERFLOW for values with more than this many decimal digits.
        #[arg(long, default_value_t = DEFAULT_CEILING_DIGITS)]
        ceiling: usize,
    },
    /// Brute-force search for a canonical subsystem.
    Contains {
        file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        family: Option<FamilyTag>,
    },
    /// Exhaustive threshold search.
    Ramsey {
        #[arg(long)]
        m: usize,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write the report as JSON to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random system.
    Random {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        separated: bool,
    },
    /// Enumerate every system of a given size.
    #[command(group(ArgGroup::new("mode").required(true).args(["count_only", "stream"])))]
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        stream: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotFound(_) => EXIT_NOT_FOUND,
            Error::SizeOutOfRange { .. } | Error::Overflow { .. } | Error::SizeTooSmall { .. } => {
                EXIT_RANGE
            }
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<String, Failure>;

fn load(path: &Path) -> Result<RotationSystem, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })?;
    parse(&text).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    })
}

fn classify_table(pi: &RotationSystem) -> String {
    let mut out = String::from("label\tseparated\tbackward\tforward\n");
    for (label, class) in classify(pi) {
        let sep = if class.separated { "yes" } else { "no" };
        writeln!(out, "{label}\t{sep}\t{}\t{}", class.backward, class.forward).unwrap();
    }
    let flag = |b: bool| if b { "yes" } else { "no" };
    let predicates = [
        ("separated", structure::is_separated(pi)),
        ("forward monotone", structure::is_forward_monotone(pi)),
        ("backward monotone", structure::is_backward_monotone(pi)),
        ("forward increasing", structure::is_forward_increasing(pi)),
        ("forward decreasing", structure::is_forward_decreasing(pi)),
        ("backward increasing", structure::is_backward_increasing(pi)),
        ("backward decreasing", structure::is_backward_decreasing(pi)),
    ];
    for (name, value) in predicates {
        writeln!(out, "{name}: {}", flag(value)).unwrap();
    }
    out
}

fn extract(pi: &RotationSystem, m: usize, stage: Stage) -> CmdResult {
    let separated = find_separated_subsystem(pi);
    let staged = match stage {
        Stage::Separated => Some(("separated", separated)),
        Stage::Forward => Some(("forward", find_forward_monotone_subsystem(&separated)?)),
        Stage::Backward => {
            let fwd = find_forward_monotone_subsystem(&separated)?;
            Some(("backward", find_backward_monotone_subsystem(&fwd)?))
        }
        Stage::Full => None,
    };
    if let Some((name, system)) = staged {
        let reached = if system.len() >= m { "reached" } else { "below" };
        return Ok(format!(
            "# stage {name}: size {} ({reached} target {m})\n{}",
            system.len(),
            render(&system)
        ));
    }

    match find_unavoidable(pi, m) {
        Ok(cert) => {
            let subset: Vec<String> = cert.subset.iter().map(|l| l.to_string()).collect();
            let induced = pi.induce(&cert.subset)?;
            Ok(format!(
                "# stages: {}\n# tag: {}\n# subset: {}\n# relabel: {}\n{}",
                cert.stage_log,
                cert.tag,
                subset.join(" "),
                cert.relabel,
                render(&induced)
            ))
        }
        Err(Error::NotFound(log)) => Err(Failure {
            code: EXIT_NOT_FOUND,
            message: format!("no canonical subsystem of size {m} found; best achieved: {log}"),
        }),
        Err(e) => Err(e.into()),
    }
}

fn bounds(n1: Option<u64>, n2: Option<u64>, n0: Option<u64>, ceiling: usize) -> CmdResult {
    let table = BoundTable::new(ceiling);
    let (name, arg, value) = match (n1, n2, n0) {
        (Some(t), _, _) => ("n1", t, table.n1(t)),
        (_, Some(t), _) => ("n2", t, table.n2(t)),
        (_, _, Some(m)) if ceiling == DEFAULT_CEILING_DIGITS => ("n0", m, bound_n0(m)),
        (_, _, Some(m)) => ("n0", m, table.n0(m)),
        _ => unreachable!("clap requires one of the bounds"),
    };
    match value {
        Ok(v) => Ok(format!("{name}({arg}) = {v}\n")),
        Err(Error::Overflow { max_digits }) => Err(Failure {
            code: EXIT_RANGE,
            message: format!("{name}({arg}) = OVERFLOW (more than {max_digits} digits)"),
        }),
        Err(e) => Err(e.into()),
    }
}

fn report_text(report: &ThresholdReport) -> String {
    let mut out = String::new();
    for r in &report.per_n {
        let verdict = if r.all_pass { "all contain" } else { "some avoid" };
        writeln!(
            out,
            "m={} n={}: scanned {}, failing {}, {verdict}",
            report.m, r.n, r.scanned, r.failing
        )
        .unwrap();
        if let Some(c) = &r.counterexample {
            writeln!(out, "  least counterexample: {c}").unwrap();
        }
    }
    match report.threshold {
        Some(t) => writeln!(out, "threshold {t}").unwrap(),
        None => writeln!(out, "threshold none").unwrap(),
    }
    writeln!(out, "wall time {} ms", report.wall_time_ms).unwrap();
    out
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Validate { file } => Ok(render(&load(&file)?)),
        Command::Canon { family, m } => Ok(render(&canonical_of(family, m)?)),
        Command::Invert { file } => Ok(render(&load(&file)?.invert())),
        Command::Induce { file, subset } => Ok(render(&load(&file)?.induce(&subset)?)),
        Command::Classify { file } => Ok(classify_table(&load(&file)?)),
        Command::Extract { file, m, stage } => extract(&load(&file)?, m, stage),
        Command::Bounds {
            n1,
            n2,
            n0,
            ceiling,
        } => bounds(n1, n2, n0, ceiling),
        Command::Contains { file, m, family } => {
            let pi = load(&file)?;
            let witness = match family {
                Some(tag) => contains_canonical(&pi, tag, m),
                None => contains_any(&pi, m),
            };
            Ok(match witness {
                Some(w) => {
                    let subset: Vec<String> = w.subset.iter().map(|l| l.to_string()).collect();
                    format!("tag: {}\nsubset: {}\nrelabel: {}\n", w.tag, subset.join(" "), w.relabel)
                }
                None => "none\n".to_string(),
            })
        }
        Command::Ramsey {
            m,
            max_n,
            jobs,
            out,
        } => {
            let config = SearchConfig {
                jobs,
                ..SearchConfig::default()
            };
            let report = ramsey_threshold(m, max_n, &config)?;
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&report).expect("report serializes");
                std::fs::write(&path, json + "\n").map_err(|e| Failure {
                    code: EXIT_INPUT,
                    message: format!("{}: {e}", path.display()),
                })?;
            }
            Ok(report_text(&report))
        }
        Command::Random {
            size,
            seed,
            separated,
        } => {
            let pi = if separated {
                random_separated_system(size, seed)?
            } else {
                random_system(size, seed)?
            };
            Ok(render(&pi))
        }
        Command::Enumerate {
            size,
            count_only,
            stream: _,
        } => {
            let e = Enumerator::new(size)?;
            if count_only {
                return Ok(format!("{}\n", e.count()));
            }
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            let mut result = Ok(());
            e.for_each(|ranks| {
                if result.is_ok() {
                    use std::io::Write;
                    result = writeln!(lock, "{}", render(&e.system(ranks)));
                }
            });
            result.map_err(|err| Failure {
                code: EXIT_INPUT,
                message: err.to_string(),
            })?;
            Ok(String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
