use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::fingerprint::{candidates, Fingerprint};
use super::make::make;
use super::report;
use crate::autom::{AutGroup, DEFAULT_NODE_BUDGET};
use crate::cohres::{Resolution, ResolutionCache, DEFAULT_DIM_BUDGET};
use crate::conjcheck::{census, check_conj_a, check_conj_b, check_conj_c, Status, Verdict};
use crate::error::{Error, Result};
use crate::grpcore::grpfile::{read_grp, write_grp};
use crate::grpcore::GroupRef;
use crate::stratify::{StratSettings, Stratification};

#[derive(Parser, Debug)]
#[command(
    name = "outcoh",
    version,
    about = "Out(P)-actions on mod-p cohomology of p-groups"
)]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug, Clone)]
struct Options {
    #[arg(long, global = true, default_value_t = 2)]
    prime: u32,
    /// Highest filtration index.
    #[arg(long, global = true, default_value_t = 8)]
    dmax: usize,
    /// Highest total degree of a stratum.
    #[arg(long, global = true, default_value_t = 14)]
    cutoff: usize,
    /// Consecutive zero degrees read as vanishing.
    #[arg(long, global = true, default_value_t = 4)]
    window: usize,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Directory of cached resolutions.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long = "budget-nodes", global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget_nodes: u64,
    #[arg(long = "budget-dim", global = true, default_value_t = DEFAULT_DIM_BUDGET)]
    budget_dim: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quillen data, Out orders, irreducibles and the strata table.
    Analyze { file: PathBuf },
    /// Run a conjecture checker.
    Check {
        which: Which,
        file: PathBuf,
        /// Object index for B; every maximal object when absent.
        #[arg(long)]
        object: Option<usize>,
    },
    /// Flags and Out orders for every .grp file of a directory.
    Census {
        dir: PathBuf,
        /// Skip the Conjecture C check.
        #[arg(long = "no-conj-c")]
        no_conj_c: bool,
    },
    /// Dimensions of H^n for n <= degree.
    Dims {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Write a constructed group as a .grp file.
    Make {
        spec: String,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
    /// Find the catalog file matching a group's fingerprint.
    Identify {
        dir: PathBuf,
        #[arg(long = "fingerprint-of")]
        fingerprint_of: PathBuf,
    },
}

/// Exit code for an error: 4 for budgets, 3 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NodeBudget(_) | Error::DimBudget { .. } => 4,
        _ => 3,
    }
}

fn status_code(statuses: impl IntoIterator<Item = Status>) -> i32 {
    statuses
        .into_iter()
        .map(|s| match s {
            Status::Holds => 0,
            Status::Fails => 1,
            Status::HoldsUpToCutoff | Status::Inconclusive => 2,
        })
        .fold(0, |acc, c| match (acc, c) {
            (1, _) | (_, 1) => 1,
            (a, b) => a.max(b),
        })
}

fn load(path: &Path) -> Result<GroupRef> {
    Ok(Arc::new(read_grp(path)?))
}

impl Options {
    fn settings(&self) -> StratSettings {
        StratSettings {
            cutoff: self.cutoff,
            dmax: self.dmax,
            window: self.window,
            seed: self.seed,
            dim_budget: self.budget_dim,
        }
    }

    fn stratify(&self, g: &GroupRef) -> Result<Stratification> {
        let aut = AutGroup::with_budget(g, self.budget_nodes)?;
        match &self.cache {
            Some(dir) => Stratification::with_cache(
                g,
                self.prime,
                aut,
                self.settings(),
                &ResolutionCache::new(dir)?,
            ),
            None => Stratification::new(g, self.prime, aut, self.settings()),
        }
    }

    fn emit(&self, verdicts: &[Verdict]) -> String {
        let mut s = String::new();
        for v in verdicts {
            match self.format {
                Format::Text => s.push_str(&v.to_text()),
                Format::Tsv => s.push_str(&v.to_tsv()),
            }
        }
        s
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let o = &cli.opts;
    match &cli.cmd {
        Command::Analyze { file } => {
            let st = o.stratify(&load(file)?)?;
            let text = match o.format {
                Format::Text => report::analyze_text(&st)?,
                Format::Tsv => report::analyze_tsv(&st)?,
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Check {
            which,
            file,
            object,
        } => {
            let st = o.stratify(&load(file)?)?;
            let verdicts = match which {
                Which::A => vec![check_conj_a(&st)?],
                Which::B => {
                    let objs: Vec<usize> = match object {
                        Some(i) => vec![*i],
                        None => (0..st.objects.len())
                            .filter(|&i| st.is_maximal(i))
                            .collect(),
                    };
                    objs.iter()
                        .map(|&i| check_conj_b(&st, i))
                        .collect::<Result<_>>()?
                }
                Which::C => vec![check_conj_c(&st)?],
            };
            out.write_all(o.emit(&verdicts).as_bytes())?;
            Ok(status_code(verdicts.iter().map(|v| v.status)))
        }
        Command::Census { dir, no_conj_c } => {
            let groups = super::fingerprint::catalog_files(dir)?
                .iter()
                .map(|p| load(p))
                .collect::<Result<Vec<_>>>()?;
            let r = census(&groups, o.prime, &o.settings(), !no_conj_c)?;
            let text = match o.format {
                Format::Text => r.to_text(),
                Format::Tsv => r.to_tsv(),
            };
            out.write_all(text.as_bytes())?;
            Ok(status_code([r.verdict.status]))
        }
        Command::Dims { file, degree } => {
            let g = load(file)?;
            let res = match &o.cache {
                Some(dir) => ResolutionCache::new(dir)?.load_or_compute(&g, o.prime, *degree)?,
                None => Resolution::compute_with_budget(&g, o.prime, *degree, o.budget_dim)?,
            };
            let ranks = &res.ranks()[..=*degree];
            let text = match o.format {
                Format::Text => format!("{}\n", report::dims_text(ranks)),
                Format::Tsv => report::dims_tsv(g.name(), ranks),
            };
            out.write_all(text.as_bytes())?;
            Ok(0)
        }
        Command::Make { spec, output } => {
            let g = make(spec)?;
            std::fs::write(output, write_grp(&g))?;
            writeln!(
                out,
                "{} order {} -> {}",
                g.name(),
                g.order(),
                output.display()
            )?;
            Ok(0)
        }
        Command::Identify {
            dir,
            fingerprint_of,
        } => {
            let g = load(fingerprint_of)?;
            let fp = Fingerprint::with_aut(&g, o.prime, o.budget_nodes)?;
            let found = candidates(dir, &fp, o.prime, o.budget_nodes)?;
            match found.len() {
                0 => Err(Error::NoMatch(fp.to_string())),
                1 => {
                    match o.format {
                        Format::Text => writeln!(out, "{}\n  {fp}", found[0].display())?,
                        Format::Tsv => {
                            writeln!(out, "{}\t-\tmatch\t-\t{}", g.name(), found[0].display())?
                        }
                    }
                    Ok(0)
                }
                _ => Err(Error::AmbiguousMatch(
                    found.iter().map(|p| p.display().to_string()).collect(),
                )),
            }
        }
    }
}

/// Run a command line, writing the report to `out` and diagnostics to
/// `err`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
