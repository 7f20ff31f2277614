//! `dtc`: classify registered groups, run check suites and replay witnesses.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use dtc_core::classify::{
    build_xn_witness, classify, condition_i_witness, run_suite, verify, xn_schedule, Options, SuiteOptions,
    DEFAULT_CANDIDATE_BUDGET, SUITES, XN_PRODUCT_BUDGET,
};
use dtc_core::group::{Exhaustion, Group, GroupSpec, Schedule, SetSpec, DEFAULT_PRODUCT_BUDGET};
use dtc_core::witness::Witness;
use dtc_core::Error;

const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "dtc", version, about = "Finite-scale DTC certificates for countable groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Registered groups
    Groups {
        #[command(subcommand)]
        action: GroupsAction,
    },
    /// Classify a group and emit a report with certificates
    Classify {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        scale: Scale,
        /// Largest exhaustion level used by certificates
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Write the report here instead of stdout
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a named check suite on one or more groups
    Suite {
        /// One of: axioms, separation, twopoint, xn, symmetrization
        name: String,
        #[arg(long = "group", required = true)]
        groups: Vec<String>,
        #[command(flatten)]
        scale: Scale,
        /// Family size, sequence length or sample count
        #[arg(long)]
        size: Option<usize>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Replay every check of a stored witness
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Search F_radius for x outside F V and F x (F \ V)
    ConditionI {
        #[arg(long)]
        group: String,
        /// fc, identity, even, whole or file:<path>
        #[arg(long)]
        v: String,
        #[arg(long)]
        radius: usize,
        #[command(flatten)]
        scale: Scale,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Build x_0, ..., x_{n-1} against V and write the witness
    BuildXn {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "fc")]
        v: String,
        #[command(flatten)]
        scale: Scale,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum GroupsAction {
    List,
}

#[derive(Args)]
struct Scale {
    /// Candidate budget for enumeration searches
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Generators admitted at level 0 (defaults to --batch)
    #[arg(long)]
    head: Option<usize>,
    /// Generators admitted per admitting level
    #[arg(long)]
    batch: Option<usize>,
    /// Admit a batch every `stride` levels
    #[arg(long)]
    stride: Option<usize>,
    /// Bound on |F_n|^2 when forming products
    #[arg(long)]
    product_budget: Option<u64>,
}

impl Scale {
    fn schedule(&self) -> Result<Option<Schedule>, Error> {
        if self.head.is_none() && self.batch.is_none() && self.stride.is_none() {
            return Ok(None);
        }
        let batch = self.batch.unwrap_or(1);
        Schedule::with_head(self.head.unwrap_or(batch), batch, self.stride.unwrap_or(1)).map(Some)
    }

    fn options(&self, default_schedule: Schedule, default_product_budget: u64) -> Result<Options, Error> {
        Ok(Options {
            budget: self.budget.unwrap_or(DEFAULT_CANDIDATE_BUDGET),
            seed: self.seed,
            schedule: self.schedule()?.unwrap_or(default_schedule),
            product_budget: self.product_budget.unwrap_or(default_product_budget),
            ..Options::default()
        })
    }
}

fn group(spec: &str) -> Result<Arc<Group>, Error> {
    Group::from_spec_str(spec)
}

fn emit(text: &str, path: Option<&Path>) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, format!("{text}\n"))?,
        None => println!("{text}"),
    }
    Ok(())
}

fn witness_exit(w: &Witness) -> u8 {
    if w.checks.iter().any(|c| !c.pass) {
        3
    } else if w.passes() {
        0
    } else {
        2
    }
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Groups {
            action: GroupsAction::List,
        } => {
            for spec in GroupSpec::registered() {
                println!("{spec}\t{}", spec.describe());
            }
            Ok(0)
        }
        Command::Classify {
            group: spec,
            scale,
            depth,
            json,
        } => {
            let g = group(&spec)?;
            let opts = Options {
                depth,
                ..scale.options(Schedule::default(), DEFAULT_PRODUCT_BUDGET)?
            };
            let report = classify(&g, &opts);
            emit(&report.to_json(), json.as_deref())?;
            eprintln!("{}: {}", report.group, report.classification);
            for e in &report.errors {
                eprintln!("  {e}");
            }
            Ok(report.exit_code() as u8)
        }
        Command::Suite {
            name,
            groups,
            scale,
            size,
            json,
        } => {
            if !SUITES.contains(&name.as_str()) {
                return Err(Error::Usage(format!("unknown suite {name:?}; expected one of {}", SUITES.join(", "))));
            }
            let groups = groups.iter().map(|s| group(s)).collect::<Result<Vec<_>, _>>()?;
            let opts = SuiteOptions {
                budget: scale.budget,
                seed: scale.seed,
                schedule: scale.schedule()?,
                product_budget: scale.product_budget,
                size,
            };
            let report = run_suite(&name, &groups, &opts)?;
            emit(&report.to_json(), json.as_deref())?;
            for cert in &report.certificates {
                eprintln!("{} {}: {:?}", cert.rule, cert.group, cert.verdict);
            }
            for e in &report.errors {
                eprintln!("  {e}");
            }
            Ok(report.exit_code() as u8)
        }
        Command::Verify { input, json } => {
            let text = std::fs::read_to_string(&input)?;
            let w = Witness::from_json(&text)?;
            let v = verify(&w)?;
            emit(&v.to_json(), json.as_deref())?;
            match &v.first_mismatch {
                Some(name) => eprintln!("{}: replay contradicts stored check {name}", input.display()),
                None => eprintln!("{}: {:?}", input.display(), v.certificate.verdict),
            }
            Ok(v.exit_code() as u8)
        }
        Command::ConditionI {
            group: spec,
            v,
            radius,
            scale,
            json,
        } => {
            let g = group(&spec)?;
            let v = SetSpec::parse_cli(&v)?;
            let opts = scale.options(Schedule::default(), DEFAULT_PRODUCT_BUDGET)?;
            let ex = Exhaustion::with_budget(g.clone(), opts.schedule, opts.product_budget);
            let w = condition_i_witness(&g, &ex, &opts, &v, radius)?;
            emit(&w.to_json(), json.as_deref())?;
            match w.elements.first() {
                Some(x) => eprintln!("x = {x}"),
                None => eprintln!("no candidate among the first {} satisfies both clauses", opts.budget),
            }
            Ok(witness_exit(&w))
        }
        Command::BuildXn {
            group: spec,
            n,
            v,
            scale,
            out,
        } => {
            let g = group(&spec)?;
            let v = SetSpec::parse_cli(&v)?;
            let opts = scale.options(xn_schedule(), XN_PRODUCT_BUDGET)?;
            let ex = Exhaustion::with_budget(g.clone(), opts.schedule, opts.product_budget);
            let w = build_xn_witness(&g, &ex, &opts, &v, n)?;
            emit(&w.to_json(), out.as_deref())?;
            for c in w.checks.iter().filter(|c| !c.pass) {
                eprintln!("{} fails at depth {}", c.name, c.depth);
            }
            Ok(witness_exit(&w))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("dtc: {e}");
            ExitCode::from(match e {
                Error::Usage(_) | Error::Parse(_) | Error::Io(_) | Error::Json(_) => EXIT_USAGE,
                Error::Precondition(_) | Error::Budget { .. } => 2,
            })
        }
    }
}
