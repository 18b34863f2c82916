//! `seqlogic`: evaluate, normalize and compare propositional terms under full,
//! short-circuit and conditional evaluation.
//!
//! Exit codes: 0 success, 1 a negative verdict (terms differ, a schema
//! fails), 2 usage or input errors, 3 the atom guard was exceeded, 4 internal
//! errors.

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use seqlogic::decompose::{fel_g, scl_g};
use seqlogic::equiv::{
    catalog, catalogs, check_schema, equal_ffel, equal_fscl, equal_mixed, export_table,
    translate_h, CheckConfig, DEFAULT_MAX_ATOMS,
};
use seqlogic::normalize::{classify, normalize, Logic};
use seqlogic::{ce, fe, memorize, parse_term, parse_tree, se, traces, Error, Term, Tree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LogicArg {
    /// Full evaluation.
    Ffel,
    /// Short-circuit evaluation.
    Fscl,
    /// Conditional evaluation of mixed terms.
    Mixed,
}

impl LogicArg {
    fn normal(self) -> anyhow::Result<Logic> {
        match self {
            LogicArg::Ffel => Ok(Logic::Fel),
            LogicArg::Fscl => Ok(Logic::Scl),
            LogicArg::Mixed => Err(usage("mixed terms have no normal form; use ffel or fscl")),
        }
    }

    fn eval(self, t: &Term) -> seqlogic::Result<Tree> {
        match self {
            LogicArg::Ffel => fe(t),
            LogicArg::Fscl => se(t),
            LogicArg::Mixed => ce(t),
        }
    }
}

#[derive(Parser)]
#[command(name = "seqlogic", version, about)]
struct Cli {
    /// Read one input per line from standard input instead of the argument.
    #[arg(long, global = true)]
    stdin: bool,
    /// Refuse terms with more atom occurrences than this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ATOMS)]
    max_atoms: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the evaluation tree of a term.
    Tree {
        term: Option<String>,
        #[arg(long, value_enum, default_value = "mixed")]
        logic: LogicArg,
        /// Emit Graphviz instead of the text format.
        #[arg(long)]
        dot: bool,
    },
    /// List the traces of a term, one per line.
    Traces {
        term: Option<String>,
        #[arg(long, value_enum, default_value = "mixed")]
        logic: LogicArg,
    },
    /// Print the normal form of a term.
    Normalize {
        term: Option<String>,
        #[arg(long, value_enum)]
        logic: LogicArg,
    },
    /// Print the normal-form category of a term as written.
    Classify {
        term: Option<String>,
        #[arg(long, value_enum)]
        logic: LogicArg,
    },
    /// Decide whether two terms are equal; prints a separating trace if not.
    Decide {
        lhs: String,
        rhs: String,
        #[arg(long, value_enum, default_value = "mixed")]
        logic: LogicArg,
    },
    /// Rewrite full connectives into short-circuit ones.
    Translate { term: Option<String> },
    /// Recover the normal form from an evaluation tree in text format.
    Invert {
        tree: Option<String>,
        #[arg(long, value_enum)]
        logic: LogicArg,
    },
    /// Check equation catalogs on random instances.
    Check {
        /// Catalog name, or `all`.
        #[arg(long, default_value = "all")]
        catalog: String,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Atom bound for each term substituted into a schema.
        #[arg(long, default_value_t = 6)]
        instance_atoms: usize,
        #[arg(long, default_value_t = 3)]
        alphabet: usize,
    },
    /// Evaluate a term and drop branches that re-query an answered atom.
    Memorize {
        term: Option<String>,
        #[arg(long, value_enum, default_value = "fscl")]
        logic: LogicArg,
        /// Treat the input as a tree in text format instead of a term.
        #[arg(long)]
        tree: bool,
    },
    /// Print every equation catalog as a tab-separated table.
    Catalog,
}

/// Input problems; reported with exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: &str) -> anyhow::Error {
    anyhow!(Usage(msg.to_string()))
}

fn inputs(arg: Option<String>, stdin: bool) -> anyhow::Result<Vec<String>> {
    match (arg, stdin) {
        (Some(a), false) => Ok(vec![a]),
        (None, true) => {
            let mut out = Vec::new();
            for line in io::stdin().lock().lines() {
                let line = line.context("reading standard input")?;
                if !line.trim().is_empty() {
                    out.push(line);
                }
            }
            Ok(out)
        }
        (Some(_), true) => Err(usage("give either an argument or --stdin, not both")),
        (None, false) => Err(usage(
            "missing input (pass it as an argument or use --stdin)",
        )),
    }
}

fn read_term(src: &str, max_atoms: usize) -> anyhow::Result<Term> {
    let t = parse_term(src).map_err(Error::from)?;
    let atoms = t.atom_count();
    if atoms > max_atoms {
        return Err(Error::GuardExceeded {
            atoms,
            limit: max_atoms,
        }
        .into());
    }
    if !t.variables().is_empty() {
        return Err(usage("schema variables are not allowed in closed terms"));
    }
    Ok(t)
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<ExitCode> {
    let max = cli.max_atoms;
    match cli.cmd {
        Cmd::Tree { term, logic, dot } => {
            for src in inputs(term, cli.stdin)? {
                let x = logic.eval(&read_term(&src, max)?)?;
                if dot {
                    write!(out, "{}", x.to_dot())?;
                } else {
                    writeln!(out, "{x}")?;
                }
            }
        }
        Cmd::Traces { term, logic } => {
            for src in inputs(term, cli.stdin)? {
                for t in traces(&logic.eval(&read_term(&src, max)?)?) {
                    writeln!(out, "{t}")?;
                }
            }
        }
        Cmd::Normalize { term, logic } => {
            let logic = logic.normal()?;
            for src in inputs(term, cli.stdin)? {
                writeln!(out, "{}", normalize(logic, &read_term(&src, max)?)?)?;
            }
        }
        Cmd::Classify { term, logic } => {
            let logic = logic.normal()?;
            for src in inputs(term, cli.stdin)? {
                let t = parse_term(&src).map_err(Error::from)?;
                writeln!(out, "{}", classify(logic, &t).name())?;
            }
        }
        Cmd::Decide { lhs, rhs, logic } => {
            if cli.stdin {
                bail!(usage("decide takes both terms as arguments"));
            }
            let (p, q) = (read_term(&lhs, max)?, read_term(&rhs, max)?);
            let r = match logic {
                LogicArg::Ffel => equal_ffel(&p, &q, max)?,
                LogicArg::Fscl => equal_fscl(&p, &q, max)?,
                LogicArg::Mixed => equal_mixed(&p, &q, max)?,
            };
            if r.equal {
                writeln!(out, "EQUAL")?;
            } else {
                writeln!(out, "NOT EQUAL")?;
                if let Some(w) = r.witness {
                    writeln!(out, "witness: {w} (left only)")?;
                }
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Translate { term } => {
            for src in inputs(term, cli.stdin)? {
                writeln!(out, "{}", translate_h(&read_term(&src, max)?)?)?;
            }
        }
        Cmd::Invert { tree, logic } => {
            let logic = logic.normal()?;
            for src in inputs(tree, cli.stdin)? {
                let x = parse_tree(&src).map_err(Error::from)?;
                let t = match logic {
                    Logic::Fel => fel_g(&x)?,
                    Logic::Scl => scl_g(&x)?,
                };
                writeln!(out, "{t}")?;
            }
        }
        Cmd::Check {
            catalog: name,
            trials,
            seed,
            instance_atoms,
            alphabet,
        } => {
            let cats = if name.eq_ignore_ascii_case("all") {
                catalogs()
            } else {
                vec![catalog(&name).map_err(|e| usage(&e.to_string()))?]
            };
            let cfg = CheckConfig {
                trials,
                max_atoms: instance_atoms,
                alphabet,
                seed,
            };
            let mut failed = false;
            for c in cats {
                for s in &c.schemas {
                    let r = check_schema(s, &cfg)?;
                    match r.counterexample {
                        None => writeln!(out, "PASS {} {}", c.name, s.name)?,
                        Some(cx) => {
                            failed = true;
                            let sub: Vec<String> = cx
                                .substitution
                                .iter()
                                .map(|(v, t)| format!("{v} := {t}"))
                                .collect();
                            writeln!(
                                out,
                                "FAIL {} {}: {}; witness {}",
                                c.name,
                                s.name,
                                sub.join(", "),
                                cx.witness
                            )?;
                        }
                    }
                }
            }
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Memorize { term, logic, tree } => {
            for src in inputs(term, cli.stdin)? {
                let x = if tree {
                    parse_tree(&src).map_err(Error::from)?
                } else {
                    logic.eval(&read_term(&src, max)?)?
                };
                writeln!(out, "{}", memorize(&x))?;
            }
        }
        Cmd::Catalog => write!(out, "{}", export_table())?,
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Usage>().is_some() {
        return 2;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::GuardExceeded { .. }) => 3,
        Some(Error::Internal(_)) => 4,
        Some(_) => 2,
        None => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(code) => code,
        Err(e)
            if e.downcast_ref::<io::Error>()
                .is_some_and(|io| io.kind() == io::ErrorKind::BrokenPipe) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
