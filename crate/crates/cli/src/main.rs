use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ideal_atoms::atoms::{
    atom_complexity, build_atom_dfa, enumerate_atoms_with, report_bases, AtomReport,
};
use ideal_atoms::bounds::{max_atom_count, BoundsTable, MAX_TABLE_STATES};
use ideal_atoms::document::{parse_dfa, render_dfa};
use ideal_atoms::dot::{atom_to_dot, dfa_to_dot};
use ideal_atoms::harness::{cross_check, random_dfa, RandomSpec, ORACLE_MAX_STATES};
use ideal_atoms::ideals::{idealize, is_ideal, IdealKind};
use ideal_atoms::table::{compare_bounds_tsv, compare_witnesses_tsv, render_tsv, witness_tables};
use ideal_atoms::witnesses::witness;
use ideal_atoms::{bounds, Dfa, Execution, StateSet, WitnessClass, MAX_SET_STATES};

/// Atoms of regular languages and ideals: witnesses, complexities, bounds.
#[derive(Parser)]
#[command(name = "ideal-atoms", version)]
struct Cli {
    /// Evaluate independent bases one at a time instead of in parallel.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the witness DFA of a class.
    Witness {
        #[arg(long)]
        class: WitnessClass,
        #[arg(long)]
        n: usize,
        /// Write to a file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Atom complexities of a minimal DFA.
    Atoms {
        #[command(flatten)]
        input: DfaInput,
        /// 1-based states of one basis, e.g. `2,3,4`; `-` for all bases.
        #[arg(long)]
        basis: Option<String>,
        #[arg(long, value_enum, default_value_t = Report::Text)]
        report: Report,
    },
    /// Closed-form complexity bounds for one `n`.
    Bounds {
        #[arg(long)]
        class: WitnessClass,
        #[arg(long)]
        n: usize,
    },
    /// Maximal complexity per `|S|` for n = 1..=max-n, as TSV.
    Table {
        #[arg(long, required_unless_present = "compare", conflicts_with = "compare")]
        class: Option<WitnessClass>,
        /// Two-sided/left/regular side by side.
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        max_n: usize,
        /// Use the closed forms instead of measuring the witnesses.
        #[arg(long)]
        closed_form: bool,
    },
    /// Report which ideal classes the language belongs to.
    CheckIdeal {
        #[command(flatten)]
        input: DfaInput,
    },
    /// Minimal DFA of the right, left or two-sided ideal generated by the language.
    Idealize {
        #[command(flatten)]
        input: DfaInput,
        #[arg(long)]
        kind: IdealKind,
    },
    /// Compare atom routes and complexities against the oracles on random DFAs.
    Crosscheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        letters: usize,
        #[arg(long)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Graphviz digraph of a DFA or of one of its atoms.
    Dot {
        #[command(flatten)]
        input: DfaInput,
        /// 1-based states of the atom basis.
        #[arg(long)]
        atom: Option<String>,
    },
}

#[derive(Args)]
struct DfaInput {
    /// DFA file in `dfa v1` format; `-` reads standard input.
    #[arg(long)]
    dfa: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum Report {
    Text,
    Tsv,
}

type Failure = String;

fn read_dfa(input: &DfaInput) -> Result<Dfa, Failure> {
    let text = if input.dfa == Path::new("-") {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("stdin: {e}"))?
    } else {
        fs::read_to_string(&input.dfa).map_err(|e| format!("{}: {e}", input.dfa.display()))?
    };
    parse_dfa(&text).map_err(|e| format!("{}: {e}", input.dfa.display()))
}

fn format_report(report: &AtomReport, style: Report) -> String {
    let mut out = String::new();
    match style {
        Report::Tsv => {
            out.push_str("basis\tatom\tcomplexity\n");
            for e in &report.entries {
                let k = e.complexity.map_or("-".to_string(), |k| k.to_string());
                writeln!(
                    out,
                    "{}\t{}\t{k}",
                    e.basis,
                    if e.is_atom { "yes" } else { "no" }
                )
                .unwrap();
            }
        }
        Report::Text => {
            for e in report.atoms() {
                writeln!(out, "A_{}: complexity {}", e.basis, e.complexity.unwrap()).unwrap();
            }
            writeln!(
                out,
                "{} atoms over {} states, max complexity {}",
                report.atom_count(),
                report.state_count,
                report.max_complexity().unwrap_or(0)
            )
            .unwrap();
        }
    }
    out
}

fn bounds_text(class: WitnessClass, n: usize) -> Result<String, Failure> {
    if n == 0 || n > MAX_SET_STATES {
        return Err(format!("n must be in 1..={}", MAX_SET_STATES));
    }
    let table = BoundsTable::new(class, n);
    let mut out = String::from("size\tbound\n");
    for (s, bound) in table.rows.iter().enumerate() {
        let cell = bound.map_or("*".to_string(), |b| b.to_string());
        writeln!(out, "{s}\t{cell}").unwrap();
    }
    writeln!(out, "max\t{}", table.max).unwrap();
    writeln!(out, "atoms\t{}", max_atom_count(class, n)).unwrap();
    Ok(out)
}

fn crosscheck(
    n: usize,
    letters: usize,
    samples: usize,
    seed: u64,
) -> Result<(String, bool), Failure> {
    if n == 0 || n > ORACLE_MAX_STATES {
        return Err(format!("--n must be in 1..={ORACLE_MAX_STATES}"));
    }
    if letters == 0 {
        return Err("--letters must be positive".into());
    }
    let mut out = String::new();
    let mut passed = 0;
    for i in 0..samples {
        let spec = RandomSpec::new(n, letters, seed.wrapping_add(i as u64), 0.4);
        let report = cross_check(&random_dfa(&spec), &format!("seed={}", spec.seed))
            .map_err(|e| e.to_string())?;
        passed += usize::from(report.passed());
        writeln!(out, "{report}").unwrap();
    }
    writeln!(out, "passed {passed}/{samples}").unwrap();
    Ok((out, passed == samples))
}

fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    let ok = |s: String| Ok((s, true));
    match cli.command {
        Command::Witness { class, n, out } => {
            let text = render_dfa(&witness(class, n).map_err(|e| e.to_string())?);
            match out {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    ok(String::new())
                }
                None => ok(text),
            }
        }
        Command::Atoms {
            input,
            basis,
            report,
        } => {
            let d = read_dfa(&input)?;
            let n = d.state_count();
            match basis.as_deref() {
                None | Some("-") => {
                    let r = enumerate_atoms_with(&d, exec).map_err(|e| e.to_string())?;
                    ok(format_report(&r, report))
                }
                Some(text) => {
                    let basis = StateSet::parse_one_based(text, n).map_err(|e| e.to_string())?;
                    match report {
                        Report::Text => ok(format!(
                            "{}\n",
                            atom_complexity(&d, basis).map_err(|e| e.to_string())?
                        )),
                        Report::Tsv => ok(format_report(
                            &report_bases(&d, &[basis], exec).map_err(|e| e.to_string())?,
                            Report::Tsv,
                        )),
                    }
                }
            }
        }
        Command::Bounds { class, n } => ok(bounds_text(class, n)?),
        Command::Table {
            class,
            compare,
            max_n,
            closed_form,
        } => {
            if max_n == 0 || max_n > MAX_TABLE_STATES {
                return Err(format!("--max-n must be in 1..={MAX_TABLE_STATES}"));
            }
            let tsv = match (compare, closed_form) {
                (true, true) => compare_bounds_tsv(max_n),
                (true, false) => compare_witnesses_tsv(max_n, exec),
                (false, true) => bounds::build_table(class.unwrap(), max_n).map(|t| render_tsv(&t)),
                (false, false) => {
                    witness_tables(class.unwrap(), max_n, exec).map(|t| render_tsv(&t))
                }
            };
            ok(tsv.map_err(|e| e.to_string())?)
        }
        Command::CheckIdeal { input } => {
            let d = read_dfa(&input)?;
            let mut out = String::new();
            for kind in [IdealKind::Right, IdealKind::Left, IdealKind::TwoSided] {
                let yes = is_ideal(&d, kind).map_err(|e| e.to_string())?;
                writeln!(out, "{kind}\t{}", if yes { "yes" } else { "no" }).unwrap();
            }
            ok(out)
        }
        Command::Idealize { input, kind } => {
            let d = read_dfa(&input)?;
            ok(render_dfa(&idealize(&d, kind).map_err(|e| e.to_string())?))
        }
        Command::Crosscheck {
            n,
            letters,
            samples,
            seed,
        } => crosscheck(n, letters, samples, seed),
        Command::Dot { input, atom } => {
            let d = read_dfa(&input)?;
            match atom {
                None => ok(dfa_to_dot(&d)),
                Some(text) => {
                    let basis = StateSet::parse_one_based(&text, d.state_count())
                        .map_err(|e| e.to_string())?;
                    ok(atom_to_dot(
                        &build_atom_dfa(&d, basis).map_err(|e| e.to_string())?,
                    ))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
