use std::fmt::Display;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use hopfcount::census::{self, BruteMode, Level};
use hopfcount::fpf::{is_fpf_bruteforce, is_fpf_by_tree};
use hopfcount::graph::trees::{count_trees_root_degree, root_degree_histogram};
use hopfcount::graph::{DirectedPairGraph, UndirectedPairGraph};
use hopfcount::group::{load_group, AutGroup};
use hopfcount::holomorph::{enumerate_regular_subgroups, verify_s3_lemmas, Holomorph};
use hopfcount::pairspec::parse_pair;
use hopfcount::{Budget, Count, Error};

#[derive(Parser)]
#[command(name = "hopfcount", version, about = "Hopf-Galois structure counts on direct powers T^n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form and brute-force counts of tree pairs.
    #[command(subcommand)]
    Census(CensusCmd),
    /// Labelled trees on {0..n} by degree of vertex 0.
    #[command(subcommand)]
    Trees(TreesCmd),
    /// Fixed-point-freeness of a pair (f, g).
    #[command(subcommand)]
    Fpf(FpfCmd),
    /// Holomorph computations.
    #[command(subcommand)]
    Hol(HolCmd),
    /// Run the built-in verification suite.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: LevelArg,
    },
}

#[derive(Subcommand)]
enum CensusCmd {
    Formula {
        #[arg(long)]
        aut_order: u64,
        #[arg(long)]
        n: u64,
    },
    Brute {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "tree")]
        mode: ModeArg,
    },
    Weighted {
        #[arg(long)]
        aut_order: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum TreesCmd {
    /// T_n(d) from the closed form.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        degree: Option<u64>,
    },
    /// T_n(d) by Prüfer enumeration (n ≤ 8).
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        degree: Option<u64>,
    },
}

#[derive(Subcommand)]
enum FpfCmd {
    Check {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pair: PathBuf,
    },
    /// Dump the undirected and directed pair-graphs.
    Graph {
        #[arg(long)]
        group: String,
        #[arg(long)]
        pair: PathBuf,
    },
}

#[derive(Subcommand)]
enum HolCmd {
    /// Regular subgroups of Hol(group) isomorphic to `iso` (default: group).
    Regulars {
        #[arg(long)]
        group: String,
        #[arg(long)]
        iso: Option<String>,
    },
    VerifyS3Lemmas {
        /// Use every crossed homomorphism over S3², not just bijective ones.
        #[arg(long)]
        exhaustive: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Tree,
    Fpf,
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

/// Outcome of a command that ran: all comparisons agreed or not.
enum Outcome {
    Pass,
    Mismatch,
}

fn kv(key: &str, value: impl Display) {
    println!("{key}\t{value}");
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Mismatch
    }
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        bail!("n must be at least 1");
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    let budget = Budget::default();
    match cli.command {
        Command::Census(CensusCmd::Formula { aut_order, n }) => {
            check_n(n)?;
            let f: Count = census::formula_f(aut_order, n);
            let einn: Count = census::formula_einn(aut_order, n);
            kv("formula_F", &f);
            kv("formula_Einn", &einn);
            Ok(Outcome::Pass)
        }
        Command::Census(CensusCmd::Weighted { aut_order, n }) => {
            check_n(n)?;
            let f: Count = census::formula_f(aut_order, n);
            let w: Count = census::tree_weighted_f(aut_order, n);
            kv("tree_weighted_F", &w);
            kv("formula_F", &f);
            kv("match", f == w);
            Ok(verdict(f == w))
        }
        Command::Census(CensusCmd::Brute { group, n, mode }) => {
            check_n(n as u64)?;
            let t = load_group(&group)?;
            let mode = match mode {
                ModeArg::Tree => BruteMode::Tree,
                ModeArg::Fpf => BruteMode::Fpf,
            };
            let report = census::census(&t, n, &[mode], &budget)?;
            kv("group", &report.t_name);
            kv("n", n);
            kv("aut_order", report.aut_order);
            kv("mode", mode);
            if let Some((_, c)) = &report.brute_f {
                kv("brute_F", c);
            }
            kv("formula_F", &report.formula_f);
            kv("match", report.all_match());
            Ok(verdict(report.all_match()))
        }
        Command::Trees(cmd) => {
            let (n, degree, enumerate) = match cmd {
                TreesCmd::Count { n, degree } => (n, degree, false),
                TreesCmd::Enumerate { n, degree } => (n, degree, true),
            };
            check_n(n)?;
            let degrees: Vec<u64> = match degree {
                Some(d) if d == 0 || d > n => bail!("degree must lie in 1..={n}"),
                Some(d) => vec![d],
                None => (1..=n).collect(),
            };
            let hist = if enumerate { Some(root_degree_histogram(n as usize)?) } else { None };
            let mut ok = true;
            for d in degrees {
                let closed: Count = count_trees_root_degree(n, d);
                let count = match &hist {
                    Some(h) => {
                        ok &= Count::from(h[d as usize]) == closed;
                        Count::from(h[d as usize])
                    }
                    None => closed,
                };
                println!("{n}\t{d}\t{count}");
            }
            Ok(verdict(ok))
        }
        Command::Fpf(FpfCmd::Check { group, pair }) => {
            let t = load_group(&group)?;
            let auts = AutGroup::new(&t);
            let text = std::fs::read_to_string(&pair).with_context(|| format!("reading {}", pair.display()))?;
            let (f, g) = parse_pair(&text, &auts)?;
            let v = match is_fpf_by_tree(&f, &g, &auts) {
                Err(Error::HasFpfAutomorphism | Error::NoUsableComponent) => is_fpf_bruteforce(&f, &g, &auts, &budget)?,
                other => other?,
            };
            let witness = v.witness.map_or_else(|| "-".to_string(), |w| w.to_string());
            println!("{}\t{}\t{}", if v.is_fpf { "fpf" } else { "not-fpf" }, v.method, witness);
            Ok(Outcome::Pass)
        }
        Command::Fpf(FpfCmd::Graph { group, pair }) => {
            let t = load_group(&group)?;
            let auts = AutGroup::new(&t);
            let text = std::fs::read_to_string(&pair).with_context(|| format!("reading {}", pair.display()))?;
            let (f, g) = parse_pair(&text, &auts)?;
            print!("{}", UndirectedPairGraph::from_endos(&f, &g).dump());
            print!("{}", DirectedPairGraph::build(&f, &g).dump());
            Ok(Outcome::Pass)
        }
        Command::Hol(HolCmd::Regulars { group, iso }) => {
            let n = load_group(&group)?;
            let g = match iso {
                Some(name) => load_group(&name)?,
                None => n.clone(),
            };
            let hol = Holomorph::new(&n);
            let regs = enumerate_regular_subgroups(&hol, &g, &budget)?;
            let mut ok = true;
            for (id, r) in regs.iter().enumerate() {
                let regular = hol.is_regular(&r.subgroup)?;
                ok &= regular;
                println!("{id}\t{}\t{regular}\t{}", r.subgroup.order(), r.class);
            }
            Ok(verdict(ok))
        }
        Command::Hol(HolCmd::VerifyS3Lemmas { exhaustive }) => {
            let tally = verify_s3_lemmas(exhaustive)?;
            for (k, v) in tally.rows() {
                kv(k, v);
            }
            kv("pass", tally.passed());
            Ok(verdict(tally.passed()))
        }
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let v = census::run_verification(level, &budget)?;
            for r in &v.reports {
                for c in &r.checks {
                    kv(&format!("{}^{} {}", r.t_name, r.n, c.name), format_args!("{}\t{}", c.actual, c.pass));
                }
            }
            for c in &v.checks {
                kv(&c.name, format_args!("{}\t{}", c.actual, c.pass));
            }
            kv("pass", v.passed());
            Ok(verdict(v.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Outcome::Pass) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
