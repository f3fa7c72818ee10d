use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use torusgenus::braid::{
    lagrangian_genus_from_script, search_script, verify_script, BraidWord, MoveScript, SearchBounds,
};
use torusgenus::checks::{run_suite, CheckConfig, SuiteReport, SUITES};
use torusgenus::classify::{
    cobordism_distance_one, emit_graph, gordian_distance_one, lagrangian_genus_one, verify_theorem_equivalence,
    GraphFormat, Relation,
};
use torusgenus::invariants::{cobordism_lower_bound_nu, four_ball_genus, nu_plus_report, tau};
use torusgenus::semigroup::{gamma_max_difference, NumericalSemigroup};
use torusgenus::signature::{
    half_signature_of_difference, hermitian_signature_with_tolerance, lattice_step_function,
    seifert_matrix_from_positive_braid, signature_distance_bound, UnitCircleParam, DEFAULT_TOLERANCE, MAX_TOLERANCE,
};
use torusgenus::{corpus, Error, KnotPair, TorusKnot};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

#[derive(Parser)]
#[command(name = "torusgenus", version, about = "Genus-one cobordisms between torus knots")]
struct Cli {
    /// Script corpus directory.
    #[arg(long, global = true, env = corpus::CORPUS_ENV)]
    corpus: Option<PathBuf>,
    /// Zero threshold for the numeric signature oracle (at most 1e-4).
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Admit the unknot T(1,2) as a knot parameter.
    #[arg(long, global = true)]
    unknot: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Knot {
    p: u64,
    q: u64,
}

#[derive(Args, Clone, Copy)]
struct Pair {
    p: u64,
    q: u64,
    p2: u64,
    q2: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Semigroup table, gaps and Frobenius number; with --with, the maximal
    /// index-wise difference against a second knot.
    Semigroup {
        #[command(flatten)]
        knot: Knot,
        /// Table bound (default: Frobenius number + 1).
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        with: Option<Vec<u64>>,
    },
    /// tau of T(p,q).
    Tau {
        #[command(flatten)]
        knot: Knot,
    },
    /// Smooth 4-ball genus of T(p,q).
    G4 {
        #[command(flatten)]
        knot: Knot,
    },
    /// nu+ in both directions for the pair and the resulting lower bound.
    NuPlus {
        #[command(flatten)]
        pair: Pair,
    },
    /// Signature jump table, or the value at --at a/b.
    Signature {
        #[command(flatten)]
        knot: Knot,
        #[arg(long)]
        at: Option<UnitCircleParam>,
        /// Evaluate through the Seifert matrix of the torus braid instead.
        #[arg(long, requires = "at")]
        hermitian: bool,
    },
    /// Signature lower bound on the cobordism distance; with --at, half
    /// the signature of the difference at that point.
    SigBound {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        at: Option<UnitCircleParam>,
    },
    /// Distance-one report for a pair under a relation.
    Classify {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, default_value = "cobordism")]
        relation: Relation,
    },
    /// Checks that the nu+ obstruction holds exactly on the family pairs.
    VerifyThm {
        #[arg(long, default_value_t = 40)]
        max_q: u64,
    },
    /// Gordian distance one report; same as classify --relation gordian.
    Gordian {
        #[command(flatten)]
        pair: Pair,
    },
    /// Ordered pair: a cobordism from the first Legendrian to the second.
    Lagrangian {
        #[command(flatten)]
        pair: Pair,
    },
    /// Distance-one graph over a range of torus knots, as DOT or JSON.
    Graph {
        #[arg(long, default_value = "cobordism")]
        relation: Relation,
        #[arg(long, default_value_t = 11)]
        max_p: u64,
        #[arg(long, default_value_t = 24)]
        max_q: u64,
        #[arg(long, default_value = "dot")]
        format: GraphFormat,
    },
    /// Replays a script file and prints its certificate.
    VerifyScript {
        file: PathBuf,
        /// Also compute the Lagrangian genus (decomposable scripts only).
        #[arg(long)]
        lagrangian: bool,
    },
    /// Breadth-first search for a script from a braid to a torus knot.
    SearchScript {
        /// Start at the standard braid of T(P,Q).
        #[arg(long, num_args = 2, value_names = ["P", "Q"], conflicts_with = "word")]
        from: Option<Vec<u64>>,
        /// Start at a positive word in letters a, b, c, ...
        #[arg(long, requires = "strands")]
        word: Option<String>,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long, num_args = 2, value_names = ["P", "Q"], required = true)]
        to: Vec<u64>,
        #[arg(long, default_value_t = 2)]
        max_saddles: usize,
        #[arg(long, default_value_t = 200_000)]
        max_states: usize,
        #[arg(long)]
        no_deletions: bool,
        #[arg(long)]
        no_insertions: bool,
        /// Allow Markov moves up to this many strands.
        #[arg(long)]
        max_strands: Option<usize>,
        /// Shuffles the exploration order deterministically.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Runs a named check suite, or all of them.
    Check {
        suite: String,
        #[arg(long)]
        max_p: Option<u64>,
        #[arg(long)]
        max_q: Option<u64>,
    },
}

enum Failure {
    Assertion(String),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io(_) | Error::Json(_) => Failure::Io(e.to_string()),
            Error::InvalidParams { .. }
            | Error::BoundBelowFrobenius { .. }
            | Error::OutOfUnitInterval(_)
            | Error::BadRational(_)
            | Error::NotRegular(_)
            | Error::ToleranceTooLoose(_)
            | Error::IdenticalKnots(_)
            | Error::UnknownSuite(_) => Failure::Usage(e.to_string()),
            _ => Failure::Assertion(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

impl Cli {
    fn knot(&self, p: u64, q: u64) -> Result<TorusKnot, Failure> {
        Ok(TorusKnot::with_unknot(p, q, self.unknot)?)
    }

    fn pair(&self, a: Pair) -> Result<KnotPair, Failure> {
        Ok(KnotPair::new(self.knot(a.p, a.q)?, self.knot(a.p2, a.q2)?))
    }

    fn corpus_dir(&self) -> PathBuf {
        self.corpus.clone().unwrap_or_else(corpus::default_dir)
    }
}

fn emit<T: Serialize>(value: &T) -> Outcome {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Io(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn run(cli: &Cli) -> Outcome {
    if !(cli.tolerance > 0.0 && cli.tolerance <= MAX_TOLERANCE) {
        return Err(Error::ToleranceTooLoose(cli.tolerance).into());
    }
    match &cli.command {
        Command::Semigroup { knot, bound, with } => {
            let k = cli.knot(knot.p, knot.q)?;
            let table = match bound {
                Some(b) => NumericalSemigroup::build(k, *b)?,
                None => NumericalSemigroup::minimal(k),
            };
            let mut out = json!({
                "knot": k,
                "frobenius": table.frobenius(),
                "gapCount": table.gap_count(),
                "gaps": table.gaps(),
                "bound": table.bound(),
                "elements": table.elements(),
            });
            if let Some(w) = with {
                let other = cli.knot(w[0], w[1])?;
                out["with"] = json!(other);
                out["maxDifference"] = json!(gamma_max_difference(k, other));
            }
            emit(&out)
        }
        Command::Tau { knot } => {
            let k = cli.knot(knot.p, knot.q)?;
            emit(&json!({ "knot": k, "tau": tau(k) }))
        }
        Command::G4 { knot } => {
            let k = cli.knot(knot.p, knot.q)?;
            emit(&json!({ "knot": k, "g4": four_ball_genus(k) }))
        }
        Command::NuPlus { pair } => {
            let pair = cli.pair(*pair)?;
            emit(&json!({ "report": nu_plus_report(&pair), "lowerBound": cobordism_lower_bound_nu(&pair) }))
        }
        Command::Signature { knot, at, hermitian } => {
            let k = cli.knot(knot.p, knot.q)?;
            match at {
                None => emit(&lattice_step_function(k)),
                Some(w) if *hermitian => {
                    let matrix = seifert_matrix_from_positive_braid(&BraidWord::torus(k))?;
                    let value = hermitian_signature_with_tolerance(&matrix, *w, cli.tolerance)?;
                    emit(&json!({ "knot": k, "t": w, "signature": value, "route": "hermitian" }))
                }
                Some(w) => {
                    let value = lattice_step_function(k).value(*w)?;
                    emit(&json!({ "knot": k, "t": w, "signature": value, "route": "lattice" }))
                }
            }
        }
        Command::SigBound { pair, at } => {
            let pair = cli.pair(*pair)?;
            let mut out = json!({ "pair": pair, "bound": signature_distance_bound(&pair) });
            if let Some(w) = at {
                out["t"] = json!(w);
                out["halfSignatureOfDifference"] = json!(half_signature_of_difference(&pair, *w)?);
            }
            emit(&out)
        }
        Command::Classify { pair, relation } => classify(cli, *pair, *relation),
        Command::Gordian { pair } => classify(cli, *pair, Relation::Gordian),
        Command::Lagrangian { pair } => classify(cli, *pair, Relation::Lagrangian),
        Command::VerifyThm { max_q } => {
            if *max_q < 5 {
                return Err(Failure::Usage(format!("--max-q must be at least 5, got {max_q}")));
            }
            let report = verify_theorem_equivalence(*max_q);
            emit(&report)?;
            if report.counterexamples.is_empty() {
                Ok(())
            } else {
                Err(Failure::Assertion(format!("{} counterexamples", report.counterexamples.len())))
            }
        }
        Command::Graph { relation, max_p, max_q, format } => {
            if !(2 <= *max_p && max_p <= max_q) {
                return Err(Failure::Usage(format!("need 2 <= max-p <= max-q, got {max_p} and {max_q}")));
            }
            print!("{}", emit_graph(*relation, *max_p, *max_q, *format, cli.unknot));
            Ok(())
        }
        Command::VerifyScript { file, lagrangian } => {
            let text = std::fs::read_to_string(file).map_err(|e| Failure::Io(format!("{}: {e}", file.display())))?;
            let script = MoveScript::from_json(&text)?;
            let certificate = verify_script(&script)?;
            let mut out = json!({ "certificate": certificate });
            if *lagrangian {
                out["lagrangianGenus"] = json!(lagrangian_genus_from_script(&script)?.to_string());
            }
            emit(&out)
        }
        Command::SearchScript {
            from,
            word,
            strands,
            to,
            max_saddles,
            max_states,
            no_deletions,
            no_insertions,
            max_strands,
            seed,
        } => {
            let start = match (from, word) {
                (Some(f), _) => BraidWord::torus(cli.knot(f[0], f[1])?),
                (None, Some(w)) => BraidWord::from_alpha(strands.unwrap_or_default(), w)?,
                (None, None) => return Err(Failure::Usage("give --from P Q or --word W --strands N".into())),
            };
            let target = cli.knot(to[0], to[1])?;
            let bounds = SearchBounds {
                max_states: *max_states,
                allow_deletions: !no_deletions,
                allow_insertions: !no_insertions,
                max_strands: *max_strands,
                seed: *seed,
            };
            match search_script(&start, target, *max_saddles, &bounds)? {
                Some(script) => {
                    print!("{}", script.to_json()?);
                    Ok(())
                }
                None => Err(Failure::Assertion(format!("no script to {target} within the bounds"))),
            }
        }
        Command::Check { suite, max_p, max_q } => {
            let config = CheckConfig {
                max_p: *max_p,
                max_q: *max_q,
                corpus_dir: cli.corpus_dir(),
                tolerance: cli.tolerance,
                ..CheckConfig::default()
            };
            let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite.as_str()] };
            let reports = names.iter().map(|n| run_suite(n, &config)).collect::<Result<Vec<SuiteReport>, _>>()?;
            let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.suite.as_str()).collect();
            emit(&json!({ "pass": failed.is_empty(), "suites": reports }))?;
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Assertion(format!("failing suites: {}", failed.join(", "))))
            }
        }
    }
}

fn classify(cli: &Cli, pair: Pair, relation: Relation) -> Outcome {
    let pair = cli.pair(pair)?;
    let report = match relation {
        Relation::Cobordism => cobordism_distance_one(&pair)?,
        Relation::Gordian => gordian_distance_one(&pair)?,
        Relation::Lagrangian => lagrangian_genus_one(&pair)?,
    };
    emit(&report)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    eprintln!("torusgenus {}", env!("CARGO_PKG_VERSION"));
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let (code, message) = match failure {
                Failure::Assertion(m) => (EXIT_FAIL, m),
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Io(m) => (EXIT_IO, m),
            };
            eprintln!("error: {message}");
            ExitCode::from(code)
        }
    }
}
