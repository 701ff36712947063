//! Command-line front end. Every command prints one JSON document.
//!
//! Exit codes: 0 on success, 1 when `self-check` finds a failure, 2 for
//! malformed input, 3 when the input lies on an exceptional set or outside
//! the big cell.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::factor::{self, Chart, ZetaCoords};
use crate::haar;
use crate::json::{self, CoordsJson, DualJson, ErrorJson, ForwardJson, LduJson, ZetaJson};
use crate::matrep::Realization;
use crate::matrix::Matrix;
use crate::rootsys::{Family, Root, RootSystem};
use crate::scalar::Scalar;
use crate::weyl;

#[derive(Debug, Parser)]
#[command(name = "rootsub", version, about = "Root subgroup factorization for classical groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct Group {
    /// A (GL(rank+1)), B, C or D
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    /// Lie rank
    #[arg(long)]
    pub rank: usize,
}

#[derive(Debug, Clone, Args)]
pub struct WordArg {
    /// Comma-separated simple indices, `r_1` first; defaults to the canonical word.
    #[arg(long)]
    pub word: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// JSON input file, or `-` for standard input.
    #[arg(long)]
    pub input: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coordinates ζ to g = l·u·h and ordered exponential coordinates.
    Forward {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        input: Input,
    },
    /// Ordered exponential coordinates back to ζ.
    Invert {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        input: Input,
    },
    /// LDU factorization of a square matrix.
    Ldu {
        #[command(flatten)]
        input: Input,
        /// Compute every entry from minors instead of by elimination.
        #[arg(long)]
        minors: bool,
    },
    /// The root ordering induced by a reduced word.
    Ordering {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        word: WordArg,
    },
    /// Recover the reduced word inducing an ordering (JSON list of λ-coefficient vectors).
    ValidateOrdering {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        input: Input,
    },
    /// The canonical reduced word for the longest element.
    CanonicalWord {
        #[command(flatten)]
        group: Group,
    },
    /// Count reduced words of the longest element by enumeration and by formula.
    CountWords {
        #[command(flatten)]
        group: Group,
        /// Enumeration budget.
        #[arg(long, default_value_t = 2_000_000)]
        cap: usize,
    },
    /// Jacobian determinant of the forward map by three routes.
    Jacobian {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        input: Input,
    },
    /// Haar density at ζ.
    HaarDensity {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        input: Input,
    },
    /// Coordinates η of g^{-t}.
    Dual {
        #[command(flatten)]
        group: Group,
        #[command(flatten)]
        word: WordArg,
        #[command(flatten)]
        input: Input,
    },
    /// Built-in consistency checks on fixed seeds.
    SelfCheck,
}

fn parse_family(s: &str) -> std::result::Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// JSON text plus exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub body: String,
}

impl Outcome {
    fn ok<T: Serialize>(value: &T) -> Self {
        Outcome { code: 0, body: json::render(value) }
    }

    pub fn from_error(e: &Error) -> Self {
        let code = if e.is_degenerate() { 3 } else { 2 };
        Outcome { code, body: json::render(&ErrorJson::from(e)) }
    }
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> Result<String> {
    if input.input == "-" {
        let mut text = String::new();
        stdin.read_to_string(&mut text).map_err(|e| Error::invalid(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        std::fs::read_to_string(&input.input).map_err(|e| Error::invalid(format!("reading {}: {e}", input.input)))
    }
}

fn realization(group: &Group) -> Result<Realization> {
    Realization::new(&RootSystem::new(group.family, group.rank)?)
}

fn chart(group: &Group, word: &WordArg) -> Result<Chart> {
    let real = realization(group)?;
    match &word.word {
        Some(w) => Chart::longest(&real, &w.parse()?),
        None => Chart::canonical(&real),
    }
}

fn zeta_input(chart: &Chart, input: &Input, stdin: &mut dyn Read) -> Result<ZetaCoords<Scalar>> {
    let z: ZetaJson = json::parse(&read_input(input, stdin)?)?;
    let z = z.into_coords(chart.size())?;
    if z.len() != chart.len() {
        return Err(Error::invalid(format!("expected {} coordinate pairs, got {}", chart.len(), z.len())));
    }
    if !chart.realization().is_torus_element(&z.h) {
        return Err(Error::invalid("h is not a diagonal element of the group"));
    }
    Ok(z)
}

fn labels(roots: &[Root]) -> Vec<String> {
    roots.iter().map(Root::to_string).collect()
}

/// Runs one command; errors are already folded into the outcome.
pub fn execute(command: &Command, stdin: &mut dyn Read) -> Outcome {
    match dispatch(command, stdin) {
        Ok(o) => o,
        Err(e) => Outcome::from_error(&e),
    }
}

fn dispatch(command: &Command, stdin: &mut dyn Read) -> Result<Outcome> {
    match command {
        Command::Forward { group, word, input } => {
            let chart = chart(group, word)?;
            let zeta = zeta_input(&chart, input, stdin)?;
            let (g, c) = factor::forward_map(&chart, &zeta)?;
            Ok(Outcome::ok(&ForwardJson { g, l: c.l, u: c.u, h: c.h }))
        }
        Command::Invert { group, word, input } => {
            let chart = chart(group, word)?;
            let c: CoordsJson = json::parse(&read_input(input, stdin)?)?;
            let c = c.into_coords(chart.size())?;
            if !chart.realization().is_torus_element(&c.h) {
                return Err(Error::invalid("h is not a diagonal element of the group"));
            }
            Ok(Outcome::ok(&ZetaJson::from(&factor::inverse_map(&chart, &c)?)))
        }
        Command::Ldu { input, minors } => {
            let g: Matrix<Scalar> = json::parse(&read_input(input, stdin)?)?;
            let f = if *minors { factor::ldu_minors(&g)? } else { factor::ldu(&g)? };
            Ok(Outcome::ok(&LduJson::from(&f)))
        }
        Command::Ordering { group, word } => {
            let rs = RootSystem::new(group.family, group.rank)?;
            let w = match &word.word {
                Some(w) => w.parse()?,
                None => weyl::canonical_word(group.family, group.rank)?,
            };
            let ordering = weyl::ordering_from_word(&rs, &w)?;
            Ok(Outcome::ok(&json!({
                "word": w,
                "ordering": ordering.roots,
                "labels": labels(&ordering.roots),
            })))
        }
        Command::ValidateOrdering { group, input } => {
            let rs = RootSystem::new(group.family, group.rank)?;
            let ordering: Vec<Root> = json::parse(&read_input(input, stdin)?)?;
            if ordering.iter().any(|r| r.dim() != rs.dim()) {
                return Err(Error::invalid(format!("roots must have {} coefficients", rs.dim())));
            }
            let w = weyl::validate_ordering(&rs, &ordering)?;
            Ok(Outcome::ok(&json!({ "valid": true, "word": w })))
        }
        Command::CanonicalWord { group } => {
            RootSystem::new(group.family, group.rank)?;
            Ok(Outcome::ok(&json!({ "word": weyl::canonical_word(group.family, group.rank)? })))
        }
        Command::CountWords { group, cap } => {
            let rs = RootSystem::new(group.family, group.rank)?;
            let enumerated = weyl::enumerate_reduced_words(&rs, &weyl::longest_element(&rs), *cap)?.len();
            let body = match group.family {
                Family::A => {
                    json!({ "enumerated": enumerated, "formula": weyl::stanley_count(group.rank as u64 + 1)?.to_string().parse::<u64>().unwrap_or(u64::MAX) })
                }
                Family::B | Family::C => {
                    let printed = weyl::kraskiewicz_printed(group.rank as u64);
                    json!({
                        "enumerated": enumerated,
                        "printed_formula": printed.to_string(),
                        "agrees": printed == num_rational::BigRational::from_integer(enumerated.into()),
                    })
                }
                Family::D => json!({ "enumerated": enumerated }),
            };
            Ok(Outcome::ok(&body))
        }
        Command::Jacobian { group, word, input } => {
            let chart = chart(group, word)?;
            let zeta = zeta_input(&chart, input, stdin)?;
            let formula = factor::jacobian_det_formula(&chart, &zeta)?;
            let double = factor::jacobian_double_product(&chart, &zeta).ok();
            let ad = factor::jacobian_det_ad(&chart, &zeta)?;
            let equal = double.as_ref().is_none_or(|d| *d == formula) && ad == formula;
            Ok(Outcome::ok(&json!({ "formula": formula, "double_product": double, "ad": ad, "equal": equal })))
        }
        Command::HaarDensity { group, word, input } => {
            let chart = chart(group, word)?;
            let zeta = zeta_input(&chart, input, stdin)?;
            let density = haar::haar_density(&chart, &zeta)?;
            let modulus = haar::jacobian_modulus_sqr(&chart, &zeta)?;
            Ok(Outcome::ok(&json!({
                "density": Scalar::real(density.clone()),
                "jacobian_modulus_sqr": Scalar::real(modulus.clone()),
                "equal": density == modulus,
            })))
        }
        Command::Dual { group, word, input } => {
            let chart = chart(group, word)?;
            let zeta = zeta_input(&chart, input, stdin)?;
            Ok(Outcome::ok(&DualJson::from(&factor::transpose_dual(&chart, &zeta)?)))
        }
        Command::SelfCheck => Ok(self_check()),
    }
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
}

fn self_check() -> Outcome {
    let mut checks = Vec::new();
    let groups = [
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 3),
        (Family::D, 4),
    ];
    for (f, r) in groups {
        let pass = RootSystem::new(f, r)
            .and_then(|rs| Realization::new(&rs))
            .and_then(|real| Chart::canonical(&real))
            .map(|c| factor::delta_identity_check(&c))
            .unwrap_or(false);
        checks.push(Check { name: format!("delta identity {f}{r}"), pass });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for (f, r) in [(Family::A, 2), (Family::A, 3), (Family::B, 2), (Family::C, 2), (Family::D, 3)] {
        let pass = jacobian_routes_agree(f, r, &mut rng).unwrap_or(false);
        checks.push(Check { name: format!("jacobian triple equality {f}{r}"), pass });
    }
    for n in 3..=5u64 {
        let pass = (|| -> Result<bool> {
            let rs = RootSystem::new(Family::A, n as usize - 1)?;
            let words = weyl::enumerate_reduced_words(&rs, &weyl::longest_element(&rs), 100_000)?;
            Ok(num_bigint::BigUint::from(words.len()) == weyl::stanley_count(n)?)
        })()
        .unwrap_or(false);
        checks.push(Check { name: format!("stanley count n={n}"), pass });
    }
    let pass = checks.iter().all(|c| c.pass);
    Outcome { code: if pass { 0 } else { 1 }, body: json::render(&json!({ "pass": pass, "checks": checks })) }
}

fn jacobian_routes_agree(f: Family, r: usize, rng: &mut ChaCha8Rng) -> Result<bool> {
    let chart = Chart::canonical(&Realization::new(&RootSystem::new(f, r)?)?)?;
    for _ in 0..5 {
        let n = chart.len();
        let mut q = || Scalar::from_ratio(rng.gen_range(-5..6), rng.gen_range(1..4));
        let zeta = ZetaCoords::from_pairs((0..n).map(|_| q()).collect(), (0..n).map(|_| q()).collect(), chart.size())?;
        let formula = factor::jacobian_det_formula(&chart, &zeta)?;
        if factor::jacobian_det_ad(&chart, &zeta)? != formula {
            return Ok(false);
        }
        if let Ok(d) = factor::jacobian_double_product(&chart, &zeta) {
            if d != formula {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Parses arguments, runs, writes the result. Returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = execute(&cli.command, &mut std::io::stdin());
    let text = format!("{}\n", outcome.body);
    match (&cli.output, outcome.code) {
        (Some(path), 0 | 1) => {
            if let Err(e) = std::fs::write(path, text) {
                let err = Error::invalid(format!("writing {}: {e}", path.display()));
                println!("{}", Outcome::from_error(&err).body);
                return 2;
            }
        }
        _ => print!("{text}"),
    }
    outcome.code
}
