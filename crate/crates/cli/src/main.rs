use std::collections::BTreeSet;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sgp_core::construct::{self, BSelector, Dim6Params, DuplicationSpec};
use sgp_core::gorenstein;
use sgp_core::rf::{self, DEFAULT_MATRIX_CAP};
use sgp_core::verify::{self, CheckOptions, HarnessConfig, DEFAULT_PAIR_CAP};
use sgp_core::{Error, NumericalSemigroup, RfKind};

mod payload;
mod pretty;

const SCHEMA_VERSION: &str = "1";
const MATRIX_CAP_VAR: &str = "SGP_MATRIX_CAP";

#[derive(Parser)]
#[command(
    name = "sgp",
    version,
    about = "Nearly Gorenstein numerical semigroups"
)]
struct Cli {
    /// Human-readable tables instead of JSON lines.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Basic invariants: Frobenius number, genus, PF(S), type, symmetry flags.
    Info { gens: Gens },
    /// All NG-vectors with their h / ell annotations.
    NgVectors { gens: Gens },
    /// RF+ or RF- matrices of a pseudo-Frobenius number.
    Rf(RfArgs),
    /// PF1 / PF2 split of PF(S) for each NG-vector.
    ClassifyPf {
        gens: Gens,
        /// Restrict to one NG-vector (1-based, in `ng-vectors` order).
        #[arg(long)]
        ng_index: Option<usize>,
    },
    /// Check the registered claims over a genus range or one semigroup.
    Verify(VerifyArgs),
    /// Build members of the known families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Args)]
struct RfArgs {
    gens: Gens,
    #[arg(long)]
    f: i64,
    #[arg(long, value_enum, default_value_t = KindArg::Plus)]
    kind: KindArg,
    /// NG-vector used for RF- (1-based, in `ng-vectors` order).
    #[arg(long)]
    ng_index: Option<usize>,
    /// Print only the number of matrices.
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Plus,
    Minus,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 20)]
    genus_max: u64,
    /// Only semigroups with these embedding dimensions.
    #[arg(long, value_delimiter = ',')]
    embdim: Vec<usize>,
    /// Comma-separated claim ids (default: all).
    #[arg(long)]
    claims: Option<String>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Matrix pairs examined per pseudo-Frobenius number before sampling.
    #[arg(long, default_value_t = DEFAULT_PAIR_CAP)]
    pair_cap: usize,
    /// Check one semigroup instead of the genus range.
    #[arg(long)]
    gens: Option<Gens>,
    /// Emit every report, not only failing or flagged ones.
    #[arg(long)]
    all: bool,
}

#[derive(Subcommand)]
enum Family {
    /// Backelin's semigroups <s, s+3, s+3T+1, s+3T+2>, s = (3T+2)^2 + 3.
    Backelin {
        #[arg(long = "T")]
        t: i64,
    },
    /// The six-generated family with an arithmetic progression in PF(S).
    Dim6 {
        #[arg(long = "T")]
        t: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        d: i64,
    },
    /// Numerical duplication of S with its maximal ideal.
    Duplication {
        #[arg(long)]
        gens: Gens,
        #[arg(long)]
        b: i64,
    },
    /// Iterated duplication of an almost symmetric semigroup.
    Tower {
        #[arg(long)]
        gens: Gens,
        #[arg(long, default_value_t = 1)]
        depth: usize,
        /// Use the k-th smallest odd element as b at every level (default 1).
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        b_index: u64,
    },
}

/// Comma-separated generator list.
#[derive(Clone, Debug)]
struct Gens(Vec<i64>);

impl std::str::FromStr for Gens {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|e| format!("bad generator {x:?}: {e}"))
            })
            .collect::<Result<_, _>>()
            .map(Gens)
    }
}

enum Failure {
    Usage(String),
    Core(Error),
    /// Output already written; exit 1.
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<(), Failure>;

struct Out {
    pretty: bool,
    stdout: io::StdoutLock<'static>,
}

impl Out {
    fn emit(&mut self, kind: &str, payload: Value) {
        let text = if self.pretty {
            pretty::render(kind, &payload)
        } else {
            format!(
                r#"{{"schema_version":"{SCHEMA_VERSION}","kind":"{kind}","payload":{payload}}}"#
            )
        };
        // a closed pipe is not an error worth reporting
        let _ = writeln!(self.stdout, "{text}");
    }
}

fn semigroup(g: &Gens) -> Result<NumericalSemigroup, Failure> {
    Ok(NumericalSemigroup::new(&g.0)?)
}

fn matrix_cap() -> Result<u128, Failure> {
    match std::env::var(MATRIX_CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Usage(format!(
                "{MATRIX_CAP_VAR}={v:?} is not a nonnegative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MATRIX_CAP),
    }
}

fn pick_vector(s: &NumericalSemigroup, index: usize) -> Result<sgp_core::NgVector, Failure> {
    let mut all = gorenstein::ng_vectors(s)?;
    if index == 0 || index > all.len() {
        return Err(Failure::Usage(format!(
            "--ng-index {index} out of range 1..={}",
            all.len()
        )));
    }
    Ok(all.swap_remove(index - 1))
}

fn ng_vector_count(s: &NumericalSemigroup) -> Result<u128, Failure> {
    let cands = gorenstein::ng_candidates(s);
    if cands.iter().any(|t| t.is_empty()) {
        return Err(Error::NotNearlyGorenstein.into());
    }
    let count = cands
        .iter()
        .fold(1u128, |acc, t| acc.saturating_mul(t.len() as u128));
    let cap = matrix_cap()?;
    if count > cap {
        return Err(Error::EnumerationCap { count, cap }.into());
    }
    Ok(count)
}

fn cmd_ng_vectors(out: &mut Out, g: &Gens) -> Outcome {
    let s = semigroup(g)?;
    ng_vector_count(&s)?;
    let vectors = gorenstein::ng_vectors(&s)?;
    out.emit(
        "ngvectors",
        json!({
            "generators": s.generators(),
            "frobenius": s.frobenius(),
            "candidates": gorenstein::ng_candidates(&s),
            "vectors": vectors.iter().map(payload::ng_vector).collect::<Vec<_>>(),
        }),
    );
    Ok(())
}

fn cmd_rf(out: &mut Out, a: &RfArgs) -> Outcome {
    let s = semigroup(&a.gens)?;
    let en = match a.kind {
        KindArg::Plus => rf::rf_plus_enumeration(&s, a.f)?,
        KindArg::Minus => {
            let Some(idx) = a.ng_index else {
                return Err(Failure::Usage("--kind minus needs --ng-index".into()));
            };
            if !s.is_pseudo_frobenius(a.f) {
                return Err(Error::NotPseudoFrobenius(a.f).into());
            }
            ng_vector_count(&s)?;
            rf::rf_minus_enumeration(&s, &pick_vector(&s, idx)?, a.f)?
        }
    };
    let kind = match a.kind {
        KindArg::Plus => RfKind::Plus,
        KindArg::Minus => RfKind::Minus,
    };
    let count = en.count();
    if a.count {
        out.emit(
            "rf",
            json!({
                "generators": s.generators(),
                "kind": kind,
                "f": a.f,
                "count": count.to_string(),
                "row_counts": en.rows().iter().map(Vec::len).collect::<Vec<_>>(),
            }),
        );
        return Ok(());
    }
    let cap = matrix_cap()?;
    if count > cap {
        return Err(Error::EnumerationCap { count, cap }.into());
    }
    for (i, m) in en.iter().enumerate() {
        let mut p = payload::matrix(&m);
        p["index"] = json!(i + 1);
        p["of"] = json!(count.to_string());
        out.emit("rf", p);
    }
    Ok(())
}

fn cmd_classify(out: &mut Out, g: &Gens, index: Option<usize>) -> Outcome {
    let s = semigroup(g)?;
    ng_vector_count(&s)?;
    let vectors = match index {
        Some(i) => vec![pick_vector(&s, i)?],
        None => gorenstein::ng_vectors(&s)?,
    };
    for v in &vectors {
        let c = rf::classify_pf(&s, v)?;
        let mu = (s.embedding_dimension() == 5)
            .then(|| rf::mu_values(&s, &c))
            .transpose()?;
        let mut p = payload::classification(&c, mu.as_ref());
        p["generators"] = json!(s.generators());
        out.emit("classify", p);
    }
    Ok(())
}

fn cmd_verify(out: &mut Out, a: &VerifyArgs) -> Outcome {
    let claims = match &a.claims {
        Some(list) => verify::parse_claims(list).map_err(Failure::Usage)?,
        None => verify::Claim::ALL.to_vec(),
    };
    if let Some(g) = &a.gens {
        let s = semigroup(g)?;
        let opts = CheckOptions {
            seed: a.seed,
            pair_cap: a.pair_cap,
        };
        let report = verify::check_semigroup(&s, &claims, opts);
        let failed = report.has_failure();
        out.emit("verify", json!({ "report": report }));
        return if failed {
            Err(Failure::Violation)
        } else {
            Ok(())
        };
    }
    let cfg = HarnessConfig {
        genus_max: a.genus_max,
        embdim_filter: (!a.embdim.is_empty())
            .then(|| a.embdim.iter().copied().collect::<BTreeSet<_>>()),
        claims,
        workers: a.workers as usize,
        seed: a.seed,
        pair_cap: a.pair_cap,
    };
    let summary = verify::check_all(&cfg, |r| {
        let notable = r.claims.iter().any(|c| {
            matches!(
                c.status,
                verify::ClaimStatus::Fail | verify::ClaimStatus::Flagged
            )
        });
        if a.all || notable {
            out.emit("verify", json!({ "report": r }));
        }
    });
    let failed = summary.total_failures > 0;
    out.emit("verify", json!({ "summary": summary }));
    if failed {
        Err(Failure::Violation)
    } else {
        Ok(())
    }
}

fn cmd_construct(out: &mut Out, family: &Family) -> Outcome {
    let p = match family {
        Family::Backelin { t } => {
            let s = construct::backelin(*t)?;
            json!({
                "family": "backelin",
                "params": { "T": t },
                "f": construct::backelin_f(*t),
                "semigroup": payload::info(&s),
            })
        }
        Family::Dim6 { t, k, d } => {
            let params = Dim6Params {
                t: *t,
                d: *d,
                k: *k,
            };
            let s = construct::family_dim6(*t, *d, *k)?;
            json!({
                "family": "dim6",
                "params": { "T": t, "k": k, "d": d },
                "labeled_generators": params.labeled_generators(),
                "f": params.f(),
                "progression": params.progression(),
                "semigroup": payload::info(&s),
            })
        }
        Family::Duplication { gens, b } => {
            let base = semigroup(gens)?;
            let spec = DuplicationSpec::with_maximal_ideal(base.clone(), *b)?;
            let s = construct::numerical_duplication(&spec)?;
            json!({
                "family": "duplication",
                "params": { "base": base.generators(), "b": b },
                "semigroup": payload::info(&s),
            })
        }
        Family::Tower {
            gens,
            depth,
            b_index,
        } => {
            let base = semigroup(gens)?;
            let selector = match b_index {
                1 => BSelector::SmallestOdd,
                k => BSelector::NthOdd(*k as usize - 1),
            };
            let tower = construct::duplication_tower(&base, *depth, selector)?;
            let levels: Vec<Value> = tower
                .iter()
                .map(|x| {
                    let (nu, t) = (x.embedding_dimension(), x.semigroup_type());
                    json!({
                        "generators": x.generators(),
                        "embedding_dimension": nu,
                        "type": t,
                        "excess": t as i64 - 2 * nu as i64,
                    })
                })
                .collect();
            json!({
                "family": "tower",
                "params": { "base": base.generators(), "depth": depth, "b_index": b_index },
                "levels": levels,
                "semigroup": payload::info(tower.last().expect("tower is nonempty")),
            })
        }
    };
    out.emit("construct", p);
    Ok(())
}

fn kind_of(c: &Command) -> &'static str {
    match c {
        Command::Info { .. } => "info",
        Command::NgVectors { .. } => "ngvectors",
        Command::Rf(_) => "rf",
        Command::ClassifyPf { .. } => "classify",
        Command::Verify(_) => "verify",
        Command::Construct { .. } => "construct",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out {
        pretty: cli.pretty,
        stdout: io::stdout().lock(),
    };
    let result = match &cli.command {
        Command::Info { gens } => semigroup(gens).map(|s| out.emit("info", payload::info(&s))),
        Command::NgVectors { gens } => cmd_ng_vectors(&mut out, gens),
        Command::Rf(a) => cmd_rf(&mut out, a),
        Command::ClassifyPf { gens, ng_index } => cmd_classify(&mut out, gens, *ng_index),
        Command::Verify(a) => cmd_verify(&mut out, a),
        Command::Construct { family } => cmd_construct(&mut out, family),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            // mathematical outcomes exit 1, bad input exits 2
            let code = match e {
                Error::NotNearlyGorenstein | Error::PostconditionFailed(_) => 1,
                _ => 2,
            };
            out.emit(
                kind_of(&cli.command),
                json!({ "error": e.code(), "message": e.to_string() }),
            );
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
