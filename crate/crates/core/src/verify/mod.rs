//! Exhaustive enumeration by genus and empirical checking of the type bounds
//! and structural lemmas for nearly Gorenstein semigroups.

mod claims;
mod tree;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::Value;

pub use tree::{children, GenusTree};

use crate::semigroup::NumericalSemigroup;
use claims::Context;

/// Default number of (RF+, RF-) pairs examined per pseudo-Frobenius number
/// before switching to seeded sampling.
pub const DEFAULT_PAIR_CAP: usize = 10_000;

macro_rules! claims {
    ($($variant:ident => $id:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum Claim {
            $($variant,)*
        }

        impl Claim {
            pub const ALL: &'static [Claim] = &[$(Claim::$variant,)*];

            pub fn id(self) -> &'static str {
                match self {
                    $(Claim::$variant => $id,)*
                }
            }
        }

        impl FromStr for Claim {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s.trim() {
                    $($id => Ok(Claim::$variant),)*
                    other => Err(format!("unknown claim id {other:?}")),
                }
            }
        }
    };
}

claims! {
    Herzog3 => "HERZOG3",
    Ng4Type3 => "NG4_TYPE3",
    As4Type3 => "AS4_TYPE3",
    ThmMain => "THM_MAIN",
    Thm3Distinct => "THM_3DISTINCT",
    Pf2Bound => "PF2_BOUND",
    Pf1Bound => "PF1_BOUND",
    MuBound => "MU_BOUND",
    Coppie => "COPPIE",
    FirstZero => "FIRST_ZERO",
    NgvProps => "NGV_PROPS",
    AsImpliesNg => "AS_IMPLIES_NG",
    TraceEq => "TRACE_EQ",
    Pf2TwoZeroes => "PF2_TWO_ZEROES",
    Same2 => "SAME2",
    QuestionMs => "QUESTION_MS",
}

impl Claim {
    /// Report-only claims never count as failures.
    pub fn is_report_only(self) -> bool {
        self == Claim::QuestionMs
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.id())
    }
}

/// Parses a comma-separated list of claim ids.
pub fn parse_claims(list: &str) -> Result<Vec<Claim>, String> {
    let mut out: Vec<Claim> = list
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Inapplicable,
    /// Candidate for an open question; informational only.
    Flagged,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimResult {
    pub claim: Claim,
    pub status: ClaimStatus,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub genus: u64,
    pub nu: usize,
    pub t: usize,
    #[serde(rename = "F")]
    pub frobenius: i64,
    pub ng: bool,
    #[serde(rename = "as")]
    pub almost_symmetric: bool,
    pub ng_vectors: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub semigroup: Vec<i64>,
    pub invariants: Invariants,
    pub claims: Vec<ClaimResult>,
    /// Some PF element is in PF1 for one NG-vector and PF2 for another.
    pub classification_varies: bool,
    #[serde(serialize_with = "as_seconds")]
    pub elapsed: Duration,
}

fn as_seconds<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl CheckReport {
    pub fn failures(&self) -> impl Iterator<Item = &ClaimResult> {
        self.claims.iter().filter(|c| c.status == ClaimStatus::Fail)
    }

    pub fn has_failure(&self) -> bool {
        self.failures().next().is_some()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HarnessConfig {
    pub genus_max: u64,
    pub embdim_filter: Option<BTreeSet<usize>>,
    pub claims: Vec<Claim>,
    /// Left out of serialized output: results do not depend on it.
    #[serde(skip_serializing)]
    pub workers: usize,
    pub seed: u64,
    pub pair_cap: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            genus_max: 20,
            embdim_filter: None,
            claims: Claim::ALL.to_vec(),
            workers: 1,
            seed: 0,
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }
}

impl HarnessConfig {
    fn admits(&self, s: &NumericalSemigroup) -> bool {
        self.embdim_filter
            .as_ref()
            .is_none_or(|f| f.contains(&s.embedding_dimension()))
    }
}

/// Options for a single evaluation.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    pub seed: u64,
    pub pair_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            pair_cap: DEFAULT_PAIR_CAP,
        }
    }
}

/// Evaluates `claims` on one semigroup. Every requested claim appears once
/// in the report, in the order of [`Claim::ALL`].
pub fn check_semigroup(
    s: &NumericalSemigroup,
    claims: &[Claim],
    opts: CheckOptions,
) -> CheckReport {
    let start = Instant::now();
    let ctx = Context::new(s, opts.seed, opts.pair_cap);
    let wanted: BTreeSet<Claim> = claims.iter().copied().collect();
    let results = wanted.iter().map(|&c| claims::check(c, &ctx)).collect();
    CheckReport {
        semigroup: s.generators().to_vec(),
        invariants: Invariants {
            genus: s.genus(),
            nu: ctx.nu,
            t: ctx.semigroup_type(),
            frobenius: s.frobenius(),
            ng: ctx.is_ng,
            almost_symmetric: ctx.is_as,
            ng_vectors: u64::try_from(ctx.vector_count()).unwrap_or(u64::MAX),
        },
        claims: results,
        classification_varies: claims::classification_varies(&ctx),
        elapsed: start.elapsed(),
    }
}

/// Every numerical semigroup of genus at most `cfg.genus_max` passing the
/// embedding dimension filter, in genus-tree pre-order.
pub fn enumerate_semigroups(cfg: &HarnessConfig) -> impl Iterator<Item = NumericalSemigroup> + '_ {
    GenusTree::new(cfg.genus_max).filter(|s| cfg.admits(s))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClaimTally {
    pub pass: u64,
    pub fail: u64,
    pub inapplicable: u64,
    pub flagged: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellMax {
    pub nu: usize,
    pub ng: bool,
    #[serde(rename = "as")]
    pub almost_symmetric: bool,
    pub count: u64,
    pub max_type: usize,
    pub witness: Vec<i64>,
}

/// Order-independent aggregate of a harness run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub config: HarnessConfig,
    pub semigroups: u64,
    pub per_genus: BTreeMap<u64, u64>,
    pub claims: BTreeMap<Claim, ClaimTally>,
    pub total_failures: u64,
    pub failing: Vec<(Vec<i64>, Vec<Claim>)>,
    pub cells: Vec<CellMax>,
    pub flagged: Vec<Vec<i64>>,
    pub classification_varies: Vec<Vec<i64>>,
}

impl Summary {
    fn new(cfg: &HarnessConfig) -> Self {
        Self {
            config: cfg.clone(),
            semigroups: 0,
            per_genus: BTreeMap::new(),
            claims: cfg
                .claims
                .iter()
                .map(|&c| (c, ClaimTally::default()))
                .collect(),
            total_failures: 0,
            failing: Vec::new(),
            cells: Vec::new(),
            flagged: Vec::new(),
            classification_varies: Vec::new(),
        }
    }

    /// Reports must arrive sorted by generator tuple.
    fn absorb(&mut self, r: &CheckReport, cells: &mut BTreeMap<(usize, bool, bool), CellMax>) {
        self.semigroups += 1;
        *self.per_genus.entry(r.invariants.genus).or_default() += 1;
        let mut failed = Vec::new();
        for c in &r.claims {
            let tally = self.claims.entry(c.claim).or_default();
            match c.status {
                ClaimStatus::Pass => tally.pass += 1,
                ClaimStatus::Inapplicable => tally.inapplicable += 1,
                ClaimStatus::Flagged => tally.flagged += 1,
                ClaimStatus::Fail => {
                    tally.fail += 1;
                    if !c.claim.is_report_only() {
                        failed.push(c.claim);
                    }
                }
            }
            if c.status == ClaimStatus::Flagged {
                self.flagged.push(r.semigroup.clone());
            }
        }
        if !failed.is_empty() {
            self.total_failures += failed.len() as u64;
            self.failing.push((r.semigroup.clone(), failed));
        }
        if r.classification_varies {
            self.classification_varies.push(r.semigroup.clone());
        }
        let inv = &r.invariants;
        let key = (inv.nu, inv.ng, inv.almost_symmetric);
        let cell = cells.entry(key).or_insert_with(|| CellMax {
            nu: inv.nu,
            ng: inv.ng,
            almost_symmetric: inv.almost_symmetric,
            count: 0,
            max_type: inv.t,
            witness: r.semigroup.clone(),
        });
        cell.count += 1;
        if inv.t > cell.max_type {
            cell.max_type = inv.t;
            cell.witness = r.semigroup.clone();
        }
    }
}

/// Genus at which the tree is cut into independent subtrees.
fn frontier_genus(genus_max: u64) -> u64 {
    genus_max.min(8)
}

/// Runs every configured claim over the genus range. Reports are handed to
/// `sink` sorted by generator tuple, so output does not depend on
/// `cfg.workers`.
pub fn check_all<F>(cfg: &HarnessConfig, mut sink: F) -> Summary
where
    F: FnMut(&CheckReport),
{
    let opts = CheckOptions {
        seed: cfg.seed,
        pair_cap: cfg.pair_cap,
    };
    let cut = frontier_genus(cfg.genus_max);
    // nodes above the cut are single units; nodes at the cut root subtrees
    let units: Vec<NumericalSemigroup> = GenusTree::new(cut).collect();
    let run = |units: &[NumericalSemigroup]| -> Vec<CheckReport> {
        units
            .par_iter()
            .flat_map_iter(|root| {
                let sub: Box<dyn Iterator<Item = NumericalSemigroup>> = if root.genus() == cut {
                    Box::new(GenusTree::from_root(root.clone(), cfg.genus_max))
                } else {
                    Box::new(std::iter::once(root.clone()))
                };
                sub.filter(|s| cfg.admits(s))
                    .map(|s| check_semigroup(&s, &cfg.claims, opts))
                    .collect::<Vec<_>>()
            })
            .collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .expect("thread pool");
    let mut reports = pool.install(|| run(&units));
    reports.sort_by(|a, b| a.semigroup.cmp(&b.semigroup));

    let mut summary = Summary::new(cfg);
    let mut cells = BTreeMap::new();
    for r in &reports {
        sink(r);
        summary.absorb(r, &mut cells);
    }
    summary.cells = cells.into_values().collect();
    summary
}
