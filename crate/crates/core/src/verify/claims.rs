//! One checker per registered claim. Each works from a shared [`Context`]
//! holding the invariants of a single semigroup.
//!
//! Payload indices are 1-based to match the usual `n_1 < ... < n_nu`
//! labelling.

use std::cell::OnceCell;
use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use super::{Claim, ClaimResult, ClaimStatus};
use crate::gorenstein::{
    is_almost_symmetric_with, nearly_gorenstein_via_trace, ng_candidates_with, ng_vectors_with,
    NgVector,
};
use crate::rf::{
    classify_with, coppie_violation, max_gap_table, mu_values_with, rf_minus_enumeration,
    rf_plus_enumeration, zero_pattern, MaxGapTable, PfClassification, RfEnumeration, RfMatrix,
};
use crate::semigroup::NumericalSemigroup;

pub(crate) struct Context<'a> {
    pub s: &'a NumericalSemigroup,
    pub pf: Vec<i64>,
    pub nu: usize,
    pub is_as: bool,
    pub is_ng: bool,
    /// Candidate sets `T_i`; NG-vectors are exactly their product.
    pub cands: Vec<Vec<i64>>,
    pub table: MaxGapTable,
    vectors: OnceCell<Vec<NgVector>>,
    classes: OnceCell<Vec<PfClassification>>,
    plus: OnceCell<BTreeMap<i64, RfEnumeration>>,
    seed: u64,
    pair_cap: usize,
}

/// Above this many NG-vectors the per-vector pair scan is skipped. Claims
/// over arbitrary embedding dimension are decided on the candidate sets.
const VECTOR_SCAN_CAP: u128 = 4096;

impl<'a> Context<'a> {
    pub fn new(s: &'a NumericalSemigroup, seed: u64, pair_cap: usize) -> Self {
        let pf = s.pseudo_frobenius();
        let is_as = is_almost_symmetric_with(s, &pf);
        let cands = ng_candidates_with(s, &pf);
        let is_ng = cands.iter().all(|t| !t.is_empty());
        Self {
            s,
            nu: s.embedding_dimension(),
            table: max_gap_table(s),
            pf,
            is_as,
            is_ng,
            cands,
            vectors: OnceCell::new(),
            classes: OnceCell::new(),
            plus: OnceCell::new(),
            seed,
            pair_cap,
        }
    }

    pub fn semigroup_type(&self) -> usize {
        self.pf.len()
    }

    pub fn vector_count(&self) -> u128 {
        if !self.is_ng {
            return 0;
        }
        self.cands
            .iter()
            .fold(1u128, |acc, t| acc.saturating_mul(t.len() as u128))
    }

    /// Every NG-vector. Only called where the product is known to be small.
    pub fn vectors(&self) -> &[NgVector] {
        self.vectors.get_or_init(|| {
            if self.is_ng {
                ng_vectors_with(self.s, &self.pf).expect("nearly Gorenstein")
            } else {
                Vec::new()
            }
        })
    }

    pub fn classes(&self) -> &[PfClassification] {
        self.classes.get_or_init(|| {
            self.vectors()
                .iter()
                .map(|v| classify_with(self.s, &self.pf, v))
                .collect()
        })
    }

    fn plus(&self, f: i64) -> &RfEnumeration {
        &self.plus.get_or_init(|| {
            self.pf
                .iter()
                .map(|&g| (g, rf_plus_enumeration(self.s, g).expect("f in PF")))
                .collect()
        })[&f]
    }

    fn minus(&self, v: &NgVector, f: i64) -> RfEnumeration {
        rf_minus_enumeration(self.s, v, f).expect("f in PF outside the NG-vector")
    }

    /// Whether some NG-vector avoids every value in `excl`.
    fn avoidable(&self, excl: &[i64]) -> bool {
        self.cands
            .iter()
            .all(|t| t.iter().any(|g| !excl.contains(g)))
    }

    /// PF elements outside the entries of `v`.
    fn outside<'b>(&'b self, v: &'b NgVector) -> impl Iterator<Item = i64> + 'b {
        self.pf.iter().copied().filter(move |&f| !v.has_entry(f))
    }

    /// Indices `h` that can be the first index with `f_h != F(S)`.
    fn first_divergent(&self) -> impl Iterator<Item = usize> + '_ {
        let frob = self.s.frobenius();
        (0..self.nu).take_while(move |&h| h == 0 || self.cands[h - 1].contains(&frob))
    }

    fn fail(&self, detail: Value) -> ClaimStatusWithPayload {
        (
            ClaimStatus::Fail,
            json!({
                "generators": self.s.generators(),
                "pf": self.pf,
                "detail": detail,
            }),
        )
    }

    /// Visits (RF+, RF-) pairs: all of them when there are at most
    /// `pair_cap`, otherwise `pair_cap` pairs drawn with a seeded generator.
    /// Stops at the first pair for which `ok` is false and returns it.
    fn scan_pairs<F>(
        &self,
        plus: &RfEnumeration,
        minus: &RfEnumeration,
        salt: u64,
        ok: F,
    ) -> PairScan
    where
        F: Fn(&RfMatrix, &RfMatrix) -> bool,
    {
        let (ca, cb) = (plus.count(), minus.count());
        let total = ca.saturating_mul(cb);
        let cap = self.pair_cap as u128;
        let mut scan = PairScan {
            checked: 0,
            sampled: total > cap,
            bad: None,
        };
        let visit = |a: RfMatrix, b: RfMatrix, scan: &mut PairScan| {
            scan.checked += 1;
            if !ok(&a, &b) {
                scan.bad = Some((a, b));
                return false;
            }
            true
        };
        if total <= cap {
            'outer: for a in plus.iter() {
                for b in minus.iter() {
                    if !visit(a.clone(), b, &mut scan) {
                        break 'outer;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(mix(self.seed, self.s.generators(), salt));
            for _ in 0..cap {
                let a = plus.matrix_at(rng.random_range(0..ca));
                let b = minus.matrix_at(rng.random_range(0..cb));
                if !visit(a, b, &mut scan) {
                    break;
                }
            }
        }
        scan
    }
}

struct PairScan {
    checked: u64,
    sampled: bool,
    bad: Option<(RfMatrix, RfMatrix)>,
}

type ClaimStatusWithPayload = (ClaimStatus, Value);

fn mix(seed: u64, gens: &[i64], salt: u64) -> u64 {
    let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
    for &x in gens.iter().chain(std::iter::once(&(salt as i64))) {
        h = (h ^ x as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        h ^= h >> 31;
    }
    h
}

fn matrix_json(m: &RfMatrix) -> Value {
    json!({ "kind": m.kind, "f": m.f, "entries": m.entries, "ng": m.ng })
}

fn inapplicable() -> ClaimStatusWithPayload {
    (ClaimStatus::Inapplicable, Value::Null)
}

fn pass() -> ClaimStatusWithPayload {
    (ClaimStatus::Pass, Value::Null)
}

fn type_bound(ctx: &Context, applies: bool, bound: usize) -> ClaimStatusWithPayload {
    if !applies {
        return inapplicable();
    }
    let t = ctx.semigroup_type();
    if t <= bound {
        pass()
    } else {
        ctx.fail(json!({ "type": t, "bound": bound }))
    }
}

/// Whether `v` is a nonnegative combination of `gens`.
fn representable(gens: &[i64], v: i64) -> bool {
    if v < 0 {
        return false;
    }
    let v = v as usize;
    let mut reach = vec![false; v + 1];
    reach[0] = true;
    for x in 1..=v {
        reach[x] = gens
            .iter()
            .any(|&g| (g as usize) <= x && reach[x - g as usize]);
    }
    reach[v]
}

pub(crate) fn check(claim: Claim, ctx: &Context) -> ClaimResult {
    let (status, witness) = if ctx.s.is_whole() {
        inapplicable()
    } else {
        match claim {
            Claim::Herzog3 => type_bound(ctx, ctx.nu == 3, 2),
            Claim::Ng4Type3 => type_bound(ctx, ctx.nu == 4 && ctx.is_ng, 3),
            Claim::As4Type3 => type_bound(ctx, ctx.nu == 4 && ctx.is_as, 3),
            Claim::ThmMain => type_bound(ctx, ctx.nu == 5 && ctx.is_ng && !ctx.is_as, 40),
            Claim::Thm3Distinct => thm_3distinct(ctx),
            Claim::Pf2Bound => pf2_bound(ctx),
            Claim::Pf1Bound => pf1_bound(ctx),
            Claim::MuBound => mu_bound(ctx),
            Claim::Coppie => coppie(ctx),
            Claim::FirstZero => first_zero(ctx),
            Claim::NgvProps => ngv_props(ctx),
            Claim::AsImpliesNg => {
                if !ctx.is_as {
                    inapplicable()
                } else if ctx.is_ng {
                    pass()
                } else {
                    ctx.fail(json!("almost symmetric but no NG-vector"))
                }
            }
            Claim::TraceEq => {
                let trace = nearly_gorenstein_via_trace(ctx.s);
                if trace == ctx.is_ng {
                    pass()
                } else {
                    ctx.fail(json!({ "ng_vectors_exist": ctx.is_ng, "trace_contains_m": trace }))
                }
            }
            Claim::Pf2TwoZeroes => pf2_two_zeroes(ctx),
            Claim::Same2 => same2(ctx),
            Claim::QuestionMs => {
                if ctx.nu != 5 || !ctx.is_ng {
                    inapplicable()
                } else {
                    let t = ctx.semigroup_type();
                    if t > 5 || (t == 5 && !ctx.is_as) {
                        (
                            ClaimStatus::Flagged,
                            json!({ "generators": ctx.s.generators(), "type": t, "almost_symmetric": ctx.is_as }),
                        )
                    } else {
                        pass()
                    }
                }
            }
        }
    };
    ClaimResult {
        claim,
        status,
        witness,
    }
}

/// Five generators, nearly Gorenstein, not almost symmetric.
fn main_section_applies(ctx: &Context) -> bool {
    ctx.nu == 5 && ctx.is_ng && !ctx.is_as
}

fn thm_3distinct(ctx: &Context) -> ClaimStatusWithPayload {
    if ctx.nu != 5 || !ctx.is_ng {
        return inapplicable();
    }
    let mut applied = false;
    for v in ctx.vectors() {
        let e = &v.entries;
        if e[0] == e[1] || e[0] == e[2] || e[1] == e[2] {
            continue;
        }
        applied = true;
        let allowed = [e[0], e[1], e[2], ctx.table.gap(3, 4), ctx.table.gap(4, 3)];
        let stray: Vec<i64> = ctx
            .pf
            .iter()
            .copied()
            .filter(|f| !allowed.contains(f))
            .collect();
        if ctx.semigroup_type() > 5 || !stray.is_empty() {
            return ctx.fail(json!({
                "ng_vector": e,
                "allowed": allowed,
                "outside": stray,
                "type": ctx.semigroup_type(),
            }));
        }
    }
    if applied {
        pass()
    } else {
        inapplicable()
    }
}

fn pf2_bound(ctx: &Context) -> ClaimStatusWithPayload {
    if !main_section_applies(ctx) {
        return inapplicable();
    }
    for c in ctx.classes() {
        if c.pf2.len() > 6 {
            return ctx.fail(json!({ "ng_vector": c.ng.entries, "pf2": c.pf2 }));
        }
    }
    pass()
}

fn pf1_bound(ctx: &Context) -> ClaimStatusWithPayload {
    if !main_section_applies(ctx) {
        return inapplicable();
    }
    let frob = ctx.s.frobenius();
    for c in ctx.classes() {
        let bound = if c.ng.divergent_count(frob) >= 2 {
            30
        } else {
            31
        };
        if c.pf1.len() > bound {
            return ctx.fail(json!({ "ng_vector": c.ng.entries, "pf1": c.pf1, "bound": bound }));
        }
    }
    pass()
}

fn mu_bound(ctx: &Context) -> ClaimStatusWithPayload {
    if !main_section_applies(ctx) {
        return inapplicable();
    }
    for c in ctx.classes() {
        let mu = mu_values_with(ctx.s, c, &ctx.table).expect("five generators");
        if c.pf1.len() as i64 > mu.bound {
            return ctx.fail(json!({ "ng_vector": c.ng.entries, "pf1": c.pf1, "mu": mu }));
        }
    }
    pass()
}

fn coppie(ctx: &Context) -> ClaimStatusWithPayload {
    if ctx.nu < 2 || !ctx.is_ng {
        return inapplicable();
    }
    let n = ctx.s.generators();
    let mut any = false;
    // A violating pair exists iff some row j of RF+(f) can use n_k while
    // row k of RF-(f) can use n_j. Row k of RF- depends only on f_k, so
    // this covers every NG-vector.
    for &f in &ctx.pf {
        if !ctx.avoidable(&[f]) {
            continue;
        }
        any = true;
        let plus = ctx.plus(f);
        for (k, (&nk, cands)) in n.iter().zip(&ctx.cands).enumerate() {
            for &fk in cands.iter().filter(|&&g| g != f) {
                let minus_row = ctx.s.factorizations(nk + fk - f);
                for j in (0..ctx.nu).filter(|&j| j != k) {
                    let a = plus.rows()[j].iter().find(|x| x.coeffs[k] > 0);
                    let b = minus_row.iter().find(|x| x.coeffs[j] > 0);
                    if let (Some(a), Some(b)) = (a, b) {
                        return ctx.fail(json!({
                            "f": f,
                            "j": j + 1,
                            "k": k + 1,
                            "f_k": fk,
                            "plus_row": a.coeffs,
                            "minus_row": b.coeffs,
                        }));
                    }
                }
            }
        }
    }
    if !any {
        return inapplicable();
    }
    // The row check is exhaustive. Explicit pairs are also scanned for five
    // generators, where the bounds on the type rely on this lemma.
    if ctx.nu != 5 || ctx.vector_count() > VECTOR_SCAN_CAP {
        return (
            ClaimStatus::Pass,
            json!({ "pairs_checked": 0, "sampled": false }),
        );
    }
    let mut pairs = 0u64;
    let mut sampled = false;
    for (vi, v) in ctx.vectors().iter().enumerate() {
        for f in ctx.outside(v) {
            let minus = ctx.minus(v, f);
            let scan = ctx.scan_pairs(ctx.plus(f), &minus, (vi as u64) << 32 | f as u64, |a, b| {
                coppie_violation(a, b).is_none()
            });
            pairs += scan.checked;
            sampled |= scan.sampled;
            if let Some((a, b)) = scan.bad {
                return ctx.fail(json!({
                    "ng_vector": v.entries,
                    "f": f,
                    "plus": matrix_json(&a),
                    "minus": matrix_json(&b),
                }));
            }
        }
    }
    (
        ClaimStatus::Pass,
        json!({ "pairs_checked": pairs, "sampled": sampled, "pair_cap": ctx.pair_cap }),
    )
}

fn first_zero(ctx: &Context) -> ClaimStatusWithPayload {
    if !ctx.is_ng {
        return inapplicable();
    }
    let n = ctx.s.generators();
    let frob = ctx.s.frobenius();
    let mut applied = false;
    // Vectors agreeing on (h, f_h) share rows h and ell of RF-(f); both
    // rows factor the same value n_h + f_h - f = n_ell + F(S) - f.
    for h in ctx.first_divergent() {
        for &fh in ctx.cands[h].iter().filter(|&&g| g != frob) {
            let Some(l) = (0..h).find(|&l| n[l] == n[h] + fh - frob) else {
                return ctx.fail(json!({ "h": h + 1, "f_h": fh, "reason": "no ell for h" }));
            };
            for &f in ctx.pf.iter().filter(|&&f| f != frob && f != fh) {
                if !ctx.cands[h + 1..].iter().all(|t| t.iter().any(|&g| g != f)) {
                    continue;
                }
                applied = true;
                let row = ctx.s.factorizations(n[h] + fh - f);
                let bad = row.iter().find(|x| x.coeffs[l] != 0 || x.coeffs[h] != 0);
                if bad.is_some() || row.is_empty() {
                    return ctx.fail(json!({
                        "f": f,
                        "h": h + 1,
                        "ell": l + 1,
                        "f_h": fh,
                        "violating_row": bad.map(|x| &x.coeffs),
                        "row_exists": !row.is_empty(),
                    }));
                }
            }
        }
    }
    if applied {
        pass()
    } else {
        inapplicable()
    }
}

fn ngv_props(ctx: &Context) -> ClaimStatusWithPayload {
    if ctx.nu < 2 || !ctx.is_ng {
        return inapplicable();
    }
    let n = ctx.s.generators();
    let nu = ctx.nu;
    let frob = ctx.s.frobenius();
    let fail = |reason: &str, detail: Value| {
        ctx.fail(json!({ "reason": reason, "candidates": ctx.cands, "detail": detail }))
    };
    if ctx.cands[0] != [frob] {
        return fail("f_1 != F(S)", json!(ctx.cands[0]));
    }
    // Distinct prefixes. Once every shorter distinct prefix is forced to
    // f_j = F(S) + n_1 - n_j, a longer one must extend that chain.
    let mut chain: Vec<i64> = Vec::new();
    for j in 0..nu {
        let forced = frob + n[0] - n[j];
        if let Some(&g) = ctx.cands[j]
            .iter()
            .find(|&&g| g != forced && !chain.contains(&g))
        {
            return fail(
                "f_1 - f_j != n_j - n_1 on a distinct prefix",
                json!({ "prefix": chain, "j": j + 1, "f_j": g }),
            );
        }
        if !ctx.cands[j].contains(&forced) {
            break;
        }
        chain.push(forced);
    }
    if chain.len() == nu {
        return fail("all entries pairwise distinct", json!(chain));
    }
    if chain.len() == nu - 1 {
        let pf: BTreeSet<i64> = ctx.pf.iter().copied().collect();
        if pf != chain.iter().copied().collect() {
            return fail(
                "first nu-1 entries distinct but PF differs from them",
                json!(chain),
            );
        }
    }
    for i in 1..=chain.len() {
        for f in ctx.pf.iter().copied().filter(|f| !chain[..i].contains(f)) {
            if !representable(&n[i..], frob - f + n[0]) {
                return fail(
                    "f_1 - f + n_1 not a combination of the later generators",
                    json!({ "prefix": &chain[..i], "f": f }),
                );
            }
        }
    }
    for h in ctx.first_divergent() {
        if ctx.cands[h].iter().all(|&g| g == frob) {
            continue;
        }
        for &fh in ctx.cands[h].iter().filter(|&&g| g != frob) {
            if !(0..h).any(|l| n[l] == n[h] + fh - frob) {
                return fail(
                    "f_h is not F(S) - n_h + n_ell for any ell < h",
                    json!({ "h": h + 1, "f_h": fh }),
                );
            }
        }
        for hp in h + 1..nu {
            for &g in ctx.cands[hp].iter().filter(|&&g| g != frob) {
                let v = n[hp] + g - frob;
                let generator = n[..hp].contains(&v);
                let multiple = v > 0 && v % n[h] == 0;
                if !generator && !multiple {
                    return fail(
                        "second divergent index has neither admissible form",
                        json!({ "h": h + 1, "h_prime": hp + 1, "f_h_prime": g }),
                    );
                }
            }
            if !ctx.cands[hp].contains(&frob) {
                break;
            }
        }
    }
    pass()
}

fn pf2_two_zeroes(ctx: &Context) -> ClaimStatusWithPayload {
    if ctx.nu != 5 || !ctx.is_ng {
        return inapplicable();
    }
    let mut applied = false;
    for (vi, c) in ctx.classes().iter().enumerate() {
        for &f in &c.pf2 {
            applied = true;
            let plus = ctx.plus(f);
            let minus = ctx.minus(&c.ng, f);
            let two = |m: &RfMatrix| {
                let z = zero_pattern(m);
                z.row_counts().iter().all(|&k| k == 2) && z.col_counts().iter().all(|&k| k == 2)
            };
            let scan = ctx.scan_pairs(plus, &minus, (vi as u64) << 32 | f as u64, |a, b| {
                two(a) && two(b)
            });
            if let Some((a, b)) = scan.bad {
                return ctx.fail(json!({
                    "ng_vector": c.ng.entries,
                    "f": f,
                    "plus": matrix_json(&a),
                    "minus": matrix_json(&b),
                }));
            }
        }
    }
    if applied {
        pass()
    } else {
        inapplicable()
    }
}

fn same2(ctx: &Context) -> ClaimStatusWithPayload {
    if ctx.nu < 3 || !ctx.is_ng {
        return inapplicable();
    }
    let n = ctx.s.generators();
    let t = &ctx.table;
    let in_pf = |x: i64| ctx.pf.binary_search(&x).is_ok();
    let mut applied = false;
    for i in 0..ctx.nu {
        for p in (0..ctx.nu).filter(|&p| p != i) {
            for q in (0..ctx.nu).filter(|&q| q != i && q != p) {
                let (f, f2) = (t.gap(p, i), t.gap(q, i));
                // outside the NG-vector, M_{p,i} in PF is in PF1 via RF+ row p
                if !in_pf(f) || !in_pf(f2) || t.lambda(p, i) < t.lambda(q, i) {
                    continue;
                }
                if !ctx.avoidable(&[f, f2]) {
                    continue;
                }
                for &fq in ctx.cands[q].iter().filter(|&&g| g != f && g != f2) {
                    applied = true;
                    let mut offending = None;
                    ctx.s.for_each_factorization(n[q] + fq - f, |coeffs| {
                        if coeffs[p] != 0 {
                            offending = Some(coeffs.to_vec());
                            return false;
                        }
                        true
                    });
                    if let Some(row) = offending {
                        return ctx.fail(json!({
                            "f": f,
                            "f_prime": f2,
                            "f_q": fq,
                            "i": i + 1,
                            "p": p + 1,
                            "q": q + 1,
                            "row_q": row,
                        }));
                    }
                }
            }
        }
    }
    if applied {
        pass()
    } else {
        inapplicable()
    }
}

/// Whether some PF element outside every compared vector's entries
/// switches between PF1 and PF2 across NG-vectors.
pub(crate) fn classification_varies(ctx: &Context) -> bool {
    if ctx.nu != 5 || !ctx.is_ng {
        return false;
    }
    let classes = ctx.classes();
    classes.iter().enumerate().any(|(a, ca)| {
        classes[a + 1..].iter().any(|cb| {
            ctx.pf.iter().any(|f| {
                !ca.ng.has_entry(*f)
                    && !cb.ng.has_entry(*f)
                    && ca.pf1.contains(f) != cb.pf1.contains(f)
            })
        })
    })
}
