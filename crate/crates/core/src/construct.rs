//! Explicit semigroup families and the numerical duplication
//! `S ⋈^b E = 2·S ∪ (2·E + b)`.
//!
//! Every builder re-checks the properties its family is known for on the
//! instance it returns and fails with [`Error::PostconditionFailed`]
//! otherwise.

use crate::error::{Error, Result};
use crate::gorenstein::{is_almost_symmetric, RelativeIdeal};
use crate::rf::{rf_plus_enumeration, zero_pattern, RfKind, RfMatrix};
use crate::semigroup::{gcd, NumericalSemigroup};

fn post(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::PostconditionFailed(what()))
    }
}

#[derive(Clone, Debug)]
pub struct DuplicationSpec {
    base: NumericalSemigroup,
    ideal: RelativeIdeal,
    b: i64,
}

impl DuplicationSpec {
    pub fn new(base: NumericalSemigroup, ideal: RelativeIdeal, b: i64) -> Result<Self> {
        if b.rem_euclid(2) != 1 || b <= 0 {
            return Err(Error::BNotOdd(b));
        }
        if !base.contains(b) {
            return Err(Error::BNotInS(b));
        }
        if !ideal.is_subset_of(&base) {
            return Err(Error::NotAnIdeal("not contained in S".into()));
        }
        if !ideal.is_ideal_of(&base) {
            return Err(Error::NotAnIdeal("not closed under adding S".into()));
        }
        Ok(Self { base, ideal, b })
    }

    /// `E = M(S)`.
    pub fn with_maximal_ideal(base: NumericalSemigroup, b: i64) -> Result<Self> {
        let ideal = RelativeIdeal::maximal_ideal(&base);
        Self::new(base, ideal, b)
    }

    pub fn base(&self) -> &NumericalSemigroup {
        &self.base
    }

    pub fn ideal(&self) -> &RelativeIdeal {
        &self.ideal
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// Membership in `2·S ∪ (2·E + b)` straight from the definition.
    pub fn union_contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x % 2 == 0 {
            self.base.contains(x / 2)
        } else {
            x >= self.b && self.ideal.contains((x - self.b) / 2)
        }
    }
}

pub fn numerical_duplication(spec: &DuplicationSpec) -> Result<NumericalSemigroup> {
    let base = &spec.base;
    // Every integer from here on is in the union.
    let conductor = (2 * (base.frobenius() + 1)).max(2 * spec.ideal.conductor() + spec.b);
    let multiplicity = (1..=conductor)
        .find(|&x| spec.union_contains(x))
        .unwrap_or(conductor);
    let mut gens: Vec<i64> = Vec::new();
    for x in 1..conductor + multiplicity {
        if spec.union_contains(x) && !gens.iter().any(|&g| spec.union_contains(x - g)) {
            gens.push(x);
        }
    }
    let dup = NumericalSemigroup::new(&gens)?;

    let window = conductor + 2 * multiplicity;
    post(
        (0..=window).all(|x| dup.contains(x) == spec.union_contains(x)),
        || format!("{dup} disagrees with 2S ∪ (2E+b) below {window}"),
    )?;
    if spec.ideal == RelativeIdeal::maximal_ideal(base) {
        let nu = base.embedding_dimension();
        post(dup.embedding_dimension() == 2 * nu, || {
            format!(
                "embedding dimension {} != 2 * {nu}",
                dup.embedding_dimension()
            )
        })?;
        if !base.is_whole() && is_almost_symmetric(base) {
            let t = base.semigroup_type();
            let td = dup.semigroup_type();
            post(is_almost_symmetric(&dup), || {
                format!("{dup} is not almost symmetric")
            })?;
            post(td == 2 * t + 1, || format!("type {td} != 2 * {t} + 1"))?;
        }
    }
    Ok(dup)
}

/// How the odd duplication parameter is chosen at each tower level.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum BSelector {
    /// The least odd element (always a minimal generator).
    #[default]
    SmallestOdd,
    /// The `k`-th least odd element, 0-based.
    NthOdd(usize),
}

impl BSelector {
    pub fn pick(&self, s: &NumericalSemigroup) -> i64 {
        let k = match self {
            BSelector::SmallestOdd => 0,
            BSelector::NthOdd(k) => *k,
        };
        odd_elements(s)
            .nth(k)
            .expect("S has infinitely many odd elements")
    }
}

/// Odd elements of `S` in increasing order.
pub fn odd_elements(s: &NumericalSemigroup) -> impl Iterator<Item = i64> + '_ {
    (1i64..).step_by(2).filter(move |&x| s.contains(x))
}

/// `[S, S_1, ..., S_depth]` with `S_i = S_{i-1} ⋈^{b} M(S_{i-1})`, checking
/// `t(S_i) - 2ν(S_i) = 2^i (t(S) - 2ν(S)) + 2^i - 1` at every level.
pub fn duplication_tower(
    s: &NumericalSemigroup,
    depth: usize,
    selector: BSelector,
) -> Result<Vec<NumericalSemigroup>> {
    if !is_almost_symmetric(s) {
        return Err(Error::NotAlmostSymmetric);
    }
    let excess =
        |x: &NumericalSemigroup| x.semigroup_type() as i64 - 2 * x.embedding_dimension() as i64;
    let base_excess = excess(s);
    let mut tower = vec![s.clone()];
    for i in 1..=depth {
        let prev = tower.last().expect("tower starts nonempty");
        let b = selector.pick(prev);
        let next = numerical_duplication(&DuplicationSpec::with_maximal_ideal(prev.clone(), b)?)?;
        let pow = 1i64 << i;
        let got = excess(&next);
        post(got == pow * base_excess + pow - 1, || {
            format!(
                "level {i}: t - 2nu = {got}, expected {}",
                pow * base_excess + pow - 1
            )
        })?;
        post(is_almost_symmetric(&next), || {
            format!("level {i}: {next} is not almost symmetric")
        })?;
        tower.push(next);
    }
    Ok(tower)
}

/// Generators `s, s+3, s+3T+1, s+3T+2` with `s = (3T+2)^2 + 3`.
fn backelin_generators(t: i64) -> [i64; 4] {
    let s = (3 * t + 2).pow(2) + 3;
    [s, s + 3, s + 3 * t + 1, s + 3 * t + 2]
}

/// The top of the progression, `(3T+3) n_4 - n_1`.
pub fn backelin_f(t: i64) -> i64 {
    let n = backelin_generators(t);
    (3 * t + 3) * n[3] - n[0]
}

/// The known RF+ matrix of `f - 3λ` for `λ = 1..=T`.
///
/// Row 3 is `(T+4+λ, 2T-λ, -1, 0)`, the only row with a zero in column 4
/// that sums to `f - 3λ`.
pub fn backelin_rf_matrix(t: i64, lambda: i64) -> RfMatrix {
    let l = lambda;
    RfMatrix {
        kind: RfKind::Plus,
        f: backelin_f(t) - 3 * l,
        entries: vec![
            vec![-1, 0, 3 * l, 3 * t + 3 - 3 * l],
            vec![0, -1, 3 * (l - 1), 3 * t + 3 - 3 * (l - 1)],
            vec![t + 4 + l, 2 * t - l, -1, 0],
            vec![2 * t + 3 + l, t - l, 1, -1],
        ],
        ng: None,
    }
}

/// Backelin's four-generated semigroups, whose type grows with `T`.
pub fn backelin(t: i64) -> Result<NumericalSemigroup> {
    if t < 2 {
        return Err(Error::TTooSmall(t));
    }
    let gens = backelin_generators(t);
    let s = NumericalSemigroup::new(&gens)?;
    post(s.embedding_dimension() == 4, || {
        format!("{s} is not minimally 4-generated")
    })?;
    let f = backelin_f(t);
    for lambda in 1..=t {
        let g = f - 3 * lambda;
        let e = rf_plus_enumeration(&s, g)
            .map_err(|_| Error::PostconditionFailed(format!("{g} is not in PF({s})")))?;
        post(e.contains(&backelin_rf_matrix(t, lambda)), || {
            format!("RF+({g}) does not contain the expected matrix")
        })?;
    }
    Ok(s)
}

/// Parameters of the six-generated family, with generators in the order
/// `n_1, n_2, n_3, n_1 + d, n_2 + d, n_3 + d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dim6Params {
    pub t: i64,
    pub d: i64,
    pub k: i64,
}

impl Dim6Params {
    pub fn labeled_generators(&self) -> [i64; 6] {
        let (t, d, k) = (self.t, self.d, self.k);
        let q = (t + 1) * (t + 1);
        let n1 = k * (q + 1);
        let n2 = k * (q + t);
        let n3 = k * (q + 2 * t + 4);
        [n1, n2, n3, n1 + d, n2 + d, n3 + d]
    }

    /// `f = k (T(T+1)(T+2) - 1)`.
    pub fn f(&self) -> i64 {
        self.k * (self.t * (self.t + 1) * (self.t + 2) - 1)
    }

    /// `f, f + d, ..., f + (T-1) d`.
    pub fn progression(&self) -> Vec<i64> {
        (0..self.t).map(|l| self.f() + l * self.d).collect()
    }

    /// The RF+ matrix of `f + λd` in the labeled generator order.
    pub fn labeled_rf_matrix(&self, lambda: i64) -> Vec<Vec<i64>> {
        let (t, l) = (self.t, lambda);
        vec![
            vec![-1, t + 1 - l, 0, 0, l, 0],
            vec![0, -1, t - l, 0, 0, l],
            vec![t + 2 - l, 0, -1, l, 0, 0],
            vec![0, t - l, 0, -1, l + 1, 0],
            vec![0, 0, t - 1 - l, 0, -1, l + 1],
            vec![t + 1 - l, 0, 0, l + 1, 0, -1],
        ]
    }

    /// [`Self::labeled_rf_matrix`] permuted into the sorted generator order
    /// of `s`.
    pub fn rf_matrix(&self, s: &NumericalSemigroup, lambda: i64) -> RfMatrix {
        let labeled = self.labeled_generators();
        let pos: Vec<usize> = labeled
            .iter()
            .map(|g| {
                s.generators()
                    .iter()
                    .position(|x| x == g)
                    .expect("generator")
            })
            .collect();
        let mut entries = vec![vec![0; 6]; 6];
        for (i, row) in self.labeled_rf_matrix(lambda).iter().enumerate() {
            for (j, &a) in row.iter().enumerate() {
                entries[pos[i]][pos[j]] = a;
            }
        }
        RfMatrix {
            kind: RfKind::Plus,
            f: self.f() + lambda * self.d,
            entries,
            ng: None,
        }
    }

    fn check(&self) -> Result<()> {
        let (t, d, k) = (self.t, self.d, self.k);
        let fail = |condition: &str, value: i64| {
            Err(Error::PreconditionViolated {
                condition: condition.into(),
                value,
            })
        };
        if t < 1 {
            return fail("T >= 1", t);
        }
        if k < t {
            return fail("k >= T", k);
        }
        if d < t * t {
            return fail("d >= T^2", d);
        }
        if gcd(d, k) != 1 {
            return fail("gcd(d,k) = 1", gcd(d, k));
        }
        if t % 5 == 1 {
            return fail("T != 1 (mod 5)", t);
        }
        Ok(())
    }
}

/// Six-generated semigroups containing the progression
/// `f, f + d, ..., f + (T-1)d` of pseudo-Frobenius numbers.
pub fn family_dim6(t: i64, d: i64, k: i64) -> Result<NumericalSemigroup> {
    let p = Dim6Params { t, d, k };
    p.check()?;
    let s = NumericalSemigroup::new(&p.labeled_generators())?;
    post(s.embedding_dimension() == 6, || {
        format!("{s} is not minimally 6-generated")
    })?;
    let mut masks = Vec::new();
    for lambda in 0..t {
        let g = p.f() + lambda * d;
        let e = rf_plus_enumeration(&s, g)
            .map_err(|_| Error::PostconditionFailed(format!("{g} is not in PF({s})")))?;
        let m = p.rf_matrix(&s, lambda);
        post(e.contains(&m), || {
            format!("RF+({g}) does not contain the expected matrix")
        })?;
        masks.push(zero_pattern(&m));
    }
    // λ = 0 and λ = T-1 each have extra zeroes; the interior share one pattern.
    let interior = masks.get(1..(t as usize).saturating_sub(1)).unwrap_or(&[]);
    post(interior.windows(2).all(|w| w[0] == w[1]), || {
        "interior RF+ zero patterns differ".into()
    })?;
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyParams {
    Backelin {
        t: i64,
    },
    Dim6(Dim6Params),
    DupTower {
        base: NumericalSemigroup,
        depth: usize,
        selector: BSelector,
    },
}

impl FamilyParams {
    /// The requested member (the top of the tower for `DupTower`).
    pub fn build(&self) -> Result<NumericalSemigroup> {
        match self {
            FamilyParams::Backelin { t } => backelin(*t),
            FamilyParams::Dim6(p) => family_dim6(p.t, p.d, p.k),
            FamilyParams::DupTower {
                base,
                depth,
                selector,
            } => Ok(duplication_tower(base, *depth, *selector)?
                .pop()
                .expect("tower is nonempty")),
        }
    }
}
