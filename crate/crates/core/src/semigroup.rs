//! Numerical semigroups given by generators, with all basic invariants
//! derived from the Apéry set with respect to the multiplicity.

use std::fmt;

use crate::error::{Error, Result};

/// Largest generator accepted by [`NumericalSemigroup::new`].
pub const MAX_GENERATOR: i64 = 1 << 31;

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Least element of the monoid generated by `gens` in every residue class
/// modulo `modulus`, or `i64::MAX` where a class is never reached.
///
/// Round-robin relaxation: every generator induces a permutation of the
/// residues whose cycles are walked once, starting from the current cycle
/// minimum. One sweep over the generators reaches the fixpoint.
pub(crate) fn round_robin_apery(modulus: i64, gens: &[i64]) -> Vec<i64> {
    let n = modulus as usize;
    let mut w = vec![i64::MAX; n];
    w[0] = 0;
    for &a in gens {
        let step = (a % modulus) as usize;
        if step == 0 {
            continue;
        }
        let d = gcd(step as i64, modulus) as usize;
        for p in 0..d {
            let start = (p..n)
                .step_by(d)
                .min_by_key(|&r| w[r])
                .expect("nonempty residue class");
            if w[start] == i64::MAX {
                continue;
            }
            let mut cur = w[start];
            let mut r = start;
            for _ in 1..n / d {
                cur += a;
                r += step;
                if r >= n {
                    r -= n;
                }
                cur = cur.min(w[r]);
                w[r] = cur;
            }
        }
    }
    w
}

/// A numerical semigroup `S = <n_1, ..., n_nu>` with `n_1 < ... < n_nu`
/// its unique minimal system of generators.
///
/// The Apéry set with respect to `n_1` is computed once at construction and
/// backs membership, the Frobenius number, the genus and the
/// pseudo-Frobenius numbers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    generators: Vec<i64>,
    apery: Vec<i64>,
    frobenius: i64,
    genus: u64,
}

/// A factorization `value = sum coeffs[i] * n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationVector {
    pub coeffs: Vec<i64>,
    pub value: i64,
}

impl FactorizationVector {
    /// Number of nonzero coefficients.
    pub fn support_size(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `raw`, reducing to the minimal
    /// system of generators.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        for &g in raw {
            if g <= 0 {
                return Err(Error::NonPositiveGenerator(g));
            }
            if g > MAX_GENERATOR {
                return Err(Error::GeneratorTooLarge(g));
            }
        }
        let g = raw.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(Error::GcdNotOne(g));
        }
        let mut gens = raw.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let m = gens[0];
        let apery = round_robin_apery(m, &gens);
        let member = |x: i64| x >= 0 && x >= apery[(x % m) as usize];
        let minimal: Vec<i64> = gens
            .iter()
            .copied()
            .filter(|&g| g == m || !gens.iter().any(|&h| h < g && member(g - h)))
            .collect();
        Ok(Self::from_parts(minimal, apery))
    }

    fn from_parts(generators: Vec<i64>, apery: Vec<i64>) -> Self {
        let m = generators[0];
        let frobenius = apery.iter().copied().max().unwrap_or(0) - m;
        let genus = apery.iter().map(|&w| (w / m) as u64).sum();
        Self {
            generators,
            apery,
            frobenius,
            genus,
        }
    }

    /// The semigroup of all nonnegative integers.
    pub fn whole() -> Self {
        Self::from_parts(vec![1], vec![0])
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    pub fn multiplicity(&self) -> i64 {
        self.generators[0]
    }

    /// Embedding dimension `nu`.
    pub fn embedding_dimension(&self) -> usize {
        self.generators.len()
    }

    /// `F(S)`; `-1` for the whole of `N`.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> &[i64] {
        &self.apery
    }

    /// True for `S = N`.
    pub fn is_whole(&self) -> bool {
        self.generators[0] == 1
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        let m = self.multiplicity();
        x >= self.apery[(x % m) as usize]
    }

    /// Apéry set with respect to an arbitrary nonzero element `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>> {
        if n <= 0 || !self.contains(n) {
            return Err(Error::NotAMember(n));
        }
        if n == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        Ok(round_robin_apery(n, &self.generators))
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius)
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// `x <=_S y`, i.e. `y - x` lies in `S`.
    pub fn leq_s(&self, x: i64, y: i64) -> bool {
        self.contains(y - x)
    }

    /// Definition check: `f` is not in `S` and `f + n_i` is in `S` for
    /// every generator.
    pub fn is_pseudo_frobenius(&self, f: i64) -> bool {
        !self.contains(f) && self.generators.iter().all(|&g| self.contains(f + g))
    }

    /// Pseudo-Frobenius numbers in increasing order; the last one is `F(S)`.
    ///
    /// These are `w - n_1` for the `<=_S`-maximal elements `w` of the
    /// Apéry set. An Apéry element is maximal iff adding any other
    /// generator leaves the Apéry set.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        let m = self.multiplicity();
        let mut pf: Vec<i64> = self
            .apery
            .iter()
            .filter(|&&w| {
                self.generators[1..]
                    .iter()
                    .all(|&g| self.apery[((w + g) % m) as usize] != w + g)
            })
            .map(|&w| w - m)
            .collect();
        pf.sort_unstable();
        pf
    }

    /// Cohen-Macaulay type `t(S) = |PF(S)|`.
    pub fn semigroup_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// All factorizations of `x` in lexicographically descending order of
    /// coefficient vectors. Empty when `x` is not in `S`.
    pub fn factorizations(&self, x: i64) -> Vec<FactorizationVector> {
        let mut out = Vec::new();
        if !self.contains(x) {
            return out;
        }
        self.for_each_factorization(x, |coeffs| {
            out.push(FactorizationVector {
                coeffs: coeffs.to_vec(),
                value: x,
            });
            true
        });
        out
    }

    /// Calls `visit` on every factorization of `x` (lex-descending) until it
    /// returns `false`. Returns `false` when stopped early.
    pub fn for_each_factorization<F>(&self, x: i64, mut visit: F) -> bool
    where
        F: FnMut(&[i64]) -> bool,
    {
        if x < 0 {
            return true;
        }
        let gens = &self.generators;
        let nu = gens.len();
        let mut suffix_gcd = vec![0; nu];
        let mut acc = 0;
        for i in (0..nu).rev() {
            acc = gcd(acc, gens[i]);
            suffix_gcd[i] = acc;
        }
        let mut coeffs = vec![0; nu];
        factor_dfs(gens, &suffix_gcd, 0, x, &mut coeffs, &mut visit)
    }

    /// `S \ {g}` for a minimal generator `g`.
    ///
    /// Generated by the other generators, `g + n_i` and `2g`, `3g`.
    pub fn remove_minimal_generator(&self, g: i64) -> Result<Self> {
        if !self.generators.contains(&g) {
            return Err(Error::NotAGenerator(g));
        }
        let mut raw: Vec<i64> = self
            .generators
            .iter()
            .filter(|&&n| n != g)
            .flat_map(|&n| [n, n + g])
            .collect();
        raw.push(2 * g);
        raw.push(3 * g);
        Self::new(&raw)
    }
}

fn factor_dfs<F>(
    gens: &[i64],
    suffix_gcd: &[i64],
    idx: usize,
    remaining: i64,
    coeffs: &mut [i64],
    visit: &mut F,
) -> bool
where
    F: FnMut(&[i64]) -> bool,
{
    let g = gens[idx];
    if idx + 1 == gens.len() {
        if remaining % g == 0 {
            coeffs[idx] = remaining / g;
            let keep_going = visit(coeffs);
            coeffs[idx] = 0;
            return keep_going;
        }
        return true;
    }
    if remaining % suffix_gcd[idx] != 0 {
        return true;
    }
    for c in (0..=remaining / g).rev() {
        coeffs[idx] = c;
        if !factor_dfs(gens, suffix_gcd, idx + 1, remaining - c * g, coeffs, visit) {
            coeffs[idx] = 0;
            return false;
        }
    }
    coeffs[idx] = 0;
    true
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
