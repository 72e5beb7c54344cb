//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the Apéry machinery of the library.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Membership by sieve on `[0, bound]`.
pub struct Sieve {
    pub gens: Vec<i64>,
    member: Vec<bool>,
}

impl Sieve {
    /// `gens` must have gcd 1. The window is doubled until it ends in a run
    /// of `min(gens)` consecutive members, after which everything is in S.
    pub fn new(gens: &[i64]) -> Self {
        let m = *gens.iter().min().unwrap();
        let mut bound = 4 * m * gens.iter().max().unwrap() + 8;
        loop {
            let mut member = vec![false; bound as usize + 1];
            member[0] = true;
            for x in 1..=bound {
                member[x as usize] = gens.iter().any(|&g| x >= g && member[(x - g) as usize]);
            }
            if member.iter().rev().take(m as usize).all(|&b| b) {
                return Self {
                    gens: gens.to_vec(),
                    member,
                };
            }
            bound *= 2;
        }
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        match self.member.get(x as usize) {
            Some(&b) => b,
            None => true,
        }
    }

    pub fn frobenius(&self) -> i64 {
        (0..self.member.len())
            .rev()
            .find(|&x| !self.member[x])
            .map_or(-1, |x| x as i64)
    }

    pub fn gaps(&self) -> Vec<i64> {
        (0..=self.frobenius())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    /// Minimal generators: members that are not a sum of two nonzero members.
    pub fn minimal_generators(&self) -> Vec<i64> {
        let top = self.frobenius() + 2 * self.gens.iter().min().unwrap() + 1;
        (1..=top)
            .filter(|&x| {
                self.contains(x) && !(1..x).any(|y| self.contains(y) && self.contains(x - y))
            })
            .collect()
    }

    /// Gaps `f` with `f + s` in S for every nonzero member `s`; members above
    /// `F + 1` need no check.
    pub fn pf(&self) -> Vec<i64> {
        let f = self.frobenius();
        let members: Vec<i64> = (1..=f + 1).filter(|&s| self.contains(s)).collect();
        self.gaps()
            .into_iter()
            .filter(|&g| members.iter().all(|&s| self.contains(g + s)))
            .collect()
    }

    pub fn apery(&self, n: i64) -> Vec<i64> {
        (0..n)
            .map(|r| {
                (0..)
                    .map(|q| r + q * n)
                    .find(|&x| self.contains(x))
                    .unwrap()
            })
            .collect()
    }

    /// `K = { x : F - x not in S }`, tested on `[0, F]`; everything above `F`
    /// belongs to `K`.
    pub fn in_canonical(&self, x: i64) -> bool {
        !self.contains(self.frobenius() - x)
    }

    /// `M + K ⊆ M`.
    pub fn almost_symmetric(&self) -> bool {
        let f = self.frobenius();
        (1..=f + 1).filter(|&m| self.contains(m)).all(|m| {
            (0..=f)
                .filter(|&k| self.in_canonical(k))
                .all(|k| self.contains(m + k))
        })
    }

    /// `M ⊆ K + (S - K)`, computed straight from the sets.
    pub fn nearly_gorenstein(&self) -> bool {
        let f = self.frobenius();
        if f < 0 {
            return true;
        }
        let ks: Vec<i64> = (0..=f).filter(|&k| self.in_canonical(k)).collect();
        // S - K lies in [0, inf) and contains everything above F
        let in_quot = |x: i64| x >= 0 && ks.iter().all(|&k| self.contains(x + k));
        // members above F lie in 0 + (S - K)
        (1..=f + 1)
            .filter(|&m| self.contains(m))
            .all(|m| (0..=m).any(|k| (k > f || self.in_canonical(k)) && in_quot(m - k)))
    }
}

/// Number of factorizations of `x`, by the coin-change recurrence.
pub fn factorization_count(gens: &[i64], x: i64) -> u128 {
    if x < 0 {
        return 0;
    }
    let mut ways = vec![0u128; x as usize + 1];
    ways[0] = 1;
    for &g in gens {
        for v in g..=x {
            ways[v as usize] += ways[(v - g) as usize];
        }
    }
    ways[x as usize]
}

/// All factorizations by exhaustive recursion, sorted lexicographically
/// decreasing. Only for small inputs.
pub fn factorizations(gens: &[i64], x: i64) -> Vec<Vec<i64>> {
    fn go(gens: &[i64], rest: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == gens.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = gens[cur.len()];
        for c in 0..=rest / g {
            cur.push(c);
            go(gens, rest - c * g, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if x >= 0 {
        go(gens, x, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// A random generating set with gcd 1 and Frobenius number at most `max_f`.
pub fn random_generators(rng: &mut ChaCha8Rng, max_f: i64) -> Vec<i64> {
    loop {
        let m = rng.random_range(2..=150);
        let extra = rng.random_range(1..=5usize);
        let mut gens = vec![m];
        for _ in 0..extra {
            gens.push(rng.random_range(m + 1..=2 * m));
        }
        if gens.iter().fold(0, |a, &b| gcd(a, b)) != 1 {
            continue;
        }
        let sieve = Sieve::new(&gens);
        if sieve.frobenius() <= max_f {
            return gens;
        }
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Semigroup counts by genus, from a backtracking search over gap sets.
///
/// Walks `x = 1, 2, ...` deciding membership; `x` is forced in when it is a
/// sum of two smaller members, and every set is closed once it has a run of
/// `m` consecutive members.
pub fn genus_counts(max_genus: usize) -> Vec<u64> {
    fn go(member: &mut Vec<bool>, gaps: usize, max_genus: usize, counts: &mut [u64]) {
        let x = member.len();
        let m = (1..x).find(|&y| member[y]);
        if let Some(m) = m {
            if x >= m && member[x - m..].iter().all(|&b| b) {
                counts[gaps] += 1;
                return;
            }
        }
        let forced = (1..x).any(|y| member[y] && member[x - y]);
        member.push(true);
        go(member, gaps, max_genus, counts);
        member.pop();
        if !forced && gaps < max_genus {
            member.push(false);
            go(member, gaps + 1, max_genus, counts);
            member.pop();
        }
    }
    let mut counts = vec![0; max_genus + 1];
    go(&mut vec![true], 0, max_genus, &mut counts);
    counts
}
