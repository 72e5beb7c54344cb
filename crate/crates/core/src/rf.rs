//! Row-factorization matrices (RF+ and RF-), the extremal gaps
//! `M_{i,j} = lambda_ij * n_j - n_i`, and the PF1 / PF2 split of the
//! pseudo-Frobenius numbers outside an NG-vector.
//!
//! A matrix of either kind is a choice of one factorization per row, so the
//! set of all matrices for a given `f` is the Cartesian product of the
//! per-row factorization lists. [`RfEnumeration`] keeps that product
//! unexpanded.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{self, NgVector};
use crate::semigroup::{FactorizationVector, NumericalSemigroup};

/// Default bound on the number of matrices materialized by [`rf_plus`] and
/// [`rf_minus`].
pub const DEFAULT_MATRIX_CAP: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RfKind {
    Plus,
    Minus,
}

/// A `nu x nu` matrix with `-1` on the diagonal.
///
/// RF+: row `i` sums (against the generators) to `f`.
/// RF-: row `i` sums to `f_i - f` for the NG-vector in `ng`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RfMatrix {
    pub kind: RfKind,
    pub f: i64,
    pub entries: Vec<Vec<i64>>,
    pub ng: Option<Vec<i64>>,
}

impl RfMatrix {
    /// Row-sum target for row `i`.
    pub fn row_target(&self, i: usize) -> Option<i64> {
        match self.kind {
            RfKind::Plus => Some(self.f),
            RfKind::Minus => self.ng.as_ref().map(|ng| ng[i] - self.f),
        }
    }

    /// Checks the shape and every row identity against `s`.
    pub fn is_valid_for(&self, s: &NumericalSemigroup) -> bool {
        let n = s.generators();
        let nu = n.len();
        if self.entries.len() != nu {
            return false;
        }
        self.entries.iter().enumerate().all(|(i, row)| {
            row.len() == nu
                && row
                    .iter()
                    .enumerate()
                    .all(|(j, &a)| if i == j { a == -1 } else { a >= 0 })
                && Some(row.iter().zip(n).map(|(a, g)| a * g).sum::<i64>()) == self.row_target(i)
        })
    }
}

/// All RF matrices of one kind for one `f`, as per-row factorization lists.
#[derive(Clone, Debug)]
pub struct RfEnumeration {
    pub kind: RfKind,
    pub f: i64,
    pub ng: Option<Vec<i64>>,
    rows: Vec<Vec<FactorizationVector>>,
}

impl RfEnumeration {
    /// Row `i` lists the factorizations of `f + n_i` (RF+) or
    /// `n_i + f_i - f` (RF-); coefficient `i` is always zero.
    pub fn rows(&self) -> &[Vec<FactorizationVector>] {
        &self.rows
    }

    /// Exact number of matrices (saturating).
    pub fn count(&self) -> u128 {
        self.rows
            .iter()
            .fold(1u128, |acc, r| acc.saturating_mul(r.len() as u128))
    }

    fn build(&self, choice: impl Iterator<Item = usize>) -> RfMatrix {
        let entries = choice
            .enumerate()
            .map(|(i, c)| {
                let mut row = self.rows[i][c].coeffs.clone();
                row[i] = -1;
                row
            })
            .collect();
        RfMatrix {
            kind: self.kind,
            f: self.f,
            entries,
            ng: self.ng.clone(),
        }
    }

    /// The matrix at position `index` in enumeration order (mixed radix,
    /// last row varying fastest). Disjoint index ranges can be handed to
    /// separate workers.
    pub fn matrix_at(&self, mut index: u128) -> RfMatrix {
        let mut choice = vec![0usize; self.rows.len()];
        for i in (0..self.rows.len()).rev() {
            let len = self.rows[i].len() as u128;
            choice[i] = (index % len) as usize;
            index /= len;
        }
        self.build(choice.into_iter())
    }

    pub fn iter(&self) -> impl Iterator<Item = RfMatrix> + '_ {
        let total = self.count();
        let mut next = 0u128;
        std::iter::from_fn(move || {
            if next >= total {
                return None;
            }
            let m = self.matrix_at(next);
            next += 1;
            Some(m)
        })
    }

    /// Whether `m` is one of the enumerated matrices.
    pub fn contains(&self, m: &RfMatrix) -> bool {
        m.kind == self.kind
            && m.f == self.f
            && m.entries.len() == self.rows.len()
            && m.entries.iter().enumerate().all(|(i, row)| {
                self.rows[i].iter().any(|fv| {
                    fv.coeffs.len() == row.len()
                        && fv.coeffs.iter().zip(row).enumerate().all(|(j, (&c, &e))| {
                            if i == j {
                                e == -1
                            } else {
                                c == e
                            }
                        })
                })
            })
    }

    pub fn collect_capped(&self, cap: u128) -> Result<Vec<RfMatrix>> {
        let count = self.count();
        if count > cap {
            return Err(Error::EnumerationCap { count, cap });
        }
        Ok(self.iter().collect())
    }
}

pub fn rf_plus_enumeration(s: &NumericalSemigroup, f: i64) -> Result<RfEnumeration> {
    if !s.is_pseudo_frobenius(f) {
        return Err(Error::NotPseudoFrobenius(f));
    }
    let rows = s
        .generators()
        .iter()
        .map(|&n| s.factorizations(f + n))
        .collect();
    Ok(RfEnumeration {
        kind: RfKind::Plus,
        f,
        ng: None,
        rows,
    })
}

pub fn rf_minus_enumeration(
    s: &NumericalSemigroup,
    ng: &NgVector,
    f: i64,
) -> Result<RfEnumeration> {
    if !s.is_pseudo_frobenius(f) {
        return Err(Error::NotPseudoFrobenius(f));
    }
    if ng.has_entry(f) {
        return Err(Error::FIsNgEntry(f));
    }
    let rows = s
        .generators()
        .iter()
        .zip(&ng.entries)
        .map(|(&n, &fi)| s.factorizations(n + fi - f))
        .collect();
    Ok(RfEnumeration {
        kind: RfKind::Minus,
        f,
        ng: Some(ng.entries.clone()),
        rows,
    })
}

/// All RF+ matrices of `f`, refusing to materialize more than
/// [`DEFAULT_MATRIX_CAP`].
pub fn rf_plus(s: &NumericalSemigroup, f: i64) -> Result<Vec<RfMatrix>> {
    rf_plus_enumeration(s, f)?.collect_capped(DEFAULT_MATRIX_CAP)
}

pub fn rf_minus(s: &NumericalSemigroup, ng: &NgVector, f: i64) -> Result<Vec<RfMatrix>> {
    rf_minus_enumeration(s, ng, f)?.collect_capped(DEFAULT_MATRIX_CAP)
}

/// `a_jk * b_kj == 0` for all `j != k`.
pub fn check_coppie(plus: &RfMatrix, minus: &RfMatrix) -> Result<bool> {
    if plus.kind != RfKind::Plus || minus.kind != RfKind::Minus {
        return Err(Error::MismatchedKind);
    }
    if plus.f != minus.f {
        return Err(Error::MismatchedF {
            plus: plus.f,
            minus: minus.f,
        });
    }
    Ok(coppie_violation(plus, minus).is_none())
}

/// First `(j, k)` with `a_jk * b_kj != 0`.
pub(crate) fn coppie_violation(plus: &RfMatrix, minus: &RfMatrix) -> Option<(usize, usize)> {
    let nu = plus.entries.len();
    (0..nu)
        .flat_map(|j| (0..nu).map(move |k| (j, k)))
        .find(|&(j, k)| j != k && plus.entries[j][k] * minus.entries[k][j] != 0)
}

/// Off-diagonal zero entries of an RF matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroMask(pub Vec<Vec<bool>>);

impl ZeroMask {
    pub fn row_counts(&self) -> Vec<usize> {
        self.0
            .iter()
            .map(|r| r.iter().filter(|&&z| z).count())
            .collect()
    }

    pub fn col_counts(&self) -> Vec<usize> {
        let nu = self.0.len();
        (0..nu)
            .map(|j| self.0.iter().filter(|r| r[j]).count())
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().flatten().all(|&z| !z)
    }
}

pub fn zero_pattern(m: &RfMatrix) -> ZeroMask {
    ZeroMask(
        m.entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &a)| i != j && a == 0)
                    .collect()
            })
            .collect(),
    )
}

/// `lambda_ij = max { lambda >= 1 : lambda n_j - n_i not in S }` and
/// `M_{i,j} = lambda_ij n_j - n_i`, for `i != j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxGapTable {
    pub lambda: Vec<Vec<Option<i64>>>,
    pub m: Vec<Vec<Option<i64>>>,
}

impl MaxGapTable {
    pub fn lambda(&self, i: usize, j: usize) -> i64 {
        self.lambda[i][j].expect("off-diagonal index")
    }

    pub fn gap(&self, i: usize, j: usize) -> i64 {
        self.m[i][j].expect("off-diagonal index")
    }
}

pub fn max_gap_table(s: &NumericalSemigroup) -> MaxGapTable {
    let n = s.generators();
    let nu = n.len();
    let frob = s.frobenius();
    let mut lambda = vec![vec![None; nu]; nu];
    let mut m = vec![vec![None; nu]; nu];
    for i in 0..nu {
        for j in 0..nu {
            if i == j {
                continue;
            }
            // largest lambda with lambda n_j - n_i <= F(S), then down to the first gap
            let mut l = ((frob + n[i]).div_euclid(n[j])).max(1);
            while l > 1 && s.contains(l * n[j] - n[i]) {
                l -= 1;
            }
            lambda[i][j] = Some(l);
            m[i][j] = Some(l * n[j] - n[i]);
        }
    }
    MaxGapTable { lambda, m }
}

/// A row with a single nonzero off-diagonal entry: `f + n_i = lambda n_j`
/// (plus side) or `n_i + f_i - f = lambda n_j` (minus side).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Witness {
    pub side: RfKind,
    pub i: usize,
    pub j: usize,
    pub lambda: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PfClassification {
    pub ng: NgVector,
    pub pf1: BTreeSet<i64>,
    pub pf2: BTreeSet<i64>,
    pub witnesses: BTreeMap<i64, Vec<Witness>>,
}

/// Splits `PF(S)` minus the NG entries into PF1 (some row of some RF+ or
/// RF- matrix has `nu - 2` zeroes) and PF2 (the rest).
///
/// Such a row exists iff the row value is a multiple of a single
/// generator, so no matrices are enumerated.
pub fn classify_pf(s: &NumericalSemigroup, ng: &NgVector) -> Result<PfClassification> {
    let pf = s.pseudo_frobenius();
    if gorenstein::ng_candidates_with(s, &pf)
        .iter()
        .any(|t| t.is_empty())
    {
        return Err(Error::NotNearlyGorenstein);
    }
    let ng = NgVector::from_entries_with(s, &pf, ng.entries.clone())?;
    Ok(classify_with(s, &pf, &ng))
}

pub(crate) fn classify_with(s: &NumericalSemigroup, pf: &[i64], ng: &NgVector) -> PfClassification {
    let n = s.generators();
    let nu = n.len();
    let mut pf1 = BTreeSet::new();
    let mut pf2 = BTreeSet::new();
    let mut witnesses = BTreeMap::new();
    for &f in pf.iter().filter(|&&f| !ng.has_entry(f)) {
        let mut found = Vec::new();
        for (side, values) in [
            (RfKind::Plus, n.iter().map(|&ni| f + ni).collect::<Vec<_>>()),
            (
                RfKind::Minus,
                n.iter()
                    .zip(&ng.entries)
                    .map(|(&ni, &fi)| ni + fi - f)
                    .collect(),
            ),
        ] {
            for (i, &v) in values.iter().enumerate() {
                for j in (0..nu).filter(|&j| j != i) {
                    if v > 0 && v % n[j] == 0 {
                        found.push(Witness {
                            side,
                            i,
                            j,
                            lambda: v / n[j],
                        });
                    }
                }
            }
        }
        if found.is_empty() {
            pf2.insert(f);
        } else {
            pf1.insert(f);
            witnesses.insert(f, found);
        }
    }
    PfClassification {
        ng: ng.clone(),
        pf1,
        pf2,
        witnesses,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MuValues {
    /// `mu_s = |{ i : M_{i,s} in PF1 }|`.
    pub mu: Vec<usize>,
    /// `38 - sum_s C(mu_s - 1, 2)`, with `C(k, 2) = 0` for `k < 2`.
    pub bound: i64,
}

pub fn mu_values(s: &NumericalSemigroup, cls: &PfClassification) -> Result<MuValues> {
    mu_values_with(s, cls, &max_gap_table(s))
}

pub(crate) fn mu_values_with(
    s: &NumericalSemigroup,
    cls: &PfClassification,
    table: &MaxGapTable,
) -> Result<MuValues> {
    let nu = s.embedding_dimension();
    if nu != 5 {
        return Err(Error::WrongEmbeddingDimension {
            expected: 5,
            found: nu,
        });
    }
    let mu: Vec<usize> = (0..nu)
        .map(|col| {
            (0..nu)
                .filter(|&i| i != col && cls.pf1.contains(&table.gap(i, col)))
                .count()
        })
        .collect();
    let penalty: i64 = mu
        .iter()
        .map(|&k| {
            let k = k as i64 - 1;
            if k >= 2 {
                k * (k - 1) / 2
            } else {
                0
            }
        })
        .sum();
    Ok(MuValues {
        mu,
        bound: 38 - penalty,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gorenstein::ng_vectors;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    fn five_generated_example() -> (NumericalSemigroup, NgVector) {
        let s = sg(&[13, 45, 72, 79, 99]);
        let ng = ng_vectors(&s).unwrap().pop().unwrap();
        assert_eq!(ng.entries, vec![244, 212, 185, 244, 244]);
        (s, ng)
    }

    #[test]
    fn rf_plus_small() {
        let s = sg(&[3, 4, 5]);
        let all = rf_plus(&s, 2).unwrap();
        // 2 + 3 = 5, 2 + 4 = 6 = 2*3, 2 + 5 = 7 = 3 + 4
        assert_eq!(all.len(), 1);
        assert_eq!(
            all[0].entries,
            vec![vec![-1, 0, 1], vec![2, -1, 0], vec![1, 1, -1]]
        );
        assert!(all[0].is_valid_for(&s));
        assert_eq!(rf_plus(&s, 3), Err(Error::NotPseudoFrobenius(3)));
    }

    #[test]
    fn rf_minus_example_rows() {
        let (s, ng) = five_generated_example();
        let all = rf_minus(&s, &ng, 59).unwrap();
        assert!(!all.is_empty());
        let h = ng.h.unwrap();
        let l = ng.ell.unwrap();
        for m in &all {
            assert!(m.is_valid_for(&s));
            // f_1 - 59 = -n_1 + 2 n_5, and likewise for rows 2 and 3
            for r in 0..3 {
                let mut expected = vec![0; 5];
                expected[r] = -1;
                expected[4] = 2;
                assert_eq!(m.entries[r], expected);
            }
            assert_eq!(m.entries[h][l], 0);
            assert_eq!(m.entries[l][h], 0);
        }
        assert_eq!(rf_minus(&s, &ng, 244), Err(Error::FIsNgEntry(244)));
    }

    #[test]
    fn coppie_on_example_pairs() {
        let (s, ng) = five_generated_example();
        let plus = rf_plus(&s, 59).unwrap();
        let minus = rf_minus(&s, &ng, 59).unwrap();
        for a in &plus {
            for b in &minus {
                assert!(check_coppie(a, b).unwrap());
            }
        }
        let other = rf_plus(&s, 185).unwrap();
        assert!(matches!(
            check_coppie(&other[0], &minus[0]),
            Err(Error::MismatchedF { .. })
        ));
        assert_eq!(
            check_coppie(&minus[0], &plus[0]),
            Err(Error::MismatchedKind)
        );
    }

    #[test]
    fn coppie_synthetic_violation() {
        let a = RfMatrix {
            kind: RfKind::Plus,
            f: 1,
            entries: vec![vec![-1, 2], vec![0, -1]],
            ng: None,
        };
        let b = RfMatrix {
            kind: RfKind::Minus,
            f: 1,
            entries: vec![vec![-1, 0], vec![3, -1]],
            ng: Some(vec![0, 0]),
        };
        assert!(!check_coppie(&a, &b).unwrap());
    }

    #[test]
    fn max_gaps() {
        let s = sg(&[3, 5]);
        let t = max_gap_table(&s);
        assert_eq!(t.lambda(0, 1), 2);
        assert_eq!(t.gap(0, 1), 7);
        let (s, _) = five_generated_example();
        let t = max_gap_table(&s);
        // 59 = 2 n_4 - n_5
        assert_eq!((t.lambda(4, 3), t.gap(4, 3)), (2, 59));
        for k in 0..5 {
            let col: BTreeSet<i64> = (0..5).filter(|&i| i != k).map(|i| t.gap(i, k)).collect();
            assert_eq!(col.len(), 4);
        }
    }

    #[test]
    fn classification_example() {
        let (s, ng) = five_generated_example();
        let cls = classify_pf(&s, &ng).unwrap();
        assert_eq!(cls.pf1, BTreeSet::from([59]));
        assert!(cls.pf2.is_empty());
        assert!(cls.witnesses[&59].contains(&Witness {
            side: RfKind::Plus,
            i: 4,
            j: 3,
            lambda: 2
        }));
        // every plus-side witness (i, j) of a PF element f means f = M_{i,j}
        let plus_rows = cls.witnesses[&59]
            .iter()
            .filter(|w| w.side == RfKind::Plus)
            .count();
        let mu = mu_values(&s, &cls).unwrap();
        assert_eq!(mu.mu.iter().sum::<usize>(), plus_rows);
        // 59 + 45 = 8 * 13, 59 + 13 = 72 and 59 + 99 = 2 * 79
        assert_eq!(mu.mu, vec![1, 0, 1, 1, 0]);
        assert_eq!(mu.bound, 38);
    }

    #[test]
    fn symmetric_classification_is_empty() {
        let s = sg(&[3, 5]);
        let ng = ng_vectors(&s).unwrap().remove(0);
        let cls = classify_pf(&s, &ng).unwrap();
        assert!(cls.pf1.is_empty() && cls.pf2.is_empty());
        assert!(matches!(
            mu_values(&s, &cls),
            Err(Error::WrongEmbeddingDimension {
                expected: 5,
                found: 2
            })
        ));
    }

    #[test]
    fn classification_requires_nearly_gorenstein() {
        let s = sg(&[67, 70, 74, 75]);
        let fake = NgVector {
            entries: vec![0; 4],
            h: None,
            ell: None,
            second: None,
        };
        assert_eq!(classify_pf(&s, &fake), Err(Error::NotNearlyGorenstein));
    }

    #[test]
    fn zero_masks() {
        let (s, _) = five_generated_example();
        for m in rf_plus(&s, 59).unwrap() {
            let mask = zero_pattern(&m);
            if m.entries[4] == vec![0, 0, 0, 2, -1] {
                assert_eq!(mask.row_counts()[4], 3);
            }
        }
        let full = RfMatrix {
            kind: RfKind::Plus,
            f: 0,
            entries: vec![vec![-1, 1], vec![1, -1]],
            ng: None,
        };
        assert!(zero_pattern(&full).is_empty());
    }

    #[test]
    fn enumeration_index_roundtrip() {
        let s = sg(&[6, 7, 9, 10]);
        for f in s.pseudo_frobenius() {
            let e = rf_plus_enumeration(&s, f).unwrap();
            let all: Vec<_> = e.iter().collect();
            assert_eq!(all.len() as u128, e.count());
            for m in &all {
                assert!(e.contains(m));
                assert!(m.is_valid_for(&s));
            }
            assert!(matches!(
                e.collect_capped(0),
                Err(Error::EnumerationCap { cap: 0, .. })
            ));
        }
    }
}
