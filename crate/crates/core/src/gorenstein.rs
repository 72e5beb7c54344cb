//! Canonical ideal, the symmetric / almost symmetric / nearly Gorenstein
//! predicates, and NG-vectors.
//!
//! Indices into generator lists are 0-based throughout the API.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// A set of integers that contains every integer from `conductor` on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    elements_below_conductor: Vec<i64>,
    conductor: i64,
}

impl RelativeIdeal {
    /// Normalizes so that `conductor` is the least value with the tail
    /// property.
    pub fn new(mut elements: Vec<i64>, mut conductor: i64) -> Self {
        elements.retain(|&x| x < conductor);
        elements.sort_unstable();
        elements.dedup();
        while elements.last() == Some(&(conductor - 1)) {
            elements.pop();
            conductor -= 1;
        }
        Self {
            elements_below_conductor: elements,
            conductor,
        }
    }

    /// `S` itself as an ideal.
    pub fn from_semigroup(s: &NumericalSemigroup) -> Self {
        let f = s.frobenius();
        Self::new((0..=f).filter(|&x| s.contains(x)).collect(), f + 1)
    }

    /// The maximal ideal `M(S) = S \ {0}`.
    pub fn maximal_ideal(s: &NumericalSemigroup) -> Self {
        let f = s.frobenius();
        let conductor = (f + 1).max(1);
        Self::new(
            (1..conductor).filter(|&x| s.contains(x)).collect(),
            conductor,
        )
    }

    pub fn elements_below_conductor(&self) -> &[i64] {
        &self.elements_below_conductor
    }

    pub fn conductor(&self) -> i64 {
        self.conductor
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= self.conductor || self.elements_below_conductor.binary_search(&x).is_ok()
    }

    pub fn min(&self) -> i64 {
        self.elements_below_conductor
            .first()
            .copied()
            .unwrap_or(self.conductor)
    }

    /// `self + S ⊆ self`, tested on `[min, conductor + n_nu]`.
    pub fn is_ideal_of(&self, s: &NumericalSemigroup) -> bool {
        let top = self.conductor + s.generators().last().copied().unwrap_or(1);
        (self.min()..=top)
            .filter(|&x| self.contains(x))
            .all(|x| s.generators().iter().all(|&g| self.contains(x + g)))
    }

    pub fn is_subset_of(&self, s: &NumericalSemigroup) -> bool {
        self.elements_below_conductor.iter().all(|&x| s.contains(x))
            && (self.conductor..=s.frobenius()).all(|x| s.contains(x))
    }
}

/// `K(S) = { x in N : F(S) - x not in S }`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let f = s.frobenius();
    RelativeIdeal::new((0..=f).filter(|&x| !s.contains(f - x)).collect(), f + 1)
}

pub fn is_symmetric(s: &NumericalSemigroup) -> bool {
    let symmetric = canonical_ideal(s) == RelativeIdeal::from_semigroup(s);
    debug_assert_eq!(symmetric, s.pseudo_frobenius().len() == 1);
    symmetric
}

pub fn is_almost_symmetric(s: &NumericalSemigroup) -> bool {
    is_almost_symmetric_with(s, &s.pseudo_frobenius())
}

pub(crate) fn is_almost_symmetric_with(s: &NumericalSemigroup, pf: &[i64]) -> bool {
    let f = s.frobenius();
    let result = s
        .generators()
        .iter()
        .all(|&n| pf.iter().all(|&g| s.contains(n + f - g)));
    debug_assert_eq!(
        result,
        pf.iter()
            .filter(|&&g| g != f)
            .all(|&g| pf.binary_search(&(f - g)).is_ok()),
        "almost symmetry criteria disagree for {s}"
    );
    result
}

/// Per-index candidate sets `T_i = { g in PF : n_i + g - f in S for all f in PF }`,
/// each sorted in decreasing order.
pub fn ng_candidates(s: &NumericalSemigroup) -> Vec<Vec<i64>> {
    ng_candidates_with(s, &s.pseudo_frobenius())
}

pub(crate) fn ng_candidates_with(s: &NumericalSemigroup, pf: &[i64]) -> Vec<Vec<i64>> {
    s.generators()
        .iter()
        .map(|&n| {
            pf.iter()
                .rev()
                .copied()
                .filter(|&g| pf.iter().all(|&f| s.contains(n + g - f)))
                .collect()
        })
        .collect()
}

pub fn is_nearly_gorenstein(s: &NumericalSemigroup) -> bool {
    ng_candidates(s).iter().all(|t| !t.is_empty())
}

/// Independent test of `K(S) + (S - K(S)) ⊇ M(S)` by direct set arithmetic.
///
/// `S - K(S)` lies inside `S` and contains `F(S) + 1`, so only elements of
/// `M(S)` up to `2F(S) + 1` need checking.
pub fn nearly_gorenstein_via_trace(s: &NumericalSemigroup) -> bool {
    let f = s.frobenius();
    if f < 0 {
        return true;
    }
    let k = canonical_ideal(s);
    let low = k.elements_below_conductor();
    let top = 2 * f + 1;
    let dual: Vec<i64> = (0..=top)
        .filter(|&x| s.contains(x) && low.iter().all(|&e| s.contains(x + e)))
        .collect();
    (1..=top).filter(|&m| s.contains(m)).all(|m| {
        dual.iter()
            .take_while(|&&x| x <= m)
            .any(|&x| k.contains(m - x))
    })
}

/// Shape of the second index `h'` whose entry differs from `F(S)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum SecondForm {
    /// `f_{h'} = F(S) - n_{h'} + n_{ell'}` with `ell' < h'`.
    Generator { ell: usize },
    /// `f_{h'} = F(S) - n_{h'} + a * n_h` with `a >= 1`.
    MultipleOfH { a: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondDivergence {
    pub index: usize,
    /// `None` when neither form applies.
    pub form: Option<SecondForm>,
}

/// `(f_1, ..., f_nu)` with `n_i + f_i - f in S` for every `f in PF(S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NgVector {
    pub entries: Vec<i64>,
    /// Least index with `f_h != F(S)`.
    pub h: Option<usize>,
    /// The `ell < h` with `f_h = F(S) - n_h + n_ell`, if any.
    pub ell: Option<usize>,
    pub second: Option<SecondDivergence>,
}

impl NgVector {
    /// Validates `entries` against the definition and annotates it.
    pub fn from_entries(s: &NumericalSemigroup, entries: Vec<i64>) -> Result<Self> {
        let pf = s.pseudo_frobenius();
        Self::from_entries_with(s, &pf, entries)
    }

    pub(crate) fn from_entries_with(
        s: &NumericalSemigroup,
        pf: &[i64],
        entries: Vec<i64>,
    ) -> Result<Self> {
        let n = s.generators();
        let valid = entries.len() == n.len()
            && entries.iter().zip(n).all(|(&fi, &ni)| {
                pf.binary_search(&fi).is_ok() && pf.iter().all(|&f| s.contains(ni + fi - f))
            });
        if !valid {
            return Err(Error::InvalidNgVector(entries));
        }
        Ok(Self::annotate(s, entries))
    }

    fn annotate(s: &NumericalSemigroup, entries: Vec<i64>) -> Self {
        let n = s.generators();
        let frob = s.frobenius();
        let h = entries.iter().position(|&e| e != frob);
        let ell = h.and_then(|h| (0..h).find(|&l| entries[h] == frob - n[h] + n[l]));
        let second = h.and_then(|h| {
            let hp = (h + 1..entries.len()).find(|&i| entries[i] != frob)?;
            let v = n[hp] + entries[hp] - frob;
            let form = if let Some(l) = (0..hp).find(|&l| n[l] == v) {
                Some(SecondForm::Generator { ell: l })
            } else if v > 0 && v % n[h] == 0 {
                Some(SecondForm::MultipleOfH { a: v / n[h] })
            } else {
                None
            };
            Some(SecondDivergence { index: hp, form })
        });
        Self {
            entries,
            h,
            ell,
            second,
        }
    }

    /// Whether `f` equals some entry.
    pub fn has_entry(&self, f: i64) -> bool {
        self.entries.contains(&f)
    }

    /// Number of entries different from `F(S)`.
    pub fn divergent_count(&self, frobenius: i64) -> usize {
        self.entries.iter().filter(|&&e| e != frobenius).count()
    }
}

/// All NG-vectors, the Cartesian product of the candidate sets in
/// lexicographically decreasing order.
pub fn ng_vectors(s: &NumericalSemigroup) -> Result<Vec<NgVector>> {
    ng_vectors_with(s, &s.pseudo_frobenius())
}

pub(crate) fn ng_vectors_with(s: &NumericalSemigroup, pf: &[i64]) -> Result<Vec<NgVector>> {
    let cands = ng_candidates_with(s, pf);
    if cands.iter().any(|t| t.is_empty()) {
        return Err(Error::NotNearlyGorenstein);
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; cands.len()];
    loop {
        let entries = idx.iter().zip(&cands).map(|(&i, t)| t[i]).collect();
        out.push(NgVector::annotate(s, entries));
        let mut pos = cands.len();
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < cands[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn canonical_ideal_examples() {
        let s = sg(&[2, 3]);
        assert_eq!(canonical_ideal(&s), RelativeIdeal::from_semigroup(&s));
        let s = sg(&[3, 5]);
        assert_eq!(canonical_ideal(&s), RelativeIdeal::from_semigroup(&s));
        // F = 2, K = {0, 1, 3, ...}: 2 - 1 = 1 is a gap, 2 - 2 = 0 is not.
        let k = canonical_ideal(&sg(&[3, 4, 5]));
        assert_eq!(k.elements_below_conductor(), &[0, 1]);
        assert_eq!(k.conductor(), 3);
        assert!(k.contains(1) && !k.contains(2));
    }

    #[test]
    fn symmetry_predicates() {
        assert!(is_symmetric(&sg(&[2, 3])));
        assert!(!is_symmetric(&sg(&[3, 4, 5])));
        assert!(!is_symmetric(&sg(&[13, 45, 72, 79, 99])));
        assert!(is_almost_symmetric(&sg(&[3, 4, 5])));
        assert!(is_almost_symmetric(&sg(&[455, 497, 574, 589, 631, 708])));
        assert!(!is_almost_symmetric(&sg(&[13, 45, 72, 79, 99])));
    }

    #[test]
    fn nearly_gorenstein_example() {
        let s = sg(&[13, 45, 72, 79, 99]);
        assert!(is_nearly_gorenstein(&s));
        assert!(nearly_gorenstein_via_trace(&s));
        assert_eq!(
            ng_candidates(&s),
            vec![vec![244], vec![212], vec![244, 185], vec![244], vec![244]]
        );
        let v = ng_vectors(&s).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].entries, vec![244, 212, 244, 244, 244]);
        assert_eq!(v[1].entries, vec![244, 212, 185, 244, 244]);
        // 212 = 244 - 45 + 13
        assert_eq!((v[1].h, v[1].ell), (Some(1), Some(0)));
        let second = v[1].second.as_ref().unwrap();
        assert_eq!(second.index, 2);
        // 72 + 185 - 244 = 13 = n_1
        assert_eq!(second.form, Some(SecondForm::Generator { ell: 0 }));
        assert!(v[0].second.is_none());
    }

    #[test]
    fn symmetric_has_single_vector() {
        let s = sg(&[5, 7, 11]);
        if is_symmetric(&s) {
            let v = ng_vectors(&s).unwrap();
            assert_eq!(v.len(), 1);
            assert!(v[0].entries.iter().all(|&e| e == s.frobenius()));
        }
        let s = sg(&[3, 5]);
        let v = ng_vectors(&s).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].entries, vec![7, 7]);
        assert_eq!(v[0].h, None);
    }

    #[test]
    fn big_almost_symmetric_vector() {
        let s = sg(&[455, 497, 574, 589, 631, 708]);
        let v = ng_vectors(&s).unwrap();
        assert!(v.iter().any(|x| x.entries == vec![7846; 6]));
        assert!(ng_candidates(&s).iter().all(|t| t.contains(&7846)));
    }

    #[test]
    fn non_nearly_gorenstein_errors() {
        // Backelin T = 2 has type 8 > 3 with four generators.
        let s = sg(&[67, 70, 74, 75]);
        assert!(!is_nearly_gorenstein(&s));
        assert!(!nearly_gorenstein_via_trace(&s));
        assert_eq!(ng_vectors(&s), Err(Error::NotNearlyGorenstein));
    }

    #[test]
    fn validated_vector() {
        let s = sg(&[13, 45, 72, 79, 99]);
        assert!(NgVector::from_entries(&s, vec![244, 212, 185, 244, 244]).is_ok());
        assert!(matches!(
            NgVector::from_entries(&s, vec![244, 244, 244, 244, 244]),
            Err(Error::InvalidNgVector(_))
        ));
    }

    #[test]
    fn maximal_ideal_is_an_ideal() {
        let s = sg(&[3, 4, 5]);
        let m = RelativeIdeal::maximal_ideal(&s);
        assert_eq!(m.min(), 3);
        assert!(m.is_ideal_of(&s) && m.is_subset_of(&s));
        let k = canonical_ideal(&s);
        assert!(k.is_ideal_of(&s) && !k.is_subset_of(&s));
        let mn = RelativeIdeal::maximal_ideal(&NumericalSemigroup::whole());
        assert_eq!((mn.min(), mn.conductor()), (1, 1));
    }
}
