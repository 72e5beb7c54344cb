use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sgp_core::gorenstein::{is_nearly_gorenstein, ng_candidates, ng_vectors};
use sgp_core::rf::{classify_pf, max_gap_table};
use sgp_core::verify::GenusTree;
use sgp_core::NumericalSemigroup;

const GENUS: u64 = 16;

#[test]
fn max_gap_table_definition() {
    for s in GenusTree::new(GENUS).filter(|s| !s.is_whole()) {
        let n = s.generators();
        let t = max_gap_table(&s);
        for i in 0..n.len() {
            for j in (0..n.len()).filter(|&j| j != i) {
                let l = t.lambda(i, j);
                assert!(l >= 1);
                assert!(!s.contains(t.gap(i, j)), "{s:?} ({i},{j})");
                assert_eq!(t.gap(i, j), l * n[j] - n[i]);
                // nothing larger is a gap
                let mut k = l + 1;
                while k * n[j] - n[i] <= s.frobenius() {
                    assert!(s.contains(k * n[j] - n[i]));
                    k += 1;
                }
            }
        }
        for k in 0..n.len() {
            let mut col: Vec<i64> = (0..n.len())
                .filter(|&i| i != k)
                .map(|i| t.gap(i, k))
                .collect();
            col.sort_unstable();
            col.dedup();
            assert_eq!(col.len(), n.len() - 1, "repeated M in column {k} of {s:?}");
        }
    }
}

#[test]
fn plus_forms_are_unique() {
    for s in GenusTree::new(GENUS).filter(|s| !s.is_whole()) {
        let n = s.generators();
        let t = max_gap_table(&s);
        let pf = s.pseudo_frobenius();
        for i in 0..n.len() {
            for j in (0..n.len()).filter(|&j| j != i) {
                let hits: Vec<i64> = pf
                    .iter()
                    .copied()
                    .filter(|&f| f + n[i] >= n[j] && (f + n[i]) % n[j] == 0)
                    .collect();
                assert!(hits.len() <= 1, "{s:?} ({i},{j}): {hits:?}");
                if let Some(&f) = hits.first() {
                    assert_eq!(f, t.gap(i, j));
                }
            }
        }
    }
}

/// The argument only uses maximality of PF under `<=_S`, so it is checked
/// for every candidate entry `f_i` and hence every NG-vector at once.
#[test]
fn minus_forms_are_unique() {
    for s in GenusTree::new(GENUS).filter(|s| !s.is_whole() && is_nearly_gorenstein(s)) {
        let n = s.generators();
        let pf = s.pseudo_frobenius();
        for (i, cands) in ng_candidates(&s).iter().enumerate() {
            for &fi in cands {
                for j in (0..n.len()).filter(|&j| j != i) {
                    let hits = pf
                        .iter()
                        .filter(|&&f| {
                            let v = n[i] + fi - f;
                            v >= n[j] && v % n[j] == 0
                        })
                        .count();
                    assert!(hits <= 1, "{s:?} i={i} f_i={fi} j={j}");
                }
            }
        }
    }
}

/// `(i, j, l, p, q)` with `f + n_i` supported exactly on `{j, l}`, `f + n_p`
/// supported exactly on `{j, q}`, and the `n_j` coefficient of the first at
/// least that of the second.
fn shapes(s: &NumericalSemigroup, f: i64) -> Vec<[usize; 5]> {
    let n = s.generators();
    let supports: Vec<Vec<Vec<i64>>> = n
        .iter()
        .map(|&ni| {
            s.factorizations(f + ni)
                .into_iter()
                .filter(|fv| fv.support_size() == 2)
                .map(|fv| fv.coeffs)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for i in 0..5 {
        for p in (0..5).filter(|&p| p != i) {
            for a in &supports[i] {
                for b in &supports[p] {
                    let shared: Vec<usize> = (0..5).filter(|&k| a[k] > 0 && b[k] > 0).collect();
                    let [j] = shared[..] else { continue };
                    let l = (0..5).find(|&k| k != j && a[k] > 0).unwrap();
                    let q = (0..5).find(|&k| k != j && b[k] > 0).unwrap();
                    let mut idx = [i, j, l, p, q];
                    idx.sort_unstable();
                    if idx == [0, 1, 2, 3, 4] && a[j] >= b[j] {
                        out.push([i, j, l, p, q]);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Counts shaped representations; panics on two distinct `f` sharing a shape.
fn scan_pf2_forms(s: &NumericalSemigroup) -> usize {
    let mut instances = 0;
    for v in ng_vectors(s).unwrap() {
        let cls = classify_pf(s, &v).unwrap();
        let mut seen: BTreeMap<[usize; 5], i64> = BTreeMap::new();
        for &f in &cls.pf2 {
            for shape in shapes(s, f) {
                instances += 1;
                if let Some(&g) = seen.get(&shape) {
                    assert_eq!(f, g, "{s:?} {:?} shape {shape:?}", v.entries);
                }
                seen.insert(shape, f);
            }
        }
    }
    instances
}

#[test]
fn pf2_form_lemma_small_genus() {
    let mut instances = 0;
    for s in GenusTree::new(18).filter(|s| s.embedding_dimension() == 5 && is_nearly_gorenstein(s))
    {
        instances += scan_pf2_forms(&s);
    }
    eprintln!("pf2 form lemma, genus <= 18: {instances} shaped representations");
}

/// Random five-generated NG semigroups with `PF_2` nonempty for some
/// NG-vector, found by rejection sampling.
#[test]
fn pf2_form_lemma_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut hits, mut with_pair, mut instances) = (0, 0, 0);
    for _ in 0..40_000 {
        let m = rng.random_range(6..=80);
        let w = rng.random_range(2..=4);
        let mut g: Vec<i64> = vec![m];
        g.extend((0..4).map(|_| rng.random_range(m + 1..=w * m)));
        let Ok(s) = NumericalSemigroup::new(&g) else {
            continue;
        };
        if s.embedding_dimension() != 5 || s.frobenius() > 20_000 || !is_nearly_gorenstein(&s) {
            continue;
        }
        if ng_candidates(&s).iter().map(Vec::len).product::<usize>() > 64 {
            continue;
        }
        let pf2 = ng_vectors(&s)
            .unwrap()
            .iter()
            .map(|v| classify_pf(&s, v).unwrap().pf2.len())
            .max()
            .unwrap_or(0);
        if pf2 == 0 {
            continue;
        }
        hits += 1;
        with_pair += usize::from(pf2 >= 2);
        instances += scan_pf2_forms(&s);
    }
    eprintln!(
        "pf2 form lemma: {hits} semigroups with PF2 nonempty, {with_pair} with two or more, \
         {instances} shaped representations"
    );
    assert!(hits > 0);
}
