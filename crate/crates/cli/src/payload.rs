//! JSON payloads for output records. Indices are 1-based throughout.

use serde_json::{json, Value};
use sgp_core::gorenstein::{self, SecondForm};
use sgp_core::rf::MuValues;
use sgp_core::{NgVector, NumericalSemigroup, PfClassification, RfMatrix};

pub fn info(s: &NumericalSemigroup) -> Value {
    json!({
        "generators": s.generators(),
        "multiplicity": s.multiplicity(),
        "embedding_dimension": s.embedding_dimension(),
        "frobenius": s.frobenius(),
        "genus": s.genus(),
        "pf": s.pseudo_frobenius(),
        "type": s.semigroup_type(),
        "symmetric": gorenstein::is_symmetric(s),
        "almost_symmetric": gorenstein::is_almost_symmetric(s),
        "nearly_gorenstein": gorenstein::is_nearly_gorenstein(s),
    })
}

pub fn ng_vector(v: &NgVector) -> Value {
    let second = v.second.as_ref().map(|sd| {
        let form = match &sd.form {
            Some(SecondForm::Generator { ell }) => json!({ "form": "generator", "ell": ell + 1 }),
            Some(SecondForm::MultipleOfH { a }) => json!({ "form": "multiple_of_h", "a": a }),
            None => Value::Null,
        };
        json!({ "index": sd.index + 1, "form": form })
    });
    json!({
        "entries": v.entries,
        "h": v.h.map(|h| h + 1),
        "ell": v.ell.map(|l| l + 1),
        "second": second,
    })
}

pub fn matrix(m: &RfMatrix) -> Value {
    json!({ "kind": m.kind, "f": m.f, "ng": m.ng, "entries": m.entries })
}

pub fn classification(c: &PfClassification, mu: Option<&MuValues>) -> Value {
    let witnesses: serde_json::Map<String, Value> = c
        .witnesses
        .iter()
        .map(|(f, ws)| {
            let list = ws
                .iter()
                .map(|w| json!({ "side": w.side, "i": w.i + 1, "j": w.j + 1, "lambda": w.lambda }))
                .collect();
            (f.to_string(), Value::Array(list))
        })
        .collect();
    json!({
        "ng_vector": ng_vector(&c.ng),
        "pf1": c.pf1,
        "pf2": c.pf2,
        "witnesses": witnesses,
        "mu": mu,
    })
}
