//! Plain-text rendering of output records.

use std::fmt::Write;

use serde_json::Value;

fn list(v: &Value) -> String {
    match v {
        Value::Array(xs) => xs.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => scalar(other),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn fields(out: &mut String, v: &Value, keys: &[&str]) {
    let width = keys.iter().map(|k| k.len()).max().unwrap_or(0);
    for k in keys {
        if let Some(x) = v.get(*k) {
            let _ = writeln!(out, "{k:<width$}  {}", list(x));
        }
    }
}

fn matrix(out: &mut String, rows: &Value) {
    let Some(rows) = rows.as_array() else { return };
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.as_array().into_iter().flatten().map(scalar).collect())
        .collect();
    let w = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for r in &cells {
        let line: Vec<String> = r.iter().map(|c| format!("{c:>w$}")).collect();
        let _ = writeln!(out, "  [ {} ]", line.join(" "));
    }
}

const INFO_KEYS: &[&str] = &[
    "generators",
    "multiplicity",
    "embedding_dimension",
    "frobenius",
    "genus",
    "pf",
    "type",
    "symmetric",
    "almost_symmetric",
    "nearly_gorenstein",
];

pub fn render(kind: &str, p: &Value) -> String {
    let mut out = String::new();
    if let Some(e) = p.get("error") {
        let _ = write!(out, "{kind}: {} ({})", scalar(&p["message"]), scalar(e));
        return out;
    }
    match kind {
        "info" => fields(&mut out, p, INFO_KEYS),
        "ngvectors" => {
            fields(&mut out, p, &["generators", "frobenius"]);
            for (i, v) in p["vectors"].as_array().into_iter().flatten().enumerate() {
                let _ = write!(
                    out,
                    "#{:<3} ({})  h={} ell={}",
                    i + 1,
                    list(&v["entries"]),
                    scalar(&v["h"]),
                    scalar(&v["ell"])
                );
                if let Some(sd) = v.get("second").filter(|x| !x.is_null()) {
                    let _ = write!(out, "  h'={} {}", scalar(&sd["index"]), sd["form"]);
                }
                out.push('\n');
            }
        }
        "rf" => {
            if let Some(c) = p.get("count") {
                let _ = writeln!(
                    out,
                    "{} matrices for f = {} ({})",
                    scalar(c),
                    scalar(&p["f"]),
                    scalar(&p["kind"])
                );
                let _ = writeln!(out, "row counts: {}", list(&p["row_counts"]));
            } else {
                let _ = writeln!(
                    out,
                    "{} {} / {}, f = {}",
                    scalar(&p["kind"]),
                    scalar(&p["index"]),
                    scalar(&p["of"]),
                    scalar(&p["f"])
                );
                matrix(&mut out, &p["entries"]);
            }
        }
        "classify" => {
            let _ = writeln!(out, "NG-vector ({})", list(&p["ng_vector"]["entries"]));
            fields(&mut out, p, &["pf1", "pf2"]);
            if let Some(mu) = p.get("mu").filter(|m| !m.is_null()) {
                let _ = writeln!(
                    out,
                    "mu   {}  bound {}",
                    list(&mu["mu"]),
                    scalar(&mu["bound"])
                );
            }
        }
        "verify" => {
            if let Some(r) = p.get("report") {
                let _ = writeln!(out, "<{}>", list(&r["semigroup"]));
                for c in r["claims"].as_array().into_iter().flatten() {
                    let _ = writeln!(
                        out,
                        "  {:<16} {}",
                        scalar(&c["claim"]),
                        scalar(&c["status"])
                    );
                }
            } else if let Some(s) = p.get("summary") {
                let _ = writeln!(
                    out,
                    "semigroups {}  failures {}",
                    s["semigroups"], s["total_failures"]
                );
                let _ = writeln!(
                    out,
                    "{:<16} {:>8} {:>6} {:>12} {:>8}",
                    "claim", "pass", "fail", "inapplicable", "flagged"
                );
                if let Some(claims) = s["claims"].as_object() {
                    for (id, t) in claims {
                        let _ = writeln!(
                            out,
                            "{id:<16} {:>8} {:>6} {:>12} {:>8}",
                            t["pass"], t["fail"], t["inapplicable"], t["flagged"]
                        );
                    }
                }
                let _ = writeln!(
                    out,
                    "\n{:>4} {:>5} {:>5} {:>8} {:>8}",
                    "nu", "NG", "AS", "count", "max t"
                );
                for c in s["cells"].as_array().into_iter().flatten() {
                    let _ = writeln!(
                        out,
                        "{:>4} {:>5} {:>5} {:>8} {:>8}",
                        c["nu"], c["ng"], c["as"], c["count"], c["max_type"]
                    );
                }
            }
        }
        "construct" => {
            let _ = writeln!(out, "{} {}", scalar(&p["family"]), p["params"]);
            for k in ["f", "progression", "labeled_generators"] {
                if let Some(x) = p.get(k) {
                    let _ = writeln!(out, "{k}  {}", list(x));
                }
            }
            for l in p
                .get("levels")
                .and_then(Value::as_array)
                .into_iter()
                .flatten()
            {
                let _ = writeln!(
                    out,
                    "level nu={} t={} t-2nu={}",
                    l["embedding_dimension"], l["type"], l["excess"]
                );
            }
            fields(&mut out, &p["semigroup"], INFO_KEYS);
        }
        _ => out.push_str(&p.to_string()),
    }
    out.truncate(out.trim_end().len());
    out
}
