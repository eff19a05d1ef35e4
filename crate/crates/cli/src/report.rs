//! Reports: a command echo, the input digest, a JSON payload and a status.
//!
//! Both output formats are rendered from the same `serde_json::Value`, whose
//! objects keep keys sorted, so identical inputs give identical bytes.

use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};
use torgit_core::lattice::Int;
use torgit_core::{
    Cone, Face, GluedQuotient, InvertibleWitness, SemistabilityCertificate, SemistableLocus, SubfanLocus,
};

pub const VERSION: &str = concat!("torgit ", env!("CARGO_PKG_VERSION"));

/// Whether the command reached a positive or a negative verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A valid answer in the negative: empty locus, obstruction, failed check.
    Negative(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: Vec<String>,
    pub input_digest: String,
    pub result: Value,
    pub status: Status,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::Negative(_) => 1,
        }
    }

    pub fn to_value(&self) -> Value {
        let (status, reason) = match &self.status {
            Status::Ok => ("ok", Value::Null),
            Status::Negative(r) => ("negative", Value::String(r.clone())),
        };
        json!({
            "version": VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "status": status,
            "reason": reason,
            "result": self.result,
        })
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_value()).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{VERSION}\ncommand: {}\ninput: {}\n", self.command.join(" "), self.input_digest));
        match &self.status {
            Status::Ok => out.push_str("status: ok\n"),
            Status::Negative(r) => out.push_str(&format!("status: negative ({r})\n")),
        }
        render(&mut out, &self.result, 0);
        out
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

/// Scalars and arrays of arrays of scalars print inline; everything else nests.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(is_flat) => Some(serde_json::to_string(v).expect("serializes")),
        Value::Array(_) | Value::Object(_) => None,
        other => Some(other.to_string()),
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match inline(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(out, x, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other).unwrap_or_default())),
    }
}

/// An integer as a JSON number when it fits, as a decimal string otherwise.
pub fn int(x: &Int) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::String(x.to_string()),
    }
}

pub fn vector(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn vectors(vs: &[Vec<Int>]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

pub fn face(f: &Face) -> Value {
    json!(f.rays())
}

pub fn faces<'a>(fs: impl IntoIterator<Item = &'a Face>) -> Value {
    Value::Array(fs.into_iter().map(face).collect())
}

pub fn locus(l: &SubfanLocus) -> Value {
    faces(l.faces())
}

pub fn cone(c: &Cone) -> Value {
    json!({ "rays": vectors(c.rays()), "lineality": vectors(c.lineality()), "dim": c.dim() })
}

fn invertible(w: &InvertibleWitness) -> Value {
    json!({ "divisor": vector(&w.divisor), "exponent": vector(&w.exponent) })
}

pub fn certificate(c: &SemistabilityCertificate) -> Value {
    let mut m = Map::new();
    m.insert("chart".into(), face(&c.cone));
    m.insert("kind".into(), Value::String(format!("{:?}", c.kind).to_lowercase()));
    m.insert("degree".into(), vector(&c.degree));
    m.insert("monomial".into(), vector(&c.monomial));
    m.insert("cartier".into(), vectors(&c.cartier));
    if !c.invertibles.is_empty() {
        m.insert("invertibles".into(), Value::Array(c.invertibles.iter().map(invertible).collect()));
    }
    if let Some(i) = &c.index {
        m.insert("index".into(), int(i));
    }
    Value::Object(m)
}

/// The locus, its maximal faces and every certificate.
pub fn semistable(ss: &SemistableLocus) -> Value {
    let mut m = Map::new();
    m.insert("locus".into(), locus(&ss.locus));
    m.insert("maximal".into(), faces(&ss.locus.maximal_faces()));
    m.insert("certificates".into(), Value::Array(ss.certificates.values().map(certificate).collect()));
    if !ss.guard_rejections.is_empty() {
        m.insert("guard_rejections".into(), faces(&ss.guard_rejections));
    }
    Value::Object(m)
}

pub fn quotient(q: &GluedQuotient) -> Value {
    let charts: Vec<Value> =
        q.charts.iter().map(|c| json!({ "source": face(&c.source), "image": cone(&c.image) })).collect();
    let gluings: Vec<Value> = q
        .gluings
        .iter()
        .map(|g| {
            json!({
                "charts": [g.first, g.second],
                "source": face(&g.source),
                "image": cone(&g.image),
                "saturated": g.saturated,
                "separated": g.separated,
            })
        })
        .collect();
    let orbits: Vec<Value> = q
        .orbit_map
        .iter()
        .map(|o| json!({ "chart": o.chart, "face": face(&o.face), "image": vectors(o.image.rays()) }))
        .collect();
    let fan = match (&q.fan, &q.fan_error) {
        (Some(f), _) => json!({
            "rays": vectors(f.rays()),
            "cones": faces(f.maximal_cones()),
            "complete": f.is_complete(),
        }),
        (None, Some(e)) => json!({ "error": e.to_string() }),
        (None, None) => Value::Null,
    };
    json!({
        "projection": vectors(&q.projection.matrix().row_vecs()),
        "torsion": vector(&q.torsion),
        "charts": charts,
        "gluings": gluings,
        "orbit_map": orbits,
        "good": q.good,
        "geometric": q.geometric,
        "separated": q.separated,
        "fan": fan,
    })
}
