//! End-to-end reproduction of the two worked examples: the plane with weights
//! `1, -1`, and the quadric cone whose quotient is `P^1`.

use serde_json::{json, Value};
use torgit_core::lattice::IVec;
use torgit_core::{
    build_quotient, class_group, obstruction_report, semistable_divisor, semistable_group, Face, GluedQuotient,
    SemistableLocus, SubfanLocus,
};

use crate::problem::{InputError, Problem};
use crate::report;

pub const QUADRIC: &str = include_str!("../fixtures/quadric.json");
pub const INTRO: &str = include_str!("../fixtures/intro.json");

pub fn builtin_quadric() -> Problem {
    Problem::parse(QUADRIC).expect("built-in quadric problem is valid")
}

pub fn builtin_intro() -> Problem {
    Problem::parse(INTRO).expect("built-in plane problem is valid")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Clause {
    pub name: &'static str,
    pub expected: Value,
    pub actual: Value,
}

impl Clause {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub clauses: Vec<Clause>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.clauses.iter().all(Clause::passed)
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.clauses.iter().filter(|c| !c.passed()).map(|c| c.name).collect()
    }

    pub fn to_value(&self) -> Value {
        let clauses: Vec<Value> = self
            .clauses
            .iter()
            .map(|c| json!({ "clause": c.name, "passed": c.passed(), "expected": c.expected, "actual": c.actual }))
            .collect();
        json!({
            "clauses": clauses,
            "passed": self.clauses.len() - self.failures().len(),
            "failed": self.failures().len(),
        })
    }
}

fn faces(list: &[&[usize]]) -> Value {
    Value::Array(list.iter().map(|f| json!(f)).collect())
}

fn error(e: impl std::fmt::Display) -> Value {
    json!({ "error": e.to_string() })
}

fn divisor_locus(p: &Problem, name: &str) -> Result<SemistableLocus, String> {
    let d = p.divisor(name).map_err(|e| e.to_string())?;
    semistable_divisor(&p.fan, &p.action, d, &p.linearization(&[name.to_string()])).map_err(|e| e.to_string())
}

fn group_locus(p: &Problem, name: &str) -> Result<SemistableLocus, String> {
    let (names, group) = p.group(Some(name)).map_err(|e: InputError| e.to_string())?;
    semistable_group(&p.fan, &p.action, &group, &p.linearization(&names)).map_err(|e| e.to_string())
}

/// Chart images as sorted ray lists, and the quotient flags.
fn quotient_summary(q: &GluedQuotient) -> Value {
    let mut images: Vec<Vec<IVec>> = q.charts.iter().map(|c| c.image.rays().to_vec()).collect();
    images.sort();
    let images: Vec<Value> = images.iter().map(|r| report::vectors(r)).collect();
    json!({
        "images": images,
        "good": q.good,
        "geometric": q.geometric,
        "separated": q.separated,
        "complete": q.fan.as_ref().map(|f| f.is_complete()),
    })
}

fn quotient_of(p: &Problem, ss: &Result<SemistableLocus, String>) -> Value {
    match ss {
        Ok(ss) => build_quotient(&p.fan, &p.action, ss).map_or_else(error, |q| quotient_summary(&q)),
        Err(e) => error(e),
    }
}

fn locus_value(ss: &Result<SemistableLocus, String>) -> Value {
    ss.as_ref().map_or_else(error, |s| report::locus(&s.locus))
}

/// Runs both examples and records each clause with its expected and actual value.
pub fn verify_paper(quadric: &Problem, intro: &Problem) -> Verification {
    let mut clauses = Vec::new();
    let mut push = |name, expected, actual| clauses.push(Clause { name, expected, actual });

    let single = divisor_locus(intro, "D");
    let group = group_locus(intro, "ZD");
    push("intro.divisor.locus", faces(&[&[], &[1]]), locus_value(&single));
    push(
        "intro.divisor.quotient",
        json!({ "images": [[[1]]], "good": true, "geometric": true, "separated": true, "complete": false }),
        quotient_of(intro, &single),
    );
    push("intro.group.locus", faces(&[&[], &[0], &[1]]), locus_value(&group));
    let doubled = match &group {
        Ok(ss) => build_quotient(&intro.fan, &intro.action, ss).map_or_else(error, |q| {
            json!({
                "images": quotient_summary(&q)["images"],
                "glued_along_zero": q.gluings.iter().all(|g| g.image.is_zero()),
                "good": q.good,
                "separated": q.separated,
            })
        }),
        Err(e) => error(e),
    };
    push(
        "intro.group.quotient",
        json!({ "images": [[[1]], [[1]]], "glued_along_zero": true, "good": true, "separated": false }),
        doubled,
    );
    let strict = match (&single, &group) {
        (Ok(a), Ok(b)) => json!(a.locus.is_subset(&b.locus) && a.locus != b.locus),
        _ => Value::Null,
    };
    push("intro.strict_inclusion", json!(true), strict);

    let ss = divisor_locus(quadric, "Dss");
    push("quadric.locus", faces(&[&[], &[0], &[2]]), locus_value(&ss));
    push(
        "quadric.quotient",
        json!({ "images": [[[-1]], [[1]]], "good": true, "geometric": true, "separated": true, "complete": true }),
        quotient_of(quadric, &ss),
    );
    let p = quadric.action.projection().matrix();
    let phi = quadric.action.phi().matrix();
    push(
        "quadric.projection",
        json!({ "rank": 1, "kills_subtorus": true }),
        json!({ "rank": p.rows(), "kills_subtorus": p.mul(phi).is_zero() }),
    );
    let u = SubfanLocus::downward_closure(&quadric.fan, &[Face::new(vec![0]), Face::new(vec![2])]);
    let obstruction = obstruction_report(&quadric.fan, &quadric.action, &u).map_or_else(error, |r| {
        let verdict = if r.obstructed { "no trivial-bundle character yields U" } else { "not obstructed" };
        json!({ "verdict": verdict, "common_is_zero": r.common.is_zero(), "realized_by": r.realized_by.map(|c| report::vector(&c)) })
    });
    push(
        "quadric.obstruction",
        json!({ "verdict": "no trivial-bundle character yields U", "common_is_zero": true, "realized_by": null }),
        obstruction,
    );
    let c = class_group(&quadric.fan);
    push(
        "quadric.class_group",
        json!({ "class_rank": 1, "class_torsion": [], "picard_rank": 0 }),
        json!({ "class_rank": c.rank, "class_torsion": report::vector(&c.torsion), "picard_rank": c.picard_rank }),
    );
    Verification { clauses }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_examples_verify() {
        let v = verify_paper(&builtin_quadric(), &builtin_intro());
        assert!(v.passed(), "{:#}", v.to_value());
    }
}
