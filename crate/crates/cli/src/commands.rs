use std::path::Path;

use serde_json::{json, Map, Value};
use torgit_core::certificate::{replay_locus, CertificateKind, ReplayContext, SemistableLocus, Weights};
use torgit_core::hm::{cross_validate, destabilize, limit, LinearAction, PointPattern};
use torgit_core::lattice::{IVec, Int};
use torgit_core::oracle::{enumerate_witnesses, OracleProblem, SearchBounds};
use torgit_core::{
    ample_locus, build_quotient, cartier_locus, class_group, git_chambers, is_affine, is_cartier_on,
    mumford_trivial_semistable, obstruction_report, semistable_divisor, semistable_group, Face, Linearization,
    SubfanLocus, ToricDivisor,
};

use crate::paper;
use crate::problem::{sha256_hex, InputError, Problem};
use crate::report::{self, Report, Status};
use crate::{Cli, Command, HmCommand, Target};

pub(crate) fn load(path: &Path) -> Result<Problem, InputError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| InputError::new(format!("cannot read {}: {e}", path.display())))?;
    Problem::parse(&text).map_err(|e| InputError::new(format!("{}: {e}", path.display())))
}

fn parse_ints(flag: &str, s: &str) -> Result<IVec, InputError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<Int>().map_err(|_| InputError::new(format!("{flag}: '{x}' is not an integer"))))
        .collect()
}

fn parse_indices(flag: &str, s: &str) -> Result<Vec<usize>, InputError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| InputError::new(format!("{flag}: '{x}' is not an index"))))
        .collect()
}

fn parse_weights(s: &str) -> Result<LinearAction, InputError> {
    let weights = s.split(';').map(|w| parse_ints("--weights", w)).collect::<Result<Vec<_>, _>>()?;
    let dim = weights.first().map_or(0, Vec::len);
    LinearAction::new(dim, weights).map_err(|e| InputError::new(format!("--weights: {e}")))
}

fn pattern(act: &LinearAction, flag: &str, s: Option<&str>) -> Result<PointPattern, InputError> {
    match s {
        None => Ok(PointPattern::full(act)),
        Some(s) => PointPattern::new(act, parse_indices(flag, s)?).map_err(|e| InputError::new(format!("{flag}: {e}"))),
    }
}

fn pattern_value(p: &PointPattern) -> Value {
    json!(p.support().iter().collect::<Vec<_>>())
}

fn input(e: impl std::fmt::Display) -> InputError {
    InputError::new(e.to_string())
}

/// A computed payload and its verdict.
struct Outcome {
    result: Value,
    status: Status,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome { result, status: Status::Ok }
    }
}

/// How to replay the certificates of a locus.
struct Replay {
    kind: CertificateKind,
    divisors: Vec<IVec>,
    /// `None` for ample loci.
    shifts: Option<Vec<IVec>>,
}

impl Replay {
    fn run(&self, p: &Problem, ss: &SemistableLocus) -> Result<usize, String> {
        let weights = self.shifts.as_ref().map(|s| Weights { phi_star: p.action.phi_star(), shifts: s });
        let ctx = ReplayContext { fan: &p.fan, divisors: &self.divisors, weights };
        replay_locus(ss, self.kind, &ctx).map(|()| ss.certificates.len()).map_err(|e| e.to_string())
    }
}

/// The locus payload, with an `affine` chart and, under `--check`, the replay outcome.
fn locus_outcome(p: &Problem, ss: &SemistableLocus, replay: &Replay, check: bool) -> (Map<String, Value>, Status) {
    let mut m = match report::semistable(ss) {
        Value::Object(m) => m,
        _ => unreachable!("semistable reports are objects"),
    };
    m.insert("affine".into(), is_affine(&p.fan, &ss.locus).map_or(Value::Null, |f| report::face(&f)));
    let mut status =
        if ss.locus.is_empty() { Status::Negative("semistable locus is empty".into()) } else { Status::Ok };
    if check {
        match replay.run(p, ss) {
            Ok(n) => {
                m.insert("check".into(), json!({ "replayed": n, "passed": true }));
            }
            Err(e) => {
                m.insert("check".into(), json!({ "passed": false, "error": e }));
                status = Status::Negative(format!("certificate check failed: {e}"));
            }
        }
    }
    (m, status)
}

fn divisor_locus(p: &Problem, name: &str) -> Result<(SemistableLocus, Replay, Value), InputError> {
    let d = p.divisor(name)?;
    let lin = p.linearization(&[name.to_string()]);
    let ss = semistable_divisor(&p.fan, &p.action, d, &lin).map_err(input)?;
    let replay = Replay {
        kind: CertificateKind::Divisor,
        divisors: vec![d.coefficients().to_vec()],
        shifts: Some(lin.shifts().to_vec()),
    };
    Ok((ss, replay, json!({ "divisor": name, "coefficients": report::vector(d.coefficients()) })))
}

fn group_locus(p: &Problem, spec: Option<&str>) -> Result<(SemistableLocus, Replay, Value), InputError> {
    let (names, group) = p.group(spec)?;
    let lin = p.linearization(&names);
    let ss = semistable_group(&p.fan, &p.action, &group, &lin).map_err(input)?;
    let replay = Replay {
        kind: CertificateKind::Group,
        divisors: group.coefficient_vectors(),
        shifts: Some(lin.shifts().to_vec()),
    };
    Ok((ss, replay, json!({ "group": names })))
}

fn target_locus(p: &Problem, t: &Target) -> Result<(SemistableLocus, Replay, Value), InputError> {
    match (&t.divisor, &t.group) {
        (Some(d), _) => divisor_locus(p, d),
        (None, g) => group_locus(p, g.as_deref()),
    }
}

fn with_input(mut m: Map<String, Value>, input: Value) -> Value {
    m.insert("input".into(), input);
    Value::Object(m)
}

fn cartier(p: &Problem, spec: Option<&str>, check: bool) -> Result<Outcome, InputError> {
    let (names, group) = p.group(spec)?;
    let locus = cartier_locus(&p.fan, &group);
    let mut failures = Vec::new();
    let certificates: Vec<Value> = locus
        .maximal_faces()
        .iter()
        .map(|f| {
            let equations: Vec<IVec> = group
                .basis()
                .iter()
                .map(|d| is_cartier_on(&p.fan, d, f).expect("face is in the Cartier locus"))
                .collect();
            if check {
                for (i, (d, m)) in group.basis().iter().zip(&equations).enumerate() {
                    for &rho in f.rays() {
                        let v = torgit_core::lattice::dot(m, p.fan.ray(rho));
                        if v != -&d.coefficients()[rho] {
                            failures.push(format!("divisor {i} on face {f}, ray {rho}"));
                        }
                    }
                }
            }
            json!({ "chart": report::face(f), "local_equations": report::vectors(&equations) })
        })
        .collect();
    let mut result = json!({
        "group": names,
        "locus": report::locus(&locus),
        "maximal": report::faces(&locus.maximal_faces()),
        "certificates": certificates,
        "cartier_everywhere": locus == SubfanLocus::from_faces(p.fan.faces().iter().cloned()),
    });
    let mut status = Status::Ok;
    if check {
        result["check"] = json!({ "passed": failures.is_empty(), "failures": failures });
        if !failures.is_empty() {
            status = Status::Negative("local equation check failed".into());
        }
    }
    Ok(Outcome { result, status })
}

fn ample(p: &Problem, spec: Option<&str>, check: bool) -> Result<Outcome, InputError> {
    let (names, group) = p.group(spec)?;
    let ss = ample_locus(&p.fan, &group);
    let replay = Replay { kind: CertificateKind::Ample, divisors: group.coefficient_vectors(), shifts: None };
    let (m, status) = locus_outcome(p, &ss, &replay, check);
    let status = match status {
        Status::Negative(r) if ss.locus.is_empty() => Status::Negative(r.replace("semistable", "ample")),
        s => s,
    };
    Ok(Outcome { result: with_input(m, json!({ "group": names })), status })
}

fn semistable(p: &Problem, t: &Target, check: bool) -> Result<Outcome, InputError> {
    let (ss, replay, input) = target_locus(p, t)?;
    let (m, status) = locus_outcome(p, &ss, &replay, check);
    Ok(Outcome { result: with_input(m, input), status })
}

fn trivial_replay(p: &Problem, chi: &[Int]) -> Replay {
    Replay {
        kind: CertificateKind::Divisor,
        divisors: vec![ToricDivisor::zero(&p.fan).coefficients().to_vec()],
        shifts: Some(vec![chi.iter().map(|x| -x).collect()]),
    }
}

fn trivial(p: &Problem, character: &str, check: bool) -> Result<Outcome, InputError> {
    let chi = parse_ints("--character", character)?;
    let ss = mumford_trivial_semistable(&p.fan, &p.action, &chi).map_err(input)?;
    let (m, status) = locus_outcome(p, &ss, &trivial_replay(p, &chi), check);
    Ok(Outcome { result: with_input(m, json!({ "character": report::vector(&chi) })), status })
}

fn chambers(p: &Problem, check: bool) -> Result<Outcome, InputError> {
    let chambers = git_chambers(&p.fan, &p.action).map_err(input)?;
    let mut status = Status::Ok;
    let list: Vec<Value> = chambers
        .iter()
        .map(|c| {
            let (m, s) = locus_outcome(p, &c.locus, &trivial_replay(p, &c.sample), check);
            if let (Status::Negative(r), Status::Ok) = (&s, &status) {
                if r.starts_with("certificate") {
                    status = s.clone();
                }
            }
            json!({ "cone": report::cone(&c.cone), "sample": report::vector(&c.sample), "semistable": Value::Object(m) })
        })
        .collect();
    Ok(Outcome { result: json!({ "count": list.len(), "chambers": list }), status })
}

fn obstruction(p: &Problem, specs: &[String]) -> Result<Outcome, InputError> {
    let mut tops = Vec::new();
    for s in specs {
        let f = Face::new(parse_indices("--face", s)?);
        if !p.fan.contains_face(&f) {
            return Err(InputError::new(format!("--face: {f} is not a face of the fan")));
        }
        tops.push(f);
    }
    let required = SubfanLocus::downward_closure(&p.fan, &tops);
    let r = obstruction_report(&p.fan, &p.action, &required).map_err(input)?;
    let cones: Vec<Value> =
        r.weight_cones.iter().map(|(g, k)| json!({ "face": report::face(g), "cone": report::cone(k) })).collect();
    let pairwise: Vec<Value> = r
        .pairwise
        .iter()
        .map(|(a, b, k)| json!({ "faces": [report::face(a), report::face(b)], "cone": report::cone(k) }))
        .collect();
    let verdict = if r.obstructed { "no trivial-bundle character yields the required locus" } else { "not obstructed" };
    let result = json!({
        "required": report::locus(&r.required),
        "weight_cones": cones,
        "pairwise": pairwise,
        "common": report::cone(&r.common),
        "trivial_locus": report::locus(&r.trivial_locus),
        "obstructed": r.obstructed,
        "verdict": verdict,
        "realized_by": r.realized_by.as_ref().map_or(Value::Null, |c| report::vector(c)),
    });
    let status = if r.obstructed { Status::Negative(verdict.into()) } else { Status::Ok };
    Ok(Outcome { result, status })
}

fn quotient(p: &Problem, t: &Target, check: bool) -> Result<Outcome, InputError> {
    let (ss, replay, given) = target_locus(p, t)?;
    let (mut m, status) = locus_outcome(p, &ss, &replay, check);
    if !ss.locus.is_empty() {
        let q = build_quotient(&p.fan, &p.action, &ss).map_err(input)?;
        m.insert("quotient".into(), report::quotient(&q));
    }
    Ok(Outcome { result: with_input(m, given), status })
}

fn classes(p: &Problem) -> Outcome {
    let c = class_group(&p.fan);
    Outcome::ok(json!({
        "rank": c.rank,
        "torsion": report::vector(&c.torsion),
        "torus_factor": c.torus_factor,
        "picard_rank": c.picard_rank,
        "picard_torsion": report::vector(&c.picard_torsion),
    }))
}

fn hm(cmd: &HmCommand) -> Result<Outcome, InputError> {
    match cmd {
        HmCommand::Limit { weights, support, lambda } => {
            let act = parse_weights(weights)?;
            let p = pattern(&act, "--support", support.as_deref())?;
            let lambda = parse_ints("--lambda", lambda)?;
            if lambda.len() != act.dim() {
                return Err(InputError::new(format!(
                    "--lambda has {} entries, weights have {}",
                    lambda.len(),
                    act.dim()
                )));
            }
            let l = limit(&lambda, &p, &act);
            let result = json!({
                "support": pattern_value(&p),
                "lambda": report::vector(&lambda),
                "limit": l.as_ref().map_or(Value::Null, pattern_value),
            });
            let status = if l.is_some() { Status::Ok } else { Status::Negative("limit does not exist".into()) };
            Ok(Outcome { result, status })
        }
        HmCommand::Destabilize { weights, support, target } => {
            let act = parse_weights(weights)?;
            let p = pattern(&act, "--support", support.as_deref())?;
            let allowed = match target {
                Some(t) => PointPattern::new(&act, parse_indices("--target", t)?).map_err(input)?,
                None => PointPattern::empty(),
            };
            let lambda = destabilize(&p, |z| z.is_subset(&allowed), &act);
            let reached = lambda.as_ref().and_then(|l| limit(l, &p, &act));
            let result = json!({
                "support": pattern_value(&p),
                "target": pattern_value(&allowed),
                "lambda": lambda.as_ref().map_or(Value::Null, |l| report::vector(l)),
                "limit": reached.as_ref().map_or(Value::Null, pattern_value),
            });
            let status = match lambda {
                Some(_) => Status::Ok,
                None => Status::Negative("no one-parameter subgroup reaches the target".into()),
            };
            Ok(Outcome { result, status })
        }
        HmCommand::CrossValidate { .. } => unreachable!("handled with its problem file"),
    }
}

fn cross(p: &Problem, name: &str, max_basis: usize) -> Result<Outcome, InputError> {
    let d = p.divisor(name)?;
    let lin: Linearization = p.linearization(&[name.to_string()]);
    let cv = cross_validate(&p.fan, &p.action, d, &lin, max_basis).map_err(input)?;
    let faces: Vec<Value> = cv
        .faces
        .iter()
        .map(|f| {
            json!({
                "face": report::face(&f.face),
                "pattern": pattern_value(&f.pattern),
                "toric_semistable": f.toric_semistable,
                "destabilizer": f.destabilizer.as_ref().map_or(Value::Null, |l| report::vector(l)),
                "agrees": f.agrees(),
            })
        })
        .collect();
    let result = json!({
        "coordinates": report::vectors(&cv.model.coordinates),
        "weights": report::vectors(cv.model.action.weights()),
        "faces": faces,
        "agrees": cv.agrees(),
    });
    let status =
        if cv.agrees() { Status::Ok } else { Status::Negative("toric and Hilbert–Mumford loci differ".into()) };
    Ok(Outcome { result, status })
}

fn oracle(p: &Problem, t: &Target, bounds: SearchBounds) -> Result<Outcome, InputError> {
    let ss = match (&t.divisor, &t.group) {
        (Some(name), _) => {
            let lin = p.linearization(std::slice::from_ref(name));
            enumerate_witnesses(&p.fan, &p.action, OracleProblem::Divisor(p.divisor(name)?, &lin), bounds)
        }
        (None, g) => {
            let (names, group) = p.group(g.as_deref())?;
            let lin = p.linearization(&names);
            enumerate_witnesses(&p.fan, &p.action, OracleProblem::Group(&group, &lin), bounds)
        }
    };
    Ok(Outcome::ok(report::semistable(&ss)))
}

pub(crate) fn execute(cli: &Cli, command: Vec<String>) -> Result<Report, InputError> {
    let check = cli.check;
    let (digest, outcome) = match &cli.command {
        Command::Hm(HmCommand::CrossValidate { file, divisor, max_basis }) => {
            let p = load(file)?;
            (p.digest.clone(), cross(&p, divisor, *max_basis)?)
        }
        Command::Hm(cmd) => (sha256_hex(command.join("\u{0}").as_bytes()), hm(cmd)?),
        Command::VerifyPaper { quadric, intro } => {
            let q = quadric.as_deref().map(load).transpose()?;
            let i = intro.as_deref().map(load).transpose()?;
            let q = q.unwrap_or_else(paper::builtin_quadric);
            let i = i.unwrap_or_else(paper::builtin_intro);
            let digest = sha256_hex(format!("{}\n{}", q.digest, i.digest).as_bytes());
            let v = paper::verify_paper(&q, &i);
            let status = if v.passed() {
                Status::Ok
            } else {
                Status::Negative(format!("failed clauses: {}", v.failures().join(", ")))
            };
            (digest, Outcome { result: v.to_value(), status })
        }
        Command::CartierLocus { file, group } => {
            let p = load(file)?;
            (p.digest.clone(), cartier(&p, group.as_deref(), check)?)
        }
        Command::AmpleLocus { file, group } => {
            let p = load(file)?;
            (p.digest.clone(), ample(&p, group.as_deref(), check)?)
        }
        Command::Semistable { file, target } => {
            let p = load(file)?;
            (p.digest.clone(), semistable(&p, target, check)?)
        }
        Command::TrivialBundle { file, character } => {
            let p = load(file)?;
            (p.digest.clone(), trivial(&p, character, check)?)
        }
        Command::Chambers { file } => {
            let p = load(file)?;
            (p.digest.clone(), chambers(&p, check)?)
        }
        Command::Obstruction { file, faces } => {
            let p = load(file)?;
            (p.digest.clone(), obstruction(&p, faces)?)
        }
        Command::Quotient { file, target } => {
            let p = load(file)?;
            (p.digest.clone(), quotient(&p, target, check)?)
        }
        Command::ClassGroup { file } => {
            let p = load(file)?;
            (p.digest.clone(), classes(&p))
        }
        Command::Oracle { file, target, n_max, exponent_box, degree_box } => {
            let p = load(file)?;
            let bounds = SearchBounds { n_max: *n_max, exponent_box: *exponent_box, degree_box: *degree_box };
            (p.digest.clone(), oracle(&p, target, bounds)?)
        }
    };
    Ok(Report { command, input_digest: digest, result: outcome.result, status: outcome.status })
}
