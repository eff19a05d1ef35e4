//! Problem files: a fan, an optional subtorus action, and named divisors.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use torgit_core::lattice::{IVec, Int};
use torgit_core::{DivisorGroup, Fan, IntMatrix, Linearization, SubtorusAction, ToricDivisor};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub lattice_rank: usize,
    pub rays: Vec<Vec<i64>>,
    /// Maximal cones as lists of ray indices.
    pub cones: Vec<Vec<usize>>,
    /// One row per lattice coordinate, one column per basis vector of the subtorus.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<i64>>>,
    #[serde(default)]
    pub divisors: BTreeMap<String, Vec<i64>>,
    /// Character shift per divisor name; missing names get the zero shift.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub shifts: BTreeMap<String, Vec<i64>>,
    /// Default group, used when `--group` is not given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub groups: BTreeMap<String, Vec<String>>,
}

/// A diagnostic for malformed or inconsistent input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub message: String,
}

impl InputError {
    pub fn new(message: impl Into<String>) -> Self {
        InputError { line: None, column: None, message: message.into() }
    }

    fn at(text: &str, key: &str, message: impl Into<String>) -> Self {
        let needle = format!("\"{key}\"");
        let line = text.lines().position(|l| l.contains(&needle)).map(|i| i + 1);
        InputError { line, column: None, message: message.into() }
    }
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.line, self.column) {
            (Some(l), Some(c)) => write!(f, "line {l}, column {c}: {}", self.message),
            (Some(l), None) => write!(f, "line {l}: {}", self.message),
            _ => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for InputError {}

pub fn ivec(xs: &[i64]) -> IVec {
    xs.iter().map(|&x| Int::from(x)).collect()
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// A validated problem.
#[derive(Clone, Debug)]
pub struct Problem {
    pub file: ProblemFile,
    pub fan: Fan,
    pub action: SubtorusAction,
    pub divisors: BTreeMap<String, ToricDivisor>,
    pub digest: String,
    text: String,
}

impl Problem {
    pub fn parse(text: &str) -> Result<Problem, InputError> {
        let file: ProblemFile = serde_json::from_str(text).map_err(|e| InputError {
            line: Some(e.line()),
            column: Some(e.column()),
            message: e.to_string().split(" at line ").next().unwrap_or_default().to_string(),
        })?;
        Self::validate(file, text)
    }

    pub fn from_file(file: ProblemFile) -> Result<Problem, InputError> {
        let text = serde_json::to_string_pretty(&file).expect("problem files serialize");
        Self::validate(file, &text)
    }

    fn validate(file: ProblemFile, text: &str) -> Result<Problem, InputError> {
        if file.cones.is_empty() {
            return Err(InputError::at(text, "cones", "fan has no cones"));
        }
        let rays: Vec<IVec> = file.rays.iter().map(|r| ivec(r)).collect();
        let fan = torgit_core::validate_fan(file.lattice_rank, &rays, &file.cones)
            .map_err(|e| InputError::at(text, "cones", format!("invalid fan: {e}")))?;
        let action = match &file.action {
            None => SubtorusAction::trivial(file.lattice_rank),
            Some(rows) => {
                if rows.len() != file.lattice_rank {
                    return Err(InputError::at(
                        text,
                        "action",
                        format!("action has {} rows, lattice rank is {}", rows.len(), file.lattice_rank),
                    ));
                }
                let d = rows.first().map_or(0, Vec::len);
                if let Some(i) = rows.iter().position(|r| r.len() != d) {
                    return Err(InputError::at(
                        text,
                        "action",
                        format!("action row {i} has {} entries, expected {d}", rows[i].len()),
                    ));
                }
                let m: Vec<IVec> = rows.iter().map(|r| ivec(r)).collect();
                SubtorusAction::new(IntMatrix::from_rows(d, &m))
                    .map_err(|e| InputError::at(text, "action", format!("invalid action: {e}")))?
            }
        };
        let mut divisors = BTreeMap::new();
        for (name, coeffs) in &file.divisors {
            let d = ToricDivisor::new(&fan, ivec(coeffs))
                .map_err(|e| InputError::at(text, name, format!("divisor {name}: {e}")))?;
            divisors.insert(name.clone(), d);
        }
        for (name, shift) in &file.shifts {
            if !divisors.contains_key(name) {
                return Err(InputError::at(text, name, format!("shift for unknown divisor {name}")));
            }
            if shift.len() != action.dim() {
                return Err(InputError::at(
                    text,
                    name,
                    format!("shift for {name} has {} entries, subtorus has dimension {}", shift.len(), action.dim()),
                ));
            }
        }
        let named = file.groups.iter().map(|(g, m)| (g.as_str(), m));
        for (gname, members) in named.chain(file.group.iter().map(|m| ("group", m))) {
            if let Some(m) = members.iter().find(|m| !divisors.contains_key(*m)) {
                return Err(InputError::at(text, gname, format!("group {gname} names unknown divisor {m}")));
            }
        }
        Ok(Problem { digest: sha256_hex(text.as_bytes()), file, fan, action, divisors, text: text.to_string() })
    }

    pub fn divisor(&self, name: &str) -> Result<&ToricDivisor, InputError> {
        self.divisors.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.divisors.keys().map(String::as_str).collect();
            InputError::new(format!("unknown divisor {name}; known: {}", known.join(", ")))
        })
    }

    pub fn shift(&self, name: &str) -> IVec {
        match self.file.shifts.get(name) {
            Some(s) => ivec(s),
            None => vec![Int::from(0); self.action.dim()],
        }
    }

    pub fn linearization(&self, names: &[String]) -> Linearization {
        Linearization::new(&self.action, names.iter().map(|n| self.shift(n)).collect())
            .expect("shift lengths are validated")
    }

    /// Resolves `--group`: a name from `groups`, a comma-separated list of
    /// divisor names, or the file's default `group` when absent.
    pub fn group(&self, spec: Option<&str>) -> Result<(Vec<String>, DivisorGroup), InputError> {
        let names: Vec<String> = match spec {
            Some(s) => match self.file.groups.get(s) {
                Some(members) => members.clone(),
                None => s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(String::from).collect(),
            },
            None => self
                .file
                .group
                .clone()
                .ok_or_else(|| InputError::new("no --group given and the problem file has no default group"))?,
        };
        let basis = names.iter().map(|n| self.divisor(n).cloned()).collect::<Result<Vec<_>, _>>()?;
        let group = DivisorGroup::new(&self.fan, basis)
            .map_err(|e| InputError::at(&self.text, "groups", format!("group [{}]: {e}", names.join(", "))))?;
        Ok((names, group))
    }
}
