//! Brute-force reference for the semistable loci.
//!
//! Everything here is bounded enumeration over machine integers: monomials in
//! a box, degrees up to a bound, Cartier data and invertible sections by
//! exhaustive search. It uses no cone or feasibility code, so it is an
//! independent inner bound for the engine. Each chart it accepts is also
//! replayed through the certificate checker.

use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use crate::action::{Linearization, SubtorusAction};
use crate::certificate::{
    replay, CertificateKind, InvertibleWitness, ReplayContext, SemistabilityCertificate, SemistableLocus, Weights,
};
use crate::lattice::{IVec, Int};
use crate::toric::{DivisorGroup, Face, Fan, SubfanLocus, ToricDivisor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest degree `n` tried for a single divisor.
    pub n_max: i64,
    /// Largest absolute value of a monomial exponent coordinate.
    pub exponent_box: i64,
    /// Largest absolute value of a group degree coordinate.
    pub degree_box: i64,
}

/// What to enumerate witnesses for.
#[derive(Clone, Copy, Debug)]
pub enum OracleProblem<'a> {
    Divisor(&'a ToricDivisor, &'a Linearization),
    Group(&'a DivisorGroup, &'a Linearization),
}

fn small(x: &Int) -> i64 {
    x.to_i64().expect("oracle input fits in i64")
}

fn small_vec(v: &[Int]) -> Vec<i64> {
    v.iter().map(small).collect()
}

fn big_vec(v: &[i64]) -> IVec {
    v.iter().map(|&x| Int::from(x)).collect()
}

fn dot64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Every integer vector in `[-b, b]^dim`, in lexicographic order.
fn box_points(dim: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|p| {
                (-b..=b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Rank over the rationals by fraction-free elimination.
fn rank64(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for i in 0..m.len() {
            if i != rank && m[i][c] != 0 {
                let (a, b) = (m[rank][c], m[i][c]);
                let pivot = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = *x * a - y * b;
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x.abs()));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

type SideData = Option<(Vec<IVec>, Vec<InvertibleWitness>)>;

struct Data {
    rays: Vec<Vec<i64>>,
    phi_star: Vec<Vec<i64>>,
    divisors: Vec<Vec<i64>>,
    shifts: Vec<Vec<i64>>,
}

impl Data {
    fn orders(&self, u: &[i64], m: &[i64]) -> Vec<i64> {
        self.rays
            .iter()
            .enumerate()
            .map(|(r, v)| dot64(u, v) + m.iter().zip(&self.divisors).map(|(mi, d)| mi * d[r]).sum::<i64>())
            .collect()
    }

    fn invariant(&self, u: &[i64], m: &[i64]) -> bool {
        self.phi_star
            .iter()
            .enumerate()
            .all(|(j, row)| dot64(row, u) + m.iter().zip(&self.shifts).map(|(mi, s)| mi * s[j]).sum::<i64>() == 0)
    }
}

/// Charts certified by exhaustive search; an inner bound of the engine locus.
pub fn enumerate_witnesses(
    fan: &Fan,
    action: &SubtorusAction,
    problem: OracleProblem<'_>,
    bounds: SearchBounds,
) -> SemistableLocus {
    let (kind, divisors, lin): (CertificateKind, Vec<IVec>, &Linearization) = match problem {
        OracleProblem::Divisor(d, lin) => (CertificateKind::Divisor, vec![d.coefficients().to_vec()], lin),
        OracleProblem::Group(g, lin) => (CertificateKind::Group, g.coefficient_vectors(), lin),
    };
    let data = Data {
        rays: fan.rays().iter().map(|v| small_vec(v)).collect(),
        phi_star: action.phi_star().row_vecs().iter().map(|v| small_vec(v)).collect(),
        divisors: divisors.iter().map(|v| small_vec(v)).collect(),
        shifts: lin.shifts().iter().map(|v| small_vec(v)).collect(),
    };
    let k = divisors.len();
    let r = fan.ambient_rank();
    let exponents = box_points(r, bounds.exponent_box);
    let degrees: Vec<Vec<i64>> = match kind {
        CertificateKind::Divisor => (1..=bounds.n_max).map(|n| vec![n]).collect(),
        _ => box_points(k, bounds.degree_box),
    };
    let ctx = ReplayContext {
        fan,
        divisors: &divisors,
        weights: Some(Weights { phi_star: action.phi_star(), shifts: lin.shifts() }),
    };

    let mut certificates: BTreeMap<Face, SemistabilityCertificate> = BTreeMap::new();
    let mut side: BTreeMap<Face, SideData> = BTreeMap::new();
    for m in &degrees {
        let sections: Vec<(&Vec<i64>, Vec<i64>)> = exponents
            .iter()
            .filter(|u| data.invariant(u, m))
            .map(|u| (u, data.orders(u, m)))
            .filter(|(_, b)| b.iter().all(|&x| x >= 0))
            .collect();
        if sections.is_empty() {
            continue;
        }
        for tau in fan.faces().iter().rev() {
            if certificates.contains_key(tau) {
                continue;
            }
            let found = sections
                .iter()
                .find(|(_, b)| (0..b.len()).all(|rho| if tau.contains_ray(rho) { b[rho] == 0 } else { b[rho] > 0 }));
            let Some((u, _)) = found else {
                continue;
            };
            let extra =
                side.entry(tau.clone()).or_insert_with(|| side_data(&data, tau, kind, &exponents, bounds)).clone();
            let Some((cartier, invertibles)) = extra else {
                continue;
            };
            let cert = SemistabilityCertificate {
                kind,
                cone: tau.clone(),
                degree: big_vec(m),
                monomial: big_vec(u),
                cartier,
                invertibles,
                index: None,
            };
            if replay(&cert, &ctx).is_ok() {
                certificates.insert(tau.clone(), cert);
            }
        }
    }
    let tops: Vec<Face> = certificates.keys().cloned().collect();
    let locus = SubfanLocus::downward_closure(fan, &tops);
    let maximal = locus.maximal_faces();
    certificates.retain(|f, _| maximal.contains(f));
    SemistableLocus { locus, certificates, guard_rejections: Vec::new() }
}

/// Cartier data for every basis divisor and, for groups, invertible sections
/// spanning a full-rank set of degrees.
fn side_data(data: &Data, tau: &Face, kind: CertificateKind, exponents: &[Vec<i64>], bounds: SearchBounds) -> SideData {
    let local = |w: &[i64], m: &[i64]| {
        tau.rays().iter().all(|&rho| {
            dot64(w, &data.rays[rho]) == -m.iter().zip(&data.divisors).map(|(mi, d)| mi * d[rho]).sum::<i64>()
        })
    };
    let k = data.divisors.len();
    let mut cartier = Vec::new();
    for i in 0..k {
        let mut e = vec![0; k];
        e[i] = 1;
        let w = exponents.iter().find(|w| local(w, &e))?;
        cartier.push(big_vec(w));
    }
    let mut invertibles = Vec::new();
    if kind == CertificateKind::Group {
        let mut chosen: Vec<Vec<i64>> = Vec::new();
        for m in box_points(k, bounds.degree_box) {
            if m.iter().all(|&x| x == 0) {
                continue;
            }
            let mut trial = chosen.clone();
            trial.push(m.clone());
            if rank64(&trial) <= chosen.len() {
                continue;
            }
            if let Some(w) = exponents.iter().find(|w| local(w, &m) && data.invariant(w, &m)) {
                invertibles.push(InvertibleWitness { divisor: big_vec(&m), exponent: big_vec(w) });
                chosen = trial;
                if chosen.len() == k {
                    break;
                }
            }
        }
        if chosen.len() != k {
            return None;
        }
    }
    Some((cartier, invertibles))
}

/// Trivial-bundle loci at every character in `[-resolution, resolution]^d`.
pub fn sample_chambers(
    fan: &Fan,
    action: &SubtorusAction,
    resolution: i64,
    bounds: SearchBounds,
) -> Vec<(IVec, SubfanLocus)> {
    let zero = ToricDivisor::zero(fan);
    box_points(action.dim(), resolution)
        .into_iter()
        .map(|chi| {
            let shift: IVec = chi.iter().map(|&x| Int::from(-x)).collect();
            let lin = Linearization::new(action, vec![shift]).expect("character has the right length");
            let ss = enumerate_witnesses(fan, action, OracleProblem::Divisor(&zero, &lin), bounds);
            (big_vec(&chi), ss.locus)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::ivec;

    fn locus(faces: &[&[usize]]) -> SubfanLocus {
        SubfanLocus::from_faces(faces.iter().map(|f| Face::new(f.to_vec())))
    }

    #[test]
    fn quadric_oracle() {
        let fan = fixtures::quadric_fan();
        let act = fixtures::quadric_action();
        let d = fixtures::quadric_divisor(&fan);
        let lin = Linearization::canonical(&act, 1);
        let ss = enumerate_witnesses(&fan, &act, OracleProblem::Divisor(&d, &lin), fixtures::quadric_bounds());
        assert_eq!(ss.locus, locus(&[&[], &[0], &[2]]));
    }

    #[test]
    fn intro_oracle() {
        let fan = fixtures::intro_fan();
        let act = fixtures::intro_action();
        let d = fixtures::intro_divisor(&fan);
        let lin = Linearization::canonical(&act, 1);
        let ss = enumerate_witnesses(&fan, &act, OracleProblem::Divisor(&d, &lin), fixtures::intro_bounds());
        assert_eq!(ss.locus, locus(&[&[], &[1]]));
        let g = DivisorGroup::generated_by(d);
        let ss = enumerate_witnesses(&fan, &act, OracleProblem::Group(&g, &lin), fixtures::intro_bounds());
        assert_eq!(ss.locus, locus(&[&[], &[0], &[1]]));
    }

    #[test]
    fn generic_shift_has_no_sections() {
        let fan = fixtures::intro_fan();
        let act = fixtures::intro_action();
        // Sections of nD have weight a - b + 5n with a >= -n, b >= 0 bounded by the box.
        let lin = Linearization::new(&act, vec![ivec(&[5])]).unwrap();
        let d = fixtures::intro_divisor(&fan);
        let bounds = SearchBounds { n_max: 2, exponent_box: 3, degree_box: 1 };
        let ss = enumerate_witnesses(&fan, &act, OracleProblem::Divisor(&d, &lin), bounds);
        assert!(ss.locus.is_empty());
    }

    #[test]
    fn intro_samples() {
        let fan = fixtures::intro_fan();
        let act = fixtures::intro_action();
        let samples = sample_chambers(&fan, &act, 3, fixtures::intro_bounds());
        let at = |x: i64| samples.iter().find(|(c, _)| c == &ivec(&[x])).unwrap().1.clone();
        assert_eq!(at(-2), locus(&[&[], &[0]]));
        assert_eq!(at(0), SubfanLocus::whole(&fan));
        assert_eq!(at(3), locus(&[&[], &[1]]));
    }
}
