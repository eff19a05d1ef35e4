//! Semistability certificates and their replay.
//!
//! A certificate names a chart `τ`, a degree, and a monomial section `f` of
//! that degree whose order is zero exactly along the rays of `τ`, so that
//! `X \ Z(f)` is the affine chart `U_τ`.
//! The checker here evaluates every clause directly with integer arithmetic:
//! it does not call the cone or feasibility code.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lattice::{dot, fmt_vec, IVec, Int, IntMatrix};
use crate::toric::{Face, Fan, SubfanLocus};

/// Which definition the certificate witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CertificateKind {
    /// Single linearized divisor: positive degree, invariant section.
    Divisor,
    /// Linearized divisor group: any degree in the group, invariant section,
    /// plus a finite-index sublattice of degrees with invertible invariant sections.
    Group,
    /// Ample locus: any degree, no invariance required.
    Ample,
}

/// `χ^exponent` is an invariant invertible section of the given group element on the chart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvertibleWitness {
    /// Coordinates in the group basis.
    pub divisor: IVec,
    pub exponent: IVec,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemistabilityCertificate {
    pub kind: CertificateKind,
    pub cone: Face,
    /// `[n]` for a single divisor, the coordinates of `D₀` for a group.
    pub degree: IVec,
    /// Exponent of the section `f`.
    pub monomial: IVec,
    /// Local equation of each basis divisor on the chart.
    pub cartier: Vec<IVec>,
    pub invertibles: Vec<InvertibleWitness>,
    /// Index of the invertible sublattice in the group, when finite.
    pub index: Option<Int>,
}

/// A locus together with one certificate per maximal face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemistableLocus {
    pub locus: SubfanLocus,
    pub certificates: BTreeMap<Face, SemistabilityCertificate>,
    /// Candidate charts whose witness failed the affineness guard.
    pub guard_rejections: Vec<Face>,
}

/// Weight data of a linearized subtorus action: `weight(u, m) = phi_star u + Σ m_i shifts_i`.
#[derive(Clone, Copy, Debug)]
pub struct Weights<'a> {
    pub phi_star: &'a IntMatrix,
    pub shifts: &'a [IVec],
}

impl Weights<'_> {
    pub fn weight(&self, u: &[Int], degree: &[Int]) -> IVec {
        let mut w = self.phi_star.mul_vec(u);
        for (m, shift) in degree.iter().zip(self.shifts) {
            for (wj, s) in w.iter_mut().zip(shift) {
                *wj += m * s;
            }
        }
        w
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReplayContext<'a> {
    pub fan: &'a Fan,
    /// Coefficient vectors of the basis divisors.
    pub divisors: &'a [IVec],
    /// `None` for ample-locus certificates.
    pub weights: Option<Weights<'a>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("chart {cone} is not a face of the fan")]
    UnknownCone { cone: Face },
    #[error("degree has {found} coordinates, expected {expected}")]
    DegreeArity { expected: usize, found: usize },
    #[error("degree {degree} is not positive")]
    NonPositiveDegree { degree: Int },
    #[error("monomial {exponent} is not a section: order {value} along ray {ray}")]
    NotASection { exponent: String, ray: usize, value: Int },
    #[error("monomial {exponent} is not invariant: weight {weight}")]
    NotInvariant { exponent: String, weight: String },
    #[error("complement of the zero set is {found}, not the chart {cone}")]
    NotAffineChart { cone: Face, found: String },
    #[error("missing local equation for basis divisor {divisor}")]
    CartierMissing { divisor: usize },
    #[error("local equation of basis divisor {divisor} fails on ray {ray}")]
    CartierFails { divisor: usize, ray: usize },
    #[error("invertible section for {divisor} fails: {reason}")]
    InvertibleFails { divisor: String, reason: String },
    #[error("invertible sublattice has rank {rank}, group has rank {expected}")]
    IndexNotFinite { rank: usize, expected: usize },
    #[error("certificate of kind {found:?} replayed as {expected:?}")]
    WrongKind { expected: CertificateKind, found: CertificateKind },
    #[error("maximal face {face} of the locus carries no certificate")]
    Uncertified { face: Face },
    #[error("locus differs from the union of certified charts")]
    LocusMismatch,
}

fn section_orders(ctx: &ReplayContext<'_>, u: &[Int], degree: &[Int]) -> IVec {
    ctx.fan
        .rays()
        .iter()
        .enumerate()
        .map(|(r, v)| {
            let twist: Int = degree.iter().zip(ctx.divisors).map(|(m, d)| m * &d[r]).sum();
            dot(u, v) + twist
        })
        .collect()
}

/// Checks one certificate clause by clause.
pub fn replay(cert: &SemistabilityCertificate, ctx: &ReplayContext<'_>) -> Result<(), ReplayError> {
    let fan = ctx.fan;
    let tau = &cert.cone;
    if !fan.contains_face(tau) {
        return Err(ReplayError::UnknownCone { cone: tau.clone() });
    }
    let k = ctx.divisors.len();
    if cert.degree.len() != k {
        return Err(ReplayError::DegreeArity { expected: k, found: cert.degree.len() });
    }
    if cert.kind == CertificateKind::Divisor && !cert.degree[0].is_positive() {
        return Err(ReplayError::NonPositiveDegree { degree: cert.degree[0].clone() });
    }

    let u = &cert.monomial;
    let b = section_orders(ctx, u, &cert.degree);
    if let Some((ray, value)) = b.iter().enumerate().find(|(_, x)| x.is_negative()) {
        return Err(ReplayError::NotASection { exponent: fmt_vec(u), ray, value: value.clone() });
    }
    if cert.kind != CertificateKind::Ample {
        let weights = ctx.weights.expect("invariance needs weight data");
        let w = weights.weight(u, &cert.degree);
        if w.iter().any(|x| !x.is_zero()) {
            return Err(ReplayError::NotInvariant { exponent: fmt_vec(u), weight: fmt_vec(&w) });
        }
    }
    let complement: Vec<Face> =
        fan.faces().iter().filter(|f| f.rays().iter().all(|&r| b[r].is_zero())).cloned().collect();
    if complement != fan.faces_below(tau) {
        let names: Vec<String> = complement.iter().map(|f| f.to_string()).collect();
        return Err(ReplayError::NotAffineChart { cone: tau.clone(), found: names.join(" ") });
    }

    if cert.cartier.len() != k {
        return Err(ReplayError::CartierMissing { divisor: cert.cartier.len().min(k) });
    }
    for (i, (m, d)) in cert.cartier.iter().zip(ctx.divisors).enumerate() {
        if let Some(&ray) = tau.rays().iter().find(|&&r| dot(m, fan.ray(r)) != -&d[r]) {
            return Err(ReplayError::CartierFails { divisor: i, ray });
        }
    }

    if cert.kind == CertificateKind::Group {
        let weights = ctx.weights.expect("group certificates need weight data");
        for inv in &cert.invertibles {
            let name = fmt_vec(&inv.divisor);
            if inv.divisor.len() != k {
                return Err(ReplayError::InvertibleFails { divisor: name, reason: "wrong arity".into() });
            }
            for &r in tau.rays() {
                let a: Int = inv.divisor.iter().zip(ctx.divisors).map(|(c, d)| c * &d[r]).sum();
                if dot(&inv.exponent, fan.ray(r)) != -a {
                    return Err(ReplayError::InvertibleFails {
                        divisor: name,
                        reason: format!("nonzero order along ray {r}"),
                    });
                }
            }
            let w = weights.weight(&inv.exponent, &inv.divisor);
            if w.iter().any(|x| !x.is_zero()) {
                return Err(ReplayError::InvertibleFails { divisor: name, reason: format!("weight {}", fmt_vec(&w)) });
            }
        }
        let rows: Vec<IVec> = cert.invertibles.iter().map(|i| i.divisor.clone()).collect();
        let rank = IntMatrix::from_rows(k, &rows).rank();
        if rank != k {
            return Err(ReplayError::IndexNotFinite { rank, expected: k });
        }
    }
    Ok(())
}

/// Replays every certificate of a locus and checks that the locus is the
/// union of the certified charts.
pub fn replay_locus(ss: &SemistableLocus, kind: CertificateKind, ctx: &ReplayContext<'_>) -> Result<(), ReplayError> {
    for face in ss.locus.maximal_faces() {
        if !ss.certificates.contains_key(&face) {
            return Err(ReplayError::Uncertified { face });
        }
    }
    for cert in ss.certificates.values() {
        if cert.kind != kind {
            return Err(ReplayError::WrongKind { expected: kind, found: cert.kind });
        }
        replay(cert, ctx)?;
    }
    if SubfanLocus::downward_closure(ctx.fan, ss.certificates.keys()) != ss.locus {
        return Err(ReplayError::LocusMismatch);
    }
    Ok(())
}
