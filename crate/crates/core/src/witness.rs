//! Chart-by-chart witness search shared by the ample and semistable loci.
//!
//! For a face `τ` the unknowns are the degree `m` followed by an exponent `u`.
//! The monomial `χ^u` must be a section of `Σ m_i D_i` of order zero along
//! every ray of `τ` and positive order along every other ray; with weights
//! present it must also be invariant. A sum of monomials would not do: on the
//! orbit of `τ` only its terms of order zero along all of `τ` survive.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::certificate::{CertificateKind, InvertibleWitness, SemistabilityCertificate, SemistableLocus, Weights};
use crate::cone::{feasible_strict, FeasibilitySystem};
use crate::lattice::{IVec, Int};
use crate::toric::{Face, Fan, SubfanLocus};

pub(crate) struct WitnessSetup<'a> {
    pub fan: &'a Fan,
    pub divisors: &'a [IVec],
    pub weights: Option<Weights<'a>>,
    pub positive_degree: bool,
}

pub(crate) enum ChartOutcome {
    Certified { degree: IVec, monomial: IVec },
    Infeasible,
    GuardRejected,
}

fn witness_system(setup: &WitnessSetup<'_>, tau: &Face) -> FeasibilitySystem {
    let fan = setup.fan;
    let k = setup.divisors.len();
    let dim = k + fan.ambient_rank();
    let mut sys = FeasibilitySystem::new(dim);
    for (rho, v) in fan.rays().iter().enumerate() {
        let mut form = vec![Int::zero(); dim];
        for (i, d) in setup.divisors.iter().enumerate() {
            form[i] = d[rho].clone();
        }
        form[k..].clone_from_slice(v);
        if tau.contains_ray(rho) {
            sys.equal(form);
        } else {
            sys.positive(form);
        }
    }
    if let Some(w) = &setup.weights {
        for j in 0..w.phi_star.rows() {
            let mut form = vec![Int::zero(); dim];
            for (i, shift) in w.shifts.iter().enumerate() {
                form[i] = shift[j].clone();
            }
            form[k..].clone_from_slice(w.phi_star.row(j));
            sys.equal(form);
        }
    }
    if setup.positive_degree {
        let mut form = vec![Int::zero(); dim];
        form[0] = Int::from(1);
        sys.positive(form);
    }
    sys
}

pub(crate) fn chart_witness(setup: &WitnessSetup<'_>, tau: &Face) -> ChartOutcome {
    let fan = setup.fan;
    let Some(x) = feasible_strict(&witness_system(setup, tau)) else {
        return ChartOutcome::Infeasible;
    };
    let k = setup.divisors.len();
    // The complement of the zero set is every fan face spanned by rays of τ.
    let open = fan.faces().iter().filter(|g| g.is_subset_of(tau));
    if open.clone().any(|g| !fan.cone(g).is_face_of(fan.cone(tau))) {
        return ChartOutcome::GuardRejected;
    }
    ChartOutcome::Certified { degree: x[..k].to_vec(), monomial: x[k..].to_vec() }
}

type SideData = (Vec<IVec>, Vec<InvertibleWitness>, Option<Int>);

/// Certifies charts from the largest face down, skipping faces already
/// covered; `side` supplies Cartier and invertibility data or rejects the face.
pub(crate) fn certify_faces(
    setup: &WitnessSetup<'_>,
    kind: CertificateKind,
    side: impl Fn(&Face) -> Option<SideData>,
) -> SemistableLocus {
    let mut certificates: BTreeMap<Face, SemistabilityCertificate> = BTreeMap::new();
    let mut guard_rejections = Vec::new();
    for tau in setup.fan.faces().iter().rev() {
        if certificates.keys().any(|c| tau.is_subset_of(c)) {
            continue;
        }
        let Some((cartier, invertibles, index)) = side(tau) else {
            continue;
        };
        match chart_witness(setup, tau) {
            ChartOutcome::Certified { degree, monomial } => {
                certificates.insert(
                    tau.clone(),
                    SemistabilityCertificate { kind, cone: tau.clone(), degree, monomial, cartier, invertibles, index },
                );
            }
            ChartOutcome::GuardRejected => guard_rejections.push(tau.clone()),
            ChartOutcome::Infeasible => {}
        }
    }
    SemistableLocus {
        locus: SubfanLocus::downward_closure(setup.fan, certificates.keys()),
        certificates,
        guard_rejections,
    }
}
