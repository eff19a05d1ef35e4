//! Subtorus actions, linearizations and semistable loci.
//!
//! A subtorus `H ⊂ T` is given by an injective map `φ: Z^d -> N`. Its dual
//! `φ*: M -> Z^d` sends the character `u` of `T` to its restriction to `H`.
//! A linearization of the divisor group `Λ = ⟨D_1, ..., D_k⟩` is a character
//! shift `c(D_i) ∈ Z^d` per basis divisor; the monomial `χ^u` viewed as a
//! section of `Σ m_i D_i` then has weight `φ*(u) + Σ m_i c(D_i)`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::certificate::{CertificateKind, InvertibleWitness, SemistableLocus, Weights};
use crate::cone::{feasible_strict, Cone, FeasibilitySystem};
use crate::lattice::{
    cokernel_projection, dot, hermite_basis, kernel_basis, primitive, saturate, solve_integer, IVec, Int, IntMatrix,
    LatticeMap, Sublattice,
};
use crate::toric::{cartier_witness, DivisorGroup, Face, Fan, SubfanLocus, ToricDivisor};
use crate::witness::{self, WitnessSetup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("action matrix is not injective; kernel basis {kernel:?}")]
    NonInjective { kernel: Vec<IVec> },
    #[error("action maps into rank {found}, fan lattice has rank {expected}")]
    LatticeMismatch { expected: usize, found: usize },
    #[error("linearization has {found} shifts, divisor group has rank {expected}")]
    ShiftCount { expected: usize, found: usize },
    #[error("character {index} has {found} coordinates, subtorus has dimension {expected}")]
    CharacterLength { index: usize, expected: usize, found: usize },
    #[error("fan has {maximal} maximal cones; an affine toric variety is required")]
    NotAffine { maximal: usize },
}

/// An injective map `Z^d -> N` with its derived lattice data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubtorusAction {
    phi: LatticeMap,
    phi_star: IntMatrix,
    l: Sublattice,
    projection: LatticeMap,
    torsion: Vec<Int>,
}

impl SubtorusAction {
    /// `phi` has one row per coordinate of `N` and one column per basis vector of `Z^d`.
    pub fn new(phi: IntMatrix) -> Result<Self, ActionError> {
        if phi.rank() != phi.cols() {
            return Err(ActionError::NonInjective { kernel: kernel_basis(&phi).basis_vecs() });
        }
        let n = phi.rows();
        let image = Sublattice::from_generators(n, &phi.transpose().row_vecs());
        let l = saturate(&image);
        let (projection, torsion) = cokernel_projection(&image);
        Ok(SubtorusAction { phi_star: phi.transpose(), phi: LatticeMap::new(phi), l, projection, torsion })
    }

    /// The subtorus whose one-parameter subgroups map to the given images in `N`.
    pub fn from_images(lattice_rank: usize, images: &[IVec]) -> Result<Self, ActionError> {
        if let Some((index, v)) = images.iter().enumerate().find(|(_, v)| v.len() != lattice_rank) {
            return Err(ActionError::CharacterLength { index, expected: lattice_rank, found: v.len() });
        }
        Self::new(IntMatrix::from_columns(lattice_rank, images))
    }

    /// The trivial subtorus (`d = 0`).
    pub fn trivial(lattice_rank: usize) -> Self {
        Self::new(IntMatrix::zeros(lattice_rank, 0)).expect("empty map is injective")
    }

    pub fn dim(&self) -> usize {
        self.phi.source_rank()
    }

    pub fn lattice_rank(&self) -> usize {
        self.phi.target_rank()
    }

    pub fn phi(&self) -> &LatticeMap {
        &self.phi
    }

    pub fn phi_star(&self) -> &IntMatrix {
        &self.phi_star
    }

    /// `L`, the saturation of `φ(Z^d)`.
    pub fn l(&self) -> &Sublattice {
        &self.l
    }

    /// `π: N -> N/L` onto the free part.
    pub fn projection(&self) -> &LatticeMap {
        &self.projection
    }

    /// Invariant factors of the torsion of `N/φ(Z^d)`.
    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    fn check_fan(&self, fan: &Fan) -> Result<(), ActionError> {
        if fan.ambient_rank() != self.lattice_rank() {
            return Err(ActionError::LatticeMismatch { expected: fan.ambient_rank(), found: self.lattice_rank() });
        }
        Ok(())
    }

    fn check_character(&self, index: usize, chi: &[Int]) -> Result<(), ActionError> {
        if chi.len() != self.dim() {
            return Err(ActionError::CharacterLength { index, expected: self.dim(), found: chi.len() });
        }
        Ok(())
    }
}

/// Character shifts `c(D_i)`, one per basis divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Linearization {
    shifts: Vec<IVec>,
}

impl Linearization {
    pub fn canonical(action: &SubtorusAction, rank: usize) -> Self {
        Linearization { shifts: vec![vec![Int::zero(); action.dim()]; rank] }
    }

    pub fn new(action: &SubtorusAction, shifts: Vec<IVec>) -> Result<Self, ActionError> {
        for (i, s) in shifts.iter().enumerate() {
            action.check_character(i, s)?;
        }
        Ok(Linearization { shifts })
    }

    pub fn shifts(&self) -> &[IVec] {
        &self.shifts
    }

    pub fn is_canonical(&self) -> bool {
        self.shifts.iter().flatten().all(Zero::is_zero)
    }

    pub fn scaled(&self, k: &Int) -> Self {
        Linearization { shifts: self.shifts.iter().map(|s| s.iter().map(|x| x * k).collect()).collect() }
    }

    fn weights<'a>(&'a self, action: &'a SubtorusAction) -> Weights<'a> {
        Weights { phi_star: action.phi_star(), shifts: &self.shifts }
    }
}

/// `φ*(u) + Σ m_i c(D_i)`.
pub fn weight_of(action: &SubtorusAction, u: &[Int], degree: &[Int], lin: &Linearization) -> IVec {
    lin.weights(action).weight(u, degree)
}

fn check_shifts(lin: &Linearization, rank: usize) -> Result<(), ActionError> {
    if lin.shifts.len() != rank {
        return Err(ActionError::ShiftCount { expected: rank, found: lin.shifts.len() });
    }
    Ok(())
}

/// Semistable locus of a single linearized divisor.
pub fn semistable_divisor(
    fan: &Fan,
    action: &SubtorusAction,
    d: &ToricDivisor,
    lin: &Linearization,
) -> Result<SemistableLocus, ActionError> {
    action.check_fan(fan)?;
    check_shifts(lin, 1)?;
    let divisors = vec![d.coefficients().to_vec()];
    let setup = WitnessSetup { fan, divisors: &divisors, weights: Some(lin.weights(action)), positive_degree: true };
    Ok(witness::certify_faces(&setup, CertificateKind::Divisor, |face| {
        let m = cartier_witness(fan, d.coefficients(), face)?;
        Some((vec![m], Vec::new(), None))
    }))
}

/// Degrees of `Λ` admitting an invariant invertible section on `U_τ`, with
/// one section per basis vector of that sublattice.
pub(crate) fn invertible_sublattice(
    fan: &Fan,
    action: &SubtorusAction,
    divisors: &[IVec],
    lin: &Linearization,
    face: &Face,
) -> (Vec<InvertibleWitness>, usize) {
    let k = divisors.len();
    let r = fan.ambient_rank();
    let mut rows: Vec<IVec> = Vec::new();
    for &rho in face.rays() {
        let mut row: IVec = divisors.iter().map(|a| a[rho].clone()).collect();
        row.extend(fan.ray(rho).iter().cloned());
        rows.push(row);
    }
    for j in 0..action.dim() {
        let mut row: IVec = lin.shifts.iter().map(|s| s[j].clone()).collect();
        row.extend(action.phi_star().row(j).iter().cloned());
        rows.push(row);
    }
    let system = IntMatrix::from_rows(k + r, &rows);
    let kernel = kernel_basis(&system);
    let degrees: Vec<IVec> = kernel.basis_vecs().into_iter().map(|v| v[..k].to_vec()).collect();
    let basis = hermite_basis(k, &degrees);
    let w_part: Vec<IVec> = rows.iter().map(|row| row[k..].to_vec()).collect();
    let w_matrix = IntMatrix::from_rows(r, &w_part);
    let witnesses = basis
        .iter()
        .map(|m| {
            let rhs: IVec = rows.iter().map(|row| -dot(&row[..k], m)).collect();
            let exponent = solve_integer(&w_matrix, &rhs).expect("degree comes from the kernel");
            InvertibleWitness { divisor: m.clone(), exponent }
        })
        .collect();
    (witnesses, basis.len())
}

/// Semistable locus of a linearized divisor group.
pub fn semistable_group(
    fan: &Fan,
    action: &SubtorusAction,
    group: &DivisorGroup,
    lin: &Linearization,
) -> Result<SemistableLocus, ActionError> {
    action.check_fan(fan)?;
    check_shifts(lin, group.rank())?;
    let divisors = group.coefficient_vectors();
    let k = divisors.len();
    let setup = WitnessSetup { fan, divisors: &divisors, weights: Some(lin.weights(action)), positive_degree: false };
    Ok(witness::certify_faces(&setup, CertificateKind::Group, |face| {
        let cartier: Vec<IVec> = divisors.iter().map(|d| cartier_witness(fan, d, face)).collect::<Option<_>>()?;
        let (invertibles, rank) = invertible_sublattice(fan, action, &divisors, lin, face);
        if rank != k {
            return None;
        }
        let rows: Vec<IVec> = invertibles.iter().map(|w| w.divisor.clone()).collect();
        let index = IntMatrix::from_rows(k, &rows).det().abs();
        Some((cartier, invertibles, Some(index)))
    }))
}

fn single_cone(fan: &Fan) -> Result<&Face, ActionError> {
    fan.single_cone().ok_or(ActionError::NotAffine { maximal: fan.maximal_cones().len() })
}

/// Semistable locus of the trivial bundle linearized by the character `chi`:
/// invariant sections are the monomials with `φ*(u) = n χ`, `n >= 1`.
pub fn mumford_trivial_semistable(
    fan: &Fan,
    action: &SubtorusAction,
    chi: &[Int],
) -> Result<SemistableLocus, ActionError> {
    single_cone(fan)?;
    action.check_character(0, chi)?;
    let lin = Linearization { shifts: vec![chi.iter().map(|x| -x).collect()] };
    semistable_divisor(fan, action, &ToricDivisor::zero(fan), &lin)
}

/// `K_γ = φ*(σ^∨ ∩ γ^⊥)`: weights of regular functions not vanishing on the orbit of `γ`.
pub fn weight_cone(fan: &Fan, action: &SubtorusAction, gamma: &Face) -> Result<Cone, ActionError> {
    let sigma = single_cone(fan)?;
    action.check_fan(fan)?;
    let r = fan.ambient_rank();
    let ineqs: Vec<IVec> = sigma.rays().iter().map(|&i| fan.ray(i).clone()).collect();
    let eqs: Vec<IVec> = gamma.rays().iter().map(|&i| fan.ray(i).clone()).collect();
    let slice = Cone::from_inequalities(r, &ineqs, &eqs);
    Ok(slice.image(&LatticeMap::new(action.phi_star().clone())))
}

/// A relatively open cell of character space on which the semistable locus is constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    /// Closure of the cell.
    pub cone: Cone,
    /// A character in the relative interior.
    pub sample: IVec,
    pub locus: SemistableLocus,
}

fn normalize_sign(v: IVec) -> IVec {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|x| -x).collect(),
        _ => v,
    }
}

/// Chambers of the arrangement cut out by the facets and equations of all `K_γ`,
/// restricted to `φ*(σ^∨)`.
pub fn git_chambers(fan: &Fan, action: &SubtorusAction) -> Result<Vec<Chamber>, ActionError> {
    single_cone(fan)?;
    action.check_fan(fan)?;
    let d = action.dim();
    let mut hyperplanes: Vec<IVec> = Vec::new();
    let mut k0 = None;
    for gamma in fan.faces() {
        let k = weight_cone(fan, action, gamma)?;
        for h in k.facets().iter().chain(k.equations()) {
            let h = normalize_sign(primitive(h));
            if !hyperplanes.contains(&h) {
                hyperplanes.push(h);
            }
        }
        if gamma.is_empty() {
            k0 = Some(k);
        }
    }
    hyperplanes.sort();
    let k0 = k0.expect("zero face is present");

    let mut cells = vec![FeasibilitySystem::new(d)];
    for h in &hyperplanes {
        let neg: IVec = h.iter().map(|x| -x).collect();
        let mut next = Vec::new();
        for cell in &cells {
            let mut pos = cell.clone();
            pos.positive(h.clone());
            let mut zero = cell.clone();
            zero.equal(h.clone());
            let mut below = cell.clone();
            below.positive(neg.clone());
            next.extend([pos, zero, below].into_iter().filter(|c| feasible_strict(c).is_some()));
        }
        cells = next;
    }

    let mut chambers = Vec::new();
    for cell in cells {
        let sample = feasible_strict(&cell).expect("cell is feasible");
        if !k0.contains(&sample) {
            continue;
        }
        let ineqs: Vec<IVec> = cell.weak.iter().chain(&cell.strict).cloned().collect();
        let cone = Cone::from_inequalities(d, &ineqs, &cell.equalities);
        let locus = mumford_trivial_semistable(fan, action, &sample)?;
        chambers.push(Chamber { cone, sample, locus });
    }
    chambers.sort_by(|a, b| a.cone.dim().cmp(&b.cone.dim()).then_with(|| a.sample.cmp(&b.sample)));
    Ok(chambers)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub required: SubfanLocus,
    /// `K_γ` for each maximal face `γ` of the required locus.
    pub weight_cones: Vec<(Face, Cone)>,
    pub pairwise: Vec<(Face, Face, Cone)>,
    pub common: Cone,
    /// Semistable locus of the trivial bundle with the trivial character.
    pub trivial_locus: SubfanLocus,
    pub obstructed: bool,
    /// A chamber sample whose locus equals the required one, if any.
    pub realized_by: Option<IVec>,
}

/// Whether some trivial-bundle character can yield `required`.
pub fn obstruction_report(
    fan: &Fan,
    action: &SubtorusAction,
    required: &SubfanLocus,
) -> Result<ObstructionReport, ActionError> {
    single_cone(fan)?;
    action.check_fan(fan)?;
    let d = action.dim();
    let mut weight_cones = Vec::new();
    for gamma in required.maximal_faces() {
        let k = weight_cone(fan, action, &gamma)?;
        weight_cones.push((gamma, k));
    }
    let mut pairwise = Vec::new();
    for (i, (a, ka)) in weight_cones.iter().enumerate() {
        for (b, kb) in &weight_cones[i + 1..] {
            pairwise.push((a.clone(), b.clone(), ka.intersect(kb)));
        }
    }
    let common = weight_cones.iter().fold(Cone::full(d), |acc, (_, k)| acc.intersect(k));
    let trivial_locus = mumford_trivial_semistable(fan, action, &vec![Int::zero(); d])?.locus;
    let obstructed = common.is_zero() && trivial_locus != *required;
    let realized_by = git_chambers(fan, action)?.into_iter().find(|c| c.locus.locus == *required).map(|c| c.sample);
    Ok(ObstructionReport {
        required: required.clone(),
        weight_cones,
        pairwise,
        common,
        trivial_locus,
        obstructed,
        realized_by,
    })
}
