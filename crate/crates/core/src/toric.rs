//! Fans, invariant Weil divisors and the open invariant subsets they cut out.
//!
//! Faces of a fan are named by the sorted list of indices of their rays; the
//! zero cone is the empty list. An open torus-invariant subset of the toric
//! variety is a [`SubfanLocus`]: a set of faces closed under passing to faces.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::certificate::{CertificateKind, SemistableLocus};
use crate::cone::{Cone, FeasibilitySystem};
use crate::lattice::{
    content, dot, fmt_vec, hermite_basis, kernel_basis, smith_normal_form, solve_integer, IVec, Int, IntMatrix,
};
use crate::witness::{self, WitnessSetup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("fan has no cones")]
    Empty,
    #[error("ray {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, found: usize },
    #[error("ray {index} {vector} is not a primitive nonzero lattice vector")]
    NonPrimitiveRay { index: usize, vector: String },
    #[error("rays {first} and {second} coincide")]
    DuplicateRay { first: usize, second: usize },
    #[error("cone {cone} references ray {ray}, but the fan has {count} rays")]
    RayIndexOutOfRange { cone: usize, ray: usize, count: usize },
    #[error("cone {cone} is not strongly convex")]
    NotStronglyConvex { cone: usize },
    #[error("ray {ray} is not an extreme ray of cone {cone}")]
    RedundantRay { cone: usize, ray: usize },
    #[error("cones {first} and {second} do not intersect in a common face")]
    IntersectionNotFace { first: usize, second: usize },
    #[error("ray {ray} belongs to no cone")]
    UnusedRay { ray: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("divisor has {found} coefficients but the fan has {expected} rays")]
    WrongLength { expected: usize, found: usize },
    #[error("divisor group basis is linearly dependent")]
    Dependent,
}

/// A face of a fan, named by its sorted ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Face(Vec<usize>);

impl Face {
    pub fn new(mut rays: Vec<usize>) -> Self {
        rays.sort_unstable();
        rays.dedup();
        Face(rays)
    }

    pub fn zero() -> Self {
        Face(Vec::new())
    }

    pub fn rays(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains_ray(&self, ray: usize) -> bool {
        self.0.binary_search(&ray).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|r| other.contains_ray(*r))
    }

    pub fn meet(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|r| other.contains_ray(*r)).collect())
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A validated fan. Rays keep their input order; their indices name faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    ambient_rank: usize,
    rays: Vec<IVec>,
    maximal: Vec<Face>,
    faces: Vec<Face>,
    cones: BTreeMap<Face, Cone>,
}

pub fn validate_fan(ambient_rank: usize, rays: &[IVec], cones: &[Vec<usize>]) -> Result<Fan, FanError> {
    if cones.is_empty() {
        return Err(FanError::Empty);
    }
    let mut index_of: HashMap<IVec, usize> = HashMap::new();
    for (i, r) in rays.iter().enumerate() {
        if r.len() != ambient_rank {
            return Err(FanError::DimensionMismatch { index: i, expected: ambient_rank, found: r.len() });
        }
        if !content(r).is_one() {
            return Err(FanError::NonPrimitiveRay { index: i, vector: fmt_vec(r) });
        }
        if let Some(&first) = index_of.get(r) {
            return Err(FanError::DuplicateRay { first, second: i });
        }
        index_of.insert(r.clone(), i);
    }

    let mut listed: Vec<(usize, Face, Cone)> = Vec::new();
    for (ci, c) in cones.iter().enumerate() {
        if let Some(&bad) = c.iter().find(|&&r| r >= rays.len()) {
            return Err(FanError::RayIndexOutOfRange { cone: ci, ray: bad, count: rays.len() });
        }
        let face = Face::new(c.clone());
        let gens: Vec<IVec> = face.rays().iter().map(|&r| rays[r].clone()).collect();
        let cone = Cone::from_generators(ambient_rank, &gens);
        if !cone.is_pointed() {
            return Err(FanError::NotStronglyConvex { cone: ci });
        }
        if let Some(&r) = face.rays().iter().find(|&&r| !cone.rays().contains(&rays[r])) {
            return Err(FanError::RedundantRay { cone: ci, ray: r });
        }
        listed.push((ci, face, cone));
    }

    let mut all: BTreeMap<Face, Cone> = BTreeMap::new();
    for (_, _, cone) in &listed {
        for f in cone.faces() {
            let ids = Face::new(f.rays().iter().map(|r| index_of[r]).collect());
            all.entry(ids).or_insert(f);
        }
    }
    let mut maximal: Vec<(usize, Face)> = Vec::new();
    for (ci, face, _) in &listed {
        let dominated = listed
            .iter()
            .any(|(cj, other, _)| (face != other && face.is_subset_of(other)) || (face == other && cj < ci));
        if !dominated {
            maximal.push((*ci, face.clone()));
        }
    }
    for (a, (ci, fi)) in maximal.iter().enumerate() {
        for (cj, fj) in maximal.iter().skip(a + 1) {
            let (si, sj) = (&all[fi], &all[fj]);
            let common = fi.meet(fj);
            let ok = all.contains_key(&common)
                && common.is_subset_of(fi)
                && si.intersect(sj) == all[&common]
                && all[&common].is_face_of(si)
                && all[&common].is_face_of(sj);
            if !ok {
                return Err(FanError::IntersectionNotFace { first: *ci, second: *cj });
            }
        }
    }
    for r in 0..rays.len() {
        if !maximal.iter().any(|(_, f)| f.contains_ray(r)) {
            return Err(FanError::UnusedRay { ray: r });
        }
    }
    let mut maximal: Vec<Face> = maximal.into_iter().map(|(_, f)| f).collect();
    maximal.sort();
    Ok(Fan { ambient_rank, rays: rays.to_vec(), maximal, faces: all.keys().cloned().collect(), cones: all })
}

impl Fan {
    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &IVec {
        &self.rays[i]
    }

    pub fn n_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn maximal_cones(&self) -> &[Face] {
        &self.maximal
    }

    /// Every face of the fan, ordered by ray count and then lexicographically.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn contains_face(&self, f: &Face) -> bool {
        self.cones.contains_key(f)
    }

    pub fn cone(&self, f: &Face) -> &Cone {
        &self.cones[f]
    }

    /// Faces of the fan contained in `f` (for a fan face these are exactly its faces).
    pub fn faces_below(&self, f: &Face) -> Vec<Face> {
        self.faces.iter().filter(|g| g.is_subset_of(f)).cloned().collect()
    }

    /// The cone if the fan has a single maximal cone.
    pub fn single_cone(&self) -> Option<&Face> {
        match self.maximal.as_slice() {
            [only] => Some(only),
            _ => None,
        }
    }

    /// Rays as rows of a matrix (the map `M -> Z^rays`, `u -> (<u, v_i>)`).
    pub fn ray_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.ambient_rank, &self.rays)
    }

    /// Support equals the whole space: every maximal cone is full-dimensional
    /// and every codimension-one face lies in exactly two maximal cones.
    pub fn is_complete(&self) -> bool {
        if self.maximal.iter().any(|m| self.cone(m).dim() != self.ambient_rank) {
            return false;
        }
        if self.ambient_rank == 0 {
            return true;
        }
        self.faces
            .iter()
            .filter(|f| self.cone(f).dim() + 1 == self.ambient_rank)
            .all(|f| self.maximal.iter().filter(|m| f.is_subset_of(m)).count() == 2)
    }
}

/// An invariant Weil divisor, one integer coefficient per ray.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToricDivisor {
    coefficients: IVec,
}

impl ToricDivisor {
    pub fn new(fan: &Fan, coefficients: IVec) -> Result<Self, DivisorError> {
        if coefficients.len() != fan.n_rays() {
            return Err(DivisorError::WrongLength { expected: fan.n_rays(), found: coefficients.len() });
        }
        Ok(ToricDivisor { coefficients })
    }

    pub fn zero(fan: &Fan) -> Self {
        ToricDivisor { coefficients: vec![Int::zero(); fan.n_rays()] }
    }

    /// `div(χ^u)`.
    pub fn principal(fan: &Fan, u: &[Int]) -> Self {
        ToricDivisor { coefficients: fan.rays().iter().map(|v| dot(u, v)).collect() }
    }

    pub fn coefficients(&self) -> &[Int] {
        &self.coefficients
    }

    pub fn scaled(&self, k: &Int) -> Self {
        ToricDivisor { coefficients: self.coefficients.iter().map(|a| a * k).collect() }
    }
}

/// A finitely generated free group of invariant divisors, given by a basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorGroup {
    basis: Vec<ToricDivisor>,
}

impl DivisorGroup {
    pub fn new(fan: &Fan, basis: Vec<ToricDivisor>) -> Result<Self, DivisorError> {
        for d in &basis {
            if d.coefficients.len() != fan.n_rays() {
                return Err(DivisorError::WrongLength { expected: fan.n_rays(), found: d.coefficients.len() });
            }
        }
        let rows: Vec<IVec> = basis.iter().map(|d| d.coefficients.clone()).collect();
        if IntMatrix::from_rows(fan.n_rays(), &rows).rank() != basis.len() {
            return Err(DivisorError::Dependent);
        }
        Ok(DivisorGroup { basis })
    }

    pub fn generated_by(divisor: ToricDivisor) -> Self {
        if divisor.coefficients.iter().all(Zero::is_zero) {
            return DivisorGroup { basis: Vec::new() };
        }
        DivisorGroup { basis: vec![divisor] }
    }

    pub fn basis(&self) -> &[ToricDivisor] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn coefficient_vectors(&self) -> Vec<IVec> {
        self.basis.iter().map(|d| d.coefficients.clone()).collect()
    }

    /// `sum m_i D_i`.
    pub fn element(&self, fan: &Fan, m: &[Int]) -> ToricDivisor {
        let mut c = vec![Int::zero(); fan.n_rays()];
        for (mi, d) in m.iter().zip(&self.basis) {
            for (ci, a) in c.iter_mut().zip(&d.coefficients) {
                *ci += mi * a;
            }
        }
        ToricDivisor { coefficients: c }
    }
}

/// An open invariant subset, as a face-closed set of fan faces.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubfanLocus {
    faces: BTreeSet<Face>,
}

impl SubfanLocus {
    pub fn empty() -> Self {
        SubfanLocus::default()
    }

    pub fn whole(fan: &Fan) -> Self {
        SubfanLocus { faces: fan.faces().iter().cloned().collect() }
    }

    /// All fan faces below any of `tops`.
    pub fn downward_closure<'a>(fan: &Fan, tops: impl IntoIterator<Item = &'a Face>) -> Self {
        let tops: Vec<&Face> = tops.into_iter().collect();
        SubfanLocus { faces: fan.faces().iter().filter(|f| tops.iter().any(|t| f.is_subset_of(t))).cloned().collect() }
    }

    /// Wraps an explicit face set without closing it.
    pub fn from_faces(faces: impl IntoIterator<Item = Face>) -> Self {
        SubfanLocus { faces: faces.into_iter().collect() }
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.faces.contains(f)
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn is_subset(&self, other: &SubfanLocus) -> bool {
        self.faces.is_subset(&other.faces)
    }

    pub fn intersection(&self, other: &SubfanLocus) -> SubfanLocus {
        SubfanLocus { faces: self.faces.intersection(&other.faces).cloned().collect() }
    }

    pub fn is_face_closed(&self, fan: &Fan) -> bool {
        self.faces.iter().all(|f| fan.faces_below(f).iter().all(|g| self.faces.contains(g)))
    }

    /// Faces not strictly contained in another face of the locus.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.faces.iter().filter(|f| !self.faces.iter().any(|g| g != *f && f.is_subset_of(g))).cloned().collect()
    }
}

impl fmt::Display for SubfanLocus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.faces.iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Some `m` with `<m, v_ρ> = -a_ρ` on the rays of `face`.
pub fn is_cartier_on(fan: &Fan, d: &ToricDivisor, face: &Face) -> Option<IVec> {
    cartier_witness(fan, d.coefficients(), face)
}

pub(crate) fn cartier_witness(fan: &Fan, coefficients: &[Int], face: &Face) -> Option<IVec> {
    let rows: Vec<IVec> = face.rays().iter().map(|&r| fan.ray(r).clone()).collect();
    let a = IntMatrix::from_rows(fan.ambient_rank(), &rows);
    let b: IVec = face.rays().iter().map(|&r| -&coefficients[r]).collect();
    solve_integer(&a, &b)
}

pub fn cartier_locus(fan: &Fan, group: &DivisorGroup) -> SubfanLocus {
    SubfanLocus::from_faces(
        fan.faces().iter().filter(|f| group.basis().iter().all(|d| is_cartier_on(fan, d, f).is_some())).cloned(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroup {
    /// Free rank of `Cl(X)`.
    pub rank: usize,
    /// Invariant factors > 1 of `Cl(X)`.
    pub torsion: Vec<Int>,
    /// Rank of the torus factor split off when the rays do not span.
    pub torus_factor: usize,
    pub picard_rank: usize,
    pub picard_torsion: Vec<Int>,
}

pub fn class_group(fan: &Fan) -> ClassGroup {
    let n = fan.n_rays();
    let r = fan.ambient_rank();
    let a = fan.ray_matrix();
    let snf = smith_normal_form(&a);
    let principal_rank = snf.rank();
    let torsion: Vec<Int> = snf.invariant_factors().into_iter().filter(|x| !x.is_one()).collect();

    // Cartier divisors: a in Z^n with a local equation m_σ on every maximal cone.
    let blocks = fan.maximal_cones().len();
    let width = n + blocks * r;
    let mut rows: Vec<IVec> = Vec::new();
    for (b, sigma) in fan.maximal_cones().iter().enumerate() {
        for &rho in sigma.rays() {
            let mut row = vec![Int::zero(); width];
            row[rho] = Int::one();
            for (k, x) in fan.ray(rho).iter().enumerate() {
                row[n + b * r + k] = x.clone();
            }
            rows.push(row);
        }
    }
    let kernel = kernel_basis(&IntMatrix::from_rows(width, &rows));
    let projected: Vec<IVec> = kernel.basis_vecs().into_iter().map(|v| v[..n].to_vec()).collect();
    let cdiv = hermite_basis(n, &projected);
    let cdiv_t = IntMatrix::from_columns(n, &cdiv);
    let coords: Vec<IVec> =
        (0..r).map(|j| solve_integer(&cdiv_t, &a.column(j)).expect("principal divisors are Cartier")).collect();
    let rel = IntMatrix::from_columns(cdiv.len(), &coords);
    let pic = smith_normal_form(&rel);
    ClassGroup {
        rank: n - principal_rank,
        torsion,
        torus_factor: r - principal_rank,
        picard_rank: cdiv.len() - pic.rank(),
        picard_torsion: pic.invariant_factors().into_iter().filter(|x| !x.is_one()).collect(),
    }
}

/// Weak system over `(u, n)`: `<u, v_ρ> + n a_ρ >= 0` for every ray.
pub fn section_system(fan: &Fan, d: &ToricDivisor) -> FeasibilitySystem {
    let r = fan.ambient_rank();
    let mut sys = FeasibilitySystem::new(r + 1);
    for (v, a) in fan.rays().iter().zip(d.coefficients()) {
        let mut form = v.clone();
        form.push(a.clone());
        sys.at_least_zero(form);
    }
    sys
}

/// Order of vanishing `b_ρ = <u, v_ρ> + n a_ρ` of the section `χ^u` of `nD` along each ray divisor.
pub fn zero_pattern(fan: &Fan, u: &[Int], n: &Int, d: &ToricDivisor) -> IVec {
    fan.rays().iter().zip(d.coefficients()).map(|(v, a)| dot(u, v) + n * a).collect()
}

/// Complement of the zero set: faces all of whose rays have `b_ρ = 0`.
pub fn open_complement(fan: &Fan, b: &[Int]) -> SubfanLocus {
    SubfanLocus::from_faces(fan.faces().iter().filter(|f| f.rays().iter().all(|&r| b[r].is_zero())).cloned())
}

/// The cone `τ` if the locus is exactly the face set of `τ`.
pub fn is_affine(fan: &Fan, locus: &SubfanLocus) -> Option<Face> {
    let top = locus.maximal_faces();
    match top.as_slice() {
        [t] if fan.contains_face(t) && SubfanLocus::downward_closure(fan, [t]) == *locus => Some(t.clone()),
        _ => None,
    }
}

/// Ample locus of the group generated by the basis: charts `X \ Z(f)` that are
/// affine and inside the Cartier locus, for homogeneous `f` of any degree.
pub fn ample_locus(fan: &Fan, group: &DivisorGroup) -> SemistableLocus {
    let divisors = group.coefficient_vectors();
    let setup = WitnessSetup { fan, divisors: &divisors, weights: None, positive_degree: false };
    let cartier = cartier_locus(fan, group);
    witness::certify_faces(&setup, CertificateKind::Ample, |face| {
        if !cartier.contains(face) {
            return None;
        }
        let cartier_witnesses =
            divisors.iter().map(|d| cartier_witness(fan, d, face).expect("face is Cartier")).collect();
        Some((cartier_witnesses, Vec::new(), None))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;

    pub(crate) fn quadric() -> Fan {
        let rays = vec![ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 1, 1]), ivec(&[1, 0, 1])];
        validate_fan(3, &rays, &[vec![0, 1, 2, 3]]).unwrap()
    }

    fn plane() -> Fan {
        validate_fan(2, &[ivec(&[1, 0]), ivec(&[0, 1])], &[vec![0, 1]]).unwrap()
    }

    fn p1() -> Fan {
        validate_fan(1, &[ivec(&[1]), ivec(&[-1])], &[vec![0], vec![1]]).unwrap()
    }

    fn face(rs: &[usize]) -> Face {
        Face::new(rs.to_vec())
    }

    #[test]
    fn fan_validation() {
        assert_eq!(quadric().faces().len(), 10);
        assert_eq!(p1().faces().len(), 3);
        assert!(p1().is_complete());
        assert!(!plane().is_complete());
        let overlapping =
            validate_fan(2, &[ivec(&[1, 0]), ivec(&[0, 1]), ivec(&[1, 1]), ivec(&[-1, 1])], &[vec![0, 1], vec![2, 3]]);
        assert!(matches!(overlapping, Err(FanError::IntersectionNotFace { .. })));
        assert!(matches!(validate_fan(1, &[ivec(&[2])], &[vec![0]]), Err(FanError::NonPrimitiveRay { index: 0, .. })));
        assert!(matches!(
            validate_fan(1, &[ivec(&[1]), ivec(&[1])], &[vec![0], vec![1]]),
            Err(FanError::DuplicateRay { first: 0, second: 1 })
        ));
        assert!(matches!(validate_fan(1, &[], &[]), Err(FanError::Empty)));
        assert!(matches!(
            validate_fan(1, &[ivec(&[1]), ivec(&[-1])], &[vec![0, 1]]),
            Err(FanError::NotStronglyConvex { cone: 0 })
        ));
    }

    #[test]
    fn cartier_checks() {
        let fan = quadric();
        let d1 = ToricDivisor::new(&fan, ivec(&[1, 0, 0, 0])).unwrap();
        assert_eq!(is_cartier_on(&fan, &d1, &face(&[0, 1, 2, 3])), None);
        assert_eq!(is_cartier_on(&fan, &d1, &face(&[0])), Some(ivec(&[-1, 0, 0])));
        let zero = ToricDivisor::zero(&fan);
        assert_eq!(is_cartier_on(&fan, &zero, &face(&[0, 1, 2, 3])), Some(ivec(&[0, 0, 0])));

        let locus = cartier_locus(&fan, &DivisorGroup::generated_by(d1));
        assert_eq!(locus.len(), 9);
        assert!(!locus.contains(&face(&[0, 1, 2, 3])));

        let p = ToricDivisor::principal(&fan, &ivec(&[1, -2, 5]));
        assert_eq!(cartier_locus(&fan, &DivisorGroup::generated_by(p)), SubfanLocus::whole(&fan));
        let pl = plane();
        let d = ToricDivisor::new(&pl, ivec(&[3, -1])).unwrap();
        assert_eq!(cartier_locus(&pl, &DivisorGroup::generated_by(d)), SubfanLocus::whole(&pl));
    }

    #[test]
    fn class_groups() {
        let cl = class_group(&quadric());
        assert_eq!((cl.rank, cl.torsion.len(), cl.picard_rank, cl.picard_torsion.len()), (1, 0, 0, 0));
        let cl = class_group(&plane());
        assert_eq!((cl.rank, cl.picard_rank), (0, 0));
        let cl = class_group(&p1());
        assert_eq!((cl.rank, cl.picard_rank), (1, 1));
        // A_1 singularity
        let cone_a2 = validate_fan(2, &[ivec(&[0, 1]), ivec(&[2, -1])], &[vec![0, 1]]).unwrap();
        let cl = class_group(&cone_a2);
        assert_eq!(cl.rank, 0);
        assert_eq!(cl.torsion, ivec(&[2]));
        assert_eq!(cl.picard_rank, 0);
    }

    #[test]
    fn sections_and_zero_sets() {
        let pl = plane();
        let d = ToricDivisor::new(&pl, ivec(&[1, 0])).unwrap();
        let sys = section_system(&pl, &d);
        assert_eq!(sys.weak, vec![ivec(&[1, 0, 1]), ivec(&[0, 1, 0])]);
        let b = zero_pattern(&pl, &ivec(&[0, 0]), &Int::from(1), &d);
        assert_eq!(b, ivec(&[1, 0]));
        let comp = open_complement(&pl, &b);
        assert_eq!(comp, SubfanLocus::from_faces([face(&[]), face(&[1])]));
        assert_eq!(is_affine(&pl, &comp), Some(face(&[1])));
        let b = zero_pattern(&pl, &ivec(&[1, 1]), &Int::from(1), &d);
        assert_eq!(open_complement(&pl, &b), SubfanLocus::from_faces([face(&[])]));
        let zero = ToricDivisor::zero(&pl);
        let b = zero_pattern(&pl, &ivec(&[0, 0]), &Int::from(0), &zero);
        assert_eq!(open_complement(&pl, &b), SubfanLocus::whole(&pl));
    }

    #[test]
    fn affineness() {
        let pl = plane();
        let punctured = SubfanLocus::from_faces([face(&[]), face(&[0]), face(&[1])]);
        assert_eq!(is_affine(&pl, &punctured), None);
        let q = quadric();
        assert_eq!(is_affine(&q, &SubfanLocus::whole(&q)), Some(face(&[0, 1, 2, 3])));
    }

    #[test]
    fn ample_loci() {
        let fan = p1();
        let d = ToricDivisor::new(&fan, ivec(&[1, 0])).unwrap();
        let amp = ample_locus(&fan, &DivisorGroup::generated_by(d));
        assert_eq!(amp.locus, SubfanLocus::whole(&fan));
        let q = quadric();
        let amp = ample_locus(&q, &DivisorGroup::generated_by(ToricDivisor::zero(&q)));
        assert_eq!(amp.locus, SubfanLocus::whole(&q));
        let d1 = ToricDivisor::new(&q, ivec(&[1, 0, 0, 0])).unwrap();
        let amp = ample_locus(&q, &DivisorGroup::generated_by(d1.clone()));
        assert!(amp.locus.is_subset(&cartier_locus(&q, &DivisorGroup::generated_by(d1))));
    }
}
