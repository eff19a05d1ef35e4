//! Rational polyhedral cones with both descriptions kept in canonical form.
//!
//! A cone is `lineality + cone(rays)` and at the same time
//! `{x : <e, x> = 0 for e in equations, <f, x> >= 0 for f in facets}`.
//! Conversions go through an exact double description routine. Rays are
//! reduced modulo the lineality space and facets modulo the equations, then
//! made primitive and sorted, so two cones are equal iff their fields are.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{Signed, Zero};

use crate::lattice::{
    dot, fmt_vec, hermite_basis, is_zero_vec, kernel_basis, lin_comb, neg_vec, primitive, reduce_mod_span, sum_vecs,
    IVec, Int, IntMatrix, LatticeMap,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    ambient_rank: usize,
    rays: Vec<IVec>,
    lineality: Vec<IVec>,
    facets: Vec<IVec>,
    equations: Vec<IVec>,
}

#[derive(Clone, Debug, Default)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn insert(&mut self, i: usize) {
        let (w, b) = (i / 64, i % 64);
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << b;
    }

    fn prefix(n: usize) -> Self {
        let mut z = ZeroSet::default();
        for i in 0..n {
            z.insert(i);
        }
        z
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn contains_all(&self, other: &ZeroSet) -> bool {
        other.0.iter().enumerate().all(|(i, &w)| {
            let mine = self.0.get(i).copied().unwrap_or(0);
            w & !mine == 0
        })
    }
}

fn unit(dim: usize, i: usize) -> IVec {
    let mut v = vec![Int::zero(); dim];
    v[i] = Int::from(1);
    v
}

/// Double description: extreme rays and a lineality spanning set of
/// `{x : eqs x = 0, ineqs x >= 0}`.
fn double_description(dim: usize, ineqs: &[IVec], eqs: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
    let mut lineality: Vec<IVec> = (0..dim).map(|i| unit(dim, i)).collect();
    let mut rays: Vec<(IVec, ZeroSet)> = Vec::new();
    let constraints = eqs.iter().map(|h| (h, true)).chain(ineqs.iter().map(|h| (h, false)));
    for (ci, (h, is_eq)) in constraints.enumerate() {
        assert_eq!(h.len(), dim, "constraint length does not match ambient rank");
        if let Some(pos) = lineality.iter().position(|l| !dot(h, l).is_zero()) {
            let mut l0 = lineality.swap_remove(pos);
            let mut a = dot(h, &l0);
            if a.is_negative() {
                l0 = neg_vec(&l0);
                a = -a;
            }
            for l in lineality.iter_mut() {
                let b = dot(h, l);
                if !b.is_zero() {
                    *l = primitive(&lin_comb(&a, l, &-b, &l0));
                }
            }
            for (r, z) in rays.iter_mut() {
                let b = dot(h, r);
                if !b.is_zero() {
                    *r = primitive(&lin_comb(&a, r, &-b, &l0));
                }
                z.insert(ci);
            }
            if !is_eq {
                rays.push((l0, ZeroSet::prefix(ci)));
            }
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|(r, _)| dot(h, r)).collect();
        let mut next: Vec<(IVec, ZeroSet)> = Vec::new();
        for (k, (r, z)) in rays.iter().enumerate() {
            if values[k].is_zero() {
                let mut z = z.clone();
                z.insert(ci);
                next.push((r.clone(), z));
            } else if values[k].is_positive() && !is_eq {
                next.push((r.clone(), z.clone()));
            }
        }
        for p in 0..rays.len() {
            if !values[p].is_positive() {
                continue;
            }
            for q in 0..rays.len() {
                if !values[q].is_negative() {
                    continue;
                }
                let common = rays[p].1.intersect(&rays[q].1);
                let adjacent = rays.iter().enumerate().all(|(k, (_, z))| k == p || k == q || !z.contains_all(&common));
                if !adjacent {
                    continue;
                }
                let v = primitive(&lin_comb(&values[p], &rays[q].0, &-&values[q], &rays[p].0));
                let mut z = common;
                z.insert(ci);
                next.push((v, z));
            }
        }
        rays = next;
    }
    (rays.into_iter().map(|(r, _)| r).collect(), lineality)
}

/// Canonical lattice basis of the rational span of `vs`.
fn span_basis(dim: usize, vs: &[IVec]) -> Vec<IVec> {
    if vs.iter().all(|v| is_zero_vec(v)) {
        return Vec::new();
    }
    let perp = kernel_basis(&IntMatrix::from_rows(dim, vs));
    let sat = kernel_basis(perp.basis());
    hermite_basis(dim, &sat.basis_vecs())
}

fn canonical_directions(vs: Vec<IVec>, modulo: &[IVec]) -> Vec<IVec> {
    let set: BTreeSet<IVec> = vs.iter().map(|v| reduce_mod_span(v, modulo)).filter(|v| !is_zero_vec(v)).collect();
    set.into_iter().collect()
}

/// Canonical (rays, lineality) of `{x : eqs x = 0, ineqs x >= 0}`.
fn v_description(dim: usize, ineqs: &[IVec], eqs: &[IVec]) -> (Vec<IVec>, Vec<IVec>) {
    let (rays, lin) = double_description(dim, ineqs, eqs);
    let lin = span_basis(dim, &lin);
    let rays = canonical_directions(rays, &lin);
    (rays, lin)
}

impl Cone {
    /// `cone(gens) + span(lineality)`.
    pub fn with_lineality(ambient_rank: usize, gens: &[IVec], lineality: &[IVec]) -> Self {
        let (facets, equations) = v_description(ambient_rank, gens, lineality);
        let (rays, lineality) = v_description(ambient_rank, &facets, &equations);
        Cone { ambient_rank, rays, lineality, facets, equations }
    }

    pub fn from_generators(ambient_rank: usize, gens: &[IVec]) -> Self {
        Self::with_lineality(ambient_rank, gens, &[])
    }

    /// `{x : eqs x = 0, ineqs x >= 0}`.
    pub fn from_inequalities(ambient_rank: usize, ineqs: &[IVec], eqs: &[IVec]) -> Self {
        let (rays, lineality) = v_description(ambient_rank, ineqs, eqs);
        let (facets, equations) = v_description(ambient_rank, &rays, &lineality);
        Cone { ambient_rank, rays, lineality, facets, equations }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Self::from_generators(ambient_rank, &[])
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self::from_inequalities(ambient_rank, &[], &[])
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[IVec] {
        &self.rays
    }

    pub fn lineality(&self) -> &[IVec] {
        &self.lineality
    }

    pub fn facets(&self) -> &[IVec] {
        &self.facets
    }

    pub fn equations(&self) -> &[IVec] {
        &self.equations
    }

    pub fn lineality_rank(&self) -> usize {
        self.lineality.len()
    }

    pub fn dim(&self) -> usize {
        self.ambient_rank - self.equations.len()
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    pub fn contains(&self, x: &[Int]) -> bool {
        self.equations.iter().all(|e| dot(e, x).is_zero()) && self.facets.iter().all(|f| !dot(f, x).is_negative())
    }

    pub fn contains_cone(&self, other: &Cone) -> bool {
        other.rays.iter().all(|r| self.contains(r))
            && other.lineality.iter().all(|l| self.contains(l) && self.contains(&neg_vec(l)))
    }

    /// `{u : <u, x> >= 0 for all x in self}`; the two descriptions swap roles.
    pub fn dual(&self) -> Cone {
        Cone {
            ambient_rank: self.ambient_rank,
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    /// A point in the relative interior: the sum of the rays.
    pub fn relative_interior_point(&self) -> IVec {
        sum_vecs(self.ambient_rank, &self.rays)
    }

    pub fn image(&self, f: &LatticeMap) -> Cone {
        assert_eq!(f.source_rank(), self.ambient_rank, "map source does not match cone");
        let rays: Vec<IVec> = self.rays.iter().map(|r| f.apply(r)).collect();
        let lin: Vec<IVec> = self.lineality.iter().map(|l| f.apply(l)).collect();
        Cone::with_lineality(f.target_rank(), &rays, &lin)
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient_rank, other.ambient_rank, "cones live in different lattices");
        let ineqs: Vec<IVec> = self.facets.iter().chain(&other.facets).cloned().collect();
        let eqs: Vec<IVec> = self.equations.iter().chain(&other.equations).cloned().collect();
        Cone::from_inequalities(self.ambient_rank, &ineqs, &eqs)
    }

    /// `self ∩ u^⊥` for a linear form nonnegative on the cone.
    pub fn face_cut_by(&self, u: &[Int]) -> Cone {
        let mut eqs = self.equations.clone();
        eqs.push(u.to_vec());
        Cone::from_inequalities(self.ambient_rank, &self.facets, &eqs)
    }

    /// All faces with a supporting normal each (`face = self ∩ u^⊥`), sorted by
    /// dimension and then canonically. The cone itself has normal zero.
    pub fn faces_with_normals(&self) -> Vec<(Cone, IVec)> {
        let ray_zero = |fs: &BTreeSet<usize>| -> Vec<usize> {
            (0..self.rays.len())
                .filter(|&r| fs.iter().all(|&f| dot(&self.facets[f], &self.rays[r]).is_zero()))
                .collect()
        };
        let facet_closure = |rs: &[usize]| -> BTreeSet<usize> {
            (0..self.facets.len())
                .filter(|&f| rs.iter().all(|&r| dot(&self.facets[f], &self.rays[r]).is_zero()))
                .collect()
        };
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = vec![(0..self.rays.len()).collect()];
        let mut found: Vec<(Vec<usize>, BTreeSet<usize>)> = Vec::new();
        while let Some(rs) = stack.pop() {
            if !seen.insert(rs.clone()) {
                continue;
            }
            let closure = facet_closure(&rs);
            for f in 0..self.facets.len() {
                if closure.contains(&f) {
                    continue;
                }
                let mut next = closure.clone();
                next.insert(f);
                stack.push(ray_zero(&next));
            }
            found.push((rs, closure));
        }
        let mut out: Vec<(Cone, IVec)> = found
            .into_iter()
            .map(|(rs, closure)| {
                let gens: Vec<IVec> = rs.iter().map(|&r| self.rays[r].clone()).collect();
                let face = Cone::with_lineality(self.ambient_rank, &gens, &self.lineality);
                let normal = sum_vecs(self.ambient_rank, closure.iter().map(|&f| &self.facets[f]));
                (face, normal)
            })
            .collect();
        out.sort_by(|a, b| a.0.dim().cmp(&b.0.dim()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    pub fn faces(&self) -> Vec<Cone> {
        self.faces_with_normals().into_iter().map(|(c, _)| c).collect()
    }

    pub fn is_face_of(&self, other: &Cone) -> bool {
        if !other.contains_cone(self) {
            return false;
        }
        // A face is cut out by the facets of `other` vanishing on a relative interior point.
        let p = self.relative_interior_point();
        let tight: Vec<IVec> = other.facets.iter().filter(|f| dot(f, &p).is_zero()).cloned().collect();
        let mut eqs = other.equations.clone();
        eqs.extend(tight);
        let smallest = Cone::from_inequalities(other.ambient_rank, &other.facets, &eqs);
        &smallest == self
    }

    /// Smallest face of `self` containing the point `p` (which must lie in the cone).
    pub fn smallest_face_containing(&self, p: &[Int]) -> Cone {
        debug_assert!(self.contains(p));
        let mut eqs = self.equations.clone();
        eqs.extend(self.facets.iter().filter(|f| dot(f, p).is_zero()).cloned());
        Cone::from_inequalities(self.ambient_rank, &self.facets, &eqs)
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rays: Vec<String> = self.rays.iter().map(|r| fmt_vec(r)).collect();
        write!(f, "cone[{}]", rays.join(", "))?;
        if !self.lineality.is_empty() {
            let lin: Vec<String> = self.lineality.iter().map(|r| fmt_vec(r)).collect();
            write!(f, " + span[{}]", lin.join(", "))?;
        }
        Ok(())
    }
}

/// A homogeneous system of linear conditions over a fixed number of variables.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FeasibilitySystem {
    dim: usize,
    pub equalities: Vec<IVec>,
    pub weak: Vec<IVec>,
    pub strict: Vec<IVec>,
}

impl FeasibilitySystem {
    pub fn new(dim: usize) -> Self {
        FeasibilitySystem { dim, ..Default::default() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn equal(&mut self, form: IVec) -> &mut Self {
        assert_eq!(form.len(), self.dim, "form length does not match system dimension");
        self.equalities.push(form);
        self
    }

    pub fn at_least_zero(&mut self, form: IVec) -> &mut Self {
        assert_eq!(form.len(), self.dim, "form length does not match system dimension");
        self.weak.push(form);
        self
    }

    pub fn positive(&mut self, form: IVec) -> &mut Self {
        assert_eq!(form.len(), self.dim, "form length does not match system dimension");
        self.strict.push(form);
        self
    }

    /// Whether `x` satisfies every condition.
    pub fn satisfied_by(&self, x: &[Int]) -> bool {
        self.equalities.iter().all(|e| dot(e, x).is_zero())
            && self.weak.iter().all(|w| !dot(w, x).is_negative())
            && self.strict.iter().all(|s| dot(s, x).is_positive())
    }
}

/// An integer point satisfying the system, if any exists.
///
/// Solves the closure (strict forms weakened) and evaluates the strict forms at
/// a relative interior point: a form that is nonnegative on a cone is positive
/// on its relative interior unless it vanishes on the whole cone.
pub fn feasible_strict(sys: &FeasibilitySystem) -> Option<IVec> {
    let ineqs: Vec<IVec> = sys.weak.iter().chain(&sys.strict).cloned().collect();
    let (rays, _) = double_description(sys.dim, &ineqs, &sys.equalities);
    let p = sum_vecs(sys.dim, &rays);
    if sys.strict.iter().all(|s| dot(s, &p).is_positive()) {
        Some(primitive(&p))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ivec;

    fn quadric() -> Cone {
        Cone::from_generators(3, &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 1, 1]), ivec(&[1, 0, 1])])
    }

    #[test]
    fn quadric_dual_facets_are_generators() {
        let s = quadric();
        let d = s.dual();
        let mut expected = vec![ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 1, 1]), ivec(&[1, 0, 1])];
        expected.sort();
        assert_eq!(d.facets(), expected.as_slice());
        let mut dual_rays = vec![ivec(&[1, 0, 0]), ivec(&[0, 1, 0]), ivec(&[0, 0, 1]), ivec(&[1, 1, -1])];
        dual_rays.sort();
        assert_eq!(d.rays(), dual_rays.as_slice());
        assert_eq!(d.dual(), s);
        assert_eq!(Cone::from_inequalities(3, d.rays(), &[]), s);
    }

    #[test]
    fn trivial_duals() {
        assert_eq!(Cone::full(3).dual(), Cone::zero(3));
        let orthant = Cone::from_generators(2, &[ivec(&[1, 0]), ivec(&[0, 1])]);
        assert_eq!(orthant.dual(), orthant);
    }

    #[test]
    fn face_counts() {
        assert_eq!(quadric().faces().len(), 10);
        assert_eq!(Cone::from_generators(2, &[ivec(&[1, 0])]).faces().len(), 2);
        assert_eq!(Cone::zero(2).faces().len(), 1);
        for (face, u) in quadric().faces_with_normals() {
            assert_eq!(quadric().face_cut_by(&u), face);
            assert!(face.is_face_of(&quadric()));
        }
    }

    #[test]
    fn interior_points() {
        assert_eq!(quadric().relative_interior_point(), ivec(&[2, 2, 2]));
        assert_eq!(Cone::from_generators(2, &[ivec(&[1, 0])]).relative_interior_point(), ivec(&[1, 0]));
        assert_eq!(Cone::zero(2).relative_interior_point(), ivec(&[0, 0]));
    }

    #[test]
    fn section_cone_images() {
        let phi_star = LatticeMap::new(IntMatrix::from_i64_rows(3, &[&[2, 1, 1], &[0, 2, 1]]));
        let dual = quadric().dual();
        let k1 = dual.face_cut_by(&ivec(&[1, 0, 0])).image(&phi_star);
        assert_eq!(k1, Cone::from_generators(2, &[ivec(&[1, 1]), ivec(&[1, 2])]));
        let k3 = dual.face_cut_by(&ivec(&[0, 1, 1])).image(&phi_star);
        assert_eq!(k3, Cone::from_generators(2, &[ivec(&[2, 0]), ivec(&[2, 1])]));
        assert!(k1.intersect(&k3).is_zero());
        let zero = LatticeMap::new(IntMatrix::zeros(2, 3));
        assert!(quadric().image(&zero).is_zero());
    }

    #[test]
    fn intersections() {
        let q = quadric();
        assert_eq!(q.intersect(&q), q);
        let pos = Cone::from_generators(2, &[ivec(&[1, 0]), ivec(&[0, 1])]);
        let neg = Cone::from_generators(2, &[ivec(&[-1, 0]), ivec(&[0, -1])]);
        assert!(pos.intersect(&neg).is_zero());
    }

    #[test]
    fn lineality_is_tracked() {
        let half = Cone::from_generators(2, &[ivec(&[1, 0]), ivec(&[-1, 0]), ivec(&[1, 1])]);
        assert_eq!(half.lineality_rank(), 1);
        assert_eq!(half.rays(), &[ivec(&[0, 1])]);
        assert_eq!(half.facets(), &[ivec(&[0, 1])]);
        assert_eq!(half.dual().dual(), half);
        assert_eq!(half.faces().len(), 2);
    }

    #[test]
    fn strict_feasibility() {
        let mut sys = FeasibilitySystem::new(1);
        sys.equal(ivec(&[1])).positive(ivec(&[1]));
        assert_eq!(feasible_strict(&sys), None);
        let mut sys = FeasibilitySystem::new(2);
        sys.at_least_zero(ivec(&[1, 0])).at_least_zero(ivec(&[0, 1]));
        assert_eq!(feasible_strict(&sys), Some(ivec(&[1, 1])));
        let mut sys = FeasibilitySystem::new(2);
        for w in [[2, 0], [1, 2], [1, 1], [2, 1]] {
            sys.positive(ivec(&w));
        }
        assert_eq!(feasible_strict(&sys), Some(ivec(&[1, 0])));
    }
}
