//! Hilbert–Mumford machinery for linear torus actions on affine space, and a
//! cross-check of toric semistable loci through an ambient coordinate model.
//!
//! A point of `K^n` is abstracted to its support: the limit of `λ(t)·z` as
//! `t -> 0` and the orbit closure depend only on which coordinates are nonzero.

use std::collections::BTreeSet;

use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::action::{
    mumford_trivial_semistable, semistable_divisor, weight_of, ActionError, Linearization, SubtorusAction,
};
use crate::cone::Cone;
use crate::lattice::{dot, primitive, IVec, Int};
use crate::toric::{Face, Fan, ToricDivisor};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HmError {
    #[error("weight {index} has {found} coordinates, expected {expected}")]
    WeightLength { index: usize, expected: usize, found: usize },
    #[error("coordinate {index} is out of range for {count} coordinates")]
    CoordinateOutOfRange { index: usize, count: usize },
    #[error("section cone is not pointed")]
    SectionConeNotPointed,
    #[error("Hilbert basis exceeds the bound of {limit} elements")]
    HilbertBasisTooLarge { limit: usize },
    #[error("Hilbert basis search box has {points} points, above the limit")]
    SearchBoxTooLarge { points: u128 },
    #[error(transparent)]
    Action(#[from] ActionError),
}

/// A diagonal action of `Z^d`'s torus on `K^n` with the given weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearAction {
    dim: usize,
    weights: Vec<IVec>,
}

impl LinearAction {
    pub fn new(dim: usize, weights: Vec<IVec>) -> Result<Self, HmError> {
        if let Some((index, w)) = weights.iter().enumerate().find(|(_, w)| w.len() != dim) {
            return Err(HmError::WeightLength { index, expected: dim, found: w.len() });
        }
        Ok(LinearAction { dim, weights })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[IVec] {
        &self.weights
    }

    pub fn n_coordinates(&self) -> usize {
        self.weights.len()
    }
}

/// The set of nonzero coordinates of a point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointPattern {
    support: BTreeSet<usize>,
}

impl PointPattern {
    pub fn new(act: &LinearAction, support: impl IntoIterator<Item = usize>) -> Result<Self, HmError> {
        let support: BTreeSet<usize> = support.into_iter().collect();
        if let Some(&index) = support.iter().find(|&&i| i >= act.n_coordinates()) {
            return Err(HmError::CoordinateOutOfRange { index, count: act.n_coordinates() });
        }
        Ok(PointPattern { support })
    }

    pub fn full(act: &LinearAction) -> Self {
        PointPattern { support: (0..act.n_coordinates()).collect() }
    }

    pub fn empty() -> Self {
        PointPattern::default()
    }

    pub fn support(&self) -> &BTreeSet<usize> {
        &self.support
    }

    pub fn is_subset(&self, other: &PointPattern) -> bool {
        self.support.is_subset(&other.support)
    }
}

/// Support of `lim_{t->0} λ(t)·z`, if the limit exists.
pub fn limit(lambda: &[Int], p: &PointPattern, act: &LinearAction) -> Option<PointPattern> {
    let mut support = BTreeSet::new();
    for &i in &p.support {
        let s = dot(lambda, &act.weights[i]);
        if s.is_negative() {
            return None;
        }
        if s.is_zero() {
            support.insert(i);
        }
    }
    Some(PointPattern { support })
}

/// A primitive one-parameter subgroup whose limit exists and lands in `target`.
///
/// The limit exists on the cone `C = {λ : ⟨w_i, λ⟩ >= 0}` over the support, and
/// its support is constant on the relative interior of each face of `C`; faces
/// are tried by increasing size of that support.
pub fn destabilize(p: &PointPattern, target: impl Fn(&PointPattern) -> bool, act: &LinearAction) -> Option<IVec> {
    let ineqs: Vec<IVec> = p.support.iter().map(|&i| act.weights[i].clone()).collect();
    let cone = Cone::from_inequalities(act.dim, &ineqs, &[]);
    let mut candidates: Vec<(PointPattern, IVec)> = cone
        .faces()
        .iter()
        .map(|f| {
            let lambda = f.relative_interior_point();
            let zero = p.support.iter().copied().filter(|&i| dot(&act.weights[i], &lambda).is_zero()).collect();
            (PointPattern { support: zero }, lambda)
        })
        .collect();
    candidates.sort_by(|a, b| (a.0.support.len(), &a.0.support).cmp(&(b.0.support.len(), &b.0.support)));
    candidates.into_iter().find(|(z, _)| target(z)).map(|(_, lambda)| primitive(&lambda))
}

/// Minimal generators of the monoid `cone ∩ Z^n` of a pointed cone, found by
/// enumerating the bounding box of the fundamental zonotope.
pub fn hilbert_basis(cone: &Cone, limit: usize) -> Result<Vec<IVec>, HmError> {
    if !cone.is_pointed() {
        return Err(HmError::SectionConeNotPointed);
    }
    const MAX_POINTS: u128 = 20_000_000;
    let n = cone.ambient_rank();
    let small = |v: &IVec| -> Vec<i64> { v.iter().map(|x| x.to_i64().expect("small cone")).collect() };
    let rays: Vec<Vec<i64>> = cone.rays().iter().map(small).collect();
    let facets: Vec<Vec<i64>> = cone.facets().iter().map(small).collect();
    let equations: Vec<Vec<i64>> = cone.equations().iter().map(small).collect();
    let grading: Vec<i64> = (0..n).map(|k| facets.iter().map(|f| f[k]).sum()).collect();
    let dot64 = |a: &[i64], b: &[i64]| -> i64 { a.iter().zip(b).map(|(x, y)| x * y).sum() };

    let lo: Vec<i64> = (0..n).map(|k| rays.iter().map(|r| r[k].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..n).map(|k| rays.iter().map(|r| r[k].max(0)).sum()).collect();
    let points: u128 = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as u128).product();
    if points > MAX_POINTS {
        return Err(HmError::SearchBoxTooLarge { points });
    }
    let max_degree: i64 = rays.iter().map(|r| dot64(&grading, r)).sum();
    let inside = |x: &[i64]| equations.iter().all(|e| dot64(e, x) == 0) && facets.iter().all(|f| dot64(f, x) >= 0);

    let mut candidates: Vec<(i64, Vec<i64>)> = Vec::new();
    let mut x = lo.clone();
    'outer: loop {
        if inside(&x) {
            let deg = dot64(&grading, &x);
            if deg > 0 && deg <= max_degree {
                candidates.push((deg, x.clone()));
            }
        }
        for k in 0..n {
            if x[k] < hi[k] {
                x[k] += 1;
                continue 'outer;
            }
            x[k] = lo[k];
        }
        break;
    }
    candidates.sort();

    let mut basis: Vec<Vec<i64>> = Vec::new();
    for (_, c) in candidates {
        let reducible = basis.iter().any(|h| {
            let rest: Vec<i64> = c.iter().zip(h).map(|(a, b)| a - b).collect();
            rest.iter().any(|&v| v != 0) && inside(&rest)
        });
        if !reducible {
            basis.push(c);
            if basis.len() > limit {
                return Err(HmError::HilbertBasisTooLarge { limit });
            }
        }
    }
    let mut out: Vec<IVec> = basis.into_iter().map(|v| v.into_iter().map(Int::from).collect()).collect();
    out.sort();
    Ok(out)
}

/// `Spec ⊕_n H^0(X, nD)` embedded by a Hilbert basis of its section monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmbientModel {
    /// Generators `(u, n)` of the section monoid; one ambient coordinate each.
    pub coordinates: Vec<IVec>,
    pub action: LinearAction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComparison {
    pub face: Face,
    /// Coordinates nonvanishing over the orbit of the face.
    pub pattern: PointPattern,
    pub toric_semistable: bool,
    /// A one-parameter subgroup driving the orbit into the unstable target.
    pub destabilizer: Option<IVec>,
}

impl FaceComparison {
    pub fn agrees(&self) -> bool {
        self.toric_semistable == self.destabilizer.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossValidation {
    pub model: AmbientModel,
    pub faces: Vec<FaceComparison>,
}

impl CrossValidation {
    pub fn agrees(&self) -> bool {
        self.faces.iter().all(FaceComparison::agrees)
    }
}

/// Compares the toric semistable locus of `(D, lin)` with the orbits the
/// Hilbert–Mumford criterion destabilizes in the ambient model.
pub fn cross_validate(
    fan: &Fan,
    action: &SubtorusAction,
    d: &ToricDivisor,
    lin: &Linearization,
    max_basis: usize,
) -> Result<CrossValidation, HmError> {
    let ss = if d.coefficients().iter().all(Zero::is_zero) && lin.shifts().len() == 1 {
        let chi: IVec = lin.shifts()[0].iter().map(|x| -x).collect();
        mumford_trivial_semistable(fan, action, &chi)?
    } else {
        fan.single_cone().ok_or(ActionError::NotAffine { maximal: fan.maximal_cones().len() })?;
        semistable_divisor(fan, action, d, lin)?
    };
    let r = fan.ambient_rank();
    let mut ineqs: Vec<IVec> = fan
        .rays()
        .iter()
        .zip(d.coefficients())
        .map(|(v, a)| {
            let mut f = v.clone();
            f.push(a.clone());
            f
        })
        .collect();
    let mut n_form = vec![Int::zero(); r + 1];
    n_form[r] = Int::from(1);
    ineqs.push(n_form);
    let sections = Cone::from_inequalities(r + 1, &ineqs, &[]);
    let coordinates = hilbert_basis(&sections, max_basis)?;
    let weights: Vec<IVec> = coordinates.iter().map(|h| weight_of(action, &h[..r], &h[r..], lin)).collect();
    let ambient = LinearAction::new(action.dim(), weights)?;
    let degree_zero: BTreeSet<usize> =
        coordinates.iter().enumerate().filter(|(_, h)| h[r].is_zero()).map(|(j, _)| j).collect();

    let orders = |h: &IVec, rho: usize| dot(&h[..r], fan.ray(rho)) + &h[r] * &d.coefficients()[rho];
    let faces = fan
        .faces()
        .iter()
        .map(|gamma| {
            let support = (0..coordinates.len())
                .filter(|&j| gamma.rays().iter().all(|&rho| orders(&coordinates[j], rho).is_zero()));
            let pattern = PointPattern { support: support.collect() };
            let destabilizer = destabilize(&pattern, |z| z.support.is_subset(&degree_zero), &ambient);
            FaceComparison { face: gamma.clone(), pattern, toric_semistable: ss.locus.contains(gamma), destabilizer }
        })
        .collect();
    Ok(CrossValidation { model: AmbientModel { coordinates, action: ambient }, faces })
}
