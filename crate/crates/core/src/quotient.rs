//! Quotients of semistable loci as glued affine toric charts.
//!
//! Each maximal cone `σ_i` of the locus gives the chart `U_{σ_i} -> U_{π(σ_i)}`
//! with `π: N -> N/L`. The orbit of a face `γ ≤ σ` maps onto the orbit of the
//! smallest face of `π(σ)` containing `π(relint γ)`, which drives saturation,
//! geometricity and separatedness.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::action::SubtorusAction;
use crate::certificate::SemistableLocus;
use crate::cone::Cone;
use crate::lattice::{IVec, Int, IntMatrix, LatticeMap};
use crate::toric::{validate_fan, Face, Fan, FanError, SubfanLocus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("semistable locus is empty")]
    EmptyLocus,
    #[error("action and fan live in lattices of different rank")]
    LatticeMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientChart {
    pub source: Face,
    pub image: Cone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gluing {
    pub first: usize,
    pub second: usize,
    pub source: Face,
    /// `π(σ_i ∩ σ_j)`.
    pub image: Cone,
    pub saturated: bool,
    pub separated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitImage {
    pub face: Face,
    pub chart: usize,
    pub image: Cone,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GluedQuotient {
    pub projection: LatticeMap,
    pub torsion: Vec<Int>,
    pub charts: Vec<QuotientChart>,
    pub gluings: Vec<Gluing>,
    pub orbit_map: Vec<OrbitImage>,
    pub good: bool,
    pub geometric: bool,
    pub separated: bool,
    /// The quotient fan when the charts glue to a separated variety with pointed images.
    pub fan: Option<Fan>,
    /// Why the quotient fan could not be validated, if it could not.
    pub fan_error: Option<FanError>,
}

/// Smallest face of `π(σ)` containing `π(γ)`.
pub fn orbit_image(fan: &Fan, projection: &LatticeMap, chart: &Face, gamma: &Face) -> Cone {
    let image = fan.cone(chart).image(projection);
    let p = projection.apply(&fan.cone(gamma).relative_interior_point());
    image.smallest_face_containing(&p)
}

/// Whether the open set given by `sub` (faces of `chart`) is a union of fibers
/// of the chart's quotient map.
pub fn is_saturated(fan: &Fan, projection: &LatticeMap, chart: &Face, sub: &SubfanLocus) -> bool {
    let faces = fan.faces_below(chart);
    let hit: BTreeSet<Cone> =
        faces.iter().filter(|g| sub.contains(g)).map(|g| orbit_image(fan, projection, chart, g)).collect();
    faces.iter().filter(|g| !sub.contains(g)).all(|g| !hit.contains(&orbit_image(fan, projection, chart, g)))
}

fn span_rank(dim: usize, gens: &[IVec]) -> usize {
    IntMatrix::from_rows(dim, gens).rank()
}

pub fn build_quotient(
    fan: &Fan,
    action: &SubtorusAction,
    ss: &SemistableLocus,
) -> Result<GluedQuotient, QuotientError> {
    if action.lattice_rank() != fan.ambient_rank() {
        return Err(QuotientError::LatticeMismatch);
    }
    if ss.locus.is_empty() {
        return Err(QuotientError::EmptyLocus);
    }
    let r = fan.ambient_rank();
    let projection = action.projection().clone();
    let sources = ss.locus.maximal_faces();
    let charts: Vec<QuotientChart> =
        sources.iter().map(|s| QuotientChart { source: s.clone(), image: fan.cone(s).image(&projection) }).collect();

    let mut orbit_map = Vec::new();
    for (i, chart) in charts.iter().enumerate() {
        for gamma in fan.faces_below(&chart.source) {
            let image = orbit_image(fan, &projection, &chart.source, &gamma);
            orbit_map.push(OrbitImage { face: gamma, chart: i, image });
        }
    }

    let mut gluings = Vec::new();
    for i in 0..charts.len() {
        for j in i + 1..charts.len() {
            let (a, b) = (&charts[i], &charts[j]);
            let source = a.source.meet(&b.source);
            let image = fan.cone(&source).image(&projection);
            let common = SubfanLocus::downward_closure(fan, [&source]);
            let saturated = is_saturated(fan, &projection, &a.source, &common)
                && is_saturated(fan, &projection, &b.source, &common);
            let separated =
                a.image.intersect(&b.image) == image && image.is_face_of(&a.image) && image.is_face_of(&b.image);
            gluings.push(Gluing { first: i, second: j, source, image, saturated, separated });
        }
    }

    let l_gens = action.l().basis_vecs();
    let l_rank = l_gens.len();
    let geometric = charts.iter().enumerate().all(|(i, chart)| {
        let mine: Vec<&OrbitImage> = orbit_map.iter().filter(|o| o.chart == i).collect();
        let bijective = chart.image.faces().iter().all(|f| mine.iter().filter(|o| &o.image == f).count() == 1);
        let free = mine.iter().all(|o| {
            let mut gens = l_gens.clone();
            gens.extend(o.face.rays().iter().map(|&x| fan.ray(x).clone()));
            span_rank(r, &gens) == l_rank + o.image.dim()
        });
        bijective && free
    });

    let good = gluings.iter().all(|g| g.saturated);
    let pairwise_separated = gluings.iter().all(|g| g.separated);
    let (quotient_fan, fan_error) = if pairwise_separated && charts.iter().all(|c| c.image.is_pointed()) {
        match quotient_fan(projection.target_rank(), &charts) {
            Ok(f) => (Some(f), None),
            Err(e) => (None, Some(e)),
        }
    } else {
        (None, None)
    };
    Ok(GluedQuotient {
        torsion: action.torsion().to_vec(),
        projection,
        charts,
        gluings,
        orbit_map,
        good,
        geometric,
        separated: pairwise_separated && fan_error.is_none(),
        fan: quotient_fan,
        fan_error,
    })
}

fn quotient_fan(rank: usize, charts: &[QuotientChart]) -> Result<Fan, FanError> {
    let mut rays: Vec<IVec> = charts.iter().flat_map(|c| c.image.rays().iter().cloned()).collect();
    rays.sort();
    rays.dedup();
    let mut cones: Vec<Vec<usize>> = charts
        .iter()
        .map(|c| c.image.rays().iter().map(|v| rays.binary_search(v).expect("ray collected")).collect())
        .collect();
    cones.sort();
    cones.dedup();
    validate_fan(rank, &rays, &cones)
}

/// Recomputes separatedness from the chart and gluing data.
pub fn is_separated(q: &GluedQuotient) -> bool {
    let pairwise = q.gluings.iter().all(|g| {
        let (a, b) = (&q.charts[g.first].image, &q.charts[g.second].image);
        a.intersect(b) == g.image && g.image.is_face_of(a) && g.image.is_face_of(b)
    });
    pairwise
        && (!q.charts.iter().all(|c| c.image.is_pointed())
            || quotient_fan(q.projection.target_rank(), &q.charts).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{semistable_divisor, semistable_group, Linearization};
    use crate::fixtures;
    use crate::lattice::ivec;
    use crate::toric::DivisorGroup;

    fn face(rs: &[usize]) -> Face {
        Face::new(rs.to_vec())
    }

    #[test]
    fn quadric_quotient_is_p1() {
        let fan = fixtures::quadric_fan();
        let act = fixtures::quadric_action();
        let d = fixtures::quadric_divisor(&fan);
        let ss = semistable_divisor(&fan, &act, &d, &Linearization::canonical(&act, 1)).unwrap();
        let q = build_quotient(&fan, &act, &ss).unwrap();
        assert!(q.good && q.geometric && q.separated);
        assert!(is_separated(&q));
        let images: Vec<Cone> = q.charts.iter().map(|c| c.image.clone()).collect();
        assert_eq!(images, vec![Cone::from_generators(1, &[ivec(&[1])]), Cone::from_generators(1, &[ivec(&[-1])])]);
        assert!(q.gluings[0].image.is_zero());
        let p1 = q.fan.unwrap();
        assert!(p1.is_complete());
        assert_eq!(p1.n_rays(), 2);
        let proj = act.projection();
        assert_eq!(orbit_image(&fan, proj, &face(&[0]), &face(&[0])), images[0]);
        assert!(orbit_image(&fan, proj, &face(&[0]), &face(&[])).is_zero());
    }

    #[test]
    fn intro_quotients() {
        let fan = fixtures::intro_fan();
        let act = fixtures::intro_action();
        let d = fixtures::intro_divisor(&fan);
        let lin = Linearization::canonical(&act, 1);
        let single = semistable_divisor(&fan, &act, &d, &lin).unwrap();
        let q = build_quotient(&fan, &act, &single).unwrap();
        assert_eq!(q.charts.len(), 1);
        assert!(q.good && q.geometric && q.separated);
        let ray = Cone::from_generators(1, &[ivec(&[1])]);
        assert_eq!(q.charts[0].image, ray);

        let group = semistable_group(&fan, &act, &DivisorGroup::generated_by(d), &lin).unwrap();
        let q = build_quotient(&fan, &act, &group).unwrap();
        assert_eq!(q.charts.len(), 2);
        assert!(q.charts.iter().all(|c| c.image == ray));
        assert!(q.gluings[0].image.is_zero());
        assert!(q.good);
        assert!(!q.separated && !is_separated(&q));
        assert!(q.fan.is_none());
        assert!(is_saturated(&fan, act.projection(), &face(&[1]), &SubfanLocus::from_faces([face(&[])])));
    }

    #[test]
    fn full_torus_is_not_saturated() {
        let fan = fixtures::intro_fan();
        let act = SubtorusAction::new(IntMatrix::identity(2)).unwrap();
        let torus = SubfanLocus::from_faces([face(&[])]);
        assert!(!is_saturated(&fan, act.projection(), &face(&[0, 1]), &torus));
        assert!(is_saturated(&fan, act.projection(), &face(&[0, 1]), &SubfanLocus::whole(&fan)));
    }
}
