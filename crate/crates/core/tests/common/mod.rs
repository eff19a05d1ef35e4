#![allow(dead_code)]

use rand::Rng;
use torgit_core::lattice::{dot, ivec, IVec};
use torgit_core::{validate_fan, Cone, DivisorGroup, Fan, IntMatrix, Linearization, SubtorusAction, ToricDivisor};

/// Raw data for a random instance, before validation.
#[derive(Clone, Debug)]
pub struct RawInstance {
    pub rank: usize,
    pub gens: Vec<Vec<i64>>,
    /// Use the boundary of the cone (its facets) instead of the cone itself.
    pub boundary: bool,
    pub phi_cols: Vec<Vec<i64>>,
    pub coeffs: [Vec<i64>; 2],
    pub shifts: [Vec<i64>; 2],
}

pub struct Instance {
    pub raw: RawInstance,
    pub fan: Fan,
    pub action: SubtorusAction,
    pub divisors: [ToricDivisor; 2],
    pub shifts: [IVec; 2],
}

impl Instance {
    pub fn lin(&self, i: usize) -> Linearization {
        Linearization::new(&self.action, vec![self.shifts[i].clone()]).unwrap()
    }

    /// The group spanned by both divisors, when they are independent.
    pub fn group2(&self) -> Option<(DivisorGroup, Linearization)> {
        let g = DivisorGroup::new(&self.fan, self.divisors.to_vec()).ok()?;
        let lin = Linearization::new(&self.action, self.shifts.to_vec()).unwrap();
        Some((g, lin))
    }

    pub fn is_affine(&self) -> bool {
        self.fan.single_cone().is_some()
    }
}

fn vector(rng: &mut impl Rng, len: usize, bound: i64) -> Vec<i64> {
    (0..len).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn random_raw(rng: &mut impl Rng) -> RawInstance {
    let rank = rng.gen_range(1..=3);
    let n_gens = rng.gen_range(1..=6);
    let d = rng.gen_range(0..=2.min(rank));
    RawInstance {
        rank,
        gens: (0..n_gens).map(|_| vector(rng, rank, 2)).collect(),
        boundary: rng.gen_bool(0.25),
        phi_cols: (0..d).map(|_| vector(rng, rank, 2)).collect(),
        coeffs: [vector(rng, 6, 3), vector(rng, 6, 3)],
        shifts: [vector(rng, d, 2), vector(rng, d, 2)],
    }
}

pub fn build(raw: RawInstance) -> Option<Instance> {
    let rank = raw.rank;
    let gens: Vec<IVec> = raw.gens.iter().map(|g| ivec(g)).collect();
    let cone = Cone::from_generators(rank, &gens);
    if !cone.is_pointed() || cone.rays().is_empty() || cone.rays().len() > 6 {
        return None;
    }
    let rays = cone.rays().to_vec();
    let all: Vec<usize> = (0..rays.len()).collect();
    let maximal: Vec<Vec<usize>> = if raw.boundary && cone.dim() >= 2 {
        cone.facets().iter().map(|f| all.iter().copied().filter(|&i| dot(f, &rays[i]) == 0.into()).collect()).collect()
    } else {
        vec![all]
    };
    let fan = validate_fan(rank, &rays, &maximal).ok()?;
    let n = fan.n_rays();
    let cols: Vec<IVec> = raw.phi_cols.iter().map(|c| ivec(c)).collect();
    let action = SubtorusAction::new(IntMatrix::from_columns(rank, &cols)).ok()?;
    let divisors = [
        ToricDivisor::new(&fan, ivec(&raw.coeffs[0][..n])).unwrap(),
        ToricDivisor::new(&fan, ivec(&raw.coeffs[1][..n])).unwrap(),
    ];
    let shifts = [ivec(&raw.shifts[0]), ivec(&raw.shifts[1])];
    Some(Instance { raw, fan, action, divisors, shifts })
}

/// Draws until an instance validates.
pub fn random_instance(rng: &mut impl Rng) -> Instance {
    loop {
        if let Some(inst) = build(random_raw(rng)) {
            return inst;
        }
    }
}

/// A random unimodular matrix: a product of elementary operations.
pub fn random_unimodular(rng: &mut impl Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    if n < 2 {
        if rng.gen_bool(0.5) {
            m[(0, 0)] = (-1).into();
        }
        return m;
    }
    for _ in 0..4 {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let c: i64 = rng.gen_range(-2..=2);
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = c.into();
        m = e.mul(&m);
        if rng.gen_bool(0.3) {
            m.swap_rows(i, j);
        }
    }
    m
}

/// The instance with every lattice datum transformed by `u` (acting on `N`).
pub fn transform(inst: &Instance, u: &IntMatrix) -> Instance {
    let rank = inst.fan.ambient_rank();
    let rays: Vec<IVec> = inst.fan.rays().iter().map(|v| u.mul_vec(v)).collect();
    let maximal: Vec<Vec<usize>> = inst.fan.maximal_cones().iter().map(|f| f.rays().to_vec()).collect();
    let fan = validate_fan(rank, &rays, &maximal).expect("unimodular image of a fan is a fan");
    let action = SubtorusAction::new(u.mul(inst.action.phi().matrix())).unwrap();
    let divisors = [
        ToricDivisor::new(&fan, inst.divisors[0].coefficients().to_vec()).unwrap(),
        ToricDivisor::new(&fan, inst.divisors[1].coefficients().to_vec()).unwrap(),
    ];
    Instance { raw: inst.raw.clone(), fan, action, divisors, shifts: inst.shifts.clone() }
}
