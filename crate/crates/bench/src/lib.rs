//! Benchmark inputs beyond the built-in fixtures.

use torgit_core::lattice::{ivec, IVec};
use torgit_core::{validate_fan, Fan, IntMatrix, SubtorusAction, ToricDivisor};

/// An `n x n` integer matrix with mixed-sign entries and nontrivial invariant factors.
pub fn dense_matrix(n: usize) -> IntMatrix {
    let rows: Vec<IVec> = (0..n)
        .map(|i| (0..n).map(|j| ((i * 7 + j * 3 + i * j) % 11) as i64 - 5).collect::<Vec<_>>())
        .map(|r| ivec(&r))
        .collect();
    IntMatrix::from_rows(n, &rows)
}

/// Cone over a regular polygon-like lattice polygon with `n` vertices at height one.
pub fn polygon_cone_rays(n: usize) -> Vec<IVec> {
    let pts: [(i64, i64); 8] = [(1, 0), (2, 1), (2, 2), (1, 3), (0, 3), (-1, 2), (-1, 1), (0, 0)];
    pts.iter().take(n).map(|&(x, y)| ivec(&[x, y, 1])).collect()
}

/// The affine toric threefold over a lattice polygon with `n` vertices.
pub fn polygon_fan(n: usize) -> Fan {
    validate_fan(3, &polygon_cone_rays(n), &[(0..n).collect()]).expect("polygon cone is strongly convex")
}

/// A two-dimensional subtorus of the three-dimensional torus.
pub fn plane_action() -> SubtorusAction {
    SubtorusAction::from_images(3, &[ivec(&[1, 0, 0]), ivec(&[0, 1, 0])]).expect("injective")
}

/// A divisor with mixed coefficients on `polygon_fan(n)`.
pub fn polygon_divisor(fan: &Fan) -> ToricDivisor {
    let coeffs: Vec<i64> = (0..fan.n_rays()).map(|i| [2, -1, 3, 0, 1, -2, 4, 1][i % 8]).collect();
    ToricDivisor::new(fan, ivec(&coeffs)).expect("one coefficient per ray")
}
