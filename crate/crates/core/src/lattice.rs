//! Exact integer linear algebra on finitely generated free abelian groups.
//!
//! Everything here works over arbitrary-precision integers. Matrices are dense
//! and row-major; sublattices are stored by a row basis in Hermite normal form
//! so that equal lattices have equal representations.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type IVec = Vec<Int>;

pub fn ivec(xs: &[i64]) -> IVec {
    xs.iter().map(|&x| Int::from(x)).collect()
}

pub fn dot(a: &[Int], b: &[Int]) -> Int {
    assert_eq!(a.len(), b.len(), "dot product of vectors with different lengths");
    a.iter().zip(b).fold(Int::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Int]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// gcd of the entries; zero for the zero vector.
pub fn content(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides out the content. The zero vector is returned unchanged.
pub fn primitive(v: &[Int]) -> IVec {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn add_scaled(a: &[Int], s: &Int, b: &[Int]) -> IVec {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn lin_comb(s: &Int, a: &[Int], t: &Int, b: &[Int]) -> IVec {
    a.iter().zip(b).map(|(x, y)| s * x + t * y).collect()
}

pub fn neg_vec(a: &[Int]) -> IVec {
    a.iter().map(|x| -x).collect()
}

pub fn sum_vecs<'a>(dim: usize, vs: impl IntoIterator<Item = &'a IVec>) -> IVec {
    let mut acc = vec![Int::zero(); dim];
    for v in vs {
        for (a, x) in acc.iter_mut().zip(v) {
            *a += x;
        }
    }
    acc
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Int::one();
        }
        m
    }

    /// Builds a matrix from rows; `cols` is needed to describe matrices with no rows.
    pub fn from_rows(cols: usize, rows: &[IVec]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length does not match column count");
            data.extend(r.iter().cloned());
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Self {
        let rows: Vec<IVec> = rows.iter().map(|r| ivec(r)).collect();
        Self::from_rows(cols, &rows)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, cols: &[IVec]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length does not match row count");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Int] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<IVec> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> IVec {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let p = a * &other[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Int]) -> IVec {
        assert_eq!(self.cols, v.len(), "matrix-vector dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[target] += factor * row[source]
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = factor * &self[(source, j)];
            self[(target, j)] += s;
        }
    }

    /// col[target] += factor * col[source]
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &Int) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = factor * &self[(i, source)];
            self[(i, target)] += s;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = -&self[(i, j)];
            self[(i, j)] = x;
        }
    }

    /// Rank over the rationals, by fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut prev = Int::one();
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
                continue;
            };
            m.swap_rows(rank, p);
            for i in rank + 1..m.rows {
                for j in col + 1..m.cols {
                    let v = (&m[(rank, col)] * &m[(i, j)] - &m[(i, col)] * &m[(rank, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, col)] = Int::zero();
            }
            prev = m[(rank, col)].clone();
            rank += 1;
        }
        rank
    }

    /// Determinant of a square matrix (Bareiss).
    pub fn det(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::one();
        }
        let mut m = self.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if m[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                    return Int::zero();
                };
                m.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&m[(k, k)] * &m[(i, j)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                    m[(i, j)] = v;
                }
                m[(i, k)] = Int::zero();
            }
            prev = m[(k, k)].clone();
        }
        sign * &m[(n - 1, n - 1)]
    }

    pub fn is_unimodular(&self) -> bool {
        self.rows == self.cols && self.det().abs().is_one()
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = Int;
    fn index(&self, (i, j): (usize, usize)) -> &Int {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Int {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_vec(self.row(i)))?;
        }
        write!(f, "]")
    }
}

pub fn fmt_vec(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// `u * a * v == d` with `u`, `v` unimodular and `d` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    rank: usize,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<Int> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }
}

fn smallest_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if d[(bi, bj)].abs() <= x.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

/// Smith normal form with transforms.
///
/// Pivot choice is deterministic: the entry of smallest absolute value in the
/// remaining block, first in row-major order among ties.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_pivot(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);
        loop {
            let pivot = d[(t, t)].clone();
            let mut remainder = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -d[(i, t)].div_floor(&pivot);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                remainder |= !d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -d[(t, j)].div_floor(&pivot);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                remainder |= !d[(t, j)].is_zero();
            }
            if remainder {
                let (pi, pj) = smallest_pivot(&d, t).expect("block is nonzero");
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
                continue;
            }
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match bad_row {
                Some(i) => {
                    let one = Int::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    SmithDecomposition { u, d, v, rank: t }
}

/// Row-style Hermite normal form of the lattice spanned by `gens`.
///
/// Returns a basis in echelon form with positive pivots and entries above each
/// pivot reduced into `[0, pivot)`. Equal lattices give equal bases.
pub fn hermite_basis(cols: usize, gens: &[IVec]) -> Vec<IVec> {
    let mut rows: Vec<IVec> = gens.iter().filter(|g| !is_zero_vec(g)).cloned().collect();
    for g in &rows {
        assert_eq!(g.len(), cols, "generator length does not match ambient rank");
    }
    let mut r = 0;
    for col in 0..cols {
        if r == rows.len() {
            break;
        }
        loop {
            let nonzero: Vec<usize> = (r..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let best =
                *nonzero.iter().min_by(|&&a, &&b| rows[a][col].abs().cmp(&rows[b][col].abs()).then(a.cmp(&b))).unwrap();
            rows.swap(r, best);
            if nonzero.len() == 1 {
                break;
            }
            for i in r + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = -rows[i][col].div_floor(&rows[r][col]);
                rows[i] = add_scaled(&rows[i], &q, &rows[r]);
            }
        }
        if r < rows.len() && !rows[r][col].is_zero() {
            if rows[r][col].is_negative() {
                rows[r] = neg_vec(&rows[r]);
            }
            for i in 0..r {
                let q = -rows[i][col].div_floor(&rows[r][col]);
                rows[i] = add_scaled(&rows[i], &q, &rows[r]);
            }
            r += 1;
        }
    }
    rows.truncate(r);
    rows.retain(|x| !is_zero_vec(x));
    rows
}

/// Reduces `v` modulo the rational span of a Hermite basis: the result is a
/// positive multiple of `v + w` (w in the span) vanishing on every pivot
/// column of the basis, made primitive. Used to pick canonical
/// representatives of directions modulo a subspace.
pub fn reduce_mod_span(v: &[Int], basis: &[IVec]) -> IVec {
    let mut r = v.to_vec();
    for b in basis {
        let Some(col) = b.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if r[col].is_zero() {
            continue;
        }
        let p = b[col].clone();
        let c = r[col].clone();
        let g = p.gcd(&c);
        let (s, t) = (&p / &g, -(&c / &g));
        r = lin_comb(&s, &r, &t, b);
        if s.is_negative() {
            r = neg_vec(&r);
        }
    }
    primitive(&r)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
    saturated: bool,
}

impl Sublattice {
    pub fn from_generators(ambient_rank: usize, gens: &[IVec]) -> Self {
        let rows = hermite_basis(ambient_rank, gens);
        let basis = IntMatrix::from_rows(ambient_rank, &rows);
        let snf = smith_normal_form(&basis);
        let saturated = snf.invariant_factors().iter().all(One::is_one);
        Sublattice { ambient_rank, basis, saturated }
    }

    pub fn zero(ambient_rank: usize) -> Self {
        Sublattice { ambient_rank, basis: IntMatrix::zeros(0, ambient_rank), saturated: true }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Sublattice { ambient_rank, basis: IntMatrix::identity(ambient_rank), saturated: true }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<IVec> {
        self.basis.row_vecs()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    pub fn contains(&self, v: &[Int]) -> bool {
        solve_integer(&self.basis.transpose(), v).is_some()
    }

    /// Index of `self` in `other`'s saturation when both have equal rank.
    pub fn index_in_saturation(&self) -> Int {
        let snf = smith_normal_form(&self.basis);
        snf.invariant_factors().iter().fold(Int::one(), |a, x| a * x)
    }
}

/// Saturated lattice `{x : a x = 0}`.
pub fn kernel_basis(a: &IntMatrix) -> Sublattice {
    let n = a.cols();
    let snf = smith_normal_form(a);
    let gens: Vec<IVec> = (snf.rank()..n).map(|j| snf.v.column(j)).collect();
    let rows = hermite_basis(n, &gens);
    Sublattice { ambient_rank: n, basis: IntMatrix::from_rows(n, &rows), saturated: true }
}

/// Smallest saturated sublattice containing `s`.
pub fn saturate(s: &Sublattice) -> Sublattice {
    if s.saturated {
        return s.clone();
    }
    let perp = kernel_basis(&s.basis);
    kernel_basis(&perp.basis)
}

/// Some integer `x` with `a x = b`, or `None` when no integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &[Int]) -> Option<IVec> {
    assert_eq!(a.rows(), b.len(), "right-hand side length does not match row count");
    let snf = smith_normal_form(a);
    let c = snf.u.mul_vec(b);
    let mut y = vec![Int::zero(); a.cols()];
    for (i, ci) in c.iter().enumerate() {
        if i < snf.rank() {
            let di = &snf.d[(i, i)];
            if !ci.is_multiple_of(di) {
                return None;
            }
            y[i] = ci / di;
        } else if !ci.is_zero() {
            return None;
        }
    }
    Some(snf.v.mul_vec(&y))
}

/// A homomorphism `Z^source -> Z^target`, stored as a target x source matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeMap {
    matrix: IntMatrix,
}

impl LatticeMap {
    pub fn new(matrix: IntMatrix) -> Self {
        LatticeMap { matrix }
    }

    pub fn identity(n: usize) -> Self {
        LatticeMap { matrix: IntMatrix::identity(n) }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn source_rank(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn apply(&self, v: &[Int]) -> IVec {
        self.matrix.mul_vec(v)
    }

    pub fn compose(&self, inner: &LatticeMap) -> LatticeMap {
        LatticeMap { matrix: self.matrix.mul(&inner.matrix) }
    }
}

/// Projection onto the free part of `Z^n / s`, plus the torsion invariant factors.
pub fn cokernel_projection(s: &Sublattice) -> (LatticeMap, Vec<Int>) {
    let n = s.ambient_rank();
    let gens = s.basis.transpose();
    let snf = smith_normal_form(&gens);
    let free_rows: Vec<IVec> = (snf.rank()..n).map(|i| snf.u.row(i).to_vec()).collect();
    let rows = hermite_basis(n, &free_rows);
    debug_assert_eq!(rows.len(), free_rows.len());
    let torsion = snf.invariant_factors().into_iter().filter(|x| !x.is_one()).collect();
    (LatticeMap::new(IntMatrix::from_rows(n, &rows)), torsion)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(cols: usize, rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(cols, rows)
    }

    fn check_snf(a: &IntMatrix) -> SmithDecomposition {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.u.is_unimodular());
        assert!(s.v.is_unimodular());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn snf_of_weight_map() {
        let phi = m(2, &[&[2, 0], &[1, 2], &[1, 1]]);
        let s = check_snf(&phi);
        assert_eq!(s.invariant_factors(), ivec(&[1, 1]));
    }

    #[test]
    fn snf_trivial_cases() {
        let z = IntMatrix::zeros(2, 3);
        let s = check_snf(&z);
        assert_eq!(s.rank(), 0);
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(3));
        let s = check_snf(&m(1, &[&[2]]));
        assert_eq!(s.d, m(1, &[&[2]]));
        let s = check_snf(&m(2, &[&[2, 4], &[6, 8]]));
        assert_eq!(s.invariant_factors(), ivec(&[2, 4]));
        check_snf(&IntMatrix::zeros(0, 3));
        check_snf(&IntMatrix::zeros(3, 0));
    }

    #[test]
    fn kernel_of_dual_weight_map() {
        let k = kernel_basis(&m(3, &[&[2, 1, 1], &[0, 2, 1]]));
        assert_eq!(k.rank(), 1);
        let v = k.basis().row(0).to_vec();
        assert!(v == ivec(&[1, 2, -4]) || v == ivec(&[-1, -2, 4]));
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).rank(), 0);
        let k = kernel_basis(&m(2, &[&[1, 1]]));
        assert_eq!(k.basis_vecs(), vec![ivec(&[1, -1])]);
    }

    #[test]
    fn saturation_examples() {
        let im = Sublattice::from_generators(3, &[ivec(&[2, 1, 1]), ivec(&[0, 2, 1])]);
        assert!(im.is_saturated());
        assert_eq!(saturate(&im), im);
        let s = Sublattice::from_generators(2, &[ivec(&[2, 0])]);
        assert!(!s.is_saturated());
        assert_eq!(saturate(&s).basis_vecs(), vec![ivec(&[1, 0])]);
        assert_eq!(saturate(&Sublattice::zero(2)).rank(), 0);
    }

    #[test]
    fn integer_solutions() {
        let quadric = m(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(solve_integer(&quadric, &ivec(&[-1, 0, 0, 0])), None);
        assert_eq!(solve_integer(&quadric, &ivec(&[0, 0, 0, 0])), Some(ivec(&[0, 0, 0])));
        assert_eq!(solve_integer(&m(3, &[&[1, 0, 0]]), &ivec(&[-1])), Some(ivec(&[-1, 0, 0])));
        assert_eq!(solve_integer(&m(1, &[&[2]]), &ivec(&[3])), None);
    }

    #[test]
    fn cokernel_examples() {
        let im = Sublattice::from_generators(3, &[ivec(&[2, 1, 1]), ivec(&[0, 2, 1])]);
        let (p, torsion) = cokernel_projection(&im);
        assert!(torsion.is_empty());
        assert_eq!(p.matrix(), &m(3, &[&[1, 2, -4]]));
        let (p, _) = cokernel_projection(&Sublattice::full(3));
        assert_eq!(p.target_rank(), 0);
        let (p, _) = cokernel_projection(&Sublattice::zero(2));
        assert_eq!(p.matrix(), &IntMatrix::identity(2));
        let (p, torsion) = cokernel_projection(&Sublattice::from_generators(2, &[ivec(&[2, 0])]));
        assert_eq!(torsion, ivec(&[2]));
        assert_eq!(p.matrix(), &m(2, &[&[0, 1]]));
    }

    #[test]
    fn hermite_is_canonical() {
        let a = hermite_basis(2, &[ivec(&[2, 1]), ivec(&[0, 3])]);
        let b = hermite_basis(2, &[ivec(&[2, 4]), ivec(&[2, 1]), ivec(&[4, 5])]);
        assert_eq!(a, b);
        assert_eq!(a, vec![ivec(&[2, 1]), ivec(&[0, 3])]);
    }

    #[test]
    fn rank_and_det() {
        assert_eq!(m(3, &[&[1, 2, 3], &[2, 4, 6]]).rank(), 1);
        assert_eq!(m(2, &[&[0, 1], &[1, 0]]).det(), Int::from(-1));
        assert_eq!(m(3, &[&[2, 0, 0], &[1, 3, 0], &[5, 5, 4]]).det(), Int::from(24));
    }
}
