//! Dense exact matrices and the elimination kernels everything else is built on.
//!
//! Row vectors act on the left throughout the crate: a linear map is a matrix
//! `M` sending `v` to `v * M`. Consequently "image" means row space of `M`
//! and "kernel" means `{ v : v * M = 0 }`.

use crate::field::Field;
use crate::poly::Poly;
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct Mat<F: Field> {
    pub field: F,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| format!("{}", self.at(r, c))).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mat<F> {
    pub fn zero(field: F, rows: usize, cols: usize) -> Self {
        let entries = vec![field.zero(); rows * cols];
        Mat { field, rows, cols, entries }
    }

    pub fn identity(field: F, n: usize) -> Self {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn from_rows(field: F, rows: Vec<Vec<F::Elem>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(nrows * ncols);
        for r in rows {
            assert_eq!(r.len(), ncols, "ragged rows");
            entries.extend(r);
        }
        Mat { field, rows: nrows, cols: ncols, entries }
    }

    pub fn from_fn(field: F, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Mat { field, rows, cols, entries }
    }

    /// Convenience constructor from integer literals.
    pub fn from_i64(field: F, rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols);
        let f = field.clone();
        Mat::from_fn(field, rows, cols, |r, c| f.from_i64(data[r * cols + c]))
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &F::Elem {
        &self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[F::Elem] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn rows_vec(&self) -> Vec<Vec<F::Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat<F> {
        Mat::from_fn(self.field.clone(), self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.add(self.at(r, c), other.at(r, c))
        })
    }

    pub fn sub(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field.clone(), self.rows, self.cols, |r, c| {
            self.field.sub(self.at(r, c), other.at(r, c))
        })
    }

    pub fn scale(&self, s: &F::Elem) -> Mat<F> {
        Mat::from_fn(self.field.clone(), self.rows, self.cols, |r, c| self.field.mul(self.at(r, c), s))
    }

    pub fn mul(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let f = &self.field;
        let mut out = Mat::zero(self.field.clone(), self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if f.is_zero(a) {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add_mul(out.at(r, c), a, other.at(k, c));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    /// `v * M` for a row vector `v`.
    pub fn apply_row(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.rows, "dimension mismatch in vector-matrix product");
        let f = &self.field;
        let mut out = vec![f.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for c in 0..self.cols {
                out[c] = f.add_mul(&out[c], a, self.at(k, c));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Mat<F> {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field.clone(), self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square());
        let mut t = self.field.zero();
        for i in 0..self.rows {
            t = self.field.add(&t, self.at(i, i));
        }
        t
    }

    pub fn hstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.field.clone(), self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, other: &Mat<F>) -> Mat<F> {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.field.clone(), self.rows + other.rows, self.cols, |r, c| {
            if r < self.rows {
                self.at(r, c).clone()
            } else {
                other.at(r - self.rows, c).clone()
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + a, r * self.cols + b);
        }
    }

    /// Characteristic polynomial via Hessenberg reduction; uses only field
    /// divisions, so it is valid in any characteristic.
    pub fn charpoly(&self) -> Poly<F> {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut h = self.clone();
        for col in 0..n.saturating_sub(2) {
            let Some(pr) = (col + 1..n).find(|&r| !f.is_zero(h.at(r, col))) else {
                continue;
            };
            h.swap_rows(pr, col + 1);
            h.swap_cols(pr, col + 1);
            let pinv = f.inv(h.at(col + 1, col));
            for r in col + 2..n {
                if f.is_zero(h.at(r, col)) {
                    continue;
                }
                let factor = f.mul(h.at(r, col), &pinv);
                // similarity: row r -= factor * row col+1, col col+1 += factor * col r
                for c in 0..n {
                    let v = f.sub(h.at(r, c), &f.mul(&factor, h.at(col + 1, c)));
                    h.set(r, c, v);
                }
                for rr in 0..n {
                    let v = f.add(h.at(rr, col + 1), &f.mul(&factor, h.at(rr, r)));
                    h.set(rr, col + 1, v);
                }
            }
        }
        // expansion along the last column of the Hessenberg form
        let mut polys: Vec<Poly<F>> = vec![Poly::one(f.clone())];
        for i in 1..=n {
            let x_minus = Poly::new(f.clone(), vec![f.neg(h.at(i - 1, i - 1)), f.one()]);
            let mut p = x_minus.mul(&polys[i - 1]);
            let mut prod = f.one();
            for k in 1..i {
                prod = f.mul(&prod, h.at(i - k, i - k - 1));
                let coef = f.mul(&prod, h.at(i - 1 - k, i - 1));
                if !f.is_zero(&coef) {
                    p = p.sub(&polys[i - 1 - k].scale(&coef));
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    /// Reduced row echelon form together with the pivot column list.
    pub fn rref(&self) -> (Mat<F>, Vec<usize>) {
        let mut m = self.clone();
        let f = m.field.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| !f.is_zero(m.at(r, col))) else {
                continue;
            };
            m.swap_rows(pr, row);
            let inv = f.inv(m.at(row, col));
            for c in col..m.cols {
                let v = f.mul(m.at(row, c), &inv);
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.at(r, col)) {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for c in col..m.cols {
                    let v = f.sub(m.at(r, c), &f.mul(&factor, m.at(row, c)));
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{ v : v * M = 0 }` (row vectors of length `rows`).
    ///
    /// Row-convention kernel: this is the left null space, computed as the
    /// classical kernel of the transpose.
    pub fn kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        self.transpose().right_kernel_basis()
    }

    /// Basis of `{ x : M * x = 0 }` returned as row vectors of length `cols`.
    pub fn right_kernel_basis(&self) -> Vec<Vec<F::Elem>> {
        let f = self.field.clone();
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = f.neg(r.at(prow, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Some solution `x` of `M * x = b` (column convention), or `None`.
    pub fn solve_right(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(b.len(), self.rows, "dimension mismatch in solve");
        let f = self.field.clone();
        let mut aug = Mat::from_fn(f.clone(), self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let (r, pivots) = aug.rref();
        aug = r;
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![f.zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = aug.at(prow, self.cols).clone();
        }
        Some(x)
    }

    /// Some row vector `v` with `v * M = b`, or `None`.
    pub fn solve_left(&self, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.transpose().solve_right(b)
    }

    pub fn inverse(&self) -> Option<Mat<F>> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(self.field.clone(), n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return None;
        }
        Some(Mat::from_fn(self.field.clone(), n, n, |i, j| r.at(i, n + j).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Minimal polynomial of a square matrix, monic.
    pub fn minimal_polynomial(&self) -> Poly<F> {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        // Krylov on the full matrix space: find the first dependence among
        // I, M, M^2, ...
        let mut powers: Vec<Mat<F>> = vec![Mat::identity(f.clone(), n)];
        loop {
            let stacked = Mat::from_fn(f.clone(), powers.len(), n * n, |r, c| {
                powers[r].at(c / n, c % n).clone()
            });
            if stacked.rank() < powers.len() {
                // last power is a combination of the previous ones
                let prev = Mat::from_fn(f.clone(), powers.len() - 1, n * n, |r, c| {
                    powers[r].at(c / n, c % n).clone()
                });
                let target: Vec<F::Elem> = {
                    let last = powers.last().unwrap();
                    (0..n * n).map(|c| last.at(c / n, c % n).clone()).collect()
                };
                let coeffs = prev
                    .solve_left(&target)
                    .expect("dependence detected but system inconsistent");
                let deg = powers.len() - 1;
                let mut p = vec![f.zero(); deg + 1];
                for (i, c) in coeffs.iter().enumerate() {
                    p[i] = f.neg(c);
                }
                p[deg] = f.one();
                return Poly::new(f, p);
            }
            let next = powers.last().unwrap().mul(self);
            powers.push(next);
        }
    }

    /// Evaluate a polynomial at this matrix.
    pub fn eval_poly(&self, p: &Poly<F>) -> Mat<F> {
        assert!(self.is_square());
        let f = self.field.clone();
        let n = self.rows;
        let mut acc = Mat::zero(f.clone(), n, n);
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(self);
            for i in 0..n {
                let v = f.add(acc.at(i, i), c);
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Spectral projectors onto the generalized eigenspaces attached to the
    /// irreducible factors of the minimal polynomial.
    ///
    /// The projectors are exact idempotents, pairwise orthogonal, and sum to
    /// the identity; they are polynomials in `self`, so they commute with
    /// everything `self` commutes with.
    pub fn split_semisimple_element(&self) -> Vec<Mat<F>> {
        assert!(self.is_square());
        let f = self.field.clone();
        let mu = self.minimal_polynomial();
        let factors = crate::poly::factor(&mu);
        if factors.len() == 1 {
            return vec![Mat::identity(f, self.rows)];
        }
        let mut projectors = Vec::with_capacity(factors.len());
        for (fac, mult) in &factors {
            let fpow = fac.pow(*mult as u64);
            let g = mu.div_exact(&fpow);
            // u*g = 1 mod fac^mult, so (u*g)(self) projects onto this factor's
            // generalized eigenspace.
            let (_, u, _) = Poly::extended_gcd(&g, &fpow);
            let proj_poly = u.mul(&g).rem(&mu);
            projectors.push(self.eval_poly(&proj_poly));
        }
        projectors
    }
}

/// An echelonized subspace of row vectors in a fixed ambient dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace<F: Field> {
    field: F,
    ambient: usize,
    /// rref rows, no zero rows
    basis: Mat<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: F, ambient: usize) -> Self {
        Subspace { basis: Mat::zero(field.clone(), 0, ambient), pivots: vec![], field, ambient }
    }

    pub fn full(field: F, ambient: usize) -> Self {
        Subspace::from_rows(field.clone(), ambient, &Mat::identity(field, ambient).rows_vec())
    }

    pub fn from_rows(field: F, ambient: usize, rows: &[Vec<F::Elem>]) -> Self {
        if rows.is_empty() {
            return Subspace::zero(field, ambient);
        }
        let m = Mat::from_rows(field.clone(), rows.to_vec());
        assert_eq!(m.cols, ambient);
        let (r, pivots) = m.rref();
        let kept: Vec<Vec<F::Elem>> = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        let basis = if kept.is_empty() {
            Mat::zero(field.clone(), 0, ambient)
        } else {
            Mat::from_rows(field.clone(), kept)
        };
        Subspace { field, ambient, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis_rows(&self) -> Vec<Vec<F::Elem>> {
        self.basis.rows_vec()
    }

    /// Reduce `v` modulo the subspace; the result is zero iff `v` is a member.
    pub fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.ambient);
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let factor = v[pc].clone();
            for c in 0..self.ambient {
                v[c] = f.sub(&v[c], &f.mul(&factor, self.basis.at(row, c)));
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|e| self.field.is_zero(e))
    }

    pub fn contains_subspace(&self, other: &Subspace<F>) -> bool {
        other.basis_rows().iter().all(|r| self.contains(r))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Subspace::from_rows(self.field.clone(), self.ambient, &rows)
    }

    pub fn intersect(&self, other: &Subspace<F>) -> Subspace<F> {
        // Zassenhaus-free: v in both spans iff v = x*B1 = y*B2; solve
        // [B1; -B2] stacked for left-kernel combinations.
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.field.clone(), self.ambient);
        }
        let stacked = self.basis.vstack(&other.basis.scale(&self.field.neg(&self.field.one())));
        let combos = stacked.kernel_basis();
        let rows: Vec<Vec<F::Elem>> = combos
            .iter()
            .map(|k| self.basis.apply_row(&k[..self.dim()]))
            .collect();
        Subspace::from_rows(self.field.clone(), self.ambient, &rows)
    }

    /// Coordinates of the ambient space complementary to the pivots; the
    /// corresponding standard basis vectors complement this subspace.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Express `v` (assumed a member) in the echelon basis.
    pub fn coords_of(&self, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let f = &self.field;
        let mut v = v.to_vec();
        let mut coords = vec![f.zero(); self.dim()];
        for (row, &pc) in self.pivots.iter().enumerate() {
            if f.is_zero(&v[pc]) {
                continue;
            }
            let factor = v[pc].clone();
            coords[row] = factor.clone();
            for c in 0..self.ambient {
                v[c] = f.sub(&v[c], &f.mul(&factor, self.basis.at(row, c)));
            }
        }
        if v.iter().all(|e| f.is_zero(e)) {
            Some(coords)
        } else {
            None
        }
    }
}

pub fn vec_add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.add(x, y)).collect()
}

pub fn vec_sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

pub fn vec_scale<F: Field>(f: &F, s: &F::Elem, a: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().map(|x| f.mul(s, x)).collect()
}

pub fn vec_is_zero<F: Field>(f: &F, a: &[F::Elem]) -> bool {
    a.iter().all(|x| f.is_zero(x))
}

pub fn unit_vec<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = vec![f.zero(); n];
    v[i] = f.one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn qmat(rows: usize, cols: usize, data: &[i64]) -> Mat<Rationals> {
        Mat::from_i64(Rationals, rows, cols, data)
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Mat::identity(Rationals, 2);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one() {
        let m = qmat(2, 2, &[2, 4, 1, 2]);
        let (r, pivots) = m.rref();
        assert_eq!(r, qmat(2, 2, &[1, 2, 0, 0]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_char_two_cancellation() {
        let f = PrimeField::new(2);
        let m = Mat::from_i64(f, 2, 2, &[1, 1, 1, 1]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Mat::from_i64(f, 2, 2, &[1, 1, 0, 0]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Mat::identity(Rationals, 3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let m: Mat<Rationals> = Mat::zero(Rationals, 2, 3);
        assert_eq!(m.kernel_basis().len(), 2);
        assert_eq!(m.right_kernel_basis().len(), 3);
    }

    #[test]
    fn kernel_single_equation() {
        // [[1,2]] * x = 0 has kernel spanned by (-2, 1)
        let m = qmat(1, 2, &[1, 2]);
        let k = m.right_kernel_basis();
        assert_eq!(k.len(), 1);
        let f = Rationals;
        let v = &k[0];
        // proportional to (-2, 1)
        let got = f.mul(&v[0], &f.from_i64(1));
        let expect = f.mul(&v[1], &f.from_i64(-2));
        assert_eq!(got, expect);
        assert!(!f.is_zero(&v[1]));
    }

    #[test]
    fn solve_identity() {
        let id = Mat::identity(Rationals, 2);
        let b = vec![Rationals.from_i64(3), Rationals.from_i64(-1)];
        assert_eq!(id.solve_right(&b).unwrap(), b);
    }

    #[test]
    fn solve_underdetermined() {
        let m = qmat(1, 2, &[1, 1]);
        let x = m.solve_right(&[Rationals.from_i64(2)]).unwrap();
        assert_eq!(Rationals.add(&x[0], &x[1]), Rationals.from_i64(2));
    }

    #[test]
    fn solve_inconsistent() {
        let m = qmat(2, 1, &[1, 1]);
        assert!(m.solve_right(&[Rationals.from_i64(0), Rationals.from_i64(1)]).is_none());
    }

    #[test]
    fn projectors_identity() {
        let id: Mat<Rationals> = Mat::identity(Rationals, 3);
        let ps = id.split_semisimple_element();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0], id);
    }

    #[test]
    fn projectors_diag_01() {
        let m = qmat(2, 2, &[0, 0, 0, 1]);
        let mut ps = m.split_semisimple_element();
        assert_eq!(ps.len(), 2);
        ps.sort_by_key(|p| if p.field.is_zero(p.at(0, 0)) { 1 } else { 0 });
        assert_eq!(ps[0], qmat(2, 2, &[1, 0, 0, 0]));
        assert_eq!(ps[1], qmat(2, 2, &[0, 0, 0, 1]));
    }

    #[test]
    fn projectors_irreducible_minpoly() {
        // Companion matrix of x^2 + 1; brute-force check first that x^2 + 1
        // has no rational root and hence no proper factor, so the expected
        // projector list is [identity].
        for num in -10i64..=10 {
            for den in 1i64..=10 {
                let f = Rationals;
                let x = crate::field::ratio(num, den);
                let v = f.add(&f.mul(&x, &x), &f.one());
                assert!(!f.is_zero(&v), "x^2+1 unexpectedly has a rational root");
            }
        }
        let m = qmat(2, 2, &[0, -1, 1, 0]);
        let ps = m.split_semisimple_element();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0], Mat::identity(Rationals, 2));
    }

    #[test]
    fn charpoly_of_companion_matrix() {
        // companion of x^3 - 2x + 5 (acting on row vectors)
        let m = qmat(3, 3, &[0, 1, 0, 0, 0, 1, -5, 2, 0]);
        let cp = m.charpoly();
        let expect = crate::poly::Poly::new(
            Rationals,
            vec![
                Rationals.from_i64(5),
                Rationals.from_i64(-2),
                Rationals.from_i64(0),
                Rationals.from_i64(1),
            ],
        );
        assert_eq!(cp, expect);
    }

    #[test]
    fn charpoly_cayley_hamilton_over_gf3() {
        let f = PrimeField::new(3);
        let m = Mat::from_i64(f, 4, 4, &[1, 2, 0, 1, 0, 1, 1, 2, 2, 0, 1, 0, 1, 1, 0, 2]);
        let cp = m.charpoly();
        assert_eq!(cp.degree(), Some(4));
        assert!(m.eval_poly(&cp).is_zero());
    }

    #[test]
    fn minimal_polynomial_of_nilpotent() {
        let m = qmat(2, 2, &[0, 1, 0, 0]);
        let mu = m.minimal_polynomial();
        assert_eq!(mu.degree(), Some(2));
        assert!(Rationals.is_zero(&mu.coeffs()[0]));
        assert!(Rationals.is_zero(&mu.coeffs()[1]));
    }

    #[test]
    fn subspace_membership_and_reduce() {
        let s = Subspace::from_rows(
            Rationals,
            3,
            &[vec![Rationals.from_i64(1), Rationals.from_i64(1), Rationals.from_i64(0)]],
        );
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[Rationals.from_i64(2), Rationals.from_i64(2), Rationals.from_i64(0)]));
        assert!(!s.contains(&[Rationals.from_i64(1), Rationals.from_i64(0), Rationals.from_i64(0)]));
    }

    #[test]
    fn subspace_intersection() {
        let f = Rationals;
        let a = Subspace::from_rows(f, 3, &[
            vec![f.from_i64(1), f.from_i64(0), f.from_i64(0)],
            vec![f.from_i64(0), f.from_i64(1), f.from_i64(0)],
        ]);
        let b = Subspace::from_rows(f, 3, &[
            vec![f.from_i64(0), f.from_i64(1), f.from_i64(0)],
            vec![f.from_i64(0), f.from_i64(0), f.from_i64(1)],
        ]);
        let i = a.intersect(&b);
        assert_eq!(i.dim(), 1);
        assert!(i.contains(&[f.from_i64(0), f.from_i64(5), f.from_i64(0)]));
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(entries in proptest::collection::vec(-6i64..6, 12)) {
            let m = qmat(3, 4, &entries);
            let (r1, p1) = m.rref();
            let (r2, p2) = r1.rref();
            prop_assert_eq!(r1, r2);
            prop_assert_eq!(p1, p2);
        }

        #[test]
        fn rank_equals_rank_of_transpose(entries in proptest::collection::vec(-6i64..6, 12)) {
            let m = qmat(4, 3, &entries);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn solve_roundtrip(entries in proptest::collection::vec(-5i64..5, 9),
                           x in proptest::collection::vec(-5i64..5, 3)) {
            let m = qmat(3, 3, &entries);
            let xv: Vec<_> = x.iter().map(|&v| Rationals.from_i64(v)).collect();
            let b: Vec<_> = (0..3).map(|r| {
                let mut acc = Rationals.zero();
                for c in 0..3 {
                    acc = Rationals.add_mul(&acc, m.at(r, c), &xv[c]);
                }
                acc
            }).collect();
            let sol = m.solve_right(&b).expect("consistent by construction");
            // m * sol must reproduce b
            for r in 0..3 {
                let mut acc = Rationals.zero();
                for c in 0..3 {
                    acc = Rationals.add_mul(&acc, m.at(r, c), &sol[c]);
                }
                prop_assert_eq!(acc, b[r].clone());
            }
        }

        #[test]
        fn spectral_projectors_partition_identity(entries in proptest::collection::vec(-3i64..3, 9)) {
            let m = qmat(3, 3, &entries);
            let ps = m.split_semisimple_element();
            let f = Rationals;
            let n = 3;
            // idempotent and pairwise orthogonal
            for (i, p) in ps.iter().enumerate() {
                prop_assert_eq!(p.mul(p), p.clone());
                for (j, q) in ps.iter().enumerate() {
                    if i != j {
                        prop_assert!(p.mul(q).is_zero());
                    }
                }
            }
            let mut sum = Mat::zero(f, n, n);
            for p in &ps {
                sum = sum.add(p);
            }
            prop_assert_eq!(sum, Mat::identity(Rationals, n));
        }

        #[test]
        fn prime_field_rref_idempotent(entries in proptest::collection::vec(0i64..5, 12)) {
            let f = PrimeField::new(5);
            let m = Mat::from_i64(f, 3, 4, &entries);
            let (r1, _) = m.rref();
            let (r2, _) = r1.rref();
            prop_assert_eq!(r1, r2);
        }
    }
}
