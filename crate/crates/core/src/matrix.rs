//! Dense exact matrices: row reduction, kernels, solving, inversion and
//! Kronecker products.
//!
//! Matrices act on column vectors, so a map `V -> W` is a `dim W x dim V`
//! matrix and composition is matrix multiplication. Basis conventions are
//! deterministic throughout: row echelon pivots are taken left to right,
//! kernel bases run over non-pivot columns in increasing order, and free
//! variables of a solve are set to zero. The basis vector `(i, j)` of a
//! tensor product has flat index `i * dim(second) + j`, matching
//! [`Matrix::kronecker`].

use std::fmt;

use crate::field::{FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

/// Result of Gauss-Jordan elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, field: FieldSpec, entries: Vec<Scalar>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        assert!(
            entries.iter().all(|e| e.field() == field),
            "all entries must lie in {field}"
        );
        Matrix { rows, cols, field, entries }
    }

    pub fn from_fn(rows: usize, cols: usize, field: FieldSpec, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix::new(rows, cols, field, entries)
    }

    /// Builds a matrix from integer literals, row major.
    pub fn from_i64(rows: usize, cols: usize, field: FieldSpec, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix::new(rows, cols, field, entries.iter().map(|&n| field.from_i64(n)).collect())
    }

    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        Matrix::from_fn(n, n, field, |r, c| if r == c { field.one() } else { field.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows, self.field)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, self.field, |r, c| self.get(c, r).clone())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        Matrix::new(self.rows, self.cols, self.field, entries)
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        Matrix::new(self.rows, self.cols, self.field, entries)
    }

    pub fn neg(&self) -> Matrix {
        Matrix::new(self.rows, self.cols, self.field, self.entries.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, k: &Scalar) -> Matrix {
        Matrix::new(self.rows, self.cols, self.field, self.entries.iter().map(|a| a * k).collect())
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul: {}x{} * {}x{}", self.rows, self.cols, rhs.rows, rhs.cols);
        assert_eq!(self.field, rhs.field, "field mismatch in mul");
        let mut out = Matrix::zero(self.rows, rhs.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c) + &(a * b);
                    out.set(r, c, cur);
                }
            }
        }
        out
    }

    /// `(a (x) b)[(i*rows_b + k), (j*cols_b + l)] = a[i,j] * b[k,l]`.
    pub fn kronecker(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.field, rhs.field, "field mismatch in kronecker");
        Matrix::from_fn(self.rows * rhs.rows, self.cols * rhs.cols, self.field, |r, c| {
            let (i, k) = (r / rhs.rows, r % rhs.rows);
            let (j, l) = (c / rhs.cols, c % rhs.cols);
            self.get(i, j) * rhs.get(k, l)
        })
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        assert_eq!(self.field, other.field);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, self.field, entries)
    }

    /// Places `other` to the right of `self`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        assert_eq!(self.field, other.field);
        Matrix::from_fn(self.rows, self.cols + other.cols, self.field, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                other.get(r, c - self.cols).clone()
            }
        })
    }

    /// Unique reduced row echelon form with strictly increasing pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            let inv = m.get(pivot_row, col).inverse().expect("nonzero pivot");
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.row_sub_scaled(r, pivot_row, &factor);
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        let rank = pivots.len();
        Rref { reduced: m, pivots, rank }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Rows form a basis of `{v : self * v = 0}`, one per non-pivot
    /// column in increasing order, with that coordinate set to one.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { reduced, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zero(free.len(), self.cols, self.field);
        for (row, &f) in free.iter().enumerate() {
            out.set(row, f, self.field.one());
            for (prow, &pcol) in pivots.iter().enumerate() {
                out.set(row, pcol, -reduced.get(prow, f));
            }
        }
        out
    }

    /// One exact solution `X` of `self * X = rhs` with free variables set
    /// to zero, or `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        assert_eq!(self.field, rhs.field);
        let Rref { reduced, pivots, rank } = self.hstack(rhs).rref();
        // A pivot in the augmented block witnesses inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zero(self.cols, rhs.cols, self.field);
        for prow in 0..rank {
            let pcol = pivots[prow];
            for c in 0..rhs.cols {
                x.set(pcol, c, reduced.get(prow, self.cols + c).clone());
            }
        }
        Some(x)
    }

    /// Two-sided exact inverse, or `None` when not square or singular.
    pub fn invert(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let Rref { reduced, rank, .. } = self.hstack(&Matrix::identity(n, self.field)).rref();
        if rank < n || (0..n).any(|i| !reduced.get(i, i).is_one()) {
            return None;
        }
        Some(Matrix::from_fn(n, n, self.field, |r, c| reduced.get(r, n + c).clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * k;
            self.entries[r * self.cols + c] = v;
        }
    }

    /// `row[r] -= k * row[src]`
    fn row_sub_scaled(&mut self, r: usize, src: usize, k: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) - &(k * self.get(src, c));
            self.entries[r * self.cols + c] = v;
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Renders a column of `m` as `[a, b, ...]`, used in failure witnesses.
pub fn column_string(m: &Matrix, col: usize) -> String {
    let mut s = String::from("[");
    for r in 0..m.rows() {
        if r > 0 {
            s.push_str(", ");
        }
        s.push_str(&m.get(r, col).to_string());
    }
    s.push(']');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn rref_zero_matrix() {
        let r = Matrix::zero(2, 2, q()).rref();
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
        assert!(r.reduced.is_zero());
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(3, q());
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank, 3);
    }

    #[test]
    fn rref_rank_one_over_f2() {
        // Hand row reduction: subtract row 0 from row 1.
        let m = Matrix::from_i64(2, 2, f2(), &[1, 1, 1, 1]);
        let r = m.rref();
        assert_eq!(r.reduced, Matrix::from_i64(2, 2, f2(), &[1, 1, 0, 0]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_of_injective_map_is_empty() {
        let k = Matrix::identity(2, q()).kernel_basis();
        assert_eq!(k.rows(), 0);
        assert_eq!(k.cols(), 2);
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zero(1, 3, q()).kernel_basis();
        assert_eq!(k, Matrix::identity(3, q()));
    }

    #[test]
    fn kernel_over_f2_matches_enumeration() {
        let m = Matrix::from_i64(1, 2, f2(), &[1, 1]);
        let k = m.kernel_basis();
        assert_eq!(k, Matrix::from_i64(1, 2, f2(), &[1, 1]));
        // Oracle: all four vectors of F2^2.
        let mut annihilated = Vec::new();
        for a in 0..2i64 {
            for b in 0..2i64 {
                let v = Matrix::from_i64(2, 1, f2(), &[a, b]);
                if m.mul(&v).is_zero() && !(a == 0 && b == 0) {
                    annihilated.push((a, b));
                }
            }
        }
        assert_eq!(annihilated, vec![(1, 1)]);
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let rhs = Matrix::from_i64(2, 1, q(), &[3, 5]);
        assert_eq!(Matrix::identity(2, q()).solve(&rhs), Some(rhs.clone()));
        assert_eq!(Matrix::zero(2, 2, q()).solve(&rhs), None);
    }

    #[test]
    fn solve_scalar_division() {
        let m = Matrix::from_i64(1, 1, q(), &[2]);
        let rhs = Matrix::from_i64(1, 1, q(), &[1]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(x.get(0, 0), &q().parse("1/2").unwrap());
    }

    #[test]
    fn solve_underdetermined_zeroes_free_variables() {
        let m = Matrix::from_i64(1, 2, q(), &[1, 1]);
        let rhs = Matrix::from_i64(1, 1, q(), &[4]);
        let x = m.solve(&rhs).unwrap();
        assert_eq!(x, Matrix::from_i64(2, 1, q(), &[4, 0]));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(Matrix::identity(3, q()).invert(), Some(Matrix::identity(3, q())));
        let swap = Matrix::from_i64(2, 2, q(), &[0, 1, 1, 0]);
        assert_eq!(swap.invert(), Some(swap.clone()));
        assert_eq!(Matrix::zero(2, 3, q()).invert(), None);
        assert_eq!(Matrix::from_i64(2, 2, q(), &[1, 1, 1, 1]).invert(), None);
    }

    #[test]
    fn invert_two_sided() {
        let m = Matrix::from_i64(3, 3, FieldSpec::prime(5).unwrap(), &[1, 2, 0, 0, 1, 3, 4, 0, 2]);
        let inv = m.invert().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(inv.mul(&m).is_identity());
    }

    #[test]
    fn kronecker_defining_formula() {
        let a = Matrix::from_i64(2, 2, q(), &[1, 2, 3, 4]);
        let b = Matrix::from_i64(2, 2, q(), &[0, 1, 1, 0]);
        let k = a.kronecker(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(0, 1), &q().from_i64(1));
        assert_eq!(k.get(0, 3), &q().from_i64(2));
        assert_eq!(k.get(2, 1), &q().from_i64(3));
        // Full check against the formula.
        for i in 0..2 {
            for j in 0..2 {
                for s in 0..2 {
                    for t in 0..2 {
                        assert_eq!(
                            k.get(i * 2 + s, j * 2 + t),
                            &(a.get(i, j) * b.get(s, t))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kronecker_identities() {
        let a = Matrix::from_i64(2, 3, q(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(
            Matrix::identity(2, q()).kronecker(&Matrix::identity(3, q())),
            Matrix::identity(6, q())
        );
        assert_eq!(a.kronecker(&Matrix::identity(1, q())), a);
        assert_eq!(Matrix::identity(1, q()).kronecker(&a), a);
    }

    #[test]
    fn rank_nullity() {
        let m = Matrix::from_i64(3, 4, f2(), &[1, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 1]);
        assert_eq!(m.rank() + m.kernel_basis().rows(), m.cols());
        let k = m.kernel_basis();
        for r in 0..k.rows() {
            let v = Matrix::from_fn(m.cols(), 1, f2(), |i, _| k.get(r, i).clone());
            assert!(m.mul(&v).is_zero());
        }
    }
}
