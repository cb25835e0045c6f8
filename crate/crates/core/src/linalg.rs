//! Dense exact linear algebra over prime fields GF(p).
//!
//! Every structural question in the crate (Hom spaces, kernels, Ext ranks,
//! isomorphism tests) is eventually reduced to row reduction of a [`Mat`].
//! Pivoting always selects the first nonzero entry in a column, so bases
//! produced here are reproducible across runs and platforms.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime field GF(p), carried by value next to every matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Field {
    p: u32,
}

impl Field {
    /// Builds GF(p); fails unless `p` is prime and fits the 31-bit limit.
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::input(format!("characteristic {p} is non-prime")));
        }
        if p >= 1 << 31 {
            return Err(Error::input(format!("characteristic {p} exceeds 2^31")));
        }
        Ok(Field { p })
    }

    #[inline]
    pub fn modulus(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        // Fermat: a^(p-2)
        let mut base = a as u64 % self.p as u64;
        let mut exp = self.p as u64 - 2;
        let m = self.p as u64;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            exp >>= 1;
        }
        acc as u32
    }

    pub fn scalar(self, v: i64) -> Scalar {
        Scalar {
            value: self.reduce(v),
            field: self,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue class in GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub value: u32,
    pub field: Field,
}

impl std::ops::Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        Scalar {
            value: self.field.add(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        assert_eq!(self.field, rhs.field, "modulus mismatch");
        Scalar {
            value: self.field.mul(self.value, rhs.value),
            field: self.field,
        }
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
        }
        write!(f, "] mod {}", self.field.p)
    }
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod p.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::input("ragged matrix rows"));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| field.reduce(v)))
            .collect();
        Ok(Mat {
            rows: r,
            cols: c,
            field,
            data,
        })
    }

    /// Builds from already-reduced row-major data.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows*cols");
        debug_assert!(data.iter().all(|&v| v < field.p));
        Mat {
            rows,
            cols,
            field,
            data,
        }
    }

    /// A single column vector.
    pub fn column(field: Field, v: &[u32]) -> Self {
        Mat::from_vec(field, v.len(), 1, v.to_vec())
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<u32>]) -> Self {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, col) in cols.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows)
            .map(|r| self.data[r * self.cols..(r + 1) * self.cols].to_vec())
            .collect()
    }

    pub fn col(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    fn check_same_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::input("modulus mismatch between matrices"));
        }
        Ok(())
    }

    /// Matrix product; panics on shape mismatch (an internal invariant).
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(
            self.cols, other.rows,
            "shape mismatch in product: {}x{} * {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        assert_eq!(self.field, other.field, "modulus mismatch");
        let p = self.field.p as u64;
        let n = other.cols;
        let mut acc = vec![0u64; n];
        let mut out = Mat::zeros(self.field, self.rows, n);
        for r in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[r * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (c, &v) in acc.iter().enumerate() {
                out.data[r * n + c] = v as u32;
            }
        }
        out
    }

    pub fn try_mul(&self, other: &Mat) -> Result<Mat> {
        self.check_same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Mat::from_vec(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Mat::from_vec(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, s: u32) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        Mat::from_vec(f, self.rows, self.cols, data)
    }

    pub fn neg(&self) -> Mat {
        self.scale(self.field.neg(1))
    }

    /// `self += s * other`, in place.
    pub fn add_scaled(&mut self, other: &Mat, s: u32) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(b, s));
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|r| {
                let row = &self.data[r * self.cols..(r + 1) * self.cols];
                row.iter()
                    .zip(v)
                    .fold(0u64, |acc, (&a, &b)| (acc + a as u64 * b as u64) % p) as u32
            })
            .collect()
    }

    /// Horizontal concatenation `[a | b | ...]`.
    pub fn hstack(field: Field, rows: usize, blocks: &[&Mat]) -> Result<Mat> {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            if b.rows != rows {
                return Err(Error::DimensionMismatch(format!(
                    "hstack: block has {} rows, expected {rows}",
                    b.rows
                )));
            }
            if b.field != field {
                return Err(Error::input("modulus mismatch between matrices"));
            }
            for r in 0..rows {
                out.data[r * cols + off..r * cols + off + b.cols]
                    .copy_from_slice(&b.data[r * b.cols..(r + 1) * b.cols]);
            }
            off += b.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(field: Field, cols: usize, blocks: &[&Mat]) -> Result<Mat> {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(Error::DimensionMismatch(format!(
                    "vstack: block has {} cols, expected {cols}",
                    b.cols
                )));
            }
            if b.field != field {
                return Err(Error::input("modulus mismatch between matrices"));
            }
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Ok(Mat::from_vec(field, rows, cols, data))
    }

    /// Block diagonal matrix.
    pub fn block_diag(field: Field, blocks: &[&Mat]) -> Mat {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols);
        for r in 0..b.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(&b.data[r * b.cols..(r + 1) * b.cols]);
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols);
        let mut out = Mat::zeros(self.field, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            out.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + j] = self.data[r * self.cols + c];
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(&self.data[r * self.cols..(r + 1) * self.cols]);
        }
        Mat::from_vec(self.field, idx.len(), self.cols, data)
    }

    /// Kronecker product: shape `(a.rows*b.rows) x (a.cols*b.cols)`.
    pub fn kron(a: &Mat, b: &Mat) -> Mat {
        assert_eq!(a.field, b.field, "modulus mismatch");
        let f = a.field;
        let rows = a.rows * b.rows;
        let cols = a.cols * b.cols;
        let mut out = Mat::zeros(f, rows, cols);
        for ar in 0..a.rows {
            for ac in 0..a.cols {
                let s = a.get(ar, ac);
                if s == 0 {
                    continue;
                }
                for br in 0..b.rows {
                    for bc in 0..b.cols {
                        out.data[(ar * b.rows + br) * cols + ac * b.cols + bc] =
                            f.mul(s, b.get(br, bc));
                    }
                }
            }
        }
        out
    }

    /// Column-major vectorisation as a single column.
    pub fn vec_col(&self) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.rows * self.cols);
        for c in 0..self.cols {
            for r in 0..self.rows {
                v.push(self.get(r, c));
            }
        }
        v
    }

    /// Inverse of [`Mat::vec_col`].
    pub fn unvec_col(field: Field, rows: usize, cols: usize, v: &[u32]) -> Mat {
        assert_eq!(v.len(), rows * cols);
        let mut m = Mat::zeros(field, rows, cols);
        for c in 0..cols {
            for r in 0..rows {
                m.data[r * cols + c] = v[c * rows + r];
            }
        }
        m
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref_in_place(&mut self, col_limit: usize) -> Vec<usize> {
        let f = self.field;
        let p = f.p as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for c in 0..col_limit {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if pr != row {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, row * cols + k);
                }
            }
            let inv = f.inv(self.data[row * cols + c]) as u64;
            if inv != 1 {
                for k in c..cols {
                    let v = &mut self.data[row * cols + k];
                    *v = (*v as u64 * inv % p) as u32;
                }
            }
            let (before, rest) = self.data.split_at_mut(row * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let eliminate = |target: &mut [u32]| {
                let factor = target[c];
                if factor == 0 {
                    return;
                }
                let factor = (p - factor as u64) % p;
                for k in c..cols {
                    let pv = pivot_row[k];
                    if pv != 0 {
                        target[k] = ((target[k] as u64 + factor * pv as u64) % p) as u32;
                    }
                }
            };
            for chunk in before.chunks_mut(cols) {
                eliminate(chunk);
            }
            for chunk in after.chunks_mut(cols) {
                eliminate(chunk);
            }
            pivots.push(c);
            row += 1;
        }
        pivots
    }

    /// Reduced row echelon form and strictly increasing pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place(m.cols);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // Reduce whichever orientation is smaller in rows to save work.
        if self.rows > self.cols {
            self.transpose().rref().1.len()
        } else {
            self.rref().1.len()
        }
    }

    /// Basis of the right null space, one vector per column.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut k = Mat::zeros(self.field, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                let v = r.get(row, fc);
                if v != 0 {
                    k.set(pc, j, self.field.neg(v));
                }
            }
        }
        k
    }

    /// Columns of `self` at its pivot positions: a basis of the column space.
    pub fn image_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// Some `x` with `self * x = b`, free variables set to zero, or `None`.
    pub fn solve(&self, b: &Mat) -> Result<Option<Mat>> {
        self.check_same_field(b)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve: lhs has {} rows, rhs has {}",
                self.rows, b.rows
            )));
        }
        let n = self.cols;
        let mut aug = Mat::hstack(self.field, self.rows, &[self, b])?;
        let pivots = aug.rref_in_place(n);
        let rank = pivots.len();
        // Inconsistent iff some row below the rank has a nonzero rhs entry.
        for r in rank..aug.rows {
            if (n..aug.cols).any(|c| aug.get(r, c) != 0) {
                return Ok(None);
            }
        }
        let mut x = Mat::zeros(self.field, n, b.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, aug.get(row, n + c));
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let id = Mat::identity(self.field, n);
        let mut aug = Mat::hstack(self.field, n, &[self, &id]).ok()?;
        let pivots = aug.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Left inverse `L` (with `L * self = I`) of a full column rank matrix.
    pub fn left_inverse(&self) -> Option<Mat> {
        let (_, pivots) = self.transpose().rref();
        if pivots.len() != self.cols {
            return None;
        }
        let square = self.select_rows(&pivots);
        let inv = square.inverse()?;
        let mut l = Mat::zeros(self.field, self.cols, self.rows);
        for (j, &r) in pivots.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, r, inv.get(i, j));
            }
        }
        Some(l)
    }

    /// A right inverse of a matrix with independent rows.
    pub fn right_inverse(&self) -> Option<Mat> {
        self.transpose().left_inverse().map(|m| m.transpose())
    }

    /// Standard basis vectors completing the column space of `self` (assumed
    /// to have independent columns) to the whole space: the coordinates that
    /// are not pivots of the transposed echelon form.
    pub fn complement_basis(&self) -> Mat {
        let (_, pivots) = self.transpose().rref();
        let mut is_pivot = vec![false; self.rows];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.rows).filter(|&r| !is_pivot[r]).collect();
        let mut m = Mat::zeros(self.field, self.rows, free.len());
        for (j, &r) in free.iter().enumerate() {
            m.set(r, j, 1);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn rejects_non_prime_modulus() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(7).is_ok());
    }

    #[test]
    fn rref_empty() {
        let m = Mat::zeros(gf(2), 0, 0);
        let (r, piv) = m.rref();
        assert_eq!(r.rows(), 0);
        assert!(piv.is_empty());
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Mat::identity(gf(2), 3);
        let (r, piv) = id.rref();
        assert_eq!(r, id);
        assert_eq!(piv, vec![0, 1, 2]);
    }

    #[test]
    fn rref_all_ones_gf2() {
        let m = Mat::from_rows(gf(2), &[vec![1, 1], vec![1, 1]]).unwrap();
        let (r, piv) = m.rref();
        assert_eq!(r, Mat::from_rows(gf(2), &[vec![1, 1], vec![0, 0]]).unwrap());
        assert_eq!(piv, vec![0]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Mat::identity(gf(3), 4).kernel_basis().cols(), 0);
        assert_eq!(Mat::zeros(gf(3), 2, 3).kernel_basis().cols(), 3);
        let k = Mat::from_rows(gf(2), &[vec![1, 1]]).unwrap().kernel_basis();
        assert_eq!(k, Mat::from_rows(gf(2), &[vec![1], vec![1]]).unwrap());
    }

    #[test]
    fn solve_examples() {
        let f = gf(5);
        let b = Mat::from_rows(f, &[vec![3], vec![4]]).unwrap();
        assert_eq!(Mat::identity(f, 2).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Mat::zeros(f, 2, 2).solve(&b).unwrap(), None);
        let a = Mat::from_rows(gf(2), &[vec![1, 1]]).unwrap();
        let z = Mat::from_rows(gf(2), &[vec![0]]).unwrap();
        assert_eq!(
            a.solve(&z).unwrap(),
            Some(Mat::from_rows(gf(2), &[vec![0], vec![0]]).unwrap())
        );
        assert!(Mat::identity(f, 3).solve(&b).is_err());
    }

    #[test]
    fn kron_of_identities() {
        let f = gf(3);
        let k = Mat::kron(&Mat::identity(f, 2), &Mat::identity(f, 3));
        assert_eq!(k, Mat::identity(f, 6));
        let a = Mat::from_rows(f, &[vec![1, 2, 0]]).unwrap();
        let b = Mat::from_rows(f, &[vec![1], vec![2]]).unwrap();
        let k = Mat::kron(&a, &b);
        assert_eq!((k.rows(), k.cols()), (2, 3));
    }

    #[test]
    fn stacking_shape_errors() {
        let f = gf(2);
        let a = Mat::zeros(f, 2, 2);
        let b = Mat::zeros(f, 3, 2);
        assert!(Mat::hstack(f, 2, &[&a, &b]).is_err());
        assert!(Mat::vstack(f, 2, &[&a, &b]).is_ok());
        assert!(Mat::vstack(f, 2, &[&a, &Mat::zeros(f, 1, 3)]).is_err());
    }

    #[test]
    fn inverse_and_left_inverse() {
        let f = gf(7);
        let m = Mat::from_rows(f, &[vec![2, 1], vec![1, 1]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(f, 2));
        let tall = Mat::from_rows(f, &[vec![0, 1], vec![1, 0], vec![3, 3]]).unwrap();
        let l = tall.left_inverse().unwrap();
        assert_eq!(l.mul(&tall), Mat::identity(f, 2));
    }

    #[test]
    fn complement_spans_with_image() {
        let f = gf(2);
        let m = Mat::from_rows(f, &[vec![1], vec![1], vec![0]]).unwrap();
        let c = m.complement_basis();
        assert_eq!(c.cols(), 2);
        let both = Mat::hstack(f, 3, &[&m, &c]).unwrap();
        assert!(both.is_invertible());
    }

    #[test]
    fn vec_roundtrip() {
        let f = gf(5);
        let m = Mat::from_rows(f, &[vec![1, 2, 3], vec![4, 0, 1]]).unwrap();
        assert_eq!(Mat::unvec_col(f, 2, 3, &m.vec_col()), m);
    }
}
