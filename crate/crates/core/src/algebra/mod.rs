//! Finite-dimensional associative unital algebras over GF(p), given by
//! structure constants on a fixed basis.
//!
//! Convention: `b_i * b_j = sum_k c[i][j][k] b_k`. For path algebras the
//! product `p * q` means "first `q`, then `p`", so a left module is a
//! representation with each arrow acting from its source vertex space to its
//! target vertex space.

mod construct;
mod quiver;

use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

pub use construct::{Corner, MornAlgebra};
pub use quiver::{Arrow, QuiverPresentation, Relation, DEFAULT_DEGREE_BOUND};

use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Data of an indecomposable projective `Λe` embedded in `Λ`.
#[derive(Clone, Debug)]
pub(crate) struct ProjData {
    /// Columns: basis of `Λe` in algebra coordinates.
    pub basis: Mat,
    /// Left multiplication restricted to `Λe`, one matrix per algebra basis element.
    pub action: Vec<Mat>,
    /// Coordinates of `e` in `basis`.
    pub generator: Vec<u32>,
}

pub struct Algebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    consts: Vec<u32>,
    unit: Vec<u32>,
    idempotents: Vec<Vec<u32>>,
    vertex_labels: Vec<String>,
    radical: Option<Mat>,
    left: Vec<Mat>,
    right: Vec<Mat>,
    generators: OnceLock<Vec<Vec<u32>>>,
    opposite: OnceLock<Arc<Algebra>>,
    /// Set on algebras created by [`Algebra::opposite`], pointing back.
    back: OnceLock<Weak<Algebra>>,
    projectives: OnceLock<Vec<ProjData>>,
    homogeneous: OnceLock<Vec<(usize, usize, Vec<u32>)>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.modulus())
            .field("dim", &self.dim)
            .field("labels", &self.labels)
            .field("vertices", &self.vertex_labels)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field
                && self.dim == other.dim
                && self.consts == other.consts
                && self.unit == other.unit)
    }
}

impl Eq for Algebra {}

/// Builder input for [`Algebra::new`].
#[derive(Clone, Debug)]
pub struct AlgebraData {
    pub field: Field,
    pub labels: Vec<String>,
    /// Flattened `c[(i*dim + j)*dim + k]`.
    pub consts: Vec<u32>,
    pub unit: Vec<u32>,
    pub idempotents: Vec<Vec<u32>>,
    pub vertex_labels: Vec<String>,
    /// Radical basis vectors; `None` when unknown.
    pub radical: Option<Vec<Vec<u32>>>,
}

impl Algebra {
    /// Validates associativity, unit laws, idempotent relations and radical
    /// properties, then builds the algebra.
    pub fn new(data: AlgebraData) -> Result<Self> {
        let AlgebraData {
            field,
            labels,
            consts,
            unit,
            idempotents,
            vertex_labels,
            radical,
        } = data;
        let dim = labels.len();
        if consts.len() != dim * dim * dim {
            return Err(Error::input(format!(
                "expected {} structure constants, got {}",
                dim * dim * dim,
                consts.len()
            )));
        }
        if unit.len() != dim {
            return Err(Error::input("unit has wrong length"));
        }
        if idempotents.iter().any(|e| e.len() != dim) {
            return Err(Error::input("idempotent has wrong length"));
        }
        if vertex_labels.len() != idempotents.len() {
            return Err(Error::input("one vertex label per idempotent required"));
        }
        let radical = match radical {
            Some(vs) => {
                if vs.iter().any(|v| v.len() != dim) {
                    return Err(Error::input("radical vector has wrong length"));
                }
                Some(Mat::from_columns(field, dim, &vs).image_basis())
            }
            None => None,
        };
        let (left, right) = mult_tables(field, dim, &consts);
        let alg = Algebra {
            field,
            dim,
            labels,
            consts,
            unit,
            idempotents,
            vertex_labels,
            radical,
            left,
            right,
            generators: OnceLock::new(),
            opposite: OnceLock::new(),
            back: OnceLock::new(),
            projectives: OnceLock::new(),
            homogeneous: OnceLock::new(),
        };
        alg.validate()?;
        Ok(alg)
    }

    /// The zero algebra (dim 0) over `field`; flagged degenerate by callers.
    pub fn zero(field: Field) -> Self {
        Algebra::new(AlgebraData {
            field,
            labels: vec![],
            consts: vec![],
            unit: vec![],
            idempotents: vec![],
            vertex_labels: vec![],
            radical: Some(vec![]),
        })
        .expect("zero algebra is valid")
    }

    /// The ground field as a one-dimensional algebra.
    pub fn ground_field(field: Field) -> Self {
        Algebra::new(AlgebraData {
            field,
            labels: vec!["1".into()],
            consts: vec![1],
            unit: vec![1],
            idempotents: vec![vec![1]],
            vertex_labels: vec!["1".into()],
            radical: Some(vec![]),
        })
        .expect("ground field is valid")
    }

    fn validate(&self) -> Result<()> {
        let f = self.field;
        let n = self.dim;
        // associativity on basis triples: (b_i b_j) b_l = b_i (b_j b_l)
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_product(i, j);
                for l in 0..n {
                    let lhs = self.right[l].mul_vec(&ij);
                    let jl = self.basis_product(j, l);
                    let rhs = self.left[i].mul_vec(&jl);
                    if lhs != rhs {
                        return Err(Error::input(format!(
                            "associativity fails on ({}, {}, {})",
                            self.labels[i], self.labels[j], self.labels[l]
                        )));
                    }
                }
            }
        }
        for i in 0..n {
            let e = unit_vec(n, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::input(format!(
                    "unit law fails on {}",
                    self.labels[i]
                )));
            }
        }
        if !self.idempotents.is_empty() {
            let mut sum = vec![0u32; n];
            for (a, ea) in self.idempotents.iter().enumerate() {
                for (b, eb) in self.idempotents.iter().enumerate() {
                    let prod = self.mul(ea, eb);
                    let expected = if a == b { ea.clone() } else { vec![0; n] };
                    if prod != expected {
                        return Err(Error::input(format!(
                            "idempotents {} and {} are not orthogonal idempotents",
                            self.vertex_labels[a], self.vertex_labels[b]
                        )));
                    }
                }
                for (s, &v) in sum.iter_mut().zip(ea) {
                    *s = f.add(*s, v);
                }
            }
            if sum != self.unit {
                return Err(Error::input("idempotents do not sum to the unit"));
            }
        }
        if let Some(rad) = &self.radical {
            self.validate_radical(rad)?;
        }
        Ok(())
    }

    fn validate_radical(&self, rad: &Mat) -> Result<()> {
        let n = self.dim;
        let r = rad.cols();
        let rank = rad.rank();
        // two-sided ideal
        for i in 0..n {
            let images = Mat::hstack(self.field, n, &[rad, &self.left[i].mul(rad)])?;
            let images2 = Mat::hstack(self.field, n, &[rad, &self.right[i].mul(rad)])?;
            if images.rank() != rank || images2.rank() != rank {
                return Err(Error::input("radical is not a two-sided ideal"));
            }
        }
        // nilpotent: iterate span(rad^k) until zero
        let mut power = rad.clone();
        let mut steps = 0;
        while power.cols() > 0 {
            steps += 1;
            if steps > n + 1 {
                return Err(Error::input("radical is not nilpotent"));
            }
            let mut cols = Vec::new();
            for a in 0..power.cols() {
                let x = power.col(a);
                for b in 0..r {
                    cols.push(self.mul(&x, &rad.col(b)));
                }
            }
            power = Mat::from_columns(self.field, n, &cols).image_basis();
        }
        // semisimple quotient: off-diagonal corners inside the radical and
        // diagonal corners division algebras
        if !self.idempotents.is_empty() {
            for (a, ea) in self.idempotents.iter().enumerate() {
                for (b, eb) in self.idempotents.iter().enumerate() {
                    let corner = self.corner_span(ea, eb);
                    let with = Mat::hstack(self.field, n, &[rad, &corner])?;
                    let extra = with.rank() - rank;
                    if a != b && extra > 0 {
                        return Err(Error::Unsupported(format!(
                            "e_{} Λ e_{} is not contained in the radical (algebra not basic)",
                            self.vertex_labels[a], self.vertex_labels[b]
                        )));
                    }
                    if a == b && extra == 0 {
                        return Err(Error::input(format!(
                            "idempotent {} lies in the radical",
                            self.vertex_labels[a]
                        )));
                    }
                    if a == b && extra > 1 {
                        self.check_division_corner(ea, rad)?;
                    }
                }
            }
        }
        Ok(())
    }

    /// Exhaustively checks that `eΛe / e rad e` has no zero divisors.
    fn check_division_corner(&self, e: &[u32], rad: &Mat) -> Result<()> {
        let n = self.dim;
        let corner = self.corner_span(e, e);
        let rad_corner = {
            let cols: Vec<Vec<u32>> = (0..rad.cols())
                .map(|c| self.mul(&self.mul(e, &rad.col(c)), e))
                .collect();
            Mat::from_columns(self.field, n, &cols).image_basis()
        };
        let base_rank = rad_corner.rank();
        let p = self.field.modulus() as u64;
        let k = corner.cols() as u32;
        let count = p.checked_pow(k).unwrap_or(u64::MAX);
        if count > 1 << 14 {
            return Err(Error::Unsupported(
                "semisimplicity check of a large local corner".into(),
            ));
        }
        let in_rad = |v: &[u32]| {
            let m = Mat::hstack(self.field, n, &[&rad_corner, &Mat::column(self.field, v)])
                .expect("same rows");
            m.rank() == base_rank
        };
        for code in 1..count {
            let mut c = code;
            let mut x = vec![0u32; n];
            for j in 0..corner.cols() {
                let coeff = (c % p) as u32;
                c /= p;
                for (xi, cv) in x.iter_mut().zip(corner.col(j)) {
                    *xi = self.field.add(*xi, self.field.mul(coeff, cv));
                }
            }
            if in_rad(&x) {
                continue;
            }
            for code2 in 1..count {
                let mut c2 = code2;
                let mut y = vec![0u32; n];
                for j in 0..corner.cols() {
                    let coeff = (c2 % p) as u32;
                    c2 /= p;
                    for (yi, cv) in y.iter_mut().zip(corner.col(j)) {
                        *yi = self.field.add(*yi, self.field.mul(coeff, cv));
                    }
                }
                if !in_rad(&y) && in_rad(&self.mul(&x, &y)) {
                    return Err(Error::input(
                        "radical too small: quotient has zero divisors",
                    ));
                }
            }
        }
        Ok(())
    }

    /// Column span of `e_a Λ e_b`.
    fn corner_span(&self, ea: &[u32], eb: &[u32]) -> Mat {
        let cols: Vec<Vec<u32>> = (0..self.dim)
            .map(|i| self.mul(&self.mul(ea, &unit_vec(self.dim, i)), eb))
            .collect();
        Mat::from_columns(self.field, self.dim, &cols).image_basis()
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    /// Complete list of primitive orthogonal idempotents (may be empty for
    /// structure-constant input without idempotent data).
    pub fn idempotents(&self) -> &[Vec<u32>] {
        &self.idempotents
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertex_labels
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertex_labels.iter().position(|l| l == label)
    }

    pub fn num_vertices(&self) -> usize {
        self.idempotents.len()
    }

    /// Radical basis (columns), if known.
    pub fn radical(&self) -> Option<&Mat> {
        self.radical.as_ref()
    }

    pub fn require_radical(&self) -> Result<&Mat> {
        if self.idempotents.is_empty() && self.dim > 0 {
            return Err(Error::Unsupported(
                "algebra has no primitive idempotent data".into(),
            ));
        }
        self.radical
            .as_ref()
            .ok_or_else(|| Error::Unsupported("algebra has no radical data".into()))
    }

    #[inline]
    pub fn constant(&self, i: usize, j: usize, k: usize) -> u32 {
        self.consts[(i * self.dim + j) * self.dim + k]
    }

    pub fn constants(&self) -> &[u32] {
        &self.consts
    }

    /// Left multiplication by basis element `i`.
    pub fn left_mult(&self, i: usize) -> &Mat {
        &self.left[i]
    }

    /// Right multiplication by basis element `i`.
    pub fn right_mult(&self, i: usize) -> &Mat {
        &self.right[i]
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &[u32]) -> Mat {
        self.combine(&self.left, x)
    }

    pub fn right_mult_by(&self, x: &[u32]) -> Mat {
        self.combine(&self.right, x)
    }

    fn combine(&self, mats: &[Mat], x: &[u32]) -> Mat {
        let mut out = Mat::zeros(self.field, self.dim, self.dim);
        for (m, &c) in mats.iter().zip(x) {
            out.add_scaled(m, c);
        }
        out
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<u32> {
        let start = (i * self.dim + j) * self.dim;
        self.consts[start..start + self.dim].to_vec()
    }

    /// Product of two elements given in coordinates.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0u32; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let s = f.mul(xi, yj);
                let start = (i * self.dim + j) * self.dim;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.consts[start + k];
                    if c != 0 {
                        *o = f.add(*o, f.mul(s, c));
                    }
                }
            }
        }
        out
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        unit_vec(self.dim, i)
    }

    /// Idempotents used to split Hom systems into blocks; falls back to the unit.
    pub(crate) fn block_idempotents(&self) -> Vec<Vec<u32>> {
        if self.idempotents.is_empty() {
            if self.dim == 0 {
                vec![]
            } else {
                vec![self.unit.clone()]
            }
        } else {
            self.idempotents.clone()
        }
    }

    /// A generating set of the algebra (with the unit): the idempotents
    /// followed by greedily chosen radical and basis elements.
    pub fn generators(&self) -> &[Vec<u32>] {
        self.generators.get_or_init(|| self.compute_generators())
    }

    fn compute_generators(&self) -> Vec<Vec<u32>> {
        let n = self.dim;
        if n == 0 {
            return vec![];
        }
        let mut gens: Vec<Vec<u32>> = self.idempotents.clone();
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        if let Some(rad) = &self.radical {
            candidates.extend((0..rad.cols()).map(|c| rad.col(c)));
        }
        candidates.extend((0..n).map(|i| unit_vec(n, i)));
        let mut span = self.closure(&gens);
        for c in candidates {
            if span.cols() == n {
                break;
            }
            let test = Mat::hstack(self.field, n, &[&span, &Mat::column(self.field, &c)])
                .expect("same rows");
            if test.rank() == span.cols() {
                continue;
            }
            gens.push(c);
            span = self.closure(&gens);
        }
        gens
    }

    /// Basis (columns) of the unital subalgebra generated by `gens`.
    fn closure(&self, gens: &[Vec<u32>]) -> Mat {
        let n = self.dim;
        let mut cols = vec![self.unit.clone()];
        cols.extend(gens.iter().cloned());
        let mut span = Mat::from_columns(self.field, n, &cols).image_basis();
        loop {
            let mut all: Vec<Vec<u32>> = (0..span.cols()).map(|c| span.col(c)).collect();
            for c in 0..span.cols() {
                let x = span.col(c);
                for g in gens {
                    all.push(self.mul(&x, g));
                }
            }
            let next = Mat::from_columns(self.field, n, &all).image_basis();
            if next.cols() == span.cols() {
                return span;
            }
            span = next;
        }
    }

    /// The opposite algebra, cached. Taking the opposite twice returns the
    /// original `Arc` as long as it is alive.
    pub fn opposite(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.back.get().and_then(Weak::upgrade) {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let op = construct::opposite(self);
                let _ = op.back.set(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    /// Non-idempotent generators cut by the block idempotents:
    /// `(w, v, e_w g e_v)` for every nonzero piece.
    pub(crate) fn homogeneous_generators(&self) -> &[(usize, usize, Vec<u32>)] {
        self.homogeneous.get_or_init(|| {
            let blocks = self.block_idempotents();
            let skip = self.idempotents.len();
            let mut out: Vec<(usize, usize, Vec<u32>)> = Vec::new();
            for g in self.generators().iter().skip(skip) {
                for (w, ew) in blocks.iter().enumerate() {
                    let left = self.mul(ew, g);
                    for (v, ev) in blocks.iter().enumerate() {
                        let piece = self.mul(&left, ev);
                        if piece.iter().any(|&c| c != 0)
                            && !out.iter().any(|(a, b, x)| *a == w && *b == v && *x == piece)
                        {
                            out.push((w, v, piece));
                        }
                    }
                }
            }
            out
        })
    }

    pub(crate) fn projective_data(&self) -> &[ProjData] {
        self.projectives.get_or_init(|| {
            self.idempotents
                .iter()
                .map(|e| {
                    let basis = self.right_mult_by(e).image_basis();
                    let linv = basis.left_inverse().expect("independent columns");
                    let action = self.left.iter().map(|l| linv.mul(&l.mul(&basis))).collect();
                    let generator = linv.mul_vec(e);
                    ProjData {
                        basis,
                        action,
                        generator,
                    }
                })
                .collect()
        })
    }

    /// Returns a copy with new basis and vertex labels.
    pub fn relabeled(&self, labels: Vec<String>, vertex_labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim || vertex_labels.len() != self.idempotents.len() {
            return Err(Error::input("relabeling with wrong number of labels"));
        }
        Algebra::new(AlgebraData {
            field: self.field,
            labels,
            consts: self.consts.clone(),
            unit: self.unit.clone(),
            idempotents: self.idempotents.clone(),
            vertex_labels,
            radical: self.radical_vectors(),
        })
    }

    pub(crate) fn radical_vectors(&self) -> Option<Vec<Vec<u32>>> {
        self.radical
            .as_ref()
            .map(|r| (0..r.cols()).map(|c| r.col(c)).collect())
    }

    /// Reorders the idempotent list (and vertex labels) by `perm`.
    pub fn with_vertex_order(&self, perm: &[usize]) -> Result<Algebra> {
        if perm.len() != self.idempotents.len() {
            return Err(Error::input("vertex permutation has wrong length"));
        }
        Algebra::new(AlgebraData {
            field: self.field,
            labels: self.labels.clone(),
            consts: self.consts.clone(),
            unit: self.unit.clone(),
            idempotents: perm.iter().map(|&i| self.idempotents[i].clone()).collect(),
            vertex_labels: perm.iter().map(|&i| self.vertex_labels[i].clone()).collect(),
            radical: self.radical_vectors(),
        })
    }

    /// Sum of the idempotents with the given vertex labels.
    pub fn idempotent_sum(&self, vertices: &[&str]) -> Result<Vec<u32>> {
        let mut e = vec![0u32; self.dim];
        for v in vertices {
            let i = self
                .vertex_index(v)
                .ok_or_else(|| Error::input(format!("unknown vertex {v}")))?;
            for (a, &b) in e.iter_mut().zip(&self.idempotents[i]) {
                *a = self.field.add(*a, b);
            }
        }
        Ok(e)
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        e.len() == self.dim && self.mul(e, e) == e
    }
}

fn mult_tables(field: Field, dim: usize, consts: &[u32]) -> (Vec<Mat>, Vec<Mat>) {
    let mut left = vec![Mat::zeros(field, dim, dim); dim];
    let mut right = vec![Mat::zeros(field, dim, dim); dim];
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                let c = consts[(i * dim + j) * dim + k];
                if c != 0 {
                    left[i].set(k, j, c);
                    right[j].set(k, i, c);
                }
            }
        }
    }
    (left, right)
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

/// A linear map between algebras, checked to be unital and multiplicative.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub source: Arc<Algebra>,
    pub target: Arc<Algebra>,
    /// `target.dim x source.dim`.
    pub matrix: Mat,
}

impl AlgebraMap {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, matrix: Mat) -> Result<Self> {
        let map = AlgebraMap {
            source,
            target,
            matrix,
        };
        map.verify()?;
        Ok(map)
    }

    pub fn identity(alg: Arc<Algebra>) -> Self {
        let matrix = Mat::identity(alg.field(), alg.dim());
        AlgebraMap {
            source: alg.clone(),
            target: alg,
            matrix,
        }
    }

    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(x)
    }

    pub fn verify(&self) -> Result<()> {
        let (s, t) = (&self.source, &self.target);
        if self.matrix.rows() != t.dim() || self.matrix.cols() != s.dim() {
            return Err(Error::input("algebra map has wrong shape"));
        }
        if self.apply(s.unit()) != t.unit() {
            return Err(Error::input("algebra map is not unital"));
        }
        for i in 0..s.dim() {
            let fi = self.matrix.col(i);
            for j in 0..s.dim() {
                let lhs = self.apply(&s.mul(&s.basis_vector(i), &s.basis_vector(j)));
                let rhs = t.mul(&fi, &self.matrix.col(j));
                if lhs != rhs {
                    return Err(Error::input(format!(
                        "algebra map is not multiplicative on ({}, {})",
                        s.labels()[i],
                        s.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// An `A`-`B`-bimodule: left `A`-action and right `B`-action matrices.
///
/// The right action matrix `ρ(b)` sends coordinates of `m` to those of `m·b`,
/// so `ρ(b b') = ρ(b') ρ(b)`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub left_alg: Arc<Algebra>,
    pub right_alg: Arc<Algebra>,
    pub dim: usize,
    pub left: Vec<Mat>,
    pub right: Vec<Mat>,
}

impl Bimodule {
    pub fn new(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        dim: usize,
        left: Vec<Mat>,
        right: Vec<Mat>,
    ) -> Result<Self> {
        let m = Bimodule {
            left_alg,
            right_alg,
            dim,
            left,
            right,
        };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        let f = self.left_alg.field();
        if self.left.len() != self.left_alg.dim() || self.right.len() != self.right_alg.dim() {
            return Err(Error::input("bimodule needs one matrix per basis element"));
        }
        if self
            .left
            .iter()
            .chain(&self.right)
            .any(|m| m.rows() != self.dim || m.cols() != self.dim)
        {
            return Err(Error::input("bimodule action matrix has wrong shape"));
        }
        let id = Mat::identity(f, self.dim);
        let comb = |mats: &[Mat], x: &[u32]| {
            let mut out = Mat::zeros(f, self.dim, self.dim);
            for (m, &c) in mats.iter().zip(x) {
                out.add_scaled(m, c);
            }
            out
        };
        if self.dim > 0 {
            if comb(&self.left, self.left_alg.unit()) != id {
                return Err(Error::input("left unit does not act as identity"));
            }
            if comb(&self.right, self.right_alg.unit()) != id {
                return Err(Error::input("right unit does not act as identity"));
            }
        }
        let a = &self.left_alg;
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let prod = comb(&self.left, &a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                if self.left[i].mul(&self.left[j]) != prod {
                    return Err(Error::input("left action is not multiplicative"));
                }
            }
        }
        let b = &self.right_alg;
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let prod = comb(&self.right, &b.mul(&b.basis_vector(i), &b.basis_vector(j)));
                if self.right[j].mul(&self.right[i]) != prod {
                    return Err(Error::input("right action is not multiplicative"));
                }
            }
        }
        for l in &self.left {
            for r in &self.right {
                if l.mul(r) != r.mul(l) {
                    return Err(Error::input("left and right actions do not commute"));
                }
            }
        }
        Ok(())
    }

    /// `A` as an `A`-`A`-bimodule.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let left = (0..alg.dim()).map(|i| alg.left_mult(i).clone()).collect();
        let right = (0..alg.dim()).map(|i| alg.right_mult(i).clone()).collect();
        Bimodule {
            dim: alg.dim(),
            left_alg: alg.clone(),
            right_alg: alg,
            left,
            right,
        }
    }

    pub fn zero(left_alg: Arc<Algebra>, right_alg: Arc<Algebra>) -> Self {
        let f = left_alg.field();
        Bimodule {
            dim: 0,
            left: vec![Mat::zeros(f, 0, 0); left_alg.dim()],
            right: vec![Mat::zeros(f, 0, 0); right_alg.dim()],
            left_alg,
            right_alg,
        }
    }

    /// A subspace `U` (columns, in `host` coordinates) of an algebra `host`
    /// closed under left multiplication by `lmap(left_alg)` and right
    /// multiplication by `rmap(right_alg)`.
    pub fn from_subspace(
        host: &Algebra,
        basis: &Mat,
        left: &AlgebraMapLike,
        right: &AlgebraMapLike,
    ) -> Result<Self> {
        let linv = basis
            .left_inverse()
            .ok_or_else(|| Error::internal("subspace basis is not independent"))?;
        let restrict = |m: Mat| -> Result<Mat> {
            let img = m.mul(basis);
            let back = linv.mul(&img);
            if basis.mul(&back) != img {
                return Err(Error::internal("subspace is not closed under the action"));
            }
            Ok(back)
        };
        let lm = (0..left.alg.dim())
            .map(|i| restrict(host.left_mult_by(&left.matrix.col(i))))
            .collect::<Result<Vec<_>>>()?;
        let rm = (0..right.alg.dim())
            .map(|i| restrict(host.right_mult_by(&right.matrix.col(i))))
            .collect::<Result<Vec<_>>>()?;
        Bimodule::new(left.alg.clone(), right.alg.clone(), basis.cols(), lm, rm)
    }

    pub fn left_action_by(&self, x: &[u32]) -> Mat {
        let mut out = Mat::zeros(self.left_alg.field(), self.dim, self.dim);
        for (m, &c) in self.left.iter().zip(x) {
            out.add_scaled(m, c);
        }
        out
    }

    pub fn right_action_by(&self, x: &[u32]) -> Mat {
        let mut out = Mat::zeros(self.left_alg.field(), self.dim, self.dim);
        for (m, &c) in self.right.iter().zip(x) {
            out.add_scaled(m, c);
        }
        out
    }
}

/// A (not necessarily unital) linear map from an algebra into a host algebra,
/// used to describe how an algebra acts on a subspace of the host.
#[derive(Clone, Debug)]
pub struct AlgebraMapLike {
    pub alg: Arc<Algebra>,
    /// `host.dim x alg.dim`.
    pub matrix: Mat,
}
