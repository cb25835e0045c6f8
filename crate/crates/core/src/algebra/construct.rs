//! Derived algebras: opposite, corners, quotients, triangular matrix rings.

use std::sync::Arc;

use super::{unit_vec, Algebra, AlgebraData, AlgebraMap, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::Mat;

pub(super) fn opposite(a: &Algebra) -> Algebra {
    let n = a.dim();
    let mut consts = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                consts[(i * n + j) * n + k] = a.constant(j, i, k);
            }
        }
    }
    Algebra::new(AlgebraData {
        field: a.field(),
        labels: a.labels().to_vec(),
        consts,
        unit: a.unit().to_vec(),
        idempotents: a.idempotents().to_vec(),
        vertex_labels: a.vertex_labels().to_vec(),
        radical: a.radical_vectors(),
    })
    .expect("opposite of a valid algebra is valid")
}

/// The corner algebra `eΛe` with its embedding into `Λ`.
#[derive(Clone, Debug)]
pub struct Corner {
    pub algebra: Arc<Algebra>,
    /// `Λ.dim x corner.dim`: corner coordinates to algebra coordinates.
    pub embedding: Mat,
    /// Left inverse of `embedding` (algebra coordinates of `eΛe` elements back).
    pub retraction: Mat,
    pub degenerate: bool,
}

impl Algebra {
    /// `eΛe` for an idempotent `e`.
    ///
    /// Idempotent data of the corner consists of the primitive idempotents
    /// `e_v` of `Λ` with `e e_v e = e_v`; this requires `e` to be a sum of
    /// them.
    pub fn corner(&self, e: &[u32]) -> Result<Corner> {
        if e.len() != self.dim() {
            return Err(Error::input("idempotent has wrong length"));
        }
        if !self.is_idempotent(e) {
            return Err(Error::input("element is not idempotent"));
        }
        let n = self.dim();
        let f = self.field();
        let lr = self.left_mult_by(e).mul(&self.right_mult_by(e));
        let embedding = lr.image_basis();
        let m = embedding.cols();
        if m == 0 {
            return Ok(Corner {
                algebra: Arc::new(Algebra::zero(f)),
                embedding: Mat::zeros(f, n, 0),
                retraction: Mat::zeros(f, 0, n),
                degenerate: true,
            });
        }
        let retraction = embedding
            .left_inverse()
            .ok_or_else(|| Error::internal("corner basis dependent"))?;
        let cols: Vec<Vec<u32>> = (0..m).map(|c| embedding.col(c)).collect();
        let mut consts = vec![0u32; m * m * m];
        for i in 0..m {
            for j in 0..m {
                let prod = retraction.mul_vec(&self.mul(&cols[i], &cols[j]));
                consts[(i * m + j) * m..(i * m + j + 1) * m].copy_from_slice(&prod);
            }
        }
        let labels = cols
            .iter()
            .enumerate()
            .map(|(c, v)| basis_label(self, v).unwrap_or_else(|| format!("c{c}")))
            .collect();
        let mut idempotents = Vec::new();
        let mut vertex_labels = Vec::new();
        let mut sum = vec![0u32; n];
        for (v, ev) in self.idempotents().iter().enumerate() {
            let eve = self.mul(&self.mul(e, ev), e);
            if &eve == ev {
                idempotents.push(retraction.mul_vec(ev));
                vertex_labels.push(self.vertex_labels()[v].clone());
                for (s, &x) in sum.iter_mut().zip(ev) {
                    *s = f.add(*s, x);
                }
            }
        }
        if !self.idempotents().is_empty() && sum != e {
            return Err(Error::Unsupported(
                "idempotent is not a sum of the algebra's primitive idempotents".into(),
            ));
        }
        let radical = self.radical().map(|rad| {
            let imgs: Vec<Vec<u32>> = (0..rad.cols()).map(|c| lr.mul_vec(&rad.col(c))).collect();
            let span = Mat::from_columns(f, n, &imgs).image_basis();
            (0..span.cols())
                .map(|c| retraction.mul_vec(&span.col(c)))
                .collect()
        });
        let algebra = Algebra::new(AlgebraData {
            field: f,
            labels,
            consts,
            unit: retraction.mul_vec(e),
            idempotents,
            vertex_labels,
            radical,
        })?;
        Ok(Corner {
            degenerate: m == n,
            algebra: Arc::new(algebra),
            embedding,
            retraction,
        })
    }

    /// Basis (columns) of the two-sided ideal `ΛeΛ`.
    pub fn two_sided_ideal(&self, e: &[u32]) -> Result<Mat> {
        if e.len() != self.dim() {
            return Err(Error::input("element has wrong length"));
        }
        let n = self.dim();
        let mut cols = Vec::with_capacity(n * n);
        for i in 0..n {
            let be = self.mul(&unit_vec(n, i), e);
            for j in 0..n {
                cols.push(self.mul(&be, &unit_vec(n, j)));
            }
        }
        let basis = Mat::from_columns(self.field(), n, &cols).image_basis();
        self.check_ideal(&basis)?;
        Ok(basis)
    }

    fn check_ideal(&self, basis: &Mat) -> Result<()> {
        let r = basis.rank();
        for i in 0..self.dim() {
            for m in [self.left_mult(i), self.right_mult(i)] {
                let stacked = Mat::hstack(self.field(), self.dim(), &[basis, &m.mul(basis)])?;
                if stacked.rank() != r {
                    return Err(Error::internal("subspace is not a two-sided ideal"));
                }
            }
        }
        Ok(())
    }

    /// `Λ / I` on the standard-vector complement of `I`, with the projection.
    pub fn quotient(self: &Arc<Self>, ideal: &Mat) -> Result<(Arc<Algebra>, AlgebraMap)> {
        let f = self.field();
        let n = self.dim();
        if ideal.rows() != n {
            return Err(Error::input("ideal basis has wrong row count"));
        }
        let ideal = ideal.image_basis();
        self.check_ideal(&ideal)?;
        let comp = ideal.complement_basis();
        let m = comp.cols();
        let change = Mat::hstack(f, n, &[&ideal, &comp])?;
        let inv = change
            .inverse()
            .ok_or_else(|| Error::internal("ideal and complement do not span"))?;
        let proj = inv.block(ideal.cols(), 0, m, n);
        let cols: Vec<Vec<u32>> = (0..m).map(|c| comp.col(c)).collect();
        let mut consts = vec![0u32; m * m * m];
        for i in 0..m {
            for j in 0..m {
                let prod = proj.mul_vec(&self.mul(&cols[i], &cols[j]));
                consts[(i * m + j) * m..(i * m + j + 1) * m].copy_from_slice(&prod);
            }
        }
        let labels = cols
            .iter()
            .enumerate()
            .map(|(c, v)| basis_label(self, v).unwrap_or_else(|| format!("q{c}")))
            .collect();
        let mut idempotents = Vec::new();
        let mut vertex_labels = Vec::new();
        for (v, ev) in self.idempotents().iter().enumerate() {
            let img = proj.mul_vec(ev);
            if img.iter().any(|&x| x != 0) {
                idempotents.push(img);
                vertex_labels.push(self.vertex_labels()[v].clone());
            }
        }
        let radical = self.radical().map(|rad| {
            let img = proj.mul(rad).image_basis();
            (0..img.cols()).map(|c| img.col(c)).collect()
        });
        let q = Arc::new(Algebra::new(AlgebraData {
            field: f,
            labels,
            consts,
            unit: proj.mul_vec(self.unit()),
            idempotents,
            vertex_labels,
            radical,
        })?);
        let map = AlgebraMap::new(self.clone(), q.clone(), proj)?;
        Ok((q, map))
    }

    /// `[[A, M], [0, B]]` for an `A`-`B`-bimodule `M`.
    ///
    /// Basis order: `A`, then `M`, then `B`. Left modules are triples
    /// `(X_A, Y_B, M ⊗_B Y → X)`.
    pub fn triangular_matrix(a: &Algebra, b: &Algebra, m: &Bimodule) -> Result<Algebra> {
        if *m.left_alg != *a || *m.right_alg != *b {
            return Err(Error::input("bimodule algebras do not match"));
        }
        if a.field() != b.field() {
            return Err(Error::input("algebras over different fields"));
        }
        let f = a.field();
        let (da, dm, db) = (a.dim(), m.dim, b.dim());
        let n = da + dm + db;
        let mut consts = vec![0u32; n * n * n];
        let mut set = |i: usize, j: usize, k: usize, v: u32| {
            consts[(i * n + j) * n + k] = v;
        };
        for i in 0..da {
            for j in 0..da {
                for k in 0..da {
                    set(i, j, k, a.constant(i, j, k));
                }
            }
            for j in 0..dm {
                for k in 0..dm {
                    set(i, da + j, da + k, m.left[i].get(k, j));
                }
            }
        }
        for i in 0..dm {
            for j in 0..db {
                for k in 0..dm {
                    set(da + i, da + dm + j, da + k, m.right[j].get(k, i));
                }
            }
        }
        for i in 0..db {
            for j in 0..db {
                for k in 0..db {
                    set(da + dm + i, da + dm + j, da + dm + k, b.constant(i, j, k));
                }
            }
        }
        let embed_a = |v: &[u32]| {
            let mut out = vec![0u32; n];
            out[..da].copy_from_slice(v);
            out
        };
        let embed_b = |v: &[u32]| {
            let mut out = vec![0u32; n];
            out[da + dm..].copy_from_slice(v);
            out
        };
        let mut unit = embed_a(a.unit());
        unit[da + dm..].copy_from_slice(b.unit());
        let labels = a
            .labels()
            .iter()
            .map(|l| format!("a.{l}"))
            .chain((0..dm).map(|i| format!("m{i}")))
            .chain(b.labels().iter().map(|l| format!("b.{l}")))
            .collect();
        let idempotents = a
            .idempotents()
            .iter()
            .map(|e| embed_a(e))
            .chain(b.idempotents().iter().map(|e| embed_b(e)))
            .collect();
        let vertex_labels = a
            .vertex_labels()
            .iter()
            .map(|l| format!("a.{l}"))
            .chain(b.vertex_labels().iter().map(|l| format!("b.{l}")))
            .collect();
        let radical = match (a.radical(), b.radical()) {
            (Some(ra), Some(rb)) => {
                let mut vs: Vec<Vec<u32>> = (0..ra.cols()).map(|c| embed_a(&ra.col(c))).collect();
                vs.extend((0..dm).map(|i| unit_vec(n, da + i)));
                vs.extend((0..rb.cols()).map(|c| embed_b(&rb.col(c))));
                Some(vs)
            }
            _ => None,
        };
        let _ = f;
        Algebra::new(AlgebraData {
            field: a.field(),
            labels,
            consts,
            unit,
            idempotents,
            vertex_labels,
            radical,
        })
    }
}

fn basis_label(a: &Algebra, v: &[u32]) -> Option<String> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| v[i] != 0).collect();
    (nz.len() == 1 && v[nz[0]] == 1).then(|| a.labels()[nz[0]].clone())
}

/// `T_n(A)`, realized as iterated triangular matrix rings, together with the
/// coordinates of the matrix units `E_{ij} ⊗ b_s` (`i >= j`, vertices
/// `1..=n`). A module over it is a sequence `X_1 -> ... -> X_n` where
/// `E_{ij}` sends `X_j` into `X_i`.
#[derive(Clone, Debug)]
pub struct MornAlgebra {
    pub algebra: Arc<Algebra>,
    pub base: Arc<Algebra>,
    pub n: usize,
    index: Vec<usize>,
}

impl MornAlgebra {
    pub fn new(base: Arc<Algebra>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::input("morphism category length must be at least 1"));
        }
        let da = base.dim();
        let f = base.field();
        // T_1 = base; T_k = [[base, row_k], [0, T_{k-1}]]
        let mut alg: Algebra = base.relabeled(base.labels().to_vec(), base.vertex_labels().to_vec())?;
        // layout[k] maps (i, j, s) with 1 <= j <= i <= k to an index in T_k
        let mut layout: Vec<usize> = vec![usize::MAX; (n + 1) * (n + 1) * da];
        let key = |i: usize, j: usize, s: usize| (i * (n + 1) + j) * da + s;
        for s in 0..da {
            layout[key(1, 1, s)] = s;
        }
        for k in 2..=n {
            let prev = Arc::new(alg);
            let dm = (k - 1) * da;
            // left action of base on row: block-diagonal left multiplication
            let left: Vec<Mat> = (0..da)
                .map(|t| {
                    let l = base.left_mult(t);
                    let blocks: Vec<&Mat> = (0..k - 1).map(|_| l).collect();
                    Mat::block_diag(f, &blocks)
                })
                .collect();
            // right action of T_{k-1}: (E_{kj} ⊗ m)(E_{jl} ⊗ t) = E_{kl} ⊗ (m t)
            let mut right = vec![Mat::zeros(f, dm, dm); prev.dim()];
            for j in 1..k {
                for l in 1..=j {
                    for t in 0..da {
                        let idx = layout[key(j, l, t)];
                        right[idx].set_block((l - 1) * da, (j - 1) * da, base.right_mult(t));
                    }
                }
            }
            let row = Bimodule::new(base.clone(), prev.clone(), dm, left, right)?;
            let next = Algebra::triangular_matrix(&base, &prev, &row)?;
            let mut new_layout = vec![usize::MAX; layout.len()];
            for s in 0..da {
                new_layout[key(k, k, s)] = s;
                for j in 1..k {
                    new_layout[key(k, j, s)] = da + (j - 1) * da + s;
                }
            }
            for i in 1..k {
                for j in 1..=i {
                    for s in 0..da {
                        new_layout[key(i, j, s)] = da + dm + layout[key(i, j, s)];
                    }
                }
            }
            layout = new_layout;
            alg = next;
        }
        // relabel: E{i}{j}.{label}; vertices ordered 1..n
        let mut labels = vec![String::new(); alg.dim()];
        for i in 1..=n {
            for j in 1..=i {
                for s in 0..da {
                    labels[layout[key(i, j, s)]] = format!("E{i}{j}.{}", base.labels()[s]);
                }
            }
        }
        let nv = base.num_vertices();
        let single = nv == 1;
        let mut vertex_labels = Vec::new();
        let mut perm = Vec::new();
        // triangular construction lists idempotents as vertex k first, then T_{k-1}
        for i in 1..=n {
            for v in 0..nv {
                perm.push((n - i) * nv + v);
                vertex_labels.push(if single {
                    format!("{i}")
                } else {
                    format!("{i}.{}", base.vertex_labels()[v])
                });
            }
        }
        let reordered = alg.with_vertex_order(&perm)?;
        let algebra = reordered.relabeled(labels, vertex_labels)?;
        Ok(MornAlgebra {
            algebra: Arc::new(algebra),
            base,
            n,
            index: layout,
        })
    }

    /// Index of `E_{ij} ⊗ b_s` in the algebra basis (`1 <= j <= i <= n`).
    pub fn index(&self, i: usize, j: usize, s: usize) -> usize {
        debug_assert!(1 <= j && j <= i && i <= self.n);
        self.index[(i * (self.n + 1) + j) * self.base.dim() + s]
    }

    /// Coordinates of `E_{ii} ⊗ x` for a base element `x`.
    pub fn diagonal(&self, i: usize, x: &[u32]) -> Vec<u32> {
        self.unit_at(i, i, x)
    }

    /// Coordinates of `E_{ij} ⊗ x`.
    pub fn unit_at(&self, i: usize, j: usize, x: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.algebra.dim()];
        for (s, &c) in x.iter().enumerate() {
            out[self.index(i, j, s)] = c;
        }
        out
    }

    /// Sum of the diagonal units `E_{ii}` for `i` in `vertices`.
    pub fn position_idempotent(&self, positions: &[usize]) -> Vec<u32> {
        let mut out = vec![0u32; self.algebra.dim()];
        for &i in positions {
            let v = self.diagonal(i, self.base.unit());
            for (o, x) in out.iter_mut().zip(v) {
                *o = self.algebra.field().add(*o, x);
            }
        }
        out
    }
}
