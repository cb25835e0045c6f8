//! Finite-dimensional left modules given by action matrices, their
//! homomorphisms and the basic abelian constructions.

mod functors;
mod iso;
mod morseq;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use functors::{
    hom_over, hom_over_map, left_corner_bimodule, restrict, restrict_hom, right_corner_bimodule,
    tensor_map, tensor_over, HomModule, TensorProduct,
};
pub use iso::{is_isomorphic, IsoResult};
pub use morseq::{ladder_to_hom, MorSeq};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

struct Inner {
    alg: Arc<Algebra>,
    dim: usize,
    action: Vec<Mat>,
    blocks: OnceLock<Blocks>,
}

/// Decomposition `X = ⊕ e_v X` and the generator actions between blocks.
struct Blocks {
    bases: Vec<Mat>,
    projs: Vec<Mat>,
    gens: Vec<Mat>,
}

/// A finite-dimensional left module. Cloning is cheap.
#[derive(Clone)]
pub struct Module {
    inner: Arc<Inner>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {}", self.dim())?;
        if self.dim() > 0 {
            write!(f, ", dims by vertex {:?}", self.vertex_dims())?;
        }
        write!(f, ")")
    }
}

/// Structural equality: same algebra and identical action matrices.
impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (same_algebra(&self.inner.alg, &other.inner.alg)
                && self.inner.action == other.inner.action)
    }
}

impl Eq for Module {}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Module {
    /// Builds a module from one action matrix per algebra basis element,
    /// checking the module axioms exactly.
    pub fn new(alg: Arc<Algebra>, action: Vec<Mat>) -> Result<Self> {
        let m = Self::from_parts(alg, action)?;
        m.validate()?;
        Ok(m)
    }

    fn from_parts(alg: Arc<Algebra>, action: Vec<Mat>) -> Result<Self> {
        if action.len() != alg.dim() {
            return Err(Error::input(format!(
                "expected {} action matrices, got {}",
                alg.dim(),
                action.len()
            )));
        }
        let dim = action.first().map_or(0, Mat::rows);
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::input("action matrices must be square of equal size"));
        }
        if alg.dim() == 0 && dim != 0 {
            return Err(Error::input("modules over the zero algebra are zero"));
        }
        Ok(Self::raw(alg, dim, action))
    }

    pub(crate) fn raw(alg: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Self {
        Module {
            inner: Arc::new(Inner {
                alg,
                dim,
                action,
                blocks: OnceLock::new(),
            }),
        }
    }

    /// Checks `action(1) = I` and `action(b_i) action(b_j) = action(b_i b_j)`.
    pub fn validate(&self) -> Result<()> {
        let alg = self.algebra();
        if self.dim() == 0 {
            return Ok(());
        }
        if self.action_of(alg.unit()) != Mat::identity(alg.field(), self.dim()) {
            return Err(Error::input("unit does not act as the identity"));
        }
        for i in 0..alg.dim() {
            for j in 0..alg.dim() {
                let lhs = self.inner.action[i].mul(&self.inner.action[j]);
                let prod = alg.mul(&alg.basis_vector(i), &alg.basis_vector(j));
                if lhs != self.action_of(&prod) {
                    return Err(Error::input(format!(
                        "action is not multiplicative on ({}, {})",
                        alg.labels()[i],
                        alg.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Builds a module from the actions of a generating family of algebra
    /// elements (for instance vertex idempotents and arrows).
    pub fn from_generator_actions(
        alg: Arc<Algebra>,
        dim: usize,
        given: &[(Vec<u32>, Mat)],
    ) -> Result<Self> {
        let f = alg.field();
        let n = alg.dim();
        if n == 0 {
            return if dim == 0 {
                Ok(Self::raw(alg, 0, vec![]))
            } else {
                Err(Error::input("modules over the zero algebra are zero"))
            };
        }
        for (v, m) in given {
            if v.len() != n || m.rows() != dim || m.cols() != dim {
                return Err(Error::input("generator action has wrong shape"));
            }
        }
        let mut pairs: Vec<(Vec<u32>, Mat)> = vec![(alg.unit().to_vec(), Mat::identity(f, dim))];
        pairs.extend(given.iter().cloned());
        // close under right multiplication by the given elements
        let mut span_rank = Mat::from_columns(f, n, &collect_vecs(&pairs)).rank();
        let mut frontier = pairs.clone();
        while span_rank < n && !frontier.is_empty() {
            let mut next = Vec::new();
            for (x, mx) in &frontier {
                for (g, mg) in given {
                    let v = alg.mul(x, g);
                    let cand = {
                        let mut cols = collect_vecs(&pairs);
                        cols.push(v.clone());
                        Mat::from_columns(f, n, &cols).rank()
                    };
                    if cand > span_rank {
                        span_rank = cand;
                        let pair = (v, mx.mul(mg));
                        pairs.push(pair.clone());
                        next.push(pair);
                    }
                }
            }
            frontier = next;
        }
        if span_rank < n {
            return Err(Error::input(
                "given elements do not generate the algebra",
            ));
        }
        let basis = Mat::from_columns(f, n, &collect_vecs(&pairs));
        let mut action = Vec::with_capacity(n);
        for i in 0..n {
            let coeffs = basis
                .solve(&Mat::column(f, &alg.basis_vector(i)))?
                .ok_or_else(|| Error::internal("basis element outside span"))?;
            let mut m = Mat::zeros(f, dim, dim);
            for (c, (_, mat)) in pairs.iter().enumerate() {
                m.add_scaled(mat, coeffs.get(c, 0));
            }
            action.push(m);
        }
        let module = Self::raw(alg, dim, action);
        module.validate()?;
        // the given actions must be reproduced (catches inconsistent input)
        for (v, m) in given {
            if module.action_of(v) != *m {
                return Err(Error::input("generator actions violate the algebra relations"));
            }
        }
        Ok(module)
    }

    pub fn zero(alg: Arc<Algebra>) -> Self {
        let f = alg.field();
        let n = alg.dim();
        Self::raw(alg, 0, vec![Mat::zeros(f, 0, 0); n])
    }

    /// The regular left module `Λ`.
    pub fn regular(alg: Arc<Algebra>) -> Self {
        let action = (0..alg.dim()).map(|i| alg.left_mult(i).clone()).collect();
        let n = alg.dim();
        Self::raw(alg, n, action)
    }

    /// The indecomposable projective `Λe_v`.
    pub fn projective(alg: Arc<Algebra>, v: usize) -> Result<Self> {
        let data = alg
            .projective_data()
            .get(v)
            .ok_or_else(|| Error::input(format!("no vertex {v}")))?;
        let action = data.action.clone();
        let d = data.basis.cols();
        Ok(Self::raw(alg, d, action))
    }

    /// The simple top of `Λe_v`.
    pub fn simple(alg: Arc<Algebra>, v: usize) -> Result<Self> {
        let p = Self::projective(alg, v)?;
        let rad = p.radical_basis()?;
        let (s, _) = p.quotient_by(&rad);
        Ok(s)
    }

    /// The indecomposable injective `D(e_v Λ)`.
    pub fn injective(alg: Arc<Algebra>, v: usize) -> Result<Self> {
        let op = alg.opposite();
        Ok(Self::projective(op, v)?.dual())
    }

    #[inline]
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.inner.alg
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.inner.alg.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn is_zero(&self) -> bool {
        self.inner.dim == 0
    }

    /// Action matrix of basis element `i`.
    pub fn action(&self, i: usize) -> &Mat {
        &self.inner.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.inner.action
    }

    /// Action of an arbitrary algebra element.
    pub fn action_of(&self, x: &[u32]) -> Mat {
        let mut out = Mat::zeros(self.field(), self.dim(), self.dim());
        for (m, &c) in self.inner.action.iter().zip(x) {
            if c != 0 {
                out.add_scaled(m, c);
            }
        }
        out
    }

    /// `dim e_v X` for each block idempotent.
    pub fn vertex_dims(&self) -> Vec<usize> {
        self.blocks().bases.iter().map(Mat::cols).collect()
    }

    fn blocks(&self) -> &Blocks {
        self.inner.blocks.get_or_init(|| {
            let alg = self.algebra();
            let f = self.field();
            let n = self.dim();
            let idem = alg.block_idempotents();
            let bases: Vec<Mat> = idem.iter().map(|e| self.action_of(e).image_basis()).collect();
            let refs: Vec<&Mat> = bases.iter().collect();
            let all = Mat::hstack(f, n, &refs).expect("same rows");
            let inv = all.inverse().expect("idempotent decomposition spans");
            let mut projs = Vec::with_capacity(bases.len());
            let mut off = 0;
            for b in &bases {
                projs.push(inv.block(off, 0, b.cols(), n));
                off += b.cols();
            }
            let gens = alg
                .homogeneous_generators()
                .iter()
                .map(|(w, v, g)| projs[*w].mul(&self.action_of(g)).mul(&bases[*v]))
                .collect();
            Blocks { bases, projs, gens }
        })
    }

    /// Basis of `rad Λ · X`.
    pub fn radical_basis(&self) -> Result<Mat> {
        let rad = self.algebra().require_radical()?;
        let f = self.field();
        let imgs: Vec<Mat> = (0..rad.cols())
            .map(|c| self.action_of(&rad.col(c)))
            .collect();
        let refs: Vec<&Mat> = imgs.iter().collect();
        Ok(Mat::hstack(f, self.dim(), &refs)?.image_basis())
    }

    /// Multiplicity of each simple in the top `X / rad X`.
    pub fn top(&self) -> Result<Vec<usize>> {
        let rad = self.radical_basis()?;
        Ok(self
            .algebra()
            .idempotents()
            .iter()
            .map(|e| {
                let ex = self.action_of(e);
                ex.rank() - ex.mul(&rad).rank()
            })
            .collect())
    }

    /// Submodule spanned by the columns of `basis` (which must be closed);
    /// returns it with its inclusion.
    pub fn submodule(&self, basis: &Mat) -> Result<(Module, ModuleHom)> {
        let basis = basis.image_basis();
        let linv = basis
            .left_inverse()
            .ok_or_else(|| Error::internal("dependent basis"))?;
        let mut action = Vec::with_capacity(self.inner.action.len());
        for a in &self.inner.action {
            let img = a.mul(&basis);
            let back = linv.mul(&img);
            if basis.mul(&back) != img {
                return Err(Error::input("subspace is not a submodule"));
            }
            action.push(back);
        }
        let sub = Self::raw(self.algebra().clone(), basis.cols(), action);
        let inc = ModuleHom::raw(sub.clone(), self.clone(), basis);
        Ok((sub, inc))
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_submodule(&self, vectors: &[Vec<u32>]) -> Mat {
        let f = self.field();
        let mut cols: Vec<Vec<u32>> = vectors.to_vec();
        let mut span = Mat::from_columns(f, self.dim(), &cols).image_basis();
        loop {
            let mut next = cols.clone();
            for c in 0..span.cols() {
                let v = span.col(c);
                for a in &self.inner.action {
                    next.push(a.mul_vec(&v));
                }
            }
            let nspan = Mat::from_columns(f, self.dim(), &next).image_basis();
            if nspan.cols() == span.cols() {
                return span;
            }
            cols = (0..nspan.cols()).map(|c| nspan.col(c)).collect();
            span = nspan;
        }
    }

    /// Quotient by a submodule given by a basis; returns it with the projection.
    pub fn quotient_by(&self, sub: &Mat) -> (Module, ModuleHom) {
        cokernel_of_matrix(self, sub)
    }

    /// The vector-space dual `Hom_k(X, k)` as a module over the opposite
    /// algebra: `action(b) = action_X(b)^T`.
    pub fn dual(&self) -> Module {
        let op = self.algebra().opposite();
        let action = self.inner.action.iter().map(Mat::transpose).collect();
        Self::raw(op, self.dim(), action)
    }

    pub fn identity(&self) -> ModuleHom {
        ModuleHom::raw(self.clone(), self.clone(), Mat::identity(self.field(), self.dim()))
    }

    /// True when the projective cover is an isomorphism.
    pub fn is_projective(&self) -> Result<bool> {
        Ok(projective_cover(self)?.module.dim() == self.dim())
    }

    pub fn is_injective(&self) -> Result<bool> {
        self.dual().is_projective()
    }
}

fn collect_vecs(pairs: &[(Vec<u32>, Mat)]) -> Vec<Vec<u32>> {
    pairs.iter().map(|(v, _)| v.clone()).collect()
}

/// A module homomorphism: `matrix` is `target.dim x source.dim`.
#[derive(Clone, Debug)]
pub struct ModuleHom {
    pub source: Module,
    pub target: Module,
    pub matrix: Mat,
}

impl PartialEq for ModuleHom {
    fn eq(&self, other: &Self) -> bool {
        self.source == other.source && self.target == other.target && self.matrix == other.matrix
    }
}

impl ModuleHom {
    /// Checks the intertwining relation on every basis element.
    pub fn new(source: Module, target: Module, matrix: Mat) -> Result<Self> {
        if !same_algebra(source.algebra(), target.algebra()) {
            return Err(Error::input("modules over different algebras"));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "map of shape {}x{} between modules of dims {} and {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        let h = Self::raw(source, target, matrix);
        if !h.intertwines() {
            return Err(Error::input("matrix does not commute with the actions"));
        }
        Ok(h)
    }

    pub(crate) fn raw(source: Module, target: Module, matrix: Mat) -> Self {
        ModuleHom {
            source,
            target,
            matrix,
        }
    }

    pub fn zero(source: &Module, target: &Module) -> Self {
        Self::raw(
            source.clone(),
            target.clone(),
            Mat::zeros(source.field(), target.dim(), source.dim()),
        )
    }

    pub fn intertwines(&self) -> bool {
        self.source
            .actions()
            .iter()
            .zip(self.target.actions())
            .all(|(a, b)| self.matrix.mul(a) == b.mul(&self.matrix))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ModuleHom) -> Result<ModuleHom> {
        if first.target.dim() != self.source.dim() {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        Ok(Self::raw(
            first.source.clone(),
            self.target.clone(),
            self.matrix.mul(&first.matrix),
        ))
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        Self::raw(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    pub fn scale(&self, s: u32) -> ModuleHom {
        Self::raw(self.source.clone(), self.target.clone(), self.matrix.scale(s))
    }

    pub fn neg(&self) -> ModuleHom {
        Self::raw(self.source.clone(), self.target.clone(), self.matrix.neg())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_mono()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    /// The dual map `DY -> DX` over the opposite algebra.
    pub fn dual(&self) -> ModuleHom {
        Self::raw(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ModuleHom> {
        self.matrix
            .inverse()
            .map(|m| Self::raw(self.target.clone(), self.source.clone(), m))
    }
}

/// A short exact sequence `0 -> A -> B -> C -> 0`.
#[derive(Clone, Debug)]
pub struct Ses {
    pub mono: ModuleHom,
    pub epi: ModuleHom,
}

impl Ses {
    pub fn new(mono: ModuleHom, epi: ModuleHom) -> Result<Self> {
        let s = Ses { mono, epi };
        s.verify()?;
        Ok(s)
    }

    /// Injectivity, surjectivity, composability and `im = ker`, by ranks.
    pub fn verify(&self) -> Result<()> {
        let (m, e) = (&self.mono, &self.epi);
        if m.target.dim() != e.source.dim() {
            return Err(Error::construction("sequence is not composable"));
        }
        if !m.intertwines() || !e.intertwines() {
            return Err(Error::construction("sequence maps are not module maps"));
        }
        if !m.is_mono() {
            return Err(Error::construction("left map is not injective"));
        }
        if !e.is_epi() {
            return Err(Error::construction("right map is not surjective"));
        }
        if !e.matrix.mul(&m.matrix).is_zero() {
            return Err(Error::construction("composite is not zero"));
        }
        if m.source.dim() + e.target.dim() != m.target.dim() {
            return Err(Error::construction("image and kernel differ"));
        }
        Ok(())
    }

    pub fn left(&self) -> &Module {
        &self.mono.source
    }

    pub fn middle(&self) -> &Module {
        &self.mono.target
    }

    pub fn right(&self) -> &Module {
        &self.epi.target
    }

    /// Dual sequence over the opposite algebra (mono and epi swap roles).
    pub fn dual(&self) -> Ses {
        Ses {
            mono: self.epi.dual(),
            epi: self.mono.dual(),
        }
    }
}

/// Basis of `Hom_Λ(X, Y)`.
pub fn hom_basis(x: &Module, y: &Module) -> Result<Vec<ModuleHom>> {
    let mats = hom_matrices(x, y)?;
    Ok(mats
        .into_iter()
        .map(|m| ModuleHom::raw(x.clone(), y.clone(), m))
        .collect())
}

/// `dim Hom_Λ(X, Y)`.
pub fn hom_dim(x: &Module, y: &Module) -> Result<usize> {
    let (sys, unknowns) = hom_system(x, y)?;
    Ok(unknowns - sys.map_or(0, |s| s.rank()))
}

fn hom_system(x: &Module, y: &Module) -> Result<(Option<Mat>, usize)> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(Error::input("modules over different algebras"));
    }
    let f = x.field();
    let (bx, by) = (x.blocks(), y.blocks());
    let nb = bx.bases.len();
    let mut offsets = Vec::with_capacity(nb);
    let mut unknowns = 0;
    for v in 0..nb {
        offsets.push(unknowns);
        unknowns += bx.bases[v].cols() * by.bases[v].cols();
    }
    let gens = x.algebra().homogeneous_generators();
    let mut rows_total = 0;
    for (w, v, _) in gens {
        rows_total += by.bases[*w].cols() * bx.bases[*v].cols();
    }
    if rows_total == 0 || unknowns == 0 {
        return Ok((None, unknowns));
    }
    let mut sys = Mat::zeros(f, rows_total, unknowns);
    let mut r0 = 0;
    for (t, (w, v, _)) in gens.iter().enumerate() {
        let (w, v) = (*w, *v);
        let (dyw, dyv) = (by.bases[w].cols(), by.bases[v].cols());
        let (dxw, dxv) = (bx.bases[w].cols(), bx.bases[v].cols());
        let rows = dyw * dxv;
        if rows == 0 {
            continue;
        }
        // G^y F_v - F_w G^x = 0
        if dyv * dxv > 0 {
            let a = Mat::kron(&Mat::identity(f, dxv), &by.gens[t]);
            sys.set_block(r0, offsets[v], &a);
        }
        if dyw * dxw > 0 {
            let b = Mat::kron(&bx.gens[t].transpose(), &Mat::identity(f, dyw)).neg();
            let existing = sys.block(r0, offsets[w], rows, dyw * dxw);
            sys.set_block(r0, offsets[w], &existing.add(&b));
        }
        r0 += rows;
    }
    Ok((Some(sys), unknowns))
}

fn hom_matrices(x: &Module, y: &Module) -> Result<Vec<Mat>> {
    let f = x.field();
    let (sys, unknowns) = hom_system(x, y)?;
    let kernel = match sys {
        Some(s) => s.kernel_basis(),
        None => Mat::identity(f, unknowns),
    };
    let (bx, by) = (x.blocks(), y.blocks());
    let mut out = Vec::with_capacity(kernel.cols());
    for c in 0..kernel.cols() {
        let sol = kernel.col(c);
        let mut m = Mat::zeros(f, y.dim(), x.dim());
        let mut off = 0;
        for v in 0..bx.bases.len() {
            let (dyv, dxv) = (by.bases[v].cols(), bx.bases[v].cols());
            if dyv * dxv > 0 {
                let fv = Mat::unvec_col(f, dyv, dxv, &sol[off..off + dyv * dxv]);
                m = m.add(&by.bases[v].mul(&fv).mul(&bx.projs[v]));
            }
            off += dyv * dxv;
        }
        out.push(m);
    }
    Ok(out)
}

/// Kernel with its inclusion.
pub fn kernel(f: &ModuleHom) -> (Module, ModuleHom) {
    let k = f.matrix.kernel_basis();
    f.source
        .submodule(&k)
        .expect("kernel of a module map is a submodule")
}

fn cokernel_of_matrix(y: &Module, image_cols: &Mat) -> (Module, ModuleHom) {
    let fld = y.field();
    let n = y.dim();
    let im = image_cols.image_basis();
    let comp = im.complement_basis();
    let change = Mat::hstack(fld, n, &[&im, &comp]).expect("same rows");
    let inv = change.inverse().expect("image and complement span");
    let proj = inv.block(im.cols(), 0, comp.cols(), n);
    let action = y
        .actions()
        .iter()
        .map(|a| proj.mul(a).mul(&comp))
        .collect();
    let q = Module::raw(y.algebra().clone(), comp.cols(), action);
    let epi = ModuleHom::raw(y.clone(), q.clone(), proj);
    (q, epi)
}

/// Cokernel with its projection; the complement is spanned by the standard
/// vectors at non-pivot coordinates of the image.
pub fn cokernel(f: &ModuleHom) -> (Module, ModuleHom) {
    cokernel_of_matrix(&f.target, &f.matrix)
}

/// Image with the factorization `source ->> image >-> target`.
pub fn image(f: &ModuleHom) -> (Module, ModuleHom, ModuleHom) {
    let basis = f.matrix.image_basis();
    let (img, inc) = f
        .target
        .submodule(&basis)
        .expect("image of a module map is a submodule");
    let linv = basis.left_inverse().expect("independent");
    let epi = ModuleHom::raw(f.source.clone(), img.clone(), linv.mul(&f.matrix));
    (img, epi, inc)
}

/// Direct sum with its structure maps.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub injections: Vec<ModuleHom>,
    pub projections: Vec<ModuleHom>,
}

pub fn direct_sum(alg: &Arc<Algebra>, parts: &[Module]) -> Result<DirectSum> {
    for p in parts {
        if !same_algebra(p.algebra(), alg) {
            return Err(Error::input("summands over different algebras"));
        }
    }
    let f = alg.field();
    let total: usize = parts.iter().map(Module::dim).sum();
    let action = (0..alg.dim())
        .map(|i| {
            let blocks: Vec<&Mat> = parts.iter().map(|p| p.action(i)).collect();
            Mat::block_diag(f, &blocks)
        })
        .collect();
    let module = Module::raw(alg.clone(), total, action);
    let mut injections = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut off = 0;
    for p in parts {
        let mut inj = Mat::zeros(f, total, p.dim());
        inj.set_block(off, 0, &Mat::identity(f, p.dim()));
        projections.push(ModuleHom::raw(module.clone(), p.clone(), inj.transpose()));
        injections.push(ModuleHom::raw(p.clone(), module.clone(), inj));
        off += p.dim();
    }
    Ok(DirectSum {
        module,
        injections,
        projections,
    })
}

/// `X ⊕ Y`, convenience wrapper.
pub fn sum2(x: &Module, y: &Module) -> Module {
    direct_sum(x.algebra(), &[x.clone(), y.clone()])
        .expect("same algebra")
        .module
}

/// Hom out of a direct sum into `target` from a list of components.
pub fn hom_from_sum(sum: &DirectSum, target: &Module, components: &[&Mat]) -> Result<ModuleHom> {
    let f = target.field();
    let m = Mat::hstack(f, target.dim(), components)?;
    Ok(ModuleHom::raw(sum.module.clone(), target.clone(), m))
}

/// A projective cover together with the chosen top generators.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub module: Module,
    pub epi: ModuleHom,
    /// `(vertex, element of e_v X)` for each summand `Λe_v` in order.
    pub generators: Vec<(usize, Vec<u32>)>,
}

/// Projective cover `P(X) ->> X` built from a basis of `X / rad X`.
pub fn projective_cover(x: &Module) -> Result<ProjectiveCover> {
    let alg = x.algebra().clone();
    let f = x.field();
    let rad = x.radical_basis()?;
    let mut chosen = rad.clone();
    let mut generators = Vec::new();
    for (v, e) in alg.idempotents().iter().enumerate() {
        let ex = x.action_of(e).image_basis();
        for c in 0..ex.cols() {
            let cand = ex.col(c);
            let test = Mat::hstack(f, x.dim(), &[&chosen, &Mat::column(f, &cand)])?;
            if test.rank() > chosen.cols() {
                chosen = test;
                generators.push((v, cand));
            }
        }
    }
    if chosen.cols() != x.dim() {
        return Err(Error::internal("top generators do not span modulo the radical"));
    }
    cover_from_generators(x, generators)
}

/// The map `⊕ Λe_{v_j} -> X` sending `e_{v_j}` to the given elements.
pub fn cover_from_generators(
    x: &Module,
    generators: Vec<(usize, Vec<u32>)>,
) -> Result<ProjectiveCover> {
    let alg = x.algebra().clone();
    let f = x.field();
    let data = alg.projective_data();
    let parts: Vec<Module> = generators
        .iter()
        .map(|(v, _)| Module::projective(alg.clone(), *v))
        .collect::<Result<_>>()?;
    let sum = direct_sum(&alg, &parts)?;
    let mut cols = Vec::new();
    for (v, g) in &generators {
        let basis = &data[*v].basis;
        for c in 0..basis.cols() {
            cols.push(x.action_of(&basis.col(c)).mul_vec(g));
        }
    }
    let matrix = Mat::from_columns(f, x.dim(), &cols);
    let epi = ModuleHom::raw(sum.module.clone(), x.clone(), matrix);
    Ok(ProjectiveCover {
        module: sum.module,
        epi,
        generators,
    })
}

/// Injective envelope `X >-> I(X)`, dual to the projective cover of `DX`.
pub fn injective_envelope(x: &Module) -> Result<(Module, ModuleHom)> {
    let cover = projective_cover(&x.dual())?;
    let mono = cover.epi.dual();
    // D(DX) has the same action matrices as X over the original algebra
    let mono = ModuleHom::raw(x.clone(), mono.target.clone(), mono.matrix);
    Ok((mono.target.clone(), mono))
}

#[cfg(test)]
pub(crate) mod test_algebras {
    use super::*;
    use crate::algebra::{QuiverPresentation, Relation};

    pub fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    pub fn dual_numbers(p: u32) -> Arc<Algebra> {
        let mut q = QuiverPresentation::new(gf(p), vec!["1".into()]);
        let x = q.arrow("x", "1", "1").unwrap();
        q.relations.push(Relation::monomial(vec![x, x]));
        Arc::new(q.to_algebra().unwrap())
    }

    pub fn a2(p: u32) -> Arc<Algebra> {
        let mut q = QuiverPresentation::new(gf(p), vec!["1".into(), "2".into()]);
        q.arrow("a", "1", "2").unwrap();
        Arc::new(q.to_algebra().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::test_algebras::*;
    use super::*;

    #[test]
    fn hom_examples_over_dual_numbers() {
        let a = dual_numbers(2);
        let k = Module::simple(a.clone(), 0).unwrap();
        let l = Module::regular(a.clone());
        assert_eq!(k.dim(), 1);
        assert_eq!(hom_dim(&k, &k).unwrap(), 1);
        assert_eq!(hom_dim(&l, &k).unwrap(), 1);
        assert_eq!(hom_dim(&l, &l).unwrap(), 2);
        let basis = hom_basis(&l, &l).unwrap();
        assert!(basis.iter().all(ModuleHom::intertwines));
    }

    #[test]
    fn identity_in_endomorphism_span() {
        let a = a2(3);
        let x = Module::regular(a);
        let basis = hom_basis(&x, &x).unwrap();
        let cols: Vec<Vec<u32>> = basis.iter().map(|h| h.matrix.vec_col()).collect();
        let span = Mat::from_columns(x.field(), x.dim() * x.dim(), &cols);
        let id = Mat::identity(x.field(), x.dim()).vec_col();
        assert!(span.solve(&Mat::column(x.field(), &id)).unwrap().is_some());
    }

    #[test]
    fn kernel_cokernel_examples() {
        let a = dual_numbers(2);
        let l = Module::regular(a.clone());
        let id = l.identity();
        assert_eq!(kernel(&id).0.dim(), 0);
        let z = ModuleHom::zero(&l, &l);
        let (c, _) = cokernel(&z);
        assert_eq!(c, l);
        // right multiplication by x is a module map
        let x = ModuleHom::new(l.clone(), l.clone(), a.right_mult(1).clone()).unwrap();
        let (k, inc) = kernel(&x);
        assert_eq!(k.dim(), 1);
        assert!(inc.intertwines());
        let s = Module::simple(a, 0).unwrap();
        assert!(is_isomorphic(&k, &s).is_iso());
    }

    #[test]
    fn projective_cover_examples() {
        let a = dual_numbers(2);
        let k = Module::simple(a.clone(), 0).unwrap();
        let cover = projective_cover(&k).unwrap();
        assert_eq!(cover.module.dim(), 2);
        assert!(cover.epi.intertwines() && cover.epi.is_epi());
        assert_eq!(kernel(&cover.epi).0.dim(), 1);

        let b = a2(2);
        let s1 = Module::simple(b.clone(), 0).unwrap();
        let c1 = projective_cover(&s1).unwrap();
        assert_eq!(c1.module.dim(), 2);
        let (ker, _) = kernel(&c1.epi);
        let s2 = Module::simple(b.clone(), 1).unwrap();
        assert!(is_isomorphic(&ker, &s2).is_iso());
        let p1 = Module::projective(b, 0).unwrap();
        let cp = projective_cover(&p1).unwrap();
        assert!(cp.epi.is_iso());
    }

    #[test]
    fn injective_envelope_over_selfinjective() {
        let a = dual_numbers(3);
        let k = Module::simple(a.clone(), 0).unwrap();
        let (i, mono) = injective_envelope(&k).unwrap();
        assert_eq!(i.dim(), 2);
        assert!(mono.is_mono() && mono.intertwines());
        assert!(is_isomorphic(&i, &Module::regular(a)).is_iso());
    }

    #[test]
    fn double_dual_is_identity() {
        let a = a2(2);
        let p = Module::projective(a.clone(), 0).unwrap();
        let dd = p.dual().dual();
        assert!(Arc::ptr_eq(dd.algebra(), &a));
        assert_eq!(dd, p);
    }

    #[test]
    fn a2_vertex_dims() {
        let a = a2(2);
        assert_eq!(Module::projective(a.clone(), 0).unwrap().vertex_dims(), vec![1, 1]);
        assert_eq!(Module::projective(a.clone(), 1).unwrap().vertex_dims(), vec![0, 1]);
        assert_eq!(Module::injective(a.clone(), 1).unwrap().vertex_dims(), vec![1, 1]);
        assert!(Module::projective(a.clone(), 1).unwrap().is_projective().unwrap());
        assert!(!Module::simple(a, 0).unwrap().is_projective().unwrap());
    }

    #[test]
    fn from_generator_actions_builds_representation() {
        let a = a2(2);
        let e1 = a.idempotents()[0].clone();
        let e2 = a.idempotents()[1].clone();
        let arrow = a.basis_vector(2);
        let f = a.field();
        // k -> k with identity: the projective P_1
        let m = Module::from_generator_actions(
            a.clone(),
            2,
            &[
                (e1, Mat::from_rows(f, &[vec![1, 0], vec![0, 0]]).unwrap()),
                (e2, Mat::from_rows(f, &[vec![0, 0], vec![0, 1]]).unwrap()),
                (arrow, Mat::from_rows(f, &[vec![0, 0], vec![1, 0]]).unwrap()),
            ],
        )
        .unwrap();
        assert!(is_isomorphic(&m, &Module::projective(a, 0).unwrap()).is_iso());
    }

    #[test]
    fn ses_and_dual() {
        let a = a2(2);
        let s1 = Module::simple(a.clone(), 0).unwrap();
        let cover = projective_cover(&s1).unwrap();
        let (_, inc) = kernel(&cover.epi);
        let ses = Ses::new(inc, cover.epi.clone()).unwrap();
        ses.dual().verify().unwrap();
    }
}
