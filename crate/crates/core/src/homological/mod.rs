//! Projective resolutions, Ext, projective and injective dimension.

mod gorenstein;
mod stable;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

pub use gorenstein::{ApproxKind, ApproxSeq, Gorenstein, GorensteinProfile};
pub use stable::{cofiber_triangle, loop_module, stable_hom, CofiberTriangle, StableHom};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::modrep::{kernel, projective_cover, Module, ModuleHom};

/// Default number of resolution steps before giving up.
pub const DEFAULT_BOUND: usize = 16;

/// A dimension that is either known or only bounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Dim {
    Finite(usize),
    AtLeast(usize),
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(d) => Some(d),
            Dim::AtLeast(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(d) => write!(f, "{d}"),
            Dim::AtLeast(b) => write!(f, "≥{b}"),
        }
    }
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> X`, possibly
/// truncated.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub target: Module,
    /// `P_0, ..., P_L`.
    pub terms: Vec<Module>,
    /// Vertices of the indecomposable summands of each term, in order.
    pub vertices: Vec<Vec<usize>>,
    /// `d_k: P_k -> P_{k-1}` stored at index `k - 1`.
    pub differentials: Vec<ModuleHom>,
    pub augmentation: ModuleHom,
    /// Inclusions `Ω^k X -> P_{k-1}` for `k = 1..`.
    pub syzygies: Vec<ModuleHom>,
    /// True when the last computed syzygy is zero.
    pub complete: bool,
}

impl Resolution {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of a complete resolution (the projective dimension).
    pub fn length(&self) -> Option<usize> {
        self.complete.then(|| self.terms.len().saturating_sub(1))
    }

    /// `Ω^k X` (with `Ω^0 X = X`), if computed.
    pub fn syzygy(&self, k: usize) -> Option<&Module> {
        if k == 0 {
            Some(&self.target)
        } else {
            self.syzygies.get(k - 1).map(|h| &h.source)
        }
    }

    /// Whether terms up to `P_k` are known (zero past the end counts).
    pub fn covers_degree(&self, k: usize) -> bool {
        k < self.terms.len() || self.complete
    }

    /// Projective term `P_k`, zero past the end of a complete resolution.
    pub fn term(&self, k: usize) -> Option<(Module, Vec<usize>)> {
        if k < self.terms.len() {
            Some((self.terms[k].clone(), self.vertices[k].clone()))
        } else if self.complete {
            Some((Module::zero(self.target.algebra().clone()), vec![]))
        } else {
            None
        }
    }

    /// Differential `d_k: P_k -> P_{k-1}` (zero when either side is zero).
    pub fn differential(&self, k: usize) -> Option<Mat> {
        let f = self.target.field();
        if k == 0 {
            return None;
        }
        if k - 1 < self.differentials.len() {
            return Some(self.differentials[k - 1].matrix.clone());
        }
        let (pk, _) = self.term(k)?;
        let (pk1, _) = self.term(k - 1)?;
        Some(Mat::zeros(f, pk1.dim(), pk.dim()))
    }

    /// Checks exactness at every computed spot and projectivity of terms.
    pub fn verify(&self) -> Result<()> {
        if !self.augmentation.is_epi() {
            return Err(Error::construction("augmentation is not surjective"));
        }
        let mut prev = self.augmentation.matrix.clone();
        for (k, d) in self.differentials.iter().enumerate() {
            if !d.intertwines() {
                return Err(Error::construction(format!("d_{} is not a module map", k + 1)));
            }
            if !prev.mul(&d.matrix).is_zero() {
                return Err(Error::construction(format!("d^2 != 0 at degree {}", k + 1)));
            }
            let ker = prev.cols() - prev.rank();
            if d.matrix.rank() != ker {
                return Err(Error::construction(format!("not exact at degree {k}")));
            }
            prev = d.matrix.clone();
        }
        if self.complete && prev.rank() != prev.cols() {
            return Err(Error::construction("last differential is not injective"));
        }
        for t in &self.terms {
            if !t.is_projective()? {
                return Err(Error::construction("resolution term is not projective"));
            }
        }
        Ok(())
    }
}

/// Iterated projective covers of syzygies, computing `P_0..P_maxlen`.
pub fn projective_resolution(x: &Module, maxlen: usize) -> Result<Resolution> {
    let cover = projective_cover(x)?;
    let mut terms = vec![cover.module.clone()];
    let mut vertices = vec![cover.generators.iter().map(|g| g.0).collect::<Vec<_>>()];
    let augmentation = cover.epi.clone();
    let mut differentials = Vec::new();
    let mut syzygies = Vec::new();
    let mut last_epi = cover.epi;
    let mut complete = false;
    loop {
        let (k, inc) = kernel(&last_epi);
        syzygies.push(inc.clone());
        if k.is_zero() {
            complete = true;
            break;
        }
        if terms.len() > maxlen {
            break;
        }
        let c = projective_cover(&k)?;
        let d = inc.compose(&c.epi)?;
        terms.push(c.module.clone());
        vertices.push(c.generators.iter().map(|g| g.0).collect());
        differentials.push(d);
        last_epi = c.epi;
    }
    Ok(Resolution {
        target: x.clone(),
        terms,
        vertices,
        differentials,
        augmentation,
        syzygies,
        complete,
    })
}

/// Bases of `e_v Y` for all vertices.
pub(crate) fn vertex_bases(y: &Module) -> Vec<Mat> {
    y.algebra()
        .idempotents()
        .iter()
        .map(|e| y.action_of(e).image_basis())
        .collect()
}

/// The map `Hom(P_n, Y) -> Hom(P_{n+1}, Y)`, `φ ↦ φ ∘ d`, in generator
/// coordinates: `Hom(⊕ Λe_{v_j}, Y) ≅ ⊕ e_{v_j} Y`.
pub(crate) fn hom_complex_map(
    alg: &Algebra,
    y: &Module,
    ybases: &[Mat],
    src: &[usize],
    tgt: &[usize],
    d: &Mat,
) -> Mat {
    let f = alg.field();
    let data = alg.projective_data();
    let cols: usize = src.iter().map(|&v| ybases[v].cols()).sum();
    let rows = tgt.len() * y.dim();
    let mut out = Mat::zeros(f, rows, cols);
    if rows == 0 || cols == 0 {
        return out;
    }
    // offsets of the summands of P_n and P_{n+1}
    let src_offs = prefix(src.iter().map(|&v| data[v].basis.cols()));
    let tgt_offs = prefix(tgt.iter().map(|&v| data[v].basis.cols()));
    let col_offs = prefix(src.iter().map(|&v| ybases[v].cols()));
    for (i, &u) in tgt.iter().enumerate() {
        // d(g_i) in P_n coordinates
        let mut g = vec![0u32; d.cols()];
        for (c, &x) in data[u].generator.iter().enumerate() {
            g[tgt_offs[i] + c] = x;
        }
        let image = d.mul_vec(&g);
        for (j, &v) in src.iter().enumerate() {
            let pd = &data[v];
            let slice = &image[src_offs[j]..src_offs[j] + pd.basis.cols()];
            if slice.iter().all(|&c| c == 0) || ybases[v].cols() == 0 {
                continue;
            }
            let lambda = pd.basis.mul_vec(slice);
            let block = y.action_of(&lambda).mul(&ybases[v]);
            out.set_block(i * y.dim(), col_offs[j], &block);
        }
    }
    out
}

fn prefix(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut acc = 0;
    it.map(|d| {
        let o = acc;
        acc += d;
        o
    })
    .collect()
}

/// `dim Hom(P_n, Y)` for a term with the given vertices.
pub(crate) fn hom_from_projective_dim(ybases: &[Mat], vertices: &[usize]) -> usize {
    vertices.iter().map(|&v| ybases[v].cols()).sum()
}

/// `dim Ext^n(X, Y)` from a given resolution of `X`.
pub fn ext_dim_from(res: &Resolution, y: &Module, n: usize) -> Result<usize> {
    if !res.covers_degree(n + 1) {
        return Err(Error::BoundExceeded {
            what: format!("Ext^{n}"),
            bound: res.terms.len().saturating_sub(1),
        });
    }
    let alg = y.algebra().clone();
    let ybases = vertex_bases(y);
    let empty = Vec::new();
    let verts = |k: usize| -> &Vec<usize> { res.vertices.get(k).unwrap_or(&empty) };
    let h_n = hom_from_projective_dim(&ybases, verts(n));
    let rank_delta = |k: usize| -> usize {
        // δ_k: Hom(P_k, Y) -> Hom(P_{k+1}, Y)
        if k + 1 >= res.terms.len() {
            return 0;
        }
        let d = &res.differentials[k].matrix;
        hom_complex_map(&alg, y, &ybases, verts(k), verts(k + 1), d).rank()
    };
    let r_n = rank_delta(n);
    let r_prev = if n == 0 { 0 } else { rank_delta(n - 1) };
    Ok(h_n - r_n - r_prev)
}

/// `dim Ext^n_Λ(X, Y)`.
pub fn ext_dim(x: &Module, y: &Module, n: usize) -> Result<usize> {
    let res = projective_resolution(x, n + 1)?;
    ext_dim_from(&res, y, n)
}

/// Projective dimension: the first `k < bound` with `Ω^k X` projective.
pub fn pd(x: &Module, bound: usize) -> Result<Dim> {
    if bound == 0 {
        return Ok(Dim::AtLeast(0));
    }
    let res = projective_resolution(x, bound - 1)?;
    Ok(match res.length() {
        Some(l) if l < bound => Dim::Finite(l),
        _ => Dim::AtLeast(bound),
    })
}

/// Injective dimension, as the projective dimension of the dual.
pub fn id(x: &Module, bound: usize) -> Result<Dim> {
    pd(&x.dual(), bound)
}

/// `Ω^k X`.
pub fn syzygy(x: &Module, k: usize) -> Result<Module> {
    let mut cur = x.clone();
    for _ in 0..k {
        cur = kernel(&projective_cover(&cur)?.epi).0;
    }
    Ok(cur)
}

/// `Ω^{-k} X`, via injective envelopes.
pub fn cosyzygy(x: &Module, k: usize) -> Result<Module> {
    let d = syzygy(&x.dual(), k)?.dual();
    Ok(d)
}

/// The regular module of `alg` (helper for Ext against `Λ`).
pub fn regular(alg: &Arc<Algebra>) -> Module {
    Module::regular(alg.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::test_algebras::*;
    use crate::modrep::{hom_dim, is_isomorphic};

    #[test]
    fn resolution_examples() {
        let a = a2(2);
        let p1 = Module::projective(a.clone(), 0).unwrap();
        let r = projective_resolution(&p1, 4).unwrap();
        assert_eq!(r.length(), Some(0));
        let s1 = Module::simple(a.clone(), 0).unwrap();
        let r = projective_resolution(&s1, 4).unwrap();
        assert_eq!(r.length(), Some(1));
        assert_eq!(r.vertices, vec![vec![0], vec![1]]);
        r.verify().unwrap();

        let d = dual_numbers(2);
        let k = Module::simple(d.clone(), 0).unwrap();
        let r = projective_resolution(&k, 5).unwrap();
        assert!(!r.complete);
        assert_eq!(r.terms.len(), 6);
        for i in 1..=5 {
            assert!(is_isomorphic(r.syzygy(i).unwrap(), &k).is_iso());
        }
        r.verify().unwrap();
    }

    #[test]
    fn ext_examples() {
        let d = dual_numbers(2);
        let k = Module::simple(d.clone(), 0).unwrap();
        for n in 0..=8 {
            assert_eq!(ext_dim(&k, &k, n).unwrap(), 1, "n = {n}");
        }
        let l = Module::regular(d.clone());
        for n in 1..4 {
            assert_eq!(ext_dim(&l, &k, n).unwrap(), 0);
        }
        let a = a2(3);
        let s1 = Module::simple(a.clone(), 0).unwrap();
        let s2 = Module::simple(a.clone(), 1).unwrap();
        assert_eq!(ext_dim(&s1, &s2, 1).unwrap(), 1);
        assert_eq!(ext_dim(&s2, &s1, 1).unwrap(), 0);
        assert_eq!(ext_dim(&s1, &s2, 0).unwrap(), hom_dim(&s1, &s2).unwrap());
    }

    #[test]
    fn pd_examples() {
        let d = dual_numbers(2);
        let k = Module::simple(d.clone(), 0).unwrap();
        assert_eq!(pd(&k, 8).unwrap(), Dim::AtLeast(8));
        assert_eq!(pd(&Module::regular(d.clone()), 8).unwrap(), Dim::Finite(0));
        assert_eq!(id(&Module::regular(d), 8).unwrap(), Dim::Finite(0));
        let a = a2(2);
        assert_eq!(pd(&Module::simple(a.clone(), 0).unwrap(), 4).unwrap(), Dim::Finite(1));
        assert_eq!(id(&Module::regular(a), 4).unwrap(), Dim::Finite(1));
        assert_eq!(Dim::AtLeast(8).to_string(), "≥8");
    }
}
