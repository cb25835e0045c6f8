//! Restriction of scalars, tensor products and Hom over bimodules.

use std::sync::Arc;

use super::{hom_matrices, same_algebra, Module, ModuleHom};
use crate::algebra::{Algebra, AlgebraMap, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Restriction along `φ: A -> B` of a `B`-module.
pub fn restrict(x: &Module, phi: &AlgebraMap) -> Result<Module> {
    if !same_algebra(x.algebra(), &phi.target) {
        return Err(Error::input("module is not over the target of the map"));
    }
    let action = (0..phi.source.dim())
        .map(|i| x.action_of(&phi.matrix.col(i)))
        .collect();
    Ok(Module::raw(phi.source.clone(), x.dim(), action))
}

pub fn restrict_hom(f: &ModuleHom, phi: &AlgebraMap) -> Result<ModuleHom> {
    Ok(ModuleHom::raw(
        restrict(&f.source, phi)?,
        restrict(&f.target, phi)?,
        f.matrix.clone(),
    ))
}

/// `M ⊗_B Y` as a quotient of `M ⊗_k Y`.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    pub module: Module,
    /// `dim x (dim M · dim Y)`: class of `m ⊗ y` is `proj · kron(m, y)`.
    pub proj: Mat,
    /// Right inverse of `proj` (standard vectors of the complement).
    pub section: Mat,
    pub dim_m: usize,
    pub dim_y: usize,
}

impl TensorProduct {
    /// Coordinates of the class of `m ⊗ y`.
    pub fn element(&self, m: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.module.field();
        let t = Mat::kron(&Mat::column(f, m), &Mat::column(f, y));
        self.proj.mul_vec(&t.col(0))
    }
}

pub fn tensor_over(m: &Bimodule, y: &Module) -> Result<TensorProduct> {
    if !same_algebra(&m.right_alg, y.algebra()) {
        return Err(Error::input("bimodule right algebra differs from module algebra"));
    }
    let f = y.field();
    let (dm, dy) = (m.dim, y.dim());
    let n = dm * dy;
    let id_m = Mat::identity(f, dm);
    let id_y = Mat::identity(f, dy);
    let mut rel_blocks = Vec::new();
    for g in m.right_alg.generators() {
        let lhs = Mat::kron(&m.right_action_by(g), &id_y);
        let rhs = Mat::kron(&id_m, &y.action_of(g));
        rel_blocks.push(lhs.sub(&rhs));
    }
    let refs: Vec<&Mat> = rel_blocks.iter().collect();
    let relations = if refs.is_empty() {
        Mat::zeros(f, n, 0)
    } else {
        Mat::hstack(f, n, &refs)?.image_basis()
    };
    let comp = relations.complement_basis();
    let change = Mat::hstack(f, n, &[&relations, &comp])?;
    let inv = change
        .inverse()
        .ok_or_else(|| Error::internal("relations and complement do not span"))?;
    let proj = inv.block(relations.cols(), 0, comp.cols(), n);
    let action = (0..m.left_alg.dim())
        .map(|i| proj.mul(&Mat::kron(&m.left[i], &id_y)).mul(&comp))
        .collect();
    let module = Module::raw(m.left_alg.clone(), comp.cols(), action);
    Ok(TensorProduct {
        module,
        proj,
        section: comp,
        dim_m: dm,
        dim_y: dy,
    })
}

/// `M ⊗_B f` between previously computed tensor products.
pub fn tensor_map(
    f: &ModuleHom,
    source: &TensorProduct,
    target: &TensorProduct,
) -> ModuleHom {
    let fld = f.source.field();
    let id_m = Mat::identity(fld, source.dim_m);
    let matrix = target
        .proj
        .mul(&Mat::kron(&id_m, &f.matrix))
        .mul(&source.section);
    ModuleHom::raw(source.module.clone(), target.module.clone(), matrix)
}

/// `Hom_B(M, Y)` for a `B`-`A`-bimodule `M`, as a left `A`-module via
/// `(a·F)(m) = F(m·a)`.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: Module,
    /// Basis maps `F_k` (`dim Y x dim M`).
    pub basis: Vec<Mat>,
    /// Columns `vec(F_k)`.
    pub(crate) stacked: Mat,
    pub(crate) coords: Mat,
    pub dim_m: usize,
    pub dim_y: usize,
}

impl HomModule {
    /// The map `M -> Y` with the given coordinates.
    pub fn map_at(&self, c: &[u32]) -> Mat {
        let f = self.module.field();
        Mat::unvec_col(f, self.dim_y, self.dim_m, &self.stacked.mul_vec(c))
    }

    /// Coordinates of a `B`-linear map `M -> Y` (which must lie in the span).
    pub fn coords_of(&self, map: &Mat) -> Vec<u32> {
        self.coords.mul_vec(&map.vec_col())
    }
}

pub fn hom_over(m: &Bimodule, y: &Module) -> Result<HomModule> {
    if !same_algebra(&m.left_alg, y.algebra()) {
        return Err(Error::input("bimodule left algebra differs from module algebra"));
    }
    let f = y.field();
    let (dm, dy) = (m.dim, y.dim());
    let mmod = Module::raw(m.left_alg.clone(), dm, m.left.clone());
    let basis = hom_matrices(&mmod, y)?;
    let cols: Vec<Vec<u32>> = basis.iter().map(Mat::vec_col).collect();
    let stacked = Mat::from_columns(f, dm * dy, &cols);
    let coords = if basis.is_empty() {
        Mat::zeros(f, 0, dm * dy)
    } else {
        stacked
            .left_inverse()
            .ok_or_else(|| Error::internal("hom basis dependent"))?
    };
    let id_y = Mat::identity(f, dy);
    let action = (0..m.right_alg.dim())
        .map(|i| {
            coords
                .mul(&Mat::kron(&m.right[i].transpose(), &id_y))
                .mul(&stacked)
        })
        .collect();
    let module = Module::raw(m.right_alg.clone(), basis.len(), action);
    Ok(HomModule {
        module,
        basis,
        stacked,
        coords,
        dim_m: dm,
        dim_y: dy,
    })
}

/// `Hom_B(M, f)` between previously computed Hom modules.
pub fn hom_over_map(f: &ModuleHom, source: &HomModule, target: &HomModule) -> ModuleHom {
    let fld = f.source.field();
    let id_m = Mat::identity(fld, source.dim_m);
    let matrix = target
        .coords
        .mul(&Mat::kron(&id_m, &f.matrix))
        .mul(&source.stacked);
    ModuleHom::raw(source.module.clone(), target.module.clone(), matrix)
}

/// The `(Λ, eΛe)`-bimodule `Λe` (`embed` maps corner coordinates into `Λ`).
pub fn left_corner_bimodule(
    alg: &Arc<Algebra>,
    corner: &Arc<Algebra>,
    embed: &Mat,
    e: &[u32],
) -> Result<Bimodule> {
    let basis = alg.right_mult_by(e).image_basis();
    Bimodule::from_subspace(
        alg,
        &basis,
        &crate::algebra::AlgebraMapLike {
            alg: alg.clone(),
            matrix: Mat::identity(alg.field(), alg.dim()),
        },
        &crate::algebra::AlgebraMapLike {
            alg: corner.clone(),
            matrix: embed.clone(),
        },
    )
}

/// The `(eΛe, Λ)`-bimodule `eΛ`.
pub fn right_corner_bimodule(
    alg: &Arc<Algebra>,
    corner: &Arc<Algebra>,
    embed: &Mat,
    e: &[u32],
) -> Result<Bimodule> {
    let basis = alg.left_mult_by(e).image_basis();
    Bimodule::from_subspace(
        alg,
        &basis,
        &crate::algebra::AlgebraMapLike {
            alg: corner.clone(),
            matrix: embed.clone(),
        },
        &crate::algebra::AlgebraMapLike {
            alg: alg.clone(),
            matrix: Mat::identity(alg.field(), alg.dim()),
        },
    )
}

#[cfg(test)]
mod tests {
    use super::super::test_algebras::*;
    use super::super::{hom_dim, is_isomorphic, projective_cover, Module};
    use super::*;

    #[test]
    fn tensor_with_regular_is_identity() {
        let a = a2(2);
        let reg = Bimodule::regular(a.clone());
        for y in [
            Module::simple(a.clone(), 0).unwrap(),
            Module::projective(a.clone(), 0).unwrap(),
            Module::injective(a.clone(), 1).unwrap(),
        ] {
            let t = tensor_over(&reg, &y).unwrap();
            assert!(is_isomorphic(&t.module, &y).is_iso());
            let h = hom_over(&reg, &y).unwrap();
            assert!(is_isomorphic(&h.module, &y).is_iso());
        }
    }

    #[test]
    fn left_extension_from_corner() {
        let a = a2(3);
        let e2 = a.idempotents()[1].clone();
        let c = a.corner(&e2).unwrap();
        let bim = left_corner_bimodule(&a, &c.algebra, &c.embedding, &e2).unwrap();
        let k = Module::regular(c.algebra.clone());
        let t = tensor_over(&bim, &k).unwrap();
        assert_eq!(t.module.dim(), 1);
        let e1 = a.idempotents()[0].clone();
        let c1 = a.corner(&e1).unwrap();
        let bim1 = left_corner_bimodule(&a, &c1.algebra, &c1.embedding, &e1).unwrap();
        let t1 = tensor_over(&bim1, &Module::regular(c1.algebra.clone())).unwrap();
        assert_eq!(t1.module.dim(), 2);
    }

    #[test]
    fn restriction_along_quotient() {
        let a = a2(2);
        let e2 = a.idempotents()[1].clone();
        let ideal = a.two_sided_ideal(&e2).unwrap();
        let (q, pi) = a.quotient(&ideal).unwrap();
        let r = restrict(&Module::regular(q), &pi).unwrap();
        r.validate().unwrap();
        assert!(is_isomorphic(&r, &Module::simple(a.clone(), 0).unwrap()).is_iso());
        let id = AlgebraMap::identity(a.clone());
        let p = Module::projective(a, 0).unwrap();
        assert_eq!(restrict(&p, &id).unwrap(), p);
    }

    #[test]
    fn tensor_and_hom_maps_are_module_maps() {
        let a = dual_numbers(2);
        let reg = Bimodule::regular(a.clone());
        let k = Module::simple(a.clone(), 0).unwrap();
        let cover = projective_cover(&k).unwrap();
        let ts = tensor_over(&reg, &cover.module).unwrap();
        let tt = tensor_over(&reg, &k).unwrap();
        let tm = tensor_map(&cover.epi, &ts, &tt);
        assert!(tm.intertwines() && tm.is_epi());
        let hs = hom_over(&reg, &cover.module).unwrap();
        let ht = hom_over(&reg, &k).unwrap();
        let hm = hom_over_map(&cover.epi, &hs, &ht);
        assert!(hm.intertwines());
        assert_eq!(hom_dim(&hs.module, &ht.module).unwrap(), 1);
    }
}
