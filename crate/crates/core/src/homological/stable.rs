//! Stable Hom (maps modulo those factoring through projectives), loops and
//! cofiber triangles.

use super::Gorenstein;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::modrep::{cokernel, direct_sum, hom_basis, kernel, projective_cover, Module, ModuleHom};

#[derive(Clone, Debug)]
pub struct StableHom {
    pub dim: usize,
    /// Homomorphisms whose classes form a basis of the stable Hom space.
    pub representatives: Vec<ModuleHom>,
}

/// `dim Hom(X, Y) - rank(Hom(X, P(Y)) -> Hom(X, Y))`: a map factors
/// through a projective iff it factors through the projective cover of `Y`.
pub fn stable_hom(x: &Module, y: &Module) -> Result<StableHom> {
    let f = x.field();
    let cover = projective_cover(y)?;
    let through: Vec<Vec<u32>> = hom_basis(x, &cover.module)?
        .iter()
        .map(|h| cover.epi.matrix.mul(&h.matrix).vec_col())
        .collect();
    let n = x.dim() * y.dim();
    let mut span = Mat::from_columns(f, n, &through).image_basis();
    let mut representatives = Vec::new();
    for h in hom_basis(x, y)? {
        let v = h.matrix.vec_col();
        let test = Mat::hstack(f, n, &[&span, &Mat::column(f, &v)])?;
        if test.rank() > span.cols() {
            span = test;
            representatives.push(h);
        }
    }
    Ok(StableHom {
        dim: representatives.len(),
        representatives,
    })
}

/// `ΩX`, the kernel of the projective cover.
pub fn loop_module(x: &Module) -> Result<Module> {
    Ok(kernel(&projective_cover(x)?.epi).0)
}

/// `g -f-> h -v-> Z -w-> Σg` with `Z = coker((f, -ι): g -> h ⊕ P)`.
#[derive(Clone, Debug)]
pub struct CofiberTriangle {
    pub cofiber: Module,
    pub v: ModuleHom,
    pub w: ModuleHom,
    pub suspension: Module,
}

pub fn cofiber_triangle(g: &Gorenstein, f: &ModuleHom) -> Result<CofiberTriangle> {
    if !g.is_gp(&f.source)? || !g.is_gp(&f.target)? {
        return Err(Error::input("cofiber triangle needs a map between GP modules"));
    }
    let fld = f.source.field();
    let (emb, _) = g.gp_embed_step(&f.source)?;
    let p = emb.target.clone();
    let sum = direct_sum(g.algebra(), &[f.target.clone(), p.clone()])?;
    let m = Mat::vstack(fld, f.source.dim(), &[&f.matrix, &emb.matrix.neg()])?;
    let glue = ModuleHom::new(f.source.clone(), sum.module.clone(), m)?;
    let (z, to_z) = cokernel(&glue);
    let v = to_z.compose(&sum.injections[0])?;
    let (sigma, to_sigma) = cokernel(&emb);
    // Z -> Σg induced by the projection h ⊕ P -> P -> Σg
    let onto = to_sigma.matrix.mul(&sum.projections[1].matrix);
    let section = to_z
        .matrix
        .right_inverse()
        .ok_or_else(|| Error::internal("cokernel projection not surjective"))?;
    let w = ModuleHom::new(z.clone(), sigma.clone(), onto.mul(&section))?;
    Ok(CofiberTriangle {
        cofiber: z,
        v,
        w,
        suspension: sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::test_algebras::*;
    use crate::modrep::{is_isomorphic, sum2};

    #[test]
    fn stable_hom_examples() {
        let a = dual_numbers(2);
        let k = Module::simple(a.clone(), 0).unwrap();
        let l = Module::regular(a.clone());
        assert_eq!(stable_hom(&k, &k).unwrap().dim, 1);
        assert_eq!(stable_hom(&l, &k).unwrap().dim, 0);
        assert_eq!(stable_hom(&k, &l).unwrap().dim, 0);
        assert_eq!(stable_hom(&sum2(&k, &l), &sum2(&k, &k)).unwrap().dim, 2);
    }

    #[test]
    fn cofiber_examples() {
        let a = dual_numbers(2);
        let g = Gorenstein::new(a.clone(), 8).unwrap();
        let k = Module::simple(a.clone(), 0).unwrap();
        let tri = cofiber_triangle(&g, &k.identity()).unwrap();
        assert!(tri.cofiber.is_projective().unwrap());
        let zero = ModuleHom::zero(&k, &k);
        let tri = cofiber_triangle(&g, &zero).unwrap();
        assert!(is_isomorphic(&tri.cofiber, &sum2(&k, &g.suspension(&k).unwrap())).is_iso());
        assert!(is_isomorphic(&g.suspension(&k).unwrap(), &k).is_iso());
        assert!(tri.v.intertwines() && tri.w.intertwines());
    }
}
