//! The recollement `Mod Λ/ΛeΛ -> Mod Λ -> Mod eΛe` of an idempotent.

use std::sync::Arc;

use super::{Adjunction, Exactness, FunctorHandle, FunctorName, Provenance, RecollementInstance};
use crate::algebra::{Algebra, Bimodule};
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::modrep::{
    hom_over, hom_over_map, left_corner_bimodule, restrict, restrict_hom,
    right_corner_bimodule, tensor_map, tensor_over, Module, ModuleHom,
};

/// `e·X` with its `eΛe`-action, the basis `E` of `eX` inside `X` and a left
/// inverse of `E`.
fn corner_part(
    x: &Module,
    e: &[u32],
    corner: &Arc<Algebra>,
    embedding: &Mat,
) -> (Module, Mat, Mat) {
    let f = x.field();
    let basis = x.action_of(e).image_basis();
    let linv = if basis.cols() == 0 {
        Mat::zeros(f, 0, x.dim())
    } else {
        basis.left_inverse().expect("independent columns")
    };
    let action = (0..corner.dim())
        .map(|c| linv.mul(&x.action_of(&embedding.col(c))).mul(&basis))
        .collect();
    (Module::raw(corner.clone(), basis.cols(), action), basis, linv)
}

fn stack_rows(f: crate::linalg::Field, cols: usize, blocks: &[Mat]) -> Result<Mat> {
    let refs: Vec<&Mat> = blocks.iter().collect();
    Mat::vstack(f, cols, &refs)
}

fn stack_cols(f: crate::linalg::Field, rows: usize, blocks: &[Mat]) -> Result<Mat> {
    let refs: Vec<&Mat> = blocks.iter().collect();
    Mat::hstack(f, rows, &refs)
}

/// Coordinates of `x` in the column basis `basis`.
fn coords_in(basis: &Mat, x: &[u32]) -> Result<Vec<u32>> {
    if basis.cols() == 0 {
        return Ok(vec![]);
    }
    let linv = basis
        .left_inverse()
        .ok_or_else(|| Error::internal("dependent basis"))?;
    let c = linv.mul_vec(x);
    if basis.mul_vec(&c) != x {
        return Err(Error::internal("element outside the span"));
    }
    Ok(c)
}

/// Builds the six functors of the idempotent recollement together with the
/// units and counits of `q ⊣ i ⊣ p` and `l ⊣ e ⊣ r`.
///
/// `label` names the idempotent in reports. `bound` caps the resolutions
/// used for the Gorenstein profiles of the three algebras.
pub fn idempotent_recollement(
    alg: Arc<Algebra>,
    e: &[u32],
    label: &str,
    bound: usize,
) -> Result<RecollementInstance> {
    build(alg, e, label, false, bound)
}

/// `T = [[A, M], [0, B]]` with `e` the idempotent of the `A` corner, so the
/// outer categories are `Mod B` (via `i`) and `Mod A` (via `e`).
pub fn triangular_recollement(
    a: &Algebra,
    b: &Algebra,
    m: &Bimodule,
    bound: usize,
) -> Result<RecollementInstance> {
    let t = Arc::new(Algebra::triangular_matrix(a, b, m)?);
    let names: Vec<&str> = t
        .vertex_labels()
        .iter()
        .filter(|v| v.starts_with("a."))
        .map(String::as_str)
        .collect();
    let e = t.idempotent_sum(&names)?;
    build(t, &e, "e_A", true, bound)
}

fn build(
    alg: Arc<Algebra>,
    e: &[u32],
    label: &str,
    triangular: bool,
    bound: usize,
) -> Result<RecollementInstance> {
    let fld = alg.field();
    let corner = alg.corner(e)?;
    let c_alg = corner.algebra.clone();
    let ideal = alg.two_sided_ideal(e)?;
    let (gamma, pi) = alg.quotient(&ideal)?;
    let pi = Arc::new(pi);
    let e: Arc<[u32]> = e.into();
    let embedding = Arc::new(corner.embedding.clone());

    // Γ = Λ/ΛeΛ as (Γ, Λ)- and (Λ, Γ)-bimodule
    let dg = gamma.dim();
    let via_pi = |mats: &dyn Fn(&[u32]) -> Mat| -> Vec<Mat> {
        (0..alg.dim()).map(|l| mats(&pi.matrix.col(l))).collect()
    };
    let gamma_left: Vec<Mat> = (0..dg).map(|i| gamma.left_mult(i).clone()).collect();
    let gamma_right: Vec<Mat> = (0..dg).map(|i| gamma.right_mult(i).clone()).collect();
    let bq = Arc::new(Bimodule::new(
        gamma.clone(),
        alg.clone(),
        dg,
        gamma_left,
        via_pi(&|x| gamma.right_mult_by(x)),
    )?);
    let bp = Arc::new(Bimodule::new(
        alg.clone(),
        gamma.clone(),
        dg,
        via_pi(&|x| gamma.left_mult_by(x)),
        gamma_right,
    )?);
    // Λe as (Λ, eΛe)- and eΛ as (eΛe, Λ)-bimodule
    let bl = Arc::new(left_corner_bimodule(&alg, &c_alg, &embedding, &e)?);
    let br = Arc::new(right_corner_bimodule(&alg, &c_alg, &embedding, &e)?);
    let basis_l = Arc::new(alg.right_mult_by(&e).image_basis());
    let basis_r = Arc::new(alg.left_mult_by(&e).image_basis());
    let e_in_l = coords_in(&basis_l, &e)?;
    let e_in_r = coords_in(&basis_r, &e)?;
    let u: Vec<u32> = gamma.unit().to_vec();

    let i = {
        let (p1, p2) = (pi.clone(), pi.clone());
        FunctorHandle::new(
            FunctorName::I,
            Exactness::Exact,
            Arc::new(move |y| restrict(y, &p1)),
            Arc::new(move |f| restrict_hom(f, &p2)),
        )
    };
    let q = {
        let (b1, b2) = (bq.clone(), bq.clone());
        FunctorHandle::new(
            FunctorName::Q,
            Exactness::RightExact,
            Arc::new(move |x| Ok(tensor_over(&b1, x)?.module)),
            Arc::new(move |f| {
                Ok(tensor_map(f, &tensor_over(&b2, &f.source)?, &tensor_over(&b2, &f.target)?))
            }),
        )
    };
    let p = {
        let (b1, b2) = (bp.clone(), bp.clone());
        FunctorHandle::new(
            FunctorName::P,
            Exactness::LeftExact,
            Arc::new(move |x| Ok(hom_over(&b1, x)?.module)),
            Arc::new(move |f| {
                Ok(hom_over_map(f, &hom_over(&b2, &f.source)?, &hom_over(&b2, &f.target)?))
            }),
        )
    };
    let ef = {
        let (e1, e2) = (e.clone(), e.clone());
        let (c1, c2) = (c_alg.clone(), c_alg.clone());
        let (m1, m2) = (embedding.clone(), embedding.clone());
        FunctorHandle::new(
            FunctorName::E,
            Exactness::Exact,
            Arc::new(move |x| Ok(corner_part(x, &e1, &c1, &m1).0)),
            Arc::new(move |f| {
                let (s, bs, _) = corner_part(&f.source, &e2, &c2, &m2);
                let (t, _, lt) = corner_part(&f.target, &e2, &c2, &m2);
                Ok(ModuleHom::raw(s, t, lt.mul(&f.matrix).mul(&bs)))
            }),
        )
    };
    let l = {
        let (b1, b2) = (bl.clone(), bl.clone());
        FunctorHandle::new(
            FunctorName::L,
            Exactness::RightExact,
            Arc::new(move |z| Ok(tensor_over(&b1, z)?.module)),
            Arc::new(move |f| {
                Ok(tensor_map(f, &tensor_over(&b2, &f.source)?, &tensor_over(&b2, &f.target)?))
            }),
        )
    };
    let r = {
        let (b1, b2) = (br.clone(), br.clone());
        FunctorHandle::new(
            FunctorName::R,
            Exactness::LeftExact,
            Arc::new(move |z| Ok(hom_over(&b1, z)?.module)),
            Arc::new(move |f| {
                Ok(hom_over_map(f, &hom_over(&b2, &f.source)?, &hom_over(&b2, &f.target)?))
            }),
        )
    };

    // q ⊣ i: x ↦ 1 ⊗ x and γ ⊗ y ↦ γy
    let qi = {
        let (b1, b2, p1, p2, u1) = (bq.clone(), bq.clone(), pi.clone(), pi.clone(), u.clone());
        Adjunction {
            left: FunctorName::Q,
            right: FunctorName::I,
            unit: Arc::new(move |x| {
                let t = tensor_over(&b1, x)?;
                let m = t.proj.mul(&Mat::kron(&Mat::column(fld, &u1), &Mat::identity(fld, x.dim())));
                Ok(ModuleHom::raw(x.clone(), restrict(&t.module, &p1)?, m))
            }),
            counit: Arc::new(move |y| {
                let iy = restrict(y, &p2)?;
                let t = tensor_over(&b2, &iy)?;
                let m = stack_cols(fld, y.dim(), y.actions())?.mul(&t.section);
                Ok(ModuleHom::raw(t.module, y.clone(), m))
            }),
        }
    };
    // i ⊣ p: y ↦ (γ ↦ γy) and F ↦ F(1)
    let ip = {
        let (b1, b2, p1, pi_u) = (bp.clone(), bp.clone(), pi.clone(), pi.clone());
        let u2 = u.clone();
        Adjunction {
            left: FunctorName::I,
            right: FunctorName::P,
            unit: Arc::new(move |y| {
                let iy = restrict(y, &p1)?;
                let h = hom_over(&b1, &iy)?;
                let m = h.coords.mul(&stack_rows(fld, y.dim(), y.actions())?);
                Ok(ModuleHom::raw(y.clone(), h.module, m))
            }),
            counit: Arc::new(move |x| {
                let h = hom_over(&b2, x)?;
                let row = Mat::column(fld, &u2).transpose();
                let m = Mat::kron(&row, &Mat::identity(fld, x.dim())).mul(&h.stacked);
                Ok(ModuleHom::raw(restrict(&h.module, &pi_u)?, x.clone(), m))
            }),
        }
    };
    // l ⊣ e: z ↦ e ⊗ z and λe ⊗ x ↦ λe·x
    let le = {
        let (b1, b2) = (bl.clone(), bl.clone());
        let (e1, e2) = (e.clone(), e.clone());
        let (c1, c2) = (c_alg.clone(), c_alg.clone());
        let (m1, m2) = (embedding.clone(), embedding.clone());
        let bl_basis = basis_l.clone();
        let el = e_in_l.clone();
        Adjunction {
            left: FunctorName::L,
            right: FunctorName::E,
            unit: Arc::new(move |z| {
                let t = tensor_over(&b1, z)?;
                let elem = t.proj.mul(&Mat::kron(&Mat::column(fld, &el), &Mat::identity(fld, z.dim())));
                let (elz, _, linv) = corner_part(&t.module, &e1, &c1, &m1);
                Ok(ModuleHom::raw(z.clone(), elz, linv.mul(&elem)))
            }),
            counit: Arc::new(move |x| {
                let (ex, basis, _) = corner_part(x, &e2, &c2, &m2);
                let t = tensor_over(&b2, &ex)?;
                let blocks: Vec<Mat> = (0..bl_basis.cols())
                    .map(|k| x.action_of(&bl_basis.col(k)).mul(&basis))
                    .collect();
                let m = stack_cols(fld, x.dim(), &blocks)?.mul(&t.section);
                Ok(ModuleHom::raw(t.module, x.clone(), m))
            }),
        }
    };
    // e ⊣ r: x ↦ (eλ ↦ eλ·x) and F ↦ F(e)
    let er = {
        let (b1, b2) = (br.clone(), br.clone());
        let (e1, e2) = (e.clone(), e.clone());
        let (c1, c2) = (c_alg.clone(), c_alg.clone());
        let (m1, m2) = (embedding.clone(), embedding.clone());
        let br_basis = basis_r.clone();
        let er_coords = e_in_r.clone();
        Adjunction {
            left: FunctorName::E,
            right: FunctorName::R,
            unit: Arc::new(move |x| {
                let (ex, _, linv) = corner_part(x, &e1, &c1, &m1);
                let h = hom_over(&b1, &ex)?;
                let blocks: Vec<Mat> = (0..br_basis.cols())
                    .map(|k| linv.mul(&x.action_of(&br_basis.col(k))))
                    .collect();
                let m = h.coords.mul(&stack_rows(fld, x.dim(), &blocks)?);
                Ok(ModuleHom::raw(x.clone(), h.module, m))
            }),
            counit: Arc::new(move |z| {
                let h = hom_over(&b2, z)?;
                let (erz, basis, _) = corner_part(&h.module, &e2, &c2, &m2);
                let row = Mat::column(fld, &er_coords).transpose();
                let m = Mat::kron(&row, &Mat::identity(fld, z.dim()))
                    .mul(&h.stacked)
                    .mul(&basis);
                Ok(ModuleHom::raw(erz, z.clone(), m))
            }),
        }
    };

    let degenerate = if corner.algebra.dim() == 0 {
        Some("e = 0: the quotient side C is zero and i is an equivalence".to_string())
    } else if gamma.dim() == 0 {
        Some("e = 1: the ideal is everything and the A side is zero".to_string())
    } else {
        None
    };
    let mut inst = RecollementInstance::assemble(
        Provenance::Idempotent {
            idempotent: label.to_string(),
            triangular,
        },
        [gamma, alg, c_alg],
        vec![q, i, p, l, ef, r],
        vec![qi, ip, le, er],
        bound,
    )?;
    inst.degenerate = degenerate;
    Ok(inst)
}
