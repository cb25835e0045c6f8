//! The recollement `Mor_{n-1}(Λ) -> Mor_n(Λ) -> Mod Λ` on sequences, with
//! the functors read off directly from their componentwise formulas.

use std::sync::Arc;

use super::{Adjunction, Exactness, FunctorHandle, FunctorName, Provenance, RecollementInstance};
use crate::algebra::{Algebra, MornAlgebra};
use crate::error::{Error, Result};
use crate::homological::Gorenstein;
use crate::linalg::Mat;
use crate::modrep::{cokernel, kernel, Module, ModuleHom, MorSeq};

/// Components `g_j: X_j -> Y_j` of a `T_m`-module map.
fn components(f: &ModuleHom, morn: &MornAlgebra) -> Result<Vec<Mat>> {
    let s = MorSeq::component_bases(&f.source, morn)?;
    let t = MorSeq::component_bases(&f.target, morn)?;
    Ok(s.iter()
        .zip(&t)
        .map(|((bs, _), (_, pt))| pt.mul(&f.matrix).mul(bs))
        .collect())
}

/// The `T_m`-module map with the given components.
fn assemble(src: &Module, tgt: &Module, morn: &MornAlgebra, comps: &[Mat]) -> Result<ModuleHom> {
    let s = MorSeq::component_bases(src, morn)?;
    let t = MorSeq::component_bases(tgt, morn)?;
    let mut m = Mat::zeros(src.field(), tgt.dim(), src.dim());
    for (((_, ps), (bt, _)), g) in s.iter().zip(&t).zip(comps) {
        m = m.add(&bt.mul(g).mul(ps));
    }
    Ok(ModuleHom::raw(src.clone(), tgt.clone(), m))
}

fn pad_zero(s: &MorSeq) -> MorSeq {
    let z = Module::zero(s.base().clone());
    let last = s.objects.last().expect("nonempty").clone();
    let mut out = s.clone();
    out.maps.push(ModuleHom::zero(&last, &z));
    out.objects.push(z);
    out
}

fn drop_last(s: &MorSeq) -> MorSeq {
    let mut out = s.clone();
    out.objects.pop();
    out.maps.pop();
    out
}

/// `(Ker(f_{n-1}⋯f_1) -> ⋯ -> Ker f_{n-1})` with the kernel inclusions.
fn kernel_tower(s: &MorSeq) -> (MorSeq, Vec<Mat>) {
    let n = s.len();
    let last = &s.objects[n - 1];
    let mut objects = Vec::with_capacity(n - 1);
    let mut incls = Vec::with_capacity(n - 1);
    for j in 0..n - 1 {
        let to_end = ModuleHom::raw(s.objects[j].clone(), last.clone(), s.composite(j, n - 1));
        let (k, inc) = kernel(&to_end);
        objects.push(k);
        incls.push(inc.matrix);
    }
    let f = s.base().field();
    let maps = (0..n.saturating_sub(2))
        .map(|j| {
            let m = match incls[j + 1].left_inverse() {
                Some(li) => li.mul(&s.maps[j].matrix).mul(&incls[j]),
                None => Mat::zeros(f, objects[j + 1].dim(), objects[j].dim()),
            };
            ModuleHom::raw(objects[j].clone(), objects[j + 1].clone(), m)
        })
        .collect();
    (MorSeq { objects, maps }, incls)
}

fn id_comps(s: &MorSeq) -> Vec<Mat> {
    s.objects.iter().map(|o| Mat::identity(o.field(), o.dim())).collect()
}

fn left_inv(m: &Mat) -> Mat {
    m.left_inverse()
        .unwrap_or_else(|| Mat::zeros(m.field(), 0, m.rows()))
}

/// Builds `Mor_{n-1}(Λ) -> Mor_n(Λ) -> Mod Λ` (`n >= 2`):
///
/// * `i(X_1..X_{n-1}) = (X_1 -> ... -> X_{n-1} -> 0)`, `q` drops the last term,
/// * `p(X) = (Ker(f_{n-1}⋯f_1) -> ... -> Ker f_{n-1})`,
/// * `e(X) = X_n`, `l(Z) = (0 -> ... -> 0 -> Z)`, `r(Z) = (Z = Z = ... = Z)`.
pub fn morn_recollement(base: Arc<Algebra>, n: usize, bound: usize) -> Result<RecollementInstance> {
    if n < 2 {
        return Err(Error::input(format!("Mor_n recollement needs n >= 2, got {n}")));
    }
    let mb = Arc::new(MornAlgebra::new(base.clone(), n)?);
    let ma = Arc::new(MornAlgebra::new(base.clone(), n - 1)?);
    let fld = base.field();

    let i = {
        let (ma1, mb1, ma2) = (ma.clone(), mb.clone(), ma.clone());
        let mb2 = mb.clone();
        FunctorHandle::new(
            FunctorName::I,
            Exactness::Exact,
            Arc::new(move |y| pad_zero(&MorSeq::from_module(y, &ma1)?).to_module(&mb1)),
            Arc::new(move |f| {
                let s = pad_zero(&MorSeq::from_module(&f.source, &ma2)?).to_module(&mb2)?;
                let t = pad_zero(&MorSeq::from_module(&f.target, &ma2)?).to_module(&mb2)?;
                let mut comps = components(f, &ma2)?;
                comps.push(Mat::zeros(fld, 0, 0));
                assemble(&s, &t, &mb2, &comps)
            }),
        )
    };
    let q = {
        let (ma1, mb1, ma2, mb2) = (ma.clone(), mb.clone(), ma.clone(), mb.clone());
        FunctorHandle::new(
            FunctorName::Q,
            Exactness::Exact,
            Arc::new(move |x| drop_last(&MorSeq::from_module(x, &mb1)?).to_module(&ma1)),
            Arc::new(move |f| {
                let s = drop_last(&MorSeq::from_module(&f.source, &mb2)?).to_module(&ma2)?;
                let t = drop_last(&MorSeq::from_module(&f.target, &mb2)?).to_module(&ma2)?;
                let mut comps = components(f, &mb2)?;
                comps.pop();
                assemble(&s, &t, &ma2, &comps)
            }),
        )
    };
    let p = {
        let (ma1, mb1, ma2, mb2) = (ma.clone(), mb.clone(), ma.clone(), mb.clone());
        FunctorHandle::new(
            FunctorName::P,
            Exactness::LeftExact,
            Arc::new(move |x| kernel_tower(&MorSeq::from_module(x, &mb1)?).0.to_module(&ma1)),
            Arc::new(move |f| {
                let (ks, is) = kernel_tower(&MorSeq::from_module(&f.source, &mb2)?);
                let (kt, it) = kernel_tower(&MorSeq::from_module(&f.target, &mb2)?);
                let g = components(f, &mb2)?;
                let comps: Vec<Mat> = (0..n - 1)
                    .map(|j| left_inv(&it[j]).mul(&g[j]).mul(&is[j]))
                    .collect();
                assemble(&ks.to_module(&ma2)?, &kt.to_module(&ma2)?, &ma2, &comps)
            }),
        )
    };
    let e = {
        let (mb1, mb2) = (mb.clone(), mb.clone());
        FunctorHandle::new(
            FunctorName::E,
            Exactness::Exact,
            Arc::new(move |x| Ok(MorSeq::from_module(x, &mb1)?.objects.pop().expect("n >= 2"))),
            Arc::new(move |f| {
                let s = MorSeq::from_module(&f.source, &mb2)?.objects.pop().expect("n >= 2");
                let t = MorSeq::from_module(&f.target, &mb2)?.objects.pop().expect("n >= 2");
                let g = components(f, &mb2)?.pop().expect("n >= 2");
                Ok(ModuleHom::raw(s, t, g))
            }),
        )
    };
    let l = {
        let (mb1, mb2) = (mb.clone(), mb.clone());
        let put_last = move |z: &Module, mb: &MornAlgebra| -> Result<Module> {
            let mut s = MorSeq::zero(z.algebra(), n);
            s.objects[n - 1] = z.clone();
            s.maps[n - 2] = ModuleHom::zero(&s.objects[n - 2], z);
            s.to_module(mb)
        };
        FunctorHandle::new(
            FunctorName::L,
            Exactness::Exact,
            Arc::new(move |z| put_last(z, &mb1)),
            Arc::new(move |f| {
                let s = put_last(&f.source, &mb2)?;
                let t = put_last(&f.target, &mb2)?;
                let mut comps = vec![Mat::zeros(fld, 0, 0); n - 1];
                comps.push(f.matrix.clone());
                assemble(&s, &t, &mb2, &comps)
            }),
        )
    };
    let constant = move |z: &Module, mb: &MornAlgebra| -> Result<Module> {
        MorSeq {
            objects: vec![z.clone(); n],
            maps: vec![z.identity(); n - 1],
        }
        .to_module(mb)
    };
    let r = {
        let (mb1, mb2) = (mb.clone(), mb.clone());
        FunctorHandle::new(
            FunctorName::R,
            Exactness::Exact,
            Arc::new(move |z| constant(z, &mb1)),
            Arc::new(move |f| {
                let s = constant(&f.source, &mb2)?;
                let t = constant(&f.target, &mb2)?;
                assemble(&s, &t, &mb2, &vec![f.matrix.clone(); n])
            }),
        )
    };

    // q ⊣ i: X -> iqX is (1, ..., 1, 0); qiY = Y
    let qi = {
        let (mb1, ma2) = (mb.clone(), ma.clone());
        let (i1, q1) = (i.clone(), q.clone());
        Adjunction {
            left: FunctorName::Q,
            right: FunctorName::I,
            unit: Arc::new(move |x| {
                let s = MorSeq::from_module(x, &mb1)?;
                let target = i1.apply(&q1.apply(x)?)?;
                let mut comps = id_comps(&s);
                let last = comps.len() - 1;
                comps[last] = Mat::zeros(fld, 0, s.objects[last].dim());
                assemble(x, &target, &mb1, &comps)
            }),
            counit: {
                let (i2, q2) = (i.clone(), q.clone());
                Arc::new(move |y| {
                    let s = MorSeq::from_module(y, &ma2)?;
                    let source = q2.apply(&i2.apply(y)?)?;
                    assemble(&source, y, &ma2, &id_comps(&s))
                })
            },
        }
    };
    // i ⊣ p: piY = Y; ipX -> X is the kernel inclusions, then 0 -> X_n
    let ip = {
        let (ma1, mb1) = (ma.clone(), mb.clone());
        let (i1, p1, i2, p2) = (i.clone(), p.clone(), i.clone(), p.clone());
        Adjunction {
            left: FunctorName::I,
            right: FunctorName::P,
            unit: Arc::new(move |y| {
                let s = MorSeq::from_module(y, &ma1)?;
                let target = p1.apply(&i1.apply(y)?)?;
                assemble(y, &target, &ma1, &id_comps(&s))
            }),
            counit: Arc::new(move |x| {
                let s = MorSeq::from_module(x, &mb1)?;
                let (_, incls) = kernel_tower(&s);
                let source = i2.apply(&p2.apply(x)?)?;
                let mut comps = incls;
                comps.push(Mat::zeros(fld, s.objects[n - 1].dim(), 0));
                assemble(&source, x, &mb1, &comps)
            }),
        }
    };
    // l ⊣ e: elZ = Z; leX -> X is (0, ..., 0, 1)
    let le = {
        let (mb1, l1, e1, l2, e2) = (mb.clone(), l.clone(), e.clone(), l.clone(), e.clone());
        Adjunction {
            left: FunctorName::L,
            right: FunctorName::E,
            unit: Arc::new(move |z| {
                let target = e1.apply(&l1.apply(z)?)?;
                Ok(ModuleHom::raw(z.clone(), target, Mat::identity(fld, z.dim())))
            }),
            counit: Arc::new(move |x| {
                let s = MorSeq::from_module(x, &mb1)?;
                let source = l2.apply(&e2.apply(x)?)?;
                let mut comps: Vec<Mat> = s.objects[..n - 1]
                    .iter()
                    .map(|o| Mat::zeros(fld, o.dim(), 0))
                    .collect();
                comps.push(Mat::identity(fld, s.objects[n - 1].dim()));
                assemble(&source, x, &mb1, &comps)
            }),
        }
    };
    // e ⊣ r: X -> reX is (f_{n-1}⋯f_j)_j; erZ = Z
    let er = {
        let (mb1, r1, e1, r2, e2) = (mb.clone(), r.clone(), e.clone(), r.clone(), e.clone());
        Adjunction {
            left: FunctorName::E,
            right: FunctorName::R,
            unit: Arc::new(move |x| {
                let s = MorSeq::from_module(x, &mb1)?;
                let target = r1.apply(&e1.apply(x)?)?;
                let comps: Vec<Mat> = (0..n).map(|j| s.composite(j, n - 1)).collect();
                assemble(x, &target, &mb1, &comps)
            }),
            counit: Arc::new(move |z| {
                let source = e2.apply(&r2.apply(z)?)?;
                Ok(ModuleHom::raw(source, z.clone(), Mat::identity(fld, z.dim())))
            }),
        }
    };

    let mut inst = RecollementInstance::assemble(
        Provenance::Morn { n },
        [ma.algebra.clone(), mb.algebra.clone(), base],
        vec![q, i, p, l, e, r],
        vec![qi, ip, le, er],
        bound,
    )?;
    inst.morn = Some(mb);
    Ok(inst)
}

/// Structural Gorenstein-projectivity test for a sequence: every map is
/// injective, every term is GP and every cokernel `Coker f_i` is GP.
pub fn gp_structural_test_morn(base: &Gorenstein, s: &MorSeq) -> Result<bool> {
    for f in &s.maps {
        if !f.is_mono() {
            return Ok(false);
        }
    }
    for x in &s.objects {
        if !base.is_gp(x)? {
            return Ok(false);
        }
    }
    for f in &s.maps {
        if !base.is_gp(&cokernel(f).0)? {
            return Ok(false);
        }
    }
    Ok(true)
}
