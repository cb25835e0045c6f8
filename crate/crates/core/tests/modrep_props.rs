mod common;

use common::*;
use proptest::prelude::*;
use reclift::modrep::{
    cokernel, hom_dim, image, injective_envelope, kernel, projective_cover, MorSeq,
};
use reclift::recollement::{idempotent_recollement, morn_recollement, FunctorHandle};
use reclift::{Algebra, FunctorName, Mat, Module, ModuleHom, MornAlgebra, Ses};
use std::sync::Arc;

fn sess(x: &Module) -> Vec<Ses> {
    let cover = projective_cover(x).unwrap();
    let (_, j) = kernel(&cover.epi);
    let (_, mono) = injective_envelope(x).unwrap();
    let (_, pr) = cokernel(&mono);
    vec![Ses::new(j, cover.epi).unwrap(), Ses::new(mono, pr).unwrap()]
}

/// Exactness at the middle, and injectivity/surjectivity at the ends, of
/// `F` applied to `s`.
fn image_exactness(f: &FunctorHandle, s: &Ses) -> (bool, bool, bool) {
    let fm = f.apply_hom(&s.mono).unwrap();
    let fe = f.apply_hom(&s.epi).unwrap();
    let middle = fe.matrix.mul(&fm.matrix).is_zero() && fe.matrix.cols() - fe.rank() == fm.rank();
    (fm.is_mono(), middle, fe.is_epi())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kernel_cokernel_dimensions(i in algebra_index(), s1 in any::<u64>(), s2 in any::<u64>(), c in any::<u64>()) {
        let alg = zoo()[i].clone();
        let x = random_module(&alg, s1);
        let y = random_module(&alg, s2);
        let f = random_hom(&x, &y, c);
        let (k, inc) = kernel(&f);
        let (q, pr) = cokernel(&f);
        prop_assert!(inc.intertwines() && pr.intertwines());
        prop_assert_eq!(x.dim(), k.dim() + f.rank());
        prop_assert_eq!(y.dim(), f.rank() + q.dim());
        prop_assert!(f.matrix.mul(&inc.matrix).is_zero());
        prop_assert!(pr.matrix.mul(&f.matrix).is_zero());
        let (im, e, m) = image(&f);
        prop_assert_eq!(im.dim(), f.rank());
        prop_assert_eq!(m.matrix.mul(&e.matrix), f.matrix.clone());
    }

    #[test]
    fn projective_cover_has_superfluous_kernel(i in algebra_index(), s in any::<u64>()) {
        let alg = zoo()[i].clone();
        let x = random_module(&alg, s);
        let cover = projective_cover(&x).unwrap();
        prop_assert!(cover.epi.is_epi() && cover.epi.intertwines());
        let (_, inc) = kernel(&cover.epi);
        let rad = cover.module.radical_basis().unwrap();
        let joint = Mat::hstack(x.field(), cover.module.dim(), &[&rad, &inc.matrix]).unwrap();
        prop_assert_eq!(joint.rank(), rad.rank());
    }

    #[test]
    fn duality_is_exact_and_contravariant(i in algebra_index(), s1 in any::<u64>(), s2 in any::<u64>()) {
        let alg = zoo()[i].clone();
        let x = random_module(&alg, s1);
        let y = random_module(&alg, s2);
        prop_assert_eq!(hom_dim(&x, &y).unwrap(), hom_dim(&y.dual(), &x.dual()).unwrap());
        for s in sess(&x) {
            let d = s.dual();
            d.verify().unwrap();
            prop_assert_eq!(d.left().dim(), s.right().dim());
        }
        let dd = x.dual().dual();
        prop_assert_eq!(dd.actions(), x.actions());
    }

    #[test]
    fn idempotent_functors_have_declared_exactness(i in algebra_index(), v in 0usize..3, s in any::<u64>()) {
        let alg = zoo()[i].clone();
        prop_assume!(v < alg.num_vertices());
        let e = alg.idempotents()[v].clone();
        let inst = idempotent_recollement(alg.clone(), &e, "e", 4).unwrap();
        let x = random_module(&alg, s);
        for ses in sess(&x) {
            // q = Γ ⊗ − is right exact, p = Hom(Γ, −) left exact, e exact
            let (_, mid, epi) = image_exactness(inst.functor(FunctorName::Q), &ses);
            prop_assert!(mid && epi);
            let (mono, mid, _) = image_exactness(inst.functor(FunctorName::P), &ses);
            prop_assert!(mono && mid);
            let (mono, mid, epi) = image_exactness(inst.functor(FunctorName::E), &ses);
            prop_assert!(mono && mid && epi);
        }
    }

    #[test]
    fn morseq_round_trip(n in 2usize..4, seeds in prop::collection::vec(any::<u64>(), 3)) {
        let base = dual_numbers(2);
        let morn = MornAlgebra::new(base.clone(), n).unwrap();
        let objects: Vec<Module> = (0..n).map(|k| random_module(&base, seeds[k % 3] ^ k as u64)).collect();
        let maps: Vec<ModuleHom> = (0..n - 1)
            .map(|k| random_hom(&objects[k], &objects[k + 1], seeds[(k + 1) % 3]))
            .collect();
        let s = MorSeq::new(objects, maps).unwrap();
        let m = s.to_module(&morn).unwrap();
        m.validate().unwrap();
        let back = MorSeq::from_module(&m, &morn).unwrap();
        prop_assert_eq!(back.objects.len(), n);
        for (a, b) in back.objects.iter().zip(&s.objects) {
            prop_assert_eq!(a.actions(), b.actions());
        }
        for (a, b) in back.maps.iter().zip(&s.maps) {
            prop_assert_eq!(&a.matrix, &b.matrix);
        }
    }
}

#[test]
fn morn_functors_are_exact_except_p() {
    let base = dual_numbers(2);
    let inst = morn_recollement(base, 2, 4).unwrap();
    let alg: Arc<Algebra> = inst.algebra(reclift::Side::B).clone();
    for s in 0..12u64 {
        let x = random_module(&alg, s);
        for ses in sess(&x) {
            for f in [FunctorName::Q, FunctorName::E] {
                assert_eq!(image_exactness(inst.functor(f), &ses), (true, true, true));
            }
            let (mono, mid, _) = image_exactness(inst.functor(FunctorName::P), &ses);
            assert!(mono && mid);
        }
    }
}
