//! Isomorphism testing by searching the Hom space for an invertible map.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_basis, hom_dim, same_algebra, Module, ModuleHom};
use crate::linalg::Mat;

const RANDOM_TRIES: usize = 48;
const EXHAUSTIVE_MAX_DIM: usize = 12;
const EXHAUSTIVE_MAX_COUNT: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub enum IsoResult {
    Iso(ModuleHom),
    NotIso,
    /// Search budget exhausted without a decision.
    Unknown,
}

impl IsoResult {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoResult::Iso(_))
    }

    pub fn is_not_iso(&self) -> bool {
        matches!(self, IsoResult::NotIso)
    }
}

/// Decides `X ≅ Y`: cheap invariants first, then random and (for small Hom
/// spaces) exhaustive search for an invertible intertwiner.
pub fn is_isomorphic(x: &Module, y: &Module) -> IsoResult {
    if !same_algebra(x.algebra(), y.algebra()) || x.dim() != y.dim() {
        return IsoResult::NotIso;
    }
    if x.dim() == 0 {
        return IsoResult::Iso(ModuleHom::raw(
            x.clone(),
            y.clone(),
            Mat::zeros(x.field(), 0, 0),
        ));
    }
    if x.vertex_dims() != y.vertex_dims() {
        return IsoResult::NotIso;
    }
    if x == y {
        return IsoResult::Iso(ModuleHom::raw(
            x.clone(),
            y.clone(),
            Mat::identity(x.field(), x.dim()),
        ));
    }
    let rank_profile = |m: &Module| -> Vec<usize> { m.actions().iter().map(Mat::rank).collect() };
    if rank_profile(x) != rank_profile(y) {
        return IsoResult::NotIso;
    }
    let (Ok(exy), Ok(eyx), Ok(exx), Ok(eyy)) =
        (hom_dim(x, y), hom_dim(y, x), hom_dim(x, x), hom_dim(y, y))
    else {
        return IsoResult::Unknown;
    };
    if !(exy == eyx && exy == exx && exx == eyy) {
        return IsoResult::NotIso;
    }
    let basis = match hom_basis(x, y) {
        Ok(b) => b,
        Err(_) => return IsoResult::Unknown,
    };
    let f = x.field();
    let p = f.modulus();
    let combine = |coeffs: &[u32]| {
        let mut m = Mat::zeros(f, y.dim(), x.dim());
        for (h, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                m.add_scaled(&h.matrix, c);
            }
        }
        m
    };
    for h in &basis {
        if h.matrix.is_invertible() {
            return IsoResult::Iso(h.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0150);
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<u32> = (0..basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let m = combine(&coeffs);
        if m.is_invertible() {
            return IsoResult::Iso(ModuleHom::raw(x.clone(), y.clone(), m));
        }
    }
    let count = (p as u64).checked_pow(basis.len() as u32);
    match count {
        Some(c) if basis.len() <= EXHAUSTIVE_MAX_DIM && c <= EXHAUSTIVE_MAX_COUNT => {
            for code in 1..c {
                let mut rest = code;
                let coeffs: Vec<u32> = (0..basis.len())
                    .map(|_| {
                        let d = (rest % p as u64) as u32;
                        rest /= p as u64;
                        d
                    })
                    .collect();
                let m = combine(&coeffs);
                if m.is_invertible() {
                    return IsoResult::Iso(ModuleHom::raw(x.clone(), y.clone(), m));
                }
            }
            IsoResult::NotIso
        }
        _ => IsoResult::Unknown,
    }
}
