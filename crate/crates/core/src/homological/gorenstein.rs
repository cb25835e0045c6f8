//! Gorenstein profile, GP/GI tests and the approximation sequences of the
//! Gorenstein projective and injective model structures.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{ext_dim_from, id, pd, projective_resolution, Dim};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::modrep::{
    cokernel, direct_sum, hom_basis, kernel, projective_cover, Module, ModuleHom, Ses,
};

/// Injective dimensions of the regular module on both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinProfile {
    /// `id` of `Λ` as a left module.
    pub d_left: Dim,
    /// `id` of `Λ` as a right module.
    pub d_right: Dim,
    pub d: Option<usize>,
    pub verified: bool,
    pub bound: usize,
}

impl GorensteinProfile {
    pub fn compute(alg: &Arc<Algebra>, bound: usize) -> Result<Self> {
        if alg.is_zero() {
            return Ok(GorensteinProfile {
                d_left: Dim::Finite(0),
                d_right: Dim::Finite(0),
                d: Some(0),
                verified: true,
                bound,
            });
        }
        let d_left = id(&Module::regular(alg.clone()), bound)?;
        let d_right = id(&Module::regular(alg.opposite()), bound)?;
        let d = match (d_left, d_right) {
            (Dim::Finite(a), Dim::Finite(b)) => Some(a.max(b)),
            _ => None,
        };
        Ok(GorensteinProfile {
            d_left,
            d_right,
            d,
            verified: d.is_some(),
            bound,
        })
    }

    fn swapped(&self) -> Self {
        GorensteinProfile {
            d_left: self.d_right,
            d_right: self.d_left,
            ..self.clone()
        }
    }
}

/// An algebra with a verified Gorenstein profile; all class tests live here.
#[derive(Clone, Debug)]
pub struct Gorenstein {
    alg: Arc<Algebra>,
    profile: GorensteinProfile,
    d: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ApproxKind {
    Cofibrant,
    Fibrant,
}

/// `0 -> W -> Q(X) -> X -> 0` (cofibrant) or `0 -> X -> R(X) -> C -> 0`
/// (fibrant), with certified class memberships.
#[derive(Clone, Debug)]
pub struct ApproxSeq {
    pub kind: ApproxKind,
    pub ses: Ses,
    pub replaced: Module,
    /// Projective dimension of the trivial end.
    pub trivial_pd: usize,
}

impl ApproxSeq {
    /// The trivial end (`W` or `C`).
    pub fn trivial_part(&self) -> &Module {
        match self.kind {
            ApproxKind::Cofibrant => self.ses.left(),
            ApproxKind::Fibrant => self.ses.right(),
        }
    }
}

impl Gorenstein {
    /// Computes the profile; fails with `Unverified` when it is not finite.
    pub fn new(alg: Arc<Algebra>, bound: usize) -> Result<Self> {
        let profile = GorensteinProfile::compute(&alg, bound)?;
        Self::from_profile(alg, profile)
    }

    pub fn from_profile(alg: Arc<Algebra>, profile: GorensteinProfile) -> Result<Self> {
        let d = profile.d.filter(|_| profile.verified).ok_or_else(|| {
            Error::Unverified(format!(
                "injective dimensions {} / {} not finite within bound {}",
                profile.d_left, profile.d_right, profile.bound
            ))
        })?;
        Ok(Gorenstein { alg, profile, d })
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.alg
    }

    pub fn profile(&self) -> &GorensteinProfile {
        &self.profile
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// The same data for the opposite algebra.
    pub fn opposite(&self) -> Gorenstein {
        Gorenstein {
            alg: self.alg.opposite(),
            profile: self.profile.swapped(),
            d: self.d,
        }
    }

    fn check_alg(&self, x: &Module) -> Result<()> {
        if crate::modrep::same_algebra(x.algebra(), &self.alg) {
            Ok(())
        } else {
            Err(Error::input("module over a different algebra"))
        }
    }

    /// Finite projective dimension, which over a Gorenstein algebra is at most `d`.
    pub fn is_trivial(&self, x: &Module) -> Result<bool> {
        self.check_alg(x)?;
        Ok(matches!(pd(x, self.d + 1)?, Dim::Finite(_)))
    }

    /// `pd X` when finite (bounded by `d`).
    pub fn trivial_pd(&self, x: &Module) -> Result<Option<usize>> {
        Ok(pd(x, self.d + 1)?.finite())
    }

    /// `Ext^i(X, Λ) = 0` for `1 <= i <= d`.
    pub fn is_gp(&self, x: &Module) -> Result<bool> {
        self.check_alg(x)?;
        if self.d == 0 || x.is_zero() {
            return Ok(true);
        }
        let res = projective_resolution(x, self.d + 1)?;
        let reg = Module::regular(self.alg.clone());
        for i in 1..=self.d {
            if ext_dim_from(&res, &reg, i)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `X` is Gorenstein injective iff `DX` is Gorenstein projective.
    pub fn is_gi(&self, x: &Module) -> Result<bool> {
        self.check_alg(x)?;
        self.opposite().is_gp(&x.dual())
    }

    /// Left `add Λ`-approximation `g -> ⊕ Λe_{v_j}` built from a minimal
    /// generating set of `Hom_Λ(g, Λ)` as a right module. Returns the mono
    /// and its cokernel, which is checked to be GP.
    pub fn gp_embed_step(&self, g: &Module) -> Result<(ModuleHom, Module)> {
        self.check_alg(g)?;
        let (mono, coker) = proj_approximation(&self.alg, g)?;
        if !mono.is_mono() {
            return Err(Error::internal(
                "projective approximation is not injective (input not GP?)",
            ));
        }
        if !self.is_gp(&coker)? {
            return Err(Error::internal(
                "cokernel of the projective embedding is not GP (non-Gorenstein input?)",
            ));
        }
        Ok((mono, coker))
    }

    /// `0 -> W -> Q(X) -> X -> 0` with `Q(X)` GP and `W` trivial.
    pub fn cofibrant_replacement(&self, x: &Module) -> Result<ApproxSeq> {
        self.check_alg(x)?;
        let (mono, epi) = self.cofibrant_rec(x, 0)?;
        let ses = Ses::new(mono, epi)
            .map_err(|e| Error::construction(format!("cofibrant replacement: {e}")))?;
        let q = ses.middle().clone();
        if !self.is_gp(&q)? {
            return Err(Error::construction("cofibrant replacement: middle term not GP"));
        }
        let w_pd = self.trivial_pd(ses.left())?.ok_or_else(|| {
            Error::construction("cofibrant replacement: kernel not of finite projective dimension")
        })?;
        Ok(ApproxSeq {
            kind: ApproxKind::Cofibrant,
            ses,
            replaced: q,
            trivial_pd: w_pd,
        })
    }

    fn cofibrant_rec(&self, x: &Module, depth: usize) -> Result<(ModuleHom, ModuleHom)> {
        if self.is_gp(x)? {
            let zero = Module::zero(self.alg.clone());
            return Ok((ModuleHom::zero(&zero, x), x.identity()));
        }
        if depth > self.d {
            return Err(Error::construction(format!(
                "syzygy of order {} is still not GP",
                depth
            )));
        }
        let cover = projective_cover(x)?;
        let (omega, j) = kernel(&cover.epi);
        let (_, pi_prime) = self.cofibrant_rec(&omega, depth + 1)?;
        let q_prime = pi_prime.source.clone();
        let (iota, _) = self.gp_embed_step(&q_prime)?;
        let p_prime = iota.target.clone();
        let p0 = cover.module.clone();
        let sum = direct_sum(&self.alg, &[p_prime.clone(), p0.clone()])?;
        let f = self.alg.field();
        // q ↦ (ι q, -j π' q)
        let lower = j.matrix.mul(&pi_prime.matrix).neg();
        let glue = Mat::vstack(f, q_prime.dim(), &[&iota.matrix, &lower])?;
        let glue = ModuleHom::new(q_prime, sum.module.clone(), glue)?;
        let (fmod, to_f) = cokernel(&glue);
        // F -> X induced by (0, ε) on P' ⊕ P_0
        let zero_block = Mat::zeros(f, x.dim(), p_prime.dim());
        let onto = Mat::hstack(f, x.dim(), &[&zero_block, &cover.epi.matrix])?;
        let section = to_f
            .matrix
            .right_inverse()
            .ok_or_else(|| Error::internal("cokernel projection not surjective"))?;
        let epi = ModuleHom::new(fmod.clone(), x.clone(), onto.mul(&section))
            .map_err(|e| Error::internal(format!("induced map: {e}")))?;
        let (_, w_inc) = kernel(&epi);
        Ok((w_inc, epi))
    }

    /// `0 -> X -> R(X) -> C -> 0` with `R(X)` GI and `C` trivial, dual to the
    /// cofibrant replacement of `DX` over the opposite algebra.
    pub fn fibrant_replacement(&self, x: &Module) -> Result<ApproxSeq> {
        self.check_alg(x)?;
        let op = self.opposite();
        let cof = op.cofibrant_replacement(&x.dual())?;
        let dual = cof.ses.dual();
        let mono = ModuleHom::new(x.clone(), dual.mono.target.clone(), dual.mono.matrix.clone())
            .map_err(|e| Error::internal(format!("dualized mono: {e}")))?;
        let ses = Ses::new(mono, dual.epi)
            .map_err(|e| Error::construction(format!("fibrant replacement: {e}")))?;
        let r = ses.middle().clone();
        if !self.is_gi(&r)? {
            return Err(Error::construction("fibrant replacement: middle term not GI"));
        }
        let c_pd = self.trivial_pd(ses.right())?.ok_or_else(|| {
            Error::construction("fibrant replacement: cokernel not of finite projective dimension")
        })?;
        Ok(ApproxSeq {
            kind: ApproxKind::Fibrant,
            ses,
            replaced: r,
            trivial_pd: c_pd,
        })
    }

    /// `f: X -> Y` is a weak equivalence iff the kernel of the epi
    /// `(f, π): X ⊕ P(Y) -> Y` is trivial.
    pub fn is_weak_equivalence(&self, f: &ModuleHom) -> Result<bool> {
        self.check_alg(&f.source)?;
        let cover = projective_cover(&f.target)?;
        let fld = self.alg.field();
        let sum = direct_sum(&self.alg, &[f.source.clone(), cover.module.clone()])?;
        let m = Mat::hstack(fld, f.target.dim(), &[&f.matrix, &cover.epi.matrix])?;
        let both = ModuleHom::new(sum.module, f.target.clone(), m)?;
        let (k, _) = kernel(&both);
        self.is_trivial(&k)
    }

    /// `ΣX`: cokernel of the projective embedding of a GP module.
    pub fn suspension(&self, g: &Module) -> Result<Module> {
        if !self.is_gp(g)? {
            return Err(Error::input("suspension needs a GP module"));
        }
        Ok(self.gp_embed_step(g)?.1)
    }
}

/// `g -> ⊕ Λe_{v_j}` from a minimal generating set of `Hom(g, Λ)`.
fn proj_approximation(alg: &Arc<Algebra>, g: &Module) -> Result<(ModuleHom, Module)> {
    let f = alg.field();
    let reg = Module::regular(alg.clone());
    let basis = hom_basis(g, &reg)?;
    if basis.is_empty() {
        let zero = Module::zero(alg.clone());
        let mono = ModuleHom::zero(g, &zero);
        return Ok((mono, zero));
    }
    // Hom(g, Λ) as a left Λ^op-module: b acts by F ↦ R_b F
    let cols: Vec<Vec<u32>> = basis.iter().map(|h| h.matrix.vec_col()).collect();
    let stacked = Mat::from_columns(f, alg.dim() * g.dim(), &cols);
    let coords = stacked
        .left_inverse()
        .ok_or_else(|| Error::internal("hom basis dependent"))?;
    let id_g = Mat::identity(f, g.dim());
    let action = (0..alg.dim())
        .map(|i| {
            coords
                .mul(&Mat::kron(&id_g, alg.right_mult(i)))
                .mul(&stacked)
        })
        .collect();
    let op = alg.opposite();
    let gstar = Module::new(op, action)?;
    let cover = projective_cover(&gstar)?;
    let data = alg.projective_data();
    let parts: Vec<Module> = cover
        .generators
        .iter()
        .map(|(v, _)| Module::projective(alg.clone(), *v))
        .collect::<Result<_>>()?;
    let sum = direct_sum(alg, &parts)?;
    let mut blocks = Vec::with_capacity(parts.len());
    for (v, c) in &cover.generators {
        let phi = Mat::unvec_col(f, alg.dim(), g.dim(), &stacked.mul_vec(c));
        let linv = data[*v]
            .basis
            .left_inverse()
            .ok_or_else(|| Error::internal("projective basis dependent"))?;
        blocks.push(linv.mul(&phi));
    }
    let refs: Vec<&Mat> = blocks.iter().collect();
    let m = Mat::vstack(f, g.dim(), &refs)?;
    let mono = ModuleHom::new(g.clone(), sum.module, m)
        .map_err(|e| Error::internal(format!("approximation map: {e}")))?;
    let (coker, _) = cokernel(&mono);
    Ok((mono, coker))
}
