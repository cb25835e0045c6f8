//! Deterministic sample families: indecomposable projectives, injectives and
//! simples, their (co)syzygies, and seeded random cokernels.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{RecollementInstance, Side};
use crate::algebra::Algebra;
use crate::error::Result;
use crate::homological::{cosyzygy, syzygy};
use crate::linalg::Mat;
use crate::modrep::{cokernel, direct_sum, hom_basis, Module, ModuleHom};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    /// Syzygies and cosyzygies of simples up to this order.
    pub depth: usize,
    /// Random cokernels per algebra (and as many duals of random ones).
    pub random: usize,
    /// Random samples above this dimension are discarded.
    pub dim_bound: usize,
    pub seed: u64,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            depth: 2,
            random: 4,
            dim_bound: 6,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SampleSuite {
    pub a: Vec<Module>,
    pub b: Vec<Module>,
    pub c: Vec<Module>,
    pub config: SampleConfig,
}

impl SampleSuite {
    pub fn new(inst: &RecollementInstance, config: &SampleConfig) -> Result<Self> {
        let salt = |k: u64| SampleConfig {
            seed: config.seed.wrapping_mul(3).wrapping_add(k),
            ..config.clone()
        };
        Ok(SampleSuite {
            a: sample_modules(inst.algebra(Side::A), &salt(0))?,
            b: sample_modules(inst.algebra(Side::B), &salt(1))?,
            c: sample_modules(inst.algebra(Side::C), &salt(2))?,
            config: config.clone(),
        })
    }

    pub fn side(&self, s: Side) -> &[Module] {
        match s {
            Side::A => &self.a,
            Side::B => &self.b,
            Side::C => &self.c,
        }
    }

    pub fn describe(&self) -> String {
        format!(
            "samples A/B/C = {}/{}/{} (depth {}, {} random of dim <= {}, seed {})",
            self.a.len(),
            self.b.len(),
            self.c.len(),
            self.config.depth,
            self.config.random,
            self.config.dim_bound,
            self.config.seed
        )
    }
}

fn push_unique(out: &mut Vec<Module>, m: Module) {
    if m.dim() > 0 && !out.contains(&m) {
        out.push(m);
    }
}

/// A random cokernel of a map `Λe_u -> Λe_v ⊕ Λe_w` between projectives.
fn random_cokernel(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Result<Option<Module>> {
    let nv = alg.num_vertices();
    let p = alg.field().modulus();
    let mut parts = vec![Module::projective(alg.clone(), rng.gen_range(0..nv))?];
    if rng.gen_bool(0.5) {
        parts.push(Module::projective(alg.clone(), rng.gen_range(0..nv))?);
    }
    let target = direct_sum(alg, &parts)?.module;
    let source = Module::projective(alg.clone(), rng.gen_range(0..nv))?;
    let basis = hom_basis(&source, &target)?;
    if basis.is_empty() {
        return Ok(Some(target));
    }
    let mut m = Mat::zeros(alg.field(), target.dim(), source.dim());
    for h in &basis {
        m.add_scaled(&h.matrix, rng.gen_range(0..p));
    }
    let f = ModuleHom::raw(source, target, m);
    Ok(Some(cokernel(&f).0))
}

/// Sample modules over `alg`, deduplicated and in a deterministic order.
pub fn sample_modules(alg: &Arc<Algebra>, config: &SampleConfig) -> Result<Vec<Module>> {
    if alg.is_zero() {
        return Ok(vec![]);
    }
    let nv = alg.num_vertices();
    let mut out = Vec::new();
    for v in 0..nv {
        push_unique(&mut out, Module::projective(alg.clone(), v)?);
    }
    for v in 0..nv {
        push_unique(&mut out, Module::injective(alg.clone(), v)?);
    }
    let simples: Vec<Module> = (0..nv)
        .map(|v| Module::simple(alg.clone(), v))
        .collect::<Result<_>>()?;
    for s in &simples {
        push_unique(&mut out, s.clone());
    }
    let derived: Vec<Vec<Module>> = simples
        .par_iter()
        .map(|s| -> Result<Vec<Module>> {
            let mut v = Vec::new();
            for k in 1..=config.depth {
                v.push(syzygy(s, k)?);
                v.push(cosyzygy(s, k)?);
            }
            Ok(v)
        })
        .collect::<Result<_>>()?;
    for m in derived.into_iter().flatten() {
        push_unique(&mut out, m);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let op = alg.opposite();
    let mut made = 0;
    let mut made_dual = 0;
    let mut attempts = 0;
    while (made < config.random || made_dual < config.random) && attempts < 32 * config.random.max(1)
    {
        attempts += 1;
        if made < config.random {
            if let Some(m) = random_cokernel(alg, &mut rng)? {
                if m.dim() <= config.dim_bound && m.dim() > 0 && !out.contains(&m) {
                    out.push(m);
                    made += 1;
                }
            }
        }
        if made_dual < config.random {
            if let Some(m) = random_cokernel(&op, &mut rng)? {
                let d = m.dual();
                if d.dim() <= config.dim_bound && d.dim() > 0 && !out.contains(&d) {
                    out.push(d);
                    made_dual += 1;
                }
            }
        }
    }
    Ok(out)
}
