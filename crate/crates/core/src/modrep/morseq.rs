//! Sequences `X_1 -> X_2 -> ... -> X_n` and their `T_n`-module form.

use std::sync::Arc;

use super::{direct_sum, same_algebra, Module, ModuleHom};
use crate::algebra::{Algebra, MornAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// An object of the morphism category: `maps[i]: objects[i] -> objects[i+1]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MorSeq {
    pub objects: Vec<Module>,
    pub maps: Vec<ModuleHom>,
}

impl MorSeq {
    pub fn new(objects: Vec<Module>, maps: Vec<ModuleHom>) -> Result<Self> {
        if objects.is_empty() {
            return Err(Error::input("empty sequence"));
        }
        if maps.len() + 1 != objects.len() {
            return Err(Error::input("need exactly one map between consecutive objects"));
        }
        let alg = objects[0].algebra();
        for (i, f) in maps.iter().enumerate() {
            if !same_algebra(f.source.algebra(), alg)
                || f.source.dim() != objects[i].dim()
                || f.target.dim() != objects[i + 1].dim()
                || f.source != objects[i]
                || f.target != objects[i + 1]
            {
                return Err(Error::input(format!("map {} is not between its neighbours", i + 1)));
            }
            if !f.intertwines() {
                return Err(Error::input(format!("map {} is not a module map", i + 1)));
            }
        }
        Ok(MorSeq { objects, maps })
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn base(&self) -> &Arc<Algebra> {
        self.objects[0].algebra()
    }

    /// `0 -> ... -> 0 -> X` style constructors and friends use this.
    pub fn zero(base: &Arc<Algebra>, n: usize) -> Self {
        let z = Module::zero(base.clone());
        MorSeq {
            objects: vec![z.clone(); n],
            maps: vec![ModuleHom::zero(&z, &z); n.saturating_sub(1)],
        }
    }

    /// Composite `f_{j-1} ∘ ... ∘ f_i : X_i -> X_j` (0-based, `i <= j`).
    pub fn composite(&self, i: usize, j: usize) -> Mat {
        let f = self.objects[i].field();
        let mut m = Mat::identity(f, self.objects[i].dim());
        for k in i..j {
            m = self.maps[k].matrix.mul(&m);
        }
        m
    }

    /// The `T_n`-module with `E_{ij} ⊗ b` acting as `b · f_{i-1}⋯f_j` from
    /// block `j` to block `i`.
    pub fn to_module(&self, morn: &MornAlgebra) -> Result<Module> {
        if self.len() != morn.n {
            return Err(Error::input(format!(
                "sequence of length {} over T_{}",
                self.len(),
                morn.n
            )));
        }
        if !same_algebra(self.base(), &morn.base) {
            return Err(Error::input("sequence over a different base algebra"));
        }
        let f = morn.base.field();
        let dims: Vec<usize> = self.objects.iter().map(Module::dim).collect();
        let offs: Vec<usize> = dims
            .iter()
            .scan(0, |acc, d| {
                let o = *acc;
                *acc += d;
                Some(o)
            })
            .collect();
        let total: usize = dims.iter().sum();
        let mut action = vec![Mat::zeros(f, total, total); morn.algebra.dim()];
        for i in 1..=morn.n {
            for j in 1..=i {
                let comp = self.composite(j - 1, i - 1);
                for s in 0..morn.base.dim() {
                    let block = self.objects[i - 1].action(s).mul(&comp);
                    action[morn.index(i, j, s)].set_block(offs[i - 1], offs[j - 1], &block);
                }
            }
        }
        Ok(Module::raw(morn.algebra.clone(), total, action))
    }

    /// Bases of the components `E_{ii} X` (columns in `X` coordinates) with
    /// matching left inverses.
    pub fn component_bases(x: &Module, morn: &MornAlgebra) -> Result<Vec<(Mat, Mat)>> {
        if !same_algebra(x.algebra(), &morn.algebra) {
            return Err(Error::input("module is not over this T_n"));
        }
        let one = morn.base.unit().to_vec();
        Ok((1..=morn.n)
            .map(|i| {
                let b = x.action_of(&morn.diagonal(i, &one)).image_basis();
                let p = if b.cols() == 0 {
                    Mat::zeros(x.field(), 0, x.dim())
                } else {
                    b.left_inverse().expect("independent columns")
                };
                (b, p)
            })
            .collect())
    }

    /// Inverse of [`MorSeq::to_module`]: components are the images of the
    /// diagonal idempotents.
    pub fn from_module(x: &Module, morn: &MornAlgebra) -> Result<MorSeq> {
        let base = &morn.base;
        let one = base.unit().to_vec();
        let comps = Self::component_bases(x, morn)?;
        let mut bases = Vec::with_capacity(morn.n);
        let mut projs = Vec::with_capacity(morn.n);
        let mut objects = Vec::with_capacity(morn.n);
        for (i, (b, p)) in comps.into_iter().enumerate() {
            let action = (0..base.dim())
                .map(|s| {
                    let e = morn.diagonal(i + 1, &base.basis_vector(s));
                    p.mul(&x.action_of(&e)).mul(&b)
                })
                .collect();
            objects.push(Module::raw(base.clone(), b.cols(), action));
            bases.push(b);
            projs.push(p);
        }
        let mut maps = Vec::with_capacity(morn.n - 1);
        for i in 1..morn.n {
            let e = morn.unit_at(i + 1, i, &one);
            let m = projs[i].mul(&x.action_of(&e)).mul(&bases[i - 1]);
            maps.push(ModuleHom::raw(objects[i - 1].clone(), objects[i].clone(), m));
        }
        Ok(MorSeq { objects, maps })
    }

    /// Componentwise direct sum.
    pub fn direct_sum(&self, other: &MorSeq) -> Result<MorSeq> {
        if self.len() != other.len() {
            return Err(Error::input("sequences of different lengths"));
        }
        let base = self.base().clone();
        let f = base.field();
        let sums: Vec<Module> = self
            .objects
            .iter()
            .zip(&other.objects)
            .map(|(a, b)| Ok(direct_sum(&base, &[a.clone(), b.clone()])?.module))
            .collect::<Result<_>>()?;
        let maps = (0..self.maps.len())
            .map(|i| {
                let m = Mat::block_diag(f, &[&self.maps[i].matrix, &other.maps[i].matrix]);
                ModuleHom::raw(sums[i].clone(), sums[i + 1].clone(), m)
            })
            .collect();
        Ok(MorSeq {
            objects: sums,
            maps,
        })
    }
}

/// A morphism of sequences (commuting ladder) as a `T_n`-module map, given
/// by its components.
pub fn ladder_to_hom(
    source: &Module,
    target: &Module,
    components: &[Mat],
) -> Result<ModuleHom> {
    let f = source.field();
    let blocks: Vec<&Mat> = components.iter().collect();
    let m = Mat::block_diag(f, &blocks);
    ModuleHom::new(source.clone(), target.clone(), m)
}
