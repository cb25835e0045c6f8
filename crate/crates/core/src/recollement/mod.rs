//! Recollements `A --i--> B --e--> C` of module categories with their six
//! functors, and the verifiers for the abelian and lifted (stable) levels.

mod checks;
mod idempotent;
mod lift;
mod morn;
mod samples;
mod verify;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, MornAlgebra};
use crate::error::{Error, Result};
use crate::homological::{Gorenstein, GorensteinProfile};
use crate::modrep::{Module, ModuleHom};
pub use crate::report::Side;

pub use checks::{replay_witness, Check};
pub use idempotent::{idempotent_recollement, triangular_recollement};
pub use lift::{
    check_derived_embedding, check_kernel_counit, check_kernel_unit, check_setup,
    comparison_map_rank, cps_report, homological_embedding_degree, lift_verify,
    stable_recollement_report, CpsReport, EmbeddingMode, LiftReport, CPS_CONCLUSION,
};
pub use morn::{gp_structural_test_morn, morn_recollement};
pub use samples::{sample_modules, SampleConfig, SampleSuite};
pub use verify::{verify_adjunction, verify_recollement_axioms, AxiomsReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctorName {
    Q,
    I,
    P,
    L,
    E,
    R,
}

impl FunctorName {
    pub const ALL: [FunctorName; 6] = [
        FunctorName::Q,
        FunctorName::I,
        FunctorName::P,
        FunctorName::L,
        FunctorName::E,
        FunctorName::R,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctorName::Q => "q",
            FunctorName::I => "i",
            FunctorName::P => "p",
            FunctorName::L => "l",
            FunctorName::E => "e",
            FunctorName::R => "r",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        FunctorName::ALL.into_iter().find(|f| f.as_str() == s)
    }

    pub fn sides(self) -> (Side, Side) {
        match self {
            FunctorName::I => (Side::A, Side::B),
            FunctorName::Q | FunctorName::P => (Side::B, Side::A),
            FunctorName::E => (Side::B, Side::C),
            FunctorName::L | FunctorName::R => (Side::C, Side::B),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for FunctorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    Exact,
    RightExact,
    LeftExact,
}

pub type ObjectMap = Arc<dyn Fn(&Module) -> Result<Module> + Send + Sync>;
pub type MorphismMap = Arc<dyn Fn(&ModuleHom) -> Result<ModuleHom> + Send + Sync>;
/// Component of a natural transformation at an object.
pub type NaturalMap = Arc<dyn Fn(&Module) -> Result<ModuleHom> + Send + Sync>;

#[derive(Clone)]
pub struct FunctorHandle {
    pub name: FunctorName,
    pub exactness: Exactness,
    object: ObjectMap,
    morphism: MorphismMap,
}

impl fmt::Debug for FunctorHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (s, t) = self.name.sides();
        write!(f, "{}: {s} -> {t} ({:?})", self.name, self.exactness)
    }
}

impl FunctorHandle {
    pub fn new(
        name: FunctorName,
        exactness: Exactness,
        object: ObjectMap,
        morphism: MorphismMap,
    ) -> Self {
        FunctorHandle {
            name,
            exactness,
            object,
            morphism,
        }
    }

    pub fn source(&self) -> Side {
        self.name.sides().0
    }

    pub fn target(&self) -> Side {
        self.name.sides().1
    }

    pub fn apply(&self, x: &Module) -> Result<Module> {
        (self.object)(x)
    }

    pub fn apply_hom(&self, f: &ModuleHom) -> Result<ModuleHom> {
        (self.morphism)(f)
    }
}

/// `left ⊣ right` with unit `X -> right(left X)` and counit
/// `left(right Y) -> Y`.
#[derive(Clone)]
pub struct Adjunction {
    pub left: FunctorName,
    pub right: FunctorName,
    pub unit: NaturalMap,
    pub counit: NaturalMap,
}

impl fmt::Debug for Adjunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊣ {}", self.left, self.right)
    }
}

/// The four adjoint pairs of a recollement.
pub const ADJOINT_PAIRS: [(FunctorName, FunctorName); 4] = [
    (FunctorName::Q, FunctorName::I),
    (FunctorName::I, FunctorName::P),
    (FunctorName::L, FunctorName::E),
    (FunctorName::E, FunctorName::R),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    /// `Mod Λ/ΛeΛ -> Mod Λ -> Mod eΛe`; `triangular` marks a triangular
    /// matrix algebra with `e` the idempotent of its first corner.
    Idempotent { idempotent: String, triangular: bool },
    /// `Mor_{n-1} -> Mor_n -> Mod Λ`.
    Morn { n: usize },
}

#[derive(Clone)]
pub struct RecollementInstance {
    pub provenance: Provenance,
    algebras: [Arc<Algebra>; 3],
    functors: Vec<FunctorHandle>,
    adjunctions: Vec<Adjunction>,
    profiles: [GorensteinProfile; 3],
    gorenstein: [Option<Gorenstein>; 3],
    /// Set for `e = 0` or `e = 1` (one outer category is zero).
    pub degenerate: Option<String>,
    /// Set when a functor was deliberately replaced (negative controls).
    pub corrupted: Option<String>,
    pub(crate) morn: Option<Arc<MornAlgebra>>,
}

impl fmt::Debug for RecollementInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RecollementInstance")
            .field("provenance", &self.provenance)
            .field("dims", &self.algebras.iter().map(|a| a.dim()).collect::<Vec<_>>())
            .field("degenerate", &self.degenerate)
            .field("corrupted", &self.corrupted)
            .finish()
    }
}

fn side_index(s: Side) -> usize {
    match s {
        Side::A => 0,
        Side::B => 1,
        Side::C => 2,
    }
}

impl RecollementInstance {
    pub(crate) fn assemble(
        provenance: Provenance,
        algebras: [Arc<Algebra>; 3],
        functors: Vec<FunctorHandle>,
        adjunctions: Vec<Adjunction>,
        bound: usize,
    ) -> Result<Self> {
        debug_assert!(functors.iter().map(|f| f.name).eq(FunctorName::ALL));
        let profiles = [
            GorensteinProfile::compute(&algebras[0], bound)?,
            GorensteinProfile::compute(&algebras[1], bound)?,
            GorensteinProfile::compute(&algebras[2], bound)?,
        ];
        let gorenstein = [0, 1, 2].map(|k| {
            Gorenstein::from_profile(algebras[k].clone(), profiles[k].clone()).ok()
        });
        Ok(RecollementInstance {
            provenance,
            algebras,
            functors,
            adjunctions,
            profiles,
            gorenstein,
            degenerate: None,
            corrupted: None,
            morn: None,
        })
    }

    pub fn algebra(&self, side: Side) -> &Arc<Algebra> {
        &self.algebras[side_index(side)]
    }

    pub fn functor(&self, name: FunctorName) -> &FunctorHandle {
        &self.functors[name.index()]
    }

    pub fn functors(&self) -> &[FunctorHandle] {
        &self.functors
    }

    /// The unit/counit data of one of the four adjoint pairs.
    pub fn adjunction(&self, left: FunctorName, right: FunctorName) -> Option<&Adjunction> {
        self.adjunctions
            .iter()
            .find(|a| a.left == left && a.right == right)
    }

    pub fn profile(&self, side: Side) -> &GorensteinProfile {
        &self.profiles[side_index(side)]
    }

    pub fn gorenstein(&self, side: Side) -> Result<&Gorenstein> {
        self.gorenstein[side_index(side)].as_ref().ok_or_else(|| {
            Error::Unverified(format!(
                "{side}-side algebra: {} / {} within bound {}",
                self.profiles[side_index(side)].d_left,
                self.profiles[side_index(side)].d_right,
                self.profiles[side_index(side)].bound
            ))
        })
    }

    pub fn morn_algebra(&self) -> Option<&Arc<MornAlgebra>> {
        self.morn.as_ref()
    }

    /// Shorthand for applying a functor.
    pub fn apply(&self, name: FunctorName, x: &Module) -> Result<Module> {
        self.functor(name).apply(x)
    }

    pub fn apply_hom(&self, name: FunctorName, f: &ModuleHom) -> Result<ModuleHom> {
        self.functor(name).apply_hom(f)
    }

    pub fn unit(&self, left: FunctorName, right: FunctorName, x: &Module) -> Result<ModuleHom> {
        let adj = self
            .adjunction(left, right)
            .ok_or_else(|| Error::input(format!("{left} ⊣ {right} is not an adjoint pair")))?;
        (adj.unit)(x)
    }

    pub fn counit(&self, left: FunctorName, right: FunctorName, y: &Module) -> Result<ModuleHom> {
        let adj = self
            .adjunction(left, right)
            .ok_or_else(|| Error::input(format!("{left} ⊣ {right} is not an adjoint pair")))?;
        (adj.counit)(y)
    }

    /// A copy with `i` replaced by the zero functor; units and counits
    /// through `i` become the zero maps of the right shape. Used as a
    /// negative control.
    pub fn with_zero_inclusion(&self) -> RecollementInstance {
        let mut out = self.clone();
        let zero_b = Module::zero(self.algebra(Side::B).clone());
        let z = zero_b.clone();
        out.functors[FunctorName::I.index()] = FunctorHandle::new(
            FunctorName::I,
            Exactness::Exact,
            {
                let z = z.clone();
                Arc::new(move |_| Ok(z.clone()))
            },
            Arc::new(move |_| Ok(ModuleHom::zero(&z, &z))),
        );
        let q = self.functor(FunctorName::Q).clone();
        let p = self.functor(FunctorName::P).clone();
        out.adjunctions = std::mem::take(&mut out.adjunctions)
            .into_iter()
            .map(|adj| {
                let (z1, z2) = (zero_b.clone(), zero_b.clone());
                match (adj.left, adj.right) {
                    (FunctorName::Q, FunctorName::I) => {
                        let q = q.clone();
                        Adjunction {
                            unit: Arc::new(move |x| Ok(ModuleHom::zero(x, &z1))),
                            counit: Arc::new(move |y| Ok(ModuleHom::zero(&q.apply(&z2)?, y))),
                            ..adj
                        }
                    }
                    (FunctorName::I, FunctorName::P) => {
                        let p = p.clone();
                        Adjunction {
                            unit: Arc::new(move |y| Ok(ModuleHom::zero(y, &p.apply(&z1)?))),
                            counit: Arc::new(move |x| Ok(ModuleHom::zero(&z2, x))),
                            ..adj
                        }
                    }
                    _ => adj,
                }
            })
            .collect();
        out.corrupted = Some("i replaced by the zero functor".into());
        out
    }
}

#[cfg(test)]
mod tests;
