//! Atomic checks on explicit modules. Every verifier is a batch of these, and
//! a failing one is recorded as a witness that [`replay_witness`] can rerun.

use std::fmt;

use rayon::prelude::*;

use super::lift::comparison_map_rank;
use super::{FunctorName, RecollementInstance, Side};
use crate::error::{Error, Result};
use crate::homological::{ext_dim, stable_hom};
use crate::linalg::Mat;
use crate::modrep::{
    cokernel, hom_basis, hom_dim, injective_envelope, kernel, projective_cover, Module, ModuleHom,
};
use crate::report::{mat_from_rows, CheckRecord, ModuleData, Witness};

const MAX_WITNESSES: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Check {
    /// `dim Hom(F X, Y) = dim Hom(X, G Y)`.
    AdjHomDims(FunctorName, FunctorName),
    /// `ε_{FX} ∘ F(η_X) = 1`.
    TriangleUnit(FunctorName, FunctorName),
    /// `G(ε_Y) ∘ η_{GY} = 1`.
    TriangleCounit(FunctorName, FunctorName),
    NaturalityUnit(FunctorName, FunctorName),
    NaturalityCounit(FunctorName, FunctorName),
    Functoriality(FunctorName),
    Exactness(FunctorName),
    EOfIZero,
    QiCounitIso,
    PiUnitIso,
    ElUnitIso,
    ErCounitIso,
    IFullyFaithful,
    KerEIsImageI,
    SetupETrivial,
    RightAcyclicity,
    LeftAcyclicity,
    DerivedUnit,
    DerivedHoHom(usize),
    KernelUnit,
    CanonicalSes,
    KernelCounit,
    TrivialClass,
    ImageInKernel,
    StableAdjunction(FunctorName, FunctorName),
    /// `Ext^degree_A(X, Y) -> Ext^degree_B(iX, iY)`: equal dimensions, and
    /// in thorough mode an invertible comparison map.
    HomEmbedding { degree: usize, thorough: bool },
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Check::*;
        match self {
            AdjHomDims(a, b) => write!(f, "adjunction.{a}-{b}.hom_dims"),
            TriangleUnit(a, b) => write!(f, "adjunction.{a}-{b}.triangle_unit"),
            TriangleCounit(a, b) => write!(f, "adjunction.{a}-{b}.triangle_counit"),
            NaturalityUnit(a, b) => write!(f, "adjunction.{a}-{b}.naturality_unit"),
            NaturalityCounit(a, b) => write!(f, "adjunction.{a}-{b}.naturality_counit"),
            Functoriality(g) => write!(f, "functor.{g}.functoriality"),
            Exactness(g) => write!(f, "functor.{g}.exactness"),
            EOfIZero => f.write_str("identity.e_of_i_zero"),
            QiCounitIso => f.write_str("identity.qi_counit_iso"),
            PiUnitIso => f.write_str("identity.pi_unit_iso"),
            ElUnitIso => f.write_str("identity.el_unit_iso"),
            ErCounitIso => f.write_str("identity.er_counit_iso"),
            IFullyFaithful => f.write_str("identity.i_fully_faithful"),
            KerEIsImageI => f.write_str("identity.ker_e_is_image_i"),
            SetupETrivial => f.write_str("setup.e_preserves_trivial"),
            RightAcyclicity => f.write_str("setup.right_acyclicity"),
            LeftAcyclicity => f.write_str("setup.left_acyclicity"),
            DerivedUnit => f.write_str("derived_embedding.unit_weq"),
            DerivedHoHom(k) => write!(f, "derived_embedding.ho_hom.le{k}"),
            KernelUnit => f.write_str("condition_ii.unit_weq"),
            CanonicalSes => f.write_str("condition_ii.canonical_ses"),
            KernelCounit => f.write_str("condition_ii_prime.counit_weq"),
            TrivialClass => f.write_str("stable.trivial_class_identity"),
            ImageInKernel => f.write_str("stable.image_in_ker_re"),
            StableAdjunction(a, b) => write!(f, "stable.adjunction.{a}-{b}"),
            HomEmbedding { degree, thorough } => write!(
                f,
                "homological_embedding.{}.deg{degree}",
                if *thorough { "thorough" } else { "fast" }
            ),
        }
    }
}

impl Check {
    pub fn parse(s: &str) -> Option<Check> {
        use Check::*;
        let pair = |t: &str| -> Option<(FunctorName, FunctorName)> {
            let (a, b) = t.split_once('-')?;
            Some((FunctorName::parse(a)?, FunctorName::parse(b)?))
        };
        let parts: Vec<&str> = s.split('.').collect();
        let degree = |t: &str| t.strip_prefix("le")?.parse::<usize>().ok();
        Some(match parts.as_slice() {
            ["adjunction", p, what] => {
                let (a, b) = pair(p)?;
                match *what {
                    "hom_dims" => AdjHomDims(a, b),
                    "triangle_unit" => TriangleUnit(a, b),
                    "triangle_counit" => TriangleCounit(a, b),
                    "naturality_unit" => NaturalityUnit(a, b),
                    "naturality_counit" => NaturalityCounit(a, b),
                    _ => return None,
                }
            }
            ["functor", g, "functoriality"] => Functoriality(FunctorName::parse(g)?),
            ["functor", g, "exactness"] => Exactness(FunctorName::parse(g)?),
            ["derived_embedding", "ho_hom", k] => DerivedHoHom(degree(k)?),
            ["stable", "adjunction", p] => {
                let (a, b) = pair(p)?;
                StableAdjunction(a, b)
            }
            ["homological_embedding", mode, k] => HomEmbedding {
                degree: k.strip_prefix("deg")?.parse().ok()?,
                thorough: match *mode {
                    "thorough" => true,
                    "fast" => false,
                    _ => return None,
                },
            },
            _ => {
                return [
                    EOfIZero,
                    QiCounitIso,
                    PiUnitIso,
                    ElUnitIso,
                    ErCounitIso,
                    IFullyFaithful,
                    KerEIsImageI,
                    SetupETrivial,
                    RightAcyclicity,
                    LeftAcyclicity,
                    DerivedUnit,
                    KernelUnit,
                    CanonicalSes,
                    KernelCounit,
                    TrivialClass,
                    ImageInKernel,
                ]
                .into_iter()
                .find(|c| c.to_string() == s)
            }
        })
    }

    /// Sides of the module arguments.
    pub fn arg_sides(&self) -> Vec<Side> {
        use Check::*;
        match *self {
            AdjHomDims(f, _) | StableAdjunction(f, _) => vec![f.sides().0, f.sides().1],
            TriangleUnit(f, _) => vec![f.sides().0],
            TriangleCounit(f, _) => vec![f.sides().1],
            NaturalityUnit(f, _) => vec![f.sides().0; 2],
            NaturalityCounit(f, _) => vec![f.sides().1; 2],
            Functoriality(g) => vec![g.sides().0; 2],
            Exactness(g) => vec![g.sides().0],
            EOfIZero | QiCounitIso | PiUnitIso | RightAcyclicity | LeftAcyclicity | DerivedUnit
            | TrivialClass | ImageInKernel => vec![Side::A],
            ElUnitIso | ErCounitIso => vec![Side::C],
            IFullyFaithful | DerivedHoHom(_) | HomEmbedding { .. } => vec![Side::A; 2],
            KerEIsImageI | SetupETrivial | KernelUnit | CanonicalSes | KernelCounit => {
                vec![Side::B]
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    Pass,
    Fail(String),
    /// The case does not meet the check's precondition.
    Skip,
}

/// One atomic check on concrete arguments.
#[derive(Clone, Debug)]
pub(crate) struct Task {
    pub check: Check,
    pub args: Vec<Module>,
    pub morphisms: Vec<Mat>,
}

impl Task {
    pub fn new(check: Check, args: Vec<Module>) -> Self {
        Task {
            check,
            args,
            morphisms: vec![],
        }
    }

    pub fn with_morphisms(mut self, m: Vec<Mat>) -> Self {
        self.morphisms = m;
        self
    }
}

fn fail(msg: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Fail(msg.into()))
}

fn verdict(ok: bool, msg: impl FnOnce() -> String) -> Result<Outcome> {
    Ok(if ok { Outcome::Pass } else { Outcome::Fail(msg()) })
}

/// `g ∘ f` when the shapes compose.
fn compose(g: &Mat, f: &Mat) -> Option<Mat> {
    (g.cols() == f.rows()).then(|| g.mul(f))
}

fn is_identity(m: &Mat) -> bool {
    m.rows() == m.cols() && *m == Mat::identity(m.field(), m.rows())
}

fn check_map(h: &ModuleHom, what: &str) -> Option<String> {
    if h.matrix.rows() != h.target.dim() || h.matrix.cols() != h.source.dim() {
        return Some(format!("{what} has the wrong shape"));
    }
    if !h.intertwines() {
        return Some(format!("{what} is not a module map"));
    }
    None
}

fn iso_outcome(h: &ModuleHom, what: &str) -> Result<Outcome> {
    if let Some(msg) = check_map(h, what) {
        return fail(msg);
    }
    verdict(h.is_iso(), || {
        format!(
            "{what} is not an isomorphism ({} -> {}, rank {})",
            h.source.dim(),
            h.target.dim(),
            h.rank()
        )
    })
}

/// Runs one check; construction errors count as failures of the case.
pub(crate) fn run(inst: &RecollementInstance, task: &Task) -> Outcome {
    match run_inner(inst, task) {
        Ok(o) => o,
        Err(e) => Outcome::Fail(format!("error: {e}")),
    }
}

fn run_inner(inst: &RecollementInstance, task: &Task) -> Result<Outcome> {
    use Check::*;
    use FunctorName as F;
    let a = &task.args;
    if a.len() != task.check.arg_sides().len() {
        return Err(Error::input(format!("{} needs {} modules", task.check, task.check.arg_sides().len())));
    }
    match task.check {
        AdjHomDims(l, r) => {
            let (fl, gr) = (inst.functor(l), inst.functor(r));
            if fl.target() != gr.source() || fl.source() != gr.target() {
                return Err(Error::input(format!("{l} and {r} do not form a pair of opposite functors")));
            }
            let lx = fl.apply(&a[0])?;
            let ry = gr.apply(&a[1])?;
            let d1 = hom_dim(&lx, &a[1])?;
            let d2 = hom_dim(&a[0], &ry)?;
            verdict(d1 == d2, || {
                format!("dim Hom({l}X, Y) = {d1} but dim Hom(X, {r}Y) = {d2}")
            })
        }
        TriangleUnit(l, r) => {
            if inst.adjunction(l, r).is_none() {
                return fail(format!("{l} ⊣ {r}: no unit/counit (not an adjoint pair of the recollement)"));
            }
            let fx = inst.apply(l, &a[0])?;
            let eta = inst.unit(l, r, &a[0])?;
            if let Some(m) = check_map(&eta, "unit") {
                return fail(m);
            }
            let f_eta = inst.apply_hom(l, &eta)?;
            let eps = inst.counit(l, r, &fx)?;
            if let Some(m) = check_map(&eps, "counit") {
                return fail(m);
            }
            match compose(&eps.matrix, &f_eta.matrix) {
                Some(c) if c.rows() == fx.dim() && is_identity(&c) => Ok(Outcome::Pass),
                _ => fail(format!("ε_{{{l}X}} ∘ {l}(η_X) is not the identity of {l}X")),
            }
        }
        TriangleCounit(l, r) => {
            if inst.adjunction(l, r).is_none() {
                return fail(format!("{l} ⊣ {r}: no unit/counit (not an adjoint pair of the recollement)"));
            }
            let gy = inst.apply(r, &a[0])?;
            let eps = inst.counit(l, r, &a[0])?;
            if let Some(m) = check_map(&eps, "counit") {
                return fail(m);
            }
            let g_eps = inst.apply_hom(r, &eps)?;
            let eta = inst.unit(l, r, &gy)?;
            if let Some(m) = check_map(&eta, "unit") {
                return fail(m);
            }
            match compose(&g_eps.matrix, &eta.matrix) {
                Some(c) if c.rows() == gy.dim() && is_identity(&c) => Ok(Outcome::Pass),
                _ => fail(format!("{r}(ε_Y) ∘ η_{{{r}Y}} is not the identity of {r}Y")),
            }
        }
        NaturalityUnit(l, r) => {
            let h = task.morphisms.first().ok_or_else(|| Error::input("missing morphism"))?;
            let e1 = inst.unit(l, r, &a[0])?;
            let e2 = inst.unit(l, r, &a[1])?;
            let hh = ModuleHom::new(a[0].clone(), a[1].clone(), h.clone())?;
            let gfh = inst.apply_hom(r, &inst.apply_hom(l, &hh)?)?;
            let lhs = compose(&e2.matrix, h);
            let rhs = compose(&gfh.matrix, &e1.matrix);
            verdict(lhs.is_some() && lhs == rhs, || {
                format!("η_X' ∘ h ≠ {r}{l}(h) ∘ η_X")
            })
        }
        NaturalityCounit(l, r) => {
            let h = task.morphisms.first().ok_or_else(|| Error::input("missing morphism"))?;
            let e1 = inst.counit(l, r, &a[0])?;
            let e2 = inst.counit(l, r, &a[1])?;
            let hh = ModuleHom::new(a[0].clone(), a[1].clone(), h.clone())?;
            let fgh = inst.apply_hom(l, &inst.apply_hom(r, &hh)?)?;
            let lhs = compose(h, &e1.matrix);
            let rhs = compose(&e2.matrix, &fgh.matrix);
            verdict(lhs.is_some() && lhs == rhs, || {
                format!("h ∘ ε_Y ≠ ε_Y' ∘ {l}{r}(h)")
            })
        }
        Functoriality(g) => {
            let fx = inst.apply(g, &a[0])?;
            let fid = inst.apply_hom(g, &a[0].identity())?;
            if fid.matrix.rows() != fx.dim() || !is_identity(&fid.matrix) {
                return fail(format!("{g}(1_X) is not 1_{{{g}X}}"));
            }
            if let Some(h) = task.morphisms.first() {
                let hh = ModuleHom::new(a[0].clone(), a[1].clone(), h.clone())?;
                let fh = inst.apply_hom(g, &hh)?;
                if let Some(m) = check_map(&fh, &format!("{g}(h)")) {
                    return fail(m);
                }
                if let Some(k) = task.morphisms.get(1) {
                    let kk = ModuleHom::new(a[1].clone(), a[0].clone(), k.clone())?;
                    let fk = inst.apply_hom(g, &kk)?;
                    let whole = inst.apply_hom(g, &kk.compose(&hh)?)?;
                    if compose(&fk.matrix, &fh.matrix).as_ref() != Some(&whole.matrix) {
                        return fail(format!("{g}(k ∘ h) ≠ {g}(k) ∘ {g}(h)"));
                    }
                }
            }
            Ok(Outcome::Pass)
        }
        Exactness(g) => {
            let handle = inst.functor(g);
            let x = &a[0];
            let cover = projective_cover(x)?;
            let (_, j) = kernel(&cover.epi);
            let (_, mono) = injective_envelope(x)?;
            let (_, pr) = cokernel(&mono);
            for (name, m, e) in [("ΩX -> P(X) -> X", j, cover.epi), ("X -> I(X) -> Ω⁻X", mono, pr)] {
                let fm = handle.apply_hom(&m)?;
                let fe = handle.apply_hom(&e)?;
                let Some(c) = compose(&fe.matrix, &fm.matrix) else {
                    return fail(format!("{g} applied to {name}: maps do not compose"));
                };
                let middle = c.is_zero() && fe.matrix.cols() - fe.rank() == fm.rank();
                let mono_ok = fm.rank() == fm.matrix.cols();
                let epi_ok = fe.rank() == fe.matrix.rows();
                let ok = match handle.exactness {
                    super::Exactness::Exact => middle && mono_ok && epi_ok,
                    super::Exactness::LeftExact => middle && mono_ok,
                    super::Exactness::RightExact => middle && epi_ok,
                };
                if !ok {
                    return fail(format!(
                        "{g} ({:?}) on {name}: middle exact {middle}, mono {mono_ok}, epi {epi_ok}",
                        handle.exactness
                    ));
                }
            }
            Ok(Outcome::Pass)
        }
        EOfIZero => {
            let eiy = inst.apply(F::E, &inst.apply(F::I, &a[0])?)?;
            verdict(eiy.dim() == 0, || format!("e(i(Y)) has dimension {}", eiy.dim()))
        }
        QiCounitIso => iso_outcome(&inst.counit(F::Q, F::I, &a[0])?, "counit q(i(Y)) -> Y"),
        PiUnitIso => iso_outcome(&inst.unit(F::I, F::P, &a[0])?, "unit Y -> p(i(Y))"),
        ElUnitIso => iso_outcome(&inst.unit(F::L, F::E, &a[0])?, "unit Z -> e(l(Z))"),
        ErCounitIso => iso_outcome(&inst.counit(F::E, F::R, &a[0])?, "counit e(r(Z)) -> Z"),
        IFullyFaithful => {
            let basis = hom_basis(&a[0], &a[1])?;
            let iy = inst.apply(F::I, &a[0])?;
            let iy2 = inst.apply(F::I, &a[1])?;
            let d_b = hom_dim(&iy, &iy2)?;
            let mut cols = Vec::with_capacity(basis.len());
            for h in &basis {
                let ih = inst.apply_hom(F::I, h)?;
                if ih.matrix.rows() != iy2.dim() || ih.matrix.cols() != iy.dim() {
                    return fail("i not fully faithful: i(h) has the wrong shape");
                }
                cols.push(ih.matrix.vec_col());
            }
            let rank = Mat::from_columns(iy.field(), iy.dim() * iy2.dim(), &cols).rank();
            verdict(d_b == basis.len() && rank == basis.len(), || {
                format!(
                    "i not fully faithful: dim Hom(Y, Y') = {}, dim Hom(iY, iY') = {d_b}, rank of i on Hom = {rank}",
                    basis.len()
                )
            })
        }
        KerEIsImageI => {
            let ex = inst.apply(F::E, &a[0])?;
            if ex.dim() != 0 {
                return Ok(Outcome::Skip);
            }
            iso_outcome(&inst.unit(F::Q, F::I, &a[0])?, "unit X -> i(q(X)) for e(X) = 0")
        }
        SetupETrivial => {
            let (gb, gc) = (inst.gorenstein(Side::B)?, inst.gorenstein(Side::C)?);
            if !gb.is_trivial(&a[0])? {
                return Ok(Outcome::Skip);
            }
            let ex = inst.apply(F::E, &a[0])?;
            verdict(gc.is_trivial(&ex)?, || "X trivial but e(X) is not".into())
        }
        RightAcyclicity | LeftAcyclicity => {
            let gb = inst.gorenstein(Side::B)?;
            let ix = inst.apply(F::I, &a[0])?;
            verdict(gb.is_trivial(&ix)?, || "i(X) has infinite projective dimension".into())
        }
        DerivedUnit => {
            let gb = inst.gorenstein(Side::B)?;
            let ix = inst.apply(F::I, &a[0])?;
            let q = gb.cofibrant_replacement(&ix)?.replaced;
            let eta = inst.unit(F::Q, F::I, &q)?;
            if let Some(m) = check_map(&eta, "unit") {
                return fail(m);
            }
            verdict(gb.is_weak_equivalence(&eta)?, || {
                "unit Q(iX) -> iq(Q(iX)) is not a weak equivalence".into()
            })
        }
        DerivedHoHom(k) => {
            let (ga, gb) = (inst.gorenstein(Side::A)?, inst.gorenstein(Side::B)?);
            let (ix, iy) = (inst.apply(F::I, &a[0])?, inst.apply(F::I, &a[1])?);
            let qa_x = ga.cofibrant_replacement(&a[0])?.replaced;
            let qb_x = gb.cofibrant_replacement(&ix)?.replaced;
            for n in 0..=k {
                let (da, db) = if n == 0 {
                    let qa_y = ga.cofibrant_replacement(&a[1])?.replaced;
                    let qb_y = gb.cofibrant_replacement(&iy)?.replaced;
                    (stable_hom(&qa_x, &qa_y)?.dim, stable_hom(&qb_x, &qb_y)?.dim)
                } else {
                    (ext_dim(&qa_x, &a[1], n)?, ext_dim(&qb_x, &iy, n)?)
                };
                if da != db {
                    return fail(format!(
                        "degree {n}: Ho(A)(X, Σ^{n}Y) has dim {da} but Ho(B)(iX, Σ^{n}iY) has dim {db}"
                    ));
                }
            }
            Ok(Outcome::Pass)
        }
        KernelUnit | CanonicalSes => {
            let (gb, gc) = (inst.gorenstein(Side::B)?, inst.gorenstein(Side::C)?);
            let x = &a[0];
            if !gb.is_gp(x)? || !gc.is_trivial(&inst.apply(F::E, x)?)? {
                return Ok(Outcome::Skip);
            }
            let eta = inst.unit(F::Q, F::I, x)?;
            if let Some(m) = check_map(&eta, "unit") {
                return fail(m);
            }
            if task.check == KernelUnit {
                return verdict(gb.is_weak_equivalence(&eta)?, || {
                    "unit X -> iq(X) is not a weak equivalence".into()
                });
            }
            let eps = inst.counit(F::L, F::E, x)?;
            if let Some(m) = check_map(&eps, "counit") {
                return fail(m);
            }
            let zero = compose(&eta.matrix, &eps.matrix).is_some_and(|c| c.is_zero());
            let exact = eps.is_mono() && eta.is_epi() && eps.rank() + eta.rank() == x.dim();
            verdict(zero && exact, || {
                format!(
                    "0 -> le(X) -> X -> iq(X) -> 0 not exact (le(X) -> X mono: {}, X -> iq(X) epi: {})",
                    eps.is_mono(),
                    eta.is_epi()
                )
            })
        }
        KernelCounit => {
            let (gb, gc) = (inst.gorenstein(Side::B)?, inst.gorenstein(Side::C)?);
            let y = &a[0];
            if !gb.is_gi(y)? || !gc.is_trivial(&inst.apply(F::E, y)?)? {
                return Ok(Outcome::Skip);
            }
            let eps = inst.counit(F::I, F::P, y)?;
            if let Some(m) = check_map(&eps, "counit") {
                return fail(m);
            }
            verdict(gb.is_weak_equivalence(&eps)?, || {
                "counit ip(Y) -> Y is not a weak equivalence".into()
            })
        }
        TrivialClass => {
            let (ga, gb) = (inst.gorenstein(Side::A)?, inst.gorenstein(Side::B)?);
            let ta = ga.is_trivial(&a[0])?;
            let tb = gb.is_trivial(&inst.apply(F::I, &a[0])?)?;
            verdict(ta == tb, || {
                format!("Y trivial on A: {ta}, i(Y) trivial on B: {tb}")
            })
        }
        ImageInKernel => {
            let (gb, gc) = (inst.gorenstein(Side::B)?, inst.gorenstein(Side::C)?);
            let q = gb.cofibrant_replacement(&inst.apply(F::I, &a[0])?)?.replaced;
            verdict(gc.is_trivial(&inst.apply(F::E, &q)?)?, || {
                "e(Q(iY)) is not trivial".into()
            })
        }
        StableAdjunction(l, r) => {
            let (d1, d2) = stable_adjunction_dims(inst, l, r, &a[0], &a[1])?;
            verdict(d1 == d2, || {
                format!("stable Hom dimensions differ across {l} ⊣ {r}: {d1} vs {d2}")
            })
        }
        HomEmbedding { degree: n, thorough } => {
            let (ix, iy) = (inst.apply(F::I, &a[0])?, inst.apply(F::I, &a[1])?);
            let (da, db) = if n == 0 {
                (hom_dim(&a[0], &a[1])?, hom_dim(&ix, &iy)?)
            } else {
                (ext_dim(&a[0], &a[1], n)?, ext_dim(&ix, &iy, n)?)
            };
            if da != db {
                return fail(format!(
                    "degree {n}: dim Ext^{n}_A(X, Y) = {da} but dim Ext^{n}_B(iX, iY) = {db}"
                ));
            }
            if thorough {
                let rank = comparison_map_rank(inst, &a[0], &a[1], n)?;
                if rank != da {
                    return fail(format!(
                        "degree {n}: comparison map Ext^{n}_A(X, Y) -> Ext^{n}_B(iX, iY) has rank {rank}, not {da}"
                    ));
                }
            }
            Ok(Outcome::Pass)
        }
    }
}

/// Both sides of the stable-level adjunction isomorphism for one pair, with
/// `Ho(-)(U, V)` computed as stable Hom between cofibrant replacements and the
/// derived functors `Lq = q∘Q`, `Rp = p∘R`, `Ll = l∘Q`, `Rr = r∘R`,
/// `Ri = i`, `Re = Le = e`.
fn stable_adjunction_dims(
    inst: &RecollementInstance,
    l: FunctorName,
    r: FunctorName,
    x: &Module,
    y: &Module,
) -> Result<(usize, usize)> {
    use FunctorName as F;
    let g = |s: Side| inst.gorenstein(s);
    let ho = |s: Side, u: &Module, v: &Module| -> Result<usize> {
        let gs = g(s)?;
        let qu = gs.cofibrant_replacement(u)?.replaced;
        let qv = gs.cofibrant_replacement(v)?.replaced;
        Ok(stable_hom(&qu, &qv)?.dim)
    };
    let cof = |s: Side, u: &Module| -> Result<Module> { Ok(g(s)?.cofibrant_replacement(u)?.replaced) };
    let fib = |s: Side, u: &Module| -> Result<Module> { Ok(g(s)?.fibrant_replacement(u)?.replaced) };
    match (l, r) {
        (F::Q, F::I) => {
            let lq = inst.apply(F::Q, &cof(Side::B, x)?)?;
            Ok((ho(Side::A, &lq, y)?, ho(Side::B, x, &inst.apply(F::I, y)?)?))
        }
        (F::I, F::P) => {
            let rp = inst.apply(F::P, &fib(Side::B, y)?)?;
            Ok((ho(Side::B, &inst.apply(F::I, x)?, y)?, ho(Side::A, x, &rp)?))
        }
        (F::L, F::E) => {
            let ll = inst.apply(F::L, &cof(Side::C, x)?)?;
            Ok((ho(Side::B, &ll, y)?, ho(Side::C, x, &inst.apply(F::E, y)?)?))
        }
        (F::E, F::R) => {
            let rr = inst.apply(F::R, &fib(Side::C, y)?)?;
            Ok((ho(Side::C, &inst.apply(F::E, x)?, y)?, ho(Side::B, x, &rr)?))
        }
        _ => Err(Error::input(format!("{l} ⊣ {r} is not an adjoint pair of the recollement"))),
    }
}

fn witness(task: &Task, detail: String) -> Witness {
    Witness {
        check: task.check.to_string(),
        modules: task
            .check
            .arg_sides()
            .into_iter()
            .zip(&task.args)
            .map(|(s, m)| ModuleData::capture(s, m))
            .collect(),
        morphisms: task.morphisms.iter().map(Mat::to_rows).collect(),
        detail,
    }
}

/// Runs the tasks (in parallel) and folds them into one record per check,
/// in the order of `checks`. Checks without tasks yield vacuous records.
pub(crate) fn execute(
    inst: &RecollementInstance,
    checks: &[Check],
    tasks: Vec<Task>,
    mode: &str,
    scope: &str,
) -> Vec<CheckRecord> {
    let outcomes: Vec<Outcome> = tasks.par_iter().map(|t| run(inst, t)).collect();
    checks
        .iter()
        .map(|c| {
            let mut rec = CheckRecord {
                name: c.to_string(),
                mode: mode.to_string(),
                scope: scope.to_string(),
                samples: 0,
                skipped: 0,
                pass: true,
                witnesses: vec![],
            };
            for (t, o) in tasks.iter().zip(&outcomes) {
                if t.check != *c {
                    continue;
                }
                match o {
                    Outcome::Pass => rec.samples += 1,
                    Outcome::Skip => rec.skipped += 1,
                    Outcome::Fail(msg) => {
                        rec.samples += 1;
                        rec.pass = false;
                        if rec.witnesses.len() < MAX_WITNESSES {
                            rec.witnesses.push(witness(t, msg.clone()));
                        }
                    }
                }
            }
            rec
        })
        .collect()
}

/// Rebuilds the witness's modules over `inst` and reruns its check.
/// Returns `true` when the failure reproduces.
pub fn replay_witness(inst: &RecollementInstance, w: &Witness) -> Result<bool> {
    let check = Check::parse(&w.check)
        .ok_or_else(|| Error::input(format!("unknown check {:?}", w.check)))?;
    let sides = check.arg_sides();
    if sides.len() != w.modules.len() {
        return Err(Error::input("witness has the wrong number of modules"));
    }
    let mut args = Vec::with_capacity(sides.len());
    for (s, d) in sides.iter().zip(&w.modules) {
        if *s != d.side {
            return Err(Error::input(format!("witness module on side {} but {} expects {s}", d.side, w.check)));
        }
        args.push(d.rebuild(inst.algebra(*s).clone())?);
    }
    let mut morphisms = Vec::with_capacity(w.morphisms.len());
    for (k, rows) in w.morphisms.iter().enumerate() {
        let (r, c) = match k {
            0 => (args[1].dim(), args[0].dim()),
            1 => (args[0].dim(), args[1].dim()),
            _ => return Err(Error::input("too many morphisms in witness")),
        };
        if rows.len() != r {
            return Err(Error::input("witness morphism has the wrong shape"));
        }
        morphisms.push(mat_from_rows(args[0].field(), rows, c)?);
    }
    let task = Task {
        check,
        args,
        morphisms,
    };
    Ok(matches!(run(inst, &task), Outcome::Fail(_)))
}
