//! Lifted-level checks: the setup conditions, the derived embedding
//! condition, the kernel unit/counit conditions, stable-level adjunctions and
//! the degree-bounded homological embedding behind the derived recollement.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::checks::{execute, Check, Task};
use super::verify::pairs;
use super::{FunctorName, Provenance, RecollementInstance, SampleSuite, Side, ADJOINT_PAIRS};
use crate::error::{Error, Result};
use crate::homological::{projective_resolution, Resolution};
use crate::linalg::Mat;
use crate::modrep::{cover_from_generators, hom_basis, Module};
use crate::report::{CheckRecord, Verdict};

/// Reported when the idempotent ideal is a homological embedding to the
/// tested degree.
pub const CPS_CONCLUSION: &str = "There is a recollement of derived categories";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingMode {
    /// Dimension comparisons only.
    Fast,
    /// Also computes the comparison maps.
    Thorough,
}

impl EmbeddingMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EmbeddingMode::Fast => "fast",
            EmbeddingMode::Thorough => "thorough",
        }
    }
}

impl fmt::Display for EmbeddingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for EmbeddingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(EmbeddingMode::Fast),
            "thorough" => Ok(EmbeddingMode::Thorough),
            _ => Err(Error::input(format!("unknown mode {s:?} (fast|thorough)"))),
        }
    }
}

fn require_profiles(inst: &RecollementInstance) -> Result<()> {
    for s in [Side::A, Side::B, Side::C] {
        inst.gorenstein(s)?;
    }
    Ok(())
}

fn single(inst: &RecollementInstance, check: Check, xs: &[Module], mode: &str, scope: &str) -> CheckRecord {
    let tasks = xs.iter().map(|x| Task::new(check, vec![x.clone()])).collect();
    execute(inst, &[check], tasks, mode, scope).remove(0)
}

fn push_unique(out: &mut Vec<Module>, m: Module) {
    if m.dim() > 0 && !out.contains(&m) {
        out.push(m);
    }
}

/// `e` preserves trivial objects (on trivial B-samples), and `i` maps the
/// indecomposable projectives and injectives of A to trivial objects.
pub fn check_setup(inst: &RecollementInstance, suite: &SampleSuite) -> Result<Vec<CheckRecord>> {
    require_profiles(inst)?;
    let alg = inst.algebra(Side::A);
    let n = if alg.is_zero() { 0 } else { alg.num_vertices() };
    let proj = (0..n).map(|v| Module::projective(alg.clone(), v)).collect::<Result<Vec<_>>>()?;
    let inj = (0..n).map(|v| Module::injective(alg.clone(), v)).collect::<Result<Vec<_>>>()?;
    let scope = suite.describe();
    Ok(vec![
        single(inst, Check::SetupETrivial, &suite.b, "exhaustive", &scope),
        single(inst, Check::RightAcyclicity, &proj, "exhaustive", "indecomposable projectives of A"),
        single(inst, Check::LeftAcyclicity, &inj, "exhaustive", "indecomposable injectives of A"),
    ])
}

/// The unit `Q(iX) -> iq(Q(iX))` is a weak equivalence for every A-sample;
/// thorough mode also compares `Ho(A)(X, Σ^n Y)` with `Ho(B)(iX, Σ^n iY)` and
/// `Ext^n_A(X, Y)` with `Ext^n_B(iX, iY)` for `n <= degree`.
pub fn check_derived_embedding(
    inst: &RecollementInstance,
    suite: &SampleSuite,
    mode: EmbeddingMode,
    degree: usize,
) -> Result<Vec<CheckRecord>> {
    require_profiles(inst)?;
    let scope = suite.describe();
    let mut out = vec![single(inst, Check::DerivedUnit, &suite.a, mode.as_str(), &scope)];
    if mode == EmbeddingMode::Thorough {
        let mut checks = vec![Check::DerivedHoHom(degree)];
        checks.extend((0..=degree).map(|d| Check::HomEmbedding { degree: d, thorough: false }));
        let ps = pairs(&suite.a, &suite.a);
        let tasks = checks
            .iter()
            .flat_map(|&c| ps.iter().map(move |(x, y)| Task::new(c, vec![x.clone(), y.clone()])))
            .collect();
        out.extend(execute(inst, &checks, tasks, mode.as_str(), &scope));
    }
    Ok(out)
}

/// Candidates for the kernel conditions: the B-samples and their cofibrant
/// (or fibrant) replacements, so that GP (or GI) objects are represented.
fn candidates(inst: &RecollementInstance, suite: &SampleSuite, fibrant: bool) -> Result<Vec<Module>> {
    let gb = inst.gorenstein(Side::B)?;
    let mut out = suite.b.clone();
    for x in &suite.b {
        let r = if fibrant {
            gb.fibrant_replacement(x)?
        } else {
            gb.cofibrant_replacement(x)?
        };
        push_unique(&mut out, r.replaced);
    }
    Ok(out)
}

/// For GP objects `X` with `e(X)` trivial: the unit `X -> iq(X)` is a weak
/// equivalence, and `0 -> le(X) -> X -> iq(X) -> 0` is exact.
pub fn check_kernel_unit(inst: &RecollementInstance, suite: &SampleSuite) -> Result<Vec<CheckRecord>> {
    require_profiles(inst)?;
    let xs = candidates(inst, suite, false)?;
    let scope = format!("{} plus cofibrant replacements", suite.describe());
    let checks = [Check::KernelUnit, Check::CanonicalSes];
    let tasks = checks
        .iter()
        .flat_map(|&c| xs.iter().map(move |x| Task::new(c, vec![x.clone()])))
        .collect();
    Ok(execute(inst, &checks, tasks, "exhaustive", &scope))
}

/// For GI objects `Y` with `e(Y)` trivial: the counit `ip(Y) -> Y` is a weak
/// equivalence.
pub fn check_kernel_counit(inst: &RecollementInstance, suite: &SampleSuite) -> Result<Vec<CheckRecord>> {
    require_profiles(inst)?;
    let ys = candidates(inst, suite, true)?;
    let scope = format!("{} plus fibrant replacements", suite.describe());
    Ok(vec![single(inst, Check::KernelCounit, &ys, "exhaustive", &scope)])
}

/// Stable-level checks: the trivial class of A is the preimage under `i` of
/// the trivial class of B, the image of `i` lands in the kernel of the
/// derived `e`, and the four adjunctions hold on stable Hom dimensions.
pub fn stable_recollement_report(
    inst: &RecollementInstance,
    suite: &SampleSuite,
) -> Result<Vec<CheckRecord>> {
    require_profiles(inst)?;
    let scope = suite.describe();
    let mut checks = vec![Check::TrivialClass, Check::ImageInKernel];
    let mut tasks: Vec<Task> = Vec::new();
    for c in [Check::TrivialClass, Check::ImageInKernel] {
        tasks.extend(suite.a.iter().map(|x| Task::new(c, vec![x.clone()])));
    }
    for (l, r) in ADJOINT_PAIRS {
        let c = Check::StableAdjunction(l, r);
        checks.push(c);
        let (s, t) = l.sides();
        tasks.extend(
            pairs(suite.side(s), suite.side(t))
                .into_iter()
                .map(|(x, y)| Task::new(c, vec![x, y])),
        );
    }
    Ok(execute(inst, &checks, tasks, "exhaustive", &scope))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftReport {
    pub instance: String,
    pub samples: String,
    pub setup: Vec<CheckRecord>,
    /// Derived embedding of `i`.
    pub condition_i: Vec<CheckRecord>,
    /// Unit variant of the kernel condition.
    pub condition_ii: Vec<CheckRecord>,
    /// Counit variant, reported alongside (ii).
    pub condition_ii_prime: Vec<CheckRecord>,
    pub stable: Vec<CheckRecord>,
    pub verdict: Verdict,
    pub conclusion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
}

impl LiftReport {
    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.setup
            .iter()
            .chain(&self.condition_i)
            .chain(&self.condition_ii)
            .chain(&self.condition_ii_prime)
            .chain(&self.stable)
    }
}

/// All lifted-level checks. The verdict is `pass` only if every sampled
/// check passed.
pub fn lift_verify(
    inst: &RecollementInstance,
    suite: &SampleSuite,
    mode: EmbeddingMode,
    degree: usize,
) -> Result<LiftReport> {
    let setup = check_setup(inst, suite)?;
    let condition_i = check_derived_embedding(inst, suite, mode, degree)?;
    let condition_ii = check_kernel_unit(inst, suite)?;
    let condition_ii_prime = check_kernel_counit(inst, suite)?;
    let stable = stable_recollement_report(inst, suite)?;
    let mut report = LiftReport {
        instance: format!("{:?}", inst.provenance),
        samples: suite.describe(),
        setup,
        condition_i,
        condition_ii,
        condition_ii_prime,
        stable,
        verdict: Verdict::NoChecks,
        conclusion: None,
        degenerate: inst.degenerate.clone(),
    };
    let all: Vec<CheckRecord> = report.records().cloned().collect();
    report.verdict = Verdict::of(&all);
    if report.verdict == Verdict::Pass {
        let what = match inst.provenance {
            Provenance::Idempotent { triangular: true, .. } => {
                "the recollement lifts to a recollement of triangulated (stable) categories"
            }
            _ => "the recollement lifts to a recollement of homotopy categories",
        };
        report.conclusion = Some(format!("{what} (verified at sample scope)"));
    }
    Ok(report)
}

/// One record per degree `0..=k` comparing `Ext^n_A(X, Y)` with
/// `Ext^n_B(iX, iY)` on the given pairs of A-modules.
pub fn homological_embedding_degree(
    inst: &RecollementInstance,
    test_pairs: &[(Module, Module)],
    k: usize,
    mode: EmbeddingMode,
) -> Vec<CheckRecord> {
    let thorough = mode == EmbeddingMode::Thorough;
    let checks: Vec<Check> = (0..=k)
        .map(|degree| Check::HomEmbedding { degree, thorough })
        .collect();
    let tasks = checks
        .iter()
        .flat_map(|&c| {
            test_pairs
                .iter()
                .map(move |(x, y)| Task::new(c, vec![x.clone(), y.clone()]))
        })
        .collect();
    let scope = format!("{} pairs of A-modules", test_pairs.len());
    execute(inst, &checks, tasks, mode.as_str(), &scope)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CpsReport {
    pub instance: String,
    pub degree: usize,
    pub mode: EmbeddingMode,
    pub scope: String,
    pub records: Vec<CheckRecord>,
    /// Homological embedding up to `degree` on all tested pairs.
    pub stratifying: bool,
    pub verdict: Verdict,
    pub conclusion: Option<String>,
}

/// Degree-bounded stratifying check for an idempotent instance on all pairs
/// of A-samples.
pub fn cps_report(
    inst: &RecollementInstance,
    suite: &SampleSuite,
    degree: usize,
    mode: EmbeddingMode,
) -> Result<CpsReport> {
    if !matches!(inst.provenance, Provenance::Idempotent { .. }) {
        return Err(Error::input("the stratifying check needs an idempotent instance"));
    }
    let test_pairs = pairs(&suite.a, &suite.a);
    let records = homological_embedding_degree(inst, &test_pairs, degree, mode);
    let verdict = Verdict::of(&records);
    let stratifying = verdict == Verdict::Pass;
    let scope = format!(
        "Ext degrees 0..={degree} on {} pairs of A-samples ({})",
        test_pairs.len(),
        suite.describe()
    );
    Ok(CpsReport {
        instance: format!("{:?}", inst.provenance),
        degree,
        mode,
        conclusion: stratifying.then(|| {
            format!("{CPS_CONCLUSION} (homological embedding verified through degree {degree} on samples)")
        }),
        scope,
        records,
        stratifying,
        verdict,
    })
}

/// The element `e_v` of the `j`-th summand of a resolution term.
fn generator_vectors(alg_dims: &[(usize, Vec<u32>)], vertices: &[usize], total: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(vertices.len());
    let mut off = 0;
    for &v in vertices {
        let (d, g) = &alg_dims[v];
        let mut x = vec![0; total];
        x[off..off + d].copy_from_slice(g);
        out.push(x);
        off += d;
    }
    out
}

/// Lifts `1_{iX}` to a chain map `Q_• -> i(P_•)` from the B-resolution of
/// `iX` into `i` of the A-resolution of `X`, in degrees `0..=top`.
fn comparison_chain_map(
    inst: &RecollementInstance,
    pa: &Resolution,
    qb: &Resolution,
    top: usize,
) -> Result<(Vec<Module>, Vec<Mat>)> {
    let alg_b = inst.algebra(Side::B);
    let f = alg_b.field();
    let data: Vec<(usize, Vec<u32>)> = alg_b
        .projective_data()
        .iter()
        .map(|d| (d.basis.cols(), d.generator.clone()))
        .collect();
    let i = inst.functor(FunctorName::I);
    let mut ip = Vec::with_capacity(top + 1);
    let mut phis: Vec<Mat> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let missing = || Error::BoundExceeded {
            what: "comparison chain map".into(),
            bound: k,
        };
        let (pk, _) = pa.term(k).ok_or_else(missing)?;
        let (qk, qverts) = qb.term(k).ok_or_else(missing)?;
        let ipk = i.apply(&pk)?;
        // `M: iP_k -> T` with `M∘φ_k = N` where `N: Q_k -> T` is known.
        let (m, n) = if k == 0 {
            let aug = i.apply_hom(&pa.augmentation)?;
            (aug.matrix, qb.augmentation.matrix.clone())
        } else {
            let d = pa.differential(k).ok_or_else(missing)?;
            let dk = crate::modrep::ModuleHom::new(pk.clone(), pa.term(k - 1).ok_or_else(missing)?.0, d)?;
            let idk = i.apply_hom(&dk)?;
            let dq = qb.differential(k).ok_or_else(missing)?;
            (idk.matrix, phis[k - 1].mul(&dq))
        };
        let gens = generator_vectors(&data, &qverts, qk.dim());
        let mut chosen = Vec::with_capacity(gens.len());
        for (g, &v) in gens.iter().zip(&qverts) {
            let target = n.mul_vec(g);
            let ev = ipk.action_of(&alg_b.idempotents()[v]).image_basis();
            let sol = m
                .mul(&ev)
                .solve(&Mat::column(f, &target))?
                .ok_or_else(|| Error::internal(format!("comparison map does not lift in degree {k}")))?;
            chosen.push((v, ev.mul(&sol).col(0)));
        }
        let phi = cover_from_generators(&ipk, chosen)?.epi.matrix;
        let phi = if phi.rows() == ipk.dim() && phi.cols() == qk.dim() {
            phi
        } else {
            Mat::zeros(f, ipk.dim(), qk.dim())
        };
        ip.push(ipk);
        phis.push(phi);
    }
    Ok((ip, phis))
}

/// Columns `vec(F)` for a basis of `Hom(s, t)`.
fn hom_space(s: &Module, t: &Module) -> Result<Mat> {
    let cols: Vec<Vec<u32>> = hom_basis(s, t)?.iter().map(|h| h.matrix.vec_col()).collect();
    Ok(Mat::from_columns(t.field(), t.dim() * s.dim(), &cols))
}

/// Cocycles and coboundaries of `Hom(C_•, Y)` at degree `n`, as subspaces of
/// the ambient `vec` space of `dim Y x dim C_n` matrices.
fn cohomology_spaces(
    terms: &[Module],
    diffs: &[Mat],
    y: &Module,
    n: usize,
) -> Result<(Mat, Mat)> {
    let f = y.field();
    let eye = Mat::identity(f, y.dim());
    let h_n = hom_space(&terms[n], y)?;
    // δ: F ↦ F∘d_{n+1}, vec(F d) = (dᵀ ⊗ 1) vec(F)
    let delta = Mat::kron(&diffs[n + 1].transpose(), &eye);
    let z = h_n.mul(&delta.mul(&h_n).kernel_basis());
    let b = if n == 0 {
        Mat::zeros(f, h_n.rows(), 0)
    } else {
        let h_prev = hom_space(&terms[n - 1], y)?;
        Mat::kron(&diffs[n].transpose(), &eye).mul(&h_prev)
    };
    Ok((z, b))
}

/// Rank of the comparison map `Ext^n_A(X, Y) -> Ext^n_B(iX, iY)` induced by
/// `i`, computed through an explicit chain map of resolutions. The map is
/// invertible exactly when this rank equals both Ext dimensions.
pub fn comparison_map_rank(inst: &RecollementInstance, x: &Module, y: &Module, n: usize) -> Result<usize> {
    let i = inst.functor(FunctorName::I);
    let ix = i.apply(x)?;
    let iy = i.apply(y)?;
    if ix.dim() == 0 || iy.dim() == 0 {
        return Ok(0);
    }
    let pa = projective_resolution(x, n + 1)?;
    let qb = projective_resolution(&ix, n + 1)?;
    let (ip, phis) = comparison_chain_map(inst, &pa, &qb, n + 1)?;
    let f = x.field();
    let qterms: Vec<Module> = (0..=n + 1)
        .map(|k| qb.term(k).map(|t| t.0))
        .collect::<Option<_>>()
        .ok_or_else(|| Error::internal("resolution shorter than requested"))?;
    // Differentials at index k are d_k (index 0 unused).
    let mut dq = vec![Mat::zeros(f, 0, 0)];
    let mut dp = vec![Mat::zeros(f, 0, 0)];
    for k in 1..=n + 1 {
        dq.push(qb.differential(k).ok_or_else(|| Error::internal("missing differential"))?);
        dp.push(pa.differential(k).ok_or_else(|| Error::internal("missing differential"))?);
    }
    // i preserves matrices of differentials only up to its basis change, so
    // use i(d_k) on the A-side complex.
    let mut dip = vec![Mat::zeros(f, 0, 0)];
    for (k, dk) in dp.iter().enumerate().skip(1) {
        let src = pa.term(k).map(|t| t.0).ok_or_else(|| Error::internal("missing term"))?;
        let tgt = pa.term(k - 1).map(|t| t.0).ok_or_else(|| Error::internal("missing term"))?;
        let d = crate::modrep::ModuleHom::new(src, tgt, dk.clone())?;
        dip.push(i.apply_hom(&d)?.matrix);
    }
    let (zc, _) = cohomology_spaces(&ip, &dip, &iy, n)?;
    let (_, bd) = cohomology_spaces(&qterms, &dq, &iy, n)?;
    let phi_star = Mat::kron(&phis[n].transpose(), &Mat::identity(f, iy.dim()));
    let image = phi_star.mul(&zc);
    let joint = Mat::hstack(f, image.rows(), &[&image, &bd])?;
    Ok(joint.rank() - bd.rank())
}
