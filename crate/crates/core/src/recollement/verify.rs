//! Abelian-level verification: adjunctions, functoriality, exactness and the
//! recollement identities on a sample suite.

use serde::{Deserialize, Serialize};

use super::checks::{execute, Check, Task};
use super::{FunctorName, RecollementInstance, SampleSuite, ADJOINT_PAIRS};
use crate::linalg::Mat;
use crate::modrep::{hom_basis, Module};
use crate::report::{CheckRecord, Verdict};

/// Pairs of samples examined by the two-argument checks, per check.
const MAX_PAIRS: usize = 144;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomsReport {
    pub instance: String,
    pub samples: String,
    pub records: Vec<CheckRecord>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degenerate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corrupted: Option<String>,
}

pub(crate) fn pairs(xs: &[Module], ys: &[Module]) -> Vec<(Module, Module)> {
    let mut out = Vec::new();
    'outer: for x in xs {
        for y in ys {
            if out.len() == MAX_PAIRS {
                break 'outer;
            }
            out.push((x.clone(), y.clone()));
        }
    }
    out
}

/// A "generic" morphism `x -> y`: the basis of `Hom(x, y)` combined with
/// coefficients `1, 2, 3, ...`. `None` when the Hom space is zero.
pub(crate) fn generic_morphism(x: &Module, y: &Module) -> Option<Mat> {
    let basis = hom_basis(x, y).ok()?;
    if basis.is_empty() {
        return None;
    }
    let f = x.field();
    let mut m = Mat::zeros(f, y.dim(), x.dim());
    for (k, h) in basis.iter().enumerate() {
        m.add_scaled(&h.matrix, f.reduce(k as i64 + 1).max(1));
    }
    Some(m)
}

fn adjunction_tasks(
    inst: &RecollementInstance,
    left: FunctorName,
    right: FunctorName,
    suite: &SampleSuite,
) -> (Vec<Check>, Vec<Task>) {
    let (src, tgt) = left.sides();
    let (xs, ys) = (suite.side(src), suite.side(tgt));
    let mut checks = vec![
        Check::AdjHomDims(left, right),
        Check::TriangleUnit(left, right),
        Check::TriangleCounit(left, right),
    ];
    let mut tasks: Vec<Task> = pairs(xs, ys)
        .into_iter()
        .map(|(x, y)| Task::new(Check::AdjHomDims(left, right), vec![x, y]))
        .collect();
    tasks.extend(xs.iter().map(|x| Task::new(Check::TriangleUnit(left, right), vec![x.clone()])));
    tasks.extend(ys.iter().map(|y| Task::new(Check::TriangleCounit(left, right), vec![y.clone()])));
    if inst.adjunction(left, right).is_some() {
        checks.push(Check::NaturalityUnit(left, right));
        checks.push(Check::NaturalityCounit(left, right));
        for (check, side) in [
            (Check::NaturalityUnit(left, right), xs),
            (Check::NaturalityCounit(left, right), ys),
        ] {
            for (a, b) in pairs(side, side) {
                if let Some(h) = generic_morphism(&a, &b) {
                    tasks.push(Task::new(check, vec![a, b]).with_morphisms(vec![h]));
                }
            }
        }
    }
    (checks, tasks)
}

/// Checks `left ⊣ right` on the suite: Hom-dimension equalities on all
/// sample pairs, both triangle identities, and naturality of unit and counit
/// on generic morphisms. A pair that is not one of the instance's adjunctions
/// has no unit/counit, so its triangle checks fail.
pub fn verify_adjunction(
    inst: &RecollementInstance,
    left: FunctorName,
    right: FunctorName,
    suite: &SampleSuite,
) -> Vec<CheckRecord> {
    let (checks, tasks) = adjunction_tasks(inst, left, right, suite);
    execute(inst, &checks, tasks, "exhaustive", &suite.describe())
}

fn functor_tasks(g: FunctorName, suite: &SampleSuite) -> (Vec<Check>, Vec<Task>) {
    let xs = suite.side(g.sides().0);
    let mut tasks = Vec::new();
    for (a, b) in pairs(xs, xs) {
        let mut ms = Vec::new();
        if let Some(h) = generic_morphism(&a, &b) {
            ms.push(h);
            if let Some(k) = generic_morphism(&b, &a) {
                ms.push(k);
            }
        }
        tasks.push(Task::new(Check::Functoriality(g), vec![a, b]).with_morphisms(ms));
    }
    tasks.extend(xs.iter().map(|x| Task::new(Check::Exactness(g), vec![x.clone()])));
    (vec![Check::Functoriality(g), Check::Exactness(g)], tasks)
}

/// Adjunctions, functoriality, declared exactness and the identities
/// `e∘i = 0`, `q∘i ≅ 1`, `p∘i ≅ 1`, `e∘l ≅ 1`, `e∘r ≅ 1`, full faithfulness of
/// `i`, and `Ker e = Im i` on the sample suite.
pub fn verify_recollement_axioms(inst: &RecollementInstance, suite: &SampleSuite) -> AxiomsReport {
    let mut checks = Vec::new();
    let mut tasks = Vec::new();
    for (l, r) in ADJOINT_PAIRS {
        let (c, t) = adjunction_tasks(inst, l, r, suite);
        checks.extend(c);
        tasks.extend(t);
    }
    for g in FunctorName::ALL {
        let (c, t) = functor_tasks(g, suite);
        checks.extend(c);
        tasks.extend(t);
    }
    let one_arg = [
        (Check::EOfIZero, &suite.a),
        (Check::QiCounitIso, &suite.a),
        (Check::PiUnitIso, &suite.a),
        (Check::ElUnitIso, &suite.c),
        (Check::ErCounitIso, &suite.c),
    ];
    for (c, xs) in one_arg {
        checks.push(c);
        tasks.extend(xs.iter().map(|x| Task::new(c, vec![x.clone()])));
    }
    checks.push(Check::IFullyFaithful);
    tasks.extend(
        pairs(&suite.a, &suite.a)
            .into_iter()
            .map(|(x, y)| Task::new(Check::IFullyFaithful, vec![x, y])),
    );
    checks.push(Check::KerEIsImageI);
    tasks.extend(suite.b.iter().map(|x| Task::new(Check::KerEIsImageI, vec![x.clone()])));

    let records = execute(inst, &checks, tasks, "exhaustive", &suite.describe());
    AxiomsReport {
        instance: format!("{:?}", inst.provenance),
        samples: suite.describe(),
        verdict: Verdict::of(&records),
        records,
        degenerate: inst.degenerate.clone(),
        corrupted: inst.corrupted.clone(),
    }
}
