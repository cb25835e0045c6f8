use std::sync::Arc;

use super::*;
use crate::algebra::{Algebra, Bimodule};
use crate::homological::ext_dim;
use crate::modrep::test_algebras::*;
use crate::modrep::{Module, MorSeq};

fn small() -> SampleConfig {
    SampleConfig {
        depth: 1,
        random: 2,
        dim_bound: 5,
        seed: 7,
    }
}

fn failures(records: &[crate::report::CheckRecord]) -> Vec<String> {
    records
        .iter()
        .filter(|r| !r.pass)
        .map(|r| {
            format!(
                "{}: {}",
                r.name,
                r.witnesses.first().map(|w| w.detail.as_str()).unwrap_or("")
            )
        })
        .collect()
}

fn ka2_e2() -> RecollementInstance {
    let a = a2(3);
    let e = a.idempotents()[1].clone();
    idempotent_recollement(a, &e, "e_2", 6).unwrap()
}

fn t2_dual() -> RecollementInstance {
    let d = dual_numbers(2);
    triangular_recollement(&d, &d, &Bimodule::regular(d.clone()), 6).unwrap()
}

#[test]
fn ka2_corner_and_quotient() {
    let inst = ka2_e2();
    assert_eq!(inst.algebra(Side::A).dim(), 1);
    assert_eq!(inst.algebra(Side::C).dim(), 1);
    let p1 = Module::projective(inst.algebra(Side::B).clone(), 0).unwrap();
    assert_eq!(inst.apply(FunctorName::E, &p1).unwrap().dim(), 1);
    // q(Λ) is the regular module of the quotient
    let reg = Module::regular(inst.algebra(Side::B).clone());
    assert_eq!(inst.apply(FunctorName::Q, &reg).unwrap().dim(), 1);
}

#[test]
fn axioms_hold_on_idempotent_instances() {
    for inst in [ka2_e2(), t2_dual()] {
        let suite = SampleSuite::new(&inst, &small()).unwrap();
        let rep = verify_recollement_axioms(&inst, &suite);
        assert!(failures(&rep.records).is_empty(), "{:?}", failures(&rep.records));
    }
}

#[test]
fn axioms_hold_on_morn() {
    let inst = morn_recollement(dual_numbers(2), 2, 6).unwrap();
    let suite = SampleSuite::new(&inst, &small()).unwrap();
    let rep = verify_recollement_axioms(&inst, &suite);
    assert!(failures(&rep.records).is_empty(), "{:?}", failures(&rep.records));
}

#[test]
fn p_of_multiplication_by_x_is_the_simple() {
    let d = dual_numbers(2);
    let inst = morn_recollement(d.clone(), 2, 6).unwrap();
    let reg = Module::regular(d.clone());
    let x = crate::modrep::ModuleHom::new(reg.clone(), reg.clone(), reg.action(1).clone());
    // right multiplication by x is the map Λ -> Λ, a ↦ a·x; over a
    // commutative algebra it equals left multiplication
    let x = x.unwrap();
    let s = MorSeq::new(vec![reg.clone(), reg], vec![x]).unwrap();
    let m = s.to_module(inst.morn_algebra().unwrap()).unwrap();
    let p = inst.apply(FunctorName::P, &m).unwrap();
    assert_eq!(p.dim(), 1);
}

#[test]
fn swapped_pair_fails() {
    let inst = morn_recollement(dual_numbers(2), 2, 6).unwrap();
    let suite = SampleSuite::new(&inst, &small()).unwrap();
    let ok = verify_adjunction(&inst, FunctorName::L, FunctorName::E, &suite);
    assert!(ok.iter().all(|r| r.pass), "{:?}", failures(&ok));
    let bad = verify_adjunction(&inst, FunctorName::E, FunctorName::L, &suite);
    assert!(bad.iter().any(|r| !r.pass));
}

#[test]
fn corrupted_instance_fails_with_replayable_witness() {
    let inst = ka2_e2().with_zero_inclusion();
    let suite = SampleSuite::new(&inst, &small()).unwrap();
    let rep = verify_recollement_axioms(&inst, &suite);
    assert_eq!(rep.verdict, crate::report::Verdict::Fail);
    let ff = rep
        .records
        .iter()
        .find(|r| r.name == "identity.i_fully_faithful")
        .unwrap();
    assert!(!ff.pass);
    assert!(ff.witnesses[0].detail.contains("i not fully faithful"));
    for r in rep.records.iter().filter(|r| !r.pass) {
        for w in &r.witnesses {
            assert!(replay_witness(&inst, w).unwrap(), "{}", w.check);
        }
    }
}

#[test]
fn lift_passes_on_preset_instances() {
    for inst in [t2_dual(), morn_recollement(dual_numbers(2), 2, 6).unwrap()] {
        let suite = SampleSuite::new(&inst, &small()).unwrap();
        let rep = lift_verify(&inst, &suite, EmbeddingMode::Thorough, 2).unwrap();
        let all: Vec<_> = rep.records().cloned().collect();
        assert!(failures(&all).is_empty(), "{:?}", failures(&all));
        assert!(rep.conclusion.is_some());
    }
}

#[test]
fn cps_for_ka2() {
    let inst = ka2_e2();
    let suite = SampleSuite::new(&inst, &small()).unwrap();
    let rep = cps_report(&inst, &suite, 3, EmbeddingMode::Thorough).unwrap();
    assert!(rep.stratifying, "{:?}", failures(&rep.records));
    assert!(rep.conclusion.unwrap().starts_with(CPS_CONCLUSION));
}

#[test]
fn comparison_rank_matches_ext_on_ka2() {
    let inst = ka2_e2();
    let k = Module::simple(inst.algebra(Side::A).clone(), 0).unwrap();
    for n in 0..3 {
        let d = if n == 0 { 1 } else { ext_dim(&k, &k, n).unwrap() };
        assert_eq!(comparison_map_rank(&inst, &k, &k, n).unwrap(), d);
    }
}

#[test]
fn gp_structural_examples() {
    let d = dual_numbers(2);
    let g = crate::homological::Gorenstein::new(d.clone(), 4).unwrap();
    let reg = Module::regular(d.clone());
    let k = Module::simple(d.clone(), 0).unwrap();
    let id = MorSeq::new(vec![reg.clone(), reg.clone()], vec![reg.identity()]).unwrap();
    assert!(gp_structural_test_morn(&g, &id).unwrap());
    let x = crate::modrep::ModuleHom::new(reg.clone(), reg.clone(), reg.action(1).clone()).unwrap();
    let xs = MorSeq::new(vec![reg.clone(), reg.clone()], vec![x]).unwrap();
    assert!(!gp_structural_test_morn(&g, &xs).unwrap());
    let z = Module::zero(d.clone());
    let zk = MorSeq::new(
        vec![z.clone(), k.clone()],
        vec![crate::modrep::ModuleHom::zero(&z, &k)],
    )
    .unwrap();
    assert!(gp_structural_test_morn(&g, &zk).unwrap());
    let _: Arc<Algebra> = d;
}

/// Loop `x` at 1 with `x² = 0` and an arrow `1 -> 2`; killing `e_2` leaves
/// `k[x]/(x²)`, whose self-extensions are nonzero in every degree.
fn loop_with_tail() -> Arc<Algebra> {
    use crate::algebra::{QuiverPresentation, Relation};
    let mut q = QuiverPresentation::new(gf(3), vec!["1".into(), "2".into()]);
    let x = q.arrow("x", "1", "1").unwrap();
    q.arrow("a", "1", "2").unwrap();
    q.relations.push(Relation::monomial(vec![x, x]));
    Arc::new(q.to_algebra().unwrap())
}

#[test]
fn comparison_map_invertible_with_nonzero_ext() {
    let alg = loop_with_tail();
    let e = alg.idempotents()[1].clone();
    let inst = idempotent_recollement(alg, &e, "e_2", 6).unwrap();
    let k = Module::simple(inst.algebra(Side::A).clone(), 0).unwrap();
    for n in 1..4 {
        assert_eq!(ext_dim(&k, &k, n).unwrap(), 1);
        assert_eq!(comparison_map_rank(&inst, &k, &k, n).unwrap(), 1);
    }
}

fn cycle_with_one_relation() -> Arc<Algebra> {
    use crate::algebra::{QuiverPresentation, Relation};
    let mut q = QuiverPresentation::new(gf(2), vec!["1".into(), "2".into()]);
    let a = q.arrow("a", "1", "2").unwrap();
    let b = q.arrow("b", "2", "1").unwrap();
    q.relations.push(Relation::monomial(vec![a, b]));
    Arc::new(q.to_algebra().unwrap())
}

#[test]
fn non_stratifying_cycle_fails_in_degree_two() {
    let alg = cycle_with_one_relation();
    let verdicts: Vec<bool> = (0..2)
        .map(|v| {
            let e = alg.idempotents()[v].clone();
            let inst = idempotent_recollement(alg.clone(), &e, "e", 6).unwrap();
            let suite = SampleSuite::new(&inst, &small()).unwrap();
            let fast = cps_report(&inst, &suite, 3, EmbeddingMode::Fast).unwrap();
            let thorough = cps_report(&inst, &suite, 3, EmbeddingMode::Thorough).unwrap();
            assert_eq!(fast.stratifying, thorough.stratifying);
            if !thorough.stratifying {
                let bad = thorough.records.iter().find(|r| !r.pass).unwrap();
                assert!(bad.name.ends_with("deg2"));
            }
            thorough.stratifying
        })
        .collect();
    assert_eq!(verdicts.iter().filter(|&&s| s).count(), 1);
}

#[test]
fn derived_embedding_reports_degree_witness_on_cycle() {
    let alg = cycle_with_one_relation();
    let outcomes: Vec<Option<String>> = (0..2)
        .map(|v| {
            let e = alg.idempotents()[v].clone();
            let inst = idempotent_recollement(alg.clone(), &e, "e", 6).unwrap();
            let suite = SampleSuite::new(&inst, &small()).unwrap();
            check_derived_embedding(&inst, &suite, EmbeddingMode::Thorough, 3)
                .unwrap()
                .into_iter()
                .find(|r| !r.pass)
                .map(|r| r.witnesses[0].detail.clone())
        })
        .collect();
    let bad: Vec<&String> = outcomes.iter().flatten().collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].starts_with("degree 2"));
}

#[test]
fn degenerate_idempotents_are_flagged() {
    let d = dual_numbers(2);
    for e in [d.unit().to_vec(), vec![0; d.dim()]] {
        let inst = idempotent_recollement(d.clone(), &e, "e", 6).unwrap();
        assert!(inst.degenerate.is_some());
        let suite = SampleSuite::new(&inst, &small()).unwrap();
        let rep = lift_verify(&inst, &suite, EmbeddingMode::Fast, 2).unwrap();
        assert!(rep.degenerate.is_some());
        assert_eq!(verify_recollement_axioms(&inst, &suite).verdict, crate::report::Verdict::Pass);
    }
}
