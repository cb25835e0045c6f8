//! Fixtures shared by the benchmarks: the small algebras the CLI presets are
//! built from, and their recollement instances.

use std::sync::Arc;

use reclift::algebra::{QuiverPresentation, Relation};
use reclift::recollement::{idempotent_recollement, morn_recollement, triangular_recollement};
use reclift::{Algebra, Bimodule, Field, RecollementInstance, SampleConfig, SampleSuite};

pub const BOUND: usize = 8;

pub fn dual_numbers(p: u32) -> Arc<Algebra> {
    let mut q = QuiverPresentation::new(Field::new(p).unwrap(), vec!["1".into()]);
    let x = q.arrow("x", "1", "1").unwrap();
    q.relations.push(Relation::monomial(vec![x, x]));
    Arc::new(q.to_algebra().unwrap())
}

pub fn ka2() -> Arc<Algebra> {
    let mut q = QuiverPresentation::new(Field::new(2).unwrap(), vec!["1".into(), "2".into()]);
    q.arrow("a", "1", "2").unwrap();
    Arc::new(q.to_algebra().unwrap())
}

pub fn ka2_instance() -> RecollementInstance {
    let alg = ka2();
    let e = alg.idempotent_sum(&["2"]).unwrap();
    idempotent_recollement(alg, &e, "e2", BOUND).unwrap()
}

pub fn triangular_instance() -> RecollementInstance {
    let d = dual_numbers(2);
    triangular_recollement(&d, &d, &Bimodule::regular(d.clone()), BOUND).unwrap()
}

pub fn morn_instance(n: usize) -> RecollementInstance {
    morn_recollement(dual_numbers(2), n, BOUND).unwrap()
}

/// A reduced sample suite so a single iteration stays in the millisecond
/// range.
pub fn suite(inst: &RecollementInstance) -> SampleSuite {
    let config = SampleConfig {
        depth: 1,
        random: 2,
        dim_bound: 6,
        seed: 0,
    };
    SampleSuite::new(inst, &config).unwrap()
}
