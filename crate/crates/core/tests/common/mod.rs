#![allow(dead_code)]

use std::sync::Arc;

use proptest::prelude::*;
use reclift::algebra::{QuiverPresentation, Relation};
use reclift::modrep::{cokernel, direct_sum, hom_basis};
use reclift::{Algebra, Field, Mat, Module, ModuleHom};

pub fn gf(p: u32) -> Field {
    Field::new(p).unwrap()
}

/// Relations are monomials written as `b*a` (first `a`, then `b`).
pub fn quiver(p: u32, vertices: &[&str], arrows: &[(&str, &str, &str)], rels: &[&str]) -> Arc<Algebra> {
    let mut q = QuiverPresentation::new(gf(p), vertices.iter().map(|v| v.to_string()).collect());
    for (a, s, t) in arrows {
        q.arrow(a, s, t).unwrap();
    }
    for r in rels {
        let path = q.parse_path(r).unwrap();
        q.relations.push(Relation::monomial(path));
    }
    Arc::new(q.to_algebra().unwrap())
}

/// `k[x]/(x²)`.
pub fn dual_numbers(p: u32) -> Arc<Algebra> {
    quiver(p, &["1"], &[("x", "1", "1")], &["x*x"])
}

/// `1 -> 2`.
pub fn a2(p: u32) -> Arc<Algebra> {
    quiver(p, &["1", "2"], &[("a", "1", "2")], &[])
}

/// `1 -> 2 -> 3`, optionally with the composite set to zero.
pub fn a3(p: u32, radical_square_zero: bool) -> Arc<Algebra> {
    let rels: &[&str] = if radical_square_zero { &["b*a"] } else { &[] };
    quiver(p, &["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3")], rels)
}

/// `k[x]/(x³)`, selfinjective of Loewy length 3.
pub fn truncated_poly3(p: u32) -> Arc<Algebra> {
    quiver(p, &["1"], &[("x", "1", "1")], &["x*x*x"])
}

/// Two-cycle `1 ⇄ 2` with all paths of length 2 zero (selfinjective).
pub fn two_cycle(p: u32) -> Arc<Algebra> {
    quiver(
        p,
        &["1", "2"],
        &[("a", "1", "2"), ("b", "2", "1")],
        &["a*b", "b*a"],
    )
}

/// A mixed family used for property tests.
pub fn zoo() -> Vec<Arc<Algebra>> {
    vec![
        dual_numbers(2),
        dual_numbers(3),
        a2(3),
        a3(2, false),
        a3(3, true),
        truncated_poly3(2),
        two_cycle(2),
    ]
}

/// A seeded pseudo-random module: the cokernel of a random map
/// `Λe_u -> Λe_v ⊕ Λe_w`.
pub fn random_module(alg: &Arc<Algebra>, seed: u64) -> Module {
    let mut s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(1);
    let mut next = move |m: u64| {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        s % m
    };
    let nv = alg.num_vertices() as u64;
    let p = alg.field().modulus() as u64;
    let parts: Vec<Module> = (0..1 + next(2))
        .map(|_| Module::projective(alg.clone(), next(nv) as usize).unwrap())
        .collect();
    let target = direct_sum(alg, &parts).unwrap().module;
    let source = Module::projective(alg.clone(), next(nv) as usize).unwrap();
    let basis = hom_basis(&source, &target).unwrap();
    let mut m = Mat::zeros(alg.field(), target.dim(), source.dim());
    for h in &basis {
        m.add_scaled(&h.matrix, next(p) as u32);
    }
    let f = ModuleHom::new(source, target, m).unwrap();
    cokernel(&f).0
}

/// A random homomorphism `x -> y` (a random combination of a Hom basis).
pub fn random_hom(x: &Module, y: &Module, seed: u64) -> ModuleHom {
    let p = x.field().modulus() as u64;
    let mut m = Mat::zeros(x.field(), y.dim(), x.dim());
    for (k, h) in hom_basis(x, y).unwrap().iter().enumerate() {
        let c = (seed.wrapping_mul(31).wrapping_add(k as u64 * 17 + 5)) % p;
        m.add_scaled(&h.matrix, c as u32);
    }
    ModuleHom::new(x.clone(), y.clone(), m).unwrap()
}

pub fn algebra_index() -> impl Strategy<Value = usize> {
    0..zoo().len()
}

/// Random matrix over GF(p) with bounded shape.
pub fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Mat> {
    (prop::sample::select(vec![2u32, 3, 5, 7]), 0..=max_rows, 0..=max_cols).prop_flat_map(
        |(p, r, c)| {
            prop::collection::vec(0..p, r * c)
                .prop_map(move |data| Mat::from_vec(gf(p), r, c, data))
        },
    )
}
