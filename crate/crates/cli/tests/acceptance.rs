//! Acceptance criteria, one line each. Time limits are wall-clock budgets
//! for the whole criterion.

use std::path::PathBuf;
use std::process::Command as Process;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reclift::algebra::{MornAlgebra, QuiverPresentation, Relation};
use reclift::homological::{ext_dim, stable_hom, ApproxSeq};
use reclift::modrep::{cokernel, direct_sum, hom_basis, is_isomorphic, sum2, IsoResult};
use reclift::recollement::{gp_structural_test_morn, CPS_CONCLUSION};
use reclift::{Algebra, Bimodule, Field, Gorenstein, Mat, Module, ModuleHom, MorSeq, Verdict};
use reclift_cli::{run, Command, Input, Options, Report};

type Outcome = Result<String, String>;

struct Criterion {
    id: u8,
    title: &'static str,
    limit: Duration,
    check: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion {
        id: 1,
        title: "Gorenstein profiles of the preset algebras",
        limit: Duration::from_secs(1),
        check: gorenstein_profiles,
    },
    Criterion {
        id: 2,
        title: "structural GP test equals Ext vanishing on Mor_2(k[x]/(x^2)), dim <= 4",
        limit: Duration::from_secs(30),
        check: gp_oracle_equivalence,
    },
    Criterion {
        id: 3,
        title: "replacement certificates on 50 random modules per algebra",
        limit: Duration::from_secs(60),
        check: replacement_certificates,
    },
    Criterion {
        id: 4,
        title: "stable Hom(X, ΣY) = Ext^1(X, Y) over k[x]/(x^2)",
        limit: Duration::from_secs(1),
        check: stable_ext_bridge,
    },
    Criterion {
        id: 5,
        title: "recollement axioms on idempotent and Mor_n instances",
        limit: Duration::from_secs(60),
        check: recollement_axioms,
    },
    Criterion {
        id: 6,
        title: "lift verify on the triangular and Mor_n instances",
        limit: Duration::from_secs(120),
        check: lift_verification,
    },
    Criterion {
        id: 7,
        title: "stratifying check for kA2 with e2 through degree 3",
        limit: Duration::from_secs(10),
        check: cps_ka2,
    },
    Criterion {
        id: 8,
        title: "negative control: zero inclusion fails with replayable witnesses",
        limit: Duration::from_secs(10),
        check: negative_control,
    },
];

fn gf(p: u32) -> Field {
    Field::new(p).unwrap()
}

fn dual_numbers() -> Arc<Algebra> {
    let mut q = QuiverPresentation::new(gf(2), vec!["1".into()]);
    let x = q.arrow("x", "1", "1").unwrap();
    q.relations.push(Relation::monomial(vec![x, x]));
    Arc::new(q.to_algebra().unwrap())
}

fn ka2() -> Arc<Algebra> {
    let mut q = QuiverPresentation::new(gf(2), vec!["1".into(), "2".into()]);
    q.arrow("a", "1", "2").unwrap();
    Arc::new(q.to_algebra().unwrap())
}

fn preset(cmd: Command, name: &str, opts: Options) -> Result<Report, String> {
    run(&cmd, Some(&Input::Preset(name.into())), &opts).map_err(|e| format!("{name}: {e}"))
}

fn failing(r: &Report) -> Vec<String> {
    r.checks.iter().filter(|c| !c.pass).map(|c| c.name.clone()).collect()
}

fn gorenstein_profiles() -> Outcome {
    let mut seen = Vec::new();
    for (name, key, expect) in [
        ("dualnumbers", "base.d", Some("0")),
        ("kA2", "base.d", Some("1")),
        ("t2-dualnumbers", "B.d", None),
    ] {
        let r = preset(Command::Analyze, name, Options::default())?;
        let d = r.summary.get(key).cloned().unwrap_or_default();
        let ok = match expect {
            Some(e) => d == e,
            None => d.parse::<usize>().is_ok(),
        };
        if !ok {
            return Err(format!("{name}: {key} = {d:?}, expected {}", expect.unwrap_or("finite")));
        }
        seen.push(format!("{name} d={d}"));
    }
    Ok(seen.join(", "))
}

/// Direct sums of `indec` with total dimension at most `max`.
fn sums(alg: &Arc<Algebra>, indec: &[Module], max: usize) -> Vec<Module> {
    let mut out = vec![Module::zero(alg.clone())];
    let mut frontier: Vec<(usize, Vec<Module>)> = vec![(0, vec![])];
    while let Some((start, parts)) = frontier.pop() {
        for (k, m) in indec.iter().enumerate().skip(start) {
            let d = parts.iter().map(Module::dim).sum::<usize>() + m.dim();
            if d <= max {
                let mut next = parts.clone();
                next.push(m.clone());
                out.push(direct_sum(alg, &next).unwrap().module);
                frontier.push((k, next));
            }
        }
    }
    out
}

fn every_map(x: &Module, y: &Module) -> Vec<ModuleHom> {
    let basis = hom_basis(x, y).unwrap();
    assert!(basis.len() <= 16, "Hom space too large to enumerate");
    (0u32..1 << basis.len())
        .map(|mask| {
            let mut m = Mat::zeros(x.field(), y.dim(), x.dim());
            for (k, h) in basis.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    m.add_scaled(&h.matrix, 1);
                }
            }
            ModuleHom::new(x.clone(), y.clone(), m).unwrap()
        })
        .collect()
}

fn gp_oracle_equivalence() -> Outcome {
    let d = dual_numbers();
    // every k[x]/(x²)-module is a sum of copies of k and Λ
    let indec = [Module::simple(d.clone(), 0).unwrap(), Module::regular(d.clone())];
    let base = Gorenstein::new(d.clone(), 6).map_err(|e| e.to_string())?;
    let morn = MornAlgebra::new(d.clone(), 2).unwrap();
    let big = Gorenstein::new(morn.algebra.clone(), 6).map_err(|e| e.to_string())?;
    let objects = sums(&d, &indec, 4);
    let mut classes: Vec<Module> = Vec::new();
    let mut mismatches = 0;
    for x1 in &objects {
        for x2 in &objects {
            let total = x1.dim() + x2.dim();
            if total == 0 || total > 4 {
                continue;
            }
            for f in every_map(x1, x2) {
                let s = MorSeq::new(vec![x1.clone(), x2.clone()], vec![f]).unwrap();
                let m = s.to_module(&morn).unwrap();
                let mut fresh = true;
                for c in &classes {
                    match is_isomorphic(c, &m) {
                        IsoResult::Iso(_) => {
                            fresh = false;
                            break;
                        }
                        IsoResult::NotIso => {}
                        IsoResult::Unknown => return Err("isomorphism test undecided".into()),
                    }
                }
                if !fresh {
                    continue;
                }
                let structural = gp_structural_test_morn(&base, &s).unwrap();
                if structural != big.is_gp(&m).unwrap() {
                    mismatches += 1;
                }
                classes.push(m);
            }
        }
    }
    if mismatches > 0 {
        return Err(format!("{mismatches} mismatches over {} classes", classes.len()));
    }
    Ok(format!("{} isomorphism classes, 0 mismatches", classes.len()))
}

fn random_module(alg: &Arc<Algebra>, rng: &mut ChaCha8Rng) -> Module {
    let nv = alg.num_vertices();
    let mut parts = vec![Module::projective(alg.clone(), rng.gen_range(0..nv)).unwrap()];
    if rng.gen_bool(0.5) {
        parts.push(Module::projective(alg.clone(), rng.gen_range(0..nv)).unwrap());
    }
    let target = direct_sum(alg, &parts).unwrap().module;
    let source = Module::projective(alg.clone(), rng.gen_range(0..nv)).unwrap();
    let p = alg.field().modulus();
    let mut m = Mat::zeros(alg.field(), target.dim(), source.dim());
    for h in hom_basis(&source, &target).unwrap() {
        m.add_scaled(&h.matrix, rng.gen_range(0..p));
    }
    cokernel(&ModuleHom::new(source, target, m).unwrap()).0
}

fn certificate(g: &Gorenstein, a: &ApproxSeq, x: &Module) -> Result<(), String> {
    a.ses.verify().map_err(|e| e.to_string())?;
    let (end, member) = match a.kind {
        reclift::homological::ApproxKind::Cofibrant => (a.ses.right(), g.is_gp(&a.replaced)),
        reclift::homological::ApproxKind::Fibrant => (a.ses.left(), g.is_gi(&a.replaced)),
    };
    if end != x {
        return Err("sequence does not contain X".into());
    }
    if !member.map_err(|e| e.to_string())? {
        return Err(format!("{:?} replacement outside its class", a.kind));
    }
    if !g.is_trivial(a.trivial_part()).map_err(|e| e.to_string())? {
        return Err(format!("{:?} trivial end is not trivial", a.kind));
    }
    Ok(())
}

fn replacement_certificates() -> Outcome {
    let d = dual_numbers();
    let t2 = Arc::new(Algebra::triangular_matrix(&d, &d, &Bimodule::regular(d.clone())).unwrap());
    let k = Arc::new(Algebra::ground_field(gf(2)));
    let t3 = MornAlgebra::new(k, 3).unwrap().algebra;
    let mut total = 0;
    for (name, alg) in [("k[x]/(x^2)", d), ("kA2", ka2()), ("T2(k[x]/(x^2))", t2), ("T3(GF(2))", t3)] {
        let g = Gorenstein::new(alg.clone(), 8).map_err(|e| format!("{name}: {e}"))?;
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for i in 0..50 {
            let x = random_module(&alg, &mut rng);
            let cof = g.cofibrant_replacement(&x).map_err(|e| format!("{name} #{i}: {e}"))?;
            let fib = g.fibrant_replacement(&x).map_err(|e| format!("{name} #{i}: {e}"))?;
            certificate(&g, &cof, &x).map_err(|e| format!("{name} #{i}: {e}"))?;
            certificate(&g, &fib, &x).map_err(|e| format!("{name} #{i}: {e}"))?;
            total += 2;
        }
    }
    Ok(format!("{total} replacements certified"))
}

fn stable_ext_bridge() -> Outcome {
    let d = dual_numbers();
    let g = Gorenstein::new(d.clone(), 6).map_err(|e| e.to_string())?;
    let k = Module::simple(d.clone(), 0).unwrap();
    let l = Module::regular(d.clone());
    let family = [("k", k.clone()), ("Λ", l.clone()), ("k⊕k", sum2(&k, &k)), ("Λ⊕k", sum2(&l, &k))];
    for (nx, x) in &family {
        for (ny, y) in &family {
            let s = stable_hom(x, &g.suspension(y).unwrap()).unwrap().dim;
            let e = ext_dim(x, y, 1).unwrap();
            if s != e {
                return Err(format!("({nx}, {ny}): stable {s} vs Ext^1 {e}"));
            }
        }
    }
    Ok(format!("{} pairs agree", family.len() * family.len()))
}

fn recollement_axioms() -> Outcome {
    let runs = [
        ("kA2", Some("e1")),
        ("kA2", Some("e2")),
        ("t2-dualnumbers", None),
        ("morn:2:dualnumbers", None),
        ("morn:3:dualnumbers", None),
    ];
    let mut checks = 0;
    for (name, e) in runs {
        let opts = Options {
            idempotent: e.map(String::from),
            ..Options::default()
        };
        let r = preset(Command::RecollementVerify, name, opts)?;
        if r.verdict != Verdict::Pass {
            return Err(format!("{name} {e:?}: {:?}", failing(&r)));
        }
        checks += r.checks.iter().map(|c| c.samples).sum::<usize>();
    }
    Ok(format!("{} instances, {checks} atomic checks, 0 failures", runs.len()))
}

fn lift_verification() -> Outcome {
    let mut lines = Vec::new();
    for name in ["t2-dualnumbers", "morn:2:dualnumbers", "morn:3:dualnumbers"] {
        let r = preset(Command::LiftVerify, name, Options::default())?;
        if r.verdict != Verdict::Pass {
            return Err(format!("{name}: {:?}", failing(&r)));
        }
        let has = |prefix: &str| r.checks.iter().any(|c| c.name.starts_with(prefix));
        for needed in [
            "setup.",
            "derived_embedding.",
            "condition_ii.",
            "stable.trivial_class_identity",
        ] {
            if !has(needed) {
                return Err(format!("{name}: no {needed} records"));
            }
        }
        if !r.summary.contains_key("conclusion") {
            return Err(format!("{name}: no conclusion"));
        }
        lines.push(format!("{name}: {} checks", r.checks.len()));
    }
    Ok(lines.join(", "))
}

fn cps_ka2() -> Outcome {
    let opts = Options {
        idempotent: Some("e2".into()),
        degree: Some(3),
        mode: Some(reclift::recollement::EmbeddingMode::Thorough),
        ..Options::default()
    };
    let r = preset(Command::Cps, "kA2", opts)?;
    let conclusion = r.summary.get("conclusion").cloned().unwrap_or_default();
    if r.verdict != Verdict::Pass || !conclusion.starts_with(CPS_CONCLUSION) {
        return Err(format!("verdict {:?}, conclusion {conclusion:?}", r.verdict));
    }
    if !conclusion.contains("degree 3") {
        return Err("conclusion does not state the degree bound".into());
    }
    Ok(conclusion)
}

fn negative_control() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_reclift");
    let dir = std::env::temp_dir().join(format!("reclift-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let out: PathBuf = dir.join("corrupted.json");
    let status = Process::new(bin)
        .args(["recollement", "verify", "--preset", "kA2", "--corrupt", "zero-inclusion", "--out"])
        .arg(&out)
        .status()
        .map_err(|e| e.to_string())?;
    if status.code() != Some(1) {
        return Err(format!("exit code {:?}, expected 1", status.code()));
    }
    let saved: Report =
        serde_json::from_str(&std::fs::read_to_string(&out).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
    let ff = saved
        .checks
        .iter()
        .find(|c| c.name == "identity.i_fully_faithful")
        .ok_or("no full-faithfulness record")?;
    if ff.pass || ff.witnesses.is_empty() {
        return Err("full faithfulness did not fail with a witness".into());
    }
    let replay = run(&Command::Replay(out.clone()), None, &Options::default()).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    if replay.verdict != Verdict::Pass {
        return Err(format!("witnesses did not reproduce: {:?}", failing(&replay)));
    }
    Ok(format!(
        "exit 1, {} failing checks, all witnesses replay",
        replay.checks.len()
    ))
}

fn main() {
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(c.check)
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let in_time = elapsed <= c.limit;
        let ok = outcome.is_ok() && in_time;
        if !ok {
            failed += 1;
        }
        let detail = match &outcome {
            Ok(s) | Err(s) => s.as_str(),
        };
        println!(
            "criterion {} {} {} ({:.2}s / limit {}s): {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            if in_time { detail.to_string() } else { format!("over time; {detail}") }
        );
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
