use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use reclift::Verdict;
use reclift_cli::Report;

fn reclift(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_reclift"))
        .args(args)
        .env_remove("RECLIFT_SEED")
        .output()
        .unwrap()
}

fn report(out: &Output) -> Report {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr))
    })
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("reclift-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn every_preset_passes_recollement_verify() {
    for p in [
        "dualnumbers",
        "kA2",
        "t2-dualnumbers",
        "morn:2:dualnumbers",
        "morn:3:dualnumbers",
        "morn:3:gf2",
        "cycle2",
    ] {
        let out = reclift(&["recollement", "verify", "--preset", p]);
        assert_eq!(out.status.code(), Some(0), "{p}");
        assert_eq!(report(&out).verdict, Verdict::Pass, "{p}");
    }
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["lift", "verify", "--preset", "t2-dualnumbers", "--seed", "5"];
    let a = reclift(&args);
    let b = reclift(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let md = ["recollement", "verify", "--preset", "kA2", "--format", "md"];
    assert_eq!(reclift(&md).stdout, reclift(&md).stdout);
}

#[test]
fn seed_flag_beats_environment() {
    let run = |env: Option<&str>, flag: Option<&str>| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_reclift"));
        c.args(["analyze", "--preset", "kA2"]).env_remove("RECLIFT_SEED");
        if let Some(e) = env {
            c.env("RECLIFT_SEED", e);
        }
        if let Some(f) = flag {
            c.args(["--seed", f]);
        }
        report(&c.output().unwrap()).run.seed
    };
    assert_eq!(run(None, None), 0);
    assert_eq!(run(Some("9"), None), 9);
    assert_eq!(run(Some("9"), Some("4")), 4);
}

#[test]
fn exit_codes() {
    let fail = reclift(&["cps", "e1", "--preset", "cycle2", "--degree", "3"]);
    assert_eq!(fail.status.code(), Some(1));
    let r = report(&fail);
    assert_eq!(r.summary["stratifying"], "fail");
    assert!(!r.summary.contains_key("conclusion"));

    let ok = reclift(&["cps", "e2", "--preset", "cycle2", "--degree", "3"]);
    assert_eq!(ok.status.code(), Some(0));

    let bad = scratch("p4.spec");
    std::fs::write(&bad, "[field]\np = 4\n[algebra]\nvertices = 1\n").unwrap();
    let out = reclift(&["analyze", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2") && err.contains("non-prime"), "{err}");

    assert_eq!(reclift(&["analyze", "--preset", "nope"]).status.code(), Some(2));
    assert_eq!(reclift(&["analyze"]).status.code(), Some(2));
    // the stratifying check is only defined for idempotent instances
    assert_eq!(reclift(&["cps", "--preset", "morn:2:dualnumbers"]).status.code(), Some(2));
}

#[test]
fn replaying_a_passing_report_has_no_checks() {
    let path = scratch("pass.json");
    let out = reclift(&["recollement", "verify", "--preset", "kA2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let replay = reclift(&["replay", path.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(2));
    assert_eq!(report(&replay).verdict, Verdict::NoChecks);
}

#[test]
fn non_stratifying_witnesses_replay() {
    let path = scratch("cps.json");
    let p = path.to_str().unwrap();
    assert_eq!(reclift(&["cps", "e1", "--preset", "cycle2", "--out", p]).status.code(), Some(1));
    let replay = reclift(&["replay", p]);
    assert_eq!(replay.status.code(), Some(0));
    let r = report(&replay);
    assert!(r.checks.iter().any(|c| c.name.ends_with("deg2")));
}

#[test]
fn tampered_witness_does_not_replay() {
    let out = reclift(&["gp", "k", "--preset", "dualnumbers"]);
    let mut r = report(&out);
    let rec = &mut r.checks[0];
    rec.pass = false;
    rec.witnesses.push(reclift::Witness {
        check: format!("{}@base", rec.name),
        modules: vec![reclift::report::ModuleData {
            side: reclift::Side::B,
            dim: 1,
            action: vec![vec![vec![1]], vec![vec![0]]],
        }],
        morphisms: vec![],
        detail: "fabricated".into(),
    });
    let path = scratch("tampered.json");
    std::fs::write(&path, serde_json::to_string(&r).unwrap()).unwrap();
    let replay = reclift(&["replay", path.to_str().unwrap()]);
    assert_eq!(replay.status.code(), Some(1));
    let rr = report(&replay);
    assert!(rr.checks[0].witnesses[0].detail.starts_with("did not reproduce"));
}

#[test]
fn replay_rejects_a_different_input() {
    let path = scratch("other.json");
    let p = path.to_str().unwrap();
    reclift(&["recollement", "verify", "--preset", "kA2", "--corrupt", "zero-inclusion", "--out", p]);
    let out = reclift(&["replay", p, "--preset", "dualnumbers"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("digest"));
}

#[test]
fn markdown_renders_the_same_data() {
    let out = reclift(&["recollement", "verify", "--preset", "kA2", "--corrupt", "zero-inclusion", "--format", "md"]);
    assert_eq!(out.status.code(), Some(1));
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.contains("- verdict: **fail**"));
    assert!(md.contains("| identity.i_fully_faithful | exhaustive |"));
    assert!(md.contains("## Witnesses"));
}

#[test]
fn morseq_fixture() {
    let spec = fixture("mor2-dual.spec");
    let r = report(&reclift(&["gp", "mult_x", "--spec", &spec]));
    assert_eq!(r.summary["is_gp"], "false");
    assert_eq!(r.summary["structural"], "false");
    assert!(r.checks.iter().any(|c| c.name == "gp.structural_oracle" && c.pass));
    let r = report(&reclift(&["gp", "incl", "--spec", &spec]));
    assert_eq!(r.summary["is_gp"], "true");
    assert_eq!(r.run.seed, 3);
    assert_eq!(r.run.mode, "fast");
    let out = reclift(&["lift", "verify", "--spec", &spec, "--mode", "thorough"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).run.mode, "thorough");
}

#[test]
fn structure_constant_fixture() {
    let spec = fixture("dual-constants.spec");
    let r = report(&reclift(&["analyze", "--spec", &spec]));
    assert_eq!(r.summary["base.d"], "0");
    assert_eq!(r.summary["B.dim"], "6");
    let out = reclift(&["recollement", "verify", "--spec", &spec]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn object_commands_on_dual_numbers() {
    let r = report(&reclift(&["ext", "k", "k", "3", "--preset", "dualnumbers"]));
    assert_eq!(r.summary["ext_dim"], "1");
    let r = report(&reclift(&["stable-hom", "S1", "Lambda", "--preset", "dualnumbers"]));
    assert_eq!(r.summary["stable_hom_dim"], "0");
    let r = report(&reclift(&["approx", "A:S1", "--preset", "kA2"]));
    assert_eq!(r.verdict, Verdict::Pass);
    let out = reclift(&["ext", "k", "A:S1", "1", "--preset", "kA2"]);
    assert_eq!(out.status.code(), Some(2));
}
