//! Command runners. Each command builds the spec, runs the verifiers and
//! assembles a [`Report`].

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use reclift::homological::{ext_dim, stable_hom, Gorenstein};
use reclift::modrep::{hom_dim, MorSeq};
use reclift::recollement::{
    cps_report, gp_structural_test_morn, lift_verify, replay_witness, verify_recollement_axioms,
    Check, EmbeddingMode,
};
use reclift::report::ModuleData;
use reclift::{
    Algebra, CheckRecord, GorensteinProfile, Module, MornAlgebra, SampleConfig, SampleSuite, Side,
    Verdict, Witness,
};

use crate::build::{Built, Resolved};
use crate::error::{CliError, Result};
use crate::presets::preset_text;
use crate::report::{digest, InputInfo, Report, RunInfo, TOOL, VERSION};
use crate::spec::{parse_spec, Over};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Preset(String),
    File(PathBuf),
}

impl Input {
    fn source(&self) -> String {
        match self {
            Input::Preset(n) => format!("preset:{n}"),
            Input::File(p) => p.display().to_string(),
        }
    }

    fn text(&self) -> Result<String> {
        match self {
            Input::Preset(n) => preset_text(n),
            Input::File(p) => std::fs::read_to_string(p).map_err(|source| CliError::Io {
                path: p.display().to_string(),
                source,
            }),
        }
    }

    fn from_source(s: &str) -> Self {
        match s.strip_prefix("preset:") {
            Some(n) => Input::Preset(n.to_string()),
            None => Input::File(PathBuf::from(s)),
        }
    }
}

/// Deliberate breakage for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// `i` replaced by the zero functor.
    ZeroInclusion,
}

impl Corruption {
    pub fn as_str(self) -> &'static str {
        match self {
            Corruption::ZeroInclusion => "zero-inclusion",
        }
    }
}

impl std::str::FromStr for Corruption {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "zero-inclusion" => Ok(Corruption::ZeroInclusion),
            _ => Err(format!("unknown corruption {s:?} (zero-inclusion)")),
        }
    }
}

/// Flag overrides; `None` keeps the value from the spec's `[run]` section.
#[derive(Clone, Debug, Default)]
pub struct Options {
    pub seed: Option<u64>,
    pub mode: Option<EmbeddingMode>,
    pub degree: Option<usize>,
    pub dim_bound: Option<usize>,
    pub idempotent: Option<String>,
    pub corrupt: Option<Corruption>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Gp(String),
    Approx(String),
    Ext(String, String, usize),
    StableHom(String, String),
    RecollementVerify,
    LiftVerify,
    Cps,
    Replay(PathBuf),
}

impl Command {
    fn describe(&self) -> String {
        match self {
            Command::Analyze => "analyze".into(),
            Command::Gp(x) => format!("gp {x}"),
            Command::Approx(x) => format!("approx {x}"),
            Command::Ext(x, y, n) => format!("ext {x} {y} {n}"),
            Command::StableHom(x, y) => format!("stable-hom {x} {y}"),
            Command::RecollementVerify => "recollement verify".into(),
            Command::LiftVerify => "lift verify".into(),
            Command::Cps => "cps".into(),
            Command::Replay(p) => format!("replay {}", p.display()),
        }
    }
}

struct Context {
    built: Built,
    input: InputInfo,
}

fn prepare(input: &Input, opts: &Options) -> Result<Context> {
    let text = input.text()?;
    let mut spec = parse_spec(&text)?;
    let run = &mut spec.run;
    run.seed = opts.seed.unwrap_or(run.seed);
    run.mode = opts.mode.unwrap_or(run.mode);
    run.degree = opts.degree.unwrap_or(run.degree);
    run.dim_bound = opts.dim_bound.unwrap_or(run.dim_bound);
    let mut built = Built::new(spec)?;
    if let Some(e) = &opts.idempotent {
        built = built.with_idempotent(e)?;
    }
    if let Some(c) = opts.corrupt {
        let inst = built.instance()?;
        built.instance = Some(match c {
            Corruption::ZeroInclusion => inst.with_zero_inclusion(),
        });
    }
    Ok(Context {
        built,
        input: InputInfo {
            source: input.source(),
            digest: digest(&text),
            idempotent: opts.idempotent.clone(),
            corrupt: opts.corrupt.map(|c| c.as_str().to_string()),
        },
    })
}

/// Which algebra a command-level witness lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tag {
    Over(Over),
    Morn(usize),
}

impl Tag {
    fn encode(self) -> String {
        match self {
            Tag::Over(Over::Base) => "base".into(),
            Tag::Over(Over::A) => "A".into(),
            Tag::Over(Over::B) => "B".into(),
            Tag::Over(Over::C) => "C".into(),
            Tag::Morn(n) => format!("morn{n}"),
        }
    }

    fn decode(s: &str) -> Option<Self> {
        Some(match s {
            "base" => Tag::Over(Over::Base),
            "A" => Tag::Over(Over::A),
            "B" => Tag::Over(Over::B),
            "C" => Tag::Over(Over::C),
            _ => Tag::Morn(s.strip_prefix("morn")?.parse().ok()?),
        })
    }

    /// Side recorded in witness module data (the tag is authoritative).
    fn side(self) -> Side {
        match self {
            Tag::Over(Over::A) => Side::A,
            Tag::Over(Over::C) => Side::C,
            _ => Side::B,
        }
    }
}

/// Cross-checks run by the single-object commands. Witness names take the
/// form `<check>@<tag>` so that replay can find the algebra again.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Local {
    Profile,
    GiDuality,
    StructuralOracle,
    CofibrantCertificate,
    FibrantCertificate,
    ExtDuality(usize),
    SuspensionBridge,
    StableBelowHom,
}

impl Local {
    fn name(self) -> String {
        match self {
            Local::Profile => "gorenstein.profile".into(),
            Local::GiDuality => "gp.gi_duality".into(),
            Local::StructuralOracle => "gp.structural_oracle".into(),
            Local::CofibrantCertificate => "approx.cofibrant.certificate".into(),
            Local::FibrantCertificate => "approx.fibrant.certificate".into(),
            Local::ExtDuality(n) => format!("ext.duality.deg{n}"),
            Local::SuspensionBridge => "stable_hom.suspension_bridge".into(),
            Local::StableBelowHom => "stable_hom.bounded_by_hom".into(),
        }
    }

    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "gorenstein.profile" => Local::Profile,
            "gp.gi_duality" => Local::GiDuality,
            "gp.structural_oracle" => Local::StructuralOracle,
            "approx.cofibrant.certificate" => Local::CofibrantCertificate,
            "approx.fibrant.certificate" => Local::FibrantCertificate,
            "stable_hom.suspension_bridge" => Local::SuspensionBridge,
            "stable_hom.bounded_by_hom" => Local::StableBelowHom,
            _ => Local::ExtDuality(s.strip_prefix("ext.duality.deg")?.parse().ok()?),
        })
    }
}

fn tag_algebra(built: &Built, tag: Tag) -> Result<(Arc<Algebra>, Option<Arc<MornAlgebra>>)> {
    let side = match tag {
        Tag::Over(Over::Base) => return Ok((built.base.clone(), None)),
        Tag::Over(Over::A) => Side::A,
        Tag::Over(Over::B) => Side::B,
        Tag::Over(Over::C) => Side::C,
        Tag::Morn(n) => {
            let morn = match built.instance.as_ref().and_then(|i| i.morn_algebra()) {
                Some(m) if m.n == n => m.clone(),
                _ => Arc::new(MornAlgebra::new(built.base.clone(), n)?),
            };
            return Ok((morn.algebra.clone(), Some(morn)));
        }
    };
    Ok((built.instance()?.algebra(side).clone(), None))
}

fn gorenstein(built: &Built, tag: Tag, alg: &Arc<Algebra>) -> Result<Gorenstein> {
    let side = match tag {
        Tag::Over(Over::A) => Some(Side::A),
        Tag::Over(Over::B) => Some(Side::B),
        Tag::Over(Over::C) => Some(Side::C),
        _ => None,
    };
    if let (Some(s), Some(inst)) = (side, built.instance.as_ref()) {
        return Ok(inst.gorenstein(s)?.clone());
    }
    Ok(Gorenstein::new(alg.clone(), built.spec.run.bound)?)
}

/// Runs a command-level cross-check; `Some(detail)` on failure.
fn evaluate(built: &Built, check: Local, tag: Tag, args: &[Module]) -> Result<Option<String>> {
    let (alg, morn) = tag_algebra(built, tag)?;
    let bound = built.spec.run.bound;
    let fail = |cond: bool, msg: String| Ok((!cond).then_some(msg));
    match check {
        Local::Profile => {
            let p = GorensteinProfile::compute(&alg, bound)?;
            fail(
                p.verified,
                format!("injective dimensions {} / {} within bound {bound}", p.d_left, p.d_right),
            )
        }
        Local::GiDuality => {
            let g = gorenstein(built, tag, &alg)?;
            let gp = g.is_gp(&args[0])?;
            let gi = g.opposite().is_gi(&args[0].dual())?;
            fail(gp == gi, format!("is_gp(X) = {gp} but is_gi(DX) = {gi} over the opposite"))
        }
        Local::StructuralOracle => {
            let morn = morn.ok_or_else(|| CliError::usage("structural test needs a Mor_n module"))?;
            let g = gorenstein(built, tag, &alg)?;
            let base = Gorenstein::new(morn.base.clone(), bound)?;
            let seq = MorSeq::from_module(&args[0], &morn)?;
            let structural = gp_structural_test_morn(&base, &seq)?;
            let ext = g.is_gp(&args[0])?;
            fail(
                structural == ext,
                format!("structural test says {structural}, Ext vanishing says {ext}"),
            )
        }
        Local::CofibrantCertificate => {
            let g = gorenstein(built, tag, &alg)?;
            let a = g.cofibrant_replacement(&args[0])?;
            let problems = [
                (a.ses.verify().is_ok(), "sequence not exact"),
                (a.ses.right() == &args[0], "does not end in X"),
                (g.is_gp(&a.replaced)?, "replacement not Gorenstein projective"),
                (g.is_trivial(a.trivial_part())?, "kernel has infinite projective dimension"),
            ];
            Ok(problems.iter().find(|p| !p.0).map(|p| p.1.to_string()))
        }
        Local::FibrantCertificate => {
            let g = gorenstein(built, tag, &alg)?;
            let a = g.fibrant_replacement(&args[0])?;
            let problems = [
                (a.ses.verify().is_ok(), "sequence not exact"),
                (a.ses.left() == &args[0], "does not start at X"),
                (g.is_gi(&a.replaced)?, "replacement not Gorenstein injective"),
                (g.is_trivial(a.trivial_part())?, "cokernel has infinite projective dimension"),
            ];
            Ok(problems.iter().find(|p| !p.0).map(|p| p.1.to_string()))
        }
        Local::ExtDuality(n) => {
            let lhs = ext_dim(&args[0], &args[1], n)?;
            let rhs = ext_dim(&args[1].dual(), &args[0].dual(), n)?;
            fail(lhs == rhs, format!("Ext^{n}(X, Y) = {lhs} but Ext^{n}(DY, DX) = {rhs}"))
        }
        Local::SuspensionBridge => {
            let g = gorenstein(built, tag, &alg)?;
            let s = stable_hom(&args[0], &g.suspension(&args[1])?)?.dim;
            let e = ext_dim(&args[0], &args[1], 1)?;
            fail(s == e, format!("stable Hom(X, ΣY) = {s} but Ext^1(X, Y) = {e}"))
        }
        Local::StableBelowHom => {
            let s = stable_hom(&args[0], &args[1])?.dim;
            let h = hom_dim(&args[0], &args[1])?;
            fail(s <= h, format!("stable Hom {s} exceeds Hom {h}"))
        }
    }
}

fn local_record(built: &Built, check: Local, tag: Tag, args: &[Module]) -> Result<CheckRecord> {
    let outcome = evaluate(built, check, tag, args)?;
    let witnesses = outcome
        .iter()
        .map(|detail| Witness {
            check: format!("{}@{}", check.name(), tag.encode()),
            modules: args.iter().map(|m| ModuleData::capture(tag.side(), m)).collect(),
            morphisms: vec![],
            detail: detail.clone(),
        })
        .collect();
    Ok(CheckRecord {
        name: check.name(),
        mode: "exact".into(),
        scope: "single input".into(),
        samples: 1,
        skipped: 0,
        pass: outcome.is_none(),
        witnesses,
    })
}

fn replay_local(built: &Built, w: &Witness) -> Result<Option<bool>> {
    let Some((name, tag)) = w.check.split_once('@') else {
        return Ok(None);
    };
    let (Some(check), Some(tag)) = (Local::parse(name), Tag::decode(tag)) else {
        return Ok(None);
    };
    let (alg, _) = tag_algebra(built, tag)?;
    let args = w
        .modules
        .iter()
        .map(|d| d.rebuild(alg.clone()))
        .collect::<reclift::Result<Vec<_>>>()?;
    Ok(Some(evaluate(built, check, tag, &args)?.is_some()))
}

fn tag_of(r: &Resolved<'_>) -> Tag {
    match r {
        Resolved::Plain(o, _) => Tag::Over(*o),
        Resolved::Sequence(s) => Tag::Morn(s.seq.len()),
    }
}

fn profile_summary(out: &mut BTreeMap<String, String>, prefix: &str, p: &GorensteinProfile) {
    out.insert(format!("{prefix}.d_left"), p.d_left.to_string());
    out.insert(format!("{prefix}.d_right"), p.d_right.to_string());
    out.insert(
        format!("{prefix}.d"),
        p.d.map_or_else(|| format!("not verified within bound {}", p.bound), |d| d.to_string()),
    );
}

fn sample_config(built: &Built) -> SampleConfig {
    let r = &built.spec.run;
    SampleConfig {
        depth: r.depth,
        random: r.random,
        dim_bound: r.dim_bound,
        seed: r.seed,
    }
}

fn pair<'a>(built: &'a Built, x: &str, y: &str) -> Result<(Tag, Resolved<'a>, Resolved<'a>)> {
    let (rx, ry) = (built.resolve(x)?, built.resolve(y)?);
    let (tx, ty) = (tag_of(&rx), tag_of(&ry));
    if tx != ty || rx.module().algebra() != ry.module().algebra() {
        return Err(CliError::usage(format!("{x} and {y} are modules over different algebras")));
    }
    Ok((tx, rx, ry))
}

/// Runs a command and assembles its report. Errors are input or
/// construction problems (exit code 2).
pub fn run(command: &Command, input: Option<&Input>, opts: &Options) -> Result<Report> {
    if let Command::Replay(path) = command {
        return replay(path, input);
    }
    let input = input.ok_or_else(|| CliError::usage("give --preset NAME or --spec FILE"))?;
    let ctx = prepare(input, opts)?;
    let built = &ctx.built;
    let mut summary = BTreeMap::new();
    let mut checks = Vec::new();
    match command {
        Command::Analyze => {
            let base = &built.base;
            profile_summary(
                &mut summary,
                "base",
                &GorensteinProfile::compute(base, built.spec.run.bound)?,
            );
            summary.insert("base.dim".into(), base.dim().to_string());
            let regular = |a: &Arc<Algebra>| Module::regular(a.clone());
            checks.push(local_record(built, Local::Profile, Tag::Over(Over::Base), &[regular(base)])?);
            if let Some(inst) = &built.instance {
                for (side, over) in [(Side::A, Over::A), (Side::B, Over::B), (Side::C, Over::C)] {
                    let a = inst.algebra(side);
                    summary.insert(format!("{side}.dim"), a.dim().to_string());
                    profile_summary(&mut summary, &side.to_string(), inst.profile(side));
                    let mut rec = local_record(built, Local::Profile, Tag::Over(over), &[regular(a)])?;
                    rec.name = format!("{}.{side}", rec.name);
                    checks.push(rec);
                }
                if let Some(d) = &inst.degenerate {
                    summary.insert("degenerate".into(), d.clone());
                }
            }
            checks[0].name = "gorenstein.profile.base".into();
        }
        Command::Gp(x) => {
            let r = built.resolve(x)?;
            let tag = tag_of(&r);
            let (alg, _) = tag_algebra(built, tag)?;
            let g = gorenstein(built, tag, &alg)?;
            let m = r.module();
            summary.insert("dim".into(), m.dim().to_string());
            summary.insert("is_gp".into(), g.is_gp(m)?.to_string());
            summary.insert("is_gi".into(), g.is_gi(m)?.to_string());
            if let Resolved::Sequence(s) = &r {
                let base = Gorenstein::new(built.base.clone(), built.spec.run.bound)?;
                let st = gp_structural_test_morn(&base, &s.seq)?;
                summary.insert("structural".into(), st.to_string());
                checks.push(local_record(built, Local::StructuralOracle, tag, std::slice::from_ref(m))?);
            }
            checks.push(local_record(built, Local::GiDuality, tag, std::slice::from_ref(m))?);
        }
        Command::Approx(x) => {
            let r = built.resolve(x)?;
            let tag = tag_of(&r);
            let (alg, _) = tag_algebra(built, tag)?;
            let g = gorenstein(built, tag, &alg)?;
            let m = r.module();
            let cof = g.cofibrant_replacement(m)?;
            let fib = g.fibrant_replacement(m)?;
            for (k, a) in [("cofibrant", &cof), ("fibrant", &fib)] {
                summary.insert(format!("{k}.replacement_dim"), a.replaced.dim().to_string());
                summary.insert(format!("{k}.trivial_dim"), a.trivial_part().dim().to_string());
                summary.insert(format!("{k}.trivial_pd"), a.trivial_pd.to_string());
            }
            checks.push(local_record(built, Local::CofibrantCertificate, tag, std::slice::from_ref(m))?);
            checks.push(local_record(built, Local::FibrantCertificate, tag, std::slice::from_ref(m))?);
        }
        Command::Ext(x, y, n) => {
            let (tag, rx, ry) = pair(built, x, y)?;
            let (mx, my) = (rx.module().clone(), ry.module().clone());
            summary.insert("ext_dim".into(), ext_dim(&mx, &my, *n)?.to_string());
            checks.push(local_record(built, Local::ExtDuality(*n), tag, &[mx, my])?);
        }
        Command::StableHom(x, y) => {
            let (tag, rx, ry) = pair(built, x, y)?;
            let (mx, my) = (rx.module().clone(), ry.module().clone());
            summary.insert("stable_hom_dim".into(), stable_hom(&mx, &my)?.dim.to_string());
            summary.insert("hom_dim".into(), hom_dim(&mx, &my)?.to_string());
            checks.push(local_record(built, Local::StableBelowHom, tag, &[mx.clone(), my.clone()])?);
            let (alg, _) = tag_algebra(built, tag)?;
            if let Ok(g) = gorenstein(built, tag, &alg) {
                if g.is_gp(&mx)? && g.is_gp(&my)? {
                    let s = stable_hom(&mx, &g.suspension(&my)?)?.dim;
                    summary.insert("stable_hom_dim_to_suspension".into(), s.to_string());
                    summary.insert("ext1_dim".into(), ext_dim(&mx, &my, 1)?.to_string());
                    checks.push(local_record(built, Local::SuspensionBridge, tag, &[mx, my])?);
                }
            }
        }
        Command::RecollementVerify => {
            let inst = built.instance()?;
            let suite = SampleSuite::new(inst, &sample_config(built))?;
            let rep = verify_recollement_axioms(inst, &suite);
            summary.insert("samples".into(), rep.samples);
            if let Some(d) = rep.degenerate {
                summary.insert("degenerate".into(), d);
            }
            if let Some(c) = rep.corrupted {
                summary.insert("corrupted".into(), c);
            }
            checks = rep.records;
        }
        Command::LiftVerify => {
            let inst = built.instance()?;
            let suite = SampleSuite::new(inst, &sample_config(built))?;
            let run = &built.spec.run;
            let rep = lift_verify(inst, &suite, run.mode, run.degree)?;
            summary.insert("samples".into(), rep.samples.clone());
            if let Some(c) = &rep.conclusion {
                summary.insert("conclusion".into(), c.clone());
            }
            if let Some(d) = &rep.degenerate {
                summary.insert("degenerate".into(), d.clone());
            }
            for (k, recs) in [
                ("setup", &rep.setup),
                ("condition_i", &rep.condition_i),
                ("condition_ii", &rep.condition_ii),
                ("condition_ii_prime", &rep.condition_ii_prime),
                ("stable", &rep.stable),
            ] {
                summary.insert(format!("section.{k}"), Verdict::of(recs).as_str().into());
            }
            checks = rep.records().cloned().collect();
        }
        Command::Cps => {
            let inst = built.instance()?;
            let suite = SampleSuite::new(inst, &sample_config(built))?;
            let run = &built.spec.run;
            let rep = cps_report(inst, &suite, run.degree, run.mode)?;
            summary.insert("stratifying".into(), if rep.stratifying { "pass" } else { "fail" }.into());
            summary.insert("scope".into(), rep.scope);
            if let Some(c) = rep.conclusion {
                summary.insert("conclusion".into(), c);
            }
            checks = rep.records;
        }
        Command::Replay(_) => unreachable!("handled above"),
    }
    Ok(assemble(command, &ctx, summary, checks))
}

fn assemble(
    command: &Command,
    ctx: &Context,
    summary: BTreeMap<String, String>,
    checks: Vec<CheckRecord>,
) -> Report {
    let r = &ctx.built.spec.run;
    Report {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: command.describe(),
        input: ctx.input.clone(),
        run: RunInfo {
            seed: r.seed,
            depth: r.depth,
            random: r.random,
            dim_bound: r.dim_bound,
            degree: r.degree,
            mode: r.mode.to_string(),
            bound: r.bound,
        },
        instance: ctx.built.instance.as_ref().map(|i| format!("{:?}", i.provenance)),
        verdict: Verdict::of(&checks),
        summary,
        checks,
    }
}

/// Feeds every witness of a saved report back through its check. A replay
/// record passes when all of its witnesses fail again.
fn replay(path: &PathBuf, input: Option<&Input>) -> Result<Report> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let saved: Report = serde_json::from_str(&text)?;
    let input = input
        .cloned()
        .unwrap_or_else(|| Input::from_source(&saved.input.source));
    let opts = Options {
        seed: Some(saved.run.seed),
        mode: Some(saved.run.mode.parse()?),
        degree: Some(saved.run.degree),
        dim_bound: Some(saved.run.dim_bound),
        idempotent: saved.input.idempotent.clone(),
        corrupt: saved
            .input
            .corrupt
            .as_deref()
            .map(str::parse)
            .transpose()
            .map_err(CliError::Usage)?,
    };
    let ctx = prepare(&input, &opts)?;
    if ctx.input.digest != saved.input.digest {
        return Err(CliError::usage(format!(
            "input digest {} does not match the report's {}",
            ctx.input.digest, saved.input.digest
        )));
    }
    let mut checks = Vec::new();
    for rec in saved.checks.iter().filter(|r| !r.pass) {
        let mut out = CheckRecord {
            name: format!("replay.{}", rec.name),
            mode: rec.mode.clone(),
            scope: format!("{} saved witnesses", rec.witnesses.len()),
            samples: 0,
            skipped: 0,
            pass: !rec.witnesses.is_empty(),
            witnesses: vec![],
        };
        if rec.witnesses.is_empty() {
            out.scope = "failing record without witnesses".into();
        }
        for w in &rec.witnesses {
            out.samples += 1;
            let reproduced = match replay_local(&ctx.built, w)? {
                Some(r) => r,
                None if Check::parse(&w.check).is_some() => {
                    replay_witness(ctx.built.instance()?, w)?
                }
                None => return Err(CliError::usage(format!("unknown witness check {:?}", w.check))),
            };
            if !reproduced {
                out.pass = false;
                out.witnesses.push(Witness {
                    detail: format!("did not reproduce: {}", w.detail),
                    ..w.clone()
                });
            }
        }
        checks.push(out);
    }
    let mut summary = BTreeMap::new();
    summary.insert("replayed_report".into(), saved.command.clone());
    summary.insert("replayed_verdict".into(), saved.verdict.as_str().into());
    Ok(assemble(&Command::Replay(path.clone()), &ctx, summary, checks))
}
