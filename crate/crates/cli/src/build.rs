//! Turns a parsed spec into algebras, an instance and named modules.

use std::sync::Arc;

use reclift::algebra::{MornAlgebra, QuiverPresentation, Relation};
use reclift::modrep::{ModuleHom, MorSeq};
use reclift::recollement::{idempotent_recollement, morn_recollement, triangular_recollement};
use reclift::{Algebra, AlgebraData, Bimodule, Field, Mat, Module, RecollementInstance, Side};

use crate::error::{CliError, ParseError, Result};
use crate::spec::{
    AlgebraSpec, Combination, InstanceKind, InstanceSpecFile, ModuleBody, ModuleSpec, MorSeqSpec,
    Over, TriangularBimodule,
};

/// A spec with everything constructed.
pub struct Built {
    pub spec: InstanceSpecFile,
    pub base: Arc<Algebra>,
    pub instance: Option<RecollementInstance>,
    modules: Vec<(String, Over, Module)>,
    morseqs: Vec<NamedMorSeq>,
}

pub struct NamedMorSeq {
    pub name: String,
    pub seq: MorSeq,
    pub morn: Arc<MornAlgebra>,
    pub module: Module,
}

/// A module looked up by name.
pub enum Resolved<'a> {
    Plain(Over, Module),
    Sequence(&'a NamedMorSeq),
}

impl Resolved<'_> {
    pub fn module(&self) -> &Module {
        match self {
            Resolved::Plain(_, m) => m,
            Resolved::Sequence(s) => &s.module,
        }
    }
}

fn positioned(line: usize, e: impl ToString) -> CliError {
    CliError::Parse(vec![ParseError {
        line,
        message: e.to_string(),
    }])
}

fn matrix(f: Field, rows: &[Vec<i64>], r: usize, c: usize) -> Result<Mat> {
    if rows.is_empty() {
        return Ok(Mat::zeros(f, r, c));
    }
    Ok(Mat::from_rows(f, rows)?)
}

/// Coordinates of a combination of basis labels.
pub fn vector(alg: &Algebra, c: &Combination) -> Result<Vec<u32>, String> {
    let f = alg.field();
    let mut v = vec![0u32; alg.dim()];
    for (coef, label) in c {
        let i = alg
            .label_index(label)
            .ok_or_else(|| format!("unresolved label {label}"))?;
        v[i] = f.add(v[i], f.reduce(*coef));
    }
    Ok(v)
}

fn algebra(spec: &InstanceSpecFile) -> Result<Arc<Algebra>> {
    let field = Field::new(spec.p)?;
    let alg = match &spec.algebra {
        AlgebraSpec::Quiver {
            vertices,
            arrows,
            relations,
        } => {
            let mut q = QuiverPresentation::new(field, vertices.clone());
            for (label, s, t) in arrows {
                q.arrow(label, s, t)?;
            }
            for rel in relations {
                let terms = rel
                    .iter()
                    .map(|(c, path)| Ok((*c, q.parse_path(path)?)))
                    .collect::<Result<Vec<_>>>()?;
                q.relations.push(Relation { terms });
            }
            q.to_algebra()?
        }
        AlgebraSpec::Constants {
            basis,
            unit,
            idempotents,
            radical,
            products,
        } => {
            let n = basis.len();
            let idx = |l: &str| basis.iter().position(|b| b == l).expect("validated");
            let vec_of = |c: &Combination| {
                let mut v = vec![0u32; n];
                for (coef, l) in c {
                    let i = idx(l);
                    v[i] = field.add(v[i], field.reduce(*coef));
                }
                v
            };
            let mut consts = vec![0u32; n * n * n];
            for (a, b, c, _) in products {
                let (i, j) = (idx(a), idx(b));
                for (k, x) in vec_of(c).into_iter().enumerate() {
                    consts[(i * n + j) * n + k] = x;
                }
            }
            let vertex_labels = idempotents
                .iter()
                .enumerate()
                .map(|(k, e)| match e.as_slice() {
                    [(1, l)] => l.clone(),
                    _ => format!("v{}", k + 1),
                })
                .collect();
            Algebra::new(AlgebraData {
                field,
                labels: basis.clone(),
                consts,
                unit: vec_of(unit),
                idempotents: idempotents.iter().map(vec_of).collect(),
                vertex_labels,
                radical: radical.as_ref().map(|r| r.iter().map(vec_of).collect()),
            })?
        }
    };
    Ok(Arc::new(alg))
}

fn side_algebra(
    base: &Arc<Algebra>,
    inst: Option<&RecollementInstance>,
    over: Over,
    line: usize,
) -> Result<Arc<Algebra>> {
    let side = match over {
        Over::Base => return Ok(base.clone()),
        Over::A => Side::A,
        Over::B => Side::B,
        Over::C => Side::C,
    };
    inst.map(|i| i.algebra(side).clone())
        .ok_or_else(|| positioned(line, "module over an instance side needs an [instance]"))
}

fn module(
    base: &Arc<Algebra>,
    inst: Option<&RecollementInstance>,
    alg_spec: &AlgebraSpec,
    m: &ModuleSpec,
) -> Result<Module> {
    let alg = side_algebra(base, inst, m.over, m.line)?;
    let f = alg.field();
    match &m.body {
        ModuleBody::Representation { dims, arrows } => {
            let total: usize = dims.iter().sum();
            let offsets: Vec<usize> = dims
                .iter()
                .scan(0, |acc, d| {
                    let o = *acc;
                    *acc += d;
                    Some(o)
                })
                .collect();
            let mut given = Vec::new();
            for (v, e) in alg.idempotents().iter().enumerate() {
                let mut mat = Mat::zeros(f, total, total);
                for k in 0..dims[v] {
                    mat.set(offsets[v] + k, offsets[v] + k, 1);
                }
                given.push((e.clone(), mat));
            }
            let AlgebraSpec::Quiver { arrows: quiver_arrows, .. } = alg_spec else {
                return Err(positioned(m.line, "dims needs a quiver algebra"));
            };
            for (label, rows, line) in arrows {
                let (_, s, t) = quiver_arrows
                    .iter()
                    .find(|a| &a.0 == label)
                    .expect("validated");
                let (si, ti) = (
                    alg.vertex_index(s).expect("validated"),
                    alg.vertex_index(t).expect("validated"),
                );
                let block = matrix(f, rows, dims[ti], dims[si]).map_err(|e| positioned(*line, e))?;
                let mut mat = Mat::zeros(f, total, total);
                mat.set_block(offsets[ti], offsets[si], &block);
                let a = alg
                    .label_index(label)
                    .ok_or_else(|| positioned(*line, format!("arrow {label} is zero in the algebra")))?;
                given.push((alg.basis_vector(a), mat));
            }
            // arrows left out act by zero
            for (label, _, _) in quiver_arrows {
                if !arrows.iter().any(|a| &a.0 == label) {
                    if let Some(a) = alg.label_index(label) {
                        given.push((alg.basis_vector(a), Mat::zeros(f, total, total)));
                    }
                }
            }
            Module::from_generator_actions(alg, total, &given).map_err(|e| positioned(m.line, e))
        }
        ModuleBody::Actions { dim, actions } => {
            let mut given = Vec::new();
            for (label, rows, line) in actions {
                let i = alg
                    .label_index(label)
                    .ok_or_else(|| positioned(*line, format!("unresolved label {label}")))?;
                let mat = matrix(f, rows, *dim, *dim).map_err(|e| positioned(*line, e))?;
                given.push((alg.basis_vector(i), mat));
            }
            Module::from_generator_actions(alg, *dim, &given).map_err(|e| positioned(m.line, e))
        }
    }
}

/// Built-in names: `Lambda`, `P<v>`, `I<v>`, `S<v>` for a vertex label `v`,
/// optionally prefixed by a side (`A:S1`).
fn builtin(alg: &Arc<Algebra>, name: &str) -> Option<Result<Module>> {
    if name == "Lambda" {
        return Some(Ok(Module::regular(alg.clone())));
    }
    let (kind, v) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |x| x.0));
    let v = alg.vertex_index(v)?;
    let m = match kind {
        "P" => Module::projective(alg.clone(), v),
        "I" => Module::injective(alg.clone(), v),
        "S" => Module::simple(alg.clone(), v),
        _ => return None,
    };
    Some(m.map_err(CliError::from))
}

impl Built {
    pub fn new(spec: InstanceSpecFile) -> Result<Self> {
        let base = algebra(&spec)?;
        let bound = spec.run.bound;
        let instance = match &spec.instance {
            None => None,
            Some(i) => Some(match &i.kind {
                InstanceKind::Idempotent { idempotent, text } => {
                    let e = vector(&base, idempotent).map_err(|e| positioned(i.line, e))?;
                    idempotent_recollement(base.clone(), &e, text, bound)?
                }
                InstanceKind::Morn { n } => morn_recollement(base.clone(), *n, bound)?,
                InstanceKind::Triangular { bimodule } => {
                    let m = match bimodule {
                        TriangularBimodule::Regular => Bimodule::regular(base.clone()),
                        TriangularBimodule::Zero => Bimodule::zero(base.clone(), base.clone()),
                    };
                    triangular_recollement(&base, &base, &m, bound)?
                }
            }),
        };
        let modules = spec
            .modules
            .iter()
            .map(|m| Ok((m.name.clone(), m.over, module(&base, instance.as_ref(), &spec.algebra, m)?)))
            .collect::<Result<Vec<_>>>()?;
        let mut built = Built {
            base,
            instance,
            modules,
            morseqs: vec![],
            spec,
        };
        let seqs = built
            .spec
            .morseqs
            .iter()
            .map(|s| built.morseq(s))
            .collect::<Result<Vec<_>>>()?;
        built.morseqs = seqs;
        Ok(built)
    }

    /// Replaces the instance's idempotent (idempotent instances only).
    pub fn with_idempotent(mut self, text: &str) -> Result<Self> {
        let c = crate::spec::parse_combination(text).map_err(CliError::Usage)?;
        let e = vector(&self.base, &c).map_err(CliError::Usage)?;
        match &self.spec.instance {
            Some(i) if matches!(i.kind, InstanceKind::Idempotent { .. }) => {}
            _ => return Err(CliError::usage("--idempotent needs an idempotent instance")),
        }
        self.instance = Some(idempotent_recollement(self.base.clone(), &e, text, self.spec.run.bound)?);
        Ok(self)
    }

    pub fn instance(&self) -> Result<&RecollementInstance> {
        self.instance
            .as_ref()
            .ok_or_else(|| CliError::usage("this command needs an [instance] section"))
    }

    fn plain(&self, name: &str) -> Result<(Over, Module)> {
        let (over, bare) = match name.split_once(':') {
            Some(("A", b)) => (Over::A, b),
            Some(("B", b)) => (Over::B, b),
            Some(("C", b)) => (Over::C, b),
            _ => (Over::Base, name),
        };
        if over == Over::Base {
            if let Some((_, o, m)) = self.modules.iter().find(|m| m.0 == name) {
                return Ok((*o, m.clone()));
            }
        }
        let alg = side_algebra(&self.base, self.instance.as_ref(), over, 0)
            .map_err(|_| CliError::usage(format!("{name}: side modules need an [instance]")))?;
        match builtin(&alg, bare) {
            Some(m) => Ok((over, m?)),
            None => Err(CliError::usage(format!("unknown module {name:?}"))),
        }
    }

    pub fn resolve(&self, name: &str) -> Result<Resolved<'_>> {
        if let Some(s) = self.morseqs.iter().find(|s| s.name == name) {
            return Ok(Resolved::Sequence(s));
        }
        let (o, m) = self.plain(name)?;
        Ok(Resolved::Plain(o, m))
    }

    fn morseq(&self, s: &MorSeqSpec) -> Result<NamedMorSeq> {
        let at = |e: CliError| positioned(s.line, e);
        let mut objects = Vec::new();
        for o in &s.objects {
            let (over, m) = self.plain(o).map_err(at)?;
            if over != Over::Base && !Arc::ptr_eq(m.algebra(), &self.base) {
                return Err(positioned(s.line, format!("{o} is not a module over the base algebra")));
            }
            objects.push(m);
        }
        let f = self.base.field();
        let mut maps = Vec::new();
        for (k, rows) in s.maps.iter().enumerate() {
            let (src, tgt) = (&objects[k], &objects[k + 1]);
            let (r, c) = (rows.len(), rows.first().map_or(0, Vec::len));
            if !rows.is_empty() && (r != tgt.dim() || c != src.dim()) {
                return Err(positioned(
                    s.line,
                    format!("map {} must be {}x{}, got {r}x{c}", k + 1, tgt.dim(), src.dim()),
                ));
            }
            let m = matrix(f, rows, tgt.dim(), src.dim()).map_err(at)?;
            maps.push(ModuleHom::new(src.clone(), tgt.clone(), m).map_err(|e| at(e.into()))?);
        }
        let seq = MorSeq::new(objects, maps).map_err(|e| at(e.into()))?;
        let n = seq.len();
        let morn = match self.instance.as_ref().and_then(|i| i.morn_algebra()) {
            Some(m) if m.n == n => m.clone(),
            _ => Arc::new(MornAlgebra::new(self.base.clone(), n)?),
        };
        let module = seq.to_module(&morn).map_err(|e| at(e.into()))?;
        Ok(NamedMorSeq {
            name: s.name.clone(),
            seq,
            morn,
            module,
        })
    }
}
