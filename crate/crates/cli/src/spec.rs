//! The line-oriented instance spec format.
//!
//! ```text
//! [field]
//! p = 2
//!
//! [algebra]
//! vertices = 1
//! arrows = x: 1 -> 1
//! relations = x*x
//!
//! [instance]
//! kind = idempotent
//! idempotent = e1
//! ```
//!
//! See `docs/spec-format.md` for every section and key.

use reclift::recollement::EmbeddingMode;

use crate::error::{CliError, ParseError};

/// `coefficient * label-or-path` terms of a linear combination.
pub type Combination = Vec<(i64, String)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpecFile {
    pub p: u32,
    pub algebra: AlgebraSpec,
    pub instance: Option<InstanceSpec>,
    pub modules: Vec<ModuleSpec>,
    pub morseqs: Vec<MorSeqSpec>,
    pub run: RunSpec,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSpec {
    Quiver {
        vertices: Vec<String>,
        /// `(label, source, target)`.
        arrows: Vec<(String, String, String)>,
        /// Each relation is a combination of paths written `b*a`.
        relations: Vec<Combination>,
    },
    Constants {
        basis: Vec<String>,
        unit: Combination,
        idempotents: Vec<Combination>,
        radical: Option<Vec<Combination>>,
        /// `(left, right, product)`.
        products: Vec<(String, String, Combination, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Idempotent { idempotent: Combination, text: String },
    Morn { n: usize },
    Triangular { bimodule: TriangularBimodule },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangularBimodule {
    Regular,
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceSpec {
    pub kind: InstanceKind,
    pub line: usize,
}

/// Where a spec module lives: the algebra of `[algebra]` or one side of the
/// instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Over {
    Base,
    A,
    B,
    C,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleBody {
    /// Vertex dimensions and one matrix per arrow (quiver algebras only).
    Representation {
        dims: Vec<usize>,
        arrows: Vec<(String, Vec<Vec<i64>>, usize)>,
    },
    /// Total dimension and the actions of a generating set of basis labels.
    Actions {
        dim: usize,
        actions: Vec<(String, Vec<Vec<i64>>, usize)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleSpec {
    pub name: String,
    pub over: Over,
    pub body: ModuleBody,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorSeqSpec {
    pub name: String,
    pub objects: Vec<String>,
    pub maps: Vec<Vec<Vec<i64>>>,
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSpec {
    pub seed: u64,
    pub depth: usize,
    pub random: usize,
    pub dim_bound: usize,
    pub degree: usize,
    pub mode: EmbeddingMode,
    /// Resolution length used for Gorenstein profiles.
    pub bound: usize,
}

impl Default for RunSpec {
    fn default() -> Self {
        RunSpec {
            seed: 0,
            depth: 2,
            random: 4,
            dim_bound: 6,
            degree: 3,
            mode: EmbeddingMode::Thorough,
            bound: 8,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Section {
    None,
    Field,
    Algebra,
    Instance,
    Module(usize),
    MorSeq(usize),
    Run,
}

/// `key = value` at a line.
type Entry = (String, String, usize);

#[derive(Default)]
struct Draft {
    p: Option<(u32, usize)>,
    vertices: Option<Vec<String>>,
    arrows: Vec<(String, String, String, usize)>,
    relations: Vec<(Combination, usize)>,
    basis: Option<Vec<String>>,
    unit: Option<Combination>,
    idempotents: Vec<Combination>,
    radical: Option<Vec<Combination>>,
    products: Vec<(String, String, Combination, usize)>,
    algebra_line: usize,
    instance: Vec<Entry>,
    instance_line: Option<usize>,
    modules: Vec<(String, Vec<Entry>, usize)>,
    morseqs: Vec<(String, Vec<Entry>, usize)>,
    run: RunSpec,
}

struct Parser {
    errors: Vec<ParseError>,
}

impl Parser {
    fn err(&mut self, line: usize, msg: impl Into<String>) {
        self.errors.push(ParseError {
            line,
            message: msg.into(),
        });
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '\'' | '-'))
}

/// Splits `2 a*b - c*d + x` into signed terms.
pub fn parse_combination(text: &str) -> Result<Combination, String> {
    let text = text.trim();
    if text.is_empty() {
        return Err("empty expression".into());
    }
    if text == "0" {
        return Ok(vec![]);
    }
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut current = String::new();
    let flush = |cur: &mut String, sign: i64, terms: &mut Combination| -> Result<(), String> {
        let t = cur.trim();
        if t.is_empty() {
            return Err("dangling sign".into());
        }
        let mut parts = t.split_whitespace();
        let first = parts.next().expect("nonempty");
        let (coef, body) = match first.parse::<i64>() {
            Ok(c) => (c, parts.collect::<Vec<_>>().join(" ")),
            Err(_) => (1, t.to_string()),
        };
        let body = body.trim().trim_start_matches('*').trim().to_string();
        if body.is_empty() {
            return Err(format!("term {t:?} has no label"));
        }
        if body.split('*').any(|s| !is_name(s.trim())) {
            return Err(format!("malformed term {t:?}"));
        }
        let body = body.split('*').map(str::trim).collect::<Vec<_>>().join("*");
        terms.push((sign * coef, body));
        cur.clear();
        Ok(())
    };
    for (k, ch) in text.char_indices() {
        match ch {
            '+' | '-' if k > 0 && !current.trim().is_empty() => {
                flush(&mut current, sign, &mut terms)?;
                sign = if ch == '-' { -1 } else { 1 };
            }
            '-' if current.trim().is_empty() => sign = -sign,
            '+' if current.trim().is_empty() => {}
            _ => current.push(ch),
        }
    }
    flush(&mut current, sign, &mut terms)?;
    Ok(terms)
}

/// Rows separated by `;`, entries by whitespace or commas.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, String> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(vec![]);
    }
    let rows: Vec<Vec<i64>> = text
        .split(';')
        .map(|row| {
            row.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<i64>().map_err(|_| format!("bad matrix entry {s:?}")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let w = rows[0].len();
    if rows.iter().any(|r| r.len() != w) {
        return Err("ragged matrix".into());
    }
    Ok(rows)
}

fn parse_arrow(text: &str) -> Result<(String, String, String), String> {
    let (label, rest) = text
        .split_once(':')
        .ok_or_else(|| format!("arrow {text:?} must look like `a: 1 -> 2`"))?;
    let (s, t) = rest
        .split_once("->")
        .ok_or_else(|| format!("arrow {text:?} must look like `a: 1 -> 2`"))?;
    let (label, s, t) = (label.trim(), s.trim(), t.trim());
    if !is_name(label) || !is_name(s) || !is_name(t) {
        return Err(format!("malformed arrow {text:?}"));
    }
    Ok((label.into(), s.into(), t.into()))
}

fn list(text: &str) -> Vec<String> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect()
}

fn parse_num<T: std::str::FromStr>(p: &mut Parser, line: usize, key: &str, v: &str) -> Option<T> {
    match v.trim().parse() {
        Ok(x) => Some(x),
        Err(_) => {
            p.err(line, format!("{key} must be a non-negative integer, got {v:?}"));
            None
        }
    }
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Parses and validates a spec; all errors carry 1-based line numbers.
pub fn parse_spec(text: &str) -> Result<InstanceSpecFile, CliError> {
    let mut p = Parser { errors: vec![] };
    let mut d = Draft::default();
    let mut section = Section::None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(head) = content.strip_prefix('[') {
            let Some(head) = head.strip_suffix(']') else {
                p.err(line, "unterminated section header");
                continue;
            };
            let mut words = head.split_whitespace();
            let kind = words.next().unwrap_or("");
            let name = words.next();
            if words.next().is_some() {
                p.err(line, "section header has too many words");
            }
            section = match (kind, name) {
                ("field", None) => Section::Field,
                ("algebra", None) => {
                    d.algebra_line = line;
                    Section::Algebra
                }
                ("instance", None) => {
                    if d.instance_line.is_some() {
                        p.err(line, "more than one [instance] section");
                    }
                    d.instance_line = Some(line);
                    Section::Instance
                }
                ("run", None) => Section::Run,
                ("module", Some(n)) | ("morseq", Some(n)) if is_name(n) => {
                    let taken = d.modules.iter().chain(&d.morseqs).any(|m| m.0 == n);
                    if taken {
                        p.err(line, format!("duplicate module name {n}"));
                    }
                    if kind == "module" {
                        d.modules.push((n.into(), vec![], line));
                        Section::Module(d.modules.len() - 1)
                    } else {
                        d.morseqs.push((n.into(), vec![], line));
                        Section::MorSeq(d.morseqs.len() - 1)
                    }
                }
                ("module", _) | ("morseq", _) => {
                    p.err(line, format!("[{kind}] needs a name"));
                    Section::None
                }
                _ => {
                    p.err(line, format!("unknown section [{head}]"));
                    Section::None
                }
            };
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            p.err(line, format!("expected `key = value`, got {content:?}"));
            continue;
        };
        let (key, value) = (key.trim(), value.trim());
        match section {
            Section::None => p.err(line, "key outside of any section"),
            Section::Field => match key {
                "p" => {
                    if let Some(v) = parse_num::<u32>(&mut p, line, key, value) {
                        if !is_prime(v) {
                            p.err(line, format!("characteristic {v} is non-prime"));
                        } else {
                            d.p = Some((v, line));
                        }
                    }
                }
                _ => p.err(line, format!("unknown key {key:?} in [field]")),
            },
            Section::Algebra => algebra_key(&mut p, &mut d, line, key, value),
            Section::Instance => {
                if !matches!(key, "kind" | "idempotent" | "n" | "bimodule") {
                    p.err(line, format!("unknown key {key:?} in [instance]"));
                } else {
                    d.instance.push((key.into(), value.into(), line));
                }
            }
            Section::Module(k) => d.modules[k].1.push((key.into(), value.into(), line)),
            Section::MorSeq(k) => {
                if !matches!(key, "objects" | "maps") {
                    p.err(line, format!("unknown key {key:?} in [morseq]"));
                } else {
                    d.morseqs[k].1.push((key.into(), value.into(), line));
                }
            }
            Section::Run => run_key(&mut p, &mut d.run, line, key, value),
        }
    }
    let spec = finish(&mut p, d);
    if p.errors.is_empty() {
        Ok(spec.expect("no errors"))
    } else {
        p.errors.sort_by_key(|e| e.line);
        Err(CliError::Parse(p.errors))
    }
}

fn algebra_key(p: &mut Parser, d: &mut Draft, line: usize, key: &str, value: &str) {
    if let Some(rest) = key.strip_prefix("mul ") {
        let ws: Vec<&str> = rest.split_whitespace().collect();
        match (ws.as_slice(), parse_combination(value)) {
            ([a, b], Ok(c)) => d.products.push((a.to_string(), b.to_string(), c, line)),
            (_, Err(e)) => p.err(line, e),
            _ => p.err(line, "expected `mul <label> <label> = <combination>`"),
        }
        return;
    }
    let combos = |p: &mut Parser, v: &str| -> Vec<Combination> {
        v.split(',')
            .filter(|s| !s.trim().is_empty())
            .filter_map(|s| match parse_combination(s) {
                Ok(c) => Some(c),
                Err(e) => {
                    p.err(line, e);
                    None
                }
            })
            .collect()
    };
    match key {
        "vertices" => d.vertices = Some(list(value)),
        "arrows" => {
            for a in value.split(',').filter(|s| !s.trim().is_empty()) {
                match parse_arrow(a) {
                    Ok((a, s, t)) => d.arrows.push((a, s, t, line)),
                    Err(e) => p.err(line, e),
                }
            }
        }
        "relations" => {
            let cs = combos(p, value);
            d.relations.extend(cs.into_iter().map(|c| (c, line)));
        }
        "basis" => d.basis = Some(list(value)),
        "unit" => match parse_combination(value) {
            Ok(c) => d.unit = Some(c),
            Err(e) => p.err(line, e),
        },
        "idempotents" => {
            let cs = combos(p, value);
            d.idempotents.extend(cs);
        }
        "radical" => {
            let cs = combos(p, value);
            d.radical = Some(cs);
        }
        _ => p.err(line, format!("unknown key {key:?} in [algebra]")),
    }
}

fn run_key(p: &mut Parser, run: &mut RunSpec, line: usize, key: &str, value: &str) {
    match key {
        "seed" => run.seed = parse_num(p, line, key, value).unwrap_or(run.seed),
        "depth" => run.depth = parse_num(p, line, key, value).unwrap_or(run.depth),
        "random" => run.random = parse_num(p, line, key, value).unwrap_or(run.random),
        "dim_bound" => run.dim_bound = parse_num(p, line, key, value).unwrap_or(run.dim_bound),
        "degree" => run.degree = parse_num(p, line, key, value).unwrap_or(run.degree),
        "bound" => run.bound = parse_num(p, line, key, value).unwrap_or(run.bound),
        "mode" => match value.parse() {
            Ok(m) => run.mode = m,
            Err(_) => p.err(line, format!("mode must be fast or thorough, got {value:?}")),
        },
        _ => p.err(line, format!("unknown key {key:?} in [run]")),
    }
}

fn finish(p: &mut Parser, d: Draft) -> Option<InstanceSpecFile> {
    // keep validating without a usable characteristic; the errors decide
    let pchar = match d.p {
        Some((v, _)) => v,
        None => {
            if !p.errors.iter().any(|e| e.message.contains("non-prime")) {
                p.err(1, "missing [field] p");
            }
            2
        }
    };
    let quiverish = d.vertices.is_some() || !d.arrows.is_empty() || !d.relations.is_empty();
    let constish = d.basis.is_some() || d.unit.is_some() || !d.products.is_empty();
    let algebra = match (quiverish, constish) {
        (true, true) => {
            p.err(d.algebra_line, "[algebra] mixes a quiver with structure constants");
            return None;
        }
        (false, false) => {
            p.err(d.algebra_line.max(1), "missing [algebra] section");
            return None;
        }
        (true, false) => {
            let vertices = d.vertices.unwrap_or_default();
            if vertices.is_empty() {
                p.err(d.algebra_line, "quiver needs at least one vertex");
            }
            for (label, s, t, line) in &d.arrows {
                for v in [s, t] {
                    if !vertices.contains(v) {
                        p.err(*line, format!("arrow {label}: unresolved vertex {v}"));
                    }
                }
            }
            for (rel, line) in &d.relations {
                for (_, path) in rel {
                    for a in path.split('*') {
                        if !d.arrows.iter().any(|x| x.0 == a) {
                            p.err(*line, format!("relation uses unresolved arrow {a}"));
                        }
                    }
                }
            }
            AlgebraSpec::Quiver {
                vertices,
                arrows: d.arrows.into_iter().map(|(a, s, t, _)| (a, s, t)).collect(),
                relations: d.relations.into_iter().map(|r| r.0).collect(),
            }
        }
        (false, true) => {
            let basis = d.basis.unwrap_or_default();
            let known = |l: &str| basis.iter().any(|b| b == l);
            let mut check = |c: &Combination, what: &str, line: usize| {
                for (_, l) in c {
                    if !known(l) {
                        p.err(line, format!("{what} uses unresolved label {l}"));
                    }
                }
            };
            let unit = d.unit.unwrap_or_default();
            check(&unit, "unit", d.algebra_line);
            for e in &d.idempotents {
                check(e, "idempotent", d.algebra_line);
            }
            for r in d.radical.iter().flatten() {
                check(r, "radical", d.algebra_line);
            }
            for (a, b, c, line) in &d.products {
                check(&vec![(1, a.clone()), (1, b.clone())], "mul", *line);
                check(c, "mul", *line);
            }
            AlgebraSpec::Constants {
                basis,
                unit,
                idempotents: d.idempotents,
                radical: d.radical,
                products: d.products,
            }
        }
    };
    let instance = d.instance_line.and_then(|line| instance(p, &d.instance, line, &algebra));
    let modules = d
        .modules
        .into_iter()
        .filter_map(|(name, keys, line)| module(p, name, keys, line, &algebra))
        .collect();
    let morseqs = d
        .morseqs
        .into_iter()
        .filter_map(|(name, keys, line)| morseq(p, name, keys, line))
        .collect();
    Some(InstanceSpecFile {
        p: pchar,
        algebra,
        instance,
        modules,
        morseqs,
        run: d.run,
    })
}

fn labels_of(alg: &AlgebraSpec) -> Option<&[String]> {
    match alg {
        AlgebraSpec::Constants { basis, .. } => Some(basis),
        AlgebraSpec::Quiver { .. } => None,
    }
}

fn instance(
    p: &mut Parser,
    keys: &[(String, String, usize)],
    line: usize,
    alg: &AlgebraSpec,
) -> Option<InstanceSpec> {
    let get = |k: &str| keys.iter().find(|x| x.0 == k);
    let Some((_, kind, kline)) = get("kind") else {
        p.err(line, "[instance] needs `kind = idempotent | morn | triangular`");
        return None;
    };
    let allowed: &[&str] = match kind.as_str() {
        "idempotent" => &["kind", "idempotent"],
        "morn" => &["kind", "n"],
        "triangular" => &["kind", "bimodule"],
        other => {
            p.err(*kline, format!("unknown instance kind {other:?}"));
            return None;
        }
    };
    for (k, _, l) in keys {
        if !allowed.contains(&k.as_str()) {
            p.err(*l, format!("key {k:?} does not apply to kind {kind}"));
        }
    }
    let kind = match kind.as_str() {
        "idempotent" => {
            let Some((_, text, l)) = get("idempotent") else {
                p.err(line, "idempotent instance needs `idempotent = ...`");
                return None;
            };
            match parse_combination(text) {
                Ok(c) => {
                    if let Some(basis) = labels_of(alg) {
                        for (_, x) in &c {
                            if !basis.contains(x) {
                                p.err(*l, format!("unresolved label {x}"));
                            }
                        }
                    } else if let AlgebraSpec::Quiver { vertices, arrows, .. } = alg {
                        for (_, x) in &c {
                            let vertex = x.strip_prefix('e').is_some_and(|v| vertices.iter().any(|w| w == v));
                            let path = x.split('*').all(|a| arrows.iter().any(|y| y.0 == a));
                            if !vertex && !path {
                                p.err(*l, format!("unresolved label {x}"));
                            }
                        }
                    }
                    InstanceKind::Idempotent {
                        idempotent: c,
                        text: text.clone(),
                    }
                }
                Err(e) => {
                    p.err(*l, e);
                    return None;
                }
            }
        }
        "morn" => {
            let Some((_, text, l)) = get("n") else {
                p.err(line, "morn instance needs `n = ...`");
                return None;
            };
            let n: usize = parse_num(p, *l, "n", text)?;
            if n < 2 {
                p.err(*l, format!("morn length must be at least 2, got {n}"));
                return None;
            }
            InstanceKind::Morn { n }
        }
        _ => {
            let bimodule = match get("bimodule").map(|x| (x.1.as_str(), x.2)) {
                None | Some(("regular", _)) => TriangularBimodule::Regular,
                Some(("zero", _)) => TriangularBimodule::Zero,
                Some((other, l)) => {
                    p.err(l, format!("bimodule must be regular or zero, got {other:?}"));
                    return None;
                }
            };
            InstanceKind::Triangular { bimodule }
        }
    };
    Some(InstanceSpec { kind, line })
}

fn module(
    p: &mut Parser,
    name: String,
    keys: Vec<Entry>,
    line: usize,
    alg: &AlgebraSpec,
) -> Option<ModuleSpec> {
    let mut over = Over::Base;
    let mut dims = None;
    let mut dim = None;
    let mut mats = Vec::new();
    for (k, v, l) in keys {
        match k.as_str() {
            "over" => {
                over = match v.as_str() {
                    "base" => Over::Base,
                    "A" => Over::A,
                    "B" => Over::B,
                    "C" => Over::C,
                    _ => {
                        p.err(l, format!("over must be base, A, B or C, got {v:?}"));
                        Over::Base
                    }
                }
            }
            "dims" => {
                let parsed: Result<Vec<usize>, _> = list(&v).iter().map(|s| s.parse()).collect();
                match parsed {
                    Ok(x) => dims = Some((x, l)),
                    Err(_) => p.err(l, format!("bad dims {v:?}")),
                }
            }
            "dim" => dim = parse_num::<usize>(p, l, "dim", &v),
            _ if is_name(&k) => match parse_matrix(&v) {
                Ok(m) => mats.push((k, m, l)),
                Err(e) => p.err(l, e),
            },
            _ => p.err(l, format!("unknown key {k:?} in [module {name}]")),
        }
    }
    let body = match (dims, dim) {
        (Some(_), Some(_)) => {
            p.err(line, "give either dims (per vertex) or dim, not both");
            return None;
        }
        (Some((dims, l)), None) => {
            let AlgebraSpec::Quiver { vertices, arrows, .. } = alg else {
                p.err(l, "dims needs a quiver algebra");
                return None;
            };
            if over != Over::Base {
                p.err(l, "dims is only available for modules over the base algebra");
                return None;
            }
            if dims.len() != vertices.len() {
                p.err(l, format!("expected {} vertex dimensions, got {}", vertices.len(), dims.len()));
                return None;
            }
            for (k, m, l) in &mats {
                let Some(a) = arrows.iter().find(|a| &a.0 == k) else {
                    p.err(*l, format!("unresolved arrow {k}"));
                    continue;
                };
                let vi = |v: &String| vertices.iter().position(|w| w == v).unwrap_or(0);
                let (r, c) = (dims[vi(&a.2)], dims[vi(&a.1)]);
                let (mr, mc) = (m.len(), m.first().map_or(0, Vec::len));
                let ok = (mr == r && mc == c) || (r * c == 0 && m.is_empty());
                if !ok {
                    p.err(*l, format!("arrow {k} needs a {r}x{c} matrix, got {mr}x{mc}"));
                }
            }
            ModuleBody::Representation { dims, arrows: mats }
        }
        (None, Some(dim)) => {
            for (k, m, l) in &mats {
                if !m.is_empty() && (m.len() != dim || m[0].len() != dim) {
                    p.err(*l, format!("action of {k} must be {dim}x{dim}"));
                }
            }
            ModuleBody::Actions { dim, actions: mats }
        }
        (None, None) => {
            p.err(line, format!("[module {name}] needs dims or dim"));
            return None;
        }
    };
    Some(ModuleSpec {
        name,
        over,
        body,
        line,
    })
}

fn morseq(
    p: &mut Parser,
    name: String,
    keys: Vec<Entry>,
    line: usize,
) -> Option<MorSeqSpec> {
    let mut objects = None;
    let mut maps = Vec::new();
    for (k, v, l) in keys {
        if k == "objects" {
            objects = Some(list(&v));
        } else {
            for m in v.split('|') {
                match parse_matrix(m) {
                    Ok(m) => maps.push(m),
                    Err(e) => p.err(l, e),
                }
            }
        }
    }
    let Some(objects) = objects else {
        p.err(line, format!("[morseq {name}] needs objects"));
        return None;
    };
    if objects.is_empty() {
        p.err(line, "a morphism sequence needs at least one object");
        return None;
    }
    if maps.len() + 1 != objects.len() {
        p.err(
            line,
            format!("{} objects need {} maps, got {}", objects.len(), objects.len() - 1, maps.len()),
        );
        return None;
    }
    Some(MorSeqSpec {
        name,
        objects,
        maps,
        line,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn combination_terms() {
        assert_eq!(
            parse_combination("2 a*b - c*d").unwrap(),
            vec![(2, "a*b".to_string()), (-1, "c*d".to_string())]
        );
        assert_eq!(parse_combination("e1+e2").unwrap().len(), 2);
        assert_eq!(parse_combination("-x").unwrap(), vec![(-1, "x".to_string())]);
        assert!(parse_combination("a +").is_err());
        assert!(parse_combination("0").unwrap().is_empty());
    }

    #[test]
    fn matrices() {
        assert_eq!(parse_matrix("1 0; 0 1").unwrap(), vec![vec![1, 0], vec![0, 1]]);
        assert!(parse_matrix("1 0; 1").is_err());
        assert!(parse_matrix("").unwrap().is_empty());
    }

    #[test]
    fn errors_are_positioned() {
        let text = "[field]\np = 2\n[algebra]\nvertices = 1\nbogus = 3\n";
        let CliError::Parse(errs) = parse_spec(text).unwrap_err() else {
            panic!()
        };
        assert_eq!(errs[0].line, 5);
        assert!(errs[0].message.contains("bogus"));
    }

    #[test]
    fn constants_form() {
        let text = "[field]\np = 3\n[algebra]\nbasis = e x\nunit = e\nidempotents = e\nradical = x\n\
                    mul e e = e\nmul e x = x\nmul x e = x\n";
        let s = parse_spec(text).unwrap();
        let AlgebraSpec::Constants { products, .. } = s.algebra else {
            panic!()
        };
        assert_eq!(products.len(), 3);
    }
}
