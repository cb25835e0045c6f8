//! Bound quiver presentations and their path-algebra quotients.

use std::collections::HashMap;

use super::{Algebra, AlgebraData};
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};

/// Default degree at which path enumeration gives up.
pub const DEFAULT_DEGREE_BOUND: usize = 64;

/// Guard against combinatorial blow-up of the path space.
const MAX_PATHS_PER_DEGREE: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A linear combination of paths. Each path is a list of arrow indices in
/// composition order: `[a, b]` is `a*b`, i.e. first `b`, then `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(i64, Vec<usize>)>,
}

impl Relation {
    pub fn monomial(path: Vec<usize>) -> Self {
        Relation {
            terms: vec![(1, path)],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverPresentation {
    pub field: Field,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

type Path = Vec<usize>;

impl QuiverPresentation {
    pub fn new(field: Field, vertices: Vec<String>) -> Self {
        QuiverPresentation {
            field,
            vertices,
            arrows: vec![],
            relations: vec![],
        }
    }

    /// Adds an arrow between vertex labels; returns its index.
    pub fn arrow(&mut self, label: &str, source: &str, target: &str) -> Result<usize> {
        let s = self.vertex(source)?;
        let t = self.vertex(target)?;
        if self.arrows.iter().any(|a| a.label == label) || self.vertices.iter().any(|v| v == label)
        {
            return Err(Error::input(format!("duplicate label {label}")));
        }
        self.arrows.push(Arrow {
            label: label.to_string(),
            source: s,
            target: t,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::input(format!("unknown vertex {label}")))
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::input(format!("unknown arrow {label}")))
    }

    /// Parses `x*y` (first `y`, then `x`) into a path.
    pub fn parse_path(&self, text: &str) -> Result<Path> {
        text.split('*')
            .map(|s| self.arrow_index(s.trim()))
            .collect()
    }

    fn path_source(&self, p: &[usize]) -> usize {
        self.arrows[*p.last().expect("nonempty")].source
    }

    fn path_target(&self, p: &[usize]) -> usize {
        self.arrows[p[0]].target
    }

    fn path_label(&self, p: &[usize]) -> String {
        p.iter()
            .map(|&a| self.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Checks each relation: nonempty, parallel, length >= 2, homogeneous.
    fn check_relations(&self) -> Result<Vec<(usize, usize, usize)>> {
        let mut shapes = Vec::new();
        for (ri, rel) in self.relations.iter().enumerate() {
            let mut shape: Option<(usize, usize, usize)> = None;
            for (_, path) in &rel.terms {
                if path.is_empty() {
                    return Err(Error::input(format!("relation {ri} contains a trivial path")));
                }
                for w in path.windows(2) {
                    if self.arrows[w[0]].source != self.arrows[w[1]].target {
                        return Err(Error::input(format!(
                            "relation {ri}: {} is not a path",
                            self.path_label(path)
                        )));
                    }
                }
                let here = (self.path_source(path), self.path_target(path), path.len());
                if here.2 < 2 {
                    return Err(Error::input(format!(
                        "relation {ri} has a path of length < 2 (not admissible)"
                    )));
                }
                match shape {
                    None => shape = Some(here),
                    Some(s) if (s.0, s.1) != (here.0, here.1) => {
                        return Err(Error::input(format!(
                            "relation {ri} combines non-parallel paths"
                        )))
                    }
                    Some(s) if s.2 != here.2 => {
                        return Err(Error::Unsupported(format!(
                            "relation {ri} is not homogeneous"
                        )))
                    }
                    _ => {}
                }
            }
            match shape {
                Some(s) => shapes.push(s),
                None => return Err(Error::input(format!("relation {ri} is empty"))),
            }
        }
        Ok(shapes)
    }

    /// Builds the bound quiver algebra with the default degree bound.
    pub fn to_algebra(&self) -> Result<Algebra> {
        self.to_algebra_bounded(DEFAULT_DEGREE_BOUND)
    }

    pub fn to_algebra_bounded(&self, degree_bound: usize) -> Result<Algebra> {
        from_quiver(self, degree_bound)
    }
}

/// Degree-`d` data: all paths, and the reduction of each to normal paths.
struct Degree {
    index: HashMap<Path, usize>,
    /// For each path: combination of normal paths as (normal position, coeff).
    reduce: Vec<Vec<(usize, u32)>>,
    /// Paths that survive as basis elements.
    normal: Vec<Path>,
}

fn from_quiver(q: &QuiverPresentation, degree_bound: usize) -> Result<Algebra> {
    let f = q.field;
    if q.vertices.is_empty() {
        return Err(Error::input("quiver has no vertices"));
    }
    for a in &q.arrows {
        if a.source >= q.vertices.len() || a.target >= q.vertices.len() {
            return Err(Error::input(format!("arrow {} has unknown endpoint", a.label)));
        }
    }
    let shapes = q.check_relations()?;
    let nv = q.vertices.len();

    let mut degrees: Vec<Degree> = Vec::new();
    let mut current: Vec<Path> = (0..q.arrows.len()).map(|a| vec![a]).collect();
    let mut d = 1;
    while !current.is_empty() {
        if d > degree_bound {
            return Err(Error::NotFiniteDimensional(format!(
                "path residues persist past degree {degree_bound}"
            )));
        }
        if current.len() > MAX_PATHS_PER_DEGREE {
            return Err(Error::NotFiniteDimensional(format!(
                "{} paths of length {d}",
                current.len()
            )));
        }
        let index: HashMap<Path, usize> =
            current.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let ideal_rows = ideal_component(q, &shapes, &degrees, &index, d);
        let (rref, pivots) = if ideal_rows.is_empty() {
            (Mat::zeros(f, 0, current.len()), vec![])
        } else {
            let m = Mat::from_columns(f, current.len(), &ideal_rows).transpose();
            m.rref()
        };
        let is_pivot: Vec<Option<usize>> = {
            let mut v = vec![None; current.len()];
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = Some(r);
            }
            v
        };
        let mut normal_pos = vec![usize::MAX; current.len()];
        let mut normal = Vec::new();
        for (i, p) in current.iter().enumerate() {
            if is_pivot[i].is_none() {
                normal_pos[i] = normal.len();
                normal.push(p.clone());
            }
        }
        let reduce = (0..current.len())
            .map(|i| match is_pivot[i] {
                None => vec![(normal_pos[i], 1)],
                Some(r) => (0..current.len())
                    .filter(|&c| is_pivot[c].is_none() && rref.get(r, c) != 0)
                    .map(|c| (normal_pos[c], f.neg(rref.get(r, c))))
                    .collect(),
            })
            .collect();
        let next: Vec<Path> = if normal.is_empty() {
            vec![]
        } else {
            extend_paths(q, &current)
        };
        degrees.push(Degree {
            index,
            reduce,
            normal,
        });
        if degrees.last().expect("pushed").normal.is_empty() {
            break;
        }
        current = next;
        d += 1;
    }

    // basis: vertices, then normal paths degree by degree
    let mut labels: Vec<String> = q.vertices.iter().map(|v| format!("e{v}")).collect();
    let mut offsets = Vec::with_capacity(degrees.len());
    let mut dim = nv;
    for deg in &degrees {
        offsets.push(dim);
        for p in &deg.normal {
            labels.push(q.path_label(p));
        }
        dim += deg.normal.len();
    }
    let mut positions: Vec<(usize, Option<Path>)> = (0..nv).map(|v| (v, None)).collect();
    for deg in &degrees {
        for p in &deg.normal {
            positions.push((0, Some(p.clone())));
        }
    }

    let mut consts = vec![0u32; dim * dim * dim];
    let mut put = |i: usize, j: usize, combo: &[(usize, u32)]| {
        for &(k, c) in combo {
            let slot = &mut consts[(i * dim + j) * dim + k];
            *slot = f.add(*slot, c);
        }
    };
    for i in 0..dim {
        for j in 0..dim {
            match (&positions[i], &positions[j]) {
                ((v, None), (w, None)) => {
                    if v == w {
                        put(i, j, &[(i, 1)]);
                    }
                }
                ((v, None), (_, Some(p))) => {
                    if q.path_target(p) == *v {
                        put(i, j, &[(j, 1)]);
                    }
                }
                ((_, Some(p)), (w, None)) => {
                    if q.path_source(p) == *w {
                        put(i, j, &[(i, 1)]);
                    }
                }
                ((_, Some(p)), (_, Some(r))) => {
                    if q.path_source(p) != q.path_target(r) {
                        continue;
                    }
                    let mut cat = p.clone();
                    cat.extend_from_slice(r);
                    let deg = cat.len();
                    if deg > degrees.len() {
                        continue;
                    }
                    let dd = &degrees[deg - 1];
                    let idx = dd.index[&cat];
                    let combo: Vec<(usize, u32)> = dd.reduce[idx]
                        .iter()
                        .map(|&(np, c)| (offsets[deg - 1] + np, c))
                        .collect();
                    put(i, j, &combo);
                }
            }
        }
    }
    let mut unit = vec![0u32; dim];
    unit[..nv].iter_mut().for_each(|u| *u = 1);
    let idempotents = (0..nv)
        .map(|v| {
            let mut e = vec![0u32; dim];
            e[v] = 1;
            e
        })
        .collect();
    let radical = (nv..dim)
        .map(|k| {
            let mut e = vec![0u32; dim];
            e[k] = 1;
            e
        })
        .collect();
    Algebra::new(AlgebraData {
        field: f,
        labels,
        consts,
        unit,
        idempotents,
        vertex_labels: q.vertices.clone(),
        radical: Some(radical),
    })
}

/// Appends one arrow on the left of each path (`a * p`).
fn extend_paths(q: &QuiverPresentation, paths: &[Path]) -> Vec<Path> {
    let mut out = Vec::new();
    for p in paths {
        let t = q.path_target(p);
        for (a, arrow) in q.arrows.iter().enumerate() {
            if arrow.source == t {
                let mut np = Vec::with_capacity(p.len() + 1);
                np.push(a);
                np.extend_from_slice(p);
                out.push(np);
            }
        }
    }
    out
}

/// Spanning vectors of the degree-`d` component of the relation ideal:
/// `u * rho * v` for relations `rho` and paths `u`, `v` of complementary length.
fn ideal_component(
    q: &QuiverPresentation,
    shapes: &[(usize, usize, usize)],
    degrees: &[Degree],
    index: &HashMap<Path, usize>,
    d: usize,
) -> Vec<Vec<u32>> {
    let f = q.field;
    let all_paths_of = |len: usize| -> Vec<Path> {
        // every path (not only normal ones) of the given positive length
        degrees[len - 1].index.keys().cloned().collect()
    };
    let mut out = Vec::new();
    for (rel, &(s, t, len)) in q.relations.iter().zip(shapes) {
        if len > d {
            continue;
        }
        let rest = d - len;
        for a in 0..=rest {
            let b = rest - a;
            let lefts: Vec<Option<Path>> = if a == 0 {
                vec![None]
            } else {
                let mut v: Vec<Path> = all_paths_of(a)
                    .into_iter()
                    .filter(|u| q.path_source(u) == t)
                    .collect();
                v.sort();
                v.into_iter().map(Some).collect()
            };
            let rights: Vec<Option<Path>> = if b == 0 {
                vec![None]
            } else {
                let mut v: Vec<Path> = all_paths_of(b)
                    .into_iter()
                    .filter(|w| q.path_target(w) == s)
                    .collect();
                v.sort();
                v.into_iter().map(Some).collect()
            };
            for u in &lefts {
                for w in &rights {
                    let mut vec = vec![0u32; index.len()];
                    for (c, path) in &rel.terms {
                        let mut full = Vec::with_capacity(d);
                        if let Some(u) = u {
                            full.extend_from_slice(u);
                        }
                        full.extend_from_slice(path);
                        if let Some(w) = w {
                            full.extend_from_slice(w);
                        }
                        let i = index[&full];
                        vec[i] = f.add(vec[i], f.reduce(*c));
                    }
                    if vec.iter().any(|&x| x != 0) {
                        out.push(vec);
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn single_vertex_is_ground_field() {
        let q = QuiverPresentation::new(gf(5), vec!["1".into()]);
        let a = q.to_algebra().unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(a.radical().unwrap().cols(), 0);
    }

    #[test]
    fn dual_numbers() {
        let mut q = QuiverPresentation::new(gf(2), vec!["1".into()]);
        let x = q.arrow("x", "1", "1").unwrap();
        q.relations.push(Relation::monomial(vec![x, x]));
        let a = q.to_algebra().unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.labels(), &["e1".to_string(), "x".to_string()]);
        assert_eq!(a.radical().unwrap().cols(), 1);
        // x * x = 0
        assert_eq!(a.mul(&[0, 1], &[0, 1]), vec![0, 0]);
    }

    #[test]
    fn a2_path_algebra() {
        let mut q = QuiverPresentation::new(gf(3), vec!["1".into(), "2".into()]);
        q.arrow("a", "1", "2").unwrap();
        let a = q.to_algebra().unwrap();
        assert_eq!(a.dim(), 3);
        // a = e2 * a * e1
        let arrow = a.basis_vector(2);
        let e1 = a.basis_vector(0);
        let e2 = a.basis_vector(1);
        assert_eq!(a.mul(&a.mul(&e2, &arrow), &e1), arrow);
        assert_eq!(a.mul(&e1, &arrow), vec![0, 0, 0]);
    }

    #[test]
    fn commutativity_relation() {
        // square 1 -> 2 -> 4, 1 -> 3 -> 4 with ba = dc
        let mut q = QuiverPresentation::new(
            gf(3),
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
        );
        let a = q.arrow("a", "1", "2").unwrap();
        let b = q.arrow("b", "2", "4").unwrap();
        let c = q.arrow("c", "1", "3").unwrap();
        let d = q.arrow("d", "3", "4").unwrap();
        q.relations.push(Relation {
            terms: vec![(1, vec![b, a]), (-1, vec![d, c])],
        });
        let alg = q.to_algebra().unwrap();
        assert_eq!(alg.dim(), 4 + 4 + 1);
    }

    #[test]
    fn free_loop_is_not_finite() {
        let mut q = QuiverPresentation::new(gf(2), vec!["1".into()]);
        q.arrow("x", "1", "1").unwrap();
        assert!(matches!(
            q.to_algebra_bounded(10),
            Err(Error::NotFiniteDimensional(_))
        ));
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let mut q = QuiverPresentation::new(gf(2), vec!["1".into(), "2".into()]);
        let a = q.arrow("a", "1", "2").unwrap();
        let b = q.arrow("b", "2", "1").unwrap();
        q.relations.push(Relation {
            terms: vec![(1, vec![b, a]), (1, vec![a, b])],
        });
        assert!(matches!(q.to_algebra(), Err(Error::Input(_))));
    }

    #[test]
    fn acyclic_relation_free_counts_paths() {
        // A_4 linear: paths = 4 + 3 + 2 + 1
        let mut q = QuiverPresentation::new(
            gf(2),
            vec!["1".into(), "2".into(), "3".into(), "4".into()],
        );
        q.arrow("a", "1", "2").unwrap();
        q.arrow("b", "2", "3").unwrap();
        q.arrow("c", "3", "4").unwrap();
        assert_eq!(q.to_algebra().unwrap().dim(), 10);
    }
}
