//! Labeled subcomplexes of the product of simplices `Δ_{n-1} × Δ_{m-1}`.
//!
//! A face is a pair `(S, T)` of non-empty index sets; it is the product of the
//! simplex on `S` with the simplex on `T` and has dimension `|S| + |T| - 2`.
//! Its vertices are the pairs `(i, j) ∈ S × T`, and its label is the lcm of
//! the vertex labels.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ComplexError;
use crate::linalg::ChainData;
use crate::monomial::{Monomial, MultiDegree, Substitution, VariableContext};
use crate::shape::Shape;

/// Largest row or column index a [`Face`] can hold.
pub const MAX_INDEX: usize = 32;

/// A face `(S, T)` stored as two bitmasks (bit `k - 1` for index `k`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Face {
    rows: u32,
    cols: u32,
}

fn mask_of(indices: &[usize]) -> Option<u32> {
    let mut mask = 0u32;
    for &k in indices {
        if !(1..=MAX_INDEX).contains(&k) || mask >> (k - 1) & 1 == 1 {
            return None;
        }
        mask |= 1 << (k - 1);
    }
    (mask != 0).then_some(mask)
}

fn indices_of(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).map(|b| b as usize + 1).collect()
}

impl Face {
    /// Builds a face from 1-based row and column indices.
    pub fn new(rows: &[usize], cols: &[usize]) -> Result<Self, ComplexError> {
        let bad = || ComplexError::BadFace {
            rows: rows.to_vec(),
            cols: cols.to_vec(),
        };
        Ok(Face {
            rows: mask_of(rows).ok_or_else(bad)?,
            cols: mask_of(cols).ok_or_else(bad)?,
        })
    }

    pub fn from_masks(rows: u32, cols: u32) -> Self {
        assert!(rows != 0 && cols != 0, "faces need non-empty rows and cols");
        Face { rows, cols }
    }

    pub fn vertex(row: usize, col: usize) -> Self {
        Face {
            rows: 1 << (row - 1),
            cols: 1 << (col - 1),
        }
    }

    pub fn row_mask(&self) -> u32 {
        self.rows
    }

    pub fn col_mask(&self) -> u32 {
        self.cols
    }

    pub fn rows(&self) -> Vec<usize> {
        indices_of(self.rows)
    }

    pub fn cols(&self) -> Vec<usize> {
        indices_of(self.cols)
    }

    pub fn dim(&self) -> usize {
        (self.rows.count_ones() + self.cols.count_ones()) as usize - 2
    }

    /// `(|S|, |T|)`: the face is `Δ_{|S|-1} × Δ_{|T|-1}`.
    pub fn product_type(&self) -> (usize, usize) {
        (self.rows.count_ones() as usize, self.cols.count_ones() as usize)
    }

    pub fn vertices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let cols = self.cols();
        self.rows()
            .into_iter()
            .flat_map(move |i| cols.clone().into_iter().map(move |j| (i, j)))
    }

    pub fn contains(&self, other: &Face) -> bool {
        other.rows & !self.rows == 0 && other.cols & !self.cols == 0
    }

    /// Facets with incidence signs.
    ///
    /// For `S = {i_1 < … < i_s}` and `T = {j_1 < … < j_t}` the boundary is
    /// `Σ_k (-1)^(k-1) (S∖i_k, T) + (-1)^(s-1) Σ_l (-1)^(l-1) (S, T∖j_l)`,
    /// the first sum present only when `s ≥ 2`, the second only when `t ≥ 2`.
    pub fn signed_facets(&self) -> Vec<(Face, i64)> {
        let s = self.rows.count_ones();
        let t = self.cols.count_ones();
        let mut out = Vec::with_capacity((s + t) as usize);
        if s >= 2 {
            for (k, bit) in set_bits(self.rows).enumerate() {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                out.push((Face { rows: self.rows & !bit, cols: self.cols }, sign));
            }
        }
        if t >= 2 {
            let base = if (s - 1).is_multiple_of(2) { 1 } else { -1 };
            for (l, bit) in set_bits(self.cols).enumerate() {
                let sign = if l % 2 == 0 { base } else { -base };
                out.push((Face { rows: self.rows, cols: self.cols & !bit }, sign));
            }
        }
        out
    }

    fn sort_key(&self) -> (Vec<usize>, Vec<usize>) {
        (self.rows(), self.cols())
    }
}

fn set_bits(mask: u32) -> impl Iterator<Item = u32> {
    (0..32).map(|b| 1u32 << b).filter(move |bit| mask & bit != 0)
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.sort_key().cmp(&other.sort_key()))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Where a complex came from; decides which theorems apply to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    /// The full product `X_{n,m}`.
    Bipartite { n: usize, m: usize },
    /// `X_{λ-μ}` with labels `x_i y_j`.
    Shape(Shape),
    /// `X̄_{λ-μ}`, the labels of `X_{λ-μ}` pushed through `y_i ↦ x_i`.
    Specialized(Shape),
    /// Anything else (restrictions, imports, Taylor complexes, edits).
    Custom,
}

/// A labeled polyhedral subcomplex of `X_{n,m}`.
#[derive(Clone, Debug)]
pub struct LabeledCellComplex {
    context: VariableContext,
    n: usize,
    m: usize,
    origin: Origin,
    vertex_labels: HashMap<(usize, usize), Monomial>,
    faces: Vec<Vec<Face>>,
    labels: Vec<Vec<Monomial>>,
    index: HashMap<Face, usize>,
}

impl PartialEq for LabeledCellComplex {
    /// Same labeled faces over the same context; origin is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.context == other.context && self.faces == other.faces && self.labels == other.labels
    }
}

impl LabeledCellComplex {
    /// Builds a complex from a face set and a vertex labeling.
    ///
    /// Face labels are the lcms of their vertex labels. Fails when the face
    /// set is not closed under taking facets.
    pub fn from_faces<F>(
        context: VariableContext,
        origin: Origin,
        faces: impl IntoIterator<Item = Face>,
        mut vertex_label: F,
    ) -> Result<Self, ComplexError>
    where
        F: FnMut(usize, usize) -> Monomial,
    {
        let set: BTreeSet<Face> = faces.into_iter().collect();
        for f in &set {
            for (g, _) in f.signed_facets() {
                if !set.contains(&g) {
                    return Err(ComplexError::NotClosed {
                        rows: f.rows(),
                        cols: f.cols(),
                    });
                }
            }
        }
        let mut vertex_labels = HashMap::new();
        let (mut n, mut m) = (0, 0);
        for f in set.iter().filter(|f| f.dim() == 0) {
            let (i, j) = (f.rows()[0], f.cols()[0]);
            n = n.max(i);
            m = m.max(j);
            let label = vertex_label(i, j);
            if label.nvars() != context.len() {
                return Err(ComplexError::DegreeArity {
                    expected: context.len(),
                    got: label.nvars(),
                });
            }
            vertex_labels.insert((i, j), label);
        }
        let top = set.iter().map(Face::dim).max().map_or(0, |d| d + 1);
        let mut by_dim: Vec<Vec<Face>> = vec![Vec::new(); top];
        let mut labels: Vec<Vec<Monomial>> = vec![Vec::new(); top];
        let mut index = HashMap::with_capacity(set.len());
        for f in set {
            let label = f
                .vertices()
                .fold(Monomial::one(context.len()), |acc, v| acc.lcm(&vertex_labels[&v]));
            let d = f.dim();
            index.insert(f, by_dim[d].len());
            by_dim[d].push(f);
            labels[d].push(label);
        }
        Ok(LabeledCellComplex {
            context,
            n,
            m,
            origin,
            vertex_labels,
            faces: by_dim,
            labels,
            index,
        })
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    /// Largest row index used by a vertex.
    pub fn rows_used(&self) -> usize {
        self.n
    }

    /// Largest column index used by a vertex.
    pub fn cols_used(&self) -> usize {
        self.m
    }

    /// `dim X`, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces_of_dim(&self, d: usize) -> &[Face] {
        self.faces.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn labels_of_dim(&self, d: usize) -> &[Monomial] {
        self.labels.get(d).map_or(&[], Vec::as_slice)
    }

    /// All faces in canonical order (by dimension, then by index sets).
    pub fn faces(&self) -> impl Iterator<Item = (&Face, &Monomial)> {
        self.faces.iter().flatten().zip(self.labels.iter().flatten())
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.index.contains_key(f)
    }

    /// Position of `f` among the faces of its dimension.
    pub fn position(&self, f: &Face) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn label(&self, f: &Face) -> Option<&Monomial> {
        self.index.get(f).map(|&k| &self.labels[f.dim()][k])
    }

    pub fn vertex_label(&self, row: usize, col: usize) -> Option<&Monomial> {
        self.vertex_labels.get(&(row, col))
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Maximal faces in canonical order.
    pub fn facets(&self) -> Vec<Face> {
        let mut out = Vec::new();
        for (d, layer) in self.faces.iter().enumerate() {
            let above = self.faces.get(d + 1);
            for f in layer {
                let covered = above.is_some_and(|up| up.iter().any(|g| g.contains(f)));
                if !covered {
                    out.push(*f);
                }
            }
        }
        out
    }

    /// Vertex labels in canonical vertex order.
    pub fn vertex_label_list(&self) -> Vec<Monomial> {
        self.labels_of_dim(0).to_vec()
    }

    /// Removes `face` and every face containing it.
    pub fn without_face(&self, face: &Face) -> Result<Self, ComplexError> {
        let kept: Vec<Face> = self
            .faces()
            .map(|(f, _)| *f)
            .filter(|f| !f.contains(face))
            .collect();
        let labels = self.vertex_labels.clone();
        LabeledCellComplex::from_faces(self.context, Origin::Custom, kept, |i, j| {
            labels[&(i, j)].clone()
        })
    }

    /// Reduced cellular chain complex (empty face in dimension -1) of the
    /// faces selected by `keep`, with the incidence signs of [`Face::signed_facets`].
    pub fn reduced_chain_where(&self, mut keep: impl FnMut(&Face, &Monomial) -> bool) -> ChainData {
        let mut data = ChainData::with_capacity(self.face_count() + 1);
        let empty = data.push(-1, Vec::new());
        let mut local: HashMap<Face, u32> = HashMap::new();
        for (f, label) in self.faces() {
            if !keep(f, label) {
                continue;
            }
            let boundary = if f.dim() == 0 {
                vec![(empty, 1)]
            } else {
                f.signed_facets()
                    .into_iter()
                    .map(|(g, s)| (local[&g], s))
                    .collect()
            };
            let id = data.push(f.dim() as i32, boundary);
            local.insert(*f, id);
        }
        data
    }

    pub fn reduced_chain(&self) -> ChainData {
        self.reduced_chain_where(|_, _| true)
    }

    pub fn to_file(&self) -> ComplexFile {
        ComplexFile {
            context: self.context.names(),
            faces: self
                .faces()
                .map(|(f, l)| FaceEntry {
                    rows: f.rows(),
                    cols: f.cols(),
                    dim: f.dim(),
                    label: l.exponents().to_vec(),
                })
                .collect(),
        }
    }

    /// Reads a complex export, checking closure and that every face label
    /// is the lcm of its vertex labels.
    pub fn from_file(file: &ComplexFile) -> Result<Self, ComplexError> {
        let context = VariableContext::from_names(&file.context)?;
        let mut faces = Vec::with_capacity(file.faces.len());
        let mut given: HashMap<Face, Monomial> = HashMap::new();
        for entry in &file.faces {
            let f = Face::new(&entry.rows, &entry.cols)?;
            if f.dim() != entry.dim {
                return Err(ComplexError::BadFace {
                    rows: entry.rows.clone(),
                    cols: entry.cols.clone(),
                });
            }
            if entry.label.len() != context.len() {
                return Err(ComplexError::DegreeArity {
                    expected: context.len(),
                    got: entry.label.len(),
                });
            }
            given.insert(f, Monomial::from_exponents(entry.label.clone()));
            faces.push(f);
        }
        let verts = given.clone();
        let mut missing = None;
        let complex = LabeledCellComplex::from_faces(context, Origin::Custom, faces, |i, j| {
            verts.get(&Face::vertex(i, j)).cloned().unwrap_or_else(|| {
                missing = Some((i, j));
                Monomial::one(context.len())
            })
        })?;
        if let Some((i, j)) = missing {
            return Err(ComplexError::NotClosed {
                rows: vec![i],
                cols: vec![j],
            });
        }
        for (f, l) in complex.faces() {
            if given[f] != *l {
                return Err(ComplexError::LabelMismatch {
                    rows: f.rows(),
                    cols: f.cols(),
                });
            }
        }
        Ok(complex)
    }

    /// Graphviz rendering of the 1-skeleton.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph complex {\n");
        for (f, l) in self.faces_of_dim(0).iter().zip(self.labels_of_dim(0)) {
            let (i, j) = (f.rows()[0], f.cols()[0]);
            let _ = writeln!(out, "  v{i}_{j} [label=\"{}\"];", l.display(&self.context));
        }
        for f in self.faces_of_dim(1) {
            let ends: Vec<(usize, usize)> = f.vertices().collect();
            let _ = writeln!(
                out,
                "  v{}_{} -- v{}_{};",
                ends[0].0, ends[0].1, ends[1].0, ends[1].1
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Complex export: `{"context":[names], "faces":[{"rows","cols","dim","label"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub context: Vec<String>,
    pub faces: Vec<FaceEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceEntry {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub dim: usize,
    pub label: Vec<u32>,
}

fn xy_vertex_label(ctx: &VariableContext, i: usize, j: usize) -> Monomial {
    let mut e = vec![0; ctx.len()];
    e[ctx.x_index(i)] = 1;
    e[ctx.y_index(j)] = 1;
    Monomial::from_exponents(e)
}

/// `X_{n,m}`, the face complex of `Δ_{n-1} × Δ_{m-1}` with vertex `(i, j)` labeled `x_i y_j`.
pub fn build_bipartite_complex(n: usize, m: usize) -> LabeledCellComplex {
    assert!((1..=MAX_INDEX).contains(&n) && (1..=MAX_INDEX).contains(&m));
    let ctx = VariableContext::xy(n, m);
    let rows_all = (1u64 << n) - 1;
    let cols_all = (1u64 << m) - 1;
    let faces = (1..=rows_all)
        .flat_map(|s| (1..=cols_all).map(move |t| Face::from_masks(s as u32, t as u32)));
    LabeledCellComplex::from_faces(ctx, Origin::Bipartite { n, m }, faces, |i, j| {
        xy_vertex_label(&ctx, i, j)
    })
    .expect("X_{n,m} is closed")
}

/// Faces `(S, T)` of `X_{n,m}` with `S × T` inside the diagram of `shape`.
///
/// Because `μ` increases and `λ` decreases, `S × T` lies in the diagram exactly
/// when `μ_p < min T` and `max T ≤ λ_p` for the pivot row `p = max S`.
pub fn shape_faces(shape: &Shape) -> Vec<Face> {
    let mut out = Vec::new();
    for p in 1..=shape.n() {
        let pivot = 1u32 << (p - 1);
        let (lo, hi) = (shape.mu_at(p), shape.lambda_at(p));
        let width = hi - lo;
        for lower in 0..(1u32 << (p - 1)) {
            let rows = lower | pivot;
            for t in 1..(1u64 << width) {
                out.push(Face::from_masks(rows, (t as u32) << lo));
            }
        }
    }
    out
}

/// `X_{λ-μ}`: the subcomplex of `X_{n,m}` on the boxes of the diagram.
pub fn build_shape_complex(shape: &Shape) -> LabeledCellComplex {
    let ctx = shape.context();
    LabeledCellComplex::from_faces(ctx, Origin::Shape(shape.clone()), shape_faces(shape), |i, j| {
        xy_vertex_label(&ctx, i, j)
    })
    .expect("diagram faces are closed")
}

/// Pushes the vertex labels through `sigma`; face labels are recomputed as lcms.
pub fn specialize_labels(
    x: &LabeledCellComplex,
    sigma: &Substitution,
) -> Result<LabeledCellComplex, ComplexError> {
    let source = *x.context();
    if source.y_count() != sigma.len() {
        return Err(ComplexError::Ideal(crate::error::IdealError::SubstitutionArity {
            expected: source.y_count(),
            got: sigma.len(),
        }));
    }
    let target = sigma.target_context(&source);
    let origin = match x.origin() {
        Origin::Shape(s) if sigma.is_identity() => Origin::Specialized(s.clone()),
        _ => Origin::Custom,
    };
    let faces: Vec<Face> = x.faces().map(|(f, _)| *f).collect();
    LabeledCellComplex::from_faces(target, origin, faces, |i, j| {
        sigma.apply(&source, &x.vertex_labels[&(i, j)])
    })
}

/// `X̄_{λ-μ}`.
pub fn build_specialized_complex(shape: &Shape) -> LabeledCellComplex {
    specialize_labels(&build_shape_complex(shape), &Substitution::identity(shape.m()))
        .expect("identity substitution matches the shape context")
}

/// `X_{≼c}`: the faces whose label divides `c`.
pub fn restrict(x: &LabeledCellComplex, c: &MultiDegree) -> Result<LabeledCellComplex, ComplexError> {
    if c.nvars() != x.context().len() {
        return Err(ComplexError::DegreeArity {
            expected: x.context().len(),
            got: c.nvars(),
        });
    }
    let kept: Vec<Face> = x
        .faces()
        .filter(|(_, l)| l.divides(c))
        .map(|(f, _)| *f)
        .collect();
    LabeledCellComplex::from_faces(*x.context(), Origin::Custom, kept, |i, j| {
        x.vertex_labels[&(i, j)].clone()
    })
}

/// Joins of all subsets of vertex labels, including the empty join `0`, sorted.
pub fn lcm_lattice_degrees(x: &LabeledCellComplex) -> Vec<MultiDegree> {
    let atoms: Vec<Monomial> = {
        let set: BTreeSet<Monomial> = x.labels_of_dim(0).iter().cloned().collect();
        set.into_iter().collect()
    };
    join_closure(x.context().len(), &atoms)
}

/// All joins of subsets of `atoms` (the zero degree included), sorted.
pub fn join_closure(nvars: usize, atoms: &[Monomial]) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    let zero = Monomial::one(nvars);
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(cur) = frontier.pop() {
        for a in atoms {
            let j = cur.lcm(a);
            if seen.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort();
    out
}

/// Lifts `c̄ ∈ ℕ^m` to `(a, b) ∈ ℕ^n × ℕ^m` with `a_i = max(0, c_i - 1)`,
/// `b_i = c_i - a_i` for `i ≤ n`, and `b_i = c_i` for `n < i ≤ m`.
pub fn lift_degree(cbar: &MultiDegree, shape: &Shape) -> Result<MultiDegree, ComplexError> {
    let (n, m) = (shape.n(), shape.m());
    if cbar.nvars() != m {
        return Err(ComplexError::DegreeArity {
            expected: m,
            got: cbar.nvars(),
        });
    }
    let c = cbar.exponents();
    let mut out = vec![0u32; n + m];
    for i in 0..n {
        let a = c[i].saturating_sub(1);
        out[i] = a;
        out[n + i] = c[i] - a;
    }
    out[2 * n..n + m].copy_from_slice(&c[n..m]);
    Ok(Monomial::from_exponents(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy(n: usize, m: usize, xs: &[usize], ys: &[usize]) -> Monomial {
        let ctx = VariableContext::xy(n, m);
        let mut e = vec![0; ctx.len()];
        for &i in xs {
            e[ctx.x_index(i)] += 1;
        }
        for &j in ys {
            e[ctx.y_index(j)] += 1;
        }
        Monomial::from_exponents(e)
    }

    fn xs(k: usize, idx: &[usize]) -> Monomial {
        let mut e = vec![0; k];
        for &i in idx {
            e[i - 1] += 1;
        }
        Monomial::from_exponents(e)
    }

    #[test]
    fn prism_f_vector() {
        let x = build_bipartite_complex(2, 3);
        assert_eq!(x.f_vector(), vec![6, 9, 5, 1]);
        let twofaces: Vec<(usize, usize)> =
            x.faces_of_dim(2).iter().map(Face::product_type).collect();
        let triangles = twofaces.iter().filter(|t| matches!(t, (1, 3) | (3, 1))).count();
        let squares = twofaces.iter().filter(|t| **t == (2, 2)).count();
        assert_eq!((triangles, squares), (2, 3));
    }

    #[test]
    fn tiny_bipartite_complexes() {
        let x = build_bipartite_complex(1, 1);
        assert_eq!(x.f_vector(), vec![1]);
        assert_eq!(x.labels_of_dim(0), &[xy(1, 1, &[1], &[1])]);
        let x = build_bipartite_complex(1, 2);
        assert_eq!(x.f_vector(), vec![2, 1]);
        assert_eq!(x.labels_of_dim(1), &[xy(1, 2, &[1], &[1, 2])]);
    }

    #[test]
    fn facet_signs_square_to_zero() {
        for f in build_bipartite_complex(3, 4).faces().map(|(f, _)| *f) {
            let mut acc: HashMap<Face, i64> = HashMap::new();
            for (g, s) in f.signed_facets() {
                for (h, t) in g.signed_facets() {
                    *acc.entry(h).or_default() += s * t;
                }
            }
            assert!(acc.values().all(|&v| v == 0), "{f:?}");
        }
    }

    #[test]
    fn shape_complex_census() {
        let s = Shape::new(vec![4, 4, 4], vec![1, 2, 3]).unwrap();
        let x = build_shape_complex(&s);
        assert_eq!(x.f_vector(), vec![6, 8, 3]);
        let kinds: Vec<(usize, usize)> = x.facets().iter().map(Face::product_type).collect();
        assert_eq!(kinds.len(), 3);
        assert_eq!(kinds.iter().filter(|k| **k == (2, 2)).count(), 1);
        assert_eq!(kinds.iter().filter(|k| matches!(k, (1, 3) | (3, 1))).count(), 2);

        let s = Shape::ferrers(vec![3, 3]).unwrap();
        assert_eq!(build_shape_complex(&s), build_bipartite_complex(2, 3));

        let s = Shape::new(vec![5, 5, 5], vec![1, 3, 4]).unwrap();
        let simplex = Face::new(&[1, 2, 3], &[5]).unwrap();
        assert!(build_shape_complex(&s).facets().contains(&simplex));
    }

    #[test]
    fn interval_criterion_matches_brute_force() {
        for shape in crate::shape::all_shapes(4, 6) {
            let mut brute: Vec<Face> = Vec::new();
            for s in 1u32..(1 << shape.n()) {
                for t in 1u32..(1 << shape.m()) {
                    let f = Face::from_masks(s, t);
                    if f.vertices().all(|(i, j)| shape.contains_cell(i, j)) {
                        brute.push(f);
                    }
                }
            }
            brute.sort();
            let mut fast = shape_faces(&shape);
            fast.sort();
            assert_eq!(fast, brute, "{shape:?}");
        }
    }

    #[test]
    fn specialized_vertex_labels() {
        let s = Shape::new(vec![4, 4, 4], vec![1, 2, 3]).unwrap();
        let xb = build_specialized_complex(&s);
        let mut got = xb.vertex_label_list();
        got.sort();
        let mut want = vec![
            xs(4, &[1, 2]),
            xs(4, &[1, 3]),
            xs(4, &[1, 4]),
            xs(4, &[2, 3]),
            xs(4, &[2, 4]),
            xs(4, &[3, 4]),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(xb.origin(), &Origin::Specialized(s));

        let one = build_specialized_complex(&Shape::ferrers(vec![1]).unwrap());
        assert_eq!(one.vertex_label_list(), vec![xs(1, &[1, 1])]);

        let s = Shape::new(vec![4, 4], vec![1, 2]).unwrap();
        let edge = Face::new(&[1], &[3, 4]).unwrap();
        assert_eq!(build_shape_complex(&s).label(&edge), Some(&xy(2, 4, &[1], &[3, 4])));
        assert_eq!(build_specialized_complex(&s).label(&edge), Some(&xs(4, &[1, 3, 4])));
    }

    #[test]
    fn specialized_face_labels_are_pushed_labels() {
        // exponent 2 on S ∩ T, 1 on the symmetric difference
        for shape in crate::shape::all_shapes(3, 5) {
            let xb = build_specialized_complex(&shape);
            for (f, l) in xb.faces() {
                let mut e = vec![0u32; shape.m()];
                for i in f.rows() {
                    e[i - 1] += 1;
                }
                for j in f.cols() {
                    e[j - 1] += 1;
                }
                assert_eq!(l.exponents(), e.as_slice());
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let x = build_bipartite_complex(2, 3);
        let r = restrict(&x, &xy(2, 3, &[1], &[1])).unwrap();
        assert_eq!(r.f_vector(), vec![1]);
        let r = restrict(&x, &xy(2, 3, &[1, 2], &[1, 2, 3])).unwrap();
        assert_eq!(r, x);
        let r = restrict(&x, &xy(2, 3, &[1], &[1, 2])).unwrap();
        assert_eq!(r.f_vector(), vec![2, 1]);
        assert_eq!(
            r.vertex_label_list(),
            vec![xy(2, 3, &[1], &[1]), xy(2, 3, &[1], &[2])]
        );
        assert!(restrict(&x, &Monomial::one(2)).is_err());
    }

    #[test]
    fn lift_examples() {
        let s = Shape::ferrers(vec![2]).unwrap();
        let c = lift_degree(&xs(2, &[1, 1, 2]), &s).unwrap();
        assert_eq!(c, xy(1, 2, &[1], &[1, 2]));
        assert_eq!(lift_degree(&Monomial::one(2), &s).unwrap(), Monomial::one(3));
        let s = Shape::ferrers(vec![3, 3]).unwrap();
        let c = lift_degree(&xs(3, &[1, 2, 3]), &s).unwrap();
        assert_eq!(c, xy(2, 3, &[], &[1, 2, 3]));
    }

    #[test]
    fn lattice_examples() {
        let x = build_bipartite_complex(1, 1);
        assert_eq!(lcm_lattice_degrees(&x), vec![Monomial::one(2), xy(1, 1, &[1], &[1])]);
        let x = build_bipartite_complex(1, 2);
        let l = lcm_lattice_degrees(&x);
        assert_eq!(l.len(), 4);
        assert!(l.contains(&xy(1, 2, &[1], &[1, 2])));
    }

    #[test]
    fn x22_lattice_by_brute_force_joins() {
        let x = build_bipartite_complex(2, 2);
        let atoms = x.vertex_label_list();
        let mut brute: BTreeSet<Monomial> = BTreeSet::new();
        for subset in 1u32..(1 << atoms.len()) {
            let j = (0..atoms.len())
                .filter(|k| subset >> k & 1 == 1)
                .fold(Monomial::one(4), |acc, k| acc.lcm(&atoms[k]));
            brute.insert(j);
        }
        let lattice = lcm_lattice_degrees(&x);
        assert_eq!(lattice.len() - 1, brute.len());
        assert_eq!(brute.len(), 9);
    }

    #[test]
    fn restriction_is_closed() {
        let s = Shape::new(vec![5, 4, 4], vec![1, 2, 3]).unwrap();
        for x in [build_shape_complex(&s), build_specialized_complex(&s)] {
            for c in lcm_lattice_degrees(&x) {
                // from_faces rejects non-closed face sets
                restrict(&x, &c).unwrap();
            }
        }
    }

    #[test]
    fn file_round_trip_and_validation() {
        let s = Shape::new(vec![4, 4, 4], vec![1, 2, 3]).unwrap();
        let xb = build_specialized_complex(&s);
        let file = xb.to_file();
        let back = LabeledCellComplex::from_file(&file).unwrap();
        assert_eq!(back, xb);

        let mut broken = file.clone();
        broken.faces.retain(|f| f.dim != 0 || f.rows != vec![1]);
        assert!(matches!(
            LabeledCellComplex::from_file(&broken),
            Err(ComplexError::NotClosed { .. })
        ));
        let mut relabeled = file;
        let last = relabeled.faces.last_mut().unwrap();
        last.label[0] += 1;
        assert!(matches!(
            LabeledCellComplex::from_file(&relabeled),
            Err(ComplexError::LabelMismatch { .. })
        ));
    }

    #[test]
    fn dropping_a_square_drops_the_prism() {
        let x = build_bipartite_complex(2, 3);
        let square = Face::new(&[1, 2], &[1, 2]).unwrap();
        let y = x.without_face(&square).unwrap();
        assert_eq!(y.f_vector(), vec![6, 9, 4]);
        assert!(y.to_dot().contains("--"));
    }
}
