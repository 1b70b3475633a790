//! Cellular free complexes, Betti tables, and the acyclicity check.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{lcm_lattice_degrees, LabeledCellComplex, Origin};
use crate::error::ResolutionError;
use crate::linalg::Field;
use crate::monomial::{Monomial, MultiDegree, VariableContext};
use crate::shape::Shape;

/// One entry `sign · monomial` of a differential matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub monomial: Monomial,
}

/// A sparse matrix with monomial entries in coordinate form, sorted by `(col, row)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Entry>,
}

/// A free complex `0 ← F_0 ← F_1 ← …` of multigraded modules.
///
/// `differentials[k - 1]` is `∂_k : F_k → F_{k-1}`; rows index the basis of
/// `F_{k-1}`, columns the basis of `F_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    context: VariableContext,
    basis_labels: Vec<Vec<MultiDegree>>,
    differentials: Vec<MonomialMatrix>,
}

impl ChainComplex {
    /// Assembles a complex from basis degrees and differentials.
    ///
    /// Panics when a matrix shape disagrees with the bases.
    pub fn new(
        context: VariableContext,
        basis_labels: Vec<Vec<MultiDegree>>,
        differentials: Vec<MonomialMatrix>,
    ) -> Self {
        assert_eq!(differentials.len() + 1, basis_labels.len().max(1));
        for (k, d) in differentials.iter().enumerate() {
            assert_eq!(d.rows, basis_labels[k].len());
            assert_eq!(d.cols, basis_labels[k + 1].len());
        }
        ChainComplex {
            context,
            basis_labels,
            differentials,
        }
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    /// Rank of `F_k` for `k = 0, 1, …`.
    pub fn ranks(&self) -> Vec<usize> {
        self.basis_labels.iter().map(Vec::len).collect()
    }

    pub fn basis_labels(&self, k: usize) -> &[MultiDegree] {
        self.basis_labels.get(k).map_or(&[], Vec::as_slice)
    }

    /// `∂_k` for `k ≥ 1`.
    pub fn differential(&self, k: usize) -> Option<&MonomialMatrix> {
        k.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    /// Positions `(k, row, col)` where `∂_k ∘ ∂_{k+1}` has a non-zero entry.
    pub fn d_squared_defects(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for k in 1..self.differentials.len() {
            let lower = &self.differentials[k - 1];
            let upper = &self.differentials[k];
            let mut by_col: HashMap<usize, Vec<&Entry>> = HashMap::new();
            for e in &lower.entries {
                by_col.entry(e.col).or_default().push(e);
            }
            let mut acc: BTreeMap<(usize, usize, Monomial), i64> = BTreeMap::new();
            for u in &upper.entries {
                for l in by_col.get(&u.row).into_iter().flatten() {
                    let key = (l.row, u.col, l.monomial.mul(&u.monomial));
                    *acc.entry(key).or_default() += i64::from(l.sign) * i64::from(u.sign);
                }
            }
            let mut bad: Vec<(usize, usize, usize)> = acc
                .into_iter()
                .filter(|(_, v)| *v != 0)
                .map(|((r, c, _), _)| (k, r, c))
                .collect();
            bad.dedup();
            out.extend(bad);
        }
        out
    }

    /// Whether `∂ ∘ ∂ = 0` after expanding every entry as `sign · monomial`.
    pub fn is_complex(&self) -> bool {
        self.d_squared_defects().is_empty()
    }

    pub fn to_file(&self) -> ChainComplexFile {
        ChainComplexFile {
            context: self.context.names(),
            ranks: self.ranks(),
            basis_labels: self
                .basis_labels
                .iter()
                .map(|b| b.iter().map(|m| m.exponents().to_vec()).collect())
                .collect(),
            differentials: self
                .differentials
                .iter()
                .enumerate()
                .map(|(k, d)| MatrixFile {
                    degree: k + 1,
                    rows: d.rows,
                    cols: d.cols,
                    entries: d
                        .entries
                        .iter()
                        .map(|e| EntryFile {
                            row: e.row,
                            col: e.col,
                            sign: e.sign,
                            monomial: e.monomial.exponents().to_vec(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Chain complex export, one matrix per homological degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainComplexFile {
    pub context: Vec<String>,
    pub ranks: Vec<usize>,
    pub basis_labels: Vec<Vec<Vec<u32>>>,
    pub differentials: Vec<MatrixFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<EntryFile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryFile {
    pub row: usize,
    pub col: usize,
    pub sign: i8,
    pub monomial: Vec<u32>,
}

/// The cellular free complex `F_X`.
///
/// Faces of dimension `d` form the basis of `F_{d+1}`; `F_0` is the ring with
/// degree `0`. The entry for face `P` and facet `Q` is `ε(P, Q) · z^{a_P - a_Q}`.
pub fn cellular_chain_complex(x: &LabeledCellComplex) -> ChainComplex {
    let ctx = *x.context();
    let top = x.dim().map_or(0, |d| d + 1);
    let mut basis = vec![vec![Monomial::one(ctx.len())]];
    for d in 0..top {
        basis.push(x.labels_of_dim(d).to_vec());
    }
    let mut diffs = Vec::with_capacity(top);
    for d in 0..top {
        let faces = x.faces_of_dim(d);
        let labels = x.labels_of_dim(d);
        let mut entries = Vec::new();
        for (col, (f, label)) in faces.iter().zip(labels).enumerate() {
            if d == 0 {
                entries.push(Entry {
                    row: 0,
                    col,
                    sign: 1,
                    monomial: label.clone(),
                });
                continue;
            }
            let mut column: Vec<Entry> = f
                .signed_facets()
                .into_iter()
                .map(|(g, s)| {
                    let row = x.position(&g).expect("complex is closed");
                    let lower = &x.labels_of_dim(d - 1)[row];
                    Entry {
                        row,
                        col,
                        sign: s as i8,
                        monomial: label.quotient(lower).expect("facet labels divide"),
                    }
                })
                .collect();
            column.sort_by_key(|e| e.row);
            entries.extend(column);
        }
        diffs.push(MonomialMatrix {
            rows: basis[d].len(),
            cols: faces.len(),
            entries,
        });
    }
    ChainComplex::new(ctx, basis, diffs)
}

/// Whether no differential entry is a unit, i.e. every monomial has degree ≥ 1.
pub fn check_minimal(c: &ChainComplex) -> bool {
    c.differentials
        .iter()
        .all(|d| d.entries.iter().all(|e| e.monomial.degree() >= 1))
}

/// Multigraded Betti numbers `β_{i,a}` of a quotient `S/I`, with `β_{0,0} = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "BettiFile", try_from = "BettiFile")]
pub struct BettiTable {
    nvars: usize,
    entries: BTreeMap<(usize, MultiDegree), usize>,
}

impl BettiTable {
    /// The table of `S/0`: only `β_{0,0} = 1`.
    pub fn unit(nvars: usize) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert((0, Monomial::one(nvars)), 1);
        BettiTable { nvars, entries }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Adds `value` to `β_{i,a}`; zero values are not stored.
    pub fn add(&mut self, i: usize, a: MultiDegree, value: usize) {
        assert_eq!(a.nvars(), self.nvars);
        if value > 0 {
            *self.entries.entry((i, a)).or_default() += value;
        }
    }

    pub fn get(&self, i: usize, a: &MultiDegree) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    /// Non-zero entries in `(i, a)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &MultiDegree, usize)> {
        self.entries.iter().map(|((i, a), v)| (*i, a, *v))
    }

    /// `max{i : β_i ≠ 0}`.
    pub fn pdim(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// `β_i = Σ_a β_{i,a}` for `i = 0..=pdim`.
    pub fn totals(&self) -> Vec<usize> {
        let mut out = vec![0; self.pdim() + 1];
        for ((i, _), v) in &self.entries {
            out[*i] += v;
        }
        out
    }

    /// `β_i` for `i ≥ 1`, so `betti_numbers()[0]` is the number of generators.
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.totals().into_iter().skip(1).collect()
    }

    pub fn total(&self, i: usize) -> usize {
        self.totals().get(i).copied().unwrap_or(0)
    }

    /// `β_{i,d} = Σ_{|a| = d} β_{i,a}`.
    pub fn z_graded(&self) -> BTreeMap<(usize, u32), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), v) in &self.entries {
            *out.entry((*i, a.degree())).or_default() += v;
        }
        out
    }

    /// Z-graded table as a matrix: rows `i = 0..=pdim`, columns `d = 0..=max degree`.
    pub fn z_graded_matrix(&self) -> Vec<Vec<usize>> {
        let z = self.z_graded();
        let dmax = z.keys().map(|(_, d)| *d).max().unwrap_or(0) as usize;
        let mut out = vec![vec![0; dmax + 1]; self.pdim() + 1];
        for ((i, d), v) in z {
            out[i][d as usize] = v;
        }
        out
    }

    /// Regularity of the ideal, `max{|a| - i + 1 : β_{i,a} ≠ 0, i ≥ 1}`.
    pub fn regularity(&self) -> Option<i64> {
        self.entries
            .keys()
            .filter(|(i, _)| *i >= 1)
            .map(|(i, a)| i64::from(a.degree()) - *i as i64 + 1)
            .max()
    }

    /// Whether `β_{i,d} ≠ 0` forces `d = i + 1` for all `i ≥ 1`.
    pub fn is_two_linear(&self) -> bool {
        self.entries
            .keys()
            .filter(|(i, _)| *i >= 1)
            .all(|(i, a)| a.degree() as usize == i + 1)
    }

    pub fn to_file(&self) -> BettiFile {
        BettiFile {
            nvars: self.nvars,
            multigraded: self
                .entries
                .iter()
                .map(|((i, a), v)| BettiEntry {
                    i: *i,
                    degree: a.exponents().to_vec(),
                    value: *v,
                })
                .collect(),
            graded: self.z_graded_matrix(),
        }
    }
}

/// Betti table export: the multigraded list plus the Z-graded matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiFile {
    pub nvars: usize,
    pub multigraded: Vec<BettiEntry>,
    pub graded: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub degree: Vec<u32>,
    pub value: usize,
}

impl From<BettiTable> for BettiFile {
    fn from(t: BettiTable) -> Self {
        t.to_file()
    }
}

impl TryFrom<BettiFile> for BettiTable {
    type Error = String;

    fn try_from(f: BettiFile) -> Result<Self, String> {
        let mut t = BettiTable {
            nvars: f.nvars,
            entries: BTreeMap::new(),
        };
        for e in f.multigraded {
            if e.degree.len() != f.nvars {
                return Err(format!("degree of length {} in a table over {} variables", e.degree.len(), f.nvars));
            }
            t.add(e.i, Monomial::from_exponents(e.degree), e.value);
        }
        if t.z_graded_matrix() != f.graded {
            return Err("graded matrix disagrees with the multigraded entries".into());
        }
        Ok(t)
    }
}

/// Counts faces by label: `β_{i,a} = #{faces of dimension i - 1 labeled a}`.
///
/// These are Betti numbers only when the cellular complex is a minimal
/// resolution; see [`betti_from_faces`].
pub fn face_count_table(x: &LabeledCellComplex) -> BettiTable {
    let mut t = BettiTable::unit(x.context().len());
    for (f, l) in x.faces() {
        t.add(f.dim() + 1, l.clone(), 1);
    }
    t
}

/// Whether the origin of `x` guarantees a minimal cellular resolution.
pub fn guaranteed_minimal(x: &LabeledCellComplex) -> bool {
    match x.origin() {
        Origin::Bipartite { .. } | Origin::Shape(_) => true,
        Origin::Specialized(s) => s.satisfies_specialization_hypothesis(),
        Origin::Custom => false,
    }
}

/// Betti table of the quotient read off the face labels.
///
/// Returns `NotGuaranteedMinimal` (carrying the face-count table) when `x` is
/// neither a shape complex nor a specialization satisfying `μ_i ≥ i - 1`.
pub fn betti_from_faces(x: &LabeledCellComplex) -> Result<BettiTable, ResolutionError> {
    let table = face_count_table(x);
    if guaranteed_minimal(x) {
        Ok(table)
    } else {
        Err(ResolutionError::NotGuaranteedMinimal { table })
    }
}

/// Multigraded table together with its Z-graded collapse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedBetti {
    pub table: BettiTable,
    pub graded: Vec<Vec<usize>>,
    pub two_linear: bool,
}

pub fn graded_betti(x: &LabeledCellComplex) -> Result<GradedBetti, ResolutionError> {
    let table = betti_from_faces(x)?;
    Ok(GradedBetti {
        graded: table.z_graded_matrix(),
        two_linear: table.is_two_linear(),
        table,
    })
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, t| acc * (n - t) as u128 / (t + 1) as u128)
}

/// `β_i = Σ_j C(λ_j - μ_j + j - 1, i) - C(n, i + 1)` for `i ≥ 1`; `β_0 = 1`.
pub fn betti_closed_form(shape: &Shape, i: usize) -> usize {
    if i == 0 {
        return 1;
    }
    let n = shape.n();
    let sum: u128 = (1..=n)
        .map(|j| binomial(shape.lambda_at(j) - shape.mu_at(j) + j - 1, i))
        .sum();
    (sum - binomial(n, i + 1)) as usize
}

/// Closed-form `β_1, β_2, …` up to the last non-zero one.
pub fn betti_closed_form_all(shape: &Shape) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1.. {
        let b = betti_closed_form(shape, i);
        if b == 0 {
            break;
        }
        out.push(b);
    }
    out
}

/// A degree `c` where `X_{≼c}` has non-zero reduced homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Defect {
    pub degree: Vec<u32>,
    pub dim: i32,
    pub rank: usize,
}

/// Outcome of the acyclicity check over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub field: Field,
    pub degrees_checked: usize,
    pub defects: Vec<Defect>,
}

impl VerificationReport {
    pub fn is_resolution(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Checks that `X_{≼c}` is acyclic for every `c` in the lcm lattice of `x`.
///
/// An empty restriction counts as acyclic. Defects are listed in lattice order.
pub fn verify_resolution(x: &LabeledCellComplex, field: Field) -> VerificationReport {
    let degrees = lcm_lattice_degrees(x);
    let defects: Vec<Vec<Defect>> = degrees
        .par_iter()
        .map(|c| restriction_defects(x, c, field))
        .collect();
    VerificationReport {
        field,
        degrees_checked: degrees.len(),
        defects: defects.into_iter().flatten().collect(),
    }
}

/// Non-zero reduced homology of `X_{≼c}`.
pub fn restriction_defects(x: &LabeledCellComplex, c: &MultiDegree, field: Field) -> Vec<Defect> {
    let chain = x.reduced_chain_where(|_, l| l.divides(c));
    if chain.len() <= 1 {
        return Vec::new();
    }
    chain
        .homology(field)
        .nonzero()
        .into_iter()
        .map(|(dim, rank)| Defect {
            degree: c.exponents().to_vec(),
            dim,
            rank,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{
        build_bipartite_complex, build_shape_complex, build_specialized_complex, Face,
    };

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn prism_complex() {
        let x = build_bipartite_complex(2, 3);
        let c = cellular_chain_complex(&x);
        assert_eq!(c.ranks(), vec![1, 6, 9, 5, 1]);
        assert!(c.is_complex());
        assert!(check_minimal(&c));
        let t = betti_from_faces(&x).unwrap();
        assert_eq!(t.betti_numbers(), vec![6, 9, 5, 1]);
        assert!(t.is_two_linear());
        assert_eq!(t.regularity(), Some(2));
        assert_eq!(t.z_graded_matrix()[2], vec![0, 0, 0, 9, 0, 0]);
        assert!(verify_resolution(&x, Field::GF2).is_resolution());
    }

    #[test]
    fn edge_differential_sign() {
        let x = build_bipartite_complex(2, 3);
        let c = cellular_chain_complex(&x);
        let edge = Face::new(&[1], &[1, 2]).unwrap();
        let col = x.position(&edge).unwrap();
        let v11 = x.position(&Face::vertex(1, 1)).unwrap();
        let v12 = x.position(&Face::vertex(1, 2)).unwrap();
        let d2 = c.differential(2).unwrap();
        let column: Vec<&Entry> = d2.entries.iter().filter(|e| e.col == col).collect();
        assert_eq!(column.len(), 2);
        let y = |j: usize| Monomial::variable(5, x.context().y_index(j));
        for e in column {
            if e.row == v11 {
                assert_eq!((e.sign, &e.monomial), (-1, &y(2)));
            } else {
                assert_eq!(e.row, v12);
                assert_eq!((e.sign, &e.monomial), (1, &y(1)));
            }
        }
    }

    #[test]
    fn single_vertex_resolution() {
        let s = Shape::ferrers(vec![1]).unwrap();
        let c = cellular_chain_complex(&build_specialized_complex(&s));
        assert_eq!(c.ranks(), vec![1, 1]);
        assert_eq!(c.differential(1).unwrap().entries[0].monomial, mono(&[2]));
        let t = betti_from_faces(&build_specialized_complex(&s)).unwrap();
        assert_eq!(t.betti_numbers(), vec![1]);
        assert_eq!(t.get(1, &mono(&[2])), 1);
    }

    #[test]
    fn closed_form_examples() {
        let s = Shape::ferrers(vec![3, 3]).unwrap();
        assert_eq!(betti_closed_form_all(&s), vec![6, 9, 5, 1]);
        let s = Shape::new(vec![4, 4], vec![1, 2]).unwrap();
        assert_eq!(betti_closed_form_all(&s), vec![5, 6, 2]);
        let s = Shape::ferrers(vec![1]).unwrap();
        assert_eq!(betti_closed_form_all(&s), vec![1]);
        assert_eq!(betti_closed_form(&s, 2), 0);
        assert_eq!(betti_closed_form(&s, 0), 1);
    }

    #[test]
    fn specialized_tables() {
        let s = Shape::new(vec![4, 4, 4], vec![1, 2, 3]).unwrap();
        let t = betti_from_faces(&build_specialized_complex(&s)).unwrap();
        assert_eq!(t.betti_numbers(), vec![6, 8, 3]);
        let s = Shape::new(vec![4, 4], vec![1, 2]).unwrap();
        let g = graded_betti(&build_specialized_complex(&s)).unwrap();
        assert!(g.two_linear);
        assert_eq!(g.graded[1][2], 5);
        assert_eq!(g.graded[2][3], 6);
        assert_eq!(g.graded[3][4], 2);
    }

    #[test]
    fn unguaranteed_specialization_is_flagged() {
        let s = Shape::ferrers(vec![2, 2]).unwrap();
        let err = betti_from_faces(&build_specialized_complex(&s)).unwrap_err();
        let ResolutionError::NotGuaranteedMinimal { table } = err;
        assert_eq!(table.betti_numbers(), vec![4, 4, 1]);
        assert!(betti_from_faces(&build_shape_complex(&s)).is_ok());
    }

    #[test]
    fn disconnected_restriction_is_a_defect() {
        let ctx = VariableContext::xy(2, 2);
        let faces = [Face::vertex(1, 1), Face::vertex(2, 2)];
        let x = LabeledCellComplex::from_faces(ctx, Origin::Custom, faces, |i, j| {
            let mut e = vec![0; 4];
            e[ctx.x_index(i)] = 1;
            e[ctx.y_index(j)] = 1;
            Monomial::from_exponents(e)
        })
        .unwrap();
        let report = verify_resolution(&x, Field::GF32003);
        assert_eq!(
            report.defects,
            vec![Defect {
                degree: vec![1, 1, 1, 1],
                dim: 0,
                rank: 1
            }]
        );
    }

    #[test]
    fn betti_file_round_trip() {
        let x = build_bipartite_complex(2, 2);
        let t = face_count_table(&x);
        let json = serde_json::to_string(&t).unwrap();
        let back: BettiTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        let c = cellular_chain_complex(&x);
        let file = c.to_file();
        assert_eq!(file.differentials.len(), 3);
        assert_eq!(file.ranks, vec![1, 4, 4, 1]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(2, 3), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(30, 15), 155117520);
    }
}
