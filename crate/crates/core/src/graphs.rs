//! Graphs with loops, their edge ideals, and the shape read off a vertex ordering.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::monomial::{Monomial, MonomialIdeal, VariableContext};
use crate::oracle::InvariantReport;
use crate::resolution::betti_closed_form_all;
use crate::shape::Shape;

/// A graph on `[m]`; edges are pairs `i < j`, loops are listed separately.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    m: usize,
    edges: BTreeSet<(usize, usize)>,
    loops: BTreeSet<usize>,
}

/// JSON graph file: `{"m":…, "edges":[[i,j],…], "loops":[…]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub m: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub loops: Vec<usize>,
}

impl Graph {
    pub fn new(m: usize, edges: &[(usize, usize)], loops: &[usize]) -> Result<Self, GraphError> {
        let check = |v: usize| {
            if (1..=m).contains(&v) {
                Ok(())
            } else {
                Err(GraphError::VertexOutOfRange(v))
            }
        };
        let mut edge_set = BTreeSet::new();
        for &(i, j) in edges {
            check(i)?;
            check(j)?;
            if i == j {
                return Err(GraphError::SelfEdge(i));
            }
            if !edge_set.insert((i.min(j), i.max(j))) {
                return Err(GraphError::DuplicateEdge(i.min(j), i.max(j)));
            }
        }
        let mut loop_set = BTreeSet::new();
        for &v in loops {
            check(v)?;
            if !loop_set.insert(v) {
                return Err(GraphError::DuplicateLoop(v));
            }
        }
        Ok(Graph {
            m,
            edges: edge_set,
            loops: loop_set,
        })
    }

    pub fn complete(m: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
            .collect();
        Graph::new(m, &edges, &[]).expect("complete graph is well formed")
    }

    pub fn from_file(file: &GraphFile) -> Result<Self, GraphError> {
        let edges: Vec<(usize, usize)> = file.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::new(file.m, &edges, &file.loops)
    }

    pub fn to_file(&self) -> GraphFile {
        GraphFile {
            m: self.m,
            edges: self.edges.iter().map(|&(i, j)| [i, j]).collect(),
            loops: self.loops.iter().copied().collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn loops(&self) -> impl Iterator<Item = usize> + '_ {
        self.loops.iter().copied()
    }

    pub fn has_loops(&self) -> bool {
        !self.loops.is_empty()
    }

    /// Adjacency; `i == j` asks for a loop.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j {
            self.loops.contains(&i)
        } else {
            self.edges.contains(&(i.min(j), i.max(j)))
        }
    }

    /// `N(v)`, containing `v` itself when there is a loop at `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.m).filter(|&u| self.has_edge(v, u)).collect()
    }

    /// `|N(v)|`; a loop counts once.
    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (1..=self.m).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (1..=self.m).filter(|&v| self.degree(v) == 0).collect()
    }

    /// The graph with vertex `order[k - 1]` renamed to `k`.
    pub fn relabel(&self, order: &[usize]) -> Graph {
        assert_eq!(order.len(), self.m);
        let mut new_of = vec![0; self.m + 1];
        for (k, &old) in order.iter().enumerate() {
            new_of[old] = k + 1;
        }
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(i, j)| (new_of[i], new_of[j])).collect();
        let loops: Vec<usize> = self.loops.iter().map(|&v| new_of[v]).collect();
        Graph::new(self.m, &edges, &loops).expect("relabeling is a bijection")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.m {
            let _ = writeln!(out, "  {v};");
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        for &v in &self.loops {
            let _ = writeln!(out, "  {v} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// `I_G = (x_i x_j : {i,j} edge) + (x_i^2 : loop at i)` in `K[x1..xm]`.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let m = g.vertex_count();
    let mut gens = Vec::new();
    for (i, j) in g.edges() {
        let mut e = vec![0; m];
        e[i - 1] = 1;
        e[j - 1] = 1;
        gens.push(Monomial::from_exponents(e));
    }
    for v in g.loops() {
        let mut e = vec![0; m];
        e[v - 1] = 2;
        gens.push(Monomial::from_exponents(e));
    }
    MonomialIdeal::new(VariableContext::x_only(m), gens).expect("exponents match the ring")
}

/// Inverse of [`edge_ideal`] for x-only ideals generated in degree two.
pub fn graph_of_ideal(ideal: &MonomialIdeal) -> Result<Graph, GraphError> {
    let ideal = ideal.minimize();
    if ideal.context().y_count() != 0 || !ideal.is_generated_in_degree(2) {
        return Err(GraphError::NotDegreeTwo);
    }
    let mut edges = Vec::new();
    let mut loops = Vec::new();
    for g in ideal.generators() {
        match g.support().as_slice() {
            [v] => loops.push(v + 1),
            [a, b] => edges.push((a + 1, b + 1)),
            _ => unreachable!("degree-two monomials have one or two variables"),
        }
    }
    Graph::new(ideal.context().len(), &edges, &loops)
}

fn induced_degree(g: &Graph, v: usize, alive: &[bool]) -> usize {
    (1..=g.vertex_count())
        .filter(|&u| alive[u] && g.has_edge(v, u))
        .count()
}

/// Repeatedly picks a vertex of maximum degree in the graph induced on the
/// unpicked vertices, breaking ties by the smallest label.
///
/// Returns the picked vertices in order; `result[k - 1]` becomes vertex `k`.
pub fn order_vertices(g: &Graph) -> Result<Vec<usize>, GraphError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(GraphError::IsolatedVertex(v));
    }
    let m = g.vertex_count();
    let mut alive = vec![true; m + 1];
    alive[0] = false;
    let mut order = Vec::with_capacity(m);
    for _ in 0..m {
        let v = (1..=m)
            .filter(|&v| alive[v])
            .max_by_key(|&v| (induced_degree(g, v, &alive), std::cmp::Reverse(v)))
            .expect("a vertex remains");
        alive[v] = false;
        order.push(v);
    }
    Ok(order)
}

/// Every ordering the max-degree procedure can produce under some tie-break.
pub fn all_vertex_orderings(g: &Graph) -> Result<Vec<Vec<usize>>, GraphError> {
    fn walk(g: &Graph, alive: &mut Vec<bool>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let m = g.vertex_count();
        if acc.len() == m {
            out.push(acc.clone());
            return;
        }
        let live: Vec<usize> = (1..=m).filter(|&v| alive[v]).collect();
        let best = live.iter().map(|&v| induced_degree(g, v, alive)).max().unwrap_or(0);
        for v in live {
            if induced_degree(g, v, alive) == best {
                alive[v] = false;
                acc.push(v);
                walk(g, alive, acc, out);
                acc.pop();
                alive[v] = true;
            }
        }
    }
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(GraphError::IsolatedVertex(v));
    }
    let mut alive = vec![true; g.vertex_count() + 1];
    alive[0] = false;
    let mut out = Vec::new();
    walk(g, &mut alive, &mut Vec::new(), &mut out);
    Ok(out)
}

/// The data `(n, λ, μ)` read off an ordered graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeDerivation {
    /// `ordering[k - 1]` is the original label of vertex `k`.
    pub ordering: Vec<usize>,
    pub n: usize,
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl ShapeDerivation {
    /// The derived pair as a validated [`Shape`], if it is one.
    pub fn shape(&self) -> Result<Shape, GraphError> {
        Shape::new(self.lambda.clone(), self.mu.clone())
            .map_err(|e| GraphError::NotShapeRepresentable(e.to_string()))
    }
}

/// Reads `(n, λ, μ)` off `g` relabeled by `ordering`:
/// `n = max{i : some edge (i, j) with j ≥ i}`, `λ_i = max N(i)`,
/// `μ_i = min{j ≥ i : (i, j) edge} - 1`.
pub fn derive_shape_with(g: &Graph, ordering: &[usize]) -> Result<ShapeDerivation, GraphError> {
    let h = g.relabel(ordering);
    let m = h.vertex_count();
    let up = |i: usize| (i..=m).filter(|&j| h.has_edge(i, j)).collect::<Vec<usize>>();
    let n = (1..=m)
        .filter(|&i| !up(i).is_empty())
        .max()
        .ok_or_else(|| GraphError::NotShapeRepresentable("graph has no edges".into()))?;
    let mut lambda = Vec::with_capacity(n);
    let mut mu = Vec::with_capacity(n);
    for i in 1..=n {
        let ups = up(i);
        let first = *ups.first().ok_or_else(|| {
            GraphError::NotShapeRepresentable(format!("vertex {i} has no neighbor j >= {i}"))
        })?;
        lambda.push(*h.neighbors(i).last().expect("vertex has a neighbor"));
        mu.push(first - 1);
    }
    if lambda[0] != m {
        return Err(GraphError::NotShapeRepresentable(format!(
            "lambda_1 = {} differs from m = {m}",
            lambda[0]
        )));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(GraphError::NotShapeRepresentable(format!(
            "lambda = {lambda:?} is not weakly decreasing"
        )));
    }
    Ok(ShapeDerivation {
        ordering: ordering.to_vec(),
        n,
        lambda,
        mu,
    })
}

pub fn derive_shape(g: &Graph) -> Result<ShapeDerivation, GraphError> {
    derive_shape_with(g, &order_vertices(g)?)
}

/// The separate parts of the condition under which the closed forms apply.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// Diagram cells `(i, j)` that are not edges of the relabeled graph.
    pub missing_cells: Vec<(usize, usize)>,
    /// `μ_1 ≤ … ≤ μ_n`.
    pub mu_weakly_increasing: bool,
    /// `μ_1 ≥ … ≥ μ_n`, recorded for comparison only.
    pub mu_weakly_decreasing: bool,
    /// `μ_i ≥ i - 1` for all `i`.
    pub mu_hypothesis: bool,
    /// The derived pair is a valid shape.
    pub valid_shape: bool,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.missing_cells.is_empty() && self.mu_weakly_increasing && self.mu_hypothesis && self.valid_shape
    }
}

pub fn condition_report(g: &Graph, d: &ShapeDerivation) -> ConditionReport {
    let h = g.relabel(&d.ordering);
    let mut missing = Vec::new();
    for i in 1..=d.n {
        for j in d.mu[i - 1] + 1..=d.lambda[i - 1] {
            if !h.has_edge(i, j) {
                missing.push((i, j));
            }
        }
    }
    ConditionReport {
        missing_cells: missing,
        mu_weakly_increasing: d.mu.windows(2).all(|w| w[0] <= w[1]),
        mu_weakly_decreasing: d.mu.windows(2).all(|w| w[0] >= w[1]),
        mu_hypothesis: d.mu.iter().enumerate().all(|(k, &u)| u >= k),
        valid_shape: d.shape().is_ok(),
    }
}

pub fn check_condition(g: &Graph, d: &ShapeDerivation) -> bool {
    condition_report(g, d).holds()
}

/// Closed-form invariants of `S/I_G` for a graph satisfying the condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    pub derivation: ShapeDerivation,
    pub condition: ConditionReport,
    pub report: InvariantReport,
}

/// Invariants of the specialized shape ideal from `(m, λ, μ)`.
pub fn closed_form_report(shape: &Shape, m: usize) -> InvariantReport {
    let n = shape.n();
    let spans: Vec<usize> = (1..=n)
        .map(|j| shape.lambda_at(j) - shape.mu_at(j) + j - 1)
        .collect();
    let lo = *spans.iter().min().expect("shape has rows");
    let hi = *spans.iter().max().expect("shape has rows");
    let height = lo.min(n);
    let depth = m - hi;
    let betti = betti_closed_form_all(shape);
    InvariantReport {
        pdim: betti.len(),
        betti,
        depth,
        height,
        dim: m - height,
        reg: 2,
        cohen_macaulay: lo == hi && hi <= n,
    }
}

/// Orders, derives the shape, checks the condition, and evaluates the closed forms.
pub fn analyze(g: &Graph) -> Result<GraphAnalysis, GraphError> {
    analyze_with(g, &order_vertices(g)?)
}

pub fn analyze_with(g: &Graph, ordering: &[usize]) -> Result<GraphAnalysis, GraphError> {
    let derivation = derive_shape_with(g, ordering)?;
    let condition = condition_report(g, &derivation);
    if !condition.holds() {
        return Err(GraphError::ConditionFailed);
    }
    let shape = derivation.shape()?;
    Ok(GraphAnalysis {
        report: closed_form_report(&shape, g.vertex_count()),
        derivation,
        condition,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CreationStep {
    Isolated,
    Dominating,
}

/// Evidence that a graph is threshold.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdCertificate {
    /// `weights[v - 1]`; `{i, j}` is an edge iff `w_i + w_j > 0`.
    pub weights: Vec<i64>,
    /// Vertices in the order they are added, with how each is added.
    pub creation: Vec<(usize, CreationStep)>,
}

impl ThresholdCertificate {
    /// Checks `w_i + w_j > 0 ⟺ {i, j} ∈ E` for all `i < j`.
    pub fn verify(&self, g: &Graph) -> bool {
        let m = g.vertex_count();
        self.weights.len() == m
            && (1..=m).all(|i| {
                (i + 1..=m).all(|j| (self.weights[i - 1] + self.weights[j - 1] > 0) == g.has_edge(i, j))
            })
    }
}

/// Peels isolated or dominating vertices (smallest label first, isolated
/// before dominating). The vertex peeled at step `t` gets weight
/// `±(m - t + 1)`: positive when dominating, negative when isolated.
pub fn is_threshold(g: &Graph) -> Result<ThresholdCertificate, GraphError> {
    if g.has_loops() {
        return Err(GraphError::HasLoops);
    }
    let m = g.vertex_count();
    let mut alive = vec![true; m + 1];
    alive[0] = false;
    let mut weights = vec![0i64; m];
    let mut peeled = Vec::with_capacity(m);
    for t in 1..=m {
        let live: Vec<usize> = (1..=m).filter(|&v| alive[v]).collect();
        let rest = live.len() - 1;
        let pick = live
            .iter()
            .map(|&v| (v, induced_degree(g, v, &alive)))
            .find(|&(_, d)| d == 0)
            .map(|(v, _)| (v, CreationStep::Isolated))
            .or_else(|| {
                live.iter()
                    .find(|&&v| induced_degree(g, v, &alive) == rest)
                    .map(|&v| (v, CreationStep::Dominating))
            })
            .ok_or(GraphError::NotThreshold)?;
        let size = (m - t + 1) as i64;
        weights[pick.0 - 1] = match pick.1 {
            CreationStep::Dominating => size,
            CreationStep::Isolated => -size,
        };
        alive[pick.0] = false;
        peeled.push(pick);
    }
    peeled.reverse();
    let cert = ThresholdCertificate {
        weights,
        creation: peeled,
    };
    debug_assert!(cert.verify(g));
    Ok(cert)
}

/// The threshold graph on `[m]` where vertex `k` is added as `steps[k - 1]`.
pub fn threshold_from_creation(steps: &[CreationStep]) -> Graph {
    let mut edges = Vec::new();
    for (k, step) in steps.iter().enumerate() {
        if *step == CreationStep::Dominating {
            edges.extend((1..=k).map(|i| (i, k + 1)));
        }
    }
    Graph::new(steps.len(), &edges, &[]).expect("creation edges are well formed")
}

/// Shape data of a threshold graph under both readings of `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdShape {
    /// Vertices sorted by weakly decreasing degree (ties by label).
    pub ordering: Vec<usize>,
    /// Degrees in that order.
    pub degrees: Vec<usize>,
    /// `max{i : deg_i ≥ i + 1}`.
    pub n_by_degree: usize,
    /// Largest neighbor index of each vertex in that order.
    pub lambda: Vec<usize>,
    /// `max{i : λ_i ≥ i + 1}` with `λ` the largest neighbor.
    pub n: usize,
    /// `(1, 2, …, n)`.
    pub mu: Vec<usize>,
    /// Whether both readings give the same `n` and the same Betti numbers.
    pub conventions_agree: bool,
    /// Betti numbers from the degree reading, `Σ_j C(deg_j - 1, i) - C(n, i + 1)`.
    pub betti_by_degree: Vec<usize>,
    /// Report from the largest-neighbor reading.
    pub report: InvariantReport,
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1usize, |acc, t| acc * (n - t) / (t + 1))
}

fn betti_from_rows(rows: &[usize], n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for i in 1.. {
        let sum: usize = rows.iter().map(|&r| binom(r.saturating_sub(1), i)).sum();
        let b = sum.saturating_sub(binom(n, i + 1));
        if b == 0 {
            break;
        }
        out.push(b);
    }
    out
}

pub fn threshold_shape(g: &Graph) -> Result<ThresholdShape, GraphError> {
    if let Some(&v) = g.isolated_vertices().first() {
        return Err(GraphError::IsolatedVertex(v));
    }
    is_threshold(g)?;
    let m = g.vertex_count();
    let mut ordering: Vec<usize> = (1..=m).collect();
    ordering.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let h = g.relabel(&ordering);
    let degrees: Vec<usize> = (1..=m).map(|v| h.degree(v)).collect();
    let lambda: Vec<usize> = (1..=m)
        .map(|v| *h.neighbors(v).last().expect("no isolated vertices"))
        .collect();
    let n_of = |rows: &[usize]| {
        (1..=m)
            .filter(|&i| rows[i - 1] > i)
            .max()
            .unwrap_or(0)
    };
    let n_by_degree = n_of(&degrees);
    let n = n_of(&lambda);
    let mu: Vec<usize> = (1..=n).collect();
    let shape = Shape::new(lambda[..n].to_vec(), mu.clone())
        .map_err(|e| GraphError::NotShapeRepresentable(e.to_string()))?;
    let report = closed_form_report(&shape, m);
    let betti_by_degree = betti_from_rows(&degrees[..n_by_degree], n_by_degree);
    Ok(ThresholdShape {
        conventions_agree: n_by_degree == n && betti_by_degree == report.betti,
        ordering,
        degrees,
        n_by_degree,
        lambda,
        n,
        mu,
        betti_by_degree,
        report,
    })
}

fn degree_two_generators(ideal: &MonomialIdeal) -> Result<Vec<(usize, usize)>, GraphError> {
    let ideal = ideal.minimize();
    if ideal.context().y_count() != 0 || !ideal.is_generated_in_degree(2) {
        return Err(GraphError::NotDegreeTwo);
    }
    Ok(ideal
        .generators()
        .iter()
        .map(|g| match g.support().as_slice() {
            [v] => (v + 1, v + 1),
            [a, b] => (a + 1, b + 1),
            _ => unreachable!("degree-two monomials have one or two variables"),
        })
        .collect())
}

fn pair(k: usize, i: usize, j: usize) -> Monomial {
    let mut e = vec![0; k];
    e[i - 1] += 1;
    e[j - 1] += 1;
    Monomial::from_exponents(e)
}

/// For every generator `x_i x_j` (`i ≤ j`): `x_i x_k ∈ I` for `k < j` and
/// `x_k x_j ∈ I` for `k < i`.
pub fn is_strongly_stable_deg2(ideal: &MonomialIdeal) -> Result<bool, GraphError> {
    let gens = degree_two_generators(ideal)?;
    let k = ideal.context().len();
    Ok(gens.iter().all(|&(i, j)| {
        (1..j).all(|l| ideal.contains(&pair(k, i, l))) && (1..i).all(|l| ideal.contains(&pair(k, l, j)))
    }))
}

/// Squarefree variant: the exchanges skip a smaller variable already dividing
/// the generator.
pub fn is_squarefree_strongly_stable_deg2(ideal: &MonomialIdeal) -> Result<bool, GraphError> {
    let gens = degree_two_generators(ideal)?;
    let k = ideal.context().len();
    if gens.iter().any(|&(i, j)| i == j) {
        return Ok(false);
    }
    Ok(gens.iter().all(|&(i, j)| {
        (1..j).filter(|&l| l != i).all(|l| ideal.contains(&pair(k, i, l)))
            && (1..i).all(|l| ideal.contains(&pair(k, l, j)))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_edge() -> Graph {
        // the missing edge is {1, 4}, so labels must move
        Graph::new(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)], &[]).unwrap()
    }

    #[test]
    fn edge_ideal_round_trip() {
        let g = k4_minus_edge();
        let i = edge_ideal(&g);
        assert_eq!(i.len(), 5);
        assert_eq!(graph_of_ideal(&i).unwrap(), g);
        let looped = Graph::new(1, &[], &[1]).unwrap();
        assert_eq!(edge_ideal(&looped).generators(), &[Monomial::from_exponents(vec![2])]);
    }

    #[test]
    fn graph_validation() {
        assert_eq!(Graph::new(2, &[(1, 3)], &[]), Err(GraphError::VertexOutOfRange(3)));
        assert_eq!(Graph::new(2, &[(1, 1)], &[]), Err(GraphError::SelfEdge(1)));
        assert_eq!(
            Graph::new(2, &[(1, 2), (2, 1)], &[]),
            Err(GraphError::DuplicateEdge(1, 2))
        );
        let g = Graph::new(3, &[(1, 2)], &[]).unwrap();
        assert_eq!(order_vertices(&g), Err(GraphError::IsolatedVertex(3)));
    }

    #[test]
    fn ordering_examples() {
        let g = k4_minus_edge();
        let order = order_vertices(&g).unwrap();
        assert_eq!(&order[..2], &[2, 3]);
        let star = Graph::new(4, &[(2, 1), (2, 3), (2, 4)], &[]).unwrap();
        assert_eq!(order_vertices(&star).unwrap()[0], 2);
        assert_eq!(order_vertices(&Graph::complete(3)).unwrap(), vec![1, 2, 3]);
    }

    #[test]
    fn derivation_examples() {
        let d = derive_shape(&k4_minus_edge()).unwrap();
        assert_eq!((d.n, d.lambda.clone(), d.mu.clone()), (2, vec![4, 4], vec![1, 2]));
        assert!(check_condition(&k4_minus_edge(), &d));

        let g = Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3)], &[]).unwrap();
        let d = derive_shape(&g).unwrap();
        assert_eq!((d.n, d.lambda.clone(), d.mu.clone()), (2, vec![4, 3], vec![1, 2]));
        assert!(check_condition(&g, &d));

        let g = Graph::new(2, &[(1, 2)], &[]).unwrap();
        let d = derive_shape(&g).unwrap();
        assert_eq!((d.n, d.lambda.clone(), d.mu.clone()), (1, vec![2], vec![1]));
    }

    #[test]
    fn path_fails_the_condition() {
        // path 1 - 3 - 2 with a loop at 1: lambda_1 = 3, mu_1 = 0, but (1, 2) is no edge
        let q = Graph::new(3, &[(1, 3), (2, 3)], &[1]).unwrap();
        let d = derive_shape_with(&q, &[1, 2, 3]).unwrap();
        assert_eq!((d.lambda.clone(), d.mu.clone()), (vec![3, 3], vec![0, 2]));
        assert_eq!(condition_report(&q, &d).missing_cells, vec![(1, 2)]);
        assert!(!check_condition(&q, &d));
        // without the loop the gap disappears: mu_1 = 2
        let q = Graph::new(3, &[(1, 3), (2, 3)], &[]).unwrap();
        let d = derive_shape_with(&q, &[1, 2, 3]).unwrap();
        assert!(check_condition(&q, &d));
        // an endpoint first cannot reach lambda_1 = m
        let p = Graph::new(3, &[(1, 2), (2, 3)], &[]).unwrap();
        assert!(matches!(
            derive_shape_with(&p, &[1, 2, 3]),
            Err(GraphError::NotShapeRepresentable(_))
        ));
    }

    #[test]
    fn analysis_examples() {
        let a = analyze(&k4_minus_edge()).unwrap();
        let r = &a.report;
        assert_eq!(r.betti, vec![5, 6, 2]);
        assert_eq!((r.height, r.depth, r.dim, r.reg), (2, 1, 2, 2));
        assert!(!r.cohen_macaulay);

        let g = Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3)], &[]).unwrap();
        let r = analyze(&g).unwrap().report;
        assert_eq!(r.betti, vec![4, 4, 1]);
        assert_eq!((r.height, r.depth), (2, 1));
        assert!(!r.cohen_macaulay);

        let full = Graph::new(3, &[(1, 2), (1, 3), (2, 3)], &[1, 2, 3]).unwrap();
        let r = analyze(&full).unwrap().report;
        assert!(r.cohen_macaulay);
        assert_eq!((r.height, r.depth, r.dim), (3, 0, 0));
    }

    #[test]
    fn threshold_recognition() {
        let cert = is_threshold(&k4_minus_edge()).unwrap();
        assert!(cert.verify(&k4_minus_edge()));
        let steps: Vec<CreationStep> = cert.creation.iter().map(|c| c.1).collect();
        use CreationStep::*;
        assert_eq!(steps, vec![Isolated, Isolated, Dominating, Dominating]);

        let c4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)], &[]).unwrap();
        assert_eq!(is_threshold(&c4), Err(GraphError::NotThreshold));
        let p4 = Graph::new(4, &[(1, 2), (2, 3), (3, 4)], &[]).unwrap();
        assert_eq!(is_threshold(&p4), Err(GraphError::NotThreshold));
        let two_k2 = Graph::new(4, &[(1, 2), (3, 4)], &[]).unwrap();
        assert_eq!(is_threshold(&two_k2), Err(GraphError::NotThreshold));
        assert!(is_threshold(&Graph::new(2, &[(1, 2)], &[]).unwrap()).is_ok());

        let g = threshold_from_creation(&[Isolated, Isolated, Dominating, Dominating]);
        assert_eq!(g.degree_sequence(), vec![3, 3, 2, 2]);
    }

    #[test]
    fn threshold_shapes() {
        let t = threshold_shape(&k4_minus_edge()).unwrap();
        assert_eq!(t.degrees, vec![3, 3, 2, 2]);
        assert_eq!(t.lambda, vec![4, 4, 2, 2]);
        assert_eq!((t.n, t.mu.clone()), (2, vec![1, 2]));
        assert_eq!(t.report.betti, vec![5, 6, 2]);
        assert_eq!(t.betti_by_degree, vec![3, 2]);
        assert!(!t.conventions_agree);

        let star = Graph::new(4, &[(1, 2), (1, 3), (1, 4)], &[]).unwrap();
        let t = threshold_shape(&star).unwrap();
        assert_eq!((t.n, t.report.betti.clone()), (1, vec![3, 3, 1]));
        assert_eq!(t.n_by_degree, 1);

        let t = threshold_shape(&Graph::complete(3)).unwrap();
        assert_eq!(t.n_by_degree, 1);
        assert_eq!((t.n, t.report.height, t.report.betti.clone()), (2, 2, vec![3, 2]));
    }

    #[test]
    fn stability_checks() {
        let k = 3;
        let all: Vec<Monomial> = (1..=k)
            .flat_map(|i| (i..=k).map(move |j| pair(k, i, j)))
            .collect();
        let sq = MonomialIdeal::new(VariableContext::x_only(k), all).unwrap();
        assert_eq!(is_strongly_stable_deg2(&sq), Ok(true));
        let one = MonomialIdeal::new(VariableContext::x_only(3), vec![pair(3, 2, 3)]).unwrap();
        assert_eq!(is_strongly_stable_deg2(&one), Ok(false));
        assert_eq!(is_squarefree_strongly_stable_deg2(&one), Ok(false));
        let t = threshold_from_creation(&[CreationStep::Isolated, CreationStep::Isolated, CreationStep::Dominating]);
        let order = threshold_shape(&t).unwrap().ordering;
        assert_eq!(is_squarefree_strongly_stable_deg2(&edge_ideal(&t.relabel(&order))), Ok(true));
        let cubic = MonomialIdeal::new(VariableContext::x_only(1), vec![Monomial::from_exponents(vec![3])]).unwrap();
        assert_eq!(is_strongly_stable_deg2(&cubic), Err(GraphError::NotDegreeTwo));
    }
}
