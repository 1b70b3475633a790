//! Monomials, monomial ideals, and the specialization substitution.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::IdealError;

/// Ordered variable list `x1..xn, y1..ym` (with `m = 0` for an x-only ring).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VariableContext {
    x: usize,
    y: usize,
}

impl VariableContext {
    /// The ring `K[x1..xn, y1..ym]`.
    pub fn xy(n: usize, m: usize) -> Self {
        VariableContext { x: n, y: m }
    }

    /// The ring `K[x1..xk]`.
    pub fn x_only(k: usize) -> Self {
        VariableContext { x: k, y: 0 }
    }

    pub fn len(&self) -> usize {
        self.x + self.y
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn x_count(&self) -> usize {
        self.x
    }

    pub fn y_count(&self) -> usize {
        self.y
    }

    /// Position of `x_i` (1-based `i`) in exponent vectors.
    pub fn x_index(&self, i: usize) -> usize {
        debug_assert!((1..=self.x).contains(&i));
        i - 1
    }

    /// Position of `y_j` (1-based `j`) in exponent vectors.
    pub fn y_index(&self, j: usize) -> usize {
        debug_assert!((1..=self.y).contains(&j));
        self.x + j - 1
    }

    pub fn name(&self, pos: usize) -> String {
        if pos < self.x {
            format!("x{}", pos + 1)
        } else {
            format!("y{}", pos - self.x + 1)
        }
    }

    pub fn names(&self) -> Vec<String> {
        (0..self.len()).map(|p| self.name(p)).collect()
    }

    /// Inverse of [`VariableContext::names`].
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, IdealError> {
        let mut x = 0;
        let mut y = 0;
        for name in names {
            let name = name.as_ref();
            let bad = || IdealError::BadVariableName(name.to_string());
            let head = name.chars().next().ok_or_else(bad)?;
            let idx: usize = name[head.len_utf8()..].parse().map_err(|_| bad())?;
            match head {
                'x' if y == 0 && idx == x + 1 => x += 1,
                'y' if idx == y + 1 => y += 1,
                _ => return Err(bad()),
            }
        }
        Ok(VariableContext { x, y })
    }
}

/// A monomial stored as a dense exponent vector.
///
/// The derived order is lexicographic on exponents and fixes the canonical
/// order of generator lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

/// Multidegrees and monomials are the same data; `a ≼ c` is divisibility.
pub type MultiDegree = Monomial;

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn variable(nvars: usize, pos: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[pos] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// `self ≼ other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn quotient(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    /// Positions with non-zero exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|&k| self.exps[k] > 0).collect()
    }

    pub fn display<'a>(&'a self, ctx: &'a VariableContext) -> MonomialDisplay<'a> {
        MonomialDisplay { mono: self, ctx }
    }
}

pub struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ctx: &'a VariableContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (pos, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ctx.name(pos))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// A monomial ideal given by a sorted, duplicate-free generator list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    context: VariableContext,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Sorts and deduplicates `generators`; does not minimize.
    pub fn new(context: VariableContext, mut generators: Vec<Monomial>) -> Result<Self, IdealError> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != context.len()) {
            return Err(IdealError::ArityMismatch {
                expected: context.len(),
                got: g.nvars(),
            });
        }
        generators.sort();
        generators.dedup();
        Ok(MonomialIdeal {
            context,
            generators,
        })
    }

    pub fn zero(context: VariableContext) -> Self {
        MonomialIdeal {
            context,
            generators: Vec::new(),
        }
    }

    pub fn context(&self) -> &VariableContext {
        &self.context
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Drops every generator divisible by another one.
    pub fn minimize(&self) -> MonomialIdeal {
        let mut by_degree: Vec<&Monomial> = self.generators.iter().collect();
        by_degree.sort_by_key(|g| g.degree());
        let mut kept: Vec<Monomial> = Vec::new();
        for g in by_degree {
            if !kept.iter().any(|k| k.divides(g)) {
                kept.push(g.clone());
            }
        }
        kept.sort();
        MonomialIdeal {
            context: self.context,
            generators: kept,
        }
    }

    pub fn is_minimal(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, g)| {
            self.generators
                .iter()
                .enumerate()
                .all(|(j, h)| i == j || !h.divides(g))
        })
    }

    /// Membership of a monomial: divisibility by some generator.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The join of all generators.
    pub fn top_lcm(&self) -> Monomial {
        self.generators
            .iter()
            .fold(Monomial::one(self.context.len()), |acc, g| acc.lcm(g))
    }

    /// Whether every generator has total degree `d`.
    pub fn is_generated_in_degree(&self, d: u32) -> bool {
        self.generators.iter().all(|g| g.degree() == d)
    }

    pub fn to_file(&self) -> IdealFile {
        IdealFile {
            variables: self.context.names(),
            generators: self
                .generators
                .iter()
                .map(|g| g.exponents().to_vec())
                .collect(),
        }
    }

    pub fn from_file(file: &IdealFile) -> Result<Self, IdealError> {
        let ctx = VariableContext::from_names(&file.variables)?;
        let gens = file
            .generators
            .iter()
            .map(|e| Monomial::from_exponents(e.clone()))
            .collect();
        MonomialIdeal::new(ctx, gens)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.context))?;
        }
        write!(f, ")")
    }
}

/// JSON ideal file: `{"variables":["x1",...],"generators":[[e1,...,eN],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealFile {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<u32>>,
}

/// The map `y_j ↦ x_{σ(j)}` (with `x_i ↦ x_i`), stored 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Substitution {
    targets: Vec<usize>,
}

impl Substitution {
    /// `y_j ↦ x_j` for `j = 1..m`.
    pub fn identity(m: usize) -> Self {
        Substitution {
            targets: (1..=m).collect(),
        }
    }

    /// `targets[j - 1]` is the index `σ(j)` of the image of `y_j`.
    pub fn new(targets: Vec<usize>) -> Result<Self, IdealError> {
        if let Some(&t) = targets.iter().find(|&&t| t == 0) {
            return Err(IdealError::SubstitutionTarget(t));
        }
        Ok(Substitution { targets })
    }

    pub fn target(&self, j: usize) -> usize {
        self.targets[j - 1]
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.targets.iter().enumerate().all(|(k, &t)| t == k + 1)
    }

    /// The x-only ring the substitution lands in: `k = max(n, m, max σ)`.
    pub fn target_context(&self, source: &VariableContext) -> VariableContext {
        let k = self
            .targets
            .iter()
            .copied()
            .chain([source.x_count(), source.y_count()])
            .max()
            .unwrap_or(0);
        VariableContext::x_only(k)
    }

    /// Image of a monomial from `source` in [`Substitution::target_context`].
    pub fn apply(&self, source: &VariableContext, m: &Monomial) -> Monomial {
        let target = self.target_context(source);
        let mut exps = vec![0u32; target.len()];
        for i in 1..=source.x_count() {
            exps[i - 1] += m.exponents()[source.x_index(i)];
        }
        for j in 1..=source.y_count() {
            exps[self.target(j) - 1] += m.exponents()[source.y_index(j)];
        }
        Monomial::from_exponents(exps)
    }

    fn check(&self, source: &VariableContext) -> Result<(), IdealError> {
        if source.y_count() == 0 {
            return Err(IdealError::NotBipartiteContext);
        }
        if self.len() != source.y_count() {
            return Err(IdealError::SubstitutionArity {
                expected: source.y_count(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// The specialization `σ(I)`, minimized.
pub fn specialize(ideal: &MonomialIdeal, sigma: &Substitution) -> Result<MonomialIdeal, IdealError> {
    let ctx = ideal.context();
    sigma.check(ctx)?;
    let target = sigma.target_context(ctx);
    let gens = ideal
        .generators()
        .iter()
        .map(|g| sigma.apply(ctx, g))
        .collect();
    Ok(MonomialIdeal::new(target, gens)?.minimize())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy_mono(ctx: &VariableContext, xs: &[usize], ys: &[usize]) -> Monomial {
        let mut e = vec![0; ctx.len()];
        for &i in xs {
            e[ctx.x_index(i)] += 1;
        }
        for &j in ys {
            e[ctx.y_index(j)] += 1;
        }
        Monomial::from_exponents(e)
    }

    fn x_mono(k: usize, xs: &[usize]) -> Monomial {
        let mut e = vec![0; k];
        for &i in xs {
            e[i - 1] += 1;
        }
        Monomial::from_exponents(e)
    }

    #[test]
    fn context_names_round_trip() {
        let ctx = VariableContext::xy(2, 3);
        assert_eq!(ctx.names(), ["x1", "x2", "y1", "y2", "y3"]);
        assert_eq!(VariableContext::from_names(&ctx.names()).unwrap(), ctx);
        assert!(VariableContext::from_names(&["x2"]).is_err());
        assert!(VariableContext::from_names(&["y1", "x1"]).is_err());
        assert!(VariableContext::from_names(&["z1"]).is_err());
    }

    #[test]
    fn minimize_drops_multiples() {
        let ideal = MonomialIdeal::new(
            VariableContext::x_only(2),
            vec![x_mono(2, &[1, 1]), x_mono(2, &[1, 1, 2])],
        )
        .unwrap();
        assert_eq!(ideal.minimize().generators(), &[x_mono(2, &[1, 1])]);

        let ideal = MonomialIdeal::new(
            VariableContext::x_only(3),
            vec![x_mono(3, &[1, 2]), x_mono(3, &[1, 3])],
        )
        .unwrap();
        assert_eq!(ideal.minimize(), ideal);
        assert!(ideal.is_minimal());
    }

    #[test]
    fn duplicate_images_collapse() {
        let ideal = MonomialIdeal::new(
            VariableContext::x_only(2),
            vec![
                x_mono(2, &[1, 1]),
                x_mono(2, &[1, 2]),
                x_mono(2, &[2, 1]),
                x_mono(2, &[2, 2]),
            ],
        )
        .unwrap();
        assert_eq!(ideal.len(), 3);
        assert_eq!(ideal.minimize().len(), 3);
    }

    #[test]
    fn bad_specialization_example_heights() {
        // I = (x1y1, x1y3, x2y1)
        let ctx = VariableContext::xy(2, 3);
        let ideal = MonomialIdeal::new(
            ctx,
            vec![
                xy_mono(&ctx, &[1], &[1]),
                xy_mono(&ctx, &[1], &[3]),
                xy_mono(&ctx, &[2], &[1]),
            ],
        )
        .unwrap();
        let id = specialize(&ideal, &Substitution::identity(3)).unwrap();
        let expect = MonomialIdeal::new(
            VariableContext::x_only(3),
            vec![x_mono(3, &[1, 1]), x_mono(3, &[1, 3]), x_mono(3, &[1, 2])],
        )
        .unwrap();
        assert_eq!(id, expect);

        let rev = Substitution::new(vec![3, 2, 1]).unwrap();
        let other = specialize(&ideal, &rev).unwrap();
        let expect = MonomialIdeal::new(
            VariableContext::x_only(3),
            vec![x_mono(3, &[1, 3]), x_mono(3, &[1, 1]), x_mono(3, &[2, 3])],
        )
        .unwrap();
        assert_eq!(other, expect);
    }

    #[test]
    fn substitution_errors() {
        let ctx = VariableContext::xy(1, 2);
        let ideal = MonomialIdeal::new(ctx, vec![xy_mono(&ctx, &[1], &[1])]).unwrap();
        assert_eq!(
            specialize(&ideal, &Substitution::identity(3)),
            Err(IdealError::SubstitutionArity {
                expected: 2,
                got: 3
            })
        );
        let xonly = MonomialIdeal::new(VariableContext::x_only(2), vec![x_mono(2, &[1])]).unwrap();
        assert_eq!(
            specialize(&xonly, &Substitution::identity(0)),
            Err(IdealError::NotBipartiteContext)
        );
        assert!(Substitution::new(vec![0]).is_err());
    }

    #[test]
    fn display_uses_names() {
        let ctx = VariableContext::xy(1, 2);
        let m = xy_mono(&ctx, &[1, 1], &[2]);
        assert_eq!(m.display(&ctx).to_string(), "x1^2*y2");
        assert_eq!(Monomial::one(3).display(&ctx).to_string(), "1");
    }
}
