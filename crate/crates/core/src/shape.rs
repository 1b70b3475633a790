//! Generalized Ferrers shapes `λ - μ` and their ideals.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ShapeError;
use crate::monomial::{specialize, Monomial, MonomialIdeal, Substitution, VariableContext};

/// A validated pair `(λ, μ)`.
///
/// `λ` is a partition, `0 ≤ μ_1 ≤ … ≤ μ_n < λ_n`, and `m = λ_1 ≥ n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape {
    lambda: Vec<usize>,
    mu: Vec<usize>,
}

/// A box of the diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

/// JSON shape file: `{"lambda":[...], "mu":[...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShapeFile {
    pub lambda: Vec<usize>,
    pub mu: Vec<usize>,
}

impl Shape {
    pub fn new(lambda: Vec<usize>, mu: Vec<usize>) -> Result<Self, ShapeError> {
        let n = lambda.len();
        if n == 0 {
            return Err(ShapeError::Empty);
        }
        if mu.len() != n {
            return Err(ShapeError::LengthMismatch {
                lambda: n,
                mu: mu.len(),
            });
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) || lambda[n - 1] < 1 {
            return Err(ShapeError::NotAPartition);
        }
        if mu.windows(2).any(|w| w[0] > w[1]) || mu[n - 1] >= lambda[n - 1] {
            return Err(ShapeError::MuOutOfRange);
        }
        if lambda[0] < n {
            return Err(ShapeError::WidthLessThanHeight { m: lambda[0], n });
        }
        Ok(Shape { lambda, mu })
    }

    /// A plain Ferrers shape (`μ = 0`).
    pub fn ferrers(lambda: Vec<usize>) -> Result<Self, ShapeError> {
        let mu = vec![0; lambda.len()];
        Shape::new(lambda, mu)
    }

    pub fn from_file(file: &ShapeFile) -> Result<Self, ShapeError> {
        Shape::new(file.lambda.clone(), file.mu.clone())
    }

    pub fn to_file(&self) -> ShapeFile {
        ShapeFile {
            lambda: self.lambda.clone(),
            mu: self.mu.clone(),
        }
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    /// Number of columns, `λ_1`.
    pub fn m(&self) -> usize {
        self.lambda[0]
    }

    pub fn lambda(&self) -> &[usize] {
        &self.lambda
    }

    pub fn mu(&self) -> &[usize] {
        &self.mu
    }

    /// `λ_i` for 1-based `i`.
    pub fn lambda_at(&self, i: usize) -> usize {
        self.lambda[i - 1]
    }

    /// `μ_i` for 1-based `i`.
    pub fn mu_at(&self, i: usize) -> usize {
        self.mu[i - 1]
    }

    /// `|λ| - |μ|`, the number of boxes.
    pub fn size(&self) -> usize {
        self.lambda.iter().sum::<usize>() - self.mu.iter().sum::<usize>()
    }

    pub fn contains_cell(&self, row: usize, col: usize) -> bool {
        (1..=self.n()).contains(&row) && self.mu_at(row) < col && col <= self.lambda_at(row)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        (1..=self.n())
            .flat_map(|row| {
                (self.mu_at(row) + 1..=self.lambda_at(row)).map(move |col| Cell { row, col })
            })
            .collect()
    }

    /// Whether `μ_i ≥ i - 1` for every row.
    pub fn satisfies_specialization_hypothesis(&self) -> bool {
        self.first_mu_too_small().is_none()
    }

    fn first_mu_too_small(&self) -> Option<ShapeError> {
        self.mu
            .iter()
            .enumerate()
            .find(|(k, &mu)| mu < *k)
            .map(|(k, &mu)| ShapeError::MuTooSmall { row: k + 1, mu })
    }

    pub fn require_specialization_hypothesis(&self) -> Result<(), ShapeError> {
        match self.first_mu_too_small() {
            Some(e) => Err(e),
            None => Ok(()),
        }
    }

    pub fn context(&self) -> VariableContext {
        VariableContext::xy(self.n(), self.m())
    }

    /// `I_{λ-μ} = (x_i y_j : μ_i < j ≤ λ_i)` in `K[x1..xn, y1..ym]`.
    pub fn generators(&self) -> MonomialIdeal {
        let ctx = self.context();
        let gens = self
            .cells()
            .into_iter()
            .map(|c| {
                let mut e = vec![0; ctx.len()];
                e[ctx.x_index(c.row)] = 1;
                e[ctx.y_index(c.col)] = 1;
                Monomial::from_exponents(e)
            })
            .collect();
        MonomialIdeal::new(ctx, gens).expect("exponent vectors match the context")
    }

    /// The identity specialization of [`Shape::generators`] in `K[x1..xm]`.
    pub fn specialized_generators(&self) -> MonomialIdeal {
        specialize(&self.generators(), &Substitution::identity(self.m()))
            .expect("shape ideals live in an x/y context")
    }

    /// Predicted number of minimal generators of the specialization, `|λ| - |μ|`.
    pub fn generator_count_predicted(&self) -> Result<usize, ShapeError> {
        self.require_specialization_hypothesis()?;
        Ok(self.size())
    }

    /// ASCII picture: `.` for the removed `μ_i` boxes, `#` for diagram boxes.
    pub fn tableau(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n() {
            let row: Vec<&str> = (1..=self.lambda_at(i))
                .map(|j| if j <= self.mu_at(i) { "." } else { "#" })
                .collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

/// All valid shapes with `n ≤ max_n` rows and width `m ≤ max_m`, in a fixed order.
pub fn all_shapes(max_n: usize, max_m: usize) -> Vec<Shape> {
    fn partitions(n: usize, max: usize, min_last: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for part in (min_last..=max).rev() {
            acc.push(part);
            partitions(n, part, min_last, acc, out);
            acc.pop();
        }
    }
    fn weak_increasing(n: usize, lo: usize, hi: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == n {
            out.push(acc.clone());
            return;
        }
        for v in lo..hi {
            acc.push(v);
            weak_increasing(n, v, hi, acc, out);
            acc.pop();
        }
    }

    let mut shapes = Vec::new();
    for n in 1..=max_n {
        for m in n..=max_m {
            let mut tails = Vec::new();
            partitions(n - 1, m, 1, &mut Vec::new(), &mut tails);
            for tail in tails {
                let mut lambda = vec![m];
                lambda.extend(tail);
                let mut mus = Vec::new();
                weak_increasing(n, 0, lambda[n - 1], &mut Vec::new(), &mut mus);
                for mu in mus {
                    shapes.push(Shape::new(lambda.clone(), mu).expect("enumeration yields valid shapes"));
                }
            }
        }
    }
    shapes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_examples() {
        let s = Shape::new(vec![5, 4, 4], vec![1, 2, 3]).unwrap();
        assert_eq!((s.n(), s.m()), (3, 5));
        let s = Shape::new(vec![1], vec![0]).unwrap();
        assert_eq!((s.n(), s.m()), (1, 1));
        assert_eq!(
            Shape::new(vec![3, 3], vec![1, 0]),
            Err(ShapeError::MuOutOfRange)
        );
        assert_eq!(Shape::new(vec![2, 3], vec![0, 0]), Err(ShapeError::NotAPartition));
        assert_eq!(Shape::new(vec![2, 0], vec![0, 0]), Err(ShapeError::NotAPartition));
        assert_eq!(Shape::new(vec![3, 3], vec![0, 3]), Err(ShapeError::MuOutOfRange));
        assert_eq!(
            Shape::new(vec![2, 2, 2], vec![0, 0, 0]),
            Err(ShapeError::WidthLessThanHeight { m: 2, n: 3 })
        );
        assert_eq!(
            Shape::new(vec![2], vec![]),
            Err(ShapeError::LengthMismatch { lambda: 1, mu: 0 })
        );
        assert_eq!(Shape::new(vec![], vec![]), Err(ShapeError::Empty));
    }

    #[test]
    fn cells_and_generator_counts() {
        let s = Shape::new(vec![5, 4, 4], vec![1, 2, 3]).unwrap();
        let cells: Vec<(usize, usize)> = s.cells().iter().map(|c| (c.row, c.col)).collect();
        assert_eq!(
            cells,
            [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (3, 4)]
        );
        assert_eq!(s.generators().len(), 7);
        assert_eq!(s.generator_count_predicted(), Ok(7));

        let s = Shape::new(vec![4, 4], vec![1, 2]).unwrap();
        assert_eq!(s.generator_count_predicted(), Ok(5));

        let s = Shape::ferrers(vec![2, 2]).unwrap();
        assert_eq!(
            s.generator_count_predicted(),
            Err(ShapeError::MuTooSmall { row: 2, mu: 0 })
        );
        assert_eq!(s.specialized_generators().len(), 3);
    }

    #[test]
    fn tableau_marks_removed_boxes() {
        let s = Shape::new(vec![4, 4], vec![1, 2]).unwrap();
        assert_eq!(s.tableau(), ". # # #\n. . # #\n");
    }

    #[test]
    fn enumeration_is_complete_and_valid() {
        // brute force over all integer vectors in range
        let mut brute = 0;
        for n in 1..=3usize {
            let total = 5usize.pow(2 * n as u32);
            for code in 0..total {
                let mut c = code;
                let mut v = Vec::new();
                for _ in 0..2 * n {
                    v.push(c % 5);
                    c /= 5;
                }
                let (l, u) = v.split_at(n);
                if Shape::new(l.to_vec(), u.to_vec()).is_ok() {
                    brute += 1;
                }
            }
        }
        assert_eq!(all_shapes(3, 4).len(), brute);
    }
}
