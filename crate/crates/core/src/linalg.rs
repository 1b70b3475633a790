//! Exact linear algebra over prime fields and the rationals.
//!
//! Everything homological in this crate funnels into [`ChainData`]: a finite
//! based chain complex with integer incidence coefficients. Two independent
//! routines compute its homology over a [`Field`]:
//!
//! - [`ChainData::homology`] reduces the complex pair by pair (elementary
//!   collapses first, then pivoted elimination) until no differential is left.
//! - [`ChainData::homology_by_rank`] builds every boundary matrix and applies
//!   rank-nullity, `dim H_d = n_d - rank ∂_d - rank ∂_{d+1}`.
//!
//! The first scales to the large Taylor strands, the second is the plain
//! textbook route and is kept as a cross-check.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::FieldError;

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    /// The prime field GF(p).
    Prime(u32),
    /// The rational numbers.
    Rationals,
}

impl Field {
    pub const GF2: Field = Field::Prime(2);
    pub const GF32003: Field = Field::Prime(32003);

    /// Default field list used by the verification routines.
    pub fn defaults() -> Vec<Field> {
        vec![Field::GF2, Field::GF32003]
    }

    pub fn prime(p: u32) -> Result<Field, FieldError> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    /// Parses a comma separated list such as `"2,32003,Q"`.
    pub fn parse_list(s: &str) -> Result<Vec<Field>, FieldError> {
        let fields = s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Field>, _>>()?;
        if fields.is_empty() {
            return Err(FieldError::Empty);
        }
        Ok(fields)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if matches!(t, "Q" | "q" | "QQ") {
            return Ok(Field::Rationals);
        }
        let inner = t
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        let p: u32 = inner
            .parse()
            .map_err(|_| FieldError::Unparseable(s.to_string()))?;
        Field::prime(p)
    }
}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = p as u64;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic of a coefficient field.
trait Arith {
    type E: Clone + fmt::Debug;
    fn from_i64(&self, v: i64) -> Self::E;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn sub(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn inv(&self, a: &Self::E) -> Self::E;
    /// Smaller is a cheaper pivot.
    fn weight(&self, a: &Self::E) -> u32;
}

struct Fp {
    p: u64,
}

impl Arith for Fp {
    type E = u32;

    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p - *b as u64) % self.p) as u32
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        // Fermat: a^(p-2)
        let mut base = *a as u64 % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc as u32
    }
    fn weight(&self, a: &u32) -> u32 {
        u32::from(*a != 1 && *a as u64 != self.p - 1)
    }
}

struct Qq;

impl Arith for Qq {
    type E = BigRational;

    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn weight(&self, a: &BigRational) -> u32 {
        u32::from(!(a.is_integer() && a.abs().is_one()))
    }
}

/// Homology ranks of a chain complex, indexed by dimension starting at `min_dim`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homology {
    pub min_dim: i32,
    pub ranks: Vec<usize>,
}

impl Homology {
    pub fn rank(&self, dim: i32) -> usize {
        if dim < self.min_dim {
            return 0;
        }
        self.ranks
            .get((dim - self.min_dim) as usize)
            .copied()
            .unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }

    /// Non-zero `(dimension, rank)` pairs in increasing dimension.
    pub fn nonzero(&self) -> Vec<(i32, usize)> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(k, &r)| (self.min_dim + k as i32, r))
            .collect()
    }
}

/// A finite based chain complex with integer coefficients.
///
/// Cell `c` has dimension `dims[c]`; `boundary[c]` lists `(face, coefficient)`
/// with every face of dimension `dims[c] - 1`. The caller guarantees `∂∂ = 0`.
#[derive(Clone, Debug, Default)]
pub struct ChainData {
    dims: Vec<i32>,
    boundary: Vec<Vec<(u32, i64)>>,
}

impl ChainData {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(cells: usize) -> Self {
        ChainData {
            dims: Vec::with_capacity(cells),
            boundary: Vec::with_capacity(cells),
        }
    }

    /// Adds a cell and returns its index. Faces must already exist.
    pub fn push(&mut self, dim: i32, boundary: Vec<(u32, i64)>) -> u32 {
        debug_assert!(boundary
            .iter()
            .all(|&(f, _)| self.dims[f as usize] == dim - 1));
        self.dims.push(dim);
        self.boundary.push(boundary);
        (self.dims.len() - 1) as u32
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    fn dim_range(&self) -> Option<(i32, i32)> {
        let lo = *self.dims.iter().min()?;
        let hi = *self.dims.iter().max()?;
        Some((lo, hi))
    }

    /// Homology over `field` by successive reduction of the complex.
    pub fn homology(&self, field: Field) -> Homology {
        match field {
            Field::Prime(p) => self.reduce_with(&Fp { p: p as u64 }),
            Field::Rationals => self.reduce_with(&Qq),
        }
    }

    /// Homology over `field` by rank-nullity on each boundary matrix.
    pub fn homology_by_rank(&self, field: Field) -> Homology {
        match field {
            Field::Prime(p) => self.rank_with(&Fp { p: p as u64 }),
            Field::Rationals => self.rank_with(&Qq),
        }
    }

    fn rank_with<A: Arith>(&self, a: &A) -> Homology {
        let Some((lo, hi)) = self.dim_range() else {
            return Homology::default();
        };
        let span = (hi - lo + 1) as usize;
        let mut counts = vec![0usize; span];
        let mut local = vec![0u32; self.len()];
        for (c, &d) in self.dims.iter().enumerate() {
            let k = (d - lo) as usize;
            local[c] = counts[k] as u32;
            counts[k] += 1;
        }
        // ranks[k] = rank of ∂ leaving dimension lo + k
        let mut ranks = vec![0usize; span + 1];
        for (k, rank) in ranks.iter_mut().enumerate().take(span).skip(1) {
            let d = lo + k as i32;
            let rows: Vec<Vec<(u32, A::E)>> = self
                .dims
                .iter()
                .enumerate()
                .filter(|(_, &cd)| cd == d)
                .map(|(c, _)| {
                    let mut row: Vec<(u32, A::E)> = self.boundary[c]
                        .iter()
                        .map(|&(f, v)| (local[f as usize], a.from_i64(v)))
                        .filter(|(_, v)| !a.is_zero(v))
                        .collect();
                    row.sort_by_key(|e| e.0);
                    row
                })
                .collect();
            *rank = sparse_rank(a, rows);
        }
        let out = (0..span)
            .map(|k| counts[k] - ranks[k] - ranks[k + 1])
            .collect();
        Homology {
            min_dim: lo,
            ranks: out,
        }
    }

    fn reduce_with<A: Arith>(&self, a: &A) -> Homology {
        let Some((lo, hi)) = self.dim_range() else {
            return Homology::default();
        };
        let mut r = Reducer::new(a, self);
        r.run();
        let mut ranks = vec![0usize; (hi - lo + 1) as usize];
        for c in 0..self.len() {
            if r.alive[c] {
                ranks[(self.dims[c] - lo) as usize] += 1;
            }
        }
        Homology { min_dim: lo, ranks }
    }
}

/// Rank of a sparse matrix given as rows of sorted `(column, value)` pairs.
fn sparse_rank<A: Arith>(a: &A, mut rows: Vec<Vec<(u32, A::E)>>) -> usize {
    use std::collections::HashMap;
    rows.sort_by_key(Vec::len);
    // pivot column -> normalized row (leading entry 1)
    let mut pivots: HashMap<u32, Vec<(u32, A::E)>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some((lead, coef)) = row.first().cloned() else {
                break;
            };
            match pivots.get(&lead) {
                Some(prow) => row = axpy(a, &row, &coef, prow),
                None => {
                    let inv = a.inv(&coef);
                    for e in row.iter_mut() {
                        e.1 = a.mul(&e.1, &inv);
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// `x - s * y` for sorted sparse vectors, dropping zeros.
fn axpy<A: Arith>(a: &A, x: &[(u32, A::E)], s: &A::E, y: &[(u32, A::E)]) -> Vec<(u32, A::E)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i].clone());
            i += 1;
        } else if take_y {
            let v = a.sub(&a.from_i64(0), &a.mul(s, &y[j].1));
            if !a.is_zero(&v) {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = a.sub(&x[i].1, &a.mul(s, &y[j].1));
            if !a.is_zero(&v) {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Pairwise reduction of a based chain complex over a field.
///
/// Removing a pair `(σ, τ)` with `⟨∂σ, τ⟩ = c ≠ 0` leaves a homotopy
/// equivalent complex in which every other coface `ρ` of `τ` gets
/// `∂ρ ← ∂ρ - (⟨∂ρ, τ⟩ / c) ∂σ`. When `τ` is a free face no update is needed.
struct Reducer<'a, A: Arith> {
    a: &'a A,
    alive: Vec<bool>,
    bnd: Vec<Vec<(u32, A::E)>>,
    cob: Vec<Vec<u32>>,
    queue: Vec<u32>,
}

impl<'a, A: Arith> Reducer<'a, A> {
    fn new(a: &'a A, c: &ChainData) -> Self {
        let n = c.len();
        let mut bnd = Vec::with_capacity(n);
        let mut cob = vec![Vec::new(); n];
        for (cell, b) in c.boundary.iter().enumerate() {
            let mut row: Vec<(u32, A::E)> = b
                .iter()
                .map(|&(f, v)| (f, a.from_i64(v)))
                .filter(|(_, v)| !a.is_zero(v))
                .collect();
            row.sort_by_key(|e| e.0);
            for (f, _) in &row {
                cob[*f as usize].push(cell as u32);
            }
            bnd.push(row);
        }
        let queue = (0..n as u32).filter(|&c| cob[c as usize].len() == 1).collect();
        Reducer {
            a,
            alive: vec![true; n],
            bnd,
            cob,
            queue,
        }
    }

    fn run(&mut self) {
        loop {
            while let Some(tau) = self.queue.pop() {
                let t = tau as usize;
                if self.alive[t] && self.cob[t].len() == 1 {
                    let sigma = self.cob[t][0];
                    self.eliminate(sigma, tau);
                }
            }
            match self.pick_pivot() {
                Some((sigma, tau)) => self.eliminate(sigma, tau),
                None => break,
            }
        }
    }

    /// Cheapest remaining pair by a Markowitz-style cost.
    fn pick_pivot(&self) -> Option<(u32, u32)> {
        let mut best: Option<(u64, u32, u32)> = None;
        for (s, row) in self.bnd.iter().enumerate() {
            if !self.alive[s] || row.is_empty() {
                continue;
            }
            for (t, v) in row {
                let cost = (self.cob[*t as usize].len() as u64 - 1) * (row.len() as u64 - 1) * 4
                    + self.a.weight(v) as u64;
                if best.is_none_or(|b| cost < b.0) {
                    best = Some((cost, s as u32, *t));
                    if cost == 0 {
                        return Some((s as u32, *t));
                    }
                }
            }
        }
        best.map(|(_, s, t)| (s, t))
    }

    fn eliminate(&mut self, sigma: u32, tau: u32) {
        let (s, t) = (sigma as usize, tau as usize);
        let sig_row = std::mem::take(&mut self.bnd[s]);
        let pos = sig_row
            .binary_search_by_key(&tau, |e| e.0)
            .expect("pivot entry present");
        let c_inv = self.a.inv(&sig_row[pos].1);

        let others: Vec<u32> = self.cob[t].iter().copied().filter(|&r| r != sigma).collect();
        for rho in others {
            let r = rho as usize;
            let old = std::mem::take(&mut self.bnd[r]);
            let k = old
                .binary_search_by_key(&tau, |e| e.0)
                .expect("coface lists are exact");
            let factor = self.a.mul(&old[k].1, &c_inv);
            let new = axpy(self.a, &old, &factor, &sig_row);
            // refresh coface lists for faces whose membership changed
            let (mut i, mut j) = (0, 0);
            while i < old.len() || j < new.len() {
                if j == new.len() || (i < old.len() && old[i].0 < new[j].0) {
                    self.detach(old[i].0, rho);
                    i += 1;
                } else if i == old.len() || new[j].0 < old[i].0 {
                    self.cob[new[j].0 as usize].push(rho);
                    j += 1;
                } else {
                    i += 1;
                    j += 1;
                }
            }
            self.bnd[r] = new;
        }

        for (f, _) in &sig_row {
            self.detach(*f, sigma);
        }
        for k in std::mem::take(&mut self.cob[s]) {
            let row = &mut self.bnd[k as usize];
            if let Ok(p) = row.binary_search_by_key(&sigma, |e| e.0) {
                row.remove(p);
            }
        }
        for (f, _) in std::mem::take(&mut self.bnd[t]) {
            self.detach(f, tau);
        }
        self.cob[t].clear();
        self.alive[s] = false;
        self.alive[t] = false;
    }

    fn detach(&mut self, face: u32, cell: u32) {
        let list = &mut self.cob[face as usize];
        if let Some(p) = list.iter().position(|&x| x == cell) {
            list.swap_remove(p);
            if list.len() == 1 {
                self.queue.push(face);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Reduced simplicial chain complex of the downward closure of `facets`.
    fn simplicial(facets: &[u32]) -> ChainData {
        let mut faces: Vec<u32> = Vec::new();
        for &f in facets {
            let mut sub = f;
            loop {
                faces.push(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & f;
            }
        }
        faces.sort_by_key(|s| (s.count_ones(), *s));
        faces.dedup();
        let index: std::collections::HashMap<u32, u32> =
            faces.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect();
        let mut c = ChainData::new();
        for &s in &faces {
            let mut b = Vec::new();
            let mut k = 0;
            for v in 0..32 {
                if s >> v & 1 == 1 {
                    b.push((index[&(s & !(1 << v))], if k % 2 == 0 { 1 } else { -1 }));
                    k += 1;
                }
            }
            c.push(s.count_ones() as i32 - 1, b);
        }
        c
    }

    #[test]
    fn parses_fields() {
        assert_eq!("2".parse::<Field>().unwrap(), Field::GF2);
        assert_eq!("GF(32003)".parse::<Field>().unwrap(), Field::GF32003);
        assert_eq!("Q".parse::<Field>().unwrap(), Field::Rationals);
        assert!(matches!("4".parse::<Field>(), Err(FieldError::NotPrime(4))));
        assert!("x".parse::<Field>().is_err());
        assert_eq!(
            Field::parse_list("2, Q").unwrap(),
            vec![Field::GF2, Field::Rationals]
        );
    }

    #[test]
    fn circle_and_sphere() {
        // boundary of a triangle
        let circle = simplicial(&[0b011, 0b110, 0b101]);
        for f in [Field::GF2, Field::GF32003, Field::Rationals] {
            let h = circle.homology(f);
            assert_eq!(h.nonzero(), vec![(1, 1)]);
            assert_eq!(h, circle.homology_by_rank(f));
        }
        // boundary of a tetrahedron
        let sphere = simplicial(&[0b0111, 0b1011, 0b1101, 0b1110]);
        assert_eq!(sphere.homology(Field::GF2).nonzero(), vec![(2, 1)]);
    }

    #[test]
    fn empty_face_alone_has_minus_one_homology() {
        let c = simplicial(&[0]);
        assert_eq!(c.homology(Field::GF2).nonzero(), vec![(-1, 1)]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // 6-vertex RP^2
        let tris: [[u32; 3]; 10] = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let facets: Vec<u32> = tris
            .iter()
            .map(|t| t.iter().fold(0, |m, &v| m | 1 << v))
            .collect();
        let c = simplicial(&facets);
        assert_eq!(c.homology(Field::GF2).nonzero(), vec![(1, 1), (2, 1)]);
        assert!(c.homology(Field::GF32003).is_zero());
        assert!(c.homology(Field::Rationals).is_zero());
        assert_eq!(c.homology_by_rank(Field::GF2).nonzero(), vec![(1, 1), (2, 1)]);
        assert!(c.homology_by_rank(Field::Rationals).is_zero());
    }

    proptest! {
        #[test]
        fn reduction_agrees_with_rank_nullity(
            facets in proptest::collection::vec(1u32..(1 << 7), 1..8),
            p in prop_oneof![Just(2u32), Just(3), Just(32003)],
        ) {
            let c = simplicial(&facets);
            let f = Field::Prime(p);
            prop_assert_eq!(c.homology(f), c.homology_by_rank(f));
        }
    }
}
