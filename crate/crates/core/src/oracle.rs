//! Brute-force Betti numbers and invariants of arbitrary monomial ideals.
//!
//! Two independent routes: upper Koszul simplicial complexes over the lcm
//! lattice, and the Taylor complex tensored down to the residue field.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::complex::{join_closure, Face, LabeledCellComplex, Origin};
use crate::error::OracleError;
use crate::linalg::{ChainData, Field, Homology};
use crate::monomial::{Monomial, MonomialIdeal, MultiDegree};
use crate::resolution::BettiTable;

/// A simplicial complex on `ground` (variable positions), faces as bitmasks
/// over positions in `ground`.
///
/// `{∅}` (only the empty face) and the void complex (no faces) differ: the
/// first has `H̃_{-1} = K`, the second has no homology at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: Vec<usize>,
    faces: Vec<u32>,
}

impl SimplicialComplex {
    /// Materialized complex; `faces` must be closed under subsets.
    pub fn new(ground: Vec<usize>, mut faces: Vec<u32>) -> Self {
        assert!(ground.len() <= 31);
        faces.sort_by_key(|f| (f.count_ones(), *f));
        faces.dedup();
        SimplicialComplex { ground, faces }
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces as sorted lists of ground elements.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .map(|&f| {
                (0..self.ground.len())
                    .filter(|b| f >> b & 1 == 1)
                    .map(|b| self.ground[b])
                    .collect()
            })
            .collect()
    }

    pub fn reduced_homology(&self, field: Field) -> Homology {
        if self.faces.is_empty() {
            return Homology::default();
        }
        let mut data = ChainData::with_capacity(self.faces.len());
        let mut id: HashMap<u32, u32> = HashMap::with_capacity(self.faces.len());
        for &f in &self.faces {
            let mut boundary = Vec::with_capacity(f.count_ones() as usize);
            let mut k = 0;
            for b in 0..32 {
                if f >> b & 1 == 1 {
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    boundary.push((id[&(f & !(1 << b))], sign));
                    k += 1;
                }
            }
            let cell = data.push(f.count_ones() as i32 - 1, boundary);
            id.insert(f, cell);
        }
        data.homology(field)
    }
}

/// `K^a(I)`: squarefree `b ≤ a` supported on `supp(a)` with `x^{a-b} ∈ I`.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &MultiDegree) -> SimplicialComplex {
    let support = a.support();
    let k = support.len();
    let mut faces = Vec::new();
    let mut exps = a.exponents().to_vec();
    for b in 0u32..(1 << k) {
        for (bit, &pos) in support.iter().enumerate() {
            exps[pos] = a.exponents()[pos] - (b >> bit & 1);
        }
        if ideal.contains(&Monomial::from_exponents(exps.clone())) {
            faces.push(b);
        }
    }
    SimplicialComplex::new(support, faces)
}

/// Betti table of `S/I` from `β_{i+1,a}(S/I) = dim H̃_{i-1}(K^a(I))`.
pub fn betti_oracle(ideal: &MonomialIdeal, field: Field) -> BettiTable {
    let ideal = ideal.minimize();
    let nvars = ideal.context().len();
    let mut table = BettiTable::unit(nvars);
    if ideal.is_zero() {
        return table;
    }
    let lattice = join_closure(nvars, ideal.generators());
    let found: Vec<Vec<(usize, MultiDegree, usize)>> = lattice
        .par_iter()
        .filter(|a| !a.is_one())
        .map(|a| {
            upper_koszul_complex(&ideal, a)
                .reduced_homology(field)
                .nonzero()
                .into_iter()
                .map(|(d, r)| ((d + 2) as usize, a.clone(), r))
                .collect()
        })
        .collect();
    for (i, a, r) in found.into_iter().flatten() {
        table.add(i, a, r);
    }
    table
}

/// Betti table of `S/I` from the Taylor complex.
///
/// In degree `a`, `Taylor ⊗ K` has a basis of generator subsets with lcm `a`
/// and a `±1` entry exactly where dropping one generator keeps the lcm.
pub fn taylor_betti(ideal: &MonomialIdeal, field: Field) -> BettiTable {
    let ideal = ideal.minimize();
    let gens = ideal.generators();
    let nvars = ideal.context().len();
    let mut table = BettiTable::unit(nvars);
    let n = gens.len();
    assert!(n < 32, "Taylor complex over {n} generators is out of reach");
    if n == 0 {
        return table;
    }
    let total = 1usize << n;
    let mut lcms: Vec<Monomial> = Vec::with_capacity(total);
    lcms.push(Monomial::one(nvars));
    for s in 1..total {
        let low = s.trailing_zeros() as usize;
        lcms.push(lcms[s & (s - 1)].lcm(&gens[low]));
    }
    let mut strands: HashMap<&Monomial, Vec<u32>> = HashMap::new();
    for s in 1..total {
        strands.entry(&lcms[s]).or_default().push(s as u32);
    }
    let mut strands: Vec<(&Monomial, Vec<u32>)> = strands.into_iter().collect();
    strands.sort();
    let found: Vec<Vec<(usize, MultiDegree, usize)>> = strands
        .par_iter()
        .map(|(a, subsets)| {
            let mut subsets = subsets.clone();
            subsets.sort_by_key(|s| (s.count_ones(), *s));
            let mut id: HashMap<u32, u32> = HashMap::with_capacity(subsets.len());
            let mut data = ChainData::with_capacity(subsets.len());
            for &s in &subsets {
                let mut boundary = Vec::new();
                let mut k = 0;
                for b in 0..n {
                    if s >> b & 1 == 1 {
                        if let Some(&f) = id.get(&(s & !(1 << b))) {
                            boundary.push((f, if k % 2 == 0 { 1 } else { -1 }));
                        }
                        k += 1;
                    }
                }
                let cell = data.push(s.count_ones() as i32, boundary);
                id.insert(s, cell);
            }
            data.homology(field)
                .nonzero()
                .into_iter()
                .map(|(i, r)| (i as usize, (*a).clone(), r))
                .collect()
        })
        .collect();
    for (i, a, r) in found.into_iter().flatten() {
        table.add(i, a, r);
    }
    table
}

/// The Taylor complex as a labeled complex: the simplex on the generators,
/// stored as `X_{N,1}` with vertex `(k, 1)` labeled by the `k`-th generator.
pub fn taylor_complex(ideal: &MonomialIdeal) -> LabeledCellComplex {
    let gens = ideal.generators();
    let n = gens.len();
    assert!((1..32).contains(&n));
    let faces = (1u32..(1u32 << n)).map(|s| Face::from_masks(s, 1));
    LabeledCellComplex::from_faces(*ideal.context(), Origin::Custom, faces, |i, _| {
        gens[i - 1].clone()
    })
    .expect("a full simplex is closed")
}

/// Homological invariants of `S/I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    /// `β_1, …, β_pdim` of `S/I`.
    pub betti: Vec<usize>,
    pub pdim: usize,
    pub depth: usize,
    pub height: usize,
    pub dim: usize,
    pub reg: i64,
    pub cohen_macaulay: bool,
}

/// Minimum number of variables meeting the support of every generator.
pub fn height(ideal: &MonomialIdeal) -> usize {
    let nvars = ideal.context().len();
    assert!(nvars < 32);
    let supports: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| g.support().iter().fold(0u32, |m, &p| m | 1 << p))
        .collect();
    (0u32..(1 << nvars))
        .filter(|cover| supports.iter().all(|s| s & cover != 0))
        .map(u32::count_ones)
        .min()
        .unwrap_or(0) as usize
}

/// Invariants from a Betti table of `S/I` plus the exhaustive height search.
pub fn invariants_from_table(ideal: &MonomialIdeal, table: &BettiTable) -> Result<InvariantReport, OracleError> {
    if ideal.minimize().is_zero() {
        return Err(OracleError::ZeroIdeal);
    }
    let nvars = ideal.context().len();
    let pdim = table.pdim();
    let depth = nvars - pdim;
    let height = height(ideal);
    let dim = nvars - height;
    Ok(InvariantReport {
        betti: table.betti_numbers(),
        pdim,
        depth,
        height,
        dim,
        reg: table.regularity().expect("non-zero ideal has generators"),
        cohen_macaulay: depth == dim,
    })
}

pub fn invariants_oracle(ideal: &MonomialIdeal, field: Field) -> Result<InvariantReport, OracleError> {
    if ideal.minimize().is_zero() {
        return Err(OracleError::ZeroIdeal);
    }
    invariants_from_table(ideal, &betti_oracle(ideal, field))
}
