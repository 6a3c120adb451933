//! Reed-Muller-type flags over the affine space GF(2)^m: the DegLex
//! evaluation matrix, isometry-dual subset enumeration, and the row-span
//! characterization of characteristic vectors.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::curve::{EvalRow, EvaluationMatrix, Monomial};
use crate::flag::{isometry_dual, CompleteFlag};
use crate::gf::builtin;
use crate::puncture::combinations;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error)]
pub enum RmError {
    #[error("dimension m = {0} out of range (1..=6)")]
    DimensionTooLarge(u32),
    #[error("exhaustive search over {subsets} subsets exceeds the budget {budget}")]
    BudgetExceeded { subsets: u64, budget: u64 },
}

/// All 2^m points and square-free monomials in DegLex order, with the
/// divisibility evaluation matrix A.
#[derive(Debug, Clone)]
pub struct BooleanCube {
    pub m: u32,
    /// Bitmasks in DegLex order; doubles as the monomial list.
    pub order: Vec<u32>,
    /// A[f][P] = 1 iff the monomial of f divides the characteristic monomial
    /// of P, i.e. f's bits are a subset of P's.
    pub matrix: Vec<Vec<u16>>,
}

/// DegLex: by total degree, ties broken by the binary value read with the
/// highest variable index most significant.
pub fn deglex_order(m: u32) -> Vec<u32> {
    let mut v: Vec<u32> = (0..1u32 << m).collect();
    v.sort_by_key(|&a| (a.count_ones(), a));
    v
}

pub fn monomial_name(mask: u32, m: u32) -> String {
    if mask == 0 {
        return "1".into();
    }
    (0..m)
        .filter(|j| mask >> j & 1 == 1)
        .map(|j| format!("x{}", j + 1))
        .collect::<Vec<_>>()
        .join("")
}

pub fn point_name(mask: u32, m: u32) -> String {
    (0..m)
        .rev()
        .map(|j| if mask >> j & 1 == 1 { '1' } else { '0' })
        .collect()
}

pub fn cube(m: u32) -> Result<BooleanCube, RmError> {
    if !(1..=6).contains(&m) {
        return Err(RmError::DimensionTooLarge(m));
    }
    let order = deglex_order(m);
    let matrix = order
        .iter()
        .map(|&f| {
            order
                .iter()
                .map(|&p| u16::from(f & p == f))
                .collect()
        })
        .collect();
    Ok(BooleanCube { m, order, matrix })
}

impl BooleanCube {
    pub fn size(&self) -> usize {
        self.order.len()
    }

    /// Evaluation-matrix view so flags can be built with the generic
    /// machinery: row i has pole order i (the DegLex rank).
    pub fn as_eval_matrix(&self) -> EvaluationMatrix {
        let n = self.size();
        let rows = self
            .matrix
            .iter()
            .enumerate()
            .map(|(i, values)| EvalRow {
                monomial: Monomial {
                    exponents: vec![i as u32],
                    pole_order: i as u64,
                },
                values: values.clone(),
            })
            .collect();
        EvaluationMatrix {
            field: builtin::gf2(),
            model_name: format!("rm_cube_{}", self.m),
            genus: 0,
            weierstrass: NumericalSemigroup::natural_numbers(),
            rows,
            col_labels: (0..n)
                .map(|i| point_name(self.order[i], self.m))
                .collect(),
        }
    }

    /// A . A^T over GF(2).
    pub fn self_product(&self) -> Vec<Vec<u16>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut s = 0u16;
                        for c in 0..n {
                            s ^= self.matrix[i][c] & self.matrix[j][c];
                        }
                        s
                    })
                    .collect()
            })
            .collect()
    }

    /// Greedy flag on a point subset plus its duality verdict.
    pub fn subset_verdict(&self, cols: &[usize]) -> SubsetVerdict {
        let em = self.as_eval_matrix();
        let flag = CompleteFlag::build(&em, cols).expect("cube matrix is invertible");
        let verdict = isometry_dual(&flag).expect("kernel is one-dimensional");
        let selected_rows: Vec<u32> = flag
            .wstar
            .iter()
            .map(|&i| self.order[i as usize])
            .collect();
        let pivot_products: Vec<u32> = (0..cols.len())
            .map(|i| selected_rows[i] | selected_rows[cols.len() - 1 - i])
            .collect();
        SubsetVerdict {
            columns: cols.to_vec(),
            characteristic: (0..self.size()).map(|i| cols.contains(&i)).collect(),
            is_dual: verdict.is_dual,
            selected_rows,
            pivot_products,
        }
    }

    /// The span of the rows with the given indices, as column bit-vectors.
    pub fn row_span(&self, row_idx: &[usize]) -> Vec<Vec<u16>> {
        let n = self.size();
        let mut out = Vec::with_capacity(1 << row_idx.len());
        for mask in 0u32..1 << row_idx.len() {
            let mut v = vec![0u16; n];
            for (b, &ri) in row_idx.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    for (x, &a) in v.iter_mut().zip(&self.matrix[ri]) {
                        *x ^= a;
                    }
                }
            }
            out.push(v);
        }
        out
    }
}

/// Flag data for one point subset.
#[derive(Debug, Clone, Serialize)]
pub struct SubsetVerdict {
    pub columns: Vec<usize>,
    pub characteristic: Vec<bool>,
    pub is_dual: bool,
    /// Monomial bitmask selected for each flag step.
    pub selected_rows: Vec<u32>,
    /// Antidiagonal products x^a * x^b as square-free bitmasks.
    pub pivot_products: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RmPolicy {
    Exhaustive,
    SpanCharacterization,
}

/// The designated span rows for the characterization: 1, x_1..x_m, x_1 x_2.
pub fn designated_span_rows(m: u32) -> Vec<usize> {
    // in DegLex these are exactly the first m + 2 rows
    (0..(m + 2) as usize).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct CountReport {
    pub m: u32,
    pub subset_size: usize,
    pub policy: RmPolicy,
    pub subsets_examined: u64,
    /// Weight-s span vectors when running the span policy.
    pub candidates: u64,
    /// Subsets passing the direct flag check.
    pub verified_dual: u64,
    pub dual_subsets: Vec<SubsetVerdict>,
}

/// Counts isometry-dual subsets of the given size, either by exhaustive scan
/// or through the row-span candidate set (every candidate still gets the
/// direct flag check).
pub fn count_dual_subsets(
    m: u32,
    s: usize,
    policy: RmPolicy,
    budget: u64,
) -> Result<CountReport, RmError> {
    let cube = cube(m)?;
    let n = cube.size();
    match policy {
        RmPolicy::Exhaustive => {
            let total = binomial(n as u64, s as u64);
            if total > budget {
                return Err(RmError::BudgetExceeded {
                    subsets: total,
                    budget,
                });
            }
            let mut dual = Vec::new();
            let mut examined = 0u64;
            for cols in combinations(n, s) {
                examined += 1;
                let v = cube.subset_verdict(&cols);
                if v.is_dual {
                    dual.push(v);
                }
            }
            Ok(CountReport {
                m,
                subset_size: s,
                policy,
                subsets_examined: examined,
                candidates: examined,
                verified_dual: dual.len() as u64,
                dual_subsets: dual,
            })
        }
        RmPolicy::SpanCharacterization => {
            let span = cube.row_span(&designated_span_rows(m));
            let mut dual = Vec::new();
            let mut candidates = 0u64;
            for v in &span {
                let cols: Vec<usize> = (0..n).filter(|&i| v[i] == 1).collect();
                if cols.len() != s {
                    continue;
                }
                candidates += 1;
                let sv = cube.subset_verdict(&cols);
                if sv.is_dual {
                    dual.push(sv);
                }
            }
            Ok(CountReport {
                m,
                subset_size: s,
                policy,
                subsets_examined: candidates,
                candidates,
                verified_dual: dual.len() as u64,
                dual_subsets: dual,
            })
        }
    }
}

/// Exact weight histogram over the span of the given rows.
pub fn span_weight_distribution(m: u32, row_idx: &[usize]) -> Result<BTreeMap<u64, u64>, RmError> {
    let cube = cube(m)?;
    let mut hist = BTreeMap::new();
    for v in cube.row_span(row_idx) {
        let w = v.iter().map(|&x| x as u64).sum::<u64>();
        *hist.entry(w).or_insert(0) += 1;
    }
    Ok(hist)
}

/// Random spot check: samples size-s subsets and reports any dual subset
/// whose characteristic vector is NOT in the given allowed set.
pub fn random_spot_check(
    m: u32,
    s: usize,
    samples: u64,
    seed: u64,
    allowed: &[Vec<bool>],
) -> Result<SpotCheckReport, RmError> {
    let cube = cube(m)?;
    let n = cube.size();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut duals_seen = 0u64;
    let mut outside = Vec::new();
    for _ in 0..samples {
        let mut cols = rand::seq::index::sample(&mut rng, n, s).into_vec();
        cols.sort_unstable();
        let v = cube.subset_verdict(&cols);
        if v.is_dual {
            duals_seen += 1;
            if !allowed.contains(&v.characteristic) {
                outside.push(v);
            }
        }
    }
    Ok(SpotCheckReport {
        samples,
        duals_seen,
        outside_allowed: outside,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SpotCheckReport {
    pub samples: u64,
    pub duals_seen: u64,
    pub outside_allowed: Vec<SubsetVerdict>,
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
