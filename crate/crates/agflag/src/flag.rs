//! Complete flags of one-point AG codes by greedy row selection, and the
//! isometry-dual decision with explicit dualizing-vector recovery.

use serde::Serialize;
use thiserror::Error;

use crate::curve::{CurveModel, EvaluationMatrix, Monomial};
use crate::gf::Field;
use crate::mat::{GreedyBasis, Matrix};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error)]
pub enum FlagError {
    #[error("evaluation matrix bound too low: found {found} independent rows, need {need}")]
    InsufficientBound { found: usize, need: usize },
    #[error("kernel of the leading rows has dimension {0}, expected 1")]
    DegenerateKernel(usize),
    #[error("column subset is empty")]
    EmptySubset,
    #[error("column index {0} out of range")]
    BadColumn(usize),
}

/// A complete flag on a column subset: invertible n x n generator matrix
/// whose row pole orders are the geometric nongaps W*.
#[derive(Debug, Clone)]
pub struct CompleteFlag {
    pub model_name: String,
    pub field: Field,
    pub genus: u64,
    pub weierstrass: NumericalSemigroup,
    pub column_indices: Vec<usize>,
    pub column_labels: Vec<String>,
    pub generator: Matrix,
    /// Geometric nongaps m_1 = 0 < m_2 < ... < m_n.
    pub wstar: Vec<u64>,
    pub row_monomials: Vec<Monomial>,
}

impl CompleteFlag {
    pub fn n(&self) -> usize {
        self.wstar.len()
    }

    /// Largest geometric nongap m = m_n.
    pub fn m(&self) -> u64 {
        *self.wstar.last().unwrap()
    }

    /// Greedy top-to-bottom selection of n independent rows of the
    /// evaluation matrix restricted to `columns`.
    pub fn build(matrix: &EvaluationMatrix, columns: &[usize]) -> Result<CompleteFlag, FlagError> {
        if columns.is_empty() {
            return Err(FlagError::EmptySubset);
        }
        for &c in columns {
            if c >= matrix.ncols() {
                return Err(FlagError::BadColumn(c));
            }
        }
        let n = columns.len();
        let field = matrix.field.clone();
        let mut basis = GreedyBasis::new(field.clone(), n);
        let mut selected = Vec::with_capacity(n);
        let mut wstar = Vec::with_capacity(n);
        let mut monomials = Vec::with_capacity(n);
        let mut restricted = vec![0u16; n];
        for row in &matrix.rows {
            for (dst, &c) in restricted.iter_mut().zip(columns) {
                *dst = row.values[c];
            }
            if basis.try_insert(&restricted) {
                selected.push(restricted.clone());
                wstar.push(row.monomial.pole_order);
                monomials.push(row.monomial.clone());
                if selected.len() == n {
                    break;
                }
            }
        }
        if selected.len() < n {
            return Err(FlagError::InsufficientBound {
                found: selected.len(),
                need: n,
            });
        }
        debug_assert_eq!(wstar[0], 0);
        Ok(CompleteFlag {
            model_name: matrix.model_name.clone(),
            field,
            genus: matrix.genus,
            weierstrass: matrix.weierstrass.clone(),
            column_indices: columns.to_vec(),
            column_labels: columns
                .iter()
                .map(|&c| matrix.col_labels[c].clone())
                .collect(),
            generator: Matrix::from_rows(matrix.field.clone(), &selected),
            wstar,
            row_monomials: monomials,
        })
    }

    /// Convenience: builds the flag for a model with the theory-sufficient
    /// bound n + 2g - 1.
    pub fn from_model(model: &CurveModel, columns: &[usize]) -> Result<CompleteFlag, FlagError> {
        let bound = (columns.len() as u64 + 2 * model.genus).saturating_sub(1);
        let em = model.eval_matrix(bound);
        Self::build(&em, columns)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FailureReason {
    ZeroEntryInCandidate,
    OrthogonalityFails,
}

/// Outcome of the isometry-dual decision for a flag.
#[derive(Debug, Clone)]
pub struct IsometryDualVerdict {
    pub is_dual: bool,
    /// The kernel candidate, normalized so its first nonzero entry is 1.
    pub candidate: Vec<u16>,
    /// Present exactly when `is_dual`.
    pub dualizing: Option<Vec<u16>>,
    /// G . diag(candidate) . G^T.
    pub product: Matrix,
    /// The n anti-diagonal entries of the product, top-right to bottom-left.
    pub pivot_products: Vec<u16>,
    pub failure: Option<FailureReason>,
}

/// Decides the isometry-dual property. The candidate vector is the kernel of
/// the leading (n-1) x n submatrix: C_1 is spanned by the all-ones row, so
/// diag(v) applied to it must be orthogonal to C_{n-1}, which pins v up to
/// scale.
pub fn isometry_dual(flag: &CompleteFlag) -> Result<IsometryDualVerdict, FlagError> {
    let n = flag.n();
    let f = &flag.field;
    let lead = if n == 1 {
        Matrix::zeros(f.clone(), 0, 1)
    } else {
        Matrix::from_rows(f.clone(), &flag.generator.to_rows()[..n - 1])
    };
    let kernel = lead.kernel();
    if kernel.len() != 1 {
        return Err(FlagError::DegenerateKernel(kernel.len()));
    }
    let mut v = kernel.into_iter().next().unwrap();
    let first = v.iter().find(|&&x| x != 0).copied().unwrap();
    if first != 1 {
        let inv = f.inv(first).unwrap();
        for x in &mut v {
            *x = f.mul(inv, *x);
        }
    }
    let product = flag.generator.gram_with_weights(&v);
    let pivot_products: Vec<u16> = (0..n).map(|i| product.get(i, n - 1 - i)).collect();

    let mut failure = None;
    if v.iter().any(|&x| x == 0) {
        failure = Some(FailureReason::ZeroEntryInCandidate);
    } else {
        // 1-based condition i + j <= n reads i + j + 2 <= n here
        'outer: for i in 0..n {
            for j in 0..n.saturating_sub(i + 1) {
                if product.get(i, j) != 0 {
                    failure = Some(FailureReason::OrthogonalityFails);
                    break 'outer;
                }
            }
        }
    }
    let is_dual = failure.is_none();
    if is_dual {
        // nonzero anti-diagonal follows from invertibility; asserted, not assumed
        assert!(
            pivot_products.iter().all(|&x| x != 0),
            "anti-diagonal pivot vanished on an invertible flag"
        );
    }
    Ok(IsometryDualVerdict {
        is_dual,
        dualizing: is_dual.then(|| v.clone()),
        candidate: v,
        product,
        pivot_products,
        failure,
    })
}

/// A verified pivot: nongaps u + w = m land on a nonzero product entry.
#[derive(Debug, Clone, Serialize)]
pub struct PivotPair {
    pub u: u64,
    pub w: u64,
    pub row: usize,
    pub col: usize,
    pub entry: u16,
}

/// For every pair of geometric nongaps u, w with u + w = m, the product
/// entry at their indices must be a nonzero pivot.
pub fn pivot_check(flag: &CompleteFlag, verdict: &IsometryDualVerdict) -> Vec<PivotPair> {
    assert!(verdict.is_dual, "pivot check requires a dual flag");
    let m = flag.m();
    let mut out = Vec::new();
    for (i, &u) in flag.wstar.iter().enumerate() {
        if u > m {
            continue;
        }
        let w = m - u;
        if let Some(j) = flag.wstar.iter().position(|&x| x == w) {
            let entry = verdict.product.get(i, j);
            assert!(
                entry != 0,
                "pivot at nongap pair ({u}, {w}) vanished"
            );
            out.push(PivotPair {
                u,
                w,
                row: i,
                col: j,
                entry,
            });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Region {
    A,
    B,
    C,
    D,
}

/// (n, m) with its region and every applicable bound checked.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub n: usize,
    pub m: u64,
    pub region: Region,
    pub is_dual: bool,
    pub violations: Vec<String>,
}

/// Region tag for a pair (n, m) at genus g, independent of any flag.
pub fn region_of(n: usize, m: u64, g: u64) -> Region {
    if n == 1 && m == 0 {
        Region::A
    } else if m <= 2 * g {
        Region::B
    } else if m <= 4 * g {
        Region::C
    } else {
        Region::D
    }
}

/// Whether (n, m) is admissible-in-range for an isometry-dual flag at genus
/// g: the union of regions A-D with their inequalities.
pub fn pair_in_dual_range(n: usize, m: u64, g: u64) -> bool {
    let n64 = n as u64;
    if n == 0 {
        return false;
    }
    if n == 1 || m == 0 {
        return n == 1 && m == 0;
    }
    if m + 1 > n64 + 2 * g {
        return false; // m <= n + 2g - 1
    }
    if m <= 2 * g {
        2 * n64 <= m + 2
    } else if m <= 4 * g {
        2 * n64 <= m + 3
    } else {
        n64 == m + 1 - 2 * g
    }
}

/// Checks every inequality applicable to the flag's (n, m) pair, plus the
/// dual-only bounds and the n >= 2g+2 equivalence, and the index symmetry
/// m_i + m_{n+1-i} = m when m = n + 2g - 1 on a dual flag.
pub fn classify_pair(flag: &CompleteFlag, verdict: &IsometryDualVerdict) -> ClassifyReport {
    let n = flag.n();
    let n64 = n as u64;
    let m = flag.m();
    let g = flag.genus;
    let dual = verdict.is_dual;
    let mut violations = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            violations.push(what.to_string());
        }
    };

    check(m + 1 <= n64 + 2 * g || (n == 1 && m == 0), "m <= n + 2g - 1");
    check((n == 1) == (m == 0), "n = 1 iff m = 0");
    if m > 0 && m <= 2 * g {
        check(2 * n64 <= m + 2, "n <= m/2 + 1 for 0 < m <= 2g");
    }
    if m >= 2 * g {
        check(n64 <= m + 1 - g, "n <= m + 1 - g for m >= 2g");
    }
    if dual {
        if 2 * g < m && m <= 4 * g {
            check(2 * n64 <= m + 3, "dual: n <= m/2 + 3/2 for 2g < m <= 4g");
            check(n64 < 2 * g + 2, "dual: n < 2g + 2 for m <= 4g");
        }
        check(n64 + 2 * g >= m + 1, "dual: n >= m + 1 - 2g");
        if m > 4 * g {
            check(n64 == m + 1 - 2 * g, "dual: n = m + 1 - 2g for m > 4g");
            check(n64 >= 2 * g + 2, "dual: n >= 2g + 2 for m > 4g");
        }
    }
    if n64 >= 2 * g + 2 {
        // both directions of the n >= 2g+2 equivalence
        let top_reached = m == n64 + 2 * g - 1;
        check(
            dual == top_reached,
            "n >= 2g+2: dual iff n + 2g - 1 in W*",
        );
    }
    if dual && m == n64 + 2 * g - 1 {
        let symmetric = (0..n).all(|i| flag.wstar[i] + flag.wstar[n - 1 - i] == m);
        check(symmetric, "dual with m = n+2g-1: m_i + m_{n+1-i} = m");
    }

    ClassifyReport {
        n,
        m,
        region: region_of(n, m, g),
        is_dual: dual,
        violations,
    }
}

/// JSON-facing flag report.
#[derive(Debug, Clone, Serialize)]
pub struct FlagReport {
    pub model: String,
    pub columns: Vec<String>,
    pub n: usize,
    pub m: u64,
    pub wstar: Vec<u64>,
    pub row_functions: Vec<String>,
    pub is_dual: bool,
    pub v: Option<Vec<u16>>,
    pub v_text: Option<Vec<String>>,
    pub failure: Option<FailureReason>,
    pub product_matrix: Vec<Vec<u16>>,
    pub product_text: Vec<String>,
    pub region: Region,
    pub violations: Vec<String>,
}

pub fn flag_report(
    model: &CurveModel,
    flag: &CompleteFlag,
    verdict: &IsometryDualVerdict,
) -> FlagReport {
    let classify = classify_pair(flag, verdict);
    let f = &flag.field;
    let names = model.gen_names();
    FlagReport {
        model: flag.model_name.clone(),
        columns: flag.column_labels.clone(),
        n: flag.n(),
        m: flag.m(),
        wstar: flag.wstar.clone(),
        row_functions: flag
            .row_monomials
            .iter()
            .map(|mm| mm.display(&names))
            .collect(),
        is_dual: verdict.is_dual,
        v: verdict.dualizing.clone(),
        v_text: verdict
            .dualizing
            .as_ref()
            .map(|v| v.iter().map(|&x| f.show(x)).collect()),
        failure: verdict.failure,
        product_matrix: verdict.product.encodings(),
        product_text: verdict
            .product
            .rows_iter()
            .map(|r| {
                r.iter()
                    .map(|&x| f.show(x))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect(),
        region: classify.region,
        violations: classify.violations,
    }
}
