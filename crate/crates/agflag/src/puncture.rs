//! Puncturing analysis, exhaustive/random subset searches for isometry-dual
//! flags, and admissible-pair tables.

use std::collections::{BTreeMap, BTreeSet};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::CurveModel;
use crate::flag::{isometry_dual, pair_in_dual_range, CompleteFlag, FlagError, IsometryDualVerdict};
use crate::gf::Field;
use crate::rmflag::binomial;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("{subsets} subsets of size {s} exceed the budget {budget}")]
    BudgetExceeded { s: usize, subsets: u64, budget: u64 },
    #[error(transparent)]
    Flag(#[from] FlagError),
}

pub const DEFAULT_BUDGET: u64 = 5_000_000;
const WITNESS_CAP: usize = 32;

/// Subsets of {0..n-1} of size k as sorted index vectors, in colexicographic
/// order of their bitmasks (Gosper's hack).
pub fn combinations(n: usize, k: usize) -> impl Iterator<Item = Vec<usize>> {
    subset_masks(n, k).map(move |m| mask_to_indices(m))
}

pub fn subset_masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n <= 63);
    let end = 1u64 << n;
    let mut cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = false;
    std::iter::from_fn(move || {
        if done || cur >= end {
            return None;
        }
        let out = cur;
        if k == 0 {
            done = true;
            return Some(out);
        }
        // Gosper's hack
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        cur = (((r ^ cur) >> 2) / c) | r;
        Some(out)
    })
}

pub fn mask_to_indices(mut m: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let i = m.trailing_zeros() as usize;
        out.push(i);
        m &= m - 1;
    }
    out
}

/// Report for one puncturing step: the child flag is rebuilt from scratch on
/// the kept columns.
#[derive(Debug, Clone, Serialize)]
pub struct PunctureReport {
    pub model: String,
    pub parent_n: usize,
    pub child_s: usize,
    pub parent_wstar: Vec<u64>,
    pub child_wstar: Vec<u64>,
    /// W' subset of W* (holds unconditionally).
    pub wprime_contained: bool,
    pub parent_dual: bool,
    pub child_dual: bool,
    pub removed: u64,
    pub removed_in_w: bool,
    /// n >= 2g+2 and s >= 2g+2, the hypothesis of the inheritance theorem.
    pub theorem_applicable: bool,
}

/// Rebuilds the flag on `keep` (positions into the parent's column list) and
/// fills the inheritance report.
pub fn puncture(
    model: &CurveModel,
    parent: &CompleteFlag,
    keep: &[usize],
) -> Result<PunctureReport, FlagError> {
    if keep.is_empty() {
        return Err(FlagError::EmptySubset);
    }
    for &k in keep {
        if k >= parent.n() {
            return Err(FlagError::BadColumn(k));
        }
    }
    let child_cols: Vec<usize> = keep.iter().map(|&k| parent.column_indices[k]).collect();
    let child = CompleteFlag::from_model(model, &child_cols)?;
    let parent_verdict = isometry_dual(parent)?;
    let child_verdict = isometry_dual(&child)?;
    let g = model.genus;
    let n = parent.n();
    let s = child.n();
    let removed = (n - s) as u64;
    let wprime_contained = child.wstar.iter().all(|w| parent.wstar.contains(w));
    let removed_in_w = model.weierstrass.contains(removed);
    let theorem_applicable = n as u64 >= 2 * g + 2 && s as u64 >= 2 * g + 2;
    if theorem_applicable && parent_verdict.is_dual && child_verdict.is_dual {
        assert!(
            removed_in_w,
            "dual punctured pair with n - s = {removed} outside W"
        );
    }
    Ok(PunctureReport {
        model: model.name.clone(),
        parent_n: n,
        child_s: s,
        parent_wstar: parent.wstar.clone(),
        child_wstar: child.wstar.clone(),
        wprime_contained,
        parent_dual: parent_verdict.is_dual,
        child_dual: child_verdict.is_dual,
        removed,
        removed_in_w,
        theorem_applicable,
    })
}

/// The Klein ladder D_2 < D_5 < ... < D_23 (prefixes of the model's column
/// order: Q', Q'', then colinear triples).
pub fn klein_ladder() -> Vec<(CompleteFlag, IsometryDualVerdict)> {
    let model = CurveModel::builtin("klein_f8").unwrap();
    (0..=7)
        .map(|i| {
            let cols: Vec<usize> = (0..3 * i + 2).collect();
            let flag = CompleteFlag::from_model(&model, &cols).unwrap();
            let verdict = isometry_dual(&flag).unwrap();
            (flag, verdict)
        })
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub enum SearchPolicy {
    Exhaustive,
    Random { seed: u64, trials: u64 },
    Witnesses(Vec<Vec<usize>>),
}

impl SearchPolicy {
    pub fn cache_key(&self) -> String {
        match self {
            SearchPolicy::Exhaustive => "exhaustive".into(),
            SearchPolicy::Random { seed, trials } => format!("random_{seed}_{trials}"),
            SearchPolicy::Witnesses(w) => format!("witnesses_{}", w.len()),
        }
    }
}

/// Per-subset summary used by the property suites.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SubsetSummary {
    pub mask: u64,
    pub m: u64,
    pub dual: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub model: String,
    pub genus: u64,
    pub s: usize,
    pub policy: String,
    pub examined: u64,
    pub dual_count: u64,
    /// m values realized by at least one dual subset of this size.
    pub admissible_m: BTreeSet<u64>,
    pub per_m_dual_counts: BTreeMap<u64, u64>,
    /// Up to a handful of dual witnesses per m value (column bitmasks).
    pub witnesses: BTreeMap<u64, Vec<u64>>,
    /// Subsets violating the region/equivalence checks (expected empty).
    pub violations: Vec<String>,
}

/// Fixed-size scratch for the per-subset flag + duality kernel; all of the
/// search hot path runs in here without allocation.
struct ScanSpace {
    field: Field,
    s: usize,
    ncols_total: usize,
    sel: Vec<u16>,
    ech: Vec<u16>,
    piv: Vec<usize>,
    poles: Vec<u64>,
    row: Vec<u16>,
    rref: Vec<u16>,
    v: Vec<u16>,
}

impl ScanSpace {
    fn new(field: Field, s: usize, ncols_total: usize) -> ScanSpace {
        ScanSpace {
            field,
            s,
            ncols_total,
            sel: vec![0; s * s],
            ech: vec![0; s * s],
            piv: Vec::with_capacity(s),
            poles: Vec::with_capacity(s),
            row: vec![0; s],
            rref: vec![0; s.saturating_sub(1) * s],
            v: vec![0; s],
        }
    }

    /// Greedy flag + duality verdict for one column subset.
    fn scan(&mut self, rows: &[(u64, Vec<u16>)], cols: &[usize]) -> Option<SubsetSummary> {
        let s = self.s;
        let f = self.field.clone();
        self.piv.clear();
        self.poles.clear();
        let mut nsel = 0usize;
        for (pole, values) in rows {
            for (dst, &c) in self.row.iter_mut().zip(cols) {
                *dst = values[c];
            }
            // reduce against echelon
            for (k, &pc) in self.piv.iter().enumerate() {
                let fac = self.row[pc];
                if fac != 0 {
                    for j in 0..s {
                        let e = self.ech[k * s + j];
                        self.row[j] = f.sub(self.row[j], f.mul(fac, e));
                    }
                }
            }
            let Some(p) = self.row.iter().position(|&x| x != 0) else {
                continue;
            };
            // accept: store original restricted row and normalized reduction
            for (j, &c) in cols.iter().enumerate() {
                self.sel[nsel * s + j] = values[c];
            }
            let inv = f.inv(self.row[p]).unwrap();
            for j in 0..s {
                self.ech[nsel * s + j] = f.mul(inv, self.row[j]);
            }
            self.piv.push(p);
            self.poles.push(*pole);
            nsel += 1;
            if nsel == s {
                break;
            }
        }
        if nsel < s {
            return None;
        }
        let m = self.poles[s - 1];
        let dual = self.duality();
        let mut mask = 0u64;
        if self.ncols_total <= 63 {
            for &c in cols {
                mask |= 1 << c;
            }
        }
        Some(SubsetSummary { mask, m, dual })
    }

    fn duality(&mut self) -> bool {
        let s = self.s;
        let f = self.field.clone();
        if s == 1 {
            return true;
        }
        // kernel of the leading (s-1) x s rows
        self.rref[..(s - 1) * s].copy_from_slice(&self.sel[..(s - 1) * s]);
        let mut piv_cols = [usize::MAX; 64];
        let mut r = 0usize;
        for c in 0..s {
            let mut pr = usize::MAX;
            for i in r..s - 1 {
                if self.rref[i * s + c] != 0 {
                    pr = i;
                    break;
                }
            }
            if pr == usize::MAX {
                continue;
            }
            if pr != r {
                for j in 0..s {
                    self.rref.swap(r * s + j, pr * s + j);
                }
            }
            let inv = f.inv(self.rref[r * s + c]).unwrap();
            for j in 0..s {
                self.rref[r * s + j] = f.mul(inv, self.rref[r * s + j]);
            }
            for i in 0..s - 1 {
                if i != r && self.rref[i * s + c] != 0 {
                    let fac = self.rref[i * s + c];
                    for j in 0..s {
                        let v = f.sub(self.rref[i * s + j], f.mul(fac, self.rref[r * s + j]));
                        self.rref[i * s + j] = v;
                    }
                }
            }
            piv_cols[r] = c;
            r += 1;
            if r == s - 1 {
                break;
            }
        }
        debug_assert_eq!(r, s - 1, "leading rows of an invertible matrix");
        let free = (0..s).find(|c| !piv_cols[..r].contains(c)).unwrap();
        for x in self.v.iter_mut() {
            *x = 0;
        }
        self.v[free] = 1;
        for (i, &pc) in piv_cols[..r].iter().enumerate() {
            self.v[pc] = f.neg(self.rref[i * s + free]);
        }
        if self.v.iter().any(|&x| x == 0) {
            return false;
        }
        // orthogonality: (G diag(v) G^T)_{ij} = 0 for i + j + 2 <= s
        for i in 0..s {
            for j in i..s.saturating_sub(i + 1) {
                let mut acc = 0u16;
                for c in 0..s {
                    let t = f.mul(f.mul(self.sel[i * s + c], self.v[c]), self.sel[j * s + c]);
                    acc = f.add(acc, t);
                }
                if acc != 0 {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches size-s column subsets of a model for isometry-dual flags.
///
/// Exhaustive scans iterate bitmask subsets in colexicographic order and are
/// budget-checked. Results are deterministic for a given policy and seed and
/// independent of the rayon worker count (chunks are reduced in order).
pub fn search_subsets(
    model: &CurveModel,
    s: usize,
    policy: &SearchPolicy,
    budget: u64,
) -> Result<SearchOutcome, SearchError> {
    let n_pts = model.point_count();
    let g = model.genus;
    let bound = (s as u64 + 2 * g).saturating_sub(1);
    let em = model.eval_matrix(bound);
    let rows: Vec<(u64, Vec<u16>)> = em
        .rows
        .iter()
        .map(|r| (r.monomial.pole_order, r.values.clone()))
        .collect();

    let masks: Vec<u64> = match policy {
        SearchPolicy::Exhaustive => {
            let total = binomial(n_pts as u64, s as u64);
            if total > budget {
                return Err(SearchError::BudgetExceeded {
                    s,
                    subsets: total,
                    budget,
                });
            }
            subset_masks(n_pts, s).collect()
        }
        SearchPolicy::Random { seed, trials } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*trials)
                .map(|_| {
                    let mut mask = 0u64;
                    for i in rand::seq::index::sample(&mut rng, n_pts, s) {
                        mask |= 1 << i;
                    }
                    mask
                })
                .collect()
        }
        SearchPolicy::Witnesses(list) => list
            .iter()
            .map(|cols| {
                let mut mask = 0u64;
                for &c in cols {
                    mask |= 1 << c;
                }
                mask
            })
            .collect(),
    };

    let chunk = 8192;
    let partials: Vec<Partial> = masks
        .par_chunks(chunk)
        .map(|block| {
            let mut space = ScanSpace::new(model.field.clone(), s, n_pts);
            let mut p = Partial::default();
            let mut cols = vec![0usize; s];
            for &mask in block {
                let mut mm = mask;
                for slot in cols.iter_mut() {
                    let i = mm.trailing_zeros() as usize;
                    *slot = i;
                    mm &= mm - 1;
                }
                let Some(summary) = space.scan(&rows, &cols) else {
                    p.violations.push(format!(
                        "subset {mask:#x}: fewer than {s} independent rows at bound {bound}"
                    ));
                    continue;
                };
                p.absorb(summary, s, g);
            }
            p
        })
        .collect();

    let mut total = Partial::default();
    for p in partials {
        total.merge(p);
    }

    Ok(SearchOutcome {
        model: model.name.clone(),
        genus: g,
        s,
        policy: policy.cache_key(),
        examined: total.examined,
        dual_count: total.dual_count,
        admissible_m: total.witnesses.keys().copied().collect(),
        per_m_dual_counts: total.per_m,
        witnesses: total.witnesses,
        violations: total.violations,
    })
}

#[derive(Default)]
struct Partial {
    examined: u64,
    dual_count: u64,
    per_m: BTreeMap<u64, u64>,
    witnesses: BTreeMap<u64, Vec<u64>>,
    violations: Vec<String>,
}

impl Partial {
    fn absorb(&mut self, sm: SubsetSummary, s: usize, g: u64) {
        self.examined += 1;
        // Prop 4 equivalence holds for every subset with n >= 2g + 2
        if s as u64 >= 2 * g + 2 {
            let top = sm.m == s as u64 + 2 * g - 1;
            if sm.dual != top {
                self.violations.push(format!(
                    "subset {:#x}: dual={} but m={} (top pole {})",
                    sm.mask,
                    sm.dual,
                    sm.m,
                    s as u64 + 2 * g - 1
                ));
            }
        }
        if sm.dual {
            self.dual_count += 1;
            if !pair_in_dual_range(s, sm.m, g) {
                self.violations.push(format!(
                    "subset {:#x}: dual pair (n={}, m={}) outside the admissible regions",
                    sm.mask, s, sm.m
                ));
            }
            *self.per_m.entry(sm.m).or_insert(0) += 1;
            let w = self.witnesses.entry(sm.m).or_default();
            if w.len() < WITNESS_CAP {
                w.push(sm.mask);
            }
        }
    }

    fn merge(&mut self, other: Partial) {
        self.examined += other.examined;
        self.dual_count += other.dual_count;
        for (m, c) in other.per_m {
            *self.per_m.entry(m).or_insert(0) += c;
        }
        for (m, w) in other.witnesses {
            let dst = self.witnesses.entry(m).or_default();
            for mask in w {
                if dst.len() >= WITNESS_CAP {
                    break;
                }
                dst.push(mask);
            }
        }
        self.violations.extend(other.violations);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mark {
    Star,
    Dot,
}

/// The admissible-pair table in the papers' display layout: one row per n,
/// columns m = 0..=max_m, stars for realized dual pairs, dots for in-range
/// pairs not realized.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PairTable {
    pub model: String,
    pub genus: u64,
    pub max_n: usize,
    pub max_m: u64,
    pub policy: String,
    /// marks[(n, m)]
    pub marks: BTreeMap<String, Mark>,
    /// Index of m in the Weierstrass semigroup (the dimension header row);
    /// None at gaps.
    pub dim_row: Vec<Option<u64>>,
}

impl PairTable {
    pub fn key(n: usize, m: u64) -> String {
        format!("{n},{m}")
    }

    pub fn mark(&self, n: usize, m: u64) -> Option<Mark> {
        self.marks.get(&Self::key(n, m)).copied()
    }

    pub fn stars_for_row(&self, n: usize) -> Vec<u64> {
        (0..=self.max_m)
            .filter(|&m| self.mark(n, m) == Some(Mark::Star))
            .collect()
    }

    pub fn dots_for_row(&self, n: usize) -> Vec<u64> {
        (0..=self.max_m)
            .filter(|&m| self.mark(n, m) == Some(Mark::Dot))
            .collect()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let cell = |s: &str| format!("{s:>3}");
        out.push_str("  m=");
        for m in 0..=self.max_m {
            out.push_str(&cell(&m.to_string()));
        }
        out.push('\n');
        out.push_str("    ");
        for m in 0..=self.max_m {
            match self.dim_row[m as usize] {
                Some(d) => out.push_str(&cell(&d.to_string())),
                None => out.push_str(&cell("-")),
            }
        }
        out.push('\n');
        for n in 1..=self.max_n {
            out.push_str(&format!("n={n:<2}"));
            for m in 0..=self.max_m {
                match self.mark(n, m) {
                    Some(Mark::Star) => out.push_str(&cell("*")),
                    Some(Mark::Dot) => out.push_str(&cell(".")),
                    None => out.push_str(&cell("")),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Assembles the table from per-size search outcomes (one per n = 1..max_n).
pub fn pair_table(model: &CurveModel, outcomes: &[SearchOutcome], max_n: usize) -> PairTable {
    let g = model.genus;
    let max_m = max_n as u64 + 2 * g - 1;
    let mut marks = BTreeMap::new();
    for n in 1..=max_n {
        let found = outcomes
            .iter()
            .find(|o| o.s == n)
            .map(|o| o.admissible_m.clone())
            .unwrap_or_default();
        for m in 0..=max_m {
            if found.contains(&m) {
                marks.insert(PairTable::key(n, m), Mark::Star);
            } else if pair_in_dual_range(n, m, g) {
                marks.insert(PairTable::key(n, m), Mark::Dot);
            }
        }
    }
    let dim_row = (0..=max_m)
        .map(|m| model.weierstrass.index_of(m).map(|i| i as u64 + 1))
        .collect();
    PairTable {
        model: model.name.clone(),
        genus: g,
        max_n,
        max_m,
        policy: outcomes
            .first()
            .map(|o| o.policy.clone())
            .unwrap_or_else(|| "none".into()),
        marks,
        dim_row,
    }
}
