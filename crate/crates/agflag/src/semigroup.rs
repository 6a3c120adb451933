//! Numerical semigroups, their ideals, and maximum sparse ideals.
//!
//! A numerical semigroup S is a cofinite additive submonoid of the
//! nonnegative integers. Membership is stored as a bitset over a finite
//! window; everything at or beyond the conductor is in S, so the window is
//! complete.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("generators have gcd {0} > 1, complement is not finite")]
    NotCofinite(u64),
    #[error("complement is not closed under addition: {0} + {1} = {2} is a gap")]
    NotClosed(u64, u64, u64),
    #[error("0 must belong to the semigroup")]
    ZeroIsGap,
    #[error("not an ideal: {0} + {1} = {2} escapes the candidate set")]
    NotAnIdeal(u64, u64, u64),
    #[error("complement candidate contains {0}, which is a gap of S")]
    ComplementNotInS(u64),
    #[error("lambda_{index} = {lambda} is a sum of two gaps (G != 0)")]
    LeaderHasGapPair { index: usize, lambda: u64 },
    #[error("leader must be a nonzero nongap")]
    ZeroLeader,
    #[error("ideal with Frobenius number {0} is not maximum sparse")]
    NotMaxSparse(i64),
}

/// Cofinite additive submonoid of the nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gaps: Vec<u64>,
    genus: u64,
    conductor: u64,
    window: Vec<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct SemigroupRepr {
    gaps: Vec<u64>,
}

impl Serialize for NumericalSemigroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SemigroupRepr {
            gaps: self.gaps.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumericalSemigroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SemigroupRepr::deserialize(d)?;
        NumericalSemigroup::from_gaps(&repr.gaps).map_err(serde::de::Error::custom)
    }
}

/// D(i) = S cap (lambda_i - S) together with the gap-pair count G(i).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisorProfile {
    pub index: usize,
    pub lambda: u64,
    /// D(i), sorted ascending.
    pub d_set: Vec<u64>,
    /// Number of unordered gap pairs (a, b), a <= b, with a + b = lambda_i.
    pub g_count: u64,
}

/// An ideal I of S given by its finite complement S \ I.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SemigroupIdeal {
    /// S \ I, sorted ascending.
    pub complement: Vec<u64>,
    /// Largest integer not in I; -1 when I contains every nonnegative integer.
    pub frobenius: i64,
    pub proper: bool,
    /// Frobenius bound 2g - 1 + #(S \ I).
    pub sparse_bound: i64,
    pub is_max_sparse: bool,
    /// The Frobenius number, when maximum sparse.
    pub leader: Option<u64>,
}

/// The five equivalent inclusion statements for two maximum sparse ideals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    /// (1) I' contains I, (2) S\I' inside S\I, (3) D(i') inside D(i),
    /// (4) lambda_i - lambda_i' in S, (5) #(S\I) - #(S\I') in S.
    pub statements: [bool; 5],
    pub all_agree: bool,
}

impl NumericalSemigroup {
    /// Builds S from its finite gap set; verifies the complement is closed.
    pub fn from_gaps(gaps: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
        let mut gaps: Vec<u64> = gaps.to_vec();
        gaps.sort_unstable();
        gaps.dedup();
        if gaps.first() == Some(&0) {
            return Err(SemigroupError::ZeroIsGap);
        }
        let genus = gaps.len() as u64;
        let conductor = gaps.last().map_or(0, |&f| f + 1);
        let bound = (2 * conductor).max(4 * genus + 2).max(16);
        let mut window = vec![true; bound as usize + 1];
        for &g in &gaps {
            window[g as usize] = false;
        }
        let sg = NumericalSemigroup {
            gaps,
            genus,
            conductor,
            window,
        };
        // closure check over all nongap pairs below c + largest gap
        let lim = sg.conductor + sg.gaps.last().copied().unwrap_or(0);
        let small: Vec<u64> = (1..=lim).filter(|&x| sg.contains(x)).collect();
        for (ai, &a) in small.iter().enumerate() {
            for &b in &small[ai..] {
                if a + b <= lim && !sg.contains(a + b) {
                    return Err(SemigroupError::NotClosed(a, b, a + b));
                }
            }
        }
        debug_assert!(sg.conductor <= 2 * sg.genus || sg.genus == 0);
        Ok(sg)
    }

    /// Builds S = <gens> by sieving; fails if gcd(gens) > 1.
    pub fn from_generators(gens: &[u64]) -> Result<NumericalSemigroup, SemigroupError> {
        let gens: Vec<u64> = gens.iter().copied().filter(|&g| g > 0).collect();
        let d = gens.iter().fold(0u64, |acc, &g| gcd(acc, g));
        if gens.is_empty() || d != 1 {
            return Err(SemigroupError::NotCofinite(d));
        }
        let m = *gens.iter().min().unwrap();
        // grow the sieve until a run of `m` consecutive members appears
        let mut bound = (gens.iter().max().unwrap() * m + m).max(16);
        loop {
            let mut member = vec![false; bound as usize + 1];
            member[0] = true;
            for i in 1..=bound {
                member[i as usize] = gens
                    .iter()
                    .any(|&g| i >= g && member[(i - g) as usize]);
            }
            let mut run = 0u64;
            let mut run_start = None;
            for i in 0..=bound {
                if member[i as usize] {
                    run += 1;
                    if run == m {
                        run_start = Some(i + 1 - m);
                        break;
                    }
                } else {
                    run = 0;
                }
            }
            if let Some(start) = run_start {
                let gaps: Vec<u64> = (1..start + m).filter(|&i| !member[i as usize]).collect();
                return NumericalSemigroup::from_gaps(&gaps);
            }
            bound *= 2;
        }
    }

    pub fn natural_numbers() -> NumericalSemigroup {
        NumericalSemigroup::from_gaps(&[]).unwrap()
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u64 {
        self.element(1)
    }

    #[inline]
    pub fn contains(&self, x: u64) -> bool {
        if x >= self.conductor {
            true
        } else {
            self.window[x as usize]
        }
    }

    pub fn contains_signed(&self, x: i64) -> bool {
        x >= 0 && self.contains(x as u64)
    }

    /// lambda_i in the enumeration lambda_0 = 0 < lambda_1 < ...
    pub fn element(&self, i: usize) -> u64 {
        let below: Vec<u64> = (0..self.conductor).filter(|&x| self.contains(x)).collect();
        if i < below.len() {
            below[i]
        } else {
            self.conductor + (i - below.len()) as u64
        }
    }

    /// Index of a nongap in the enumeration (None for gaps).
    pub fn index_of(&self, x: u64) -> Option<usize> {
        if !self.contains(x) {
            return None;
        }
        if x >= self.conductor {
            Some((x - self.genus) as usize)
        } else {
            Some((0..x).filter(|&y| self.contains(y)).count())
        }
    }

    /// All nongaps up to `bound`, ascending.
    pub fn nongaps_upto(&self, bound: u64) -> Vec<u64> {
        (0..=bound).filter(|&x| self.contains(x)).collect()
    }

    /// Minimal generators: nonzero elements that are not sums of two
    /// nonzero elements.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let lim = self.conductor + self.multiplicity();
        let elems = self.nongaps_upto(lim);
        elems
            .iter()
            .copied()
            .filter(|&e| {
                e > 0
                    && !elems
                        .iter()
                        .any(|&a| a > 0 && a < e && self.contains(e - a) && e - a > 0)
            })
            .collect()
    }

    /// D(i) and G(i) for the i-th nongap.
    pub fn profile(&self, i: usize) -> DivisorProfile {
        let lambda = self.element(i);
        let d_set: Vec<u64> = (0..=lambda)
            .filter(|&s| self.contains(s) && self.contains(lambda - s))
            .collect();
        let g_count = self.gap_pair_count(lambda);
        DivisorProfile {
            index: i,
            lambda,
            d_set,
            g_count,
        }
    }

    fn gap_pair_count(&self, lambda: u64) -> u64 {
        let mut n = 0;
        for &a in &self.gaps {
            if 2 * a > lambda {
                break;
            }
            let b = lambda - a;
            if !self.contains(b) {
                n += 1;
            }
        }
        n
    }

    /// Analyzes I = S \ complement: ideal property, Frobenius number,
    /// maximum-sparse status, and the D(i)-characterization cross-check.
    pub fn ideal_from_complement(
        &self,
        complement: &[u64],
    ) -> Result<SemigroupIdeal, SemigroupError> {
        let mut comp: Vec<u64> = complement.to_vec();
        comp.sort_unstable();
        comp.dedup();
        for &c in &comp {
            if !self.contains(c) {
                return Err(SemigroupError::ComplementNotInS(c));
            }
        }
        // ideal check: no c in comp may decompose as x + s with x in I, s in S
        for &c in &comp {
            for s in 1..=c {
                if self.contains(s) {
                    let x = c - s;
                    if self.contains(x) && comp.binary_search(&x).is_err() {
                        return Err(SemigroupError::NotAnIdeal(x, s, c));
                    }
                }
            }
        }
        let frobenius: i64 = comp
            .iter()
            .chain(self.gaps.iter())
            .map(|&x| x as i64)
            .max()
            .unwrap_or(-1);
        let proper = !comp.is_empty();
        let sparse_bound = 2 * self.genus as i64 - 1 + comp.len() as i64;
        let is_max_sparse = proper && frobenius == sparse_bound;
        let leader = if is_max_sparse {
            // cross-check the characterization: complement must be D(i) for
            // the index of the Frobenius number, with G(i) = 0
            let f = frobenius as u64;
            debug_assert!(self.contains(f));
            let i = self.index_of(f).expect("leader must be a nongap");
            let prof = self.profile(i);
            debug_assert_eq!(prof.d_set, comp);
            debug_assert_eq!(prof.g_count, 0);
            Some(f)
        } else {
            None
        };
        Ok(SemigroupIdeal {
            complement: comp,
            frobenius,
            proper,
            sparse_bound,
            is_max_sparse,
            leader,
        })
    }

    /// The maximum sparse ideal S \ D(i) for a leader lambda_i with G(i) = 0.
    pub fn max_sparse_from_leader(&self, i: usize) -> Result<SemigroupIdeal, SemigroupError> {
        let prof = self.profile(i);
        if prof.lambda == 0 {
            return Err(SemigroupError::ZeroLeader);
        }
        if prof.g_count != 0 {
            return Err(SemigroupError::LeaderHasGapPair {
                index: i,
                lambda: prof.lambda,
            });
        }
        let ideal = self.ideal_from_complement(&prof.d_set)?;
        debug_assert!(ideal.is_max_sparse);
        debug_assert_eq!(ideal.leader, Some(prof.lambda));
        Ok(ideal)
    }

    /// All nonzero nongaps lambda <= bound with G = 0 (the leaders).
    pub fn leaders(&self, bound: u64) -> Vec<u64> {
        (1..=bound)
            .filter(|&x| self.contains(x) && self.gap_pair_count(x) == 0)
            .collect()
    }

    /// Evaluates the five inclusion statements for two maximum sparse ideals,
    /// each by an independent route.
    pub fn incl_equivalences(
        &self,
        ideal: &SemigroupIdeal,
        other: &SemigroupIdeal,
    ) -> Result<InclusionReport, SemigroupError> {
        for id in [ideal, other] {
            if !id.is_max_sparse {
                return Err(SemigroupError::NotMaxSparse(id.frobenius));
            }
        }
        let lambda_i = ideal.leader.unwrap();
        let lambda_ip = other.leader.unwrap();

        // (1) I' >= I by elementwise membership scan up to both Frobenius numbers
        let lim = (ideal.frobenius.max(other.frobenius) + 1) as u64;
        let in_ideal = |id: &SemigroupIdeal, x: u64| {
            self.contains(x) && id.complement.binary_search(&x).is_err()
        };
        let s1 = (0..=lim).all(|x| !in_ideal(ideal, x) || in_ideal(other, x));

        // (2) complement containment as finite sets
        let s2 = other
            .complement
            .iter()
            .all(|c| ideal.complement.binary_search(c).is_ok());

        // (3) D(i') subseteq D(i), profiles recomputed from scratch
        let di = self.profile(self.index_of(lambda_i).unwrap()).d_set;
        let dip = self.profile(self.index_of(lambda_ip).unwrap()).d_set;
        let s3 = dip.iter().all(|x| di.binary_search(x).is_ok());

        // (4) leader difference
        let s4 = self.contains_signed(lambda_i as i64 - lambda_ip as i64);

        // (5) complement size difference
        let s5 = self
            .contains_signed(ideal.complement.len() as i64 - other.complement.len() as i64);

        let statements = [s1, s2, s3, s4, s5];
        Ok(InclusionReport {
            statements,
            all_agree: statements.iter().all(|&b| b == statements[0]),
        })
    }

    /// Clifford/Dyck inequalities for 1 <= a <= 2g:
    /// (#nongaps in [1,a] <= a/2, #gaps in [a+1, 2g] <= (2g-a)/2).
    pub fn clifford_dyck_check(&self, a: u64) -> (bool, bool) {
        let two_g = 2 * self.genus;
        let nongaps_low = (1..=a).filter(|&x| self.contains(x)).count() as u64;
        let gaps_high = (a + 1..=two_g).filter(|&x| !self.contains(x)).count() as u64;
        (2 * nongaps_low <= a, 2 * gaps_high <= two_g.saturating_sub(a))
    }

    /// All numerical semigroups of genus <= max_genus via the gap-removal
    /// tree (children remove one minimal generator above the Frobenius
    /// number).
    pub fn enumerate_by_genus(max_genus: u64) -> Vec<NumericalSemigroup> {
        let mut out = Vec::new();
        let root = NumericalSemigroup::natural_numbers();
        let mut stack = vec![root];
        while let Some(s) = stack.pop() {
            if s.genus < max_genus {
                let frob: i64 = s.gaps.last().map_or(-1, |&f| f as i64);
                for e in s.minimal_generators() {
                    if e as i64 > frob {
                        let mut gaps = s.gaps.clone();
                        gaps.push(e);
                        stack.push(NumericalSemigroup::from_gaps(&gaps).unwrap());
                    }
                }
            }
            out.push(s);
        }
        out.sort_by_key(|s| (s.genus, s.gaps.clone()));
        out
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_example() -> NumericalSemigroup {
        // S = {0, 3, 5, 6, 7, ...}
        NumericalSemigroup::from_gaps(&[1, 2, 4]).unwrap()
    }

    #[test]
    fn from_gaps_basics() {
        let s = running_example();
        assert_eq!(s.genus(), 3);
        assert_eq!(s.conductor(), 5);
        assert_eq!(s.multiplicity(), 3);
        assert_eq!(s.nongaps_upto(8), vec![0, 3, 5, 6, 7, 8]);

        let n = NumericalSemigroup::from_gaps(&[]).unwrap();
        assert_eq!(n.genus(), 0);
        assert_eq!(n.conductor(), 0);
    }

    #[test]
    fn from_gaps_rejects_non_semigroups() {
        // complement of {2,3} contains 1 but not 1+1
        assert!(matches!(
            NumericalSemigroup::from_gaps(&[2, 3]),
            Err(SemigroupError::NotClosed(1, 1, 2))
        ));
        assert!(matches!(
            NumericalSemigroup::from_gaps(&[0, 1]),
            Err(SemigroupError::ZeroIsGap)
        ));
    }

    #[test]
    fn from_generators_examples() {
        let s = NumericalSemigroup::from_generators(&[3, 4]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 5]);
        let s = NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap();
        assert_eq!(s.gaps(), &[1, 2, 4]);
        let s = NumericalSemigroup::from_generators(&[6, 10, 15]).unwrap();
        assert_eq!(s.contains(29), false);
        assert_eq!(s.contains(30), true);
        assert!(matches!(
            NumericalSemigroup::from_generators(&[4, 6]),
            Err(SemigroupError::NotCofinite(2))
        ));
    }

    #[test]
    fn enumeration_and_index() {
        let s = running_example();
        let expect = [0u64, 3, 5, 6, 7, 8, 9, 10, 11];
        for (i, &l) in expect.iter().enumerate() {
            assert_eq!(s.element(i), l);
            assert_eq!(s.index_of(l), Some(i));
        }
        assert_eq!(s.index_of(4), None);
    }

    #[test]
    fn profile_running_example() {
        let s = running_example();
        let p = s.profile(7);
        assert_eq!(p.lambda, 10);
        assert_eq!(p.d_set, vec![0, 3, 5, 7, 10]);
        assert_eq!(p.g_count, 0);

        let p0 = s.profile(0);
        assert_eq!(p0.d_set, vec![0]);
        assert_eq!(p0.g_count, 0);

        // lambda_3 = 6 = 2 + 4, a gap pair
        let p3 = s.profile(3);
        assert_eq!(p3.lambda, 6);
        assert_eq!(p3.g_count, 1);
    }

    #[test]
    fn profile_symmetry() {
        for s in [running_example(), NumericalSemigroup::from_generators(&[2, 7]).unwrap()] {
            for i in 0..12 {
                let p = s.profile(i);
                for &x in &p.d_set {
                    assert!(p.d_set.binary_search(&(p.lambda - x)).is_ok());
                }
                assert!(p.d_set.contains(&0) && p.d_set.contains(&p.lambda));
            }
        }
    }

    #[test]
    fn ideal_analysis_running_example() {
        let s = running_example();
        // I = {6, 8, 9, 11, 12, ...} has complement D(7) = {0,3,5,7,10}
        let i = s.ideal_from_complement(&[0, 3, 5, 7, 10]).unwrap();
        assert_eq!(i.frobenius, 10);
        assert_eq!(i.sparse_bound, 10);
        assert!(i.is_max_sparse);
        assert_eq!(i.leader, Some(10));

        // I = S itself: ideal but not proper
        let all = s.ideal_from_complement(&[]).unwrap();
        assert!(!all.proper);
        assert!(!all.is_max_sparse);
        assert_eq!(all.frobenius, 4); // largest gap of S

        // I = S \ {0}: Frobenius 4 < bound 6, not maximum sparse
        let i0 = s.ideal_from_complement(&[0]).unwrap();
        assert_eq!(i0.frobenius, 4);
        assert_eq!(i0.sparse_bound, 6);
        assert!(!i0.is_max_sparse);

        // {3} alone is not an ideal complement: 3 = 0 + 3 with 0 in I
        assert!(matches!(
            s.ideal_from_complement(&[3]),
            Err(SemigroupError::NotAnIdeal(0, 3, 3))
        ));
        assert!(matches!(
            s.ideal_from_complement(&[4]),
            Err(SemigroupError::ComplementNotInS(4))
        ));
    }

    #[test]
    fn max_sparse_from_leader_examples() {
        let s = running_example();
        let i = s.max_sparse_from_leader(7).unwrap();
        assert_eq!(i.complement, vec![0, 3, 5, 7, 10]);
        assert_eq!(i.leader, Some(10));

        // lambda_10 = 13 is the next leader named by the text
        let i13 = s.max_sparse_from_leader(10).unwrap();
        assert_eq!(i13.leader, Some(13));

        // lambda_3 = 6 = 2 + 4 fails
        assert!(matches!(
            s.max_sparse_from_leader(3),
            Err(SemigroupError::LeaderHasGapPair { lambda: 6, .. })
        ));
        assert!(matches!(
            s.max_sparse_from_leader(0),
            Err(SemigroupError::ZeroLeader)
        ));
    }

    /// Independent oracle: scan all unordered gap pairs from the raw gap
    /// list and keep the nonzero nongaps missed by every pair sum.
    fn leaders_by_gap_pair_scan(gaps: &[u64], bound: u64) -> Vec<u64> {
        let mut sums = std::collections::BTreeSet::new();
        for &a in gaps {
            for &b in gaps {
                sums.insert(a + b);
            }
        }
        (1..=bound)
            .filter(|x| !gaps.contains(x) && !sums.contains(x))
            .collect()
    }

    #[test]
    fn leaders_running_example() {
        let s = running_example();
        let got = s.leaders(16);
        let oracle = leaders_by_gap_pair_scan(&[1, 2, 4], 16);
        assert_eq!(got, oracle);
        // 10 and 13 are the leaders the text names explicitly
        assert!(got.contains(&10) && got.contains(&13));
        assert_eq!(got, vec![7, 9, 10, 11, 12, 13, 14, 15, 16]);
    }

    #[test]
    fn leaders_trivial_and_hyperelliptic() {
        let n = NumericalSemigroup::natural_numbers();
        assert_eq!(n.leaders(5), vec![1, 2, 3, 4, 5]);

        let h = NumericalSemigroup::from_generators(&[2, 7]).unwrap();
        assert_eq!(h.gaps(), &[1, 3, 5]);
        let oracle = leaders_by_gap_pair_scan(&[1, 3, 5], 14);
        assert_eq!(h.leaders(14), oracle);
    }

    #[test]
    fn leaders_form_an_ideal() {
        for s in [
            running_example(),
            NumericalSemigroup::from_generators(&[2, 7]).unwrap(),
            NumericalSemigroup::from_generators(&[4, 5, 6, 7]).unwrap(),
        ] {
            let bound = 6 * s.genus() + 8;
            let leaders = s.leaders(bound);
            for &l in &leaders {
                assert!(l >= s.conductor());
                for t in s.nongaps_upto(bound - l) {
                    assert!(
                        leaders.contains(&(l + t)),
                        "{l} + {t} escapes the leader set of {:?}",
                        s.gaps()
                    );
                }
            }
        }
    }

    #[test]
    fn inclusion_equivalences() {
        let s = running_example();
        let i10 = s.max_sparse_from_leader(s.index_of(10).unwrap()).unwrap();
        let i13 = s.max_sparse_from_leader(s.index_of(13).unwrap()).unwrap();
        let i15 = s.max_sparse_from_leader(s.index_of(15).unwrap()).unwrap();

        // reflexive:
        let r = s.incl_equivalences(&i10, &i10).unwrap();
        assert!(r.all_agree && r.statements[0]);

        // leaders 13 and 10: difference 3 in S -> all five true
        let r = s.incl_equivalences(&i13, &i10).unwrap();
        assert!(r.all_agree && r.statements.iter().all(|&b| b));

        // leaders 15 and 13: difference 2 not in S -> all five false
        let r = s.incl_equivalences(&i15, &i13).unwrap();
        assert!(r.all_agree && r.statements.iter().all(|&b| !b));

        let not_sparse = s.ideal_from_complement(&[0]).unwrap();
        assert!(matches!(
            s.incl_equivalences(&not_sparse, &i10),
            Err(SemigroupError::NotMaxSparse(4))
        ));
    }

    #[test]
    fn clifford_dyck_examples() {
        let s = running_example();
        // a = 4: nongaps in [1,4] = {3}
        assert_eq!(s.clifford_dyck_check(4), (true, true));
        // a = 2g: the second interval is empty
        assert_eq!(s.clifford_dyck_check(2 * s.genus()), (true, true));
    }

    #[test]
    fn genus_counts_match_semigroup_tree() {
        let all = NumericalSemigroup::enumerate_by_genus(8);
        let mut by_genus = [0usize; 9];
        for s in &all {
            by_genus[s.genus() as usize] += 1;
        }
        assert_eq!(by_genus, [1, 1, 2, 4, 7, 12, 23, 39, 67]);
    }

    #[test]
    fn serde_gaps_roundtrip() {
        let s = running_example();
        let j = serde_json::to_string(&s).unwrap();
        assert_eq!(j, r#"{"gaps":[1,2,4]}"#);
        let back: NumericalSemigroup = serde_json::from_str(&j).unwrap();
        assert_eq!(back, s);
    }
}
