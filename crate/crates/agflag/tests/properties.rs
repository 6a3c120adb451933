//! Randomized invariants over semigroups, fields and evaluation rows.

use proptest::prelude::*;

use agflag::curve::CurveModel;
use agflag::semigroup::NumericalSemigroup;
use agflag::Matrix;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// from_generators always yields a set closed under addition whose
    /// complement matches a fresh sieve.
    #[test]
    fn generated_semigroups_are_closed(mut gens in proptest::collection::vec(2u64..30, 1..5)) {
        gens.push(gens[0] + 1); // force gcd 1
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let lim = s.conductor() + 2 * s.multiplicity() + 4;
        for a in s.nongaps_upto(lim) {
            for b in s.nongaps_upto(lim) {
                if a + b <= lim {
                    prop_assert!(s.contains(a + b), "{a} + {b} escapes");
                }
            }
        }
        // every gap is unreachable as a sum of two nonzero nongaps plus gens
        for &g in s.gaps() {
            prop_assert!(!gens.contains(&g));
        }
    }

    /// D(i) is symmetric under x -> lambda_i - x and pinned at 0 and lambda_i.
    #[test]
    fn divisor_profiles_are_symmetric(mut gens in proptest::collection::vec(2u64..20, 1..4), i in 0usize..20) {
        gens.push(gens[0] + 1);
        let s = NumericalSemigroup::from_generators(&gens).unwrap();
        let p = s.profile(i);
        prop_assert!(p.d_set.contains(&0));
        prop_assert!(p.d_set.contains(&p.lambda));
        for &x in &p.d_set {
            prop_assert!(p.d_set.contains(&(p.lambda - x)));
        }
    }

    /// Entrywise products of evaluation rows never leave the span of the
    /// rows with pole order up to the sum (valuations add).
    #[test]
    fn row_products_stay_in_span(
        model_idx in 0usize..3,
        ia in 0usize..6,
        ib in 0usize..6,
    ) {
        let name = ["hermitian_q3", "klein_f8", "hyperelliptic_f7"][model_idx];
        let model = CurveModel::builtin(name).unwrap();
        let em = model.eval_matrix(30);
        prop_assume!(ia < em.rows.len() && ib < em.rows.len());
        let (ra, rb) = (&em.rows[ia], &em.rows[ib]);
        let sum = ra.monomial.pole_order + rb.monomial.pole_order;
        prop_assume!(sum <= 30);
        let f = &model.field;
        let prod: Vec<u16> = ra.values.iter().zip(&rb.values).map(|(&x, &y)| f.mul(x, y)).collect();
        let mut rows: Vec<Vec<u16>> = em
            .rows
            .iter()
            .filter(|r| r.monomial.pole_order <= sum)
            .map(|r| r.values.clone())
            .collect();
        let base = Matrix::from_rows(f.clone(), &rows).rank();
        rows.push(prod);
        prop_assert_eq!(Matrix::from_rows(f.clone(), &rows).rank(), base);
    }
}
