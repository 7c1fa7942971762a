//! Randomized invariants: ring axioms for the series engine and symmetry
//! properties of the LR machinery.

use lrsq::lr::lr_multi_all;
use lrsq::partition::{Partition, PartitionTuple};
use lrsq::series::TruncatedSeries;
use num_bigint::BigInt;
use proptest::prelude::*;

const DEG: u32 = 6;

fn arb_series(num_vars: usize) -> impl Strategy<Value = TruncatedSeries> {
    let exp = prop::collection::vec(0u32..=DEG, num_vars);
    prop::collection::vec((exp, -5i64..=5), 0..8).prop_map(move |terms| {
        let mut s = TruncatedSeries::zero(num_vars, DEG);
        for (e, c) in terms {
            let prev = s.coefficient(&e).unwrap_or_default();
            s.set_coefficient(e, prev + BigInt::from(c));
        }
        s
    })
}

fn arb_partition(max_size: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=max_size, 0..4).prop_map(Partition::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_distributes(
        a in arb_series(2),
        b in arb_series(2),
        c in arb_series(2),
    ) {
        let lhs = a.add(&b).unwrap().mul(&c).unwrap();
        let rhs = a.mul(&c).unwrap().add(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_commutes(a in arb_series(2), b in arb_series(2)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
    }

    #[test]
    fn geometric_inverse_cancels(a in arb_series(1)) {
        // f with zero constant term: (1 + f + f² + ...)·(1 − f) = 1
        let mut f = a.clone();
        f.set_coefficient(vec![0], BigInt::from(0));
        let inv = f.inverse_one_minus().unwrap();
        let one_minus = TruncatedSeries::one(1, DEG).sub(&f).unwrap();
        prop_assert_eq!(inv.mul(&one_minus).unwrap(), TruncatedSeries::one(1, DEG));
    }

    #[test]
    fn tensor_decomposition_is_order_free(
        mut factors in prop::collection::vec(arb_partition(3), 1..4),
    ) {
        let total: u32 = factors.iter().map(|p| p.size()).sum();
        prop_assume!(total <= 6);
        let before = lr_multi_all(&PartitionTuple::new(factors.clone()));
        factors.reverse();
        let after = lr_multi_all(&PartitionTuple::new(factors));
        prop_assert_eq!(before, after);
    }
}
