//! Randomized identities for factored polynomials: unit evaluations match
//! the expansion, and the root-multiset reconstruction preserves it.

use kacgen_core::poly::{FactoredPoly, Sign};
use num_bigint::BigInt;
use proptest::prelude::*;

fn factored() -> impl Strategy<Value = FactoredPoly> {
    prop::collection::vec(((1u64..=10), any::<bool>(), (1i64..=3)), 1..=5).prop_map(|fs| {
        FactoredPoly::from_factors(fs.into_iter().map(|(k, plus, mult)| {
            (k, if plus { Sign::Plus } else { Sign::Minus }, mult)
        }))
    })
}

// Classes {1,2,3,4,6,8}: a largest-order-first greedy would spend t^8 - 1
// (eating classes 1,2,4,8) and strand {3,6}; reconstruction must instead
// peel the forced factors.
#[test]
fn reconstruction_handles_interleaved_class_covers() {
    let f = FactoredPoly::from_factors([
        (2, Sign::Plus, 1),
        (3, Sign::Minus, 1),
        (3, Sign::Plus, 1),
        (4, Sign::Plus, 1),
    ]);
    let back = f.canonical().unwrap();
    assert_eq!(back.expand().unwrap(), f.expand().unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn unit_evaluations_match_the_expansion(f in factored()) {
        let expanded = f.expand().unwrap();
        for x in [1i64, -1] {
            let (num, den) = f.eval_signed_unit(x);
            prop_assert_eq!(expanded.eval(&BigInt::from(x)) * den, num);
        }
    }

    #[test]
    fn root_multiset_reconstruction_preserves_the_expansion(f in factored()) {
        let back = f.canonical().unwrap();
        prop_assert_eq!(back.expand().unwrap(), f.expand().unwrap());
    }
}
