//! Random diagrams survive a render/parse round trip in both formats.

use kacgen_core::kac::{kac_diagram, parse_ascii, parse_json, render_ascii, render_json};
use kacgen_core::tag::{Family, TypeTag};
use proptest::prelude::*;

fn diagram_min_rank(family: Family) -> usize {
    match family {
        Family::B | Family::TwoA => 3,
        Family::D => 4,
        _ => 2,
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn rendering_round_trips(
        family in prop::sample::select(vec![
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::TwoA,
            Family::TwoD,
        ]),
        rank_pick in any::<usize>(),
        class_pick in any::<usize>(),
        normalize in any::<bool>(),
    ) {
        let lo = diagram_min_rank(family);
        let rank = lo + rank_pick % (12 - lo + 1);
        let tag = TypeTag::new(family, rank).unwrap();
        let partitions = tag.admissible_partitions();
        let p = &partitions[class_pick % partitions.len()];
        let mut d = kac_diagram(tag, p).unwrap();
        if normalize {
            d = d.normalized().unwrap();
        }
        let ascii = render_ascii(&d).unwrap();
        prop_assert_eq!(&parse_ascii(&ascii).unwrap(), &d, "ascii drifted:\n{}", ascii);
        let json = render_json(&d).unwrap();
        prop_assert_eq!(&parse_json(&json).unwrap(), &d, "json drifted:\n{}", json);
    }
}
