//! Exhaustive small-rank sweeps: every constructed lift lies in its matrix
//! group, and admissible-partition counts match the partition function.

use kacgen_core::lifts::{is_member, lift};
use kacgen_core::partition::Partition;
use kacgen_core::tag::{Family, TypeTag};

const FAMILIES: [Family; 6] = [
    Family::A,
    Family::B,
    Family::C,
    Family::D,
    Family::TwoA,
    Family::TwoD,
];

fn min_rank(family: Family) -> usize {
    match family {
        Family::D | Family::TwoA => 3,
        _ => 2,
    }
}

#[test]
fn every_lift_lies_in_its_group() {
    for family in FAMILIES {
        for rank in min_rank(family)..=10 {
            let tag = TypeTag::new(family, rank).unwrap();
            for p in tag.admissible_partitions() {
                let e = lift(tag, &p).unwrap();
                assert!(is_member(tag, &e.matrix.mat), "lift of {tag} {p} left the group");
            }
        }
    }
}

#[test]
fn admissible_counts_match_the_partition_function() {
    // p(1)..p(12).
    let p = [1usize, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
    for family in [Family::B, Family::C] {
        for rank in 2..=12 {
            let tag = TypeTag::new(family, rank).unwrap();
            assert_eq!(
                tag.admissible_partitions().len(),
                p[rank - 1],
                "count drifted for {tag}"
            );
        }
    }
    // The other families filter: A keeps only the full cycle, D keeps an
    // even number of parts, 2A odd parts, 2D an odd number of parts of l+1.
    assert_eq!(TypeTag::new(Family::A, 12).unwrap().admissible_partitions().len(), 1);
    let d12 = TypeTag::new(Family::D, 12).unwrap().admissible_partitions();
    assert!(d12.iter().all(|q| q.parts().len() % 2 == 0));
    let twoa11 = TypeTag::new(Family::TwoA, 11).unwrap().admissible_partitions();
    assert!(twoa11.iter().all(|q| q.parts().iter().all(|&x| x % 2 == 1)));
    let twod11 = TypeTag::new(Family::TwoD, 11).unwrap().admissible_partitions();
    assert!(twod11.iter().all(|q| q.total() == 12 && q.parts().len() % 2 == 1));
    // Complementary filters partition p(12): D + 2D(rank 11) covers all of it.
    assert_eq!(d12.len() + twod11.len(), 77);
}

#[test]
fn membership_rejects_near_misses() {
    let tag = TypeTag::new(Family::C, 3).unwrap();
    let p = Partition::new(vec![2, 1]).unwrap();
    let e = lift(tag, &p).unwrap();
    // Transposing a symplectic monomial flips the form unless symmetric.
    let t = e.matrix.mat.transpose();
    assert!(is_member(tag, &t.mul(&e.matrix.mat)));
    let b = TypeTag::new(Family::B, 3).unwrap();
    assert!(!is_member(b, &e.matrix.mat), "wrong size must fail");
}
