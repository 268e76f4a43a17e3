//! Verification campaigns over the class inventory: worked-example goldens,
//! injectivity sweeps for characteristic polynomials and Kac diagrams,
//! matrix-oracle agreement, inversion round trips, Weyl-group cross-checks,
//! lift orders, and rationality. Every campaign returns one named pass/fail
//! case per unit of work, in a deterministic order.

use rayon::prelude::*;

use crate::charpoly::{
    canonical_m, formula_charpoly, matrix_oracle_charpoly, recover_p, twoa_sigma_charpoly_check,
    EllParity,
};
use crate::error::Result;
use crate::kac::{kac_diagram, verify_diagram};
use crate::lifts::{element_order, lift, order_mod_center};
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::tag::{Family, TypeTag};
use crate::weyl;

/// One verified fact: a stable name, the outcome, and a short note that
/// explains failures (or records counts on success).
#[derive(Clone, Debug)]
pub struct CaseOutcome {
    pub name: String,
    pub passed: bool,
    pub note: String,
}

fn case(name: String, passed: bool, note: String) -> CaseOutcome {
    CaseOutcome { name, passed, note }
}

pub fn all_passed(cases: &[CaseOutcome]) -> bool {
    cases.iter().all(|c| c.passed)
}

/// Smallest rank the tag constructor accepts for the family.
pub fn group_min_rank(family: Family) -> usize {
    match family {
        Family::D | Family::TwoA => 3,
        _ => 2,
    }
}

/// Smallest rank with an affine diagram in the tables.
pub fn diagram_min_rank(family: Family) -> usize {
    match family {
        Family::B | Family::TwoA => 3,
        Family::D => 4,
        _ => 2,
    }
}

fn ranks(min: usize, max_rank: usize) -> std::ops::RangeInclusive<usize> {
    min..=max_rank.max(min - 1)
}

fn pt(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).expect("golden partition is valid")
}

/// Recomputes the worked-example Kac diagrams and compares labels exactly.
pub fn golden_diagrams() -> Result<Vec<CaseOutcome>> {
    // Raw label vectors: gamma_0 first, then the chain, branch nodes at
    // their diagram indices.
    let raw: [(Family, usize, &[u64], &[u64]); 7] = [
        (Family::B, 14, &[5, 4, 4, 1], &[0, 0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0, 0]),
        (Family::C, 13, &[6, 5, 2], &[10, 1, 9, 0, 3, 7, 5, 5, 7, 3, 0, 9, 1, 10]),
        (Family::C, 3, &[2, 1], &[2, 1, 1, 2]),
        (Family::D, 14, &[5, 4, 4, 1], &[0, 0, 4, 1, 0, 3, 2, 0, 2, 3, 0, 1, 4, 0, 0]),
        (Family::TwoA, 20, &[7, 5, 5, 3], &[0, 0, 15, 6, 0, 9, 5, 7, 0, 3, 15]),
        (Family::TwoA, 25, &[9, 5, 5, 3, 3], &[5, 2, 0, 3, 0, 0, 5, 1, 0, 4, 5, 0, 0]),
        (Family::TwoD, 11, &[5, 4, 3], &[0, 12, 3, 5, 4, 6, 6, 4, 5, 3, 12, 0]),
    ];
    let mut out = Vec::new();
    for (family, rank, parts, want) in raw {
        let tag = TypeTag::new(family, rank)?;
        let p = pt(parts);
        let got = kac_diagram(tag, &p)?.labels;
        out.push(case(
            format!("{tag} {p} raw labels"),
            got == want,
            format!("got {got:?}"),
        ));
    }
    // Normalized goldens: the rescaled C-type Coxeter diagram and the
    // all-ones A-type diagrams.
    let tag = TypeTag::new(Family::C, 3)?;
    let got = kac_diagram(tag, &pt(&[3]))?.normalized()?.labels;
    out.push(case(
        format!("{tag} (3) normalized labels"),
        got == [1, 1, 1, 1],
        format!("got {got:?}"),
    ));
    for l in 2..=9usize {
        let tag = TypeTag::new(Family::A, l)?;
        let got = kac_diagram(tag, &pt(&[l as u64]))?.normalized()?.labels;
        out.push(case(
            format!("{tag} ({l}) normalized labels all ones"),
            got == vec![1; l],
            format!("got {got:?}"),
        ));
    }
    Ok(out)
}

/// Expands the characteristic polynomial of every admissible partition at
/// every rank of the family up to the cap and reports, per partition,
/// whether it is distinct from all others at the same rank.
pub fn charpoly_injectivity(family: Family, max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for rank in ranks(group_min_rank(family), max_rank) {
        let tag = TypeTag::new(family, rank)?;
        let ps = tag.admissible_partitions();
        let polys: Vec<IntPoly> = ps
            .par_iter()
            .map(|p| Ok(formula_charpoly(tag, p)?.expanded))
            .collect::<Result<_>>()?;
        for (i, p) in ps.iter().enumerate() {
            let clash = polys
                .iter()
                .enumerate()
                .find(|(j, q)| *j != i && **q == polys[i]);
            out.push(case(
                format!("{tag} {p} charpoly distinct"),
                clash.is_none(),
                match clash {
                    Some((j, _)) => format!("collides with {}", ps[j]),
                    None => String::new(),
                },
            ));
        }
    }
    Ok(out)
}

/// Same sweep for normalized Kac diagrams: per partition, the normalized
/// label vector must be distinct from every other at the same rank.
pub fn diagram_injectivity(family: Family, max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for rank in ranks(diagram_min_rank(family), max_rank) {
        let tag = TypeTag::new(family, rank)?;
        let ps = tag.admissible_partitions();
        let labels: Vec<Vec<u64>> = ps
            .par_iter()
            .map(|p| Ok(kac_diagram(tag, p)?.normalized()?.labels))
            .collect::<Result<_>>()?;
        for (i, p) in ps.iter().enumerate() {
            let clash = labels
                .iter()
                .enumerate()
                .find(|(j, q)| *j != i && **q == labels[i]);
            out.push(case(
                format!("{tag} {p} normalized diagram distinct"),
                clash.is_none(),
                match clash {
                    Some((j, _)) => format!("collides with {}", ps[j]),
                    None => String::new(),
                },
            ));
        }
    }
    Ok(out)
}

/// Runs the per-diagram identity checks (order recovery from the labels,
/// barycentric alcove point, coweight expansion) on every raw diagram of
/// the sweep.
pub fn structural_identities(family: Family, max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for rank in ranks(diagram_min_rank(family), max_rank) {
        let tag = TypeTag::new(family, rank)?;
        let reports: Vec<(Partition, Vec<String>)> = tag
            .admissible_partitions()
            .into_par_iter()
            .map(|p| {
                let report = verify_diagram(&kac_diagram(tag, &p)?)?;
                let failed: Vec<String> =
                    report.failed().into_iter().map(str::to_string).collect();
                Ok((p, failed))
            })
            .collect::<Result<_>>()?;
        for (p, failed) in reports {
            out.push(case(
                format!("{tag} {p} diagram identities"),
                failed.is_empty(),
                failed.join(", "),
            ));
        }
    }
    Ok(out)
}

/// Compares the closed-form characteristic polynomial against the
/// matrix-built oracle for every admissible partition up to the cap.
pub fn oracle_agreement(family: Family, max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for rank in ranks(group_min_rank(family), max_rank) {
        let tag = TypeTag::new(family, rank)?;
        let results: Vec<(Partition, bool)> = tag
            .admissible_partitions()
            .into_par_iter()
            .map(|p| {
                let formula = formula_charpoly(tag, &p)?;
                let oracle = matrix_oracle_charpoly(&lift(tag, &p)?)?;
                Ok((p, formula.expanded == oracle.expanded))
            })
            .collect::<Result<_>>()?;
        for (p, passed) in results {
            out.push(case(
                format!("{tag} {p} formula matches matrix oracle"),
                passed,
                String::new(),
            ));
        }
    }
    Ok(out)
}

/// Recovers the partition back from its expanded characteristic polynomial
/// for every odd-part partition with total at most `max_total`.
pub fn recover_round_trip(max_total: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for l in group_min_rank(Family::TwoA)..=max_total {
        let tag = TypeTag::new(Family::TwoA, l)?;
        let results: Vec<(Partition, Option<Partition>)> = tag
            .admissible_partitions()
            .into_par_iter()
            .map(|p| {
                let q = formula_charpoly(tag, &p)?;
                let (_, recovered) = recover_p(&q)?;
                Ok((p, Some(recovered)))
            })
            .collect::<Result<_>>()?;
        for (p, recovered) in results {
            let passed = recovered.as_ref() == Some(&p);
            out.push(case(
                format!("{tag} {p} recovered from charpoly"),
                passed,
                match recovered {
                    Some(r) if !passed => format!("got {r}"),
                    _ => String::new(),
                },
            ));
        }
    }
    Ok(out)
}

/// Checks the sigma-diagonal block decomposition of the twisted adjoint
/// charpoly against both the closed formula and the dense oracle for every
/// odd-part partition with total at most `max_total`.
pub fn sigma_block_consistency(max_total: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for l in group_min_rank(Family::TwoA)..=max_total {
        let tag = TypeTag::new(Family::TwoA, l)?;
        let variant = if l % 2 == 0 {
            EllParity::EvenEll
        } else {
            EllParity::OddEll
        };
        let results: Vec<(Partition, Result<bool>)> = tag
            .admissible_partitions()
            .into_par_iter()
            .map(|p| {
                let r = twoa_sigma_charpoly_check(&p, variant);
                (p, r)
            })
            .collect();
        for (p, r) in results {
            let (passed, note) = match r {
                Ok(true) => (true, String::new()),
                Ok(false) => (false, "check returned false".to_string()),
                Err(e) => (false, e.to_string()),
            };
            out.push(case(
                format!("{tag} {p} block decomposition consistent"),
                passed,
                note,
            ));
        }
    }
    Ok(out)
}

/// Brute-force Weyl-group cross-checks: elliptic class counts match the
/// partition inventory, lifts land injectively on the elliptic classes, and
/// the two ellipticity criteria agree element by element on the untwisted
/// groups.
pub fn weyl_cross_checks(max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in ranks(group_min_rank(family), max_rank) {
            let tag = TypeTag::new(family, rank)?;
            let admissible = tag.admissible_partitions();
            let classes = weyl::twisted_conjugacy_classes(tag)?;
            let elliptic = classes.iter().filter(|c| c.elliptic).count();
            out.push(case(
                format!("{tag} elliptic class count"),
                elliptic == admissible.len(),
                format!("{elliptic} elliptic classes, {} partitions", admissible.len()),
            ));

            let mut reps = Vec::new();
            let mut note = String::new();
            for p in &admissible {
                match weyl::class_of_lift(tag, p) {
                    Ok(class) => reps.push(class.representative),
                    Err(e) => note = e.to_string(),
                }
            }
            let total = reps.len();
            reps.sort();
            reps.dedup();
            out.push(case(
                format!("{tag} lift classes injective"),
                note.is_empty() && total == admissible.len() && reps.len() == total,
                note,
            ));
        }
    }
    for family in [Family::A, Family::B, Family::C, Family::D] {
        for rank in ranks(group_min_rank(family), max_rank) {
            let tag = TypeTag::new(family, rank)?;
            let elements = weyl::enumerate_group(tag)?;
            let disagreements = elements
                .par_iter()
                .filter(|w| {
                    let (parabolic, fixed) =
                        weyl::ellipticity_predicates(w, false).expect("rank under cap");
                    parabolic != fixed
                })
                .count();
            out.push(case(
                format!("{tag} ellipticity criteria agree"),
                disagreements == 0,
                format!("{disagreements} of {} elements disagree", elements.len()),
            ));
        }
    }
    Ok(out)
}

/// The order of every lift must equal the canonical order attached to its
/// type and partition.
pub fn order_checks(family: Family, max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for rank in ranks(group_min_rank(family), max_rank) {
        let tag = TypeTag::new(family, rank)?;
        let results: Vec<(Partition, u64, u64, u64)> = tag
            .admissible_partitions()
            .into_par_iter()
            .map(|p| {
                let e = lift(tag, &p)?;
                let group = element_order(&e)?;
                let ad = order_mod_center(&e)?;
                let want = canonical_m(tag, &p);
                Ok((p, group, ad, want))
            })
            .collect::<Result<_>>()?;
        for (p, group, ad, want) in results {
            // The canonical m is the order as an automorphism for 2A, where
            // the lift may square into the center of SL; everywhere else it
            // is the plain group order.
            let passed = if family == Family::TwoA {
                ad == want && group % want == 0 && (2 * want) % group == 0
            } else {
                group == want
            };
            out.push(case(
                format!("{tag} {p} lift order"),
                passed,
                format!("group order {group}, mod center {ad}, canonical {want}"),
            ));
        }
    }
    Ok(out)
}

/// Exhaustive power-map rationality sweep over whole Weyl groups.
pub fn rationality_sweep(family: Family, max_rank: usize) -> Result<Vec<CaseOutcome>> {
    let mut out = Vec::new();
    for rank in ranks(group_min_rank(family), max_rank) {
        let tag = TypeTag::new(family, rank)?;
        let report = weyl::check_rationality(tag)?;
        out.push(case(
            format!("{tag} power maps preserve conjugacy"),
            report.rational,
            match report.counterexample {
                Some((w, j)) => format!("w = {w:?}, j = {j}"),
                None => String::new(),
            },
        ));
    }
    Ok(out)
}
