//! Group family tags: classical types A, B, C, D and the twisted types 2A, 2D.

use crate::error::{Error, Result};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// One of the six supported families of (possibly twisted) classical groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    TwoA,
    TwoD,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::TwoA,
        Family::TwoD,
    ];

    /// Order of the pinned diagram automorphism: 1 for untwisted, 2 for twisted.
    pub fn twist_order(self) -> u64 {
        match self {
            Family::A | Family::B | Family::C | Family::D => 1,
            Family::TwoA | Family::TwoD => 2,
        }
    }

    pub fn is_twisted(self) -> bool {
        self.twist_order() == 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::TwoA => "2A",
            Family::TwoD => "2D",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "2A" | "TWOA" => Ok(Family::TwoA),
            "2D" | "TWOD" => Ok(Family::TwoD),
            other => Err(format!(
                "unknown family {other:?}; expected one of A, B, C, D, 2A, 2D"
            )),
        }
    }
}

/// A family together with the rank parameter from the corresponding matrix
/// realization: SL_l (A, 2A), SO_{2l+1} (B), Sp_{2l} (C), SO_{2l} (D),
/// SO_{2l+2} (2D).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TypeTag {
    pub family: Family,
    pub rank: usize,
}

impl TypeTag {
    /// Validates the family-specific lower bound on the rank.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let min = match family {
            Family::A | Family::B | Family::C | Family::TwoD => 2,
            Family::D => 3,
            Family::TwoA => 3,
        };
        if rank < min {
            return Err(Error::UnsupportedType {
                tag: family.name().to_string(),
                rank,
                reason: format!("family {family} requires rank >= {min}"),
            });
        }
        Ok(TypeTag { family, rank })
    }

    pub fn twist_order(&self) -> u64 {
        self.family.twist_order()
    }

    /// Dimension of the standard matrix representation.
    pub fn matrix_size(&self) -> usize {
        let l = self.rank;
        match self.family {
            Family::A | Family::TwoA => l,
            Family::B => 2 * l + 1,
            Family::C | Family::D => 2 * l,
            Family::TwoD => 2 * l + 2,
        }
    }

    /// The integer the admissible partitions sum to (l, except l+1 for 2D).
    pub fn partition_total(&self) -> u64 {
        match self.family {
            Family::TwoD => self.rank as u64 + 1,
            _ => self.rank as u64,
        }
    }

    /// Whether `p` indexes an elliptic class of this type.
    ///
    /// A: only the single part (l). B, C: any partition of l. D: partitions
    /// of l with an even number of parts. 2A: partitions of l into odd
    /// parts. 2D: partitions of l+1 with an odd number of parts.
    pub fn is_admissible(&self, p: &Partition) -> bool {
        if p.total() != self.partition_total() {
            return false;
        }
        match self.family {
            Family::A => p.mu() == 1,
            Family::B | Family::C => true,
            Family::D => p.mu() % 2 == 0,
            Family::TwoA => p.parts().iter().all(|&x| x % 2 == 1),
            Family::TwoD => p.mu() % 2 == 1,
        }
    }

    /// Validates `p` against `is_admissible`, reporting the violated constraint.
    pub fn check_admissible(&self, p: &Partition) -> Result<()> {
        if self.is_admissible(p) {
            return Ok(());
        }
        let reason = if p.total() != self.partition_total() {
            format!(
                "parts must sum to {} (got {})",
                self.partition_total(),
                p.total()
            )
        } else {
            match self.family {
                Family::A => "type A admits only the single-part partition".to_string(),
                Family::D => "type D requires an even number of parts".to_string(),
                Family::TwoA => "type 2A requires all parts odd".to_string(),
                Family::TwoD => "type 2D requires an odd number of parts".to_string(),
                Family::B | Family::C => unreachable!("B and C admit every partition"),
            }
        };
        Err(Error::InadmissiblePartition {
            tag: self.to_string(),
            partition: p.to_string(),
            reason,
        })
    }

    /// All admissible partitions, in lexicographically descending order.
    pub fn admissible_partitions(&self) -> Vec<Partition> {
        Partition::all_of(self.partition_total())
            .into_iter()
            .filter(|p| self.is_admissible(p))
            .collect()
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}
