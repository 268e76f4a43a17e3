//! Exact arithmetic for elliptic (twisted) conjugacy classes in classical
//! Weyl groups: explicit lift matrices, characteristic polynomials, and Kac
//! diagrams, with brute-force cross-checks at small rank.

pub mod charpoly;
pub mod cyclotomic;
pub mod error;
pub mod gauss;
pub mod kac;
pub mod lifts;
pub mod matrix;
pub mod monomial;
pub mod partition;
pub mod poly;
pub mod rootdata;
pub mod tag;
pub mod verify;
pub mod weyl;

pub use charpoly::{CharPolyResult, EllParity, Parity, Rep};
pub use cyclotomic::CycInt;
pub use error::{Error, Result};
pub use gauss::GaussInt;
pub use kac::{DiagramReport, KacDiagram, SigmaList};
pub use lifts::{GenKind, LiftMatrix, TwistedElement};
pub use matrix::{Matrix, Scalar};
pub use monomial::Monomial;
pub use partition::Partition;
pub use poly::{FactoredPoly, IntPoly, RootMultiset, Sign};
pub use rootdata::{AffineDiagram, Edge};
pub use tag::{Family, TypeTag};
pub use verify::CaseOutcome;
pub use weyl::{ConjClass, RationalityReport, SignedPermutation};
