//! Verification workbench for central extensions of metacyclic p-groups.
//!
//! The crate builds the three-generator presented groups exactly (collection
//! normal forms), checks their structural claims (consistency, commutator
//! and center formulas, unit-normalization isomorphisms, order and exponent
//! formulas), realizes their monomial actions on Laurent variables, and runs
//! a catalog of declarative scenarios that re-verify each construction chain
//! step by step: eigenvector relations in the regular representation,
//! induced actions under variable changes, fixed-monomial lattices,
//! quotient reductions, and randomized rational-function identities.

pub mod group;
pub mod hypothesis;
pub mod lattice;
pub mod monomial;
pub mod num;
pub mod numtheory;
pub mod params;
pub mod props;
pub mod ratexpr;
pub mod regrep;
pub mod report;
pub mod scalar;
pub mod scenario;
pub mod table;

pub mod catalog;
pub mod suite;

pub use group::{Gen, Group, GroupElement, Subgroup, Word};
pub use params::{build_family, validate_params, FamilyFree, FamilyTag, GroupParams};
pub use report::{CheckRow, Status, VerificationReport};
