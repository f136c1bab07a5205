//! Exact wall-and-chamber geometry for lattices of signature `(1, n-1)`.
//!
//! Given a lattice, a rational polyhedral cone inside the closure of the
//! positive cone and a bound `N`, [`wall::walls_meeting_cone`] returns every
//! lattice vector `v` with `(v, v) > -N` whose orthogonal hyperplane meets
//! the cone in a point of positive square. Around that sit exact cone
//! machinery ([`cone`]), chamber subdivision ([`chamber`]), Dirichlet domains
//! and chamber-orbit classification for isometry groups ([`group`]), and a
//! Mukai-lattice wall source ([`mukai`]).
//!
//! All decisions use exact integer and rational arithmetic. The modules are
//! generic over the integer backend ([`LatticeInt`]); the aliases at the
//! crate root fix it to [`BigInt`].

pub mod chamber;
pub mod cone;
pub mod error;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod mukai;
pub mod scalar;
pub mod shortvec;
pub mod wall;

pub use error::{Error, Result};
pub use lattice::ConePosition;
pub use scalar::LatticeInt;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Default exact integer backend.
pub type Int = BigInt;
/// Default exact rational type.
pub type Rational = BigRational;

pub type Lattice = lattice::Lattice<Int>;
pub type Sublattice = lattice::Sublattice<Int>;
pub type RationalCone = cone::RationalCone<Int>;
pub type Wall = wall::Wall<Int>;
pub type WallQuery = wall::WallQuery<Int>;
pub type Chamber = chamber::Chamber<Int>;
pub type Subdivision = chamber::Subdivision<Int>;
pub type IsometryGroup = group::IsometryGroup<Int>;
pub type GroupElement = group::GroupElement<Int>;
pub type DirichletDomain = group::DirichletDomain<Int>;
pub type FacePairing = group::FacePairing<Int>;
pub type MukaiSetup = mukai::MukaiSetup<Int>;
pub type SigmaWall = mukai::SigmaWall<Int>;
