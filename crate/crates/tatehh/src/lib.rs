//! Exact-arithmetic machinery for the Tate-Hochschild cochain complex of a
//! finite group algebra `kG`, its additive decomposition into centralizer
//! Tate complexes, and the A-infinity operations obtained by homotopy
//! transfer along that decomposition.
//!
//! Everything is computed on explicit sparse bases over exact fields
//! (rationals or prime fields), so every identity the library claims can be
//! checked exhaustively at small group orders. The `verify` module packages
//! those checks into runnable report suites; `examples/` walks through the
//! main capabilities one at a time.

pub mod abelian;
pub mod ainf;
pub mod decomp;
pub mod group;
pub mod products;
pub mod scalar;
pub mod tate;
pub mod transfer;
pub mod trees;
pub mod verify;

pub use decomp::DecomposedElement;
pub use group::{ConjugacyData, FiniteGroup};
pub use scalar::{FieldSpec, Scalar};
pub use tate::TateElement;
pub use trees::PlanarTree;
