//! Young-diagram calculus for Schubert classes of Grassmannians and their
//! isotropic analogues, and the combinatorics of compatible partition pairs
//! `(λ, μ)` that index cohomological representations of unitary, symplectic
//! and orthogonal groups.

pub mod cli;
pub mod cohomology;
pub mod error;
pub mod lr;
pub mod partition;
pub mod shimura;
pub mod skewshape;
pub mod tableau;

pub use error::{Error, ParseError, Result};
pub use partition::{enumerate_in_rectangle, Partition, Rectangle};
pub use skewshape::{is_compatible_pair, RectangleChain, SkewShape};
pub use tableau::Tableau;
