//! Neutrices and external numbers.
//!
//! A neutrix is a convex additive subgroup used as an error term; an
//! external number `a + A` is a representative plus a neutrix. Sums and
//! products follow
//!
//! ```text
//! (a + A) + (b + B) = a + b + max{A, B}
//! (a + A) · (b + B) = ab + max{aB, bA, AB}
//! ```
//!
//! with `max` taken in the inclusion order.

mod external;
pub mod gen;
mod group;
pub mod laws;
pub mod oracle;
mod parse;

pub use external::{canonicalize, infinitely_close, Class, ExternalNumber, SetRelation};
pub use group::{n_max, n_max_all, n_mul, n_scale, Neutrix, NeutrixKind};
pub use parse::parse_external;

pub(crate) use parse::neutrix_literal;
