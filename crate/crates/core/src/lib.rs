//! Exact symbolic engine for quantization maps on su(2).
//!
//! Everything here is computed over Gaussian rationals; no floating point
//! enters at any stage. The crate provides
//!
//! - [`numeric`]: Gaussian rationals, Bernoulli numbers, and truncated
//!   power series in the formal variable `u = pi/k`,
//! - [`liesym`]: the symmetric algebra S(su(2)) with its derivative
//!   calculus and the Duflo factor `j^{1/2}(del)`,
//! - [`uea`]: the universal enveloping algebra U(su(2)) in the PBW basis,
//! - [`quantmaps`]: symmetric quantization, the Duflo map, and three
//!   extensions defined on the radial subspace,
//! - [`rep`]: the exact spin-1/2 representation and 2x2 tensor products,
//! - [`expmap`]: the quantized exponential map, intertwiner-basis
//!   decompositions, and the Kauffman skein check,
//! - [`expr`]: a small expression language for elements of S(su(2)),
//! - [`render`]: JSON, LaTeX, and plain-text emitters.

pub mod expmap;
pub mod expr;
pub mod liesym;
pub mod numeric;
pub mod quantmaps;
pub mod render;
pub mod rep;
pub mod uea;

pub use expmap::{Mat4Series, SkeinReport};
pub use liesym::{LieData, SymPoly};
pub use numeric::{GaussRat, Rat, USeries};
pub use quantmaps::MapKind;
pub use rep::{Mat2, Mat4};
pub use uea::UEAElem;
