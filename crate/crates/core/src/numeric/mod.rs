//! Exact scalar arithmetic and truncated power series.

mod bernoulli;
mod gauss;
mod series;

pub use bernoulli::{bernoulli, bernoulli_kind, BernoulliKind};
pub use gauss::{binomial, factorial, rat, rat_int, rat_pow, GaussRat, Rat};
pub use series::{taylor_oracle, NumericError, USeries, DEFAULT_ORDER};
