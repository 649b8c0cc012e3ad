//! Reproducible, mergeable Monte Carlo estimates of link metrics.
//!
//! Sample `j` of a run draws its `N` element gains from stream `j` of the
//! run's seed, so any partition of the stream ids across workers or across
//! separate runs sees exactly the same samples. Sums are kept exactly and
//! rounded once on read, which makes pooled results independent of the
//! partition down to the last bit.

mod estimate;
mod exact_sum;

pub use estimate::{
    confidence_interval, estimate, estimate_grid, estimate_span, merge, parameter_fingerprint, McEstimate, MetricKind,
    CHUNK_STREAMS, MIN_SAMPLES,
};
pub use exact_sum::ExactSum;
