use crate::{AvrError, Context};

/// The single quantity every judgment function consumes: the log of the
/// conditional probability that the missing panel item is `x` given the
/// retained context.
///
/// Implementations must be deterministic and must not mutate internal state
/// while scoring; for normalized models the returned value is `<= 0`.
pub trait PredictabilityEstimator<I> {
    fn score(&self, context: &Context<I>, x: &I) -> Result<f64, AvrError>;

    /// Scores several candidates against one shared context. The default
    /// delegates to [`score`](Self::score); implementations may share the
    /// context-dependent work as long as the results are identical.
    fn score_many(&self, context: &Context<I>, xs: &[I]) -> Result<Vec<f64>, AvrError> {
        xs.iter().map(|x| self.score(context, x)).collect()
    }
}

impl<I, E: PredictabilityEstimator<I> + ?Sized> PredictabilityEstimator<I> for &E {
    fn score(&self, context: &Context<I>, x: &I) -> Result<f64, AvrError> {
        (**self).score(context, x)
    }

    fn score_many(&self, context: &Context<I>, xs: &[I]) -> Result<Vec<f64>, AvrError> {
        (**self).score_many(context, xs)
    }
}
