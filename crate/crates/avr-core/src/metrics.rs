use crate::{AvrError, Image};

/// Index of the candidate closest to `generated` in mean squared pixel
/// distance; ties break to the lowest index.
pub fn nearest_candidate(generated: &Image, candidates: &[Image]) -> Result<usize, AvrError> {
    if candidates.is_empty() {
        return Err(AvrError::invalid("nearest_candidate needs at least one candidate"));
    }
    let mut best = 0;
    let mut best_dist = generated.mean_squared_distance(&candidates[0])?;
    for (i, c) in candidates.iter().enumerate().skip(1) {
        let d = generated.mean_squared_distance(c)?;
        if d < best_dist {
            best = i;
            best_dist = d;
        }
    }
    Ok(best)
}

/// Exact mean of equality indicators.
pub fn selection_accuracy(predictions: &[usize], truths: &[usize]) -> Result<f64, AvrError> {
    if predictions.is_empty() {
        return Err(AvrError::invalid("selection_accuracy needs a nonempty sample"));
    }
    if predictions.len() != truths.len() {
        return Err(AvrError::invalid(format!(
            "prediction/truth length mismatch: {} vs {}",
            predictions.len(),
            truths.len()
        )));
    }
    let correct = predictions.iter().zip(truths).filter(|(p, t)| p == t).count();
    Ok(correct as f64 / predictions.len() as f64)
}
