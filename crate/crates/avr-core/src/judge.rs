//! Training-free judgment functions.
//!
//! Each function reshapes one task into predictability estimation and applies
//! an argmax/argmin. Ties always break toward the lowest index (LEFT for the
//! two-panel task), which keeps every judgment deterministic.

use crate::{AvrError, Panel, PanelSide, PredictabilityEstimator, SvrtProblem};

#[derive(Debug, Clone, PartialEq)]
pub struct SelectionOutcome {
    pub chosen_index: usize,
    /// Raw log-predictability per candidate, in candidate order.
    pub scores: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct O3Outcome {
    pub odd_index: usize,
    /// Log-predictability of each panel image given the rest, in position order.
    pub scores: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SvrtVerdict {
    pub label: PanelSide,
    pub score_left: f64,
    pub score_right: f64,
}

/// Selects the candidate that best completes the panel's final position:
/// the missing image is the one with the highest predictability given the
/// remaining `N - 1` images. Serves both the 3x3 and 2x3 selection tasks.
pub fn solve_selection<I: Clone, E: PredictabilityEstimator<I>>(
    panel: &Panel<I>,
    candidates: &[I],
    estimator: &E,
) -> Result<SelectionOutcome, AvrError> {
    if candidates.is_empty() {
        return Err(AvrError::invalid("selection needs at least one candidate"));
    }
    let context = panel.remove(panel.len() - 1)?;
    let scores = estimator.score_many(&context, candidates)?;
    Ok(SelectionOutcome { chosen_index: argmax(&scores), scores })
}

/// Finds the odd image: the position whose image is least predictable from
/// the other `N - 1` images.
pub fn solve_o3<I: Clone, E: PredictabilityEstimator<I>>(
    panel: &Panel<I>,
    estimator: &E,
) -> Result<O3Outcome, AvrError> {
    if panel.len() < 3 {
        return Err(AvrError::invalid("odd-one-out needs a panel of at least 3 images"));
    }
    let mut scores = Vec::with_capacity(panel.len());
    for i in 0..panel.len() {
        let context = panel.remove(i)?;
        scores.push(estimator.score(&context, panel.image(i))?);
    }
    Ok(O3Outcome { odd_index: argmin(&scores), scores })
}

/// Classifies each query image into the panel it extends more predictably:
/// the full panel acts as the context of a hypothetical appended position.
pub fn solve_svrt<I: Clone, E: PredictabilityEstimator<I>>(
    problem: &SvrtProblem<I>,
    estimator: &E,
) -> Result<Vec<SvrtVerdict>, AvrError> {
    if problem.left.len() != problem.right.len() {
        return Err(AvrError::invalid(format!(
            "two-panel classification requires equal panel lengths, got {} and {}",
            problem.left.len(),
            problem.right.len()
        )));
    }
    let left_ctx = problem.left.as_appended_context();
    let right_ctx = problem.right.as_appended_context();
    let queries: Vec<I> = problem.queries.iter().map(|(x, _)| x.clone()).collect();
    let left_scores = estimator.score_many(&left_ctx, &queries)?;
    let right_scores = estimator.score_many(&right_ctx, &queries)?;
    Ok(left_scores
        .into_iter()
        .zip(right_scores)
        .map(|(score_left, score_right)| SvrtVerdict {
            label: if score_left >= score_right { PanelSide::Left } else { PanelSide::Right },
            score_left,
            score_right,
        })
        .collect())
}

fn argmax(scores: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = i;
        }
    }
    best
}

fn argmin(scores: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate().skip(1) {
        if s < scores[best] {
            best = i;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Context;

    /// Scores a symbol by a fixed per-symbol table; context-independent.
    struct TableEstimator {
        table: Vec<f64>,
    }

    impl PredictabilityEstimator<u8> for TableEstimator {
        fn score(&self, _context: &Context<u8>, x: &u8) -> Result<f64, AvrError> {
            Ok(self.table[*x as usize])
        }
    }

    #[test]
    fn identical_candidates_tie_break_to_lowest_index() {
        let panel = Panel::new(vec![0u8, 0, 0]).unwrap();
        let est = TableEstimator { table: vec![-1.0, -1.0] };
        let out = solve_selection(&panel, &[0u8, 0, 0], &est).unwrap();
        assert_eq!(out.chosen_index, 0);
    }

    #[test]
    fn selection_rejects_empty_candidates() {
        let panel = Panel::new(vec![0u8, 0]).unwrap();
        let est = TableEstimator { table: vec![0.0] };
        assert!(solve_selection(&panel, &[], &est).is_err());
    }

    #[test]
    fn o3_ties_break_to_lowest_index() {
        let panel = Panel::new(vec![1u8, 1, 1, 1]).unwrap();
        let est = TableEstimator { table: vec![0.0, -2.0] };
        let out = solve_o3(&panel, &est).unwrap();
        assert_eq!(out.odd_index, 0);
    }

    #[test]
    fn svrt_equal_scores_label_left() {
        let left = Panel::new(vec![0u8, 0]).unwrap();
        let right = Panel::new(vec![1u8, 1]).unwrap();
        let problem = SvrtProblem::new(left, right, vec![(2u8, PanelSide::Left)]).unwrap();
        let est = TableEstimator { table: vec![-1.0, -1.0, -3.0] };
        let verdicts = solve_svrt(&problem, &est).unwrap();
        assert_eq!(verdicts[0].label, PanelSide::Left);
        assert_eq!(verdicts[0].score_left, verdicts[0].score_right);
    }

    #[test]
    fn svrt_checks_panel_lengths() {
        let left = Panel::new(vec![0u8, 0]).unwrap();
        let right = Panel::new(vec![1u8, 1, 1]).unwrap();
        let problem = SvrtProblem { left, right, queries: vec![] };
        let est = TableEstimator { table: vec![0.0, 0.0] };
        assert!(solve_svrt(&problem, &est).is_err());
    }
}
