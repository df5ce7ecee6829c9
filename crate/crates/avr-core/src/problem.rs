use crate::{AvrError, Panel};

/// Selection problem over a 3x3 grid: the last panel position is the answer
/// slot and exactly one candidate completes the panel under the generating
/// rules.
#[derive(Debug, Clone)]
pub struct RpmProblem<I> {
    pub panel: Panel<I>,
    pub candidates: Vec<I>,
    pub answer_index: usize,
}

impl<I: Clone + PartialEq> RpmProblem<I> {
    pub fn new(panel: Panel<I>, candidates: Vec<I>, answer_index: usize) -> Result<Self, AvrError> {
        validate_selection(&panel, &candidates, answer_index)?;
        Ok(RpmProblem { panel, candidates, answer_index })
    }
}

/// Same shape as [`RpmProblem`] but over a 2x3 analogy panel (N = 6).
#[derive(Debug, Clone)]
pub struct VapProblem<I> {
    pub panel: Panel<I>,
    pub candidates: Vec<I>,
    pub answer_index: usize,
}

impl<I: Clone + PartialEq> VapProblem<I> {
    pub fn new(panel: Panel<I>, candidates: Vec<I>, answer_index: usize) -> Result<Self, AvrError> {
        validate_selection(&panel, &candidates, answer_index)?;
        Ok(VapProblem { panel, candidates, answer_index })
    }
}

fn validate_selection<I: Clone + PartialEq>(
    panel: &Panel<I>,
    candidates: &[I],
    answer_index: usize,
) -> Result<(), AvrError> {
    if candidates.is_empty() {
        return Err(AvrError::invalid("candidate list must not be empty"));
    }
    if answer_index >= candidates.len() {
        return Err(AvrError::IndexOutOfBounds { index: answer_index, len: candidates.len() });
    }
    if candidates[answer_index] != *panel.image(panel.len() - 1) {
        return Err(AvrError::invalid(
            "candidates[answer_index] must equal the panel's final image",
        ));
    }
    Ok(())
}

/// Odd-one-out problem: `odd_index` marks the single rule-breaking position.
#[derive(Debug, Clone)]
pub struct O3Problem<I> {
    pub panel: Panel<I>,
    pub odd_index: usize,
}

impl<I: Clone> O3Problem<I> {
    pub fn new(panel: Panel<I>, odd_index: usize) -> Result<Self, AvrError> {
        if panel.len() < 3 {
            return Err(AvrError::invalid("odd-one-out needs a panel of at least 3 images"));
        }
        if odd_index >= panel.len() {
            return Err(AvrError::IndexOutOfBounds { index: odd_index, len: panel.len() });
        }
        Ok(O3Problem { panel, odd_index })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PanelSide {
    Left,
    Right,
}

impl PanelSide {
    pub fn as_str(self) -> &'static str {
        match self {
            PanelSide::Left => "left",
            PanelSide::Right => "right",
        }
    }
}

/// Two panels governed by different rules plus labeled query images.
#[derive(Debug, Clone)]
pub struct SvrtProblem<I> {
    pub left: Panel<I>,
    pub right: Panel<I>,
    pub queries: Vec<(I, PanelSide)>,
}

impl<I: Clone> SvrtProblem<I> {
    pub fn new(
        left: Panel<I>,
        right: Panel<I>,
        queries: Vec<(I, PanelSide)>,
    ) -> Result<Self, AvrError> {
        if left.len() != right.len() {
            return Err(AvrError::invalid(format!(
                "two-panel classification requires equal panel lengths, got {} and {}",
                left.len(),
                right.len()
            )));
        }
        Ok(SvrtProblem { left, right, queries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_problem_checks_answer_consistency() {
        let panel = Panel::new(vec![1u8, 2, 3]).unwrap();
        assert!(RpmProblem::new(panel.clone(), vec![3, 4], 0).is_ok());
        assert!(RpmProblem::new(panel.clone(), vec![4, 3], 0).is_err());
        assert!(RpmProblem::new(panel.clone(), vec![], 0).is_err());
        assert!(RpmProblem::new(panel, vec![3], 5).is_err());
    }

    #[test]
    fn svrt_requires_equal_lengths() {
        let left = Panel::new(vec![1u8, 1]).unwrap();
        let right = Panel::new(vec![2u8, 2, 2]).unwrap();
        assert!(SvrtProblem::new(left, right, vec![]).is_err());
    }
}
