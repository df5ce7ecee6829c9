use crate::AvrError;

/// An ordered, immutable sequence of panel items.
///
/// Generic over the item type: pixel [`crate::Image`]s in the real pipeline,
/// plain symbols in the exact oracle. Length is fixed at construction and all
/// indexing is 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Panel<I> {
    images: Vec<I>,
}

impl<I: Clone> Panel<I> {
    pub fn new(images: Vec<I>) -> Result<Self, AvrError> {
        if images.len() < 2 {
            return Err(AvrError::invalid(format!(
                "a panel needs at least 2 images, got {}",
                images.len()
            )));
        }
        Ok(Panel { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, index: usize) -> &I {
        &self.images[index]
    }

    pub fn images(&self) -> &[I] {
        &self.images
    }

    /// New panel of equal length with position `index` replaced by `item`.
    pub fn replace(&self, index: usize, item: I) -> Result<Panel<I>, AvrError> {
        if index >= self.len() {
            return Err(AvrError::IndexOutOfBounds { index, len: self.len() });
        }
        let mut images = self.images.clone();
        images[index] = item;
        Ok(Panel { images })
    }

    /// Drops position `index`, recording where the gap was.
    pub fn remove(&self, index: usize) -> Result<Context<I>, AvrError> {
        if index >= self.len() {
            return Err(AvrError::IndexOutOfBounds { index, len: self.len() });
        }
        let mut images = self.images.clone();
        images.remove(index);
        Ok(Context { images, target_slot: index, origin_len: self.len() })
    }

    /// New panel of length `N + 1` whose last image is `item`.
    pub fn append(&self, item: I) -> Panel<I> {
        let mut images = self.images.clone();
        images.push(item);
        Panel { images }
    }

    /// The whole panel as the context of a hypothetical appended item:
    /// `target_slot = N`, `origin_len = N + 1`.
    pub fn as_appended_context(&self) -> Context<I> {
        Context { images: self.images.clone(), target_slot: self.len(), origin_len: self.len() + 1 }
    }
}

/// A panel with one designated position missing.
///
/// `images` holds the retained items in their original order; `target_slot`
/// is the structural position the missing item occupies in the originating
/// panel of length `origin_len`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Context<I> {
    images: Vec<I>,
    target_slot: usize,
    origin_len: usize,
}

impl<I> Context<I> {
    pub fn new(images: Vec<I>, target_slot: usize, origin_len: usize) -> Result<Self, AvrError> {
        if target_slot >= origin_len {
            return Err(AvrError::IndexOutOfBounds { index: target_slot, len: origin_len });
        }
        if images.len() != origin_len - 1 {
            return Err(AvrError::invalid(format!(
                "context must hold origin_len - 1 = {} images, got {}",
                origin_len - 1,
                images.len()
            )));
        }
        Ok(Context { images, target_slot, origin_len })
    }

    pub fn images(&self) -> &[I] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn target_slot(&self) -> usize {
        self.target_slot
    }

    pub fn origin_len(&self) -> usize {
        self.origin_len
    }

    /// Structural position of the `j`-th retained image in the original
    /// panel: positions before the gap keep their index, the rest shift by
    /// one.
    pub fn slot_of(&self, j: usize) -> usize {
        if j < self.target_slot {
            j
        } else {
            j + 1
        }
    }
}

impl<I: Clone> Context<I> {
    /// Reinserts `item` at the missing position, yielding the full panel.
    pub fn complete(&self, item: I) -> Panel<I> {
        let mut images = self.images.clone();
        images.insert(self.target_slot, item);
        Panel { images }
    }
}

/// A structural edit applied to a panel.
#[derive(Debug, Clone)]
pub enum PanelEdit<I> {
    Replace(usize, I),
    Remove(usize),
    Append(I),
}

/// Result of [`edit_panel`]: removal yields a [`Context`], the other edits a
/// [`Panel`].
#[derive(Debug, Clone)]
pub enum EditOutcome<I> {
    Panel(Panel<I>),
    Context(Context<I>),
}

/// Applies `edit` to `panel` without mutating it.
pub fn edit_panel<I: Clone>(panel: &Panel<I>, edit: PanelEdit<I>) -> Result<EditOutcome<I>, AvrError> {
    match edit {
        PanelEdit::Replace(index, item) => Ok(EditOutcome::Panel(panel.replace(index, item)?)),
        PanelEdit::Remove(index) => Ok(EditOutcome::Context(panel.remove(index)?)),
        PanelEdit::Append(item) => Ok(EditOutcome::Panel(panel.append(item))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn panel(n: usize) -> Panel<u8> {
        Panel::new((0..n as u8).collect()).unwrap()
    }

    #[test]
    fn remove_records_the_gap() {
        let ctx = panel(3).remove(2).unwrap();
        assert_eq!(ctx.len(), 2);
        assert_eq!(ctx.target_slot(), 2);
        assert_eq!(ctx.origin_len(), 3);
        assert_eq!(ctx.images(), &[0, 1]);
    }

    #[test]
    fn replace_touches_only_the_target() {
        let p = panel(3);
        let q = p.replace(0, 9).unwrap();
        assert_eq!(q.images(), &[9, 1, 2]);
        assert_eq!(p.images(), &[0, 1, 2]);
    }

    #[test]
    fn append_extends_by_one() {
        let p = panel(4).append(9);
        assert_eq!(p.len(), 5);
        assert_eq!(*p.image(4), 9);
    }

    #[test]
    fn out_of_bounds_edits_name_index_and_len() {
        let err = panel(3).remove(3).unwrap_err();
        assert_eq!(err.to_string(), "index 3 out of bounds for panel of length 3");
        assert!(panel(3).replace(7, 0).is_err());
    }

    #[test]
    fn slot_of_skips_the_gap() {
        let ctx = panel(5).remove(2).unwrap();
        assert_eq!((0..4).map(|j| ctx.slot_of(j)).collect::<Vec<_>>(), vec![0, 1, 3, 4]);
    }

    #[test]
    fn complete_restores_the_panel() {
        let p = panel(5);
        for i in 0..5 {
            let ctx = p.remove(i).unwrap();
            assert_eq!(ctx.complete(*p.image(i)), p);
        }
    }

    #[test]
    fn edit_panel_dispatches() {
        match edit_panel(&panel(3), PanelEdit::Remove(1)).unwrap() {
            EditOutcome::Context(c) => assert_eq!(c.target_slot(), 1),
            EditOutcome::Panel(_) => panic!("remove must yield a context"),
        }
        match edit_panel(&panel(3), PanelEdit::Append(7)).unwrap() {
            EditOutcome::Panel(p) => assert_eq!(p.len(), 4),
            EditOutcome::Context(_) => panic!("append must yield a panel"),
        }
    }
}
