use super::{check_sizes, ActionOperad, GenWord, OperadError, Verdict};
use crate::perm::Perm;

/// The terminal operad: one element `eₙ` per arity. Elements are their arity.
#[derive(Debug, Clone, Copy, Default)]
pub struct Trivial;

impl ActionOperad for Trivial {
    type Elem = usize;

    fn name(&self) -> &str {
        "trivial"
    }

    fn arity(&self, g: &usize) -> usize {
        *g
    }

    fn pi(&self, g: &usize) -> Perm {
        Perm::identity(*g)
    }

    fn identity(&self, n: usize) -> usize {
        n
    }

    fn mul(&self, g: &usize, h: &usize) -> Result<usize, OperadError> {
        if g != h {
            return Err(OperadError::ArityMismatch {
                expected: *g,
                found: *h,
            });
        }
        Ok(*g)
    }

    fn inv(&self, g: &usize) -> usize {
        *g
    }

    fn beta(&self, hs: &[usize]) -> usize {
        hs.iter().sum()
    }

    fn delta(&self, g: &usize, sizes: &[usize]) -> Result<usize, OperadError> {
        check_sizes(*g, sizes)?;
        Ok(sizes.iter().sum())
    }

    fn equal(&self, a: &usize, b: &usize) -> Verdict {
        if a == b {
            Verdict::Equal
        } else {
            Verdict::Distinct("arity".into())
        }
    }

    fn elements(&self, n: usize) -> Option<Vec<usize>> {
        Some(vec![n])
    }

    fn generators(&self, _n: usize) -> Vec<usize> {
        Vec::new()
    }

    fn factor(&self, _g: &usize) -> GenWord {
        Vec::new()
    }

    fn relations(&self, _n: usize) -> Vec<(GenWord, GenWord)> {
        Vec::new()
    }

    fn parse_element(&self, text: &str, arity: usize) -> Result<usize, OperadError> {
        match text.trim() {
            "e" | "" => Ok(arity),
            other => Err(OperadError::Parse {
                text: other.into(),
                arity,
                reason: "the only element is `e`".into(),
            }),
        }
    }

    fn render(&self, _g: &usize) -> String {
        "e".into()
    }
}
