//! The group generated by Heine's transformation and the swap `a ↔ b`.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qterm::{trans_equal, trans_multiply, Transformation};

#[derive(Clone, Debug, Serialize)]
pub struct GroupElement {
    /// Product of generators, e.g. `h·ab·h`; empty for the identity.
    pub word: String,
    pub transformation: Transformation,
}

/// Closure under multiplication by generators, breadth first. Fails if
/// more than `bound` distinct elements appear.
pub fn generated_group(gens: &[(&str, Transformation)], bound: usize) -> Result<Vec<GroupElement>> {
    let mut elems = vec![GroupElement { word: String::new(), transformation: Transformation::identity() }];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (name, g) in gens {
            let t = trans_multiply(&elems[i].transformation, g);
            if elems.iter().any(|e| trans_equal(&e.transformation, &t)) {
                continue;
            }
            if elems.len() >= bound {
                return Err(Error::ClosureOverflow(bound));
            }
            let word = if elems[i].word.is_empty() { name.to_string() } else { format!("{}·{}", elems[i].word, name) };
            elems.push(GroupElement { word, transformation: t });
            queue.push_back(elems.len() - 1);
        }
    }
    Ok(elems)
}

/// All twelve symmetries.
pub fn heine_group() -> Result<Vec<GroupElement>> {
    let g = generated_group(&[("h", Transformation::heine()), ("ab", Transformation::swap_ab())], 100)?;
    if g.len() != 12 {
        return Err(Error::Precondition(format!("expected 12 elements, found {}", g.len())));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paramgroup::ShiftOp;

    #[test]
    fn order_twelve() {
        let g = heine_group().unwrap();
        assert_eq!(g.len(), 12);
        assert!(g[0].word.is_empty() && g[0].transformation.is_identity());
        let th = Transformation::heine();
        assert!(trans_multiply(&th, &th).is_identity());
        assert_eq!(trans_multiply(&th, &Transformation::swap_ab()).order(20), Some(6));
    }

    #[test]
    fn overflow_is_reported() {
        let shift = Transformation::new(crate::qterm::QHypTerm::one(), ShiftOp::A.to_matrix());
        assert!(matches!(generated_group(&[("A", shift)], 10), Err(Error::ClosureOverflow(10))));
    }
}
