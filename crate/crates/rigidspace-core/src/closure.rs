//! Breadth-first closure of a finitely generated group.
//!
//! The engine is generic over the element type; it only needs a total order
//! (for canonical output and deduplication) and a multiplication callback.
//! Inside a finite ambient group, closing under products of generators
//! starting from the identity automatically closes under inverses, since
//! every element has finite order.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::Error;

/// The closure of a generator set: every element reachable from the
/// identity by multiplying generators, in canonical (sorted) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupClosure<T> {
    elements: Vec<T>,
    generators: Vec<T>,
}

impl<T: Ord + Clone> GroupClosure<T> {
    /// Close `generators` under `mul`, starting from `identity`.
    ///
    /// Fails with [`Error::ClosureOverflow`] as soon as more than `cap`
    /// distinct elements have been found. The search order is deterministic
    /// and the resulting element list is sorted, so equal inputs always
    /// produce identical output.
    pub fn generate(
        identity: T,
        generators: &[T],
        mut mul: impl FnMut(&T, &T) -> T,
        cap: usize,
    ) -> Result<Self, Error> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(identity.clone());
        queue.push_back(identity);
        while let Some(g) = queue.pop_front() {
            for h in generators {
                let next = mul(&g, h);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::ClosureOverflow { cap });
                    }
                    queue.push_back(next);
                }
            }
        }
        Ok(GroupClosure {
            elements: seen.into_iter().collect(),
            generators: generators.to_vec(),
        })
    }

    /// Number of elements in the closure.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements in canonical sorted order.
    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    /// The generator list the closure was built from.
    pub fn generators(&self) -> &[T] {
        &self.generators
    }

    pub fn contains(&self, x: &T) -> bool {
        self.elements.binary_search(x).is_ok()
    }

    /// Set equality against an arbitrary collection of elements.
    pub fn set_equals(&self, other: &[T]) -> bool {
        if self.elements.len() != other.len() {
            return false;
        }
        let mut sorted: Vec<&T> = other.iter().collect();
        sorted.sort();
        sorted.dedup();
        sorted.len() == self.elements.len()
            && self.elements.iter().zip(sorted).all(|(a, b)| *a == *b)
    }

    /// Check that the element set really is closed under `mul` and contains
    /// the inverse image of every element (i.e. that multiplication by any
    /// element permutes the set). Quadratic; intended for tests and small
    /// groups.
    pub fn verify_closed(&self, mut mul: impl FnMut(&T, &T) -> T) -> bool {
        for a in &self.elements {
            for b in &self.elements {
                if !self.contains(&mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Z/6 under addition, elements 0..5.
    fn add6(a: &u8, b: &u8) -> u8 {
        (a + b) % 6
    }

    #[test]
    fn cyclic_group_from_single_generator() {
        let c = GroupClosure::generate(0u8, &[1], add6, 10).unwrap();
        assert_eq!(c.order(), 6);
        assert_eq!(c.elements(), &[0, 1, 2, 3, 4, 5]);
        assert!(c.verify_closed(add6));
    }

    #[test]
    fn subgroup_from_non_unit_generator() {
        let c = GroupClosure::generate(0u8, &[2], add6, 10).unwrap();
        assert_eq!(c.elements(), &[0, 2, 4]);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let c = GroupClosure::generate(0u8, &[], add6, 10).unwrap();
        assert_eq!(c.elements(), &[0]);
    }

    #[test]
    fn cap_overflow_is_reported() {
        let err = GroupClosure::generate(0u8, &[1], add6, 3).unwrap_err();
        assert_eq!(err, crate::Error::ClosureOverflow { cap: 3 });
    }

    #[test]
    fn set_equality_ignores_order_and_duplicates() {
        let c = GroupClosure::generate(0u8, &[2], add6, 10).unwrap();
        assert!(c.set_equals(&[4, 0, 2]));
        assert!(!c.set_equals(&[4, 0, 2, 2]));
        assert!(!c.set_equals(&[4, 0, 3]));
    }
}
