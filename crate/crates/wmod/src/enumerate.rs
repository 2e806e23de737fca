//! Enumeration of all numerical semigroups of a fixed genus via the
//! semigroup tree: children of a node remove one minimal generator larger
//! than the Frobenius number, which visits every semigroup exactly once.

use crate::error::Error;
use crate::presentation;
use crate::semigroup::NumericalSemigroup;

pub const DEFAULT_MAX_GENUS: u64 = 15;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationFilter {
    pub symmetric: bool,
    pub complete_intersection: bool,
}

struct Node {
    /// Membership for 0..=limit.
    members: Vec<bool>,
    frobenius: i64,
    genus: u64,
    min_gens: Vec<u64>,
}

/// Depth-first stream over the semigroup tree, yielding the semigroups of
/// the requested genus in a fixed deterministic order.
pub struct SemigroupStream {
    stack: Vec<Node>,
    target: u64,
    filter: EnumerationFilter,
    limit: usize,
}

pub fn enumerate_semigroups(
    genus: u64,
    filter: EnumerationFilter,
    max_genus: u64,
) -> Result<SemigroupStream, Error> {
    if genus > max_genus {
        return Err(Error::BoundExceeded { genus, max: max_genus });
    }
    // Minimal generators of a genus-g semigroup never exceed 3g + 1.
    let limit = (3 * genus.max(1) + 2) as usize;
    let root = Node {
        members: vec![true; limit + 1],
        frobenius: -1,
        genus: 0,
        min_gens: vec![1],
    };
    Ok(SemigroupStream { stack: vec![root], target: genus, filter, limit })
}

impl SemigroupStream {
    fn minimal_generators_of(&self, members: &[bool]) -> Vec<u64> {
        let mult = (1..=self.limit).find(|&m| members[m]).unwrap_or(self.limit);
        let frob = (0..=self.limit).rev().find(|&m| !members[m]);
        let conductor = frob.map_or(0, |f| f + 1);
        let hi = (conductor + mult).min(self.limit);
        let mut gens = Vec::new();
        for m in 1..=hi {
            if !members[m] {
                continue;
            }
            if !(1..m).any(|x| members[x] && members[m - x]) {
                gens.push(m as u64);
            }
        }
        gens
    }

    fn passes(&self, s: &NumericalSemigroup) -> bool {
        if self.filter.symmetric && !s.is_symmetric() {
            return false;
        }
        if self.filter.complete_intersection && !presentation::is_complete_intersection(s) {
            return false;
        }
        true
    }
}

impl Iterator for SemigroupStream {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        while let Some(node) = self.stack.pop() {
            if node.genus == self.target {
                let s = NumericalSemigroup::from_generators(&node.min_gens)
                    .expect("tree nodes are valid semigroups");
                if self.passes(&s) {
                    return Some(s);
                }
                continue;
            }
            // Children remove an effective generator beyond the Frobenius
            // number; push in reverse so they pop in ascending order.
            let effective: Vec<u64> = node
                .min_gens
                .iter()
                .copied()
                .filter(|&a| (a as i64) > node.frobenius && (a as usize) <= self.limit)
                .collect();
            for &a in effective.iter().rev() {
                let mut members = node.members.clone();
                members[a as usize] = false;
                let min_gens = self.minimal_generators_of(&members);
                self.stack.push(Node {
                    members,
                    frobenius: a as i64,
                    genus: node.genus + 1,
                    min_gens,
                });
            }
        }
        None
    }
}
