//! Monomial bases sorted by pole order: the shrunk basis (one monomial in
//! the minimal-generator variables per semigroup element) and the degree-n
//! bases over the canonical generator variables.
//!
//! Both use the same selection rule: among the candidate monomials of a
//! given weight, take the one whose ascending list of generator parts is
//! lexicographically least.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::presentation::{factorizations, ExponentVector};
use crate::semigroup::NumericalSemigroup;

/// The distinguished monomial of weight `m` over the minimal generators:
/// minimal ascending-sorted parts list among all factorizations.
pub fn shrunk_representative(
    s: &NumericalSemigroup,
    m: u64,
) -> Result<ExponentVector, Error> {
    if !s.contains(m) {
        return Err(Error::NotAMember(m));
    }
    let gens = s.minimal_generators();
    factorizations(s, m)
        .into_iter()
        .min_by(|a, b| a.sorted_parts(gens).cmp(&b.sorted_parts(gens)))
        .ok_or(Error::NotAMember(m))
}

/// One representative per member up to a bound, precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrunkBasis {
    pub bound: u64,
    pub table: BTreeMap<u64, ExponentVector>,
}

pub fn shrunk_basis(s: &NumericalSemigroup, bound: u64) -> ShrunkBasis {
    let mut table = BTreeMap::new();
    for m in 0..=bound {
        if s.contains(m) {
            table.insert(m, shrunk_representative(s, m).unwrap());
        }
    }
    ShrunkBasis { bound, table }
}

/// Degree-n monomials over the canonical generators X_{n_0}, ..., X_{n_{g-1}},
/// one per weight s <= n(2g-2); the weight-0 variable pads the degree. For a
/// symmetric non-hyperelliptic semigroup the basis has (2n-1)(g-1) elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalDeltaBasis {
    pub degree: u64,
    pub canonical_generators: Vec<u64>,
    /// weight -> exponents over the canonical generators.
    pub elements: BTreeMap<u64, Vec<u32>>,
}

impl CanonicalDeltaBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Renders the element of a given weight, e.g. "X0*X8".
    pub fn render(&self, weight: u64) -> Option<String> {
        let exps = self.elements.get(&weight)?;
        let mut pieces = Vec::new();
        for (&e, &v) in exps.iter().zip(&self.canonical_generators) {
            match e {
                0 => {}
                1 => pieces.push(format!("X{v}")),
                _ => pieces.push(format!("X{v}^{e}")),
            }
        }
        Some(if pieces.is_empty() { "1".to_string() } else { pieces.join("*") })
    }
}

pub fn delta_basis(s: &NumericalSemigroup, n: u64) -> Result<CanonicalDeltaBasis, Error> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if s.is_hyperelliptic() {
        return Err(Error::Hyperelliptic);
    }
    if n < 2 {
        return Err(Error::OutOfRange { value: n, bound: 2 });
    }
    let cg = s.canonical_generators()?;
    let g = cg.len();
    debug_assert_eq!(*cg.last().unwrap(), 2 * s.genus() - 2);
    let max_weight = n * (2 * s.genus() - 2);

    // Enumerate all degree-n monomials as nondecreasing index tuples and keep
    // the minimal sorted-parts list per weight. Zero parts count: a leading
    // X_{n_0} factor beats any positive first part.
    let mut best: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    let mut tuple = vec![0usize; n as usize];
    'outer: loop {
        let weight: u64 = tuple.iter().map(|&i| cg[i]).sum();
        if weight <= max_weight {
            let better = match best.get(&weight) {
                None => true,
                Some(old) => {
                    let new_parts: Vec<u64> = tuple.iter().map(|&i| cg[i]).collect();
                    let old_parts: Vec<u64> = old.iter().map(|&i| cg[i]).collect();
                    new_parts < old_parts
                }
            };
            if better {
                best.insert(weight, tuple.clone());
            }
        }
        // Advance to the next nondecreasing tuple.
        let mut pos = tuple.len();
        while pos > 0 && tuple[pos - 1] == g - 1 {
            pos -= 1;
        }
        if pos == 0 {
            break 'outer;
        }
        let v = tuple[pos - 1] + 1;
        for t in tuple.iter_mut().skip(pos - 1) {
            *t = v;
        }
    }

    let mut elements = BTreeMap::new();
    for (w, tuple) in best {
        let mut exps = vec![0u32; g];
        for &i in &tuple {
            exps[i] += 1;
        }
        elements.insert(w, exps);
    }
    // Every member in range is a sum of n canonical generators, so the count
    // is the member count below n(2g-2), which is (2n-1)(g-1) for symmetric
    // non-hyperelliptic semigroups.
    let expected: usize = s.members_below(max_weight + 1).len();
    assert_eq!(elements.len(), expected, "basis misses a member weight");
    Ok(CanonicalDeltaBasis {
        degree: n,
        canonical_generators: cg,
        elements,
    })
}

/// All ways to write `weight` as a sum of two nongaps a <= b, both at most
/// 2g-2, ascending in a. Nonempty for members up to 4g-4 of a symmetric
/// semigroup.
pub fn decompositions_two(
    s: &NumericalSemigroup,
    weight: u64,
) -> Result<Vec<(u64, u64)>, Error> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let g = s.genus();
    let bound = 4 * g.saturating_sub(1);
    if !s.contains(weight) || weight > bound {
        return Err(Error::OutOfRange { value: weight, bound });
    }
    let cap = 2 * g - 2;
    let mut out = Vec::new();
    let lo = weight.saturating_sub(cap);
    for a in lo..=weight / 2 {
        let b = weight - a;
        if b <= cap && s.contains(a) && s.contains(b) {
            out.push((a, b));
        }
    }
    Ok(out)
}
