//! Factorizations of semigroup elements, Betti elements, and the minimal
//! binomial presentation of the monomial curve t -> (t^a1, ..., t^ar).
//!
//! The toric ideal of the curve is generated by differences of two monomials
//! of equal weighted degree with disjoint supports; the minimal generators
//! live at the Betti elements, where the factorization graph disconnects.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::is_prime;
use crate::semigroup::NumericalSemigroup;

/// A monomial in the variables X_{a_1}, ..., X_{a_r}, stored as exponents
/// indexed by the minimal generators, with its weighted and total degrees
/// cached.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ExponentVector {
    pub exponents: Vec<u32>,
    pub weight: u64,
    pub degree: u32,
}

impl ExponentVector {
    pub fn new(exponents: Vec<u32>, gens: &[u64]) -> Self {
        let weight = exponents
            .iter()
            .zip(gens)
            .map(|(&e, &a)| e as u64 * a)
            .sum();
        let degree = exponents.iter().sum();
        ExponentVector { exponents, weight, degree }
    }

    pub fn is_constant(&self) -> bool {
        self.degree == 0
    }

    /// The generator values with multiplicity, ascending. Used for the
    /// minimal-parts tie-break in the monomial bases.
    pub fn sorted_parts(&self, gens: &[u64]) -> Vec<u64> {
        let mut parts = Vec::with_capacity(self.degree as usize);
        for (&e, &a) in self.exponents.iter().zip(gens) {
            for _ in 0..e {
                parts.push(a);
            }
        }
        parts
    }

    /// Renders like "X4*X10" or "X4^2"; the empty monomial is "1".
    pub fn render(&self, gens: &[u64]) -> String {
        let mut pieces = Vec::new();
        for (&e, &a) in self.exponents.iter().zip(gens) {
            match e {
                0 => {}
                1 => pieces.push(format!("X{a}")),
                _ => pieces.push(format!("X{a}^{e}")),
            }
        }
        if pieces.is_empty() {
            "1".to_string()
        } else {
            pieces.join("*")
        }
    }
}

/// A difference of two monomials of the same weight with disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsobaricBinomial {
    pub plus: ExponentVector,
    pub minus: ExponentVector,
    pub weight: u64,
}

impl IsobaricBinomial {
    pub fn new(plus: ExponentVector, minus: ExponentVector) -> Self {
        debug_assert_eq!(plus.weight, minus.weight);
        debug_assert!(plus
            .exponents
            .iter()
            .zip(&minus.exponents)
            .all(|(&a, &b)| a == 0 || b == 0));
        debug_assert_ne!(plus.exponents, minus.exponents);
        let weight = plus.weight;
        IsobaricBinomial { plus, minus, weight }
    }

    pub fn render(&self, gens: &[u64]) -> String {
        format!("{} - {}", self.plus.render(gens), self.minus.render(gens))
    }

    /// All nonzero exponents occurring on either side.
    pub fn nonzero_exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.plus
            .exponents
            .iter()
            .chain(&self.minus.exponents)
            .copied()
            .filter(|&e| e > 0)
    }
}

/// Minimal generating binomials of the toric ideal, with the Betti weights
/// as a multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ToricPresentation {
    pub semigroup: NumericalSemigroup,
    pub generators: Vec<IsobaricBinomial>,
    pub betti_weights: Vec<u64>,
}

impl ToricPresentation {
    /// The codimension test: exactly r - 1 relations.
    pub fn is_complete_intersection(&self) -> bool {
        self.generators.len() == self.semigroup.embedding_dimension().saturating_sub(1)
    }

    pub fn max_weight(&self) -> Option<u64> {
        self.betti_weights.iter().copied().max()
    }
}

impl fmt::Display for ToricPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = self.semigroup.minimal_generators();
        for (i, b) in self.generators.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "G{} (weight {}): {}", i + 1, b.weight, b.render(gens))?;
        }
        Ok(())
    }
}

/// All factorizations of `m` over the minimal generators, in ascending
/// lexicographic order of the exponent vectors. Empty exactly when m is a
/// gap.
pub fn factorizations(s: &NumericalSemigroup, m: u64) -> Vec<ExponentVector> {
    factorization_exponents(s, m)
        .into_iter()
        .map(|e| ExponentVector::new(e, s.minimal_generators()))
        .collect()
}

pub(crate) fn factorization_exponents(s: &NumericalSemigroup, m: u64) -> Vec<Vec<u32>> {
    let gens = s.minimal_generators();
    let mut out = Vec::new();
    let mut current = vec![0u32; gens.len()];
    // Bounded knapsack over generators in descending order.
    fn recurse(
        gens: &[u64],
        idx: usize,
        remaining: u64,
        current: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == 0 {
            if remaining.is_multiple_of(gens[0]) {
                let q = remaining / gens[0];
                if q <= u32::MAX as u64 {
                    current[0] = q as u32;
                    out.push(current.clone());
                    current[0] = 0;
                }
            }
            return;
        }
        let a = gens[idx];
        for e in 0..=(remaining / a) {
            current[idx] = e as u32;
            recurse(gens, idx - 1, remaining - e * a, current, out);
        }
        current[idx] = 0;
    }
    recurse(gens, gens.len() - 1, m, &mut current, &mut out);
    out.sort_unstable();
    out
}

/// Connected components of the factorization graph: vertices are the
/// factorizations, edges join pairs with overlapping support. Components are
/// listed by ascending least member; each component's vertex indices are
/// ascending.
pub(crate) fn graph_components(facts: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = facts.len();
    let mut comp = vec![usize::MAX; n];
    let mut components = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = components.len();
        let mut todo = vec![start];
        let mut members = Vec::new();
        comp[start] = id;
        while let Some(v) = todo.pop() {
            members.push(v);
            for u in 0..n {
                if comp[u] == usize::MAX && shares_support(&facts[v], &facts[u]) {
                    comp[u] = id;
                    todo.push(u);
                }
            }
        }
        members.sort_unstable();
        components.push(members);
    }
    components
}

pub(crate) fn shares_support(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).any(|(&x, &y)| x > 0 && y > 0)
}

/// Scan bound for Betti elements: every element whose factorization graph
/// disconnects satisfies m <= frobenius + smallest + largest generator
/// (above that, factorizations through any generator pair are linked).
fn betti_scan_bound(s: &NumericalSemigroup) -> u64 {
    let gens = s.minimal_generators();
    let a_min = gens[0];
    let a_max = *gens.last().unwrap();
    (s.frobenius().max(0) as u64) + a_min + a_max
}

/// Ascending list of Betti elements: members whose factorization graph is
/// disconnected.
pub fn betti_elements(s: &NumericalSemigroup) -> Vec<u64> {
    if s.embedding_dimension() < 2 {
        return Vec::new();
    }
    let bound = betti_scan_bound(s);
    let mut out = Vec::new();
    for m in 1..=bound {
        if !s.contains(m) {
            continue;
        }
        let facts = factorization_exponents(s, m);
        if facts.len() < 2 {
            continue;
        }
        if graph_components(&facts).len() > 1 {
            out.push(m);
        }
    }
    out
}

/// Tie-break rule for choosing component representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Lexicographically least factorization per component; the default.
    LexLeast,
    /// Lexicographically greatest; only used to check that downstream
    /// dimensions are independent of the choice.
    LexGreatest,
}

pub fn minimal_presentation(s: &NumericalSemigroup) -> ToricPresentation {
    minimal_presentation_with_tie_break(s, TieBreak::LexLeast)
}

/// For each Betti element, one binomial per non-base component, joining the
/// component representative to the representative of the component holding
/// the globally least factorization.
pub fn minimal_presentation_with_tie_break(
    s: &NumericalSemigroup,
    tie: TieBreak,
) -> ToricPresentation {
    let gens = s.minimal_generators().to_vec();
    let mut generators = Vec::new();
    let mut betti_weights = Vec::new();
    for m in betti_elements(s) {
        let facts = factorization_exponents(s, m);
        let components = graph_components(&facts);
        let pick = |members: &[usize]| -> usize {
            match tie {
                TieBreak::LexLeast => *members
                    .iter()
                    .min_by(|&&a, &&b| facts[a].cmp(&facts[b]))
                    .unwrap(),
                TieBreak::LexGreatest => *members
                    .iter()
                    .max_by(|&&a, &&b| facts[a].cmp(&facts[b]))
                    .unwrap(),
            }
        };
        let global = match tie {
            TieBreak::LexLeast => (0..facts.len()).min_by(|&a, &b| facts[a].cmp(&facts[b])),
            TieBreak::LexGreatest => (0..facts.len()).max_by(|&a, &b| facts[a].cmp(&facts[b])),
        }
        .unwrap();
        let base = components.iter().position(|c| c.contains(&global)).unwrap();
        for (ci, comp) in components.iter().enumerate() {
            if ci == base {
                continue;
            }
            let rep = pick(comp);
            let plus = ExponentVector::new(facts[global].clone(), &gens);
            let minus = ExponentVector::new(facts[rep].clone(), &gens);
            // Distinct components never share support, so the pair is
            // already in Herzog shape.
            debug_assert!(!shares_support(&plus.exponents, &minus.exponents));
            generators.push(IsobaricBinomial::new(plus, minus));
            betti_weights.push(m);
        }
    }
    ToricPresentation { semigroup: s.clone(), generators, betti_weights }
}

pub fn is_complete_intersection(s: &NumericalSemigroup) -> bool {
    minimal_presentation(s).is_complete_intersection()
}

/// A characteristic is admissible when it is 0 or a prime dividing no
/// exponent of the presentation binomials.
pub fn char_is_admissible(p: &ToricPresentation, characteristic: u64) -> Result<bool, Error> {
    if characteristic == 0 {
        return Ok(true);
    }
    if !is_prime(characteristic) {
        return Err(Error::NotPrime(characteristic));
    }
    Ok(p.generators
        .iter()
        .flat_map(|b| b.nonzero_exponents())
        .all(|e| !(e as u64).is_multiple_of(characteristic)))
}
