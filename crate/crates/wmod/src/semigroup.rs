//! Numerical semigroups: sieve construction, gaps and Apéry sets, symmetry
//! and realizability screens, and the text formats the CLI accepts.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Largest sieve table we are willing to allocate. All desk-scale inputs stay
/// far below this; it only stops pathological generator lists.
const SIEVE_CAP: u64 = 50_000_000;

/// A numerical semigroup: a cofinite additive submonoid of the nonnegative
/// integers. Immutable after construction; cheap to clone and safe to share.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumericalSemigroup {
    min_generators: Vec<u64>,
    conductor: u64,
    genus: u64,
    frobenius: i64,
    gaps: Vec<u64>,
    /// Membership for 0..table_len; table_len >= conductor + max generator.
    membership: Vec<bool>,
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn sieve(gens: &[u64], len: u64) -> Result<Vec<bool>, Error> {
    if len > SIEVE_CAP {
        return Err(Error::SieveTooLarge { required: len, cap: SIEVE_CAP });
    }
    let len = len as usize;
    let mut table = vec![false; len];
    table[0] = true;
    for m in 1..len {
        for &a in gens {
            let a = a as usize;
            if a <= m && table[m - a] {
                table[m] = true;
                break;
            }
        }
    }
    Ok(table)
}

/// First index `c` such that `c..c+window` is all members. A full window of
/// length `min_generator` proves every larger integer is a member.
fn conductor_from_table(table: &[bool], window: usize) -> Option<usize> {
    let mut run = 0usize;
    for (i, &m) in table.iter().enumerate() {
        if m {
            run += 1;
            if run == window {
                return Some(i + 1 - window);
            }
        } else {
            run = 0;
        }
    }
    None
}

impl NumericalSemigroup {
    /// Builds the semigroup generated by `gens`, reducing the input to a
    /// minimal generating system. Requires gcd 1, else the complement is
    /// infinite and no numerical semigroup exists.
    pub fn from_generators(gens: &[u64]) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        let g = gens.iter().copied().fold(0, gcd);
        if g != 1 {
            return Err(Error::NonCoprime(g));
        }
        let mut sorted: Vec<u64> = gens.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let minimal = Self::reduce_to_minimal(&sorted)?;
        Self::build(minimal)
    }

    /// Drops generators representable by the others, by sieving the full
    /// semigroup and keeping members with no proper two-part decomposition.
    fn reduce_to_minimal(sorted: &[u64]) -> Result<Vec<u64>, Error> {
        let a_min = sorted[0];
        let a_max = *sorted.last().unwrap();
        let mut len = a_min
            .checked_mul(a_max)
            .and_then(|b| b.checked_add(2 * a_min + 2))
            .ok_or(Error::SieveTooLarge { required: u64::MAX, cap: SIEVE_CAP })?;
        loop {
            let table = sieve(sorted, len)?;
            if let Some(c) = conductor_from_table(&table, a_min as usize) {
                if (c as u64) + a_min < len {
                    let mut minimal = Vec::new();
                    for m in 1..=(c + a_min as usize) {
                        if !table[m] {
                            continue;
                        }
                        let decomposable =
                            (1..m).any(|x| table[x] && table[m - x]);
                        if !decomposable {
                            minimal.push(m as u64);
                        }
                    }
                    return Ok(minimal);
                }
            }
            len = len.checked_mul(2).ok_or(Error::SieveTooLarge {
                required: u64::MAX,
                cap: SIEVE_CAP,
            })?;
        }
    }

    /// Sieve from an already-minimal system; the table is canonical so that
    /// equal semigroups compare equal regardless of the original input.
    fn build(minimal: Vec<u64>) -> Result<Self, Error> {
        let a_min = minimal[0];
        let a_max = *minimal.last().unwrap();
        let mut len = a_min * a_max + 2 * a_min + a_max + 2;
        let (table, conductor) = loop {
            let table = sieve(&minimal, len)?;
            match conductor_from_table(&table, a_min as usize) {
                Some(c) if (c as u64) + a_max < len => break (table, c as u64),
                _ => len *= 2,
            }
        };
        let gaps: Vec<u64> = (0..conductor)
            .filter(|&m| !table[m as usize])
            .collect();
        let genus = gaps.len() as u64;
        let frobenius = gaps.last().map_or(-1, |&f| f as i64);
        debug_assert_eq!(conductor as i64, frobenius + 1);
        Ok(NumericalSemigroup {
            min_generators: minimal,
            conductor,
            genus,
            frobenius,
            gaps,
            membership: table,
        })
    }

    pub fn minimal_generators(&self) -> &[u64] {
        &self.min_generators
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> u64 {
        self.min_generators[0]
    }

    /// Number of minimal generators.
    pub fn embedding_dimension(&self) -> usize {
        self.min_generators.len()
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    /// Largest gap, or -1 when there are no gaps.
    pub fn frobenius(&self) -> i64 {
        self.frobenius
    }

    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    /// Membership test; table lookup below the conductor, true above.
    pub fn contains(&self, m: u64) -> bool {
        if m >= self.conductor {
            true
        } else {
            self.membership[m as usize]
        }
    }

    /// Membership for possibly-negative values; negatives are never members.
    pub fn contains_signed(&self, m: i64) -> bool {
        m >= 0 && self.contains(m as u64)
    }

    /// Membership with the sign check surfaced as an error.
    pub fn member_checked(&self, m: i64) -> Result<bool, Error> {
        if m < 0 {
            return Err(Error::NegativeInput(m));
        }
        Ok(self.contains(m as u64))
    }

    /// Ascending members strictly below `bound`.
    pub fn members_below(&self, bound: u64) -> Vec<u64> {
        (0..bound).filter(|&m| self.contains(m)).collect()
    }

    /// The first `genus` nongaps (with 0 first). For a symmetric
    /// non-hyperelliptic semigroup the last one is 2g-2.
    pub fn canonical_generators(&self) -> Result<Vec<u64>, Error> {
        if self.genus == 0 {
            return Err(Error::GenusZero);
        }
        let mut out = Vec::with_capacity(self.genus as usize);
        let mut m = 0;
        while out.len() < self.genus as usize {
            if self.contains(m) {
                out.push(m);
            }
            m += 1;
        }
        Ok(out)
    }

    /// Apéry set with respect to a nonzero member `a`: the least member in
    /// each residue class mod `a`, indexed by residue.
    pub fn apery_set(&self, a: u64) -> Result<Vec<u64>, Error> {
        if a == 0 || !self.contains(a) {
            return Err(Error::NotAMember(a));
        }
        let mut out = Vec::with_capacity(a as usize);
        for r in 0..a {
            let mut m = r;
            while !self.contains(m) {
                m += a;
            }
            out.push(m);
        }
        Ok(out)
    }

    /// Frobenius number equals 2g-1; equivalently x is a member iff
    /// frobenius - x is a gap.
    pub fn is_symmetric(&self) -> bool {
        self.frobenius == 2 * self.genus as i64 - 1
    }

    pub fn is_hyperelliptic(&self) -> bool {
        self.contains(2)
    }

    /// Gap set is exactly {1, ..., g}.
    pub fn is_ordinary(&self) -> bool {
        self.genus == 0 || self.frobenius == self.genus as i64
    }

    /// Counts n-fold sums of gaps against the bound (2n-1)(g-1) for each
    /// n in 2..=n_max. Exceeding the bound obstructs realizability as a
    /// Weierstrass semigroup of a smooth pointed curve.
    pub fn buchweitz_screen(&self, n_max: u64) -> BuchweitzReport {
        let mut entries = Vec::new();
        if self.genus >= 1 {
            let gaps: BTreeSet<u64> = self.gaps.iter().copied().collect();
            let mut sums = gaps.clone();
            for n in 2..=n_max {
                sums = sums
                    .iter()
                    .flat_map(|&s| gaps.iter().map(move |&g| s + g))
                    .collect();
                let bound = (2 * n as i64 - 1) * (self.genus as i64 - 1);
                let count = sums.len() as u64;
                // The bound expresses a pluricanonical dimension and is only
                // meaningful for genus >= 2.
                let exceeded = self.genus >= 2 && count as i64 > bound;
                entries.push(BuchweitzEntry { n, count, bound, exceeded });
            }
        }
        let obstructed = entries.iter().any(|e| e.exceeded);
        BuchweitzReport { genus: self.genus, entries, obstructed }
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.min_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BuchweitzEntry {
    pub n: u64,
    /// Size of the n-fold sumset of the gap set.
    pub count: u64,
    /// (2n-1)(g-1); negative only for genus 0 entries, which never occur.
    pub bound: i64,
    pub exceeded: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct BuchweitzReport {
    pub genus: u64,
    pub entries: Vec<BuchweitzEntry>,
    pub obstructed: bool,
}

/// Parses the comma-separated generator format, e.g. "4,7,10".
pub fn parse_generators(text: &str) -> Result<Vec<u64>, Error> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyInput);
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Parse(format!("empty generator in \"{trimmed}\"")));
            }
            tok.parse::<u64>()
                .map_err(|_| Error::Parse(format!("invalid generator \"{tok}\"")))
        })
        .collect()
}

/// Parses a batch file: one generator list per line, '#' starts a comment,
/// blank lines are skipped. Returns (1-based line number, generators).
pub fn parse_batch(text: &str) -> Vec<(usize, Result<Vec<u64>, Error>)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push((idx + 1, parse_generators(line)));
    }
    out
}
