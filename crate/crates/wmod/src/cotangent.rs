//! The graded first cotangent module of a complete-intersection monomial
//! curve: per-degree dimensions as cokernels of the Jacobian of the
//! presentation evaluated on the curve, the negative/nonnegative split, the
//! Tjurina number, and the weights of the moduli coordinates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::field::ScalarField;
use crate::linalg;
use crate::presentation::{self, ToricPresentation};
use crate::semigroup::NumericalSemigroup;

/// The Jacobian of the defining binomials evaluated at X_{a_i} = t^{a_i}.
/// Entry (j, i) is a single t-power of weight s_j - a_i with an integer
/// coefficient: the plus-side exponent minus the minus-side exponent of
/// generator i in relation j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianOnCurve {
    /// Weights s_j of the relations.
    pub relation_weights: Vec<u64>,
    /// The minimal generators a_i.
    pub generators: Vec<u64>,
    /// (r-1) x r coefficient matrix.
    pub coefficients: Vec<Vec<i64>>,
}

impl JacobianOnCurve {
    /// Weight of entry (j, i); only meaningful where the coefficient is
    /// nonzero.
    pub fn entry_weight(&self, j: usize, i: usize) -> i64 {
        self.relation_weights[j] as i64 - self.generators[i] as i64
    }
}

pub fn jacobian_on_curve(p: &ToricPresentation) -> Result<JacobianOnCurve, Error> {
    if !p.is_complete_intersection() {
        return Err(Error::NotCompleteIntersection);
    }
    let gens = p.semigroup.minimal_generators().to_vec();
    let coefficients = p
        .generators
        .iter()
        .map(|b| {
            (0..gens.len())
                .map(|i| b.plus.exponents[i] as i64 - b.minus.exponents[i] as i64)
                .collect()
        })
        .collect();
    Ok(JacobianOnCurve {
        relation_weights: p.generators.iter().map(|b| b.weight).collect(),
        generators: gens,
        coefficients,
    })
}

/// The degree-d block: rows are the relations j with s_j + d in the
/// semigroup, columns the generators i with a_i + d in the semigroup.
pub(crate) fn degree_block(
    j: &JacobianOnCurve,
    s: &NumericalSemigroup,
    d: i64,
) -> (Vec<usize>, Vec<usize>, Vec<Vec<i64>>) {
    let rows: Vec<usize> = (0..j.relation_weights.len())
        .filter(|&r| s.contains_signed(j.relation_weights[r] as i64 + d))
        .collect();
    let cols: Vec<usize> = (0..j.generators.len())
        .filter(|&c| s.contains_signed(j.generators[c] as i64 + d))
        .collect();
    let matrix = rows
        .iter()
        .map(|&r| cols.iter().map(|&c| j.coefficients[r][c]).collect())
        .collect();
    (rows, cols, matrix)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradedPiece {
    pub ambient: usize,
    pub rank: usize,
    pub dim: usize,
}

/// dim T^1 in degree d: ambient deformation slots minus the rank of the
/// trivial (Jacobian) block.
pub fn t1_graded_piece(
    j: &JacobianOnCurve,
    s: &NumericalSemigroup,
    d: i64,
    field: ScalarField,
) -> GradedPiece {
    let (rows, _cols, matrix) = degree_block(j, s, d);
    let ambient = rows.len();
    let rank = linalg::rank(&matrix, field);
    GradedPiece { ambient, rank, dim: ambient - rank }
}

/// Serialize the degree map as ordered [degree, dim] pairs.
mod degree_pairs {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<i64, u64>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        map.iter().map(|(&d, &n)| (d, n)).collect::<Vec<_>>().serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<i64, u64>, D::Error> {
        Ok(Vec::<(i64, u64)>::deserialize(de)?.into_iter().collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedT1Report {
    /// Nonzero graded dimensions, as ascending [degree, dim] pairs in JSON.
    #[serde(with = "degree_pairs")]
    pub by_degree: BTreeMap<i64, u64>,
    pub negative_dim: u64,
    pub nonnegative_dim: u64,
    pub tjurina: u64,
    /// -d repeated dim(T^1_d) times over d < 0, ascending.
    pub coordinate_weights: Vec<u64>,
    pub characteristic: u64,
    pub warnings: Vec<String>,
}

pub fn t1_report(s: &NumericalSemigroup, field: ScalarField) -> Result<GradedT1Report, Error> {
    let p = presentation::minimal_presentation(s);
    t1_report_for(&p, field)
}

pub fn t1_report_for(
    p: &ToricPresentation,
    field: ScalarField,
) -> Result<GradedT1Report, Error> {
    if !p.is_complete_intersection() {
        return Err(Error::NotCompleteIntersection);
    }
    let s = &p.semigroup;
    let mut warnings = Vec::new();
    if let ScalarField::Prime(ch) = field {
        if !presentation::char_is_admissible(p, ch)? {
            warnings.push(format!(
                "characteristic {ch} divides an exponent of the defining equations; \
                 graded dimensions may differ from characteristic 0"
            ));
        }
    }
    let mut by_degree = BTreeMap::new();
    let mut negative_dim = 0u64;
    let mut nonnegative_dim = 0u64;
    let mut coordinate_weights = Vec::new();
    if let Some(max_s) = p.max_weight() {
        let jac = jacobian_on_curve(p)?;
        let lo = -(max_s as i64);
        let hi = s.conductor() as i64 + max_s as i64;
        for d in lo..=hi {
            let piece = t1_graded_piece(&jac, s, d, field);
            if piece.dim == 0 {
                continue;
            }
            // Beyond the conductor every slot exists and the constant
            // Jacobian must have full rank; anything else signals a
            // characteristic pathology or a broken bound.
            if d >= s.conductor() as i64 {
                return Err(Error::NonVanishingTail(d));
            }
            by_degree.insert(d, piece.dim as u64);
            if d < 0 {
                negative_dim += piece.dim as u64;
                for _ in 0..piece.dim {
                    coordinate_weights.push((-d) as u64);
                }
            } else {
                nonnegative_dim += piece.dim as u64;
            }
        }
    }
    coordinate_weights.sort_unstable();
    Ok(GradedT1Report {
        by_degree,
        negative_dim,
        nonnegative_dim,
        tjurina: negative_dim + nonnegative_dim,
        coordinate_weights,
        characteristic: field.characteristic(),
        warnings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    #[test]
    fn jacobian_4_7_10() {
        let p = presentation::minimal_presentation(&s(&[4, 7, 10]));
        let j = jacobian_on_curve(&p).unwrap();
        assert_eq!(j.coefficients, vec![vec![-1, 2, -1], vec![-5, 0, 2]]);
        assert_eq!(j.entry_weight(0, 0), 10);
        assert_eq!(j.entry_weight(0, 1), 7);
        assert_eq!(j.entry_weight(0, 2), 4);
        assert_eq!(j.entry_weight(1, 0), 16);
        assert_eq!(j.entry_weight(1, 2), 10);
    }

    #[test]
    fn jacobian_cusp() {
        let p = presentation::minimal_presentation(&s(&[2, 3]));
        let j = jacobian_on_curve(&p).unwrap();
        assert_eq!(j.coefficients, vec![vec![-3, 2]]);
        assert_eq!(j.entry_weight(0, 0), 4);
        assert_eq!(j.entry_weight(0, 1), 3);
    }

    #[test]
    fn jacobian_rejects_non_ci() {
        let p = presentation::minimal_presentation(&s(&[3, 4, 5]));
        assert!(matches!(jacobian_on_curve(&p), Err(Error::NotCompleteIntersection)));
    }

    #[test]
    fn graded_pieces_4_7_10() {
        let h = s(&[4, 7, 10]);
        let p = presentation::minimal_presentation(&h);
        let j = jacobian_on_curve(&p).unwrap();
        let f = ScalarField::Rational;
        // Below -max weight nothing survives.
        let low = t1_graded_piece(&j, &h, -21, f);
        assert_eq!((low.ambient, low.dim), (0, 0));
        // Degree -13: one relation slot (20 - 13 = 7), no columns.
        let d13 = t1_graded_piece(&j, &h, -13, f);
        assert_eq!((d13.ambient, d13.dim), (1, 1));
        // At the conductor the full integer matrix has full rank.
        let top = t1_graded_piece(&j, &h, h.conductor() as i64, f);
        assert_eq!((top.ambient, top.rank, top.dim), (2, 2, 0));
    }

    #[test]
    fn t1_totals_4_7_10() {
        let rep = t1_report(&s(&[4, 7, 10]), ScalarField::Rational).unwrap();
        assert_eq!(rep.negative_dim, 13);
        assert_eq!(rep.tjurina, 14);
        assert_eq!(rep.nonnegative_dim, 1);
        assert_eq!(rep.coordinate_weights.len(), 13);
        assert!(rep.warnings.is_empty());
    }

    #[test]
    fn t1_cusp() {
        let rep = t1_report(&s(&[2, 3]), ScalarField::Rational).unwrap();
        assert_eq!(rep.tjurina, 2);
        assert_eq!(rep.negative_dim, 2);
        assert_eq!(rep.by_degree.get(&-4), Some(&1));
        assert_eq!(rep.by_degree.get(&-6), Some(&1));
        assert_eq!(rep.coordinate_weights, vec![4, 6]);
    }

    #[test]
    fn t1_family_tau2() {
        // tau = 2 member of the <4, 3+4t, 6+4t> family: T^{1,+} sits in
        // degrees {2, 3, 6}, so the negative part has 2g - 3 = 19
        // dimensions.
        let rep = t1_report(&s(&[4, 11, 14]), ScalarField::Rational).unwrap();
        assert_eq!(rep.tjurina, 2 * 11);
        assert_eq!(rep.nonnegative_dim, 3);
        assert_eq!(rep.negative_dim, 19);
        let pos: Vec<i64> = rep.by_degree.keys().copied().filter(|&d| d >= 0).collect();
        assert_eq!(pos, vec![2, 3, 6]);
    }

    #[test]
    fn t1_inadmissible_char_warns() {
        let rep = t1_report(&s(&[4, 7, 10]), ScalarField::Prime(2)).unwrap();
        assert!(!rep.warnings.is_empty());
    }

    #[test]
    fn t1_naturals_trivial() {
        let rep = t1_report(&s(&[1]), ScalarField::Rational).unwrap();
        assert_eq!(rep.tjurina, 0);
        assert!(rep.by_degree.is_empty());
    }

    #[test]
    fn t1_rejects_non_ci() {
        assert!(matches!(
            t1_report(&s(&[3, 4, 5]), ScalarField::Rational),
            Err(Error::NotCompleteIntersection)
        ));
    }
}
