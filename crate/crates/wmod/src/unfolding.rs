//! Unfolding the defining equations: attach one symbolic coefficient per
//! smaller member to each relation, normalize away the coefficients that a
//! weight-lowering coordinate change can remove, and report the surviving
//! moduli coordinates as a weighted projective space.

use serde::{Deserialize, Serialize};

use crate::basis::shrunk_representative;
use crate::cotangent::{degree_block, jacobian_on_curve};
use crate::error::Error;
use crate::field::ScalarField;
use crate::linalg;
use crate::presentation::{self, ExponentVector, ToricPresentation};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoefficientStatus {
    Free,
    NormalizedToZero,
}

/// One unfolding coefficient c_{s,m}: relation of weight s perturbed by the
/// weight-m shrunk monomial. Its own weight is s - m > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnfoldCoefficient {
    /// Index of the relation in the presentation.
    pub relation: usize,
    pub relation_weight: u64,
    pub monomial_weight: u64,
    /// s - m, the weight of the deformation parameter.
    pub weight: u64,
    pub monomial: ExponentVector,
    pub status: CoefficientStatus,
}

impl UnfoldCoefficient {
    pub fn name(&self) -> String {
        format!("c_{{{},{}}}", self.relation_weight, self.monomial_weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnfoldedSystem {
    pub presentation: ToricPresentation,
    /// Coefficients grouped by relation, ascending monomial weight.
    pub coefficients: Vec<Vec<UnfoldCoefficient>>,
    pub normalized: bool,
}

impl UnfoldedSystem {
    pub fn total_coefficients(&self) -> usize {
        self.coefficients.iter().map(|c| c.len()).sum()
    }

    pub fn free_coefficients(&self) -> Vec<&UnfoldCoefficient> {
        self.coefficients
            .iter()
            .flatten()
            .filter(|c| c.status == CoefficientStatus::Free)
            .collect()
    }

    /// Weights of the free coefficients, ascending with multiplicity.
    pub fn free_weights(&self) -> Vec<u64> {
        let mut w: Vec<u64> = self.free_coefficients().iter().map(|c| c.weight).collect();
        w.sort_unstable();
        w
    }

    /// Renders relation `j` with its surviving coefficients, e.g.
    /// "X7^2 - X4*X10 - c_{14,0} - c_{14,8}*X4^2".
    pub fn render_relation(&self, j: usize) -> String {
        let gens = self.presentation.semigroup.minimal_generators();
        let mut out = self.presentation.generators[j].render(gens);
        for c in &self.coefficients[j] {
            if c.status != CoefficientStatus::Free {
                continue;
            }
            if c.monomial.is_constant() {
                out.push_str(&format!(" - {}", c.name()));
            } else {
                out.push_str(&format!(" - {}*{}", c.name(), c.monomial.render(gens)));
            }
        }
        out
    }
}

/// The full unfolding: every relation of weight s gains one coefficient per
/// member m < s, attached to the shrunk representative of m. All free.
pub fn unfold(p: &ToricPresentation) -> UnfoldedSystem {
    let s = &p.semigroup;
    let coefficients = p
        .generators
        .iter()
        .enumerate()
        .map(|(j, b)| {
            s.members_below(b.weight)
                .into_iter()
                .map(|m| UnfoldCoefficient {
                    relation: j,
                    relation_weight: b.weight,
                    monomial_weight: m,
                    weight: b.weight - m,
                    monomial: shrunk_representative(s, m).unwrap(),
                    status: CoefficientStatus::Free,
                })
                .collect()
        })
        .collect();
    UnfoldedSystem { presentation: p.clone(), coefficients, normalized: false }
}

/// The degree-d block of the linearized action of the substitutions
/// X_{a_i} -> X_{a_i} + eps * Z_{a_i + d} on the unfold coefficients. This
/// is the same matrix as the degree-d Jacobian block of the cotangent
/// computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialActionBlock {
    pub degree: i64,
    /// Relation indices with a coefficient slot at this degree.
    pub rows: Vec<usize>,
    /// Generator indices whose substitution lands in the semigroup.
    pub cols: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

pub fn trivial_action_matrix(
    p: &ToricPresentation,
    d: i64,
    field: ScalarField,
) -> Result<TrivialActionBlock, Error> {
    if d >= 0 {
        return Err(Error::NegativeInput(d));
    }
    let jac = jacobian_on_curve(p)?;
    let (rows, cols, mut matrix) = degree_block(&jac, &p.semigroup, d);
    if let ScalarField::Prime(ch) = field {
        for row in &mut matrix {
            for v in row.iter_mut() {
                *v = v.rem_euclid(ch as i64);
            }
        }
    }
    Ok(TrivialActionBlock { degree: d, rows, cols, matrix })
}

/// Row-reduces the trivial action per negative degree and marks the pivot
/// slots normalized-to-zero. Pivot choice: lowest relation index first.
/// Fails with `DegenerateNormalization` when the rank over a prime field
/// drops below the characteristic-0 rank.
pub fn normalize(u: &UnfoldedSystem, field: ScalarField) -> Result<UnfoldedSystem, Error> {
    let p = &u.presentation;
    if !p.is_complete_intersection() {
        return Err(Error::NotCompleteIntersection);
    }
    let jac = jacobian_on_curve(p)?;
    let s = &p.semigroup;
    let mut out = u.clone();
    for group in &mut out.coefficients {
        for c in group.iter_mut() {
            c.status = CoefficientStatus::Free;
        }
    }
    let max_s = match p.max_weight() {
        Some(w) => w,
        None => {
            out.normalized = true;
            return Ok(out);
        }
    };
    for d in -(max_s as i64)..0 {
        let (rows, _cols, matrix) = degree_block(&jac, s, d);
        if rows.is_empty() {
            continue;
        }
        let pivots = linalg::pivot_rows(&matrix, field);
        if field != ScalarField::Rational {
            let reference = linalg::rank(&matrix, ScalarField::Rational);
            if pivots.len() != reference {
                return Err(Error::DegenerateNormalization(d));
            }
        }
        for &pr in &pivots {
            let j = rows[pr];
            let m = (p.generators[j].weight as i64 + d) as u64;
            let slot = out.coefficients[j]
                .iter_mut()
                .find(|c| c.monomial_weight == m)
                .expect("slot exists for every row of the action block");
            slot.status = CoefficientStatus::NormalizedToZero;
        }
    }
    out.normalized = true;
    Ok(out)
}

/// The compactified moduli description P(w_1, ..., w_N): one coordinate per
/// free coefficient, graded by coefficient weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliReport {
    pub generators: Vec<u64>,
    pub characteristic: u64,
    /// Weights of the weighted projective space, ascending.
    pub weights: Vec<u64>,
    /// N - 1 where N is the number of free coefficients.
    pub dimension: u64,
    pub coefficient_total: usize,
    pub free_count: usize,
    pub normalized_count: usize,
    pub equations: Vec<String>,
}

impl ModuliReport {
    pub fn space(&self) -> String {
        let ws: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        format!("P({})", ws.join(","))
    }
}

pub fn moduli_report(
    s: &NumericalSemigroup,
    field: ScalarField,
) -> Result<ModuliReport, Error> {
    let p = presentation::minimal_presentation(s);
    moduli_report_for(&p, field)
}

pub fn moduli_report_for(
    p: &ToricPresentation,
    field: ScalarField,
) -> Result<ModuliReport, Error> {
    let s = &p.semigroup;
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if s.is_hyperelliptic() {
        return Err(Error::Hyperelliptic);
    }
    if !p.is_complete_intersection() {
        return Err(Error::NotCompleteIntersection);
    }
    let ch = field.characteristic();
    if !presentation::char_is_admissible(p, ch)? {
        return Err(Error::InadmissibleCharacteristic(ch));
    }
    let normalized = normalize(&unfold(p), field)?;
    let weights = normalized.free_weights();
    let free_count = weights.len();
    if free_count == 0 {
        // A curve with no negative deformations has empty moduli; genus 0
        // only, which the symmetry guard already excludes in practice.
        return Err(Error::GenusZero);
    }
    let total = normalized.total_coefficients();
    let equations = (0..normalized.coefficients.len())
        .map(|j| normalized.render_relation(j))
        .collect();
    Ok(ModuliReport {
        generators: s.minimal_generators().to_vec(),
        characteristic: ch,
        dimension: free_count as u64 - 1,
        weights,
        coefficient_total: total,
        free_count,
        normalized_count: total - free_count,
        equations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(gens: &[u64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(gens).unwrap()
    }

    fn pres(gens: &[u64]) -> ToricPresentation {
        presentation::minimal_presentation(&s(gens))
    }

    #[test]
    fn unfold_supports_4_7_10() {
        let u = unfold(&pres(&[4, 7, 10]));
        let w14: Vec<u64> = u.coefficients[0].iter().map(|c| c.monomial_weight).collect();
        assert_eq!(w14, vec![0, 4, 7, 8, 10, 11, 12]);
        assert_eq!(u.coefficients[1].len(), 13);
        assert_eq!(u.total_coefficients(), 20);
        for c in u.coefficients.iter().flatten() {
            assert!(c.weight > 0);
            assert_eq!(c.weight, c.relation_weight - c.monomial_weight);
        }
    }

    #[test]
    fn unfold_smallest_relation_support() {
        // Weight-6 relation of <2,3>: members below 6 are 0,2,3,4,5.
        let u = unfold(&pres(&[2, 3]));
        assert_eq!(u.coefficients[0].len(), 5);
    }

    #[test]
    fn normalize_4_7_10() {
        let u = normalize(&unfold(&pres(&[4, 7, 10])), ScalarField::Rational).unwrap();
        assert_eq!(u.free_coefficients().len(), 13);
        assert_eq!(u.total_coefficients() - u.free_coefficients().len(), 7);
        // Idempotent.
        let again = normalize(&u, ScalarField::Rational).unwrap();
        assert_eq!(u, again);
    }

    #[test]
    fn normalize_cusp_matches_t1() {
        let u = normalize(&unfold(&pres(&[2, 3])), ScalarField::Rational).unwrap();
        let t1 = crate::cotangent::t1_report(&s(&[2, 3]), ScalarField::Rational).unwrap();
        assert_eq!(u.free_coefficients().len() as u64, t1.negative_dim);
        assert_eq!(u.free_weights(), t1.coordinate_weights);
    }

    #[test]
    fn trivial_action_rank_totals() {
        let p = pres(&[4, 7, 10]);
        let max_s = p.max_weight().unwrap() as i64;
        let mut total_rank = 0;
        for d in -max_s..0 {
            let block = trivial_action_matrix(&p, d, ScalarField::Rational).unwrap();
            total_rank += linalg::rank(&block.matrix, ScalarField::Rational);
        }
        assert_eq!(total_rank, 7); // 20 coefficients - 13 moduli
        assert!(total_rank >= 6); // at least r(r+1)/2 linear changes
    }

    #[test]
    fn trivial_action_empty_degrees() {
        let p = pres(&[4, 7, 10]);
        let block = trivial_action_matrix(&p, -19, ScalarField::Rational).unwrap();
        assert!(block.cols.is_empty());
        assert!(trivial_action_matrix(&p, 1, ScalarField::Rational).is_err());
    }

    #[test]
    fn moduli_4_7_10() {
        let rep = moduli_report(&s(&[4, 7, 10]), ScalarField::Rational).unwrap();
        assert_eq!(rep.dimension, 12);
        assert_eq!(rep.free_count, 13);
        assert_eq!(rep.coefficient_total, 20);
        assert!(rep.space().starts_with("P("));
        assert_eq!(rep.equations.len(), 2);
    }

    #[test]
    fn moduli_guards() {
        assert!(matches!(
            moduli_report(&s(&[3, 4, 5]), ScalarField::Rational),
            Err(Error::NotSymmetric)
        ));
        assert!(matches!(
            moduli_report(&s(&[2, 3]), ScalarField::Rational),
            Err(Error::Hyperelliptic)
        ));
        assert!(matches!(
            moduli_report(&s(&[4, 7, 10]), ScalarField::Prime(2)),
            Err(Error::InadmissibleCharacteristic(2))
        ));
    }

    #[test]
    fn normalize_degenerates_in_char_2() {
        // The weight-14 relation has the entry 2 at the X7 column; at
        // degree -7 that is the whole block, so the rank drops mod 2.
        let u = unfold(&pres(&[4, 7, 10]));
        assert!(matches!(
            normalize(&u, ScalarField::Prime(2)),
            Err(Error::DegenerateNormalization(-7))
        ));
    }

    #[test]
    fn moduli_admissible_prime_matches_char0() {
        let r0 = moduli_report(&s(&[4, 7, 10]), ScalarField::Rational).unwrap();
        let r3 = moduli_report(&s(&[4, 7, 10]), ScalarField::Prime(3)).unwrap();
        assert_eq!(r0.weights, r3.weights);
        assert_eq!(r0.dimension, r3.dimension);
    }

    #[test]
    fn rendered_equation_names() {
        let u = normalize(&unfold(&pres(&[4, 7, 10])), ScalarField::Rational).unwrap();
        let eq = u.render_relation(1);
        assert!(eq.starts_with("X10^2 - X4^5"));
        assert!(eq.contains("c_{20,0}"));
    }
}
