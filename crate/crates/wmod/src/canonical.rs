//! The canonical monomial curve in P^{g-1}: folded quadratic forms, syzygy
//! certificates with coefficients in {-1,0,1}, the weight-preserving
//! shrinking map onto the minimal-generator variables, and the verification
//! that shrunk syzygies reduce to zero against the binomial presentation.

use std::collections::BTreeMap;

use crate::basis::{decompositions_two, shrunk_representative};
use crate::error::{Error, Guard};
use crate::presentation::{
    self, factorization_exponents, graph_components, shares_support, ExponentVector,
    ToricPresentation,
};
use crate::semigroup::NumericalSemigroup;

/// A monomial in the canonical variables X_{n_0}, ..., X_{n_{g-1}}, keyed by
/// variable weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CanonicalMonomial(pub Vec<(u64, u32)>);

impl CanonicalMonomial {
    pub fn from_values(values: &[u64]) -> Self {
        let mut map: BTreeMap<u64, u32> = BTreeMap::new();
        for &v in values {
            *map.entry(v).or_insert(0) += 1;
        }
        CanonicalMonomial(map.into_iter().collect())
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&(v, e)| v * e as u64).sum()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn render(&self) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        self.0
            .iter()
            .map(|&(v, e)| if e == 1 { format!("X{v}") } else { format!("X{v}^{e}") })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Integer polynomial in the canonical variables.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CanonicalPoly(pub BTreeMap<CanonicalMonomial, i64>);

impl CanonicalPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, mono: CanonicalMonomial, coef: i64) {
        use std::collections::btree_map::Entry;
        match self.0.entry(mono) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if coef != 0 {
                    e.insert(coef);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn render(&self) -> String {
        let terms: Vec<(&CanonicalMonomial, &i64)> =
            self.0.iter().filter(|(_, &c)| c != 0).collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else if i == 0 { "" } else { "+" };
            let mag = c.unsigned_abs();
            if i > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if i > 0 {
                out.push(' ');
            }
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&m.render());
        }
        out
    }
}

/// Integer polynomial in the minimal-generator variables, keyed by exponent
/// vector.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MinGenPoly(pub BTreeMap<Vec<u32>, i64>);

impl MinGenPoly {
    pub fn add_term(&mut self, exps: Vec<u32>, coef: i64) {
        use std::collections::btree_map::Entry;
        match self.0.entry(exps) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coef;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if coef != 0 {
                    e.insert(coef);
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn render(&self, gens: &[u64]) -> String {
        let terms: Vec<(&Vec<u32>, &i64)> = self.0.iter().filter(|(_, &c)| c != 0).collect();
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exps, &c)) in terms.iter().enumerate() {
            let ev = ExponentVector::new((*exps).clone(), gens);
            let sign = if c < 0 { "-" } else if i == 0 { "" } else { "+" };
            if i > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if i > 0 {
                out.push(' ');
            }
            let mag = c.unsigned_abs();
            if mag != 1 {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(&ev.render(gens));
        }
        out
    }
}

/// A folded quadratic form F_{s,i} = X_a X_b - X_{a_s} X_{b_s}: the i-th
/// two-part decomposition of s against the first one. Rendered labels follow
/// the convention that the first non-base decomposition is index 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalQuadric {
    pub s: u64,
    /// 1-based index into the decompositions of s; always >= 2.
    pub index: usize,
    pub plus: (u64, u64),
    pub minus: (u64, u64),
}

impl CanonicalQuadric {
    pub fn label(&self) -> String {
        format!("F_{{{},{}}}", self.s, self.index - 1)
    }

    pub fn render(&self) -> String {
        format!("{} - {}", render_pair(self.plus), render_pair(self.minus))
    }

    pub fn poly(&self) -> CanonicalPoly {
        let mut p = CanonicalPoly::zero();
        p.add_term(CanonicalMonomial::from_values(&[self.plus.0, self.plus.1]), 1);
        p.add_term(CanonicalMonomial::from_values(&[self.minus.0, self.minus.1]), -1);
        p
    }
}

fn render_pair((a, b): (u64, u64)) -> String {
    if a == b {
        format!("X{a}^2")
    } else {
        format!("X{a}*X{b}")
    }
}

/// One signed term X_n F_{s,i} of a syzygy certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyzygyTerm {
    pub nongap: u64,
    pub s: u64,
    pub index: usize,
    pub sign: i8,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SyzygyCertificate {
    pub target: (u64, usize),
    /// All terms, the leading X_{2g-2} F_target first with sign +1.
    pub terms: Vec<SyzygyTerm>,
}

impl SyzygyCertificate {
    pub fn render(&self, model: &CanonicalModel) -> String {
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let q = model.quadric(t.s, t.index).expect("certificate term is a quadric");
            let sign = if t.sign < 0 { "-" } else if i == 0 { "" } else { "+" };
            if i > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&format!("X{}*{}", t.nongap, q.label()));
        }
        out.push_str(" = 0");
        out
    }
}

/// The canonical monomial curve and its quadric machinery for a symmetric
/// non-hyperelliptic semigroup with 3 < n_1 < g, g > 3, and not <4,5>.
#[derive(Debug, Clone)]
pub struct CanonicalModel {
    pub semigroup: NumericalSemigroup,
    pub canonical_generators: Vec<u64>,
    /// Parametrization exponent pairs (n_i, l_{g-i} - 1) per coordinate.
    pub coordinates: Vec<(u64, u64)>,
    quadrics: Vec<CanonicalQuadric>,
    by_key: BTreeMap<(u64, usize), usize>,
}

/// Checks the canonical-model guards in order.
pub fn guards(s: &NumericalSemigroup) -> Result<(), Error> {
    if !s.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if s.is_hyperelliptic() {
        return Err(Error::GuardViolation(Guard::Hyperelliptic));
    }
    if s.genus() <= 3 {
        return Err(Error::GuardViolation(Guard::GenusAtMostThree));
    }
    let n1 = s.multiplicity();
    if n1 == 3 {
        return Err(Error::GuardViolation(Guard::FirstNongapThree));
    }
    if n1 >= s.genus() {
        return Err(Error::GuardViolation(Guard::FirstNongapAtLeastGenus));
    }
    if s.minimal_generators() == [4, 5] {
        return Err(Error::GuardViolation(Guard::QuarticQuintic));
    }
    Ok(())
}

impl CanonicalModel {
    pub fn new(s: &NumericalSemigroup) -> Result<Self, Error> {
        guards(s)?;
        let cg = s.canonical_generators()?;
        let g = s.genus();
        // Symmetry pairs the gaps with the nongaps: l_{g-i} = 2g-1-n_i.
        let coordinates: Vec<(u64, u64)> = cg.iter().map(|&n| (n, 2 * g - 2 - n)).collect();
        let mut quadrics = Vec::new();
        let mut by_key = BTreeMap::new();
        for m in s.members_below(4 * g - 3) {
            let decs = decompositions_two(s, m)?;
            for i in 2..=decs.len() {
                by_key.insert((m, i), quadrics.len());
                quadrics.push(CanonicalQuadric {
                    s: m,
                    index: i,
                    plus: decs[i - 1],
                    minus: decs[0],
                });
            }
        }
        Ok(CanonicalModel {
            semigroup: s.clone(),
            canonical_generators: cg,
            coordinates,
            quadrics,
            by_key,
        })
    }

    pub fn quadrics(&self) -> &[CanonicalQuadric] {
        &self.quadrics
    }

    pub fn quadric(&self, s: u64, index: usize) -> Option<&CanonicalQuadric> {
        self.by_key.get(&(s, index)).map(|&i| &self.quadrics[i])
    }

    /// Targets F_{n_i + 2g-2, 1} for i = 0..g-3: excluded from the syzygy
    /// search.
    pub fn excluded_targets(&self) -> Vec<(u64, usize)> {
        let g = self.semigroup.genus();
        let mut out = Vec::new();
        for &n in &self.canonical_generators[..(g as usize - 2)] {
            let s = n + 2 * g - 2;
            if self.by_key.contains_key(&(s, 2)) {
                out.push((s, 2));
            }
        }
        out
    }

    fn is_excluded(&self, target: (u64, usize)) -> bool {
        self.excluded_targets().contains(&target)
    }

    /// Evaluates the polynomial on the parametrized curve: every variable
    /// X_v becomes a^v b^{2g-2-v}. True when the result is identically zero.
    pub fn vanishes_on_curve(&self, poly: &CanonicalPoly) -> bool {
        let cap = 2 * self.semigroup.genus() - 2;
        let mut buckets: BTreeMap<(u64, u64), i64> = BTreeMap::new();
        for (mono, &coef) in &poly.0 {
            let a_exp = mono.weight();
            let b_exp = mono.degree() as u64 * cap - a_exp;
            *buckets.entry((a_exp, b_exp)).or_insert(0) += coef;
        }
        buckets.values().all(|&c| c == 0)
    }

    /// Finds a syzygy X_{2g-2} F_target + sum eps X_n F = 0 with signs in
    /// {-1,0,1}, as a path through the weight-(s'+2g-2) cubic monomials:
    /// every candidate term swaps one two-part decomposition while fixing
    /// the third factor.
    pub fn find_syzygy(&self, target: (u64, usize)) -> Result<SyzygyCertificate, Error> {
        let (s_t, i_t) = target;
        let Some(tq) = self.quadric(s_t, i_t) else {
            return Err(Error::NoCertificate { s: s_t, label: i_t.saturating_sub(1) });
        };
        if self.is_excluded(target) {
            return Err(Error::ExcludedTarget { s: s_t, label: i_t - 1 });
        }
        let g = self.semigroup.genus();
        let cap = 2 * g - 2;
        let w = s_t + cap;

        let start = triple(cap, tq.plus);
        let goal = triple(cap, tq.minus);

        // Candidate edges in ascending (n, s, i) order for determinism.
        let mut edges: Vec<(SyzygyTerm, [u64; 3], [u64; 3])> = Vec::new();
        for n in self.semigroup.members_below(cap + 1) {
            let s = w - n;
            if s > 4 * g - 4 || !self.semigroup.contains(s) {
                continue;
            }
            let Ok(decs) = decompositions_two(&self.semigroup, s) else {
                continue;
            };
            for i in 2..=decs.len() {
                if n == cap && (s, i) == target {
                    continue; // the leading term itself
                }
                let q = self.quadric(s, i).unwrap();
                edges.push((
                    SyzygyTerm { nongap: n, s, index: i, sign: 0 },
                    triple(n, q.plus),
                    triple(n, q.minus),
                ));
            }
        }

        let mut adjacency: BTreeMap<[u64; 3], Vec<(usize, [u64; 3])>> = BTreeMap::new();
        for (idx, (_, p, m)) in edges.iter().enumerate() {
            adjacency.entry(*p).or_default().push((idx, *m));
            adjacency.entry(*m).or_default().push((idx, *p));
        }

        // Breadth-first search from the plus triple to the minus triple.
        let mut parent: BTreeMap<[u64; 3], ([u64; 3], usize)> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(start);
        let mut found = false;
        while let Some(v) = queue.pop_front() {
            if v == goal {
                found = true;
                break;
            }
            if let Some(neigh) = adjacency.get(&v) {
                for &(edge_idx, u) in neigh {
                    if u != start && !parent.contains_key(&u) {
                        parent.insert(u, (v, edge_idx));
                        queue.push_back(u);
                    }
                }
            }
        }
        if !found {
            return Err(Error::NoCertificate { s: s_t, label: i_t - 1 });
        }

        // Walk back from the goal, assigning the sign that телescopes each
        // edge toward the goal: +1 when the minus side sits nearer the start.
        let mut path: Vec<(usize, [u64; 3], [u64; 3])> = Vec::new(); // (edge, earlier, later)
        let mut v = goal;
        while v != start {
            let (prev, edge_idx) = parent[&v];
            path.push((edge_idx, prev, v));
            v = prev;
        }
        path.reverse();

        let mut terms = vec![SyzygyTerm { nongap: cap, s: s_t, index: i_t, sign: 1 }];
        for (edge_idx, earlier, _later) in path {
            let (term, _p, m) = &edges[edge_idx];
            let sign = if *m == earlier { 1 } else { -1 };
            terms.push(SyzygyTerm { sign, ..*term });
        }

        let cert = SyzygyCertificate { target, terms };
        let mut expansion = CanonicalPoly::zero();
        for t in &cert.terms {
            let q = self.quadric(t.s, t.index).unwrap();
            expansion.add_term(
                CanonicalMonomial::from_values(&[t.nongap, q.plus.0, q.plus.1]),
                t.sign as i64,
            );
            expansion.add_term(
                CanonicalMonomial::from_values(&[t.nongap, q.minus.0, q.minus.1]),
                -(t.sign as i64),
            );
        }
        assert!(expansion.is_zero(), "certificate expansion must cancel");
        Ok(cert)
    }

    /// Certificates for every non-excluded quadric.
    pub fn all_certificates(&self) -> Result<Vec<SyzygyCertificate>, Error> {
        self.quadrics
            .iter()
            .filter(|q| !self.is_excluded((q.s, q.index)))
            .map(|q| self.find_syzygy((q.s, q.index)))
            .collect()
    }

    /// The shrinking map: X_{n_0} -> 1 and X_{n_i} -> the shrunk
    /// representative of n_i. Weight-preserving ring homomorphism onto the
    /// minimal-generator variables.
    pub fn shrink(&self, poly: &CanonicalPoly) -> MinGenPoly {
        let s = &self.semigroup;
        let r = s.embedding_dimension();
        let mut out = MinGenPoly::default();
        for (mono, &coef) in &poly.0 {
            if coef == 0 {
                continue;
            }
            let mut exps = vec![0u32; r];
            for &(v, e) in &mono.0 {
                if v == 0 {
                    continue;
                }
                let rep = shrunk_representative(s, v).expect("canonical generators are members");
                for (slot, &re) in exps.iter_mut().zip(&rep.exponents) {
                    *slot += re * e;
                }
            }
            out.add_term(exps, coef);
        }
        out
    }

    /// Shrinks every certificate term, reduces both product monomials to the
    /// canonical factorization through the presentation, and checks that the
    /// assembled multipliers of each binomial generator cancel.
    pub fn verify_shrunk_syzygy(
        &self,
        cert: &SyzygyCertificate,
    ) -> Result<ReductionTrace, Error> {
        let s = &self.semigroup;
        let p = presentation::minimal_presentation(s);
        if !p.is_complete_intersection() {
            return Err(Error::NotCompleteIntersection);
        }
        let gens = s.minimal_generators().to_vec();
        let mut reducer = Reducer { s, p: &p, cache: BTreeMap::new() };

        let mut term_images = Vec::new();
        let mut contributions: Vec<Vec<(i64, Vec<u32>)>> =
            vec![Vec::new(); p.generators.len()];
        for t in &cert.terms {
            let q = self.quadric(t.s, t.index).expect("certificate term is a quadric");
            let mut image = CanonicalPoly::zero();
            image.add_term(
                CanonicalMonomial::from_values(&[t.nongap, q.plus.0, q.plus.1]),
                t.sign as i64,
            );
            image.add_term(
                CanonicalMonomial::from_values(&[t.nongap, q.minus.0, q.minus.1]),
                -(t.sign as i64),
            );
            let shrunk = self.shrink(&image);
            let label = format!(
                "{}X{}*{}",
                if t.sign < 0 { "-" } else { "+" },
                t.nongap,
                q.label()
            );
            term_images.push((label, shrunk.render(&gens)));

            // Reduce the two product monomials independently; identical
            // monomials get identical reductions, so a cancelling expansion
            // assembles to zero per generator.
            let plus_m = self.shrink_monomial(&[t.nongap, q.plus.0, q.plus.1]);
            let minus_m = self.shrink_monomial(&[t.nongap, q.minus.0, q.minus.1]);
            for (coef, mult, j) in reducer.reduce_to_canonical(&plus_m) {
                contributions[j].push((t.sign as i64 * coef, mult));
            }
            for (coef, mult, j) in reducer.reduce_to_canonical(&minus_m) {
                contributions[j].push((-(t.sign as i64) * coef, mult));
            }
        }

        let mut lines = Vec::new();
        let mut residue_zero = true;
        let mut generator_contributions = Vec::new();
        for (j, contribs) in contributions.iter().enumerate() {
            let mut total = MinGenPoly::default();
            for (c, m) in contribs {
                total.add_term(m.clone(), *c);
            }
            let zero = total.is_zero();
            residue_zero &= zero;
            let shown: Vec<String> = contribs
                .iter()
                .map(|(c, m)| {
                    let ev = ExponentVector::new(m.clone(), &gens);
                    format!("{}{}", if *c < 0 { "-" } else { "+" }, ev.render(&gens))
                })
                .collect();
            let lhs = if shown.is_empty() { "0".to_string() } else { shown.join(" ") };
            lines.push(format!(
                "G{}: {} = {}",
                j + 1,
                lhs,
                if zero { "0" } else { "NONZERO" }
            ));
            generator_contributions.push(
                contribs
                    .iter()
                    .map(|(c, m)| (*c, ExponentVector::new(m.clone(), &gens)))
                    .collect(),
            );
        }
        if term_images.iter().all(|(_, img)| img == "0") {
            lines.push("all terms shrink to zero; trivially zero".to_string());
        }
        if !residue_zero {
            return Err(Error::NonZeroResidue);
        }
        Ok(ReductionTrace { term_images, generator_contributions, residue_zero, lines })
    }

    fn shrink_monomial(&self, values: &[u64]) -> Vec<u32> {
        let s = &self.semigroup;
        let mut exps = vec![0u32; s.embedding_dimension()];
        for &v in values {
            if v == 0 {
                continue;
            }
            let rep = shrunk_representative(s, v).unwrap();
            for (slot, &re) in exps.iter_mut().zip(&rep.exponents) {
                *slot += re;
            }
        }
        exps
    }
}

fn triple(n: u64, (a, b): (u64, u64)) -> [u64; 3] {
    let mut t = [n, a, b];
    t.sort_unstable();
    t
}

/// How every shrunk quadric decomposed over the presentation generators,
/// with the final cancellation verdict.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    /// (signed term label, rendered shrink image).
    pub term_images: Vec<(String, String)>,
    /// Per presentation generator: the signed monomial multipliers collected
    /// before cancellation.
    pub generator_contributions: Vec<Vec<(i64, ExponentVector)>>,
    pub residue_zero: bool,
    pub lines: Vec<String>,
}

struct WeightData {
    facts: Vec<Vec<u32>>,
    comp_of: Vec<usize>,
    comp_members: Vec<Vec<usize>>,
    comp_least: Vec<usize>,
    base: usize,
    /// Non-base component -> index of its connecting generator in the
    /// presentation.
    comp_generator: BTreeMap<usize, usize>,
}

struct Reducer<'a> {
    s: &'a NumericalSemigroup,
    p: &'a ToricPresentation,
    cache: BTreeMap<u64, WeightData>,
}

impl<'a> Reducer<'a> {
    fn weight_data(&mut self, w: u64) -> &WeightData {
        if !self.cache.contains_key(&w) {
            let facts = factorization_exponents(self.s, w);
            let components = graph_components(&facts);
            let mut comp_of = vec![0usize; facts.len()];
            for (ci, comp) in components.iter().enumerate() {
                for &v in comp {
                    comp_of[v] = ci;
                }
            }
            let comp_least: Vec<usize> = components
                .iter()
                .map(|c| *c.iter().min_by(|&&a, &&b| facts[a].cmp(&facts[b])).unwrap())
                .collect();
            let global = (0..facts.len())
                .min_by(|&a, &b| facts[a].cmp(&facts[b]))
                .unwrap_or(0);
            let base = comp_of[global];
            let mut comp_generator = BTreeMap::new();
            for (ci, &least) in comp_least.iter().enumerate() {
                if ci == base {
                    continue;
                }
                let j = self
                    .p
                    .generators
                    .iter()
                    .position(|b| b.weight == w && b.minus.exponents == facts[least])
                    .expect("presentation connects every non-base component");
                comp_generator.insert(ci, j);
            }
            self.cache.insert(
                w,
                WeightData {
                    facts,
                    comp_of,
                    comp_members: components,
                    comp_least,
                    base,
                    comp_generator,
                },
            );
        }
        &self.cache[&w]
    }

    /// Expresses X^mono - X^can(w) as sum of coef * X^mult * G_j with
    /// coef in {-1, 1}. Deterministic per monomial.
    fn reduce_to_canonical(&mut self, mono: &[u32]) -> Vec<(i64, Vec<u32>, usize)> {
        let w: u64 = mono
            .iter()
            .zip(self.s.minimal_generators())
            .map(|(&e, &a)| e as u64 * a)
            .sum();
        let data = self.weight_data(w);
        let can = data.facts[data.comp_least[data.base]].clone();
        self.reduce_pair(mono.to_vec(), can)
    }

    /// X^a - X^b for two factorizations of the same weight.
    fn reduce_pair(&mut self, a: Vec<u32>, b: Vec<u32>) -> Vec<(i64, Vec<u32>, usize)> {
        if a == b {
            return Vec::new();
        }
        debug_assert_eq!(
            weight_of(&a, self.s.minimal_generators()),
            weight_of(&b, self.s.minimal_generators())
        );
        let common: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| x.min(y)).collect();
        if common.iter().any(|&c| c > 0) {
            let a2: Vec<u32> = a.iter().zip(&common).map(|(&x, &c)| x - c).collect();
            let b2: Vec<u32> = b.iter().zip(&common).map(|(&x, &c)| x - c).collect();
            return self
                .reduce_pair(a2, b2)
                .into_iter()
                .map(|(coef, mult, j)| {
                    let lifted: Vec<u32> =
                        mult.iter().zip(&common).map(|(&m, &c)| m + c).collect();
                    (coef, lifted, j)
                })
                .collect();
        }
        // Disjoint supports now; locate both factorizations at this weight.
        // Clone what the recursion needs before re-borrowing self.
        let w = weight_of(&a, self.s.minimal_generators());
        enum Route {
            SamePath(Vec<Vec<u32>>),
            CrossComponents {
                fa_least: Vec<u32>,
                fb_least: Vec<u32>,
                gen_a: Option<usize>,
                gen_b: Option<usize>,
            },
        }
        let route = {
            let data = self.weight_data(w);
            let ia = data.facts.iter().position(|f| *f == a).expect("factorization exists");
            let ib = data.facts.iter().position(|f| *f == b).expect("factorization exists");
            let ca = data.comp_of[ia];
            let cb = data.comp_of[ib];
            if ca == cb {
                let path = component_path(data, ia, ib);
                Route::SamePath(path.iter().map(|&v| data.facts[v].clone()).collect())
            } else {
                Route::CrossComponents {
                    fa_least: data.facts[data.comp_least[ca]].clone(),
                    fb_least: data.facts[data.comp_least[cb]].clone(),
                    gen_a: if ca != data.base {
                        Some(data.comp_generator[&ca])
                    } else {
                        None
                    },
                    gen_b: if cb != data.base {
                        Some(data.comp_generator[&cb])
                    } else {
                        None
                    },
                }
            }
        };
        match route {
            Route::SamePath(path_facts) => {
                let mut acc = Vec::new();
                for step in path_facts.windows(2) {
                    acc.extend(self.reduce_pair(step[0].clone(), step[1].clone()));
                }
                acc
            }
            Route::CrossComponents { fa_least, fb_least, gen_a, gen_b } => {
                let zero = vec![0u32; a.len()];
                let mut acc = self.reduce_pair(a, fa_least);
                if let Some(j) = gen_a {
                    acc.push((-1, zero.clone(), j));
                }
                if let Some(j) = gen_b {
                    acc.push((1, zero, j));
                }
                acc.extend(self.reduce_pair(fb_least, b));
                acc
            }
        }
    }
}

fn weight_of(exps: &[u32], gens: &[u64]) -> u64 {
    exps.iter().zip(gens).map(|(&e, &a)| e as u64 * a).sum()
}

/// Shortest path between two vertices of one factorization-graph component,
/// breadth-first with ascending neighbor order.
fn component_path(data: &WeightData, from: usize, to: usize) -> Vec<usize> {
    let members = &data.comp_members[data.comp_of[from]];
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(from);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &u in members {
            if u != from
                && !parent.contains_key(&u)
                && shares_support(&data.facts[v], &data.facts[u])
            {
                parent.insert(u, v);
                queue.push_back(u);
            }
        }
    }
    let mut path = vec![to];
    let mut v = to;
    while v != from {
        v = parent[&v];
        path.push(v);
    }
    path.reverse();
    path
}
