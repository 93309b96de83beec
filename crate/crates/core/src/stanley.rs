//! h-vector decompositions over a split `E = A ⊔ (E \ A)`, passive-set
//! splitting, O-sequences, and the multicomplex witness search.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::activities::internally_passive;
use crate::axioms::{check_fbp, check_qe, check_qi};
use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::multicomplex::{Assignment, Monomial};
use crate::polynomial::UnivariatePolynomial;
use crate::vertex_set::VertexSet;

/// `Ψ_{A,I}`: contract `i`, then restrict to `a`. Labels are kept.
pub fn restricted_contraction(
    c: &OrderedComplex,
    a: VertexSet,
    i: VertexSet,
) -> Result<OrderedComplex> {
    c.link(i)?.restrict_labeled(a)
}

/// Faces of `c` avoiding `a`.
fn faces_outside(c: &OrderedComplex, a: VertexSet) -> Vec<VertexSet> {
    let mut faces: Vec<VertexSet> = c
        .face_set()
        .into_iter()
        .filter(|f| f.is_disjoint(a))
        .collect();
    faces.sort();
    faces
}

/// Rank test: `rk Ψ_{A,I} = d - |I|` for every face `I` avoiding `A`.
pub fn is_admissible(c: &OrderedComplex, a: VertexSet) -> bool {
    let d = c.rank();
    a.is_subset(c.ground())
        && faces_outside(c, a)
            .into_iter()
            .all(|i| restricted_contraction(c, a, i).expect("face").rank() == d - i.len())
}

/// The two sufficient conditions for admissibility, evaluated literally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityClauses {
    /// QE, and `A` holds every coloop and everything up to the largest
    /// non-coloop of `B0` (so `B0 ⊆ A`).
    pub exchange: bool,
    /// QI, and `A ⊇ B0`.
    pub independence: bool,
}

pub fn admissibility_clauses(c: &OrderedComplex, a: VertexSet) -> AdmissibilityClauses {
    let b0 = c.lex_min_basis();
    let coloops = c.coloops();
    let lower = match b0.difference(coloops).max() {
        Some(m) => VertexSet::interval(1, m),
        None => VertexSet::empty(),
    };
    let exchange = coloops.union(lower).is_subset(a) && check_qe(c).holds;
    let independence = b0.is_subset(a) && check_qi(c).holds;
    AdmissibilityClauses {
        exchange,
        independence,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTerm {
    pub face: VertexSet,
    pub h: UnivariatePolynomial,
    /// `(d - |I|) - rk Ψ_{A,I}`.
    pub deficit: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub a: VertexSet,
    pub terms: Vec<DecompositionTerm>,
    pub h: UnivariatePolynomial,
    /// `sum x^|I| (1-x)^deficit h(Ψ_{A,I})`.
    pub general: UnivariatePolynomial,
    /// `sum x^|I| h(Ψ_{A,I})`, which equals `h` when every deficit is zero.
    pub refined: UnivariatePolynomial,
}

impl Decomposition {
    pub fn general_holds(&self) -> bool {
        self.general == self.h
    }

    pub fn refined_holds(&self) -> bool {
        self.refined == self.h
    }

    pub fn deficits_vanish(&self) -> bool {
        self.terms.iter().all(|t| t.deficit == 0)
    }
}

/// Splits the faces of a pure complex by their part outside `a`.
pub fn h_decomposition(c: &OrderedComplex, a: VertexSet) -> Result<Decomposition> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let d = c.rank();
    let mut terms = Vec::new();
    let mut general = UnivariatePolynomial::zero();
    let mut refined = UnivariatePolynomial::zero();
    for i in faces_outside(c, a) {
        let sub = restricted_contraction(c, a, i)?;
        let h = sub.h_polynomial();
        let deficit = d - i.len() - sub.rank();
        general = &general + &(&h * &UnivariatePolynomial::one_minus_x_pow(deficit)).shift(i.len());
        refined = &refined + &h.shift(i.len());
        terms.push(DecompositionTerm {
            face: i,
            h,
            deficit,
        });
    }
    Ok(Decomposition {
        a,
        terms,
        h: c.h_polynomial(),
        general,
        refined,
    })
}

/// Which face is split off each basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitMode {
    /// `I = B \ A`, for QE complexes whose `A` meets the exchange clause.
    /// The rank test alone is not enough here.
    OutsideA,
    /// `I = B \ B0`, for QE ∩ QI ∩ FBP complexes with `A ⊇ B0`.
    OutsideB0,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplitReport {
    pub holds: bool,
    /// Bases where `IP(B) ≠ I ∪ IP(B \ I, Ψ_{A,I})`.
    pub failures: Vec<VertexSet>,
}

/// Tests `IP(B) = I ∪ IP(B \ I, Ψ_{A,I})` basis by basis, without checking
/// the class preconditions.
pub fn passive_splitting_unchecked(
    c: &OrderedComplex,
    a: VertexSet,
    mode: SplitMode,
) -> SplitReport {
    let b0 = c.lex_min_basis();
    let failures: Vec<VertexSet> = c
        .bases()
        .iter()
        .copied()
        .filter(|&b| {
            let i = match mode {
                SplitMode::OutsideA => b.difference(a),
                SplitMode::OutsideB0 => b.difference(b0),
            };
            let sub = restricted_contraction(c, a, i).expect("subset of a basis");
            let rest = b.difference(i);
            !sub.is_basis(rest)
                || internally_passive(c, b) != i.union(internally_passive(&sub, rest))
        })
        .collect();
    SplitReport {
        holds: failures.is_empty(),
        failures,
    }
}

pub fn passive_splitting_check(
    c: &OrderedComplex,
    a: VertexSet,
    mode: SplitMode,
) -> Result<SplitReport> {
    match mode {
        SplitMode::OutsideA => {
            if !admissibility_clauses(c, a).exchange {
                return Err(Error::Precondition(
                    "needs QE and a set meeting the exchange clause".into(),
                ));
            }
        }
        SplitMode::OutsideB0 => {
            let in_class = check_qe(c).holds && check_qi(c).holds && check_fbp(c).holds;
            if !in_class || !c.lex_min_basis().is_subset(a) {
                return Err(Error::Precondition(
                    "needs QE, QI, FBP and a set containing B0".into(),
                ));
            }
        }
    }
    Ok(passive_splitting_unchecked(c, a, mode))
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `h^<i>` from the `i`-binomial (Macaulay) expansion of `h`.
pub fn macaulay_bound(h: u64, i: u64) -> u128 {
    if h == 0 || i == 0 {
        return if i == 0 && h > 0 { u128::MAX } else { 0 };
    }
    let mut rest = h as u128;
    let mut total = 0u128;
    let mut k = i;
    while rest > 0 && k > 0 {
        let mut a = k;
        while binomial(a + 1, k) <= rest {
            a += 1;
        }
        rest -= binomial(a, k);
        total += binomial(a + 1, k + 1);
        k -= 1;
    }
    total
}

/// Degree census of some multicomplex.
pub fn is_o_sequence(h: &[i64]) -> bool {
    if h.iter().any(|&x| x < 0) {
        return false;
    }
    if h.is_empty() {
        return true;
    }
    if h[0] != 1 {
        return false;
    }
    (1..h.len()).all(|i| {
        let prev = h[i - 1] as u64;
        let bound = if i == 1 {
            u128::MAX
        } else {
            macaulay_bound(prev, i as u64 - 1)
        };
        (h[i] as u128) <= bound
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "answer", rename_all = "kebab-case")]
pub enum Ternary {
    Yes { generators: Vec<Monomial> },
    No,
    Unknown { reason: String },
}

/// Search bounds for [`is_pure_o_sequence`].
#[derive(Clone, Copy, Debug)]
pub struct PureSearchBounds {
    pub max_degree: usize,
    pub max_variables: usize,
    pub max_nodes: u64,
}

impl Default for PureSearchBounds {
    fn default() -> Self {
        PureSearchBounds {
            max_degree: 8,
            max_variables: 12,
            max_nodes: 2_000_000,
        }
    }
}

/// Exponent vectors of total degree `t` in `k` variables, lex-decreasing.
fn monomials_of_degree(k: usize, t: usize) -> Vec<Vec<u8>> {
    fn rec(k: usize, left: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() + 1 == k {
            cur.push(left as u8);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e as u8);
            rec(k, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if t == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, t, &mut Vec::new(), &mut out);
    out
}

struct PureSearch<'a> {
    h: &'a [i64],
    top: usize,
    candidates: Vec<Vec<u8>>,
    /// Divisor count per degree.
    counts: Vec<i64>,
    /// Multiplicity of each divisor currently generated.
    present: BTreeMap<Vec<u8>, u32>,
    chosen: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl PureSearch<'_> {
    fn divisors(m: &[u8]) -> Vec<Vec<u8>> {
        let mut out = vec![Vec::with_capacity(m.len())];
        for &e in m {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=e).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }

    fn add(&mut self, m: &[u8]) -> bool {
        let mut ok = true;
        for dvs in Self::divisors(m) {
            let c = self.present.entry(dvs.clone()).or_insert(0);
            *c += 1;
            if *c == 1 {
                let deg: usize = dvs.iter().map(|&e| e as usize).sum();
                self.counts[deg] += 1;
                if self.counts[deg] > self.h[deg] {
                    ok = false;
                }
            }
        }
        ok
    }

    fn remove(&mut self, m: &[u8]) {
        for dvs in Self::divisors(m) {
            let c = self.present.get_mut(&dvs).expect("added before");
            *c -= 1;
            if *c == 0 {
                self.present.remove(&dvs);
                let deg: usize = dvs.iter().map(|&e| e as usize).sum();
                self.counts[deg] -= 1;
            }
        }
    }

    /// `Some(found)` or `None` when out of budget.
    fn dfs(&mut self, start: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        if self.chosen.len() as i64 == self.h[self.top] {
            return Some(self.counts.as_slice() == self.h);
        }
        let need = self.h[self.top] as usize - self.chosen.len();
        for idx in start..self.candidates.len() {
            if self.candidates.len() - idx < need {
                break;
            }
            // The first generator may be taken with decreasing exponents.
            if self.chosen.is_empty() && self.candidates[idx].windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let m = self.candidates[idx].clone();
            let ok = self.add(&m);
            self.chosen.push(idx);
            if ok {
                match self.dfs(idx + 1) {
                    Some(true) => return Some(true),
                    Some(false) => {}
                    None => return None,
                }
            }
            self.chosen.pop();
            self.remove(&m);
        }
        Some(false)
    }
}

/// Census of a multicomplex whose maximal monomials share one degree.
pub fn is_pure_o_sequence(h: &[i64], bounds: PureSearchBounds) -> Ternary {
    let mut h: Vec<i64> = h.to_vec();
    while h.len() > 1 && h.last() == Some(&0) {
        h.pop();
    }
    if !is_o_sequence(&h) {
        return Ternary::No;
    }
    if h.is_empty() {
        return Ternary::Yes {
            generators: Vec::new(),
        };
    }
    let top = h.len() - 1;
    if top == 0 {
        return Ternary::Yes {
            generators: vec![Monomial::one()],
        };
    }
    let k = h[1] as usize;
    if top > bounds.max_degree || k > bounds.max_variables {
        return Ternary::Unknown {
            reason: format!("degree {top} with {k} variables exceeds the search bound"),
        };
    }
    let mut search = PureSearch {
        h: &h,
        top,
        candidates: monomials_of_degree(k, top),
        counts: vec![0; top + 1],
        present: BTreeMap::new(),
        chosen: Vec::new(),
        nodes: 0,
        max_nodes: bounds.max_nodes,
    };
    match search.dfs(0) {
        Some(true) => Ternary::Yes {
            generators: search
                .chosen
                .iter()
                .map(|&i| {
                    Monomial::from_exponents(
                        search.candidates[i]
                            .iter()
                            .enumerate()
                            .map(|(v, &e)| (v + 1, e as u32)),
                    )
                })
                .collect(),
        },
        Some(false) => Ternary::No,
        None => Ternary::Unknown {
            reason: format!("node budget of {} exhausted", bounds.max_nodes),
        },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum SearchOutcome {
    Found {
        assignment: Assignment,
    },
    /// Every candidate assignment was rejected.
    Exhausted,
    BudgetExceeded {
        nodes: u64,
    },
}

impl SearchOutcome {
    pub fn assignment(&self) -> Option<&Assignment> {
        match self {
            SearchOutcome::Found { assignment } => Some(assignment),
            _ => None,
        }
    }
}

/// Exponent vectors with every entry positive, summing to `deg`, in
/// lexicographic order of the tuple over ascending variables.
fn positive_compositions(vars: &[usize], deg: usize) -> Vec<Monomial> {
    fn rec(vars: &[usize], left: usize, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Monomial>) {
        match vars {
            [] => {
                if left == 0 {
                    out.push(Monomial::from_exponents(cur.iter().copied()));
                }
            }
            [last] => {
                if left >= 1 {
                    cur.push((*last, left as u32));
                    out.push(Monomial::from_exponents(cur.iter().copied()));
                    cur.pop();
                }
            }
            [v, rest @ ..] => {
                for e in 1..=left.saturating_sub(rest.len()) {
                    cur.push((*v, e as u32));
                    rec(rest, left - e, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, deg, &mut Vec::new(), &mut out);
    out
}

struct WitnessSearch {
    bases: Vec<VertexSet>,
    options: Vec<Vec<Monomial>>,
    chosen: Vec<Monomial>,
    nodes: u64,
    max_nodes: u64,
}

impl WitnessSearch {
    fn fits(&self, k: usize, m: &Monomial) -> bool {
        let b = self.bases[k];
        if self.chosen.contains(m) {
            return false;
        }
        // Earlier monomials dividing m must sit Gale-below b.
        for (j, prev) in self.chosen.iter().enumerate() {
            if prev.divides(m) && !self.bases[j].gale_le(b) {
                return false;
            }
        }
        // Every lower divisor is already placed: its basis would have to be
        // Gale-below b, hence earlier in lex order.
        m.lower_divisors().iter().all(|d| self.chosen.contains(d))
    }

    fn dfs(&mut self) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return None;
        }
        let k = self.chosen.len();
        if k == self.bases.len() {
            return Some(true);
        }
        for idx in 0..self.options[k].len() {
            let m = self.options[k][idx].clone();
            if !self.fits(k, &m) {
                continue;
            }
            self.chosen.push(m);
            match self.dfs() {
                Some(true) => return Some(true),
                Some(false) => {}
                None => return None,
            }
            self.chosen.pop();
        }
        Some(false)
    }
}

/// Depth-first search for the lexicographically least witness, with bases
/// in lex order (a linear extension of the Gale order, so every prefix is a
/// Gale truncation).
pub fn search_multicomplex(c: &OrderedComplex, max_nodes: u64) -> Result<SearchOutcome> {
    if !(check_qe(c).holds && check_qi(c).holds && check_fbp(c).holds) {
        return Err(Error::Precondition("needs QE, QI and FBP".into()));
    }
    Ok(search_multicomplex_unchecked(c, max_nodes))
}

pub fn search_multicomplex_unchecked(c: &OrderedComplex, max_nodes: u64) -> SearchOutcome {
    let b0 = c.lex_min_basis();
    let bases = c.bases().to_vec();
    let options = bases
        .iter()
        .map(|&b| positive_compositions(&b.difference(b0).to_vec(), internally_passive(c, b).len()))
        .collect();
    let mut search = WitnessSearch {
        bases,
        options,
        chosen: Vec::new(),
        nodes: 0,
        max_nodes,
    };
    match search.dfs() {
        Some(true) => SearchOutcome::Found {
            assignment: search.bases.iter().copied().zip(search.chosen).collect(),
        },
        Some(false) => SearchOutcome::Exhausted,
        None => SearchOutcome::BudgetExceeded {
            nodes: search.nodes,
        },
    }
}

/// The sets `B0 ∪ I` over faces `I` avoiding `B0` with `|I| <= r - 1`.
pub fn reduction_supports(c: &OrderedComplex) -> Vec<VertexSet> {
    let b0 = c.lex_min_basis();
    let r = c.rank();
    faces_outside(c, b0)
        .into_iter()
        .filter(|i| i.len() < r)
        .map(|i| b0.union(i))
        .collect()
}

/// Glues witnesses of small restrictions into one for `c`. Bases missing
/// `B0` get squarefree monomials; every other basis takes its monomial from
/// any restriction containing it, and all such restrictions must agree.
pub fn reduction_assembly(
    c: &OrderedComplex,
    sub_witnesses: &[(VertexSet, Assignment)],
) -> Result<Assignment> {
    let b0 = c.lex_min_basis();
    let mut out = Assignment::new();
    for &b in c.bases() {
        if b.is_disjoint(b0) {
            out.insert(b, Monomial::squarefree(b));
        }
    }
    for a in reduction_supports(c) {
        if !sub_witnesses.iter().any(|(s, _)| *s == a) {
            return Err(Error::InconsistentWitnesses(format!(
                "no witness for the restriction to {a}"
            )));
        }
    }
    for (a, w) in sub_witnesses {
        for (b, m) in w.iter() {
            if !c.is_basis(b) || !b.is_subset(*a) {
                return Err(Error::InconsistentWitnesses(format!(
                    "{b} is not a basis inside {a}"
                )));
            }
            if b.is_disjoint(b0) {
                continue;
            }
            if let Some(prev) = out.insert(b, m.clone()) {
                if prev != *m {
                    return Err(Error::InconsistentWitnesses(format!(
                        "restriction to {a} gives {m} for {b}, another gives {prev}"
                    )));
                }
            }
        }
    }
    if let Some(&b) = c.bases().iter().find(|&&b| out.get(b).is_none()) {
        return Err(Error::InconsistentWitnesses(format!("no monomial for {b}")));
    }
    Ok(out)
}

/// Builds the sub-witnesses with `family` and assembles them.
pub fn assemble_with(
    c: &OrderedComplex,
    family: &dyn Fn(&OrderedComplex) -> Option<Assignment>,
) -> Result<Assignment> {
    let subs = reduction_supports(c)
        .into_iter()
        .map(|a| {
            let sub = c.restrict_labeled(a)?;
            family(&sub).map(|w| (a, w)).ok_or_else(|| {
                Error::InconsistentWitnesses(format!("no witness for the restriction to {a}"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    reduction_assembly(c, &subs)
}
