//! Gale, Int and weak-Gale orders on bases, order ideals and Gale
//! truncation.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::activities::internally_passive;
use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A reflexive, transitive relation on a list of bases.
///
/// Antisymmetry is not enforced: relations built from IP containment can be
/// preorders, and the offending pairs are kept in `antisymmetry_violations`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<VertexSet>,
    leq: Vec<Vec<bool>>,
    antisymmetry_violations: Vec<(VertexSet, VertexSet)>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `rel` on `elements`.
    pub fn from_relation(
        elements: Vec<VertexSet>,
        rel: impl Fn(VertexSet, VertexSet) -> bool,
    ) -> Self {
        let n = elements.len();
        let mut leq: Vec<Vec<bool>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i == j || rel(elements[i], elements[j]))
                    .collect()
            })
            .collect();
        for k in 0..n {
            let row_k = leq[k].clone();
            for row in leq.iter_mut().filter(|row| row[k]) {
                for (x, &y) in row.iter_mut().zip(&row_k) {
                    *x |= y;
                }
            }
        }
        let mut antisymmetry_violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if leq[i][j] && leq[j][i] {
                    antisymmetry_violations.push((elements[i], elements[j]));
                }
            }
        }
        FinitePoset {
            elements,
            leq,
            antisymmetry_violations,
        }
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, b: VertexSet) -> Option<usize> {
        self.elements.iter().position(|&e| e == b)
    }

    /// `elements[i] <= elements[j]`.
    pub fn leq_index(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    pub fn leq(&self, a: VertexSet, b: VertexSet) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.leq[i][j],
            _ => false,
        }
    }

    pub fn antisymmetry_violations(&self) -> &[(VertexSet, VertexSet)] {
        &self.antisymmetry_violations
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.antisymmetry_violations.is_empty()
    }

    fn strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.leq[i][j] && !self.leq[j][i]
    }

    pub fn minimal_elements(&self) -> Vec<VertexSet> {
        (0..self.len())
            .filter(|&j| !(0..self.len()).any(|i| self.strictly_below(i, j)))
            .map(|j| self.elements[j])
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<VertexSet> {
        (0..self.len())
            .filter(|&i| !(0..self.len()).any(|j| self.strictly_below(i, j)))
            .map(|i| self.elements[i])
            .collect()
    }

    /// Cover relations `(a, b)` with `a < b` and nothing strictly between.
    pub fn covers(&self) -> Vec<(VertexSet, VertexSet)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.strictly_below(i, j)
                    && !(0..n).any(|k| self.strictly_below(i, k) && self.strictly_below(k, j))
                {
                    out.push((self.elements[i], self.elements[j]));
                }
            }
        }
        out
    }

    /// Whether `rank` is a grading: minimal elements sit at a common level
    /// and every cover raises it by exactly one.
    pub fn is_graded_by(&self, rank: impl Fn(VertexSet) -> usize) -> bool {
        let mins: Vec<usize> = self.minimal_elements().into_iter().map(&rank).collect();
        mins.windows(2).all(|w| w[0] == w[1])
            && self.covers().iter().all(|&(a, b)| rank(b) == rank(a) + 1)
    }

    /// Graphviz description of the cover graph.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph poset {\n");
        for e in &self.elements {
            let _ = writeln!(s, "  \"{e}\";");
        }
        for (a, b) in self.covers() {
            let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Serialize)]
struct PosetJson<'a> {
    elements: &'a [VertexSet],
    covers: Vec<(VertexSet, VertexSet)>,
    antisymmetric: bool,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    antisymmetry_violations: &'a [(VertexSet, VertexSet)],
}

impl Serialize for FinitePoset {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        PosetJson {
            elements: &self.elements,
            covers: self.covers(),
            antisymmetric: self.is_antisymmetric(),
            antisymmetry_violations: &self.antisymmetry_violations,
        }
        .serialize(serializer)
    }
}

fn require_pure(c: &OrderedComplex) -> Result<()> {
    if c.is_pure() {
        Ok(())
    } else {
        Err(Error::NotPure)
    }
}

pub fn gale_poset(c: &OrderedComplex) -> Result<FinitePoset> {
    require_pure(c)?;
    Ok(FinitePoset::from_relation(c.bases().to_vec(), |a, b| {
        a.gale_le(b)
    }))
}

/// Bases ordered by containment of internally passive sets.
pub fn int_poset(c: &OrderedComplex) -> Result<FinitePoset> {
    require_pure(c)?;
    let ip: HashMap<VertexSet, VertexSet> = c
        .bases()
        .iter()
        .map(|&b| (b, internally_passive(c, b)))
        .collect();
    Ok(FinitePoset::from_relation(c.bases().to_vec(), |a, b| {
        ip[&a].is_subset(ip[&b])
    }))
}

/// Transitive closure of Gale comparisons inside restrictions to `B0 ∪ I`
/// with `I` independent. Both bases lie in such a restriction exactly when
/// `(B1 ∪ B2) \ B0` is independent, and Gale order there agrees with Gale
/// order in `c` because relabeling is monotone.
pub fn weak_gale_poset(c: &OrderedComplex) -> Result<FinitePoset> {
    require_pure(c)?;
    let b0 = c.lex_min_basis();
    Ok(FinitePoset::from_relation(c.bases().to_vec(), |a, b| {
        a.gale_le(b) && c.is_face(a.union(b).difference(b0))
    }))
}

/// True iff every relation of `q` also holds in `p`.
pub fn is_extension(p: &FinitePoset, q: &FinitePoset) -> Result<bool> {
    let mut pe = p.elements.clone();
    let mut qe = q.elements.clone();
    pe.sort();
    qe.sort();
    if pe != qe {
        return Err(Error::ElementMismatch);
    }
    let map: Vec<usize> = q
        .elements
        .iter()
        .map(|&e| p.index_of(e).expect("same elements"))
        .collect();
    Ok((0..q.len()).all(|i| (0..q.len()).all(|j| !q.leq[i][j] || p.leq[map[i]][map[j]])))
}

pub fn is_order_ideal(p: &FinitePoset, s: &[VertexSet]) -> bool {
    let Some(idx) = s
        .iter()
        .map(|&b| p.index_of(b))
        .collect::<Option<Vec<usize>>>()
    else {
        return false;
    };
    let mut member = vec![false; p.len()];
    for i in idx {
        member[i] = true;
    }
    (0..p.len()).all(|j| !member[j] || (0..p.len()).all(|i| !p.leq[i][j] || member[i]))
}

/// Depth-first enumeration of all order ideals (including the empty one).
/// Each ideal lists its elements in the poset's element order.
pub fn order_ideals(p: &FinitePoset) -> OrderIdeals<'_> {
    let mut order: Vec<usize> = (0..p.len()).collect();
    // Sorting by down-set size gives a linear extension.
    order.sort_by_key(|&i| ((0..p.len()).filter(|&k| p.leq[k][i]).count(), i));
    OrderIdeals {
        poset: p,
        order,
        stack: vec![(0, vec![None; p.len()])],
    }
}

pub struct OrderIdeals<'a> {
    poset: &'a FinitePoset,
    order: Vec<usize>,
    stack: Vec<(usize, Vec<Option<bool>>)>,
}

impl Iterator for OrderIdeals<'_> {
    type Item = Vec<VertexSet>;

    fn next(&mut self) -> Option<Vec<VertexSet>> {
        let p = self.poset;
        while let Some((pos, state)) = self.stack.pop() {
            if pos == self.order.len() {
                let ideal = (0..p.len())
                    .filter(|&i| state[i] == Some(true))
                    .map(|i| p.elements[i])
                    .collect();
                return Some(ideal);
            }
            let k = self.order[pos];
            // Include k only if nothing below it was excluded; exclude k only
            // if nothing above it was included.
            let can_include = !(0..p.len()).any(|i| state[i] == Some(false) && p.leq[i][k]);
            let can_exclude = !(0..p.len()).any(|i| state[i] == Some(true) && p.leq[k][i]);
            if can_include {
                let mut s = state.clone();
                s[k] = Some(true);
                self.stack.push((pos + 1, s));
            }
            if can_exclude {
                let mut s = state;
                s[k] = Some(false);
                self.stack.push((pos + 1, s));
            }
        }
        None
    }
}

/// The down-set of `b` in `p`.
pub fn principal_ideal(p: &FinitePoset, b: VertexSet) -> Vec<VertexSet> {
    match p.index_of(b) {
        Some(j) => (0..p.len())
            .filter(|&i| p.leq[i][j])
            .map(|i| p.elements[i])
            .collect(),
        None => Vec::new(),
    }
}

/// The complex whose bases are the members of the Gale order ideal `ideal`.
pub fn gale_truncate(c: &OrderedComplex, ideal: &[VertexSet]) -> Result<OrderedComplex> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let gale = gale_poset(c)?;
    if let Some(b) = ideal.iter().find(|b| !c.is_basis(**b)) {
        return Err(Error::NotAnIdeal(format!("{b} is not a basis")));
    }
    if !is_order_ideal(&gale, ideal) {
        return Err(Error::NotAnIdeal(
            "not closed under Gale-smaller bases".into(),
        ));
    }
    OrderedComplex::new(c.n(), ideal.iter().copied())
}
