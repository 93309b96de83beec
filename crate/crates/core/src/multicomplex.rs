//! Monomials over ground-set variables, multicomplexes, basis-to-monomial
//! assignments and the conjectured multicomplex conditions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::activities::internally_passive;
use crate::complex::OrderedComplex;
use crate::vertex_set::VertexSet;

/// A monomial `prod x_v^{e_v}`; only positive exponents are stored.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Monomial(BTreeMap<usize, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn from_exponents(exps: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut m = BTreeMap::new();
        for (v, e) in exps {
            if e > 0 {
                *m.entry(v).or_insert(0) += e;
            }
        }
        Monomial(m)
    }

    /// `prod_{v in s} x_v`.
    pub fn squarefree(s: VertexSet) -> Self {
        Monomial(s.iter().map(|v| (v, 1)).collect())
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0.get(&v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|(&v, &e)| (v, e))
    }

    pub fn degree(&self) -> usize {
        self.0.values().map(|&e| e as usize).sum()
    }

    pub fn support(&self) -> VertexSet {
        self.0.keys().copied().collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, &e)| other.exponent(*v) >= e)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_exponents(self.exponents().chain(other.exponents()))
    }

    /// `self / x_v`, if `x_v` divides `self`.
    pub fn divide_by(&self, v: usize) -> Option<Monomial> {
        let e = self.exponent(v);
        if e == 0 {
            return None;
        }
        let mut m = self.0.clone();
        if e == 1 {
            m.remove(&v);
        } else {
            m.insert(v, e - 1);
        }
        Some(Monomial(m))
    }

    /// Divisors of degree one less.
    pub fn lower_divisors(&self) -> Vec<Monomial> {
        self.0
            .keys()
            .map(|&v| self.divide_by(v).expect("v in support"))
            .collect()
    }

    /// Renames variables through `f`.
    pub fn map_variables(&self, f: impl Fn(usize) -> usize) -> Monomial {
        Monomial::from_exponents(self.exponents().map(|(v, e)| (f(v), e)))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        // Largest variable first, matching how the examples are written.
        for (i, (v, e)) in self.0.iter().rev().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite set of monomials. Divisor closure is checked, not enforced.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Multicomplex(BTreeSet<Monomial>);

impl Multicomplex {
    pub fn new(monomials: impl IntoIterator<Item = Monomial>) -> Self {
        Multicomplex(monomials.into_iter().collect())
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.0.contains(m)
    }

    pub fn is_subset(&self, other: &Multicomplex) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.0
            .iter()
            .all(|m| m.lower_divisors().iter().all(|d| self.0.contains(d)))
    }

    pub fn variables(&self) -> VertexSet {
        self.0
            .iter()
            .fold(VertexSet::empty(), |acc, m| acc.union(m.support()))
    }

    /// Number of monomials of each degree, from degree 0.
    pub fn degree_census(&self) -> Vec<u64> {
        let top = self.0.iter().map(Monomial::degree).max().unwrap_or(0);
        let mut h = vec![0u64; if self.0.is_empty() { 0 } else { top + 1 }];
        for m in &self.0 {
            h[m.degree()] += 1;
        }
        h
    }

    /// Members dividing no other member.
    pub fn maximal(&self) -> Vec<&Monomial> {
        self.0
            .iter()
            .filter(|m| !self.0.iter().any(|o| o != *m && m.divides(o)))
            .collect()
    }

    /// All maximal monomials share one degree.
    pub fn is_pure(&self) -> bool {
        let degrees: BTreeSet<usize> = self.maximal().into_iter().map(Monomial::degree).collect();
        degrees.len() <= 1
    }
}

/// A map from bases to monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment(BTreeMap<VertexSet, Monomial>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(BTreeMap::new())
    }

    pub fn insert(&mut self, basis: VertexSet, m: Monomial) -> Option<Monomial> {
        self.0.insert(basis, m)
    }

    pub fn get(&self, basis: VertexSet) -> Option<&Monomial> {
        self.0.get(&basis)
    }

    pub fn iter(&self) -> impl Iterator<Item = (VertexSet, &Monomial)> {
        self.0.iter().map(|(&b, m)| (b, m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multicomplex(&self) -> Multicomplex {
        Multicomplex::new(self.0.values().cloned())
    }

    pub fn map_variables(&self, f: impl Fn(usize) -> usize + Copy) -> Assignment {
        Assignment(
            self.0
                .iter()
                .map(|(&b, m)| (b, m.map_variables(f)))
                .collect(),
        )
    }
}

impl FromIterator<(VertexSet, Monomial)> for Assignment {
    fn from_iter<T: IntoIterator<Item = (VertexSet, Monomial)>>(iter: T) -> Self {
        Assignment(iter.into_iter().collect())
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    basis: VertexSet,
    monomial: &'a Monomial,
}

impl<'de> Deserialize<'de> for Monomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let exps = BTreeMap::<usize, u32>::deserialize(deserializer)?;
        if exps.keys().any(|&v| v == 0) {
            return Err(serde::de::Error::custom("variables are numbered from 1"));
        }
        Ok(Monomial::from_exponents(exps))
    }
}

#[derive(Deserialize)]
struct OwnedEntry {
    basis: VertexSet,
    monomial: Monomial,
}

/// Later entries for a repeated basis are rejected rather than overwriting.
impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let mut out = Assignment::new();
        for e in Vec::<OwnedEntry>::deserialize(deserializer)? {
            if out.insert(e.basis, e.monomial).is_some() {
                return Err(serde::de::Error::custom(format!(
                    "basis {} listed twice",
                    e.basis
                )));
            }
        }
        Ok(out)
    }
}

impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (&basis, monomial) in &self.0 {
            seq.serialize_element(&Entry { basis, monomial })?;
        }
        seq.end()
    }
}

/// Clause-by-clause outcome of checking an assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    /// The monomials form a multicomplex.
    pub divisor_closed: bool,
    /// Variables are exactly the vertices outside `B0`.
    pub variables: bool,
    /// One distinct monomial per basis and nothing else.
    pub bijection: bool,
    /// `deg m_B = |IP(B)|`.
    pub degrees: bool,
    /// `supp m_B = B \ B0`.
    pub supports: bool,
    /// Gale order extends divisibility.
    pub extended_by_gale: bool,
    /// Containment of internally passive sets implies divisibility.
    /// Reported only: no assignment meeting the degree and support clauses
    /// achieves it on `U(3,5)`.
    pub int_within_divisibility: bool,
    /// Divisibility implies containment of internally passive sets.
    /// Reported only, for the same reason.
    pub divisibility_within_int: bool,
    /// `F(c|_A) ⊆ F(c)` for every `A ⊇ B0`; absent when no family was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub restrictions: Option<bool>,
    /// Human-readable description of each failure.
    pub violations: Vec<String>,
}

impl ConjectureReport {
    /// Clauses i through iii, with iii reduced to its Gale half.
    pub fn local_clauses_hold(&self) -> bool {
        self.divisor_closed
            && self.variables
            && self.bijection
            && self.degrees
            && self.supports
            && self.extended_by_gale
    }

    pub fn holds(&self) -> bool {
        self.local_clauses_hold() && self.restrictions != Some(false)
    }
}

/// A way to produce the multicomplex of a complex, used for the restriction
/// clause. It receives label-preserving restrictions.
pub type Family<'a> = &'a dyn Fn(&OrderedComplex) -> Option<Assignment>;

/// Checks an assignment against the conjectured conditions. When `family`
/// is given, each restriction to `A ⊇ B0` is also checked for inclusion.
pub fn verify_conjecture_conditions(
    c: &OrderedComplex,
    assignment: &Assignment,
    family: Option<Family<'_>>,
) -> ConjectureReport {
    let mut violations = Vec::new();
    let b0 = c.lex_min_basis();
    let f = assignment.multicomplex();

    let divisor_closed = f.is_divisor_closed();
    if !divisor_closed {
        violations.push("monomials are not closed under division".to_string());
    }

    let expected_vars = c.vertices().difference(b0);
    let variables = f.variables() == expected_vars;
    if !variables {
        violations.push(format!(
            "variables {} differ from {}",
            f.variables(),
            expected_vars
        ));
    }

    let keys: Vec<VertexSet> = assignment.iter().map(|(b, _)| b).collect();
    let bijection = keys == c.bases() && f.len() == c.num_bases();
    if !bijection {
        violations.push("assignment is not a bijection onto the bases".to_string());
    }

    let ip: BTreeMap<VertexSet, VertexSet> = c
        .bases()
        .iter()
        .map(|&b| (b, internally_passive(c, b)))
        .collect();
    let mut degrees = true;
    let mut supports = true;
    for (b, m) in assignment.iter() {
        let Some(&p) = ip.get(&b) else { continue };
        if m.degree() != p.len() {
            degrees = false;
            violations.push(format!("deg m_{b} = {} but |IP| = {}", m.degree(), p.len()));
        }
        if m.support() != b.difference(b0) {
            supports = false;
            violations.push(format!(
                "supp m_{b} = {} but B \\ B0 = {}",
                m.support(),
                b.difference(b0)
            ));
        }
    }

    let mut divisibility_within_int = true;
    let mut int_within_divisibility = true;
    let mut extended_by_gale = true;
    for (b1, m1) in assignment.iter() {
        for (b2, m2) in assignment.iter() {
            let (Some(p1), Some(p2)) = (ip.get(&b1), ip.get(&b2)) else {
                continue;
            };
            let divides = m1.divides(m2);
            let contained = p1.is_subset(*p2);
            if contained && !divides {
                int_within_divisibility = false;
            }
            if divides && !contained {
                divisibility_within_int = false;
            }
            if divides && !b1.gale_le(b2) {
                extended_by_gale = false;
                violations.push(format!(
                    "m_{b1} divides m_{b2} but {b1} is not Gale-below {b2}"
                ));
            }
        }
    }

    let restrictions = family.map(|fam| {
        let mut ok = true;
        for extra in c.ground().difference(b0).subsets() {
            let a = b0.union(extra);
            let sub = c.restrict_labeled(a).expect("in range");
            match fam(&sub) {
                Some(w) if w.multicomplex().is_subset(&f) => {}
                Some(_) => {
                    ok = false;
                    violations.push(format!("F(restriction to {a}) is not contained in F"));
                }
                None => {
                    ok = false;
                    violations.push(format!("no multicomplex for the restriction to {a}"));
                }
            }
        }
        ok
    });

    ConjectureReport {
        divisor_closed,
        variables,
        bijection,
        degrees,
        supports,
        extended_by_gale,
        int_within_divisibility,
        divisibility_within_int,
        restrictions,
        violations,
    }
}

/// Purity of the assigned multicomplex.
pub fn stanley_purity_check(assignment: &Assignment) -> bool {
    assignment.multicomplex().is_pure()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset;

    fn mono(e: &[(usize, u32)]) -> Monomial {
        Monomial::from_exponents(e.iter().copied())
    }

    #[test]
    fn monomial_arithmetic() {
        let m = mono(&[(14, 1), (13, 2), (10, 1), (9, 3)]);
        assert_eq!(m.degree(), 7);
        assert_eq!(m.support(), vset![9, 10, 13, 14]);
        assert_eq!(m.to_string(), "x14*x13^2*x10*x9^3");
        assert!(mono(&[(13, 1), (9, 3)]).divides(&m));
        assert!(!mono(&[(13, 3)]).divides(&m));
        assert_eq!(m.lower_divisors().len(), 4);
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(Monomial::squarefree(vset![2, 5]), mono(&[(2, 1), (5, 1)]));
        assert_eq!(
            serde_json::to_string(&mono(&[(3, 2), (4, 1)])).unwrap(),
            r#"{"3":2,"4":1}"#
        );
    }

    #[test]
    fn multicomplex_properties() {
        let full = Multicomplex::new([
            Monomial::one(),
            mono(&[(1, 1)]),
            mono(&[(2, 1)]),
            mono(&[(1, 2)]),
            mono(&[(1, 1), (2, 1)]),
            mono(&[(2, 2)]),
        ]);
        assert!(full.is_divisor_closed());
        assert_eq!(full.degree_census(), vec![1, 2, 3]);
        assert!(full.is_pure());
        let gap = Multicomplex::new([Monomial::one(), mono(&[(1, 2)])]);
        assert!(!gap.is_divisor_closed());
        let impure = Multicomplex::new([
            Monomial::one(),
            mono(&[(1, 1)]),
            mono(&[(2, 1)]),
            mono(&[(1, 2)]),
        ]);
        assert!(!impure.is_pure());
    }

    fn u24_assignment() -> Assignment {
        // Bases 12,13,14,23,24,34 with IP sets {},{3},{4},{2,3},{2,4},{3,4}.
        [
            (vset![1, 2], Monomial::one()),
            (vset![1, 3], mono(&[(3, 1)])),
            (vset![1, 4], mono(&[(4, 1)])),
            (vset![2, 3], mono(&[(3, 2)])),
            (vset![2, 4], mono(&[(3, 1), (4, 1)])),
            (vset![3, 4], mono(&[(4, 2)])),
        ]
        .into_iter()
        .collect()
    }

    #[test]
    fn support_clause_rejects_bad_variables() {
        let u = OrderedComplex::uniform(2, 4);
        // m_23 must be supported on {3} only but B \ B0 = {3}: fine; m_24
        // needs support {4} and m_34 support {3,4}, so this guess fails.
        let r = verify_conjecture_conditions(&u, &u24_assignment(), None);
        assert!(r.divisor_closed && r.degrees && r.bijection);
        assert!(!r.supports);
        assert!(!r.holds());
        assert_eq!(r.restrictions, None);
    }

    #[test]
    fn uniform_witness_passes() {
        let u = OrderedComplex::uniform(2, 4);
        let a: Assignment = [
            (vset![1, 2], Monomial::one()),
            (vset![1, 3], mono(&[(3, 1)])),
            (vset![1, 4], mono(&[(4, 1)])),
            (vset![2, 3], mono(&[(3, 2)])),
            (vset![2, 4], mono(&[(4, 2)])),
            (vset![3, 4], mono(&[(3, 1), (4, 1)])),
        ]
        .into_iter()
        .collect();
        let r = verify_conjecture_conditions(&u, &a, None);
        assert!(r.local_clauses_hold(), "{:?}", r.violations);
        assert!(stanley_purity_check(&a));
        let mut broken = a.clone();
        broken.insert(vset![2, 3], mono(&[(3, 3)]));
        let r = verify_conjecture_conditions(&u, &broken, None);
        assert!(!r.degrees && !r.holds());
    }

    #[test]
    fn assignment_serializes_as_entries() {
        let a: Assignment = [(vset![1, 2], Monomial::one())].into_iter().collect();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"[{"basis":[1,2],"monomial":{}}]"#
        );
    }
}
