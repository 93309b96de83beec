//! Decision procedures for the class predicates. Every checker returns a
//! [`ClassReport`] whose witness, when present, can be replayed with
//! [`witness_is_valid`].

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::activities::is_shelling;
use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axiom {
    Qi,
    Qe,
    Qc,
    Fbp,
    Pure,
    Lex,
    Gale,
    Matroid,
}

impl Axiom {
    pub const CLASSES: [Axiom; 7] = [
        Axiom::Qi,
        Axiom::Qe,
        Axiom::Qc,
        Axiom::Fbp,
        Axiom::Pure,
        Axiom::Lex,
        Axiom::Gale,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Qi => "qi",
            Axiom::Qe => "qe",
            Axiom::Qc => "qc",
            Axiom::Fbp => "fbp",
            Axiom::Pure => "pure",
            Axiom::Lex => "lex",
            Axiom::Gale => "gale",
            Axiom::Matroid => "matroid",
        }
    }

    pub fn check(self, c: &OrderedComplex) -> ClassReport {
        match self {
            Axiom::Qi => check_qi(c),
            Axiom::Qe => check_qe(c),
            Axiom::Qc => check_qc(c),
            Axiom::Fbp => check_fbp(c),
            Axiom::Pure => check_pure_class(c),
            Axiom::Lex => check_lex(c),
            Axiom::Gale => check_gale(c),
            Axiom::Matroid => is_matroid(c),
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "qi" => Axiom::Qi,
            "qe" => Axiom::Qe,
            "qc" => Axiom::Qc,
            "fbp" => Axiom::Fbp,
            "pure" => Axiom::Pure,
            "lex" => Axiom::Lex,
            "gale" => Axiom::Gale,
            "matroid" => Axiom::Matroid,
            other => return Err(Error::Invalid(format!("unknown axiom {other:?}"))),
        })
    }
}

/// A single structural step, in the labels of the complex it is applied to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Delete(usize),
    Contract(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// Two bases of different sizes.
    NotPure { left: VertexSet, right: VertexSet },
    /// `|i1| > |i2|`, `i ⊆ i1 ∩ i2`, `i1 \ i ⊆ B_{i,0}` and no `e` in
    /// `i1 \ i2` extends `i2`.
    Independence {
        i1: VertexSet,
        i2: VertexSet,
        i: VertexSet,
    },
    /// No `b2` in `b2_set \ b1_set` can replace `element` in `b1_set`.
    Exchange {
        b1: VertexSet,
        b2: VertexSet,
        element: usize,
    },
    /// `(c1 ∪ c2) \ element` is independent.
    Circuit {
        c1: VertexSet,
        c2: VertexSet,
        element: usize,
    },
    /// After contracting `chain` (in order), the vertex `vertex` outside
    /// `b0` has a lex-least link basis `first` not inside `b0`.
    FirstBasis {
        chain: Vec<usize>,
        vertex: usize,
        b0: VertexSet,
        first: VertexSet,
    },
    /// Applying `steps` reaches a complex that is not pure.
    PureClass {
        steps: Vec<Step>,
        facets: Vec<VertexSet>,
    },
    /// In lex order, `later` meets `earlier` outside every codimension-one
    /// face shared with bases before it.
    Lex {
        earlier: VertexSet,
        later: VertexSet,
    },
    /// More than one Gale-minimal basis.
    Gale { minimal: Vec<VertexSet> },
    /// The relabeled complex (element `i` becomes `permutation[i-1]`) fails.
    Ordering {
        permutation: Vec<usize>,
        witness: Box<Witness>,
    },
    /// A single deletion or contraction fails.
    Hereditary { step: Step, witness: Box<Witness> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl ClassReport {
    pub fn pass() -> Self {
        ClassReport {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: Witness) -> Self {
        ClassReport {
            holds: false,
            witness: Some(witness),
        }
    }

    fn from_witness(w: Option<Witness>) -> Self {
        match w {
            Some(w) => ClassReport::fail(w),
            None => ClassReport::pass(),
        }
    }
}

fn purity_witness(c: &OrderedComplex) -> Option<Witness> {
    let first = c.facets()[0];
    c.facets()
        .iter()
        .find(|f| f.len() != first.len())
        .map(|&right| Witness::NotPure { left: first, right })
}

/// Facets compressed onto the vertex set. Loops do not affect any of the
/// recursive predicates, so this is the memo key for them.
fn loopless_key(c: &OrderedComplex) -> Vec<VertexSet> {
    let v = c.vertices();
    c.facets().iter().map(|f| f.compress(v)).collect()
}

fn link_of(c: &OrderedComplex, i: VertexSet) -> OrderedComplex {
    c.link(i).expect("caller passes a face")
}

pub fn check_qi(c: &OrderedComplex) -> ClassReport {
    ClassReport::from_witness(purity_witness(c).or_else(|| qi_witness(c)))
}

fn qi_witness(c: &OrderedComplex) -> Option<Witness> {
    let d = c.rank();
    let faces = c.faces();
    let face_set: HashSet<VertexSet> = faces.iter().copied().collect();
    for &i in &faces {
        let s = link_of(c, i).lex_min_basis();
        for &i2 in faces.iter().filter(|f| f.len() < d && i.is_subset(**f)) {
            let bad: VertexSet = s
                .iter()
                .filter(|&e| i2.contains(e) || !face_set.contains(&i2.with(e)))
                .collect();
            if bad.len() > i2.difference(i).len() {
                return Some(Witness::Independence {
                    i1: i.union(bad),
                    i2,
                    i,
                });
            }
        }
    }
    None
}

pub fn check_qe(c: &OrderedComplex) -> ClassReport {
    ClassReport::from_witness(purity_witness(c).or_else(|| qe_witness(c)))
}

fn qe_witness(c: &OrderedComplex) -> Option<Witness> {
    for &b1 in c.bases() {
        for &b2 in c.bases() {
            let out = b2.difference(b1);
            let Some(m) = out.max() else { continue };
            for e in b1.difference(b2).above(m) {
                if !out.iter().any(|x| c.is_basis(b1.without(e).with(x))) {
                    return Some(Witness::Exchange { b1, b2, element: e });
                }
            }
        }
    }
    None
}

pub fn check_qc(c: &OrderedComplex) -> ClassReport {
    let circuits = c.circuits();
    for (k, &c1) in circuits.iter().enumerate() {
        for &c2 in &circuits[k + 1..] {
            let m = c1
                .symmetric_difference(c2)
                .max()
                .expect("distinct circuits");
            for e in c1.intersection(c2).below(m) {
                if c.is_face(c1.union(c2).without(e)) {
                    return ClassReport::fail(Witness::Circuit { c1, c2, element: e });
                }
            }
        }
    }
    ClassReport::pass()
}

pub fn check_fbp(c: &OrderedComplex) -> ClassReport {
    let mut memo = HashMap::new();
    let mut chain = Vec::new();
    ClassReport::from_witness(fbp_rec(c, &mut chain, &mut memo))
}

fn fbp_rec(
    c: &OrderedComplex,
    chain: &mut Vec<usize>,
    memo: &mut HashMap<Vec<VertexSet>, bool>,
) -> Option<Witness> {
    if c.rank() <= 1 || c.num_bases() == 1 {
        return None;
    }
    let key = loopless_key(c);
    if memo.get(&key) == Some(&true) {
        return None;
    }
    let b0 = c.lex_min_basis();
    for v in c.vertices().difference(b0) {
        let sub = link_of(c, VertexSet::singleton(v));
        let first = sub.lex_min_basis();
        if !first.is_subset(b0) {
            return Some(Witness::FirstBasis {
                chain: chain.clone(),
                vertex: v,
                b0,
                first,
            });
        }
        chain.push(v);
        let inner = fbp_rec(&sub, chain, memo);
        chain.pop();
        if inner.is_some() {
            return inner;
        }
    }
    memo.insert(key, true);
    None
}

/// Membership in the recursive class PURE.
pub fn check_pure_class(c: &OrderedComplex) -> ClassReport {
    let mut memo = HashSet::new();
    let mut steps = Vec::new();
    ClassReport::from_witness(pure_rec(c, &mut steps, &mut memo))
}

fn pure_rec(
    c: &OrderedComplex,
    steps: &mut Vec<Step>,
    known_good: &mut HashSet<Vec<VertexSet>>,
) -> Option<Witness> {
    if !c.is_pure() {
        return Some(Witness::PureClass {
            steps: steps.clone(),
            facets: c.facets().to_vec(),
        });
    }
    if c.num_bases() == 1 {
        return None;
    }
    let key = loopless_key(c);
    if known_good.contains(&key) {
        return None;
    }
    let v = c
        .largest_non_coloop_vertex()
        .expect("several bases give a non-coloop vertex");
    let deletion = c.restrict_labeled(c.ground().without(v)).expect("in range");
    // Deleting a non-coloop keeps a full-size basis, so purity of the
    // deletion already gives the same rank.
    let mut children = vec![(Step::Delete(v), deletion)];
    children.extend(
        c.vertices()
            .iter()
            .map(|u| (Step::Contract(u), link_of(c, VertexSet::singleton(u)))),
    );
    for (step, child) in children {
        steps.push(step);
        let inner = pure_rec(&child, steps, known_good);
        steps.pop();
        if inner.is_some() {
            return inner;
        }
    }
    known_good.insert(key);
    None
}

pub fn check_lex(c: &OrderedComplex) -> ClassReport {
    if let Some(w) = purity_witness(c) {
        return ClassReport::fail(w);
    }
    let report = is_shelling(c, c.bases()).expect("pure, and lex order is a basis order");
    match report.failure {
        Some((i, j)) => ClassReport::fail(Witness::Lex {
            earlier: c.bases()[i],
            later: c.bases()[j],
        }),
        None => ClassReport::pass(),
    }
}

/// Bases with no strictly Gale-smaller basis.
pub fn gale_minimal_bases(c: &OrderedComplex) -> Vec<VertexSet> {
    c.bases()
        .iter()
        .copied()
        .filter(|&b| !c.bases().iter().any(|&o| o != b && o.gale_le(b)))
        .collect()
}

pub fn check_gale(c: &OrderedComplex) -> ClassReport {
    if let Some(w) = purity_witness(c) {
        return ClassReport::fail(w);
    }
    let minimal = gale_minimal_bases(c);
    if minimal.len() == 1 {
        ClassReport::pass()
    } else {
        ClassReport::fail(Witness::Gale { minimal })
    }
}

/// Purity plus the unordered basis-exchange axiom.
pub fn is_matroid(c: &OrderedComplex) -> ClassReport {
    let report = ClassReport::from_witness(purity_witness(c).or_else(|| exchange_witness(c)));
    debug_assert_eq!(report.holds, independence_axiom(c));
    debug_assert_eq!(report.holds, circuit_axiom(c));
    report
}

fn exchange_witness(c: &OrderedComplex) -> Option<Witness> {
    for &b1 in c.bases() {
        for &b2 in c.bases() {
            let out = b2.difference(b1);
            for e in b1.difference(b2) {
                if !out.iter().any(|x| c.is_basis(b1.without(e).with(x))) {
                    return Some(Witness::Exchange { b1, b2, element: e });
                }
            }
        }
    }
    None
}

/// The unordered independence axiom over all pairs of faces.
pub fn independence_axiom(c: &OrderedComplex) -> bool {
    let faces = c.faces();
    let set: HashSet<VertexSet> = faces.iter().copied().collect();
    faces.iter().all(|&i1| {
        faces
            .iter()
            .filter(|i2| i2.len() < i1.len())
            .all(|&i2| i1.difference(i2).iter().any(|e| set.contains(&i2.with(e))))
    })
}

/// The unordered circuit elimination axiom.
pub fn circuit_axiom(c: &OrderedComplex) -> bool {
    let circuits = c.circuits();
    circuits.iter().enumerate().all(|(k, &c1)| {
        circuits[k + 1..].iter().all(|&c2| {
            c1.intersection(c2)
                .iter()
                .all(|e| !c.is_face(c1.union(c2).without(e)))
        })
    })
}

/// Checks the predicate and, additionally, every single deletion of a
/// non-coloop and every single contraction of a vertex.
pub fn check_hereditary(c: &OrderedComplex, axiom: Axiom) -> ClassReport {
    let own = axiom.check(c);
    if !own.holds {
        return own;
    }
    let deletions = c
        .ground()
        .difference(c.coloops())
        .iter()
        .map(|e| (Step::Delete(e), c.delete_element(e).expect("not a coloop")));
    let contractions = c
        .vertices()
        .iter()
        .map(|v| (Step::Contract(v), c.contract_vertex(v).expect("not a loop")));
    for (step, child) in deletions.chain(contractions) {
        if let Some(w) = axiom.check(&child).witness {
            return ClassReport::fail(Witness::Hereditary {
                step,
                witness: Box::new(w),
            });
        }
    }
    ClassReport::pass()
}

/// Advances `p` to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("p[i] qualifies");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Distinct relabelings of `c`, each with the first permutation (in
/// lexicographic order) producing it. Permutations in the same coset of the
/// automorphism group collapse to one entry.
pub fn distinct_relabelings(c: &OrderedComplex) -> Vec<(Vec<usize>, OrderedComplex)> {
    let mut perm: Vec<usize> = (1..=c.n()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    loop {
        let r = c.relabel(&perm).expect("valid permutation");
        if seen.insert(r.facets().to_vec()) {
            out.push((perm.clone(), r));
        }
        if !next_permutation(&mut perm) {
            return out;
        }
    }
}

/// Runs the predicate on every relabeling of the ground set. The reported
/// failure is the one for the lexicographically first permutation.
pub fn holds_for_all_orderings(c: &OrderedComplex, axiom: Axiom) -> ClassReport {
    let relabelings = distinct_relabelings(c);
    let failure = relabelings.par_iter().find_map_first(|(perm, r)| {
        axiom.check(r).witness.map(|w| Witness::Ordering {
            permutation: perm.clone(),
            witness: Box::new(w),
        })
    });
    ClassReport::from_witness(failure)
}

/// Shedding-vertex certificate of vertex decomposability. Labels are those
/// of the input; deletions and contractions turn the vertex into a loop.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SheddingTree {
    Leaf {
        basis: VertexSet,
    },
    Shed {
        vertex: usize,
        deletion: Box<SheddingTree>,
        contraction: Box<SheddingTree>,
    },
}

impl SheddingTree {
    pub fn depth(&self) -> usize {
        match self {
            SheddingTree::Leaf { .. } => 0,
            SheddingTree::Shed {
                deletion,
                contraction,
                ..
            } => 1 + deletion.depth().max(contraction.depth()),
        }
    }

    /// Re-verifies the certificate against `c`.
    pub fn verify(&self, c: &OrderedComplex) -> bool {
        if !c.is_pure() {
            return false;
        }
        match self {
            SheddingTree::Leaf { basis } => c.bases() == [*basis],
            SheddingTree::Shed {
                vertex,
                deletion,
                contraction,
            } => {
                if !c.vertices().contains(*vertex) {
                    return false;
                }
                let del = c
                    .restrict_labeled(c.ground().without(*vertex))
                    .expect("in range");
                del.rank() == c.rank()
                    && deletion.verify(&del)
                    && contraction.verify(&link_of(c, VertexSet::singleton(*vertex)))
            }
        }
    }
}

/// Searches for a shedding tree, trying candidate vertices from the largest
/// down.
pub fn vertex_decomposition(c: &OrderedComplex) -> Result<Option<SheddingTree>> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    Ok(decompose(c, &mut HashSet::new()))
}

fn decompose(c: &OrderedComplex, failed: &mut HashSet<Vec<VertexSet>>) -> Option<SheddingTree> {
    if !c.is_pure() {
        return None;
    }
    if c.num_bases() == 1 {
        return Some(SheddingTree::Leaf {
            basis: c.bases()[0],
        });
    }
    let key = loopless_key(c);
    if failed.contains(&key) {
        return None;
    }
    let d = c.rank();
    for v in c.vertices().difference(c.coloops()).iter().rev() {
        let del = c.restrict_labeled(c.ground().without(v)).expect("in range");
        if del.rank() != d {
            continue;
        }
        let Some(dt) = decompose(&del, failed) else {
            continue;
        };
        let Some(ct) = decompose(&link_of(c, VertexSet::singleton(v)), failed) else {
            continue;
        };
        return Some(SheddingTree::Shed {
            vertex: v,
            deletion: Box::new(dt),
            contraction: Box::new(ct),
        });
    }
    failed.insert(key);
    None
}

/// Replays a witness against the definition it claims to violate.
pub fn witness_is_valid(c: &OrderedComplex, w: &Witness) -> bool {
    match w {
        Witness::NotPure { left, right } => {
            c.is_basis(*left) && c.is_basis(*right) && left.len() != right.len()
        }
        Witness::Independence { i1, i2, i } => {
            c.is_face(*i1)
                && c.is_face(*i2)
                && i1.len() > i2.len()
                && i.is_subset(i1.intersection(*i2))
                && i1.difference(*i).is_subset(link_of(c, *i).lex_min_basis())
                && !i1.difference(*i2).iter().any(|e| c.is_face(i2.with(e)))
        }
        Witness::Exchange { b1, b2, element } => {
            c.is_basis(*b1)
                && c.is_basis(*b2)
                && b1.difference(*b2).contains(*element)
                && !b2
                    .difference(*b1)
                    .iter()
                    .any(|x| c.is_basis(b1.without(*element).with(x)))
        }
        Witness::Circuit { c1, c2, element } => {
            let circuits = c.circuits();
            c1 != c2
                && circuits.contains(c1)
                && circuits.contains(c2)
                && c1.intersection(*c2).contains(*element)
                && c.is_face(c1.union(*c2).without(*element))
        }
        Witness::FirstBasis {
            chain,
            vertex,
            b0,
            first,
        } => {
            let mut cur = c.clone();
            for &v in chain {
                if !cur.vertices().difference(cur.lex_min_basis()).contains(v) {
                    return false;
                }
                cur = link_of(&cur, VertexSet::singleton(v));
            }
            cur.rank() > 1
                && cur.num_bases() > 1
                && cur.lex_min_basis() == *b0
                && cur.vertices().difference(*b0).contains(*vertex)
                && link_of(&cur, VertexSet::singleton(*vertex)).lex_min_basis() == *first
                && !first.is_subset(*b0)
        }
        Witness::PureClass { steps, facets } => {
            let mut cur = c.clone();
            for step in steps {
                if cur.num_bases() == 1 || !cur.is_pure() {
                    return false;
                }
                cur = match *step {
                    Step::Delete(v) if cur.largest_non_coloop_vertex() == Some(v) => cur
                        .restrict_labeled(cur.ground().without(v))
                        .expect("in range"),
                    Step::Contract(v) if cur.vertices().contains(v) => {
                        link_of(&cur, VertexSet::singleton(v))
                    }
                    _ => return false,
                };
            }
            !cur.is_pure() && cur.facets() == facets.as_slice()
        }
        Witness::Lex { earlier, later } => {
            let bases = c.bases();
            let (Some(i), Some(j)) = (
                bases.iter().position(|b| b == earlier),
                bases.iter().position(|b| b == later),
            ) else {
                return false;
            };
            // No earlier basis meets `later` in a codimension-one face
            // containing `earlier ∩ later`.
            i < j
                && !bases[..j].iter().any(|bk| {
                    let m = bk.intersection(*later);
                    m.len() + 1 == later.len() && earlier.intersection(*later).is_subset(m)
                })
        }
        Witness::Gale { minimal } => *minimal == gale_minimal_bases(c) && minimal.len() != 1,
        Witness::Ordering {
            permutation,
            witness,
        } => c
            .relabel(permutation)
            .is_ok_and(|r| witness_is_valid(&r, witness)),
        Witness::Hereditary { step, witness } => {
            let child = match *step {
                Step::Delete(e) => c.delete_element(e),
                Step::Contract(v) => c.contract_vertex(v),
            };
            child.is_ok_and(|ch| witness_is_valid(&ch, witness))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vset;

    fn c(n: usize, facets: &[&[usize]]) -> OrderedComplex {
        OrderedComplex::from_lists(n, facets).unwrap()
    }

    fn psi(k: usize) -> OrderedComplex {
        match k {
            1 => c(4, &[&[1, 2], &[1, 3], &[1, 4], &[3, 4]]),
            2 => c(4, &[&[1, 4], &[2, 4], &[2, 3], &[3, 4]]),
            3 => c(4, &[&[1, 2], &[1, 3], &[2, 3], &[3, 4]]),
            4 => c(5, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4], &[2, 5]]),
            _ => unreachable!(),
        }
    }

    fn assert_report(cx: &OrderedComplex, r: &ClassReport, expect: bool) {
        assert_eq!(r.holds, expect, "{cx:?}: {r:?}");
        assert_eq!(r.witness.is_none(), r.holds);
        if let Some(w) = &r.witness {
            assert!(witness_is_valid(cx, w), "witness does not replay: {w:?}");
        }
    }

    #[test]
    fn separating_examples() {
        let table = [
            (1, [true, true, false]),
            (2, [true, false, false]),
            (3, [false, false, true]),
            (4, [false, true, false]),
        ];
        for (k, expect) in table {
            let p = psi(k);
            assert_report(&p, &check_qi(&p), expect[0]);
            assert_report(&p, &check_qe(&p), expect[1]);
            assert_report(&p, &check_qc(&p), expect[2]);
        }
    }

    #[test]
    fn named_witnesses() {
        assert_eq!(
            check_qe(&psi(2)).witness,
            Some(Witness::Exchange {
                b1: vset![1, 4],
                b2: vset![2, 3],
                element: 4
            })
        );
        assert_eq!(
            check_qc(&psi(1)).witness,
            Some(Witness::Circuit {
                c1: vset![2, 3],
                c2: vset![2, 4],
                element: 2
            })
        );
    }

    #[test]
    fn matroids_satisfy_everything() {
        for m in [
            OrderedComplex::uniform(2, 4),
            OrderedComplex::uniform(3, 5),
            OrderedComplex::uniform(1, 3),
        ] {
            assert_report(&m, &is_matroid(&m), true);
            for a in Axiom::CLASSES {
                assert_report(&m, &a.check(&m), true);
            }
        }
    }

    #[test]
    fn non_matroids() {
        for k in [1, 3] {
            let p = psi(k);
            assert_report(&p, &is_matroid(&p), false);
            assert!(!independence_axiom(&p) && !circuit_axiom(&p));
        }
        let impure = c(3, &[&[1, 2], &[3]]);
        assert_report(&impure, &is_matroid(&impure), false);
        assert_report(&impure, &check_qi(&impure), false);
        assert_report(&impure, &check_pure_class(&impure), false);
    }

    #[test]
    fn fbp_examples() {
        assert_report(&psi(2), &check_fbp(&psi(2)), false);
        assert_report(
            &OrderedComplex::uniform(2, 5),
            &check_fbp(&OrderedComplex::uniform(2, 5)),
            true,
        );
        let shifted = c(
            5,
            &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 5]],
        );
        assert_report(&shifted, &check_fbp(&shifted), true);
        // Rank one always satisfies FBP.
        let rank1 = c(3, &[&[2], &[3]]);
        assert_report(&rank1, &check_fbp(&rank1), true);
    }

    #[test]
    fn lex_and_gale_examples() {
        let path = c(4, &[&[1, 2], &[1, 3], &[2, 4]]);
        assert_report(&path, &check_lex(&path), true);
        assert_report(&path, &check_gale(&path), true);
        assert_report(&path, &check_pure_class(&path), true);
        assert_eq!(
            check_gale(&psi(2)).witness,
            Some(Witness::Gale {
                minimal: vec![vset![1, 4], vset![2, 3]]
            })
        );
        let single = c(3, &[&[1, 3]]);
        assert_report(&single, &check_lex(&single), true);
        assert_report(&single, &check_gale(&single), true);
        let disjoint = c(4, &[&[1, 2], &[3, 4]]);
        assert_report(&disjoint, &check_lex(&disjoint), false);
    }

    #[test]
    fn hereditary_mode() {
        let u = OrderedComplex::uniform(2, 4);
        assert!(check_hereditary(&u, Axiom::Lex).holds);
        let r = check_hereditary(&psi(2), Axiom::Gale);
        assert_report(&psi(2), &r, false);
    }

    #[test]
    fn permutations_are_complete() {
        let mut p = vec![1, 2, 3, 4];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![4, 3, 2, 1]);
        assert_eq!(
            distinct_relabelings(&OrderedComplex::uniform(2, 4)).len(),
            1
        );
    }

    #[test]
    fn all_orderings() {
        let u = OrderedComplex::uniform(2, 4);
        assert!(holds_for_all_orderings(&u, Axiom::Qe).holds);
        let r = holds_for_all_orderings(&psi(1), Axiom::Qi);
        assert_report(&psi(1), &r, false);
        assert!(matches!(r.witness, Some(Witness::Ordering { .. })));
    }

    #[test]
    fn shedding_trees() {
        let u = OrderedComplex::uniform(2, 4);
        let t = vertex_decomposition(&u)
            .unwrap()
            .expect("matroids are vertex decomposable");
        assert!(t.verify(&u));
        let single = c(3, &[&[1, 3]]);
        assert_eq!(
            vertex_decomposition(&single).unwrap(),
            Some(SheddingTree::Leaf { basis: vset![1, 3] })
        );
        let shifted = c(
            5,
            &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4], &[1, 2, 5]],
        );
        match vertex_decomposition(&shifted).unwrap() {
            Some(t @ SheddingTree::Shed { vertex: 5, .. }) => assert!(t.verify(&shifted)),
            other => panic!("{other:?}"),
        }
        let disjoint = c(4, &[&[1, 2], &[3, 4]]);
        assert_eq!(vertex_decomposition(&disjoint).unwrap(), None);
        assert_eq!(
            vertex_decomposition(&c(3, &[&[1, 2], &[3]])),
            Err(Error::NotPure)
        );
    }

    #[test]
    fn axiom_names_round_trip() {
        for a in Axiom::CLASSES.into_iter().chain([Axiom::Matroid]) {
            assert_eq!(a.name().parse::<Axiom>().unwrap(), a);
        }
        assert!("qx".parse::<Axiom>().is_err());
    }
}
