//! Internal and external activity, shelling verification and the activity
//! form of the h-polynomial.

use serde::Serialize;

use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::polynomial::UnivariatePolynomial;
use crate::vertex_set::VertexSet;

/// Activity classification of every ground-set element relative to a basis.
///
/// `ia ⊔ ip = basis` and `ea ⊔ ep = E \ basis`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ActivityRecord {
    pub basis: VertexSet,
    pub ia: VertexSet,
    pub ip: VertexSet,
    pub ea: VertexSet,
    pub ep: VertexSet,
}

/// Internally active elements, by the exchange form: `b` is active when no
/// smaller non-member `b'` gives a basis `(B \ b) + b'`.
pub fn internally_active(c: &OrderedComplex, basis: VertexSet) -> VertexSet {
    let outside = c.ground().difference(basis);
    basis
        .iter()
        .filter(|&b| {
            let rest = basis.without(b);
            !outside.below(b).iter().any(|b2| c.is_basis(rest.with(b2)))
        })
        .collect()
}

/// Externally active elements. `e` is active iff `{e} ∪ {b in B : b > e}` is
/// dependent: any circuit inside it contains `e` as its minimum, and any
/// circuit of `B + e` with minimum `e` lies inside it.
pub fn externally_active(c: &OrderedComplex, basis: VertexSet) -> VertexSet {
    c.ground()
        .difference(basis)
        .iter()
        .filter(|&e| !c.is_face(basis.above(e).with(e)))
        .collect()
}

pub fn activity(c: &OrderedComplex, basis: VertexSet) -> Result<ActivityRecord> {
    if !c.is_basis(basis) {
        return Err(Error::NotABasis(basis));
    }
    Ok(activity_unchecked(c, basis))
}

pub(crate) fn activity_unchecked(c: &OrderedComplex, basis: VertexSet) -> ActivityRecord {
    let ia = internally_active(c, basis);
    let ea = externally_active(c, basis);
    ActivityRecord {
        basis,
        ia,
        ip: basis.difference(ia),
        ea,
        ep: c.ground().difference(basis).difference(ea),
    }
}

/// Activity records for every basis, in lexicographic basis order.
pub fn all_activities(c: &OrderedComplex) -> Vec<ActivityRecord> {
    c.bases()
        .iter()
        .map(|&b| activity_unchecked(c, b))
        .collect()
}

/// Internally passive set of a basis.
pub fn internally_passive(c: &OrderedComplex, basis: VertexSet) -> VertexSet {
    basis.difference(internally_active(c, basis))
}

/// Outcome of checking a basis order against the shelling condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellingReport {
    pub valid: bool,
    /// Restriction set of each basis in order (meaningful when `valid`).
    pub restrictions: Vec<VertexSet>,
    /// First pair `(i, j)` (0-based, `i < j`) for which no codimension-one
    /// witness exists.
    pub failure: Option<(usize, usize)>,
}

/// Checks whether `order` is a shelling order and computes restriction sets.
///
/// For the `j`-th basis the restriction set is the set of `b` such that
/// `B_j \ b` lies in an earlier basis; the order shells iff every earlier
/// basis misses at least one of those elements.
pub fn is_shelling(c: &OrderedComplex, order: &[VertexSet]) -> Result<ShellingReport> {
    if !c.is_pure() {
        return Err(Error::NotPure);
    }
    let mut sorted = order.to_vec();
    sorted.sort();
    if sorted != c.bases() {
        return Err(Error::NotABasisOrder);
    }
    let mut restrictions = Vec::with_capacity(order.len());
    let mut failure = None;
    for (j, &bj) in order.iter().enumerate() {
        let earlier = &order[..j];
        let r: VertexSet = bj
            .iter()
            .filter(|&b| earlier.iter().any(|bk| bj.without(b).is_subset(*bk)))
            .collect();
        if failure.is_none() {
            if let Some(i) = earlier.iter().position(|bi| r.is_subset(*bi)) {
                failure = Some((i, j));
            }
        }
        restrictions.push(r);
    }
    Ok(ShellingReport {
        valid: failure.is_none(),
        restrictions,
        failure,
    })
}

/// True iff lexicographic order shells `c` and every restriction set equals
/// the internally passive set of its basis.
pub fn lex_shelling_check(c: &OrderedComplex) -> bool {
    if !c.is_pure() {
        return false;
    }
    let report = is_shelling(c, c.bases()).expect("bases are a permutation of themselves");
    report.valid
        && c.bases()
            .iter()
            .zip(&report.restrictions)
            .all(|(&b, &r)| internally_passive(c, b) == r)
}

/// `sum_B x^{|IP(B)|}`.
pub fn h_from_activities(c: &OrderedComplex) -> UnivariatePolynomial {
    c.bases()
        .iter()
        .map(|&b| UnivariatePolynomial::monomial(1, internally_passive(c, b).len()))
        .sum()
}
