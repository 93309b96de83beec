//! Tutte polynomials by activities and by deletion-contraction, broken
//! circuits and nbc complexes.

use std::collections::HashMap;

use serde::Serialize;

use crate::activities::{externally_active, internally_active, internally_passive, is_shelling};
use crate::axioms::{check_qc, check_qe};
use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::polynomial::num_like::RingLike;
use crate::polynomial::{BivariatePolynomial, UnivariatePolynomial};
use crate::vertex_set::VertexSet;

/// `sum_B x^{|IA(B)|} y^{|EA(B)|}`.
pub fn tutte_activities(c: &OrderedComplex) -> BivariatePolynomial {
    let mut t = BivariatePolynomial::zero();
    for &b in c.bases() {
        let ia = internally_active(c, b).len() as u32;
        let ea = externally_active(c, b).len() as u32;
        t.add_term(ia, ea, 1);
    }
    t
}

/// The deletion-contraction recurrence: loops and coloops split off as
/// factors `y` and `x`; otherwise the largest element (necessarily the
/// largest non-coloop vertex) is deleted and contracted.
pub fn tutte_deletion_contraction(c: &OrderedComplex) -> BivariatePolynomial {
    delcon(c, false, &mut HashMap::new()).expect("unchecked recursion cannot fail")
}

/// As [`tutte_deletion_contraction`], but every complex reached after
/// stripping loops and coloops must satisfy QE and QC.
pub fn tutte_deletion_contraction_checked(c: &OrderedComplex) -> Result<BivariatePolynomial> {
    delcon(c, true, &mut HashMap::new())
}

fn delcon(
    c: &OrderedComplex,
    checked: bool,
    memo: &mut HashMap<Vec<VertexSet>, BivariatePolynomial>,
) -> Result<BivariatePolynomial> {
    let loops = c.loops();
    let coloops = c.coloops();
    let core = c
        .restrict(c.ground().difference(loops).difference(coloops))
        .expect("in range");
    let factor = BivariatePolynomial::monomial(1, coloops.len() as u32, loops.len() as u32);
    if core.n() == 0 {
        return Ok(factor);
    }
    if let Some(t) = memo.get(core.facets()) {
        return Ok(&factor * t);
    }
    if checked && !(check_qe(&core).holds && check_qc(&core).holds) {
        return Err(Error::LeftTutteClass(core.to_json()));
    }
    let v = core.n();
    let deletion = core.delete_element(v).expect("no coloops remain");
    let contraction = core.contract_vertex(v).expect("no loops remain");
    let t = &delcon(&deletion, checked, memo)? + &delcon(&contraction, checked, memo)?;
    memo.insert(core.facets().to_vec(), t.clone());
    Ok(&factor * &t)
}

/// `T(c; x0, y0)` in any ring.
pub fn tg_evaluate<R: Clone + RingLike>(c: &OrderedComplex, x0: &R, y0: &R) -> R {
    tutte_activities(c).eval(x0, y0)
}

/// `x^r T(1/x, y0)` as a univariate polynomial.
pub fn reciprocal_specialization(
    t: &BivariatePolynomial,
    rank: usize,
    y0: i64,
) -> UnivariatePolynomial {
    t.specialize_y(y0).reverse(rank)
}

/// `h(c, x) = x^r T(c; 1/x, 1)`.
pub fn h_identity_check(c: &OrderedComplex) -> bool {
    c.h_polynomial() == reciprocal_specialization(&tutte_activities(c), c.rank(), 1)
}

/// Circuits with their minimum removed, deduplicated and sorted.
pub fn broken_circuits(c: &OrderedComplex) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = c
        .circuits()
        .into_iter()
        .map(|k| k.without(k.min().expect("circuits are nonempty")))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Bases containing no broken circuit; `None` for the void complex (no such
/// basis, which happens whenever there is a loop).
pub fn nbc_complex(c: &OrderedComplex) -> Option<OrderedComplex> {
    let broken = broken_circuits(c);
    let bases: Vec<VertexSet> = c
        .bases()
        .iter()
        .copied()
        .filter(|b| !broken.iter().any(|d| d.is_subset(*b)))
        .collect();
    if bases.is_empty() {
        None
    } else {
        Some(OrderedComplex::new(c.n(), bases).expect("bases of c"))
    }
}

/// `h` of the nbc complex, with the void complex contributing zero.
pub fn nbc_h_polynomial(c: &OrderedComplex) -> UnivariatePolynomial {
    nbc_complex(c).map_or_else(UnivariatePolynomial::zero, |n| n.h_polynomial())
}

/// The unique circuit inside `basis + e` for an externally active `e`.
pub fn fundamental_circuit(c: &OrderedComplex, basis: VertexSet, e: usize) -> Result<VertexSet> {
    if !c.is_basis(basis) {
        return Err(Error::NotABasis(basis));
    }
    if !externally_active(c, basis).contains(e) {
        return Err(Error::NotExternallyActive { basis, e });
    }
    let span = basis.with(e);
    let inside: Vec<VertexSet> = c
        .circuits()
        .into_iter()
        .filter(|k| k.is_subset(span))
        .collect();
    match inside.as_slice() {
        [only] => Ok(*only),
        _ => Err(Error::FundamentalCircuitNotUnique {
            basis,
            e,
            count: inside.len(),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NbcReport {
    /// `h(nbc, x) = x^r T(1/x, 0)`.
    pub h_identity: bool,
    /// `IA(B, c) = IA(B, nbc)` for every nbc basis.
    pub activities_agree: bool,
    /// Lex order shells the nbc complex.
    pub lex_shelling: bool,
}

impl NbcReport {
    pub fn holds(&self) -> bool {
        self.h_identity && self.activities_agree && self.lex_shelling
    }
}

pub fn nbc_h_identity(c: &OrderedComplex) -> NbcReport {
    let rhs = reciprocal_specialization(&tutte_activities(c), c.rank(), 0);
    let Some(nbc) = nbc_complex(c) else {
        return NbcReport {
            h_identity: rhs.is_zero(),
            activities_agree: true,
            lex_shelling: true,
        };
    };
    let activities_agree = nbc
        .bases()
        .iter()
        .all(|&b| internally_active(c, b) == internally_active(&nbc, b));
    let lex_shelling = nbc.is_pure() && is_shelling(&nbc, nbc.bases()).expect("pure").valid;
    NbcReport {
        h_identity: nbc.h_polynomial() == rhs,
        activities_agree,
        lex_shelling,
    }
}

/// `sum over nbc bases of x^{|IP(B, nbc)|}`; equals `h(nbc)` when lex order
/// shells the nbc complex.
pub fn nbc_h_from_activities(c: &OrderedComplex) -> UnivariatePolynomial {
    match nbc_complex(c) {
        Some(nbc) => nbc
            .bases()
            .iter()
            .map(|&b| UnivariatePolynomial::monomial(1, internally_passive(&nbc, b).len()))
            .sum(),
        None => UnivariatePolynomial::zero(),
    }
}

/// `a_i^2 >= a_{i-1} a_{i+1}` throughout.
pub fn is_log_concave(seq: &[u64]) -> bool {
    seq.windows(3)
        .all(|w| (w[1] as u128).pow(2) >= w[0] as u128 * w[2] as u128)
}
