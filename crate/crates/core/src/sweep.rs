//! Batch property sweeps over enumerated or sampled families.
//!
//! A sweep spec is `{"family": {...}, "properties": ["lex-shelling", ...]}`.
//! Every property is a conditional claim: members outside its hypothesis are
//! counted as not applicable, never as passes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::activities::{
    all_activities, h_from_activities, internally_passive, lex_shelling_check,
};
use crate::axioms::{
    check_fbp, check_qc, check_qe, check_qi, holds_for_all_orderings, is_matroid, Axiom,
};
use crate::complex::{ComplexFile, OrderedComplex};
use crate::error::{Error, Result};
use crate::generate::{random_gf_matroid, random_shifted_complex, rng};
use crate::laplacian::{integrality_survey, DEFAULT_TOLERANCE};
use crate::multicomplex::verify_conjecture_conditions;
use crate::oracle::{self, NaiveComplex};
use crate::posets::{gale_poset, gale_truncate, int_poset, principal_ideal};
use crate::shifted::{is_shifted, multicomplex_of_shifted, shifted_family};
use crate::stanley::{
    admissibility_clauses, h_decomposition, is_admissible, passive_splitting_unchecked,
    search_multicomplex_unchecked, SearchOutcome, SplitMode,
};
use crate::tutte::{nbc_h_identity, tutte_activities, tutte_deletion_contraction_checked};
use crate::vertex_set::VertexSet;

use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum FamilySpec {
    /// Pure complexes on `1..=n` for `n <= max_n`, every rank, one per
    /// relabeling class unless `labeled`.
    Pure {
        max_n: usize,
        #[serde(default)]
        labeled: bool,
    },
    /// Matroids up to isomorphism.
    Matroids {
        max_n: usize,
        max_rank: usize,
    },
    RandomShifted {
        count: usize,
        max_n: usize,
        seed: u64,
    },
    /// Column matroids of random matrices over GF(p).
    RandomMatroids {
        count: usize,
        p: u64,
        max_n: usize,
        max_rank: usize,
        seed: u64,
    },
    Explicit {
        complexes: Vec<ComplexFile>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub family: FamilySpec,
    pub properties: Vec<String>,
}

impl SweepSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: SweepSpec =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        if spec.properties.is_empty() {
            return Err(Error::Invalid("no properties listed".into()));
        }
        for id in &spec.properties {
            Property::parse(id)?;
        }
        Ok(spec)
    }
}

pub fn enumerate_family(family: &FamilySpec, allow_large: bool) -> Result<Vec<OrderedComplex>> {
    match family {
        FamilySpec::Pure { max_n, labeled } => {
            let mut out = Vec::new();
            for n in 1..=*max_n {
                for d in 0..=n {
                    out.extend(if *labeled {
                        oracle::enumerate_labeled_pure_complexes(n, d, allow_large)?
                    } else {
                        oracle::enumerate_pure_complexes(n, d, allow_large)?
                    });
                }
            }
            Ok(out)
        }
        FamilySpec::Matroids { max_n, max_rank } => {
            let mut out = Vec::new();
            for n in 1..=*max_n {
                out.extend(
                    oracle::enumerate_matroids(n, *max_rank)?
                        .into_iter()
                        .filter(|m| m.n() == n),
                );
            }
            Ok(out)
        }
        FamilySpec::RandomShifted { count, max_n, seed } => {
            let mut r = rng(*seed);
            (0..*count)
                .map(|_| random_shifted_complex(&mut r, *max_n))
                .collect()
        }
        FamilySpec::RandomMatroids {
            count,
            p,
            max_n,
            max_rank,
            seed,
        } => {
            if *max_rank == 0 || max_rank > max_n {
                return Err(Error::Invalid(format!(
                    "need 1 <= max_rank <= max_n, got {max_rank}, {max_n}"
                )));
            }
            let mut r = rng(*seed);
            (0..*count)
                .map(|_| {
                    let rank = r.gen_range(1..=*max_rank);
                    let n = r.gen_range(rank..=*max_n);
                    random_gf_matroid(&mut r, *p, rank, n)
                })
                .collect()
        }
        FamilySpec::Explicit { complexes } => complexes
            .iter()
            .cloned()
            .map(OrderedComplex::try_from)
            .collect(),
    }
}

/// Property identifiers accepted in sweep specs.
pub const PROPERTY_IDS: &[&str] = &[
    "in-class:<axiom>",
    "matroid-in-every-class",
    "all-orderings-forces-matroid",
    "all-orderings-forces-matroid:<axiom>",
    "lex-shelling",
    "tutte-agreement",
    "nbc-identity",
    "gale-truncation",
    "h-decomposition",
    "passive-splitting",
    "laplacian-integral",
    "oracle-agreement",
    "shifted-multicomplex",
    "conjecture-search",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    /// Unconditional membership; mostly useful as a deliberately false claim.
    InClass(Axiom),
    MatroidInEveryClass,
    AllOrderingsForcesMatroid(Option<Axiom>),
    LexShelling,
    TutteAgreement,
    NbcIdentity,
    GaleTruncation,
    HDecomposition,
    PassiveSplitting,
    LaplacianIntegral,
    OracleAgreement,
    ShiftedMulticomplex,
    ConjectureSearch,
}

impl Property {
    pub fn parse(id: &str) -> Result<Self> {
        let (head, arg) = match id.split_once(':') {
            Some((h, a)) => (h, Some(a.parse::<Axiom>()?)),
            None => (id, None),
        };
        Ok(match (head, arg) {
            ("in-class", Some(a)) => Property::InClass(a),
            ("matroid-in-every-class", None) => Property::MatroidInEveryClass,
            ("all-orderings-forces-matroid", a) => Property::AllOrderingsForcesMatroid(a),
            ("lex-shelling", None) => Property::LexShelling,
            ("tutte-agreement", None) => Property::TutteAgreement,
            ("nbc-identity", None) => Property::NbcIdentity,
            ("gale-truncation", None) => Property::GaleTruncation,
            ("h-decomposition", None) => Property::HDecomposition,
            ("passive-splitting", None) => Property::PassiveSplitting,
            ("laplacian-integral", None) => Property::LaplacianIntegral,
            ("oracle-agreement", None) => Property::OracleAgreement,
            ("shifted-multicomplex", None) => Property::ShiftedMulticomplex,
            ("conjecture-search", None) => Property::ConjectureSearch,
            _ => {
                return Err(Error::Invalid(format!(
                    "unknown property {id:?}; known: {}",
                    PROPERTY_IDS.join(", ")
                )))
            }
        })
    }
}

/// Result of one property on one complex.
#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    NotApplicable,
    Pass,
    Fail(Value),
}

fn verdict(ok: bool, detail: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

const SEARCH_BUDGET: u64 = 1_000_000;

pub fn evaluate(property: Property, c: &OrderedComplex) -> Outcome {
    match property {
        Property::InClass(axiom) => {
            let r = axiom.check(c);
            verdict(r.holds, || json!({ "report": r }))
        }
        Property::MatroidInEveryClass => {
            if !is_matroid(c).holds {
                return Outcome::NotApplicable;
            }
            let failed: Vec<&str> = Axiom::CLASSES
                .iter()
                .filter(|a| !a.check(c).holds)
                .map(|a| a.name())
                .collect();
            verdict(failed.is_empty(), || json!({ "failed_classes": failed }))
        }
        Property::AllOrderingsForcesMatroid(axiom) => {
            if !c.is_pure() {
                return Outcome::NotApplicable;
            }
            let matroid = is_matroid(c).holds;
            let axioms: Vec<Axiom> = match axiom {
                Some(a) => vec![a],
                None => Axiom::CLASSES.to_vec(),
            };
            let bad: Vec<&str> = axioms
                .iter()
                .filter(|&&a| !matroid && holds_for_all_orderings(c, a).holds)
                .map(|a| a.name())
                .collect();
            verdict(
                bad.is_empty(),
                || json!({ "classes_holding_in_every_order": bad }),
            )
        }
        Property::LexShelling => {
            if !check_qe(c).holds {
                return Outcome::NotApplicable;
            }
            let shelling = lex_shelling_check(c);
            let h_ok = h_from_activities(c) == c.h_polynomial();
            verdict(
                shelling && h_ok,
                || json!({ "lex_shelling_with_passive_restrictions": shelling, "h_from_activities_matches": h_ok }),
            )
        }
        Property::TutteAgreement => tutte_agreement(c),
        Property::NbcIdentity => {
            if !is_matroid(c).holds {
                return Outcome::NotApplicable;
            }
            let r = nbc_h_identity(c);
            verdict(r.holds(), || json!({ "report": r }))
        }
        Property::GaleTruncation => gale_truncation(c),
        Property::HDecomposition => h_decomposition_property(c),
        Property::PassiveSplitting => passive_splitting_property(c),
        Property::LaplacianIntegral => {
            let reports = integrality_survey(c, DEFAULT_TOLERANCE);
            let bad: Vec<_> = reports.iter().filter(|r| !r.integral).collect();
            verdict(bad.is_empty(), || json!({ "non_integral": bad }))
        }
        Property::OracleAgreement => oracle_agreement(c),
        Property::ShiftedMulticomplex => {
            if !is_shifted(c) {
                return Outcome::NotApplicable;
            }
            match multicomplex_of_shifted(c) {
                Ok(a) => {
                    let r = verify_conjecture_conditions(c, &a, Some(&shifted_family));
                    verdict(r.holds(), || json!({ "report": r }))
                }
                Err(e) => Outcome::Fail(json!({ "error": e.to_string() })),
            }
        }
        Property::ConjectureSearch => {
            if !(check_qe(c).holds && check_qi(c).holds && check_fbp(c).holds) {
                return Outcome::NotApplicable;
            }
            match search_multicomplex_unchecked(c, SEARCH_BUDGET) {
                SearchOutcome::Found { assignment } => {
                    let r = verify_conjecture_conditions(c, &assignment, None);
                    verdict(r.local_clauses_hold(), || json!({ "report": r }))
                }
                other => Outcome::Fail(json!({ "search": other })),
            }
        }
    }
}

fn tutte_agreement(c: &OrderedComplex) -> Outcome {
    let matroid = is_matroid(c).holds;
    let in_class = check_qe(c).holds && check_qc(c).holds;
    if !matroid && !in_class {
        return Outcome::NotApplicable;
    }
    let by_activities = tutte_activities(c);
    let by_recursion = tutte_deletion_contraction_checked(c);
    let recursion_ok = by_recursion.as_ref().is_ok_and(|t| *t == by_activities);
    let corank_ok = !matroid
        || oracle::corank_nullity_tutte(&NaiveComplex::from(c)).is_ok_and(|t| {
            t.into_iter().collect::<Vec<_>>() == by_activities.terms().collect::<Vec<_>>()
        });
    verdict(recursion_ok && corank_ok, || {
        json!({
            "activities": by_activities,
            "deletion_contraction": by_recursion.map_err(|e| e.to_string()),
            "corank_nullity_agrees": corank_ok,
        })
    })
}

/// Every principal Gale ideal: the truncation stays in the class and keeps
/// internally passive sets.
fn gale_truncation(c: &OrderedComplex) -> Outcome {
    let qe = check_qe(c).holds;
    let qi_fbp = check_qi(c).holds && check_fbp(c).holds;
    if !qe && !qi_fbp {
        return Outcome::NotApplicable;
    }
    let gale = gale_poset(c).expect("QE and QI imply pure");
    for &b in c.bases() {
        let ideal = principal_ideal(&gale, b);
        let t = gale_truncate(c, &ideal).expect("principal ideals are ideals");
        let class_kept =
            (!qe || check_qe(&t).holds) && (!qi_fbp || (check_qi(&t).holds && check_fbp(&t).holds));
        let moved: Vec<VertexSet> = ideal
            .iter()
            .copied()
            .filter(|&x| internally_passive(&t, x) != internally_passive(c, x))
            .collect();
        if !class_kept || !moved.is_empty() {
            return Outcome::Fail(
                json!({ "generator": b, "class_kept": class_kept, "passive_set_changed": moved }),
            );
        }
    }
    Outcome::Pass
}

fn h_decomposition_property(c: &OrderedComplex) -> Outcome {
    if !c.is_pure() {
        return Outcome::NotApplicable;
    }
    for a in c.ground().subsets() {
        let dec = h_decomposition(c, a).expect("pure");
        let refined_needed = is_admissible(c, a) || admissibility_clauses(c, a).exchange;
        if !dec.general_holds() || (refined_needed && !dec.refined_holds()) {
            return Outcome::Fail(json!({ "a": a, "decomposition": dec }));
        }
    }
    Outcome::Pass
}

fn passive_splitting_property(c: &OrderedComplex) -> Outcome {
    if !check_qe(c).holds {
        return Outcome::NotApplicable;
    }
    let strong = check_qi(c).holds && check_fbp(c).holds;
    let b0 = c.lex_min_basis();
    for a in c.ground().subsets() {
        let mut modes = Vec::new();
        if admissibility_clauses(c, a).exchange {
            modes.push(SplitMode::OutsideA);
        }
        if strong && b0.is_subset(a) {
            modes.push(SplitMode::OutsideB0);
        }
        for mode in modes {
            let r = passive_splitting_unchecked(c, a, mode);
            if !r.holds {
                return Outcome::Fail(json!({ "a": a, "mode": mode, "report": r }));
            }
        }
    }
    Outcome::Pass
}

fn oracle_agreement(c: &OrderedComplex) -> Outcome {
    let naive = NaiveComplex::from(c);
    let circuits: Vec<Vec<usize>> = c.circuits().iter().map(|k| k.to_vec()).collect();
    if circuits != naive.circuits() {
        return Outcome::Fail(json!({ "circuits": circuits, "oracle": naive.circuits() }));
    }
    let h = c.h_vector();
    if h != naive.h_vector() {
        return Outcome::Fail(json!({ "h_vector": h, "oracle": naive.h_vector() }));
    }
    for rec in all_activities(c) {
        let o = oracle::activity_by_definition(&naive, &rec.basis.to_vec());
        if (
            rec.ia.to_vec(),
            rec.ip.to_vec(),
            rec.ea.to_vec(),
            rec.ep.to_vec(),
        ) != (o.ia, o.ip, o.ea, o.ep)
        {
            return Outcome::Fail(json!({ "activity": rec }));
        }
    }
    if !c.is_pure() {
        return Outcome::Pass;
    }
    let bases = naive.bases();
    let gale = gale_poset(c).expect("pure");
    let int = int_poset(c).expect("pure");
    let gale_rel = oracle::gale_relation(&naive);
    let int_rel = oracle::int_relation(&naive);
    for (i, x) in bases.iter().enumerate() {
        for (j, y) in bases.iter().enumerate() {
            let (x, y) = (VertexSet::from_slice(x), VertexSet::from_slice(y));
            if gale.leq(x, y) != gale_rel[i][j] || int.leq(x, y) != int_rel[i][j] {
                return Outcome::Fail(json!({ "poset_pair": [x, y] }));
            }
        }
    }
    Outcome::Pass
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub index: usize,
    pub complex: ComplexFile,
    pub detail: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyReport {
    pub id: String,
    pub holds: bool,
    pub applicable: usize,
    pub passed: usize,
    /// Lowest-index failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepReport {
    pub family: FamilySpec,
    pub members: usize,
    pub holds: bool,
    pub properties: Vec<PropertyReport>,
}

pub fn run_on(members: &[OrderedComplex], id: &str) -> Result<PropertyReport> {
    let property = Property::parse(id)?;
    let outcomes: Vec<Outcome> = members.par_iter().map(|c| evaluate(property, c)).collect();
    let applicable = outcomes
        .iter()
        .filter(|o| !matches!(o, Outcome::NotApplicable))
        .count();
    let passed = outcomes
        .iter()
        .filter(|o| matches!(o, Outcome::Pass))
        .count();
    let counterexample = outcomes
        .into_iter()
        .enumerate()
        .find_map(|(index, o)| match o {
            Outcome::Fail(detail) => Some(Counterexample {
                index,
                complex: ComplexFile::from(&members[index]),
                detail,
            }),
            _ => None,
        });
    Ok(PropertyReport {
        id: id.to_string(),
        holds: counterexample.is_none(),
        applicable,
        passed,
        counterexample,
    })
}

pub fn sweep(spec: &SweepSpec, allow_large: bool) -> Result<SweepReport> {
    let members = enumerate_family(&spec.family, allow_large)?;
    let properties = spec
        .properties
        .iter()
        .map(|id| run_on(&members, id))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport {
        family: spec.family.clone(),
        members: members.len(),
        holds: properties.iter().all(|p| p.holds),
        properties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(family: FamilySpec, properties: &[&str]) -> SweepSpec {
        SweepSpec {
            family,
            properties: properties.iter().map(|s| s.to_string()).collect(),
        }
    }

    #[test]
    fn parses_ids() {
        assert_eq!(
            Property::parse("in-class:qe").unwrap(),
            Property::InClass(Axiom::Qe)
        );
        assert_eq!(
            Property::parse("all-orderings-forces-matroid:qc").unwrap(),
            Property::AllOrderingsForcesMatroid(Some(Axiom::Qc))
        );
        assert!(Property::parse("in-class").is_err());
        assert!(Property::parse("lex-shelling:qe").is_err());
        assert!(Property::parse("nonsense").is_err());
    }

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{"family": {"kind": "pure", "max_n": 3}, "properties": ["lex-shelling"]}"#;
        let s = SweepSpec::from_json(text).unwrap();
        assert_eq!(
            s.family,
            FamilySpec::Pure {
                max_n: 3,
                labeled: false
            }
        );
        assert!(SweepSpec::from_json(
            r#"{"family": {"kind": "pure", "max_n": 3}, "properties": []}"#
        )
        .is_err());
        assert!(SweepSpec::from_json(
            r#"{"family": {"kind": "pure"}, "properties": ["lex-shelling"]}"#
        )
        .is_err());
    }

    #[test]
    fn small_universe_passes() {
        let s = spec(
            FamilySpec::Pure {
                max_n: 4,
                labeled: false,
            },
            &[
                "lex-shelling",
                "tutte-agreement",
                "h-decomposition",
                "passive-splitting",
                "oracle-agreement",
            ],
        );
        let r = sweep(&s, false).unwrap();
        assert!(r.holds, "{}", serde_json::to_string_pretty(&r).unwrap());
    }

    #[test]
    fn false_claim_reports_first_counterexample() {
        // Every pure complex on at most three elements is a matroid, so go to four.
        let s = spec(
            FamilySpec::Pure {
                max_n: 4,
                labeled: false,
            },
            &["in-class:matroid"],
        );
        let r = sweep(&s, false).unwrap();
        assert!(!r.holds);
        let p = &r.properties[0];
        assert!(p.passed < p.applicable);
        let cx = p.counterexample.as_ref().unwrap();
        let c = OrderedComplex::try_from(cx.complex.clone()).unwrap();
        assert!(!is_matroid(&c).holds);
    }

    #[test]
    fn random_families_are_reproducible() {
        let f = FamilySpec::RandomMatroids {
            count: 5,
            p: 2,
            max_n: 6,
            max_rank: 3,
            seed: 9,
        };
        assert_eq!(
            enumerate_family(&f, false).unwrap(),
            enumerate_family(&f, false).unwrap()
        );
        let bad = FamilySpec::RandomMatroids {
            count: 5,
            p: 2,
            max_n: 2,
            max_rank: 3,
            seed: 9,
        };
        assert!(enumerate_family(&bad, false).is_err());
    }
}
