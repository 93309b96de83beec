//! Command-line front end. Every subcommand prints one JSON document.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 usage or input error.

use std::collections::BTreeMap;
use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::activities::{
    activity, all_activities, h_from_activities, internally_passive, is_shelling,
};
use crate::axioms::{
    check_hereditary, holds_for_all_orderings, vertex_decomposition, Axiom, ClassReport,
};
use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::generate::young_ideal;
use crate::laplacian::{integrality_survey, laplacian_spectrum, DEFAULT_TOLERANCE};
use crate::multicomplex::{stanley_purity_check, verify_conjecture_conditions, Assignment};
use crate::oracle::{self, NaiveComplex};
use crate::posets::{gale_poset, int_poset, weak_gale_poset, FinitePoset};
use crate::shifted::{
    basis_to_partition, is_shifted, monomial_bouncing_light, monomial_inductive,
    multicomplex_of_shifted, partition_to_basis, shifted_family, shifted_from_ideal, Partition,
};
use crate::stanley::{
    admissibility_clauses, h_decomposition, is_admissible, is_o_sequence, is_pure_o_sequence,
    passive_splitting_unchecked, search_multicomplex, PureSearchBounds, SearchOutcome, SplitMode,
};
use crate::sweep::{sweep, SweepSpec};
use crate::tutte::{
    nbc_complex, nbc_h_identity, tutte_activities, tutte_deletion_contraction_checked,
};
use crate::vertex_set::VertexSet;

/// Largest ground set accepted from files without `--allow-large`.
pub const FILE_BOUND: usize = 16;

#[derive(Parser, Debug)]
#[command(
    name = "quasimat",
    version,
    about = "Ordered simplicial complexes and quasi-matroidal classes"
)]
#[command(arg_required_else_help = true)]
struct Cli {
    /// Cross-check against the brute-force oracle where one exists.
    #[arg(long, global = true)]
    oracle: bool,
    /// Lift the size guards on input files and enumerations.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Class membership with witnesses.
    Check {
        file: String,
        /// Repeatable; default is every class plus matroid, reported without
        /// affecting the exit code.
        #[arg(long = "axiom", value_parser = parse_axiom)]
        axioms: Vec<Axiom>,
        /// Require the axiom under every relabeling of the ground set.
        #[arg(long)]
        all_orderings: bool,
        /// Also check every single deletion and contraction.
        #[arg(long)]
        hereditary: bool,
        /// Report a shedding-vertex tree.
        #[arg(long)]
        vertex_decomposition: bool,
    },
    /// Internal and external activities of one basis or of all bases.
    Activity {
        file: String,
        #[arg(long, value_parser = parse_set)]
        basis: Option<VertexSet>,
    },
    /// Checks a basis order (lex by default) for the shelling property.
    Shelling {
        file: String,
        /// Bases separated by ';', elements by ',': "1,2;1,3".
        #[arg(long, value_parser = parse_sets)]
        order: Option<SetList>,
    },
    /// Gale, Int or weak Gale order on bases.
    Poset {
        file: String,
        #[arg(long, value_enum, default_value_t = PosetKind::Gale)]
        kind: PosetKind,
        /// Emit Graphviz text in a "dot" field.
        #[arg(long)]
        dot: bool,
    },
    /// Tutte polynomial by activities, by deletion-contraction, or both.
    Tutte {
        file: String,
        #[arg(long, value_enum, default_value_t = TutteMethod::Activities)]
        method: TutteMethod,
    },
    /// The nbc complex and its h-vector identity.
    Nbc { file: String },
    /// Shifted complexes, partitions in a box and their monomials.
    Shifted(ShiftedArgs),
    /// Checks a basis-to-monomial assignment, or searches for one.
    Multicomplex {
        file: String,
        /// JSON list of {"basis": [...], "monomial": {"v": e}}; searched for if absent.
        #[arg(long)]
        assignment: Option<String>,
        #[arg(long, default_value_t = 2_000_000)]
        budget: u64,
    },
    /// h-decomposition over a split of the ground set, and O-sequence tests.
    Stanley(StanleyArgs),
    /// Spectra of the combinatorial Laplacians.
    Laplacian {
        file: String,
        /// One dimension only; default is every dimension.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<isize>,
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        /// Exit 1 when some spectrum is not integral.
        #[arg(long)]
        require_integral: bool,
    },
    /// Runs a sweep spec file.
    Sweep { spec: String },
}

#[derive(Args, Debug)]
struct ShiftedArgs {
    /// A complex file: test shiftedness and build its multicomplex.
    file: Option<String>,
    /// Partition parts, e.g. "7,7,5,5,3,2,1", giving both monomials.
    #[arg(long, value_parser = parse_parts)]
    partition: Option<Parts>,
    /// Box height (the rank).
    #[arg(long)]
    rows: Option<usize>,
    /// Box width (n minus the rank).
    #[arg(long)]
    cols: Option<usize>,
    /// Generators of a box ideal, "3,1;2,2,1"; builds the shifted complex.
    #[arg(long, value_parser = parse_lists)]
    generators: Option<PartsList>,
}

#[derive(Args, Debug)]
struct StanleyArgs {
    file: Option<String>,
    /// The split set `A`, e.g. "1,2".
    #[arg(long, value_parser = parse_set)]
    a: Option<VertexSet>,
    /// Test an integer vector for being an O-sequence and a pure one.
    #[arg(long, value_parser = parse_signed_list, allow_hyphen_values = true)]
    o_sequence: Option<Signed>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PosetKind {
    Gale,
    Int,
    WeakGale,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TutteMethod {
    Activities,
    DeletionContraction,
    Both,
}

fn parse_axiom(s: &str) -> std::result::Result<Axiom, String> {
    s.parse::<Axiom>().map_err(|e| e.to_string())
}

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    let s = s
        .trim()
        .trim_start_matches(['{', '['])
        .trim_end_matches(['}', ']']);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect()
}

// Newtypes keep clap from reading a `Vec` as a repeated flag.
#[derive(Clone, Debug)]
struct Parts(Vec<usize>);
#[derive(Clone, Debug)]
struct PartsList(Vec<Vec<usize>>);
#[derive(Clone, Debug)]
struct Signed(Vec<i64>);
#[derive(Clone, Debug)]
struct SetList(Vec<VertexSet>);

fn parse_parts(s: &str) -> std::result::Result<Parts, String> {
    parse_list(s).map(Parts)
}

fn parse_signed_list(s: &str) -> std::result::Result<Signed, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<std::result::Result<_, _>>()
        .map(Signed)
}

fn parse_lists(s: &str) -> std::result::Result<PartsList, String> {
    s.split(';')
        .map(parse_list)
        .collect::<std::result::Result<_, _>>()
        .map(PartsList)
}

fn parse_set(s: &str) -> std::result::Result<VertexSet, String> {
    let v = parse_list(s)?;
    if let Some(bad) = v.iter().find(|&&e| e == 0 || e > 64) {
        return Err(format!("vertex {bad} outside 1..=64"));
    }
    Ok(VertexSet::from_slice(&v))
}

fn parse_sets(s: &str) -> std::result::Result<SetList, String> {
    s.split(';')
        .map(parse_set)
        .collect::<std::result::Result<_, _>>()
        .map(SetList)
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let code =
                if e.kind() == clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand {
                    2
                } else {
                    code
                };
            let text = e.render().to_string();
            return if code == 0 {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok((value, ok)) => CliOutput {
            code: if ok { 0 } else { 1 },
            stdout: serde_json::to_string_pretty(&value).expect("json values serialize") + "\n",
            stderr: String::new(),
        },
        Err(e) => CliOutput {
            code: 2,
            stdout: String::new(),
            stderr: serde_json::to_string(&json!({ "error": e.to_string() })).expect("json") + "\n",
        },
    }
}

fn load(path: &str, allow_large: bool) -> Result<OrderedComplex> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
    let c = OrderedComplex::from_json(&text)?;
    if c.n() > FILE_BOUND && !allow_large {
        return Err(Error::BoundExceeded(format!(
            "n = {} exceeds {FILE_BOUND}; pass --allow-large",
            c.n()
        )));
    }
    Ok(c)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

type Outcome = Result<(Value, bool)>;

fn dispatch(cli: &Cli) -> Outcome {
    let large = cli.allow_large;
    match &cli.command {
        Command::Check {
            file,
            axioms,
            all_orderings,
            hereditary,
            vertex_decomposition: vd,
        } => check(
            &load(file, large)?,
            axioms,
            *all_orderings,
            *hereditary,
            *vd,
            cli.oracle,
        ),
        Command::Activity { file, basis } => activity_cmd(&load(file, large)?, *basis, cli.oracle),
        Command::Shelling { file, order } => shelling(
            &load(file, large)?,
            order.as_ref().map(|o| o.0.as_slice()),
            cli.oracle,
        ),
        Command::Poset { file, kind, dot } => poset(&load(file, large)?, *kind, *dot, cli.oracle),
        Command::Tutte { file, method } => tutte(&load(file, large)?, *method, cli.oracle),
        Command::Nbc { file } => nbc(&load(file, large)?, cli.oracle),
        Command::Shifted(args) => shifted(args, large),
        Command::Multicomplex {
            file,
            assignment,
            budget,
        } => multicomplex(&load(file, large)?, assignment.as_deref(), *budget),
        Command::Stanley(args) => stanley(args, large),
        Command::Laplacian {
            file,
            k,
            tol,
            require_integral,
        } => laplacian(&load(file, large)?, *k, *tol, *require_integral),
        Command::Sweep { spec } => {
            let text = std::fs::read_to_string(spec)
                .map_err(|e| Error::Invalid(format!("{spec}: {e}")))?;
            let report = sweep(&SweepSpec::from_json(&text)?, large)?;
            Ok((to_value(&report), report.holds))
        }
    }
}

fn check(
    c: &OrderedComplex,
    axioms: &[Axiom],
    all_orderings: bool,
    hereditary: bool,
    vd: bool,
    use_oracle: bool,
) -> Outcome {
    let requested = !axioms.is_empty();
    let list: Vec<Axiom> = if requested {
        axioms.to_vec()
    } else {
        Axiom::CLASSES
            .iter()
            .copied()
            .chain([Axiom::Matroid])
            .collect()
    };
    let run = |a: Axiom| -> ClassReport {
        match (all_orderings, hereditary) {
            (true, _) => holds_for_all_orderings(c, a),
            (false, true) => check_hereditary(c, a),
            (false, false) => a.check(c),
        }
    };
    let reports: Vec<(Axiom, ClassReport)> = list.iter().map(|&a| (a, run(a))).collect();
    let mut ok = !requested || reports.iter().all(|(_, r)| r.holds);
    let mut out = if reports.len() == 1 {
        to_value(&reports[0].1)
    } else {
        Value::Object(
            reports
                .iter()
                .map(|(a, r)| (a.name().to_string(), to_value(r)))
                .collect(),
        )
    };
    if vd {
        let tree = vertex_decomposition(c)?;
        out["vertex_decomposition"] = to_value(&tree);
    }
    if use_oracle && list.contains(&Axiom::Matroid) && !all_orderings && !hereditary {
        let agrees = oracle::is_matroid(&NaiveComplex::from(c)) == Axiom::Matroid.check(c).holds;
        out["oracle_agrees"] = json!(agrees);
        ok &= agrees;
    }
    Ok((out, ok))
}

fn activity_cmd(c: &OrderedComplex, basis: Option<VertexSet>, use_oracle: bool) -> Outcome {
    let records = match basis {
        Some(b) => vec![activity(c, b)?],
        None => all_activities(c),
    };
    let mut out = json!({ "activities": records });
    let mut ok = true;
    if use_oracle {
        let naive = NaiveComplex::from(c);
        let agrees = records.iter().all(|r| {
            let o = oracle::activity_by_definition(&naive, &r.basis.to_vec());
            (r.ia.to_vec(), r.ip.to_vec(), r.ea.to_vec(), r.ep.to_vec()) == (o.ia, o.ip, o.ea, o.ep)
        });
        out["oracle_agrees"] = json!(agrees);
        ok = agrees;
    }
    Ok((out, ok))
}

fn shelling(c: &OrderedComplex, order: Option<&[VertexSet]>, use_oracle: bool) -> Outcome {
    let order = order.unwrap_or(c.bases());
    let report = is_shelling(c, order)?;
    let passive_match = report.valid
        && order
            .iter()
            .zip(&report.restrictions)
            .all(|(&b, &r)| internally_passive(c, b) == r);
    let mut out = json!({
        "order": order,
        "shelling": report,
        "restrictions_are_passive_sets": passive_match,
        "h_from_activities": h_from_activities(c),
        "h": c.h_polynomial(),
    });
    if use_oracle {
        out["oracle_shellable"] =
            to_value(&oracle::brute_shelling_exists(&NaiveComplex::from(c)).ok());
    }
    Ok((out, report.valid))
}

fn poset_json(p: &FinitePoset) -> Value {
    json!({
        "elements": p.elements(),
        "covers": p.covers(),
        "minimal": p.minimal_elements(),
        "maximal": p.maximal_elements(),
        "antisymmetric": p.is_antisymmetric(),
    })
}

fn poset(c: &OrderedComplex, kind: PosetKind, dot: bool, use_oracle: bool) -> Outcome {
    let p = match kind {
        PosetKind::Gale => gale_poset(c)?,
        PosetKind::Int => int_poset(c)?,
        PosetKind::WeakGale => weak_gale_poset(c)?,
    };
    let mut out = poset_json(&p);
    if dot {
        out["dot"] = json!(p.to_dot());
    }
    let mut ok = true;
    if use_oracle && kind != PosetKind::WeakGale {
        let naive = NaiveComplex::from(c);
        let rel = match kind {
            PosetKind::Gale => oracle::gale_relation(&naive),
            _ => oracle::int_relation(&naive),
        };
        let bases = naive.bases();
        let agrees = bases.iter().enumerate().all(|(i, x)| {
            bases.iter().enumerate().all(|(j, y)| {
                p.leq(VertexSet::from_slice(x), VertexSet::from_slice(y)) == rel[i][j]
            })
        });
        out["oracle_agrees"] = json!(agrees);
        ok = agrees;
    }
    Ok((out, ok))
}

fn tutte(c: &OrderedComplex, method: TutteMethod, use_oracle: bool) -> Outcome {
    let mut out = serde_json::Map::new();
    let mut ok = true;
    let by_activities = tutte_activities(c);
    if method != TutteMethod::DeletionContraction {
        out.insert("activities".into(), to_value(&by_activities));
    }
    if method != TutteMethod::Activities {
        match tutte_deletion_contraction_checked(c) {
            Ok(t) => {
                if method == TutteMethod::Both {
                    ok &= t == by_activities;
                    out.insert("agree".into(), json!(t == by_activities));
                }
                out.insert("deletion_contraction".into(), to_value(&t));
            }
            Err(e @ Error::LeftTutteClass(_)) => {
                out.insert("deletion_contraction_error".into(), json!(e.to_string()));
                ok = false;
            }
            Err(e) => return Err(e),
        }
    }
    if use_oracle {
        let naive = NaiveComplex::from(c);
        let oracle_table: BTreeMap<String, i64> = oracle::tutte_by_activities(&naive)
            .into_iter()
            .map(|((i, j), v)| (format!("{i},{j}"), v))
            .collect();
        let agrees = to_value(&oracle_table) == to_value(&by_activities);
        out.insert("oracle_agrees".into(), json!(agrees));
        ok &= agrees;
    }
    Ok((Value::Object(out), ok))
}

fn nbc(c: &OrderedComplex, use_oracle: bool) -> Outcome {
    let report = nbc_h_identity(c);
    let complex = nbc_complex(c);
    let mut out = json!({
        "nbc": complex,
        "h": complex.as_ref().map(|n| n.h_polynomial()),
        "report": report,
    });
    let mut ok = report.holds();
    if use_oracle {
        let naive_h = oracle::nbc_h_vector(&NaiveComplex::from(c));
        let ours = complex.as_ref().map(|n| n.h_vector()).unwrap_or_default();
        let agrees = naive_h == ours;
        out["oracle_agrees"] = json!(agrees);
        ok &= agrees;
    }
    Ok((out, ok))
}

fn shifted(args: &ShiftedArgs, large: bool) -> Outcome {
    if let Some(file) = &args.file {
        let c = load(file, large)?;
        if !is_shifted(&c) {
            return Ok((json!({ "shifted": false }), false));
        }
        let d = c.rank();
        let n = c.n();
        let assignment = multicomplex_of_shifted(&c)?;
        let partitions: Vec<Value> = c
            .bases()
            .iter()
            .map(|&b| Ok(json!({ "basis": b, "partition": basis_to_partition(b, d, n)? })))
            .collect::<Result<_>>()?;
        let report = verify_conjecture_conditions(&c, &assignment, Some(&shifted_family));
        let ok = report.holds();
        return Ok((
            json!({ "shifted": true, "partitions": partitions, "assignment": assignment, "report": report }),
            ok,
        ));
    }
    let (Some(rows), Some(cols)) = (args.rows, args.cols) else {
        return Err(Error::Invalid(
            "give a complex file, or --rows and --cols with --partition or --generators".into(),
        ));
    };
    if let Some(Parts(parts)) = &args.partition {
        let lambda = Partition::new(parts.clone(), rows, cols)?;
        let inductive = monomial_inductive(&lambda);
        let bouncing = monomial_bouncing_light(&lambda);
        let agree = inductive == bouncing;
        return Ok((
            json!({
                "partition": lambda,
                "basis": partition_to_basis(&lambda),
                "inductive": inductive.to_string(),
                "bouncing_light": bouncing.to_string(),
                "agree": agree,
            }),
            agree,
        ));
    }
    if let Some(PartsList(gens)) = &args.generators {
        let gens: Vec<Partition> = gens
            .iter()
            .map(|g| Partition::new(g.clone(), rows, cols))
            .collect::<Result<_>>()?;
        let mut ideal = young_ideal(&gens);
        if ideal.is_empty() {
            ideal.push(Partition::empty(rows, cols));
        }
        let c = shifted_from_ideal(rows, rows + cols, &ideal)?;
        let assignment = multicomplex_of_shifted(&c)?;
        return Ok((
            json!({ "complex": c, "ideal_size": ideal.len(), "assignment": assignment }),
            true,
        ));
    }
    Err(Error::Invalid(
        "--rows/--cols need --partition or --generators".into(),
    ))
}

fn multicomplex(c: &OrderedComplex, assignment: Option<&str>, budget: u64) -> Outcome {
    let assignment: Assignment = match assignment {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
            serde_json::from_str(&text).map_err(|e| Error::Invalid(format!("{path}: {e}")))?
        }
        None => match search_multicomplex(c, budget)? {
            SearchOutcome::Found { assignment } => assignment,
            other => return Ok((json!({ "search": other }), false)),
        },
    };
    let report = verify_conjecture_conditions(c, &assignment, None);
    let pure = stanley_purity_check(&assignment);
    let ok = report.local_clauses_hold();
    Ok((
        json!({ "assignment": assignment, "report": report, "pure": pure }),
        ok,
    ))
}

fn stanley(args: &StanleyArgs, large: bool) -> Outcome {
    if let Some(Signed(h)) = &args.o_sequence {
        let pure = is_pure_o_sequence(h, PureSearchBounds::default());
        return Ok((
            json!({ "h": h, "o_sequence": is_o_sequence(h), "pure": pure }),
            true,
        ));
    }
    let Some(file) = &args.file else {
        return Err(Error::Invalid("give a complex file or --o-sequence".into()));
    };
    let c = load(file, large)?;
    let a = args.a.unwrap_or_else(|| c.ground());
    if !a.is_subset(c.ground()) {
        return Err(Error::Invalid(format!("{a} is not inside the ground set")));
    }
    let dec = h_decomposition(&c, a)?;
    let admissible = is_admissible(&c, a);
    let clauses = admissibility_clauses(&c, a);
    let mut ok = dec.general_holds() && (!admissible || dec.refined_holds());
    let mut out = json!({
        "a": a,
        "admissible": admissible,
        "clauses": clauses,
        "decomposition": dec,
        "general_holds": dec.general_holds(),
        "refined_holds": dec.refined_holds(),
    });
    if clauses.exchange {
        let r = passive_splitting_unchecked(&c, a, SplitMode::OutsideA);
        ok &= r.holds;
        out["splitting_outside_a"] = to_value(&r);
    }
    if clauses.independence
        && crate::axioms::check_qe(&c).holds
        && crate::axioms::check_fbp(&c).holds
    {
        let r = passive_splitting_unchecked(&c, a, SplitMode::OutsideB0);
        ok &= r.holds;
        out["splitting_outside_b0"] = to_value(&r);
    }
    Ok((out, ok))
}

fn laplacian(c: &OrderedComplex, k: Option<isize>, tol: f64, require_integral: bool) -> Outcome {
    let reports = match k {
        Some(k) => vec![laplacian_spectrum(c, k, tol)?],
        None => integrality_survey(c, tol),
    };
    let integral = reports.iter().all(|r| r.integral);
    Ok((
        json!({ "spectra": reports, "integral": integral }),
        integral || !require_integral,
    ))
}
