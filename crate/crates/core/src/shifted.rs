//! Shifted complexes, partitions in a box, and the Durfee-square monomials.
//!
//! A `d`-subset `v_1 < ... < v_d` of `1..=n` corresponds to the partition
//! with parts `v_i - i`, read in decreasing order. Row `r` (1-indexed from the
//! largest part) belongs to the element `v_{d+1-r}`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::multicomplex::{Assignment, Monomial};
use crate::vertex_set::VertexSet;

/// A partition fitting in a `rows x cols` box. Parts are stored decreasing
/// with trailing zeros removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>, rows: usize, cols: usize) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.len() > rows || parts.first().is_some_and(|&p| p > cols) {
            return Err(Error::BoxViolation { parts, rows, cols });
        }
        Ok(Partition { parts, rows, cols })
    }

    pub fn empty(rows: usize, cols: usize) -> Self {
        Partition {
            parts: Vec::new(),
            rows,
            cols,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Part in row `r` (1-indexed), zero past the end.
    pub fn part(&self, r: usize) -> usize {
        if r == 0 {
            return usize::MAX;
        }
        self.parts.get(r - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn durfee(&self) -> usize {
        durfee(&self.parts)
    }

    pub fn contained_in(&self, other: &Partition) -> bool {
        (1..=self.length()).all(|r| self.part(r) <= other.part(r))
    }

    /// Partitions obtained by removing one corner box.
    pub fn lower_covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for r in 1..=self.length() {
            if self.part(r) > self.part(r + 1) {
                let mut parts = self.parts.clone();
                parts[r - 1] -= 1;
                out.push(Partition::new(parts, self.rows, self.cols).expect("still fits"));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}x{}", self.rows, self.cols)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Largest `k` with `parts[k-1] >= k`; `parts` must be decreasing.
pub fn durfee(parts: &[usize]) -> usize {
    parts
        .iter()
        .enumerate()
        .take_while(|&(i, &p)| p > i)
        .count()
}

pub fn basis_to_partition(b: VertexSet, d: usize, n: usize) -> Result<Partition> {
    if b.len() != d || b.max().is_some_and(|m| m > n) {
        let parts = b
            .iter()
            .enumerate()
            .map(|(i, v)| v.saturating_sub(i + 1))
            .rev()
            .collect();
        return Err(Error::BoxViolation {
            parts,
            rows: d,
            cols: n.saturating_sub(d),
        });
    }
    let parts = b
        .iter()
        .enumerate()
        .map(|(i, v)| v - (i + 1))
        .rev()
        .collect();
    Partition::new(parts, d, n - d)
}

pub fn partition_to_basis(lambda: &Partition) -> VertexSet {
    let d = lambda.rows;
    (1..=d).map(|i| lambda.part(d + 1 - i) + i).collect()
}

/// All partitions in a `rows x cols` box, in lex order of part lists.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(
        rows: usize,
        cols: usize,
        bound: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if prefix.len() == rows {
            out.push(Partition::new(prefix.clone(), rows, cols).expect("fits"));
            return;
        }
        for p in 0..=bound {
            prefix.push(p);
            rec(rows, cols, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, cols, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Durfee-square recursion. Variables are elements of `1..=n`.
pub fn monomial_inductive(lambda: &Partition) -> Monomial {
    let d = lambda.rows;
    let k = lambda.durfee();
    if k == 0 {
        return Monomial::one();
    }
    // Durfee rows 1..=k carry elements v_d, ..., v_{d-k+1}; i_j ascending.
    let basis: Vec<usize> = partition_to_basis(lambda).to_vec();
    let targets = &basis[d - k..];
    let rest = Partition::new(lambda.parts.get(k..).unwrap_or(&[]).to_vec(), d - k, k)
        .expect("Dur(λ) fits in (d-k) x k");
    let inner = monomial_inductive(&rest);
    // Inner variables beyond its own first basis are d-k+1..=d.
    Monomial::from_exponents((1..=k).map(|j| (targets[j - 1], inner.exponent(d - k + j) + 1)))
}

/// Mirror construction: a ray leaves each Durfee row, and its exponent is the
/// number of left-wall incidences before it exits through the bottom.
pub fn monomial_bouncing_light(lambda: &Partition) -> Monomial {
    let d = lambda.rows;
    let k = lambda.durfee();
    let basis: Vec<usize> = partition_to_basis(lambda).to_vec();
    Monomial::from_exponents((1..=k).map(|r| {
        let mut bounces = 1u32;
        let mut cur = r;
        let mut t = 1;
        loop {
            let row = cur + t;
            let part = lambda.part(row);
            if part == t {
                bounces += 1;
                cur = row;
                t = 1;
            } else if part < t {
                break;
            } else {
                t += 1;
            }
        }
        (basis[d - r], bounces)
    }))
}

/// Replacing any basis element by a smaller non-member gives a basis.
pub fn is_shifted(c: &OrderedComplex) -> bool {
    if !c.is_pure() {
        return false;
    }
    c.bases().iter().all(|&b| {
        b.iter().all(|j| {
            c.ground()
                .below(j)
                .difference(b)
                .iter()
                .all(|i| c.is_basis(b.without(j).with(i)))
        })
    })
}

/// The shifted complex whose bases correspond to an order ideal of
/// partitions in the `d x (n-d)` box.
pub fn shifted_from_ideal(d: usize, n: usize, partitions: &[Partition]) -> Result<OrderedComplex> {
    if partitions.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let set: BTreeSet<&Partition> = partitions.iter().collect();
    for p in partitions {
        if p.rows != d || p.cols + d != n {
            return Err(Error::BoxViolation {
                parts: p.parts.clone(),
                rows: d,
                cols: n.saturating_sub(d),
            });
        }
        if let Some(missing) = p.lower_covers().into_iter().find(|q| !set.contains(q)) {
            return Err(Error::NotAnIdeal(format!(
                "{p} is present but {missing} is not"
            )));
        }
    }
    OrderedComplex::new(n, partitions.iter().map(partition_to_basis))
}

/// Durfee-square monomial for every basis of a shifted complex.
pub fn multicomplex_of_shifted(c: &OrderedComplex) -> Result<Assignment> {
    if !is_shifted(c) {
        return Err(Error::NotShifted);
    }
    let (d, n) = (c.rank(), c.n());
    c.bases()
        .iter()
        .map(|&b| Ok((b, monomial_inductive(&basis_to_partition(b, d, n)?))))
        .collect()
}

/// Family function for label-preserving restrictions of shifted complexes:
/// compress onto the non-loop elements, build, then expand variables back.
pub fn shifted_family(c: &OrderedComplex) -> Option<Assignment> {
    let support = c.vertices();
    let compressed = c.restrict(support).ok()?;
    let inner = multicomplex_of_shifted(&compressed).ok()?;
    let names = support.to_vec();
    Some(
        inner
            .iter()
            .map(|(b, m)| (b.expand(support), m.map_variables(|v| names[v - 1])))
            .collect(),
    )
}
