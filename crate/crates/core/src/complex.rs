//! Ordered simplicial complexes and their structural operations.
//!
//! A complex is stored by its facets (bases) over the ground set `1..=n`,
//! ordered naturally. Facets are kept inclusion-maximal and sorted in
//! lexicographic order, so the first facet is always the lexicographically
//! smallest basis `B0`.
//!
//! Deletion means restriction to `E \ {e}`; contraction means the link. Both
//! come in a relabelling form (the new ground set is renumbered `1..=n-1`
//! order-preservingly) and a label-preserving form (the removed elements stay
//! in the ground set as loops). The label-preserving forms are what the
//! activity and class computations use internally.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polynomial::UnivariatePolynomial;
use crate::vertex_set::{VertexSet, MAX_ELEMENTS};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OrderedComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// Order-preserving embedding of two ground sets `1..=left` and `1..=right`
/// into `1..=left+right` with disjoint, covering images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Shuffle {
    left: Vec<usize>,
    right: Vec<usize>,
}

impl Shuffle {
    /// Builds a shuffle from the positions taken by the left ground set; the
    /// right ground set fills the remaining positions in order.
    pub fn from_left_positions(left: Vec<usize>, n_left: usize, n_right: usize) -> Result<Self> {
        let total = n_left + n_right;
        let mismatch = Error::ShuffleMismatch {
            left: n_left,
            right: n_right,
        };
        if left.len() != n_left
            || left.windows(2).any(|w| w[0] >= w[1])
            || left.iter().any(|&p| p == 0 || p > total)
        {
            return Err(mismatch);
        }
        let taken: HashSet<usize> = left.iter().copied().collect();
        let right = (1..=total).filter(|p| !taken.contains(p)).collect();
        Ok(Shuffle { left, right })
    }

    /// Left ground set first, then the right one.
    pub fn concatenate(n_left: usize, n_right: usize) -> Self {
        Shuffle {
            left: (1..=n_left).collect(),
            right: (n_left + 1..=n_left + n_right).collect(),
        }
    }

    /// Alternates left and right elements, starting with the left one.
    pub fn interleave(n_left: usize, n_right: usize) -> Self {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        let (mut i, mut j, mut pos) = (0, 0, 1);
        while i < n_left || j < n_right {
            if i < n_left && (i <= j || j == n_right) {
                left.push(pos);
                i += 1;
            } else {
                right.push(pos);
                j += 1;
            }
            pos += 1;
        }
        Shuffle { left, right }
    }

    pub fn left_positions(&self) -> &[usize] {
        &self.left
    }

    pub fn right_positions(&self) -> &[usize] {
        &self.right
    }

    pub fn len(&self) -> usize {
        self.left.len() + self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn map_left(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|e| self.left[e - 1]).collect()
    }

    fn map_right(&self, s: VertexSet) -> VertexSet {
        s.iter().map(|e| self.right[e - 1]).collect()
    }
}

/// Keeps the inclusion-maximal members of a family, sorted lexicographically.
pub(crate) fn maximal_sets(family: impl IntoIterator<Item = VertexSet>) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = family
        .into_iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    sets.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

impl OrderedComplex {
    /// Builds a complex from any generating family; only the inclusion-maximal
    /// members are stored.
    pub fn new(n: usize, facets: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(n));
        }
        let family: Vec<VertexSet> = facets.into_iter().collect();
        if family.is_empty() {
            return Err(Error::NoFacets);
        }
        let ground = VertexSet::full(n);
        for f in &family {
            if let Some(bad) = f.difference(ground).min() {
                return Err(Error::OutOfRange { vertex: bad, n });
            }
        }
        Ok(OrderedComplex {
            n,
            facets: maximal_sets(family),
        })
    }

    /// Convenience constructor from literal facet lists.
    pub fn from_lists<S: AsRef<[usize]>>(n: usize, facets: &[S]) -> Result<Self> {
        for f in facets {
            if let Some(&bad) = f.as_ref().iter().find(|&&e| e == 0 || e > n) {
                return Err(Error::OutOfRange { vertex: bad, n });
            }
        }
        Self::new(n, facets.iter().map(|f| VertexSet::from_slice(f.as_ref())))
    }

    /// The uniform matroid `U_{d,n}`.
    pub fn uniform(d: usize, n: usize) -> Self {
        assert!(d <= n && n <= MAX_ELEMENTS);
        let facets: Vec<VertexSet> = VertexSet::full(n).subsets_of_size(d).collect();
        OrderedComplex {
            n,
            facets: maximal_sets(facets),
        }
    }

    /// Ground set `{e}` with `e` a coloop.
    pub fn coloop() -> Self {
        OrderedComplex {
            n: 1,
            facets: vec![VertexSet::singleton(1)],
        }
    }

    /// Ground set `{e}` with `e` a loop.
    pub fn loop_complex() -> Self {
        OrderedComplex {
            n: 1,
            facets: vec![VertexSet::empty()],
        }
    }

    pub(crate) fn from_maximal_unchecked(n: usize, mut facets: Vec<VertexSet>) -> Self {
        facets.sort();
        facets.dedup();
        OrderedComplex { n, facets }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn bases(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn num_bases(&self) -> usize {
        self.facets.len()
    }

    pub fn is_basis(&self, b: VertexSet) -> bool {
        self.facets.binary_search(&b).is_ok()
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    pub fn rank(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn rank_of(&self, a: VertexSet) -> usize {
        self.facets
            .iter()
            .map(|f| f.intersection(a).len())
            .max()
            .unwrap_or(0)
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// All faces, ordered by size and then lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let mut faces: Vec<VertexSet> = self.face_set().into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        faces
    }

    pub fn face_set(&self) -> HashSet<VertexSet> {
        let mut set = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                set.insert(s);
            }
        }
        set
    }

    /// Inclusion-minimal non-faces.
    pub fn circuits(&self) -> Vec<VertexSet> {
        let faces = self.face_set();
        let ground = self.ground();
        let mut out = BTreeSet::new();
        for &f in &faces {
            for e in ground.difference(f) {
                let c = f.with(e);
                if faces.contains(&c) {
                    continue;
                }
                if f.iter().all(|x| faces.contains(&c.without(x))) {
                    out.insert(c);
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn vertices(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(VertexSet::empty(), |acc, f| acc.union(*f))
    }

    pub fn loops(&self) -> VertexSet {
        self.ground().difference(self.vertices())
    }

    pub fn coloops(&self) -> VertexSet {
        self.facets
            .iter()
            .fold(self.ground(), |acc, f| acc.intersection(*f))
    }

    /// Largest vertex that is not a coloop.
    pub fn largest_non_coloop_vertex(&self) -> Option<usize> {
        self.vertices().difference(self.coloops()).max()
    }

    fn check_subset(&self, a: VertexSet) -> Result<()> {
        match a.difference(self.ground()).min() {
            Some(bad) => Err(Error::OutOfRange {
                vertex: bad,
                n: self.n,
            }),
            None => Ok(()),
        }
    }

    /// Restriction to `a`, keeping the original labels; elements outside `a`
    /// remain in the ground set as loops.
    pub fn restrict_labeled(&self, a: VertexSet) -> Result<Self> {
        self.check_subset(a)?;
        Ok(OrderedComplex {
            n: self.n,
            facets: maximal_sets(self.facets.iter().map(|f| f.intersection(a))),
        })
    }

    /// Restriction to `a` with the ground set renumbered `1..=|a|`.
    pub fn restrict(&self, a: VertexSet) -> Result<Self> {
        let labeled = self.restrict_labeled(a)?;
        Ok(labeled.compress_ground(a))
    }

    fn compress_ground(&self, onto: VertexSet) -> Self {
        OrderedComplex::from_maximal_unchecked(
            onto.len(),
            self.facets.iter().map(|f| f.compress(onto)).collect(),
        )
    }

    /// Restriction to `E \ {e}`; `e` must not be a coloop.
    pub fn delete_element(&self, e: usize) -> Result<Self> {
        if e == 0 || e > self.n {
            return Err(Error::OutOfRange {
                vertex: e,
                n: self.n,
            });
        }
        if self.coloops().contains(e) {
            return Err(Error::DeleteColoop(e));
        }
        self.restrict(self.ground().without(e))
    }

    /// The link of a face, keeping labels (members of `i` become loops).
    pub fn link(&self, i: VertexSet) -> Result<Self> {
        if !self.is_face(i) {
            return Err(Error::NotAFace(i));
        }
        let family = self
            .facets
            .iter()
            .filter(|f| i.is_subset(**f))
            .map(|f| f.difference(i));
        Ok(OrderedComplex {
            n: self.n,
            facets: maximal_sets(family),
        })
    }

    /// Contraction of a vertex, renumbering `E \ {v}` to `1..=n-1`.
    pub fn contract_vertex(&self, v: usize) -> Result<Self> {
        if v == 0 || v > self.n {
            return Err(Error::OutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if self.loops().contains(v) {
            return Err(Error::ContractLoop(v));
        }
        self.contract_set(VertexSet::singleton(v))
    }

    /// Contraction of a face (iterated links), renumbering `E \ I`.
    pub fn contract_set(&self, i: VertexSet) -> Result<Self> {
        let link = self.link(i)?;
        Ok(link.compress_ground(self.ground().difference(i)))
    }

    pub fn join(&self, other: &OrderedComplex, shuffle: &Shuffle) -> Result<Self> {
        if shuffle.left.len() != self.n || shuffle.right.len() != other.n {
            return Err(Error::ShuffleMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                facets.push(shuffle.map_left(f).union(shuffle.map_right(g)));
            }
        }
        OrderedComplex::new(shuffle.len(), facets)
    }

    /// Connected sum gluing `B0'` onto `B0`; the remaining elements of the
    /// second ground set are appended after all of `E`.
    pub fn connected_sum(&self, other: &OrderedComplex) -> Result<Self> {
        let extra = other.n - other.facets[0].len();
        self.connected_sum_shuffled(other, &Shuffle::concatenate(self.n, extra))
    }

    /// Connected sum where `shuffle` places `E` (left) and `E' \ B0'` (right)
    /// in the merged ground set.
    pub fn connected_sum_shuffled(
        &self,
        other: &OrderedComplex,
        shuffle: &Shuffle,
    ) -> Result<Self> {
        let (r1, r2) = (self.rank(), other.rank());
        if r1 != r2 {
            return Err(Error::RankMismatch {
                left: r1,
                right: r2,
            });
        }
        let b0 = self.facets[0];
        let b0_other = other.facets[0];
        let rest = other.ground().difference(b0_other);
        if shuffle.left.len() != self.n || shuffle.right.len() != rest.len() {
            return Err(Error::ShuffleMismatch {
                left: self.n,
                right: rest.len(),
            });
        }
        let glued: Vec<usize> = b0.iter().collect();
        let map_other = |s: VertexSet| -> VertexSet {
            s.iter()
                .map(|e| {
                    if b0_other.contains(e) {
                        shuffle.left[glued[b0_other.below(e).len()] - 1]
                    } else {
                        shuffle.right[rest.below(e).len()]
                    }
                })
                .collect()
        };
        let facets = self
            .facets
            .iter()
            .map(|&f| shuffle.map_left(f))
            .chain(other.facets.iter().map(|&f| map_other(f)));
        OrderedComplex::new(shuffle.len(), facets)
    }

    /// Faces of size at most `k`.
    pub fn skeleton(&self, k: usize) -> Result<Self> {
        let rank = self.rank();
        if k > rank {
            return Err(Error::SkeletonOutOfRange { k, rank });
        }
        let mut family = Vec::new();
        for &f in &self.facets {
            if f.len() <= k {
                family.push(f);
            } else {
                family.extend(f.subsets_of_size(k));
            }
        }
        OrderedComplex::new(self.n, family)
    }

    /// Maps element `i` to `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::NotAPermutation(self.n));
        }
        let image: VertexSet = perm
            .iter()
            .copied()
            .filter(|&p| p >= 1 && p <= self.n)
            .collect();
        if image != self.ground() {
            return Err(Error::NotAPermutation(self.n));
        }
        Ok(OrderedComplex::from_maximal_unchecked(
            self.n,
            self.facets
                .iter()
                .map(|f| f.iter().map(|e| perm[e - 1]).collect())
                .collect(),
        ))
    }

    /// `B0`, the lexicographically smallest basis.
    pub fn lex_min_basis(&self) -> VertexSet {
        self.facets[0]
    }

    /// `B_{I,0}`: the smallest basis of the contraction by `i`, in original
    /// labels.
    pub fn lex_min_basis_of_contraction(&self, i: VertexSet) -> Result<VertexSet> {
        Ok(self.link(i)?.lex_min_basis())
    }

    /// `(f_0, ..., f_d)` with `f_j` the number of faces of size `j`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.rank() + 1];
        for s in self.face_set() {
            f[s.len()] += 1;
        }
        f
    }

    /// `h(x) = sum_j f_j x^j (1 - x)^(d - j)`.
    pub fn h_polynomial(&self) -> UnivariatePolynomial {
        h_from_f(&self.f_vector())
    }

    pub fn h_vector(&self) -> Vec<i64> {
        self.h_polynomial().to_vec_padded(self.rank() + 1)
    }
}

pub(crate) fn h_from_f(f: &[u64]) -> UnivariatePolynomial {
    let d = f.len() - 1;
    f.iter()
        .enumerate()
        .map(|(j, &fj)| {
            &UnivariatePolynomial::monomial(fj as i64, j)
                * &UnivariatePolynomial::one_minus_x_pow(d - j)
        })
        .sum()
}

/// On-disk form: `{"n": 4, "facets": [[1,2],[1,3]]}` with 1-based vertices.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
}

impl From<&OrderedComplex> for ComplexFile {
    fn from(c: &OrderedComplex) -> Self {
        ComplexFile {
            n: c.n,
            facets: c.facets.iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl TryFrom<ComplexFile> for OrderedComplex {
    type Error = Error;
    fn try_from(file: ComplexFile) -> Result<Self> {
        if file.n > MAX_ELEMENTS {
            return Err(Error::GroundSetTooLarge(file.n));
        }
        OrderedComplex::from_lists(file.n, &file.facets)
    }
}

impl OrderedComplex {
    pub fn from_json(text: &str) -> Result<Self> {
        let file: ComplexFile =
            serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ComplexFile::from(self)).expect("complex serializes")
    }
}

impl Serialize for OrderedComplex {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        ComplexFile::from(self).serialize(serializer)
    }
}
