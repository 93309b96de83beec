//! Brute-force reference implementations. Nothing here calls into the other
//! modules' algorithms: complexes are read through `n()` and `facets()` only
//! and everything is recomputed from sorted vertex lists.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

type Set = Vec<usize>;

/// A complex as plain sorted lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveComplex {
    pub n: usize,
    pub facets: BTreeSet<Set>,
}

impl From<&OrderedComplex> for NaiveComplex {
    fn from(c: &OrderedComplex) -> Self {
        NaiveComplex {
            n: c.n(),
            facets: c.facets().iter().map(|f| f.to_vec()).collect(),
        }
    }
}

fn subsets_of(s: &[usize]) -> Vec<Set> {
    let mut out = vec![Vec::new()];
    for &x in s {
        let more: Vec<Set> = out
            .iter()
            .map(|t| {
                let mut u = t.clone();
                u.push(x);
                u
            })
            .collect();
        out.extend(more);
    }
    for t in &mut out {
        t.sort_unstable();
    }
    out
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

impl NaiveComplex {
    pub fn faces(&self) -> BTreeSet<Set> {
        self.facets.iter().flat_map(|f| subsets_of(f)).collect()
    }

    pub fn is_face(&self, s: &[usize]) -> bool {
        self.facets.iter().any(|f| is_subset(s, f))
    }

    fn dimension_size(&self) -> usize {
        self.facets.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Facets, sorted as lists (lexicographic).
    pub fn bases(&self) -> Vec<Set> {
        self.facets.iter().cloned().collect()
    }

    pub fn circuits(&self) -> Vec<Set> {
        let ground: Set = (1..=self.n).collect();
        let mut out: Vec<Set> = subsets_of(&ground)
            .into_iter()
            .filter(|s| {
                !self.is_face(s)
                    && s.iter().all(|&x| {
                        let smaller: Set = s.iter().copied().filter(|&y| y != x).collect();
                        self.is_face(&smaller)
                    })
            })
            .collect();
        out.sort();
        out
    }

    pub fn f_vector(&self) -> Vec<u64> {
        let d = self.dimension_size();
        let mut f = vec![0u64; d + 1];
        for s in self.faces() {
            f[s.len()] += 1;
        }
        f
    }

    /// `h_k = sum_i (-1)^(k-i) C(d-i, k-i) f_i` with `f_i` counting faces of
    /// size `i`.
    pub fn h_vector(&self) -> Vec<i64> {
        let f = self.f_vector();
        let d = f.len() - 1;
        (0..=d)
            .map(|k| {
                (0..=k)
                    .map(|i| {
                        let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                        sign * choose(d - i, k - i) as i64 * f[i] as i64
                    })
                    .sum()
            })
            .collect()
    }
}

fn choose(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r = 1u64;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// Activities straight from the definitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveActivity {
    pub ia: Set,
    pub ip: Set,
    pub ea: Set,
    pub ep: Set,
}

/// `b` is internally active when `B` is the lex-least basis containing
/// `B \ b`; `e` is externally active when it is the minimum of a circuit
/// inside `B + e`.
pub fn activity_by_definition(c: &NaiveComplex, basis: &[usize]) -> NaiveActivity {
    let bases = c.bases();
    let circuits = c.circuits();
    let mut ia = Vec::new();
    let mut ip = Vec::new();
    for &b in basis {
        let rest: Set = basis.iter().copied().filter(|&x| x != b).collect();
        let least = bases
            .iter()
            .filter(|bb| is_subset(&rest, bb))
            .min()
            .expect("basis contains rest");
        if least.as_slice() == basis {
            ia.push(b);
        } else {
            ip.push(b);
        }
    }
    let mut ea = Vec::new();
    let mut ep = Vec::new();
    for e in (1..=c.n).filter(|e| !basis.contains(e)) {
        let mut with: Set = basis.to_vec();
        with.push(e);
        let active = circuits
            .iter()
            .any(|circ| is_subset(circ, &with) && circ.contains(&e) && circ[0] == e);
        if active {
            ea.push(e);
        } else {
            ep.push(e);
        }
    }
    NaiveActivity { ia, ip, ea, ep }
}

/// `sum_B x^|IA| y^|EA|` as a coefficient table.
pub fn tutte_by_activities(c: &NaiveComplex) -> BTreeMap<(u32, u32), i64> {
    let mut t = BTreeMap::new();
    for b in c.bases() {
        let a = activity_by_definition(c, &b);
        *t.entry((a.ia.len() as u32, a.ea.len() as u32)).or_insert(0) += 1;
    }
    t
}

/// Componentwise comparison of equal-size sorted lists.
pub fn gale_leq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Relation matrix of the Gale order on bases, in lexicographic basis order.
pub fn gale_relation(c: &NaiveComplex) -> Vec<Vec<bool>> {
    let bases = c.bases();
    bases
        .iter()
        .map(|a| bases.iter().map(|b| gale_leq(a, b)).collect())
        .collect()
}

/// Relation matrix of containment of internally passive sets.
pub fn int_relation(c: &NaiveComplex) -> Vec<Vec<bool>> {
    let bases = c.bases();
    let ips: Vec<Set> = bases
        .iter()
        .map(|b| activity_by_definition(c, b).ip)
        .collect();
    ips.iter()
        .map(|a| ips.iter().map(|b| is_subset(a, b)).collect())
        .collect()
}

fn unordered_exchange(bases: &BTreeSet<Set>) -> bool {
    bases.iter().all(|b1| {
        bases.iter().all(|b2| {
            b1.iter().filter(|e| !b2.contains(e)).all(|&e| {
                b2.iter().filter(|f| !b1.contains(f)).any(|&f| {
                    let mut s: Set = b1.iter().copied().filter(|&x| x != e).collect();
                    s.push(f);
                    s.sort_unstable();
                    bases.contains(&s)
                })
            })
        })
    })
}

pub fn is_matroid(c: &NaiveComplex) -> bool {
    let sizes: BTreeSet<usize> = c.facets.iter().map(Vec::len).collect();
    sizes.len() == 1 && unordered_exchange(&c.facets)
}

fn rank_of(c: &NaiveComplex, a: &[usize]) -> usize {
    c.facets
        .iter()
        .map(|f| f.iter().filter(|x| a.contains(x)).count())
        .max()
        .unwrap_or(0)
}

/// `(z - 1)^k`, constant term first.
fn minus_one_power(k: usize) -> Vec<i64> {
    (0..=k)
        .map(|i| choose(k, i) as i64 * if (k - i).is_multiple_of(2) { 1 } else { -1 })
        .collect()
}

/// `sum_A (x-1)^(r - r(A)) (y-1)^(|A| - r(A))`, matroids only.
pub fn corank_nullity_tutte(c: &NaiveComplex) -> Result<BTreeMap<(u32, u32), i64>> {
    if !is_matroid(c) {
        return Err(Error::Precondition("corank-nullity needs a matroid".into()));
    }
    let r = c.dimension_size();
    let ground: Set = (1..=c.n).collect();
    let mut t: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    for a in subsets_of(&ground) {
        let ra = rank_of(c, &a);
        let px = minus_one_power(r - ra);
        let py = minus_one_power(a.len() - ra);
        for (i, &cx) in px.iter().enumerate() {
            for (j, &cy) in py.iter().enumerate() {
                *t.entry((i as u32, j as u32)).or_insert(0) += cx * cy;
            }
        }
    }
    t.retain(|_, v| *v != 0);
    Ok(t)
}

/// Faces containing no circuit-minus-its-minimum.
pub fn nbc_faces(c: &NaiveComplex) -> BTreeSet<Set> {
    let broken: Vec<Set> = c
        .circuits()
        .into_iter()
        .map(|circ| circ[1..].to_vec())
        .collect();
    c.faces()
        .into_iter()
        .filter(|f| !broken.iter().any(|b| is_subset(b, f)))
        .collect()
}

/// `h` of the nbc faces taken as a complex of the same rank.
pub fn nbc_h_vector(c: &NaiveComplex) -> Vec<i64> {
    let faces = nbc_faces(c);
    let maximal: BTreeSet<Set> = faces
        .iter()
        .filter(|f| !faces.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
        .cloned()
        .collect();
    NaiveComplex {
        n: c.n,
        facets: maximal,
    }
    .h_vector()
}

/// Largest basis count accepted by [`brute_shelling_exists`].
pub const SHELLING_BOUND: usize = 12;

/// Exhaustive search for a shelling order, as a dynamic program over
/// subsets of bases.
pub fn brute_shelling_exists(c: &NaiveComplex) -> Result<bool> {
    let bases = c.bases();
    let m = bases.len();
    if m > SHELLING_BOUND {
        return Err(Error::BoundExceeded(format!(
            "{m} bases exceed the shelling bound {SHELLING_BOUND}"
        )));
    }
    let d = c.dimension_size();
    if bases.iter().any(|b| b.len() != d) {
        return Err(Error::NotPure);
    }
    // attaches(j, S): B_j meets the complex of S in a pure codimension-one
    // complex.
    let attaches = |j: usize, s: usize| -> bool {
        if s == 0 {
            return true;
        }
        let meets: Vec<Set> = (0..m)
            .filter(|&i| s & (1 << i) != 0)
            .map(|i| {
                bases[j]
                    .iter()
                    .copied()
                    .filter(|x| bases[i].contains(x))
                    .collect()
            })
            .collect();
        meets
            .iter()
            .all(|x| x.len() + 1 == d || meets.iter().any(|y| y.len() + 1 == d && is_subset(x, y)))
    };
    let mut ok = vec![false; 1 << m];
    ok[0] = true;
    for s in 1usize..(1 << m) {
        ok[s] =
            (0..m).any(|j| s & (1 << j) != 0 && ok[s & !(1 << j)] && attaches(j, s & !(1 << j)));
    }
    Ok(ok[(1 << m) - 1])
}

/// Default ground-set bound for enumeration.
pub const ENUMERATION_BOUND: usize = 5;

fn bound_check(n: usize, allow_large: bool) -> Result<()> {
    if n > ENUMERATION_BOUND && !allow_large {
        return Err(Error::BoundExceeded(format!(
            "n = {n} exceeds the enumeration bound {ENUMERATION_BOUND}"
        )));
    }
    Ok(())
}

fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .collect()
}

fn mask_to_set(m: u32) -> VertexSet {
    VertexSet::from_bits(m as u64)
}

fn to_complex(n: usize, family: &[u32]) -> OrderedComplex {
    OrderedComplex::new(n, family.iter().map(|&m| mask_to_set(m))).expect("valid family")
}

/// Every pure rank-`d` complex on `1..=n`, labels distinguished.
pub fn enumerate_labeled_pure_complexes(
    n: usize,
    d: usize,
    allow_large: bool,
) -> Result<Vec<OrderedComplex>> {
    bound_check(n, allow_large)?;
    let cands = k_subsets(n, d);
    if cands.len() > 20 {
        return Err(Error::BoundExceeded(format!(
            "{} candidate facets",
            cands.len()
        )));
    }
    Ok((1u64..(1 << cands.len()))
        .map(|pick| {
            let family: Vec<u32> = (0..cands.len())
                .filter(|i| pick & (1 << i) != 0)
                .map(|i| cands[i])
                .collect();
            to_complex(n, &family)
        })
        .collect())
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            rec(k + 1, p, out);
            p.swap(k, i);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

fn permute_mask(m: u32, perm: &[usize]) -> u32 {
    let mut out = 0;
    for (i, &t) in perm.iter().enumerate() {
        if m & (1 << i) != 0 {
            out |= 1 << t;
        }
    }
    out
}

fn canonical(family: &[u32], perms: &[Vec<usize>]) -> Vec<u32> {
    perms
        .iter()
        .map(|p| {
            let mut f: Vec<u32> = family.iter().map(|&m| permute_mask(m, p)).collect();
            f.sort_unstable();
            f
        })
        .min()
        .expect("at least one permutation")
}

/// One representative per relabeling class of pure rank-`d` complexes on
/// `1..=n`.
pub fn enumerate_pure_complexes(
    n: usize,
    d: usize,
    allow_large: bool,
) -> Result<Vec<OrderedComplex>> {
    bound_check(n, allow_large)?;
    let cands = k_subsets(n, d);
    if cands.len() > 20 {
        return Err(Error::BoundExceeded(format!(
            "{} candidate facets",
            cands.len()
        )));
    }
    let perms = permutations(n);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for pick in 1u64..(1 << cands.len()) {
        let family: Vec<u32> = (0..cands.len())
            .filter(|i| pick & (1 << i) != 0)
            .map(|i| cands[i])
            .collect();
        let key = canonical(&family, &perms);
        if seen.insert(key.clone()) {
            out.push(to_complex(n, &key));
        }
    }
    Ok(out)
}

fn mask_exchange(bases: &HashSet<u32>) -> bool {
    bases.iter().all(|&b1| {
        bases.iter().all(|&b2| {
            let only1 = b1 & !b2;
            let only2 = b2 & !b1;
            (0..32).filter(|e| only1 & (1 << e) != 0).all(|e| {
                (0..32)
                    .filter(|f| only2 & (1 << f) != 0)
                    .any(|f| bases.contains(&((b1 & !(1 << e)) | (1 << f))))
            })
        })
    })
}

/// Matroids on `1..=n` of rank at most `max_rank`, one per isomorphism
/// class, built by single-element extensions.
pub fn enumerate_matroids(n: usize, max_rank: usize) -> Result<Vec<OrderedComplex>> {
    if n > 7 || max_rank > 3 {
        return Err(Error::BoundExceeded(format!(
            "matroid enumeration is limited to n <= 7, rank <= 3 (got {n}, {max_rank})"
        )));
    }
    // classes[r] on the current ground size k, as canonical base families.
    let mut classes: Vec<Vec<Vec<u32>>> = vec![vec![vec![0]]];
    classes.resize(max_rank + 1, Vec::new());
    for k in 0..n {
        let perms = permutations(k + 1);
        let new_elem = 1u32 << k;
        let mut next: Vec<Vec<Vec<u32>>> = vec![Vec::new(); max_rank + 1];
        let mut seen: Vec<HashSet<Vec<u32>>> = vec![HashSet::new(); max_rank + 1];
        for r in 0..=max_rank {
            for family in &classes[r] {
                // New element is not a coloop: same rank, extra bases through it.
                let extra: Vec<u32> = k_subsets(k, r.saturating_sub(1))
                    .into_iter()
                    .map(|t| t | new_elem)
                    .collect();
                let extra = if r == 0 { Vec::new() } else { extra };
                for pick in 0u64..(1 << extra.len()) {
                    let mut bases: HashSet<u32> = family.iter().copied().collect();
                    bases.extend(
                        (0..extra.len())
                            .filter(|i| pick & (1 << i) != 0)
                            .map(|i| extra[i]),
                    );
                    if mask_exchange(&bases) {
                        let v: Vec<u32> = bases.into_iter().collect();
                        let key = canonical(&v, &perms);
                        if seen[r].insert(key.clone()) {
                            next[r].push(key);
                        }
                    }
                }
                // New element is a coloop.
                if r < max_rank {
                    let v: Vec<u32> = family.iter().map(|&b| b | new_elem).collect();
                    let key = canonical(&v, &perms);
                    if seen[r + 1].insert(key.clone()) {
                        next[r + 1].push(key);
                    }
                }
            }
        }
        classes = next;
    }
    Ok(classes
        .iter()
        .flatten()
        .map(|family| to_complex(n, family))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(n: usize, facets: &[&[usize]]) -> NaiveComplex {
        NaiveComplex {
            n,
            facets: facets.iter().map(|f| f.to_vec()).collect(),
        }
    }

    fn u24() -> NaiveComplex {
        naive(4, &[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]])
    }

    #[test]
    fn uniform_tutte_by_corank_nullity() {
        let t = corank_nullity_tutte(&u24()).unwrap();
        let expected: BTreeMap<(u32, u32), i64> =
            [((2, 0), 1), ((1, 0), 2), ((0, 1), 2), ((0, 2), 1)].into();
        assert_eq!(t, expected);
        assert_eq!(tutte_by_activities(&u24()), expected);
        let coloop = naive(1, &[&[1]]);
        assert_eq!(corank_nullity_tutte(&coloop).unwrap(), [((1, 0), 1)].into());
        let u12 = naive(2, &[&[1], &[2]]);
        assert_eq!(
            corank_nullity_tutte(&u12).unwrap(),
            [((1, 0), 1), ((0, 1), 1)].into()
        );
        assert!(corank_nullity_tutte(&naive(4, &[&[1, 2], &[3, 4]])).is_err());
    }

    #[test]
    fn uniform_activities_by_definition() {
        let a = activity_by_definition(&u24(), &[2, 4]);
        assert_eq!(a.ia, Vec::<usize>::new());
        assert_eq!(a.ip, vec![2, 4]);
        assert_eq!(a.ea, vec![1]);
        assert_eq!(a.ep, vec![3]);
        let single = naive(3, &[&[1, 2]]);
        let a = activity_by_definition(&single, &[1, 2]);
        assert_eq!(a.ia, vec![1, 2]);
        // A loop is its own circuit, hence externally active.
        assert_eq!(a.ea, vec![3]);
    }

    #[test]
    fn h_vectors() {
        assert_eq!(u24().h_vector(), vec![1, 2, 3]);
        assert_eq!(naive(3, &[&[1, 2]]).h_vector(), vec![1, 0, 0]);
        assert_eq!(
            u24().circuits(),
            vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]
        );
    }

    #[test]
    fn shelling_search() {
        assert!(brute_shelling_exists(&u24()).unwrap());
        assert!(!brute_shelling_exists(&naive(4, &[&[1, 2], &[3, 4]])).unwrap());
        assert!(brute_shelling_exists(&naive(2, &[&[1, 2]])).unwrap());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_pure_complexes(3, 3, false).unwrap().len(), 1);
        // Nonempty sets of edges on 3 labeled vertices, up to relabeling:
        // one edge, a path, a triangle.
        assert_eq!(enumerate_pure_complexes(3, 2, false).unwrap().len(), 3);
        // Graphs on 4 vertices with at least one edge, up to isomorphism.
        assert_eq!(enumerate_pure_complexes(4, 2, false).unwrap().len(), 10);
        assert_eq!(
            enumerate_labeled_pure_complexes(3, 2, false).unwrap().len(),
            7
        );
        assert!(enumerate_pure_complexes(6, 3, false).is_err());
    }

    #[test]
    fn matroid_counts() {
        // Rank-1 matroids on 3 elements: 1, 2 or 3 non-loops.
        let all = enumerate_matroids(3, 1).unwrap();
        let rank1 = all.iter().filter(|m| m.rank() == 1).count();
        assert_eq!(rank1, 3);
        // Matroids on 4 elements of rank at most 2, up to isomorphism.
        let m4 = enumerate_matroids(4, 2).unwrap();
        assert!(m4.iter().all(|m| is_matroid(&NaiveComplex::from(m))));
        let by_rank: Vec<usize> = (0..=2)
            .map(|r| m4.iter().filter(|m| m.rank() == r).count())
            .collect();
        assert_eq!(by_rank, vec![1, 4, 7]);
    }
}
