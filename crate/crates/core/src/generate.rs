//! Seeded random instances: shifted complexes from box ideals, matroids
//! represented over a prime field, and Gale order ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::OrderedComplex;
use crate::error::{Error, Result};
use crate::shifted::{partitions_in_box, shifted_from_ideal, Partition};
use crate::vertex_set::VertexSet;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Down-closure in Young's lattice of `generators`, sorted.
pub fn young_ideal(generators: &[Partition]) -> Vec<Partition> {
    let mut seen: Vec<Partition> = Vec::new();
    let mut stack: Vec<Partition> = generators.to_vec();
    while let Some(p) = stack.pop() {
        if seen.contains(&p) {
            continue;
        }
        stack.extend(p.lower_covers());
        seen.push(p);
    }
    seen.sort();
    seen
}

/// An order ideal of the `rows x cols` box generated by up to `max_generators`
/// uniformly chosen partitions. Always contains the empty partition.
pub fn random_box_ideal<R: Rng>(
    rng: &mut R,
    rows: usize,
    cols: usize,
    max_generators: usize,
) -> Vec<Partition> {
    let all = partitions_in_box(rows, cols);
    let k = rng.gen_range(1..=max_generators.max(1));
    let generators: Vec<Partition> = (0..k)
        .map(|_| all.choose(rng).expect("box is non-empty").clone())
        .collect();
    young_ideal(&generators)
}

/// A shifted complex on `2 ≤ n ≤ max_n` elements with a random rank and a
/// random box ideal.
pub fn random_shifted_complex<R: Rng>(rng: &mut R, max_n: usize) -> Result<OrderedComplex> {
    if !(2..=64).contains(&max_n) {
        return Err(Error::Invalid(format!(
            "max_n = {max_n} must lie in 2..=64"
        )));
    }
    let n = rng.gen_range(2..=max_n);
    let d = rng.gen_range(1..n);
    let ideal = random_box_ideal(rng, d, n - d, 4);
    shifted_from_ideal(d, n, &ideal)
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn rank_mod_p(rows: &[Vec<u64>], cols: &[usize], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| cols.iter().map(|&j| r[j]).collect())
        .collect();
    let width = cols.len();
    let mut rank = 0;
    for col in 0..width {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inverse_mod(m[rank][col], p);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = row[col] * inv % p;
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *x = (*x + p * p - factor * y) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn is_small_prime(p: u64) -> bool {
    (2..1 << 16).contains(&p)
        && (2..p)
            .take_while(|q| q * q <= p)
            .all(|q| !p.is_multiple_of(q))
}

/// The column matroid of a uniformly random `rank x n` matrix over GF(p),
/// redrawn until it has full row rank.
pub fn random_gf_matroid<R: Rng>(
    rng: &mut R,
    p: u64,
    rank: usize,
    n: usize,
) -> Result<OrderedComplex> {
    if !is_small_prime(p) {
        return Err(Error::Invalid(format!("{p} is not a prime below 2^16")));
    }
    if rank == 0 || rank > n || n > 16 {
        return Err(Error::Invalid(format!(
            "need 1 <= rank <= n <= 16, got rank {rank}, n {n}"
        )));
    }
    let all: Vec<usize> = (0..n).collect();
    loop {
        let m: Vec<Vec<u64>> = (0..rank)
            .map(|_| (0..n).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if rank_mod_p(&m, &all, p) < rank {
            continue;
        }
        let bases = VertexSet::full(n)
            .subsets_of_size(rank)
            .filter(|b| {
                let cols: Vec<usize> = b.iter().map(|e| e - 1).collect();
                rank_mod_p(&m, &cols, p) == rank
            })
            .collect::<Vec<_>>();
        return OrderedComplex::new(n, bases);
    }
}

/// A Gale order ideal generated by up to `max_generators` random bases.
/// Lex-sorted, never empty.
pub fn random_gale_ideal<R: Rng>(
    rng: &mut R,
    c: &OrderedComplex,
    max_generators: usize,
) -> Vec<VertexSet> {
    let k = rng.gen_range(1..=max_generators.max(1));
    let generators: Vec<VertexSet> = (0..k)
        .map(|_| *c.bases().choose(rng).expect("complex has a basis"))
        .collect();
    let mut ideal: Vec<VertexSet> = c
        .bases()
        .iter()
        .copied()
        .filter(|b| generators.iter().any(|g| b.gale_le(*g)))
        .collect();
    ideal.sort();
    ideal
}

/// A uniformly random permutation of `1..=n`, in the form `relabel` takes.
pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    perm.shuffle(rng);
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::{check_qe, check_qi, is_matroid};
    use crate::posets::{gale_poset, is_order_ideal};
    use crate::shifted::is_shifted;

    #[test]
    fn seeded_streams_repeat() {
        let a = random_shifted_complex(&mut rng(7), 10).unwrap();
        let b = random_shifted_complex(&mut rng(7), 10).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn shifted_samples_are_shifted() {
        let mut r = rng(1);
        for _ in 0..40 {
            let c = random_shifted_complex(&mut r, 9).unwrap();
            assert!(is_shifted(&c), "{:?}", c.facets());
        }
    }

    #[test]
    fn young_ideal_of_a_square() {
        let ideal = young_ideal(&[Partition::new(vec![2, 2], 2, 2).unwrap()]);
        assert_eq!(ideal.len(), 6);
    }

    #[test]
    fn gf_matroids_are_matroids() {
        let mut r = rng(2);
        for _ in 0..20 {
            let rank = r.gen_range(1..=3);
            let n = r.gen_range(rank..=7);
            let m = random_gf_matroid(&mut r, 3, rank, n).unwrap();
            assert_eq!(m.rank(), rank);
            assert!(is_matroid(&m).holds, "{:?}", m.facets());
        }
        assert!(random_gf_matroid(&mut r, 4, 2, 4).is_err());
        assert!(random_gf_matroid(&mut r, 5, 3, 2).is_err());
    }

    #[test]
    fn rank_over_gf2() {
        let m = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(rank_mod_p(&m, &[0, 1, 2], 2), 2);
        assert_eq!(rank_mod_p(&m, &[2], 2), 1);
        let dependent = vec![vec![1, 1], vec![1, 1]];
        assert_eq!(rank_mod_p(&dependent, &[0, 1], 2), 1);
    }

    #[test]
    fn gale_ideals_are_ideals() {
        let mut r = rng(3);
        let u = OrderedComplex::uniform(3, 6);
        let gale = gale_poset(&u).unwrap();
        for _ in 0..20 {
            let ideal = random_gale_ideal(&mut r, &u, 3);
            assert!(ideal.contains(&u.lex_min_basis()));
            assert!(is_order_ideal(&gale, &ideal));
        }
        assert!(check_qe(&u).holds && check_qi(&u).holds);
    }
}
