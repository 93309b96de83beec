//! Exact integer polynomials in one and two variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    coeffs: Vec<i64>,
}

impl UnivariatePolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        UnivariatePolynomial { coeffs }
    }

    pub fn zero() -> Self {
        UnivariatePolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self::new(coeffs)
    }

    /// `(1 - x)^k`.
    pub fn one_minus_x_pow(k: usize) -> Self {
        let base = Self::new(vec![1, -1]);
        (0..k).fold(Self::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficients padded with zeros to `len` entries.
    pub fn to_vec_padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.coeffs.clone();
        if v.len() < len {
            v.resize(len, 0);
        }
        v
    }

    /// `x^r p(1/x)`; requires `r >= deg p`.
    pub fn reverse(&self, r: usize) -> Self {
        assert!(
            self.degree().is_none_or(|d| d <= r),
            "reverse degree below polynomial degree"
        );
        let mut out = vec![0; r + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[r - i] = c;
        }
        Self::new(out)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![0; k];
        out.extend_from_slice(&self.coeffs);
        Self::new(out)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn add(self, rhs: Self) -> UnivariatePolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        UnivariatePolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn sub(self, rhs: Self) -> UnivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;
    fn mul(self, rhs: Self) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(out)
    }
}

impl std::iter::Sum for UnivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

impl fmt::Debug for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| format_term(c, &[("x", i)]))
            .collect();
        write_terms(f, &terms)
    }
}

impl Serialize for UnivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter())
    }
}

/// Sparse bivariate polynomial keyed by `(x-degree, y-degree)`. Zero
/// coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), i64>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        BivariatePolynomial::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn monomial(coeff: i64, i: u32, j: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, coeff);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, coeff: i64) {
        let entry = self.terms.entry((i, j)).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: u32, j: u32) -> i64 {
        self.terms.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluates at ring values, reusing the ring's `+` and `*`.
    pub fn eval<R>(&self, x: &R, y: &R) -> R
    where
        R: Clone + num_like::RingLike,
    {
        let mut acc = R::zero();
        for (&(i, j), &c) in &self.terms {
            let term = R::from_i64(c).mul(&x.pow(i)).mul(&y.pow(j));
            acc = acc.add(&term);
        }
        acc
    }

    /// `p(x, y0)` as a univariate polynomial in `x`.
    pub fn specialize_y(&self, y0: i64) -> UnivariatePolynomial {
        let mut out = Vec::new();
        for (&(i, j), &c) in &self.terms {
            let i = i as usize;
            if out.len() <= i {
                out.resize(i + 1, 0);
            }
            out[i] += c * y0.pow(j);
        }
        UnivariatePolynomial::new(out)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: Self) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(i, j), &c) in &rhs.terms {
            out.add_term(i, j, c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: Self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(i, j), &a) in &self.terms {
            for (&(k, l), &b) in &rhs.terms {
                out.add_term(i + k, j + l, a * b);
            }
        }
        out
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), &c)| format_term(c, &[("x", i as usize), ("y", j as usize)]))
            .collect();
        write_terms(f, &terms)
    }
}

/// Serialized as `{"i,j": coeff}` with keys in sorted degree order.
impl Serialize for BivariatePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(
            self.terms
                .iter()
                .map(|(&(i, j), c)| (format!("{i},{j}"), c)),
        )
    }
}

fn format_term(c: i64, vars: &[(&str, usize)]) -> String {
    let mono: Vec<String> = vars
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| {
            if *e == 1 {
                v.to_string()
            } else {
                format!("{v}^{e}")
            }
        })
        .collect();
    let mono = mono.join("*");
    match (c, mono.is_empty()) {
        (_, true) => c.to_string(),
        (1, false) => mono,
        (-1, false) => format!("-{mono}"),
        _ => format!("{c}*{mono}"),
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[String]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (i, t) in terms.iter().enumerate() {
        if i == 0 {
            f.write_str(t)?;
        } else if let Some(rest) = t.strip_prefix('-') {
            write!(f, " - {rest}")?;
        } else {
            write!(f, " + {t}")?;
        }
    }
    Ok(())
}

/// Minimal ring interface used by Tutte–Grothendieck evaluations.
pub mod num_like {
    pub trait RingLike: Sized {
        fn zero() -> Self;
        fn one() -> Self;
        fn from_i64(v: i64) -> Self;
        fn add(&self, other: &Self) -> Self;
        fn mul(&self, other: &Self) -> Self;
        fn pow(&self, e: u32) -> Self {
            (0..e).fold(Self::one(), |acc, _| acc.mul(self))
        }
    }

    macro_rules! int_ring {
        ($($t:ty),*) => {$(
            impl RingLike for $t {
                fn zero() -> Self { 0 as $t }
                fn one() -> Self { 1 as $t }
                fn from_i64(v: i64) -> Self { v as $t }
                fn add(&self, other: &Self) -> Self { *self + *other }
                fn mul(&self, other: &Self) -> Self { *self * *other }
            }
        )*};
    }
    int_ring!(i64, i128, f64);

    impl RingLike for super::UnivariatePolynomial {
        fn zero() -> Self {
            Self::zero()
        }
        fn one() -> Self {
            Self::one()
        }
        fn from_i64(v: i64) -> Self {
            Self::monomial(v, 0)
        }
        fn add(&self, other: &Self) -> Self {
            self + other
        }
        fn mul(&self, other: &Self) -> Self {
            self * other
        }
    }

    impl RingLike for super::BivariatePolynomial {
        fn zero() -> Self {
            Self::zero()
        }
        fn one() -> Self {
            Self::one()
        }
        fn from_i64(v: i64) -> Self {
            Self::monomial(v, 0, 0)
        }
        fn add(&self, other: &Self) -> Self {
            self + other
        }
        fn mul(&self, other: &Self) -> Self {
            self * other
        }
    }
}
