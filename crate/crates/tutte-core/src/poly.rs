//! Sparse exact polynomials: bivariate with nonnegative coefficients (the
//! Tutte polynomial itself) and univariate with signed coefficients (its
//! one-variable specializations and formula outputs).
//!
//! The text rendering is the interchange format: one line per nonzero term,
//! `<i> <j> <coefficient>` sorted lexicographically ascending by `(i, j)`
//! (univariate: `<degree> <coefficient>`).

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// A polynomial in `x` and `y` with nonnegative integer coefficients,
/// stored sparsely: no zero coefficient is ever kept.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BivariatePolynomial {
    coeffs: BTreeMap<(usize, usize), BigUint>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, BigUint::one());
        p
    }

    /// Single term `x^i y^j`.
    pub fn monomial(i: usize, j: usize) -> Self {
        let mut p = Self::default();
        p.add_term(i, j, BigUint::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (usize, usize, u64)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (i, j, c) in terms {
            p.add_term(i, j, BigUint::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: BigUint) {
        if c.is_zero() {
            return;
        }
        *self.coeffs.entry((i, j)).or_insert_with(BigUint::zero) += c;
    }

    pub fn add_assign(&mut self, other: &BivariatePolynomial) {
        for (&(i, j), c) in &other.coeffs {
            self.add_term(i, j, c.clone());
        }
    }

    /// Coefficient of `x^i y^j` (zero if absent).
    pub fn coeff(&self, i: usize, j: usize) -> BigUint {
        self.coeffs.get(&(i, j)).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Nonzero terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> {
        self.coeffs.iter().map(|(&(i, j), c)| (i, j, c))
    }

    /// Multiplies by `x^i y^j`.
    pub fn shift(&self, i: usize, j: usize) -> BivariatePolynomial {
        let coeffs = self.coeffs.iter().map(|(&(a, b), c)| ((a + i, b + j), c.clone())).collect();
        BivariatePolynomial { coeffs }
    }

    /// Swaps the variables: `p(x, y)` becomes `p(y, x)`.
    pub fn swap_variables(&self) -> BivariatePolynomial {
        let coeffs = self.coeffs.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect();
        BivariatePolynomial { coeffs }
    }

    /// Substitutes `x = 1`, leaving a polynomial in `y`.
    pub fn specialize_x_at_1(&self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::default();
        for (&(_, j), c) in &self.coeffs {
            out.add_term(j, BigInt::from(c.clone()));
        }
        out
    }

    /// Substitutes `y = 1`, leaving a polynomial in `x`.
    pub fn specialize_y_at_1(&self) -> UnivariatePolynomial {
        let mut out = UnivariatePolynomial::default();
        for (&(i, _), c) in &self.coeffs {
            out.add_term(i, BigInt::from(c.clone()));
        }
        out
    }

    /// Exact evaluation at nonnegative integers.
    pub fn evaluate(&self, x: &BigUint, y: &BigUint) -> BigUint {
        let mut total = BigUint::zero();
        for (&(i, j), c) in &self.coeffs {
            total += c * x.pow(i as u32) * y.pow(j as u32);
        }
        total
    }

    /// Sum of all coefficients, i.e. the value at `(1, 1)`.
    pub fn coefficient_sum(&self) -> BigUint {
        self.coeffs.values().sum()
    }

    /// Interchange rendering: `<i> <j> <coeff>` per term, ascending `(i, j)`.
    pub fn term_lines(&self) -> String {
        let mut out = String::new();
        for (&(i, j), c) in &self.coeffs {
            let _ = writeln!(out, "{i} {j} {c}");
        }
        out
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Human form, highest `x` powers first: `x^2 + x + y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(i, j), c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c_is_one = c.is_one();
            if !c_is_one || (i == 0 && j == 0) {
                write!(f, "{c}")?;
            }
            for (var, p) in [("x", i), ("y", j)] {
                match p {
                    0 => {}
                    1 => write!(f, "{var}")?,
                    _ => write!(f, "{var}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// A univariate polynomial with (possibly signed) exact coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UnivariatePolynomial {
    coeffs: BTreeMap<usize, BigInt>,
}

impl UnivariatePolynomial {
    pub fn from_terms<I: IntoIterator<Item = (usize, i64)>>(terms: I) -> Self {
        let mut p = Self::default();
        for (d, c) in terms {
            p.add_term(d, BigInt::from(c));
        }
        p
    }

    pub fn add_term(&mut self, degree: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(&degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    pub fn term_lines(&self) -> String {
        let mut out = String::new();
        for (&d, c) in &self.coeffs {
            let _ = writeln!(out, "{d} {c}");
        }
        out
    }
}

impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in self.coeffs.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !c.is_one() || d == 0 {
                write!(f, "{c}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "y")?,
                _ => write!(f, "y^{d}")?,
            }
        }
        Ok(())
    }
}

/// Signed accumulator used while expanding `(x-1)^a (y-1)^b` sums; the net
/// result of a Tutte expansion is nonnegative and converts to a
/// [`BivariatePolynomial`], but intermediate terms alternate in sign.
#[derive(Debug, Clone, Default)]
pub(crate) struct SignedBivariate {
    coeffs: BTreeMap<(usize, usize), BigInt>,
}

impl SignedBivariate {
    pub(crate) fn add_term(&mut self, i: usize, j: usize, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry((i, j)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&(i, j));
        }
    }

    /// Converts to the nonnegative representation, panicking if any
    /// coefficient is negative (which would mean a bug, not bad input).
    pub(crate) fn into_nonnegative(self) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::default();
        for ((i, j), c) in self.coeffs {
            let (sign, magnitude) = c.into_parts();
            assert!(
                sign != num_bigint::Sign::Minus,
                "negative coefficient at x^{i} y^{j} in a Tutte expansion"
            );
            out.add_term(i, j, magnitude);
        }
        out
    }
}

/// Dense signed expansion of `(z - 1)^a`: coefficient of `z^i` is
/// `(-1)^(a-i) C(a, i)`.
pub(crate) fn power_of_z_minus_1(a: usize) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(a + 1);
    // binomial row by Pascal recurrence
    let mut c = BigUint::one();
    for i in 0..=a {
        let sign = if (a - i) % 2 == 0 { 1 } else { -1 };
        row.push(BigInt::from(c.clone()) * sign);
        if i < a {
            c = c * BigUint::from(a - i) / BigUint::from(i + 1);
        }
    }
    row
}
