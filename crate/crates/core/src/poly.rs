//! Dense polynomials in one variable with exact big-integer coefficients.
//!
//! Subgroup-count polynomials are evaluated at primes, compared coefficient
//! by coefficient, and subtracted during recurrences, so everything stays in
//! `BigInt`. The zero polynomial is the empty coefficient vector and
//! canonical form never stores trailing zeros.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A polynomial `c_0 + c_1 p + … + c_d p^d` with `BigInt` coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        IntPoly { coeffs: vec![BigInt::one()] }
    }

    /// A constant polynomial.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            IntPoly::zero()
        } else {
            IntPoly { coeffs: vec![c] }
        }
    }

    /// `c · p^deg`.
    pub fn monomial(c: impl Into<BigInt>, deg: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPoly { coeffs }
    }

    /// Builds from a low-to-high coefficient list, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient, or `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of `p^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Low-to-high coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Multiplies by the scalar `c`.
    pub fn scaled(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a machine integer.
    pub fn eval_u64(&self, x: u64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Multiplies by `var^d`, shifting every coefficient up by `d` degrees.
    pub fn shifted(&self, d: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); d];
        coeffs.extend_from_slice(&self.coeffs);
        IntPoly { coeffs }
    }

    /// Renders with `var` as the variable, e.g. `p^2 + 3*p + 1`.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let t = match (i, c.is_one()) {
                (0, _) => format!("{c}"),
                (1, true) => var.to_string(),
                (1, false) => format!("{c}*{var}"),
                (_, true) => format!("{var}^{i}"),
                (_, false) => format!("{c}*{var}^{i}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    /// LaTeX rendering with braced exponents, e.g. `p^{2} + 3p + 1`.
    pub fn render_latex(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let t = match (i, c.is_one()) {
                (0, _) => format!("{c}"),
                (1, true) => var.to_string(),
                (1, false) => format!("{c}{var}"),
                (_, true) => format!("{var}^{{{i}}}"),
                (_, false) => format!("{c}{var}^{{{i}}}"),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }

    /// JSON rendering `{"k": k, "coeffs": [c_0, c_1, …]}` with exact decimal
    /// literals (arbitrary precision, so built by hand rather than serde).
    pub fn to_json(&self, k: usize) -> String {
        let body: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("{{\"k\": {k}, \"coeffs\": [{}]}}", body.join(", "))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render("p"))
    }
}
