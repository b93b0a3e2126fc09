//! Dense univariate polynomials over exact rationals.
//!
//! Carries the alternating Betti generating polynomial, the Hilbert series
//! numerator and Hilbert polynomials. Coefficients are indexed by power; the
//! representation is canonical: trailing zeros are stripped and the zero
//! polynomial has an empty coefficient list.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::rational::{binomial, factorial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    /// The polynomial does not vanish to the requested order at 1. For Betti
    /// numerators this means the first Herzog-Kuhl moments are nonzero.
    #[error("polynomial is not divisible by (1 - t)^{power}")]
    NotDivisible { power: u32 },
    /// The polynomial has higher degree than the requested binomial basis
    /// can represent.
    #[error("degree {degree} exceeds binomial basis dimension {dim}")]
    DegreeTooHigh { degree: usize, dim: usize },
}

/// A dense univariate polynomial with `Rational` coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from low-to-high coefficients, canonicalizing.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact `order`-th formal derivative.
    pub fn derivative(&self, order: u32) -> Self {
        let mut p = self.clone();
        for _ in 0..order {
            p = Poly::from_coeffs(
                p.coeffs
                    .iter()
                    .enumerate()
                    .skip(1)
                    .map(|(k, c)| c * &Rational::from(k as i64))
                    .collect(),
            );
        }
        p
    }

    /// Exact Horner evaluation.
    pub fn eval_at(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Divides by `(1 - t)^power` exactly, or reports that the root at 1 has
    /// too low multiplicity.
    ///
    /// One division step is synthetic: `q_k = p_0 + ... + p_k`, valid exactly
    /// when the total coefficient sum vanishes.
    pub fn divide_by_one_minus_t_power(&self, power: u32) -> Result<Poly, PolyError> {
        let mut p = self.clone();
        for _ in 0..power {
            if p.is_zero() {
                continue;
            }
            let mut acc = Rational::zero();
            let mut q = Vec::with_capacity(p.coeffs.len().saturating_sub(1));
            for (k, c) in p.coeffs.iter().enumerate() {
                acc += c;
                if k + 1 < p.coeffs.len() {
                    q.push(acc.clone());
                }
            }
            if !acc.is_zero() {
                return Err(PolyError::NotDivisible { power });
            }
            p = Poly::from_coeffs(q);
        }
        Ok(p)
    }

    /// Returns `p(x + a)`, expanded exactly.
    pub fn substitute_shift(&self, a: i64) -> Poly {
        let shift = Rational::from(a);
        let mut result = Poly::zero();
        for c in self.coeffs.iter().rev() {
            // result = result * (x + a) + c
            let mut next = vec![Rational::zero(); result.coeffs.len() + 1];
            for (k, rc) in result.coeffs.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + rc;
                next[k] = next[k].clone() + rc * &shift;
            }
            next[0] = next[0].clone() + c;
            result = Poly::from_coeffs(next);
        }
        result
    }

    /// Renders e.g. `1 - 3*t^2 + 2*t^3` with the given variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let needs_coeff = k == 0 || !mag.is_one();
            if needs_coeff {
                out.push_str(&mag.to_string());
            }
            if k > 0 {
                if needs_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("t"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Coefficients `0..=order` of the power series `num(t) / (1 - t)^denom_power`,
/// computed by iterated prefix sums.
pub fn series_expand(num: &Poly, denom_power: u32, order: usize) -> Vec<Rational> {
    let mut v: Vec<Rational> = (0..=order).map(|k| num.coeff(k)).collect();
    for _ in 0..denom_power {
        for k in 1..v.len() {
            let prev = v[k - 1].clone();
            v[k] += &prev;
        }
    }
    v
}

/// The polynomial `C(x + k, k) = (x+1)(x+2)...(x+k) / k!`.
pub fn binomial_basis_poly(k: usize) -> Poly {
    let mut p = Poly::one();
    for r in 1..=k {
        p = &p * &Poly::from_coeffs(vec![Rational::from(r as i64), Rational::one()]);
    }
    p.scale(&factorial(k as u32).recip())
}

/// Builds `sum_i (-1)^i e_i C(x + d - i, d - i)` from coefficients
/// `(e_0, ..., e_d)`. Shorter inputs are padded with zeros.
pub fn from_binomial_basis(e: &[Rational], d: usize) -> Poly {
    assert!(e.len() <= d + 1, "more coefficients than basis elements");
    let mut p = Poly::zero();
    for (i, ei) in e.iter().enumerate() {
        let term = binomial_basis_poly(d - i).scale(ei);
        p = if i % 2 == 0 { &p + &term } else { &p - &term };
    }
    p
}

/// Inverts [`from_binomial_basis`]: recovers `(e_0, ..., e_d)` exactly.
pub fn to_binomial_basis(p: &Poly, d: usize) -> Result<Vec<Rational>, PolyError> {
    if let Some(deg) = p.degree() {
        if deg > d {
            return Err(PolyError::DegreeTooHigh { degree: deg, dim: d });
        }
    }
    let mut rest = p.clone();
    let mut e = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let k = d - i;
        // Only the C(x+k,k) term of the remainder contributes to x^k, with
        // leading coefficient 1/k!.
        let ei_signed = rest.coeff(k) * factorial(k as u32);
        let term = binomial_basis_poly(k).scale(&ei_signed);
        rest = &rest - &term;
        e.push(if i % 2 == 0 { ei_signed } else { -ei_signed });
    }
    debug_assert!(rest.is_zero());
    Ok(e)
}
