//! Hilbert coefficients of a Betti diagram, two ways.
//!
//! The oracle path works for every Herzog-Kuhl-valid diagram: form the
//! alternating numerator `P(t) = sum (-1)^i beta_{ij} t^j`, divide by
//! `(1-t)^s` to get the series numerator `Q(t)`, and read off
//! `e_i = Q^{(i)}(1) / i!`. An equivalent route differentiates `P` directly:
//! `e_i = (-1)^s P^{(s+i)}(1) / (s+i)!`. The closed-form path evaluates the
//! product formula `e_i = beta_0 (prod d_j / (s+i)!) h_i(d_1,...,d_s)` for a
//! pure type starting at shift 0. The two paths must agree exactly, and the
//! test suites hold them to that.
//!
//! All Hilbert functions here are cumulative: `H(N, i)` counts dimensions in
//! degrees `<= i`, so the full series is `numerator / (1-t)^{n+1}` and the
//! Hilbert polynomial has degree `d = n - s`.

use thiserror::Error;

use crate::betti::{BettiDiagram, DiagramError, PureType};
use crate::poly::{from_binomial_basis, series_expand, to_binomial_basis, Poly, PolyError};
use crate::rational::{factorial, Rational};
use crate::symfun::h_sum;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HilbertError {
    #[error("diagram violates Herzog-Kuhl conditions for codimension {codim}")]
    HerzogKuhl { codim: usize },
    #[error("pure type must start at shift 0 (found {d0})")]
    NonzeroD0 { d0: i64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// The Hilbert-series data of a diagram: series numerator `Q`, dimension,
/// coefficients `(e_0, ..., e_d)` and the Hilbert polynomial they span.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    q_poly: Poly,
    dim: usize,
    coefficients: Vec<Rational>,
    hilbert_poly: Poly,
}

impl HilbertData {
    /// Numerator of the cumulative Hilbert series over `(1-t)^{d+1}`.
    pub fn q_poly(&self) -> &Poly {
        &self.q_poly
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(e_0, ..., e_d)`.
    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// The Hilbert polynomial `P(x) = sum (-1)^i e_i C(x+d-i, d-i)`.
    pub fn hilbert_poly(&self) -> &Poly {
        &self.hilbert_poly
    }
}

/// The alternating generating polynomial `sum_{i,j} (-1)^i beta_{ij} t^j`.
pub fn numerator_from_diagram(diagram: &BettiDiagram) -> Poly {
    let mut coeffs = Vec::new();
    for (i, j, value) in diagram.entries() {
        let j = j as usize;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Rational::zero());
        }
        if i % 2 == 0 {
            coeffs[j] += value;
        } else {
            coeffs[j] -= value;
        }
    }
    Poly::from_coeffs(coeffs)
}

/// Hilbert data of a diagram via the series route: `Q = P / (1-t)^s`,
/// `e_i = Q^{(i)}(1) / i!` for `i = 0..=dim`.
///
/// Fails with [`HilbertError::HerzogKuhl`] when the numerator does not
/// vanish to order `s` at 1, which is exactly failure of the first `s`
/// Herzog-Kuhl moment equations.
pub fn coefficients_oracle(diagram: &BettiDiagram) -> Result<HilbertData, HilbertError> {
    let s = diagram.codim();
    let numerator = numerator_from_diagram(diagram);
    let q_poly = numerator
        .divide_by_one_minus_t_power(s as u32)
        .map_err(|_| HilbertError::HerzogKuhl { codim: s })?;
    let dim = diagram.dim();
    let one = Rational::one();
    let coefficients: Vec<Rational> = (0..=dim)
        .map(|i| q_poly.derivative(i as u32).eval_at(&one) / factorial(i as u32))
        .collect();
    let hilbert_poly = from_binomial_basis(&coefficients, dim);
    Ok(HilbertData {
        q_poly,
        dim,
        coefficients,
        hilbert_poly,
    })
}

/// The same coefficients via the numerator directly:
/// `e_i = (-1)^s P^{(s+i)}(1) / (s+i)!`.
///
/// This route performs no divisibility check; it is the independent
/// cross-check for [`coefficients_oracle`] and is only meaningful on
/// Herzog-Kuhl-valid diagrams.
pub fn coefficients_via_numerator_derivatives(diagram: &BettiDiagram) -> Vec<Rational> {
    let s = diagram.codim() as u32;
    let numerator = numerator_from_diagram(diagram);
    let one = Rational::one();
    (0..=diagram.dim() as u32)
        .map(|i| {
            let value = numerator.derivative(s + i).eval_at(&one) / factorial(s + i);
            if s % 2 == 0 {
                value
            } else {
                -value
            }
        })
        .collect()
}

/// Closed-form Hilbert coefficients of a pure resolution of type
/// `(0, d_1, ..., d_s)`:
/// `e_i = beta_0 * (d_1 ... d_s / (s+i)!) * h_i(d_1, ..., d_s)`.
///
/// Types with `d_0 != 0` must be routed through [`shift_transform`].
pub fn coefficients_pure_closed_form(
    t: &PureType,
    beta0: &Rational,
    count: usize,
) -> Result<Vec<Rational>, HilbertError> {
    if t.d0() != 0 {
        return Err(HilbertError::NonzeroD0 { d0: t.d0() });
    }
    let tail = t.tail();
    let s = t.s() as u32;
    let mut shift_product = beta0.clone();
    for &dj in tail {
        shift_product *= &Rational::from(dj);
    }
    Ok((0..count as u32)
        .map(|i| &shift_product * h_sum(i, tail) / factorial(s + i))
        .collect())
}

/// Hilbert coefficients of a `d`-linear resolution:
/// `e_i = beta_0 C(d+s-1, s+i) C(s+i-1, i)`.
///
/// Agrees with the closed form on the type `(0, d, d+1, ..., d+s-1)`.
pub fn coefficients_linear_case(
    d: i64,
    s: u32,
    beta0: &Rational,
    count: usize,
) -> Vec<Rational> {
    use crate::rational::binomial;
    (0..count as u32)
        .map(|i| {
            beta0
                * binomial(d + s as i64 - 1, s + i)
                * binomial((s + i) as i64 - 1, i)
        })
        .collect()
}

/// Recovers the coefficients of a module generated in degree `d0` from the
/// coefficients of its degree-0 normalization.
///
/// With the convention `N(a)_j = N_{a+j}` the Hilbert polynomials satisfy
/// `P_N(x) = P_{N(d0)}(x - d0)`, so this builds the polynomial from
/// `e_shifted`, substitutes `x -> x - d0` exactly, and reads the binomial
/// coefficients back off.
pub fn shift_transform(
    e_shifted: &[Rational],
    dim: usize,
    d0: i64,
) -> Result<Vec<Rational>, HilbertError> {
    let shifted_poly = from_binomial_basis(e_shifted, dim);
    let poly = shifted_poly.substitute_shift(-d0);
    Ok(to_binomial_basis(&poly, dim)?)
}

/// Hilbert polynomial values `P(i)` for `i` in `from..=to`.
pub fn hilbert_values(data: &HilbertData, from: i64, to: i64) -> Vec<Rational> {
    (from..=to)
        .map(|i| data.hilbert_poly.eval_at(&Rational::from(i)))
        .collect()
}

/// Coefficients `0..=order` of the cumulative Hilbert series
/// `numerator / (1-t)^{n+1}`, i.e. the values `H(N, i)` themselves.
pub fn cumulative_series(diagram: &BettiDiagram, order: usize) -> Vec<Rational> {
    series_expand(
        &numerator_from_diagram(diagram),
        diagram.n_vars() + 1,
        order,
    )
}
