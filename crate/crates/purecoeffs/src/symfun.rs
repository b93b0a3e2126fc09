//! The combinatorial building blocks behind the Hilbert coefficient formulas.
//!
//! Three families of exact symmetric-function values on integer sequences
//! `d = (d_1, ..., d_s)`:
//!
//! - `g_a(b)`: elementary symmetric sum of products over strictly increasing
//!   `a`-subsets of `{1..b}`;
//! - `f_k(d)`: complete homogeneous symmetric polynomial of degree `k`;
//! - `h_i(d)`: sum over weakly increasing index sequences `j_1 <= ... <= j_i`
//!   of the products `prod_k (d_{j_k} - (j_k + k - 1))`.
//!
//! They are tied together by two checkable identities: `h_i(d)` equals the
//! alternating `g`/`f` expansion, and the Vandermonde matrix with its last
//! row replaced by `k`-th powers has determinant `f_{k-s+1}(d)` times the
//! plain Vandermonde product. Both are exercised by tests rather than
//! assumed.
//!
//! Sequences are plain `&[i64]` slices; the empty sequence is legal and all
//! functions are total on it. No ordering is required here -- strictness is a
//! constraint of pure types, not of the symmetric functions themselves.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// `g_a(b)`: sum over strictly increasing `a`-subsets of `{1..b}` of the
/// product of their elements. `g_0 = 1`; zero when `a > b`.
///
/// Computed by the recurrence `g_a(b) = g_a(b-1) + b * g_{a-1}(b-1)`.
pub fn g_sum(a: u32, b: u32) -> Rational {
    let a = a as usize;
    let mut g = vec![BigInt::zero(); a + 1];
    g[0] = BigInt::one();
    for b_cur in 1..=b as usize {
        for deg in (1..=a.min(b_cur)).rev() {
            let carry = &g[deg - 1] * BigInt::from(b_cur);
            g[deg] += carry;
        }
    }
    Rational::from_bigint(g[a].clone())
}

/// `f_k(d)`: the complete homogeneous symmetric polynomial of degree `k`
/// evaluated at `d`, by dynamic programming over prefixes.
///
/// `f_0 = 1`; on the empty sequence `f_k = 0` for `k >= 1`.
pub fn f_complete(k: u32, d: &[i64]) -> Rational {
    let k = k as usize;
    let mut f = vec![BigInt::zero(); k + 1];
    f[0] = BigInt::one();
    for &dj in d {
        for deg in 1..=k {
            let carry = &f[deg - 1] * BigInt::from(dj);
            f[deg] += carry;
        }
    }
    Rational::from_bigint(f[k].clone())
}

/// Visits every weakly increasing sequence `(j_1 <= ... <= j_len)` with
/// entries in `1..=s`, passing 1-based indices to the callback.
fn visit_weakly_increasing(s: usize, len: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(s: usize, len: usize, start: usize, buf: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if buf.len() == len {
            f(buf);
            return;
        }
        for j in start..=s {
            buf.push(j);
            rec(s, len, j, buf, f);
            buf.pop();
        }
    }
    rec(s, len, 1, &mut Vec::with_capacity(len), f);
}

fn h_term(d: &[i64], indices: &[usize]) -> BigInt {
    let mut prod = BigInt::one();
    for (k0, &j) in indices.iter().enumerate() {
        let k = k0 + 1;
        prod *= BigInt::from(d[j - 1] - (j + k - 1) as i64);
    }
    prod
}

/// `h_i(d)`: sum over weakly increasing index sequences of length `i` of
/// `prod_k (d_{j_k} - (j_k + k - 1))`. `h_0 = 1`; zero for `i >= 1` on the
/// empty sequence.
pub fn h_sum(i: u32, d: &[i64]) -> Rational {
    let mut total = BigInt::zero();
    visit_weakly_increasing(d.len(), i as usize, &mut |idx| {
        total += h_term(d, idx);
    });
    Rational::from_bigint(total)
}

/// Checks, term by term, that every product appearing in `h_sum(i, d)` is
/// either zero or has all factors strictly positive. This holds whenever `d`
/// is strictly increasing with `d_j >= j`, and makes `h_i(d) >= 0` manifest.
pub fn h_terms_zero_or_positive(i: u32, d: &[i64]) -> bool {
    let mut ok = true;
    visit_weakly_increasing(d.len(), i as usize, &mut |idx| {
        let mut any_zero = false;
        let mut any_negative = false;
        for (k0, &j) in idx.iter().enumerate() {
            let factor = d[j - 1] - (j + k0) as i64;
            if factor == 0 {
                any_zero = true;
            } else if factor < 0 {
                any_negative = true;
            }
        }
        if any_negative && !any_zero {
            ok = false;
        }
    });
    ok
}

/// The alternating expansion `sum_{j=0}^i (-1)^{i-j} g_{i-j}(s+i-1) f_j(d)`.
///
/// Equals `h_sum(i, d)` for every input; the equality is a property test,
/// not an assumption.
pub fn expansion_identity_rhs(i: u32, d: &[i64]) -> Rational {
    let s = d.len() as u32;
    let b = (s + i).saturating_sub(1);
    let mut total = Rational::zero();
    for j in 0..=i {
        let term = g_sum(i - j, b) * f_complete(j, d);
        total = if (i - j) % 2 == 0 { total + term } else { total - term };
    }
    total
}

/// Determinant of the `s x s` matrix with rows `(1,...,1), (d_1,...,d_s),
/// ..., (d_1^{s-2},...,d_s^{s-2}), (d_1^k,...,d_s^k)`, by exact-rational
/// Gaussian elimination.
///
/// For `k >= s-1` this equals `f_{k-s+1}(d) * prod_{i<j}(d_j - d_i)`; the
/// two routes are independent and compared in tests.
pub fn modified_vandermonde_det(d: &[i64], k: u32) -> Rational {
    let s = d.len();
    assert!(s >= 1, "sequence must be nonempty");
    let mut m: Vec<Vec<Rational>> = (0..s)
        .map(|row| {
            let exp = if row + 1 < s { row as u32 } else { k };
            d.iter()
                .map(|&dj| Rational::from_bigint(BigInt::from(dj).pow(exp)))
                .collect()
        })
        .collect();

    let mut det = Rational::one();
    for col in 0..s {
        let pivot_row = match (col..s).find(|&r| !m[r][col].is_zero()) {
            Some(r) => r,
            None => return Rational::zero(),
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..s {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..s {
                let sub = &factor * &m[col][c];
                m[r][c] -= &sub;
            }
        }
    }
    det
}
