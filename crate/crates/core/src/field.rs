//! Exact arithmetic over prime fields: scalars, univariate polynomials, and
//! square matrices.
//!
//! Moduli are odd primes below 2^31 plus 2, so every product fits in a `u64`
//! with explicit reduction; nothing here touches floating point or
//! multiprecision.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::is_prime;

/// Exclusive upper bound on field moduli.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Checks that `ell` is a prime usable as a field modulus.
pub fn validate_modulus(ell: u64) -> Result<()> {
    if ell < 2 || ell >= MAX_MODULUS || !is_prime(ell) {
        return Err(Error::InvalidInput(format!(
            "modulus {ell} must be a prime in [2, 2^31)"
        )));
    }
    Ok(())
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, m: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + m - b
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < m && b < m && m < MAX_MODULUS);
    (a * b) % m
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Extended Euclid; `None` when `a` is not a unit mod `m`.
pub(crate) fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i64, (a % m) as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i64) as u64)
}

/// Reduce a signed integer into `[0, m)`.
#[inline]
pub(crate) fn reduce_i64(v: i64, m: u64) -> u64 {
    v.rem_euclid(m as i64) as u64
}

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// A residue in `F_ell`. Carries its modulus; mixing moduli panics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpElem {
    value: u64,
    ell: u64,
}

impl FpElem {
    pub fn new(value: u64, ell: u64) -> Self {
        debug_assert!(ell >= 2);
        FpElem { value: value % ell, ell }
    }

    pub fn from_i64(value: i64, ell: u64) -> Self {
        FpElem { value: reduce_i64(value, ell), ell }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.ell
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse; `ZeroInverse` on the zero residue.
    pub fn inv(&self) -> Result<FpElem> {
        if self.value == 0 {
            return Err(Error::ZeroInverse { modulus: self.ell });
        }
        let v = inv_mod(self.value, self.ell).expect("nonzero residue mod a prime is a unit");
        Ok(FpElem { value: v, ell: self.ell })
    }

    pub fn pow(&self, exp: u64) -> FpElem {
        FpElem { value: pow_mod(self.value, exp, self.ell), ell: self.ell }
    }

    #[inline]
    fn check_same(self, rhs: FpElem) -> u64 {
        assert_eq!(self.ell, rhs.ell, "mixed moduli {} and {}", self.ell, rhs.ell);
        self.ell
    }
}

impl std::ops::Add for FpElem {
    type Output = FpElem;
    fn add(self, rhs: FpElem) -> FpElem {
        let m = self.check_same(rhs);
        FpElem { value: add_mod(self.value, rhs.value, m), ell: m }
    }
}

impl std::ops::Sub for FpElem {
    type Output = FpElem;
    fn sub(self, rhs: FpElem) -> FpElem {
        let m = self.check_same(rhs);
        FpElem { value: sub_mod(self.value, rhs.value, m), ell: m }
    }
}

impl std::ops::Mul for FpElem {
    type Output = FpElem;
    fn mul(self, rhs: FpElem) -> FpElem {
        let m = self.check_same(rhs);
        FpElem { value: mul_mod(self.value, rhs.value, m), ell: m }
    }
}

impl std::ops::Neg for FpElem {
    type Output = FpElem;
    fn neg(self) -> FpElem {
        FpElem { value: sub_mod(0, self.value, self.ell), ell: self.ell }
    }
}

impl std::fmt::Display for FpElem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

// ---------------------------------------------------------------------------
// Univariate polynomials
// ---------------------------------------------------------------------------

/// Distinct-root counts of a nonzero polynomial: rational roots by full field
/// scan, closure roots by degree of the squarefree radical.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RootCounts {
    pub in_field: usize,
    pub in_closure: usize,
}

/// A polynomial over `F_ell`, coefficients lowest degree first, always
/// normalized (no trailing zero coefficients; the zero polynomial is empty).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpPoly {
    coeffs: Vec<u64>,
    ell: u64,
}

impl FpPoly {
    pub fn new(mut coeffs: Vec<u64>, ell: u64) -> Self {
        debug_assert!(ell >= 2);
        for c in &mut coeffs {
            *c %= ell;
        }
        let mut p = FpPoly { coeffs, ell };
        p.normalize();
        p
    }

    pub fn from_i64_coeffs(coeffs: &[i64], ell: u64) -> Self {
        FpPoly::new(coeffs.iter().map(|&c| reduce_i64(c, ell)).collect(), ell)
    }

    pub fn zero(ell: u64) -> Self {
        FpPoly { coeffs: Vec::new(), ell }
    }

    pub fn one(ell: u64) -> Self {
        FpPoly::new(vec![1], ell)
    }

    /// The monic linear polynomial `x - root`.
    pub fn x_minus(root: u64, ell: u64) -> Self {
        FpPoly::new(vec![sub_mod(0, root % ell, ell), 1], ell)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn modulus(&self) -> u64 {
        self.ell
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FpElem {
        FpElem::new(self.coeffs.get(i).copied().unwrap_or(0), self.ell)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let x = x % self.ell;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = add_mod(mul_mod(acc, x, self.ell), c, self.ell);
        }
        acc
    }

    pub fn add(&self, rhs: &FpPoly) -> FpPoly {
        assert_eq!(self.ell, rhs.ell);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                add_mod(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    rhs.coeffs.get(i).copied().unwrap_or(0),
                    self.ell,
                )
            })
            .collect();
        FpPoly::new(coeffs, self.ell)
    }

    pub fn sub(&self, rhs: &FpPoly) -> FpPoly {
        assert_eq!(self.ell, rhs.ell);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                sub_mod(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    rhs.coeffs.get(i).copied().unwrap_or(0),
                    self.ell,
                )
            })
            .collect();
        FpPoly::new(coeffs, self.ell)
    }

    pub fn mul(&self, rhs: &FpPoly) -> FpPoly {
        assert_eq!(self.ell, rhs.ell);
        if self.is_zero() || rhs.is_zero() {
            return FpPoly::zero(self.ell);
        }
        let mut coeffs = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = add_mod(coeffs[i + j], mul_mod(a, b, self.ell), self.ell);
            }
        }
        FpPoly::new(coeffs, self.ell)
    }

    pub fn scale(&self, c: u64) -> FpPoly {
        let c = c % self.ell;
        FpPoly::new(self.coeffs.iter().map(|&a| mul_mod(a, c, self.ell)).collect(), self.ell)
    }

    pub fn derivative(&self) -> FpPoly {
        if self.coeffs.len() <= 1 {
            return FpPoly::zero(self.ell);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod((i as u64) % self.ell, c, self.ell))
            .collect();
        FpPoly::new(coeffs, self.ell)
    }

    /// Euclidean division; panics if `rhs` is zero.
    pub fn divrem(&self, rhs: &FpPoly) -> (FpPoly, FpPoly) {
        assert_eq!(self.ell, rhs.ell);
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let m = self.ell;
        let d = rhs.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (FpPoly::zero(m), self.clone());
        }
        let lead_inv = inv_mod(rhs.coeffs[d], m).expect("leading coeff is a unit");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - d];
        for i in (d..rem.len()).rev() {
            let q = mul_mod(rem[i], lead_inv, m);
            if q == 0 {
                continue;
            }
            quot[i - d] = q;
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                rem[i - d + j] = sub_mod(rem[i - d + j], mul_mod(q, b, m), m);
            }
        }
        (FpPoly::new(quot, m), FpPoly::new(rem, m))
    }

    /// Monic greatest common divisor by the Euclidean algorithm.
    pub fn gcd(&self, rhs: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.into_monic()
    }

    fn into_monic(self) -> FpPoly {
        match self.coeffs.last() {
            None | Some(1) => self,
            Some(&lead) => {
                let inv = inv_mod(lead, self.ell).expect("unit lead");
                self.scale(inv)
            }
        }
    }

    /// `f(x^n)`: degree multiplied by `n`.
    pub fn substitute_power(&self, n: usize) -> FpPoly {
        assert!(n >= 1, "substitution exponent must be >= 1");
        if self.is_zero() || n == 1 {
            return self.clone();
        }
        let mut coeffs = vec![0u64; (self.coeffs.len() - 1) * n + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * n] = c;
        }
        FpPoly::new(coeffs, self.ell)
    }

    /// Squarefree polynomial with the same root set in the algebraic closure.
    ///
    /// Handles inseparable parts: when the derivative vanishes, `f = g(x^ell)`
    /// and the root set of `f` is the image of the root set of `g` under the
    /// inverse Frobenius, which is a bijection fixing `F_ell`-root sets, so the
    /// radical of `g` works for `f`.
    fn radical(&self) -> FpPoly {
        debug_assert!(!self.is_zero());
        if self.coeffs.len() == 1 {
            return FpPoly::one(self.ell);
        }
        let deriv = self.derivative();
        if deriv.is_zero() {
            let step = self.ell as usize;
            let deflated: Vec<u64> = self.coeffs.iter().copied().step_by(step).collect();
            return FpPoly::new(deflated, self.ell).radical();
        }
        let g = self.gcd(&deriv);
        if g.coeffs.len() == 1 {
            return self.clone().into_monic();
        }
        let w = self.divrem(&g).0.into_monic();
        let rg = g.radical();
        let overlap = w.gcd(&rg);
        w.mul(&rg).divrem(&overlap).0.into_monic()
    }

    /// Distinct-root counts of a nonzero polynomial: `in_field` by scanning
    /// every residue, `in_closure` from the squarefree radical.
    pub fn distinct_root_counts(&self) -> Result<RootCounts> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let in_field = (0..self.ell).filter(|&x| self.eval(x) == 0).count();
        let in_closure = self.radical().degree().unwrap_or(0);
        Ok(RootCounts { in_field, in_closure })
    }
}

impl std::fmt::Display for FpPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 if c == 1 => write!(f, "x")?,
                1 => write!(f, "{c}x")?,
                _ if c == 1 => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Square matrices
// ---------------------------------------------------------------------------

/// An `n x n` matrix over `F_ell`, entries row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FpMatrix {
    n: usize,
    ell: u64,
    entries: Vec<u64>,
}

impl FpMatrix {
    pub fn new(n: usize, entries: Vec<u64>, ell: u64) -> Self {
        assert!(n >= 1, "matrix dimension must be >= 1");
        assert_eq!(entries.len(), n * n, "entry count must be n^2");
        debug_assert!(ell >= 2);
        let entries = entries.into_iter().map(|e| e % ell).collect();
        FpMatrix { n, ell, entries }
    }

    pub fn from_i64(n: usize, entries: &[i64], ell: u64) -> Self {
        FpMatrix::new(n, entries.iter().map(|&e| reduce_i64(e, ell)).collect(), ell)
    }

    pub fn identity(n: usize, ell: u64) -> Self {
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            entries[i * n + i] = 1 % ell;
        }
        FpMatrix { n, ell, entries }
    }

    pub fn diagonal(diag: &[u64], ell: u64) -> Self {
        let n = diag.len();
        let mut m = FpMatrix::new(n, vec![0; n * n], ell);
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d % ell;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.ell
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn elem(&self, i: usize, j: usize) -> FpElem {
        FpElem::new(self.get(i, j), self.ell)
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.entries[i * self.n + j] = v % self.ell;
    }

    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.n, rhs.n);
        assert_eq!(self.ell, rhs.ell);
        let n = self.n;
        let mut entries = vec![0u64; n * n];
        mat_mul_raw(n, &self.entries, &rhs.entries, &mut entries, self.ell);
        FpMatrix { n, ell: self.ell, entries }
    }

    pub fn pow(&self, mut exp: u64) -> FpMatrix {
        let mut acc = FpMatrix::identity(self.n, self.ell);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Determinant by Gaussian elimination with pivoting; exact over `F_ell`.
    pub fn det(&self) -> FpElem {
        let mut scratch = self.entries.clone();
        FpElem::new(det_in_place(self.n, &mut scratch, self.ell), self.ell)
    }

    /// `det(I - M) == 0`, i.e. `M` has 1 as an eigenvalue.
    pub fn has_eigenvalue_one(&self) -> bool {
        let mut scratch = vec![0u64; self.n * self.n];
        identity_minus_into(self.n, &self.entries, &mut scratch, self.ell);
        det_in_place(self.n, &mut scratch, self.ell) == 0
    }

    /// `I - M`.
    pub fn identity_minus(&self) -> FpMatrix {
        let mut entries = vec![0u64; self.n * self.n];
        identity_minus_into(self.n, &self.entries, &mut entries, self.ell);
        FpMatrix { n: self.n, ell: self.ell, entries }
    }

    /// Characteristic polynomial `det(xI - M)`, monic of degree `n`, by
    /// cofactor expansion over the polynomial ring. Intended for the small
    /// dimensions this crate works at.
    pub fn charpoly(&self) -> FpPoly {
        assert!(self.n <= 8, "cofactor charpoly is for small matrices");
        let m = self.ell;
        // xI - M as a dense polynomial matrix.
        let entries: Vec<FpPoly> = (0..self.n * self.n)
            .map(|k| {
                let (i, j) = (k / self.n, k % self.n);
                let neg = sub_mod(0, self.entries[k], m);
                if i == j {
                    FpPoly::new(vec![neg, 1], m)
                } else {
                    FpPoly::new(vec![neg], m)
                }
            })
            .collect();
        poly_det(self.n, &entries, m)
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        let n = self.n;
        let m = self.ell;
        let mut a = self.entries.clone();
        let mut inv = FpMatrix::identity(n, m).entries;
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| a[r * n + col] != 0)?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let pinv = inv_mod(a[col * n + col], m).expect("unit pivot");
            for j in 0..n {
                a[col * n + j] = mul_mod(a[col * n + j], pinv, m);
                inv[col * n + j] = mul_mod(inv[col * n + j], pinv, m);
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    let s = mul_mod(factor, a[col * n + j], m);
                    a[r * n + j] = sub_mod(a[r * n + j], s, m);
                    let s = mul_mod(factor, inv[col * n + j], m);
                    inv[r * n + j] = sub_mod(inv[r * n + j], s, m);
                }
            }
        }
        Some(FpMatrix { n, ell: m, entries: inv })
    }
}

/// Determinant of a polynomial matrix by first-row cofactor expansion.
fn poly_det(n: usize, entries: &[FpPoly], m: u64) -> FpPoly {
    if n == 1 {
        return entries[0].clone();
    }
    let mut acc = FpPoly::zero(m);
    for j in 0..n {
        if entries[j].is_zero() {
            continue;
        }
        let minor: Vec<FpPoly> = (1..n)
            .flat_map(|r| (0..n).filter(|&c| c != j).map(move |c| (r, c)))
            .map(|(r, c)| entries[r * n + c].clone())
            .collect();
        let term = entries[j].mul(&poly_det(n - 1, &minor, m));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[inline]
pub(crate) fn mat_mul_raw(n: usize, a: &[u64], b: &[u64], out: &mut [u64], m: u64) {
    for i in 0..n {
        for j in 0..n {
            let mut acc = 0u64;
            for k in 0..n {
                acc += mul_mod(a[i * n + k], b[k * n + j], m);
            }
            out[i * n + j] = acc % m;
        }
    }
}

/// Writes `I - M` into `out`.
#[inline]
pub(crate) fn identity_minus_into(n: usize, m_entries: &[u64], out: &mut [u64], m: u64) {
    for i in 0..n {
        for j in 0..n {
            let idx = i * n + j;
            let id = if i == j { 1 % m } else { 0 };
            out[idx] = sub_mod(id, m_entries[idx], m);
        }
    }
}

/// In-place determinant over `F_m`; clobbers `a`.
pub(crate) fn det_in_place(n: usize, a: &mut [u64], m: u64) -> u64 {
    let mut det = 1 % m;
    for col in 0..n {
        let mut pivot_row = col;
        while pivot_row < n && a[pivot_row * n + col] == 0 {
            pivot_row += 1;
        }
        if pivot_row == n {
            return 0;
        }
        if pivot_row != col {
            for j in col..n {
                a.swap(col * n + j, pivot_row * n + j);
            }
            det = sub_mod(0, det, m);
        }
        let pivot = a[col * n + col];
        det = mul_mod(det, pivot, m);
        let pinv = inv_mod(pivot, m).expect("unit pivot");
        for r in (col + 1)..n {
            let lead = a[r * n + col];
            if lead == 0 {
                continue;
            }
            let factor = mul_mod(lead, pinv, m);
            for j in col..n {
                let s = mul_mod(factor, a[col * n + j], m);
                a[r * n + j] = sub_mod(a[r * n + j], s, m);
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_examples() {
        assert_eq!(FpElem::new(2, 5).inv().unwrap(), FpElem::new(3, 5));
        assert_eq!(FpElem::new(1, 7).inv().unwrap(), FpElem::new(1, 7));
        assert!(matches!(
            FpElem::new(0, 3).inv(),
            Err(Error::ZeroInverse { modulus: 3 })
        ));
    }

    #[test]
    fn field_axioms_exhaustive_small_primes() {
        for ell in [2u64, 3, 5, 7, 11, 13] {
            for a in 0..ell {
                let ea = FpElem::new(a, ell);
                if a != 0 {
                    assert_eq!((ea * ea.inv().unwrap()).value(), 1);
                }
                for b in 0..ell {
                    let eb = FpElem::new(b, ell);
                    assert_eq!(ea + eb, eb + ea);
                    assert_eq!(ea * eb, eb * ea);
                    for c in 0..ell {
                        let ec = FpElem::new(c, ell);
                        assert_eq!((ea + eb) + ec, ea + (eb + ec));
                        assert_eq!((ea * eb) * ec, ea * (eb * ec));
                        assert_eq!(ea * (eb + ec), ea * eb + ea * ec);
                    }
                }
            }
        }
    }

    #[test]
    fn det_examples() {
        assert_eq!(FpMatrix::identity(2, 5).det().value(), 1);
        assert_eq!(FpMatrix::new(2, vec![0, 1, 1, 0], 2).det().value(), 1);
        assert_eq!(FpMatrix::new(2, vec![1, 2, 3, 4], 7).det().value(), 5);
    }

    #[test]
    fn charpoly_examples() {
        // (x-1)(x-2) = x^2 - 3x + 2 over F_5.
        let m = FpMatrix::diagonal(&[1, 2], 5);
        assert_eq!(m.charpoly(), FpPoly::new(vec![2, 2, 1], 5));
        // (x-1)^2 over F_3.
        let m = FpMatrix::identity(2, 3);
        assert_eq!(m.charpoly(), FpPoly::new(vec![1, 1, 1], 3));
        let m = FpMatrix::new(2, vec![0, 1, 1, 1], 2);
        assert_eq!(m.charpoly(), FpPoly::new(vec![1, 1, 1], 2));
    }

    #[test]
    fn charpoly_at_one_is_det_of_identity_minus() {
        // Exhaustive at tiny sizes, seeded-random at the larger ones.
        for ell in [2u64, 3, 5] {
            for x in 0..ell.pow(4) {
                let mut v = x;
                let mut e = [0u64; 4];
                for slot in e.iter_mut() {
                    *slot = v % ell;
                    v /= ell;
                }
                let m = FpMatrix::new(2, e.to_vec(), ell);
                assert_eq!(m.charpoly().eval(1), m.identity_minus().det().value());
            }
        }
        let mut stream = crate::rng::SeedStream::new(0xF1E1D);
        for ell in [7u64, 11, 13, 17, 19, 23, 29, 31] {
            for n in 1..=4usize {
                for _ in 0..50 {
                    let entries: Vec<u64> =
                        (0..n * n).map(|_| stream.next_below(ell)).collect();
                    let m = FpMatrix::new(n, entries, ell);
                    assert_eq!(m.charpoly().eval(1), m.identity_minus().det().value());
                    assert_eq!(m.charpoly().degree(), Some(n));
                    assert_eq!(m.charpoly().coeffs().last(), Some(&1));
                }
            }
        }
    }

    #[test]
    fn distinct_roots_examples() {
        let f = FpPoly::from_i64_coeffs(&[-1, 0, 1], 5); // x^2 - 1
        assert_eq!(f.distinct_root_counts().unwrap(), RootCounts { in_field: 2, in_closure: 2 });
        let f = FpPoly::from_i64_coeffs(&[1, -2, 1], 3); // (x-1)^2
        assert_eq!(f.distinct_root_counts().unwrap(), RootCounts { in_field: 1, in_closure: 1 });
        let f = FpPoly::from_i64_coeffs(&[3, 0, 1], 7); // x^2 + 3
        assert_eq!(f.distinct_root_counts().unwrap(), RootCounts { in_field: 2, in_closure: 2 });
        assert!(matches!(FpPoly::zero(5).distinct_root_counts(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn distinct_roots_inseparable_cases() {
        // (x+1)^2 = x^2 + 1 over F_2: derivative vanishes.
        let f = FpPoly::new(vec![1, 0, 1], 2);
        assert_eq!(f.distinct_root_counts().unwrap(), RootCounts { in_field: 1, in_closure: 1 });
        // (x^3 - 1)(x - 1) over F_3: x^3 - 1 = (x-1)^3.
        let f = FpPoly::from_i64_coeffs(&[-1, 0, 0, 1], 3).mul(&FpPoly::x_minus(2, 3));
        let rc = f.distinct_root_counts().unwrap();
        assert_eq!(rc.in_closure, 2);
        assert!(rc.in_field <= rc.in_closure);
    }

    #[test]
    fn substitute_power_examples() {
        let f = FpPoly::from_i64_coeffs(&[2, -1, 1], 7);
        assert_eq!(f.substitute_power(1), f);
        let f = FpPoly::from_i64_coeffs(&[-1, 1], 5);
        assert_eq!(f.substitute_power(3), FpPoly::from_i64_coeffs(&[-1, 0, 0, 1], 5));
        let f = FpPoly::from_i64_coeffs(&[3, 0, 1], 7);
        assert_eq!(f.substitute_power(2), FpPoly::from_i64_coeffs(&[3, 0, 0, 0, 1], 7));
    }

    #[test]
    fn matrix_inverse_round_trip() {
        let mut stream = crate::rng::SeedStream::new(77);
        for ell in [2u64, 3, 5, 7, 13] {
            for n in 1..=4usize {
                let mut found = 0;
                while found < 10 {
                    let entries: Vec<u64> =
                        (0..n * n).map(|_| stream.next_below(ell)).collect();
                    let m = FpMatrix::new(n, entries, ell);
                    if m.det().is_zero() {
                        continue;
                    }
                    found += 1;
                    let inv = m.inverse().expect("nonsingular");
                    assert_eq!(m.mul(&inv), FpMatrix::identity(n, ell));
                }
            }
        }
        assert!(FpMatrix::new(2, vec![1, 1, 1, 1], 5).inverse().is_none());
    }

    #[test]
    fn poly_division_and_gcd() {
        let ell = 13;
        let a = FpPoly::from_i64_coeffs(&[-1, 0, 1], ell); // (x-1)(x+1)
        let b = FpPoly::x_minus(1, ell);
        let (q, r) = a.divrem(&b);
        assert!(r.is_zero());
        assert_eq!(q, FpPoly::from_i64_coeffs(&[1, 1], ell));
        assert_eq!(a.gcd(&b), b);
        assert_eq!(a.gcd(&FpPoly::zero(ell)), a);
    }
}
