//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! A [`Cyclotomic`] is a rational linear combination of powers of a fixed
//! primitive n-th root of unity ζ_n = e^{2πi/n}, stored in canonical form:
//! the coefficient vector of its reduction modulo the n-th cyclotomic
//! polynomial Φ_n on the power basis ζ_n^0, …, ζ_n^{φ(n)-1}.  Since Φ_n is
//! the minimal polynomial of ζ_n, canonical forms at a fixed conductor are
//! unique, so exact equality of values is coefficient equality after lifting
//! both operands to the least common multiple of their conductors.
//!
//! Every operation is exact; the only floating-point code is the
//! display-oriented [`Cyclotomic::to_complex`].
//!
//! # Examples
//!
//! ```
//! use fuscat_core::cyclo::Cyclotomic;
//!
//! let z3 = Cyclotomic::root_of_unity(3, 1).unwrap();
//! let sum = &z3 + &z3.pow(2);
//! assert_eq!(sum, Cyclotomic::from_integer(-1));
//! assert_eq!(z3.order_as_root_of_unity(), Some(3));
//! ```

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used for cyclotomic coefficients.
pub type Rational = BigRational;

/// Conductors larger than this would allocate unreasonably large coefficient
/// vectors; operations that would exceed it panic with a clear message.
pub const MAX_CONDUCTOR: u64 = 1 << 20;

/// Errors from cyclotomic constructors and partial operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CycloError {
    /// A conductor of zero was requested.
    ZeroConductor,
    /// `galois(r)` needs gcd(r, n) = 1; this records the offending pair.
    NotCoprime { r: i64, conductor: u64 },
    /// Multiplicative inverse of zero.
    DivisionByZero,
    /// `lift_to(m)` needs the current conductor to divide `m`.
    NotASubfield { from: u64, to: u64 },
}

impl fmt::Display for CycloError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CycloError::ZeroConductor => write!(f, "conductor must be positive"),
            CycloError::NotCoprime { r, conductor } => {
                write!(f, "galois exponent {r} is not coprime to conductor {conductor}")
            }
            CycloError::DivisionByZero => write!(f, "division by zero"),
            CycloError::NotASubfield { from, to } => {
                write!(f, "Q(zeta_{from}) is not a subfield of Q(zeta_{to}): {from} does not divide {to}")
            }
        }
    }
}

impl core::error::Error for CycloError {}

/// All positive divisors of `n` in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of zero are not defined");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Moebius function μ(n); 0 unless n is squarefree.
fn moebius(mut n: u64) -> i32 {
    let mut primes = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            primes += 1;
        }
        p += 1;
    }
    if n > 1 {
        primes += 1;
    }
    if primes % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Euler totient φ(n) (equals deg Φ_n).
#[cfg(test)]
pub(crate) fn euler_phi(mut n: u64) -> u64 {
    assert!(n > 0);
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Multiply the polynomial `poly` (little-endian coefficients) by x^d - 1.
fn mul_by_xd_minus_1(poly: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; poly.len() + d];
    for (i, &c) in poly.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

/// Divide the polynomial `poly` exactly by x^d - 1 (remainder must vanish).
fn div_by_xd_minus_1(poly: &[i64], d: usize) -> Vec<i64> {
    let mut rem = poly.to_vec();
    let deg = rem.len() - 1;
    let mut quot = vec![0i64; rem.len() - d];
    for i in (d..=deg).rev() {
        let c = rem[i];
        quot[i - d] = c;
        rem[i] = 0;
        rem[i - d] += c;
    }
    assert!(rem.iter().all(|&c| c == 0), "division by x^{d} - 1 left a remainder");
    quot
}

/// Coefficients of the n-th cyclotomic polynomial Φ_n, little-endian.
///
/// Uses the Moebius factorization Φ_n = Π_{d|n} (x^d - 1)^{μ(n/d)}:
/// multiply out the factors with μ = 1, then divide exactly by those with
/// μ = -1.  All intermediate coefficients stay tiny (bounded by 2^ω(n)).
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    assert!(n > 0, "cyclotomic polynomial needs a positive index");
    let mut poly = vec![1i64];
    let divs = divisors(n);
    for &d in &divs {
        if moebius(n / d) == 1 {
            poly = mul_by_xd_minus_1(&poly, d as usize);
        }
    }
    for &d in &divs {
        if moebius(n / d) == -1 {
            poly = div_by_xd_minus_1(&poly, d as usize);
        }
    }
    poly
}

fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Reduce a full-length power-basis vector modulo Φ_n in place, zeroing
/// every index ≥ φ(n).
fn reduce_mod_phi(n: u64, coeffs: &mut [Rational]) {
    if n == 1 {
        return;
    }
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    for i in (deg..n as usize).rev() {
        if coeffs[i].is_zero() {
            continue;
        }
        let q = core::mem::replace(&mut coeffs[i], Rational::zero());
        // x^i = x^{i-deg}·x^deg and x^deg ≡ -Σ_{j<deg} Φ_j x^j.
        for (j, &pc) in phi.iter().take(deg).enumerate() {
            if pc != 0 {
                let delta = &q * rat(pc);
                coeffs[i - deg + j] -= delta;
            }
        }
    }
}

/// An element of Q(ζ_n) in canonical form.
///
/// Invariants: `coeffs.len() == conductor`, the entries at indices
/// ≥ φ(conductor) are zero (reduction mod Φ_n), and a value that is rational
/// or zero is stored at conductor 1.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// The zero element (conductor 1).
    pub fn zero() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Rational::zero()] }
    }

    /// The unit element (conductor 1).
    pub fn one() -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![Rational::one()] }
    }

    /// Embed a rational number.
    pub fn from_rational(q: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![q] }
    }

    /// Embed an integer.
    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(rat(k))
    }

    /// ζ_n^k for the fixed primitive root ζ_n = e^{2πi/n}; `k` may be
    /// negative (it is reduced mod n).  The result is stored at the minimal
    /// conductor n/gcd(k, n).
    ///
    /// # Errors
    ///
    /// [`CycloError::ZeroConductor`] if `n == 0`.
    pub fn root_of_unity(n: u64, k: i64) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        assert!(n <= MAX_CONDUCTOR, "conductor {n} exceeds the supported bound {MAX_CONDUCTOR}");
        let k = k.rem_euclid(n as i64) as u64;
        let g = k.gcd(&n);
        let (n, k) = (n / g, k / g);
        let mut coeffs = vec![Rational::zero(); n as usize];
        coeffs[k as usize] = Rational::one();
        Ok(Self::canonical(n, coeffs))
    }

    /// Construct from raw power-basis data: value Σ coeffs[j]·ζ_n^j.
    /// Indices past `n` are not accepted; the vector is padded to length n.
    ///
    /// # Errors
    ///
    /// [`CycloError::ZeroConductor`] if `n == 0`.
    pub fn from_coeffs(n: u64, mut coeffs: Vec<Rational>) -> Result<Self, CycloError> {
        if n == 0 {
            return Err(CycloError::ZeroConductor);
        }
        assert!(n <= MAX_CONDUCTOR, "conductor {n} exceeds the supported bound {MAX_CONDUCTOR}");
        assert!(coeffs.len() <= n as usize, "coefficient vector longer than the conductor");
        coeffs.resize(n as usize, Rational::zero());
        Ok(Self::canonical(n, coeffs))
    }

    /// Reduce a full-length coefficient vector mod Φ_n and normalize
    /// rational values down to conductor 1.
    fn canonical(n: u64, mut coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), n as usize);
        reduce_mod_phi(n, &mut coeffs);
        if coeffs[1..].iter().all(Rational::is_zero) {
            coeffs.truncate(1);
            return Cyclotomic { conductor: 1, coeffs };
        }
        Cyclotomic { conductor: n, coeffs }
    }

    /// The conductor n of the field Q(ζ_n) this value is stored in.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Canonical coefficients on the power basis ζ^0, …, ζ^{n-1}
    /// (entries at indices ≥ φ(n) are zero).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact test against zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Exact test against one.
    pub fn is_one(&self) -> bool {
        self == &Cyclotomic::one()
    }

    /// Re-express the value in Q(ζ_m); the current conductor must divide m.
    ///
    /// # Errors
    ///
    /// [`CycloError::NotASubfield`] if the current conductor does not
    /// divide `m`, [`CycloError::ZeroConductor`] if `m == 0`.
    pub fn lift_to(&self, m: u64) -> Result<Self, CycloError> {
        if m == 0 {
            return Err(CycloError::ZeroConductor);
        }
        if !m.is_multiple_of(self.conductor) {
            return Err(CycloError::NotASubfield { from: self.conductor, to: m });
        }
        assert!(m <= MAX_CONDUCTOR, "conductor {m} exceeds the supported bound {MAX_CONDUCTOR}");
        Ok(Self::canonical(m, self.lift_coeffs(m)))
    }

    /// The value's length-m reduced coefficient vector in Q(ζ_m), without
    /// conductor normalization; m must be a multiple of the conductor.
    fn lift_coeffs(&self, m: u64) -> Vec<Rational> {
        debug_assert_eq!(m % self.conductor, 0, "lift target must be a multiple");
        assert!(m <= MAX_CONDUCTOR, "conductor {m} exceeds the supported bound {MAX_CONDUCTOR}");
        let stride = (m / self.conductor) as usize;
        let mut coeffs = vec![Rational::zero(); m as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                coeffs[j * stride] = c.clone();
            }
        }
        reduce_mod_phi(m, &mut coeffs);
        coeffs
    }

    /// Exact sum.
    pub fn add(&self, other: &Self) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let mut a = self.lift_coeffs(m);
        let b = other.lift_coeffs(m);
        for (x, y) in a.iter_mut().zip(b.iter()) {
            *x += y;
        }
        Self::canonical(m, a)
    }

    /// Exact difference.
    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Exact product.
    pub fn mul(&self, other: &Self) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let a = self.lift_coeffs(m);
        let b = other.lift_coeffs(m);
        let n = m as usize;
        let mut coeffs = vec![Rational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = (i + j) % n;
                coeffs[k] += x * y;
            }
        }
        Self::canonical(m, coeffs)
    }

    /// Exact negation.
    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|c| -c).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// Multiply by an exact rational scalar.
    pub fn scale_by_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        let coeffs = self.coeffs.iter().map(|c| c * q).collect();
        Cyclotomic { conductor: self.conductor, coeffs }
    }

    /// k-th power by binary exponentiation; `pow(0)` is one.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Apply the Galois automorphism ζ_n ↦ ζ_n^r (requires gcd(r, n) = 1).
    ///
    /// # Errors
    ///
    /// [`CycloError::NotCoprime`] when gcd(r mod n, n) ≠ 1.
    pub fn galois(&self, r: i64) -> Result<Self, CycloError> {
        let n = self.conductor;
        let rm = r.rem_euclid(n as i64) as u64;
        if rm.gcd(&n) != 1 {
            return Err(CycloError::NotCoprime { r, conductor: n });
        }
        let mut coeffs = vec![Rational::zero(); n as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let k = (j as u64 * rm % n) as usize;
                coeffs[k] += c;
            }
        }
        Ok(Self::canonical(n, coeffs))
    }

    /// Complex conjugation, i.e. the Galois automorphism ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.conductor;
        self.galois(n as i64 - 1).expect("n-1 is always coprime to n")
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]
    /// modulo Φ_n (Φ_n is irreducible, so every nonzero value is a unit).
    ///
    /// # Errors
    ///
    /// [`CycloError::DivisionByZero`] on zero input.
    pub fn inv(&self) -> Result<Self, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        let n = self.conductor;
        if n == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let phi: Vec<Rational> = cyclotomic_poly(n).into_iter().map(rat).collect();
        let a: Vec<Rational> = self.coeffs.clone();
        // Extended Euclid: maintain r0 = s0·a (mod Φ), r1 = s1·a (mod Φ).
        let mut r0 = phi;
        let mut r1 = poly_trim(a);
        let mut s0 = vec![Rational::zero()];
        let mut s1 = vec![Rational::one()];
        while !poly_is_zero(&r1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant gcd (Φ_n irreducible, a nonzero, deg a < deg Φ).
        debug_assert_eq!(poly_trim(r0.clone()).len(), 1, "gcd with an irreducible must be constant");
        let c = r0[0].recip();
        let mut coeffs: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
        coeffs.resize(n as usize, Rational::zero());
        Ok(Self::canonical(n, coeffs))
    }

    /// If this value is a root of unity, its exact multiplicative order.
    ///
    /// The roots of unity inside Q(ζ_n) all have order dividing 2n (they
    /// form μ_n for even n and μ_{2n} for odd n), so it suffices to test the
    /// divisors of 2n.
    pub fn order_as_root_of_unity(&self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        divisors(2 * self.conductor).into_iter().find(|&d| self.pow(d).is_one())
    }

    /// The exact rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Approximate complex value (re, im).  Display-only helper; every
    /// comparison in the library is exact.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let x = c.to_f64().expect("rational out of f64 range");
            let angle = core::f64::consts::TAU * (j as f64) / n;
            re += x * libm::cos(angle);
            im += x * libm::sin(angle);
        }
        (re, im)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let m = self.conductor.lcm(&other.conductor);
        self.lift_coeffs(m) == other.lift_coeffs(m)
    }
}

impl Eq for Cyclotomic {}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::add(self, rhs)
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::sub(self, rhs)
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::mul(self, rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}

/// Compact exact rendering: rationals as `p/q`, roots of unity as `z{n}^{k}`,
/// general values as signed sums like `1/2*z8^3 - z8 + 2`.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rational)> =
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let render = |j: usize, c: &Rational, lead: bool, out: &mut fmt::Formatter<'_>| -> fmt::Result {
            let mag = c.abs();
            let negative = c.is_negative();
            if lead {
                if negative {
                    write!(out, "-")?;
                }
            } else if negative {
                write!(out, " - ")?;
            } else {
                write!(out, " + ")?;
            }
            if j == 0 {
                return write!(out, "{mag}");
            }
            if !mag.is_one() {
                write!(out, "{mag}*")?;
            }
            write!(out, "z{}", self.conductor)?;
            if j > 1 {
                write!(out, "^{j}")?;
            }
            Ok(())
        };
        // Highest power first reads like a polynomial.
        for (pos, (j, c)) in terms.iter().rev().enumerate() {
            render(*j, c, pos == 0, f)?;
        }
        Ok(())
    }
}

/// Parse back the `Display` rendering (used by the IO layer round-trips).
impl Cyclotomic {
    /// Exact string form (same as `Display`); convenience for report code.
    pub fn to_exact_string(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}

// ---- dense polynomial helpers over Q (little-endian, for `inv`) ----

fn poly_trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.len() > 1 && p.last().map(Rational::is_zero).unwrap_or(false) {
        p.pop();
    }
    p
}

fn poly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(Rational::is_zero)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    poly_trim(out)
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if poly_is_zero(a) || poly_is_zero(b) {
        return vec![Rational::zero()];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    poly_trim(out)
}

/// Division with remainder in Q[x]: returns (q, r) with a = q·b + r.
fn poly_divmod(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = poly_trim(b.to_vec());
    assert!(!poly_is_zero(&b), "polynomial division by zero");
    let mut r = poly_trim(a.to_vec());
    if r.len() < b.len() {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while !poly_is_zero(&r) && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let coef = r.last().unwrap() / &lead;
        q[shift] = coef.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = c * &coef;
            r[shift + i] -= delta;
        }
        r = poly_trim(r);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
    }
    (poly_trim(q), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z(n: u64, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials_match_known_tables() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(105).len() as u64, euler_phi(105) + 1);
    }

    #[test]
    fn primitive_third_roots_sum_to_minus_one() {
        let sum = &z(3, 1) + &z(3, 2);
        assert_eq!(sum, Cyclotomic::from_integer(-1));
    }

    #[test]
    fn fourth_root_squares_to_minus_one() {
        assert_eq!(z(4, 1).pow(2), Cyclotomic::from_integer(-1));
        // The canonical form of a rational value drops to conductor 1.
        assert_eq!(z(4, 1).pow(2).conductor(), 1);
    }

    #[test]
    fn root_constructor_reduces_to_minimal_conductor() {
        assert_eq!(z(12, 4), z(3, 1));
        assert_eq!(z(12, 4).conductor(), 3);
        assert_eq!(z(8, 0), Cyclotomic::one());
        assert_eq!(z(5, -1), z(5, 4));
    }

    #[test]
    fn equality_lifts_across_conductors() {
        let a = z(12, 1).mul(&z(12, 1)); // ζ12² computed at conductor 12
        let b = z(6, 1);
        assert_eq!(a, b);
        assert_ne!(z(8, 1), z(8, 3));
    }

    #[test]
    fn orders_of_roots_of_unity() {
        assert_eq!(z(6, 1).order_as_root_of_unity(), Some(6));
        assert_eq!(z(7, 3).order_as_root_of_unity(), Some(7));
        assert_eq!(Cyclotomic::one().order_as_root_of_unity(), Some(1));
        assert_eq!(Cyclotomic::from_integer(-1).order_as_root_of_unity(), Some(2));
        // -ζ3 = ζ6^5 has order 6 even though it lives in Q(ζ3).
        assert_eq!(z(3, 1).neg().order_as_root_of_unity(), Some(6));
        // 1 + ζ3 = -ζ3² is again a sixth root of unity.
        let s = &Cyclotomic::one() + &z(3, 1);
        assert_eq!(s.order_as_root_of_unity(), Some(6));
        // Non-roots report None.
        assert_eq!(Cyclotomic::from_integer(2).order_as_root_of_unity(), None);
        let t = &Cyclotomic::one() + &z(5, 1);
        assert_eq!(t.order_as_root_of_unity(), None);
        assert_eq!(Cyclotomic::zero().order_as_root_of_unity(), None);
    }

    #[test]
    fn galois_requires_coprime_exponent() {
        assert_eq!(
            z(8, 1).galois(2),
            Err(CycloError::NotCoprime { r: 2, conductor: 8 })
        );
        assert_eq!(z(8, 1).galois(3).unwrap(), z(8, 3));
        assert_eq!(z(8, 1).galois(-3).unwrap(), z(8, 5));
    }

    #[test]
    fn conjugation_inverts_roots() {
        assert_eq!(z(8, 1).conj(), z(8, 7));
        let a = &z(5, 1) + &Cyclotomic::from_integer(2);
        assert_eq!(a.conj().conj(), a);
        // x·conj(x) of a root of unity is 1.
        assert_eq!(z(12, 5).mul(&z(12, 5).conj()), Cyclotomic::one());
    }

    #[test]
    fn inverse_times_self_is_one() {
        let a = &z(5, 1) + &Cyclotomic::from_integer(2);
        assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic::one());
        let b = &z(8, 3) - &z(8, 1);
        assert_eq!(b.mul(&b.inv().unwrap()), Cyclotomic::one());
        assert_eq!(Cyclotomic::zero().inv(), Err(CycloError::DivisionByZero));
    }

    #[test]
    fn rational_detection() {
        assert_eq!(z(5, 1).mul(&z(5, 4)).as_rational(), Some(Rational::one()));
        assert_eq!(z(5, 1).as_rational(), None);
        let half = Rational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(
            Cyclotomic::from_rational(half.clone()).as_rational(),
            Some(half)
        );
    }

    #[test]
    fn display_is_compact_and_exact() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_integer(-1).to_string(), "-1");
        assert_eq!(z(8, 3).to_string(), "z8^3");
        let v = &(&z(8, 3) - &z(8, 1)) + &Cyclotomic::from_integer(2);
        assert_eq!(v.to_string(), "z8^3 - z8 + 2");
        let half = Rational::new(BigInt::from(-1), BigInt::from(2));
        let w = z(4, 1).scale_by_rational(&half);
        assert_eq!(w.to_string(), "-1/2*z4");
    }

    #[test]
    fn to_complex_matches_known_angles() {
        let (re, im) = z(4, 1).to_complex();
        assert!((re - 0.0).abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
        let (re, im) = Cyclotomic::from_integer(-3).to_complex();
        assert!((re + 3.0).abs() < 1e-12 && im.abs() < 1e-12);
    }

    fn random_cyclotomic(rng: &mut ChaCha8Rng, conductors: &[u64]) -> Cyclotomic {
        let n = conductors[rng.gen_range(0..conductors.len())];
        let mut coeffs = vec![Rational::zero(); n as usize];
        for c in coeffs.iter_mut() {
            if rng.gen_bool(0.4) {
                let num = rng.gen_range(-3i64..=3);
                let den = rng.gen_range(1i64..=3);
                *c = Rational::new(BigInt::from(num), BigInt::from(den));
            }
        }
        Cyclotomic::from_coeffs(n, coeffs).unwrap()
    }

    #[test]
    fn ring_axioms_hold_on_random_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let conductors = [1, 2, 3, 4, 6, 8, 9, 12, 16, 24, 36, 48];
        for _ in 0..40 {
            let a = random_cyclotomic(&mut rng, &conductors);
            let b = random_cyclotomic(&mut rng, &conductors);
            let c = random_cyclotomic(&mut rng, &conductors);
            assert_eq!(a.add(&b), b.add(&a));
            assert_eq!(a.mul(&b), b.mul(&a));
            assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            assert_eq!(a.add(&a.neg()), Cyclotomic::zero());
            assert_eq!(a.mul(&Cyclotomic::one()), a);
            assert_eq!(a.conj().conj(), a);
            assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        }
    }

    #[test]
    fn lifting_commutes_with_arithmetic() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let conductors = [1, 2, 3, 4, 6, 8, 12];
        for _ in 0..40 {
            let a = random_cyclotomic(&mut rng, &conductors);
            let b = random_cyclotomic(&mut rng, &conductors);
            let m = a.conductor().lcm(&b.conductor()) * 2;
            let direct = a.add(&b).lift_to(m).unwrap();
            let lifted = a.lift_to(m).unwrap().add(&b.lift_to(m).unwrap());
            assert_eq!(direct, lifted);
            let direct = a.mul(&b).lift_to(m).unwrap();
            let lifted = a.lift_to(m).unwrap().mul(&b.lift_to(m).unwrap());
            assert_eq!(direct, lifted);
        }
    }

    #[test]
    fn galois_composition_and_norm_positivity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let conductors = [3, 4, 5, 8, 12];
        for _ in 0..30 {
            let a = random_cyclotomic(&mut rng, &conductors);
            let n = a.conductor() as i64;
            // pick r, s coprime to the conductor
            let units: Vec<i64> = (1..n.max(2))
                .filter(|r| (r.rem_euclid(n) as u64).gcd(&(n as u64)) == 1)
                .collect();
            let r = units[rng.gen_range(0..units.len())];
            let s = units[rng.gen_range(0..units.len())];
            let one_step = a.galois(r * s % n).unwrap();
            let two_step = a.galois(s).unwrap().galois(r).unwrap();
            assert_eq!(one_step, two_step);
            // x·conj(x): when rational, it must be nonnegative.
            if let Some(q) = a.mul(&a.conj()).as_rational() {
                assert!(!q.is_negative());
            }
        }
    }

    #[test]
    fn inverse_of_random_nonzero_elements() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let conductors = [2, 3, 4, 5, 8, 9, 12];
        let mut checked = 0;
        while checked < 15 {
            let a = random_cyclotomic(&mut rng, &conductors);
            if a.is_zero() {
                continue;
            }
            assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic::one());
            checked += 1;
        }
    }
}
