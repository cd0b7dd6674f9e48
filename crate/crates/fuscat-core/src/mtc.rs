//! Modular data: exact (S, θ) pairs or fusion rings with twists, validated
//! against the modular axioms, with Verlinde fusion, the indicator formula
//! on modular data, and exponent diagnostics.
//!
//! A [`ModularData`] bundle stores twists as exact rational rotation
//! numbers (θ_i = ζ^{p_i/q_i} as a [`Twist`]), dimensions and S-entries as
//! exact cyclotomic numbers, and the fusion tensor as nonnegative integers.
//! Two ingestion paths are supported: supply the S-matrix and derive fusion
//! through the Verlinde formula
//!
//!   N^j_{ik} = Σ_r s_{ir} s_{kr} s_{j̄r} / s_{0r},
//!
//! or supply the fusion tensor directly alongside dims, twists, and the
//! global dimension (no square root of the dimension is ever needed on
//! that path).  When both are present they must agree.
//!
//! The n-th indicator of X_j is evaluated by the formula on modular data,
//!
//!   ν_n(X_j) = (1/dim) Σ_{i,k} N^j_{ik} d_i d_k (ω_i/ω_k)ⁿ,
//!
//! the FS exponent is the order lcm of the twists, and the Etingof–Gelaki
//! exponent is the order of the monodromy: the least n killing
//! (ω_k/(ω_i ω_j))ⁿ over all admissible fusion channels.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::cyclo::{Cyclotomic, Rational};

/// An exact rational as a `u64`, when it is a nonnegative integer in range.
fn rational_to_u64(q: &Rational) -> Option<u64> {
    if !q.is_integer() {
        return None;
    }
    u64::try_from(q.to_integer()).ok()
}

/// Errors from modular-data validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MtcError {
    /// Rank must be at least 1.
    EmptyRank,
    /// A field has the wrong length for the rank.
    LengthMismatch { field: &'static str, expected: usize, got: usize },
    /// A twist denominator of zero was supplied.
    ZeroDenominator,
    /// The dual map is not an involutive permutation at index i.
    DualNotInvolutive { i: usize },
    /// The unit must be self-dual.
    DualOfUnit,
    /// d_0 must be 1.
    UnitDimension,
    /// θ_0 must be 1.
    UnitTwist,
    /// d_i ≠ d_ī.
    DualDimensionMismatch { i: usize },
    /// Global dimension differs from Σ d_i d_ī.
    GlobalDimensionMismatch,
    /// S is not symmetric at (i, j).
    SNotSymmetric { i: usize, j: usize },
    /// S·conj(S)ᵀ is not the identity at (i, j).
    SNotUnitary { i: usize, j: usize },
    /// S² is not the charge conjugation permutation at (i, j).
    SSquareNotChargeConjugation { i: usize, j: usize },
    /// Row 0 of S is not s_00·d_i at index i.
    SUnitRowMismatch { i: usize },
    /// s_00² · dim ≠ 1.
    SGlobalDimMismatch,
    /// An entry s_{0r} = 0 makes the Verlinde formula ill-defined.
    SEntryNotInvertible { r: usize },
    /// The Verlinde sum for N^j_{ik} is not a nonnegative integer.
    VerlindeNotNonnegativeInteger { i: usize, k: usize, j: usize },
    /// Neither an S-matrix nor a fusion tensor was supplied.
    FusionSourceMissing,
    /// Supplied fusion tensor disagrees with the Verlinde-derived one.
    FusionMismatch { i: usize, j: usize, k: usize },
    /// A unit/duality/commutativity axiom of the fusion ring fails.
    FusionAxiom { rule: &'static str, i: usize, j: usize, k: usize },
    /// Fusion is not associative on (i, j, k) at target l.
    FusionNotAssociative { i: usize, j: usize, k: usize, l: usize },
    /// d_i·d_j ≠ Σ_k N^k_{ij} d_k.
    DimensionRule { i: usize, j: usize },
    /// The balancing identity fails at (i, j).
    BalancingIdentity { i: usize, j: usize },
    /// No bundled fixture has the requested name.
    UnknownFixture { name: String },
}

impl fmt::Display for MtcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MtcError::EmptyRank => write!(f, "rank must be at least 1"),
            MtcError::LengthMismatch { field, expected, got } => {
                write!(f, "{field} has length {got}, expected {expected}")
            }
            MtcError::ZeroDenominator => write!(f, "twist denominator must be nonzero"),
            MtcError::DualNotInvolutive { i } => {
                write!(f, "dual map is not an involutive permutation at {i}")
            }
            MtcError::DualOfUnit => write!(f, "the unit object must be self-dual"),
            MtcError::UnitDimension => write!(f, "d_0 must equal 1"),
            MtcError::UnitTwist => write!(f, "the unit twist must equal 1"),
            MtcError::DualDimensionMismatch { i } => write!(f, "d_{i} differs from its dual"),
            MtcError::GlobalDimensionMismatch => {
                write!(f, "global dimension is not the sum of d_i·d_dual(i)")
            }
            MtcError::SNotSymmetric { i, j } => write!(f, "S not symmetric at ({i}, {j})"),
            MtcError::SNotUnitary { i, j } => write!(f, "S not unitary at ({i}, {j})"),
            MtcError::SSquareNotChargeConjugation { i, j } => {
                write!(f, "S² is not charge conjugation at ({i}, {j})")
            }
            MtcError::SUnitRowMismatch { i } => {
                write!(f, "s_0{i} does not equal s_00·d_{i}")
            }
            MtcError::SGlobalDimMismatch => write!(f, "s_00²·dim does not equal 1"),
            MtcError::SEntryNotInvertible { r } => write!(f, "s_0{r} vanishes"),
            MtcError::VerlindeNotNonnegativeInteger { i, k, j } => {
                write!(f, "Verlinde sum N^{j}_{{{i},{k}}} is not a nonnegative integer")
            }
            MtcError::FusionSourceMissing => {
                write!(f, "need an S-matrix or an explicit fusion tensor")
            }
            MtcError::FusionMismatch { i, j, k } => {
                write!(f, "supplied fusion differs from the Verlinde fusion at ({i}, {j}, {k})")
            }
            MtcError::FusionAxiom { rule, i, j, k } => {
                write!(f, "fusion axiom '{rule}' fails at ({i}, {j}, {k})")
            }
            MtcError::FusionNotAssociative { i, j, k, l } => {
                write!(f, "fusion not associative on ({i}, {j}, {k}) at {l}")
            }
            MtcError::DimensionRule { i, j } => {
                write!(f, "d_{i}·d_{j} is not the fusion-weighted dimension sum")
            }
            MtcError::BalancingIdentity { i, j } => {
                write!(f, "balancing identity fails at ({i}, {j})")
            }
            MtcError::UnknownFixture { name } => write!(f, "no bundled fixture named '{name}'"),
        }
    }
}

impl core::error::Error for MtcError {}

/// An exact twist ω = exp(2πi·p/q), stored as the reduced rotation number
/// p/q normalized into [0, 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Twist {
    rotation: Rational64,
}

impl Twist {
    /// Reduce and normalize a rotation number.
    ///
    /// # Errors
    ///
    /// [`MtcError::ZeroDenominator`].
    pub fn new(num: i64, den: i64) -> Result<Self, MtcError> {
        if den == 0 {
            return Err(MtcError::ZeroDenominator);
        }
        let mut rotation = Rational64::new(num, den);
        rotation -= rotation.floor();
        Ok(Twist { rotation })
    }

    /// The trivial twist 1.
    pub fn one() -> Self {
        Twist { rotation: Rational64::zero() }
    }

    /// Reduced numerator in [0, den).
    pub fn numer(&self) -> i64 {
        *self.rotation.numer()
    }

    /// Reduced denominator ≥ 1.
    pub fn denom(&self) -> i64 {
        *self.rotation.denom()
    }

    /// Multiplicative order of the twist as a root of unity.
    pub fn order(&self) -> u64 {
        self.denom() as u64
    }

    /// The twist as an exact cyclotomic number.
    pub fn value(&self) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.denom() as u64, self.numer())
            .expect("denominator is positive")
    }

    /// ωⁿ as an exact cyclotomic number.
    pub fn power(&self, n: i64) -> Cyclotomic {
        let q = self.denom() as i128;
        let k = (n as i128 * self.numer() as i128).rem_euclid(q) as i64;
        Cyclotomic::root_of_unity(q as u64, k).expect("denominator is positive")
    }
}

/// Validated modular data: twists, dimensions, optional S-matrix, and the
/// fusion tensor (supplied or Verlinde-derived).
#[derive(Clone, Debug)]
pub struct ModularData {
    labels: Vec<String>,
    rank: usize,
    dual: Vec<usize>,
    twists: Vec<Twist>,
    dims: Vec<Cyclotomic>,
    global_dim: Cyclotomic,
    s: Option<Vec<Vec<Cyclotomic>>>,
    /// flat (i·r + j)·r + k ↦ N^k_{ij}
    fusion: Vec<u64>,
}

impl ModularData {
    /// Validate a full bundle.  `fusion` is flat with N^k_{ij} at
    /// `(i·r + j)·r + k`; at least one of `s`, `fusion` must be present.
    ///
    /// # Errors
    ///
    /// The first failed axiom, with witnessing indices.
    pub fn new(
        labels: Vec<String>,
        dual: Vec<usize>,
        twists: Vec<Twist>,
        dims: Vec<Cyclotomic>,
        global_dim: Cyclotomic,
        s: Option<Vec<Vec<Cyclotomic>>>,
        fusion: Option<Vec<u64>>,
    ) -> Result<Self, MtcError> {
        let r = dual.len();
        if r == 0 {
            return Err(MtcError::EmptyRank);
        }
        let expect_len = |field: &'static str, got: usize, expected: usize| {
            if got == expected {
                Ok(())
            } else {
                Err(MtcError::LengthMismatch { field, expected, got })
            }
        };
        expect_len("labels", labels.len(), r)?;
        expect_len("twists", twists.len(), r)?;
        expect_len("dims", dims.len(), r)?;
        if let Some(s) = &s {
            expect_len("s_matrix", s.len(), r)?;
            for row in s {
                expect_len("s_matrix row", row.len(), r)?;
            }
        }
        if let Some(fusion) = &fusion {
            expect_len("fusion", fusion.len(), r * r * r)?;
        }

        for (i, &d) in dual.iter().enumerate() {
            if d >= r || dual[d] != i {
                return Err(MtcError::DualNotInvolutive { i });
            }
        }
        if dual[0] != 0 {
            return Err(MtcError::DualOfUnit);
        }
        if !dims[0].is_one() {
            return Err(MtcError::UnitDimension);
        }
        if twists[0] != Twist::one() {
            return Err(MtcError::UnitTwist);
        }
        for i in 0..r {
            if dims[i] != dims[dual[i]] {
                return Err(MtcError::DualDimensionMismatch { i });
            }
        }
        let dim_sum = (0..r).fold(Cyclotomic::zero(), |acc, i| {
            acc.add(&dims[i].mul(&dims[dual[i]]))
        });
        if dim_sum != global_dim || global_dim.is_zero() {
            return Err(MtcError::GlobalDimensionMismatch);
        }

        if let Some(s) = &s {
            validate_s_matrix(s, &dual, &dims, &global_dim)?;
        }

        let fusion = match (&s, fusion) {
            (Some(s), supplied) => {
                let derived = verlinde_tensor(s, &dual)?;
                if let Some(supplied) = supplied {
                    for i in 0..r {
                        for j in 0..r {
                            for k in 0..r {
                                let idx = (i * r + j) * r + k;
                                if supplied[idx] != derived[idx] {
                                    return Err(MtcError::FusionMismatch { i, j, k });
                                }
                            }
                        }
                    }
                }
                derived
            }
            (None, Some(supplied)) => supplied,
            (None, None) => return Err(MtcError::FusionSourceMissing),
        };

        let data = ModularData { labels, rank: r, dual, twists, dims, global_dim, s, fusion };
        data.validate_fusion_ring()?;
        if data.s.is_some() {
            data.validate_balancing()?;
        }
        Ok(data)
    }

    fn validate_fusion_ring(&self) -> Result<(), MtcError> {
        let r = self.rank;
        let n = |i: usize, j: usize, k: usize| self.fusion[(i * r + j) * r + k];
        for i in 0..r {
            for k in 0..r {
                let unit = u64::from(i == k);
                if n(0, i, k) != unit {
                    return Err(MtcError::FusionAxiom { rule: "left unit", i: 0, j: i, k });
                }
                if n(i, 0, k) != unit {
                    return Err(MtcError::FusionAxiom { rule: "right unit", i, j: 0, k });
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                if n(i, j, 0) != u64::from(j == self.dual[i]) {
                    return Err(MtcError::FusionAxiom { rule: "duality", i, j, k: 0 });
                }
                for k in 0..r {
                    if n(i, j, k) != n(j, i, k) {
                        return Err(MtcError::FusionAxiom { rule: "commutativity", i, j, k });
                    }
                    if n(i, j, k) != n(self.dual[i], self.dual[j], self.dual[k]) {
                        return Err(MtcError::FusionAxiom { rule: "dual symmetry", i, j, k });
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let lhs: u64 = (0..r).map(|x| n(i, j, x) * n(x, k, l)).sum();
                        let rhs: u64 = (0..r).map(|y| n(j, k, y) * n(i, y, l)).sum();
                        if lhs != rhs {
                            return Err(MtcError::FusionNotAssociative { i, j, k, l });
                        }
                    }
                }
            }
        }
        for i in 0..r {
            for j in 0..r {
                let mut sum = Cyclotomic::zero();
                for k in 0..r {
                    let mult = n(i, j, k);
                    if mult != 0 {
                        sum = sum.add(
                            &self.dims[k]
                                .scale_by_rational(&Rational::from_integer(mult.into())),
                        );
                    }
                }
                if sum != self.dims[i].mul(&self.dims[j]) {
                    return Err(MtcError::DimensionRule { i, j });
                }
            }
        }
        Ok(())
    }

    /// s_{ij}/s_{00} = Σ_k N^k_{ī,j} (θ_k/(θ_i θ_j)) d_k — ties S, twists,
    /// and fusion together.
    fn validate_balancing(&self) -> Result<(), MtcError> {
        let s = self.s.as_ref().expect("checked by caller");
        let r = self.rank;
        for i in 0..r {
            for j in 0..r {
                let mut rhs = Cyclotomic::zero();
                for k in 0..r {
                    let mult = self.fusion[(self.dual[i] * r + j) * r + k];
                    if mult == 0 {
                        continue;
                    }
                    let ratio = self.twists[k]
                        .power(1)
                        .mul(&self.twists[i].power(-1))
                        .mul(&self.twists[j].power(-1));
                    rhs = rhs.add(
                        &ratio
                            .mul(&self.dims[k])
                            .scale_by_rational(&Rational::from_integer(mult.into())),
                    );
                }
                if s[i][j] != s[0][0].mul(&rhs) {
                    return Err(MtcError::BalancingIdentity { i, j });
                }
            }
        }
        Ok(())
    }

    /// Bundled example data sets: `"toric"` and `"double-semion"`, the two
    /// rank-4 pointed doubles with Z/2×Z/2 fusion.
    ///
    /// # Errors
    ///
    /// [`MtcError::UnknownFixture`].
    pub fn fixture(name: &str) -> Result<Self, MtcError> {
        let half = |sign: i64| {
            Cyclotomic::from_rational(Rational::new(sign.into(), 2.into()))
        };
        let matrix = |signs: [[i64; 4]; 4]| {
            Some(signs.iter().map(|row| row.iter().map(|&x| half(x)).collect()).collect())
        };
        let ones = vec![Cyclotomic::one(); 4];
        let four = Cyclotomic::from_integer(4);
        let twists = |rotations: [(i64, i64); 4]| -> Vec<Twist> {
            rotations
                .iter()
                .map(|&(p, q)| Twist::new(p, q).expect("fixture denominators are positive"))
                .collect()
        };
        let labels = |names: [&str; 4]| names.iter().map(|s| String::from(*s)).collect();
        match name {
            "toric" => ModularData::new(
                labels(["1", "e", "m", "f"]),
                vec![0, 1, 2, 3],
                twists([(0, 1), (0, 1), (0, 1), (1, 2)]),
                ones,
                four,
                matrix([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]),
                None,
            ),
            "double-semion" => ModularData::new(
                labels(["1", "b", "s", "s'"]),
                vec![0, 1, 2, 3],
                twists([(0, 1), (0, 1), (1, 4), (3, 4)]),
                ones,
                four,
                matrix([[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, -1, 1], [1, -1, 1, -1]]),
                None,
            ),
            other => Err(MtcError::UnknownFixture { name: String::from(other) }),
        }
    }

    /// Number of simple objects.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Object labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Duality permutation.
    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    /// The twist of X_i.
    pub fn twist(&self, i: usize) -> Twist {
        self.twists[i]
    }

    /// The dimension of X_i.
    pub fn dim(&self, i: usize) -> &Cyclotomic {
        &self.dims[i]
    }

    /// The global dimension Σ d_i d_ī.
    pub fn global_dim(&self) -> &Cyclotomic {
        &self.global_dim
    }

    /// The S-matrix, when supplied.
    pub fn s_matrix(&self) -> Option<&Vec<Vec<Cyclotomic>>> {
        self.s.as_ref()
    }

    /// Fusion multiplicity N^j_{ik} of X_j in X_i ⊗ X_k.
    pub fn verlinde(&self, i: usize, k: usize, j: usize) -> u64 {
        self.fusion[(i * self.rank + k) * self.rank + j]
    }

    /// ν_n(X_j) = (1/dim) Σ_{i,k} N^j_{ik} d_i d_k (ω_i/ω_k)ⁿ.
    ///
    /// # Panics
    ///
    /// If `n == 0` or `j` is out of range.
    pub fn bantay_indicator(&self, j: usize, n: u64) -> Cyclotomic {
        assert!(n >= 1, "indicators are defined for n >= 1");
        assert!(j < self.rank, "object index out of range");
        let r = self.rank;
        let mut sum = Cyclotomic::zero();
        for i in 0..r {
            for k in 0..r {
                let mult = self.fusion[(i * r + k) * r + j];
                if mult == 0 {
                    continue;
                }
                let rotation =
                    self.twists[i].power(n as i64).mul(&self.twists[k].power(-(n as i64)));
                let term = rotation
                    .mul(&self.dims[i])
                    .mul(&self.dims[k])
                    .scale_by_rational(&Rational::from_integer(mult.into()));
                sum = sum.add(&term);
            }
        }
        sum.mul(&self.global_dim.inv().expect("global dimension is nonzero"))
    }

    /// The FS exponent: the order of the twist, lcm of the q_i.
    pub fn fs_exponent(&self) -> u64 {
        self.twists.iter().fold(1u64, |acc, t| num_integer::lcm(acc, t.order()))
    }

    /// The Etingof–Gelaki exponent: least n with (ω_k/(ω_i ω_j))ⁿ = 1 over
    /// all fusion channels N^k_{ij} ≠ 0.
    pub fn etingof_exponent(&self) -> u64 {
        let r = self.rank;
        let mut acc = 1u64;
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    if self.fusion[(i * r + j) * r + k] == 0 {
                        continue;
                    }
                    let ratio = self.twists[k].rotation
                        - self.twists[i].rotation
                        - self.twists[j].rotation;
                    acc = num_integer::lcm(acc, *ratio.denom() as u64);
                }
            }
        }
        acc
    }

    /// Structural diagnostics tying the exponents, indicators, and fusion
    /// ring to the theory; a failure marks the data set inconsistent.
    pub fn diagnostics(&self) -> Diagnostics {
        let fs = self.fs_exponent();
        let et = self.etingof_exponent();
        let ratio_in_bounds = fs.is_multiple_of(et) && fs / et <= 2;

        let integral_dims: Option<Vec<u64>> = self
            .dims
            .iter()
            .map(|d| d.as_rational().as_ref().and_then(rational_to_u64))
            .collect();
        let integral_dim: Option<u64> = self
            .global_dim
            .as_rational()
            .as_ref()
            .and_then(rational_to_u64)
            .filter(|&x| x > 0);
        let cauchy = match (&integral_dims, integral_dim) {
            (Some(_), Some(dim)) => Some(prime_set(fs) == prime_set(dim)),
            _ => None,
        };

        let second_indicators_in_range = (0..self.rank).all(|j| {
            let nu = self.bantay_indicator(j, 2);
            nu.is_zero() || nu.is_one() || nu == Cyclotomic::from_integer(-1)
        });

        let periodic = (0..self.rank).all(|j| {
            (1..=fs).all(|n| self.bantay_indicator(j, n) == self.bantay_indicator(j, n + fs))
        });

        let mut congruences = Vec::new();
        if integral_dims.is_some() {
            for p in [3u64, 5, 7] {
                if fs.is_multiple_of(p) {
                    continue;
                }
                // multiplicity of the unit in (⊕_i X_i)^{⊗p}, fusion-ring power
                let r = self.rank;
                let mut w = vec![1u128; r];
                for _ in 1..p {
                    let mut next = vec![0u128; r];
                    for (a, &wa) in w.iter().enumerate() {
                        if wa == 0 {
                            continue;
                        }
                        for b in 0..r {
                            for (k, slot) in next.iter_mut().enumerate() {
                                *slot += wa * self.fusion[(a * r + b) * r + k] as u128;
                            }
                        }
                    }
                    w = next;
                }
                congruences.push((p, w[0] % p as u128 == 1));
            }
        }

        Diagnostics {
            fs_exponent: fs,
            etingof_exponent: et,
            ratio_in_bounds,
            cauchy,
            second_indicators_in_range,
            periodic,
            congruences,
        }
    }
}

/// Outcome of [`ModularData::diagnostics`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostics {
    /// lcm of twist orders.
    pub fs_exponent: u64,
    /// Order of the monodromy on fusion channels.
    pub etingof_exponent: u64,
    /// FS exponent is the Etingof exponent or twice it.
    pub ratio_in_bounds: bool,
    /// Prime factors of the FS exponent match those of dim (None when the
    /// dimensions are not rational integers).
    pub cauchy: Option<bool>,
    /// All second indicators lie in {-1, 0, 1}.
    pub second_indicators_in_range: bool,
    /// Indicators are periodic with period the FS exponent.
    pub periodic: bool,
    /// (p, passed) for the unit-multiplicity congruence mod p.
    pub congruences: Vec<(u64, bool)>,
}

impl Diagnostics {
    /// True when every check passed.
    pub fn passed(&self) -> bool {
        self.ratio_in_bounds
            && self.cauchy.unwrap_or(true)
            && self.second_indicators_in_range
            && self.periodic
            && self.congruences.iter().all(|&(_, ok)| ok)
    }
}

fn prime_set(mut x: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        if x.is_multiple_of(p) {
            out.push(p);
            while x.is_multiple_of(p) {
                x /= p;
            }
        }
        p += 1;
    }
    if x > 1 {
        out.push(x);
    }
    out
}

fn validate_s_matrix(
    s: &[Vec<Cyclotomic>],
    dual: &[usize],
    dims: &[Cyclotomic],
    global_dim: &Cyclotomic,
) -> Result<(), MtcError> {
    let r = dual.len();
    for (i, row) in s.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            if entry != &s[j][i] {
                return Err(MtcError::SNotSymmetric { i, j });
            }
        }
    }
    for (i, row_i) in s.iter().enumerate() {
        for (j, row_j) in s.iter().enumerate() {
            let mut dot = Cyclotomic::zero();
            let mut ss = Cyclotomic::zero();
            for (k, row_k) in s.iter().enumerate() {
                dot = dot.add(&row_i[k].mul(&row_j[k].conj()));
                ss = ss.add(&row_i[k].mul(&row_k[j]));
            }
            let identity = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if dot != identity {
                return Err(MtcError::SNotUnitary { i, j });
            }
            let charge = if dual[i] == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            if ss != charge {
                return Err(MtcError::SSquareNotChargeConjugation { i, j });
            }
        }
    }
    for i in 0..r {
        if s[0][i] != s[0][0].mul(&dims[i]) {
            return Err(MtcError::SUnitRowMismatch { i });
        }
    }
    if !s[0][0].mul(&s[0][0]).mul(global_dim).is_one() {
        return Err(MtcError::SGlobalDimMismatch);
    }
    // positive square root convention: s_00 must be the positive real root
    let (re, im) = s[0][0].to_complex();
    if !(re > 0.0 && im.abs() < 1e-9) {
        return Err(MtcError::SGlobalDimMismatch);
    }
    Ok(())
}

/// Derive the fusion tensor from the S-matrix by the Verlinde formula.
fn verlinde_tensor(s: &[Vec<Cyclotomic>], dual: &[usize]) -> Result<Vec<u64>, MtcError> {
    let r = dual.len();
    let mut inv0 = Vec::with_capacity(r);
    for (idx, entry) in s[0].iter().enumerate() {
        inv0.push(entry.inv().map_err(|_| MtcError::SEntryNotInvertible { r: idx })?);
    }
    let mut fusion = vec![0u64; r * r * r];
    for i in 0..r {
        for k in 0..r {
            for j in 0..r {
                let mut sum = Cyclotomic::zero();
                for x in 0..r {
                    sum = sum
                        .add(&s[i][x].mul(&s[k][x]).mul(&s[dual[j]][x]).mul(&inv0[x]));
                }
                let value = sum
                    .as_rational()
                    .as_ref()
                    .and_then(rational_to_u64)
                    .ok_or(MtcError::VerlindeNotNonnegativeInteger { i, k, j })?;
                fusion[(i * r + k) * r + j] = value;
            }
        }
    }
    Ok(fusion)
}
