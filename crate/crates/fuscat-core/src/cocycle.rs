//! Normalized 3-cocycles on a finite group with values in the roots of
//! unity μ_m, and their cohomology.
//!
//! A [`Cocycle3`] stores the exponent table e: G³ → Z/m of a cocycle
//! ω(a,b,c) = ζ_m^{e(a,b,c)}.  Working with exponents keeps all cocycle
//! algebra in modular integer arithmetic; values are materialized as exact
//! [`Cyclotomic`] numbers on demand.  Cocycles are normalized
//! (ω(a,b,c) = 1 whenever an argument is the identity); by the standard
//! normalization theorem every cohomology class has normalized
//! representatives and cobounding can be tested within normalized cochains,
//! so the complex used throughout indexes only tuples of non-identity
//! elements.
//!
//! The linear-algebra questions — is ω a coboundary (with witness), what is
//! the order of its class, what is H³(G, μ_m) with explicit generators —
//! are answered exactly by Smith-form computations over Z/q for each prime
//! power q of m, glued by the Chinese remainder theorem (see the private
//! `linalg` module).
//!
//! The family [`Cocycle3::omega_t`] on Z/N with values in μ_{N²},
//!
//! ω_t(l, m, n) = ζ_{N²}^{ t·⟨l⟩(⟨m⟩ + ⟨n⟩ - ⟨m+n⟩) },   ⟨x⟩ = x mod N,
//!
//! represents the class t ∈ Z/N ≅ H³(Z/N, C^×) and drives the worked
//! examples and acceptance tests of the pointed-category layer.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::{divisors, Cyclotomic};
use crate::grp::{FiniteGroup, Subgroup};
use crate::linalg::{crt_combine, prime_powers, DiagOptions, LocalDiag, PrimePower};

/// Moduli above this would materialize unreasonably large cyclotomic
/// values; constructors reject them.
pub const MAX_MODULUS: u64 = 1 << 20;

/// Cap on dense matrix cells for the cohomology solvers; systems beyond it
/// are refused rather than silently thrashing.
const MAX_MATRIX_CELLS: usize = 8_000_000;

/// Errors from cocycle constructors and operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocycleError {
    /// Modulus 0 was supplied.
    ZeroModulus,
    /// Modulus beyond [`MAX_MODULUS`].
    ModulusTooLarge { modulus: u64 },
    /// Exponent table has the wrong length.
    BadTableLength { expected: usize, got: usize },
    /// An exponent is not reduced mod m.
    EntryOutOfRange { index: usize, value: u64, modulus: u64 },
    /// Normalization fails: a tuple containing the identity has a nonzero
    /// exponent.
    NotNormalized { a: usize, b: usize, c: usize },
    /// The 3-cocycle condition fails at the reported quadruple.
    NotACocycle { a: usize, b: usize, c: usize, d: usize },
    /// Two operands live on different groups.
    GroupMismatch,
    /// Two operands have different moduli.
    ModulusMismatch { left: u64, right: u64 },
    /// Lift target modulus is not a multiple of the current one.
    ModulusNotDivisible { from: u64, to: u64 },
    /// A map that must be a group isomorphism is not bijective.
    NotABijection,
    /// A map that must be a group isomorphism fails multiplicativity at the
    /// reported pair.
    NotAnIsomorphism { a: usize, b: usize },
    /// Element pair for a θ evaluation does not commute with the base point.
    NotInCentralizer { g: usize, x: usize },
    /// The requested computation exceeds the dense-matrix resource guard.
    ResourceGuard { cells: usize, limit: usize },
}

impl fmt::Display for CocycleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CocycleError::ZeroModulus => write!(f, "modulus must be positive"),
            CocycleError::ModulusTooLarge { modulus } => {
                write!(f, "modulus {modulus} exceeds the supported bound {MAX_MODULUS}")
            }
            CocycleError::BadTableLength { expected, got } => {
                write!(f, "exponent table has length {got}, expected {expected}")
            }
            CocycleError::EntryOutOfRange { index, value, modulus } => {
                write!(f, "exponent {value} at flat index {index} is not reduced mod {modulus}")
            }
            CocycleError::NotNormalized { a, b, c } => {
                write!(f, "not normalized: nonzero exponent at identity-containing tuple ({a}, {b}, {c})")
            }
            CocycleError::NotACocycle { a, b, c, d } => {
                write!(f, "3-cocycle condition fails at ({a}, {b}, {c}, {d})")
            }
            CocycleError::GroupMismatch => write!(f, "operands live on different groups"),
            CocycleError::ModulusMismatch { left, right } => {
                write!(f, "modulus mismatch: {left} vs {right}")
            }
            CocycleError::ModulusNotDivisible { from, to } => {
                write!(f, "cannot lift modulus {from} to {to}: not a multiple")
            }
            CocycleError::NotABijection => write!(f, "map is not a bijection"),
            CocycleError::NotAnIsomorphism { a, b } => {
                write!(f, "map is not multiplicative at ({a}, {b})")
            }
            CocycleError::NotInCentralizer { g, x } => {
                write!(f, "element {x} does not centralize {g}")
            }
            CocycleError::ResourceGuard { cells, limit } => {
                write!(f, "computation needs a dense {cells}-cell matrix, above the {limit}-cell guard")
            }
        }
    }
}

impl core::error::Error for CocycleError {}

#[inline]
fn add_mod(a: u64, b: u64, m: u64) -> u64 {
    debug_assert!(a < m && b < m);
    let s = a + b;
    if s >= m {
        s - m
    } else {
        s
    }
}

#[inline]
fn neg_mod(a: u64, m: u64) -> u64 {
    if a == 0 {
        0
    } else {
        m - a
    }
}

/// A normalized 2-cochain β: G² → Z/m (exponent form); its coboundary dβ is
/// a 3-cocycle, and these are exactly the gauge transformations of
/// associators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    group: FiniteGroup,
    modulus: u64,
    exp: Vec<u64>,
}

impl Cochain2 {
    /// Validate a flat exponent table (index `a·|G| + b`) as a normalized
    /// 2-cochain.
    ///
    /// # Errors
    ///
    /// Table-shape errors and [`CocycleError::NotNormalized`] (reported with
    /// c = 0) when β(e,·) or β(·,e) is nonzero.
    pub fn new(group: &FiniteGroup, modulus: u64, exp: Vec<u64>) -> Result<Self, CocycleError> {
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        if modulus > MAX_MODULUS {
            return Err(CocycleError::ModulusTooLarge { modulus });
        }
        let n = group.order();
        if exp.len() != n * n {
            return Err(CocycleError::BadTableLength { expected: n * n, got: exp.len() });
        }
        for (i, &v) in exp.iter().enumerate() {
            if v >= modulus {
                return Err(CocycleError::EntryOutOfRange { index: i, value: v, modulus });
            }
        }
        for x in 0..n {
            if exp[x] != 0 {
                return Err(CocycleError::NotNormalized { a: 0, b: x, c: 0 });
            }
            if exp[x * n] != 0 {
                return Err(CocycleError::NotNormalized { a: x, b: 0, c: 0 });
            }
        }
        Ok(Cochain2 { group: group.clone(), modulus, exp })
    }

    /// The zero cochain.
    pub fn zero(group: &FiniteGroup, modulus: u64) -> Self {
        Self::new(group, modulus, vec![0; group.order() * group.order()])
            .expect("zero cochain is valid")
    }

    /// The underlying group.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The root-of-unity modulus m.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent β(a, b) ∈ Z/m.
    pub fn exponent(&self, a: usize, b: usize) -> u64 {
        let n = self.group.order();
        self.exp[a * n + b]
    }

    /// Value ζ_m^{β(a,b)}.
    pub fn value(&self, a: usize, b: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.modulus, self.exponent(a, b) as i64)
            .expect("modulus is positive")
    }

    /// The coboundary dβ(a,b,c) = β(b,c) - β(ab,c) + β(a,bc) - β(a,b),
    /// always a valid normalized 3-cocycle.
    pub fn coboundary(&self) -> Cocycle3 {
        let n = self.group.order();
        let m = self.modulus;
        let mut exp = vec![0u64; n * n * n];
        for a in 0..n {
            for b in 0..n {
                let ab = self.group.mul(a, b);
                for c in 0..n {
                    let bc = self.group.mul(b, c);
                    let mut e = self.exponent(b, c);
                    e = add_mod(e, neg_mod(self.exponent(ab, c), m), m);
                    e = add_mod(e, self.exponent(a, bc), m);
                    e = add_mod(e, neg_mod(self.exponent(a, b), m), m);
                    exp[(a * n + b) * n + c] = e;
                }
            }
        }
        Cocycle3::new(&self.group, m, exp).expect("a coboundary is always a cocycle")
    }
}

/// A normalized 3-cocycle ω: G³ → μ_m in exponent form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    group: FiniteGroup,
    modulus: u64,
    exp: Vec<u64>,
}

impl Cocycle3 {
    /// Validate a flat exponent table (index `(a·|G| + b)·|G| + c`).
    ///
    /// # Errors
    ///
    /// Shape errors, [`CocycleError::NotNormalized`], or
    /// [`CocycleError::NotACocycle`] with the first offending quadruple.
    pub fn new(group: &FiniteGroup, modulus: u64, exp: Vec<u64>) -> Result<Self, CocycleError> {
        Self::check_table(group, modulus, &exp)?;
        Ok(Cocycle3 { group: group.clone(), modulus, exp })
    }

    /// Full validation of a raw exponent table: shape, reduction mod m,
    /// normalization, and the 3-cocycle condition
    /// e(b,c,d) - e(ab,c,d) + e(a,bc,d) - e(a,b,cd) + e(a,b,c) ≡ 0 (mod m)
    /// over all quadruples, reporting the first violation.
    ///
    /// # Errors
    ///
    /// See [`Cocycle3::new`].
    pub fn check_table(group: &FiniteGroup, modulus: u64, exp: &[u64]) -> Result<(), CocycleError> {
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        if modulus > MAX_MODULUS {
            return Err(CocycleError::ModulusTooLarge { modulus });
        }
        let n = group.order();
        if exp.len() != n * n * n {
            return Err(CocycleError::BadTableLength { expected: n * n * n, got: exp.len() });
        }
        for (i, &v) in exp.iter().enumerate() {
            if v >= modulus {
                return Err(CocycleError::EntryOutOfRange { index: i, value: v, modulus });
            }
        }
        let at = |a: usize, b: usize, c: usize| exp[(a * n + b) * n + c];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if (a == 0 || b == 0 || c == 0) && at(a, b, c) != 0 {
                        return Err(CocycleError::NotNormalized { a, b, c });
                    }
                }
            }
        }
        let m = modulus;
        for a in 0..n {
            for b in 0..n {
                let ab = group.mul(a, b);
                for c in 0..n {
                    let bc = group.mul(b, c);
                    for d in 0..n {
                        let cd = group.mul(c, d);
                        // i128 keeps the alternating sum exact before reduction
                        let s = at(b, c, d) as i128 - at(ab, c, d) as i128
                            + at(a, bc, d) as i128
                            - at(a, b, cd) as i128
                            + at(a, b, c) as i128;
                        if s.rem_euclid(m as i128) != 0 {
                            return Err(CocycleError::NotACocycle { a, b, c, d });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The trivial cocycle (all exponents zero).
    pub fn trivial(group: &FiniteGroup, modulus: u64) -> Result<Self, CocycleError> {
        Self::new(group, modulus, vec![0; group.order().pow(3)])
    }

    /// The representative cocycle ω_t on Z/N with values in μ_{N²}:
    /// exponent t·⟨l⟩(⟨m⟩ + ⟨n⟩ - ⟨m+n⟩) mod N², where ⟨x⟩ = x mod N and
    /// the bracket difference is 0 or N.  Satisfies ω_{t+N} = ω_t, so `t`
    /// is reduced mod N.
    ///
    /// # Panics
    ///
    /// If `n == 0` or N² exceeds [`MAX_MODULUS`].
    pub fn omega_t(n: usize, t: i64) -> Self {
        assert!(n >= 1, "omega_t needs a positive cyclic order");
        let group = FiniteGroup::cyclic(n);
        let nn = n as u64;
        let m = nn * nn;
        assert!(m <= MAX_MODULUS, "modulus {m} exceeds the supported bound {MAX_MODULUS}");
        let t = t.rem_euclid(n as i64) as u64;
        let mut exp = vec![0u64; n * n * n];
        for l in 0..n {
            for mm in 0..n {
                for nn2 in 0..n {
                    // ⟨m⟩ + ⟨n⟩ - ⟨m+n⟩ ∈ {0, N}
                    let bracket = (mm + nn2 - (mm + nn2) % n) as u64;
                    let e = (t as u128 * l as u128 * bracket as u128 % m as u128) as u64;
                    exp[(l * n + mm) * n + nn2] = e;
                }
            }
        }
        Cocycle3::new(&group, m, exp).expect("omega_t satisfies the cocycle condition")
    }

    /// The underlying group.
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The root-of-unity modulus m.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent e(a, b, c) ∈ Z/m.
    pub fn exponent(&self, a: usize, b: usize, c: usize) -> u64 {
        let n = self.group.order();
        self.exp[(a * n + b) * n + c]
    }

    /// Value ω(a, b, c) = ζ_m^{e(a,b,c)} as an exact cyclotomic number.
    pub fn value(&self, a: usize, b: usize, c: usize) -> Cyclotomic {
        Cyclotomic::root_of_unity(self.modulus, self.exponent(a, b, c) as i64)
            .expect("modulus is positive")
    }

    /// Flat exponent table (index `(a·|G| + b)·|G| + c`).
    pub fn exponents(&self) -> &[u64] {
        &self.exp
    }

    /// Pointwise product of two cocycles on the same group and modulus.
    ///
    /// # Errors
    ///
    /// [`CocycleError::GroupMismatch`] / [`CocycleError::ModulusMismatch`].
    pub fn mul(&self, other: &Self) -> Result<Self, CocycleError> {
        if self.group != other.group {
            return Err(CocycleError::GroupMismatch);
        }
        if self.modulus != other.modulus {
            return Err(CocycleError::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let exp = self
            .exp
            .iter()
            .zip(other.exp.iter())
            .map(|(&a, &b)| add_mod(a, b, self.modulus))
            .collect();
        Ok(Cocycle3 { group: self.group.clone(), modulus: self.modulus, exp })
    }

    /// The pointwise inverse cocycle ω^{-1}.
    pub fn inv(&self) -> Self {
        let exp = self.exp.iter().map(|&e| neg_mod(e, self.modulus)).collect();
        Cocycle3 { group: self.group.clone(), modulus: self.modulus, exp }
    }

    /// The pointwise power ω^k.
    pub fn power(&self, k: u64) -> Self {
        let m = self.modulus;
        let kr = k % m;
        let exp = self
            .exp
            .iter()
            .map(|&e| (e as u128 * kr as u128 % m as u128) as u64)
            .collect();
        Cocycle3 { group: self.group.clone(), modulus: m, exp }
    }

    /// Reinterpret with values in the larger μ_{m'}: exponents scale by
    /// m'/m, values are unchanged.
    ///
    /// # Errors
    ///
    /// [`CocycleError::ModulusNotDivisible`] when m ∤ m', plus the usual
    /// modulus guards.
    pub fn lift_modulus(&self, target: u64) -> Result<Self, CocycleError> {
        if target == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        if !target.is_multiple_of(self.modulus) {
            return Err(CocycleError::ModulusNotDivisible { from: self.modulus, to: target });
        }
        if target > MAX_MODULUS {
            return Err(CocycleError::ModulusTooLarge { modulus: target });
        }
        let s = target / self.modulus;
        let exp = self.exp.iter().map(|&e| e * s).collect();
        Ok(Cocycle3 { group: self.group.clone(), modulus: target, exp })
    }

    /// Restrict to a subgroup, reindexed by the materialized subgroup (the
    /// returned cocycle lives on `sub.as_group().0`).
    ///
    /// # Errors
    ///
    /// [`CocycleError::GroupMismatch`] when the subgroup belongs to a
    /// different group.
    pub fn restrict(&self, sub: &Subgroup<'_>) -> Result<Self, CocycleError> {
        if *sub.parent() != self.group {
            return Err(CocycleError::GroupMismatch);
        }
        let (small, embed) = sub.as_group();
        let k = small.order();
        let mut exp = vec![0u64; k * k * k];
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    exp[(a * k + b) * k + c] = self.exponent(embed[a], embed[b], embed[c]);
                }
            }
        }
        Ok(Cocycle3 { group: small, modulus: self.modulus, exp })
    }

    /// Push the cocycle along a group isomorphism `map: self.group →
    /// target` given element-wise (`map[a]` is the image of `a`); verifies
    /// that the map is a multiplicative bijection.
    ///
    /// # Errors
    ///
    /// [`CocycleError::NotABijection`] / [`CocycleError::NotAnIsomorphism`].
    pub fn transport(
        &self,
        target: &FiniteGroup,
        map: &[usize],
    ) -> Result<Self, CocycleError> {
        let n = self.group.order();
        if target.order() != n || map.len() != n {
            return Err(CocycleError::NotABijection);
        }
        let mut inverse_map = vec![usize::MAX; n];
        for (a, &im) in map.iter().enumerate() {
            if im >= n || inverse_map[im] != usize::MAX {
                return Err(CocycleError::NotABijection);
            }
            inverse_map[im] = a;
        }
        for a in 0..n {
            for b in 0..n {
                if map[self.group.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(CocycleError::NotAnIsomorphism { a, b });
                }
            }
        }
        let mut exp = vec![0u64; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    exp[(x * n + y) * n + z] =
                        self.exponent(inverse_map[x], inverse_map[y], inverse_map[z]);
                }
            }
        }
        Ok(Cocycle3 { group: target.clone(), modulus: self.modulus, exp })
    }

    /// External product on the direct product group (indexing as in
    /// [`FiniteGroup::direct_product`]): (ω ⊠ ω')((a,a'),(b,b'),(c,c')) =
    /// ω(a,b,c)·ω'(a',b',c'), with both factors lifted to the lcm modulus.
    pub fn external_product(&self, other: &Self) -> Self {
        let m = num_integer::lcm(self.modulus, other.modulus);
        let left = self.lift_modulus(m).expect("lcm lift");
        let right = other.lift_modulus(m).expect("lcm lift");
        let group = self.group.direct_product(&other.group);
        let (na, nb) = (self.group.order(), other.group.order());
        let n = na * nb;
        let mut exp = vec![0u64; n * n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let e = add_mod(
                        left.exponent(a / nb, b / nb, c / nb),
                        right.exponent(a % nb, b % nb, c % nb),
                        m,
                    );
                    exp[(a * n + b) * n + c] = e;
                }
            }
        }
        Cocycle3 { group, modulus: m, exp }
    }

    /// Witness β with dβ = ω, if ω is a coboundary.  Builds a solver once;
    /// use [`CoboundarySolver`] directly to amortize over many cocycles.
    ///
    /// # Errors
    ///
    /// Resource-guard errors from the solver construction.
    pub fn is_coboundary(&self) -> Result<Option<Cochain2>, CocycleError> {
        let solver = CoboundarySolver::new(&self.group, self.modulus)?;
        solver.witness(self)
    }

    /// The order of the cohomology class [ω] in H³(G, μ_m): the least
    /// divisor k of m with ω^k a coboundary.  (Class orders divide m since
    /// ω^m is identically 1.)
    ///
    /// # Errors
    ///
    /// Resource-guard errors from the solver construction.
    pub fn class_order(&self) -> Result<u64, CocycleError> {
        let solver = CoboundarySolver::new(&self.group, self.modulus)?;
        for k in divisors(self.modulus) {
            if solver.witness(&self.power(k))?.is_some() {
                return Ok(k);
            }
        }
        unreachable!("omega^m is the trivial cocycle, hence a coboundary")
    }

    /// The invariant ε(g) = ζ_m^{Σ_{j=0}^{ord(g)-1} e(g, g^j, g)}: a gauge
    /// (coboundary) invariant of the restriction of ω to ⟨g⟩, whose order
    /// as a root of unity equals the class order of that restriction for
    /// the cyclic-coefficient situations used by the indicator formulas.
    pub fn eps_invariant(&self, g: usize) -> Cyclotomic {
        let m = self.modulus;
        let ord = self.group.element_order(g);
        let mut sum: u128 = 0;
        let mut h = 0usize; // g^j
        for _ in 0..ord {
            sum += self.exponent(g, h, g) as u128;
            h = self.group.mul(h, g);
        }
        Cyclotomic::root_of_unity(m, (sum % m as u128) as i64).expect("modulus is positive")
    }

    /// The 2-cochain θ_g(x, y) = ω(g,x,y)·ω(x,y,g)·ω(x,g,y)^{-1} on the
    /// centralizer of g; by the cocycle condition it is a 2-cocycle there,
    /// and it is the multiplier of the tube algebra block at g.
    pub fn dpr_theta(&self, g: usize) -> DprTheta {
        let m = self.modulus;
        let centralizer = self.group.centralizer(g);
        let (cgroup, members) = centralizer.as_group();
        let k = members.len();
        let mut exp = vec![0u64; k * k];
        for (i, &x) in members.iter().enumerate() {
            for (j, &y) in members.iter().enumerate() {
                let mut e = self.exponent(g, x, y);
                e = add_mod(e, self.exponent(x, y, g), m);
                e = add_mod(e, neg_mod(self.exponent(x, g, y), m), m);
                exp[i * k + j] = e;
            }
        }
        DprTheta { modulus: m, base: g, members, group: cgroup, exp }
    }
}

/// The tube-algebra multiplier θ_g on the centralizer of g (see
/// [`Cocycle3::dpr_theta`]); exponent form, indexed either by parent
/// elements or by the materialized centralizer group.
#[derive(Clone, Debug)]
pub struct DprTheta {
    modulus: u64,
    base: usize,
    members: Vec<usize>,
    group: FiniteGroup,
    exp: Vec<u64>,
}

impl DprTheta {
    /// The base point g.
    pub fn base(&self) -> usize {
        self.base
    }

    /// Centralizer elements in parent numbering (sorted).
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// The centralizer as a standalone group (indices parallel to
    /// `members()`).
    pub fn centralizer_group(&self) -> &FiniteGroup {
        &self.group
    }

    /// The root-of-unity modulus.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Exponent of θ_g(x, y) for parent indices x, y.
    ///
    /// # Errors
    ///
    /// [`CocycleError::NotInCentralizer`] when x or y does not commute
    /// with g.
    pub fn exponent(&self, x: usize, y: usize) -> Result<u64, CocycleError> {
        let i = self
            .members
            .binary_search(&x)
            .map_err(|_| CocycleError::NotInCentralizer { g: self.base, x })?;
        let j = self
            .members
            .binary_search(&y)
            .map_err(|_| CocycleError::NotInCentralizer { g: self.base, x: y })?;
        Ok(self.exp[i * self.members.len() + j])
    }

    /// Value θ_g(x, y) as an exact root of unity.
    ///
    /// # Errors
    ///
    /// As [`DprTheta::exponent`].
    pub fn value(&self, x: usize, y: usize) -> Result<Cyclotomic, CocycleError> {
        let e = self.exponent(x, y)?;
        Ok(Cyclotomic::root_of_unity(self.modulus, e as i64).expect("modulus is positive"))
    }

    /// Exponent of θ_g at centralizer positions (indices into `members()`),
    /// bypassing the parent-index search.
    pub fn exponent_at(&self, i: usize, j: usize) -> u64 {
        self.exp[i * self.members.len() + j]
    }

    /// The table as a normalized 2-cochain on the materialized centralizer.
    pub fn cochain(&self) -> Cochain2 {
        Cochain2::new(&self.group, self.modulus, self.exp.clone())
            .expect("theta is normalized by cocycle normalization")
    }
}

// ---- normalized-complex indexing ----
// Cochains are supported on tuples of non-identity elements; index maps drop
// the identity (element indices shift down by one).

#[inline]
fn pair_index(n: usize, a: usize, b: usize) -> usize {
    debug_assert!(a >= 1 && b >= 1);
    (a - 1) * (n - 1) + (b - 1)
}

#[inline]
fn triple_index(n: usize, a: usize, b: usize, c: usize) -> usize {
    debug_assert!(a >= 1 && b >= 1 && c >= 1);
    ((a - 1) * (n - 1) + (b - 1)) * (n - 1) + (c - 1)
}

/// The coboundary system d²: normalized 2-cochains → 3-cochains, as a dense
/// matrix over Z/q with rows indexed by non-identity triples and columns by
/// non-identity pairs.
fn boundary2_matrix(group: &FiniteGroup, q: u64) -> Vec<Vec<u64>> {
    let n = group.order();
    let n2 = (n - 1) * (n - 1);
    let n3 = n2 * (n - 1);
    let mut mat = vec![vec![0u64; n2]; n3];
    for a in 1..n {
        for b in 1..n {
            let ab = group.mul(a, b);
            for c in 1..n {
                let bc = group.mul(b, c);
                let row = &mut mat[triple_index(n, a, b, c)];
                let mut bump = |col: usize, sign_plus: bool| {
                    let delta = if sign_plus { 1 } else { q - 1 };
                    row[col] = add_mod(row[col], delta % q, q);
                };
                // dβ(a,b,c) = β(b,c) - β(ab,c) + β(a,bc) - β(a,b)
                bump(pair_index(n, b, c), true);
                if ab != 0 {
                    bump(pair_index(n, ab, c), false);
                }
                if bc != 0 {
                    bump(pair_index(n, a, bc), true);
                }
                bump(pair_index(n, a, b), false);
            }
        }
    }
    mat
}

/// The coboundary system d³: normalized 3-cochains → 4-cochains, rows
/// indexed by non-identity quadruples, columns by non-identity triples.
fn boundary3_matrix(group: &FiniteGroup, q: u64) -> Vec<Vec<u64>> {
    let n = group.order();
    let n3 = (n - 1) * (n - 1) * (n - 1);
    let n4 = n3 * (n - 1);
    let mut mat = vec![vec![0u64; n3]; n4];
    let mut row_idx = 0usize;
    for a in 1..n {
        for b in 1..n {
            let ab = group.mul(a, b);
            for c in 1..n {
                let bc = group.mul(b, c);
                for d in 1..n {
                    let cd = group.mul(c, d);
                    let row = &mut mat[row_idx];
                    row_idx += 1;
                    let mut bump = |col: usize, sign_plus: bool| {
                        let delta = if sign_plus { 1 } else { q - 1 };
                        row[col] = add_mod(row[col], delta % q, q);
                    };
                    // dω(a,b,c,d) = ω(b,c,d) - ω(ab,c,d) + ω(a,bc,d)
                    //               - ω(a,b,cd) + ω(a,b,c)
                    bump(triple_index(n, b, c, d), true);
                    if ab != 0 {
                        bump(triple_index(n, ab, c, d), false);
                    }
                    if bc != 0 {
                        bump(triple_index(n, a, bc, d), true);
                    }
                    if cd != 0 {
                        bump(triple_index(n, a, b, cd), false);
                    }
                    bump(triple_index(n, a, b, c), true);
                }
            }
        }
    }
    mat
}

/// Reusable exact solver for "is ω a coboundary on G with modulus m":
/// factors m into prime powers and diagonalizes the d² system once per
/// factor; each query replays the row operations onto the target.
pub struct CoboundarySolver {
    group: FiniteGroup,
    modulus: u64,
    locals: Vec<(PrimePower, LocalDiag)>,
}

impl CoboundarySolver {
    /// Build the solver for a group and modulus.
    ///
    /// # Errors
    ///
    /// [`CocycleError::ResourceGuard`] when the dense d² matrix would be
    /// too large, plus the usual modulus guards.
    pub fn new(group: &FiniteGroup, modulus: u64) -> Result<Self, CocycleError> {
        if modulus == 0 {
            return Err(CocycleError::ZeroModulus);
        }
        if modulus > MAX_MODULUS {
            return Err(CocycleError::ModulusTooLarge { modulus });
        }
        let n = group.order();
        let n2 = (n - 1) * (n - 1);
        let n3 = n2 * (n - 1);
        let cells = n2 * n3;
        if cells > MAX_MATRIX_CELLS {
            return Err(CocycleError::ResourceGuard { cells, limit: MAX_MATRIX_CELLS });
        }
        let mut locals = Vec::new();
        for pp in prime_powers(modulus) {
            let mat = boundary2_matrix(group, pp.q);
            let opt = DiagOptions { record_ops: true, track_v: true, track_uinv: false };
            locals.push((pp, LocalDiag::new(mat, n2, pp, opt)));
        }
        Ok(CoboundarySolver { group: group.clone(), modulus, locals })
    }

    /// Witness β with dβ = ω, or None when [ω] ≠ 0.
    ///
    /// # Errors
    ///
    /// [`CocycleError::GroupMismatch`] / [`CocycleError::ModulusMismatch`]
    /// when ω does not match the solver.
    pub fn witness(&self, omega: &Cocycle3) -> Result<Option<Cochain2>, CocycleError> {
        if omega.group != self.group {
            return Err(CocycleError::GroupMismatch);
        }
        if omega.modulus != self.modulus {
            return Err(CocycleError::ModulusMismatch {
                left: self.modulus,
                right: omega.modulus,
            });
        }
        let n = self.group.order();
        if n == 1 || self.modulus == 1 {
            return Ok(Some(Cochain2::zero(&self.group, self.modulus)));
        }
        let mut per_prime: Vec<(u64, Vec<u64>)> = Vec::new();
        for (pp, diag) in &self.locals {
            let mut rhs = Vec::with_capacity((n - 1) * (n - 1) * (n - 1));
            for a in 1..n {
                for b in 1..n {
                    for c in 1..n {
                        rhs.push(omega.exponent(a, b, c) % pp.q);
                    }
                }
            }
            match diag.solve(&rhs) {
                Some(beta) => per_prime.push((pp.q, beta)),
                None => return Ok(None),
            }
        }
        // CRT-combine the per-prime witnesses into a single β mod m.
        let mut exp = vec![0u64; n * n];
        for a in 1..n {
            for b in 1..n {
                let idx = pair_index(n, a, b);
                let parts: Vec<(u64, u64)> =
                    per_prime.iter().map(|(q, beta)| (*q, beta[idx])).collect();
                exp[a * n + b] = crt_combine(&parts);
            }
        }
        let beta = Cochain2::new(&self.group, self.modulus, exp).expect("witness is normalized");
        debug_assert_eq!(beta.coboundary(), *omega, "witness must cobound the target");
        Ok(Some(beta))
    }
}

/// Invariant factors of H³(G, μ_m) with representative cocycles: the group
/// is ⊕_i Z/invariant_factors[i] with representatives[i] generating the
/// i-th summand (factors ascending, each > 1 and dividing the next).
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub invariant_factors: Vec<u64>,
    pub representatives: Vec<Cocycle3>,
}

/// Compute H³(G, μ_m) exactly: invariant factors and representative
/// cocycles.
///
/// Strategy, per prime power q = p^k of m: diagonalize the d³ system to get
/// the lattice L of 3-cocycles mod q (columns of the tracked transform,
/// suitably scaled); express the relation lattice — coboundaries d²(pairs)
/// and the ambient q·Z^{n₃} — in L-coordinates; Smith-diagonalize the
/// relation matrix over Z/q with the inverse row transform tracked, which
/// yields the p-part's cyclic factors and generators.  The per-prime parts
/// are merged by pairing largest factors (giving the invariant-factor
/// chain) and CRT on exponent tables.
///
/// # Errors
///
/// [`CocycleError::ResourceGuard`] when the dense d³ matrix would be too
/// large (groups of order > 10), plus the usual modulus guards.
pub fn cohomology_basis(group: &FiniteGroup, m: u64) -> Result<CohomologyBasis, CocycleError> {
    if m == 0 {
        return Err(CocycleError::ZeroModulus);
    }
    if m > MAX_MODULUS {
        return Err(CocycleError::ModulusTooLarge { modulus: m });
    }
    let n = group.order();
    if n == 1 || m == 1 {
        return Ok(CohomologyBasis { invariant_factors: Vec::new(), representatives: Vec::new() });
    }
    let n1 = n - 1;
    let n2 = n1 * n1;
    let n3 = n2 * n1;
    let n4 = n3 * n1;
    let cells = n4 * n3;
    if cells > MAX_MATRIX_CELLS {
        return Err(CocycleError::ResourceGuard { cells, limit: MAX_MATRIX_CELLS });
    }

    // Per prime: descending list of (p-exponent, representative table mod q).
    type PrimePart = (u32, Vec<u64>);
    let mut per_prime: Vec<(PrimePower, Vec<PrimePart>)> = Vec::new();
    for pp in prime_powers(m) {
        let q = pp.q;
        // Kernel lattice of d³ over Z/q.
        let d3 = boundary3_matrix(group, q);
        let kernel = LocalDiag::new(
            d3,
            n3,
            pp,
            DiagOptions { record_ops: false, track_v: true, track_uinv: false },
        );
        let scale = kernel.kernel_scale();

        // Relation matrix in kernel coordinates: d² columns, then q·e_i.
        let d2 = boundary2_matrix(group, q);
        let mut relations: Vec<Vec<u64>> = vec![Vec::with_capacity(n2 + n3); n3];
        for col in 0..n2 {
            let column: Vec<u64> = d2.iter().map(|row| row[col]).collect();
            let coords = kernel
                .kernel_coords(&column, &scale)
                .expect("d2 columns are cocycles (d³∘d² = 0)");
            for (r, value) in coords.into_iter().enumerate() {
                relations[r].push(value);
            }
        }
        // Coordinates of q·e_i: z_j = p^{v_j}·(V⁻¹)_{j,i} on pivot
        // coordinates (q/scale_j = p^{v_j}), zero beyond.
        for i in 0..n3 {
            for (r, rel_row) in relations.iter_mut().enumerate() {
                let factor = q / scale[r];
                rel_row.push(crate::linalg::mul_mod(factor % q, kernel.vinv[r][i], q));
            }
        }

        let snf = LocalDiag::new(
            relations,
            n2 + n3,
            pp,
            DiagOptions { record_ops: false, track_v: false, track_uinv: true },
        );
        // Coordinate t of the quotient contributes Z/p^{b_t} with
        // b_t = piv_val[t] for pivots and k for coordinates never hit.
        let mut parts: Vec<PrimePart> = Vec::new();
        for t in 0..n3 {
            let b = if t < snf.npiv { snf.piv_val[t].min(pp.k) } else { pp.k };
            if b == 0 {
                continue;
            }
            // Generator in kernel coordinates is column t of U⁻¹.
            let z: Vec<u64> = snf.uinv.iter().map(|row| row[t]).collect();
            let table = kernel.kernel_vector(&z, &scale);
            parts.push((b, table));
        }
        parts.sort_by_key(|part| core::cmp::Reverse(part.0));
        per_prime.push((pp, parts));
    }

    // Merge primes: pair the largest factors across primes.
    let count = per_prime.iter().map(|(_, parts)| parts.len()).max().unwrap_or(0);
    let mut factors_desc: Vec<u64> = Vec::new();
    let mut reps_desc: Vec<Cocycle3> = Vec::new();
    for i in 0..count {
        let mut factor = 1u64;
        let mut table = vec![0u64; n * n * n];
        for (pp, parts) in &per_prime {
            let Some((b, rep)) = parts.get(i) else { continue };
            factor *= pp.p.pow(*b);
            // Embed μ_q ↪ μ_m by scaling exponents with m/q, and add.
            let stride = m / pp.q;
            for a in 1..n {
                for bb in 1..n {
                    for c in 1..n {
                        let e = rep[triple_index(n, a, bb, c)] % pp.q;
                        table[(a * n + bb) * n + c] =
                            add_mod(table[(a * n + bb) * n + c], e * stride % m, m);
                    }
                }
            }
        }
        factors_desc.push(factor);
        let rep = Cocycle3::new(group, m, table)
            .expect("merged representative satisfies the cocycle condition");
        reps_desc.push(rep);
    }
    factors_desc.reverse();
    reps_desc.reverse();
    Ok(CohomologyBasis { invariant_factors: factors_desc, representatives: reps_desc })
}

/// Test helper: a uniformly random normalized 2-cochain, used by the gauge
/// invariance suites across modules.
#[cfg(test)]
pub(crate) fn random_cochain(
    group: &FiniteGroup,
    m: u64,
    rng: &mut rand_chacha::ChaCha8Rng,
) -> Cochain2 {
    use rand::Rng;
    let n = group.order();
    let mut exp = vec![0u64; n * n];
    for a in 1..n {
        for b in 1..n {
            exp[a * n + b] = rng.gen_range(0..m);
        }
    }
    Cochain2::new(group, m, exp).expect("random cochain is normalized by construction")
}
