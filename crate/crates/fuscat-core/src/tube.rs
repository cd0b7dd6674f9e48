//! The tube algebra of a pointed category and the indicator formula through
//! powers of its central element t.
//!
//! For C(G, ω) the tube algebra has one basis element B_{(g,h)} per
//! commuting pair gh = hg — the hom space C(V_g ⊗ V_h, V_h ⊗ V_g) is a line
//! when the two products of the grading elements agree and zero otherwise.
//! Products vanish across different first components, and within the block
//! of g they are governed by the transparency 2-cocycle θ_g on the
//! centralizer of g (see [`Cocycle3::dpr_theta`]):
//!
//!   B_{(g,h)} · B_{(g,h')} = θ_g(h', h)^{-1} · B_{(g, h'h)}.
//!
//! The basis here absorbs the √|G| normalization of the hom-space pairing,
//! so every structure constant is a plain root of unity ζ_m^e and the whole
//! algebra is verified — unit, centrality of t, associativity — by u64
//! exponent arithmetic.  Associativity of the block of g is precisely the
//! 2-cocycle condition for θ_g, and centrality of t = Σ_g B_{(g,g)} boils
//! down to θ_g(g,h) = θ_g(h,g), both of which collapse to e(g,h,g) by
//! normalization.
//!
//! The payoff is the trace formula: the functional φ_g reads off |G| times
//! the coefficient of B_{(g,e)}, and φ_g(tⁿ) = |G|·conj(ν_n(V_g)).  Powers
//! of t stay supported on single lines B_{(g, gⁿ)} per block, so indicators
//! and the FS exponent (the least n with tⁿ = 1) are computed by a pure
//! exponent walk without any cyclotomic arithmetic.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclo::{Cyclotomic, Rational};
use crate::pointed::PointedCategory;

/// Errors from tube-algebra construction and exponent searches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TubeError {
    /// B_{(g,e)} failed to act as the identity on the reported pair.
    UnitAxiom { g: usize, h: usize },
    /// t failed to commute with B_{(g,h)}.
    CentralityAxiom { g: usize, h: usize },
    /// Associativity failed on a basis triple of the block of g.
    AssociativityAxiom { g: usize, h1: usize, h2: usize, h3: usize },
    /// No n ≤ bound had tⁿ = 1; the structure constants must be wrong.
    ExponentBoundExceeded { bound: u64 },
}

impl fmt::Display for TubeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TubeError::UnitAxiom { g, h } => {
                write!(f, "unit axiom fails on the basis element ({g}, {h})")
            }
            TubeError::CentralityAxiom { g, h } => {
                write!(f, "central element fails to commute with ({g}, {h})")
            }
            TubeError::AssociativityAxiom { g, h1, h2, h3 } => {
                write!(f, "associativity fails in block {g} on ({h1}, {h2}, {h3})")
            }
            TubeError::ExponentBoundExceeded { bound } => {
                write!(f, "no power of t up to {bound} equals the unit")
            }
        }
    }
}

impl core::error::Error for TubeError {}

/// θ_g data for one block, laid out for O(1) access during verification
/// and multiplication.
#[derive(Clone, Debug)]
struct Block {
    /// Centralizer elements of g (sorted, parent numbering).
    members: Vec<usize>,
    /// parent element -> position in `members`, usize::MAX outside.
    position: Vec<usize>,
    /// θ_g exponents, position-major.
    theta: Vec<u64>,
}

/// The tube algebra of a pointed category, verified at construction.
#[derive(Clone, Debug)]
pub struct TubeAlgebra {
    category: PointedCategory,
    basis: Vec<(usize, usize)>,
    /// flat (g·|G| + h) -> basis index, usize::MAX for non-commuting pairs.
    index: Vec<usize>,
    blocks: Vec<Block>,
}

/// An element of the tube algebra: exact coefficients over the basis of
/// commuting pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeElement {
    coeffs: Vec<Cyclotomic>,
}

impl TubeElement {
    /// Coefficient vector, indexed like [`TubeAlgebra::basis`].
    pub fn coefficients(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    /// Single coefficient.
    pub fn coefficient(&self, i: usize) -> &Cyclotomic {
        &self.coeffs[i]
    }
}

impl TubeAlgebra {
    /// Build and verify the tube algebra of a pointed category.
    ///
    /// # Errors
    ///
    /// The first failed algebra axiom, reported with its witnesses; any
    /// error indicates a defect in the θ convention, so none should ever
    /// surface for a verified cocycle.
    pub fn build(category: PointedCategory) -> Result<Self, TubeError> {
        let group = category.group().clone();
        let n = group.order();
        let basis = group.commuting_pairs();
        let mut index = vec![usize::MAX; n * n];
        for (i, &(g, h)) in basis.iter().enumerate() {
            index[g * n + h] = i;
        }
        let blocks = (0..n)
            .map(|g| {
                let theta = category.omega().dpr_theta(g);
                let members = theta.members().to_vec();
                let mut position = vec![usize::MAX; n];
                for (p, &x) in members.iter().enumerate() {
                    position[x] = p;
                }
                let k = members.len();
                let mut table = vec![0u64; k * k];
                for i in 0..k {
                    for j in 0..k {
                        table[i * k + j] = theta.exponent_at(i, j);
                    }
                }
                Block { members, position, theta: table }
            })
            .collect();
        let algebra = TubeAlgebra { category, basis, index, blocks };
        algebra.verify_units()?;
        algebra.verify_centrality()?;
        algebra.verify_associativity()?;
        Ok(algebra)
    }

    /// Check that every B_{(g,e)} acts as the identity on its block.
    ///
    /// Already enforced by [`TubeAlgebra::build`]; exposed so reports can
    /// re-run and name each axiom.
    ///
    /// # Errors
    ///
    /// [`TubeError::UnitAxiom`] with the offending pair.
    pub fn verify_units(&self) -> Result<(), TubeError> {
        let e = self.category.group().identity();
        for &(g, h) in &self.basis {
            let left_unit = self.rule(g, e, h);
            let right_unit = self.rule(g, h, e);
            if left_unit != Some((self.index_of(g, h), 0))
                || right_unit != Some((self.index_of(g, h), 0))
            {
                return Err(TubeError::UnitAxiom { g, h });
            }
        }
        Ok(())
    }

    /// Check that t = Σ_g B_{(g,g)} commutes with every basis element.
    ///
    /// # Errors
    ///
    /// [`TubeError::CentralityAxiom`] with the offending pair.
    pub fn verify_centrality(&self) -> Result<(), TubeError> {
        for &(g, h) in &self.basis {
            // t's only term meeting block g is B_{(g,g)}.
            let ut = self.rule(g, h, g);
            let tu = self.rule(g, g, h);
            if tu != ut {
                return Err(TubeError::CentralityAxiom { g, h });
            }
        }
        Ok(())
    }

    /// Check associativity on every basis triple with a nonzero product,
    /// i.e. the θ_g 2-cocycle identity within each block.
    ///
    /// # Errors
    ///
    /// [`TubeError::AssociativityAxiom`] with the offending triple.
    pub fn verify_associativity(&self) -> Result<(), TubeError> {
        let group = self.category.group();
        let m = self.category.omega().modulus();
        for (g, block) in self.blocks.iter().enumerate() {
            let k = block.members.len();
            let theta = |i: usize, j: usize| block.theta[i * k + j];
            for i1 in 0..k {
                let h1 = block.members[i1];
                for i2 in 0..k {
                    let h2 = block.members[i2];
                    let h21 = group.mul(h2, h1);
                    let p21 = block.position[h21];
                    for i3 in 0..k {
                        let h3 = block.members[i3];
                        let h32 = group.mul(h3, h2);
                        let p32 = block.position[h32];
                        let lhs = (theta(i2, i1) + theta(i3, p21)) % m;
                        let rhs = (theta(i3, i2) + theta(p32, i1)) % m;
                        if lhs != rhs {
                            return Err(TubeError::AssociativityAxiom { g, h1, h2, h3 });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// The underlying category.
    pub fn category(&self) -> &PointedCategory {
        &self.category
    }

    /// Basis of commuting pairs, in lexicographic order.
    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// Index of a basis pair (the pair must commute).
    fn index_of(&self, g: usize, h: usize) -> usize {
        let i = self.index[g * self.category.group().order() + h];
        debug_assert!(i != usize::MAX, "({g}, {h}) is not a commuting pair");
        i
    }

    /// Basis index of a commuting pair, None when gh ≠ hg.
    pub fn basis_index(&self, g: usize, h: usize) -> Option<usize> {
        let i = self.index[g * self.category.group().order() + h];
        (i != usize::MAX).then_some(i)
    }

    /// The basis element B_{(g,h)} as an element.
    pub fn basis_element(&self, i: usize) -> TubeElement {
        let mut coeffs = vec![Cyclotomic::zero(); self.basis.len()];
        coeffs[i] = Cyclotomic::one();
        TubeElement { coeffs }
    }

    /// The unit Σ_g B_{(g,e)}.
    pub fn one(&self) -> TubeElement {
        let e = self.category.group().identity();
        let mut coeffs = vec![Cyclotomic::zero(); self.basis.len()];
        for g in 0..self.category.group().order() {
            coeffs[self.index_of(g, e)] = Cyclotomic::one();
        }
        TubeElement { coeffs }
    }

    /// The central element t = Σ_g B_{(g,g)}.
    pub fn t(&self) -> TubeElement {
        let mut coeffs = vec![Cyclotomic::zero(); self.basis.len()];
        for g in 0..self.category.group().order() {
            coeffs[self.index_of(g, g)] = Cyclotomic::one();
        }
        TubeElement { coeffs }
    }

    /// Structure constants on basis indices: B_i·B_j is either zero (no
    /// value) or a root of unity times another basis element.
    pub fn structure_constant(&self, i: usize, j: usize) -> Option<(usize, Cyclotomic)> {
        let (g, h) = self.basis[i];
        let (g2, h2) = self.basis[j];
        if g != g2 {
            return None;
        }
        let (target, exponent) = self.rule(g, h, h2)?;
        let m = self.category.omega().modulus();
        let coeff =
            Cyclotomic::root_of_unity(m, exponent as i64).expect("modulus is positive");
        Some((target, coeff))
    }

    /// Exponent-level product rule within block g:
    /// B_{(g,h)}·B_{(g,h2)} = ζ_m^{e}·B_{(g, h2·h)} with e = −θ_g(h2, h).
    fn rule(&self, g: usize, h: usize, h2: usize) -> Option<(usize, u64)> {
        let group = self.category.group();
        let m = self.category.omega().modulus();
        let block = &self.blocks[g];
        let (ph2, ph) = (block.position[h2], block.position[h]);
        if ph == usize::MAX || ph2 == usize::MAX {
            return None;
        }
        let k = block.members.len();
        let theta = block.theta[ph2 * k + ph];
        let exponent = if theta == 0 { 0 } else { m - theta };
        Some((self.index_of(g, group.mul(h2, h)), exponent))
    }

    /// Product of two elements by bilinear extension.
    ///
    /// # Panics
    ///
    /// If either coefficient vector has the wrong length.
    pub fn multiply(&self, u: &TubeElement, v: &TubeElement) -> TubeElement {
        assert_eq!(u.coeffs.len(), self.basis.len());
        assert_eq!(v.coeffs.len(), self.basis.len());
        let m = self.category.omega().modulus();
        let mut out = vec![Cyclotomic::zero(); self.basis.len()];
        for (i, ci) in u.coeffs.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            let (g, h) = self.basis[i];
            for (j, cj) in v.coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let (g2, h2) = self.basis[j];
                if g != g2 {
                    continue;
                }
                let (target, exponent) =
                    self.rule(g, h, h2).expect("both pairs lie in the block of g");
                let root = Cyclotomic::root_of_unity(m, exponent as i64)
                    .expect("modulus is positive");
                out[target] = out[target].add(&ci.mul(cj).mul(&root));
            }
        }
        TubeElement { coeffs: out }
    }

    /// n-th power by iterated multiplication; n = 0 gives the unit.
    pub fn power(&self, u: &TubeElement, n: u64) -> TubeElement {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.multiply(&acc, u);
        }
        acc
    }

    /// The functional φ_g: |G| times the coefficient of B_{(g,e)}.
    pub fn phi_g(&self, g: usize, u: &TubeElement) -> Cyclotomic {
        assert_eq!(u.coeffs.len(), self.basis.len());
        let e = self.category.group().identity();
        let order = self.category.group().order();
        u.coeffs[self.index_of(g, e)].scale_by_rational(&Rational::from_integer(order.into()))
    }

    /// The trace functional φ = Σ_g φ_g.
    pub fn phi(&self, u: &TubeElement) -> Cyclotomic {
        (0..self.category.group().order())
            .fold(Cyclotomic::zero(), |acc, g| acc.add(&self.phi_g(g, u)))
    }

    /// ν_n(V_g) recovered from the tube algebra: conj(φ_g(tⁿ))/|G|.
    ///
    /// Powers of t keep one line per block — tⁿ = Σ_g ζ_m^{k_{g,n}}
    /// B_{(g, gⁿ)} — so this walks exponents instead of multiplying
    /// coefficient vectors.
    ///
    /// # Panics
    ///
    /// If `n == 0` or `g` is out of range.
    pub fn indicator_via_tube(&self, g: usize, n: u64) -> Cyclotomic {
        assert!(n >= 1, "indicators are defined for n >= 1");
        let group = self.category.group();
        let m = self.category.omega().modulus();
        let block = &self.blocks[g];
        let k_len = block.members.len();
        let pg = block.position[g];
        let mut h = g;
        let mut exponent = 0u64;
        for _ in 1..n {
            // multiply by t: pick up −θ_g(g, h), move h to g·h
            let theta = block.theta[pg * k_len + block.position[h]];
            exponent = (exponent + m - theta) % m;
            h = group.mul(g, h);
        }
        if h != group.identity() {
            return Cyclotomic::zero();
        }
        // conj of ζ_m^{exponent}
        Cyclotomic::root_of_unity(m, -(exponent as i64)).expect("modulus is positive")
    }

    /// The FS exponent as the order of t: least n ≥ 1 with tⁿ = 1.
    ///
    /// # Errors
    ///
    /// [`TubeError::ExponentBoundExceeded`] if nothing up to exp(G)² works,
    /// which would mean broken structure constants.
    pub fn fs_exponent_via_tube(&self) -> Result<u64, TubeError> {
        let group = self.category.group();
        let m = self.category.omega().modulus();
        let order = group.order();
        let bound = group.exponent() * group.exponent();
        // state of tⁿ: per block, the line position gⁿ and its exponent
        let mut h: Vec<usize> = (0..order).collect();
        let mut k = vec![0u64; order];
        for n in 1..=bound {
            if h.iter().all(|&x| x == group.identity()) && k.iter().all(|&x| x == 0) {
                return Ok(n);
            }
            for g in 0..order {
                let block = &self.blocks[g];
                let len = block.members.len();
                let theta = block.theta[block.position[g] * len + block.position[h[g]]];
                k[g] = (k[g] + m - theta) % m;
                h[g] = group.mul(g, h[g]);
            }
        }
        Err(TubeError::ExponentBoundExceeded { bound })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{cohomology_basis, random_cochain, Cocycle3};
    use crate::grp::FiniteGroup;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn algebra(omega: Cocycle3) -> TubeAlgebra {
        TubeAlgebra::build(PointedCategory::new(omega)).expect("verified cocycles build")
    }

    fn sample_algebras() -> Vec<TubeAlgebra> {
        let mut out = Vec::new();
        for n in 1..=5usize {
            for t in 0..n {
                out.push(algebra(Cocycle3::omega_t(n, t as i64)));
            }
        }
        let klein = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        let basis = cohomology_basis(&klein, 4).unwrap();
        out.push(algebra(basis.representatives[0].clone()));
        out.push(algebra(basis.representatives[3].clone()));
        let s3 = FiniteGroup::symmetric(3);
        out.push(algebra(Cocycle3::trivial(&s3, 6).unwrap()));
        out.push(algebra(cohomology_basis(&s3, 6).unwrap().representatives[0].clone()));
        out
    }

    #[test]
    fn basis_is_the_commuting_pairs() {
        // Abelian: all |G|² pairs. S3: Σ_g |C(g)| = 6 + 3·2 + 2·3 = 18.
        let z4 = algebra(Cocycle3::trivial(&FiniteGroup::cyclic(4), 4).unwrap());
        assert_eq!(z4.basis().len(), 16);
        let s3 = algebra(Cocycle3::trivial(&FiniteGroup::symmetric(3), 6).unwrap());
        assert_eq!(s3.basis().len(), 18);
        let group = FiniteGroup::symmetric(3);
        for g in 0..group.order() {
            for h in 0..group.order() {
                let commutes = group.mul(g, h) == group.mul(h, g);
                assert_eq!(s3.basis_index(g, h).is_some(), commutes);
            }
        }
    }

    #[test]
    fn trivial_cocycle_gives_the_pair_semigroup_algebra() {
        let a = algebra(Cocycle3::trivial(&FiniteGroup::symmetric(3), 6).unwrap());
        let group = FiniteGroup::symmetric(3);
        for i in 0..a.basis().len() {
            for j in 0..a.basis().len() {
                let (g, h) = a.basis()[i];
                let (g2, h2) = a.basis()[j];
                match a.structure_constant(i, j) {
                    None => assert_ne!(g, g2),
                    Some((target, coeff)) => {
                        assert_eq!(g, g2);
                        assert_eq!(coeff, Cyclotomic::one());
                        assert_eq!(a.basis()[target], (g, group.mul(h2, h)));
                    }
                }
            }
        }
    }

    #[test]
    fn flagship_block_relation_on_z2() {
        let a = algebra(Cocycle3::omega_t(2, 1));
        let x = 1;
        let bxx = a.basis_index(x, x).unwrap();
        let bxe = a.basis_index(x, 0).unwrap();
        // B_{(x,x)}² = −B_{(x,e)}
        let square = a.multiply(&a.basis_element(bxx), &a.basis_element(bxx));
        let mut expected = vec![Cyclotomic::zero(); a.basis().len()];
        expected[bxe] = Cyclotomic::from_integer(-1);
        assert_eq!(square.coefficients(), &expected[..]);
        // φ_x(t²) = −2, φ_x(t⁴) = 2
        let t2 = a.power(&a.t(), 2);
        assert_eq!(a.phi_g(x, &t2), Cyclotomic::from_integer(-2));
        let t4 = a.power(&a.t(), 4);
        assert_eq!(a.phi_g(x, &t4), Cyclotomic::from_integer(2));
        assert_eq!(t4, a.one());
        assert_eq!(a.fs_exponent_via_tube(), Ok(4));
    }

    #[test]
    fn unit_and_centrality_hold_elementwise() {
        for a in sample_algebras() {
            let one = a.one();
            let t = a.t();
            for i in 0..a.basis().len() {
                let b = a.basis_element(i);
                assert_eq!(a.multiply(&one, &b), b);
                assert_eq!(a.multiply(&b, &one), b);
                assert_eq!(a.multiply(&t, &b), a.multiply(&b, &t));
            }
            assert_eq!(a.multiply(&one, &one), one);
        }
    }

    #[test]
    fn phi_reads_unit_coefficients() {
        for a in sample_algebras() {
            let order = a.category().group().order() as i64;
            let one = a.one();
            let t = a.t();
            for g in 0..a.category().group().order() {
                assert_eq!(a.phi_g(g, &one), Cyclotomic::from_integer(order));
                let expected = if g == a.category().group().identity() {
                    Cyclotomic::from_integer(order)
                } else {
                    Cyclotomic::zero()
                };
                assert_eq!(a.phi_g(g, &t), expected);
            }
            assert_eq!(a.phi(&one), Cyclotomic::from_integer(order * order));
        }
    }

    #[test]
    fn tube_indicators_match_the_pointed_route() {
        for a in sample_algebras() {
            let c = a.category().clone();
            let n_max = (2 * c.fs_exponent_category()).min(60);
            for g in 0..c.rank() {
                for n in 1..=n_max {
                    assert_eq!(
                        a.indicator_via_tube(g, n),
                        c.indicator(g, n),
                        "block {g}, power {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn exponent_walk_matches_generic_powers() {
        // The one-line-per-block shortcut must agree with honest repeated
        // multiplication of coefficient vectors.
        for (n, t) in [(2usize, 1i64), (3, 1), (4, 1), (4, 3)] {
            let a = algebra(Cocycle3::omega_t(n, t));
            let order = a.category().group().order() as i64;
            let mut power = a.one();
            for k in 1..=8u64 {
                power = a.multiply(&power, &a.t());
                for g in 0..a.category().group().order() {
                    let via_phi = a
                        .phi_g(g, &power)
                        .scale_by_rational(&Rational::new(1.into(), order.into()))
                        .conj();
                    assert_eq!(a.indicator_via_tube(g, k), via_phi, "g={g}, n={k}");
                }
            }
        }
    }

    #[test]
    fn fs_exponent_matches_the_pointed_formula() {
        for a in sample_algebras() {
            assert_eq!(
                a.fs_exponent_via_tube().unwrap(),
                a.category().fs_exponent_category()
            );
        }
        // N·ord([ω_t]) spot checks.
        let z6 = algebra(Cocycle3::omega_t(6, 2));
        assert_eq!(z6.fs_exponent_via_tube(), Ok(18));
        let z6 = algebra(Cocycle3::omega_t(6, 1));
        assert_eq!(z6.fs_exponent_via_tube(), Ok(36));
    }

    #[test]
    fn phi_of_t_powers_is_gauge_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        for base in [Cocycle3::omega_t(4, 1), Cocycle3::omega_t(6, 2)] {
            let a = algebra(base.clone());
            for _ in 0..3 {
                let beta = random_cochain(base.group(), base.modulus(), &mut rng);
                let gauged = algebra(base.mul(&beta.coboundary()).unwrap());
                let n_max = a.category().fs_exponent_category();
                for g in 0..base.group().order() {
                    for n in 1..=n_max {
                        assert_eq!(
                            a.indicator_via_tube(g, n),
                            gauged.indicator_via_tube(g, n)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn power_zero_and_one() {
        let a = algebra(Cocycle3::omega_t(3, 1));
        assert_eq!(a.power(&a.t(), 0), a.one());
        assert_eq!(a.power(&a.t(), 1), a.t());
        // Z/3, t = 1: ν₃(V_1̄) = ζ₃.
        assert_eq!(
            a.indicator_via_tube(1, 3),
            Cyclotomic::root_of_unity(3, 1).unwrap()
        );
    }
}
