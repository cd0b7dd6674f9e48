//! Finite groups presented by explicit multiplication tables.
//!
//! Elements are indices `0..order` with the identity fixed at index 0; the
//! table stores `mul(a, b)` row-major.  This is the right shape for the
//! cocycle and tube-algebra layers, which index everything by tuples of
//! group elements.  Constructors are provided for the families the rest of
//! the library (and its acceptance tests) needs: cyclic groups, direct
//! products, dihedral groups and small symmetric groups, plus validation of
//! arbitrary user-supplied tables.
//!
//! A [`Subgroup`] borrows its parent group and stores a sorted list of
//! element indices; [`Subgroup::as_group`] materializes it as a standalone
//! [`FiniteGroup`] together with the embedding back into the parent.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

/// Errors from group construction and subgroup validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// The table is not square or contains an out-of-range entry.
    MalformedTable { detail: &'static str },
    /// Index 0 does not act as a two-sided identity; `g` is a witness.
    IdentityNotAtZero { g: usize },
    /// No right inverse exists for `g`.
    MissingInverse { g: usize },
    /// Associativity fails at the reported triple.
    NotAssociative { a: usize, b: usize, c: usize },
    /// A subgroup candidate is not closed: `a·b` (or an inverse) escapes.
    NotClosed { a: usize, b: usize },
    /// A subgroup candidate does not contain the identity.
    MissingIdentity,
    /// An element index is out of range for the group.
    OutOfRange { index: usize, order: usize },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::MalformedTable { detail } => write!(f, "malformed table: {detail}"),
            GroupError::IdentityNotAtZero { g } => {
                write!(f, "index 0 is not a two-sided identity (fails at element {g})")
            }
            GroupError::MissingInverse { g } => write!(f, "element {g} has no inverse"),
            GroupError::NotAssociative { a, b, c } => {
                write!(f, "associativity fails at ({a}, {b}, {c})")
            }
            GroupError::NotClosed { a, b } => {
                write!(f, "subset is not closed under the operation at ({a}, {b})")
            }
            GroupError::MissingIdentity => write!(f, "subset does not contain the identity"),
            GroupError::OutOfRange { index, order } => {
                write!(f, "element index {index} out of range for group of order {order}")
            }
        }
    }
}

impl core::error::Error for GroupError {}

/// A finite group given by its full multiplication table.
///
/// Invariants (enforced by every constructor): the table is `order × order`
/// with entries `< order`, index 0 is a two-sided identity, every element
/// has an inverse, and multiplication is associative.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl FiniteGroup {
    /// Validate a full multiplication table and build the group.
    ///
    /// Checks, in order: squareness and entry range, identity at index 0,
    /// existence of inverses, and associativity over all triples (O(n³),
    /// reporting the first offending triple).
    ///
    /// # Errors
    ///
    /// A [`GroupError`] naming the first violated axiom.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::MalformedTable { detail: "empty table" });
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(GroupError::MalformedTable { detail: "table is not square" });
            }
            for &e in row {
                if e >= n {
                    return Err(GroupError::MalformedTable { detail: "entry out of range" });
                }
                table.push(e);
            }
        }
        for g in 0..n {
            if table[g] != g || table[g * n] != g {
                return Err(GroupError::IdentityNotAtZero { g });
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| table[g * n + h] == 0) {
                Some(h) => inverse[g] = h,
                None => return Err(GroupError::MissingInverse { g }),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    let bc = table[b * n + c];
                    if table[ab * n + c] != table[a * n + bc] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        // With associativity, right inverses are two-sided; record them.
        Ok(FiniteGroup { order: n, table, inverse })
    }

    /// The cyclic group Z/n with generator 1.
    ///
    /// # Panics
    ///
    /// If `n == 0`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group needs order at least 1");
        let mut table = vec![0usize; n * n];
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
            inverse[a] = (n - a) % n;
        }
        FiniteGroup { order: n, table, inverse }
    }

    /// Direct product; element (a, b) gets index `a * other.order() + b`,
    /// so the identity stays at index 0.
    pub fn direct_product(&self, other: &FiniteGroup) -> Self {
        let (n, m) = (self.order, other.order);
        let order = n * m;
        let mut table = vec![0usize; order * order];
        for a1 in 0..n {
            for b1 in 0..m {
                for a2 in 0..n {
                    for b2 in 0..m {
                        let i = a1 * m + b1;
                        let j = a2 * m + b2;
                        table[i * order + j] = self.mul(a1, a2) * m + other.mul(b1, b2);
                    }
                }
            }
        }
        let inverse = (0..order)
            .map(|i| self.inv(i / m) * m + other.inv(i % m))
            .collect();
        FiniteGroup { order, table, inverse }
    }

    /// The dihedral group of order 2n: rotations r^i at indices `0..n`,
    /// reflections s·r^i at indices `n..2n`, with s·r·s = r^{-1}).
    ///
    /// # Panics
    ///
    /// If `n == 0`.
    pub fn dihedral(n: usize) -> Self {
        assert!(n >= 1, "dihedral group needs a positive rotation order");
        let order = 2 * n;
        let mut table = vec![0usize; order * order];
        for i in 0..order {
            for j in 0..order {
                let v = if i < n && j < n {
                    // r^i · r^j = r^{i+j}
                    (i + j) % n
                } else if i < n {
                    // r^i · s r^j = s r^{j-i}
                    n + (j - n + n - i) % n
                } else if j < n {
                    // s r^i · r^j = s r^{i+j}
                    n + (i - n + j) % n
                } else {
                    // s r^i · s r^j = r^{j-i}
                    (j - n + n - (i - n)) % n
                };
                table[i * order + j] = v;
            }
        }
        let mut inverse = vec![0usize; order];
        for (g, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..order).find(|&h| table[g * order + h] == 0).expect("dihedral inverse");
        }
        let group = FiniteGroup { order, table, inverse };
        debug_assert!(group.self_check().is_ok());
        group
    }

    /// The symmetric group S_n for n ≤ 4, with permutations of {0, …, n-1}
    /// enumerated in lexicographic order (so the identity has index 0) and
    /// composition (p·q)(x) = p(q(x)).
    ///
    /// # Panics
    ///
    /// If `n == 0` or `n > 4` (larger symmetric groups exceed every resource
    /// bound in this library).
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=4).contains(&n), "symmetric groups are supported for 1 <= n <= 4");
        let perms = permutations(n);
        let order = perms.len();
        let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("permutation");
        let mut table = vec![0usize; order * order];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
                table[i * order + j] = index_of(&composed);
            }
        }
        let mut inverse = vec![0usize; order];
        for (g, inv) in inverse.iter_mut().enumerate() {
            *inv = (0..order).find(|&h| table[g * order + h] == 0).expect("inverse");
        }
        FiniteGroup { order, table, inverse }
    }

    fn self_check(&self) -> Result<(), GroupError> {
        let rows: Vec<Vec<usize>> = (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect();
        FiniteGroup::from_table(&rows).map(|_| ())
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element (always index 0).
    pub fn identity(&self) -> usize {
        0
    }

    /// Product of two elements.
    ///
    /// # Panics
    ///
    /// If an index is out of range.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        assert!(a < self.order && b < self.order, "element index out of range");
        self.table[a * self.order + b]
    }

    /// Inverse of an element.
    pub fn inv(&self, a: usize) -> usize {
        assert!(a < self.order, "element index out of range");
        self.inverse[a]
    }

    /// g^k for k ≥ 0.
    pub fn pow(&self, g: usize, k: u64) -> usize {
        let mut acc = 0usize;
        for _ in 0..(k % self.element_order(g) as u64) {
            acc = self.mul(acc, g);
        }
        acc
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, g: usize) -> usize {
        assert!(g < self.order, "element index out of range");
        let mut k = 1;
        let mut acc = g;
        while acc != 0 {
            acc = self.mul(acc, g);
            k += 1;
        }
        k
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, g| acc.lcm(&(self.element_order(g) as u64)))
    }

    /// Whether the group is commutative.
    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Number of conjugacy classes.
    pub fn conjugacy_class_count(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut classes = 0;
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            classes += 1;
            for x in 0..self.order {
                let conj = self.mul(self.mul(x, g), self.inv(x));
                seen[conj] = true;
            }
        }
        classes
    }

    /// The centralizer subgroup { x : xg = gx }.
    pub fn centralizer(&self, g: usize) -> Subgroup<'_> {
        assert!(g < self.order, "element index out of range");
        let elements = (0..self.order).filter(|&x| self.mul(x, g) == self.mul(g, x)).collect();
        Subgroup { parent: self, elements }
    }

    /// All ordered pairs (g, h) with gh = hg, in lexicographic order.
    pub fn commuting_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs = Vec::new();
        for g in 0..self.order {
            for h in 0..self.order {
                if self.mul(g, h) == self.mul(h, g) {
                    pairs.push((g, h));
                }
            }
        }
        pairs
    }

    /// The cyclic subgroup generated by `g`.
    pub fn cyclic_subgroup(&self, g: usize) -> Subgroup<'_> {
        assert!(g < self.order, "element index out of range");
        let mut elements = vec![0usize];
        let mut acc = g;
        while acc != 0 {
            elements.push(acc);
            acc = self.mul(acc, g);
        }
        elements.sort_unstable();
        Subgroup { parent: self, elements }
    }

    /// The cyclic subgroups maximal under inclusion, deduplicated by element
    /// set, in a deterministic order (by first generator index).
    ///
    /// Every cyclic subgroup is contained in one of these, so lcm-style
    /// accumulations over cyclic subgroups can restrict to this list.
    pub fn maximal_cyclic_subgroups(&self) -> Vec<Subgroup<'_>> {
        let mut all: Vec<Vec<usize>> = Vec::new();
        for g in 0..self.order {
            let sub = self.cyclic_subgroup(g).elements;
            if !all.contains(&sub) {
                all.push(sub);
            }
        }
        let maximal: Vec<Vec<usize>> = all
            .iter()
            .filter(|cand| {
                !all.iter().any(|other| {
                    other.len() > cand.len() && cand.iter().all(|e| other.contains(e))
                })
            })
            .cloned()
            .collect();
        maximal.into_iter().map(|elements| Subgroup { parent: self, elements }).collect()
    }

    /// Full table row for an element (used by the IO layer).
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }
}

/// Lexicographically ordered permutations of {0, …, n-1}.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        // next_permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).expect("successor");
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    out
}

/// A subgroup of a borrowed parent group: a sorted set of element indices.
#[derive(Clone, Debug)]
pub struct Subgroup<'g> {
    parent: &'g FiniteGroup,
    elements: Vec<usize>,
}

impl<'g> PartialEq for Subgroup<'g> {
    fn eq(&self, other: &Self) -> bool {
        core::ptr::eq(self.parent, other.parent) && self.elements == other.elements
    }
}

impl<'g> Subgroup<'g> {
    /// Validate a subset as a subgroup (identity, closure, inverses).
    ///
    /// # Errors
    ///
    /// [`GroupError::OutOfRange`], [`GroupError::MissingIdentity`] or
    /// [`GroupError::NotClosed`] naming an offending pair.
    pub fn new(parent: &'g FiniteGroup, mut elements: Vec<usize>) -> Result<Self, GroupError> {
        elements.sort_unstable();
        elements.dedup();
        for &e in &elements {
            if e >= parent.order() {
                return Err(GroupError::OutOfRange { index: e, order: parent.order() });
            }
        }
        if elements.binary_search(&0).is_err() {
            return Err(GroupError::MissingIdentity);
        }
        for &a in &elements {
            for &b in &elements {
                if elements.binary_search(&parent.mul(a, b)).is_err() {
                    return Err(GroupError::NotClosed { a, b });
                }
            }
            if elements.binary_search(&parent.inv(a)).is_err() {
                return Err(GroupError::NotClosed { a, b: parent.inv(a) });
            }
        }
        Ok(Subgroup { parent, elements })
    }

    /// The parent group this subgroup lives in.
    pub fn parent(&self) -> &'g FiniteGroup {
        self.parent
    }

    /// Sorted element indices (in the parent's numbering).
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Whether a parent element belongs to the subgroup.
    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    /// Materialize as a standalone group plus the embedding: the returned
    /// vector maps each new index to its parent element.  Sorting keeps the
    /// identity at index 0.
    pub fn as_group(&self) -> (FiniteGroup, Vec<usize>) {
        let n = self.elements.len();
        let pos = |g: usize| self.elements.binary_search(&g).expect("closure");
        let mut table = vec![0usize; n * n];
        for (i, &a) in self.elements.iter().enumerate() {
            for (j, &b) in self.elements.iter().enumerate() {
                table[i * n + j] = pos(self.parent.mul(a, b));
            }
        }
        let inverse = self.elements.iter().map(|&a| pos(self.parent.inv(a))).collect();
        (
            FiniteGroup { order: n, table, inverse },
            self.elements.clone(),
        )
    }
}
