//! Exact linear algebra over Z/p^k, the engine behind coboundary solving
//! and cohomology bases.
//!
//! Everything the cocycle layer needs — membership of a vector in the image
//! of an integer matrix mod m with a witness, kernel lattices, and invariant
//! factors of a quotient with tracked transforms — reduces, one prime power
//! q = p^k of m at a time (CRT), to diagonalization over the local ring
//! Z/q.  Over a local ring, Gaussian elimination with minimal-valuation
//! pivoting diagonalizes any matrix by unimodular row and column operations:
//! U·A·V = diag(p^{v_1}, …, p^{v_r}, 0, …).  This is the Smith normal form
//! over Z/q, with all arithmetic bounded by q (no integer blow-up).
//!
//! [`LocalDiag`] performs the elimination once and can optionally record
//!
//! * the row operations, replayable onto right-hand sides (solving A·x ≡ w
//!   for many w),
//! * the column transform V and its inverse (kernel lattices and coordinate
//!   computations), and
//! * the inverse row transform U⁻¹ (generators of the cokernel, i.e.
//!   invariant-factor representatives).

use alloc::vec;
use alloc::vec::Vec;

/// A prime power factor q = p^k of a modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct PrimePower {
    pub p: u64,
    pub k: u32,
    pub q: u64,
}

/// Factor m ≥ 1 into prime powers (ascending primes).
pub(crate) fn prime_powers(m: u64) -> Vec<PrimePower> {
    assert!(m >= 1);
    let mut out = Vec::new();
    let mut rest = m;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut k = 0u32;
            let mut q = 1u64;
            while rest.is_multiple_of(p) {
                rest /= p;
                k += 1;
                q *= p;
            }
            out.push(PrimePower { p, k, q });
        }
        p += 1;
    }
    if rest > 1 {
        out.push(PrimePower { p: rest, k: 1, q: rest });
    }
    out
}

fn egcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a.abs(), if a < 0 { -1 } else { 1 }, 0)
    } else {
        let (g, x, y) = egcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

/// Inverse of a unit mod q.
pub(crate) fn inv_mod(a: u64, q: u64) -> u64 {
    let (g, x, _) = egcd(a as i128, q as i128);
    assert_eq!(g, 1, "attempted to invert a non-unit mod {q}");
    x.rem_euclid(q as i128) as u64
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

#[inline]
fn sub_mul_mod(a: u64, coef: u64, b: u64, q: u64) -> u64 {
    // a - coef·b mod q, all inputs already reduced
    let t = mul_mod(coef, b, q);
    if a >= t {
        a - t
    } else {
        a + q - t
    }
}

/// p-adic valuation of a nonzero residue.
fn valuation(mut a: u64, p: u64) -> u32 {
    debug_assert!(a != 0);
    let mut v = 0;
    while a.is_multiple_of(p) {
        a /= p;
        v += 1;
    }
    v
}

/// Chinese-remainder combination: residues (q_i, r_i) with pairwise coprime
/// q_i combine to the unique residue mod Π q_i.
pub(crate) fn crt_combine(parts: &[(u64, u64)]) -> u64 {
    let m: u128 = parts.iter().map(|&(q, _)| q as u128).product();
    let mut x: u128 = 0;
    for &(q, r) in parts {
        let mi = m / q as u128;
        let inv = inv_mod((mi % q as u128) as u64, q) as u128;
        x = (x + r as u128 * mi % m * inv) % m;
    }
    x as u64
}

#[derive(Clone, Copy)]
enum RowOp {
    Swap(usize, usize),
    /// row[dst] -= coef·row[src]
    SubMul { src: usize, dst: usize, coef: u64 },
    /// row[r] *= coef (coef a unit)
    Scale { r: usize, coef: u64 },
}

/// Which byproducts of the elimination to keep.
#[derive(Clone, Copy, Default)]
pub(crate) struct DiagOptions {
    /// Record row operations for replay onto right-hand sides.
    pub record_ops: bool,
    /// Track the column transform V and its inverse (x = V·z).
    pub track_v: bool,
    /// Track U⁻¹ where U is the accumulated row transform.
    pub track_uinv: bool,
}

/// Result of diagonalizing a matrix over Z/p^k.
///
/// After the recorded row operations and the column transform, the matrix
/// is diag(p^{piv_val[0]}, …, p^{piv_val[npiv-1]}, 0, …, 0).
pub(crate) struct LocalDiag {
    pub pp: PrimePower,
    pub nrows: usize,
    pub ncols: usize,
    pub npiv: usize,
    /// Valuations of the pivots: pivot t has value p^{piv_val[t]}.
    pub piv_val: Vec<u32>,
    ops: Vec<RowOp>,
    pub v: Vec<Vec<u64>>,
    pub vinv: Vec<Vec<u64>>,
    pub uinv: Vec<Vec<u64>>,
}

impl LocalDiag {
    /// Diagonalize `mat` (row-major, entries reduced mod q) in place.
    pub fn new(mut mat: Vec<Vec<u64>>, ncols: usize, pp: PrimePower, opt: DiagOptions) -> Self {
        let q = pp.q;
        let p = pp.p;
        let nrows = mat.len();
        debug_assert!(mat.iter().all(|r| r.len() == ncols));
        debug_assert!(mat.iter().flatten().all(|&x| x < q));
        let identity = |n: usize| -> Vec<Vec<u64>> {
            (0..n)
                .map(|i| {
                    let mut row = vec![0u64; n];
                    row[i] = 1;
                    row
                })
                .collect()
        };
        let mut ops = Vec::new();
        let mut v = if opt.track_v { identity(ncols) } else { Vec::new() };
        let mut vinv = if opt.track_v { identity(ncols) } else { Vec::new() };
        let mut uinv = if opt.track_uinv { identity(nrows) } else { Vec::new() };
        let mut piv_val = Vec::new();

        let lim = nrows.min(ncols);
        let mut t = 0;
        while t < lim {
            // Minimal-valuation pivot in the trailing submatrix.
            let mut best: Option<(usize, usize, u32)> = None;
            'scan: for (r, row) in mat.iter().enumerate().skip(t) {
                for (c, &a) in row.iter().enumerate().skip(t) {
                    if a != 0 {
                        let val = valuation(a, p);
                        if best.is_none_or(|(_, _, bv)| val < bv) {
                            best = Some((r, c, val));
                            if val == 0 {
                                break 'scan;
                            }
                        }
                    }
                }
            }
            let Some((r, c, val)) = best else { break };
            if r != t {
                mat.swap(r, t);
                if opt.record_ops {
                    ops.push(RowOp::Swap(r, t));
                }
                if opt.track_uinv {
                    // U ← P·U, U⁻¹ ← U⁻¹·P: swap columns r, t of U⁻¹.
                    for row in uinv.iter_mut() {
                        row.swap(r, t);
                    }
                }
            }
            if c != t {
                for row in mat.iter_mut() {
                    row.swap(c, t);
                }
                if opt.track_v {
                    // V ← V·P (swap columns), V⁻¹ ← P·V⁻¹ (swap rows).
                    for row in v.iter_mut() {
                        row.swap(c, t);
                    }
                    vinv.swap(c, t);
                }
            }
            let pv = p.pow(val);
            let unit = mat[t][t] / pv;
            if unit != 1 {
                let coef = inv_mod(unit % q, q);
                for x in mat[t].iter_mut() {
                    *x = mul_mod(*x, coef, q);
                }
                if opt.record_ops {
                    ops.push(RowOp::Scale { r: t, coef });
                }
                if opt.track_uinv {
                    // U⁻¹ ← U⁻¹·diag(coef)⁻¹: scale column t by the unit.
                    for row in uinv.iter_mut() {
                        row[t] = mul_mod(row[t], unit % q, q);
                    }
                }
            }
            debug_assert_eq!(mat[t][t], pv % q);
            // Clear the pivot row by column operations (fill-in stays in the
            // trailing submatrix because column t vanishes above row t).
            for cc in (t + 1)..ncols {
                let a = mat[t][cc];
                if a == 0 {
                    continue;
                }
                let coef = a / pv; // exact: the pivot has minimal valuation
                for row in mat.iter_mut() {
                    if row[t] != 0 {
                        row[cc] = sub_mul_mod(row[cc], coef, row[t], q);
                    }
                }
                if opt.track_v {
                    for row in v.iter_mut() {
                        row[cc] = sub_mul_mod(row[cc], coef, row[t], q);
                    }
                    // (I + coef·E_{t,cc}) · V⁻¹: row t += coef·row cc.
                    let (head, tail) = vinv.split_at_mut(cc);
                    let (row_t, row_cc) = (&mut head[t], &tail[0]);
                    for (x, y) in row_t.iter_mut().zip(row_cc.iter()) {
                        *x = (*x + mul_mod(coef, *y, q)) % q;
                    }
                }
            }
            // Clear the pivot column by row operations; the pivot row now
            // has a single nonzero entry, so only column t changes.
            for rr in 0..nrows {
                if rr == t || mat[rr][t] == 0 {
                    continue;
                }
                let coef = mat[rr][t] / pv; // exact, same minimality argument
                mat[rr][t] = 0;
                if opt.record_ops {
                    ops.push(RowOp::SubMul { src: t, dst: rr, coef });
                }
                if opt.track_uinv {
                    // U⁻¹ ← U⁻¹·(I + coef·E_{rr,t}): col t += coef·col rr.
                    for row in uinv.iter_mut() {
                        let add = mul_mod(coef, row[rr], q);
                        row[t] = (row[t] + add) % q;
                    }
                }
            }
            piv_val.push(val);
            t += 1;
        }
        let npiv = piv_val.len();
        LocalDiag { pp, nrows, ncols, npiv, piv_val, ops, v, vinv, uinv }
    }

    /// Replay the recorded row operations onto a right-hand side.
    fn transform_rhs(&self, rhs: &mut [u64]) {
        let q = self.pp.q;
        for op in &self.ops {
            match *op {
                RowOp::Swap(a, b) => rhs.swap(a, b),
                RowOp::Scale { r, coef } => rhs[r] = mul_mod(rhs[r], coef, q),
                RowOp::SubMul { src, dst, coef } => {
                    rhs[dst] = sub_mul_mod(rhs[dst], coef, rhs[src], q)
                }
            }
        }
    }

    /// Solve A·x ≡ w (mod q) for the matrix this was built from (requires
    /// `record_ops` and `track_v`).  Returns a particular solution.
    pub fn solve(&self, rhs: &[u64]) -> Option<Vec<u64>> {
        let q = self.pp.q;
        let p = self.pp.p;
        debug_assert_eq!(rhs.len(), self.nrows);
        let mut y = rhs.to_vec();
        self.transform_rhs(&mut y);
        let mut z = vec![0u64; self.ncols];
        for t in 0..self.npiv {
            let pv = p.pow(self.piv_val[t]);
            if !y[t].is_multiple_of(pv) {
                return None;
            }
            z[t] = y[t] / pv;
        }
        if y[self.npiv..].iter().any(|&x| x != 0) {
            return None;
        }
        // x = V·z
        let x = (0..self.ncols)
            .map(|i| {
                let mut acc: u128 = 0;
                for (j, &zj) in z.iter().enumerate() {
                    if zj != 0 {
                        acc += self.v[i][j] as u128 * zj as u128;
                    }
                }
                (acc % q as u128) as u64
            })
            .collect();
        Some(x)
    }

    /// Scaling factors c_j such that the kernel lattice of the matrix is
    /// { V·(c ⊙ z) : z ∈ Z^{ncols} } (requires `track_v`): c_j = p^{k - v_j}
    /// for pivot coordinates, 1 for free ones.
    pub fn kernel_scale(&self) -> Vec<u64> {
        let p = self.pp.p;
        let k = self.pp.k;
        (0..self.ncols)
            .map(|j| if j < self.npiv { p.pow(k - self.piv_val[j]) } else { 1 })
            .collect()
    }

    /// Coordinates z of a kernel-lattice vector: x = V·(c ⊙ z) mod q.
    /// Returns None when x is not in the kernel lattice.
    pub fn kernel_coords(&self, x: &[u64], scale: &[u64]) -> Option<Vec<u64>> {
        let q = self.pp.q;
        debug_assert_eq!(x.len(), self.ncols);
        debug_assert_eq!(self.vinv.len(), self.ncols, "kernel_coords requires track_v");
        let mut z = Vec::with_capacity(self.ncols);
        for (vrow, &sj) in self.vinv.iter().zip(scale) {
            let mut acc: u128 = 0;
            for (i, &xi) in x.iter().enumerate() {
                if xi != 0 {
                    acc += vrow[i] as u128 * xi as u128;
                }
            }
            let y = (acc % q as u128) as u64;
            if !y.is_multiple_of(sj) {
                return None;
            }
            z.push(y / sj);
        }
        Some(z)
    }

    /// Evaluate x = V·(c ⊙ z) mod q.
    pub fn kernel_vector(&self, z: &[u64], scale: &[u64]) -> Vec<u64> {
        let q = self.pp.q;
        (0..self.ncols)
            .map(|i| {
                let mut acc: u128 = 0;
                for (j, &zj) in z.iter().enumerate() {
                    let s = mul_mod(zj, scale[j], q);
                    if s != 0 {
                        acc += self.v[i][j] as u128 * s as u128;
                    }
                }
                (acc % q as u128) as u64
            })
            .collect()
    }
}
