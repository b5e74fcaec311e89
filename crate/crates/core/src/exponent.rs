//! Exponent matrices of tiled orders and min-plus arithmetic on tiled lattices.
//!
//! A tiled lattice `(P^{b_ij})` inside `M_n(K)` is recorded by its integer
//! exponent matrix `b`. Products of lattices become min-plus products of
//! exponent matrices and intersections become entrywise maxima. The ring `R`,
//! its uniformizer `π` and the field `K` never appear; only exponents do.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Perm;

/// An `n x n` integer exponent matrix with no axioms attached.
///
/// Used for ideals, radicals, products and conjugates, none of which need to
/// satisfy the order axioms. Entries may be negative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticeMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl LatticeMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: r + 1,
                    len: row.len(),
                    n,
                });
            }
            entries.extend_from_slice(row);
        }
        Ok(Self { n, entries })
    }

    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Self { n, entries }
    }

    fn try_from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Result<i64>) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j)?);
            }
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-based position `(i, j)`.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n).map(<[i64]>::to_vec).collect()
    }

    fn check_dims(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Lattice product: `C_ij = min_m (A_im + B_mj)`.
    ///
    /// Overflowing sums are reported rather than wrapped.
    pub fn minplus_product(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        let n = self.n;
        Self::try_from_fn(n, |i, j| {
            let mut best: Option<i64> = None;
            for m in 0..n {
                let s = self
                    .get(i, m)
                    .checked_add(other.get(m, j))
                    .ok_or(Error::Overflow)?;
                best = Some(best.map_or(s, |b| b.min(s)));
            }
            Ok(best.expect("n >= 1"))
        })
    }

    /// Lattice intersection: entrywise maximum of exponents.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_dims(other)?;
        Ok(Self {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        })
    }
}

impl fmt::Debug for LatticeMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows())
    }
}

/// Largest entry accepted by [`ExponentMatrix::validate`]. Keeps every sum of
/// a few entries (products of ideals, radicals) far from `i64` overflow.
pub const MAX_ENTRY: i64 = 1 << 40;

/// Validated exponent matrix `(α_ij)` of a tiled order `Λ = (P^{α_ij})`.
///
/// Invariants: every entry is non-negative, the diagonal is zero and
/// `α_ij + α_jk >= α_ik` for all `i, j, k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    alpha: LatticeMatrix,
}

impl ExponentMatrix {
    /// Checks the order axioms and reports the first violation found.
    ///
    /// Checks run in the order: shape, entry range, diagonal, triangle
    /// inequality (scanning `(i, j, k)` lexicographically).
    pub fn validate(rows: &[Vec<i64>]) -> Result<Self> {
        let alpha = LatticeMatrix::from_rows(rows)?;
        let n = alpha.n;
        for i in 0..n {
            for j in 0..n {
                let v = alpha.get(i, j);
                if v < 0 {
                    return Err(Error::NegativeEntry { i: i + 1, j: j + 1 });
                }
                if v > MAX_ENTRY {
                    return Err(Error::EntryTooLarge { i: i + 1, j: j + 1 });
                }
            }
        }
        for i in 0..n {
            if alpha.get(i, i) != 0 {
                return Err(Error::NonzeroDiagonal { i: i + 1 });
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if alpha.get(i, j) + alpha.get(j, k) < alpha.get(i, k) {
                        return Err(Error::TriangleViolation {
                            i: i + 1,
                            j: j + 1,
                            k: k + 1,
                        });
                    }
                }
            }
        }
        Ok(Self { alpha })
    }

    pub fn n(&self) -> usize {
        self.alpha.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.alpha.get(i, j)
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.alpha.rows()
    }

    pub fn as_lattice(&self) -> &LatticeMatrix {
        &self.alpha
    }

    /// Whether `P_i = Λe_i` and `P_j = Λe_j` are isomorphic, i.e. `i` and `j`
    /// sit in the same block of the underlying matrix-ring decomposition.
    ///
    /// Holds iff `α_ij + α_ji = 0`; by the triangle inequality the columns
    /// `i` and `j` are then identical.
    #[inline]
    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.get(i, j) + self.get(j, i) == 0
    }

    /// The maximal two-sided ideal `M_k` not containing `e_k` (0-based `k`).
    ///
    /// For a basic order this is `α` with the `(k, k)` entry raised to 1.
    /// When other vertices share `k`'s block, every entry inside that block
    /// is raised by one, since the ideal then cannot contain any matrix unit
    /// of the block.
    pub fn maximal_ideal(&self, k: usize) -> Result<LatticeMatrix> {
        let n = self.n();
        if k >= n {
            return Err(Error::IndexOutOfRange { index: k + 1, n });
        }
        Ok(LatticeMatrix::from_fn(n, |i, j| {
            let bump = self.same_block(i, k) && self.same_block(j, k);
            self.get(i, j) + i64::from(bump)
        }))
    }

    /// Jacobson radical of the order.
    ///
    /// For a basic order this is `α` with the diagonal replaced by 1. In
    /// general an entry is raised by one exactly when `(i, j)` lies inside a
    /// block, since those positions carry a full matrix ring over `R`.
    pub fn radical(&self) -> LatticeMatrix {
        LatticeMatrix::from_fn(self.n(), |i, j| {
            self.get(i, j) + i64::from(self.same_block(i, j))
        })
    }

    /// Exponent matrix of `v(σ)^{-1} d(x)^{-1} Λ d(x) v(σ)`.
    ///
    /// The result `C` satisfies `C[σ(i)][σ(j)] = α_ij - x_i + x_j`. It is
    /// the reference check for every lift: `(σ, x)` induces an automorphism
    /// exactly when the result equals `α`.
    pub fn conjugate(&self, sigma: &Perm, x: &[i64]) -> Result<LatticeMatrix> {
        let n = self.n();
        if sigma.n() != n {
            return Err(Error::DimensionMismatch {
                left: n,
                right: sigma.n(),
            });
        }
        if x.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: x.len(),
            });
        }
        let inv = sigma.inverse();
        LatticeMatrix::try_from_fn(n, |p, q| {
            let (i, j) = (inv.apply(p), inv.apply(q));
            self.get(i, j)
                .checked_sub(x[i])
                .and_then(|v| v.checked_add(x[j]))
                .ok_or(Error::Overflow)
        })
    }

    /// True iff no two columns of `α` coincide.
    ///
    /// A morphism `Λe_i -> Λe_j` of tiled columns is multiplication by a power
    /// of `π`, so `Λe_i ≅ Λe_j` forces column `i` to equal column `j` shifted
    /// by a constant `c`. Reading the shift off rows `i` and `j` gives
    /// `c = α_ji = -α_ij`, and non-negativity forces `c = 0`. Identical
    /// columns are therefore exactly the isomorphic pairs of projectives.
    pub fn is_basic(&self) -> bool {
        let n = self.n();
        let column = |j: usize| (0..n).map(move |i| self.get(i, j));
        (0..n).all(|a| (a + 1..n).all(|b| !column(a).eq(column(b))))
    }

    pub fn is_zero_one(&self) -> bool {
        self.alpha.entries.iter().all(|&v| v == 0 || v == 1)
    }
}

impl fmt::Debug for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExponentMatrix{:?}", self.rows())
    }
}

impl From<ExponentMatrix> for LatticeMatrix {
    fn from(a: ExponentMatrix) -> Self {
        a.alpha
    }
}

/// Basic hereditary order with `R` on and above the diagonal and `P` below:
/// `α_ij = 1` if `i > j`, otherwise 0.
pub fn hereditary_order(n: usize) -> Result<ExponentMatrix> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    Ok(ExponentMatrix {
        alpha: LatticeMatrix::from_fn(n, |i, j| i64::from(i > j)),
    })
}
