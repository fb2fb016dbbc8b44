//! Linear maps on `GF(2)^n` stored by the images of the unit vectors.

use crate::error::{Error, Result};

/// A linear map `GF(2)^cols -> GF(2)^rows` given by `images[i] = M(e_i)`.
///
/// Read as a matrix acting on row vectors, `images[i]` is row `i`, so
/// `apply(v)` is the product `v * M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    images: Vec<u64>,
    out_dim: usize,
}

impl LinearMap {
    pub fn from_rows(images: Vec<u64>, out_dim: usize) -> Self {
        LinearMap { images, out_dim }
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            images: (0..n).map(|i| 1u64 << i).collect(),
            out_dim: n,
        }
    }

    pub fn in_dim(&self) -> usize {
        self.images.len()
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn rows(&self) -> &[u64] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, v: u64) -> u64 {
        let mut acc = 0u64;
        let mut rest = v;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            acc ^= self.images[i];
            rest &= rest - 1;
        }
        acc
    }

    /// `self` followed by `next`: `v -> next(self(v))`.
    pub fn then(&self, next: &LinearMap) -> LinearMap {
        LinearMap {
            images: self.images.iter().map(|&r| next.apply(r)).collect(),
            out_dim: next.out_dim,
        }
    }

    /// `self^k` for a square map, by repeated squaring.
    pub fn pow(&self, mut k: u64) -> LinearMap {
        let n = self.in_dim();
        let mut acc = LinearMap::identity(n);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.images.clone();
        let mut rank = 0;
        for bit in 0..self.out_dim {
            let Some(pivot) = (rank..rows.len()).find(|&r| (rows[r] >> bit) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let p = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && (*row >> bit) & 1 == 1 {
                    *row ^= p;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Inverse of a square map by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<LinearMap> {
        let n = self.in_dim();
        if self.out_dim != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.out_dim,
            });
        }
        // Augmented rows: [M | I]; reduce M to I, then the right block is M^-1.
        let mut left = self.images.clone();
        let mut right: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| (left[r] >> col) & 1 == 1)
                .ok_or(Error::Singular)?;
            left.swap(col, pivot);
            right.swap(col, pivot);
            for r in 0..n {
                if r != col && (left[r] >> col) & 1 == 1 {
                    left[r] ^= left[col];
                    right[r] ^= right[col];
                }
            }
        }
        Ok(LinearMap {
            images: right,
            out_dim: n,
        })
    }
}
