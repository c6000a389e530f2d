//! The Loday complex and Leibniz homology, the Chevalley–Eilenberg complex,
//! the bullet square and the comparison map `HL_2 -> H_2`.

mod chevalley;
mod loday;

pub use chevalley::{
    alternation_map, ce_boundary, chevalley_eilenberg_homology, comparison_t, exterior_basis,
    Comparison,
};
pub use loday::{
    bullet_square, induced_homology_map, leibniz_homology, leibniz_homology_upto, loday_boundary,
    tensor_power_map, BulletSquare,
};

use crate::error::{Error, Result};
use crate::exactla::{image, kernel, FieldSpec, LinearMap, Subquotient, Subspace};

/// Bounds on homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomologyConfig {
    pub max_degree: usize,
    /// Largest chain space dimension that may be built.
    pub chain_limit: usize,
}

impl Default for HomologyConfig {
    fn default() -> Self {
        HomologyConfig {
            max_degree: 3,
            chain_limit: 10_000,
        }
    }
}

impl HomologyConfig {
    pub fn with_max_degree(max_degree: usize) -> Self {
        HomologyConfig {
            max_degree,
            ..Self::default()
        }
    }

    pub(crate) fn admit(&self, degree: usize, chain_dim: Option<usize>) -> Result<()> {
        if degree > self.max_degree {
            return Err(Error::DegreeTooLarge {
                degree,
                max: self.max_degree,
            });
        }
        match chain_dim {
            Some(d) if d <= self.chain_limit => Ok(()),
            Some(d) => Err(Error::CapacityExceeded {
                dim: d,
                limit: self.chain_limit,
            }),
            None => Err(Error::CapacityExceeded {
                dim: usize::MAX,
                limit: self.chain_limit,
            }),
        }
    }
}

/// Chain spaces `C_0, ..., C_N` with `differentials[k - 1] = d_k: C_k -> C_{k-1}`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub field: FieldSpec,
    pub dims: Vec<usize>,
    pub differentials: Vec<LinearMap>,
}

impl ChainComplex {
    pub fn new(field: FieldSpec, dims: Vec<usize>, differentials: Vec<LinearMap>) -> Result<Self> {
        if differentials.len() + 1 != dims.len() {
            return Err(Error::DimensionMismatch {
                expected: dims.len().saturating_sub(1),
                found: differentials.len(),
            });
        }
        for (k, d) in differentials.iter().enumerate() {
            if d.domain_dim() != dims[k + 1] || d.codomain_dim() != dims[k] {
                return Err(Error::DimensionMismatch {
                    expected: dims[k + 1],
                    found: d.domain_dim(),
                });
            }
        }
        let cx = ChainComplex {
            field,
            dims,
            differentials,
        };
        if let Some(k) = cx.first_nonzero_square() {
            return Err(Error::WellDefinedness(format!("d_{k} ∘ d_{} != 0", k + 1)));
        }
        Ok(cx)
    }

    pub fn top(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn differential(&self, k: usize) -> &LinearMap {
        &self.differentials[k - 1]
    }

    fn first_nonzero_square(&self) -> Option<usize> {
        (1..self.differentials.len()).find(|&k| {
            !self.differentials[k - 1]
                .compose(&self.differentials[k])
                .is_zero()
        })
    }

    /// `H_n = ker d_n / im d_{n+1}` for `n < top`; `d_0` is zero.
    pub fn homology(&self, n: usize) -> Result<HomologyResult> {
        if n >= self.top() {
            return Err(Error::DegreeTooLarge {
                degree: n,
                max: self.top().saturating_sub(1),
            });
        }
        let cycles = if n == 0 {
            Subspace::full(self.field, self.dims[0])
        } else {
            kernel(self.differential(n))
        };
        let boundaries = image(self.differential(n + 1));
        Ok(HomologyResult {
            degree: n,
            space: Subquotient::new(cycles, boundaries)?,
        })
    }
}

/// A homology group `Z_n / B_n` inside the chain space of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyResult {
    pub degree: usize,
    pub space: Subquotient,
}

impl HomologyResult {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn cycles(&self) -> &Subspace {
        self.space.sub()
    }

    pub fn boundaries(&self) -> &Subspace {
        self.space.boundaries()
    }

    /// Chain-level cycles representing the coordinate basis.
    pub fn cycle_section(&self) -> Vec<crate::exactla::Vector> {
        self.space.representatives()
    }
}

pub(crate) fn checked_pow(d: usize, n: usize) -> Option<usize> {
    d.checked_pow(u32::try_from(n).ok()?)
}
