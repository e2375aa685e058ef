//! Restriction of `L(lambda(u))` to the subalgebra attached to the pyramid
//! with the bottom row removed.
//!
//! Branch weights `mu` have rows `1..n-1` with `lambda_i^{(k)} >= mu_i^{(k)} >=
//! lambda_{i+1}^{(k)}` (differences in `Z_+`). The vector
//!
//! ```text
//! zeta_mu = prod_{i, k} tau_{ni}(-m_i^{(k)} - 1) ... tau_{ni}(-l_i^{(k)} + 1) tau_{ni}(-l_i^{(k)}) xi_top
//! ```
//!
//! with `m_i^{(k)} = mu_i^{(k)} - i + 1`, factors ordered by increasing `i`
//! and `k` from the left, is the highest vector of the summand `L'(mu(u))`.

use num_traits::{One, Signed};

use super::{apply_at, Direction, Representation};
use crate::error::{Error, Result};
use crate::exactalg::{is_integer, rat_int, Rational, ScalarPoly, SparseVector, UniPoly};
use crate::patterns::weyl_dimension;

/// A branch weight `mu_i^{(k)}`, rows `1..n-1`, row `i` of length `p_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BranchWeight {
    grid: Vec<Vec<Rational>>,
}

impl BranchWeight {
    pub fn grid(&self) -> &[Vec<Rational>] {
        &self.grid
    }

    /// `mu_i^{(k)}`, 1-based.
    pub fn mu(&self, i: usize, k: usize) -> &Rational {
        &self.grid[i - 1][k - 1]
    }

    /// `m_i^{(k)} = mu_i^{(k)} - i + 1`.
    pub fn shifted(&self, i: usize, k: usize) -> Rational {
        self.mu(i, k) - rat_int(i as i64 - 1)
    }

    /// `mu_i(u) = (u + mu_i^{(1)}) ... (u + mu_i^{(p_i)})`.
    pub fn weight_poly(&self, i: usize) -> ScalarPoly {
        UniPoly::from_linear_factors(&self.grid[i - 1])
    }

    /// `mu_1(u) mu_2(u-1) ... mu_r(u-r+1)`, the `A_r` eigenvalue on `zeta_mu`.
    pub fn a_eigenvalue(&self, r: usize) -> ScalarPoly {
        (1..=r).fold(UniPoly::one(()), |acc, j| acc.mul(&self.weight_poly(j).shift(&rat_int(1 - j as i64))))
    }

    /// The grid with `mu_i^{(k)}` changed by `sign`, without validation.
    pub fn shifted_by(&self, i: usize, k: usize, sign: i64) -> BranchWeight {
        let mut grid = self.grid.clone();
        grid[i - 1][k - 1] += rat_int(sign);
        BranchWeight { grid }
    }
}

/// Highest vector and dimension of one summand of the restriction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingDatum {
    pub weight: BranchWeight,
    pub vector: SparseVector,
    /// `dim L'(mu(u))`.
    pub dim: u64,
}

impl Representation {
    fn check_branching_available(&self) -> Result<()> {
        if self.n() < 2 {
            return Err(Error::InvalidBranchingWeight("branching needs at least two rows".into()));
        }
        Ok(())
    }

    /// Validates a grid against the interlacing conditions.
    pub fn branch_weight(&self, grid: Vec<Vec<Rational>>) -> Result<BranchWeight> {
        self.check_branching_available()?;
        let n = self.n();
        if grid.len() != n - 1 {
            return Err(Error::InvalidBranchingWeight(format!("expected {} rows, got {}", n - 1, grid.len())));
        }
        for (i, row) in (1..n).zip(&grid) {
            if row.len() != self.pyramid().row(i) {
                return Err(Error::InvalidBranchingWeight(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    self.pyramid().row(i)
                )));
            }
            for (k, mu) in (1..).zip(row) {
                let above = self.spec.lambda(i, k) - mu;
                let below = mu - self.spec.lambda(i + 1, k);
                let ok = |d: &Rational| is_integer(d) && !d.is_negative();
                if !ok(&above) || !ok(&below) {
                    return Err(Error::InvalidBranchingWeight(format!(
                        "mu at (i={i}, k={k}) = {mu} is not between lambda_{i} = {} and lambda_{} = {}",
                        self.spec.lambda(i, k),
                        i + 1,
                        self.spec.lambda(i + 1, k)
                    )));
                }
            }
        }
        Ok(BranchWeight { grid })
    }

    /// All branch weights, the restriction of the top row first.
    pub fn branching_weights(&self) -> Result<Vec<BranchWeight>> {
        self.check_branching_available()?;
        let n = self.n();
        let cells: Vec<(usize, usize)> =
            (1..n).flat_map(|i| (1..=self.pyramid().row(i)).map(move |k| (i, k))).collect();
        let mut grids: Vec<Vec<Vec<Rational>>> =
            vec![(1..n).map(|i| Vec::with_capacity(self.pyramid().row(i))).collect()];
        for &(i, k) in &cells {
            let top = self.spec.lambda(i, k);
            let span = top - self.spec.lambda(i + 1, k);
            let steps = crate::exactalg::to_i64(&span).expect("dominance gives integer gaps");
            grids = grids
                .into_iter()
                .flat_map(|g| {
                    (0..=steps).map(move |t| {
                        let mut g = g.clone();
                        g[i - 1].push(top - rat_int(t));
                        g
                    })
                })
                .collect();
        }
        Ok(grids.into_iter().map(|grid| BranchWeight { grid }).collect())
    }

    /// `dim L'(mu(u))` as the product of column Weyl dimensions.
    pub fn branch_dimension(&self, mu: &BranchWeight) -> u64 {
        let n = self.n();
        let width = self.pyramid().row(n - 1);
        (1..=width)
            .map(|k| {
                let rows: Vec<Rational> = (self.pyramid().column_start(k)..n).map(|i| mu.mu(i, k).clone()).collect();
                weyl_dimension(&rows)
            })
            .product()
    }

    /// `zeta_mu`, built from `xi_top` by the lowering operators.
    pub fn branching_vector(&self, mu: &BranchWeight) -> Result<BranchingDatum> {
        let mu = self.branch_weight(mu.grid.clone())?;
        let n = self.n();
        let mut v = SparseVector::unit(self.dim(), self.basis.highest_index(), Rational::one());
        for i in (1..n).rev() {
            let tau = self.tau(i, Direction::Lowering)?;
            for k in (1..=self.pyramid().row(i)).rev() {
                let stop = -mu.shifted(i, k);
                let mut x = -self.spec.shifted(i, k);
                while x < stop {
                    v = apply_at(&tau, &x, &v);
                    x += rat_int(1);
                }
            }
        }
        let dim = self.branch_dimension(&mu);
        Ok(BranchingDatum { weight: mu, vector: v, dim })
    }

    /// `zeta_mu` for every branch weight.
    pub fn branching_data(&self) -> Result<Vec<BranchingDatum>> {
        let weights = self.branching_weights()?;
        self.tau(1, Direction::Lowering)?;
        self.exec.map(&weights, |mu| self.branching_vector(mu)).into_iter().collect()
    }
}
