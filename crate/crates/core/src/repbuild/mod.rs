//! Operator polynomials of `L(lambda(u))` in the normalized basis `xi_Lambda`.
//!
//! `A_r(u)` is diagonal with eigenvalue
//! `lambda_{r1}(u) lambda_{r2}(u-1) ... lambda_{rr}(u-r+1)` on `xi_Lambda`.
//! `B_r(u)` and `C_r(u)` have degree below `p_1 + ... + p_r`, and their
//! values on `xi_Lambda` are known at the `p_1 + ... + p_r` distinct nodes
//! `-l_{ri}^{(k)}`; each basis column is recovered by Lagrange interpolation
//! through those nodes.
//!
//! Operators are built lazily and cached per representation. Each cache slot
//! is written at most once, so concurrent readers always observe the same
//! published value.

mod branching;
mod generators;
mod lemma;

pub use branching::{BranchWeight, BranchingDatum};
pub use generators::GeneratorTable;

use std::fmt;
use std::sync::Arc;

use num_traits::One;
use once_cell::sync::OnceCell;

use crate::error::{Error, Result};
use crate::exactalg::{
    lagrange_interpolate, rat_int, Additive, OperatorPolynomial, Rational, ScalarPoly, SparseVector, UniPoly,
};
use crate::exec::Execution;
use crate::patterns::BasisIndex;
use crate::pyramid::{HighestWeightSpec, Pyramid};

/// Lowering (`tau_{ni}`, built from `C`) or raising (`tau_{in}`, built from `B`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Lowering,
    Raising,
}

/// Names one cached operator polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKey {
    A(usize),
    B(usize),
    C(usize),
    TauLow(usize),
    TauHigh(usize),
}

impl OpKey {
    /// Operator name as used in exported files.
    pub fn name(&self) -> &'static str {
        match self {
            OpKey::A(_) => "A",
            OpKey::B(_) => "B",
            OpKey::C(_) => "C",
            OpKey::TauLow(_) => "tau_low",
            OpKey::TauHigh(_) => "tau_high",
        }
    }

    pub fn index(&self) -> usize {
        match *self {
            OpKey::A(r) | OpKey::B(r) | OpKey::C(r) | OpKey::TauLow(r) | OpKey::TauHigh(r) => r,
        }
    }
}

impl fmt::Display for OpKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.name(), self.index())
    }
}

type Slot = OnceCell<Arc<OperatorPolynomial>>;

/// The module `L(lambda(u))` with its basis and lazily built operators.
#[derive(Clone)]
pub struct Representation {
    spec: HighestWeightSpec,
    basis: BasisIndex,
    exec: Execution,
    a: Vec<Slot>,
    b: Vec<Slot>,
    c: Vec<Slot>,
    tau_low: Vec<Slot>,
    tau_high: Vec<Slot>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation").field("pyramid", self.spec.pyramid()).field("dim", &self.dim()).finish()
    }
}

impl Representation {
    pub fn new(spec: HighestWeightSpec) -> Self {
        Self::with_execution(spec, Execution::default())
    }

    pub fn with_execution(spec: HighestWeightSpec, exec: Execution) -> Self {
        let basis = BasisIndex::new(&spec, exec);
        let n = spec.n();
        let slots = |m: usize| (0..m).map(|_| OnceCell::new()).collect::<Vec<_>>();
        Self {
            spec,
            basis,
            exec,
            a: slots(n),
            b: slots(n - 1),
            c: slots(n - 1),
            tau_low: slots(n - 1),
            tau_high: slots(n - 1),
        }
    }

    pub fn spec(&self) -> &HighestWeightSpec {
        &self.spec
    }

    pub fn pyramid(&self) -> &Pyramid {
        self.spec.pyramid()
    }

    pub fn basis(&self) -> &BasisIndex {
        &self.basis
    }

    pub fn execution(&self) -> Execution {
        self.exec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `R = 2 N + 2` with `N` the number of bricks.
    pub fn default_truncation(&self) -> usize {
        2 * self.pyramid().bricks() + 2
    }

    fn slot(&self, key: OpKey) -> Result<&Slot> {
        let (slots, lo, hi) = match key {
            OpKey::A(r) => (&self.a, r, self.n()),
            OpKey::B(r) => (&self.b, r, self.n() - 1),
            OpKey::C(r) => (&self.c, r, self.n() - 1),
            OpKey::TauLow(i) => (&self.tau_low, i, self.n() - 1),
            OpKey::TauHigh(i) => (&self.tau_high, i, self.n() - 1),
        };
        if lo == 0 || lo > hi {
            return Err(Error::IndexOutOfRange(format!("{key} with n = {}", self.n())));
        }
        Ok(&slots[lo - 1])
    }

    /// All operator keys in export order.
    pub fn operator_keys(&self) -> Vec<OpKey> {
        let n = self.n();
        let mut keys: Vec<OpKey> = (1..=n).map(OpKey::A).collect();
        keys.extend((1..n).map(OpKey::B));
        keys.extend((1..n).map(OpKey::C));
        keys.extend((1..n).map(OpKey::TauLow));
        keys.extend((1..n).map(OpKey::TauHigh));
        keys
    }

    pub fn operator(&self, key: OpKey) -> Result<Arc<OperatorPolynomial>> {
        let slot = self.slot(key)?;
        slot.get_or_try_init(|| {
            let poly = match key {
                OpKey::A(r) => self.build_a(r),
                OpKey::B(r) => self.build_b(r)?,
                OpKey::C(r) => self.build_c(r)?,
                OpKey::TauLow(i) => self.build_tau(i, Direction::Lowering)?,
                OpKey::TauHigh(i) => self.build_tau(i, Direction::Raising)?,
            };
            Ok(Arc::new(poly))
        })
        .cloned()
    }

    pub fn a(&self, r: usize) -> Result<Arc<OperatorPolynomial>> {
        self.operator(OpKey::A(r))
    }

    pub fn b(&self, r: usize) -> Result<Arc<OperatorPolynomial>> {
        self.operator(OpKey::B(r))
    }

    pub fn c(&self, r: usize) -> Result<Arc<OperatorPolynomial>> {
        self.operator(OpKey::C(r))
    }

    pub fn tau(&self, i: usize, direction: Direction) -> Result<Arc<OperatorPolynomial>> {
        match direction {
            Direction::Lowering => self.operator(OpKey::TauLow(i)),
            Direction::Raising => self.operator(OpKey::TauHigh(i)),
        }
    }

    /// Builds every operator (in parallel when enabled).
    pub fn build_all(&self) -> Result<()> {
        let keys = self.operator_keys();
        // tau depends on B and C, so build the generators first
        let (base, taus): (Vec<OpKey>, Vec<OpKey>) =
            keys.into_iter().partition(|k| matches!(k, OpKey::A(_) | OpKey::B(_) | OpKey::C(_)));
        for batch in [base, taus] {
            self.exec.map(&batch, |&k| self.operator(k)).into_iter().collect::<Result<Vec<_>>>()?;
        }
        Ok(())
    }

    /// A copy of this representation with `key` replaced by `poly`.
    ///
    /// Cached operators derived from `key` are dropped so they are rebuilt
    /// from the replacement; used for mutation testing.
    pub fn with_operator(&self, key: OpKey, poly: OperatorPolynomial) -> Result<Self> {
        assert_eq!(*poly.shape(), self.dim(), "operator dimension mismatch");
        self.slot(key)?;
        let mut out = self.clone();
        match key {
            OpKey::B(_) => out.tau_high.iter_mut().for_each(|s| *s = OnceCell::new()),
            OpKey::C(_) => out.tau_low.iter_mut().for_each(|s| *s = OnceCell::new()),
            _ => {}
        }
        let slot = OnceCell::new();
        let _ = slot.set(Arc::new(poly));
        let target = match key {
            OpKey::A(r) => &mut out.a[r - 1],
            OpKey::B(r) => &mut out.b[r - 1],
            OpKey::C(r) => &mut out.c[r - 1],
            OpKey::TauLow(i) => &mut out.tau_low[i - 1],
            OpKey::TauHigh(i) => &mut out.tau_high[i - 1],
        };
        *target = slot;
        Ok(out)
    }

    /// Eigenvalue of `A_r(u)` on the basis vector `index`.
    pub fn a_eigenvalue(&self, index: usize, r: usize) -> ScalarPoly {
        let p = self.basis.pattern(index);
        (1..=r).fold(UniPoly::one(()), |acc, j| {
            let factor = p.row_poly(r, j).expect("valid row").shift(&rat_int(1 - j as i64));
            acc.mul(&factor)
        })
    }

    fn build_a(&self, r: usize) -> OperatorPolynomial {
        let diag = self.exec.map_range(self.dim(), |idx| self.a_eigenvalue(idx, r));
        UniPoly::from_diagonal_polys(&diag)
    }

    fn check_level(&self, r: usize) -> Result<()> {
        if r == 0 || r >= self.n() {
            return Err(Error::IndexOutOfRange(format!("level {r} not in 1..={}", self.n() - 1)));
        }
        Ok(())
    }

    /// Interpolation nodes `-l_{ri}^{(k)}` for `i <= r`, `k <= p_i`, in `(i, k)` order.
    pub fn evaluation_points(&self, index: usize, r: usize) -> Result<Vec<(usize, usize, Rational)>> {
        self.check_level(r)?;
        let p = self.basis.pattern(index);
        let nodes: Vec<(usize, usize, Rational)> = (1..=r)
            .flat_map(|i| (1..=self.pyramid().row(i)).map(move |k| (i, k)))
            .map(|(i, k)| (i, k, -p.shifted(r, i, k).unwrap()))
            .collect();
        let mut colliding: Vec<Rational> = Vec::new();
        for (a, x) in nodes.iter().enumerate() {
            if nodes[a + 1..].iter().any(|y| y.2 == x.2) && !colliding.contains(&x.2) {
                colliding.push(x.2.clone());
            }
        }
        if colliding.is_empty() {
            Ok(nodes)
        } else {
            Err(Error::DegeneratePoints { nodes: colliding })
        }
    }

    /// `B_r(-l_{ri}^{(k)}) xi_Lambda`, straight from the action formula.
    pub fn b_node_value(&self, index: usize, r: usize, i: usize, k: usize) -> SparseVector {
        let dim = self.dim();
        let Some(target) = self.basis.moved_index(index, r, i, k, 1) else {
            return SparseVector::zero(dim);
        };
        let p = self.basis.pattern(index);
        let x = -p.shifted(r, i, k).unwrap();
        let coeff: Rational = (1..=r + 1).map(|j| p.row_value(r + 1, j, &(&x - rat_int(j as i64 - 1)))).product();
        SparseVector::unit(dim, target, -coeff)
    }

    /// `C_r(-l_{ri}^{(k)}) xi_Lambda`, straight from the action formula.
    pub fn c_node_value(&self, index: usize, r: usize, i: usize, k: usize) -> SparseVector {
        let dim = self.dim();
        let Some(target) = self.basis.moved_index(index, r, i, k, -1) else {
            return SparseVector::zero(dim);
        };
        let p = self.basis.pattern(index);
        let x = -p.shifted(r, i, k).unwrap();
        let coeff: Rational = (1..r).map(|j| p.row_value(r - 1, j, &(&x - rat_int(j as i64 - 1)))).product();
        SparseVector::unit(dim, target, coeff)
    }

    fn interpolate_columns(
        &self,
        r: usize,
        value: impl Fn(usize, usize, usize) -> SparseVector + Sync + Send,
    ) -> Result<OperatorPolynomial> {
        self.check_level(r)?;
        let dim = self.dim();
        let columns = self.exec.map_range(dim, |idx| {
            let points: Vec<(Rational, SparseVector)> =
                self.evaluation_points(idx, r)?.into_iter().map(|(i, k, x)| (x, value(idx, i, k))).collect();
            lagrange_interpolate(dim, &points)
        });
        let columns = columns.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::from_column_polys(dim, &columns))
    }

    fn build_b(&self, r: usize) -> Result<OperatorPolynomial> {
        self.interpolate_columns(r, |idx, i, k| self.b_node_value(idx, r, i, k))
    }

    fn build_c(&self, r: usize) -> Result<OperatorPolynomial> {
        self.interpolate_columns(r, |idx, i, k| self.c_node_value(idx, r, i, k))
    }

    /// `tau_{ni}(u) = C_{n-1}(u) ... C_i(u)` or `tau_{in}(u) = B_i(u) ... B_{n-1}(u)`.
    fn build_tau(&self, i: usize, direction: Direction) -> Result<OperatorPolynomial> {
        self.check_level(i)?;
        let n = self.n();
        let mut acc = UniPoly::one(self.dim());
        match direction {
            Direction::Lowering => {
                for r in (i..n).rev() {
                    acc = acc.mul(&*self.c(r)?);
                }
            }
            Direction::Raising => {
                for r in i..n {
                    acc = acc.mul(&*self.b(r)?);
                }
            }
        }
        Ok(acc)
    }

    /// The vector `zeta_Lambda` obtained by applying the `C` evaluations
    /// that lower the highest vector to the pattern `index`.
    pub fn zeta_vector(&self, index: usize) -> Result<SparseVector> {
        let n = self.n();
        let target = self.basis.pattern(index);
        let mut v = SparseVector::unit(self.dim(), self.basis.highest_index(), Rational::one());
        for i in (1..n).rev() {
            for r in i..n {
                let c = self.c(r)?;
                for k in 1..=self.pyramid().row(i) {
                    let start = -self.spec.shifted(i, k);
                    let stop = -target.shifted(r, i, k).unwrap();
                    let mut x = start;
                    while x < stop {
                        v = apply_at(&c, &x, &v);
                        x += rat_int(1);
                    }
                }
            }
        }
        Ok(v)
    }

    /// Evaluates the operator `key` at `x` and applies it to `v`.
    pub fn apply_operator_at(&self, key: OpKey, x: &Rational, v: &SparseVector) -> Result<SparseVector> {
        Ok(apply_at(&*self.operator(key)?, x, v))
    }
}

/// `P(x) v` by Horner's rule on vectors.
pub fn apply_at(p: &OperatorPolynomial, x: &Rational, v: &SparseVector) -> SparseVector {
    let mut acc = SparseVector::zero(v.dim());
    for m in p.coeffs().iter().rev() {
        acc = acc.scaled(x);
        acc.add_assign(&m.apply(v));
    }
    acc
}
