use num_traits::{One, Zero};

use super::{Additive, Rational, UniPoly};
use crate::error::{Error, Result};

/// Unique polynomial of degree `< points.len()` through the given
/// `(node, value)` pairs, by the Lagrange formula.
///
/// Values may be of any [`Additive`] type (scalars, sparse vectors, matrices).
pub fn lagrange_interpolate<T: Additive>(shape: T::Shape, points: &[(Rational, T)]) -> Result<UniPoly<T>> {
    let d = points.len();
    let nodes: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut colliding = Vec::new();
    for a in 0..d {
        for b in (a + 1)..d {
            if nodes[a] == nodes[b] && !colliding.contains(nodes[a]) {
                colliding.push(nodes[a].clone());
            }
        }
    }
    if !colliding.is_empty() {
        return Err(Error::DegeneratePoints { nodes: colliding });
    }
    if d == 0 {
        return Ok(UniPoly::zero(shape));
    }

    // full(u) = prod_m (u - x_m), coefficients low to high
    let mut full = vec![Rational::one()];
    for x in &nodes {
        let mut next = vec![Rational::zero(); full.len() + 1];
        for (j, c) in full.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * *x;
        }
        full = next;
    }

    let mut out = vec![T::zero_of(&shape); d];
    for (j, (xj, wj)) in points.iter().enumerate() {
        if wj.is_null() {
            continue;
        }
        // basis(u) = full(u) / (u - x_j), by synthetic division
        let mut basis = vec![Rational::zero(); d];
        let mut carry = Rational::zero();
        for k in (0..d).rev() {
            carry = &full[k + 1] + &carry * xj;
            basis[k] = carry.clone();
        }
        let denom: Rational = nodes.iter().enumerate().filter(|&(m, _)| m != j).map(|(_, xm)| xj - *xm).product();
        for (slot, b) in out.iter_mut().zip(&basis) {
            if !b.is_zero() {
                slot.add_scaled(wj, &(b / &denom));
            }
        }
    }
    Ok(UniPoly::from_coeffs(shape, out))
}
