//! The regular representation over a prime-field context: vectors are
//! coefficient arrays over the group's normal forms, acted on by left
//! translation h . x(g) = x(hg). Linear combinations, weighted orbits, and
//! evaluation of products of such linear forms at sample points.

use crate::group::{Group, GroupElement};
use crate::scalar::{FqContext, Scalar};

/// Coefficient array of a vector in the span of the x(g).
pub type RegVector = Vec<u64>;

/// The indicator vector of a single basis element x(g).
pub fn point(group: &Group, g: GroupElement) -> RegVector {
    let mut v = vec![0u64; group.order() as usize];
    v[group.index(g)] = 1;
    v
}

/// Left translation: coefficient of the result at x(g h) is v's at x(h).
pub fn apply(group: &Group, g: GroupElement, v: &RegVector) -> RegVector {
    let mut out = vec![0u64; v.len()];
    for (hi, &coeff) in v.iter().enumerate() {
        if coeff != 0 {
            let h = group.element_at(hi);
            out[group.index(group.mul(g, h))] = coeff;
        }
    }
    out
}

pub fn add(ctx: &FqContext, a: &RegVector, b: &RegVector) -> RegVector {
    a.iter().zip(b).map(|(&x, &y)| ctx.add(x, y)).collect()
}

pub fn scale(ctx: &FqContext, c: u64, v: &RegVector) -> RegVector {
    v.iter().map(|&x| ctx.mul(c, x)).collect()
}

/// sum_(i < count) zeta^(step * i) * (g^i . v).
pub fn weighted_orbit(
    group: &Group,
    ctx: &FqContext,
    g: GroupElement,
    count: u64,
    step: i128,
    modulus: u64,
    v: &RegVector,
) -> RegVector {
    let mut acc = vec![0u64; v.len()];
    let mut shifted = v.clone();
    for i in 0..count {
        let coeff = ctx.realize(&Scalar::new(step * i as i128, modulus));
        for (slot, &val) in acc.iter_mut().zip(&shifted) {
            *slot = ctx.add(*slot, ctx.mul(coeff, val));
        }
        if i + 1 < count {
            shifted = apply(group, g, &shifted);
        }
    }
    acc
}

/// Dot product of a linear form against a sample point of the carrier space.
pub fn eval_at(ctx: &FqContext, v: &RegVector, sample: &[u64]) -> u64 {
    let mut acc = 0u64;
    for (&coeff, &x) in v.iter().zip(sample) {
        if coeff != 0 {
            acc = ctx.add(acc, ctx.mul(coeff, x));
        }
    }
    acc
}

pub fn is_zero(v: &RegVector) -> bool {
    v.iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::GroupParams;
    use crate::scalar::find_fq_contexts;

    #[test]
    fn indicator_vectors_permute() {
        let g = Group::new(GroupParams::nonabelian(2, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1).unwrap());
        let ctx = find_fq_contexts(2, 1).unwrap()[0];
        let e_vec = point(&g, g.identity());
        let moved = apply(&g, g.sigma(), &e_vec);
        assert_eq!(moved, point(&g, g.sigma()));
        // identity acts trivially
        assert_eq!(apply(&g, g.identity(), &moved), moved);
        let _ = ctx;
    }

    #[test]
    fn sigma_fixes_its_orbit_sum() {
        // X1 = sum of x(sigma^i) is fixed by sigma
        let g = Group::new(GroupParams::nonabelian(3, 2, 1, 2, 1, 1, 1, 1, 1, 0, 1, 1, 1).unwrap());
        let ctx = find_fq_contexts(3, 1).unwrap()[0];
        let x1 = weighted_orbit(
            &g,
            &ctx,
            g.sigma(),
            g.elem_order(g.sigma()),
            0,
            3,
            &point(&g, g.identity()),
        );
        assert_eq!(apply(&g, g.sigma(), &x1), x1);
    }

    #[test]
    fn action_is_a_group_action() {
        let g = Group::new(GroupParams::nonabelian(2, 1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1).unwrap());
        let v = point(&g, g.tau());
        for a in g.elements() {
            for b in g.elements() {
                let lhs = apply(&g, g.mul(a, b), &v);
                let rhs = apply(&g, a, &apply(&g, b, &v));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
