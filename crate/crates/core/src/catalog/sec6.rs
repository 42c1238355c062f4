//! Scenarios for the order-of-tau case analysis and the exponent bound.

use super::*;
use crate::group::Group;
use crate::hypothesis::{section6_tau_order, TheoremId};
use crate::num::p_pow;
use crate::params::GroupParams;

pub fn scenarios() -> Vec<Scenario> {
    vec![
        order_case(1, find_tuple(1)),
        order_case(2, find_tuple(2)),
        order_case(3, find_tuple(3)),
        boundary(),
    ]
}

/// Which of the three tau-order cases a tuple falls into (unit sigma-part,
/// c < a assumed).
fn case_of(p: &GroupParams) -> u8 {
    let shifted = p.beta + p.a - p.c;
    if shifted >= p.t {
        1
    } else if p.alpha < shifted {
        2
    } else {
        3
    }
}

/// Smallest consistent tuple in the analysed situation hitting the case.
fn find_tuple(case: u8) -> GroupParams {
    for order_exp in 3..=10u32 {
        for p in [2u64, 3] {
            if p.checked_pow(order_exp).map_or(true, |o| o > 1024) {
                continue;
            }
            for a in 2..order_exp {
                for b in 1..order_exp {
                    for t in 1..order_exp {
                        if a + b + t != order_exp {
                            continue;
                        }
                        if a < t || b < t {
                            continue;
                        }
                        for c in 1..a {
                            for r in 1..=b.min(c) {
                                for alpha in 0..=t {
                                    for beta in 0..t {
                                        let params = GroupParams {
                                            p,
                                            a,
                                            b,
                                            c,
                                            t,
                                            r,
                                            alpha,
                                            beta,
                                            s: 1,
                                            m: 1,
                                            j: 1,
                                            l: 1,
                                            epsilon: 1,
                                            abelian: false,
                                            family: None,
                                        };
                                        let g = Group::new(params);
                                        if case_of(&params) == case
                                            && section6_tau_order(&g).is_some()
                                            && g.check_consistency(0).passed()
                                        {
                                            return params;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    panic!("no consistent tuple found for order case {case}");
}

fn order_case(case: u8, params: GroupParams) -> Scenario {
    let mut b = B::new(
        &format!("6.orders.case{case}"),
        "order of tau and the exponent bound",
        params,
        p_pow(params.p, params.t),
    );
    b.consistent();
    // tau^(p^(b+a-c)) = rho^(s p^alpha + p^(beta+a-c))
    let power = p_pow(params.p, params.b + params.a - params.c);
    let rho_exp = (params.s * p_pow(params.p, params.alpha)
        + p_pow(params.p, params.beta + params.a - params.c)) as i64;
    b.elem_eq(
        "tau-power collapses to a rho-power",
        &["6.taupower"],
        word_pow(&[(T, 1)], power),
        wd(&[(R, rho_exp)]),
    );
    let anchor: &str = match case {
        1 => "6.ord1",
        2 => "6.ord2",
        _ => "6.ord3",
    };
    b.sec6("main", &[anchor, "6.sigma", "6.bound"]);
    b.hyp(
        TheoremId::Cor16,
        Some(params.a + params.b + params.t - params.c),
    );
    b.done()
}

/// The carry-merge boundary alpha = beta + a - c with p | s + j, where the
/// two rho-carries coalesce and the displayed case split overcounts.
fn boundary() -> Scenario {
    let params = GroupParams {
        p: 2,
        a: 2,
        b: 2,
        c: 1,
        t: 2,
        r: 1,
        alpha: 1,
        beta: 0,
        s: 1,
        m: 1,
        j: 1,
        l: 1,
        epsilon: 1,
        abelian: false,
        family: None,
    };
    let g = Group::new(params);
    let actual = g.elem_order(g.tau());
    let claimed = p_pow(params.p, params.b + params.t - params.beta);
    let mut b = B::new(
        "6.boundary",
        "carry merge at alpha = beta + a - c for p = 2",
        params,
        p_pow(params.p, params.t),
    );
    b.consistent();
    b.flag(
        &format!(
            "at alpha = beta + a - c the carries rho^(s p^alpha) and \
             rho^(j p^(beta+a-c)) merge when p divides s + j; here ord(tau) \
             = {actual} while the displayed case split gives {claimed}"
        ),
        &["6.ord3"],
    );
    let v = crate::num::valuation_capped(actual, params.p, 64);
    b.order(
        "actual tau-order with the extra carry",
        &["6.ord3"],
        wd(&[(T, 1)]),
        v,
    );
    b.sec6("main", &["6.bound"]);
    b.done()
}
