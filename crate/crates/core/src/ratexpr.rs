//! Rational-function expression trees and randomized identity checking over
//! prime fields, plus the cyclic-action linearization suite.
//!
//! Identities are tested at uniform random points (Schwartz-Zippel): an
//! "equal" verdict carries the explicit failure-probability bound
//! (D/q)^(trials * contexts) where D is a syntactic degree bound, reported
//! as a base-2 logarithm so 2^-100-class bounds stay representable.

use crate::num::derive_seed;
use crate::report::VerificationReport;
use crate::scalar::{FqContext, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::rc::Rc;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("division by zero at the sample point")]
    DivisionByZero,
    #[error("resample cap exceeded: expression is degenerate on this field")]
    ResampleCapExceeded,
}

/// Expression tree over {variable, root-of-unity constant, integer constant,
/// sum, product, quotient, integer power}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RatExpr {
    Var(usize),
    Const(Scalar),
    Int(i64),
    Sum(Vec<Rc<RatExpr>>),
    Prod(Vec<Rc<RatExpr>>),
    Quot(Rc<RatExpr>, Rc<RatExpr>),
    Pow(Rc<RatExpr>, i64),
}

impl RatExpr {
    pub fn var(i: usize) -> Rc<RatExpr> {
        Rc::new(RatExpr::Var(i))
    }

    pub fn int(n: i64) -> Rc<RatExpr> {
        Rc::new(RatExpr::Int(n))
    }

    pub fn scalar(s: Scalar) -> Rc<RatExpr> {
        Rc::new(RatExpr::Const(s))
    }

    pub fn sum(terms: Vec<Rc<RatExpr>>) -> Rc<RatExpr> {
        Rc::new(RatExpr::Sum(terms))
    }

    pub fn prod(factors: Vec<Rc<RatExpr>>) -> Rc<RatExpr> {
        Rc::new(RatExpr::Prod(factors))
    }

    pub fn quot(a: Rc<RatExpr>, b: Rc<RatExpr>) -> Rc<RatExpr> {
        Rc::new(RatExpr::Quot(a, b))
    }

    pub fn pow(a: Rc<RatExpr>, e: i64) -> Rc<RatExpr> {
        Rc::new(RatExpr::Pow(a, e))
    }

    /// (numerator bound, denominator bound) on total degree after reduction.
    pub fn degree_bounds(&self) -> (u64, u64) {
        match self {
            RatExpr::Var(_) => (1, 0),
            RatExpr::Const(_) | RatExpr::Int(_) => (0, 0),
            RatExpr::Sum(terms) => {
                let mut dn = 0u64;
                let mut dd = 0u64;
                for t in terms {
                    let (tn, td) = t.degree_bounds();
                    // a/b + c/d = (ad + cb) / (bd)
                    dn = dn.saturating_add(td).max(tn.saturating_add(dd));
                    dd = dd.saturating_add(td);
                }
                (dn, dd)
            }
            RatExpr::Prod(factors) => {
                let mut dn = 0u64;
                let mut dd = 0u64;
                for f in factors {
                    let (fn_, fd) = f.degree_bounds();
                    dn = dn.saturating_add(fn_);
                    dd = dd.saturating_add(fd);
                }
                (dn, dd)
            }
            RatExpr::Quot(a, b) => {
                let (an, ad) = a.degree_bounds();
                let (bn, bd) = b.degree_bounds();
                (an.saturating_add(bd), ad.saturating_add(bn))
            }
            RatExpr::Pow(a, e) => {
                let (an, ad) = a.degree_bounds();
                let m = e.unsigned_abs();
                if *e >= 0 {
                    (an.saturating_mul(m), ad.saturating_mul(m))
                } else {
                    (ad.saturating_mul(m), an.saturating_mul(m))
                }
            }
        }
    }

    /// Combined degree bound D = numerator bound + denominator bound.
    pub fn degree_bound(&self) -> u64 {
        let (dn, dd) = self.degree_bounds();
        dn.saturating_add(dd)
    }

    pub fn max_var(&self) -> Option<usize> {
        match self {
            RatExpr::Var(i) => Some(*i),
            RatExpr::Const(_) | RatExpr::Int(_) => None,
            RatExpr::Sum(v) | RatExpr::Prod(v) => v.iter().filter_map(|e| e.max_var()).max(),
            RatExpr::Quot(a, b) => a.max_var().max(b.max_var()),
            RatExpr::Pow(a, _) => a.max_var(),
        }
    }
}

/// Value of the expression at a point, constants realized through the
/// context's root of unity.
pub fn eval(expr: &RatExpr, point: &[u64], ctx: &FqContext) -> Result<u64, EvalError> {
    Ok(match expr {
        RatExpr::Var(i) => point[*i],
        RatExpr::Const(s) => ctx.realize(s),
        RatExpr::Int(n) => ctx.int(*n as i128),
        RatExpr::Sum(terms) => {
            let mut acc = 0u64;
            for t in terms {
                acc = ctx.add(acc, eval(t, point, ctx)?);
            }
            acc
        }
        RatExpr::Prod(factors) => {
            let mut acc = 1u64;
            for f in factors {
                acc = ctx.mul(acc, eval(f, point, ctx)?);
            }
            acc
        }
        RatExpr::Quot(a, b) => {
            let den = eval(b, point, ctx)?;
            let inv = ctx.inv(den).ok_or(EvalError::DivisionByZero)?;
            ctx.mul(eval(a, point, ctx)?, inv)
        }
        RatExpr::Pow(a, e) => {
            let base = eval(a, point, ctx)?;
            if *e >= 0 {
                ctx.pow(base, *e as u64)
            } else {
                let inv = ctx.inv(base).ok_or(EvalError::DivisionByZero)?;
                ctx.pow(inv, e.unsigned_abs())
            }
        }
    })
}

/// Per-variable images defining the action of one group generator.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    pub images: Vec<Rc<RatExpr>>,
}

impl SubstitutionMap {
    pub fn apply(&self, expr: &RatExpr) -> Rc<RatExpr> {
        match expr {
            RatExpr::Var(i) => self.images[*i].clone(),
            RatExpr::Const(s) => RatExpr::scalar(*s),
            RatExpr::Int(n) => RatExpr::int(*n),
            RatExpr::Sum(v) => RatExpr::sum(v.iter().map(|e| self.apply(e)).collect()),
            RatExpr::Prod(v) => RatExpr::prod(v.iter().map(|e| self.apply(e)).collect()),
            RatExpr::Quot(a, b) => RatExpr::quot(self.apply(a), self.apply(b)),
            RatExpr::Pow(a, e) => RatExpr::pow(self.apply(a), *e),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum Verdict {
    Equal {
        /// log2 of the Schwartz-Zippel failure bound.
        bound_log2: f64,
    },
    Unequal {
        context_q: u64,
        witness_point: Vec<u64>,
    },
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }
}

const RESAMPLE_CAP: usize = 100;

/// Randomized equality check of two expressions across several contexts.
/// Syntactically equal trees short-circuit with bound 0 (log2 = -inf).
pub fn check_identity(
    lhs: &RatExpr,
    rhs: &RatExpr,
    trials: usize,
    ctxs: &[FqContext],
    seed: u64,
) -> Result<Verdict, EvalError> {
    assert!(trials >= 1 && !ctxs.is_empty());
    if lhs == rhs {
        return Ok(Verdict::Equal {
            bound_log2: f64::NEG_INFINITY,
        });
    }
    let nvars = lhs.max_var().max(rhs.max_var()).map_or(0, |v| v + 1);
    let d = lhs.degree_bound().saturating_add(rhs.degree_bound()).max(1);
    let mut bound_log2 = 0f64;
    for (ci, ctx) in ctxs.iter().enumerate() {
        for trial in 0..trials {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(
                seed,
                &format!("identity ctx{ci} trial{trial}"),
            ));
            let mut done = false;
            for _ in 0..RESAMPLE_CAP {
                let point: Vec<u64> = (0..nvars).map(|_| rng.gen_range(0..ctx.q)).collect();
                let l = match eval(lhs, &point, ctx) {
                    Ok(v) => v,
                    Err(EvalError::DivisionByZero) => continue,
                    Err(e) => return Err(e),
                };
                let r = match eval(rhs, &point, ctx) {
                    Ok(v) => v,
                    Err(EvalError::DivisionByZero) => continue,
                    Err(e) => return Err(e),
                };
                if l != r {
                    return Ok(Verdict::Unequal {
                        context_q: ctx.q,
                        witness_point: point,
                    });
                }
                done = true;
                break;
            }
            if !done {
                return Err(EvalError::ResampleCapExceeded);
            }
            bound_log2 += (d as f64).log2() - (ctx.q as f64).log2();
        }
    }
    Ok(Verdict::Equal { bound_log2 })
}

/// The cyclic-shift action tau: v_1 -> v_2 -> ... -> v_(n-1) -> (v_1...v_(n-1))^-1.
pub fn cyclic_shift_action(n: usize) -> SubstitutionMap {
    let mut images = Vec::with_capacity(n - 1);
    for i in 0..n - 1 {
        if i + 1 < n - 1 {
            images.push(RatExpr::var(i + 1));
        } else {
            let all = RatExpr::prod((0..n - 1).map(RatExpr::var).collect());
            images.push(RatExpr::pow(all, -1));
        }
    }
    SubstitutionMap { images }
}

/// Linearization suite for the cyclic action of order n on n - 1 variables:
/// builds w_0, ..., w_n and s_1, ..., s_(n-1), checks the vanishing sum, the
/// cyclic shift on the w's, the diagonalized action tau(s_i) = xi^i s_i, and
/// a numeric round trip recovering the v's from the s's.
pub fn lemma_2_8_suite(
    n: usize,
    trials: usize,
    ctxs: &[FqContext],
    seed: u64,
) -> Result<VerificationReport, EvalError> {
    assert!(n >= 2);
    for ctx in ctxs {
        assert!(ctx.modulus % n as u64 == 0, "context must realize xi_n");
        assert!(ctx.q % n as u64 == 1);
    }
    let mut rep = VerificationReport::new(format!("linearization suite n = {n}"));
    let tau = cyclic_shift_action(n);
    let nv = n - 1;

    // w_0 = 1 + v1 + v1 v2 + ... + v1...v_(n-1)
    let mut terms: Vec<Rc<RatExpr>> = vec![RatExpr::int(1)];
    for i in 0..nv {
        terms.push(RatExpr::prod((0..=i).map(RatExpr::var).collect()));
    }
    let w0 = RatExpr::sum(terms);
    // w_1 = 1/w_0 - 1/n, w_(i+1) = (v1...v_i)/w_0 - 1/n
    let inv_n = RatExpr::quot(RatExpr::int(1), RatExpr::int(n as i64));
    let neg_inv_n = RatExpr::prod(vec![RatExpr::int(-1), inv_n]);
    let mut w: Vec<Rc<RatExpr>> = Vec::with_capacity(n);
    w.push(RatExpr::sum(vec![
        RatExpr::quot(RatExpr::int(1), w0.clone()),
        neg_inv_n.clone(),
    ]));
    for i in 1..n {
        let prefix = RatExpr::prod((0..i.min(nv)).map(RatExpr::var).collect());
        w.push(RatExpr::sum(vec![
            RatExpr::quot(prefix, w0.clone()),
            neg_inv_n.clone(),
        ]));
    }

    // (i) w_1 + ... + w_n = 0
    let vanish = check_identity(
        &RatExpr::sum(w.clone()),
        &RatExpr::int(0),
        trials,
        ctxs,
        derive_seed(seed, "vanishing-sum"),
    )?;
    rep.check("w_1 + ... + w_n = 0", vanish.is_equal(), || format!("{vanish:?}"));

    // (ii) tau(w_j) = w_(j+1), cyclically
    let mut shift_ok = true;
    let mut shift_bound = 0f64;
    for j in 0..n {
        let lhs = tau.apply(&w[j]);
        let rhs = &w[(j + 1) % n];
        match check_identity(&lhs, rhs, trials, ctxs, derive_seed(seed, &format!("shift{j}")))? {
            Verdict::Equal { bound_log2 } => shift_bound += bound_log2.max(-1e9),
            v @ Verdict::Unequal { .. } => {
                shift_ok = false;
                rep.check(format!("tau(w_{}) = w_{}", j + 1, (j + 1) % n + 1), false, || {
                    format!("{v:?}")
                });
                break;
            }
        }
    }
    if shift_ok {
        rep.push(
            format!("tau shifts the w-chain cyclically (bound 2^{shift_bound:.1})"),
            crate::report::Status::Pass,
            None,
        );
    }

    // s_i = sum_j xi^(-ij) w_j; (iii) tau(s_i) = xi^i s_i
    let xi = |e: i128| Scalar::new(e, n as u64);
    let s: Vec<Rc<RatExpr>> = (1..n)
        .map(|i| {
            RatExpr::sum(
                (1..=n)
                    .map(|j| {
                        RatExpr::prod(vec![
                            RatExpr::scalar(xi(-(i as i128) * j as i128)),
                            w[j - 1].clone(),
                        ])
                    })
                    .collect(),
            )
        })
        .collect();
    let mut eigen_bound = 0f64;
    for (idx, si) in s.iter().enumerate() {
        let i = idx + 1;
        let lhs = tau.apply(si);
        let rhs = RatExpr::prod(vec![RatExpr::scalar(xi(i as i128)), si.clone()]);
        match check_identity(&lhs, &rhs, trials, ctxs, derive_seed(seed, &format!("eigen{i}")))? {
            Verdict::Equal { bound_log2 } => eigen_bound += bound_log2.max(-1e9),
            v @ Verdict::Unequal { .. } => {
                rep.check(format!("tau(s_{i}) = xi^{i} s_{i}"), false, || format!("{v:?}"));
                return Ok(rep);
            }
        }
    }
    rep.push(
        format!("tau(s_i) = xi^i s_i for all i (bound 2^{eigen_bound:.1})"),
        crate::report::Status::Pass,
        None,
    );

    // (iv) numeric round trip: from s-values recover w-values then v-values
    for (ci, ctx) in ctxs.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, &format!("roundtrip{ci}")));
        let mut ok = false;
        'resample: for _ in 0..RESAMPLE_CAP {
            let point: Vec<u64> = (0..nv).map(|_| rng.gen_range(1..ctx.q)).collect();
            let s_vals: Result<Vec<u64>, _> =
                s.iter().map(|si| eval(si, &point, ctx)).collect();
            let Ok(s_vals) = s_vals else { continue };
            // w_j = (1/n) sum_i xi^(ij) s_i  (the i = 0 term vanishes)
            let n_inv = ctx.inv(ctx.int(n as i128)).expect("char does not divide n");
            let mut w_vals = Vec::with_capacity(n);
            for j in 1..=n {
                let mut acc = 0u64;
                for (idx, sv) in s_vals.iter().enumerate() {
                    let i = idx + 1;
                    let root = ctx.realize(&xi((i * j) as i128));
                    acc = ctx.add(acc, ctx.mul(root, *sv));
                }
                w_vals.push(ctx.mul(acc, n_inv));
            }
            // w_0 = 1 / (w_1 + 1/n), then v-prefix products from w_(i+1)
            let denom = ctx.add(w_vals[0], n_inv);
            let Some(w0_val) = ctx.inv(denom) else { continue 'resample };
            let mut prev_prefix = 1u64;
            let mut recovered = Vec::with_capacity(nv);
            for i in 1..=nv {
                // v1...v_i = (w_(i+1) + 1/n) * w_0
                let prefix = ctx.mul(ctx.add(w_vals[i], n_inv), w0_val);
                let Some(prev_inv) = ctx.inv(prev_prefix) else { continue 'resample };
                recovered.push(ctx.mul(prefix, prev_inv));
                prev_prefix = prefix;
            }
            if recovered == point {
                ok = true;
            }
            break;
        }
        rep.check(
            format!("round trip recovers the inputs (q = {})", ctx.q),
            ok,
            || "reconstruction mismatch".into(),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::find_fq_contexts;

    fn ctxs(n: u64) -> Vec<FqContext> {
        find_fq_contexts(n, 2).unwrap()
    }

    #[test]
    fn eval_basics() {
        let ctx = ctxs(2)[0];
        let v1 = RatExpr::var(0);
        assert_eq!(eval(&v1, &[5], &ctx).unwrap(), 5);
        // w_0 for n = 2 at v1 = 3 is 1 + 3 = 4
        let w0 = RatExpr::sum(vec![RatExpr::int(1), RatExpr::var(0)]);
        assert_eq!(eval(&w0, &[3], &ctx).unwrap(), 4);
        let inv = RatExpr::pow(RatExpr::prod(vec![RatExpr::var(0), RatExpr::var(1)]), -1);
        assert_eq!(
            eval(&inv, &[0, 7], &ctx).unwrap_err(),
            EvalError::DivisionByZero
        );
    }

    #[test]
    fn identity_checks() {
        let c = ctxs(2);
        // (v1 + 1)^2 = v1^2 + 2 v1 + 1
        let lhs = RatExpr::pow(RatExpr::sum(vec![RatExpr::var(0), RatExpr::int(1)]), 2);
        let rhs = RatExpr::sum(vec![
            RatExpr::pow(RatExpr::var(0), 2),
            RatExpr::prod(vec![RatExpr::int(2), RatExpr::var(0)]),
            RatExpr::int(1),
        ]);
        assert!(check_identity(&lhs, &rhs, 16, &c, 7).unwrap().is_equal());
        // v1 != v2, with witness
        let v = check_identity(&RatExpr::var(0), &RatExpr::var(1), 4, &c, 7).unwrap();
        assert!(!v.is_equal());
        // syntactic equality short-circuits
        match check_identity(&lhs, &lhs, 1, &c, 7).unwrap() {
            Verdict::Equal { bound_log2 } => assert_eq!(bound_log2, f64::NEG_INFINITY),
            _ => panic!(),
        }
    }

    #[test]
    fn degree_bound_is_additive() {
        // (v0 + 1)/(v1 v2): numerator degree 1, denominator degree 2
        let e = RatExpr::quot(
            RatExpr::sum(vec![RatExpr::var(0), RatExpr::int(1)]),
            RatExpr::prod(vec![RatExpr::var(1), RatExpr::var(2)]),
        );
        assert_eq!(e.degree_bounds(), (1, 2));
        // squaring doubles both bounds
        assert_eq!(RatExpr::pow(e, 2).degree_bounds(), (2, 4));
    }

    #[test]
    fn suite_n2_hand_identity() {
        let c = ctxs(2);
        let rep = lemma_2_8_suite(2, 8, &c, 11).unwrap();
        assert!(rep.passed(), "{rep:?}");
        // s_1 = -w_1 + w_2 and tau(s_1) = -s_1, expanded by hand
        let w0 = RatExpr::sum(vec![RatExpr::int(1), RatExpr::var(0)]);
        let half = RatExpr::quot(RatExpr::int(1), RatExpr::int(2));
        let w1 = RatExpr::sum(vec![
            RatExpr::quot(RatExpr::int(1), w0.clone()),
            RatExpr::prod(vec![RatExpr::int(-1), half.clone()]),
        ]);
        let w2 = RatExpr::sum(vec![
            RatExpr::quot(RatExpr::var(0), w0),
            RatExpr::prod(vec![RatExpr::int(-1), half]),
        ]);
        let s1 = RatExpr::sum(vec![RatExpr::prod(vec![RatExpr::int(-1), w1]), w2]);
        let tau = cyclic_shift_action(2);
        let lhs = tau.apply(&s1);
        let rhs = RatExpr::prod(vec![RatExpr::int(-1), s1]);
        assert!(check_identity(&lhs, &rhs, 16, &c, 13).unwrap().is_equal());
    }

    #[test]
    fn suite_wrong_root_fails() {
        // n = 4 with s_1 built correctly but the claimed eigenvalue taken
        // from a root of order 2 instead of 4: the eigen check must fail.
        let c = ctxs(4);
        let tau = cyclic_shift_action(4);
        let xi = |e: i128| Scalar::new(e, 4);
        let mut terms = vec![RatExpr::int(1)];
        for i in 0..3 {
            terms.push(RatExpr::prod((0..=i).map(RatExpr::var).collect()));
        }
        let w0 = RatExpr::sum(terms);
        let quarter = RatExpr::quot(RatExpr::int(1), RatExpr::int(4));
        let neg_q = RatExpr::prod(vec![RatExpr::int(-1), quarter]);
        let mut w = vec![RatExpr::sum(vec![
            RatExpr::quot(RatExpr::int(1), w0.clone()),
            neg_q.clone(),
        ])];
        for i in 1..4usize {
            let prefix = RatExpr::prod((0..i.min(3)).map(RatExpr::var).collect());
            w.push(RatExpr::sum(vec![
                RatExpr::quot(prefix, w0.clone()),
                neg_q.clone(),
            ]));
        }
        let s1 = RatExpr::sum(
            (1..=4usize)
                .map(|j| RatExpr::prod(vec![RatExpr::scalar(xi(-(j as i128))), w[j - 1].clone()]))
                .collect(),
        );
        let lhs = tau.apply(&s1);
        let good = RatExpr::prod(vec![RatExpr::scalar(xi(1)), s1.clone()]);
        assert!(check_identity(&lhs, &good, 8, &c, 17).unwrap().is_equal());
        let bad = RatExpr::prod(vec![RatExpr::scalar(Scalar::new(2, 4)), s1]);
        assert!(!check_identity(&lhs, &bad, 8, &c, 17).unwrap().is_equal());
    }

    #[test]
    fn suite_covers_required_sizes() {
        for n in [3usize, 4, 5] {
            let c = ctxs(n as u64);
            let rep = lemma_2_8_suite(n, 8, &c, 19).unwrap();
            assert!(rep.passed(), "n = {n}: {rep:?}");
        }
    }
}
