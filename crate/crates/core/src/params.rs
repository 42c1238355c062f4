//! Presentation parameters for the three-generator central extensions.
//!
//! A tuple describes the group
//!
//! ```text
//!   < s, t, r | s^(p^a) = r^(s_unit * p^alpha),
//!               t^(p^b) = s^(m_unit * p^c) * r^(j_unit * p^beta),
//!               r^(p^t) = 1,
//!               t^-1 s t = s^k * r^(l_unit),    r central >
//! ```
//!
//! written with generators sigma, tau, rho. For the abelian-base shape the
//! conjugation twist is absent (k = 1) and the sigma-part of the tau relation
//! is dropped (`m_unit = 0` encodes "absent", which also covers the sixteen
//! family presentations with c = a). Validation is structural only: whether a
//! tuple actually presents a group of order p^(a+b+t) is decided empirically
//! by `Group::check_consistency`.

use crate::num::{gcd, is_prime, p_pow};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    Abelian,
    Family(u8),
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Abelian => write!(f, "abelian"),
            FamilyTag::Family(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupParams {
    pub p: u64,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub t: u32,
    pub r: u32,
    pub alpha: u32,
    pub beta: u32,
    /// rho-unit of the sigma relation.
    pub s: u64,
    /// sigma-unit of the tau relation; 0 means the sigma-part is absent.
    pub m: u64,
    /// rho-unit of the tau relation.
    pub j: u64,
    /// rho-unit of the conjugation relation.
    pub l: u64,
    /// +1, or -1 (p = 2 only).
    pub epsilon: i64,
    /// Abelian-base shape: k = 1, no conjugation twist.
    pub abelian: bool,
    pub family: Option<FamilyTag>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRejection {
    pub violations: Vec<String>,
}

impl fmt::Display for ParamRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid parameters: {}", self.violations.join("; "))
    }
}

impl std::error::Error for ParamRejection {}

impl GroupParams {
    /// Order of the presented group when the tuple is consistent.
    pub fn order(&self) -> u64 {
        p_pow(self.p, self.a + self.b + self.t)
    }

    pub fn p_a(&self) -> u64 {
        p_pow(self.p, self.a)
    }

    pub fn p_b(&self) -> u64 {
        p_pow(self.p, self.b)
    }

    pub fn p_t(&self) -> u64 {
        p_pow(self.p, self.t)
    }

    /// Safe exponent modulus for collection: p^(a+t).
    pub fn exp_modulus(&self) -> u64 {
        p_pow(self.p, self.a + self.t)
    }

    /// k = epsilon + p^r (or 1 for the abelian shape), reduced mod `m`.
    pub fn k_mod(&self, m: u64) -> u64 {
        if self.abelian {
            return 1 % m.max(1);
        }
        let k = self.epsilon as i128 + p_pow(self.p, self.r) as i128;
        k.rem_euclid(m as i128) as u64
    }

    /// k as a signed integer (small at desk scale).
    pub fn k_int(&self) -> i128 {
        if self.abelian {
            1
        } else {
            self.epsilon as i128 + p_pow(self.p, self.r) as i128
        }
    }

    /// Abelian shape: sigma relation rho-unit i, tau relation rho-unit j,
    /// commutator [sigma, tau] = rho^l.
    pub fn abelian_shape(
        p: u64,
        a: u32,
        b: u32,
        t: u32,
        alpha: u32,
        beta: u32,
        i: u64,
        j: u64,
        l: u64,
    ) -> Result<GroupParams, ParamRejection> {
        validate(GroupParams {
            p,
            a,
            b,
            c: a,
            t,
            r: 0,
            alpha,
            beta,
            s: i,
            m: 0,
            j,
            l,
            epsilon: 1,
            abelian: true,
            family: Some(FamilyTag::Abelian),
        })
    }

    /// Nonabelian shape with explicit units.
    #[allow(clippy::too_many_arguments)]
    pub fn nonabelian(
        p: u64,
        a: u32,
        b: u32,
        c: u32,
        t: u32,
        r: u32,
        alpha: u32,
        beta: u32,
        s: u64,
        m: u64,
        j: u64,
        l: u64,
        epsilon: i64,
    ) -> Result<GroupParams, ParamRejection> {
        validate(GroupParams {
            p,
            a,
            b,
            c,
            t,
            r,
            alpha,
            beta,
            s,
            m,
            j,
            l,
            epsilon,
            abelian: false,
            family: None,
        })
    }

    /// Flat `key = value` record for the CLI config format.
    pub fn to_kv(&self) -> String {
        let mut s = format!(
            "p = {}\na = {}\nb = {}\nc = {}\nt = {}\nr = {}\nalpha = {}\nbeta = {}\ns = {}\nm = {}\nl = {}\nepsilon = {}\n",
            self.p, self.a, self.b, self.c, self.t, self.r, self.alpha, self.beta, self.s,
            self.m, self.l, self.epsilon
        );
        if self.j != 1 {
            s.push_str(&format!("j = {}\n", self.j));
        }
        match self.family {
            Some(tag) => s.push_str(&format!("family = {tag}\n")),
            None if self.abelian => s.push_str("family = abelian\n"),
            None => {}
        }
        s
    }

    /// Parse a flat `key = value` record (unknown keys rejected).
    pub fn from_kv(text: &str) -> Result<GroupParams, ParamRejection> {
        let mut map = std::collections::BTreeMap::new();
        let mut family: Option<FamilyTag> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(ParamRejection {
                    violations: vec![format!("line {}: expected key = value", lineno + 1)],
                });
            };
            let (k, v) = (k.trim(), v.trim());
            if k == "family" {
                family = Some(if v == "abelian" {
                    FamilyTag::Abelian
                } else {
                    match v.parse::<u8>() {
                        Ok(i) if (1..=16).contains(&i) => FamilyTag::Family(i),
                        _ => {
                            return Err(ParamRejection {
                                violations: vec![format!("bad family tag: {v}")],
                            })
                        }
                    }
                });
                continue;
            }
            let parsed: i64 = v.parse().map_err(|_| ParamRejection {
                violations: vec![format!("bad integer for {k}: {v}")],
            })?;
            map.insert(k.to_string(), parsed);
        }
        let get = |key: &str, default: Option<i64>| -> Result<i64, ParamRejection> {
            match map.get(key) {
                Some(v) => Ok(*v),
                None => default.ok_or_else(|| ParamRejection {
                    violations: vec![format!("missing key: {key}")],
                }),
            }
        };
        for k in map.keys() {
            if !matches!(
                k.as_str(),
                "p" | "a" | "b" | "c" | "t" | "r" | "alpha" | "beta" | "s" | "m" | "j" | "l"
                    | "epsilon"
            ) {
                return Err(ParamRejection {
                    violations: vec![format!("unknown key: {k}")],
                });
            }
        }
        let abelian = family == Some(FamilyTag::Abelian);
        let raw = GroupParams {
            p: get("p", None)? as u64,
            a: get("a", None)? as u32,
            b: get("b", None)? as u32,
            c: get("c", Some(0))? as u32,
            t: get("t", None)? as u32,
            r: get("r", Some(0))? as u32,
            alpha: get("alpha", None)? as u32,
            beta: get("beta", None)? as u32,
            s: get("s", Some(1))? as u64,
            m: get("m", if abelian { Some(0) } else { None })? as u64,
            j: get("j", Some(1))? as u64,
            l: get("l", Some(1))? as u64,
            epsilon: get("epsilon", Some(1))?,
            abelian,
            family,
        };
        validate(raw)
    }

    /// Human-readable presentation string.
    pub fn presentation(&self) -> String {
        let p = self.p;
        let pw = |e: u32| p_pow(p, e);
        let mut rels: Vec<String> = Vec::new();
        let rho_pow = |unit: u64, e: u32| -> String {
            if self.t == 0 || unit % self.p_t() == 0 && e >= self.t {
                "1".into()
            } else if unit * pw(e) % self.p_t() == 0 {
                "1".into()
            } else {
                format!("r^{}", (unit % self.p_t()) * pw(e) % self.p_t())
            }
        };
        rels.push(format!("s^{} = {}", pw(self.a), rho_pow(self.s, self.alpha)));
        let tau_rhs = {
            let rho = rho_pow(self.j, self.beta);
            if self.m == 0 {
                rho
            } else {
                let sig = format!("s^{}", self.m * pw(self.c));
                if rho == "1" {
                    sig
                } else {
                    format!("{sig} {rho}")
                }
            }
        };
        rels.push(format!("t^{} = {}", pw(self.b), tau_rhs));
        rels.push(format!("r^{} = 1", self.p_t()));
        if self.abelian {
            rels.push(format!("[s,t] = r^{}", self.l % self.p_t().max(2)));
        } else {
            let k = self.k_int();
            rels.push(format!("t^-1 s t = s^{} r^{}", k, self.l));
        }
        format!("< s, t, r | {} ; r central >", rels.join(", "))
    }
}

fn validate(raw: GroupParams) -> Result<GroupParams, ParamRejection> {
    let mut violations = Vec::new();
    if !is_prime(raw.p) {
        violations.push(format!("p = {} is not prime", raw.p));
    }
    if raw.a == 0 {
        violations.push("a = 0 rejected".into());
    }
    if raw.b == 0 {
        violations.push("b = 0 rejected".into());
    }
    if raw.a + raw.b + raw.t > 40 {
        violations.push("exponents too large for exact enumeration".into());
    }
    if raw.alpha > raw.t {
        violations.push(format!("alpha = {} exceeds t = {}", raw.alpha, raw.t));
    }
    if raw.beta > raw.t {
        violations.push(format!("beta = {} exceeds t = {}", raw.beta, raw.t));
    }
    if raw.epsilon != 1 && raw.epsilon != -1 {
        violations.push(format!("epsilon = {} not in {{+1, -1}}", raw.epsilon));
    }
    if raw.epsilon == -1 && raw.p != 2 {
        violations.push("epsilon = -1 requires p = 2".into());
    }
    if !raw.abelian {
        if raw.c > raw.a {
            violations.push(format!("c = {} exceeds a = {}", raw.c, raw.a));
        }
        if raw.r == 0 {
            violations.push("nonabelian shape needs r >= 1".into());
        } else if raw.t >= 1 {
            let cap = if raw.m == 0 { raw.b.min(raw.a) } else { raw.b.min(raw.c) };
            if raw.r > cap {
                violations.push(format!("r = {} exceeds min(b, c) = {}", raw.r, cap));
            }
        }
    }
    if raw.p.checked_pow(raw.a + raw.b + raw.t).is_none() {
        violations.push("group order overflows u64".into());
    } else {
        let pt = p_pow(raw.p, raw.t);
        let pat = p_pow(raw.p, raw.a + raw.t);
        // units: nontrivial relations need units coprime to p
        let unit_checks: [(&str, u64, u64, bool); 4] = [
            ("s", raw.s, pt, raw.alpha < raw.t),
            ("m", raw.m, pat, raw.m != 0),
            ("j", raw.j, pt, raw.beta < raw.t),
            ("l", raw.l, pt, true),
        ];
        for (name, val, bound, relevant) in unit_checks {
            if raw.t == 0 {
                continue; // all rho-exponents collapse
            }
            if !relevant {
                continue;
            }
            if val == 0 || val >= bound {
                violations.push(format!("unit {name} = {val} out of range [1, {bound})"));
            } else if gcd(val, raw.p) != 1 {
                violations.push(format!("unit {name} = {val} not coprime to p = {}", raw.p));
            }
        }
    }
    if violations.is_empty() {
        Ok(raw)
    } else {
        Err(ParamRejection { violations })
    }
}

/// Validate a raw tuple supplied field-by-field (the CLI entry point).
#[allow(clippy::too_many_arguments)]
pub fn validate_params(raw: GroupParams) -> Result<GroupParams, ParamRejection> {
    validate(raw)
}

/// Structural data of one of the sixteen displayed families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub index: u8,
    pub epsilon: i64,
    pub c_lt_a: bool,
    pub alpha_full: bool,
    pub beta_full: bool,
}

/// The family grid: index - 1 = 8*(c < a) + 4*(epsilon = -1) + 2*(alpha < t) + (beta < t).
pub fn family_spec(index: u8) -> Option<FamilySpec> {
    if !(1..=16).contains(&index) {
        return None;
    }
    let bits = index - 1;
    Some(FamilySpec {
        index,
        epsilon: if bits & 4 != 0 { -1 } else { 1 },
        c_lt_a: bits & 8 != 0,
        alpha_full: bits & 2 == 0,
        beta_full: bits & 1 == 0,
    })
}

/// Free parameters for [`build_family`]; `alpha`/`beta`/`c` are consulted
/// only when the family leaves them free.
#[derive(Debug, Clone, Copy)]
pub struct FamilyFree {
    pub p: u64,
    pub a: u32,
    pub b: u32,
    pub t: u32,
    pub r: u32,
    pub alpha: u32,
    pub beta: u32,
    pub c: u32,
}

/// Instantiate one of the sixteen displayed presentations (units 1).
pub fn build_family(index: u8, free: FamilyFree) -> Result<GroupParams, ParamRejection> {
    let spec = family_spec(index).ok_or_else(|| ParamRejection {
        violations: vec![format!("family index {index} not in 1..=16")],
    })?;
    let mut violations = Vec::new();
    if spec.epsilon == -1 && free.p != 2 {
        violations.push(format!("family {index} forces p = 2, got p = {}", free.p));
    }
    let alpha = if spec.alpha_full {
        free.t
    } else {
        if free.alpha >= free.t {
            violations.push(format!(
                "family {index} needs alpha < t, got alpha = {} with t = {}",
                free.alpha, free.t
            ));
        }
        free.alpha
    };
    let beta = if spec.beta_full {
        free.t
    } else {
        if free.beta >= free.t {
            violations.push(format!(
                "family {index} needs beta < t, got beta = {} with t = {}",
                free.beta, free.t
            ));
        }
        free.beta
    };
    let (c, m) = if spec.c_lt_a {
        if free.c >= free.a || free.c == 0 {
            violations.push(format!(
                "family {index} needs 1 <= c < a, got c = {} with a = {}",
                free.c, free.a
            ));
        }
        (free.c, 1)
    } else {
        (free.a, 0)
    };
    if !violations.is_empty() {
        return Err(ParamRejection { violations });
    }
    let params = GroupParams {
        p: free.p,
        a: free.a,
        b: free.b,
        c,
        t: free.t,
        r: free.r,
        alpha,
        beta,
        s: 1,
        m,
        j: 1,
        l: 1,
        epsilon: spec.epsilon,
        abelian: false,
        family: Some(FamilyTag::Family(index)),
    };
    validate(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free(p: u64, a: u32, b: u32, t: u32, r: u32) -> FamilyFree {
        FamilyFree {
            p,
            a,
            b,
            t,
            r,
            alpha: 0,
            beta: 0,
            c: 1,
        }
    }

    #[test]
    fn smallest_admissible_tuple() {
        let p = GroupParams::nonabelian(2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1).unwrap();
        assert_eq!(p.k_int(), 3);
        assert_eq!(p.order(), 8);
    }

    #[test]
    fn epsilon_minus_one_needs_p_two() {
        let err = GroupParams::nonabelian(3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("epsilon")));
    }

    #[test]
    fn unit_sharing_factor_with_p_rejected() {
        let err = GroupParams::nonabelian(2, 2, 2, 2, 2, 1, 0, 2, 2, 1, 1, 1, 1).unwrap_err();
        assert!(err.violations.iter().any(|v| v.contains("unit s")));
    }

    #[test]
    fn family_grid_matches_listing() {
        // family 1: eps = 1, c = a, alpha = beta = t
        let g1 = build_family(1, free(3, 2, 2, 1, 1)).unwrap();
        assert_eq!((g1.epsilon, g1.c, g1.alpha, g1.beta, g1.m), (1, 2, 1, 1, 0));
        assert_eq!(g1.k_int(), 4);
        // family 5: p forced to 2; r = 1 gives k = -1 + 2 = 1
        let g5 = build_family(5, free(2, 1, 1, 1, 1)).unwrap();
        assert_eq!(g5.k_int(), 1);
        assert!(build_family(5, free(3, 1, 1, 1, 1)).is_err());
        // family 9: c < a, alpha = beta = t
        let g9 = build_family(
            9,
            FamilyFree {
                p: 3,
                a: 2,
                b: 1,
                t: 1,
                r: 1,
                alpha: 0,
                beta: 0,
                c: 1,
            },
        )
        .unwrap();
        assert_eq!((g9.c, g9.m, g9.alpha, g9.beta), (1, 1, 1, 1));
        // family 16 exercises every flag
        let g16 = build_family(
            16,
            FamilyFree {
                p: 2,
                a: 2,
                b: 2,
                t: 2,
                r: 1,
                alpha: 1,
                beta: 1,
                c: 1,
            },
        )
        .unwrap();
        assert_eq!(g16.epsilon, -1);
        assert!(g16.c < g16.a && g16.alpha < g16.t && g16.beta < g16.t);
    }

    #[test]
    fn kv_round_trip() {
        let p = build_family(
            12,
            FamilyFree {
                p: 3,
                a: 2,
                b: 2,
                t: 2,
                r: 1,
                alpha: 1,
                beta: 0,
                c: 1,
            },
        )
        .unwrap();
        let text = p.to_kv();
        let q = GroupParams::from_kv(&text).unwrap();
        assert_eq!(p, q);
        let ab = GroupParams::abelian_shape(3, 2, 2, 1, 1, 0, 2, 1, 2).unwrap();
        assert_eq!(GroupParams::from_kv(&ab.to_kv()).unwrap(), ab);
    }

    #[test]
    fn t_zero_collapses_to_metacyclic() {
        // split metacyclic carrier: t = 0 accepted
        let p = GroupParams {
            p: 3,
            a: 2,
            b: 1,
            c: 2,
            t: 0,
            r: 1,
            alpha: 0,
            beta: 0,
            s: 1,
            m: 0,
            j: 1,
            l: 1,
            epsilon: 1,
            abelian: false,
            family: None,
        };
        assert!(validate_params(p).is_ok());
    }
}
