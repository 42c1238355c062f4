//! Scalar-times-monomial maps on Laurent variables, their composition and
//! inversion, induced actions under monomial substitutions, fixed-monomial
//! lattices, and kernels of group actions by such maps.
//!
//! A map sends x_i to zeta^(c_i) * prod_j x_j^(A_ij) with A unimodular, so
//! it is an automorphism of the Laurent variable lattice twisted by roots of
//! unity. Rows are kept sparse: the permutation-with-scalar maps that
//! dominate the catalog compose in linear time.

use crate::group::{Gen, Group, GroupElement, Subgroup, Word};
use crate::lattice::{self, Mat};
use crate::num::reduce_signed;
use crate::params::GroupParams;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonomialError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("matrix is not unimodular (det {0})")]
    NotUnimodular(i128),
    #[error("substitution rows are not of full row rank")]
    RankDeficient,
    #[error("map does not stabilize the substitution lattice (row {0})")]
    LatticeNotStabilized(usize),
    #[error("map is not diagonal")]
    NotDiagonal,
}

/// x_i |-> zeta^(scalars[i]) * prod_j x_j^(rows[i][j]), rows sparse and
/// sorted by column.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub n: usize,
    pub modulus: u64,
    rows: Vec<Vec<(usize, i64)>>,
    scalars: Vec<u64>,
}

fn sparsify(row: &[i64]) -> Vec<(usize, i64)> {
    row.iter()
        .enumerate()
        .filter(|(_, &v)| v != 0)
        .map(|(j, &v)| (j, v))
        .collect()
}

impl MonomialMap {
    pub fn identity(n: usize, modulus: u64) -> Self {
        MonomialMap {
            n,
            modulus,
            rows: (0..n).map(|i| vec![(i, 1)]).collect(),
            scalars: vec![0; n],
        }
    }

    /// Build from dense rows, checking unimodularity.
    pub fn new(
        dense: Vec<Vec<i64>>,
        scalars: Vec<i128>,
        modulus: u64,
    ) -> Result<Self, MonomialError> {
        let n = dense.len();
        if scalars.len() != n {
            return Err(MonomialError::DimensionMismatch(n, scalars.len()));
        }
        let mat: Mat = dense
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        let d = lattice::det(&mat);
        if d != 1 && d != -1 {
            return Err(MonomialError::NotUnimodular(d));
        }
        Ok(MonomialMap {
            n,
            modulus,
            rows: dense.iter().map(|r| sparsify(r)).collect(),
            scalars: scalars.iter().map(|&c| reduce_signed(c, modulus)).collect(),
        })
    }

    /// Diagonal scaling map: x_i |-> zeta^(exps[i]) x_i.
    pub fn diagonal(exps: Vec<i128>, modulus: u64) -> Self {
        let n = exps.len();
        MonomialMap {
            n,
            modulus,
            rows: (0..n).map(|i| vec![(i, 1)]).collect(),
            scalars: exps.iter().map(|&c| reduce_signed(c, modulus)).collect(),
        }
    }

    /// Cycle map: x_i |-> x_(i+1), with the wrap x_(n-1) |-> zeta^(wrap) x_0.
    pub fn cycle(n: usize, wrap: i128, modulus: u64) -> Self {
        let mut rows: Vec<Vec<(usize, i64)>> = (0..n).map(|i| vec![((i + 1) % n, 1)]).collect();
        if n == 1 {
            rows[0] = vec![(0, 1)];
        }
        let mut scalars = vec![0u64; n];
        if n > 0 {
            scalars[n - 1] = reduce_signed(wrap, modulus);
        }
        MonomialMap {
            n,
            modulus,
            rows,
            scalars,
        }
    }

    pub fn row(&self, i: usize) -> &[(usize, i64)] {
        &self.rows[i]
    }

    pub fn scalar_exp(&self, i: usize) -> u64 {
        self.scalars[i]
    }

    pub fn scalar(&self, i: usize) -> Scalar {
        Scalar {
            exp: self.scalars[i],
            modulus: self.modulus,
        }
    }

    pub fn dense_rows(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0i64; self.n]; self.n];
        for (i, row) in self.rows.iter().enumerate() {
            for &(j, v) in row {
                out[i][j] = v;
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.scalars.iter().all(|&c| c == 0)
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.as_slice() == [(i, 1)])
    }

    /// Is every row a single variable with coefficient 1 or -1 and every
    /// column hit exactly once? (Permutation-with-inversion maps invert in
    /// linear time.)
    fn permutation_like(&self) -> Option<Vec<(usize, i64)>> {
        let mut hit = vec![false; self.n];
        let mut perm = Vec::with_capacity(self.n);
        for row in &self.rows {
            if row.len() != 1 || row[0].1.abs() != 1 {
                return None;
            }
            let (j, e) = row[0];
            if hit[j] {
                return None;
            }
            hit[j] = true;
            perm.push((j, e));
        }
        Some(perm)
    }

    /// "Apply self, then g": matrix part A_self * A_g, scalar part
    /// c_self + A_self * c_g.
    pub fn compose(&self, g: &MonomialMap) -> Result<MonomialMap, MonomialError> {
        if self.n != g.n {
            return Err(MonomialError::DimensionMismatch(self.n, g.n));
        }
        if self.modulus != g.modulus {
            return Err(MonomialError::ModulusMismatch(self.modulus, g.modulus));
        }
        let m = self.modulus;
        let mut rows = Vec::with_capacity(self.n);
        let mut scalars = Vec::with_capacity(self.n);
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for i in 0..self.n {
            acc.clear();
            let mut c = self.scalars[i] as i128;
            for &(j, f) in &self.rows[i] {
                c += f as i128 * g.scalars[j] as i128;
                for &(k, v) in &g.rows[j] {
                    *acc.entry(k).or_insert(0) += f * v;
                }
            }
            rows.push(
                acc.iter()
                    .filter(|(_, &v)| v != 0)
                    .map(|(&k, &v)| (k, v))
                    .collect(),
            );
            scalars.push(reduce_signed(c, m));
        }
        Ok(MonomialMap {
            n: self.n,
            modulus: m,
            rows,
            scalars,
        })
    }

    pub fn inverse(&self) -> MonomialMap {
        if let Some(perm) = self.permutation_like() {
            // x_i |-> zeta^(c_i) x_j^e  inverts to  x_j |-> zeta^(-e c_i) x_i^e
            let mut rows = vec![Vec::new(); self.n];
            let mut scalars = vec![0u64; self.n];
            for (i, &(j, e)) in perm.iter().enumerate() {
                rows[j] = vec![(i, e)];
                scalars[j] = reduce_signed(-(e as i128) * self.scalars[i] as i128, self.modulus);
            }
            return MonomialMap {
                n: self.n,
                modulus: self.modulus,
                rows,
                scalars,
            };
        }
        let dense: Mat = self
            .dense_rows()
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        let inv = lattice::unimodular_inverse(&dense).expect("map matrix is unimodular");
        // scalars: c_inv = -A^-1 c
        let scalars: Vec<u64> = (0..self.n)
            .map(|i| {
                let mut c = 0i128;
                for (j, &v) in inv[i].iter().enumerate() {
                    c += v * self.scalars[j] as i128;
                }
                reduce_signed(-c, self.modulus)
            })
            .collect();
        MonomialMap {
            n: self.n,
            modulus: self.modulus,
            rows: inv
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(j, &v)| (j, v as i64))
                        .collect()
                })
                .collect(),
            scalars,
        }
    }

    pub fn pow(&self, e: i64) -> MonomialMap {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = MonomialMap::identity(self.n, self.modulus);
        let mut b = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.compose(&b).expect("same shape");
            }
            b = b.compose(&b).expect("same shape");
            n >>= 1;
        }
        acc
    }

    /// Scalar exponent vector for diagonal maps.
    pub fn diagonal_scalars(&self) -> Result<Vec<Scalar>, MonomialError> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.as_slice() != [(i, 1)] {
                return Err(MonomialError::NotDiagonal);
            }
        }
        Ok((0..self.n).map(|i| self.scalar(i)).collect())
    }

    /// Copy with one scalar exponent bumped by 1 (fault injection for the
    /// mutation tests).
    pub fn with_scalar_bumped(&self, i: usize) -> MonomialMap {
        let mut out = self.clone();
        out.scalars[i] = (out.scalars[i] + 1) % self.modulus.max(1);
        out
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            if i > 0 {
                out.push_str("; ");
            }
            out.push_str(&format!("x{i} -> "));
            if self.scalars[i] != 0 {
                out.push_str(&format!("z^{} ", self.scalars[i]));
            }
            if self.rows[i].is_empty() {
                out.push('1');
            }
            for (pos, &(j, v)) in self.rows[i].iter().enumerate() {
                if pos > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("x{j}^{v}"));
            }
        }
        format!("[mod {}] {}", self.modulus, out)
    }
}

/// Evaluate a word of maps so that the result is phi(w_1) o ... o phi(w_r)
/// as functions (the rightmost letter acts first); this is the convention
/// under which the word-evaluation map is a homomorphism for left actions.
pub fn evaluate_map_word(maps: &[(MonomialMap, i64)]) -> Result<MonomialMap, MonomialError> {
    let mut acc: Option<MonomialMap> = None;
    for (map, e) in maps {
        let m = map.pow(*e);
        acc = Some(match acc {
            None => m,
            Some(prev) => m.compose(&prev)?,
        });
    }
    Ok(acc.expect("nonempty word"))
}

/// Generator assignment sigma/tau/rho -> monomial maps over one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionAssignment {
    pub sigma: MonomialMap,
    pub tau: MonomialMap,
    pub rho: MonomialMap,
}

impl ActionAssignment {
    pub fn map_of(&self, g: Gen) -> &MonomialMap {
        match g {
            Gen::Sigma => &self.sigma,
            Gen::Tau => &self.tau,
            Gen::Rho => &self.rho,
        }
    }

    pub fn n(&self) -> usize {
        self.sigma.n
    }

    pub fn modulus(&self) -> u64 {
        self.sigma.modulus
    }

    /// phi(tau^y sigma^x rho^z) = phi(tau)^y o phi(sigma)^x o phi(rho)^z.
    pub fn evaluate_element(&self, g: GroupElement) -> MonomialMap {
        let rz = self.rho.pow(g.z as i64);
        let sx = self.sigma.pow(g.x as i64);
        let ty = self.tau.pow(g.y as i64);
        rz.compose(&sx).and_then(|m| m.compose(&ty)).expect("same shape")
    }

    pub fn evaluate_word(&self, word: &[(Gen, i64)]) -> MonomialMap {
        let maps: Vec<(MonomialMap, i64)> = word
            .iter()
            .map(|&(g, e)| (self.map_of(g).clone(), e))
            .collect();
        evaluate_map_word(&maps).expect("same shape")
    }

    /// Check every defining relation of `params` evaluates to the identity
    /// map; failures carry the residual map as witness.
    pub fn check_relations(&self, group: &Group) -> VerificationReport {
        let p = &group.params;
        let mut rep =
            VerificationReport::new(format!("action relations over modulus {}", self.modulus()));
        let pa = group.p_a() as i64;
        let pb = group.p_b() as i64;
        let pt = group.p_t() as i64;
        let s_exp = if p.t == 0 {
            0
        } else {
            (p.s * crate::num::p_pow(p.p, p.alpha) % group.p_t()) as i64
        };
        let j_exp = if p.t == 0 {
            0
        } else {
            (p.j * crate::num::p_pow(p.p, p.beta) % group.p_t()) as i64
        };
        let m_exp = (p.m * crate::num::p_pow(p.p, p.c)) as i64;
        let k = p.k_int() as i64;
        let l = p.l as i64;
        let words: Vec<(&str, Word)> = vec![
            (
                "relation sigma^(p^a)",
                vec![(Gen::Sigma, pa), (Gen::Rho, -s_exp)],
            ),
            (
                "relation tau^(p^b)",
                vec![(Gen::Tau, pb), (Gen::Rho, -j_exp), (Gen::Sigma, -m_exp)],
            ),
            ("relation rho^(p^t)", vec![(Gen::Rho, pt)]),
            (
                "relation conjugation",
                vec![
                    (Gen::Tau, -1),
                    (Gen::Sigma, 1),
                    (Gen::Tau, 1),
                    (Gen::Rho, -l),
                    (Gen::Sigma, -k),
                ],
            ),
            (
                "relation rho central (sigma)",
                vec![
                    (Gen::Rho, 1),
                    (Gen::Sigma, 1),
                    (Gen::Rho, -1),
                    (Gen::Sigma, -1),
                ],
            ),
            (
                "relation rho central (tau)",
                vec![(Gen::Rho, 1), (Gen::Tau, 1), (Gen::Rho, -1), (Gen::Tau, -1)],
            ),
        ];
        for (name, word) in words {
            let residual = self.evaluate_word(&word);
            rep.check(name, residual.is_identity(), || residual.render());
        }
        rep
    }

    /// Elements acting as the identity map, as a subgroup of `group`.
    pub fn kernel(&self, group: &Group) -> Subgroup {
        let mut members = Vec::new();
        let mut t_pows = Vec::with_capacity(group.p_b() as usize);
        let mut acc = MonomialMap::identity(self.n(), self.modulus());
        for _ in 0..group.p_b() {
            t_pows.push(acc.clone());
            acc = acc.compose(&self.tau).expect("same shape");
        }
        let mut s_pows = Vec::with_capacity(group.p_a() as usize);
        let mut acc = MonomialMap::identity(self.n(), self.modulus());
        for _ in 0..group.p_a() {
            s_pows.push(acc.clone());
            acc = acc.compose(&self.sigma).expect("same shape");
        }
        let mut r_pows = Vec::with_capacity(group.p_t() as usize);
        let mut acc = MonomialMap::identity(self.n(), self.modulus());
        for _ in 0..group.p_t() {
            r_pows.push(acc.clone());
            acc = acc.compose(&self.rho).expect("same shape");
        }
        for g in group.elements() {
            // phi(g): apply rho-part, then sigma-part, then tau-part
            let m = r_pows[g.z as usize]
                .compose(&s_pows[g.x as usize])
                .and_then(|m| m.compose(&t_pows[g.y as usize]))
                .expect("same shape");
            if m.is_identity() {
                members.push(g);
            }
        }
        members.sort();
        let cyclic_witness = members
            .iter()
            .copied()
            .find(|&g| group.elem_order(g) as usize == members.len());
        Subgroup {
            elements: members,
            generators: Vec::new(),
            cyclic_witness,
        }
    }
}

/// New variables Y_i = zeta^(offsets[i]) * prod_j x_j^(rows[i][j]), given by
/// full-row-rank integer exponent rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substitution {
    pub rows: Vec<Vec<i64>>,
    pub offsets: Vec<u64>,
    pub modulus: u64,
}

impl Substitution {
    pub fn new(rows: Vec<Vec<i64>>, offsets: Vec<i128>, modulus: u64) -> Result<Self, MonomialError> {
        let mat: Mat = rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect();
        if lattice::rank(&mat) != rows.len() {
            return Err(MonomialError::RankDeficient);
        }
        if offsets.len() != rows.len() {
            return Err(MonomialError::DimensionMismatch(rows.len(), offsets.len()));
        }
        Ok(Substitution {
            rows,
            offsets: offsets.iter().map(|&c| reduce_signed(c, modulus)).collect(),
            modulus,
        })
    }

    pub fn n_new(&self) -> usize {
        self.rows.len()
    }

    pub fn n_old(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    pub fn row_lattice(&self) -> Mat {
        self.rows
            .iter()
            .map(|r| r.iter().map(|&v| v as i128).collect())
            .collect()
    }
}

/// The action induced on substitution variables: solves B M = M A_f over the
/// integers and carries the scalar parts along. Infeasibility of the solve
/// means the claimed substitution is not stabilized by the map.
pub fn induced_action(sub: &Substitution, f: &MonomialMap) -> Result<MonomialMap, MonomialError> {
    if sub.n_old() != f.n {
        return Err(MonomialError::DimensionMismatch(sub.n_old(), f.n));
    }
    if sub.modulus != f.modulus {
        return Err(MonomialError::ModulusMismatch(sub.modulus, f.modulus));
    }
    let m_mat = sub.row_lattice();
    let a_dense = f.dense_rows();
    let n_new = sub.n_new();
    let n_old = sub.n_old();
    let mut b_rows: Vec<Vec<i64>> = Vec::with_capacity(n_new);
    let mut scalars: Vec<i128> = Vec::with_capacity(n_new);
    for i in 0..n_new {
        // rhs = M_i * A_f
        let mut rhs = vec![0i128; n_old];
        for (j, &mij) in sub.rows[i].iter().enumerate() {
            if mij == 0 {
                continue;
            }
            for (k, &ajk) in a_dense[j].iter().enumerate() {
                rhs[k] += mij as i128 * ajk as i128;
            }
        }
        let b_i = lattice::solve_left(&m_mat, &rhs)
            .ok_or(MonomialError::LatticeNotStabilized(i))?;
        // d_i = offset_i + M_i . c_f - B_i . offsets
        let mut d = sub.offsets[i] as i128;
        for (j, &mij) in sub.rows[i].iter().enumerate() {
            d += mij as i128 * f.scalar_exp(j) as i128;
        }
        for (j, &bij) in b_i.iter().enumerate() {
            d -= bij * sub.offsets[j] as i128;
        }
        b_rows.push(b_i.iter().map(|&v| v as i64).collect());
        scalars.push(d);
    }
    // the induced matrix must again be unimodular for a variable change
    MonomialMap::new(b_rows, scalars, sub.modulus)
}

/// Basis (HNF rows) of the lattice of monomials fixed by a family of
/// diagonal scalar actions, together with its index in Z^n.
pub fn fixed_monomial_lattice(actions: &[Vec<Scalar>]) -> (Mat, Option<u128>) {
    let n = actions.first().map_or(0, |v| v.len());
    let m = actions.len();
    if m == 0 {
        return (lattice::identity(n), Some(1));
    }
    // kernel of [A | D] with D = diag(moduli), projected to the first n coords
    let mut rows: Mat = Vec::with_capacity(m);
    for (i, act) in actions.iter().enumerate() {
        debug_assert_eq!(act.len(), n);
        let mut row: Vec<i128> = act.iter().map(|s| s.exp as i128).collect();
        row.extend(std::iter::repeat(0i128).take(m));
        row[n + i] = act[0].modulus as i128;
        rows.push(row);
    }
    let kern = lattice::kernel(&rows);
    let projected: Mat = kern.iter().map(|v| v[..n].to_vec()).collect();
    let basis = lattice::hnf_basis(&projected);
    let index = lattice::lattice_index(&basis);
    (basis, index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::GroupParams;

    #[test]
    fn compose_identity_and_doubling() {
        let id = MonomialMap::identity(3, 9);
        let d = MonomialMap::diagonal(vec![1, 2, 3], 9);
        assert_eq!(id.compose(&d).unwrap(), d);
        assert_eq!(d.compose(&id).unwrap(), d);
        let dd = d.compose(&d).unwrap();
        assert_eq!(dd.diagonal_scalars().unwrap()[2].exp, 6);
    }

    #[test]
    fn conjugation_instance() {
        // diagonal zeta^(k^i) with k = 3 over modulus 4, swap tau on 2 vars:
        // compose(tau, compose(sigma, tau)) = sigma^3 as maps
        let sigma = MonomialMap::diagonal(vec![1, 3], 4);
        let tau = MonomialMap::cycle(2, 0, 4);
        let inner = sigma.compose(&tau).unwrap();
        let total = tau.compose(&inner).unwrap();
        assert_eq!(total, sigma.pow(3));
    }

    #[test]
    fn inverse_and_group_laws() {
        let m = MonomialMap::new(
            vec![vec![1, 1], vec![0, 1]],
            vec![2, 5],
            8,
        )
        .unwrap();
        let inv = m.inverse();
        assert!(m.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&m).unwrap().is_identity());
        let c = MonomialMap::cycle(5, 3, 9);
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
        assert!(c.pow(5).compose(&c.pow(-5)).unwrap().is_identity());
    }

    #[test]
    fn thm_2_6_relations_pass() {
        // p = 3, m = 2, n = 1, r = 1: k = 4
        let assignment = thm_2_6_action(3, 2, 1, 1, KForm::OnePlus).unwrap();
        let params = assignment.1;
        let group = Group::new(params);
        let rep = assignment.0.check_relations(&group);
        assert!(rep.passed(), "{rep:?}");
        let kernel = assignment.0.kernel(&group);
        assert!(kernel.is_trivial());
    }

    #[test]
    fn corrupted_assignment_fails() {
        let (mut assignment, params) = thm_2_6_action(3, 2, 1, 1, KForm::OnePlus).unwrap();
        // nudge one scalar: sigma's first diagonal entry
        let mut scal: Vec<i128> = (0..assignment.sigma.n)
            .map(|i| assignment.sigma.scalar_exp(i) as i128)
            .collect();
        scal[0] += 1;
        assignment.sigma = MonomialMap::new(assignment.sigma.dense_rows(), scal, 9).unwrap();
        let group = Group::new(params);
        assert!(!assignment.check_relations(&group).passed());
    }

    #[test]
    fn fixed_lattice_of_single_scaling() {
        // x_i |-> xi x_i with xi of order p^t, n = p^t variables:
        // lattice { e : sum e_i = 0 mod p^t }, index p^t
        let pt = 3u64;
        let scalars: Vec<Scalar> = (0..pt).map(|_| Scalar::new(1, pt)).collect();
        let (basis, index) = fixed_monomial_lattice(&[scalars]);
        assert_eq!(index, Some(3));
        // y_0 = x_0^3, y_i = x_i / x_(i-1) spans the same lattice
        let rows: Mat = vec![vec![3, 0, 0], vec![-1, 1, 0], vec![0, -1, 1]];
        assert_eq!(lattice::hnf_basis(&rows), basis);
        // trivial scalars fix everything
        let (b2, i2) = fixed_monomial_lattice(&[vec![Scalar::one(3); 3]]);
        assert_eq!(i2, Some(1));
        assert_eq!(b2, lattice::identity(3));
    }

    #[test]
    fn induced_action_examples() {
        // sigma on x's: x0 -> x1 -> x2 -> xi^(p^alpha) x0 (p^t = 3 vars)
        let modulus = 9u64;
        let sigma = MonomialMap::cycle(3, 3, modulus);
        let id = MonomialMap::identity(3, modulus);
        let sub = Substitution::new(
            vec![vec![3, 0, 0], vec![-1, 1, 0], vec![0, -1, 1]],
            vec![0, 0, 0],
            modulus,
        )
        .unwrap();
        let ind_id = induced_action(&sub, &id).unwrap();
        assert!(ind_id.is_identity());
        let ind = induced_action(&sub, &sigma).unwrap();
        // y0 |-> y1^3 y0, y1 |-> y2, y2 |-> xi^(p^alpha) / (y1 y2)
        let expected = MonomialMap::new(
            vec![vec![1, 3, 0], vec![0, 0, 1], vec![0, -1, -1]],
            vec![0, 0, 3],
            modulus,
        )
        .unwrap();
        assert_eq!(ind, expected);
    }

    #[test]
    fn induced_commutes_with_composition() {
        let modulus = 9u64;
        let f = MonomialMap::cycle(3, 2, modulus);
        let g = MonomialMap::diagonal(vec![1, 4, 7], modulus);
        let sub = Substitution::new(
            vec![vec![1, -1, 0], vec![0, 1, -1], vec![1, 1, 1]],
            vec![2, 0, 1],
            modulus,
        )
        .unwrap();
        let fg = f.compose(&g).unwrap();
        let lhs = induced_action(&sub, &fg).unwrap();
        let rhs = induced_action(&sub, &f)
            .unwrap()
            .compose(&induced_action(&sub, &g).unwrap())
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn lattice_not_stabilized_is_an_error() {
        let modulus = 3u64;
        let f = MonomialMap::cycle(2, 0, modulus);
        // sublattice spanned by (2, 0) is not stabilized by the swap
        let sub = Substitution::new(vec![vec![2, 0]], vec![0], modulus).unwrap();
        assert_eq!(
            induced_action(&sub, &f).unwrap_err(),
            MonomialError::LatticeNotStabilized(0)
        );
    }
}

/// Which of the two admissible k-forms a split metacyclic carrier uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KForm {
    /// k = 1 + p^r, (p, r) != (2, 1).
    OnePlus,
    /// k = -1 + 2^r, r >= 2.
    MinusOnePlus,
}

/// The diagonal-plus-cycle assignment of the split metacyclic group of
/// order p^(m+n): sigma: x_i |-> zeta^(k^i) x_i over modulus p^m, tau the
/// p^n-cycle. Returns the assignment and the carrier parameters (t = 0).
pub fn thm_2_6_action(
    p: u64,
    m: u32,
    n: u32,
    r: u32,
    form: KForm,
) -> Result<(ActionAssignment, GroupParams), MonomialError> {
    match form {
        KForm::OnePlus => {
            if p == 2 && r == 1 {
                return Err(MonomialError::NotUnimodular(0)); // excluded pair
            }
        }
        KForm::MinusOnePlus => {
            if p != 2 || r < 2 {
                return Err(MonomialError::NotUnimodular(0));
            }
        }
    }
    let epsilon = match form {
        KForm::OnePlus => 1,
        KForm::MinusOnePlus => -1,
    };
    let params = GroupParams {
        p,
        a: m,
        b: n,
        c: m,
        t: 0,
        r,
        alpha: 0,
        beta: 0,
        s: 1,
        m: 0,
        j: 1,
        l: 1,
        epsilon,
        abelian: false,
        family: None,
    };
    let modulus = crate::num::p_pow(p, m);
    let vars = crate::num::p_pow(p, n) as usize;
    let k = params.k_mod(modulus);
    let mut exps = Vec::with_capacity(vars);
    let mut kp = 1u64 % modulus;
    for _ in 0..vars {
        exps.push(kp as i128);
        kp = crate::num::mul_mod(kp, k, modulus);
    }
    let sigma = MonomialMap::diagonal(exps, modulus);
    let tau = MonomialMap::cycle(vars, 0, modulus);
    let rho = MonomialMap::identity(vars, modulus);
    Ok((ActionAssignment { sigma, tau, rho }, params))
}
