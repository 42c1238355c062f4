//! The bundled scenario catalog: one declarative transcription per case of
//! the construction chains, at that case's smallest admissible parameters.
//!
//! Builders compute every scalar exponent concretely (as exponents of the
//! scenario's ambient root of unity) so that the serialized scenarios are
//! reviewable records; the runner re-verifies all of it against the group
//! engine, the regular representation, and the lattice machinery.

mod audit;
mod sec4;
mod sec5;
mod sec6;
mod sec7;

pub use audit::{required_anchors, AnchorEntry};

use crate::group::{Gen, Word};
use crate::hypothesis::TheoremId;
use crate::monomial::{ActionAssignment, MonomialMap};
use crate::params::GroupParams;
use crate::scenario::{
    KernelExpect, ProductExpr, QuotientExpect, Scenario, Step, StepOp, VectorBuild,
};

/// All catalog scenarios in deterministic order.
pub fn all_scenarios() -> Vec<Scenario> {
    let mut out = Vec::new();
    out.extend(sec4::scenarios());
    out.extend(sec5::scenarios());
    out.extend(sec6::scenarios());
    out.extend(sec7::scenarios());
    out
}

pub fn scenario_by_id(id: &str) -> Option<Scenario> {
    all_scenarios().into_iter().find(|s| s.id == id)
}

// ---- word shortcuts ----

pub(crate) const S: Gen = Gen::Sigma;
pub(crate) const T: Gen = Gen::Tau;
pub(crate) const R: Gen = Gen::Rho;

pub(crate) fn wd(items: &[(Gen, i64)]) -> Word {
    items.to_vec()
}

/// (w)^n as a flattened word.
pub(crate) fn word_pow(w: &[(Gen, i64)], n: u64) -> Word {
    let mut out = Vec::with_capacity(w.len() * n as usize);
    for _ in 0..n {
        out.extend_from_slice(w);
    }
    out
}

// ---- map shortcuts ----

pub(crate) fn diag(exps: Vec<i128>, modulus: u64) -> MonomialMap {
    MonomialMap::diagonal(exps, modulus)
}

pub(crate) fn cycle(n: usize, wrap: i128, modulus: u64) -> MonomialMap {
    MonomialMap::cycle(n, wrap, modulus)
}

/// u_1 -> u_2 -> ... -> u_(n-1) -> wrap * (u_1 ... u_(n-1))^-1 on n - 1
/// variables (the cyclic-shift shape that the linearization lemma handles).
pub(crate) fn lemma_cycle(nvars: usize, wrap: i128, modulus: u64) -> MonomialMap {
    let mut rows = Vec::with_capacity(nvars);
    let mut scalars = vec![0i128; nvars];
    for i in 0..nvars {
        if i + 1 < nvars {
            let mut row = vec![0i64; nvars];
            row[i + 1] = 1;
            rows.push(row);
        } else {
            rows.push(vec![-1i64; nvars]);
            scalars[i] = wrap;
        }
    }
    MonomialMap::new(rows, scalars, modulus).expect("lemma cycle is unimodular")
}

/// Identity map on n variables.
pub(crate) fn ident(n: usize, modulus: u64) -> MonomialMap {
    MonomialMap::identity(n, modulus)
}

/// Block-diagonal combination of maps over the same modulus.
pub(crate) fn block(maps: &[MonomialMap]) -> MonomialMap {
    let modulus = maps[0].modulus;
    let n: usize = maps.iter().map(|m| m.n).sum();
    let mut rows = vec![vec![0i64; n]; n];
    let mut scalars = vec![0i128; n];
    let mut off = 0usize;
    for m in maps {
        for i in 0..m.n {
            for &(j, v) in m.row(i) {
                rows[off + i][off + j] = v;
            }
            scalars[off + i] = m.scalar_exp(i) as i128;
        }
        off += m.n;
    }
    MonomialMap::new(rows, scalars, modulus).expect("blocks are unimodular")
}

pub(crate) fn assignment(
    sigma: MonomialMap,
    tau: MonomialMap,
    rho: MonomialMap,
) -> ActionAssignment {
    ActionAssignment { sigma, tau, rho }
}

// ---- builder ----

pub(crate) struct B {
    pub sc: Scenario,
}

#[allow(dead_code)]
impl B {
    pub fn new(id: &str, title: &str, params: GroupParams, modulus: u64) -> B {
        B {
            sc: Scenario {
                id: id.into(),
                title: title.into(),
                params,
                modulus,
                steps: Vec::new(),
            },
        }
    }

    pub fn push(&mut self, name: &str, anchors: &[&str], op: StepOp) -> &mut Self {
        self.sc.steps.push(Step {
            name: name.into(),
            anchors: anchors.iter().map(|s| s.to_string()).collect(),
            op,
        });
        self
    }

    pub fn consistent(&mut self) -> &mut Self {
        self.push("consistency", &[], StepOp::CheckConsistent { group: "main".into() })
    }

    pub fn consistent_in(&mut self, group: &str) -> &mut Self {
        self.push(
            &format!("consistency of {group}"),
            &[],
            StepOp::CheckConsistent { group: group.into() },
        )
    }

    pub fn hyp(&mut self, theorem: TheoremId, expect_e: Option<u32>) -> &mut Self {
        self.push(
            &format!("hypotheses {}", theorem.label()),
            &[],
            StepOp::CheckHypothesis {
                group: "main".into(),
                theorem,
                expect_e,
                c_gens: Vec::new(),
            },
        )
    }

    pub fn hyp25(&mut self, group: &str, c_gens: Vec<Word>) -> &mut Self {
        self.push(
            "reduction-lemma hypotheses",
            &[],
            StepOp::CheckHypothesis {
                group: group.into(),
                theorem: TheoremId::T25,
                expect_e: None,
                c_gens,
            },
        )
    }

    pub fn group(&mut self, key: &str, params: GroupParams) -> &mut Self {
        self.push(
            &format!("define group {key}"),
            &[],
            StepOp::DefGroup { key: key.into(), params },
        )
    }

    pub fn scalar(&mut self, name: &str, exp: i128, note: &str) -> &mut Self {
        self.push(
            &format!("define {name}"),
            &[],
            StepOp::DefScalar {
                name: name.into(),
                exp,
                note: note.into(),
            },
        )
    }

    pub fn scalar_eq(
        &mut self,
        label: &str,
        anchors: &[&str],
        lhs: &[(&str, i128)],
        rhs: &[(&str, i128)],
        order: Option<u64>,
    ) -> &mut Self {
        self.push(
            "scalar identity",
            anchors,
            StepOp::ScalarEq {
                label: label.into(),
                lhs: lhs.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
                rhs: rhs.iter().map(|(n, e)| (n.to_string(), *e)).collect(),
                order_expect: order,
            },
        )
    }

    pub fn elem_eq(&mut self, name: &str, anchors: &[&str], lhs: Word, rhs: Word) -> &mut Self {
        self.elem_eq_in("main", name, anchors, lhs, rhs)
    }

    pub fn elem_eq_in(
        &mut self,
        group: &str,
        name: &str,
        anchors: &[&str],
        lhs: Word,
        rhs: Word,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::ElemEqual {
                group: group.into(),
                lhs,
                rhs,
            },
        )
    }

    pub fn order(&mut self, name: &str, anchors: &[&str], word: Word, exp: u32) -> &mut Self {
        self.order_in("main", name, anchors, word, exp)
    }

    pub fn order_in(
        &mut self,
        group: &str,
        name: &str,
        anchors: &[&str],
        word: Word,
        exp: u32,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::ElemOrder {
                group: group.into(),
                word,
                expect_exp: exp,
            },
        )
    }

    pub fn central(&mut self, name: &str, anchors: &[&str], word: Word) -> &mut Self {
        self.central_in("main", name, anchors, word)
    }

    pub fn central_in(&mut self, group: &str, name: &str, anchors: &[&str], word: Word) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::Central {
                group: group.into(),
                word,
            },
        )
    }

    pub fn meet(&mut self, name: &str, anchors: &[&str], gens: Vec<Word>) -> &mut Self {
        self.meet_in("main", name, anchors, gens)
    }

    pub fn meet_in(
        &mut self,
        group: &str,
        name: &str,
        anchors: &[&str],
        gens: Vec<Word>,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::TrivialMeetDerived {
                group: group.into(),
                gens,
            },
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn direct_product(
        &mut self,
        group: &str,
        name: &str,
        anchors: &[&str],
        factors: Vec<Word>,
        orders: Vec<u32>,
        equals_gens: Vec<Word>,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::DirectProduct {
                group: group.into(),
                factors,
                orders,
                equals_gens,
            },
        )
    }

    pub fn quotient(
        &mut self,
        group: &str,
        name: &str,
        anchors: &[&str],
        by: Vec<Word>,
        expect: QuotientExpect,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::QuotientReduce {
                group: group.into(),
                by,
                expect,
            },
        )
    }

    pub fn vector(&mut self, group: &str, name: &str, anchors: &[&str], build: VectorBuild) -> &mut Self {
        self.push(
            &format!("build {name}"),
            anchors,
            StepOp::DefVector {
                group: group.into(),
                name: name.into(),
                build,
            },
        )
    }

    pub fn family(
        &mut self,
        group: &str,
        prefix: &str,
        anchors: &[&str],
        word: Word,
        count: u64,
        seed: &str,
    ) -> &mut Self {
        self.push(
            &format!("build family {prefix}"),
            anchors,
            StepOp::DefFamily {
                group: group.into(),
                prefix: prefix.into(),
                word,
                count,
                seed: seed.into(),
            },
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn maps_to(
        &mut self,
        group: &str,
        name: &str,
        anchors: &[&str],
        word: Word,
        from: ProductExpr,
        scalar: i128,
        to: ProductExpr,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::MapsTo {
                group: group.into(),
                word,
                from,
                to,
                scalar,
            },
        )
    }

    pub fn space(
        &mut self,
        key: &str,
        group: &str,
        anchors: &[&str],
        vars: Vec<(String, ProductExpr)>,
        coeffs: Vec<i128>,
        claimed: ActionAssignment,
    ) -> &mut Self {
        self.push(
            &format!("space {key}"),
            anchors,
            StepOp::DefSpace {
                key: key.into(),
                group: group.into(),
                coeffs,
                vars,
                claimed,
            },
        );
        self.push(
            &format!("verify action on {key}"),
            anchors,
            StepOp::CheckSpaceAction { space: key.into() },
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn subst(
        &mut self,
        key: &str,
        space: &str,
        anchors: &[&str],
        labels: Vec<String>,
        rows: Vec<Vec<i64>>,
        offsets: Vec<i128>,
        claimed: ActionAssignment,
    ) -> &mut Self {
        self.push(
            &format!("substitution {key}"),
            anchors,
            StepOp::DefSubstitution {
                key: key.into(),
                space: space.into(),
                labels,
                rows,
                offsets,
                claimed,
            },
        )
    }

    pub fn lattice(
        &mut self,
        space: &str,
        name: &str,
        anchors: &[&str],
        words: Vec<Word>,
        substitution: &str,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::CheckLatticeFixed {
                space: space.into(),
                words,
                substitution: substitution.into(),
            },
        )
    }

    pub fn split(&mut self, space: &str, anchors: &[&str], dropped: usize) -> &mut Self {
        self.push(
            &format!("affine split in {space}"),
            anchors,
            StepOp::AffineSplit {
                space: space.into(),
                dropped,
            },
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn kernel(
        &mut self,
        space: &str,
        group: &str,
        name: &str,
        anchors: &[&str],
        expect: KernelExpect,
        words: Vec<Word>,
    ) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::Kernel {
                space: space.into(),
                group: group.into(),
                expect,
                words,
            },
        )
    }

    pub fn map_eq(&mut self, name: &str, anchors: &[&str], left: &str, right: &str) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::MapEquality {
                left: left.into(),
                right: right.into(),
            },
        )
    }

    #[allow(clippy::too_many_arguments)]
    pub fn thm26(
        &mut self,
        name: &str,
        anchors: &[&str],
        p: u64,
        m: u32,
        n: u32,
        r: u32,
        form: crate::monomial::KForm,
    ) -> &mut Self {
        self.push(name, anchors, StepOp::Thm26 { p, m, n, r, form })
    }

    pub fn lemma(&mut self, anchors: &[&str], n: usize) -> &mut Self {
        self.push(
            &format!("linearization n = {n}"),
            anchors,
            StepOp::Lemma28 { n, trials: 16 },
        )
    }

    pub fn numtheory(&mut self, anchors: &[&str]) -> &mut Self {
        self.push("exponent arithmetic", anchors, StepOp::NumberTheory)
    }

    pub fn sec6(&mut self, group: &str, anchors: &[&str]) -> &mut Self {
        self.push(
            "order and exponent formulas",
            anchors,
            StepOp::Section6Orders { group: group.into() },
        )
    }

    pub fn center_matches(&mut self, name: &str, anchors: &[&str], gens: Vec<Word>) -> &mut Self {
        self.push(
            name,
            anchors,
            StepOp::CenterMatches {
                group: "main".into(),
                gens,
            },
        )
    }

    pub fn exp_at_least(&mut self, group: &str, name: &str, exp: u32) -> &mut Self {
        self.push(
            name,
            &[],
            StepOp::ExpAtLeast {
                group: group.into(),
                exp,
            },
        )
    }

    pub fn flag(&mut self, text: &str, anchors: &[&str]) -> &mut Self {
        self.push("ambiguity", anchors, StepOp::Flag { text: text.into() })
    }

    pub fn done(self) -> Scenario {
        self.sc
    }
}

/// Shorthand for a plain single-vector product expression.
pub(crate) fn v1(name: &str) -> ProductExpr {
    vec![(name.to_string(), 1)]
}

/// Variable list (label, single-vector expr) for prefix0..prefix(count-1).
pub(crate) fn fam_vars(prefix: &str, count: u64) -> Vec<(String, ProductExpr)> {
    (0..count)
        .map(|i| (format!("{prefix}{i}"), v1(&format!("{prefix}{i}"))))
        .collect()
}

/// Exponent of the canonical primitive p^d-th root inside modulus N = p^e:
/// z^(N / p^d).
pub(crate) fn root_exp(modulus: u64, order: u64) -> i128 {
    assert!(
        modulus % order == 0,
        "root of order {order} needs {order} | {modulus}"
    );
    (modulus / order) as i128
}
