//! Declarative per-case verification scenarios.
//!
//! A scenario transcribes one construction chain as data: an ordered list of
//! steps over a main parameter tuple and a scalar modulus. Each step becomes
//! one or more report rows; displayed formulas carry anchors into the claim
//! catalog so coverage can be audited. A failed step halts the scenario with
//! the residual witness.

use crate::group::{Group, GroupElement, Word};
use crate::hypothesis::{hypothesis_report, section6_tau_order, TheoremId};
use crate::lattice;
use crate::monomial::{
    fixed_monomial_lattice, induced_action, ActionAssignment, KForm, Substitution,
};
use crate::num::{derive_seed, p_pow};
use crate::numtheory::number_theory_checks;
use crate::params::GroupParams;
use crate::ratexpr::lemma_2_8_suite;
use crate::regrep::{self, RegVector};
use crate::report::{Status, VerificationReport};
use crate::scalar::{find_fq_contexts, FqContext, Scalar};
use crate::table::is_metacyclic;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A product of named vectors with integer exponents.
pub type ProductExpr = Vec<(String, i64)>;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum VectorBuild {
    /// The basis vector x(w).
    Point { at: Word },
    /// Apply a word to a built vector.
    Apply { word: Word, of: Box<VectorBuild> },
    /// sum_(i < count) zeta^(coeff_step * i) (word^i . inner).
    Orbit {
        word: Word,
        count: u64,
        coeff_step: i128,
        of: Box<VectorBuild>,
    },
    /// A previously defined vector.
    Named(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelExpect {
    Trivial,
    GeneratedBy,
    Contains,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum QuotientExpect {
    Metacyclic,
    /// The quotient realizes the named presented group.
    MatchesGroup(String),
    None,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub enum StepOp {
    /// Empirical consistency of a registered group.
    CheckConsistent { group: String },
    CheckHypothesis {
        group: String,
        theorem: TheoremId,
        expect_e: Option<u32>,
        /// Generators of the designated central subgroup (empty: <rho>).
        c_gens: Vec<Word>,
    },
    /// Register an auxiliary presented group.
    DefGroup { key: String, params: GroupParams },
    ElemOrder {
        group: String,
        word: Word,
        expect_exp: u32,
    },
    ElemEqual {
        group: String,
        lhs: Word,
        rhs: Word,
    },
    Central { group: String, word: Word },
    /// <gens> meets the derived subgroup trivially.
    TrivialMeetDerived { group: String, gens: Vec<Word> },
    /// The listed elements generate an internal direct product with the
    /// stated p-power orders, equal to the span of `equals_gens`.
    DirectProduct {
        group: String,
        factors: Vec<Word>,
        orders: Vec<u32>,
        equals_gens: Vec<Word>,
    },
    /// Quotient by a central subgroup meeting the derived subgroup
    /// trivially, with a structural expectation on the quotient.
    QuotientReduce {
        group: String,
        by: Vec<Word>,
        expect: QuotientExpect,
    },
    /// Name an exponent of the ambient root of unity.
    DefScalar {
        name: String,
        exp: i128,
        note: String,
    },
    /// prod lhs_i^(e_i) = prod rhs_i^(e_i) as roots of unity, with an
    /// optional order assertion on the left-hand product.
    ScalarEq {
        label: String,
        lhs: Vec<(String, i128)>,
        rhs: Vec<(String, i128)>,
        order_expect: Option<u64>,
    },
    DefVector {
        group: String,
        name: String,
        build: VectorBuild,
    },
    /// name_i = word^i . seed for i < count.
    DefFamily {
        group: String,
        prefix: String,
        word: Word,
        count: u64,
        seed: String,
    },
    /// word . from = zeta^scalar . to, as functions on the carrier space.
    MapsTo {
        group: String,
        word: Word,
        from: ProductExpr,
        to: ProductExpr,
        scalar: i128,
    },
    /// Register a variable space: labelled function-space coordinates with a
    /// claimed monomial generator action.
    DefSpace {
        key: String,
        group: String,
        coeffs: Vec<i128>,
        vars: Vec<(String, ProductExpr)>,
        claimed: ActionAssignment,
    },
    /// Verify the claimed action of a space against the carrier functions.
    CheckSpaceAction { space: String },
    /// Monomial change of variables: the induced action must equal the
    /// transcribed claimed action exactly (matrix and scalars).
    DefSubstitution {
        key: String,
        space: String,
        labels: Vec<String>,
        rows: Vec<Vec<i64>>,
        offsets: Vec<i128>,
        claimed: ActionAssignment,
    },
    /// The substitution rows span exactly the fixed-monomial lattice of the
    /// listed (diagonally acting) words on the source space.
    CheckLatticeFixed {
        space: String,
        words: Vec<Word>,
        substitution: String,
    },
    /// Dropped-variable structure for the one-variable affine split:
    /// A[dropped][dropped] = 1 and no other row involves it.
    AffineSplit { space: String, dropped: usize },
    Kernel {
        space: String,
        group: String,
        expect: KernelExpect,
        words: Vec<Word>,
    },
    /// Claimed actions of two spaces agree map-for-map.
    MapEquality { left: String, right: String },
    Thm26 {
        p: u64,
        m: u32,
        n: u32,
        r: u32,
        form: KForm,
    },
    Lemma28 { n: usize, trials: usize },
    NumberTheory,
    Section6Orders { group: String },
    /// Brute-force center equals the span of the listed words.
    CenterMatches { group: String, gens: Vec<Word> },
    /// exp(G) >= p^exp.
    ExpAtLeast { group: String, exp: u32 },
    /// Record an ambiguity in the source formulation and the reading used.
    Flag { text: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Step {
    pub name: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub anchors: Vec<String>,
    pub op: StepOp,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Scenario {
    pub id: String,
    pub title: String,
    pub params: GroupParams,
    /// Ambient scalar modulus N = p^e for the whole chain.
    pub modulus: u64,
    pub steps: Vec<Step>,
}

#[derive(Debug, Clone)]
pub struct ScenarioOutcome {
    pub report: VerificationReport,
    pub halted_at: Option<usize>,
}

impl ScenarioOutcome {
    pub fn passed(&self) -> bool {
        self.halted_at.is_none() && self.report.passed()
    }
}

struct SpaceData {
    group: String,
    labels: Vec<String>,
    coeffs: Vec<i128>,
    exprs: Vec<ProductExpr>,
    claimed: ActionAssignment,
}

struct RunState {
    modulus: u64,
    ctxs: Vec<FqContext>,
    groups: BTreeMap<String, Group>,
    vectors: BTreeMap<String, (String, Vec<RegVector>)>,
    scalars: BTreeMap<String, i128>,
    spaces: BTreeMap<String, SpaceData>,
    subs: BTreeMap<String, Substitution>,
    /// sample points per group key, per context.
    points: BTreeMap<String, Vec<Vec<Vec<u64>>>>,
    seed: u64,
}

const POINTS_PER_CTX: usize = 4;
const REQUIRED_POINT_EVALS: usize = 2;

impl RunState {
    fn group(&self, key: &str) -> &Group {
        self.groups.get(key).unwrap_or_else(|| panic!("unknown group {key}"))
    }

    fn register_group(&mut self, key: String, group: Group) {
        let mut per_ctx = Vec::with_capacity(self.ctxs.len());
        for (ci, ctx) in self.ctxs.iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(
                self.seed,
                &format!("points/{key}/{ci}"),
            ));
            let pts: Vec<Vec<u64>> = (0..POINTS_PER_CTX)
                .map(|_| {
                    (0..group.order() as usize)
                        .map(|_| rng.gen_range(1..ctx.q))
                        .collect()
                })
                .collect();
            per_ctx.push(pts);
        }
        self.points.insert(key.clone(), per_ctx);
        self.groups.insert(key, group);
    }

    fn vector(&self, name: &str) -> &(String, Vec<RegVector>) {
        self.vectors
            .get(name)
            .unwrap_or_else(|| panic!("unknown vector {name}"))
    }

    fn build_vector(&self, group_key: &str, build: &VectorBuild, ci: usize) -> RegVector {
        let group = self.group(group_key);
        let ctx = &self.ctxs[ci];
        match build {
            VectorBuild::Point { at } => regrep::point(group, group.eval_word(at)),
            VectorBuild::Apply { word, of } => {
                let inner = self.build_vector(group_key, of, ci);
                regrep::apply(group, group.eval_word(word), &inner)
            }
            VectorBuild::Orbit {
                word,
                count,
                coeff_step,
                of,
            } => {
                let inner = self.build_vector(group_key, of, ci);
                regrep::weighted_orbit(
                    group,
                    ctx,
                    group.eval_word(word),
                    *count,
                    *coeff_step,
                    self.modulus,
                    &inner,
                )
            }
            VectorBuild::Named(name) => {
                let (g, per_ctx) = self.vector(name);
                assert_eq!(g, group_key, "vector {name} belongs to group {g}");
                per_ctx[ci].clone()
            }
        }
    }

    /// Evaluate a product expression at sample point `pi` of context `ci`,
    /// optionally translated by a group element first. None when a factor
    /// with negative exponent vanishes at the point.
    fn eval_product(
        &self,
        group_key: &str,
        translate: Option<GroupElement>,
        coeff: i128,
        expr: &ProductExpr,
        ci: usize,
        pi: usize,
    ) -> Option<u64> {
        let group = self.group(group_key);
        let ctx = &self.ctxs[ci];
        let point = &self.points[group_key][ci][pi];
        let mut acc = ctx.realize(&Scalar::new(coeff, self.modulus));
        for (name, e) in expr {
            let (g, per_ctx) = self.vector(name);
            assert_eq!(g, group_key);
            let base = match translate {
                Some(t) => regrep::eval_at(ctx, &regrep::apply(group, t, &per_ctx[ci]), point),
                None => regrep::eval_at(ctx, &per_ctx[ci], point),
            };
            let val = if *e >= 0 {
                ctx.pow(base, *e as u64)
            } else {
                ctx.pow(ctx.inv(base)?, e.unsigned_abs())
            };
            acc = ctx.mul(acc, val);
        }
        Some(acc)
    }

    /// word . (coeff_from, from) = zeta^scalar . (coeff_to, to), compared as
    /// functions. Exact comparison for plain single vectors, else pointwise
    /// across all contexts.
    #[allow(clippy::too_many_arguments)]
    fn maps_to_holds(
        &self,
        group_key: &str,
        word_elem: GroupElement,
        coeff_from: i128,
        from: &ProductExpr,
        scalar: i128,
        coeff_to: i128,
        to: &ProductExpr,
    ) -> Result<(), String> {
        let group = self.group(group_key);
        let plain = |e: &ProductExpr| e.len() == 1 && e[0].1 == 1;
        if plain(from) && plain(to) && coeff_from == coeff_to {
            // exact linear comparison in every context
            for (ci, ctx) in self.ctxs.iter().enumerate() {
                let (_, v_from) = self.vector(&from[0].0);
                let (_, v_to) = self.vector(&to[0].0);
                let lhs = regrep::apply(group, word_elem, &v_from[ci]);
                let lambda = ctx.realize(&Scalar::new(scalar, self.modulus));
                let rhs = regrep::scale(ctx, lambda, &v_to[ci]);
                if lhs != rhs {
                    return Err(format!("coefficient mismatch in F_{}", ctx.q));
                }
                if regrep::is_zero(&v_from[ci]) {
                    return Err("zero vector".into());
                }
            }
            return Ok(());
        }
        for ci in 0..self.ctxs.len() {
            let ctx = &self.ctxs[ci];
            let lambda = ctx.realize(&Scalar::new(scalar, self.modulus));
            let mut succeeded = 0usize;
            for pi in 0..POINTS_PER_CTX {
                let lhs = self.eval_product(group_key, Some(word_elem), coeff_from, from, ci, pi);
                let rhs = self.eval_product(group_key, None, coeff_to, to, ci, pi);
                match (lhs, rhs) {
                    (Some(l), Some(r)) => {
                        if l != ctx.mul(lambda, r) {
                            return Err(format!("value mismatch in F_{} at point {pi}", ctx.q));
                        }
                        succeeded += 1;
                    }
                    _ => continue,
                }
            }
            if succeeded < REQUIRED_POINT_EVALS {
                return Err(format!("degenerate evaluation in F_{}", ctx.q));
            }
        }
        Ok(())
    }
}

fn subgroup_from_words(group: &Group, words: &[Word]) -> crate::group::Subgroup {
    let gens: Vec<GroupElement> = words.iter().map(|w| group.eval_word(w)).collect();
    group.subgroup(&gens)
}

/// Execute a scenario; the report carries one or more rows per step, and the
/// run halts at the first failing step.
pub fn run_scenario(sc: &Scenario, master_seed: u64) -> ScenarioOutcome {
    let seed = derive_seed(master_seed, &sc.id);
    let mut report = VerificationReport::new(format!("scenario {}: {}", sc.id, sc.title));
    let ctxs = match find_fq_contexts(sc.modulus, 3) {
        Ok(c) => c,
        Err(e) => {
            report.push("context search", Status::Fail, Some(e.to_string()));
            return ScenarioOutcome {
                report,
                halted_at: Some(0),
            };
        }
    };
    let mut st = RunState {
        modulus: sc.modulus,
        ctxs,
        groups: BTreeMap::new(),
        vectors: BTreeMap::new(),
        scalars: BTreeMap::new(),
        spaces: BTreeMap::new(),
        subs: BTreeMap::new(),
        points: BTreeMap::new(),
        seed,
    };
    st.register_group("main".into(), Group::new(sc.params));

    let mut halted_at = None;
    for (si, step) in sc.steps.iter().enumerate() {
        let before = report.rows.len();
        run_step(&mut st, sc, step, &mut report, seed);
        // stamp anchors onto the rows this step produced
        if !step.anchors.is_empty() {
            let anchor = step.anchors.join(",");
            for row in &mut report.rows[before..] {
                if row.anchor.is_none() {
                    row.anchor = Some(anchor.clone());
                }
            }
        }
        if report.rows[before..].iter().any(|r| r.status == Status::Fail) {
            halted_at = Some(si);
            break;
        }
    }
    ScenarioOutcome { report, halted_at }
}

fn run_step(st: &mut RunState, sc: &Scenario, step: &Step, report: &mut VerificationReport, seed: u64) {
    let nm = &step.name;
    match &step.op {
        StepOp::CheckConsistent { group } => {
            let rep = st.group(group).check_consistency(seed);
            let ok = rep.passed();
            report.check(format!("{nm}: consistent presentation"), ok, || {
                rep.first_failure()
                    .map(|r| format!("{}: {}", r.name, r.witness.clone().unwrap_or_default()))
                    .unwrap_or_default()
            });
        }
        StepOp::CheckHypothesis {
            group,
            theorem,
            expect_e,
            c_gens,
        } => {
            let g = st.group(group);
            let designated;
            let c_sub = if c_gens.is_empty() {
                None
            } else {
                designated = subgroup_from_words(g, c_gens);
                Some(&designated)
            };
            let hr = hypothesis_report(g, *theorem, c_sub);
            report.check(format!("{nm}: hypothesis set holds"), hr.all_hold(), || {
                hr.conditions
                    .first_failure()
                    .map(|r| r.name.clone())
                    .unwrap_or_default()
            });
            if let Some(e) = expect_e {
                report.check(
                    format!("{nm}: constant e = {e}"),
                    hr.e_exponent == *e,
                    || format!("computed e = {}", hr.e_exponent),
                );
            }
        }
        StepOp::DefGroup { key, params } => {
            st.register_group(key.clone(), Group::new(*params));
            report.push(format!("{nm}: registered group {key}"), Status::Pass, None);
        }
        StepOp::ElemOrder {
            group,
            word,
            expect_exp,
        } => {
            let g = st.group(group);
            let elem = g.eval_word(word);
            let ord = g.elem_order(elem);
            let expect = p_pow(g.params.p, *expect_exp);
            report.check(format!("{nm}: order p^{expect_exp}"), ord == expect, || {
                format!("order {ord} != {expect}")
            });
        }
        StepOp::ElemEqual { group, lhs, rhs } => {
            let g = st.group(group);
            let l = g.eval_word(lhs);
            let r = g.eval_word(rhs);
            report.check(nm.clone(), l == r, || format!("{l} != {r}"));
        }
        StepOp::Central { group, word } => {
            let g = st.group(group);
            let elem = g.eval_word(word);
            let ok = g.elements().all(|h| g.mul(elem, h) == g.mul(h, elem));
            report.check(format!("{nm}: central"), ok, || format!("{elem} not central"));
        }
        StepOp::TrivialMeetDerived { group, gens } => {
            let g = st.group(group);
            let sub = subgroup_from_words(g, gens);
            let derived = g.derived_subgroup();
            let meet = derived.intersect(&sub);
            report.check(format!("{nm}: trivial meet with derived subgroup"), meet.len() == 1, || {
                format!("intersection order {}", meet.len())
            });
        }
        StepOp::DirectProduct {
            group,
            factors,
            orders,
            equals_gens,
        } => {
            let g = st.group(group);
            let elems: Vec<GroupElement> = factors.iter().map(|w| g.eval_word(w)).collect();
            let mut ok_orders = true;
            for (e, &ord_exp) in elems.iter().zip(orders) {
                if g.elem_order(*e) != p_pow(g.params.p, ord_exp) {
                    ok_orders = false;
                }
            }
            report.check(format!("{nm}: factor orders"), ok_orders, || {
                elems
                    .iter()
                    .map(|e| format!("ord({e}) = {}", g.elem_order(*e)))
                    .collect::<Vec<_>>()
                    .join(", ")
            });
            let commuting = elems.iter().enumerate().all(|(i, a)| {
                elems[i + 1..]
                    .iter()
                    .all(|b| g.mul(*a, *b) == g.mul(*b, *a))
            });
            report.check(format!("{nm}: factors commute"), commuting, || "noncommuting pair".into());
            // distinct products
            let mut product_set = std::collections::HashSet::new();
            let mut index = vec![0u64; elems.len()];
            let sizes: Vec<u64> = orders.iter().map(|&e| p_pow(g.params.p, e)).collect();
            let total: u64 = sizes.iter().product();
            let mut all_distinct = true;
            'outer: loop {
                let mut prod = g.identity();
                for (e, &pw) in elems.iter().zip(&index) {
                    prod = g.mul(prod, g.pow(*e, pw));
                }
                if !product_set.insert(prod) {
                    all_distinct = false;
                    break;
                }
                // increment multi-index
                for slot in 0..index.len() {
                    index[slot] += 1;
                    if index[slot] < sizes[slot] {
                        continue 'outer;
                    }
                    index[slot] = 0;
                }
                break;
            }
            report.check(
                format!("{nm}: internal direct product of order {total}"),
                all_distinct && product_set.len() as u64 == total,
                || format!("only {} distinct products", product_set.len()),
            );
            if !equals_gens.is_empty() {
                let span = subgroup_from_words(g, equals_gens);
                let mut sorted: Vec<GroupElement> = product_set.into_iter().collect();
                sorted.sort();
                report.check(
                    format!("{nm}: equals the stated span"),
                    sorted == span.elements,
                    || {
                        format!(
                            "product set order {} vs span order {}",
                            sorted.len(),
                            span.order()
                        )
                    },
                );
            }
        }
        StepOp::QuotientReduce { group, by, expect } => {
            let g = st.group(group);
            let sub = subgroup_from_words(g, by);
            let derived = g.derived_subgroup();
            report.check(
                format!("{nm}: removed subgroup meets derived trivially"),
                derived.intersect(&sub).len() == 1,
                || "nontrivial intersection".into(),
            );
            match g.quotient_by_central(&sub) {
                Err(e) => {
                    report.push(format!("{nm}: quotient"), Status::Fail, Some(e.to_string()));
                }
                Ok(table) => {
                    report.check(format!("{nm}: quotient is a group"), table.validate(), || {
                        "table fails Latin-square or associativity".into()
                    });
                    report.check(
                        format!("{nm}: order product"),
                        table.order as u64 * sub.order() as u64 == g.order(),
                        || format!("{} * {} != {}", table.order, sub.order(), g.order()),
                    );
                    match expect {
                        QuotientExpect::Metacyclic => {
                            let witness = is_metacyclic(&table);
                            report.check(format!("{nm}: quotient is metacyclic"), witness.is_some(), || {
                                "no normal cyclic subgroup with cyclic quotient".into()
                            });
                        }
                        QuotientExpect::MatchesGroup(key) => {
                            let reduced = st.group(key);
                            report.check(
                                format!("{nm}: quotient order matches {key}"),
                                table.order as u64 == reduced.order(),
                                || format!("{} != {}", table.order, reduced.order()),
                            );
                            // relations of the reduced presentation hold on
                            // the quotient generator images
                            let rp = &reduced.params;
                            let si = table.generator_images["sigma"];
                            let ti = table.generator_images["tau"];
                            let ri = table.generator_images["rho"];
                            let pt = rp.p_t();
                            let mut rel_ok = true;
                            let lhs = table.pow(si, rp.p_a());
                            let rhs = table.pow(
                                ri,
                                if rp.t == 0 { 0 } else { rp.s * p_pow(rp.p, rp.alpha) % pt },
                            );
                            rel_ok &= lhs == rhs;
                            let lhs = table.pow(ti, rp.p_b());
                            let mut rhs = table.pow(
                                ri,
                                if rp.t == 0 { 0 } else { rp.j * p_pow(rp.p, rp.beta) % pt },
                            );
                            if rp.m != 0 {
                                rhs = table.mul(table.pow(si, rp.m * p_pow(rp.p, rp.c)), rhs);
                            }
                            rel_ok &= lhs == rhs;
                            rel_ok &= table.pow(ri, pt) == 0;
                            let k = rp.k_int() as u64;
                            let lhs = table.mul(si, ti);
                            let rhs = table.mul(ti, table.mul(table.pow(si, k), table.pow(ri, rp.l)));
                            rel_ok &= lhs == rhs;
                            report.check(
                                format!("{nm}: reduced presentation holds in the quotient"),
                                rel_ok,
                                || "a defining relation fails on the images".into(),
                            );
                            // generation
                            let mut seen = vec![false; table.order];
                            seen[0] = true;
                            let mut stack = vec![0usize];
                            let mut reached = 1usize;
                            while let Some(x) = stack.pop() {
                                for &gen in [si, ti, ri].iter() {
                                    let y = table.mul(x, gen);
                                    if !seen[y] {
                                        seen[y] = true;
                                        reached += 1;
                                        stack.push(y);
                                    }
                                }
                            }
                            report.check(
                                format!("{nm}: images generate the quotient"),
                                reached == table.order,
                                || format!("span {reached} of {}", table.order),
                            );
                        }
                        QuotientExpect::None => {}
                    }
                }
            }
        }
        StepOp::DefScalar { name, exp, note } => {
            st.scalars.insert(name.clone(), *exp);
            let ord = Scalar::new(*exp, st.modulus).order();
            report.push(
                format!("{nm}: {name} = zeta^{exp} (order {ord}) {note}"),
                Status::Pass,
                None,
            );
        }
        StepOp::ScalarEq {
            label,
            lhs,
            rhs,
            order_expect,
        } => {
            let resolve = |side: &[(String, i128)]| -> i128 {
                side.iter()
                    .map(|(name, e)| st.scalars.get(name).copied().unwrap_or_else(|| panic!("unknown scalar {name}")) * e)
                    .sum()
            };
            let l = resolve(lhs).rem_euclid(st.modulus as i128);
            let r = resolve(rhs).rem_euclid(st.modulus as i128);
            report.check(format!("{nm}: {label}"), l == r, || {
                format!("zeta^{l} != zeta^{r} (mod {})", st.modulus)
            });
            if let Some(ord) = order_expect {
                let actual = Scalar::new(l, st.modulus).order();
                report.check(format!("{nm}: order {ord}"), actual == *ord, || {
                    format!("order {actual}")
                });
            }
        }
        StepOp::DefVector { group, name, build } => {
            let per_ctx: Vec<RegVector> = (0..st.ctxs.len())
                .map(|ci| st.build_vector(group, build, ci))
                .collect();
            let nonzero = per_ctx.iter().all(|v| !regrep::is_zero(v));
            report.check(format!("{nm}: {name} nonzero"), nonzero, || {
                format!("{name} vanished in some context")
            });
            st.vectors.insert(name.clone(), (group.clone(), per_ctx));
        }
        StepOp::DefFamily {
            group,
            prefix,
            word,
            count,
            seed: seed_name,
        } => {
            let g = st.group(group);
            let w = g.eval_word(word);
            let (gk, seed_vecs) = st.vector(seed_name).clone();
            assert_eq!(&gk, group);
            let mut current = seed_vecs;
            let mut all_nonzero = true;
            for i in 0..*count {
                all_nonzero &= current.iter().all(|v| !regrep::is_zero(v));
                st.vectors
                    .insert(format!("{prefix}{i}"), (group.clone(), current.clone()));
                if i + 1 < *count {
                    let g = st.group(group);
                    current = current
                        .iter()
                        .map(|v| regrep::apply(g, w, v))
                        .collect();
                }
            }
            report.check(
                format!("{nm}: family {prefix}0..{prefix}{}", count - 1),
                all_nonzero,
                || "a family member vanished".into(),
            );
        }
        StepOp::MapsTo {
            group,
            word,
            from,
            to,
            scalar,
        } => {
            let w = st.group(group).eval_word(word);
            let res = st.maps_to_holds(group, w, 0, from, *scalar, 0, to);
            report.check(nm.clone(), res.is_ok(), || res.unwrap_err());
        }
        StepOp::DefSpace {
            key,
            group,
            coeffs,
            vars,
            claimed,
        } => {
            assert_eq!(vars.len(), claimed.n());
            assert_eq!(claimed.modulus(), st.modulus);
            st.spaces.insert(
                key.clone(),
                SpaceData {
                    group: group.clone(),
                    labels: vars.iter().map(|(l, _)| l.clone()).collect(),
                    coeffs: coeffs.clone(),
                    exprs: vars.iter().map(|(_, e)| e.clone()).collect(),
                    claimed: claimed.clone(),
                },
            );
            report.push(
                format!("{nm}: space {key} with {} variables", vars.len()),
                Status::Pass,
                None,
            );
        }
        StepOp::CheckSpaceAction { space } => {
            let sp = st.spaces.get(space).unwrap_or_else(|| panic!("unknown space {space}"));
            let group = st.group(&sp.group);
            let mut failure: Option<String> = None;
            'gens: for gen in [crate::group::Gen::Sigma, crate::group::Gen::Tau, crate::group::Gen::Rho] {
                let map = sp.claimed.map_of(gen);
                let w = group.generator(gen);
                for i in 0..sp.labels.len() {
                    // gen . var_i = zeta^(scalar_i) prod var_j^(row_ij)
                    let mut to_coeff = 0i128;
                    let mut to_expr: ProductExpr = Vec::new();
                    let mut combined: BTreeMap<String, i64> = BTreeMap::new();
                    for &(j, e) in map.row(i) {
                        to_coeff += e as i128 * sp.coeffs[j];
                        for (name, pow) in &sp.exprs[j] {
                            *combined.entry(name.clone()).or_insert(0) += e * pow;
                        }
                    }
                    to_expr.extend(combined.into_iter().filter(|(_, e)| *e != 0));
                    let res = st.maps_to_holds(
                        &sp.group,
                        w,
                        sp.coeffs[i],
                        &sp.exprs[i],
                        map.scalar_exp(i) as i128,
                        to_coeff,
                        &to_expr,
                    );
                    if let Err(e) = res {
                        failure = Some(format!(
                            "{:?} on {}: {e}",
                            gen, sp.labels[i]
                        ));
                        break 'gens;
                    }
                }
            }
            report.check(
                format!("{nm}: claimed action matches the carrier functions"),
                failure.is_none(),
                || failure.clone().unwrap(),
            );
        }
        StepOp::DefSubstitution {
            key,
            space,
            labels,
            rows,
            offsets,
            claimed,
        } => {
            let (group_key, new_space) = {
                let sp = st.spaces.get(space).unwrap_or_else(|| panic!("unknown space {space}"));
                let sub = match Substitution::new(rows.clone(), offsets.clone(), st.modulus) {
                    Ok(s) => s,
                    Err(e) => {
                        report.push(format!("{nm}: substitution"), Status::Fail, Some(e.to_string()));
                        return;
                    }
                };
                // induced action on the new variables must equal the claim
                let mut induced_maps = Vec::new();
                for gen in [crate::group::Gen::Sigma, crate::group::Gen::Tau, crate::group::Gen::Rho] {
                    match induced_action(&sub, sp.claimed.map_of(gen)) {
                        Ok(m) => induced_maps.push(m),
                        Err(e) => {
                            report.push(
                                format!("{nm}: induced action ({gen:?})"),
                                Status::Fail,
                                Some(e.to_string()),
                            );
                            return;
                        }
                    }
                }
                let induced = ActionAssignment {
                    sigma: induced_maps[0].clone(),
                    tau: induced_maps[1].clone(),
                    rho: induced_maps[2].clone(),
                };
                report.check(
                    format!("{nm}: induced action equals the transcribed action"),
                    induced == *claimed,
                    || {
                        for gen in [crate::group::Gen::Sigma, crate::group::Gen::Tau, crate::group::Gen::Rho] {
                            if induced.map_of(gen) != claimed.map_of(gen) {
                                return format!(
                                    "{gen:?}: induced {} vs claimed {}",
                                    induced.map_of(gen).render(),
                                    claimed.map_of(gen).render()
                                );
                            }
                        }
                        String::new()
                    },
                );
                // derive the new space's function meanings
                let mut new_coeffs = Vec::with_capacity(labels.len());
                let mut new_exprs = Vec::with_capacity(labels.len());
                for (i, row) in rows.iter().enumerate() {
                    let mut coeff = offsets[i];
                    let mut combined: BTreeMap<String, i64> = BTreeMap::new();
                    for (j, &e) in row.iter().enumerate() {
                        if e == 0 {
                            continue;
                        }
                        coeff += e as i128 * sp.coeffs[j];
                        for (name, pow) in &sp.exprs[j] {
                            *combined.entry(name.clone()).or_insert(0) += e as i64 * pow;
                        }
                    }
                    new_coeffs.push(coeff);
                    new_exprs.push(
                        combined
                            .into_iter()
                            .filter(|(_, e)| *e != 0)
                            .collect::<ProductExpr>(),
                    );
                }
                st.subs.insert(key.clone(), sub);
                (
                    sp.group.clone(),
                    SpaceData {
                        group: sp.group.clone(),
                        labels: labels.clone(),
                        coeffs: new_coeffs,
                        exprs: new_exprs,
                        claimed: claimed.clone(),
                    },
                )
            };
            let _ = group_key;
            st.spaces.insert(key.clone(), new_space);
        }
        StepOp::CheckLatticeFixed {
            space,
            words,
            substitution,
        } => {
            let sp = st.spaces.get(space).unwrap_or_else(|| panic!("unknown space {space}"));
            let group = st.group(&sp.group);
            let mut diag = Vec::new();
            let mut diag_ok = true;
            for w in words {
                let elem = group.eval_word(w);
                let map = sp.claimed.evaluate_element(elem);
                match map.diagonal_scalars() {
                    Ok(scalars) => diag.push(scalars),
                    Err(_) => {
                        diag_ok = false;
                        break;
                    }
                }
            }
            report.check(format!("{nm}: listed elements act diagonally"), diag_ok, || {
                "non-diagonal action".into()
            });
            if !diag_ok {
                return;
            }
            let (basis, index) = fixed_monomial_lattice(&diag);
            let sub = st.subs.get(substitution).unwrap_or_else(|| panic!("unknown substitution {substitution}"));
            let sub_basis = lattice::hnf_basis(&sub.row_lattice());
            report.check(
                format!("{nm}: substitution rows span the fixed lattice"),
                basis == sub_basis,
                || format!("fixed-lattice basis {basis:?} vs rows {sub_basis:?}"),
            );
            // cross-check: lattice index = order of the scalar group
            let mut seen = std::collections::HashSet::new();
            let mut stack = vec![vec![Scalar::one(st.modulus); diag[0].len()]];
            seen.insert(stack[0].clone());
            while let Some(v) = stack.pop() {
                for gen in &diag {
                    let next: Vec<Scalar> = v
                        .iter()
                        .zip(gen)
                        .map(|(a, b)| a.mul(b).expect("same modulus"))
                        .collect();
                    if seen.insert(next.clone()) {
                        stack.push(next);
                    }
                }
            }
            report.check(
                format!("{nm}: lattice index equals the scalar-group order"),
                index == Some(seen.len() as u128),
                || format!("index {index:?} vs order {}", seen.len()),
            );
        }
        StepOp::AffineSplit { space, dropped } => {
            let sp = st.spaces.get(space).unwrap_or_else(|| panic!("unknown space {space}"));
            let mut ok = true;
            for gen in [crate::group::Gen::Sigma, crate::group::Gen::Tau, crate::group::Gen::Rho] {
                let map = sp.claimed.map_of(gen);
                let self_coef = map
                    .row(*dropped)
                    .iter()
                    .find(|(j, _)| j == dropped)
                    .map(|(_, e)| *e)
                    .unwrap_or(0);
                ok &= self_coef == 1;
                for i in 0..map.n {
                    if i != *dropped {
                        ok &= map.row(i).iter().all(|(j, _)| j != dropped);
                    }
                }
            }
            report.check(
                format!("{nm}: {} transforms affinely over the rest", sp.labels[*dropped]),
                ok,
                || "dropped variable is entangled".into(),
            );
        }
        StepOp::Kernel {
            space,
            group,
            expect,
            words,
        } => {
            let sp = st.spaces.get(space).unwrap_or_else(|| panic!("unknown space {space}"));
            let g = st.group(group);
            let kernel = sp.claimed.kernel(g);
            match expect {
                KernelExpect::Trivial => {
                    report.check(format!("{nm}: kernel trivial"), kernel.is_trivial(), || {
                        format!("kernel order {}", kernel.order())
                    });
                }
                KernelExpect::GeneratedBy => {
                    let expected = subgroup_from_words(g, words);
                    report.check(
                        format!("{nm}: kernel as expected"),
                        kernel.elements == expected.elements,
                        || {
                            format!(
                                "kernel order {} vs expected {}",
                                kernel.order(),
                                expected.order()
                            )
                        },
                    );
                }
                KernelExpect::Contains => {
                    let ok = words.iter().all(|w| kernel.contains(g.eval_word(w)));
                    report.check(format!("{nm}: kernel contains the witness"), ok, || {
                        "witness element acts nontrivially".into()
                    });
                }
            }
        }
        StepOp::MapEquality { left, right } => {
            let l = &st.spaces.get(left).unwrap_or_else(|| panic!("unknown space {left}")).claimed;
            let r = &st.spaces.get(right).unwrap_or_else(|| panic!("unknown space {right}")).claimed;
            report.check(format!("{nm}: sigma-maps agree"), l.sigma == r.sigma, || {
                format!("{} vs {}", l.sigma.render(), r.sigma.render())
            });
            report.check(format!("{nm}: tau-maps agree"), l.tau == r.tau, || {
                format!("{} vs {}", l.tau.render(), r.tau.render())
            });
        }
        StepOp::Thm26 { p, m, n, r, form } => {
            match crate::monomial::thm_2_6_action(*p, *m, *n, *r, *form) {
                Err(e) => {
                    report.push(format!("{nm}: carrier action"), Status::Fail, Some(e.to_string()));
                }
                Ok((assignment, params)) => {
                    let g = Group::new(params);
                    let rels = assignment.check_relations(&g);
                    report.check(format!("{nm}: relations pass"), rels.passed(), || {
                        rels.first_failure().map(|r| r.name.clone()).unwrap_or_default()
                    });
                    let kernel = assignment.kernel(&g);
                    report.check(format!("{nm}: faithful"), kernel.is_trivial(), || {
                        format!("kernel order {}", kernel.order())
                    });
                }
            }
        }
        StepOp::Lemma28 { n, trials } => {
            match find_fq_contexts(*n as u64, 2) {
                Err(e) => report.push(format!("{nm}: contexts"), Status::Fail, Some(e.to_string())),
                Ok(cs) => match lemma_2_8_suite(*n, *trials, &cs, derive_seed(seed, nm)) {
                    Err(e) => report.push(format!("{nm}: suite"), Status::Fail, Some(e.to_string())),
                    Ok(rep) => {
                        let ok = rep.passed();
                        report.check(format!("{nm}: linearization suite n = {n}"), ok, || {
                            rep.first_failure().map(|r| r.name.clone()).unwrap_or_default()
                        });
                    }
                },
            }
        }
        StepOp::NumberTheory => {
            let rep = number_theory_checks(&sc.params);
            report.check(format!("{nm}: exponent identities"), rep.passed(), || {
                rep.first_failure().map(|r| r.name.clone()).unwrap_or_default()
            });
        }
        StepOp::Section6Orders { group } => {
            let g = st.group(group);
            let p = &g.params;
            let sigma_ord = g.elem_order(g.sigma());
            let expect_sigma = p_pow(p.p, p.a + p.t - p.alpha);
            report.check(
                format!("{nm}: ord(sigma) = p^(a+t-alpha)"),
                sigma_ord == expect_sigma,
                || format!("{sigma_ord} != {expect_sigma}"),
            );
            if let Some(expect_tau) = section6_tau_order(g) {
                let tau_ord = g.elem_order(g.tau());
                report.check(format!("{nm}: ord(tau) case formula"), tau_ord == expect_tau, || {
                    format!("{tau_ord} != {expect_tau}")
                });
            }
            if !p.abelian {
                let bound = p_pow(p.p, p.a + p.b + p.t - p.c);
                let exp = g.exponent();
                report.check(format!("{nm}: exponent bound"), exp <= bound, || {
                    format!("exp {exp} > {bound}")
                });
            }
        }
        StepOp::CenterMatches { group, gens } => {
            let g = st.group(group);
            let expected = subgroup_from_words(g, gens);
            let center = g.center();
            report.check(
                format!("{nm}: center equals the stated span"),
                center.elements == expected.elements,
                || {
                    format!(
                        "center order {} vs span order {}",
                        center.order(),
                        expected.order()
                    )
                },
            );
        }
        StepOp::ExpAtLeast { group, exp } => {
            let g = st.group(group);
            let actual = g.exponent();
            let bound = p_pow(g.params.p, *exp);
            report.check(format!("{nm}: exponent at least p^{exp}"), actual >= bound, || {
                format!("exp = {actual} < {bound}")
            });
        }
        StepOp::Flag { text } => {
            report.push(format!("{nm}: {text}"), Status::Ambiguous, None);
        }
    }
}

/// Bump a single scalar inside a scenario (for mutation testing): returns
/// true when the target index named an existing mutable scalar site.
pub fn inject_scalar_fault(sc: &mut Scenario, target: usize) -> bool {
    let mut count = 0usize;
    for step in &mut sc.steps {
        match &mut step.op {
            StepOp::DefVector { build, .. } => {
                if bump_build(build, target, &mut count) {
                    return true;
                }
            }
            StepOp::MapsTo { scalar, .. } => {
                if count == target {
                    *scalar += 1;
                    return true;
                }
                count += 1;
            }
            StepOp::DefSpace { claimed, .. } | StepOp::DefSubstitution { claimed, .. } => {
                for gen in [crate::group::Gen::Sigma, crate::group::Gen::Tau, crate::group::Gen::Rho] {
                    let map = claimed.map_of(gen);
                    for i in 0..map.n {
                        if count == target {
                            let bumped = map.with_scalar_bumped(i);
                            match gen {
                                crate::group::Gen::Sigma => claimed.sigma = bumped,
                                crate::group::Gen::Tau => claimed.tau = bumped,
                                crate::group::Gen::Rho => claimed.rho = bumped,
                            }
                            return true;
                        }
                        count += 1;
                    }
                }
            }
            _ => {}
        }
    }
    false
}

fn bump_build(build: &mut VectorBuild, target: usize, count: &mut usize) -> bool {
    match build {
        VectorBuild::Orbit { coeff_step, of, .. } => {
            if *count == target {
                *coeff_step += 1;
                return true;
            }
            *count += 1;
            bump_build(of, target, count)
        }
        VectorBuild::Apply { of, .. } => bump_build(of, target, count),
        _ => false,
    }
}
