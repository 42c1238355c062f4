//! Scenarios for the abelian-base chains: the center formula and reduction
//! steps, and the full variable-change chain x -> y -> z -> s ending in the
//! linearization lemma.

use super::*;
use crate::params::GroupParams;
use crate::scenario::{KernelExpect, QuotientExpect, VectorBuild};

pub fn scenarios() -> Vec<Scenario> {
    vec![step1_center(), step1_case1(), step2_main(), step2_p2(), step2_full_alpha()]
}

/// Center formula and the alpha < t reduction display.
fn step1_center() -> Scenario {
    let params = GroupParams::abelian_shape(2, 3, 2, 2, 1, 2, 1, 1, 1).unwrap();
    let mut b = B::new(
        "4.step1",
        "class-2 center formula and the lowering reduction",
        params,
        4,
    );
    b.consistent();
    b.hyp(TheoremId::T14, Some(4)); // e = max(a, 2t) = max(3, 4)
    b.center_matches(
        "center = <sigma^(p^t), tau^(p^t), rho>",
        &["4.center"],
        vec![wd(&[(S, 4)]), wd(&[(T, 4)]), wd(&[(R, 1)])],
    );
    // (sigma^(p^(a-1)) rho^(-p^(alpha-1)))^p = 1
    let witness = wd(&[(S, 4), (R, -1)]);
    b.elem_eq(
        "lowering element has order p",
        &["4.red.elem"],
        word_pow(&witness, 2),
        wd(&[]),
    );
    b.meet("lowering element meets the derived subgroup trivially", &["4.red.meet"], vec![witness.clone()]);
    b.hyp25("main", vec![witness.clone()]);
    let reduced = GroupParams::abelian_shape(2, 2, 2, 2, 0, 2, 1, 1, 1).unwrap();
    b.group("red", reduced);
    b.consistent_in("red");
    b.quotient(
        "main",
        "quotient realizes the lowered presentation",
        &["4.red.quot"],
        vec![witness],
        QuotientExpect::MatchesGroup("red".into()),
    );
    b.done()
}

/// The alpha = t reduction: remove <sigma^(p^t)>.
fn step1_case1() -> Scenario {
    let params = GroupParams::abelian_shape(3, 2, 1, 1, 1, 1, 1, 1, 1).unwrap();
    let mut b = B::new(
        "4.step1.case1",
        "removing <sigma^(p^t)> when sigma^(p^a) = 1",
        params,
        9,
    );
    b.consistent();
    let witness = wd(&[(S, 3)]);
    b.meet("<sigma^(p^t)> meets the derived subgroup trivially", &["4.red.case1"], vec![witness.clone()]);
    b.hyp25("main", vec![witness.clone()]);
    let reduced = GroupParams::abelian_shape(3, 1, 1, 1, 1, 1, 1, 1, 1).unwrap();
    b.group("red", reduced);
    b.consistent_in("red");
    b.quotient(
        "main",
        "quotient realizes the a = t presentation",
        &["4.red.case1"],
        vec![witness],
        QuotientExpect::MatchesGroup("red".into()),
    );
    b.done()
}

struct Step2Config {
    id: &'static str,
    p: u64,
    t: u32,
    alpha: u32,
    beta: u32,
}

/// The full Step II chain on the reduced presentation
/// sigma^(p^t) = rho^(p^alpha), tau^(p^t) = rho^(p^beta).
fn step2_chain(cfg: Step2Config) -> Scenario {
    let Step2Config { id, p, t, alpha, beta } = cfg;
    let params = GroupParams::abelian_shape(p, t, t, t, alpha, beta, 1, 1, 1).unwrap();
    let e = t.max(2 * t); // max(a, 2t) with a = t
    let modulus = p.pow(e);
    let pt = p.pow(t);
    let n_vars = pt as usize;
    let mut b = B::new(
        id,
        "abelian-base chain x -> y -> z -> s with linearization",
        params,
        modulus,
    );
    b.consistent();
    b.hyp(TheoremId::T14, Some(e));

    // zeta primitive p^(2t - alpha), eta = zeta^(p^(beta - alpha))
    // primitive p^(2t - beta), xi = zeta^(p^(t - alpha)) primitive p^t
    let zeta = root_exp(modulus, p.pow(2 * t - alpha));
    let eta = zeta * p.pow(beta - alpha) as i128;
    let xi = zeta * p.pow(t - alpha) as i128;
    b.scalar("zeta", zeta, "(primitive of order p^(2t-alpha))");
    b.scalar("eta", eta, "(primitive of order p^(2t-beta))");
    b.scalar("xi", xi, "(primitive of order p^t)");
    b.scalar_eq(
        "eta^(p^(t-beta)) = xi",
        &[],
        &[("eta", p.pow(t - beta) as i128)],
        &[("xi", 1)],
        Some(pt),
    );

    // x_i = sum_(j,k) eta^(-j - k p^(t-beta)) x(sigma^i tau^j rho^k)
    let seed = VectorBuild::Orbit {
        word: wd(&[(T, 1)]),
        count: pt,
        coeff_step: -eta,
        of: Box::new(VectorBuild::Orbit {
            word: wd(&[(R, 1)]),
            count: pt,
            coeff_step: -eta * p.pow(t - beta) as i128,
            of: Box::new(VectorBuild::Point { at: wd(&[]) }),
        }),
    };
    b.vector("main", "xseed", &["4.x-def"], seed);
    b.family("main", "x", &["4.x-def"], wd(&[(S, 1)]), pt, "xseed");

    b.flag(
        "the displayed diagonal weights read tau: x_i -> eta xi^i x_i; under \
         the commutator orientation fixed by the presentation the verified \
         action is tau: x_i -> eta xi^(-i) x_i, transcribed below",
        &["4.x-act"],
    );
    // sigma cycles with wrap xi^(p^alpha); tau acts by eta xi^(-i); rho by xi
    let claimed_x = assignment(
        cycle(n_vars, xi * p.pow(alpha) as i128, modulus),
        diag(
            (0..n_vars).map(|i| eta - xi * i as i128).collect(),
            modulus,
        ),
        diag(vec![xi; n_vars], modulus),
    );
    b.space("X", "main", &["4.x-act"], fam_vars("x", pt), vec![0; n_vars], claimed_x);
    b.kernel(
        "X",
        "main",
        "the x-span is faithful",
        &["4.x-faithful"],
        KernelExpect::Trivial,
        vec![],
    );

    // y_0 = x_0^(p^t), y_i = x_i / x_(i-1)
    let mut rows = vec![vec![0i64; n_vars]; n_vars];
    rows[0][0] = pt as i64;
    for i in 1..n_vars {
        rows[i][i - 1] = -1;
        rows[i][i] = 1;
    }
    let labels: Vec<String> = (0..n_vars).map(|i| format!("y{i}")).collect();
    // sigma: y0 -> y1^(p^t) y0; y_i cycle; y_(pt-1) -> xi^(p^alpha)/(y1...y_(pt-1))
    let sigma_y = {
        let mut m = vec![vec![0i64; n_vars]; n_vars];
        let mut sc = vec![0i128; n_vars];
        m[0][0] = 1;
        if n_vars > 1 {
            m[0][1] = pt as i64;
        }
        for i in 1..n_vars - 1 {
            m[i][i + 1] = 1;
        }
        for j in 1..n_vars {
            m[n_vars - 1][j] = -1;
        }
        sc[n_vars - 1] = xi * p.pow(alpha) as i128;
        MonomialMap::new(m, sc, modulus).unwrap()
    };
    let tau_y = diag(
        std::iter::once(eta * pt as i128)
            .chain((1..n_vars).map(|_| -xi))
            .collect(),
        modulus,
    );
    let rho_y = diag(
        std::iter::once(xi * pt as i128)
            .chain((1..n_vars).map(|_| 0))
            .collect(),
        modulus,
    );
    b.subst(
        "Y",
        "X",
        &["4.y-def", "4.y-act"],
        labels,
        rows,
        vec![0; n_vars],
        assignment(sigma_y, tau_y, rho_y),
    );
    b.lattice(
        "X",
        "the y-monomials span the rho-fixed lattice",
        &["4.y-fixed"],
        vec![wd(&[(R, 1)])],
        "Y",
    );
    b.push(
        "verify action on Y",
        &["4.y-act"],
        crate::scenario::StepOp::CheckSpaceAction { space: "Y".into() },
    );
    b.split("Y", &["4.y-split"], 0);

    // restrict to (y1, ..., y_(pt-1))
    let nr = n_vars - 1;
    let mut rows = vec![vec![0i64; n_vars]; nr];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i + 1] = 1;
    }
    let sigma_yr = {
        let mut m = vec![vec![0i64; nr]; nr];
        let mut sc = vec![0i128; nr];
        for i in 0..nr.saturating_sub(1) {
            m[i][i + 1] = 1;
        }
        for j in 0..nr {
            m[nr - 1][j] = -1;
        }
        sc[nr - 1] = xi * p.pow(alpha) as i128;
        MonomialMap::new(m, sc, modulus).unwrap()
    };
    b.subst(
        "Yr",
        "Y",
        &[],
        (1..n_vars).map(|i| format!("y{i}")).collect(),
        rows,
        vec![0; nr],
        assignment(sigma_yr, diag(vec![-xi; nr], modulus), ident(nr, modulus)),
    );

    // z_1 = y_1^(p^t) xi^(-p^alpha), z_i = y_i / y_(i-1)
    let mut rows = vec![vec![0i64; nr]; nr];
    rows[0][0] = pt as i64;
    for i in 1..nr {
        rows[i][i - 1] = -1;
        rows[i][i] = 1;
    }
    let mut offsets = vec![0i128; nr];
    offsets[0] = -xi * p.pow(alpha) as i128;
    // sigma: z1 -> z2^(p^t) z1, z-chain, z_(pt-1) -> 1/(z1 z2^(pt-1) ... );
    // with a single z the action collapses to z1 -> 1/z1
    let sigma_z = {
        let mut m = vec![vec![0i64; nr]; nr];
        if nr == 1 {
            m[0][0] = -1;
        } else {
            m[0][0] = 1;
            m[0][1] = pt as i64;
            for i in 1..nr - 1 {
                m[i][i + 1] = 1;
            }
            m[nr - 1][0] = -1;
            for j in 1..nr {
                m[nr - 1][j] = -(pt as i64) + j as i64;
            }
        }
        MonomialMap::new(m, vec![0; nr], modulus).unwrap()
    };
    b.subst(
        "Z",
        "Yr",
        &["4.z1-def", "4.z-act"],
        (1..=nr).map(|i| format!("z{i}")).collect(),
        rows,
        offsets,
        assignment(sigma_z, ident(nr, modulus), ident(nr, modulus)),
    );
    b.lattice(
        "Yr",
        "the z-monomials span the tau-fixed lattice",
        &["4.z-fixed"],
        vec![wd(&[(T, 1)])],
        "Z",
    );

    if nr >= 2 {
        // s_i = sigma^(i-1) . z_2; the chain closes into the cyclic-shift
        // shape of the linearization lemma (cycle length p^t)
        b.flag(
            "the s-chain is displayed with tau as the shifting generator; \
             tau is trivial on the z-variables, so the verified shift is by \
             sigma",
            &["4.s-def"],
        );
        // rows: s_i as monomials in z; iterate sigma on the z-claim
        let mut cur = vec![0i64; nr];
        cur[1] = 1; // z2
        let mut cur_off = 0i128;
        let mut rows = Vec::with_capacity(nr);
        let mut offs = Vec::with_capacity(nr);
        let sigma_z = {
            // rebuild for iteration
            let mut m = vec![vec![0i64; nr]; nr];
            m[0][0] = 1;
            m[0][1] = pt as i64;
            for i in 1..nr - 1 {
                m[i][i + 1] = 1;
            }
            m[nr - 1][0] = -1;
            for j in 1..nr {
                m[nr - 1][j] = -(pt as i64) + j as i64;
            }
            MonomialMap::new(m, vec![0; nr], modulus).unwrap()
        };
        for _ in 0..nr {
            rows.push(cur.clone());
            offs.push(cur_off);
            // apply sigma to the monomial z^cur
            let mut next = vec![0i64; nr];
            let mut next_off = cur_off;
            for (j, &e) in cur.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                next_off += e as i128 * sigma_z.scalar_exp(j) as i128;
                for &(k, v) in sigma_z.row(j) {
                    next[k] += e * v;
                }
            }
            cur = next;
            cur_off = next_off;
        }
        b.subst(
            "Ssp",
            "Z",
            &["4.s-def", "4.s-act"],
            (1..=nr).map(|i| format!("s{i}")).collect(),
            rows,
            offs,
            assignment(
                lemma_cycle(nr, 0, modulus),
                ident(nr, modulus),
                ident(nr, modulus),
            ),
        );
    }
    b.lemma(&["4.lemma"], pt as usize);
    b.done()
}

fn step2_main() -> Scenario {
    step2_chain(Step2Config {
        id: "4.step2",
        p: 3,
        t: 1,
        alpha: 0,
        beta: 0,
    })
}

fn step2_p2() -> Scenario {
    step2_chain(Step2Config {
        id: "4.step2.p2",
        p: 2,
        t: 1,
        alpha: 1,
        beta: 1,
    })
}

fn step2_full_alpha() -> Scenario {
    step2_chain(Step2Config {
        id: "4.step2.full",
        p: 3,
        t: 1,
        alpha: 1,
        beta: 1,
    })
}
