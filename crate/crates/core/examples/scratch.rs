// scratch exploration binary (not shipped): probe the transcription details
use centext::group::Group;
use centext::params::GroupParams;
use centext::regrep;
use centext::scalar::{find_fq_contexts, Scalar};

fn main() {
    probe_sec4();
    probe_sec5_case1();
    probe_sec6_boundary();
    probe_sec5_case7();
}

// reduced class-2 group sigma^(p^t) = rho^(p^alpha), tau^(p^t) = rho^(p^beta)
// with p = 3, t = 1, alpha = beta = 0; N = p^m, m = 2t - alpha = 2.
// x_i = sum_{j,k} eta^(-j - k p^(t-beta)) x(sigma^i tau^j rho^k)
fn probe_sec4() {
    let p = GroupParams::abelian_shape(3, 1, 1, 1, 0, 0, 1, 1, 1).unwrap();
    let g = Group::new(p);
    assert!(g.check_consistency(0).passed());
    let modulus = 9u64; // p^m, m = 2t - alpha
    let ctx = find_fq_contexts(modulus, 1).unwrap()[0];
    // eta = zeta^(p^(m-n)) with n = 2t - beta = 2: eta = zeta
    let eta_exp = 1i128;
    // xi = zeta^(p^(t-alpha)) = zeta^3
    let xi_exp = 3i128;
    let pt = 3u64;
    // x_i for i in 0..3
    let mut xs = Vec::new();
    for i in 0..pt {
        let mut acc = vec![0u64; g.order() as usize];
        for j in 0..pt {
            for k in 0..pt {
                // sigma^i tau^j rho^k
                let elem = g.mul(
                    g.mul(g.pow(g.sigma(), i), g.pow(g.tau(), j)),
                    g.pow(g.rho(), k),
                );
                let coeff = ctx.realize(&Scalar::new(
                    -eta_exp * (j as i128 + k as i128 * pt as i128 / 3 * 1) , // p^(t-beta) = 3^(1-0) = 3
                    modulus,
                ));
                // NOTE: exponent is -(j + 3k) * eta_exp
                let coeff = ctx.realize(&Scalar::new(-(j as i128 + 3 * k as i128), modulus));
                let _ = coeff;
                let c = ctx.realize(&Scalar::new(-(j as i128 + 3 * k as i128) * eta_exp, modulus));
                acc[g.index(elem)] = ctx.add(acc[g.index(elem)], c);
            }
        }
        xs.push(acc);
    }
    // tau . x_i = eta xi^(?i) x_i : find the actual eigenvalue exponent
    for i in 0..3usize {
        let moved = regrep::apply(&g, g.tau(), &xs[i]);
        for cand in 0..9i128 {
            let lam = ctx.realize(&Scalar::new(cand, modulus));
            if moved == regrep::scale(&ctx, lam, &xs[i]) {
                println!("sec4: tau . x_{i} = zeta^{cand} x_{i}   (eta=z^1, xi=z^3)");
            }
        }
    }
    // sigma cycle: sigma . x_i = x_(i+1), wrap with xi^(p^alpha) = xi
    let moved = regrep::apply(&g, g.sigma(), &xs[2]);
    for cand in 0..9i128 {
        let lam = ctx.realize(&Scalar::new(cand, modulus));
        if moved == regrep::scale(&ctx, lam, &xs[0]) {
            println!("sec4: sigma . x_2 = zeta^{cand} x_0 (expect xi^(p^alpha) = z^3)");
        }
    }
    let moved = regrep::apply(&g, g.sigma(), &xs[0]);
    if moved == xs[1] {
        println!("sec4: sigma . x_0 = x_1 ok");
    }
    // rho: x_i -> xi x_i
    let moved = regrep::apply(&g, g.rho(), &xs[0]);
    for cand in 0..9i128 {
        let lam = ctx.realize(&Scalar::new(cand, modulus));
        if moved == regrep::scale(&ctx, lam, &xs[0]) {
            println!("sec4: rho . x_0 = zeta^{cand} x_0 (expect xi = z^3)");
        }
    }
}

// 5.case1.b at p=3, a=1, b=1, t=1, r=1 (a < r + t), N = p^max(m, r+t)
fn probe_sec5_case1() {
    let p = centext::params::build_family(
        1,
        centext::params::FamilyFree {
            p: 3,
            a: 1,
            b: 1,
            t: 1,
            r: 1,
            alpha: 0,
            beta: 0,
            c: 1,
        },
    )
    .unwrap();
    let g = Group::new(p);
    assert!(g.check_consistency(0).passed(), "{:?}", g.check_consistency(0));
    let m = centext::hypothesis::exp_exponent(&g);
    let e = m.max(1 + 1);
    println!("sec5 case1b: exp exponent m = {m}, e = {e}");
    let modulus = 3u64.pow(e);
    let ctx = find_fq_contexts(modulus, 1).unwrap()[0];
    // zeta primitive p^a-th root: zeta = Z^(N/p^a); xi = zeta^(p^(a-t)) = zeta
    let zeta_exp = (modulus / 3) as i128; // p^a = 3
    let xi_exp = zeta_exp; // a = t
    // X1 = sum x(sigma^i), X2 = sum x(rho^i)
    let x1 = regrep::weighted_orbit(&g, &ctx, g.sigma(), 3, 0, modulus, &regrep::point(&g, g.identity()));
    let x2 = regrep::weighted_orbit(&g, &ctx, g.rho(), 3, 0, modulus, &regrep::point(&g, g.identity()));
    // Y1 = sum xi^(-i) rho^i X1, Y2 = sum zeta^(-i) sigma^i X2
    let y1 = regrep::weighted_orbit(&g, &ctx, g.rho(), 3, -xi_exp, modulus, &x1);
    let y2 = regrep::weighted_orbit(&g, &ctx, g.sigma(), 3, -zeta_exp, modulus, &x2);
    for (name, v, word, expect) in [
        ("sigma.Y1 = Y1", &y1, g.sigma(), 0i128),
        ("sigma.Y2 = zeta Y2", &y2, g.sigma(), zeta_exp),
        ("rho.Y1 = xi Y1", &y1, g.rho(), xi_exp),
        ("rho.Y2 = Y2", &y2, g.rho(), 0),
    ] {
        let moved = regrep::apply(&g, word, v);
        let lam = ctx.realize(&Scalar::new(expect, modulus));
        println!(
            "sec5 case1b: {name}: {}",
            moved == regrep::scale(&ctx, lam, v)
        );
    }
    // x_i = tau^i Y1: sigma . x_i = xi^(w_i) x_i
    let mut xv = y1.clone();
    for i in 0..3usize {
        let moved = regrep::apply(&g, g.sigma(), &xv);
        let w_i = g.w_at(i) as i128;
        let lam = ctx.realize(&Scalar::new(xi_exp * w_i, modulus));
        println!(
            "sec5 case1b: sigma.x_{i} = xi^w_{i} x_{i}: {}",
            moved == regrep::scale(&ctx, lam, &xv)
        );
        xv = regrep::apply(&g, g.tau(), &xv);
    }
    // y_i = tau^i Y2: sigma . y_i = zeta^(k^i) y_i
    let mut yv = y2.clone();
    for i in 0..3usize {
        let moved = regrep::apply(&g, g.sigma(), &yv);
        let k_i = g.k_pow_at(i) as i128;
        let lam = ctx.realize(&Scalar::new(zeta_exp * k_i, modulus));
        println!(
            "sec5 case1b: sigma.y_{i} = zeta^(k^{i}) y_{i}: {}",
            moved == regrep::scale(&ctx, lam, &yv)
        );
        yv = regrep::apply(&g, g.tau(), &yv);
    }
    // tau cycles x_i with trivial wrap (beta = t)
    let x0 = y1.clone();
    let x_last = regrep::apply(&g, g.pow(g.tau(), 2), &y1);
    let wrapped = regrep::apply(&g, g.tau(), &x_last);
    println!("sec5 case1b: tau.x_2 = x_0: {}", wrapped == x0);
}

fn probe_sec6_boundary() {
    // p = 2 boundary alpha = beta + a - c < t: check the tau-order formula
    // p=2, a=2, c=1, beta=0, alpha=1, t=3: alpha = beta + a - c = 1 < t
    for (p, a, b, c, t, r, alpha, beta) in [
        (2u64, 2u32, 1u32, 1u32, 3u32, 1u32, 1u32, 0u32),
        (2, 2, 2, 1, 2, 1, 1, 0),
        (2, 3, 2, 2, 2, 1, 1, 0),
        (2, 2, 2, 1, 2, 1, 2, 1),
    ] {
        let params = GroupParams::nonabelian(p, a, b, c, t, r, alpha, beta, 1, 1, 1, 1, 1);
        match params {
            Ok(ps) => {
                let g = Group::new(ps);
                let cons = g.check_consistency(0);
                if !cons.passed() {
                    println!("sec6 boundary: tuple inconsistent");
                    continue;
                }
                let tau_ord = g.elem_order(g.tau());
                let shifted = beta + a - c;
                let formula = if shifted >= t || alpha < shifted {
                    2u64.pow(b + a + t - c - alpha)
                } else {
                    2u64.pow(b + t - beta)
                };
                println!(
                    "sec6 a={a} b={b} c={c} t={t} alpha={alpha} beta={beta} (boundary: {}): ord(tau) = {tau_ord}, formula = {formula}",
                    alpha == shifted && shifted < t
                );
            }
            Err(e) => println!("sec6 boundary: rejected {e}"),
        }
    }
}

// 5.case7 at p=2: G7 with a=t=2, r=2, b=2, alpha = t-1 = 1
fn probe_sec5_case7() {
    let p = centext::params::build_family(
        7,
        centext::params::FamilyFree {
            p: 2,
            a: 2,
            b: 2,
            t: 2,
            r: 2,
            alpha: 1,
            beta: 0,
            c: 2,
        },
    )
    .unwrap();
    let g = Group::new(p);
    let cons = g.check_consistency(0);
    println!("sec5 case7: consistent: {}", cons.passed());
    if !cons.passed() {
        for row in &cons.rows {
            println!("  {} {:?}", row.name, row.status);
        }
        return;
    }
    println!("sec5 case7: ord(sigma) = {} (expect 2^(a+1) = 8)", g.elem_order(g.sigma()));
}
