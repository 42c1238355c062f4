// scratch: profile phases of the p=2 consistency sweep
use std::time::{Duration, Instant};
fn main() {
    let tuples = centext::suite::canonical_tuples(2, 512);
    let mut t_rel = Duration::ZERO;
    let mut t_table = Duration::ZERO;
    let mut t_full = Duration::ZERO;
    let mut reached = 0;
    for params in tuples {
        let g = centext::Group::new(params);
        let t0 = Instant::now();
        let rep = g.check_consistency(42);
        t_full += t0.elapsed();
        let relations_ok = rep.rows.iter().take(7).all(|r| r.status == centext::Status::Pass);
        if relations_ok {
            reached += 1;
            let t1 = Instant::now();
            let _tbl = g.multiplication_table();
            t_table += t1.elapsed();
        } else {
            t_rel += t0.elapsed();
        }
    }
    println!("full sweep {t_full:?}; relations-only tuples {t_rel:?}; {reached} reach table; table build alone {t_table:?}");
}
