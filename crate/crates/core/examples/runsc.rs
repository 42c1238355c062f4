// scratch: run catalog scenarios and print row status
fn main() {
    let filter = std::env::args().nth(1).unwrap_or_default();
    for sc in centext::catalog::all_scenarios() {
        if !sc.id.contains(&filter) {
            continue;
        }
        let out = centext::scenario::run_scenario(&sc, 12345);
        let (pass, fail, amb) = out.report.counts();
        println!("== {} : pass {pass} fail {fail} amb {amb} halted {:?}", sc.id, out.halted_at);
        if fail > 0 {
            for r in &out.report.rows {
                if r.status == centext::Status::Fail {
                    println!("   FAIL {} :: {}", r.name, r.witness.clone().unwrap_or_default());
                }
            }
        }
    }
}
