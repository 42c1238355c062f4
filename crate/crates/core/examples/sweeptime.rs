// scratch: time the acceptance sweeps piecewise
use std::time::Instant;
fn main() {
    let which: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let t0 = Instant::now();
    match which {
        1 => {
            let s = centext::suite::engine_soundness_sweep(2, 512, 42);
            println!("AC1 p=2: total {} consistent {} fails {}", s.total, s.consistent, s.failures.len());
        }
        2 => {
            let s = centext::suite::engine_soundness_sweep(3, 729, 42);
            println!("AC1 p=3: total {} consistent {} fails {}", s.total, s.consistent, s.failures.len());
        }
        3 => {
            let s = centext::suite::iso_sweeps(2, 729, 42);
            println!("AC3 p=2: total {} consistent {} fails {}", s.total, s.consistent, s.failures.len());
            for f in s.failures.iter().take(3) { println!("  FAIL {f}"); }
        }
        4 => {
            let s = centext::suite::iso_sweeps(3, 729, 42);
            println!("AC3 p=3: total {} consistent {} fails {}", s.total, s.consistent, s.failures.len());
            for f in s.failures.iter().take(3) { println!("  FAIL {f}"); }
        }
        5 => {
            let a = centext::suite::prop33_sweep(2, 512, 42);
            let b = centext::suite::prop33_sweep(3, 729, 42);
            println!("AC2: consistent {} {} fails {} {}", a.consistent, b.consistent, a.failures.len(), b.failures.len());
            for f in a.failures.iter().chain(b.failures.iter()).take(3) { println!("  FAIL {f}"); }
        }
        6 => {
            let a = centext::suite::order_formula_sweep(2, 512, 42);
            let b = centext::suite::order_formula_sweep(3, 729, 42);
            println!("AC4: fails {} {}", a.failures.len(), b.failures.len());
            for f in a.failures.iter().chain(b.failures.iter()).take(3) { println!("  FAIL {f}"); }
        }
        7 => {
            let a = centext::suite::center_sweep(2, 512, 42);
            let b = centext::suite::center_sweep(3, 729, 42);
            println!("AC5: fails {} {}", a.failures.len(), b.failures.len());
        }
        _ => {
            let m = centext::suite::thm26_sweep(729, 42);
            println!("AC6: total {} consistent {} fails {}", m.total, m.consistent, m.failures.len());
            for f in m.failures.iter().take(3) { println!("  FAIL {f}"); }
        }
    }
    println!("elapsed {:?}", t0.elapsed());
}
