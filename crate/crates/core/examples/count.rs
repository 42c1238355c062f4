use std::time::Instant;
fn main() {
    for (p, max) in [(2u64, 512u64), (3, 729)] {
        let tuples = centext::suite::canonical_tuples(p, max);
        let mut by_order = std::collections::BTreeMap::new();
        for t in &tuples {
            *by_order.entry(t.order()).or_insert(0usize) += 1;
        }
        println!("p={p}: {} tuples, by order {:?}", tuples.len(), by_order);
        // time one order-512 consistency check
        if p == 2 {
            let big: Vec<_> = tuples.iter().filter(|t| t.order() == 512).take(3).collect();
            for params in big {
                let g = centext::Group::new(*params);
                let t0 = Instant::now();
                let rep = g.check_consistency(42);
                println!("  512-check {} in {:?}", rep.passed(), t0.elapsed());
            }
            // count consistent among order 512 (sampled quickly by relations only? just count all)
        }
    }
}
