fn main() {
    let mut anchors = std::collections::BTreeSet::new();
    for sc in centext::catalog::all_scenarios() {
        for step in &sc.steps {
            for a in &step.anchors {
                for part in a.split(',') {
                    anchors.insert(part.to_string());
                }
            }
        }
    }
    for a in &anchors {
        println!("{a}");
    }
    eprintln!("total: {}", anchors.len());
}
