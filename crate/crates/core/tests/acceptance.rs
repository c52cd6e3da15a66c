use std::time::Instant;

use cyclic_ag::selftest::CRITERIA;

#[test]
fn acceptance() {
    let mut failed = Vec::new();
    for (id, run) in CRITERIA {
        let start = Instant::now();
        let result = run();
        println!("{result} [{:.1?}]", start.elapsed());
        if !result.passed {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
