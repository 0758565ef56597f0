//! One line per acceptance criterion at full scale.

use rectlab::verify::{run_all, VerifyConfig};

#[test]
fn acceptance() {
    let reports = run_all(&VerifyConfig::default());
    for r in &reports {
        println!("{}", r.line());
        for note in &r.notes {
            println!("        {note}");
        }
        for f in &r.failures {
            println!("        {f}");
        }
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
    println!("{} of {} criteria pass", reports.len() - failed.len(), reports.len());
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
