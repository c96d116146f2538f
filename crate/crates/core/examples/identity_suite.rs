// Running a batch of checks in parallel and collecting JSON records.

use qplane::identities::battery;
use qplane::{run_suite, IdentityId};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let mut config = battery(4, 3);
    // invalid parameters become failed reports, not panics
    config.push((IdentityId::Coeff5, vec![-1, 2]));
    let reports = run_suite(&config);
    for report in &reports {
        println!("{report}");
    }
    let failed: Vec<_> = reports.iter().filter(|r| !r.holds).collect();
    assert_eq!(failed.len(), 1);
    assert!(failed[0].error.is_some());

    let records: Vec<_> = reports.iter().take(2).map(|r| r.record()).collect();
    println!("{}", serde_json::to_string_pretty(&records)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
