//! Running the invariant suites from code.

use cubical_toric::verify::{run_suite, Suite, VerifyConfig};

fn main() -> cubical_toric::Result<()> {
    let config = VerifyConfig {
        max_d: Some(6),
        ..VerifyConfig::default()
    };
    for suite in Suite::EACH {
        let report = run_suite(suite, &config)?;
        println!(
            "{:<17} {:>8} checks  {} failures  {:.3}s",
            report.suite,
            report.checks,
            report.failures.len(),
            report.wall_time.as_secs_f64()
        );
    }
    Ok(())
}
