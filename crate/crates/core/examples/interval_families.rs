//! Interval families on [1,d], the dual family and the cyclic complement.

use cubical_toric::ncpart::{enumerate_families, IntervalFamily};

fn main() -> cubical_toric::Result<()> {
    let s = IntervalFamily::parse(6, "{[2,3],[4],[6,1]}")?;
    println!(
        "S = {s}: {} intervals, {} uncovered",
        s.interval_count(),
        s.uncovered_count()
    );
    println!("S' = {}", s.beta());
    println!("[1,6] - S = {}", s.complement());
    println!("dual of {{}} = {}", IntervalFamily::empty(6).beta());

    println!("\nfamilies on [1,3]:");
    for f in enumerate_families(3, 8)? {
        println!("  {f:<16} <-> {}", f.beta());
    }
    Ok(())
}
