//! The invariant suite over every cyclic group up to a given order.
//!
//! cargo run --release --example sweep -- 30

use std::collections::BTreeMap;

use ghilb::chamber::ChamberConfig;
use ghilb::check::{check_group, sweep_groups};

fn main() -> ghilb::Result<()> {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let mut total: BTreeMap<&str, usize> = BTreeMap::new();
    let mut failed = 0;
    let groups = sweep_groups(max)?;
    for g in &groups {
        let rep = check_group(g, &ChamberConfig::default())?;
        for v in &rep.violations {
            failed += 1;
            println!("{g}: {}: {}", v.invariant, v.detail);
        }
        for (k, n) in rep.checked {
            *total.entry(k).or_default() += n;
        }
    }
    for (k, n) in &total {
        println!("{k:<36} {n:>7}");
    }
    println!("{} groups, {failed} violations", groups.len());
    Ok(())
}
