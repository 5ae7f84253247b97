//! A short randomized self-test run with a per-family summary.

use std::collections::BTreeMap;

use jonquieres::cli::{cmd_selftest, Options};

fn main() -> jonquieres::Result<()> {
    let report = cmd_selftest(11, 10, None, &Options::default())?;
    let mut per_family: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for (key, verdict) in report.verdicts() {
        let case = key.split('.').nth(1).unwrap_or("");
        let family = report
            .get(&format!("selftest.{case}.family"))
            .unwrap_or("?")
            .to_string();
        let entry = per_family.entry(family).or_default();
        entry.0 += usize::from(verdict.holds());
        entry.1 += usize::from(verdict.is_failure());
    }
    for (family, (held, failed)) in per_family {
        println!("{family:<12} holds {held:>4}  fails {failed}");
    }
    Ok(())
}
