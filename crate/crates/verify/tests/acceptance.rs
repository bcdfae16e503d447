//! Runs every acceptance criterion, printing one line each; exits nonzero
//! if any fails.

fn main() {
    let filter = std::env::args().skip(1).find(|a| !a.starts_with('-'));
    let reports = topokit_verify::acceptance::run(filter.as_deref());
    for r in &reports {
        println!("{r}");
    }
    let failed: Vec<usize> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    println!("acceptance: {} passed, {} failed", reports.len() - failed.len(), failed.len());
    if !failed.is_empty() {
        eprintln!("failing criteria: {failed:?}");
        std::process::exit(1);
    }
}
