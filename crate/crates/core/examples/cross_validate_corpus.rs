//! Cross-validates the builtin corpus: structural conditions on L against
//! direct computation in u(L), for all four properties.

use superlie::corpus::{builtin_sources, render_text, run_corpus};
use superlie::Caps;

fn main() -> superlie::Result<()> {
    let sources: Vec<(String, String)> = builtin_sources()
        .iter()
        .map(|(n, t)| (format!("{n}.json"), t.to_string()))
        .collect();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = run_corpus(&sources, Caps::from_env(), jobs)?;
    print!("{}", render_text(&report, false));
    if let Some(t) = &report.timing {
        let total: f64 = t.seconds.values().sum();
        println!("total analysis time {total:.2}s on {jobs} threads");
    }
    std::process::exit(report.exit_code());
}
