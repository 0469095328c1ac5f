//! Searching for a codimension-≤1 subspace M of L1 with (M, L1) p-nilpotent.

use superlie::classify::{find_witness_m, witness_candidates, WitnessSearch};
use superlie::superlie::build::from_names;
use superlie::LieSuperData;

fn report(name: &str, l: &LieSuperData) {
    let candidates = witness_candidates(l).map(|c| c.len()).unwrap_or(0);
    match find_witness_m(l, true, 6561) {
        WitnessSearch::Found { witness, .. } => println!(
            "{name}: M = span{{{}}} (codim {}, candidate {} of {candidates})",
            witness.display.join(", "),
            witness.codim,
            witness.candidate
        ),
        WitnessSearch::NoneExists { candidates } => println!("{name}: no witness among {candidates} candidates"),
        WitnessSearch::Inconclusive { cause, .. } => println!("{name}: inconclusive ({cause})"),
    }
}

fn main() -> superlie::Result<()> {
    // (z,z) = x toral: M = 0 works, since (0, L1) = 0.
    let toral_odd = from_names(3, &["x"], &["z"], &[("z", "z", &[("x", 1)])], &[("x", &[("x", 1)])])?;
    report("toral_odd", &toral_odd);

    // (a,a) = (b,b) = x toral: every hyperplane line y has (y,y) ≠ 0 and
    // (y, L1) ∋ x, so no M exists.
    let clifford = from_names(
        3,
        &["x"],
        &["a", "b"],
        &[("a", "a", &[("x", 1)]), ("b", "b", &[("x", 1)])],
        &[("x", &[("x", 1)])],
    )?;
    report("clifford", &clifford);

    // (a,a) = x, (b,b) = 0: M = span{b}.
    let degenerate = from_names(3, &["x"], &["a", "b"], &[("a", "a", &[("x", 1)])], &[("x", &[("x", 1)])])?;
    report("degenerate_clifford", &degenerate);
    Ok(())
}
