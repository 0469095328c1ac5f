//! Axiom checking: a valid algebra, then the same algebra with one
//! structure constant disturbed.

use superlie::superlie::build::from_names;
use superlie::superlie::verify_axioms;

fn main() -> superlie::Result<()> {
    // Heisenberg at p = 3 with the zero p-map.
    let heis = from_names(3, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[])?;
    let report = verify_axioms(&heis, 6561);
    println!("heisenberg: passed = {}, fully verified = {}", report.passed(), report.fully_verified());

    // (e1, e3) = e1 breaks Jacobi: the cyclic sum on (e1, e2, e3) is e3.
    let broken = from_names(
        3,
        &["e1", "e2", "e3"],
        &[],
        &[("e1", "e2", &[("e3", 1)]), ("e1", "e3", &[("e1", 1)])],
        &[],
    )?;
    let report = verify_axioms(&broken, 6561);
    match report.first_failure() {
        Some(f) => println!("broken: {f}"),
        None => println!("broken: unexpectedly passed"),
    }

    // A toral p-map on a non-central element is inconsistent with ad.
    let bad_pmap = from_names(3, &["h", "e"], &[], &[("h", "e", &[("e", 1)])], &[("e", &[("h", 1)])])?;
    for f in &verify_axioms(&bad_pmap, 6561).failures {
        println!("bad p-map: {f}");
    }
    Ok(())
}
