//! Quotients of u(L) by two-sided ideals, e.g. u(L)/ω².

use superlie::pbw::Envelope;
use superlie::series::{gamma_series, ideal_square};
use superlie::superlie::build::from_names;

fn main() -> superlie::Result<()> {
    let heis = from_names(3, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[])?;
    let env = Envelope::build(&heis, 1024)?;
    let omega = env.augmentation_ideal();
    let sq = ideal_square(&env.algebra, &omega);
    let q = env.algebra.quotient(&sq)?;
    println!(
        "u(L) dim {}, omega^2 dim {}, quotient dim {}, commutative: {}",
        env.dim(),
        sq.dim(),
        q.algebra.dim(),
        q.algebra.is_commutative()
    );
    let kept: Vec<&str> = q.kept.iter().map(|&i| env.algebra.labels()[i].as_str()).collect();
    println!("quotient basis: {}", kept.join(", "));
    println!("gamma of quotient: {:?}", gamma_series(&q.algebra).dims);
    Ok(())
}
