//! The class bound γ_μ(R) = 0 for μ(c, d) = 2cd − c − d + 2, where I is a
//! nilpotent ideal with I^{c+1} = 0 and R/I² has Lie class d.

use superlie::pbw::Envelope;
use superlie::series::{check_mu_bound, commutator_ideal, mu, MuBound};
use superlie::superlie::build::from_names;

fn main() -> superlie::Result<()> {
    println!("mu(1, d) = d + 1: {:?}", (1..6).map(|d| mu(1, d)).collect::<Vec<_>>());
    let heis = from_names(3, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[])?;
    let env = Envelope::build(&heis, 1024)?;
    let r = &env.algebra;
    for (name, ideal) in [("omega", env.augmentation_ideal()), ("[R,R]R", commutator_ideal(r))] {
        match check_mu_bound(r, &ideal, None)? {
            MuBound::Checked(m) => println!(
                "{name}: dim {}, c = {}, d = {}, mu = {}, actual class {:?}, holds = {}",
                m.ideal_dim, m.c, m.d, m.mu, m.actual_class, m.holds
            ),
            MuBound::NotApplicable { reason } => println!("{name}: {reason}"),
        }
    }
    Ok(())
}
