//! Straightening words of generators into the PBW basis of u(L).

use superlie::pbw::{Envelope, Straightener};
use superlie::superlie::build::from_names;

fn main() -> superlie::Result<()> {
    // Heisenberg at p = 5: e2·e1 = e1·e2 − e3.
    let heis = from_names(5, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[])?;
    let names = heis.names().to_vec();
    let mut s = Straightener::new(&heis, 1024)?;
    for word in [vec![1, 0], vec![1, 1, 0], vec![0, 0, 0, 0, 0], vec![1, 0, 1, 0]] {
        let w: Vec<&str> = word.iter().map(|&g| names[g].as_str()).collect();
        let v = s.straighten_word(&word);
        println!("{} = {}", w.join("·"), v.display_with(s.basis(), &names));
    }

    // An odd generator squares to half its self-bracket: z·z = x.
    let toral_odd = from_names(3, &["x"], &["z"], &[("z", "z", &[("x", 2)])], &[("x", &[("x", 1)])])?;
    let names = toral_odd.names().to_vec();
    let mut s = Straightener::new(&toral_odd, 1024)?;
    for word in [vec![1, 1], vec![1, 0], vec![0, 0, 0], vec![1, 1, 1]] {
        let w: Vec<&str> = word.iter().map(|&g| names[g].as_str()).collect();
        println!("{} = {}", w.join("·"), s.straighten_word(&word).display_with(s.basis(), &names));
    }

    let env = Envelope::build(&toral_odd, 1024)?;
    let assoc = env.algebra.check_associativity(64, 0, |_| 0);
    println!("dim u(L) = {}, associative: {}", env.dim(), assoc.failure.is_none());
    Ok(())
}
