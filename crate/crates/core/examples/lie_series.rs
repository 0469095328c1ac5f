//! Lower central, derived and super lower central series of u(L).

use superlie::corpus::{builtin_corpus, AlgebraFile};
use superlie::pbw::Envelope;
use superlie::series::{series, SeriesKind};

fn main() -> superlie::Result<()> {
    let wanted = ["heisenberg3", "weight_vector", "borel2", "clifford_obstruction", "sl2_p3"];
    let files: Vec<AlgebraFile> = builtin_corpus()
        .into_iter()
        .filter(|f| f.name.as_deref().is_some_and(|n| wanted.contains(&n)))
        .collect();
    for f in files {
        let l = f.to_lie()?;
        let env = Envelope::build(&l, 1024)?;
        println!("{} (dim u(L) = {})", f.name.unwrap(), env.dim());
        for kind in [SeriesKind::Gamma, SeriesKind::Delta, SeriesKind::GammaSuper] {
            let r = series(&env.algebra, kind, None)?;
            let end = match (r.class_or_length, r.stabilized) {
                (Some(c), _) => format!("zero at index {c}"),
                (None, true) => "stabilizes above zero".into(),
                (None, false) => "undetermined".into(),
            };
            println!("  {kind:<6} {:?}  {end}", r.dims);
        }
    }
    Ok(())
}
