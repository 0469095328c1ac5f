//! The augmentation ideal of a Grassmann algebra is nil: every element
//! cubes to zero when p = 3 and there are three generators.

use superlie::pbw::Envelope;
use superlie::series::{gamma_series, nil_index_exact, NilIndex};
use superlie::superlie::build::from_names;

fn main() -> superlie::Result<()> {
    // n1 = 4 would mean 3^15 elements; the enumeration stays exact but slow.
    for n1 in 1..=3 {
        let odd: Vec<String> = (1..=n1).map(|i| format!("f{i}")).collect();
        let refs: Vec<&str> = odd.iter().map(String::as_str).collect();
        let l = from_names(3, &[], &refs, &[], &[])?;
        let env = Envelope::build(&l, 1024)?;
        let omega = env.augmentation_ideal();
        let nil = match nil_index_exact(&env.algebra, &omega, 1 << 20)? {
            NilIndex::Index { e, elements } => format!("x^{e} = 0 on all {elements} elements"),
            NilIndex::NotNil { .. } => "not nil".into(),
        };
        let gamma = gamma_series(&env.algebra);
        println!(
            "n1 = {n1}: dim {:>2}, {nil}; gamma dims {:?} (Lie class {:?})",
            env.dim(),
            gamma.dims,
            gamma.class_or_length
        );
    }
    Ok(())
}
