//! The p-map on arbitrary even elements, including the correction terms of
//! the non-additive extension, on sl2 over GF(3).

use superlie::superlie::build::from_names;
use superlie::superlie::PMapClosure;

fn main() -> superlie::Result<()> {
    // (h,e) = 2e, (h,f) = -2f, (e,f) = h; h toral, e and f p-nilpotent.
    let sl2 = from_names(
        3,
        &["h", "e", "f"],
        &[],
        &[("h", "e", &[("e", 2)]), ("h", "f", &[("f", -2)]), ("e", "f", &[("h", 1)])],
        &[("h", &[("h", 1)])],
    )?;
    let closure = PMapClosure::new(&sl2);
    let samples: [&[u32]; 5] = [&[1, 0, 0], &[0, 1, 0], &[0, 1, 1], &[1, 1, 0], &[2, 1, 1]];
    for x in samples {
        let y = closure.power(x);
        println!("({})^[p] = {}", sl2.format_element(x), sl2.format_element(&y));
    }
    // e + f is semisimple: its p-power orbit never reaches zero.
    let ef = [0, 1, 1];
    for k in 1..=3 {
        println!("(e+f)^[p^{k}] = {}", sl2.format_element(&closure.iterate(&ef, k)));
    }
    Ok(())
}
