//! Symbols of bipartitions, the a-function and the inverse map Φ_t.

use fock_crystal::{a_function, bipartitions_of, n_function, phi_t, symbol, Bipartition};

fn show(b: &Bipartition, t: usize) -> fock_crystal::Result<()> {
    let sym = symbol(b, t, fock_crystal::symbol::minimal_width(b))?;
    let row = |v: &[fock_crystal::HalfInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let lambda = phi_t(b, t)?;
    println!("{b}, t = {t}");
    println!("  κ  = {}", row(sym.kappa()));
    println!("  κ⁰ = {}", row(sym.kappa0()));
    println!(
        "  a = {}, Φ_t = {}, n(Φ_t) = {}",
        a_function(b, t),
        lambda.display_text(),
        n_function(&lambda)
    );
    Ok(())
}

fn main() -> fock_crystal::Result<()> {
    for (text, t) in [("1|1^2", 0), ("-|3", 0), ("1|-", 1), ("-|-", 2), ("2|1", 2)] {
        show(&text.parse()?, t)?;
    }

    println!("\nbipartitions of 3 at t = 0, by a-value:");
    let mut all = bipartitions_of(3);
    all.sort_by_key(|b| a_function(b, 0));
    for b in all {
        println!("  a = {:2}  {b}", a_function(&b, 0));
    }
    Ok(())
}
