//! Cores, 2-quotients and the twist, on partitions read from the command line.
//!
//! `cargo run --example core_quotient -- 4.2 5.1 3^2`

use fock_crystal::{beta_set, core, is_e_core, n_function, twisted_two_quotient, two_core, two_quotient, Partition};

fn main() -> fock_crystal::Result<()> {
    let mut inputs: Vec<String> = std::env::args().skip(1).collect();
    if inputs.is_empty() {
        inputs = ["3", "4.2", "2^2.1^2", "5.1", "2.1^3"].map(String::from).to_vec();
    }
    for input in inputs {
        let p: Partition = input.parse()?;
        let beads = p.len() + p.len() % 2;
        let c = two_core(&p);
        println!("{}", p.display_text());
        println!("  β-numbers ({beads} beads): {:?}", beta_set(&p, beads)?.entries());
        println!("  2-core Δ_{} = {}", c.t(), c.partition().display_text());
        println!(
            "  2-quotient {}, twisted {}",
            two_quotient(&p),
            twisted_two_quotient(&p)
        );
        println!(
            "  3-core {}, is a 3-core: {}",
            core(&p, 3)?.display_text(),
            is_e_core(&p, 3)?
        );
        println!("  n = {}", n_function(&p));
    }
    Ok(())
}
