//! Uglov crystal membership without building the crystal, via the FLOTW
//! conditions, checked against the generated component.

use fock_crystal::{bipartitions_of, generate_component, is_flotw, Charge, FockContext};

fn main() -> fock_crystal::Result<()> {
    let e = 4;
    let s = Charge::new(vec![0, 2])?;
    let ctx = FockContext::uglov(e, s.clone())?;
    let g = generate_component(&ctx, 5);
    println!("e = {e}, charge {s}");
    for n in 0..=5 {
        let all = bipartitions_of(n);
        let mut members = Vec::new();
        for b in &all {
            let m = b.to_multipartition();
            if is_flotw(&m, &ctx)? {
                assert!(g.id_of(&m).is_some(), "{b} passes the test but is not in the crystal");
                members.push(b.to_string());
            }
        }
        println!(
            "  rank {n}: {} of {} bipartitions: {}",
            members.len(),
            all.len(),
            members.join(" ")
        );
    }
    Ok(())
}
