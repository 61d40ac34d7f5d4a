//! Connected component of the level-2 Fock space crystal through the empty
//! bipartition, printed rank by rank.
//!
//! `cargo run --example crystal_graph -- [e] [charge] [max_rank]`

use fock_crystal::{generate_component, Charge, FockContext};

fn main() -> fock_crystal::Result<()> {
    let mut args = std::env::args().skip(1);
    let e: usize = args.next().map_or(Ok(3), |a| a.parse()).expect("e must be an integer");
    let charge: Charge = args.next().as_deref().unwrap_or("-1,0").parse()?;
    let max_rank: usize = args
        .next()
        .map_or(Ok(4), |a| a.parse())
        .expect("max_rank must be an integer");

    let ctx = FockContext::uglov(e, charge.clone())?;
    let g = generate_component(&ctx, max_rank);
    println!("Uglov crystal, e = {e}, charge {charge}, rank ≤ {max_rank}");
    for rank in 0..=max_rank {
        let labels: Vec<String> = g
            .vertices()
            .iter()
            .filter(|v| v.rank() == rank)
            .map(|v| v.display_text())
            .collect();
        println!("  {rank}: {}", labels.join("  "));
    }
    println!("{} vertices, {} arrows", g.vertices().len(), g.edges().len());

    let m = g.vertices().last().expect("component is non-empty");
    let word = ctx.path_from_empty(m).expect("vertex of the component");
    println!("{} = f̃ word {:?} applied to ∅|∅", m.display_text(), word);
    Ok(())
}
