//! The Kleshchev and Uglov realizations of the same crystal, and the
//! isomorphism φ between them.

use fock_crystal::{diff_graphs, generate_component, orders_coincide_bound, phi_table, Charge, FockContext};

fn main() -> fock_crystal::Result<()> {
    let e = 3;
    let s: Charge = "-1,0".parse()?;
    let max_rank = 4;

    let u = generate_component(&FockContext::uglov(e, s.clone())?, max_rank);
    let k = generate_component(&FockContext::kleshchev(e, s.clone())?, max_rank);
    println!(
        "rank counts: Uglov {:?}, Kleshchev {:?}",
        u.rank_counts(),
        k.rank_counts()
    );
    println!("the orders agree up to rank {}", orders_coincide_bound(&s, e)?);

    let d = diff_graphs(&u, &k, true);
    println!("first disagreement:");
    for (rank, labels) in &d.vertices_only_left {
        println!("  rank {rank}, Uglov only: {}", labels.join(" "));
    }
    for (rank, labels) in &d.vertices_only_right {
        println!("  rank {rank}, Kleshchev only: {}", labels.join(" "));
    }

    let phi = phi_table(&s, e, max_rank)?;
    let mut moved: Vec<_> = phi.iter().filter(|(a, b)| a != b).collect();
    moved.sort_by_key(|(a, _)| (a.rank(), a.canonical()));
    println!("φ moves {} of {} vertices:", moved.len(), phi.len());
    for (a, b) in moved {
        println!("  {} ↦ {}", a.display_text(), b.display_text());
    }
    Ok(())
}
