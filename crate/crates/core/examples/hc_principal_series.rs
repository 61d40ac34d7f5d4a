//! A Harish-Chandra series of unipotent modules of a finite unitary group,
//! labelled by partitions with 2-core Δ_s, arranged as an Uglov crystal.
//!
//! `cargo run --example hc_principal_series -- [s] [e] [max_rank]`

use fock_crystal::{build_hc_graph, hecke_parameters, SeriesParams};

fn main() -> fock_crystal::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("integer argument"));
    let s = args.next().unwrap_or(0);
    let e = args.next().unwrap_or(3);
    let max_rank = args.next().unwrap_or(3);

    let params = SeriesParams::new(s, e)?;
    let hecke = hecke_parameters(s);
    println!("series s = {s}, e = {e}, charge {}", params.charge());
    println!("Hecke parameters {hecke}; as Ariki-Koike: {}", hecke.ariki_koike());

    let g = build_hc_graph(&params, max_rank)?;
    for v in g.vertices() {
        println!(
            "  r = {:2}  {:10} {}",
            v.group_degree,
            v.label.display_text(),
            v.bipartition
        );
    }
    for (a, b, color) in g.labeled_edges() {
        println!("  {} -> {} [{color}]", a.label.display_text(), b.label.display_text());
    }
    Ok(())
}
