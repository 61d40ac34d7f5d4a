//! Renders the Kleshchev crystal as Graphviz, with the vertices where it
//! departs from the Uglov crystal in bold, and writes both graphs as JSON.
//!
//! `cargo run --example diff_dot > kleshchev.dot && dot -Tsvg kleshchev.dot`

use fock_crystal::fixtures;
use fock_crystal::io::{to_dot, DotOptions, GraphDocument, Metadata};
use fock_crystal::{diff_graphs, Realization};

fn main() -> fock_crystal::Result<()> {
    let u = fixtures::crystal(Realization::Uglov);
    let k = fixtures::crystal(Realization::Kleshchev);
    let options = DotOptions {
        show_colors: true,
        bold_diff: Some(diff_graphs(&u, &k, true)),
    };
    print!("{}", to_dot(&k, &options));

    let dir = std::env::temp_dir();
    for (name, g, r) in [
        ("uglov", &u, Realization::Uglov),
        ("kleshchev", &k, Realization::Kleshchev),
    ] {
        let doc = GraphDocument::from_crystal(g, Metadata::for_context(&fixtures::context(r), fixtures::MAX_RANK));
        let path = dir.join(format!("{name}.json"));
        std::fs::write(&path, doc.to_json()).expect("writable temp dir");
        eprintln!("wrote {}", path.display());
    }
    Ok(())
}
