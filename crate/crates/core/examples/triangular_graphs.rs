// Triangular graphs, their independent sets and vertex covers.
//
// `cargo run --example triangular_graphs`

use tricm::graphs::is_vertex_cover;
use tricm::{
    complement, independence_number, is_unmixed, maximal_independent_sets,
    minimal_vertex_covers, triangular, triangular_recursive, VertexPairLabel,
};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let t5 = triangular(5)?;
    println!("T_5 has {} vertices and {} edges", t5.vertex_count(), t5.edge_count());

    // vertex (1 2) touches every pair sharing 1 or 2
    let v = VertexPairLabel::new(1, 2)?.index(5);
    let nbrs: Vec<String> = t5.neighbors(v).iter().map(|u| t5.label(u)).collect();
    println!("neighbors of {}: {}", t5.label(v), nbrs.join(" "));
    assert_eq!(t5.degree(v), 6);

    // built by adding one symbol at a time
    assert_eq!(triangular_recursive(5)?, t5);

    // the complement of T_5 is the Petersen graph: 3-regular, 15 edges
    let petersen = complement(&t5);
    assert_eq!(petersen.edge_count(), 15);
    assert!((0..10).all(|u| petersen.degree(u) == 3));

    for n in 2..=10 {
        let g = triangular(n)?;
        let sets = maximal_independent_sets(&g);
        println!(
            "T_{n}: alpha = {}, {} maximal independent sets, unmixed = {}",
            independence_number(&g),
            sets.len(),
            is_unmixed(&g)
        );
        assert!(sets.iter().all(|s| s.len() == n / 2));
    }

    let t4 = triangular(4)?;
    let covers = minimal_vertex_covers(&t4);
    for c in &covers {
        let names: Vec<String> = c.iter().map(|&u| t4.label(u)).collect();
        println!("minimal cover of T_4: {}", names.join(" "));
        assert!(is_vertex_cover(&t4, c));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
