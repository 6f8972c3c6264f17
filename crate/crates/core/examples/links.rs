// Links of faces in `Δ(n)` are copies of `Δ(n - 2m)`.

use tricm::complexes::link_target_complex;
use tricm::{link, link_triangular_witness, triangular_complex, f_vector};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 8;
    let delta = triangular_complex(n);
    let mut checked = 0;
    for face in delta.iter_faces() {
        let lk = link(&delta, face)?;
        let map = link_triangular_witness(n, face)?;
        let target = link_target_complex(n - 2 * face.len());
        let moved = lk.relabeled(&map, target.vertex_count())?;
        assert_eq!(moved, target);
        checked += 1;
    }
    println!("all {checked} links in Δ({n}) match Δ({n} - 2|F|)");

    // one vertex of Δ(7): its link looks like Δ(5)
    let d7 = triangular_complex(7);
    let lk = link(&d7, &[0])?;
    println!("f(lk_Δ(7)((1 2))) = {}", f_vector(&lk)?);

    // a facet has the link {∅}
    let facet = d7.facets().pop().unwrap();
    let top = link(&d7, &facet)?;
    assert_eq!(top.dim(), -1);
    assert!(!top.is_void());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run_example() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
