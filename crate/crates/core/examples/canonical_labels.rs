//! graph6 round trips and canonical ids: relabelled copies of a graph share
//! one id.
//!
//!     cargo run --example canonical_labels

use toughlab::{graph6, Graph};

fn main() -> toughlab::Result<()> {
    let pet = Graph::petersen();
    let text = graph6::encode(&pet);
    assert_eq!(graph6::decode(&text)?, pet);
    println!("Petersen: {text}, canonical {}", graph6::canonical_id(&pet));

    let shuffled = pet.permuted(&[3, 7, 1, 9, 0, 5, 2, 8, 6, 4]);
    println!(
        "relabelled: {}, canonical {}",
        graph6::encode(&shuffled),
        graph6::canonical_id(&shuffled)
    );
    assert_eq!(graph6::canonical_id(&pet), graph6::canonical_id(&shuffled));

    // The header is accepted on input and never written.
    let c5 = graph6::decode(">>graph6<<Dhc")?;
    println!("C5 from header form: {}", graph6::encode(&c5));
    Ok(())
}
