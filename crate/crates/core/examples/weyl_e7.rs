//! W(E7) acting on the 56 exceptional lines: group orders, the reflection
//! rule table and the degree-72 fiber of the map to Hessians.

use quartics::samples;
use quartics::weyl::{self, LedgerMarking, LineLabel, RootLabel, WeylElement};

fn main() -> quartics::Result<()> {
    println!("positive roots: {}", weyl::positive_roots().len());
    println!("lines: {}", weyl::lines().len());
    println!("|W(E7)| = {}", weyl::weyl_order());
    println!("[W(E7) : S8] = {}", weyl::sym8_index()?);
    println!("center has {} elements", weyl::center_elements().len());

    let alpha = weyl::root_vector(RootLabel::Triple(1, 2, 3));
    for line in [LineLabel::L(4, 5), LineLabel::L(1, 4), LineLabel::L(1, 8)] {
        let image = weyl::reflect(&alpha, &weyl::line_vector(line))?;
        println!("s_123({line:?}) = {:?}", weyl::line_label_of(&image));
    }
    println!("rule table agrees with the lattice: {}", weyl::rule_table_crosscheck());

    let mut rng = samples::rng(42, 4);
    let marking = LedgerMarking::random(&mut rng, 40);
    let fiber = weyl::hessian_fiber(&marking);
    let partner = marking.transformed(&WeylElement::w0()).canonical_form();
    let has_partner = fiber.iter().any(|m| m.canonical_form() == partner);
    println!("fiber through a random marking: {} classes, w0 partner present: {has_partner}", fiber.len());
    Ok(())
}
