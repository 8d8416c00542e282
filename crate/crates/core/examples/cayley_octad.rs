//! Seven general points of P^3 determine an eighth: the base locus of the
//! net of quadrics through them.

use quartics::exact::PrimeField;
use quartics::{nets, samples};

fn main() -> quartics::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = samples::rng(42, 0);
    let seven: Vec<_> = (0..7).map(|_| samples::random_point(&f, 3, &mut rng)).collect();
    let net = nets::net_through(&f, &seven)?;
    let octad = nets::base_locus(&net)?;
    println!("base locus of the net through seven random points over F_101:");
    for (i, p) in octad.points().iter().enumerate() {
        let marker = if seven.contains(p) { "" } else { "  <- eighth point" };
        println!("  x{i} = {}{marker}", p.display(&f));
    }
    let completed = nets::complete_octad(&f, &seven)?;
    println!("complete_octad agrees: {}", completed.same_points(&octad));
    // Eight points failing to impose independent conditions on quadrics.
    println!("rank of the 8x10 Veronese matrix: {}", nets::self_association_rank(&f, octad.points()));
    let hessian = nets::hessian_quartic(&net)?;
    println!("Hessian quartic: {hessian}");
    println!("smooth (no sub-plane through four points): {}", nets::smoothness_certificate(&octad));
    Ok(())
}
