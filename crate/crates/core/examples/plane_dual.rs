//! The dual of a smooth plane quartic has degree 12, found by interpolating
//! the images of the polar map with increasing degree.

use quartics::exact::PrimeField;
use quartics::{duality, samples};

fn main() -> quartics::Result<()> {
    let f = PrimeField::new(499)?;
    let mut rng = samples::rng(42, 8);
    let h = samples::random_smooth_plane_quartic(&f, &mut rng)?;
    println!("quartic over F_499: {}", h.form());
    let fit = duality::dual_interpolate(&h, 12, 600, 42)?;
    for w in &fit.witness {
        println!("degree {:>2}: {} monomials, rank {}", w.degree, w.monomials, w.rank);
    }
    println!("dual degree {} with {} terms", fit.degree, fit.dual.num_terms());
    Ok(())
}
