//! Curves in the pencil spanned by G and Q^2 are everywhere tangent to G:
//! the resultant along a generic projection is a perfect square.

use quartics::exact::{Field, PrimeField};
use quartics::{duality, samples, Error};

fn main() -> quartics::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = samples::rng(42, 9);
    let (gamma, g) = samples::random_pencil_pair(&f, &mut rng)?;
    println!("G     = {gamma}");
    println!("G+Q^2 = {g}");
    let rep = duality::tangency_divisor(&gamma, &g, 42)?;
    println!("contact divisor of degree {} with square root {} * ({})^2", rep.delta_degree, f.to_scalar(&rep.root.c), rep.root.g);

    let other = samples::random_form(&f, 3, 4, &mut rng);
    match duality::tangency_divisor(&gamma, &other, 42) {
        Err(Error::NotEverywhereTangent(why)) => println!("a random quartic is rejected: {why}"),
        Ok(_) => println!("unexpected: a random quartic was certified"),
        Err(e) => return Err(e),
    }
    Ok(())
}
