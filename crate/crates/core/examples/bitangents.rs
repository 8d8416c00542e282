//! The 28 bitangents of a Hessian plane quartic, one for each chord of the
//! Cayley octad, each certified by a perfect-square restriction.

use quartics::exact::{Field, PrimeField};
use quartics::{nets, samples};

fn main() -> quartics::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = samples::rng(42, 1);
    let (net, octad, _) = samples::random_smooth_octad(&f, &mut rng);
    let hessian = nets::hessian_quartic(&net)?;
    println!("Hessian: {hessian}");
    let ext = f.extension().expect("prime fields have a quadratic extension");
    for i in 0..8 {
        for j in i + 1..8 {
            let (line, cert) = nets::bitangent_with_hessian(&net, &hessian, &octad, i, j)?;
            let contacts: Vec<String> = cert
                .contacts
                .iter()
                .flatten()
                .map(|p| p.display(&ext).to_string())
                .collect();
            println!("x{i}x{j}: line {}  H|line = {} * ({})^2  contacts {}", line.display(&f), f.to_scalar(&cert.root.c), cert.root.g, contacts.join(" "));
        }
    }
    Ok(())
}
