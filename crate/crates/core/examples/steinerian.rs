//! Steinerian points: the singular points of the rank-3 quadrics at the
//! contact points of a bitangent lie on the corresponding chord of the octad.

use quartics::exact::PrimeField;
use quartics::{nets, samples};

fn main() -> quartics::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = samples::rng(42, 2);
    let (net, octad, _) = samples::random_smooth_octad(&f, &mut rng);
    let mut on_chord = 0;
    for i in 0..8 {
        for j in i + 1..8 {
            let ok = nets::steinerian_secant_check(&net, &octad, i, j)?;
            on_chord += ok as usize;
            println!("chord x{i}x{j}: Steinerian images collinear with it: {ok}");
        }
    }
    println!("{on_chord}/28 chords pass");
    Ok(())
}
