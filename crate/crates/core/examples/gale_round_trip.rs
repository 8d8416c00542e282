//! Seven plane points determine a Cayley octad; projecting the octad from
//! its eighth point returns the heptad up to a projectivity.

use quartics::exact::{projective, PrimeField};
use quartics::{nets, samples, Error};

fn main() -> quartics::Result<()> {
    let f = PrimeField::new(101)?;
    let mut rng = samples::rng(42, 6);
    let mut shown = 0;
    while shown < 5 {
        let heptad: Vec<_> = (0..7).map(|_| samples::random_point(&f, 2, &mut rng)).collect();
        let octad = match nets::octad_from_plane(&f, &heptad) {
            Ok(o) => o,
            Err(Error::DegenerateConfiguration(why)) => {
                println!("skipping degenerate heptad: {why}");
                continue;
            }
            Err(e) => return Err(e),
        };
        let back = nets::project_octad(&octad, 7)?;
        let equivalent = projective::projective_equivalence(&f, &heptad, &back).is_some();
        let pts: Vec<String> = heptad.iter().map(|p| p.display(&f).to_string()).collect();
        println!("{}  -> round trip {}", pts.join(" "), if equivalent { "ok" } else { "FAILED" });
        shown += 1;
    }
    Ok(())
}
