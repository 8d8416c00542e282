//! A 16-nodal Heisenberg-invariant quartic surface and its dual.
//!
//! Scans the family over F_11 for members with 16 nodes, builds a rational
//! member singular at a chosen point, and checks over F_101 that its dual is
//! again a 16-nodal quartic with the polar maps mutually inverse.

use std::time::Instant;

use quartics::duality::{self, Hypersurface};
use quartics::exact::PrimeField;

fn main() -> quartics::Result<()> {
    let f11 = PrimeField::new(11)?;
    let family = duality::heisenberg_family(&f11)?;
    let start = Instant::now();
    let hits = duality::nodal_family_search(&family, 16)?;
    println!("F_11 scan: {} members with 16 nodes ({:.2?})", hits.len(), start.elapsed());

    let p = PrimeField::new(101)?;
    let (member, surface) = duality::rational_nodal_member(&f11, &hits, &p, 16)?;
    let params: Vec<String> = member.params.iter().map(|x| x.to_string()).collect();
    println!("member singular at {:?}: t = {params:?}", member.node);
    println!("  reduces to {:?} mod 11 and {:?} mod 101", member.scan_params, member.params_mod_p);

    let start = Instant::now();
    let fit = duality::dual_interpolate(&surface, 4, 400, 42)?;
    println!("dual degree {} from {} images ({:.2?})", fit.degree, fit.distinct_images, start.elapsed());
    let stats = duality::biduality_stats(&surface, &fit.dual, 50, 42)?;
    println!("biduality: {}/{} samples return to their start", stats.agreed, stats.tested);
    let dual_nodes = duality::singular_points(&Hypersurface::new(fit.dual.clone())?)?;
    println!("dual form: {}", fit.dual);
    println!("singular points of the dual: {}", dual_nodes.len());
    Ok(())
}
