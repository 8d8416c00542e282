//! Theta characteristics as quadratic forms on F_2^6 and the 288 Aronhold
//! sets among the 28 odd ones.

use quartics::theta;
use quartics::weyl::{self, LineLabel};

fn main() -> quartics::Result<()> {
    let q0 = theta::parity_form()?;
    println!("parity form has Arf invariant {}", q0.arf());
    let (odd, even) = theta::theta_chars()?;
    println!("{} odd and {} even theta characteristics", odd.len(), even.len());
    for (i, j) in weyl::pair_labels().take(4) {
        println!("l_{i}{j} -> {}", theta::line_theta(LineLabel::L(i, j)));
    }
    let sets = theta::aronhold_enumerate();
    println!("Aronhold sets: {}", sets.len());
    if let Some(first) = sets.first() {
        let v: Vec<String> = first.iter().map(|x| x.to_string()).collect();
        println!("first: {}", v.join(" "));
    }
    Ok(())
}
